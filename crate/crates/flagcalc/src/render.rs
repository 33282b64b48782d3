//! ASCII, CSV and JSON renderings of action matrices.
//!
//! All three carry the same data: a header row of basis labels in
//! `all_elements` order, and entry `(r, c)` the coefficient of the row class
//! in the image of the column class.

use flagcalc_core::combination::Coefficient;
use flagcalc_core::{ActionMatrix, LaurentPolynomial, RootSystem, SymPolynomial};
use serde_json::{json, Value};

use crate::text::{basis_label, laurent_text, sym_text, BasisSymbol};

/// A matrix entry that can be printed and serialized.
pub trait Cell: Coefficient {
    fn text(&self, rs: &RootSystem) -> String;
    fn json(&self, rs: &RootSystem) -> Value;
}

impl Cell for LaurentPolynomial {
    fn text(&self, rs: &RootSystem) -> String {
        laurent_text(rs, self)
    }

    /// `[{"w": [simple coords], "c": [y-coefficients]}, …]`, with `"wf"`
    /// in fundamental coordinates for weights outside the root lattice.
    fn json(&self, rs: &RootSystem) -> Value {
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by_key(|(w, _)| (!w.is_zero(), **w));
        let monomials = terms
            .into_iter()
            .map(|(w, c)| match rs.to_simple_coords(w) {
                Some(m) => json!({ "w": m.coords(rs.rank()), "c": c.coeffs() }),
                None => json!({ "wf": w.coords(rs.rank()), "c": c.coeffs() }),
            })
            .collect();
        Value::Array(monomials)
    }
}

impl Cell for SymPolynomial {
    fn text(&self, rs: &RootSystem) -> String {
        sym_text(rs, self)
    }

    /// `[{"x": [exponents of w1..wn], "c": "p/q"}, …]`.
    fn json(&self, rs: &RootSystem) -> Value {
        let monomials = self.terms().map(|(e, c)| json!({ "x": &e[..rs.rank()], "c": c.to_string() })).collect();
        Value::Array(monomials)
    }
}

/// Identifies a rendered matrix.
#[derive(Clone, Debug)]
pub struct MatrixHeader {
    pub gen: usize,
    pub basis: &'static str,
    pub symbol: BasisSymbol,
}

fn grid<C: Cell>(rs: &RootSystem, header: &MatrixHeader, m: &ActionMatrix<C>) -> Vec<Vec<String>> {
    let labels: Vec<String> = m.order().iter().map(|w| basis_label(header.symbol, w)).collect();
    let mut rows = Vec::with_capacity(m.size() + 1);
    rows.push(std::iter::once(String::new()).chain(labels.iter().cloned()).collect());
    for (r, label) in labels.iter().enumerate() {
        let mut row = vec![label.clone()];
        row.extend((0..m.size()).map(|c| m.entry(r, c).text(rs)));
        rows.push(row);
    }
    rows
}

/// Aligned columns separated by two spaces.
pub fn ascii<C: Cell>(rs: &RootSystem, header: &MatrixHeader, m: &ActionMatrix<C>) -> String {
    let rows = grid(rs, header, m);
    let widths: Vec<usize> =
        (0..rows[0].len()).map(|c| rows.iter().map(|row| row[c].chars().count()).max().unwrap_or(0)).collect();
    let mut out = format!("s{} on {} basis of {}\n", header.gen, header.basis, rs.cartan_type());
    for row in rows {
        let line: Vec<String> = row.iter().zip(&widths).map(|(cell, w)| format!("{cell:<w$}")).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn csv<C: Cell>(rs: &RootSystem, header: &MatrixHeader, m: &ActionMatrix<C>) -> Result<String, csv::Error> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in grid(rs, header, m) {
        writer.write_record(&row)?;
    }
    let bytes = writer.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("cells are UTF-8"))
}

pub fn json_value<C: Cell>(rs: &RootSystem, header: &MatrixHeader, m: &ActionMatrix<C>) -> Value {
    let order: Vec<String> = m.order().iter().map(|w| w.word().to_string()).collect();
    let entries: Vec<Value> =
        m.rows().iter().map(|row| Value::Array(row.iter().map(|c| c.json(rs)).collect())).collect();
    json!({
        "type": rs.cartan_type().letter().to_string(),
        "rank": rs.rank(),
        "gen": header.gen,
        "basis": header.basis,
        "order": order,
        "entries": entries,
    })
}

pub fn json<C: Cell>(rs: &RootSystem, header: &MatrixHeader, m: &ActionMatrix<C>) -> String {
    let mut s = serde_json::to_string_pretty(&json_value(rs, header, m)).expect("values serialize");
    s.push('\n');
    s
}
