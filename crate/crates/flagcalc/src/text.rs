//! Canonical text form of coefficients and classes, and the parser for class
//! expressions such as `-e[1,0]*O[1] - O[2] + (1-e[1,1])*O[2,1]`.
//!
//! Characters `e^λ` print as `e[m_1,…,m_n]` with `m` in simple-root
//! coordinates, or `ef[…]` in fundamental coordinates when `λ` is not in the
//! root lattice. Cohomology coefficients are polynomials in the fundamental
//! weights `w1, …, wn` with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use flagcalc_core::charring::Exponents;
use flagcalc_core::{
    CohClass, KClass, LaurentPolynomial, RootSystem, SymPolynomial, Weight, WeylElement, Word, YPolynomial, MAX_RANK,
};
use num_rational::Rational64;

/// The four kinds of basis symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisSymbol {
    /// Schubert structure sheaves `[O_ω]`.
    O,
    /// Ideal sheaves `I_ω`.
    I,
    /// Fixed-point classes `ι_ω`.
    FP,
    /// Cohomology Schubert classes `[X_ω]`.
    X,
}

impl BasisSymbol {
    pub fn as_str(self) -> &'static str {
        match self {
            BasisSymbol::O => "O",
            BasisSymbol::I => "I",
            BasisSymbol::FP => "FP",
            BasisSymbol::X => "X",
        }
    }
}

impl fmt::Display for BasisSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `O[1,2]`, `O[]` for the identity.
pub fn basis_label(symbol: BasisSymbol, w: &WeylElement) -> String {
    let letters: Vec<String> = w.word().letters().iter().map(|l| l.to_string()).collect();
    format!("{symbol}[{}]", letters.join(","))
}

/// `id`, `s1`, `s1s2`, … naming the fixed point `e_ω`.
pub fn fixed_point_label(w: &WeylElement) -> String {
    if w.is_identity() {
        return "id".into();
    }
    w.word().letters().iter().map(|l| format!("s{l}")).collect()
}

fn join_ints(v: &[i32]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

/// `e[…]` (simple-root coordinates) or `ef[…]`; empty for the zero weight.
pub fn weight_text(rs: &RootSystem, lambda: &Weight) -> String {
    if lambda.is_zero() {
        return String::new();
    }
    match rs.to_simple_coords(lambda) {
        Some(m) => format!("e[{}]", join_ints(m.coords(rs.rank()))),
        None => format!("ef[{}]", join_ints(lambda.coords(rs.rank()))),
    }
}

/// Monomials `(c, y-degree, weight)` of a Laurent polynomial in print order:
/// the constant character first, then by weight, then by `y`-degree.
fn laurent_items(p: &LaurentPolynomial) -> Vec<(i64, usize, Weight)> {
    let mut items: Vec<(i64, usize, Weight)> = Vec::new();
    for (w, c) in p.terms() {
        for (k, &a) in c.coeffs().iter().enumerate() {
            if a != 0 {
                items.push((a, k, *w));
            }
        }
    }
    items.sort_by_key(|&(_, k, w)| (!w.is_zero(), w, k));
    items
}

fn signed_join(terms: &[(bool, String)], sep_plus: &str, sep_minus: &str) -> String {
    let mut out = String::new();
    for (k, (negative, body)) in terms.iter().enumerate() {
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(sep_minus),
            (_, false) => out.push_str(sep_plus),
        }
        out.push_str(body);
    }
    out
}

fn product_text(magnitude: String, factors: Vec<String>) -> String {
    let factors: Vec<String> = factors.into_iter().filter(|f| !f.is_empty()).collect();
    if factors.is_empty() {
        magnitude
    } else if magnitude == "1" {
        factors.join("*")
    } else {
        format!("{magnitude}*{}", factors.join("*"))
    }
}

fn y_text(k: usize) -> String {
    match k {
        0 => String::new(),
        1 => "y".into(),
        _ => format!("y^{k}"),
    }
}

fn laurent_terms(rs: &RootSystem, p: &LaurentPolynomial) -> Vec<(bool, String)> {
    laurent_items(p)
        .into_iter()
        .map(|(c, k, w)| (c < 0, product_text(c.unsigned_abs().to_string(), vec![y_text(k), weight_text(rs, &w)])))
        .collect()
}

/// Canonical text of an element of `R(T)[y]`, e.g. `1-e[1,1]`; `0` for zero.
pub fn laurent_text(rs: &RootSystem, p: &LaurentPolynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    signed_join(&laurent_terms(rs, p), "+", "-")
}

fn rational_text(c: Rational64) -> String {
    let c = if c < Rational64::from_integer(0) { -c } else { c };
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn sym_terms(rs: &RootSystem, f: &SymPolynomial) -> Vec<(bool, String)> {
    f.terms()
        .map(|(e, c)| {
            let vars = (0..rs.rank())
                .filter(|&j| e[j] > 0)
                .map(|j| if e[j] == 1 { format!("w{}", j + 1) } else { format!("w{}^{}", j + 1, e[j]) })
                .collect();
            (*c < Rational64::from_integer(0), product_text(rational_text(*c), vars))
        })
        .collect()
}

/// Canonical text of an element of `S`, e.g. `-w1+2*w2`; `0` for zero.
pub fn sym_text(rs: &RootSystem, f: &SymPolynomial) -> String {
    if f.is_zero() {
        return "0".into();
    }
    signed_join(&sym_terms(rs, f), "+", "-")
}

fn class_text(terms: Vec<(Vec<(bool, String)>, String)>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (coeff, label) in terms {
        match coeff.as_slice() {
            [(negative, body)] => {
                let text = if body == "1" { label } else { format!("{body}*{label}") };
                parts.push((*negative, text));
            }
            _ => parts.push((false, format!("({})*{label}", signed_join(&coeff, "+", "-")))),
        }
    }
    signed_join(&parts, " + ", " - ")
}

/// Canonical text of a K-class over the given basis symbol.
pub fn kclass_text(rs: &RootSystem, symbol: BasisSymbol, u: &KClass) -> String {
    class_text(u.terms().map(|(w, c)| (laurent_terms(rs, c), basis_label(symbol, w))).collect())
}

/// Canonical text of a cohomology class.
pub fn cohclass_text(rs: &RootSystem, c: &CohClass) -> String {
    class_text(c.terms().map(|(w, f)| (sym_terms(rs, f), basis_label(BasisSymbol::X, w))).collect())
}

/// Parse failure, with the byte offset of the offending input.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{message} at position {position}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    /// The input with a caret under the offending position.
    pub fn caret(&self, input: &str) -> String {
        let column = input[..self.position.min(input.len())].chars().count();
        format!("{input}\n{}^", " ".repeat(column))
    }
}

type Key = (Weight, usize, Exponents);

/// Polynomial over `Q` in `y`, characters and the cohomology variables; the
/// common superset of both coefficient rings while parsing.
#[derive(Clone, Debug, Default, PartialEq)]
struct Mixed(BTreeMap<Key, Rational64>);

impl Mixed {
    fn constant(c: Rational64) -> Self {
        Mixed::monomial((Weight::ZERO, 0, [0; MAX_RANK]), c)
    }

    fn monomial(key: Key, c: Rational64) -> Self {
        let mut m = Mixed::default();
        m.add(key, c);
        m
    }

    fn add(&mut self, key: Key, c: Rational64) {
        let entry = self.0.entry(key).or_insert_with(|| Rational64::from_integer(0));
        *entry += c;
        if *entry == Rational64::from_integer(0) {
            self.0.remove(&key);
        }
    }

    fn add_all(&mut self, other: &Mixed, sign: i64) {
        for (k, c) in &other.0 {
            self.add(*k, *c * sign);
        }
    }

    fn mul(&self, other: &Mixed) -> Mixed {
        let mut out = Mixed::default();
        for ((w1, k1, e1), c1) in &self.0 {
            for ((w2, k2, e2), c2) in &other.0 {
                let mut e = *e1;
                for (a, b) in e.iter_mut().zip(e2) {
                    *a += b;
                }
                out.add((*w1 + *w2, k1 + k2, e), c1 * c2);
            }
        }
        out
    }

    fn to_laurent(&self) -> Result<LaurentPolynomial, &'static str> {
        let mut out = LaurentPolynomial::zero();
        for ((w, k, e), c) in &self.0 {
            if e.iter().any(|&x| x != 0) {
                return Err("cohomology variables are not allowed in K-theory coefficients");
            }
            if !c.is_integer() {
                return Err("K-theory coefficients must be integers");
            }
            out.add_term(*w, &YPolynomial::term(*c.numer(), *k));
        }
        Ok(out)
    }

    fn to_sym(&self) -> Result<SymPolynomial, &'static str> {
        let mut out = SymPolynomial::zero();
        for ((w, k, e), c) in &self.0 {
            if !w.is_zero() || *k != 0 {
                return Err("characters and y are not allowed in cohomology coefficients");
            }
            out.add_term(*e, *c);
        }
        Ok(out)
    }
}

/// A parsed linear combination of basis symbols, resolved against a root
/// system.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassExpression {
    pub basis: BasisSymbol,
    terms: Vec<(WeylElement, Mixed)>,
}

impl ClassExpression {
    pub fn parse(rs: &RootSystem, input: &str) -> Result<Self, ParseError> {
        let mut p = Parser { rs, input, pos: 0 };
        let expr = p.expression()?;
        p.skip_ws();
        if p.pos < input.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(expr)
    }

    /// The class as a combination of `O`, `I` or `FP` symbols.
    pub fn to_kclass(&self) -> Result<KClass, ParseError> {
        let mut out = KClass::zero();
        for (w, c) in &self.terms {
            let c = c.to_laurent().map_err(|m| ParseError { position: 0, message: m.into() })?;
            out.add_term(w.clone(), &c);
        }
        Ok(out)
    }

    pub fn to_cohclass(&self) -> Result<CohClass, ParseError> {
        let mut out = CohClass::zero();
        for (w, c) in &self.terms {
            let c = c.to_sym().map_err(|m| ParseError { position: 0, message: m.into() })?;
            out.add_term(w.clone(), &c);
        }
        Ok(out)
    }
}

/// Parses a coefficient such as `1-e[1,1]` or `(1+y*e[-1])`.
pub fn parse_laurent(rs: &RootSystem, input: &str) -> Result<LaurentPolynomial, ParseError> {
    let mut p = Parser { rs, input, pos: 0 };
    let m = p.polynomial()?;
    p.skip_ws();
    if p.pos < input.len() {
        return Err(p.error("unexpected trailing input"));
    }
    m.to_laurent().map_err(|msg| ParseError { position: 0, message: msg.into() })
}

/// Parses a cohomology coefficient such as `-w1+1/2*w2^2`.
pub fn parse_sym(rs: &RootSystem, input: &str) -> Result<SymPolynomial, ParseError> {
    let mut p = Parser { rs, input, pos: 0 };
    let m = p.polynomial()?;
    p.skip_ws();
    if p.pos < input.len() {
        return Err(p.error("unexpected trailing input"));
    }
    m.to_sym().map_err(|msg| ParseError { position: 0, message: msg.into() })
}

enum Factor {
    Coefficient(Mixed),
    Basis(BasisSymbol, WeylElement),
}

struct Parser<'a> {
    rs: &'a RootSystem,
    input: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { position: self.pos, message: message.into() }
    }

    fn rest(&self) -> &str {
        &self.input[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.input.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<(), ParseError> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{s}'")))
        }
    }

    fn sign(&mut self) -> Option<i64> {
        if self.eat("+") {
            Some(1)
        } else if self.eat("-") {
            Some(-1)
        } else {
            None
        }
    }

    fn unsigned(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let digits: String = self.rest().chars().take_while(|c| c.is_ascii_digit()).collect();
        if digits.is_empty() {
            return Err(self.error("expected a number"));
        }
        let value = digits.parse().map_err(|_| self.error("number out of range"))?;
        self.pos += digits.len();
        Ok(value)
    }

    fn signed(&mut self) -> Result<i64, ParseError> {
        let s = self.sign().unwrap_or(1);
        Ok(s * self.unsigned()?)
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        if self.eat("^") {
            self.unsigned()
        } else {
            Ok(1)
        }
    }

    fn int_list(&mut self) -> Result<Vec<i32>, ParseError> {
        let start = self.pos;
        let mut out = Vec::new();
        if self.peek() == Some(']') {
            self.pos += 1;
        } else {
            loop {
                let v = self.signed()?;
                out.push(i32::try_from(v).map_err(|_| self.error("coordinate out of range"))?);
                if self.eat("]") {
                    break;
                }
                self.expect(",")?;
            }
        }
        if out.len() != self.rs.rank() {
            return Err(ParseError {
                position: start,
                message: format!("expected {} coordinates, found {}", self.rs.rank(), out.len()),
            });
        }
        Ok(out)
    }

    fn word(&mut self) -> Result<WeylElement, ParseError> {
        let start = self.pos;
        let end = self.rest().find(']').ok_or_else(|| self.error("unterminated word"))?;
        let text = &self.input[self.pos..self.pos + end];
        let word: Word = text.trim().parse().map_err(|_| self.error("malformed word"))?;
        let w = self.rs.from_word(&word).map_err(|e| ParseError { position: start, message: e.to_string() })?;
        if w.length() != word.len() {
            return Err(ParseError { position: start, message: format!("word {word} is not reduced") });
        }
        self.pos += end + 1;
        Ok(w)
    }

    fn factor(&mut self) -> Result<Factor, ParseError> {
        self.skip_ws();
        let rest = self.rest();
        let symbols =
            [("FP[", BasisSymbol::FP), ("O[", BasisSymbol::O), ("I[", BasisSymbol::I), ("X[", BasisSymbol::X)];
        for (prefix, symbol) in symbols {
            if rest.starts_with(prefix) {
                self.pos += prefix.len();
                return Ok(Factor::Basis(symbol, self.word()?));
            }
        }
        let unit = [0u16; MAX_RANK];
        if rest.starts_with("ef[") {
            self.pos += 3;
            let w = Weight::new(&self.int_list()?);
            return Ok(Factor::Coefficient(Mixed::monomial((w, 0, unit), Rational64::from_integer(1))));
        }
        if rest.starts_with("e[") {
            self.pos += 2;
            let simple = Weight::new(&self.int_list()?);
            let w = self.rs.from_simple_coords(&simple);
            return Ok(Factor::Coefficient(Mixed::monomial((w, 0, unit), Rational64::from_integer(1))));
        }
        if rest.starts_with('y') {
            self.pos += 1;
            let k = self.exponent()? as usize;
            return Ok(Factor::Coefficient(Mixed::monomial((Weight::ZERO, k, unit), Rational64::from_integer(1))));
        }
        if rest.starts_with('w') {
            self.pos += 1;
            let start = self.pos;
            let j = self.unsigned()? as usize;
            if j == 0 || j > self.rs.rank() {
                return Err(ParseError {
                    position: start,
                    message: format!("no variable w{j} in rank {}", self.rs.rank()),
                });
            }
            let k = self.exponent()?;
            let mut e = unit;
            e[j - 1] = u16::try_from(k).map_err(|_| self.error("exponent out of range"))?;
            return Ok(Factor::Coefficient(Mixed::monomial((Weight::ZERO, 0, e), Rational64::from_integer(1))));
        }
        if rest.starts_with('(') {
            self.pos += 1;
            let inner = self.polynomial()?;
            self.expect(")")?;
            return Ok(Factor::Coefficient(inner));
        }
        if rest.starts_with(|c: char| c.is_ascii_digit()) {
            let n = self.unsigned()?;
            let value = if self.eat("/") {
                let d = self.unsigned()?;
                if d == 0 {
                    return Err(self.error("zero denominator"));
                }
                Rational64::new(n, d)
            } else {
                Rational64::from_integer(n)
            };
            return Ok(Factor::Coefficient(Mixed::constant(value)));
        }
        Err(self.error("expected a coefficient or a basis symbol"))
    }

    /// `mono := factor ('*' factor)*`, returning the basis symbol if the
    /// last factor is one.
    fn product(&mut self, allow_basis: bool) -> Result<(Mixed, Option<(BasisSymbol, WeylElement)>), ParseError> {
        let mut coeff = Mixed::constant(Rational64::from_integer(1));
        loop {
            let start = self.pos;
            match self.factor()? {
                Factor::Coefficient(m) => coeff = coeff.mul(&m),
                Factor::Basis(symbol, w) => {
                    if !allow_basis {
                        return Err(ParseError {
                            position: start,
                            message: "basis symbol inside a coefficient".into(),
                        });
                    }
                    return Ok((coeff, Some((symbol, w))));
                }
            }
            if !self.eat("*") {
                return Ok((coeff, None));
            }
        }
    }

    fn polynomial(&mut self) -> Result<Mixed, ParseError> {
        let mut out = Mixed::default();
        let mut sign = self.sign().unwrap_or(1);
        loop {
            let (m, _) = self.product(false)?;
            out.add_all(&m, sign);
            match self.sign() {
                Some(s) => sign = s,
                None => return Ok(out),
            }
        }
    }

    fn expression(&mut self) -> Result<ClassExpression, ParseError> {
        let mut basis = None;
        let mut terms: Vec<(WeylElement, Mixed)> = Vec::new();
        let mut sign = self.sign().unwrap_or(1);
        loop {
            let start = self.pos;
            let (coeff, symbol) = self.product(true)?;
            let (symbol, w) = symbol.ok_or_else(|| self.error("expected a basis symbol such as O[1]"))?;
            if *basis.get_or_insert(symbol) != symbol {
                return Err(ParseError { position: start, message: "mixed basis symbols".into() });
            }
            let mut c = Mixed::default();
            c.add_all(&coeff, sign);
            terms.push((w, c));
            match self.sign() {
                Some(s) => sign = s,
                None => break,
            }
        }
        Ok(ClassExpression { basis: basis.expect("at least one term"), terms })
    }
}
