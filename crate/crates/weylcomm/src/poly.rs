//! Sparse univariate polynomials over exact rationals, and exact
//! Wronskian determinants.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::Zero;

use crate::rational::{fmt_coeff, parse_coeff, rat_i64, Rat};
use crate::{Error, Result};

/// `u(x)` in `K[x]`: a sparse map degree -> coefficient with no stored zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<usize, Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(rat_i64(1))
    }

    pub fn constant(c: Rat) -> Self {
        Poly::monomial(0, c)
    }

    /// `c * x^d`.
    pub fn monomial(d: usize, c: Rat) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(d, c);
        }
        p
    }

    pub fn x() -> Self {
        Poly::monomial(1, rat_i64(1))
    }

    /// `x^d`.
    pub fn x_pow(d: usize) -> Self {
        Poly::monomial(d, rat_i64(1))
    }

    /// Polynomial from integer coefficients, index = degree.
    pub fn from_coeffs(cs: &[i64]) -> Self {
        let mut p = Poly::zero();
        for (d, &c) in cs.iter().enumerate() {
            p.add_term(d, rat_i64(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, d: usize) -> Rat {
        self.terms.get(&d).cloned().unwrap_or_else(|| rat_i64(0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rat)> {
        self.terms.iter().map(|(&d, c)| (d, c))
    }

    pub fn add_term(&mut self, d: usize, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(d).or_insert_with(|| rat_i64(0));
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&d);
        }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut out = Poly::zero();
        for (&d, a) in &self.terms {
            out.terms.insert(d, a * c);
        }
        out
    }

    pub fn scale_int(&self, c: &BigInt) -> Poly {
        self.scale(&Rat::from_integer(c.clone()))
    }

    /// `d^r(u)` under `d(x^n) = n x^(n-1)`, extended linearly; `r = 0` is `u`.
    pub fn derive(&self, r: usize) -> Poly {
        let mut cur = self.clone();
        for _ in 0..r {
            let mut next = Poly::zero();
            for (&d, c) in &cur.terms {
                if d > 0 {
                    next.add_term(d - 1, c * rat_i64(d as i64));
                }
            }
            cur = next;
        }
        cur
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        // Horner over the sparse support.
        let mut acc = rat_i64(0);
        let mut prev_deg = None;
        for (&d, c) in self.terms.iter().rev() {
            if let Some(pd) = prev_deg {
                let gap: usize = pd - d;
                for _ in 0..gap {
                    acc *= x;
                }
            }
            acc += c;
            prev_deg = Some(d);
        }
        if let Some(d) = prev_deg {
            for _ in 0..d {
                acc *= x;
            }
        }
        acc
    }

    /// Canonical text form, terms by descending degree, signs kept inside
    /// the coefficients, e.g. `(3/2)*x^2 + -1*x + 4`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&d, c)| fmt_poly_term(d, c))
            .collect();
        parts.join(" + ")
    }

    pub fn parse(s: &str) -> Result<Poly> {
        let s = s.trim();
        if s == "0" {
            return Ok(Poly::zero());
        }
        let mut p = Poly::zero();
        for term in s.split(" + ") {
            let (d, c) = parse_poly_term(term)?;
            p.add_term(d, c);
        }
        Ok(p)
    }

    /// JSON fragment `[[degree,"num/den"],...]`, ascending degree.
    pub fn to_json(&self) -> serde_json::Value {
        let arr: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(&d, c)| serde_json::json!([d, crate::rational::fmt_rat(c)]))
            .collect();
        serde_json::Value::Array(arr)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Poly> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("polynomial JSON must be an array".into()))?;
        let mut p = Poly::zero();
        for pair in arr {
            let pair = pair
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| Error::Parse("polynomial term must be [degree, coeff]".into()))?;
            let d = pair[0]
                .as_u64()
                .ok_or_else(|| Error::Parse("degree must be a non-negative integer".into()))?
                as usize;
            let c = crate::rational::parse_rat(
                pair[1]
                    .as_str()
                    .ok_or_else(|| Error::Parse("coefficient must be a string".into()))?,
            )?;
            p.add_term(d, c);
        }
        Ok(p)
    }
}

/// One printed monomial: `c`, `c*x` or `c*x^d`.
pub(crate) fn fmt_poly_term(d: usize, c: &Rat) -> String {
    match d {
        0 => fmt_coeff(c),
        1 => format!("{}*x", fmt_coeff(c)),
        _ => format!("{}*x^{}", fmt_coeff(c), d),
    }
}

pub(crate) fn parse_poly_term(term: &str) -> Result<(usize, Rat)> {
    let term = term.trim();
    match term.split_once("*x") {
        None => {
            // allow a bare `x^d` with implicit coefficient 1
            if let Some(rest) = term.strip_prefix('x') {
                let d = parse_exponent(rest)?;
                Ok((d, rat_i64(1)))
            } else {
                Ok((0, parse_coeff(term)?))
            }
        }
        Some((c, rest)) => {
            let d = parse_exponent(rest)?;
            Ok((d, parse_coeff(c)?))
        }
    }
}

fn parse_exponent(rest: &str) -> Result<usize> {
    let rest = rest.trim();
    if rest.is_empty() {
        return Ok(1);
    }
    let digits = rest
        .strip_prefix('^')
        .ok_or_else(|| Error::Parse(format!("expected `^` in `{rest}`")))?;
    digits
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad exponent `{digits}`")))
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (&d, c) in &rhs.terms {
            out.add_term(d, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (&d, c) in &rhs.terms {
            out.add_term(d, -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let mut out = Poly::zero();
        for (&d, c) in &self.terms {
            out.terms.insert(d, -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (&d1, c1) in &self.terms {
            for (&d2, c2) in &rhs.terms {
                out.add_term(d1 + d2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Wronskian of `u_1..u_m`: determinant of the matrix with entry
/// `(j,i) = d^(j-1)(u_i)`, expanded exactly.
pub fn wronskian(us: &[Poly]) -> Poly {
    assert!(!us.is_empty(), "wronskian needs at least one polynomial");
    let m = us.len();
    let rows: Vec<Vec<Poly>> = (0..m)
        .map(|j| us.iter().map(|u| u.derive(j)).collect())
        .collect();
    det_cofactor(&rows)
}

/// Determinant by cofactor expansion along the first row.
pub fn det_cofactor(rows: &[Vec<Poly>]) -> Poly {
    let n = rows.len();
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut acc = Poly::zero();
    for (col, pivot) in rows[0].iter().enumerate() {
        if pivot.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = rows[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != col)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = pivot * &det_cofactor(&minor);
        if col % 2 == 0 {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
    }
    acc
}
