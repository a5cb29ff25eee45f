//! The one-variable Weyl algebra: operators `sum_k u_k(x) d^k` with
//! composition as the product.

use std::collections::BTreeMap;
use std::fmt;

use num::Zero;

use crate::combinatorics::binomial;
use crate::poly::{fmt_poly_term, parse_poly_term, Poly};
use crate::rational::Rat;
use crate::{Error, Result};

/// Differential operator: sparse map order -> polynomial coefficient,
/// with no order mapping to the zero polynomial.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DiffOp {
    terms: BTreeMap<usize, Poly>,
}

impl DiffOp {
    pub fn zero() -> Self {
        DiffOp::default()
    }

    /// `u(x) d^order`.
    pub fn from_term(order: usize, u: Poly) -> Self {
        let mut x = DiffOp::zero();
        x.add_term(order, u);
        x
    }

    /// `d^order`.
    pub fn d(order: usize) -> Self {
        DiffOp::from_term(order, Poly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_order(&self) -> Option<usize> {
        self.terms.keys().next().copied()
    }

    pub fn max_order(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, order: usize) -> Poly {
        self.terms.get(&order).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Poly)> {
        self.terms.iter().map(|(&k, u)| (k, u))
    }

    pub fn add_term(&mut self, order: usize, u: Poly) {
        if u.is_zero() {
            return;
        }
        let entry = self.terms.entry(order).or_insert_with(Poly::zero);
        *entry = &*entry + &u;
        if entry.is_zero() {
            self.terms.remove(&order);
        }
    }

    pub fn add(&self, other: &DiffOp) -> DiffOp {
        let mut out = self.clone();
        for (&k, u) in &other.terms {
            out.add_term(k, u.clone());
        }
        out
    }

    pub fn sub(&self, other: &DiffOp) -> DiffOp {
        let mut out = self.clone();
        for (&k, u) in &other.terms {
            out.add_term(k, -u);
        }
        out
    }

    pub fn neg(&self) -> DiffOp {
        let mut out = DiffOp::zero();
        for (&k, u) in &self.terms {
            out.terms.insert(k, -u);
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> DiffOp {
        if c.is_zero() {
            return DiffOp::zero();
        }
        let mut out = DiffOp::zero();
        for (&k, u) in &self.terms {
            out.terms.insert(k, u.scale(c));
        }
        out
    }

    /// Operator composition:
    /// `u d^p . v d^l = sum_{s=0}^p C(p,s) u d^s(v) d^(p+l-s)`.
    pub fn compose(&self, other: &DiffOp) -> DiffOp {
        let mut out = DiffOp::zero();
        for (&p, u) in &self.terms {
            for (&l, v) in &other.terms {
                let mut dv = v.clone();
                for s in 0..=p {
                    if s > 0 {
                        dv = dv.derive(1);
                    }
                    if dv.is_zero() {
                        break;
                    }
                    let c = Rat::from_integer(binomial(p, s));
                    out.add_term(p + l - s, (u * &dv).scale(&c));
                }
            }
        }
        out
    }

    /// The single-order component `u_k d^k` (possibly zero).
    pub fn homogeneous_part(&self, k: usize) -> DiffOp {
        match self.terms.get(&k) {
            Some(u) => DiffOp::from_term(k, u.clone()),
            None => DiffOp::zero(),
        }
    }

    /// Canonical text form, orders descending, polynomial monomials
    /// flattened: `(3/2)*x^2 d^3 + 1 d^0`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (&k, u) in self.terms.iter().rev() {
            for (d, c) in u.terms().collect::<Vec<_>>().into_iter().rev() {
                parts.push(format!("{} d^{}", fmt_poly_term(d, c), k));
            }
        }
        parts.join(" + ")
    }

    pub fn parse(s: &str) -> Result<DiffOp> {
        let s = s.trim();
        if s == "0" {
            return Ok(DiffOp::zero());
        }
        let mut out = DiffOp::zero();
        for part in s.split(" + ") {
            let (head, order) = part
                .rsplit_once(" d^")
                .ok_or_else(|| Error::Parse(format!("operator term `{part}` lacks ` d^k`")))?;
            let order: usize = order
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad order `{order}`")))?;
            let (d, c) = parse_poly_term(head)?;
            out.add_term(order, Poly::monomial(d, c));
        }
        Ok(out)
    }

    /// JSON form `{"terms":[{"order":k,"poly":[[d,"c"],..]},..]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(&k, u)| serde_json::json!({ "order": k, "poly": u.to_json() }))
            .collect();
        serde_json::json!({ "terms": terms })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<DiffOp> {
        let terms = v
            .get("terms")
            .and_then(|t| t.as_array())
            .ok_or_else(|| Error::Parse("operator JSON needs a `terms` array".into()))?;
        let mut out = DiffOp::zero();
        for t in terms {
            let order = t
                .get("order")
                .and_then(|o| o.as_u64())
                .ok_or_else(|| Error::Parse("term needs an integer `order`".into()))?
                as usize;
            let poly = Poly::from_json(
                t.get("poly")
                    .ok_or_else(|| Error::Parse("term needs a `poly` array".into()))?,
            )?;
            out.add_term(order, poly);
        }
        Ok(out)
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
