//! Grassmann super-calculus on odd generators `d^i(a)`.
//!
//! Monomials `a^alpha` are indexed by strictly increasing integer
//! sequences; products anticommute, so a shared index kills a product and
//! interleaving two monomials picks up the parity of the merge. On top of
//! the Grassmann algebra sits the algebra of super-differential operators
//! `a^alpha d^i` with the usual composition rule, which is everything
//! needed to expand the powers `(a d^p)^k` and read off the coefficient
//! functionals `nu_k`, `mu_k`, `gamma_k`.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::{One, Zero};

use crate::combinatorics::{binomial, delta_closed, delta_max_oracle};
use crate::{Error, Result};

/// Basis monomial `a^alpha`: a strictly increasing sequence of derivative
/// orders. The empty sequence is the unit.
///
/// Ordering is the one used for leaders: shorter sequences precede longer
/// ones, equal lengths compare lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SuperMonomial(Vec<usize>);

impl SuperMonomial {
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        if seq.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Range(format!(
                "monomial index {seq:?} is not strictly increasing"
            )));
        }
        Ok(SuperMonomial(seq))
    }

    /// Caller guarantees the sequence is strictly increasing.
    pub fn new_unchecked(seq: Vec<usize>) -> Self {
        debug_assert!(seq.windows(2).all(|w| w[0] < w[1]));
        SuperMonomial(seq)
    }

    pub fn unit() -> Self {
        SuperMonomial(Vec::new())
    }

    /// `a = a^(0)`.
    pub fn generator() -> Self {
        SuperMonomial(vec![0])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn components(&self) -> &[usize] {
        &self.0
    }

    /// Signed Grassmann product: `None` on a shared index, otherwise the
    /// merged monomial with the parity of the interleaving.
    pub fn mul(&self, other: &SuperMonomial) -> Option<(i32, SuperMonomial)> {
        let (a, b) = (&self.0, &other.0);
        let mut merged = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut crossings = 0usize;
        while i < a.len() && j < b.len() {
            if a[i] == b[j] {
                return None;
            }
            if a[i] < b[j] {
                merged.push(a[i]);
                i += 1;
            } else {
                // b[j] jumps over the remaining entries of a
                crossings += a.len() - i;
                merged.push(b[j]);
                j += 1;
            }
        }
        merged.extend_from_slice(&a[i..]);
        merged.extend_from_slice(&b[j..]);
        let sign = if crossings % 2 == 0 { 1 } else { -1 };
        Some((sign, SuperMonomial(merged)))
    }
}

impl Ord for SuperMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for SuperMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SuperMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "a({})",
            self.0.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

/// Integer combination of basis monomials; no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SuperElement {
    terms: BTreeMap<SuperMonomial, BigInt>,
}

impl SuperElement {
    pub fn zero() -> Self {
        SuperElement::default()
    }

    pub fn from_monomial(m: SuperMonomial, c: BigInt) -> Self {
        let mut e = SuperElement::zero();
        e.add_term(m, c);
        e
    }

    /// The odd generator `a` itself.
    pub fn generator() -> Self {
        SuperElement::from_monomial(SuperMonomial::generator(), BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &SuperMonomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: SuperMonomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    /// `r`-fold even derivation: `d` raises one index of each monomial;
    /// collisions with the successor index vanish.
    pub fn derive(&self, r: usize) -> SuperElement {
        let mut cur = self.clone();
        for _ in 0..r {
            let mut next = SuperElement::zero();
            for (m, c) in &cur.terms {
                let seq = m.components();
                for i in 0..seq.len() {
                    if i + 1 < seq.len() && seq[i] + 1 == seq[i + 1] {
                        continue;
                    }
                    let mut raised = seq.to_vec();
                    raised[i] += 1;
                    next.add_term(SuperMonomial::new_unchecked(raised), c.clone());
                }
            }
            cur = next;
        }
        cur
    }

    /// Grassmann product of elements.
    pub fn mul(&self, other: &SuperElement) -> SuperElement {
        let mut out = SuperElement::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((sign, m)) = m1.mul(m2) {
                    out.add_term(m, c1 * c2 * BigInt::from(sign));
                }
            }
        }
        out
    }

    /// All terms share (length, weight)?  Used by the grading tests.
    pub fn homogeneous_bidegree(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let bid = (first.len(), first.weight());
        for m in it {
            if (m.len(), m.weight()) != bid {
                return None;
            }
        }
        Some(bid)
    }

    /// All coefficients non-negative?
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c.sign() != num::bigint::Sign::Minus)
    }
}

impl fmt::Display for SuperElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("{c} {m}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Super-differential operator: integer combination of `a^alpha d^i`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SuperOp {
    terms: BTreeMap<(SuperMonomial, usize), BigInt>,
}

impl SuperOp {
    pub fn zero() -> Self {
        SuperOp::default()
    }

    /// The identity operator `1 * d^0`.
    pub fn identity() -> Self {
        SuperOp::from_term(SuperMonomial::unit(), 0, BigInt::one())
    }

    /// `a d^p`.
    pub fn a_dp(p: usize) -> Self {
        SuperOp::from_term(SuperMonomial::generator(), p, BigInt::one())
    }

    pub fn from_term(m: SuperMonomial, order: usize, c: BigInt) -> Self {
        let mut x = SuperOp::zero();
        x.add_term(m, order, c);
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &SuperMonomial, order: usize) -> BigInt {
        self.terms
            .get(&(m.clone(), order))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(SuperMonomial, usize), &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: SuperMonomial, order: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((m, order)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    /// Composition `X . Y` by the rule
    /// `u d^k . v d^l = sum_i C(k,i) u d^i(v) d^(k+l-i)`.
    pub fn compose(&self, other: &SuperOp) -> SuperOp {
        let mut out = SuperOp::zero();
        for ((alpha, k), cx) in &self.terms {
            // derivatives of each right-hand coefficient, reused across i
            for ((beta, l), cy) in &other.terms {
                let mut derived = SuperElement::from_monomial(beta.clone(), BigInt::one());
                for i in 0..=*k {
                    if i > 0 {
                        derived = derived.derive(1);
                    }
                    if derived.is_zero() {
                        break;
                    }
                    let binom = binomial(*k, i);
                    for (gamma, cg) in derived.terms() {
                        if let Some((sign, merged)) = alpha.mul(gamma) {
                            out.add_term(
                                merged,
                                k + l - i,
                                cx * cy * cg * &binom * BigInt::from(sign),
                            );
                        }
                    }
                }
            }
        }
        out
    }

    /// Action on an element: each `a^alpha d^i` contributes
    /// `a^alpha . d^i(u)`.
    pub fn apply(&self, u: &SuperElement) -> SuperElement {
        let mut out = SuperElement::zero();
        for ((alpha, i), c) in &self.terms {
            let du = u.derive(*i);
            let factor = SuperElement::from_monomial(alpha.clone(), c.clone());
            let contrib = factor.mul(&du);
            for (m, cc) in contrib.terms() {
                out.add_term(m.clone(), cc.clone());
            }
        }
        out
    }

    /// `(a d^p)^k`; `k = 0` gives the identity operator.
    pub fn power(p: usize, k: usize) -> SuperOp {
        let base = SuperOp::a_dp(p);
        let mut acc = SuperOp::identity();
        for _ in 0..k {
            acc = acc.compose(&base);
        }
        acc
    }

    /// Minimal differential order among the terms.
    pub fn min_order(&self) -> Option<usize> {
        self.terms.keys().map(|(_, i)| *i).min()
    }

    /// Among the terms of minimal differential order, the one with the
    /// greatest monomial, with its coefficient.
    pub fn leader(&self) -> Result<(BigInt, SuperMonomial, usize)> {
        let min = self.min_order().ok_or(Error::ZeroLeader)?;
        let (m, c) = self
            .terms
            .iter()
            .filter(|((_, i), _)| *i == min)
            .map(|((m, _), c)| (m, c))
            .max_by(|a, b| a.0.cmp(b.0))
            .expect("nonempty by construction");
        Ok((c.clone(), m.clone(), min))
    }

    /// Canonical text form, terms in monomial-lexicographic order,
    /// e.g. `3 a(0,1) d^5 + 3 a(0,2) d^4 + 1 a(0,3) d^3`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((m, i), c)| format!("{c} {m} d^{i}"))
            .collect();
        parts.join(" + ")
    }

    /// JSON form `{"terms":[{"alpha":[..],"order":i,"coeff":"c"},..]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|((m, i), c)| {
                serde_json::json!({
                    "alpha": m.components(),
                    "order": i,
                    "coeff": c.to_string(),
                })
            })
            .collect();
        serde_json::json!({ "terms": terms })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<SuperOp> {
        let terms = v
            .get("terms")
            .and_then(|t| t.as_array())
            .ok_or_else(|| Error::Parse("super operator JSON needs a `terms` array".into()))?;
        let mut out = SuperOp::zero();
        for t in terms {
            let alpha: Vec<usize> = t
                .get("alpha")
                .and_then(|a| a.as_array())
                .ok_or_else(|| Error::Parse("term needs an `alpha` array".into()))?
                .iter()
                .map(|x| {
                    x.as_u64()
                        .map(|v| v as usize)
                        .ok_or_else(|| Error::Parse("alpha entries must be integers".into()))
                })
                .collect::<Result<_>>()?;
            let order = t
                .get("order")
                .and_then(|o| o.as_u64())
                .ok_or_else(|| Error::Parse("term needs an integer `order`".into()))?
                as usize;
            let coeff: BigInt = t
                .get("coeff")
                .and_then(|c| c.as_str())
                .ok_or_else(|| Error::Parse("term needs a string `coeff`".into()))?
                .parse()
                .map_err(|_| Error::Parse("bad integer coefficient".into()))?;
            out.add_term(SuperMonomial::new(alpha)?, order, coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for SuperOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `nu_k`: the coefficient of `a^delta(k-1)` in `(a d^p)^(k-1) (a)`;
/// equals the leader coefficient of `(a d^p)^k`.
pub fn nu(p: usize, k: usize) -> Result<BigInt> {
    if k == 0 || k > 2 * p {
        return Err(Error::Range(format!("nu(p={p}, k={k}) needs 1 <= k <= 2p")));
    }
    if k == 1 {
        return Ok(BigInt::one());
    }
    let applied = SuperOp::power(p, k - 1).apply(&SuperElement::generator());
    Ok(applied.coeff(&delta_closed(p, k - 1)?))
}

/// `mu_k`: the coefficient of `a^delta(k-1)` in `a d^p (a^delta(k-2))`;
/// `mu_1 = 1`.
pub fn mu(p: usize, k: usize) -> Result<BigInt> {
    if k == 0 || k > 2 * p {
        return Err(Error::Range(format!("mu(p={p}, k={k}) needs 1 <= k <= 2p")));
    }
    if k == 1 {
        return Ok(BigInt::one());
    }
    let u = SuperElement::from_monomial(delta_closed(p, k - 2)?, BigInt::one());
    let applied = SuperOp::a_dp(p).apply(&u);
    Ok(applied.coeff(&delta_closed(p, k - 1)?))
}

/// `gamma_k = p * (coefficient of a^delta_1(k-1) in a d^(p-1) (a^delta(k-2)))`;
/// matches the closed form `p * C(p-1, floor((k-2)/2))`.
pub fn gamma(p: usize, k: usize) -> Result<BigInt> {
    if k < 2 || k > 2 * p - 1 {
        return Err(Error::Range(format!("gamma(p={p}, k={k}) needs 2 <= k <= 2p-1")));
    }
    let u = SuperElement::from_monomial(delta_closed(p, k - 2)?, BigInt::one());
    let applied = SuperOp::a_dp(p - 1).apply(&u);
    let target = delta_max_oracle(p, k - 1, 1)?;
    Ok(BigInt::from(p) * applied.coeff(&target))
}
