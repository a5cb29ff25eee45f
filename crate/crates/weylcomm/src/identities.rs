//! Identity verification: `s_(2p+1) = 0` on order-p operators, the
//! Wronskian formula, non-closure witnesses for `N < 2p`, the shuffle-sum
//! identities (left/right-commutativity, homotopical Lie), the free
//! relations tying lcom and rcom together, the degree-bounded minimality
//! rank check, and the generation identities from the simplicity proof.
//!
//! All claims are exact polynomial identities, so randomized evaluation is
//! decisive in one direction: a single nonzero evaluation refutes.

use itertools::Itertools;

use num::bigint::BigInt;
use num::{One, Zero};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::{binomial, factorial, sort_and_sign};
use crate::lambda::lambda_super;
use crate::par::par_map;
use crate::poly::{wronskian, Poly};
use crate::rational::{rat_i64, Rat};
use crate::standard::{s_eval_dp, DiffOpRing};
use crate::weyl::DiffOp;
use crate::{Error, Result};

/// `n`-ary alternating bracket over some carrier. Only the structure the
/// shuffle sums need: module operations plus the bracket itself.
pub trait SkewBracket: Sync {
    type Elem: Clone + PartialEq + Send + Sync;

    fn arity(&self) -> usize;
    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn eval(&self, args: &[Self::Elem]) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    /// Small integer multiple.
    fn scale_int(&self, a: &Self::Elem, k: i64) -> Self::Elem {
        let mut acc = self.zero();
        for _ in 0..k.unsigned_abs() {
            acc = self.add(&acc, a);
        }
        if k < 0 {
            self.neg(&acc)
        } else {
            acc
        }
    }
}

/// `psi = s_2p` on differential operators.
pub struct S2pBracket {
    p: usize,
}

impl S2pBracket {
    pub fn new(p: usize) -> Self {
        assert!(p >= 1);
        S2pBracket { p }
    }
}

impl SkewBracket for S2pBracket {
    type Elem = DiffOp;

    fn arity(&self) -> usize {
        2 * self.p
    }
    fn zero(&self) -> DiffOp {
        DiffOp::zero()
    }
    fn add(&self, a: &DiffOp, b: &DiffOp) -> DiffOp {
        a.add(b)
    }
    fn neg(&self, a: &DiffOp) -> DiffOp {
        a.neg()
    }
    fn eval(&self, args: &[DiffOp]) -> DiffOp {
        assert_eq!(args.len(), self.arity());
        s_eval_dp(&DiffOpRing, args)
    }
}

/// Random multilinear alternating bracket on `Q^d`, given by one structure
/// vector per increasing index tuple and extended by minors.
pub struct RandomBracket {
    n: usize,
    d: usize,
    structure: Vec<(Vec<usize>, Vec<Rat>)>,
}

impl RandomBracket {
    pub fn random<R: Rng>(n: usize, d: usize, rng: &mut R) -> Self {
        let structure = (0..d)
            .combinations(n)
            .map(|idx| {
                let c: Vec<Rat> = (0..d).map(|_| rat_i64(rng.gen_range(-3..=3))).collect();
                (idx, c)
            })
            .collect();
        RandomBracket { n, d, structure }
    }

    pub fn zero_bracket(n: usize, d: usize) -> Self {
        RandomBracket {
            n,
            d,
            structure: Vec::new(),
        }
    }
}

fn det_rat(m: &[Vec<Rat>]) -> Rat {
    // Laplace on the first row; matrices here are at most 3x3
    let n = m.len();
    if n == 0 {
        return rat_i64(1);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = rat_i64(0);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rat>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let cof = &m[0][j] * &det_rat(&minor);
        if j % 2 == 0 {
            acc += cof;
        } else {
            acc -= cof;
        }
    }
    acc
}

impl SkewBracket for RandomBracket {
    type Elem = Vec<Rat>;

    fn arity(&self) -> usize {
        self.n
    }
    fn zero(&self) -> Vec<Rat> {
        vec![rat_i64(0); self.d]
    }
    fn add(&self, a: &Vec<Rat>, b: &Vec<Rat>) -> Vec<Rat> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
    fn neg(&self, a: &Vec<Rat>) -> Vec<Rat> {
        a.iter().map(|x| -x).collect()
    }
    fn eval(&self, args: &[Vec<Rat>]) -> Vec<Rat> {
        assert_eq!(args.len(), self.n);
        let mut out = self.zero();
        for (idx, c) in &self.structure {
            let minor: Vec<Vec<Rat>> = idx
                .iter()
                .map(|&i| args.iter().map(|v| v[i].clone()).collect())
                .collect();
            let det = det_rat(&minor);
            if det.is_zero() {
                continue;
            }
            for (o, cc) in out.iter_mut().zip(c) {
                *o += &det * cc;
            }
        }
        out
    }
}

/// `(n-1,n)`-shuffles of `{0..2n-2}` (0-based), each increasing on its
/// first `n-1` and last `n` positions; lexicographic by first block.
pub fn shuffles(n: usize) -> Vec<Vec<usize>> {
    assert!(n >= 1);
    let total = 2 * n - 1;
    (0..total)
        .combinations(n - 1)
        .map(|first| {
            let mut sigma = first.clone();
            sigma.extend((0..total).filter(|i| !first.contains(i)));
            sigma
        })
        .collect()
}

fn shuffle_sum<B, F>(bracket: &B, args: &[B::Elem], keep: F) -> B::Elem
where
    B: SkewBracket,
    F: Fn(&[usize]) -> bool,
{
    let n = bracket.arity();
    assert_eq!(args.len(), 2 * n - 1, "shuffle sums take 2n-1 arguments");
    let mut acc = bracket.zero();
    for sigma in shuffles(n) {
        if !keep(&sigma) {
            continue;
        }
        let (_, sign) = sort_and_sign(&sigma);
        let inner_args: Vec<B::Elem> = sigma[n - 1..].iter().map(|&i| args[i].clone()).collect();
        let inner = bracket.eval(&inner_args);
        let mut outer: Vec<B::Elem> = sigma[..n - 1].iter().map(|&i| args[i].clone()).collect();
        outer.push(inner);
        let term = bracket.eval(&outer);
        acc = bracket.add(&acc, &if sign < 0 { bracket.neg(&term) } else { term });
    }
    acc
}

/// The `(2n-2,1)`-type sum: shuffles fixing the last slot, last argument
/// pinned inside the nested bracket.
pub fn lcom_eval<B: SkewBracket>(bracket: &B, args: &[B::Elem]) -> B::Elem {
    let last = 2 * bracket.arity() - 2;
    shuffle_sum(bracket, args, |sigma| sigma[last] == last)
}

/// The `(1,2n-2)`-type sum: shuffles fixing the first slot.
pub fn rcom_eval<B: SkewBracket>(bracket: &B, args: &[B::Elem]) -> B::Elem {
    shuffle_sum(bracket, args, |sigma| sigma[0] == 0)
}

/// The full shuffle sum (homotopical n-Lie / generalized Jacobi).
pub fn hanlon_eval<B: SkewBracket>(bracket: &B, args: &[B::Elem]) -> B::Elem {
    shuffle_sum(bracket, args, |_| true)
}

/// Random coefficient polynomial, degree at most `max_deg`, integer
/// coefficients in `[-5, 5]`.
pub fn random_poly<R: Rng>(rng: &mut R, max_deg: usize) -> Poly {
    let coeffs: Vec<i64> = (0..=max_deg).map(|_| rng.gen_range(-5..=5)).collect();
    Poly::from_coeffs(&coeffs)
}

/// Random order-p operator `u(x) d^p` with nonzero `u`.
pub fn random_order_p_op<R: Rng>(rng: &mut R, p: usize, max_deg: usize) -> DiffOp {
    loop {
        let u = random_poly(rng, max_deg);
        if !u.is_zero() {
            return DiffOp::from_term(p, u);
        }
    }
}

/// `s_N = 0` on `trials` random order-p tuples; `N > 2p`.
pub fn check_s_n_zero(p: usize, n: usize, trials: usize, seed: u64) -> Result<bool> {
    if p == 0 || n <= 2 * p {
        return Err(Error::Range(format!(
            "check_s_n_zero needs p >= 1 and N > 2p, got p={p} N={n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tuples: Vec<Vec<DiffOp>> = (0..trials)
        .map(|_| (0..n).map(|_| random_order_p_op(&mut rng, p, 2 * p + 2)).collect())
        .collect();
    let verdicts = par_map(tuples, |args| s_eval_dp(&DiffOpRing, &args).is_zero());
    Ok(verdicts.into_iter().all(|v| v))
}

/// `s_2p(u_1 d^p, .., u_2p d^p) = lambda_p W(u) d^p`, exactly.
pub fn wronskian_formula_check(p: usize, us: &[Poly]) -> Result<bool> {
    if p == 0 || p > 3 {
        return Err(Error::Range("wronskian_formula_check supports 1 <= p <= 3".into()));
    }
    if us.len() != 2 * p {
        return Err(Error::Range(format!(
            "wronskian_formula_check needs 2p = {} polynomials, got {}",
            2 * p,
            us.len()
        )));
    }
    let args: Vec<DiffOp> = us.iter().map(|u| DiffOp::from_term(p, u.clone())).collect();
    let lhs = s_eval_dp(&DiffOpRing, &args);
    let lambda = Rat::from_integer(lambda_super(p)?);
    let rhs = DiffOp::from_term(p, wronskian(us).scale(&lambda));
    Ok(lhs == rhs)
}

/// First monomial tuple showing that `s_N` leaves the order-p subspace.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClosureWitness {
    /// Exponents `i_1 < .. < i_N` of the tuple `(x^(i_j) d^p)`.
    pub exponents: Vec<usize>,
    /// The full value `s_N` on the tuple.
    pub value: DiffOp,
    /// An order `> p` carrying a nonzero component.
    pub bad_order: usize,
}

/// Scans tuples `(x^(i_1) d^p, .., x^(i_N) d^p)` with
/// `i_1 < .. < i_N <= 2p` in lexicographic order for one whose `s_N` has a
/// component of order above `p`. Exhaustion would falsify the theorem and
/// is reported as an error.
pub fn closure_witness(p: usize, n: usize) -> Result<ClosureWitness> {
    if n < 2 || n >= 2 * p {
        return Err(Error::Range(format!(
            "closure_witness needs 2 <= N < 2p, got p={p} N={n}"
        )));
    }
    for exponents in (0..=2 * p).combinations(n) {
        let args: Vec<DiffOp> = exponents
            .iter()
            .map(|&i| DiffOp::from_term(p, Poly::x_pow(i)))
            .collect();
        let value = s_eval_dp(&DiffOpRing, &args);
        let bad = value.terms().map(|(k, _)| k).find(|&k| k > p);
        if let Some(bad_order) = bad {
            return Ok(ClosureWitness {
                exponents,
                value,
                bad_order,
            });
        }
    }
    Err(Error::Structure(format!(
        "no closure witness for p={p}, N={n}: s_N appears well-defined"
    )))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NamedIdentity {
    Lcom,
    Rcom,
    Hanlon,
}

/// The chosen shuffle identity vanishes for `psi = s_2p` on `trials`
/// random order-p tuples.
pub fn check_named_identity(
    p: usize,
    which: NamedIdentity,
    trials: usize,
    seed: u64,
) -> Result<bool> {
    if p == 0 || p > 2 {
        return Err(Error::Range("check_named_identity supports 1 <= p <= 2".into()));
    }
    let bracket = S2pBracket::new(p);
    let nargs = 2 * bracket.arity() - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tuples: Vec<Vec<DiffOp>> = (0..trials)
        .map(|_| (0..nargs).map(|_| random_order_p_op(&mut rng, p, 2 * p + 2)).collect())
        .collect();
    let verdicts = par_map(tuples, |args| {
        let v = match which {
            NamedIdentity::Lcom => lcom_eval(&bracket, &args),
            NamedIdentity::Rcom => rcom_eval(&bracket, &args),
            NamedIdentity::Hanlon => hanlon_eval(&bracket, &args),
        };
        v.is_zero()
    });
    Ok(verdicts.into_iter().all(|v| v))
}

/// `sum_(i=2)^(2n-1) (-1)^(i+1) lcom(t_1,..,^t_i,..,t_(2n-1),t_i)
///  - (n-1) lcom(t_2,..,t_(2n-1),t_1)`.
fn rcom_1<B: SkewBracket>(bracket: &B, ts: &[B::Elem]) -> B::Elem {
    let n = bracket.arity();
    let mut acc = bracket.zero();
    for i in 2..=2 * n - 1 {
        let mut args: Vec<B::Elem> = ts
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i - 1)
            .map(|(_, t)| t.clone())
            .collect();
        args.push(ts[i - 1].clone());
        let term = lcom_eval(bracket, &args);
        acc = bracket.add(&acc, &if i % 2 == 1 { term } else { bracket.neg(&term) });
    }
    let mut rotated: Vec<B::Elem> = ts[1..].to_vec();
    rotated.push(ts[0].clone());
    let tail = bracket.scale_int(&lcom_eval(bracket, &rotated), n as i64 - 1);
    bracket.add(&acc, &bracket.neg(&tail))
}

/// `sum_(i=1)^(2n-2) (-1)^(i+1) rcom(t_i,t_1,..,^t_i,..,t_(2n-1))
///  - (n-2) rcom(t_(2n-1),t_1,..,t_(2n-2))`.
fn lcom_1<B: SkewBracket>(bracket: &B, ts: &[B::Elem]) -> B::Elem {
    let n = bracket.arity();
    let mut acc = bracket.zero();
    for i in 1..=2 * n - 2 {
        let mut args: Vec<B::Elem> = vec![ts[i - 1].clone()];
        args.extend(
            ts.iter()
                .enumerate()
                .filter(|(j, _)| *j != i - 1)
                .map(|(_, t)| t.clone()),
        );
        let term = rcom_eval(bracket, &args);
        acc = bracket.add(&acc, &if i % 2 == 1 { term } else { bracket.neg(&term) });
    }
    let mut swapped: Vec<B::Elem> = vec![ts[2 * n - 2].clone()];
    swapped.extend(ts[..2 * n - 2].iter().cloned());
    let tail = bracket.scale_int(&rcom_eval(bracket, &swapped), n as i64 - 2);
    bracket.add(&acc, &bracket.neg(&tail))
}

/// Both free relations `n rcom = rcom_1` and `(n-1) lcom = lcom_1` hold
/// exactly for `trials` random alternating brackets on `Q^d`, `d` cycling
/// through 4..6.
pub fn rtol_ltor_check(n: usize, trials: usize, seed: u64) -> Result<bool> {
    if !(2..=3).contains(&n) {
        return Err(Error::Range("rtol_ltor_check supports n in {2, 3}".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..trials {
        let d = 4 + t % 3;
        let bracket = RandomBracket::random(n, d, &mut rng);
        let ts: Vec<Vec<Rat>> = (0..2 * n - 1)
            .map(|_| (0..d).map(|_| rat_i64(rng.gen_range(-3..=3))).collect())
            .collect();
        let rtol_lhs = bracket.scale_int(&rcom_eval(&bracket, &ts), n as i64);
        if rtol_lhs != rcom_1(&bracket, &ts) {
            return Ok(false);
        }
        let ltor_lhs = bracket.scale_int(&lcom_eval(&bracket, &ts), n as i64 - 1);
        if ltor_lhs != lcom_1(&bracket, &ts) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Reduces `row` against `basis` and absorbs it when independent; returns
/// whether the rank grew.
fn rank_insert(basis: &mut Vec<(usize, Vec<Rat>)>, mut row: Vec<Rat>) -> bool {
    for (piv, brow) in basis.iter() {
        if !row[*piv].is_zero() {
            let factor = &row[*piv] / &brow[*piv];
            for (r, b) in row.iter_mut().zip(brow) {
                *r -= &factor * b;
            }
        }
    }
    match row.iter().position(|c| !c.is_zero()) {
        Some(piv) => {
            basis.push((piv, row));
            true
        }
        None => false,
    }
}

/// Rank of the evaluation matrix of the `d!` multilinear monomials
/// `t_sigma(1) .. t_sigma(d)` on random order-p tuples; rows are added
/// until five consecutive tuples change nothing. Rank `d!` certifies that
/// no multilinear identity of degree `d` holds on the order-p subspace.
pub fn multilinear_identity_rank(p: usize, d: usize, seed: u64) -> Result<usize> {
    if p == 0 || p > 2 || d == 0 || d > 4 {
        return Err(Error::Range(
            "multilinear_identity_rank supports 1 <= p <= 2, 1 <= d <= 4".into(),
        ));
    }
    let perms: Vec<Vec<usize>> = (0..d).permutations(d).collect();
    let cols = perms.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut basis: Vec<(usize, Vec<Rat>)> = Vec::new();
    let mut stale = 0usize;
    while basis.len() < cols && stale < 5 {
        let ts: Vec<DiffOp> = (0..d).map(|_| random_order_p_op(&mut rng, p, 2 * p + 2)).collect();
        let products: Vec<DiffOp> = par_map(perms.clone(), |perm| {
            let mut prod = ts[perm[0]].clone();
            for &i in &perm[1..] {
                prod = prod.compose(&ts[i]);
            }
            prod
        });
        // one scalar row per (order, degree) coordinate seen in any product
        let mut keys: Vec<(usize, usize)> = products
            .iter()
            .flat_map(|op| {
                op.terms()
                    .flat_map(|(k, u)| u.terms().map(move |(deg, _)| (k, deg)).collect::<Vec<_>>())
            })
            .collect();
        keys.sort_unstable();
        keys.dedup();
        let mut grew = false;
        for (order, deg) in keys {
            let row: Vec<Rat> = products
                .iter()
                .map(|op| op.coeff(order).coeff(deg))
                .collect();
            if rank_insert(&mut basis, row) {
                grew = true;
                if basis.len() == cols {
                    break;
                }
            }
        }
        stale = if grew { 0 } else { stale + 1 };
    }
    Ok(basis.len())
}

/// The generation identities from the simplicity proof, checked exactly.
///
/// For `s >= 2p-1`:
/// `s_2p(d^p, x d^p, .., x^(2p-2) d^p, x^s d^p)
///  = lambda_p C(s,2p-1) prod_(i<2p) i! x^(s-2p+1) d^p`;
/// for `1 <= s < 2p-1` the slot-s variant collapses the tuple to
/// `(1, x, .., x^(2p-1))` and yields `lambda_p prod_(i<2p) i! d^p`.
pub fn simplicity_generation_check(p: usize, s: usize) -> Result<bool> {
    if p == 0 || p > 3 || s == 0 || s > 2 * p + 4 {
        return Err(Error::Range(format!(
            "simplicity_generation_check needs 1 <= p <= 3, 1 <= s <= 2p+4, got p={p} s={s}"
        )));
    }
    let lambda = Rat::from_integer(lambda_super(p)?);
    let mut fact_prod = BigInt::one();
    for i in 0..2 * p {
        fact_prod *= factorial(i);
    }
    let (exponents, scalar, out_deg): (Vec<usize>, BigInt, usize) = if s >= 2 * p - 1 {
        let mut e: Vec<usize> = (0..2 * p - 1).collect();
        e.push(s);
        (e, binomial(s, 2 * p - 1) * &fact_prod, s - (2 * p - 1))
    } else {
        ((0..2 * p).collect(), fact_prod.clone(), 0)
    };
    let args: Vec<DiffOp> = exponents
        .iter()
        .map(|&i| DiffOp::from_term(p, Poly::x_pow(i)))
        .collect();
    let lhs = s_eval_dp(&DiffOpRing, &args);
    let rhs = DiffOp::from_term(
        p,
        Poly::monomial(out_deg, &lambda * &Rat::from_integer(scalar)),
    );
    Ok(lhs == rhs)
}
