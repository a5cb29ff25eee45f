//! The Wronskian constant `lambda_p` by independent routes:
//!
//! * `lambda_super`: the single surviving coefficient of `(a d^p)^(2p)`
//!   in the super-calculus;
//! * `lambda_weyl`: the standard polynomial evaluated on the Weyl tuple
//!   `(d^p, x d^p, x^2/2 d^p, ..., x^(2p-1)/(2p-1)! d^p)`;
//! * `lambda_perm_naive` / `lambda_perm_dp`: the signed permutation sum
//!   of powered prefix products, divided exactly by the integer
//!   Vandermonde;
//! * `lambda_matrix_rows` / `lambda_matrix_cols`: signed multinomial sums
//!   over the triangular matrix family `M_p`.
//!
//! The evaluation-based `f_eval` checks sit on the same prefix-product
//! numerator with rational coordinates.

use itertools::Itertools;

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::combinatorics::{factorial, sort_and_sign};
use crate::par::par_map;
use crate::poly::Poly;
use crate::rational::{rat_i64, Rat};
use crate::standard::{permutation_sign, s_eval_dp, DiffOpRing};
use crate::weyl::DiffOp;
use crate::{Error, Result};

/// Square upper-triangular member of `M_p`: non-negative entries, all row
/// sums equal to `p`, column sums positive and pairwise distinct.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TriMatrix {
    dim: usize,
    rows: Vec<Vec<usize>>,
}

impl TriMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.rows[i][j]
    }

    /// Column-sum word `r(M)`.
    pub fn col_sums(&self) -> Vec<usize> {
        (0..self.dim)
            .map(|j| self.rows.iter().map(|r| r[j]).sum())
            .collect()
    }
}

/// Coefficient of `a^(0..2p-1) d^p` in `(a d^p)^(2p)`; errors if the power
/// is anything but that single term.
pub fn lambda_super(p: usize) -> Result<BigInt> {
    if p == 0 {
        return Err(Error::Range("lambda_super needs p >= 1".into()));
    }
    let pw = crate::superalg::SuperOp::power(p, 2 * p);
    let expected_mono =
        crate::superalg::SuperMonomial::new_unchecked((0..2 * p).collect());
    if pw.len() != 1 {
        return Err(Error::Structure(format!(
            "(a d^p)^(2p) has {} terms, expected exactly 1",
            pw.len()
        )));
    }
    let coeff = pw.coeff(&expected_mono, p);
    if coeff.is_zero() {
        return Err(Error::Structure(
            "(a d^p)^(2p) is not supported on a^(0..2p-1) d^p".into(),
        ));
    }
    Ok(coeff)
}

/// The Weyl tuple `(x^i / i!) d^p`, `i = 0..2p-1`.
pub fn weyl_tuple(p: usize) -> Vec<DiffOp> {
    (0..2 * p)
        .map(|i| {
            let c = Rat::new(BigInt::one(), factorial(i));
            DiffOp::from_term(p, Poly::monomial(i, c))
        })
        .collect()
}

/// `s_2p` on the Weyl tuple must collapse to `lambda d^p`; returns `lambda`.
pub fn lambda_weyl(p: usize) -> Result<BigInt> {
    if p == 0 {
        return Err(Error::Range("lambda_weyl needs p >= 1".into()));
    }
    let value = s_eval_dp(&DiffOpRing, &weyl_tuple(p));
    let mut terms = value.terms();
    let (order, poly) = terms
        .next()
        .ok_or_else(|| Error::Structure("s_2p vanished on the Weyl tuple".into()))?;
    if terms.next().is_some() || order != p || poly.degree() != Some(0) {
        return Err(Error::Structure(format!(
            "s_2p on the Weyl tuple is not a constant multiple of d^{p}: {value}"
        )));
    }
    crate::rational::to_integer(&poly.coeff(0))
}

fn vandermonde_denominator(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 1..=n {
        for j in i + 1..=n {
            acc *= BigInt::from(i as i64 - j as i64);
        }
    }
    acc
}

/// Full `(2p)!` enumeration of the signed permutation formula.
pub fn lambda_perm_naive(p: usize) -> Result<BigInt> {
    if p == 0 || p > 4 {
        return Err(Error::Range("lambda_perm_naive supports 1 <= p <= 4".into()));
    }
    let n = 2 * p;
    let perms: Vec<Vec<usize>> = (1..=n).permutations(n).collect();
    let partials = par_map(perms, |perm| {
        let mut prefix = 0usize;
        let mut prod = BigInt::one();
        for &v in &perm[..n - 1] {
            prefix += v;
            prod *= BigInt::from(prefix);
        }
        let mut powered = BigInt::one();
        for _ in 0..p {
            powered *= &prod;
        }
        if permutation_sign(&perm) < 0 {
            -powered
        } else {
            powered
        }
    });
    let numerator: BigInt = partials.into_iter().sum();
    exact_div(numerator, vandermonde_denominator(n))
}

fn exact_div(num: BigInt, den: BigInt) -> Result<BigInt> {
    if den.is_zero() || !(&num % &den).is_zero() {
        return Err(Error::InexactDivision(format!("{num} / {den}")));
    }
    Ok(num / den)
}

/// Subset DP for the signed sum of `prod_(t<=cutoff) (prefix sum)^exponent`
/// over all orderings of `values`; cutoff is `values.len() - 1`.
fn subset_dp_int(values: &[BigInt], exponent: usize) -> BigInt {
    let n = values.len();
    let full: usize = (1 << n) - 1;
    let mut sums: Vec<BigInt> = vec![BigInt::zero(); full + 1];
    let mut table: Vec<BigInt> = vec![BigInt::zero(); full + 1];
    table[0] = BigInt::one();
    for mask in 1..=full {
        let low = mask.trailing_zeros() as usize;
        sums[mask] = &sums[mask & (mask - 1)] + &values[low];
        let mut acc = BigInt::zero();
        for i in 0..n {
            if mask & (1 << i) == 0 {
                continue;
            }
            let term = &table[mask & !(1 << i)];
            let larger = (mask >> (i + 1)).count_ones();
            if larger % 2 == 1 {
                acc -= term;
            } else {
                acc += term;
            }
        }
        if mask.count_ones() as usize <= n - 1 {
            let mut factor = BigInt::one();
            for _ in 0..exponent {
                factor *= &sums[mask];
            }
            acc *= factor;
        }
        table[mask] = acc;
    }
    table[full].clone()
}

fn subset_dp_rat(values: &[Rat], exponent: usize) -> Rat {
    let n = values.len();
    let full: usize = (1 << n) - 1;
    let mut sums: Vec<Rat> = vec![rat_i64(0); full + 1];
    let mut table: Vec<Rat> = vec![rat_i64(0); full + 1];
    table[0] = rat_i64(1);
    for mask in 1..=full {
        let low = mask.trailing_zeros() as usize;
        sums[mask] = &sums[mask & (mask - 1)] + &values[low];
        let mut acc = rat_i64(0);
        for i in 0..n {
            if mask & (1 << i) == 0 {
                continue;
            }
            let term = table[mask & !(1 << i)].clone();
            let larger = (mask >> (i + 1)).count_ones();
            if larger % 2 == 1 {
                acc -= term;
            } else {
                acc += term;
            }
        }
        if mask.count_ones() as usize <= n - 1 {
            let mut factor = rat_i64(1);
            for _ in 0..exponent {
                factor *= &sums[mask];
            }
            acc *= factor;
        }
        table[mask] = acc;
    }
    table[full].clone()
}

/// Same value as [`lambda_perm_naive`], via the subset DP.
pub fn lambda_perm_dp(p: usize) -> Result<BigInt> {
    if p == 0 || p > 6 {
        return Err(Error::Range("lambda_perm_dp supports 1 <= p <= 6".into()));
    }
    let n = 2 * p;
    let values: Vec<BigInt> = (1..=n).map(BigInt::from).collect();
    let numerator = subset_dp_int(&values, p);
    exact_div(numerator, vandermonde_denominator(n))
}

/// All members of `M_p`, row-major lexicographic order.
pub fn enumerate_mp(p: usize) -> Result<Vec<TriMatrix>> {
    if p == 0 || p > 4 {
        return Err(Error::Range("enumerate_mp supports 1 <= p <= 4".into()));
    }
    let dim = 2 * p - 1;
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(dim);
    let mut col_sums = vec![0usize; dim];
    dfs_rows(p, dim, &mut rows, &mut col_sums, &mut out);
    Ok(out)
}

fn dfs_rows(
    p: usize,
    dim: usize,
    rows: &mut Vec<Vec<usize>>,
    col_sums: &mut [usize],
    out: &mut Vec<TriMatrix>,
) {
    let i = rows.len();
    if i == dim {
        out.push(TriMatrix {
            dim,
            rows: rows.clone(),
        });
        return;
    }
    // row i: zeros in columns < i, then a composition of p
    for tail in crate::combinatorics::compositions(p, dim - i) {
        let mut row = vec![0usize; i];
        row.extend(tail);
        let mut feasible = true;
        for j in i..dim {
            col_sums[j] += row[j];
            // every final column sum lies in 1..=dim
            if col_sums[j] > dim {
                feasible = false;
            }
        }
        // column i is now final: positive, bounded, distinct from the
        // earlier finalized columns
        let final_i = col_sums[i];
        if feasible
            && final_i >= 1
            && final_i <= dim
            && !col_sums[..i].contains(&final_i)
        {
            rows.push(row.clone());
            dfs_rows(p, dim, rows, col_sums, out);
            rows.pop();
        }
        for j in i..dim {
            col_sums[j] -= row[j];
        }
    }
}

/// Row-multinomial signed sum over `M_p`.
pub fn lambda_matrix_rows(p: usize) -> Result<BigInt> {
    let mut acc = BigInt::zero();
    for m in enumerate_mp(p)? {
        let (_, sign) = sort_and_sign(&m.col_sums());
        let mut prod = BigInt::from(sign);
        for row in m.rows() {
            prod *= crate::combinatorics::multinomial(row);
        }
        acc += prod;
    }
    if acc.is_positive() {
        Ok(acc)
    } else {
        Err(Error::Structure(format!(
            "row-route sum is not a positive integer: {acc}"
        )))
    }
}

/// Column-multinomial signed sum over `M_p` with the factorial prefactor;
/// must land on a positive integer.
pub fn lambda_matrix_cols(p: usize) -> Result<BigInt> {
    let dim = 2 * p - 1;
    let mut prefactor_num = BigInt::one();
    let pf = factorial(p);
    for _ in 0..dim {
        prefactor_num *= &pf;
    }
    let mut prefactor_den = BigInt::one();
    for j in 1..=dim {
        prefactor_den *= factorial(j);
    }
    let mut acc = BigInt::zero();
    for m in enumerate_mp(p)? {
        let cols = m.col_sums();
        let (_, sign) = sort_and_sign(&cols);
        let mut prod = BigInt::from(sign);
        for j in 0..dim {
            let mut col_mult = factorial(cols[j]);
            for i in 0..=j {
                col_mult /= factorial(m.get(i, j));
            }
            prod *= col_mult;
        }
        acc += prod;
    }
    let value = Rat::new(prefactor_num * acc, prefactor_den);
    let value = crate::rational::to_integer(&value)?;
    if value.is_positive() {
        Ok(value)
    } else {
        Err(Error::Structure(format!(
            "column-route sum is not a positive integer: {value}"
        )))
    }
}

/// `f_s` evaluated at one point: the signed prefix-product sum over the
/// permuted coordinates, divided by the Vandermonde of the point.
pub fn f_eval(p: usize, s: usize, point: &[Rat]) -> Result<Rat> {
    if p == 0 || s < p {
        return Err(Error::Range(format!("f_eval needs p >= 1 and s >= p, got p={p} s={s}")));
    }
    let n = 2 * p;
    if point.len() != n {
        return Err(Error::Range(format!(
            "f_eval needs {n} coordinates, got {}",
            point.len()
        )));
    }
    let mut denom = rat_i64(1);
    for i in 0..n {
        for j in i + 1..n {
            if point[i] == point[j] {
                return Err(Error::Range("f_eval coordinates must be pairwise distinct".into()));
            }
            denom *= &point[i] - &point[j];
        }
    }
    let numerator = subset_dp_rat(point, s);
    Ok(numerator / denom)
}

/// All routes valid at this `p`, as (route name, value).
pub fn lambda_all(p: usize) -> Result<Vec<(&'static str, BigInt)>> {
    let mut out = vec![("super", lambda_super(p)?)];
    if p <= 4 {
        out.push(("weyl", lambda_weyl(p)?));
        out.push(("perm", lambda_perm_naive(p)?));
    }
    if p <= 6 {
        out.push(("perm-dp", lambda_perm_dp(p)?));
    }
    if p <= 4 {
        out.push(("matrix-rows", lambda_matrix_rows(p)?));
        out.push(("matrix-cols", lambda_matrix_cols(p)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn big(s: &str) -> BigInt {
        s.parse().unwrap()
    }

    #[test]
    fn super_route_published_values() {
        assert_eq!(lambda_super(1).unwrap(), BigInt::one());
        assert_eq!(lambda_super(2).unwrap(), BigInt::from(2));
        assert_eq!(lambda_super(3).unwrap(), BigInt::from(90));
    }

    #[test]
    fn weyl_route_small() {
        assert_eq!(lambda_weyl(1).unwrap(), BigInt::one());
        assert_eq!(lambda_weyl(2).unwrap(), BigInt::from(2));
        assert_eq!(lambda_weyl(3).unwrap(), BigInt::from(90));
    }

    #[test]
    fn perm_naive_small() {
        assert_eq!(lambda_perm_naive(1).unwrap(), BigInt::one());
        assert_eq!(lambda_perm_naive(2).unwrap(), BigInt::from(2));
        assert_eq!(lambda_perm_naive(3).unwrap(), BigInt::from(90));
        assert!(lambda_perm_naive(5).is_err());
    }

    #[test]
    fn perm_dp_matches_naive() {
        for p in 1..=4 {
            assert_eq!(lambda_perm_dp(p).unwrap(), lambda_perm_naive(p).unwrap());
        }
    }

    #[test]
    fn perm_dp_published_values() {
        assert_eq!(lambda_perm_dp(4).unwrap(), BigInt::from(586656));
        assert_eq!(lambda_perm_dp(5).unwrap(), big("1915103977500"));
        assert_eq!(lambda_perm_dp(6).unwrap(), big("7886133184567796056800"));
    }

    #[test]
    fn mp_enumeration_small() {
        let m1 = enumerate_mp(1).unwrap();
        assert_eq!(m1.len(), 1);
        assert_eq!(m1[0].rows(), &[vec![1]]);

        let m2 = enumerate_mp(2).unwrap();
        assert_eq!(m2.len(), 4);
        let mut words: Vec<Vec<usize>> = m2.iter().map(|m| m.col_sums()).collect();
        words.sort();
        assert_eq!(
            words,
            vec![vec![1, 2, 3], vec![1, 2, 3], vec![1, 3, 2], vec![2, 1, 3]]
        );
        for m in &m2 {
            assert_eq!(m.get(0, 0), m.col_sums()[0]);
            assert!(m.get(0, 0) > 0);
            assert_eq!(m.get(2, 2), 2);
        }
    }

    #[test]
    fn mp_invariants_p3() {
        for m in enumerate_mp(3).unwrap() {
            let dim = m.dim();
            for row in m.rows() {
                assert_eq!(row.iter().sum::<usize>(), 3);
            }
            let cols = m.col_sums();
            let mut sorted = cols.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, (1..=dim).collect::<Vec<_>>());
            assert_eq!(m.get(dim - 1, dim - 1), 3);
        }
    }

    #[test]
    fn matrix_routes_small() {
        assert_eq!(lambda_matrix_rows(1).unwrap(), BigInt::one());
        assert_eq!(lambda_matrix_cols(1).unwrap(), BigInt::one());
        assert_eq!(lambda_matrix_rows(2).unwrap(), BigInt::from(2));
        assert_eq!(lambda_matrix_cols(2).unwrap(), BigInt::from(2));
        assert_eq!(lambda_matrix_rows(3).unwrap(), BigInt::from(90));
        assert_eq!(lambda_matrix_cols(3).unwrap(), BigInt::from(90));
    }

    #[test]
    fn all_routes_agree() {
        for p in 1..=3 {
            let values = lambda_all(p).unwrap();
            let first = values[0].1.clone();
            for (name, v) in &values {
                assert_eq!(v, &first, "route {name} disagrees at p={p}");
            }
            assert!(first.is_positive());
        }
    }

    #[test]
    fn f_eval_examples() {
        // p=1, s=1: (x1 - x2)/(x1 - x2) = 1
        let point = [rat_i64(3), rat_i64(-2)];
        assert_eq!(f_eval(1, 1, &point).unwrap(), rat_i64(1));
        // p=1, s=2: x1 + x2
        let point = [rat_i64(5), rat_i64(2)];
        assert_eq!(f_eval(1, 2, &point).unwrap(), rat_i64(7));
    }

    #[test]
    fn f_p_is_constant_lambda_p() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for p in 1..=3 {
            let expected = Rat::from_integer(lambda_super(p).unwrap());
            for _ in 0..20 {
                let point = random_distinct_point(&mut rng, 2 * p);
                assert_eq!(f_eval(p, p, &point).unwrap(), expected, "p={p}");
            }
        }
    }

    #[test]
    fn f_s_is_symmetric() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for p in 1..=2usize {
            for s in p..=p + 2 {
                let point = random_distinct_point(&mut rng, 2 * p);
                let base = f_eval(p, s, &point).unwrap();
                for _ in 0..5 {
                    let mut permuted = point.clone();
                    for i in (1..permuted.len()).rev() {
                        let j = rng.gen_range(0..=i);
                        permuted.swap(i, j);
                    }
                    assert_eq!(f_eval(p, s, &permuted).unwrap(), base, "p={p} s={s}");
                }
            }
        }
    }

    #[test]
    fn f_next_degree_along_a_line() {
        // restrict f_(p+1) to x = t d + c; the interpolated univariate
        // degree is at most 2p - 1. With d_i = i + 1 and c_i = 100 (i + 1)
        // the coordinates (i + 1)(t + 100) stay pairwise distinct at every
        // sampled t.
        for p in 1..=2usize {
            let n = 2 * p;
            let dir: Vec<Rat> = (0..n).map(|i| rat_i64(i as i64 + 1)).collect();
            let base: Vec<Rat> = (0..n).map(|i| rat_i64(100 * (i as i64 + 1))).collect();
            let max_deg = (2 * p - 1) as usize;
            let samples: Vec<(Rat, Rat)> = (0..max_deg + 2)
                .map(|t| {
                    let t = rat_i64(t as i64 + 1);
                    let point: Vec<Rat> = dir
                        .iter()
                        .zip(&base)
                        .map(|(d, c)| d * &t + c)
                        .collect();
                    (t, f_eval(p, p + 1, &point).unwrap())
                })
                .collect();
            // divided differences of order max_deg + 1 must vanish
            let mut diffs: Vec<(Rat, Rat)> = samples;
            for _ in 0..max_deg + 1 {
                diffs = diffs
                    .windows(2)
                    .map(|w| {
                        let (t0, v0) = &w[0];
                        let (t1, v1) = &w[1];
                        (t0.clone(), (v1 - v0) / (t1 - t0))
                    })
                    .collect();
            }
            for (_, v) in diffs {
                assert!(v.is_zero(), "degree exceeds {max_deg} at p={p}");
            }
        }
    }

    fn random_distinct_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rat> {
        loop {
            let point: Vec<Rat> = (0..n).map(|_| rat_i64(rng.gen_range(-20..=20))).collect();
            let mut sorted: Vec<_> = point.clone();
            sorted.sort();
            if sorted.windows(2).all(|w| w[0] != w[1]) {
                return point;
            }
        }
    }
}
