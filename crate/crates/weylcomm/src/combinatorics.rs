//! Index combinatorics: strictly increasing sequences `E_k(l)`, the
//! lexicographic maxima `delta(k)` / `delta_1(k)`, sort/sign, the recursive
//! sets `G_k`, the matching sets `M(alpha, beta)`, multinomials, and
//! brute-force checks of the combinatorial lemmas behind `mu_k`.

use num::bigint::BigInt;
use num::{One, Zero};

use crate::superalg::SuperMonomial;
use crate::{Error, Result};

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Binomial coefficient over big integers; 0 when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Multinomial `|s|! / prod s_i!`.
pub fn multinomial(s: &[usize]) -> BigInt {
    let total: usize = s.iter().sum();
    let mut acc = factorial(total);
    for &part in s {
        acc /= factorial(part);
    }
    acc
}

/// All strictly increasing `k`-sequences of total weight `weight`,
/// first entry forced to 0 when `zero_first`; lexicographic order.
pub fn enumerate_e(k: usize, weight: usize, zero_first: bool) -> Vec<SuperMonomial> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(k);
    if zero_first {
        if k == 0 {
            if weight == 0 {
                out.push(SuperMonomial::unit());
            }
            return out;
        }
        prefix.push(0);
        rec_e(k, weight, 1, &mut prefix, &mut out);
    } else {
        rec_e(k, weight, 0, &mut prefix, &mut out);
    }
    out
}

fn rec_e(
    k: usize,
    weight: usize,
    min_next: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<SuperMonomial>,
) {
    let used: usize = prefix.iter().sum();
    let rem_len = k - prefix.len();
    if rem_len == 0 {
        if used == weight {
            out.push(SuperMonomial::new_unchecked(prefix.clone()));
        }
        return;
    }
    if used > weight {
        return;
    }
    let rem = weight - used;
    // minimal possible tail: min_next, min_next+1, ...
    let min_tail = rem_len * min_next + rem_len * (rem_len - 1) / 2;
    if min_tail > rem {
        return;
    }
    // the first tail entry cannot exceed what leaves a feasible remainder
    for v in min_next..=rem {
        let tail_after = rem_len - 1;
        let min_after = tail_after * (v + 1) + tail_after.saturating_sub(1) * tail_after / 2;
        if v + min_after > rem {
            break;
        }
        prefix.push(v);
        rec_e(k, weight, v + 1, prefix, out);
        prefix.pop();
    }
}

/// Closed form for the maximal element `delta(k)` of `E_{k+1,0}(pk)`.
pub fn delta_closed(p: usize, k: usize) -> Result<SuperMonomial> {
    if p == 0 || k > 2 * p - 1 {
        return Err(Error::Range(format!("delta(p={p}, k={k}) needs 0 <= k <= 2p-1")));
    }
    let l = k / 2;
    let mut seq = vec![0usize];
    seq.extend(p - l..p); // p-l .. p-1
    if k % 2 == 1 {
        seq.push(p);
    }
    seq.extend(p + 1..=p + l);
    Ok(SuperMonomial::new_unchecked(seq))
}

/// Brute-force maximum of `E_{k+1,0}(pk - deficit)`: the authoritative
/// definition of `delta(k)` (deficit 0) and `delta_1(k)` (deficit 1).
pub fn delta_max_oracle(p: usize, k: usize, deficit: usize) -> Result<SuperMonomial> {
    let weight = (p * k)
        .checked_sub(deficit)
        .ok_or_else(|| Error::Range(format!("weight {}*{} - {} is negative", p, k, deficit)))?;
    enumerate_e(k + 1, weight, true)
        .into_iter()
        .max()
        .ok_or_else(|| Error::Range(format!("E_{{{},0}}({weight}) is empty", k + 1)))
}

/// Sorts a sequence and reports the sign of the sorting permutation;
/// sign 0 when the sequence has a repeated entry.
pub fn sort_and_sign(s: &[usize]) -> (Vec<usize>, i32) {
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return (sorted, 0);
    }
    let mut inversions = 0usize;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if s[i] > s[j] {
                inversions += 1;
            }
        }
    }
    (sorted, if inversions % 2 == 0 { 1 } else { -1 })
}

/// The recursive sets `G_k`: every member has length `k` and weight `k`.
pub fn enumerate_g(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 1..=k {
        for alpha in enumerate_g(k - i) {
            let mut seq = Vec::with_capacity(k);
            seq.push(i);
            seq.extend(std::iter::repeat(0).take(i - 1));
            seq.extend(alpha);
            out.push(seq);
        }
    }
    out
}

/// `M(alpha, beta)`: all non-negative integer vectors `gamma` of the same
/// length as `alpha` with `sort(alpha + gamma) = beta` minus its leading 0.
///
/// `beta` must be one entry longer than `alpha` and start with 0. The
/// enumeration runs over injections of the target values; results are in
/// lexicographic order.
pub fn compute_m(alpha: &SuperMonomial, beta: &SuperMonomial) -> Result<Vec<Vec<usize>>> {
    if beta.len() != alpha.len() + 1 || beta.components().first() != Some(&0) {
        return Err(Error::Range(
            "M(alpha, beta) needs len(beta) = len(alpha) + 1 and beta starting with 0".into(),
        ));
    }
    let bar: Vec<usize> = beta.components()[1..].to_vec();
    let a = alpha.components();
    let k = a.len();
    let need: usize = bar.iter().sum();
    let have: usize = a.iter().sum();
    if need < have {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut used = vec![false; bar.len()];
    let mut gamma = Vec::with_capacity(k);
    assign(a, &bar, &mut used, &mut gamma, &mut out);
    out.sort();
    out.dedup();
    Ok(out)
}

fn assign(
    a: &[usize],
    bar: &[usize],
    used: &mut [bool],
    gamma: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let i = gamma.len();
    if i == a.len() {
        out.push(gamma.clone());
        return;
    }
    for (j, &v) in bar.iter().enumerate() {
        if used[j] || v < a[i] {
            continue;
        }
        used[j] = true;
        gamma.push(v - a[i]);
        assign(a, bar, used, gamma, out);
        gamma.pop();
        used[j] = false;
    }
}

/// `sum_{alpha in G_k} sign(alpha + (0,1,..,k-1)) * C(k, alpha) == 1`.
pub fn lemma_a2_check(k: usize) -> bool {
    let mut acc = BigInt::zero();
    for alpha in enumerate_g(k) {
        let shifted: Vec<usize> = alpha.iter().enumerate().map(|(i, &a)| a + i).collect();
        let (_, sign) = sort_and_sign(&shifted);
        acc += BigInt::from(sign) * multinomial(&alpha);
    }
    acc == BigInt::one()
}

/// Alternating partial sums of binomials:
/// `sum_{i=0}^{l-1} (-1)^i C(p,i) == (-1)^(l-1) C(p-1, l-1)`.
pub fn lemma_aaa1_check(p: usize, l: usize) -> bool {
    let mut acc = BigInt::zero();
    for i in 0..l {
        let term = binomial(p, i);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    let rhs = binomial(p - 1, l - 1);
    let rhs = if (l - 1) % 2 == 0 { rhs } else { -rhs };
    acc == rhs
}

/// The signed G-set sums that evaluate the coefficient `mu_k`.
///
/// Odd `k = 2l-1` runs the nested sum with offset `delta(k-1)` (the offset
/// used in the lemma's own proof; the displayed `(0,1,..,2l-2)` offset does
/// not reproduce the stated value) and must equal `C(p-1, l-1)`; even
/// `k = 2l` runs the single sum and must equal `C(p, l)`.
pub fn lemma_a3_check(p: usize, k: usize) -> Result<bool> {
    if k == 0 || k > 2 * p - 1 {
        return Err(Error::Range(format!("lemma_a3(p={p}, k={k}) needs 1 <= k <= 2p-1")));
    }
    let value = if k % 2 == 1 {
        let l = (k + 1) / 2;
        let offset = delta_closed(p, k - 1)?;
        let offset = offset.components();
        let mut acc = BigInt::zero();
        for i in 1..=l {
            for alpha in enumerate_g(l - i) {
                let mut seq = Vec::with_capacity(k);
                seq.push(p - l + i);
                seq.extend(std::iter::repeat(0).take(i - 1));
                seq.extend(alpha.iter().copied());
                seq.extend(std::iter::repeat(0).take(l - 1));
                let shifted: Vec<usize> =
                    seq.iter().zip(offset).map(|(&s, &o)| s + o).collect();
                let (_, sign) = sort_and_sign(&shifted);
                let mut parts = vec![p - l + i];
                parts.extend(alpha);
                acc += BigInt::from(sign) * multinomial(&parts);
            }
        }
        acc
    } else {
        let l = k / 2;
        let mut acc = BigInt::zero();
        for alpha in enumerate_g(l) {
            let shifted: Vec<usize> = alpha.iter().enumerate().map(|(i, &a)| a + i).collect();
            let (_, sign) = sort_and_sign(&shifted);
            let mut parts = vec![p - l];
            parts.extend(alpha);
            acc += BigInt::from(sign) * multinomial(&parts);
        }
        acc
    };
    let expected = if k % 2 == 1 {
        binomial(p - 1, (k + 1) / 2 - 1)
    } else {
        binomial(p, k / 2)
    };
    Ok(value == expected)
}

/// Closed form for `mu_k`: `C(p,l)` for odd `k = 2l+1`, `C(p-1,l-1)` for
/// even `k = 2l`.
pub fn mu_closed(p: usize, k: usize) -> Result<BigInt> {
    if k == 0 || k > 2 * p {
        return Err(Error::Range(format!("mu(p={p}, k={k}) needs 1 <= k <= 2p")));
    }
    Ok(if k % 2 == 1 {
        binomial(p, (k - 1) / 2)
    } else {
        binomial(p - 1, k / 2 - 1)
    })
}

/// Set equality of `M(delta(k-1), delta(k))` with its G-set description.
pub fn lemma_a1_check(p: usize, k: usize) -> Result<bool> {
    if k == 0 || k > 2 * p - 1 {
        return Err(Error::Range(format!("lemma_a1(p={p}, k={k}) needs 1 <= k <= 2p-1")));
    }
    let mut computed = compute_m(&delta_closed(p, k - 1)?, &delta_closed(p, k)?)?;
    let mut described: Vec<Vec<usize>> = if k % 2 == 1 {
        let l = (k + 1) / 2;
        let mut v = Vec::new();
        for i in 1..=l {
            for alpha in enumerate_g(l - i) {
                let mut seq = Vec::with_capacity(k);
                seq.push(p - l + i);
                seq.extend(std::iter::repeat(0).take(i - 1));
                seq.extend(alpha);
                seq.extend(std::iter::repeat(0).take(l - 1));
                v.push(seq);
            }
        }
        v
    } else {
        let l = k / 2;
        enumerate_g(l)
            .into_iter()
            .map(|alpha| {
                let mut seq = Vec::with_capacity(k);
                seq.push(p - l);
                seq.extend(std::iter::repeat(0).take(l - 1));
                seq.extend(alpha);
                seq
            })
            .collect()
    };
    computed.sort();
    described.sort();
    described.dedup();
    Ok(computed == described)
}

/// Compositions of `n` into exactly `parts` non-negative parts,
/// lexicographic order.
pub fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(parts);
    rec_comp(n, parts, &mut prefix, &mut out);
    out
}

fn rec_comp(rem: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if parts == 0 {
        if rem == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    if parts == 1 {
        prefix.push(rem);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for v in 0..=rem {
        prefix.push(v);
        rec_comp(rem - v, parts - 1, prefix, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(seq: &[usize]) -> SuperMonomial {
        SuperMonomial::new_unchecked(seq.to_vec())
    }

    #[test]
    fn enumerate_e_examples() {
        assert_eq!(enumerate_e(2, 2, true), vec![mono(&[0, 2])]);
        let e = enumerate_e(3, 9, true);
        assert_eq!(e.iter().max().unwrap(), &mono(&[0, 4, 5]));
        assert_eq!(enumerate_e(1, 0, true), vec![mono(&[0])]);
        assert_eq!(enumerate_e(1, 0, false), vec![mono(&[0])]);
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_closed(5, 2).unwrap(), mono(&[0, 4, 6]));
        assert_eq!(delta_closed(5, 4).unwrap(), mono(&[0, 3, 4, 6, 7]));
        assert_eq!(delta_closed(5, 9).unwrap(), mono(&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9]));
        assert!(delta_closed(5, 10).is_err());
    }

    #[test]
    fn delta_oracle_examples() {
        assert_eq!(delta_max_oracle(5, 3, 0).unwrap(), mono(&[0, 4, 5, 6]));
        assert_eq!(delta_max_oracle(5, 2, 1).unwrap(), mono(&[0, 4, 5]));
        assert_eq!(delta_max_oracle(3, 1, 1).unwrap(), mono(&[0, 2]));
    }

    #[test]
    fn closed_form_matches_oracle() {
        for p in 1..=6 {
            for k in 0..=2 * p - 1 {
                assert_eq!(
                    delta_closed(p, k).unwrap(),
                    delta_max_oracle(p, k, 0).unwrap(),
                    "p={p} k={k}"
                );
            }
        }
    }

    #[test]
    fn sort_sign_examples() {
        assert_eq!(sort_and_sign(&[2, 0, 2, 3, 1]), (vec![0, 1, 2, 2, 3], 0));
        assert_eq!(sort_and_sign(&[2, 1]), (vec![1, 2], -1));
        assert_eq!(sort_and_sign(&[1, 2, 3]), (vec![1, 2, 3], 1));
    }

    #[test]
    fn g_examples() {
        assert_eq!(enumerate_g(0), vec![Vec::<usize>::new()]);
        let mut g2 = enumerate_g(2);
        g2.sort();
        assert_eq!(g2, vec![vec![1, 1], vec![2, 0]]);
        let mut g3 = enumerate_g(3);
        g3.sort();
        assert_eq!(
            g3,
            vec![vec![1, 1, 1], vec![1, 2, 0], vec![2, 0, 1], vec![3, 0, 0]]
        );
    }

    #[test]
    fn g_members_have_weight_k_and_positive_head() {
        for k in 1..=8 {
            for alpha in enumerate_g(k) {
                assert_eq!(alpha.len(), k);
                assert_eq!(alpha.iter().sum::<usize>(), k);
                assert!(alpha[0] >= 1);
            }
        }
    }

    #[test]
    fn compute_m_examples() {
        let m = compute_m(&mono(&[0, 4, 6]), &mono(&[0, 4, 5, 6])).unwrap();
        assert_eq!(m, vec![vec![4, 1, 0], vec![5, 0, 0]]);
        let m = compute_m(&mono(&[0, 4, 5, 6]), &mono(&[0, 3, 4, 6, 7])).unwrap();
        assert_eq!(m, vec![vec![3, 0, 1, 1], vec![3, 0, 2, 0]]);
        // weight infeasible
        let m = compute_m(&mono(&[5, 6]), &mono(&[0, 1, 2])).unwrap();
        assert!(m.is_empty());
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial(&[1, 1]), BigInt::from(2));
        assert_eq!(multinomial(&[2, 0]), BigInt::from(1));
        assert_eq!(multinomial(&[0, 0, 0]), BigInt::from(1));
        assert_eq!(multinomial(&[3, 1, 1]), BigInt::from(20));
    }

    #[test]
    fn lemma_a2_small() {
        for k in 1..=8 {
            assert!(lemma_a2_check(k), "k={k}");
        }
    }

    #[test]
    fn lemma_aaa1_small() {
        for p in 1..=10 {
            for l in 1..=p {
                assert!(lemma_aaa1_check(p, l), "p={p} l={l}");
            }
        }
    }

    #[test]
    fn lemma_a3_small() {
        for p in 1..=7 {
            for k in 1..=2 * p - 1 {
                assert!(lemma_a3_check(p, k).unwrap(), "p={p} k={k}");
            }
        }
    }

    #[test]
    fn lemma_a3_cross_check_against_mu_table() {
        // p = 5: k = 3 gives C(4,1) = 4 = mu_4, k = 4 gives C(5,2) = 10 = mu_5
        assert_eq!(mu_closed(5, 4).unwrap(), binomial(4, 1));
        assert_eq!(mu_closed(5, 5).unwrap(), binomial(5, 2));
        assert!(lemma_a3_check(5, 3).unwrap());
        assert!(lemma_a3_check(5, 4).unwrap());
        assert!(lemma_a3_check(1, 1).unwrap());
    }

    #[test]
    fn mu_closed_table_p5() {
        let expect = [1u32, 1, 5, 4, 10, 6, 10, 4, 5, 1];
        for (k, &m) in expect.iter().enumerate() {
            assert_eq!(mu_closed(5, k + 1).unwrap(), BigInt::from(m));
        }
    }

    #[test]
    fn lemma_a1_small() {
        for p in 1..=5 {
            for k in 1..=2 * p - 1 {
                assert!(lemma_a1_check(p, k).unwrap(), "p={p} k={k}");
            }
        }
    }
}
