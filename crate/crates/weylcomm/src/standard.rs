//! Evaluation of the standard polynomial
//! `s_N(X_1..X_N) = sum_sigma sign(sigma) X_sigma(1) ... X_sigma(N)`
//! over any caller-supplied associative ring.
//!
//! Two engines: a naive factorial-time sum over lexicographically
//! enumerated permutations, and a subset dynamic program costing
//! `O(2^N N)` ring multiplications. The DP is validated against the naive
//! path before being used anywhere else.

use itertools::Itertools;

use crate::par::par_map;

/// Minimal associative-ring contract: the evaluators only need zero,
/// addition, negation and multiplication.
pub trait Ring: Sync {
    type Elem: Clone + PartialEq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
}

/// Signed sum over all `N!` orderings, products evaluated left to right.
/// Permutations are enumerated in lexicographic order.
pub fn s_eval_naive<R: Ring>(ring: &R, args: &[R::Elem]) -> R::Elem {
    let n = args.len();
    assert!(n >= 1, "s_N needs at least one argument");
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let partials = par_map(perms, |perm| {
        let mut prod = args[perm[0]].clone();
        for &i in &perm[1..] {
            prod = ring.mul(&prod, &args[i]);
        }
        if permutation_sign(&perm) < 0 {
            ring.neg(&prod)
        } else {
            prod
        }
    });
    let mut acc = ring.zero();
    for t in partials {
        acc = ring.add(&acc, &t);
    }
    acc
}

/// Same value as [`s_eval_naive`], by dynamic programming over subsets:
/// `T({i}) = X_i` and
/// `T(S) = sum_{i in S} (-1)^(#{j in S : j > i}) T(S \ {i}) . X_i`.
pub fn s_eval_dp<R: Ring>(ring: &R, args: &[R::Elem]) -> R::Elem {
    let n = args.len();
    assert!(n >= 1 && n <= 16, "subset DP supports 1 <= N <= 16");
    let full: usize = (1 << n) - 1;
    let mut table: Vec<Option<R::Elem>> = vec![None; full + 1];
    for (i, x) in args.iter().enumerate() {
        table[1 << i] = Some(x.clone());
    }
    for size in 2..=n {
        let masks: Vec<usize> = (1..=full)
            .filter(|m: &usize| m.count_ones() as usize == size)
            .collect();
        let layer = par_map(masks.clone(), |mask| {
            let mut acc = ring.zero();
            for i in 0..n {
                if mask & (1 << i) == 0 {
                    continue;
                }
                let rest = mask & !(1 << i);
                let prev = table[rest].as_ref().expect("smaller layer filled");
                let term = ring.mul(prev, &args[i]);
                let larger = (mask >> (i + 1)).count_ones();
                if larger % 2 == 1 {
                    acc = ring.add(&acc, &ring.neg(&term));
                } else {
                    acc = ring.add(&acc, &term);
                }
            }
            acc
        });
        for (mask, val) in masks.into_iter().zip(layer) {
            table[mask] = Some(val);
        }
    }
    table[full].take().expect("full mask filled")
}

/// Parity of a permutation given as a sequence of distinct values.
pub fn permutation_sign(perm: &[usize]) -> i32 {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The Weyl algebra as a [`Ring`].
pub struct DiffOpRing;

impl Ring for DiffOpRing {
    type Elem = crate::weyl::DiffOp;

    fn zero(&self) -> Self::Elem {
        crate::weyl::DiffOp::zero()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.compose(b)
    }
}
