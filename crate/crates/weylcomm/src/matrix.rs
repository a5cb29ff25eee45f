//! Small exact integer matrices; scaffolding for cross-checking the
//! standard-polynomial evaluators (the even standard identity on `n x n`
//! matrices is an external oracle).

use num::bigint::BigInt;
use num::Zero;
use rand::Rng;

use crate::standard::Ring;

/// Dense `n x n` matrix over big integers, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMat {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMat {
    pub fn zero(n: usize) -> Self {
        IntMat {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn from_entries(n: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), n * n);
        IntMat { n, entries }
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.n + c]
    }
}

/// The ring of `n x n` integer matrices.
pub struct IntMatRing {
    n: usize,
}

impl IntMatRing {
    pub fn new(n: usize) -> Self {
        IntMatRing { n }
    }

    pub fn dim(&self) -> usize {
        self.n
    }
}

impl Ring for IntMatRing {
    type Elem = IntMat;

    fn zero(&self) -> IntMat {
        IntMat::zero(self.n)
    }

    fn add(&self, a: &IntMat, b: &IntMat) -> IntMat {
        IntMat {
            n: self.n,
            entries: a
                .entries
                .iter()
                .zip(&b.entries)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    fn neg(&self, a: &IntMat) -> IntMat {
        IntMat {
            n: self.n,
            entries: a.entries.iter().map(|x| -x).collect(),
        }
    }

    fn mul(&self, a: &IntMat, b: &IntMat) -> IntMat {
        let n = self.n;
        let mut out = IntMat::zero(n);
        for i in 0..n {
            for k in 0..n {
                let aik = a.get(i, k);
                if aik.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    let prod = aik * b.get(k, j);
                    out.entries[idx] += prod;
                }
            }
        }
        out
    }
}

/// Uniform random matrix with entries in `[-bound, bound]`.
pub fn random_mat<R: Rng>(ring: &IntMatRing, rng: &mut R, bound: i64) -> IntMat {
    let n = ring.dim();
    let entries = (0..n * n)
        .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
        .collect();
    IntMat::from_entries(n, entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_2x2() {
        let ring = IntMatRing::new(2);
        let a = IntMat::from_entries(2, [1, 2, 3, 4].map(BigInt::from).to_vec());
        let b = IntMat::from_entries(2, [0, 1, 1, 0].map(BigInt::from).to_vec());
        let c = ring.mul(&a, &b);
        assert_eq!(c, IntMat::from_entries(2, [2, 1, 4, 3].map(BigInt::from).to_vec()));
    }
}
