use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::words::{Generator, Word};

/// Index of the basic commutator [x_i, x_j], i < j, in lexicographic order.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// x₁^{e₁}⋯x_N^{e_N}·∏_{i<j}[x_i,x_j]^{c_ij} in the free class-2 nilpotent group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Class2Elt {
    pub e: Vec<BigInt>,
    pub c: Vec<BigInt>,
}

impl Class2Elt {
    pub fn identity(n: usize) -> Self {
        Class2Elt {
            e: vec![BigInt::zero(); n],
            c: vec![BigInt::zero(); pair_count(n)],
        }
    }

    pub fn rank(&self) -> usize {
        self.e.len()
    }

    pub fn basis(n: usize, i: usize, exp: i64) -> Self {
        let mut x = Self::identity(n);
        x.e[i] = BigInt::from(exp);
        x
    }

    pub fn from_parts(e: Vec<BigInt>, c: Vec<BigInt>) -> Self {
        assert_eq!(c.len(), pair_count(e.len()));
        Class2Elt { e, c }
    }

    pub fn is_identity(&self) -> bool {
        self.e.iter().chain(&self.c).all(Zero::is_zero)
    }

    pub fn mul(&self, y: &Self) -> Self {
        let n = self.rank();
        let mut c: Vec<BigInt> = self.c.iter().zip(&y.c).map(|(a, b)| a + b).collect();
        for i in 0..n {
            if y.e[i].is_zero() {
                continue;
            }
            for j in i + 1..n {
                if !self.e[j].is_zero() {
                    c[pair_index(n, i, j)] -= &y.e[i] * &self.e[j];
                }
            }
        }
        let e = self.e.iter().zip(&y.e).map(|(a, b)| a + b).collect();
        Class2Elt { e, c }
    }

    /// `(k e, k c − C(k,2) e_i e_j)`, valid for every integer k.
    pub fn pow(&self, k: &BigInt) -> Self {
        let n = self.rank();
        let binom = k * (k - BigInt::one()) / 2;
        let mut c: Vec<BigInt> = self.c.iter().map(|x| x * k).collect();
        for i in 0..n {
            for j in i + 1..n {
                c[pair_index(n, i, j)] -= &binom * &self.e[i] * &self.e[j];
            }
        }
        Class2Elt {
            e: self.e.iter().map(|x| x * k).collect(),
            c,
        }
    }

    pub fn inv(&self) -> Self {
        self.pow(&BigInt::from(-1))
    }

    /// The concatenated coordinate vector (e, c).
    pub fn coords(&self) -> Vec<BigInt> {
        self.e.iter().chain(&self.c).cloned().collect()
    }
}

/// The image of `w` in F/Γ₃(F), F free on `gens`.
pub fn collect_class2(w: &Word, gens: &[Generator]) -> Result<Class2Elt> {
    let n = gens.len();
    let mut acc = Class2Elt::identity(n);
    for l in w.letters() {
        let i = gens
            .iter()
            .position(|g| *g == l.gen)
            .ok_or_else(|| Error::UnknownGenerator(l.gen.to_string()))?;
        acc = acc.mul(&Class2Elt::basis(n, i, l.exp));
    }
    Ok(acc)
}
