//! Brute-force ground truth for finitely presented groups: abelian invariants,
//! Γ₂/Γ₃ invariants and the word problem in G/Γ₃(G).
//!
//! Presentations are treated opaquely: nothing here knows about braids.
//!
//! The normal closure of the relators in F/Γ₃(F) is not a linear subspace of
//! the (e, c) coordinates, since powers and products of relators pick up
//! quadratic corrections. Coordinates are therefore taken relative to a fixed
//! section of the relators' abelian image E: for x with e_x ∈ E,
//! `lin(x) = (e_x, c(x · s(e_x)⁻¹))` where `s(e) = ∏ f_t^{k_t}` over the HNF
//! basis f_t of E. Modulo the commutator rows β(δ_k, e_r), `lin` is additive,
//! so the normal closure becomes the lattice spanned by the `lin(r)` and the
//! β rows.

mod class2;
mod lattice;

pub use class2::{collect_class2, pair_count, pair_index, Class2Elt};
pub use lattice::{lattice_quotient_invariants, smith_invariants, IntLattice, Invariants};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Result;
use crate::presentations::Presentation;
use crate::words::{Generator, Word};

/// Invariant factors of the abelianisation.
pub fn abelian_invariants(pres: &Presentation) -> Result<Invariants> {
    let n = pres.generators.len();
    let rows = pres
        .relators
        .iter()
        .map(|r| Ok(collect_class2(r, &pres.generators)?.e))
        .collect::<Result<Vec<_>>>()?;
    Ok(smith_invariants(&rows, n))
}

/// β(δ_k, v) in the commutator coordinates.
fn beta_unit(n: usize, k: usize, v: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); pair_count(n)];
    for (j, x) in v.iter().enumerate() {
        match j.cmp(&k) {
            std::cmp::Ordering::Greater => out[pair_index(n, k, j)] = x.clone(),
            std::cmp::Ordering::Less => out[pair_index(n, j, k)] = -x,
            std::cmp::Ordering::Equal => {}
        }
    }
    out
}

/// The image of a presented group G in the class-2 world: decides equality in
/// G/Γ₃(G) and reports Γ₂(G)/Γ₃(G).
#[derive(Debug, Clone)]
pub struct Class2Quotient {
    generators: Vec<Generator>,
    abelian_image: IntLattice,
    lattice: IntLattice,
}

impl Class2Quotient {
    pub fn new(pres: &Presentation) -> Result<Self> {
        let gens = pres.generators.clone();
        let n = gens.len();
        let collected = pres
            .relators
            .iter()
            .map(|r| collect_class2(r, &gens))
            .collect::<Result<Vec<_>>>()?;
        let abelian_image = IntLattice::from_rows(n, collected.iter().map(|x| x.e.clone()));
        let mut q = Class2Quotient {
            generators: gens,
            abelian_image,
            lattice: IntLattice::zero(n + pair_count(n)),
        };
        let mut rows = Vec::new();
        for x in &collected {
            rows.push(q.lin(x).expect("relator lies in its own abelian image"));
            for k in 0..n {
                let mut row = vec![BigInt::zero(); n];
                row.extend(beta_unit(n, k, &x.e));
                rows.push(row);
            }
        }
        q.lattice = IntLattice::from_rows(n + pair_count(n), rows);
        Ok(q)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    /// The lattice in Z^{N+M} whose members are the section-normalized
    /// coordinates of the relators' normal closure.
    pub fn lattice(&self) -> &IntLattice {
        &self.lattice
    }

    fn section(&self, coeffs: &[BigInt]) -> Class2Elt {
        let n = self.generators.len();
        let mut s = Class2Elt::identity(n);
        for (f, k) in self.abelian_image.basis().zip(coeffs) {
            let ft = Class2Elt::from_parts(f.to_vec(), vec![BigInt::zero(); pair_count(n)]);
            s = s.mul(&ft.pow(k));
        }
        s
    }

    /// Section-normalized coordinates, or None if `e_x` is outside the
    /// relators' abelian image.
    pub fn lin(&self, x: &Class2Elt) -> Option<Vec<BigInt>> {
        let coeffs = self.abelian_image.coefficients(&x.e)?;
        let central = x.mul(&self.section(&coeffs).inv());
        debug_assert!(central.e.iter().all(Zero::is_zero));
        Some(x.e.iter().chain(&central.c).cloned().collect())
    }

    pub fn contains(&self, x: &Class2Elt) -> bool {
        self.lin(x).is_some_and(|v| self.lattice.contains(&v))
    }

    pub fn is_trivial(&self, w: &Word) -> Result<bool> {
        Ok(self.contains(&collect_class2(w, &self.generators)?))
    }

    pub fn equal(&self, u: &Word, v: &Word) -> Result<bool> {
        self.is_trivial(&u.concat(&v.invert()))
    }

    pub fn gamma2_mod_gamma3(&self) -> Invariants {
        lattice_quotient_invariants(&self.lattice.tail_sublattice(self.generators.len()))
    }
}

pub fn class2_quotient_lattice(pres: &Presentation) -> Result<IntLattice> {
    Ok(Class2Quotient::new(pres)?.lattice)
}

/// Whether `w` is trivial in G/Γ₃(G) for G presented by `pres`.
pub fn is_trivial_class2(pres: &Presentation, w: &Word) -> Result<bool> {
    Class2Quotient::new(pres)?.is_trivial(w)
}

pub fn gamma2_mod_gamma3_invariants(pres: &Presentation) -> Result<Invariants> {
    Ok(Class2Quotient::new(pres)?.gamma2_mod_gamma3())
}
