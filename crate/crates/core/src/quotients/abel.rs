use std::fmt;

use super::{add, push_factor, same_shape, vadd, vneg, GroupElt};
use crate::error::{Error, Result};
use crate::presentations::{presentation_quotient, QuotientKind};
use crate::words::{Family, Generator, GroupParams, Word};

/// Coordinates of an abelianisation, in presentation order. `torsion` marks
/// the Z₂ coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelLayout {
    pub slots: Vec<(Generator, bool)>,
}

impl AbelLayout {
    pub fn new(params: &GroupParams, kind: QuotientKind) -> Result<Self> {
        if !matches!(kind, QuotientKind::MixedAbel | QuotientKind::PuncturedAbel) {
            return Err(Error::Invalid(format!("{kind} is not an abelianisation")));
        }
        let pres = presentation_quotient(params, kind)?;
        let torsion =
            |g: &Generator| params.g >= 1 && matches!(g.family, Family::Sigma | Family::SigmaTilde);
        Ok(AbelLayout {
            slots: pres.generators.iter().map(|g| (*g, torsion(g))).collect(),
        })
    }

    pub fn free_rank(&self) -> usize {
        self.slots.iter().filter(|s| !s.1).count()
    }

    pub fn torsion_rank(&self) -> usize {
        self.slots.iter().filter(|s| s.1).count()
    }

    /// (is_torsion, position within free or torsion2) for a generator's image,
    /// or None when it maps to the identity.
    fn locate(&self, gen: Generator) -> Option<(bool, usize)> {
        let target = match gen.family {
            Family::Sigma | Family::SigmaTilde => Generator::collapsed(gen.family),
            Family::Zeta
                if self
                    .slots
                    .iter()
                    .any(|s| s.0 == Generator::collapsed(Family::Zeta)) =>
            {
                Generator::collapsed(Family::Zeta)
            }
            _ => gen,
        };
        let pos = self.slots.iter().position(|s| s.0 == target)?;
        let torsion = self.slots[pos].1;
        let rank = self.slots[..pos].iter().filter(|s| s.1 == torsion).count();
        Some((torsion, rank))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelElt {
    pub kind: QuotientKind,
    pub free: Vec<i64>,
    pub torsion2: Vec<bool>,
    pub layout: AbelLayout,
}

impl AbelElt {
    pub fn identity(layout: AbelLayout, kind: QuotientKind) -> Self {
        AbelElt {
            kind,
            free: vec![0; layout.free_rank()],
            torsion2: vec![false; layout.torsion_rank()],
            layout,
        }
    }
}

impl GroupElt for AbelElt {
    fn mul(&self, y: &Self) -> Result<Self> {
        same_shape(&[
            (self.free.len(), y.free.len()),
            (self.torsion2.len(), y.torsion2.len()),
        ])?;
        Ok(AbelElt {
            kind: self.kind,
            free: vadd(&self.free, &y.free)?,
            torsion2: self
                .torsion2
                .iter()
                .zip(&y.torsion2)
                .map(|(a, b)| a ^ b)
                .collect(),
            layout: self.layout.clone(),
        })
    }

    fn inv(&self) -> Result<Self> {
        Ok(AbelElt {
            free: vneg(&self.free)?,
            ..self.clone()
        })
    }

    fn identity_like(&self) -> Self {
        Self::identity(self.layout.clone(), self.kind)
    }

    fn is_identity(&self) -> bool {
        self.free.iter().all(|&c| c == 0) && self.torsion2.iter().all(|&t| !t)
    }
}

impl fmt::Display for AbelElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (mut fi, mut ti) = (0, 0);
        let mut out = Vec::new();
        for (gen, torsion) in &self.layout.slots {
            let e = if *torsion {
                ti += 1;
                self.torsion2[ti - 1] as i64
            } else {
                fi += 1;
                self.free[fi - 1]
            };
            push_factor(&mut out, &gen.to_string(), e);
        }
        super::join_factors(f, &out)
    }
}

/// The abelianisation map for `kind` ∈ {MixedAbel, PuncturedAbel}.
pub fn eval_abel(w: &Word, params: &GroupParams, kind: QuotientKind) -> Result<AbelElt> {
    let layout = AbelLayout::new(params, kind)?;
    w.validate(params)?;
    let mut acc = AbelElt::identity(layout, kind);
    for l in w.letters() {
        if kind == QuotientKind::PuncturedAbel && l.gen.family.is_outer() {
            return Err(Error::Alphabet {
                letter: l.gen.to_string(),
                context: "B_k(Σ_{g,n}) words (S ∪ AB ∪ Z)".into(),
            });
        }
        match acc.layout.locate(l.gen) {
            Some((true, i)) => acc.torsion2[i] ^= l.exp.rem_euclid(2) == 1,
            Some((false, i)) => acc.free[i] = add(acc.free[i], l.exp)?,
            None => {}
        }
    }
    Ok(acc)
}
