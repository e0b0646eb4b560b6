use std::fmt;

use super::{add, dot, join_factors, push_factor, same_shape, sub, vadd, vneg, GroupElt};
use crate::error::Result;
use crate::words::{Family, GroupParams, Word};

/// Element `σ^p σ̃^q ζ^r ∏ a_i^{m_i} ã_i^{m̃_i} ∏ b_i^{n_i} b̃_i^{ñ_i}` of
/// B_{k,n}(Σ_g)/Γ₃. The tuple is a unique normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gamma3MixedElt {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub m: Vec<i64>,
    pub mt: Vec<i64>,
    pub nv: Vec<i64>,
    pub nt: Vec<i64>,
}

impl Gamma3MixedElt {
    pub fn identity(g: usize) -> Self {
        Gamma3MixedElt {
            p: 0,
            q: 0,
            r: 0,
            m: vec![0; g],
            mt: vec![0; g],
            nv: vec![0; g],
            nt: vec![0; g],
        }
    }

    pub fn genus(&self) -> usize {
        self.m.len()
    }

    pub fn central(g: usize, p: i64, q: i64, r: i64) -> Self {
        Gamma3MixedElt {
            p,
            q,
            r,
            ..Self::identity(g)
        }
    }

    /// `x^e` for a single generator image (index 0 means σ, σ̃ or ζ).
    pub fn generator_power(g: usize, family: Family, index: usize, e: i64) -> Self {
        let mut x = Self::identity(g);
        let slot = index.saturating_sub(1);
        match family {
            Family::Sigma => x.p = e,
            Family::SigmaTilde => x.q = e,
            Family::Zeta => x.r = e,
            Family::A => x.m[slot] = e,
            Family::ATilde => x.mt[slot] = e,
            Family::B => x.nv[slot] = e,
            Family::BTilde => x.nt[slot] = e,
        }
        x
    }

    /// The 4g + 3 generator images σ, σ̃, ζ, a_i, ã_i, b_i, b̃_i.
    pub fn generator_images(g: usize) -> Vec<Self> {
        let mut out = vec![
            Self::generator_power(g, Family::Sigma, 0, 1),
            Self::generator_power(g, Family::SigmaTilde, 0, 1),
            Self::generator_power(g, Family::Zeta, 0, 1),
        ];
        for i in 1..=g {
            for fam in [Family::A, Family::ATilde, Family::B, Family::BTilde] {
                out.push(Self::generator_power(g, fam, i, 1));
            }
        }
        out
    }

    fn check_shape(&self, o: &Self) -> Result<()> {
        same_shape(&[
            (self.m.len(), o.m.len()),
            (self.mt.len(), o.mt.len()),
            (self.nv.len(), o.nv.len()),
            (self.nt.len(), o.nt.len()),
        ])
    }
}

impl GroupElt for Gamma3MixedElt {
    /// Collecting x's b-block past y's a-block produces the central terms
    /// [b_i, a_i] = σ⁻², [b̃_i, ã_i] = σ̃⁻², [b_i, ã_i] = [b̃_i, a_i] = ζ⁻¹.
    fn mul(&self, y: &Self) -> Result<Self> {
        self.check_shape(y)?;
        let x = self;
        let p = sub(add(x.p, y.p)?, super::mul(2, dot(&x.nv, &y.m)?)?)?;
        let q = sub(add(x.q, y.q)?, super::mul(2, dot(&x.nt, &y.mt)?)?)?;
        let r = sub(sub(add(x.r, y.r)?, dot(&x.nv, &y.mt)?)?, dot(&x.nt, &y.m)?)?;
        Ok(Gamma3MixedElt {
            p,
            q,
            r,
            m: vadd(&x.m, &y.m)?,
            mt: vadd(&x.mt, &y.mt)?,
            nv: vadd(&x.nv, &y.nv)?,
            nt: vadd(&x.nt, &y.nt)?,
        })
    }

    fn inv(&self) -> Result<Self> {
        let x = self;
        let two = |v: i64| super::mul(2, v);
        Ok(Gamma3MixedElt {
            p: sub(super::neg(x.p)?, two(dot(&x.nv, &x.m)?)?)?,
            q: sub(super::neg(x.q)?, two(dot(&x.nt, &x.mt)?)?)?,
            r: sub(
                sub(super::neg(x.r)?, dot(&x.nv, &x.mt)?)?,
                dot(&x.nt, &x.m)?,
            )?,
            m: vneg(&x.m)?,
            mt: vneg(&x.mt)?,
            nv: vneg(&x.nv)?,
            nt: vneg(&x.nt)?,
        })
    }

    fn identity_like(&self) -> Self {
        Self::identity(self.genus())
    }

    fn is_identity(&self) -> bool {
        self.p == 0
            && self.q == 0
            && self.r == 0
            && [&self.m, &self.mt, &self.nv, &self.nt]
                .iter()
                .all(|v| v.iter().all(|&c| c == 0))
    }
}

impl fmt::Display for Gamma3MixedElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = Vec::new();
        push_factor(&mut out, "s", self.p);
        push_factor(&mut out, "ts", self.q);
        push_factor(&mut out, "z", self.r);
        for i in 0..self.genus() {
            push_factor(&mut out, &format!("a{}", i + 1), self.m[i]);
            push_factor(&mut out, &format!("ta{}", i + 1), self.mt[i]);
        }
        for i in 0..self.genus() {
            push_factor(&mut out, &format!("b{}", i + 1), self.nv[i]);
            push_factor(&mut out, &format!("tb{}", i + 1), self.nt[i]);
        }
        join_factors(f, &out)
    }
}

/// Central iff every a/ã/b/b̃ exponent vanishes.
pub fn is_central_mixed(x: &Gamma3MixedElt) -> bool {
    [&x.m, &x.mt, &x.nv, &x.nt]
        .iter()
        .all(|v| v.iter().all(|&c| c == 0))
}

/// The quotient map ρ_{k,n}: σ_i ↦ σ, σ̃_i ↦ σ̃, ζ_i ↦ ζ, surface generators to
/// themselves. Refuses k < 3 or n < 3.
pub fn eval_mixed_gamma3(w: &Word, params: &GroupParams) -> Result<Gamma3MixedElt> {
    params.require(params.k >= 3 && params.n >= 3, "k, n >= 3")?;
    w.validate(params)?;
    let g = params.g;
    w.letters()
        .iter()
        .try_fold(Gamma3MixedElt::identity(g), |acc, l| {
            acc.mul(&Gamma3MixedElt::generator_power(
                g,
                l.gen.family,
                l.gen.index,
                l.exp,
            ))
        })
}

/// Element of H_Σ = (B_{k,n}(Σ_g)/Γ₃)/⟨σ̃⟩: the mixed normal form without `q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HSigmaElt {
    pub p: i64,
    pub r: i64,
    pub m: Vec<i64>,
    pub mt: Vec<i64>,
    pub nv: Vec<i64>,
    pub nt: Vec<i64>,
}

impl HSigmaElt {
    pub fn identity(g: usize) -> Self {
        HSigmaElt {
            p: 0,
            r: 0,
            m: vec![0; g],
            mt: vec![0; g],
            nv: vec![0; g],
            nt: vec![0; g],
        }
    }
}

pub fn project_hsigma(x: &Gamma3MixedElt) -> HSigmaElt {
    HSigmaElt {
        p: x.p,
        r: x.r,
        m: x.m.clone(),
        mt: x.mt.clone(),
        nv: x.nv.clone(),
        nt: x.nt.clone(),
    }
}

pub fn eval_hsigma(w: &Word, params: &GroupParams) -> Result<HSigmaElt> {
    Ok(project_hsigma(&eval_mixed_gamma3(w, params)?))
}

impl GroupElt for HSigmaElt {
    fn mul(&self, y: &Self) -> Result<Self> {
        let x = self;
        same_shape(&[
            (x.m.len(), y.m.len()),
            (x.mt.len(), y.mt.len()),
            (x.nv.len(), y.nv.len()),
            (x.nt.len(), y.nt.len()),
        ])?;
        let two_nm = super::mul(2, dot(&x.nv, &y.m)?)?;
        Ok(HSigmaElt {
            p: sub(add(x.p, y.p)?, two_nm)?,
            r: sub(sub(add(x.r, y.r)?, dot(&x.nv, &y.mt)?)?, dot(&x.nt, &y.m)?)?,
            m: vadd(&x.m, &y.m)?,
            mt: vadd(&x.mt, &y.mt)?,
            nv: vadd(&x.nv, &y.nv)?,
            nt: vadd(&x.nt, &y.nt)?,
        })
    }

    fn inv(&self) -> Result<Self> {
        let x = self;
        Ok(HSigmaElt {
            p: sub(super::neg(x.p)?, super::mul(2, dot(&x.nv, &x.m)?)?)?,
            r: sub(
                sub(super::neg(x.r)?, dot(&x.nv, &x.mt)?)?,
                dot(&x.nt, &x.m)?,
            )?,
            m: vneg(&x.m)?,
            mt: vneg(&x.mt)?,
            nv: vneg(&x.nv)?,
            nt: vneg(&x.nt)?,
        })
    }

    fn identity_like(&self) -> Self {
        Self::identity(self.m.len())
    }

    fn is_identity(&self) -> bool {
        self.p == 0
            && self.r == 0
            && [&self.m, &self.mt, &self.nv, &self.nt]
                .iter()
                .all(|v| v.iter().all(|&c| c == 0))
    }
}

impl fmt::Display for HSigmaElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = Vec::new();
        push_factor(&mut out, "s", self.p);
        push_factor(&mut out, "z", self.r);
        let g = self.m.len();
        for i in 0..g {
            push_factor(&mut out, &format!("a{}", i + 1), self.m[i]);
            push_factor(&mut out, &format!("ta{}", i + 1), self.mt[i]);
        }
        for i in 0..g {
            push_factor(&mut out, &format!("b{}", i + 1), self.nv[i]);
            push_factor(&mut out, &format!("tb{}", i + 1), self.nt[i]);
        }
        join_factors(f, &out)
    }
}
