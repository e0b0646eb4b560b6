//! The homomorphisms between the quotients, and verification suites checking
//! the commutative diagrams, exactness, rigidity and non-extension facts.

use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::Class2Quotient;
use crate::par::{rng_for, Exec};
use crate::presentations::{
    act_outer, mixed_generators, presentation_mixed, presentation_punctured, presentation_quotient,
    punctured_generators, QuotientKind,
};
use crate::quotients::{
    eval_abel, eval_gk_surface, eval_in, eval_mixed_gamma3, eval_punctured_gamma3,
    is_central_mixed, mk_reduce, project_hsigma, AbelElt, Gamma3MixedElt, GkSurfaceElt, GroupElt,
    PuncturedGamma3Elt,
};
use crate::random::{random_mixed_elt, random_punctured_elt, random_word, random_word_pair};
use crate::words::{commutator, Family, Generator, GroupParams, Word};

/// ψ at the presentation level: S ∪ AB ∪ Z ↦ 1, tilde generators fixed.
pub fn psi_word(w: &Word) -> Word {
    Word::from_pairs(
        w.letters()
            .iter()
            .filter(|l| l.gen.family.is_outer())
            .map(|l| (l.gen, l.exp)),
    )
}

/// ρ for B_n(Σ_g), on words over S̃ ∪ ÃB. The target is B_n(Σ_g)/Γ₃ written
/// as a [`PuncturedGamma3Elt`] with no punctures, so its `s`, `a_i`, `b_i`
/// stand for σ̃, ã_i, b̃_i.
pub fn eval_base_gamma3(w: &Word, params: &GroupParams) -> Result<PuncturedGamma3Elt> {
    w.validate(params)?;
    let base = GroupParams::new(params.n.max(1), 0, params.g)?;
    let relabeled = w
        .letters()
        .iter()
        .map(|l| {
            let family = match l.gen.family {
                Family::SigmaTilde => Family::Sigma,
                Family::ATilde => Family::A,
                Family::BTilde => Family::B,
                _ => {
                    return Err(Error::Alphabet {
                        letter: l.gen.to_string(),
                        context: "B_n(Σ_g) words (S̃ ∪ ÃB)".into(),
                    })
                }
            };
            Ok((Generator::new(family, l.gen.index), l.exp))
        })
        .collect::<Result<Vec<_>>>()?;
    eval_punctured_gamma3(&Word::from_pairs(relabeled), &base)
}

/// ψ̄: B_{k,n}(Σ_g)/Γ₃ → B_n(Σ_g)/Γ₃, keeping (q, m̃, ñ).
pub fn psi_bar(x: &Gamma3MixedElt) -> PuncturedGamma3Elt {
    PuncturedGamma3Elt {
        p: x.q,
        qz: Vec::new(),
        m: x.mt.clone(),
        nv: x.nt.clone(),
    }
}

/// The element of G_k(Σ_g) = ker ψ̄ that `x` is, if it lies in the kernel.
pub fn kernel_certificate_psi_bar(x: &Gamma3MixedElt) -> Option<GkSurfaceElt> {
    psi_bar(x).is_identity().then(|| GkSurfaceElt {
        p: x.p,
        r: x.r,
        m: x.m.clone(),
        nv: x.nv.clone(),
    })
}

/// The inclusion G_k(Σ_g) → B_{k,n}(Σ_g)/Γ₃.
pub fn iota_gk(y: &GkSurfaceElt) -> Gamma3MixedElt {
    let g = y.m.len();
    Gamma3MixedElt {
        p: y.p,
        r: y.r,
        m: y.m.clone(),
        nv: y.nv.clone(),
        ..Gamma3MixedElt::identity(g)
    }
}

/// r_{k,n}: B_{k,n} → B_{k,n}/Γ₂ ≅ Z³, on words over S ∪ S̃ ∪ Z.
pub fn r_kn(w: &Word, params: &GroupParams) -> Result<AbelElt> {
    let disk = GroupParams::new(params.k, params.n, 0)?;
    eval_abel(w, &disk, QuotientKind::MixedAbel)
}

/// α_{k,n}: B_{k,n}/Γ₂ → B_{k,n}(Σ_g)/Γ₃, (σ, σ̃, ζ) ↦ (σ, σ̃, ζ).
pub fn alpha_kn(v: &AbelElt, params: &GroupParams) -> Result<Gamma3MixedElt> {
    params.require(
        params.k >= 3 && params.n >= 3 && params.g >= 1,
        "k, n >= 3 and g >= 1",
    )?;
    if v.kind != QuotientKind::MixedAbel || v.free.len() != 3 || !v.torsion2.is_empty() {
        return Err(Error::Invalid(
            "α_{k,n} takes an element of the genus-0 abelianisation Z³".into(),
        ));
    }
    Ok(Gamma3MixedElt::central(
        params.g, v.free[0], v.free[1], v.free[2],
    ))
}

/// An element σ^s ζ^z of G_k ≅ Z².
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct GkElt {
    pub s: i64,
    pub z: i64,
}

impl GkElt {
    pub fn is_identity(&self) -> bool {
        self.s == 0 && self.z == 0
    }
}

impl fmt::Display for GkElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.s, self.z)
    }
}

/// p_k: B_k(D_n) → G_k, on words over S ∪ Z. Requires k ≥ 2.
pub fn p_k(w: &Word, params: &GroupParams) -> Result<GkElt> {
    params.require(params.k >= 2, "k >= 2")?;
    w.validate(params)?;
    let mut out = GkElt::default();
    for l in w.letters() {
        let slot = match l.gen.family {
            Family::Sigma => &mut out.s,
            Family::Zeta => &mut out.z,
            _ => {
                return Err(Error::Alphabet {
                    letter: l.gen.to_string(),
                    context: "B_k(D_n) words (S ∪ Z)".into(),
                })
            }
        };
        *slot = slot
            .checked_add(l.exp)
            .ok_or(Error::Overflow("G_k arithmetic"))?;
    }
    Ok(out)
}

/// γ_k: G_k → G_k(Σ_g), onto the centre.
pub fn gamma_k(v: GkElt, params: &GroupParams) -> Result<GkSurfaceElt> {
    params.require(
        params.k >= 3 && params.n >= 3 && params.g >= 1,
        "k, n >= 3 and g >= 1",
    )?;
    Ok(GkSurfaceElt::central(params.g, v.s, v.z))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub params: GroupParams,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    fn new(suite: &str, mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        VerificationReport {
            suite: suite.to_string(),
            checks,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn pass_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }
}

/// A failed check's evidence.
struct Witness(String);

impl From<Error> for Witness {
    fn from(e: Error) -> Self {
        Witness(format!("error: {e}"))
    }
}

type Outcome = std::result::Result<(), Witness>;

fn ensure(ok: bool, witness: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Witness(witness()))
    }
}

fn ensure_eq<T: PartialEq + fmt::Display>(context: &str, lhs: &T, rhs: &T) -> Outcome {
    ensure(lhs == rhs, || format!("{context}: {lhs} != {rhs}"))
}

fn record(id: String, params: &GroupParams, outcome: Outcome) -> CheckResult {
    CheckResult {
        id,
        params: *params,
        passed: outcome.is_ok(),
        witness: outcome.err().map(|w| w.0),
    }
}

/// Runs `samples` seeded checks, job i drawing from stream i of `seed`.
fn sampled<F>(
    prefix: &str,
    params: &GroupParams,
    seed: u64,
    samples: usize,
    exec: Exec,
    f: F,
) -> Vec<CheckResult>
where
    F: Fn(&mut rand_chacha::ChaCha8Rng) -> Outcome + Sync + Send,
{
    exec.map(samples, |i| {
        let mut rng = rng_for(seed, i as u64);
        record(format!("{prefix}.{i:05}"), params, f(&mut rng))
    })
}

fn mixed_regime(params: &GroupParams) -> Result<()> {
    params.require(
        params.k >= 3 && params.n >= 3 && params.g >= 1,
        "k, n >= 3 and g >= 1",
    )
}

const WORD_LEN: usize = 12;

/// Maps the diagram suite checks; replaceable for negative controls.
#[derive(Clone, Copy)]
pub struct DiagramMaps {
    pub alpha: fn(&AbelElt, &GroupParams) -> Result<Gamma3MixedElt>,
}

impl Default for DiagramMaps {
    fn default() -> Self {
        DiagramMaps { alpha: alpha_kn }
    }
}

pub fn verify_diagram(
    params: &GroupParams,
    seed: u64,
    samples: usize,
    exec: Exec,
) -> Result<VerificationReport> {
    verify_diagram_with(params, seed, samples, exec, &DiagramMaps::default())
}

pub fn verify_diagram_with(
    params: &GroupParams,
    seed: u64,
    samples: usize,
    exec: Exec,
    maps: &DiagramMaps,
) -> Result<VerificationReport> {
    mixed_regime(params)?;
    let p = *params;
    let g = p.g;
    let disk = mixed_generators(&GroupParams::new(p.k, p.n, 0)?);
    let omega = mixed_generators(&p);
    let inner = punctured_generators(&p);
    let s_z = punctured_generators(&GroupParams::new(p.k, p.n, 0)?);
    let alpha = maps.alpha;

    let alpha_square = |w: &Word| -> Outcome {
        let lhs = alpha(&r_kn(w, &p)?, &p)?;
        let rhs = eval_mixed_gamma3(w, &p)?;
        ensure_eq(&format!("α∘r vs ρ∘ι on {w}"), &lhs, &rhs)
    };
    let psi_square = |w: &Word| -> Outcome {
        let lhs = psi_bar(&eval_mixed_gamma3(w, &p)?);
        let rhs = eval_base_gamma3(&psi_word(w), &p)?;
        ensure_eq(&format!("ψ̄∘ρ vs ρ∘ψ on {w}"), &lhs, &rhs)
    };
    let kernel_word = |w: &Word| -> Outcome {
        let cert = kernel_certificate_psi_bar(&eval_mixed_gamma3(w, &p)?);
        let phi = eval_gk_surface(w, &p)?;
        ensure(cert.as_ref() == Some(&phi), || {
            format!("ρ({w}) should lie in ker ψ̄ as {phi}, certificate {cert:?}")
        })
    };

    let mut checks = Vec::new();
    for x in &disk {
        checks.push(record(
            format!("alpha.gen.{x}"),
            &p,
            alpha_square(&x.word()),
        ));
    }
    checks.extend(sampled("alpha.word", &p, seed, samples, exec, |rng| {
        alpha_square(&random_word(rng, &disk, WORD_LEN))
    }));
    for x in &omega {
        checks.push(record(format!("psi.gen.{x}"), &p, psi_square(&x.word())));
    }
    checks.extend(sampled("psi.word", &p, seed ^ 1, samples, exec, |rng| {
        psi_square(&random_word(rng, &omega, WORD_LEN))
    }));

    let base = GroupParams::new(p.n, 0, g)?;
    let mut targets = vec![(Generator::sigma_tilde(1), Generator::sigma(1))];
    for i in 1..=g {
        targets.push((Generator::a_tilde(i), Generator::a(i)));
        targets.push((Generator::b_tilde(i), Generator::b(i)));
    }
    for (src, tgt) in targets {
        let outcome = (|| -> Outcome {
            let hit = psi_bar(&eval_mixed_gamma3(&src.word(), &p)?);
            let target = eval_punctured_gamma3(&tgt.word(), &base)?;
            ensure_eq(&format!("ψ̄(ρ({src})) vs target generator"), &hit, &target)
        })();
        checks.push(record(format!("psi.surjective.{src}"), &p, outcome));
    }

    checks.extend(sampled("exact.elt", &p, seed ^ 2, samples, exec, |rng| {
        let x = random_mixed_elt(rng, g, 4);
        let in_kernel = x.q == 0 && x.mt.iter().chain(&x.nt).all(|&c| c == 0);
        let cert = kernel_certificate_psi_bar(&x);
        ensure(cert.is_some() == in_kernel, || {
            format!("{x}: in kernel {in_kernel}, certificate {cert:?}")
        })?;
        if let Some(c) = cert {
            ensure_eq("ι(certificate) vs element", &iota_gk(&c), &x)?;
        }
        Ok(())
    }));
    checks.extend(sampled("exact.word", &p, seed ^ 3, samples, exec, |rng| {
        kernel_word(&random_word(rng, &inner, WORD_LEN))
    }));

    for x in &s_z {
        let outcome = (|| -> Outcome {
            let lhs = gamma_k(p_k(&x.word(), &p)?, &p)?;
            ensure_eq(
                &format!("γ∘p vs Φ∘ι on {x}"),
                &lhs,
                &eval_gk_surface(&x.word(), &p)?,
            )
        })();
        checks.push(record(format!("gamma.gen.{x}"), &p, outcome));
    }
    for s in -3..=3 {
        for z in -3..=3 {
            let outcome = (|| -> Outcome {
                let w = Word::from_pairs([(Generator::sigma(1), s), (Generator::zeta(1), z)]);
                let lhs = iota_gk(&gamma_k(GkElt { s, z }, &p)?);
                let rhs = alpha(&r_kn(&w, &p)?, &p)?;
                ensure_eq(&format!("ι∘γ vs α on σ^{s} ζ^{z}"), &lhs, &rhs)
            })();
            checks.push(record(format!("gamma.alpha.{s:+}.{z:+}"), &p, outcome));
        }
    }
    Ok(VerificationReport::new("diagram", checks))
}

/// Centrality predicate the rigidity suite checks; replaceable for negative
/// controls.
#[derive(Clone, Copy)]
pub struct RigidityMaps {
    pub is_central: fn(&Gamma3MixedElt) -> bool,
}

impl Default for RigidityMaps {
    fn default() -> Self {
        RigidityMaps {
            is_central: is_central_mixed,
        }
    }
}

pub fn verify_rigidity(
    params: &GroupParams,
    seed: u64,
    samples: usize,
    exec: Exec,
) -> Result<VerificationReport> {
    verify_rigidity_with(params, seed, samples, exec, &RigidityMaps::default())
}

fn abel_disk(v: [i64; 3], p: &GroupParams) -> Result<AbelElt> {
    let w = Word::from_pairs([
        (Generator::sigma(1), v[0]),
        (Generator::sigma_tilde(1), v[1]),
        (Generator::zeta(1), v[2]),
    ]);
    r_kn(&w, p)
}

pub fn verify_rigidity_with(
    params: &GroupParams,
    seed: u64,
    samples: usize,
    exec: Exec,
    maps: &RigidityMaps,
) -> Result<VerificationReport> {
    mixed_regime(params)?;
    let p = *params;
    let g = p.g;
    let images = Gamma3MixedElt::generator_images(g);
    let is_central = maps.is_central;
    let mut checks = Vec::new();

    checks.extend(sampled("center.elt", &p, seed, samples, exec, |rng| {
        let x = random_mixed_elt(rng, g, 4);
        let mut commutes = true;
        for y in &images {
            commutes &= x.commutator(y)?.is_identity();
        }
        ensure(is_central(&x) == commutes, || {
            format!(
                "{x}: claimed central {}, commutes with all generators {commutes}",
                is_central(&x)
            )
        })?;
        if commutes {
            let pre = alpha_kn(&abel_disk([x.p, x.q, x.r], &p)?, &p)?;
            ensure_eq("central element vs α-image", &pre, &x)?;
        }
        Ok(())
    }));

    let basis = [
        ("s1", Generator::sigma(1)),
        ("ts1", Generator::sigma_tilde(1)),
        ("z1", Generator::zeta(1)),
    ];
    for (i, (name, gen)) in basis.iter().enumerate() {
        let outcome = (|| -> Outcome {
            let mut v = [0; 3];
            v[i] = 1;
            let img = alpha_kn(&abel_disk(v, &p)?, &p)?;
            ensure_eq(
                &format!("α(e{}) vs ρ({name})", i + 1),
                &img,
                &eval_mixed_gamma3(&gen.word(), &p)?,
            )
        })();
        checks.push(record(format!("center.basis.{name}"), &p, outcome));
    }
    let grid: Vec<[i64; 3]> = (-3..=3)
        .flat_map(|a| (-3..=3).flat_map(move |b| (-3..=3).map(move |c| [a, b, c])))
        .collect();
    checks.extend(exec.map(grid.len(), |i| {
        let v = grid[i];
        let outcome = (|| -> Outcome {
            let x = alpha_kn(&abel_disk(v, &p)?, &p)?;
            let mut commutes = true;
            for y in &images {
                commutes &= x.commutator(y)?.is_identity();
            }
            ensure(commutes, || format!("α{v:?} = {x} is not central"))?;
            ensure(
                [x.p, x.q, x.r] == v && x.is_identity() == (v == [0; 3]),
                || format!("α{v:?} = {x} does not recover its input"),
            )
        })();
        record(
            format!("center.alpha.{:+}.{:+}.{:+}", v[0], v[1], v[2]),
            &p,
            outcome,
        )
    }));

    let unit = [-1i64, 0, 1];
    for q in -5..=5 {
        let outcome = (|| -> Outcome {
            for code in 0..729usize {
                let mut d = code;
                let mut c = [0i64; 6];
                for slot in &mut c {
                    *slot = unit[d % 3];
                    d /= 3;
                }
                let mut x = Gamma3MixedElt::central(g, c[0], q, c[1]);
                x.m[0] = c[2];
                x.mt[0] = c[3];
                x.nv[0] = c[4];
                x.nt[0] = c[5];
                let in_kernel = c.iter().all(|&v| v == 0);
                ensure(project_hsigma(&x).is_identity() == in_kernel, || {
                    format!("{x}: in ⟨σ̃⟩ {in_kernel}, projection {}", project_hsigma(&x))
                })?;
            }
            Ok(())
        })();
        checks.push(record(format!("hsigma.kernel.q{q:+}"), &p, outcome));
    }
    checks.extend(sampled("hsigma.hom", &p, seed ^ 4, samples, exec, |rng| {
        let (x, y) = (random_mixed_elt(rng, g, 4), random_mixed_elt(rng, g, 4));
        let lhs = project_hsigma(&x.mul(&y)?);
        let rhs = project_hsigma(&x).mul(&project_hsigma(&y))?;
        ensure_eq(&format!("projection of {x} · {y}"), &lhs, &rhs)
    }));

    for (family, name) in [
        (Family::Sigma, "sigma"),
        (Family::SigmaTilde, "sigma-tilde"),
        (Family::Zeta, "zeta"),
    ] {
        let outcome = (|| -> Outcome {
            let first = eval_mixed_gamma3(&Generator::new(family, 1).word(), &p)?;
            for i in 2..=p.family_size(family) {
                let x = eval_mixed_gamma3(&Generator::new(family, i).word(), &p)?;
                ensure_eq(&format!("image of index {i} vs index 1"), &x, &first)?;
            }
            Ok(())
        })();
        checks.push(record(format!("collapse.{name}"), &p, outcome));
    }

    let outcome = (|| -> Outcome {
        let span = 2i64;
        let len = 2 + 2 * g;
        let width = (2 * span + 1) as usize;
        for code in 0..width.pow(len as u32) {
            let mut d = code;
            let c: Vec<i64> = (0..len)
                .map(|_| {
                    let v = (d % width) as i64 - span;
                    d /= width;
                    v
                })
                .collect();
            let y = GkSurfaceElt {
                p: c[0],
                r: c[1],
                m: c[2..2 + g].to_vec(),
                nv: c[2 + g..].to_vec(),
            };
            let mut qz = vec![0; p.n];
            qz[0] = y.r;
            let lift = PuncturedGamma3Elt {
                p: y.p,
                qz,
                m: y.m.clone(),
                nv: y.nv.clone(),
            };
            ensure_eq("mk_reduce of the canonical lift", &mk_reduce(&lift)?, &y)?;
        }
        Ok(())
    })();
    checks.push(record("mk.surjective".into(), &p, outcome));
    checks.extend(sampled(
        "mk.injective",
        &p,
        seed ^ 5,
        samples,
        exec,
        |rng| {
            let x = random_punctured_elt(rng, p.n, g, 4);
            let y = if rng.gen_bool(0.5) {
                let mut d = PuncturedGamma3Elt::identity(p.n, g);
                let (i, j) = (rng.gen_range(0..p.n), rng.gen_range(0..p.n));
                let e = rng.gen_range(-3..=3);
                d.qz[i] += e;
                d.qz[j] -= e;
                x.mul(&d)?
            } else {
                random_punctured_elt(rng, p.n, g, 4)
            };
            let quotient = x.mul(&y.inv()?)?;
            let identified = quotient.p == 0
                && quotient.m.iter().chain(&quotient.nv).all(|&c| c == 0)
                && quotient.qz.iter().sum::<i64>() == 0;
            let same = mk_reduce(&x)? == mk_reduce(&y)?;
            ensure(same == identified, || {
                format!("{x} vs {y}: same image {same}, differ by ζ_iζ_j⁻¹ products {identified}")
            })?;
            ensure_eq(
                "mk_reduce(x·y)",
                &mk_reduce(&x.mul(&y)?)?,
                &mk_reduce(&x)?.mul(&mk_reduce(&y)?)?,
            )
        },
    ));
    let inner = punctured_generators(&p);
    checks.extend(sampled("mk.word", &p, seed ^ 6, samples, exec, |rng| {
        let w = random_word(rng, &inner, WORD_LEN);
        let lhs = mk_reduce(&eval_punctured_gamma3(&w, &p)?)?;
        ensure_eq(
            &format!("mk_reduce∘ρ vs Φ on {w}"),
            &lhs,
            &eval_gk_surface(&w, &p)?,
        )
    }));

    Ok(VerificationReport::new("rigidity", checks))
}

pub fn verify_nonextension(params: &GroupParams) -> Result<VerificationReport> {
    params.require(
        params.g >= 1 && params.k >= 2 && params.n >= 1,
        "g >= 1, k >= 2 and n >= 1",
    )?;
    let p = *params;
    let abel = |w: &Word| eval_abel(w, &p, QuotientKind::MixedAbel);
    let mut checks = Vec::new();

    let outcome = (|| -> Outcome {
        let s1 = Generator::sigma(1).word();
        let sq = eval_abel(&s1.pow(2), &p, QuotientKind::PuncturedAbel)?;
        ensure(sq.is_identity(), || {
            format!("σ₁² ↦ {sq} in the abelianisation")
        })?;
        let pk = p_k(&s1.pow(2), &p)?;
        ensure(pk == GkElt { s: 2, z: 0 }, || format!("p_k(σ₁²) = {pk}"))
    })();
    checks.push(record("sigma-square".into(), &p, outcome));

    let outcome = (|| -> Outcome {
        let z = abel(&Generator::zeta(1).word())?;
        ensure(z.is_identity(), || format!("ζ₁ ↦ {z} for g ≥ 1"))
    })();
    checks.push(record("zeta-dies".into(), &p, outcome));

    let outcome = (|| -> Outcome {
        let disk = GroupParams::new(p.k, p.n, 0)?;
        let z = eval_abel(&Generator::zeta(1).word(), &disk, QuotientKind::MixedAbel)?;
        let ones = z.free.iter().filter(|&&c| c == 1).count();
        let zeros = z.free.iter().filter(|&&c| c == 0).count();
        ensure(
            ones == 1 && zeros + 1 == z.free.len() && z.torsion2.is_empty(),
            || format!("ζ₁ ↦ {z} for g = 0, expected a basis element"),
        )
    })();
    checks.push(record("zeta-genus0-control".into(), &p, outcome));

    let outcome = (|| -> Outcome {
        let (ta, b, z) = (Generator::a_tilde(1), Generator::b(1), Generator::zeta(1));
        let acted = act_outer(ta, &b.word())?;
        ensure_eq("ã₁ b₁ ã₁⁻¹", &acted, &b.word().concat(&z.word()))?;
        let conj = Word::product([&ta.word(), &b.word(), &ta.inv_word()]);
        ensure_eq(
            "abelian image of the conjugate",
            &abel(&conj)?,
            &abel(&b.word())?,
        )?;
        ensure_eq(
            "abelian image of the action word",
            &abel(&acted)?,
            &abel(&b.word())?,
        )?;
        let forced = abel(&b.word())?.inv()?.mul(&abel(&acted)?)?;
        ensure_eq("ζ₁ forced by invariance", &forced, &abel(&z.word())?)?;
        ensure(forced.is_identity(), || format!("ζ₁ ↦ {forced}"))
    })();
    checks.push(record("zeta-forced-by-action".into(), &p, outcome));

    Ok(VerificationReport::new("nonextension", checks))
}

/// Every relator of every applicable presentation evaluates to the identity in
/// the matching quotient.
pub fn verify_relators(params: &GroupParams, exec: Exec) -> Result<VerificationReport> {
    let p = *params;
    let mut jobs: Vec<(String, String, Word, QuotientKind)> = Vec::new();
    let mut add = |tag: &str, pres: &crate::presentations::Presentation, kind: QuotientKind| {
        for (i, (r, label)) in pres.relators.iter().zip(&pres.labels).enumerate() {
            jobs.push((format!("{tag}.{i:04}"), label.clone(), r.clone(), kind));
        }
    };
    use QuotientKind::*;
    if p.n >= 1 {
        let mixed = presentation_mixed(&p)?;
        add("mixed.abel", &mixed, MixedAbel);
        if p.k >= 3 && p.n >= 3 {
            add("mixed.gamma3", &mixed, MixedGamma3);
            if p.g >= 1 {
                add("mixed.hsigma", &mixed, HSigma);
            }
        }
    }
    let punct = presentation_punctured(&p);
    add("punctured.abel", &punct, PuncturedAbel);
    if p.k >= 3 {
        add("punctured.gamma3", &punct, PuncturedGamma3);
        if p.n >= 3 && p.g >= 1 {
            add("punctured.gk", &punct, GkSurface);
        }
    }
    for kind in [
        MixedAbel,
        PuncturedAbel,
        MixedGamma3,
        PuncturedGamma3,
        GkSurface,
        HSigma,
    ] {
        if let Ok(pres) = presentation_quotient(&p, kind) {
            add(&format!("quotient.{kind}"), &pres, kind);
        }
    }
    if jobs.is_empty() {
        return Err(p.regime("at least one presentation with a normal form"));
    }
    let checks = exec.map(jobs.len(), |i| {
        let (id, label, r, kind) = &jobs[i];
        let outcome = (|| -> Outcome {
            let x = eval_in(r, &p, *kind)?;
            ensure(x.is_identity(), || format!("relator {label}: {r} ↦ {x}"))
        })();
        record(id.clone(), &p, outcome)
    });
    Ok(VerificationReport::new("relators", checks))
}

/// Normal-form equality against the class-2 collection oracle on random word
/// pairs over the generators of B_{k,n}(Σ_g).
pub fn verify_oracle_agreement(
    params: &GroupParams,
    seed: u64,
    samples: usize,
    exec: Exec,
) -> Result<VerificationReport> {
    params.require(params.k >= 3 && params.n >= 3, "k, n >= 3")?;
    let p = *params;
    let oracle = Class2Quotient::new(&presentation_mixed(&p)?)?;
    let omega = mixed_generators(&p);
    let checks = sampled("pair", &p, seed, samples, exec, |rng| {
        let (u, v) = random_word_pair(rng, &omega, WORD_LEN);
        let (x, y) = (eval_mixed_gamma3(&u, &p)?, eval_mixed_gamma3(&v, &p)?);
        let trivial = oracle.equal(&u, &v)?;
        ensure((x == y) == trivial, || {
            format!("u = {u}, v = {v}: normal forms {x} / {y}, oracle says trivial = {trivial}")
        })
    });
    Ok(VerificationReport::new("oracle-agreement", checks))
}

/// Identity and inverse laws on every coordinate tuple with entries in
/// {−1, 0, 1}, and associativity on `samples` triples drawn from that grid.
pub fn verify_group_laws(
    params: &GroupParams,
    seed: u64,
    samples: usize,
    exec: Exec,
) -> Result<VerificationReport> {
    params.require(params.k >= 3 && params.n >= 3, "k, n >= 3")?;
    let p = *params;
    let g = p.g;
    let len = 3 + 4 * g;
    let from_code = |mut code: usize| {
        let c: Vec<i64> = (0..len)
            .map(|_| {
                let v = (code % 3) as i64 - 1;
                code /= 3;
                v
            })
            .collect();
        Gamma3MixedElt {
            p: c[0],
            q: c[1],
            r: c[2],
            m: c[3..3 + g].to_vec(),
            mt: c[3 + g..3 + 2 * g].to_vec(),
            nv: c[3 + 2 * g..3 + 3 * g].to_vec(),
            nt: c[3 + 3 * g..].to_vec(),
        }
    };
    let total = 3usize.pow(len as u32);
    let mut checks = exec.map(total, |i| {
        let x = from_code(i);
        let outcome = (|| -> Outcome {
            let e = x.identity_like();
            ensure_eq("1·x", &e.mul(&x)?, &x)?;
            ensure_eq("x·1", &x.mul(&e)?, &x)?;
            let xi = x.inv()?;
            ensure(
                x.mul(&xi)?.is_identity() && xi.mul(&x)?.is_identity(),
                || format!("{x} has no two-sided inverse {xi}"),
            )
        })();
        record(format!("unit-inverse.{i:07}"), &p, outcome)
    });
    checks.extend(sampled("assoc", &p, seed, samples, exec, |rng| {
        let [x, y, z] = [0; 3].map(|_| from_code(rng.gen_range(0..total)));
        let lhs = x.mul(&y)?.mul(&z)?;
        let rhs = x.mul(&y.mul(&z)?)?;
        ensure_eq(&format!("({x})({y})({z}) bracketings"), &lhs, &rhs)
    }));
    Ok(VerificationReport::new("group-laws", checks))
}

/// [x, [y, z]] = 1 in B_{k,n}(Σ_g)/Γ₃ for random words x, y, z.
pub fn verify_witt_hall(
    params: &GroupParams,
    seed: u64,
    samples: usize,
    exec: Exec,
) -> Result<VerificationReport> {
    params.require(params.k >= 3 && params.n >= 3, "k, n >= 3")?;
    let p = *params;
    let omega = mixed_generators(&p);
    let checks = sampled("triple", &p, seed, samples, exec, |rng| {
        let [x, y, z] = [0; 3].map(|_| random_word(rng, &omega, WORD_LEN));
        let w = commutator(&x, &commutator(&y, &z));
        let img = eval_mixed_gamma3(&w, &p)?;
        ensure(img.is_identity(), || format!("[{x}, [{y}, {z}]] ↦ {img}"))
    });
    Ok(VerificationReport::new("witt-hall", checks))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Relators,
    Diagram,
    Rigidity,
    Nonextension,
    OracleAgreement,
    GroupLaws,
    WittHall,
}

impl Suite {
    /// The suites `verify --suite all` runs.
    pub const ALL: [Suite; 5] = [
        Suite::Relators,
        Suite::Diagram,
        Suite::Rigidity,
        Suite::Nonextension,
        Suite::OracleAgreement,
    ];

    pub fn run(
        self,
        params: &GroupParams,
        seed: u64,
        samples: usize,
        exec: Exec,
    ) -> Result<VerificationReport> {
        match self {
            Suite::Relators => verify_relators(params, exec),
            Suite::Diagram => verify_diagram(params, seed, samples, exec),
            Suite::Rigidity => verify_rigidity(params, seed, samples, exec),
            Suite::Nonextension => verify_nonextension(params),
            Suite::OracleAgreement => verify_oracle_agreement(params, seed, samples, exec),
            Suite::GroupLaws => verify_group_laws(params, seed, samples, exec),
            Suite::WittHall => verify_witt_hall(params, seed, samples, exec),
        }
    }
}
