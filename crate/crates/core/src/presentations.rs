//! Relator sets for the punctured surface braid groups B_k(Σ_{g,n}), the
//! surface braid groups B_n(Σ_g), the mixed groups B_{k,n}(Σ_g), and the
//! collapsed presentations of their abelian and class-2 quotients.
//!
//! Every relation `lhs = rhs` is stored as the single unreduced relator
//! `lhs · rhs⁻¹`. Relators come out in a fixed order: (a.1)…(a.8), then
//! (b.1)…(b.6), then (c.1)…(c.8); inside each family indices ascend, with
//! `a_i` before `b_i` and the tilde generators `σ̃_i`, `ã_i`, `b̃_i` following
//! the generator-list order. Families that are empty for the parameters
//! (S when k = 1, S̃ when n ≤ 1, Z when n = 0, AB and ÃB when g = 0) are
//! suppressed together with every relation that mentions them.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::{commutator, conjugate, Family, Generator, GroupParams, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum QuotientKind {
    MixedFull,
    MixedAbel,
    MixedGamma3,
    PuncturedFull,
    PuncturedAbel,
    PuncturedGamma3,
    BaseFull,
    GkSurface,
    HSigma,
}

impl fmt::Display for QuotientKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub params: GroupParams,
    pub kind: QuotientKind,
    pub generators: Vec<Generator>,
    pub relators: Vec<Word>,
    /// One human-readable tag per relator, e.g. `a.5 i=1`.
    pub labels: Vec<String>,
}

impl Presentation {
    pub fn new(params: GroupParams, kind: QuotientKind, generators: Vec<Generator>) -> Self {
        Presentation {
            params,
            kind,
            generators,
            relators: Vec::new(),
            labels: Vec::new(),
        }
    }

    pub fn push(&mut self, label: String, relator: Word) {
        self.labels.push(label);
        self.relators.push(relator);
    }

    /// Adds the relator `lhs · rhs⁻¹`.
    fn relation(&mut self, label: String, lhs: Word, rhs: &Word) {
        self.push(label, lhs.concat(&rhs.invert()));
    }

    pub fn generator_index(&self, gen: &Generator) -> Option<usize> {
        self.generators.iter().position(|g| g == gen)
    }

    /// Plain-text dump: a `gens:` line, then one relator per line.
    pub fn to_text(&self) -> String {
        let mut out = String::from("gens:");
        for g in &self.generators {
            out.push(' ');
            out.push_str(&g.to_string());
        }
        out.push('\n');
        for r in &self.relators {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": 1,
            "params": self.params,
            "kind": self.kind,
            "generators": self.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "relators": self.relators.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        })
    }
}

fn family_gens(params: &GroupParams, family: Family) -> impl Iterator<Item = Generator> {
    (1..=params.family_size(family)).map(move |i| Generator::new(family, i))
}

/// a_1, b_1, a_2, b_2, … (or the tilde version).
fn surface_gens(params: &GroupParams, tilde: bool) -> Vec<Generator> {
    let (fa, fb) = if tilde {
        (Family::ATilde, Family::BTilde)
    } else {
        (Family::A, Family::B)
    };
    (1..=params.g)
        .flat_map(|i| [Generator::new(fa, i), Generator::new(fb, i)])
        .collect()
}

fn w(g: Generator) -> Word {
    g.word()
}

fn winv(g: Generator) -> Word {
    g.inv_word()
}

fn cat(parts: &[&Word]) -> Word {
    Word::product(parts.iter().copied())
}

/// Relations (a.1)–(a.8) for B_k(Σ_{g,n}).
fn push_inner_relators(pres: &mut Presentation) {
    let params = pres.params;
    let k = params.k;
    let sig = Generator::sigma;
    let ab = surface_gens(&params, false);
    let zs: Vec<Generator> = family_gens(&params, Family::Zeta).collect();
    let ab_z: Vec<Generator> = ab.iter().chain(zs.iter()).copied().collect();

    // (a.1)
    for i in 1..k {
        for j in (i + 2)..k {
            let lhs = cat(&[&w(sig(i)), &w(sig(j))]);
            let rhs = cat(&[&w(sig(j)), &w(sig(i))]);
            pres.relation(format!("a.1 i={i} j={j}"), lhs, &rhs);
        }
    }
    // (a.2)
    for i in 1..k.saturating_sub(1) {
        let lhs = cat(&[&w(sig(i)), &w(sig(i + 1)), &w(sig(i))]);
        let rhs = cat(&[&w(sig(i + 1)), &w(sig(i)), &w(sig(i + 1))]);
        pres.relation(format!("a.2 i={i}"), lhs, &rhs);
    }
    // (a.3)
    for i in 2..k {
        for &c in &ab_z {
            let lhs = cat(&[&w(c), &w(sig(i))]);
            let rhs = cat(&[&w(sig(i)), &w(c)]);
            pres.relation(format!("a.3 i={i} c={c}"), lhs, &rhs);
        }
    }
    if k < 2 {
        return;
    }
    let s1 = w(sig(1));
    let s1i = winv(sig(1));
    // (a.4)
    for &c in &ab_z {
        let lhs = cat(&[&w(c), &s1, &w(c), &s1]);
        let rhs = cat(&[&s1, &w(c), &s1, &w(c)]);
        pres.relation(format!("a.4 c={c}"), lhs, &rhs);
    }
    // (a.5)
    for i in 1..=params.g {
        let (a, b) = (w(Generator::a(i)), w(Generator::b(i)));
        let lhs = cat(&[&a, &s1, &b]);
        let rhs = cat(&[&s1, &b, &s1, &a, &s1]);
        pres.relation(format!("a.5 i={i}"), lhs, &rhs);
    }
    // (a.6): c < d means c ∈ {a_i, b_i}, d ∈ {a_j, b_j}, i < j
    for i in 1..=params.g {
        for j in (i + 1)..=params.g {
            for c in [Generator::a(i), Generator::b(i)] {
                for d in [Generator::a(j), Generator::b(j)] {
                    let conj = cat(&[&s1i, &w(c), &s1]);
                    let lhs = cat(&[&conj, &w(d)]);
                    let rhs = cat(&[&w(d), &conj]);
                    pres.relation(format!("a.6 c={c} d={d}"), lhs, &rhs);
                }
            }
        }
    }
    // (a.7)
    for &z in &zs {
        for &c in &ab {
            let conj = cat(&[&s1i, &w(z), &s1]);
            let lhs = cat(&[&conj, &w(c)]);
            let rhs = cat(&[&w(c), &conj]);
            pres.relation(format!("a.7 z={z} c={c}"), lhs, &rhs);
        }
    }
    // (a.8)
    for (ii, &zi) in zs.iter().enumerate() {
        for &zj in &zs[ii + 1..] {
            let conj = cat(&[&s1i, &w(zi), &s1]);
            let lhs = cat(&[&conj, &w(zj)]);
            let rhs = cat(&[&w(zj), &conj]);
            pres.relation(format!("a.8 i={} j={}", zi.index, zj.index), lhs, &rhs);
        }
    }
}

/// Relations (b.1)–(b.6) for B_n(Σ_g).
fn push_outer_relators(pres: &mut Presentation) {
    let params = pres.params;
    let n = params.n;
    let sig = Generator::sigma_tilde;
    let ab = surface_gens(&params, true);

    for i in 1..n {
        for j in (i + 2)..n {
            let lhs = cat(&[&w(sig(i)), &w(sig(j))]);
            let rhs = cat(&[&w(sig(j)), &w(sig(i))]);
            pres.relation(format!("b.1 i={i} j={j}"), lhs, &rhs);
        }
    }
    for i in 1..n.saturating_sub(1) {
        let lhs = cat(&[&w(sig(i)), &w(sig(i + 1)), &w(sig(i))]);
        let rhs = cat(&[&w(sig(i + 1)), &w(sig(i)), &w(sig(i + 1))]);
        pres.relation(format!("b.2 i={i}"), lhs, &rhs);
    }
    for i in 2..n {
        for &c in &ab {
            let lhs = cat(&[&w(c), &w(sig(i))]);
            let rhs = cat(&[&w(sig(i)), &w(c)]);
            pres.relation(format!("b.3 i={i} c={c}"), lhs, &rhs);
        }
    }
    if n < 2 {
        return;
    }
    let s1 = w(sig(1));
    let s1i = winv(sig(1));
    for &c in &ab {
        let lhs = cat(&[&w(c), &s1, &w(c), &s1]);
        let rhs = cat(&[&s1, &w(c), &s1, &w(c)]);
        pres.relation(format!("b.4 c={c}"), lhs, &rhs);
    }
    for i in 1..=params.g {
        let (a, b) = (w(Generator::a_tilde(i)), w(Generator::b_tilde(i)));
        let lhs = cat(&[&a, &s1, &b]);
        let rhs = cat(&[&s1, &b, &s1, &a, &s1]);
        pres.relation(format!("b.5 i={i}"), lhs, &rhs);
    }
    for i in 1..=params.g {
        for j in (i + 1)..=params.g {
            for c in [Generator::a_tilde(i), Generator::b_tilde(i)] {
                for d in [Generator::a_tilde(j), Generator::b_tilde(j)] {
                    let conj = cat(&[&s1i, &w(c), &s1]);
                    let lhs = cat(&[&conj, &w(d)]);
                    let rhs = cat(&[&w(d), &conj]);
                    pres.relation(format!("b.6 c={c} d={d}"), lhs, &rhs);
                }
            }
        }
    }
}

/// `[x⁻¹, ζ_1⁻¹]`, the conjugator appearing in (c.4)–(c.8).
fn twist(x: Generator) -> Word {
    commutator(&winv(x), &winv(Generator::zeta(1)))
}

/// The word `t x t⁻¹` is equal to in B_{k,n}(Σ_g), for an outer generator
/// `t ∈ S̃ ∪ ÃB` and an inner generator `x ∈ S ∪ AB ∪ Z`, read off the
/// action relations (c.1)–(c.8). Returns the sub-relation label too.
pub fn outer_image(t: Generator, x: Generator) -> Result<(&'static str, Word)> {
    if t.is_collapsed() || !t.family.is_outer() {
        return Err(Error::Alphabet {
            letter: t.to_string(),
            context: "the acting alphabet S̃ ∪ ÃB".into(),
        });
    }
    if x.is_collapsed() || x.family.is_outer() {
        return Err(Error::Alphabet {
            letter: x.to_string(),
            context: "the B_k(Σ_{g,n}) alphabet S ∪ AB ∪ Z".into(),
        });
    }
    let i = t.index;
    let j = x.index;
    let z1 = Generator::zeta(1);
    let out = match (t.family, x.family) {
        (_, Family::Sigma) => ("c.1", w(x)),
        (Family::SigmaTilde, Family::A | Family::B) => ("c.2", w(x)),
        (Family::SigmaTilde, Family::Zeta) => {
            if j == i + 1 {
                ("c.3.1", w(Generator::zeta(i)))
            } else if j == i {
                let zi = Generator::zeta(i);
                (
                    "c.3.2",
                    cat(&[&winv(zi), &w(Generator::zeta(i + 1)), &w(zi)]),
                )
            } else {
                ("c.3.3", w(x))
            }
        }
        (Family::ATilde | Family::BTilde, Family::Zeta) => {
            let base = if t.family == Family::ATilde {
                Generator::a(i)
            } else {
                Generator::b(i)
            };
            let sub = |one: &'static str, other: &'static str| if j == 1 { one } else { other };
            let label = if t.family == Family::ATilde {
                sub("c.4.1", "c.4.3")
            } else {
                sub("c.4.2", "c.4.4")
            };
            if j == 1 {
                (label, conjugate(&w(z1), &cat(&[&w(base), &w(z1)])))
            } else {
                (label, conjugate(&w(x), &twist(base)))
            }
        }
        (Family::ATilde, Family::A) => {
            if j == i {
                ("c.5.1", cat(&[&winv(z1), &w(x), &w(z1)]))
            } else if i > j {
                ("c.5.2", conjugate(&w(x), &twist(Generator::a(i))))
            } else {
                ("c.5.3", w(x))
            }
        }
        (Family::BTilde, Family::B) => {
            if j == i {
                ("c.6.1", cat(&[&winv(z1), &w(x), &w(z1)]))
            } else if i > j {
                ("c.6.2", conjugate(&w(x), &twist(Generator::b(i))))
            } else {
                ("c.6.3", w(x))
            }
        }
        (Family::ATilde, Family::B) => {
            if j == i {
                ("c.7.1", cat(&[&w(x), &w(z1)]))
            } else if i > j {
                ("c.7.2", conjugate(&w(x), &twist(Generator::a(i))))
            } else {
                ("c.7.3", w(x))
            }
        }
        (Family::BTilde, Family::A) => {
            if j == i {
                // transcribed as printed: ζ_1⁻¹ a_i [b_i⁻¹, ζ_1⁻¹]
                ("c.8.1", cat(&[&winv(z1), &w(x), &twist(Generator::b(i))]))
            } else if i > j {
                ("c.8.2", conjugate(&w(x), &twist(Generator::b(i))))
            } else {
                ("c.8.3", w(x))
            }
        }
        _ => unreachable!("alphabets checked above"),
    };
    Ok(out)
}

/// Rewrites `w` (over S ∪ AB ∪ Z) into a word equal to `t w t⁻¹`, letter by
/// letter through [`outer_image`], freely reduced.
pub fn act_outer(t: Generator, w: &Word) -> Result<Word> {
    let mut pieces = Vec::with_capacity(w.len());
    for l in w.letters() {
        let (_, img) = outer_image(t, l.gen)?;
        pieces.push(img.pow(l.exp));
    }
    Word::product(pieces.iter()).try_free_reduce()
}

/// Relations (c.1)–(c.8).
fn push_action_relators(pres: &mut Presentation) -> Result<()> {
    let params = pres.params;
    let g = params.g;
    let outer_sig: Vec<Generator> = family_gens(&params, Family::SigmaTilde).collect();
    let outer_all: Vec<Generator> = outer_sig
        .iter()
        .copied()
        .chain(surface_gens(&params, true))
        .collect();
    let sigmas: Vec<Generator> = family_gens(&params, Family::Sigma).collect();
    let ab = surface_gens(&params, false);
    let zs: Vec<Generator> = family_gens(&params, Family::Zeta).collect();

    let mut pairs: Vec<(Generator, Generator)> = Vec::new();
    // (c.1)
    for &t in &outer_all {
        pairs.extend(sigmas.iter().map(|&x| (t, x)));
    }
    // (c.2), (c.3)
    for &t in &outer_sig {
        pairs.extend(ab.iter().map(|&x| (t, x)));
    }
    for &t in &outer_sig {
        pairs.extend(zs.iter().map(|&x| (t, x)));
    }
    if !zs.is_empty() {
        // (c.4)
        for i in 1..=g {
            let (ta, tb) = (Generator::a_tilde(i), Generator::b_tilde(i));
            pairs.push((ta, zs[0]));
            pairs.push((tb, zs[0]));
            pairs.extend(zs[1..].iter().map(|&z| (ta, z)));
            pairs.extend(zs[1..].iter().map(|&z| (tb, z)));
        }
        // (c.5)–(c.8)
        let blocks = [
            (Family::ATilde, Family::A),
            (Family::BTilde, Family::B),
            (Family::ATilde, Family::B),
            (Family::BTilde, Family::A),
        ];
        for (tf, xf) in blocks {
            for i in 1..=g {
                for j in 1..=g {
                    pairs.push((Generator::new(tf, i), Generator::new(xf, j)));
                }
            }
        }
    }
    for (t, x) in pairs {
        let (label, img) = outer_image(t, x)?;
        let lhs = cat(&[&w(t), &w(x), &winv(t)]);
        pres.relation(format!("{label} t={t} x={x}"), lhs, &img);
    }
    Ok(())
}

/// Presentation of B_k(Σ_{g,n}): generators S ∪ AB ∪ Z, relations (a.1)–(a.8).
pub fn presentation_punctured(params: &GroupParams) -> Presentation {
    let gens = family_gens(params, Family::Sigma)
        .chain(surface_gens(params, false))
        .chain(family_gens(params, Family::Zeta))
        .collect();
    let mut pres = Presentation::new(*params, QuotientKind::PuncturedFull, gens);
    push_inner_relators(&mut pres);
    pres
}

/// Presentation of B_n(Σ_g) on the tilde alphabet S̃ ∪ ÃB, relations (b.1)–(b.6).
pub fn presentation_base(params: &GroupParams) -> Result<Presentation> {
    params.require(params.n >= 1, "n >= 1")?;
    let gens = family_gens(params, Family::SigmaTilde)
        .chain(surface_gens(params, true))
        .collect();
    let mut pres = Presentation::new(*params, QuotientKind::BaseFull, gens);
    push_outer_relators(&mut pres);
    Ok(pres)
}

/// Presentation of B_{k,n}(Σ_g) on Ω_{k,n} = S ∪ S̃ ∪ AB ∪ ÃB ∪ Z.
pub fn presentation_mixed(params: &GroupParams) -> Result<Presentation> {
    params.require(params.k >= 1 && params.n >= 1, "k, n >= 1")?;
    let gens = mixed_generators(params);
    let mut pres = Presentation::new(*params, QuotientKind::MixedFull, gens);
    push_inner_relators(&mut pres);
    push_outer_relators(&mut pres);
    push_action_relators(&mut pres)?;
    Ok(pres)
}

/// Ω_{k,n} in presentation order.
pub fn mixed_generators(params: &GroupParams) -> Vec<Generator> {
    family_gens(params, Family::Sigma)
        .chain(family_gens(params, Family::SigmaTilde))
        .chain(surface_gens(params, false))
        .chain(surface_gens(params, true))
        .chain(family_gens(params, Family::Zeta))
        .collect()
}

/// S ∪ AB ∪ Z in presentation order.
pub fn punctured_generators(params: &GroupParams) -> Vec<Generator> {
    presentation_punctured(params).generators
}

const SIGMA: Generator = Generator::collapsed(Family::Sigma);
const SIGMA_T: Generator = Generator::collapsed(Family::SigmaTilde);
const ZETA: Generator = Generator::collapsed(Family::Zeta);

/// Adds `[x, y]` for every pair x < y not listed in `skip`.
fn push_commutators(pres: &mut Presentation, skip: &[(Generator, Generator)]) {
    let gens = pres.generators.clone();
    for (i, &x) in gens.iter().enumerate() {
        for &y in &gens[i + 1..] {
            if skip
                .iter()
                .any(|&(u, v)| (u, v) == (x, y) || (u, v) == (y, x))
            {
                continue;
            }
            pres.push(format!("comm {x} {y}"), commutator(&w(x), &w(y)));
        }
    }
}

/// Adds `[x, y] = rhs` as `[x, y] · rhs⁻¹`.
fn push_bracket(pres: &mut Presentation, x: Generator, y: Generator, rhs: Word) {
    pres.relation(format!("[{x},{y}]"), commutator(&w(x), &w(y)), &rhs);
}

/// Presentation of the quotient named by `kind`. The `*Full` kinds return the
/// braid-group presentations themselves; the others use the collapsed
/// alphabet {σ, σ̃, ζ} ∪ AB ∪ ÃB (or the kind's subset).
pub fn presentation_quotient(params: &GroupParams, kind: QuotientKind) -> Result<Presentation> {
    use QuotientKind::*;
    let ab = surface_gens(params, false);
    let tab = surface_gens(params, true);
    let g = params.g;
    let sq = |x: Generator| Word::letter(x, 2);
    match kind {
        MixedFull => presentation_mixed(params),
        PuncturedFull => Ok(presentation_punctured(params)),
        BaseFull => presentation_base(params),
        MixedAbel => {
            params.require(params.k >= 1 && params.n >= 1, "k, n >= 1")?;
            let mut hat_s = Vec::new();
            if params.k >= 2 {
                hat_s.push(SIGMA);
            }
            if params.n >= 2 {
                hat_s.push(SIGMA_T);
            }
            let mut gens = hat_s.clone();
            if g == 0 {
                gens.push(ZETA);
            }
            gens.extend(ab.iter().chain(tab.iter()));
            let mut pres = Presentation::new(*params, kind, gens);
            push_commutators(&mut pres, &[]);
            if g >= 1 {
                for s in hat_s {
                    pres.push(format!("{s}^2"), sq(s));
                }
            }
            Ok(pres)
        }
        PuncturedAbel => {
            let mut gens = Vec::new();
            if params.k >= 2 {
                gens.push(SIGMA);
            }
            gens.extend(ab.iter().copied());
            gens.extend(family_gens(params, Family::Zeta));
            let mut pres = Presentation::new(*params, kind, gens);
            push_commutators(&mut pres, &[]);
            if g >= 1 && params.k >= 2 {
                pres.push("s^2".into(), sq(SIGMA));
            }
            Ok(pres)
        }
        MixedGamma3 => {
            params.require(params.k >= 3 && params.n >= 3, "k, n >= 3")?;
            let mut gens = vec![SIGMA, SIGMA_T, ZETA];
            gens.extend(ab.iter().chain(tab.iter()));
            let mut pres = Presentation::new(*params, kind, gens);
            let mut skip = Vec::new();
            for i in 1..=g {
                skip.push((Generator::a(i), Generator::b(i)));
                skip.push((Generator::a_tilde(i), Generator::b_tilde(i)));
                skip.push((Generator::a(i), Generator::b_tilde(i)));
                skip.push((Generator::a_tilde(i), Generator::b(i)));
            }
            push_commutators(&mut pres, &skip);
            for i in 1..=g {
                push_bracket(&mut pres, Generator::a(i), Generator::b(i), sq(SIGMA));
                let (ta, tb) = (Generator::a_tilde(i), Generator::b_tilde(i));
                push_bracket(&mut pres, ta, tb, sq(SIGMA_T));
                push_bracket(&mut pres, Generator::a(i), tb, w(ZETA));
                push_bracket(&mut pres, ta, Generator::b(i), w(ZETA));
            }
            Ok(pres)
        }
        PuncturedGamma3 => {
            params.require(params.k >= 3, "k >= 3")?;
            let mut gens = vec![SIGMA];
            gens.extend(ab.iter().copied());
            gens.extend(family_gens(params, Family::Zeta));
            let mut pres = Presentation::new(*params, kind, gens);
            let skip: Vec<_> = (1..=g)
                .map(|i| (Generator::a(i), Generator::b(i)))
                .collect();
            push_commutators(&mut pres, &skip);
            for i in 1..=g {
                push_bracket(&mut pres, Generator::a(i), Generator::b(i), sq(SIGMA));
            }
            Ok(pres)
        }
        GkSurface => {
            params.require(
                params.k >= 3 && params.n >= 3 && g >= 1,
                "k, n >= 3 and g >= 1",
            )?;
            let mut gens = vec![SIGMA, ZETA];
            gens.extend(ab.iter().copied());
            let mut pres = Presentation::new(*params, kind, gens);
            let skip: Vec<_> = (1..=g)
                .map(|i| (Generator::a(i), Generator::b(i)))
                .collect();
            push_commutators(&mut pres, &skip);
            for i in 1..=g {
                push_bracket(&mut pres, Generator::a(i), Generator::b(i), sq(SIGMA));
            }
            Ok(pres)
        }
        HSigma => {
            params.require(params.k >= 3 && params.n >= 3, "k, n >= 3")?;
            let mut gens = vec![SIGMA, ZETA];
            gens.extend(ab.iter().chain(tab.iter()));
            let mut pres = Presentation::new(*params, kind, gens);
            let mut skip = Vec::new();
            for i in 1..=g {
                skip.push((Generator::a(i), Generator::b(i)));
                skip.push((Generator::a(i), Generator::b_tilde(i)));
                skip.push((Generator::a_tilde(i), Generator::b(i)));
            }
            push_commutators(&mut pres, &skip);
            for i in 1..=g {
                push_bracket(&mut pres, Generator::a(i), Generator::b(i), sq(SIGMA));
                push_bracket(&mut pres, Generator::a(i), Generator::b_tilde(i), w(ZETA));
                push_bracket(&mut pres, Generator::a_tilde(i), Generator::b(i), w(ZETA));
            }
            Ok(pres)
        }
    }
}
