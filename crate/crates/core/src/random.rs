//! Seeded random words and quotient elements for property checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::quotients::{Gamma3MixedElt, PuncturedGamma3Elt};
use crate::words::{Family, Generator, Letter, Word};

/// A word of length at most `max_len` over `alphabet`, exponents ±1.
pub fn random_word<R: Rng>(rng: &mut R, alphabet: &[Generator], max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_pairs((0..len).map(|_| {
        let g = *alphabet.choose(rng).expect("nonempty alphabet");
        (g, if rng.gen_bool(0.5) { 1 } else { -1 })
    }))
}

/// Replaces the index of every σ_i, σ̃_i and ζ_i letter by a random index of
/// the same family present in `alphabet`.
fn reindex<R: Rng>(rng: &mut R, w: &Word, alphabet: &[Generator]) -> Word {
    Word::from_pairs(w.letters().iter().map(|l: &Letter| {
        let gen = match l.gen.family {
            Family::Sigma | Family::SigmaTilde | Family::Zeta => {
                let same: Vec<_> = alphabet
                    .iter()
                    .filter(|g| g.family == l.gen.family)
                    .collect();
                **same
                    .choose(rng)
                    .expect("letter's family is in the alphabet")
            }
            _ => l.gen,
        };
        (gen, l.exp)
    }))
}

/// A pair of words with a good chance of being equal in a class-2 quotient:
/// independent words, a letter shuffle, a re-indexing of the collapsing
/// families, or both.
pub fn random_word_pair<R: Rng>(
    rng: &mut R,
    alphabet: &[Generator],
    max_len: usize,
) -> (Word, Word) {
    let u = random_word(rng, alphabet, max_len);
    let v = match rng.gen_range(0..4) {
        0 => random_word(rng, alphabet, max_len),
        1 => shuffled(rng, &u),
        2 => reindex(rng, &u, alphabet),
        _ => {
            let s = shuffled(rng, &u);
            reindex(rng, &s, alphabet)
        }
    };
    (u, v)
}

fn shuffled<R: Rng>(rng: &mut R, w: &Word) -> Word {
    let mut letters = w.letters().to_vec();
    letters.shuffle(rng);
    Word::from_pairs(letters.into_iter().map(|l| (l.gen, l.exp)))
}

/// A coordinate that is zero half the time, else uniform in `[-bound, bound]`.
fn coord<R: Rng>(rng: &mut R, bound: i64) -> i64 {
    if rng.gen_bool(0.5) {
        0
    } else {
        rng.gen_range(-bound..=bound)
    }
}

fn coords<R: Rng>(rng: &mut R, len: usize, bound: i64) -> Vec<i64> {
    (0..len).map(|_| coord(rng, bound)).collect()
}

pub fn random_mixed_elt<R: Rng>(rng: &mut R, g: usize, bound: i64) -> Gamma3MixedElt {
    Gamma3MixedElt {
        p: coord(rng, bound),
        q: coord(rng, bound),
        r: coord(rng, bound),
        m: coords(rng, g, bound),
        mt: coords(rng, g, bound),
        nv: coords(rng, g, bound),
        nt: coords(rng, g, bound),
    }
}

pub fn random_punctured_elt<R: Rng>(
    rng: &mut R,
    n: usize,
    g: usize,
    bound: i64,
) -> PuncturedGamma3Elt {
    PuncturedGamma3Elt {
        p: coord(rng, bound),
        qz: coords(rng, n, bound),
        m: coords(rng, g, bound),
        nv: coords(rng, g, bound),
    }
}
