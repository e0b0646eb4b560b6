//! Generator alphabets and free-group words.
//!
//! Text grammar: tokens separated by ASCII spaces, each token a generator name
//! optionally followed by `^<signed integer>`. Names are `s<i>` (σ_i), `ts<i>`
//! (σ̃_i), `a<i>`, `b<i>`, `ta<i>`, `tb<i>` and `z<i>` (ζ_i). The literal `1`
//! alone is the empty word.
//!
//! Quotient normal forms also use the unindexed names `s`, `ts` and `z` for the
//! common image of a whole family (see [`Generator::collapsed`]); those are only
//! accepted by [`parse_word_collapsed`].

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// The triple (k, n, g): inner strands, outer strands (or punctures), genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GroupParams {
    pub k: usize,
    pub n: usize,
    pub g: usize,
}

impl GroupParams {
    pub fn new(k: usize, n: usize, g: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Regime {
                k,
                n,
                g,
                hypothesis: "k >= 1".into(),
            });
        }
        Ok(GroupParams { k, n, g })
    }

    pub(crate) fn regime(&self, hypothesis: &str) -> Error {
        Error::Regime {
            k: self.k,
            n: self.n,
            g: self.g,
            hypothesis: hypothesis.into(),
        }
    }

    /// Fails with a regime error unless `ok` holds.
    pub(crate) fn require(&self, ok: bool, hypothesis: &str) -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(self.regime(hypothesis))
        }
    }

    /// Largest valid index for a family, 0 when the family is empty.
    pub fn family_size(&self, family: Family) -> usize {
        match family {
            Family::Sigma => self.k.saturating_sub(1),
            Family::SigmaTilde => self.n.saturating_sub(1),
            Family::A | Family::B | Family::ATilde | Family::BTilde => self.g,
            Family::Zeta => self.n,
        }
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(k={}, n={}, g={})", self.k, self.n, self.g)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    Sigma,
    SigmaTilde,
    A,
    B,
    ATilde,
    BTilde,
    Zeta,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Sigma,
        Family::SigmaTilde,
        Family::A,
        Family::B,
        Family::ATilde,
        Family::BTilde,
        Family::Zeta,
    ];

    pub fn prefix(self) -> &'static str {
        match self {
            Family::Sigma => "s",
            Family::SigmaTilde => "ts",
            Family::A => "a",
            Family::B => "b",
            Family::ATilde => "ta",
            Family::BTilde => "tb",
            Family::Zeta => "z",
        }
    }

    /// Whether the family lives in the outer (tilde) alphabet S̃ ∪ ÃB.
    pub fn is_outer(self) -> bool {
        matches!(self, Family::SigmaTilde | Family::ATilde | Family::BTilde)
    }

    fn empty_reason(self) -> &'static str {
        match self {
            Family::Sigma => "k = 1",
            Family::SigmaTilde => "n <= 1",
            Family::Zeta => "n = 0",
            _ => "g = 0",
        }
    }
}

/// A generator σ_i, σ̃_i, a_i, b_i, ã_i, b̃_i or ζ_i.
///
/// Index 0 is reserved for the collapsed images σ, σ̃ and ζ that appear in the
/// class-2 and abelian quotients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub family: Family,
    pub index: usize,
}

impl Generator {
    pub const fn new(family: Family, index: usize) -> Self {
        Generator { family, index }
    }

    pub const fn collapsed(family: Family) -> Self {
        Generator { family, index: 0 }
    }

    pub fn is_collapsed(&self) -> bool {
        self.index == 0
    }

    pub fn sigma(i: usize) -> Self {
        Self::new(Family::Sigma, i)
    }
    pub fn sigma_tilde(i: usize) -> Self {
        Self::new(Family::SigmaTilde, i)
    }
    pub fn a(i: usize) -> Self {
        Self::new(Family::A, i)
    }
    pub fn b(i: usize) -> Self {
        Self::new(Family::B, i)
    }
    pub fn a_tilde(i: usize) -> Self {
        Self::new(Family::ATilde, i)
    }
    pub fn b_tilde(i: usize) -> Self {
        Self::new(Family::BTilde, i)
    }
    pub fn zeta(i: usize) -> Self {
        Self::new(Family::Zeta, i)
    }

    /// Checks the index against `params`.
    pub fn validate(&self, params: &GroupParams) -> Result<()> {
        let size = params.family_size(self.family);
        if size == 0 {
            return Err(Error::EmptyFamily {
                name: self.to_string(),
                reason: self.family.empty_reason().into(),
            });
        }
        if self.is_collapsed() {
            if matches!(
                self.family,
                Family::Sigma | Family::SigmaTilde | Family::Zeta
            ) {
                return Ok(());
            }
            return Err(Error::Invalid(format!(
                "family `{}` has no collapsed image",
                self.family.prefix()
            )));
        }
        if self.index > size {
            return Err(Error::IndexOutOfRange {
                name: self.to_string(),
                max: size,
            });
        }
        Ok(())
    }

    pub fn word(self) -> Word {
        Word::letter(self, 1)
    }

    pub fn inv_word(self) -> Word {
        Word::letter(self, -1)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_collapsed() {
            write!(f, "{}", self.family.prefix())
        } else {
            write!(f, "{}{}", self.family.prefix(), self.index)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: Generator,
    pub exp: i64,
}

/// A word in the free group on the generator alphabet. Not necessarily reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn letter(gen: Generator, exp: i64) -> Self {
        Word {
            letters: vec![Letter { gen, exp }],
        }
    }

    /// Builds a word from (generator, exponent) pairs as given. Zero exponents
    /// are dropped.
    pub fn from_pairs<I: IntoIterator<Item = (Generator, i64)>>(pairs: I) -> Self {
        Word {
            letters: pairs
                .into_iter()
                .filter(|&(_, exp)| exp != 0)
                .map(|(gen, exp)| Letter { gen, exp })
                .collect(),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Concatenation without reduction.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Concatenation of several words, without reduction.
    pub fn product<'a, I: IntoIterator<Item = &'a Word>>(words: I) -> Word {
        let mut letters = Vec::new();
        for w in words {
            letters.extend_from_slice(&w.letters);
        }
        Word { letters }
    }

    /// Freely reduced, run-merged form.
    ///
    /// Panics if merging two runs overflows `i64`.
    pub fn free_reduce(&self) -> Word {
        self.try_free_reduce()
            .expect("exponent overflow in free_reduce")
    }

    pub fn try_free_reduce(&self) -> Result<Word> {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if l.exp == 0 {
                continue;
            }
            match out.last_mut() {
                Some(top) if top.gen == l.gen => {
                    top.exp = top
                        .exp
                        .checked_add(l.exp)
                        .ok_or(Error::Overflow("free_reduce"))?;
                    if top.exp == 0 {
                        out.pop();
                    }
                }
                _ => out.push(l),
            }
        }
        Ok(Word { letters: out })
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.iter().all(|l| l.exp != 0)
            && self.letters.windows(2).all(|w| w[0].gen != w[1].gen)
    }

    /// Reversed word with negated exponents.
    pub fn invert(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    gen: l.gen,
                    exp: l.exp.checked_neg().expect("exponent overflow in invert"),
                })
                .collect(),
        }
    }

    /// `self` repeated `e` times (inverted when `e < 0`), unreduced.
    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.invert() } else { self.clone() };
        let times = e.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.len() * times);
        for _ in 0..times {
            letters.extend_from_slice(&base.letters);
        }
        Word { letters }
    }

    pub fn validate(&self, params: &GroupParams) -> Result<()> {
        self.letters.iter().try_for_each(|l| l.gen.validate(params))
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.letters.iter().map(|l| l.gen)
    }
}

/// `x y x⁻¹ y⁻¹`, freely reduced.
pub fn commutator(x: &Word, y: &Word) -> Word {
    Word::product([x, y, &x.invert(), &y.invert()]).free_reduce()
}

/// `y⁻¹ x y`, freely reduced.
pub fn conjugate(x: &Word, y: &Word) -> Word {
    Word::product([&y.invert(), x, y]).free_reduce()
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if l.exp == 1 {
                write!(f, "{}", l.gen)?;
            } else {
                write!(f, "{}^{}", l.gen, l.exp)?;
            }
        }
        Ok(())
    }
}

/// Parses a word exactly as written (no reduction), validating every index
/// against `params`.
pub fn parse_word(text: &str, params: &GroupParams) -> Result<Word> {
    parse_impl(text, params, false)
}

/// Like [`parse_word`] but also accepts the unindexed names `s`, `ts`, `z`.
pub fn parse_word_collapsed(text: &str, params: &GroupParams) -> Result<Word> {
    parse_impl(text, params, true)
}

fn parse_impl(text: &str, params: &GroupParams, allow_collapsed: bool) -> Result<Word> {
    let mut letters = Vec::new();
    let mut tokens = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b' ' {
            i += 1;
            continue;
        }
        let start = i;
        while i < bytes.len() && bytes[i] != b' ' {
            i += 1;
        }
        tokens.push((start, &text[start..i]));
    }
    if tokens.is_empty() {
        return Err(Error::Syntax {
            pos: 0,
            msg: "empty input (the identity is written `1`)".into(),
        });
    }
    if tokens.len() == 1 && tokens[0].1 == "1" {
        return Ok(Word::empty());
    }
    for (pos, tok) in tokens {
        let letter = parse_token(tok, pos, allow_collapsed)?;
        letter.gen.validate(params)?;
        letters.push(letter);
    }
    Ok(Word { letters })
}

fn parse_token(tok: &str, pos: usize, allow_collapsed: bool) -> Result<Letter> {
    let syntax = |off: usize, msg: String| Error::Syntax {
        pos: pos + off,
        msg,
    };
    let (name, exp_part) = match tok.find('^') {
        Some(c) => (&tok[..c], Some((c + 1, &tok[c + 1..]))),
        None => (tok, None),
    };
    // longest prefix first: `ts`, `ta`, `tb` before `s`, `a`, `b`
    let family = [
        Family::SigmaTilde,
        Family::ATilde,
        Family::BTilde,
        Family::Sigma,
        Family::A,
        Family::B,
        Family::Zeta,
    ]
    .into_iter()
    .find(|f| name.starts_with(f.prefix()))
    .ok_or_else(|| syntax(0, format!("unknown generator name `{name}`")))?;
    let digits = &name[family.prefix().len()..];
    let index = if digits.is_empty() {
        let collapsible = matches!(family, Family::Sigma | Family::SigmaTilde | Family::Zeta);
        if !(allow_collapsed && collapsible) {
            return Err(syntax(
                family.prefix().len(),
                format!("generator `{name}` needs an index"),
            ));
        }
        0
    } else {
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(syntax(
                family.prefix().len(),
                format!("bad index in `{name}`"),
            ));
        }
        let idx: usize = digits
            .parse()
            .map_err(|_| syntax(family.prefix().len(), format!("bad index in `{name}`")))?;
        if idx == 0 {
            return Err(syntax(
                family.prefix().len(),
                "indices are 1-based".to_string(),
            ));
        }
        idx
    };
    let exp = match exp_part {
        None => 1,
        Some((off, s)) => {
            let body = s.strip_prefix(['-', '+']).unwrap_or(s);
            if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
                return Err(syntax(off, format!("bad exponent `{s}`")));
            }
            let e: i64 = s
                .parse()
                .map_err(|_| syntax(off, format!("exponent `{s}` out of range")))?;
            if e == 0 {
                return Err(syntax(off, "zero exponent".into()));
            }
            e
        }
    };
    Ok(Letter {
        gen: Generator::new(family, index),
        exp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(k: usize, n: usize, g: usize) -> GroupParams {
        GroupParams::new(k, n, g).unwrap()
    }

    #[test]
    fn parses_commutator_text() {
        let w = parse_word("a1 b1 a1^-1 b1^-1", &p(3, 3, 1)).unwrap();
        assert_eq!(
            w,
            Word::from_pairs([
                (Generator::a(1), 1),
                (Generator::b(1), 1),
                (Generator::a(1), -1),
                (Generator::b(1), -1)
            ])
        );
    }

    #[test]
    fn parses_power() {
        let w = parse_word("s2^-3", &p(3, 3, 1)).unwrap();
        assert_eq!(w, Word::letter(Generator::sigma(2), -3));
    }

    #[test]
    fn parse_keeps_unreduced_letters() {
        let w = parse_word("s1  s1^-1", &p(3, 3, 0)).unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(parse_word("1", &p(3, 3, 0)).unwrap(), Word::empty());
    }

    #[test]
    fn parse_rejects_empty_family() {
        let err = parse_word("a1", &p(3, 3, 0)).unwrap_err();
        assert!(matches!(err, Error::EmptyFamily { .. }), "{err}");
        let err = parse_word("s1", &p(1, 3, 0)).unwrap_err();
        assert!(matches!(err, Error::EmptyFamily { .. }), "{err}");
    }

    #[test]
    fn parse_rejects_out_of_range_and_names_it() {
        let err = parse_word("s1 s3", &p(3, 3, 0)).unwrap_err();
        match err {
            Error::IndexOutOfRange { name, max } => {
                assert_eq!(name, "s3");
                assert_eq!(max, 2);
            }
            other => panic!("unexpected {other}"),
        }
        assert!(matches!(
            parse_word("z4", &p(3, 3, 0)),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn parse_syntax_errors_report_position() {
        let err = parse_word("s1 q2", &p(3, 3, 0)).unwrap_err();
        assert_eq!(
            err,
            Error::Syntax {
                pos: 3,
                msg: "unknown generator name `q2`".into()
            }
        );
        assert!(matches!(
            parse_word("s1^", &p(3, 3, 0)),
            Err(Error::Syntax { pos: 3, .. })
        ));
        assert!(matches!(
            parse_word("s1^0", &p(3, 3, 0)),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_word("s0", &p(3, 3, 0)),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_word("", &p(3, 3, 0)),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_word("s", &p(3, 3, 0)),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn collapsed_names_only_when_allowed() {
        let w = parse_word_collapsed("s^-2 ts z a1 b1", &p(3, 3, 1)).unwrap();
        assert_eq!(w.letters()[0].gen, Generator::collapsed(Family::Sigma));
        assert_eq!(w.to_string(), "s^-2 ts z a1 b1");
        assert!(parse_word_collapsed("a", &p(3, 3, 1)).is_err());
    }

    #[test]
    fn free_reduce_examples() {
        let w = Word::from_pairs([(Generator::a(1), 1), (Generator::a(1), -1)]);
        assert_eq!(w.free_reduce(), Word::empty());
        let w = Word::from_pairs([
            (Generator::sigma(1), 1),
            (Generator::sigma(2), 1),
            (Generator::sigma(2), -1),
            (Generator::sigma(1), 1),
        ]);
        assert_eq!(w.free_reduce(), Word::letter(Generator::sigma(1), 2));
        assert_eq!(Word::empty().free_reduce(), Word::empty());
    }

    #[test]
    fn free_reduce_overflow_is_an_error() {
        let w = Word::from_pairs([(Generator::a(1), i64::MAX), (Generator::a(1), 1)]);
        assert_eq!(w.try_free_reduce(), Err(Error::Overflow("free_reduce")));
    }

    #[test]
    fn invert_examples() {
        let ab = Word::from_pairs([(Generator::a(1), 1), (Generator::b(1), 1)]);
        assert_eq!(
            ab.invert(),
            Word::from_pairs([(Generator::b(1), -1), (Generator::a(1), -1)])
        );
        assert_eq!(Word::empty().invert(), Word::empty());
        assert_eq!(
            Word::letter(Generator::sigma(1), 2).invert(),
            Word::letter(Generator::sigma(1), -2)
        );
    }

    #[test]
    fn commutator_and_conjugate() {
        let a1 = Generator::a(1).word();
        let b1 = Generator::b(1).word();
        let z1 = Generator::zeta(1).word();
        assert_eq!(commutator(&a1, &b1).to_string(), "a1 b1 a1^-1 b1^-1");
        assert_eq!(commutator(&a1, &a1), Word::empty());
        assert_eq!(conjugate(&z1, &a1).to_string(), "a1^-1 z1 a1");
    }
}
