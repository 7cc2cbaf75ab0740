//! Exact word algebra in finitely generated free groups.
//!
//! Elements are words over generators `a1, a2, …`; the commutator convention
//! throughout is `[a, b] = a⁻¹ b⁻¹ a b` and conjugation is `w^g = g⁻¹ w g`,
//! so that `[a, b] = a⁻¹ · a^b`. Words created by the group operations are
//! always freely reduced; unreduced words can be built from raw letters and
//! normalized with [`Word::reduce`].
//!
//! The text grammar (also used in every JSON surface):
//!
//! ```text
//! expr      := factor { ["*"] factor }        products by juxtaposition
//! factor    := atom { "^" "-1" | "^" atom }   inverse / conjugation suffixes
//! atom      := "a" digits | "1" | "[" expr "," expr "]" | "(" expr ")"
//! ```
//!
//! Whitespace is insignificant. `1` denotes the identity. A conjugating
//! exponent must be an atom: write `(u)^(a1 a2)` to conjugate by a product.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Sign of a letter: a generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A free-group generator `a_j`, indexed from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator(u32);

impl Generator {
    /// Builds `a_index`; indices start at 1.
    pub fn new(index: u32) -> Result<Generator> {
        if index == 0 {
            return Err(Error::invalid("generator indices start at 1"));
        }
        Ok(Generator(index))
    }

    pub fn index(self) -> u32 {
        self.0
    }
}

/// One letter of a word: a signed generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: Generator,
    pub sign: Sign,
}

impl Letter {
    pub fn new(index: u32, sign: Sign) -> Result<Letter> {
        Ok(Letter {
            gen: Generator::new(index)?,
            sign,
        })
    }

    pub fn inverse(self) -> Letter {
        Letter {
            gen: self.gen,
            sign: self.sign.flip(),
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.sign != other.sign
    }
}

/// A word in a free group, stored as its letter sequence.
///
/// `reduced` caches whether the sequence is freely reduced; all words
/// produced by the group operations carry `reduced == true`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
    reduced: bool,
}

impl Word {
    /// The empty word (group identity).
    pub fn identity() -> Word {
        Word {
            letters: Vec::new(),
            reduced: true,
        }
    }

    /// Single positive letter `a_index`.
    pub fn generator(index: u32) -> Result<Word> {
        Ok(Word::from_letters(vec![Letter::new(index, Sign::Plus)?]))
    }

    /// Builds a word from raw letters, detecting whether it is reduced.
    pub fn from_letters(letters: Vec<Letter>) -> Word {
        let reduced = letters.windows(2).all(|w| !w[0].cancels(w[1]));
        Word { letters, reduced }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// True iff the word reduces to the identity.
    pub fn is_identity(&self) -> bool {
        if self.reduced {
            self.letters.is_empty()
        } else {
            self.reduce().is_empty()
        }
    }

    /// Free reduction by a single left-to-right stack pass; idempotent.
    pub fn reduce(&self) -> Word {
        if self.reduced {
            return self.clone();
        }
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last().is_some_and(|&top| top.cancels(l)) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word {
            letters: stack,
            reduced: true,
        }
    }

    /// Reduced product `self · other`.
    pub fn multiply(&self, other: &Word) -> Word {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.len() + other.len());
        for &l in self.letters.iter().chain(other.letters.iter()) {
            if stack.last().is_some_and(|&top| top.cancels(l)) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word {
            letters: stack,
            reduced: true,
        }
    }

    /// Reduced inverse; reverses letters and flips signs.
    pub fn invert(&self) -> Word {
        let letters: Vec<Letter> = self.letters.iter().rev().map(|l| l.inverse()).collect();
        let w = Word {
            letters,
            reduced: self.reduced,
        };
        if w.reduced {
            w
        } else {
            w.reduce()
        }
    }

    /// Conjugate `self^g = g⁻¹ · self · g`, reduced.
    pub fn conjugate(&self, g: &Word) -> Word {
        g.invert().multiply(self).multiply(g)
    }

    /// Commutator `[self, other] = self⁻¹ · other⁻¹ · self · other`, reduced.
    pub fn commutator(&self, other: &Word) -> Word {
        self.invert()
            .multiply(&other.invert())
            .multiply(self)
            .multiply(other)
    }

    /// Exponent-sum vector over generators `a1..a_rank` (the image in ℤ^rank).
    pub fn exponent_sums(&self, rank: u32) -> Vec<i64> {
        let mut sums = vec![0i64; rank as usize];
        for l in &self.letters {
            let idx = (l.gen.index() - 1) as usize;
            if idx < sums.len() {
                sums[idx] += l.sign.as_i8() as i64;
            }
        }
        sums
    }

    /// Largest generator index appearing in the word (0 for the identity).
    pub fn max_generator_index(&self) -> u32 {
        self.letters.iter().map(|l| l.gen.index()).max().unwrap_or(0)
    }

    /// Parses a word (an expression flattened to its reduced word) with the
    /// given ambient rank.
    pub fn parse(text: &str, rank: u32) -> Result<Word> {
        Ok(CommutatorExpr::parse(text, rank)?.flatten())
    }
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
            write!(f, "a{}", l.gen.index())?;
            if l.sign == Sign::Minus {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Word, D::Error> {
        let text = String::deserialize(d)?;
        // Rank validation happens where the ambient context is known.
        Word::parse(&text, u32::MAX).map_err(serde::de::Error::custom)
    }
}

/// Expression tree over words: the currency for perfectness witnesses and
/// normal-closure certificates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommutatorExpr {
    Leaf(Word),
    Comm(Box<CommutatorExpr>, Box<CommutatorExpr>),
    Prod(Vec<CommutatorExpr>),
    Inv(Box<CommutatorExpr>),
    Conj(Box<CommutatorExpr>, Word),
}

impl CommutatorExpr {
    pub fn leaf(w: Word) -> CommutatorExpr {
        CommutatorExpr::Leaf(w)
    }

    pub fn comm(a: CommutatorExpr, b: CommutatorExpr) -> CommutatorExpr {
        CommutatorExpr::Comm(Box::new(a), Box::new(b))
    }

    pub fn inv(e: CommutatorExpr) -> CommutatorExpr {
        CommutatorExpr::Inv(Box::new(e))
    }

    pub fn conj(e: CommutatorExpr, by: Word) -> CommutatorExpr {
        CommutatorExpr::Conj(Box::new(e), by)
    }

    /// Structural evaluation to a reduced word.
    pub fn flatten(&self) -> Word {
        match self {
            CommutatorExpr::Leaf(w) => w.reduce(),
            CommutatorExpr::Comm(a, b) => a.flatten().commutator(&b.flatten()),
            CommutatorExpr::Prod(es) => es
                .iter()
                .fold(Word::identity(), |acc, e| acc.multiply(&e.flatten())),
            CommutatorExpr::Inv(e) => e.flatten().invert(),
            CommutatorExpr::Conj(e, g) => e.flatten().conjugate(g),
        }
    }

    /// Largest generator index in any leaf.
    pub fn max_generator_index(&self) -> u32 {
        match self {
            CommutatorExpr::Leaf(w) => w.max_generator_index(),
            CommutatorExpr::Comm(a, b) => a.max_generator_index().max(b.max_generator_index()),
            CommutatorExpr::Prod(es) => {
                es.iter().map(|e| e.max_generator_index()).max().unwrap_or(0)
            }
            CommutatorExpr::Inv(e) => e.max_generator_index(),
            CommutatorExpr::Conj(e, g) => e.max_generator_index().max(g.max_generator_index()),
        }
    }

    /// Parses an expression, rejecting generator indices above `rank`.
    pub fn parse(text: &str, rank: u32) -> Result<CommutatorExpr> {
        let mut p = Parser {
            bytes: text.as_bytes(),
            pos: 0,
            rank,
        };
        let expr = p.expr()?;
        p.skip_ws();
        if p.pos != p.bytes.len() {
            return Err(Error::parse(p.pos, "unexpected trailing input"));
        }
        Ok(expr)
    }

    /// Canonical form used for round-trip comparisons: multi-letter leaves
    /// are split into products of single-letter atoms (the only leaves the
    /// parser produces), singleton products collapse, and the empty product
    /// becomes the identity leaf.
    pub fn canonical(&self) -> CommutatorExpr {
        match self {
            CommutatorExpr::Leaf(w) => {
                let letters = w.letters();
                match letters.len() {
                    0 => CommutatorExpr::Leaf(Word::identity()),
                    1 => atom_of_letter(letters[0]),
                    _ => CommutatorExpr::Prod(
                        letters.iter().map(|&l| atom_of_letter(l)).collect(),
                    ),
                }
            }
            CommutatorExpr::Comm(a, b) => CommutatorExpr::comm(a.canonical(), b.canonical()),
            CommutatorExpr::Prod(es) => {
                let mut parts: Vec<CommutatorExpr> = Vec::new();
                for e in es {
                    match e.canonical() {
                        CommutatorExpr::Prod(inner) => parts.extend(inner),
                        other => parts.push(other),
                    }
                }
                match parts.len() {
                    0 => CommutatorExpr::Leaf(Word::identity()),
                    1 => parts.pop().unwrap(),
                    _ => CommutatorExpr::Prod(parts),
                }
            }
            CommutatorExpr::Inv(e) => CommutatorExpr::inv(e.canonical()),
            CommutatorExpr::Conj(e, g) => CommutatorExpr::conj(e.canonical(), g.clone()),
        }
    }
}

fn atom_of_letter(l: Letter) -> CommutatorExpr {
    let gen = Word::from_letters(vec![Letter {
        gen: l.gen,
        sign: Sign::Plus,
    }]);
    match l.sign {
        Sign::Plus => CommutatorExpr::Leaf(gen),
        Sign::Minus => CommutatorExpr::inv(CommutatorExpr::Leaf(gen)),
    }
}

impl fmt::Display for CommutatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommutatorExpr::Leaf(w) => {
                if w.len() <= 1 {
                    write!(f, "{w}")
                } else {
                    write!(f, "({w})")
                }
            }
            CommutatorExpr::Comm(a, b) => write!(f, "[{a},{b}]"),
            CommutatorExpr::Prod(es) => {
                if es.is_empty() {
                    return write!(f, "1");
                }
                for (i, e) in es.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{e}")?;
                }
                Ok(())
            }
            CommutatorExpr::Inv(e) => match e.as_ref() {
                CommutatorExpr::Prod(_) => write!(f, "({e})^-1"),
                _ => write!(f, "{e}^-1"),
            },
            CommutatorExpr::Conj(e, g) => {
                match e.as_ref() {
                    CommutatorExpr::Prod(_) | CommutatorExpr::Conj(..) | CommutatorExpr::Inv(_) => {
                        write!(f, "({e})")?
                    }
                    _ => write!(f, "{e}")?,
                }
                if g.len() == 1 {
                    write!(f, "^{g}")
                } else {
                    write!(f, "^({g})")
                }
            }
        }
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    rank: u32,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<CommutatorExpr> {
        let mut factors = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    if factors.is_empty() {
                        return Err(Error::parse(self.pos, "product separator before any factor"));
                    }
                    self.pos += 1;
                    continue;
                }
                Some(b'a') | Some(b'[') | Some(b'(') | Some(b'1') => {
                    factors.push(self.factor()?);
                }
                _ => break,
            }
        }
        match factors.len() {
            0 => Err(Error::parse(self.pos, "expected a word")),
            1 => Ok(factors.pop().unwrap()),
            _ => Ok(CommutatorExpr::Prod(factors)),
        }
    }

    fn factor(&mut self) -> Result<CommutatorExpr> {
        let mut e = self.atom()?;
        loop {
            self.skip_ws();
            if self.peek() != Some(b'^') {
                return Ok(e);
            }
            self.pos += 1;
            self.skip_ws();
            if self.peek() == Some(b'-') {
                let at = self.pos;
                self.pos += 1;
                if self.peek() != Some(b'1') {
                    return Err(Error::parse(at, "expected `-1` after `^`"));
                }
                self.pos += 1;
                e = CommutatorExpr::inv(e);
            } else {
                let conj = self.atom()?;
                e = CommutatorExpr::conj(e, conj.flatten());
            }
        }
    }

    fn atom(&mut self) -> Result<CommutatorExpr> {
        self.skip_ws();
        match self.peek() {
            Some(b'a') => {
                self.pos += 1;
                let start = self.pos;
                while self.peek().is_some_and(|b| b.is_ascii_digit()) {
                    self.pos += 1;
                }
                if self.pos == start {
                    return Err(Error::parse(start, "expected generator index after `a`"));
                }
                let digits = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                let index: u32 = digits
                    .parse()
                    .map_err(|_| Error::parse(start, "generator index out of range"))?;
                if index == 0 {
                    return Err(Error::parse(start, "generator indices start at 1"));
                }
                if index > self.rank {
                    return Err(Error::RankExceeded {
                        index,
                        rank: self.rank,
                    });
                }
                Ok(CommutatorExpr::Leaf(Word::from_letters(vec![Letter::new(
                    index,
                    Sign::Plus,
                )?])))
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(CommutatorExpr::Leaf(Word::identity()))
            }
            Some(b'[') => {
                self.pos += 1;
                let a = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b',') {
                    return Err(Error::parse(self.pos, "expected `,` in commutator"));
                }
                self.pos += 1;
                let b = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b']') {
                    return Err(Error::parse(self.pos, "expected `]` closing commutator"));
                }
                self.pos += 1;
                Ok(CommutatorExpr::comm(a, b))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(Error::parse(self.pos, "expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            _ => Err(Error::parse(self.pos, "expected generator, `[`, `(`, or `1`")),
        }
    }
}

/// Ambient free-group context: carries the rank so letters stay compact.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FreeGroup {
    rank: u32,
}

impl FreeGroup {
    pub fn new(rank: u32) -> FreeGroup {
        FreeGroup { rank }
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn generator(&self, index: u32) -> Result<Word> {
        if index == 0 || index > self.rank {
            return Err(Error::RankExceeded {
                index,
                rank: self.rank,
            });
        }
        Word::generator(index)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        Word::parse(text, self.rank)
    }

    pub fn parse_expr(&self, text: &str) -> Result<CommutatorExpr> {
        CommutatorExpr::parse(text, self.rank)
    }

    /// Checks that every letter of `w` lies within this group's rank.
    pub fn contains(&self, w: &Word) -> bool {
        w.max_generator_index() <= self.rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> Word {
        Word::parse(text, 9).unwrap()
    }

    #[test]
    fn reduce_cancels_inverse_pairs() {
        let raw = Word::from_letters(vec![
            Letter::new(1, Sign::Plus).unwrap(),
            Letter::new(1, Sign::Minus).unwrap(),
        ]);
        assert!(!raw.is_reduced());
        assert!(raw.reduce().is_empty());
        assert!(Word::identity().reduce().is_empty());
    }

    #[test]
    fn reduce_single_cancellation() {
        let raw = Word::from_letters(vec![
            Letter::new(1, Sign::Plus).unwrap(),
            Letter::new(2, Sign::Plus).unwrap(),
            Letter::new(2, Sign::Minus).unwrap(),
            Letter::new(3, Sign::Plus).unwrap(),
        ]);
        assert_eq!(raw.reduce(), w("a1 a3"));
    }

    #[test]
    fn invert_is_anti_homomorphism() {
        assert_eq!(w("a1 a2").invert(), w("a2^-1 a1^-1"));
        let u = w("a1 a2 a3^-1");
        assert!(u.multiply(&u.invert()).is_empty());
        assert!(Word::identity().conjugate(&w("a1 a2")).is_empty());
    }

    #[test]
    fn commutator_matches_convention() {
        let c = w("a1").commutator(&w("a2"));
        assert_eq!(c, w("a1^-1 a2^-1 a1 a2"));
        assert_eq!(c.len(), 4);
        let v = w("a1 a2 a1");
        assert!(v.commutator(&v).is_empty());
        // Nested commutator with no junction cancellation.
        let nested = w("a1").commutator(&w("a2")).commutator(&w("a3"));
        assert_eq!(nested.len(), 10);
    }

    #[test]
    fn flatten_evaluates_trees() {
        let e = CommutatorExpr::parse("[a2,a3]", 3).unwrap();
        assert_eq!(e.flatten(), w("a2^-1 a3^-1 a2 a3"));
        assert!(CommutatorExpr::Prod(vec![]).flatten().is_empty());
        let leaf = CommutatorExpr::Leaf(Word::from_letters(vec![
            Letter::new(2, Sign::Plus).unwrap(),
            Letter::new(2, Sign::Minus).unwrap(),
        ]));
        assert!(leaf.flatten().is_empty());
    }

    #[test]
    fn parse_grammar_cases() {
        assert_eq!(
            CommutatorExpr::parse("[a2,a3]", 3).unwrap(),
            CommutatorExpr::comm(
                CommutatorExpr::Leaf(w("a2")),
                CommutatorExpr::Leaf(w("a3"))
            )
        );
        assert_eq!(Word::parse("a1^-1 a2", 3).unwrap().len(), 2);
        let nested = CommutatorExpr::parse("[[a1,a2],a3]", 3).unwrap();
        match nested {
            CommutatorExpr::Comm(inner, _) => match *inner {
                CommutatorExpr::Comm(..) => {}
                _ => panic!("expected nested commutator"),
            },
            _ => panic!("expected commutator"),
        }
        // Conjugation and explicit products.
        assert_eq!(
            Word::parse("(a1)^a2", 3).unwrap(),
            w("a2^-1 a1 a2")
        );
        assert_eq!(Word::parse("a1 * a2", 3).unwrap(), w("a1 a2"));
        assert_eq!(Word::parse("(a1 a2)^(a3 a1)", 3).unwrap().len(), 6);
        assert!(Word::parse("1", 3).unwrap().is_empty());
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(
            Word::parse("a4", 3),
            Err(Error::RankExceeded { index: 4, rank: 3 })
        ));
        assert!(matches!(Word::parse("", 3), Err(Error::Parse { .. })));
        assert!(matches!(Word::parse("[a1 a2]", 3), Err(Error::Parse { .. })));
        assert!(matches!(Word::parse("a1^2", 3), Err(Error::Parse { .. })));
        assert!(matches!(Word::parse("a1)", 3), Err(Error::Parse { .. })));
        assert!(matches!(Word::parse("a0", 3), Err(Error::Parse { .. })));
    }

    #[test]
    fn display_round_trips_golden_corpus() {
        let corpus = [
            "a1",
            "a1^-1",
            "a1 a2^-1 a3",
            "[a2,a3]",
            "[[a1,a2],a3]",
            "[a1,a2] [a1,a3]",
            "[a1,a2]^-1",
            "a1^a2",
            "(a1 a2)^-1",
            "(a1 a2)^(a3 a1)",
            "[a1,a2]^a3",
            "1",
        ];
        for text in corpus {
            let e = CommutatorExpr::parse(text, 3).unwrap();
            let printed = e.to_string();
            let reparsed = CommutatorExpr::parse(&printed, 3).unwrap();
            assert_eq!(reparsed.canonical(), e.canonical(), "corpus entry {text}");
            assert_eq!(reparsed.flatten(), e.flatten(), "corpus entry {text}");
        }
        for text in corpus {
            let word = Word::parse(text, 3).unwrap();
            assert_eq!(Word::parse(&word.to_string(), 3).unwrap(), word);
        }
    }

    #[test]
    fn exponent_sums_see_signs() {
        let c = w("a1").commutator(&w("a2"));
        assert_eq!(c.exponent_sums(3), vec![0, 0, 0]);
        assert_eq!(w("a1 a1 a3^-1").exponent_sums(3), vec![2, 0, -1]);
    }
}
