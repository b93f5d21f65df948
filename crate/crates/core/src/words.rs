//! Finite alphabets, words over them, and free-group style reduction.
//!
//! A word is a flat sequence of letter ids over a shared [`Alphabet`].
//! Alphabets may carry an involution `x -> x^-1`, in which case the letter
//! set is closed under inverses and free reduction is available.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

pub type LetterId = u16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("letter `{0}` is not in the alphabet")]
    UnknownLetter(String),
    #[error("duplicate letter name `{0}`")]
    DuplicateLetter(String),
    #[error("operation needs two words over the same alphabet")]
    AlphabetMismatch,
    #[error("alphabet has no involution, inverses are undefined")]
    NoInvolution,
    #[error("word is not freely reduced")]
    NotReduced,
    #[error("alphabet is empty")]
    EmptyAlphabet,
    #[error("too many letters (max {0})")]
    TooManyLetters(usize),
}

/// A finite, ordered set of named letters, optionally closed under a
/// fixed-point-free involution (the formal inverse).
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Alphabet {
    names: Vec<String>,
    /// `inverse[i] = j` means letter `i` and letter `j` are formal inverses.
    inverse: Option<Vec<LetterId>>,
}

const MAX_LETTERS: usize = u16::MAX as usize;

impl Alphabet {
    /// Plain alphabet with no involution.
    pub fn monoid<S: AsRef<str>>(names: &[S]) -> Result<Arc<Alphabet>, WordError> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        Self::check_names(&names)?;
        Ok(Arc::new(Alphabet { names, inverse: None }))
    }

    /// Alphabet `X u X^-1` for the listed generators. A single lowercase
    /// ASCII generator `a` gets the inverse name `A`; anything else gets a
    /// trailing apostrophe.
    pub fn group<S: AsRef<str>>(generators: &[S]) -> Result<Arc<Alphabet>, WordError> {
        let mut names = Vec::with_capacity(generators.len() * 2);
        for g in generators {
            let g = g.as_ref().to_string();
            let inv = inverse_name(&g);
            names.push(g);
            names.push(inv);
        }
        Self::check_names(&names)?;
        let inverse = (0..names.len() as LetterId)
            .map(|i| if i % 2 == 0 { i + 1 } else { i - 1 })
            .collect();
        Ok(Arc::new(Alphabet { names, inverse: Some(inverse) }))
    }

    fn check_names(names: &[String]) -> Result<(), WordError> {
        if names.is_empty() {
            return Err(WordError::EmptyAlphabet);
        }
        if names.len() > MAX_LETTERS {
            return Err(WordError::TooManyLetters(MAX_LETTERS));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n == "1" || n.chars().any(char::is_whitespace) {
                return Err(WordError::UnknownLetter(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(WordError::DuplicateLetter(n.clone()));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn has_involution(&self) -> bool {
        self.inverse.is_some()
    }

    pub fn name(&self, l: LetterId) -> &str {
        &self.names[l as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn letter(&self, name: &str) -> Option<LetterId> {
        self.names.iter().position(|n| n == name).map(|i| i as LetterId)
    }

    pub fn inverse_of(&self, l: LetterId) -> Option<LetterId> {
        self.inverse.as_ref().map(|inv| inv[l as usize])
    }

    /// The generators of a group alphabet: every letter that is the even
    /// half of an inverse pair. For a plain alphabet this is every letter.
    pub fn positive_letters(&self) -> Vec<LetterId> {
        match &self.inverse {
            None => (0..self.len() as LetterId).collect(),
            Some(inv) => (0..self.len() as LetterId).filter(|&l| l < inv[l as usize]).collect(),
        }
    }

    fn single_char_names(&self) -> bool {
        self.names.iter().all(|n| n.chars().count() == 1)
    }

    /// Parse a word. `1` denotes the empty word. If every letter name is a
    /// single character and the input has no whitespace, letters are read
    /// character by character; otherwise the input is whitespace-split.
    pub fn parse_word(self: &Arc<Self>, text: &str) -> Result<Word, WordError> {
        let text = text.trim();
        if text.is_empty() || text == "1" {
            return Ok(Word::empty(self.clone()));
        }
        let mut letters = Vec::new();
        if self.single_char_names() && !text.contains(char::is_whitespace) {
            for c in text.chars() {
                let s = c.to_string();
                letters.push(self.letter(&s).ok_or(WordError::UnknownLetter(s))?);
            }
        } else {
            for tok in text.split_whitespace() {
                if tok == "1" {
                    continue;
                }
                letters
                    .push(self.letter(tok).ok_or_else(|| WordError::UnknownLetter(tok.into()))?);
            }
        }
        Ok(Word { alphabet: self.clone(), letters })
    }
}

fn inverse_name(name: &str) -> String {
    let mut chars = name.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) if c.is_ascii_lowercase() => c.to_ascii_uppercase().to_string(),
        _ => format!("{name}'"),
    }
}

/// A word over an [`Alphabet`]. The empty word represents the identity.
#[derive(Debug, Clone, Eq)]
pub struct Word {
    alphabet: Arc<Alphabet>,
    letters: Vec<LetterId>,
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters && self.same_alphabet(other)
    }
}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.letters.hash(state);
    }
}

/// Length-lexicographic order by letter id; ignores the alphabet.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.letters.len(), &self.letters).cmp(&(other.letters.len(), &other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Word {
    pub fn empty(alphabet: Arc<Alphabet>) -> Word {
        Word { alphabet, letters: Vec::new() }
    }

    pub fn from_letters(alphabet: Arc<Alphabet>, letters: Vec<LetterId>) -> Word {
        debug_assert!(letters.iter().all(|&l| (l as usize) < alphabet.len()));
        Word { alphabet, letters }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn letters(&self) -> &[LetterId] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn same_alphabet(&self, other: &Word) -> bool {
        Arc::ptr_eq(&self.alphabet, &other.alphabet) || *self.alphabet == *other.alphabet
    }

    pub fn render(&self) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        let names: Vec<&str> = self.letters.iter().map(|&l| self.alphabet.name(l)).collect();
        if self.alphabet.single_char_names() {
            names.concat()
        } else {
            names.join(" ")
        }
    }

    pub fn concat(&self, other: &Word) -> Result<Word, WordError> {
        if !self.same_alphabet(other) {
            return Err(WordError::AlphabetMismatch);
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Word { alphabet: self.alphabet.clone(), letters })
    }

    /// The formal inverse: letters reversed and inverted.
    pub fn inverse(&self) -> Result<Word, WordError> {
        if !self.alphabet.has_involution() {
            return Err(WordError::NoInvolution);
        }
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|&l| self.alphabet.inverse_of(l).unwrap())
            .collect();
        Ok(Word { alphabet: self.alphabet.clone(), letters })
    }

    /// Free reduction: repeatedly delete adjacent `x x^-1` pairs. The result
    /// is the unique reduced form.
    pub fn free_reduce(&self) -> Result<Word, WordError> {
        if !self.alphabet.has_involution() {
            return Err(WordError::NoInvolution);
        }
        let mut stack: Vec<LetterId> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            if stack.last() == self.alphabet.inverse_of(l).as_ref() {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Ok(Word { alphabet: self.alphabet.clone(), letters: stack })
    }

    pub fn is_reduced(&self) -> Result<bool, WordError> {
        if !self.alphabet.has_involution() {
            return Err(WordError::NoInvolution);
        }
        Ok(self
            .letters
            .windows(2)
            .all(|w| self.alphabet.inverse_of(w[0]) != Some(w[1])))
    }

    /// Split a reduced word as `c w c^-1` with `w` cyclically reduced.
    /// Returns `(c, w)`. Errors if the word is not freely reduced.
    pub fn cyclic_reduce(&self) -> Result<(Word, Word), WordError> {
        if !self.is_reduced()? {
            return Err(WordError::NotReduced);
        }
        let mut lo = 0usize;
        let mut hi = self.letters.len();
        while hi - lo >= 2
            && self.alphabet.inverse_of(self.letters[lo]) == Some(self.letters[hi - 1])
        {
            lo += 1;
            hi -= 1;
        }
        let conj = Word { alphabet: self.alphabet.clone(), letters: self.letters[..lo].to_vec() };
        let core = Word { alphabet: self.alphabet.clone(), letters: self.letters[lo..hi].to_vec() };
        Ok((conj, core))
    }

    pub fn is_cyclically_reduced(&self) -> Result<bool, WordError> {
        if !self.is_reduced()? {
            return Ok(false);
        }
        match (self.letters.first(), self.letters.last()) {
            (Some(&f), Some(&l)) => Ok(self.alphabet.inverse_of(f) != Some(l)),
            _ => Ok(true),
        }
    }

    pub fn rotate_left(&self, r: usize) -> Word {
        if self.letters.is_empty() {
            return self.clone();
        }
        let r = r % self.letters.len();
        let mut letters = Vec::with_capacity(self.len());
        letters.extend_from_slice(&self.letters[r..]);
        letters.extend_from_slice(&self.letters[..r]);
        Word { alphabet: self.alphabet.clone(), letters }
    }

    /// All distinct cyclic rotations, sorted.
    pub fn cyclic_conjugates(&self) -> Vec<Word> {
        let n = self.letters.len().max(1);
        let mut out: Vec<Word> = (0..n).map(|r| self.rotate_left(r)).collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn subword(&self, start: usize, len: usize) -> Word {
        Word {
            alphabet: self.alphabet.clone(),
            letters: self.letters[start..start + len].to_vec(),
        }
    }

    /// Replace `len` letters at `start` with `repl`.
    pub fn splice(&self, start: usize, len: usize, repl: &[LetterId]) -> Word {
        let mut letters = Vec::with_capacity(self.len() - len + repl.len());
        letters.extend_from_slice(&self.letters[..start]);
        letters.extend_from_slice(repl);
        letters.extend_from_slice(&self.letters[start + len..]);
        Word { alphabet: self.alphabet.clone(), letters }
    }

    /// Letters sorted ascending; normal form for free commutative monoids.
    pub fn sorted_letters(&self) -> Vec<LetterId> {
        let mut v = self.letters.clone();
        v.sort_unstable();
        v
    }

    /// Signed exponent sum per positive letter; normal form for free
    /// abelian groups. Requires an involution.
    pub fn exponent_sums(&self) -> Result<Vec<i64>, WordError> {
        if !self.alphabet.has_involution() {
            return Err(WordError::NoInvolution);
        }
        let pos = self.alphabet.positive_letters();
        let mut sums = vec![0i64; pos.len()];
        for &l in &self.letters {
            let inv = self.alphabet.inverse_of(l).unwrap();
            let (gen, sign) = if l < inv { (l, 1) } else { (inv, -1) };
            let idx = pos.iter().position(|&p| p == gen).unwrap();
            sums[idx] += sign;
        }
        Ok(sums)
    }
}

/// An ordered pair of words over one alphabet; a defining relation or a
/// candidate relation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RelationPair {
    pub lhs: Word,
    pub rhs: Word,
}

impl RelationPair {
    pub fn new(lhs: Word, rhs: Word) -> Result<RelationPair, WordError> {
        if !lhs.same_alphabet(&rhs) {
            return Err(WordError::AlphabetMismatch);
        }
        Ok(RelationPair { lhs, rhs })
    }

    /// Total length `|lhs| + |rhs|`.
    pub fn len(&self) -> usize {
        self.lhs.len() + self.rhs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn reversed(&self) -> RelationPair {
        RelationPair { lhs: self.rhs.clone(), rhs: self.lhs.clone() }
    }

    pub fn render(&self) -> String {
        format!("{} = {}", self.lhs.render(), self.rhs.render())
    }
}

/// All words of length `<= n`, in length-lexicographic order. Intended for
/// desk-scale enumeration; the count grows as `|X|^n`.
pub fn words_up_to(alphabet: &Arc<Alphabet>, n: usize) -> Vec<Word> {
    let k = alphabet.len() as LetterId;
    let mut out = vec![Word::empty(alphabet.clone())];
    let mut layer: Vec<Vec<LetterId>> = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(layer.len() * k as usize);
        for w in &layer {
            for l in 0..k {
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out.extend(next.iter().map(|v| Word::from_letters(alphabet.clone(), v.clone())));
        layer = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Arc<Alphabet> {
        Alphabet::monoid(&["a", "b"]).unwrap()
    }

    fn f2() -> Arc<Alphabet> {
        Alphabet::group(&["a", "b"]).unwrap()
    }

    #[test]
    fn parse_render_round_trip() {
        let alpha = f2();
        for s in ["1", "a", "A", "aAb", "BabA"] {
            let w = alpha.parse_word(s).unwrap();
            assert_eq!(w.render(), s.to_string());
        }
        assert_eq!(alpha.parse_word("").unwrap().len(), 0);
    }

    #[test]
    fn parse_rejects_unknown_letter() {
        let alpha = ab();
        assert!(matches!(alpha.parse_word("abc"), Err(WordError::UnknownLetter(_))));
    }

    #[test]
    fn multi_char_names_are_space_separated() {
        let alpha = Alphabet::group(&["gen"]).unwrap();
        let w = alpha.parse_word("gen gen'").unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(w.render(), "gen gen'");
        assert_eq!(w.free_reduce().unwrap().len(), 0);
    }

    #[test]
    fn concat_checks_alphabet() {
        let u = ab().parse_word("ab").unwrap();
        let v = f2().parse_word("ab").unwrap();
        assert_eq!(u.concat(&v), Err(WordError::AlphabetMismatch));
        let w = ab().parse_word("ba").unwrap();
        assert_eq!(u.concat(&w).unwrap().render(), "abba");
    }

    #[test]
    fn free_reduce_examples() {
        let alpha = f2();
        let w = alpha.parse_word("abBA").unwrap();
        assert_eq!(w.free_reduce().unwrap().render(), "1");
        let w = alpha.parse_word("abBb").unwrap();
        assert_eq!(w.free_reduce().unwrap().render(), "ab");
        let plain = ab().parse_word("ab").unwrap();
        assert_eq!(plain.free_reduce(), Err(WordError::NoInvolution));
    }

    #[test]
    fn inverse_and_reduction() {
        let alpha = f2();
        let w = alpha.parse_word("abA").unwrap();
        assert_eq!(w.inverse().unwrap().render(), "aBA");
        let prod = w.concat(&w.inverse().unwrap()).unwrap();
        assert_eq!(prod.free_reduce().unwrap().len(), 0);
    }

    #[test]
    fn cyclic_reduce_example() {
        let alpha = f2();
        let w = alpha.parse_word("abA").unwrap();
        let (c, core) = w.cyclic_reduce().unwrap();
        assert_eq!(c.render(), "a");
        assert_eq!(core.render(), "b");
        let bad = alpha.parse_word("aA").unwrap();
        assert_eq!(bad.cyclic_reduce(), Err(WordError::NotReduced));
    }

    #[test]
    fn cyclic_conjugates_dedup() {
        let w = ab().parse_word("abab").unwrap();
        let cc = w.cyclic_conjugates();
        assert_eq!(cc.len(), 2);
        let e = Word::empty(ab());
        assert_eq!(e.cyclic_conjugates().len(), 1);
    }

    #[test]
    fn exponent_sums() {
        let alpha = f2();
        let w = alpha.parse_word("aabAB").unwrap();
        assert_eq!(w.exponent_sums().unwrap(), vec![1, 0]);
    }

    #[test]
    fn words_up_to_counts() {
        assert_eq!(words_up_to(&ab(), 3).len(), 1 + 2 + 4 + 8);
        let ws = words_up_to(&ab(), 2);
        assert!(ws.windows(2).all(|p| p[0] < p[1]));
    }
}

#[cfg(test)]
mod prop_tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_word(max: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(0u16..4, 0..=max).prop_map(|ls| {
            let alpha = Alphabet::group(&["a", "b"]).unwrap();
            Word::from_letters(alpha, ls)
        })
    }

    proptest! {
        #[test]
        fn free_reduce_idempotent(w in arb_word(12)) {
            let r = w.free_reduce().unwrap();
            prop_assert!(r.len() <= w.len());
            prop_assert_eq!(r.free_reduce().unwrap(), r.clone());
            prop_assert!(r.is_reduced().unwrap());
        }

        #[test]
        fn concat_length_adds(u in arb_word(8), v in arb_word(8)) {
            prop_assert_eq!(u.concat(&v).unwrap().len(), u.len() + v.len());
        }

        #[test]
        fn inverse_is_involutive(w in arb_word(10)) {
            prop_assert_eq!(w.inverse().unwrap().inverse().unwrap(), w.clone());
        }

        #[test]
        fn cyclic_core_is_cyclically_reduced(w in arb_word(10)) {
            let r = w.free_reduce().unwrap();
            let (c, core) = r.cyclic_reduce().unwrap();
            prop_assert!(core.is_cyclically_reduced().unwrap());
            // c core c^-1 reduces back to r
            let back = c.concat(&core).unwrap().concat(&c.inverse().unwrap()).unwrap();
            prop_assert_eq!(back.free_reduce().unwrap(), r);
        }
    }
}
