//! Words over `n` free generators: free reduction, cyclic reduction, the
//! mod-2 quotient, and the chord-diagram linking test.
//!
//! Equivalence classes are never materialized. Two words are equivalent
//! exactly when their economical forms coincide, so every comparison below
//! is a normal-form comparison.

use std::fmt;

use crate::error::{Error, Result};

/// Generator `generator` raised to `+1`, or to `-1` when `inverse` is set.
///
/// The derived order is `a < A < b < B < ...`, which fixes canonical
/// rotations of cyclic words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, exponent: i8) -> Self {
        Letter {
            generator,
            inverse: exponent < 0,
        }
    }

    pub fn pos(generator: usize) -> Self {
        Letter {
            generator,
            inverse: false,
        }
    }

    pub fn neg(generator: usize) -> Self {
        Letter {
            generator,
            inverse: true,
        }
    }

    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inv(self) -> Self {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }

    fn to_char(self) -> Option<char> {
        if self.generator >= 26 {
            return None;
        }
        let base = if self.inverse { b'A' } else { b'a' };
        Some((base + self.generator as u8) as char)
    }

    fn from_char(c: char) -> Option<Self> {
        match c {
            'a'..='z' => Some(Letter::pos(c as usize - 'a' as usize)),
            'A'..='Z' => Some(Letter::neg(c as usize - 'A' as usize)),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_char() {
            Some(c) => write!(f, "{c}"),
            None if self.inverse => write!(f, "[-{}]", self.generator),
            None => write!(f, "[{}]", self.generator),
        }
    }
}

fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[Letter]) -> fmt::Result {
    if letters.is_empty() {
        return write!(f, "1");
    }
    for l in letters {
        write!(f, "{l}")?;
    }
    Ok(())
}

fn parse_letters(text: &str) -> Result<Vec<Letter>> {
    let text = text.trim();
    if text == "1" {
        return Ok(Vec::new());
    }
    if text.is_empty() {
        return Err(Error::InvalidArgument(
            "empty word must be spelled `1`".into(),
        ));
    }
    text.chars()
        .enumerate()
        .map(|(i, c)| {
            Letter::from_char(c).ok_or_else(|| Error::Parse {
                line: 1,
                column: i + 1,
                message: format!("unexpected character {c:?} in word"),
            })
        })
        .collect()
}

fn check_rank(letters: &[Letter], rank: usize) -> Result<()> {
    match letters.iter().find(|l| l.generator >= rank) {
        Some(l) => Err(Error::BadGenerator {
            index: l.generator,
            rank,
        }),
        None => Ok(()),
    }
}

fn inferred_rank(letters: &[Letter]) -> usize {
    letters.iter().map(|l| l.generator + 1).max().unwrap_or(1)
}

/// Free reduction with a stack; the result has no adjacent inverse pair.
fn free_reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        match out.last() {
            Some(&top) if top.cancels(l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    out
}

/// Index of the lexicographically least rotation.
fn least_rotation<T: Ord>(items: &[T]) -> usize {
    let n = items.len();
    let mut best = 0;
    for cand in 1..n {
        for k in 0..n {
            let a = &items[(cand + k) % n];
            let b = &items[(best + k) % n];
            if a != b {
                if a < b {
                    best = cand;
                }
                break;
            }
        }
    }
    best
}

fn rotated<T: Clone>(items: &[T], start: usize) -> Vec<T> {
    items[start..]
        .iter()
        .chain(items[..start].iter())
        .cloned()
        .collect()
}

fn cyclic_eq<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    let n = a.len();
    n == b.len() && (n == 0 || (0..n).any(|s| (0..n).all(|i| a[(i + s) % n] == b[i])))
}

/// Element of the free group on `rank` generators, stored as a letter
/// sequence that is not necessarily reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
    rank: usize,
}

impl Word {
    pub fn new(letters: Vec<Letter>, rank: usize) -> Result<Self> {
        check_rank(&letters, rank)?;
        Ok(Word { letters, rank })
    }

    pub fn empty(rank: usize) -> Self {
        Word {
            letters: Vec::new(),
            rank,
        }
    }

    pub fn generator(index: usize, rank: usize) -> Result<Self> {
        Word::new(vec![Letter::pos(index)], rank)
    }

    /// Parses `a`-`z` (generators) and `A`-`Z` (inverses); `1` is the empty word.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        Word::new(parse_letters(text)?, rank)
    }

    /// Parses with the smallest alphabet that holds every letter.
    pub fn parse_any(text: &str) -> Result<Self> {
        let letters = parse_letters(text)?;
        let rank = inferred_rank(&letters);
        Ok(Word { letters, rank })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn reduce(&self) -> Word {
        Word {
            letters: free_reduce(&self.letters),
            rank: self.rank,
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| !w[0].cancels(w[1]))
    }

    /// Letter sequence concatenation, without reduction.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        same_rank(self.rank, other.rank)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word {
            letters,
            rank: self.rank,
        })
    }

    pub fn inverse(&self) -> Word {
        let letters: Vec<Letter> = self.letters.iter().rev().map(|l| l.inv()).collect();
        Word {
            letters: free_reduce(&letters),
            rank: self.rank,
        }
    }

    pub fn exponent_sum(&self, generator: usize) -> Result<i64> {
        exponent_sum(&self.letters, generator, self.rank)
    }

    /// Sends `generator` to the identity and renumbers the generators above it.
    pub fn delete_generator(&self, generator: usize) -> Result<Word> {
        let letters = delete_letters(&self.letters, generator, self.rank)?;
        Ok(Word {
            letters: free_reduce(&letters),
            rank: self.rank - 1,
        })
    }

    pub fn to_cyclic(&self) -> CyclicWord {
        CyclicWord {
            letters: self.letters.clone(),
            rank: self.rank,
        }
    }

    /// Forgets exponents.
    pub fn to_mod2(&self) -> Mod2CyclicWord {
        Mod2CyclicWord {
            letters: self.letters.iter().map(|l| l.generator).collect(),
            rank: self.rank,
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

fn same_rank(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch(a, b))
    }
}

fn exponent_sum(letters: &[Letter], generator: usize, rank: usize) -> Result<i64> {
    if generator >= rank {
        return Err(Error::BadGenerator {
            index: generator,
            rank,
        });
    }
    Ok(letters
        .iter()
        .filter(|l| l.generator == generator)
        .map(|l| l.exponent())
        .sum())
}

fn delete_letters(letters: &[Letter], generator: usize, rank: usize) -> Result<Vec<Letter>> {
    if generator >= rank {
        return Err(Error::BadGenerator {
            index: generator,
            rank,
        });
    }
    Ok(letters
        .iter()
        .filter(|l| l.generator != generator)
        .map(|l| Letter {
            generator: if l.generator > generator {
                l.generator - 1
            } else {
                l.generator
            },
            inverse: l.inverse,
        })
        .collect())
}

pub fn multiply(u: &Word, v: &Word) -> Result<Word> {
    Ok(u.concat(v)?.reduce())
}

/// `[u, v] = u v u^-1 v^-1`, reduced.
pub fn commutator(u: &Word, v: &Word) -> Result<Word> {
    let uv = u.concat(v)?;
    Ok(uv.concat(&u.inverse())?.concat(&v.inverse())?.reduce())
}

/// True iff `u` and `v` are conjugate in the free group.
pub fn conjugacy_equal(u: &Word, v: &Word) -> Result<bool> {
    same_rank(u.rank, v.rank)?;
    Ok(u.to_cyclic().cyclic_reduce() == v.to_cyclic().cyclic_reduce())
}

/// Left-nested iterated commutator `[[..[a, b], c], ..]` on `n` generators.
///
/// The result is nontrivial, but deleting any one generator collapses it.
pub fn picture_hanging_word(n: usize) -> Result<Word> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "picture hanging needs at least one nail".into(),
        ));
    }
    let mut h = Word::generator(0, n)?;
    for g in 1..n {
        h = commutator(&h, &Word::generator(g, n)?)?;
    }
    Ok(h)
}

/// Letter sequence up to rotation. `PartialEq` compares up to rotation, so
/// unreduced words compare structurally, not as conjugacy classes.
#[derive(Debug, Clone, Eq)]
pub struct CyclicWord {
    letters: Vec<Letter>,
    rank: usize,
}

impl CyclicWord {
    pub fn new(letters: Vec<Letter>, rank: usize) -> Result<Self> {
        check_rank(&letters, rank)?;
        Ok(CyclicWord { letters, rank })
    }

    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        CyclicWord::new(parse_letters(text)?, rank)
    }

    pub fn parse_any(text: &str) -> Result<Self> {
        Ok(Word::parse_any(text)?.to_cyclic())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The unique economical cyclic word, in its least rotation.
    pub fn cyclic_reduce(&self) -> CyclicWord {
        let mut letters = free_reduce(&self.letters);
        let mut lo = 0;
        let mut hi = letters.len();
        while hi - lo >= 2 && letters[lo].cancels(letters[hi - 1]) {
            lo += 1;
            hi -= 1;
        }
        letters = letters[lo..hi].to_vec();
        let start = least_rotation(&letters);
        CyclicWord {
            letters: rotated(&letters, start),
            rank: self.rank,
        }
    }

    pub fn is_economical(&self) -> bool {
        let n = self.letters.len();
        (0..n).all(|i| n < 2 || !self.letters[i].cancels(self.letters[(i + 1) % n]))
    }

    /// Linear word read from the stored starting position.
    pub fn to_word(&self) -> Word {
        Word {
            letters: self.letters.clone(),
            rank: self.rank,
        }
    }

    pub fn exponent_sum(&self, generator: usize) -> Result<i64> {
        exponent_sum(&self.letters, generator, self.rank)
    }

    pub fn delete_generator(&self, generator: usize) -> Result<CyclicWord> {
        let letters = delete_letters(&self.letters, generator, self.rank)?;
        Ok(CyclicWord {
            letters,
            rank: self.rank - 1,
        }
        .cyclic_reduce())
    }

    pub fn inverse(&self) -> CyclicWord {
        CyclicWord {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
            rank: self.rank,
        }
    }

    pub fn to_mod2(&self) -> Mod2CyclicWord {
        Mod2CyclicWord {
            letters: self.letters.iter().map(|l| l.generator).collect(),
            rank: self.rank,
        }
    }
}

impl PartialEq for CyclicWord {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && cyclic_eq(&self.letters, &other.letters)
    }
}

impl std::hash::Hash for CyclicWord {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rank.hash(state);
        rotated(&self.letters, least_rotation(&self.letters)).hash(state);
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

/// Cyclic word in generator indices with every generator of order two.
#[derive(Debug, Clone, Eq)]
pub struct Mod2CyclicWord {
    letters: Vec<usize>,
    rank: usize,
}

impl Mod2CyclicWord {
    pub fn new(letters: Vec<usize>, rank: usize) -> Result<Self> {
        if let Some(&g) = letters.iter().find(|&&g| g >= rank) {
            return Err(Error::BadGenerator { index: g, rank });
        }
        Ok(Mod2CyclicWord { letters, rank })
    }

    /// Lowercase letters only; `1` is the empty word.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let letters = parse_letters(text)?;
        if letters.iter().any(|l| l.inverse) {
            return Err(Error::InvalidArgument(
                "mod-2 words use lowercase letters only".into(),
            ));
        }
        Mod2CyclicWord::new(letters.into_iter().map(|l| l.generator).collect(), rank)
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn count(&self, generator: usize) -> usize {
        self.letters.iter().filter(|&&g| g == generator).count()
    }

    /// Cancels equal neighbours (wrap-around included) down to the unique
    /// economical word, in its least rotation.
    pub fn reduce(&self) -> Mod2CyclicWord {
        let mut out: Vec<usize> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            if out.last() == Some(&g) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        let mut lo = 0;
        let mut hi = out.len();
        while hi - lo >= 2 && out[lo] == out[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        let core = &out[lo..hi];
        Mod2CyclicWord {
            letters: rotated(core, least_rotation(core)),
            rank: self.rank,
        }
    }

    pub fn is_economical(&self) -> bool {
        let n = self.letters.len();
        (0..n).all(|i| n < 2 || self.letters[i] != self.letters[(i + 1) % n])
    }

    /// Chord-diagram linking of the two letter classes.
    ///
    /// Occurrences of each generator are paired consecutively around the
    /// circle; the word is linked when an odd number of `a`-chords cross
    /// `b`-chords.
    pub fn linked(&self) -> Result<bool> {
        if self.rank != 2 {
            return Err(Error::InvalidArgument(format!(
                "linking is defined for two generators, got {}",
                self.rank
            )));
        }
        let a: Vec<usize> = positions(&self.letters, 0);
        let b: Vec<usize> = positions(&self.letters, 1);
        if a.len() % 2 == 1 || b.len() % 2 == 1 {
            return Err(Error::NotInteresting);
        }
        let chords =
            |p: &[usize]| -> Vec<(usize, usize)> { p.chunks(2).map(|c| (c[0], c[1])).collect() };
        let mut crossings = 0usize;
        for &red in &chords(&a) {
            for &blue in &chords(&b) {
                if chords_cross(red, blue) {
                    crossings += 1;
                }
            }
        }
        Ok(crossings % 2 == 1)
    }
}

fn positions(letters: &[usize], g: usize) -> Vec<usize> {
    letters
        .iter()
        .enumerate()
        .filter(|(_, &x)| x == g)
        .map(|(i, _)| i)
        .collect()
}

/// Chords with four distinct endpoints on a circle cross iff exactly one
/// endpoint of the second lies strictly between the endpoints of the first.
pub fn chords_cross(c: (usize, usize), d: (usize, usize)) -> bool {
    let (lo, hi) = if c.0 < c.1 { (c.0, c.1) } else { (c.1, c.0) };
    let inside = |x: usize| lo < x && x < hi;
    inside(d.0) != inside(d.1)
}

impl PartialEq for Mod2CyclicWord {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && cyclic_eq(&self.letters, &other.letters)
    }
}

impl fmt::Display for Mod2CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<Letter> = self.letters.iter().map(|&g| Letter::pos(g)).collect();
        write_letters(f, &letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s, 3).unwrap()
    }

    fn c(s: &str) -> CyclicWord {
        CyclicWord::parse(s, 3).unwrap()
    }

    #[test]
    fn parse_print_round_trip() {
        for s in ["1", "a", "abAB", "zZ", "cbaCBA"] {
            assert_eq!(Word::parse_any(s).unwrap().to_string(), s);
        }
        assert!(Word::parse("", 2).is_err());
        assert!(Word::parse("ab1", 2).is_err());
        assert!(matches!(
            Word::parse("c", 2),
            Err(Error::BadGenerator { index: 2, rank: 2 })
        ));
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(w("aA").reduce(), w("1"));
        assert_eq!(w("abBa").reduce(), w("aa"));
        assert_eq!(w("abA").reduce(), w("abA"));
        assert!(w("abA").is_reduced());
        assert!(!w("abBa").is_reduced());
    }

    #[test]
    fn cyclic_reduce_examples() {
        assert_eq!(c("abA").cyclic_reduce(), c("b"));
        assert_eq!(c("abAB").cyclic_reduce().to_string(), "abAB");
        assert_eq!(c("bB").cyclic_reduce(), c("1"));
        assert_eq!(c("ba").cyclic_reduce().to_string(), "ab");
        assert_eq!(c("BAba").cyclic_reduce().to_string(), "aBAb");
        assert_eq!(
            c("baBA").cyclic_reduce(),
            c("abAB").inverse().cyclic_reduce()
        );
        // a < A < b < B
        assert_eq!(c("bA").cyclic_reduce().to_string(), "Ab");
    }

    #[test]
    fn mod2_examples() {
        let m = |s: &str| Mod2CyclicWord::parse(s, 2).unwrap();
        assert_eq!(m("abaabb").reduce().to_string(), "ab");
        assert_eq!(m("abab").reduce(), m("abab"));
        assert_eq!(m("aa").reduce().to_string(), "1");
        assert_eq!(m("bab").reduce().to_string(), "a");
        assert!(Mod2CyclicWord::parse("aB", 2).is_err());
    }

    #[test]
    fn group_operations() {
        assert_eq!(multiply(&w("a"), &w("A")).unwrap(), w("1"));
        assert_eq!(multiply(&w("ab"), &w("Ba")).unwrap(), w("aa"));
        assert_eq!(multiply(&w("1"), &w("abBc")).unwrap(), w("ac"));
        assert_eq!(w("ab").inverse(), w("BA"));
        assert_eq!(w("1").inverse(), w("1"));
        assert_eq!(w("abAB").inverse(), w("baBA"));
        assert!(multiply(&w("a"), &Word::parse("a", 2).unwrap()).is_err());
    }

    #[test]
    fn commutators() {
        assert_eq!(commutator(&w("a"), &w("b")).unwrap(), w("abAB"));
        assert_eq!(commutator(&w("a"), &w("a")).unwrap(), w("1"));
        assert_eq!(commutator(&w("1"), &w("b")).unwrap(), w("1"));
    }

    #[test]
    fn conjugacy() {
        assert!(conjugacy_equal(&w("abA"), &w("b")).unwrap());
        assert!(conjugacy_equal(&w("ab"), &w("ba")).unwrap());
        assert!(!conjugacy_equal(&w("abAB"), &w("1")).unwrap());
        assert!(!conjugacy_equal(&w("ab"), &w("aB")).unwrap());
    }

    #[test]
    fn linking_examples() {
        let m = |s: &str| Mod2CyclicWord::parse(s, 2).unwrap();
        assert!(m("abab").linked().unwrap());
        assert!(!m("aabb").linked().unwrap());
        assert!(!m("1").linked().unwrap());
        assert_eq!(m("aab").linked(), Err(Error::NotInteresting));
        assert!(Mod2CyclicWord::parse("abab", 3).unwrap().linked().is_err());
    }

    #[test]
    fn deleting_generators() {
        let k = Word::parse("abAB", 2).unwrap();
        assert_eq!(k.delete_generator(1).unwrap(), Word::empty(1));
        assert_eq!(k.delete_generator(0).unwrap(), Word::empty(1));
        assert_eq!(
            Word::parse("ab", 2).unwrap().delete_generator(0).unwrap(),
            Word::parse("a", 1).unwrap()
        );
        assert!(k.delete_generator(2).is_err());
        assert_eq!(k.to_cyclic().delete_generator(0).unwrap().len(), 0);
    }

    #[test]
    fn picture_hanging() {
        assert_eq!(picture_hanging_word(1).unwrap().to_string(), "a");
        assert_eq!(picture_hanging_word(2).unwrap().to_string(), "abAB");
        let expected = {
            let ab = Word::parse("abAB", 3).unwrap();
            let cw = Word::parse("c", 3).unwrap();
            ab.concat(&cw)
                .unwrap()
                .concat(&ab.inverse())
                .unwrap()
                .concat(&cw.inverse())
                .unwrap()
                .reduce()
        };
        let h3 = picture_hanging_word(3).unwrap();
        assert_eq!(h3, expected);
        assert_eq!(h3.to_string(), "abABcbaBAC");
        assert!(picture_hanging_word(0).is_err());
        for n in 1..=5 {
            let h = picture_hanging_word(n).unwrap();
            assert!(!h.is_empty() && h.is_reduced());
            for g in 0..n {
                assert!(h.delete_generator(g).unwrap().is_empty(), "n={n} g={g}");
            }
        }
    }

    #[test]
    fn exponent_sums() {
        let x = CyclicWord::parse("abAB", 2).unwrap();
        assert_eq!(x.exponent_sum(0).unwrap(), 0);
        assert_eq!(
            CyclicWord::parse("a", 2).unwrap().exponent_sum(0).unwrap(),
            1
        );
        assert_eq!(
            CyclicWord::parse("aaB", 2)
                .unwrap()
                .exponent_sum(1)
                .unwrap(),
            -1
        );
        assert!(x.exponent_sum(2).is_err());
    }

    #[test]
    fn cyclic_equality_is_rotation() {
        assert_eq!(c("abc"), c("bca"));
        assert_ne!(c("abc"), c("acb"));
    }
}
