//! Permutations, patterns and the elementary operations on them.
//!
//! Positions are one-indexed throughout: `perm.get(1)` is the first entry,
//! transpositions take one-indexed positions, and so on. The empty
//! permutation is a valid value and renders as an empty line.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An arrangement of `{1, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    /// Validates that `entries` is a bijection of `1..=entries.len()`.
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n];
        for &v in &entries {
            let v = v as usize;
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::NotAPermutation { len: n, entries });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation(entries))
    }

    /// Caller guarantees the bijection invariant.
    pub(crate) fn from_vec_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(entries.clone()).is_ok());
        Permutation(entries)
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    /// `1 2 ... n`
    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    /// `n (n-1) ... 1`
    pub fn decreasing(n: usize) -> Self {
        Permutation((1..=n as u32).rev().collect())
    }

    /// Parses a compact digit string such as `"612345"`. Only usable when
    /// every entry is a single digit.
    pub fn from_digits(s: &str) -> Result<Self> {
        let entries = s
            .chars()
            .map(|c| c.to_digit(10).ok_or_else(|| Error::Parse(s.to_string())))
            .collect::<Result<Vec<u32>>>()?;
        Permutation::new(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    /// One-indexed access.
    pub fn get(&self, pos: usize) -> Option<u32> {
        pos.checked_sub(1).and_then(|i| self.0.get(i).copied())
    }

    /// Compact digit rendering (`"612345"`), falling back to the spaced line
    /// format when some entry exceeds 9.
    pub fn to_digits(&self) -> String {
        if self.0.iter().all(|&v| v < 10) {
            self.0.iter().map(|v| char::from(b'0' + *v as u8)).collect()
        } else {
            self.to_string()
        }
    }

    pub fn transform(&self, kind: Transform) -> Permutation {
        let n = self.len() as u32 + 1;
        let entries = match kind {
            Transform::Reverse => self.0.iter().rev().copied().collect(),
            Transform::Complement => self.0.iter().map(|&v| n - v).collect(),
            Transform::ReverseComplement => self.0.iter().rev().map(|&v| n - v).collect(),
        };
        Permutation(entries)
    }

    /// The product `(u,v) ∘ self`: entries at positions `u` and `v` exchanged.
    pub fn apply_transposition(&self, u: usize, v: usize) -> Result<Permutation> {
        let mut out = self.clone();
        out.swap_positions(u, v)?;
        Ok(out)
    }

    /// In-place form of [`Permutation::apply_transposition`].
    pub fn swap_positions(&mut self, u: usize, v: usize) -> Result<()> {
        let len = self.len();
        for pos in [u, v] {
            if pos == 0 || pos > len {
                return Err(Error::PositionOutOfRange { pos, len });
            }
        }
        self.0.swap(u - 1, v - 1);
        Ok(())
    }

    /// `self` with every entry incremented by `offset`. The result is not a
    /// permutation of `1..=n` on its own; it is only used as a block inside a
    /// larger concatenation.
    pub(crate) fn shifted_entries(&self, offset: u32) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().map(move |&v| v + offset)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses the space-separated line format. A blank line is the empty
    /// permutation.
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split_whitespace()
            .map(|tok| tok.parse::<u32>().map_err(|_| Error::Parse(s.to_string())))
            .collect::<Result<Vec<u32>>>()?;
        Permutation::new(entries)
    }
}

/// Reverse, complement and their composition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Transform {
    Reverse,
    Complement,
    ReverseComplement,
}

impl Transform {
    pub const ALL: [Transform; 3] = [
        Transform::Reverse,
        Transform::Complement,
        Transform::ReverseComplement,
    ];
}

/// A forbidden pattern: a permutation of length at least 2.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern(Permutation);

impl Pattern {
    pub fn new(perm: Permutation) -> Result<Self> {
        if perm.len() < 2 {
            return Err(Error::PatternTooShort(perm.len()));
        }
        Ok(Pattern(perm))
    }

    pub fn as_perm(&self) -> &Permutation {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl FromStr for Pattern {
    type Err = Error;

    /// Accepts the compact form (`"4123"`) or the spaced line format.
    fn from_str(s: &str) -> Result<Self> {
        let perm = if s.contains(char::is_whitespace) {
            s.parse()?
        } else {
            Permutation::from_digits(s)?
        };
        Pattern::new(perm)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.to_digits())
    }
}

/// Parses a list of compact patterns, panicking on malformed input. Meant
/// for static pattern tables.
pub(crate) fn patterns(list: &[&str]) -> Vec<Pattern> {
    list.iter()
        .map(|s| s.parse().expect("static pattern table"))
        .collect()
}

/// Number of positions at which `a` and `b` differ.
pub fn hamming_distance(a: &Permutation, b: &Permutation) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.0.iter().zip(&b.0).filter(|(x, y)| x != y).count())
}

/// Positions (one-indexed) where `a` and `b` differ.
pub fn changed_positions(a: &Permutation, b: &Permutation) -> Result<Vec<usize>> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.0
        .iter()
        .zip(&b.0)
        .enumerate()
        .filter(|(_, (x, y))| x != y)
        .map(|(i, _)| i + 1)
        .collect())
}

/// True iff some subsequence of `perm` is order-isomorphic to `pat`.
///
/// Exhaustive search over index subsets, pruned as soon as a partial choice
/// disagrees with the relative order of the pattern prefix.
pub fn contains_pattern(perm: &Permutation, pat: &Pattern) -> bool {
    let text = perm.entries();
    let pat = pat.as_perm().entries();
    if pat.len() > text.len() {
        return false;
    }
    let mut chosen = Vec::with_capacity(pat.len());
    extend_match(text, pat, 0, &mut chosen)
}

fn extend_match(text: &[u32], pat: &[u32], start: usize, chosen: &mut Vec<u32>) -> bool {
    let t = chosen.len();
    if t == pat.len() {
        return true;
    }
    let remaining = pat.len() - t;
    for i in start..=text.len() - remaining {
        let v = text[i];
        let consistent = chosen
            .iter()
            .zip(pat)
            .all(|(&w, &q)| (w < v) == (q < pat[t]));
        if consistent {
            chosen.push(v);
            if extend_match(text, pat, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// True iff `perm` contains none of `patterns`.
pub fn avoids_all(perm: &Permutation, patterns: &[Pattern]) -> bool {
    patterns.iter().all(|p| !contains_pattern(perm, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::from_digits(s).unwrap()
    }

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
        assert!(Permutation::new(vec![]).is_ok());
    }

    #[test]
    fn containment_examples() {
        assert!(!contains_pattern(&p("4132"), &pat("231")));
        assert!(contains_pattern(&p("2413"), &pat("231")));
        assert!(!contains_pattern(&p("21"), &pat("231")));
        assert!(avoids_all(&p("612345"), &[pat("231")]));
        assert!(avoids_all(&p("312"), &[]));
        assert!(!avoids_all(&p("1243"), &patterns(&["1243", "2143"])));
    }

    #[test]
    fn distances() {
        assert_eq!(hamming_distance(&p("612345"), &p("621345")).unwrap(), 2);
        assert_eq!(hamming_distance(&p("54321"), &p("45321")).unwrap(), 2);
        assert_eq!(hamming_distance(&p("231"), &p("231")).unwrap(), 0);
        assert!(matches!(
            hamming_distance(&p("12"), &p("123")),
            Err(Error::LengthMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn transforms() {
        assert_eq!(p("231").transform(Transform::Reverse), p("132"));
        assert_eq!(p("231").transform(Transform::Complement), p("213"));
        assert_eq!(
            p("612345").transform(Transform::ReverseComplement),
            p("234561")
        );
        assert_eq!(
            Permutation::empty().transform(Transform::Complement),
            Permutation::empty()
        );
    }

    #[test]
    fn transpositions() {
        assert_eq!(
            p("7654321").apply_transposition(1, 2).unwrap(),
            p("6754321")
        );
        assert_eq!(p("312").apply_transposition(2, 2).unwrap(), p("312"));
        assert!(matches!(
            p("312").apply_transposition(0, 2),
            Err(Error::PositionOutOfRange { pos: 0, len: 3 })
        ));
        assert!(p("312").apply_transposition(1, 4).is_err());
    }

    #[test]
    fn example_sigma_product() {
        // s_2 · s_3 s_2 s_1 · s_4 s_3 s_2 s_1 · s_6 s_5, rightmost factor first.
        let word = [5, 6, 1, 2, 3, 4, 1, 2, 3, 2];
        let mut perm = Permutation::decreasing(7);
        for i in word {
            perm.swap_positions(i, i + 1).unwrap();
        }
        assert_eq!(perm, p("5246713"));
    }

    #[test]
    fn line_format() {
        let perm: Permutation = "10 1 2 3 4 5 6 7 8 9".parse().unwrap();
        assert_eq!(perm.to_string(), "10 1 2 3 4 5 6 7 8 9");
        assert_eq!(perm.to_digits(), "10 1 2 3 4 5 6 7 8 9");
        assert_eq!("".parse::<Permutation>().unwrap(), Permutation::empty());
        assert_eq!(Permutation::empty().to_string(), "");
        assert!("1 x".parse::<Permutation>().is_err());
        assert!("1".parse::<Pattern>().is_err());
    }
}
