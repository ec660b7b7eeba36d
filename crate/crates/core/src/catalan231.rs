//! Distance-4 Gray code for 231-avoiding permutations, and the lists for
//! 132, 213 and 312 obtained from it by reverse, complement and their
//! composition.
//!
//! Every 231-avoider of length `n` factors as `τ n σ` where `τ` avoids 231
//! on `{1..i-1}` and `σ` avoids 231 on `{i..n-1}`. The list places `n` at
//! positions `1..=n` in turn; for each position `τ` sweeps the length-`(i-1)`
//! list and, for each `τ`, `σ` sweeps the shifted length-`(n-i)` list. The
//! sweep directions alternate so consecutive rows share an endpoint, which
//! keeps every step a rotation of at most four entries.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{changed_positions, Pattern, Permutation, Transform};

/// The four single patterns of length 3 that the 231 list covers by symmetry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern3 {
    P231,
    P132,
    P213,
    P312,
}

impl Pattern3 {
    pub const ALL: [Pattern3; 4] = [
        Pattern3::P231,
        Pattern3::P132,
        Pattern3::P213,
        Pattern3::P312,
    ];

    /// The symmetry carrying the 231 list onto this pattern's list.
    pub fn transform(self) -> Option<Transform> {
        match self {
            Pattern3::P231 => None,
            Pattern3::P132 => Some(Transform::Reverse),
            Pattern3::P213 => Some(Transform::Complement),
            Pattern3::P312 => Some(Transform::ReverseComplement),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Pattern3::P231 => "231",
            Pattern3::P132 => "132",
            Pattern3::P213 => "213",
            Pattern3::P312 => "312",
        }
    }

    pub fn pattern(self) -> Pattern {
        self.as_str().parse().expect("length-3 pattern")
    }
}

impl fmt::Display for Pattern3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Pattern3 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Pattern3::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::UnsupportedPattern(s.to_string()))
    }
}

impl TryFrom<&Pattern> for Pattern3 {
    type Error = Error;

    fn try_from(p: &Pattern) -> Result<Self> {
        p.to_string().parse()
    }
}

/// An ordered list of all length-`n` avoiders of one length-3 pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DList {
    n: usize,
    pattern: Pattern3,
    entries: Vec<Permutation>,
}

impl DList {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pattern(&self) -> Pattern3 {
        self.pattern
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Permutation] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Permutation> {
        self.entries
    }

    /// One-indexed entry.
    pub fn get(&self, j: usize) -> Option<&Permutation> {
        j.checked_sub(1).and_then(|i| self.entries.get(i))
    }

    /// Positions where entry `q` and entry `q + 1` differ.
    pub fn successor_delta(&self, q: usize) -> Result<Vec<usize>> {
        if q == 0 || q >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: q,
                max: self.len().saturating_sub(1),
            });
        }
        changed_positions(&self.entries[q - 1], &self.entries[q])
    }

    fn transformed(&self, pattern: Pattern3) -> DList {
        let entries = match pattern.transform() {
            None => self.entries.clone(),
            Some(kind) => self.entries.iter().map(|p| p.transform(kind)).collect(),
        };
        DList {
            n: self.n,
            pattern,
            entries,
        }
    }
}

/// Reads `list` forwards or backwards without materializing the reversal.
fn oriented(list: &[Permutation], forward: bool, idx: usize) -> &Permutation {
    if forward {
        &list[idx]
    } else {
        &list[list.len() - 1 - idx]
    }
}

/// The 231 lists for every length `0..=max_n`, built bottom-up.
pub fn build_d_lists(max_n: usize) -> Vec<DList> {
    let mut levels: Vec<Vec<Permutation>> = vec![vec![Permutation::empty()]];
    for n in 1..=max_n {
        // Orientation of the τ block flips with each position of n; the σ
        // block flips with each τ across all positions.
        let mut tau_forward = n % 2 == 1;
        let mut sigma_forward = false;
        let mut rows = Vec::new();
        for i in 1..=n {
            let prefix = &levels[i - 1];
            let suffix = &levels[n - i];
            for l in 0..prefix.len() {
                let tau = oriented(prefix, tau_forward, l);
                for r in 0..suffix.len() {
                    let sigma = oriented(suffix, sigma_forward, r);
                    let mut row = Vec::with_capacity(n);
                    row.extend_from_slice(tau.entries());
                    row.push(n as u32);
                    row.extend(sigma.shifted_entries(i as u32 - 1));
                    rows.push(Permutation::from_vec_unchecked(row));
                }
                sigma_forward = !sigma_forward;
            }
            tau_forward = !tau_forward;
        }
        levels.push(rows);
    }
    levels
        .into_iter()
        .enumerate()
        .map(|(n, entries)| DList {
            n,
            pattern: Pattern3::P231,
            entries,
        })
        .collect()
}

/// The Gray code for length-`n` 231-avoiders.
pub fn build_d_list(n: usize) -> DList {
    build_d_lists(n).pop().expect("at least D_0")
}

/// Gray code for length-`n` avoiders of a single length-3 pattern.
pub fn build_pattern3_list(n: usize, pattern: Pattern3) -> DList {
    build_d_list(n).transformed(pattern)
}

/// As [`build_pattern3_list`], for an arbitrary pattern value.
pub fn build_pattern3_list_for(n: usize, pattern: &Pattern) -> Result<DList> {
    Ok(build_pattern3_list(n, Pattern3::try_from(pattern)?))
}

/// Changed positions between entries `q` and `q + 1` of the length-`n` list.
pub fn d_successor_delta(n: usize, q: usize) -> Result<Vec<usize>> {
    build_d_list(n).successor_delta(q)
}
