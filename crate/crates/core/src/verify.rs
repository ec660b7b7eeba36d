//! Brute-force oracles and list checkers.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::perm::{avoids_all, changed_positions, hamming_distance, Pattern, Permutation};
use crate::regular::insert_at_site;
use crate::schroder::{path_distance, SchroderPath, Step};

/// Mismatch reports list at most this many entries per side.
pub const REPORT_LIMIT: usize = 10;

/// Size limit for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            cap: Oracle::DEFAULT_CAP,
        }
    }
}

impl Oracle {
    pub const DEFAULT_CAP: usize = 8;

    /// Explicit opt-in to a larger cap.
    pub fn with_raised_cap(cap: usize) -> Self {
        Oracle { cap }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn allows(&self, n: usize) -> bool {
        n <= self.cap
    }

    /// Every permutation of length `n` avoiding all of `patterns`.
    pub fn avoiders(&self, patterns: &[Pattern], n: usize) -> Result<BTreeSet<Permutation>> {
        if !self.allows(n) {
            return Err(Error::OracleCapExceeded { n, cap: self.cap });
        }
        if n == 0 {
            return Ok(BTreeSet::from([Permutation::empty()]));
        }
        // One worker per leading entry.
        let found = std::thread::scope(|s| {
            let workers: Vec<_> = (1..=n as u32)
                .map(|first| {
                    s.spawn(move || {
                        let rest: Vec<u32> = (1..=n as u32).filter(|&v| v != first).collect();
                        let k = rest.len();
                        rest.into_iter()
                            .permutations(k)
                            .map(|tail| {
                                let mut entries = Vec::with_capacity(n);
                                entries.push(first);
                                entries.extend(tail);
                                Permutation::from_vec_unchecked(entries)
                            })
                            .filter(|p| avoids_all(p, patterns))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            workers
                .into_iter()
                .flat_map(|w| w.join().expect("oracle worker panicked"))
                .collect()
        });
        Ok(found)
    }

    /// Every Schröder path of semilength `n`, by exhaustive search.
    pub fn schroder_paths(&self, n: usize) -> Result<BTreeSet<SchroderPath>> {
        if !self.allows(n) {
            return Err(Error::OracleCapExceeded { n, cap: self.cap });
        }
        fn extend(
            width: usize,
            height: usize,
            word: &mut Vec<Step>,
            out: &mut BTreeSet<SchroderPath>,
        ) {
            if width == 0 {
                if height == 0 {
                    out.insert(SchroderPath::new(word.clone()).expect("search stays valid"));
                }
                return;
            }
            let mut try_step = |s: Step, w: usize, h: usize, word: &mut Vec<Step>| {
                word.push(s);
                extend(w, h, word, out);
                word.pop();
            };
            if height < width {
                try_step(Step::Up, width - 1, height + 1, word);
            }
            if height > 0 {
                try_step(Step::Down, width - 1, height - 1, word);
            }
            if width >= 2 {
                try_step(Step::Flat, width - 2, height, word);
            }
        }
        let mut out = BTreeSet::new();
        extend(2 * n, 0, &mut Vec::new(), &mut out);
        Ok(out)
    }
}

/// [`Oracle::avoiders`] under the default cap.
pub fn brute_force_avoiders(patterns: &[Pattern], n: usize) -> Result<BTreeSet<Permutation>> {
    Oracle::default().avoiders(patterns, n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleMatch {
    Matched,
    Mismatched {
        missing: Vec<String>,
        extra: Vec<String>,
        missing_total: usize,
        extra_total: usize,
    },
    Skipped,
}

impl OracleMatch {
    fn compare<T: Ord + fmt::Display>(listed: &BTreeSet<T>, expected: &BTreeSet<T>) -> OracleMatch {
        let missing: Vec<&T> = expected.difference(listed).collect();
        let extra: Vec<&T> = listed.difference(expected).collect();
        if missing.is_empty() && extra.is_empty() {
            return OracleMatch::Matched;
        }
        let show = |v: &[&T]| v.iter().take(REPORT_LIMIT).map(|x| x.to_string()).collect();
        OracleMatch::Mismatched {
            missing: show(&missing),
            extra: show(&extra),
            missing_total: missing.len(),
            extra_total: extra.len(),
        }
    }
}

impl fmt::Display for OracleMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleMatch::Matched => f.write_str("matched"),
            OracleMatch::Skipped => f.write_str("skipped"),
            OracleMatch::Mismatched {
                missing_total,
                extra_total,
                ..
            } => {
                write!(
                    f,
                    "mismatched (missing {missing_total}, extra {extra_total})"
                )
            }
        }
    }
}

/// Measurements of an ordered list against a distance bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayReport {
    pub n: usize,
    pub count: usize,
    pub max_adjacent_distance: usize,
    pub circular_distance: usize,
    pub duplicates: usize,
    pub oracle_match: OracleMatch,
    /// Bound checked, if any.
    pub max_dist: Option<usize>,
    /// Whether the first/last pair must meet the bound too.
    pub circular: bool,
}

impl GrayReport {
    pub fn adjacent_ok(&self) -> bool {
        self.max_dist
            .is_none_or(|d| self.max_adjacent_distance <= d)
    }

    pub fn circular_ok(&self) -> bool {
        !self.circular || self.max_dist.is_none_or(|d| self.circular_distance <= d)
    }

    pub fn passed(&self) -> bool {
        self.duplicates == 0
            && self.adjacent_ok()
            && self.circular_ok()
            && !matches!(self.oracle_match, OracleMatch::Mismatched { .. })
    }
}

impl fmt::Display for GrayReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "count: {}", self.count)?;
        writeln!(f, "max_adjacent_distance: {}", self.max_adjacent_distance)?;
        writeln!(f, "circular_distance: {}", self.circular_distance)?;
        writeln!(f, "duplicates: {}", self.duplicates)?;
        if let Some(d) = self.max_dist {
            writeln!(f, "max_dist: {d}")?;
        }
        writeln!(f, "circular: {}", self.circular)?;
        writeln!(f, "oracle: {}", self.oracle_match)?;
        if let OracleMatch::Mismatched {
            missing,
            extra,
            missing_total,
            extra_total,
        } = &self.oracle_match
        {
            for m in missing {
                writeln!(f, "missing: {m}")?;
            }
            if *missing_total > missing.len() {
                writeln!(f, "missing_more: {}", missing_total - missing.len())?;
            }
            for e in extra {
                writeln!(f, "extra: {e}")?;
            }
            if *extra_total > extra.len() {
                writeln!(f, "extra_more: {}", extra_total - extra.len())?;
            }
        }
        write!(f, "result: {}", if self.passed() { "pass" } else { "fail" })
    }
}

fn measure<T: Ord>(
    items: &[T],
    size: impl Fn(&T) -> usize,
    dist: impl Fn(&T, &T) -> usize,
    max_dist: Option<usize>,
    circular: bool,
) -> Result<GrayReport> {
    let first = items.first().ok_or(Error::EmptyList)?;
    let n = size(first);
    if let Some((index, item)) = items.iter().enumerate().find(|(_, x)| size(x) != n) {
        return Err(Error::RaggedList {
            index,
            expected: n,
            found: size(item),
        });
    }
    let max_adjacent_distance = items
        .iter()
        .tuple_windows()
        .map(|(a, b)| dist(a, b))
        .max()
        .unwrap_or(0);
    let circular_distance = dist(first, items.last().expect("non-empty"));
    let distinct: BTreeSet<&T> = items.iter().collect();
    Ok(GrayReport {
        n,
        count: items.len(),
        max_adjacent_distance,
        circular_distance,
        duplicates: items.len() - distinct.len(),
        oracle_match: OracleMatch::Skipped,
        max_dist,
        circular,
    })
}

fn perm_distance(a: &Permutation, b: &Permutation) -> usize {
    hamming_distance(a, b).expect("lengths checked")
}

fn schroder_distance(a: &SchroderPath, b: &SchroderPath) -> usize {
    path_distance(a, b).expect("lengths checked")
}

/// Distance profile of `list` against `max_dist`.
pub fn check_gray(list: &[Permutation], max_dist: usize, circular: bool) -> Result<GrayReport> {
    measure(
        list,
        Permutation::len,
        perm_distance,
        Some(max_dist),
        circular,
    )
}

/// Compares `list` as a set with the avoiders of `patterns`. The oracle is
/// skipped when the length is above its cap.
pub fn check_complete(
    list: &[Permutation],
    patterns: &[Pattern],
    oracle: &Oracle,
) -> Result<GrayReport> {
    let mut report = measure(list, Permutation::len, perm_distance, None, false)?;
    attach_oracle(&mut report, list, patterns, oracle)?;
    Ok(report)
}

/// [`check_gray`] and [`check_complete`] in one report.
pub fn check_list(
    list: &[Permutation],
    max_dist: usize,
    circular: bool,
    patterns: &[Pattern],
    oracle: &Oracle,
) -> Result<GrayReport> {
    let mut report = check_gray(list, max_dist, circular)?;
    attach_oracle(&mut report, list, patterns, oracle)?;
    Ok(report)
}

fn attach_oracle(
    report: &mut GrayReport,
    list: &[Permutation],
    patterns: &[Pattern],
    oracle: &Oracle,
) -> Result<()> {
    if oracle.allows(report.n) {
        let listed: BTreeSet<Permutation> = list.iter().cloned().collect();
        let expected = oracle.avoiders(patterns, report.n)?;
        report.oracle_match = OracleMatch::compare(&listed, &expected);
    }
    Ok(())
}

/// Distance profile of a path list, checked against the exhaustive path
/// enumeration when the semilength is within the oracle cap.
pub fn check_path_list(
    list: &[SchroderPath],
    max_dist: usize,
    circular: bool,
    oracle: &Oracle,
) -> Result<GrayReport> {
    let mut report = measure(
        list,
        SchroderPath::semilength,
        schroder_distance,
        Some(max_dist),
        circular,
    )?;
    if oracle.allows(report.n) {
        let listed: BTreeSet<SchroderPath> = list.iter().cloned().collect();
        report.oracle_match = OracleMatch::compare(&listed, &oracle.schroder_paths(report.n)?);
    }
    Ok(report)
}

/// True if the values at the changed positions of `b` are a cyclic shift of
/// those of `a`, read left to right.
pub fn is_rotation_step(a: &Permutation, b: &Permutation) -> Result<bool> {
    let positions = changed_positions(a, b)?;
    let before: Vec<u32> = positions
        .iter()
        .map(|&p| a.get(p).expect("in range"))
        .collect();
    let after: Vec<u32> = positions
        .iter()
        .map(|&p| b.get(p).expect("in range"))
        .collect();
    if before.is_empty() {
        return Ok(true);
    }
    let m = before.len();
    Ok((1..m).any(|r| (0..m).all(|i| after[(i + r) % m] == before[i])))
}

/// Sites of `perm` (numbered right to left from 1) where inserting
/// `len + 1` keeps every pattern avoided.
pub fn active_sites(perm: &Permutation, patterns: &[Pattern]) -> Vec<usize> {
    (1..=perm.len() + 1)
        .filter(|&site| {
            avoids_all(
                &insert_at_site(perm, site).expect("site in range"),
                patterns,
            )
        })
        .collect()
}

/// True if the active sites are exactly `1..=k` for some `k`.
pub fn is_right_justified(sites: &[usize]) -> bool {
    sites.iter().enumerate().all(|(i, &s)| s == i + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::patterns;

    fn p(s: &str) -> Permutation {
        Permutation::from_digits(s).unwrap()
    }

    #[test]
    fn oracle_counts() {
        assert_eq!(
            brute_force_avoiders(&patterns(&["231"]), 4).unwrap().len(),
            14
        );
        assert_eq!(
            brute_force_avoiders(&patterns(&["1243", "2143"]), 3)
                .unwrap()
                .len(),
            6
        );
        assert_eq!(
            brute_force_avoiders(&patterns(&["321", "312"]), 5)
                .unwrap()
                .len(),
            16
        );
        assert_eq!(
            brute_force_avoiders(&patterns(&["231"]), 0).unwrap().len(),
            1
        );
    }

    #[test]
    fn oracle_cap() {
        let err = brute_force_avoiders(&patterns(&["231"]), 9).unwrap_err();
        assert_eq!(err, Error::OracleCapExceeded { n: 9, cap: 8 });
        assert!(Oracle::with_raised_cap(9).allows(9));
    }

    #[test]
    fn path_oracle_counts() {
        let o = Oracle::default();
        let sizes: Vec<_> = (0..=5)
            .map(|n| o.schroder_paths(n).unwrap().len())
            .collect();
        assert_eq!(sizes, [1, 2, 6, 22, 90, 394]);
    }

    #[test]
    fn gray_report_fields() {
        let list = [p("123"), p("132"), p("312")];
        let r = check_gray(&list, 2, false).unwrap();
        assert_eq!(
            (
                r.count,
                r.max_adjacent_distance,
                r.circular_distance,
                r.duplicates
            ),
            (3, 2, 3, 0)
        );
        assert!(r.passed());
        assert!(!check_gray(&list, 2, true).unwrap().passed());
        assert!(!check_gray(&list, 1, false).unwrap().passed());
    }

    #[test]
    fn ragged_and_empty_lists() {
        assert_eq!(check_gray(&[], 4, false).unwrap_err(), Error::EmptyList);
        let err = check_gray(&[p("12"), p("123")], 4, false).unwrap_err();
        assert_eq!(
            err,
            Error::RaggedList {
                index: 1,
                expected: 2,
                found: 3
            }
        );
    }

    #[test]
    fn duplicates_fail() {
        let r = check_gray(&[p("12"), p("21"), p("12")], 2, false).unwrap();
        assert_eq!(r.duplicates, 1);
        assert!(!r.passed());
    }

    #[test]
    fn mismatch_reports_missing_entry() {
        let mut list = crate::build_d_list(4).into_entries();
        let removed = list.remove(5);
        let r = check_complete(&list, &patterns(&["231"]), &Oracle::default()).unwrap();
        match &r.oracle_match {
            OracleMatch::Mismatched {
                missing,
                extra,
                missing_total,
                extra_total,
            } => {
                assert_eq!(missing, &[removed.to_string()]);
                assert!(extra.is_empty());
                assert_eq!((*missing_total, *extra_total), (1, 0));
            }
            other => panic!("expected mismatch, got {other:?}"),
        }
        assert!(!r.passed());
        assert!(r.to_string().contains(&format!("missing: {removed}")));
    }

    #[test]
    fn rotation_steps() {
        assert!(is_rotation_step(&p("2176345"), &p("3127645")).unwrap());
        assert!(is_rotation_step(&p("12"), &p("21")).unwrap());
        assert!(is_rotation_step(&p("123"), &p("123")).unwrap());
        assert!(!is_rotation_step(&p("1234"), &p("2143")).unwrap());
    }

    #[test]
    fn sites_of_small_perms() {
        let pats = patterns(&["321"]);
        assert_eq!(active_sites(&p("12"), &pats), [1, 2, 3]);
        assert_eq!(active_sites(&p("21"), &pats), [1, 2]);
        assert!(is_right_justified(&[1, 2, 3]));
        assert!(!is_right_justified(&[1, 3]));
    }
}
