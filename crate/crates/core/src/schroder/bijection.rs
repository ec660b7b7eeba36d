//! The map from semilength-`n` Schröder paths to `S_{n+1}(1243, 2143)`.
//!
//! Dots are placed at two families of quarter-integer points under the path,
//! grouped into maximal horizontal runs that do not cross the path, and each
//! run becomes a descending product of adjacent transpositions. All geometry
//! uses coordinates scaled by four, so every comparison is exact.

use crate::perm::Permutation;

use super::path::SchroderPath;

/// A point under a path, at `(x4 / 4, y4 / 4)`, labelled by the adjacent
/// transposition `s_label`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dot {
    pub x4: i64,
    pub y4: i64,
    pub label: usize,
}

impl Dot {
    fn at(x4: i64, y4: i64) -> Dot {
        // (1 + x - y) / 2 in quarter units
        let label = (4 + x4 - y4) / 8;
        Dot {
            x4,
            y4,
            label: label as usize,
        }
    }
}

/// `s_k s_{k-1} ... s_l`, i.e. `s_l` acts first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SigmaFactor {
    pub k: usize,
    pub l: usize,
}

impl SigmaFactor {
    /// Applies the factor to `perm`: `s_l` first, `s_k` last.
    pub fn apply(&self, perm: &mut Permutation) {
        for i in self.l..=self.k {
            perm.swap_positions(i, i + 1)
                .expect("factor labels stay within the permutation");
        }
    }
}

/// Every dot strictly between the axis and the path, ordered by `(x4, y4)`.
pub fn place_dots(path: &SchroderPath) -> Vec<Dot> {
    let n = path.semilength() as i64;
    let mut dots = Vec::new();
    for m in 0..n {
        for a in 0..n {
            for (x4, y4) in [(8 * m + 1, 8 * a + 5), (8 * m + 5, 8 * a + 1)] {
                if y4 < path.height4(x4) {
                    dots.push(Dot::at(x4, y4));
                }
            }
        }
    }
    dots.sort();
    dots
}

/// Decomposes the dot diagram of `path` into horizontal runs, rightmost
/// run first.
///
/// The next run starts at the rightmost dot without a line, preferring the
/// largest label (lowest dot) when several share that abscissa, and extends
/// left one dot at a time while the path stays strictly above the run.
pub fn sigma_decomposition(path: &SchroderPath) -> Vec<SigmaFactor> {
    decompose(path, true)
}

fn decompose(path: &SchroderPath, prefer_largest_label: bool) -> Vec<SigmaFactor> {
    let dots = place_dots(path);
    let mut lined = vec![false; dots.len()];
    let index_of = |x4: i64, y4: i64| dots.binary_search_by(|d| (d.x4, d.y4).cmp(&(x4, y4))).ok();
    let mut factors = Vec::new();
    while let Some(start) = (0..dots.len()).filter(|&i| !lined[i]).max_by_key(|&i| {
        let label = dots[i].label as i64;
        (
            dots[i].x4,
            if prefer_largest_label { label } else { -label },
        )
    }) {
        let head = dots[start];
        lined[start] = true;
        let mut leftmost = head;
        while let Some(prev) = index_of(leftmost.x4 - 8, head.y4) {
            if path.min_height4(dots[prev].x4, head.x4) <= head.y4 {
                break;
            }
            lined[prev] = true;
            leftmost = dots[prev];
        }
        factors.push(SigmaFactor {
            k: head.label,
            l: leftmost.label,
        });
    }
    factors
}

/// Image of `path` in `S_{n+1}(1243, 2143)`: the factors applied in order of
/// selection to `(n+1) n ... 1`.
pub fn phi(path: &SchroderPath) -> Permutation {
    let mut perm = Permutation::decreasing(path.semilength() + 1);
    for factor in sigma_decomposition(path) {
        factor.apply(&mut perm);
    }
    perm
}

/// `phi` mapped over the path Gray code of semilength `n`: a Gray code for
/// the Schröder permutations of length `n + 1`.
pub fn build_phi_list(n: usize) -> Vec<Permutation> {
    super::build_s_paths(n).iter().map(phi).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(s: &str) -> SchroderPath {
        s.parse().unwrap()
    }

    #[test]
    fn flat_paths_have_no_dots() {
        assert!(place_dots(&path("eeee")).is_empty());
        assert_eq!(
            place_dots(&path("ud")),
            [Dot {
                x4: 5,
                y4: 1,
                label: 1
            }]
        );
        assert!(sigma_decomposition(&path("eee")).is_empty());
        assert_eq!(phi(&path("eee")), Permutation::decreasing(4));
    }

    #[test]
    fn single_peak_of_height_two() {
        // Peak of height 2 at x = 2: room for (5/4, 1/4), (9/4, 5/4) and
        // (13/4, 1/4); the two low dots join into one run.
        let dots = place_dots(&path("uudd"));
        let coords: Vec<_> = dots.iter().map(|d| (d.x4, d.y4, d.label)).collect();
        assert_eq!(coords, [(5, 1, 1), (9, 5, 1), (13, 1, 2)]);
        assert_eq!(
            sigma_decomposition(&path("uudd")),
            [SigmaFactor { k: 2, l: 1 }, SigmaFactor { k: 1, l: 1 }]
        );
        assert_eq!(phi(&path("uudd")), Permutation::from_digits("123").unwrap());
    }

    #[test]
    fn labels_follow_lattice_family() {
        for p in crate::schroder::build_s_paths(5) {
            for d in place_dots(&p) {
                let expected = if d.x4 % 8 == 1 {
                    (d.x4 - 1) / 8 - (d.y4 - 5) / 8
                } else {
                    (d.x4 - 5) / 8 - (d.y4 - 1) / 8 + 1
                };
                assert_eq!(d.label as i64, expected, "{p} {d:?}");
            }
        }
    }

    #[test]
    fn tie_break_among_equal_abscissae_is_immaterial() {
        for n in 0..=7 {
            for p in crate::schroder::build_s_paths(n) {
                let mut other = Permutation::decreasing(n + 1);
                for f in decompose(&p, false) {
                    f.apply(&mut other);
                }
                assert_eq!(phi(&p), other, "{p}");
            }
        }
    }

    #[test]
    fn small_images() {
        let words = |n| {
            build_phi_list(n)
                .iter()
                .map(|p| p.to_digits())
                .collect::<Vec<_>>()
        };
        assert_eq!(words(0), ["1"]);
        assert_eq!(words(1), ["21", "12"]);
        assert_eq!(words(2), ["321", "312", "132", "231", "123", "213"]);
    }
}
