use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::perm::Permutation;

use super::rules::SuccessionRule;

/// Inserts `len + 1` into site `site` of `perm`. Sites are numbered right
/// to left: site 1 follows the last entry, site `len + 1` precedes the first.
pub fn insert_at_site(perm: &Permutation, site: usize) -> Result<Permutation> {
    let len = perm.len();
    if site == 0 || site > len + 1 {
        return Err(Error::PositionOutOfRange {
            pos: site,
            len: len + 1,
        });
    }
    let mut entries = perm.entries().to_vec();
    entries.insert(len + 1 - site, len as u32 + 1);
    Ok(Permutation::from_vec_unchecked(entries))
}

/// Site visiting order for a node with `k` active sites: odd sites
/// ascending, then even sites descending. Consecutive sites differ by at
/// most 2, and the order starts at site 1 and ends at site 2.
pub fn l_sequence(k: usize) -> Vec<usize> {
    let odds = (1..=k).step_by(2);
    let evens = (1..=k / 2).rev().map(|j| 2 * j);
    odds.chain(evens).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Up,
    Down,
}

impl Direction {
    pub fn flipped(self) -> Direction {
        match self {
            Direction::Up => Direction::Down,
            Direction::Down => Direction::Up,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Up => "up",
            Direction::Down => "down",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A node of the Gray-ordered generating tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DirectedPermutation {
    pub perm: Permutation,
    pub direction: Direction,
    /// Number of active sites.
    pub k: usize,
}

impl DirectedPermutation {
    pub fn root() -> Self {
        DirectedPermutation {
            perm: Permutation::identity(1),
            direction: Direction::Up,
            k: SuccessionRule::ROOT_K,
        }
    }
}

/// Children of `node` in Gray order.
///
/// For an up node the `j`-th child inserts into site `L_k(j)`; the first
/// child is up and the rest are down. A down node lists the same children
/// in reverse with every direction flipped.
pub fn successors(node: &DirectedPermutation, rule: &SuccessionRule) -> Vec<DirectedPermutation> {
    let mut children: Vec<_> = l_sequence(node.k)
        .into_iter()
        .enumerate()
        .map(|(j, site)| DirectedPermutation {
            perm: insert_at_site(&node.perm, site).expect("active sites are right justified"),
            direction: if j == 0 {
                Direction::Up
            } else {
                Direction::Down
            },
            k: rule.chi(site, node.k),
        })
        .collect();
    if node.direction == Direction::Down {
        children.reverse();
        for c in &mut children {
            c.direction = c.direction.flipped();
        }
    }
    children
}

/// The Gray-ordered list of a class at one length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CList {
    pub class_name: String,
    pub n: usize,
    pub entries: Vec<DirectedPermutation>,
}

impl CList {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn perms(&self) -> impl Iterator<Item = &Permutation> + '_ {
        self.entries.iter().map(|d| &d.perm)
    }

    pub fn to_permutations(&self) -> Vec<Permutation> {
        self.perms().cloned().collect()
    }
}

/// Expands the Gray-ordered tree one level at a time from `(1)` up.
pub fn build_c_list(rule: &SuccessionRule, n: usize) -> Result<CList> {
    if n == 0 {
        return Err(Error::LengthTooSmall { n, min: 1 });
    }
    let mut level = vec![DirectedPermutation::root()];
    for _ in 1..n {
        level = level
            .iter()
            .flat_map(|node| successors(node, rule))
            .collect();
    }
    Ok(CList {
        class_name: rule.name(),
        n,
        entries: level,
    })
}

/// Work counters from one tree walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GenStats {
    /// Recursive calls, the root and the leaves included.
    pub calls: u64,
    pub outputs: u64,
}

impl GenStats {
    pub fn calls_per_output(&self) -> f64 {
        self.calls as f64 / self.outputs as f64
    }
}

struct TreeWalk<'a, F> {
    rule: &'a SuccessionRule,
    n: usize,
    perm: Vec<u32>,
    stats: GenStats,
    visit: F,
}

impl<F: FnMut(&[u32])> TreeWalk<'_, F> {
    fn descend(&mut self, size: usize, k: usize) {
        self.stats.calls += 1;
        if size == self.n {
            self.stats.outputs += 1;
            (self.visit)(&self.perm);
            return;
        }
        let size = size + 1;
        self.perm.push(size as u32);
        self.descend(size, self.rule.chi(1, k));
        // Each swap moves the new maximum one site to the left.
        for i in 1..k {
            self.perm.swap(size - i, size - i - 1);
            self.descend(size, self.rule.chi(i + 1, k));
        }
        for i in (1..k).rev() {
            self.perm.swap(size - i, size - i - 1);
        }
        self.perm.pop();
    }
}

/// Depth-first walk of the generating tree in natural order, calling
/// `visit` on every length-`n` leaf. Each internal call has at least two
/// children, so the walk runs in constant amortized time per output.
pub fn gen_avoid<F: FnMut(&[u32])>(rule: &SuccessionRule, n: usize, visit: F) -> Result<GenStats> {
    if n == 0 {
        return Err(Error::LengthTooSmall { n, min: 1 });
    }
    let mut walk = TreeWalk {
        rule,
        n,
        perm: vec![1],
        stats: GenStats::default(),
        visit,
    };
    walk.descend(1, SuccessionRule::ROOT_K);
    Ok(walk.stats)
}

/// [`gen_avoid`] collected into a list.
pub fn gen_avoid_list(rule: &SuccessionRule, n: usize) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    gen_avoid(rule, n, |p| {
        out.push(Permutation::from_vec_unchecked(p.to_vec()))
    })?;
    Ok(out)
}

struct GrayWalk<'a, F> {
    rule: &'a SuccessionRule,
    n: usize,
    perm: Vec<u32>,
    visit: F,
}

impl<F: FnMut(&[u32], Direction)> GrayWalk<'_, F> {
    fn descend(&mut self, direction: Direction, k: usize) {
        let len = self.perm.len();
        if len == self.n {
            (self.visit)(&self.perm, direction);
            return;
        }
        let order = l_sequence(k);
        for idx in 0..order.len() {
            let j = match direction {
                Direction::Up => idx,
                Direction::Down => order.len() - 1 - idx,
            };
            let base = if j == 0 {
                Direction::Up
            } else {
                Direction::Down
            };
            let child = match direction {
                Direction::Up => base,
                Direction::Down => base.flipped(),
            };
            let site = order[j];
            let at = len + 1 - site;
            self.perm.insert(at, len as u32 + 1);
            self.descend(child, self.rule.chi(site, k));
            self.perm.remove(at);
        }
    }
}

/// Streams the Gray-ordered list depth first, without materializing the
/// intermediate levels. Yields the same sequence as [`build_c_list`].
pub fn gen_gray<F: FnMut(&[u32], Direction)>(
    rule: &SuccessionRule,
    n: usize,
    visit: F,
) -> Result<()> {
    if n == 0 {
        return Err(Error::LengthTooSmall { n, min: 1 });
    }
    let mut walk = GrayWalk {
        rule,
        n,
        perm: vec![1],
        visit,
    };
    walk.descend(Direction::Up, SuccessionRule::ROOT_K);
    Ok(())
}

/// Number of length-`n` nodes of the generating tree, by propagating the
/// distribution of active-site counts level by level.
pub fn class_size(rule: &SuccessionRule, n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let mut level: BTreeMap<usize, BigUint> =
        BTreeMap::from([(SuccessionRule::ROOT_K, BigUint::one())]);
    for _ in 1..n {
        let mut next: BTreeMap<usize, BigUint> = BTreeMap::new();
        for (&k, count) in &level {
            for i in 1..=k {
                *next.entry(rule.chi(i, k)).or_insert_with(BigUint::zero) += count;
            }
        }
        level = next;
    }
    level.into_values().sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regular::lookup;

    fn p(s: &str) -> Permutation {
        Permutation::from_digits(s).unwrap()
    }

    #[test]
    fn site_insertion() {
        assert_eq!(insert_at_site(&p("12"), 1).unwrap(), p("123"));
        assert_eq!(insert_at_site(&p("12"), 3).unwrap(), p("312"));
        assert_eq!(insert_at_site(&p("21"), 2).unwrap(), p("231"));
        assert_eq!(insert_at_site(&Permutation::empty(), 1).unwrap(), p("1"));
        assert!(insert_at_site(&p("12"), 0).is_err());
        assert!(insert_at_site(&p("12"), 4).is_err());
    }

    #[test]
    fn site_orders() {
        assert_eq!(l_sequence(5), [1, 3, 5, 4, 2]);
        assert_eq!(l_sequence(4), [1, 3, 4, 2]);
        assert_eq!(l_sequence(2), [1, 2]);
        assert_eq!(l_sequence(1), [1]);
    }

    #[test]
    fn root_expansion_for_321() {
        let rule = lookup("321", None).unwrap();
        let kids = successors(&DirectedPermutation::root(), &rule);
        assert_eq!(
            kids,
            [
                DirectedPermutation {
                    perm: p("12"),
                    direction: Direction::Up,
                    k: 3
                },
                DirectedPermutation {
                    perm: p("21"),
                    direction: Direction::Down,
                    k: 2
                },
            ]
        );
    }

    #[test]
    fn down_nodes_reverse_and_flip() {
        let rule = lookup("321", None).unwrap();
        let up = DirectedPermutation {
            perm: p("1423"),
            direction: Direction::Up,
            k: 3,
        };
        let down = DirectedPermutation {
            direction: Direction::Down,
            ..up.clone()
        };
        let mut expected = successors(&up, &rule);
        expected.reverse();
        for c in &mut expected {
            c.direction = c.direction.flipped();
        }
        assert_eq!(successors(&down, &rule), expected);
        let words: Vec<_> = successors(&down, &rule)
            .iter()
            .map(|d| d.perm.to_digits())
            .collect();
        assert_eq!(words, ["14253", "14523", "14235"]);
    }

    #[test]
    fn length_one() {
        for rule in crate::regular::catalog() {
            assert_eq!(gen_avoid_list(&rule, 1).unwrap(), [p("1")]);
            assert_eq!(build_c_list(&rule, 1).unwrap().to_permutations(), [p("1")]);
        }
        let rule = lookup("312", None).unwrap();
        assert!(gen_avoid_list(&rule, 0).is_err());
        assert!(build_c_list(&rule, 0).is_err());
    }

    #[test]
    fn natural_order_for_321() {
        let rule = lookup("321", None).unwrap();
        let words: Vec<_> = gen_avoid_list(&rule, 3)
            .unwrap()
            .iter()
            .map(|p| p.to_digits())
            .collect();
        assert_eq!(words, ["123", "132", "312", "213", "231"]);
    }

    #[test]
    fn streaming_gray_walk_matches_levels() {
        for rule in crate::regular::catalog() {
            for n in 1..=6 {
                let mut streamed = Vec::new();
                gen_gray(&rule, n, |perm, dir| {
                    streamed.push((Permutation::from_vec_unchecked(perm.to_vec()), dir))
                })
                .unwrap();
                let built: Vec<_> = build_c_list(&rule, n)
                    .unwrap()
                    .entries
                    .into_iter()
                    .map(|d| (d.perm, d.direction))
                    .collect();
                assert_eq!(streamed, built, "{} n={n}", rule.name());
            }
        }
    }

    #[test]
    fn tree_counts_match_walk() {
        for rule in crate::regular::catalog_with_params(&[2, 3, 4]).unwrap() {
            for n in 1..=8 {
                let stats = gen_avoid(&rule, n, |_| {}).unwrap();
                assert_eq!(BigUint::from(stats.outputs), class_size(&rule, n));
            }
        }
    }
}
