use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One step of a Schröder path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    /// `(1, 1)`
    Up,
    /// `(1, -1)`
    Down,
    /// `(2, 0)`
    Flat,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::Up => 'u',
            Step::Down => 'd',
            Step::Flat => 'e',
        }
    }

    /// Horizontal extent in quarter units.
    pub(crate) fn width4(self) -> i64 {
        match self {
            Step::Up | Step::Down => 4,
            Step::Flat => 8,
        }
    }

    fn rise(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
            Step::Flat => 0,
        }
    }
}

/// A lattice path from `(0,0)` to `(2n,0)` over `u`, `d`, `e` that never
/// goes below the axis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SchroderPath {
    steps: Vec<Step>,
}

impl SchroderPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height = 0i64;
        for s in &steps {
            height += s.rise();
            if height < 0 {
                return Err(Error::InvalidPath(render(&steps)));
            }
        }
        if height != 0 {
            return Err(Error::InvalidPath(render(&steps)));
        }
        Ok(SchroderPath { steps })
    }

    pub fn empty() -> Self {
        SchroderPath::default()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// `#U + #E`
    pub fn semilength(&self) -> usize {
        self.steps.iter().filter(|s| **s != Step::Down).count()
    }

    /// The length-`2n` word over `{u, d, r}` with every `e` replaced by `rr`.
    pub fn unit_word(&self) -> Vec<char> {
        self.steps
            .iter()
            .flat_map(|s| match s {
                Step::Flat => ['r', 'r'].as_slice(),
                Step::Up => ['u'].as_slice(),
                Step::Down => ['d'].as_slice(),
            })
            .copied()
            .collect()
    }

    /// Height at abscissa `x4 / 4`, times four.
    pub fn height4(&self, x4: i64) -> i64 {
        let mut start = 0i64;
        let mut h = 0i64;
        for s in &self.steps {
            let end = start + s.width4();
            if x4 <= end {
                let t = (x4 - start).max(0);
                return match s {
                    Step::Up => h + t,
                    Step::Down => h - t,
                    Step::Flat => h,
                };
            }
            h += 4 * s.rise();
            start = end;
        }
        h
    }

    /// Minimum height over the closed interval `[a4, b4]`, times four.
    ///
    /// The path is linear between integer abscissae, so the minimum is
    /// attained at an endpoint or a lattice vertex inside the interval.
    pub fn min_height4(&self, a4: i64, b4: i64) -> i64 {
        let inner = (a4.div_euclid(4) + 1..)
            .map(|x| 4 * x)
            .take_while(|&x| x < b4);
        [a4, b4]
            .into_iter()
            .chain(inner)
            .map(|x| self.height4(x))
            .min()
            .expect("non-empty interval")
    }
}

/// `u α d β`
fn elevated(alpha: &SchroderPath, beta: &SchroderPath) -> SchroderPath {
    let mut steps = Vec::with_capacity(2 + alpha.steps.len() + beta.steps.len());
    steps.push(Step::Up);
    steps.extend_from_slice(&alpha.steps);
    steps.push(Step::Down);
    steps.extend_from_slice(&beta.steps);
    SchroderPath { steps }
}

fn render(steps: &[Step]) -> String {
    steps.iter().map(|s| s.letter()).collect()
}

impl fmt::Display for SchroderPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.steps))
    }
}

impl FromStr for SchroderPath {
    type Err = Error;

    /// Lowercase `u`, `d`, `e` with no separators.
    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'u' => Ok(Step::Up),
                'd' => Ok(Step::Down),
                'e' => Ok(Step::Flat),
                _ => Err(Error::InvalidPath(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        SchroderPath::new(steps).map_err(|_| Error::InvalidPath(s.to_string()))
    }
}

/// Distance between two paths of equal semilength: positional difference of
/// their unit words.
pub fn path_distance(a: &SchroderPath, b: &SchroderPath) -> Result<usize> {
    let (wa, wb) = (a.unit_word(), b.unit_word());
    if wa.len() != wb.len() {
        return Err(Error::LengthMismatch {
            left: a.semilength(),
            right: b.semilength(),
        });
    }
    Ok(wa.iter().zip(&wb).filter(|(x, y)| x != y).count())
}

fn oriented(list: &[SchroderPath], forward: bool, idx: usize) -> &SchroderPath {
    if forward {
        &list[idx]
    } else {
        &list[list.len() - 1 - idx]
    }
}

/// The path Gray codes for every semilength `0..=max_n`.
///
/// Level `n` lists `e·S_{n-1}` first, then every `u α d β` with the return
/// to the axis at `2i`: `α` sweeps level `i-1` forwards when `n+i` is odd,
/// and `β` sweeps level `n-i` with an orientation that flips after every
/// `α`, starting backwards.
pub fn build_s_path_lists(max_n: usize) -> Vec<Vec<SchroderPath>> {
    let mut levels = vec![vec![SchroderPath::empty()]];
    for n in 1..=max_n {
        let mut out: Vec<SchroderPath> = levels[n - 1]
            .iter()
            .map(|p| {
                let mut steps = Vec::with_capacity(p.steps.len() + 1);
                steps.push(Step::Flat);
                steps.extend_from_slice(&p.steps);
                SchroderPath { steps }
            })
            .collect();
        // β's orientation parity is j + B(i) + 1; B(i) counts the α's seen
        // at earlier return points, so a running toggle tracks it.
        let mut beta_forward = false;
        for i in 1..=n {
            let alpha_forward = (n + i) % 2 == 1;
            let inner = &levels[i - 1];
            let tail = &levels[n - i];
            for j in 0..inner.len() {
                let alpha = oriented(inner, alpha_forward, j);
                for k in 0..tail.len() {
                    let beta = oriented(tail, beta_forward, k);
                    out.push(elevated(alpha, beta));
                }
                beta_forward = !beta_forward;
            }
        }
        levels.push(out);
    }
    levels
}

/// The Gray-ordered list of all semilength-`n` Schröder paths.
pub fn build_s_paths(n: usize) -> Vec<SchroderPath> {
    build_s_path_lists(n).pop().expect("at least S_0")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(list: &[SchroderPath]) -> Vec<String> {
        list.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn small_levels() {
        assert_eq!(words(&build_s_paths(0)), [""]);
        assert_eq!(words(&build_s_paths(1)), ["e", "ud"]);
        assert_eq!(
            words(&build_s_paths(2)),
            ["ee", "eud", "udud", "ude", "uudd", "ued"]
        );
    }

    #[test]
    fn parse_and_validate() {
        assert!("euded".parse::<SchroderPath>().is_err());
        assert!("du".parse::<SchroderPath>().is_err());
        assert!("uu".parse::<SchroderPath>().is_err());
        assert!("uxd".parse::<SchroderPath>().is_err());
        let p: SchroderPath = "eud".parse().unwrap();
        assert_eq!(p.semilength(), 2);
        assert_eq!(p.to_string(), "eud");
    }

    #[test]
    fn distances() {
        let d = |a: &str, b: &str| path_distance(&a.parse().unwrap(), &b.parse().unwrap());
        assert_eq!(d("e", "ud").unwrap(), 2);
        assert_eq!(d("ued", "eud").unwrap(), 2);
        assert_eq!(d("uudd", "uudd").unwrap(), 0);
        assert!(d("e", "ee").is_err());
    }

    #[test]
    fn heights() {
        let p: SchroderPath = "ued".parse().unwrap();
        assert_eq!(p.height4(0), 0);
        assert_eq!(p.height4(1), 1);
        assert_eq!(p.height4(4), 4);
        assert_eq!(p.height4(10), 4);
        assert_eq!(p.height4(14), 2);
        assert_eq!(p.height4(16), 0);
        assert_eq!(p.min_height4(1, 15), 1);
        assert_eq!(p.min_height4(5, 11), 4);
    }
}
