use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::count::CountFamily;
use crate::error::{Error, Result};
use crate::perm::{patterns, Pattern, Permutation};

/// The regular pattern classes with a known succession function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatternClass {
    /// {321, 312}
    P321_312,
    /// {321, 3412, 4123}
    P321_3412_4123,
    /// {321, 3412}
    P321_3412,
    /// {321, 4123}
    P321_4123,
    /// {312}
    P312,
    /// {321}
    P321,
    /// {4321, 4312}
    P4321_4312,
    /// {4231, 4132}
    P4231_4132,
    /// {4123, 4213}
    P4123_4213,
    /// {4321, 4231, 4312, 4132}
    CbcA,
    /// {4231, 4132, 4213, 4123}
    CbcB,
    /// {321, (p+1) 1 2 ... p}
    AvoidA,
    /// {321, 3412, (p+1) 1 2 ... p}
    AvoidB,
    /// {(p+1) τ p : τ in S_{p-1}}
    AvoidC,
}

impl PatternClass {
    pub const ALL: [PatternClass; 14] = [
        PatternClass::P321_312,
        PatternClass::P321_3412_4123,
        PatternClass::P321_3412,
        PatternClass::P321_4123,
        PatternClass::P312,
        PatternClass::P321,
        PatternClass::P4321_4312,
        PatternClass::P4231_4132,
        PatternClass::P4123_4213,
        PatternClass::CbcA,
        PatternClass::CbcB,
        PatternClass::AvoidA,
        PatternClass::AvoidB,
        PatternClass::AvoidC,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PatternClass::P321_312 => "321_312",
            PatternClass::P321_3412_4123 => "321_3412_4123",
            PatternClass::P321_3412 => "321_3412",
            PatternClass::P321_4123 => "321_4123",
            PatternClass::P312 => "312",
            PatternClass::P321 => "321",
            PatternClass::P4321_4312 => "4321_4312",
            PatternClass::P4231_4132 => "4231_4132",
            PatternClass::P4123_4213 => "4123_4213",
            PatternClass::CbcA => "cbc_a",
            PatternClass::CbcB => "cbc_b",
            PatternClass::AvoidA => "avoid_a",
            PatternClass::AvoidB => "avoid_b",
            PatternClass::AvoidC => "avoid_c",
        }
    }

    pub fn is_parameterized(self) -> bool {
        matches!(
            self,
            PatternClass::AvoidA | PatternClass::AvoidB | PatternClass::AvoidC
        )
    }

    /// The sequence counting the class, for the classes with a fixed pattern
    /// set.
    pub fn count_family(self) -> Option<CountFamily> {
        use PatternClass::*;
        Some(match self {
            P321_312 => CountFamily::PowerOfTwo,
            P321_3412_4123 => CountFamily::Pell,
            P321_3412 | P321_4123 => CountFamily::FibonacciEvenIndex,
            P312 | P321 => CountFamily::Catalan,
            P4321_4312 | P4231_4132 | P4123_4213 => CountFamily::Schroder,
            CbcA | CbcB => CountFamily::CentralBinomial,
            AvoidA | AvoidB | AvoidC => return None,
        })
    }
}

impl fmt::Display for PatternClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PatternClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PatternClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownClass(s.to_string()))
    }
}

/// A regular pattern set together with its succession function.
///
/// Every node of the generating tree has its active sites right justified,
/// so a node with `k` active sites can insert its new maximum into sites
/// `1..=k`; `chi(i, k)` is the number of active sites of the child built
/// through site `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuccessionRule {
    class: PatternClass,
    p: Option<usize>,
    patterns: Vec<Pattern>,
}

/// `(p+1) 1 2 ... p`
fn lifted_identity(p: usize) -> Pattern {
    let mut entries = vec![p as u32 + 1];
    entries.extend(1..=p as u32);
    Pattern::new(Permutation::from_vec_unchecked(entries)).expect("length p + 1 >= 3")
}

impl SuccessionRule {
    /// Active-site count of the root permutation `1`.
    pub const ROOT_K: usize = 2;

    pub fn new(class: PatternClass, p: Option<usize>) -> Result<Self> {
        use PatternClass::*;
        let p = if class.is_parameterized() {
            match p {
                None => {
                    return Err(Error::MissingParameter {
                        class: class.name().to_string(),
                    })
                }
                Some(p) if p < 2 => {
                    return Err(Error::BadParameter {
                        class: class.name().to_string(),
                        p,
                    })
                }
                Some(p) => Some(p),
            }
        } else {
            None
        };
        let patterns = match class {
            P321_312 => patterns(&["321", "312"]),
            P321_3412_4123 => patterns(&["321", "3412", "4123"]),
            P321_3412 => patterns(&["321", "3412"]),
            P321_4123 => patterns(&["321", "4123"]),
            P312 => patterns(&["312"]),
            P321 => patterns(&["321"]),
            P4321_4312 => patterns(&["4321", "4312"]),
            P4231_4132 => patterns(&["4231", "4132"]),
            P4123_4213 => patterns(&["4123", "4213"]),
            CbcA => patterns(&["4321", "4231", "4312", "4132"]),
            CbcB => patterns(&["4231", "4132", "4213", "4123"]),
            AvoidA => {
                let mut v = patterns(&["321"]);
                v.push(lifted_identity(p.expect("checked")));
                v
            }
            AvoidB => {
                let mut v = patterns(&["321", "3412"]);
                v.push(lifted_identity(p.expect("checked")));
                v
            }
            AvoidC => {
                let p = p.expect("checked") as u32;
                (1..p)
                    .permutations(p as usize - 1)
                    .map(|tau| {
                        let mut entries = vec![p + 1];
                        entries.extend(tau);
                        entries.push(p);
                        Pattern::new(Permutation::from_vec_unchecked(entries)).expect("length >= 3")
                    })
                    .collect()
            }
        };
        Ok(SuccessionRule { class, p, patterns })
    }

    pub fn class(&self) -> PatternClass {
        self.class
    }

    pub fn p(&self) -> Option<usize> {
        self.p
    }

    /// `"321"`, or `"avoid_a(p=3)"` for parameterized classes.
    pub fn name(&self) -> String {
        match self.p {
            Some(p) => format!("{}(p={p})", self.class.name()),
            None => self.class.name().to_string(),
        }
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    pub fn count_family(&self) -> Option<CountFamily> {
        self.class.count_family()
    }

    /// Number of active sites of the child obtained through active site `i`
    /// of a node with `k` active sites, `1 <= i <= k`.
    pub fn chi(&self, i: usize, k: usize) -> usize {
        use PatternClass::*;
        debug_assert!(1 <= i && i <= k, "site {i} of {k}");
        match self.class {
            P321_312 => 2,
            P321_3412_4123 => {
                if i == 1 {
                    3
                } else {
                    2
                }
            }
            P321_3412 => {
                if i == 1 {
                    k + 1
                } else {
                    2
                }
            }
            P321_4123 => {
                if i == 1 {
                    3
                } else {
                    i
                }
            }
            P312 => i + 1,
            P321 => {
                if i == 1 {
                    k + 1
                } else {
                    i
                }
            }
            P4321_4312 => {
                if i <= 2 {
                    k + 1
                } else {
                    i
                }
            }
            P4231_4132 => {
                if i == 1 || i == k {
                    k + 1
                } else {
                    i + 1
                }
            }
            P4123_4213 => {
                if i + 1 >= k {
                    k + 1
                } else {
                    i + 2
                }
            }
            CbcA => match i {
                1 => k + 1,
                2 => 3,
                _ => i,
            },
            CbcB => {
                if i == 1 {
                    3
                } else {
                    i + 1
                }
            }
            AvoidA | AvoidB => {
                let p = self.p.expect("parameterized");
                match i {
                    1 if k < p => k + 1,
                    // k never exceeds p from the root; larger k clamps to p.
                    1 => p,
                    _ if self.class == AvoidA => i,
                    _ => 2,
                }
            }
            AvoidC => {
                let p = self.p.expect("parameterized");
                if k < p || i + p > k + 1 {
                    k + 1
                } else {
                    i + p - 1
                }
            }
        }
    }
}

/// The eleven classes with a fixed pattern set.
pub fn catalog() -> Vec<SuccessionRule> {
    PatternClass::ALL
        .into_iter()
        .filter(|c| !c.is_parameterized())
        .map(|c| SuccessionRule::new(c, None).expect("fixed class"))
        .collect()
}

/// [`catalog`] plus every parameterized class at each `p` in `params`.
pub fn catalog_with_params(params: &[usize]) -> Result<Vec<SuccessionRule>> {
    let mut rules = catalog();
    for class in PatternClass::ALL
        .into_iter()
        .filter(|c| c.is_parameterized())
    {
        for &p in params {
            rules.push(SuccessionRule::new(class, Some(p))?);
        }
    }
    Ok(rules)
}

/// Looks up a rule by class name. `p` is required for the parameterized
/// classes and ignored otherwise.
pub fn lookup(name: &str, p: Option<usize>) -> Result<SuccessionRule> {
    SuccessionRule::new(name.parse()?, p)
}
