//! Counting sequences for the generated families, and the prefix sums whose
//! parities drive the reversal pattern of the recursive list builders.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::Error;

/// The counting sequences met by the generated classes.
///
/// Indexing is the conventional one for each sequence:
///
/// | family                 | terms from index 0        |
/// |------------------------|---------------------------|
/// | `Catalan`              | 1, 1, 2, 5, 14, 42, ...   |
/// | `Schroder` (large)     | 1, 2, 6, 22, 90, 394, ... |
/// | `Pell`                 | 0, 1, 2, 5, 12, 29, ...   |
/// | `FibonacciEvenIndex`   | 1, 2, 5, 13, 34, 89, ...  |
/// | `CentralBinomial`      | 1, 2, 6, 20, 70, ...      |
/// | `PowerOfTwo`           | 1, 2, 4, 8, 16, ...       |
///
/// [`CountFamily::class_size`] applies the shift that turns a term into the
/// number of length-`n` permutations of a class counted by the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountFamily {
    Catalan,
    Schroder,
    Pell,
    FibonacciEvenIndex,
    CentralBinomial,
    PowerOfTwo,
}

impl CountFamily {
    pub const ALL: [CountFamily; 6] = [
        CountFamily::Catalan,
        CountFamily::Schroder,
        CountFamily::Pell,
        CountFamily::FibonacciEvenIndex,
        CountFamily::CentralBinomial,
        CountFamily::PowerOfTwo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CountFamily::Catalan => "catalan",
            CountFamily::Schroder => "schroder",
            CountFamily::Pell => "pell",
            CountFamily::FibonacciEvenIndex => "fibonacci_even_index",
            CountFamily::CentralBinomial => "central_binomial",
            CountFamily::PowerOfTwo => "power_of_two",
        }
    }

    /// Size of a class of length-`n` permutations counted by this family:
    /// `c_n` and `P_n` are indexed by `n`, the others by `n - 1`.
    pub fn class_size(self, n: usize) -> BigUint {
        match self {
            CountFamily::Catalan | CountFamily::Pell => sequence_term(self, n),
            _ if n == 0 => BigUint::one(),
            _ => sequence_term(self, n - 1),
        }
    }
}

impl fmt::Display for CountFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CountFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        CountFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownClass(s.to_string()))
    }
}

fn binomial(n: u64, k: u64) -> BigUint {
    let mut acc = BigUint::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// The `n`-th term of `family`.
pub fn sequence_term(family: CountFamily, n: usize) -> BigUint {
    match family {
        CountFamily::Catalan => binomial(2 * n as u64, n as u64) / (n as u64 + 1),
        CountFamily::Schroder => schroder_terms(n).pop().expect("non-empty"),
        CountFamily::Pell => {
            let (mut a, mut b) = (BigUint::zero(), BigUint::one());
            for _ in 0..n {
                let next = &b * 2u32 + &a;
                a = std::mem::replace(&mut b, next);
            }
            a
        }
        CountFamily::FibonacciEvenIndex => {
            // a(n) = 3 a(n-1) - a(n-2), a(0) = 1, a(1) = 2
            let (mut a, mut b) = (BigUint::one(), BigUint::from(2u32));
            for _ in 0..n {
                let next = &b * 3u32 - &a;
                a = std::mem::replace(&mut b, next);
            }
            a
        }
        CountFamily::CentralBinomial => binomial(2 * n as u64, n as u64),
        CountFamily::PowerOfTwo => BigUint::one() << n,
    }
}

/// `r_0 ..= r_n` via `r_n = r_{n-1} + sum_{k=1}^{n} r_{k-1} r_{n-k}`.
pub fn schroder_terms(n: usize) -> Vec<BigUint> {
    let mut r = vec![BigUint::one()];
    for m in 1..=n {
        let mut next = r[m - 1].clone();
        for k in 1..=m {
            next += &r[k - 1] * &r[m - k];
        }
        r.push(next);
    }
    r
}

/// Families with a prefix sum consumed by a list builder.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrefixFamily {
    /// `A(i) = c_0 + ... + c_{i-2}`
    Catalan,
    /// `B(i) = r_0 + ... + r_{i-2}`
    Schroder,
}

/// Memoized prefix sums `A(1..=max)` or `B(1..=max)`.
#[derive(Debug, Clone)]
pub struct PrefixSums {
    family: PrefixFamily,
    values: Vec<BigUint>,
}

impl PrefixSums {
    pub fn new(family: PrefixFamily, max_index: usize) -> Self {
        let count = match family {
            PrefixFamily::Catalan => CountFamily::Catalan,
            PrefixFamily::Schroder => CountFamily::Schroder,
        };
        // values[i - 1] holds the i-th prefix sum; the first is empty.
        let mut values = vec![BigUint::zero()];
        for i in 2..=max_index.max(1) {
            let next = &values[i - 2] + sequence_term(count, i - 2);
            values.push(next);
        }
        PrefixSums { family, values }
    }

    pub fn family(&self) -> PrefixFamily {
        self.family
    }

    /// The `i`-th prefix sum; `None` for `i = 0` or past the table.
    pub fn get(&self, i: usize) -> Option<&BigUint> {
        i.checked_sub(1).and_then(|j| self.values.get(j))
    }

    pub fn is_odd(&self, i: usize) -> Option<bool> {
        self.get(i).map(|v| v.bit(0))
    }
}

/// `prefix_sum(Catalan, i) = A(i)`, `prefix_sum(Schroder, i) = B(i)`, `i >= 1`.
pub fn prefix_sum(family: PrefixFamily, i: usize) -> BigUint {
    assert!(i >= 1, "prefix sums are indexed from 1");
    PrefixSums::new(family, i)
        .get(i)
        .cloned()
        .expect("table covers i")
}
