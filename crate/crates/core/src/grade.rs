//! Exact membership grades in the unit interval.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Maximum number of fractional digits accepted in decimal grade input.
pub const MAX_DECIMAL_DIGITS: usize = 6;

/// A normalized rational in `[0, 1]`.
///
/// Ordering and equality are exact; there is no floating point anywhere in
/// the grade path.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Grade(Ratio<u64>);

impl Grade {
    pub const ZERO: Grade = Grade(Ratio::new_raw(0, 1));
    pub const ONE: Grade = Grade(Ratio::new_raw(1, 1));

    /// Builds `numer / denom`, normalizing and rejecting values outside `[0, 1]`.
    pub fn new(numer: u64, denom: u64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::GradeSyntax(format!("{numer}/0")));
        }
        if numer > denom {
            return Err(Error::GradeOutOfRange(format!("{numer}/{denom}")));
        }
        Ok(Grade(Ratio::new(numer, denom)))
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.numer() == 0
    }

    pub fn min(self, other: Grade) -> Grade {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Grade) -> Grade {
        if other > self {
            other
        } else {
            self
        }
    }

    /// `1 - self`.
    pub fn complement(self) -> Grade {
        Grade(Ratio::new(self.denom() - self.numer(), self.denom()))
    }

    /// Exact sum, which may exceed one.
    pub fn sum(self, other: Grade) -> Ratio<u128> {
        let a = Ratio::new(self.numer() as u128, self.denom() as u128);
        let b = Ratio::new(other.numer() as u128, other.denom() as u128);
        a + b
    }

    /// True when `self + other <= 1`.
    pub fn fits_with(self, other: Grade) -> bool {
        // a/b + c/d <= 1  <=>  ad + cb <= bd
        let (a, b) = (self.numer() as u128, self.denom() as u128);
        let (c, d) = (other.numer() as u128, other.denom() as u128);
        a * d + c * b <= b * d
    }

    /// Midpoint of two grades, or `None` if its reduced form does not fit in
    /// 64-bit components.
    pub fn midpoint(self, other: Grade) -> Option<Grade> {
        let mid = (self.sum(other)) / 2;
        let numer = u64::try_from(*mid.numer()).ok()?;
        let denom = u64::try_from(*mid.denom()).ok()?;
        Some(Grade(Ratio::new_raw(numer, denom)))
    }
}

impl PartialOrd for Grade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Grade {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.denom() == other.denom() {
            return self.numer().cmp(&other.numer());
        }
        let lhs = self.numer() as u128 * other.denom() as u128;
        let rhs = other.numer() as u128 * self.denom() as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"p/q"`, an integer, or a decimal with at most six fractional
/// digits. Decimals are converted exactly; longer ones are rejected.
impl FromStr for Grade {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::GradeSyntax(s.to_string());
        if let Some((p, q)) = s.split_once('/') {
            let p: u64 = parse_digits(p).ok_or_else(bad)?;
            let q: u64 = parse_digits(q).ok_or_else(bad)?;
            if q == 0 {
                return Err(bad());
            }
            return Grade::new(p, q);
        }
        let (int, frac) = match s.split_once('.') {
            Some((i, f)) => (i, f),
            None => (s, ""),
        };
        if int.is_empty() && frac.is_empty() {
            return Err(bad());
        }
        if frac.len() > MAX_DECIMAL_DIGITS {
            return Err(Error::GradeSyntax(format!(
                "{s} (more than {MAX_DECIMAL_DIGITS} fractional digits)"
            )));
        }
        let int: u64 = if int.is_empty() {
            0
        } else {
            parse_digits(int).ok_or_else(bad)?
        };
        let frac_val: u64 = if frac.is_empty() {
            0
        } else {
            parse_digits(frac).ok_or_else(bad)?
        };
        let scale = 10u64.pow(frac.len() as u32);
        let numer = int
            .checked_mul(scale)
            .and_then(|v| v.checked_add(frac_val))
            .ok_or_else(|| Error::GradeOutOfRange(s.to_string()))?;
        Grade::new(numer, scale).map_err(|_| Error::GradeOutOfRange(s.to_string()))
    }
}

fn parse_digits(s: &str) -> Option<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl Serialize for Grade {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Grade {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The finite grade set `{0, 1/k, ..., 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradeChain {
    k: u64,
}

impl GradeChain {
    pub fn new(k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidChain);
        }
        Ok(GradeChain { k })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// The `i`-th grade, `i / k`.
    pub fn grade(&self, i: u64) -> Grade {
        Grade::new(i, self.k).expect("chain index within range")
    }

    pub fn grades(&self) -> Vec<Grade> {
        (0..=self.k).map(|i| self.grade(i)).collect()
    }

    /// All `(mu, gamma)` pairs on the chain with `mu + gamma <= 1`, in
    /// lexicographic order.
    pub fn valid_pairs(&self) -> Vec<(Grade, Grade)> {
        let mut out = Vec::with_capacity(self.pair_count() as usize);
        for m in 0..=self.k {
            for g in 0..=(self.k - m) {
                out.push((self.grade(m), self.grade(g)));
            }
        }
        out
    }

    pub fn pair_count(&self) -> u64 {
        (self.k + 1) * (self.k + 2) / 2
    }

    pub fn contains(&self, g: Grade) -> bool {
        self.k.is_multiple_of(g.denom())
    }
}
