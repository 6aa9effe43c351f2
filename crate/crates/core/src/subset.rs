//! Crisp subsets of a finite carrier and the crisp ideal notions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::magma::FiniteMagma;

/// A subset of `{0, .., n-1}` stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrispSubset {
    n: usize,
    words: Vec<u64>,
}

impl CrispSubset {
    pub fn empty(n: usize) -> Self {
        CrispSubset {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for x in 0..n {
            s.insert(x);
        }
        s
    }

    pub fn from_elements(n: usize, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut s = Self::empty(n);
        for x in elements {
            if x >= n {
                return Err(Error::ElementOutOfRange { element: x, n });
            }
            s.insert(x);
        }
        Ok(s)
    }

    /// Subset of `{0, .., n-1}` whose members are the set bits of `mask`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64, "mask subsets need n <= 64");
        let mut s = Self::empty(n);
        if n > 0 {
            let keep = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            s.words[0] = mask & keep;
        }
        s
    }

    pub fn carrier(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, x: usize) {
        assert!(x < self.n);
        self.words[x / 64] |= 1 << (x % 64);
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.n && self.words[x / 64] & (1 << (x % 64)) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(|&x| self.contains(x))
    }

    pub fn is_subset_of(&self, other: &CrispSubset) -> bool {
        self.n == other.n && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &CrispSubset) -> CrispSubset {
        CrispSubset {
            n: self.n,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    /// First element of `self` not in `other`.
    pub fn first_outside(&self, other: &CrispSubset) -> Option<usize> {
        self.iter().find(|&x| !other.contains(x))
    }

    /// Every non-empty subset of an `n`-element carrier, ordered by bitmask.
    pub fn all_nonempty(n: usize) -> impl Iterator<Item = CrispSubset> {
        assert!(n < 64, "subset enumeration needs n < 64");
        (1u64..(1u64 << n)).map(move |m| CrispSubset::from_mask(n, m))
    }

    pub fn check_carrier(&self, n: usize) -> Result<()> {
        if self.n == n {
            Ok(())
        } else {
            Err(Error::CarrierMismatch { left: n, right: self.n })
        }
    }
}

impl fmt::Debug for CrispSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for CrispSubset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// `{xy : x in X, y in Y}`.
pub fn subset_product(magma: &FiniteMagma, x: &CrispSubset, y: &CrispSubset) -> Result<CrispSubset> {
    let n = magma.order();
    x.check_carrier(n)?;
    y.check_carrier(n)?;
    let mut out = CrispSubset::empty(n);
    for a in x.iter() {
        for b in y.iter() {
            out.insert(magma.mul(a, b));
        }
    }
    Ok(out)
}

/// The eight ideal notions, shared by crisp subsets and fuzzy sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealKind {
    Subgroupoid,
    Left,
    Right,
    TwoSided,
    GeneralizedBi,
    Bi,
    Interior,
    Quasi,
}

pub type CrispIdealKind = IdealKind;

impl IdealKind {
    pub const ALL: [IdealKind; 8] = [
        IdealKind::Subgroupoid,
        IdealKind::Left,
        IdealKind::Right,
        IdealKind::TwoSided,
        IdealKind::GeneralizedBi,
        IdealKind::Bi,
        IdealKind::Interior,
        IdealKind::Quasi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdealKind::Subgroupoid => "subgroupoid",
            IdealKind::Left => "left",
            IdealKind::Right => "right",
            IdealKind::TwoSided => "two_sided",
            IdealKind::GeneralizedBi => "generalized_bi",
            IdealKind::Bi => "bi",
            IdealKind::Interior => "interior",
            IdealKind::Quasi => "quasi",
        }
    }
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for IdealKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdealKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown ideal kind {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrispVerdict {
    pub kind: IdealKind,
    pub holds: bool,
    /// The containment that failed, e.g. `"SA <= A"`.
    pub condition: Option<&'static str>,
    /// First element of the left-hand side lying outside `A`.
    pub witness: Option<usize>,
}

/// Checks whether the non-empty subset `a` is a crisp ideal of the given kind.
pub fn is_crisp_ideal(magma: &FiniteMagma, a: &CrispSubset, kind: IdealKind) -> Result<CrispVerdict> {
    let n = magma.order();
    a.check_carrier(n)?;
    if a.is_empty() {
        return Err(Error::EmptySubset);
    }
    let s = CrispSubset::full(n);
    let prod = |x: &CrispSubset, y: &CrispSubset| subset_product(magma, x, y).expect("same carrier");

    let conditions: Vec<(&'static str, CrispSubset)> = match kind {
        IdealKind::Subgroupoid => vec![("AA <= A", prod(a, a))],
        IdealKind::Left => vec![("SA <= A", prod(&s, a))],
        IdealKind::Right => vec![("AS <= A", prod(a, &s))],
        IdealKind::TwoSided => vec![("SA <= A", prod(&s, a)), ("AS <= A", prod(a, &s))],
        IdealKind::GeneralizedBi => vec![("(AS)A <= A", prod(&prod(a, &s), a))],
        IdealKind::Bi => vec![("AA <= A", prod(a, a)), ("(AS)A <= A", prod(&prod(a, &s), a))],
        IdealKind::Interior => vec![("(SA)S <= A", prod(&prod(&s, a), &s))],
        IdealKind::Quasi => vec![("AS & SA <= A", prod(a, &s).intersection(&prod(&s, a)))],
    };
    for (condition, lhs) in conditions {
        if let Some(x) = lhs.first_outside(a) {
            return Ok(CrispVerdict {
                kind,
                holds: false,
                condition: Some(condition),
                witness: Some(x),
            });
        }
    }
    Ok(CrispVerdict {
        kind,
        holds: true,
        condition: None,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(n: usize, xs: &[usize]) -> CrispSubset {
        CrispSubset::from_elements(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn products_on_first_table() {
        let g1 = fixtures::g1();
        let all = CrispSubset::full(5);
        assert!(subset_product(&g1, &CrispSubset::empty(5), &all).unwrap().is_empty());
        assert_eq!(subset_product(&g1, &set(5, &[3]), &all).unwrap(), all);
        assert_eq!(subset_product(&g1, &set(5, &[0]), &all).unwrap(), set(5, &[0]));
        assert!(subset_product(&g1, &set(4, &[0]), &all).is_err());
    }

    #[test]
    fn crisp_ideals_on_first_table() {
        let g1 = fixtures::g1();
        let all = CrispSubset::full(5);
        assert!(is_crisp_ideal(&g1, &all, IdealKind::TwoSided).unwrap().holds);
        assert!(is_crisp_ideal(&g1, &set(5, &[0]), IdealKind::Left).unwrap().holds);
        let v = is_crisp_ideal(&g1, &set(5, &[4]), IdealKind::Left).unwrap();
        assert!(!v.holds);
        // column 5 of the table is (1, 2, 3, 5, 4); 1 is the first product outside {5}
        assert_eq!(v.witness, Some(0));
        assert_eq!(v.condition, Some("SA <= A"));
        assert_eq!(
            is_crisp_ideal(&g1, &CrispSubset::empty(5), IdealKind::Left),
            Err(Error::EmptySubset)
        );
    }

    #[test]
    fn bitset_basics() {
        let s = set(70, &[0, 63, 64, 69]);
        assert_eq!(s.len(), 4);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 63, 64, 69]);
        assert!(!s.contains(65));
        assert_eq!(CrispSubset::all_nonempty(5).count(), 31);
        assert!(CrispSubset::from_elements(3, [3]).is_err());
    }
}
