//! Finite groupoids given by Cayley tables and the identities they may satisfy.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A groupoid on `{0, .., n-1}` with product `table[a * n + b] = ab`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteMagma {
    n: usize,
    table: Vec<usize>,
}

impl FiniteMagma {
    /// Validates an `n x n` table of signed entries.
    pub fn new(n: usize, rows: &[Vec<i64>]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if rows.len() != n {
            return Err(Error::RowCountMismatch {
                expected: n,
                found: rows.len(),
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    row: r,
                    found: row.len(),
                });
            }
            for (c, &v) in row.iter().enumerate() {
                if v < 0 || v as u64 >= n as u64 {
                    return Err(Error::EntryOutOfRange {
                        row: r,
                        col: c,
                        value: v,
                        n,
                    });
                }
                table.push(v as usize);
            }
        }
        Ok(FiniteMagma { n, table })
    }

    /// Builds from 0-based rows; the carrier size is the number of rows.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let signed: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|&v| v as i64).collect()).collect();
        Self::new(rows.len(), &signed)
    }

    /// Builds from a flat row-major table that is already known to be valid.
    pub(crate) fn from_flat(n: usize, table: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), n * n);
        debug_assert!(table.iter().all(|&v| v < n));
        FiniteMagma { n, table }
    }

    /// The constant magma `xy = 0`.
    pub fn constant(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        Ok(FiniteMagma {
            n,
            table: vec![0; n * n],
        })
    }

    /// The left-zero magma `xy = x`.
    pub fn left_zero(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        let table = (0..n).flat_map(|a| std::iter::repeat_n(a, n)).collect();
        Ok(FiniteMagma { n, table })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn flat(&self) -> &[usize] {
        &self.table
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub(crate) fn check_element(&self, a: usize) -> Result<()> {
        if a < self.n {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { element: a, n: self.n })
        }
    }

    /// Evaluates one instance of `law` at `tuple`. Returns `None` when the
    /// tuple has the wrong arity or the law is not equational.
    pub fn law_holds_at(&self, law: LawKind, tuple: &[usize]) -> Option<bool> {
        let m = |a, b| self.mul(a, b);
        match (law, tuple) {
            (LawKind::LeftInvertive, &[a, b, c]) => Some(m(m(a, b), c) == m(m(c, b), a)),
            (LawKind::Medial, &[a, b, c, d]) => Some(m(m(a, b), m(c, d)) == m(m(a, c), m(b, d))),
            (LawKind::Paramedial, &[a, b, c, d]) => Some(m(m(a, b), m(c, d)) == m(m(d, c), m(b, a))),
            (LawKind::Law4, &[a, b, c]) => Some(m(a, m(b, c)) == m(b, m(a, c))),
            _ => None,
        }
    }

    /// Checks `law` over the whole carrier.
    ///
    /// Equational laws report the lexicographically first violating tuple.
    /// `HasLeftIdentity` reports the smallest left identity as its witness.
    pub fn check_law(&self, law: LawKind) -> LawReport {
        if law == LawKind::HasLeftIdentity {
            let e = self.left_identities().first().copied();
            return LawReport {
                law,
                holds: e.is_some(),
                witness: e.map(|e| vec![e]),
            };
        }
        let n = self.n;
        let arity = law.arity();
        let mut tuple = vec![0usize; arity];
        loop {
            if self.law_holds_at(law, &tuple) == Some(false) {
                return LawReport {
                    law,
                    holds: false,
                    witness: Some(tuple),
                };
            }
            // odometer, last coordinate fastest
            let mut i = arity;
            loop {
                if i == 0 {
                    return LawReport {
                        law,
                        holds: true,
                        witness: None,
                    };
                }
                i -= 1;
                tuple[i] += 1;
                if tuple[i] < n {
                    break;
                }
                tuple[i] = 0;
            }
        }
    }

    pub fn is_left_invertive(&self) -> bool {
        self.check_law(LawKind::LeftInvertive).holds
    }

    /// All `e` with `ex = x` for every `x`, ascending.
    pub fn left_identities(&self) -> Vec<usize> {
        self.elements()
            .filter(|&e| self.elements().all(|x| self.mul(e, x) == x))
            .collect()
    }

    pub fn left_identity(&self) -> Option<usize> {
        self.left_identities().first().copied()
    }

    /// Every `(x, y)` with `(x(aa))y = a`, in lexicographic order.
    pub fn intra_regular_witnesses(&self, a: usize) -> Result<Vec<IntraRegularityWitness>> {
        self.check_element(a)?;
        let sq = self.mul(a, a);
        let mut out = Vec::new();
        for x in self.elements() {
            let xa2 = self.mul(x, sq);
            for y in self.elements() {
                if self.mul(xa2, y) == a {
                    out.push(IntraRegularityWitness { element: a, x, y });
                }
            }
        }
        Ok(out)
    }

    /// The lexicographically first `(x, y)` with `(x(aa))y = a`.
    pub fn intra_regular_witness(&self, a: usize) -> Result<Option<IntraRegularityWitness>> {
        self.check_element(a)?;
        let sq = self.mul(a, a);
        for x in self.elements() {
            let xa2 = self.mul(x, sq);
            for y in self.elements() {
                if self.mul(xa2, y) == a {
                    return Ok(Some(IntraRegularityWitness { element: a, x, y }));
                }
            }
        }
        Ok(None)
    }

    pub fn intra_regularity(&self) -> IntraRegularity {
        let witnesses = self
            .elements()
            .map(|a| {
                self.intra_regular_witness(a)
                    .expect("element in carrier")
                    .map(|w| (w.x, w.y))
            })
            .collect();
        IntraRegularity { witnesses }
    }

    pub fn is_intra_regular(&self) -> bool {
        self.elements()
            .all(|a| self.intra_regular_witness(a).expect("element in carrier").is_some())
    }
}

impl fmt::Debug for FiniteMagma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteMagma({}; ", self.n)?;
        for (i, row) in self.table.chunks(self.n).enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LawKind {
    /// `(ab)c = (cb)a`
    LeftInvertive,
    /// `(ab)(cd) = (ac)(bd)`
    Medial,
    /// `(ab)(cd) = (dc)(ba)`
    Paramedial,
    /// `a(bc) = b(ac)`
    Law4,
    HasLeftIdentity,
}

impl LawKind {
    pub const ALL: [LawKind; 5] = [
        LawKind::LeftInvertive,
        LawKind::Medial,
        LawKind::Paramedial,
        LawKind::Law4,
        LawKind::HasLeftIdentity,
    ];

    pub fn arity(self) -> usize {
        match self {
            LawKind::LeftInvertive | LawKind::Law4 => 3,
            LawKind::Medial | LawKind::Paramedial => 4,
            LawKind::HasLeftIdentity => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LawKind::LeftInvertive => "left_invertive",
            LawKind::Medial => "medial",
            LawKind::Paramedial => "paramedial",
            LawKind::Law4 => "law4",
            LawKind::HasLeftIdentity => "has_left_identity",
        }
    }

    pub fn equation(self) -> &'static str {
        match self {
            LawKind::LeftInvertive => "(ab)c = (cb)a",
            LawKind::Medial => "(ab)(cd) = (ac)(bd)",
            LawKind::Paramedial => "(ab)(cd) = (dc)(ba)",
            LawKind::Law4 => "a(bc) = b(ac)",
            LawKind::HasLeftIdentity => "exists e: ex = x for all x",
        }
    }
}

impl fmt::Display for LawKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub law: LawKind,
    pub holds: bool,
    /// Violating tuple for equational laws, or the left identity.
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntraRegularityWitness {
    pub element: usize,
    pub x: usize,
    pub y: usize,
}

impl IntraRegularityWitness {
    pub fn verify(&self, magma: &FiniteMagma) -> bool {
        let a = self.element;
        magma.mul(magma.mul(self.x, magma.mul(a, a)), self.y) == a
    }
}

/// Per-element intra-regularity witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntraRegularity {
    pub witnesses: Vec<Option<(usize, usize)>>,
}

impl IntraRegularity {
    pub fn holds(&self) -> bool {
        self.witnesses.iter().all(Option::is_some)
    }

    pub fn failing_elements(&self) -> Vec<usize> {
        self.witnesses
            .iter()
            .enumerate()
            .filter(|(_, w)| w.is_none())
            .map(|(a, _)| a)
            .collect()
    }

    pub fn first_failing(&self) -> Option<usize> {
        self.witnesses.iter().position(Option::is_none)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn trivial_magma() {
        let m = FiniteMagma::from_rows(&[vec![0]]).unwrap();
        assert!(m.is_left_invertive());
        assert_eq!(m.left_identities(), vec![0]);
        let w = m.intra_regular_witness(0).unwrap().unwrap();
        assert_eq!((w.x, w.y), (0, 0));
        assert!(m.is_intra_regular());
    }

    #[test]
    fn rejects_malformed_tables() {
        assert_eq!(
            FiniteMagma::new(2, &[vec![0], vec![0, 1]]),
            Err(Error::DimensionMismatch {
                expected: 2,
                row: 0,
                found: 1
            })
        );
        assert!(matches!(
            FiniteMagma::new(2, &[vec![0, 2], vec![0, 1]]),
            Err(Error::EntryOutOfRange { value: 2, .. })
        ));
        assert!(matches!(
            FiniteMagma::new(2, &[vec![0, -1], vec![0, 1]]),
            Err(Error::EntryOutOfRange { value: -1, .. })
        ));
        assert_eq!(FiniteMagma::new(0, &[]), Err(Error::EmptyCarrier));
        assert!(matches!(
            FiniteMagma::new(2, &[vec![0, 0]]),
            Err(Error::RowCountMismatch { .. })
        ));
    }

    #[test]
    fn left_zero_violates_left_invertive() {
        let m = FiniteMagma::left_zero(2).unwrap();
        let r = m.check_law(LawKind::LeftInvertive);
        assert!(!r.holds);
        assert_eq!(r.witness, Some(vec![0, 0, 1]));
        assert_eq!(m.law_holds_at(LawKind::LeftInvertive, &[0, 0, 1]), Some(false));
        assert!(m.left_identities().is_empty());
        assert!(!m.check_law(LawKind::HasLeftIdentity).holds);
    }

    #[test]
    fn constant_table_is_left_invertive() {
        assert!(FiniteMagma::constant(3).unwrap().is_left_invertive());
    }

    #[test]
    fn first_example_table() {
        let g1 = fixtures::g1();
        for law in LawKind::ALL {
            assert!(g1.check_law(law).holds, "{law}");
        }
        assert_eq!(g1.left_identities(), vec![3]);
        assert_eq!(g1.check_law(LawKind::HasLeftIdentity).witness, Some(vec![3]));
        assert!(g1.is_intra_regular());
        // element 3 (1-based): first witness is (3,4); (5,5) also works
        let w = g1.intra_regular_witness(2).unwrap().unwrap();
        assert_eq!((w.x, w.y), (2, 3));
        let all = g1.intra_regular_witnesses(2).unwrap();
        assert!(all.iter().any(|w| (w.x, w.y) == (4, 4)));
        assert!(all.iter().all(|w| w.verify(&g1)));
    }

    #[test]
    fn second_example_table() {
        let g2 = fixtures::g2();
        assert!(g2.is_left_invertive());
        assert_eq!(g2.left_identities(), vec![3]);
        assert!(g2.intra_regular_witness(2).unwrap().is_none());
        let ir = g2.intra_regularity();
        assert!(!ir.holds());
        assert_eq!(ir.failing_elements(), vec![1, 2]);
    }

    #[test]
    fn witness_rejects_out_of_range() {
        let g1 = fixtures::g1();
        assert!(g1.intra_regular_witness(5).is_err());
    }
}
