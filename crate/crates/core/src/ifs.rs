//! Intuitionistic fuzzy sets over a finite carrier.

use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grade::{Grade, GradeChain};
use crate::magma::FiniteMagma;
use crate::subset::CrispSubset;

/// Whether the `mu + gamma <= 1` constraint is enforced at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strictness {
    #[default]
    Strict,
    Lenient,
}

/// A pair of grade vectors `(mu, gamma)`: membership and nonmembership.
///
/// Equality and hashing look only at the two vectors; the strictness tag
/// records how the value was admitted, not what it is.
#[derive(Clone, Serialize)]
pub struct Ifs {
    mu: Vec<Grade>,
    gamma: Vec<Grade>,
    #[serde(skip)]
    strictness: Strictness,
}

impl Ifs {
    pub fn new(mu: Vec<Grade>, gamma: Vec<Grade>, strictness: Strictness) -> Result<Self> {
        if mu.len() != gamma.len() {
            return Err(Error::LengthMismatch {
                mu: mu.len(),
                gamma: gamma.len(),
            });
        }
        if mu.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        let set = Ifs { mu, gamma, strictness };
        if strictness == Strictness::Strict {
            if let Some(x) = set.first_violation() {
                return Err(Error::ConstraintViolation {
                    element: x,
                    sum: set.sum_at(x),
                });
            }
        }
        Ok(set)
    }

    /// Parses two lists of grade strings (`"p/q"` or short decimals).
    pub fn parse(mu: &[&str], gamma: &[&str], strictness: Strictness) -> Result<Self> {
        let p = |v: &[&str]| v.iter().map(|s| s.parse()).collect::<Result<Vec<Grade>>>();
        Self::new(p(mu)?, p(gamma)?, strictness)
    }

    pub(crate) fn from_parts(mu: Vec<Grade>, gamma: Vec<Grade>) -> Self {
        Ifs {
            mu,
            gamma,
            strictness: Strictness::Lenient,
        }
    }

    /// The set with `mu = 1` and `gamma = 0` everywhere.
    pub fn delta(n: usize) -> Self {
        Ifs {
            mu: vec![Grade::ONE; n],
            gamma: vec![Grade::ZERO; n],
            strictness: Strictness::Strict,
        }
    }

    /// The least set: `mu = 0`, `gamma = 1`.
    pub fn bottom(n: usize) -> Self {
        Ifs {
            mu: vec![Grade::ZERO; n],
            gamma: vec![Grade::ONE; n],
            strictness: Strictness::Strict,
        }
    }

    /// The 0/1-valued set of a crisp subset.
    pub fn characteristic(x: &CrispSubset) -> Self {
        let n = x.carrier();
        let mu: Vec<Grade> = (0..n)
            .map(|i| if x.contains(i) { Grade::ONE } else { Grade::ZERO })
            .collect();
        let gamma = mu.iter().map(|g| g.complement()).collect();
        Ifs {
            mu,
            gamma,
            strictness: Strictness::Strict,
        }
    }

    #[inline]
    pub fn carrier(&self) -> usize {
        self.mu.len()
    }

    #[inline]
    pub fn mu(&self, x: usize) -> Grade {
        self.mu[x]
    }

    #[inline]
    pub fn gamma(&self, x: usize) -> Grade {
        self.gamma[x]
    }

    pub fn mus(&self) -> &[Grade] {
        &self.mu
    }

    pub fn gammas(&self) -> &[Grade] {
        &self.gamma
    }

    pub fn strictness(&self) -> Strictness {
        self.strictness
    }

    /// Elements where `mu + gamma > 1`.
    pub fn violations(&self) -> Vec<usize> {
        (0..self.carrier())
            .filter(|&x| !self.mu[x].fits_with(self.gamma[x]))
            .collect()
    }

    pub fn first_violation(&self) -> Option<usize> {
        (0..self.carrier()).find(|&x| !self.mu[x].fits_with(self.gamma[x]))
    }

    pub fn is_strict_valid(&self) -> bool {
        self.first_violation().is_none()
    }

    /// `mu(x) + gamma(x)` rendered exactly, e.g. `"13/10"`.
    pub fn sum_at(&self, x: usize) -> String {
        let s = self.mu[x].sum(self.gamma[x]);
        if *s.denom() == 1 {
            s.numer().to_string()
        } else {
            format!("{}/{}", s.numer(), s.denom())
        }
    }

    /// All distinct grades appearing in either component.
    pub fn grade_values(&self) -> Vec<Grade> {
        let mut v: Vec<Grade> = self.mu.iter().chain(&self.gamma).copied().collect();
        v.sort();
        v.dedup();
        v
    }

    fn check_same(&self, other: &Ifs) -> Result<()> {
        if self.carrier() == other.carrier() {
            Ok(())
        } else {
            Err(Error::CarrierMismatch {
                left: self.carrier(),
                right: other.carrier(),
            })
        }
    }

    /// Inclusion: `mu_A <= mu_B` and `gamma_A >= gamma_B` pointwise.
    pub fn leq(&self, other: &Ifs) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.first_not_leq(other).is_none())
    }

    /// First element where inclusion fails, with the failing component.
    pub fn first_not_leq(&self, other: &Ifs) -> Option<(usize, Component)> {
        (0..self.carrier()).find_map(|x| {
            if self.mu[x] > other.mu[x] {
                Some((x, Component::Mu))
            } else if self.gamma[x] < other.gamma[x] {
                Some((x, Component::Gamma))
            } else {
                None
            }
        })
    }

    /// First element where the two sets differ.
    pub fn first_difference(&self, other: &Ifs) -> Option<(usize, Component)> {
        (0..self.carrier()).find_map(|x| {
            if self.mu[x] != other.mu[x] {
                Some((x, Component::Mu))
            } else if self.gamma[x] != other.gamma[x] {
                Some((x, Component::Gamma))
            } else {
                None
            }
        })
    }

    pub fn lattice_op(&self, other: &Ifs, kind: LatticeOpKind) -> Result<Ifs> {
        self.check_same(other)?;
        Ok(match kind {
            LatticeOpKind::Intersection => self.meet(other),
            LatticeOpKind::Union => self.join(other),
        })
    }

    /// `A ∩ B`: pointwise min of `mu`, max of `gamma`.
    pub(crate) fn meet(&self, other: &Ifs) -> Ifs {
        Ifs::from_parts(
            self.mu.iter().zip(&other.mu).map(|(a, b)| (*a).min(*b)).collect(),
            self.gamma.iter().zip(&other.gamma).map(|(a, b)| (*a).max(*b)).collect(),
        )
    }

    /// `A ∪ B`: pointwise max of `mu`, min of `gamma`.
    pub(crate) fn join(&self, other: &Ifs) -> Ifs {
        Ifs::from_parts(
            self.mu.iter().zip(&other.mu).map(|(a, b)| (*a).max(*b)).collect(),
            self.gamma.iter().zip(&other.gamma).map(|(a, b)| (*a).min(*b)).collect(),
        )
    }

    /// `{x : mu(x) >= alpha and gamma(x) <= alpha}` for `alpha` in `(0, 1]`.
    pub fn level_cut(&self, alpha: Grade) -> Result<CrispSubset> {
        if alpha.is_zero() {
            return Err(Error::AlphaOutOfRange(alpha.to_string()));
        }
        Ok(self.cut_unchecked(alpha))
    }

    pub(crate) fn cut_unchecked(&self, alpha: Grade) -> CrispSubset {
        let n = self.carrier();
        let mut out = CrispSubset::empty(n);
        for x in 0..n {
            if self.mu[x] >= alpha && self.gamma[x] <= alpha {
                out.insert(x);
            }
        }
        out
    }

    /// One threshold from every interval of `(0, 1]` on which the level cut
    /// is constant: each positive grade value of the set, `1`, and the
    /// midpoints between consecutive values.
    pub fn critical_alphas(&self) -> Vec<Grade> {
        let mut points: Vec<Grade> = self.grade_values();
        points.push(Grade::ZERO);
        points.push(Grade::ONE);
        points.sort();
        points.dedup();
        let mut out = Vec::new();
        for w in points.windows(2) {
            if let Some(mid) = w[0].midpoint(w[1]) {
                out.push(mid);
            }
            out.push(w[1]);
        }
        out
    }

    /// Retags the set, re-checking the constraint when switching to strict.
    pub fn with_strictness(mut self, strictness: Strictness) -> Result<Ifs> {
        if strictness == Strictness::Strict {
            if let Some(x) = self.first_violation() {
                return Err(Error::ConstraintViolation {
                    element: x,
                    sum: self.sum_at(x),
                });
            }
        }
        self.strictness = strictness;
        Ok(self)
    }
}

impl PartialEq for Ifs {
    fn eq(&self, other: &Self) -> bool {
        self.mu == other.mu && self.gamma == other.gamma
    }
}

impl Eq for Ifs {}

impl Hash for Ifs {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mu.hash(state);
        self.gamma.hash(state);
    }
}

impl PartialOrd for Ifs {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic over `(element, mu, gamma)`, matching enumeration order.
impl Ord for Ifs {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        for x in 0..self.carrier().min(other.carrier()) {
            let o = (self.mu[x], self.gamma[x]).cmp(&(other.mu[x], other.gamma[x]));
            if o.is_ne() {
                return o;
            }
        }
        self.carrier().cmp(&other.carrier())
    }
}

impl fmt::Debug for Ifs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ifs[")?;
        for x in 0..self.carrier() {
            if x > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({}, {})", self.mu[x], self.gamma[x])?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Component {
    Mu,
    Gamma,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Component::Mu => "mu",
            Component::Gamma => "gamma",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LatticeOpKind {
    Intersection,
    Union,
}

/// The composition `A ∘ B`.
///
/// `mu(a)` is the max over factorizations `a = bc` of `min(mu_A(b), mu_B(c))`,
/// or 0 when `a` has none; `gamma(a)` is the min of `max(gamma_A(b),
/// gamma_B(c))`, or 1. The result is tagged lenient.
pub fn compose(magma: &FiniteMagma, a: &Ifs, b: &Ifs) -> Result<Ifs> {
    let n = magma.order();
    a.check_same(b)?;
    if a.carrier() != n {
        return Err(Error::CarrierMismatch {
            left: n,
            right: a.carrier(),
        });
    }
    Ok(compose_unchecked(magma, a, b))
}

pub(crate) fn compose_unchecked(magma: &FiniteMagma, a: &Ifs, b: &Ifs) -> Ifs {
    let n = magma.order();
    let mut mu = vec![Grade::ZERO; n];
    let mut gamma = vec![Grade::ONE; n];
    for x in 0..n {
        let (ma, ga) = (a.mu[x], a.gamma[x]);
        for y in 0..n {
            let z = magma.mul(x, y);
            let m = ma.min(b.mu[y]);
            if m > mu[z] {
                mu[z] = m;
            }
            let g = ga.max(b.gamma[y]);
            if g < gamma[z] {
                gamma[z] = g;
            }
        }
    }
    Ifs::from_parts(mu, gamma)
}

/// Iterates every strict IFS on `n` elements whose grades lie in `chain`,
/// in lexicographic `(element, mu, gamma)` order.
#[derive(Debug, Clone)]
pub struct IfsEnumeration {
    n: usize,
    pairs: Vec<(Grade, Grade)>,
    digits: Vec<usize>,
    done: bool,
}

/// Number of strict chain IFS on `n` elements.
pub fn ifs_count(n: usize, chain: GradeChain) -> u128 {
    (chain.pair_count() as u128).saturating_pow(n as u32)
}

pub fn enumerate_ifs(n: usize, chain: GradeChain, budget: u64) -> Result<IfsEnumeration> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    let needed = ifs_count(n, chain);
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(IfsEnumeration {
        n,
        pairs: chain.valid_pairs(),
        digits: vec![0; n],
        done: false,
    })
}

impl IfsEnumeration {
    /// The IFS at position `index` of the enumeration.
    pub fn at(&self, mut index: u128) -> Ifs {
        let base = self.pairs.len() as u128;
        let mut digits = vec![0usize; self.n];
        for d in digits.iter_mut().rev() {
            *d = (index % base) as usize;
            index /= base;
        }
        self.build(&digits)
    }

    fn build(&self, digits: &[usize]) -> Ifs {
        let mu = digits.iter().map(|&d| self.pairs[d].0).collect();
        let gamma = digits.iter().map(|&d| self.pairs[d].1).collect();
        Ifs {
            mu,
            gamma,
            strictness: Strictness::Strict,
        }
    }

    pub fn total(&self) -> u128 {
        (self.pairs.len() as u128).pow(self.n as u32)
    }
}

impl Iterator for IfsEnumeration {
    type Item = Ifs;

    fn next(&mut self) -> Option<Ifs> {
        if self.done {
            return None;
        }
        let out = self.build(&self.digits);
        let base = self.pairs.len();
        let mut i = self.n;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.digits[i] += 1;
            if self.digits[i] < base {
                break;
            }
            self.digits[i] = 0;
        }
        Some(out)
    }
}
