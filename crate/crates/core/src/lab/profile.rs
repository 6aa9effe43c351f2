//! Per-set data shared by every claim evaluated on one magma.

use rayon::prelude::*;

use crate::error::Result;
use crate::grade::GradeChain;
use crate::ideal::IdealFlags;
use crate::ifs::{compose_unchecked, enumerate_ifs, Ifs};
use crate::magma::FiniteMagma;
use crate::subset::IdealKind;

use super::report::Scope;

#[derive(Debug, Clone)]
pub(crate) struct Profile {
    pub flags: IdealFlags,
    pub delta_a: Ifs,
    pub a_delta: Ifs,
    pub a_a: Ifs,
    /// `(A∘δ)∘A`
    pub a_delta_a: Ifs,
    /// `(δ∘A)∘δ`
    pub delta_a_delta: Ifs,
}

impl Profile {
    pub fn of(magma: &FiniteMagma, a: &Ifs) -> Self {
        let delta = Ifs::delta(magma.order());
        let delta_a = compose_unchecked(magma, &delta, a);
        let a_delta = compose_unchecked(magma, a, &delta);
        Profile {
            flags: IdealFlags::of(magma, a),
            a_a: compose_unchecked(magma, a, a),
            a_delta_a: compose_unchecked(magma, &a_delta, a),
            delta_a_delta: compose_unchecked(magma, &delta_a, &delta),
            delta_a,
            a_delta,
        }
    }

    pub fn is(&self, kind: IdealKind) -> bool {
        self.flags.get(kind)
    }

    pub fn absorbs(&self, a: &Ifs) -> bool {
        self.a_delta == *a && self.delta_a == *a
    }

    /// The eight properties of the grand equivalence, in order.
    pub fn grand(&self, a: &Ifs) -> [bool; 8] {
        use IdealKind::*;
        [
            self.is(Left),
            self.is(Right),
            self.is(TwoSided),
            self.is(Bi),
            self.is(GeneralizedBi),
            self.is(Interior),
            self.is(Quasi),
            self.absorbs(a),
        ]
    }
}

/// The sets a claim is quantified over, with their profiles.
#[derive(Debug, Clone)]
pub(crate) struct Pool {
    pub sets: Vec<Ifs>,
    pub profiles: Vec<Profile>,
    pub scope: Scope,
    pub chain: Option<GradeChain>,
}

impl Pool {
    pub fn explicit(magma: &FiniteMagma, sets: Vec<Ifs>) -> Self {
        let profiles = sets.par_iter().map(|a| Profile::of(magma, a)).collect();
        Pool {
            sets,
            profiles,
            scope: Scope::SingleInstance,
            chain: None,
        }
    }

    pub fn chain(magma: &FiniteMagma, chain: GradeChain, budget: u64) -> Result<Self> {
        let sets: Vec<Ifs> = enumerate_ifs(magma.order(), chain, budget)?.collect();
        let mut pool = Pool::explicit(magma, sets);
        pool.scope = Scope::ExhaustiveOverChain;
        pool.chain = Some(chain);
        Ok(pool)
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Ifs, &Profile)> {
        self.sets.iter().zip(&self.profiles)
    }
}
