use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;

/// Every structural claim the workbench can audit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    LawMedialFromLi,
    LawParamedialWithE,
    Law4WithE,
    LiftedLaws,
    LevelCutFwd,
    LevelCutBiFwd,
    ComposeChar,
    BiChar,
    InteriorChar,
    LeftIffRight,
    FuzzyDuo,
    DuoEquiv,
    CharBridge,
    Absorb,
    AbsorbIdeal,
    DeltaIdem,
    QuasiChar,
    QuasiEqTwoSided,
    InteriorEqTwoSided,
    GrandEquiv,
    ProdEqMeet,
    ProdEqMeetNonconverse,
    Idempotent,
    Semilattice,
}

/// Structural hypotheses a claim places on the groupoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Requirements {
    pub left_identity: bool,
    pub intra_regular: bool,
    pub not_intra_regular: bool,
}

impl ClaimId {
    pub const ALL: [ClaimId; 24] = [
        ClaimId::LawMedialFromLi,
        ClaimId::LawParamedialWithE,
        ClaimId::Law4WithE,
        ClaimId::LiftedLaws,
        ClaimId::LevelCutFwd,
        ClaimId::LevelCutBiFwd,
        ClaimId::ComposeChar,
        ClaimId::BiChar,
        ClaimId::InteriorChar,
        ClaimId::LeftIffRight,
        ClaimId::FuzzyDuo,
        ClaimId::DuoEquiv,
        ClaimId::CharBridge,
        ClaimId::Absorb,
        ClaimId::AbsorbIdeal,
        ClaimId::DeltaIdem,
        ClaimId::QuasiChar,
        ClaimId::QuasiEqTwoSided,
        ClaimId::InteriorEqTwoSided,
        ClaimId::GrandEquiv,
        ClaimId::ProdEqMeet,
        ClaimId::ProdEqMeetNonconverse,
        ClaimId::Idempotent,
        ClaimId::Semilattice,
    ];

    pub fn code(self) -> &'static str {
        use ClaimId::*;
        match self {
            LawMedialFromLi => "LAW_MEDIAL_FROM_LI",
            LawParamedialWithE => "LAW_PARAMEDIAL_WITH_E",
            Law4WithE => "LAW_4_WITH_E",
            LiftedLaws => "LIFTED_LAWS",
            LevelCutFwd => "T_LEVELCUT_FWD",
            LevelCutBiFwd => "T_LEVELCUT_BI_FWD",
            ComposeChar => "L_COMPOSE_CHAR",
            BiChar => "T_BI_CHAR",
            InteriorChar => "T_INT_CHAR",
            LeftIffRight => "L_LEFT_IFF_RIGHT",
            FuzzyDuo => "C_FUZZY_DUO",
            DuoEquiv => "T_DUO_EQUIV",
            CharBridge => "L_CHAR_BRIDGE",
            Absorb => "L_ABSORB",
            AbsorbIdeal => "C_ABSORB_IDEAL",
            DeltaIdem => "L_DELTA_IDEM",
            QuasiChar => "T_QUASI_CHAR",
            QuasiEqTwoSided => "T_QUASI_EQ_2SIDED",
            InteriorEqTwoSided => "T_INT_EQ_2SIDED",
            GrandEquiv => "T_GRAND_EQUIV",
            ProdEqMeet => "L_PROD_EQ_MEET",
            ProdEqMeetNonconverse => "L_PROD_EQ_MEET_NONCONVERSE",
            Idempotent => "L_IDEMPOTENT",
            Semilattice => "T_SEMILATTICE",
        }
    }

    /// The statement being audited, in the notation used by reports.
    pub fn statement(self) -> &'static str {
        use ClaimId::*;
        match self {
            LawMedialFromLi => "every AG-groupoid satisfies (ab)(cd) = (ac)(bd)",
            LawParamedialWithE => "an AG-groupoid with left identity satisfies (ab)(cd) = (dc)(ba)",
            Law4WithE => "an AG-groupoid with left identity satisfies a(bc) = b(ac)",
            LiftedLaws => {
                "on any AG-groupoid, o on IFSs satisfies (ab)c=(cb)a, (ab)(cd)=(ac)(bd), (ab)(cd)=(dc)(ba), a(bc)=b(ac)"
            }
            LevelCutFwd => {
                "if A is an IF right (left, two-sided) ideal then every non-empty A_alpha is a right (left, two-sided) ideal"
            }
            LevelCutBiFwd => {
                "if A is an IF bi- (generalized bi-) ideal then every non-empty A_alpha is a bi- (generalized bi-) ideal"
            }
            ComposeChar => {
                "A is an IF subgroupoid iff A o A <= A; IF left ideal iff delta o A <= A; IF right ideal iff A o delta <= A"
            }
            BiChar => "on intra-regular S with left identity: A is an IF bi-ideal iff (A o delta) o A = A and A o A = A",
            InteriorChar => "on intra-regular S with left identity: A is an IF interior ideal iff (delta o A) o delta = A",
            LeftIffRight => "on intra-regular S with left identity: A is an IF left ideal iff A is an IF right ideal",
            FuzzyDuo => "every intra-regular AG-groupoid with left identity is an IF duo",
            DuoEquiv => "intra-regular S with left identity is a left (right) duo iff it is an IF left (right) duo",
            CharBridge => {
                "a non-empty X is a subgroupoid (left, right, two-sided ideal) iff chi_X is the IF counterpart"
            }
            Absorb => "on intra-regular S: delta o A = A and A o delta = A for every IFS A",
            AbsorbIdeal => "on intra-regular S: delta o A = A and A o delta = A for every IF left (right, two-sided) ideal A",
            DeltaIdem => "on intra-regular S: delta o delta = delta",
            QuasiChar => "on intra-regular S with left identity: A is an IF quasi ideal iff (A o delta) & (delta o A) = A",
            QuasiEqTwoSided => "on intra-regular S with left identity: A is an IF two-sided ideal iff an IF quasi ideal",
            InteriorEqTwoSided => "on intra-regular S with left identity: A is an IF two-sided ideal iff an IF interior ideal",
            GrandEquiv => {
                "on intra-regular S with left identity: left, right, two-sided, bi, generalized bi, interior, quasi, and (A o delta = A and delta o A = A) coincide"
            }
            ProdEqMeet => "on intra-regular S with left identity: A o B = A & B for IF two-sided ideals A, B",
            ProdEqMeetNonconverse => {
                "on S with left identity, not intra-regular: A o B = A & B for the given (or every chain) IF two-sided ideals A, B"
            }
            Idempotent => "on intra-regular S: every IF two-sided ideal A satisfies A o A = A",
            Semilattice => "on intra-regular S: IF two-sided ideals under o form a semilattice with identity delta",
        }
    }

    pub fn requirements(self) -> Requirements {
        use ClaimId::*;
        let li = matches!(
            self,
            LawParamedialWithE
                | Law4WithE
                | BiChar
                | InteriorChar
                | LeftIffRight
                | FuzzyDuo
                | DuoEquiv
                | QuasiChar
                | QuasiEqTwoSided
                | InteriorEqTwoSided
                | GrandEquiv
                | ProdEqMeet
                | ProdEqMeetNonconverse
        );
        let ir = matches!(
            self,
            BiChar
                | InteriorChar
                | LeftIffRight
                | FuzzyDuo
                | DuoEquiv
                | Absorb
                | AbsorbIdeal
                | DeltaIdem
                | QuasiChar
                | QuasiEqTwoSided
                | InteriorEqTwoSided
                | GrandEquiv
                | ProdEqMeet
                | Idempotent
                | Semilattice
        );
        Requirements {
            left_identity: li,
            intra_regular: ir,
            not_intra_regular: self == ProdEqMeetNonconverse,
        }
    }

    /// Claims whose converse is asserted to fail, so that a search for a
    /// converse counterexample is meaningful.
    pub fn has_converse(self) -> bool {
        matches!(self, ClaimId::LevelCutFwd | ClaimId::LevelCutBiFwd)
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let up = s.trim().to_ascii_uppercase();
        ClaimId::ALL
            .into_iter()
            .find(|c| c.code() == up)
            .ok_or_else(|| Error::Unsupported(format!("unknown claim {s:?}")))
    }
}

impl Serialize for ClaimId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.code())
    }
}

/// Whether a claim is audited as stated or through its converse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    #[default]
    Forward,
    Converse,
}
