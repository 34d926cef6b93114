//! The expected satisfaction matrix: which measure satisfies which axiom.

use enthymeme::measures::{Detail, Scope, Tversky, TverskyPreset};
use enthymeme::number::{int, ratio};
use enthymeme::MeasureSpec;
use num_traits::One;

use crate::axiom::AxiomId::{self, *};

/// A column of the satisfaction table. Some measures split into two
/// columns depending on a parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Regime {
    pub name: &'static str,
    /// The rows this column is judged on.
    pub block: &'static [AxiomId],
    /// The rows marked as satisfied.
    pub marked: &'static [AxiomId],
}

impl Regime {
    pub fn is_marked(&self, axiom: AxiomId) -> bool {
        self.marked.contains(&axiom)
    }
}

const INFERENCE: &[AxiomId] = &[
    IdealFlatInference,
    IdealWeightedInference,
    LenientIncreasingFlatInference,
    StrictIncreasingFlatInference,
    LenientIncreasingWeightedInference,
    StrictIncreasingWeightedInference,
];
const MINIMALITY: &[AxiomId] = &[
    IdealFlatMinimality,
    IdealWeightedMinimality,
    LenientDecreasingFlatMinimality,
    LenientDecreasingWeightedMinimality,
    StrictDecreasingFlatMinimality,
    StrictDecreasingWeightedMinimality,
];
const COHERENCE: &[AxiomId] = &[
    IdealStrongCoherence,
    IdealWeakCoherence,
    LenientDecreasingStrongCoherence,
    StrictDecreasingStrongCoherence,
    LenientDecreasingWeakCoherence,
    StrictDecreasingWeakCoherence,
];
const PRESERVATION: &[AxiomId] = &[PremisesPreservation, ClaimPreservation];
const SIMILARITY: &[AxiomId] = &[
    LenientIncreasingSimilarity,
    StrictIncreasingSimilarity,
    LenientDecreasingSimilarity,
    StrictDecreasingSimilarity,
];
const CONCISE: &[AxiomId] = &[LenientConciseGranularity, StrictConciseGranularity];
const DETAILED: &[AxiomId] = &[LenientDetailedGranularity, StrictDetailedGranularity];
const STABILITY: &[AxiomId] = &[IdealStability, LenientDecreasingStability, StrictDecreasingStability];

pub const CMBL: Regime = Regime { name: "cmbl", block: PRESERVATION, marked: PRESERVATION };
pub const CMTVETVE: Regime = Regime { name: "cmtvetve", block: PRESERVATION, marked: PRESERVATION };
pub const CMSD: Regime = Regime { name: "cmsd", block: STABILITY, marked: STABILITY };
pub const CMLD: Regime = Regime {
    name: "cmld",
    block: STABILITY,
    marked: &[IdealStability, LenientDecreasingStability],
};
pub const PPI_1: Regime = Regime {
    name: "ppi_1",
    block: INFERENCE,
    marked: &[
        IdealFlatInference,
        IdealWeightedInference,
        LenientIncreasingFlatInference,
        LenientIncreasingWeightedInference,
    ],
};
pub const PPI_LT1: Regime = Regime {
    name: "ppi_<1",
    block: INFERENCE,
    marked: &[IdealWeightedInference, LenientIncreasingWeightedInference],
};
pub const DPI_1: Regime = Regime { name: "dpi_1", block: INFERENCE, marked: INFERENCE };
pub const DPI_LT1: Regime = Regime {
    name: "dpi_<1",
    block: INFERENCE,
    marked: &[
        IdealWeightedInference,
        LenientIncreasingWeightedInference,
        StrictIncreasingWeightedInference,
    ],
};
pub const CMCD: Regime = Regime { name: "cmcd", block: CONCISE, marked: CONCISE };
pub const CMCP: Regime = Regime { name: "cmcp", block: CONCISE, marked: &[LenientConciseGranularity] };
pub const CMDG: Regime = Regime { name: "cmdg", block: DETAILED, marked: DETAILED };
pub const CMPG: Regime = Regime { name: "cmpg", block: DETAILED, marked: &[LenientDetailedGranularity] };
pub const CMTVE: Regime = Regime { name: "cmtve", block: SIMILARITY, marked: SIMILARITY };
pub const CMMIN: Regime = Regime { name: "cmmin", block: MINIMALITY, marked: MINIMALITY };
pub const CMPEN: Regime = Regime {
    name: "cmpen",
    block: MINIMALITY,
    marked: &[
        IdealFlatMinimality,
        IdealWeightedMinimality,
        LenientDecreasingFlatMinimality,
        LenientDecreasingWeightedMinimality,
    ],
};
pub const PSC: Regime = Regime {
    name: "psc",
    block: COHERENCE,
    marked: &[
        IdealStrongCoherence,
        IdealWeakCoherence,
        LenientDecreasingStrongCoherence,
        LenientDecreasingWeakCoherence,
    ],
};
pub const PWC: Regime = Regime {
    name: "pwc",
    block: COHERENCE,
    marked: &[IdealWeakCoherence, LenientDecreasingWeakCoherence],
};
pub const DSC: Regime = Regime { name: "dsc", block: COHERENCE, marked: COHERENCE };
pub const DWC: Regime = Regime {
    name: "dwc",
    block: COHERENCE,
    marked: &[IdealWeakCoherence, LenientDecreasingWeakCoherence, StrictDecreasingWeakCoherence],
};

pub const ALL_REGIMES: &[Regime] = &[
    CMBL, CMTVETVE, CMSD, CMLD, PPI_1, PPI_LT1, DPI_1, DPI_LT1, CMCD, CMCP, CMDG, CMPG, CMTVE, CMMIN, CMPEN, PSC,
    PWC, DSC, DWC,
];

/// The table column a configured measure falls under.
pub fn regime_of(spec: &MeasureSpec) -> Regime {
    match spec {
        MeasureSpec::PreservationBasic => CMBL,
        MeasureSpec::PreservationTversky(_) => CMTVETVE,
        MeasureSpec::StabilityStrict => CMSD,
        MeasureSpec::StabilityLenient { .. } => CMLD,
        MeasureSpec::InferencePenalty { a, .. } if a.is_one() => PPI_1,
        MeasureSpec::InferencePenalty { .. } => PPI_LT1,
        MeasureSpec::InferenceDivided { a } if a.is_one() => DPI_1,
        MeasureSpec::InferenceDivided { .. } => DPI_LT1,
        MeasureSpec::GranularityDivided { detail: Detail::Concise } => CMCD,
        MeasureSpec::GranularityPenalty { detail: Detail::Concise, .. } => CMCP,
        MeasureSpec::GranularityDivided { detail: Detail::Detailed } => CMDG,
        MeasureSpec::GranularityPenalty { detail: Detail::Detailed, .. } => CMPG,
        MeasureSpec::SimilarityTversky(_) => CMTVE,
        MeasureSpec::MinimalityDivided => CMMIN,
        MeasureSpec::MinimalityPenalty { .. } => CMPEN,
        MeasureSpec::CoherencePenalty { scope: Scope::Strong, .. } => PSC,
        MeasureSpec::CoherencePenalty { scope: Scope::Weak, .. } => PWC,
        MeasureSpec::CoherenceDivided { scope: Scope::Strong } => DSC,
        MeasureSpec::CoherenceDivided { scope: Scope::Weak } => DWC,
    }
}

/// Measure instances covering every column, with a spread of parameters.
pub fn shipped_measures() -> Vec<MeasureSpec> {
    let mut out = vec![MeasureSpec::PreservationBasic];
    out.extend(TverskyPreset::ALL.map(|p| MeasureSpec::PreservationTversky(Tversky::preset(p))));
    out.push(MeasureSpec::StabilityStrict);
    out.push(MeasureSpec::StabilityLenient { a: int(0), u: ratio(1, 2) });
    out.push(MeasureSpec::StabilityLenient { a: ratio(1, 10), u: ratio(3, 10) });
    for a in [int(1), int(0), ratio(1, 2)] {
        out.push(MeasureSpec::InferencePenalty { p: ratio(1, 10), a: a.clone() });
        out.push(MeasureSpec::InferenceDivided { a });
    }
    out.push(MeasureSpec::InferencePenalty { p: ratio(1, 2), a: int(1) });
    for detail in [Detail::Concise, Detail::Detailed] {
        out.push(MeasureSpec::GranularityDivided { detail });
        out.push(MeasureSpec::GranularityPenalty { detail, s: 1, p: ratio(1, 2) });
        out.push(MeasureSpec::GranularityPenalty { detail, s: 2, p: ratio(1, 4) });
    }
    out.extend(TverskyPreset::ALL.map(|p| MeasureSpec::SimilarityTversky(Tversky::preset(p))));
    out.push(MeasureSpec::SimilarityTversky(Tversky::new(ratio(1, 3), int(3))));
    out.push(MeasureSpec::MinimalityDivided);
    out.push(MeasureSpec::MinimalityPenalty { p: ratio(1, 4) });
    out.push(MeasureSpec::MinimalityPenalty { p: int(1) });
    for scope in [Scope::Strong, Scope::Weak] {
        out.push(MeasureSpec::CoherencePenalty { scope, p: int(1) });
        out.push(MeasureSpec::CoherencePenalty { scope, p: ratio(1, 2) });
        out.push(MeasureSpec::CoherenceDivided { scope });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn marks_lie_inside_blocks() {
        for r in ALL_REGIMES {
            assert!(r.marked.iter().all(|a| r.block.contains(a)), "{}", r.name);
            assert!(r.block.iter().all(|a| a.family() == r.block[0].family()));
        }
    }

    #[test]
    fn every_column_is_shipped() {
        let shipped: Vec<&str> = shipped_measures().iter().map(|m| regime_of(m).name).collect();
        for r in ALL_REGIMES {
            assert!(shipped.contains(&r.name), "{}", r.name);
        }
    }

    #[test]
    fn acceptable_error_splits_inference_columns() {
        assert_eq!(regime_of(&MeasureSpec::InferenceDivided { a: int(1) }), DPI_1);
        assert_eq!(regime_of(&MeasureSpec::InferenceDivided { a: ratio(1, 2) }), DPI_LT1);
        assert_ne!(DPI_1.marked, DPI_LT1.marked);
    }
}
