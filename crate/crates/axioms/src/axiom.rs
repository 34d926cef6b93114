use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Inference,
    Minimality,
    Coherence,
    Preservation,
    Similarity,
    Granularity,
    Stability,
}

/// What the conclusion of an axiom demands of the measure values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conclusion {
    /// `M(E,D) = 1`.
    One,
    /// `M(E,D) = 0`.
    Zero,
    /// `M(E,D) ≥ M(E,D')`.
    AtLeast,
    /// `M(E,D) > M(E,D')`.
    Above,
    /// `M(E,D) ≤ M(E,D')`.
    AtMost,
    /// `M(E,D) < M(E,D')`.
    Below,
}

impl Conclusion {
    pub fn needs_pair(self) -> bool {
        !matches!(self, Conclusion::One | Conclusion::Zero)
    }
}

macro_rules! axioms {
    ($($variant:ident => $short:literal, $name:literal, $family:ident, $conclusion:ident;)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
        pub enum AxiomId {
            $($variant,)*
        }

        impl AxiomId {
            pub const ALL: &'static [AxiomId] = &[$(AxiomId::$variant,)*];

            /// Abbreviation as used in the satisfaction table.
            pub fn short(self) -> &'static str {
                match self {
                    $(AxiomId::$variant => $short,)*
                }
            }

            pub fn name(self) -> &'static str {
                match self {
                    $(AxiomId::$variant => $name,)*
                }
            }

            pub fn family(self) -> Family {
                match self {
                    $(AxiomId::$variant => Family::$family,)*
                }
            }

            pub fn conclusion(self) -> Conclusion {
                match self {
                    $(AxiomId::$variant => Conclusion::$conclusion,)*
                }
            }
        }
    };
}

axioms! {
    IdealFlatInference => "I.F. Inference", "Ideal Flat Inference", Inference, One;
    IdealWeightedInference => "I.W. Inference", "Ideal Weighted Inference", Inference, One;
    LenientIncreasingFlatInference => "L.I.F. Inference", "Lenient Increasing Flat Inference", Inference, AtLeast;
    StrictIncreasingFlatInference => "S.I.F. Inference", "Strict Increasing Flat Inference", Inference, Above;
    LenientIncreasingWeightedInference => "L.I.W. Inference", "Lenient Increasing Weighted Inference", Inference, AtLeast;
    StrictIncreasingWeightedInference => "S.I.W. Inference", "Strict Increasing Weighted Inference", Inference, Above;

    IdealFlatMinimality => "I.F. Minimality", "Ideal Flat Minimality", Minimality, One;
    IdealWeightedMinimality => "I.W. Minimality", "Ideal Weighted Minimality", Minimality, One;
    LenientDecreasingFlatMinimality => "L.D.F. Minimality", "Lenient Decreasing Flat Minimality", Minimality, AtMost;
    LenientDecreasingWeightedMinimality => "L.D.W. Minimality", "Lenient Decreasing Weighted Minimality", Minimality, AtMost;
    StrictDecreasingFlatMinimality => "S.D.F. Minimality", "Strict Decreasing Flat Minimality", Minimality, Below;
    StrictDecreasingWeightedMinimality => "S.D.W. Minimality", "Strict Decreasing Weighted Minimality", Minimality, Below;

    IdealStrongCoherence => "I.S. Coherence", "Ideal Strong Coherence", Coherence, One;
    IdealWeakCoherence => "I.W. Coherence", "Ideal Weak Coherence", Coherence, One;
    LenientDecreasingStrongCoherence => "L.D.S. Coherence", "Lenient Decreasing Strong Coherence", Coherence, AtMost;
    StrictDecreasingStrongCoherence => "S.D.S. Coherence", "Strict Decreasing Strong Coherence", Coherence, Below;
    LenientDecreasingWeakCoherence => "L.D.W. Coherence", "Lenient Decreasing Weak Coherence", Coherence, AtMost;
    StrictDecreasingWeakCoherence => "S.D.W. Coherence", "Strict Decreasing Weak Coherence", Coherence, Below;

    PremisesPreservation => "P. Preservation", "Premises N-Preservation", Preservation, Zero;
    ClaimPreservation => "C. Preservation", "Claim N-Preservation", Preservation, Zero;

    LenientIncreasingSimilarity => "L.I. Similarity", "Lenient Increasing N-Similarity", Similarity, AtLeast;
    StrictIncreasingSimilarity => "S.I. Similarity", "Strict Increasing N-Similarity", Similarity, Above;
    LenientDecreasingSimilarity => "L.D. Similarity", "Lenient Decreasing N-Similarity", Similarity, AtMost;
    StrictDecreasingSimilarity => "S.D. Similarity", "Strict Decreasing N-Similarity", Similarity, Below;

    LenientConciseGranularity => "L.C. Granularity", "Lenient Concise N-Granularity", Granularity, AtLeast;
    StrictConciseGranularity => "S.C. Granularity", "Strict Concise N-Granularity", Granularity, Above;
    LenientDetailedGranularity => "L.D. Granularity", "Lenient Detailed N-Granularity", Granularity, AtLeast;
    StrictDetailedGranularity => "S.D. Granularity", "Strict Detailed N-Granularity", Granularity, Above;

    IdealStability => "I. Stability", "Ideal V-Stability", Stability, One;
    LenientDecreasingStability => "L.D. Stability", "Lenient Decreasing V-Stability", Stability, AtMost;
    StrictDecreasingStability => "S.D. Stability", "Strict Decreasing V-Stability", Stability, Below;
}

impl AxiomId {
    pub fn index(self) -> usize {
        AxiomId::ALL.iter().position(|&a| a == self).expect("every axiom is listed")
    }

    pub fn parse(text: &str) -> Option<AxiomId> {
        AxiomId::ALL
            .iter()
            .copied()
            .find(|a| a.name() == text || a.short() == text || format!("{a:?}") == text)
    }

    pub fn needs_pair(self) -> bool {
        self.conclusion().needs_pair()
    }

    /// Whether the second decoding must keep the first decoding's claim.
    pub fn shares_claim(self) -> bool {
        self.needs_pair()
            && matches!(
                self.family(),
                Family::Inference | Family::Minimality | Family::Coherence
            )
    }

    /// The lenient counterpart of a strict axiom.
    pub fn lenient_version(self) -> Option<AxiomId> {
        use AxiomId::*;
        Some(match self {
            StrictIncreasingFlatInference => LenientIncreasingFlatInference,
            StrictIncreasingWeightedInference => LenientIncreasingWeightedInference,
            StrictDecreasingFlatMinimality => LenientDecreasingFlatMinimality,
            StrictDecreasingWeightedMinimality => LenientDecreasingWeightedMinimality,
            StrictDecreasingStrongCoherence => LenientDecreasingStrongCoherence,
            StrictDecreasingWeakCoherence => LenientDecreasingWeakCoherence,
            StrictIncreasingSimilarity => LenientIncreasingSimilarity,
            StrictDecreasingSimilarity => LenientDecreasingSimilarity,
            StrictConciseGranularity => LenientConciseGranularity,
            StrictDetailedGranularity => LenientDetailedGranularity,
            StrictDecreasingStability => LenientDecreasingStability,
            _ => return None,
        })
    }

    /// The weak counterpart of a strong coherence axiom.
    pub fn weak_version(self) -> Option<AxiomId> {
        use AxiomId::*;
        Some(match self {
            IdealStrongCoherence => IdealWeakCoherence,
            LenientDecreasingStrongCoherence => LenientDecreasingWeakCoherence,
            StrictDecreasingStrongCoherence => StrictDecreasingWeakCoherence,
            _ => return None,
        })
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
