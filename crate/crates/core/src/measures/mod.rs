//! Criterion measures scoring a decoding `D = ⟨Δ, β⟩` of an enthymeme
//! `E = ⟨Γ, α⟩`. Every measure returns an exact rational in [0, 1].

mod coherence;
mod granularity;
mod inference;
mod minimality;
mod similarity;
mod stability;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::closure::ClosureScope;
use crate::error::{Error, Result};
use crate::logic::{ApproxArgument, LogicConfig, WLog, WeightedFormula, WeightedLogic, WeightedSet};
use crate::normal::{decompose, decompose_one, NormalSet};
use crate::number::{parse_rational, ratio, rational_string, Rational};

pub use coherence::{coherence_divided, coherence_penalty, inconsistency_count};
pub use granularity::{granularity_divided, granularity_penalty, new_clause_count};
pub use inference::{closure_gap, inference_divided, inference_penalty, weight_gap};
pub use minimality::{minimality_divided, minimality_penalty};
pub use similarity::{preservation_basic, preservation_tversky, similarity_tversky, tversky, tversky_counts};
pub use stability::{stability_error, stability_lenient, stability_strict};

/// Everything a measure needs besides its inputs.
#[derive(Clone, Debug)]
pub struct Context {
    pub logic: WLog,
    pub closure: ClosureScope,
}

impl Context {
    pub fn new(atoms: usize, config: LogicConfig) -> Result<Context> {
        Ok(Context {
            logic: WLog::new(atoms, config)?,
            closure: ClosureScope::default(),
        })
    }

    pub fn atoms(&self) -> usize {
        self.logic.atom_count()
    }

    pub fn normalize(&self, set: &WeightedSet) -> NormalSet {
        decompose(set, self.atoms())
    }

    pub fn normalize_one(&self, wf: &WeightedFormula) -> NormalSet {
        decompose_one(wf, self.atoms())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scope {
    Strong,
    Weak,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Detail {
    Concise,
    Detailed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TverskyPreset {
    Jaccard,
    Dice,
    Sorensen,
    Anderberg,
    SokalSneath2,
}

impl TverskyPreset {
    pub const ALL: [TverskyPreset; 5] = [
        TverskyPreset::Jaccard,
        TverskyPreset::Dice,
        TverskyPreset::Sorensen,
        TverskyPreset::Anderberg,
        TverskyPreset::SokalSneath2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TverskyPreset::Jaccard => "jac",
            TverskyPreset::Dice => "dic",
            TverskyPreset::Sorensen => "sor",
            TverskyPreset::Anderberg => "and",
            TverskyPreset::SokalSneath2 => "ss2",
        }
    }

    pub fn parse(name: &str) -> Option<TverskyPreset> {
        TverskyPreset::ALL.into_iter().find(|p| p.name() == name)
    }

    /// The common value of both coefficients.
    pub fn coefficient(self) -> Rational {
        match self {
            TverskyPreset::Jaccard => ratio(1, 1),
            TverskyPreset::Dice => ratio(1, 2),
            TverskyPreset::Sorensen => ratio(1, 4),
            TverskyPreset::Anderberg => ratio(1, 8),
            TverskyPreset::SokalSneath2 => ratio(2, 1),
        }
    }
}

/// Tversky coefficients, optionally named by a preset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tversky {
    pub x: Rational,
    pub y: Rational,
    pub preset: Option<TverskyPreset>,
}

impl Tversky {
    pub fn preset(p: TverskyPreset) -> Tversky {
        Tversky {
            x: p.coefficient(),
            y: p.coefficient(),
            preset: Some(p),
        }
    }

    pub fn new(x: Rational, y: Rational) -> Tversky {
        let preset = TverskyPreset::ALL
            .into_iter()
            .find(|p| p.coefficient() == x && x == y);
        Tversky { x, y, preset }
    }
}

/// The stable identifiers used in configuration files.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MeasureKind {
    CoherenceDividedStrong,
    CoherenceDividedWeak,
    CoherencePenaltyStrong,
    CoherencePenaltyWeak,
    InferenceDivided,
    InferencePenalty,
    MinimalityDivided,
    MinimalityPenalty,
    SimilarityTversky,
    PreservationTversky,
    PreservationBasic,
    GranularityConciseDivided,
    GranularityConcisePenalty,
    GranularityDetailedDivided,
    GranularityDetailedPenalty,
    StabilityStrict,
    StabilityLenient,
}

impl MeasureKind {
    pub const ALL: [MeasureKind; 17] = [
        MeasureKind::CoherenceDividedStrong,
        MeasureKind::CoherenceDividedWeak,
        MeasureKind::CoherencePenaltyStrong,
        MeasureKind::CoherencePenaltyWeak,
        MeasureKind::InferenceDivided,
        MeasureKind::InferencePenalty,
        MeasureKind::MinimalityDivided,
        MeasureKind::MinimalityPenalty,
        MeasureKind::SimilarityTversky,
        MeasureKind::PreservationTversky,
        MeasureKind::PreservationBasic,
        MeasureKind::GranularityConciseDivided,
        MeasureKind::GranularityConcisePenalty,
        MeasureKind::GranularityDetailedDivided,
        MeasureKind::GranularityDetailedPenalty,
        MeasureKind::StabilityStrict,
        MeasureKind::StabilityLenient,
    ];

    pub fn id(self) -> &'static str {
        match self {
            MeasureKind::CoherenceDividedStrong => "coherence.divided.strong",
            MeasureKind::CoherenceDividedWeak => "coherence.divided.weak",
            MeasureKind::CoherencePenaltyStrong => "coherence.penalty.strong",
            MeasureKind::CoherencePenaltyWeak => "coherence.penalty.weak",
            MeasureKind::InferenceDivided => "inference.divided",
            MeasureKind::InferencePenalty => "inference.penalty",
            MeasureKind::MinimalityDivided => "minimality.divided",
            MeasureKind::MinimalityPenalty => "minimality.penalty",
            MeasureKind::SimilarityTversky => "similarity.tversky",
            MeasureKind::PreservationTversky => "preservation.tversky",
            MeasureKind::PreservationBasic => "preservation.basic",
            MeasureKind::GranularityConciseDivided => "granularity.concise.divided",
            MeasureKind::GranularityConcisePenalty => "granularity.concise.penalty",
            MeasureKind::GranularityDetailedDivided => "granularity.detailed.divided",
            MeasureKind::GranularityDetailedPenalty => "granularity.detailed.penalty",
            MeasureKind::StabilityStrict => "stability.strict",
            MeasureKind::StabilityLenient => "stability.lenient",
        }
    }

    pub fn parse(id: &str) -> Result<MeasureKind> {
        MeasureKind::ALL
            .into_iter()
            .find(|k| k.id() == id)
            .ok_or_else(|| Error::UnknownMeasure(id.to_string()))
    }

    fn allowed_params(self) -> &'static [&'static str] {
        match self {
            MeasureKind::CoherencePenaltyStrong
            | MeasureKind::CoherencePenaltyWeak
            | MeasureKind::MinimalityPenalty => &["p"],
            MeasureKind::InferenceDivided => &["a"],
            MeasureKind::InferencePenalty => &["p", "a"],
            MeasureKind::SimilarityTversky | MeasureKind::PreservationTversky => &["x", "y", "preset"],
            MeasureKind::GranularityConcisePenalty | MeasureKind::GranularityDetailedPenalty => &["s", "p"],
            MeasureKind::StabilityLenient => &["a", "u"],
            _ => &[],
        }
    }
}

impl fmt::Display for MeasureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// A measure together with validated parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MeasureSpec {
    CoherenceDivided { scope: Scope },
    CoherencePenalty { scope: Scope, p: Rational },
    InferenceDivided { a: Rational },
    InferencePenalty { p: Rational, a: Rational },
    MinimalityDivided,
    MinimalityPenalty { p: Rational },
    SimilarityTversky(Tversky),
    PreservationTversky(Tversky),
    PreservationBasic,
    GranularityDivided { detail: Detail },
    GranularityPenalty { detail: Detail, s: u32, p: Rational },
    StabilityStrict,
    StabilityLenient { a: Rational, u: Rational },
}

/// Raw parameter strings keyed by name, as read from a configuration file.
pub type RawParams = BTreeMap<String, String>;

impl MeasureSpec {
    pub fn kind(&self) -> MeasureKind {
        match self {
            MeasureSpec::CoherenceDivided { scope: Scope::Strong } => MeasureKind::CoherenceDividedStrong,
            MeasureSpec::CoherenceDivided { scope: Scope::Weak } => MeasureKind::CoherenceDividedWeak,
            MeasureSpec::CoherencePenalty { scope: Scope::Strong, .. } => MeasureKind::CoherencePenaltyStrong,
            MeasureSpec::CoherencePenalty { scope: Scope::Weak, .. } => MeasureKind::CoherencePenaltyWeak,
            MeasureSpec::InferenceDivided { .. } => MeasureKind::InferenceDivided,
            MeasureSpec::InferencePenalty { .. } => MeasureKind::InferencePenalty,
            MeasureSpec::MinimalityDivided => MeasureKind::MinimalityDivided,
            MeasureSpec::MinimalityPenalty { .. } => MeasureKind::MinimalityPenalty,
            MeasureSpec::SimilarityTversky(_) => MeasureKind::SimilarityTversky,
            MeasureSpec::PreservationTversky(_) => MeasureKind::PreservationTversky,
            MeasureSpec::PreservationBasic => MeasureKind::PreservationBasic,
            MeasureSpec::GranularityDivided { detail: Detail::Concise } => MeasureKind::GranularityConciseDivided,
            MeasureSpec::GranularityDivided { detail: Detail::Detailed } => MeasureKind::GranularityDetailedDivided,
            MeasureSpec::GranularityPenalty { detail: Detail::Concise, .. } => MeasureKind::GranularityConcisePenalty,
            MeasureSpec::GranularityPenalty { detail: Detail::Detailed, .. } => MeasureKind::GranularityDetailedPenalty,
            MeasureSpec::StabilityStrict => MeasureKind::StabilityStrict,
            MeasureSpec::StabilityLenient { .. } => MeasureKind::StabilityLenient,
        }
    }

    /// Builds and validates a measure from its identifier and raw parameters.
    pub fn from_parts(kind: MeasureKind, params: &RawParams) -> Result<MeasureSpec> {
        let bad = |reason: String| Error::InvalidParameter {
            measure: kind.id().to_string(),
            reason,
        };
        for key in params.keys() {
            if !kind.allowed_params().contains(&key.as_str()) {
                return Err(bad(format!("unknown parameter `{key}`")));
            }
        }
        let get = |name: &str| -> Result<Option<Rational>> {
            params.get(name).map(|v| parse_rational(v)).transpose()
        };
        let require = |name: &str| -> Result<Rational> {
            get(name)?.ok_or_else(|| bad(format!("missing parameter `{name}`")))
        };
        let spec = match kind {
            MeasureKind::CoherenceDividedStrong => MeasureSpec::CoherenceDivided { scope: Scope::Strong },
            MeasureKind::CoherenceDividedWeak => MeasureSpec::CoherenceDivided { scope: Scope::Weak },
            MeasureKind::CoherencePenaltyStrong => MeasureSpec::CoherencePenalty {
                scope: Scope::Strong,
                p: require("p")?,
            },
            MeasureKind::CoherencePenaltyWeak => MeasureSpec::CoherencePenalty {
                scope: Scope::Weak,
                p: require("p")?,
            },
            MeasureKind::InferenceDivided => MeasureSpec::InferenceDivided { a: require("a")? },
            MeasureKind::InferencePenalty => MeasureSpec::InferencePenalty {
                p: require("p")?,
                a: require("a")?,
            },
            MeasureKind::MinimalityDivided => MeasureSpec::MinimalityDivided,
            MeasureKind::MinimalityPenalty => MeasureSpec::MinimalityPenalty { p: require("p")? },
            MeasureKind::SimilarityTversky | MeasureKind::PreservationTversky => {
                let coeffs = match params.get("preset") {
                    Some(name) => {
                        if params.contains_key("x") || params.contains_key("y") {
                            return Err(bad("give either `preset` or `x`/`y`, not both".into()));
                        }
                        Tversky::preset(
                            TverskyPreset::parse(name)
                                .ok_or_else(|| bad(format!("unknown Tversky preset `{name}`")))?,
                        )
                    }
                    None => Tversky::new(require("x")?, require("y")?),
                };
                if kind == MeasureKind::SimilarityTversky {
                    MeasureSpec::SimilarityTversky(coeffs)
                } else {
                    MeasureSpec::PreservationTversky(coeffs)
                }
            }
            MeasureKind::PreservationBasic => MeasureSpec::PreservationBasic,
            MeasureKind::GranularityConciseDivided => MeasureSpec::GranularityDivided { detail: Detail::Concise },
            MeasureKind::GranularityDetailedDivided => MeasureSpec::GranularityDivided { detail: Detail::Detailed },
            MeasureKind::GranularityConcisePenalty | MeasureKind::GranularityDetailedPenalty => {
                let s_text = params.get("s").ok_or_else(|| bad("missing parameter `s`".into()))?;
                let s: u32 = s_text
                    .trim()
                    .parse()
                    .map_err(|_| bad(format!("`s` must be a positive integer, got `{s_text}`")))?;
                let detail = if kind == MeasureKind::GranularityConcisePenalty {
                    Detail::Concise
                } else {
                    Detail::Detailed
                };
                MeasureSpec::GranularityPenalty {
                    detail,
                    s,
                    p: require("p")?,
                }
            }
            MeasureKind::StabilityStrict => MeasureSpec::StabilityStrict,
            MeasureKind::StabilityLenient => MeasureSpec::StabilityLenient {
                a: require("a")?,
                u: require("u")?,
            },
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |reason: &str| {
            Err(Error::InvalidParameter {
                measure: self.kind().id().to_string(),
                reason: reason.to_string(),
            })
        };
        let unit_open = |p: &Rational| !p.is_zero() && *p <= Rational::one();
        let unit_closed = |a: &Rational| *a <= Rational::one();
        match self {
            MeasureSpec::CoherencePenalty { p, .. }
            | MeasureSpec::MinimalityPenalty { p }
            | MeasureSpec::InferencePenalty { p, .. }
            | MeasureSpec::GranularityPenalty { p, .. }
                if !unit_open(p) =>
            {
                return bad("penalty `p` must lie in (0, 1]");
            }
            _ => {}
        }
        match self {
            MeasureSpec::InferenceDivided { a } | MeasureSpec::InferencePenalty { a, .. } if !unit_closed(a) => {
                bad("acceptable error `a` must lie in [0, 1]")
            }
            MeasureSpec::SimilarityTversky(t) | MeasureSpec::PreservationTversky(t)
                if t.x.is_zero() || t.y.is_zero() =>
            {
                bad("Tversky coefficients must be positive")
            }
            MeasureSpec::GranularityPenalty { s, .. } if *s == 0 => bad("detail size `s` must be at least 1"),
            MeasureSpec::StabilityLenient { a, u } if !(unit_closed(a) && unit_open(u) && a < u) => {
                bad("lenient stability needs 0 ≤ a < u ≤ 1")
            }
            _ => Ok(()),
        }
    }

    /// Parameters as strings, suitable for echoing back into a configuration.
    pub fn params(&self) -> RawParams {
        let r = rational_string;
        let pairs: Vec<(&str, String)> = match self {
            MeasureSpec::CoherencePenalty { p, .. } | MeasureSpec::MinimalityPenalty { p } => vec![("p", r(p))],
            MeasureSpec::InferenceDivided { a } => vec![("a", r(a))],
            MeasureSpec::InferencePenalty { p, a } => vec![("p", r(p)), ("a", r(a))],
            MeasureSpec::SimilarityTversky(t) | MeasureSpec::PreservationTversky(t) => match t.preset {
                Some(preset) => vec![("preset", preset.name().to_string())],
                None => vec![("x", r(&t.x)), ("y", r(&t.y))],
            },
            MeasureSpec::GranularityPenalty { s, p, .. } => vec![("s", s.to_string()), ("p", r(p))],
            MeasureSpec::StabilityLenient { a, u } => vec![("a", r(a)), ("u", r(u))],
            _ => Vec::new(),
        };
        pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
    }

    /// A compact name in the customary notation, such as `ppi(a=1,p=1/10)`.
    pub fn label(&self) -> String {
        let base = match self {
            MeasureSpec::CoherenceDivided { scope: Scope::Strong } => "dsc",
            MeasureSpec::CoherenceDivided { scope: Scope::Weak } => "dwc",
            MeasureSpec::CoherencePenalty { scope: Scope::Strong, .. } => "psc",
            MeasureSpec::CoherencePenalty { scope: Scope::Weak, .. } => "pwc",
            MeasureSpec::InferenceDivided { .. } => "dpi",
            MeasureSpec::InferencePenalty { .. } => "ppi",
            MeasureSpec::MinimalityDivided => "cmmin",
            MeasureSpec::MinimalityPenalty { .. } => "cmpen",
            MeasureSpec::SimilarityTversky(_) => "cmtve",
            MeasureSpec::PreservationTversky(_) => "cmtvetve",
            MeasureSpec::PreservationBasic => "cmbl",
            MeasureSpec::GranularityDivided { detail: Detail::Concise } => "cmcd",
            MeasureSpec::GranularityDivided { detail: Detail::Detailed } => "cmdg",
            MeasureSpec::GranularityPenalty { detail: Detail::Concise, .. } => "cmcp",
            MeasureSpec::GranularityPenalty { detail: Detail::Detailed, .. } => "cmpg",
            MeasureSpec::StabilityStrict => "cmsd",
            MeasureSpec::StabilityLenient { .. } => "cmld",
        };
        let params = self.params();
        if params.is_empty() {
            return base.to_string();
        }
        let inner: Vec<String> = params
            .iter()
            .map(|(k, v)| if k == "preset" { v.clone() } else { format!("{k}={v}") })
            .collect();
        format!("{base}({})", inner.join(","))
    }

    pub fn evaluate(&self, ctx: &Context, e: &ApproxArgument, d: &ApproxArgument) -> Result<Rational> {
        match self {
            MeasureSpec::CoherenceDivided { scope } => coherence_divided(ctx, e, d, *scope),
            MeasureSpec::CoherencePenalty { scope, p } => coherence_penalty(ctx, e, d, p, *scope),
            MeasureSpec::InferenceDivided { a } => inference_divided(ctx, d, a),
            MeasureSpec::InferencePenalty { p, a } => inference_penalty(ctx, d, p, a),
            MeasureSpec::MinimalityDivided => minimality_divided(ctx, d),
            MeasureSpec::MinimalityPenalty { p } => minimality_penalty(ctx, d, p),
            MeasureSpec::SimilarityTversky(t) => Ok(similarity_tversky(ctx, e, d, t)),
            MeasureSpec::PreservationTversky(t) => Ok(preservation_tversky(ctx, e, d, t)),
            MeasureSpec::PreservationBasic => Ok(preservation_basic(ctx, e, d)),
            MeasureSpec::GranularityDivided { detail } => Ok(granularity_divided(ctx, e, d, *detail)),
            MeasureSpec::GranularityPenalty { detail, s, p } => Ok(granularity_penalty(ctx, e, d, *detail, *s, p)),
            MeasureSpec::StabilityStrict => Ok(stability_strict(ctx, d)),
            MeasureSpec::StabilityLenient { a, u } => Ok(stability_lenient(ctx, d, a, u)),
        }
    }
}

impl fmt::Display for MeasureSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[cfg(test)]
mod tests;
