//! Quality measures: a sequence of criterion measures folded by an
//! aggregation function, plus ranking and selection of candidates.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::logic::{ApproxArgument, Classification};
use crate::measures::{Context, Detail, MeasureSpec, Scope, Tversky, TverskyPreset};
use crate::number::{int, ratio, Rational};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Aggregator {
    #[default]
    Average,
    Product,
}

impl Aggregator {
    pub fn name(self) -> &'static str {
        match self {
            Aggregator::Average => "average",
            Aggregator::Product => "product",
        }
    }

    pub fn parse(name: &str) -> Result<Aggregator> {
        match name {
            "average" | "av" | "avg" => Ok(Aggregator::Average),
            "product" | "pr" | "prod" => Ok(Aggregator::Product),
            other => Err(Error::Schema(format!(
                "unknown aggregator `{other}` (expected `average` or `product`)"
            ))),
        }
    }

    /// Folds a score vector; the empty vector aggregates to 0.
    pub fn apply(self, values: &[Rational]) -> Rational {
        if values.is_empty() {
            return Rational::zero();
        }
        match self {
            Aggregator::Average => {
                let sum: Rational = values.iter().sum();
                sum / int(values.len() as i64)
            }
            Aggregator::Product => values.iter().fold(Rational::one(), |acc, v| acc * v),
        }
    }
}

impl fmt::Display for Aggregator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The two named measure sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Preset {
    /// Lenient detailed.
    Ld,
    /// Strict detailed.
    Sd,
}

impl Preset {
    pub fn parse(name: &str) -> Result<Preset> {
        match name {
            "Ld" | "ld" => Ok(Preset::Ld),
            "Sd" | "sd" => Ok(Preset::Sd),
            other => Err(Error::UnknownPreset(other.to_string())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Preset::Ld => "Ld",
            Preset::Sd => "Sd",
        }
    }

    /// The measure sequence, with the inference penalty of `Ld` set to 1/10.
    pub fn sequence(self) -> Vec<MeasureSpec> {
        self.sequence_with(ratio(1, 10))
    }

    pub fn sequence_with(self, inference_penalty: Rational) -> Vec<MeasureSpec> {
        match self {
            Preset::Ld => vec![
                MeasureSpec::CoherencePenalty {
                    scope: Scope::Strong,
                    p: int(1),
                },
                MeasureSpec::InferencePenalty {
                    p: inference_penalty,
                    a: int(1),
                },
                MeasureSpec::MinimalityPenalty { p: ratio(1, 4) },
                MeasureSpec::PreservationBasic,
                MeasureSpec::SimilarityTversky(Tversky::preset(TverskyPreset::Anderberg)),
                MeasureSpec::StabilityLenient {
                    a: int(0),
                    u: ratio(1, 2),
                },
                MeasureSpec::GranularityPenalty {
                    detail: Detail::Detailed,
                    s: 1,
                    p: ratio(1, 2),
                },
            ],
            Preset::Sd => vec![
                MeasureSpec::CoherencePenalty {
                    scope: Scope::Weak,
                    p: int(1),
                },
                MeasureSpec::InferenceDivided { a: int(0) },
                MeasureSpec::MinimalityDivided,
                MeasureSpec::PreservationBasic,
                MeasureSpec::SimilarityTversky(Tversky::preset(TverskyPreset::SokalSneath2)),
                MeasureSpec::StabilityStrict,
                MeasureSpec::GranularityDivided {
                    detail: Detail::Detailed,
                },
            ],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QualityConfig {
    pub sequence: Vec<MeasureSpec>,
    pub aggregator: Aggregator,
    /// Candidates scoring below this are not selected.
    pub threshold: Option<Rational>,
    pub top_k: Option<usize>,
}

impl QualityConfig {
    pub fn new(sequence: Vec<MeasureSpec>, aggregator: Aggregator) -> Result<QualityConfig> {
        let cfg = QualityConfig {
            sequence,
            aggregator,
            threshold: None,
            top_k: None,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn preset(preset: Preset, aggregator: Aggregator) -> QualityConfig {
        QualityConfig {
            sequence: preset.sequence(),
            aggregator,
            threshold: None,
            top_k: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.sequence.is_empty() {
            return Err(Error::Schema("measure sequence must not be empty".into()));
        }
        for m in &self.sequence {
            m.validate()?;
        }
        if let Some(t) = &self.threshold {
            if *t > Rational::one() {
                return Err(Error::Schema("threshold must lie in [0, 1]".into()));
            }
        }
        if self.top_k == Some(0) {
            return Err(Error::Schema("top_k must be at least 1".into()));
        }
        Ok(())
    }
}

/// Scores of one candidate under a configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub values: Vec<Rational>,
    pub aggregate: Rational,
}

pub fn quality(ctx: &Context, e: &ApproxArgument, d: &ApproxArgument, cfg: &QualityConfig) -> Result<Evaluation> {
    let values = cfg
        .sequence
        .iter()
        .map(|m| {
            m.evaluate(ctx, e, d).map_err(|source| Error::Measure {
                measure: m.label(),
                source: Box::new(source),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let aggregate = cfg.aggregator.apply(&values);
    Ok(Evaluation { values, aggregate })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateResult {
    pub id: String,
    pub outcome: std::result::Result<(Classification, Evaluation), Error>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ranking {
    /// One entry per candidate, in input order.
    pub candidates: Vec<CandidateResult>,
    /// Indices of successfully scored candidates, best first.
    pub order: Vec<usize>,
    /// The prefix of `order` that passes the threshold and the top-k cut.
    pub selected: Vec<usize>,
}

impl Ranking {
    pub fn aggregate(&self, index: usize) -> Option<&Rational> {
        self.candidates[index].outcome.as_ref().ok().map(|(_, ev)| &ev.aggregate)
    }

    pub fn all_failed(&self) -> bool {
        !self.candidates.is_empty() && self.order.is_empty()
    }
}

/// Scores every candidate and orders them by descending aggregate. Ties keep
/// input order. A failing candidate is recorded and left out of the order.
pub fn rank(ctx: &Context, e: &ApproxArgument, candidates: &[(String, ApproxArgument)], cfg: &QualityConfig) -> Ranking {
    let results: Vec<CandidateResult> = candidates
        .iter()
        .map(|(id, d)| CandidateResult {
            id: id.clone(),
            outcome: ctx
                .logic
                .classify(d)
                .and_then(|class| quality(ctx, e, d, cfg).map(|ev| (class, ev))),
        })
        .collect();
    let mut order: Vec<usize> = (0..results.len()).filter(|&i| results[i].outcome.is_ok()).collect();
    let agg = |i: usize| &results[i].outcome.as_ref().unwrap().1.aggregate;
    order.sort_by(|&i, &j| agg(j).cmp(agg(i)));
    let mut selected: Vec<usize> = order
        .iter()
        .copied()
        .filter(|&i| cfg.threshold.as_ref().is_none_or(|t| agg(i) >= t))
        .collect();
    if let Some(k) = cfg.top_k {
        selected.truncate(k);
    }
    Ranking {
        candidates: results,
        order,
        selected,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Vocabulary;
    use crate::logic::{LogicConfig, WeightedFormula};
    use crate::number::{rational_decimal, Weight};
    use crate::parser::parse_formula;

    fn running() -> (Context, ApproxArgument, Vec<(String, ApproxArgument)>) {
        let v = Vocabulary::new(["w", "r", "p", "l", "h", "x"]).unwrap();
        let wf = |f: &str, w: &str| WeightedFormula::new(parse_formula(f, &v).unwrap(), Weight::parse(w).unwrap());
        let h = wf("h", "0.7");
        let e = ApproxArgument::new([wf("w", "0.7"), wf("r", "0.7"), wf("p", "0.8"), wf("l", "0.9")].into_iter().collect(), h.clone());
        let ds = vec![
            ("D1".to_string(), ApproxArgument::new([wf("r", "0.7"), wf("!r | h", "0.8")].into_iter().collect(), h.clone())),
            ("D2".to_string(), ApproxArgument::new([wf("p", "0.8"), wf("l", "0.9"), wf("!p | !l | h", "0.9")].into_iter().collect(), h.clone())),
            ("D3".to_string(), ApproxArgument::new([wf("!r", "0.7"), wf("w", "0.7"), wf("!w | h", "0.8")].into_iter().collect(), h)),
        ];
        (Context::new(v.len(), LogicConfig::default()).unwrap(), e, ds)
    }

    fn table(preset: Preset, agg: Aggregator) -> Vec<String> {
        let (ctx, e, ds) = running();
        let cfg = QualityConfig::preset(preset, agg);
        ds.iter()
            .map(|(_, d)| rational_decimal(&quality(&ctx, &e, d, &cfg).unwrap().aggregate, 3))
            .collect()
    }

    #[test]
    fn quality_tables() {
        assert_eq!(table(Preset::Ld, Aggregator::Average), ["0.952", "0.949", "0.909"]);
        assert_eq!(table(Preset::Ld, Aggregator::Product), ["0.667", "0.674", "0.462"]);
        assert_eq!(table(Preset::Sd, Aggregator::Average), ["0.802", "0.664", "0.608"]);
        assert_eq!(table(Preset::Sd, Aggregator::Product), ["0.056", "0.000", "0.000"]);
    }

    #[test]
    fn ranking_and_selection() {
        let (ctx, e, ds) = running();
        let ids = |r: &Ranking, which: &[usize]| which.iter().map(|&i| r.candidates[i].id.clone()).collect::<Vec<_>>();
        let r = rank(&ctx, &e, &ds, &QualityConfig::preset(Preset::Ld, Aggregator::Average));
        assert_eq!(ids(&r, &r.order), ["D1", "D2", "D3"]);
        let r = rank(&ctx, &e, &ds, &QualityConfig::preset(Preset::Ld, Aggregator::Product));
        assert_eq!(ids(&r, &r.order), ["D2", "D1", "D3"]);
        let mut cfg = QualityConfig::preset(Preset::Sd, Aggregator::Product);
        cfg.threshold = Some(ratio(1, 2));
        let r = rank(&ctx, &e, &ds, &cfg);
        assert_eq!(ids(&r, &r.order), ["D1", "D2", "D3"]);
        assert!(r.selected.is_empty());
        cfg.threshold = None;
        cfg.top_k = Some(2);
        let r = rank(&ctx, &e, &ds, &cfg);
        assert_eq!(ids(&r, &r.selected), ["D1", "D2"]);
    }

    #[test]
    fn aggregators() {
        let v = [int(1), int(1), int(1), int(1), ratio(2, 3), int(1), int(1)];
        assert_eq!(rational_decimal(&Aggregator::Average.apply(&v), 3), "0.952");
        assert_eq!(Aggregator::Average.apply(&[]), int(0));
        assert_eq!(Aggregator::Product.apply(&[]), int(0));
        assert_eq!(Aggregator::Product.apply(&[ratio(1, 2), int(0)]), int(0));
        assert!(Preset::parse("Xd").is_err());
        assert_eq!(Preset::Ld.sequence().len(), 7);
    }
}
