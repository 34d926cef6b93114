//! JSON problem and configuration files.
//!
//! Weights and measure parameters are read as strings (numbers are accepted
//! and taken by their printed form) so that values stay exact.

use std::collections::BTreeMap;

use num_traits::One;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::formula::Vocabulary;
use crate::logic::{ApproxArgument, Caps, LogicConfig, WeightedFormula};
use crate::measures::{Context, MeasureKind, MeasureSpec, RawParams};
use crate::number::{parse_rational, rational_string, Rational, Weight};
use crate::parser::parse_formula;
use crate::quality::{Aggregator, Preset, QualityConfig};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightedFormulaFile {
    pub formula: String,
    #[serde(deserialize_with = "exact_string")]
    pub weight: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArgumentFile {
    #[serde(default)]
    pub premises: Vec<WeightedFormulaFile>,
    pub claim: WeightedFormulaFile,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecodingFile {
    pub id: String,
    #[serde(default)]
    pub premises: Vec<WeightedFormulaFile>,
    pub claim: WeightedFormulaFile,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub atoms: Vec<String>,
    pub enthymeme: ArgumentFile,
    #[serde(default)]
    pub decodings: Vec<DecodingFile>,
}

/// A parsed decoding problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    pub vocabulary: Vocabulary,
    pub enthymeme: ApproxArgument,
    pub decodings: Vec<(String, ApproxArgument)>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Schema(format!("{e}"))
}

fn exact_string<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<String, D::Error> {
    match Value::deserialize(d)? {
        Value::String(s) => Ok(s),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(serde::de::Error::custom(format!(
            "expected a string or number, found {other}"
        ))),
    }
}

fn value_string(v: &Value, what: &str) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(Error::Schema(format!("{what}: expected a string or number, found {other}"))),
    }
}

impl Problem {
    pub fn from_json(text: &str) -> Result<Problem> {
        let file: ProblemFile = serde_json::from_str(text).map_err(json_error)?;
        Problem::from_file(&file)
    }

    pub fn from_file(file: &ProblemFile) -> Result<Problem> {
        let vocabulary = Vocabulary::new(file.atoms.iter().map(String::as_str))?;
        let weighted = |wf: &WeightedFormulaFile, at: &str| -> Result<WeightedFormula> {
            let context = |e: Error| Error::Schema(format!("{at}: {e}"));
            let formula = parse_formula(&wf.formula, &vocabulary).map_err(context)?;
            let weight = Weight::parse(&wf.weight).map_err(context)?;
            Ok(WeightedFormula::new(formula, weight))
        };
        let argument = |premises: &[WeightedFormulaFile], claim: &WeightedFormulaFile, at: &str| {
            let premises = premises
                .iter()
                .enumerate()
                .map(|(i, wf)| weighted(wf, &format!("{at}.premises[{i}]")))
                .collect::<Result<_>>()?;
            Ok::<_, Error>(ApproxArgument::new(premises, weighted(claim, &format!("{at}.claim"))?))
        };
        let enthymeme = argument(&file.enthymeme.premises, &file.enthymeme.claim, "enthymeme")?;
        let mut decodings = Vec::with_capacity(file.decodings.len());
        for (i, d) in file.decodings.iter().enumerate() {
            if decodings.iter().any(|(id, _)| id == &d.id) {
                return Err(Error::Schema(format!("duplicate decoding id `{}`", d.id)));
            }
            decodings.push((d.id.clone(), argument(&d.premises, &d.claim, &format!("decodings[{i}]"))?));
        }
        Ok(Problem {
            vocabulary,
            enthymeme,
            decodings,
        })
    }

    /// The file form, with formulas in ASCII syntax and weights in shortest decimal form.
    pub fn to_file(&self) -> ProblemFile {
        let v = &self.vocabulary;
        let wf = |x: &WeightedFormula| WeightedFormulaFile {
            formula: x.formula.ascii(v).to_string(),
            weight: x.weight.to_string(),
        };
        ProblemFile {
            atoms: v.names().to_vec(),
            enthymeme: ArgumentFile {
                premises: self.enthymeme.premises.iter().map(wf).collect(),
                claim: wf(&self.enthymeme.claim),
            },
            decodings: self
                .decodings
                .iter()
                .map(|(id, d)| DecodingFile {
                    id: id.clone(),
                    premises: d.premises.iter().map(wf).collect(),
                    claim: wf(&d.claim),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("problem files always serialize")
    }

    pub fn context(&self, logic: LogicConfig) -> Result<Context> {
        Context::new(self.vocabulary.len(), logic)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeasureEntry {
    pub measure: String,
    #[serde(default)]
    pub params: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LogicFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_atoms: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_premises: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_literals: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    /// Penalty of the inference measure inside the `Ld` preset.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset_inference_penalty: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sequence: Option<Vec<MeasureEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aggregator: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threshold: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top_k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub logic: Option<LogicFile>,
}

/// A fully validated run configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub quality: QualityConfig,
    pub logic: LogicConfig,
    pub preset: Option<Preset>,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig {
            quality: QualityConfig::preset(Preset::Ld, Aggregator::Average),
            logic: LogicConfig::default(),
            preset: Some(Preset::Ld),
        }
    }
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<RunConfig> {
        let file: ConfigFile = serde_json::from_str(text).map_err(json_error)?;
        RunConfig::from_file(&file)
    }

    pub fn from_file(file: &ConfigFile) -> Result<RunConfig> {
        let aggregator = match &file.aggregator {
            Some(name) => Aggregator::parse(name)?,
            None => Aggregator::default(),
        };
        let (sequence, preset) = match (&file.preset, &file.sequence) {
            (Some(_), Some(_)) => {
                return Err(Error::Schema("give either `preset` or `sequence`, not both".into()));
            }
            (Some(name), None) => {
                let preset = Preset::parse(name)?;
                let seq = match &file.preset_inference_penalty {
                    Some(v) => preset.sequence_with(parse_rational(&value_string(v, "preset_inference_penalty")?)?),
                    None => preset.sequence(),
                };
                (seq, Some(preset))
            }
            (None, Some(entries)) => (
                entries.iter().map(parse_entry).collect::<Result<Vec<_>>>()?,
                None,
            ),
            (None, None) => return Err(Error::Schema("config needs `preset` or `sequence`".into())),
        };
        if file.preset_inference_penalty.is_some() && preset.is_none() {
            return Err(Error::Schema("`preset_inference_penalty` needs `preset`".into()));
        }
        let threshold = file
            .threshold
            .as_ref()
            .map(|v| parse_rational(&value_string(v, "threshold")?))
            .transpose()?;
        let quality = QualityConfig {
            sequence,
            aggregator,
            threshold,
            top_k: file.top_k,
        };
        quality.validate()?;
        let mut logic = LogicConfig::default();
        if let Some(l) = &file.logic {
            if let Some(t) = &l.t {
                logic.threshold = Weight::parse(&value_string(t, "logic.t")?)?;
            }
            let caps = &mut logic.caps;
            caps.max_atoms = l.max_atoms.unwrap_or(caps.max_atoms);
            caps.max_premises = l.max_premises.unwrap_or(caps.max_premises);
            caps.max_literals = l.max_literals.unwrap_or(caps.max_literals);
        }
        Ok(RunConfig {
            quality,
            logic,
            preset,
        })
    }

    /// The normalized file form echoed into reports.
    pub fn to_file(&self) -> ConfigFile {
        let sequence = self
            .quality
            .sequence
            .iter()
            .map(|m| MeasureEntry {
                measure: m.kind().id().to_string(),
                params: m.params().into_iter().map(|(k, v)| (k, Value::String(v))).collect(),
            })
            .collect();
        let Caps {
            max_atoms,
            max_premises,
            max_literals,
        } = self.logic.caps;
        ConfigFile {
            preset: None,
            preset_inference_penalty: None,
            sequence: Some(sequence),
            aggregator: Some(self.quality.aggregator.name().to_string()),
            threshold: self.quality.threshold.as_ref().map(|t| Value::String(rational_string(t))),
            top_k: self.quality.top_k,
            logic: Some(LogicFile {
                t: Some(Value::String(self.logic.threshold.to_string())),
                max_atoms: Some(max_atoms),
                max_premises: Some(max_premises),
                max_literals: Some(max_literals),
            }),
        }
    }
}

fn parse_entry(entry: &MeasureEntry) -> Result<MeasureSpec> {
    let kind = MeasureKind::parse(&entry.measure)?;
    let mut raw = RawParams::new();
    for (k, v) in &entry.params {
        raw.insert(k.clone(), value_string(v, &format!("{}.{k}", entry.measure))?);
    }
    MeasureSpec::from_parts(kind, &raw)
}

/// Parses a threshold given on the command line.
pub fn parse_threshold(text: &str) -> Result<Rational> {
    let t = parse_rational(text)?;
    if t > Rational::one() {
        return Err(Error::Schema("threshold must lie in [0, 1]".into()));
    }
    Ok(t)
}
