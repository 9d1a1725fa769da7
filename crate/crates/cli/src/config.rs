//! Run configuration, from flags or from a JSON file.

use anyhow::{anyhow, bail, ensure, Context, Result};
use serde::{Deserialize, Serialize};
use spinor_lfunc_core::characters::NormalizationExponent;
use spinor_lfunc_core::lfactors::{CaseKind, IdentityCase};
use spinor_lfunc_core::rational::parse;
use spinor_lfunc_core::satake::UnramifiedData;
use spinor_lfunc_core::Rational;

pub const SCHEMA: &str = r#"config schema (version 1), JSON:
{
  "schema": 1,
  "case": "a-odd" | "a-even-split" | "a-even-quasi-split" | "b-odd" | "b-even-split" | "b-even-quasi-split",
  "n": <GL rank>, "m": <GSpin rank>,
  "order": <truncation order R>,
  "normalization": "auto" | "tr_delta" | "tr_delta/2",     (optional, default "auto")
  "source": {"seeded": {"seed": <u64>, "count": <u64>}}
          | {"explicit": {
               "u": "p/q",            chi_0 is u^2
               "chi": ["p/q", ...],   m entries (m-1 for quasi-split); n for case B
               "tau": ["p/q", ...],   n entries; m for case B
               "a": "p/q", "alpha": "p/q", "beta": "p/q"   quasi-split only, alpha^2 - a beta^2 = u^2
            }}
}
Rationals are strings "p" or "p/q". Reports use the same encoding.
Exit codes: 0 all pass, 1 coefficient mismatch, 2 invalid input."#;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitParameters {
    pub u: String,
    pub chi: Vec<String>,
    pub tau: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ParameterSource {
    Seeded { seed: u64, count: u64 },
    Explicit(ExplicitParameters),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub schema: u32,
    pub case: String,
    pub n: usize,
    pub m: usize,
    pub order: usize,
    #[serde(default = "auto")]
    pub normalization: String,
    pub source: ParameterSource,
}

fn auto() -> String {
    "auto".to_string()
}

/// One fully parsed instance: the case, the data for the big group (or `σ`)
/// and the GL values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub case: IdentityCase,
    pub seed: Option<u64>,
    pub data: UnramifiedData,
    pub tau: Vec<Rational>,
}

pub fn rational(s: &str) -> Result<Rational> {
    parse(s.trim()).ok_or_else(|| anyhow!("not a rational: {s:?}"))
}

pub fn rationals(list: &[String]) -> Result<Vec<Rational>> {
    list.iter().map(|s| rational(s)).collect()
}

/// Splits `"2,3/4,-1"` into its entries.
pub fn split_list(s: &str) -> Vec<String> {
    s.split(',').map(str::trim).filter(|x| !x.is_empty()).map(String::from).collect()
}

pub fn parse_normalization(label: &str) -> Result<Option<NormalizationExponent>> {
    if label == "auto" {
        return Ok(None);
    }
    NormalizationExponent::from_label(label)
        .map(Some)
        .ok_or_else(|| anyhow!("unknown normalization {label:?} (auto, tr_delta, tr_delta/2)"))
}

impl ExplicitParameters {
    pub fn data(&self, quasi_split: bool) -> Result<UnramifiedData> {
        let u = rational(&self.u)?;
        ensure!(u != Rational::from_integer(0.into()), "u must be nonzero");
        let chi0 = &u * &u;
        let chi = rationals(&self.chi)?;
        let extra = [&self.a, &self.alpha, &self.beta];
        if !quasi_split {
            ensure!(extra.iter().all(|x| x.is_none()), "a, alpha, beta are only for quasi-split cases");
            return Ok(UnramifiedData::split(chi0, chi));
        }
        let [a, alpha, beta] = extra.map(|x| x.as_deref().map(rational).transpose());
        let (a, alpha, beta) = match (a?, alpha?, beta?) {
            (Some(a), Some(alpha), Some(beta)) => (a, alpha, beta),
            _ => bail!("quasi-split cases need a, alpha and beta"),
        };
        ensure!(&alpha * &alpha - &a * &beta * &beta == chi0, "alpha^2 - a beta^2 must equal u^2");
        Ok(UnramifiedData::quasi_split(chi0, chi, a, alpha, beta))
    }
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let config: RunConfig = serde_json::from_str(text).context("malformed config")?;
        ensure!(config.schema == 1, "unsupported config schema {}", config.schema);
        config.validate()?;
        Ok(config)
    }

    pub fn case(&self) -> Result<IdentityCase> {
        let kind = CaseKind::from_label(&self.case).ok_or_else(|| anyhow!("unknown case {:?}", self.case))?;
        Ok(IdentityCase::new(kind, self.n, self.m)?)
    }

    pub fn normalization(&self) -> Result<Option<NormalizationExponent>> {
        parse_normalization(&self.normalization)
    }

    pub fn validate(&self) -> Result<()> {
        self.case()?;
        self.normalization()?;
        self.instances()?;
        Ok(())
    }

    /// The instances this config describes, in seed order.
    pub fn instances(&self) -> Result<Vec<Instance>> {
        let case = self.case()?;
        match &self.source {
            ParameterSource::Seeded { seed, count } => {
                ensure!(*count >= 1, "count must be at least 1");
                (*seed..seed.checked_add(*count).context("seed range overflows")?)
                    .map(|s| {
                        let (data, tau) = crate::params::case_parameters(&case, s);
                        Ok(Instance { case, seed: Some(s), data, tau })
                    })
                    .collect()
            }
            ParameterSource::Explicit(p) => {
                let data = p.data(case.kind().is_quasi_split())?;
                let tau = rationals(&p.tau)?;
                Ok(vec![Instance { case, seed: None, data, tau }])
            }
        }
    }
}
