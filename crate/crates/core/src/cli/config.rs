//! Variety descriptions: the built-in catalog and JSON configs.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::grassmann::GrassmannianSpec;
use crate::lefschetz::CompleteIntersectionSpec;

use super::pipeline::{PipelineError, Stage, StageError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum AmbientConfig {
    Grassmannian {
        r: u32,
        n: u32,
    },
    /// G(1, n), i.e. P^{n-1}
    Projective {
        n: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VarietyConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub ambient: AmbientConfig,
    pub degrees: Vec<u32>,
}

fn config_error(msg: impl Into<String>) -> PipelineError {
    PipelineError::new(Stage::Config, StageError::Config(msg.into()))
}

impl VarietyConfig {
    pub fn v10() -> Self {
        VarietyConfig {
            name: Some("V10".into()),
            ambient: AmbientConfig::Grassmannian { r: 2, n: 5 },
            degrees: vec![1, 1, 2],
        }
    }

    pub fn v14() -> Self {
        VarietyConfig {
            name: Some("V14".into()),
            ambient: AmbientConfig::Grassmannian { r: 2, n: 6 },
            degrees: vec![1, 1, 1, 1, 1],
        }
    }

    /// Built-in entry by name, case-insensitively.
    pub fn catalog(name: &str) -> Option<Self> {
        match name.to_ascii_uppercase().as_str() {
            "V10" => Some(Self::v10()),
            "V14" => Some(Self::v14()),
            _ => None,
        }
    }

    pub fn catalog_names() -> [&'static str; 2] {
        ["V10", "V14"]
    }

    pub fn from_json(text: &str) -> Result<Self, PipelineError> {
        let config: VarietyConfig =
            serde_json::from_str(text).map_err(|e| config_error(format!("bad config: {e}")))?;
        config.spec()?;
        Ok(config)
    }

    pub fn from_path(path: &Path) -> Result<Self, PipelineError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| config_error(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// A catalog name or the path of a JSON config.
    pub fn resolve(arg: &str) -> Result<Self, PipelineError> {
        if let Some(c) = Self::catalog(arg) {
            return Ok(c);
        }
        let path = Path::new(arg);
        if path.exists() {
            return Self::from_path(path);
        }
        Err(config_error(format!(
            "unknown variety {arg:?}: expected one of {} or a config path",
            Self::catalog_names().join(", ")
        )))
    }

    /// Whether this is one of the built-in entries, whose outputs are
    /// checked against published values.
    pub fn is_catalog(&self) -> bool {
        Self::catalog_names()
            .into_iter()
            .filter_map(Self::catalog)
            .any(|c| c.ambient == self.ambient && c.degrees == self.degrees)
    }

    pub fn ambient_spec(&self) -> Result<GrassmannianSpec, PipelineError> {
        let spec = match self.ambient {
            AmbientConfig::Grassmannian { r, n } => GrassmannianSpec::new(r, n),
            AmbientConfig::Projective { n } => GrassmannianSpec::projective(n),
        };
        spec.map_err(|e| PipelineError::new(Stage::Config, e.into()))
    }

    pub fn spec(&self) -> Result<CompleteIntersectionSpec, PipelineError> {
        CompleteIntersectionSpec::new(self.ambient_spec()?, self.degrees.clone())
            .map_err(|e| PipelineError::new(Stage::Config, e.into()))
    }

    pub fn label(&self) -> String {
        match (&self.name, self.spec()) {
            (Some(n), _) => n.clone(),
            (None, Ok(spec)) => spec.to_string(),
            (None, Err(_)) => "unnamed".into(),
        }
    }
}
