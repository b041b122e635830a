//! Declarative environment descriptors and the log-space arithmetic that
//! turns them into state-space, game-tree and game-space complexity,
//! information-breakdown entropy and solution-path sparsity bounds.
//!
//! Descriptors are JSON documents; see `docs/descriptor-schema.md` in the repository for the
//! format. Unknown keys are rejected.

mod bundled;
mod calc;

pub use bundled::{bundled, bundled_names};
pub use calc::{
    analyze, environment_space_bound, environment_space_with_estimates, game_space_complexity,
    information_entropy, path_sparsity_bound, state_space_complexity, strategy_entropy,
    tree_complexity, PathSparsity, TreeMode, WinProbVector,
};

use serde::{Deserialize, Serialize};

use crate::measures::Cardinality;
use crate::{Error, Result};

/// Whether a component spans world states, game instances, or the initial
/// states counted into the game space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    State,
    Instance,
    Initial,
}

/// Open-world novelty hierarchy category. Metadata only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HierarchyLevel {
    Object,
    Agent,
    Action,
    Relation,
    Interaction,
    Rule,
    Goal,
    Event,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Component {
    pub name: String,
    pub cardinality: Cardinality,
    pub role: Role,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hierarchy_level: Option<HierarchyLevel>,
    /// Marks a rough slack factor with no published decomposition.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub estimate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InformationElement {
    pub name: String,
    pub count: u64,
    pub units: u64,
}

/// Units of information needed to describe each element of a world state.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InformationBreakdown {
    pub elements: Vec<InformationElement>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Strategy {
    pub name: String,
    pub win_probs: Vec<f64>,
}

/// Minimal successful path: `required_moves` counts of two move kinds, one
/// finishing action, plus `extra_actions` slack.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionPath {
    pub required_moves: [u64; 2],
    #[serde(default)]
    pub extra_actions: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DomainDescriptor {
    pub name: String,
    pub branching_factor: u64,
    pub avg_game_length: u64,
    pub max_game_length: u64,
    pub components: Vec<Component>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<InformationElement>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub strategies: Vec<Strategy>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solution_path: Option<SolutionPath>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl DomainDescriptor {
    pub fn from_json(text: &str) -> Result<Self> {
        let d: Self = serde_json::from_str(text)?;
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        if self.branching_factor == 0 || self.avg_game_length == 0 || self.max_game_length == 0 {
            return Err(Error::InvalidParameter(
                "branching factor and game lengths must be >= 1".into(),
            ));
        }
        if self.avg_game_length > self.max_game_length {
            return Err(Error::InvalidParameter(format!(
                "average game length {} exceeds maximum {}",
                self.avg_game_length, self.max_game_length
            )));
        }
        for c in &self.components {
            c.cardinality.validate()?;
        }
        if let Some(elements) = &self.elements {
            if let Some(e) = elements.iter().find(|e| e.count == 0 || e.units == 0) {
                return Err(Error::InvalidValue(format!(
                    "information element {} needs count and units >= 1",
                    e.name
                )));
            }
        }
        Ok(())
    }

    pub fn components_with(&self, role: Role) -> impl Iterator<Item = &Component> {
        self.components.iter().filter(move |c| c.role == role)
    }

    pub fn breakdown(&self) -> Option<InformationBreakdown> {
        self.elements.clone().map(|elements| InformationBreakdown { elements })
    }
}
