//! Space files: a named ground set and a chain of topologies, each listed as
//! its open sets.
//!
//! ```json
//! {"ground": ["x", "y"], "topologies": [[[], ["x", "y"]], [[], ["x"], ["x", "y"]]]}
//! ```

use std::path::Path;

use kurlab_core::topology::{check_ground, validate_topology, GroundSet, PolySpace, SubsetMask};
use kurlab_core::{Error, Limits};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceFile {
    pub ground: Vec<String>,
    pub topologies: Vec<Vec<Vec<String>>>,
}

impl SpaceFile {
    pub fn from_space(space: &PolySpace) -> Self {
        let ground = space.ground();
        Self {
            ground: ground.names().to_vec(),
            topologies: space
                .chain()
                .iter()
                .map(|t| t.opens().iter().map(|&u| names(ground, u)).collect())
                .collect(),
        }
    }

    /// Validates names, topologies and the chain condition.
    pub fn to_space(&self, limits: &Limits) -> Result<PolySpace, Error> {
        check_ground(self.ground.len(), limits)?;
        let ground = GroundSet::named(self.ground.clone())?;
        let chain = self
            .topologies
            .iter()
            .map(|opens| {
                let masks = opens
                    .iter()
                    .map(|set| mask_of(&ground, set))
                    .collect::<Result<Vec<_>, _>>()?;
                validate_topology(ground.size(), &masks)
            })
            .collect::<Result<Vec<_>, _>>()?;
        PolySpace::new(ground, chain)
    }
}

pub fn names(ground: &GroundSet, mask: SubsetMask) -> Vec<String> {
    ground
        .describe(mask)
        .into_iter()
        .map(String::from)
        .collect()
}

pub fn mask_of(ground: &GroundSet, set: &[String]) -> Result<SubsetMask, Error> {
    set.iter()
        .try_fold(0, |acc, name| match ground.index_of(name) {
            Some(i) => Ok(acc | 1 << i),
            None => Err(Error::InvalidSpace(format!("unknown point `{name}`"))),
        })
}

pub fn load(path: &Path, limits: &Limits) -> Result<PolySpace, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    let file: SpaceFile = serde_json::from_str(&text)?;
    Ok(file.to_space(limits)?)
}
