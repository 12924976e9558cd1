//! Group spec files and the `name:` / `file:` group references.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::autgrp::{automorphism_group, AutomorphismGroup, DEFAULT_MAX_NODES};
use crate::catalog;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, DEFAULT_CLOSURE_LIMIT};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorSpec {
    Cycles(String),
    Images(Vec<u32>),
}

/// `{ "name": …, "degree": …, "generators": [ "(1 2)" | [images] ] }`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupSpecFile {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<GeneratorSpec>,
}

impl GroupSpecFile {
    pub fn generators(&self) -> Result<Vec<Permutation>> {
        self.generators
            .iter()
            .map(|g| match g {
                GeneratorSpec::Cycles(s) => Permutation::parse_cycles(self.degree, s),
                GeneratorSpec::Images(v) => {
                    let p = Permutation::from_images(v.clone())?;
                    if p.degree() != self.degree {
                        return Err(Error::DegreeMismatch {
                            left: self.degree,
                            right: p.degree(),
                        });
                    }
                    Ok(p)
                }
            })
            .collect()
    }

    pub fn close(&self, limit: usize) -> Result<FiniteGroup> {
        FiniteGroup::close(self.degree, self.generators()?, limit)
    }

    pub fn from_group(name: &str, g: &FiniteGroup) -> Self {
        GroupSpecFile {
            name: name.to_string(),
            degree: g.degree(),
            generators: g
                .generators()
                .iter()
                .map(|p| GeneratorSpec::Cycles(p.to_cycle_string()))
                .collect(),
        }
    }
}

pub fn read_spec_file(path: &Path) -> Result<GroupSpecFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Resolve `name:<catalog id>`, `name:aut(<catalog id>)` or `file:<path>`.
pub fn resolve_group(spec: &str, limit: usize) -> Result<(String, FiniteGroup)> {
    if let Some(path) = spec.strip_prefix("file:") {
        let file = read_spec_file(Path::new(path))?;
        let g = file.close(limit)?;
        return Ok((file.name, g));
    }
    let id = spec
        .strip_prefix("name:")
        .ok_or_else(|| Error::Parse(format!("group spec must start with name: or file:, got {spec}")))?;
    let normalized: String = id.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase();
    if normalized != "aut(psl(3,4))" {
        if let Some(inner) = normalized.strip_prefix("aut(").and_then(|s| s.strip_suffix(')')) {
            let g = catalog::by_name(inner)?;
            let a = automorphism_group(&g, DEFAULT_MAX_NODES)?;
            return Ok((normalized, a.into_group()));
        }
    }
    let g = catalog::by_name(&normalized)?;
    if g.order() > limit {
        return Err(Error::ClosureLimitExceeded { limit });
    }
    Ok((normalized, g))
}

pub fn resolve_default(spec: &str) -> Result<(String, FiniteGroup)> {
    resolve_group(spec, DEFAULT_CLOSURE_LIMIT)
}

/// Serialized automorphism group: generators and order, enough to rebuild it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AutomorphismFile {
    pub group: String,
    pub group_order: usize,
    pub order: usize,
    pub inner_order: usize,
    /// Each generator as the image list of element ids.
    pub generators: Vec<Vec<u32>>,
}

impl AutomorphismFile {
    pub fn from_aut(name: &str, a: &AutomorphismGroup) -> Self {
        AutomorphismFile {
            group: name.to_string(),
            group_order: a.carrier_order(),
            order: a.order(),
            inner_order: a.inner().len(),
            generators: a.generators().iter().map(|p| p.images().to_vec()).collect(),
        }
    }

    pub fn generators(&self) -> Result<Vec<Permutation>> {
        self.generators.iter().map(|v| Permutation::from_images(v.clone())).collect()
    }
}
