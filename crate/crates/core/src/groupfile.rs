//! Group ingestion: TOML group files and `catalog:` descriptors.
//!
//! A group file is a TOML document with a `kind` field and kind-specific
//! payload; unknown fields are rejected.
//!
//! ```toml
//! # kind = "table": explicit multiplication table, optional labels
//! name = "C2"
//! kind = "table"
//! table = [[0, 1], [1, 0]]
//! labels = ["1", "x"]
//!
//! # kind = "permutation": generators in cycle notation
//! kind = "permutation"
//! degree = 3
//! generators = ["(1 2)", "(1 2 3)"]
//!
//! # kind = "catalog": a builtin constructor
//! kind = "catalog"
//! catalog = "D8"
//!
//! # kind = "product": two factor sub-documents
//! kind = "product"
//! [left]
//! kind = "catalog"
//! catalog = "K4"
//! [right]
//! kind = "catalog"
//! catalog = "S3"
//! ```
//!
//! A descriptor is either `catalog:NAME` (where `NAME` may be a product of
//! catalog names joined with `x`, e.g. `K4xS3`) or a path to a group file.

use std::path::Path;

use serde::Deserialize;

use crate::catalog::catalog;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupDoc {
    name: Option<String>,
    kind: String,
    table: Option<Vec<Vec<usize>>>,
    labels: Option<Vec<String>>,
    degree: Option<usize>,
    generators: Option<Vec<String>>,
    catalog: Option<String>,
    left: Option<Box<GroupDoc>>,
    right: Option<Box<GroupDoc>>,
}

impl GroupDoc {
    /// Rejects any payload field that does not belong to this document's
    /// kind, naming the offending field.
    fn reject_foreign_fields(&self, allowed: &[&str]) -> Result<()> {
        let present: [(&str, bool); 6] = [
            ("table", self.table.is_some()),
            ("labels", self.labels.is_some()),
            ("degree", self.degree.is_some()),
            ("generators", self.generators.is_some()),
            ("catalog", self.catalog.is_some()),
            ("left", self.left.is_some()),
        ];
        for (field, is_present) in present {
            if is_present && !allowed.contains(&field) {
                return Err(Error::GroupFile(format!(
                    "field `{field}` is not allowed when kind = \"{}\"",
                    self.kind
                )));
            }
        }
        if self.right.is_some() && !allowed.contains(&"right") {
            return Err(Error::GroupFile(format!(
                "field `right` is not allowed when kind = \"{}\"",
                self.kind
            )));
        }
        Ok(())
    }

    fn require<T>(&self, value: Option<T>, field: &str) -> Result<T> {
        value.ok_or_else(|| {
            Error::GroupFile(format!("kind = \"{}\" requires field `{field}`", self.kind))
        })
    }

    fn build(&self) -> Result<FiniteGroup> {
        match self.kind.as_str() {
            "table" => {
                self.reject_foreign_fields(&["table", "labels"])?;
                let table = self.require(self.table.as_ref(), "table")?;
                FiniteGroup::from_table(table, self.labels.clone())
            }
            "permutation" => {
                self.reject_foreign_fields(&["degree", "generators"])?;
                let degree = self.require(self.degree, "degree")?;
                let texts = self.require(self.generators.as_ref(), "generators")?;
                let generators: Vec<Permutation> = texts
                    .iter()
                    .map(|t| Permutation::parse_cycles(degree, t))
                    .collect::<Result<_>>()?;
                FiniteGroup::from_permutation_generators(degree, &generators)
            }
            "catalog" => {
                self.reject_foreign_fields(&["catalog"])?;
                catalog(self.require(self.catalog.as_ref(), "catalog")?)
            }
            "product" => {
                self.reject_foreign_fields(&["left", "right"])?;
                let left = self.require(self.left.as_ref(), "left")?.build()?;
                let right = self.require(self.right.as_ref(), "right")?.build()?;
                FiniteGroup::direct_product(&left, &right)
            }
            other => Err(Error::GroupFile(format!(
                "unknown kind `{other}`; expected table, permutation, product, or catalog"
            ))),
        }
    }
}

/// Parses a group file from its text.
pub fn parse_group_file(text: &str) -> Result<(Option<String>, FiniteGroup)> {
    let doc: GroupDoc =
        toml::from_str(text).map_err(|e| Error::GroupFile(e.message().to_string()))?;
    Ok((doc.name.clone(), doc.build()?))
}

/// Loads a group file from disk; the group's display name defaults to the
/// file stem when the document has no `name`.
pub fn load_group_file(path: &Path) -> Result<(String, FiniteGroup)> {
    let text = std::fs::read_to_string(path)?;
    let (name, group) = parse_group_file(&text)?;
    let name = name.unwrap_or_else(|| {
        path.file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string())
    });
    Ok((name, group))
}

/// Resolves `catalog:NAME` (with `x`-joined product sugar) or a file path
/// into a named group.
pub fn resolve_group_descriptor(descriptor: &str) -> Result<(String, FiniteGroup)> {
    if let Some(name) = descriptor.strip_prefix("catalog:") {
        let mut parts = name.split('x');
        let first = parts
            .next()
            .filter(|p| !p.is_empty())
            .ok_or_else(|| Error::GroupFile(format!("empty catalog name in `{descriptor}`")))?;
        let mut group = catalog(first)?;
        for part in parts {
            if part.is_empty() {
                return Err(Error::GroupFile(format!(
                    "empty catalog name in `{descriptor}`"
                )));
            }
            group = FiniteGroup::direct_product(&group, &catalog(part)?)?;
        }
        Ok((name.to_string(), group))
    } else {
        load_group_file(Path::new(descriptor))
    }
}
