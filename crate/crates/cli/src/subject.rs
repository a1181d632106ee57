//! Turns a command-line subject into a group.

use std::path::PathBuf;

use sqcomm_core::catalog::{self, CatalogError};
use sqcomm_core::presentation::{EnumerationError, ParseError};
use sqcomm_core::{todd_coxeter, CayleyGroup, ElementId, Presentation};

use crate::cayley::{self, CayleyFileError};

pub struct Subject {
    pub group: CayleyGroup,
    pub generators: Vec<ElementId>,
    pub warning: Option<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum SubjectError {
    #[error("presentation: {0}")]
    Presentation(#[from] ParseError),
    #[error("{0}")]
    Enumeration(#[from] EnumerationError),
    #[error("{0}")]
    Catalog(#[from] CatalogError),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Cayley { path: PathBuf, source: CayleyFileError },
    #[error("--rel only applies to bs catalog specs")]
    StrayRelations,
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
}

pub fn is_presentation(text: &str) -> bool {
    text.trim_start().starts_with(['<', '⟨'])
}

/// Accepts a presentation (`< a | a^4 >`), a table file (`table:path`) or
/// a catalog spec (`dihedral:4`).
pub fn resolve(text: &str, rel: Option<&str>, max_cosets: usize) -> Result<Subject, SubjectError> {
    if rel.is_some() && (is_presentation(text) || text.starts_with("table:")) {
        return Err(SubjectError::StrayRelations);
    }
    if is_presentation(text) {
        let r = todd_coxeter(&Presentation::parse(text)?, max_cosets)?;
        return Ok(Subject { group: r.group, generators: r.assignment, warning: None });
    }
    if let Some(path) = text.strip_prefix("table:") {
        let path = PathBuf::from(path);
        let contents =
            std::fs::read_to_string(&path).map_err(|source| SubjectError::Io { path: path.clone(), source })?;
        let group = cayley::read(&contents).map_err(|source| SubjectError::Cayley { path, source })?;
        let generators = group.generators().to_vec();
        return Ok(Subject { group, generators, warning: None });
    }
    let e = catalog::from_spec(text, rel, max_cosets)?;
    Ok(Subject { group: e.group, generators: e.canonical_generators, warning: e.warning })
}

pub fn lookup_labels(group: &CayleyGroup, labels: &[String]) -> Result<Vec<ElementId>, SubjectError> {
    labels
        .iter()
        .map(|l| group.element_by_label(l.trim()).ok_or_else(|| SubjectError::UnknownLabel(l.clone())))
        .collect()
}
