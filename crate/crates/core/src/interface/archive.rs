use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::InterfaceError;
use crate::operators::{Gen, Representation, SparseOperator};
use crate::patterns::{HighestWeight, Pattern, PatternBasis};
use crate::verify::VerifyReport;

pub const FORMAT_VERSION: u32 = 1;

/// A built representation on disk.
///
/// Serialization is canonical: patterns in basis order, generators keyed by
/// label in sorted order, matrix entries sorted by `(source, target)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepArchive {
    pub format_version: u32,
    pub highest_weight: HighestWeight,
    pub patterns: Vec<Pattern>,
    pub generators: BTreeMap<Gen, SparseOperator>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reports: Option<Vec<VerifyReport>>,
}

#[derive(Deserialize)]
struct VersionProbe {
    format_version: u32,
}

impl RepArchive {
    pub fn from_representation(r: &Representation) -> Self {
        RepArchive {
            format_version: FORMAT_VERSION,
            highest_weight: r.highest_weight().clone(),
            patterns: r.basis().patterns().to_vec(),
            generators: r.generators().clone(),
            reports: None,
        }
    }

    pub fn with_reports(mut self, reports: Vec<VerifyReport>) -> Self {
        self.reports = Some(reports);
        self
    }

    /// Checks the stored basis against a fresh enumeration and reassembles the
    /// representation. Matrices are not re-derived.
    pub fn to_representation(&self) -> Result<Representation, InterfaceError> {
        let basis = PatternBasis::new(&self.highest_weight);
        if basis.patterns() != self.patterns.as_slice() {
            return Err(InterfaceError::Archive(
                "stored patterns differ from the basis of the stored highest weight".into(),
            ));
        }
        Ok(Representation::from_parts(basis, self.generators.clone())?)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("archive serializes");
        s.push('\n');
        s
    }

    /// Parses an archive, rejecting any format version other than the current one
    /// before looking at the rest of the document.
    pub fn from_json(s: &str) -> Result<Self, InterfaceError> {
        let probe: VersionProbe = serde_json::from_str(s)?;
        if probe.format_version != FORMAT_VERSION {
            return Err(InterfaceError::Version(probe.format_version));
        }
        Ok(serde_json::from_str(s)?)
    }

    pub fn write(&self, path: &Path) -> Result<(), InterfaceError> {
        fs::write(path, self.to_json()).map_err(|e| InterfaceError::Io(path.display().to_string(), e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self, InterfaceError> {
        let s = fs::read_to_string(path).map_err(|e| InterfaceError::Io(path.display().to_string(), e.to_string()))?;
        Self::from_json(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn archive(lam: &str) -> RepArchive {
        let hw = HighestWeight::parse(2, lam).unwrap();
        RepArchive::from_representation(&Representation::build(&hw).unwrap())
    }

    #[test]
    fn round_trip() {
        let a = archive("0,-1");
        let b = RepArchive::from_json(&a.to_json()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_json(), b.to_json());
        let r = b.to_representation().unwrap();
        assert_eq!(r.dim(), 4);
    }

    #[test]
    fn trivial_archive_has_six_zero_matrices() {
        let a = archive("0,0");
        assert_eq!(a.generators.len(), 6);
        assert!(a.generators.values().all(|m| m.dim() == 1 && m.is_zero()));
    }

    #[test]
    fn unknown_version_rejected() {
        let s = archive("0,0").to_json().replace("\"format_version\":1", "\"format_version\":2");
        assert!(matches!(RepArchive::from_json(&s), Err(InterfaceError::Version(2))));
    }

    #[test]
    fn tampered_patterns_rejected() {
        let mut a = archive("0,-1");
        a.patterns.swap(0, 1);
        assert!(a.to_representation().is_err());
    }
}
