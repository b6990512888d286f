//! The algebra file format: canonical JSON with sparse structure-constant
//! triples and rationals as strings.
//!
//! Canonical form: object keys in a fixed (alphabetical) order, table
//! entries sorted by `(i, j, k)`, rational coefficients reduced. Parsing
//! followed by serialization is byte-identical on canonicalized files.

use crate::algebra::Algebra;
use crate::element::Element;
use crate::scalar::{Mode, Scalar};
use std::collections::BTreeMap;

/// One nonzero structure constant `e_i e_j = ... + c e_k + ...`.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct TableEntry {
    pub c: String,
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

/// The on-disk representation.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, String>,
    pub name: String,
    pub scalar: String,
    pub table: Vec<TableEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
}

/// Schema or verification failure while reading an algebra file.
#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error("declared unit fails verification at basis index {0}")]
    UnitVerification(usize),
}

fn scalar_mode(name: &str) -> Result<Mode, FileError> {
    match name {
        "rational" => Ok(Mode::Rational),
        "real" => Ok(Mode::Real),
        other => Err(FileError::Schema(format!(
            "scalar must be \"rational\" or \"real\", got {other:?}"
        ))),
    }
}

/// Parses and validates an algebra file: schema, entry ranges, duplicate
/// keys, scalar syntax, and the declared unit (verified against every basis
/// vector).
pub fn parse_algebra_file(text: &str) -> Result<(Algebra, AlgebraFile), FileError> {
    let file: AlgebraFile =
        serde_json::from_str(text).map_err(|e| FileError::Schema(e.to_string()))?;
    let algebra = file_to_algebra(&file)?;
    Ok((algebra, file))
}

fn file_to_algebra(file: &AlgebraFile) -> Result<Algebra, FileError> {
    let n = file.dim;
    if n == 0 {
        return Err(FileError::Schema("dim must be positive".into()));
    }
    let mode = scalar_mode(&file.scalar)?;
    if let Some(labels) = &file.labels {
        if labels.len() != n {
            return Err(FileError::Schema(format!(
                "labels has {} entries for dimension {n}",
                labels.len()
            )));
        }
    }
    let mut table = vec![Scalar::zero(mode); n * n * n];
    let mut seen = std::collections::HashSet::new();
    for entry in &file.table {
        if entry.i >= n || entry.j >= n || entry.k >= n {
            return Err(FileError::Schema(format!(
                "table index ({}, {}, {}) out of range for dimension {n}",
                entry.i, entry.j, entry.k
            )));
        }
        if !seen.insert((entry.i, entry.j, entry.k)) {
            return Err(FileError::Schema(format!(
                "duplicate table key ({}, {}, {})",
                entry.i, entry.j, entry.k
            )));
        }
        let c = Scalar::parse(&entry.c, mode).map_err(FileError::Schema)?;
        table[(entry.i * n + entry.j) * n + entry.k] = c;
    }
    let mut alg = Algebra::new(n, mode, table)
        .map_err(|e| FileError::Schema(e.to_string()))?;
    if let Some(labels) = &file.labels {
        alg = alg.with_labels(labels.clone());
    }
    if let Some(unit) = &file.unit {
        if unit.len() != n {
            return Err(FileError::Schema(format!(
                "unit has {} coordinates for dimension {n}",
                unit.len()
            )));
        }
        let coords: Result<Vec<Scalar>, FileError> = unit
            .iter()
            .map(|s| Scalar::parse(s, mode).map_err(FileError::Schema))
            .collect();
        alg = alg.with_unit(Element::new(coords?)).map_err(|e| match e {
            crate::Error::UnitVerification(j) => FileError::UnitVerification(j),
            other => FileError::Schema(other.to_string()),
        })?;
    }
    Ok(alg)
}

/// Builds the file representation of an algebra. Zero entries are omitted
/// and the remaining triples are sorted, so the output is canonical.
pub fn algebra_to_file(name: &str, alg: &Algebra) -> AlgebraFile {
    assert!(
        !alg.mode().is_complex(),
        "the file format stores rational or real algebras only"
    );
    let n = alg.dim();
    let mut table = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = alg.table_entry(i, j, k);
                if !c.is_zero() {
                    table.push(TableEntry {
                        c: c.to_string(),
                        i,
                        j,
                        k,
                    });
                }
            }
        }
    }
    AlgebraFile {
        dim: n,
        labels: alg.labels().map(<[String]>::to_vec),
        metadata: BTreeMap::new(),
        name: name.to_string(),
        scalar: alg.mode().to_string(),
        table,
        unit: alg
            .find_unit()
            .map(|u| u.coords().iter().map(Scalar::to_string).collect()),
    }
}

/// Canonical single-line JSON: fixed key order, sorted table triples.
pub fn canonical_json(file: &AlgebraFile) -> String {
    let mut sorted = file.clone();
    sorted.table.sort_by_key(|e| (e.i, e.j, e.k));
    serde_json::to_string(&sorted).expect("algebra files serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{builtin, Builtin};

    #[test]
    fn quaternion_file_round_trips_to_the_builtin_table() {
        let h = builtin(Builtin::Quaternions, Mode::Rational).unwrap();
        let file = algebra_to_file("quaternions", &h);
        assert_eq!(file.table.len(), 16);
        let text = canonical_json(&file);
        let (parsed, file2) = parse_algebra_file(&text).unwrap();
        assert!(parsed.same_table(&h));
        assert_eq!(canonical_json(&file2), text);
    }

    #[test]
    fn duplicate_keys_are_a_schema_error() {
        let text = r#"{"dim":1,"name":"x","scalar":"rational",
            "table":[{"c":"1","i":0,"j":0,"k":0},{"c":"2","i":0,"j":0,"k":0}]}"#;
        assert!(matches!(
            parse_algebra_file(text),
            Err(FileError::Schema(_))
        ));
    }

    #[test]
    fn broken_unit_names_the_failing_basis_index() {
        // Quaternion table with a flipped sign and the standard unit
        // declared: verification fails and reports which e_j breaks.
        let h = builtin(Builtin::Quaternions, Mode::Rational).unwrap();
        let mut file = algebra_to_file("broken", &h);
        for e in &mut file.table {
            if (e.i, e.j, e.k) == (0, 1, 1) {
                e.c = "-1".into(); // 1 * e1 = -e1
            }
        }
        let text = canonical_json(&file);
        match parse_algebra_file(&text) {
            Err(FileError::UnitVerification(j)) => assert_eq!(j, 1),
            other => panic!("expected a unit verification error, got {other:?}"),
        }
    }

    #[test]
    fn out_of_range_indices_and_bad_scalars_are_rejected() {
        let text = r#"{"dim":2,"name":"x","scalar":"rational",
            "table":[{"c":"1","i":0,"j":0,"k":5}]}"#;
        assert!(parse_algebra_file(text).is_err());
        let text = r#"{"dim":1,"name":"x","scalar":"rational",
            "table":[{"c":"1/0","i":0,"j":0,"k":0}]}"#;
        assert!(parse_algebra_file(text).is_err());
        let text = r#"{"dim":1,"name":"x","scalar":"imaginary","table":[]}"#;
        assert!(parse_algebra_file(text).is_err());
    }
}
