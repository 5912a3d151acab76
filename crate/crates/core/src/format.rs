//! JSON file formats for matrices, Laurent matrices, Lie algebra generators
//! and flag pairs.
//!
//! Rationals are written as strings `"p"` or `"p/q"`; plain JSON integers
//! are accepted on input. Inputs are size-limited so that a hostile file
//! cannot force huge allocations.

use std::collections::BTreeSet;

use serde::Deserialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::laurent::{LaurentMatrix, LaurentPoly};
use crate::matrix::{QMatrix, QVector};
use crate::rat::{ParseRatError, Rat};
use crate::subspace::{Flag, Subspace};

/// Largest accepted matrix dimension.
pub const MAX_DIM: usize = 256;
/// Largest accepted Laurent matrix size.
pub const MAX_LAURENT_SIZE: usize = 32;
/// Largest accepted absolute exponent.
pub const MAX_EXPONENT: i64 = 1024;
/// Largest accepted number of terms in one Laurent entry.
pub const MAX_TERMS: usize = 2 * MAX_EXPONENT as usize + 1;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad rational {:?}: {}", .0.text, .0.reason)]
    Rat(#[from] ParseRatError),
    #[error("{0}")]
    Invalid(String),
}

type Result<T> = std::result::Result<T, FormatError>;

fn invalid(msg: impl Into<String>) -> FormatError {
    FormatError::Invalid(msg.into())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Rat>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LaurentFile {
    size: usize,
    entries: Vec<Vec<Vec<(i64, Rat)>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LieFile {
    ambient_dim: usize,
    generators: Vec<MatrixFile>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FlagPairFile {
    ambient_dim: usize,
    ascending: Vec<Vec<Vec<Rat>>>,
    descending: Vec<Vec<Vec<Rat>>>,
}

fn check_dim(what: &str, n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(invalid(format!("{what} {n} exceeds the limit {max}")));
    }
    Ok(())
}

fn matrix_from_file(f: MatrixFile) -> Result<QMatrix> {
    check_dim("rows", f.rows, MAX_DIM)?;
    check_dim("cols", f.cols, MAX_DIM)?;
    if f.entries.len() != f.rows || f.entries.iter().any(|r| r.len() != f.cols) {
        return Err(invalid(format!("entries do not form a {}x{} array", f.rows, f.cols)));
    }
    let flat: Vec<Rat> = f.entries.into_iter().flatten().collect();
    QMatrix::from_row_major(f.rows, f.cols, flat).map_err(|e| invalid(e.to_string()))
}

pub fn parse_matrix(text: &str) -> Result<QMatrix> {
    matrix_from_file(serde_json::from_str(text)?)
}

pub fn matrix_to_json(m: &QMatrix) -> Value {
    let entries: Vec<Vec<String>> =
        m.to_rows().iter().map(|r| r.iter().map(Rat::to_string).collect()).collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": entries })
}

pub fn vector_to_json(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

/// Column vectors of the canonical basis.
pub fn subspace_to_json(s: &Subspace) -> Value {
    json!({
        "ambient_dim": s.ambient_dim(),
        "dim": s.dim(),
        "basis": s.basis_vectors().iter().map(|v| vector_to_json(v)).collect::<Vec<_>>(),
    })
}

/// A vector written as a JSON array or as comma-separated rationals.
pub fn parse_vector(text: &str) -> Result<QVector> {
    let t = text.trim();
    let v: QVector = if t.starts_with('[') {
        serde_json::from_str(t)?
    } else {
        t.split(',').map(|s| s.trim().parse::<Rat>()).collect::<std::result::Result<_, _>>()?
    };
    check_dim("vector length", v.len(), MAX_DIM)?;
    Ok(v)
}

fn laurent_entry(terms: Vec<(i64, Rat)>) -> Result<LaurentPoly> {
    if terms.len() > MAX_TERMS {
        return Err(invalid(format!("entry has {} terms, limit {MAX_TERMS}", terms.len())));
    }
    let mut seen = BTreeSet::new();
    for (e, _) in &terms {
        if e.abs() > MAX_EXPONENT {
            return Err(invalid(format!("exponent {e} exceeds the limit {MAX_EXPONENT}")));
        }
        if !seen.insert(*e) {
            return Err(invalid(format!("exponent {e} repeated in one entry")));
        }
    }
    Ok(LaurentPoly::from_terms(terms))
}

pub fn parse_laurent_matrix(text: &str) -> Result<LaurentMatrix> {
    let f: LaurentFile = serde_json::from_str(text)?;
    check_dim("size", f.size, MAX_LAURENT_SIZE)?;
    if f.entries.len() != f.size || f.entries.iter().any(|r| r.len() != f.size) {
        return Err(invalid(format!("entries do not form a {0}x{0} array", f.size)));
    }
    let rows = f
        .entries
        .into_iter()
        .map(|row| row.into_iter().map(laurent_entry).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    if f.size == 0 {
        return Ok(LaurentMatrix::zeros(0, 0));
    }
    LaurentMatrix::from_rows(rows).map_err(|e| invalid(e.to_string()))
}

pub fn laurent_poly_to_json(p: &LaurentPoly) -> Value {
    Value::Array(p.terms().map(|(e, c)| json!([e, c.to_string()])).collect())
}

/// Square or rectangular; rectangular matrices carry `rows`/`cols` instead
/// of `size`.
pub fn laurent_matrix_to_json(m: &LaurentMatrix) -> Value {
    let entries: Vec<Vec<Value>> =
        m.to_rows().iter().map(|r| r.iter().map(laurent_poly_to_json).collect()).collect();
    if m.is_square() {
        json!({ "size": m.rows(), "entries": entries })
    } else {
        json!({ "rows": m.rows(), "cols": m.cols(), "entries": entries })
    }
}

/// Generators of a Lie algebra acting on `Q^ambient_dim`.
pub fn parse_lie_generators(text: &str) -> Result<(usize, Vec<QMatrix>)> {
    let f: LieFile = serde_json::from_str(text)?;
    check_dim("ambient_dim", f.ambient_dim, MAX_DIM)?;
    check_dim("generator count", f.generators.len(), MAX_DIM * MAX_DIM)?;
    let gens = f.generators.into_iter().map(matrix_from_file).collect::<Result<Vec<_>>>()?;
    if let Some(g) = gens.iter().find(|g| g.rows() != f.ambient_dim || g.cols() != f.ambient_dim) {
        return Err(invalid(format!(
            "generator is {}x{}, expected {1}x{1}",
            g.rows(),
            f.ambient_dim
        )));
    }
    Ok((f.ambient_dim, gens))
}

pub fn lie_generators_to_json(ambient_dim: usize, gens: &[QMatrix]) -> Value {
    json!({ "ambient_dim": ambient_dim, "generators": gens.iter().map(matrix_to_json).collect::<Vec<_>>() })
}

fn spaces(ambient_dim: usize, raw: Vec<Vec<Vec<Rat>>>) -> Result<Vec<Subspace>> {
    raw.into_iter()
        .map(|vectors| {
            if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
                return Err(invalid(format!("vector of length {}, expected {ambient_dim}", v.len())));
            }
            Subspace::span(ambient_dim, &vectors).map_err(|e| invalid(e.to_string()))
        })
        .collect()
}

/// An ascending flag and a descending flag, each space given by spanning
/// vectors.
pub fn parse_flag_pair(text: &str) -> Result<(Flag, Flag)> {
    let f: FlagPairFile = serde_json::from_str(text)?;
    check_dim("ambient_dim", f.ambient_dim, MAX_DIM)?;
    for list in [&f.ascending, &f.descending] {
        check_dim("flag length", list.len(), MAX_DIM)?;
        for vs in list {
            check_dim("spanning set size", vs.len(), MAX_DIM)?;
        }
    }
    let u = Flag::ascending(spaces(f.ambient_dim, f.ascending)?).map_err(|e| invalid(e.to_string()))?;
    let v = Flag::descending(spaces(f.ambient_dim, f.descending)?).map_err(|e| invalid(e.to_string()))?;
    Ok((u, v))
}

pub fn flag_pair_to_json(ambient_dim: usize, u: &Flag, v: &Flag) -> Value {
    let raw = |f: &Flag| -> Vec<Vec<Value>> {
        f.spaces().iter().map(|s| s.basis_vectors().iter().map(|b| vector_to_json(b)).collect()).collect()
    };
    json!({ "ambient_dim": ambient_dim, "ascending": raw(u), "descending": raw(v) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::unit_vector;
    use crate::rat::{frac, int};

    #[test]
    fn matrix_round_trip() {
        let m = QMatrix::from_rows(vec![vec![frac(1, 2), int(-3)], vec![int(0), frac(-7, 3)]]).unwrap();
        let text = matrix_to_json(&m).to_string();
        assert_eq!(parse_matrix(&text).unwrap(), m);
        let ints = r#"{"rows": 1, "cols": 2, "entries": [[1, "2/4"]]}"#;
        assert_eq!(parse_matrix(ints).unwrap(), QMatrix::from_rows(vec![vec![int(1), frac(1, 2)]]).unwrap());
    }

    #[test]
    fn matrix_rejections() {
        for bad in [
            r#"{"rows": 2, "cols": 1, "entries": [["1"]]}"#,
            r#"{"rows": 1, "cols": 1, "entries": [["1/0"]]}"#,
            r#"{"rows": 1, "cols": 1, "entries": [["x"]]}"#,
            r#"{"rows": 1, "cols": 1, "entries": [["1"]], "extra": 0}"#,
            r#"{"rows": 100000, "cols": 1, "entries": []}"#,
            r#"[1, 2]"#,
            "",
        ] {
            assert!(parse_matrix(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn laurent_round_trip() {
        let text = r#"{"size": 2, "entries": [[[[1, "1"]], [[0, "1"]]], [[], [[-1, "1"], [3, "-2/3"]]]]}"#;
        let m = parse_laurent_matrix(text).unwrap();
        assert_eq!(m[(1, 1)], LaurentPoly::from_terms([(-1, int(1)), (3, frac(-2, 3))]));
        let again = parse_laurent_matrix(&laurent_matrix_to_json(&m).to_string()).unwrap();
        assert_eq!(again, m);
    }

    #[test]
    fn laurent_rejections() {
        for bad in [
            r#"{"size": 1, "entries": [[[[1, "1"], [1, "2"]]]]}"#,
            r#"{"size": 1, "entries": [[[[5000, "1"]]]]}"#,
            r#"{"size": 2, "entries": [[[]]]}"#,
            r#"{"size": 1, "entries": [[[[1]]]]}"#,
        ] {
            assert!(parse_laurent_matrix(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn lie_and_flags_round_trip() {
        let gens = vec![QMatrix::from_ints(&[[0, 1], [0, 0]]), QMatrix::from_ints(&[[0, 0], [1, 0]])];
        let text = lie_generators_to_json(2, &gens).to_string();
        assert_eq!(parse_lie_generators(&text).unwrap(), (2, gens));
        let wrong = r#"{"ambient_dim": 3, "generators": [{"rows": 1, "cols": 1, "entries": [["1"]]}]}"#;
        assert!(parse_lie_generators(wrong).is_err());

        let text = r#"{"ambient_dim": 3, "ascending": [[[1,0,0]], [[1,0,0],[0,1,0]]],
                       "descending": [[[0,1,0],[0,0,1]], [[0,0,1]]]}"#;
        let (u, v) = parse_flag_pair(text).unwrap();
        assert_eq!(u.spaces()[0], Subspace::span(3, &[unit_vector(3, 0)]).unwrap());
        let again = parse_flag_pair(&flag_pair_to_json(3, &u, &v).to_string()).unwrap();
        assert_eq!(again, (u, v));
        let not_flag = r#"{"ambient_dim": 2, "ascending": [[[1,0]], [[2,0]]], "descending": []}"#;
        assert!(parse_flag_pair(not_flag).is_err());
    }

    #[test]
    fn vectors() {
        assert_eq!(parse_vector("1, -1/2,0").unwrap(), vec![int(1), frac(-1, 2), int(0)]);
        assert_eq!(parse_vector(r#"["3", 4]"#).unwrap(), vec![int(3), int(4)]);
        assert!(parse_vector("1,,2").is_err());
    }
}
