use std::fs::File;
use std::io::Read;
use std::path::Path;

use nilsplit::bundle::{
    birkhoff_factorize, cokernel_splitting, h0_twisted, splitting_type, validate_transition, veronese_inclusion,
    SplittingType,
};
use nilsplit::format::{
    flag_pair_to_json, laurent_matrix_to_json, lie_generators_to_json, matrix_to_json, parse_flag_pair,
    parse_laurent_matrix, parse_lie_generators, parse_matrix, parse_vector, subspace_to_json, vector_to_json,
    FormatError,
};
use nilsplit::laurent::LaurentMatrix;
use nilsplit::lie::{
    centralizer_dimension, commutant_dimension, find_nilpotent, lie_closure, linear_field_zeros, structure_report,
    CommutantVerdict,
};
use nilsplit::nilpotent::{
    check_complementary_flags, flag_refinement, jordan_basis, kernel_flag, nilpotency_degree, nilpotent_profile,
    orbit_curve,
};
use nilsplit::sl2::{
    clebsch_gordan, identify_twisted_irrep, jacobson_morozov, sl2_flags_and_projection, twisted_irrep_weights,
    veronese_weights, weight_multiset, WeightMultiset,
};
use nilsplit::subspace::kernel_basis;
use nilsplit::{Check, QMatrix, Rat, Subspace};
use serde_json::{json, Value};
use thiserror::Error;

use crate::report::Report;

/// Input files larger than this are rejected before parsing.
pub const MAX_INPUT_BYTES: u64 = 8 << 20;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: larger than {MAX_INPUT_BYTES} bytes")]
    TooLarge { path: String },
    #[error("{0}")]
    Format(#[from] FormatError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] nilsplit::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            _ => 2,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub fn read_input(path: &Path) -> Result<String> {
    let shown = path.display().to_string();
    let io = |source| CliError::Io { path: shown.clone(), source };
    let mut text = String::new();
    File::open(path).map_err(io)?.take(MAX_INPUT_BYTES + 1).read_to_string(&mut text).map_err(io)?;
    if text.len() as u64 > MAX_INPUT_BYTES {
        return Err(CliError::TooLarge { path: shown });
    }
    Ok(text)
}

fn read_matrix(path: &Path) -> Result<QMatrix> {
    Ok(parse_matrix(&read_input(path)?)?)
}

fn read_transition(path: &Path) -> Result<LaurentMatrix> {
    Ok(parse_laurent_matrix(&read_input(path)?)?)
}

fn splitting_json(s: &SplittingType) -> Value {
    json!({ "exponents": s.exponents(), "rank": s.rank(), "degree": s.degree() })
}

fn matrices_json(ms: &[QMatrix]) -> Value {
    Value::Array(ms.iter().map(matrix_to_json).collect())
}

pub fn splitting_type_cmd(input: &Path) -> Result<Report> {
    let t = read_transition(input)?;
    let (c, d) = validate_transition(&t)?;
    let s = splitting_type(&t)?;
    let result = json!({
        "splitting": splitting_json(&s),
        "determinant": { "coefficient": c.to_string(), "exponent": d },
    });
    let checks = vec![Check::new("degree equals determinant exponent", s.degree() == d)];
    Ok(Report::new("splitting-type", json!({ "transition": laurent_matrix_to_json(&t) }), result, checks))
}

pub fn birkhoff_cmd(input: &Path) -> Result<Report> {
    let t = read_transition(input)?;
    let f = birkhoff_factorize(&t)?;
    let mut checks = f.checks(&t);
    checks.push(Check::new("splitting matches section counts", splitting_type(&t)? == f.splitting));
    let result = json!({
        "t_plus": laurent_matrix_to_json(&f.t_plus),
        "splitting": splitting_json(&f.splitting),
        "t_minus": laurent_matrix_to_json(&f.t_minus),
    });
    Ok(Report::new("birkhoff-factorize", json!({ "transition": laurent_matrix_to_json(&t) }), result, checks))
}

pub fn h0_cmd(input: &Path, n: i64) -> Result<Report> {
    let t = read_transition(input)?;
    let h = h0_twisted(&t, n)?;
    let checks = vec![Check::new("agrees with splitting type", splitting_type(&t)?.h0(n) == h)];
    let inputs = json!({ "transition": laurent_matrix_to_json(&t), "n": n });
    Ok(Report::new("h0", inputs, json!({ "twist": n, "h0": h }), checks))
}

pub fn nilpotent_cmd(input: &Path) -> Result<Report> {
    let a = read_matrix(input)?;
    let profile = nilpotent_profile(&a)?;
    let chains = jordan_basis(&a)?;
    let n = a.rows();
    let all: Vec<Vec<Rat>> = chains.iter().flatten().cloned().collect();
    let ends_in_kernel = chains.iter().all(|c| a.mul_vec(c.last().expect("chains are non-empty")).iter().all(Rat::is_zero));
    let checks = vec![
        Check::new("partition sums to dimension", profile.partition.iter().sum::<usize>() == n),
        Check::new("chain lengths match partition", chains.iter().map(Vec::len).eq(profile.partition.iter().copied())),
        Check::new("chains end in the kernel", ends_in_kernel),
        Check::new("chains form a basis", all.len() == n && Subspace::span(n, &all)?.is_full()),
    ];
    let k = profile.degree.saturating_sub(1);
    let kernels: Vec<Value> = kernel_flag(&a, k)?.spaces().iter().map(subspace_to_json).collect();
    let result = json!({
        "profile": profile,
        "jordan_chains": chains.iter().map(|c| c.iter().map(|v| vector_to_json(v)).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "kernel_flag": kernels,
    });
    Ok(Report::new("nilpotent-analyze", json!({ "matrix": matrix_to_json(&a) }), result, checks))
}

pub fn orbit_cmd(input: &Path, vector: &str) -> Result<Report> {
    let a = read_matrix(input)?;
    let u = parse_vector(vector)?;
    let curve = orbit_curve(&a, &u)?;
    let n = a.rows();
    let last = curve.coefficient_vectors.last().expect("at least u itself");
    let checks = vec![
        Check::new("A annihilates the last coefficient", a.mul_vec(last).iter().all(Rat::is_zero)),
        Check::new(
            "coefficients independent",
            Subspace::span(n, &curve.coefficient_vectors)?.dim() == curve.degree + 1,
        ),
    ];
    let inputs = json!({ "matrix": matrix_to_json(&a), "vector": vector_to_json(&u) });
    Ok(Report::new("orbit-curve", inputs, serde_json::to_value(&curve).expect("serializable"), checks))
}

pub fn flags_cmd(input: &Path) -> Result<Report> {
    let (u, v) = parse_flag_pair(&read_input(input)?)?;
    let ambient = u.ambient_dim().or(v.ambient_dim()).unwrap_or(0);
    let inputs = flag_pair_to_json(ambient, &u, &v);
    if !check_complementary_flags(&u, &v)? {
        let index = match flag_refinement(&u, &v) {
            Err(nilsplit::Error::NotComplementary { index }) => index,
            other => unreachable!("flags already known not complementary: {other:?}"),
        };
        let result = json!({ "complementary": false, "first_failure": index });
        return Ok(Report::new("flags-check", inputs, result, Vec::new()));
    }
    let pieces = flag_refinement(&u, &v)?;
    let us = u.spaces();
    let mut rebuilt = true;
    for (j, d) in pieces.iter().enumerate() {
        rebuilt &= us[j + 1].is_direct_sum_of(&us[j], d)?;
    }
    let result = json!({
        "complementary": true,
        "refinement": pieces.iter().map(subspace_to_json).collect::<Vec<_>>(),
    });
    Ok(Report::new("flags-check", inputs, result, vec![Check::new("refinement rebuilds the ascending flag", rebuilt)]))
}

pub fn sl2_complete_cmd(input: &Path) -> Result<Report> {
    let a = read_matrix(input)?;
    let t = jacobson_morozov(&a)?;
    let k = nilpotency_degree(&a)?.saturating_sub(1);
    let weights = weight_multiset(t.neutral())?;
    let checks = vec![
        Check::new("raising element is the input", t.raising() == &a),
        Check::new("bracket relations", t.satisfies_relations()),
        Check::new("power bracket identities", t.power_identities_hold(k)),
    ];
    let result = json!({
        "raising": matrix_to_json(t.raising()),
        "neutral": matrix_to_json(t.neutral()),
        "lowering": matrix_to_json(t.lowering()),
        "weights": weights,
        "irreducibles": weights.peel_irreducibles(),
    });
    Ok(Report::new("sl2-complete", json!({ "matrix": matrix_to_json(&a) }), result, checks))
}

pub fn sl2_projection_cmd(input: &Path, lowering: &Path) -> Result<Report> {
    let a = read_matrix(input)?;
    let b = read_matrix(lowering)?;
    let p = sl2_flags_and_projection(&a, &b)?;
    let result = json!({
        "scale": p.scale.to_string(),
        "k": p.k,
        "flags": flag_pair_to_json(a.rows(), &p.u_flag, &p.v_flag),
        "projection": matrix_to_json(&p.projection),
        "normalization": p.normalization.to_string(),
        "zero_locus_off_kernel": subspace_to_json(&p.zero_locus_off_kernel()?),
    });
    let inputs = json!({ "raising": matrix_to_json(&a), "lowering": matrix_to_json(&b) });
    Ok(Report::new("sl2-projection", inputs, result, p.checks()))
}

pub fn clebsch_cmd(m: usize, n: usize) -> Result<Report> {
    let labels = clebsch_gordan(m, n);
    let (wm, wn) = (twisted_irrep_weights(m, 0)?, twisted_irrep_weights(n, 0)?);
    let product = WeightMultiset::from_weights(
        wm.to_list().into_iter().flat_map(|a| wn.to_list().into_iter().map(move |b| a + b)),
    );
    let summed = WeightMultiset::from_weights(
        labels.iter().flat_map(|&l| twisted_irrep_weights(l, 0).expect("l is a valid label").to_list()),
    );
    let checks = vec![
        Check::new("dimensions add up", labels.iter().map(|l| l + 1).sum::<usize>() == (m + 1) * (n + 1)),
        Check::new("weights of the product match", product == summed),
    ];
    Ok(Report::new("clebsch-gordan", json!({ "m": m, "n": n }), json!({ "irreducibles": labels }), checks))
}

pub fn identify_cmd(weights: Option<&str>, input: Option<&Path>) -> Result<Report> {
    let (inputs, w) = match (weights, input) {
        (Some(text), None) => {
            let list = text
                .split(',')
                .map(|s| s.trim().parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| CliError::Usage(format!("bad weight list {text:?}: {e}")))?;
            (json!({ "weights": list }), WeightMultiset::from_weights(list))
        }
        (None, Some(path)) => {
            let h = read_matrix(path)?;
            let w = weight_multiset(&h)?;
            (json!({ "matrix": matrix_to_json(&h) }), w)
        }
        _ => return Err(CliError::Usage("give exactly one of --weights or --input".into())),
    };
    let id = identify_twisted_irrep(&w);
    let mut checks = Vec::new();
    if let Some((m, n)) = id {
        let regenerated = twisted_irrep_weights(n as usize, m)?;
        checks.push(Check::new("weights regenerate", regenerated == w));
    }
    let result = json!({
        "weights": w,
        "identification": id.map(|(m, n)| json!({ "m": m, "n": n })),
        "untwisted_irreducibles": w.peel_irreducibles(),
    });
    Ok(Report::new("identify-irrep", inputs, result, checks))
}

pub fn veronese_cmd(n: i64) -> Result<Report> {
    let w = veronese_weights(n)?;
    let inclusion = veronese_inclusion(n)?;
    let splitting = cokernel_splitting(n)?;
    let (m, np) = w.identification;
    let mut checks = inclusion.checks();
    checks.push(Check::new(
        "weight and cokernel routes agree",
        splitting.exponents().len() as i64 == np + 1 && splitting.exponents().iter().all(|&a| a == m),
    ));
    let result = json!({
        "quotient_weights": w.quotient.to_list(),
        "identification": [m, np],
        "cokernel_splitting": splitting.exponents(),
        "ambient_weights": w.ambient.to_list(),
        "sub_weights": w.sub.to_list(),
    });
    Ok(Report::new("veronese-normal", json!({ "n": n }), result, checks))
}

fn verdict_json(v: &CommutantVerdict) -> Value {
    match v {
        CommutantVerdict::Irreducible => json!({ "kind": "Irreducible" }),
        CommutantVerdict::ScalarCommutant => json!({ "kind": "ScalarCommutant" }),
        CommutantVerdict::Reducible { witness } => {
            json!({ "kind": "Reducible", "witness": subspace_to_json(witness) })
        }
        CommutantVerdict::InconclusiveOverQ => json!({ "kind": "InconclusiveOverQ" }),
    }
}

pub fn lie_cmd(input: &Path, seed: u64) -> Result<Report> {
    let (ambient, gens) = parse_lie_generators(&read_input(input)?)?;
    let closure = lie_closure(ambient, &gens)?;
    let l = &closure.basis;
    let s = structure_report(l);
    let commutant = commutant_dimension(l);
    let nilpotent = find_nilpotent(l, seed);
    let d = l.dim();
    let b = l.generators();
    let closed = (0..d).all(|i| (i + 1..d).all(|j| l.coordinates(&(&(&b[i] * &b[j]) - &(&b[j] * &b[i]))).is_ok()));
    let mut checks = vec![
        Check::new("basis closed under brackets", closed),
        Check::new("Killing form symmetric", s.killing_gram.transpose() == s.killing_gram),
    ];
    let mut nilpotent_json = Value::Null;
    if let Some(x) = &nilpotent {
        checks.push(Check::new("nilpotent element in the algebra", l.coordinates(x).is_ok()));
        checks.push(Check::new("nilpotent element is nilpotent", !x.is_zero() && x.pow(ambient).is_zero()));
        nilpotent_json = json!({
            "matrix": matrix_to_json(x),
            "centralizer_dim": centralizer_dimension(l, x)?,
        });
    }
    let result = json!({
        "dim": d,
        "already_closed": closure.already_closed,
        "basis": matrices_json(b),
        "is_abelian": s.is_abelian,
        "derived_dim": s.derived.dim(),
        "center_dim": s.center_dim,
        "killing_gram": matrix_to_json(&s.killing_gram),
        "killing_nondegenerate": s.is_killing_nondegenerate,
        "commutant": { "dim": commutant.dim, "verdict": verdict_json(&commutant.verdict) },
        "nilpotent": nilpotent_json,
    });
    let inputs = json!({ "algebra": lie_generators_to_json(ambient, &gens), "seed": seed });
    Ok(Report::new("lie-analyze", inputs, result, checks))
}

pub fn field_zeros_cmd(input: &Path) -> Result<Report> {
    let a = read_matrix(input)?;
    let zeros = linear_field_zeros(&a)?;
    let n = a.rows();
    let annihilated = zeros
        .iter()
        .all(|e| kernel_basis(&(&a - &QMatrix::scalar(n, &e.eigenvalue))) == e.space);
    let total: usize = zeros.iter().map(|e| e.space.dim()).sum();
    let checks = vec![
        Check::new("eigenspaces are kernels of A - lambda", annihilated),
        Check::new("eigenspace dimensions bounded", total <= n),
    ];
    let result = json!({
        "eigenspaces": zeros
            .iter()
            .map(|e| json!({ "eigenvalue": e.eigenvalue.to_string(), "space": subspace_to_json(&e.space) }))
            .collect::<Vec<_>>(),
        "diagonalizable": total == n,
    });
    Ok(Report::new("field-zeros", json!({ "matrix": matrix_to_json(&a) }), result, checks))
}
