//! Chebyshev-type rearrangement laws: operator/Frobenius/trace comparisons
//! for monotone pairs, the sequence and nonnegative-matrix forms, projection
//! singular value dominance, determinantal compressions, and the Gruss-type
//! trace estimates.

use nalgebra::DMatrix;

use crate::constants::gruss_bound;
use crate::la::{singular_values, ComplexMatrix, Frame, C64};
use crate::laws::support::*;
use crate::laws::{ComparedPair, ComparisonMode, LawDefinition, LawError, LawInstance, Provenance, RoleSpec};
use crate::norms::{frobenius_norm, operator_norm};
use crate::rng::Stream;
use crate::structure::{rc_ratio, sort_rearrange, Orientation, SortDirection, SumSymmetricMatrix};

fn provenance(law: &str, dim: usize, seed: u64) -> Provenance {
    Provenance::Generated {
        law: law.to_string(),
        dim,
        seed,
    }
}

fn gen_general(rng: &mut Stream, dim: usize) -> ComplexMatrix {
    let m = DMatrix::from_fn(dim, dim, |_, _| C64::new(rng.normal(), rng.normal()));
    ComplexMatrix::new(m).expect("finite by construction")
}

/// Real entries of a matrix role carrying a real payload.
fn real_entries(inst: &LawInstance, role: &str) -> Result<DMatrix<f64>, LawError> {
    let m = inst.mat(role)?;
    let mut out = DMatrix::zeros(m.dim(), m.dim());
    for i in 0..m.dim() {
        for j in 0..m.dim() {
            let z = m.dm()[(i, j)];
            if z.im.abs() > IMAG_TOL * z.norm().max(1.0) {
                return Err(LawError::Numerics(format!(
                    "{role} must have real entries, found imaginary part {:.3e}",
                    z.im
                )));
            }
            out[(i, j)] = z.re;
        }
    }
    Ok(out)
}

fn real_nonneg_entries(inst: &LawInstance, role: &str) -> Result<DMatrix<f64>, String> {
    let x = real_entries(inst, role).map_err(|e| e.to_string())?;
    if let Some(v) = x.iter().find(|v| **v < 0.0) {
        return Err(format!("{role} must be entrywise nonnegative, got {v}"));
    }
    Ok(x)
}

/// Entrywise product a.b followed by X, summed: Σ X(a.b).
fn sum_of_image(x: &DMatrix<f64>, v: &[f64]) -> f64 {
    let n = x.nrows();
    let mut total = 0.0;
    for l in 0..n {
        let mut row = 0.0;
        for m in 0..n {
            row += x[(l, m)] * v[m];
        }
        total += row;
    }
    total
}

/// Σ a.X(b): weights a against the image X b.
fn weighted_image(x: &DMatrix<f64>, a: &[f64], b: &[f64]) -> f64 {
    let n = x.nrows();
    let mut total = 0.0;
    for i in 0..n {
        let mut row = 0.0;
        for j in 0..n {
            row += x[(i, j)] * b[j];
        }
        total += a[i] * row;
    }
    total
}

// --- ‖AB‖∞ ≤ ‖BA‖∞ for normal products -----------------------------------

fn opnorm_normal_hyp(inst: &LawInstance) -> Result<(), String> {
    product_normal(inst, "A", "B")
}

fn opnorm_normal_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let a = inst.mat("A")?;
    let b = inst.mat("B")?;
    Ok(vec![ComparedPair::new(
        "opnorm",
        operator_norm(&(a * b)),
        operator_norm(&(b * a)),
    )])
}

/// A invertible and well conditioned, B = A⁻¹N for a random normal N, so the
/// product AB is normal by construction.
fn gen_normal_product(law: &str, dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let a = gen_invertible(&mut rng, dim);
    let n = gen_normal_with(&mut rng, dim, 1.5);
    let b = ComplexMatrix::new(invert(&a).dm() * n.dm()).expect("finite");
    LawInstance::new(law)
        .with_matrix("A", a)
        .with_matrix("B", b)
        .with_provenance(provenance(law, dim, seed))
}

pub(super) const OPNORM_NORMAL: LawDefinition = LawDefinition {
    id: "L-OPNORM-NORMAL",
    mode: ComparisonMode::Scalar,
    summary: "operator norm rearrangement: ‖AB‖∞ ≤ ‖BA‖∞ when AB is normal",
    roles: RoleSpec {
        matrices: &["A", "B"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: opnorm_normal_hyp,
    evaluate: opnorm_normal_eval,
    generate: opnorm_normal_gen,
    bound: None,
};

fn opnorm_normal_gen(dim: usize, seed: u64) -> LawInstance {
    gen_normal_product("L-OPNORM-NORMAL", dim, seed)
}

// --- vector Chebyshev: ‖Ah‖‖Bh‖ vs ‖ABh‖ and the form product --------------

fn cheb_vec_hyp(inst: &LawInstance) -> Result<(), String> {
    psd_role(inst, "A")?;
    psd_role(inst, "B")?;
    oriented_pair(inst, "A", "B")?;
    unit_role(inst, "h")?;
    Ok(())
}

fn cheb_vec_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let orientation = inst.orientation_required()?;
    let a = inst.mat("A")?;
    let b = inst.mat("B")?;
    let h = inst.cvec("h")?;
    let ah = a.dm() * h;
    let bh = b.dm() * h;
    let abh = a.dm() * &bh;
    let qa = real_part(h.dotc(&ah), "⟨h,Ah⟩")?;
    let qb = real_part(h.dotc(&bh), "⟨h,Bh⟩")?;
    let qab = real_part(h.dotc(&abh), "⟨h,ABh⟩")?;
    Ok(vec![
        oriented(orientation, "norm-product", ah.norm() * bh.norm(), abh.norm()),
        oriented(orientation, "form-product", qa * qb, qab),
    ])
}

fn cheb_vec_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let orientation = orientation_from(&mut rng);
    let (a, b) = gen_pair_matrices(&mut rng, dim, 0.0, 2.0, orientation);
    let h = gen_unit(&mut rng, dim);
    LawInstance::new("L-CHEB-VEC")
        .with_matrix("A", a)
        .with_matrix("B", b)
        .with_vector("h", h)
        .with_orientation(orientation)
        .with_provenance(provenance("L-CHEB-VEC", dim, seed))
}

pub(super) const CHEB_VEC: LawDefinition = LawDefinition {
    id: "L-CHEB-VEC",
    mode: ComparisonMode::Scalar,
    summary: "vector Chebyshev: ‖Ah‖‖Bh‖ ≤ ‖ABh‖ and ⟨h,Ah⟩⟨h,Bh⟩ ≤ ⟨h,ABh⟩ for monotone PSD pairs (reversed when antimonotone)",
    roles: RoleSpec {
        matrices: &["A", "B"],
        vectors: &["h"],
        needs_orientation: true,
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: cheb_vec_hyp,
    evaluate: cheb_vec_eval,
    generate: cheb_vec_gen,
    bound: None,
};

// --- Frobenius Chebyshev: ‖AZB‖₂ vs ‖ZAB‖₂ --------------------------------

fn frob_cheb_hyp(inst: &LawInstance) -> Result<(), String> {
    psd_role(inst, "A")?;
    psd_role(inst, "B")?;
    oriented_pair(inst, "A", "B")?;
    normal_role(inst, "Z")?;
    Ok(())
}

fn frob_cheb_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let orientation = inst.orientation_required()?;
    let a = inst.mat("A")?;
    let b = inst.mat("B")?;
    let z = inst.mat("Z")?;
    let azb = ComplexMatrix::new(a.dm() * z.dm() * b.dm()).expect("finite");
    let zab = ComplexMatrix::new(z.dm() * a.dm() * b.dm()).expect("finite");
    Ok(vec![oriented(
        orientation,
        "frobenius",
        frobenius_norm(&azb),
        frobenius_norm(&zab),
    )])
}

fn frob_cheb_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let orientation = orientation_from(&mut rng);
    let (a, b) = gen_pair_matrices(&mut rng, dim, 0.0, 2.0, orientation);
    let z = gen_normal_with(&mut rng, dim, 1.5);
    LawInstance::new("L-FROB-CHEB")
        .with_matrix("A", a)
        .with_matrix("B", b)
        .with_matrix("Z", z)
        .with_orientation(orientation)
        .with_provenance(provenance("L-FROB-CHEB", dim, seed))
}

pub(super) const FROB_CHEB: LawDefinition = LawDefinition {
    id: "L-FROB-CHEB",
    mode: ComparisonMode::Scalar,
    summary: "Frobenius Chebyshev: ‖AZB‖₂ ≤ ‖ZAB‖₂ for monotone PSD pairs and normal Z (reversed when antimonotone)",
    roles: RoleSpec {
        matrices: &["A", "B", "Z"],
        needs_orientation: true,
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: frob_cheb_hyp,
    evaluate: frob_cheb_eval,
    generate: frob_cheb_gen,
    bound: None,
};

// --- trace Chebyshev: Tr Z*AZB vs Tr Z*ZAB ---------------------------------

fn trace_cheb_hyp(inst: &LawInstance) -> Result<(), String> {
    hermitian_role(inst, "A")?;
    hermitian_role(inst, "B")?;
    oriented_pair(inst, "A", "B")?;
    normal_role(inst, "Z")?;
    Ok(())
}

fn trace_cheb_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let orientation = inst.orientation_required()?;
    let a = inst.mat("A")?.dm();
    let b = inst.mat("B")?.dm();
    let z = inst.mat("Z")?.dm();
    let zs = z.adjoint();
    let lhs = real_part((&zs * a * z * b).trace(), "Tr Z*AZB")?;
    let rhs = real_part((&zs * z * a * b).trace(), "Tr Z*ZAB")?;
    Ok(vec![oriented(orientation, "trace", lhs, rhs)])
}

fn trace_cheb_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let orientation = orientation_from(&mut rng);
    let (a, b) = gen_pair_matrices(&mut rng, dim, -2.0, 2.0, orientation);
    let z = gen_normal_with(&mut rng, dim, 1.5);
    LawInstance::new("L-TRACE-CHEB")
        .with_matrix("A", a)
        .with_matrix("B", b)
        .with_matrix("Z", z)
        .with_orientation(orientation)
        .with_provenance(provenance("L-TRACE-CHEB", dim, seed))
}

pub(super) const TRACE_CHEB: LawDefinition = LawDefinition {
    id: "L-TRACE-CHEB",
    mode: ComparisonMode::Scalar,
    summary: "trace Chebyshev: Tr Z*AZB ≤ Tr Z*ZAB for monotone Hermitian pairs and normal Z (reversed when antimonotone)",
    roles: RoleSpec {
        matrices: &["A", "B", "Z"],
        needs_orientation: true,
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: trace_cheb_hyp,
    evaluate: trace_cheb_eval,
    generate: trace_cheb_gen,
    bound: None,
};

// --- trace pairing bound: |Tr XY| ≤ Σ μ_j(X) μ_j(Y) ------------------------

fn vonneumann_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let x = inst.mat("X")?;
    let y = inst.mat("Y")?;
    let lhs = (x.dm() * y.dm()).trace().norm();
    let mx = singular_values(x);
    let my = singular_values(y);
    let rhs: f64 = mx
        .values()
        .iter()
        .zip(my.values().iter())
        .map(|(a, b)| a * b)
        .sum();
    Ok(vec![ComparedPair::new("trace-pairing", lhs, rhs)])
}

fn vonneumann_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let x = gen_general(&mut rng, dim);
    let y = gen_general(&mut rng, dim);
    LawInstance::new("L-VONNEUMANN")
        .with_matrix("X", x)
        .with_matrix("Y", y)
        .with_provenance(provenance("L-VONNEUMANN", dim, seed))
}

pub(super) const VONNEUMANN: LawDefinition = LawDefinition {
    id: "L-VONNEUMANN",
    mode: ComparisonMode::Scalar,
    summary: "trace pairing bound: |Tr XY| ≤ Σ μ_j(X)μ_j(Y)",
    roles: RoleSpec {
        matrices: &["X", "Y"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: |_| Ok(()),
    evaluate: vonneumann_eval,
    generate: vonneumann_gen,
    bound: None,
};

// --- Hardy-Littlewood-Polya two-sided rearrangement ------------------------

fn hlp_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let a = inst.seq("a")?;
    let b = inst.seq("b")?;
    let au = sort_rearrange(a, SortDirection::Up);
    let bu = sort_rearrange(b, SortDirection::Up);
    let bd = sort_rearrange(b, SortDirection::Down);
    let middle = canonical_dot(a, b);
    Ok(vec![
        ComparedPair::new("lower", canonical_dot(&au, &bd), middle),
        ComparedPair::new("upper", middle, canonical_dot(&au, &bu)),
    ])
}

fn hlp_gen(len: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let a: Vec<f64> = (0..len).map(|_| rng.uniform(-2.0, 3.0)).collect();
    let b: Vec<f64> = (0..len).map(|_| rng.uniform(-2.0, 3.0)).collect();
    LawInstance::new("L-HLP")
        .with_sequence("a", a)
        .with_sequence("b", b)
        .with_provenance(provenance("L-HLP", len, seed))
}

pub(super) const HLP: LawDefinition = LawDefinition {
    id: "L-HLP",
    mode: ComparisonMode::Scalar,
    summary: "rearrangement bounds: Σ a↑b↓ ≤ Σ ab ≤ Σ a↑b↑ for real sequences",
    roles: RoleSpec {
        sequences: &["a", "b"],
        ..RoleSpec::NONE
    },
    dims: (2, 24),
    sequence_law: true,
    hypothesis: |_| Ok(()),
    evaluate: hlp_eval,
    generate: hlp_gen,
    bound: None,
};

// --- row-column ratio bound: Σ a.X(b) ≤ rc(X) Σ X(a.b) ---------------------

fn rc_hyp(inst: &LawInstance) -> Result<(), String> {
    real_nonneg_entries(inst, "X")?;
    sequence_pair(inst, "a", "b", Orientation::Monotone, true)
}

fn rc_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let x = real_entries(inst, "X")?;
    let a = inst.seq("a")?;
    let b = inst.seq("b")?;
    if a.len() != x.nrows() {
        return Err(LawError::ShapeMismatch(format!(
            "sequence length {} does not match matrix dimension {}",
            a.len(),
            x.nrows()
        )));
    }
    let rc = rc_ratio(&x).map_err(|e| LawError::Numerics(e.to_string()))?;
    let lhs = weighted_image(&x, a, b);
    if rc.is_infinite() {
        // By the r → 0 limit convention an infinite ratio makes the right
        // side infinite, so the bound holds with infinite slack.
        return Ok(vec![ComparedPair::new("sum", lhs, f64::INFINITY)]);
    }
    let ab: Vec<f64> = a.iter().zip(b.iter()).map(|(x, y)| x * y).collect();
    let rhs = rc * sum_of_image(&x, &ab);
    Ok(vec![ComparedPair::new("sum", lhs, rhs)])
}

fn rc_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let mut entries = DMatrix::zeros(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            entries[(i, j)] = if rng.f64_01() < 0.12 {
                0.0
            } else {
                rng.uniform(0.05, 2.0)
            };
        }
    }
    let mut a: Vec<f64> = (0..dim).map(|_| rng.uniform(0.0, 2.5)).collect();
    let mut b: Vec<f64> = (0..dim).map(|_| rng.uniform(0.0, 2.5)).collect();
    a.sort_by(|x, y| x.partial_cmp(y).unwrap());
    b.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let x = ComplexMatrix::new(DMatrix::from_fn(dim, dim, |i, j| C64::new(entries[(i, j)], 0.0)))
        .expect("finite");
    LawInstance::new("L-RC")
        .with_matrix("X", x)
        .with_sequence("a", a)
        .with_sequence("b", b)
        .with_provenance(provenance("L-RC", dim, seed))
}

fn rc_bound(inst: &LawInstance) -> Result<f64, LawError> {
    let x = real_entries(inst, "X")?;
    rc_ratio(&x).map_err(|e| LawError::Numerics(e.to_string()))
}

pub(super) const RC: LawDefinition = LawDefinition {
    id: "L-RC",
    mode: ComparisonMode::Scalar,
    summary: "row-column ratio bound: Σ a·X(b) ≤ rc(X)·Σ X(a·b) for nonnegative X and monotone nonnegative (a, b)",
    roles: RoleSpec {
        matrices: &["X"],
        sequences: &["a", "b"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: rc_hyp,
    evaluate: rc_eval,
    generate: rc_gen,
    bound: Some(rc_bound),
};

// --- sum-symmetric matrices: Σ a.X(b) vs Σ X(a.b) --------------------------

fn sumsym_hyp(inst: &LawInstance) -> Result<(), String> {
    let orientation = inst.orientation.ok_or("missing pair orientation")?;
    let x = real_nonneg_entries(inst, "X")?;
    SumSymmetricMatrix::new(x).map_err(|e| format!("X is not sum-symmetric: {e}"))?;
    sequence_pair(inst, "a", "b", orientation, false)
}

fn sumsym_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let orientation = inst.orientation_required()?;
    let x = real_entries(inst, "X")?;
    let a = inst.seq("a")?;
    let b = inst.seq("b")?;
    if a.len() != x.nrows() {
        return Err(LawError::ShapeMismatch(format!(
            "sequence length {} does not match matrix dimension {}",
            a.len(),
            x.nrows()
        )));
    }
    let lhs = weighted_image(&x, a, b);
    let ab: Vec<f64> = a.iter().zip(b.iter()).map(|(x, y)| x * y).collect();
    let rhs = sum_of_image(&x, &ab);
    Ok(vec![oriented(orientation, "sum", lhs, rhs)])
}

fn sumsym_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let orientation = orientation_from(&mut rng);
    let z = gen_normal_with(&mut rng, dim, 1.2);
    let x = ComplexMatrix::new(DMatrix::from_fn(dim, dim, |i, j| {
        C64::new(z.dm()[(i, j)].norm_sqr(), 0.0)
    }))
    .expect("finite");
    let mut a: Vec<f64> = (0..dim).map(|_| rng.uniform(-2.0, 2.0)).collect();
    let mut b: Vec<f64> = (0..dim).map(|_| rng.uniform(-2.0, 2.0)).collect();
    a.sort_by(|x, y| x.partial_cmp(y).unwrap());
    match orientation {
        Orientation::Monotone => b.sort_by(|x, y| x.partial_cmp(y).unwrap()),
        Orientation::Antimonotone => b.sort_by(|x, y| y.partial_cmp(x).unwrap()),
    }
    LawInstance::new("L-SUMSYM")
        .with_matrix("X", x)
        .with_sequence("a", a)
        .with_sequence("b", b)
        .with_orientation(orientation)
        .with_provenance(provenance("L-SUMSYM", dim, seed))
}

pub(super) const SUMSYM: LawDefinition = LawDefinition {
    id: "L-SUMSYM",
    mode: ComparisonMode::Scalar,
    summary: "sum-symmetric comparison: Σ a·X(b) ≤ Σ X(a·b) for monotone (a, b) (reversed when antimonotone)",
    roles: RoleSpec {
        matrices: &["X"],
        sequences: &["a", "b"],
        needs_orientation: true,
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: sumsym_hyp,
    evaluate: sumsym_eval,
    generate: sumsym_gen,
    bound: None,
};

// --- projection singular value dominance: μ_j(AEB) ≤ μ_j(ABE) --------------

fn proj_sv_hyp(inst: &LawInstance) -> Result<(), String> {
    psd_role(inst, "A")?;
    psd_role(inst, "B")?;
    let a = hermitian_role(inst, "A")?;
    let b = hermitian_role(inst, "B")?;
    match crate::structure::recognize_monotone_pair(&a, &b) {
        Some(kind) if kind.admits(Orientation::Monotone) => {}
        _ => return Err("(A, B) is not a monotone pair".into()),
    }
    projection_role(inst, "E")?;
    Ok(())
}

fn proj_sv_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let a = inst.mat("A")?;
    let b = inst.mat("B")?;
    let e = inst.mat("E")?;
    let aeb = ComplexMatrix::new(a.dm() * e.dm() * b.dm()).expect("finite");
    let abe = ComplexMatrix::new(a.dm() * b.dm() * e.dm()).expect("finite");
    Ok(sv_pairs(&aeb, &abe, 1.0))
}

fn proj_sv_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let (a, b) = gen_pair_matrices(&mut rng, dim, 0.0, 2.0, Orientation::Monotone);
    let rank = 1 + rng.below(dim);
    let e = gen_projection_matrix(&mut rng, dim, rank);
    LawInstance::new("L-PROJ-SV")
        .with_matrix("A", a)
        .with_matrix("B", b)
        .with_matrix("E", e)
        .with_provenance(provenance("L-PROJ-SV", dim, seed))
}

pub(super) const PROJ_SV: LawDefinition = LawDefinition {
    id: "L-PROJ-SV",
    mode: ComparisonMode::PerSingularValue,
    summary: "projection dominance: μ_j(AEB) ≤ μ_j(ABE) for monotone PSD pairs and projections E",
    roles: RoleSpec {
        matrices: &["A", "B", "E"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: proj_sv_hyp,
    evaluate: proj_sv_eval,
    generate: proj_sv_gen,
    bound: None,
};

// --- determinantal Chebyshev on compressions -------------------------------

fn det_of_compression(m: &ComplexMatrix, frame: &Frame) -> Result<f64, LawError> {
    let c = crate::la::compression(m, frame).map_err(|e| LawError::Numerics(e.to_string()))?;
    real_part(c.dm().determinant(), "compressed determinant")
}

fn det_cheb_hyp(inst: &LawInstance) -> Result<(), String> {
    pd_role(inst, "A")?;
    pd_role(inst, "B")?;
    let a = hermitian_role(inst, "A")?;
    let b = hermitian_role(inst, "B")?;
    match crate::structure::recognize_monotone_pair(&a, &b) {
        Some(kind) if kind.admits(Orientation::Monotone) => {}
        _ => return Err("(A, B) is not a monotone pair".into()),
    }
    frame_role(inst, "F")?;
    Ok(())
}

fn det_cheb_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let a = inst.mat("A")?;
    let b = inst.mat("B")?;
    let frame = Frame::new(inst.frame("F")?.cols.clone()).map_err(|e| LawError::Numerics(e.to_string()))?;
    let da = det_of_compression(a, &frame)?;
    let db = det_of_compression(b, &frame)?;
    let dab = det_of_compression(&(a * b), &frame)?;
    Ok(vec![ComparedPair::new("det", da * db, dab)])
}

fn det_cheb_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let (a, b) = gen_pair_matrices(&mut rng, dim, 0.2, 3.0, Orientation::Monotone);
    let k = 1 + rng.below(dim);
    let f = gen_frame_cols(&mut rng, dim, k);
    LawInstance::new("L-DET-CHEB")
        .with_matrix("A", a)
        .with_matrix("B", b)
        .with_frame("F", f)
        .with_provenance(provenance("L-DET-CHEB", dim, seed))
}

pub(super) const DET_CHEB: LawDefinition = LawDefinition {
    id: "L-DET-CHEB",
    mode: ComparisonMode::Scalar,
    summary: "determinantal Chebyshev: det A_E · det B_E ≤ det (AB)_E for monotone positive pairs, any subspace",
    roles: RoleSpec {
        matrices: &["A", "B"],
        frames: &["F"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: det_cheb_hyp,
    evaluate: det_cheb_eval,
    generate: det_cheb_gen,
    bound: None,
};

fn det_cheb_rev_hyp(inst: &LawInstance) -> Result<(), String> {
    pd_role(inst, "A")?;
    pd_role(inst, "B")?;
    let a = hermitian_role(inst, "A")?;
    let b = hermitian_role(inst, "B")?;
    match crate::structure::recognize_monotone_pair(&a, &b) {
        Some(kind) if kind.admits(Orientation::Antimonotone) => {}
        _ => return Err("(A, B) is not an antimonotone pair".into()),
    }
    let frame = frame_role(inst, "F")?;
    let (n, k) = (frame.ambient_dim(), frame.subspace_dim());
    if k != 1 && k != n - 1 {
        return Err(format!(
            "reverse determinantal comparison covers only 1-dimensional and codimension-1 subspaces, got k = {k} of n = {n}"
        ));
    }
    Ok(())
}

fn det_cheb_rev_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let a = inst.mat("A")?;
    let b = inst.mat("B")?;
    let frame = Frame::new(inst.frame("F")?.cols.clone()).map_err(|e| LawError::Numerics(e.to_string()))?;
    let da = det_of_compression(a, &frame)?;
    let db = det_of_compression(b, &frame)?;
    let dab = det_of_compression(&(a * b), &frame)?;
    Ok(vec![ComparedPair::new("det", dab, da * db)])
}

fn det_cheb_rev_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let (a, b) = gen_pair_matrices(&mut rng, dim, 0.2, 3.0, Orientation::Antimonotone);
    let k = if dim == 2 || rng.f64_01() < 0.5 { 1 } else { dim - 1 };
    let f = gen_frame_cols(&mut rng, dim, k);
    LawInstance::new("L-DET-CHEB-REV")
        .with_matrix("A", a)
        .with_matrix("B", b)
        .with_frame("F", f)
        .with_provenance(provenance("L-DET-CHEB-REV", dim, seed))
}

pub(super) const DET_CHEB_REV: LawDefinition = LawDefinition {
    id: "L-DET-CHEB-REV",
    mode: ComparisonMode::Scalar,
    summary: "reverse determinantal Chebyshev: det (AB)_E ≤ det A_E · det B_E for antimonotone positive pairs on 1-dimensional and codimension-1 subspaces",
    roles: RoleSpec {
        matrices: &["A", "B"],
        frames: &["F"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: det_cheb_rev_hyp,
    evaluate: det_cheb_rev_eval,
    generate: det_cheb_rev_gen,
    bound: None,
};

// --- Gruss-type trace estimates --------------------------------------------

fn gruss_trace_hyp(inst: &LawInstance) -> Result<(), String> {
    psd_role(inst, "Z")?;
    hermitian_role(inst, "A")?;
    hermitian_role(inst, "B")?;
    Ok(())
}

fn gruss_trace_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let z = inst.mat("Z")?.dm();
    let a = inst.mat("A")?.dm();
    let b = inst.mat("B")?.dm();
    let (p, q) = extremal_of(inst, "A")?;
    let (r, s) = extremal_of(inst, "B")?;
    let z2 = z * z;
    let t1 = (&z2 * a * b).trace();
    let t2 = (z * a * z * b).trace();
    let trz2 = real_part(z2.trace(), "Tr Z²")?;
    let bound = gruss_bound(p, q, r, s).map_err(|e| LawError::Numerics(e.to_string()))?;
    Ok(vec![ComparedPair::new(
        "gruss-trace",
        (t1 - t2).norm(),
        bound * trz2,
    )])
}

fn gruss_trace_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let z = gen_psd_with(&mut rng, dim, 0.0, 2.0);
    let a = gen_hermitian_with(&mut rng, dim, -2.0, 2.0);
    let b = gen_hermitian_with(&mut rng, dim, -2.0, 2.0);
    LawInstance::new("L-GRUSS-TRACE")
        .with_matrix("Z", z)
        .with_matrix("A", a)
        .with_matrix("B", b)
        .with_provenance(provenance("L-GRUSS-TRACE", dim, seed))
}

pub(super) const GRUSS_TRACE: LawDefinition = LawDefinition {
    id: "L-GRUSS-TRACE",
    mode: ComparisonMode::Scalar,
    summary: "Gruss trace estimate: |Tr Z²AB − Tr ZAZB| ≤ ¼(p−q)(r−s)·Tr Z² for Z ≥ 0",
    roles: RoleSpec {
        matrices: &["Z", "A", "B"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: gruss_trace_hyp,
    evaluate: gruss_trace_eval,
    generate: gruss_trace_gen,
    bound: None,
};

fn gruss_normal_hyp(inst: &LawInstance) -> Result<(), String> {
    normal_role(inst, "Z")?;
    hermitian_role(inst, "A")?;
    hermitian_role(inst, "B")?;
    Ok(())
}

fn gruss_normal_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let z = inst.mat("Z")?.dm();
    let a = inst.mat("A")?.dm();
    let b = inst.mat("B")?.dm();
    let (p, q) = extremal_of(inst, "A")?;
    let (r, s) = extremal_of(inst, "B")?;
    let w = z.adjoint() * z;
    let t1 = (&w * a * b).trace();
    let t2 = (z.adjoint() * a * z * b).trace();
    let trw = real_part(w.trace(), "Tr |Z|²")?;
    let bound = 2.0 * gruss_bound(p, q, r, s).map_err(|e| LawError::Numerics(e.to_string()))?;
    Ok(vec![ComparedPair::new(
        "gruss-normal",
        (t1 - t2).norm(),
        bound * trw,
    )])
}

fn gruss_normal_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let z = gen_normal_with(&mut rng, dim, 1.3);
    let a = gen_hermitian_with(&mut rng, dim, -2.0, 2.0);
    let b = gen_hermitian_with(&mut rng, dim, -2.0, 2.0);
    LawInstance::new("L-GRUSS-NORMAL")
        .with_matrix("Z", z)
        .with_matrix("A", a)
        .with_matrix("B", b)
        .with_provenance(provenance("L-GRUSS-NORMAL", dim, seed))
}

pub(super) const GRUSS_NORMAL: LawDefinition = LawDefinition {
    id: "L-GRUSS-NORMAL",
    mode: ComparisonMode::Scalar,
    summary: "Gruss estimate for normal Z: |Tr |Z|²AB − Tr Z*AZB| ≤ ½(p−q)(r−s)·Tr |Z|²",
    roles: RoleSpec {
        matrices: &["Z", "A", "B"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: gruss_normal_hyp,
    evaluate: gruss_normal_eval,
    generate: gruss_normal_gen,
    bound: None,
};

// --- variance-covariance bound ---------------------------------------------

fn varcov_hyp(inst: &LawInstance) -> Result<(), String> {
    hermitian_role(inst, "A")?;
    hermitian_role(inst, "B")?;
    unit_role(inst, "h")?;
    Ok(())
}

fn varcov_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let a = inst.mat("A")?;
    let b = inst.mat("B")?;
    let h = inst.cvec("h")?;
    let (p, q) = extremal_of(inst, "A")?;
    let (r, s) = extremal_of(inst, "B")?;
    let qa = real_part(quad_form(a, h), "⟨h,Ah⟩")?;
    let qb = real_part(quad_form(b, h), "⟨h,Bh⟩")?;
    let qab = h.dotc(&(a.dm() * (b.dm() * h)));
    let lhs = (qab - C64::new(qa * qb, 0.0)).norm();
    let bound = gruss_bound(p, q, r, s).map_err(|e| LawError::Numerics(e.to_string()))?;
    Ok(vec![ComparedPair::new("varcov", lhs, bound)])
}

fn varcov_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let a = gen_hermitian_with(&mut rng, dim, -2.0, 2.0);
    let b = gen_hermitian_with(&mut rng, dim, -2.0, 2.0);
    let h = gen_unit(&mut rng, dim);
    LawInstance::new("L-VARCOV")
        .with_matrix("A", a)
        .with_matrix("B", b)
        .with_vector("h", h)
        .with_provenance(provenance("L-VARCOV", dim, seed))
}

pub(super) const VARCOV: LawDefinition = LawDefinition {
    id: "L-VARCOV",
    mode: ComparisonMode::Scalar,
    summary: "variance-covariance bound: |⟨h,ABh⟩ − ⟨h,Ah⟩⟨h,Bh⟩| ≤ ¼(p−q)(r−s) for unit h",
    roles: RoleSpec {
        matrices: &["A", "B"],
        vectors: &["h"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: varcov_hyp,
    evaluate: varcov_eval,
    generate: varcov_gen,
    bound: None,
};

pub(super) fn symnorm_normal_gen(dim: usize, seed: u64) -> LawInstance {
    gen_normal_product("L-SYMNORM-NORMAL", dim, seed)
}
