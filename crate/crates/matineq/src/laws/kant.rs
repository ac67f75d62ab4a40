//! Kantorovich-type laws: singular value comparisons of AZB and ZAB with the
//! spectral factor (a+b)/(2√(ab)), their vector and operator-norm special
//! cases, symmetric-norm generalizations, compression bounds and the reverse
//! rearrangement inequalities for sequences.

use crate::constants::kantorovich_factor;
use crate::la::{
    compression, matrix_power, singular_values, spectral_decompose, ComplexMatrix, Frame,
    HermitianMatrix, PsdMatrix,
};
use crate::laws::cheb::symnorm_normal_gen;
use crate::laws::support::*;
use crate::laws::{ComparedPair, ComparisonMode, LawDefinition, LawError, LawInstance, Provenance, RoleSpec};
use crate::norms::operator_norm;
use crate::rng::Stream;
use crate::structure::{sort_rearrange, Orientation, SortDirection};

fn provenance(law: &str, dim: usize, seed: u64) -> Provenance {
    Provenance::Generated {
        law: law.to_string(),
        dim,
        seed,
    }
}

fn monotone_pair_hyp(inst: &LawInstance) -> Result<(), String> {
    psd_role(inst, "A")?;
    psd_role(inst, "B")?;
    let a = hermitian_role(inst, "A")?;
    let b = hermitian_role(inst, "B")?;
    match crate::structure::recognize_monotone_pair(&a, &b) {
        Some(kind) if kind.admits(Orientation::Monotone) => Ok(()),
        _ => Err("(A, B) is not a monotone pair".into()),
    }
}

// --- μ_j(AZB) ≤ K₁ μ_j(ZAB), K₁ from the nonzero spectrum of Z ≥ 0 ---------

fn sv_kant_hyp(inst: &LawInstance) -> Result<(), String> {
    monotone_pair_hyp(inst)?;
    let z = psd_role(inst, "Z")?;
    crate::la::extremal_eigenvalues(&z, true)
        .map(|_| ())
        .map_err(|e| format!("Z has no nonzero eigenvalues: {e}"))
}

fn sv_kant_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let a = inst.mat("A")?;
    let b = inst.mat("B")?;
    let z = inst.mat("Z")?;
    let k1 = k1_of(inst, "Z", true)?;
    let azb = ComplexMatrix::new(a.dm() * z.dm() * b.dm()).expect("finite");
    let zab = ComplexMatrix::new(z.dm() * a.dm() * b.dm()).expect("finite");
    Ok(sv_pairs(&azb, &zab, k1))
}

fn sv_kant_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let (a, b) = gen_pair_matrices(&mut rng, dim, 0.0, 2.0, Orientation::Monotone);
    // Rank-deficient Z now and then, to exercise the nonzero-spectrum rule.
    let rank = if dim > 1 && rng.f64_01() < 0.3 { dim - 1 } else { dim };
    let z = gen_psd_rank(&mut rng, dim, 0.2, 3.0, rank);
    LawInstance::new("L-SV-KANT")
        .with_matrix("A", a)
        .with_matrix("B", b)
        .with_matrix("Z", z)
        .with_provenance(provenance("L-SV-KANT", dim, seed))
}

fn sv_kant_bound(inst: &LawInstance) -> Result<f64, LawError> {
    k1_of(inst, "Z", true)
}

pub(super) const SV_KANT: LawDefinition = LawDefinition {
    id: "L-SV-KANT",
    mode: ComparisonMode::PerSingularValue,
    summary: "hybrid bound: μ_j(AZB) ≤ K₁·μ_j(ZAB) with K₁ from the nonzero spectrum of Z ≥ 0, monotone PSD pair",
    roles: RoleSpec {
        matrices: &["A", "B", "Z"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: sv_kant_hyp,
    evaluate: sv_kant_eval,
    generate: sv_kant_gen,
    bound: Some(sv_kant_bound),
};

// --- ‖Zh‖ ≤ K₁ ⟨h,Zh⟩ for unit h -------------------------------------------

fn kant_vec_hyp(inst: &LawInstance) -> Result<(), String> {
    pd_role(inst, "Z")?;
    unit_role(inst, "h")?;
    Ok(())
}

fn kant_vec_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let z = inst.mat("Z")?;
    let h = inst.cvec("h")?;
    let k1 = k1_of(inst, "Z", false)?;
    let zh = z.dm() * h;
    let form = real_part(h.dotc(&zh), "⟨h,Zh⟩")?;
    Ok(vec![ComparedPair::new("vector", zh.norm(), k1 * form)])
}

fn kant_vec_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let z = gen_psd_with(&mut rng, dim, 0.2, 4.0);
    let h = gen_unit(&mut rng, dim);
    LawInstance::new("L-KANT-VEC")
        .with_matrix("Z", z)
        .with_vector("h", h)
        .with_provenance(provenance("L-KANT-VEC", dim, seed))
}

fn kant_vec_bound(inst: &LawInstance) -> Result<f64, LawError> {
    k1_of(inst, "Z", false)
}

pub(super) const KANT_VEC: LawDefinition = LawDefinition {
    id: "L-KANT-VEC",
    mode: ComparisonMode::Scalar,
    summary: "vector Kantorovich: ‖Zh‖ ≤ K₁·⟨h,Zh⟩ for Z > 0 and unit h",
    roles: RoleSpec {
        matrices: &["Z"],
        vectors: &["h"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: kant_vec_hyp,
    evaluate: kant_vec_eval,
    generate: kant_vec_gen,
    bound: Some(kant_vec_bound),
};

// --- ‖AZ‖∞ ≤ K₁ ρ(AZ) -------------------------------------------------------

fn opnorm_rho_hyp(inst: &LawInstance) -> Result<(), String> {
    psd_role(inst, "A")?;
    pd_role(inst, "Z")?;
    Ok(())
}

fn opnorm_rho_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let a = inst.mat("A")?;
    let z = inst.mat("Z")?;
    let k1 = k1_of(inst, "Z", false)?;
    let az = a * z;
    Ok(vec![ComparedPair::new(
        "opnorm-rho",
        operator_norm(&az),
        k1 * crate::la::spectral_radius(&az),
    )])
}

fn opnorm_rho_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let a = gen_psd_with(&mut rng, dim, 0.0, 2.0);
    let z = gen_psd_with(&mut rng, dim, 0.2, 3.0);
    LawInstance::new("L-OPNORM-RHO")
        .with_matrix("A", a)
        .with_matrix("Z", z)
        .with_provenance(provenance("L-OPNORM-RHO", dim, seed))
}

fn opnorm_rho_bound(inst: &LawInstance) -> Result<f64, LawError> {
    k1_of(inst, "Z", false)
}

pub(super) const OPNORM_RHO: LawDefinition = LawDefinition {
    id: "L-OPNORM-RHO",
    mode: ComparisonMode::Scalar,
    summary: "operator norm vs spectral radius: ‖AZ‖∞ ≤ K₁·ρ(AZ) for A ≥ 0, Z > 0",
    roles: RoleSpec {
        matrices: &["A", "Z"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: opnorm_rho_hyp,
    evaluate: opnorm_rho_eval,
    generate: opnorm_rho_gen,
    bound: Some(opnorm_rho_bound),
};

// --- AZA ≤ K₁² Z for contractions A ----------------------------------------

fn loewner_aza_hyp(inst: &LawInstance) -> Result<(), String> {
    let a = psd_role(inst, "A")?;
    let decomp = spectral_decompose(a.hermitian()).map_err(|e| e.to_string())?;
    let top = decomp.eigenvalues()[0];
    if top > 1.0 + crate::la::PSD_TOL {
        return Err(format!("A is not a contraction: largest eigenvalue {top:.6}"));
    }
    pd_role(inst, "Z")?;
    Ok(())
}

fn loewner_aza_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let a = inst.mat("A")?;
    let z = inst.mat("Z")?;
    let k1 = k1_of(inst, "Z", false)?;
    let aza = ComplexMatrix::new(a.dm() * z.dm() * a.dm()).expect("finite");
    let scaled = ComplexMatrix::new(z.dm() * nalgebra::Complex::new(k1 * k1, 0.0)).expect("finite");
    loewner_pairs(&aza, &scaled)
}

fn loewner_aza_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let a = gen_psd_with(&mut rng, dim, 0.0, 1.0);
    let z = gen_psd_with(&mut rng, dim, 0.2, 3.0);
    LawInstance::new("L-LOEWNER-AZA")
        .with_matrix("A", a)
        .with_matrix("Z", z)
        .with_provenance(provenance("L-LOEWNER-AZA", dim, seed))
}

fn loewner_aza_bound(inst: &LawInstance) -> Result<f64, LawError> {
    let k1 = k1_of(inst, "Z", false)?;
    Ok(k1 * k1)
}

pub(super) const LOEWNER_AZA: LawDefinition = LawDefinition {
    id: "L-LOEWNER-AZA",
    mode: ComparisonMode::Loewner,
    summary: "order bound: AZA ≤ K₁²·Z for 0 ≤ A ≤ I and Z > 0",
    roles: RoleSpec {
        matrices: &["A", "Z"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: loewner_aza_hyp,
    evaluate: loewner_aza_eval,
    generate: loewner_aza_gen,
    bound: Some(loewner_aza_bound),
};

// --- reverse: μ_j(ZAB) ≤ K₁ μ_j(AZB) for Z > 0 ------------------------------

fn sv_kant_rev_hyp(inst: &LawInstance) -> Result<(), String> {
    monotone_pair_hyp(inst)?;
    pd_role(inst, "Z")?;
    Ok(())
}

fn sv_kant_rev_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let a = inst.mat("A")?;
    let b = inst.mat("B")?;
    let z = inst.mat("Z")?;
    let k1 = k1_of(inst, "Z", false)?;
    let azb = ComplexMatrix::new(a.dm() * z.dm() * b.dm()).expect("finite");
    let zab = ComplexMatrix::new(z.dm() * a.dm() * b.dm()).expect("finite");
    Ok(sv_pairs(&zab, &azb, k1))
}

fn sv_kant_rev_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let (a, b) = gen_pair_matrices(&mut rng, dim, 0.0, 2.0, Orientation::Monotone);
    let z = gen_psd_with(&mut rng, dim, 0.2, 3.0);
    LawInstance::new("L-SV-KANT-REV")
        .with_matrix("A", a)
        .with_matrix("B", b)
        .with_matrix("Z", z)
        .with_provenance(provenance("L-SV-KANT-REV", dim, seed))
}

pub(super) const SV_KANT_REV: LawDefinition = LawDefinition {
    id: "L-SV-KANT-REV",
    mode: ComparisonMode::PerSingularValue,
    summary: "reverse hybrid bound: μ_j(ZAB) ≤ K₁·μ_j(AZB) for monotone PSD pairs and Z > 0",
    roles: RoleSpec {
        matrices: &["A", "B", "Z"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: sv_kant_rev_hyp,
    evaluate: sv_kant_rev_eval,
    generate: sv_kant_rev_gen,
    bound: Some(sv_kant_bound_pd),
};

fn sv_kant_bound_pd(inst: &LawInstance) -> Result<f64, LawError> {
    k1_of(inst, "Z", false)
}

// --- sandwich: (1/K₁) λ_k(AZ) ≤ μ_k(AZ) ≤ K₁ λ_k(AZ) ------------------------

fn sandwich_hyp(inst: &LawInstance) -> Result<(), String> {
    psd_role(inst, "A")?;
    pd_role(inst, "Z")?;
    Ok(())
}

fn sandwich_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let a = inst.mat("A")?;
    let z = inst.mat("Z")?;
    let k1 = k1_of(inst, "Z", false)?;
    let az = a * z;
    let mu = singular_values(&az);

    // AZ is similar to the Hermitian Z^{1/2} A Z^{1/2}, whose spectrum is
    // the eigenvalue profile λ_k(AZ).
    let zp = PsdMatrix::new(HermitianMatrix::new(z.clone()).map_err(|e| LawError::Numerics(e.to_string()))?)
        .map_err(|e| LawError::Numerics(e.to_string()))?;
    let z_half = matrix_power(&zp, 0.5).map_err(|e| LawError::Numerics(e.to_string()))?;
    let sym = ComplexMatrix::new(z_half.matrix().dm() * a.dm() * z_half.matrix().dm()).expect("finite");
    let symh = HermitianMatrix::symmetrize(&sym).map_err(|e| LawError::Numerics(e.to_string()))?;
    let lambda = spectral_decompose(&symh).map_err(|e| LawError::Numerics(e.to_string()))?;

    let mut pairs = Vec::with_capacity(2 * mu.len());
    for (k, (&m, &l)) in mu.values().iter().zip(lambda.eigenvalues().iter()).enumerate() {
        pairs.push(ComparedPair::new(format!("upper[{k}]"), m, k1 * l));
        pairs.push(ComparedPair::new(format!("lower[{k}]"), l / k1, m));
    }
    Ok(pairs)
}

fn sandwich_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let a = gen_psd_with(&mut rng, dim, 0.0, 2.0);
    let z = gen_psd_with(&mut rng, dim, 0.2, 3.0);
    LawInstance::new("L-SANDWICH")
        .with_matrix("A", a)
        .with_matrix("Z", z)
        .with_provenance(provenance("L-SANDWICH", dim, seed))
}

pub(super) const SANDWICH: LawDefinition = LawDefinition {
    id: "L-SANDWICH",
    mode: ComparisonMode::PerSingularValue,
    summary: "eigen/singular sandwich: (1/K₁)·λ_k(AZ) ≤ μ_k(AZ) ≤ K₁·λ_k(AZ) for A ≥ 0, Z > 0",
    roles: RoleSpec {
        matrices: &["A", "Z"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: sandwich_hyp,
    evaluate: sandwich_eval,
    generate: sandwich_gen,
    bound: Some(sv_kant_bound_pd),
};

// --- all symmetric norms: ‖ZAB‖ ≤ K₁ ‖BZA‖ with AB ≥ 0 ----------------------

fn symnorm_kant_hyp(inst: &LawInstance) -> Result<(), String> {
    product_psd(inst, "A", "B")?;
    pd_role(inst, "Z")?;
    Ok(())
}

fn symnorm_kant_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let a = inst.mat("A")?;
    let b = inst.mat("B")?;
    let z = inst.mat("Z")?;
    let k1 = k1_of(inst, "Z", false)?;
    let zab = ComplexMatrix::new(z.dm() * a.dm() * b.dm()).expect("finite");
    let bza = ComplexMatrix::new(b.dm() * z.dm() * a.dm()).expect("finite");
    Ok(kyfan_pairs(&zab, &bza, k1))
}

fn symnorm_kant_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let a = gen_invertible(&mut rng, dim);
    let p = gen_psd_with(&mut rng, dim, 0.0, 2.0);
    let b = ComplexMatrix::new(invert(&a).dm() * p.dm()).expect("finite");
    let z = gen_psd_with(&mut rng, dim, 0.2, 3.0);
    LawInstance::new("L-SYMNORM-KANT")
        .with_matrix("A", a)
        .with_matrix("B", b)
        .with_matrix("Z", z)
        .with_provenance(provenance("L-SYMNORM-KANT", dim, seed))
}

pub(super) const SYMNORM_KANT: LawDefinition = LawDefinition {
    id: "L-SYMNORM-KANT",
    mode: ComparisonMode::AllSymmetricNorms,
    summary: "symmetric norm Kantorovich: ‖ZAB‖ ≤ K₁·‖BZA‖ for AB ≥ 0 and Z > 0, all symmetric norms",
    roles: RoleSpec {
        matrices: &["A", "B", "Z"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: symnorm_kant_hyp,
    evaluate: symnorm_kant_eval,
    generate: symnorm_kant_gen,
    bound: Some(sv_kant_bound_pd),
};

// --- all symmetric norms: ‖AB‖ ≤ ‖BA‖ when AB is normal --------------------

fn symnorm_normal_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let a = inst.mat("A")?;
    let b = inst.mat("B")?;
    Ok(kyfan_pairs(&(a * b), &(b * a), 1.0))
}

pub(super) const SYMNORM_NORMAL: LawDefinition = LawDefinition {
    id: "L-SYMNORM-NORMAL",
    mode: ComparisonMode::AllSymmetricNorms,
    summary: "symmetric norm rearrangement: ‖AB‖ ≤ ‖BA‖ when AB is normal, all symmetric norms",
    roles: RoleSpec {
        matrices: &["A", "B"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: |inst| product_normal(inst, "A", "B"),
    evaluate: symnorm_normal_eval,
    generate: symnorm_normal_gen,
    bound: None,
};

// --- pinching: ‖diag(X)‖ ≤ ‖X‖ ---------------------------------------------

fn pinch_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let x = inst.mat("X")?;
    Ok(kyfan_pairs(&crate::la::diag_pinch(x), x, 1.0))
}

fn pinch_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let m = nalgebra::DMatrix::from_fn(dim, dim, |_, _| {
        nalgebra::Complex::new(rng.normal(), rng.normal())
    });
    LawInstance::new("L-PINCH")
        .with_matrix("X", ComplexMatrix::new(m).expect("finite"))
        .with_provenance(provenance("L-PINCH", dim, seed))
}

pub(super) const PINCH: LawDefinition = LawDefinition {
    id: "L-PINCH",
    mode: ComparisonMode::AllSymmetricNorms,
    summary: "pinching: ‖diag(X)‖ ≤ ‖X‖ for all symmetric norms",
    roles: RoleSpec {
        matrices: &["X"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: |_| Ok(()),
    evaluate: pinch_eval,
    generate: pinch_gen,
    bound: None,
};

// --- commuting pair bound: ‖AZB‖ ≤ (p+q)/(2√(pq)) ‖ZAB‖ ---------------------

/// Tight spectral bounds of A B⁻¹ for a commuting positive pair.
fn commute_ratio_bounds(inst: &LawInstance) -> Result<(f64, f64), LawError> {
    let a = inst.mat("A")?;
    let b = inst.mat("B")?;
    let bh = HermitianMatrix::new(b.clone()).map_err(|e| LawError::Numerics(e.to_string()))?;
    let bp = PsdMatrix::new_strict(bh).map_err(|e| LawError::Numerics(e.to_string()))?;
    let b_inv = matrix_power(&bp, -1.0).map_err(|e| LawError::Numerics(e.to_string()))?;
    let w = ComplexMatrix::new(a.dm() * b_inv.matrix().dm()).expect("finite");
    let wh = HermitianMatrix::symmetrize(&w).map_err(|e| LawError::Numerics(e.to_string()))?;
    let d = spectral_decompose(&wh).map_err(|e| LawError::Numerics(e.to_string()))?;
    let e = d.eigenvalues();
    Ok((e[0], e[e.len() - 1]))
}

fn commute_factor(inst: &LawInstance) -> Result<f64, LawError> {
    let (p, q) = commute_ratio_bounds(inst)?;
    kantorovich_factor(p, q).map_err(|e| LawError::Numerics(e.to_string()))
}

fn commute_kant_hyp(inst: &LawInstance) -> Result<(), String> {
    pd_role(inst, "A")?;
    pd_role(inst, "B")?;
    commuting(inst, "A", "B")?;
    psd_role(inst, "Z")?;
    let (_, q) = commute_ratio_bounds(inst).map_err(|e| e.to_string())?;
    if q <= 0.0 {
        return Err(format!("AB⁻¹ must have positive spectrum, got smallest eigenvalue {q}"));
    }
    Ok(())
}

fn commute_kant_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let a = inst.mat("A")?;
    let b = inst.mat("B")?;
    let z = inst.mat("Z")?;
    let factor = commute_factor(inst)?;
    let azb = ComplexMatrix::new(a.dm() * z.dm() * b.dm()).expect("finite");
    let zab = ComplexMatrix::new(z.dm() * a.dm() * b.dm()).expect("finite");
    Ok(kyfan_pairs(&azb, &zab, factor))
}

fn commute_kant_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let u = crate::structure::haar_unitary(dim, &mut rng);
    let alpha: Vec<f64> = (0..dim).map(|_| rng.uniform(0.2, 3.0)).collect();
    let beta: Vec<f64> = (0..dim).map(|_| rng.uniform(0.2, 3.0)).collect();
    let a = realize_in_basis(&u, &alpha);
    let b = realize_in_basis(&u, &beta);
    let z = gen_psd_with(&mut rng, dim, 0.0, 2.0);
    LawInstance::new("L-COMMUTE-KANT")
        .with_matrix("A", a)
        .with_matrix("B", b)
        .with_matrix("Z", z)
        .with_provenance(provenance("L-COMMUTE-KANT", dim, seed))
}

pub(super) const COMMUTE_KANT: LawDefinition = LawDefinition {
    id: "L-COMMUTE-KANT",
    mode: ComparisonMode::AllSymmetricNorms,
    summary: "commuting pair bound: ‖AZB‖ ≤ (p+q)/(2√(pq))·‖ZAB‖ with pI ≥ AB⁻¹ ≥ qI, Z ≥ 0, all symmetric norms",
    roles: RoleSpec {
        matrices: &["A", "B", "Z"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: commute_kant_hyp,
    evaluate: commute_kant_eval,
    generate: commute_kant_gen,
    bound: Some(commute_factor),
};

// --- reverse rearrangement for sequences ------------------------------------

/// Tight ratio bounds p = max a_i/b_i, q = min a_i/b_i.
fn seq_ratio_bounds(a: &[f64], b: &[f64]) -> (f64, f64) {
    let mut p = f64::NEG_INFINITY;
    let mut q = f64::INFINITY;
    for (x, y) in a.iter().zip(b.iter()) {
        let r = x / y;
        p = p.max(r);
        q = q.min(r);
    }
    (p, q)
}

fn rev_rearr_hyp(inst: &LawInstance) -> Result<(), String> {
    positive_sequence(inst, "a")?;
    positive_sequence(inst, "b")?;
    Ok(())
}

fn rev_rearr_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let a = inst.seq("a")?;
    let b = inst.seq("b")?;
    let (p, q) = seq_ratio_bounds(a, b);
    let factor = kantorovich_factor(p, q).map_err(|e| LawError::Numerics(e.to_string()))?;
    let ad = sort_rearrange(a, SortDirection::Down);
    let bd = sort_rearrange(b, SortDirection::Down);
    Ok(vec![ComparedPair::new(
        "sum",
        canonical_dot(&ad, &bd),
        factor * canonical_dot(a, b),
    )])
}

fn rev_rearr_gen(len: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let b: Vec<f64> = (0..len).map(|_| rng.uniform(0.3, 3.0)).collect();
    let a: Vec<f64> = b.iter().map(|&v| v * rng.uniform(0.3, 3.0)).collect();
    LawInstance::new("L-REV-REARR")
        .with_sequence("a", a)
        .with_sequence("b", b)
        .with_provenance(provenance("L-REV-REARR", len, seed))
}

fn rev_rearr_bound(inst: &LawInstance) -> Result<f64, LawError> {
    let (p, q) = seq_ratio_bounds(inst.seq("a")?, inst.seq("b")?);
    kantorovich_factor(p, q).map_err(|e| LawError::Numerics(e.to_string()))
}

pub(super) const REV_REARR: LawDefinition = LawDefinition {
    id: "L-REV-REARR",
    mode: ComparisonMode::Scalar,
    summary: "reverse rearrangement: Σ a↓b↓ ≤ (p+q)/(2√(pq))·Σ ab for positive sequences with p ≥ aᵢ/bᵢ ≥ q",
    roles: RoleSpec {
        sequences: &["a", "b"],
        ..RoleSpec::NONE
    },
    dims: (2, 24),
    sequence_law: true,
    hypothesis: rev_rearr_hyp,
    evaluate: rev_rearr_eval,
    generate: rev_rearr_gen,
    bound: Some(rev_rearr_bound),
};

// --- Cassel form: ‖Ah‖‖Bh‖ ≤ (p+q)/(2√(pq)) ⟨Ah,Bh⟩ -------------------------

fn cassel_hyp(inst: &LawInstance) -> Result<(), String> {
    pd_role(inst, "A")?;
    pd_role(inst, "B")?;
    commuting(inst, "A", "B")?;
    if inst.cvec("h").map_err(|e| e.to_string())?.norm() == 0.0 {
        return Err("h must be a nonzero vector".into());
    }
    Ok(())
}

fn cassel_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let a = inst.mat("A")?;
    let b = inst.mat("B")?;
    let h = inst.cvec("h")?;
    let factor = commute_factor(inst)?;
    let ah = a.dm() * h;
    let bh = b.dm() * h;
    let pairing = real_part(ah.dotc(&bh), "⟨Ah,Bh⟩")?;
    Ok(vec![ComparedPair::new(
        "cassel",
        ah.norm() * bh.norm(),
        factor * pairing,
    )])
}

fn cassel_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    // Even seeds carry the weighted-sequence reading: diagonal matrices with
    // h = sqrt(w); odd seeds a general commuting positive pair.
    if seed.is_multiple_of(2) {
        let b: Vec<f64> = (0..dim).map(|_| rng.uniform(0.3, 3.0)).collect();
        let a: Vec<f64> = b.iter().map(|&v| v * rng.uniform(0.3, 3.0)).collect();
        let w: Vec<f64> = (0..dim).map(|_| rng.uniform(0.0, 2.0)).collect();
        let h = nalgebra::DVector::from_iterator(
            dim,
            w.iter().map(|&x| nalgebra::Complex::new(x.sqrt(), 0.0)),
        );
        LawInstance::new("L-CASSEL")
            .with_matrix("A", ComplexMatrix::from_real_diagonal(&a))
            .with_matrix("B", ComplexMatrix::from_real_diagonal(&b))
            .with_vector("h", h)
            .with_provenance(provenance("L-CASSEL", dim, seed))
    } else {
        let u = crate::structure::haar_unitary(dim, &mut rng);
        let alpha: Vec<f64> = (0..dim).map(|_| rng.uniform(0.2, 3.0)).collect();
        let beta: Vec<f64> = (0..dim).map(|_| rng.uniform(0.2, 3.0)).collect();
        let a = realize_in_basis(&u, &alpha);
        let b = realize_in_basis(&u, &beta);
        let mut h = nalgebra::DVector::from_fn(dim, |_, _| {
            nalgebra::Complex::new(rng.normal(), rng.normal())
        });
        h *= nalgebra::Complex::new(rng.uniform(0.5, 2.0), 0.0);
        LawInstance::new("L-CASSEL")
            .with_matrix("A", a)
            .with_matrix("B", b)
            .with_vector("h", h)
            .with_provenance(provenance("L-CASSEL", dim, seed))
    }
}

pub(super) const CASSEL: LawDefinition = LawDefinition {
    id: "L-CASSEL",
    mode: ComparisonMode::Scalar,
    summary: "Cassel bound: ‖Ah‖‖Bh‖ ≤ (p+q)/(2√(pq))·⟨Ah,Bh⟩ for commuting positive A, B (covers the weighted-sequence form with h = √w)",
    roles: RoleSpec {
        matrices: &["A", "B"],
        vectors: &["h"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: cassel_hyp,
    evaluate: cassel_eval,
    generate: cassel_gen,
    bound: Some(commute_factor),
};

// --- Dragomir form on real vectors ------------------------------------------

/// The conclusion here is the Cassel-form norm bound ‖a‖‖b‖ ≤ c·⟨a,b⟩; some
/// statements of this result point at the operator-norm rearrangement
/// inequality instead, an ambiguity resolved in favor of the norm bound.
fn dragomir_hyp(inst: &LawInstance) -> Result<(), String> {
    let a = inst.seq("a").map_err(|e| e.to_string())?;
    let b = inst.seq("b").map_err(|e| e.to_string())?;
    let p = inst.scalar("p").map_err(|e| e.to_string())?;
    let q = inst.scalar("q").map_err(|e| e.to_string())?;
    if p * q <= 0.0 {
        return Err(format!("pq must be positive, got p = {p}, q = {q}"));
    }
    // ⟨a − qb, pb − a⟩ ≥ 0 within roundoff.
    let mut inner = 0.0;
    let mut scale = 1.0f64;
    for (x, y) in a.iter().zip(b.iter()) {
        inner += (x - q * y) * (p * y - x);
        scale = scale.max(x.abs()).max(y.abs());
    }
    if inner < -1e-9 * scale * scale * a.len() as f64 {
        return Err(format!("⟨a − qb, pb − a⟩ = {inner:.6e} is negative"));
    }
    Ok(())
}

fn dragomir_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let a = inst.seq("a")?;
    let b = inst.seq("b")?;
    let p = inst.scalar("p")?;
    let q = inst.scalar("q")?;
    let factor = (p + q) / (2.0 * (p * q).sqrt());
    let na = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nb = b.iter().map(|x| x * x).sum::<f64>().sqrt();
    let inner: f64 = a.iter().zip(b.iter()).map(|(x, y)| x * y).sum();
    Ok(vec![ComparedPair::new("dragomir", na * nb, factor * inner)])
}

fn dragomir_gen(len: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let (q, p) = (rng.uniform(0.2, 1.0), rng.uniform(1.0, 3.0));
    let base: Vec<f64> = (0..len).map(|_| rng.uniform(-2.0, 2.0)).collect();
    let a: Vec<f64> = base.iter().map(|&v| v * rng.uniform(q, p)).collect();

    // A joint real rotation preserves ⟨a − qb, pb − a⟩ and both norms:
    // orthogonalize a real Gaussian via QR.
    let gauss = nalgebra::DMatrix::from_fn(len, len, |_, _| rng.normal());
    let ortho = gauss.qr().q();
    let apply = |v: &[f64]| -> Vec<f64> {
        (0..len)
            .map(|i| (0..len).map(|j| ortho[(i, j)] * v[j]).sum())
            .collect()
    };
    let a = apply(&a);
    let b = apply(&base);
    LawInstance::new("L-DRAGOMIR")
        .with_sequence("a", a)
        .with_sequence("b", b)
        .with_scalar("p", p)
        .with_scalar("q", q)
        .with_provenance(provenance("L-DRAGOMIR", len, seed))
}

fn dragomir_bound(inst: &LawInstance) -> Result<f64, LawError> {
    let p = inst.scalar("p")?;
    let q = inst.scalar("q")?;
    Ok((p + q) / (2.0 * (p * q).sqrt()))
}

pub(super) const DRAGOMIR: LawDefinition = LawDefinition {
    id: "L-DRAGOMIR",
    mode: ComparisonMode::Scalar,
    summary: "Dragomir bound: ‖a‖‖b‖ ≤ (p+q)/(2√(pq))·⟨a,b⟩ for real vectors with ⟨a−qb, pb−a⟩ ≥ 0, pq > 0",
    roles: RoleSpec {
        sequences: &["a", "b"],
        scalars: &["p", "q"],
        ..RoleSpec::NONE
    },
    dims: (2, 24),
    sequence_law: true,
    hypothesis: dragomir_hyp,
    evaluate: dragomir_eval,
    generate: dragomir_gen,
    bound: Some(dragomir_bound),
};

// --- compression bound: (Z_E)⁻¹ ≥ 4ab/(a+b)² (Z⁻¹)_E -------------------------

fn mond_pecaric_hyp(inst: &LawInstance) -> Result<(), String> {
    pd_role(inst, "Z")?;
    frame_role(inst, "F")?;
    Ok(())
}

fn mond_pecaric_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let z = inst.mat("Z")?;
    let frame = Frame::new(inst.frame("F")?.cols.clone()).map_err(|e| LawError::Numerics(e.to_string()))?;
    let k1 = k1_of(inst, "Z", false)?;
    let c = 1.0 / (k1 * k1);

    let zp = PsdMatrix::new_strict(
        HermitianMatrix::new(z.clone()).map_err(|e| LawError::Numerics(e.to_string()))?,
    )
    .map_err(|e| LawError::Numerics(e.to_string()))?;
    let z_inv = matrix_power(&zp, -1.0).map_err(|e| LawError::Numerics(e.to_string()))?;

    let z_comp = compression(z, &frame).map_err(|e| LawError::Numerics(e.to_string()))?;
    let z_comp_psd = PsdMatrix::new_strict(
        HermitianMatrix::symmetrize(&z_comp).map_err(|e| LawError::Numerics(e.to_string()))?,
    )
    .map_err(|e| LawError::Numerics(e.to_string()))?;
    let lhs_rhs = matrix_power(&z_comp_psd, -1.0).map_err(|e| LawError::Numerics(e.to_string()))?;

    let zi_comp = compression(z_inv.matrix(), &frame).map_err(|e| LawError::Numerics(e.to_string()))?;
    let scaled = ComplexMatrix::new(zi_comp.dm() * nalgebra::Complex::new(c, 0.0)).expect("finite");

    // (Z_E)⁻¹ − c (Z⁻¹)_E must be PSD: lhs is the scaled compression.
    loewner_pairs(&scaled, lhs_rhs.matrix())
}

fn mond_pecaric_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let z = gen_psd_with(&mut rng, dim, 0.2, 4.0);
    let k = 1 + rng.below(dim);
    let f = gen_frame_cols(&mut rng, dim, k);
    LawInstance::new("L-MOND-PECARIC")
        .with_matrix("Z", z)
        .with_frame("F", f)
        .with_provenance(provenance("L-MOND-PECARIC", dim, seed))
}

pub(super) const MOND_PECARIC: LawDefinition = LawDefinition {
    id: "L-MOND-PECARIC",
    mode: ComparisonMode::Loewner,
    summary: "compression bound: (Z_E)⁻¹ ≥ 4ab/(a+b)²·(Z⁻¹)_E for Z > 0 and every subspace E",
    roles: RoleSpec {
        matrices: &["Z"],
        frames: &["F"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: mond_pecaric_hyp,
    evaluate: mond_pecaric_eval,
    generate: mond_pecaric_gen,
    bound: None,
};
