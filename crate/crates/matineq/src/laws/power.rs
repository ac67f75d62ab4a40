//! Power-function laws: the symmetric-norm comparison of (AZA)^p and
//! A^p Z^p A^p, the Jensen power inequality with its sharp multiplicative
//! K(a,b,p) and additive C(a,b,p) reverses, and the operator-norm additive
//! reverse.

use crate::constants::{additive_reverse_bound, furuta_c, ky_fan_k};
use crate::la::{
    matrix_power, ComplexMatrix, HermitianMatrix, PsdMatrix,
};
use crate::laws::support::*;
use crate::laws::{ComparedPair, ComparisonMode, LawDefinition, LawError, LawInstance, Provenance, RoleSpec};
use crate::norms::{ky_fan_profile, operator_norm};
use crate::rng::Stream;
use crate::structure::haar_unitary;

fn provenance(law: &str, dim: usize, seed: u64) -> Provenance {
    Provenance::Generated {
        law: law.to_string(),
        dim,
        seed,
    }
}

fn psd_of(inst: &LawInstance, role: &str) -> Result<PsdMatrix, LawError> {
    PsdMatrix::new(
        HermitianMatrix::new(inst.mat(role)?.clone()).map_err(|e| LawError::Numerics(e.to_string()))?,
    )
    .map_err(|e| LawError::Numerics(e.to_string()))
}

fn power_of(m: &ComplexMatrix, p: f64) -> Result<ComplexMatrix, LawError> {
    let psd = PsdMatrix::new(
        HermitianMatrix::symmetrize(m).map_err(|e| LawError::Numerics(e.to_string()))?,
    )
    .map_err(|e| LawError::Numerics(e.to_string()))?;
    Ok(matrix_power(&psd, p)
        .map_err(|e| LawError::Numerics(e.to_string()))?
        .matrix()
        .clone())
}

/// The three operands of the Araki-type comparisons: (AZA)^p, A^p Z^p A^p and
/// A^{2p}.
fn araki_operands(
    inst: &LawInstance,
    p: f64,
) -> Result<(ComplexMatrix, ComplexMatrix, ComplexMatrix), LawError> {
    let a = inst.mat("A")?;
    let z = inst.mat("Z")?;
    let aza = ComplexMatrix::new(a.dm() * z.dm() * a.dm()).expect("finite");
    let aza_p = power_of(&aza, p)?;
    let ap = power_of(a, p)?;
    let zp = power_of(z, p)?;
    let apzpap = ComplexMatrix::new(ap.dm() * zp.dm() * ap.dm()).expect("finite");
    let a2p = power_of(a, 2.0 * p)?;
    Ok((aza_p, apzpap, a2p))
}

fn exponent_above_one(inst: &LawInstance) -> Result<(), String> {
    let p = inst.scalar("p").map_err(|e| e.to_string())?;
    if p <= 1.0 {
        return Err(format!("exponent p must exceed 1, got {p}"));
    }
    Ok(())
}

// --- ‖(AZA)^p‖ vs ‖A^pZ^pA^p‖ for all symmetric norms ----------------------

fn araki_hyp(inst: &LawInstance) -> Result<(), String> {
    psd_role(inst, "A")?;
    psd_role(inst, "Z")?;
    let p = inst.scalar("p").map_err(|e| e.to_string())?;
    if p <= 0.0 || (p - 1.0).abs() < 1e-12 {
        return Err(format!("exponent p must be positive and different from 1, got {p}"));
    }
    Ok(())
}

fn araki_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let p = inst.scalar("p")?;
    let (aza_p, apzpap, _) = araki_operands(inst, p)?;
    if p > 1.0 {
        Ok(kyfan_pairs(&aza_p, &apzpap, 1.0))
    } else {
        Ok(kyfan_pairs(&apzpap, &aza_p, 1.0))
    }
}

fn araki_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    // Sub-unit exponents amplify eigenvalue dust, so keep those spectra
    // bounded away from zero.
    let (p, lo) = if rng.f64_01() < 0.4 {
        (rng.uniform(0.15, 0.85), 0.05)
    } else {
        (rng.uniform(1.1, 3.5), 0.0)
    };
    let a = gen_psd_with(&mut rng, dim, lo, 2.0);
    let z = gen_psd_with(&mut rng, dim, lo, 2.5);
    LawInstance::new("L-ARAKI")
        .with_matrix("A", a)
        .with_matrix("Z", z)
        .with_scalar("p", p)
        .with_provenance(provenance("L-ARAKI", dim, seed))
}

pub(super) const ARAKI: LawDefinition = LawDefinition {
    id: "L-ARAKI",
    mode: ComparisonMode::AllSymmetricNorms,
    summary: "power comparison: ‖(AZA)^p‖ ≤ ‖A^pZ^pA^p‖ for p > 1 (reversed for 0 < p < 1), all symmetric norms",
    roles: RoleSpec {
        matrices: &["A", "Z"],
        scalars: &["p"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: araki_hyp,
    evaluate: araki_eval,
    generate: araki_gen,
    bound: None,
};

// --- ⟨h,Zh⟩^p ≤ ⟨h,Z^p h⟩ ----------------------------------------------------

fn jensen_p_hyp(inst: &LawInstance) -> Result<(), String> {
    psd_role(inst, "Z")?;
    unit_role(inst, "h")?;
    exponent_above_one(inst)
}

fn jensen_p_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let z = inst.mat("Z")?;
    let h = inst.cvec("h")?;
    let p = inst.scalar("p")?;
    let zp = power_of(z, p)?;
    let form = real_part(quad_form(z, h), "⟨h,Zh⟩")?.max(0.0);
    let form_p = real_part(quad_form(&zp, h), "⟨h,Z^p h⟩")?;
    Ok(vec![ComparedPair::new("jensen", form.powf(p), form_p)])
}

fn jensen_p_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let p = rng.uniform(1.1, 4.0);
    let z = gen_psd_with(&mut rng, dim, 0.0, 3.0);
    let h = gen_unit(&mut rng, dim);
    LawInstance::new("L-JENSEN-P")
        .with_matrix("Z", z)
        .with_vector("h", h)
        .with_scalar("p", p)
        .with_provenance(provenance("L-JENSEN-P", dim, seed))
}

pub(super) const JENSEN_P: LawDefinition = LawDefinition {
    id: "L-JENSEN-P",
    mode: ComparisonMode::Scalar,
    summary: "power Jensen: ⟨h,Zh⟩^p ≤ ⟨h,Z^p h⟩ for Z ≥ 0, unit h, p > 1",
    roles: RoleSpec {
        matrices: &["Z"],
        vectors: &["h"],
        scalars: &["p"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: jensen_p_hyp,
    evaluate: jensen_p_eval,
    generate: jensen_p_gen,
    bound: None,
};

// --- reverse Jensen with K(a,b,p) -------------------------------------------

fn k_of_z(inst: &LawInstance, p: f64) -> Result<f64, LawError> {
    let z = psd_of(inst, "Z")?;
    let (a, b) = crate::la::extremal_eigenvalues(&z, false).map_err(|e| LawError::Numerics(e.to_string()))?;
    ky_fan_k(a, b, p).map_err(|e| LawError::Numerics(e.to_string()))
}

fn furuta_rev_jensen_hyp(inst: &LawInstance) -> Result<(), String> {
    pd_role(inst, "Z")?;
    unit_role(inst, "h")?;
    let p = inst.scalar("p").map_err(|e| e.to_string())?;
    if (0.0..=1.0).contains(&p) {
        return Err(format!("exponent must satisfy p > 1 or p < 0, got {p}"));
    }
    Ok(())
}

fn furuta_rev_jensen_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let z = inst.mat("Z")?;
    let h = inst.cvec("h")?;
    let p = inst.scalar("p")?;
    let k = k_of_z(inst, p)?;
    let zp = power_of(z, p)?;
    let form = real_part(quad_form(z, h), "⟨h,Zh⟩")?;
    let form_p = real_part(quad_form(&zp, h), "⟨h,Z^p h⟩")?;
    Ok(vec![ComparedPair::new(
        "reverse-jensen",
        form_p,
        k * form.powf(p),
    )])
}

fn furuta_rev_jensen_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let p = if rng.f64_01() < 0.5 {
        rng.uniform(1.1, 4.0)
    } else {
        rng.uniform(-2.5, -0.3)
    };
    let z = gen_psd_with(&mut rng, dim, 0.25, 4.0);
    let h = gen_unit(&mut rng, dim);
    LawInstance::new("L-FURUTA-REV-JENSEN")
        .with_matrix("Z", z)
        .with_vector("h", h)
        .with_scalar("p", p)
        .with_provenance(provenance("L-FURUTA-REV-JENSEN", dim, seed))
}

fn furuta_rev_jensen_bound(inst: &LawInstance) -> Result<f64, LawError> {
    k_of_z(inst, inst.scalar("p")?)
}

pub(super) const FURUTA_REV_JENSEN: LawDefinition = LawDefinition {
    id: "L-FURUTA-REV-JENSEN",
    mode: ComparisonMode::Scalar,
    summary: "reverse power Jensen: ⟨h,Z^p h⟩ ≤ K(a,b,p)·⟨h,Zh⟩^p for Z > 0, p > 1 or p < 0",
    roles: RoleSpec {
        matrices: &["Z"],
        vectors: &["h"],
        scalars: &["p"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: furuta_rev_jensen_hyp,
    evaluate: furuta_rev_jensen_eval,
    generate: furuta_rev_jensen_gen,
    bound: Some(furuta_rev_jensen_bound),
};

// --- operator norm reverse with K(a,b,p) ------------------------------------

fn fst_opnorm_hyp(inst: &LawInstance) -> Result<(), String> {
    psd_role(inst, "A")?;
    pd_role(inst, "Z")?;
    exponent_above_one(inst)
}

fn fst_opnorm_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let p = inst.scalar("p")?;
    let k = k_of_z(inst, p)?;
    let (aza_p, apzpap, _) = araki_operands(inst, p)?;
    Ok(vec![ComparedPair::new(
        "opnorm",
        operator_norm(&apzpap),
        k * operator_norm(&aza_p),
    )])
}

fn fst_opnorm_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let p = rng.uniform(1.1, 3.5);
    let a = gen_psd_with(&mut rng, dim, 0.0, 2.0);
    let z = gen_psd_with(&mut rng, dim, 0.25, 3.0);
    LawInstance::new("L-FST-OPNORM")
        .with_matrix("A", a)
        .with_matrix("Z", z)
        .with_scalar("p", p)
        .with_provenance(provenance("L-FST-OPNORM", dim, seed))
}

fn fst_opnorm_bound(inst: &LawInstance) -> Result<f64, LawError> {
    k_of_z(inst, inst.scalar("p")?)
}

pub(super) const FST_OPNORM: LawDefinition = LawDefinition {
    id: "L-FST-OPNORM",
    mode: ComparisonMode::Scalar,
    summary: "operator norm reverse: ‖A^pZ^pA^p‖∞ ≤ K(a,b,p)·‖(AZA)^p‖∞ for A ≥ 0, Z > 0, p > 1",
    roles: RoleSpec {
        matrices: &["A", "Z"],
        scalars: &["p"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: fst_opnorm_hyp,
    evaluate: fst_opnorm_eval,
    generate: fst_opnorm_gen,
    bound: Some(fst_opnorm_bound),
};

// --- two-sided singular value reverse with K(a,b,p) --------------------------

fn araki_rev_sv_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let p = inst.scalar("p")?;
    let k = k_of_z(inst, p)?;
    let (aza_p, apzpap, _) = araki_operands(inst, p)?;
    let lhs = crate::la::singular_values(&apzpap);
    let rhs = crate::la::singular_values(&aza_p);
    let mut pairs = Vec::with_capacity(2 * lhs.len());
    for (j, (&m, &r)) in lhs.values().iter().zip(rhs.values().iter()).enumerate() {
        pairs.push(ComparedPair::new(format!("upper[{j}]"), m, k * r));
        pairs.push(ComparedPair::new(format!("lower[{j}]"), r / k, m));
    }
    Ok(pairs)
}

fn araki_rev_sv_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let p = rng.uniform(1.1, 3.5);
    let a = gen_psd_with(&mut rng, dim, 0.0, 2.0);
    let z = gen_psd_with(&mut rng, dim, 0.25, 3.0);
    LawInstance::new("L-ARAKI-REV-SV")
        .with_matrix("A", a)
        .with_matrix("Z", z)
        .with_scalar("p", p)
        .with_provenance(provenance("L-ARAKI-REV-SV", dim, seed))
}

pub(super) const ARAKI_REV_SV: LawDefinition = LawDefinition {
    id: "L-ARAKI-REV-SV",
    mode: ComparisonMode::PerSingularValue,
    summary: "two-sided power reverse: (1/K)·μ_j((AZA)^p) ≤ μ_j(A^pZ^pA^p) ≤ K·μ_j((AZA)^p)",
    roles: RoleSpec {
        matrices: &["A", "Z"],
        scalars: &["p"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: fst_opnorm_hyp,
    evaluate: araki_rev_sv_eval,
    generate: araki_rev_sv_gen,
    bound: Some(fst_opnorm_bound),
};

// --- additive trace reverse with C(a,b,p) ------------------------------------

fn c_of_z(inst: &LawInstance, p: f64) -> Result<f64, LawError> {
    let z = psd_of(inst, "Z")?;
    let (a, b) = crate::la::extremal_eigenvalues(&z, false).map_err(|e| LawError::Numerics(e.to_string()))?;
    furuta_c(a, b.max(0.0), p).map_err(|e| LawError::Numerics(e.to_string()))
}

fn furuta_trace_hyp(inst: &LawInstance) -> Result<(), String> {
    psd_role(inst, "A")?;
    psd_role(inst, "Z")?;
    exponent_above_one(inst)
}

fn furuta_trace_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let p = inst.scalar("p")?;
    let c = c_of_z(inst, p)?;
    let (aza_p, apzpap, a2p) = araki_operands(inst, p)?;
    let t_ap = real_part(apzpap.trace(), "Tr A^pZ^pA^p")?;
    let t_aza = real_part(aza_p.trace(), "Tr (AZA)^p")?;
    let t_a2p = real_part(a2p.trace(), "Tr A^{2p}")?;
    Ok(vec![ComparedPair::new(
        "trace",
        t_ap - t_aza,
        c * t_a2p,
    )])
}

fn furuta_trace_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let p = rng.uniform(1.1, 3.5);
    let a = gen_psd_with(&mut rng, dim, 0.0, 2.0);
    let z = gen_psd_with(&mut rng, dim, 0.0, 3.0);
    LawInstance::new("L-FURUTA-TRACE")
        .with_matrix("A", a)
        .with_matrix("Z", z)
        .with_scalar("p", p)
        .with_provenance(provenance("L-FURUTA-TRACE", dim, seed))
}

pub(super) const FURUTA_TRACE: LawDefinition = LawDefinition {
    id: "L-FURUTA-TRACE",
    mode: ComparisonMode::Scalar,
    summary: "additive trace reverse: Tr A^pZ^pA^p − Tr (AZA)^p ≤ C(a,b,p)·Tr A^{2p} for p > 1",
    roles: RoleSpec {
        matrices: &["A", "Z"],
        scalars: &["p"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: furuta_trace_hyp,
    evaluate: furuta_trace_eval,
    generate: furuta_trace_gen,
    bound: None,
};

// --- additive symmetric norm reverse per Ky Fan k-norm ------------------------

fn furuta_symnorm_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let p = inst.scalar("p")?;
    let c = c_of_z(inst, p)?;
    let (aza_p, apzpap, a2p) = araki_operands(inst, p)?;
    let lhs = ky_fan_profile(&apzpap);
    let base = ky_fan_profile(&aza_p);
    let add = ky_fan_profile(&a2p);
    Ok(lhs
        .iter()
        .zip(base.iter().zip(add.iter()))
        .enumerate()
        .map(|(k, (&l, (&b, &a)))| ComparedPair::new(format!("kyfan[{}]", k + 1), l, b + c * a))
        .collect())
}

pub(super) const FURUTA_SYMNORM: LawDefinition = LawDefinition {
    id: "L-FURUTA-SYMNORM",
    mode: ComparisonMode::AllSymmetricNorms,
    summary: "additive symmetric norm reverse: ‖A^pZ^pA^p‖ − ‖(AZA)^p‖ ≤ C(a,b,p)·‖A^{2p}‖ per Ky Fan k-norm, p > 1",
    roles: RoleSpec {
        matrices: &["A", "Z"],
        scalars: &["p"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: furuta_trace_hyp,
    evaluate: furuta_symnorm_eval,
    generate: furuta_symnorm_gen,
    bound: None,
};

fn furuta_symnorm_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let p = rng.uniform(1.1, 3.5);
    let a = gen_psd_with(&mut rng, dim, 0.0, 2.0);
    let z = gen_psd_with(&mut rng, dim, 0.0, 3.0);
    LawInstance::new("L-FURUTA-SYMNORM")
        .with_matrix("A", a)
        .with_matrix("Z", z)
        .with_scalar("p", p)
        .with_provenance(provenance("L-FURUTA-SYMNORM", dim, seed))
}

// --- commuting projection trace: Tr FX^pF ≤ Tr FY^pF --------------------------

fn proj_trace_power_hyp(inst: &LawInstance) -> Result<(), String> {
    let x = psd_role(inst, "X")?;
    psd_role(inst, "Y")?;
    let f = projection_role(inst, "F")?;
    // X ≤ Y in the PSD order.
    let diff = ComplexMatrix::new(
        inst.mat("Y").map_err(|e| e.to_string())?.dm() - inst.mat("X").map_err(|e| e.to_string())?.dm(),
    )
    .map_err(|e| e.to_string())?;
    let dh = HermitianMatrix::symmetrize(&diff).map_err(|e| format!("Y − X is not Hermitian: {e}"))?;
    PsdMatrix::new(dh).map_err(|e| format!("Y does not dominate X: {e}"))?;
    // F must commute with X.
    let fx = f.matrix().dm() * x.matrix().dm();
    let xf = x.matrix().dm() * f.matrix().dm();
    let defect = (&fx - &xf).iter().fold(0.0f64, |m, z| m.max(z.norm()));
    let tol = crate::structure::COMMUTE_TOL * x.matrix().scale() * x.dim() as f64;
    if defect > tol {
        return Err(format!("F and X do not commute: defect {defect:.3e}"));
    }
    exponent_above_one(inst)
}

fn proj_trace_power_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let p = inst.scalar("p")?;
    let f = inst.mat("F")?;
    let xp = power_of(inst.mat("X")?, p)?;
    let yp = power_of(inst.mat("Y")?, p)?;
    let lhs = real_part((f.dm() * xp.dm() * f.dm()).trace(), "Tr FX^pF")?;
    let rhs = real_part((f.dm() * yp.dm() * f.dm()).trace(), "Tr FY^pF")?;
    Ok(vec![ComparedPair::new("trace", lhs, rhs)])
}

fn proj_trace_power_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let p = rng.uniform(1.1, 3.5);
    let u = haar_unitary(dim, &mut rng);
    let spectrum: Vec<f64> = (0..dim).map(|_| rng.uniform(0.0, 2.0)).collect();
    let x = realize_in_basis(&u, &spectrum);
    // F projects onto a subset of the same eigenbasis, so FX = XF exactly.
    let rank = 1 + rng.below(dim);
    let mut indicator = vec![0.0; dim];
    for s in indicator.iter_mut().take(rank) {
        *s = 1.0;
    }
    let f = realize_in_basis(&u, &indicator);
    let bump = gen_psd_with(&mut rng, dim, 0.0, 1.5);
    let y = ComplexMatrix::new(x.dm() + bump.dm()).expect("finite");
    LawInstance::new("L-PROJ-TRACE-POWER")
        .with_matrix("X", x)
        .with_matrix("Y", y)
        .with_matrix("F", f)
        .with_scalar("p", p)
        .with_provenance(provenance("L-PROJ-TRACE-POWER", dim, seed))
}

pub(super) const PROJ_TRACE_POWER: LawDefinition = LawDefinition {
    id: "L-PROJ-TRACE-POWER",
    mode: ComparisonMode::Scalar,
    summary: "commuting projection trace: Tr FX^pF ≤ Tr FY^pF for 0 ≤ X ≤ Y, FX = XF, p > 1",
    roles: RoleSpec {
        matrices: &["X", "Y", "F"],
        scalars: &["p"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: proj_trace_power_hyp,
    evaluate: proj_trace_power_eval,
    generate: proj_trace_power_gen,
    bound: None,
};

// --- additive operator norm reverse -------------------------------------------

fn add_rev_opnorm_hyp(inst: &LawInstance) -> Result<(), String> {
    psd_role(inst, "A")?;
    pd_role(inst, "Z")?;
    Ok(())
}

fn add_rev_opnorm_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let a = inst.mat("A")?;
    let z = inst.mat("Z")?;
    let zp = psd_of(inst, "Z")?;
    let (sa, sb) = crate::la::extremal_eigenvalues(&zp, false).map_err(|e| LawError::Numerics(e.to_string()))?;
    let bound = additive_reverse_bound(sa, sb.max(0.0)).map_err(|e| LawError::Numerics(e.to_string()))?;
    let az = a * z;
    let lhs = operator_norm(&az) - crate::la::spectral_radius(&az);
    Ok(vec![ComparedPair::new(
        "additive",
        lhs,
        bound * operator_norm(a),
    )])
}

fn add_rev_opnorm_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let a = gen_psd_with(&mut rng, dim, 0.0, 2.0);
    let z = gen_psd_with(&mut rng, dim, 0.2, 3.0);
    LawInstance::new("L-ADD-REV-OPNORM")
        .with_matrix("A", a)
        .with_matrix("Z", z)
        .with_provenance(provenance("L-ADD-REV-OPNORM", dim, seed))
}

pub(super) const ADD_REV_OPNORM: LawDefinition = LawDefinition {
    id: "L-ADD-REV-OPNORM",
    mode: ComparisonMode::Scalar,
    summary: "additive operator norm reverse: ‖AZ‖∞ − ρ(AZ) ≤ (a−b)²/(4(a+b))·‖A‖∞",
    roles: RoleSpec {
        matrices: &["A", "Z"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: add_rev_opnorm_hyp,
    evaluate: add_rev_opnorm_eval,
    generate: add_rev_opnorm_gen,
    bound: None,
};

// --- scalar additive reverse: ⟨h,Z^p h⟩ − ⟨h,Zh⟩^p ≤ C(a,b,p) -----------------

fn furuta_scalar_hyp(inst: &LawInstance) -> Result<(), String> {
    psd_role(inst, "Z")?;
    unit_role(inst, "h")?;
    exponent_above_one(inst)
}

fn furuta_scalar_eval(inst: &LawInstance) -> Result<Vec<ComparedPair>, LawError> {
    let z = inst.mat("Z")?;
    let h = inst.cvec("h")?;
    let p = inst.scalar("p")?;
    let c = c_of_z(inst, p)?;
    let zp = power_of(z, p)?;
    let form = real_part(quad_form(z, h), "⟨h,Zh⟩")?.max(0.0);
    let form_p = real_part(quad_form(&zp, h), "⟨h,Z^p h⟩")?;
    Ok(vec![ComparedPair::new(
        "additive-jensen",
        form_p - form.powf(p),
        c,
    )])
}

fn furuta_scalar_gen(dim: usize, seed: u64) -> LawInstance {
    let mut rng = Stream::new(seed);
    let p = rng.uniform(1.1, 4.0);
    let z = gen_psd_with(&mut rng, dim, 0.0, 3.0);
    let h = gen_unit(&mut rng, dim);
    LawInstance::new("L-FURUTA-SCALAR")
        .with_matrix("Z", z)
        .with_vector("h", h)
        .with_scalar("p", p)
        .with_provenance(provenance("L-FURUTA-SCALAR", dim, seed))
}

pub(super) const FURUTA_SCALAR: LawDefinition = LawDefinition {
    id: "L-FURUTA-SCALAR",
    mode: ComparisonMode::Scalar,
    summary: "additive power Jensen reverse: ⟨h,Z^p h⟩ − ⟨h,Zh⟩^p ≤ C(a,b,p) for unit h, Z ≥ 0, p > 1",
    roles: RoleSpec {
        matrices: &["Z"],
        vectors: &["h"],
        scalars: &["p"],
        ..RoleSpec::NONE
    },
    dims: (2, 16),
    sequence_law: false,
    hypothesis: furuta_scalar_hyp,
    evaluate: furuta_scalar_eval,
    generate: furuta_scalar_gen,
    bound: None,
};
