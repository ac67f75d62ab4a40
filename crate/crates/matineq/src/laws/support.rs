//! Shared helpers for hypothesis checks, two-sided evaluation and instance
//! generation across the law registry.

use nalgebra::{DMatrix, DVector};

use crate::constants::kantorovich_factor;
use crate::la::{
    extremal_eigenvalues, singular_values, spectral_decompose, ComplexMatrix, Frame,
    HermitianMatrix, Projection, PsdMatrix, UnitVector, C64,
};
use crate::laws::{ComparedPair, LawError, LawInstance};
use crate::norms::ky_fan_profile;
use crate::rng::Stream;
use crate::structure::{haar_unitary, random_frame, random_unit_vector, Orientation, PairKind};

pub const IMAG_TOL: f64 = 1e-9;

/// Sum of entrywise products in a canonical order (descending by value), so
/// equal product multisets sum to bit-identical floats regardless of the
/// pairing that produced them.
pub fn canonical_dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut prods: Vec<f64> = a.iter().zip(b.iter()).map(|(x, y)| x * y).collect();
    prods.sort_by(|x, y| y.partial_cmp(x).expect("finite products"));
    prods.iter().sum()
}

/// Real part of a theoretically-real quantity; errors when the imaginary
/// part is beyond roundoff.
pub fn real_part(z: C64, what: &str) -> Result<f64, LawError> {
    if z.im.abs() > IMAG_TOL * z.norm().max(1.0) {
        return Err(LawError::Numerics(format!(
            "{what} should be real, got imaginary part {:.3e}",
            z.im
        )));
    }
    Ok(z.re)
}

/// ⟨h, M h⟩ for a complex vector h.
pub fn quad_form(m: &ComplexMatrix, h: &DVector<C64>) -> C64 {
    h.dotc(&(m.dm() * h))
}

// ---------------------------------------------------------------------------
// hypothesis-side certifications returning human diagnostics
// ---------------------------------------------------------------------------

pub fn hermitian_role(inst: &LawInstance, role: &str) -> Result<HermitianMatrix, String> {
    let m = inst.mat(role).map_err(|e| e.to_string())?;
    HermitianMatrix::new(m.clone()).map_err(|e| format!("{role} is not Hermitian: {e}"))
}

pub fn psd_role(inst: &LawInstance, role: &str) -> Result<PsdMatrix, String> {
    let h = hermitian_role(inst, role)?;
    PsdMatrix::new(h).map_err(|e| format!("{role} is not positive semidefinite: {e}"))
}

pub fn pd_role(inst: &LawInstance, role: &str) -> Result<PsdMatrix, String> {
    let h = hermitian_role(inst, role)?;
    PsdMatrix::new_strict(h).map_err(|e| format!("{role} is not positive definite: {e}"))
}

pub fn unit_role(inst: &LawInstance, role: &str) -> Result<UnitVector, String> {
    let v = inst.cvec(role).map_err(|e| e.to_string())?;
    UnitVector::new(v.clone()).map_err(|e| format!("{role} is not a unit vector: {e}"))
}

pub fn projection_role(inst: &LawInstance, role: &str) -> Result<Projection, String> {
    let h = hermitian_role(inst, role)?;
    Projection::new(h).map_err(|e| format!("{role} is not a projection: {e}"))
}

pub fn frame_role(inst: &LawInstance, role: &str) -> Result<Frame, String> {
    let f = inst.frame(role).map_err(|e| e.to_string())?;
    Frame::new(f.cols.clone()).map_err(|e| format!("{role} is not an orthonormal frame: {e}"))
}

pub fn normality_defect(z: &ComplexMatrix) -> (f64, f64) {
    let zs = z.dm().adjoint() * z.dm();
    let sz = z.dm() * z.dm().adjoint();
    let defect = (&zs - &sz).iter().fold(0.0f64, |m, w| m.max(w.norm()));
    let tol = crate::structure::NORMALITY_TOL * z.max_abs_entry().powi(2).max(1.0) * z.dim() as f64;
    (defect, tol)
}

pub fn normal_role(inst: &LawInstance, role: &str) -> Result<ComplexMatrix, String> {
    let z = inst.mat(role).map_err(|e| e.to_string())?;
    let (defect, tol) = normality_defect(z);
    if defect > tol {
        return Err(format!(
            "{role} is not normal: commutator defect {defect:.3e} exceeds {tol:.3e}"
        ));
    }
    Ok(z.clone())
}

pub fn product_normal(inst: &LawInstance, left: &str, right: &str) -> Result<(), String> {
    let a = inst.mat(left).map_err(|e| e.to_string())?;
    let b = inst.mat(right).map_err(|e| e.to_string())?;
    let ab = a * b;
    let (defect, tol) = normality_defect(&ab);
    if defect > tol {
        return Err(format!(
            "product {left}{right} is not normal: defect {defect:.3e} exceeds {tol:.3e}"
        ));
    }
    Ok(())
}

pub fn product_psd(inst: &LawInstance, left: &str, right: &str) -> Result<(), String> {
    let a = inst.mat(left).map_err(|e| e.to_string())?;
    let b = inst.mat(right).map_err(|e| e.to_string())?;
    let ab = a * b;
    let defect = ab.hermitian_defect();
    if defect > crate::la::HERMITIAN_TOL * ab.scale() {
        return Err(format!(
            "product {left}{right} is not Hermitian: defect {defect:.3e}"
        ));
    }
    let h = HermitianMatrix::symmetrize(&ab).map_err(|e| e.to_string())?;
    PsdMatrix::new(h)
        .map(|_| ())
        .map_err(|e| format!("product {left}{right} is not positive semidefinite: {e}"))
}

pub fn commuting(inst: &LawInstance, left: &str, right: &str) -> Result<(), String> {
    let a = inst.mat(left).map_err(|e| e.to_string())?;
    let b = inst.mat(right).map_err(|e| e.to_string())?;
    let comm = a.dm() * b.dm() - b.dm() * a.dm();
    let defect = comm.iter().fold(0.0f64, |m, z| m.max(z.norm()));
    let tol = crate::structure::COMMUTE_TOL
        * (a.max_abs_entry() * b.max_abs_entry()).max(1.0)
        * a.dim() as f64;
    if defect > tol {
        return Err(format!(
            "{left} and {right} do not commute: defect {defect:.3e} exceeds {tol:.3e}"
        ));
    }
    Ok(())
}

/// (A, B) must be a Hermitian pair admitting the instance's orientation.
pub fn oriented_pair(inst: &LawInstance, left: &str, right: &str) -> Result<(), String> {
    let orientation = inst.orientation.ok_or("missing pair orientation")?;
    let a = hermitian_role(inst, left)?;
    let b = hermitian_role(inst, right)?;
    match crate::structure::recognize_monotone_pair(&a, &b) {
        None => Err(format!(
            "({left}, {right}) is not a monotone or antimonotone pair"
        )),
        Some(kind) if kind.admits(orientation) => Ok(()),
        Some(PairKind::Monotone) => Err(format!(
            "({left}, {right}) is monotone but the instance claims antimonotone"
        )),
        Some(PairKind::Antimonotone) => Err(format!(
            "({left}, {right}) is antimonotone but the instance claims monotone"
        )),
        Some(PairKind::Both) => unreachable!("Both admits every orientation"),
    }
}

/// Real sequences forming a monotone (or antimonotone) pair in the vector
/// sense; optionally nonnegative.
pub fn sequence_pair(
    inst: &LawInstance,
    left: &str,
    right: &str,
    orientation: Orientation,
    nonnegative: bool,
) -> Result<(), String> {
    let a = inst.seq(left).map_err(|e| e.to_string())?;
    let b = inst.seq(right).map_err(|e| e.to_string())?;
    if nonnegative {
        if let Some(v) = a.iter().chain(b.iter()).find(|v| **v < 0.0) {
            return Err(format!("sequences ({left}, {right}) must be nonnegative, got {v}"));
        }
    }
    for i in 0..a.len() {
        for j in 0..a.len() {
            let sign = (a[i] - a[j]) * (b[i] - b[j]);
            let ok = match orientation {
                Orientation::Monotone => sign >= 0.0,
                Orientation::Antimonotone => sign <= 0.0,
            };
            if !ok {
                return Err(format!(
                    "sequences ({left}, {right}) violate the {orientation:?} sign condition at ({i}, {j})"
                ));
            }
        }
    }
    Ok(())
}

/// Positive sequences throughout.
pub fn positive_sequence(inst: &LawInstance, role: &str) -> Result<(), String> {
    let s = inst.seq(role).map_err(|e| e.to_string())?;
    match s.iter().find(|v| **v <= 0.0) {
        Some(v) => Err(format!("sequence {role} must be positive, got {v}")),
        None => Ok(()),
    }
}

/// Kantorovich factor from the spectrum of a PSD role.
pub fn k1_of(inst: &LawInstance, role: &str, nonzero_only: bool) -> Result<f64, LawError> {
    let z = PsdMatrix::new(
        HermitianMatrix::new(inst.mat(role)?.clone())
            .map_err(|e| LawError::Numerics(e.to_string()))?,
    )
    .map_err(|e| LawError::Numerics(e.to_string()))?;
    let (a, b) = extremal_eigenvalues(&z, nonzero_only).map_err(|e| LawError::Numerics(e.to_string()))?;
    kantorovich_factor(a, b).map_err(|e| LawError::Numerics(e.to_string()))
}

/// Extremal eigenvalues of a Hermitian role (largest, smallest).
pub fn extremal_of(inst: &LawInstance, role: &str) -> Result<(f64, f64), LawError> {
    let h = HermitianMatrix::new(inst.mat(role)?.clone())
        .map_err(|e| LawError::Numerics(e.to_string()))?;
    let d = spectral_decompose(&h).map_err(|e| LawError::Numerics(e.to_string()))?;
    let e = d.eigenvalues();
    Ok((e[0], e[e.len() - 1]))
}

// ---------------------------------------------------------------------------
// comparison-pair builders
// ---------------------------------------------------------------------------

/// (lhs, rhs) when monotone; swapped when antimonotone.
pub fn oriented(orientation: Orientation, label: &str, lhs: f64, rhs: f64) -> ComparedPair {
    match orientation {
        Orientation::Monotone => ComparedPair::new(label, lhs, rhs),
        Orientation::Antimonotone => ComparedPair::new(label, rhs, lhs),
    }
}

/// Per-index pairs mu_j(lhs) <= factor * mu_j(rhs).
pub fn sv_pairs(lhs: &ComplexMatrix, rhs: &ComplexMatrix, factor: f64) -> Vec<ComparedPair> {
    let ml = singular_values(lhs);
    let mr = singular_values(rhs);
    ml.values()
        .iter()
        .zip(mr.values().iter())
        .enumerate()
        .map(|(j, (&l, &r))| ComparedPair::new(format!("mu[{j}]"), l, factor * r))
        .collect()
}

/// Ky Fan sweep pairs ‖lhs‖_(k) <= factor * ‖rhs‖_(k).
pub fn kyfan_pairs(lhs: &ComplexMatrix, rhs: &ComplexMatrix, factor: f64) -> Vec<ComparedPair> {
    let pl = ky_fan_profile(lhs);
    let pr = ky_fan_profile(rhs);
    pl.iter()
        .zip(pr.iter())
        .enumerate()
        .map(|(k, (&l, &r))| ComparedPair::new(format!("kyfan[{}]", k + 1), l, factor * r))
        .collect()
}

/// Loewner pairs: quadratic forms of both sides at the eigenvectors of
/// (rhs − lhs); the minimum slack equals the smallest eigenvalue of the
/// difference.
pub fn loewner_pairs(lhs: &ComplexMatrix, rhs: &ComplexMatrix) -> Result<Vec<ComparedPair>, LawError> {
    let diff = HermitianMatrix::symmetrize(&(rhs - lhs))
        .map_err(|e| LawError::Numerics(format!("Loewner difference not Hermitian: {e}")))?;
    let decomp = spectral_decompose(&diff).map_err(|e| LawError::Numerics(e.to_string()))?;
    let mut pairs = Vec::with_capacity(decomp.eigenvalues().len());
    for k in 0..decomp.eigenvalues().len() {
        let v = decomp.eigenvector(k);
        let l = real_part(quad_form(lhs, &v), "Loewner lhs quadratic form")?;
        let r = real_part(quad_form(rhs, &v), "Loewner rhs quadratic form")?;
        pairs.push(ComparedPair::new(format!("quadform[{k}]"), l, r));
    }
    Ok(pairs)
}

// ---------------------------------------------------------------------------
// generation helpers
// ---------------------------------------------------------------------------

pub fn gen_psd_with(rng: &mut Stream, dim: usize, lo: f64, hi: f64) -> ComplexMatrix {
    gen_psd_rank(rng, dim, lo, hi, dim)
}

pub fn gen_psd_rank(rng: &mut Stream, dim: usize, lo: f64, hi: f64, rank: usize) -> ComplexMatrix {
    let mut spectrum = vec![0.0; dim];
    for s in spectrum.iter_mut().take(rank.min(dim)) {
        *s = rng.uniform(lo, hi);
    }
    let u = haar_unitary(dim, rng);
    realize_in_basis(&u, &spectrum)
}

pub fn gen_hermitian_with(rng: &mut Stream, dim: usize, lo: f64, hi: f64) -> ComplexMatrix {
    let spectrum: Vec<f64> = (0..dim).map(|_| rng.uniform(lo, hi)).collect();
    let u = haar_unitary(dim, rng);
    realize_in_basis(&u, &spectrum)
}

pub fn gen_normal_with(rng: &mut Stream, dim: usize, radius: f64) -> ComplexMatrix {
    let spectrum: Vec<C64> = (0..dim)
        .map(|_| C64::new(rng.uniform(-radius, radius), rng.uniform(-radius, radius)))
        .collect();
    let u = haar_unitary(dim, rng);
    let d = DMatrix::from_diagonal(&DVector::from_vec(spectrum));
    let z = u.dm() * d * u.dm().adjoint();
    ComplexMatrix::new(z).expect("finite by construction")
}

/// U diag(spectrum) U*, exactly Hermitized.
pub fn realize_in_basis(u: &ComplexMatrix, spectrum: &[f64]) -> ComplexMatrix {
    let d = DMatrix::from_diagonal(&DVector::from_iterator(
        spectrum.len(),
        spectrum.iter().map(|&s| C64::new(s, 0.0)),
    ));
    let m = ComplexMatrix::new(u.dm() * d * u.dm().adjoint()).expect("finite by construction");
    HermitianMatrix::symmetrize(&m)
        .expect("symmetrization is Hermitian")
        .matrix()
        .clone()
}

/// Common-basis pair with spectra sorted concordantly or discordantly.
pub fn gen_pair_matrices(
    rng: &mut Stream,
    dim: usize,
    lo: f64,
    hi: f64,
    orientation: Orientation,
) -> (ComplexMatrix, ComplexMatrix) {
    let mut a: Vec<f64> = (0..dim).map(|_| rng.uniform(lo, hi)).collect();
    let mut b: Vec<f64> = (0..dim).map(|_| rng.uniform(lo, hi)).collect();
    a.sort_by(|x, y| x.partial_cmp(y).unwrap());
    match orientation {
        Orientation::Monotone => b.sort_by(|x, y| x.partial_cmp(y).unwrap()),
        Orientation::Antimonotone => b.sort_by(|x, y| y.partial_cmp(x).unwrap()),
    }
    let u = haar_unitary(dim, rng);
    (realize_in_basis(&u, &a), realize_in_basis(&u, &b))
}

/// Well-conditioned invertible matrix U diag([0.5, 2]) V*.
pub fn gen_invertible(rng: &mut Stream, dim: usize) -> ComplexMatrix {
    let u = haar_unitary(dim, rng);
    let v = haar_unitary(dim, rng);
    let d = DMatrix::from_diagonal(&DVector::from_iterator(
        dim,
        (0..dim).map(|_| C64::new(rng.uniform(0.5, 2.0), 0.0)),
    ));
    ComplexMatrix::new(u.dm() * d * v.dm().adjoint()).expect("finite by construction")
}

pub fn invert(m: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::new(
        m.dm()
            .clone()
            .try_inverse()
            .expect("generated matrices are well-conditioned"),
    )
    .expect("finite inverse")
}

pub fn gen_unit(rng: &mut Stream, dim: usize) -> DVector<C64> {
    random_unit_vector(dim, rng)
}

pub fn gen_frame_cols(rng: &mut Stream, dim: usize, k: usize) -> DMatrix<C64> {
    random_frame(dim, k, rng).columns().clone()
}

pub fn gen_projection_matrix(rng: &mut Stream, dim: usize, k: usize) -> ComplexMatrix {
    let f = random_frame(dim, k, rng);
    let p = f.columns() * f.columns().adjoint();
    HermitianMatrix::symmetrize(&ComplexMatrix::new(p).expect("finite"))
        .expect("projection is Hermitian")
        .matrix()
        .clone()
}

pub fn orientation_from(rng: &mut Stream) -> Orientation {
    if rng.f64_01() < 0.5 {
        Orientation::Monotone
    } else {
        Orientation::Antimonotone
    }
}
