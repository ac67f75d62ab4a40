//! Dense complex linear algebra: certified matrix types, decompositions,
//! spectral functional calculus, compressions.
//!
//! All structure checks use relative tolerances scaled by
//! `max(1, max|entry|)`. Eigenvalues and singular values are always reported
//! in decreasing order with multiplicities.

use nalgebra::{Complex, DMatrix, DVector};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub type C64 = Complex<f64>;

pub const HERMITIAN_TOL: f64 = 1e-9;
pub const PSD_TOL: f64 = 1e-9;
pub const PROJ_TOL: f64 = 1e-9;
pub const UNIT_TOL: f64 = 1e-9;
pub const RECON_TOL: f64 = 1e-8;
pub const RANK_TOL: f64 = 1e-10;

#[derive(Debug, Error)]
pub enum LaError {
    #[error("matrix is not square: {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix has a non-finite entry at ({row},{col})")]
    NonFinite { row: usize, col: usize },
    #[error("matrix is not Hermitian: asymmetry {defect:.3e} exceeds {tol:.3e}")]
    NotHermitian { defect: f64, tol: f64 },
    #[error("matrix is not positive semidefinite: min eigenvalue {min_eig:.6e}")]
    NotPsd { min_eig: f64 },
    #[error("matrix is not positive definite: min eigenvalue {min_eig:.6e}")]
    NotPositiveDefinite { min_eig: f64 },
    #[error("matrix is not a projection: defect {defect:.3e}")]
    NotProjection { defect: f64 },
    #[error("vector is not unit length: |norm - 1| = {defect:.3e}")]
    NotUnit { defect: f64 },
    #[error("frame columns are not orthonormal: defect {defect:.3e}")]
    NotOrthonormal { defect: f64 },
    #[error("negative power of a singular matrix: min eigenvalue {min_eig:.6e}")]
    SingularPower { min_eig: f64 },
    #[error("matrix is numerically zero; no nonzero eigenvalues")]
    ZeroMatrix,
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("eigenvalue iteration failed to converge")]
    NoConvergence,
}

/// Dense square complex matrix with finite entries.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    inner: DMatrix<C64>,
}

impl ComplexMatrix {
    pub fn new(inner: DMatrix<C64>) -> Result<Self, LaError> {
        if inner.nrows() != inner.ncols() {
            return Err(LaError::NonSquare {
                rows: inner.nrows(),
                cols: inner.ncols(),
            });
        }
        for i in 0..inner.nrows() {
            for j in 0..inner.ncols() {
                let z = inner[(i, j)];
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(LaError::NonFinite { row: i, col: j });
                }
            }
        }
        Ok(ComplexMatrix { inner })
    }

    pub fn identity(dim: usize) -> Self {
        ComplexMatrix {
            inner: DMatrix::identity(dim, dim),
        }
    }

    pub fn zeros(dim: usize) -> Self {
        ComplexMatrix {
            inner: DMatrix::zeros(dim, dim),
        }
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self, LaError> {
        let n = rows.len();
        let inner = DMatrix::from_fn(n, rows.first().map_or(0, Vec::len), |i, j| {
            C64::new(rows[i][j], 0.0)
        });
        ComplexMatrix::new(inner)
    }

    pub fn from_diagonal(values: &[C64]) -> Self {
        ComplexMatrix {
            inner: DMatrix::from_diagonal(&DVector::from_vec(values.to_vec())),
        }
    }

    pub fn from_real_diagonal(values: &[f64]) -> Self {
        Self::from_diagonal(&values.iter().map(|&v| C64::new(v, 0.0)).collect::<Vec<_>>())
    }

    pub fn dim(&self) -> usize {
        self.inner.nrows()
    }

    pub fn dm(&self) -> &DMatrix<C64> {
        &self.inner
    }

    pub fn into_dm(self) -> DMatrix<C64> {
        self.inner
    }

    pub fn adjoint(&self) -> ComplexMatrix {
        ComplexMatrix {
            inner: self.inner.adjoint(),
        }
    }

    pub fn trace(&self) -> C64 {
        self.inner.trace()
    }

    /// Entrywise max modulus.
    pub fn max_abs_entry(&self) -> f64 {
        self.inner.iter().fold(0.0, |m, z| m.max(z.norm()))
    }

    /// max(1, max|entry|), the reference scale for structure tolerances.
    pub fn scale(&self) -> f64 {
        self.max_abs_entry().max(1.0)
    }

    pub fn hermitian_defect(&self) -> f64 {
        let n = self.dim();
        let mut d = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                d = d.max((self.inner[(i, j)] - self.inner[(j, i)].conj()).norm());
            }
        }
        d
    }
}

impl std::ops::Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix {
            inner: &self.inner * &rhs.inner,
        }
    }
}

impl std::ops::Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix {
            inner: &self.inner + &rhs.inner,
        }
    }
}

impl std::ops::Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix {
            inner: &self.inner - &rhs.inner,
        }
    }
}

// Wire format: { "dim": n, "entries": [[[re,im], ...], ...] } row-major.
#[derive(Serialize, Deserialize)]
struct MatrixWire {
    dim: usize,
    entries: Vec<Vec<[f64; 2]>>,
}

impl Serialize for ComplexMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let n = self.dim();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let z = self.inner[(i, j)];
                        [z.re, z.im]
                    })
                    .collect()
            })
            .collect();
        MatrixWire { dim: n, entries }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = MatrixWire::deserialize(deserializer)?;
        if wire.entries.len() != wire.dim || wire.entries.iter().any(|r| r.len() != wire.dim) {
            return Err(D::Error::custom("matrix payload is not square"));
        }
        let inner = DMatrix::from_fn(wire.dim, wire.dim, |i, j| {
            C64::new(wire.entries[i][j][0], wire.entries[i][j][1])
        });
        ComplexMatrix::new(inner).map_err(D::Error::custom)
    }
}

/// Matrix certified Hermitian within `HERMITIAN_TOL * scale`.
#[derive(Debug, Clone)]
pub struct HermitianMatrix {
    base: ComplexMatrix,
}

impl HermitianMatrix {
    pub fn new(base: ComplexMatrix) -> Result<Self, LaError> {
        let defect = base.hermitian_defect();
        let tol = HERMITIAN_TOL * base.scale();
        if defect > tol {
            return Err(LaError::NotHermitian { defect, tol });
        }
        Ok(HermitianMatrix { base })
    }

    /// Exact symmetrization (M + M*) / 2, then certify.
    pub fn symmetrize(m: &ComplexMatrix) -> Result<Self, LaError> {
        let sym = DMatrix::from_fn(m.dim(), m.dim(), |i, j| {
            (m.dm()[(i, j)] + m.dm()[(j, i)].conj()) * C64::new(0.5, 0.0)
        });
        HermitianMatrix::new(ComplexMatrix::new(sym)?)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }
}

/// Hermitian matrix certified positive semidefinite (or definite when `strict`).
#[derive(Debug, Clone)]
pub struct PsdMatrix {
    base: HermitianMatrix,
    strict: bool,
}

impl PsdMatrix {
    pub fn new(base: HermitianMatrix) -> Result<Self, LaError> {
        Self::with_strictness(base, false)
    }

    pub fn new_strict(base: HermitianMatrix) -> Result<Self, LaError> {
        Self::with_strictness(base, true)
    }

    fn with_strictness(base: HermitianMatrix, strict: bool) -> Result<Self, LaError> {
        let decomp = spectral_decompose(&base)?;
        let min_eig = *decomp.eigenvalues().last().expect("dim >= 1");
        let tol = PSD_TOL * base.matrix().scale();
        if min_eig < -tol {
            return Err(LaError::NotPsd { min_eig });
        }
        if strict && min_eig < tol {
            return Err(LaError::NotPositiveDefinite { min_eig });
        }
        Ok(PsdMatrix { base, strict })
    }

    pub fn hermitian(&self) -> &HermitianMatrix {
        &self.base
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        self.base.matrix()
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }
}

/// Hermitian idempotent within `PROJ_TOL`, with its rank.
#[derive(Debug, Clone)]
pub struct Projection {
    base: HermitianMatrix,
    rank: usize,
}

impl Projection {
    pub fn new(base: HermitianMatrix) -> Result<Self, LaError> {
        let p = base.matrix();
        let p2 = p * p;
        let defect = (&p2 - p).max_abs_entry();
        if defect > PROJ_TOL {
            return Err(LaError::NotProjection { defect });
        }
        let tr = p.trace().re;
        let rank = tr.round() as usize;
        if (tr - rank as f64).abs() > PROJ_TOL * p.dim() as f64 {
            return Err(LaError::NotProjection {
                defect: (tr - rank as f64).abs(),
            });
        }
        Ok(Projection { base, rank })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        self.base.matrix()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }
}

/// Complex vector with norm 1 within `UNIT_TOL`.
#[derive(Debug, Clone)]
pub struct UnitVector {
    inner: DVector<C64>,
}

impl UnitVector {
    pub fn new(inner: DVector<C64>) -> Result<Self, LaError> {
        let defect = (inner.norm() - 1.0).abs();
        if defect > UNIT_TOL {
            return Err(LaError::NotUnit { defect });
        }
        Ok(UnitVector { inner })
    }

    pub fn normalize(v: DVector<C64>) -> Result<Self, LaError> {
        let n = v.norm();
        if n == 0.0 {
            return Err(LaError::NotUnit { defect: 1.0 });
        }
        UnitVector::new(v / C64::new(n, 0.0))
    }

    pub fn vector(&self) -> &DVector<C64> {
        &self.inner
    }

    pub fn dim(&self) -> usize {
        self.inner.len()
    }
}

/// Orthonormal column set spanning a subspace.
#[derive(Debug, Clone)]
pub struct Frame {
    cols: DMatrix<C64>,
}

impl Frame {
    pub fn new(cols: DMatrix<C64>) -> Result<Self, LaError> {
        let gram = cols.adjoint() * &cols;
        let k = cols.ncols();
        let mut defect = 0.0f64;
        for i in 0..k {
            for j in 0..k {
                let expect = if i == j { 1.0 } else { 0.0 };
                defect = defect.max((gram[(i, j)] - C64::new(expect, 0.0)).norm());
            }
        }
        if defect > UNIT_TOL {
            return Err(LaError::NotOrthonormal { defect });
        }
        Ok(Frame { cols })
    }

    pub fn columns(&self) -> &DMatrix<C64> {
        &self.cols
    }

    pub fn ambient_dim(&self) -> usize {
        self.cols.nrows()
    }

    pub fn subspace_dim(&self) -> usize {
        self.cols.ncols()
    }

    /// The orthogonal projection F F* onto the spanned subspace.
    pub fn projection(&self) -> Result<Projection, LaError> {
        let p = &self.cols * self.cols.adjoint();
        Projection::new(HermitianMatrix::symmetrize(&ComplexMatrix::new(p)?)?)
    }
}

/// Eigenvalues sorted descending with a unitary eigenvector basis.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    eigenvalues: Vec<f64>,
    basis: DMatrix<C64>,
}

impl SpectralDecomposition {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn basis(&self) -> &DMatrix<C64> {
        &self.basis
    }

    pub fn eigenvector(&self, k: usize) -> DVector<C64> {
        self.basis.column(k).into_owned()
    }

    /// U f(Λ) U* for a real function of the eigenvalues.
    pub fn apply(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let d = DMatrix::from_diagonal(&DVector::from_iterator(
            self.eigenvalues.len(),
            self.eigenvalues.iter().map(|&l| C64::new(f(l), 0.0)),
        ));
        let m = &self.basis * d * self.basis.adjoint();
        ComplexMatrix { inner: m }
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.apply(|l| l)
    }
}

/// Singular values sorted descending with multiplicities.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularValueProfile {
    values: Vec<f64>,
}

impl SingularValueProfile {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn largest(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }
}

fn sort_descending_with_basis(mut values: Vec<f64>, basis: DMatrix<C64>) -> (Vec<f64>, DMatrix<C64>) {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[j].partial_cmp(&values[i]).expect("finite eigenvalues"));
    let sorted_basis = DMatrix::from_fn(n, n, |r, c| basis[(r, order[c])]);
    let mut sorted = Vec::with_capacity(n);
    for &i in &order {
        sorted.push(values[i]);
    }
    values.clear();
    (sorted, sorted_basis)
}

/// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
pub fn spectral_decompose(a: &HermitianMatrix) -> Result<SpectralDecomposition, LaError> {
    let se = a.matrix().dm().clone().symmetric_eigen();
    let values: Vec<f64> = se.eigenvalues.iter().copied().collect();
    let (eigenvalues, basis) = sort_descending_with_basis(values, se.eigenvectors);
    Ok(SpectralDecomposition { eigenvalues, basis })
}

/// Singular values of a complex matrix, descending with multiplicities.
pub fn singular_values(x: &ComplexMatrix) -> SingularValueProfile {
    let svd = x.dm().clone().svd(false, false);
    let mut values: Vec<f64> = svd.singular_values.iter().copied().collect();
    values.sort_by(|a, b| b.partial_cmp(a).expect("finite singular values"));
    SingularValueProfile { values }
}

/// |X| = (X*X)^{1/2}, computed from the SVD so small singular values keep
/// full absolute accuracy.
pub fn polar_absolute(x: &ComplexMatrix) -> Result<PsdMatrix, LaError> {
    let svd = x.dm().clone().svd(false, true);
    let v_t = svd.v_t.expect("requested");
    let sigma = DMatrix::from_diagonal(&DVector::from_iterator(
        svd.singular_values.len(),
        svd.singular_values.iter().map(|&s| C64::new(s, 0.0)),
    ));
    let abs = v_t.adjoint() * sigma * v_t;
    PsdMatrix::new(HermitianMatrix::symmetrize(&ComplexMatrix::new(abs)?)?)
}

/// Spectral calculus power A^p. Negative eigenvalue dust within tolerance is
/// clamped to zero before powering; negative powers require a strictly
/// positive spectrum.
pub fn matrix_power(a: &PsdMatrix, p: f64) -> Result<PsdMatrix, LaError> {
    let decomp = spectral_decompose(a.hermitian())?;
    let tol = PSD_TOL * a.matrix().scale();
    let min_eig = *decomp.eigenvalues().last().expect("dim >= 1");
    if p < 0.0 && min_eig < tol {
        return Err(LaError::SingularPower { min_eig });
    }
    let powered = decomp.apply(|l| {
        let l = if l < 0.0 { 0.0 } else { l };
        if l == 0.0 && p == 0.0 {
            1.0
        } else {
            l.powf(p)
        }
    });
    PsdMatrix::new(HermitianMatrix::symmetrize(&powered)?)
}

/// Compression F*AF of `a` onto the subspace spanned by the frame.
pub fn compression(a: &ComplexMatrix, frame: &Frame) -> Result<ComplexMatrix, LaError> {
    if frame.ambient_dim() != a.dim() {
        return Err(LaError::DimensionMismatch {
            left: a.dim(),
            right: frame.ambient_dim(),
        });
    }
    let c = frame.columns().adjoint() * a.dm() * frame.columns();
    ComplexMatrix::new(c)
}

/// Zero all off-diagonal entries.
pub fn diag_pinch(x: &ComplexMatrix) -> ComplexMatrix {
    let n = x.dim();
    ComplexMatrix {
        inner: DMatrix::from_fn(n, n, |i, j| if i == j { x.dm()[(i, j)] } else { C64::new(0.0, 0.0) }),
    }
}

/// Smallest projection S with XS = X (projection onto the row space).
pub fn support_projection(x: &ComplexMatrix) -> Result<Projection, LaError> {
    support_projection_with_tol(x, RANK_TOL)
}

pub fn support_projection_with_tol(x: &ComplexMatrix, rank_tol: f64) -> Result<Projection, LaError> {
    let n = x.dim();
    let svd = x.dm().clone().svd(false, true);
    let v_t = svd.v_t.expect("requested");
    let mu1 = svd.singular_values.iter().fold(0.0f64, |m, &s| m.max(s));
    let rank = svd
        .singular_values
        .iter()
        .filter(|&&s| s > rank_tol * mu1)
        .count();
    if rank == 0 {
        return Projection::new(HermitianMatrix::new(ComplexMatrix::zeros(n))?);
    }
    // nalgebra sorts singular values descending, so the first `rank` rows of
    // V^H span the row space.
    let vr = v_t.rows(0, rank).adjoint();
    let s = &vr * vr.adjoint();
    Projection::new(HermitianMatrix::symmetrize(&ComplexMatrix::new(s)?)?)
}

/// General complex spectrum via Schur triangularization.
pub fn eigenvalues_general(x: &ComplexMatrix) -> Result<Vec<C64>, LaError> {
    let n = x.dim();
    if n == 0 {
        return Ok(Vec::new());
    }
    let attempt = |eps: f64, iters: usize| -> Option<Vec<C64>> {
        x.dm()
            .clone()
            .try_schur(eps, iters)
            .map(|schur| {
                let (_, t) = schur.unpack();
                (0..n).map(|i| t[(i, i)]).collect()
            })
    };
    attempt(1e-14, 500 * n)
        .or_else(|| attempt(1e-10, 5000 * n))
        .ok_or(LaError::NoConvergence)
}

/// Max modulus of the eigenvalues (general complex spectrum).
pub fn spectral_radius(x: &ComplexMatrix) -> f64 {
    eigenvalues_general(x)
        .expect("Schur iteration converges at desk scale")
        .iter()
        .fold(0.0, |m, z| m.max(z.norm()))
}

/// Largest and smallest (optionally: smallest nonzero) eigenvalues of a PSD
/// matrix. The nonzero threshold is `rank_tol * lambda_1`.
pub fn extremal_eigenvalues(z: &PsdMatrix, nonzero_only: bool) -> Result<(f64, f64), LaError> {
    extremal_eigenvalues_with_tol(z, nonzero_only, RANK_TOL)
}

pub fn extremal_eigenvalues_with_tol(
    z: &PsdMatrix,
    nonzero_only: bool,
    rank_tol: f64,
) -> Result<(f64, f64), LaError> {
    let decomp = spectral_decompose(z.hermitian())?;
    let eigs = decomp.eigenvalues();
    let a = eigs[0];
    if !nonzero_only {
        return Ok((a, eigs[eigs.len() - 1]));
    }
    let threshold = rank_tol * a;
    let b = eigs.iter().rev().find(|&&l| l > threshold);
    match b {
        Some(&b) => Ok((a, b)),
        None => Err(LaError::ZeroMatrix),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn diag(values: &[f64]) -> ComplexMatrix {
        ComplexMatrix::from_real_diagonal(values)
    }

    #[test]
    fn rejects_non_square() {
        let m = DMatrix::from_row_slice(2, 3, &[c(1.0, 0.0); 6]);
        assert!(matches!(ComplexMatrix::new(m), Err(LaError::NonSquare { .. })));
    }

    #[test]
    fn rejects_non_finite() {
        let m = DMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(f64::NAN, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        assert!(matches!(ComplexMatrix::new(m), Err(LaError::NonFinite { row: 0, col: 1 })));
    }

    #[test]
    fn spectral_decompose_identity() {
        let h = HermitianMatrix::new(ComplexMatrix::identity(3)).unwrap();
        let d = spectral_decompose(&h).unwrap();
        assert_eq!(d.eigenvalues(), &[1.0, 1.0, 1.0]);
    }

    #[test]
    fn spectral_decompose_diagonal_sorts_descending() {
        let h = HermitianMatrix::new(diag(&[1.0, -2.0, 3.0])).unwrap();
        let d = spectral_decompose(&h).unwrap();
        assert_eq!(d.eigenvalues(), &[3.0, 1.0, -2.0]);
    }

    #[test]
    fn spectral_decompose_rank_one_projection() {
        // h ⊗ h for unit h has spectrum (1, 0, 0).
        let h = DVector::from_vec(vec![c(0.6, 0.0), c(0.0, 0.8), c(0.0, 0.0)]);
        let m = &h * h.adjoint();
        let hm = HermitianMatrix::symmetrize(&ComplexMatrix::new(m).unwrap()).unwrap();
        let d = spectral_decompose(&hm).unwrap();
        assert!((d.eigenvalues()[0] - 1.0).abs() < 1e-12);
        assert!(d.eigenvalues()[1].abs() < 1e-12);
        assert!(d.eigenvalues()[2].abs() < 1e-12);
    }

    #[test]
    fn spectral_decompose_rejects_non_hermitian() {
        let m = DMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert!(HermitianMatrix::new(ComplexMatrix::new(m).unwrap()).is_err());
    }

    #[test]
    fn singular_values_diagonal() {
        let sv = singular_values(&diag(&[3.0, -4.0, 0.0]));
        assert_eq!(sv.values(), &[4.0, 3.0, 0.0]);
    }

    #[test]
    fn singular_values_nilpotent() {
        // X*X = diag(0, 1) by hand, so the profile is (1, 0).
        let m = DMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        let sv = singular_values(&ComplexMatrix::new(m).unwrap());
        assert_eq!(sv.values(), &[1.0, 0.0]);
    }

    #[test]
    fn polar_absolute_examples() {
        let abs = polar_absolute(&diag(&[-2.0, 5.0])).unwrap();
        let got = singular_values(abs.matrix());
        assert!((got.values()[0] - 5.0).abs() < 1e-12);
        assert!((got.values()[1] - 2.0).abs() < 1e-12);

        // (X*X)^{1/2} of the nilpotent shift is diag(0, 1) by hand.
        let m = DMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        let abs = polar_absolute(&ComplexMatrix::new(m).unwrap()).unwrap();
        let expect = diag(&[0.0, 1.0]);
        assert!((abs.matrix() - &expect).max_abs_entry() < 1e-12);
    }

    #[test]
    fn polar_absolute_of_unitary_is_identity() {
        let theta = 0.7f64;
        let phase = C64::new(0.0, 1.3).exp();
        let u = DMatrix::from_row_slice(
            2,
            2,
            &[
                c(theta.cos(), 0.0) * phase,
                c(-theta.sin(), 0.0),
                c(theta.sin(), 0.0) * phase,
                c(theta.cos(), 0.0),
            ],
        );
        let abs = polar_absolute(&ComplexMatrix::new(u).unwrap()).unwrap();
        assert!((abs.matrix() - &ComplexMatrix::identity(2)).max_abs_entry() < 1e-12);
    }

    #[test]
    fn matrix_power_diagonal_cases() {
        let a = PsdMatrix::new(HermitianMatrix::new(diag(&[4.0, 9.0])).unwrap()).unwrap();
        let r = matrix_power(&a, 0.5).unwrap();
        assert!((r.matrix() - &diag(&[2.0, 3.0])).max_abs_entry() < 1e-12);

        let same = matrix_power(&a, 1.0).unwrap();
        assert!((same.matrix() - a.matrix()).max_abs_entry() < 1e-12);

        let b = PsdMatrix::new(HermitianMatrix::new(diag(&[2.0, 8.0])).unwrap()).unwrap();
        let inv = matrix_power(&b, -1.0).unwrap();
        assert!((inv.matrix() - &diag(&[0.5, 0.125])).max_abs_entry() < 1e-12);
    }

    #[test]
    fn matrix_power_rejects_singular_negative_power() {
        let a = PsdMatrix::new(HermitianMatrix::new(diag(&[1.0, 0.0])).unwrap()).unwrap();
        assert!(matches!(matrix_power(&a, -1.0), Err(LaError::SingularPower { .. })));
    }

    #[test]
    fn compression_examples() {
        let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
        let frame = Frame::new(DMatrix::from_row_slice(
            2,
            1,
            &[c(inv_sqrt2, 0.0), c(inv_sqrt2, 0.0)],
        ))
        .unwrap();

        // Identity compresses to the identity of the subspace dimension.
        let id = compression(&ComplexMatrix::identity(2), &frame).unwrap();
        assert!((id.dm()[(0, 0)] - c(1.0, 0.0)).norm() <= 1e-12);

        // diag(a, b) onto span{(1,1)/sqrt(2)} is the scalar (a+b)/2.
        let got = compression(&diag(&[3.0, 7.0]), &frame).unwrap();
        assert!((got.dm()[(0, 0)] - c(5.0, 0.0)).norm() < 1e-12);

        // Full-space identity frame is a no-op.
        let full = Frame::new(DMatrix::identity(2, 2)).unwrap();
        let a = diag(&[1.0, 2.0]);
        assert!((&compression(&a, &full).unwrap() - &a).max_abs_entry() < 1e-14);
    }

    #[test]
    fn compression_rejects_bad_frame() {
        let bad = Frame::new(DMatrix::from_row_slice(2, 1, &[c(1.0, 0.0), c(1.0, 0.0)]));
        assert!(matches!(bad, Err(LaError::NotOrthonormal { .. })));
    }

    #[test]
    fn diag_pinch_examples() {
        let m = ComplexMatrix::from_real_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        assert!((&diag_pinch(&m) - &diag(&[1.0, 4.0])).max_abs_entry() == 0.0);

        let d = diag(&[5.0, -1.0]);
        assert!((&diag_pinch(&d) - &d).max_abs_entry() == 0.0);

        let z = ComplexMatrix::from_real_rows(&[vec![0.0, 5.0], vec![7.0, 0.0]]).unwrap();
        assert!(diag_pinch(&z).max_abs_entry() == 0.0);
    }

    #[test]
    fn support_projection_examples() {
        let s = support_projection(&diag(&[0.0, 1.0, 2.0])).unwrap();
        assert_eq!(s.rank(), 2);
        assert!((s.matrix() - &diag(&[0.0, 1.0, 1.0])).max_abs_entry() < 1e-12);

        let z = support_projection(&ComplexMatrix::zeros(3)).unwrap();
        assert_eq!(z.rank(), 0);
        assert!(z.matrix().max_abs_entry() == 0.0);

        // Rank one h ⊗ g projects onto span{g}: X S = X.
        let h = DVector::from_vec(vec![c(1.0, 0.0), c(2.0, 0.0)]);
        let g = DVector::from_vec(vec![c(0.6, 0.0), c(0.0, -0.8)]);
        let x = ComplexMatrix::new(&h * g.adjoint()).unwrap();
        let s = support_projection(&x).unwrap();
        assert_eq!(s.rank(), 1);
        let xs = &x * s.matrix();
        assert!((&xs - &x).max_abs_entry() < 1e-9 * x.scale());
    }

    #[test]
    fn spectral_radius_examples() {
        assert!((spectral_radius(&diag(&[-3.0, 2.0])) - 3.0).abs() < 1e-12);

        let nilp = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert!(spectral_radius(&nilp) < 1e-10);

        let proj = diag(&[1.0, 1.0, 0.0]);
        assert!((spectral_radius(&proj) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn extremal_eigenvalue_examples() {
        let z = PsdMatrix::new(HermitianMatrix::new(diag(&[1.0, 2.0, 3.0])).unwrap()).unwrap();
        assert_eq!(extremal_eigenvalues(&z, false).unwrap(), (3.0, 1.0));

        let z = PsdMatrix::new(HermitianMatrix::new(diag(&[0.0, 2.0, 5.0])).unwrap()).unwrap();
        assert_eq!(extremal_eigenvalues(&z, true).unwrap(), (5.0, 2.0));

        let id = PsdMatrix::new(HermitianMatrix::new(ComplexMatrix::identity(2)).unwrap()).unwrap();
        assert_eq!(extremal_eigenvalues(&id, true).unwrap(), (1.0, 1.0));

        let zero = PsdMatrix::new(HermitianMatrix::new(ComplexMatrix::zeros(2)).unwrap()).unwrap();
        assert!(matches!(extremal_eigenvalues(&zero, true), Err(LaError::ZeroMatrix)));
    }

    #[test]
    fn matrix_json_round_trip_rejects_non_square() {
        let m = diag(&[1.0, 2.0]);
        let text = serde_json::to_string(&m).unwrap();
        let back: ComplexMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);

        let bad = r#"{"dim":2,"entries":[[[1.0,0.0]],[[0.0,0.0]]]}"#;
        assert!(serde_json::from_str::<ComplexMatrix>(bad).is_err());
    }
}
