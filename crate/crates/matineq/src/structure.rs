//! Generators and recognizers for the structured inputs the inequality
//! hypotheses require: Haar unitaries, random PSD and normal matrices,
//! monotone/antimonotone pairs, sum-symmetric matrices, the row-column
//! ratio, permutations and sorted rearrangements.
//!
//! Every generator is a pure function of (spec, seed): the same seed gives a
//! bit-identical object.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::la::{
    spectral_decompose, ComplexMatrix, Frame, HermitianMatrix, LaError, PsdMatrix, C64, RANK_TOL,
};
use crate::rng::Stream;

pub const NORMALITY_TOL: f64 = 1e-8;
pub const COMMUTE_TOL: f64 = 1e-8;
pub const SUM_SYMMETRY_TOL: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum StructureError {
    #[error("spectrum range [{lo}, {hi}] is invalid for this generator")]
    BadRange { lo: f64, hi: f64 },
    #[error("matrix is not normal: commutator defect {defect:.3e} exceeds {tol:.3e}")]
    NotNormal { defect: f64, tol: f64 },
    #[error("matrix has a negative entry at ({row},{col}): {value}")]
    NegativeEntry { row: usize, col: usize, value: f64 },
    #[error("matrix rows/columns are not sum-symmetric: defect {defect:.3e}")]
    NotSumSymmetric { defect: f64 },
    #[error("vector pair lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("vector pair required nonnegative but entry {value} found")]
    NegativeVectorEntry { value: f64 },
    #[error(transparent)]
    La(#[from] LaError),
}

/// Parameters of a random structured object; deterministic per seed.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GeneratorSpec {
    pub dim: usize,
    pub seed: u64,
    pub lo: f64,
    pub hi: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
}

impl GeneratorSpec {
    pub fn new(dim: usize, seed: u64, lo: f64, hi: f64) -> Self {
        GeneratorSpec {
            dim,
            seed,
            lo,
            hi,
            rank: None,
        }
    }

    pub fn with_rank(mut self, rank: usize) -> Self {
        self.rank = Some(rank);
        self
    }
}

/// Monotone / antimonotone orientation of a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Monotone,
    Antimonotone,
}

/// Outcome of monotone-pair recognition. `Both` is the constant case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    Monotone,
    Antimonotone,
    Both,
}

impl PairKind {
    pub fn admits(self, orientation: Orientation) -> bool {
        matches!(
            (self, orientation),
            (PairKind::Monotone, Orientation::Monotone)
                | (PairKind::Antimonotone, Orientation::Antimonotone)
                | (PairKind::Both, _)
        )
    }
}

/// Two Hermitian matrices realized as f(C), g(C) for a common Hermitian C,
/// stored as a common eigenbasis plus the two eigenvalue vectors.
#[derive(Debug, Clone)]
pub struct MonotonePair {
    basis: ComplexMatrix,
    a_values: Vec<f64>,
    b_values: Vec<f64>,
    orientation: Orientation,
}

impl MonotonePair {
    pub fn new(
        basis: ComplexMatrix,
        a_values: Vec<f64>,
        b_values: Vec<f64>,
        orientation: Orientation,
    ) -> Result<Self, StructureError> {
        if a_values.len() != b_values.len() {
            return Err(StructureError::LengthMismatch {
                left: a_values.len(),
                right: b_values.len(),
            });
        }
        for i in 0..a_values.len() {
            for j in 0..a_values.len() {
                let sign = (a_values[i] - a_values[j]) * (b_values[i] - b_values[j]);
                let ok = match orientation {
                    Orientation::Monotone => sign >= 0.0,
                    Orientation::Antimonotone => sign <= 0.0,
                };
                if !ok {
                    return Err(StructureError::NegativeVectorEntry { value: sign });
                }
            }
        }
        Ok(MonotonePair {
            basis,
            a_values,
            b_values,
            orientation,
        })
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn a_values(&self) -> &[f64] {
        &self.a_values
    }

    pub fn b_values(&self) -> &[f64] {
        &self.b_values
    }

    fn realize_one(&self, values: &[f64]) -> HermitianMatrix {
        let d = DMatrix::from_diagonal(&DVector::from_iterator(
            values.len(),
            values.iter().map(|&v| C64::new(v, 0.0)),
        ));
        let m = self.basis.dm() * d * self.basis.dm().adjoint();
        HermitianMatrix::symmetrize(&ComplexMatrix::new(m).expect("finite by construction"))
            .expect("symmetrization is Hermitian")
    }

    /// Realize (A, B) = (U diag(a) U*, U diag(b) U*).
    pub fn realize(&self) -> (HermitianMatrix, HermitianMatrix) {
        (self.realize_one(&self.a_values), self.realize_one(&self.b_values))
    }

    /// Realize as PSD matrices; requires nonnegative stored spectra.
    pub fn realize_psd(&self) -> Result<(PsdMatrix, PsdMatrix), StructureError> {
        let (a, b) = self.realize();
        Ok((PsdMatrix::new(a)?, PsdMatrix::new(b)?))
    }
}

/// Nonnegative matrix whose j-th row sum equals its j-th column sum.
#[derive(Debug, Clone)]
pub struct SumSymmetricMatrix {
    entries: DMatrix<f64>,
}

impl SumSymmetricMatrix {
    pub fn new(entries: DMatrix<f64>) -> Result<Self, StructureError> {
        check_nonnegative(&entries)?;
        let scale = entries.iter().fold(1.0f64, |m, &v| m.max(v.abs()));
        let n = entries.nrows();
        let mut defect = 0.0f64;
        for j in 0..n {
            let row: f64 = (0..n).map(|k| entries[(j, k)]).sum();
            let col: f64 = (0..n).map(|k| entries[(k, j)]).sum();
            defect = defect.max((row - col).abs());
        }
        if defect > SUM_SYMMETRY_TOL * scale * n as f64 {
            return Err(StructureError::NotSumSymmetric { defect });
        }
        Ok(SumSymmetricMatrix { entries })
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }
}

/// Two real vectors of equal length, optionally certified nonnegative.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VectorPair {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub nonnegative: bool,
}

impl VectorPair {
    pub fn new(a: Vec<f64>, b: Vec<f64>, nonnegative: bool) -> Result<Self, StructureError> {
        if a.len() != b.len() {
            return Err(StructureError::LengthMismatch {
                left: a.len(),
                right: b.len(),
            });
        }
        if nonnegative {
            if let Some(&v) = a.iter().chain(b.iter()).find(|v| **v < 0.0) {
                return Err(StructureError::NegativeVectorEntry { value: v });
            }
        }
        Ok(VectorPair { a, b, nonnegative })
    }
}

fn check_nonnegative(entries: &DMatrix<f64>) -> Result<(), StructureError> {
    for i in 0..entries.nrows() {
        for j in 0..entries.ncols() {
            if entries[(i, j)] < 0.0 {
                return Err(StructureError::NegativeEntry {
                    row: i,
                    col: j,
                    value: entries[(i, j)],
                });
            }
        }
    }
    Ok(())
}

fn complex_gaussian(dim: usize, rng: &mut Stream) -> DMatrix<C64> {
    DMatrix::from_fn(dim, dim, |_, _| {
        C64::new(rng.normal(), rng.normal()) * C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0)
    })
}

/// Haar-distributed unitary: QR of a complex Gaussian with the R-diagonal
/// phase correction.
pub fn haar_unitary(dim: usize, rng: &mut Stream) -> ComplexMatrix {
    let g = complex_gaussian(dim, rng);
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..dim {
        let d = r[(j, j)];
        let phase = if d.norm() == 0.0 { C64::new(1.0, 0.0) } else { d / C64::new(d.norm(), 0.0) };
        for i in 0..dim {
            q[(i, j)] *= phase;
        }
    }
    ComplexMatrix::new(q).expect("unitary is square and finite")
}

/// Random unit vector (normalized complex Gaussian).
pub fn random_unit_vector(dim: usize, rng: &mut Stream) -> DVector<C64> {
    loop {
        let v = DVector::from_fn(dim, |_, _| C64::new(rng.normal(), rng.normal()));
        let n = v.norm();
        if n > 1e-6 {
            return v / C64::new(n, 0.0);
        }
    }
}

/// Orthonormal frame spanning a random k-dimensional subspace.
pub fn random_frame(dim: usize, k: usize, rng: &mut Stream) -> Frame {
    assert!(k >= 1 && k <= dim);
    let u = haar_unitary(dim, rng);
    Frame::new(u.dm().columns(0, k).into_owned()).expect("columns of a unitary are orthonormal")
}

/// U diag(s) U* with Haar U and spectrum s uniform in the requested range.
pub fn gen_psd(spec: &GeneratorSpec) -> Result<PsdMatrix, StructureError> {
    if spec.lo < 0.0 || spec.hi < spec.lo {
        return Err(StructureError::BadRange {
            lo: spec.lo,
            hi: spec.hi,
        });
    }
    let mut rng = Stream::new(spec.seed);
    let rank = spec.rank.unwrap_or(spec.dim).min(spec.dim);
    let mut spectrum = vec![0.0; spec.dim];
    for s in spectrum.iter_mut().take(rank) {
        *s = rng.uniform(spec.lo, spec.hi);
    }
    let u = haar_unitary(spec.dim, &mut rng);
    let d = DMatrix::from_diagonal(&DVector::from_iterator(
        spec.dim,
        spectrum.iter().map(|&s| C64::new(s, 0.0)),
    ));
    let m = u.dm() * d * u.dm().adjoint();
    let h = HermitianMatrix::symmetrize(&ComplexMatrix::new(m)?)?;
    Ok(PsdMatrix::new(h)?)
}

/// U diag(z) U* with complex eigenvalues: real parts uniform in [lo, hi],
/// imaginary parts uniform in [-m, m] for m = max(|lo|, |hi|). With
/// `real_spectrum` the output is Hermitian.
pub fn gen_normal(spec: &GeneratorSpec, real_spectrum: bool) -> ComplexMatrix {
    let mut rng = Stream::new(spec.seed);
    let m = spec.lo.abs().max(spec.hi.abs());
    let spectrum: Vec<C64> = (0..spec.dim)
        .map(|_| {
            let re = rng.uniform(spec.lo, spec.hi);
            let im = if real_spectrum { 0.0 } else { rng.uniform(-m, m) };
            C64::new(re, im)
        })
        .collect();
    let u = haar_unitary(spec.dim, &mut rng);
    let d = DMatrix::from_diagonal(&DVector::from_vec(spectrum));
    let z = u.dm() * d * u.dm().adjoint();
    ComplexMatrix::new(z).expect("finite by construction")
}

/// Draw a random common eigenbasis and two spectra sorted concordantly
/// (monotone) or discordantly (antimonotone).
pub fn gen_monotone_pair(spec: &GeneratorSpec, orientation: Orientation) -> MonotonePair {
    let mut rng = Stream::new(spec.seed);
    let mut a_values: Vec<f64> = (0..spec.dim).map(|_| rng.uniform(spec.lo, spec.hi)).collect();
    let mut b_values: Vec<f64> = (0..spec.dim).map(|_| rng.uniform(spec.lo, spec.hi)).collect();
    a_values.sort_by(|x, y| x.partial_cmp(y).unwrap());
    match orientation {
        Orientation::Monotone => b_values.sort_by(|x, y| x.partial_cmp(y).unwrap()),
        Orientation::Antimonotone => b_values.sort_by(|x, y| y.partial_cmp(x).unwrap()),
    }
    let basis = haar_unitary(spec.dim, &mut rng);
    MonotonePair::new(basis, a_values, b_values, orientation).expect("sorted spectra satisfy the sign condition")
}

/// Joint eigenvalue data of a commuting Hermitian pair: A-eigenvalues are
/// grouped within `group_tol * spread`, and B is diagonalized inside each
/// eigenspace of A.
fn joint_spectrum(
    a: &HermitianMatrix,
    b: &HermitianMatrix,
    group_tol: f64,
) -> Result<Vec<(f64, f64)>, LaError> {
    let da = spectral_decompose(a)?;
    let n = da.eigenvalues().len();
    let spread = da.eigenvalues()[0] - da.eigenvalues()[n - 1];
    let gap = group_tol * spread.max(1e-300);

    let mut pairs = Vec::with_capacity(n);
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && da.eigenvalues()[end - 1] - da.eigenvalues()[end] <= gap {
            end += 1;
        }
        let k = end - start;
        let block_basis = da.basis().columns(start, k).into_owned();
        let b_block = block_basis.adjoint() * b.matrix().dm() * &block_basis;
        let bh = HermitianMatrix::symmetrize(&ComplexMatrix::new(b_block)?)?;
        let db = spectral_decompose(&bh)?;
        let a_rep = da.eigenvalues()[start..end].iter().sum::<f64>() / k as f64;
        for &bv in db.eigenvalues() {
            pairs.push((a_rep, bv));
        }
        start = end;
    }
    Ok(pairs)
}

/// Decide whether two Hermitian matrices form a monotone or antimonotone
/// pair. Non-commuting inputs return `None`. Ties in the A-spectrum impose
/// no constraint on B (within an eigenspace of A any B-values are accepted).
pub fn recognize_monotone_pair(a: &HermitianMatrix, b: &HermitianMatrix) -> Option<PairKind> {
    recognize_monotone_pair_with_tol(a, b, RANK_TOL)
}

pub fn recognize_monotone_pair_with_tol(
    a: &HermitianMatrix,
    b: &HermitianMatrix,
    group_tol: f64,
) -> Option<PairKind> {
    if a.dim() != b.dim() {
        return None;
    }
    let am = a.matrix().dm();
    let bm = b.matrix().dm();
    let commutator = am * bm - bm * am;
    let scale = (a.matrix().max_abs_entry() * b.matrix().max_abs_entry()).max(1.0);
    let defect = commutator.iter().fold(0.0f64, |m, z| m.max(z.norm()));
    if defect > COMMUTE_TOL * scale * a.dim() as f64 {
        return None;
    }

    let pairs = joint_spectrum(a, b, group_tol).ok()?;
    let spread = |vals: &dyn Fn(&(f64, f64)) -> f64| -> f64 {
        let lo = pairs.iter().map(vals).fold(f64::INFINITY, f64::min);
        let hi = pairs.iter().map(vals).fold(f64::NEG_INFINITY, f64::max);
        hi - lo
    };
    let tol = 1e-8 * spread(&|p: &(f64, f64)| p.0).max(1.0) * spread(&|p: &(f64, f64)| p.1).max(1.0);

    let mut monotone = true;
    let mut antimonotone = true;
    for i in 0..pairs.len() {
        for j in (i + 1)..pairs.len() {
            let sign = (pairs[i].0 - pairs[j].0) * (pairs[i].1 - pairs[j].1);
            if sign < -tol {
                monotone = false;
            }
            if sign > tol {
                antimonotone = false;
            }
        }
    }
    match (monotone, antimonotone) {
        (true, true) => Some(PairKind::Both),
        (true, false) => Some(PairKind::Monotone),
        (false, true) => Some(PairKind::Antimonotone),
        (false, false) => None,
    }
}

/// Entrywise squared moduli of a normal matrix; normality makes the result
/// sum-symmetric.
pub fn make_sum_symmetric_from(z: &ComplexMatrix) -> Result<SumSymmetricMatrix, StructureError> {
    let zs = z.dm().adjoint() * z.dm();
    let sz = z.dm() * z.dm().adjoint();
    let defect = (&zs - &sz).iter().fold(0.0f64, |m, w| m.max(w.norm()));
    let scale = z.max_abs_entry().powi(2).max(1.0);
    let tol = NORMALITY_TOL * scale * z.dim() as f64;
    if defect > tol {
        return Err(StructureError::NotNormal { defect, tol });
    }
    let entries = DMatrix::from_fn(z.dim(), z.dim(), |i, j| z.dm()[(i, j)].norm_sqr());
    SumSymmetricMatrix::new(entries)
}

/// Row-column ratio max_i (row_i sum / col_i sum) of a nonnegative matrix,
/// with the zero-column limit convention: a zero-sum column under a positive
/// row sum gives +infinity; an all-zero row/column pair contributes ratio 1.
pub fn rc_ratio(x: &DMatrix<f64>) -> Result<f64, StructureError> {
    check_nonnegative(x)?;
    let n = x.nrows();
    let mut rc = f64::NEG_INFINITY;
    for i in 0..n {
        let row: f64 = (0..n).map(|k| x[(i, k)]).sum();
        let col: f64 = (0..n).map(|k| x[(k, i)]).sum();
        let ratio = if col > 0.0 {
            row / col
        } else if row > 0.0 {
            f64::INFINITY
        } else {
            1.0
        };
        rc = rc.max(ratio);
    }
    Ok(rc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SortDirection {
    Up,
    Down,
}

/// Sorted permutation of a vector.
pub fn sort_rearrange(v: &[f64], direction: SortDirection) -> Vec<f64> {
    let mut out = v.to_vec();
    match direction {
        SortDirection::Up => out.sort_by(|a, b| a.partial_cmp(b).unwrap()),
        SortDirection::Down => out.sort_by(|a, b| b.partial_cmp(a).unwrap()),
    }
    out
}

/// Random permutation matrix, deterministic per seed.
pub fn gen_permutation(dim: usize, seed: u64) -> ComplexMatrix {
    let mut rng = Stream::new(seed);
    let mut sigma: Vec<usize> = (0..dim).collect();
    rng.shuffle(&mut sigma);
    let m = DMatrix::from_fn(dim, dim, |i, j| {
        if sigma[j] == i {
            C64::new(1.0, 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    ComplexMatrix::new(m).expect("permutation is square and finite")
}
