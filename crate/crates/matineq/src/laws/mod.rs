//! The inequality registry: every law is a checkable record with hypothesis
//! validation, two-sided evaluation and slack reporting.
//!
//! A law compares in one of four modes:
//! * `Scalar`: one or more (lhs, rhs) real pairs;
//! * `PerSingularValue`: lhs and rhs singular value profiles index by index;
//! * `Loewner`: quadratic forms of both sides at the eigenvectors of the
//!   difference (the minimum slack is the smallest eigenvalue of rhs − lhs);
//! * `AllSymmetricNorms`: the complete Ky Fan sweep k = 1..n.
//!
//! A verdict holds iff `rhs − lhs >= −(rel·max(1,|lhs|,|rhs|) + abs)` at
//! every compared index.

mod cheb;
mod kant;
mod power;
mod support;

pub use support::canonical_dot;

use std::collections::BTreeMap;

use nalgebra::DVector;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::la::{ComplexMatrix, C64};
use crate::rng::derive_seed;
use crate::structure::Orientation;

#[derive(Debug, Error)]
pub enum LawError {
    #[error("unknown law id {0:?}")]
    UnknownLaw(String),
    #[error("law {law} does not support dimension {dim}")]
    UnsupportedDim { law: String, dim: usize },
    #[error("instance does not match the law shape: {0}")]
    ShapeMismatch(String),
    #[error("numerical contract violated: {0}")]
    Numerics(String),
}

/// Relative/absolute slop applied to every comparison.
#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq)]
pub struct TolerancePolicy {
    pub rel: f64,
    pub abs: f64,
}

impl Default for TolerancePolicy {
    fn default() -> Self {
        TolerancePolicy {
            rel: 1e-9,
            abs: 1e-12,
        }
    }
}

impl TolerancePolicy {
    pub fn margin(&self, lhs: f64, rhs: f64) -> f64 {
        let lhs = if lhs.is_finite() { lhs.abs() } else { 0.0 };
        let rhs = if rhs.is_finite() { rhs.abs() } else { 0.0 };
        self.rel * lhs.max(rhs).max(1.0) + self.abs
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComparisonMode {
    Scalar,
    PerSingularValue,
    Loewner,
    AllSymmetricNorms,
}

/// One compared index: the verdict requires lhs <= rhs within tolerance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComparedPair {
    pub label: String,
    pub lhs: f64,
    pub rhs: f64,
}

impl ComparedPair {
    pub fn new(label: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        ComparedPair {
            label: label.into(),
            lhs,
            rhs,
        }
    }

    pub fn slack(&self) -> f64 {
        self.rhs - self.lhs
    }
}

/// Where an instance came from; generated instances replay from (law, dim, seed).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    Generated { law: String, dim: usize, seed: u64 },
    File { path: String },
    Literal,
}

/// Rectangular complex block used for subspace frames.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameData {
    pub cols: nalgebra::DMatrix<C64>,
}

#[derive(Serialize, Deserialize)]
struct FrameWire {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<[f64; 2]>>,
}

impl Serialize for FrameData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let (r, c) = (self.cols.nrows(), self.cols.ncols());
        let entries = (0..r)
            .map(|i| {
                (0..c)
                    .map(|j| {
                        let z = self.cols[(i, j)];
                        [z.re, z.im]
                    })
                    .collect()
            })
            .collect();
        FrameWire {
            rows: r,
            cols: c,
            entries,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FrameData {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = FrameWire::deserialize(d)?;
        if wire.entries.len() != wire.rows || wire.entries.iter().any(|r| r.len() != wire.cols) {
            return Err(serde::de::Error::custom("frame payload shape mismatch"));
        }
        let cols = nalgebra::DMatrix::from_fn(wire.rows, wire.cols, |i, j| {
            C64::new(wire.entries[i][j][0], wire.entries[i][j][1])
        });
        Ok(FrameData { cols })
    }
}

fn serialize_cvec<S: serde::Serializer>(v: &DVector<C64>, s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for z in v.iter() {
        seq.serialize_element(&[z.re, z.im])?;
    }
    seq.end()
}

fn deserialize_cvec<'de, D: serde::Deserializer<'de>>(d: D) -> Result<DVector<C64>, D::Error> {
    let raw: Vec<[f64; 2]> = Vec::deserialize(d)?;
    Ok(DVector::from_iterator(
        raw.len(),
        raw.iter().map(|p| C64::new(p[0], p[1])),
    ))
}

mod cvec_map {
    use super::*;
    use serde::ser::SerializeMap;

    pub fn serialize<S: serde::Serializer>(
        map: &BTreeMap<String, DVector<C64>>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wrap<'a>(#[serde(serialize_with = "super::serialize_cvec")] &'a DVector<C64>);
        let mut m = s.serialize_map(Some(map.len()))?;
        for (k, v) in map {
            m.serialize_entry(k, &Wrap(v))?;
        }
        m.end()
    }

    pub fn deserialize<'de, D: serde::Deserializer<'de>>(
        d: D,
    ) -> Result<BTreeMap<String, DVector<C64>>, D::Error> {
        #[derive(Deserialize)]
        struct Wrap(#[serde(deserialize_with = "super::deserialize_cvec")] DVector<C64>);
        let raw: BTreeMap<String, Wrap> = BTreeMap::deserialize(d)?;
        Ok(raw.into_iter().map(|(k, v)| (k, v.0)).collect())
    }
}

/// A concrete input for one law: operands bound by role name.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LawInstance {
    pub law: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub matrices: BTreeMap<String, ComplexMatrix>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub frames: BTreeMap<String, FrameData>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty", with = "cvec_map")]
    pub vectors: BTreeMap<String, DVector<C64>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub sequences: BTreeMap<String, Vec<f64>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub scalars: BTreeMap<String, f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<Orientation>,
    pub provenance: Provenance,
}

impl LawInstance {
    pub fn new(law: &str) -> Self {
        LawInstance {
            law: law.to_string(),
            matrices: BTreeMap::new(),
            frames: BTreeMap::new(),
            vectors: BTreeMap::new(),
            sequences: BTreeMap::new(),
            scalars: BTreeMap::new(),
            orientation: None,
            provenance: Provenance::Literal,
        }
    }

    pub fn with_matrix(mut self, role: &str, m: ComplexMatrix) -> Self {
        self.matrices.insert(role.to_string(), m);
        self
    }

    pub fn with_frame(mut self, role: &str, cols: nalgebra::DMatrix<C64>) -> Self {
        self.frames.insert(role.to_string(), FrameData { cols });
        self
    }

    pub fn with_vector(mut self, role: &str, v: DVector<C64>) -> Self {
        self.vectors.insert(role.to_string(), v);
        self
    }

    pub fn with_sequence(mut self, role: &str, s: Vec<f64>) -> Self {
        self.sequences.insert(role.to_string(), s);
        self
    }

    pub fn with_scalar(mut self, role: &str, x: f64) -> Self {
        self.scalars.insert(role.to_string(), x);
        self
    }

    pub fn with_orientation(mut self, o: Orientation) -> Self {
        self.orientation = Some(o);
        self
    }

    pub fn with_provenance(mut self, p: Provenance) -> Self {
        self.provenance = p;
        self
    }

    pub fn mat(&self, role: &str) -> Result<&ComplexMatrix, LawError> {
        self.matrices
            .get(role)
            .ok_or_else(|| LawError::ShapeMismatch(format!("missing matrix role {role:?}")))
    }

    pub fn frame(&self, role: &str) -> Result<&FrameData, LawError> {
        self.frames
            .get(role)
            .ok_or_else(|| LawError::ShapeMismatch(format!("missing frame role {role:?}")))
    }

    pub fn cvec(&self, role: &str) -> Result<&DVector<C64>, LawError> {
        self.vectors
            .get(role)
            .ok_or_else(|| LawError::ShapeMismatch(format!("missing vector role {role:?}")))
    }

    pub fn seq(&self, role: &str) -> Result<&[f64], LawError> {
        self.sequences
            .get(role)
            .map(Vec::as_slice)
            .ok_or_else(|| LawError::ShapeMismatch(format!("missing sequence role {role:?}")))
    }

    pub fn scalar(&self, role: &str) -> Result<f64, LawError> {
        self.scalars
            .get(role)
            .copied()
            .ok_or_else(|| LawError::ShapeMismatch(format!("missing scalar role {role:?}")))
    }

    pub fn orientation_required(&self) -> Result<Orientation, LawError> {
        self.orientation
            .ok_or_else(|| LawError::ShapeMismatch("missing pair orientation".into()))
    }
}

/// Static role requirements of one law; used for shape validation.
#[derive(Debug, Clone, Copy)]
pub struct RoleSpec {
    pub matrices: &'static [&'static str],
    pub frames: &'static [&'static str],
    pub vectors: &'static [&'static str],
    pub sequences: &'static [&'static str],
    pub scalars: &'static [&'static str],
    pub needs_orientation: bool,
}

impl RoleSpec {
    pub const NONE: RoleSpec = RoleSpec {
        matrices: &[],
        frames: &[],
        vectors: &[],
        sequences: &[],
        scalars: &[],
        needs_orientation: false,
    };
}

/// Multiplicative constant extractor for laws carrying one.
pub type BoundFn = fn(&LawInstance) -> Result<f64, LawError>;

/// One registered inequality.
pub struct LawDefinition {
    pub id: &'static str,
    pub mode: ComparisonMode,
    /// One-line description printed by `list`.
    pub summary: &'static str,
    pub roles: RoleSpec,
    /// Inclusive range of supported dimensions (sequence lengths for
    /// sequence laws).
    pub dims: (usize, usize),
    pub sequence_law: bool,
    pub hypothesis: fn(&LawInstance) -> Result<(), String>,
    pub evaluate: fn(&LawInstance) -> Result<Vec<ComparedPair>, LawError>,
    pub generate: fn(usize, u64) -> LawInstance,
    /// Multiplicative constant of the bound, when the law has one; used by
    /// sharpness search.
    pub bound: Option<BoundFn>,
}

/// The full registry, in reading order.
pub fn registry() -> &'static [LawDefinition] {
    &REGISTRY
}

pub fn find(id: &str) -> Result<&'static LawDefinition, LawError> {
    REGISTRY
        .iter()
        .find(|d| d.id == id)
        .ok_or_else(|| LawError::UnknownLaw(id.to_string()))
}

static REGISTRY: [LawDefinition; 38] = [
    cheb::OPNORM_NORMAL,
    cheb::CHEB_VEC,
    cheb::FROB_CHEB,
    cheb::TRACE_CHEB,
    cheb::VONNEUMANN,
    cheb::HLP,
    cheb::RC,
    cheb::SUMSYM,
    cheb::PROJ_SV,
    cheb::DET_CHEB,
    cheb::DET_CHEB_REV,
    cheb::GRUSS_TRACE,
    cheb::GRUSS_NORMAL,
    cheb::VARCOV,
    kant::SV_KANT,
    kant::KANT_VEC,
    kant::OPNORM_RHO,
    kant::LOEWNER_AZA,
    kant::SV_KANT_REV,
    kant::SANDWICH,
    kant::SYMNORM_KANT,
    kant::SYMNORM_NORMAL,
    kant::PINCH,
    kant::COMMUTE_KANT,
    kant::REV_REARR,
    kant::CASSEL,
    kant::DRAGOMIR,
    kant::MOND_PECARIC,
    power::ARAKI,
    power::JENSEN_P,
    power::FURUTA_REV_JENSEN,
    power::FST_OPNORM,
    power::ARAKI_REV_SV,
    power::FURUTA_TRACE,
    power::FURUTA_SYMNORM,
    power::PROJ_TRACE_POWER,
    power::ADD_REV_OPNORM,
    power::FURUTA_SCALAR,
];

fn validate_shape(def: &LawDefinition, inst: &LawInstance) -> Result<(), LawError> {
    if inst.law != def.id {
        return Err(LawError::ShapeMismatch(format!(
            "instance is for law {:?}, not {:?}",
            inst.law, def.id
        )));
    }
    for role in def.roles.matrices {
        inst.mat(role)?;
    }
    for role in def.roles.frames {
        inst.frame(role)?;
    }
    for role in def.roles.vectors {
        inst.cvec(role)?;
    }
    for role in def.roles.sequences {
        inst.seq(role)?;
    }
    for role in def.roles.scalars {
        inst.scalar(role)?;
    }
    if def.roles.needs_orientation {
        inst.orientation_required()?;
    }

    // All operands must share a consistent ambient dimension.
    let mut dim: Option<usize> = None;
    let mut check_dim = |d: usize, what: &str| -> Result<(), LawError> {
        match dim {
            None => {
                dim = Some(d);
                Ok(())
            }
            Some(existing) if existing == d => Ok(()),
            Some(existing) => Err(LawError::ShapeMismatch(format!(
                "{what} has dimension {d}, expected {existing}"
            ))),
        }
    };
    for role in def.roles.matrices {
        check_dim(inst.mat(role)?.dim(), role)?;
    }
    for role in def.roles.vectors {
        check_dim(inst.cvec(role)?.len(), role)?;
    }
    for role in def.roles.frames {
        let f = inst.frame(role)?;
        check_dim(f.cols.nrows(), role)?;
        if f.cols.ncols() == 0 || f.cols.ncols() > f.cols.nrows() {
            return Err(LawError::ShapeMismatch(format!(
                "frame {role} spans {} of {} dimensions",
                f.cols.ncols(),
                f.cols.nrows()
            )));
        }
    }
    let mut seq_len: Option<usize> = None;
    for role in def.roles.sequences {
        let len = inst.seq(role)?.len();
        match seq_len {
            None => seq_len = Some(len),
            Some(existing) if existing == len => {}
            Some(existing) => {
                return Err(LawError::ShapeMismatch(format!(
                    "sequence {role} has length {len}, expected {existing}"
                )))
            }
        }
    }
    Ok(())
}

/// Evaluated outcome of one law on one instance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Verdict {
    pub law: String,
    pub hypothesis_ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<String>,
    pub pairs: Vec<ComparedPair>,
    #[serde(with = "crate::io::maybe_infinite")]
    pub slack: f64,
    /// None when the hypotheses failed (the comparison is undefined).
    pub holds: Option<bool>,
    pub tolerance: TolerancePolicy,
}

/// Validate shape, test hypotheses, then evaluate both sides.
pub fn check(
    def: &LawDefinition,
    inst: &LawInstance,
    tol: &TolerancePolicy,
) -> Result<Verdict, LawError> {
    validate_shape(def, inst)?;
    if let Err(diag) = (def.hypothesis)(inst) {
        return Ok(Verdict {
            law: def.id.to_string(),
            hypothesis_ok: false,
            diagnostics: Some(diag),
            pairs: Vec::new(),
            slack: f64::NAN,
            holds: None,
            tolerance: *tol,
        });
    }
    let pairs = (def.evaluate)(inst)?;
    let mut slack = f64::INFINITY;
    let mut holds = true;
    for p in &pairs {
        let s = p.slack();
        if s.is_nan() {
            return Err(LawError::Numerics(format!(
                "law {} produced NaN at {}",
                def.id, p.label
            )));
        }
        if s < slack {
            slack = s;
        }
        if s < -tol.margin(p.lhs, p.rhs) {
            holds = false;
        }
    }
    Ok(Verdict {
        law: def.id.to_string(),
        hypothesis_ok: true,
        diagnostics: None,
        pairs,
        slack,
        holds: Some(holds),
        tolerance: *tol,
    })
}

pub fn check_by_id(
    id: &str,
    inst: &LawInstance,
    tol: &TolerancePolicy,
) -> Result<Verdict, LawError> {
    check(find(id)?, inst, tol)
}

/// Deterministically generate an instance satisfying the law's hypotheses.
pub fn random_instance(id: &str, dim: usize, seed: u64) -> Result<LawInstance, LawError> {
    let def = find(id)?;
    if dim < def.dims.0 || dim > def.dims.1 {
        return Err(LawError::UnsupportedDim {
            law: id.to_string(),
            dim,
        });
    }
    Ok((def.generate)(dim, seed))
}

/// Replay key of a generated instance.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ReplayKey {
    pub law: String,
    pub dim: usize,
    pub seed: u64,
}

/// Aggregate of a verification batch.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub law: String,
    pub trials: u64,
    pub dims: Vec<usize>,
    pub violations: u64,
    pub hypothesis_failures: u64,
    #[serde(with = "crate::io::maybe_infinite")]
    pub min_slack: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub worst_instance: Option<ReplayKey>,
    pub tolerance: TolerancePolicy,
}

/// Split `trials` across `dims` (remainder to the smallest dim), generate
/// hypothesis-valid instances and aggregate the verdicts. Per-trial seeds are
/// derived from the master seed, so the report is independent of scheduling.
pub fn batch_verify(
    id: &str,
    trials: u64,
    dims: &[usize],
    master_seed: u64,
    tol: &TolerancePolicy,
) -> Result<Report, LawError> {
    let def = find(id)?;
    if dims.is_empty() || trials == 0 {
        return Err(LawError::ShapeMismatch(
            "batch_verify needs at least one dim and one trial".into(),
        ));
    }
    let mut sorted_dims = dims.to_vec();
    sorted_dims.sort_unstable();

    let base = trials / dims.len() as u64;
    let remainder = trials % dims.len() as u64;
    let smallest = sorted_dims[0];

    let mut violations = 0u64;
    let mut hypothesis_failures = 0u64;
    let mut min_slack = f64::INFINITY;
    let mut worst: Option<ReplayKey> = None;
    let mut trial_index = 0u64;

    for &dim in &sorted_dims {
        if dim < def.dims.0 || dim > def.dims.1 {
            return Err(LawError::UnsupportedDim {
                law: id.to_string(),
                dim,
            });
        }
        let count = base + if dim == smallest { remainder } else { 0 };
        for _ in 0..count {
            let trial_seed = derive_seed(master_seed, trial_index);
            trial_index += 1;

            // Generation is hypothesis-valid by construction; the retry loop
            // only guards against tolerance-edge flukes.
            let mut accepted = None;
            for attempt in 0..8u64 {
                let seed = derive_seed(trial_seed, attempt);
                let inst = (def.generate)(dim, seed);
                let verdict = check(def, &inst, tol)?;
                if verdict.hypothesis_ok {
                    accepted = Some((seed, verdict));
                    break;
                }
            }
            let Some((seed, verdict)) = accepted else {
                hypothesis_failures += 1;
                continue;
            };
            if verdict.holds == Some(false) {
                violations += 1;
            }
            if verdict.slack < min_slack {
                min_slack = verdict.slack;
                worst = Some(ReplayKey {
                    law: id.to_string(),
                    dim,
                    seed,
                });
            }
        }
    }

    Ok(Report {
        law: id.to_string(),
        trials,
        dims: sorted_dims,
        violations,
        hypothesis_failures,
        min_slack,
        worst_instance: worst,
        tolerance: *tol,
    })
}
