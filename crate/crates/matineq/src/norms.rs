//! Unitarily invariant norms and the Ky Fan dominance comparator.
//!
//! A comparison over "all symmetric norms" is decided by the complete Ky Fan
//! sweep k = 1..n: X is dominated by Y for every symmetric norm iff each
//! partial sum of singular values of X is bounded by the matching partial sum
//! for Y.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::la::{singular_values, ComplexMatrix};

/// Comparison slop for norm inequalities: lhs <= rhs + REL * max(1, lhs, rhs).
pub const NORM_CMP_REL: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum NormError {
    #[error("Ky Fan index {k} out of range for dimension {dim}")]
    KOutOfRange { k: usize, dim: usize },
    #[error("Schatten exponent {p} must be >= 1")]
    SchattenExponent { p: f64 },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("comparison factor {factor} must be positive")]
    BadFactor { factor: f64 },
}

/// Identifier of a unitarily invariant norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NormId {
    Operator,
    Frobenius,
    Trace,
    Schatten(f64),
    KyFan(usize),
}

impl fmt::Display for NormId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormId::Operator => write!(f, "operator"),
            NormId::Frobenius => write!(f, "frobenius"),
            NormId::Trace => write!(f, "trace"),
            NormId::Schatten(p) => write!(f, "schatten:{p}"),
            NormId::KyFan(k) => write!(f, "kyfan:{k}"),
        }
    }
}

impl FromStr for NormId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "operator" => Ok(NormId::Operator),
            "frobenius" => Ok(NormId::Frobenius),
            "trace" => Ok(NormId::Trace),
            _ => {
                if let Some(p) = s.strip_prefix("schatten:") {
                    let p: f64 = p.parse().map_err(|_| format!("bad Schatten exponent in {s:?}"))?;
                    if p < 1.0 {
                        return Err(format!("Schatten exponent {p} must be >= 1"));
                    }
                    Ok(NormId::Schatten(p))
                } else if let Some(k) = s.strip_prefix("kyfan:") {
                    let k: usize = k.parse().map_err(|_| format!("bad Ky Fan index in {s:?}"))?;
                    if k == 0 {
                        return Err("Ky Fan index must be >= 1".to_string());
                    }
                    Ok(NormId::KyFan(k))
                } else {
                    Err(format!("unknown norm id {s:?}"))
                }
            }
        }
    }
}

impl Serialize for NormId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for NormId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Evaluate a unitarily invariant norm from the singular value profile.
pub fn norm(x: &ComplexMatrix, id: NormId) -> Result<f64, NormError> {
    let mu = singular_values(x);
    norm_of_profile(mu.values(), id, x.dim())
}

fn norm_of_profile(mu: &[f64], id: NormId, dim: usize) -> Result<f64, NormError> {
    match id {
        NormId::Operator => Ok(mu.first().copied().unwrap_or(0.0)),
        NormId::Frobenius => Ok(mu.iter().map(|s| s * s).sum::<f64>().sqrt()),
        NormId::Trace => Ok(mu.iter().sum()),
        NormId::Schatten(p) => {
            if p < 1.0 {
                return Err(NormError::SchattenExponent { p });
            }
            Ok(mu.iter().map(|s| s.powf(p)).sum::<f64>().powf(1.0 / p))
        }
        NormId::KyFan(k) => {
            if k == 0 || k > dim {
                return Err(NormError::KOutOfRange { k, dim });
            }
            Ok(mu[..k].iter().sum())
        }
    }
}

pub fn operator_norm(x: &ComplexMatrix) -> f64 {
    singular_values(x).largest()
}

pub fn frobenius_norm(x: &ComplexMatrix) -> f64 {
    norm(x, NormId::Frobenius).expect("infallible")
}

pub fn trace_norm(x: &ComplexMatrix) -> f64 {
    norm(x, NormId::Trace).expect("infallible")
}

pub fn schatten_norm(x: &ComplexMatrix, p: f64) -> Result<f64, NormError> {
    norm(x, NormId::Schatten(p))
}

/// The vector of Ky Fan norms (cumulative sums of the singular value profile).
pub fn ky_fan_profile(x: &ComplexMatrix) -> Vec<f64> {
    let mu = singular_values(x);
    let mut acc = 0.0;
    mu.values()
        .iter()
        .map(|&s| {
            acc += s;
            acc
        })
        .collect()
}

/// Result of the dominance sweep: per-k slacks factor*‖Y‖_(k) − ‖X‖_(k).
#[derive(Debug, Clone)]
pub struct Dominance {
    pub holds: bool,
    pub slacks: Vec<f64>,
}

/// Decide ‖X‖ <= factor * ‖Y‖ for every symmetric norm via the Ky Fan sweep.
pub fn dominates_all_symmetric_norms(
    x: &ComplexMatrix,
    y: &ComplexMatrix,
    factor: f64,
) -> Result<Dominance, NormError> {
    if x.dim() != y.dim() {
        return Err(NormError::DimensionMismatch {
            left: x.dim(),
            right: y.dim(),
        });
    }
    if factor.is_nan() || factor <= 0.0 {
        return Err(NormError::BadFactor { factor });
    }
    let px = ky_fan_profile(x);
    let py = ky_fan_profile(y);
    let mut holds = true;
    let slacks: Vec<f64> = px
        .iter()
        .zip(py.iter())
        .map(|(&lx, &ly)| {
            let rhs = factor * ly;
            if lx > rhs + NORM_CMP_REL * lx.abs().max(rhs.abs()).max(1.0) {
                holds = false;
            }
            rhs - lx
        })
        .collect();
    Ok(Dominance { holds, slacks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::la::ComplexMatrix;

    fn diag(values: &[f64]) -> ComplexMatrix {
        ComplexMatrix::from_real_diagonal(values)
    }

    #[test]
    fn trace_norm_of_signed_diagonal() {
        assert!((trace_norm(&diag(&[1.0, -2.0])) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn ky_fan_two_of_diagonal() {
        let n = norm(&diag(&[3.0, 2.0, 1.0]), NormId::KyFan(2)).unwrap();
        assert!((n - 5.0).abs() < 1e-12);
    }

    #[test]
    fn schatten_two_is_frobenius() {
        let x = ComplexMatrix::from_real_rows(&[vec![1.0, 2.0], vec![-0.5, 0.25]]).unwrap();
        let s2 = schatten_norm(&x, 2.0).unwrap();
        assert!((s2 - frobenius_norm(&x)).abs() < 1e-12);
    }

    #[test]
    fn ky_fan_profile_examples() {
        assert_eq!(ky_fan_profile(&diag(&[2.0, 0.0])), vec![2.0, 2.0]);
        assert_eq!(ky_fan_profile(&ComplexMatrix::identity(3)), vec![1.0, 2.0, 3.0]);
        assert_eq!(ky_fan_profile(&ComplexMatrix::zeros(2)), vec![0.0, 0.0]);
    }

    #[test]
    fn ky_fan_out_of_range() {
        assert!(matches!(
            norm(&diag(&[1.0, 2.0]), NormId::KyFan(3)),
            Err(NormError::KOutOfRange { k: 3, dim: 2 })
        ));
    }

    #[test]
    fn dominance_examples() {
        // Pinching of the all-ones 2x2: profiles (1,2) vs (2,2).
        let ones = ComplexMatrix::from_real_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
        let pinched = crate::la::diag_pinch(&ones);
        let dom = dominates_all_symmetric_norms(&pinched, &ones, 1.0).unwrap();
        assert!(dom.holds);

        let same = dominates_all_symmetric_norms(&ones, &ones, 1.0).unwrap();
        assert!(same.holds);
        assert!(same.slacks.iter().all(|s| s.abs() < 1e-12));

        // diag(2,0) vs identity fails at k = 1.
        let x = diag(&[2.0, 0.0]);
        let y = ComplexMatrix::identity(2);
        let dom = dominates_all_symmetric_norms(&x, &y, 1.0).unwrap();
        assert!(!dom.holds);
        assert!(dom.slacks[0] < 0.0);
    }

    #[test]
    fn norm_id_string_round_trip() {
        for id in ["operator", "frobenius", "trace", "schatten:2.5", "kyfan:3"] {
            let parsed: NormId = id.parse().unwrap();
            assert_eq!(parsed.to_string(), id);
        }
        assert!("schatten:0.5".parse::<NormId>().is_err());
        assert!("kyfan:0".parse::<NormId>().is_err());
    }
}
