//! Instance and report persistence.
//!
//! Matrices travel as `{ "dim": n, "entries": [[[re,im], ...], ...] }`
//! row-major; readers reject non-square payloads. Instances bundle role
//! bindings with their provenance so any reported result can be replayed.

use std::path::Path;

use thiserror::Error;

use crate::laws::{self, LawInstance};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse failure: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("instance does not match its law: {0}")]
    Shape(String),
}

/// JSON codec tolerating ±infinity, which JSON itself cannot express:
/// non-finite values travel as the strings "inf", "-inf", "nan".
pub mod maybe_infinite {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_finite() {
            s.serialize_f64(*v)
        } else if v.is_nan() {
            s.serialize_str("nan")
        } else if *v > 0.0 {
            s.serialize_str("inf")
        } else {
            s.serialize_str("-inf")
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(v),
            Raw::Text(t) => match t.as_str() {
                "inf" => Ok(f64::INFINITY),
                "-inf" => Ok(f64::NEG_INFINITY),
                "nan" => Ok(f64::NAN),
                other => Err(serde::de::Error::custom(format!(
                    "expected a number or inf/-inf/nan, got {other:?}"
                ))),
            },
        }
    }
}

/// Parse an instance document and validate it against its law's shape.
pub fn instance_from_json(text: &str) -> Result<LawInstance, IoError> {
    let inst: LawInstance = serde_json::from_str(text)?;
    let def =
        laws::find(&inst.law).map_err(|e| IoError::Shape(e.to_string()))?;
    // Run a throwaway check purely for shape validation; hypothesis failures
    // are fine here, shape failures are not.
    match laws::check(def, &inst, &laws::TolerancePolicy::default()) {
        Ok(_) => Ok(inst),
        Err(laws::LawError::ShapeMismatch(m)) => Err(IoError::Shape(m)),
        Err(_) => Ok(inst),
    }
}

pub fn load_instance(path: &Path) -> Result<LawInstance, IoError> {
    let text = std::fs::read_to_string(path)?;
    let mut inst = instance_from_json(&text)?;
    inst.provenance = laws::Provenance::File {
        path: path.display().to_string(),
    };
    Ok(inst)
}

pub fn save_instance(path: &Path, inst: &LawInstance) -> Result<(), IoError> {
    let text = serde_json::to_string_pretty(inst)?;
    std::fs::write(path, text)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::random_instance;

    #[test]
    fn instance_round_trip_is_bitwise() {
        let inst = random_instance("L-SV-KANT", 3, 1234).unwrap();
        let text = serde_json::to_string(&inst).unwrap();
        let back = instance_from_json(&text).unwrap();
        for role in ["A", "B", "Z"] {
            let m0 = inst.mat(role).unwrap();
            let m1 = back.mat(role).unwrap();
            for (x, y) in m0.dm().iter().zip(m1.dm().iter()) {
                assert_eq!(x.re.to_bits(), y.re.to_bits());
                assert_eq!(x.im.to_bits(), y.im.to_bits());
            }
        }
    }

    #[test]
    fn non_square_matrix_payload_is_rejected() {
        let text = r#"{
            "law": "L-PINCH",
            "matrices": { "X": { "dim": 2, "entries": [[[1,0],[0,0]]] } },
            "provenance": { "kind": "literal" }
        }"#;
        assert!(instance_from_json(text).is_err());
    }

    #[test]
    fn missing_role_is_shape_error() {
        // L-SV-KANT needs A, B and Z; leave Z out.
        let inst = random_instance("L-SV-KANT", 2, 5).unwrap();
        let mut doc: serde_json::Value = serde_json::to_value(&inst).unwrap();
        doc.get_mut("matrices").unwrap().as_object_mut().unwrap().remove("Z");
        let text = serde_json::to_string(&doc).unwrap();
        match instance_from_json(&text) {
            Err(IoError::Shape(m)) => assert!(m.contains("Z"), "diagnostic: {m}"),
            other => panic!("expected shape error, got {other:?}"),
        }
    }

    #[test]
    fn infinite_slack_survives_json() {
        #[derive(serde::Serialize, serde::Deserialize)]
        struct W(#[serde(with = "maybe_infinite")] f64);
        let text = serde_json::to_string(&W(f64::INFINITY)).unwrap();
        assert_eq!(text, "\"inf\"");
        let back: W = serde_json::from_str(&text).unwrap();
        assert!(back.0.is_infinite() && back.0 > 0.0);
        let num: W = serde_json::from_str("1.5").unwrap();
        assert_eq!(num.0, 1.5);
    }
}
