//! Closed-form reverse-inequality constants: the Kantorovich factor, the
//! Ky Fan power constant K(a,b,p), the Furuta additive constant C(a,b,p),
//! the Gruss bound and the additive reverse bound.
//!
//! Removable singularities (a = b, or p = 1) are detected by relative guard
//! thresholds and replaced by the continuity limit instead of evaluating 0/0.

use thiserror::Error;

/// Relative guard for the removable singular sets a = b and p = 1.
pub const SINGULARITY_GUARD: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum ConstantError {
    #[error("spectrum endpoint must be positive, got ({a}, {b})")]
    NonPositive { a: f64, b: f64 },
    #[error("arguments out of order: expected first >= second, got ({hi}, {lo})")]
    BadOrder { hi: f64, lo: f64 },
    #[error("exponent {p} is outside the admissible range")]
    BadExponent { p: f64 },
}

/// Validated parameter set for the reverse-inequality constants: spectrum
/// endpoints a >= b > 0, an exponent, and optionally the Gruss interval
/// bounds p >= q, r >= s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantRequest {
    a: f64,
    b: f64,
    p: f64,
    gruss: Option<(f64, f64, f64, f64)>,
}

impl ConstantRequest {
    pub fn new(a: f64, b: f64, p: f64) -> Result<Self, ConstantError> {
        if b <= 0.0 || a <= 0.0 {
            return Err(ConstantError::NonPositive { a, b });
        }
        if a < b {
            return Err(ConstantError::BadOrder { hi: a, lo: b });
        }
        Ok(ConstantRequest {
            a,
            b,
            p,
            gruss: None,
        })
    }

    pub fn with_gruss_bounds(
        mut self,
        p: f64,
        q: f64,
        r: f64,
        s: f64,
    ) -> Result<Self, ConstantError> {
        if p < q {
            return Err(ConstantError::BadOrder { hi: p, lo: q });
        }
        if r < s {
            return Err(ConstantError::BadOrder { hi: r, lo: s });
        }
        self.gruss = Some((p, q, r, s));
        Ok(self)
    }

    pub fn spectrum(&self) -> (f64, f64) {
        (self.a, self.b)
    }

    pub fn exponent(&self) -> f64 {
        self.p
    }

    pub fn kantorovich(&self) -> f64 {
        kantorovich_factor(self.a, self.b).expect("validated at construction")
    }

    pub fn ky_fan(&self) -> Result<f64, ConstantError> {
        ky_fan_k(self.a, self.b, self.p)
    }

    pub fn furuta(&self) -> Result<f64, ConstantError> {
        furuta_c(self.a, self.b, self.p)
    }

    pub fn additive_reverse(&self) -> f64 {
        additive_reverse_bound(self.a, self.b).expect("validated at construction")
    }

    pub fn gruss(&self) -> Option<f64> {
        self.gruss
            .map(|(p, q, r, s)| gruss_bound(p, q, r, s).expect("validated at construction"))
    }
}

/// (a+b) / (2 sqrt(ab)) for a spectrum contained in [b, a]; >= 1 always and
/// equal to 1 iff a = b.
pub fn kantorovich_factor(a: f64, b: f64) -> Result<f64, ConstantError> {
    if b <= 0.0 || a <= 0.0 {
        return Err(ConstantError::NonPositive { a, b });
    }
    if a < b {
        return Err(ConstantError::BadOrder { hi: a, lo: b });
    }
    Ok((a + b) / (2.0 * (a * b).sqrt()))
}

/// Sharp multiplicative reverse constant for the power-function Jensen
/// inequality, admissible for p > 1 and p < 0. Exponents in [0, 1) are
/// rejected; use [`ky_fan_k_raw`] to evaluate the bare formula anyway.
///
/// The closed form is stated for integer exponents; this evaluates the same
/// expression for all real p, an extension flagged here on purpose.
pub fn ky_fan_k(a: f64, b: f64, p: f64) -> Result<f64, ConstantError> {
    if b <= 0.0 || a <= 0.0 {
        return Err(ConstantError::NonPositive { a, b });
    }
    if a < b {
        return Err(ConstantError::BadOrder { hi: a, lo: b });
    }
    if (p - 1.0).abs() <= SINGULARITY_GUARD {
        return Ok(1.0);
    }
    if (0.0..1.0).contains(&p) {
        return Err(ConstantError::BadExponent { p });
    }
    Ok(ky_fan_k_raw(a, b, p))
}

/// Bare evaluation of the K(a,b,p) formula with only the removable
/// singularity guards applied. Opt-in escape hatch for exponents the checked
/// entry point rejects.
pub fn ky_fan_k_raw(a: f64, b: f64, p: f64) -> f64 {
    if (a - b).abs() <= SINGULARITY_GUARD * a.abs().max(1.0) {
        return 1.0;
    }
    if (p - 1.0).abs() <= SINGULARITY_GUARD {
        return 1.0;
    }
    let first = (a.powf(p) * b - a * b.powf(p)) / ((p - 1.0) * (a - b));
    let inner = (p - 1.0) / p * (a.powf(p) - b.powf(p)) / (a.powf(p) * b - a * b.powf(p));
    first * inner.powf(p)
}

/// Sharp additive reverse constant C(a,b,p) for p > 1, nonincreasing when the
/// interval [b, a] shrinks.
pub fn furuta_c(a: f64, b: f64, p: f64) -> Result<f64, ConstantError> {
    if p <= 1.0 {
        return Err(ConstantError::BadExponent { p });
    }
    if b < 0.0 {
        return Err(ConstantError::NonPositive { a, b });
    }
    if a < b {
        return Err(ConstantError::BadOrder { hi: a, lo: b });
    }
    if (a - b).abs() <= SINGULARITY_GUARD * a.max(1.0) {
        return Ok(0.0);
    }
    let mean_slope = (a.powf(p) - b.powf(p)) / (p * (a - b));
    let c = (p - 1.0) * mean_slope.powf(p / (p - 1.0)) + (a * b.powf(p) - b * a.powf(p)) / (a - b);
    Ok(c)
}

/// (p - q)(r - s) / 4 for spectra contained in [q, p] and [s, r].
pub fn gruss_bound(p: f64, q: f64, r: f64, s: f64) -> Result<f64, ConstantError> {
    if p < q {
        return Err(ConstantError::BadOrder { hi: p, lo: q });
    }
    if r < s {
        return Err(ConstantError::BadOrder { hi: r, lo: s });
    }
    Ok((p - q) * (r - s) / 4.0)
}

/// (a - b)^2 / (4 (a + b)), the additive companion of the Kantorovich factor.
pub fn additive_reverse_bound(a: f64, b: f64) -> Result<f64, ConstantError> {
    if b < 0.0 || a + b <= 0.0 {
        return Err(ConstantError::NonPositive { a, b });
    }
    if a < b {
        return Err(ConstantError::BadOrder { hi: a, lo: b });
    }
    Ok((a - b).powi(2) / (4.0 * (a + b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kantorovich_examples() {
        assert_eq!(kantorovich_factor(1.0, 1.0).unwrap(), 1.0);
        assert!((kantorovich_factor(4.0, 1.0).unwrap() - 1.25).abs() < 1e-15);
        // Inverse-spectrum invariance: factor(1/b, 1/a) = factor(a, b).
        for (a, b) in [(4.0, 1.0), (10.0, 0.3), (2.5, 2.5)] {
            let f = kantorovich_factor(a, b).unwrap();
            let g = kantorovich_factor(1.0 / b, 1.0 / a).unwrap();
            assert!((f - g).abs() < 1e-12 * f);
        }
        assert!(kantorovich_factor(1.0, 0.0).is_err());
        assert!(kantorovich_factor(1.0, 2.0).is_err());
    }

    #[test]
    fn kantorovich_monotone_in_ratio() {
        let mut last = 1.0;
        for ratio in [1.0, 1.5, 2.0, 5.0, 10.0, 100.0] {
            let f = kantorovich_factor(ratio, 1.0).unwrap();
            assert!(f >= last);
            assert!(f >= 1.0);
            last = f;
        }
    }

    #[test]
    fn ky_fan_k_examples() {
        // At p = 2 the formula collapses to (a+b)^2 / (4ab).
        assert!((ky_fan_k(4.0, 1.0, 2.0).unwrap() - 25.0 / 16.0).abs() < 1e-14);
        assert!((ky_fan_k(2.0, 1.0, 2.0).unwrap() - 9.0 / 8.0).abs() < 1e-14);
        assert_eq!(ky_fan_k(1.0, 1.0, 3.0).unwrap(), 1.0);
    }

    #[test]
    fn ky_fan_k_matches_squared_kantorovich_at_p2() {
        for ratio in [1.01, 2.0, 10.0, 100.0] {
            let k = ky_fan_k(ratio, 1.0, 2.0).unwrap();
            let f = kantorovich_factor(ratio, 1.0).unwrap();
            assert!((k - f * f).abs() <= 1e-12 * k, "ratio {ratio}");
        }
    }

    #[test]
    fn ky_fan_k_rejects_interior_exponents_but_raw_evaluates() {
        assert_eq!(ky_fan_k(2.0, 1.0, 0.5), Err(ConstantError::BadExponent { p: 0.5 }));
        assert_eq!(ky_fan_k(2.0, 1.0, 1.0).unwrap(), 1.0);
        assert!(ky_fan_k_raw(2.0, 1.0, 0.5).is_finite());
    }

    #[test]
    fn ky_fan_k_is_reverse_constant() {
        for p in [1.5, 2.0, 3.0, 7.0, -0.5, -2.0] {
            for ratio in [1.01, 2.0, 10.0, 100.0] {
                let k = ky_fan_k(ratio, 1.0, p).unwrap();
                assert!(k >= 1.0 - 1e-12, "K({ratio},1,{p}) = {k}");
            }
        }
    }

    #[test]
    fn furuta_examples() {
        assert!((furuta_c(3.0, 1.0, 2.0).unwrap() - 1.0).abs() < 1e-14);
        assert_eq!(furuta_c(1.0, 1.0, 3.0).unwrap(), 0.0);
        assert!((furuta_c(2.0, 0.0, 2.0).unwrap() - 1.0).abs() < 1e-14);
        assert!(furuta_c(2.0, 1.0, 1.0).is_err());
        assert!(furuta_c(1.0, 2.0, 2.0).is_err());
    }

    #[test]
    fn furuta_matches_quarter_square_at_p2() {
        for ratio in [1.01, 2.0, 10.0, 100.0] {
            let c = furuta_c(ratio, 1.0, 2.0).unwrap();
            let expect = (ratio - 1.0) * (ratio - 1.0) / 4.0;
            assert!((c - expect).abs() <= 1e-12 * expect.max(1.0), "ratio {ratio}");
        }
    }

    #[test]
    fn furuta_interval_monotone() {
        for p in [1.5, 2.0, 3.0] {
            // Shrinking [b, a] never increases C.
            let grid = [(8.0, 0.5), (6.0, 1.0), (4.0, 1.5), (3.0, 2.0)];
            let mut last = f64::INFINITY;
            for (a, b) in grid {
                let c = furuta_c(a, b, p).unwrap();
                assert!(c <= last + 1e-12, "p {p}: C({a},{b}) = {c} > {last}");
                last = c;
            }
        }
    }

    #[test]
    fn gruss_examples() {
        assert_eq!(gruss_bound(1.0, 0.0, 1.0, 0.0).unwrap(), 0.25);
        assert_eq!(gruss_bound(3.0, 3.0, 9.0, 1.0).unwrap(), 0.0);
        let (a, b) = (5.0, 2.0);
        assert!((gruss_bound(a, b, a, b).unwrap() - (a - b) * (a - b) / 4.0).abs() < 1e-15);
        assert!(gruss_bound(0.0, 1.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn constant_request_carries_validated_parameters() {
        let req = ConstantRequest::new(4.0, 1.0, 2.0).unwrap();
        assert!((req.kantorovich() - 1.25).abs() < 1e-15);
        assert!((req.ky_fan().unwrap() - 25.0 / 16.0).abs() < 1e-14);
        assert!((req.furuta().unwrap() - 9.0 / 4.0).abs() < 1e-14);
        assert!((req.additive_reverse() - 0.45).abs() < 1e-15);
        assert_eq!(req.gruss(), None);

        let req = req.with_gruss_bounds(1.0, 0.0, 1.0, 0.0).unwrap();
        assert_eq!(req.gruss(), Some(0.25));

        assert!(ConstantRequest::new(1.0, 2.0, 2.0).is_err());
        assert!(ConstantRequest::new(1.0, 0.0, 2.0).is_err());
        assert!(ConstantRequest::new(2.0, 1.0, 2.0)
            .unwrap()
            .with_gruss_bounds(0.0, 1.0, 1.0, 0.0)
            .is_err());
    }

    #[test]
    fn additive_reverse_examples() {
        assert_eq!(additive_reverse_bound(1.0, 1.0).unwrap(), 0.0);
        assert_eq!(additive_reverse_bound(3.0, 1.0).unwrap(), 0.25);
        assert_eq!(additive_reverse_bound(1.0, 0.0).unwrap(), 0.25);
        assert!(additive_reverse_bound(0.0, 0.0).is_err());
    }
}
