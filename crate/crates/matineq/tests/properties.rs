//! Cross-module invariants on randomized inputs: decomposition contracts,
//! norm axioms, generator/recognizer round trips, law degeneracies and
//! hypothesis rejection diagnostics.

use matineq::la::{
    compression, matrix_power, polar_absolute, singular_values, spectral_decompose,
    support_projection, ComplexMatrix, HermitianMatrix, C64,
};
use matineq::laws::{self, ComparisonMode, LawInstance, TolerancePolicy};
use matineq::norms::{self, NormId};
use matineq::rng::{derive_seed, Stream};
use matineq::search;
use matineq::structure::{
    self, gen_monotone_pair, gen_normal, gen_permutation, gen_psd, haar_unitary,
    make_sum_symmetric_from, rc_ratio, recognize_monotone_pair, GeneratorSpec, Orientation,
};

use nalgebra::{DMatrix, DVector};
use proptest::prelude::*;

fn random_hermitian(dim: usize, rng: &mut Stream) -> HermitianMatrix {
    let g = DMatrix::from_fn(dim, dim, |_, _| C64::new(rng.normal(), rng.normal()));
    HermitianMatrix::symmetrize(&ComplexMatrix::new(g).unwrap()).unwrap()
}

fn random_general(dim: usize, rng: &mut Stream) -> ComplexMatrix {
    ComplexMatrix::new(DMatrix::from_fn(dim, dim, |_, _| {
        C64::new(rng.normal(), rng.normal())
    }))
    .unwrap()
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

#[test]
fn spectral_reconstruction_across_dims() {
    for dim in 2..=12 {
        for trial in 0..5u64 {
            let mut rng = Stream::new(derive_seed(100, dim as u64 * 100 + trial));
            let a = random_hermitian(dim, &mut rng);
            let d = spectral_decompose(&a).unwrap();
            let err = (&d.reconstruct() - a.matrix()).max_abs_entry();
            assert!(
                err <= 1e-10 * a.matrix().scale(),
                "dim {dim} trial {trial}: reconstruction error {err:.3e}"
            );
            let sorted = d.eigenvalues().windows(2).all(|w| w[0] >= w[1]);
            assert!(sorted);
        }
    }
}

#[test]
fn singular_values_unitary_invariance() {
    for trial in 0..20u64 {
        let mut rng = Stream::new(derive_seed(200, trial));
        let dim = 2 + (trial as usize % 7);
        let x = random_general(dim, &mut rng);
        let mu = singular_values(&x);

        let adj = singular_values(&x.adjoint());
        assert!(max_abs_diff(mu.values(), adj.values()) <= 1e-10 * mu.largest().max(1e-300));

        let u = haar_unitary(dim, &mut rng);
        let v = haar_unitary(dim, &mut rng);
        let rotated = ComplexMatrix::new(u.dm() * x.dm() * v.dm()).unwrap();
        let rot = singular_values(&rotated);
        assert!(
            max_abs_diff(mu.values(), rot.values()) <= 1e-10 * mu.largest().max(1e-300),
            "trial {trial}"
        );
    }
}

#[test]
fn polar_absolute_matches_singular_values() {
    for trial in 0..20u64 {
        let mut rng = Stream::new(derive_seed(300, trial));
        let dim = 2 + (trial as usize % 6);
        let x = random_general(dim, &mut rng);
        let mu = singular_values(&x);
        let abs = polar_absolute(&x).unwrap();
        let eigs = spectral_decompose(abs.hermitian()).unwrap();
        assert!(max_abs_diff(mu.values(), eigs.eigenvalues()) <= 1e-10 * mu.largest());
    }
}

#[test]
fn matrix_power_round_trip() {
    for trial in 0..10u64 {
        for p in [2.0, 3.0, 0.5] {
            let dim = 2 + (trial as usize % 5);
            let spec = GeneratorSpec::new(dim, derive_seed(400, trial), 0.3, 3.0);
            let a = gen_psd(&spec).unwrap();
            let powered = matrix_power(&a, p).unwrap();
            let back = matrix_power(&powered, 1.0 / p).unwrap();
            let err = (back.matrix() - a.matrix()).max_abs_entry();
            assert!(err <= 1e-8 * a.matrix().scale(), "p {p} trial {trial}: {err:.3e}");
        }
    }
}

#[test]
fn support_projection_contract() {
    for trial in 0..20u64 {
        let mut rng = Stream::new(derive_seed(500, trial));
        let dim = 2 + (trial as usize % 5);
        // Random rank via a PSD factor times a general matrix.
        let rank = 1 + (trial as usize % dim);
        let spec = GeneratorSpec::new(dim, derive_seed(501, trial), 0.5, 2.0).with_rank(rank);
        let low = gen_psd(&spec).unwrap();
        let g = random_general(dim, &mut rng);
        let x = ComplexMatrix::new(g.dm() * low.matrix().dm()).unwrap();

        let s = support_projection(&x).unwrap();
        let xs = ComplexMatrix::new(x.dm() * s.matrix().dm()).unwrap();
        assert!((&xs - &x).max_abs_entry() <= 1e-9 * x.scale(), "trial {trial}");

        let mu = singular_values(&x);
        let expected_rank = mu
            .values()
            .iter()
            .filter(|&&v| v > 1e-10 * mu.largest())
            .count();
        assert_eq!(s.rank(), expected_rank, "trial {trial}");
    }
}

#[test]
fn compression_of_identity_is_identity() {
    for trial in 0..10u64 {
        let mut rng = Stream::new(derive_seed(600, trial));
        let dim = 2 + (trial as usize % 6);
        let k = 1 + (trial as usize % dim);
        let frame = structure::random_frame(dim, k, &mut rng);
        let c = compression(&ComplexMatrix::identity(dim), &frame).unwrap();
        assert!((&c - &ComplexMatrix::identity(k)).max_abs_entry() <= 1e-12);
    }
}

#[test]
fn ky_fan_endpoints_equal_operator_and_trace() {
    for trial in 0..20u64 {
        let mut rng = Stream::new(derive_seed(700, trial));
        let dim = 2 + (trial as usize % 8);
        let x = random_general(dim, &mut rng);
        let op = norms::norm(&x, NormId::Operator).unwrap();
        let k1 = norms::norm(&x, NormId::KyFan(1)).unwrap();
        assert_eq!(op.to_bits(), k1.to_bits());
        let tr = norms::norm(&x, NormId::Trace).unwrap();
        let kn = norms::norm(&x, NormId::KyFan(dim)).unwrap();
        assert_eq!(tr.to_bits(), kn.to_bits());
    }
}

#[test]
fn norm_axioms_hold() {
    let ids = [
        NormId::Operator,
        NormId::Frobenius,
        NormId::Trace,
        NormId::Schatten(1.5),
        NormId::Schatten(3.0),
        NormId::KyFan(2),
    ];
    for trial in 0..10u64 {
        let mut rng = Stream::new(derive_seed(800, trial));
        let dim = 2 + (trial as usize % 5);
        let x = random_general(dim, &mut rng);
        let y = random_general(dim, &mut rng);
        let sum = &x + &y;
        let c = rng.uniform(-3.0, 3.0);
        let scaled = ComplexMatrix::new(x.dm() * C64::new(c, 0.0)).unwrap();
        for id in ids {
            let nx = norms::norm(&x, id).unwrap();
            let ny = norms::norm(&y, id).unwrap();
            let nsum = norms::norm(&sum, id).unwrap();
            let scale = nx.max(ny).max(1.0);
            assert!(nsum <= nx + ny + 1e-9 * scale, "{id} triangle");
            let nscaled = norms::norm(&scaled, id).unwrap();
            assert!(
                (nscaled - c.abs() * nx).abs() <= 1e-9 * scale.max(nscaled),
                "{id} homogeneity"
            );
        }
    }
}

#[test]
fn norm_unitary_invariance() {
    let ids = [
        NormId::Operator,
        NormId::Frobenius,
        NormId::Trace,
        NormId::Schatten(2.5),
        NormId::KyFan(2),
    ];
    for trial in 0..10u64 {
        let mut rng = Stream::new(derive_seed(900, trial));
        let dim = 2 + (trial as usize % 5);
        let x = random_general(dim, &mut rng);
        let u = haar_unitary(dim, &mut rng);
        let v = haar_unitary(dim, &mut rng);
        let rotated = ComplexMatrix::new(u.dm() * x.dm() * v.dm()).unwrap();
        for id in ids {
            let nx = norms::norm(&x, id).unwrap();
            let nr = norms::norm(&rotated, id).unwrap();
            assert!((nx - nr).abs() <= 1e-9 * nx.max(1.0), "{id}");
        }
    }
}

#[test]
fn pinching_never_increases_symmetric_norms() {
    for trial in 0..1000u64 {
        let mut rng = Stream::new(derive_seed(1000, trial));
        let dim = 2 + (trial as usize % 5);
        let x = random_general(dim, &mut rng);
        let dom = norms::dominates_all_symmetric_norms(&matineq::la::diag_pinch(&x), &x, 1.0).unwrap();
        assert!(dom.holds, "trial {trial}");
    }
}

#[test]
fn dominance_implies_schatten_ordering() {
    for trial in 0..50u64 {
        let mut rng = Stream::new(derive_seed(1100, trial));
        let dim = 2 + (trial as usize % 5);
        let y = random_general(dim, &mut rng);
        let x = matineq::la::diag_pinch(&y);
        let dom = norms::dominates_all_symmetric_norms(&x, &y, 1.0).unwrap();
        assert!(dom.holds);
        for p in [1.0, 1.5, 2.0, 3.0, 10.0] {
            let nx = norms::schatten_norm(&x, p).unwrap();
            let ny = norms::schatten_norm(&y, p).unwrap();
            assert!(nx <= ny + 1e-8 * nx.max(ny).max(1.0), "p {p} trial {trial}");
        }
    }
}

#[test]
fn normal_generator_satisfies_row_column_identity() {
    for trial in 0..50u64 {
        let dim = 2 + (trial as usize % 6);
        let spec = GeneratorSpec::new(dim, derive_seed(1200, trial), -1.5, 1.5);
        let z = gen_normal(&spec, false);
        // ‖Z e_i‖ = ‖Z* e_i‖ for canonical basis vectors.
        for i in 0..dim {
            let col: f64 = (0..dim).map(|k| z.dm()[(k, i)].norm_sqr()).sum();
            let row: f64 = (0..dim).map(|k| z.dm()[(i, k)].norm_sqr()).sum();
            let scale = z.max_abs_entry().powi(2).max(1.0);
            assert!((col - row).abs() <= 1e-9 * scale * dim as f64, "trial {trial} index {i}");
        }
        make_sum_symmetric_from(&z).expect("normal generator output is sum-symmetric");
    }
}

#[test]
fn monotone_pair_recognition_round_trip_1000() {
    for trial in 0..1000u64 {
        let dim = 2 + (trial as usize % 5);
        let orientation = if trial % 2 == 0 {
            Orientation::Monotone
        } else {
            Orientation::Antimonotone
        };
        let spec = GeneratorSpec::new(dim, derive_seed(1300, trial), -2.0, 2.0);
        let pair = gen_monotone_pair(&spec, orientation);
        let (a, b) = pair.realize();
        let kind = recognize_monotone_pair(&a, &b)
            .unwrap_or_else(|| panic!("trial {trial}: pair not recognized"));
        assert!(kind.admits(orientation), "trial {trial}: got {kind:?}");
    }
}

#[test]
fn rc_ratio_is_one_on_sum_symmetric() {
    for trial in 0..1000u64 {
        let dim = 2 + (trial as usize % 5);
        let spec = GeneratorSpec::new(dim, derive_seed(1400, trial), -1.5, 1.5);
        let z = gen_normal(&spec, false);
        let x = make_sum_symmetric_from(&z).unwrap();
        let rc = rc_ratio(x.entries()).unwrap();
        assert!((rc - 1.0).abs() <= 1e-9, "trial {trial}: rc {rc}");
    }
}

#[test]
fn rc_ratio_permutation_invariance() {
    for trial in 0..100u64 {
        let mut rng = Stream::new(derive_seed(1500, trial));
        let dim = 2 + (trial as usize % 5);
        let x = DMatrix::from_fn(dim, dim, |_, _| rng.uniform(0.0, 2.0));
        let p = gen_permutation(dim, derive_seed(1501, trial));
        let preal = DMatrix::from_fn(dim, dim, |i, j| p.dm()[(i, j)].re);
        let conj = &preal * &x * preal.transpose();
        let a = rc_ratio(&x).unwrap();
        let b = rc_ratio(&conj).unwrap();
        assert!((a - b).abs() <= 1e-9 * a.max(1.0), "trial {trial}");
    }
}

proptest! {
    #[test]
    fn sort_rearrange_idempotent_and_multiset(v in proptest::collection::vec(-100.0f64..100.0, 1..12)) {
        use matineq::structure::{sort_rearrange, SortDirection};
        let up = sort_rearrange(&v, SortDirection::Up);
        let up2 = sort_rearrange(&up, SortDirection::Up);
        prop_assert_eq!(&up, &up2);
        let mut orig = v.clone();
        orig.sort_by(|a, b| a.partial_cmp(b).unwrap());
        prop_assert_eq!(&up, &orig);
        let down = sort_rearrange(&v, SortDirection::Down);
        let mut rev = down.clone();
        rev.reverse();
        prop_assert_eq!(&up, &rev);
    }

    #[test]
    fn brute_force_extremes_match_closed_forms(
        seed in 0u64..10_000,
        len in 2usize..8,
    ) {
        use matineq::structure::{sort_rearrange, SortDirection};
        let mut rng = Stream::new(seed);
        let a: Vec<f64> = (0..len).map(|_| rng.uniform(0.05, 3.0)).collect();
        let b: Vec<f64> = (0..len).map(|_| rng.uniform(0.05, 3.0)).collect();
        let (min, max) = search::brute_force_rearrangement(&a, &b).unwrap();
        let au = sort_rearrange(&a, SortDirection::Up);
        let bu = sort_rearrange(&b, SortDirection::Up);
        let bd = sort_rearrange(&b, SortDirection::Down);
        prop_assert_eq!(max, laws::canonical_dot(&au, &bu));
        prop_assert_eq!(min, laws::canonical_dot(&au, &bd));
    }
}

#[test]
fn sv_kant_with_projection_degenerates_to_proj_sv() {
    let tol = TolerancePolicy::default();
    for trial in 0..30u64 {
        let mut rng = Stream::new(derive_seed(1600, trial));
        let dim = 2 + (trial as usize % 4);
        let orientation = Orientation::Monotone;
        let spec = GeneratorSpec::new(dim, derive_seed(1601, trial), 0.0, 2.0);
        let pair = gen_monotone_pair(&spec, orientation);
        let (a, b) = pair.realize();
        let rank = 1 + (trial as usize % dim);
        let frame = structure::random_frame(dim, rank, &mut rng);
        let e = frame.projection().unwrap();

        let proj_inst = LawInstance::new("L-PROJ-SV")
            .with_matrix("A", a.matrix().clone())
            .with_matrix("B", b.matrix().clone())
            .with_matrix("E", e.matrix().clone());
        let kant_inst = LawInstance::new("L-SV-KANT")
            .with_matrix("A", a.matrix().clone())
            .with_matrix("B", b.matrix().clone())
            .with_matrix("Z", e.matrix().clone());

        let v_proj = laws::check_by_id("L-PROJ-SV", &proj_inst, &tol).unwrap();
        let v_kant = laws::check_by_id("L-SV-KANT", &kant_inst, &tol).unwrap();
        assert!(v_proj.hypothesis_ok && v_kant.hypothesis_ok, "trial {trial}");
        assert_eq!(v_proj.holds, v_kant.holds);

        // Projection spectra give K₁ = 1 exactly, so the left profiles are
        // the same product in the same multiplication order (bitwise); the
        // right products differ textually (ABE vs EAB) but share a spectrum.
        for (p, k) in v_proj.pairs.iter().zip(v_kant.pairs.iter()) {
            assert_eq!(p.lhs.to_bits(), k.lhs.to_bits(), "trial {trial}");
            assert!(
                (p.rhs - k.rhs).abs() <= 1e-12 * p.rhs.abs().max(1.0),
                "trial {trial}: rhs {} vs {}",
                p.rhs,
                k.rhs
            );
        }
        assert!((v_proj.slack - v_kant.slack).abs() <= 1e-12 * v_proj.slack.abs().max(1.0));
    }
}

#[test]
fn araki_rev_sv_at_p2_matches_sandwich() {
    let tol = TolerancePolicy::default();
    for trial in 0..20u64 {
        let dim = 2 + (trial as usize % 4);
        let a_spec = GeneratorSpec::new(dim, derive_seed(1700, trial), 0.1, 2.0);
        let z_spec = GeneratorSpec::new(dim, derive_seed(1701, trial), 0.3, 3.0);
        let a = gen_psd(&a_spec).unwrap();
        let z = gen_psd(&z_spec).unwrap();

        // Matched instances: the squared comparison of A Z A powers at p = 2
        // coincides with the sandwich on (A², Z).
        let a_sq = matrix_power(&a, 2.0).unwrap();
        let rev_inst = LawInstance::new("L-ARAKI-REV-SV")
            .with_matrix("A", a.matrix().clone())
            .with_matrix("Z", z.matrix().clone())
            .with_scalar("p", 2.0);
        let sandwich_inst = LawInstance::new("L-SANDWICH")
            .with_matrix("A", a_sq.matrix().clone())
            .with_matrix("Z", z.matrix().clone());

        let v_rev = laws::check_by_id("L-ARAKI-REV-SV", &rev_inst, &tol).unwrap();
        let v_sand = laws::check_by_id("L-SANDWICH", &sandwich_inst, &tol).unwrap();
        assert!(v_rev.hypothesis_ok && v_sand.hypothesis_ok);
        assert_eq!(v_rev.holds, Some(true));
        assert_eq!(v_sand.holds, Some(true));

        // Upper comparisons: μ_j(A²Z²A²) ≤ K₁² μ_j((AZA)²) squares the
        // sandwich ratios μ_k(A²Z) ≤ K₁ λ_k(A²Z).
        let rev_upper: Vec<f64> = v_rev
            .pairs
            .iter()
            .filter(|p| p.label.starts_with("upper"))
            .map(|p| p.lhs / (p.rhs))
            .collect();
        let sand_upper: Vec<f64> = v_sand
            .pairs
            .iter()
            .filter(|p| p.label.starts_with("upper"))
            .map(|p| p.lhs / (p.rhs))
            .collect();
        for (r, s) in rev_upper.iter().zip(sand_upper.iter()) {
            assert!(
                (r - s * s).abs() <= 1e-8,
                "trial {trial}: rev ratio {r} vs sandwich {s}"
            );
        }
    }
}

#[test]
fn verdict_slack_invariant_under_joint_conjugation() {
    // Laws whose operands all conjugate: the compared products transform as
    // U M U*, so the singular value and Ky Fan profiles on both sides are
    // untouched. (Pinching is excluded: the diagonal part is basis-bound.)
    let tol = TolerancePolicy::default();
    let unitary_laws = [
        "L-PROJ-SV",
        "L-SV-KANT",
        "L-SV-KANT-REV",
        "L-SANDWICH",
        "L-ARAKI-REV-SV",
        "L-ARAKI",
        "L-FURUTA-SYMNORM",
        "L-SYMNORM-NORMAL",
        "L-SYMNORM-KANT",
    ];
    for (i, law) in unitary_laws.iter().enumerate() {
        for trial in 0..10u64 {
            let dim = 2 + (trial as usize % 4);
            let seed = derive_seed(1800 + i as u64, trial);
            let inst = laws::random_instance(law, dim, seed).unwrap();
            let v0 = laws::check_by_id(law, &inst, &tol).unwrap();
            assert!(v0.hypothesis_ok, "{law} trial {trial}");

            let mut rng = Stream::new(derive_seed(1900 + i as u64, trial));
            let u = haar_unitary(dim, &mut rng);
            let mut conj = inst.clone();
            for m in conj.matrices.values_mut() {
                let rotated = u.dm() * m.dm() * u.dm().adjoint();
                *m = ComplexMatrix::new(rotated).unwrap();
            }
            for h in conj.vectors.values_mut() {
                let rotated: DVector<C64> = u.dm() * &*h;
                *h = rotated;
            }
            let v1 = laws::check_by_id(law, &conj, &tol).unwrap();
            assert!(v1.hypothesis_ok, "{law} trial {trial} after conjugation");
            let scale = inst
                .matrices
                .values()
                .map(|m| m.max_abs_entry())
                .fold(1.0, f64::max);
            assert!(
                (v0.slack - v1.slack).abs() <= 1e-8 * scale,
                "{law} trial {trial}: slack {} vs {}",
                v0.slack,
                v1.slack
            );
        }
    }
}

#[test]
fn hypothesis_rejections_name_the_violated_hypothesis() {
    let tol = TolerancePolicy::default();

    // Non-normal Z for the Frobenius comparison.
    let mut inst = laws::random_instance("L-FROB-CHEB", 3, 7).unwrap();
    let nilp = {
        let mut m = DMatrix::from_element(3, 3, C64::new(0.0, 0.0));
        m[(0, 1)] = C64::new(1.0, 0.0);
        ComplexMatrix::new(m).unwrap()
    };
    inst.matrices.insert("Z".into(), nilp);
    let v = laws::check_by_id("L-FROB-CHEB", &inst, &tol).unwrap();
    assert!(!v.hypothesis_ok);
    assert!(v.holds.is_none());
    assert!(v.diagnostics.as_deref().unwrap().contains("not normal"));

    // Non-monotone pair for the vector Chebyshev law.
    let mut inst = laws::random_instance("L-CHEB-VEC", 3, 7).unwrap();
    let spec_a = GeneratorSpec::new(3, 31, 0.1, 2.0);
    let spec_b = GeneratorSpec::new(3, 32, 0.1, 2.0);
    inst.matrices.insert("A".into(), gen_psd(&spec_a).unwrap().matrix().clone());
    inst.matrices.insert("B".into(), gen_psd(&spec_b).unwrap().matrix().clone());
    let v = laws::check_by_id("L-CHEB-VEC", &inst, &tol).unwrap();
    assert!(!v.hypothesis_ok);
    assert!(v
        .diagnostics
        .as_deref()
        .unwrap()
        .contains("not a monotone or antimonotone pair"));

    // Indefinite Z for the vector Kantorovich law.
    let mut inst = laws::random_instance("L-KANT-VEC", 3, 7).unwrap();
    inst.matrices
        .insert("Z".into(), ComplexMatrix::from_real_diagonal(&[1.0, -0.5, 2.0]));
    let v = laws::check_by_id("L-KANT-VEC", &inst, &tol).unwrap();
    assert!(!v.hypothesis_ok);
    assert!(v.diagnostics.as_deref().unwrap().contains("not positive definite"));
}

#[test]
fn sharpness_never_exceeds_bound_on_theorem_true_laws() {
    for law in [
        "L-KANT-VEC",
        "L-RC",
        "L-REV-REARR",
        "L-SV-KANT",
        "L-SV-KANT-REV",
        "L-FURUTA-REV-JENSEN",
        "L-OPNORM-RHO",
    ] {
        let cfg = search::SearchConfig {
            budget: 2_000,
            restarts: 4,
            step_scale: 0.3,
            dim: 3,
            seed: 99,
            exponent: None,
        };
        let result = search::sharpness_search(law, &cfg).unwrap();
        assert!(
            result.achieved <= result.bound * (1.0 + 1e-8),
            "{law}: achieved {} bound {}",
            result.achieved,
            result.bound
        );
        assert_ne!(result.verdict, search::SearchVerdict::CounterexampleFound, "{law}");
    }
}

#[test]
fn warm_starts_attain_equality() {
    // Vector Kantorovich: the split-weight vector reaches the bound.
    let cfg = search::SearchConfig {
        budget: 64,
        restarts: 2,
        step_scale: 0.2,
        dim: 3,
        seed: 5,
        exponent: None,
    };
    let r = search::sharpness_search("L-KANT-VEC", &cfg).unwrap();
    assert_eq!(r.verdict, search::SearchVerdict::BoundNearlyAttained);
    assert!(
        (r.achieved - r.bound).abs() <= 1e-10 * r.bound,
        "achieved {} vs bound {}",
        r.achieved,
        r.bound
    );

    // Row-column ratio: the index-vector construction reaches rc(X).
    let base = laws::random_instance("L-RC", 4, 17).unwrap();
    let r = search::sharpness_search_from("L-RC", &cfg, Some(&base)).unwrap();
    assert!(
        (r.achieved - r.bound).abs() <= 1e-10 * r.bound.max(1.0),
        "achieved {} vs bound {}",
        r.achieved,
        r.bound
    );

    // Reverse rearrangement: the tiled (2,1)/(1,2) pair is an equality case
    // at even lengths.
    let cfg = search::SearchConfig {
        budget: 64,
        restarts: 1,
        step_scale: 0.2,
        dim: 4,
        seed: 5,
        exponent: None,
    };
    let r = search::sharpness_search("L-REV-REARR", &cfg).unwrap();
    assert_eq!(r.verdict, search::SearchVerdict::BoundNearlyAttained);
    assert!((r.achieved - r.bound).abs() <= 1e-10 * r.bound);
}

#[test]
fn counterexample_hunt_is_deterministic() {
    let cfg = search::SearchConfig {
        budget: 3_000,
        restarts: 4,
        step_scale: 0.3,
        dim: 3,
        seed: 2024,
        exponent: Some(4.0),
    };
    let a = search::counterexample_hunt(search::ProblemId::SchattenPGt2, &cfg).unwrap();
    let b = search::counterexample_hunt(search::ProblemId::SchattenPGt2, &cfg).unwrap();
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
}

#[test]
fn subspace_sweep_full_space_has_zero_slack() {
    for trial in 0..10u64 {
        let dim = 2 + (trial as usize % 4);
        let spec = GeneratorSpec::new(dim, derive_seed(2100, trial), 0.2, 3.0);
        let pair = gen_monotone_pair(&spec, Orientation::Monotone);
        let (a, b) = pair.realize();
        let outcome = search::subspace_sweep(
            a.matrix(),
            b.matrix(),
            Orientation::Monotone,
            &[dim],
            0,
            derive_seed(2101, trial),
        );
        // det(AB) = det(A) det(B): the full space gives zero slack exactly up
        // to determinant roundoff.
        let scale = a.matrix().scale() * b.matrix().scale();
        assert!(
            outcome.min_slack.abs() <= 1e-8 * scale.powi(dim as i32),
            "trial {trial}: slack {}",
            outcome.min_slack
        );
    }
}

#[test]
fn monotone_subspace_sweep_respects_forward_inequality() {
    for trial in 0..10u64 {
        let dim = 3 + (trial as usize % 3);
        let spec = GeneratorSpec::new(dim, derive_seed(2200, trial), 0.2, 3.0);
        let pair = gen_monotone_pair(&spec, Orientation::Monotone);
        let (a, b) = pair.realize();
        let dims: Vec<usize> = (1..=dim).collect();
        let outcome = search::subspace_sweep(
            a.matrix(),
            b.matrix(),
            Orientation::Monotone,
            &dims,
            4,
            derive_seed(2201, trial),
        );
        assert!(outcome.min_slack >= -1e-9, "trial {trial}: {}", outcome.min_slack);
    }
}

#[test]
fn antimonotone_sweep_on_codim1_respects_reverse_inequality() {
    for trial in 0..10u64 {
        let dim = 3 + (trial as usize % 3);
        let spec = GeneratorSpec::new(dim, derive_seed(2300, trial), 0.2, 3.0);
        let pair = gen_monotone_pair(&spec, Orientation::Antimonotone);
        let (a, b) = pair.realize();
        let outcome = search::subspace_sweep(
            a.matrix(),
            b.matrix(),
            Orientation::Antimonotone,
            &[1, dim - 1],
            4,
            derive_seed(2301, trial),
        );
        assert!(outcome.min_slack >= -1e-9, "trial {trial}: {}", outcome.min_slack);
    }
}

#[test]
fn batch_reports_are_mode_aware() {
    // Exercise one law per comparison mode end to end.
    let tol = TolerancePolicy::default();
    let by_mode = [
        ("L-HLP", ComparisonMode::Scalar),
        ("L-PROJ-SV", ComparisonMode::PerSingularValue),
        ("L-LOEWNER-AZA", ComparisonMode::Loewner),
        ("L-PINCH", ComparisonMode::AllSymmetricNorms),
    ];
    for (law, mode) in by_mode {
        let def = laws::find(law).unwrap();
        assert_eq!(def.mode, mode);
        let report = laws::batch_verify(law, 50, &[2, 3], 11, &tol).unwrap();
        assert_eq!(report.violations, 0, "{law}");
        assert_eq!(report.hypothesis_failures, 0, "{law}");
    }
}
