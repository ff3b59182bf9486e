mod common;

use common::random_conjugator;
use projkit::invariants::shears;
use projkit::isometry::{
    bulge_flags, bulging_configuration, classify, shear_shift, ClassifyTol, IsometryClass,
    SL3Matrix,
};
use projkit::nalgebra::Matrix3;
use proptest::prelude::*;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn conjugate(m: &Matrix3<f64>, seed: u64, cond: f64) -> SL3Matrix {
    let g = random_conjugator(&mut ChaCha8Rng::seed_from_u64(seed), cond);
    SL3Matrix::normalized(g * m * g.try_inverse().unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hyperbolic_conjugates(a in 0.05f64..1.5, b in 0.05f64..1.5, seed in any::<u64>(), lc in 0.0f64..3.0) {
        // log-gaps of at least 0.05 keep the eigenvalues apart from the cluster tolerance
        let (l1, l2) = ((a + b).exp(), b.exp());
        let l3 = 1.0 / (l1 * l2);
        let m = Matrix3::from_diagonal(&[l1, l2, l3].into());
        match classify(&conjugate(&m, seed, 10f64.powf(lc)), &ClassifyTol::default()) {
            IsometryClass::Hyperbolic { eigenvalues } => {
                for (x, y) in eigenvalues.iter().zip([l1, l2, l3]) {
                    prop_assert!((x - y).abs() <= 1e-6 * y.max(1.0));
                }
            }
            other => prop_assert!(false, "got {:?}", other),
        }
    }

    #[test]
    fn quasi_hyperbolic_conjugates(mu in 1.1f64..3.0, seed in any::<u64>(), lc in 0.0f64..3.0) {
        let nu = 1.0 / (mu * mu);
        let m = Matrix3::new(mu, 1.0, 0.0, 0.0, mu, 0.0, 0.0, 0.0, nu);
        match classify(&conjugate(&m, seed, 10f64.powf(lc)), &ClassifyTol::default()) {
            IsometryClass::QuasiHyperbolic { mu: m2, nu: n2, .. } => {
                prop_assert!((m2 - mu).abs() <= 1e-6 * mu);
                prop_assert!((n2 - nu).abs() <= 1e-6);
                prop_assert!((m2 * m2 * n2 - 1.0).abs() <= 1e-9);
            }
            other => prop_assert!(false, "got {:?}", other),
        }
    }

    #[test]
    fn parabolic_conjugates(seed in any::<u64>(), lc in 0.0f64..3.0) {
        let m = Matrix3::new(1.0, 1.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 1.0);
        let c = classify(&conjugate(&m, seed, 10f64.powf(lc)), &ClassifyTol::default());
        prop_assert_eq!(c, IsometryClass::Parabolic);
    }

    #[test]
    fn shear_shift_difference_exact_on_dyadics(i in -4096i32..4096, j in -4096i32..4096, k in -4096i32..4096) {
        let (s1, s2, v) = (i as f64 / 1024.0, j as f64 / 1024.0, k as f64 / 1024.0);
        let (a, b) = shear_shift(s1, s2, v);
        prop_assert_eq!((b - a) - (s2 - s1), 6.0 * v);
        prop_assert_eq!(a + b, s1 + s2);
    }

    #[test]
    fn shear_shift_difference_to_rounding(s1 in -10.0f64..10.0, s2 in -10.0f64..10.0, v in -3.0f64..3.0) {
        let (a, b) = shear_shift(s1, s2, v);
        let scale = s1.abs() + s2.abs() + 6.0 * v.abs();
        prop_assert!(((b - a) - (s2 - s1) - 6.0 * v).abs() <= 8.0 * f64::EPSILON * scale);
    }

    #[test]
    fn bulging_shifts_shears(y in 0.1f64..3.0, x in 0.1f64..3.0, v in -1.5f64..1.5) {
        let flags = bulging_configuration(y, x).unwrap();
        let (s1, s2) = shears(&flags[0], &flags[1], &flags[2], &flags[3]).unwrap();
        let moved = bulge_flags(&flags, v).unwrap();
        let (t1, t2) = shears(&moved[0], &moved[1], &moved[2], &moved[3]).unwrap();
        prop_assert!((t1 - s1 + 3.0 * v).abs() <= 1e-9);
        prop_assert!((t2 - s2 - 3.0 * v).abs() <= 1e-9);
    }
}

#[test]
fn bulging_every_flag_is_a_projective_map() {
    // moving all four flags by the same matrix leaves both shears fixed
    let flags = bulging_configuration(0.7, 1.3).unwrap();
    let b = *projkit::isometry::bulging_matrix(0.4).matrix();
    let moved = flags.map(|f| f.transform(&b).unwrap());
    let (s1, s2) = shears(&flags[0], &flags[1], &flags[2], &flags[3]).unwrap();
    let (t1, t2) = shears(&moved[0], &moved[1], &moved[2], &moved[3]).unwrap();
    assert!((s1 - t1).abs() < 1e-12 && (s2 - t2).abs() < 1e-12);
}
