use capmap::halfdisk::{
    ell, exterior_map_halfdisk, green_map, h_axis, h_general, inner_center, m_of_z, outer_summary_halfdisk,
};
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use std::f64::consts::PI;

type C = Complex<f64>;

const Y0: f64 = 0.485_868_271_756_645_7;
const MAX_INNER_RADIUS: f64 = 0.600_566_212_001_555_2;
const OUTER_RADIUS: f64 = 0.769_800_358_919_501;
const OUTER_CENTER_IM: f64 = 0.384_900_179_459_750_5;

fn c(re: f64, im: f64) -> C {
    Complex::new(re, im)
}

fn omega_points(seed: u64, n: usize) -> Vec<C> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| Complex::from_polar(rng.gen_range(0.01..0.99), rng.gen_range(0.01..PI - 0.01))).collect()
}

#[test]
fn ell_examples() {
    let l = ell(c(0.0, 0.5)).unwrap();
    assert!((l.im - 4.0 * 0.5f64.atan()).abs() < 1e-15);
    assert!(ell(c(1e-9, 1e-9)).unwrap().norm() < 1e-8);
    for z in omega_points(1, 100) {
        let im = ell(z).unwrap().im;
        assert!(im > 0.0 && im < PI);
    }
    assert!(ell(c(0.0, -0.5)).is_err() && ell(c(1.0, 0.0)).is_err());
}

#[test]
fn green_map_properties() {
    let w = c(0.2, 0.4);
    assert_eq!(green_map(w, w).unwrap(), c(0.0, 0.0));
    let pts = omega_points(2, 200);
    for pair in pts.chunks(2) {
        assert!(green_map(pair[0], pair[1]).unwrap().norm() < 1.0);
    }
    // ln|f_w| tends to 0 at the boundary.
    for z in [c(0.3, 1e-3), Complex::from_polar(1.0 - 1e-3, 1.0), c(-0.5, 1e-3)] {
        assert!(green_map(w, z).unwrap().norm().ln().abs() < 5e-3);
    }
}

#[test]
fn h_on_the_axis() {
    assert!((h_axis(0.5f64).unwrap() - 5.0 / 3.0).abs() < 1e-15);
    let y = (5f64.sqrt() - 2.0).sqrt();
    assert!((h_axis(y).unwrap() - 1.0 / (10.0 * 5f64.sqrt() - 22.0).sqrt()).abs() < 1e-12);
    assert!(h_axis(1e-6f64).unwrap() > 1e5 && h_axis(1.0f64 - 1e-6).unwrap() > 1e5);
    assert!(h_axis(0.0f64).is_err() && h_axis(1.0f64).is_err());
    for k in 1..=20 {
        let y = k as f64 / 21.0;
        assert!((h_general(c(0.0, y)).unwrap() - h_axis(y).unwrap()).abs() < 1e-12 * h_axis(y).unwrap());
    }
}

#[test]
fn h_blows_up_at_the_boundary() {
    let dir = Complex::from_polar(1.0, 0.7);
    let vals: Vec<f64> = [0.9, 0.99, 0.999].iter().map(|&r| h_general(dir * r).unwrap()).collect();
    assert!(vals[0] < vals[1] && vals[1] < vals[2]);
    assert!(h_general(c(0.0, 1.5)).is_err());
}

#[test]
fn inner_center_values() {
    let r = inner_center::<f64>().unwrap();
    assert!((r.y0 - Y0).abs() < 1e-10);
    assert!((r.y0 - (5f64.sqrt() - 2.0).sqrt()).abs() < 1e-10);
    assert!((r.max_inner_radius - MAX_INNER_RADIUS).abs() < 1e-12);
    assert!((r.max_inner_radius * r.h_at_y0 - 1.0).abs() < 1e-15);
    assert!((h_general(c(0.0, r.y0)).unwrap() - 1.0 / MAX_INNER_RADIUS).abs() < 1e-11);
}

#[test]
fn m_has_no_interior_pole() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let z = Complex::from_polar(rng.gen_range(0.0..0.999), rng.gen_range(-PI..PI));
        let m = m_of_z(z).unwrap();
        assert!(m.re.is_finite() && m.im.is_finite());
    }
    assert!(m_of_z(Complex::from_polar(1.0, PI / 6.0)).is_err());
}

#[test]
fn exterior_map_inverts() {
    // ((1 + 1/w)/(1 − 1/w))^{2/3} recovers m(z) with w = g(z).
    for z in [c(0.3, 0.2), c(-0.5, 0.1), c(0.1, -0.6), c(0.05, 0.0)] {
        let w = exterior_map_halfdisk(z).unwrap();
        let one = c(1.0, 0.0);
        let lhs = ((one + w.inv()) / (one - w.inv())).powf(2.0 / 3.0);
        let m = m_of_z(z).unwrap();
        assert!((lhs - m).norm() < 1e-9 * m.norm(), "{z}");
    }
}

#[test]
fn exterior_map_near_pole_and_boundary() {
    let z = c(1e-4, 0.0);
    let zg = z * exterior_map_halfdisk(z).unwrap();
    assert!((zg.re - OUTER_RADIUS).abs() < 1e-8);
    assert!(exterior_map_halfdisk(c(0.0, 0.0)).is_err());
    for r in [0.9, 0.99] {
        for j in 0..256 {
            let w = exterior_map_halfdisk(Complex::from_polar(r, 2.0 * PI * j as f64 / 256.0)).unwrap();
            assert!(w.norm() > 1.0 || w.im < 0.0);
        }
    }
}

#[test]
fn exterior_map_is_continuous_on_circles() {
    for r in [0.3, 0.6, 0.95] {
        let n = 2048;
        let pts: Vec<C> = (0..=n)
            .map(|j| exterior_map_halfdisk(Complex::from_polar(r, 2.0 * PI * j as f64 / n as f64)).unwrap())
            .collect();
        let jumps: Vec<f64> = pts.windows(2).map(|w| (w[1] - w[0]).norm()).collect();
        for k in 1..jumps.len() - 1 {
            let local = jumps[k - 1].max(jumps[k + 1]);
            assert!(jumps[k] < 10.0 * local, "r = {r}, k = {k}");
        }
    }
}

#[test]
fn outer_data_by_contour_average() {
    let s = outer_summary_halfdisk::<f64>(0.5, 64).unwrap();
    assert!((s.outer_radius - OUTER_RADIUS).abs() < 1e-9);
    assert!((s.outer_center.im - OUTER_CENTER_IM).abs() < 1e-9);
    assert!(s.outer_center.re.abs() < 1e-10);
    let a = outer_summary_halfdisk::<f64>(0.3, 64).unwrap();
    let b = outer_summary_halfdisk::<f64>(0.7, 64).unwrap();
    assert!((a.outer_center - s.outer_center).norm() < 1e-9 && (b.outer_center - s.outer_center).norm() < 1e-9);
    assert!((inner_center::<f64>().unwrap().y0 - s.outer_center.im).abs() > 0.1);
}
