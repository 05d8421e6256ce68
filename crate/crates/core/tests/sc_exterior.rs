use capmap::capacity::haegi_capacity;
use capmap::geometry::{ApexAngle, Triangle};
use capmap::sc_exterior::{
    build_path, closed_form_lambda_right_isosceles, f_closed_isosceles, f_numeric, isosceles_prevertices,
    laurent_summary, make_general_map, make_isosceles_map, make_unit_legs_right_map, map_grid,
    outer_center_unit_legs_right_triangle, residue_constraint, right_isosceles_kappa, solve_prevertices,
    ExteriorMapSpec, MapConfig, PathConfig, PathWalker, PrevertexOrder, Segment,
};
use capmap::specfun::EvalConfig;
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use std::f64::consts::PI;

type C = Complex<f64>;

const KAPPA_RIGHT_ISOSCELES: f64 = 0.475_634_443_879_981_9;
const LAMBDA: f64 = 0.504_503_933_450_026_1;

fn c(re: f64, im: f64) -> C {
    Complex::new(re, im)
}

fn iso(theta: f64) -> ExteriorMapSpec<f64> {
    make_isosceles_map(ApexAngle::new(theta).unwrap(), &MapConfig::default()).unwrap()
}

fn thirty_sixty_ninety() -> Triangle<f64> {
    Triangle::from_vertices([c(0.0, 0.0), c(1.0, 0.0), c(0.0, 3f64.sqrt())]).unwrap()
}

fn six_nine_thirteen() -> Triangle<f64> {
    Triangle::from_vertices([c(0.0, 0.0), c(6.0, 0.0), c(-13.0 / 3.0, 4.0 * 35f64.sqrt() / 3.0)]).unwrap()
}

fn random_disk_points(seed: u64, n: usize, rmin: f64, rmax: f64) -> Vec<C> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| Complex::from_polar(rng.gen_range(rmin..rmax), rng.gen_range(-PI..PI))).collect()
}

#[test]
fn path_shapes() {
    let cfg = PathConfig::default();
    let z0 = c(-1.0, 0.0);
    assert!(build_path(z0, z0, &cfg).unwrap().segments.is_empty());
    let p = build_path(-z0, z0, &cfg).unwrap();
    assert_eq!(p.segments.len(), 3);
    assert!(p.min_modulus() >= 0.5 - 1e-15);
    assert!(build_path(c(0.0, 0.04), z0, &cfg).is_err());
}

#[test]
fn integral_vanishes_at_base() {
    let m = iso(PI / 2.0);
    assert_eq!(f_numeric(c(-1.0, 0.0), &m, m.config()).unwrap(), c(0.0, 0.0));
    assert_eq!(m.g(c(-1.0, 0.0)).unwrap(), c(0.0, 0.0));
}

#[test]
fn right_isosceles_scale_constant() {
    // With f as defined (base point −1, a₂ in the upper half plane) the
    // combination −√2/(Im f(a₂) − Im f(a₃)) equals −κ.
    let m = iso(PI / 2.0);
    let shrink = 1.0 - m.config().prevertex_offset;
    let a = m.prevertices();
    let d = m.f(a[1] * shrink).unwrap().im - m.f(a[2] * shrink).unwrap().im;
    let v = -2f64.sqrt() / d;
    assert!((v + KAPPA_RIGHT_ISOSCELES).abs() < 1e-9, "{v}");
    assert!((m.scale().re + KAPPA_RIGHT_ISOSCELES).abs() < 1e-9);
    assert!((right_isosceles_kappa::<f64>().unwrap() - KAPPA_RIGHT_ISOSCELES).abs() < 1e-15);
}

#[test]
fn conjugate_symmetry() {
    let m = iso(PI / 2.0);
    for z in random_disk_points(20, 20, 0.1, 0.99) {
        let f = m.f(z).unwrap();
        let g = m.f(z.conj()).unwrap();
        assert!((f - g.conj()).norm() < 1e-10, "{z}");
    }
}

#[test]
fn continuation_is_path_independent() {
    let m = iso(2.0);
    let cfg = m.config();
    for z in random_disk_points(3, 6, 0.2, 0.95) {
        let direct = m.f(z).unwrap();
        // Inward to radius 0.3, the long way round, then out to z.
        let mut w = PathWalker::new(m.integrand(), cfg);
        let start = m.basepoint();
        w.traverse(Segment::Line { from: start, to: start * 0.3 }).unwrap();
        let (t0, mut t1) = (start.arg(), z.arg());
        if (t1 - t0).abs() < PI {
            t1 += if t1 > t0 { -2.0 * PI } else { 2.0 * PI };
        }
        w.traverse(Segment::Arc { radius: 0.3, from_angle: t0, to_angle: t1 }).unwrap();
        w.traverse(Segment::Line { from: w.position(), to: z }).unwrap();
        assert!((w.current().value - direct).norm() < 1e-10, "{z}");
    }
}

#[test]
fn closed_form_examples() {
    let ec = EvalConfig::default();
    for th in [PI / 6.0, PI / 2.0, 2.5] {
        let a = ApexAngle::new(th).unwrap();
        assert_eq!(f_closed_isosceles(c(-1.0, 0.0), a, &ec).unwrap(), c(0.0, 0.0));
        let m = iso(th);
        for j in 0..20 {
            let z = Complex::from_polar(0.6, 2.0 * PI * j as f64 / 20.0 + 0.05);
            let cf = f_closed_isosceles(z, a, &ec).unwrap();
            assert!((cf - m.f(z).unwrap()).norm() < 1e-9, "θ = {th}, z = {z}");
        }
    }
}

#[test]
fn closed_form_agrees_with_quadrature_on_grid() {
    let ec = EvalConfig::default();
    for (i, th) in [PI / 6.0, PI / 3.0, PI / 2.0, 2.0, 2.8].into_iter().enumerate() {
        let a = ApexAngle::new(th).unwrap();
        let m = iso(th);
        for z in random_disk_points(100 + i as u64, 12, 0.1, 0.98) {
            if let Ok(cf) = f_closed_isosceles(z, a, &ec) {
                assert!((cf - m.f(z).unwrap()).norm() < 1e-9, "θ = {th}, z = {z}");
            }
        }
    }
}

#[test]
fn closed_form_derivative_is_the_integrand() {
    let ec = EvalConfig::default();
    for th in [PI / 6.0, PI / 2.0, 2.5] {
        let a = ApexAngle::new(th).unwrap();
        let m = iso(th);
        for z in random_disk_points(7, 10, 0.2, 0.9) {
            let h = 1e-5;
            let fd = (f_closed_isosceles(z + h, a, &ec).unwrap() - f_closed_isosceles(z - h, a, &ec).unwrap()) / (2.0 * h);
            let want = m.integrand().eval(z);
            assert!((fd - want).norm() <= 1e-6 * want.norm(), "θ = {th}, z = {z}");
        }
    }
}

#[test]
fn isosceles_vertex_images() {
    for th in [PI / 6.0, PI / 2.0, 2.5] {
        let m = iso(th);
        let want = [c(0.0, 0.0), Complex::from_polar(1.0, -th / 2.0), Complex::from_polar(1.0, th / 2.0)];
        assert_eq!(m.target_vertices(), want);
        for r in m.vertex_residuals().unwrap() {
            assert!(r < 1e-6);
        }
    }
}

#[test]
fn general_maps_hit_their_vertices() {
    for tri in [thirty_sixty_ninety(), six_nine_thirteen()] {
        let m = make_general_map(&tri, &MapConfig::default()).unwrap();
        assert_eq!(m.target_vertices(), tri.vertices().unwrap());
        for r in m.vertex_residuals().unwrap() {
            assert!(r < 1e-6, "{r}");
        }
    }
    let m = make_general_map(&six_nine_thirteen(), &MapConfig::default()).unwrap();
    let a = m.prevertices();
    assert!((a[1] - c(0.0163, -0.9998)).norm() < 5e-4);
    assert!((a[2] - c(-0.4069, 0.9134)).norm() < 5e-4);
}

#[test]
fn general_map_capacities() {
    let m = make_general_map(&thirty_sixty_ninety(), &MapConfig::default()).unwrap();
    let k = laurent_summary(&m, 0.5, 64).unwrap().kappa;
    assert!((k - 3f64.sqrt() * 0.377_913_742_970_955_8).abs() < 1e-8);
    let m = make_general_map(&six_nine_thirteen(), &MapConfig::default()).unwrap();
    let k = laurent_summary(&m, 0.5, 64).unwrap().kappa;
    assert!((k - 3.805336).abs() < 1e-5);
}

#[test]
fn constructed_specs_satisfy_constraints() {
    let mut specs: Vec<ExteriorMapSpec<f64>> = [0.3, PI / 3.0, PI / 2.0, 2.0, 2.9].iter().map(|&t| iso(t)).collect();
    specs.push(make_general_map(&thirty_sixty_ninety(), &MapConfig::default()).unwrap());
    specs.push(make_general_map(&six_nine_thirteen(), &MapConfig::default()).unwrap());
    specs.push(make_unit_legs_right_map(&MapConfig::default()).unwrap());
    for s in &specs {
        let mu = s.exponents();
        assert!((mu.iter().sum::<f64>() - 2.0).abs() <= 1e-12);
        assert!(residue_constraint(&mu, &s.prevertices()).norm() <= 1e-10);
        assert!(s.prevertices().iter().all(|a| (a.norm() - 1.0).abs() <= 1e-12));
    }
}

#[test]
fn spec_rejects_broken_constraints() {
    let a = isosceles_prevertices(ApexAngle::new(PI / 2.0).unwrap());
    let one = c(1.0, 0.0);
    let zero = c(0.0, 0.0);
    let cfg = MapConfig::default();
    assert!(ExteriorMapSpec::new(a, [0.5, 0.75, 0.75], 0, one, zero, [zero; 3], cfg).is_ok());
    assert!(ExteriorMapSpec::new(a, [0.4, 0.8, 0.8], 0, one, zero, [zero; 3], cfg).is_err());
    assert!(ExteriorMapSpec::new(a.map(|p| p * 1.01), [0.5, 0.75, 0.75], 0, one, zero, [zero; 3], cfg).is_err());
    let b = solve_prevertices([0.5, 0.75, 0.75], c(-1.0, 0.0), PrevertexOrder::Clockwise).unwrap();
    assert!((b[1] - a[1]).norm() < 1e-12);
}

#[test]
fn centers_of_isosceles_maps() {
    let s = laurent_summary(&iso(PI / 2.0), 0.5, 64).unwrap();
    assert!((s.center.re - LAMBDA).abs() < 1e-9 && s.center.im.abs() < 1e-9);
    assert!(s.kappa > 0.0 && s.node_count >= 128);
    let s = laurent_summary(&iso(PI / 3.0), 0.5, 64).unwrap();
    assert!((s.center.re - 1.0 / 3f64.sqrt()).abs() < 1e-9);
    for th in [0.4, 1.2, 2.0, 2.7] {
        assert!(laurent_summary(&iso(th), 0.5, 64).unwrap().center.im.abs() < 1e-9);
    }
    assert!(laurent_summary(&iso(PI / 3.0), 0.5, 60).is_err());
    assert!(laurent_summary(&iso(PI / 3.0), 1.2, 64).is_err());
}

#[test]
fn laurent_is_radius_independent() {
    for m in [iso(PI / 6.0), iso(2.5), make_general_map(&six_nine_thirteen(), &MapConfig::default()).unwrap()] {
        let a = laurent_summary(&m, 0.4, 64).unwrap();
        let b = laurent_summary(&m, 0.7, 64).unwrap();
        assert!((a.kappa - b.kappa).abs() < 1e-9);
        assert!((a.center - b.center).norm() < 1e-9);
    }
}

#[test]
fn laurent_capacity_matches_haegi() {
    for th in [PI / 6.0, PI / 3.0, PI / 2.0, 2.5] {
        let k = laurent_summary(&iso(th), 0.5, 64).unwrap().kappa;
        let h = haegi_capacity(&Triangle::isosceles(th).unwrap()).unwrap().kappa;
        assert!((k - h).abs() < 1e-8, "θ = {th}");
    }
    for tri in [thirty_sixty_ninety(), six_nine_thirteen()] {
        let k = laurent_summary(&make_general_map(&tri, &MapConfig::default()).unwrap(), 0.5, 64).unwrap().kappa;
        assert!((k - haegi_capacity(&tri).unwrap().kappa).abs() < 1e-5);
    }
}

#[test]
fn lambda_closed_form() {
    let l = closed_form_lambda_right_isosceles::<f64>(&EvalConfig::default()).unwrap();
    assert!((l.re - LAMBDA).abs() < 1e-11 && l.im.abs() < 1e-11);
    let s = laurent_summary(&iso(PI / 2.0), 0.5, 64).unwrap();
    assert!((s.center - l).norm() < 1e-9);
}

#[test]
fn unit_legs_right_triangle_center() {
    let w = outer_center_unit_legs_right_triangle::<f64>(&EvalConfig::default()).unwrap();
    let want = 0.356_738_152_477_800_1;
    assert!((w.re - want).abs() < 1e-9 && (w.im - want).abs() < 1e-9);
    assert!((w.norm() - LAMBDA).abs() < 1e-11);
    assert!(w.re - 0.301 > 0.05 && w.im - 0.301 > 0.05);
    let m = make_unit_legs_right_map(&MapConfig::default()).unwrap();
    let s = laurent_summary(&m, 0.5, 64).unwrap();
    assert!((s.center - w).norm() < 1e-9);
    let v = m.target_vertices();
    assert!(v[0].norm() < 1e-15);
    assert!((v[1] - c(1.0, 0.0)).norm() < 1e-15 && (v[2] - c(0.0, 1.0)).norm() < 1e-15);
}

#[test]
fn grid_for_unit_legs_right_triangle() {
    let m = make_unit_legs_right_map(&MapConfig::default()).unwrap();
    let grid = map_grid(&m, 10, 8, 64).unwrap();
    assert_eq!(grid.circles.len(), 10);
    assert_eq!(grid.rays.len(), 8);
    let inner = &grid.circles[0];
    let centroid = inner.points.iter().sum::<C>() / inner.points.len() as f64;
    assert!((centroid.re - 0.356).abs() < 1e-3 && (centroid.im - 0.356).abs() < 1e-3);

    let tri = Triangle::from_vertices(m.target_vertices()).unwrap();
    assert!(grid.curves().flat_map(|g| g.points.iter()).all(|&p| !tri.contains(p, 0.0)));

    // Circle i sits at ray sample 7i; circle sample 8k at ray k.
    for i in 1..9 {
        let circle = &grid.circles[i];
        for (k, ray) in grid.rays.iter().enumerate() {
            let j = 8 * k;
            let tc = circle.points[(j + 1) % 64] - circle.points[(j + 63) % 64];
            let tr = ray.points[7 * i + 1] - ray.points[7 * i - 1];
            let angle = (tc / tr).arg().abs();
            assert!((angle - PI / 2.0).abs() < 1e-2, "circle {i}, ray {k}: {angle}");
        }
    }
}

#[test]
fn grid_validation() {
    let m = iso(PI / 2.0);
    assert!(map_grid(&m, 0, 4, 64).is_err());
    assert!(map_grid(&m, 3, 4, 32).is_err());
    let g = map_grid(&m, 20, 0, 64).unwrap();
    assert!(g.circles[0].level >= 0.08);
}
