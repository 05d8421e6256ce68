//! Appell F₁(a, b, b′, c; x, y) for real parameters and complex arguments.
//!
//! Two independent evaluators are provided: the double hypergeometric
//! series (|x|, |y| < 1) and the Euler integral (c > a > 0, x and y off the
//! cut [1, ∞)). [`appell_f1`] picks one of them.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::quad::{tanh_sinh, QuadConfig};
use crate::scalar::{cpow, Real};
use crate::specfun::gamma::ln_gamma;

/// Parameter tuple (a, b, b′, c; x, y).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AppellArgs<T: Real> {
    pub a: T,
    pub b: T,
    pub bprime: T,
    pub c: T,
    pub x: Complex<T>,
    pub y: Complex<T>,
}

impl<T: Real> AppellArgs<T> {
    pub fn new(a: T, b: T, bprime: T, c: T, x: Complex<T>, y: Complex<T>) -> Self {
        AppellArgs { a, b, bprime, c, x, y }
    }

    /// The same function value with (b, x) and (b′, y) exchanged.
    pub fn swapped(&self) -> Self {
        AppellArgs { b: self.bprime, bprime: self.b, x: self.y, y: self.x, ..*self }
    }

    fn check_c(&self) -> Result<()> {
        let finite = [self.a, self.b, self.bprime, self.c, self.x.re, self.x.im, self.y.re, self.y.im]
            .iter()
            .all(|v| v.is_finite());
        if !finite {
            return Err(Error::Domain("non-finite Appell argument".into()));
        }
        if self.c <= T::zero() && self.c == self.c.floor() {
            return Err(Error::Domain(format!("c = {} is a non-positive integer", self.c)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Largest shell index of the double series.
    pub max_terms: usize,
    /// Step halvings allowed in the integral evaluator.
    pub max_refinements: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig { abs_tol: 1e-14, rel_tol: 1e-14, max_terms: 4000, max_refinements: 12 }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.rel_tol > 0.0) {
            return Err(Error::Config("tolerances must be positive".into()));
        }
        if self.max_terms < 1 || self.max_refinements < 1 {
            return Err(Error::Config("iteration limits must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum F1Method {
    Series,
    Integral,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct F1Value<T: Real> {
    pub value: Complex<T>,
    pub error: T,
    pub method: F1Method,
}

/// Radius below which the dispatcher prefers the series.
pub const SERIES_RADIUS: f64 = 0.7;

/// Double series Σₘ Σₙ (a)ₘ₊ₙ (b)ₘ (b′)ₙ / ((c)ₘ₊ₙ m! n!) xᵐ yⁿ.
///
/// Summed in square shells k = max(m, n); stops once a geometric bound on
/// the remaining shells drops below tolerance.
pub fn appell_f1_series<T: Real>(args: &AppellArgs<T>, cfg: &EvalConfig) -> Result<F1Value<T>> {
    cfg.validate()?;
    args.check_c()?;
    let (rx, ry) = (args.x.norm(), args.y.norm());
    if rx >= T::one() || ry >= T::one() {
        return Err(Error::Domain("series requires |x| < 1 and |y| < 1".into()));
    }
    let r = rx.max(ry);
    let AppellArgs { a, b, bprime, c, x, y } = *args;
    let one = T::one();
    let zero = Complex::new(T::zero(), T::zero());
    let abs_tol = T::lit(cfg.abs_tol);
    let rel_tol = T::lit(cfg.rel_tol);

    // rows[m] = t(m, n) for the largest n reached so far in row m.
    let mut rows: Vec<Complex<T>> = vec![Complex::new(one, T::zero())];
    // t(k, 0) of the newest row.
    let mut column_head = rows[0];
    let mut sum = rows[0];
    let mut prev_shell = T::zero();
    let mut tail = T::infinity();

    for k in 1..=cfg.max_terms {
        let kt = T::from_usize_lossy(k);
        let mut shell = zero;
        let mut shell_abs = T::zero();
        // Extend rows m < k from n = k−1 to n = k.
        for (m, term) in rows.iter_mut().enumerate() {
            let mt = T::from_usize_lossy(m);
            let ratio = (a + mt + kt - one) * (bprime + kt - one) / ((c + mt + kt - one) * kt);
            *term = *term * y * ratio;
            shell = shell + *term;
            shell_abs = shell_abs + term.norm();
        }
        // New row m = k, n = 0..=k.
        column_head = column_head * x * ((a + kt - one) * (b + kt - one) / ((c + kt - one) * kt));
        let mut term = column_head;
        shell = shell + term;
        shell_abs = shell_abs + term.norm();
        for n in 1..=k {
            let nt = T::from_usize_lossy(n);
            term = term * y * ((a + kt + nt - one) * (bprime + nt - one) / ((c + kt + nt - one) * nt));
            shell = shell + term;
            shell_abs = shell_abs + term.norm();
        }
        rows.push(term);
        sum = sum + shell;

        let rho = if prev_shell > T::zero() { r.max(shell_abs / prev_shell) } else { r };
        if rho < one {
            tail = shell_abs * rho / (one - rho);
            let tol = abs_tol.max(rel_tol * sum.norm());
            if k >= 4 && tail <= tol {
                return Ok(F1Value { value: sum, error: tail, method: F1Method::Series });
            }
        }
        prev_shell = shell_abs;
    }
    Err(Error::NonConvergence { what: "Appell F1 series", estimate: tail.to_f64_lossy() })
}

fn check_cut<T: Real>(v: Complex<T>, name: &str) -> Result<()> {
    if v.im == T::zero() && v.re >= T::one() {
        return Err(Error::BranchCut(format!("1 − s·{name} crosses the negative real axis ({name} = {v})")));
    }
    Ok(())
}

/// Euler integral Γ(c)/(Γ(a)Γ(c−a)) ∫₀¹ s^{a−1}(1−s)^{c−a−1}(1−sx)^{−b}(1−sy)^{−b′} ds.
///
/// The interval is split at 1/2 and each half is mapped by a power
/// substitution that absorbs the endpoint singularity (s = v^{1/a}/2 on the
/// left, 1 − s = w^{1/(c−a)}/2 on the right) before tanh-sinh.
pub fn appell_f1_integral<T: Real>(args: &AppellArgs<T>, cfg: &EvalConfig) -> Result<F1Value<T>> {
    cfg.validate()?;
    args.check_c()?;
    let AppellArgs { a, b, bprime, c, x, y } = *args;
    if !(a > T::zero() && c > a) {
        return Err(Error::Domain(format!("integral form requires c > a > 0 (a = {a}, c = {c})")));
    }
    check_cut(x, "x")?;
    check_cut(y, "y")?;

    let one = T::one();
    let half = T::lit(0.5);
    let ca = c - a;
    let kernel = |s: T| -> Complex<T> {
        let u = Complex::new(one, T::zero()) - x * s;
        let v = Complex::new(one, T::zero()) - y * s;
        cpow(u, -b) * cpow(v, -bprime)
    };
    let qcfg = QuadConfig {
        abs_tol: cfg.abs_tol,
        rel_tol: cfg.rel_tol,
        max_levels: cfg.max_refinements,
    };

    // Left half: s = v^{1/a}/2, s^{a−1} ds = (1/2)^a / a dv.
    let left = tanh_sinh(
        |v: T, _| {
            let s = half * v.powf(one / a);
            Ok(kernel(s) * (one - s).powf(ca - one))
        },
        &qcfg,
    )?;
    // Right half: 1 − s = w^{1/(c−a)}/2, (1−s)^{c−a−1} ds = −(1/2)^{c−a}/(c−a) dw.
    let right = tanh_sinh(
        |w: T, _| {
            let sc = half * w.powf(one / ca);
            let s = one - sc;
            Ok(kernel(s) * s.powf(a - one))
        },
        &qcfg,
    )?;
    let left_scale = half.powf(a) / a;
    let right_scale = half.powf(ca) / ca;
    let norm = (ln_gamma(c)? - ln_gamma(a)? - ln_gamma(ca)?).exp();
    let value = (left.value * left_scale + right.value * right_scale) * norm;
    let error = (left.error * left_scale + right.error * right_scale) * norm;
    Ok(F1Value { value, error, method: F1Method::Integral })
}

fn integral_applicable<T: Real>(args: &AppellArgs<T>) -> bool {
    let cut = |v: Complex<T>| v.im == T::zero() && v.re >= T::one();
    args.a > T::zero() && args.c > args.a && !cut(args.x) && !cut(args.y)
}

/// F₁ through whichever evaluator applies: the series when |x|, |y| ≤ 0.7,
/// the integral otherwise, and the series again as a last resort inside the
/// unit bidisk.
pub fn appell_f1<T: Real>(args: &AppellArgs<T>, cfg: &EvalConfig) -> Result<F1Value<T>> {
    let lim = T::lit(SERIES_RADIUS);
    let (rx, ry) = (args.x.norm(), args.y.norm());
    if rx <= lim && ry <= lim {
        return appell_f1_series(args, cfg);
    }
    if integral_applicable(args) {
        return appell_f1_integral(args, cfg);
    }
    if rx < T::one() && ry < T::one() {
        return appell_f1_series(args, cfg);
    }
    Err(Error::Domain(format!(
        "F1 arguments x = {}, y = {} are outside both the series and the integral domain",
        args.x, args.y
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(a: f64, b: f64, bp: f64, c: f64, x: Complex<f64>, y: Complex<f64>) -> AppellArgs<f64> {
        AppellArgs::new(a, b, bp, c, x, y)
    }

    fn re(x: f64) -> Complex<f64> {
        Complex::new(x, 0.0)
    }

    /// ₂F₁(a, b; c; x) by its own one-dimensional series.
    fn gauss_2f1(a: f64, b: f64, c: f64, x: Complex<f64>) -> Complex<f64> {
        let mut term = Complex::new(1.0, 0.0);
        let mut sum = term;
        for n in 0..5000 {
            let nf = n as f64;
            term = term * x * ((a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)));
            sum += term;
            if term.norm() < 1e-18 {
                break;
            }
        }
        sum
    }

    #[test]
    fn origin_is_one() {
        let cfg = EvalConfig::default();
        let p = args(0.3, 1.7, -0.4, 2.2, re(0.0), re(0.0));
        assert_eq!(appell_f1_series(&p, &cfg).unwrap().value, Complex::new(1.0, 0.0));
        let v = appell_f1_integral(&p, &cfg).unwrap().value;
        assert!((v - 1.0).norm() < 1e-13);
    }

    #[test]
    fn reduces_to_logarithm() {
        // F₁(1,1,1,2; x, 0) = ₂F₁(1,1;2;x) = −ln(1−x)/x
        let cfg = EvalConfig::default();
        let expected = 2.0 * std::f64::consts::LN_2;
        let oracle = gauss_2f1(1.0, 1.0, 2.0, re(0.5));
        assert!((oracle.re - expected).abs() < 1e-14);
        let p = args(1.0, 1.0, 1.0, 2.0, re(0.5), re(0.0));
        let s = appell_f1_series(&p, &cfg).unwrap();
        let i = appell_f1_integral(&p, &cfg).unwrap();
        assert!((s.value.re - expected).abs() < 1e-12);
        assert!((i.value.re - expected).abs() < 1e-12);
    }

    #[test]
    fn swap_symmetry() {
        let cfg = EvalConfig::default();
        let p = args(0.3, 0.7, 1.2, 1.9, Complex::new(0.5, 0.2), Complex::new(-0.6, 0.1));
        let v = appell_f1_series(&p, &cfg).unwrap().value;
        let w = appell_f1_series(&p.swapped(), &cfg).unwrap().value;
        assert!((v - w).norm() < 1e-12);
    }

    #[test]
    fn high_precision_references() {
        // 30-digit reference values from an independent arbitrary-precision
        // evaluation of the same functions.
        let cfg = EvalConfig::default();
        let p = args(0.3, 0.7, 1.2, 1.9, Complex::new(0.5, 0.2), Complex::new(-0.6, 0.1));
        let want = Complex::new(0.958_732_570_383_063_5, 0.039_759_303_854_775_65);
        assert!((appell_f1_series(&p, &cfg).unwrap().value - want).norm() < 1e-12);
        assert!((appell_f1_integral(&p, &cfg).unwrap().value - want).norm() < 1e-12);
        // Outside the bidisk only the integral applies.
        let p = args(0.3, 0.7, 1.2, 1.9, Complex::new(0.9, 0.3), Complex::new(-2.0, 0.5));
        let want = Complex::new(0.850_250_247_808_033_6, 0.077_431_746_768_336_88);
        let got = appell_f1(&p, &cfg).unwrap();
        assert_eq!(got.method, F1Method::Integral);
        assert!((got.value - want).norm() < 1e-12);
        assert!(appell_f1_series(&p, &cfg).is_err());
    }

    #[test]
    fn lambda_arguments_are_served_by_the_series() {
        let s2 = 2f64.sqrt();
        let xi = Complex::new(0.5, -s2 / 4.0);
        let eta = xi.conj();
        let p = args(0.5, 0.25, 0.25, 1.5, xi, eta);
        let v = appell_f1(&p, &EvalConfig::default()).unwrap();
        assert_eq!(v.method, F1Method::Series);
        assert!((v.value - Complex::new(1.092_473_123_893_418_6, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn reduction_to_gauss() {
        let cfg = EvalConfig::default();
        for &(a, b, c) in &[(0.5, 0.25, 1.5), (1.3, -0.4, 2.7), (0.2, 2.0, 0.9)] {
            for &x in &[Complex::new(0.8, 0.0), Complex::new(-0.5, 0.6), Complex::new(0.1, -0.7)] {
                let p = args(a, b, 0.77, c, x, re(0.0));
                let v = appell_f1_series(&p, &cfg).unwrap().value;
                assert!((v - gauss_2f1(a, b, c, x)).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn errors() {
        let cfg = EvalConfig::default();
        let p = args(0.5, 0.5, 0.5, -2.0, re(0.1), re(0.1));
        assert!(matches!(appell_f1(&p, &cfg), Err(Error::Domain(_))));
        let p = args(0.5, 0.5, 0.5, 1.5, re(1.5), re(0.1));
        assert!(matches!(appell_f1_integral(&p, &cfg), Err(Error::BranchCut(_))));
        assert!(matches!(appell_f1(&p, &cfg), Err(Error::Domain(_))));
        let p = args(2.0, 0.5, 0.5, 1.5, re(0.1), re(0.1));
        assert!(matches!(appell_f1_integral(&p, &cfg), Err(Error::Domain(_))));
        let tight = EvalConfig { max_terms: 3, ..cfg };
        let p = args(0.5, 0.5, 0.5, 1.5, re(0.6), re(0.6));
        assert!(matches!(appell_f1_series(&p, &tight), Err(Error::NonConvergence { .. })));
        let bad = EvalConfig { abs_tol: 0.0, ..cfg };
        assert!(matches!(appell_f1_series(&p, &bad), Err(Error::Config(_))));
    }
}
