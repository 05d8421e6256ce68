//! Parsing of numeric command-line values such as `sqrt3`, `sqrt(3)`,
//! `pi/2` or `-13/3`.

use num_complex::Complex;

fn atom(s: &str) -> Option<f64> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("pi") {
        return Some(std::f64::consts::PI);
    }
    let lower = s.to_ascii_lowercase();
    if let Some(rest) = lower.strip_prefix("sqrt") {
        let inner = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
        return atom(inner).filter(|v| *v >= 0.0).map(f64::sqrt);
    }
    s.parse::<f64>().ok()
}

fn product(s: &str) -> Option<f64> {
    s.split('*').try_fold(1.0, |acc, part| atom(part).map(|v| acc * v))
}

/// A real number: an optional sign, then factors joined by `*`, optionally
/// divided by one more such product.
pub fn parse_real(s: &str) -> Result<f64, String> {
    let t = s.trim();
    let (sign, body) = match t.strip_prefix('-') {
        Some(rest) if !rest.is_empty() && rest.parse::<f64>().is_err() => (-1.0, rest),
        _ => (1.0, t),
    };
    let value = match body.split_once('/') {
        Some((n, d)) => product(n).zip(product(d)).map(|(n, d)| n / d),
        None => product(body),
    };
    match value {
        Some(v) if v.is_finite() => Ok(sign * v),
        _ => Err(format!("cannot read '{s}' as a number")),
    }
}

/// A point written `x,y`.
pub fn parse_point(s: &str) -> Result<Complex<f64>, String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("expected a point 'x,y', got '{s}'"))?;
    Ok(Complex::new(parse_real(x)?, parse_real(y)?))
}
