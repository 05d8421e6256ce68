//! Subcommand implementations and the exit-code mapping.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use capmap::capacity::{haegi_capacity, isosceles_capacity, maximize_isosceles_capacity};
use capmap::halfdisk::{inner_center, outer_summary_halfdisk};
use capmap::sc_exterior::{
    closed_form_lambda_right_isosceles, grid_radii, laurent_summary_with, make_general_map, make_isosceles_map,
    make_unit_legs_right_map, map_grid, outer_center_unit_legs_right_triangle, MapConfig, MomentConfig,
};
use capmap::{ApexAngle, ExteriorMapSpec, LaurentSummary, Triangle};
use capmap::specfun::EvalConfig;
use num_complex::Complex;
use serde_json::{Map, Value};
use thiserror::Error;

use crate::report::{self, Field, Report};
use crate::{Cli, Command, Format, RunArgs, Shape};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Numeric(#[from] capmap::Error),
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("CSV output failed: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Numeric(e) if e.is_invalid_input() => 2,
            CliError::Numeric(_) => 3,
            CliError::Io { .. } | CliError::Csv(_) => 4,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// Validated run settings.
#[derive(Debug, Clone)]
struct Settings {
    map: MapConfig,
    eval: EvalConfig,
    moments: MomentConfig,
    radius: f64,
    nodes: usize,
    format: Option<Format>,
    out: Option<PathBuf>,
    degrees: bool,
    unguarded: bool,
}

fn settings(run: &RunArgs) -> Result<Settings> {
    let mut map = MapConfig::default();
    let mut eval = EvalConfig::default();
    let mut moments = MomentConfig::default();
    if let Some(t) = run.tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(CliError::Invalid(format!("--tol must be positive, got {t}")));
        }
        map.quad.abs_tol = t;
        eval.abs_tol = t;
        moments.tol = moments.tol.max(t);
    }
    if let Some(t) = run.rel_tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(CliError::Invalid(format!("--rel-tol must be positive, got {t}")));
        }
        map.quad.rel_tol = t;
        eval.rel_tol = t;
    }
    if !(run.radius > 0.05 && run.radius < 1.0) {
        return Err(CliError::Invalid(format!("--radius must lie in (0.05, 1), got {}", run.radius)));
    }
    if run.nodes < 64 || !run.nodes.is_power_of_two() {
        return Err(CliError::Invalid(format!("--nodes must be a power of two >= 64, got {}", run.nodes)));
    }
    let format = match (run.json, run.format) {
        (true, Some(f)) if f != Format::Json => {
            return Err(CliError::Invalid("--json conflicts with --format".into()));
        }
        (true, _) => Some(Format::Json),
        (false, f) => f,
    };
    map.validate()?;
    eval.validate()?;
    Ok(Settings {
        map,
        eval,
        moments,
        radius: run.radius,
        nodes: run.nodes,
        format,
        out: run.out.clone(),
        degrees: run.degrees,
        unguarded: run.unguarded,
    })
}

#[derive(Debug, Clone, Copy)]
enum Target {
    Apex(ApexAngle),
    Tri(Triangle),
    UnitLegsRight,
}

impl Target {
    fn triangle(&self) -> Result<Triangle> {
        Ok(match self {
            Target::Apex(a) => Triangle::isosceles(a.radians())?,
            Target::Tri(t) => *t,
            Target::UnitLegsRight => unit_legs_right()?,
        })
    }

    fn describe(&self) -> String {
        match self {
            Target::Apex(a) => format!("isosceles, unit legs, apex {}", a.radians()),
            Target::Tri(t) => {
                let [a, b, c] = t.sides();
                format!("sides {a} {b} {c}")
            }
            Target::UnitLegsRight => "vertices 0, 1, i".into(),
        }
    }

    fn build_map(&self, cfg: &MapConfig) -> Result<ExteriorMapSpec> {
        Ok(match self {
            Target::Apex(a) => make_isosceles_map(*a, cfg)?,
            Target::Tri(t) => make_general_map(t, cfg)?,
            Target::UnitLegsRight => make_unit_legs_right_map(cfg)?,
        })
    }
}

fn unit_legs_right() -> Result<Triangle> {
    let o = Complex::new(0.0, 0.0);
    Ok(Triangle::from_vertices([o, Complex::new(1.0, 0.0), Complex::new(0.0, 1.0)])?)
}

fn resolve(shape: &Shape, s: &Settings) -> Result<Target> {
    let given = [shape.apex.is_some(), shape.sides.is_some() || shape.vertices.is_some(), shape.unit_legs_right];
    match given.iter().filter(|&&g| g).count() {
        0 => return Err(CliError::Invalid("give one of --apex, --sides, --vertices or --unit-legs-right".into())),
        1 => {}
        _ => return Err(CliError::Invalid("--apex, --sides/--vertices and --unit-legs-right are exclusive".into())),
    }
    if let Some(theta) = shape.apex {
        let theta = if s.degrees { theta.to_radians() } else { theta };
        let a = if s.unguarded { ApexAngle::new_unguarded(theta)? } else { ApexAngle::new(theta)? };
        return Ok(Target::Apex(a));
    }
    if shape.unit_legs_right {
        return Ok(Target::UnitLegsRight);
    }
    let from_sides = match shape.sides.as_deref() {
        Some(&[a, b, c]) => Some(Triangle::from_sides(a, b, c)?),
        _ => None,
    };
    let from_vertices = match shape.vertices.as_deref() {
        Some(&[p, q, r]) => Some(Triangle::from_vertices([p, q, r])?),
        _ => None,
    };
    match (from_sides, from_vertices) {
        (Some(t), None) | (None, Some(t)) => Ok(Target::Tri(t)),
        (Some(ts), Some(tv)) => {
            let scale = ts.perimeter();
            let off = ts.sides().iter().zip(tv.sides()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
            if off > 1e-9 * scale {
                return Err(CliError::Invalid("--sides disagree with the side lengths of --vertices".into()));
            }
            Ok(Target::Tri(tv))
        }
        (None, None) => unreachable!("checked above"),
    }
}

fn summary(spec: &ExteriorMapSpec, s: &Settings) -> Result<LaurentSummary> {
    Ok(laurent_summary_with(spec, s.radius, s.nodes, &s.moments)?)
}

fn push_summary(b: &mut Vec<(String, Field)>, sum: &LaurentSummary) {
    b.push(("kappa".into(), Field::Real(sum.kappa)));
    b.push(("center".into(), Field::Complex(sum.center)));
    b.push(("error".into(), Field::Real(sum.error)));
    b.push(("radius".into(), Field::Real(sum.radius_used)));
    b.push(("nodes".into(), Field::Int(sum.node_count)));
}

pub fn run(cli: &Cli) -> Result<()> {
    let s = settings(&cli.run)?;
    match &cli.command {
        Command::Capacity { shape, verify_sc } => {
            let r = capacity(&resolve(shape, &s)?, *verify_sc, &s)?;
            emit_report(&r, &s)
        }
        Command::Center { shape, closed_form } => {
            let r = center(&resolve(shape, &s)?, *closed_form, &s)?;
            emit_report(&r, &s)
        }
        Command::Halfdisk { inner, outer } => {
            let both = !inner && !outer;
            emit_report(&halfdisk(*inner || both, *outer || both, &s)?, &s)
        }
        Command::OptimizeKappa => emit_report(&optimize(&s)?, &s),
        Command::Prevertices { shape } => emit_report(&prevertices(&resolve(shape, &s)?, &s)?, &s),
        Command::MapGrid { shape, circles, rays, samples } => {
            if *circles == 0 {
                return Err(CliError::Invalid("--circles must be at least 1".into()));
            }
            if *samples < 64 {
                return Err(CliError::Invalid(format!("--samples must be at least 64, got {samples}")));
            }
            let target = resolve(shape, &s)?;
            grid(&target, *circles, *rays, *samples, &s)
        }
    }
}

fn capacity(target: &Target, verify_sc: bool, s: &Settings) -> Result<Report> {
    let mut r = Report::new("capacity");
    let tri = target.triangle()?;
    let haegi = haegi_capacity(&tri)?.kappa;
    let b = r.block("capacity");
    b.push(("triangle".into(), Field::Text(target.describe())));
    b.push(("kappa".into(), Field::Real(haegi)));
    b.push(("method".into(), Field::Text("haegi".into())));
    if let Target::Apex(a) = target {
        b.push(("kappa_isosceles_formula".into(), Field::Real(isosceles_capacity(a.radians())?.kappa)));
    }
    if verify_sc {
        let spec = target.build_map(&s.map)?;
        let sum = summary(&spec, s)?;
        let b = r.block("sc");
        push_summary(b, &sum);
        b.push(("kappa_difference".into(), Field::Real(sum.kappa - haegi)));
    }
    Ok(r)
}

fn center(target: &Target, closed_form: bool, s: &Settings) -> Result<Report> {
    let closed = if closed_form {
        match target {
            Target::Apex(a) if (a.radians() - std::f64::consts::FRAC_PI_2).abs() < 1e-3 => {
                Some(closed_form_lambda_right_isosceles::<f64>(&s.eval)?)
            }
            Target::UnitLegsRight => Some(outer_center_unit_legs_right_triangle::<f64>(&s.eval)?),
            _ => {
                return Err(CliError::Invalid(
                    "--closed-form needs the right isosceles triangle (--apex near π/2 or --unit-legs-right)".into(),
                ))
            }
        }
    } else {
        None
    };
    let spec = target.build_map(&s.map)?;
    let sum = summary(&spec, s)?;
    let mut r = Report::new("center");
    let b = r.block("center");
    b.push(("triangle".into(), Field::Text(target.describe())));
    b.push(("vertices".into(), Field::Points(spec.target_vertices().to_vec())));
    push_summary(b, &sum);
    if let Some(c) = closed {
        let b = r.block("closed_form");
        b.push(("center".into(), Field::Complex(c)));
        b.push(("difference".into(), Field::Real((c - sum.center).norm())));
    }
    Ok(r)
}

fn halfdisk(inner: bool, outer: bool, s: &Settings) -> Result<Report> {
    let mut r = Report::new("halfdisk");
    if inner {
        let res = inner_center::<f64>()?;
        let b = r.block("inner");
        b.push(("y0".into(), Field::Real(res.y0)));
        b.push(("center".into(), Field::Complex(Complex::new(0.0, res.y0))));
        b.push(("max_inner_radius".into(), Field::Real(res.max_inner_radius)));
    }
    if outer {
        let res = outer_summary_halfdisk(s.radius, s.nodes)?;
        let b = r.block("outer");
        b.push(("outer_radius".into(), Field::Real(res.outer_radius)));
        b.push(("outer_center".into(), Field::Complex(res.outer_center)));
        b.push(("error".into(), Field::Real(res.error)));
        b.push(("nodes".into(), Field::Int(res.node_count)));
    }
    Ok(r)
}

fn optimize(s: &Settings) -> Result<Report> {
    let m = maximize_isosceles_capacity::<f64>()?;
    let mut r = Report::new("optimize-kappa");
    let b = r.block("optimum");
    b.push(("theta".into(), Field::Real(m.theta)));
    if s.degrees {
        b.push(("theta_degrees".into(), Field::Real(m.theta.to_degrees())));
    }
    b.push(("kappa".into(), Field::Real(m.kappa)));
    b.push(("kappa_provenance".into(), Field::Text("derived".into())));
    Ok(r)
}

fn prevertices(target: &Target, s: &Settings) -> Result<Report> {
    let spec = target.build_map(&s.map)?;
    let mut r = Report::new("prevertices");
    let b = r.block("map");
    b.push(("triangle".into(), Field::Text(target.describe())));
    b.push(("exponents".into(), Field::Reals(spec.exponents().to_vec())));
    b.push(("prevertices".into(), Field::Points(spec.prevertices().to_vec())));
    b.push(("vertices".into(), Field::Points(spec.target_vertices().to_vec())));
    b.push(("basepoint_index".into(), Field::Int(spec.basepoint_index() + 1)));
    b.push(("scale".into(), Field::Complex(spec.scale())));
    b.push(("shift".into(), Field::Complex(spec.shift())));
    b.push(("vertex_residuals".into(), Field::Reals(spec.vertex_residuals()?.to_vec())));
    Ok(r)
}

fn grid(target: &Target, circles: usize, rays: usize, samples: usize, s: &Settings) -> Result<()> {
    let spec = target.build_map(&s.map)?;
    let sum = summary(&spec, s)?;
    let g = map_grid(&spec, circles, rays, samples)?;
    let radii = grid_radii::<f64>(circles);
    let vertices = spec.target_vertices();
    let text = if s.format == Some(Format::Json) {
        let mut doc = report::document("map-grid");
        let mut meta = Map::new();
        meta.insert("triangle".into(), Value::from(target.describe()));
        meta.insert("vertices".into(), Value::Array(vertices.iter().map(|&z| report::json_complex(z)).collect()));
        meta.insert("kappa".into(), report::json_real(sum.kappa));
        meta.insert("center".into(), report::json_complex(sum.center));
        meta.insert("radii".into(), Value::Array(radii.iter().map(|&x| report::json_real(x)).collect()));
        meta.insert("circles".into(), Value::from(circles));
        meta.insert("rays".into(), Value::from(rays));
        meta.insert("samples".into(), Value::from(samples));
        doc.insert("metadata".into(), Value::Object(meta));
        let mut records = Vec::new();
        for c in g.curves() {
            for (&t, &z) in c.params.iter().zip(&c.points) {
                let mut rec = Map::new();
                rec.insert("object_type".into(), Value::from(c.kind.tag()));
                rec.insert("object_index".into(), Value::from(c.index));
                rec.insert("t".into(), report::json_real(t));
                rec.insert("re".into(), report::json_real(z.re));
                rec.insert("im".into(), report::json_real(z.im));
                records.push(Value::Object(rec));
            }
        }
        doc.insert("records".into(), Value::Array(records));
        let mut out = serde_json::to_string(&Value::Object(doc)).expect("JSON values always serialize");
        out.push('\n');
        out
    } else {
        let mut out = String::new();
        let _ = writeln!(out, "# schema: {}", report::SCHEMA);
        let _ = writeln!(out, "# triangle: {}", target.describe());
        let vs: Vec<String> = vertices.iter().map(|z| format!("{:.16e}{:+.16e}i", z.re, z.im)).collect();
        let _ = writeln!(out, "# vertices: {}", vs.join(" "));
        let _ = writeln!(out, "# kappa: {:.16e}", sum.kappa);
        let _ = writeln!(out, "# center: {:.16e}{:+.16e}i", sum.center.re, sum.center.im);
        let rs: Vec<String> = radii.iter().map(|r| format!("{r:.16e}")).collect();
        let _ = writeln!(out, "# radii: {}", rs.join(" "));
        let mut w = csv::Writer::from_writer(out.into_bytes());
        w.write_record(["object_type", "object_index", "t", "re", "im"])?;
        for c in g.curves() {
            let idx = c.index.to_string();
            for (&t, &z) in c.params.iter().zip(&c.points) {
                w.write_record([
                    c.kind.tag(),
                    idx.as_str(),
                    &format!("{t:.16e}"),
                    &format!("{:.16e}", z.re),
                    &format!("{:.16e}", z.im),
                ])?;
            }
        }
        let bytes = w.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
        String::from_utf8(bytes).expect("CSV built from UTF-8 strings")
    };
    emit(&text, s)
}

fn emit_report(r: &Report, s: &Settings) -> Result<()> {
    let text = match s.format.unwrap_or(Format::Text) {
        Format::Text => report::to_text(r),
        Format::Json => report::to_json(r),
        Format::Csv => report::to_csv(r)?,
    };
    emit(&text, s)
}

fn emit(text: &str, s: &Settings) -> Result<()> {
    match &s.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|source| CliError::Io { path: path.display().to_string(), source }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io { path: "standard output".into(), source })
        }
    }
}
