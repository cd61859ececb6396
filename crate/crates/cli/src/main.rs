use std::io::{self, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use polygamma::verify::{json_number, run_integral_suite, run_suite, JsonComplex, Suite, SuiteOptions};
use polygamma::{
    asymptotic_psi, fourier_psi, gen_polygamma, shift_rhs, taylor_psi, Complex64, EvalConfig, IdentityReport,
};
use rayon::prelude::*;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

/// Agreement demanded between two methods in `expansions-demo`.
const DEMO_TOL: f64 = 1e-8;
/// Bernoulli terms offered to the asymptotic series.
const ASYMPTOTIC_MAX_K: usize = 40;

#[derive(Parser)]
#[command(name = "polygamma", version, about = "Evaluate and check the generalized polygamma function psi(z, q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate psi(z, q) at one point
    Eval(EvalArgs),
    /// Tabulate psi(z, q) over a range of q
    Table(TableArgs),
    /// Run randomized and grid identity checks
    CheckIdentities(IdentityArgs),
    /// Run the definite-integral checks
    CheckIntegrals(IntegralArgs),
    /// Compare the evaluation methods where their domains overlap
    ExpansionsDemo(DemoArgs),
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    z: Complex64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    q: Complex64,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
    #[arg(long, value_parser = parse_tol, default_value_t = 1e-13)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    z: Complex64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    q_start: Complex64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    q_end: Complex64,
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    steps: u32,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
    #[arg(long, value_parser = parse_tol, default_value_t = 1e-13)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct IdentityArgs {
    #[arg(long, value_parser = parse_suite, default_value = "all")]
    suite: Suite,
    /// Random samples per suite; each suite has its own default
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Override every check's tolerance
    #[arg(long, value_parser = parse_tol)]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct IntegralArgs {
    #[arg(long, value_parser = parse_tol)]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct DemoArgs {
    /// Order to compare at; requires --q. Without both a fixed grid is used
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, requires = "q")]
    z: Option<Complex64>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, requires = "z")]
    q: Option<Complex64>,
    #[arg(long, value_parser = parse_tol, default_value_t = 1e-13)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Direct,
    Taylor,
    Fourier,
    Asymptotic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

/// Parses `a`, `bi`, `a+bi` or `a-bi`, with optional exponents.
fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("'{s}' is not a complex number of the form a+bi");
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        return t.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| bad());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        x => x,
    };
    let re = re.parse::<f64>().map_err(|_| bad())?;
    let im = im.parse::<f64>().map_err(|_| bad())?;
    Ok(Complex64::new(re, im))
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let t: f64 = s.parse().map_err(|_| format!("'{s}' is not a number"))?;
    if (1e-14..=1e-2).contains(&t) {
        Ok(t)
    } else {
        Err(format!("{t:e} is outside [1e-14, 1e-2]"))
    }
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    Suite::from_name(s)
        .ok_or_else(|| format!("unknown suite '{s}' (shift|mult|derivative|negapoly|taylor|fourier|grossman|all)"))
}

struct Evaluation {
    z: Complex64,
    q: Complex64,
    value: Complex64,
    est_error: f64,
    method: &'static str,
}

impl Serialize for Evaluation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Evaluation", 5)?;
        st.serialize_field("z", &JsonComplex(self.z))?;
        st.serialize_field("q", &JsonComplex(self.q))?;
        st.serialize_field("value", &JsonComplex(self.value))?;
        st.serialize_field("est_error", &json_number(self.est_error))?;
        st.serialize_field("method", self.method)?;
        st.end()
    }
}

fn real_q(q: Complex64, method: &str) -> Result<f64, String> {
    if q.im == 0.0 {
        Ok(q.re)
    } else {
        Err(format!("--method {method} needs a real q, got {q}"))
    }
}

fn evaluate(z: Complex64, q: Complex64, method: Method, tol: f64) -> Result<Evaluation, String> {
    let cfg = EvalConfig::with_tol(tol);
    let at = |value, est_error, method| Evaluation {
        z,
        q,
        value,
        est_error,
        method,
    };
    let fail = |name: &str, e: polygamma::Error| format!("--method {name} at z={z}, q={q}: {e}");
    match method {
        Method::Auto if q.norm() < 1.0 => {
            let v = gen_polygamma(z, q + 1.0, cfg).map_err(|e| fail("auto", e))?;
            let s = shift_rhs(z, q);
            Ok(at(v.value - s, v.est_error + f64::EPSILON * s.norm(), "shift-direct"))
        }
        Method::Auto | Method::Direct => {
            let v = gen_polygamma(z, q, cfg).map_err(|e| fail("direct", e))?;
            Ok(at(v.value, v.est_error, "direct"))
        }
        Method::Taylor => {
            let v = taylor_psi(z, q - 1.0, tol).map_err(|e| fail("taylor", e))?;
            Ok(at(v.value, v.est_truncation, "taylor"))
        }
        Method::Fourier => {
            let v = fourier_psi(z, real_q(q, "fourier")?, tol).map_err(|e| fail("fourier", e))?;
            Ok(at(v.value, v.est_truncation, "fourier"))
        }
        Method::Asymptotic => {
            let v = asymptotic_psi(z, real_q(q, "asymptotic")?, ASYMPTOTIC_MAX_K).map_err(|e| fail("asymptotic", e))?;
            let floor = 4.0 * f64::EPSILON * v.value.norm();
            Ok(at(v.value, v.first_omitted.max(floor), "asymptotic"))
        }
    }
}

fn sci(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        String::new()
    }
}

fn show(c: Complex64) -> String {
    format!("{}{:+.16e}i", sci(c.re), c.im)
}

fn write_csv(rows: &[Evaluation], out: impl Write) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["z_re", "z_im", "q_re", "q_im", "value_re", "value_im", "est_error", "method"])?;
    for r in rows {
        w.write_record([
            sci(r.z.re),
            sci(r.z.im),
            sci(r.q.re),
            sci(r.q.im),
            sci(r.value.re),
            sci(r.value.im),
            sci(r.est_error),
            r.method.to_string(),
        ])?;
    }
    w.flush()
}

fn write_text(rows: &[Evaluation], out: &mut impl Write) -> io::Result<()> {
    for r in rows {
        writeln!(
            out,
            "psi({}, {}) = {}  est_error {:.2e}  method {}",
            r.z, r.q, show(r.value), r.est_error, r.method
        )?;
    }
    Ok(())
}

fn write_json(value: &impl Serialize, out: &mut impl Write) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

fn write_reports(reports: &[IdentityReport], format: Format, out: &mut impl Write) -> io::Result<()> {
    match format {
        Format::Text => {
            for r in reports {
                let status = if r.pass { "PASS" } else { "FAIL" };
                let inputs: Vec<String> = r.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
                writeln!(
                    out,
                    "{status} {} [{}] abs {:.2e} rel {:.2e} tol {:.0e}{}",
                    r.identity_id,
                    inputs.join(", "),
                    r.abs_residual,
                    r.rel_residual,
                    r.tol,
                    r.error.as_ref().map(|e| format!(" error: {e}")).unwrap_or_default()
                )?;
            }
            let passed = reports.iter().filter(|r| r.pass).count();
            writeln!(out, "{passed} of {} checks passed", reports.len())
        }
        _ => write_json(&reports, out),
    }
}

struct DemoPoint {
    z: Complex64,
    q: Complex64,
    results: Vec<Evaluation>,
    skipped: Vec<(&'static str, String)>,
    max_deviation: f64,
    pass: bool,
}

impl Serialize for DemoPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct Skipped<'a>(&'a [(&'static str, String)]);
        impl Serialize for Skipped<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.collect_map(self.0.iter().map(|(k, v)| (k, v)))
            }
        }
        let mut st = s.serialize_struct("DemoPoint", 6)?;
        st.serialize_field("z", &JsonComplex(self.z))?;
        st.serialize_field("q", &JsonComplex(self.q))?;
        st.serialize_field("results", &self.results)?;
        st.serialize_field("skipped", &Skipped(&self.skipped))?;
        st.serialize_field("max_deviation", &json_number(self.max_deviation))?;
        st.serialize_field("pass", &self.pass)?;
        st.end()
    }
}

fn demo_point(z: Complex64, q: Complex64, tol: f64) -> DemoPoint {
    let mut results = Vec::new();
    let mut skipped = Vec::new();
    let methods = [
        (Method::Auto, "auto"),
        (Method::Direct, "direct"),
        (Method::Taylor, "taylor"),
        (Method::Fourier, "fourier"),
        (Method::Asymptotic, "asymptotic"),
    ];
    for (m, name) in methods {
        if m == Method::Auto && q.norm() >= 1.0 {
            continue;
        }
        match evaluate(z, q, m, tol) {
            Ok(e) if e.est_error > DEMO_TOL => {
                skipped.push((name, format!("estimated error {:.2e} above {DEMO_TOL:e}", e.est_error)))
            }
            Ok(e) => results.push(e),
            Err(e) => skipped.push((name, e)),
        }
    }
    let mut max_deviation = 0.0f64;
    for (i, a) in results.iter().enumerate() {
        for b in &results[i + 1..] {
            max_deviation = max_deviation.max((a.value - b.value).norm());
        }
    }
    DemoPoint {
        z,
        q,
        pass: results.len() >= 2 && max_deviation <= DEMO_TOL,
        results,
        skipped,
        max_deviation,
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ! {
    Cli::command().error(ErrorKind::ValueValidation, msg).exit()
}

fn reject_csv(format: Format, command: &str) {
    if format == Format::Csv {
        usage_error(format!("--format csv is only available for eval and table, not {command}"));
    }
}

fn run(cli: Cli) -> io::Result<bool> {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let ok = match cli.command {
        Command::Eval(a) => {
            let e = evaluate(a.z, a.q, a.method, a.tol).unwrap_or_else(|e| usage_error(e));
            match a.format {
                Format::Json => write_json(&e, &mut out)?,
                Format::Csv => write_csv(std::slice::from_ref(&e), &mut out)?,
                Format::Text => write_text(std::slice::from_ref(&e), &mut out)?,
            }
            true
        }
        Command::Table(a) => {
            let n = a.steps as usize;
            let rows: Vec<_> = (0..n)
                .into_par_iter()
                .map(|k| {
                    let t = k as f64 / (n - 1) as f64;
                    evaluate(a.z, a.q_start + (a.q_end - a.q_start) * t, a.method, a.tol)
                })
                .collect();
            let rows: Vec<Evaluation> = rows.into_iter().collect::<Result<_, _>>().unwrap_or_else(|e| usage_error(e));
            match a.format {
                Format::Json => write_json(&rows, &mut out)?,
                Format::Csv => write_csv(&rows, &mut out)?,
                Format::Text => write_text(&rows, &mut out)?,
            }
            true
        }
        Command::CheckIdentities(a) => {
            reject_csv(a.format, "check-identities");
            if a.samples == Some(0) {
                usage_error("--samples must be at least 1");
            }
            let opts = SuiteOptions {
                seed: a.seed,
                samples: a.samples,
                tol: a.tol,
            };
            let reports = run_suite(a.suite, opts);
            write_reports(&reports, a.format, &mut out)?;
            reports.iter().all(|r| r.pass)
        }
        Command::CheckIntegrals(a) => {
            reject_csv(a.format, "check-integrals");
            let reports = run_integral_suite(a.tol);
            write_reports(&reports, a.format, &mut out)?;
            reports.iter().all(|r| r.pass)
        }
        Command::ExpansionsDemo(a) => {
            reject_csv(a.format, "expansions-demo");
            let grid = match (a.z, a.q) {
                (Some(z), Some(q)) => vec![(z, q)],
                _ => vec![
                    (Complex64::new(-2.5, 0.0), Complex64::new(0.25, 0.0)),
                    (Complex64::new(-1.5, 0.0), Complex64::new(0.6, 0.0)),
                    (Complex64::new(-3.0, 0.5), Complex64::new(0.4, 0.0)),
                    (Complex64::new(0.5, 1.0), Complex64::new(0.3, 0.2)),
                    (Complex64::new(-1.5, 0.0), Complex64::new(50.0, 0.0)),
                    (Complex64::new(2.0, -1.0), Complex64::new(40.0, 0.0)),
                ],
            };
            let points: Vec<DemoPoint> = grid.into_par_iter().map(|(z, q)| demo_point(z, q, a.tol)).collect();
            match a.format {
                Format::Text => {
                    for p in &points {
                        let status = if p.pass { "PASS" } else { "FAIL" };
                        writeln!(out, "{status} z={} q={} max deviation {:.2e}", p.z, p.q, p.max_deviation)?;
                        write_text(&p.results, &mut out)?;
                        for (m, why) in &p.skipped {
                            writeln!(out, "  {m} skipped: {why}")?;
                        }
                    }
                }
                _ => write_json(&points, &mut out)?,
            }
            points.iter().all(|p| p.pass)
        }
    };
    out.flush()?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_forms() {
        let cases = [
            ("1.5", (1.5, 0.0)),
            ("-1", (-1.0, 0.0)),
            ("2i", (0.0, 2.0)),
            ("-i", (0.0, -1.0)),
            ("1-2i", (1.0, -2.0)),
            ("-0.5+0.25i", (-0.5, 0.25)),
            ("1e-3-2.5e+1i", (1e-3, -25.0)),
            (" 3 + 4i ", (3.0, 4.0)),
            ("2+i", (2.0, 1.0)),
        ];
        for (s, (re, im)) in cases {
            assert_eq!(parse_complex(s), Ok(Complex64::new(re, im)), "{s}");
        }
        for s in ["", "abc", "1+2", "1+2ii", "i1"] {
            assert!(parse_complex(s).is_err(), "{s}");
        }
    }

    #[test]
    fn tol_range() {
        assert!(parse_tol("1e-14").is_ok());
        assert!(parse_tol("1e-2").is_ok());
        assert!(parse_tol("1e-15").is_err());
        assert!(parse_tol("0.1").is_err());
        assert!(parse_tol("x").is_err());
    }

    #[test]
    fn methods_agree_where_they_overlap() {
        let p = demo_point(Complex64::new(-2.5, 0.0), Complex64::new(0.25, 0.0), 1e-13);
        assert!(p.pass, "deviation {}", p.max_deviation);
        let names: Vec<_> = p.results.iter().map(|r| r.method).collect();
        assert_eq!(names, ["shift-direct", "direct", "taylor", "fourier"]);
    }
}
