//! The `horoflex` command line: datum files in, flexibility certificates out.

pub mod examples;
pub mod report;
pub mod spec;

use std::path::{Path, PathBuf};
use std::time::Instant;

use horoflex_core::ehm::EhmError;
use horoflex_core::poly::PolyError;
use horoflex_core::semigroup::{DatumError, HorosphericalDatum, WitnessViolation};
use serde::Serialize;
use thiserror::Error;

use report::{Outcome, RenderText, Report, Timing, SCHEMA_VERSION, TOOL};
use spec::{parse_spec, DatumSpec, SpecError};

pub const MAX_RANK_VAR: &str = "HOROFLEX_MAX_RANK";
pub const DEFAULT_MAX_RANK: usize = 6;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Spec(#[from] SpecError),
    #[error("{0}")]
    Datum(#[from] DatumError),
    #[error("{0}")]
    Ehm(#[from] EhmError),
    #[error("{0}")]
    Poly(#[from] PolyError),
    #[error("witness {index} failed verification: {violation}")]
    CorruptWitness { index: usize, violation: WitnessViolation },
    #[error("{witnesses} witnesses for {faces} faces")]
    WitnessCount { faces: usize, witnesses: usize },
    #[error("no face {index}; the cone has {count} faces (0..{count})")]
    NoSuchFace { index: usize, count: usize },
    #[error("unknown example {0:?}; try `horoflex examples list`")]
    UnknownExample(String),
    #[error("{MAX_RANK_VAR} must be a positive integer, got {0:?}")]
    BadRankCap(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// What a command printed and how the process should exit.
#[derive(Debug)]
pub struct Rendered {
    pub stdout: String,
    pub code: i32,
}

pub fn emit<T: Serialize + RenderText>(
    command: &'static str,
    body: T,
    outcome: Outcome,
    format: Format,
    started: Instant,
) -> Rendered {
    let stdout = match format {
        Format::Text => body.render_text(),
        Format::Json => {
            let report = Report {
                schema: SCHEMA_VERSION,
                tool: TOOL,
                command,
                body,
                timing: Timing {
                    elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
                },
            };
            let mut s = serde_json::to_string_pretty(&report).expect("reports serialize");
            s.push('\n');
            s
        }
    };
    Rendered {
        stdout,
        code: outcome.exit_code(),
    }
}

/// Reads `HOROFLEX_MAX_RANK`, defaulting to 6.
pub fn max_rank_from_env() -> Result<usize, CliError> {
    match std::env::var(MAX_RANK_VAR) {
        Err(_) => Ok(DEFAULT_MAX_RANK),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(CliError::BadRankCap(v)),
        },
    }
}

pub fn load_datum(path: &Path, max_rank: usize) -> Result<(DatumSpec, HorosphericalDatum), CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let spec = parse_spec(&text)?;
    let datum = spec.to_datum(max_rank, Some(&text))?;
    Ok((spec, datum))
}

pub fn run_check(spec: &DatumSpec, d: &HorosphericalDatum, format: Format) -> Result<Rendered, CliError> {
    let started = Instant::now();
    let body = report::check(spec, d)?;
    let outcome = body.outcome();
    Ok(emit("check", body, outcome, format, started))
}

pub fn run_saturate(
    spec: &DatumSpec,
    d: &HorosphericalDatum,
    format: Format,
    output: Option<&Path>,
) -> Result<Rendered, CliError> {
    let started = Instant::now();
    let body = report::saturate_report(spec, d)?;
    if let Some(path) = output {
        let mut text = serde_json::to_string_pretty(&body.saturated).expect("specs serialize");
        text.push('\n');
        std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
    }
    Ok(emit("saturate", body, Outcome::Pass, format, started))
}

pub fn run_orbits(spec: &DatumSpec, d: &HorosphericalDatum, format: Format) -> Rendered {
    let started = Instant::now();
    emit("orbits", report::orbits(spec, d), Outcome::Pass, format, started)
}

pub fn run_grading(spec: &DatumSpec, d: &HorosphericalDatum, face: usize, format: Format) -> Result<Rendered, CliError> {
    let started = Instant::now();
    let body = report::grading(spec, d, face)?;
    Ok(emit("grading", body, Outcome::Pass, format, started))
}

pub fn run_ehm(p: i64, q: i64, m: i64, bound: u32, format: Format) -> Result<Rendered, CliError> {
    let started = Instant::now();
    let body = examples::ehm(p, q, m, bound)?;
    let outcome = body.outcome();
    Ok(emit("ehm", body, outcome, format, started))
}

pub fn run_example(name: &str, format: Format, max_rank: usize) -> Result<Rendered, CliError> {
    if let Some(spec) = examples::datum_example(name) {
        let d = spec.to_datum(max_rank, None)?;
        return run_check(&spec, &d, format);
    }
    if let Some((p, q, m)) = examples::ehm_example(name) {
        return run_ehm(p, q, m, examples::DEFAULT_EHM_BOUND, format);
    }
    if name == "danielewski" {
        let started = Instant::now();
        let body = examples::danielewski()?;
        let outcome = body.outcome();
        return Ok(emit("danielewski", body, outcome, format, started));
    }
    Err(CliError::UnknownExample(name.into()))
}

#[derive(Serialize)]
pub struct ExampleRow {
    pub name: &'static str,
    pub summary: &'static str,
}

#[derive(Serialize)]
pub struct ExampleList {
    pub examples: Vec<ExampleRow>,
}

impl RenderText for ExampleList {
    fn render_text(&self) -> String {
        let width = self.examples.iter().map(|e| e.name.len()).max().unwrap_or(0);
        self.examples
            .iter()
            .map(|e| format!("{:width$}  {}\n", e.name, e.summary))
            .collect()
    }
}

pub fn run_list(format: Format) -> Rendered {
    let started = Instant::now();
    let body = ExampleList {
        examples: examples::REGISTRY
            .iter()
            .map(|e| ExampleRow {
                name: e.name,
                summary: e.summary,
            })
            .collect(),
    };
    emit("examples", body, Outcome::Pass, format, started)
}

#[cfg(test)]
mod tests {
    use super::*;
    use horoflex_core::semigroup::flexibility_verdict;

    fn datum(gens: &[&[i64]]) -> (DatumSpec, HorosphericalDatum) {
        let d = HorosphericalDatum::toric(gens).unwrap();
        (DatumSpec::from_datum(&d, None), d)
    }

    #[test]
    fn exit_codes() {
        let (s, d) = datum(&[&[2], &[3]]);
        assert_eq!(run_check(&s, &d, Format::Text).unwrap().code, 2);
        let (s, d) = datum(&[&[1, 0], &[0, 1]]);
        assert_eq!(run_check(&s, &d, Format::Json).unwrap().code, 0);
        assert_eq!(CliError::UnknownExample("x".into()).exit_code(), 1);
    }

    #[test]
    fn corrupted_witness_is_refused() {
        let (s, d) = datum(&[&[1, 0], &[1, 1], &[1, 2]]);
        let mut v = flexibility_verdict(&d);
        let last = v.witnesses.len() - 1;
        v.witnesses[last].generator_weights[0] += 1;
        let e = report::check_with_verdict(&s, &d, &v).err().expect("corruption detected");
        assert!(matches!(e, CliError::CorruptWitness { .. }), "{e}");
        assert_eq!(e.exit_code(), 1);
        v.witnesses.pop();
        assert!(report::check_with_verdict(&s, &d, &flexibility_verdict(&d)).is_ok());
        assert!(matches!(
            report::check_with_verdict(&s, &d, &v),
            Err(CliError::WitnessCount { .. })
        ));
    }

    #[test]
    fn json_envelope() {
        let (s, d) = datum(&[&[1, 0], &[0, 1]]);
        let out = run_orbits(&s, &d, Format::Json).stdout;
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["command"], "orbits");
        assert_eq!(v["orbits"].as_array().unwrap().len(), 4);
        assert!(v["timing"]["elapsed_ms"].is_number());
    }

    #[test]
    fn every_example_runs() {
        for e in examples::REGISTRY {
            let r = run_example(e.name, Format::Json, DEFAULT_MAX_RANK).unwrap();
            let expected = if e.name == "cusp" { 2 } else { 0 };
            assert_eq!(r.code, expected, "{}", e.name);
        }
        assert!(run_example("nope", Format::Text, 6).is_err());
    }
}
