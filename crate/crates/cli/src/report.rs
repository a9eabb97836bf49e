//! Report bodies and their JSON and text renderings.
//!
//! Every JSON report is an object with `schema`, `tool`, `command`, the
//! command-specific fields and a trailing `timing` object, the only field
//! that varies between runs on the same input.

use std::fmt::Write as _;

use horoflex_core::lattice::{face_lattice, LatticeVector, RationalCone};
use horoflex_core::semigroup::{
    flexibility_verdict, grading_for_face, is_saturated, orbit_faces, saturate, unit_witness, FlexibilityVerdict,
    GradingWitness, HorosphericalDatum, VerdictStatus,
};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::spec::DatumSpec;
use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

/// An integer that serializes as a JSON number when it fits in `i64` and as
/// a decimal string otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Int(pub BigInt);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

pub fn ints(v: &LatticeVector) -> Vec<Int> {
    v.coords().iter().cloned().map(Int).collect()
}

fn ints_all(vs: &[LatticeVector]) -> Vec<Vec<Int>> {
    vs.iter().map(ints).collect()
}

fn show(v: &[Int]) -> String {
    let parts: Vec<String> = v.iter().map(|i| i.0.to_string()).collect();
    format!("({})", parts.join(", "))
}

#[derive(Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

pub const TOOL: Tool = Tool {
    name: env!("CARGO_PKG_NAME"),
    version: env!("CARGO_PKG_VERSION"),
};

#[derive(Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

#[derive(Serialize)]
pub struct Report<T: Serialize> {
    pub schema: u32,
    pub tool: Tool,
    pub command: &'static str,
    #[serde(flatten)]
    pub body: T,
    pub timing: Timing,
}

/// Human-readable rendering of a report body.
pub trait RenderText {
    fn render_text(&self) -> String;
}

/// How a report maps to the process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    NotCovered,
    ChecksFailed,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass => 0,
            Outcome::NotCovered => 2,
            Outcome::ChecksFailed => 1,
        }
    }
}

#[derive(Serialize)]
pub struct ConeSummary {
    pub rays: Vec<Vec<Int>>,
    pub facet_normals: Vec<Vec<Int>>,
    pub equations: Vec<Vec<Int>>,
    pub lineality: Vec<Vec<Int>>,
}

impl ConeSummary {
    fn of(c: &RationalCone) -> Self {
        ConeSummary {
            rays: ints_all(c.rays()),
            facet_normals: ints_all(c.facet_normals()),
            equations: ints_all(c.equations()),
            lineality: ints_all(c.lineality()),
        }
    }
}

#[derive(Serialize)]
pub struct FaceWitnessRow {
    pub index: usize,
    pub dim: usize,
    pub rays: Vec<Vec<Int>>,
    pub functional: Vec<Int>,
    pub degrees: Vec<Int>,
    pub kind: &'static str,
}

impl FaceWitnessRow {
    fn of(index: usize, cone: &RationalCone, w: &GradingWitness) -> Self {
        FaceWitnessRow {
            index,
            dim: w.face.dim,
            rays: w.face.span_rays.iter().map(|&r| ints(&cone.rays()[r])).collect(),
            functional: ints(&w.functional),
            degrees: w.generator_weights.iter().cloned().map(Int).collect(),
            kind: w.kind().name(),
        }
    }

    fn line(&self) -> String {
        let rays: Vec<String> = self.rays.iter().map(|r| show(r)).collect();
        format!(
            "  face {} (dim {}, rays [{}]): l = {}, degrees {}, {}",
            self.index,
            self.dim,
            rays.join(", "),
            show(&self.functional),
            show(&self.degrees),
            self.kind
        )
    }
}

#[derive(Serialize)]
pub struct VerdictSummary {
    pub status: &'static str,
    pub saturation_gap: Option<Vec<Int>>,
    pub unit_witness: Option<Vec<Int>>,
}

#[derive(Serialize)]
pub struct CheckBody {
    pub input: DatumSpec,
    pub verdict: VerdictSummary,
    pub cone: ConeSummary,
    pub faces: Vec<FaceWitnessRow>,
}

pub fn check(spec: &DatumSpec, d: &HorosphericalDatum) -> Result<CheckBody, CliError> {
    check_with_verdict(spec, d, &flexibility_verdict(d))
}

/// Builds the report for a given verdict, re-verifying each witness against
/// the datum first.
pub fn check_with_verdict(spec: &DatumSpec, d: &HorosphericalDatum, v: &FlexibilityVerdict) -> Result<CheckBody, CliError> {
    let cone = d.cone();
    if v.status == VerdictStatus::CertifiedFlexible {
        let faces = face_lattice(&cone);
        if faces.len() != v.witnesses.len() {
            return Err(CliError::WitnessCount {
                faces: faces.len(),
                witnesses: v.witnesses.len(),
            });
        }
    }
    for (index, w) in v.witnesses.iter().enumerate() {
        w.verify(d).map_err(|violation| CliError::CorruptWitness { index, violation })?;
    }
    Ok(CheckBody {
        input: spec.clone(),
        verdict: VerdictSummary {
            status: v.status.name(),
            saturation_gap: v.saturation_gap.as_ref().map(ints),
            unit_witness: unit_witness(d).as_ref().map(ints),
        },
        cone: ConeSummary::of(&cone),
        faces: v.witnesses.iter().enumerate().map(|(i, w)| FaceWitnessRow::of(i, &cone, w)).collect(),
    })
}

impl CheckBody {
    pub fn outcome(&self) -> Outcome {
        if self.verdict.status == VerdictStatus::CertifiedFlexible.name() {
            Outcome::Pass
        } else {
            Outcome::NotCovered
        }
    }
}

fn header(spec: &DatumSpec) -> String {
    let gens: Vec<String> = spec
        .generators
        .iter()
        .map(|g| format!("({})", g.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")))
        .collect();
    let label = spec.label.as_deref().map(|l| format!("{l}: ")).unwrap_or_default();
    format!(
        "{label}P = ⟨{}⟩, torus rank {}, dominant rank {}\n",
        gens.join(", "),
        spec.torus_rank,
        spec.dominant_rank
    )
}

impl RenderText for CheckBody {
    fn render_text(&self) -> String {
        let mut s = header(&self.input);
        let _ = writeln!(s, "verdict: {}", self.verdict.status);
        if let Some(gap) = &self.verdict.saturation_gap {
            let _ = writeln!(s, "  {} lies in ℤP ∩ σ but not in P", show(gap));
        }
        if let Some(u) = &self.verdict.unit_witness {
            let _ = writeln!(s, "  {} and its negative both lie in P", show(u));
        }
        if !self.faces.is_empty() {
            let _ = writeln!(s, "grading witnesses ({} orbits):", self.faces.len());
            for f in &self.faces {
                let _ = writeln!(s, "{}", f.line());
            }
        }
        s
    }
}

#[derive(Serialize)]
pub struct SaturateBody {
    pub input: DatumSpec,
    pub already_saturated: bool,
    pub saturation_gap: Option<Vec<Int>>,
    pub saturated: DatumSpec,
}

pub fn saturate_report(spec: &DatumSpec, d: &HorosphericalDatum) -> Result<SaturateBody, CliError> {
    let sat = is_saturated(d)?;
    let s = saturate(d)?;
    Ok(SaturateBody {
        input: spec.clone(),
        already_saturated: sat.saturated,
        saturation_gap: sat.gap.as_ref().map(ints),
        saturated: DatumSpec::from_datum(&s, spec.label.clone()),
    })
}

impl RenderText for SaturateBody {
    fn render_text(&self) -> String {
        let mut s = header(&self.input);
        if self.already_saturated {
            s.push_str("already saturated\n");
        } else if let Some(gap) = &self.saturation_gap {
            let _ = writeln!(s, "not saturated: {} is missing", show(gap));
        }
        s.push_str("saturation: ");
        s.push_str(&header(&self.saturated));
        s
    }
}

#[derive(Serialize)]
pub struct OrbitRow {
    pub index: usize,
    pub dim: usize,
    pub rays: Vec<Vec<Int>>,
    /// Generators lying on the face.
    pub face_generators: Vec<usize>,
    /// Generators off the face; their weight spaces span the ideal of the
    /// orbit closure.
    pub ideal_generators: Vec<usize>,
}

#[derive(Serialize)]
pub struct OrbitsBody {
    pub input: DatumSpec,
    pub orbits: Vec<OrbitRow>,
}

pub fn orbits(spec: &DatumSpec, d: &HorosphericalDatum) -> OrbitsBody {
    let cone = d.cone();
    let orbits = orbit_faces(d)
        .into_iter()
        .enumerate()
        .map(|(index, o)| OrbitRow {
            index,
            dim: o.face.dim,
            rays: o.face.span_rays.iter().map(|&r| ints(&cone.rays()[r])).collect(),
            face_generators: o.on_face_generators(d.generators().len()),
            ideal_generators: o.off_face_generators,
        })
        .collect();
    OrbitsBody {
        input: spec.clone(),
        orbits,
    }
}

impl RenderText for OrbitsBody {
    fn render_text(&self) -> String {
        let mut s = header(&self.input);
        let _ = writeln!(s, "{} orbits, one per face of σ:", self.orbits.len());
        for o in &self.orbits {
            let rays: Vec<String> = o.rays.iter().map(|r| show(r)).collect();
            let _ = writeln!(
                s,
                "  face {} (dim {}, rays [{}]): face generators {:?}, ideal generators {:?}",
                o.index,
                o.dim,
                rays.join(", "),
                o.face_generators,
                o.ideal_generators
            );
        }
        s
    }
}

#[derive(Serialize)]
pub struct GradingBody {
    pub input: DatumSpec,
    pub face: FaceWitnessRow,
}

pub fn grading(spec: &DatumSpec, d: &HorosphericalDatum, index: usize) -> Result<GradingBody, CliError> {
    let cone = d.cone();
    let faces = face_lattice(&cone);
    let face = faces.get(index).ok_or(CliError::NoSuchFace {
        index,
        count: faces.len(),
    })?;
    let w = grading_for_face(d, face)?;
    w.verify(d).map_err(|violation| CliError::CorruptWitness { index, violation })?;
    Ok(GradingBody {
        input: spec.clone(),
        face: FaceWitnessRow::of(index, &cone, &w),
    })
}

impl RenderText for GradingBody {
    fn render_text(&self) -> String {
        let mut s = header(&self.input);
        let _ = writeln!(s, "{}", self.face.line().trim_start());
        s
    }
}

/// One named check of an example report.
#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub name: &'static str,
    pub passed: bool,
    /// `stated` for claims of the construction taken as given, `derived` for
    /// consequences worked out here.
    pub source: &'static str,
    pub detail: String,
}

pub fn render_checks(s: &mut String, checks: &[CheckLine]) {
    for c in checks {
        let mark = if c.passed { "ok  " } else { "FAIL" };
        let _ = writeln!(s, "  [{mark}] {} ({}): {}", c.name, c.source, c.detail);
    }
}

pub fn checks_outcome(checks: &[CheckLine]) -> Outcome {
    if checks.iter().all(|c| c.passed) {
        Outcome::Pass
    } else {
        Outcome::ChecksFailed
    }
}
