//! Built-in examples: datum files checked like user input, the `E_{h,m}`
//! family and the Danielewski surface.

use std::fmt::Write as _;

use horoflex_core::ehm::{build_ehm, EhmDatum};
use horoflex_core::poly::{preserves_hypersurface, Derivation, Nilpotency, Polynomial, Substitution};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::report::{checks_outcome, render_checks, CheckLine, Outcome, RenderText};
use crate::spec::DatumSpec;
use crate::CliError;

pub const DEFAULT_EHM_BOUND: u32 = 10;

pub struct Example {
    pub name: &'static str,
    pub summary: &'static str,
}

pub const REGISTRY: [Example; 6] = [
    Example {
        name: "cusp",
        summary: "⟨2, 3⟩, the curve x² = y³: not normal, so not covered",
    },
    Example {
        name: "plane",
        summary: "⟨(1,0), (0,1)⟩, the affine plane",
    },
    Example {
        name: "veronese",
        summary: "⟨(1,0), (1,1), (1,2)⟩, the quadric cone",
    },
    Example {
        name: "danielewski",
        summary: "xy² = z² − 1 with its 𝔾ₘ ⋉ 𝔾ₐ-action",
    },
    Example {
        name: "ehm-1-2-1",
        summary: "E_{1/2,1}, quotient of y = x₁x₄ − x₂x₃",
    },
    Example {
        name: "ehm-2-3-4",
        summary: "E_{2/3,4}, quotient by 𝔾ₘ × μ₄",
    },
];

pub fn datum_example(name: &str) -> Option<DatumSpec> {
    let (gens, label): (Vec<Vec<i64>>, &str) = match name {
        "cusp" => (vec![vec![2], vec![3]], "cusp"),
        "plane" => (vec![vec![1, 0], vec![0, 1]], "plane"),
        "veronese" => (vec![vec![1, 0], vec![1, 1], vec![1, 2]], "veronese"),
        _ => return None,
    };
    Some(DatumSpec {
        torus_rank: gens[0].len(),
        dominant_rank: 0,
        generators: gens,
        label: Some(label.into()),
    })
}

/// `(p, q, m)` for the `ehm-p-q-m` entries.
pub fn ehm_example(name: &str) -> Option<(i64, i64, i64)> {
    match name {
        "ehm-1-2-1" => Some((1, 2, 1)),
        "ehm-2-3-4" => Some((2, 3, 4)),
        _ => None,
    }
}

#[derive(Serialize)]
pub struct EhmParameters {
    pub p: i64,
    pub q: i64,
    pub m: i64,
    pub height: String,
}

#[derive(Serialize)]
pub struct EhmDerived {
    pub k: i64,
    pub a: i64,
    pub b: i64,
}

#[derive(Serialize)]
pub struct ActionSummary {
    pub weights: Vec<i64>,
    pub cyclic_order: u32,
    pub cyclic_weights: Vec<u32>,
}

#[derive(Serialize)]
pub struct EhmBody {
    pub parameters: EhmParameters,
    pub derived: EhmDerived,
    pub hypersurface: String,
    pub n_action: ActionSummary,
    pub lambda_action: ActionSummary,
    pub degree_bound: u32,
    pub invariant_monomials: usize,
    pub checks: Vec<CheckLine>,
    pub literature: Vec<&'static str>,
}

fn action_summary(a: &horoflex_core::actions::DiagonalTorusAction) -> ActionSummary {
    ActionSummary {
        weights: a.weights().to_vec(),
        cyclic_order: a.cyclic_order(),
        cyclic_weights: a.cyclic_weights().to_vec(),
    }
}

pub fn ehm(p: i64, q: i64, m: i64, bound: u32) -> Result<EhmBody, CliError> {
    let d = build_ehm(p, q, m)?;
    ehm_body(&d, bound)
}

fn ehm_body(d: &EhmDatum, bound: u32) -> Result<EhmBody, CliError> {
    let monomials = d.enumerate_invariant_monomials(bound);
    let mut checks = Vec::new();

    let identity = d.verify_weight_identity(bound);
    checks.push(CheckLine {
        name: "lambda_weight_identity",
        passed: identity.is_ok(),
        source: "stated",
        detail: match &identity {
            Ok(n) => format!("sp+uq−vq−wp = u(q−p)+w(q−p)+kz ≥ 0 on all {n} invariant monomials of degree ≤ {bound}"),
            Err(mono) => format!("fails at exponents {:?} (weight {})", mono.exponents, mono.lambda_weight),
        },
    });

    let sp = d.verify_special_point(bound)?;
    checks.push(CheckLine {
        name: "fixed_monomials_avoid_y",
        passed: sp.fixed_monomial_with_y.is_none(),
        source: "stated",
        detail: match &sp.fixed_monomial_with_y {
            None => format!("every weight-zero invariant monomial of degree ≤ {bound} has z = 0"),
            Some(mono) => format!("weight-zero monomial with z > 0: {:?}", mono.exponents),
        },
    });
    checks.push(CheckLine {
        name: "special_point_on_hypersurface",
        passed: sp.hypersurface_at_point.is_zero(),
        source: "stated",
        detail: format!("F(1,0,1,0,0) = {}", sp.hypersurface_at_point),
    });
    checks.push(CheckLine {
        name: "special_invariant",
        passed: sp.f_is_invariant,
        source: "stated",
        detail: format!("f = {} is N-invariant", sp.f),
    });
    checks.push(CheckLine {
        name: "special_invariant_at_point",
        passed: sp.f_at_point.is_one(),
        source: "derived",
        detail: format!("f(1,0,1,0,0) = {}", sp.f_at_point),
    });

    let acts = d.verify_actions_on_db()?;
    checks.push(CheckLine {
        name: "sl2_preserves_hypersurface",
        passed: acts.sl2_certificate.is_some(),
        source: "derived",
        detail: match &acts.sl2_certificate {
            Some(c) => format!("F∘g − {}·F = ({})·(αδ − βγ − 1)", c.multiplier, c.quotient),
            None => "F∘g is not a multiple of F modulo αδ − βγ − 1".into(),
        },
    });
    checks.push(CheckLine {
        name: "lambda_preserves_hypersurface",
        passed: acts.lambda_preserves && acts.lambda_weights == [0; 3],
        source: "derived",
        detail: format!(
            "Λ-weights of x1*x4, x2*x3, y^b: {}, {}, {}",
            acts.lambda_weights[0], acts.lambda_weights[1], acts.lambda_weights[2]
        ),
    });
    checks.push(CheckLine {
        name: "n_semi_invariance",
        passed: acts.n_weights.iter().all(|&w| w == acts.expected_n_weight),
        source: "derived",
        detail: format!(
            "N-weights of y^b, x1*x4, x2*x3: {}, {}, {} (q − p = {})",
            acts.n_weights[0], acts.n_weights[1], acts.n_weights[2], acts.expected_n_weight
        ),
    });
    checks.push(CheckLine {
        name: "lambda_commutes_with_n",
        passed: acts.commute,
        source: "stated",
        detail: "compositions agree modulo t·t⁻¹ = 1 and ξᵃ = 1".into(),
    });

    Ok(EhmBody {
        parameters: EhmParameters {
            p: d.p,
            q: d.q,
            m: d.m,
            height: format!("{}/{}", d.p, d.q),
        },
        derived: EhmDerived { k: d.k, a: d.a, b: d.b },
        hypersurface: d.hypersurface.to_string(),
        n_action: action_summary(&d.n_action),
        lambda_action: action_summary(&d.lambda_action),
        degree_bound: bound,
        invariant_monomials: monomials.len(),
        checks,
        literature: vec![
            "for h < 1 there are three SL2-orbits: open, two-dimensional, and a singular fixed point (cited, not computed)",
        ],
    })
}

impl EhmBody {
    pub fn outcome(&self) -> Outcome {
        checks_outcome(&self.checks)
    }
}

impl RenderText for EhmBody {
    fn render_text(&self) -> String {
        let mut s = String::new();
        let p = &self.parameters;
        let _ = writeln!(s, "E_{{{}, {}}}: p = {}, q = {}, m = {}", p.height, p.m, p.p, p.q, p.m);
        let _ = writeln!(s, "k = {}, a = {}, b = {}", self.derived.k, self.derived.a, self.derived.b);
        let _ = writeln!(s, "D_b: {} = 0", self.hypersurface);
        let _ = writeln!(s, "{} invariant monomials of degree ≤ {}", self.invariant_monomials, self.degree_bound);
        render_checks(&mut s, &self.checks);
        for l in &self.literature {
            let _ = writeln!(s, "  literature: {l}");
        }
        s
    }
}

#[derive(Serialize)]
pub struct DanielewskiBody {
    pub hypersurface: String,
    pub action: Vec<String>,
    pub composition_law: String,
    pub lnd: Vec<String>,
    pub checks: Vec<CheckLine>,
    pub literature: Vec<&'static str>,
}

fn p(s: &str) -> Polynomial {
    s.parse().expect("built-in polynomial")
}

/// `(t, s)·(x, y, z) = (t²(x + 2zs + s²y²), t⁻¹y, z + sy²)` with `t⁻¹`
/// written as `ti`.
fn danielewski_action(t: &str, ti: &str, s: &str) -> Substitution {
    let sub = Substitution::from_pairs([("t", Polynomial::var(t)), ("ti", Polynomial::var(ti)), ("s", Polynomial::var(s))]);
    Substitution::from_pairs([
        ("x", sub.apply(&p("t^2*(x + 2*z*s + s^2*y^2)"))),
        ("y", sub.apply(&p("ti*y"))),
        ("z", sub.apply(&p("z + s*y^2"))),
    ])
}

pub fn danielewski() -> Result<DanielewskiBody, CliError> {
    let f = p("x*y^2 - z^2 + 1");
    let action = danielewski_action("t", "ti", "s");
    let mut checks = Vec::new();

    let cert = preserves_hypersurface(&f, &action, Some(&p("t*ti - 1")))?;
    checks.push(CheckLine {
        name: "action_preserves_surface",
        passed: cert.as_ref().is_some_and(|c| c.multiplier == Polynomial::one()),
        source: "stated",
        detail: match &cert {
            Some(c) => format!("F∘(t,s) − F = ({})·(t·t⁻¹ − 1)", c.quotient),
            None => "F∘(t,s) − F is not a multiple of t·t⁻¹ − 1".into(),
        },
    });

    // (t,s)∘(t',s') = (tt', s' + s·t'⁻²)
    let pairs = [("t", "ti"), ("t2", "ti2")];
    let lhs = danielewski_action("t", "ti", "s").compose(&danielewski_action("t2", "ti2", "s2"));
    let combined = Substitution::from_pairs([
        ("T", p("t*t2")),
        ("Ti", p("ti*ti2")),
        ("S", p("s2 + s*ti2^2")),
    ]);
    let rhs = danielewski_action("T", "Ti", "S").map_images(|q| combined.apply(q));
    let normal = |q: &Polynomial| q.laurent_normal_form(&pairs);
    let law = lhs.map_images(normal).same_map(&rhs.map_images(normal));
    checks.push(CheckLine {
        name: "composition_law",
        passed: law,
        source: "derived",
        detail: "(t,s)∘(t',s') = (tt', s' + s·t'⁻²) as maps, modulo t·t⁻¹ = 1".into(),
    });

    let d = Derivation::from_pairs([("x", p("2*z")), ("z", p("y^2")), ("y", Polynomial::zero())]);
    let nil = d.is_locally_nilpotent_bounded(8);
    let kills_f = d.apply(&f).is_zero();
    checks.push(CheckLine {
        name: "lnd_annihilates_equation",
        passed: kills_f && matches!(nil, Nilpotency::Yes(_)),
        source: "derived",
        detail: format!(
            "D(F) = {}, nilpotency {}",
            d.apply(&f),
            match nil {
                Nilpotency::Yes(n) => format!("index {n}"),
                Nilpotency::NoEvidence => "not certified".into(),
            }
        ),
    });
    let unipotent = match d.exp("s", 8) {
        Ok(flow) => {
            let at_one = Substitution::from_pairs([("t", Polynomial::one()), ("ti", Polynomial::one())]);
            flow.same_map(&action.map_images(|q| at_one.apply(q)))
        }
        Err(_) => false,
    };
    checks.push(CheckLine {
        name: "ga_part_is_exp_of_lnd",
        passed: unipotent,
        source: "derived",
        detail: "exp(sD) equals the action at t = 1".into(),
    });

    let y_fixed = action.image("y") == p("ti*y");
    checks.push(CheckLine {
        name: "y_semi_invariant",
        passed: y_fixed && d.apply(&p("y")).is_zero(),
        source: "derived",
        detail: "y is scaled by t⁻¹ and killed by D, so {y ≠ 0} is stable".into(),
    });

    Ok(DanielewskiBody {
        hypersurface: format!("{f} = 0"),
        action: ["x", "y", "z"].iter().map(|v| format!("{v} ↦ {}", action.image(v))).collect(),
        composition_law: "(t,s)∘(t',s') = (tt', s' + s·t'⁻²)".into(),
        lnd: vec!["D(x) = 2*z".into(), "D(y) = 0".into(), "D(z) = y^2".into()],
        checks,
        literature: vec![
            "ML(X) = K[y]: every locally nilpotent derivation kills y, so X is not flexible (cited, not computed)",
        ],
    })
}

impl DanielewskiBody {
    pub fn outcome(&self) -> Outcome {
        checks_outcome(&self.checks)
    }
}

impl RenderText for DanielewskiBody {
    fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "Danielewski surface {}", self.hypersurface);
        let _ = writeln!(s, "action: {}", self.action.join(", "));
        let _ = writeln!(s, "LND: {}", self.lnd.join(", "));
        render_checks(&mut s, &self.checks);
        for l in &self.literature {
            let _ = writeln!(s, "  literature: {l}");
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn danielewski_checks_pass() {
        let body = danielewski().unwrap();
        for c in &body.checks {
            assert!(c.passed, "{c:?}");
        }
    }

    #[test]
    fn wrong_composition_law_is_caught() {
        let lhs = danielewski_action("t", "ti", "s").compose(&danielewski_action("t2", "ti2", "s2"));
        let combined = Substitution::from_pairs([("T", p("t*t2")), ("Ti", p("ti*ti2")), ("S", p("s + s2"))]);
        let rhs = danielewski_action("T", "Ti", "S").map_images(|q| combined.apply(q));
        let pairs = [("t", "ti"), ("t2", "ti2")];
        let normal = |q: &Polynomial| q.laurent_normal_form(&pairs);
        assert!(!lhs.map_images(normal).same_map(&rhs.map_images(normal)));
    }

    #[test]
    fn ehm_reports() {
        let body = ehm(1, 2, 1, 8).unwrap();
        assert_eq!((body.derived.k, body.derived.a, body.derived.b), (1, 1, 1));
        assert_eq!(body.outcome(), Outcome::Pass);
        assert!(ehm(2, 2, 1, 8).is_err());
    }

    #[test]
    fn registry_is_consistent() {
        for e in REGISTRY {
            let known = datum_example(e.name).is_some() || ehm_example(e.name).is_some() || e.name == "danielewski";
            assert!(known, "{}", e.name);
        }
    }
}
