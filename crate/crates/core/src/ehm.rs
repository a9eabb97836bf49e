//! Normal affine `SL₂/μ_m`-embeddings `E_{h,m}` of height `h = p/q < 1`,
//! presented as quotients of `D_b = {y^b = x₁x₄ − x₂x₃}` by `N = 𝔾ₘ × μ_a`.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::actions::DiagonalTorusAction;
use crate::poly::{preserves_hypersurface, PolyError, Polynomial, PreservationCertificate, Substitution};

pub const VARIABLES: [&str; 5] = ["x1", "x2", "x3", "x4", "y"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EhmError {
    #[error("p and q must be positive, got p = {p}, q = {q}")]
    NonPositive { p: i64, q: i64 },
    #[error("height p/q = {p}/{q} is not below 1")]
    HeightNotBelowOne { p: i64, q: i64 },
    #[error("gcd(p, q) = {gcd}, expected coprime p and q")]
    NotCoprime { gcd: i64 },
    #[error("stabilizer order m must be at least 1, got {0}")]
    BadOrder(i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhmDatum {
    pub p: i64,
    pub q: i64,
    pub m: i64,
    pub k: i64,
    pub a: i64,
    pub b: i64,
    pub hypersurface: Polynomial,
    pub n_action: DiagonalTorusAction,
    pub lambda_action: DiagonalTorusAction,
}

pub fn build_ehm(p: i64, q: i64, m: i64) -> Result<EhmDatum, EhmError> {
    if p <= 0 || q <= 0 {
        return Err(EhmError::NonPositive { p, q });
    }
    if p >= q {
        return Err(EhmError::HeightNotBelowOne { p, q });
    }
    if p.gcd(&q) != 1 {
        return Err(EhmError::NotCoprime { gcd: p.gcd(&q) });
    }
    if m < 1 {
        return Err(EhmError::BadOrder(m));
    }
    let k = (q - p).gcd(&m);
    let (a, b) = (m / k, (q - p) / k);
    let hypersurface = Polynomial::monomial(&[("y", b as u32)], BigRational::one())
        - Polynomial::monomial(&[("x1", 1), ("x4", 1)], BigRational::one())
        + Polynomial::monomial(&[("x2", 1), ("x3", 1)], BigRational::one());
    let order = u32::try_from(a).expect("a divides m");
    let n_action =
        DiagonalTorusAction::with_cyclic(&VARIABLES, &[-p, -p, q, q, k], order, &[-1, -1, 1, 1, 0]).expect("five weights");
    let lambda_action = DiagonalTorusAction::new(&VARIABLES, &[p, q, -q, -p, 0]).expect("five weights");
    Ok(EhmDatum {
        p,
        q,
        m,
        k,
        a,
        b,
        hypersurface,
        n_action,
        lambda_action,
    })
}

impl EhmDatum {
    pub fn height(&self) -> BigRational {
        BigRational::new(self.p.into(), self.q.into())
    }

    /// `x₁^{aq} x₃^{ap}`.
    pub fn special_invariant(&self) -> Polynomial {
        Polynomial::monomial(&[("x1", (self.a * self.q) as u32), ("x3", (self.a * self.p) as u32)], BigRational::one())
    }

    /// Invariant monomials `x₁ˢx₂ᵘx₃ᵛx₄ʷyᶻ` of total degree at most `bound`,
    /// found by solving the weight system directly. Ordered by degree, then
    /// lexicographically.
    pub fn enumerate_invariant_monomials(&self, bound: u32) -> Vec<InvariantMonomial> {
        let (p, q, k, a) = (self.p as i128, self.q as i128, self.k as i128, self.a as i128);
        let mut out = Vec::new();
        for deg in 0..=bound {
            for e in compositions(deg, 5) {
                let [s, u, v, w, z] = [0, 1, 2, 3, 4].map(|i| i128::from(e[i]));
                if -p * s - p * u + q * v + q * w + k * z != 0 || (-s - u + v + w) % a != 0 {
                    continue;
                }
                out.push(InvariantMonomial {
                    exponents: e.try_into().expect("five parts"),
                    lambda_weight: s * p + u * q - v * q - w * p,
                });
            }
        }
        out
    }

    /// Checks `sp + uq − vq − wp = u(q−p) + w(q−p) + kz ≥ 0` on every
    /// enumerated monomial. Returns how many were checked, or the first
    /// monomial violating it.
    pub fn verify_weight_identity(&self, bound: u32) -> Result<usize, InvariantMonomial> {
        let (p, q, k) = (self.p as i128, self.q as i128, self.k as i128);
        let monomials = self.enumerate_invariant_monomials(bound);
        for mono in &monomials {
            let [_, u, _, w, z] = mono.exponents.map(i128::from);
            let rhs = u * (q - p) + w * (q - p) + k * z;
            if mono.lambda_weight != rhs || rhs < 0 {
                return Err(mono.clone());
            }
        }
        Ok(monomials.len())
    }

    pub fn verify_special_point(&self, bound: u32) -> Result<SpecialPointReport, PolyError> {
        let point: BTreeMap<String, BigRational> = VARIABLES
            .iter()
            .zip([1, 0, 1, 0, 0])
            .map(|(v, c)| (v.to_string(), BigRational::from_integer(c.into())))
            .collect();
        let f = self.special_invariant();
        let fixed_with_y = self
            .enumerate_invariant_monomials(bound)
            .into_iter()
            .find(|mono| mono.lambda_weight == 0 && mono.exponents[4] != 0);
        Ok(SpecialPointReport {
            hypersurface_at_point: self.hypersurface.evaluate(&point)?,
            f_is_invariant: self.n_action.is_invariant(&f),
            f_at_point: f.evaluate(&point)?,
            f,
            fixed_monomial_with_y: fixed_with_y,
            bound,
        })
    }

    pub fn verify_actions_on_db(&self) -> Result<ActionsReport, PolyError> {
        let sl2 = Substitution::from_pairs([
            ("x1", "alpha*x1 + beta*x2".parse()?),
            ("x2", "gamma*x1 + delta*x2".parse()?),
            ("x3", "alpha*x3 + beta*x4".parse()?),
            ("x4", "gamma*x3 + delta*x4".parse()?),
        ]);
        let det: Polynomial = "alpha*delta - beta*gamma - 1".parse()?;
        let sl2_certificate = preserves_hypersurface(&self.hypersurface, &sl2, Some(&det))?;

        let weight = |action: &DiagonalTorusAction, e: [u32; 5]| {
            action.monomial_weight(&VARIABLES, &e).expect("known variables").gm_weight
        };
        let [y_b, x1x4, x2x3] = [[0, 0, 0, 0, self.b as u32], [1, 0, 0, 1, 0], [0, 1, 1, 0, 0]];
        Ok(ActionsReport {
            sl2_certificate,
            lambda_weights: [weight(&self.lambda_action, x1x4), weight(&self.lambda_action, x2x3), weight(&self.lambda_action, y_b)],
            lambda_preserves: self.lambda_action.is_invariant(&self.hypersurface),
            n_weights: [weight(&self.n_action, y_b), weight(&self.n_action, x1x4), weight(&self.n_action, x2x3)],
            expected_n_weight: i128::from(self.q - self.p),
            commute: self.lambda_action.commutes(&self.n_action),
        })
    }
}

impl fmt::Display for EhmDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E_{{{}/{}, {}}}: k = {}, a = {}, b = {}", self.p, self.q, self.m, self.k, self.a, self.b)
    }
}

/// All ways to write `total` as an ordered sum of `parts` nonnegative integers,
/// lexicographically descending.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantMonomial {
    /// `(s, u, v, w, z)`
    pub exponents: [u32; 5],
    pub lambda_weight: i128,
}

impl InvariantMonomial {
    pub fn to_polynomial(&self) -> Polynomial {
        let factors: Vec<(&str, u32)> = VARIABLES.iter().copied().zip(self.exponents).collect();
        Polynomial::monomial(&factors, BigRational::one())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialPointReport {
    pub hypersurface_at_point: BigRational,
    pub f: Polynomial,
    pub f_is_invariant: bool,
    pub f_at_point: BigRational,
    /// An enumerated monomial of `Λ`-weight zero involving `y`, if any.
    pub fixed_monomial_with_y: Option<InvariantMonomial>,
    pub bound: u32,
}

impl SpecialPointReport {
    pub fn passed(&self) -> bool {
        self.hypersurface_at_point.is_zero()
            && self.f_is_invariant
            && self.f_at_point == BigRational::from_integer(1.into())
            && self.fixed_monomial_with_y.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionsReport {
    pub sl2_certificate: Option<PreservationCertificate>,
    /// `Λ`-weights of `x₁x₄`, `x₂x₃`, `y^b`.
    pub lambda_weights: [i128; 3],
    pub lambda_preserves: bool,
    /// `N`-weights of `y^b`, `x₁x₄`, `x₂x₃`.
    pub n_weights: [i128; 3],
    pub expected_n_weight: i128,
    pub commute: bool,
}

impl ActionsReport {
    pub fn passed(&self) -> bool {
        self.sl2_certificate.is_some()
            && self.lambda_weights == [0; 3]
            && self.lambda_preserves
            && self.n_weights.iter().all(|&w| w == self.expected_n_weight)
            && self.commute
    }
}
