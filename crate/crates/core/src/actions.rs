//! Diagonal actions of `𝔾ₘ × μ_a` on polynomial rings.

use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::poly::{Polynomial, Substitution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("variable `{0}` is not acted on")]
    UnknownVariable(String),
    #[error("expected {expected} weights, got {found}")]
    WeightCount { expected: usize, found: usize },
    #[error("cyclic order must be at least 1")]
    ZeroOrder,
}

/// `(t, ξ)·vᵢ = t^{wᵢ} ξ^{cᵢ} vᵢ` with `ξ` a primitive root of unity of
/// order `a`. Cyclic weights are stored reduced into `[0, a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalTorusAction {
    variables: Vec<String>,
    weights: Vec<i64>,
    cyclic_order: u32,
    cyclic_weights: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialWeightReport {
    pub exponents: Vec<u32>,
    pub gm_weight: i128,
    pub cyclic_residue: u32,
}

impl MonomialWeightReport {
    pub fn is_invariant(&self) -> bool {
        self.gm_weight == 0 && self.cyclic_residue == 0
    }
}

impl DiagonalTorusAction {
    /// A plain `𝔾ₘ`-action.
    pub fn new(variables: &[&str], weights: &[i64]) -> Result<Self, ActionError> {
        Self::with_cyclic(variables, weights, 1, &vec![0; variables.len()])
    }

    pub fn with_cyclic(
        variables: &[&str],
        weights: &[i64],
        cyclic_order: u32,
        cyclic_weights: &[i64],
    ) -> Result<Self, ActionError> {
        if cyclic_order == 0 {
            return Err(ActionError::ZeroOrder);
        }
        for len in [weights.len(), cyclic_weights.len()] {
            if len != variables.len() {
                return Err(ActionError::WeightCount {
                    expected: variables.len(),
                    found: len,
                });
            }
        }
        let a = i64::from(cyclic_order);
        Ok(DiagonalTorusAction {
            variables: variables.iter().map(|v| v.to_string()).collect(),
            weights: weights.to_vec(),
            cyclic_order,
            cyclic_weights: cyclic_weights.iter().map(|c| c.rem_euclid(a) as u32).collect(),
        })
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn cyclic_order(&self) -> u32 {
        self.cyclic_order
    }

    pub fn cyclic_weights(&self) -> &[u32] {
        &self.cyclic_weights
    }

    fn slot(&self, var: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == var)
    }

    /// Weight of `Π varsᵢ^{exponentsᵢ}`. Variables with exponent zero may be
    /// unknown to the action.
    pub fn monomial_weight<S: AsRef<str>>(
        &self,
        vars: &[S],
        exponents: &[u32],
    ) -> Result<MonomialWeightReport, ActionError> {
        let mut own = vec![0u32; self.variables.len()];
        for (v, &e) in vars.iter().zip(exponents) {
            if e == 0 {
                continue;
            }
            let i = self.slot(v.as_ref()).ok_or_else(|| ActionError::UnknownVariable(v.as_ref().to_string()))?;
            own[i] += e;
        }
        Ok(self.report(own))
    }

    fn report(&self, exponents: Vec<u32>) -> MonomialWeightReport {
        let gm_weight = exponents
            .iter()
            .zip(&self.weights)
            .map(|(&e, &w)| i128::from(e) * i128::from(w))
            .sum();
        let a = u64::from(self.cyclic_order);
        let residue = exponents
            .iter()
            .zip(&self.cyclic_weights)
            .fold(0u64, |acc, (&e, &c)| (acc + u64::from(e) % a * u64::from(c)) % a);
        MonomialWeightReport {
            exponents,
            gm_weight,
            cyclic_residue: residue as u32,
        }
    }

    /// Every term has weight zero and trivial cyclic residue. Variables the
    /// action does not list are treated as fixed.
    pub fn is_invariant(&self, p: &Polynomial) -> bool {
        p.terms().into_iter().all(|(e, _)| {
            let mut own = vec![0u32; self.variables.len()];
            for (v, &k) in p.variables().iter().zip(e) {
                if let Some(i) = self.slot(v) {
                    own[i] += k;
                }
            }
            self.report(own).is_invariant()
        })
    }

    /// The action as a substitution `vᵢ ↦ t^{wᵢ} ξ^{cᵢ} vᵢ`, with negative
    /// powers of `t` written through `t_inv`.
    pub fn as_substitution(&self, t: &str, t_inv: &str, xi: &str) -> Substitution {
        let mut s = Substitution::identity();
        for ((v, &w), &c) in self.variables.iter().zip(&self.weights).zip(&self.cyclic_weights) {
            let (param, power) = if w >= 0 { (t, w as u32) } else { (t_inv, w.unsigned_abs() as u32) };
            let image = Polynomial::monomial(&[(param, power), (xi, c), (v.as_str(), 1)], BigRational::one());
            s.insert(v, image);
        }
        s
    }

    /// Checks `A∘B = B∘A` as maps with independent group parameters,
    /// working modulo `t·t⁻¹ = 1` and `ξᵃ = 1`.
    pub fn commutes(&self, other: &DiagonalTorusAction) -> bool {
        let a = self.as_substitution("__a_t", "__a_t_inv", "__a_xi");
        let b = other.as_substitution("__b_t", "__b_t_inv", "__b_xi");
        let normalize = |p: &Polynomial| {
            p.laurent_normal_form(&[("__a_t", "__a_t_inv"), ("__b_t", "__b_t_inv")])
                .reduce_root_of_unity("__a_xi", self.cyclic_order)
                .reduce_root_of_unity("__b_xi", other.cyclic_order)
        };
        let ab = a.compose(&b).map_images(normalize);
        let ba = b.compose(&a).map_images(normalize);
        ab.same_map(&ba)
    }
}
