//! Derivations of polynomial rings and the unipotent flows they generate.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{PolyError, Polynomial, Substitution};

/// A derivation of `K[x₁,…,xₙ]` determined by its values on variables;
/// variables without an image are sent to zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Derivation {
    images: BTreeMap<String, Polynomial>,
}

/// Result of the bounded local-nilpotency test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Nilpotency {
    /// `Dⁿ(v) = 0` for every variable `v`; `n` is the least such exponent.
    Yes(usize),
    /// Some variable survived `bound` applications. Not a proof of anything.
    NoEvidence,
}

impl Derivation {
    pub fn new() -> Self {
        Derivation::default()
    }

    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, Polynomial)>) -> Self {
        Derivation {
            images: pairs.into_iter().map(|(v, p)| (v.to_string(), p)).collect(),
        }
    }

    /// `∂/∂var`.
    pub fn partial(var: &str) -> Self {
        Self::from_pairs([(var, Polynomial::one())])
    }

    pub fn image(&self, var: &str) -> Polynomial {
        self.images.get(var).cloned().unwrap_or_else(Polynomial::zero)
    }

    /// Variables the derivation has to be tracked on: those with an image and
    /// those occurring in some image.
    pub fn variables(&self) -> Vec<String> {
        let mut vars: Vec<String> = self.images.keys().cloned().collect();
        for p in self.images.values() {
            for v in p.used_variables() {
                if !vars.contains(&v) {
                    vars.push(v);
                }
            }
        }
        vars.sort();
        vars
    }

    /// `D(p) = Σ ∂p/∂v · D(v)`, the unique extension satisfying the Leibniz rule.
    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        p.used_variables()
            .iter()
            .filter_map(|v| self.images.get(v).map(|img| &p.partial(v) * img))
            .fold(Polynomial::zero(), |acc, t| &acc + &t)
    }

    pub fn iterate(&self, p: &Polynomial, n: usize) -> Polynomial {
        let mut q = p.clone();
        for _ in 0..n {
            if q.is_zero() {
                break;
            }
            q = self.apply(&q);
        }
        q
    }

    /// Nonzero iterates `v, Dv, D²v, …` of a variable, at most `bound` of them.
    /// Returns `None` when the chain did not reach zero.
    fn orbit(&self, var: &str, bound: usize) -> Option<Vec<Polynomial>> {
        let mut chain = Vec::new();
        let mut q = Polynomial::var(var);
        while !q.is_zero() {
            if chain.len() == bound {
                return None;
            }
            let next = self.apply(&q);
            chain.push(q);
            q = next;
        }
        Some(chain)
    }

    /// Nilpotency on the generators certifies local nilpotency on the whole
    /// polynomial ring, by the Leibniz rule.
    pub fn is_locally_nilpotent_bounded(&self, bound: usize) -> Nilpotency {
        let mut n = 1;
        for v in self.variables() {
            match self.orbit(&v, bound) {
                Some(chain) => n = n.max(chain.len()),
                None => return Nilpotency::NoEvidence,
            }
        }
        Nilpotency::Yes(n)
    }

    /// The `𝔾ₐ`-action `v ↦ Σₖ paramᵏ·Dᵏ(v)/k!`.
    pub fn exp(&self, param: &str, bound: usize) -> Result<Substitution, PolyError> {
        if self.is_locally_nilpotent_bounded(bound) == Nilpotency::NoEvidence {
            return Err(PolyError::NotNilpotent(bound));
        }
        let t = Polynomial::var(param);
        let mut map = Substitution::identity();
        for v in self.variables() {
            let chain = self.orbit(&v, bound).expect("certified above");
            let mut image = Polynomial::zero();
            let mut factorial = BigInt::one();
            let mut t_pow = Polynomial::one();
            for (k, term) in chain.iter().enumerate() {
                if k > 0 {
                    factorial *= BigInt::from(k);
                    t_pow = &t_pow * &t;
                }
                let coeff = BigRational::new(BigInt::one(), factorial.clone());
                image += &(&t_pow * term).scale(&coeff);
            }
            map.insert(&v, image);
        }
        Ok(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn applies_by_leibniz() {
        assert_eq!(Derivation::partial("x").apply(&p("x^2*y")), p("2*x*y"));
        assert_eq!(Derivation::partial("x").apply(&p("7/3")), Polynomial::zero());
        let d = Derivation::from_pairs([("x", p("y"))]);
        assert_eq!(d.apply(&p("x^2")), p("2*x*y"));
    }

    #[test]
    fn nilpotency_indices() {
        // Dx = y, D²x = 0 (so D³x = 0 as well)
        let d = Derivation::from_pairs([("x", p("y")), ("y", p("0"))]);
        assert_eq!(d.is_locally_nilpotent_bounded(8), Nilpotency::Yes(2));
        assert!(d.iterate(&p("x"), 3).is_zero());

        let grow = Derivation::from_pairs([("x", p("x"))]);
        assert_eq!(grow.is_locally_nilpotent_bounded(8), Nilpotency::NoEvidence);
        assert_eq!(grow.is_locally_nilpotent_bounded(100), Nilpotency::NoEvidence);

        // Dx = y², D²x = 2y·Dy = 0
        let sq = Derivation::from_pairs([("x", p("y^2")), ("y", p("0"))]);
        assert_eq!(sq.is_locally_nilpotent_bounded(8), Nilpotency::Yes(2));
        // on x² the index is 3: D(x²) = 2xy², D²(x²) = 2y⁴, D³(x²) = 0
        assert!(!sq.iterate(&p("x^2"), 2).is_zero());
        assert!(sq.iterate(&p("x^2"), 3).is_zero());
    }

    #[test]
    fn bound_is_respected() {
        let chain = Derivation::from_pairs([("x", p("y")), ("y", p("z")), ("z", p("1"))]);
        assert_eq!(chain.is_locally_nilpotent_bounded(4), Nilpotency::Yes(4));
        assert_eq!(chain.is_locally_nilpotent_bounded(3), Nilpotency::NoEvidence);
    }

    #[test]
    fn exponentials() {
        let e = Derivation::partial("x").exp("t", 8).unwrap();
        assert_eq!(e.image("x"), p("x + t"));

        let e = Derivation::from_pairs([("x", p("y")), ("y", p("0"))]).exp("t", 8).unwrap();
        assert_eq!(e.image("x"), p("x + t*y"));
        assert_eq!(e.image("y"), p("y"));

        let e = Derivation::from_pairs([("x", p("y^2")), ("y", p("0"))]).exp("t", 8).unwrap();
        assert_eq!(e.image("x"), p("x + t*y^2"));

        let e = Derivation::from_pairs([("x", p("y")), ("y", p("1"))]).exp("t", 8).unwrap();
        assert_eq!(e.image("x"), p("x + t*y + 1/2*t^2"));
    }

    #[test]
    fn exp_requires_certificate() {
        let grow = Derivation::from_pairs([("x", p("x"))]);
        assert_eq!(grow.exp("t", 8), Err(PolyError::NotNilpotent(8)));
    }

    #[test]
    fn exp_at_zero_is_identity() {
        let d = Derivation::from_pairs([("x", p("y^2 + z")), ("y", p("z")), ("z", p("3"))]);
        let e = d.exp("t", 16).unwrap();
        let at_zero = Substitution::from_pairs([("t", Polynomial::zero())]);
        for v in ["x", "y", "z"] {
            assert_eq!(at_zero.apply(&e.image(v)), Polynomial::var(v));
        }
    }
}
