use std::collections::BTreeMap;
use std::fmt;

use super::Polynomial;

/// A polynomial map given on variables; unlisted variables are fixed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Substitution {
    images: BTreeMap<String, Polynomial>,
}

impl Substitution {
    pub fn identity() -> Self {
        Substitution::default()
    }

    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, Polynomial)>) -> Self {
        Substitution {
            images: pairs.into_iter().map(|(v, p)| (v.to_string(), p)).collect(),
        }
    }

    pub fn insert(&mut self, var: &str, image: Polynomial) {
        self.images.insert(var.to_string(), image);
    }

    /// Image of `var` (the variable itself when unlisted).
    pub fn image(&self, var: &str) -> Polynomial {
        self.images.get(var).cloned().unwrap_or_else(|| Polynomial::var(var))
    }

    pub fn variables(&self) -> impl Iterator<Item = &str> {
        self.images.keys().map(String::as_str)
    }

    /// `p(image(x₁), …, image(xₙ))`.
    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        let images: Vec<Polynomial> = p.vars.iter().map(|v| self.image(v)).collect();
        // cache powers per variable
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one()]; images.len()];
        let mut total = Polynomial::zero();
        for (e, c) in &p.terms {
            let mut term = Polynomial::constant(c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][k as usize];
            }
            total += &term;
        }
        total
    }

    /// The map `self ∘ inner` on points: coordinates of `self` evaluated at
    /// the output of `inner`.
    pub fn compose(&self, inner: &Substitution) -> Substitution {
        let mut images: BTreeMap<String, Polynomial> = inner.images.clone();
        for (v, img) in &self.images {
            images.insert(v.clone(), inner.apply(img));
        }
        Substitution { images }
    }

    /// Applies `f` to every image.
    pub fn map_images(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Substitution {
        Substitution {
            images: self.images.iter().map(|(v, p)| (v.clone(), f(p))).collect(),
        }
    }

    /// Equality as maps on the union of listed variables.
    pub fn same_map(&self, other: &Substitution) -> bool {
        self.images
            .keys()
            .chain(other.images.keys())
            .all(|v| self.image(v) == other.image(v))
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, p)) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v} ↦ {p}")?;
        }
        Ok(())
    }
}
