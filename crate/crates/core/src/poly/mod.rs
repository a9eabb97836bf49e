//! Exact multivariate polynomials over ℚ.
//!
//! A polynomial carries an ordered list of variable names; exponent vectors
//! are aligned with it. Operations on polynomials over different variable
//! lists first merge the lists (left operand's order first). Terms are
//! ordered graded-lexicographically with respect to the variable order.

mod derivation;
mod parse;
mod subst;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use derivation::{Derivation, Nilpotency};
pub use subst::Substitution;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("parse error at offset {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("variable `{0}` has no value")]
    UnassignedVariable(String),
    #[error("derivation is not certified locally nilpotent within bound {0}")]
    NotNilpotent(usize),
    #[error("the zero polynomial does not define a hypersurface")]
    ZeroHypersurface,
}

pub type Exponents = Vec<u32>;

#[derive(Clone, Debug, Default)]
pub struct Polynomial {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, BigRational>,
}

fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| u64::from(e)).sum();
    let db: u64 = b.iter().map(|&e| u64::from(e)).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

fn merge_vars(a: &[String], b: &[String]) -> Vec<String> {
    let mut out = a.to_vec();
    for v in b {
        if !out.contains(v) {
            out.push(v.clone());
        }
    }
    out
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Polynomial { vars: Vec::new(), terms }
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn var(name: &str) -> Self {
        Self::monomial(&[(name, 1)], BigRational::one())
    }

    /// `coeff · Π name^exp`.
    pub fn monomial(factors: &[(&str, u32)], coeff: BigRational) -> Self {
        let mut vars: Vec<String> = Vec::new();
        let mut exps: Exponents = Vec::new();
        for &(name, e) in factors {
            match vars.iter().position(|v| v == name) {
                Some(i) => exps[i] += e,
                None => {
                    vars.push(name.to_string());
                    exps.push(e);
                }
            }
        }
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        Polynomial { vars, terms }
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    /// Variables that occur with positive exponent in some term.
    pub fn used_variables(&self) -> Vec<String> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|e| e[*i] > 0))
            .map(|(_, v)| v.clone())
            .collect()
    }

    /// Terms in decreasing graded-lex order.
    pub fn terms(&self) -> Vec<(&Exponents, &BigRational)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| grlex(b.0, a.0));
        t
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.vars.iter().position(|v| v == var) {
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    /// Leading exponent and coefficient under graded lex.
    pub fn leading_term(&self) -> Option<(&Exponents, &BigRational)> {
        self.terms.iter().max_by(|a, b| grlex(a.0, b.0))
    }

    /// Re-expresses `self` over `vars`, which must contain every used variable.
    fn aligned(&self, vars: &[String]) -> Polynomial {
        if vars == self.vars.as_slice() {
            return self.clone();
        }
        let map: Vec<Option<usize>> = self.vars.iter().map(|v| vars.iter().position(|w| w == v)).collect();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = vec![0; vars.len()];
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    let j = map[i].expect("target variable list covers every used variable");
                    ne[j] = x;
                }
            }
            terms.insert(ne, c.clone());
        }
        Polynomial {
            vars: vars.to_vec(),
            terms,
        }
    }

    fn align_pair(a: &Polynomial, b: &Polynomial) -> (Polynomial, Polynomial) {
        let vars = merge_vars(&a.vars, &b.vars);
        (a.aligned(&vars), b.aligned(&vars))
    }

    fn add_term(terms: &mut BTreeMap<Exponents, BigRational>, e: Exponents, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, k: &BigRational) -> Polynomial {
        if k.is_zero() {
            return Polynomial {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut result = Polynomial::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate(&self, point: &BTreeMap<String, BigRational>) -> Result<BigRational, PolyError> {
        let mut values = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match point.get(v) {
                Some(x) => values.push(x.clone()),
                None if self.terms.keys().all(|e| e[i] == 0) => values.push(BigRational::zero()),
                None => return Err(PolyError::UnassignedVariable(v.clone())),
            }
        }
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in values.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// `∂self/∂var`.
    pub fn partial(&self, var: &str) -> Polynomial {
        let Some(i) = self.vars.iter().position(|v| v == var) else {
            return Polynomial::zero();
        };
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            Self::add_term(&mut terms, ne, c * BigRational::from_integer(BigInt::from(e[i])));
        }
        Polynomial {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// The `q` with `self = q·d`, if one exists.
    ///
    /// Reduces by the graded-lex leading term of `d`; a nonzero remainder
    /// whose leading term is not divisible by that of `d` proves that no
    /// polynomial quotient exists.
    pub fn divide_exact(&self, d: &Polynomial) -> Result<Option<Polynomial>, PolyError> {
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let (mut rest, d) = Self::align_pair(self, d);
        let (lead_e, lead_c) = {
            let (e, c) = d.leading_term().unwrap();
            (e.clone(), c.clone())
        };
        let mut quotient = Polynomial {
            vars: d.vars.clone(),
            terms: BTreeMap::new(),
        };
        while let Some((e, c)) = rest.leading_term() {
            if e.iter().zip(&lead_e).any(|(a, b)| a < b) {
                return Ok(None);
            }
            let qe: Exponents = e.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
            let qc = c / &lead_c;
            let step = Polynomial {
                vars: d.vars.clone(),
                terms: BTreeMap::from([(qe.clone(), qc.clone())]),
            };
            rest = &rest - &(&step * &d);
            Self::add_term(&mut quotient.terms, qe, qc);
        }
        Ok(Some(quotient))
    }

    /// Normal form modulo the relations `t·t_inv = 1` for each pair, i.e. the
    /// canonical representative of a Laurent polynomial in which no term
    /// contains both `t` and `t_inv`.
    pub fn laurent_normal_form(&self, pairs: &[(&str, &str)]) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            for (t, ti) in pairs {
                let a = self.vars.iter().position(|v| v == t);
                let b = self.vars.iter().position(|v| v == ti);
                if let (Some(a), Some(b)) = (a, b) {
                    let m = ne[a].min(ne[b]);
                    ne[a] -= m;
                    ne[b] -= m;
                }
            }
            Self::add_term(&mut terms, ne, c.clone());
        }
        Polynomial {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Reduces exponents of `var` modulo `order`, i.e. works modulo
    /// `var^order = 1` (a root of unity of that order).
    pub fn reduce_root_of_unity(&self, var: &str, order: u32) -> Polynomial {
        let Some(i) = self.vars.iter().position(|v| v == var) else {
            return self.clone();
        };
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne[i] %= order.max(1);
            Self::add_term(&mut terms, ne, c.clone());
        }
        Polynomial {
            vars: self.vars.clone(),
            terms,
        }
    }

    fn combine(&self, other: &Polynomial, sign: bool) -> Polynomial {
        let (a, b) = Self::align_pair(self, other);
        let mut terms = a.terms;
        for (e, c) in b.terms {
            Self::add_term(&mut terms, e, if sign { c } else { -c });
        }
        Polynomial { vars: a.vars, terms }
    }

    fn product(&self, other: &Polynomial) -> Polynomial {
        let (a, b) = Self::align_pair(self, other);
        let mut terms = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                Self::add_term(&mut terms, e, ca * cb);
            }
        }
        Polynomial { vars: a.vars, terms }
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Self::align_pair(self, other);
        a.terms == b.terms
    }
}

impl Eq for Polynomial {}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.combine(rhs, true)
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        if rhs.vars.iter().any(|v| !self.vars.contains(v)) {
            *self = self.aligned(&merge_vars(&self.vars, &rhs.vars));
        }
        let rhs = rhs.aligned(&self.vars);
        for (e, c) in rhs.terms {
            Self::add_term(&mut self.terms, e, c);
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.combine(rhs, false)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.product(rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-BigRational::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

fn fmt_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    /// Prints in the grammar accepted by `str::parse`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let factors: Vec<String> = self
                .vars
                .iter()
                .zip(e.iter())
                .filter(|(_, &x)| x > 0)
                .map(|(v, &x)| if x == 1 { v.clone() } else { format!("{v}^{x}") })
                .collect();
            if factors.is_empty() {
                write!(f, "{}", fmt_coeff(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_coeff(&abs), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Witness that an action maps the hypersurface `F = 0` into itself:
/// `F∘action − multiplier·F = quotient·modulus` (with `quotient = 0` when no
/// modulus is used).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreservationCertificate {
    pub multiplier: Polynomial,
    pub quotient: Polynomial,
}

/// Decides whether `F∘action ≡ u·F` modulo `modulus` for a multiplier `u`.
///
/// Candidates for `u` are `1` and the exact quotient `F∘action / F`. Without
/// a modulus the difference must vanish identically.
pub fn preserves_hypersurface(
    f: &Polynomial,
    action: &Substitution,
    modulus: Option<&Polynomial>,
) -> Result<Option<PreservationCertificate>, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroHypersurface);
    }
    let image = action.apply(f);
    let mut candidates = vec![Polynomial::one()];
    if let Some(u) = image.divide_exact(f)? {
        if u != Polynomial::one() {
            candidates.push(u);
        }
    }
    for u in candidates {
        let diff = &image - &(&u * f);
        let quotient = match modulus {
            None if diff.is_zero() => Some(Polynomial::zero()),
            None => None,
            Some(m) => diff.divide_exact(m)?,
        };
        if let Some(quotient) = quotient {
            return Ok(Some(PreservationCertificate { multiplier: u, quotient }));
        }
    }
    Ok(None)
}
