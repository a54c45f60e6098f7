//! Exact sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Polynomials are kept in canonical form (no zero coefficients stored), so
//! equality is structural equality of the term maps.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub const MAX_ARITY: usize = 8;

/// Exponent vector ordered graded-lexicographically, highest term first:
/// larger total degree sorts earlier, ties broken by larger exponent of the
/// lowest-indexed variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    arity: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

fn check_arity(arity: usize) -> Result<()> {
    if (1..=MAX_ARITY).contains(&arity) {
        Ok(())
    } else {
        Err(Error::InvalidArity(arity))
    }
}

impl SparsePoly {
    pub fn zero(arity: usize) -> Result<Self> {
        check_arity(arity)?;
        Ok(SparsePoly {
            arity,
            terms: BTreeMap::new(),
        })
    }

    pub fn one(arity: usize) -> Result<Self> {
        Self::monomial(arity, &vec![0; arity], BigInt::one())
    }

    /// `coeff * prod_i X_i^exponents[i]`; the zero polynomial when `coeff == 0`.
    pub fn monomial(arity: usize, exponents: &[u32], coeff: BigInt) -> Result<Self> {
        let mut p = Self::zero(arity)?;
        p.add_term(exponents, coeff)?;
        Ok(p)
    }

    /// The variable `X_index`.
    pub fn var(arity: usize, index: usize) -> Result<Self> {
        check_arity(arity)?;
        if index >= arity {
            return Err(Error::VariableOutOfRange { index, arity });
        }
        let mut e = vec![0; arity];
        e[index] = 1;
        Self::monomial(arity, &e, BigInt::one())
    }

    /// `X_{i_1} + ... + X_{i_r} + c` for the listed variable indices.
    pub fn linear(arity: usize, vars: &[usize], constant: BigInt) -> Result<Self> {
        let mut p = Self::zero(arity)?;
        for &i in vars {
            p = p.add(&Self::var(arity, i)?)?;
        }
        p.add_term(&vec![0; arity], constant)?;
        Ok(p)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded-lex order, highest first.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(m, c)| (m.exponents(), c))
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next().map(Monomial::degree)
    }

    /// Adds `coeff * X^exponents` in place, keeping the form canonical.
    pub fn add_term(&mut self, exponents: &[u32], coeff: BigInt) -> Result<()> {
        if exponents.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: exponents.len(),
            });
        }
        self.accumulate(Monomial(exponents.to_vec()), coeff);
        Ok(())
    }

    fn accumulate(&mut self, m: Monomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn same_arity(&self, other: &Self) -> Result<()> {
        if self.arity == other.arity {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        SparsePoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return SparsePoly {
                arity: self.arity,
                terms: BTreeMap::new(),
            };
        }
        SparsePoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    /// Schoolbook product over the two term maps.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_arity(other)?;
        let mut out = SparsePoly {
            arity: self.arity,
            terms: BTreeMap::new(),
        };
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.accumulate(ma.times(mb), ca * cb);
            }
        }
        Ok(out)
    }

    /// `self^e` by repeated squaring; `p^0 == 1` (including `0^0`).
    pub fn pow(&self, mut e: u64) -> Self {
        let mut result = Self::one(self.arity).expect("arity already validated");
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same arity");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same arity");
            }
        }
        result
    }

    /// Exact evaluation at `point`.
    pub fn eval(&self, point: &[BigInt]) -> Result<BigInt> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: point.len(),
            });
        }
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                term *= num_traits::pow(x.clone(), e as usize);
            }
            total += term;
        }
        Ok(total)
    }

    /// Structural equality; valid because both operands are canonical.
    pub fn equal(&self, other: &Self) -> bool {
        self == other
    }
}

/// The rising factorial `(v)_m = v (v + 1) ... (v + m - 1)` where `v` is the
/// sum of the variables listed in `vars`.
pub fn pochhammer_poly(arity: usize, vars: &[usize], m: u64) -> Result<SparsePoly> {
    check_arity(arity)?;
    if let Some(&index) = vars.iter().find(|&&i| i >= arity) {
        return Err(Error::VariableOutOfRange { index, arity });
    }
    let mut acc = SparsePoly::one(arity)?;
    for i in 0..m {
        acc = acc.mul(&SparsePoly::linear(arity, vars, BigInt::from(i))?)?;
    }
    Ok(acc)
}

/// `coeff*X0^e0*X1^e1*...` terms, highest first, joined by ` + `; `0` for
/// the zero polynomial. Every variable is printed, including zero exponents.
impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (t, (m, c)) in self.terms.iter().enumerate() {
            if t > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (i, e) in m.exponents().iter().enumerate() {
                write!(f, "*X{i}^{e}")?;
            }
        }
        Ok(())
    }
}
