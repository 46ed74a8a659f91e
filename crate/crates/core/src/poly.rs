//! Multivariate polynomials over F₂.
//!
//! A polynomial is a set of monomials (a present monomial has coefficient 1),
//! so addition is symmetric difference. Monomials are exponent vectors and are
//! ordered graded-lexicographically with `x1 > x2 > ... > xd`.
//!
//! Variables are indexed from 0 in the API and rendered from 1 (`x1`, `x2`, ...).

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul};

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exponent vector of a monomial in a fixed number of variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u32; 8]>,
}

impl Monomial {
    pub fn new(exps: &[u32]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    /// The constant monomial 1.
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    /// The monomial `x_{i+1}`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable {i} out of range for {nvars} variables");
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Multiply by a single variable in place.
    pub fn mul_var(&mut self, i: usize) {
        self.exps[i] += 1;
    }

    /// Value at a point of F₂^d.
    pub fn evaluate(&self, point: &[bool]) -> bool {
        self.exps
            .iter()
            .zip(point)
            .all(|(&e, &p)| e == 0 || p)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Polynomial in `nvars` variables with coefficients in F₂.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Poly {
    nvars: usize,
    terms: BTreeSet<Monomial>,
}

impl Gf2Poly {
    pub fn zero(nvars: usize) -> Self {
        Gf2Poly {
            nvars,
            terms: BTreeSet::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_monomial(Monomial::one(nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_monomial(Monomial::var(nvars, i))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeSet::new();
        terms.insert(m);
        Gf2Poly { nvars, terms }
    }

    /// Sum of the given monomials; repeated monomials cancel in pairs.
    pub fn from_monomials<I: IntoIterator<Item = Monomial>>(nvars: usize, monomials: I) -> Self {
        let mut p = Self::zero(nvars);
        for m in monomials {
            assert_eq!(m.nvars(), nvars, "monomial has wrong variable count");
            p.toggle(m);
        }
        p
    }

    /// `Σ coeffs[i] x_{i+1}`.
    pub fn linear_form(coeffs: &[bool]) -> Self {
        let nvars = coeffs.len();
        Self::from_monomials(
            nvars,
            coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c)
                .map(|(i, _)| Monomial::var(nvars, i)),
        )
    }

    /// The `i`-th elementary symmetric polynomial in `nvars` variables.
    pub fn elementary_symmetric(nvars: usize, i: usize) -> Result<Self> {
        if i > nvars {
            return Err(Error::Argument(format!(
                "elementary symmetric index {i} exceeds variable count {nvars}"
            )));
        }
        let mut p = Self::zero(nvars);
        let mut chosen: Vec<usize> = (0..i).collect();
        loop {
            let mut m = Monomial::one(nvars);
            for &c in &chosen {
                m.mul_var(c);
            }
            p.toggle(m);
            // advance to the next i-subset in lexicographic order
            let mut pos = i;
            while pos > 0 && chosen[pos - 1] == nvars - i + pos - 1 {
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
            chosen[pos - 1] += 1;
            for k in pos..i {
                chosen[k] = chosen[k - 1] + 1;
            }
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = &Monomial> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().next().unwrap().is_one()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.iter().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.iter().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(first) => degrees.all(|k| k == first),
        }
    }

    /// Add a single monomial.
    pub fn toggle(&mut self, m: Monomial) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    fn check_dims(&self, other: &Gf2Poly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Dimension {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Gf2Poly) -> Result<Gf2Poly> {
        self.check_dims(other)?;
        Ok(Gf2Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .symmetric_difference(&other.terms)
                .cloned()
                .collect(),
        })
    }

    pub fn try_mul(&self, other: &Gf2Poly) -> Result<Gf2Poly> {
        self.check_dims(other)?;
        Ok(self.mul_below(other, usize::MAX))
    }

    /// The product with every term of degree `>= bound` discarded.
    pub fn mul_below(&self, other: &Gf2Poly, bound: usize) -> Gf2Poly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Gf2Poly::zero(self.nvars);
        for a in &self.terms {
            let da = a.degree();
            if da >= bound {
                // terms ascend by degree
                break;
            }
            for b in &other.terms {
                if da + b.degree() >= bound {
                    break;
                }
                out.toggle(a.mul(b));
            }
        }
        out
    }

    pub fn square(&self) -> Gf2Poly {
        self * self
    }

    pub fn pow(&self, mut exp: u32) -> Gf2Poly {
        let mut base = self.clone();
        let mut acc = Gf2Poly::one(self.nvars);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// Sum of the terms of total degree exactly `k`.
    pub fn graded_component(&self, k: usize) -> Gf2Poly {
        Gf2Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|m| m.degree() == k)
                .cloned()
                .collect(),
        }
    }

    /// Nonzero homogeneous components, ascending by degree.
    pub fn homogeneous_components(&self) -> Vec<(usize, Gf2Poly)> {
        let mut out: Vec<(usize, Gf2Poly)> = Vec::new();
        for m in &self.terms {
            let k = m.degree();
            match out.last_mut() {
                Some((deg, p)) if *deg == k => {
                    p.terms.insert(m.clone());
                }
                _ => out.push((k, Gf2Poly::from_monomial(m.clone()))),
            }
        }
        out
    }

    /// Value at a point of F₂^d.
    pub fn evaluate(&self, point: &[bool]) -> bool {
        assert_eq!(point.len(), self.nvars, "point has wrong length");
        self.terms
            .iter()
            .filter(|m| m.evaluate(point))
            .count()
            % 2
            == 1
    }

    /// Parse the text rendering (`"1+x1^2+x1*x2"`, `"0"`).
    pub fn parse(nvars: usize, text: &str) -> Result<Gf2Poly> {
        let err = |msg: String| Error::Argument(format!("cannot parse polynomial {text:?}: {msg}"));
        let text = text.trim();
        if text == "0" {
            return Ok(Gf2Poly::zero(nvars));
        }
        let mut p = Gf2Poly::zero(nvars);
        for term in text.split('+') {
            let term = term.trim();
            if term == "1" {
                p.toggle(Monomial::one(nvars));
                continue;
            }
            let mut m = Monomial::one(nvars);
            for factor in term.split('*') {
                let factor = factor.trim();
                let rest = factor
                    .strip_prefix('x')
                    .ok_or_else(|| err(format!("bad factor {factor:?}")))?;
                let (index, exp) = match rest.split_once('^') {
                    Some((i, e)) => (i, e.parse::<u32>().map_err(|e| err(e.to_string()))?),
                    None => (rest, 1),
                };
                let index: usize = index.parse().map_err(|_| err(format!("bad factor {factor:?}")))?;
                if index == 0 || index > nvars {
                    return Err(err(format!("variable x{index} out of range")));
                }
                m.exps[index - 1] += exp;
            }
            p.toggle(m);
        }
        Ok(p)
    }
}

impl fmt::Display for Gf2Poly {
    /// Ascending degree; within one degree, `x1` before `x2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (_, component) in self.homogeneous_components() {
            for m in component.terms.iter().rev() {
                if !first {
                    f.write_str("+")?;
                }
                first = false;
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly[{}]({})", self.nvars, self)
    }
}

impl Add for &Gf2Poly {
    type Output = Gf2Poly;

    fn add(self, rhs: &Gf2Poly) -> Gf2Poly {
        self.try_add(rhs).expect("variable count mismatch")
    }
}

impl Add for Gf2Poly {
    type Output = Gf2Poly;

    fn add(self, rhs: Gf2Poly) -> Gf2Poly {
        &self + &rhs
    }
}

impl Mul for &Gf2Poly {
    type Output = Gf2Poly;

    fn mul(self, rhs: &Gf2Poly) -> Gf2Poly {
        self.try_mul(rhs).expect("variable count mismatch")
    }
}

impl Mul for Gf2Poly {
    type Output = Gf2Poly;

    fn mul(self, rhs: Gf2Poly) -> Gf2Poly {
        &self * &rhs
    }
}
