//! Characteristic ideals and characteristic algebras.
//!
//! The characteristic ideal of a defining matrix is generated by the
//! quadratics `theta_j = alpha_j * beta_j`. Each graded piece of the ideal is
//! kept as a reduced row-echelon basis over the monomials of that degree, so
//! membership tests and normal forms are plain GF(2) elimination.
//!
//! Columns of a degree-k piece are the degree-k monomials in ascending
//! graded-lex order. Pivots sit on the smallest monomials, so a normal form
//! keeps the largest surviving monomials: modulo `x1^2 + x2^2` the class of
//! `x2^2` is written `x1^2`.

use std::collections::BTreeSet;
use std::fmt;

use crate::bits::BitRow;
use crate::dmatrix::DefiningMatrix;
use crate::error::{Error, Result};
use crate::poly::{Gf2Poly, Monomial};

/// Number of monomials of total degree `degree` in `nvars` variables.
pub fn monomial_count(nvars: usize, degree: usize) -> usize {
    if nvars == 0 {
        return usize::from(degree == 0);
    }
    binomial(degree + nvars - 1, nvars - 1)
}

/// `C(n, k)`; panics if the value does not fit in a `usize`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    usize::try_from(acc).expect("binomial coefficient overflows usize")
}

/// Position of a monomial among the monomials of its degree, ascending in
/// graded-lex order (`0` is `x_d^k`).
pub fn monomial_rank(m: &Monomial) -> usize {
    let exps = m.exponents();
    let nvars = exps.len();
    let degree = m.degree();
    let mut remaining = degree;
    let mut above = 0usize;
    for (p, &e) in exps.iter().enumerate().take(nvars.saturating_sub(1)) {
        let e = e as usize;
        for a in e + 1..=remaining {
            above += monomial_count(nvars - p - 1, remaining - a);
        }
        remaining -= e;
    }
    monomial_count(nvars, degree) - 1 - above
}

/// Inverse of [`monomial_rank`].
pub fn monomial_unrank(nvars: usize, degree: usize, rank: usize) -> Monomial {
    let total = monomial_count(nvars, degree);
    assert!(rank < total, "rank {rank} out of range for {total} monomials");
    let mut above = total - 1 - rank;
    let mut exps = vec![0u32; nvars];
    let mut remaining = degree;
    let leading = nvars.saturating_sub(1);
    for (p, slot) in exps.iter_mut().take(leading).enumerate() {
        for a in (0..=remaining).rev() {
            let c = monomial_count(nvars - p - 1, remaining - a);
            if above < c {
                *slot = a as u32;
                remaining -= a;
                break;
            }
            above -= c;
        }
    }
    if nvars > 0 {
        exps[nvars - 1] = remaining as u32;
    }
    Monomial::new(&exps)
}

fn poly_to_bits(p: &Gf2Poly, degree: usize) -> BitRow {
    let mut row = BitRow::zeros(monomial_count(p.nvars(), degree));
    for m in p.terms() {
        debug_assert_eq!(m.degree(), degree);
        row.flip(monomial_rank(m));
    }
    row
}

fn bits_to_poly(nvars: usize, degree: usize, row: &BitRow) -> Gf2Poly {
    Gf2Poly::from_monomials(nvars, row.ones().map(|c| monomial_unrank(nvars, degree, c)))
}

/// Reduced row-echelon basis of one graded piece of an ideal.
#[derive(Clone, Debug)]
pub struct DegreeBasis {
    nvars: usize,
    degree: usize,
    width: usize,
    rows: Vec<BitRow>,
    pivots: Vec<usize>,
}

impl DegreeBasis {
    fn empty(nvars: usize, degree: usize) -> Self {
        DegreeBasis {
            nvars,
            degree,
            width: monomial_count(nvars, degree),
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn full(nvars: usize, degree: usize) -> Self {
        let width = monomial_count(nvars, degree);
        let rows = (0..width)
            .map(|c| {
                let mut r = BitRow::zeros(width);
                r.flip(c);
                r
            })
            .collect();
        DegreeBasis {
            nvars,
            degree,
            width,
            rows,
            pivots: (0..width).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of monomials of this degree.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.width
    }

    /// Pivot columns, ascending.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis elements as polynomials, ordered by pivot.
    pub fn basis(&self) -> Vec<Gf2Poly> {
        self.rows
            .iter()
            .map(|r| bits_to_poly(self.nvars, self.degree, r))
            .collect()
    }

    fn reduce(&self, v: &mut BitRow) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
    }

    /// Add a vector to the span, keeping the basis fully reduced.
    fn insert(&mut self, mut v: BitRow) -> bool {
        self.reduce(&mut v);
        let Some(pivot) = v.lowest_set() else {
            return false;
        };
        for row in &mut self.rows {
            if row.get(pivot) {
                row.xor_assign(&v);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, v);
        true
    }
}

/// Column permutation for multiplication by each variable, degree `k` to `k + 1`.
#[derive(Clone, Debug)]
struct ShiftTable {
    width: usize,
    targets: Vec<usize>,
}

impl ShiftTable {
    fn new(nvars: usize, degree: usize) -> Self {
        let width = monomial_count(nvars, degree);
        let mut targets = vec![0; width * nvars];
        for c in 0..width {
            let m = monomial_unrank(nvars, degree, c);
            for i in 0..nvars {
                let mut up = m.clone();
                up.mul_var(i);
                targets[i * width + c] = monomial_rank(&up);
            }
        }
        ShiftTable { width, targets }
    }

    #[inline]
    fn target(&self, var: usize, column: usize) -> usize {
        self.targets[var * self.width + column]
    }

    /// `out += (Σ_{i in vars} x_i) * v`.
    fn shift_add(&self, v: &BitRow, vars: u64, out: &mut BitRow) {
        for c in v.ones() {
            let mut rest = vars;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out.flip(self.target(i, c));
            }
        }
    }
}

/// A homogeneous ideal of F₂[x1..xd] with lazily built graded pieces.
///
/// Pieces are built in increasing degree. Once some piece contains every
/// monomial of its degree, so does every later piece, and no further
/// elimination is done.
#[derive(Clone, Debug)]
pub struct GradedIdeal {
    nvars: usize,
    /// Nonzero homogeneous generators as `(degree, coefficients)`, sorted and deduplicated.
    generators: Vec<(usize, BitRow)>,
    pieces: Vec<DegreeBasis>,
    shifts: Vec<ShiftTable>,
    vanishes_from: Option<usize>,
}

impl GradedIdeal {
    /// The zero ideal.
    pub fn zero(nvars: usize) -> Self {
        Self::from_bit_generators(nvars, Vec::new())
    }

    /// Ideal generated by homogeneous polynomials; zero generators are dropped.
    pub fn new(nvars: usize, generators: &[Gf2Poly]) -> Result<Self> {
        let mut bits = Vec::with_capacity(generators.len());
        for g in generators {
            if g.nvars() != nvars {
                return Err(Error::Dimension {
                    left: nvars,
                    right: g.nvars(),
                });
            }
            if !g.is_homogeneous() {
                return Err(Error::Argument(format!("generator {g} is not homogeneous")));
            }
            if let Some(k) = g.degree() {
                bits.push((k, poly_to_bits(g, k)));
            }
        }
        Ok(Self::from_bit_generators(nvars, bits))
    }

    /// The characteristic ideal `<theta_1, ..., theta_n>` of a defining matrix.
    pub fn from_matrix(a: &DefiningMatrix) -> Self {
        let nvars = a.rows();
        let width = monomial_count(nvars, 2);
        let ones = (nvars > 0).then(|| ShiftTable::new(nvars, 1));
        let mut bits = Vec::with_capacity(a.cols());
        for j in 0..a.cols() {
            let (alpha, beta) = a.column_masks(j);
            if alpha == 0 || beta == 0 {
                continue;
            }
            let ones = ones.as_ref().expect("columns with entries have rows");
            let mut row = BitRow::zeros(width);
            let mut rest = alpha;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                // x_i sits at ascending rank nvars - 1 - i among the linear monomials
                let mut x = BitRow::zeros(nvars);
                x.flip(nvars - 1 - i);
                ones.shift_add(&x, beta, &mut row);
            }
            if !row.is_zero() {
                bits.push((2, row));
            }
        }
        Self::from_bit_generators(nvars, bits)
    }

    fn from_bit_generators(nvars: usize, mut generators: Vec<(usize, BitRow)>) -> Self {
        generators.sort();
        generators.dedup();
        GradedIdeal {
            nvars,
            generators,
            pieces: Vec::new(),
            shifts: Vec::new(),
            vanishes_from: None,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Distinct nonzero generators.
    pub fn generators(&self) -> Vec<Gf2Poly> {
        self.generators
            .iter()
            .map(|(k, row)| bits_to_poly(self.nvars, *k, row))
            .collect()
    }

    pub fn generator_set(&self) -> BTreeSet<Gf2Poly> {
        self.generators().into_iter().collect()
    }

    fn shift(&mut self, degree: usize) -> &ShiftTable {
        while self.shifts.len() <= degree {
            let k = self.shifts.len();
            self.shifts.push(ShiftTable::new(self.nvars, k));
        }
        &self.shifts[degree]
    }

    /// Build graded pieces up to `degree`, stopping early once a piece is full.
    fn extend_to(&mut self, degree: usize) {
        while self.vanishes_from.is_none() && self.pieces.len() <= degree {
            let k = self.pieces.len();
            let mut piece = DegreeBasis::empty(self.nvars, k);
            if k > 0 {
                let shift = self.shift(k - 1).clone();
                let below = &self.pieces[k - 1];
                for row in &below.rows {
                    if piece.is_full() {
                        break;
                    }
                    for i in 0..self.nvars {
                        let mut up = BitRow::zeros(piece.width);
                        shift.shift_add(row, 1 << i, &mut up);
                        piece.insert(up);
                        if piece.is_full() {
                            break;
                        }
                    }
                }
            }
            for (_, g) in self.generators.iter().filter(|(gk, _)| *gk == k) {
                if piece.is_full() {
                    break;
                }
                piece.insert(g.clone());
            }
            if piece.is_full() {
                self.vanishes_from = Some(k);
            }
            self.pieces.push(piece);
        }
    }

    /// First degree in which the quotient vanishes, searching up to `limit`.
    pub fn vanishing_degree(&mut self, limit: usize) -> Option<usize> {
        self.extend_to(limit);
        self.vanishes_from.filter(|&k| k <= limit)
    }

    /// Row-reduced basis of the degree-`k` piece.
    pub fn degree_basis(&mut self, k: usize) -> DegreeBasis {
        self.extend_to(k);
        match self.vanishes_from {
            Some(v) if k > v => DegreeBasis::full(self.nvars, k),
            _ => self.pieces[k].clone(),
        }
    }

    pub fn rank(&mut self, k: usize) -> usize {
        self.extend_to(k);
        match self.vanishes_from {
            Some(v) if k >= v => monomial_count(self.nvars, k),
            _ => self.pieces[k].rank(),
        }
    }

    /// Dimension of the degree-`k` part of the quotient algebra.
    pub fn quotient_dim(&mut self, k: usize) -> usize {
        self.extend_to(k);
        match self.vanishes_from {
            Some(v) if k >= v => 0,
            _ => self.pieces[k].width - self.pieces[k].rank(),
        }
    }

    /// Quotient dimensions in degrees `0..=max_degree`.
    pub fn quotient_dims(&mut self, max_degree: usize) -> Vec<usize> {
        (0..=max_degree).map(|k| self.quotient_dim(k)).collect()
    }

    /// Piece `k` when it is neither built-full nor beyond vanishing.
    fn live_piece(&mut self, k: usize) -> Option<&DegreeBasis> {
        self.extend_to(k);
        match self.vanishes_from {
            Some(v) if k >= v => None,
            _ => Some(&self.pieces[k]),
        }
    }

    /// Canonical representative of the class of `p` in the quotient.
    pub fn normal_form(&mut self, p: &Gf2Poly) -> Result<NormalForm> {
        if p.nvars() != self.nvars {
            return Err(Error::Dimension {
                left: self.nvars,
                right: p.nvars(),
            });
        }
        let nvars = self.nvars;
        let mut out = Gf2Poly::zero(nvars);
        for (k, component) in p.homogeneous_components() {
            let Some(piece) = self.live_piece(k) else {
                continue;
            };
            let mut v = poly_to_bits(&component, k);
            piece.reduce(&mut v);
            out = &out + &bits_to_poly(nvars, k, &v);
        }
        Ok(NormalForm(out))
    }

    pub fn contains(&mut self, p: &Gf2Poly) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Normal form of `Π_j (1 + alpha_j + beta_j)` for the columns of `a`,
    /// reducing after every factor so intermediate classes stay small.
    pub fn sw_class_of(&mut self, a: &DefiningMatrix) -> Result<NormalForm> {
        if a.rows() != self.nvars {
            return Err(Error::Dimension {
                left: self.nvars,
                right: a.rows(),
            });
        }
        let mut one = BitRow::zeros(1);
        if self.live_piece(0).is_some() {
            one.flip(0);
        }
        let mut comps: Vec<BitRow> = vec![one];
        for j in 0..a.cols() {
            let (alpha, beta) = a.column_masks(j);
            let factor = alpha ^ beta;
            if factor == 0 {
                continue;
            }
            // the product may gain one degree, unless that degree already vanishes
            let top = comps.len();
            if self.live_piece(top).is_some() {
                comps.push(BitRow::zeros(monomial_count(self.nvars, top)));
            }
            for k in (1..comps.len()).rev() {
                let (lower, upper) = comps.split_at_mut(k);
                self.shift(k - 1).shift_add(&lower[k - 1], factor, &mut upper[0]);
                let piece = self.live_piece(k).expect("degree below vanishing");
                piece.reduce(&mut upper[0]);
            }
        }
        let mut out = Gf2Poly::zero(self.nvars);
        for (k, v) in comps.iter().enumerate() {
            out = &out + &bits_to_poly(self.nvars, k, v);
        }
        Ok(NormalForm(out))
    }
}

/// Characteristic ideal of a defining matrix.
pub fn ideal_from_matrix(a: &DefiningMatrix) -> GradedIdeal {
    GradedIdeal::from_matrix(a)
}

/// Reduced representative of a class in a characteristic algebra.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm(Gf2Poly);

impl NormalForm {
    pub fn poly(&self) -> &Gf2Poly {
        &self.0
    }

    pub fn into_poly(self) -> Gf2Poly {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// Degree-`k` part, i.e. the class of `w_k`.
    pub fn component(&self, k: usize) -> Gf2Poly {
        self.0.graded_component(k)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NormalForm({})", self.0)
    }
}

/// Total Stiefel-Whitney class of `a` in its characteristic algebra.
pub fn sw_class(a: &DefiningMatrix) -> NormalForm {
    GradedIdeal::from_matrix(a)
        .sw_class_of(a)
        .expect("ideal built from the same matrix")
}

pub fn is_orientable(a: &DefiningMatrix) -> bool {
    a.w1_polynomial().is_zero()
}

pub fn w2_vanishes(a: &DefiningMatrix) -> bool {
    sw_class(a).component(2).is_zero()
}

pub fn is_spin(a: &DefiningMatrix) -> bool {
    is_orientable(a) && w2_vanishes(a)
}

/// The functional on quadratics sending `x_i^2` to 1 and `x_i x_j` to 0.
pub fn phi_functional(p: &Gf2Poly) -> Result<bool> {
    let mut value = false;
    for m in p.terms() {
        if m.degree() != 2 {
            return Err(Error::Argument(format!(
                "{p} is not a homogeneous quadratic"
            )));
        }
        value ^= m.exponents().contains(&2);
    }
    Ok(value)
}
