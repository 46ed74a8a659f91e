//! Finite covers with smaller holonomy.
//!
//! A subgroup `H <= Z₂^d` acting on the same torus gives a cover of
//! `T^n / Z₂^d`. Its defining matrix has one row per basis vector of `H`, the
//! sum of the rows of the original matrix selected by that vector.

use std::fmt;

use serde::Serialize;

use crate::algebra::{sw_class, NormalForm};
use crate::dmatrix::{symbols_to_string, DefiningMatrix};
use crate::error::{Error, Result};

/// A subspace of F₂^d in reduced row-echelon form.
///
/// Basis vectors are bitmasks (bit `i` is the coefficient of `b_{i+1}`). The
/// pivot of a vector is its lowest set bit; pivots increase down the basis and
/// every pivot bit is clear in the other vectors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<u64>,
}

impl Subspace {
    /// Span of arbitrary vectors.
    pub fn span(ambient: usize, vectors: &[u64]) -> Self {
        assert!(ambient < 64, "ambient rank must be below 64");
        let mut basis: Vec<u64> = Vec::new();
        for &v in vectors {
            assert!(v >> ambient == 0, "vector {v:#b} outside F2^{ambient}");
            let mut v = v;
            for &b in &basis {
                if v & (b & b.wrapping_neg()) != 0 {
                    v ^= b;
                }
            }
            if v == 0 {
                continue;
            }
            let pivot = v & v.wrapping_neg();
            for b in &mut basis {
                if *b & pivot != 0 {
                    *b ^= v;
                }
            }
            basis.push(v);
        }
        basis.sort_by_key(|b| b.trailing_zeros());
        Subspace { ambient, basis }
    }

    pub fn trivial(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[u64] {
        &self.basis
    }

    pub fn contains(&self, v: u64) -> bool {
        let mut v = v;
        for &b in &self.basis {
            if v & (b & b.wrapping_neg()) != 0 {
                v ^= b;
            }
        }
        v == 0
    }

    /// Basis vectors as strings of coefficients, `b1` first.
    pub fn basis_strings(&self) -> Vec<String> {
        self.basis
            .iter()
            .map(|&v| bit_string(v, self.ambient))
            .collect()
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.basis_strings().join(","))
    }
}

/// Coefficients of `v` in F₂^d as a string, `b1` first.
pub fn bit_string(v: u64, ambient: usize) -> String {
    (0..ambient)
        .map(|i| if v >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// All RREF subspaces of rank `k`, sorted by basis.
fn subspaces_of_rank(d: usize, k: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        // free positions of each row: above its pivot and not another pivot
        let pivot_mask: u64 = pivots.iter().map(|&p| 1u64 << p).sum();
        let free: Vec<Vec<usize>> = pivots
            .iter()
            .map(|&p| (p + 1..d).filter(|&q| pivot_mask >> q & 1 == 0).collect())
            .collect();
        let total_free: usize = free.iter().map(Vec::len).sum();
        for assignment in 0u64..(1u64 << total_free) {
            let mut bit = 0;
            let basis = pivots
                .iter()
                .zip(&free)
                .map(|(&p, positions)| {
                    let mut v = 1u64 << p;
                    for &q in positions {
                        if assignment >> bit & 1 == 1 {
                            v |= 1 << q;
                        }
                        bit += 1;
                    }
                    v
                })
                .collect();
            out.push(Subspace { ambient: d, basis });
        }
        // next k-subset of 0..d in lexicographic order
        let mut pos = k;
        while pos > 0 && pivots[pos - 1] == d - k + pos - 1 {
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
        pivots[pos - 1] += 1;
        for i in pos..k {
            pivots[i] = pivots[i - 1] + 1;
        }
    }
    out.sort();
    out
}

/// Every subspace of F₂^d exactly once, by rank and then by basis.
///
/// With `proper_only` the full space is skipped; the trivial subspace is
/// always included.
pub fn enumerate_subspaces(d: usize, proper_only: bool) -> impl Iterator<Item = Subspace> {
    assert!(d < 64, "ambient rank must be below 64");
    let top = if proper_only { d.saturating_sub(1) } else { d };
    let ranks = if proper_only && d == 0 { 0..0 } else { 0..top + 1 };
    ranks.flat_map(move |k| subspaces_of_rank(d, k))
}

/// Number of `k`-dimensional subspaces of F₂^d by the q-binomial product formula.
pub fn gaussian_binomial(d: usize, k: usize) -> u128 {
    if k > d {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (1u128 << (d - i)) - 1;
        den *= (1u128 << (i + 1)) - 1;
    }
    num / den
}

/// Defining matrix of the cover for the subgroup spanned by `basis`.
pub fn cover_matrix_from_basis(a: &DefiningMatrix, basis: &[u64]) -> DefiningMatrix {
    if basis.is_empty() {
        // the torus itself, keeping the column count
        return DefiningMatrix::filled(0, a.cols(), Default::default()).expect("zero rows");
    }
    let rows = basis.iter().map(|&v| a.row_sum_mask(v)).collect();
    DefiningMatrix::from_rows(rows).expect("row sums have equal length")
}

/// Defining matrix of the cover `T^n / H`.
pub fn cover_matrix(a: &DefiningMatrix, h: &Subspace) -> DefiningMatrix {
    assert_eq!(h.ambient(), a.rows(), "subspace lives in the wrong ambient space");
    cover_matrix_from_basis(a, h.basis())
}

/// Total Stiefel-Whitney class of the cover in its own characteristic algebra.
pub fn cover_sw(a: &DefiningMatrix, h: &Subspace) -> NormalForm {
    sw_class(&cover_matrix(a, h))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverReport {
    pub subspace: Subspace,
    pub matrix: DefiningMatrix,
    pub effective: bool,
    pub sw: NormalForm,
}

impl CoverReport {
    pub fn analyze(a: &DefiningMatrix, h: &Subspace) -> Self {
        let matrix = cover_matrix(a, h);
        let sw = sw_class(&matrix);
        CoverReport {
            subspace: h.clone(),
            effective: matrix.is_effective(),
            matrix,
            sw,
        }
    }

    pub fn rank(&self) -> usize {
        self.subspace.rank()
    }

    /// All Stiefel-Whitney classes of the cover vanish.
    pub fn vanishing(&self) -> bool {
        self.sw.is_one()
    }

    pub fn to_json(&self) -> CoverJson {
        CoverJson {
            subspace_basis: self.subspace.basis_strings(),
            rank: self.rank(),
            rows: (0..self.matrix.rows())
                .map(|i| symbols_to_string(self.matrix.row(i)))
                .collect(),
            effective: self.effective,
            sw_normal_form: self.sw.to_string(),
            vanishing: self.vanishing(),
        }
    }
}

/// Serialized form of a [`CoverReport`].
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CoverJson {
    pub subspace_basis: Vec<String>,
    pub rank: usize,
    pub rows: Vec<String>,
    pub effective: bool,
    pub sw_normal_form: String,
    pub vanishing: bool,
}

/// Reports for every proper subgroup, in enumeration order.
pub fn cover_reports(a: &DefiningMatrix) -> impl Iterator<Item = CoverReport> + '_ {
    enumerate_subspaces(a.rows(), true).map(move |h| CoverReport::analyze(a, &h))
}

/// Outcome of checking the minimal non-spin property.
#[derive(Clone, Debug)]
pub struct MinimalNonSpin {
    pub sw: NormalForm,
    pub orientable: bool,
    pub w2_nonzero: bool,
    pub covers_checked: usize,
    /// First cover with a nonvanishing class, if any.
    pub counterexample: Option<CoverReport>,
    /// Every cover report, when requested.
    pub reports: Vec<CoverReport>,
}

impl MinimalNonSpin {
    /// Orientable and non-spin, while every proper cover has `w = 1`.
    pub fn holds(&self) -> bool {
        self.orientable && self.w2_nonzero && self.counterexample.is_none()
    }
}

/// Check that `a` is non-spin while every cover with proper holonomy has all
/// Stiefel-Whitney classes trivial. Requires a free and effective matrix.
pub fn verify_minimal_nonspin(a: &DefiningMatrix, keep_reports: bool) -> Result<MinimalNonSpin> {
    if let Some(subset) = a.free_violation() {
        let rows: Vec<String> = (0..a.rows())
            .filter(|i| subset >> i & 1 == 1)
            .map(|i| (i + 1).to_string())
            .collect();
        return Err(Error::Precondition(format!(
            "matrix is not free: the sum of rows {{{}}} contains no 1",
            rows.join(",")
        )));
    }
    if let Some(row) = a.effectiveness_violation() {
        return Err(Error::Precondition(format!(
            "matrix is not effective: row {} has no 2 or 3",
            row + 1
        )));
    }
    let sw = sw_class(a);
    let orientable = a.w1_polynomial().is_zero();
    let w2_nonzero = !sw.component(2).is_zero();
    let mut covers_checked = 0;
    let mut counterexample = None;
    let mut reports = Vec::new();
    for report in cover_reports(a) {
        covers_checked += 1;
        if counterexample.is_none() && !report.vanishing() {
            counterexample = Some(report.clone());
        }
        if keep_reports {
            reports.push(report);
        } else if counterexample.is_some() {
            break;
        }
    }
    Ok(MinimalNonSpin {
        sw,
        orientable,
        w2_nonzero,
        covers_checked,
        counterexample,
        reports,
    })
}
