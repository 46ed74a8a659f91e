//! Analysis and verification reports, as consumed by the command-line tool.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::algebra::{monomial_count, GradedIdeal, NormalForm};
use crate::covers::{cover_reports, gaussian_binomial, CoverJson, CoverReport};
use crate::dmatrix::{symbols_to_string, DefiningMatrix};
use crate::family::{build_stage, FamilyStage};
use crate::poly::Gf2Poly;

pub const SCHEMA_VERSION: u32 = 1;

/// Largest number of candidate monomials for which the unreduced total class
/// is expanded in a report.
const EXPANSION_LIMIT: usize = 100_000;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AnalysisReport {
    pub schema: u32,
    pub d: usize,
    pub n: usize,
    pub matrix: Vec<String>,
    pub free: bool,
    /// Rows (1-based) whose sum contains no `1`.
    pub free_violation: Option<Vec<usize>>,
    pub effective: bool,
    /// First row (1-based) without a `2` or `3`.
    pub effectiveness_violation: Option<usize>,
    pub orientable: bool,
    pub w1: String,
    /// Unreduced `Π (1 + alpha_j + beta_j)`, omitted when too large to expand.
    pub w_polynomial: Option<String>,
    pub w: String,
    pub w2_vanishes: bool,
    pub spin: bool,
    /// Degrees `k >= 1` where the class of `w_k` is nonzero.
    pub nonzero_degrees: Vec<usize>,
    pub quotient_dims: Vec<usize>,
    pub notes: Vec<String>,
    pub covers: Option<Vec<CoverJson>>,
}

fn expansion_size(d: usize, n: usize) -> usize {
    (0..=n)
        .map(|k| monomial_count(d, k))
        .try_fold(0usize, |acc, c| acc.checked_add(c))
        .unwrap_or(usize::MAX)
}

impl AnalysisReport {
    pub fn analyze(a: &DefiningMatrix, with_covers: bool) -> Self {
        let d = a.rows();
        let n = a.cols();
        let free_violation = a
            .free_violation()
            .map(|s| (0..d).filter(|i| s >> i & 1 == 1).map(|i| i + 1).collect());
        let effectiveness_violation = a.effectiveness_violation().map(|i| i + 1);
        let w1 = a.w1_polynomial();
        let mut ideal = GradedIdeal::from_matrix(a);
        let sw = ideal.sw_class_of(a).expect("ideal of the same matrix");
        let top = ideal.vanishing_degree(n).unwrap_or(n);
        let quotient_dims = ideal.quotient_dims(top);
        let w_polynomial = (expansion_size(d, n) <= EXPANSION_LIMIT)
            .then(|| a.sw_polynomial().to_string());
        let nonzero_degrees: Vec<usize> = sw
            .poly()
            .homogeneous_components()
            .into_iter()
            .map(|(k, _)| k)
            .filter(|&k| k > 0)
            .collect();
        let w2_vanishes = sw.component(2).is_zero();
        let orientable = w1.is_zero();

        let mut notes = Vec::new();
        if free_violation.is_some() {
            notes.push("action is not free: not a manifold quotient, values are algebraic only".into());
        }
        if let Some(&k) = nonzero_degrees.iter().find(|&&k| k >= 3) {
            notes.push(format!(
                "w_{k} is nonzero in the characteristic algebra; this is not a statement about the manifold"
            ));
        }
        let covers = with_covers.then(|| cover_reports(a).map(|r| r.to_json()).collect());
        AnalysisReport {
            schema: SCHEMA_VERSION,
            d,
            n,
            matrix: (0..d).map(|i| symbols_to_string(a.row(i))).collect(),
            free: free_violation.is_none(),
            free_violation,
            effective: effectiveness_violation.is_none(),
            effectiveness_violation,
            orientable,
            w1: w1.to_string(),
            w_polynomial,
            w: sw.to_string(),
            w2_vanishes,
            spin: orientable && w2_vanishes,
            nonzero_degrees,
            quotient_dims,
            notes,
            covers,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let yes = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(out, "matrix: {} x {}", self.d, self.n);
        for row in &self.matrix {
            let _ = writeln!(out, "  {row}");
        }
        match &self.free_violation {
            None => {
                let _ = writeln!(out, "free: yes");
            }
            Some(rows) => {
                let list: Vec<String> = rows.iter().map(usize::to_string).collect();
                let _ = writeln!(out, "free: no (sum of rows {{{}}} contains no 1)", list.join(","));
            }
        }
        match self.effectiveness_violation {
            None => {
                let _ = writeln!(out, "effective: yes");
            }
            Some(row) => {
                let _ = writeln!(out, "effective: no (row {row} has no 2 or 3)");
            }
        }
        let _ = writeln!(out, "orientable: {} (w1 = {})", yes(self.orientable), self.w1);
        if let Some(w) = &self.w_polynomial {
            let _ = writeln!(out, "w polynomial: {w}");
        }
        let _ = writeln!(out, "w: {}", self.w);
        let _ = writeln!(out, "w2 vanishes: {}", yes(self.w2_vanishes));
        let _ = writeln!(out, "spin: {}", yes(self.spin));
        let dims: Vec<String> = self.quotient_dims.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "quotient dims: {}", dims.join(" "));
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        if let Some(covers) = &self.covers {
            let vanishing = covers.iter().filter(|c| c.vanishing).count();
            let _ = writeln!(out, "covers: {} ({} with w = 1)", covers.len(), vanishing);
            for c in covers {
                let basis = if c.subspace_basis.is_empty() {
                    "0".to_string()
                } else {
                    c.subspace_basis.join(",")
                };
                let _ = writeln!(
                    out,
                    "  <{basis}> rank {} effective {} w = {}",
                    c.rank,
                    yes(c.effective),
                    c.sw_normal_form
                );
            }
        }
        out
    }
}

/// Result of checking the family matrix of one rank.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyCheck {
    pub d: usize,
    pub n: usize,
    pub free: bool,
    pub effective: bool,
    pub orientable: bool,
    pub w: String,
    pub w_expected: String,
    pub covers_checked: usize,
    pub covers_expected: u128,
    /// First failing row subset, cover, or class, as a human-readable line.
    pub counterexample: Option<String>,
    pub seconds: f64,
    pub pass: bool,
}

/// Check `F_d`.
pub fn verify_family(d: usize) -> crate::Result<FamilyCheck> {
    let f = build_stage(FamilyStage::F, d)?;
    Ok(verify_matrix(&f))
}

/// Check that `a` (with `d` rows) satisfies everything claimed for `F_d`:
/// free, effective, orientable, `w = 1 + x1^2`, and every cover with proper
/// holonomy has `w = 1`.
pub fn verify_matrix(a: &DefiningMatrix) -> FamilyCheck {
    let start = Instant::now();
    let d = a.rows();
    let mut expected = Gf2Poly::one(d);
    if d > 0 {
        let mut x1sq = crate::poly::Monomial::var(d, 0);
        x1sq.mul_var(0);
        expected.toggle(x1sq);
    }
    let expected = expected.to_string();
    let covers_expected: u128 = (0..d).map(|k| gaussian_binomial(d, k)).sum();

    let free_violation = a.free_violation();
    let effectiveness_violation = a.effectiveness_violation();
    let orientable = a.w1_polynomial().is_zero();
    let sw: NormalForm = crate::algebra::sw_class(a);
    let w = sw.to_string();

    let mut counterexample = None;
    if let Some(s) = free_violation {
        let rows: Vec<String> = (0..d)
            .filter(|i| s >> i & 1 == 1)
            .map(|i| (i + 1).to_string())
            .collect();
        counterexample = Some(format!("not free: sum of rows {{{}}} contains no 1", rows.join(",")));
    } else if let Some(row) = effectiveness_violation {
        counterexample = Some(format!("not effective: row {} has no 2 or 3", row + 1));
    } else if !orientable {
        counterexample = Some(format!("not orientable: w1 = {}", a.w1_polynomial()));
    } else if w != expected {
        counterexample = Some(format!("w = {w}, expected {expected}"));
    }

    let mut covers_checked = 0;
    if counterexample.is_none() {
        for report in cover_reports(a) {
            covers_checked += 1;
            if !report.vanishing() {
                counterexample = Some(describe_cover(&report));
                break;
            }
        }
        if counterexample.is_none() && covers_checked as u128 != covers_expected {
            counterexample = Some(format!(
                "checked {covers_checked} covers, expected {covers_expected}"
            ));
        }
    }
    FamilyCheck {
        d,
        n: a.cols(),
        free: free_violation.is_none(),
        effective: effectiveness_violation.is_none(),
        orientable,
        w,
        w_expected: expected,
        covers_checked,
        covers_expected,
        pass: counterexample.is_none(),
        counterexample,
        seconds: start.elapsed().as_secs_f64(),
    }
}

fn describe_cover(report: &CoverReport) -> String {
    format!(
        "cover <{}> has w = {}",
        report.subspace.basis_strings().join(","),
        report.sw
    )
}

impl FamilyCheck {
    pub fn to_text(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        let mut line = format!(
            "d={} n={} {status}: free={} effective={} orientable={} w={} covers={}/{} ({:.3}s)",
            self.d,
            self.n,
            self.free,
            self.effective,
            self.orientable,
            self.w,
            self.covers_checked,
            self.covers_expected,
            self.seconds
        );
        if let Some(c) = &self.counterexample {
            let _ = write!(line, "\n  counterexample: {c}");
        }
        line
    }
}
