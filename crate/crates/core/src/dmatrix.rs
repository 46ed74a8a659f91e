//! Defining matrices over the alphabet `{0, 1, 2, 3}`.
//!
//! The symbols `0..=3` stand for the four circle automorphisms
//! `z`, `-z`, `conj(z)` and `-conj(z)`. They form a Klein four-group, stored
//! here as the pair of homomorphisms `(alpha, beta)` to F₂ so that the group
//! law is XOR. A `d x n` matrix lists, per generator of Z₂^d, which
//! automorphism acts on each circle factor of the torus T^n.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Gf2Poly, Monomial};

/// Largest supported row count (rows are addressed by `u64` subset masks).
pub const MAX_ROWS: usize = 64;

/// An element of the Klein four-group of circle automorphisms.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DSymbol {
    alpha: bool,
    beta: bool,
}

impl DSymbol {
    pub const ZERO: DSymbol = DSymbol::from_bits(false, false);
    pub const ONE: DSymbol = DSymbol::from_bits(true, true);
    pub const TWO: DSymbol = DSymbol::from_bits(true, false);
    pub const THREE: DSymbol = DSymbol::from_bits(false, true);

    pub const ALL: [DSymbol; 4] = [Self::ZERO, Self::ONE, Self::TWO, Self::THREE];

    pub const fn from_bits(alpha: bool, beta: bool) -> Self {
        DSymbol { alpha, beta }
    }

    pub fn from_code(code: u8) -> Option<Self> {
        match code {
            0 => Some(Self::ZERO),
            1 => Some(Self::ONE),
            2 => Some(Self::TWO),
            3 => Some(Self::THREE),
            _ => None,
        }
    }

    pub fn code(self) -> u8 {
        match (self.alpha, self.beta) {
            (false, false) => 0,
            (true, true) => 1,
            (true, false) => 2,
            (false, true) => 3,
        }
    }

    pub fn alpha(self) -> bool {
        self.alpha
    }

    pub fn beta(self) -> bool {
        self.beta
    }

    /// Whether the automorphism reverses orientation of the circle.
    pub fn reverses(self) -> bool {
        self.alpha ^ self.beta
    }

}

/// Group law of the Klein four-group.
impl std::ops::Add for DSymbol {
    type Output = DSymbol;

    fn add(self, other: DSymbol) -> DSymbol {
        DSymbol {
            alpha: self.alpha ^ other.alpha,
            beta: self.beta ^ other.beta,
        }
    }
}

impl fmt::Display for DSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

impl fmt::Debug for DSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}", self.code())
    }
}

/// Row-major `d x n` matrix of [`DSymbol`]s.
///
/// Zero-row matrices stand for the torus itself and zero-column matrices are
/// the identity for [`DefiningMatrix::concat`]; neither is accepted by the
/// text parser.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DefiningMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<DSymbol>,
}

impl DefiningMatrix {
    pub fn from_rows(rows: Vec<Vec<DSymbol>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::Argument(format!(
                "row {} has {} entries, expected {cols}",
                bad + 1,
                rows[bad].len()
            )));
        }
        Self::check_rows(rows.len())?;
        Ok(DefiningMatrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Build from rows of codes in `0..=3`.
    pub fn from_codes<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| {
                r.as_ref()
                    .iter()
                    .map(|&c| {
                        DSymbol::from_code(c)
                            .ok_or_else(|| Error::Argument(format!("symbol {c} not in 0..=3")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    /// Build from columns of codes in `0..=3`, each of length `rows`.
    pub fn from_column_codes<C: AsRef<[u8]>>(rows: usize, columns: &[C]) -> Result<Self> {
        let mut m = Self::filled(rows, columns.len(), DSymbol::ZERO)?;
        for (j, col) in columns.iter().enumerate() {
            let col = col.as_ref();
            if col.len() != rows {
                return Err(Error::Argument(format!(
                    "column {} has {} entries, expected {rows}",
                    j + 1,
                    col.len()
                )));
            }
            for (i, &c) in col.iter().enumerate() {
                let s = DSymbol::from_code(c)
                    .ok_or_else(|| Error::Argument(format!("symbol {c} not in 0..=3")))?;
                m.set(i, j, s);
            }
        }
        Ok(m)
    }

    pub fn filled(rows: usize, cols: usize, value: DSymbol) -> Result<Self> {
        Self::check_rows(rows)?;
        Ok(DefiningMatrix {
            rows,
            cols,
            entries: vec![value; rows * cols],
        })
    }

    fn check_rows(rows: usize) -> Result<()> {
        if rows > MAX_ROWS {
            return Err(Error::Argument(format!(
                "{rows} rows exceeds the supported maximum of {MAX_ROWS}"
            )));
        }
        Ok(())
    }

    /// Holonomy rank `d`.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Torus dimension `n`.
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> DSymbol {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: DSymbol) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[DSymbol] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<DSymbol> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    fn check_column(&self, j: usize) -> Result<()> {
        if j >= self.cols {
            return Err(Error::ColumnOutOfRange {
                column: j,
                columns: self.cols,
            });
        }
        Ok(())
    }

    /// Entrywise sum of the rows selected by `subset` (bit `i` selects row `i`).
    pub fn row_sum_mask(&self, subset: u64) -> Vec<DSymbol> {
        let mut sum = vec![DSymbol::ZERO; self.cols];
        for i in (0..self.rows).filter(|i| subset >> i & 1 == 1) {
            for (s, &e) in sum.iter_mut().zip(self.row(i)) {
                *s = *s + e;
            }
        }
        sum
    }

    /// Entrywise sum of the rows with the given (0-based) indices.
    pub fn row_sum(&self, subset: &[usize]) -> Result<Vec<DSymbol>> {
        if subset.is_empty() {
            return Err(Error::Argument("row subset must be nonempty".into()));
        }
        let mut mask = 0u64;
        for &i in subset {
            if i >= self.rows {
                return Err(Error::Argument(format!(
                    "row {i} out of range for {} rows",
                    self.rows
                )));
            }
            if mask >> i & 1 == 1 {
                return Err(Error::Argument(format!("row {i} selected twice")));
            }
            mask |= 1 << i;
        }
        Ok(self.row_sum_mask(mask))
    }

    /// First nonempty row subset (as a mask) whose sum contains no `1`, or
    /// `None` when the action is free. Subsets are visited in Gray-code order.
    pub fn free_violation(&self) -> Option<u64> {
        assert!(self.rows < 64, "freeness check needs fewer than 64 rows");
        let words = self.cols.div_ceil(64);
        let pack = |i: usize| -> (Vec<u64>, Vec<u64>) {
            let mut a = vec![0u64; words];
            let mut b = vec![0u64; words];
            for (j, s) in self.row(i).iter().enumerate() {
                a[j / 64] |= (s.alpha as u64) << (j % 64);
                b[j / 64] |= (s.beta as u64) << (j % 64);
            }
            (a, b)
        };
        let packed: Vec<(Vec<u64>, Vec<u64>)> = (0..self.rows).map(pack).collect();
        let mut alpha = vec![0u64; words];
        let mut beta = vec![0u64; words];
        let mut subset = 0u64;
        for step in 1..(1u64 << self.rows) {
            let flip = step.trailing_zeros() as usize;
            subset ^= 1 << flip;
            let (ra, rb) = &packed[flip];
            let mut has_one = false;
            for w in 0..words {
                alpha[w] ^= ra[w];
                beta[w] ^= rb[w];
                has_one |= alpha[w] & beta[w] != 0;
            }
            if !has_one {
                return Some(subset);
            }
        }
        None
    }

    /// The action of Z₂^d on T^n is free.
    pub fn is_free(&self) -> bool {
        self.free_violation().is_none()
    }

    /// First row without a `2` or `3`.
    pub fn effectiveness_violation(&self) -> Option<usize> {
        (0..self.rows).find(|&i| !self.row(i).iter().any(|s| s.reverses()))
    }

    /// Z₂^d is the full holonomy group.
    pub fn is_effective(&self) -> bool {
        self.effectiveness_violation().is_none()
    }

    /// `(alpha, beta)` of column `j` as masks over the rows.
    pub fn column_masks(&self, j: usize) -> (u64, u64) {
        let mut a = 0u64;
        let mut b = 0u64;
        for i in 0..self.rows {
            let s = self.get(i, j);
            a |= (s.alpha as u64) << i;
            b |= (s.beta as u64) << i;
        }
        (a, b)
    }

    /// `alpha_j = Σ_i alpha(A_ij) x_i`.
    pub fn alpha_poly(&self, j: usize) -> Result<Gf2Poly> {
        self.check_column(j)?;
        Ok(Gf2Poly::linear_form(
            &self.column(j).iter().map(|s| s.alpha).collect::<Vec<_>>(),
        ))
    }

    /// `beta_j = Σ_i beta(A_ij) x_i`.
    pub fn beta_poly(&self, j: usize) -> Result<Gf2Poly> {
        self.check_column(j)?;
        Ok(Gf2Poly::linear_form(
            &self.column(j).iter().map(|s| s.beta).collect::<Vec<_>>(),
        ))
    }

    /// The cup product `alpha_j * beta_j`.
    pub fn theta(&self, j: usize) -> Result<Gf2Poly> {
        Ok(&self.alpha_poly(j)? * &self.beta_poly(j)?)
    }

    /// Image of the dual basis element of column `j` under the transgression,
    /// expanded directly from the column entries.
    pub fn transgression_oracle(&self, j: usize) -> Result<Gf2Poly> {
        self.check_column(j)?;
        let d = self.rows;
        let col = self.column(j);
        let mut out = Gf2Poly::zero(d);
        for (i, s) in col.iter().enumerate() {
            if s.code() == 1 {
                let mut m = Monomial::one(d);
                m.mul_var(i);
                m.mul_var(i);
                out.toggle(m);
            }
        }
        for i in 0..d {
            for k in i + 1..d {
                let pair = (col[i].code(), col[k].code());
                let listed = matches!(
                    pair,
                    (1, 2) | (2, 1) | (1, 3) | (3, 1) | (3, 2) | (2, 3)
                );
                if listed {
                    let mut m = Monomial::one(d);
                    m.mul_var(i);
                    m.mul_var(k);
                    out.toggle(m);
                }
            }
        }
        Ok(out)
    }

    /// `1 + alpha_j + beta_j`.
    pub fn sw_factor(&self, j: usize) -> Result<Gf2Poly> {
        self.check_column(j)?;
        let mut f = Gf2Poly::linear_form(
            &self.column(j).iter().map(|s| s.reverses()).collect::<Vec<_>>(),
        );
        f.toggle(Monomial::one(self.rows));
        Ok(f)
    }

    /// The unreduced product `Π_j (1 + alpha_j + beta_j)`.
    pub fn sw_polynomial(&self) -> Gf2Poly {
        (0..self.cols).fold(Gf2Poly::one(self.rows), |acc, j| {
            &acc * &self.sw_factor(j).expect("column in range")
        })
    }

    /// `Σ_j (alpha_j + beta_j)`; zero exactly when the quotient is orientable.
    pub fn w1_polynomial(&self) -> Gf2Poly {
        let mut coeffs = vec![false; self.rows];
        for j in 0..self.cols {
            for (i, c) in coeffs.iter_mut().enumerate() {
                *c ^= self.get(i, j).reverses();
            }
        }
        Gf2Poly::linear_form(&coeffs)
    }

    /// Diagonal of the holonomy representation at `g ∈ Z₂^d`: entry `j` is
    /// `(-1)^{(alpha_j + beta_j)(g)}`.
    pub fn holonomy_diag(&self, g: &[bool]) -> Result<Vec<i8>> {
        if g.len() != self.rows {
            return Err(Error::Dimension {
                left: g.len(),
                right: self.rows,
            });
        }
        Ok((0..self.cols)
            .map(|j| {
                let flips = (0..self.rows)
                    .filter(|&i| g[i] && self.get(i, j).reverses())
                    .count();
                if flips % 2 == 0 {
                    1
                } else {
                    -1
                }
            })
            .collect())
    }

    /// Column-wise concatenation `[self, other]`.
    pub fn concat(&self, other: &DefiningMatrix) -> Result<DefiningMatrix> {
        if self.rows != other.rows {
            return Err(Error::RowMismatch {
                left: self.rows,
                right: other.rows,
            });
        }
        let rows = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend_from_slice(other.row(i));
                r
            })
            .collect();
        let mut m = Self::from_rows(rows)?;
        m.cols = self.cols + other.cols;
        Ok(m)
    }

    /// Parse the matrix text format: a header line `"d n"`, then `d` lines of
    /// `n` symbols, optionally separated by single spaces.
    pub fn parse(text: &str) -> Result<DefiningMatrix> {
        let err = |line: usize, column: usize, message: String| Error::Parse {
            line,
            column,
            message,
        };
        let body = text.strip_suffix('\n').unwrap_or(text);
        let lines: Vec<&str> = body.split('\n').collect();
        let header = lines[0];
        let (d_text, n_text) = header
            .split_once(' ')
            .ok_or_else(|| err(1, 1, "expected header \"d n\"".into()))?;
        let parse_dim = |s: &str, column: usize, name: &str| -> Result<usize> {
            if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err(1, column, format!("{name} is not a non-negative integer")));
            }
            s.parse::<usize>()
                .map_err(|e| err(1, column, format!("{name}: {e}")))
        };
        let d = parse_dim(d_text, 1, "row count")?;
        let n = parse_dim(n_text, d_text.len() + 2, "column count")?;
        if d == 0 {
            return Err(err(1, 1, "row count must be at least 1".into()));
        }
        if n == 0 {
            return Err(err(1, d_text.len() + 2, "column count must be at least 1".into()));
        }
        if d > MAX_ROWS {
            return Err(err(1, 1, format!("row count exceeds {MAX_ROWS}")));
        }
        if lines.len() - 1 != d {
            let line = (lines.len() + 1).min(d + 2);
            return Err(err(
                line,
                1,
                format!("expected {d} matrix rows, found {}", lines.len() - 1),
            ));
        }
        let mut rows = Vec::with_capacity(d);
        for (r, line) in lines[1..].iter().enumerate() {
            let lineno = r + 2;
            let mut row = Vec::with_capacity(n);
            let mut expect_symbol = true;
            for (c, ch) in line.chars().enumerate() {
                let column = c + 1;
                match ch {
                    '0'..='3' => {
                        row.push(DSymbol::from_code(ch as u8 - b'0').unwrap());
                        expect_symbol = false;
                    }
                    ' ' if !expect_symbol => expect_symbol = true,
                    ' ' => return Err(err(lineno, column, "unexpected space".into())),
                    other => {
                        return Err(err(lineno, column, format!("invalid character {other:?}")))
                    }
                }
            }
            if expect_symbol && !line.is_empty() {
                return Err(err(lineno, line.chars().count(), "trailing space".into()));
            }
            if row.len() != n {
                return Err(err(
                    lineno,
                    line.chars().count().max(1),
                    format!("expected {n} symbols, found {}", row.len()),
                ));
            }
            rows.push(row);
        }
        Self::from_rows(rows)
    }

    /// The matrix text format, without separating spaces.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            for s in self.row(i) {
                out.push(char::from(b'0' + s.code()));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for DefiningMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for DefiningMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DefiningMatrix({}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            f.write_str(if i == 0 { ": " } else { "/" })?;
            for s in self.row(i) {
                write!(f, "{s}")?;
            }
        }
        f.write_str(")")
    }
}

/// Render a row of symbols as its code string.
pub fn symbols_to_string(row: &[DSymbol]) -> String {
    row.iter().map(|s| char::from(b'0' + s.code())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> DefiningMatrix {
        DefiningMatrix::from_codes(&[[1, 2, 2, 2, 2], [1, 3, 2, 0, 0]]).unwrap()
    }

    fn codes(v: &[DSymbol]) -> Vec<u8> {
        v.iter().map(|s| s.code()).collect()
    }

    fn p(nvars: usize, s: &str) -> Gf2Poly {
        Gf2Poly::parse(nvars, s).unwrap()
    }

    #[test]
    fn klein_group_law() {
        let one = DSymbol::ONE;
        let two = DSymbol::TWO;
        assert_eq!(one + two, DSymbol::THREE);
        for x in DSymbol::ALL {
            assert_eq!(DSymbol::ZERO + x, x);
            assert_eq!(x + x, DSymbol::ZERO);
            assert_eq!(DSymbol::from_code(x.code()), Some(x));
        }
        assert_eq!(DSymbol::from_code(4), None);
        // Table of (alpha, beta)
        let table: Vec<(bool, bool)> = DSymbol::ALL.iter().map(|s| (s.alpha(), s.beta())).collect();
        assert_eq!(table, [(false, false), (true, true), (true, false), (false, true)]);
    }

    #[test]
    fn row_sums() {
        let f = f2();
        assert_eq!(codes(&f.row_sum(&[0]).unwrap()), [1, 2, 2, 2, 2]);
        assert_eq!(codes(&f.row_sum(&[1]).unwrap()), [1, 3, 2, 0, 0]);
        assert_eq!(codes(&f.row_sum(&[0, 1]).unwrap()), [0, 1, 0, 2, 2]);
        assert!(f.row_sum(&[]).is_err());
        assert!(f.row_sum(&[2]).is_err());
    }

    #[test]
    fn freeness_and_effectiveness() {
        assert!(f2().is_free());
        assert!(f2().is_effective());
        let two = DefiningMatrix::from_codes(&[[2]]).unwrap();
        assert_eq!(two.free_violation(), Some(0b1));
        assert!(DefiningMatrix::from_codes(&[[1]]).unwrap().is_free());
        assert!(DefiningMatrix::from_codes(&[[1, 3]]).unwrap().is_effective());
        let a0 = DefiningMatrix::from_codes(&[[1, 0], [0, 1], [1, 1]]).unwrap();
        assert_eq!(a0.effectiveness_violation(), Some(0));
        // dependent rows sum to the zero row
        let dep = DefiningMatrix::from_codes(&[[1, 2], [1, 2]]).unwrap();
        assert_eq!(dep.free_violation(), Some(0b11));
    }

    #[test]
    fn cocycle_polynomials() {
        let f = f2();
        assert_eq!(f.alpha_poly(0).unwrap(), p(2, "x1+x2"));
        assert_eq!(f.beta_poly(0).unwrap(), p(2, "x1+x2"));
        assert_eq!(f.alpha_poly(1).unwrap(), p(2, "x1"));
        assert_eq!(f.beta_poly(1).unwrap(), p(2, "x2"));
        assert_eq!(f.alpha_poly(3).unwrap(), p(2, "x1"));
        assert!(f.beta_poly(3).unwrap().is_zero());
        assert_eq!(f.theta(0).unwrap(), p(2, "x1^2+x2^2"));
        assert_eq!(f.theta(1).unwrap(), p(2, "x1*x2"));
        assert!(f.theta(3).unwrap().is_zero());
        assert_eq!(
            f.theta(5).unwrap_err(),
            Error::ColumnOutOfRange { column: 5, columns: 5 }
        );
    }

    #[test]
    fn transgression_examples() {
        let m = DefiningMatrix::from_column_codes(2, &[[1, 1], [2, 3], [0, 2]]).unwrap();
        assert_eq!(m.transgression_oracle(0).unwrap(), p(2, "x1^2+x2^2"));
        assert_eq!(m.transgression_oracle(1).unwrap(), p(2, "x1*x2"));
        assert!(m.transgression_oracle(2).unwrap().is_zero());
        assert!(m.transgression_oracle(3).is_err());
    }

    #[test]
    fn sw_polynomials() {
        assert_eq!(f2().sw_polynomial(), p(2, "1+x1^4+x2^2+x1^2*x2^2"));
        assert!(DefiningMatrix::filled(3, 4, DSymbol::ZERO)
            .unwrap()
            .sw_polynomial()
            .is_one());
        assert!(DefiningMatrix::from_column_codes(2, &[[1, 1]])
            .unwrap()
            .sw_polynomial()
            .is_one());
    }

    #[test]
    fn first_class() {
        assert!(f2().w1_polynomial().is_zero());
        let c = DefiningMatrix::from_column_codes(2, &[[2, 0]]).unwrap();
        assert_eq!(c.w1_polynomial(), p(2, "x1"));
        for d in 1..6 {
            let b = DefiningMatrix::filled(d, 1, DSymbol::TWO).unwrap();
            assert_eq!(b.w1_polynomial(), Gf2Poly::elementary_symmetric(d, 1).unwrap());
        }
    }

    #[test]
    fn holonomy_signs() {
        let f = f2();
        assert_eq!(f.holonomy_diag(&[false, false]).unwrap(), [1; 5]);
        assert_eq!(f.holonomy_diag(&[true, false]).unwrap(), [1, -1, -1, -1, -1]);
        for g in [[false, true], [true, true], [true, false]] {
            let prod: i32 = f.holonomy_diag(&g).unwrap().iter().map(|&s| s as i32).product();
            assert_eq!(prod, 1);
        }
        assert!(f.holonomy_diag(&[true]).is_err());
    }

    #[test]
    fn concatenation() {
        let a0 = DefiningMatrix::from_column_codes(2, &[[1, 1]]).unwrap();
        let a1 = DefiningMatrix::from_column_codes(2, &[[2, 3]]).unwrap();
        let a = a0.concat(&a1).unwrap();
        assert_eq!(a, DefiningMatrix::from_codes(&[[1, 2], [1, 3]]).unwrap());
        let empty = DefiningMatrix::filled(2, 0, DSymbol::ZERO).unwrap();
        assert_eq!(a.concat(&empty).unwrap(), a);
        assert_eq!(
            a.sw_polynomial() * f2().sw_polynomial(),
            a.concat(&f2()).unwrap().sw_polynomial()
        );
        let one_row = DefiningMatrix::from_codes(&[[1]]).unwrap();
        assert_eq!(
            a.concat(&one_row).unwrap_err(),
            Error::RowMismatch { left: 2, right: 1 }
        );
    }

    #[test]
    fn text_format() {
        let f = DefiningMatrix::parse("2 5\n12222\n13200\n").unwrap();
        assert_eq!(f, f2());
        assert_eq!(f.to_text(), "2 5\n12222\n13200\n");
        assert_eq!(DefiningMatrix::parse("2 5\n1 2 2 2 2\n1 3 2 0 0").unwrap(), f2());
        assert_eq!(DefiningMatrix::parse("1 1\n2").unwrap().rows(), 1);
    }

    #[test]
    fn text_format_errors() {
        let at = |text: &str| match DefiningMatrix::parse(text) {
            Err(Error::Parse { line, column, .. }) => (line, column),
            other => panic!("expected parse error for {text:?}, got {other:?}"),
        };
        assert_eq!(at("2 5\n12242\n13200\n"), (2, 4));
        assert_eq!(at("2  5\n12222\n13200\n"), (1, 3));
        assert_eq!(at("2 5\n1222\n13200\n"), (2, 4));
        assert_eq!(at("2 5\n12222\n"), (3, 1));
        assert_eq!(at("2 5\n12222\n13200\n00000\n"), (4, 1));
        assert_eq!(at("0 5\n"), (1, 1));
        assert_eq!(at("1 0\n\n"), (1, 3));
        assert_eq!(at("1 2\n1  2\n"), (2, 3));
        assert_eq!(at("1 2\n1 2 \n"), (2, 4));
        assert_eq!(at("1 2\r\n12\n"), (1, 3));
        assert_eq!(at(""), (1, 1));
    }
}
