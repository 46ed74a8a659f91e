//! The matrices `A0, A1, A, B, C, E, F` of the minimal non-spin family.
//!
//! For rank `d >= 2`, `F_d` is a free and effective `d x n(d)` matrix whose
//! quotient is orientable and non-spin while all covers with smaller holonomy
//! have trivial Stiefel-Whitney classes.

use std::fmt;
use std::str::FromStr;

use crate::algebra::binomial;
use crate::dmatrix::{DSymbol, DefiningMatrix};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyStage {
    A0,
    A1,
    A,
    B,
    C,
    E,
    F,
}

impl FamilyStage {
    pub const ALL: [FamilyStage; 7] = [
        FamilyStage::A0,
        FamilyStage::A1,
        FamilyStage::A,
        FamilyStage::B,
        FamilyStage::C,
        FamilyStage::E,
        FamilyStage::F,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyStage::A0 => "A0",
            FamilyStage::A1 => "A1",
            FamilyStage::A => "A",
            FamilyStage::B => "B",
            FamilyStage::C => "C",
            FamilyStage::E => "E",
            FamilyStage::F => "F",
        }
    }
}

impl fmt::Display for FamilyStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyStage {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyStage::ALL
            .into_iter()
            .find(|stage| stage.name() == s)
            .ok_or_else(|| Error::Argument(format!("unknown stage {s:?} (expected A0, A1, A, B, C, E or F)")))
    }
}

fn check_rank(d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::Argument(format!("rank must be at least 2, got {d}")));
    }
    Ok(())
}

/// Torus dimension of `F_d`.
pub fn n_of_d(d: usize) -> Result<usize> {
    check_rank(d)?;
    let extra = match d % 4 {
        0 | 2 => 2,
        1 => 1,
        _ => 3,
    };
    Ok(binomial(d + 1, 2) + extra)
}

fn column(d: usize, entries: &[(usize, DSymbol)]) -> DefiningMatrix {
    let mut m = DefiningMatrix::filled(d, 1, DSymbol::ZERO).expect("rank within limits");
    for &(i, s) in entries {
        m.set(i, 0, s);
    }
    m
}

fn concat_all(parts: &[&DefiningMatrix]) -> DefiningMatrix {
    let (first, rest) = parts.split_first().expect("at least one block");
    rest.iter().fold((*first).clone(), |acc, m| {
        acc.concat(m).expect("blocks share the row count")
    })
}

/// `[I_{d-1}; (1, ..., 1)]`.
fn a0(d: usize) -> DefiningMatrix {
    let mut m = DefiningMatrix::filled(d, d - 1, DSymbol::ZERO).expect("rank within limits");
    for j in 0..d - 1 {
        m.set(j, j, DSymbol::ONE);
        m.set(d - 1, j, DSymbol::ONE);
    }
    m
}

/// Columns `2 e_i + 3 e_j` for `i < j`, lexicographic in `(i, j)`.
fn a1(d: usize) -> DefiningMatrix {
    let mut m =
        DefiningMatrix::filled(d, d * (d - 1) / 2, DSymbol::ZERO).expect("rank within limits");
    let mut c = 0;
    for i in 0..d {
        for j in i + 1..d {
            m.set(i, c, DSymbol::TWO);
            m.set(j, c, DSymbol::THREE);
            c += 1;
        }
    }
    m
}

pub fn build_stage(stage: FamilyStage, d: usize) -> Result<DefiningMatrix> {
    check_rank(d)?;
    if d > crate::dmatrix::MAX_ROWS {
        return Err(Error::Argument(format!("rank {d} exceeds {}", crate::dmatrix::MAX_ROWS)));
    }
    let b = || column(d, &(0..d).map(|i| (i, DSymbol::TWO)).collect::<Vec<_>>());
    let c = || column(d, &[(0, DSymbol::TWO)]);
    let a = || concat_all(&[&a0(d), &a1(d)]);
    let e = || match d % 4 {
        0 | 2 => concat_all(&[&a(), &b(), &c(), &c()]),
        1 => concat_all(&[&a(), &b(), &b()]),
        _ => a(),
    };
    Ok(match stage {
        FamilyStage::A0 => a0(d),
        FamilyStage::A1 => a1(d),
        FamilyStage::A => a(),
        FamilyStage::B => b(),
        FamilyStage::C => c(),
        FamilyStage::E => e(),
        FamilyStage::F => {
            if d % 4 == 3 {
                concat_all(&[&e(), &c(), &c(), &c(), &c()])
            } else {
                e()
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_dimensions() {
        assert_eq!(n_of_d(2).unwrap(), 5);
        assert_eq!(n_of_d(3).unwrap(), 9);
        assert_eq!(n_of_d(5).unwrap(), 16);
        assert_eq!(n_of_d(7).unwrap(), 31);
        assert_eq!(n_of_d(8).unwrap(), 38);
        assert!(n_of_d(1).is_err());
    }

    #[test]
    fn rank_two_family() {
        let f = build_stage(FamilyStage::F, 2).unwrap();
        assert_eq!(f.to_text(), "2 5\n12222\n13200\n");
        assert_eq!(
            build_stage(FamilyStage::A, 2).unwrap(),
            DefiningMatrix::from_column_codes(2, &[[1, 1], [2, 3]]).unwrap()
        );
    }

    #[test]
    fn stage_shapes() {
        for d in 2..=9 {
            let shape = |s| {
                let m = build_stage(s, d).unwrap();
                (m.rows(), m.cols())
            };
            assert_eq!(shape(FamilyStage::A0), (d, d - 1));
            assert_eq!(shape(FamilyStage::A1), (d, d * (d - 1) / 2));
            assert_eq!(shape(FamilyStage::B), (d, 1));
            assert_eq!(shape(FamilyStage::C), (d, 1));
            assert_eq!(shape(FamilyStage::F).1, n_of_d(d).unwrap());
        }
        assert_eq!(build_stage(FamilyStage::B, 3).unwrap().to_text(), "3 1\n2\n2\n2\n");
        assert_eq!(build_stage(FamilyStage::F, 3).unwrap().cols(), 9);
        assert!(build_stage(FamilyStage::E, 1).is_err());
    }

    #[test]
    fn a1_columns_are_lexicographic() {
        let m = build_stage(FamilyStage::A1, 4).unwrap();
        let cols: Vec<Vec<u8>> = (0..m.cols())
            .map(|j| m.column(j).iter().map(|s| s.code()).collect())
            .collect();
        assert_eq!(
            cols,
            [
                [2, 3, 0, 0],
                [2, 0, 3, 0],
                [2, 0, 0, 3],
                [0, 2, 3, 0],
                [0, 2, 0, 3],
                [0, 0, 2, 3]
            ]
        );
    }

    #[test]
    fn stage_names_parse() {
        for s in FamilyStage::ALL {
            assert_eq!(s.name().parse::<FamilyStage>().unwrap(), s);
        }
        assert!("G".parse::<FamilyStage>().is_err());
    }
}
