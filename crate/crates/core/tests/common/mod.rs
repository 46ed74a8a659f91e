//! Independent oracles shared by the integration suites.

#![allow(dead_code)]

use std::collections::HashSet;

use diagflat::algebra::{monomial_count, monomial_unrank};
use diagflat::{DSymbol, DefiningMatrix, Gf2Poly, Monomial};
use rand::Rng;

/// Circle automorphism `code` applied to `t` in quarter units of R/Z.
fn act(code: u8, t: u8) -> u8 {
    match code {
        0 => t,
        1 => (t + 2) % 4,
        2 => (4 - t) % 4,
        3 => (6 - t) % 4,
        _ => unreachable!(),
    }
}

/// Freeness by brute force: no nonzero element of Z₂^d fixes a point of the
/// grid (¼Z/Z)^n. The element for a row subset is applied as the composite of
/// the row actions, not through the symbol group law.
pub fn free_by_fixed_points(a: &DefiningMatrix) -> bool {
    let d = a.rows();
    let n = a.cols();
    let points = 4usize.pow(n as u32);
    for subset in 1u64..(1 << d) {
        for code in 0..points {
            let point: Vec<u8> = (0..n).map(|j| (code / 4usize.pow(j as u32) % 4) as u8).collect();
            let mut image = point.clone();
            for i in (0..d).filter(|i| subset >> i & 1 == 1) {
                for (j, t) in image.iter_mut().enumerate() {
                    *t = act(a.get(i, j).code(), *t);
                }
            }
            if image == point {
                return false;
            }
        }
    }
    true
}

pub fn random_matrix<R: Rng>(rng: &mut R, d: usize, n: usize) -> DefiningMatrix {
    let rows: Vec<Vec<u8>> = (0..d)
        .map(|_| (0..n).map(|_| rng.gen_range(0..4u8)).collect())
        .collect();
    DefiningMatrix::from_codes(&rows).unwrap()
}

/// Every `d x n` matrix, by counting in base 4.
pub fn all_matrices(d: usize, n: usize) -> impl Iterator<Item = DefiningMatrix> {
    let cells = d * n;
    (0..4u64.pow(cells as u32)).map(move |mut code| {
        let mut m = DefiningMatrix::filled(d, n, DSymbol::ZERO).unwrap();
        for c in 0..cells {
            m.set(c / n, c % n, DSymbol::from_code((code % 4) as u8).unwrap());
            code /= 4;
        }
        m
    })
}

/// All monomials of the given degree.
pub fn monomials(nvars: usize, degree: usize) -> Vec<Monomial> {
    (0..monomial_count(nvars, degree))
        .map(|r| monomial_unrank(nvars, degree, r))
        .collect()
}

/// The degree-`k` piece of the ideal generated by homogeneous `gens`, as the
/// explicit set of all F₂-combinations of products `m * g`.
pub fn span_by_closure(nvars: usize, gens: &[Gf2Poly], k: usize) -> HashSet<Gf2Poly> {
    let mut products = Vec::new();
    for g in gens {
        let Some(dg) = g.degree() else { continue };
        if dg > k {
            continue;
        }
        for m in monomials(nvars, k - dg) {
            products.push(g * &Gf2Poly::from_monomial(m));
        }
    }
    let mut span: HashSet<Gf2Poly> = HashSet::from([Gf2Poly::zero(nvars)]);
    for p in products {
        if span.contains(&p) {
            continue;
        }
        let shifted: Vec<Gf2Poly> = span.iter().map(|s| s + &p).collect();
        span.extend(shifted);
    }
    span
}

/// Every homogeneous polynomial of degree `k`.
pub fn all_homogeneous(nvars: usize, k: usize) -> Vec<Gf2Poly> {
    let monos = monomials(nvars, k);
    (0u64..(1 << monos.len()))
        .map(|mask| {
            Gf2Poly::from_monomials(
                nvars,
                monos
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, m)| m.clone()),
            )
        })
        .collect()
}

/// The ideal J = <x_i^2 + x_j^2, x_i x_j> by its explicit generators.
pub fn j_generators(d: usize) -> Vec<Gf2Poly> {
    let mut gens = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let mut sq = Gf2Poly::zero(d);
            let mut a = Monomial::var(d, i);
            a.mul_var(i);
            let mut b = Monomial::var(d, j);
            b.mul_var(j);
            sq.toggle(a);
            sq.toggle(b);
            gens.push(sq);
            let mut mixed = Monomial::var(d, i);
            mixed.mul_var(j);
            gens.push(Gf2Poly::from_monomial(mixed));
        }
    }
    gens
}

pub fn x1_squared_plus_one(d: usize) -> Gf2Poly {
    let mut p = Gf2Poly::one(d);
    let mut m = Monomial::var(d, 0);
    m.mul_var(0);
    p.toggle(m);
    p
}

/// Random invertible `k x k` matrix over F₂ applied to a basis.
pub fn random_rebasis<R: Rng>(rng: &mut R, basis: &[u64]) -> Vec<u64> {
    let k = basis.len();
    loop {
        let rows: Vec<u64> = (0..k).map(|_| rng.gen_range(0..(1u64 << k))).collect();
        // rank check by elimination
        let mut work = rows.clone();
        let mut rank = 0;
        for bit in 0..k {
            if let Some(p) = (rank..k).find(|&r| work[r] >> bit & 1 == 1) {
                work.swap(rank, p);
                for r in 0..k {
                    if r != rank && work[r] >> bit & 1 == 1 {
                        work[r] ^= work[rank];
                    }
                }
                rank += 1;
            }
        }
        if rank < k {
            continue;
        }
        return rows
            .iter()
            .map(|&coeffs| {
                (0..k)
                    .filter(|i| coeffs >> i & 1 == 1)
                    .fold(0u64, |acc, i| acc ^ basis[i])
            })
            .collect();
    }
}
