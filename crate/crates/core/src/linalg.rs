//! Exact linear algebra over the rationals, Pfaffians, and basis expansion.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Coeff, Family, Monomial, Poly, QPoly, ZPoly};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    if !m[r][j].is_zero() {
                        let d = &f * &m[r][j];
                        m[i][j] -= d;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solves `a x = b`. Returns `None` when inconsistent; free variables are set to zero.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, x)| {
            let mut r = row.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&n) {
        return None;
    }
    let mut x = vec![Q::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][n].clone();
    }
    Some(x)
}

pub fn rank(a: &[Vec<Q>]) -> usize {
    let mut m = a.to_vec();
    rref(&mut m).len()
}

/// Pfaffian of a skew-symmetric matrix by expansion along the first row.
/// Only the strictly upper triangle is read.
pub fn pfaffian<T>(m: &[Vec<T>]) -> T
where
    T: Clone + Zero + One,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    let idx: Vec<usize> = (0..m.len()).collect();
    pf_rec(m, &idx)
}

fn pf_rec<T>(m: &[Vec<T>], idx: &[usize]) -> T
where
    T: Clone + Zero + One,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    if idx.is_empty() {
        return T::one();
    }
    if idx.len() % 2 == 1 {
        return T::zero();
    }
    let first = idx[0];
    let mut acc = T::zero();
    for k in 1..idx.len() {
        let e = &m[first][idx[k]];
        if e.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&i| i != idx[k]).collect();
        let term = e * &pf_rec(m, &rest);
        acc = if k % 2 == 1 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Which scalars a basis expansion may use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalars {
    /// Rational numbers.
    Rationals,
    /// Polynomials in the listed variable families.
    PolynomialsIn(Vec<Family>),
}

/// Coefficients of `target` in `basis`.
///
/// Over the rationals this is Gaussian elimination on the coefficient matrix. Over a polynomial
/// ring the expansion is done by leading-term division with respect to the remaining variables,
/// which requires every basis element to have a constant leading coefficient.
pub fn expand_in_basis<C: Coeff>(
    target: &Poly<C>,
    basis: &[Poly<C>],
    over: &Scalars,
) -> Result<Vec<QPoly>>
where
    C: Into<Q>,
{
    let t = to_q(target);
    let b: Vec<QPoly> = basis.iter().map(to_q).collect();
    match over {
        Scalars::Rationals => expand_rational(&t, &b)
            .map(|v| v.into_iter().map(QPoly::constant).collect()),
        Scalars::PolynomialsIn(fams) => expand_polynomial(&t, &b, fams),
    }
}

fn to_q<C: Coeff + Into<Q>>(p: &Poly<C>) -> QPoly {
    p.map_coeffs(|c| c.clone().into())
}

fn expand_rational(target: &QPoly, basis: &[QPoly]) -> Result<Vec<Q>> {
    let mut monos: BTreeSet<Monomial> = BTreeSet::new();
    for p in basis.iter().chain(std::iter::once(target)) {
        monos.extend(p.terms().map(|(m, _)| m.clone()));
    }
    let monos: Vec<Monomial> = monos.into_iter().collect();
    let a: Vec<Vec<Q>> = monos
        .iter()
        .map(|m| basis.iter().map(|p| p.coeff(m)).collect())
        .collect();
    if rank(&a) < basis.len() {
        return Err(Error::RankDeficient);
    }
    let b: Vec<Q> = monos.iter().map(|m| target.coeff(m)).collect();
    let x = solve(&a, &b).ok_or_else(|| {
        let mut r = target.clone();
        if let Some(y) = solve_least_effort(&a, &b) {
            for (p, c) in basis.iter().zip(y) {
                r -= p.scale(&c);
            }
        }
        Error::NotInSpan(r.to_string())
    })?;
    Ok(x)
}

// Best-effort coefficients for a residual report when the full system is inconsistent.
fn solve_least_effort(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Q>> = a.to_vec();
    let piv = rref(&mut m);
    if piv.len() < n {
        return None;
    }
    let rows: Vec<usize> = {
        let mut chosen = Vec::new();
        let mut acc: Vec<Vec<Q>> = Vec::new();
        for (i, row) in a.iter().enumerate() {
            acc.push(row.clone());
            if rank(&acc) > chosen.len() {
                chosen.push(i);
            } else {
                acc.pop();
            }
            if chosen.len() == n {
                break;
            }
        }
        chosen
    };
    let sa: Vec<Vec<Q>> = rows.iter().map(|&i| a[i].clone()).collect();
    let sb: Vec<Q> = rows.iter().map(|&i| b[i].clone()).collect();
    solve(&sa, &sb)
}

fn expand_polynomial(target: &QPoly, basis: &[QPoly], fams: &[Family]) -> Result<Vec<QPoly>> {
    let main = |v: crate::poly::Var| !fams.contains(&v.family);
    let mut leads: BTreeMap<Monomial, (usize, Q)> = BTreeMap::new();
    for (i, b) in basis.iter().enumerate() {
        let split = b.split_by(main);
        let (m, c) = split
            .iter()
            .max_by(|a, b| a.0.glex_cmp(b.0))
            .ok_or(Error::RankDeficient)?;
        if c.len() != 1 || c.constant_term().is_zero() {
            return Err(Error::RankDeficient);
        }
        if leads.insert(m.clone(), (i, c.constant_term())).is_some() {
            return Err(Error::RankDeficient);
        }
    }
    let mut out = vec![QPoly::zero(); basis.len()];
    let mut r = target.clone();
    while !r.is_zero() {
        let split = r.split_by(main);
        let (m, c) = split.iter().max_by(|a, b| a.0.glex_cmp(b.0)).expect("nonzero");
        let Some((i, lc)) = leads.get(m) else {
            return Err(Error::NotInSpan(r.to_string()));
        };
        let f = c.scale(&lc.recip());
        r -= &f * &basis[*i];
        out[*i] += f;
    }
    Ok(out)
}

/// Determinant by cofactor expansion; intended for small matrices.
pub fn determinant(m: &[Vec<ZPoly>]) -> ZPoly {
    let n = m.len();
    if n == 0 {
        return ZPoly::one();
    }
    let mut acc = ZPoly::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<ZPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let t = &m[0][j] * &determinant(&minor);
        if j % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    acc
}

/// Decides whether `A x = b` has a solution with `x >= 0` (phase one of the simplex method
/// with Bland's rule, exact arithmetic).
pub fn nonnegative_feasible(a: &[Vec<Q>], b: &[Q]) -> bool {
    let m = a.len();
    if m == 0 {
        return true;
    }
    let n = a[0].len();
    // Tableau columns: n originals, m artificials, rhs.
    let mut t: Vec<Vec<Q>> = Vec::with_capacity(m + 1);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row = Vec::with_capacity(n + m + 1);
        for j in 0..n {
            row.push(if flip { -a[i][j].clone() } else { a[i][j].clone() });
        }
        for k in 0..m {
            row.push(if k == i { Q::one() } else { Q::zero() });
        }
        row.push(b[i].abs());
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    // Objective: minimise the sum of artificials, stored as reduced costs.
    let mut cost = vec![Q::zero(); n + m + 1];
    for row in &t {
        for j in 0..n {
            cost[j] -= &row[j];
        }
        cost[n + m] -= &row[n + m];
    }
    loop {
        let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Q)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][n + m] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((r, _)) = leave else {
            break;
        };
        let inv = t[r][enter].recip();
        for x in t[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m {
            if i != r && !t[i][enter].is_zero() {
                let f = t[i][enter].clone();
                for j in 0..=n + m {
                    if !t[r][j].is_zero() {
                        let d = &f * &t[r][j];
                        t[i][j] -= d;
                    }
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for j in 0..=n + m {
                if !t[r][j].is_zero() {
                    let d = &f * &t[r][j];
                    cost[j] -= d;
                }
            }
        }
        basis[r] = enter;
    }
    cost[n + m].is_zero()
}
