//! Schur `P`- and `Q`-polynomials from primed tableaux, and the Pfaffian formula.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{expand_in_basis, pfaffian, Scalars};
use crate::poly::{Monomial, Var, ZPoly};
use crate::shapes::{SkewShape, StrictPartition};
use crate::tableaux::{for_each_shifted_ssyt, letter};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    /// No primes on the main diagonal.
    P,
    /// Primes allowed everywhere.
    Q,
}

fn tableau_sum(lambda: &StrictPartition, n: u32, flavor: Flavor) -> Result<ZPoly> {
    let shape = SkewShape::shifted(lambda, &StrictPartition::empty())?;
    let mut acc = ZPoly::zero();
    for_each_shifted_ssyt(&shape, None, n, flavor == Flavor::Q, &mut |g| {
        let mono = Monomial::from_pairs(
            g.skew_cells().into_iter().map(|(r, c)| (Var::x(letter(g.cell[r][c] as u32)), 1)),
        );
        acc.add_term(mono, 1.into());
        true
    })?;
    Ok(acc)
}

/// `P_λ(x_1..x_n)`.
pub fn schur_p(lambda: &StrictPartition, n: u32) -> Result<ZPoly> {
    tableau_sum(lambda, n, Flavor::P)
}

/// `Q_λ(x_1..x_n)`.
pub fn schur_q(lambda: &StrictPartition, n: u32) -> Result<ZPoly> {
    tableau_sum(lambda, n, Flavor::Q)
}

fn q_single(r: i64, n: u32) -> Result<ZPoly> {
    match r {
        r if r < 0 => Ok(ZPoly::zero()),
        0 => Ok(ZPoly::one()),
        r => schur_q(&StrictPartition::new(vec![r as u32])?, n),
    }
}

/// `Q_{(r,s)} = q_r q_s + 2 Σ_{i=1}^{s} (-1)^i q_{r+i} q_{s-i}`.
pub fn q_pair(r: u32, s: u32, n: u32) -> Result<ZPoly> {
    let (r, s) = (r as i64, s as i64);
    let mut acc = q_single(r, n)? * q_single(s, n)?;
    for i in 1..=s {
        let term = (q_single(r + i, n)? * q_single(s - i, n)?).scale(&BigInt::from(2));
        if i % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    Ok(acc)
}

/// Whether `Q_λ = Pf(Q_{(λ_i,λ_j)})` holds in `n` variables, padding odd lengths with a zero.
pub fn pfaffian_check(lambda: &StrictPartition, n: u32) -> Result<bool> {
    let mut parts = lambda.parts().to_vec();
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    let m = parts.len();
    let mut mat = vec![vec![ZPoly::zero(); m]; m];
    for i in 0..m {
        for j in i + 1..m {
            mat[i][j] = q_pair(parts[i], parts[j], n)?;
            mat[j][i] = -mat[i][j].clone();
        }
    }
    Ok(pfaffian(&mat) == schur_q(lambda, n)?)
}

/// `l_{λ,μ}^ν` for every `ν`, read off from `Q_λ Q_μ` expanded in the `Q_ν`.
pub fn l_by_q_expansion(
    lambda: &StrictPartition,
    mu: &StrictPartition,
) -> Result<BTreeMap<StrictPartition, BigInt>> {
    let size = lambda.size() + mu.size();
    let n = (lambda.len() + mu.len()).max(1) as u32;
    let target = schur_q(lambda, n)? * schur_q(mu, n)?;
    let shapes: Vec<StrictPartition> = StrictPartition::all_in_staircase(size)
        .into_iter()
        .filter(|p| p.size() == size && p.len() as u32 <= n)
        .collect();
    let basis = shapes.iter().map(|p| schur_q(p, n)).collect::<Result<Vec<_>>>()?;
    let coeffs = expand_in_basis(&target, &basis, &Scalars::Rationals)?;
    let mut out = BTreeMap::new();
    for (nu, c) in shapes.into_iter().zip(coeffs) {
        let c = c.constant_term();
        if !c.is_integer() {
            return Err(Error::Inconsistent(format!("coefficient {c} of Q_{nu} is not an integer")));
        }
        if !c.is_zero() {
            out.insert(nu, c.to_integer());
        }
    }
    Ok(out)
}
