//! Structure constants: `c`, `C`, `o`, `l`, `d`, `D` and the `⋆` product, each with
//! independent computations where more than one rule is available.

mod checks;
mod factorial;
mod polytope;
mod schur_pq;
mod table;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::jdt::{eballot_weight, erect_weighted, rectify, sh_eq_rect, Policy};
use crate::poly::{Monomial, QPoly, Var, ZPoly};
use crate::shapes::{Partition, Rectangle, SkewShape, StrictPartition};
use crate::tableaux::{
    for_each_eq_ssyt, for_each_lr_filling, for_each_shifted_ssyt,
    for_each_standard_filling, is_shifted_ballot, shifted_reading_word, Tableau, TableauKind,
};

pub use checks::{
    associativity_check, brec_check, commutativity_scan, crec_check, d_pieri_scan,
    going_down_up_scan, growth_reflection_scan, l_tilde, o_l_fixture_checks, pieri_check, slidable_scan, star_associativity_scan, ol_table,
    Report, OlRow, OL_CORRECTED_O_222,
};
pub use factorial::{
    check_calibration, eq_c_factorial_all, factorial_product, y_to_t, FACTORIAL_CALIBRATION,
};
pub use polytope::{lr_polytope_contains, lr_polytope_points, LrMatrix};
pub use schur_pq::{l_by_q_expansion, pfaffian_check, q_pair, schur_p, schur_q, Flavor};
pub use table::{
    d_table, grassmannian_table, shifted_o_table, star_table, CoeffRow, CoeffTable, Context, StarRow,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LrMethod {
    Jdt,
    Ballot,
    Polytope,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EqMethod {
    Ejdt,
    Eballot,
    Factorial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ShiftedMethod {
    Jdt,
    Ballot,
}

fn fits(p: &Partition, rect: Rectangle) -> Result<()> {
    if p.fits_in(rect) {
        Ok(())
    } else {
        Err(Error::OutOfBounds { shape: p.to_string(), bound: rect.to_string() })
    }
}

fn fits_staircase(p: &StrictPartition, n: u32) -> Result<()> {
    if p.in_staircase(n) {
        Ok(())
    } else {
        Err(Error::OutOfBounds { shape: p.to_string(), bound: format!("rho_{n}") })
    }
}

fn is_superstandard(g: &Grid, mu: &[u32]) -> bool {
    g.superstandard_shape().is_some_and(|s| s == mu)
}

/// Littlewood-Richardson coefficient `c_{λ,μ}^ν`.
pub fn lr(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    rect: Rectangle,
    method: LrMethod,
) -> Result<u64> {
    for p in [lambda, mu, nu] {
        fits(p, rect)?;
    }
    if !nu.contains(lambda) || lambda.size() + mu.size() != nu.size() {
        return Ok(0);
    }
    let shape = SkewShape::ordinary(nu, lambda)?;
    let mut n = 0u64;
    match method {
        LrMethod::Jdt => {
            let mut err = None;
            for_each_standard_filling(&shape, shape.size(), false, &mut |g| {
                match rectify(g, &Policy::Eastmost) {
                    Ok(r) => n += is_superstandard(&r, mu.parts()) as u64,
                    Err(e) => err = Some(e),
                }
                err.is_none()
            })?;
            if let Some(e) = err {
                return Err(e);
            }
        }
        LrMethod::Ballot => for_each_lr_filling(&shape, mu.parts(), &mut |_| {
            n += 1;
            true
        })?,
        LrMethod::Polytope => n = lr_polytope_points(lambda, mu, nu).len() as u64,
    }
    Ok(n)
}

/// Equivariant structure constant `C_{λ,μ}^ν` for `Gr_k(C^n)`, `k = rect.k`.
pub fn eq_c(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    rect: Rectangle,
    method: EqMethod,
) -> Result<ZPoly> {
    for p in [lambda, mu, nu] {
        fits(p, rect)?;
    }
    if !nu.contains(lambda) || lambda.size() + mu.size() < nu.size() {
        return Ok(ZPoly::zero());
    }
    let k = rect.k;
    let shape = SkewShape::ordinary(nu, lambda)?;
    match method {
        EqMethod::Ejdt => {
            let mut acc = ZPoly::zero();
            let mut err = None;
            for_each_standard_filling(&shape, mu.size(), true, &mut |g| {
                match erect_weighted(g, k) {
                    Ok((r, w)) if is_superstandard(&r, mu.parts()) => acc += w,
                    Ok(_) => {}
                    Err(e) => err = Some(e),
                }
                err.is_none()
            })?;
            err.map_or(Ok(acc), Err)
        }
        EqMethod::Eballot => {
            let mut acc = ZPoly::zero();
            let mut err = None;
            for_each_eq_ssyt(&shape, mu.parts(), &mut |g| {
                match eballot_weight(&Tableau::from_grid(TableauKind::EqSsyt, g), k) {
                    Ok(w) => acc += w,
                    Err(e) => err = Some(e),
                }
                err.is_none()
            })?;
            err.map_or(Ok(acc), Err)
        }
        EqMethod::Factorial => {
            Ok(eq_c_factorial_all(lambda, mu, k)?.remove(nu).unwrap_or_default())
        }
    }
}

/// Shifted Littlewood-Richardson coefficient `o_{λ,μ}^ν` (structure constants of the
/// Schur `P`-functions).
pub fn shifted_o(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    nu: &StrictPartition,
    n: u32,
    method: ShiftedMethod,
) -> Result<u64> {
    for p in [lambda, mu, nu] {
        fits_staircase(p, n)?;
    }
    if !nu.contains(lambda) || lambda.size() + mu.size() != nu.size() {
        return Ok(0);
    }
    let shape = SkewShape::shifted(nu, lambda)?;
    let mut count = 0u64;
    match method {
        ShiftedMethod::Jdt => {
            let mut err = None;
            for_each_standard_filling(&shape, shape.size(), false, &mut |g| {
                match rectify(g, &Policy::Southmost) {
                    Ok(r) => count += is_superstandard(&r, mu.parts()) as u64,
                    Err(e) => err = Some(e),
                }
                err.is_none()
            })?;
            if let Some(e) = err {
                return Err(e);
            }
        }
        ShiftedMethod::Ballot => {
            for_each_shifted_ssyt(&shape, Some(mu.parts()), 0, false, &mut |g| {
                let t = Tableau::from_grid(TableauKind::ShiftedSsyt, g);
                count += is_shifted_ballot(&shifted_reading_word(&t)) as u64;
                true
            })?
        }
    }
    Ok(count)
}

/// `l_{λ,μ}^ν = 2^{ℓ(λ)+ℓ(μ)-ℓ(ν)} o_{λ,μ}^ν`, the structure constants of the Schur
/// `Q`-functions.
pub fn l_from_o(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    nu: &StrictPartition,
    o: u64,
) -> Result<BigInt> {
    let e = lambda.len() as i64 + mu.len() as i64 - nu.len() as i64;
    let v = pow2(e) * BigRational::from_integer(o.into());
    if !v.is_integer() {
        return Err(Error::Inconsistent(format!("l_{{{lambda},{mu}}}^{{{nu}}} = {v} is not an integer")));
    }
    Ok(v.to_integer())
}

pub(crate) fn pow2(e: i64) -> BigRational {
    let p = BigRational::from_integer(BigInt::one() << e.unsigned_abs());
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

/// `d_{λ,μ}^ν`: equivariant shifted standard tableaux of shape `ν/λ` with `|μ|` labels whose
/// row rectification is `S_μ`.
pub fn d_coeff(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    nu: &StrictPartition,
    n: u32,
) -> Result<u64> {
    for p in [lambda, mu, nu] {
        fits_staircase(p, n)?;
    }
    if !nu.contains(lambda) || lambda.size() + mu.size() < nu.size() {
        return Ok(0);
    }
    let shape = SkewShape::shifted(nu, lambda)?;
    let mut count = 0u64;
    let mut err = None;
    for_each_standard_filling(&shape, mu.size(), true, &mut |g| {
        match sh_eq_rect(g) {
            Ok(r) => count += is_superstandard(&r, mu.parts()) as u64,
            Err(e) => err = Some(e),
        }
        err.is_none()
    })?;
    err.map_or(Ok(count), Err)
}

/// `Δ(ν;λ,μ) = |λ|+|μ|-|ν|` and `L(ν;λ,μ) = ℓ(λ)+ℓ(μ)-ℓ(ν)`.
pub fn delta_and_l(lambda: &StrictPartition, mu: &StrictPartition, nu: &StrictPartition) -> (i64, i64) {
    let delta = lambda.size() as i64 + mu.size() as i64 - nu.size() as i64;
    let l = lambda.len() as i64 + mu.len() as i64 - nu.len() as i64;
    (delta, l)
}

/// `D_{λ,μ}^ν = 2^{L-Δ} z^Δ d_{λ,μ}^ν` as a rational multiple of a power of `z`.
pub fn big_d(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    nu: &StrictPartition,
    n: u32,
) -> Result<QPoly> {
    let d = d_coeff(lambda, mu, nu, n)?;
    Ok(assemble_d(lambda, mu, nu, d))
}

pub(crate) fn assemble_d(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    nu: &StrictPartition,
    d: u64,
) -> QPoly {
    if d == 0 {
        return QPoly::zero();
    }
    let (delta, l) = delta_and_l(lambda, mu, nu);
    let c = pow2(l - delta) * BigRational::from_integer(d.into());
    QPoly::term(Monomial::from_pairs([(Var::z(), delta as u32)]), c)
}

/// `[λ] ⋆ [μ] = Σ_ν D_{λ,μ}^ν [ν]` over `ν ⊆ ρ_n`.
pub fn star(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    n: u32,
) -> Result<BTreeMap<StrictPartition, QPoly>> {
    let mut out = BTreeMap::new();
    for nu in StrictPartition::all_in_staircase(n) {
        let d = big_d(lambda, mu, &nu, n)?;
        if !d.is_zero() {
            out.insert(nu, d);
        }
    }
    Ok(out)
}

/// Renders a `⋆` product as in `z[1] + 2[2]`.
pub fn format_star(sum: &BTreeMap<StrictPartition, QPoly>) -> String {
    if sum.is_empty() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (nu, d) in sum {
        let bracket = format!(
            "[{}]",
            nu.parts().iter().map(u32::to_string).collect::<Vec<_>>().join(",")
        );
        let coeff = if d.len() == 1 {
            let (m, c) = d.terms().next().unwrap();
            let e = m.exponent(Var::z());
            let z = match e {
                0 => String::new(),
                1 => "z".into(),
                _ => format!("z^{e}"),
            };
            let c = if c.is_one() && !z.is_empty() {
                String::new()
            } else if c.is_integer() {
                c.to_string()
            } else {
                format!("({c})")
            };
            if c == "1" && z.is_empty() {
                String::new()
            } else {
                format!("{c}{z}")
            }
        } else {
            format!("({d})")
        };
        parts.push(format!("{coeff}{bracket}"));
    }
    parts.join(" + ")
}

#[cfg(test)]
mod tests;
