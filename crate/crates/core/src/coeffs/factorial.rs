//! The factorial Schur route to `C_{λ,μ}^ν`: expand `s_λ(X;Y) s_μ(X;Y)` in the factorial
//! Schur basis over `Z[Y]`, then rename the `y`s as `t`s.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::linalg::{expand_in_basis, Scalars};
use crate::poly::{Family, QPoly, Var, ZPoly};
use crate::shapes::{Partition, Rectangle};
use crate::tableaux::plus::factorial_schur;

/// The identification of the factorial variables with the torus weights.
pub const FACTORIAL_CALIBRATION: &str = "y_j -> -t_j";

/// Applies [`FACTORIAL_CALIBRATION`].
pub fn y_to_t(p: &QPoly) -> Result<ZPoly> {
    let mut map = BTreeMap::new();
    for v in p.variables() {
        match v.family {
            Family::Y => {
                map.insert(v, -QPoly::var(Var::t(v.index)));
            }
            Family::X => return Err(Error::Inconsistent(format!("{v} left in a coefficient"))),
            _ => {}
        }
    }
    p.substitute(&map)
        .to_integer()
        .ok_or_else(|| Error::Inconsistent(format!("non-integral coefficient {p}")))
}

/// Coefficients of `s_λ(X;Y) s_μ(X;Y)` in the basis `s_ν(X;Y)`, with `X = x_1..x_k`,
/// still in the `y` variables.
pub fn factorial_product(lambda: &Partition, mu: &Partition, k: u32) -> Result<BTreeMap<Partition, QPoly>> {
    let kk = k as usize;
    let target = factorial_schur(lambda, kk)? * factorial_schur(mu, kk)?;
    let top = lambda.size() + mu.size();
    let basis_shapes: Vec<Partition> = Partition::all_in(Rectangle::new(k, top))
        .into_iter()
        .filter(|p| p.size() <= top && p.contains(lambda) && p.contains(mu))
        .collect();
    let basis = basis_shapes
        .iter()
        .map(|p| factorial_schur(p, kk))
        .collect::<Result<Vec<_>>>()?;
    let coeffs = expand_in_basis(&target, &basis, &Scalars::PolynomialsIn(vec![Family::Y]))?;
    Ok(basis_shapes.into_iter().zip(coeffs).filter(|(_, c)| !c.is_zero()).collect())
}

/// `C_{λ,μ}^ν` for every `ν` at once by the factorial route.
pub fn eq_c_factorial_all(lambda: &Partition, mu: &Partition, k: u32) -> Result<BTreeMap<Partition, ZPoly>> {
    check_calibration()?;
    factorial_product(lambda, mu, k)?
        .into_iter()
        .map(|(nu, c)| Ok((nu, y_to_t(&c)?)))
        .collect()
}

/// The calibration must send the factorial coefficient of `s_(1)` in `s_(1)^2` (two
/// variables) to `t_2 - t_3`.
pub fn check_calibration() -> Result<()> {
    static OK: OnceLock<std::result::Result<(), String>> = OnceLock::new();
    OK.get_or_init(|| {
        let one: Partition = "1".parse().unwrap();
        let prod = factorial_product(&one, &one, 2).map_err(|e| e.to_string())?;
        let c = prod.get(&one).cloned().unwrap_or_default();
        let got = y_to_t(&c).map_err(|e| e.to_string())?;
        let want: ZPoly = "t_2-t_3".parse().unwrap();
        if got == want {
            Ok(())
        } else {
            Err(format!("calibration {FACTORIAL_CALIBRATION} sends {c} to {got}, expected {want}"))
        }
    })
    .clone()
    .map_err(Error::Inconsistent)
}
