use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::par::Exec;
use crate::poly::QPoly;
use crate::shapes::{Partition, Rectangle, StrictPartition};

use super::{assemble_d, d_coeff, eq_c, eq_c_factorial_all, shifted_o, EqMethod, ShiftedMethod};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Context {
    Grassmannian(Rectangle),
    Shifted(u32),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoeffRow {
    pub lambda: Vec<u32>,
    pub mu: Vec<u32>,
    pub nu: Vec<u32>,
    pub value: QPoly,
}

/// Nonzero structure constants for one context; absent triples are zero.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoeffTable {
    pub context: Context,
    pub rows: Vec<CoeffRow>,
}

impl CoeffTable {
    pub fn lookup(&self) -> BTreeMap<(Vec<u32>, Vec<u32>, Vec<u32>), QPoly> {
        self.rows
            .iter()
            .map(|r| ((r.lambda.clone(), r.mu.clone(), r.nu.clone()), r.value.clone()))
            .collect()
    }

    pub fn get(&self, lambda: &[u32], mu: &[u32], nu: &[u32]) -> QPoly {
        self.rows
            .iter()
            .find(|r| r.lambda == lambda && r.mu == mu && r.nu == nu)
            .map(|r| r.value.clone())
            .unwrap_or_default()
    }
}

/// Every `C_{λ,μ}^ν` with `λ, μ, ν` in the rectangle, parallel over `(λ, μ)`.
pub fn grassmannian_table(rect: Rectangle, method: EqMethod, exec: Exec) -> Result<CoeffTable> {
    let shapes = Partition::all_in(rect);
    let pairs: Vec<(Partition, Partition)> = shapes
        .iter()
        .flat_map(|a| shapes.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    let chunks = exec.try_map(&pairs, |(l, m)| -> Result<Vec<CoeffRow>> {
        let mut rows = Vec::new();
        let row = |nu: &Partition, v: QPoly| CoeffRow {
            lambda: l.parts().to_vec(),
            mu: m.parts().to_vec(),
            nu: nu.parts().to_vec(),
            value: v,
        };
        if method == EqMethod::Factorial {
            for (nu, v) in eq_c_factorial_all(l, m, rect.k)? {
                if nu.fits_in(rect) {
                    rows.push(row(&nu, v.to_rational()));
                }
            }
        } else {
            for nu in &shapes {
                let v = eq_c(l, m, nu, rect, method)?;
                if !v.is_zero() {
                    rows.push(row(nu, v.to_rational()));
                }
            }
        }
        rows.sort_by(|a, b| a.nu.len().cmp(&b.nu.len()).then(a.nu.cmp(&b.nu)));
        Ok(rows)
    })?;
    Ok(CoeffTable { context: Context::Grassmannian(rect), rows: chunks.into_iter().flatten().collect() })
}

pub(crate) fn strict_triples(n: u32) -> Vec<(StrictPartition, StrictPartition, StrictPartition)> {
    let all = StrictPartition::all_in_staircase(n);
    let mut out = Vec::new();
    for a in &all {
        for b in &all {
            for c in &all {
                out.push((a.clone(), b.clone(), c.clone()));
            }
        }
    }
    out
}

/// Every nonzero `o_{λ,μ}^ν` inside `ρ_n`.
pub fn shifted_o_table(n: u32, method: ShiftedMethod, exec: Exec) -> Result<CoeffTable> {
    let triples = strict_triples(n);
    let vals = exec.try_map(&triples, |(l, m, v)| shifted_o(l, m, v, n, method))?;
    let rows = triples
        .into_iter()
        .zip(vals)
        .filter(|(_, o)| *o != 0)
        .map(|((l, m, v), o)| CoeffRow {
            lambda: l.parts().to_vec(),
            mu: m.parts().to_vec(),
            nu: v.parts().to_vec(),
            value: QPoly::constant(num_rational::BigRational::from_integer(o.into())),
        })
        .collect();
    Ok(CoeffTable { context: Context::Shifted(n), rows })
}

/// Every nonzero `d_{λ,μ}^ν` inside `ρ_n`, keyed by `(λ, μ, ν)`.
pub fn d_table(
    n: u32,
    exec: Exec,
) -> Result<BTreeMap<(StrictPartition, StrictPartition, StrictPartition), u64>> {
    let triples = strict_triples(n);
    let vals = exec.try_map(&triples, |(l, m, v)| d_coeff(l, m, v, n))?;
    Ok(triples.into_iter().zip(vals).filter(|(_, d)| *d != 0).collect())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StarRow {
    pub lambda: StrictPartition,
    pub mu: StrictPartition,
    pub product: BTreeMap<StrictPartition, QPoly>,
}

/// `[λ] ⋆ [μ]` for nonempty `λ <= μ` inside `ρ_n`, in the order of the shapes.
pub fn star_table(n: u32, exec: Exec) -> Result<Vec<StarRow>> {
    let d = d_table(n, exec)?;
    let mut shapes = StrictPartition::all_in_staircase(n);
    shapes.retain(|p| !p.is_empty());
    shapes.sort();
    let mut rows = Vec::new();
    for (i, l) in shapes.iter().enumerate() {
        for m in &shapes[i..] {
            let product = d
                .iter()
                .filter(|((a, b, _), _)| a == l && b == m)
                .map(|((a, b, v), &x)| (v.clone(), assemble_d(a, b, v, x)))
                .collect();
            rows.push(StarRow { lambda: l.clone(), mu: m.clone(), product });
        }
    }
    Ok(rows)
}
