//! Diagonal edge sets of tableaux in `shEqSYT(ρ_n/ρ_n, N)` and the slides between them.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::shapes::{SkewShape, StrictPartition};

/// `E_1, ..., E_n`: the labels on each diagonal edge.
pub type ESets = Vec<BTreeSet<u32>>;

pub fn e_sets(g: &Grid, n: usize) -> ESets {
    (0..n)
        .map(|i| (1..64u32).filter(|&l| g.edge[i][i] >> l & 1 == 1).collect())
        .collect()
}

/// The grid of `ρ_n/ρ_n` carrying the given edge sets.
pub fn to_grid(e: &ESets) -> Result<Grid> {
    let rho = StrictPartition::staircase(e.len() as u32);
    let mut g = Grid::from_shape(&SkewShape::shifted(&rho, &rho)?)?;
    for (i, set) in e.iter().enumerate() {
        for &l in set {
            g.edge[i][i] |= 1u64 << l;
        }
    }
    Ok(g)
}

/// Entry of the superstandard `S_{ρ_n}` in row `r`, column `c` (1-indexed, shifted).
fn s_rho(n: u32, r: u32, c: u32) -> u32 {
    (1..r).map(|q| n - q + 1).sum::<u32>() + c - r + 1
}

fn row_of_s_rho(n: u32, label: u32) -> u32 {
    (1..=n).find(|&r| (r..=n).any(|c| s_rho(n, r, c) == label)).unwrap_or(0)
}

/// `U_n`: the `i`-th diagonal edge holds column `i` of `S_{ρ_n}`.
pub fn u_n(n: u32) -> ESets {
    (1..=n).map(|i| (1..=i).map(|r| s_rho(n, r, i)).collect()).collect()
}

/// `Sl_I`: moves `I` from the `i`-th diagonal edge to the next one.
pub fn slide_set(e: &ESets, i: usize, set: &BTreeSet<u32>) -> Result<ESets> {
    if i == 0 || i >= e.len() {
        return Err(Error::Unsupported(format!("no slide from diagonal edge {i}")));
    }
    if !set.is_subset(&e[i - 1]) {
        return Err(Error::Inconsistent(format!("{set:?} is not contained in E_{i}")));
    }
    let mut out = e.clone();
    out[i - 1] = &e[i - 1] - set;
    out[i].extend(set.iter().copied());
    Ok(out)
}

/// The labels `min(E_i ∩ row_k(S_{ρ_n}))` for `k <= i`.
pub fn slidable_candidates(e: &ESets, i: usize) -> BTreeSet<u32> {
    let n = e.len() as u32;
    (1..=i as u32)
        .filter_map(|k| e[i - 1].iter().copied().find(|&l| row_of_s_rho(n, l) == k))
        .collect()
}

pub fn n_slidable(e: &ESets, i: usize, set: &BTreeSet<u32>) -> bool {
    let n = e.len();
    if i == 0 || i >= n || !set.is_subset(&e[i - 1]) {
        return false;
    }
    let u = u_n(n as u32);
    set.is_subset(&slidable_candidates(e, i)) && (i + 1..=n).all(|k| e[k - 1] == u[k - 1])
}

/// Every `Sl_{I_{n-1}} ∘ ... ∘ Sl_{I_1}(U_n)` with each `I_i` slidable at its step.
pub fn slidable_closure(n: u32) -> BTreeSet<ESets> {
    let mut cur = BTreeSet::from([u_n(n)]);
    for i in 1..n as usize {
        let mut next = BTreeSet::new();
        for e in &cur {
            let cand: Vec<u32> = slidable_candidates(e, i).into_iter().collect();
            for mask in 0..1u32 << cand.len() {
                let set: BTreeSet<u32> =
                    cand.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &l)| l).collect();
                if n_slidable(e, i, &set) {
                    next.insert(slide_set(e, i, &set).expect("slidable sets are subsets"));
                }
            }
        }
        cur = next;
    }
    cur
}
