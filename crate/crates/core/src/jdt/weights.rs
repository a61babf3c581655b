use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::grid::{Grid, MAX_COLS, MAX_ROWS};
use crate::poly::{Var, ZPoly};
use crate::shapes::{beta_weight, dist};
use crate::tableaux::Tableau;

use super::{next_corner, slide, Policy};

fn beta(k: u32, (r, c): (usize, usize)) -> Result<ZPoly> {
    beta_weight(k, (r as u32 + 1, c as u32 + 1))
}

/// `Erect(T)` together with `Ejdtwt(T)` for a tableau inside a rectangle with `k` rows.
///
/// Slides are grouped into column phases: a phase is the run of slides whose starting
/// corners lie in one column. An edge label is scored when the phase of its own column
/// ends; if it is still on an edge then, the weight is zero.
pub fn erect_weighted(g: &Grid, k: u32) -> Result<(Grid, ZPoly)> {
    let mut start: BTreeMap<u8, usize> = BTreeMap::new();
    for r in 0..MAX_ROWS {
        for c in 0..MAX_COLS {
            let e = g.edge[r][c];
            for l in (0..64u8).filter(|&l| e >> l & 1 == 1) {
                start.insert(l, c);
            }
        }
    }
    let mut pending: BTreeSet<usize> = start.values().copied().collect();
    let mut passes: BTreeMap<u8, Vec<(usize, usize)>> = BTreeMap::new();
    let mut weight = ZPoly::one();
    let mut cur = *g;
    let mut step = 0;
    loop {
        let corner = next_corner(&cur, &Policy::Eastmost, step)?;
        let col = corner.map(|x| x.1);
        let done: Vec<usize> = pending.iter().copied().filter(|&p| col.is_none_or(|c| p > c)).collect();
        for p in done {
            pending.remove(&p);
            for (&l, _) in start.iter().filter(|(_, &s)| s == p) {
                weight = weight * factor(&cur, k, l, passes.get(&l).map_or(&[][..], |v| v))?;
            }
        }
        let Some(corner) = corner else { break };
        let phase = corner.1;
        slide(&mut cur, corner, &mut |s| {
            if start.get(&s.label) == Some(&phase) {
                passes.entry(s.label).or_default().push(s.to);
            }
        })?;
        step += 1;
    }
    Ok((cur, weight))
}

fn factor(g: &Grid, k: u32, l: u8, passed: &[(usize, usize)]) -> Result<ZPoly> {
    match g.find(l) {
        Some((_, _, false)) if !passed.is_empty() => {}
        _ => return Ok(ZPoly::zero()),
    }
    let mut f = ZPoly::zero();
    for &x in passed {
        f += beta(k, x)?;
    }
    let (r, c) = *passed.last().unwrap();
    for cc in c + 1..MAX_COLS {
        if g.is_skew(r, cc) && g.cell[r][cc] != 0 {
            f += beta(k, (r, cc))?;
        }
    }
    Ok(f)
}

/// `Ejdtwt(T)` for an equivariant standard tableau in a rectangle with `k` rows.
pub fn ejdt_weight(t: &Tableau, k: u32) -> Result<ZPoly> {
    Ok(erect_weighted(&t.to_grid()?, k)?.1)
}

/// `Eballotwt(T)`: each edge label `l` under a box `x` in row `i` contributes
/// `t_dist(x) - t_{dist(x) + i - l + 1 + rho}`, `rho` counting the `l`s strictly right of `x`.
pub fn eballot_weight(t: &Tableau, k: u32) -> Result<ZPoly> {
    let mut w = ZPoly::one();
    for (&(i, j), set) in &t.edges {
        for &l in set {
            let rho = t.boxes.iter().filter(|(&(_, c), &v)| c > j && v == l).count()
                + t.edges.iter().filter(|(&(_, c), s)| c > j && s.contains(&l)).count();
            let p = dist(k, (i, j));
            let q = p + i as i64 - l as i64 + 1 + rho as i64;
            if p < 1 || q <= p {
                return Err(Error::Inconsistent(format!("edge label {l} under ({i},{j}) is too high")));
            }
            w = w * (ZPoly::var(Var::t(p as u32)) - ZPoly::var(Var::t(q as u32)));
        }
    }
    Ok(w)
}
