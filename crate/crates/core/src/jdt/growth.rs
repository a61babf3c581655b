//! E-partitions and growth diagrams for shifted edge-labeled rectification.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::shapes::{SkewShape, StrictPartition};
use crate::tableaux::for_each_standard_filling;

use super::{is_inner_corner, slide, Policy};

/// A strict partition with a count of edge labels under each diagonal box.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EPartition {
    pub parts: Vec<u32>,
    pub edges: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverPos {
    /// A new box in this row (1-indexed).
    Box(usize),
    /// A new label on the diagonal edge of this row.
    Edge(usize),
}

impl EPartition {
    pub fn plain(parts: &[u32]) -> EPartition {
        EPartition { parts: parts.to_vec(), edges: vec![0; parts.len()] }
    }

    pub fn new(parts: Vec<u32>, edges: Vec<u32>) -> Result<EPartition> {
        if parts.len() != edges.len() {
            return Err(Error::InvalidPartition(format!("{parts:?} with edge counts {edges:?}")));
        }
        StrictPartition::new(parts.clone())?;
        Ok(EPartition { parts, edges })
    }

    fn padded(&self, n: usize) -> (Vec<u32>, Vec<u32>) {
        let mut p = self.parts.clone();
        let mut e = self.edges.clone();
        p.resize(n, 0);
        e.resize(n, 0);
        (p, e)
    }

    fn trimmed(mut self) -> EPartition {
        while self.parts.last() == Some(&0) && self.edges.last() == Some(&0) {
            self.parts.pop();
            self.edges.pop();
        }
        self
    }

    /// `λ ∨ μ`: rowwise maximum of parts, sum of edge counts.
    pub fn join(&self, other: &EPartition) -> EPartition {
        let n = self.parts.len().max(other.parts.len());
        let (p, e) = self.padded(n);
        let (q, f) = other.padded(n);
        EPartition {
            parts: p.iter().zip(&q).map(|(a, b)| *a.max(b)).collect(),
            edges: e.iter().zip(&f).map(|(a, b)| a + b).collect(),
        }
        .trimmed()
    }

    /// The e-partition of a shifted grid: its outer shape and diagonal edge counts.
    pub fn of_grid(g: &Grid) -> EPartition {
        let rows = g.rows();
        EPartition {
            parts: g.outer[..rows].iter().map(|&x| x as u32).collect(),
            edges: (0..rows).map(|r| g.edge[r][r].count_ones()).collect(),
        }
    }

    /// The chain `θ = e_0 ⊂ e_1 ⊂ ... ⊂ e_N` encoding a shifted edge-labeled tableau.
    pub fn chain(g: &Grid, n: u8) -> Result<Vec<EPartition>> {
        let rows = g.rows();
        let mut cur = EPartition::plain(&g.inner[..rows].iter().map(|&x| x as u32).collect::<Vec<_>>());
        let mut out = vec![cur.clone().trimmed()];
        for l in 1..=n {
            let (r, _, is_edge) =
                g.find(l).ok_or_else(|| Error::InvalidTableau(format!("label {l} is missing")))?;
            if cur.parts.len() <= r {
                cur.parts.resize(r + 1, 0);
                cur.edges.resize(r + 1, 0);
            }
            if is_edge {
                cur.edges[r] += 1;
            } else {
                cur.parts[r] += 1;
            }
            out.push(cur.clone().trimmed());
        }
        Ok(out)
    }
}

impl fmt::Display for EPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> =
            self.parts.iter().zip(&self.edges).map(|(p, e)| format!("{p}^{e}")).collect();
        write!(f, "({})", items.join(","))
    }
}

/// Whether `hi` covers `lo`, and where the extra box or edge label sits.
pub fn cover(lo: &EPartition, hi: &EPartition) -> Option<CoverPos> {
    let n = lo.parts.len().max(hi.parts.len());
    let (p, e) = lo.padded(n);
    let (q, f) = hi.padded(n);
    let dp: Vec<usize> = (0..n).filter(|&k| p[k] != q[k]).collect();
    let de: Vec<usize> = (0..n).filter(|&k| e[k] != f[k]).collect();
    match (dp.as_slice(), de.as_slice()) {
        ([m], []) if q[*m] == p[*m] + 1 => Some(CoverPos::Box(m + 1)),
        ([], [m]) if f[*m] == e[*m] + 1 && q[*m] > 0 => Some(CoverPos::Edge(m + 1)),
        _ => None,
    }
}

fn grid_of(outer: &[u32], inner: &[u32]) -> Result<Grid> {
    let shape = SkewShape { outer: outer.to_vec(), inner: inner.to_vec(), shifted: true };
    let mut s = shape;
    while s.inner.last() == Some(&0) {
        s.inner.pop();
    }
    Grid::from_shape(&s)
}

/// The local rule: with `gamma ⊂ alpha ⊂ beta` (each a cover), returns
/// `gamma ∨ epart(shEjdt_{alpha/gamma}(T))` where `T` puts `1` at `beta/alpha`.
pub fn local_rule(gamma: &EPartition, alpha: &EPartition, beta: &EPartition) -> Result<EPartition> {
    let bad = || Error::Inconsistent(format!("{gamma} < {alpha} < {beta} is not a chain of covers"));
    let top = cover(alpha, beta).ok_or_else(bad)?;
    let low = cover(gamma, alpha).ok_or_else(bad)?;
    let mut g = grid_of(&beta.parts, &alpha.parts)?;
    match top {
        CoverPos::Box(m) => {
            let r = m - 1;
            g.cell[r][r + alpha.parts.get(r).copied().unwrap_or(0) as usize] = 1;
        }
        CoverPos::Edge(m) => g.edge[m - 1][m - 1] |= 1 << 1,
    }
    if let CoverPos::Box(m) = low {
        let r = m - 1;
        let corner = (r, r + gamma.parts.get(r).copied().unwrap_or(0) as usize);
        if !is_inner_corner(&g, corner) {
            return Err(bad());
        }
        slide(&mut g, corner, &mut |_| {})?;
    }
    Ok(gamma.join(&EPartition::of_grid(&g)))
}

/// A table of e-partitions, top row first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthDiagram {
    pub rows: Vec<Vec<EPartition>>,
}

impl GrowthDiagram {
    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Checks (G1) and both halves of (G2) on every square.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Inconsistent(m));
        let (h, w) = (self.height(), self.width());
        if self.rows.iter().any(|r| r.len() != w) {
            return bad("ragged growth diagram".into());
        }
        for i in 0..h {
            for j in 0..w {
                let x = &self.rows[i][j];
                if j > 0 && cover(&self.rows[i][j - 1], x).is_none() {
                    return bad(format!("{x} does not cover its left neighbour"));
                }
                if i + 1 < h && cover(&self.rows[i + 1][j], x).is_none() {
                    return bad(format!("{x} does not cover the entry below"));
                }
            }
        }
        for i in 0..h.saturating_sub(1) {
            for j in 0..w.saturating_sub(1) {
                let (alpha, beta) = (&self.rows[i][j], &self.rows[i][j + 1]);
                let (gamma, delta) = (&self.rows[i + 1][j], &self.rows[i + 1][j + 1]);
                if &local_rule(gamma, alpha, beta)? != delta || &local_rule(gamma, delta, beta)? != alpha {
                    return bad(format!("local rule fails at row {}, column {}", i + 1, j + 1));
                }
            }
        }
        Ok(())
    }

    /// Reflection about the antidiagonal, fixing the bottom-left and top-right corners.
    pub fn reflect(&self) -> GrowthDiagram {
        let (h, w) = (self.height(), self.width());
        let mut rows = vec![vec![EPartition::default(); h]; w];
        for i in 0..h {
            for j in 0..w {
                rows[w - 1 - j][h - 1 - i] = self.rows[i][j].clone();
            }
        }
        GrowthDiagram { rows }
    }

    pub fn to_text(&self) -> String {
        self.rows
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// The tableau rectification diagram of a shifted edge-labeled grid with labels `1..=n`:
/// its chain on top, then the chain after each southmost-first slide.
pub fn growth_diagram(g: &Grid, n: u8) -> Result<GrowthDiagram> {
    let mut rows = vec![EPartition::chain(g, n)?];
    let mut cur = *g;
    let mut step = 0;
    while let Some(c) = super::next_corner(&cur, &Policy::Southmost, step)? {
        slide(&mut cur, c, &mut |_| {})?;
        rows.push(EPartition::chain(&cur, n)?);
        step += 1;
    }
    Ok(GrowthDiagram { rows })
}

fn superstandard_chain(mu: &StrictPartition) -> Vec<EPartition> {
    let mut out = vec![EPartition::default()];
    let mut parts: Vec<u32> = Vec::new();
    for &p in mu.parts() {
        parts.push(0);
        for _ in 0..p {
            *parts.last_mut().unwrap() += 1;
            out.push(EPartition::plain(&parts));
        }
    }
    out
}

/// Counts growth diagrams whose left column is the superstandard chain of `lambda`, whose
/// bottom row is that of `mu` and whose top row ends at `nu`, filling each one downwards from
/// its top row with the local rule.
pub fn count_growth(lambda: &StrictPartition, mu: &StrictPartition, nu: &StrictPartition) -> Result<u64> {
    if !nu.contains(lambda) {
        return Ok(0);
    }
    let shape = SkewShape::shifted(nu, lambda)?;
    let mut left = superstandard_chain(lambda);
    left.reverse();
    let bottom = superstandard_chain(mu);
    let n = mu.size();
    let mut count = 0u64;
    let mut err = None;
    for_each_standard_filling(&shape, n, true, &mut |g| {
        let top = match EPartition::chain(g, n as u8) {
            Ok(t) => t,
            Err(e) => {
                err = Some(e);
                return false;
            }
        };
        let mut rows = vec![top];
        for a in left.iter().skip(1) {
            let prev = rows.last().unwrap();
            let mut row = vec![a.clone()];
            for j in 0..prev.len() - 1 {
                match local_rule(&row[j], &prev[j], &prev[j + 1]) {
                    Ok(d) => row.push(d),
                    Err(_) => return true,
                }
            }
            rows.push(row);
        }
        if rows.last() == Some(&bottom) && (GrowthDiagram { rows }).validate().is_ok() {
            count += 1;
        }
        true
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(count),
    }
}
