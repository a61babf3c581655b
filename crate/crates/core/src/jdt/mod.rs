//! Jeu de taquin on ordinary, shifted and edge-labeled tableaux.
//!
//! Slides work on [`Grid`]s. A slide starts with the bullet in an inner corner and applies
//! the unique applicable rule until the bullet rests:
//!
//! - an edge set `S` below the bullet: the east neighbour `a` moves west if `a < min S`
//!   (J3), otherwise `min S` moves up into the bullet and the slide ends (J4);
//! - no edge set: the south neighbour `b` moves up if `b < a` or `a` is absent (J1), the
//!   east neighbour moves west if `a < b` or `b` is absent (J2);
//! - nothing applies: the bullet's box leaves the shape.
//!
//! For shifted grids edge sets only live on diagonal boxes, so J3/J4 are the primed rules.

mod growth;
mod slidable;
mod weights;

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::shapes::Cell;
use crate::tableaux::{Tableau, TableauKind};

pub use growth::{
    count_growth, cover, growth_diagram, local_rule, CoverPos, EPartition, GrowthDiagram,
};
pub use slidable::{
    e_sets, n_slidable, slidable_candidates, slidable_closure, slide_set, to_grid, u_n, ESets,
};
pub use weights::{eballot_weight, ejdt_weight, erect_weighted};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    J1,
    J2,
    J3,
    J4,
}

/// One move: `label` enters the bullet's box `to` (0-based) by `rule`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    pub rule: Rule,
    pub to: (usize, usize),
    pub label: u8,
}

/// Where a slide left the bullet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rest {
    /// The box left the outer shape.
    Vacated((usize, usize)),
    /// An edge label filled the box (J4).
    Filled((usize, usize)),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Policy {
    /// Rightmost inner corner first.
    Eastmost,
    /// Lowest inner corner first.
    Southmost,
    /// Explicit 1-indexed corners.
    Sequence(Vec<Cell>),
}

pub fn is_inner_corner(g: &Grid, (r, c): (usize, usize)) -> bool {
    g.inner[r] > 0 && c == g.start(r) + g.inner[r] as usize - 1 && !g.in_inner(r + 1, c)
}

fn east(g: &Grid, r: usize, c: usize) -> Option<u8> {
    (g.is_skew(r, c + 1) && g.cell[r][c + 1] != 0).then(|| g.cell[r][c + 1])
}

fn south(g: &Grid, r: usize, c: usize) -> Option<u8> {
    (g.is_skew(r + 1, c) && g.cell[r + 1][c] != 0).then(|| g.cell[r + 1][c])
}

/// Slides into the inner corner `corner` (0-based), reporting each move.
pub fn slide(g: &mut Grid, corner: (usize, usize), obs: &mut impl FnMut(&Step)) -> Result<Rest> {
    if !is_inner_corner(g, corner) {
        return Err(Error::BadSlide(corner.0 + 1, corner.1 + 1));
    }
    let (mut r, mut c) = corner;
    g.inner[r] -= 1;
    g.cell[r][c] = 0;
    loop {
        let a = east(g, r, c);
        let s = g.edge[r][c];
        if s != 0 {
            let min = s.trailing_zeros() as u8;
            match a {
                Some(a) if a < min => {
                    g.cell[r][c] = a;
                    g.cell[r][c + 1] = 0;
                    obs(&Step { rule: Rule::J3, to: (r, c), label: a });
                    c += 1;
                }
                _ => {
                    g.cell[r][c] = min;
                    g.edge[r][c] &= !(1u64 << min);
                    obs(&Step { rule: Rule::J4, to: (r, c), label: min });
                    return Ok(Rest::Filled((r, c)));
                }
            }
            continue;
        }
        let b = south(g, r, c).filter(|&b| a.is_none_or(|a| b < a));
        if let Some(b) = b {
            g.cell[r][c] = b;
            g.cell[r + 1][c] = 0;
            obs(&Step { rule: Rule::J1, to: (r, c), label: b });
            r += 1;
        } else if let Some(a) = a {
            g.cell[r][c] = a;
            g.cell[r][c + 1] = 0;
            obs(&Step { rule: Rule::J2, to: (r, c), label: a });
            c += 1;
        } else {
            if c + 1 != g.start(r) + g.outer[r] as usize || g.is_skew(r + 1, c) {
                return Err(Error::Inconsistent(format!(
                    "bullet rests inside the shape at ({}, {})",
                    r + 1,
                    c + 1
                )));
            }
            g.outer[r] -= 1;
            return Ok(Rest::Vacated((r, c)));
        }
    }
}

/// The corner a policy picks next, if any remain.
pub fn next_corner(g: &Grid, policy: &Policy, step: usize) -> Result<Option<(usize, usize)>> {
    let corners = g.inner_corners();
    if corners.is_empty() {
        return Ok(None);
    }
    Ok(Some(match policy {
        Policy::Eastmost => *corners.iter().max_by_key(|x| x.1).unwrap(),
        Policy::Southmost => *corners.iter().max_by_key(|x| x.0).unwrap(),
        Policy::Sequence(seq) => {
            let &(r, c) = seq.get(step).ok_or_else(|| {
                Error::Inconsistent(format!("corner sequence ends after {step} slides"))
            })?;
            if r == 0 || c == 0 {
                return Err(Error::BadSlide(r as usize, c as usize));
            }
            (r as usize - 1, c as usize - 1)
        }
    }))
}

/// Rectifies with the given corner policy, reporting every slide start and move.
pub fn rectify_observed(
    g: &Grid,
    policy: &Policy,
    on_slide: &mut impl FnMut(&Grid, (usize, usize)),
    obs: &mut impl FnMut(&Step),
) -> Result<Grid> {
    let mut g = *g;
    let mut step = 0;
    while let Some(corner) = next_corner(&g, policy, step)? {
        on_slide(&g, corner);
        slide(&mut g, corner, obs)?;
        step += 1;
    }
    Ok(g)
}

pub fn rectify(g: &Grid, policy: &Policy) -> Result<Grid> {
    rectify_observed(g, policy, &mut |_, _| {}, &mut |_| {})
}

/// Classical rectification (any policy gives the same answer without edge labels).
pub fn rect(t: &Tableau) -> Result<Tableau> {
    let kind = if t.kind.shifted() { TableauKind::ShiftedSyt } else { TableauKind::Syt };
    let g = rectify(&t.to_grid()?, &Policy::Eastmost)?;
    Ok(Tableau::from_grid(kind, &g))
}

/// `Erect`: eastmost inner corner first.
pub fn erect(g: &Grid) -> Result<Grid> {
    rectify(g, &Policy::Eastmost)
}

/// `shEqRect`: southmost inner corner first.
pub fn sh_eq_rect(g: &Grid) -> Result<Grid> {
    rectify(g, &Policy::Southmost)
}

/// Grid text with `*` for the bullet (an empty box of the shape).
pub fn render(g: &Grid) -> String {
    let mut s = String::new();
    for r in 0..g.rows() {
        if r > 0 {
            s.push('/');
        }
        let st = g.start(r);
        for c in st..st + g.outer[r] as usize {
            if c > st {
                s.push(',');
            }
            if g.in_inner(r, c) {
                s.push('.');
            } else if g.cell[r][c] == 0 {
                s.push('*');
            } else {
                let _ = write!(s, "{}", g.cell[r][c]);
            }
        }
    }
    let mut first = true;
    for r in 0..crate::grid::MAX_ROWS {
        for c in 0..crate::grid::MAX_COLS {
            let e = g.edge[r][c];
            if e != 0 {
                s.push_str(if first { " | " } else { " " });
                first = false;
                let ls: Vec<String> =
                    (0..64).filter(|l| e >> l & 1 == 1).map(|l| l.to_string()).collect();
                let _ = write!(s, "e({},{}):{{{}}}", r + 1, c + 1, ls.join(","));
            }
        }
    }
    s
}

fn fnv1a(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// One line per move, `rule@{row,col}: hash`, where the hash is FNV-1a of [`render`] after
/// the move. Primed rule names are used for shifted grids.
pub fn trace(g: &Grid, policy: &Policy) -> Result<Vec<String>> {
    let mut lines = Vec::new();
    let mut cur = *g;
    let mut step = 0;
    while let Some(corner) = next_corner(&cur, policy, step)? {
        let mut moves = Vec::new();
        let before = cur;
        slide(&mut cur, corner, &mut |s| moves.push(*s))?;
        let mut replay = before;
        replay.inner[corner.0] -= 1;
        for m in &moves {
            apply_step(&mut replay, m);
            let name = match (m.rule, g.shifted) {
                (Rule::J3, true) => "J3'".to_string(),
                (Rule::J4, true) => "J4'".to_string(),
                (r, _) => format!("{r:?}"),
            };
            lines.push(format!("{name}@{{{},{}}}: {:016x}", m.to.0 + 1, m.to.1 + 1, fnv1a(&render(&replay))));
        }
        step += 1;
    }
    Ok(lines)
}

/// Replays a recorded step on a grid whose bullet sits at `step.to`.
pub fn apply_step(g: &mut Grid, step: &Step) {
    let (r, c) = step.to;
    match step.rule {
        Rule::J1 => g.cell[r + 1][c] = 0,
        Rule::J2 | Rule::J3 => g.cell[r][c + 1] = 0,
        Rule::J4 => g.edge[r][c] &= !(1u64 << step.label),
    }
    g.cell[r][c] = step.label;
}

#[cfg(test)]
mod tests;
