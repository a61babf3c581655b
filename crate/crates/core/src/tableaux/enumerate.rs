//! Exhaustive generators. Each `for_each_*` walks fillings in a fixed order and hands the
//! visitor a [`Grid`]; returning `false` from the visitor stops the walk.

use crate::error::{Error, Result};
use crate::grid::{Grid, MAX_LABEL};
use crate::shapes::SkewShape;

use super::{is_primed, letter, Tableau, TableauKind};

/// What to put in the boxes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fill {
    /// Labels `1..=N` with `N` the number of boxes.
    Standard,
    /// Labels `1..=N`, the surplus going to edges.
    Labels(u32),
    /// Prescribed content.
    Content(Vec<u32>),
    /// Any letters up to the bound; for primed tableaux the flag allows primes on the diagonal.
    MaxLetter(u32, bool),
}

/// Collects every tableau of the given kind and shape.
pub fn enumerate(kind: TableauKind, shape: &SkewShape, fill: &Fill) -> Result<Vec<Tableau>> {
    if kind.shifted() != shape.shifted {
        return Err(Error::Unsupported(format!("{kind:?} needs a matching shape, got {shape}")));
    }
    let mut out = Vec::new();
    let mut push = |g: &Grid| {
        out.push(Tableau::from_grid(kind, g));
        true
    };
    match (kind, fill) {
        (TableauKind::Syt | TableauKind::ShiftedSyt, Fill::Standard) => {
            for_each_standard_filling(shape, shape.size(), false, &mut push)?
        }
        (TableauKind::EqSyt | TableauKind::ShEqSyt, Fill::Labels(n)) => {
            for_each_standard_filling(shape, *n, true, &mut push)?
        }
        (TableauKind::Ssyt, Fill::Content(mu)) => for_each_ssyt(shape, Some(mu), 0, &mut push)?,
        (TableauKind::Ssyt, Fill::MaxLetter(m, _)) => for_each_ssyt(shape, None, *m, &mut push)?,
        (TableauKind::EqSsyt, Fill::Content(mu)) => for_each_eq_ssyt(shape, mu, &mut push)?,
        (TableauKind::ShiftedSsyt, Fill::Content(mu)) => {
            for_each_shifted_ssyt(shape, Some(mu), 0, true, &mut push)?
        }
        (TableauKind::ShiftedSsyt, Fill::MaxLetter(m, diag)) => {
            for_each_shifted_ssyt(shape, None, *m, *diag, &mut push)?
        }
        _ => return Err(Error::Unsupported(format!("{kind:?} cannot be filled with {fill:?}"))),
    }
    Ok(out)
}

/// Standard fillings with labels `1..=n`. With `edges` set, labels beyond the boxes go on edge
/// slots: any slot for unshifted shapes, the diagonal slots for shifted ones.
pub fn for_each_standard_filling(
    shape: &SkewShape,
    n: u32,
    edges: bool,
    f: &mut impl FnMut(&Grid) -> bool,
) -> Result<()> {
    if n > MAX_LABEL {
        return Err(Error::Unsupported(format!("{n} labels exceed {MAX_LABEL}")));
    }
    let mut g = Grid::from_shape(shape)?;
    let cells = g.skew_cells();
    if (cells.len() as u32) > n || (!edges && cells.len() as u32 != n) {
        return Ok(());
    }
    let slots = if edges { g.edge_slots() } else { Vec::new() };
    std_rec(&mut g, &cells, &slots, 1, n as u8, cells.len(), f);
    Ok(())
}

fn filled_or_inner(g: &Grid, r: usize, c: usize) -> bool {
    g.in_inner(r, c) || (g.in_outer(r, c) && g.cell[r][c] != 0)
}

fn std_rec(
    g: &mut Grid,
    cells: &[(usize, usize)],
    slots: &[(usize, usize)],
    m: u8,
    n: u8,
    empty: usize,
    f: &mut impl FnMut(&Grid) -> bool,
) -> bool {
    if m > n {
        return if empty == 0 { f(g) } else { true };
    }
    if empty > (n - m + 1) as usize {
        return true;
    }
    for &(r, c) in cells {
        if g.cell[r][c] != 0 {
            continue;
        }
        let left_ok = c == g.start(r) || filled_or_inner(g, r, c - 1);
        let up_ok = r == 0 || !g.in_outer(r - 1, c) || filled_or_inner(g, r - 1, c);
        if left_ok && up_ok {
            g.cell[r][c] = m;
            let go = std_rec(g, cells, slots, m + 1, n, empty - 1, f);
            g.cell[r][c] = 0;
            if !go {
                return false;
            }
        }
    }
    for &(r, c) in slots {
        let above_ok = filled_or_inner(g, r, c);
        let below_open = !g.is_skew(r + 1, c) || g.cell[r + 1][c] == 0;
        if above_ok && below_open {
            g.edge[r][c] |= 1u64 << m;
            let go = std_rec(g, cells, slots, m + 1, n, empty, f);
            g.edge[r][c] &= !(1u64 << m);
            if !go {
                return false;
            }
        }
    }
    true
}

/// Semistandard fillings (rows weak, columns strict) with the given content, or with letters
/// up to `max` when no content is given.
pub fn for_each_ssyt(
    shape: &SkewShape,
    content: Option<&[u32]>,
    max: u32,
    f: &mut impl FnMut(&Grid) -> bool,
) -> Result<()> {
    let mut g = Grid::from_shape(shape)?;
    let cells = g.skew_cells();
    let top = content.map_or(max, |m| m.len() as u32);
    if top > MAX_LABEL {
        return Err(Error::Unsupported(format!("letter {top} exceeds {MAX_LABEL}")));
    }
    if let Some(mu) = content {
        if mu.iter().sum::<u32>() as usize != cells.len() {
            return Ok(());
        }
    }
    let mut count = vec![0u32; top as usize + 1];
    ssyt_rec(&mut g, &cells, 0, top as u8, content, &mut count, f);
    Ok(())
}

fn ssyt_rec(
    g: &mut Grid,
    cells: &[(usize, usize)],
    i: usize,
    top: u8,
    content: Option<&[u32]>,
    count: &mut Vec<u32>,
    f: &mut impl FnMut(&Grid) -> bool,
) -> bool {
    if i == cells.len() {
        return f(g);
    }
    let (r, c) = cells[i];
    let lo_left = if g.is_skew(r, c.wrapping_sub(1)) { g.cell[r][c - 1] } else { 1 };
    let lo_up = if r > 0 && g.is_skew(r - 1, c) { g.cell[r - 1][c] + 1 } else { 1 };
    for v in lo_left.max(lo_up).max(1)..=top {
        if let Some(mu) = content {
            if count[v as usize] >= mu[v as usize - 1] {
                continue;
            }
        }
        count[v as usize] += 1;
        g.cell[r][c] = v;
        let go = ssyt_rec(g, cells, i + 1, top, content, count, f);
        g.cell[r][c] = 0;
        count[v as usize] -= 1;
        if !go {
            return false;
        }
    }
    true
}

/// Semistandard fillings with content `content` whose row reading word (right to left, top to
/// bottom) is a ballot sequence. Cells are filled in reading order so the ballot condition
/// prunes as it goes.
pub fn for_each_lr_filling(
    shape: &SkewShape,
    content: &[u32],
    f: &mut impl FnMut(&[Vec<u32>]) -> bool,
) -> Result<()> {
    if shape.shifted {
        return Err(Error::Unsupported("ballot fillings need an ordinary shape".into()));
    }
    if content.iter().sum::<u32>() != shape.size() {
        return Ok(());
    }
    let rows = shape.rows() as usize;
    let mut fill: Vec<Vec<u32>> =
        (1..=rows as u32).map(|r| vec![0; shape.outer_len(r) as usize]).collect();
    let mut order = Vec::new();
    for r in 0..rows {
        let lo = shape.inner_len(r as u32 + 1) as usize;
        for c in (lo..fill[r].len()).rev() {
            order.push((r, c));
        }
    }
    let mut count = vec![0u32; content.len() + 1];
    lr_rec(shape, &mut fill, &order, 0, content, &mut count, f);
    Ok(())
}

fn lr_rec(
    shape: &SkewShape,
    fill: &mut Vec<Vec<u32>>,
    order: &[(usize, usize)],
    i: usize,
    content: &[u32],
    count: &mut Vec<u32>,
    f: &mut impl FnMut(&[Vec<u32>]) -> bool,
) -> bool {
    if i == order.len() {
        return f(fill);
    }
    let (r, c) = order[i];
    let hi = if c + 1 < fill[r].len() { fill[r][c + 1] } else { content.len() as u32 };
    let above_skew = r > 0 && c < fill[r - 1].len() && c >= shape.inner_len(r as u32) as usize;
    let lo = if above_skew { fill[r - 1][c] + 1 } else { 1 };
    // Labels never exceed the row index in a ballot filling.
    let hi = hi.min(r as u32 + 1);
    for v in lo..=hi {
        let vi = v as usize;
        if count[vi] >= content[vi - 1] || (vi >= 2 && count[vi] >= count[vi - 1]) {
            continue;
        }
        count[vi] += 1;
        fill[r][c] = v;
        let go = lr_rec(shape, fill, order, i + 1, content, count, f);
        fill[r][c] = 0;
        count[vi] -= 1;
        if !go {
            return false;
        }
    }
    true
}

/// Equivariant semistandard fillings with content `content` that are lattice in the column
/// sense and have no label that is too high. Labels are placed one value at a time: a horizontal
/// strip of boxes plus edge labels, at most one occurrence per column.
pub fn for_each_eq_ssyt(
    shape: &SkewShape,
    content: &[u32],
    f: &mut impl FnMut(&Grid) -> bool,
) -> Result<()> {
    if shape.shifted {
        return Err(Error::Unsupported("equivariant semistandard fillings are unshifted".into()));
    }
    let mut g = Grid::from_shape(shape)?;
    let cells = g.skew_cells().len() as u32;
    let total: u32 = content.iter().sum();
    if total < cells || content.len() as u32 > MAX_LABEL {
        return Ok(());
    }
    let width = shape.outer.first().copied().unwrap_or(0) as usize;
    // counts[v][c]: occurrences of v in column c.
    let mut counts = vec![vec![0u32; width + 1]; content.len() + 2];
    eq_round(&mut g, content, 1, width, cells, &mut counts, f);
    Ok(())
}

fn column_bottom(g: &Grid, c: usize) -> Option<usize> {
    let mut bottom = None;
    for r in 0..g.rows() {
        if filled_or_inner(g, r, c) {
            bottom = Some(r);
        } else {
            break;
        }
    }
    bottom
}

fn eq_round(
    g: &mut Grid,
    content: &[u32],
    v: usize,
    width: usize,
    empty: u32,
    counts: &mut Vec<Vec<u32>>,
    f: &mut impl FnMut(&Grid) -> bool,
) -> bool {
    if v > content.len() {
        return if empty == 0 { f(g) } else { true };
    }
    let remaining: u32 = content[v - 1..].iter().sum();
    if remaining < empty {
        return true;
    }
    let bottoms: Vec<Option<usize>> = (0..width).map(|c| column_bottom(g, c)).collect();
    eq_col(g, content, v, width, 0, content[v - 1], empty, &bottoms, counts, f)
}

#[allow(clippy::too_many_arguments)]
fn eq_col(
    g: &mut Grid,
    content: &[u32],
    v: usize,
    width: usize,
    c: usize,
    left: u32,
    empty: u32,
    bottoms: &[Option<usize>],
    counts: &mut Vec<Vec<u32>>,
    f: &mut impl FnMut(&Grid) -> bool,
) -> bool {
    if c == width {
        if left != 0 {
            return true;
        }
        // Column lattice condition for v against v - 1, weakly right of every column.
        if v >= 2 {
            let (mut a, mut b) = (0, 0);
            for col in (0..width).rev() {
                a += counts[v - 1][col];
                b += counts[v][col];
                if b > a {
                    return true;
                }
            }
        }
        return eq_round(g, content, v + 1, width, empty, counts, f);
    }
    // Not using this column.
    if !eq_col(g, content, v, width, c + 1, left, empty, bottoms, counts, f) {
        return false;
    }
    if left == 0 {
        return true;
    }
    let label = v as u8;
    // A box directly below the filled part of the column.
    let r = bottoms[c].map_or(0, |b| b + 1);
    let row_ok = v <= r + 1;
    if row_ok && g.is_skew(r, c) && (c == g.start(r) || filled_or_inner(g, r, c - 1)) {
        g.cell[r][c] = label;
        counts[v][c] += 1;
        let go = eq_col(g, content, v, width, c + 1, left - 1, empty - 1, bottoms, counts, f);
        counts[v][c] -= 1;
        g.cell[r][c] = 0;
        if !go {
            return false;
        }
    }
    // An edge label under the filled part of the column.
    if let Some(b) = bottoms[c] {
        let slot = !g.in_inner(b + 1, c);
        let too_high = v > b + 1;
        if slot && !too_high {
            g.edge[b][c] |= 1u64 << label;
            counts[v][c] += 1;
            let go = eq_col(g, content, v, width, c + 1, left - 1, empty, bottoms, counts, f);
            counts[v][c] -= 1;
            g.edge[b][c] &= !(1u64 << label);
            if !go {
                return false;
            }
        }
    }
    true
}

/// Shifted semistandard fillings in the primed alphabet (labels encoded as in
/// [`super::primed`]). Either the content is prescribed or letters run up to `max`.
/// `diagonal_primes` allows primed letters on the main diagonal.
pub fn for_each_shifted_ssyt(
    shape: &SkewShape,
    content: Option<&[u32]>,
    max: u32,
    diagonal_primes: bool,
    f: &mut impl FnMut(&Grid) -> bool,
) -> Result<()> {
    if !shape.shifted {
        return Err(Error::Unsupported("primed fillings need a shifted shape".into()));
    }
    let top = content.map_or(max, |m| m.len() as u32);
    if 2 * top > MAX_LABEL {
        return Err(Error::Unsupported(format!("letter {top} is too large")));
    }
    let mut g = Grid::from_shape(shape)?;
    let cells = g.skew_cells();
    if let Some(mu) = content {
        if mu.iter().sum::<u32>() as usize != cells.len() {
            return Ok(());
        }
    }
    let mut count = vec![0u32; top as usize + 1];
    sh_rec(&mut g, &cells, 0, top, content, diagonal_primes, &mut count, f);
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn sh_rec(
    g: &mut Grid,
    cells: &[(usize, usize)],
    i: usize,
    top: u32,
    content: Option<&[u32]>,
    diag: bool,
    count: &mut Vec<u32>,
    f: &mut impl FnMut(&Grid) -> bool,
) -> bool {
    if i == cells.len() {
        return f(g);
    }
    let (r, c) = cells[i];
    let left = if g.is_skew(r, c.wrapping_sub(1)) { g.cell[r][c - 1] as u32 } else { 0 };
    let up = if r > 0 && g.is_skew(r - 1, c) { g.cell[r - 1][c] as u32 } else { 0 };
    for a in left.max(up).max(1)..=2 * top {
        if a == left && is_primed(a) {
            continue;
        }
        if a == up && !is_primed(a) {
            continue;
        }
        if !diag && r == c && is_primed(a) {
            continue;
        }
        let l = letter(a) as usize;
        if let Some(mu) = content {
            if count[l] >= mu[l - 1] {
                continue;
            }
        }
        count[l] += 1;
        g.cell[r][c] = a as u8;
        let go = sh_rec(g, cells, i + 1, top, content, diag, count, f);
        g.cell[r][c] = 0;
        count[l] -= 1;
        if !go {
            return false;
        }
    }
    true
}
