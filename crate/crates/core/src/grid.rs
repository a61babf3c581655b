//! Fixed-size, copyable storage for edge-labeled fillings; the workhorse behind enumeration
//! and sliding. Coordinates here are 0-based.

use crate::error::{Error, Result};
use crate::shapes::SkewShape;

pub const MAX_ROWS: usize = 10;
pub const MAX_COLS: usize = 16;
/// Labels are stored in `u8` and edge sets in a `u64` bitmask.
pub const MAX_LABEL: u32 = 63;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Grid {
    pub shifted: bool,
    pub outer: [u8; MAX_ROWS],
    pub inner: [u8; MAX_ROWS],
    pub cell: [[u8; MAX_COLS]; MAX_ROWS],
    /// `edge[r][c]` holds the labels on the southern edge of box `(r, c)`.
    pub edge: [[u64; MAX_COLS]; MAX_ROWS],
}

impl Grid {
    pub fn from_shape(s: &SkewShape) -> Result<Grid> {
        let rows = s.outer.len();
        let width = (1..=rows as u32).map(|r| s.row_start(r) + s.outer_len(r)).max().unwrap_or(1);
        if rows >= MAX_ROWS || width as usize >= MAX_COLS {
            return Err(Error::Unsupported(format!("shape {s} exceeds the {MAX_ROWS}x{MAX_COLS} grid")));
        }
        let mut g = Grid {
            shifted: s.shifted,
            outer: [0; MAX_ROWS],
            inner: [0; MAX_ROWS],
            cell: [[0; MAX_COLS]; MAX_ROWS],
            edge: [[0; MAX_COLS]; MAX_ROWS],
        };
        for (i, &p) in s.outer.iter().enumerate() {
            g.outer[i] = p as u8;
        }
        for (i, &p) in s.inner.iter().enumerate() {
            g.inner[i] = p as u8;
        }
        Ok(g)
    }

    #[inline]
    pub fn start(&self, r: usize) -> usize {
        if self.shifted {
            r
        } else {
            0
        }
    }

    #[inline]
    pub fn in_outer(&self, r: usize, c: usize) -> bool {
        if r >= MAX_ROWS {
            return false;
        }
        let s = self.start(r);
        c >= s && c < s + self.outer[r] as usize
    }

    #[inline]
    pub fn in_inner(&self, r: usize, c: usize) -> bool {
        if r >= MAX_ROWS {
            return false;
        }
        let s = self.start(r);
        c >= s && c < s + self.inner[r] as usize
    }

    #[inline]
    pub fn is_skew(&self, r: usize, c: usize) -> bool {
        self.in_outer(r, c) && !self.in_inner(r, c)
    }

    pub fn rows(&self) -> usize {
        self.outer.iter().rposition(|&x| x > 0).map_or(0, |i| i + 1)
    }

    pub fn shape(&self) -> SkewShape {
        let trim = |v: &[u8]| {
            let mut out: Vec<u32> = v.iter().map(|&x| x as u32).collect();
            while out.last() == Some(&0) {
                out.pop();
            }
            out
        };
        SkewShape { outer: trim(&self.outer), inner: trim(&self.inner), shifted: self.shifted }
    }

    pub fn skew_cells(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for r in 0..self.rows() {
            let s = self.start(r);
            for c in s + self.inner[r] as usize..s + self.outer[r] as usize {
                v.push((r, c));
            }
        }
        v
    }

    /// Positions whose southern edge may hold labels.
    pub fn edge_slots(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for r in 0..self.rows() {
            if self.shifted {
                if self.outer[r] > 0 {
                    v.push((r, r));
                }
                continue;
            }
            for c in 0..self.outer[r] as usize {
                if !self.in_inner(r + 1, c) {
                    v.push((r, c));
                }
            }
        }
        v
    }

    /// Inner corners, in increasing row order.
    pub fn inner_corners(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for r in 0..MAX_ROWS - 1 {
            if self.inner[r] == 0 {
                continue;
            }
            let c = self.start(r) + self.inner[r] as usize - 1;
            if !self.in_inner(r + 1, c) {
                v.push((r, c));
            }
        }
        v
    }

    pub fn has_edge_labels(&self) -> bool {
        self.edge.iter().any(|row| row.iter().any(|&e| e != 0))
    }

    pub fn inner_is_empty(&self) -> bool {
        self.inner.iter().all(|&x| x == 0)
    }

    /// The shape `μ` if this is the row superstandard tableau `S_μ` of a straight shape.
    pub fn superstandard_shape(&self) -> Option<Vec<u32>> {
        if !self.inner_is_empty() || self.has_edge_labels() {
            return None;
        }
        let mut next = 1u8;
        let rows = self.rows();
        for r in 0..rows {
            let s = self.start(r);
            for c in s..s + self.outer[r] as usize {
                if self.cell[r][c] != next {
                    return None;
                }
                next += 1;
            }
        }
        Some(self.outer[..rows].iter().map(|&x| x as u32).collect())
    }

    /// Position of label `l` as a box, or as an edge (flagged `true`).
    pub fn find(&self, l: u8) -> Option<(usize, usize, bool)> {
        for r in 0..MAX_ROWS {
            for c in 0..MAX_COLS {
                if self.cell[r][c] == l {
                    return Some((r, c, false));
                }
                if self.edge[r][c] >> l & 1 == 1 {
                    return Some((r, c, true));
                }
            }
        }
        None
    }
}
