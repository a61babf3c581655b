//! Partitions, strict partitions, skew shapes and the weights attached to their boxes.
//!
//! Boxes are addressed `(row, column)` from 1 in English notation. Row `i` of a shifted
//! diagram starts in column `i`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Var, ZPoly};

pub type Cell = (u32, u32);

fn parse_parts(s: &str) -> Result<Vec<u32>> {
    let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']).trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad part {x:?} in {s:?}")))
        })
        .collect()
}

fn fmt_parts(parts: &[u32], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

/// An integer partition with trailing zeros removed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The `i`-th part counting from 1, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn fits_in(&self, r: Rectangle) -> bool {
        self.len() as u32 <= r.k && self.part(1) <= r.w
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.part(1);
        Partition((1..=w).map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32).collect())
    }

    pub fn scale(&self, n: u32) -> Partition {
        Partition(self.0.iter().map(|p| p * n).collect())
    }

    pub fn cells(&self) -> Vec<Cell> {
        let mut v = Vec::new();
        for (i, &p) in self.0.iter().enumerate() {
            for c in 1..=p {
                v.push((i as u32 + 1, c));
            }
        }
        v
    }

    /// Partitions obtained by adding one box.
    pub fn addable(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            let cur = self.part(i + 1);
            if i == 0 || self.part(i) > cur {
                let mut p = self.0.clone();
                if i == p.len() {
                    p.push(1);
                } else {
                    p[i] += 1;
                }
                out.push(Partition(p));
            }
        }
        out
    }

    /// Partitions obtained by removing one box.
    pub fn removable(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            if self.part(i + 2) < self.0[i] {
                let mut p = self.0.clone();
                p[i] -= 1;
                out.push(Partition::new(p).expect("still a partition"));
            }
        }
        out
    }

    /// Every partition fitting in the rectangle, ordered by size then lexicographically.
    pub fn all_in(r: Rectangle) -> Vec<Partition> {
        let mut out = Vec::new();
        fn rec(k: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition::new(cur.clone()).unwrap());
            if cur.len() as u32 == k {
                return;
            }
            for p in 1..=max {
                cur.push(p);
                rec(k, p, cur, out);
                cur.pop();
            }
        }
        rec(r.k, r.w, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
        out.dedup();
        out
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Partition> {
        Partition::new(parse_parts(s)?)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

/// A partition with strictly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct StrictPartition(Vec<u32>);

impl StrictPartition {
    pub fn new(mut parts: Vec<u32>) -> Result<StrictPartition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not strictly decreasing")));
        }
        Ok(StrictPartition(parts))
    }

    pub fn empty() -> StrictPartition {
        StrictPartition(Vec::new())
    }

    /// The staircase `(n, n-1, ..., 1)`.
    pub fn staircase(n: u32) -> StrictPartition {
        StrictPartition((1..=n).rev().collect())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &StrictPartition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn in_staircase(&self, n: u32) -> bool {
        self.part(1) <= n
    }

    pub fn scale(&self, n: u32) -> StrictPartition {
        StrictPartition(self.0.iter().map(|p| p * n).collect())
    }

    /// Boxes of the shifted diagram.
    pub fn cells(&self) -> Vec<Cell> {
        let mut v = Vec::new();
        for (i, &p) in self.0.iter().enumerate() {
            let r = i as u32 + 1;
            for c in r..r + p {
                v.push((r, c));
            }
        }
        v
    }

    pub fn has_cell(&self, (r, c): Cell) -> bool {
        r >= 1 && c >= r && c < r + self.part(r as usize)
    }

    /// Strict partitions obtained by adding one box.
    pub fn addable(&self) -> Vec<StrictPartition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            let mut p = self.0.clone();
            if i == p.len() {
                p.push(1);
            } else {
                p[i] += 1;
            }
            if let Ok(s) = StrictPartition::new(p) {
                out.push(s);
            }
        }
        out
    }

    /// Strict partitions obtained by removing one box.
    pub fn removable(&self) -> Vec<StrictPartition> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            let mut p = self.0.clone();
            p[i] -= 1;
            if let Ok(s) = StrictPartition::new(p) {
                out.push(s);
            }
        }
        out
    }

    /// All strict partitions contained in the staircase of size `n`, ordered by size then
    /// lexicographically.
    pub fn all_in_staircase(n: u32) -> Vec<StrictPartition> {
        let mut out: Vec<StrictPartition> = (0u32..1 << n)
            .map(|mask| StrictPartition((1..=n).rev().filter(|i| mask >> (i - 1) & 1 == 1).collect()))
            .collect();
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
        out
    }

    pub fn to_partition(&self) -> Partition {
        Partition(self.0.clone())
    }
}

impl FromStr for StrictPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<StrictPartition> {
        StrictPartition::new(parse_parts(s)?)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

/// Either kind of shape, for operations that must reject mixing the two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    Ordinary(Partition),
    Strict(StrictPartition),
}

pub fn contains(outer: &Shape, inner: &Shape) -> Result<bool> {
    match (outer, inner) {
        (Shape::Ordinary(a), Shape::Ordinary(b)) => Ok(a.contains(b)),
        (Shape::Strict(a), Shape::Strict(b)) => Ok(a.contains(b)),
        _ => Err(Error::MixedShapeKinds),
    }
}

/// The `k x w` rectangle indexing Schubert classes of `Gr_k(C^{k+w})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rectangle {
    pub k: u32,
    pub w: u32,
}

impl Rectangle {
    pub fn new(k: u32, w: u32) -> Rectangle {
        Rectangle { k, w }
    }

    pub fn n(&self) -> u32 {
        self.k + self.w
    }

    pub fn partition(&self) -> Partition {
        Partition(vec![self.w; self.k as usize])
    }
}

impl fmt::Display for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.k, self.w)
    }
}

/// A skew shape `outer / inner`, ordinary or shifted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Vec<u32>,
    pub inner: Vec<u32>,
    pub shifted: bool,
}

impl SkewShape {
    pub fn ordinary(outer: &Partition, inner: &Partition) -> Result<SkewShape> {
        if !outer.contains(inner) {
            return Err(Error::NotContained { inner: inner.to_string(), outer: outer.to_string() });
        }
        Ok(SkewShape { outer: outer.0.clone(), inner: inner.0.clone(), shifted: false })
    }

    pub fn shifted(outer: &StrictPartition, inner: &StrictPartition) -> Result<SkewShape> {
        if !outer.contains(inner) {
            return Err(Error::NotContained { inner: inner.to_string(), outer: outer.to_string() });
        }
        Ok(SkewShape { outer: outer.0.clone(), inner: inner.0.clone(), shifted: true })
    }

    pub fn rows(&self) -> u32 {
        self.outer.len() as u32
    }

    fn len_at(v: &[u32], r: u32) -> u32 {
        if r == 0 {
            return 0;
        }
        v.get(r as usize - 1).copied().unwrap_or(0)
    }

    pub fn outer_len(&self, r: u32) -> u32 {
        Self::len_at(&self.outer, r)
    }

    pub fn inner_len(&self, r: u32) -> u32 {
        Self::len_at(&self.inner, r)
    }

    pub fn row_start(&self, r: u32) -> u32 {
        if self.shifted {
            r
        } else {
            1
        }
    }

    pub fn in_outer(&self, (r, c): Cell) -> bool {
        let s = self.row_start(r);
        r >= 1 && c >= s && c < s + self.outer_len(r)
    }

    pub fn in_inner(&self, (r, c): Cell) -> bool {
        let s = self.row_start(r);
        r >= 1 && c >= s && c < s + self.inner_len(r)
    }

    /// Whether the box belongs to `outer / inner`.
    pub fn has_cell(&self, cell: Cell) -> bool {
        self.in_outer(cell) && !self.in_inner(cell)
    }

    pub fn cells(&self) -> Vec<Cell> {
        let mut v = Vec::new();
        for r in 1..=self.rows() {
            let s = self.row_start(r);
            for c in s + self.inner_len(r)..s + self.outer_len(r) {
                v.push((r, c));
            }
        }
        v
    }

    pub fn size(&self) -> u32 {
        self.outer.iter().sum::<u32>() - self.inner.iter().sum::<u32>()
    }

    /// Maximally south-east boxes of the inner shape.
    pub fn inner_corners(&self) -> Vec<Cell> {
        let mut v = Vec::new();
        for r in 1..=self.inner.len() as u32 {
            let l = self.inner_len(r);
            if l == 0 {
                continue;
            }
            let c = self.row_start(r) + l - 1;
            if !self.in_inner((r + 1, c)) {
                v.push((r, c));
            }
        }
        v
    }

    /// Diagonal boxes `(i, i)` of a shifted outer shape.
    pub fn diagonal_cells(&self) -> Vec<Cell> {
        if !self.shifted {
            return Vec::new();
        }
        (1..=self.rows()).map(|i| (i, i)).collect()
    }

    /// Boxes whose southern edge may carry labels in an equivariant filling.
    ///
    /// Unshifted: the southern edge of `(r, c)` in the outer shape whenever `(r + 1, c)` is
    /// not in the inner shape. Shifted: the southern edges of the diagonal boxes.
    pub fn edge_slots(&self) -> Vec<Cell> {
        if self.shifted {
            return self.diagonal_cells();
        }
        let mut v = Vec::new();
        for r in 1..=self.rows() {
            for c in 1..=self.outer_len(r) {
                if !self.in_inner((r + 1, c)) {
                    v.push((r, c));
                }
            }
        }
        v
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.outer, f)?;
        write!(f, "/")?;
        fmt_parts(&self.inner, f)?;
        if self.shifted {
            write!(f, " shifted")?;
        }
        Ok(())
    }
}

/// Complement of `nu` in the rectangle, rotated by 180 degrees.
pub fn complement(nu: &Partition, r: Rectangle) -> Result<Partition> {
    if !nu.fits_in(r) {
        return Err(Error::OutOfBounds { shape: nu.to_string(), bound: r.to_string() });
    }
    Partition::new((1..=r.k as usize).map(|i| r.w - nu.part(r.k as usize + 1 - i)).collect())
}

/// Complement of `nu` in the staircase `ρ_n`, reflected back to a shifted shape.
/// Its parts are `{1, ..., n}` minus the parts of `nu`.
pub fn shifted_complement(nu: &StrictPartition, n: u32) -> Result<StrictPartition> {
    if !nu.in_staircase(n) {
        return Err(Error::OutOfBounds { shape: nu.to_string(), bound: format!("rho_{n}") });
    }
    StrictPartition::new((1..=n).rev().filter(|p| !nu.0.contains(p)).collect())
}

/// `dist(i, j) = k + j - i` for a box of a shape in a rectangle with `k` rows.
pub fn dist(k: u32, (i, j): Cell) -> i64 {
    k as i64 + j as i64 - i as i64
}

/// `β(x) = t_dist(x) - t_dist(x)+1`.
pub fn beta_weight(k: u32, cell: Cell) -> Result<ZPoly> {
    let d = dist(k, cell);
    if d < 1 {
        return Err(Error::OutOfBounds { shape: format!("{cell:?}"), bound: format!("{k} rows") });
    }
    let d = d as u32;
    Ok(ZPoly::var(Var::t(d)) - ZPoly::var(Var::t(d + 1)))
}

/// Diagonal index of a shifted box; the main diagonal is 1.
pub fn diagonal(cell: Cell) -> u32 {
    cell.1 - cell.0 + 1
}

/// `wt_Y(λ)`: each box on diagonal `d` contributes `γ_d`.
pub fn wt_y(lambda: &StrictPartition) -> ZPoly {
    lambda.cells().into_iter().map(|c| ZPoly::var(Var::gamma(diagonal(c)))).sum()
}

/// `wt_Z(λ)`: `α_1` on the main diagonal and `2α_d` on diagonal `d > 1`.
pub fn wt_z(lambda: &StrictPartition) -> ZPoly {
    lambda
        .cells()
        .into_iter()
        .map(|c| {
            let d = diagonal(c);
            let a = ZPoly::var(Var::alpha(d));
            if d == 1 {
                a
            } else {
                a.scale(&2.into())
            }
        })
        .sum()
}

pub fn wt_y_skew(nu: &StrictPartition, lambda: &StrictPartition) -> ZPoly {
    wt_y(nu) - wt_y(lambda)
}

pub fn wt_z_skew(nu: &StrictPartition, lambda: &StrictPartition) -> ZPoly {
    wt_z(nu) - wt_z(lambda)
}

/// `τ(I) = (i_d - d, ..., i_1 - 1)` for `I = {i_1 < ... < i_d}`.
pub fn tau(set: &[u32]) -> Result<Partition> {
    let mut s = set.to_vec();
    s.sort_unstable();
    if s.windows(2).any(|w| w[0] == w[1]) || s.first() == Some(&0) {
        return Err(Error::Unsupported(format!("{set:?} is not a subset of positive integers")));
    }
    Partition::new(s.iter().enumerate().rev().map(|(i, &x)| x - i as u32 - 1).collect())
}

/// `I_n(α) = {n - r + j - α_j : 1 <= j <= r}` for `α` inside `r x (n - r)`.
pub fn horn_index_set(n: u32, r: u32, alpha: &Partition) -> Result<Vec<u32>> {
    if r > n || !alpha.fits_in(Rectangle::new(r, n - r)) {
        return Err(Error::OutOfBounds {
            shape: alpha.to_string(),
            bound: format!("{r}x{}", n.saturating_sub(r)),
        });
    }
    Ok((1..=r).map(|j| n - r + j - alpha.part(j as usize)).collect())
}

/// Boxes of `ρ_n` crossed out by the corners in `set`: corner `i` is the diagonal box `(i, i)`,
/// and it removes row `i` to its right and column `i` above it.
pub fn ps_crossed(n: u32, set: &[u32]) -> BTreeSet<Cell> {
    StrictPartition::staircase(n)
        .cells()
        .into_iter()
        .filter(|&(r, c)| set.contains(&r) || set.contains(&c))
        .collect()
}

/// `[λ]_α`: boxes of `λ ⊆ ρ_n` surviving after crossing out by the corners `I_n(α)`.
pub fn ps_statistic(lambda: &StrictPartition, alpha: &Partition, r: u32, n: u32) -> Result<u32> {
    if !lambda.in_staircase(n) {
        return Err(Error::OutOfBounds { shape: lambda.to_string(), bound: format!("rho_{n}") });
    }
    let set = horn_index_set(n, r, alpha)?;
    Ok(lambda
        .cells()
        .into_iter()
        .filter(|&(i, j)| !set.contains(&i) && !set.contains(&j))
        .count() as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }
    fn sp(s: &str) -> StrictPartition {
        s.parse().unwrap()
    }

    #[test]
    fn parsing_and_normalisation() {
        assert_eq!(p("3,2,1,0,0"), p("3,2,1"));
        assert_eq!(p("0"), Partition::empty());
        assert_eq!(p(""), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,2".parse::<StrictPartition>().is_err());
        assert_eq!(p("[4,2]").to_string(), "(4,2)");
    }

    #[test]
    fn mixed_containment_is_rejected() {
        let a = Shape::Ordinary(p("2,1"));
        let b = Shape::Strict(sp("2,1"));
        assert_eq!(contains(&a, &b), Err(Error::MixedShapeKinds));
        assert_eq!(contains(&a, &Shape::Ordinary(p("2"))), Ok(true));
    }

    #[test]
    fn complements() {
        assert_eq!(complement(&p("2,1"), Rectangle::new(2, 3)).unwrap(), p("2,1"));
        assert_eq!(complement(&p("3,1"), Rectangle::new(2, 3)).unwrap(), p("2"));
        assert_eq!(shifted_complement(&sp("2"), 3).unwrap(), sp("3,1"));
        assert_eq!(shifted_complement(&sp("0"), 3).unwrap(), sp("3,2,1"));
    }

    #[test]
    fn covers_of_strict_shapes() {
        assert_eq!(sp("2,1").addable(), vec![sp("3,1")]);
        assert_eq!(sp("3,1").removable(), vec![sp("2,1"), sp("3")]);
        assert_eq!(p("2,1").addable(), vec![p("3,1"), p("2,2"), p("2,1,1")]);
        assert_eq!(p("2,2").removable(), vec![p("2,1")]);
    }

    #[test]
    fn inner_corners_of_skew_shapes() {
        let s = SkewShape::shifted(&sp("4,2"), &sp("2,1")).unwrap();
        assert_eq!(s.inner_corners(), vec![(2, 2)]);
        let s = SkewShape::ordinary(&p("4,3,2"), &p("3,2,1")).unwrap();
        assert_eq!(s.inner_corners(), vec![(1, 3), (2, 2), (3, 1)]);
        assert_eq!(s.cells(), vec![(1, 4), (2, 3), (3, 2)]);
    }

    #[test]
    fn distances_and_weights() {
        assert_eq!(dist(2, (2, 1)), 1);
        assert_eq!(dist(2, (1, 3)), 4);
        assert_eq!(beta_weight(2, (1, 3)).unwrap().to_string(), "t_4-t_5");
        let rho = StrictPartition::staircase(3);
        assert_eq!(wt_y(&rho).to_string(), "3*g_1+2*g_2+g_3");
        assert_eq!(wt_z(&rho).to_string(), "3*a_1+4*a_2+2*a_3");
    }

    #[test]
    fn horn_maps() {
        assert_eq!(tau(&[1, 3, 5]).unwrap(), p("2,1"));
        assert_eq!(horn_index_set(6, 3, &p("3,2,1")).unwrap(), vec![1, 3, 5]);
    }

    #[test]
    fn purbhoo_sottile_figure() {
        let crossed = ps_crossed(6, &[1, 3, 5]);
        let expect: BTreeSet<Cell> = [
            (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6),
            (2, 3), (2, 5),
            (3, 3), (3, 4), (3, 5), (3, 6),
            (4, 5),
            (5, 5), (5, 6),
        ]
        .into_iter()
        .collect();
        assert_eq!(crossed, expect);
        assert_eq!(ps_statistic(&sp("6,4,3,1"), &p("3,2,1"), 3, 6).unwrap(), 3);
    }
}
