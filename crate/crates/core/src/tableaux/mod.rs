//! Tableaux of every kind used here: standard and semistandard, ordinary and shifted,
//! with or without edge labels.
//!
//! Text form: rows separated by `/`, cells by `,`, inner boxes as `.`, primed letters with a
//! trailing `'`; edge labels follow a `|` as `e(r,c):{a,b}` naming the box whose southern edge
//! carries them. Example: `.,.,.,5/.,.,4/.,6 | e(1,3):{1,2} e(3,1):{3}`.

mod ballot;
mod enumerate;
pub mod eyd;
pub mod plus;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{Grid, MAX_LABEL};
use crate::shapes::{Cell, SkewShape};

pub use ballot::{
    column_lattice, is_classical_ballot, is_shifted_ballot, reading_word, shifted_reading_word,
    too_high,
};
pub use enumerate::{
    enumerate, for_each_eq_ssyt, for_each_lr_filling, for_each_shifted_ssyt, for_each_ssyt,
    for_each_standard_filling, Fill,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TableauKind {
    Syt,
    Ssyt,
    EqSyt,
    EqSsyt,
    ShiftedSyt,
    ShiftedSsyt,
    ShEqSyt,
}

impl TableauKind {
    pub fn shifted(self) -> bool {
        matches!(self, TableauKind::ShiftedSyt | TableauKind::ShiftedSsyt | TableauKind::ShEqSyt)
    }

    pub fn has_edges(self) -> bool {
        matches!(self, TableauKind::EqSyt | TableauKind::EqSsyt | TableauKind::ShEqSyt)
    }

    pub fn standard(self) -> bool {
        matches!(
            self,
            TableauKind::Syt | TableauKind::EqSyt | TableauKind::ShiftedSyt | TableauKind::ShEqSyt
        )
    }

    /// Whether labels use the primed alphabet `1' < 1 < 2' < 2 < ...`.
    pub fn primed(self) -> bool {
        self == TableauKind::ShiftedSsyt
    }
}

/// Encoding of the primed alphabet: `i'` is `2i - 1` and `i` is `2i`.
pub fn primed(i: u32) -> u32 {
    2 * i - 1
}

pub fn unprimed(i: u32) -> u32 {
    2 * i
}

/// The letter `|a|` of an encoded primed-alphabet label.
pub fn letter(a: u32) -> u32 {
    a.div_ceil(2)
}

pub fn is_primed(a: u32) -> bool {
    a % 2 == 1
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Tableau {
    pub kind: TableauKind,
    pub shape: SkewShape,
    pub boxes: BTreeMap<Cell, u32>,
    pub edges: BTreeMap<Cell, BTreeSet<u32>>,
}

impl Tableau {
    pub fn new(kind: TableauKind, shape: SkewShape) -> Tableau {
        Tableau { kind, shape, boxes: BTreeMap::new(), edges: BTreeMap::new() }
    }

    pub fn label(&self, cell: Cell) -> Option<u32> {
        self.boxes.get(&cell).copied()
    }

    pub fn edge(&self, cell: Cell) -> BTreeSet<u32> {
        self.edges.get(&cell).cloned().unwrap_or_default()
    }

    /// All labels, boxes then edges.
    pub fn labels(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.boxes.values().copied().collect();
        for s in self.edges.values() {
            v.extend(s.iter().copied());
        }
        v
    }

    /// Multiplicity of each letter; primed letters count towards their letter.
    pub fn content(&self) -> Vec<u32> {
        let mut c: Vec<u32> = Vec::new();
        for l in self.labels() {
            let x = if self.kind.primed() { letter(l) } else { l } as usize;
            if c.len() < x {
                c.resize(x, 0);
            }
            c[x - 1] += 1;
        }
        c
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidTableau(format!("{m} in {self}")));
        if self.kind.shifted() != self.shape.shifted {
            return bad("shape kind does not match tableau kind".into());
        }
        let cells: BTreeSet<Cell> = self.shape.cells().into_iter().collect();
        let keys: BTreeSet<Cell> = self.boxes.keys().copied().collect();
        if cells != keys {
            return bad("boxes do not match the shape".into());
        }
        if self.boxes.values().any(|&l| l == 0) {
            return bad("labels must be positive".into());
        }
        if !self.kind.has_edges() && !self.edges.is_empty() {
            return bad("edge labels are not allowed for this kind".into());
        }
        let slots: BTreeSet<Cell> = self.shape.edge_slots().into_iter().collect();
        for (c, s) in &self.edges {
            if !slots.contains(c) {
                return bad(format!("edge under {c:?} is not an edge slot"));
            }
            if s.is_empty() || s.contains(&0) {
                return bad(format!("edge under {c:?} is empty or has a zero label"));
            }
        }
        if self.kind.standard() {
            let mut all = self.labels();
            all.sort_unstable();
            if all.iter().enumerate().any(|(i, &l)| l != i as u32 + 1) {
                return bad("labels are not exactly 1..N".into());
            }
        }
        let get = |r: u32, c: u32| self.boxes.get(&(r, c)).copied();
        for (&(r, c), &v) in &self.boxes {
            let left = get(r, c.wrapping_sub(1));
            let up = if r > 1 { get(r - 1, c) } else { None };
            match self.kind {
                TableauKind::Syt | TableauKind::ShiftedSyt | TableauKind::EqSyt | TableauKind::ShEqSyt => {
                    if left.is_some_and(|a| a >= v) || up.is_some_and(|a| a >= v) {
                        return bad(format!("box {:?} breaks strict increase", (r, c)));
                    }
                }
                TableauKind::Ssyt | TableauKind::EqSsyt => {
                    if left.is_some_and(|a| a > v) || up.is_some_and(|a| a >= v) {
                        return bad(format!("box {:?} breaks semistandardness", (r, c)));
                    }
                }
                TableauKind::ShiftedSsyt => {
                    if left.is_some_and(|a| a > v || (a == v && is_primed(v))) {
                        return bad(format!("box {:?} repeats a primed letter in its row", (r, c)));
                    }
                    if up.is_some_and(|a| a > v || (a == v && !is_primed(v))) {
                        return bad(format!("box {:?} repeats a letter in its column", (r, c)));
                    }
                }
            }
            if matches!(self.kind, TableauKind::EqSyt | TableauKind::EqSsyt) && r > 1 {
                if let Some(s) = self.edges.get(&(r - 1, c)) {
                    if s.iter().any(|&e| e >= v) {
                        return bad(format!("box {:?} is not above its northern edge", (r, c)));
                    }
                }
            }
        }
        for (&(r, c), s) in &self.edges {
            let lo = *s.iter().next().unwrap();
            let hi = *s.iter().next_back().unwrap();
            match self.kind {
                TableauKind::EqSyt | TableauKind::EqSsyt => {
                    if get(r, c).is_some_and(|a| a >= lo) || get(r + 1, c).is_some_and(|b| b <= hi) {
                        return bad(format!("edge under {:?} is out of order", (r, c)));
                    }
                }
                TableauKind::ShEqSyt => {
                    if (1..=c).filter_map(|i| get(i, c)).any(|a| a >= lo) {
                        return bad(format!("edge under {:?} is not above its column", (r, c)));
                    }
                }
                _ => unreachable!(),
            }
        }
        Ok(())
    }

    pub fn to_grid(&self) -> Result<Grid> {
        let mut g = Grid::from_shape(&self.shape)?;
        for (&(r, c), &l) in &self.boxes {
            if l > MAX_LABEL {
                return Err(Error::Unsupported(format!("label {l} exceeds {MAX_LABEL}")));
            }
            g.cell[r as usize - 1][c as usize - 1] = l as u8;
        }
        for (&(r, c), s) in &self.edges {
            for &l in s {
                if l > MAX_LABEL {
                    return Err(Error::Unsupported(format!("label {l} exceeds {MAX_LABEL}")));
                }
                g.edge[r as usize - 1][c as usize - 1] |= 1u64 << l;
            }
        }
        Ok(g)
    }

    pub fn from_grid(kind: TableauKind, g: &Grid) -> Tableau {
        let mut t = Tableau::new(kind, g.shape());
        for (r, c) in g.skew_cells() {
            t.boxes.insert((r as u32 + 1, c as u32 + 1), g.cell[r][c] as u32);
        }
        for r in 0..crate::grid::MAX_ROWS {
            for c in 0..crate::grid::MAX_COLS {
                let e = g.edge[r][c];
                if e != 0 {
                    let s = (1..=MAX_LABEL).filter(|l| e >> l & 1 == 1).collect();
                    t.edges.insert((r as u32 + 1, c as u32 + 1), s);
                }
            }
        }
        t
    }

    /// Row superstandard tableau: rows filled `1, 2, 3, ...` left to right, top to bottom.
    pub fn superstandard(mu: &[u32], shifted: bool) -> Tableau {
        let kind = if shifted { TableauKind::ShiftedSyt } else { TableauKind::Syt };
        let shape = SkewShape { outer: mu.to_vec(), inner: Vec::new(), shifted };
        let mut t = Tableau::new(kind, shape);
        let mut next = 1;
        for (i, &p) in mu.iter().enumerate() {
            let r = i as u32 + 1;
            let s = if shifted { r } else { 1 };
            for c in s..s + p {
                t.boxes.insert((r, c), next);
                next += 1;
            }
        }
        t
    }

    /// Renumbers the `1`s left to right as `1..m_1`, then the `2`s, and so on.
    pub fn standardize(&self) -> Result<Tableau> {
        if self.kind != TableauKind::Ssyt {
            return Err(Error::Unsupported(format!("cannot standardize a {:?}", self.kind)));
        }
        let mut order: Vec<(u32, u32, Cell)> =
            self.boxes.iter().map(|(&(r, c), &l)| (l, c, (r, c))).collect();
        order.sort_unstable();
        let mut t = Tableau::new(TableauKind::Syt, self.shape.clone());
        for (i, &(_, _, cell)) in order.iter().enumerate() {
            t.boxes.insert(cell, i as u32 + 1);
        }
        Ok(t)
    }

    fn fmt_label(&self, l: u32) -> String {
        if self.kind.primed() {
            if is_primed(l) {
                format!("{}'", letter(l))
            } else {
                letter(l).to_string()
            }
        } else {
            l.to_string()
        }
    }

    pub fn parse(kind: TableauKind, s: &str) -> Result<Tableau> {
        let (body, edges) = match s.split_once('|') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s.trim(), ""),
        };
        let parse_label = |x: &str| -> Result<u32> {
            let x = x.trim();
            let (num, prime) = match x.strip_suffix('\'') {
                Some(n) => (n, true),
                None => (x, false),
            };
            let v: u32 = num.parse().map_err(|_| Error::Parse(format!("bad label {x:?}")))?;
            if kind.primed() {
                if v == 0 {
                    return Err(Error::Parse("letters start at 1".into()));
                }
                Ok(if prime { primed(v) } else { unprimed(v) })
            } else if prime {
                Err(Error::Parse(format!("primed label {x:?} in an unprimed tableau")))
            } else {
                Ok(v)
            }
        };
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut boxes = BTreeMap::new();
        if !body.is_empty() {
            for (i, row) in body.split('/').enumerate() {
                let r = i as u32 + 1;
                let start = if kind.shifted() { r } else { 1 };
                let cells: Vec<&str> = row.split(',').map(str::trim).collect();
                let dots = cells.iter().take_while(|&&x| x == ".").count();
                outer.push(cells.len() as u32);
                inner.push(dots as u32);
                for (j, x) in cells.iter().enumerate().skip(dots) {
                    boxes.insert((r, start + j as u32), parse_label(x)?);
                }
            }
        }
        while inner.last() == Some(&0) {
            inner.pop();
        }
        let shape = SkewShape { outer, inner, shifted: kind.shifted() };
        let mut t = Tableau { kind, shape, boxes, edges: BTreeMap::new() };
        for tok in edges.split_whitespace() {
            let tok = tok.strip_prefix("e(").ok_or_else(|| Error::Parse(format!("bad edge {tok:?}")))?;
            let (pos, set) = tok.split_once("):").ok_or_else(|| Error::Parse(format!("bad edge {tok:?}")))?;
            let (r, c) = pos.split_once(',').ok_or_else(|| Error::Parse(format!("bad edge {tok:?}")))?;
            let r: u32 = r.parse().map_err(|_| Error::Parse(format!("bad row in {tok:?}")))?;
            let c: u32 = c.parse().map_err(|_| Error::Parse(format!("bad column in {tok:?}")))?;
            let set = set.trim_start_matches('{').trim_end_matches('}');
            let labels: Result<BTreeSet<u32>> = set.split(',').map(parse_label).collect();
            t.edges.insert((r, c), labels?);
        }
        Ok(t)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 1..=self.shape.rows() {
            if r > 1 {
                write!(f, "/")?;
            }
            let s = self.shape.row_start(r);
            for c in s..s + self.shape.outer_len(r) {
                if c > s {
                    write!(f, ",")?;
                }
                match self.boxes.get(&(r, c)) {
                    Some(&l) => write!(f, "{}", self.fmt_label(l))?,
                    None => write!(f, ".")?,
                }
            }
        }
        if !self.edges.is_empty() {
            write!(f, " |")?;
            for ((r, c), s) in &self.edges {
                let ls: Vec<String> = s.iter().map(|&l| self.fmt_label(l)).collect();
                write!(f, " e({r},{c}):{{{}}}", ls.join(","))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_roundtrip() {
        let s = ".,.,.,5/.,.,4/.,6 | e(1,3):{1,2} e(3,1):{3}";
        let t = Tableau::parse(TableauKind::EqSyt, s).unwrap();
        assert_eq!(t.to_string(), s);
        assert_eq!(t.shape.outer, vec![4, 3, 2]);
        assert_eq!(t.shape.inner, vec![3, 2, 1]);
        t.validate().unwrap();
        let g = t.to_grid().unwrap();
        assert_eq!(Tableau::from_grid(TableauKind::EqSyt, &g), t);
    }

    #[test]
    fn primed_roundtrip() {
        let t = Tableau::parse(TableauKind::ShiftedSsyt, "1,2'/2").unwrap();
        assert_eq!(t.label((1, 2)), Some(primed(2)));
        assert_eq!(t.label((2, 2)), Some(unprimed(2)));
        assert_eq!(t.to_string(), "1,2'/2");
        t.validate().unwrap();
        assert!(Tableau::parse(TableauKind::ShiftedSsyt, "1,1'/2").unwrap().validate().is_err());
        assert!(Tableau::parse(TableauKind::ShiftedSsyt, "1,2/2").unwrap().validate().is_err());
    }

    #[test]
    fn equivariant_rules() {
        // Edge label must sit between the boxes above and below.
        let ok = Tableau::parse(TableauKind::EqSyt, ".,.,1/.,.,3 | e(1,3):{2}").unwrap();
        ok.validate().unwrap();
        let bad = Tableau::parse(TableauKind::EqSyt, ".,.,2/.,.,3 | e(1,3):{1}").unwrap();
        assert!(bad.validate().is_err());
        let not_slot = Tableau::parse(TableauKind::EqSyt, ".,.,./.,.,1 | e(1,1):{2}").unwrap();
        assert!(not_slot.validate().is_err());
    }

    #[test]
    fn worked_examples_validate() {
        let t = Tableau::parse(TableauKind::EqSsyt, ".,.,1,1/.,1/2,3 | e(1,3):{2,3} e(1,4):{2}").unwrap();
        t.validate().unwrap();
        assert_eq!(t.content(), vec![3, 3, 2]);
        assert!(too_high(&t));
        let bad = Tableau::parse(TableauKind::Ssyt, "2,1/3").unwrap();
        assert!(bad.validate().is_err());
    }

    #[test]
    fn superstandard_and_standardize() {
        assert_eq!(Tableau::superstandard(&[5, 3, 1], false).to_string(), "1,2,3,4,5/6,7,8/9");
        let sh = Tableau::superstandard(&[5, 3, 1], true);
        assert_eq!(sh.label((2, 2)), Some(6));
        assert_eq!(sh.label((3, 3)), Some(9));
        sh.validate().unwrap();
        let cases = [
            (".,.,.,1/.,.,1,2/.,1,2/3", ".,.,.,3/.,.,2,5/.,1,4/6"),
            (".,.,.,1/.,.,1,2/.,1,3/2", ".,.,.,3/.,.,2,5/.,1,6/4"),
            (".,.,.,1/.,.,1,2/.,2,3/1", ".,.,.,3/.,.,2,5/.,4,6/1"),
        ];
        for (a, b) in cases {
            let t = Tableau::parse(TableauKind::Ssyt, a).unwrap();
            assert!(is_classical_ballot(&reading_word(&t)));
            assert_eq!(t.standardize().unwrap().to_string(), b);
        }
        let row = Tableau::parse(TableauKind::Ssyt, "1,1,2").unwrap();
        assert_eq!(row.standardize().unwrap().to_string(), "1,2,3");
    }

    #[test]
    fn shifted_edges() {
        let t = Tableau::parse(TableauKind::ShEqSyt, ".,.,3/. | e(1,1):{1} e(2,2):{2,4}").unwrap();
        t.validate().unwrap();
        let bad = Tableau::parse(TableauKind::ShEqSyt, ".,2,3/. | e(2,2):{1,4}").unwrap();
        assert!(bad.validate().is_err());
    }
}
