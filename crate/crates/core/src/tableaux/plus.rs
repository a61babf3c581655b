//! Plus diagrams and the factorial Schur polynomials they generate.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Var, ZPoly};
use crate::shapes::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlusDiagram {
    pub rows: usize,
    pub cols: usize,
    /// Positions of the `+`s, 1-indexed `(row, column)`.
    pub plus: BTreeSet<(u32, u32)>,
}

impl PlusDiagram {
    pub fn initial(lambda: &Partition, rows: usize, cols: usize) -> Result<PlusDiagram> {
        if lambda.len() > rows {
            return Err(Error::OutOfBounds { shape: lambda.to_string(), bound: format!("{rows} rows") });
        }
        let need = rows + lambda.part(1) as usize - 1;
        if !lambda.parts().is_empty() && cols < need {
            return Err(Error::OutOfBounds {
                shape: lambda.to_string(),
                bound: format!("{cols} columns, need {need}"),
            });
        }
        Ok(PlusDiagram { rows, cols, plus: lambda.cells().into_iter().collect() })
    }

    /// Diagrams reachable by one local move.
    pub fn moves(&self) -> Vec<PlusDiagram> {
        let mut out = Vec::new();
        for &(i, j) in &self.plus {
            if i as usize >= self.rows || j as usize >= self.cols {
                continue;
            }
            let free = [(i, j + 1), (i + 1, j), (i + 1, j + 1)];
            if free.iter().all(|p| !self.plus.contains(p)) {
                let mut next = self.clone();
                next.plus.remove(&(i, j));
                next.plus.insert((i + 1, j + 1));
                out.push(next);
            }
        }
        out
    }

    /// `x_1^{a_1} ... x_n^{a_n}` with `a_i` the number of `+`s in row `i`.
    pub fn wt_x(&self) -> ZPoly {
        let mono = Monomial::from_pairs(self.plus.iter().map(|&(i, _)| (Var::x(i), 1)));
        ZPoly::term(mono, 1.into())
    }

    /// `prod (x_i - y_j)` over the `+` positions.
    pub fn wt_xy(&self) -> ZPoly {
        self.plus
            .iter()
            .map(|&(i, j)| ZPoly::var(Var::x(i)) - ZPoly::var(Var::y(j)))
            .fold(ZPoly::one(), |a, b| a * b)
    }

    pub fn to_text(&self) -> String {
        let mut rows = Vec::new();
        for i in 1..=self.rows as u32 {
            let row: String = (1..=self.cols as u32)
                .map(|j| if self.plus.contains(&(i, j)) { '+' } else { '.' })
                .collect();
            rows.push(row);
        }
        rows.join("/")
    }
}

/// Every plus diagram of `lambda` in an `rows` by `cols` grid, sorted.
pub fn plus_diagrams(lambda: &Partition, rows: usize, cols: usize) -> Result<Vec<PlusDiagram>> {
    let start = PlusDiagram::initial(lambda, rows, cols)?;
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(d) = queue.pop_front() {
        for next in d.moves() {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// `s_lambda(x_1..x_n; y_1..y_{n + lambda_1 - 1})`.
pub fn factorial_schur(lambda: &Partition, n: usize) -> Result<ZPoly> {
    let cols = (n + lambda.part(1) as usize).saturating_sub(1).max(1);
    Ok(plus_diagrams(lambda, n, cols)?.iter().map(PlusDiagram::wt_xy).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(s: &str) -> BTreeSet<(u32, u32)> {
        let mut set = BTreeSet::new();
        for (i, row) in s.split('/').enumerate() {
            for (j, ch) in row.chars().enumerate() {
                if ch == '+' {
                    set.insert((i as u32 + 1, j as u32 + 1));
                }
            }
        }
        set
    }

    #[test]
    fn worked_diagrams() {
        let lambda: Partition = "3,2".parse().unwrap();
        let all = plus_diagrams(&lambda, 4, 6).unwrap();
        let second = diagram("++..../+..+../....../...+..");
        let third = diagram("+...../..+.../.+..+./...+..");
        assert!(all.iter().any(|d| d.plus == second));
        let p = all.iter().find(|d| d.plus == third).unwrap();
        assert_eq!(p.wt_x().to_string(), "x_1*x_2*x_3^2*x_4");
        let expected: ZPoly = "(x_1-y_1)*(x_2-y_3)*(x_3-y_2)*(x_3-y_5)*(x_4-y_4)".parse().unwrap();
        assert_eq!(p.wt_xy(), expected);
    }

    #[test]
    fn empty_partition_has_one_diagram() {
        let all = plus_diagrams(&Partition::empty(), 3, 3).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].wt_xy(), ZPoly::one());
    }

    #[test]
    fn narrow_grid_is_rejected() {
        let lambda: Partition = "3,2".parse().unwrap();
        assert!(plus_diagrams(&lambda, 4, 5).is_err());
    }

    #[test]
    fn specialization_is_the_schur_polynomial() {
        // s_(2,1)(x_1, x_2, x_3) = sum over the eight tableaux.
        let lambda: Partition = "2,1".parse().unwrap();
        let x: ZPoly = plus_diagrams(&lambda, 3, 4).unwrap().iter().map(|d| d.wt_x()).sum();
        let s21: ZPoly = "x_1^2*x_2+x_1^2*x_3+x_1*x_2^2+x_1*x_3^2+x_2^2*x_3+x_2*x_3^2+2*x_1*x_2*x_3"
            .parse()
            .unwrap();
        assert_eq!(x, s21);
    }
}
