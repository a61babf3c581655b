//! Excited Young diagrams inside a shifted diagram.

use std::collections::{BTreeSet, VecDeque};

use crate::shapes::{Cell, StrictPartition};

pub type Eyd = BTreeSet<Cell>;

/// Cells reachable from `c` by one elementary excitation inside `D_lambda`.
pub fn excitations(lambda: &StrictPartition, c: &Eyd) -> Vec<Eyd> {
    let free = |x: Cell| lambda.has_cell(x) && !c.contains(&x);
    let mut out = Vec::new();
    for &(i, j) in c {
        let ok = if i == j {
            free((i, i + 1)) && free((i + 1, i + 1))
        } else {
            free((i + 1, j)) && free((i, j + 1)) && free((i + 1, j + 1))
        };
        if ok {
            let mut next = c.clone();
            next.remove(&(i, j));
            next.insert((i + 1, j + 1));
            out.push(next);
        }
    }
    out
}

/// All excited Young diagrams of `D_mu` contained in `D_lambda`, sorted. Empty if `mu` does
/// not fit.
pub fn eyd_enumerate(lambda: &StrictPartition, mu: &StrictPartition) -> Vec<Eyd> {
    if !lambda.contains(mu) {
        return Vec::new();
    }
    let start: Eyd = mu.cells().into_iter().collect();
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        for next in excitations(lambda, &c) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> StrictPartition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let all = eyd_enumerate(&sp("4,2,1"), &sp("2"));
        let expected: Vec<Eyd> = vec![
            [(1, 1), (1, 2)].into(),
            [(1, 1), (2, 3)].into(),
            [(2, 2), (2, 3)].into(),
        ];
        assert_eq!(all, expected);
    }

    #[test]
    fn identity_and_staircase_counts() {
        assert_eq!(eyd_enumerate(&sp("4,2,1"), &sp("4,2,1")).len(), 1);
        assert!(eyd_enumerate(&sp("2"), &sp("3")).is_empty());
        for l in 1..=5u32 {
            let rho = StrictPartition::staircase(l);
            for p in 1..=l {
                let n = eyd_enumerate(&rho, &StrictPartition::new(vec![p]).unwrap()).len();
                let binom = (0..p).fold(1u64, |a, i| a * (l - i) as u64 / (i + 1) as u64);
                assert_eq!(n as u64, binom, "l={l} p={p}");
            }
        }
    }
}
