use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use super::*;
use crate::poly::ZPoly;
use crate::shapes::{Partition, Rectangle, SkewShape, StrictPartition};
use crate::tableaux::{enumerate, for_each_standard_filling, Fill};

fn tab(kind: TableauKind, s: &str) -> Tableau {
    let t = Tableau::parse(kind, s).unwrap();
    t.validate().unwrap();
    t
}

fn grid(kind: TableauKind, s: &str) -> Grid {
    tab(kind, s).to_grid().unwrap()
}

fn text(kind: TableauKind, g: &Grid) -> String {
    Tableau::from_grid(kind, g).to_string()
}

fn poly(s: &str) -> ZPoly {
    s.parse().unwrap()
}

const EXAMPLE_1_1: &str = ".,.,.,5/.,.,4/.,6 | e(1,3):{1,2} e(3,1):{3}";

#[test]
fn edge_set_enters_the_bullet() {
    let mut g = grid(TableauKind::EqSyt, EXAMPLE_1_1);
    let mut rules = Vec::new();
    slide(&mut g, (0, 2), &mut |s| rules.push(s.rule)).unwrap();
    assert_eq!(rules, vec![Rule::J4]);
    assert_eq!(text(TableauKind::EqSyt, &g), ".,.,1,5/.,.,4/.,6 | e(1,3):{2} e(3,1):{3}");
}

#[test]
fn worked_equivariant_rectification() {
    let g = grid(TableauKind::EqSyt, EXAMPLE_1_1);
    let r = erect(&g).unwrap();
    assert_eq!(text(TableauKind::EqSyt, &r), "1,2,5/3,4/6");
}

#[test]
fn two_rectification_orders() {
    let t = tab(TableauKind::Syt, ".,.,1/.,2,3/./4");
    let mut g = t.to_grid().unwrap();
    slide(&mut g, (0, 1), &mut |_| {}).unwrap();
    assert_eq!(text(TableauKind::Syt, &g), ".,1,3/.,2/./4");
    let a = rectify(&t.to_grid().unwrap(), &Policy::Sequence(vec![(1, 2), (3, 1), (2, 1), (1, 1)])).unwrap();
    let b = rectify(&t.to_grid().unwrap(), &Policy::Sequence(vec![(3, 1), (2, 1), (1, 2), (1, 1)])).unwrap();
    assert_eq!(text(TableauKind::Syt, &a), "1,3/2/4");
    assert_eq!(a, b);
}

#[test]
fn straight_shapes_are_fixed() {
    let t = tab(TableauKind::Syt, "1,3/2/4");
    assert_eq!(rect(&t).unwrap(), t);
    let mut g = t.to_grid().unwrap();
    assert_eq!(slide(&mut g, (0, 0), &mut |_| {}), Err(Error::BadSlide(1, 1)));
}

#[test]
fn rectification_targets() {
    let u1 = tab(TableauKind::Syt, "1,2/3");
    let u2 = tab(TableauKind::Syt, "1,3/2");
    for (s, u) in [(".,.,2/.,1/3", &u1), (".,.,2/.,3/1", &u1), (".,.,1/.,3/2", &u2), (".,.,3/.,1/2", &u2)] {
        assert_eq!(&rect(&tab(TableauKind::Syt, s)).unwrap(), u, "{s}");
    }
}

#[test]
fn shifted_order_dependence() {
    let g = grid(TableauKind::ShEqSyt, ".,.,./.,1/2 | e(3,3):{3}");
    assert_eq!(text(TableauKind::ShEqSyt, &erect(&g).unwrap()), "1,2,3");
    assert_eq!(text(TableauKind::ShEqSyt, &sh_eq_rect(&g).unwrap()), "1,2/3");
}

#[test]
fn worked_ejdt_weights() {
    let k = 2;
    let t1 = tab(TableauKind::EqSyt, ".,.,2/.,.,3 | e(2,1):{1}");
    let t2 = tab(TableauKind::EqSyt, ".,.,2/.,.,3 | e(2,2):{1}");
    let t3 = tab(TableauKind::EqSyt, ".,.,1/.,.,3 | e(1,3):{2}");
    assert_eq!(ejdt_weight(&t1, k).unwrap(), poly("t_1-t_4"));
    assert_eq!(ejdt_weight(&t2, k).unwrap(), poly("t_2-t_5"));
    assert_eq!(ejdt_weight(&t3, k).unwrap(), ZPoly::zero());
    let s21 = Tableau::superstandard(&[2, 1], false).to_grid().unwrap();
    for t in [&t1, &t2, &t3] {
        assert_eq!(erect(&t.to_grid().unwrap()).unwrap(), s21);
    }
    let plain = tab(TableauKind::EqSyt, ".,1/2");
    assert_eq!(ejdt_weight(&plain, 2).unwrap(), ZPoly::one());
}

#[test]
fn worked_eballot_weights() {
    let t1 = tab(TableauKind::EqSsyt, ".,.,1/.,.,2 | e(2,1):{1}");
    let t2 = tab(TableauKind::EqSsyt, ".,.,1/.,.,2 | e(2,2):{1}");
    assert_eq!(eballot_weight(&t1, 2).unwrap(), poly("t_1-t_4"));
    assert_eq!(eballot_weight(&t2, 2).unwrap(), poly("t_2-t_5"));
    assert_eq!(eballot_weight(&tab(TableauKind::EqSsyt, ".,1/2"), 2).unwrap(), ZPoly::one());
}

#[test]
fn trace_lines() {
    let g = grid(TableauKind::EqSyt, EXAMPLE_1_1);
    let lines = trace(&g, &Policy::Eastmost).unwrap();
    assert!(lines[0].starts_with("J4@{1,3}: "));
    assert!(lines[1].starts_with("J2@{2,2}: "));
    assert!(lines.iter().all(|l| l.len() > 10));
    let sh = grid(TableauKind::ShEqSyt, ".,.,3/. | e(1,1):{1} e(2,2):{2,4}");
    let lines = trace(&sh, &Policy::Southmost).unwrap();
    assert!(lines[0].starts_with("J4'@{2,2}: "));
    assert_eq!(trace(&g, &Policy::Eastmost).unwrap(), trace(&g, &Policy::Eastmost).unwrap());
}

fn replays(g: &Grid, policy: &Policy) -> Grid {
    let mut cur = *g;
    let mut step = 0;
    while let Some(corner) = next_corner(&cur, policy, step).unwrap() {
        let mut moves = Vec::new();
        let mut after = cur;
        let rest = slide(&mut after, corner, &mut |s| moves.push(*s)).unwrap();
        cur.inner[corner.0] -= 1;
        for m in &moves {
            apply_step(&mut cur, m);
        }
        if let Rest::Vacated((r, _)) = rest {
            cur.outer[r] -= 1;
        }
        assert_eq!(cur, after);
        step += 1;
    }
    cur
}

#[test]
fn replaying_moves_reproduces_the_result() {
    let g = grid(TableauKind::EqSyt, EXAMPLE_1_1);
    assert_eq!(replays(&g, &Policy::Eastmost), erect(&g).unwrap());
    let sh = grid(TableauKind::ShEqSyt, ".,.,3/. | e(2,2):{1,2,4}");
    assert_eq!(replays(&sh, &Policy::Southmost), sh_eq_rect(&sh).unwrap());
}

/// Rectifies by picking, at each step, the corner indexed by the next choice.
fn rectify_by_choices(g: &Grid, choices: &[usize]) -> Grid {
    let mut cur = *g;
    let mut i = 0;
    loop {
        let corners = cur.inner_corners();
        if corners.is_empty() {
            return cur;
        }
        let c = corners[choices.get(i).copied().unwrap_or(0) % corners.len()];
        slide(&mut cur, c, &mut |_| {}).unwrap();
        i += 1;
    }
}

fn all_skew_syt(shifted: bool, max: u32) -> Vec<Grid> {
    let mut out = Vec::new();
    if shifted {
        for nu in StrictPartition::all_in_staircase(4) {
            for lambda in StrictPartition::all_in_staircase(4) {
                if nu.size() <= max && nu.contains(&lambda) && nu != lambda {
                    let shape = SkewShape::shifted(&nu, &lambda).unwrap();
                    for_each_standard_filling(&shape, shape.size(), false, &mut |g| {
                        out.push(*g);
                        true
                    })
                    .unwrap();
                }
            }
        }
    } else {
        let parts = Partition::all_in(Rectangle::new(4, 4));
        for nu in parts.iter().filter(|p| p.size() <= max) {
            for lambda in parts.iter().filter(|p| nu.contains(p) && p != &nu) {
                let shape = SkewShape::ordinary(nu, lambda).unwrap();
                for_each_standard_filling(&shape, shape.size(), false, &mut |g| {
                    out.push(*g);
                    true
                })
                .unwrap();
            }
        }
    }
    out
}

#[test]
fn first_fundamental_theorem_exhaustive() {
    for shifted in [false, true] {
        for g in all_skew_syt(shifted, 6) {
            let a = rectify(&g, &Policy::Eastmost).unwrap();
            let b = rectify(&g, &Policy::Southmost).unwrap();
            assert_eq!(a, b);
            assert_eq!(a, rectify_by_choices(&g, &[1, 2, 1, 0, 2, 1]));
        }
    }
}

proptest! {
    #[test]
    fn rectification_ignores_corner_order(idx in 0usize..10_000, choices in proptest::collection::vec(0usize..4, 0..12), shifted: bool) {
        let all = all_skew_syt(shifted, 6);
        let g = all[idx % all.len()];
        prop_assert_eq!(rectify_by_choices(&g, &choices), rectify(&g, &Policy::Eastmost).unwrap());
    }
}

#[test]
fn second_fundamental_theorem() {
    let parts = Partition::all_in(Rectangle::new(4, 4));
    for nu in parts.iter().filter(|p| p.size() <= 6) {
        for lambda in parts.iter().filter(|p| nu.contains(p)) {
            let shape = SkewShape::ordinary(nu, lambda).unwrap();
            let mut counts: BTreeMap<Grid, u32> = BTreeMap::new();
            for_each_standard_filling(&shape, shape.size(), false, &mut |g| {
                *counts.entry(rectify(g, &Policy::Eastmost).unwrap()).or_default() += 1;
                true
            })
            .unwrap();
            let mut by_shape: BTreeMap<Vec<u32>, BTreeSet<u32>> = BTreeMap::new();
            let mut reached: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
            for (u, n) in &counts {
                let mu = u.shape().outer;
                by_shape.entry(mu.clone()).or_default().insert(*n);
                *reached.entry(mu).or_default() += 1;
            }
            for (mu, ns) in by_shape {
                assert_eq!(ns.len(), 1, "{nu}/{lambda} to {mu:?}");
                let shape = SkewShape { outer: mu.clone(), inner: vec![], shifted: false };
                let all_u = enumerate(TableauKind::Syt, &shape, &Fill::Standard).unwrap();
                assert_eq!(reached[&mu], all_u.len(), "{nu}/{lambda} to {mu:?}");
            }
        }
    }
    let shape = SkewShape::ordinary(&"3,2,1".parse().unwrap(), &"2,1".parse().unwrap()).unwrap();
    let mut n = BTreeMap::new();
    for_each_standard_filling(&shape, 3, false, &mut |g| {
        *n.entry(Tableau::from_grid(TableauKind::Syt, &rectify(g, &Policy::Eastmost).unwrap()).to_string()).or_insert(0) += 1;
        true
    })
    .unwrap();
    assert_eq!(n.get("1,2/3"), Some(&2));
    assert_eq!(n.get("1,3/2"), Some(&2));
}

fn sp(s: &str) -> StrictPartition {
    s.parse().unwrap()
}

/// Tableaux in `shEqSYT(nu/lambda, |mu|)` that rectify to `S_mu`.
fn f_set(lambda: &StrictPartition, mu: &StrictPartition, nu: &StrictPartition) -> Vec<Grid> {
    let mut out = Vec::new();
    if !nu.contains(lambda) {
        return out;
    }
    let target = Tableau::superstandard(mu.parts(), true).to_grid().unwrap();
    let shape = SkewShape::shifted(nu, lambda).unwrap();
    for_each_standard_filling(&shape, mu.size(), true, &mut |g| {
        if sh_eq_rect(g).unwrap() == target {
            out.push(*g);
        }
        true
    })
    .unwrap();
    out
}

#[test]
fn worked_d_tableaux() {
    let f = f_set(&sp("2,1"), &sp("3,1"), &sp("3,1"));
    let got: BTreeSet<String> = f.iter().map(|g| text(TableauKind::ShEqSyt, g)).collect();
    let want: BTreeSet<String> =
        [".,.,3/. | e(1,1):{1} e(2,2):{2,4}", ".,.,3/. | e(2,2):{1,2,4}"].iter().map(|s| s.to_string()).collect();
    assert_eq!(got, want);
}

fn ep(parts: &[u32], edges: &[u32]) -> EPartition {
    EPartition::new(parts.to_vec(), edges.to_vec()).unwrap()
}

#[test]
fn worked_growth_diagram() {
    let g = grid(TableauKind::ShEqSyt, ".,.,3/. | e(1,1):{1} e(2,2):{2,4}");
    let d = growth_diagram(&g, 4).unwrap();
    let want = "(2^0,1^0) (2^1,1^0) (2^1,1^1) (3^1,1^1) (3^1,1^2)\n\
                (2^0) (2^1) (2^1,1^0) (3^1,1^0) (3^1,1^1)\n\
                (1^0) (1^1) (2^1) (3^1) (3^1,1^0)\n\
                () (1^0) (2^0) (3^0) (3^0,1^0)";
    assert_eq!(d.to_text(), want);
    d.validate().unwrap();
    assert_eq!(d.reflect().reflect(), d);
    d.reflect().validate().unwrap();
}

#[test]
fn covers_and_joins() {
    let chain = [ep(&[2, 1], &[0, 0]), ep(&[2, 1], &[1, 0]), ep(&[2, 1], &[1, 1]), ep(&[3, 1], &[1, 1]), ep(&[3, 1], &[1, 2])];
    let pos: Vec<CoverPos> = chain.windows(2).map(|w| cover(&w[0], &w[1]).unwrap()).collect();
    assert_eq!(pos, vec![CoverPos::Edge(1), CoverPos::Edge(2), CoverPos::Box(1), CoverPos::Edge(2)]);
    assert_eq!(cover(&ep(&[2], &[1]), &ep(&[2, 1], &[1, 0])), Some(CoverPos::Box(2)));
    assert_eq!(cover(&ep(&[2], &[1]), &ep(&[3, 1], &[1, 0])), None);
    let a = ep(&[3, 1], &[1, 1]);
    let b = ep(&[3, 1], &[1, 2]);
    assert_eq!(a.join(&b), ep(&[3, 1], &[2, 3]));
    assert_eq!(EPartition::plain(&[3, 1]).join(&b), b);
}

#[test]
fn growth_diagrams_up_to_rho_3() {
    let all = StrictPartition::all_in_staircase(3);
    for lambda in &all {
        for mu in &all {
            for nu in &all {
                let f = f_set(lambda, mu, nu);
                for g in &f {
                    let d = growth_diagram(g, mu.size() as u8).unwrap();
                    d.validate().unwrap();
                    let r = d.reflect();
                    r.validate().unwrap();
                    let left: Vec<EPartition> = r.rows.iter().map(|row| row[0].clone()).collect();
                    assert_eq!(left.first().map(|e| e.parts.clone()), Some(mu.parts().to_vec()));
                }
                assert_eq!(count_growth(lambda, mu, nu).unwrap(), f.len() as u64, "{lambda} {mu} {nu}");
            }
        }
    }
}

#[test]
fn staircase_slides() {
    let u4 = u_n(4);
    let sets: Vec<Vec<u32>> = u4.iter().map(|s| s.iter().copied().collect()).collect();
    assert_eq!(sets, vec![vec![1], vec![2, 5], vec![3, 6, 8], vec![4, 7, 9, 10]]);
    let moved = slide_set(&u4, 3, &BTreeSet::from([6])).unwrap();
    assert_eq!(moved[2], BTreeSet::from([3, 8]));
    assert_eq!(moved[3], BTreeSet::from([4, 6, 7, 9, 10]));
    assert!(slide_set(&u4, 3, &BTreeSet::from([1])).is_err());
    let t: ESets = vec![
        BTreeSet::new(),
        BTreeSet::from([2]),
        BTreeSet::from([1, 3, 5, 6, 8]),
        BTreeSet::from([4, 7, 9, 10]),
    ];
    assert_eq!(slidable_candidates(&t, 3), BTreeSet::from([1, 5, 8]));
    assert!(n_slidable(&t, 3, &BTreeSet::from([1, 8])));
    assert!(!n_slidable(&t, 3, &BTreeSet::from([1, 3, 8])));
}

#[test]
fn staircase_rectification_matches_slide_sequences() {
    for n in 1..=4u32 {
        let nn = (n * (n + 1) / 2) as u8;
        let rho = StrictPartition::staircase(n);
        let target = Tableau::superstandard(rho.parts(), true).to_grid().unwrap();
        let shape = SkewShape::shifted(&rho, &rho).unwrap();
        let mut direct = BTreeSet::new();
        for_each_standard_filling(&shape, nn as u32, true, &mut |g| {
            if sh_eq_rect(g).unwrap() == target {
                direct.insert(e_sets(g, n as usize));
            }
            true
        })
        .unwrap();
        let generated = slidable_closure(n);
        assert_eq!(direct, generated, "n = {n}");
        assert_eq!(direct.len(), 1 << (n * (n - 1) / 2));
        for e in &generated {
            assert_eq!(e_sets(&to_grid(e).unwrap(), n as usize), *e);
        }
    }
}
