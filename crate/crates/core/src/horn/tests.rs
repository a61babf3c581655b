use proptest::prelude::*;

use super::*;
use crate::coeffs::lr_polytope_points;
use crate::poly::ZPoly;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn sp(s: &str) -> StrictPartition {
    s.parse().unwrap()
}

#[test]
fn horn_lists_small_ranks() {
    assert!(horn_list(1, HornMode::Nonzero).unwrap().inequalities.is_empty());
    let two = horn_list(2, HornMode::Nonzero).unwrap();
    let triples: Vec<_> = two.inequalities.iter().map(|h| (h.i.clone(), h.j.clone(), h.k.clone())).collect();
    // τ({1}) = ∅ and τ({2}) = (1): the nonzero c's are ∅∅∅, ∅(1)(1) and (1)∅(1).
    assert_eq!(
        triples,
        vec![(vec![1], vec![1], vec![1]), (vec![1], vec![2], vec![2]), (vec![2], vec![1], vec![2])]
    );
    let full = horn_list(3, HornMode::Nonzero).unwrap();
    let bel = horn_list(3, HornMode::Belkale).unwrap();
    assert!(bel.inequalities.iter().all(|h| full.inequalities.contains(h)));
    assert!(full.inequalities.iter().all(|h| h.i.len() < 3 && h.witness > 0));
    assert!(bel.inequalities.iter().all(|h| h.witness == 1));
}

#[test]
fn classical_examples() {
    for m in [Decider::Direct, Decider::Horn] {
        assert!(classical_nonvanishing(&p("2,1"), &p("2,1"), &p("3,2,1"), 3, m).unwrap());
        assert!(!classical_nonvanishing(&p("2,1"), &p("1"), &p("3,2"), 3, m).unwrap());
        assert!(!classical_nonvanishing(&p("1"), &p("1"), &p(""), 3, m).unwrap());
    }
}

#[test]
fn equivariant_examples() {
    for m in [Decider::Direct, Decider::Horn] {
        assert!(equiv_nonvanishing(&p("1"), &p("1"), &p("1"), 2, m).unwrap());
        assert!(!equiv_nonvanishing(&p("1"), &p("1"), &p(""), 2, m).unwrap());
        assert!(!equiv_nonvanishing(&p("2"), &p("1"), &p("1,1"), 2, m).unwrap());
    }
}

#[test]
fn eq_nonzero_matches_eq_c() {
    let rect = Rectangle::new(2, 3);
    for (l, m, n) in all_triples(rect) {
        let c = eq_c(&l, &m, &n, rect, EqMethod::Eballot).unwrap();
        assert_eq!(eq_nonzero(&l, &m, &n, 2).unwrap(), !c.is_zero(), "{l} {m} {n}");
    }
}

#[test]
fn classical_horn_equivalence() {
    for r in 1..=3 {
        let scan = classical_horn_scan(r, 4, Exec::Parallel).unwrap();
        assert!(scan.passed(), "{:?}", scan.mismatches());
    }
}

#[test]
fn equivariant_horn_equivalence() {
    for r in 1..=3 {
        let scan = equiv_horn_scan(r, 3, Exec::Parallel).unwrap();
        assert!(scan.passed(), "{:?}", scan.mismatches());
    }
}

#[test]
fn belkale_list_suffices() {
    let scan = belkale_scan(3, 4, Exec::Parallel).unwrap();
    assert!(scan.passed(), "{:?}", scan.mismatches());
    // Witnesses above 1 first occur for d = 3 inside 3x3, so the lists differ from r = 6.
    let len = |r, m| horn_list(r, m).unwrap().inequalities.len();
    assert_eq!(len(4, HornMode::Belkale), len(4, HornMode::Nonzero));
    assert!(len(6, HornMode::Belkale) < len(6, HornMode::Nonzero));
}

#[test]
fn saturation_scans() {
    let c = saturation_scan(CoeffKind::Lr, Rectangle::new(3, 3), 3, Exec::Parallel).unwrap();
    assert!(c.passed(), "{:?}", c.mismatches());
    let big_c = saturation_scan(CoeffKind::EqLr, Rectangle::new(2, 2), 3, Exec::Parallel).unwrap();
    assert!(big_c.passed(), "{:?}", big_c.mismatches());
}

#[test]
fn shifted_doubling_scan() {
    let scan = shifted_saturation_scan(3, 2, Exec::Parallel).unwrap();
    let row = scan.rows.iter().find(|r| r.triple == [vec![2, 1], vec![2], vec![3, 2]]).unwrap();
    assert!(row.verdict_a && row.verdict_b);
    // The scan does find a failure, in the other direction: o = 0 but the doubled o = 8.
    let bad: Vec<_> = scan.mismatches().into_iter().map(|r| r.triple.clone()).collect();
    assert_eq!(bad, vec![[vec![2, 1], vec![2, 1], vec![3, 2, 1]]]);
    let (l, m, n) = (sp("4,2"), sp("4,2"), sp("6,4,2"));
    assert_eq!(shifted_o(&l, &m, &n, 6, ShiftedMethod::Jdt).unwrap(), 8);
    assert_eq!(shifted_o(&l, &m, &n, 6, ShiftedMethod::Ballot).unwrap(), 8);
}

#[test]
fn semigroups_close() {
    for kind in [CoeffKind::Lr, CoeffKind::EqLr] {
        let scan = semigroup_scan(kind, 2, 2, Exec::Parallel).unwrap();
        assert!(scan.passed(), "{kind:?}: {:?}", scan.mismatches());
        let zero = [vec![], vec![], vec![]];
        assert!(scan.rows.iter().any(|r| r.note.as_deref().is_some_and(|n| n.starts_with("[(), (), ()]"))));
        assert!(scan.rows.iter().any(|r| r.triple != zero));
    }
}

#[test]
fn purbhoo_sottile_statistic_example() {
    let alpha = p("3,2,1");
    assert_eq!(crate::shapes::horn_index_set(6, 3, &alpha).unwrap(), vec![1, 3, 5]);
    assert_eq!(ps_statistic(&sp("6,4,3,1"), &alpha, 3, 6).unwrap(), 3);
}

#[test]
fn purbhoo_sottile_equivalence() {
    for n in 1..=4 {
        let scan = purbhoo_sottile_scan(n, Exec::Parallel).unwrap();
        assert!(scan.passed(), "n={n}: {:?}", scan.mismatches());
        assert!(scan.rows.iter().any(|r| r.verdict_a));
    }
}

#[test]
fn complement_sizes() {
    for v in StrictPartition::all_in_staircase(4) {
        assert_eq!(v.size() + shifted_complement(&v, 4).unwrap().size(), 10);
    }
}

#[test]
fn monical_rho_4() {
    let scan = monical_scan(4, Exec::Parallel).unwrap();
    assert!(scan.passed(), "{:?}", scan.mismatches());
}

#[test]
fn monical_small_ranks() {
    for n in 2..=3 {
        let scan = monical_scan(n, Exec::Parallel).unwrap();
        assert!(scan.passed(), "n={n}: {:?}", scan.mismatches());
        for r in &scan.rows {
            let size: u32 = r.triple.iter().flatten().sum();
            if size < n * (n + 1) / 2 {
                assert!(!r.verdict_a);
            }
        }
    }
}

#[test]
fn snp_small() {
    let scan = snp_scan(Rectangle::new(2, 2), Exec::Parallel).unwrap();
    assert!(scan.passed(), "{:?}", scan.mismatches());
    let c = eq_c(&p("2,2"), &p("2,1"), &p("3,3"), Rectangle::new(2, 3), EqMethod::Eballot).unwrap();
    let b = c.t_to_beta().unwrap();
    let expect: ZPoly = "b_1+2*b_2+2*b_3+b_4".parse().unwrap();
    assert_eq!(b, expect);
    assert!(is_snp(&b));
}

proptest! {
    #[test]
    fn stretching_keeps_polytope_points(
        l in proptest::collection::vec(0u32..4, 3),
        m in proptest::collection::vec(0u32..4, 3),
        extra in proptest::collection::vec(0u32..3, 3),
        n in 2u32..5,
    ) {
        let sorted = |mut v: Vec<u32>| { v.sort_unstable_by(|a, b| b.cmp(a)); Partition::new(v).unwrap() };
        let lambda = sorted(l);
        let mu = sorted(m);
        let nu_raw: Vec<u32> = (0..3).map(|i| lambda.part(i + 1) + extra[i]).collect();
        let nu = sorted(nu_raw);
        for pt in lr_polytope_points(&lambda, &mu, &nu) {
            prop_assert!(stretch_preserves(&lambda, &mu, &nu, &pt, n));
        }
    }
}

