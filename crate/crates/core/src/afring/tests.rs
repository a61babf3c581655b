use super::*;
use crate::coeffs::{d_coeff, format_star, q_pair, star_table};

fn sp(s: &str) -> StrictPartition {
    s.parse().unwrap()
}

fn zp(s: &str) -> ZPoly {
    s.parse().unwrap()
}

#[test]
fn c_pq_small_cases() {
    for p in 0..5 {
        assert_eq!(c_pq(p, 0), c(p as i64));
    }
    assert_eq!(c_pq(1, 1), zp("c_1^2 - 2*c_2 - z*c_1"));
    for p in 0..6 {
        for q in 0..6 {
            let f = c_pq(p, q);
            assert!(f.terms().all(|(m, _)| weighted_degree(m) == p + q), "c_({p},{q})");
        }
    }
    check_conventions().unwrap();
}

fn at_z0(f: &ZPoly) -> ZPoly {
    f.terms()
        .filter(|(m, _)| m.exponent(Var::z()) == 0)
        .map(|(m, c)| ZPoly::term(m.clone(), c.clone()))
        .sum()
}

#[test]
fn z_zero_matches_q_pairs() {
    // With c_r in the role of q_r, the z = 0 part of c_{r,s} has the shape of Q_{(r,s)}.
    // Compare both after substituting q_r(x_1, x_2, x_3) for c_r.
    let n = 3;
    let map: BTreeMap<Var, ZPoly> = (1..=8).map(|r| (Var::c(r), crate::coeffs::schur_q(&StrictPartition::new(vec![r]).unwrap(), n).unwrap())).collect();
    for r in 1..=4 {
        for s in 0..r {
            assert_eq!(at_z0(&c_pq(r, s)).substitute(&map), q_pair(r, s, n).unwrap(), "({r},{s})");
        }
    }
}

#[test]
fn sigma_small_cases() {
    assert_eq!(sigma(&StrictPartition::empty()), ZPoly::one());
    assert_eq!(sigma(&sp("3")), c(3));
    assert_eq!(sigma(&sp("2,1")), c_pq(2, 1));
    for l in StrictPartition::all_in_staircase(4) {
        let s = sigma(&l);
        assert!(is_weighted_homogeneous(&s));
        assert!(s.terms().all(|(m, _)| weighted_degree(m) == l.size()));
    }
}

#[test]
fn monomial_spaces() {
    let all = CMonomialSpace::new(4, false);
    // z^a times a partition of 4 - a: 5 + 3 + 2 + 1 + 1.
    assert_eq!(all.monomials.len(), 12);
    let odd = CMonomialSpace::new(4, true);
    let strict = StrictPartition::all_in_staircase(4).into_iter().filter(|p| p.size() <= 4).count();
    assert_eq!(odd.monomials.len(), strict);
    let set: BTreeSet<_> = all.monomials.iter().collect();
    assert_eq!(set.len(), all.monomials.len());
}

#[test]
fn normal_form_kills_relations() {
    for p in 1..5 {
        assert!(normal_form(&c_pq(p, p)).is_zero());
        assert!(normal_form(&c_pq(p, p).mul_monomial(&Monomial::var(Var::c(1)))).is_zero());
    }
}

#[test]
fn unit_and_square_of_one() {
    let one = sp("1");
    let prod = expand_product(&one, &one).unwrap();
    assert_eq!(prod, BTreeMap::from([(one.clone(), zp("z")), (sp("2"), zp("2"))]));
    for l in StrictPartition::all_in_staircase(3) {
        let prod = expand_product(&l, &StrictPartition::empty()).unwrap();
        assert_eq!(prod, BTreeMap::from([(l.clone(), ZPoly::one())]));
    }
}

#[test]
fn two_routes_agree() {
    for l in StrictPartition::all_in_staircase(3) {
        for m in StrictPartition::all_in_staircase(3) {
            if l.size() + m.size() > 8 {
                continue;
            }
            assert_eq!(expand_product(&l, &m).unwrap(), expand_product_by_slice(&l, &m).unwrap(), "{l} {m}");
        }
    }
}

#[test]
fn diagonal_values() {
    for n in 1..=3 {
        let rho = StrictPartition::staircase(n);
        let want = BigRational::from_integer(BigInt::one() << (n * (n - 1) / 2));
        assert_eq!(frak_d_diagonal(&rho, &rho).unwrap(), want);
        assert_eq!(eyd_shortcut(&rho, &rho), want);
    }
    for lambda in StrictPartition::all_in_staircase(4) {
        for mu in StrictPartition::all_in_staircase(4) {
            if mu.len() > lambda.len() || mu.is_empty() {
                continue;
            }
            let ring = frak_d_diagonal(&lambda, &mu).unwrap();
            assert_eq!(ring, eyd_shortcut(&lambda, &mu), "{lambda} {mu}");
            if mu.len() == 1 {
                let (l, p) = (lambda.len() as i64, mu.part(1) as i64);
                let expect = BigRational::from_integer(BigInt::from(binom(l, p))) * crate::coeffs::pow2(p - 1);
                assert_eq!(ring, expect);
                assert_eq!(BigRational::from_integer(d_coeff(&lambda, &mu, &lambda, 4).unwrap().into()), expect);
            }
            if mu.len() == lambda.len() && mu.in_staircase(lambda.len() as u32) {
                assert_eq!(ring, crate::coeffs::pow2(mu.size() as i64 - mu.len() as i64));
            }
        }
    }
    let lambda = sp("4,2,1");
    assert_eq!(frak_big_d(&lambda, &sp("2"), &lambda).unwrap(), zp("3*z^2"));
}

#[test]
fn ring_matches_tableaux_up_to_rho_3() {
    for n in 1..=3 {
        let rep = compare_d(n, Exec::Parallel).unwrap();
        assert!(rep.passed(), "n={n}: {:?}", rep.mismatches);
    }
}

#[test]
fn ring_reproduces_star_table() {
    let ring = ring_star_table(3, Exec::Parallel).unwrap();
    let tab = star_table(3, Exec::Parallel).unwrap();
    assert_eq!(ring.len(), 28);
    for (a, b) in ring.iter().zip(&tab) {
        assert_eq!(format_star(&a.product), format_star(&b.product));
    }
}

#[test]
fn empty_factor_is_identity() {
    let rep = compare_d(2, Exec::Sequential).unwrap();
    assert!(rep.passed());
    assert_eq!(rep.checked, 4 * 4 * 4);
}

