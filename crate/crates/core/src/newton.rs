//! Newton polytopes and saturated Newton polytopes (SNP).

use std::collections::BTreeSet;

use num_traits::One;

use crate::linalg::{nonnegative_feasible, q, Q};
use crate::poly::{Coeff, Poly, Var};

/// Exponent vectors of the support, in the coordinates given by `vars`.
pub fn newton_support<C: Coeff>(p: &Poly<C>, vars: &[Var]) -> BTreeSet<Vec<u32>> {
    p.terms()
        .map(|(m, _)| vars.iter().map(|&v| m.exponent(v)).collect())
        .collect()
}

/// Whether the lattice point `x` lies in the convex hull of `pts`.
pub fn in_convex_hull(pts: &[Vec<u32>], x: &[u32]) -> bool {
    if pts.is_empty() {
        return false;
    }
    let dim = x.len();
    let mut a: Vec<Vec<Q>> = (0..dim)
        .map(|i| pts.iter().map(|p| q(p[i] as i64)).collect())
        .collect();
    a.push(vec![Q::one(); pts.len()]);
    let mut b: Vec<Q> = x.iter().map(|&v| q(v as i64)).collect();
    b.push(Q::one());
    nonnegative_feasible(&a, &b)
}

/// A polynomial has SNP when every lattice point of its Newton polytope is an exponent
/// vector of the support.
pub fn is_snp<C: Coeff>(p: &Poly<C>) -> bool {
    snp_witness(p).is_none()
}

/// A lattice point in the Newton polytope that is missing from the support, if any.
pub fn snp_witness<C: Coeff>(p: &Poly<C>) -> Option<Vec<u32>> {
    let vars: Vec<Var> = p.variables().into_iter().collect();
    let support = newton_support(p, &vars);
    if support.len() <= 1 {
        return None;
    }
    let pts: Vec<Vec<u32>> = support.iter().cloned().collect();
    let lo: Vec<u32> = (0..vars.len()).map(|i| pts.iter().map(|p| p[i]).min().unwrap()).collect();
    let hi: Vec<u32> = (0..vars.len()).map(|i| pts.iter().map(|p| p[i]).max().unwrap()).collect();
    let degs: BTreeSet<u32> = pts.iter().map(|p| p.iter().sum()).collect();
    let homogeneous = degs.len() == 1;
    let mut cur = lo.clone();
    loop {
        let skip = homogeneous && !degs.contains(&cur.iter().sum());
        if !skip && !support.contains(&cur) && in_convex_hull(&pts, &cur) {
            return Some(cur);
        }
        let mut i = 0;
        loop {
            if i == cur.len() {
                return None;
            }
            if cur[i] < hi[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = lo[i];
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ZPoly;

    #[test]
    fn snp_examples() {
        let a: ZPoly = "x_1^2+x_2^2".parse().unwrap();
        assert!(!is_snp(&a));
        assert_eq!(snp_witness(&a), Some(vec![1, 1]));
        let b: ZPoly = "b_1+2*b_2".parse().unwrap();
        assert!(is_snp(&b));
        let c: ZPoly = "(x_1+x_2)^3".parse().unwrap();
        assert!(is_snp(&c));
        let d: ZPoly = "x_1^2*x_2^2 + x_3^4".parse().unwrap();
        assert!(!is_snp(&d));
    }
}
