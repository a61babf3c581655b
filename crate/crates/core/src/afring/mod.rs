//! The ring `𝔓 = Z[z, c_1, c_2, ...] / (c_{p,p} : p > 0)` with its basis `σ_λ`, and the
//! comparison of its structure constants with the tableau-defined `D`.
//!
//! `c_{p,p} = ±2 c_{2p} + (terms in z and c_j, j < 2p)`, so over `Q` the quotient is the
//! polynomial ring in `z` and the odd `c`s. Normal forms eliminate the even generators by
//! recursive substitution; a second route spans the ideal slice of a given degree explicitly
//! and reduces by row operations.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::coeffs::{big_d, delta_and_l};
use crate::error::{Error, Result};
use crate::linalg::{pfaffian, rref, Q};
use crate::par::Exec;
use crate::poly::{Monomial, QPoly, Var, ZPoly};
use crate::shapes::StrictPartition;
use crate::tableaux::eyd::eyd_enumerate;

fn binom(m: i64, k: i64) -> i64 {
    if m < 0 || k < 0 || k > m {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (m - i) / (i + 1))
}

fn c(i: i64) -> ZPoly {
    match i {
        i if i < 0 => ZPoly::zero(),
        0 => ZPoly::one(),
        i => ZPoly::var(Var::c(i as u32)),
    }
}

fn z_pow(a: u32) -> Monomial {
    Monomial::from_pairs([(Var::z(), a)])
}

/// `c_{p,q} = Σ_{0<=a<=b<=q} (-1)^b (binom(b,a) + binom(b-1,a)) z^a c_{p+b-a} c_{q-b}`.
pub fn c_pq(p: u32, q: u32) -> ZPoly {
    let (p, q) = (p as i64, q as i64);
    let mut acc = ZPoly::zero();
    for b in 0..=q {
        for a in 0..=b {
            let coef = binom(b, a) + binom(b - 1, a);
            if coef == 0 {
                continue;
            }
            let sign = if b % 2 == 0 { 1 } else { -1 };
            let term = (c(p + b - a) * c(q - b)).mul_monomial(&z_pow(a as u32));
            acc += term.scale(&BigInt::from(sign * coef));
        }
    }
    acc
}

/// `σ_λ = Pf(c_{λ_i,λ_j})`, padding odd lengths with a zero part.
pub fn sigma(lambda: &StrictPartition) -> ZPoly {
    let mut parts = lambda.parts().to_vec();
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    let m = parts.len();
    let mut mat = vec![vec![ZPoly::zero(); m]; m];
    for i in 0..m {
        for j in i + 1..m {
            mat[i][j] = c_pq(parts[i], parts[j]);
            mat[j][i] = -mat[i][j].clone();
        }
    }
    pfaffian(&mat)
}

/// Weighted degree: `deg z = 1`, `deg c_i = i`.
pub fn weighted_degree(m: &Monomial) -> u32 {
    m.pairs()
        .iter()
        .map(|&(v, e)| match v.family {
            crate::poly::Family::C => v.index * e,
            _ => e,
        })
        .sum()
}

pub fn is_weighted_homogeneous(p: &ZPoly) -> bool {
    p.terms().map(|(m, _)| weighted_degree(m)).collect::<BTreeSet<_>>().len() <= 1
}

/// Monomials in `z, c_1, c_2, ...` of weighted degree `d`, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CMonomialSpace {
    pub degree: u32,
    pub monomials: Vec<Monomial>,
}

impl CMonomialSpace {
    /// All monomials, or only those in `z` and the odd `c`s.
    pub fn new(d: u32, odd_only: bool) -> CMonomialSpace {
        fn rec(rest: u32, max: u32, odd: bool, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if rest == 0 {
                out.push(cur.clone());
                return;
            }
            for i in (1..=max.min(rest)).rev() {
                if odd && i % 2 == 0 {
                    continue;
                }
                cur.push(i);
                rec(rest - i, i, odd, cur, out);
                cur.pop();
            }
        }
        let mut monomials = Vec::new();
        for a in 0..=d {
            let mut parts = Vec::new();
            rec(d - a, d - a, odd_only, &mut Vec::new(), &mut parts);
            for p in parts {
                let mut pairs: BTreeMap<Var, u32> = BTreeMap::new();
                if a > 0 {
                    pairs.insert(Var::z(), a);
                }
                for i in p {
                    *pairs.entry(Var::c(i)).or_default() += 1;
                }
                monomials.push(Monomial::from_pairs(pairs));
            }
        }
        monomials.sort();
        CMonomialSpace { degree: d, monomials }
    }
}

fn to_q(p: &ZPoly) -> QPoly {
    p.map_coeffs(|c| BigRational::from_integer(c.clone()))
}

/// Normal form of `c_{2p}` in `z` and the odd `c`s, memoized.
fn even_generator(p: u32) -> QPoly {
    static CACHE: OnceLock<Mutex<BTreeMap<u32, QPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&p) {
        return v.clone();
    }
    // c_{p,p} = 2 (-1)^p c_{2p} + rest, so c_{2p} = -(-1)^p rest / 2.
    let lead = ZPoly::var(Var::c(2 * p)).scale(&BigInt::from(if p.is_multiple_of(2) { 2 } else { -2 }));
    let rest = normal_form(&(c_pq(p, p) - lead));
    let half = BigRational::new(BigInt::from(if p.is_multiple_of(2) { -1 } else { 1 }), BigInt::from(2));
    let v = rest.scale(&half);
    cache.lock().unwrap().insert(p, v.clone());
    v
}

/// Normal form by recursive substitution of the even generators.
pub fn normal_form(f: &ZPoly) -> QPoly {
    let map: BTreeMap<Var, QPoly> = f
        .variables()
        .into_iter()
        .filter(|v| v.family == crate::poly::Family::C && v.index % 2 == 0)
        .map(|v| (v, even_generator(v.index / 2)))
        .collect();
    to_q(f).substitute(&map)
}

fn sigma_nf(lambda: &StrictPartition) -> QPoly {
    static CACHE: OnceLock<Mutex<BTreeMap<StrictPartition, QPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(lambda) {
        return v.clone();
    }
    let v = normal_form(&sigma(lambda));
    cache.lock().unwrap().insert(lambda.clone(), v.clone());
    v
}

/// Strict partitions of size at most `d`.
fn strict_up_to(d: u32) -> Vec<StrictPartition> {
    StrictPartition::all_in_staircase(d).into_iter().filter(|p| p.size() <= d).collect()
}

fn coefficients(lambda: &StrictPartition, mu: &StrictPartition, xs: Vec<Q>, basis: &[StrictPartition]) -> Result<BTreeMap<StrictPartition, ZPoly>> {
    let d = lambda.size() + mu.size();
    let mut out = BTreeMap::new();
    for (nu, x) in basis.iter().zip(xs) {
        if x.is_zero() {
            continue;
        }
        if !x.is_integer() {
            return Err(Error::Inconsistent(format!("coefficient {x} of sigma_{nu} in sigma_{lambda} sigma_{mu}")));
        }
        out.insert(nu.clone(), ZPoly::term(z_pow(d - nu.size()), x.to_integer()));
    }
    Ok(out)
}

/// For weight `w`: the strict partitions of `w`, the `z`-free odd monomials of weight `w`,
/// and the inverse of the matrix taking the first to the `z = 0` parts of their `σ` normal forms.
struct WeightSolver {
    shapes: Vec<StrictPartition>,
    index: BTreeMap<Monomial, usize>,
    inverse: Vec<Vec<Q>>,
}

fn weight_solver(w: u32) -> Result<std::sync::Arc<WeightSolver>> {
    type Cache = Mutex<BTreeMap<u32, std::sync::Arc<WeightSolver>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(s) = cache.lock().unwrap().get(&w) {
        return Ok(s.clone());
    }
    let shapes: Vec<StrictPartition> = strict_up_to(w).into_iter().filter(|p| p.size() == w).collect();
    let monos: Vec<Monomial> = CMonomialSpace::new(w, true)
        .monomials
        .into_iter()
        .filter(|m| m.exponent(Var::z()) == 0)
        .collect();
    if monos.len() != shapes.len() {
        return Err(Error::Inconsistent(format!("weight {w}: {} monomials, {} shapes", monos.len(), shapes.len())));
    }
    let index: BTreeMap<Monomial, usize> = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let cols: Vec<QPoly> = shapes.iter().map(|nu| z_free_part(&sigma_nf(nu))).collect();
    let a: Vec<Vec<Q>> = monos.iter().map(|m| cols.iter().map(|c| c.coeff(m)).collect()).collect();
    let n = shapes.len();
    let mut aug: Vec<Vec<Q>> = a
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    if rref(&mut aug) != (0..n).collect::<Vec<_>>() {
        return Err(Error::RankDeficient);
    }
    let inverse: Vec<Vec<Q>> = aug.into_iter().map(|row| row[n..].to_vec()).collect();
    let s = std::sync::Arc::new(WeightSolver { shapes, index, inverse });
    cache.lock().unwrap().insert(w, s.clone());
    Ok(s)
}

fn z_free_part(p: &QPoly) -> QPoly {
    p.terms()
        .filter(|(m, _)| m.exponent(Var::z()) == 0)
        .map(|(m, c)| QPoly::term(m.clone(), c.clone()))
        .sum()
}

/// `σ_λ σ_μ = Σ_ν 𝔇_{λ,μ}^ν σ_ν` over all strict `ν`, using normal forms.
///
/// The expansion peels off one power of `z` at a time: the `z^j` part of what remains is
/// matched against the `z = 0` parts of `z^j σ_ν`, `|ν| = |λ|+|μ|-j`. The remainder must
/// vanish at the end.
pub fn expand_product(lambda: &StrictPartition, mu: &StrictPartition) -> Result<BTreeMap<StrictPartition, ZPoly>> {
    let d = lambda.size() + mu.size();
    let mut rest = &sigma_nf(lambda) * &sigma_nf(mu);
    let mut shapes = Vec::new();
    let mut xs = Vec::new();
    for j in 0..=d {
        let solver = weight_solver(d - j)?;
        let mut b = vec![Q::zero(); solver.shapes.len()];
        for (m, c) in rest.terms() {
            if m.exponent(Var::z()) != j {
                continue;
            }
            let (_, cpart) = m.split(|v| v.family == crate::poly::Family::Z);
            let i = solver.index.get(&cpart).ok_or_else(|| Error::NotInSpan(rest.to_string()))?;
            b[*i] = c.clone();
        }
        let zj = z_pow(j);
        for (row, nu) in solver.inverse.iter().zip(&solver.shapes) {
            let x: Q = row.iter().zip(&b).map(|(r, v)| r * v).sum();
            if !x.is_zero() {
                rest -= sigma_nf(nu).mul_monomial(&zj).scale(&x);
            }
            shapes.push(nu.clone());
            xs.push(x);
        }
    }
    if !rest.is_zero() {
        return Err(Error::NotInSpan(rest.to_string()));
    }
    coefficients(lambda, mu, xs, &shapes)
}

/// Coordinates of `f` on `space`.
fn coords(f: &ZPoly, space: &[Monomial], index: &BTreeMap<&Monomial, usize>) -> Result<Vec<Q>> {
    let mut v = vec![Q::zero(); space.len()];
    for (m, c) in f.terms() {
        let i = index
            .get(m)
            .ok_or_else(|| Error::Inconsistent(format!("{m} is outside the degree slice")))?;
        v[*i] = BigRational::from_integer(c.clone());
    }
    Ok(v)
}

/// Like [`expand_product`], but reducing modulo the explicit span of `m · c_{p,p}` in the
/// degree `|λ|+|μ|` slice.
pub fn expand_product_by_slice(
    lambda: &StrictPartition,
    mu: &StrictPartition,
) -> Result<BTreeMap<StrictPartition, ZPoly>> {
    let d = lambda.size() + mu.size();
    let space = CMonomialSpace::new(d, false).monomials;
    let index: BTreeMap<&Monomial, usize> = space.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut ideal = Vec::new();
    for p in 1..=d / 2 {
        let g = c_pq(p, p);
        for m in CMonomialSpace::new(d - 2 * p, false).monomials {
            ideal.push(coords(&g.mul_monomial(&m), &space, &index)?);
        }
    }
    let pivots = rref(&mut ideal);
    let ideal: Vec<Vec<Q>> = ideal.into_iter().take(pivots.len()).collect();
    let reduce = |mut v: Vec<Q>| {
        for (row, &col) in ideal.iter().zip(&pivots) {
            if !v[col].is_zero() {
                let f = v[col].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x -= &f * r;
                }
            }
        }
        v
    };
    let basis = strict_up_to(d);
    let mut cols = Vec::new();
    for nu in &basis {
        cols.push(reduce(coords(&sigma(nu).mul_monomial(&z_pow(d - nu.size())), &space, &index)?));
    }
    let target = reduce(coords(&(sigma(lambda) * sigma(mu)), &space, &index)?);
    let a: Vec<Vec<Q>> = (0..space.len()).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    if crate::linalg::rank(&a) < basis.len() {
        return Err(Error::RankDeficient);
    }
    let xs = crate::linalg::solve(&a, &target)
        .ok_or_else(|| Error::NotInSpan(format!("sigma_{lambda} sigma_{mu}")))?;
    coefficients(lambda, mu, xs, &basis)
}

/// `𝔇_{λ,μ}^ν`.
pub fn frak_big_d(lambda: &StrictPartition, mu: &StrictPartition, nu: &StrictPartition) -> Result<ZPoly> {
    Ok(expand_product(lambda, mu)?.remove(nu).unwrap_or_default())
}

/// `𝔡_{λ,μ}^λ = 𝔇_{λ,μ}^λ / (2^{L-Δ} z^Δ)` from the ring.
pub fn frak_d_diagonal(lambda: &StrictPartition, mu: &StrictPartition) -> Result<BigRational> {
    let big = frak_big_d(lambda, mu, lambda)?;
    let (delta, l) = delta_and_l(lambda, mu, lambda);
    let c = big.coeff(&z_pow(delta.max(0) as u32));
    if big.len() > 1 || (big.len() == 1 && c.is_zero()) {
        return Err(Error::Inconsistent(format!("D_{{{lambda},{mu}}}^{{{lambda}}} = {big} is not a multiple of z^{delta}")));
    }
    Ok(BigRational::from_integer(c) / crate::coeffs::pow2(l - delta))
}

/// `#E_{ρ_{ℓ(λ)}}(μ) · 2^{|μ|-ℓ(μ)}`.
pub fn eyd_shortcut(lambda: &StrictPartition, mu: &StrictPartition) -> BigRational {
    let count = eyd_enumerate(&StrictPartition::staircase(lambda.len() as u32), mu).len();
    BigRational::from_integer(BigInt::from(count)) * crate::coeffs::pow2(mu.size() as i64 - mu.len() as i64)
}

/// Checks the binomial convention once: `c_{2,1}` at `z = 0` must be `c_2 c_1 - 2 c_3`, and
/// `σ_1^2 = z σ_1 + 2 σ_2`.
pub fn check_conventions() -> Result<()> {
    static DONE: OnceLock<std::result::Result<(), Error>> = OnceLock::new();
    DONE.get_or_init(|| {
        let at_zero: ZPoly = c_pq(2, 1)
            .terms()
            .filter(|(m, _)| m.exponent(Var::z()) == 0)
            .map(|(m, c)| ZPoly::term(m.clone(), c.clone()))
            .sum();
        if at_zero != c(2) * c(1) - c(3).scale(&BigInt::from(2)) {
            return Err(Error::Inconsistent(format!("c_(2,1) at z=0 is {at_zero}")));
        }
        let one = StrictPartition::new(vec![1])?;
        let prod = expand_product(&one, &one)?;
        let expect = BTreeMap::from([
            (one.clone(), ZPoly::var(Var::z())),
            (StrictPartition::new(vec![2])?, ZPoly::from_i64(2)),
        ]);
        if prod != expect {
            return Err(Error::Inconsistent(format!("sigma_1^2 expands as {prod:?}")));
        }
        Ok(())
    })
    .clone()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CompareRow {
    pub lambda: StrictPartition,
    pub mu: StrictPartition,
    pub nu: StrictPartition,
    pub ring: String,
    pub tableaux: String,
    pub agree: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CompareReport {
    pub n: u32,
    pub checked: usize,
    pub mismatches: Vec<CompareRow>,
    /// Terms `𝔇_{λ,μ}^ν σ_ν` with `ν ⊄ ρ_n`, which the truncation drops.
    pub outside: Vec<String>,
    /// Whether every `𝔇` has nonnegative coefficients.
    pub nonnegative: bool,
}

impl CompareReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.nonnegative
    }
}

/// `𝔇_{λ,μ}^ν` against `D_{λ,μ}^ν` for all `λ, μ, ν ⊆ ρ_n`.
pub fn compare_d(n: u32, exec: Exec) -> Result<CompareReport> {
    check_conventions()?;
    let shapes = StrictPartition::all_in_staircase(n);
    let mut pairs = Vec::new();
    for l in &shapes {
        for m in &shapes {
            pairs.push((l.clone(), m.clone()));
        }
    }
    let results = exec.try_map(&pairs, |(l, m)| -> Result<(Vec<CompareRow>, Vec<String>, bool)> {
        let ring = expand_product(l, m)?;
        let mut rows = Vec::new();
        let mut outside = Vec::new();
        let nonneg = ring.values().all(|p| p.terms().all(|(_, c)| !c.is_negative()));
        for (nu, v) in &ring {
            if !nu.in_staircase(n) {
                outside.push(format!("{l} * {m}: ({v}) sigma_{nu}"));
            }
        }
        for nu in &shapes {
            let a = ring.get(nu).cloned().unwrap_or_default();
            let b = big_d(l, m, nu, n)?;
            let agree = a.to_rational() == b;
            rows.push(CompareRow {
                lambda: l.clone(),
                mu: m.clone(),
                nu: nu.clone(),
                ring: a.to_string(),
                tableaux: b.to_string(),
                agree,
            });
        }
        Ok((rows, outside, nonneg))
    })?;
    let mut rep = CompareReport { n, nonnegative: true, ..CompareReport::default() };
    for (rows, outside, nonneg) in results {
        rep.checked += rows.len();
        rep.mismatches.extend(rows.into_iter().filter(|r| !r.agree));
        rep.outside.extend(outside);
        rep.nonnegative &= nonneg;
    }
    Ok(rep)
}

/// `σ_λ σ_μ` for nonempty `λ <= μ` inside `ρ_n`, restricted to `ν ⊆ ρ_n`, in the layout of
/// [`crate::coeffs::star_table`].
pub fn ring_star_table(n: u32, exec: Exec) -> Result<Vec<crate::coeffs::StarRow>> {
    let mut shapes = StrictPartition::all_in_staircase(n);
    shapes.retain(|p| !p.is_empty());
    shapes.sort();
    let mut pairs = Vec::new();
    for (i, l) in shapes.iter().enumerate() {
        for m in &shapes[i..] {
            pairs.push((l.clone(), m.clone()));
        }
    }
    exec.try_map(&pairs, |(l, m)| {
        let product = expand_product(l, m)?
            .into_iter()
            .filter(|(nu, _)| nu.in_staircase(n))
            .map(|(nu, v)| (nu, v.to_rational()))
            .collect();
        Ok(crate::coeffs::StarRow { lambda: l.clone(), mu: m.clone(), product })
    })
}

#[cfg(test)]
mod tests;
