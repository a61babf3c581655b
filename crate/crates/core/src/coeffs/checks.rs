//! Consistency checks run over computed tables and the embedded fixtures.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Result;
use crate::par::Exec;
use crate::poly::{QPoly, Var, ZPoly};
use crate::jdt::{count_growth, e_sets, growth_diagram, sh_eq_rect, slidable_closure};
use crate::shapes::{wt_y_skew, wt_z_skew, Partition, SkewShape, StrictPartition};
use crate::tableaux::{for_each_standard_filling, Tableau};

use super::table::d_table;
use super::{assemble_d, pow2, CoeffTable, Context};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(name: &str) -> Report {
        Report { name: name.into(), ..Report::default() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

type Key = (Vec<u32>, Vec<u32>, Vec<u32>);

fn get(map: &BTreeMap<Key, QPoly>, l: &Partition, m: &Partition, n: &Partition) -> QPoly {
    map.get(&(l.parts().to_vec(), m.parts().to_vec(), n.parts().to_vec()))
        .cloned()
        .unwrap_or_default()
}

fn grassmannian_shapes(table: &CoeffTable) -> Vec<Partition> {
    match table.context {
        Context::Grassmannian(r) => Partition::all_in(r),
        Context::Shifted(_) => Vec::new(),
    }
}

/// `Σ_ν C_{λ,μ}^ν C_{ν,(1)}^κ = Σ_ν C_{μ,(1)}^ν C_{λ,ν}^κ` for every `λ, μ, κ`.
pub fn associativity_check(table: &CoeffTable) -> Report {
    let mut rep = Report::new("associativity against the divisor class");
    if table.rows.is_empty() {
        return rep;
    }
    let map = table.lookup();
    let shapes = grassmannian_shapes(table);
    let one = Partition::new(vec![1]).unwrap();
    for l in &shapes {
        for m in &shapes {
            for k in &shapes {
                let mut lhs = QPoly::zero();
                let mut rhs = QPoly::zero();
                for v in &shapes {
                    lhs += &get(&map, l, m, v) * &get(&map, v, &one, k);
                    rhs += &get(&map, m, &one, v) * &get(&map, l, v, k);
                }
                rep.record(lhs == rhs, || format!("λ={l} μ={m} κ={k}: {lhs} vs {rhs}"));
            }
        }
    }
    rep
}

/// Multiplying by `ξ_(1)` gives a diagonal term, nonzero unless `λ` is empty, plus every
/// `λ^+` with coefficient one.
pub fn pieri_check(table: &CoeffTable) -> Report {
    let mut rep = Report::new("equivariant Pieri rule");
    if table.rows.is_empty() {
        return rep;
    }
    let map = table.lookup();
    let shapes = grassmannian_shapes(table);
    let one = Partition::new(vec![1]).unwrap();
    for l in &shapes {
        let plus = l.addable();
        for v in &shapes {
            let c = get(&map, l, &one, v);
            if v == l {
                rep.record(c.is_zero() == l.is_empty(), || format!("diagonal term at {l} is {c}"));
            } else if plus.contains(v) {
                rep.record(c == QPoly::one(), || format!("C_{{{l},(1)}}^{{{v}}} = {c}, expected 1"));
            } else {
                rep.record(c.is_zero(), || format!("C_{{{l},(1)}}^{{{v}}} = {c}, expected 0"));
            }
        }
    }
    rep
}

/// One row of the reference `n = 2` table of `O` and `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OlRow {
    pub lambda: StrictPartition,
    pub mu: StrictPartition,
    pub nu: StrictPartition,
    pub o: &'static str,
    pub l: &'static str,
}

const OL_TABLE: &[(&str, &str, &str, &str, &str)] = &[
    ("1", "1", "1", "g_1", "a_1"),
    ("1", "1", "1", "g_1", "a_1"),
    ("1", "1", "2", "1", "2"),
    ("1", "2", "2", "g_1+g_2", "a_1+2*a_2"),
    ("2", "1", "2", "g_1+g_2", "a_1+2*a_2"),
    ("2", "2", "2", "g_1*g_2+a_2^2", "a_1*a_2+2*a_2^2"),
    ("1", "2", "2,1", "1", "1"),
    ("1", "2,1", "2,1", "2*g_1+g_2", "2*a_1+2*a_2"),
    ("2", "1", "2,1", "1", "1"),
    ("2", "2", "2,1", "2*g_1+2*g_2", "a_1+2*a_2"),
    ("2", "2,1", "2,1", "2*g_1^2+3*g_1*g_2+g_2^2", "a_1^2+3*a_1*a_2+2*a_2^2"),
    ("2,1", "1", "2,1", "2*g_1+g_2", "2*a_1+2*a_2"),
    ("2,1", "2", "2,1", "2*g_1^2+3*g_1*g_2+g_2^2", "a_1^2+3*a_1*a_2+2*a_2^2"),
    ("2,1", "2,1", "2,1", "2*g_1^3+3*g_1^2*g_2+g_1*g_2^2", "a_1^3+3*a_1^2*a_2+2*a_1*a_2^2"),
];

/// The reference `O` entry for `([2],[2],[2])` mixes variable families; this is the reading
/// forced by the `L` column.
pub const OL_CORRECTED_O_222: &str = "g_1*g_2+g_2^2";

pub fn ol_table() -> Vec<OlRow> {
    OL_TABLE
        .iter()
        .map(|&(l, m, n, o, lv)| OlRow {
            lambda: l.parse().unwrap(),
            mu: m.parse().unwrap(),
            nu: n.parse().unwrap(),
            o,
            l: lv,
        })
        .collect()
}

fn is_flagged(r: &OlRow) -> bool {
    r.o.contains('a')
}

/// `L` with `α_1 -> 2γ_1` and `α_i -> γ_i`.
pub fn l_tilde(l: &ZPoly) -> ZPoly {
    let mut map = BTreeMap::new();
    for v in l.variables() {
        if v.family == crate::poly::Family::Alpha {
            let g = ZPoly::var(Var::gamma(v.index));
            map.insert(v, if v.index == 1 { g.scale(&BigInt::from(2)) } else { g });
        }
    }
    l.substitute(&map)
}

type StrictKey = (StrictPartition, StrictPartition, StrictPartition);

fn fixture_maps() -> (BTreeMap<StrictKey, ZPoly>, BTreeMap<StrictKey, ZPoly>) {
    let mut o = BTreeMap::new();
    let mut l = BTreeMap::new();
    for r in ol_table() {
        let key = (r.lambda.clone(), r.mu.clone(), r.nu.clone());
        let ov = if is_flagged(&r) { OL_CORRECTED_O_222 } else { r.o };
        o.insert(key.clone(), ov.parse().unwrap());
        l.insert(key, r.l.parse().unwrap());
    }
    (o, l)
}

/// For every reference row, `2^{ℓ(ν)-ℓ(λ)-ℓ(μ)} L̃` must equal `O`.
pub fn o_l_fixture_checks() -> Report {
    let mut rep = Report::new("O = 2^(l(nu)-l(lambda)-l(mu)) L~ on the n=2 fixture");
    let mut seen = BTreeSet::new();
    for r in ol_table() {
        let key = (r.lambda.clone(), r.mu.clone(), r.nu.clone());
        if !seen.insert(key) {
            rep.notes.push(format!("duplicate row ({}, {}, {})", r.lambda, r.mu, r.nu));
        }
        let l: ZPoly = r.l.parse().unwrap();
        let e = r.nu.len() as i64 - r.lambda.len() as i64 - r.mu.len() as i64;
        let got = l_tilde(&l).to_rational().scale(&pow2(e));
        let listed: ZPoly = r.o.parse().unwrap();
        if is_flagged(&r) {
            let fixed: ZPoly = OL_CORRECTED_O_222.parse().unwrap();
            rep.notes.push(format!(
                "row ({}, {}, {}): listed O = {listed} mixes families; L column gives {got}",
                r.lambda, r.mu, r.nu
            ));
            rep.record(got == fixed.to_rational(), || format!("corrected O {fixed} vs {got}"));
        } else {
            rep.record(got == listed.to_rational(), || {
                format!("row ({}, {}, {}): O = {listed}, 2^e L~ = {got}", r.lambda, r.mu, r.nu)
            });
        }
    }
    rep
}

fn fixture_value(map: &BTreeMap<StrictKey, ZPoly>, l: &StrictPartition, m: &StrictPartition, n: &StrictPartition) -> ZPoly {
    if l.is_empty() {
        return if m == n { ZPoly::one() } else { ZPoly::zero() };
    }
    if m.is_empty() {
        return if l == n { ZPoly::one() } else { ZPoly::zero() };
    }
    map.get(&(l.clone(), m.clone(), n.clone())).cloned().unwrap_or_default()
}

fn in_rho(p: &StrictPartition, n: u32) -> bool {
    p.in_staircase(n)
}

/// The recurrence obtained from `(ξ_λ ξ_(1)) ξ_μ = ξ_λ (ξ_(1) ξ_μ)` for `Y`, on the fixture.
pub fn brec_check() -> Report {
    let mut rep = Report::new("box recurrence for O on the n=2 fixture");
    let (o, _) = fixture_maps();
    let all = StrictPartition::all_in_staircase(2);
    for l in &all {
        for m in &all {
            for v in &all {
                let lhs: ZPoly = l
                    .addable()
                    .iter()
                    .filter(|p| in_rho(p, 2))
                    .map(|p| fixture_value(&o, p, m, v))
                    .sum();
                let mut rhs = fixture_value(&o, l, m, v) * wt_y_skew(v, l);
                for p in v.removable() {
                    rhs += fixture_value(&o, l, m, &p);
                }
                rep.record(lhs == rhs, || format!("λ={l} μ={m} ν={v}: {lhs} vs {rhs}"));
            }
        }
    }
    rep
}

/// The analogous recurrence for `L`, with the powers of two from the Pieri rule for `Z`.
pub fn crec_check() -> Report {
    let mut rep = Report::new("box recurrence for L on the n=2 fixture");
    let (_, lmap) = fixture_maps();
    let all = StrictPartition::all_in_staircase(2);
    let two = |e: i64| BigInt::from(1u32 << e);
    for l in &all {
        for m in &all {
            for v in &all {
                let mut lhs = ZPoly::zero();
                for p in l.addable().iter().filter(|p| in_rho(p, 2)) {
                    let e = l.len() as i64 + 1 - p.len() as i64;
                    lhs += fixture_value(&lmap, p, m, v).scale(&two(e));
                }
                let mut rhs = fixture_value(&lmap, l, m, v) * wt_z_skew(v, l);
                for p in v.removable() {
                    let e = p.len() as i64 + 1 - v.len() as i64;
                    rhs += fixture_value(&lmap, l, m, &p).scale(&two(e));
                }
                rep.record(lhs == rhs, || format!("λ={l} μ={m} ν={v}: {lhs} vs {rhs}"));
            }
        }
    }
    rep
}

/// `d_{λ,μ}^ν = d_{μ,λ}^ν` for every triple inside `ρ_n`.
pub fn commutativity_scan(n: u32, exec: Exec) -> Result<Report> {
    let mut rep = Report::new(&format!("commutativity of d inside rho_{n}"));
    let d = d_table(n, exec)?;
    let all = StrictPartition::all_in_staircase(n);
    for l in &all {
        for m in &all {
            for v in &all {
                let a = d.get(&(l.clone(), m.clone(), v.clone())).copied().unwrap_or(0);
                let b = d.get(&(m.clone(), l.clone(), v.clone())).copied().unwrap_or(0);
                rep.record(a == b, || format!("d_{{{l},{m}}}^{{{v}}} = {a} but d_{{{m},{l}}}^{{{v}}} = {b}"));
            }
        }
    }
    Ok(rep)
}

/// `([λ]⋆[μ])⋆[ν] = [λ]⋆([μ]⋆[ν])` for every triple inside `ρ_n`.
pub fn star_associativity_scan(n: u32, exec: Exec) -> Result<Report> {
    let mut rep = Report::new(&format!("associativity of the star product inside rho_{n}"));
    let d = d_table(n, exec)?;
    let all = StrictPartition::all_in_staircase(n);
    let big: BTreeMap<StrictKey, QPoly> =
        d.iter().map(|((a, b, c), &x)| ((a.clone(), b.clone(), c.clone()), assemble_d(a, b, c, x))).collect();
    let get = |a: &StrictPartition, b: &StrictPartition, c: &StrictPartition| {
        big.get(&(a.clone(), b.clone(), c.clone())).cloned().unwrap_or_default()
    };
    for l in &all {
        for m in &all {
            for v in &all {
                for target in &all {
                    let mut lhs = QPoly::zero();
                    let mut rhs = QPoly::zero();
                    for a in &all {
                        lhs += &get(l, m, a) * &get(a, v, target);
                        rhs += &get(m, v, a) * &get(l, a, target);
                    }
                    rep.record(lhs == rhs, || {
                        format!("([{l}]*[{m}])*[{v}] and [{l}]*([{m}]*[{v}]) differ at [{target}]: {lhs} vs {rhs}")
                    });
                }
            }
        }
    }
    Ok(rep)
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `d_{λ,(p)}^λ = C(ℓ(λ), p) 2^{p-1}` for every `λ ⊆ ρ_n` and `1 <= p <= n`.
pub fn d_pieri_scan(n: u32) -> Result<Report> {
    let mut rep = Report::new(&format!("d_(lambda,(p))^lambda inside rho_{n}"));
    for l in StrictPartition::all_in_staircase(n) {
        for p in 1..=n {
            let mu = StrictPartition::new(vec![p])?;
            let got = super::d_coeff(&l, &mu, &l, n)?;
            let want = binom(l.len() as u64, p as u64) << (p - 1);
            rep.record(got == want, || format!("λ={l} p={p}: {got}, expected {want}"));
        }
    }
    Ok(rep)
}

/// Going down in `|μ|` and going up towards `ν` preserve nonvanishing of `C`.
pub fn going_down_up_scan(table: &CoeffTable) -> Report {
    let mut rep = Report::new("nonvanishing goes down and up in mu");
    let map = table.lookup();
    let shapes = grassmannian_shapes(table);
    for l in &shapes {
        for m in &shapes {
            for v in &shapes {
                if get(&map, l, m, v).is_zero() {
                    continue;
                }
                let (ls, ms, vs) = (l.size(), m.size(), v.size());
                if vs < ls + ms {
                    for s in vs.saturating_sub(ls)..ms {
                        let found = shapes.iter().any(|d| {
                            d.size() == s && m.contains(d) && d != m && !get(&map, l, d, v).is_zero()
                        });
                        rep.record(found, || format!("λ={l} μ={m} ν={v}: nothing below at size {s}"));
                    }
                }
                for up in &shapes {
                    if up != m && up.contains(m) && v.contains(up) {
                        rep.record(!get(&map, l, up, v).is_zero(), || {
                            format!("λ={l} μ={m} ν={v}: C vanishes at μ↑={up}")
                        });
                    }
                }
            }
        }
    }
    rep
}

/// For every triple inside `ρ_n`: each tableau counted by `d_{λ,μ}^ν` has a valid growth
/// diagram whose reflection is valid and starts at `μ`, and the growth counts for `(λ,μ,ν)`
/// and `(μ,λ,ν)` both equal `d_{λ,μ}^ν`.
pub fn growth_reflection_scan(n: u32, exec: Exec) -> Result<Report> {
    let triples = super::table::strict_triples(n);
    let results = exec.try_map(&triples, |(l, m, v)| -> Result<Vec<Option<String>>> {
        let mut out = Vec::new();
        let target = Tableau::superstandard(m.parts(), true).to_grid()?;
        let mut d = 0u64;
        if v.contains(l) {
            let shape = SkewShape::shifted(v, l)?;
            let mut grids = Vec::new();
            for_each_standard_filling(&shape, m.size(), true, &mut |g| {
                grids.push(*g);
                true
            })?;
            for g in grids {
                if sh_eq_rect(&g)? != target {
                    continue;
                }
                d += 1;
                let diagram = growth_diagram(&g, m.size() as u8)?;
                let r = diagram.reflect();
                let ok = diagram.validate().is_ok()
                    && r.validate().is_ok()
                    && r.rows.first().and_then(|row| row.first()).map(|e| e.parts.as_slice())
                        == Some(m.parts());
                out.push((!ok).then(|| format!("λ={l} μ={m} ν={v}: reflection fails on\n{}", diagram.to_text())));
            }
        }
        let a = count_growth(l, m, v)?;
        let b = count_growth(m, l, v)?;
        out.push((a != d || b != d).then(|| format!("λ={l} μ={m} ν={v}: d = {d}, growth {a} and {b}")));
        Ok(out)
    })?;
    let mut rep = Report::new(&format!("growth diagram reflection inside rho_{n}"));
    for r in results.into_iter().flatten() {
        rep.record(r.is_none(), || r.clone().unwrap_or_default());
    }
    Ok(rep)
}

/// The edge sets of standard fillings of `ρ_n/ρ_n` that rectify to `S_{ρ_n}` equal the
/// closure of `U_n` under slidable moves.
pub fn slidable_scan(n: u32) -> Result<Report> {
    let mut rep = Report::new(&format!("slidable closure equals the rectification fibre, n={n}"));
    let nn = n * (n + 1) / 2;
    let rho = StrictPartition::staircase(n);
    let target = Tableau::superstandard(rho.parts(), true).to_grid()?;
    let shape = SkewShape::shifted(&rho, &rho)?;
    let mut direct = BTreeSet::new();
    let mut err = None;
    for_each_standard_filling(&shape, nn, true, &mut |g| {
        match sh_eq_rect(g) {
            Ok(r) if r == target => {
                direct.insert(e_sets(g, n as usize));
            }
            Ok(_) => {}
            Err(e) => err = Some(e),
        }
        err.is_none()
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    let closure = slidable_closure(n);
    rep.record(direct == closure, || {
        format!("{} fillings rectify, closure has {}", direct.len(), closure.len())
    });
    rep.notes.push(format!("{} sets", direct.len()));
    Ok(rep)
}
