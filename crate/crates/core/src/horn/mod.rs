//! Nonvanishing deciders: Horn inequalities for `c` and `C`, saturation and semigroup scans,
//! the shifted inequalities of Purbhoo-Sottile and Monical, and SNP scans.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::coeffs::{
    d_table, eq_c, lr, lr_polytope_contains, shifted_o, EqMethod, LrMethod, ShiftedMethod,
};
use crate::error::Result;
use crate::jdt::eballot_weight;
use crate::newton::{is_snp, snp_witness};
use crate::par::Exec;
use crate::shapes::{
    complement, ps_statistic, shifted_complement, tau, Partition, Rectangle, SkewShape,
    StrictPartition,
};
use crate::tableaux::{for_each_eq_ssyt, Tableau, TableauKind};

pub type Subset = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HornInequality {
    pub i: Subset,
    pub j: Subset,
    pub k: Subset,
    /// `c_{τ(I),τ(J)}^{τ(K)}`.
    pub witness: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HornSystem {
    pub r: u32,
    pub inequalities: Vec<HornInequality>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HornMode {
    /// Every triple with a nonzero witness.
    Nonzero,
    /// Only witnesses equal to 1.
    Belkale,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Decider {
    Direct,
    Horn,
}

impl HornSystem {
    /// `Σ_I λ_i + Σ_J μ_j >= Σ_K ν_k` for every listed triple.
    pub fn holds(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> bool {
        let sum = |p: &Partition, s: &[u32]| s.iter().map(|&i| p.part(i as usize) as u64).sum::<u64>();
        self.inequalities
            .iter()
            .all(|h| sum(lambda, &h.i) + sum(mu, &h.j) >= sum(nu, &h.k))
    }
}

/// All `d`-element subsets of `{1, ..., r}` in lexicographic order.
pub fn subsets(r: u32, d: u32) -> Vec<Subset> {
    fn rec(start: u32, r: u32, d: u32, cur: &mut Subset, out: &mut Vec<Subset>) {
        if cur.len() as u32 == d {
            out.push(cur.clone());
            return;
        }
        for x in start..=r {
            cur.push(x);
            rec(x + 1, r, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, r, d, &mut Vec::new(), &mut out);
    out
}

fn witness_cache() -> &'static Mutex<HashMap<(Subset, Subset, Subset, u32), u64>> {
    static CACHE: OnceLock<Mutex<HashMap<(Subset, Subset, Subset, u32), u64>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn witness(i: &Subset, j: &Subset, k: &Subset, r: u32) -> Result<u64> {
    let key = (i.clone(), j.clone(), k.clone(), r);
    if let Some(&w) = witness_cache().lock().unwrap().get(&key) {
        return Ok(w);
    }
    let d = i.len() as u32;
    let w = lr(&tau(i)?, &tau(j)?, &tau(k)?, Rectangle::new(d, r - d), LrMethod::Ballot)?;
    witness_cache().lock().unwrap().insert(key, w);
    Ok(w)
}

/// Horn's list for rank `r`: triples `(I, J, K)` of `d`-subsets of `[r]`, `d < r`, with
/// `c_{τ(I),τ(J)}^{τ(K)} ≠ 0` (or `= 1` in Belkale's list).
pub fn horn_list(r: u32, mode: HornMode) -> Result<Arc<HornSystem>> {
    type Cache = Mutex<HashMap<(u32, HornMode), Arc<HornSystem>>>;
    static SYSTEMS: OnceLock<Cache> = OnceLock::new();
    let systems = SYSTEMS.get_or_init(Default::default);
    if let Some(s) = systems.lock().unwrap().get(&(r, mode)) {
        return Ok(s.clone());
    }
    let mut inequalities = Vec::new();
    for d in 1..r {
        let subs = subsets(r, d);
        let size = |s: &Subset| tau(s).map(|p| p.size());
        for i in &subs {
            for j in &subs {
                for k in &subs {
                    if size(i)? + size(j)? != size(k)? {
                        continue;
                    }
                    let w = witness(i, j, k, r)?;
                    let keep = match mode {
                        HornMode::Nonzero => w != 0,
                        HornMode::Belkale => w == 1,
                    };
                    if keep {
                        inequalities.push(HornInequality { i: i.clone(), j: j.clone(), k: k.clone(), witness: w });
                    }
                }
            }
        }
    }
    let sys = Arc::new(HornSystem { r, inequalities });
    systems.lock().unwrap().insert((r, mode), sys.clone());
    Ok(sys)
}

fn bounding_rect(ps: [&Partition; 3], r: u32) -> Rectangle {
    let w = ps.iter().map(|p| p.part(1)).max().unwrap_or(0).max(1);
    Rectangle::new(r.max(ps.iter().map(|p| p.len() as u32).max().unwrap_or(0)), w)
}

fn check_rank(ps: [&Partition; 3], r: u32) -> Result<()> {
    for p in ps {
        if p.len() as u32 > r {
            return Err(crate::Error::OutOfBounds { shape: p.to_string(), bound: format!("{r} parts") });
        }
    }
    Ok(())
}

/// Whether `c_{λ,μ}^ν ≠ 0`, for partitions with at most `r` parts.
pub fn classical_nonvanishing(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    r: u32,
    method: Decider,
) -> Result<bool> {
    check_rank([lambda, mu, nu], r)?;
    match method {
        Decider::Direct => {
            Ok(lr(lambda, mu, nu, bounding_rect([lambda, mu, nu], r), LrMethod::Ballot)? > 0)
        }
        Decider::Horn => Ok(lambda.size() + mu.size() == nu.size()
            && horn_list(r, HornMode::Nonzero)?.holds(lambda, mu, nu)),
    }
}

/// Like [`classical_nonvanishing`] in Horn mode, using Belkale's shorter list.
pub fn classical_nonvanishing_belkale(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    r: u32,
) -> Result<bool> {
    check_rank([lambda, mu, nu], r)?;
    Ok(lambda.size() + mu.size() == nu.size()
        && horn_list(r, HornMode::Belkale)?.holds(lambda, mu, nu))
}

/// `|λ|+|μ| >= |ν|` and `max(λ_i, μ_i) <= ν_i` for all `i`.
pub fn eq_horn_condition(lambda: &Partition, mu: &Partition, nu: &Partition) -> bool {
    let rows = lambda.len().max(mu.len()).max(nu.len());
    lambda.size() + mu.size() >= nu.size()
        && (1..=rows).all(|i| lambda.part(i).max(mu.part(i)) <= nu.part(i))
}

/// Whether some equivariant ballot tableau of shape `ν/λ` and content `μ` has a nonzero
/// weight. Every weight is a product of positive sums of `β`s, so no cancellation occurs
/// and this decides `C_{λ,μ}^ν ≠ 0` with `k` rows.
pub fn eq_nonzero(lambda: &Partition, mu: &Partition, nu: &Partition, k: u32) -> Result<bool> {
    if !nu.contains(lambda) || !nu.contains(mu) || lambda.size() + mu.size() < nu.size() {
        return Ok(false);
    }
    let shape = SkewShape::ordinary(nu, lambda)?;
    let mut found = false;
    let mut err = None;
    for_each_eq_ssyt(&shape, mu.parts(), &mut |g| {
        match eballot_weight(&Tableau::from_grid(TableauKind::EqSsyt, g), k) {
            Ok(w) => found = !w.is_zero(),
            Err(e) => err = Some(e),
        }
        !found && err.is_none()
    })?;
    err.map_or(Ok(found), Err)
}

/// Whether `C_{λ,μ}^ν ≠ 0`, for partitions with at most `r` parts.
pub fn equiv_nonvanishing(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    r: u32,
    method: Decider,
) -> Result<bool> {
    check_rank([lambda, mu, nu], r)?;
    match method {
        Decider::Direct => eq_nonzero(lambda, mu, nu, r),
        Decider::Horn => Ok(eq_horn_condition(lambda, mu, nu)
            && horn_list(r, HornMode::Nonzero)?.holds(lambda, mu, nu)),
    }
}

pub type Triple = [Vec<u32>; 3];

/// One line of a scan: two verdicts on the same triple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub triple: Triple,
    pub verdict_a: bool,
    pub verdict_b: bool,
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ScanRow {
    fn new(triple: Triple, a: bool, b: bool) -> ScanRow {
        ScanRow { triple, verdict_a: a, verdict_b: b, agree: a == b, note: None }
    }

    fn with_note(mut self, note: impl Into<String>) -> ScanRow {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Scan {
    pub name: String,
    pub rows: Vec<ScanRow>,
    pub notes: Vec<String>,
}

impl Scan {
    fn new(name: impl Into<String>, mut rows: Vec<ScanRow>) -> Scan {
        rows.sort_by(|a, b| a.triple.cmp(&b.triple));
        Scan { name: name.into(), rows, notes: Vec::new() }
    }

    pub fn mismatches(&self) -> Vec<&ScanRow> {
        self.rows.iter().filter(|r| !r.agree).collect()
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.agree)
    }
}

fn key(ps: [&Partition; 3]) -> Triple {
    ps.map(|p| p.parts().to_vec())
}

fn skey(ps: [&StrictPartition; 3]) -> Triple {
    ps.map(|p| p.parts().to_vec())
}

fn all_triples(rect: Rectangle) -> Vec<(Partition, Partition, Partition)> {
    let shapes = Partition::all_in(rect);
    let mut out = Vec::new();
    for l in &shapes {
        for m in &shapes {
            for n in &shapes {
                out.push((l.clone(), m.clone(), n.clone()));
            }
        }
    }
    out
}

fn strict_triples(n: u32) -> Vec<(StrictPartition, StrictPartition, StrictPartition)> {
    let shapes = StrictPartition::all_in_staircase(n);
    let mut out = Vec::new();
    for l in &shapes {
        for m in &shapes {
            for v in &shapes {
                out.push((l.clone(), m.clone(), v.clone()));
            }
        }
    }
    out
}

/// Direct versus Horn verdicts for `c` over all triples in `r x max_entry`.
pub fn classical_horn_scan(r: u32, max_entry: u32, exec: Exec) -> Result<Scan> {
    let triples = all_triples(Rectangle::new(r, max_entry));
    let rows = exec.try_map(&triples, |(l, m, n)| -> Result<ScanRow> {
        let a = classical_nonvanishing(l, m, n, r, Decider::Direct)?;
        let b = classical_nonvanishing(l, m, n, r, Decider::Horn)?;
        Ok(ScanRow::new(key([l, m, n]), a, b))
    })?;
    Ok(Scan::new(format!("classical Horn, r={r}, entries<={max_entry}"), rows))
}

/// Nonzero-list versus Belkale-list Horn verdicts over all triples in `r x max_entry`.
pub fn belkale_scan(r: u32, max_entry: u32, exec: Exec) -> Result<Scan> {
    let triples = all_triples(Rectangle::new(r, max_entry));
    let rows = exec.try_map(&triples, |(l, m, n)| -> Result<ScanRow> {
        let a = classical_nonvanishing(l, m, n, r, Decider::Horn)?;
        let b = classical_nonvanishing_belkale(l, m, n, r)?;
        Ok(ScanRow::new(key([l, m, n]), a, b))
    })?;
    Ok(Scan::new(format!("Belkale list, r={r}, entries<={max_entry}"), rows))
}

/// Direct versus Horn verdicts for `C` over all triples in `r x max_entry`.
pub fn equiv_horn_scan(r: u32, max_entry: u32, exec: Exec) -> Result<Scan> {
    let triples = all_triples(Rectangle::new(r, max_entry));
    let rows = exec.try_map(&triples, |(l, m, n)| -> Result<ScanRow> {
        let a = equiv_nonvanishing(l, m, n, r, Decider::Direct)?;
        let b = equiv_nonvanishing(l, m, n, r, Decider::Horn)?;
        Ok(ScanRow::new(key([l, m, n]), a, b))
    })?;
    Ok(Scan::new(format!("equivariant Horn, r={r}, entries<={max_entry}"), rows))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoeffKind {
    /// `c_{λ,μ}^ν`.
    Lr,
    /// `C_{λ,μ}^ν`.
    EqLr,
}

fn nonvanishing(kind: CoeffKind, l: &Partition, m: &Partition, n: &Partition, r: u32) -> Result<bool> {
    match kind {
        CoeffKind::Lr => classical_nonvanishing(l, m, n, r, Decider::Direct),
        CoeffKind::EqLr => equiv_nonvanishing(l, m, n, r, Decider::Direct),
    }
}

/// Nonvanishing at `(λ,μ,ν)` versus at `(Nλ,Nμ,Nν)` for `2 <= N <= max_stretch`, over all
/// triples in `bound`. Rows carry `N` in their note.
pub fn saturation_scan(kind: CoeffKind, bound: Rectangle, max_stretch: u32, exec: Exec) -> Result<Scan> {
    let mut triples = all_triples(bound);
    if kind == CoeffKind::Lr {
        triples.retain(|(l, m, n)| l.size() + m.size() == n.size());
    }
    let r = bound.k;
    let rows = exec.try_map(&triples, |(l, m, n)| -> Result<Vec<ScanRow>> {
        let base = nonvanishing(kind, l, m, n, r)?;
        (2..=max_stretch)
            .map(|s| {
                let st = nonvanishing(kind, &l.scale(s), &m.scale(s), &n.scale(s), r)?;
                Ok(ScanRow::new(key([l, m, n]), base, st).with_note(format!("N={s}")))
            })
            .collect()
    })?;
    let name = format!("saturation of {kind:?} in {bound}, N<={max_stretch}");
    Ok(Scan::new(name, rows.into_iter().flatten().collect()))
}

/// `o_{λ,μ}^ν ≠ 0` versus `o_{Nλ,Nμ}^{Nν} ≠ 0` over triples inside `ρ_n`. Saturation is not
/// a theorem here; the scan only reports what it finds.
pub fn shifted_saturation_scan(n: u32, max_stretch: u32, exec: Exec) -> Result<Scan> {
    let mut triples = strict_triples(n);
    triples.retain(|(l, m, v)| l.size() + m.size() == v.size());
    let rows = exec.try_map(&triples, |(l, m, v)| -> Result<Vec<ScanRow>> {
        let base = shifted_o(l, m, v, n, ShiftedMethod::Ballot)? > 0;
        (2..=max_stretch)
            .map(|s| {
                let st = shifted_o(&l.scale(s), &m.scale(s), &v.scale(s), n * s, ShiftedMethod::Ballot)? > 0;
                Ok(ScanRow::new(skey([l, m, v]), base, st).with_note(format!("N={s}")))
            })
            .collect()
    })?;
    let name = format!("shifted saturation inside rho_{n}, N<={max_stretch}");
    Ok(Scan::new(name, rows.into_iter().flatten().collect()))
}

fn add(a: &Partition, b: &Partition) -> Result<Partition> {
    let len = a.len().max(b.len());
    Partition::new((1..=len).map(|i| a.part(i) + b.part(i)).collect())
}

/// For every pair of nonvanishing triples in `r x max_entry`, whether their sum is
/// nonvanishing. `verdict_a` is always true; `verdict_b` is the verdict on the sum.
pub fn semigroup_scan(kind: CoeffKind, r: u32, max_entry: u32, exec: Exec) -> Result<Scan> {
    let triples = all_triples(Rectangle::new(r, max_entry));
    let flags = exec.try_map(&triples, |(l, m, n)| nonvanishing(kind, l, m, n, r))?;
    let good: Vec<_> = triples.into_iter().zip(flags).filter(|(_, f)| *f).map(|(t, _)| t).collect();
    let mut pairs = Vec::new();
    for a in 0..good.len() {
        for b in a..good.len() {
            pairs.push((a, b));
        }
    }
    let rows = exec.try_map(&pairs, |&(a, b)| -> Result<ScanRow> {
        let (l1, m1, n1) = &good[a];
        let (l2, m2, n2) = &good[b];
        let (l, m, n) = (add(l1, l2)?, add(m1, m2)?, add(n1, n2)?);
        let ok = nonvanishing(kind, &l, &m, &n, r)?;
        let note = format!("{} + {}", fmt_triple(&key([l1, m1, n1])), fmt_triple(&key([l2, m2, n2])));
        Ok(ScanRow::new(key([&l, &m, &n]), true, ok).with_note(note))
    })?;
    let mut scan = Scan::new(format!("semigroup of {kind:?}, r={r}, entries<={max_entry}"), rows);
    scan.notes.push(format!("{} nonvanishing triples", good.len()));
    Ok(scan)
}

fn fmt_triple(t: &Triple) -> String {
    let f = |v: &Vec<u32>| format!("({})", v.iter().map(u32::to_string).collect::<Vec<_>>().join(","));
    format!("[{}, {}, {}]", f(&t[0]), f(&t[1]), f(&t[2]))
}

fn binom2(m: u32) -> u32 {
    m * m.saturating_sub(1) / 2
}

/// One inequality `[λ]_α + [μ]_β + [ν]_γ <= binom(n+1-r, 2)` of the shifted Horn-type systems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedInequality {
    pub r: u32,
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
}

/// All `(r, α, β, γ)` with `0 < r < n`, `α, β, γ ⊆ r x (n-r)` and `c_{α,β}^{γ^c} ≠ 0`.
pub fn shifted_horn_list(n: u32) -> Result<Arc<Vec<ShiftedInequality>>> {
    type Cache = Mutex<HashMap<u32, Arc<Vec<ShiftedInequality>>>>;
    static LISTS: OnceLock<Cache> = OnceLock::new();
    let lists = LISTS.get_or_init(Default::default);
    if let Some(s) = lists.lock().unwrap().get(&n) {
        return Ok(s.clone());
    }
    let mut out = Vec::new();
    for r in 1..n {
        let rect = Rectangle::new(r, n - r);
        let shapes = Partition::all_in(rect);
        for a in &shapes {
            for b in &shapes {
                for g in &shapes {
                    let gc = complement(g, rect)?;
                    if a.size() + b.size() == gc.size() && lr(a, b, &gc, rect, LrMethod::Ballot)? > 0 {
                        out.push(ShiftedInequality { r, alpha: a.clone(), beta: b.clone(), gamma: g.clone() });
                    }
                }
            }
        }
    }
    let list = Arc::new(out);
    lists.lock().unwrap().insert(n, list.clone());
    Ok(list)
}

/// The largest `[λ]_α + [μ]_β + [ν]_γ - binom(n+1-r, 2)` over the shifted Horn list, or
/// `None` for `n = 1`. The crossing corners are `I_n(α^∨)`, that is `I_n(α)` counted from
/// the bottom of `ρ_n`; with `I_n(α)` itself the criterion already fails for `n = 2`.
fn worst_excess(l: &StrictPartition, m: &StrictPartition, v: &StrictPartition, n: u32) -> Result<Option<i64>> {
    let mut worst = None;
    for ineq in shifted_horn_list(n)?.iter() {
        let rect = Rectangle::new(ineq.r, n - ineq.r);
        let stat = |x: &StrictPartition, a: &Partition| ps_statistic(x, &complement(a, rect)?, ineq.r, n);
        let lhs = stat(l, &ineq.alpha)? + stat(m, &ineq.beta)? + stat(v, &ineq.gamma)?;
        let e = lhs as i64 - binom2(n + 1 - ineq.r) as i64;
        worst = Some(worst.map_or(e, |w: i64| w.max(e)));
    }
    Ok(worst)
}

/// Whether `o_{λ,μ}^{ν^c} ≠ 0`, with `ν^c` the complement of `ν` in `ρ_n`.
pub fn purbhoo_sottile(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    nu: &StrictPartition,
    n: u32,
    method: Decider,
) -> Result<bool> {
    let nuc = shifted_complement(nu, n)?;
    match method {
        Decider::Direct => Ok(shifted_o(lambda, mu, &nuc, n, ShiftedMethod::Ballot)? > 0),
        Decider::Horn => {
            if lambda.size() + mu.size() + nu.size() != binom2(n + 1) {
                return Ok(false);
            }
            for p in [lambda, mu] {
                if !p.in_staircase(n) {
                    return Err(crate::Error::OutOfBounds { shape: p.to_string(), bound: format!("rho_{n}") });
                }
            }
            Ok(worst_excess(lambda, mu, nu, n)?.is_none_or(|e| e <= 0))
        }
    }
}

/// Direct versus inequality verdicts of [`purbhoo_sottile`] over all triples inside `ρ_n`.
pub fn purbhoo_sottile_scan(n: u32, exec: Exec) -> Result<Scan> {
    let triples = strict_triples(n);
    let rows = exec.try_map(&triples, |(l, m, v)| -> Result<ScanRow> {
        let a = purbhoo_sottile(l, m, v, n, Decider::Direct)?;
        let b = purbhoo_sottile(l, m, v, n, Decider::Horn)?;
        Ok(ScanRow::new(skey([l, m, v]), a, b))
    })?;
    Ok(Scan::new(format!("Purbhoo-Sottile inside rho_{n}"), rows))
}

/// Monical's conjectured criterion for `O_{λ,μ}^{ν^c} ≠ 0`.
pub fn monical_verdict(l: &StrictPartition, m: &StrictPartition, v: &StrictPartition, n: u32) -> Result<bool> {
    let k = l.size() as i64 + m.size() as i64 + v.size() as i64 - binom2(n + 1) as i64;
    if k < 0 {
        return Ok(false);
    }
    Ok(worst_excess(l, m, v, n)?.is_none_or(|e| e <= k))
}

/// Monical's criterion against `O_{λ,μ}^{ν^c} ≠ 0` inside `ρ_n`, skipping triples that all
/// fit in `ρ_{n-1}`.
///
/// With `Δ = 0`, `O = o` and the truth is exact. Otherwise the truth is read from
/// `D_{λ,μ}^{ν^c} ≠ 0`, which is `L` at `α_1 = z`, `α_i = 0`: a nonzero `D` proves `O ≠ 0`,
/// a zero `D` proves nothing. Rows where the conjecture says nonzero and `D` is zero are
/// marked inconclusive and count as agreeing.
pub fn monical_scan(n: u32, exec: Exec) -> Result<Scan> {
    let d = d_table(n, exec)?;
    let mut triples = strict_triples(n);
    triples.retain(|(l, m, v)| !(l.in_staircase(n - 1) && m.in_staircase(n - 1) && v.in_staircase(n - 1)));
    let rows = exec.try_map(&triples, |(l, m, v)| -> Result<ScanRow> {
        let conj = monical_verdict(l, m, v, n)?;
        let vc = shifted_complement(v, n)?;
        let exact = l.size() + m.size() == vc.size();
        let truth = if exact {
            shifted_o(l, m, &vc, n, ShiftedMethod::Ballot)? > 0
        } else {
            d.contains_key(&(l.clone(), m.clone(), vc.clone()))
        };
        let row = ScanRow::new(skey([l, m, v]), conj, truth);
        Ok(if conj && !truth && !exact {
            ScanRow { agree: true, ..row }.with_note("inconclusive")
        } else {
            row
        })
    })?;
    let mut scan = Scan::new(format!("Monical inside rho_{n}"), rows);
    let inc = scan.rows.iter().filter(|r| r.note.is_some()).count();
    scan.notes.push(format!("{inc} inconclusive rows (conjecture nonzero, D zero)"));
    Ok(scan)
}

/// SNP of every nonzero `C_{λ,μ}^ν` with `λ, μ, ν ⊆ Λ`, written in the `β`s.
/// `verdict_a` is nonvanishing, `verdict_b` is SNP; a witness point is noted on failure.
pub fn snp_scan(bound: Rectangle, exec: Exec) -> Result<Scan> {
    let mut triples = all_triples(bound);
    triples.retain(|(l, m, n)| eq_horn_condition(l, m, n));
    let rows = exec.try_map(&triples, |(l, m, n)| -> Result<Option<ScanRow>> {
        let c = eq_c(l, m, n, bound, EqMethod::Eballot)?;
        if c.is_zero() {
            return Ok(None);
        }
        let b = c.t_to_beta()?;
        let row = ScanRow::new(key([l, m, n]), true, is_snp(&b));
        Ok(Some(match snp_witness(&b) {
            Some(w) => row.with_note(format!("missing exponent {w:?} in {b}")),
            None => row,
        }))
    })?;
    Ok(Scan::new(format!("SNP of C in {bound}"), rows.into_iter().flatten().collect()))
}

/// Whether `N r` lies in `P_{Nλ,Nμ}^{Nν}` for a point `r` of `P_{λ,μ}^ν`.
pub fn stretch_preserves(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    point: &[Vec<u32>],
    n: u32,
) -> bool {
    let scaled: Vec<Vec<u32>> = point.iter().map(|row| row.iter().map(|x| x * n).collect()).collect();
    lr_polytope_contains(&lambda.scale(n), &mu.scale(n), &nu.scale(n), &scaled)
}

#[cfg(test)]
mod tests;
