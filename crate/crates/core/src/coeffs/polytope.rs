use crate::shapes::Partition;

/// `r[i][k]`: the number of `k+1`s in row `i+1` of an LR filling.
pub type LrMatrix = Vec<Vec<u32>>;

/// Integer points of the LR polytope `P_{λ,μ}^ν`, found by walking the box
/// `0 <= r_k^i <= μ_k` row by row. Rows are checked as soon as they are complete.
pub fn lr_polytope_points(lambda: &Partition, mu: &Partition, nu: &Partition) -> Vec<LrMatrix> {
    let rows = nu.len();
    let cols = mu.len();
    if lambda.size() + mu.size() != nu.size() || !nu.contains(lambda) {
        return Vec::new();
    }
    let mut r = vec![vec![0u32; cols]; rows];
    let mut col_used = vec![0u32; cols];
    let mut out = Vec::new();
    row_rec(lambda, mu, nu, 0, 0, &mut r, &mut col_used, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn row_rec(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    i: usize,
    k: usize,
    r: &mut LrMatrix,
    col_used: &mut Vec<u32>,
    out: &mut Vec<LrMatrix>,
) {
    let rows = r.len();
    let cols = col_used.len();
    if i == rows {
        if (0..cols).all(|k| col_used[k] == mu.part(k + 1)) {
            out.push(r.clone());
        }
        return;
    }
    let need = nu.part(i + 1) - lambda.part(i + 1);
    let so_far: u32 = r[i][..k].iter().sum();
    if k == cols {
        if so_far == need && row_ok(lambda, mu, r, i) {
            row_rec(lambda, mu, nu, i + 1, 0, r, col_used, out);
        }
        return;
    }
    let hi = (mu.part(k + 1) - col_used[k]).min(need - so_far);
    for v in 0..=hi {
        r[i][k] = v;
        col_used[k] += v;
        row_rec(lambda, mu, nu, i, k + 1, r, col_used, out);
        col_used[k] -= v;
    }
    r[i][k] = 0;
}

/// Constraints (D) and (E) that involve row `i` and the rows above it.
fn row_ok(lambda: &Partition, mu: &Partition, r: &LrMatrix, i: usize) -> bool {
    let cols = mu.len();
    // (D): columns strictly increase between rows i-1 and i.
    if i > 0 {
        let (up, low) = (&r[i - 1], &r[i]);
        for k in 0..cols {
            let lhs = lambda.part(i + 1) + low[..=k].iter().sum::<u32>();
            let rhs = lambda.part(i) + up[..k].iter().sum::<u32>();
            if lhs > rhs {
                return false;
            }
        }
    }
    // (E): ballot condition through the end of row i.
    for k in 0..cols.saturating_sub(1) {
        let above_k: u32 = (0..i).map(|a| r[a][k]).sum();
        let above_k1: u32 = (0..i).map(|a| r[a][k + 1]).sum();
        if above_k < r[i][k + 1] + above_k1 {
            return false;
        }
    }
    true
}

/// Whether `r` satisfies (A)-(E) for `(λ, μ, ν)`.
pub fn lr_polytope_contains(lambda: &Partition, mu: &Partition, nu: &Partition, r: &LrMatrix) -> bool {
    if r.len() != nu.len() || r.iter().any(|row| row.len() != mu.len()) {
        return false;
    }
    let rows_ok = (0..nu.len()).all(|i| lambda.part(i + 1) + r[i].iter().sum::<u32>() == nu.part(i + 1));
    let cols_ok = (0..mu.len()).all(|k| r.iter().map(|row| row[k]).sum::<u32>() == mu.part(k + 1));
    rows_ok && cols_ok && (0..nu.len()).all(|i| row_ok(lambda, mu, r, i))
}
