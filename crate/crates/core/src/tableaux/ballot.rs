use super::{is_primed, letter, Tableau};

/// Row reading word: rows top to bottom, each read right to left.
pub fn reading_word(t: &Tableau) -> Vec<u32> {
    let mut w = Vec::new();
    for r in 1..=t.shape.rows() {
        let mut row: Vec<(u32, u32)> =
            t.boxes.iter().filter(|(c, _)| c.0 == r).map(|(c, &l)| (c.1, l)).collect();
        row.sort_unstable();
        w.extend(row.into_iter().rev().map(|(_, l)| l));
    }
    w
}

/// Every prefix has at least as many `i` as `i + 1`.
pub fn is_classical_ballot(word: &[u32]) -> bool {
    let mut count: Vec<u32> = Vec::new();
    for &l in word {
        let i = l as usize;
        if count.len() <= i {
            count.resize(i + 1, 0);
        }
        count[i] += 1;
        if i >= 2 && count[i] > count[i - 1] {
            return false;
        }
    }
    true
}

/// For every column `c` and label `l`, the number of `l` weakly right of `c` is at least the
/// number of `l + 1` weakly right of `c`; box and edge labels both count.
pub fn column_lattice(t: &Tableau) -> bool {
    let width = t.shape.outer.first().copied().unwrap_or(0);
    let mut by_col: Vec<Vec<u32>> = vec![Vec::new(); width as usize + 2];
    for (&(_, c), &l) in &t.boxes {
        by_col[c as usize].push(l);
    }
    for (&(_, c), s) in &t.edges {
        by_col[c as usize].extend(s.iter().copied());
    }
    let mut count: Vec<u32> = Vec::new();
    for col in by_col.iter().rev() {
        for &l in col {
            let i = l as usize;
            if count.len() <= i + 1 {
                count.resize(i + 2, 0);
            }
            count[i] += 1;
        }
        if (2..count.len()).any(|i| count[i] > count[i - 1]) {
            return false;
        }
    }
    true
}

/// Whether some label is too high: a box label `l` in row `i < l`, or an edge label `l` on the
/// edge between rows `i` and `i + 1` with `i + 1 <= l`.
pub fn too_high(t: &Tableau) -> bool {
    t.boxes.iter().any(|(&(r, _), &l)| r < l)
        || t.edges.iter().any(|(&(r, _), s)| s.iter().any(|&l| r < l))
}

/// Reading word of a shifted tableau: rows left to right, starting with the bottom row.
pub fn shifted_reading_word(t: &Tableau) -> Vec<u32> {
    let mut w = Vec::new();
    for r in (1..=t.shape.rows()).rev() {
        let mut row: Vec<(u32, u32)> =
            t.boxes.iter().filter(|(c, _)| c.0 == r).map(|(c, &l)| (c.1, l)).collect();
        row.sort_unstable();
        w.extend(row.into_iter().map(|(_, l)| l));
    }
    w
}

/// Stembridge's lattice property for a word in the primed alphabet (encoded as in
/// [`super::primed`]), together with the requirement that the leftmost occurrence of each
/// letter is unprimed.
pub fn is_shifted_ballot(w: &[u32]) -> bool {
    let n = w.len();
    let max = w.iter().map(|&a| letter(a)).max().unwrap_or(0);
    for i in 1..=max {
        if let Some(&a) = w.iter().find(|&&a| letter(a) == i) {
            if is_primed(a) {
                return false;
            }
        }
    }
    let unprimed_i = |a: u32, i: u32| !is_primed(a) && letter(a) == i;
    let primed_i = |a: u32, i: u32| is_primed(a) && letter(a) == i;
    for i in 2..=max {
        // m_i(j) for j = 0..2n.
        let mut mi = vec![0u32; 2 * n + 1];
        let mut mp = vec![0u32; 2 * n + 1];
        for j in 1..=n {
            let a = w[n - j];
            mi[j] = mi[j - 1] + unprimed_i(a, i) as u32;
            mp[j] = mp[j - 1] + unprimed_i(a, i - 1) as u32;
        }
        for j in 1..=n {
            let a = w[j - 1];
            mi[n + j] = mi[n + j - 1] + primed_i(a, i) as u32;
            mp[n + j] = mp[n + j - 1] + primed_i(a, i - 1) as u32;
        }
        for j in 0..2 * n {
            if mi[j] != mp[j] {
                continue;
            }
            if j < n {
                let a = w[n - j - 1];
                if letter(a) == i {
                    return false;
                }
            } else {
                let a = w[j - n];
                if unprimed_i(a, i - 1) || primed_i(a, i) {
                    return false;
                }
            }
        }
    }
    true
}
