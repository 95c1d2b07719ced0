//! Rectangular min-cost assignment (Hungarian method with potentials).

const FORBIDDEN: i64 = 1 << 40;

/// Assigns every row to a distinct column minimising the summed cost.
/// `cost[r][c] == None` forbids the pair. Returns the total and the column
/// chosen for each row, or `None` when no complete assignment exists.
pub fn min_cost_assignment(cost: &[Vec<Option<u64>>]) -> Option<(u64, Vec<usize>)> {
    let rows = cost.len();
    if rows == 0 {
        return Some((0, Vec::new()));
    }
    let cols = cost[0].len();
    if cols < rows {
        return None;
    }
    let at = |r: usize, c: usize| -> i64 {
        match cost[r][c] {
            Some(x) => x as i64,
            None => FORBIDDEN,
        }
    };
    // 1-based arrays as in the textbook formulation; column 0 is virtual
    let mut u = vec![0i64; rows + 1];
    let mut v = vec![0i64; cols + 1];
    let mut p = vec![0usize; cols + 1];
    let mut way = vec![0usize; cols + 1];
    for i in 1..=rows {
        p[0] = i;
        let mut j0 = 0;
        let mut minv = vec![i64::MAX; cols + 1];
        let mut used = vec![false; cols + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = i64::MAX;
            let mut j1 = 0;
            for j in 1..=cols {
                if !used[j] {
                    let cur = at(i0 - 1, j - 1) - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=cols {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assign = vec![usize::MAX; rows];
    for j in 1..=cols {
        if p[j] != 0 {
            assign[p[j] - 1] = j - 1;
        }
    }
    let mut total = 0u64;
    for (r, &c) in assign.iter().enumerate() {
        total += cost[r][c]?;
    }
    Some((total, assign))
}
