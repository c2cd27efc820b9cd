//! Integer diagonalization `U D V = S` with the column transform `V` kept.
//!
//! The diagonal is not forced into a divisibility chain; any diagonal form
//! answers the congruence and lattice questions asked of it.

use alloc::vec;
use alloc::vec::Vec;

pub(super) struct Diagonal {
    /// `S[k][k]` for `k < min(rows, cols)`; positions past that are 0.
    pub diag: Vec<i128>,
    /// `cols x cols`, unimodular.
    pub v: Vec<Vec<i128>>,
}

impl Diagonal {
    pub fn entry(&self, k: usize) -> i128 {
        self.diag.get(k).copied().unwrap_or(0)
    }

    /// Column `k` of `V`.
    pub fn column(&self, k: usize) -> Vec<i128> {
        self.v.iter().map(|row| row[k]).collect()
    }

    /// `V^T x`.
    pub fn transform(&self, x: &[i128]) -> Option<Vec<i128>> {
        let n = self.v.len();
        let mut out = vec![0i128; n];
        for (k, o) in out.iter_mut().enumerate() {
            for (row, xi) in self.v.iter().zip(x) {
                *o = o.checked_add(row[k].checked_mul(*xi)?)?;
            }
        }
        Some(out)
    }
}

fn sub_mul(x: i128, q: i128, y: i128) -> Option<i128> {
    x.checked_sub(q.checked_mul(y)?)
}

/// Diagonalizes `rows` (each of length `cols`). `None` on overflow.
pub(super) fn diagonalize(mut a: Vec<Vec<i128>>, cols: usize) -> Option<Diagonal> {
    let m = a.len();
    let mut v: Vec<Vec<i128>> = (0..cols)
        .map(|i| (0..cols).map(|j| i128::from(i == j)).collect())
        .collect();
    let swap_cols = |a: &mut Vec<Vec<i128>>, v: &mut Vec<Vec<i128>>, x: usize, y: usize| {
        for row in a.iter_mut().chain(v.iter_mut()) {
            row.swap(x, y);
        }
    };

    let steps = m.min(cols);
    for t in 0..steps {
        let pivot = (t..m)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .min_by_key(|&(i, j)| a[i][j].unsigned_abs());
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        swap_cols(&mut a, &mut v, t, pj);

        loop {
            let p = a[t][t];
            for i in t + 1..m {
                let q = a[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        a[i][j] = sub_mul(a[i][j], q, a[t][j])?;
                    }
                }
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                if q != 0 {
                    for row in a.iter_mut().chain(v.iter_mut()) {
                        row[j] = sub_mul(row[j], q, row[t])?;
                    }
                }
            }
            // remainders are strictly smaller than the pivot; move the
            // smallest one into the pivot position and repeat
            let row_min = (t + 1..m)
                .filter(|&i| a[i][t] != 0)
                .min_by_key(|&i| a[i][t].unsigned_abs());
            let col_min = (t + 1..cols)
                .filter(|&j| a[t][j] != 0)
                .min_by_key(|&j| a[t][j].unsigned_abs());
            match (row_min, col_min) {
                (None, None) => break,
                (Some(i), None) => a.swap(t, i),
                (None, Some(j)) => swap_cols(&mut a, &mut v, t, j),
                (Some(i), Some(j)) => {
                    if a[i][t].unsigned_abs() <= a[t][j].unsigned_abs() {
                        a.swap(t, i);
                    } else {
                        swap_cols(&mut a, &mut v, t, j);
                    }
                }
            }
        }
    }
    let diag = (0..steps).map(|k| a[k][k]).collect();
    Some(Diagonal { diag, v })
}
