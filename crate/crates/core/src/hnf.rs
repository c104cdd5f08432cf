//! Column Hermite normal form over the integers and integral linear solves.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// `a · u = h` with `u` unimodular and `h` in column Hermite form.
#[derive(Debug, Clone)]
pub struct ColumnHnf {
    pub h: Vec<Vec<BigInt>>,
    pub u: Vec<Vec<BigInt>>,
    /// `(row, column)` of each pivot, in increasing order of both.
    pub pivots: Vec<(usize, usize)>,
}

fn col_axpy(m: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    for row in m.iter_mut() {
        if !row[src].is_zero() {
            let d = &row[src] * q;
            row[dst] -= d;
        }
    }
}

fn col_swap(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

fn col_neg(m: &mut [Vec<BigInt>], a: usize) {
    for row in m.iter_mut() {
        row[a] = -&row[a];
    }
}

/// Hermite form with positive pivots and entries left of each pivot reduced
/// into `[0, pivot)`.
pub fn column_hnf(a: &[Vec<BigInt>], cols: usize) -> ColumnHnf {
    let mut h: Vec<Vec<BigInt>> = a.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..cols)
        .map(|i| (0..cols).map(|j| BigInt::from((i == j) as i32)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut cp = 0;
    for i in 0..h.len() {
        if cp == cols {
            break;
        }
        loop {
            let best = (cp..cols)
                .filter(|&j| !h[i][j].is_zero())
                .min_by(|&x, &y| h[i][x].abs().cmp(&h[i][y].abs()).then(x.cmp(&y)));
            let Some(best) = best else { break };
            col_swap(&mut h, cp, best);
            col_swap(&mut u, cp, best);
            let mut done = true;
            for j in cp + 1..cols {
                if h[i][j].is_zero() {
                    continue;
                }
                let q = h[i][j].div_floor(&h[i][cp]);
                col_axpy(&mut h, j, cp, &q);
                col_axpy(&mut u, j, cp, &q);
                if !h[i][j].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[i][cp].is_zero() {
            continue;
        }
        if h[i][cp].is_negative() {
            col_neg(&mut h, cp);
            col_neg(&mut u, cp);
        }
        for k in 0..cp {
            let q = h[i][k].div_floor(&h[i][cp]);
            if !q.is_zero() {
                col_axpy(&mut h, k, cp, &q);
                col_axpy(&mut u, k, cp, &q);
            }
        }
        pivots.push((i, cp));
        cp += 1;
    }
    ColumnHnf { h, u, pivots }
}

impl ColumnHnf {
    /// The canonical integral solution of `a·x = b`: free coordinates of the
    /// Hermite system are set to zero.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        let cols = self.u.len();
        let mut r: Vec<BigInt> = b.to_vec();
        let mut y = vec![BigInt::zero(); cols];
        let mut piv = self.pivots.iter().peekable();
        for i in 0..r.len() {
            match piv.peek() {
                Some(&&(pi, pc)) if pi == i => {
                    piv.next();
                    let (q, rem) = r[i].div_rem(&self.h[i][pc]);
                    if !rem.is_zero() {
                        return None;
                    }
                    if !q.is_zero() {
                        for (k, row) in self.h.iter().enumerate() {
                            if !row[pc].is_zero() {
                                r[k] -= &row[pc] * &q;
                            }
                        }
                    }
                    y[pc] = q;
                }
                _ => {
                    if !r[i].is_zero() {
                        return None;
                    }
                }
            }
        }
        Some(
            self.u
                .iter()
                .map(|row| row.iter().zip(&y).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }
}

/// Solve `a·x = b` over the integers, if possible.
pub fn solve_integer(a: &[Vec<BigInt>], cols: usize, b: &[BigInt]) -> Option<Vec<BigInt>> {
    column_hnf(a, cols).solve(b)
}
