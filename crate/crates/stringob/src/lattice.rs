//! Integer row-lattice membership via Hermite normal form.
//!
//! Given integer rows `A` and a target `t`, decides whether `t = x·A` has
//! an integer solution `x`, and extracts one when it does. The reduction
//! keeps a unimodular transform `U` with `H = U·A`, so witnesses come out
//! by back-substitution against `H` followed by one multiplication by `U`.
//! All arithmetic is arbitrary precision; entries never overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// `dst -= q · src`, entrywise.
fn sub_scaled(dst: &mut [BigInt], src: &[BigInt], q: &BigInt) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d -= s * q;
    }
}

pub struct HnfSystem {
    cols: usize,
    row_count: usize,
    /// Echelon rows with positive pivots, pivot columns strictly increasing.
    h: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    /// `h[i] = Σ_j u[i][j] · original[j]`.
    u: Vec<Vec<BigInt>>,
}

impl HnfSystem {
    pub fn reduce(original: &[Vec<i64>], cols: usize) -> HnfSystem {
        let row_count = original.len();
        let mut work: Vec<Vec<BigInt>> = original
            .iter()
            .map(|r| {
                debug_assert_eq!(r.len(), cols);
                r.iter().map(|&x| BigInt::from(x)).collect()
            })
            .collect();
        let mut u: Vec<Vec<BigInt>> = (0..row_count)
            .map(|i| {
                (0..row_count)
                    .map(|j| BigInt::from(u64::from(i == j)))
                    .collect()
            })
            .collect();

        let mut pivots = Vec::new();
        let mut done = 0usize; // rows 0..done hold pivots already
        for col in 0..cols {
            // Euclidean elimination below the processed prefix.
            loop {
                let mut best: Option<usize> = None;
                for i in done..work.len() {
                    if !work[i][col].is_zero() {
                        best = match best {
                            None => Some(i),
                            Some(b) => {
                                if work[i][col].abs() < work[b][col].abs() {
                                    Some(i)
                                } else {
                                    Some(b)
                                }
                            }
                        };
                    }
                }
                let Some(b) = best else { break };
                let mut others = false;
                let brow = work[b].clone();
                let burow = u[b].clone();
                for i in done..work.len() {
                    if i != b && !work[i][col].is_zero() {
                        others = true;
                        let q = work[i][col].div_floor(&brow[col]);
                        if !q.is_zero() {
                            sub_scaled(&mut work[i], &brow, &q);
                            sub_scaled(&mut u[i], &burow, &q);
                        }
                    }
                }
                if !others {
                    // b is the unique nonzero; promote it to a pivot row.
                    work.swap(done, b);
                    u.swap(done, b);
                    if work[done][col].is_negative() {
                        for v in work[done].iter_mut().chain(u[done].iter_mut()) {
                            *v = -v.clone();
                        }
                    }
                    // Normalize entries above the pivot into [0, pivot).
                    let prow = work[done].clone();
                    let purow = u[done].clone();
                    for i in 0..done {
                        let q = work[i][col].div_floor(&prow[col]);
                        if !q.is_zero() {
                            sub_scaled(&mut work[i], &prow, &q);
                            sub_scaled(&mut u[i], &purow, &q);
                        }
                    }
                    pivots.push(col);
                    done += 1;
                    break;
                }
            }
        }
        work.truncate(done);
        u.truncate(done);
        HnfSystem {
            cols,
            row_count,
            h: work,
            pivots,
            u,
        }
    }

    /// Number of linearly independent rows over ℚ.
    pub fn rank(&self) -> usize {
        self.h.len()
    }

    /// Integer coefficients `x` over the original rows with `x·A = target`,
    /// or `None` when the target is outside the row lattice.
    pub fn solve(&self, target: &[i64]) -> Option<Vec<BigInt>> {
        assert_eq!(target.len(), self.cols, "column count mismatch");
        let mut residual: Vec<BigInt> = target.iter().map(|&x| BigInt::from(x)).collect();
        let mut coeffs: Vec<BigInt> = vec![BigInt::zero(); self.h.len()];
        for (i, &p) in self.pivots.iter().enumerate() {
            if residual[p].is_zero() {
                continue;
            }
            let (q, r) = residual[p].div_rem(&self.h[i][p]);
            if !r.is_zero() {
                return None;
            }
            sub_scaled(&mut residual, &self.h[i], &q);
            coeffs[i] = q;
        }
        if residual.iter().any(|v| !v.is_zero()) {
            return None;
        }
        let mut x = vec![BigInt::zero(); self.row_count];
        for (i, q) in coeffs.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            for (xj, uj) in x.iter_mut().zip(&self.u[i]) {
                *xj += uj * q;
            }
        }
        Some(x)
    }
}
