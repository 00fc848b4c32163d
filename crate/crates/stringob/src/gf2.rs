//! Bit-packed GF(2) vectors and row reduction.
//!
//! Rows are packed 64 columns per word. Reduction is plain Gauss–Jordan
//! with a deterministic pivot choice: lowest column index first, ties
//! broken by lowest original row index. Alongside each reduced row we keep
//! the combination of original rows that produced it, so span membership
//! queries can return a witness over the original row indices.

use std::fmt;

/// A fixed-length vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, v: bool) {
        debug_assert!(i < self.len);
        if v {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn toggle(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Parity of the intersection: `⟨self, other⟩` over GF(2).
    pub fn dot(&self, other: &BitVec) -> bool {
        debug_assert_eq!(self.len, other.len);
        let mut acc = 0u64;
        for (w, o) in self.words.iter().zip(&other.words) {
            acc ^= w & o;
        }
        acc.count_ones() % 2 == 1
    }

    /// Indices of the set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec[{}]{{", self.len)?;
        for (k, i) in self.ones().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// A row-reduced GF(2) system with witness tracking.
pub struct ReducedSystem {
    cols: usize,
    row_count: usize,
    /// Reduced rows in pivot order.
    rows: Vec<BitVec>,
    /// Pivot column of each reduced row.
    pivots: Vec<usize>,
    /// Combination of original rows forming each reduced row.
    combos: Vec<BitVec>,
}

/// Outcome of a span-membership query.
pub enum SolveOutcome {
    /// The target is in the row span; the witness is the set of original
    /// row indices whose sum equals the target.
    InSpan { witness: BitVec },
    /// Not in the span; the certificate is a functional `y` with
    /// `y · row = 0` for every original row and `y · target = 1`.
    NotInSpan { certificate: BitVec },
}

impl ReducedSystem {
    /// Gauss–Jordan reduction. Pivot selection: among the not-yet-pivoted
    /// rows, take the one whose leading column is smallest, ties broken by
    /// the smallest original row index.
    pub fn reduce(original: &[BitVec], cols: usize) -> ReducedSystem {
        let row_count = original.len();
        let mut work: Vec<(usize, BitVec, BitVec, Option<usize>)> = original
            .iter()
            .enumerate()
            .map(|(i, r)| {
                debug_assert_eq!(r.len(), cols);
                let mut combo = BitVec::zeros(row_count);
                combo.set(i, true);
                let lead = r.first_one();
                (i, r.clone(), combo, lead)
            })
            .collect();

        let mut rows: Vec<BitVec> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        let mut combos: Vec<BitVec> = Vec::new();

        loop {
            let mut best: Option<(usize, usize)> = None; // (lead col, position)
            for (pos, (idx, _, _, lead)) in work.iter().enumerate() {
                if let Some(l) = lead {
                    match best {
                        None => best = Some((*l, pos)),
                        Some((bl, bpos)) => {
                            let bidx = work[bpos].0;
                            if *l < bl || (*l == bl && *idx < bidx) {
                                best = Some((*l, pos));
                            }
                        }
                    }
                }
            }
            let Some((pcol, pos)) = best else { break };
            let (_, prow, pcombo, _) = work.remove(pos);
            // Clear the pivot column everywhere else.
            for (_, row, combo, lead) in work.iter_mut() {
                if row.get(pcol) {
                    row.xor_assign(&prow);
                    combo.xor_assign(&pcombo);
                    *lead = row.first_one();
                }
            }
            for (i, row) in rows.iter_mut().enumerate() {
                let row: &mut BitVec = row;
                if row.get(pcol) {
                    row.xor_assign(&prow);
                    combos[i].xor_assign(&pcombo);
                }
            }
            rows.push(prow);
            pivots.push(pcol);
            combos.push(pcombo);
        }

        ReducedSystem {
            cols,
            row_count,
            rows,
            pivots,
            combos,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Decides whether `target` lies in the span of the original rows.
    pub fn solve(&self, target: &BitVec) -> SolveOutcome {
        assert_eq!(target.len(), self.cols, "column count mismatch");
        let mut residual = target.clone();
        let mut witness = BitVec::zeros(self.row_count);
        for (i, &p) in self.pivots.iter().enumerate() {
            if residual.get(p) {
                residual.xor_assign(&self.rows[i]);
                witness.xor_assign(&self.combos[i]);
            }
        }
        if residual.is_zero() {
            SolveOutcome::InSpan { witness }
        } else {
            // Build a functional vanishing on the row space but not on the
            // target: 1 on the first free column where the residual is set,
            // plus compensating entries on the pivot columns.
            let free = residual.first_one().expect("nonzero residual");
            let mut certificate = BitVec::zeros(self.cols);
            certificate.set(free, true);
            for (i, &p) in self.pivots.iter().enumerate() {
                if self.rows[i].get(free) {
                    certificate.set(p, true);
                }
            }
            SolveOutcome::NotInSpan { certificate }
        }
    }
}
