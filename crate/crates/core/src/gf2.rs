//! Dense linear algebra over GF(2).

use std::fmt;

/// Fixed-length bit vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> BitVec {
        BitVec { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> BitVec {
        let mut v = BitVec::zeros(len);
        for i in ones {
            v.toggle(i);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> BitVec {
        BitVec::from_indices(bits.len(), bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        if self.get(i) != value {
            self.toggle(i);
        }
    }

    #[inline]
    pub fn toggle(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    fn first_one(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, &w)| w != 0).map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    cols: usize,
    rows: Vec<BitVec>,
}

/// Solutions of `xᵀA = b`: one particular solution plus a basis of the left kernel.
#[derive(Debug, Clone)]
pub struct RowSolution {
    pub particular: BitVec,
    pub kernel: Vec<BitVec>,
}

impl Gf2Matrix {
    pub fn new(cols: usize, rows: Vec<BitVec>) -> Gf2Matrix {
        assert!(rows.iter().all(|r| r.len() == cols));
        Gf2Matrix { cols, rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    /// XOR of the selected rows.
    pub fn combine(&self, selection: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.cols);
        for i in selection.ones() {
            out.xor_assign(&self.rows[i]);
        }
        out
    }

    /// Row echelon form with each reduced row tagged by the combination of
    /// original rows producing it.
    fn eliminate(&self) -> (Vec<(usize, BitVec, BitVec)>, Vec<BitVec>) {
        let m = self.rows.len();
        let mut pivots: Vec<(usize, BitVec, BitVec)> = Vec::new();
        let mut kernel = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            let mut r = row.clone();
            let mut tag = BitVec::from_indices(m, [i]);
            for (col, prow, ptag) in &pivots {
                if r.get(*col) {
                    r.xor_assign(prow);
                    tag.xor_assign(ptag);
                }
            }
            match r.first_one() {
                Some(col) => {
                    // keep earlier pivots reduced at the new column
                    for (_, prow, ptag) in pivots.iter_mut() {
                        if prow.get(col) {
                            prow.xor_assign(&r);
                            ptag.xor_assign(&tag);
                        }
                    }
                    pivots.push((col, r, tag));
                }
                None => kernel.push(tag),
            }
        }
        (pivots, kernel)
    }

    pub fn rank(&self) -> usize {
        self.eliminate().0.len()
    }

    /// Basis of `{x : xᵀA = 0}`.
    pub fn left_kernel(&self) -> Vec<BitVec> {
        self.eliminate().1
    }

    /// Solves `xᵀA = b`, or `None` if `b` is outside the row space.
    pub fn solve_left(&self, b: &BitVec) -> Option<RowSolution> {
        assert_eq!(b.len(), self.cols);
        let (pivots, kernel) = self.eliminate();
        let mut r = b.clone();
        let mut x = BitVec::zeros(self.rows.len());
        for (col, prow, ptag) in &pivots {
            if r.get(*col) {
                r.xor_assign(prow);
                x.xor_assign(ptag);
            }
        }
        r.is_zero().then_some(RowSolution { particular: x, kernel })
    }
}

impl RowSolution {
    /// Minimum-weight element of the solution coset, ties broken by the
    /// lexicographically smallest support. Exhaustive over `2^dim` elements.
    pub fn min_weight(&self) -> BitVec {
        let k = self.kernel.len();
        assert!(k < 32, "kernel dimension {k} is too large to enumerate");
        let mut best = self.particular.clone();
        let mut best_key = key(&best);
        let mut cur = self.particular.clone();
        // Gray-code walk through the coset.
        for step in 1u64..(1u64 << k) {
            let flip = step.trailing_zeros() as usize;
            cur.xor_assign(&self.kernel[flip]);
            let ck = key(&cur);
            if ck < best_key {
                best = cur.clone();
                best_key = ck;
            }
        }
        best
    }

    pub fn coset_size(&self) -> u64 {
        1u64 << self.kernel.len()
    }
}

fn key(v: &BitVec) -> (usize, Vec<usize>) {
    (v.weight(), v.ones().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_ops() {
        let mut v = BitVec::zeros(130);
        v.toggle(0);
        v.toggle(129);
        assert_eq!(v.weight(), 2);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 129]);
        v.set(129, false);
        assert_eq!(v.weight(), 1);
    }

    #[test]
    fn solve_and_kernel() {
        // rows: 110, 011, 101 ; row space has dimension 2
        let a = Gf2Matrix::new(
            3,
            vec![BitVec::from_indices(3, [0, 1]), BitVec::from_indices(3, [1, 2]), BitVec::from_indices(3, [0, 2])],
        );
        assert_eq!(a.rank(), 2);
        assert_eq!(a.left_kernel().len(), 1);
        let sol = a.solve_left(&BitVec::from_indices(3, [0, 2])).unwrap();
        assert_eq!(a.combine(&sol.particular), BitVec::from_indices(3, [0, 2]));
        assert_eq!(sol.min_weight().weight(), 1);
        assert!(a.solve_left(&BitVec::from_indices(3, [0])).is_none());
    }
}
