//! Linear algebra over GF(2) on word-packed bit rows.

use crate::error::{Error, Result};

/// Largest solution coset searched by [`solve_min_weight`].
pub const MAX_COSET_BITS: usize = 20;

/// Row of bits packed into `u64` words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitRow {
    words: Vec<u64>,
    len: usize,
}

impl BitRow {
    pub fn zeros(len: usize) -> BitRow {
        BitRow {
            words: vec![0; len.div_ceil(64).max(1)],
            len,
        }
    }

    pub fn from_bits(bits: &[u8]) -> BitRow {
        let mut row = BitRow::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b & 1 == 1 {
                row.set(i, true);
            }
        }
        row
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, v: bool) {
        let mask = 1u64 << (i % 64);
        if v {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| u8::from(self.get(i))).collect()
    }
}

/// Dense matrix over GF(2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: Vec<BitRow>,
    cols: usize,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> BitMatrix {
        BitMatrix {
            rows: vec![BitRow::zeros(cols); rows],
            cols,
        }
    }

    /// Reduce an integer matrix mod 2.
    pub fn from_int_rows(rows: &[Vec<i64>], cols: usize) -> BitMatrix {
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v.rem_euclid(2) == 1 {
                    m.rows[i].set(j, true);
                }
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<BitRow>, cols: usize) -> BitMatrix {
        BitMatrix { rows, cols }
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitRow {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row.get(col) {
                    row.xor_assign(&pivot);
                }
            }
            rank += 1;
        }
        rank
    }

    /// `A · x` for a bit vector `x` of length `cols`.
    pub fn mul_vec(&self, x: &[u8]) -> Vec<u8> {
        self.rows
            .iter()
            .map(|row| {
                let s: usize = row.ones().filter(|&j| x[j] & 1 == 1).count();
                (s % 2) as u8
            })
            .collect()
    }
}

/// Row-reduced system `A x = b` with the bookkeeping needed for solutions,
/// certificates and the null space.
struct Echelon {
    rows: Vec<BitRow>,
    rhs: Vec<bool>,
    /// Which original equations were summed into each row.
    provenance: Vec<BitRow>,
    pivots: Vec<usize>,
}

fn eliminate(a: &BitMatrix, b: &[u8]) -> Echelon {
    let n = a.num_rows();
    let mut rows = a.rows.clone();
    let mut rhs: Vec<bool> = b.iter().map(|&v| v & 1 == 1).collect();
    let mut provenance: Vec<BitRow> = (0..n)
        .map(|i| {
            let mut r = BitRow::zeros(n);
            r.set(i, true);
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    // ascending column order fixes which variables become pivots
    for col in 0..a.num_cols() {
        let Some(p) = (rank..n).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(rank, p);
        rhs.swap(rank, p);
        provenance.swap(rank, p);
        let (pr, pb, pp) = (rows[rank].clone(), rhs[rank], provenance[rank].clone());
        for r in 0..n {
            if r != rank && rows[r].get(col) {
                rows[r].xor_assign(&pr);
                rhs[r] ^= pb;
                provenance[r].xor_assign(&pp);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    Echelon {
        rows,
        rhs,
        provenance,
        pivots,
    }
}

fn check_dims(a: &BitMatrix, b: &[u8]) -> Result<()> {
    if a.num_rows() != b.len() {
        return Err(Error::InvalidInput(format!(
            "right-hand side has length {}, expected {}",
            b.len(),
            a.num_rows()
        )));
    }
    Ok(())
}

/// Solve `A x = b` over GF(2) with free variables set to zero.
///
/// On an inconsistent system the error carries the indices of equations whose
/// sum reads `0 = 1`.
pub fn solve(a: &BitMatrix, b: &[u8]) -> Result<Vec<u8>> {
    check_dims(a, b)?;
    let e = eliminate(a, b);
    let rank = e.pivots.len();
    if let Some(r) = (rank..e.rows.len()).find(|&r| e.rhs[r]) {
        return Err(Error::NoSolution {
            certificate: e.provenance[r].ones().collect(),
        });
    }
    let mut x = vec![0u8; a.num_cols()];
    for (r, &col) in e.pivots.iter().enumerate() {
        x[col] = u8::from(e.rhs[r]);
    }
    Ok(x)
}

/// Basis of `{x : A x = 0}`, one vector per free column (ascending).
pub fn null_space(a: &BitMatrix) -> Vec<Vec<u8>> {
    let e = eliminate(a, &vec![0; a.num_rows()]);
    let cols = a.num_cols();
    let mut is_pivot = vec![false; cols];
    for &c in &e.pivots {
        is_pivot[c] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = vec![0u8; cols];
            x[f] = 1;
            for (r, &col) in e.pivots.iter().enumerate() {
                if e.rows[r].get(f) {
                    x[col] = 1;
                }
            }
            x
        })
        .collect()
}

/// Minimal-weight solution of `A x = b`, searching the whole solution coset.
/// Ties are broken by the lexicographically smallest bit vector.
pub fn solve_min_weight(a: &BitMatrix, b: &[u8]) -> Result<Vec<u8>> {
    let base = solve(a, b)?;
    let kernel = null_space(a);
    if kernel.len() > MAX_COSET_BITS {
        return Err(Error::CapExceeded {
            what: "solution coset dimension",
            value: kernel.len(),
            cap: MAX_COSET_BITS,
        });
    }
    let mut best = base.clone();
    let weight = |x: &[u8]| x.iter().filter(|&&v| v == 1).count();
    for mask in 1u64..(1u64 << kernel.len()) {
        let mut x = base.clone();
        for (t, k) in kernel.iter().enumerate() {
            if mask >> t & 1 == 1 {
                for (xi, ki) in x.iter_mut().zip(k) {
                    *xi ^= ki;
                }
            }
        }
        if (weight(&x), &x) < (weight(&best), &best) {
            best = x;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3_d() -> BitMatrix {
        // fixed dimensions of the S3 real irreps on (1), (C2), (C3), (S3)
        BitMatrix::from_int_rows(&[vec![1, 1, 2], vec![1, 0, 1], vec![1, 1, 0], vec![1, 0, 0]], 3)
    }

    #[test]
    fn bit_rows() {
        let mut r = BitRow::zeros(130);
        r.set(0, true);
        r.set(129, true);
        assert_eq!(r.count_ones(), 2);
        assert_eq!(r.ones().collect::<Vec<_>>(), vec![0, 129]);
        let s = r.clone();
        r.xor_assign(&s);
        assert!(r.is_zero());
        assert_eq!(BitRow::from_bits(&[1, 0, 1]).to_bits(), vec![1, 0, 1]);
    }

    #[test]
    fn ranks() {
        assert_eq!(s3_d().rank(), 3);
        assert_eq!(BitMatrix::from_int_rows(&[vec![1, 1], vec![1, 0]], 2).rank(), 2);
        assert_eq!(BitMatrix::from_int_rows(&[vec![2, 4], vec![1, 1], vec![3, 5]], 2).rank(), 1);
        assert_eq!(BitMatrix::zeros(3, 3).rank(), 0);
    }

    #[test]
    fn s3_parity_systems() {
        let d = s3_d();
        assert_eq!(solve(&d, &[0, 0, 0, 0]).unwrap(), vec![0, 0, 0]);
        assert_eq!(solve(&d, &[1, 0, 1, 0]).unwrap(), vec![0, 1, 0]);
        assert_eq!(solve(&d, &[1, 1, 1, 0]).unwrap(), vec![0, 1, 1]);
        assert_eq!(solve(&d, &[1, 1, 1, 1]).unwrap(), vec![1, 0, 0]);
    }

    #[test]
    fn inconsistent_system_certificate() {
        // x = 1 and x = 0
        let a = BitMatrix::from_int_rows(&[vec![1], vec![1]], 1);
        let b = [1u8, 0];
        match solve(&a, &b) {
            Err(Error::NoSolution { certificate }) => {
                let mut lhs = BitRow::zeros(1);
                let mut rhs = 0u8;
                for &i in &certificate {
                    lhs.xor_assign(a.row(i));
                    rhs ^= b[i];
                }
                assert!(lhs.is_zero());
                assert_eq!(rhs, 1);
            }
            other => panic!("expected NoSolution, got {other:?}"),
        }
    }

    #[test]
    fn free_variables_are_zero() {
        // x0 + x1 = 1: pivot x0, free x1
        let a = BitMatrix::from_int_rows(&[vec![1, 1]], 2);
        assert_eq!(solve(&a, &[1]).unwrap(), vec![1, 0]);
        assert_eq!(null_space(&a), vec![vec![1, 1]]);
    }

    #[test]
    fn min_weight() {
        // columns 0 and 1 sum to column 2, so (0,0,1) beats (1,1,0)
        let a = BitMatrix::from_int_rows(&[vec![1, 0, 1], vec![0, 1, 1]], 3);
        assert_eq!(solve(&a, &[1, 1]).unwrap(), vec![1, 1, 0]);
        assert_eq!(solve_min_weight(&a, &[1, 1]).unwrap(), vec![0, 0, 1]);
    }

    #[test]
    fn dimension_mismatch() {
        assert!(matches!(solve(&s3_d(), &[1, 0]), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn wide_rows() {
        let n = 70;
        let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(j >= i)).collect()).collect();
        let a = BitMatrix::from_int_rows(&rows, n);
        assert_eq!(a.rank(), n);
        let b: Vec<u8> = (0..n).map(|i| (i % 2) as u8).collect();
        let x = solve(&a, &b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
    }
}
