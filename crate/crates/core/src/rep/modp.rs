//! Arithmetic and linear algebra over a small prime field.

#[derive(Debug, Clone, Copy)]
pub(crate) struct Fp {
    p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        Fp { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    /// A generator of the multiplicative group.
    pub fn primitive_root(&self) -> u64 {
        let phi = self.p - 1;
        let factors = prime_factors(phi);
        (2..self.p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, phi / q) != 1))
            .unwrap_or(1)
    }

    /// Basis of `{c : M c = 0}` for a `rows × cols` matrix.
    pub fn nullspace(&self, m: &[Vec<u64>], cols: usize) -> Vec<Vec<u64>> {
        let mut a: Vec<Vec<u64>> = m.to_vec();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            let Some(r) = (row..a.len()).find(|&r| a[r][col] != 0) else {
                continue;
            };
            a.swap(row, r);
            let inv = self.inv(a[row][col]);
            for x in a[row].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for r in 0..a.len() {
                if r != row && a[r][col] != 0 {
                    let f = a[r][col];
                    for c in 0..cols {
                        let t = self.mul(f, a[row][c]);
                        a[r][c] = self.sub(a[r][c], t);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == a.len() {
                break;
            }
        }
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u64; cols];
                v[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = self.sub(0, a[r][f]);
                }
                v
            })
            .collect()
    }

    /// Reduced row echelon form of the given rows; returns `(rows, pivots)`.
    pub fn rref(&self, rows: Vec<Vec<u64>>) -> (Vec<Vec<u64>>, Vec<usize>) {
        let mut a = rows;
        let cols = a.first().map_or(0, |r| r.len());
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            if row == a.len() {
                break;
            }
            let Some(r) = (row..a.len()).find(|&r| a[r][col] != 0) else {
                continue;
            };
            a.swap(row, r);
            let inv = self.inv(a[row][col]);
            for x in a[row].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for r in 0..a.len() {
                if r != row && a[r][col] != 0 {
                    let f = a[r][col];
                    for c in 0..cols {
                        let t = self.mul(f, a[row][c]);
                        a[r][c] = self.sub(a[r][c], t);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        a.truncate(row);
        (a, pivots)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest prime `p ≡ 1 (mod exponent)` with `p > 2·√order`.
pub(crate) fn dixon_prime(order: usize, exponent: usize) -> u64 {
    let bound = 2.0 * (order as f64).sqrt();
    let e = exponent as u64;
    let mut p = e + 1;
    loop {
        if (p as f64) > bound && is_prime(p) {
            return p;
        }
        p += e;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_choice() {
        assert_eq!(dixon_prime(6, 6), 7);
        assert_eq!(dixon_prime(1, 1), 3);
        assert_eq!(dixon_prime(8, 4), 13);
        assert_eq!(dixon_prime(120, 60), 61);
    }

    #[test]
    fn primitive_roots() {
        for p in [3u64, 7, 13, 61, 421] {
            let f = Fp::new(p);
            let g = f.primitive_root();
            let mut x = 1;
            let mut seen = std::collections::HashSet::new();
            for _ in 0..p - 1 {
                x = f.mul(x, g);
                seen.insert(x);
            }
            assert_eq!(seen.len() as u64, p - 1);
        }
    }

    #[test]
    fn nullspace_small() {
        let f = Fp::new(7);
        let m = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = f.nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            for row in &m {
                let s = row.iter().zip(&v).fold(0, |acc, (a, b)| f.add(acc, f.mul(*a, *b)));
                assert_eq!(s, 0);
            }
        }
    }
}
