//! Exact univariate polynomials over ℚ: characteristic polynomials,
//! square-free decomposition and Sturm root counting.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// Coefficients from the constant term upward; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(Vec<Rational>);

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Poly {
        Poly::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub fn constant(&self) -> Rational {
        self.0.first().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) => Poly::new(self.0.iter().map(|c| c / l).collect()),
            None => self.clone(),
        }
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.0.iter().map(|c| -c).collect())
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.0.clone();
        let dd = divisor.degree();
        let lead = divisor.leading().unwrap().clone();
        if self.is_zero() || self.degree() < dd {
            return (Poly::new(vec![]), self.clone());
        }
        let mut quot = vec![Rational::zero(); self.degree() - dd + 1];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / &lead;
            if !c.is_zero() {
                for (j, d) in divisor.0.iter().enumerate() {
                    rem[i + j] -= &c * d;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's square-free decomposition: `(factor, multiplicity)` pairs with
    /// `self = c · Π factor^multiplicity`.
    pub fn square_free_decomposition(&self) -> Vec<(Poly, usize)> {
        if self.degree() == 0 {
            return Vec::new();
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).0;
        let mut c = df.div_rem(&a0).0;
        let mut d = c.clone_sub(&b.derivative());
        let mut out = Vec::new();
        let mut mult = 1;
        loop {
            let a = b.gcd(&d);
            if a.degree() > 0 {
                out.push((a.clone(), mult));
            }
            b = b.div_rem(&a).0;
            if b.degree() == 0 {
                break;
            }
            c = d.div_rem(&a).0;
            d = c.clone_sub(&b.derivative());
            mult += 1;
        }
        out
    }

    fn clone_sub(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly::new(
            (0..n)
                .map(|i| {
                    let a = self.0.get(i).cloned().unwrap_or_else(Rational::zero);
                    let b = other.0.get(i).cloned().unwrap_or_else(Rational::zero);
                    a - b
                })
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }
}

/// `det(λI − A)` by the Faddeev–LeVerrier recursion in exact arithmetic.
pub fn characteristic_polynomial(a: &[Vec<Rational>]) -> Poly {
    let n = a.len();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1} I
        let prev = m;
        let mut next = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = Rational::zero();
                for l in 0..n {
                    if !a[i][l].is_zero() && !prev[l][j].is_zero() {
                        s += &a[i][l] * &prev[l][j];
                    }
                }
                if i == j {
                    s += &coeffs[n - k + 1];
                }
                next[i][j] = s;
            }
        }
        // c_{n−k} = −tr(A·M_k)/k
        let mut tr = Rational::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &a[i][l] * &next[l][i];
            }
        }
        coeffs[n - k] = -tr / Rational::from_integer(BigInt::from(k));
        m = next;
    }
    Poly::new(coeffs)
}

fn sign_changes(signs: impl Iterator<Item = i32>) -> usize {
    let mut prev = 0;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if prev != 0 && s != prev {
            changes += 1;
        }
        prev = s;
    }
    changes
}

fn sign(x: &Rational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Standard Sturm sequence `p, p', −rem(p, p'), …`.
pub fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone()];
    let mut cur = p.derivative();
    while !cur.is_zero() {
        let (_, r) = seq.last().unwrap().div_rem(&cur);
        seq.push(cur);
        cur = r.neg();
    }
    seq
}

/// Number of distinct real roots of `p` in `(−∞, 0)`. Requires `p(0) ≠ 0`.
pub fn distinct_negative_roots(p: &Poly) -> usize {
    let seq = sturm_sequence(p);
    let at_neg_inf = sign_changes(seq.iter().map(|q| {
        let l = q.leading().map_or(0, sign);
        if q.degree() % 2 == 1 {
            -l
        } else {
            l
        }
    }));
    let at_zero = sign_changes(seq.iter().map(|q| sign(&q.constant())));
    at_neg_inf - at_zero
}

/// Number of negative real roots counted with multiplicity. Requires `p(0) ≠ 0`.
pub fn negative_roots_with_multiplicity(p: &Poly) -> usize {
    p.square_free_decomposition()
        .iter()
        .map(|(f, m)| m * distinct_negative_roots(f))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn charpoly_small() {
        assert_eq!(
            characteristic_polynomial(&mat(&[&[0, 1], &[1, 0]])),
            Poly::from_ints(&[-1, 0, 1])
        );
        assert_eq!(
            characteristic_polynomial(&mat(&[&[-2, 0], &[0, 3]])),
            Poly::from_ints(&[-6, -1, 1])
        );
        assert_eq!(characteristic_polynomial(&[]), Poly::from_ints(&[1]));
    }

    #[test]
    fn charpoly_matches_brute_force_determinant() {
        // A = [[2,1,0],[1,3,1],[0,1,4]]; det(λI−A) = λ³ − 9λ² + 24λ − 18
        let a = mat(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(characteristic_polynomial(&a), Poly::from_ints(&[-18, 24, -9, 1]));
    }

    #[test]
    fn sturm_counts() {
        // (x+1)(x+2)(x-3)
        let p = Poly::from_ints(&[-6, -7, 0, 1]);
        assert_eq!(distinct_negative_roots(&p), 2);
        // x² + 1
        assert_eq!(distinct_negative_roots(&Poly::from_ints(&[1, 0, 1])), 0);
    }

    #[test]
    fn multiplicities() {
        // (x+1)^3 (x-2) = x^4 + x^3 - 3x^2 - 5x - 2
        let p = Poly::from_ints(&[-2, -5, -3, 1, 1]);
        assert_eq!(distinct_negative_roots(&p), 1);
        assert_eq!(negative_roots_with_multiplicity(&p), 3);
        let sq = p.square_free_decomposition();
        assert_eq!(sq.len(), 2);
        assert_eq!(sq[0], (Poly::from_ints(&[-2, 1]), 1));
        assert_eq!(sq[1], (Poly::from_ints(&[1, 1]), 3));
    }
}
