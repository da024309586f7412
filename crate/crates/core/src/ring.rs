//! Burnside ring arithmetic over the basis of subgroup classes.
//!
//! Elements are integer coefficient vectors. Products go through the
//! multiplication tensor `M[i][j][k] = n_ij^k`, which is built from the table
//! of marks by back-substitution from the top class downward. The ghost map
//! `a ↦ Ψ a` turns products into componentwise products and identifies units
//! with elements whose ghost vector has every entry `±1`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::marks::MarksMatrix;
use crate::subgroups::ClassRef;

/// Default cap on `N` for unit enumeration.
pub const DEFAULT_MAX_CLASSES: usize = 25;

/// An element of `A(G)` in the basis `(H_1), …, (H_N)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BurnsideElement {
    #[serde(skip)]
    class_ref: ClassRef,
    coeffs: Vec<i64>,
}

impl BurnsideElement {
    pub fn new(class_ref: ClassRef, coeffs: Vec<i64>) -> Self {
        BurnsideElement { class_ref, coeffs }
    }

    pub fn zero(class_ref: ClassRef, n: usize) -> Self {
        Self::new(class_ref, vec![0; n])
    }

    /// The basis element `(H_i)`.
    pub fn basis(class_ref: ClassRef, n: usize, i: usize) -> Self {
        let mut coeffs = vec![0; n];
        coeffs[i] = 1;
        Self::new(class_ref, coeffs)
    }

    /// The multiplicative identity `(G)`.
    pub fn one(class_ref: ClassRef, n: usize) -> Self {
        Self::basis(class_ref, n, n - 1)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<i64> {
        self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn class_ref(&self) -> ClassRef {
        self.class_ref
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check(&self, other: &BurnsideElement) -> Result<()> {
        if self.class_ref != other.class_ref || self.len() != other.len() {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &BurnsideElement) -> Result<BurnsideElement> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::IntegerOverflow("addition")))
            .collect::<Result<_>>()?;
        Ok(Self::new(self.class_ref, coeffs))
    }

    pub fn checked_sub(&self, other: &BurnsideElement) -> Result<BurnsideElement> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> BurnsideElement {
        Self::new(self.class_ref, self.coeffs.iter().map(|c| -c).collect())
    }
}

/// An element of the ghost ring `(ℤ^N, ⊙)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GhostVector {
    #[serde(skip)]
    class_ref: ClassRef,
    values: Vec<i64>,
}

impl GhostVector {
    pub fn new(class_ref: ClassRef, values: Vec<i64>) -> Self {
        GhostVector { class_ref, values }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn class_ref(&self) -> ClassRef {
        self.class_ref
    }

    /// Componentwise product.
    pub fn hadamard(&self, other: &GhostVector) -> Result<GhostVector> {
        if self.class_ref != other.class_ref || self.values.len() != other.values.len() {
            return Err(Error::GroupMismatch);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.checked_mul(*b).ok_or(Error::IntegerOverflow("ghost product")))
            .collect::<Result<_>>()?;
        Ok(GhostVector::new(self.class_ref, values))
    }

    /// True iff every component is `±1`.
    pub fn is_sign_vector(&self) -> bool {
        self.values.iter().all(|v| v.abs() == 1)
    }
}

/// The structure constants `n_ij^k` of `A(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultTensor {
    class_ref: ClassRef,
    n: usize,
    entries: Vec<i64>,
}

impl MultTensor {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn class_ref(&self) -> ClassRef {
        self.class_ref
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> i64 {
        self.entries[(i * self.n + j) * self.n + k]
    }

    /// Coefficients of `(H_i)·(H_j)`.
    pub fn row(&self, i: usize, j: usize) -> &[i64] {
        let start = (i * self.n + j) * self.n;
        &self.entries[start..start + self.n]
    }

    /// Nested `[i][j][k]` copy for serialization.
    pub fn to_nested(&self) -> Vec<Vec<Vec<i64>>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.row(i, j).to_vec()).collect())
            .collect()
    }
}

/// Multiplication tensor from the table of marks.
///
/// For each pair `(i, j)` and `k = N-1, …, 0`:
/// `M[i,j,k] = (Ψ[k,i]·Ψ[k,j] − Σ_{l>k} M[i,j,l]·Ψ[k,l]) / Ψ[k,k]`.
/// Every division must be exact.
pub fn mult_tensor(psi: &MarksMatrix) -> Result<MultTensor> {
    const OVERFLOW: Error = Error::IntegerOverflow("multiplication tensor");
    let n = psi.len();
    let mut entries = vec![0i64; n * n * n];
    for k in (0..n).rev() {
        let pivot = psi.get(k, k);
        for j in (0..n).rev() {
            for i in (0..n).rev() {
                let base = (i * n + j) * n;
                let mut acc = psi
                    .get(k, i)
                    .checked_mul(psi.get(k, j))
                    .ok_or(OVERFLOW)?;
                for l in (k + 1..n).rev() {
                    let term = entries[base + l]
                        .checked_mul(psi.get(k, l))
                        .ok_or(OVERFLOW)?;
                    acc = acc
                        .checked_sub(term)
                        .ok_or(OVERFLOW)?;
                }
                if acc % pivot != 0 {
                    return Err(Error::InexactDivision {
                        context: format!("multiplication tensor M[{i},{j},{k}]"),
                        numerator: acc,
                        denominator: pivot,
                    });
                }
                entries[base + k] = acc / pivot;
            }
        }
    }
    Ok(MultTensor {
        class_ref: psi.class_ref(),
        n,
        entries,
    })
}

/// `c_k = Σ_{i,j} a_i b_j M[i,j,k]`.
pub fn multiply(a: &BurnsideElement, b: &BurnsideElement, m: &MultTensor) -> Result<BurnsideElement> {
    a.check(b)?;
    if a.class_ref != m.class_ref || a.len() != m.n {
        return Err(Error::GroupMismatch);
    }
    let n = m.n;
    let mut c = vec![0i64; n];
    for (i, &ai) in a.coeffs.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.coeffs.iter().enumerate() {
            if bj == 0 {
                continue;
            }
            let ab = ai.checked_mul(bj).ok_or(Error::IntegerOverflow("product"))?;
            for (ck, &mk) in c.iter_mut().zip(m.row(i, j)) {
                if mk != 0 {
                    let t = ab.checked_mul(mk).ok_or(Error::IntegerOverflow("product"))?;
                    *ck = ck.checked_add(t).ok_or(Error::IntegerOverflow("product"))?;
                }
            }
        }
    }
    Ok(BurnsideElement::new(a.class_ref, c))
}

/// `a^e` by repeated squaring.
pub fn power(a: &BurnsideElement, mut e: u64, m: &MultTensor) -> Result<BurnsideElement> {
    let mut result = BurnsideElement::one(a.class_ref, a.len());
    let mut base = a.clone();
    while e > 0 {
        if e & 1 == 1 {
            result = multiply(&result, &base, m)?;
        }
        e >>= 1;
        if e > 0 {
            base = multiply(&base, &base, m)?;
        }
    }
    Ok(result)
}

/// `Ψ a`.
pub fn ghost_map(psi: &MarksMatrix, a: &BurnsideElement) -> Result<GhostVector> {
    if a.class_ref != psi.class_ref() || a.len() != psi.len() {
        return Err(Error::GroupMismatch);
    }
    let values = psi
        .rows()
        .iter()
        .map(|row| {
            row.iter().zip(&a.coeffs).try_fold(0i64, |acc, (m, c)| {
                m.checked_mul(*c)
                    .and_then(|t| acc.checked_add(t))
                    .ok_or(Error::IntegerOverflow("ghost map"))
            })
        })
        .collect::<Result<_>>()?;
    Ok(GhostVector::new(a.class_ref, values))
}

/// Solve `Ψ a = v` over the integers by back-substitution from the top class.
///
/// Returns [`Error::NotIntegral`] with the first index (in processing order)
/// whose division leaves a remainder.
pub fn ghost_preimage(psi: &MarksMatrix, v: &GhostVector) -> Result<BurnsideElement> {
    let n = psi.len();
    if v.class_ref != psi.class_ref() || v.values.len() != n {
        return Err(Error::GroupMismatch);
    }
    let mut a = vec![0i64; n];
    for i in (0..n).rev() {
        let mut acc = v.values[i];
        for j in i + 1..n {
            let t = psi
                .get(i, j)
                .checked_mul(a[j])
                .ok_or(Error::IntegerOverflow("ghost preimage"))?;
            acc = acc.checked_sub(t).ok_or(Error::IntegerOverflow("ghost preimage"))?;
        }
        let pivot = psi.get(i, i);
        if acc % pivot != 0 {
            let g = num_integer::gcd(acc, pivot);
            return Err(Error::NotIntegral {
                index: i,
                numerator: acc / g,
                denominator: pivot / g,
            });
        }
        a[i] = acc / pivot;
    }
    Ok(BurnsideElement::new(v.class_ref, a))
}

/// `a` is a unit iff its ghost vector is a sign vector.
pub fn is_unit(a: &BurnsideElement, psi: &MarksMatrix) -> Result<bool> {
    Ok(ghost_map(psi, a)?.is_sign_vector())
}

/// All units of `A(G)`, sorted by coefficient vector.
///
/// Depth-first over sign patterns `ε_N, …, ε_1`, back-substituting as signs
/// are fixed and pruning at the first non-integral division.
pub fn enumerate_units(psi: &MarksMatrix, max_classes: usize) -> Result<Vec<BurnsideElement>> {
    let n = psi.len();
    if n > max_classes {
        return Err(Error::CapExceeded {
            what: "number of subgroup classes",
            value: n,
            cap: max_classes,
        });
    }
    let mut units = Vec::new();
    let mut coeffs = vec![0i64; n];
    descend(psi, n, &mut coeffs, &mut units);
    units.sort();
    Ok(units
        .into_iter()
        .map(|c| BurnsideElement::new(psi.class_ref(), c))
        .collect())
}

fn descend(psi: &MarksMatrix, level: usize, coeffs: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if level == 0 {
        out.push(coeffs.clone());
        return;
    }
    let i = level - 1;
    // Entries are bounded by |G|² at desk scale, so this sum cannot overflow.
    let tail: i64 = (i + 1..psi.len()).map(|j| psi.get(i, j) * coeffs[j]).sum();
    let pivot = psi.get(i, i);
    for eps in [1i64, -1] {
        let acc = eps - tail;
        if acc % pivot == 0 {
            coeffs[i] = acc / pivot;
            descend(psi, i, coeffs, out);
        }
    }
    coeffs[i] = 0;
}
