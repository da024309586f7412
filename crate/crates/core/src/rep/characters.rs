//! Complex character tables by the Burnside–Dixon method.
//!
//! Class-sum structure constants are reduced modulo a prime `p ≡ 1 (mod e)`
//! (`e` the group exponent), their common eigenvectors are found by
//! successive eigenspace splitting over `GF(p)`, and each modular character
//! is lifted to complex values through the eigenvalue multiplicities of
//! `ρ(g)` recovered by a discrete Fourier transform over the powers of `g`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::modp::{dixon_prime, Fp};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Default cap on the group order for character computations.
pub const DEFAULT_MAX_CHAR_ORDER: usize = 5040;

/// A conjugacy class of elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementClass {
    pub representative: usize,
    pub size: usize,
    #[serde(skip)]
    pub members: Vec<usize>,
}

/// Conjugacy classes ordered by smallest member, so the identity class comes
/// first.
pub fn element_classes(group: &FiniteGroup) -> Vec<ElementClass> {
    let n = group.order();
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for a in group.elements() {
        if seen[a] {
            continue;
        }
        let mut members: Vec<usize> = group.elements().map(|g| group.conjugate(a, g)).collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            seen[m] = true;
        }
        classes.push(ElementClass {
            representative: a,
            size: members.len(),
            members,
        });
    }
    classes
}

/// Complex irreducible characters.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    group_order: usize,
    exponent: usize,
    prime: u64,
    classes: Vec<ElementClass>,
    class_of: Vec<usize>,
    inverse_class: Vec<usize>,
    square_class: Vec<usize>,
    chars: Vec<Vec<Complex64>>,
    degrees: Vec<usize>,
}

impl CharacterTable {
    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn classes(&self) -> &[ElementClass] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Class index of a group element.
    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    /// Class index of `g²` for `g` in class `k`.
    pub fn square_class(&self, k: usize) -> usize {
        self.square_class[k]
    }

    pub fn inverse_class(&self, k: usize) -> usize {
        self.inverse_class[k]
    }

    pub fn chars(&self) -> &[Vec<Complex64>] {
        &self.chars
    }

    pub fn character(&self, i: usize) -> &[Complex64] {
        &self.chars[i]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    /// Prime used for the modular computation.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    /// `⟨χ, ψ⟩ = (1/|G|) Σ_g χ(g) conj(ψ(g))` for class functions.
    pub fn inner_product(&self, chi: &[Complex64], psi: &[Complex64]) -> Complex64 {
        let s: Complex64 = self
            .classes
            .iter()
            .enumerate()
            .map(|(k, c)| chi[k] * psi[k].conj() * c.size as f64)
            .sum();
        s / self.group_order as f64
    }

    /// Largest deviation of the row and column orthogonality relations.
    pub fn orthogonality_residual(&self) -> f64 {
        let r = self.len();
        let mut worst: f64 = 0.0;
        for i in 0..r {
            for j in 0..r {
                let ip = self.inner_product(&self.chars[i], &self.chars[j]);
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((ip - target).norm());
            }
        }
        // Σ_χ χ(g_k) conj χ(g_l) = δ_kl |C_G(g_k)|
        for k in 0..r {
            for l in 0..r {
                let s: Complex64 = self.chars.iter().map(|c| c[k] * c[l].conj()).sum();
                let target = if k == l {
                    (self.group_order / self.classes[k].size) as f64
                } else {
                    0.0
                };
                worst = worst.max((s - target).norm());
            }
        }
        worst
    }

    /// Index of the row equal to the complex conjugate of row `i`.
    pub fn conjugate_row(&self, i: usize) -> Option<usize> {
        (0..self.len()).find(|&j| {
            self.chars[i]
                .iter()
                .zip(&self.chars[j])
                .all(|(a, b)| (a.conj() - b).norm() < 1e-6)
        })
    }
}

fn ordering_key(row: &[Complex64]) -> Vec<(i64, i64)> {
    // Descending lexicographic order on rounded values puts the trivial
    // character first among the linear ones.
    row.iter()
        .map(|z| (-(z.re * 1e6).round() as i64, -(z.im * 1e6).round() as i64))
        .collect()
}

/// Character table of `group`, rows sorted by degree and then by values.
pub fn character_table(group: &FiniteGroup, max_order: usize) -> Result<CharacterTable> {
    let order = group.order();
    if order > max_order {
        return Err(Error::CapExceeded {
            what: "group order for character table",
            value: order,
            cap: max_order,
        });
    }
    let classes = element_classes(group);
    let r = classes.len();
    let mut class_of = vec![0usize; order];
    for (k, c) in classes.iter().enumerate() {
        for &m in &c.members {
            class_of[m] = k;
        }
    }
    let inverse_class: Vec<usize> = classes
        .iter()
        .map(|c| class_of[group.inverse(c.representative)])
        .collect();
    let square_class: Vec<usize> = classes
        .iter()
        .map(|c| class_of[group.compose(c.representative, c.representative)])
        .collect();

    let exponent = group.exponent();
    let p = dixon_prime(order, exponent);
    let f = Fp::new(p);

    // a[j][k][l] = #{x ∈ C_j : x⁻¹ z_l ∈ C_k}, so C_j C_k = Σ_l a[j][k][l] C_l.
    let mut structure = vec![vec![vec![0u64; r]; r]; r];
    for (l, cl) in classes.iter().enumerate() {
        let z = cl.representative;
        for (j, cj) in classes.iter().enumerate() {
            for &x in &cj.members {
                let y = group.compose(group.inverse(x), z);
                structure[j][class_of[y]][l] += 1;
            }
        }
    }

    let vectors = split_common_eigenvectors(&f, &structure, r)?;

    let z = f.pow(f.primitive_root(), (p - 1) / exponent as u64);
    let e = exponent as u64;
    let e_inv = f.inv(e % p);
    let z_pow: Vec<u64> = (0..e).map(|x| f.pow(z, x)).collect();
    let zeta: Vec<Complex64> = (0..exponent)
        .map(|j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / exponent as f64))
        .collect();
    // power_class[k][l] = class of g_k^l
    let power_class: Vec<Vec<usize>> = classes
        .iter()
        .map(|c| {
            let mut x = 0usize;
            (0..exponent)
                .map(|_| {
                    let k = class_of[x];
                    x = group.compose(x, c.representative);
                    k
                })
                .collect()
        })
        .collect();

    let mut rows: Vec<(usize, Vec<Complex64>)> = Vec::with_capacity(r);
    for w in vectors {
        let norm = f.inv(w[0]);
        let omega: Vec<u64> = w.iter().map(|&x| f.mul(x, norm)).collect();
        let mut s = 0;
        for k in 0..r {
            let t = f.mul(omega[k], omega[inverse_class[k]]);
            s = f.add(s, f.mul(t, f.inv(classes[k].size as u64 % p)));
        }
        if s == 0 {
            return Err(Error::CharacterTable("degenerate central character".into()));
        }
        let d2 = f.mul(order as u64 % p, f.inv(s));
        let degree = (1..=((order as f64).sqrt() as u64 + 1))
            .find(|&d| d * d <= order as u64 && f.mul(d, d) == d2)
            .ok_or_else(|| Error::CharacterTable("no admissible degree".into()))?;
        let theta: Vec<u64> = (0..r)
            .map(|k| {
                f.mul(
                    f.mul(omega[k], degree % p),
                    f.inv(classes[k].size as u64 % p),
                )
            })
            .collect();
        let mut values = Vec::with_capacity(r);
        for k in 0..r {
            let mut value = Complex64::new(0.0, 0.0);
            let mut total = 0;
            for j in 0..exponent {
                let mut m = 0;
                for l in 0..exponent {
                    let root = z_pow[((e - (j as u64 * l as u64) % e) % e) as usize];
                    m = f.add(m, f.mul(theta[power_class[k][l]], root));
                }
                let m = f.mul(m, e_inv);
                if m > degree {
                    return Err(Error::CharacterTable(format!(
                        "eigenvalue multiplicity {m} exceeds degree {degree}"
                    )));
                }
                total += m;
                value += zeta[j] * m as f64;
            }
            if total != degree {
                return Err(Error::CharacterTable("multiplicities do not sum to degree".into()));
            }
            values.push(value);
        }
        rows.push((degree as usize, values));
    }
    rows.sort_by(|a, b| {
        a.0.cmp(&b.0)
            .then_with(|| ordering_key(&a.1).cmp(&ordering_key(&b.1)))
    });
    let degrees = rows.iter().map(|r| r.0).collect();
    let chars = rows.into_iter().map(|r| r.1).collect();
    Ok(CharacterTable {
        group_order: order,
        exponent,
        prime: p,
        classes,
        class_of,
        inverse_class,
        square_class,
        chars,
        degrees,
    })
}

/// Simultaneous eigenvectors `w` with `A_j w = λ_j w` for all class matrices
/// `(A_j)[k][l] = a[j][k][l]`.
fn split_common_eigenvectors(f: &Fp, structure: &[Vec<Vec<u64>>], r: usize) -> Result<Vec<Vec<u64>>> {
    let p = f.modulus();
    let identity: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![identity];
    for a in structure.iter().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::with_capacity(spaces.len());
        for basis in spaces {
            let d = basis.len();
            if d == 1 {
                next.push(basis);
                continue;
            }
            let (basis, pivots) = f.rref(basis);
            // images[i] = A b_i; restricted[i][k] = coordinate k of A b_i
            let images: Vec<Vec<u64>> = basis
                .iter()
                .map(|b| {
                    (0..r)
                        .map(|k| (0..r).fold(0, |acc, l| f.add(acc, f.mul(a[k][l] % p, b[l]))))
                        .collect()
                })
                .collect();
            // c^T R = λ c^T  ⇔  (R^T − λ) c = 0
            let rt: Vec<Vec<u64>> = (0..d)
                .map(|k| (0..d).map(|i| images[i][pivots[k]]).collect())
                .collect();
            let mut found = 0;
            for lambda in 0..p {
                let shifted: Vec<Vec<u64>> = rt
                    .iter()
                    .enumerate()
                    .map(|(k, row)| {
                        row.iter()
                            .enumerate()
                            .map(|(i, &x)| if i == k { f.sub(x, lambda) } else { x })
                            .collect()
                    })
                    .collect();
                let ns = f.nullspace(&shifted, d);
                if ns.is_empty() {
                    continue;
                }
                found += ns.len();
                let sub: Vec<Vec<u64>> = ns
                    .iter()
                    .map(|c| {
                        (0..r)
                            .map(|x| {
                                (0..d).fold(0, |acc, i| f.add(acc, f.mul(c[i], basis[i][x])))
                            })
                            .collect()
                    })
                    .collect();
                next.push(sub);
                if found == d {
                    break;
                }
            }
            if found != d {
                return Err(Error::CharacterTable(
                    "class matrix not diagonalizable over the chosen prime".into(),
                ));
            }
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::CharacterTable("eigenspaces did not split completely".into()));
    }
    Ok(spaces.into_iter().map(|mut s| s.remove(0)).collect())
}
