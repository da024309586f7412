//! Equivariant degrees of linear isomorphisms.
//!
//! The basic degree of a real irreducible `𝒱_k` is the degree of `−Id` on its
//! unit ball. Its ghost vector is `((−1)^{dim 𝒱_k^{H_i}})_i`, and its
//! coefficients follow from the recurrence over classes in descending order
//!
//! `n_H = ((−1)^{dim 𝒱_k^H} − Σ_{(K) ≻ (H)} n_K · n(H,K) · |W(K)|) / |W(H)|`.
//!
//! A linear isomorphism reduced to per-isotypic multiplicity-space blocks has
//! degree `Π_k deg_{𝒱_k}^{μ_k}`, where `μ_k` counts negative eigenvalues of
//! the `k`-th block. Eigenvalues are counted exactly by Sturm sequences.

use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::marks::MarksMatrix;
use crate::poly::{characteristic_polynomial, negative_roots_with_multiplicity};
use crate::rep::{FixedDimMatrix, RealIrrepSet};
use crate::ring::{ghost_map, ghost_preimage, multiply, BurnsideElement, GhostVector, MultTensor};
use crate::subgroups::SubgroupClassTable;

/// `deg_{𝒱_k}` together with its ghost vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasicDegree {
    /// Zero-based irrep index (displayed 1-based).
    pub irrep_index: usize,
    pub element: BurnsideElement,
    pub ghost: GhostVector,
}

fn parity_sign(d: i64) -> i64 {
    if d.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Coefficients of `deg_{𝒱_k}` by the degree recurrence (containment counts
/// and Weyl orders only; the table of marks is not consulted).
pub fn basic_degree_by_recurrence(
    k: usize,
    d: &FixedDimMatrix,
    classes: &SubgroupClassTable,
) -> Result<BurnsideElement> {
    let n = classes.len();
    if d.class_ref() != classes.class_ref() || d.num_classes() != n {
        return Err(Error::GroupMismatch);
    }
    if k >= d.num_irreps() {
        return Err(Error::InvalidInput(format!("irrep index {} out of range", k + 1)));
    }
    let mut coeffs = vec![0i64; n];
    for i in (0..n).rev() {
        let mut acc = parity_sign(d.get(i, k));
        for l in i + 1..n {
            let nk = classes.containment_count(i, l);
            if nk != 0 && coeffs[l] != 0 {
                acc -= coeffs[l] * nk * classes.class(l).weyl_order as i64;
            }
        }
        let w = classes.class(i).weyl_order as i64;
        if acc % w != 0 {
            return Err(Error::InexactDivision {
                context: format!("basic degree {} at class {}", k + 1, classes.class(i).label),
                numerator: acc,
                denominator: w,
            });
        }
        coeffs[i] = acc / w;
    }
    Ok(BurnsideElement::new(classes.class_ref(), coeffs))
}

/// Sign vector `((−1)^{D[i][k]})_i`.
pub fn basic_ghost(k: usize, d: &FixedDimMatrix) -> GhostVector {
    GhostVector::new(
        d.class_ref(),
        (0..d.num_classes()).map(|i| parity_sign(d.get(i, k))).collect(),
    )
}

/// Basic degree of irrep `k` (zero-based), computed by the recurrence and
/// cross-checked against the ghost preimage of its sign vector.
pub fn basic_degree(
    k: usize,
    d: &FixedDimMatrix,
    psi: &MarksMatrix,
    classes: &SubgroupClassTable,
) -> Result<BasicDegree> {
    let element = basic_degree_by_recurrence(k, d, classes)?;
    let ghost = basic_ghost(k, d);
    let via_marks = ghost_preimage(psi, &ghost)?;
    if via_marks != element {
        return Err(Error::Inconsistent(format!(
            "basic degree {}: recurrence {:?} differs from ghost preimage {:?}",
            k + 1,
            element.coeffs(),
            via_marks.coeffs()
        )));
    }
    Ok(BasicDegree {
        irrep_index: k,
        element,
        ghost,
    })
}

pub fn all_basic_degrees(
    d: &FixedDimMatrix,
    psi: &MarksMatrix,
    classes: &SubgroupClassTable,
) -> Result<Vec<BasicDegree>> {
    (0..d.num_irreps())
        .map(|k| basic_degree(k, d, psi, classes))
        .collect()
}

/// `Π_k deg_{𝒱_k}^{μ_k}` in `A(G)`.
///
/// Every factor is checked to be an involution, so only `μ mod 2` is
/// multiplied out.
pub fn degree_product(mu: &[u64], basics: &[BasicDegree], m: &MultTensor) -> Result<BurnsideElement> {
    if mu.len() != basics.len() {
        return Err(Error::InvalidInput(format!(
            "exponent vector has length {}, expected {}",
            mu.len(),
            basics.len()
        )));
    }
    let n = m.len();
    let one = BurnsideElement::one(m.class_ref(), n);
    let mut acc = one.clone();
    for (&e, b) in mu.iter().zip(basics) {
        if e == 0 {
            continue;
        }
        let square = multiply(&b.element, &b.element, m)?;
        if square != one {
            return Err(Error::Inconsistent(format!(
                "basic degree {} is not an involution",
                b.irrep_index + 1
            )));
        }
        if e % 2 == 1 {
            acc = multiply(&acc, &b.element, m)?;
        }
    }
    Ok(acc)
}

/// Ghost vector of `Π_k deg_{𝒱_k}^{μ_k}` read off from `D`:
/// component `i` is `(−1)^{Σ_k μ_k D[i][k]}`.
pub fn ghost_degree_linear(mu: &[u64], d: &FixedDimMatrix) -> Result<GhostVector> {
    if mu.len() != d.num_irreps() {
        return Err(Error::InvalidInput(format!(
            "exponent vector has length {}, expected {}",
            mu.len(),
            d.num_irreps()
        )));
    }
    let values = d
        .rows()
        .iter()
        .map(|row| {
            let parity = row
                .iter()
                .zip(mu)
                .filter(|(dim, m)| dim.rem_euclid(2) == 1 && *m % 2 == 1)
                .count();
            if parity % 2 == 0 {
                1
            } else {
                -1
            }
        })
        .collect();
    Ok(GhostVector::new(d.class_ref(), values))
}

/// Restriction of a linear isomorphism to one multiplicity space.
#[derive(Debug, Clone, PartialEq)]
pub enum SpectralBlock {
    /// Number of negative eigenvalues given directly.
    NegCount(u64),
    /// Square rational matrix acting on the multiplicity space.
    Matrix(Vec<Vec<BigRational>>),
}

/// Spectral data of a `G`-equivariant linear isomorphism: blocks attached to
/// zero-based irrep indices. Several blocks for one irrep act on a direct sum.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SpectralInput {
    pub num_irreps: usize,
    pub blocks: Vec<(usize, SpectralBlock)>,
}

impl SpectralInput {
    pub fn new(num_irreps: usize) -> Self {
        SpectralInput {
            num_irreps,
            blocks: Vec::new(),
        }
    }

    /// Input with `μ` given directly.
    pub fn from_counts(mu: &[u64]) -> Self {
        SpectralInput {
            num_irreps: mu.len(),
            blocks: mu
                .iter()
                .enumerate()
                .map(|(k, &m)| (k, SpectralBlock::NegCount(m)))
                .collect(),
        }
    }

    pub fn with_block(mut self, k: usize, block: SpectralBlock) -> Self {
        self.blocks.push((k, block));
        self
    }

    /// Parse `{"blocks": [{"k": 1, "matrix": [["-1/2", "0"], ...]}]}` with
    /// one-based `k`.
    pub fn from_json(num_irreps: usize, doc: &str) -> Result<SpectralInput> {
        let file: BlocksFile =
            serde_json::from_str(doc).map_err(|e| Error::InvalidInput(format!("blocks file: {e}")))?;
        let mut input = SpectralInput::new(num_irreps);
        for b in file.blocks {
            if b.k == 0 || b.k > num_irreps {
                return Err(Error::InvalidInput(format!(
                    "block index k = {} outside 1..={num_irreps}",
                    b.k
                )));
            }
            let matrix = b
                .matrix
                .iter()
                .map(|row| row.iter().map(RationalEntry::to_rational).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            input.blocks.push((b.k - 1, SpectralBlock::Matrix(matrix)));
        }
        Ok(input)
    }
}

#[derive(Debug, Deserialize)]
struct BlocksFile {
    blocks: Vec<BlockEntry>,
}

#[derive(Debug, Deserialize)]
struct BlockEntry {
    k: usize,
    matrix: Vec<Vec<RationalEntry>>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RationalEntry {
    Text(String),
    Int(i64),
}

impl RationalEntry {
    fn to_rational(&self) -> Result<BigRational> {
        match self {
            RationalEntry::Int(v) => Ok(BigRational::from_integer((*v).into())),
            RationalEntry::Text(s) => {
                let s = s.trim();
                let parsed = BigRational::from_str(s)
                    .map_err(|_| Error::InvalidInput(format!("bad rational `{s}`")))?;
                Ok(parsed)
            }
        }
    }
}

/// `μ_k`: negative eigenvalues of the `k`-th block counted with algebraic
/// multiplicity.
pub fn negative_eigen_multiplicities(input: &SpectralInput) -> Result<Vec<u64>> {
    let mut mu = vec![0u64; input.num_irreps];
    for (k, block) in &input.blocks {
        if *k >= input.num_irreps {
            return Err(Error::InvalidInput(format!("block for irrep {} out of range", k + 1)));
        }
        match block {
            SpectralBlock::NegCount(c) => mu[*k] += c,
            SpectralBlock::Matrix(m) => {
                if m.iter().any(|row| row.len() != m.len()) {
                    return Err(Error::InvalidInput(format!("block for irrep {} is not square", k + 1)));
                }
                let chi = characteristic_polynomial(m);
                if chi.constant().is_zero() {
                    return Err(Error::SingularBlock { k: k + 1 });
                }
                mu[*k] += negative_roots_with_multiplicity(&chi) as u64;
            }
        }
    }
    Ok(mu)
}

/// Degree of the linear isomorphism described by `input`.
pub fn degree_of_linear_iso(
    input: &SpectralInput,
    basics: &[BasicDegree],
    m: &MultTensor,
) -> Result<BurnsideElement> {
    let mu = negative_eigen_multiplicities(input)?;
    degree_product(&mu, basics, m)
}

/// Check `Ψ · deg = ghost` for a basic degree.
pub fn check_basic_ghost(b: &BasicDegree, psi: &MarksMatrix) -> Result<bool> {
    Ok(ghost_map(psi, &b.element)? == b.ghost)
}

/// Convenience: real irrep count must match `D`.
pub fn check_irrep_count(irreps: &RealIrrepSet, d: &FixedDimMatrix) -> Result<()> {
    if irreps.len() != d.num_irreps() {
        return Err(Error::GroupMismatch);
    }
    Ok(())
}
