//! Real irreducible representations and the fixed-point dimension matrix.

use num_complex::Complex64;
use serde::Serialize;

use super::characters::CharacterTable;
use crate::error::{Error, Result};
use crate::gset::GSet;
use crate::subgroups::{ClassRef, Subgroup, SubgroupClassTable};

/// Residual allowed when rounding a floating value that must be an integer.
pub const INTEGRALITY_TOLERANCE: f64 = 1e-6;

fn round_integral(x: f64) -> Option<i64> {
    let r = x.round();
    ((x - r).abs() < INTEGRALITY_TOLERANCE).then_some(r as i64)
}

/// Frobenius–Schur type of a complex irreducible character.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FsType {
    /// Indicator +1: realizable over the reals.
    Orthogonal,
    /// Indicator 0: not real-valued.
    Complex,
    /// Indicator −1: real-valued but not realizable over the reals.
    Quaternionic,
}

impl FsType {
    pub fn indicator(self) -> i64 {
        match self {
            FsType::Orthogonal => 1,
            FsType::Complex => 0,
            FsType::Quaternionic => -1,
        }
    }
}

/// `(1/|G|) Σ_g χ(g²)` as an integer in `{−1, 0, 1}`.
pub fn frobenius_schur(table: &CharacterTable, index: usize) -> Result<i64> {
    let chi = table.character(index);
    let s: Complex64 = table
        .classes()
        .iter()
        .enumerate()
        .map(|(k, c)| chi[table.square_class(k)] * c.size as f64)
        .sum();
    let v = s / table.group_order() as f64;
    match round_integral(v.re) {
        Some(x) if v.im.abs() < INTEGRALITY_TOLERANCE && (-1..=1).contains(&x) => Ok(x),
        _ => Err(Error::NonIntegralIndicator { index, value: v.re }),
    }
}

/// One real irreducible representation.
#[derive(Debug, Clone, Serialize)]
pub struct RealIrrep {
    /// Real character value on each element class.
    pub real_character: Vec<f64>,
    pub fs_type: FsType,
    pub real_dimension: usize,
    /// Complex character rows this irrep comes from.
    pub provenance: Vec<usize>,
}

/// Real irreducibles, ordered as their first complex constituent appears in
/// the character table; the trivial representation is first.
#[derive(Debug, Clone)]
pub struct RealIrrepSet {
    irreps: Vec<RealIrrep>,
}

impl RealIrrepSet {
    pub fn irreps(&self) -> &[RealIrrep] {
        &self.irreps
    }

    pub fn len(&self) -> usize {
        self.irreps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreps.is_empty()
    }

    pub fn get(&self, k: usize) -> &RealIrrep {
        &self.irreps[k]
    }

    pub fn dimensions(&self) -> Vec<usize> {
        self.irreps.iter().map(|i| i.real_dimension).collect()
    }
}

/// Merge conjugate pairs and double quaternionic characters.
pub fn real_irreducibles(table: &CharacterTable) -> Result<RealIrrepSet> {
    let mut used = vec![false; table.len()];
    let mut irreps = Vec::new();
    for i in 0..table.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let chi = table.character(i);
        let degree = table.degrees()[i];
        let irrep = match frobenius_schur(table, i)? {
            1 => RealIrrep {
                real_character: chi.iter().map(|z| z.re).collect(),
                fs_type: FsType::Orthogonal,
                real_dimension: degree,
                provenance: vec![i],
            },
            0 => {
                let j = table
                    .conjugate_row(i)
                    .filter(|&j| j != i && !used[j])
                    .ok_or(Error::UnpairedComplexCharacter(i))?;
                used[j] = true;
                RealIrrep {
                    real_character: chi.iter().map(|z| 2.0 * z.re).collect(),
                    fs_type: FsType::Complex,
                    real_dimension: 2 * degree,
                    provenance: vec![i, j],
                }
            }
            _ => RealIrrep {
                real_character: chi.iter().map(|z| 2.0 * z.re).collect(),
                fs_type: FsType::Quaternionic,
                real_dimension: 2 * degree,
                provenance: vec![i],
            },
        };
        irreps.push(irrep);
    }
    Ok(RealIrrepSet { irreps })
}

/// `dim V^H = (1/|H|) Σ_{h∈H} χ_V(h)` for a real character.
pub fn fixed_dim(table: &CharacterTable, real_char: &[f64], h: &Subgroup) -> Result<i64> {
    let s: f64 = h.elements().map(|x| real_char[table.class_of(x)]).sum();
    let v = s / h.order() as f64;
    round_integral(v)
        .filter(|&d| d >= 0)
        .ok_or(Error::NonIntegralDimension { value: v })
}

/// Same as [`fixed_dim`] for a complex character, returning the complex dimension.
pub fn complex_fixed_dim(table: &CharacterTable, chi: &[Complex64], h: &Subgroup) -> Result<i64> {
    let s: Complex64 = h.elements().map(|x| chi[table.class_of(x)]).sum();
    let v = s / h.order() as f64;
    match round_integral(v.re) {
        Some(d) if d >= 0 && v.im.abs() < INTEGRALITY_TOLERANCE => Ok(d),
        _ => Err(Error::NonIntegralDimension { value: v.re }),
    }
}

/// `D[i][k] = dim 𝒱_k^{H_i}` over subgroup classes `i` and real irreps `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedDimMatrix {
    #[serde(skip)]
    class_ref: ClassRef,
    entries: Vec<Vec<i64>>,
}

impl FixedDimMatrix {
    pub fn new(class_ref: ClassRef, entries: Vec<Vec<i64>>) -> Self {
        FixedDimMatrix { class_ref, entries }
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn get(&self, i: usize, k: usize) -> i64 {
        self.entries[i][k]
    }

    /// Number of subgroup classes `N`.
    pub fn num_classes(&self) -> usize {
        self.entries.len()
    }

    /// Number of real irreps `r`.
    pub fn num_irreps(&self) -> usize {
        self.entries.first().map_or(0, |r| r.len())
    }

    pub fn class_ref(&self) -> ClassRef {
        self.class_ref
    }

    pub fn column(&self, k: usize) -> Vec<i64> {
        self.entries.iter().map(|r| r[k]).collect()
    }
}

pub fn fixed_dim_matrix(
    table: &CharacterTable,
    irreps: &RealIrrepSet,
    classes: &SubgroupClassTable,
) -> Result<FixedDimMatrix> {
    if table.group_order() != classes.group().order() {
        return Err(Error::GroupMismatch);
    }
    let entries = classes
        .classes()
        .iter()
        .map(|c| {
            irreps
                .irreps()
                .iter()
                .map(|v| fixed_dim(table, &v.real_character, &c.representative))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FixedDimMatrix::new(classes.class_ref(), entries))
}

/// Multiplicities `c[k][j] = ⟨π_j, χ_k⟩` of complex irreducible `k` in the
/// permutation character of `G/H_j`; shape `r_ℂ × N`.
pub fn perm_character_decomposition(
    classes: &SubgroupClassTable,
    table: &CharacterTable,
) -> Result<Vec<Vec<i64>>> {
    let group = classes.group();
    if table.group_order() != group.order() {
        return Err(Error::GroupMismatch);
    }
    let perm_chars: Vec<Vec<Complex64>> = classes
        .classes()
        .iter()
        .map(|c| {
            let cosets = GSet::coset_space(group, &c.representative)?;
            Ok(table
                .classes()
                .iter()
                .map(|ec| {
                    let g = ec.representative;
                    let fixed = (0..cosets.size()).filter(|&p| cosets.act(g, p) == p).count();
                    Complex64::new(fixed as f64, 0.0)
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    (0..table.len())
        .map(|k| {
            perm_chars
                .iter()
                .map(|pi| {
                    let v = table.inner_product(pi, table.character(k));
                    match round_integral(v.re) {
                        Some(m) if m >= 0 && v.im.abs() < INTEGRALITY_TOLERANCE => Ok(m),
                        _ => Err(Error::NonIntegralMultiplicity { value: v.re }),
                    }
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_group;
    use crate::rep::characters::character_table;
    use crate::subgroups::subgroup_classes;
    use std::sync::Arc;

    struct Fixture {
        classes: SubgroupClassTable,
        table: CharacterTable,
        irreps: RealIrrepSet,
    }

    fn fixture(spec: &str) -> Fixture {
        let g = Arc::new(catalog_group(spec, 5040).unwrap());
        let classes = subgroup_classes(&g).unwrap();
        let table = character_table(&g, 5040).unwrap();
        let irreps = real_irreducibles(&table).unwrap();
        Fixture {
            classes,
            table,
            irreps,
        }
    }

    #[test]
    fn fs_indicators() {
        let f = fixture("symmetric:3");
        assert_eq!(frobenius_schur(&f.table, 0).unwrap(), 1);
        assert_eq!(frobenius_schur(&f.table, 2).unwrap(), 1);
        let c3 = fixture("cyclic:3");
        assert_eq!(frobenius_schur(&c3.table, 1).unwrap(), 0);
        assert_eq!(frobenius_schur(&c3.table, 2).unwrap(), 0);
    }

    #[test]
    fn real_irreps_examples() {
        let s3 = fixture("symmetric:3");
        assert_eq!(s3.irreps.dimensions(), vec![1, 1, 2]);
        assert!(s3.irreps.irreps().iter().all(|v| v.fs_type == FsType::Orthogonal));

        let c3 = fixture("cyclic:3");
        assert_eq!(c3.irreps.dimensions(), vec![1, 2]);
        assert_eq!(c3.irreps.get(1).fs_type, FsType::Complex);

        let q8 = fixture("quaternion:8");
        assert_eq!(q8.irreps.dimensions(), vec![1, 1, 1, 1, 4]);
        assert_eq!(q8.irreps.get(4).fs_type, FsType::Quaternionic);
    }

    #[test]
    fn fixed_dims() {
        let f = fixture("symmetric:3");
        let std = &f.irreps.get(2).real_character;
        let triv = &f.irreps.get(0).real_character;
        for c in f.classes.classes() {
            assert_eq!(fixed_dim(&f.table, triv, &c.representative).unwrap(), 1);
        }
        assert_eq!(fixed_dim(&f.table, std, f.classes.representative(1)).unwrap(), 1);
        assert_eq!(fixed_dim(&f.table, std, f.classes.representative(2)).unwrap(), 0);
    }

    #[test]
    fn d_matrices() {
        let f = fixture("cyclic:1");
        let d = fixed_dim_matrix(&f.table, &f.irreps, &f.classes).unwrap();
        assert_eq!(d.rows(), &[vec![1]]);

        let f = fixture("symmetric:3");
        let d = fixed_dim_matrix(&f.table, &f.irreps, &f.classes).unwrap();
        assert_eq!(
            d.rows(),
            &[vec![1, 1, 2], vec![1, 0, 1], vec![1, 1, 0], vec![1, 0, 0]]
        );

        let f = fixture("cyclic:3");
        let d = fixed_dim_matrix(&f.table, &f.irreps, &f.classes).unwrap();
        assert_eq!(d.rows(), &[vec![1, 2], vec![1, 0]]);
    }

    #[test]
    fn permutation_characters() {
        let f = fixture("symmetric:3");
        let c = perm_character_decomposition(&f.classes, &f.table).unwrap();
        let column = |j: usize| -> Vec<i64> { c.iter().map(|row| row[j]).collect() };
        assert_eq!(column(3), vec![1, 0, 0]);
        assert_eq!(column(1), vec![1, 0, 1]);
        assert_eq!(column(0), vec![1, 1, 2]);
    }
}
