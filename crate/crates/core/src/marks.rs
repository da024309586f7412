//! Table of marks, computed by direct fixed-point counting on coset spaces.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::gset::GSet;
use crate::subgroups::{ClassRef, Subgroup, SubgroupClassTable};

/// `m(H, K) = |(G/K)^H|`.
pub fn mark(group: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> Result<i64> {
    Subgroup::new(group, h.elements())?;
    let cosets = GSet::coset_space(group, k)?;
    Ok(cosets.fixed_points(h)? as i64)
}

/// The `N × N` table `Ψ[i][j] = m(H_i, H_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MarksMatrix {
    #[serde(skip)]
    class_ref: ClassRef,
    entries: Vec<Vec<i64>>,
}

impl MarksMatrix {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn class_ref(&self) -> ClassRef {
        self.class_ref
    }

    /// Product of the diagonal; equals the determinant since `Ψ` is triangular.
    pub fn determinant(&self) -> Result<i64> {
        (0..self.len()).try_fold(1i64, |acc, i| {
            acc.checked_mul(self.get(i, i))
                .ok_or(Error::IntegerOverflow("determinant of table of marks"))
        })
    }

    /// Check the structural invariants against the class table.
    pub fn check_invariants(&self, classes: &SubgroupClassTable) -> std::result::Result<(), String> {
        let n = self.len();
        if n != classes.len() {
            return Err("dimension mismatch".into());
        }
        let order = classes.group().order() as i64;
        for i in 0..n {
            for j in 0..n {
                if i > j && self.get(i, j) != 0 {
                    return Err(format!("nonzero below diagonal at ({i},{j})"));
                }
            }
            if self.get(i, i) != classes.class(i).weyl_order as i64 {
                return Err(format!("diagonal {i} is not |W(H)|"));
            }
            if self.get(0, i) != order / classes.class(i).order() as i64 {
                return Err(format!("first row entry {i} is not the index"));
            }
            if self.get(i, n - 1) != 1 {
                return Err(format!("last column entry {i} is not 1"));
            }
        }
        Ok(())
    }
}

/// Build `Ψ` for a class table.
pub fn table_of_marks(classes: &SubgroupClassTable) -> Result<MarksMatrix> {
    let group = classes.group();
    let n = classes.len();
    let mut entries = vec![vec![0i64; n]; n];
    for j in 0..n {
        let cosets = GSet::coset_space(group, classes.representative(j))?;
        for (i, row) in entries.iter_mut().enumerate().take(j + 1) {
            row[j] = cosets.fixed_points(classes.representative(i))? as i64;
        }
    }
    Ok(MarksMatrix {
        class_ref: classes.class_ref(),
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_group;
    use crate::subgroups::subgroup_classes;
    use std::sync::Arc;

    fn marks_of(spec: &str) -> (SubgroupClassTable, MarksMatrix) {
        let g = Arc::new(catalog_group(spec, 5040).unwrap());
        let t = subgroup_classes(&g).unwrap();
        let psi = table_of_marks(&t).unwrap();
        (t, psi)
    }

    #[test]
    fn trivial_group() {
        assert_eq!(marks_of("cyclic:1").1.rows(), &[vec![1]]);
    }

    #[test]
    fn c2() {
        assert_eq!(marks_of("cyclic:2").1.rows(), &[vec![2, 1], vec![0, 1]]);
    }

    #[test]
    fn s3() {
        let (t, psi) = marks_of("symmetric:3");
        assert_eq!(
            psi.rows(),
            &[
                vec![6, 3, 2, 1],
                vec![0, 1, 0, 1],
                vec![0, 0, 2, 1],
                vec![0, 0, 0, 1]
            ]
        );
        psi.check_invariants(&t).unwrap();
        assert_eq!(psi.determinant().unwrap(), 12);
    }

    #[test]
    fn single_marks() {
        let (t, _) = marks_of("symmetric:3");
        let g = t.group();
        for k in 0..t.len() {
            assert_eq!(
                mark(g, &Subgroup::trivial(g), t.representative(k)).unwrap(),
                (g.order() / t.class(k).order()) as i64
            );
        }
        assert_eq!(mark(g, t.representative(1), t.representative(1)).unwrap(), 1);
        let whole = Subgroup::whole(g);
        assert_eq!(mark(g, &whole, &whole).unwrap(), 1);
    }

    #[test]
    fn marks_are_class_functions() {
        let (t, psi) = marks_of("symmetric:4");
        let g = t.group();
        for i in 0..t.len() {
            for j in 0..t.len() {
                for x in [1, 5, 11, 17] {
                    let h = t.representative(i).conjugate_by(g, x);
                    let k = t.representative(j).conjugate_by(g, (x * 7) % g.order());
                    assert_eq!(mark(g, &h, &k).unwrap(), psi.get(i, j));
                }
            }
        }
    }
}
