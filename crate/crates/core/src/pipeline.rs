//! Lazily computed, memoized pipeline stages for one group.

use std::sync::{Arc, OnceLock};

use crate::catalog::resolve_group;
use crate::degree::{all_basic_degrees, BasicDegree};
use crate::error::Result;
use crate::group::{FiniteGroup, DEFAULT_MAX_ORDER};
use crate::marks::{table_of_marks, MarksMatrix};
use crate::rep::{character_table, fixed_dim_matrix, real_irreducibles, CharacterTable, FixedDimMatrix, RealIrrepSet};
use crate::ring::{enumerate_units, mult_tensor, BurnsideElement, MultTensor, DEFAULT_MAX_CLASSES};
use crate::subgroups::{subgroup_classes_with_cap, SubgroupClassTable, DEFAULT_MAX_SUBGROUPS};

/// Size caps applied by the pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    pub max_subgroups: usize,
    /// Cap on the number of subgroup classes for unit enumeration.
    pub max_classes: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: DEFAULT_MAX_ORDER,
            max_subgroups: DEFAULT_MAX_SUBGROUPS,
            max_classes: DEFAULT_MAX_CLASSES,
        }
    }
}

fn cached<T>(cell: &OnceLock<T>, init: impl FnOnce() -> Result<T>) -> Result<&T> {
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let v = init()?;
    Ok(cell.get_or_init(|| v))
}

/// Every stage is computed at most once and only when first requested.
#[derive(Debug)]
pub struct Pipeline {
    group: Arc<FiniteGroup>,
    limits: Limits,
    classes: OnceLock<SubgroupClassTable>,
    marks: OnceLock<MarksMatrix>,
    tensor: OnceLock<MultTensor>,
    table: OnceLock<CharacterTable>,
    irreps: OnceLock<RealIrrepSet>,
    fixed_dims: OnceLock<FixedDimMatrix>,
    basics: OnceLock<Vec<BasicDegree>>,
    units: OnceLock<Vec<BurnsideElement>>,
}

impl Pipeline {
    pub fn new(group: FiniteGroup, limits: Limits) -> Pipeline {
        Pipeline {
            group: Arc::new(group),
            limits,
            classes: OnceLock::new(),
            marks: OnceLock::new(),
            tensor: OnceLock::new(),
            table: OnceLock::new(),
            irreps: OnceLock::new(),
            fixed_dims: OnceLock::new(),
            basics: OnceLock::new(),
            units: OnceLock::new(),
        }
    }

    /// Catalog spec or `file:PATH`.
    pub fn from_spec(spec: &str, limits: Limits) -> Result<Pipeline> {
        Ok(Pipeline::new(resolve_group(spec, limits.max_order)?, limits))
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn classes(&self) -> Result<&SubgroupClassTable> {
        cached(&self.classes, || {
            subgroup_classes_with_cap(&self.group, self.limits.max_subgroups)
        })
    }

    pub fn marks(&self) -> Result<&MarksMatrix> {
        cached(&self.marks, || table_of_marks(self.classes()?))
    }

    pub fn tensor(&self) -> Result<&MultTensor> {
        cached(&self.tensor, || mult_tensor(self.marks()?))
    }

    pub fn character_table(&self) -> Result<&CharacterTable> {
        cached(&self.table, || character_table(&self.group, self.limits.max_order))
    }

    pub fn real_irreps(&self) -> Result<&RealIrrepSet> {
        cached(&self.irreps, || real_irreducibles(self.character_table()?))
    }

    pub fn fixed_dims(&self) -> Result<&FixedDimMatrix> {
        cached(&self.fixed_dims, || {
            fixed_dim_matrix(self.character_table()?, self.real_irreps()?, self.classes()?)
        })
    }

    pub fn basic_degrees(&self) -> Result<&[BasicDegree]> {
        cached(&self.basics, || {
            all_basic_degrees(self.fixed_dims()?, self.marks()?, self.classes()?)
        })
        .map(Vec::as_slice)
    }

    pub fn units(&self) -> Result<&[BurnsideElement]> {
        cached(&self.units, || enumerate_units(self.marks()?, self.limits.max_classes))
            .map(Vec::as_slice)
    }

    /// Wrap raw coefficients as an element of this group's Burnside ring.
    pub fn element(&self, coeffs: Vec<i64>) -> Result<BurnsideElement> {
        let classes = self.classes()?;
        if coeffs.len() != classes.len() {
            return Err(crate::error::Error::InvalidInput(format!(
                "expected {} coefficients, got {}",
                classes.len(),
                coeffs.len()
            )));
        }
        Ok(BurnsideElement::new(classes.class_ref(), coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stages_are_memoized() {
        let p = Pipeline::from_spec("symmetric:3", Limits::default()).unwrap();
        let a = p.marks().unwrap() as *const MarksMatrix;
        let b = p.marks().unwrap() as *const MarksMatrix;
        assert_eq!(a, b);
        assert_eq!(p.units().unwrap().len(), 8);
        assert_eq!(p.basic_degrees().unwrap().len(), 3);
    }

    #[test]
    fn unit_cap_from_limits() {
        let limits = Limits {
            max_classes: 3,
            ..Limits::default()
        };
        let p = Pipeline::from_spec("symmetric:3", limits).unwrap();
        assert!(p.units().is_err());
        assert!(p.marks().is_ok());
    }

    #[test]
    fn element_length_checked() {
        let p = Pipeline::from_spec("symmetric:3", Limits::default()).unwrap();
        assert!(p.element(vec![1, 2]).is_err());
        assert!(p.element(vec![0, 0, 0, 1]).is_ok());
    }
}
