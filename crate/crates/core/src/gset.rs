//! Finite G-sets: coset spaces, diagonal products, fixed points and
//! isotropy census.
//!
//! Only finite G-sets are modelled. That is all the Burnside ring needs, and
//! it makes every orbit-counting identity directly checkable by enumeration.

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::ring::BurnsideElement;
use crate::subgroups::{ElementMask, Subgroup, SubgroupClassTable};

/// A finite set with a left action of a finite group.
#[derive(Debug, Clone)]
pub struct GSet {
    group_ref: u64,
    group_order: usize,
    size: usize,
    /// `action[g][p]` is the image of point `p` under element `g`.
    action: Vec<Vec<u32>>,
    labels: Vec<String>,
}

/// Per-class isotropy data of a G-set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IsotropyCount {
    /// `|X_(H)|`: points whose isotropy is conjugate to `H`.
    pub points: usize,
    /// Number of orbits of type `(H)`.
    pub orbits: usize,
}

fn check_subgroup(group: &FiniteGroup, h: &Subgroup) -> Result<()> {
    Subgroup::new(group, h.elements()).map(|_| ())
}

impl GSet {
    /// The one-point G-set `G/G`.
    pub fn point(group: &FiniteGroup) -> GSet {
        GSet {
            group_ref: group.fingerprint(),
            group_order: group.order(),
            size: 1,
            action: vec![vec![0]; group.order()],
            labels: vec!["*".into()],
        }
    }

    /// Left cosets `gH` under left translation. Cosets are numbered by their
    /// smallest element.
    pub fn coset_space(group: &FiniteGroup, h: &Subgroup) -> Result<GSet> {
        check_subgroup(group, h)?;
        let order = group.order();
        let unset = u32::MAX;
        let mut coset_of = vec![unset; order];
        let mut reps = Vec::new();
        for x in group.elements() {
            if coset_of[x] != unset {
                continue;
            }
            let id = reps.len() as u32;
            for y in h.elements() {
                coset_of[group.compose(x, y)] = id;
            }
            reps.push(x);
        }
        let action = group
            .elements()
            .map(|g| {
                reps.iter()
                    .map(|&r| coset_of[group.compose(g, r)])
                    .collect()
            })
            .collect();
        let labels = reps.iter().map(|r| format!("g{r}H")).collect();
        Ok(GSet {
            group_ref: group.fingerprint(),
            group_order: order,
            size: reps.len(),
            action,
            labels,
        })
    }

    /// Cartesian product with the diagonal action; point `(x, y)` is
    /// numbered `x * |Y| + y`.
    pub fn product(&self, other: &GSet) -> Result<GSet> {
        if self.group_ref != other.group_ref {
            return Err(Error::GroupMismatch);
        }
        let m = other.size;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(ax, ay)| {
                let mut row = Vec::with_capacity(self.size * m);
                for &x in ax {
                    for &y in ay {
                        row.push(x * m as u32 + y);
                    }
                }
                row
            })
            .collect();
        let labels = self
            .labels
            .iter()
            .flat_map(|a| other.labels.iter().map(move |b| format!("({a},{b})")))
            .collect();
        Ok(GSet {
            group_ref: self.group_ref,
            group_order: self.group_order,
            size: self.size * m,
            action,
            labels,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn group_ref(&self) -> u64 {
        self.group_ref
    }

    #[inline]
    pub fn act(&self, g: usize, p: usize) -> usize {
        self.action[g][p] as usize
    }

    /// Check that the stored action is a homomorphism into `Sym(X)`.
    pub fn check_action(&self, group: &FiniteGroup) -> std::result::Result<(), String> {
        if group.fingerprint() != self.group_ref {
            return Err("group mismatch".into());
        }
        if (0..self.size).any(|p| self.act(0, p) != p) {
            return Err("identity does not act trivially".into());
        }
        for g in group.elements() {
            for h in group.elements() {
                let gh = group.compose(g, h);
                if (0..self.size).any(|p| self.act(gh, p) != self.act(g, self.act(h, p))) {
                    return Err(format!("action not compatible at ({g},{h})"));
                }
            }
        }
        Ok(())
    }

    fn check_range(&self, h: &Subgroup) -> Result<()> {
        if h.elements().any(|e| e >= self.group_order) {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    fn check_table(&self, classes: &SubgroupClassTable) -> Result<()> {
        if classes.group().fingerprint() != self.group_ref {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    /// `|X^H|`.
    pub fn fixed_points(&self, h: &Subgroup) -> Result<usize> {
        self.check_range(h)?;
        Ok((0..self.size)
            .filter(|&p| h.elements().all(|g| self.act(g, p) == p))
            .count())
    }

    /// Stabilizer of a point as an element mask.
    pub fn stabilizer_mask(&self, p: usize) -> ElementMask {
        ElementMask::from_elements(
            self.group_order,
            (0..self.group_order).filter(|&g| self.act(g, p) == p),
        )
    }

    /// Orbits as sorted point lists, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::<usize>::new(self.size);
        for row in &self.action {
            for (p, &q) in row.iter().enumerate() {
                uf.union(p, q as usize);
            }
        }
        let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        let mut first_seen: Vec<usize> = Vec::new();
        for p in 0..self.size {
            let r = uf.find(p);
            let entry = by_root.entry(r).or_default();
            if entry.is_empty() {
                first_seen.push(r);
            }
            entry.push(p);
        }
        first_seen
            .into_iter()
            .map(|r| by_root.remove(&r).unwrap())
            .collect()
    }

    /// `X_H`: points whose isotropy group is exactly `H`.
    pub fn isotropic_points(&self, h: &Subgroup) -> Result<Vec<usize>> {
        self.check_range(h)?;
        Ok((0..self.size)
            .filter(|&p| &self.stabilizer_mask(p) == h.mask())
            .collect())
    }

    /// Sizes of the orbits of `N(H)` (equivalently `W(H)`) on `X_H`, where
    /// `H` is the representative of class `i`.
    pub fn weyl_orbit_sizes(&self, classes: &SubgroupClassTable, i: usize) -> Result<Vec<usize>> {
        self.check_table(classes)?;
        let class = classes.class(i);
        let points = self.isotropic_points(&class.representative)?;
        let mut uf = UnionFind::<usize>::new(self.size);
        for n in class.normalizer.elements() {
            for &p in &points {
                uf.union(p, self.act(n, p));
            }
        }
        let mut counts: std::collections::BTreeMap<usize, usize> = Default::default();
        for &p in &points {
            *counts.entry(uf.find(p)).or_default() += 1;
        }
        Ok(counts.into_values().collect())
    }

    /// Point counts and orbit counts per subgroup class.
    pub fn isotropy_census(&self, classes: &SubgroupClassTable) -> Result<Vec<IsotropyCount>> {
        self.check_table(classes)?;
        let n = classes.len();
        let mut census = vec![IsotropyCount { points: 0, orbits: 0 }; n];
        let point_class = |p: usize| {
            classes
                .class_index_of_mask(&self.stabilizer_mask(p))
                .expect("stabilizer is a subgroup")
        };
        for orbit in self.orbits() {
            let c = point_class(orbit[0]);
            census[c].orbits += 1;
            for &p in &orbit {
                debug_assert_eq!(point_class(p), c);
                census[c].points += 1;
            }
        }
        let g = classes.group().order();
        for (i, entry) in census.iter().enumerate() {
            let h = classes.class(i).order();
            debug_assert_eq!(entry.orbits * g, entry.points * h);
        }
        Ok(census)
    }

    /// The element of `A(G)` represented by this G-set.
    pub fn burnside_linearization(&self, classes: &SubgroupClassTable) -> Result<BurnsideElement> {
        let census = self.isotropy_census(classes)?;
        let coeffs = census.iter().map(|c| c.orbits as i64).collect();
        Ok(BurnsideElement::new(classes.class_ref(), coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_group;
    use crate::subgroups::subgroup_classes;
    use std::sync::Arc;

    fn s3() -> SubgroupClassTable {
        let g = Arc::new(catalog_group("symmetric:3", 5040).unwrap());
        subgroup_classes(&g).unwrap()
    }

    fn coset(t: &SubgroupClassTable, i: usize) -> GSet {
        GSet::coset_space(t.group(), t.representative(i)).unwrap()
    }

    #[test]
    fn coset_space_sizes() {
        let t = s3();
        let g = t.group();
        let regular = coset(&t, 0);
        assert_eq!(regular.size(), 6);
        regular.check_action(g).unwrap();
        for h in g.elements() {
            for p in 0..6 {
                assert_eq!(regular.act(h, p), g.compose(h, p));
            }
        }
        assert_eq!(coset(&t, 1).size(), 3);
        let quotient = coset(&t, 2);
        assert_eq!(quotient.size(), 2);
        for a in g.elements().filter(|&a| g.element_order(a) == 3) {
            assert!((0..2).all(|p| quotient.act(a, p) == p));
        }
    }

    #[test]
    fn products() {
        let t = s3();
        let x = coset(&t, 1);
        let y = coset(&t, 2);
        assert_eq!(x.product(&y).unwrap().size(), 6);
        let with_point = x.product(&GSet::point(t.group())).unwrap();
        assert_eq!(
            with_point.isotropy_census(&t).unwrap(),
            x.isotropy_census(&t).unwrap()
        );
        let xx = x.product(&x).unwrap();
        assert_eq!(xx.size(), 9);
        xx.check_action(t.group()).unwrap();
        assert_eq!(xx.fixed_points(t.representative(1)).unwrap(), 1);
    }

    #[test]
    fn product_group_mismatch() {
        let t = s3();
        let c2 = catalog_group("cyclic:2", 5040).unwrap();
        let other = GSet::point(&c2);
        assert_eq!(coset(&t, 1).product(&other).unwrap_err(), Error::GroupMismatch);
    }

    #[test]
    fn fixed_point_counts() {
        let t = s3();
        let x = coset(&t, 1);
        assert_eq!(x.fixed_points(t.representative(0)).unwrap(), 3);
        assert_eq!(x.fixed_points(t.representative(1)).unwrap(), 1);
        assert_eq!(coset(&t, 2).fixed_points(t.representative(1)).unwrap(), 0);
    }

    #[test]
    fn census_examples() {
        let t = s3();
        let regular = coset(&t, 0).isotropy_census(&t).unwrap();
        assert_eq!(regular[0], IsotropyCount { points: 6, orbits: 1 });
        let c2 = coset(&t, 1).isotropy_census(&t).unwrap();
        assert_eq!(c2[1], IsotropyCount { points: 3, orbits: 1 });
        let c3 = coset(&t, 2);
        let c3c3 = c3.product(&c3).unwrap().isotropy_census(&t).unwrap();
        assert_eq!(c3c3[2], IsotropyCount { points: 4, orbits: 2 });
    }

    #[test]
    fn linearization_examples() {
        let t = s3();
        let x = coset(&t, 1);
        assert_eq!(x.burnside_linearization(&t).unwrap().coeffs(), &[0, 1, 0, 0]);
        let xx = x.product(&x).unwrap();
        assert_eq!(xx.burnside_linearization(&t).unwrap().coeffs(), &[1, 1, 0, 0]);
        let y = coset(&t, 2);
        let yy = y.product(&y).unwrap();
        assert_eq!(yy.burnside_linearization(&t).unwrap().coeffs(), &[0, 0, 2, 0]);
    }

    #[test]
    fn foreign_subgroups_rejected() {
        let t = s3();
        let g = t.group();
        let s4 = catalog_group("symmetric:4", 5040).unwrap();
        let big = Subgroup::whole(&s4);
        assert!(matches!(GSet::coset_space(g, &big), Err(Error::NotASubgroup(_))));
        assert_eq!(GSet::point(g).fixed_points(&big), Err(Error::GroupMismatch));
        let c2 = Arc::new(catalog_group("cyclic:2", 5040).unwrap());
        let other = subgroup_classes(&c2).unwrap();
        assert_eq!(coset(&t, 1).isotropy_census(&other), Err(Error::GroupMismatch));
    }
}
