//! Subgroup lattice up to conjugacy.
//!
//! All subgroups are found by seeding with the cyclic subgroups and closing
//! under joins `⟨H, g⟩` until nothing new appears. Classes are then ordered by
//! subgroup order and, within an order, by the lexicographically smallest
//! sorted element tuple among the class members. Containment up to
//! conjugacy forces `|H| ≤ |K|`, so this total order refines the natural
//! partial order on classes.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

pub const DEFAULT_MAX_SUBGROUPS: usize = 50_000;

/// Fixed-width bit set over group elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementMask(Vec<u64>);

impl ElementMask {
    pub fn empty(order: usize) -> Self {
        ElementMask(vec![0; order.div_ceil(64)])
    }

    pub fn from_elements(order: usize, elements: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Self::empty(order);
        for e in elements {
            m.insert(e);
        }
        m
    }

    #[inline]
    pub fn insert(&mut self, e: usize) {
        self.0[e / 64] |= 1 << (e % 64);
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        self.0[e / 64] >> (e % 64) & 1 == 1
    }

    pub fn is_subset(&self, other: &ElementMask) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

/// A subgroup, stored as its sorted element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    elements: Vec<u32>,
    mask: ElementMask,
}

impl Subgroup {
    /// Wrap a set of elements, checking closure under composition and inverse.
    pub fn new(group: &FiniteGroup, elements: impl IntoIterator<Item = usize>) -> Result<Subgroup> {
        let mut elems: Vec<u32> = elements.into_iter().map(|e| e as u32).collect();
        elems.sort_unstable();
        elems.dedup();
        if elems.iter().any(|&e| e as usize >= group.order()) {
            return Err(Error::NotASubgroup("element index out of range".into()));
        }
        let mask = ElementMask::from_elements(group.order(), elems.iter().map(|&e| e as usize));
        if !mask.contains(0) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        for &a in &elems {
            if !mask.contains(group.inverse(a as usize)) {
                return Err(Error::NotASubgroup(format!("not closed under inverse at {a}")));
            }
            for &b in &elems {
                if !mask.contains(group.compose(a as usize, b as usize)) {
                    return Err(Error::NotASubgroup(format!(
                        "not closed under composition at ({a},{b})"
                    )));
                }
            }
        }
        Ok(Subgroup { elements: elems, mask })
    }

    fn from_mask(order: usize, mask: ElementMask) -> Subgroup {
        let elements = (0..order).filter(|&e| mask.contains(e)).map(|e| e as u32).collect();
        Subgroup { elements, mask }
    }

    /// Subgroup generated by `gens`.
    pub fn generated_by(group: &FiniteGroup, gens: &[usize]) -> Subgroup {
        let order = group.order();
        let mut mask = ElementMask::empty(order);
        mask.insert(0);
        let mut found = vec![0usize];
        let mut head = 0;
        while head < found.len() {
            let x = found[head];
            head += 1;
            for &s in gens {
                let y = group.compose(x, s);
                if !mask.contains(y) {
                    mask.insert(y);
                    found.push(y);
                }
            }
        }
        Subgroup::from_mask(order, mask)
    }

    pub fn trivial(group: &FiniteGroup) -> Subgroup {
        Subgroup::from_mask(group.order(), ElementMask::from_elements(group.order(), [0]))
    }

    pub fn whole(group: &FiniteGroup) -> Subgroup {
        Subgroup::from_mask(group.order(), ElementMask::from_elements(group.order(), group.elements()))
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements.iter().map(|&e| e as usize)
    }

    pub fn element_indices(&self) -> &[u32] {
        &self.elements
    }

    pub fn mask(&self) -> &ElementMask {
        &self.mask
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        self.mask.contains(e)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.mask.is_subset(&other.mask)
    }

    /// `g H g⁻¹`.
    pub fn conjugate_by(&self, group: &FiniteGroup, g: usize) -> Subgroup {
        let mask = ElementMask::from_elements(
            group.order(),
            self.elements().map(|h| group.conjugate(h, g)),
        );
        Subgroup::from_mask(group.order(), mask)
    }

    pub fn normalizer(&self, group: &FiniteGroup) -> Subgroup {
        let elems = group
            .elements()
            .filter(|&g| self.elements().all(|h| self.contains(group.conjugate(h, g))));
        let mask = ElementMask::from_elements(group.order(), elems);
        Subgroup::from_mask(group.order(), mask)
    }
}

/// Identity of a class table; elements built over different tables never mix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ClassRef(pub u64);

/// One conjugacy class of subgroups.
#[derive(Debug, Clone)]
pub struct SubgroupClass {
    pub representative: Subgroup,
    /// Indices into [`SubgroupClassTable::subgroups`].
    pub members: Vec<usize>,
    pub normalizer: Subgroup,
    pub normalizer_order: usize,
    pub weyl_order: usize,
    /// Display label `order.index`, e.g. `2.1`.
    pub label: String,
}

impl SubgroupClass {
    pub fn order(&self) -> usize {
        self.representative.order()
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// The ordered list `(H_1) … (H_N)` of subgroup classes with lattice data.
#[derive(Debug, Clone)]
pub struct SubgroupClassTable {
    group: Arc<FiniteGroup>,
    classes: Vec<SubgroupClass>,
    subgroups: Vec<Subgroup>,
    class_of: Vec<usize>,
    lookup: HashMap<ElementMask, usize>,
    containment: Vec<Vec<i64>>,
    class_ref: ClassRef,
}

impl SubgroupClassTable {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &SubgroupClass {
        &self.classes[i]
    }

    pub fn representative(&self, i: usize) -> &Subgroup {
        &self.classes[i].representative
    }

    /// Every subgroup of the group, each exactly once.
    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn class_ref(&self) -> ClassRef {
        self.class_ref
    }

    /// `n(H_i, H_j)`: members of class `j` containing the representative of class `i`.
    pub fn containment_count(&self, i: usize, j: usize) -> i64 {
        self.containment[i][j]
    }

    pub fn containment_counts(&self) -> &[Vec<i64>] {
        &self.containment
    }

    /// `(H_i) ≤ (H_j)`: some conjugate of `H_i` lies in `H_j`.
    pub fn precedes(&self, i: usize, j: usize) -> bool {
        self.containment[i][j] > 0
    }

    pub fn order_relation(&self) -> Vec<Vec<bool>> {
        self.containment
            .iter()
            .map(|row| row.iter().map(|&c| c > 0).collect())
            .collect()
    }

    /// Class index of an arbitrary subgroup.
    pub fn class_index_of(&self, h: &Subgroup) -> Option<usize> {
        self.lookup.get(h.mask()).map(|&s| self.class_of[s])
    }

    /// Class index of the subgroup with the given element mask.
    pub fn class_index_of_mask(&self, mask: &ElementMask) -> Option<usize> {
        self.lookup.get(mask).map(|&s| self.class_of[s])
    }

    pub fn labels(&self) -> Vec<String> {
        self.classes.iter().map(|c| c.label.clone()).collect()
    }
}

/// Enumerate subgroup classes with the default cap.
pub fn subgroup_classes(group: &Arc<FiniteGroup>) -> Result<SubgroupClassTable> {
    subgroup_classes_with_cap(group, DEFAULT_MAX_SUBGROUPS)
}

pub fn subgroup_classes_with_cap(
    group: &Arc<FiniteGroup>,
    max_subgroups: usize,
) -> Result<SubgroupClassTable> {
    let g = group.as_ref();
    let order = g.order();

    let mut index: HashMap<ElementMask, usize> = HashMap::new();
    let mut subgroups: Vec<Subgroup> = Vec::new();
    // One generating set per subgroup keeps joins cheap.
    let mut generators: Vec<Vec<usize>> = Vec::new();
    let mut cyclic_gens: Vec<usize> = Vec::new();

    let mut push = |sub: Subgroup,
                    gens: Vec<usize>,
                    subgroups: &mut Vec<Subgroup>,
                    generators: &mut Vec<Vec<usize>>|
     -> Result<bool> {
        if index.contains_key(sub.mask()) {
            return Ok(false);
        }
        if subgroups.len() >= max_subgroups {
            return Err(Error::GroupTooLarge {
                what: "subgroup count",
                cap: max_subgroups,
            });
        }
        index.insert(sub.mask().clone(), subgroups.len());
        subgroups.push(sub);
        generators.push(gens);
        Ok(true)
    };

    for a in g.elements() {
        let cyc = Subgroup::generated_by(g, &[a]);
        if push(cyc, vec![a], &mut subgroups, &mut generators)? {
            cyclic_gens.push(a);
        }
    }

    let mut head = 0;
    while head < subgroups.len() {
        for &c in &cyclic_gens {
            if subgroups[head].contains(c) {
                continue;
            }
            let mut gens = generators[head].clone();
            gens.push(c);
            let joined = Subgroup::generated_by(g, &gens);
            push(joined, gens, &mut subgroups, &mut generators)?;
        }
        head += 1;
    }

    subgroups.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.element_indices().cmp(b.element_indices()))
    });
    let lookup: HashMap<ElementMask, usize> = subgroups
        .iter()
        .enumerate()
        .map(|(i, s)| (s.mask().clone(), i))
        .collect();

    let unassigned = usize::MAX;
    let mut class_of = vec![unassigned; subgroups.len()];
    let mut classes: Vec<SubgroupClass> = Vec::new();
    for s in 0..subgroups.len() {
        if class_of[s] != unassigned {
            continue;
        }
        let rep = subgroups[s].clone();
        let ci = classes.len();
        let mut members = Vec::new();
        for x in g.elements() {
            let conj = rep.conjugate_by(g, x);
            let t = lookup[conj.mask()];
            if class_of[t] == unassigned {
                class_of[t] = ci;
                members.push(t);
            }
        }
        members.sort_unstable();
        let normalizer = rep.normalizer(g);
        let normalizer_order = normalizer.order();
        debug_assert_eq!(members.len() * normalizer_order, order);
        let weyl_order = normalizer_order / rep.order();
        classes.push(SubgroupClass {
            representative: rep,
            members,
            normalizer,
            normalizer_order,
            weyl_order,
            label: String::new(),
        });
    }

    let mut per_order: HashMap<usize, usize> = HashMap::new();
    for c in &mut classes {
        let k = per_order.entry(c.order()).or_insert(0);
        *k += 1;
        c.label = format!("{}.{}", c.order(), k);
    }

    let n = classes.len();
    let mut containment = vec![vec![0i64; n]; n];
    for i in 0..n {
        let rep = &classes[i].representative;
        for j in 0..n {
            if !classes[j].order().is_multiple_of(rep.order()) {
                continue;
            }
            containment[i][j] = classes[j]
                .members
                .iter()
                .filter(|&&m| rep.is_subgroup_of(&subgroups[m]))
                .count() as i64;
        }
    }

    let mut hasher = DefaultHasher::new();
    g.fingerprint().hash(&mut hasher);
    for c in &classes {
        c.representative.element_indices().hash(&mut hasher);
    }
    let class_ref = ClassRef(hasher.finish());

    Ok(SubgroupClassTable {
        group: Arc::clone(group),
        classes,
        subgroups,
        class_of,
        lookup,
        containment,
        class_ref,
    })
}
