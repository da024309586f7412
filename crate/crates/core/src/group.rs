//! Concrete finite groups given by permutation generators.
//!
//! Elements are numbered `0..order` by sorting their image tuples
//! lexicographically, so the identity is always element 0 and the numbering
//! depends only on the generated permutation group, not on the generators.
//!
//! Composition follows the functional convention `(f·g)(x) = f(g(x))`:
//! `compose(a, b)` applies `b` first.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the number of group elements.
pub const DEFAULT_MAX_ORDER: usize = 5040;

/// A permutation of `0..n` stored as its image tuple.
pub type Perm = Vec<u32>;

/// Parse one generator written as a list of 1-based cycles into an image
/// tuple on `0..domain`. An empty cycle list is the identity.
pub fn perm_from_cycles(domain: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
    let mut image: Perm = (0..domain as u32).collect();
    let mut touched = vec![false; domain];
    for cycle in cycles {
        for &p in cycle {
            if p == 0 || p > domain {
                return Err(Error::MalformedCycle(format!(
                    "point {p} outside 1..={domain} in cycle {cycle:?}"
                )));
            }
            if touched[p - 1] {
                return Err(Error::MalformedCycle(format!(
                    "point {p} appears twice in {cycles:?}"
                )));
            }
            touched[p - 1] = true;
        }
        for (idx, &p) in cycle.iter().enumerate() {
            let next = cycle[(idx + 1) % cycle.len()];
            image[p - 1] = (next - 1) as u32;
        }
    }
    Ok(image)
}

/// `(f ∘ g)(x) = f(g(x))`.
fn perm_compose(f: &[u32], g: &[u32]) -> Perm {
    g.iter().map(|&x| f[x as usize]).collect()
}

/// A finite group realized by its full composition table.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    name: String,
    domain: usize,
    order: usize,
    compose: Vec<u32>,
    inverse: Vec<u32>,
    perms: Vec<Perm>,
    fingerprint: u64,
}

impl FiniteGroup {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Size of the permutation domain the group was built on.
    pub fn domain(&self) -> usize {
        self.domain
    }

    #[inline]
    pub fn compose(&self, a: usize, b: usize) -> usize {
        self.compose[a * self.order + b] as usize
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `g a g⁻¹`.
    #[inline]
    pub fn conjugate(&self, a: usize, g: usize) -> usize {
        self.compose(self.compose(g, a), self.inverse(g))
    }

    /// Image tuple (0-based) of element `a` on the action domain.
    pub fn permutation(&self, a: usize) -> &[u32] {
        &self.perms[a]
    }

    /// 1-based disjoint cycle notation, e.g. `(1 2)(3 4)`; the identity is `()`.
    pub fn cycle_notation(&self, a: usize) -> String {
        let perm = &self.perms[a];
        let mut seen = vec![false; perm.len()];
        let mut out = String::new();
        for start in 0..perm.len() {
            if seen[start] || perm[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push((x + 1).to_string());
                x = perm[x] as usize;
            }
            out.push('(');
            out.push_str(&cycle.join(" "));
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }

    /// Content hash of the composition table; equal for equal tables.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn power(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.compose(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.compose(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|a| self.element_order(a))
            .fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order).all(|b| self.compose(a, b) == self.compose(b, a)))
    }

    /// Exhaustively check the group axioms on the stored tables.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        let n = self.order;
        for a in 0..n {
            if self.compose(0, a) != a || self.compose(a, 0) != a {
                return Err(format!("0 is not an identity for {a}"));
            }
            if self.compose(a, self.inverse(a)) != 0 || self.compose(self.inverse(a), a) != 0 {
                return Err(format!("inverse table wrong at {a}"));
            }
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for b in 0..n {
                row[self.compose(a, b)] = true;
                col[self.compose(b, a)] = true;
            }
            if !row.iter().all(|&x| x) || !col.iter().all(|&x| x) {
                return Err(format!("row or column {a} is not a permutation"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.compose(a, b);
                for c in 0..n {
                    if self.compose(ab, c) != self.compose(a, self.compose(b, c)) {
                        return Err(format!("associativity fails at ({a},{b},{c})"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Build the group generated by `generators` (image tuples on `0..domain`).
    pub fn from_permutations(
        name: impl Into<String>,
        domain: usize,
        generators: &[Perm],
        max_order: usize,
    ) -> Result<FiniteGroup> {
        let identity: Perm = (0..domain as u32).collect();
        for g in generators {
            if g.len() != domain {
                return Err(Error::InvalidInput(format!(
                    "generator of length {} on domain {domain}",
                    g.len()
                )));
            }
        }
        let gens: Vec<Perm> = generators.iter().filter(|g| **g != identity).cloned().collect();

        // Closure by breadth-first search on the right Cayley graph.
        let mut seen: HashMap<Perm, ()> = HashMap::new();
        seen.insert(identity.clone(), ());
        let mut found = vec![identity.clone()];
        let mut head = 0;
        while head < found.len() {
            let x = found[head].clone();
            head += 1;
            for s in &gens {
                let y = perm_compose(&x, s);
                if !seen.contains_key(&y) {
                    if found.len() >= max_order {
                        return Err(Error::GroupTooLarge {
                            what: "group order",
                            cap: max_order,
                        });
                    }
                    seen.insert(y.clone(), ());
                    found.push(y);
                }
            }
        }
        found.sort();
        let order = found.len();
        let index: HashMap<&Perm, u32> = found
            .iter()
            .enumerate()
            .map(|(i, p)| (p, i as u32))
            .collect();

        // right_mul[x][s] = x · gens[s]
        let right_mul: Vec<Vec<u32>> = found
            .iter()
            .map(|x| gens.iter().map(|s| index[&perm_compose(x, s)]).collect())
            .collect();

        // Spanning tree of the Cayley graph: b = parent · gens[s].
        let mut tree: Vec<(usize, usize, usize)> = Vec::with_capacity(order);
        let mut visited = vec![false; order];
        visited[0] = true;
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(b) = queue.pop_front() {
            for (s, &c) in right_mul[b].iter().enumerate() {
                let c = c as usize;
                if !visited[c] {
                    visited[c] = true;
                    tree.push((c, b, s));
                    queue.push_back(c);
                }
            }
        }

        let mut compose = vec![0u32; order * order];
        for a in 0..order {
            let row = &mut compose[a * order..(a + 1) * order];
            row[0] = a as u32;
            for &(b, parent, s) in &tree {
                row[b] = right_mul[row[parent] as usize][s];
            }
        }
        let mut inverse = vec![0u32; order];
        for a in 0..order {
            let row = &compose[a * order..(a + 1) * order];
            let pos = row.iter().position(|&x| x == 0).expect("group row contains identity");
            inverse[a] = pos as u32;
        }

        let mut hasher = DefaultHasher::new();
        order.hash(&mut hasher);
        compose.hash(&mut hasher);
        let fingerprint = hasher.finish();

        Ok(FiniteGroup {
            name: name.into(),
            domain,
            order,
            compose,
            inverse,
            perms: found,
            fingerprint,
        })
    }
}

/// Closure of permutation generators written in 1-based cycle notation.
pub fn group_from_generators(
    domain: usize,
    generators: &[Vec<Vec<usize>>],
    max_order: usize,
) -> Result<FiniteGroup> {
    if domain == 0 {
        return Err(Error::InvalidInput("domain must be positive".into()));
    }
    if generators.is_empty() {
        return Err(Error::InvalidInput("generator list is empty".into()));
    }
    let perms = generators
        .iter()
        .map(|cycles| perm_from_cycles(domain, cycles))
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::from_permutations("generated", domain, &perms, max_order)
}

/// On-disk group description: `{"domain": 4, "generators": [[[1,2],[3,4]]], "name": "V4"}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupFile {
    pub domain: usize,
    pub generators: Vec<Vec<Vec<usize>>>,
    #[serde(default)]
    pub name: Option<String>,
}

impl GroupFile {
    pub fn build(&self, max_order: usize) -> Result<FiniteGroup> {
        let mut g = group_from_generators(self.domain, &self.generators, max_order)?;
        g.set_name(self.name.clone().unwrap_or_else(|| "file".to_string()));
        Ok(g)
    }
}
