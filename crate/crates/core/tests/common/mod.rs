//! Independent brute-force oracles shared by the integration tests.
//!
//! Nothing here calls into the algorithms under test beyond group
//! construction and class representatives: cosets are built as explicit
//! element sets, conjugacy is decided by searching all of `G`, and units are
//! found by exhaustive inversion of the table of marks.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use burnside_core::{catalog_group, FiniteGroup, Limits, MarksMatrix, Pipeline, SubgroupClassTable};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn group(spec: &str) -> Arc<FiniteGroup> {
    Arc::new(catalog_group(spec, 5040).unwrap())
}

/// Pipeline with the unit cap raised so every catalog group fits.
pub fn pipeline(spec: &str) -> Pipeline {
    Pipeline::from_spec(
        spec,
        Limits {
            max_classes: 64,
            ..Limits::default()
        },
    )
    .unwrap()
}

pub fn elements_of(classes: &SubgroupClassTable, i: usize) -> Vec<usize> {
    classes.representative(i).elements().collect()
}

/// Left cosets `xH` as sorted element lists, in order of first appearance.
pub fn cosets(g: &FiniteGroup, h: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for x in g.elements() {
        let mut c: Vec<usize> = h.iter().map(|&y| g.compose(x, y)).collect();
        c.sort_unstable();
        if seen.insert(c.clone()) {
            out.push(c);
        }
    }
    out
}

fn translate(g: &FiniteGroup, a: usize, set: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = set.iter().map(|&x| g.compose(a, x)).collect();
    v.sort_unstable();
    v
}

/// Number of cosets `xK` fixed by every element of `H`.
pub fn brute_mark(g: &FiniteGroup, h: &[usize], k: &[usize]) -> i64 {
    cosets(g, k)
        .iter()
        .filter(|c| h.iter().all(|&a| translate(g, a, c) == **c))
        .count() as i64
}

pub fn brute_marks(classes: &SubgroupClassTable) -> Vec<Vec<i64>> {
    let g = classes.group();
    let n = classes.len();
    (0..n)
        .map(|i| {
            let h = elements_of(classes, i);
            (0..n).map(|j| brute_mark(g, &h, &elements_of(classes, j))).collect()
        })
        .collect()
}

/// Is `b = x a x⁻¹` for some `x`? Both sorted.
pub fn conjugate_sets(g: &FiniteGroup, a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len()
        && g.elements().any(|x| {
            let mut c: Vec<usize> = a.iter().map(|&y| g.conjugate(y, x)).collect();
            c.sort_unstable();
            c == b
        })
}

pub fn brute_class_of(classes: &SubgroupClassTable, sub: &[usize]) -> usize {
    let g = classes.group();
    (0..classes.len())
        .find(|&i| conjugate_sets(g, &elements_of(classes, i), sub))
        .expect("every subgroup is conjugate to a representative")
}

/// Orbit counts by isotropy class of `G/H_i × G/H_j`.
pub fn brute_product_census(classes: &SubgroupClassTable, i: usize, j: usize) -> Vec<i64> {
    let g = classes.group();
    let left = cosets(g, &elements_of(classes, i));
    let right = cosets(g, &elements_of(classes, j));
    let li: HashMap<Vec<usize>, usize> = left.iter().cloned().enumerate().map(|(a, c)| (c, a)).collect();
    let ri: HashMap<Vec<usize>, usize> = right.iter().cloned().enumerate().map(|(a, c)| (c, a)).collect();
    let act = |x: usize, (a, b): (usize, usize)| {
        (li[&translate(g, x, &left[a])], ri[&translate(g, x, &right[b])])
    };
    let mut seen = vec![vec![false; right.len()]; left.len()];
    let mut census = vec![0i64; classes.len()];
    for a in 0..left.len() {
        for b in 0..right.len() {
            if seen[a][b] {
                continue;
            }
            seen[a][b] = true;
            let mut queue = VecDeque::from([(a, b)]);
            while let Some(p) = queue.pop_front() {
                for x in g.elements() {
                    let q = act(x, p);
                    if !seen[q.0][q.1] {
                        seen[q.0][q.1] = true;
                        queue.push_back(q);
                    }
                }
            }
            let stab: Vec<usize> = g.elements().filter(|&x| act(x, (a, b)) == (a, b)).collect();
            census[brute_class_of(classes, &stab)] += 1;
        }
    }
    census
}

/// Number of subgroups, by closing every set of at most three generators.
pub fn brute_subgroup_count(g: &FiniteGroup) -> usize {
    let close = |gens: &[usize]| -> Vec<usize> {
        let mut set = BTreeSet::from([0usize]);
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &s in gens {
                let y = g.compose(x, s);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set.into_iter().collect()
    };
    let n = g.order();
    let mut subgroups = BTreeSet::new();
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                subgroups.insert(close(&[a, b, c]));
            }
        }
    }
    subgroups.len()
}

/// `Ψ⁻¹` as an integer matrix over a common denominator, by Gauss–Jordan
/// elimination on the full matrix.
pub fn integer_inverse(psi: &MarksMatrix) -> (Vec<Vec<i128>>, i128) {
    let n = psi.len();
    let q = |v: i64| BigRational::from_integer(BigInt::from(v));
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| if j < n { q(psi.get(i, j)) } else if j - n == i { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero()).expect("nonsingular");
        a.swap(col, p);
        let pivot = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = &*x / &pivot;
        }
        let prow = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
    }
    let mut den = BigInt::one();
    for row in &a {
        for x in &row[n..] {
            den = num_integer::lcm(den, x.denom().clone());
        }
    }
    let inv = a
        .iter()
        .map(|row| {
            row[n..]
                .iter()
                .map(|x| (x * BigRational::from_integer(den.clone())).to_integer().to_i128().unwrap())
                .collect()
        })
        .collect();
    (inv, den.abs().to_i128().unwrap())
}

/// All units, by testing every sign vector for an integral preimage.
pub fn brute_units(psi: &MarksMatrix) -> Vec<Vec<i64>> {
    let n = psi.len();
    assert!(n <= 20, "exhaustive unit search is exponential");
    let (inv, den) = integer_inverse(psi);
    let mut units = Vec::new();
    for mask in 0u64..(1 << n) {
        let eps: Vec<i128> = (0..n).map(|j| if mask >> j & 1 == 1 { -1 } else { 1 }).collect();
        let x: Option<Vec<i64>> = inv
            .iter()
            .map(|row| {
                let s: i128 = row.iter().zip(&eps).map(|(a, e)| a * e).sum();
                (s % den == 0).then(|| (s / den) as i64)
            })
            .collect();
        if let Some(x) = x {
            units.push(x);
        }
    }
    units.sort();
    units
}
