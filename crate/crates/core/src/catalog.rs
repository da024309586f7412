//! Named groups with canonical permutation realizations.
//!
//! Grammar: `cyclic:n`, `dihedral:n` (order 2n), `symmetric:n`,
//! `alternating:n`, `quaternion:8`, and `product:A*B[*C...]` where each
//! factor is one of the non-product forms.

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupFile, Perm};

const MAX_SYMMETRIC_DEGREE: usize = 7;

struct Realization {
    domain: usize,
    generators: Vec<Perm>,
}

fn cycle_on(domain: usize, points: &[usize]) -> Perm {
    let mut p: Perm = (0..domain as u32).collect();
    for (i, &x) in points.iter().enumerate() {
        p[x] = points[(i + 1) % points.len()] as u32;
    }
    p
}

fn parse_param(spec: &str, family: &str, raw: &str) -> Result<usize> {
    raw.trim()
        .parse::<usize>()
        .map_err(|_| Error::UnknownSpec(format!("{spec}: bad parameter for {family}")))
}

fn realize_simple(spec: &str) -> Result<Realization> {
    let (family, param) = spec
        .split_once(':')
        .ok_or_else(|| Error::UnknownSpec(spec.to_string()))?;
    let n = parse_param(spec, family, param)?;
    let unknown = || Error::UnknownSpec(spec.to_string());
    let real = match family.trim() {
        "cyclic" => {
            if n == 0 {
                return Err(unknown());
            }
            Realization {
                domain: n,
                generators: vec![cycle_on(n, &(0..n).collect::<Vec<_>>())],
            }
        }
        "dihedral" => match n {
            0 | 1 => return Err(unknown()),
            // The 2-gon action is not faithful; use the Klein four-group on 4 points.
            2 => Realization {
                domain: 4,
                generators: vec![vec![1, 0, 3, 2], vec![2, 3, 0, 1]],
            },
            _ => {
                let rotation = cycle_on(n, &(0..n).collect::<Vec<_>>());
                let reflection: Perm = (0..n).map(|i| ((n - i) % n) as u32).collect();
                Realization {
                    domain: n,
                    generators: vec![rotation, reflection],
                }
            }
        },
        "symmetric" => {
            if n == 0 || n > MAX_SYMMETRIC_DEGREE {
                return Err(unknown());
            }
            if n == 1 {
                Realization {
                    domain: 1,
                    generators: vec![vec![0]],
                }
            } else {
                Realization {
                    domain: n,
                    generators: vec![cycle_on(n, &[0, 1]), cycle_on(n, &(0..n).collect::<Vec<_>>())],
                }
            }
        }
        "alternating" => {
            if n == 0 || n > MAX_SYMMETRIC_DEGREE {
                return Err(unknown());
            }
            if n < 3 {
                Realization {
                    domain: n,
                    generators: vec![(0..n as u32).collect()],
                }
            } else {
                Realization {
                    domain: n,
                    generators: (2..n).map(|k| cycle_on(n, &[0, 1, k])).collect(),
                }
            }
        }
        "quaternion" => {
            if n != 8 {
                return Err(unknown());
            }
            // Left-regular action: i = (1 2 3 4)(5 6 7 8), j = (1 5 3 7)(2 8 4 6).
            let mut i = cycle_on(8, &[0, 1, 2, 3]);
            let tail = cycle_on(8, &[4, 5, 6, 7]);
            i[4..8].copy_from_slice(&tail[4..8]);
            let mut j = cycle_on(8, &[0, 4, 2, 6]);
            let other = cycle_on(8, &[1, 7, 3, 5]);
            for x in [1, 3, 5, 7] {
                j[x] = other[x];
            }
            Realization {
                domain: 8,
                generators: vec![i, j],
            }
        }
        _ => return Err(unknown()),
    };
    Ok(real)
}

fn realize(spec: &str) -> Result<Realization> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("product:") {
        let factors: Vec<&str> = rest.split('*').collect();
        if factors.len() < 2 || factors.iter().any(|f| f.trim().starts_with("product:")) {
            return Err(Error::UnknownSpec(spec.to_string()));
        }
        let mut domain = 0;
        let mut parts = Vec::new();
        for f in factors {
            let r = realize_simple(f)?;
            parts.push((domain, r));
            domain += parts.last().unwrap().1.domain;
        }
        let mut generators = Vec::new();
        for (offset, r) in &parts {
            for g in &r.generators {
                let mut p: Perm = (0..domain as u32).collect();
                for (x, &y) in g.iter().enumerate() {
                    p[offset + x] = (offset + y as usize) as u32;
                }
                generators.push(p);
            }
        }
        Ok(Realization { domain, generators })
    } else {
        realize_simple(spec)
    }
}

/// Build a catalog group by name.
pub fn catalog_group(spec: &str, max_order: usize) -> Result<FiniteGroup> {
    let r = realize(spec)?;
    FiniteGroup::from_permutations(spec.trim(), r.domain, &r.generators, max_order)
}

/// Resolve a catalog spec or `file:PATH` pointing at a JSON group file.
pub fn resolve_group(spec: &str, max_order: usize) -> Result<FiniteGroup> {
    match spec.trim().strip_prefix("file:") {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))?;
            let file: GroupFile = serde_json::from_str(&text)
                .map_err(|e| Error::InvalidInput(format!("bad group file {path}: {e}")))?;
            file.build(max_order)
        }
        None => catalog_group(spec, max_order),
    }
}

/// Catalog specs used by the test and verification suites, each paired with
/// its group order.
pub const STANDARD_CATALOG: &[(&str, usize)] = &[
    ("cyclic:1", 1),
    ("cyclic:2", 2),
    ("cyclic:3", 3),
    ("cyclic:4", 4),
    ("dihedral:2", 4),
    ("cyclic:5", 5),
    ("cyclic:6", 6),
    ("symmetric:3", 6),
    ("cyclic:7", 7),
    ("cyclic:8", 8),
    ("product:cyclic:4*cyclic:2", 8),
    ("product:cyclic:2*cyclic:2*cyclic:2", 8),
    ("dihedral:4", 8),
    ("quaternion:8", 8),
    ("cyclic:9", 9),
    ("product:cyclic:3*cyclic:3", 9),
    ("cyclic:10", 10),
    ("dihedral:5", 10),
    ("cyclic:11", 11),
    ("cyclic:12", 12),
    ("product:cyclic:6*cyclic:2", 12),
    ("dihedral:6", 12),
    ("alternating:4", 12),
    ("cyclic:13", 13),
    ("dihedral:7", 14),
    ("cyclic:15", 15),
    ("cyclic:16", 16),
    ("product:cyclic:4*cyclic:4", 16),
    ("product:cyclic:8*cyclic:2", 16),
    ("dihedral:8", 16),
    ("product:dihedral:4*cyclic:2", 16),
    ("product:quaternion:8*cyclic:2", 16),
    ("product:symmetric:3*cyclic:3", 18),
    ("dihedral:9", 18),
    ("dihedral:10", 20),
    ("cyclic:21", 21),
    ("symmetric:4", 24),
    ("product:alternating:4*cyclic:2", 24),
    ("product:symmetric:3*cyclic:4", 24),
    ("dihedral:12", 24),
];

/// Entries of [`STANDARD_CATALOG`] with order at most `max_order`.
pub fn catalog_up_to(max_order: usize) -> impl Iterator<Item = &'static str> {
    STANDARD_CATALOG
        .iter()
        .filter(move |(_, o)| *o <= max_order)
        .map(|(s, _)| *s)
}
