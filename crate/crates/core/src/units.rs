//! Factorization of Burnside ring units into basic degrees.
//!
//! A unit `u` has ghost vector `ε ∈ {±1}^N`, recorded as parities
//! `δ_i = (1 − ε_i)/2`. Since the ghost of `Π deg_{𝒱_k}^{μ_k}` is
//! `(−1)^{D μ}`, factoring `u` amounts to solving `D μ ≡ δ (mod 2)`. Every
//! candidate is then checked by multiplying out in `A(G)`.

use serde::Serialize;

use crate::degree::degree_product;
use crate::error::{Error, Result};
use crate::gf2::{self, BitMatrix, BitRow};
use crate::marks::MarksMatrix;
use crate::pipeline::Pipeline;
use crate::rep::FixedDimMatrix;
use crate::ring::{ghost_map, BurnsideElement};

/// `δ_i = (1 − ε_i)/2` for the ghost vector `ε` of a unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ParityVector(pub Vec<u8>);

impl ParityVector {
    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    /// Signs `(−1)^{δ_i}`.
    pub fn signs(&self) -> Vec<i64> {
        self.0.iter().map(|&b| if b == 0 { 1 } else { -1 }).collect()
    }
}

pub fn parity_vector(unit: &BurnsideElement, psi: &MarksMatrix) -> Result<ParityVector> {
    let ghost = ghost_map(psi, unit)?;
    if !ghost.is_sign_vector() {
        return Err(Error::NotAUnit);
    }
    Ok(ParityVector(
        ghost.values().iter().map(|&e| u8::from(e == -1)).collect(),
    ))
}

/// How to choose among several solutions of the parity system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SolutionRule {
    /// Pivots in ascending irrep order, free exponents zero.
    #[default]
    FreeZero,
    /// Fewest nonzero exponents over the whole solution coset.
    MinWeight,
}

pub fn parity_matrix(d: &FixedDimMatrix) -> BitMatrix {
    BitMatrix::from_int_rows(d.rows(), d.num_irreps())
}

/// Solve `D μ ≡ δ (mod 2)`.
pub fn solve_parity(d: &FixedDimMatrix, delta: &ParityVector) -> Result<Vec<u8>> {
    solve_parity_with(d, delta, SolutionRule::FreeZero)
}

pub fn solve_parity_with(d: &FixedDimMatrix, delta: &ParityVector, rule: SolutionRule) -> Result<Vec<u8>> {
    let a = parity_matrix(d);
    match rule {
        SolutionRule::FreeZero => gf2::solve(&a, delta.bits()),
        SolutionRule::MinWeight => gf2::solve_min_weight(&a, delta.bits()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub mu: Vec<u8>,
    pub unit: BurnsideElement,
    /// The product of basic degrees equals `unit` coefficientwise.
    pub verified: bool,
}

pub fn factor_unit(unit: &BurnsideElement, ctx: &Pipeline) -> Result<Factorization> {
    factor_unit_with(unit, ctx, SolutionRule::FreeZero)
}

pub fn factor_unit_with(unit: &BurnsideElement, ctx: &Pipeline, rule: SolutionRule) -> Result<Factorization> {
    let psi = ctx.marks()?;
    let delta = parity_vector(unit, psi)?;
    let mu = match solve_parity_with(ctx.fixed_dims()?, &delta, rule) {
        Ok(mu) => mu,
        Err(Error::NoSolution { certificate }) => {
            return Err(Error::UnitNotFactorable {
                coeffs: unit.coeffs().to_vec(),
                delta: delta.0,
                certificate,
            })
        }
        Err(e) => return Err(e),
    };
    let exps: Vec<u64> = mu.iter().map(|&b| u64::from(b)).collect();
    let product = degree_product(&exps, ctx.basic_degrees()?, ctx.tensor()?)?;
    Ok(Factorization {
        verified: product == *unit,
        mu,
        unit: unit.clone(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum VerificationStatus {
    Success,
    Counterexample,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitResult {
    pub coeffs: Vec<i64>,
    pub delta: Vec<u8>,
    pub mu: Option<Vec<u8>>,
    pub verified: bool,
    /// Equations of `D μ ≡ δ` summing to `0 ≡ 1`; present only when unsolvable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<usize>>,
}

/// Outcome of factoring every unit of `A(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub group: String,
    #[serde(rename = "N")]
    pub num_classes: usize,
    pub r: usize,
    #[serde(rename = "units")]
    pub unit_count: usize,
    #[serde(rename = "rank_D_mod2")]
    pub rank_d_mod2: usize,
    pub results: Vec<UnitResult>,
    pub status: VerificationStatus,
    /// GF(2) rank of the parity vectors of all units.
    #[serde(skip)]
    pub parity_rank: usize,
    /// GF(2) rank of `D` together with the achieved parity vectors; equals
    /// `rank_d_mod2` exactly when every parity lies in the column space.
    #[serde(skip)]
    pub augmented_rank: usize,
}

impl VerificationReport {
    pub fn is_success(&self) -> bool {
        self.status == VerificationStatus::Success
    }

    /// Units that could not be factored, with their parity vectors.
    pub fn failures(&self) -> impl Iterator<Item = &UnitResult> {
        self.results.iter().filter(|r| !r.verified)
    }

    /// `log2(units) ≤ rank(D mod 2) ≤ r`.
    pub fn rank_bounds_hold(&self) -> bool {
        self.parity_rank <= self.rank_d_mod2 && self.rank_d_mod2 <= self.r
    }
}

/// Enumerate, factor and verify every unit of `A(G)`.
///
/// Unsolvable parity systems and failed verifications are recorded in the
/// report. Only pipeline faults (caps, numerical gates) are returned as
/// errors.
pub fn verify_generation(ctx: &Pipeline) -> Result<VerificationReport> {
    let classes = ctx.classes()?;
    let psi = ctx.marks()?;
    let units = ctx.units()?;
    let d = ctx.fixed_dims()?;
    ctx.basic_degrees()?;
    let n = classes.len();
    let r = d.num_irreps();

    let mut results = Vec::with_capacity(units.len());
    let mut parities = Vec::with_capacity(units.len());
    for u in units {
        let delta = parity_vector(u, psi)?;
        parities.push(BitRow::from_bits(delta.bits()));
        let result = match factor_unit(u, ctx) {
            Ok(f) => UnitResult {
                coeffs: u.coeffs().to_vec(),
                delta: delta.0,
                mu: Some(f.mu),
                verified: f.verified,
                certificate: None,
            },
            Err(Error::UnitNotFactorable { certificate, .. }) => UnitResult {
                coeffs: u.coeffs().to_vec(),
                delta: delta.0,
                mu: None,
                verified: false,
                certificate: Some(certificate),
            },
            Err(e) => return Err(e),
        };
        results.push(result);
    }

    let parity_rank = BitMatrix::from_rows(parities.clone(), n).rank();
    if units.len() != 1usize << parity_rank {
        return Err(Error::Inconsistent(format!(
            "{} units but parity vectors span a space of dimension {parity_rank}",
            units.len()
        )));
    }
    let d_mod2 = parity_matrix(d);
    let rank_d_mod2 = d_mod2.rank();
    // columns of D followed by the parity vectors, as rows of the transpose
    let mut columns: Vec<BitRow> = (0..r)
        .map(|k| BitRow::from_bits(&d.column(k).iter().map(|v| v.rem_euclid(2) as u8).collect::<Vec<_>>()))
        .collect();
    columns.extend(parities);
    let augmented_rank = BitMatrix::from_rows(columns, n).rank();

    let status = if results.iter().all(|r| r.verified) {
        VerificationStatus::Success
    } else {
        VerificationStatus::Counterexample
    };
    Ok(VerificationReport {
        group: ctx.group().name().to_string(),
        num_classes: n,
        r,
        unit_count: units.len(),
        rank_d_mod2,
        results,
        status,
        parity_rank,
        augmented_rank,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::Limits;

    fn pipeline(spec: &str) -> Pipeline {
        Pipeline::from_spec(spec, Limits::default()).unwrap()
    }

    #[test]
    fn parity_of_one_and_minus_one() {
        let p = pipeline("symmetric:3");
        let one = p.element(vec![0, 0, 0, 1]).unwrap();
        let psi = p.marks().unwrap();
        assert_eq!(parity_vector(&one, psi).unwrap().bits(), &[0, 0, 0, 0]);
        assert_eq!(parity_vector(&one.neg(), psi).unwrap().bits(), &[1, 1, 1, 1]);
        let u = p.element(vec![0, 0, -1, 1]).unwrap();
        let delta = parity_vector(&u, psi).unwrap();
        assert_eq!(delta.bits(), &[1, 0, 1, 0]);
        assert_eq!(delta.signs(), vec![-1, 1, -1, 1]);
    }

    #[test]
    fn non_units_rejected() {
        let p = pipeline("symmetric:3");
        let x = p.element(vec![1, 0, 0, 0]).unwrap();
        assert_eq!(parity_vector(&x, p.marks().unwrap()), Err(Error::NotAUnit));
        assert_eq!(factor_unit(&x, &p), Err(Error::NotAUnit));
    }

    #[test]
    fn s3_parity_solutions() {
        let p = pipeline("symmetric:3");
        let d = p.fixed_dims().unwrap();
        assert_eq!(solve_parity(d, &ParityVector(vec![0, 0, 0, 0])).unwrap(), vec![0, 0, 0]);
        assert_eq!(solve_parity(d, &ParityVector(vec![1, 0, 1, 0])).unwrap(), vec![0, 1, 0]);
        assert_eq!(solve_parity(d, &ParityVector(vec![1, 1, 1, 0])).unwrap(), vec![0, 1, 1]);
    }

    #[test]
    fn s3_factorizations() {
        let p = pipeline("symmetric:3");
        let minus_one = p.element(vec![0, 0, 0, -1]).unwrap();
        let f = factor_unit(&minus_one, &p).unwrap();
        assert_eq!(f.mu, vec![1, 0, 0]);
        assert!(f.verified);
        let f = factor_unit(&p.element(vec![1, -2, 0, 1]).unwrap(), &p).unwrap();
        assert_eq!(f.mu, vec![0, 0, 1]);
        assert!(f.verified);
        let f = factor_unit(&p.element(vec![1, -2, -1, 1]).unwrap(), &p).unwrap();
        assert_eq!(f.mu, vec![0, 1, 1]);
        assert!(f.verified);
    }

    #[test]
    fn factorization_is_deterministic() {
        let p = pipeline("alternating:4");
        for u in p.units().unwrap() {
            assert_eq!(factor_unit(u, &p).unwrap(), factor_unit(u, &p).unwrap());
        }
    }

    #[test]
    fn min_weight_rule_also_verifies() {
        let p = pipeline("dihedral:4");
        for u in p.units().unwrap() {
            let a = factor_unit_with(u, &p, SolutionRule::FreeZero).unwrap();
            let b = factor_unit_with(u, &p, SolutionRule::MinWeight).unwrap();
            assert!(a.verified && b.verified);
            let w = |m: &[u8]| m.iter().filter(|&&x| x == 1).count();
            assert!(w(&b.mu) <= w(&a.mu));
        }
    }

    #[test]
    fn verify_small_groups() {
        let c3 = verify_generation(&pipeline("cyclic:3")).unwrap();
        assert_eq!((c3.unit_count, c3.status), (2, VerificationStatus::Success));
        let mus: Vec<_> = c3.results.iter().map(|r| r.mu.clone().unwrap()).collect();
        assert!(mus.contains(&vec![0, 0]) && mus.contains(&vec![1, 0]));

        let s3 = verify_generation(&pipeline("symmetric:3")).unwrap();
        assert_eq!((s3.unit_count, s3.rank_d_mod2), (8, 3));
        assert!(s3.is_success());
        assert!(s3.rank_bounds_hold());

        let c2 = verify_generation(&pipeline("cyclic:2")).unwrap();
        assert_eq!((c2.unit_count, c2.rank_d_mod2), (4, 2));
        assert!(c2.is_success());
    }

    #[test]
    fn report_json_fields() {
        let report = verify_generation(&pipeline("cyclic:3")).unwrap();
        let v = serde_json::to_value(&report).unwrap();
        let mut keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        keys.sort();
        assert_eq!(keys, ["N", "group", "r", "rank_D_mod2", "results", "status", "units"]);
        assert_eq!(v["status"], "SUCCESS");
        let mut rkeys: Vec<_> = v["results"][0].as_object().unwrap().keys().cloned().collect();
        rkeys.sort();
        assert_eq!(rkeys, ["coeffs", "delta", "mu", "verified"]);
    }
}
