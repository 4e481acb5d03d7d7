//! Decision procedures for density of integral points on hyperplane
//! complements: the complete criterion for archimedean `S`, and the
//! sufficient tests plus unit-action linear algebra for general `S`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arrangement::{Arrangement, Component};
use crate::cmfields::{contains_cm_subfield_over, CmReport, CmSubfield};
use crate::embeddings::{embeddings, unit_rank};
use crate::error::{Error, Result};
use crate::exact::{discriminant, modp, Polynomial};
use crate::linalg;
use crate::numberfield::{roots_in_field, KPoly, NumberField, SubfieldEmbedding};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Dense,
    NotDense,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Condition {
    A,
    B,
    C,
    #[serde(rename = "none")]
    None,
    #[serde(rename = "s4_split_complete")]
    SplitComplete,
    #[serde(rename = "s4_no_split")]
    NoSplit,
    #[serde(rename = "s4_linear_algebra")]
    LinearAlgebra,
    #[serde(rename = "insufficient_data")]
    InsufficientData,
}

/// A finite place of `k`, given by the rational prime below it. `index`
/// selects among the primes of `k` above `p`; the tests here only use `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinitePlace {
    pub p: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
}

/// `S` minus the archimedean places, which are always included.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaceSpec {
    pub finite: Vec<FinitePlace>,
}

impl PlaceSpec {
    pub fn archimedean() -> PlaceSpec {
        PlaceSpec::default()
    }

    pub fn from_primes(ps: &[u64]) -> PlaceSpec {
        PlaceSpec { finite: ps.iter().map(|&p| FinitePlace { p, index: None }).collect() }
    }

    pub fn primes(&self) -> Vec<u64> {
        self.finite.iter().map(|f| f.p).collect()
    }
}

/// Valuations of generators of `O_{L,S_L}^*/O_L^*` under the embeddings of
/// `L` over `k`: `valuations[embedding][generator][place]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitActionData {
    pub embeddings: usize,
    /// `(i, j)` with `σ_j = τσ_i`; one pair per column of the identity.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<(usize, usize)>>,
    pub valuations: Vec<Vec<Vec<i64>>>,
    /// Which component of the arrangement the data describes.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub component: Option<usize>,
}

impl UnitActionData {
    pub fn generators(&self) -> usize {
        self.valuations.first().map_or(0, |v| v.len())
    }

    pub fn places(&self) -> usize {
        self.valuations.first().and_then(|v| v.first()).map_or(0, |v| v.len())
    }

    fn check(&self) -> Result<()> {
        if self.valuations.len() != self.embeddings {
            return Err(Error::DimensionMismatch(format!(
                "valuations given for {} embeddings, expected {}",
                self.valuations.len(),
                self.embeddings
            )));
        }
        let (g, s) = (self.generators(), self.places());
        for (i, e) in self.valuations.iter().enumerate() {
            if e.len() != g || e.iter().any(|v| v.len() != s) {
                return Err(Error::DimensionMismatch(format!("valuation block of embedding {i} is not {g}×{s}")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct PrimeFactor {
    pub residue_degree: usize,
    pub ramification: u32,
}

/// Decomposition of `p` in a number field. `verified` is false when `p`
/// divides the index of the monogenic order used.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplittingRecord {
    pub p: u64,
    pub primes: Vec<PrimeFactor>,
    pub verified: bool,
}

impl SplittingRecord {
    pub fn count(&self) -> usize {
        self.primes.len()
    }

    pub fn degree(&self) -> usize {
        self.primes.iter().map(|q| q.residue_degree * q.ramification as usize).sum()
    }

    pub fn splits_completely(&self) -> bool {
        self.primes.iter().all(|q| q.residue_degree == 1 && q.ramification == 1)
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn lift(a: &[u64]) -> Vec<BigInt> {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn mul_z(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Dedekind's criterion: whether `Z[η]` is maximal at `p`, where `f` is the
/// monic minimal polynomial of `η` and `fac` its factorization mod `p`.
fn dedekind_maximal(f: &[BigInt], fac: &[(Vec<u64>, u32)], p: u64) -> bool {
    let mut g = vec![BigInt::one()];
    let mut h = vec![BigInt::one()];
    for (t, e) in fac {
        let t = lift(t);
        g = mul_z(&g, &t);
        for _ in 1..*e {
            h = mul_z(&h, &t);
        }
    }
    let mut gh = mul_z(&g, &h);
    gh.resize(gh.len().max(f.len()), BigInt::zero());
    let pb = BigInt::from(p);
    let f1: Vec<BigInt> = gh.iter().enumerate().map(|(i, c)| (c - f.get(i).cloned().unwrap_or_default()) / &pb).collect();
    let red = |v: &[BigInt]| modp::from_bigints(v, p);
    let d = modp::gcd(&modp::gcd(&red(&f1), &red(&g), p), &red(&h), p);
    d.len() <= 1
}

/// Residue degrees and ramification indices of `p` in `k`, by factoring the
/// integral model modulo `p`.
pub fn prime_splitting(p: u64, k: &NumberField) -> Result<SplittingRecord> {
    if !is_prime(p) || p >= 1 << 31 {
        return Err(Error::Precondition(format!("{p} is not a prime below 2^31")));
    }
    if k.is_rationals() {
        return Ok(SplittingRecord { p, primes: vec![PrimeFactor { residue_degree: 1, ramification: 1 }], verified: true });
    }
    let f = k.integral_model();
    let fac = modp::factor_with_multiplicity(&modp::from_bigints(f, p), p);
    let disc = discriminant(&Polynomial::from_bigints(f))?;
    let verified = !(disc.numer() % BigInt::from(p)).is_zero() || dedekind_maximal(f, &fac, p);
    let mut primes: Vec<PrimeFactor> =
        fac.iter().map(|(t, e)| PrimeFactor { residue_degree: t.len() - 1, ramification: *e }).collect();
    primes.sort();
    Ok(SplittingRecord { p, primes, verified })
}

/// A nonzero `c` with `∏ (σ_i x)^{c_i} = ∏ (τσ_i x)^{c_i}` on the supplied
/// generators, and the same identity with nonnegative exponents over all
/// embeddings, `∏ ρ_j(x)^{a_j} = ∏ ρ_j(x)^{b_j}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityWitness {
    pub pairs: Vec<(usize, usize)>,
    #[serde(serialize_with = "decimal")]
    pub vector: Vec<BigInt>,
    #[serde(serialize_with = "decimal")]
    pub a: Vec<BigInt>,
    #[serde(serialize_with = "decimal")]
    pub b: Vec<BigInt>,
}

fn decimal<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

/// Nullspace of `A[(g, v), i] = v(σ_i g) − v(τσ_i g)`; `None` when only the
/// zero vector solves it.
pub fn solve_identity_linear_algebra(pairs: &[(usize, usize)], data: &UnitActionData) -> Result<Option<IdentityWitness>> {
    data.check()?;
    if pairs.len() * 2 != data.embeddings {
        return Err(Error::DimensionMismatch(format!(
            "{} conjugate pairs for {} embeddings",
            pairs.len(),
            data.embeddings
        )));
    }
    let mut seen = vec![false; data.embeddings];
    for &(i, j) in pairs {
        if i >= data.embeddings || j >= data.embeddings || seen[i] || seen[j] || i == j {
            return Err(Error::DimensionMismatch(format!("bad conjugate pair ({i}, {j})")));
        }
        seen[i] = true;
        seen[j] = true;
    }
    let l = pairs.len();
    let mut rows = Vec::new();
    for g in 0..data.generators() {
        for v in 0..data.places() {
            rows.push(
                pairs
                    .iter()
                    .map(|&(i, j)| BigInt::from(data.valuations[i][g][v]) - BigInt::from(data.valuations[j][g][v]))
                    .collect::<Vec<_>>(),
            );
        }
    }
    let Some(mut c) = linalg::integer_nullspace(rows, l).into_iter().next() else {
        return Ok(None);
    };
    if c.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        c = c.into_iter().map(|x| -x).collect();
    }
    let mut a = vec![BigInt::zero(); data.embeddings];
    let mut b = vec![BigInt::zero(); data.embeddings];
    for (&(i, j), ci) in pairs.iter().zip(&c) {
        if ci.is_positive() {
            a[i] += ci;
            b[j] += ci;
        } else {
            b[i] -= ci;
            a[j] -= ci;
        }
    }
    Ok(Some(IdentityWitness { pairs: pairs.to_vec(), vector: c, a, b }))
}

/// `(i, τ(i))` for the complex embeddings of a totally imaginary field,
/// in embedding order.
pub fn conjugation_pairs(l: &NumberField) -> Result<Vec<(usize, usize)>> {
    let e = embeddings(l)?;
    let conj = e.conjugation();
    if (0..e.len()).any(|i| conj[i] == i) {
        return Err(Error::Precondition(format!("{} has a real embedding", l.defining_polynomial())));
    }
    Ok((0..e.len()).filter(|&i| i < conj[i]).map(|i| (i, conj[i])).collect())
}

/// Whether `L/k` is normal: `[L:k]` roots of the minimal polynomial of `L`
/// in `L` fix the image of `k`.
pub fn is_galois_over(k_in_l: &SubfieldEmbedding) -> Result<bool> {
    let l = k_in_l.target();
    let roots = roots_in_field(&KPoly::from_rational(l, l.defining_polynomial()))?;
    let kappa = k_in_l.image_of_generator();
    let mut count = 0;
    for r in roots {
        let s = SubfieldEmbedding::new(l, l, r)?;
        if &s.apply(kappa) == kappa {
            count += 1;
        }
    }
    Ok(count == k_in_l.relative_degree())
}

#[derive(Clone, Debug, Serialize)]
pub struct Dependence {
    pub field: Polynomial,
    /// Coefficients of `Σ cᵢ Lᵢ = 0`, each as coordinates in the field.
    pub coefficients: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PlaceSplitting {
    pub p: u64,
    pub cm_field: SplittingRecord,
    pub real_subfield: SplittingRecord,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentVerdict {
    pub index: usize,
    pub degree: usize,
    pub field: Polynomial,
    pub orbit: Vec<usize>,
    pub cm: CmReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<Status>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resolution: Option<Condition>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub splitting: Vec<PlaceSplitting>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cm_galois_over_k: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identity: Option<IdentityWitness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub condition: Condition,
    pub triggered: Vec<Condition>,
    /// Set when density rests on the supplied S-unit generators being complete.
    pub conditional_on_generators: bool,
    pub finite_places: Vec<u64>,
    pub hyperplanes: usize,
    pub linear_rank: usize,
    pub unit_rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dependence: Option<Dependence>,
    pub components: Vec<ComponentVerdict>,
}

impl Verdict {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Dense => 0,
            Status::NotDense => 1,
            Status::Unknown => 2,
        }
    }
}

fn component_verdict(i: usize, c: &Component, cap: usize) -> Result<ComponentVerdict> {
    Ok(ComponentVerdict {
        index: i,
        degree: c.degree,
        field: c.field.defining_polynomial().clone(),
        orbit: c.orbit.clone(),
        cm: contains_cm_subfield_over(&c.k_in_field, cap)?,
        status: None,
        resolution: None,
        splitting: Vec::new(),
        cm_galois_over_k: None,
        identity: None,
    })
}

fn evaluate(k: &NumberField, a: &Arrangement, finite: usize, cap: usize) -> Result<(Vec<Condition>, Verdict)> {
    if !a.base_field().same(k) {
        return Err(Error::FieldMismatch);
    }
    let rank = a.linear_rank();
    let ur = unit_rank(k, finite);
    let mut triggered = Vec::new();
    let mut dependence = None;
    if rank < a.len() {
        triggered.push(Condition::A);
        let rel = a.dependence_relation().expect("dependent forms have a relation");
        dependence = Some(Dependence {
            field: a.working_field().defining_polynomial().clone(),
            coefficients: rel.iter().map(|c| c.coord_strings()).collect(),
        });
    }
    if ur == 0 && a.components_over_k().len() > 1 {
        triggered.push(Condition::B);
    }
    let components = a
        .components_over_k()
        .iter()
        .enumerate()
        .map(|(i, c)| component_verdict(i, c, cap))
        .collect::<Result<Vec<_>>>()?;
    if components.iter().any(|c| c.cm.contains) {
        triggered.push(Condition::C);
    }
    let verdict = Verdict {
        status: Status::Unknown,
        condition: Condition::InsufficientData,
        triggered: triggered.clone(),
        conditional_on_generators: false,
        finite_places: Vec::new(),
        hyperplanes: a.len(),
        linear_rank: rank,
        unit_rank: ur,
        dependence,
        components,
    };
    Ok((triggered, verdict))
}

/// The complete criterion for `S = S∞`. Every condition is evaluated; the
/// headline is the first that holds in the order A, B, C.
pub fn decide_s_infinity(k: &NumberField, a: &Arrangement, cap: usize) -> Result<Verdict> {
    let (triggered, mut v) = evaluate(k, a, 0, cap)?;
    match triggered.first() {
        Some(&c) => {
            v.status = Status::NotDense;
            v.condition = c;
        }
        None => {
            v.status = Status::Dense;
            v.condition = Condition::None;
        }
    }
    Ok(v)
}

fn cm_parts(c: &ComponentVerdict) -> &CmSubfield {
    c.cm.cm.as_ref().expect("contains implies a CM subfield")
}

/// Decides with finite places in `S`: condition A as before, B as
/// `unit_rank(k, #S_fin) = 0`, then per CM component the splitting tests
/// and, when supplied, the unit-action linear algebra.
pub fn decide_general_s(
    k: &NumberField,
    a: &Arrangement,
    s: &PlaceSpec,
    data: Option<&UnitActionData>,
    cap: usize,
) -> Result<Verdict> {
    if s.finite.is_empty() {
        return decide_s_infinity(k, a, cap);
    }
    let primes = s.primes();
    let (triggered, mut v) = evaluate(k, a, s.finite.len(), cap)?;
    v.finite_places = primes.clone();
    if triggered.contains(&Condition::A) || triggered.contains(&Condition::B) {
        v.status = Status::NotDense;
        v.condition = triggered[0];
        return Ok(v);
    }
    let n_cm = v.components.iter().filter(|c| c.cm.contains).count();
    for comp in v.components.iter_mut() {
        if !comp.cm.contains {
            comp.status = Some(Status::Dense);
            comp.resolution = Some(Condition::None);
            continue;
        }
        let cm = cm_parts(comp).clone();
        for &p in &primes {
            comp.splitting.push(PlaceSplitting {
                p,
                cm_field: prime_splitting(p, &cm.field)?,
                real_subfield: prime_splitting(p, &cm.real)?,
            });
        }
        if comp.splitting.iter().any(|r| r.cm_field.verified && r.cm_field.splits_completely()) {
            comp.status = Some(Status::Dense);
            comp.resolution = Some(Condition::SplitComplete);
            continue;
        }
        if comp
            .splitting
            .iter()
            .all(|r| r.cm_field.verified && r.real_subfield.verified && r.cm_field.count() == r.real_subfield.count())
        {
            comp.status = Some(Status::NotDense);
            comp.resolution = Some(Condition::NoSplit);
            continue;
        }
        let d = data.filter(|d| d.component.map_or(n_cm == 1, |i| i == comp.index));
        let Some(d) = d else {
            comp.status = Some(Status::Unknown);
            comp.resolution = Some(Condition::InsufficientData);
            continue;
        };
        let k_in_l = cm.k_in_real.then(&cm.real_in_field);
        let galois = is_galois_over(&k_in_l)?;
        comp.cm_galois_over_k = Some(galois);
        if !galois {
            comp.status = Some(Status::Unknown);
            comp.resolution = Some(Condition::InsufficientData);
            continue;
        }
        let pairs = match &d.pairs {
            Some(p) => p.clone(),
            None if k.is_rationals() => conjugation_pairs(&cm.field)?,
            None => {
                return Err(Error::Precondition("unit_action.pairs is required when k is not Q".into()));
            }
        };
        if d.embeddings != k_in_l.relative_degree() {
            return Err(Error::DimensionMismatch(format!(
                "unit action lists {} embeddings, [L:k] = {}",
                d.embeddings,
                k_in_l.relative_degree()
            )));
        }
        match solve_identity_linear_algebra(&pairs, d)? {
            Some(w) => {
                comp.status = Some(Status::NotDense);
                comp.identity = Some(w);
            }
            None => {
                comp.status = Some(Status::Dense);
                v.conditional_on_generators = true;
            }
        }
        comp.resolution = Some(Condition::LinearAlgebra);
    }
    let first = |st: Status| v.components.iter().find(|c| c.status == Some(st)).and_then(|c| c.resolution);
    if let Some(c) = first(Status::NotDense) {
        v.status = Status::NotDense;
        v.condition = c;
    } else if first(Status::Unknown).is_some() {
        v.status = Status::Unknown;
        v.condition = Condition::InsufficientData;
    } else {
        v.status = Status::Dense;
        v.condition = v
            .components
            .iter()
            .filter_map(|c| c.resolution)
            .filter(|&r| r != Condition::None)
            .max()
            .unwrap_or(Condition::None);
    }
    v.triggered.retain(|&c| c != Condition::C);
    v.triggered.extend(v.components.iter().filter(|c| c.status == Some(Status::NotDense)).filter_map(|c| c.resolution));
    v.triggered.sort();
    v.triggered.dedup();
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{Hyperplane, HyperplaneSpec};
    use crate::galois::DEFAULT_DEGREE_CAP;

    fn field(cs: &[i64]) -> NumberField {
        NumberField::new(&Polynomial::from_ints(cs)).unwrap()
    }

    fn norm(m: &NumberField, n: usize) -> Arrangement {
        let t = m.generator();
        let spec = HyperplaneSpec::NormComponent {
            k_in_field: SubfieldEmbedding::of_rationals(m),
            basis: (0..m.degree()).map(|i| t.pow_u(i as u64)).collect(),
            offset: 0,
        };
        Arrangement::new(&NumberField::rationals(), n, vec![spec]).unwrap()
    }

    fn rational(rows: &[&[i64]]) -> Arrangement {
        let specs = rows.iter().map(|r| HyperplaneSpec::Explicit(Hyperplane::rational(r))).collect();
        Arrangement::new(&NumberField::rationals(), rows[0].len() - 1, specs).unwrap()
    }

    fn s_inf(a: &Arrangement) -> (Status, Condition) {
        let v = decide_s_infinity(&NumberField::rationals(), a, DEFAULT_DEGREE_CAP).unwrap();
        (v.status, v.condition)
    }

    #[test]
    fn splitting_examples() {
        let gi = field(&[1, 0, 1]);
        let r5 = prime_splitting(5, &gi).unwrap();
        assert!(r5.verified && r5.splits_completely() && r5.count() == 2);
        let r3 = prime_splitting(3, &gi).unwrap();
        assert_eq!(r3.primes, vec![PrimeFactor { residue_degree: 2, ramification: 1 }]);
        assert!(r3.verified);
        let r2 = prime_splitting(2, &gi).unwrap();
        assert_eq!(r2.primes, vec![PrimeFactor { residue_degree: 1, ramification: 2 }]);
        assert!(r2.verified);
        let z5 = prime_splitting(5, &field(&[1, 1, 1, 1, 1])).unwrap();
        assert_eq!(z5.primes, vec![PrimeFactor { residue_degree: 1, ramification: 4 }]);
        assert!(z5.verified);
        // Z[√5] has index 2 in the maximal order
        let r = prime_splitting(2, &field(&[-5, 0, 1])).unwrap();
        assert!(!r.verified);
        assert!(prime_splitting(2, &field(&[-1, -1, 1])).unwrap().verified);
        assert!(prime_splitting(9, &gi).is_err());
    }

    #[test]
    fn s_infinity_corpus() {
        assert_eq!(s_inf(&rational(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]])), (Status::NotDense, Condition::A));
        assert_eq!(s_inf(&rational(&[&[1, 0, 0], &[0, 1, 0]])), (Status::NotDense, Condition::B));
        assert_eq!(s_inf(&norm(&field(&[1, 0, 1]), 1)), (Status::NotDense, Condition::C));
        assert_eq!(s_inf(&norm(&field(&[-2, 0, 1]), 1)), (Status::Dense, Condition::None));
        assert_eq!(s_inf(&norm(&field(&[-2, 0, 0, 1]), 2)), (Status::Dense, Condition::None));
        assert_eq!(s_inf(&rational(&[&[1, 0, 0, 0]])), (Status::Dense, Condition::None));
        let z5 = norm(&field(&[1, 1, 1, 1, 1]), 3);
        let v = decide_s_infinity(&NumberField::rationals(), &z5, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!((v.status, v.condition), (Status::NotDense, Condition::C));
        let cm = v.components[0].cm.cm.as_ref().unwrap();
        assert_eq!(cm.field.degree(), 4);
        assert!(crate::cmfields::same_field(&cm.real, &field(&[-5, 0, 1])).unwrap());
    }

    #[test]
    fn all_conditions_recorded() {
        let a = rational(&[&[1, 0], &[0, 1], &[1, 1]]);
        let v = decide_s_infinity(&NumberField::rationals(), &a, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(v.triggered, vec![Condition::A, Condition::B]);
        let dep = v.dependence.unwrap();
        assert_eq!(dep.coefficients.len(), 3);
    }

    #[test]
    fn gaussian_trichotomy() {
        let a = norm(&field(&[1, 0, 1]), 1);
        let q = NumberField::rationals();
        let run = |p: u64| decide_general_s(&q, &a, &PlaceSpec::from_primes(&[p]), None, DEFAULT_DEGREE_CAP).unwrap();
        let v5 = run(5);
        assert_eq!((v5.status, v5.condition), (Status::Dense, Condition::SplitComplete));
        assert_eq!((run(3).status, run(3).condition), (Status::NotDense, Condition::NoSplit));
        assert_eq!((run(2).status, run(2).condition), (Status::NotDense, Condition::NoSplit));
        let pell = norm(&field(&[-2, 0, 1]), 1);
        let v = decide_general_s(&q, &pell, &PlaceSpec::from_primes(&[7]), None, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(v.status, Status::Dense);
        let v = decide_general_s(&q, &a, &PlaceSpec::archimedean(), None, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(v.condition, Condition::C);
    }

    #[test]
    fn identity_examples() {
        let pairs = [(0, 1)];
        let empty = UnitActionData { embeddings: 2, pairs: None, valuations: vec![vec![], vec![]], component: None };
        assert_eq!(solve_identity_linear_algebra(&pairs, &empty).unwrap().unwrap().vector, vec![BigInt::one()]);
        let split = UnitActionData { embeddings: 2, pairs: None, valuations: vec![vec![vec![1, 0]], vec![vec![0, 1]]], component: None };
        assert!(solve_identity_linear_algebra(&pairs, &split).unwrap().is_none());
        let inert = UnitActionData { embeddings: 2, pairs: None, valuations: vec![vec![vec![1]], vec![vec![1]]], component: None };
        let w = solve_identity_linear_algebra(&pairs, &inert).unwrap().unwrap();
        assert_eq!((w.a.clone(), w.b.clone()), (vec![BigInt::one(), BigInt::zero()], vec![BigInt::zero(), BigInt::one()]));
        let bad = UnitActionData { embeddings: 2, pairs: None, valuations: vec![vec![vec![1]]], component: None };
        assert!(solve_identity_linear_algebra(&pairs, &bad).is_err());
    }

    #[test]
    fn linear_algebra_route() {
        // 3 has two primes in Q(ζ8) but is inert in Q(√2): neither splitting test applies
        let z8 = field(&[1, 0, 0, 0, 1]);
        let a = norm(&z8, 3);
        let q = NumberField::rationals();
        let s = PlaceSpec::from_primes(&[3]);
        let v = decide_general_s(&q, &a, &s, None, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!((v.status, v.condition), (Status::Unknown, Condition::InsufficientData));
        let swap = UnitActionData {
            embeddings: 4,
            pairs: None,
            valuations: vec![vec![vec![1, 0]], vec![vec![0, 1]], vec![vec![1, 0]], vec![vec![0, 1]]],
            component: None,
        };
        let pairs = conjugation_pairs(&z8).unwrap();
        let expect = solve_identity_linear_algebra(&pairs, &swap).unwrap();
        let v = decide_general_s(&q, &a, &s, Some(&swap), DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(v.condition, Condition::LinearAlgebra);
        assert_eq!(v.status == Status::NotDense, expect.is_some());
        assert_eq!(v.conditional_on_generators, expect.is_none());
        assert!(is_galois_over(&SubfieldEmbedding::of_rationals(&field(&[1, 1, 1, 1, 1]))).unwrap());
        assert!(!is_galois_over(&SubfieldEmbedding::of_rationals(&field(&[-2, 0, 0, 1]))).unwrap());
    }
}
