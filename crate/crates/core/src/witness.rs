//! Constructive side: point sets from units, exact multiplicative
//! identities, the vanishing forms of a CM subfield, and a Veronese rank
//! probe for Zariski density. Point sets live over `k = Q`.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arrangement::Arrangement;
use crate::cmfields::CmSubfield;
use crate::embeddings::is_totally_imaginary;
use crate::error::{Error, Result};
use crate::exact::rational;
use crate::exact::{Polynomial, Rational};
use crate::form::{Form, Monomial};
use crate::galois::{galois_closure, GaloisGroup};
use crate::linalg;
use crate::numberfield::{roots_in_field, FieldElement, KPoly, NumberField, SubfieldEmbedding};

pub fn euler_phi(mut n: u64) -> u64 {
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// The `n`-th cyclotomic polynomial.
pub fn cyclotomic(n: u64) -> Polynomial {
    let mut p = &Polynomial::monomial(Rational::one(), n as usize) - &Polynomial::one();
    for d in (1..n).filter(|d| n % d == 0) {
        p = p.div_exact(&cyclotomic(d)).expect("Φ_d divides x^n - 1");
    }
    p
}

/// Order `w` of the roots of unity in `m`, with a generator.
pub fn torsion_units(m: &NumberField) -> Result<(u64, FieldElement)> {
    let d = m.degree() as u64;
    if !is_totally_imaginary(m) {
        return Ok((2, -&m.one()));
    }
    // w is even and φ(w) | d; φ(n) ≥ sqrt(n/2)
    for n in (4..=2 * d * d).rev().filter(|n| n % 2 == 0 && d % euler_phi(*n) == 0) {
        let roots = roots_in_field(&KPoly::from_rational(m, &cyclotomic(n)))?;
        if let Some(r) = roots.into_iter().next() {
            return Ok((n, r));
        }
    }
    Ok((2, -&m.one()))
}

/// Units of `M` asserted by the caller, checked to be algebraic integers of
/// norm ±1, together with the torsion subgroup.
#[derive(Clone, Debug)]
pub struct UnitSupply {
    field: NumberField,
    generators: Vec<FieldElement>,
    w: u64,
    torsion: FieldElement,
}

pub fn is_unit(u: &FieldElement) -> bool {
    let mp = u.minimal_polynomial();
    mp.coeffs().iter().all(|c| c.is_integer()) && mp.coeff(0).abs().is_one()
}

impl UnitSupply {
    pub fn new(field: &NumberField, generators: Vec<FieldElement>) -> Result<UnitSupply> {
        for (i, g) in generators.iter().enumerate() {
            if !g.field().same(field) {
                return Err(Error::FieldMismatch);
            }
            if !is_unit(g) {
                return Err(Error::NotUnit(format!("generator {i} = {g} has minimal polynomial {}", g.minimal_polynomial())));
            }
        }
        let (w, torsion) = torsion_units(field)?;
        Ok(UnitSupply { field: field.clone(), generators, w, torsion })
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }
    pub fn generators(&self) -> &[FieldElement] {
        &self.generators
    }
    pub fn torsion_order(&self) -> u64 {
        self.w
    }
    pub fn torsion_generator(&self) -> &FieldElement {
        &self.torsion
    }
}

/// Points of projective space over Q, each scaled so its first nonzero
/// coordinate is 1, without repeats.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct ProjectivePointSet {
    pub ambient_dim: usize,
    #[serde(serialize_with = "rational_rows")]
    pub points: Vec<Vec<Rational>>,
}

fn rational_rows<S: serde::Serializer>(v: &[Vec<Rational>], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.iter().map(rational::to_string).collect::<Vec<_>>()))
}

fn projective_normal(v: &[Rational]) -> Option<Vec<Rational>> {
    let lead = v.iter().find(|x| !x.is_zero())?.clone();
    Some(v.iter().map(|x| x / &lead).collect())
}

impl ProjectivePointSet {
    pub fn new(ambient_dim: usize) -> ProjectivePointSet {
        ProjectivePointSet { ambient_dim, points: Vec::new() }
    }

    /// Normalizes and deduplicates, keeping first occurrences in order.
    pub fn from_vectors(ambient_dim: usize, vs: impl IntoIterator<Item = Vec<Rational>>) -> Result<ProjectivePointSet> {
        let mut seen = HashSet::new();
        let mut points = Vec::new();
        for v in vs {
            if v.len() != ambient_dim + 1 {
                return Err(Error::DimensionMismatch(format!("point with {} coordinates in P^{ambient_dim}", v.len())));
            }
            let Some(p) = projective_normal(&v) else { continue };
            if seen.insert(p.clone()) {
                points.push(p);
            }
        }
        Ok(ProjectivePointSet { ambient_dim, points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Each point as a primitive integer vector.
    pub fn integer_points(&self) -> Vec<Vec<BigInt>> {
        self.points.iter().map(|p| rational::primitive_integer_vector(p)).collect()
    }
}

/// Coordinates of `x` in a Q-basis, by a precomputed inverse.
struct Coordinates {
    inv: Vec<Vec<Rational>>,
}

impl Coordinates {
    fn new(basis: &[FieldElement], field: &NumberField) -> Result<Coordinates> {
        let d = field.degree();
        if basis.len() != d || basis.iter().any(|b| !b.field().same(field)) {
            return Err(Error::DimensionMismatch(format!("expected a basis of {d} elements of the field")));
        }
        // columns of m are the basis coordinates
        let m: Vec<Vec<Rational>> = (0..d).map(|i| basis.iter().map(|b| b.coords()[i].clone()).collect()).collect();
        if linalg::rank(&m, d) < d {
            return Err(Error::DependentBasis);
        }
        let mut inv = vec![Vec::new(); d];
        for i in 0..d {
            let mut e = vec![Rational::zero(); d];
            e[i] = Rational::one();
            let col = linalg::solve(&m, &e, d).ok_or(Error::DependentBasis)?;
            for (j, c) in col.into_iter().enumerate() {
                inv[j].push(c);
            }
        }
        Ok(Coordinates { inv })
    }

    fn of(&self, x: &FieldElement) -> Vec<Rational> {
        let c = x.coords();
        self.inv.iter().map(|row| row.iter().zip(&c).map(|(a, b)| a * b).sum()).collect()
    }
}

/// Coordinate vectors of `t·∏ gᵢ^{eᵢ}` for torsion `t` and `|eᵢ| ≤ bound`,
/// in lexicographic order of `(t, e₁, …, e_g)`, exact duplicates removed.
pub fn unit_coordinates(supply: &UnitSupply, basis: &[FieldElement], bound: u32) -> Result<Vec<Vec<Rational>>> {
    let coords = Coordinates::new(basis, &supply.field)?;
    let b = bound as i64;
    let powers: Vec<Vec<FieldElement>> = supply
        .generators
        .iter()
        .map(|g| (-b..=b).map(|e| g.pow(e)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let width = (2 * b + 1) as usize;
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut t = supply.field.one();
    for _ in 0..supply.w {
        let mut idx = vec![0usize; powers.len()];
        loop {
            let mut x = t.clone();
            for (p, &i) in powers.iter().zip(&idx) {
                x = &x * &p[i];
            }
            let v = coords.of(&x);
            if seen.insert(v.clone()) {
                out.push(v);
            }
            // odometer, last exponent fastest
            match (0..idx.len()).rev().find(|&j| idx[j] + 1 < width) {
                Some(j) => {
                    idx[j] += 1;
                    idx[j + 1..].iter_mut().for_each(|i| *i = 0);
                }
                None => break,
            }
        }
        t = &t * &supply.torsion;
    }
    Ok(out)
}

/// The projective points in `P^{[M:Q]−1}` of the units from the supply.
pub fn unit_points(supply: &UnitSupply, basis: &[FieldElement], bound: u32) -> Result<ProjectivePointSet> {
    let n = supply.field.degree() - 1;
    ProjectivePointSet::from_vectors(n, unit_coordinates(supply, basis, bound)?)
}

/// Points whose coordinates are a concatenation of one unit vector per block
/// followed by `free` integer coordinates in `[−box_bound, box_bound]`.
pub fn product_points(blocks: &[Vec<Vec<Rational>>], free: usize, box_bound: u32) -> Result<ProjectivePointSet> {
    let n = blocks.iter().map(|b| b.first().map_or(0, |v| v.len())).sum::<usize>() + free;
    if n == 0 {
        return Err(Error::DimensionMismatch("no coordinates".into()));
    }
    let mut acc: Vec<Vec<Rational>> = vec![Vec::new()];
    for b in blocks {
        acc = acc.iter().flat_map(|a| b.iter().map(move |v| [a.clone(), v.clone()].concat())).collect();
    }
    let range: Vec<Rational> = (-(box_bound as i64)..=box_bound as i64).map(|c| Rational::from_integer(c.into())).collect();
    for _ in 0..free {
        acc = acc.iter().flat_map(|a| range.iter().map(move |c| [a.clone(), vec![c.clone()]].concat())).collect();
    }
    ProjectivePointSet::from_vectors(n - 1, acc)
}

/// The embeddings `σ_i : M → N` into the Galois closure, `σ_i(θ) = roots[i]`,
/// with `pairing[i] = j` when `τσ_i = σ_j` for complex conjugation `τ`.
#[derive(Debug)]
pub struct ClosureEmbeddings {
    pub group: GaloisGroup,
    pub sigmas: Vec<SubfieldEmbedding>,
    pub pairing: Vec<usize>,
}

pub fn closure_embeddings(m: &NumberField, cap: usize) -> Result<ClosureEmbeddings> {
    let (group, _) = galois_closure(m, cap)?;
    let n = group.field().clone();
    let roots = group.splitting_field().roots.clone();
    let sigmas =
        roots.iter().map(|r| SubfieldEmbedding::new(m, &n, r.clone())).collect::<Result<Vec<_>>>()?;
    let tau = group.complex_conjugation()?;
    let pairing = roots
        .iter()
        .map(|r| {
            let t = group.apply(tau, r);
            roots.iter().position(|s| s == &t).expect("τ permutes the roots")
        })
        .collect();
    Ok(ClosureEmbeddings { group, sigmas, pairing })
}

/// Checks `∏ σ_i(x)^{a_i} = ∏ σ_i(x)^{b_i}` exactly in the common target.
pub fn verify_multiplicative_identity(sigmas: &[SubfieldEmbedding], x: &FieldElement, a: &[u64], b: &[u64]) -> Result<bool> {
    if x.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if a.len() != sigmas.len() || b.len() != sigmas.len() {
        return Err(Error::DimensionMismatch(format!("{} embeddings, exponents of length {} and {}", sigmas.len(), a.len(), b.len())));
    }
    if a.iter().sum::<u64>() != b.iter().sum::<u64>() {
        return Err(Error::Precondition("exponent sequences have different sums".into()));
    }
    let Some(first) = sigmas.first() else { return Ok(true) };
    let target = first.target();
    let mut lhs = target.one();
    let mut rhs = target.one();
    for ((s, &ai), &bi) in sigmas.iter().zip(a).zip(b) {
        if !s.target().same(target) || !s.source().same(x.field()) {
            return Err(Error::FieldMismatch);
        }
        if ai == 0 && bi == 0 {
            continue;
        }
        let y = s.apply(x);
        lhs = &lhs * &y.pow_u(ai);
        rhs = &rhs * &y.pow_u(bi);
    }
    Ok(lhs == rhs)
}

/// A Q-basis of the CM field `L` whose first half spans `L′`:
/// `γ^j` and `θ_L γ^j`, where `γ` generates `L′`.
pub fn split_basis(cm: &CmSubfield) -> Vec<FieldElement> {
    let l = &cm.field;
    let gamma = cm.real_in_field.image_of_generator();
    let half = cm.real.degree();
    let real: Vec<FieldElement> = (0..half).map(|j| gamma.pow_u(j as u64)).collect();
    let theta = l.generator();
    let imag: Vec<FieldElement> = real.iter().map(|r| &theta * r).collect();
    [real, imag].concat()
}

/// The forms `f_i`, `i ≥ l`, with `N^M_L(Σ xⱼαⱼ)^m = Σ f_i β_i` and
/// `m = 2·w_L`; they vanish on the coordinates of every unit of `M`.
pub fn cm_vanishing_forms(
    cm: &CmSubfield,
    basis_m: &[FieldElement],
    basis_l: &[FieldElement],
    cap: usize,
) -> Result<Vec<Form<Rational>>> {
    let l = &cm.field;
    let m = cm.in_m.target();
    if !cm.k_in_real.source().is_rationals() {
        return Err(Error::Unsupported("vanishing forms over k ≠ Q".into()));
    }
    if !is_totally_imaginary(l) || 2 * cm.real.degree() != l.degree() {
        return Err(Error::Precondition(format!("{} is not a CM field", l.defining_polynomial())));
    }
    let half = cm.real.degree();
    if basis_l.len() != l.degree() || basis_l[..half].iter().any(|b| cm.real_in_field.preimage(b).is_none()) {
        return Err(Error::Precondition("basis of L does not start with a basis of its real subfield".into()));
    }
    let coords_l = Coordinates::new(basis_l, l)?;
    Coordinates::new(basis_m, m)?;
    let (w, _) = torsion_units(l)?;
    let power = 2 * w as u32;

    let norm: Form<FieldElement> = if cm.in_m.relative_degree() == 1 {
        let back: Vec<FieldElement> =
            basis_m.iter().map(|a| cm.in_m.preimage(a).expect("M = L")).collect();
        Form::linear(&back)
    } else {
        let (g, m_in_n) = galois_closure(m, cap)?;
        let l_in_n = cm.in_m.then(&m_in_n);
        let gl = g.fixing(&l_in_n)?;
        let theta = m_in_n.image_of_generator();
        let mut images: Vec<FieldElement> = Vec::new();
        let mut prod = Form::constant(basis_m.len(), g.field().one());
        for &s in gl.elements() {
            let t = g.apply(s, theta);
            if images.contains(&t) {
                continue;
            }
            images.push(t.clone());
            let sigma = SubfieldEmbedding::new(m, g.field(), t)?;
            let lin: Vec<FieldElement> = basis_m.iter().map(|a| sigma.apply(a)).collect();
            prod = prod.mul(&Form::linear(&lin));
        }
        prod.try_map(|c| l_in_n.preimage(c).ok_or_else(|| Error::Internal("relative norm coefficient outside L".into())))?
    };
    let big = norm.pow(power);
    let parts: Vec<Form<Rational>> = (half..l.degree())
        .map(|i| {
            Form::from_terms(
                basis_m.len(),
                big.terms().iter().map(|(mono, c)| (mono.clone(), coords_l.of(c)[i].clone())),
            )
        })
        .collect();
    Ok(parts.into_iter().filter(|f| !f.is_zero()).collect())
}

/// All exponent vectors of total degree `d` in `nvars` variables, in
/// lexicographic order with the first variable's exponent decreasing.
pub fn monomials(nvars: usize, d: u32) -> Vec<Monomial> {
    if nvars == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if nvars == 1 {
        return vec![vec![d]];
    }
    (0..=d)
        .rev()
        .flat_map(|e| {
            monomials(nvars - 1, d - e).into_iter().map(move |mut rest| {
                rest.insert(0, e);
                rest
            })
        })
        .collect()
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeReport {
    pub degree: u32,
    pub monomials: usize,
    pub rank: usize,
    pub full_rank: bool,
    /// `C(n+d, n)` exceeds the number of points: a deficiency here says
    /// nothing about density.
    pub insufficient_points: bool,
    pub vanishing_dimension: usize,
    pub vanishing_forms: Vec<Form<Rational>>,
    /// Forms omitted beyond the listing limit.
    pub omitted_forms: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DensityReport {
    pub ambient_dim: usize,
    pub points: usize,
    pub degrees: Vec<DegreeReport>,
}

impl DensityReport {
    /// Degrees with a vanishing form despite enough points.
    pub fn genuine_deficiencies(&self) -> Vec<u32> {
        self.degrees.iter().filter(|r| !r.full_rank && !r.insufficient_points).map(|r| r.degree).collect()
    }
}

pub const DEFAULT_FORMS_LIMIT: usize = 16;

/// Veronese rank of the point set in each degree `1..=max_degree`.
pub fn empirical_density(pts: &ProjectivePointSet, max_degree: u32) -> DensityReport {
    empirical_density_with(pts, max_degree, DEFAULT_FORMS_LIMIT)
}

pub fn empirical_density_with(pts: &ProjectivePointSet, max_degree: u32, forms_limit: usize) -> DensityReport {
    let nv = pts.ambient_dim + 1;
    let ints = pts.integer_points();
    let degrees = (1..=max_degree)
        .map(|d| {
            let monos = monomials(nv, d);
            let rows: Vec<Vec<BigInt>> = ints
                .iter()
                .map(|p| {
                    monos
                        .iter()
                        .map(|m| m.iter().zip(p).fold(BigInt::one(), |acc, (&e, x)| acc * num_traits::pow(x.clone(), e as usize)))
                        .collect()
                })
                .collect();
            let count = monos.len();
            debug_assert_eq!(count, binomial(pts.ambient_dim + d as usize, pts.ambient_dim));
            let ech = linalg::bareiss(rows.clone(), count);
            let rank = ech.rank();
            let dim = count - rank;
            let forms: Vec<Form<Rational>> = if dim == 0 || forms_limit == 0 {
                Vec::new()
            } else {
                linalg::integer_nullspace(rows, count)
                    .into_iter()
                    .take(forms_limit)
                    .map(|v| {
                        Form::from_terms(
                            nv,
                            monos.iter().cloned().zip(v.into_iter().map(Rational::from_integer)),
                        )
                    })
                    .collect()
            };
            DegreeReport {
                degree: d,
                monomials: count,
                rank,
                full_rank: dim == 0,
                insufficient_points: count > pts.len(),
                vanishing_dimension: dim,
                omitted_forms: dim - forms.len(),
                vanishing_forms: forms,
            }
        })
        .collect();
    DensityReport { ambient_dim: pts.ambient_dim, points: pts.len(), degrees }
}

/// Result of evaluating `x^I / F(x)` with `F` the defining form of the
/// arrangement and `|I| = deg F` over a point family in generation order.
#[derive(Clone, Debug, Serialize)]
pub struct IntegralityReport {
    pub functions: usize,
    pub points: usize,
    /// lcm of all value denominators over the first half of the family.
    pub prefix_denominator: String,
    /// lcm over the whole family.
    pub denominator: String,
    pub bounded: bool,
}

/// A common denominator for the generating regular functions exists on the
/// family and stops growing: the lcm over the whole family equals the lcm
/// over its first half.
pub fn integrality_report(a: &Arrangement, pts: &ProjectivePointSet) -> Result<IntegralityReport> {
    if pts.ambient_dim != a.ambient_dim() {
        return Err(Error::DimensionMismatch(format!("points in P^{}, arrangement in P^{}", pts.ambient_dim, a.ambient_dim())));
    }
    let f = a.defining_form_q()?;
    let deg = f.homogeneous_degree().unwrap_or(0);
    let monos = monomials(a.ambient_dim() + 1, deg);
    let half = pts.len().div_ceil(2);
    let mut lcm = BigInt::one();
    let mut prefix = BigInt::one();
    for (i, p) in pts.points.iter().enumerate() {
        let fv = f.eval(p);
        if fv.is_zero() {
            return Err(Error::PointOnArrangement(format!(
                "({})",
                p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(":")
            )));
        }
        for m in &monos {
            let v = m.iter().zip(p).fold(Rational::one(), |acc, (&e, x)| acc * num_traits::pow(x.clone(), e as usize)) / &fv;
            lcm = lcm.lcm(v.denom());
        }
        if i + 1 == half {
            prefix = lcm.clone();
        }
    }
    Ok(IntegralityReport {
        functions: monos.len(),
        points: pts.len(),
        bounded: prefix == lcm,
        prefix_denominator: prefix.to_string(),
        denominator: lcm.to_string(),
    })
}

pub fn verify_integrality(a: &Arrangement, pts: &ProjectivePointSet) -> Result<bool> {
    Ok(integrality_report(a, pts)?.bounded)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{Hyperplane, HyperplaneSpec};
    use crate::cmfields::contains_cm_subfield_over;

    fn field(cs: &[i64]) -> NumberField {
        NumberField::new(&Polynomial::from_ints(cs)).unwrap()
    }

    fn power_basis(m: &NumberField) -> Vec<FieldElement> {
        (0..m.degree()).map(|i| m.generator().pow_u(i as u64)).collect()
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic(1), Polynomial::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic(5), Polynomial::from_ints(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic(12), Polynomial::from_ints(&[1, 0, -1, 0, 1]));
        assert_eq!((1..40).map(euler_phi).filter(|&p| p == 4).count(), 4);
    }

    #[test]
    fn torsion() {
        let (w, g) = torsion_units(&field(&[-2, 0, 1])).unwrap();
        assert_eq!((w, g.to_string()), (2, "-1".to_string()));
        let gi = field(&[1, 0, 1]);
        let (w, g) = torsion_units(&gi).unwrap();
        assert_eq!(w, 4);
        assert_eq!(g.pow_u(2), -&gi.one());
        let z5 = field(&[1, 1, 1, 1, 1]);
        let (w, g) = torsion_units(&z5).unwrap();
        assert_eq!(w, 10);
        assert!(!g.pow_u(5).is_one() && g.pow_u(10).is_one() && !g.pow_u(2).is_one());
    }

    #[test]
    fn unit_point_counts() {
        let gi = field(&[1, 0, 1]);
        let pts = unit_points(&UnitSupply::new(&gi, vec![]).unwrap(), &power_basis(&gi), 3).unwrap();
        assert_eq!(pts.points, vec![vec![q(1), q(0)], vec![q(0), q(1)]]);
        let r2 = field(&[-2, 0, 1]);
        let u = &r2.one() + &r2.generator();
        let s = UnitSupply::new(&r2, vec![u]).unwrap();
        assert_eq!(unit_points(&s, &power_basis(&r2), 10).unwrap().len(), 21);
        assert_eq!(unit_points(&s, &power_basis(&r2), 0).unwrap().points, vec![vec![q(1), q(0)]]);
        let two = r2.from_int(2);
        assert!(matches!(UnitSupply::new(&r2, vec![two]), Err(Error::NotUnit(_))));
        let half = field(&[1, 0, 1]).element(&[Rational::new(3.into(), 5.into()), Rational::new(4.into(), 5.into())]).unwrap();
        assert!(!is_unit(&half));
    }

    #[test]
    fn identities() {
        let gi = field(&[1, 0, 1]);
        let ce = closure_embeddings(&gi, 24).unwrap();
        assert!(verify_multiplicative_identity(&ce.sigmas, &gi.generator(), &[4, 0], &[0, 4]).unwrap());
        assert!(!verify_multiplicative_identity(&ce.sigmas, &gi.generator(), &[1, 0], &[0, 1]).unwrap());
        let r2 = field(&[-2, 0, 1]);
        let ce = closure_embeddings(&r2, 24).unwrap();
        let u = &r2.one() + &r2.generator();
        assert!(!verify_multiplicative_identity(&ce.sigmas, &u, &[2, 0], &[0, 2]).unwrap());
        assert!(verify_multiplicative_identity(&ce.sigmas, &u, &[0, 0], &[0, 0]).unwrap());
        assert!(verify_multiplicative_identity(&ce.sigmas, &gi.zero(), &[1, 0], &[0, 1]).is_err());

        let z5 = field(&[1, 1, 1, 1, 1]);
        let ce = closure_embeddings(&z5, 24).unwrap();
        assert!(ce.pairing.iter().enumerate().all(|(i, &j)| j != i && ce.pairing[j] == i));
        // x^10 σ(x)^10 against the conjugates of the same two factors
        let (i1, i2) = (0, (1..4).find(|&j| j != ce.pairing[0]).unwrap());
        let mut a = vec![0; 4];
        let mut b = vec![0; 4];
        a[i1] = 10;
        a[i2] = 10;
        b[ce.pairing[i1]] = 10;
        b[ce.pairing[i2]] = 10;
        let z = z5.generator();
        assert!(verify_multiplicative_identity(&ce.sigmas, &z, &a, &b).unwrap());
        let golden = &(&z5.one() + &z) + &z.pow_u(4);
        assert!(verify_multiplicative_identity(&ce.sigmas, &golden, &a, &b).unwrap());
    }

    #[test]
    fn veronese_probe() {
        let two = ProjectivePointSet::from_vectors(1, vec![vec![q(1), q(0)], vec![q(0), q(1)]]).unwrap();
        let r = empirical_density(&two, 2);
        assert!(r.degrees[0].full_rank);
        let d2 = &r.degrees[1];
        assert_eq!((d2.rank, d2.insufficient_points), (2, true));
        assert_eq!(d2.vanishing_forms[0].to_string(), "x0*x1");
        let r2 = field(&[-2, 0, 1]);
        let s = UnitSupply::new(&r2, vec![&r2.one() + &r2.generator()]).unwrap();
        let pell = unit_points(&s, &power_basis(&r2), 10).unwrap();
        let rep = empirical_density(&pell, 20);
        assert!(rep.degrees.iter().all(|d| d.full_rank && d.rank == d.degree as usize + 1));
    }

    #[test]
    fn gaussian_vanishing_forms() {
        let gi = field(&[1, 0, 1]);
        let cm = contains_cm_subfield_over(&SubfieldEmbedding::of_rationals(&gi), 24).unwrap().cm.unwrap();
        let forms = cm_vanishing_forms(&cm, &power_basis(&gi), &split_basis(&cm), 24).unwrap();
        assert_eq!(forms.len(), 1);
        assert_eq!(forms[0].homogeneous_degree(), Some(8));
        for p in [[q(1), q(0)], [q(0), q(1)], [q(2), q(1)]] {
            assert_eq!(forms[0].eval(&p).is_zero(), p[0].is_zero() || p[1].is_zero());
        }
        let r2 = field(&[-2, 0, 1]);
        let fake = CmSubfield {
            field: r2.clone(),
            in_m: SubfieldEmbedding::identity(&r2),
            real: NumberField::rationals(),
            real_in_field: SubfieldEmbedding::of_rationals(&r2),
            k_in_real: SubfieldEmbedding::identity(&NumberField::rationals()),
        };
        assert!(cm_vanishing_forms(&fake, &power_basis(&r2), &power_basis(&r2), 24).is_err());
    }

    #[test]
    fn integrality() {
        let norm = |m: &NumberField| {
            let spec = HyperplaneSpec::NormComponent { k_in_field: SubfieldEmbedding::of_rationals(m), basis: power_basis(m), offset: 0 };
            Arrangement::new(&NumberField::rationals(), 1, vec![spec]).unwrap()
        };
        let r2 = field(&[-2, 0, 1]);
        let s = UnitSupply::new(&r2, vec![&r2.one() + &r2.generator()]).unwrap();
        let pell = unit_points(&s, &power_basis(&r2), 8).unwrap();
        let rep = integrality_report(&norm(&r2), &pell).unwrap();
        assert!(rep.bounded);
        assert_eq!(rep.denominator, "1");
        let gi = field(&[1, 0, 1]);
        let one = ProjectivePointSet::from_vectors(1, vec![vec![q(1), q(1)]]).unwrap();
        let rep = integrality_report(&norm(&gi), &one).unwrap();
        assert!(rep.bounded);
        assert_eq!(rep.denominator, "2");
        let tri = Arrangement::new(
            &NumberField::rationals(),
            1,
            [[1, 0], [0, 1], [1, 1]].iter().map(|c| HyperplaneSpec::Explicit(Hyperplane::rational(c))).collect(),
        )
        .unwrap();
        let family = ProjectivePointSet::from_vectors(1, (1..=10).map(|n| vec![q(1), q(n)])).unwrap();
        assert!(!verify_integrality(&tri, &family).unwrap());
        let on = ProjectivePointSet::from_vectors(1, vec![vec![q(1), q(-1)]]).unwrap();
        assert!(matches!(verify_integrality(&tri, &on), Err(Error::PointOnArrangement(_))));
    }
}
