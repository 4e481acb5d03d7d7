//! Unions of hyperplanes in projective space with algebraic coefficients.
//!
//! All coefficient fields are embedded in one working field `W`, the
//! splitting field of the product of their defining polynomials. Components
//! over `k` are the orbits of `Gal(W/k)` on the normalized forms.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::{Polynomial, Rational};
use crate::form::Form;
use crate::galois::{splitting_field, GaloisGroup, Subgroup};
use crate::linalg;
use crate::numberfield::{subfield_generated_by, FieldElement, NumberField, SubfieldEmbedding};

/// A projective hyperplane over `M ⊇ k`, first nonzero coefficient 1.
#[derive(Clone, Debug)]
pub struct Hyperplane {
    k_in_field: SubfieldEmbedding,
    coeffs: Vec<FieldElement>,
}

fn normalize(coeffs: &[FieldElement]) -> Result<Vec<FieldElement>> {
    let lead = coeffs
        .iter()
        .find(|c| !c.is_zero())
        .ok_or_else(|| Error::Precondition("hyperplane with all coefficients zero".into()))?;
    let inv = lead.inverse()?;
    Ok(coeffs.iter().map(|c| c * &inv).collect())
}

impl Hyperplane {
    pub fn new(k_in_field: &SubfieldEmbedding, coeffs: Vec<FieldElement>) -> Result<Hyperplane> {
        if coeffs.iter().any(|c| !c.field().same(k_in_field.target())) {
            return Err(Error::FieldMismatch);
        }
        Ok(Hyperplane { k_in_field: k_in_field.clone(), coeffs: normalize(&coeffs)? })
    }

    /// Over `k = Q` with coefficients in `field`.
    pub fn over_q(field: &NumberField, coeffs: Vec<FieldElement>) -> Result<Hyperplane> {
        Self::new(&SubfieldEmbedding::of_rationals(field), coeffs)
    }

    pub fn rational(coeffs: &[i64]) -> Hyperplane {
        let q = NumberField::rationals();
        Self::over_q(&q, coeffs.iter().map(|&c| q.from_int(c)).collect()).expect("nonzero rational form")
    }

    pub fn field(&self) -> &NumberField {
        self.k_in_field.target()
    }
    pub fn k_embedding(&self) -> &SubfieldEmbedding {
        &self.k_in_field
    }
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }
}

/// Input item: one hyperplane, or the shorthand for the full orbit of
/// `Σ x_{offset+j} αⱼ` with `αⱼ` a k-basis of `M`.
#[derive(Clone, Debug)]
pub enum HyperplaneSpec {
    Explicit(Hyperplane),
    NormComponent { k_in_field: SubfieldEmbedding, basis: Vec<FieldElement>, offset: usize },
}

#[derive(Clone, Debug)]
pub struct Component {
    /// Index of the representative in `Arrangement::forms`.
    pub representative: usize,
    pub orbit: Vec<usize>,
    pub field: NumberField,
    pub field_in_w: SubfieldEmbedding,
    pub k_in_field: SubfieldEmbedding,
    pub degree: usize,
}

#[derive(Debug, Clone)]
pub struct Arrangement {
    k: NumberField,
    n: usize,
    specs: Vec<HyperplaneSpec>,
    galois: Arc<GaloisGroup>,
    k_in_w: SubfieldEmbedding,
    gk: Subgroup,
    forms: Vec<Vec<FieldElement>>,
    components: Vec<Component>,
}

/// The first root of `f` in the splitting field (in root order) whose
/// embedding `M → W` is compatible with `k → M` and `k → W`.
fn embed_field(g: &GaloisGroup, k_in_m: &SubfieldEmbedding, k_in_w: &SubfieldEmbedding) -> Result<SubfieldEmbedding> {
    let m = k_in_m.target();
    let w = g.field();
    if m.is_rationals() {
        return Ok(SubfieldEmbedding::of_rationals(w));
    }
    let f = crate::numberfield::KPoly::from_rational(w, m.defining_polynomial());
    for r in &g.splitting_field().roots {
        if !f.eval(r).is_zero() {
            continue;
        }
        let e = SubfieldEmbedding::new(m, w, r.clone())?;
        if &e.apply(k_in_m.image_of_generator()) == k_in_w.image_of_generator() {
            return Ok(e);
        }
    }
    Err(Error::Internal(format!("no embedding of {m:?} over k into the working field")))
}

fn cmp_forms(a: &[FieldElement], b: &[FieldElement]) -> std::cmp::Ordering {
    a.iter().zip(b).map(|(x, y)| x.canonical_cmp(y)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
}

impl Arrangement {
    /// Builds the arrangement with the default closure cap.
    pub fn new(k: &NumberField, n: usize, specs: Vec<HyperplaneSpec>) -> Result<Arrangement> {
        Self::with_cap(k, n, specs, crate::galois::DEFAULT_DEGREE_CAP)
    }

    pub fn with_cap(k: &NumberField, n: usize, specs: Vec<HyperplaneSpec>, cap: usize) -> Result<Arrangement> {
        let mut polys: Vec<Polynomial> = vec![k.defining_polynomial().clone()];
        for s in &specs {
            let kin = match s {
                HyperplaneSpec::Explicit(h) => &h.k_in_field,
                HyperplaneSpec::NormComponent { k_in_field, .. } => k_in_field,
            };
            if !kin.source().same(k) {
                return Err(Error::FieldMismatch);
            }
            let p = kin.target().defining_polynomial();
            if !polys.contains(p) {
                polys.push(p.clone());
            }
        }
        let product = polys.iter().fold(Polynomial::one(), |acc, p| &acc * p);
        let galois = Arc::new(GaloisGroup::new(splitting_field(&product, cap)?)?);
        let w = galois.field().clone();
        let k_in_w = if k.is_rationals() {
            SubfieldEmbedding::of_rationals(&w)
        } else {
            let f = crate::numberfield::KPoly::from_rational(&w, k.defining_polynomial());
            let r = galois
                .splitting_field()
                .roots
                .iter()
                .find(|r| f.eval(r).is_zero())
                .expect("k's polynomial splits in W")
                .clone();
            SubfieldEmbedding::new(k, &w, r)?
        };
        let gk = galois.fixing(&k_in_w)?;

        let mut embeds: Vec<(Polynomial, FieldElement, SubfieldEmbedding)> = Vec::new();
        let mut into_w = |kin: &SubfieldEmbedding| -> Result<SubfieldEmbedding> {
            let key = (kin.target().defining_polynomial(), kin.image_of_generator());
            if let Some((_, _, e)) = embeds.iter().find(|(p, i, _)| p == key.0 && i.coords() == key.1.coords()) {
                return Ok(e.clone());
            }
            let e = embed_field(&galois, kin, &k_in_w)?;
            embeds.push((key.0.clone(), key.1.clone(), e.clone()));
            Ok(e)
        };

        let mut forms: Vec<Vec<FieldElement>> = Vec::new();
        let mut seen: HashSet<Vec<FieldElement>> = HashSet::new();
        let mut push = |f: Vec<FieldElement>, forms: &mut Vec<Vec<FieldElement>>| {
            if seen.insert(f.clone()) {
                forms.push(f);
            }
        };
        for s in &specs {
            match s {
                HyperplaneSpec::Explicit(h) => {
                    if h.coeffs.len() != n + 1 {
                        return Err(Error::DimensionMismatch(format!(
                            "hyperplane has {} coefficients in P^{n}",
                            h.coeffs.len()
                        )));
                    }
                    let e = into_w(&h.k_in_field)?;
                    push(normalize(&h.coeffs.iter().map(|c| e.apply(c)).collect::<Vec<_>>())?, &mut forms);
                }
                HyperplaneSpec::NormComponent { k_in_field, basis, offset } => {
                    let d = k_in_field.relative_degree();
                    if basis.len() != d {
                        return Err(Error::DimensionMismatch(format!(
                            "norm component basis has {} elements, [M:k] = {d}",
                            basis.len()
                        )));
                    }
                    if offset + d > n + 1 {
                        return Err(Error::DimensionMismatch(format!(
                            "norm component occupies x{offset}..x{} in P^{n}",
                            offset + d - 1
                        )));
                    }
                    let e = into_w(k_in_field)?;
                    let mut c = vec![w.zero(); n + 1];
                    for (j, b) in basis.iter().enumerate() {
                        if !b.field().same(k_in_field.target()) {
                            return Err(Error::FieldMismatch);
                        }
                        c[offset + j] = e.apply(b);
                    }
                    let base = normalize(&c)?;
                    let mut orbit: Vec<Vec<FieldElement>> = Vec::new();
                    for &s in gk.elements() {
                        let img: Vec<FieldElement> = base.iter().map(|x| galois.apply(s, x)).collect();
                        if !orbit.contains(&img) {
                            orbit.push(img);
                        }
                    }
                    if linalg::field_rank(&orbit, n + 1) < d {
                        return Err(Error::DependentBasis);
                    }
                    for f in orbit {
                        push(f, &mut forms);
                    }
                }
            }
        }

        Self::assemble(k, n, specs, galois, k_in_w, gk, forms)
    }

    fn assemble(
        k: &NumberField,
        n: usize,
        specs: Vec<HyperplaneSpec>,
        galois: Arc<GaloisGroup>,
        k_in_w: SubfieldEmbedding,
        gk: Subgroup,
        forms: Vec<Vec<FieldElement>>,
    ) -> Result<Arrangement> {
        let w = galois.field().clone();
        let index: HashSet<&Vec<FieldElement>> = forms.iter().collect();
        for (i, f) in forms.iter().enumerate() {
            for &s in gk.elements() {
                let img: Vec<FieldElement> = f.iter().map(|x| galois.apply(s, x)).collect();
                if !index.contains(&img) {
                    return Err(Error::NotDefinedOverK {
                        missing: format!(
                            "conjugate of hyperplane {i} with coefficients {:?}, W = Q[x]/({})",
                            img.iter().map(|c| c.coord_strings()).collect::<Vec<_>>(),
                            w.defining_polynomial()
                        ),
                    });
                }
            }
        }
        let mut a = Arrangement { k: k.clone(), n, specs, galois, k_in_w, gk, forms, components: Vec::new() };
        a.components = a.compute_components()?;
        Ok(a)
    }

    fn compute_components(&self) -> Result<Vec<Component>> {
        let g = &self.galois;
        let mut assigned = vec![false; self.forms.len()];
        let mut out = Vec::new();
        for i in 0..self.forms.len() {
            if assigned[i] {
                continue;
            }
            let mut orbit: Vec<usize> = Vec::new();
            let mut stab: Vec<usize> = Vec::new();
            for &s in self.gk.elements() {
                let img: Vec<FieldElement> = self.forms[i].iter().map(|x| g.apply(s, x)).collect();
                let j = self.forms.iter().position(|f| f == &img).expect("stability checked");
                if j == i {
                    stab.push(s);
                }
                if !orbit.contains(&j) {
                    orbit.push(j);
                }
            }
            orbit.sort();
            for &j in &orbit {
                assigned[j] = true;
            }
            let rep = *orbit.iter().min_by(|&&a, &&b| cmp_forms(&self.forms[a], &self.forms[b])).unwrap();
            let stab = g.closure(stab);
            let stab = if rep == i {
                stab
            } else {
                // stabilizers along an orbit are conjugate; recompute for the representative
                let s: Vec<usize> = self
                    .gk
                    .elements()
                    .iter()
                    .copied()
                    .filter(|&s| self.forms[rep].iter().all(|x| &g.apply(s, x) == x))
                    .collect();
                g.closure(s)
            };
            let (field, field_in_w) = definition_field(g, &self.k_in_w, &self.gk, &stab, &self.forms[rep]);
            let kimg = field_in_w
                .preimage(self.k_in_w.image_of_generator())
                .ok_or_else(|| Error::Internal("k outside the definition field".into()))?;
            let k_in_field = SubfieldEmbedding::new(&self.k, &field, kimg)?;
            let degree = self.gk.order() / stab.order();
            debug_assert_eq!(degree, orbit.len());
            out.push(Component { representative: rep, orbit, field, field_in_w, k_in_field, degree });
        }
        out.sort_by(|a, b| {
            a.degree
                .cmp(&b.degree)
                .then_with(|| cmp_forms(&self.forms[a.representative], &self.forms[b.representative]))
        });
        Ok(out)
    }

    pub fn base_field(&self) -> &NumberField {
        &self.k
    }
    pub fn ambient_dim(&self) -> usize {
        self.n
    }
    pub fn specs(&self) -> &[HyperplaneSpec] {
        &self.specs
    }
    pub fn galois(&self) -> &GaloisGroup {
        &self.galois
    }
    pub fn working_field(&self) -> &NumberField {
        self.galois.field()
    }
    pub fn k_in_working_field(&self) -> &SubfieldEmbedding {
        &self.k_in_w
    }
    /// `Gal(W/k)` as a subgroup of `Gal(W/Q)`.
    pub fn group_over_k(&self) -> &Subgroup {
        &self.gk
    }
    /// All hyperplanes, normalized, with coefficients in `W`.
    pub fn forms(&self) -> &[Vec<FieldElement>] {
        &self.forms
    }
    pub fn len(&self) -> usize {
        self.forms.len()
    }
    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn components_over_k(&self) -> &[Component] {
        &self.components
    }

    /// Rank over `W` of the coefficient matrix.
    pub fn linear_rank(&self) -> usize {
        linalg::field_rank(&self.forms, self.n + 1)
    }

    /// A nonzero `c` with `Σ cᵢ Lᵢ = 0`, when the forms are dependent.
    pub fn dependence_relation(&self) -> Option<Vec<FieldElement>> {
        let m = self.forms.len();
        let rows: Vec<Vec<FieldElement>> =
            (0..=self.n).map(|j| (0..m).map(|i| self.forms[i][j].clone()).collect()).collect();
        linalg::field_nullspace(&rows, m, self.working_field()).into_iter().next()
    }

    /// `∏` of the linear forms in the component's orbit, with coefficients
    /// pulled back to `k` (verified fixed by `Gal(W/k)`).
    pub fn component_norm_form(&self, c: &Component) -> Result<Form<FieldElement>> {
        let w = self.working_field();
        let mut prod = Form::constant(self.n + 1, w.one());
        for &i in &c.orbit {
            prod = prod.mul(&Form::linear(&self.forms[i]));
        }
        prod.try_map(|x| {
            self.k_in_w
                .preimage(x)
                .ok_or_else(|| Error::Internal(format!("norm form coefficient {x} not in k")))
        })
    }

    /// The norm form over `k = Q`, scaled to a primitive integral form.
    pub fn component_norm_form_q(&self, c: &Component) -> Result<Form<Rational>> {
        if !self.k.is_rationals() {
            return Err(Error::Unsupported("rational norm form over k ≠ Q".into()));
        }
        let f = self.component_norm_form(c)?;
        Ok(f.map(|x| x.as_rational().expect("element of Q")).primitive())
    }

    /// Product of all component norm forms: the defining form of the union.
    pub fn defining_form_q(&self) -> Result<Form<Rational>> {
        let mut prod = Form::constant(self.n + 1, Rational::from_integer(1.into()));
        for c in &self.components {
            prod = prod.mul(&self.component_norm_form_q(c)?);
        }
        Ok(prod.primitive())
    }

    /// Applies an invertible change of coordinates `x = A y` with rational
    /// entries, returning the transformed arrangement over the same `W`.
    pub fn transformed(&self, a: &[Vec<Rational>]) -> Result<Arrangement> {
        let w = self.working_field();
        let n1 = self.n + 1;
        let mut forms: Vec<Vec<FieldElement>> = Vec::new();
        for f in &self.forms {
            // L(Ay) has coefficients Aᵀc
            let c: Vec<FieldElement> =
                (0..n1).map(|j| (0..n1).fold(w.zero(), |acc, i| &acc + &f[i].scale(&a[i][j]))).collect();
            forms.push(normalize(&c)?);
        }
        let specs = forms
            .iter()
            .map(|c| Ok(HyperplaneSpec::Explicit(Hyperplane::new(&self.k_in_w, c.clone())?)))
            .collect::<Result<Vec<_>>>()?;
        Self::assemble(&self.k, self.n, specs, self.galois.clone(), self.k_in_w.clone(), self.gk.clone(), forms)
    }

    /// Values of `component_norm_form` for each component at a point over Q.
    pub fn norm_values_q(&self, point: &[Rational]) -> Result<Vec<Rational>> {
        self.components.iter().map(|c| Ok(self.component_norm_form_q(c)?.eval(point))).collect()
    }

    /// Summary used for serialization.
    pub fn component_summaries(&self) -> Vec<BTreeMap<&'static str, serde_json::Value>> {
        self.components
            .iter()
            .map(|c| {
                let mut m = BTreeMap::new();
                m.insert("degree", serde_json::json!(c.degree));
                m.insert("field", serde_json::json!(c.field.defining_polynomial()));
                m.insert("orbit", serde_json::json!(c.orbit));
                m
            })
            .collect()
    }
}

/// A presentation of `Fix(stab)`: a coefficient (or coefficient plus a
/// multiple of the generator of `k`) generating it, else the orbit-sum
/// fixed field.
fn definition_field(
    g: &GaloisGroup,
    k_in_w: &SubfieldEmbedding,
    gk: &Subgroup,
    stab: &Subgroup,
    coeffs: &[FieldElement],
) -> (NumberField, SubfieldEmbedding) {
    if stab == gk {
        return (k_in_w.source().clone(), k_in_w.clone());
    }
    let kappa = k_in_w.image_of_generator();
    for t in 0..4i64 {
        for c in coeffs {
            if c.is_rational() && t == 0 {
                continue;
            }
            let e = c + &kappa.scale(&Rational::from_integer(t.into()));
            if &g.fixing_element(&e) == stab {
                let emb = subfield_generated_by(&e);
                return (emb.source().clone(), emb);
            }
        }
        if k_in_w.source().is_rationals() {
            break;
        }
    }
    g.fixed_field(stab)
}

/// Minimal field of definition over `k` of one hyperplane, with `k → M_h`.
pub fn minimal_definition_field(h: &Hyperplane, cap: usize) -> Result<(NumberField, SubfieldEmbedding)> {
    let a = Arrangement::with_cap(h.k_in_field.source(), h.coeffs.len() - 1, orbit_specs(h, cap)?, cap)?;
    let c = &a.components[0];
    Ok((c.field.clone(), c.k_in_field.clone()))
}

/// The hyperplane together with all its conjugates over `k`, as explicit
/// specs in the working field.
fn orbit_specs(h: &Hyperplane, cap: usize) -> Result<Vec<HyperplaneSpec>> {
    let k = h.k_in_field.source();
    let m = h.field();
    let mut polys = vec![k.defining_polynomial().clone()];
    if !polys.contains(m.defining_polynomial()) {
        polys.push(m.defining_polynomial().clone());
    }
    let product = polys.iter().fold(Polynomial::one(), |acc, p| &acc * p);
    let g = GaloisGroup::new(splitting_field(&product, cap)?)?;
    let w = g.field().clone();
    let k_in_w = if k.is_rationals() {
        SubfieldEmbedding::of_rationals(&w)
    } else {
        let f = crate::numberfield::KPoly::from_rational(&w, k.defining_polynomial());
        let r = g.splitting_field().roots.iter().find(|r| f.eval(r).is_zero()).unwrap().clone();
        SubfieldEmbedding::new(k, &w, r)?
    };
    let e = embed_field(&g, &h.k_in_field, &k_in_w)?;
    let base: Vec<FieldElement> = h.coeffs.iter().map(|c| e.apply(c)).collect();
    let gk = g.fixing(&k_in_w)?;
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for &s in gk.elements() {
        let img: Vec<FieldElement> = base.iter().map(|x| g.apply(s, x)).collect();
        if seen.insert(img.clone()) {
            out.push(HyperplaneSpec::Explicit(Hyperplane::new(&k_in_w, img)?));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(cs: &[i64]) -> NumberField {
        NumberField::new(&Polynomial::from_ints(cs)).unwrap()
    }

    fn q() -> NumberField {
        NumberField::rationals()
    }

    fn norm_component(m: &NumberField, offset: usize) -> HyperplaneSpec {
        let t = m.generator();
        HyperplaneSpec::NormComponent {
            k_in_field: SubfieldEmbedding::of_rationals(m),
            basis: (0..m.degree()).map(|i| t.pow_u(i as u64)).collect(),
            offset,
        }
    }

    #[test]
    fn rational_components() {
        let a = Arrangement::new(
            &q(),
            1,
            vec![HyperplaneSpec::Explicit(Hyperplane::rational(&[1, 0])), HyperplaneSpec::Explicit(Hyperplane::rational(&[0, 1]))],
        )
        .unwrap();
        assert_eq!(a.components_over_k().len(), 2);
        assert!(a.components_over_k().iter().all(|c| c.field.is_rationals()));
        assert_eq!(a.linear_rank(), 2);
    }

    #[test]
    fn conjugate_pair_and_norm_forms() {
        let gi = field(&[1, 0, 1]);
        let i = gi.generator();
        let h = |s: i64| HyperplaneSpec::Explicit(Hyperplane::over_q(&gi, vec![gi.one(), i.scale(&Rational::from_integer(s.into()))]).unwrap());
        let a = Arrangement::new(&q(), 1, vec![h(1), h(-1)]).unwrap();
        let cs = a.components_over_k();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].degree, 2);
        assert_eq!(cs[0].field.defining_polynomial(), &Polynomial::from_ints(&[1, 0, 1]));
        assert_eq!(a.component_norm_form_q(&cs[0]).unwrap().to_string(), "x0^2 + x1^2");

        let err = Arrangement::new(&q(), 1, vec![h(1)]).unwrap_err();
        assert!(matches!(err, Error::NotDefinedOverK { .. }));

        let pell = Arrangement::new(&q(), 1, vec![norm_component(&field(&[-2, 0, 1]), 0)]).unwrap();
        assert_eq!(pell.component_norm_form_q(&pell.components_over_k()[0]).unwrap().to_string(), "x0^2 - 2*x1^2");
    }

    #[test]
    fn cube_root_orbit() {
        let m = field(&[-2, 0, 0, 1]);
        let a = m.generator();
        let h = Hyperplane::over_q(&m, vec![m.one(), a.clone()]).unwrap();
        let (f, _) = minimal_definition_field(&h, 24).unwrap();
        assert_eq!(f.degree(), 3);
        let arr = Arrangement::new(&q(), 1, orbit_specs(&h, 24).unwrap()).unwrap();
        let cs = arr.components_over_k();
        assert_eq!((cs.len(), cs[0].degree), (1, 3));
        assert_eq!(arr.component_norm_form_q(&cs[0]).unwrap().to_string(), "x0^3 + 2*x1^3");
        let h2 = Hyperplane::over_q(&m, vec![m.one(), a.clone(), &a * &a]).unwrap();
        assert_eq!(minimal_definition_field(&h2, 24).unwrap().0.degree(), 3);
        let h3 = Hyperplane::rational(&[1, 0, 0]);
        assert!(minimal_definition_field(&h3, 24).unwrap().0.is_rationals());
    }

    #[test]
    fn ranks() {
        let r = |v: &[&[i64]]| {
            let n = v[0].len() - 1;
            Arrangement::new(&q(), n, v.iter().map(|c| HyperplaneSpec::Explicit(Hyperplane::rational(c))).collect())
                .unwrap()
                .linear_rank()
        };
        assert_eq!(r(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]]), 2);
        assert_eq!(r(&[&[1, 0], &[0, 1]]), 2);
        let gi = field(&[1, 0, 1]);
        let mut specs = vec![norm_component(&gi, 0)];
        specs.push(HyperplaneSpec::Explicit(Hyperplane::rational(&[1, 0])));
        let a = Arrangement::new(&q(), 1, specs).unwrap();
        assert_eq!((a.len(), a.linear_rank()), (3, 2));
        let rel = a.dependence_relation().unwrap();
        assert!(rel.iter().any(|c| !c.is_zero()));
    }

    #[test]
    fn zeta5_component() {
        let a = Arrangement::new(&q(), 3, vec![norm_component(&field(&[1, 1, 1, 1, 1]), 0)]).unwrap();
        let cs = a.components_over_k();
        assert_eq!((cs.len(), cs[0].degree, a.linear_rank()), (1, 4, 4));
        let f = a.component_norm_form_q(&cs[0]).unwrap();
        assert_eq!(f.homogeneous_degree(), Some(4));
    }
}
