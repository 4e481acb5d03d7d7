//! CM fields and the question of whether `M` contains a CM subfield over `k`.
//!
//! Two independent routes: enumerating the subfields of `M` and testing each
//! with Sturm signatures, and the group construction `L = Fix(NH)` with
//! `N = ⟨τ φ⁻¹ τ φ⟩`.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::embeddings;
use crate::error::{Error, Result};
use crate::galois::{galois_closure, GaloisGroup, Subgroup};
use crate::numberfield::{roots_in_field, KPoly, NumberField, SubfieldEmbedding};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CmMethod {
    Enumeration,
    Group,
}

/// A CM subfield `L` of `M` with real subfield `L′`, and the tower
/// `k → L′ → L → M`.
#[derive(Clone, Debug)]
pub struct CmSubfield {
    pub field: NumberField,
    pub in_m: SubfieldEmbedding,
    pub real: NumberField,
    pub real_in_field: SubfieldEmbedding,
    pub k_in_real: SubfieldEmbedding,
}

#[derive(Clone, Debug)]
pub struct CmReport {
    pub contains: bool,
    pub cm: Option<CmSubfield>,
    pub method: CmMethod,
}

impl Serialize for CmReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CmReport", 4)?;
        st.serialize_field("contains", &self.contains)?;
        st.serialize_field("method", &self.method)?;
        st.serialize_field("cm_field", &self.cm.as_ref().map(|c| c.field.defining_polynomial()))?;
        st.serialize_field("real_subfield", &self.cm.as_ref().map(|c| c.real.defining_polynomial()))?;
        st.end()
    }
}

/// True when the two fields are isomorphic: equal degree and a root of one
/// defining polynomial in the other.
pub fn same_field(a: &NumberField, b: &NumberField) -> Result<bool> {
    if a.degree() != b.degree() {
        return Ok(false);
    }
    if a.degree() == 1 {
        return Ok(true);
    }
    Ok(!roots_in_field(&KPoly::from_rational(b, a.defining_polynomial()))?.is_empty())
}

fn totally_real(f: &NumberField) -> Result<bool> {
    Ok(embeddings::is_totally_real(f))
}

fn totally_imaginary(f: &NumberField) -> Result<bool> {
    Ok(embeddings::is_totally_imaginary(f))
}

/// The real subfield when `K` is CM, found among the index-2 overgroups of
/// `Gal(K̃/K)` in the Galois closure.
pub fn is_cm_field(k: &NumberField, cap: usize) -> Result<Option<NumberField>> {
    if k.degree() % 2 != 0 || !totally_imaginary(k)? {
        return Ok(None);
    }
    let (g, emb) = galois_closure(k, cap)?;
    let h = g.fixing(&emb)?;
    for s in g.subgroups_between(&h, &g.whole()) {
        if s.order() != 2 * h.order() {
            continue;
        }
        let (f, _) = g.fixed_field(&s);
        if totally_real(&f)? {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// Fixed field of `s`, viewed inside `M` (and `H ≤ s`).
fn subfield_of_m(g: &GaloisGroup, s: &Subgroup, m_in_n: &SubfieldEmbedding) -> Result<(NumberField, SubfieldEmbedding)> {
    let (f, f_in_n) = g.fixed_field(s);
    let img = m_in_n
        .preimage(f_in_n.image_of_generator())
        .ok_or_else(|| Error::Internal("fixed field of an overgroup of H lies outside M".into()))?;
    Ok((f.clone(), SubfieldEmbedding::new(&f, m_in_n.source(), img)?))
}

/// Assembles the tower `k → L′ → L → M` from subgroups `s ≤ s′` of the closure.
fn assemble(
    g: &GaloisGroup,
    s: &Subgroup,
    s_real: &Subgroup,
    m_in_n: &SubfieldEmbedding,
    k_in_n: &SubfieldEmbedding,
) -> Result<CmSubfield> {
    let (l, l_in_m) = subfield_of_m(g, s, m_in_n)?;
    let l_in_n = l_in_m.then(m_in_n);
    let (lr, lr_in_n) = g.fixed_field(s_real);
    let img = l_in_n
        .preimage(lr_in_n.image_of_generator())
        .ok_or_else(|| Error::Internal("real subfield outside L".into()))?;
    let real_in_field = SubfieldEmbedding::new(&lr, &l, img)?;
    let kimg = lr_in_n
        .preimage(k_in_n.image_of_generator())
        .ok_or_else(|| Error::Internal("k outside the real subfield".into()))?;
    let k_in_real = SubfieldEmbedding::new(k_in_n.source(), &lr, kimg)?;
    Ok(CmSubfield { field: l, in_m: l_in_m, real: lr, real_in_field, k_in_real })
}

struct Closure {
    g: GaloisGroup,
    m_in_n: SubfieldEmbedding,
    k_in_n: SubfieldEmbedding,
}

fn closure_of(k_in_m: &SubfieldEmbedding, cap: usize) -> Result<Closure> {
    let (g, m_in_n) = galois_closure(k_in_m.target(), cap)?;
    let k_in_n = k_in_m.then(&m_in_n);
    Ok(Closure { g, m_in_n, k_in_n })
}

/// Every CM subfield of `M` over `k`, as pairs of subgroups `(S, S′)` of the
/// closure group with `L = Fix(S)` and `L′ = Fix(S′)`; signatures by Sturm.
fn enumerate_cm(c: &Closure) -> Result<Vec<(Subgroup, Subgroup)>> {
    let g = &c.g;
    let h = g.fixing(&c.m_in_n)?;
    let gk = g.fixing(&c.k_in_n)?;
    let all = g.subgroups_between(&h, &g.whole());
    let mut real_cache: Vec<Option<bool>> = vec![None; all.len()];
    let mut out = Vec::new();
    for (i, s) in all.iter().enumerate() {
        if s.order() == g.order() {
            continue;
        }
        let (l, _) = g.fixed_field(s);
        if l.degree() % 2 != 0 || !totally_imaginary(&l)? {
            continue;
        }
        for (j, t) in all.iter().enumerate().skip(i + 1) {
            if t.order() != 2 * s.order() || !s.is_subgroup_of(t) {
                continue;
            }
            let real = match real_cache[j] {
                Some(r) => r,
                None => {
                    let r = totally_real(&g.fixed_field(t).0)?;
                    real_cache[j] = Some(r);
                    r
                }
            };
            if real {
                if t.is_subgroup_of(&gk) {
                    out.push((s.clone(), t.clone()));
                }
                break;
            }
        }
    }
    Ok(out)
}

/// All CM subfields of `M` over `k` with their real subfields.
pub fn cm_subfields_over(k_in_m: &SubfieldEmbedding, cap: usize) -> Result<Vec<CmSubfield>> {
    let c = closure_of(k_in_m, cap)?;
    enumerate_cm(&c)?
        .iter()
        .map(|(s, t)| assemble(&c.g, s, t, &c.m_in_n, &c.k_in_n))
        .collect()
}

/// Enumeration method: the largest CM subfield of `M` over `k`, if any.
pub fn contains_cm_subfield_over(k_in_m: &SubfieldEmbedding, cap: usize) -> Result<CmReport> {
    let c = closure_of(k_in_m, cap)?;
    let found = enumerate_cm(&c)?;
    let none = CmReport { contains: false, cm: None, method: CmMethod::Enumeration };
    let Some((s, t)) = found.iter().min_by_key(|(s, _)| s.order()) else {
        return Ok(none);
    };
    if !found.iter().all(|(o, _)| s.is_subgroup_of(o)) {
        return Err(Error::Internal("CM subfields without a common overfield".into()));
    }
    let cm = assemble(&c.g, s, t, &c.m_in_n, &c.k_in_n)?;
    Ok(CmReport { contains: true, cm: Some(cm), method: CmMethod::Enumeration })
}

/// The subgroups `NH` and `N′H` of the closure group for complex conjugation
/// `tau`, with `N = ⟨τ g⁻¹ τ g⟩` over all closure automorphisms `g`.
pub fn nh_subgroups(g: &GaloisGroup, tau: usize, h: &Subgroup) -> (Subgroup, Subgroup) {
    let gens = (0..g.order()).map(|x| g.mul(tau, g.mul(g.inverse(x), g.mul(tau, x))));
    let n = g.closure(gens);
    let nh = g.join(&n, h);
    let nph = g.join(&nh, &g.closure([tau]));
    (nh, nph)
}

fn via_group_at(k_in_m: &SubfieldEmbedding, cap: usize, embedding: Option<usize>) -> Result<CmReport> {
    let none = CmReport { contains: false, cm: None, method: CmMethod::Group };
    if !totally_real(k_in_m.source())? {
        return Ok(none);
    }
    let c = closure_of(k_in_m, cap)?;
    let g = &c.g;
    let tau = match embedding {
        None => g.complex_conjugation()?,
        Some(e) => g.complex_conjugation_at(e)?,
    };
    let h = g.fixing(&c.m_in_n)?;
    let (nh, nph) = nh_subgroups(g, tau, &h);
    if nh.contains(tau) {
        return Ok(none);
    }
    let cm = assemble(g, &nh, &nph, &c.m_in_n, &c.k_in_n)?;
    Ok(CmReport { contains: true, cm: Some(cm), method: CmMethod::Group })
}

/// Group method: `contains = τ ∉ NH`, with `L = Fix(NH)` and `L′ = Fix(N′H)`.
pub fn maximal_cm_subfield_via_group(k_in_m: &SubfieldEmbedding, cap: usize) -> Result<CmReport> {
    via_group_at(k_in_m, cap, None)
}

/// The group method with complex conjugation taken under embedding `e` of
/// the closure instead of the first one.
pub fn maximal_cm_subfield_via_group_at(k_in_m: &SubfieldEmbedding, cap: usize, e: usize) -> Result<CmReport> {
    via_group_at(k_in_m, cap, Some(e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Polynomial;
    use crate::galois::DEFAULT_DEGREE_CAP as CAP;

    fn field(cs: &[i64]) -> NumberField {
        NumberField::new(&Polynomial::from_ints(cs)).unwrap()
    }

    fn over_q(m: &NumberField) -> SubfieldEmbedding {
        SubfieldEmbedding::of_rationals(m)
    }

    #[test]
    fn cm_predicate() {
        let r = is_cm_field(&field(&[1, 0, 1]), CAP).unwrap().unwrap();
        assert!(r.is_rationals());
        let r = is_cm_field(&field(&[1, 1, 1, 1, 1]), CAP).unwrap().unwrap();
        assert_eq!(r.degree(), 2);
        assert!(same_field(&r, &field(&[-5, 0, 1])).unwrap());
        assert!(is_cm_field(&field(&[-2, 0, 1]), CAP).unwrap().is_none());
        assert!(is_cm_field(&field(&[-2, 0, 0, 1]), CAP).unwrap().is_none());
    }

    #[test]
    fn both_methods_on_small_fields() {
        for cs in [&[1i64, 0, 1][..], &[1, 1, 1, 1, 1], &[-2, 0, 1], &[-2, 0, 0, 1], &[1, 0, 0, 0, 1]] {
            let m = field(cs);
            let a = contains_cm_subfield_over(&over_q(&m), CAP).unwrap();
            let b = maximal_cm_subfield_via_group(&over_q(&m), CAP).unwrap();
            assert_eq!(a.contains, b.contains, "{cs:?}");
            if let (Some(x), Some(y)) = (&a.cm, &b.cm) {
                assert!(same_field(&x.field, &y.field).unwrap());
                assert!(same_field(&x.real, &y.real).unwrap());
            }
        }
    }

    #[test]
    fn k_not_totally_real() {
        let m = field(&[1, 0, 1]);
        let k = SubfieldEmbedding::identity(&m);
        assert!(!contains_cm_subfield_over(&k, CAP).unwrap().contains);
        assert!(!maximal_cm_subfield_via_group(&k, CAP).unwrap().contains);
    }

    #[test]
    fn zeta8_over_sqrt2() {
        let m = field(&[1, 0, 0, 0, 1]);
        let z = m.generator();
        let s2 = &z + &z.pow_u(7);
        let k = NumberField::new(&Polynomial::from_ints(&[-2, 0, 1])).unwrap();
        let s2 = if (&s2 * &s2) == m.from_int(2) { s2 } else { panic!("ζ+ζ⁻¹ squares to 2") };
        let k_in_m = SubfieldEmbedding::new(&k, &m, s2).unwrap();
        let r = maximal_cm_subfield_via_group(&k_in_m, CAP).unwrap();
        assert!(r.contains);
        let cm = r.cm.unwrap();
        assert_eq!(cm.field.degree(), 4);
        assert_eq!(cm.real.degree(), 2);
        let e = contains_cm_subfield_over(&k_in_m, CAP).unwrap();
        assert!(e.contains);
    }
}
