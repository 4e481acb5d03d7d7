//! Absolute number fields `Q[x]/(f)` and their elements.
//!
//! Internally a field with monic `f` is stored through the integral monic
//! model `g(y) = dⁿ f(y/d)` whose root is `η = dθ`; elements are integer
//! vectors in the `η`-power basis over a common denominator. Public
//! coordinates are always in the `θ`-power basis.

mod embedding;
mod kpoly;
mod modgcd;
mod normform;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::rational::{self, Rational};
use crate::exact::{factor_over_q, Polynomial};
use crate::form::Coefficient;
use crate::linalg;

pub use embedding::{primitive_element, subfield_generated_by, PrimitiveElement, SubfieldEmbedding};
pub use kpoly::{factor_over_field, kpoly_gcd, roots_in_field, KPoly};
pub use normform::norm_form;

#[derive(Clone)]
pub struct NumberField {
    inner: Arc<Inner>,
}

struct Inner {
    poly: Polynomial,
    scale: BigInt,
    scale_pows: Vec<BigInt>,
    model: Vec<BigInt>,
    provenance: Option<String>,
}

impl NumberField {
    /// `Q[x]/(p)`; checks that `p` is monic and irreducible.
    pub fn new(p: &Polynomial) -> Result<NumberField> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if p.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        if !p.is_monic() {
            return Err(Error::NotMonic);
        }
        let fs = factor_over_q(p)?;
        if fs.len() > 1 || fs[0].1 > 1 {
            return Err(Error::Reducible { factor: fs[0].0.to_string() });
        }
        Ok(Self::from_irreducible(p.clone()))
    }

    /// The rationals, presented by `x`.
    pub fn rationals() -> NumberField {
        Self::from_irreducible(Polynomial::x())
    }

    /// Trusts that `p` is monic irreducible. Degree-one inputs are
    /// re-presented by `x`.
    pub(crate) fn from_irreducible(p: Polynomial) -> NumberField {
        let p = if p.deg() == 1 { Polynomial::x() } else { p };
        debug_assert!(p.is_monic());
        let n = p.deg();
        let scale = rational::denominator_lcm(p.coeffs());
        let mut scale_pows = vec![BigInt::one()];
        for i in 1..=n {
            let next = &scale_pows[i - 1] * &scale;
            scale_pows.push(next);
        }
        let model = (0..=n)
            .map(|i| (p.coeff(i) * Rational::from_integer(scale_pows[n - i].clone())).to_integer())
            .collect();
        scale_pows.truncate(n);
        NumberField {
            inner: Arc::new(Inner { poly: p, scale, scale_pows, model, provenance: None }),
        }
    }

    pub fn with_provenance(&self, text: impl Into<String>) -> NumberField {
        let i = &self.inner;
        NumberField {
            inner: Arc::new(Inner {
                poly: i.poly.clone(),
                scale: i.scale.clone(),
                scale_pows: i.scale_pows.clone(),
                model: i.model.clone(),
                provenance: Some(text.into()),
            }),
        }
    }

    pub fn provenance(&self) -> Option<&str> {
        self.inner.provenance.as_deref()
    }

    pub fn defining_polynomial(&self) -> &Polynomial {
        &self.inner.poly
    }

    /// Coefficients of the monic integral model `g`, constant term first.
    pub(crate) fn integral_model(&self) -> &[BigInt] {
        &self.inner.model
    }

    pub fn degree(&self) -> usize {
        self.inner.poly.deg()
    }

    pub fn is_rationals(&self) -> bool {
        self.degree() == 1
    }

    pub fn same(&self, other: &NumberField) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.poly == other.inner.poly
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { field: self.clone(), num: vec![BigInt::zero(); self.degree()], den: BigInt::one() }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(&Rational::one())
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        self.from_rational(&rational::rat(n))
    }

    pub fn from_rational(&self, q: &Rational) -> FieldElement {
        let mut num = vec![BigInt::zero(); self.degree()];
        num[0] = q.numer().clone();
        FieldElement { field: self.clone(), num, den: q.denom().clone() }
    }

    /// The class of `x`; zero in the degree-one presentation.
    pub fn generator(&self) -> FieldElement {
        if self.degree() == 1 {
            return self.zero();
        }
        let mut c = vec![Rational::zero(); self.degree()];
        c[1] = Rational::one();
        self.element(&c).unwrap()
    }

    /// Element from `θ`-power-basis coordinates.
    pub fn element(&self, coords: &[Rational]) -> Result<FieldElement> {
        let n = self.degree();
        if coords.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "expected {n} coordinates, got {}",
                coords.len()
            )));
        }
        // θ^i = η^i / d^i, over the common denominator d^{n-1}
        let sp = &self.inner.scale_pows;
        let l = rational::denominator_lcm(coords);
        let num = coords
            .iter()
            .enumerate()
            .map(|(i, c)| (c * Rational::from_integer(&l * &sp[n - 1 - i])).to_integer())
            .collect();
        Ok(FieldElement::normalized(self.clone(), num, l * &sp[n - 1]))
    }

    pub fn element_from_ints(&self, coords: &[i64]) -> Result<FieldElement> {
        self.element(&coords.iter().map(|&c| rational::rat(c)).collect::<Vec<_>>())
    }

    /// `p(θ)` for a polynomial over Q.
    pub fn eval_poly(&self, p: &Polynomial) -> FieldElement {
        let r = p.rem(&self.inner.poly);
        let mut c = r.coeffs().to_vec();
        c.resize(self.degree(), Rational::zero());
        self.element(&c).unwrap()
    }

    /// Element from rational coordinates in the internal `η` basis.
    fn from_eta(&self, coeffs: &[Rational]) -> FieldElement {
        let l = rational::denominator_lcm(coeffs);
        let mut num: Vec<BigInt> = coeffs.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
        num.resize(self.degree(), BigInt::zero());
        FieldElement::normalized(self.clone(), num, l)
    }

    /// Reduces an integer `η`-polynomial modulo the monic model.
    fn reduce(&self, mut prod: Vec<BigInt>) -> Vec<BigInt> {
        let n = self.degree();
        let g = &self.inner.model;
        for k in (n..prod.len()).rev() {
            let c = std::mem::take(&mut prod[k]);
            if c.is_zero() {
                continue;
            }
            for i in 0..n {
                if !g[i].is_zero() {
                    prod[k - n + i] -= &c * &g[i];
                }
            }
        }
        prod.truncate(n);
        prod.resize(n, BigInt::zero());
        prod
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for NumberField {}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField({})", self.inner.poly)
    }
}

impl Serialize for NumberField {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("NumberField", 2)?;
        st.serialize_field("min_poly", &self.inner.poly)?;
        st.serialize_field("degree", &self.degree())?;
        st.end()
    }
}

#[derive(Clone)]
pub struct FieldElement {
    field: NumberField,
    num: Vec<BigInt>,
    den: BigInt,
}

impl FieldElement {
    fn normalized(field: NumberField, mut num: Vec<BigInt>, mut den: BigInt) -> FieldElement {
        let mut g = num.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            return FieldElement { field, num, den: BigInt::one() };
        }
        g = g.gcd(&den);
        if den.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for x in num.iter_mut() {
                *x = &*x / &g;
            }
            den /= &g;
        }
        FieldElement { field, num, den }
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    /// Coordinates in the `θ`-power basis.
    pub fn coords(&self) -> Vec<Rational> {
        let sp = &self.field.inner.scale_pows;
        self.num
            .iter()
            .zip(sp)
            .map(|(a, s)| Rational::new(a * s, self.den.clone()))
            .collect()
    }

    pub fn coord_strings(&self) -> Vec<String> {
        self.coords().iter().map(rational::to_string).collect()
    }

    /// The representing polynomial in `θ` of degree below `[K:Q]`.
    pub fn to_poly(&self) -> Polynomial {
        Polynomial::new(self.coords())
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.is_rational() && self.num[0] == self.den
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(|x| x.is_zero())
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| Rational::new(self.num[0].clone(), self.den.clone()))
    }

    pub fn scale(&self, q: &Rational) -> FieldElement {
        let num = self.num.iter().map(|x| x * q.numer()).collect();
        FieldElement::normalized(self.field.clone(), num, &self.den * q.denom())
    }

    pub fn inverse(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.field.degree();
        // solve (den·a)·x = 1 in the η basis; then a⁻¹ = den·x
        let m: Vec<Vec<Rational>> = self
            .integer_matrix()
            .into_iter()
            .map(|r| r.into_iter().map(Rational::from_integer).collect())
            .collect();
        let mut e0 = vec![Rational::zero(); n];
        e0[0] = Rational::one();
        let x = linalg::solve(&m, &e0, n).ok_or(Error::DivisionByZero)?;
        let d = Rational::from_integer(self.den.clone());
        let c: Vec<Rational> = x.iter().map(|v| v * &d).collect();
        Ok(self.field.from_eta(&c))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, e: i64) -> Result<FieldElement> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        Ok(base.pow_u(e.unsigned_abs()))
    }

    pub fn pow_u(&self, mut e: u64) -> FieldElement {
        let mut acc = self.field.one();
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        acc
    }

    /// Multiplication matrix in the `η` basis, scaled by the denominator.
    fn integer_matrix(&self) -> Vec<Vec<BigInt>> {
        let n = self.field.degree();
        let mut cols = Vec::with_capacity(n);
        let mut v = self.num.clone();
        for j in 0..n {
            if j > 0 {
                let mut shifted = vec![BigInt::zero()];
                shifted.extend(v.iter().cloned());
                v = self.field.reduce(shifted);
            }
            cols.push(v.clone());
        }
        (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect()
    }

    /// Absolute norm `N_{K/Q}`.
    pub fn norm(&self) -> Rational {
        let n = self.field.degree();
        let det = linalg::determinant(&self.integer_matrix());
        Rational::new(det, self.den.pow(n as u32))
    }

    /// Absolute trace `Tr_{K/Q}`.
    pub fn trace(&self) -> Rational {
        let m = self.integer_matrix();
        let t: BigInt = (0..m.len()).map(|i| m[i][i].clone()).sum();
        Rational::new(t, self.den.clone())
    }

    /// Monic minimal polynomial over Q, found as the first linear relation
    /// among powers; its degree divides `[K:Q]`.
    pub fn minimal_polynomial(&self) -> Polynomial {
        let n = self.field.degree();
        let mut powers: Vec<Vec<Rational>> = vec![self.field.one().eta_coords()];
        let mut cur = self.field.one();
        for m in 1..=n {
            cur = &cur * self;
            powers.push(cur.eta_coords());
            if n % m != 0 {
                continue;
            }
            let rows: Vec<Vec<Rational>> =
                (0..n).map(|i| (0..m).map(|j| powers[j][i].clone()).collect()).collect();
            let rhs: Vec<Rational> = (0..n).map(|i| powers[m][i].clone()).collect();
            if let Some(c) = linalg::solve(&rows, &rhs, m) {
                let mut coeffs: Vec<Rational> = c.into_iter().map(|x| -x).collect();
                coeffs.push(Rational::one());
                return Polynomial::new(coeffs);
            }
        }
        unreachable!("every element satisfies a relation of degree at most [K:Q]")
    }

    fn eta_coords(&self) -> Vec<Rational> {
        self.num.iter().map(|a| Rational::new(a.clone(), self.den.clone())).collect()
    }

    /// Total order on coordinates, for deterministic sorting.
    pub fn canonical_cmp(&self, other: &FieldElement) -> Ordering {
        self.coords().cmp(&other.coords())
    }

    fn check(&self, o: &FieldElement) {
        assert!(self.field.same(&o.field), "field mismatch: {:?} vs {:?}", self.field, o.field);
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, o: &Self) -> bool {
        self.field.same(&o.field) && self.den == o.den && self.num == o.num
    }
}

impl Eq for FieldElement {}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.num.hash(h);
        self.den.hash(h);
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.to_poly().to_string().replace('x', "a");
        write!(f, "{s}")
    }
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("FieldElement", 2)?;
        st.serialize_field("field", &self.field.inner.poly)?;
        st.serialize_field("coords", &self.coord_strings())?;
        st.end()
    }
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, o: &FieldElement) -> FieldElement {
        self.check(o);
        if self.den == o.den {
            let num = self.num.iter().zip(&o.num).map(|(a, b)| a + b).collect();
            return FieldElement::normalized(self.field.clone(), num, self.den.clone());
        }
        let num = self.num.iter().zip(&o.num).map(|(a, b)| a * &o.den + b * &self.den).collect();
        FieldElement::normalized(self.field.clone(), num, &self.den * &o.den)
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, o: &FieldElement) -> FieldElement {
        self + &(-o)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { field: self.field.clone(), num: self.num.iter().map(|x| -x).collect(), den: self.den.clone() }
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, o: &FieldElement) -> FieldElement {
        self.check(o);
        let n = self.num.len();
        let mut prod = vec![BigInt::zero(); 2 * n - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let num = self.field.reduce(prod);
        FieldElement::normalized(self.field.clone(), num, &self.den * &o.den)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, o: FieldElement) -> FieldElement {
                $tr::$m(&self, &o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Coefficient for FieldElement {
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn zero_like(&self) -> Self {
        self.field.zero()
    }
    fn one_like(&self) -> Self {
        self.field.one()
    }
}

pub fn make_field(p: &Polynomial) -> Result<NumberField> {
    NumberField::new(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, ratio};

    fn field(cs: &[i64]) -> NumberField {
        NumberField::new(&Polynomial::from_ints(cs)).unwrap()
    }

    #[test]
    fn make_field_examples() {
        assert_eq!(field(&[1, 0, 1]).degree(), 2);
        assert_eq!(field(&[1, 1, 1, 1, 1]).degree(), 4);
        assert!(matches!(
            NumberField::new(&Polynomial::from_ints(&[-1, 0, 1])),
            Err(Error::Reducible { .. })
        ));
        assert!(matches!(
            NumberField::new(&Polynomial::from_ints(&[1, 0, 2])),
            Err(Error::NotMonic)
        ));
    }

    #[test]
    fn arithmetic_in_gaussian_field() {
        let k = field(&[1, 0, 1]);
        let i = k.generator();
        assert_eq!(&i * &i, k.from_int(-1));
        let z = k.element_from_ints(&[3, 4]).unwrap();
        let zi = z.inverse().unwrap();
        assert_eq!(&z * &zi, k.one());
        assert_eq!(zi.coords(), vec![ratio(3, 25), ratio(-4, 25)]);
        assert_eq!(z.norm(), rat(25));
        assert_eq!(z.trace(), rat(6));
    }

    #[test]
    fn rational_model_round_trip() {
        // θ² = 1/2: internal model has a nontrivial scale
        let k = NumberField::new(&Polynomial::new(vec![ratio(-1, 2), rat(0), rat(1)])).unwrap();
        let t = k.generator();
        assert_eq!(t.coords(), vec![rat(0), rat(1)]);
        assert_eq!(&t * &t, k.from_rational(&ratio(1, 2)));
        assert_eq!(t.minimal_polynomial(), k.defining_polynomial().clone());
        assert_eq!(t.norm(), ratio(-1, 2));
    }

    #[test]
    fn minimal_polynomials() {
        let k = field(&[-2, 0, 1]);
        assert_eq!(k.generator().minimal_polynomial(), Polynomial::from_ints(&[-2, 0, 1]));
        assert_eq!(k.zero().minimal_polynomial(), Polynomial::x());
        let z5 = field(&[1, 1, 1, 1, 1]);
        let z = z5.generator();
        let e = &z + &z.pow_u(4);
        assert_eq!(e.minimal_polynomial(), Polynomial::from_ints(&[-1, 1, 1]));
    }

    #[test]
    fn negative_powers() {
        let k = field(&[-2, 0, 1]);
        let u = k.element_from_ints(&[1, 1]).unwrap();
        let v = u.pow(-3).unwrap();
        assert_eq!(&v * &u.pow_u(3), k.one());
    }
}
