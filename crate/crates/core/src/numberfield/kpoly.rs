use std::cmp::Ordering;
use std::fmt;

use num_traits::One;

use super::{FieldElement, NumberField};
use crate::error::{Error, Result};
use crate::exact::{factor_over_q, certified_squarefree, factor_squarefree, Polynomial, Rational};

/// Polynomial with coefficients in a number field, ascending, trimmed.
#[derive(Clone, PartialEq)]
pub struct KPoly {
    field: NumberField,
    coeffs: Vec<FieldElement>,
}

impl KPoly {
    pub fn new(field: &NumberField, mut coeffs: Vec<FieldElement>) -> KPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        KPoly { field: field.clone(), coeffs }
    }

    pub fn from_rational(field: &NumberField, p: &Polynomial) -> KPoly {
        KPoly::new(field, p.coeffs().iter().map(|c| field.from_rational(c)).collect())
    }

    pub fn zero(field: &NumberField) -> KPoly {
        KPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &NumberField) -> KPoly {
        KPoly::new(field, vec![field.one()])
    }

    /// `x - a`.
    pub fn linear(a: &FieldElement) -> KPoly {
        let f = a.field();
        KPoly::new(f, vec![-a, f.one()])
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> &FieldElement {
        self.coeffs.last().expect("zero polynomial")
    }

    /// Coefficients all rational: the polynomial over Q.
    pub fn as_rational(&self) -> Option<Polynomial> {
        let cs: Option<Vec<Rational>> = self.coeffs.iter().map(|c| c.as_rational()).collect();
        cs.map(Polynomial::new)
    }

    pub fn monic(&self) -> KPoly {
        if self.is_zero() || self.leading().is_one() {
            return self.clone();
        }
        let inv = self.leading().inverse().expect("nonzero leading coefficient");
        KPoly::new(&self.field, self.coeffs.iter().map(|c| c * &inv).collect())
    }

    pub fn add(&self, o: &KPoly) -> KPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = self.field.zero();
        KPoly::new(
            &self.field,
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn neg(&self) -> KPoly {
        KPoly { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, o: &KPoly) -> KPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &KPoly) -> KPoly {
        if self.is_zero() || o.is_zero() {
            return KPoly::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        KPoly::new(&self.field, out)
    }

    pub fn scale(&self, c: &FieldElement) -> KPoly {
        KPoly::new(&self.field, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn div_rem(&self, d: &KPoly) -> (KPoly, KPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.coeffs.clone();
        let dn = d.degree();
        if r.len() <= dn {
            return (KPoly::zero(&self.field), self.clone());
        }
        let inv = d.leading().inverse().unwrap();
        let mut q = vec![self.field.zero(); r.len() - dn];
        for k in (0..q.len()).rev() {
            let c = &r[k + dn] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&c * dc);
            }
            q[k] = c;
        }
        r.truncate(dn);
        (KPoly::new(&self.field, q), KPoly::new(&self.field, r))
    }

    pub fn rem(&self, d: &KPoly) -> KPoly {
        self.div_rem(d).1
    }

    pub fn div_exact(&self, d: &KPoly) -> Option<KPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn derivative(&self) -> KPoly {
        KPoly::new(
            &self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&Rational::from_integer((i as i64).into())))
                .collect(),
        )
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    fn eval_rational(&self, x: &Rational) -> FieldElement {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale(x) + c;
        }
        acc
    }

    /// `p(x + c)`.
    pub fn shift(&self, c: &FieldElement) -> KPoly {
        let lin = KPoly::new(&self.field, vec![c.clone(), self.field.one()]);
        let mut acc = KPoly::zero(&self.field);
        for a in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&KPoly::new(&self.field, vec![a.clone()]));
        }
        acc
    }

    /// Applies a field map to every coefficient.
    pub fn map(&self, target: &NumberField, f: impl Fn(&FieldElement) -> FieldElement) -> KPoly {
        KPoly::new(target, self.coeffs.iter().map(f).collect())
    }

    /// Absolute norm `∏_σ p^σ(x)` over Q, of degree `[K:Q]·deg p`, by
    /// interpolation at integer nodes.
    pub fn norm(&self) -> Polynomial {
        let d = self.field.degree() * self.degree();
        let xs: Vec<Rational> = (0..=d as i64).map(|i| Rational::from_integer(i.into())).collect();
        let ys: Vec<Rational> = xs.iter().map(|x| self.eval_rational(x).norm()).collect();
        newton_interpolate(&xs, &ys)
    }

    fn canonical_cmp(&self, o: &KPoly) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| {
            let a: Vec<Vec<Rational>> = self.coeffs.iter().map(|c| c.coords()).collect();
            let b: Vec<Vec<Rational>> = o.coeffs.iter().map(|c| c.coords()).collect();
            a.cmp(&b)
        })
    }
}

impl fmt::Debug for KPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c})*x^{i}"))
            .collect();
        write!(f, "{}", if parts.is_empty() { "0".into() } else { parts.join(" + ") })
    }
}

/// Monic gcd over K.
pub fn kpoly_gcd(a: &KPoly, b: &KPoly) -> KPoly {
    if !a.field.is_rationals() && !a.is_zero() && !b.is_zero() {
        return super::modgcd::gcd(a, b);
    }
    let (mut a, mut b) = (a.monic(), b.monic());
    while !b.is_zero() {
        let r = a.rem(&b).monic();
        a = b;
        b = r;
    }
    a
}

fn newton_interpolate(xs: &[Rational], ys: &[Rational]) -> Polynomial {
    let n = xs.len();
    let mut c = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            c[i] = (&c[i] - &c[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut p = Polynomial::constant(c[n - 1].clone());
    for i in (0..n - 1).rev() {
        let lin = Polynomial::new(vec![-xs[i].clone(), Rational::one()]);
        p = &(&p * &lin) + &Polynomial::constant(c[i].clone());
    }
    p
}

/// Yun's squarefree decomposition over K for a monic input.
fn squarefree_decomposition(f: &KPoly) -> Vec<(KPoly, u32)> {
    let mut out = Vec::new();
    let df = f.derivative();
    let a = kpoly_gcd(f, &df);
    let mut b = f.div_exact(&a).unwrap();
    let mut c = df.div_exact(&a).unwrap();
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    loop {
        let g = kpoly_gcd(&b, &d);
        if g.degree() > 0 {
            out.push((g.clone(), i));
        }
        b = b.div_exact(&g).unwrap();
        if b.degree() == 0 {
            break;
        }
        c = d.div_exact(&g).unwrap();
        d = c.sub(&b.derivative());
        i += 1;
    }
    out
}

/// Irreducible factors of a monic squarefree polynomial over K.
fn trager(h: &KPoly) -> Vec<KPoly> {
    let k = &h.field;
    if h.degree() <= 1 {
        return vec![h.clone()];
    }
    if k.is_rationals() {
        let p = h.as_rational().expect("coefficients in Q");
        return factor_squarefree(&p).iter().map(|f| KPoly::from_rational(k, f)).collect();
    }
    let theta = k.generator();
    // a rational h has norm h^n at s = 0
    let first = if h.as_rational().is_some() { 1 } else { 0 };
    for s in first.. {
        let st = theta.scale(&Rational::from_integer(s.into()));
        // hs(x) = h(x - sθ)
        let hs = h.shift(&-&st);
        let n = hs.norm();
        if !certified_squarefree(&n.to_primitive_integer()) {
            continue;
        }
        let qs = factor_squarefree(&n);
        if qs.len() == 1 {
            return vec![h.clone()];
        }
        return qs
            .iter()
            .map(|q| kpoly_gcd(&hs, &KPoly::from_rational(k, q)).shift(&st))
            .collect();
    }
    unreachable!()
}

/// Complete factorization over K: monic irreducible factors with
/// multiplicities, ordered by degree and then by coefficient coordinates.
/// The input equals its leading coefficient times the product.
pub fn factor_over_field(p: &KPoly) -> Result<Vec<(KPoly, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let k = &p.field;
    let h = p.monic();
    let mut out = Vec::new();
    if let Some(q) = h.as_rational() {
        for (f, m) in factor_over_q(&q)? {
            for g in trager(&KPoly::from_rational(k, &f)) {
                out.push((g, m));
            }
        }
    } else {
        for (part, m) in squarefree_decomposition(&h) {
            for g in trager(&part) {
                out.push((g, m));
            }
        }
    }
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0).then(a.1.cmp(&b.1)));
    Ok(out)
}

/// Roots of a polynomial over K lying in K, sorted by coordinates.
pub fn roots_in_field(p: &KPoly) -> Result<Vec<FieldElement>> {
    Ok(factor_over_field(p)?
        .into_iter()
        .filter(|(f, _)| f.degree() == 1)
        .map(|(f, _)| -&f.coeffs[0])
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(cs: &[i64]) -> NumberField {
        NumberField::new(&Polynomial::from_ints(cs)).unwrap()
    }

    fn product(fs: &[(KPoly, u32)], k: &NumberField) -> KPoly {
        let mut acc = KPoly::one(k);
        for (f, m) in fs {
            for _ in 0..*m {
                acc = acc.mul(f);
            }
        }
        acc
    }

    #[test]
    fn gaussian_split() {
        let k = field(&[1, 0, 1]);
        let p = KPoly::from_rational(&k, &Polynomial::from_ints(&[1, 0, 1]));
        let fs = factor_over_field(&p).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|(f, m)| f.degree() == 1 && *m == 1));
        assert_eq!(product(&fs, &k), p);
        let roots = roots_in_field(&p).unwrap();
        let i = k.generator();
        assert_eq!(roots, vec![i.clone(), -&i]);
    }

    #[test]
    fn cyclotomic_five_splits_completely() {
        let k = field(&[1, 1, 1, 1, 1]);
        let p = KPoly::from_rational(&k, k.defining_polynomial());
        let fs = factor_over_field(&p).unwrap();
        assert_eq!(fs.len(), 4);
        assert_eq!(product(&fs, &k), p);
        let z = k.generator();
        for e in 1..=4 {
            assert!(p.eval(&z.pow_u(e)).is_zero());
        }
    }

    #[test]
    fn cube_root_partial_split() {
        let k = field(&[-2, 0, 0, 1]);
        let p = KPoly::from_rational(&k, &Polynomial::from_ints(&[-2, 0, 0, 1]));
        let fs = factor_over_field(&p).unwrap();
        let degs: Vec<usize> = fs.iter().map(|(f, _)| f.degree()).collect();
        assert_eq!(degs, vec![1, 2]);
        assert_eq!(product(&fs, &k), p);
    }

    #[test]
    fn non_rational_coefficients_with_multiplicity() {
        let k = field(&[1, 0, 1]);
        let i = k.generator();
        // (x - i)^2 (x + 1)
        let a = KPoly::linear(&i);
        let b = KPoly::linear(&k.from_int(-1));
        let p = a.mul(&a).mul(&b);
        let fs = factor_over_field(&p).unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(product(&fs, &k), p);
        assert!(fs.contains(&(a, 2)));
    }

    #[test]
    fn norm_of_linear_factor() {
        let k = field(&[-2, 0, 1]);
        let p = KPoly::linear(&k.generator());
        assert_eq!(p.norm(), Polynomial::from_ints(&[-2, 0, 1]));
    }
}
