//! Sparse multivariate polynomials, used for homogeneous forms.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::exact::rational::{self, Rational};

/// Minimal ring interface for form coefficients.
pub trait Coefficient: Clone + PartialEq + fmt::Debug {
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
}

impl Coefficient for Rational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
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
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
}

pub type Monomial = Vec<u32>;

#[derive(Clone, Debug, PartialEq)]
pub struct Form<C> {
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> Form<C> {
    pub fn zero(nvars: usize) -> Self {
        Form { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut f = Form::zero(nvars);
        f.add_term(vec![0; nvars], c);
        f
    }

    /// `Σ cᵢ xᵢ`.
    pub fn linear(coeffs: &[C]) -> Self {
        let n = coeffs.len();
        let mut f = Form::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut m = vec![0; n];
            m[i] = 1;
            f.add_term(m, c.clone());
        }
        f
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut f = Form::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.len(), nvars);
            f.add_term(m, c);
        }
        f
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, C> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &[u32]) -> Option<&C> {
        self.terms.get(m)
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                let s = e.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *e = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Total degree when homogeneous; `None` for the zero form or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.iter().sum::<u32>());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        Form {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Form::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let m = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                r.add_term(m, ca.mul(cb));
            }
        }
        r
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut r = Form::zero(self.nvars);
        for (m, x) in &self.terms {
            r.add_term(m.clone(), x.mul(c));
        }
        r
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let one = match self.terms.values().next() {
            Some(c) => c.one_like(),
            None => return if e == 0 { panic!("0^0 form") } else { self.clone() },
        };
        let mut acc = Form::constant(self.nvars, one);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Evaluates at a point; the point supplies the ring's zero and one.
    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.nvars);
        let zero = point[0].zero_like();
        let mut cache: Vec<Vec<C>> = point.iter().map(|p| vec![p.one_like()]).collect();
        let mut acc = zero;
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                let pw = &mut cache[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap().mul(&point[i]);
                    pw.push(next);
                }
                t = t.mul(&pw[e as usize]);
            }
            acc = acc.add(&t);
        }
        acc
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Form<D> {
        let mut r = Form::zero(self.nvars);
        for (m, c) in &self.terms {
            r.add_term(m.clone(), f(c));
        }
        r
    }

    pub fn try_map<D: Coefficient, E>(&self, f: impl Fn(&C) -> Result<D, E>) -> Result<Form<D>, E> {
        let mut r = Form::zero(self.nvars);
        for (m, c) in &self.terms {
            r.add_term(m.clone(), f(c)?);
        }
        Ok(r)
    }

    /// Substitutes linear forms for the variables: `F(Σ_j a_{0j} y_j, …)`.
    pub fn substitute_linear(&self, rows: &[Vec<C>]) -> Self {
        assert_eq!(rows.len(), self.nvars);
        let m = rows.first().map_or(0, |r| r.len());
        let lin: Vec<Form<C>> = rows.iter().map(|r| Form::linear(r)).collect();
        let mut out = Form::zero(m);
        for (mono, c) in &self.terms {
            let mut t = Form::constant(m, c.clone());
            for (i, &e) in mono.iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&lin[i]);
                }
            }
            out = out.add(&t);
        }
        out
    }
}

/// Determinant of a square matrix of forms by Laplace expansion over
/// column subsets (exact, no division).
pub fn determinant<C: Coefficient>(m: &[Vec<Form<C>>], one: C) -> Form<C> {
    let n = m.len();
    let nvars = m.first().and_then(|r| r.first()).map_or(0, |f| f.nvars());
    let mut dp: Vec<Option<Form<C>>> = vec![None; 1 << n];
    dp[0] = Some(Form::constant(nvars, one));
    for mask in 0usize..(1 << n) {
        let Some(cur) = dp[mask].take() else { continue };
        if cur.is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == n {
            dp[mask] = Some(cur);
            continue;
        }
        for c in 0..n {
            if mask & (1 << c) != 0 || m[row][c].is_zero() {
                continue;
            }
            let above = (mask >> (c + 1)).count_ones();
            let mut t = m[row][c].mul(&cur);
            if above % 2 == 1 {
                t = t.neg();
            }
            let slot = &mut dp[mask | (1 << c)];
            *slot = Some(match slot.take() {
                Some(s) => s.add(&t),
                None => t,
            });
        }
    }
    dp[(1 << n) - 1].take().unwrap_or_else(|| Form::zero(nvars))
}

impl Form<Rational> {
    /// Multiplies through by the denominator lcm and divides by the content,
    /// so the leading (greatest) monomial has a positive coefficient.
    pub fn primitive(&self) -> Self {
        let v: Vec<Rational> = self.terms.values().cloned().collect();
        let mut p = rational::primitive_integer_vector(&v);
        if let Some(last) = p.last() {
            if last < &num_bigint::BigInt::zero() {
                p = p.into_iter().map(|x| -x).collect();
            }
        }
        Form {
            nvars: self.nvars,
            terms: self
                .terms
                .keys()
                .cloned()
                .zip(p.into_iter().map(Rational::from_integer))
                .collect(),
        }
    }
}

impl fmt::Display for Form<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c < &Rational::zero();
            let a = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let constant = m.iter().all(|&e| e == 0);
            if !a.is_one() || constant {
                write!(f, "{a}")?;
            }
            let mut sep = !a.is_one() && !constant;
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if sep {
                    write!(f, "*")?;
                }
                sep = true;
                write!(f, "x{i}")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermOut<'a> {
    exponents: &'a [u32],
    coeff: String,
}

impl Serialize for Form<Rational> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermOut> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| TermOut { exponents: m, coeff: rational::to_string(c) })
            .collect();
        let mut st = s.serialize_struct("Form", 3)?;
        st.serialize_field("nvars", &self.nvars)?;
        st.serialize_field("text", &self.to_string())?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn lin(cs: &[i64]) -> Form<Rational> {
        Form::linear(&cs.iter().map(|&c| rat(c)).collect::<Vec<_>>())
    }

    #[test]
    fn product_of_conjugate_forms() {
        // (x0 + x1)(x0 - x1) = x0^2 - x1^2
        let f = lin(&[1, 1]).mul(&lin(&[1, -1]));
        assert_eq!(f.to_string(), "x0^2 - x1^2");
        assert_eq!(f.homogeneous_degree(), Some(2));
        assert_eq!(f.eval(&[rat(3), rat(2)]), rat(5));
    }

    #[test]
    fn determinant_of_linear_matrix() {
        // [[x0, 2 x1], [x1, x0]] -> x0^2 - 2 x1^2
        let m = vec![vec![lin(&[1, 0]), lin(&[0, 2])], vec![lin(&[0, 1]), lin(&[1, 0])]];
        assert_eq!(determinant(&m, rat(1)).to_string(), "x0^2 - 2*x1^2");
    }

    #[test]
    fn substitution_composes() {
        let f = lin(&[1, 0]).mul(&lin(&[0, 1]));
        let g = f.substitute_linear(&[vec![rat(1), rat(1)], vec![rat(1), rat(-1)]]);
        assert_eq!(g.to_string(), "x0^2 - x1^2");
    }
}
