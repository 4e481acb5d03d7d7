use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{FieldElement, NumberField};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::linalg;

/// An inclusion `source → target` given by the image of the source generator.
#[derive(Clone, Debug)]
pub struct SubfieldEmbedding {
    source: NumberField,
    target: NumberField,
    image: FieldElement,
    powers: Arc<Vec<FieldElement>>,
    // powers as integer η-vectors over one common denominator
    matrix: Arc<(Vec<Vec<BigInt>>, BigInt)>,
}

impl SubfieldEmbedding {
    pub fn new(source: &NumberField, target: &NumberField, image: FieldElement) -> Result<Self> {
        if !image.field().same(target) {
            return Err(Error::FieldMismatch);
        }
        let n = source.degree();
        let mut powers = Vec::with_capacity(n);
        let mut cur = target.one();
        for _ in 0..n {
            powers.push(cur.clone());
            cur = &cur * &image;
        }
        // cur = image^n; check f(image) = 0
        let f = source.defining_polynomial();
        let mut val = cur;
        for (i, c) in f.coeffs()[..n].iter().enumerate() {
            val = &val + &powers[i].scale(c);
        }
        if !val.is_zero() {
            return Err(Error::Precondition(format!(
                "{} does not vanish at {}",
                f, image
            )));
        }
        let den = powers.iter().fold(BigInt::one(), |l, p| l.lcm(&p.den));
        let rows = powers
            .iter()
            .map(|p| {
                let m = &den / &p.den;
                p.num.iter().map(|x| x * &m).collect()
            })
            .collect();
        Ok(SubfieldEmbedding {
            source: source.clone(),
            target: target.clone(),
            image,
            powers: Arc::new(powers),
            matrix: Arc::new((rows, den)),
        })
    }

    pub fn identity(field: &NumberField) -> Self {
        Self::new(field, field, field.generator()).expect("generator is a root")
    }

    /// The unique embedding of Q.
    pub fn of_rationals(target: &NumberField) -> Self {
        Self::new(&NumberField::rationals(), target, target.zero()).expect("0 is a root of x")
    }

    pub fn source(&self) -> &NumberField {
        &self.source
    }

    pub fn target(&self) -> &NumberField {
        &self.target
    }

    pub fn image_of_generator(&self) -> &FieldElement {
        &self.image
    }

    pub fn apply(&self, x: &FieldElement) -> FieldElement {
        assert!(x.field().same(&self.source), "element not in the source field");
        // x = (1/den) Σ numᵢ·dⁱ·θⁱ
        let (rows, den) = &*self.matrix;
        let sp = &self.source.inner.scale_pows;
        let mut acc = vec![BigInt::zero(); self.target.degree()];
        for (i, c) in x.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = c * &sp[i];
            for (a, r) in acc.iter_mut().zip(&rows[i]) {
                if !r.is_zero() {
                    *a += &c * r;
                }
            }
        }
        FieldElement::normalized(self.target.clone(), acc, den * &x.den)
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &SubfieldEmbedding) -> SubfieldEmbedding {
        SubfieldEmbedding::new(&self.source, &next.target, next.apply(&self.image))
            .expect("composition of embeddings")
    }

    /// The source element mapping to `y`, if `y` lies in the image.
    pub fn preimage(&self, y: &FieldElement) -> Option<FieldElement> {
        let n = self.target.degree();
        let m = self.source.degree();
        let cols: Vec<Vec<Rational>> = self.powers.iter().map(|p| p.coords()).collect();
        let rows: Vec<Vec<Rational>> = (0..n).map(|i| (0..m).map(|j| cols[j][i].clone()).collect()).collect();
        let x = linalg::solve(&rows, &y.coords(), m)?;
        Some(self.source.element(&x).expect("dimension"))
    }

    /// Source degree divides target degree; this is their quotient.
    pub fn relative_degree(&self) -> usize {
        self.target.degree() / self.source.degree()
    }
}

/// The subfield `Q(e)` of the ambient field with its inclusion.
pub fn subfield_generated_by(e: &FieldElement) -> SubfieldEmbedding {
    let ambient = e.field();
    let m = e.minimal_polynomial();
    if m.deg() == 1 {
        return SubfieldEmbedding::of_rationals(ambient);
    }
    let f = NumberField::from_irreducible(m);
    SubfieldEmbedding::new(&f, ambient, e.clone()).expect("minimal polynomial vanishes")
}

/// `Q(e1, e2)` inside a common ambient field.
#[derive(Clone, Debug)]
pub struct PrimitiveElement {
    pub field: NumberField,
    /// `field → ambient`, sending the generator to `e1 + c·e2`.
    pub embedding: SubfieldEmbedding,
    pub shift: u64,
    /// `e1` and `e2` expressed in `field`.
    pub first: FieldElement,
    pub second: FieldElement,
}

/// Smallest field containing `e1` and `e2`, generated by `e1 + c·e2` with the
/// least `c ≥ 0` that works.
pub fn primitive_element(e1: &FieldElement, e2: &FieldElement) -> Result<PrimitiveElement> {
    if !e1.field().same(e2.field()) {
        return Err(Error::FieldMismatch);
    }
    for c in 0u64.. {
        let g = e1 + &e2.scale(&Rational::from_integer(c.into()));
        let emb = subfield_generated_by(&g);
        if let (Some(a), Some(b)) = (emb.preimage(e1), emb.preimage(e2)) {
            return Ok(PrimitiveElement {
                field: emb.source().clone(),
                embedding: emb,
                shift: c,
                first: a,
                second: b,
            });
        }
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Polynomial;

    fn field(cs: &[i64]) -> NumberField {
        NumberField::new(&Polynomial::from_ints(cs)).unwrap()
    }

    #[test]
    fn sqrt2_plus_i() {
        // Q(ζ8) contains √2 = ζ + ζ^7 = ζ - ζ^3 and i = ζ^2
        let k = field(&[1, 0, 0, 0, 1]);
        let z = k.generator();
        let s2 = &z - &z.pow_u(3);
        let i = z.pow_u(2);
        assert_eq!(s2.minimal_polynomial(), Polynomial::from_ints(&[-2, 0, 1]));
        let pe = primitive_element(&s2, &i).unwrap();
        assert_eq!(pe.field.degree(), 4);
        assert_eq!(pe.shift, 1);
        assert_eq!(pe.field.defining_polynomial(), &Polynomial::from_ints(&[9, 0, -2, 0, 1]));
        assert_eq!(pe.embedding.apply(&pe.first), s2);
        assert_eq!(pe.embedding.apply(&pe.second), i);
    }

    #[test]
    fn degenerate_cases() {
        let k = field(&[-2, 0, 1]);
        let s = k.generator();
        let pe = primitive_element(&s, &k.zero()).unwrap();
        assert_eq!(pe.field.defining_polynomial(), &Polynomial::from_ints(&[-2, 0, 1]));
        let pe = primitive_element(&s, &s).unwrap();
        assert_eq!(pe.field.degree(), 2);
        let q = primitive_element(&k.from_int(3), &k.one()).unwrap();
        assert!(q.field.is_rationals());
    }

    #[test]
    fn rejects_non_root_image() {
        let k = field(&[-2, 0, 1]);
        let i = field(&[1, 0, 1]);
        assert!(SubfieldEmbedding::new(&i, &k, k.generator()).is_err());
    }

    #[test]
    fn composition_and_preimage() {
        let k8 = field(&[1, 0, 0, 0, 1]);
        let z = k8.generator();
        let gi = field(&[1, 0, 1]);
        let emb = SubfieldEmbedding::new(&gi, &k8, z.pow_u(2)).unwrap();
        let q = SubfieldEmbedding::of_rationals(&gi).then(&emb);
        assert_eq!(q.apply(&NumberField::rationals().from_int(5)), k8.from_int(5));
        assert!(emb.preimage(&z).is_none());
        let x = gi.element_from_ints(&[2, -3]).unwrap();
        assert_eq!(emb.preimage(&emb.apply(&x)), Some(x));
    }
}
