//! Monic gcd over a number field by reduction modulo word-size primes,
//! Chinese remaindering and rational reconstruction, checked by exact
//! division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{FieldElement, KPoly};
use crate::exact::modp::{self, PolyP};
use crate::exact::Rational;

/// Primes below 2^31, descending.
fn primes() -> impl Iterator<Item = u64> {
    ((1u64 << 30)..(1u64 << 31)).rev().filter(|&n| {
        n % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0)
    })
}

struct Ring<'a> {
    g: &'a PolyP,
    p: u64,
}

impl Ring<'_> {
    fn mul(&self, a: &[u64], b: &[u64]) -> PolyP {
        modp::rem(&modp::mul(a, b, self.p), self.g, self.p)
    }
    fn inv(&self, a: &[u64]) -> Option<PolyP> {
        if a.is_empty() {
            return None;
        }
        let (d, s, _) = modp::xgcd(a, self.g, self.p);
        (d.len() == 1).then_some(s)
    }
    fn rem(&self, a: &[PolyP], b: &[PolyP]) -> Option<Vec<PolyP>> {
        let inv = self.inv(b.last()?)?;
        let mut r = a.to_vec();
        let dn = b.len() - 1;
        while r.len() > dn {
            let k = r.len() - 1 - dn;
            let c = self.mul(r.last().unwrap(), &inv);
            for (j, bc) in b.iter().enumerate() {
                r[k + j] = modp::sub(&r[k + j], &self.mul(&c, bc), self.p);
            }
            while r.last().is_some_and(|x| x.is_empty()) {
                r.pop();
            }
        }
        Some(r)
    }
    fn monic(&self, a: &[PolyP]) -> Option<Vec<PolyP>> {
        let inv = self.inv(a.last()?)?;
        Some(a.iter().map(|c| self.mul(c, &inv)).collect())
    }
    fn gcd(&self, a: Vec<PolyP>, b: Vec<PolyP>) -> Option<Vec<PolyP>> {
        let (mut a, mut b) = (self.monic(&a)?, self.monic(&b)?);
        while !b.is_empty() {
            let r = self.rem(&a, &b)?;
            a = b;
            b = if r.is_empty() { r } else { self.monic(&r)? };
        }
        Some(a)
    }
}

fn reduce(x: &FieldElement, p: u64) -> Option<PolyP> {
    let d = modp::reduce_bigint(&x.den, p);
    if d == 0 {
        return None;
    }
    let inv = modp::inv_mod(d, p);
    Some(modp::scale(&modp::from_bigints(&x.num, p), inv, p))
}

/// `a/b ≡ x (mod m)` with `|a|, b ≤ sqrt(m/2)`.
fn rational_reconstruct(x: &BigInt, m: &BigInt) -> Option<Rational> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), x.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    Some(Rational::new(r1, t1))
}

pub(super) fn gcd(a: &KPoly, b: &KPoly) -> KPoly {
    let k = a.field();
    let n = k.degree();
    let mut best_deg = usize::MAX;
    let mut residues: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut last: Option<Vec<Rational>> = None;
    for p in primes() {
        let g = modp::from_bigints(&k.inner.model, p);
        let ring = Ring { g: &g, p };
        let red = |f: &KPoly| f.coeffs().iter().map(|c| reduce(c, p)).collect::<Option<Vec<_>>>();
        let (Some(ap), Some(bp)) = (red(a), red(b)) else { continue };
        if ap.last().is_some_and(|c| c.is_empty()) || bp.last().is_some_and(|c| c.is_empty()) {
            continue;
        }
        let Some(gp) = ring.gcd(ap, bp) else { continue };
        let deg = gp.len() - 1;
        if deg == 0 {
            return KPoly::one(k);
        }
        if deg > best_deg {
            continue;
        }
        let flat: Vec<u64> = (0..deg)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| gp[i].get(j).copied().unwrap_or(0))
            .collect();
        if deg < best_deg {
            best_deg = deg;
            residues = flat.iter().map(|&v| BigInt::from(v)).collect();
            modulus = BigInt::from(p);
            last = None;
        } else {
            let pb = BigInt::from(p);
            let inv = modp::inv_mod(modp::reduce_bigint(&modulus, p), p);
            for (r, &v) in residues.iter_mut().zip(&flat) {
                // r + modulus·((v - r)·modulus⁻¹ mod p)
                let cur = modp::reduce_bigint(r, p);
                let t = (v + p - cur) % p * inv % p;
                *r += &modulus * BigInt::from(t);
            }
            modulus *= pb;
        }
        let rec: Option<Vec<Rational>> = residues.iter().map(|r| rational_reconstruct(r, &modulus)).collect();
        let Some(rec) = rec else { continue };
        if last.as_ref() == Some(&rec) {
            let mut coeffs: Vec<FieldElement> = rec.chunks(n).map(|c| k.from_eta(c)).collect();
            coeffs.push(k.one());
            let cand = KPoly::new(k, coeffs);
            if a.rem(&cand).is_zero() && b.rem(&cand).is_zero() {
                return cand;
            }
        }
        last = Some(rec);
    }
    unreachable!()
}
