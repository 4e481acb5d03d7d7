//! Certified complex embeddings of number fields.
//!
//! Real roots are counted by Sturm sequences. All roots are approximated by
//! Aberth iteration in fixed-point integer arithmetic and certified a
//! posteriori: the disk of radius `n·|p(z)/p'(z)|` around any `z` contains a
//! root, so `n` pairwise disjoint such disks contain exactly one root each.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::rational::{self, Rational};
use crate::exact::{poly_gcd, Polynomial};
use crate::numberfield::NumberField;

pub const BASE_BITS: u64 = 32;
pub const MAX_BITS: u64 = 4096;
const GUARD_BITS: u64 = 16;
// overlapping real parts at this precision are treated as equal when ordering
const TIE_BITS: u64 = 256;

// ---------------------------------------------------------------- Sturm

fn sturm_sequence(p: &Polynomial) -> Vec<Polynomial> {
    let mut seq = vec![p.clone(), p.derivative()];
    while !seq.last().unwrap().is_zero() {
        let k = seq.len();
        let r = seq[k - 2].rem(&seq[k - 1]);
        seq.push(-&r);
    }
    seq.pop();
    seq
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut v = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

fn sign(q: &Rational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

fn variations_at(seq: &[Polynomial], x: &Rational) -> usize {
    variations(seq.iter().map(|s| sign(&s.eval(x))))
}

fn variations_at_infinity(seq: &[Polynomial], positive: bool) -> usize {
    variations(seq.iter().map(|s| {
        let l = sign(&s.leading());
        if positive || s.deg() % 2 == 0 {
            l
        } else {
            -l
        }
    }))
}

fn require_squarefree(p: &Polynomial) -> Result<()> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !poly_gcd(p, &p.derivative()).is_constant() {
        return Err(Error::NotSquarefree);
    }
    Ok(())
}

/// Number of distinct real roots.
pub fn count_real_roots(p: &Polynomial) -> usize {
    if p.is_zero() || p.is_constant() {
        return 0;
    }
    let q = crate::exact::squarefree_part(p).expect("nonzero");
    let seq = sturm_sequence(&q);
    variations_at_infinity(&seq, false) - variations_at_infinity(&seq, true)
}

/// Cauchy bound: every root has absolute value below the returned power of two.
fn root_bound(p: &Polynomial) -> Rational {
    let lc = p.leading();
    let m = p.coeffs()[..p.deg()]
        .iter()
        .map(|c| (c / &lc).abs())
        .max()
        .unwrap_or_else(Rational::zero);
    let b = m + Rational::one();
    let mut r = Rational::one();
    while r <= b {
        r *= rational::rat(2);
    }
    r
}

/// Disjoint rational intervals `(a, b)`, one per real root of a squarefree
/// polynomial, in ascending order; each endpoint is a non-root and the
/// Sturm count on each interval is exactly 1.
pub fn isolate_real_roots(p: &Polynomial) -> Result<Vec<(Rational, Rational)>> {
    require_squarefree(p)?;
    if p.is_constant() {
        return Ok(Vec::new());
    }
    let seq = sturm_sequence(p);
    let b = root_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let c = variations_at(&seq, &lo) - variations_at(&seq, &hi);
        match c {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = split_point(p, &lo, &hi);
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// A non-root strictly inside `(lo, hi)`, near the midpoint.
fn split_point(p: &Polynomial, lo: &Rational, hi: &Rational) -> Rational {
    let w = hi - lo;
    for k in 1i64.. {
        for t in [rational::ratio(1, 2), rational::ratio(k, 2 * k + 1), rational::ratio(k + 1, 2 * k + 1)] {
            let m = lo + &w * t;
            if !p.eval(&m).is_zero() {
                return m;
            }
        }
    }
    unreachable!()
}

/// Shrinks an isolating interval to width at most `width` by bisection.
pub fn refine_real_root(p: &Polynomial, iv: &(Rational, Rational), width: &Rational) -> (Rational, Rational) {
    let (mut lo, mut hi) = iv.clone();
    let slo = sign(&p.eval(&lo));
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / rational::rat(2);
        let s = sign(&p.eval(&mid));
        if s == 0 {
            return (mid.clone(), mid);
        }
        if s == slo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

// ----------------------------------------------------- fixed-point Aberth

#[derive(Clone, Debug, PartialEq)]
struct Cx {
    re: BigInt,
    im: BigInt,
}

impl Cx {
    fn zero() -> Cx {
        Cx { re: BigInt::zero(), im: BigInt::zero() }
    }
    fn add(&self, o: &Cx) -> Cx {
        Cx { re: &self.re + &o.re, im: &self.im + &o.im }
    }
    fn sub(&self, o: &Cx) -> Cx {
        Cx { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    fn mul(&self, o: &Cx, bits: u64) -> Cx {
        Cx {
            re: (&self.re * &o.re - &self.im * &o.im) >> bits,
            im: (&self.re * &o.im + &self.im * &o.re) >> bits,
        }
    }
    fn div(&self, o: &Cx, bits: u64) -> Option<Cx> {
        let d = &o.re * &o.re + &o.im * &o.im;
        if d.is_zero() {
            return None;
        }
        let re = (&self.re * &o.re + &self.im * &o.im) << bits;
        let im = (&self.im * &o.re - &self.re * &o.im) << bits;
        Some(Cx { re: re / &d, im: im / &d })
    }
    fn norm_inf(&self) -> BigInt {
        self.re.abs().max(self.im.abs())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

/// `(p(z), p'(z))` in fixed point.
fn horner(p: &[BigInt], z: &Cx, bits: u64) -> (Cx, Cx) {
    let n = p.len() - 1;
    let mut v = Cx { re: &p[n] << bits, im: BigInt::zero() };
    let mut d = Cx::zero();
    for j in (0..n).rev() {
        d = d.mul(z, bits).add(&v);
        v = v.mul(z, bits).add(&Cx { re: &p[j] << bits, im: BigInt::zero() });
    }
    (v, d)
}

fn initial_points(p: &[BigInt], bits: u64) -> Vec<Cx> {
    let n = p.len() - 1;
    let lc = p[n].to_f64().unwrap_or(f64::MAX).abs();
    let c0 = p[0].to_f64().unwrap_or(f64::MAX).abs();
    let mut r = if c0 > 0.0 && lc > 0.0 { (c0 / lc).powf(1.0 / n as f64) } else { 1.0 };
    if !r.is_finite() || r <= 0.0 {
        r = 1.0;
    }
    let scale = 2f64.powi(40);
    (0..n)
        .map(|k| {
            let a = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            let re = BigInt::from((r * a.cos() * scale) as i64) << bits;
            let im = BigInt::from((r * a.sin() * scale) as i64) << bits;
            Cx { re: re >> 40, im: im >> 40 }
        })
        .collect()
}

fn rescale(z: &[Cx], from: u64, to: u64) -> Vec<Cx> {
    z.iter()
        .map(|c| {
            if to >= from {
                Cx { re: &c.re << (to - from), im: &c.im << (to - from) }
            } else {
                Cx { re: &c.re >> (from - to), im: &c.im >> (from - to) }
            }
        })
        .collect()
}

fn aberth(p: &[BigInt], z: &mut [Cx], bits: u64, max_iter: usize) {
    let n = z.len();
    let tol = BigInt::from(16);
    let nudge = Cx { re: BigInt::one() << (bits / 2), im: BigInt::one() << (bits / 3) };
    let one = Cx { re: BigInt::one() << bits, im: BigInt::zero() };
    for _ in 0..max_iter {
        let mut worst = BigInt::zero();
        for i in 0..n {
            let (v, d) = horner(p, &z[i], bits);
            if v.is_zero() {
                continue;
            }
            let Some(w) = v.div(&d, bits) else {
                z[i] = z[i].add(&nudge);
                worst = worst.max(nudge.norm_inf());
                continue;
            };
            let mut s = Cx::zero();
            for j in 0..n {
                if j != i {
                    let diff = z[i].sub(&z[j]);
                    match one.div(&diff, bits) {
                        Some(q) => s = s.add(&q),
                        None => z[j] = z[j].add(&nudge),
                    }
                }
            }
            let den = one.sub(&w.mul(&s, bits));
            let corr = w.div(&den, bits).unwrap_or(w);
            worst = worst.max(corr.norm_inf());
            z[i] = z[i].sub(&corr);
        }
        if worst <= tol {
            break;
        }
    }
}

// ----------------------------------------------------------- certification

/// Certified disk: center `re + i·im` (dyadic) and radius upper bound.
#[derive(Clone, Debug)]
struct Disk {
    re: Rational,
    im: Rational,
    rad: Rational,
}

impl Disk {
    fn meets_real_axis(&self) -> bool {
        self.im.abs() <= self.rad
    }
    fn meets(&self, re: &Rational, im: &Rational, rad: &Rational) -> bool {
        let dr = &self.re - re;
        let di = &self.im - im;
        let s = &self.rad + rad;
        &dr * &dr + &di * &di <= &s * &s
    }
    fn contains_disk(&self, o: &Disk) -> bool {
        if o.rad > self.rad {
            return false;
        }
        let dr = &self.re - &o.re;
        let di = &self.im - &o.im;
        let s = &self.rad - &o.rad;
        &dr * &dr + &di * &di <= &s * &s
    }
    fn re_interval(&self) -> (Rational, Rational) {
        (&self.re - &self.rad, &self.re + &self.rad)
    }
    fn im_abs_interval(&self) -> (Rational, Rational) {
        let a = self.im.abs();
        let lo = &a - &self.rad;
        (if lo.is_negative() { Rational::zero() } else { lo }, a + &self.rad)
    }
}

/// Upper bound `≥ √q` with `e` fractional bits.
fn sqrt_upper(q: &Rational, e: u64) -> Rational {
    let scaled = (q * Rational::from_integer(BigInt::one() << (2 * e))).ceil().to_integer();
    let s = scaled.sqrt() + BigInt::one();
    Rational::new(s, BigInt::one() << e)
}

/// Exact `2^{k·deg}·p(c)` and `2^{k·(deg-1)}·p'(c)` at `c = (a + bi)/2^k`.
fn exact_eval(p: &[BigInt], a: &BigInt, b: &BigInt, k: u64) -> ((BigInt, BigInt), (BigInt, BigInt)) {
    let n = p.len() - 1;
    let mut vr = p[n].clone();
    let mut vi = BigInt::zero();
    let mut dr = BigInt::zero();
    let mut di = BigInt::zero();
    for j in (0..n).rev() {
        let ndr = &dr * a - &di * b + &vr;
        let ndi = &dr * b + &di * a + &vi;
        dr = ndr;
        di = ndi;
        let nvr = &vr * a - &vi * b + (&p[j] << (k * (n - j) as u64));
        let nvi = &vr * b + &vi * a;
        vr = nvr;
        vi = nvi;
    }
    ((vr, vi), (dr, di))
}

fn certify(p: &[BigInt], z: &[Cx], bits: u64) -> Option<Vec<Disk>> {
    let n = z.len();
    let den = BigInt::one() << bits;
    let mut disks = Vec::with_capacity(n);
    for c in z {
        let ((vr, vi), (dr, di)) = exact_eval(p, &c.re, &c.im, bits);
        let dd = &dr * &dr + &di * &di;
        if dd.is_zero() {
            return None;
        }
        // |p(c)/p'(c)|² = |V|² / (|D|²·4^k)
        let vv = &vr * &vr + &vi * &vi;
        let ratio = Rational::new(vv * BigInt::from(n * n), dd * (BigInt::one() << (2 * bits)));
        let rad = if ratio.is_zero() {
            // exact root: any positive radius works; use one unit in the last place
            Rational::new(BigInt::one(), den.clone())
        } else {
            sqrt_upper(&ratio, bits + 4)
        };
        disks.push(Disk {
            re: Rational::new(c.re.clone(), den.clone()),
            im: Rational::new(c.im.clone(), den.clone()),
            rad,
        });
    }
    for i in 0..n {
        for j in i + 1..n {
            if disks[i].meets(&disks[j].re, &disks[j].im, &disks[j].rad) {
                return None;
            }
        }
    }
    Some(disks)
}

// -------------------------------------------------------- embedding sets

/// A certified root enclosure: `re × im` contains exactly one root.
#[derive(Clone, Debug, PartialEq)]
pub struct RootBox {
    pub re: (Rational, Rational),
    pub im: (Rational, Rational),
}

impl RootBox {
    pub fn width(&self) -> Rational {
        (&self.re.1 - &self.re.0).max(&self.im.1 - &self.im.0)
    }
    pub fn is_real(&self) -> bool {
        self.im.0.is_zero() && self.im.1.is_zero()
    }
}

impl Serialize for RootBox {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RootBox", 2)?;
        st.serialize_field("re", &[rational::to_string(&self.re.0), rational::to_string(&self.re.1)])?;
        st.serialize_field("im", &[rational::to_string(&self.im.0), rational::to_string(&self.im.1)])?;
        st.end()
    }
}

/// All complex embeddings of a field in canonical order: real roots
/// ascending, then conjugate pairs by ascending real part and ascending
/// absolute imaginary part, each pair listed with its negative-imaginary
/// member first.
#[derive(Clone, Debug)]
pub struct EmbeddingSet {
    field: NumberField,
    ipoly: Vec<BigInt>,
    approx: Vec<Cx>,
    disks: Vec<Disk>,
    real: Vec<bool>,
    bits: u64,
    r1: usize,
    r2: usize,
    conjugation: Vec<usize>,
}

impl EmbeddingSet {
    pub fn field(&self) -> &NumberField {
        &self.field
    }
    pub fn len(&self) -> usize {
        self.disks.len()
    }
    pub fn is_empty(&self) -> bool {
        self.disks.is_empty()
    }
    pub fn r1(&self) -> usize {
        self.r1
    }
    pub fn r2(&self) -> usize {
        self.r2
    }
    pub fn bits(&self) -> u64 {
        self.bits
    }
    pub fn conjugation(&self) -> &[usize] {
        &self.conjugation
    }
    pub fn is_real(&self, i: usize) -> bool {
        self.real[i]
    }

    pub fn boxes(&self) -> Vec<RootBox> {
        self.disks
            .iter()
            .zip(&self.real)
            .map(|(d, &real)| RootBox {
                re: d.re_interval(),
                im: if real {
                    (Rational::zero(), Rational::zero())
                } else {
                    (&d.im - &d.rad, &d.im + &d.rad)
                },
            })
            .collect()
    }

    pub fn max_width(&self) -> Rational {
        self.disks.iter().map(|d| &d.rad * rational::rat(2)).max().unwrap_or_else(Rational::zero)
    }

    /// Approximate root values, for display.
    pub fn approximations(&self) -> Vec<(f64, f64)> {
        self.disks
            .iter()
            .zip(&self.real)
            .map(|(d, &r)| (d.re.to_f64().unwrap_or(f64::NAN), if r { 0.0 } else { d.im.to_f64().unwrap_or(f64::NAN) }))
            .collect()
    }

    /// The same embeddings recertified at `bits` of working precision.
    pub fn refined(&self, bits: u64) -> Result<EmbeddingSet> {
        if bits > MAX_BITS {
            return Err(Error::PrecisionCap { bits: MAX_BITS });
        }
        let mut cur = self.clone();
        while cur.bits < bits {
            cur = cur.refine_once((cur.bits * 2).min(MAX_BITS))?;
        }
        Ok(cur)
    }

    fn refine_once(&self, bits: u64) -> Result<EmbeddingSet> {
        let mut b = bits;
        loop {
            let wb = b + GUARD_BITS;
            let mut z = rescale(&self.approx, self.bits + GUARD_BITS, wb);
            aberth(&self.ipoly, &mut z, wb, 60);
            if let Some(disks) = certify(&self.ipoly, &z, wb) {
                // identity of each root is kept by containment
                if disks.iter().zip(&self.disks).all(|(new, old)| old.contains_disk(new)) {
                    return Ok(EmbeddingSet { approx: z, disks, bits: b, ..self.clone() });
                }
            }
            if b >= MAX_BITS {
                return Err(Error::PrecisionCap { bits: MAX_BITS });
            }
            b = (b * 2).min(MAX_BITS);
        }
    }

    /// Refines until every box has width at most `precision`.
    pub fn with_precision(&self, precision: &Rational) -> Result<EmbeddingSet> {
        let mut cur = self.clone();
        while &cur.max_width() > precision {
            if cur.bits >= MAX_BITS {
                return Err(Error::PrecisionCap { bits: MAX_BITS });
            }
            cur = cur.refine_once((cur.bits * 2).min(MAX_BITS))?;
        }
        Ok(cur)
    }

    /// Index `j` with `s(root_i) = root_j`, where `s` is a polynomial over Q
    /// known to map roots to roots (a field automorphism written in the
    /// generator).
    pub fn locate(&self, s: &Polynomial, i: usize) -> Result<usize> {
        let mut cur = self.clone();
        loop {
            if let Some(j) = cur.try_locate(s, i) {
                return Ok(j);
            }
            if cur.bits >= MAX_BITS {
                return Err(Error::PrecisionCap { bits: MAX_BITS });
            }
            cur = cur.refine_once((cur.bits * 2).min(MAX_BITS))?;
        }
    }

    fn try_locate(&self, s: &Polynomial, i: usize) -> Option<usize> {
        let d = &self.disks[i];
        let (cre, cim, rad) = eval_disk(s, d, self.real[i]);
        let hits: Vec<usize> = (0..self.len()).filter(|&j| self.disks[j].meets(&cre, &cim, &rad)).collect();
        (hits.len() == 1).then(|| hits[0])
    }
}

/// Enclosure of `s(z)` for `z` in the disk: exact value at the center plus a
/// Lipschitz bound on the disk.
fn eval_disk(s: &Polynomial, d: &Disk, real: bool) -> (Rational, Rational, Rational) {
    let im0 = if real { Rational::zero() } else { d.im.clone() };
    let (mut vr, mut vi) = (Rational::zero(), Rational::zero());
    for c in s.coeffs().iter().rev() {
        let nr = &vr * &d.re - &vi * &im0 + c;
        let ni = &vr * &im0 + &vi * &d.re;
        vr = nr;
        vi = ni;
    }
    let m = d.re.abs() + im0.abs() + &d.rad;
    let mut lip = Rational::zero();
    let mut mp = Rational::one();
    for (k, c) in s.coeffs().iter().enumerate().skip(1) {
        lip += c.abs() * Rational::from_integer(k.into()) * &mp;
        mp *= &m;
    }
    (vr, vi, lip * &d.rad)
}

fn compare_intervals(a: &(Rational, Rational), b: &(Rational, Rational)) -> Option<Ordering> {
    if a.1 < b.0 {
        Some(Ordering::Less)
    } else if b.1 < a.0 {
        Some(Ordering::Greater)
    } else {
        None
    }
}

struct Certified {
    approx: Vec<Cx>,
    disks: Vec<Disk>,
    real: Vec<bool>,
    conj: Vec<usize>,
    bits: u64,
}

fn certify_all(ipoly: &[BigInt], r1: usize) -> Result<Certified> {
    let n = ipoly.len() - 1;
    let mut bits = BASE_BITS;
    let mut z = initial_points(ipoly, bits + GUARD_BITS);
    let mut prev = bits;
    loop {
        let wb = bits + GUARD_BITS;
        z = rescale(&z, prev + GUARD_BITS, wb);
        prev = bits;
        aberth(ipoly, &mut z, wb, 200 + 20 * n);
        if let Some(disks) = certify(ipoly, &z, wb) {
            let real: Vec<bool> = disks.iter().map(|d| d.meets_real_axis()).collect();
            if real.iter().filter(|&&r| r).count() == r1 {
                let mut conj: Vec<usize> = (0..n).collect();
                let mut ok = true;
                for i in 0..n {
                    if real[i] {
                        continue;
                    }
                    let d = &disks[i];
                    let m: Vec<usize> = (0..n)
                        .filter(|&j| j != i && !real[j] && disks[j].meets(&d.re, &-&d.im, &d.rad))
                        .collect();
                    if m.len() != 1 {
                        ok = false;
                        break;
                    }
                    conj[i] = m[0];
                }
                if ok && (0..n).all(|i| conj[conj[i]] == i) {
                    return Ok(Certified { approx: z, disks, real, conj, bits });
                }
            }
        }
        if bits >= MAX_BITS {
            return Err(Error::PrecisionCap { bits: MAX_BITS });
        }
        bits *= 2;
    }
}

/// Certified embeddings in canonical order, at base precision.
pub fn embeddings(k: &NumberField) -> Result<EmbeddingSet> {
    let p = k.defining_polynomial();
    let ipoly = p.to_primitive_integer();
    let n = p.deg();
    let r1 = count_real_roots(p);
    let mut c = certify_all(&ipoly, r1)?;
    // canonical order; overlapping comparisons trigger refinement
    loop {
        let mut set = EmbeddingSet {
            field: k.clone(),
            ipoly: ipoly.clone(),
            approx: c.approx.clone(),
            disks: c.disks.clone(),
            real: c.real.clone(),
            bits: c.bits,
            r1,
            r2: (n - r1) / 2,
            conjugation: c.conj.clone(),
        };
        match canonical_order(&c) {
            Some(order) => {
                let mut inv = vec![0; n];
                for (new, &old) in order.iter().enumerate() {
                    inv[old] = new;
                }
                set.approx = order.iter().map(|&o| c.approx[o].clone()).collect();
                set.disks = order.iter().map(|&o| c.disks[o].clone()).collect();
                set.real = order.iter().map(|&o| c.real[o]).collect();
                set.conjugation = order.iter().map(|&o| inv[c.conj[o]]).collect();
                return Ok(set);
            }
            None => {
                if c.bits >= MAX_BITS {
                    return Err(Error::PrecisionCap { bits: MAX_BITS });
                }
                let r = set.refine_once((c.bits * 2).min(MAX_BITS))?;
                c = Certified { approx: r.approx, disks: r.disks, real: r.real, conj: r.conjugation, bits: r.bits };
            }
        }
    }
}

fn canonical_order(c: &Certified) -> Option<Vec<usize>> {
    let n = c.disks.len();
    let mut reals: Vec<usize> = (0..n).filter(|&i| c.real[i]).collect();
    let mut uppers: Vec<usize> = (0..n).filter(|&i| !c.real[i] && c.disks[i].im.is_positive()).collect();
    if uppers.len() * 2 + reals.len() != n {
        return None;
    }
    let mut undecided = false;
    let cmp_real = |a: &usize, b: &usize, flag: &mut bool| {
        compare_intervals(&c.disks[*a].re_interval(), &c.disks[*b].re_interval()).unwrap_or_else(|| {
            *flag = true;
            Ordering::Equal
        })
    };
    insertion_sort(&mut reals, |a, b| cmp_real(a, b, &mut undecided));
    let tie = c.bits >= TIE_BITS;
    insertion_sort(&mut uppers, |a, b| {
        let (da, db) = (&c.disks[*a], &c.disks[*b]);
        match compare_intervals(&da.re_interval(), &db.re_interval()) {
            Some(o) => o,
            None if tie => compare_intervals(&da.im_abs_interval(), &db.im_abs_interval()).unwrap_or_else(|| {
                undecided = true;
                Ordering::Equal
            }),
            None => {
                undecided = true;
                Ordering::Equal
            }
        }
    });
    if undecided {
        return None;
    }
    let mut order = reals;
    for u in uppers {
        order.push(c.conj[u]);
        order.push(u);
    }
    Some(order)
}

fn insertion_sort<T: Copy>(v: &mut [T], mut cmp: impl FnMut(&T, &T) -> Ordering) {
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && cmp(&v[j - 1], &v[j]) == Ordering::Greater {
            v.swap(j - 1, j);
            j -= 1;
        }
    }
}

/// Certified embeddings with every box of width at most `precision`.
pub fn embeddings_of(k: &NumberField, precision: &Rational) -> Result<EmbeddingSet> {
    embeddings(k)?.with_precision(precision)
}

/// `(r1, r2)` by Sturm's theorem alone.
pub fn signature(k: &NumberField) -> (usize, usize) {
    let p = k.defining_polynomial();
    let r1 = count_real_roots(p);
    (r1, (p.deg() - r1) / 2)
}

pub fn is_totally_real(k: &NumberField) -> bool {
    signature(k).1 == 0
}

pub fn is_totally_imaginary(k: &NumberField) -> bool {
    signature(k).0 == 0
}

/// Free rank of the S-unit group: `r1 + r2 − 1 + #finite places`.
pub fn unit_rank(k: &NumberField, num_finite_places: usize) -> usize {
    let (r1, r2) = signature(k);
    r1 + r2 - 1 + num_finite_places
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Polynomial {
        Polynomial::from_ints(cs)
    }

    fn field(cs: &[i64]) -> NumberField {
        NumberField::new(&p(cs)).unwrap()
    }

    #[test]
    fn real_root_counts() {
        assert_eq!(isolate_real_roots(&p(&[-2, 0, 1])).unwrap().len(), 2);
        assert_eq!(isolate_real_roots(&p(&[1, 0, 1])).unwrap().len(), 0);
        assert_eq!(isolate_real_roots(&p(&[-2, 0, 0, 1])).unwrap().len(), 1);
        assert!(matches!(isolate_real_roots(&p(&[1, -2, 1])), Err(Error::NotSquarefree)));
    }

    #[test]
    fn isolating_intervals_bracket_roots() {
        // roots 0, ±1, ±2: (x^2-1)(x^2-4)x
        let q = p(&[0, 4, 0, -5, 0, 1]);
        let ivs = isolate_real_roots(&q).unwrap();
        assert_eq!(ivs.len(), 5);
        for (k, iv) in ivs.iter().enumerate() {
            let r = rational::rat(k as i64 - 2);
            assert!(iv.0 < r && r < iv.1);
            let t = refine_real_root(&q, iv, &rational::ratio(1, 1000));
            assert!(t.0 <= r && r <= t.1);
        }
    }

    #[test]
    fn signatures() {
        assert_eq!(signature(&NumberField::rationals()), (1, 0));
        assert_eq!(signature(&field(&[-2, 0, 1])), (2, 0));
        assert_eq!(signature(&field(&[-2, 0, 0, 0, 1])), (2, 1));
        assert_eq!(unit_rank(&NumberField::rationals(), 0), 0);
        assert_eq!(unit_rank(&field(&[1, 0, 1]), 0), 0);
        assert_eq!(unit_rank(&field(&[-2, 0, 1]), 0), 1);
    }

    #[test]
    fn gaussian_embeddings() {
        let e = embeddings(&field(&[1, 0, 1])).unwrap();
        assert_eq!((e.r1(), e.r2()), (0, 1));
        assert_eq!(e.conjugation(), &[1, 0]);
        let b = e.boxes();
        assert!(b[0].im.1 < Rational::zero());
        assert!(b[1].im.0 > Rational::zero());
    }

    #[test]
    fn cube_root_and_cyclotomic() {
        let e = embeddings(&field(&[-2, 0, 0, 1])).unwrap();
        assert_eq!((e.r1(), e.r2()), (1, 1));
        assert_eq!(e.conjugation(), &[0, 2, 1]);
        let e = embeddings_of(&field(&[1, 1, 1, 1, 1]), &rational::ratio(1, 1 << 20)).unwrap();
        assert_eq!((e.r1(), e.r2()), (0, 2));
        assert!(e.max_width() <= rational::ratio(1, 1 << 20));
        // cos 144° < cos 72°
        let a = e.approximations();
        assert!(a[0].0 < a[2].0);
        assert!((a[0].0 - (-0.809)).abs() < 1e-3);
        assert!(a[0].1 < 0.0 && a[1].1 > 0.0);
    }

    #[test]
    fn equal_real_parts_are_ordered_by_imaginary_part() {
        // roots ±i·φ, ±i/φ: all real parts vanish
        let e = embeddings(&field(&[1, 0, 3, 0, 1])).unwrap();
        let a = e.approximations();
        assert!(a[1].1 > 0.0 && a[1].1 < a[3].1);
        assert_eq!(e.conjugation(), &[1, 0, 3, 2]);
    }

    #[test]
    fn refinement_keeps_order_and_pairing() {
        let k = field(&[-2, 0, 0, 0, 1]);
        let e = embeddings(&k).unwrap();
        let f = e.refined(512).unwrap();
        assert_eq!(e.conjugation(), f.conjugation());
        for (a, b) in e.approximations().iter().zip(f.approximations()) {
            assert!((a.0 - b.0).abs() < 1e-6 && (a.1 - b.1).abs() < 1e-6);
        }
    }

    #[test]
    fn locate_conjugate_under_automorphism() {
        // in Q(i), the automorphism i -> -i maps root 0 (-i) to root 1 (i)
        let e = embeddings(&field(&[1, 0, 1])).unwrap();
        assert_eq!(e.locate(&p(&[0, -1]), 0).unwrap(), 1);
        assert_eq!(e.locate(&p(&[0, 1]), 0).unwrap(), 0);
    }
}
