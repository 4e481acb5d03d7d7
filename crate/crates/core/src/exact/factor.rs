//! Factorization over Q: modular factorization by Berlekamp, multifactor
//! Hensel lifting, and Zassenhaus subset recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp::{self, PolyP};
use super::poly::{squarefree_decomposition, Polynomial};
use super::rational::Rational;
use crate::error::{Error, Result};

type ZPoly = Vec<BigInt>;

/// Irreducible factorization of a nonconstant polynomial over Q.
///
/// Returns monic irreducible factors with multiplicities, ordered by degree
/// and then by ascending coefficient sequence. The input equals its leading
/// coefficient times the product of `factor^multiplicity`.
pub fn factor_over_q(p: &Polynomial) -> Result<Vec<(Polynomial, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let parts = if is_squarefree_modular(&p.to_primitive_integer()) {
        vec![(p.monic(), 1)]
    } else {
        squarefree_decomposition(p)?
    };
    let mut out = Vec::new();
    for (part, mult) in parts {
        for f in factor_squarefree(&part) {
            out.push((f, mult));
        }
    }
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0).then(a.1.cmp(&b.1)));
    Ok(out)
}

/// Irreducible monic factors of a squarefree nonconstant polynomial.
pub(crate) fn factor_squarefree(p: &Polynomial) -> Vec<Polynomial> {
    let mut f = p.to_primitive_integer();
    let mut out = Vec::new();
    // strip the factor x
    if f[0].is_zero() {
        out.push(Polynomial::x());
        f.remove(0);
    }
    if f.len() > 1 {
        for g in zassenhaus(&f) {
            out.push(Polynomial::from_bigints(&g).monic());
        }
    }
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

/// Squarefree test over Q via a prime where the reduction stays squarefree.
/// Falls back to an exact gcd when no such prime is found quickly.
pub(crate) fn is_squarefree_modular(f: &[BigInt]) -> bool {
    let lc = f.last().unwrap();
    let mut tried = 0;
    for p in modp::small_primes(1000) {
        if (lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = modp::from_bigints(f, p);
        if modp::is_squarefree(&fp, p) {
            return true;
        }
        tried += 1;
        if tried >= 12 {
            break;
        }
    }
    let q = Polynomial::from_bigints(f);
    super::poly::poly_gcd(&q, &q.derivative()).is_constant()
}

/// True when some small prime certifies that `f` is squarefree. A `false`
/// answer is inconclusive.
pub(crate) fn certified_squarefree(f: &[BigInt]) -> bool {
    let lc = f.last().unwrap();
    modp::small_primes(1000)
        .filter(|&p| !(lc % BigInt::from(p)).is_zero())
        .take(16)
        .any(|p| modp::is_squarefree(&modp::from_bigints(f, p), p))
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    v
}

fn ztrim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn symmetric_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Exact quotient `f / g` over Z, or `None`.
fn zdiv_exact(f: &[BigInt], g: &[BigInt]) -> Option<ZPoly> {
    if g.len() > f.len() {
        return None;
    }
    let dg = g.len() - 1;
    let lg = &g[dg];
    let mut r = f.to_vec();
    let mut q = vec![BigInt::zero(); f.len() - dg];
    for k in (0..q.len()).rev() {
        let (c, rem) = r[k + dg].div_rem(lg);
        if !rem.is_zero() {
            return None;
        }
        if !c.is_zero() {
            for (j, gc) in g.iter().enumerate() {
                r[k + j] -= &c * gc;
            }
        }
        q[k] = c;
    }
    r[..dg].iter().all(|c| c.is_zero()).then_some(q)
}

fn primitive(mut f: ZPoly) -> ZPoly {
    let g = f.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in f.iter_mut() {
            *c = &*c / &g;
        }
    }
    if f.last().is_some_and(|c| c.is_negative()) {
        for c in f.iter_mut() {
            *c = -&*c;
        }
    }
    f
}

fn to_zp(a: &[u64]) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Coefficient bound for any factor of `f` (times its leading coefficient).
fn factor_bound(f: &[BigInt]) -> BigInt {
    let n = f.len() - 1;
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let norm = norm2.sqrt() + 1;
    let lc = f.last().unwrap().abs();
    (BigInt::one() << n) * norm * lc
}

/// Picks a prime with the fewest modular factors among a handful of
/// admissible candidates.
fn choose_prime(f: &[BigInt]) -> (u64, PolyP, usize) {
    let lc = f.last().unwrap();
    let mut best: Option<(u64, PolyP, usize)> = None;
    let mut seen = 0;
    for p in modp::small_primes(5000).skip(1) {
        if (lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = modp::from_bigints(f, p);
        if fp.len() != f.len() || !modp::is_squarefree(&fp, p) {
            continue;
        }
        let fm = modp::monic(&fp, p);
        let r = modp::factor_count(&fm, p);
        if best.as_ref().is_none_or(|b| r < b.2) {
            best = Some((p, fm, r));
        }
        seen += 1;
        if r == 1 || seen >= 7 {
            break;
        }
    }
    best.expect("some prime keeps a squarefree polynomial squarefree")
}

/// Linear multifactor Hensel lifting of `f ≡ lc · ∏ g_i (mod p)` to modulus
/// `p^k ≥ target`. Returns monic lifted factors and the final modulus.
fn hensel_lift(f: &[BigInt], factors: &[PolyP], p: u64, target: &BigInt) -> (Vec<ZPoly>, BigInt) {
    let r = factors.len();
    let pb = BigInt::from(p);
    let lc = f.last().unwrap().clone();
    let lc_inv = modp::inv_mod(modp::reduce_bigint(&lc, p), p);
    // s_i with Σ s_i ∏_{j≠i} g_j ≡ 1 (mod p)
    let mut s: Vec<PolyP> = Vec::with_capacity(r);
    for i in 0..r {
        let others = factors
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(vec![1u64], |acc, (_, g)| modp::mul(&acc, g, p));
        let (_, a, _) = modp::xgcd(&modp::rem(&others, &factors[i], p), &factors[i], p);
        s.push(a);
    }
    let mut lifted: Vec<ZPoly> = factors.iter().map(|g| to_zp(g)).collect();
    let mut m = pb.clone();
    while &m < target {
        let prod = lifted.iter().fold(vec![lc.clone()], |acc, g| zmul(&acc, g));
        let diff: ZPoly = (0..f.len())
            .map(|i| &f[i] - prod.get(i).cloned().unwrap_or_default())
            .collect();
        let e: ZPoly = diff.iter().map(|c| c / &m).collect();
        let ep = modp::scale(&modp::from_bigints(&e, p), lc_inv, p);
        if !ep.is_empty() {
            for (g, (gp, si)) in lifted.iter_mut().zip(factors.iter().zip(s.iter())) {
                let delta = modp::rem(&modp::mul(&ep, si, p), gp, p);
                for (j, d) in delta.iter().enumerate() {
                    g[j] += &m * BigInt::from(*d);
                }
            }
        }
        m *= &pb;
    }
    for g in lifted.iter_mut() {
        for c in g.iter_mut() {
            *c = c.mod_floor(&m);
        }
    }
    (lifted, m)
}

/// Irreducible factors over Z of a primitive squarefree `f` with `f(0) ≠ 0`.
fn zassenhaus(f: &[BigInt]) -> Vec<ZPoly> {
    let f = primitive(f.to_vec());
    if f.len() <= 2 {
        return vec![f];
    }
    let (p, fm, r) = choose_prime(&f);
    if r == 1 {
        return vec![f];
    }
    let modular = modp::berlekamp(&fm, p);
    debug_assert_eq!(modular.len(), r);
    let bound = factor_bound(&f) * 2;
    let (lifted, m) = hensel_lift(&f, &modular, p, &bound);

    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut cur = f.clone();
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= remaining.len() {
        let lc = cur.last().unwrap().clone();
        let const_target = &lc * &cur[0];
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            let chosen: Vec<usize> = subset.iter().map(|&i| remaining[i]).collect();
            // trailing-coefficient filter
            let c0 = chosen
                .iter()
                .fold(lc.clone(), |acc, &i| (acc * &lifted[i][0]).mod_floor(&m));
            let c0 = symmetric_mod(&c0, &m);
            if !c0.is_zero() && (&const_target % &c0).is_zero() {
                let prod = chosen
                    .iter()
                    .fold(vec![lc.clone()], |acc, &i| {
                        zmul(&acc, &lifted[i]).iter().map(|c| c.mod_floor(&m)).collect()
                    });
                let cand = primitive(ztrim(prod.iter().map(|c| symmetric_mod(c, &m)).collect()));
                if cand.len() > 1 {
                    if let Some(q) = zdiv_exact(&cur, &cand) {
                        found.push(cand);
                        cur = primitive(q);
                        let drop: Vec<usize> = chosen.clone();
                        remaining.retain(|i| !drop.contains(i));
                        continue 'outer;
                    }
                }
            }
            if !next_subset(&mut subset, remaining.len()) {
                break;
            }
        }
        size += 1;
    }
    if cur.len() > 1 {
        found.push(cur);
    }
    found
}

/// Advances `s` to the next `k`-subset of `0..n` in lexicographic order.
fn next_subset(s: &mut [usize], n: usize) -> bool {
    let k = s.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if s[i] < n - k + i {
            s[i] += 1;
            for j in i + 1..k {
                s[j] = s[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Product of factors raised to multiplicities, times `lc`.
pub fn expand_factorization(lc: &Rational, factors: &[(Polynomial, u32)]) -> Polynomial {
    factors
        .iter()
        .fold(Polynomial::constant(lc.clone()), |acc, (f, e)| &acc * &f.pow(*e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Polynomial {
        Polynomial::from_ints(cs)
    }

    #[test]
    fn x4_minus_1() {
        let fs = factor_over_q(&p(&[-1, 0, 0, 0, 1])).unwrap();
        assert_eq!(
            fs,
            vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1), (p(&[1, 0, 1]), 1)]
        );
    }

    #[test]
    fn cyclotomic_five_irreducible() {
        let f = p(&[1, 1, 1, 1, 1]);
        assert_eq!(factor_over_q(&f).unwrap(), vec![(f, 1)]);
    }

    #[test]
    fn squared_cubic() {
        let fs = factor_over_q(&p(&[1, 0, 0, -2, 0, 0, 1])).unwrap();
        assert_eq!(fs, vec![(p(&[-1, 1]), 2), (p(&[1, 1, 1]), 2)]);
    }

    #[test]
    fn constant_is_error() {
        assert_eq!(factor_over_q(&p(&[3])), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn swinnerton_dyer_like_recombination() {
        // (x^2-2)(x^2-3)(x^2+1)(x^4-10x^2+1): many modular factors, few true ones
        let f = &(&p(&[-2, 0, 1]) * &p(&[-3, 0, 1])) * &(&p(&[1, 0, 1]) * &p(&[1, 0, -10, 0, 1]));
        let fs = factor_over_q(&f).unwrap();
        assert_eq!(fs.len(), 4);
        assert_eq!(expand_factorization(&f.leading(), &fs), f);
        assert!(fs.iter().all(|(g, _)| g.is_monic()));
    }

    #[test]
    fn non_monic_rational_input() {
        let f = &p(&[1, 2]).scale(&Rational::new(3.into(), 7.into())) * &p(&[-5, 0, 3]);
        let fs = factor_over_q(&f).unwrap();
        assert_eq!(expand_factorization(&f.leading(), &fs), f);
        assert_eq!(fs.len(), 2);
    }
}
