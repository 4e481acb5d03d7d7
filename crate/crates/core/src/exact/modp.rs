//! Polynomials over a small prime field `F_p`, `p < 2^31`.
//!
//! Internal support for Zassenhaus factorization and prime decomposition.
//! Polynomials are ascending coefficient vectors with trailing zeros trimmed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

pub(crate) type PolyP = Vec<u64>;

pub(crate) fn trim(mut a: PolyP) -> PolyP {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn reduce_bigint(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

pub(crate) fn from_bigints(cs: &[BigInt], p: u64) -> PolyP {
    trim(cs.iter().map(|c| reduce_bigint(c, p)).collect())
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> PolyP {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

pub(crate) fn scale(a: &[u64], c: u64, p: u64) -> PolyP {
    trim(a.iter().map(|x| x * c % p).collect())
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> PolyP {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            v[i + j] = (v[i + j] + x * y) % p;
        }
    }
    trim(v)
}

pub(crate) fn div_rem(a: &[u64], d: &[u64], p: u64) -> (PolyP, PolyP) {
    assert!(!d.is_empty(), "division by zero polynomial mod p");
    if a.len() < d.len() {
        return (Vec::new(), a.to_vec());
    }
    let dd = d.len() - 1;
    let inv = inv_mod(d[dd], p);
    let mut r = a.to_vec();
    let mut q = vec![0u64; a.len() - dd];
    for k in (0..q.len()).rev() {
        let c = r[k + dd] * inv % p;
        if c != 0 {
            for (j, &dc) in d.iter().enumerate() {
                r[k + j] = (r[k + j] + p - c * dc % p) % p;
            }
        }
        q[k] = c;
    }
    r.truncate(dd);
    (trim(q), trim(r))
}

pub(crate) fn rem(a: &[u64], d: &[u64], p: u64) -> PolyP {
    div_rem(a, d, p).1
}

pub(crate) fn monic(a: &[u64], p: u64) -> PolyP {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => scale(a, inv_mod(lc, p), p),
    }
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> PolyP {
    let (mut a, mut b) = (monic(a, p), monic(b, p));
    while !b.is_empty() {
        let r = monic(&rem(&a, &b, p), p);
        a = b;
        b = r;
    }
    a
}

/// Returns `(g, s, t)` with `s·a + t·b = g`, `g` monic.
pub(crate) fn xgcd(a: &[u64], b: &[u64], p: u64) -> (PolyP, PolyP, PolyP) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1, p);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        let t = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    let inv = inv_mod(*r0.last().unwrap(), p);
    (scale(&r0, inv, p), scale(&s0, inv, p), scale(&t0, inv, p))
}

pub(crate) fn derivative(a: &[u64], p: u64) -> PolyP {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u64 % p) * c % p)
            .collect(),
    )
}

pub(crate) fn pow_rem(base: &[u64], mut e: u64, m: &[u64], p: u64) -> PolyP {
    let mut acc = vec![1u64];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn is_squarefree(a: &[u64], p: u64) -> bool {
    let d = derivative(a, p);
    if d.is_empty() {
        return a.len() <= 1;
    }
    gcd(a, &d, p).len() == 1
}

/// Nullspace basis (as row vectors) of the Berlekamp matrix `Q - I` for a
/// monic squarefree `f` of degree `d`; its dimension is the factor count.
fn berlekamp_kernel(f: &[u64], p: u64) -> Vec<Vec<u64>> {
    let d = f.len() - 1;
    // rows[i] = x^{ip} mod f
    let xp = pow_rem(&[0, 1], p, f, p);
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(d);
    let mut cur = vec![1u64];
    for _ in 0..d {
        let mut r = cur.clone();
        r.resize(d, 0);
        rows.push(r);
        cur = rem(&mul(&cur, &xp, p), f, p);
    }
    // A = (Q - I)^T; solve A g = 0.
    let mut a = vec![vec![0u64; d]; d];
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            a[j][i] = v;
        }
        a[i][i] = (a[i][i] + p - 1) % p;
    }
    nullspace_mod_p(a, d, p)
}

/// Nullspace of a `rows × cols` matrix over `F_p`.
pub(crate) fn nullspace_mod_p(mut a: Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, pr);
        let inv = inv_mod(a[r][c], p);
        for v in a[r].iter_mut() {
            *v = *v * inv % p;
        }
        for i in 0..rows {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for j in 0..cols {
                    a[i][j] = (a[i][j] + p - f * a[r][j] % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; cols];
            v[fc] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[i][fc]) % p;
            }
            v
        })
        .collect()
}

/// Number of irreducible factors of a monic squarefree polynomial.
pub(crate) fn factor_count(f: &[u64], p: u64) -> usize {
    berlekamp_kernel(f, p).len()
}

/// Berlekamp factorization of a monic squarefree polynomial into monic
/// irreducibles, sorted by degree then coefficients. Deterministic.
pub(crate) fn berlekamp(f: &[u64], p: u64) -> Vec<PolyP> {
    if f.len() <= 2 {
        return vec![f.to_vec()];
    }
    let kernel = berlekamp_kernel(f, p);
    let r = kernel.len();
    let mut factors = vec![f.to_vec()];
    for v in kernel.iter() {
        if factors.len() == r {
            break;
        }
        let v = trim(v.clone());
        if v.len() <= 1 {
            continue;
        }
        for s in 0..p {
            if factors.len() == r {
                break;
            }
            let mut vs = v.clone();
            vs[0] = (vs[0] + p - s) % p;
            let mut next = Vec::with_capacity(factors.len() + 1);
            for u in factors.drain(..) {
                if u.len() <= 2 {
                    next.push(u);
                    continue;
                }
                let g = gcd(&u, &vs, p);
                if g.len() > 1 && g.len() < u.len() {
                    let (q, _) = div_rem(&u, &g, p);
                    next.push(g);
                    next.push(monic(&q, p));
                } else {
                    next.push(u);
                }
            }
            factors = next;
        }
    }
    factors.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    factors
}

/// `f^(1/p)` for a polynomial whose exponents are all multiples of `p`.
fn pth_root(f: &[u64], p: u64) -> PolyP {
    // Frobenius is the identity on F_p coefficients.
    trim(f.iter().step_by(p as usize).copied().collect())
}

/// Squarefree decomposition over `F_p`: monic `(a_i, e_i)` with `f = lc · ∏ a_i^{e_i}`.
pub(crate) fn squarefree_decomposition(f: &[u64], p: u64) -> Vec<(PolyP, u32)> {
    let f = monic(f, p);
    let mut out = Vec::new();
    if f.len() <= 1 {
        return out;
    }
    let df = derivative(&f, p);
    let mut g = gcd(&f, &df, p);
    let mut w = div_rem(&f, &g, p).0;
    let mut i = 1u32;
    while w.len() > 1 {
        let y = gcd(&w, &g, p);
        let z = div_rem(&w, &y, p).0;
        if z.len() > 1 {
            out.push((monic(&z, p), i));
        }
        i += 1;
        w = y.clone();
        g = div_rem(&g, &y, p).0;
    }
    if g.len() > 1 {
        let root = pth_root(&g, p);
        for (h, j) in squarefree_decomposition(&root, p) {
            out.push((h, j * p as u32));
        }
    }
    out
}

/// Full factorization with multiplicities, sorted deterministically.
pub(crate) fn factor_with_multiplicity(f: &[u64], p: u64) -> Vec<(PolyP, u32)> {
    let mut out = Vec::new();
    for (a, e) in squarefree_decomposition(f, p) {
        for g in berlekamp(&a, p) {
            out.push((g, e));
        }
    }
    out.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)).then(a.1.cmp(&b.1)));
    out
}

pub(crate) fn small_primes(limit: u64) -> impl Iterator<Item = u64> {
    (2..limit).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}
