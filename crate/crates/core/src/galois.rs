//! Splitting fields over Q and their automorphism groups.
//!
//! A splitting field is built by adjoining one root at a time; the final
//! generator is an integer combination of roots, so an automorphism is fixed
//! by the images of the few roots appearing in it. Candidates are checked
//! exactly by evaluating the defining polynomial.

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::embeddings::{self, EmbeddingSet};
use crate::error::{Error, Result};
use crate::exact::{factor_over_q, squarefree_part, Polynomial, Rational};
use crate::numberfield::{factor_over_field, kpoly_gcd, FieldElement, KPoly, NumberField, SubfieldEmbedding};

pub const DEFAULT_DEGREE_CAP: usize = 24;

pub type Perm = Vec<usize>;

/// The splitting field of a polynomial with all of its roots.
#[derive(Clone, Debug)]
pub struct SplittingField {
    pub field: NumberField,
    /// Roots of the squarefree part, sorted by coordinates.
    pub roots: Vec<FieldElement>,
    pub source: Polynomial,
    /// Absolute degrees of the intermediate fields.
    pub tower: Vec<usize>,
    /// The field generator as `Σ cᵢ·roots[jᵢ]`.
    pub generator: Vec<(i64, usize)>,
}

struct Adjoined {
    field: NumberField,
    phi: SubfieldEmbedding,
    beta: FieldElement,
    shift: i64,
}

/// `k(β)` for a root `β` of the irreducible `h` over `k`, presented over Q
/// by the minimal polynomial of `β + c·θ`.
fn adjoin(k: &NumberField, h: &KPoly) -> Result<Adjoined> {
    if k.is_rationals() {
        let q = h.as_rational().expect("coefficients in Q");
        let f = NumberField::from_irreducible(q);
        return Ok(Adjoined {
            phi: SubfieldEmbedding::of_rationals(&f),
            beta: f.generator(),
            field: f,
            shift: 0,
        });
    }
    let theta = k.generator();
    for c in 1i64.. {
        let ct = theta.scale(&Rational::from_integer(c.into()));
        let norm = h.shift(&-&ct).norm();
        if !crate::exact::certified_squarefree(&norm.to_primitive_integer()) {
            continue;
        }
        let k2 = NumberField::from_irreducible(norm.monic());
        let gamma = k2.generator();
        // θ is the common root of f_k(y) and h(γ - c·y) over k2
        let lin = KPoly::new(&k2, vec![gamma.clone(), k2.from_int(-c)]);
        let mut g = KPoly::zero(&k2);
        let mut lp = KPoly::one(&k2);
        for hi in h.coeffs() {
            let hy = KPoly::from_rational(&k2, &hi.to_poly());
            g = g.add(&hy.mul(&lp));
            lp = lp.mul(&lin);
        }
        let fk = KPoly::from_rational(&k2, k.defining_polynomial());
        let d = kpoly_gcd(&fk, &g);
        if d.degree() != 1 {
            return Err(Error::Internal(format!("adjunction gcd has degree {}", d.degree())));
        }
        let theta2 = -&d.coeffs()[0];
        let phi = SubfieldEmbedding::new(k, &k2, theta2.clone())?;
        let beta = &gamma - &theta2.scale(&Rational::from_integer(c.into()));
        return Ok(Adjoined { field: k2, phi, beta, shift: c });
    }
    unreachable!()
}

/// Splitting field of `p` over Q by iterated adjunction; fails with
/// `DegreeCap` (reporting the tower so far) past `cap`.
pub fn splitting_field(p: &Polynomial, cap: usize) -> Result<SplittingField> {
    let q = squarefree_part(p)?;
    if q.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let mut k = NumberField::rationals();
    let mut roots: Vec<FieldElement> = Vec::new();
    let mut pending: Vec<KPoly> = factor_over_q(&q)?
        .into_iter()
        .map(|(f, _)| KPoly::from_rational(&k, &f))
        .collect();
    let mut expr: Vec<(i64, FieldElement)> = Vec::new();
    let mut tower = vec![1];
    loop {
        let mut nonlinear = Vec::new();
        for h in &pending {
            for (f, _) in factor_over_field(h)? {
                if f.degree() == 1 {
                    roots.push(-&f.coeffs()[0]);
                } else {
                    nonlinear.push(f);
                }
            }
        }
        if nonlinear.is_empty() {
            break;
        }
        nonlinear.sort_by_key(|f| f.degree());
        let h = nonlinear.remove(0);
        let degree = k.degree() * h.degree();
        if degree > cap {
            return Err(Error::DegreeCap { cap, degree, tower });
        }
        let adj = adjoin(&k, &h)?;
        let phi = &adj.phi;
        let k2 = adj.field.clone();
        roots = roots.iter().map(|r| phi.apply(r)).collect();
        let mut e2 = vec![(1, adj.beta.clone())];
        for (c, r) in &expr {
            e2.push((c * adj.shift, phi.apply(r)));
        }
        expr = e2.into_iter().filter(|(c, _)| *c != 0).collect();
        pending = nonlinear.iter().map(|f| f.map(&k2, |c| phi.apply(c))).collect();
        let hk2 = h.map(&k2, |c| phi.apply(c));
        roots.push(adj.beta.clone());
        let cof = hk2.div_exact(&KPoly::linear(&adj.beta)).expect("β is a root");
        if cof.degree() >= 1 {
            pending.push(cof);
        }
        tower.push(k2.degree());
        k = k2;
    }
    roots.sort_by(|a, b| a.canonical_cmp(b));
    let index: HashMap<&FieldElement, usize> = roots.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let generator = expr
        .iter()
        .map(|(c, r)| (*c, *index.get(r).expect("generator terms are roots")))
        .collect();
    Ok(SplittingField { field: k, roots, source: q, tower, generator })
}

/// A subgroup, as sorted indices into its parent group's element list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }
    pub fn order(&self) -> usize {
        self.elements.len()
    }
    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }
    pub fn is_subgroup_of(&self, o: &Subgroup) -> bool {
        self.elements.iter().all(|&g| o.contains(g))
    }
    fn key(&self) -> (usize, &[usize]) {
        (self.elements.len(), &self.elements)
    }
}

/// A permutation group in one-line notation over root indices.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PermutationGroup {
    pub degree: usize,
    pub order: usize,
    pub abelian: bool,
    pub cyclic: bool,
    pub generators: Vec<Perm>,
    pub elements: Vec<Perm>,
}

/// `Gal(N/Q)` for a splitting field `N`, acting on the listed roots.
#[derive(Debug)]
pub struct GaloisGroup {
    split: SplittingField,
    autos: Vec<SubfieldEmbedding>,
    perms: Vec<Perm>,
    table: Vec<Vec<usize>>,
    inv: Vec<usize>,
    emb: OnceLock<EmbeddingSet>,
}

fn compose(a: &[usize], b: &[usize]) -> Perm {
    b.iter().map(|&i| a[i]).collect()
}

impl GaloisGroup {
    pub fn new(split: SplittingField) -> Result<GaloisGroup> {
        let n = &split.field;
        let roots = &split.roots;
        let index: HashMap<&FieldElement, usize> = roots.iter().enumerate().map(|(i, r)| (r, i)).collect();
        // roots may only move within their Q-irreducible factor
        let factors = factor_over_q(&split.source)?;
        let class: Vec<usize> = roots
            .iter()
            .map(|r| {
                factors
                    .iter()
                    .position(|(f, _)| KPoly::from_rational(n, f).eval(r).is_zero())
                    .expect("every root lies on some factor")
            })
            .collect();
        let mut used: Vec<usize> = split.generator.iter().map(|&(_, j)| j).collect();
        used.sort();
        used.dedup();
        let mut autos = Vec::new();
        let mut perms = Vec::new();
        let mut assign = vec![usize::MAX; used.len()];
        let mut stack = vec![(0usize, 0usize)];
        // depth-first over injective, class-preserving images of the used roots
        while let Some((depth, start)) = stack.pop() {
            if depth == used.len() {
                let img = |j: usize| assign[used.iter().position(|&u| u == j).unwrap()];
                let mut g = n.zero();
                for &(c, j) in &split.generator {
                    g = &g + &roots[img(j)].scale(&Rational::from_integer(c.into()));
                }
                if let Ok(a) = SubfieldEmbedding::new(n, n, g) {
                    let perm: Perm = roots
                        .iter()
                        .map(|r| *index.get(&a.apply(r)).expect("automorphisms permute roots"))
                        .collect();
                    autos.push(a);
                    perms.push(perm);
                }
                continue;
            }
            let mut next = start;
            while next < roots.len() {
                let cand = next;
                next += 1;
                if class[cand] == class[used[depth]] && !assign[..depth].contains(&cand) {
                    stack.push((depth, next));
                    assign[depth] = cand;
                    stack.push((depth + 1, 0));
                    break;
                }
            }
        }
        if perms.len() != n.degree() {
            return Err(Error::Internal(format!(
                "found {} automorphisms for a field of degree {}",
                perms.len(),
                n.degree()
            )));
        }
        let mut order: Vec<usize> = (0..perms.len()).collect();
        order.sort_by(|&a, &b| perms[a].cmp(&perms[b]));
        let autos: Vec<SubfieldEmbedding> = order.iter().map(|&i| autos[i].clone()).collect();
        let perms: Vec<Perm> = order.iter().map(|&i| perms[i].clone()).collect();
        let pindex: HashMap<&Perm, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|a| perms.iter().map(|b| pindex[&compose(a, b)]).collect())
            .collect();
        let inv = (0..perms.len()).map(|a| (0..perms.len()).find(|&b| table[a][b] == 0).unwrap()).collect();
        Ok(GaloisGroup { split, autos, perms, table, inv, emb: OnceLock::new() })
    }

    pub fn splitting_field(&self) -> &SplittingField {
        &self.split
    }
    pub fn field(&self) -> &NumberField {
        &self.split.field
    }
    pub fn order(&self) -> usize {
        self.perms.len()
    }
    pub fn perm(&self, g: usize) -> &Perm {
        &self.perms[g]
    }
    pub fn automorphism(&self, g: usize) -> &SubfieldEmbedding {
        &self.autos[g]
    }
    pub fn apply(&self, g: usize, x: &FieldElement) -> FieldElement {
        self.autos[g].apply(x)
    }
    /// Index of `a ∘ b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }
    pub fn inverse(&self, a: usize) -> usize {
        self.inv[a]
    }
    pub fn whole(&self) -> Subgroup {
        Subgroup { elements: (0..self.order()).collect() }
    }
    pub fn trivial(&self) -> Subgroup {
        Subgroup { elements: vec![0] }
    }

    pub fn closure(&self, gens: impl IntoIterator<Item = usize>) -> Subgroup {
        let mut set: BTreeSet<usize> = BTreeSet::from([0]);
        let mut frontier: Vec<usize> = gens.into_iter().collect();
        let gens = frontier.clone();
        while let Some(x) = frontier.pop() {
            if !set.insert(x) {
                continue;
            }
            for &g in &gens {
                let y = self.table[x][g];
                if !set.contains(&y) {
                    frontier.push(y);
                }
            }
        }
        // finite groups: closure under products with generators suffices
        let mut all: Vec<usize> = set.iter().copied().collect();
        loop {
            let mut grew = false;
            for i in 0..all.len() {
                for j in 0..all.len() {
                    let y = self.table[all[i]][all[j]];
                    if !set.contains(&y) {
                        set.insert(y);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
            all = set.iter().copied().collect();
        }
        Subgroup { elements: set.into_iter().collect() }
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        self.closure(a.elements.iter().chain(&b.elements).copied())
    }

    /// Elements fixing the image of a subfield pointwise.
    pub fn fixing(&self, emb: &SubfieldEmbedding) -> Result<Subgroup> {
        if !emb.target().same(self.field()) {
            return Err(Error::FieldMismatch);
        }
        let x = emb.image_of_generator();
        Ok(self.fixing_element(x))
    }

    pub fn fixing_element(&self, x: &FieldElement) -> Subgroup {
        Subgroup { elements: (0..self.order()).filter(|&g| &self.autos[g].apply(x) == x).collect() }
    }

    /// All subgroups `S` with `h ≤ S ≤ g`, ordered by order then elements.
    pub fn subgroups_between(&self, h: &Subgroup, g: &Subgroup) -> Vec<Subgroup> {
        assert!(h.is_subgroup_of(g));
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue = vec![h.clone()];
        seen.insert(h.elements.clone());
        let mut out = Vec::new();
        while let Some(s) = queue.pop() {
            for &x in &g.elements {
                if s.contains(x) {
                    continue;
                }
                let t = self.closure(s.elements.iter().copied().chain([x]));
                if seen.insert(t.elements.clone()) {
                    queue.push(t);
                }
            }
            out.push(s);
        }
        out.sort_by(|a, b| a.key().cmp(&b.key()));
        out
    }

    /// The fixed field of `s` with its inclusion into `N`, presented by the
    /// minimal polynomial of the orbit sum of the generator (or, if that is
    /// not primitive, of `∏_{σ∈S} (j + σ(γ))` for `j = 1, 2, …`).
    pub fn fixed_field(&self, s: &Subgroup) -> (NumberField, SubfieldEmbedding) {
        let n = self.field();
        let target = self.order() / s.order();
        if target == 1 {
            return (NumberField::rationals(), SubfieldEmbedding::of_rationals(n));
        }
        if s.order() == 1 {
            return (n.clone(), SubfieldEmbedding::identity(n));
        }
        let gamma = n.generator();
        let orbit: Vec<FieldElement> = s.elements.iter().map(|&g| self.autos[g].apply(&gamma)).collect();
        let mut cand = orbit.iter().fold(n.zero(), |acc, x| &acc + x);
        let mut j = 0i64;
        loop {
            let m = cand.minimal_polynomial();
            if m.deg() == target {
                let f = NumberField::from_irreducible(m);
                let e = SubfieldEmbedding::new(&f, n, cand).expect("minimal polynomial vanishes");
                return (f, e);
            }
            j += 1;
            let jj = n.from_int(j);
            cand = orbit.iter().fold(n.one(), |acc, x| &acc * &(&jj + x));
        }
    }

    pub fn is_abelian(&self, s: &Subgroup) -> bool {
        s.elements.iter().all(|&a| s.elements.iter().all(|&b| self.table[a][b] == self.table[b][a]))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.table[x][g];
            k += 1;
        }
        k
    }

    pub fn is_cyclic(&self, s: &Subgroup) -> bool {
        s.elements.iter().any(|&g| self.element_order(g) == s.order())
    }

    pub fn to_permutation_group(&self, s: &Subgroup) -> PermutationGroup {
        let mut gens = Vec::new();
        let mut span = self.trivial();
        for &g in &s.elements {
            if !span.contains(g) {
                gens.push(g);
                span = self.closure(gens.iter().copied());
            }
        }
        PermutationGroup {
            degree: self.split.roots.len(),
            order: s.order(),
            abelian: self.is_abelian(s),
            cyclic: self.is_cyclic(s),
            generators: gens.iter().map(|&g| self.perms[g].clone()).collect(),
            elements: s.elements.iter().map(|&g| self.perms[g].clone()).collect(),
        }
    }

    /// Certified embeddings of `N` in canonical order.
    pub fn embeddings(&self) -> Result<&EmbeddingSet> {
        if let Some(e) = self.emb.get() {
            return Ok(e);
        }
        let e = embeddings::embeddings(self.field())?;
        Ok(self.emb.get_or_init(|| e))
    }

    /// Index `j` with `φ_e ∘ σ_g = φ_j`, where `φ_i` sends the generator to root box `i`.
    pub fn embedding_index(&self, g: usize, e: usize) -> Result<usize> {
        let s = self.autos[g].image_of_generator().to_poly();
        self.embeddings()?.locate(&s, e)
    }

    /// Complex conjugation under the canonical (first) embedding.
    pub fn complex_conjugation(&self) -> Result<usize> {
        self.complex_conjugation_at(0)
    }

    /// Complex conjugation under embedding `e`: the `τ` with `φ_e ∘ τ = conj ∘ φ_e`.
    pub fn complex_conjugation_at(&self, e: usize) -> Result<usize> {
        let emb = self.embeddings()?;
        let want = emb.conjugation()[e];
        let approx = emb.approximations();
        let target = approx[want];
        // rank candidates by a floating estimate, then certify in that order
        let mut cands: Vec<(f64, usize)> = (0..self.order())
            .map(|g| {
                let s = self.autos[g].image_of_generator().to_poly();
                let (re, im) = approx_eval(&s, approx[e]);
                let d = (re - target.0).hypot(im - target.1);
                (if d.is_nan() { f64::INFINITY } else { d }, g)
            })
            .collect();
        cands.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        for (_, g) in cands {
            if self.embedding_index(g, e)? == want {
                return Ok(g);
            }
        }
        Err(Error::Internal("no automorphism realizes complex conjugation".into()))
    }
}

fn approx_eval(s: &Polynomial, z: (f64, f64)) -> (f64, f64) {
    let (mut re, mut im) = (0.0f64, 0.0f64);
    for c in s.coeffs().iter().rev() {
        let c = c.to_f64().unwrap_or(f64::NAN);
        (re, im) = (re * z.0 - im * z.1 + c, re * z.1 + im * z.0);
    }
    (re, im)
}

/// Splitting field of `M`'s defining polynomial with the inclusion of `M`
/// sending its generator to the first listed root.
pub fn galois_closure(m: &NumberField, cap: usize) -> Result<(GaloisGroup, SubfieldEmbedding)> {
    let split = splitting_field(m.defining_polynomial(), cap)?;
    let r0 = split.roots[0].clone();
    let n = split.field.clone();
    let emb = if m.is_rationals() {
        SubfieldEmbedding::of_rationals(&n)
    } else {
        SubfieldEmbedding::new(m, &n, r0)?
    };
    Ok((GaloisGroup::new(split)?, emb))
}

/// `Gal(N/k)` for a subfield `k` of the splitting field.
pub fn automorphism_group(g: &GaloisGroup, over: &SubfieldEmbedding) -> Result<PermutationGroup> {
    Ok(g.to_permutation_group(&g.fixing(over)?))
}
