mod common;

use std::sync::OnceLock;

use proptest::prelude::*;

use common::*;
use hyperdense::arrangement::{Arrangement, Hyperplane, HyperplaneSpec};
use hyperdense::density::prime_splitting;
use hyperdense::embeddings::{embeddings, isolate_real_roots, signature};
use hyperdense::exact::{expand_factorization, factor_over_q, poly_gcd, resultant, squarefree_part};
use hyperdense::galois::{splitting_field, GaloisGroup};
use hyperdense::witness::{closure_embeddings, unit_points, ClosureEmbeddings, UnitSupply};
use hyperdense::{FieldElement, NumberField, Polynomial};

fn poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-6i64..=6, 1..=max_deg + 1).prop_map(|cs| Polynomial::from_ints(&cs))
}

fn nonconstant(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    (prop::collection::vec(-5i64..=5, 1..=max_deg), 1i64..=3).prop_map(|(mut cs, lead)| {
        cs.push(lead);
        Polynomial::from_ints(&cs)
    })
}

fn element(m: &NumberField, cs: &[i64]) -> FieldElement {
    m.element_from_ints(&cs[..m.degree()]).unwrap()
}

fn fields() -> &'static [NumberField] {
    static F: OnceLock<Vec<NumberField>> = OnceLock::new();
    F.get_or_init(|| {
        [&[1, 0, 1][..], &[-2, 0, 1], &[-2, 0, 0, 1], &[1, 1, 1, 1, 1], &[1, 0, 0, 0, 1], &[-2, 0, 0, 0, 1], &[1, -1, 0, 1], &[-1, -3, 0, 1]]
            .iter()
            .map(|c| field(c))
            .collect()
    })
}

fn corpus() -> &'static [Case] {
    static C: OnceLock<Vec<Case>> = OnceLock::new();
    C.get_or_init(s_infinity_corpus)
}

fn zeta5() -> &'static ClosureEmbeddings {
    static Z: OnceLock<ClosureEmbeddings> = OnceLock::new();
    Z.get_or_init(|| closure_embeddings(&field(&[1, 1, 1, 1, 1]), CAP).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gcd_contains_common_factor(p in poly(6), r in poly(6), g in nonconstant(3)) {
        prop_assume!(!p.is_zero() && !r.is_zero());
        let d = poly_gcd(&(&p * &g), &(&r * &g));
        prop_assert!(d.rem(&g.monic()).is_zero());
    }

    #[test]
    fn factorization_multiplies_back(a in nonconstant(3), b in nonconstant(3), c in nonconstant(2)) {
        let p = &(&a * &b) * &(&c * &c);
        let fs = factor_over_q(&p).unwrap();
        prop_assert_eq!(expand_factorization(&p.leading(), &fs), p);
    }

    #[test]
    fn resultant_is_antisymmetric(a in nonconstant(5), b in nonconstant(5)) {
        let sign = if (a.deg() * b.deg()) % 2 == 1 { -q(1) } else { q(1) };
        prop_assert_eq!(resultant(&a, &b).unwrap(), sign * resultant(&b, &a).unwrap());
    }

    #[test]
    fn squarefree_part_is_squarefree(a in nonconstant(3), b in nonconstant(2)) {
        let s = squarefree_part(&(&a * &(&b * &b))).unwrap();
        prop_assert!(poly_gcd(&s, &s.derivative()).is_constant());
    }

    #[test]
    fn norm_is_multiplicative(i in 0usize..8, u in prop::collection::vec(-4i64..=4, 4), v in prop::collection::vec(-4i64..=4, 4)) {
        let m = &fields()[i];
        let (u, v) = (element(m, &u), element(m, &v));
        prop_assert_eq!(u.norm() * v.norm(), (&u * &v).norm());
    }

    #[test]
    fn minimal_polynomial_vanishes(i in 0usize..8, u in prop::collection::vec(-4i64..=4, 4)) {
        let m = &fields()[i];
        let u = element(m, &u);
        let f = u.minimal_polynomial();
        let at_u = f.coeffs().iter().rev().fold(m.zero(), |acc, c| &(&acc * &u) + &m.from_rational(c));
        prop_assert!(at_u.is_zero());
    }

    #[test]
    fn prime_splitting_degrees_sum(i in 0usize..8, p in 2u64..2000) {
        prop_assume!(is_prime(p));
        let m = &fields()[i];
        let r = prime_splitting(p, m).unwrap();
        if r.verified {
            let sum: usize = r.primes.iter().map(|f| f.residue_degree * f.ramification as usize).sum();
            prop_assert_eq!(sum, m.degree());
        }
    }

    #[test]
    fn identity_is_multiplicative(
        x in prop::collection::vec(-3i64..=3, 4),
        y in prop::collection::vec(-3i64..=3, 4),
        s in 0u64..10,
        t in 0u64..10,
        a in prop::collection::vec(0u64..3, 4),
    ) {
        let ce = zeta5();
        let z5 = ce.sigmas[0].source();
        let z = z5.generator();
        // real part times a root of unity, exponents in multiples of 5
        let real = |c: &[i64]| {
            let g = &z + &z.pow_u(4);
            c.iter().rev().fold(z5.zero(), |acc, &k| &(&acc * &g) + &z5.from_int(k))
        };
        let (x, y) = (&real(&x) * &z.pow_u(s), &real(&y) * &z.pow_u(t));
        prop_assume!(!x.is_zero() && !y.is_zero());
        let a: Vec<u64> = a.iter().map(|e| 5 * e).collect();
        let mut b = vec![0; 4];
        for (i, &e) in a.iter().enumerate() {
            b[ce.pairing[i]] = e;
        }
        let vx = hyperdense::witness::verify_multiplicative_identity(&ce.sigmas, &x, &a, &b).unwrap();
        let vy = hyperdense::witness::verify_multiplicative_identity(&ce.sigmas, &y, &a, &b).unwrap();
        prop_assert!(vx && vy);
        prop_assert!(hyperdense::witness::verify_multiplicative_identity(&ce.sigmas, &(&x * &y), &a, &b).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn verdicts_survive_coordinate_changes(
        steps in prop::collection::vec((0usize..4, 0usize..4, -2i64..=2), 0..6),
        rot in 0usize..4,
        order in any::<u64>(),
    ) {
        for case in corpus() {
            let a = &case.arrangement;
            let n1 = a.ambient_dim() + 1;
            let moved = a.transformed(&unimodular(n1, &steps, rot)).unwrap();
            let mut perm: Vec<usize> = (0..moved.len()).collect();
            let len = perm.len();
            perm.rotate_left(order as usize % len);
            if order % 2 == 1 {
                perm.reverse();
            }
            let moved = permuted(&moved, &perm);
            prop_assert_eq!(verdict(&moved), (case.status, case.condition), "{}", case.name);
        }
    }

    #[test]
    fn rank_ignores_scaling(c in prop::collection::vec((-3i64..=3, -3i64..=3), 3)) {
        let gi = field(&[1, 0, 1]);
        let base = [[1, 0], [0, 1], [1, 1]];
        let specs: Vec<HyperplaneSpec> = base
            .iter()
            .zip(&c)
            .map(|(h, &(re, im))| {
                let s = gi.element_from_ints(&[re, im]).unwrap();
                let s = if s.is_zero() { gi.one() } else { s };
                let coeffs = h.iter().map(|&x| &gi.from_int(x) * &s).collect();
                HyperplaneSpec::Explicit(Hyperplane::over_q(&gi, coeffs).unwrap())
            })
            .collect();
        let a = Arrangement::new(&NumberField::rationals(), 1, specs).unwrap();
        prop_assert_eq!(a.linear_rank(), 2);
        prop_assert_eq!(a.len(), 3);
    }

    #[test]
    fn pell_point_count(b in 0u32..16) {
        let r2 = field(&[-2, 0, 1]);
        let s = UnitSupply::new(&r2, vec![&r2.one() + &r2.generator()]).unwrap();
        prop_assert_eq!(unit_points(&s, &power_basis(&r2), b).unwrap().len(), 2 * b as usize + 1);
    }
}

#[test]
fn components_partition_hyperplanes() {
    for case in corpus() {
        let a = &case.arrangement;
        let mut seen: Vec<usize> = a.components_over_k().iter().flat_map(|c| c.orbit.clone()).collect();
        seen.sort();
        assert_eq!(seen, (0..a.len()).collect::<Vec<_>>(), "{}", case.name);
        for c in a.components_over_k() {
            assert_eq!(c.orbit.len(), c.degree);
            assert_eq!(c.field.degree(), c.degree);
        }
    }
}

#[test]
fn conjugation_and_real_roots_match_signature() {
    for m in fields() {
        let (r1, r2) = signature(m);
        assert_eq!(r1 + 2 * r2, m.degree());
        assert_eq!(isolate_real_roots(m.defining_polynomial()).unwrap().len(), r1);
        let e = embeddings(m).unwrap();
        let conj = e.conjugation();
        assert!(conj.iter().enumerate().all(|(i, &j)| conj[j] == i));
        assert_eq!(conj.iter().enumerate().filter(|(i, &j)| *i == j).count(), r1);
        let finer = e.refined(e.bits() * 2).unwrap();
        assert_eq!((finer.r1(), finer.r2(), finer.conjugation()), (r1, r2, conj));
    }
}

#[test]
fn galois_correspondence_degrees() {
    for cs in [&[-2, 0, 0, 1][..], &[-2, 0, 0, 0, 1], &[1, 1, 1, 1, 1]] {
        let g = GaloisGroup::new(splitting_field(&Polynomial::from_ints(cs), CAP).unwrap()).unwrap();
        assert_eq!(g.order(), g.field().degree());
        for s in g.subgroups_between(&g.trivial(), &g.whole()) {
            let (f, emb) = g.fixed_field(&s);
            assert_eq!(f.degree() * s.order(), g.order());
            assert_eq!(g.fixing(&emb).unwrap(), s);
        }
    }
}
