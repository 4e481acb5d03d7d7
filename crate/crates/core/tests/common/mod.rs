#![allow(dead_code)]

use hyperdense::arrangement::{Arrangement, Hyperplane, HyperplaneSpec};
use hyperdense::density::{decide_s_infinity, Condition, Status};
use hyperdense::galois::DEFAULT_DEGREE_CAP;
use hyperdense::{FieldElement, NumberField, Polynomial, Rational, SubfieldEmbedding};

pub const CAP: usize = DEFAULT_DEGREE_CAP;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn field(cs: &[i64]) -> NumberField {
    NumberField::new(&Polynomial::from_ints(cs)).unwrap()
}

pub fn power_basis(m: &NumberField) -> Vec<FieldElement> {
    (0..m.degree()).map(|i| m.generator().pow_u(i as u64)).collect()
}

pub fn norm_component(m: &NumberField, n: usize) -> Arrangement {
    let spec = HyperplaneSpec::NormComponent {
        k_in_field: SubfieldEmbedding::of_rationals(m),
        basis: power_basis(m),
        offset: 0,
    };
    Arrangement::new(&NumberField::rationals(), n, vec![spec]).unwrap()
}

pub fn rational(rows: &[&[i64]]) -> Arrangement {
    let specs = rows.iter().map(|r| HyperplaneSpec::Explicit(Hyperplane::rational(r))).collect();
    Arrangement::new(&NumberField::rationals(), rows[0].len() - 1, specs).unwrap()
}

pub struct Case {
    pub name: &'static str,
    pub arrangement: Arrangement,
    pub status: Status,
    pub condition: Condition,
}

/// The seven archimedean verdict examples over Q.
pub fn s_infinity_corpus() -> Vec<Case> {
    let case = |name, arrangement, status, condition| Case { name, arrangement, status, condition };
    vec![
        case("x0 x1 (x0+x1) in P2", rational(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]]), Status::NotDense, Condition::A),
        case("x0 x1 in P2", rational(&[&[1, 0, 0], &[0, 1, 0]]), Status::NotDense, Condition::B),
        case("x0^2+x1^2 in P1", norm_component(&field(&[1, 0, 1]), 1), Status::NotDense, Condition::C),
        case("x0^2-2x1^2 in P1", norm_component(&field(&[-2, 0, 1]), 1), Status::Dense, Condition::None),
        case("norm Q(2^(1/3)) in P2", norm_component(&field(&[-2, 0, 0, 1]), 2), Status::Dense, Condition::None),
        case("norm Q(zeta5) in P3", norm_component(&field(&[1, 1, 1, 1, 1]), 3), Status::NotDense, Condition::C),
        case("x0 in P3", rational(&[&[1, 0, 0, 0]]), Status::Dense, Condition::None),
    ]
}

pub fn verdict(a: &Arrangement) -> (Status, Condition) {
    let v = decide_s_infinity(&NumberField::rationals(), a, CAP).unwrap();
    (v.status, v.condition)
}

/// Identity with `row[i] += c·row[j]` applied for each step, then rows
/// rotated by `rot`; determinant ±1.
pub fn unimodular(n: usize, steps: &[(usize, usize, i64)], rot: usize) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for &(i, j, c) in steps {
        let (i, j) = (i % n, j % n);
        if i == j {
            continue;
        }
        for col in 0..n {
            m[i][col] += c * m[j][col];
        }
    }
    m.rotate_left(rot % n);
    m.into_iter().map(|r| r.into_iter().map(q).collect()).collect()
}

/// The same hyperplanes listed in the order `perm`.
pub fn permuted(a: &Arrangement, perm: &[usize]) -> Arrangement {
    let specs = perm
        .iter()
        .map(|&i| HyperplaneSpec::Explicit(Hyperplane::new(a.k_in_working_field(), a.forms()[i].clone()).unwrap()))
        .collect();
    Arrangement::new(a.base_field(), a.ambient_dim(), specs).unwrap()
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}
