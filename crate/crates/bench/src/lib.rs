//! Fixed inputs shared by the benchmarks.

use hyperdense::arrangement::{Arrangement, Hyperplane, HyperplaneSpec};
use hyperdense::{NumberField, Polynomial, Result};

pub fn field(cs: &[i64]) -> NumberField {
    NumberField::new(&Polynomial::from_ints(cs)).expect("irreducible fixture")
}

/// The norm form of `field` as a component of P^(degree-1) over Q.
pub fn norm_arrangement(cs: &[i64]) -> Result<Arrangement> {
    let m = field(cs);
    let n = m.degree() - 1;
    let basis = (0..m.degree()).map(|j| m.generator().pow_u(j as u64)).collect();
    let spec = HyperplaneSpec::NormComponent {
        k_in_field: hyperdense::SubfieldEmbedding::of_rationals(&m),
        basis,
        offset: 0,
    };
    Arrangement::new(&NumberField::rationals(), n, vec![spec])
}

/// x0 x1 (x0 + x1) in P^1, the smallest rank-deficient case.
pub fn three_points() -> Result<Arrangement> {
    let specs = [[1, 0], [0, 1], [1, 1]]
        .iter()
        .map(|c| HyperplaneSpec::Explicit(Hyperplane::rational(c)))
        .collect();
    Arrangement::new(&NumberField::rationals(), 1, specs)
}

pub const CYCLOTOMIC_5: [i64; 5] = [1, 1, 1, 1, 1];
pub const CYCLOTOMIC_8: [i64; 5] = [1, 0, 0, 0, 1];
pub const CUBE_ROOT_2: [i64; 4] = [-2, 0, 0, 1];
pub const QUARTIC_D4: [i64; 5] = [-2, 0, 0, 0, 1];
