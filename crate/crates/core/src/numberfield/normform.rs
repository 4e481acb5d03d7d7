use super::{FieldElement, NumberField};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::form::{self, Form};
use crate::linalg;

/// `N_{M/Q}(Σ xᵢαᵢ)` as a homogeneous form in `m` variables, computed as
/// the determinant of `Σ xᵢ·Mat(αᵢ)`.
///
/// Only absolute norms are supported here (`base_degree_over_k = [k:Q] = 1`);
/// relative norms over a larger base are built as products of conjugates in
/// the working field by the arrangement module.
pub fn norm_form(m: &NumberField, base_degree_over_k: usize, basis: &[FieldElement]) -> Result<Form<Rational>> {
    if base_degree_over_k != 1 {
        return Err(Error::Unsupported("norm_form over a base field other than Q".into()));
    }
    let n = m.degree();
    if basis.len() != n {
        return Err(Error::DimensionMismatch(format!("basis has {} elements, field degree {n}", basis.len())));
    }
    if basis.iter().any(|b| !b.field().same(m)) {
        return Err(Error::FieldMismatch);
    }
    let coords: Vec<Vec<Rational>> = basis.iter().map(|b| b.coords()).collect();
    if linalg::rank(&coords, n) < n {
        return Err(Error::DependentBasis);
    }
    // mats[k][i][j] = i-th coordinate of αₖ·θʲ
    let theta = m.generator();
    let mut tpow = vec![m.one()];
    for j in 1..n {
        let next = &tpow[j - 1] * &theta;
        tpow.push(next);
    }
    let mats: Vec<Vec<Vec<Rational>>> = basis
        .iter()
        .map(|a| {
            let cols: Vec<Vec<Rational>> = tpow.iter().map(|t| (a * t).coords()).collect();
            (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect()
        })
        .collect();
    let entries: Vec<Vec<Form<Rational>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let lin: Vec<Rational> = (0..n).map(|k| mats[k][i][j].clone()).collect();
                    Form::linear(&lin)
                })
                .collect()
        })
        .collect();
    Ok(form::determinant(&entries, Rational::from_integer(1.into())))
}
