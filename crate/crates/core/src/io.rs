//! Problem files: a JSON description of a base field, an arrangement and
//! the data the verbs need. Numbers may be integers or `"num/den"` strings;
//! polynomials and field elements are coefficient arrays, constant first.

use serde::Deserialize;

use crate::arrangement::{Arrangement, Hyperplane, HyperplaneSpec};
use crate::density::{FinitePlace, PlaceSpec, UnitActionData};
use crate::error::{Error, Result};
use crate::exact::rational;
use crate::exact::{Polynomial, Rational};
use crate::galois::DEFAULT_DEGREE_CAP;
use crate::numberfield::{FieldElement, NumberField, SubfieldEmbedding};
use crate::witness::UnitSupply;

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Str(String),
}

impl Num {
    pub fn to_rational(&self) -> Result<Rational> {
        match self {
            Num::Int(n) => Ok(rational::rat(*n)),
            Num::Str(s) => rational::parse(s),
        }
    }
}

/// A field element: a bare rational, or coordinates in the power basis
/// (shorter vectors are padded with zeros).
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum ElementJson {
    Scalar(Num),
    Coords(Vec<Num>),
}

impl ElementJson {
    pub fn to_element(&self, k: &NumberField) -> Result<FieldElement> {
        match self {
            ElementJson::Scalar(n) => Ok(k.from_rational(&n.to_rational()?)),
            ElementJson::Coords(v) => {
                if v.len() > k.degree() {
                    return Err(Error::Parse(format!(
                        "{} coordinates for a field of degree {}",
                        v.len(),
                        k.degree()
                    )));
                }
                let mut c = v.iter().map(Num::to_rational).collect::<Result<Vec<_>>>()?;
                c.resize(k.degree(), Rational::from_integer(0.into()));
                k.element(&c)
            }
        }
    }
}

pub fn parse_polynomial(v: &[Num]) -> Result<Polynomial> {
    Ok(Polynomial::new(v.iter().map(Num::to_rational).collect::<Result<_>>()?))
}

pub fn parse_field(v: &[Num]) -> Result<NumberField> {
    let p = parse_polynomial(v)?;
    if p.is_constant() {
        return Err(Error::Parse("field polynomial must have positive degree".into()));
    }
    NumberField::new(&p.monic())
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitJson {
    #[serde(default)]
    pub field: Option<Vec<Num>>,
    #[serde(default)]
    pub k_embedding: Option<ElementJson>,
    pub coeffs: Vec<ElementJson>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NormComponentJson {
    pub field: Vec<Num>,
    #[serde(default)]
    pub k_embedding: Option<ElementJson>,
    /// Defaults to powers of the generator of `M`, a basis over `k`.
    #[serde(default)]
    pub basis: Option<Vec<ElementJson>>,
    #[serde(default)]
    pub offset: usize,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum HyperplaneJson {
    Norm { norm_component: NormComponentJson },
    Explicit(ExplicitJson),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum PlaceJson {
    Prime(u64),
    Selected { p: u64, index: usize },
}

/// Units of one field with the basis used for coordinates.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnitsJson {
    pub field: Vec<Num>,
    #[serde(default)]
    pub generators: Vec<ElementJson>,
    #[serde(default)]
    pub basis: Option<Vec<ElementJson>>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    pub max_closure_degree: Option<usize>,
    pub exponent_bound: Option<u32>,
    pub probe_degree: Option<u32>,
    pub precision_floor: Option<u64>,
    /// Range `[−b, b]` of the free integer coordinates of a witness.
    pub box_bound: Option<u32>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(default)]
    pub base_field: Option<Vec<Num>>,
    #[serde(default)]
    pub ambient_dim: Option<usize>,
    #[serde(default)]
    pub hyperplanes: Vec<HyperplaneJson>,
    #[serde(default, rename = "S")]
    pub s: Option<Vec<PlaceJson>>,
    #[serde(default)]
    pub unit_action: Option<UnitActionData>,
    #[serde(default)]
    pub units: Vec<UnitsJson>,
    /// A single field for the `cm`, `galois` and `signature` verbs.
    #[serde(default)]
    pub field: Option<Vec<Num>>,
    /// Image of the generator of `k` in `field`.
    #[serde(default)]
    pub k_embedding: Option<ElementJson>,
    /// A polynomial for `galois`, which need not be irreducible.
    #[serde(default)]
    pub polynomial: Option<Vec<Num>>,
    #[serde(default)]
    pub options: Options,
}

pub const DEFAULT_EXPONENT_BOUND: u32 = 5;
pub const DEFAULT_PROBE_DEGREE: u32 = 6;
pub const DEFAULT_BOX_BOUND: u32 = 1;

/// `k → M`: identity when the polynomials agree and nothing is given,
/// the rational inclusion for `k = Q`, else the supplied image.
pub fn k_embedding(k: &NumberField, m: &NumberField, image: Option<&ElementJson>) -> Result<SubfieldEmbedding> {
    match image {
        Some(e) => SubfieldEmbedding::new(k, m, e.to_element(m)?),
        None if k.is_rationals() => Ok(SubfieldEmbedding::of_rationals(m)),
        None if k.same(m) => Ok(SubfieldEmbedding::identity(m)),
        None => Err(Error::Parse(format!(
            "k_embedding is required for {} over {}",
            m.defining_polynomial(),
            k.defining_polynomial()
        ))),
    }
}

/// A basis of `M` over `k = Q`: the power basis unless given.
fn q_basis(m: &NumberField, basis: Option<&Vec<ElementJson>>) -> Result<Vec<FieldElement>> {
    match basis {
        Some(b) => b.iter().map(|e| e.to_element(m)).collect(),
        None => Ok((0..m.degree()).map(|i| m.generator().pow_u(i as u64)).collect()),
    }
}

/// `1, θ, …, θ^{[M:k]−1}`: a `k`-basis, since `θ` generates `M` over `k`.
fn relative_basis(k_in_m: &SubfieldEmbedding) -> Vec<FieldElement> {
    let theta = k_in_m.target().generator();
    (0..k_in_m.relative_degree()).map(|i| theta.pow_u(i as u64)).collect()
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<ProblemFile> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn cap(&self) -> usize {
        self.options.max_closure_degree.unwrap_or(DEFAULT_DEGREE_CAP)
    }

    pub fn base_field(&self) -> Result<NumberField> {
        match &self.base_field {
            Some(v) => parse_field(v),
            None => Ok(NumberField::rationals()),
        }
    }

    /// The single field of the `cm`/`signature` verbs with its `k`-embedding.
    pub fn field_over_k(&self) -> Result<SubfieldEmbedding> {
        let k = self.base_field()?;
        let v = self.field.as_ref().ok_or_else(|| Error::Parse("missing \"field\"".into()))?;
        let m = parse_field(v)?;
        k_embedding(&k, &m, self.k_embedding.as_ref())
    }

    pub fn galois_polynomial(&self) -> Result<Polynomial> {
        match (&self.polynomial, &self.field) {
            (Some(p), _) | (None, Some(p)) => parse_polynomial(p),
            (None, None) => Err(Error::Parse("missing \"polynomial\" or \"field\"".into())),
        }
    }

    pub fn specs(&self) -> Result<Vec<HyperplaneSpec>> {
        let k = self.base_field()?;
        self.hyperplanes
            .iter()
            .map(|h| match h {
                HyperplaneJson::Explicit(e) => {
                    let m = match &e.field {
                        Some(v) => parse_field(v)?,
                        None => k.clone(),
                    };
                    let kin = k_embedding(&k, &m, e.k_embedding.as_ref())?;
                    let coeffs = e.coeffs.iter().map(|c| c.to_element(&m)).collect::<Result<Vec<_>>>()?;
                    Ok(HyperplaneSpec::Explicit(Hyperplane::new(&kin, coeffs)?))
                }
                HyperplaneJson::Norm { norm_component: n } => {
                    let m = parse_field(&n.field)?;
                    let kin = k_embedding(&k, &m, n.k_embedding.as_ref())?;
                    let basis = match &n.basis {
                        Some(b) => b.iter().map(|e| e.to_element(&m)).collect::<Result<Vec<_>>>()?,
                        None => relative_basis(&kin),
                    };
                    Ok(HyperplaneSpec::NormComponent { k_in_field: kin, basis, offset: n.offset })
                }
            })
            .collect()
    }

    pub fn ambient_dim(&self) -> Result<usize> {
        if let Some(n) = self.ambient_dim {
            return Ok(n);
        }
        Err(Error::Parse("missing \"ambient_dim\"".into()))
    }

    pub fn arrangement(&self) -> Result<Arrangement> {
        let k = self.base_field()?;
        Arrangement::with_cap(&k, self.ambient_dim()?, self.specs()?, self.cap())
    }

    pub fn places(&self) -> PlaceSpec {
        let finite = self
            .s
            .iter()
            .flatten()
            .map(|p| match *p {
                PlaceJson::Prime(p) => FinitePlace { p, index: None },
                PlaceJson::Selected { p, index } => FinitePlace { p, index: Some(index) },
            })
            .collect();
        PlaceSpec { finite }
    }

    /// Unit supplies with their Q-bases, in file order.
    pub fn unit_supplies(&self) -> Result<Vec<(UnitSupply, Vec<FieldElement>)>> {
        self.units
            .iter()
            .map(|u| {
                let m = parse_field(&u.field)?;
                let gens = u.generators.iter().map(|g| g.to_element(&m)).collect::<Result<Vec<_>>>()?;
                let basis = q_basis(&m, u.basis.as_ref())?;
                Ok((UnitSupply::new(&m, gens)?, basis))
            })
            .collect()
    }
}
