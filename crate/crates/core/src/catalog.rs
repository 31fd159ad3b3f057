//! On-disk triple descriptors (TOML) and the shipped catalog.
//!
//! Rational entries are written as strings `"p"` or `"p/q"` (plain integers
//! are accepted too); there is no floating-point path.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::liealg::{self, LieAlgebra, LieError};
use crate::pairs::{eigenspace_split, Involution, PairsError, TripleDescriptor};
use crate::ratlin::{parse_rational, RatMatrix, RatlinError, SubspaceBasis, Q};

pub const SCHEMA_VERSION: u32 = 1;

const DEFAULT_CATALOG: &str = include_str!("../catalog/default.toml");

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("catalog parse error: {0}")]
    Parse(String),
    #[error("unsupported schema_version {0} (expected {SCHEMA_VERSION})")]
    Schema(u32),
    #[error("no catalog entry named '{0}'")]
    UnknownEntry(String),
    #[error("entry '{entry}': {message}")]
    Invalid { entry: String, message: String },
    #[error("could not read {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RatLit {
    Int(i64),
    Str(String),
}

impl RatLit {
    fn value(&self) -> Result<Q, RatlinError> {
        match self {
            RatLit::Int(n) => Ok(Q::from_integer((*n).into())),
            RatLit::Str(s) => parse_rational(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum AlgebraSpec {
    So { p: usize, q: usize },
    Sl { n: usize },
    U { p: usize, q: usize },
    Su { p: usize, q: usize },
    G2Split,
    DirectSum { summands: Vec<AlgebraSpec> },
}

impl AlgebraSpec {
    pub fn build(&self) -> Result<LieAlgebra, LieError> {
        match self {
            AlgebraSpec::So { p, q } => liealg::so(*p, *q),
            AlgebraSpec::Sl { n } => liealg::sl(*n),
            AlgebraSpec::U { p, q } => liealg::u(*p, *q),
            AlgebraSpec::Su { p, q } => liealg::su(*p, *q),
            AlgebraSpec::G2Split => liealg::g2_split(),
            AlgebraSpec::DirectSum { summands } => {
                let mut it = summands.iter();
                let first = it.next().ok_or_else(|| LieError::Parameters("empty direct sum".into()))?;
                let mut acc = first.build()?;
                for s in it {
                    acc = liealg::direct_sum(&acc, &s.build()?)?;
                }
                Ok(acc)
            }
        }
    }

    fn summand_dims(&self) -> Result<Vec<usize>, LieError> {
        match self {
            AlgebraSpec::DirectSum { summands } => summands.iter().map(|s| s.build().map(|a| a.dim())).collect(),
            other => Ok(vec![other.build()?.dim()]),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum InvolutionSpec {
    Identity,
    Swap,
    NegativeTranspose,
    /// `Ad(diag(..))` on the realization.
    Conjugation { diagonal: Vec<RatLit> },
    /// One factor per direct summand.
    Product { factors: Vec<InvolutionSpec> },
    /// Explicit action on coordinates (rows of the matrix).
    Matrix { rows: Vec<Vec<RatLit>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WhichInvolution {
    Sigma,
    Theta,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum SubspaceSpec {
    /// The `index`-th direct summand.
    Summand { index: usize },
    FixedPoints { involution: WhichInvolution },
    Intersection { parts: Vec<SubspaceSpec> },
    Sum { parts: Vec<SubspaceSpec> },
    /// Image of another algebra's realization inside the ambient
    /// realization.
    Image { algebra: AlgebraSpec },
    Basis { vectors: Vec<Vec<RatLit>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntrySpec {
    pub name: String,
    #[serde(default)]
    pub description: String,
    pub algebra: AlgebraSpec,
    pub sigma: InvolutionSpec,
    pub theta: InvolutionSpec,
    pub l: SubspaceSpec,
    #[serde(default = "default_generators")]
    pub generators: Vec<String>,
    /// Free-text note on conventions fixed by the catalog.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub convention: Option<String>,
}

fn default_generators() -> Vec<String> {
    crate::env2::Generators::names().iter().map(|s| s.to_string()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogFile {
    pub schema_version: u32,
    #[serde(default, rename = "entry")]
    pub entries: Vec<EntrySpec>,
}

/// A loaded, validated entry.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub spec: EntrySpec,
    pub descriptor: TripleDescriptor,
}

#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<EntrySpec>,
}

impl Catalog {
    pub fn parse(text: &str) -> Result<Self, CatalogError> {
        let file: CatalogFile = toml::from_str(text).map_err(|e| CatalogError::Parse(e.to_string()))?;
        if file.schema_version != SCHEMA_VERSION {
            return Err(CatalogError::Schema(file.schema_version));
        }
        Ok(Self { entries: file.entries })
    }

    pub fn load(path: &std::path::Path) -> Result<Self, CatalogError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| CatalogError::Io { path: path.display().to_string(), source })?;
        Self::parse(&text)
    }

    pub fn shipped() -> Self {
        Self::parse(DEFAULT_CATALOG).expect("shipped catalog parses")
    }

    pub fn names(&self) -> Vec<String> {
        self.entries.iter().map(|e| e.name.clone()).collect()
    }

    pub fn specs(&self) -> &[EntrySpec] {
        &self.entries
    }

    /// Looks up `name`; `lorentzian-N` for any `N >= 2` is synthesized when
    /// not listed explicitly.
    pub fn spec(&self, name: &str) -> Result<EntrySpec, CatalogError> {
        if let Some(e) = self.entries.iter().find(|e| e.name == name) {
            return Ok(e.clone());
        }
        if let Some(n) = name.strip_prefix("lorentzian-").and_then(|s| s.parse::<usize>().ok()) {
            if n >= 2 {
                return Ok(lorentzian_spec(n));
            }
        }
        Err(CatalogError::UnknownEntry(name.to_string()))
    }

    pub fn entry(&self, name: &str) -> Result<CatalogEntry, CatalogError> {
        build_entry(&self.spec(name)?)
    }

    pub fn to_toml(&self) -> String {
        let file = CatalogFile { schema_version: SCHEMA_VERSION, entries: self.entries.clone() };
        toml::to_string(&file).expect("catalog serializes")
    }
}

/// `(SO(2,2n), SO(1,2n), U(1,n))` with `σ = Ad diag(1,-1,1,…)` and
/// `θ = Ad diag(1,1,-1,…)`.
pub fn lorentzian_spec(n: usize) -> EntrySpec {
    let dim = 2 + 2 * n;
    let sigma = (0..dim).map(|i| RatLit::Int(if i == 1 { -1 } else { 1 })).collect();
    let theta = (0..dim).map(|i| RatLit::Int(if i < 2 { 1 } else { -1 })).collect();
    EntrySpec {
        name: format!("lorentzian-{n}"),
        description: format!("so(2,{}) with h = so(1,{}) and l = u(1,{n})", 2 * n, 2 * n),
        algebra: AlgebraSpec::So { p: 2, q: 2 * n },
        sigma: InvolutionSpec::Conjugation { diagonal: sigma },
        theta: InvolutionSpec::Conjugation { diagonal: theta },
        l: SubspaceSpec::Image { algebra: AlgebraSpec::U { p: 1, q: n } },
        generators: default_generators(),
        convention: None,
    }
}

fn invalid(spec: &EntrySpec, e: impl std::fmt::Display) -> CatalogError {
    CatalogError::Invalid { entry: spec.name.clone(), message: e.to_string() }
}

pub fn build_entry(spec: &EntrySpec) -> Result<CatalogEntry, CatalogError> {
    let g = spec.algebra.build().map_err(|e| invalid(spec, e))?;
    let dims = spec.algebra.summand_dims().map_err(|e| invalid(spec, e))?;
    let sigma = build_involution(&g, &spec.algebra, &spec.sigma, "sigma").map_err(|e| invalid(spec, e))?;
    let theta = build_involution(&g, &spec.algebra, &spec.theta, "theta").map_err(|e| invalid(spec, e))?;
    let l = build_subspace(&g, &dims, &sigma, &theta, &spec.l).map_err(|e| invalid(spec, e))?;
    for name in &spec.generators {
        if !crate::env2::Generators::names().contains(&name.as_str()) {
            return Err(invalid(spec, format!("unknown generator '{name}'")));
        }
    }
    let descriptor =
        TripleDescriptor::new(spec.name.clone(), g, sigma, theta, l).map_err(|e| invalid(spec, e))?;
    Ok(CatalogEntry { spec: spec.clone(), descriptor })
}

fn rats(v: &[RatLit]) -> Result<Vec<Q>, RatlinError> {
    v.iter().map(RatLit::value).collect()
}

fn build_involution(
    g: &LieAlgebra,
    alg: &AlgebraSpec,
    spec: &InvolutionSpec,
    name: &str,
) -> Result<Involution, PairsError> {
    match spec {
        InvolutionSpec::Identity => Ok(Involution::identity(g.dim())),
        InvolutionSpec::Swap => Involution::swap(g),
        InvolutionSpec::NegativeTranspose => Involution::negative_transpose(g, name),
        InvolutionSpec::Conjugation { diagonal } => Involution::conjugation(g, &RatMatrix::diagonal(&rats(diagonal)?), name),
        InvolutionSpec::Matrix { rows } => {
            let rows = rows.iter().map(|r| rats(r)).collect::<Result<Vec<_>, _>>()?;
            Involution::new(g, RatMatrix::from_rows(rows)?, name)
        }
        InvolutionSpec::Product { factors } => {
            let AlgebraSpec::DirectSum { summands } = alg else {
                return Err(LieError::Parameters("product involution needs a direct sum".into()).into());
            };
            if summands.len() != factors.len() {
                return Err(LieError::Parameters("one factor per summand".into()).into());
            }
            let built = summands
                .iter()
                .zip(factors)
                .map(|(s, f)| {
                    let a = s.build()?;
                    build_involution(&a, s, f, name)
                })
                .collect::<Result<Vec<_>, _>>()?;
            let refs: Vec<&Involution> = built.iter().collect();
            Involution::product(g, &refs, name)
        }
    }
}

fn build_subspace(
    g: &LieAlgebra,
    summand_dims: &[usize],
    sigma: &Involution,
    theta: &Involution,
    spec: &SubspaceSpec,
) -> Result<SubspaceBasis, PairsError> {
    let d = g.dim();
    let recurse = |s: &SubspaceSpec| build_subspace(g, summand_dims, sigma, theta, s);
    match spec {
        SubspaceSpec::Summand { index } => {
            let start: usize = summand_dims.iter().take(*index).sum();
            let len = *summand_dims.get(*index).ok_or_else(|| LieError::Parameters("summand index".into()))?;
            Ok(SubspaceBasis::span(d, (start..start + len).map(|i| g.basis_vector(i)).collect())?)
        }
        SubspaceSpec::FixedPoints { involution } => Ok(match involution {
            WhichInvolution::Sigma => eigenspace_split(sigma).0,
            WhichInvolution::Theta => eigenspace_split(theta).0,
        }),
        SubspaceSpec::Intersection { parts } => {
            let mut acc = SubspaceBasis::full(d);
            for p in parts {
                acc = acc.intersection(&recurse(p)?)?;
            }
            Ok(acc)
        }
        SubspaceSpec::Sum { parts } => {
            let mut acc = SubspaceBasis::zero(d);
            for p in parts {
                acc = acc.sum(&recurse(p)?)?;
            }
            Ok(acc)
        }
        SubspaceSpec::Image { algebra } => {
            let a = algebra.build()?;
            let mats = a.realization().ok_or(LieError::NoRealization)?;
            let vecs = mats
                .iter()
                .map(|m| g.matrix_coordinates(m)?.ok_or(LieError::NotSubalgebra))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(SubspaceBasis::span(d, vecs)?)
        }
        SubspaceSpec::Basis { vectors } => {
            let vecs = vectors.iter().map(|v| rats(v)).collect::<Result<Vec<_>, _>>()?;
            Ok(SubspaceBasis::span(d, vecs)?)
        }
    }
}
