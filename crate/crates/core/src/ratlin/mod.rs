//! Exact rational linear algebra.
//!
//! Everything downstream (structure constants, Killing forms, enveloping
//! algebra coefficients) is a [`BigRational`], so there is no floating point
//! anywhere in the crate. Elimination is done fraction-free on integer rows
//! and only normalized to rationals when a reduced echelon form is needed.

mod matrix;
mod poly;
mod subspace;

pub use matrix::{Echelon, RatMatrix};
pub use poly::RatPoly;
pub use subspace::SubspaceBasis;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

/// The scalar field of the whole crate.
pub type Q = BigRational;

/// Shorthand for an integer-valued rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`.
pub fn qr(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RatlinError {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("shape mismatch: expected {expected}, got {got}")]
    Shape { expected: String, got: String },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is singular")]
    Singular,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

/// Parses `"p"` or `"p/q"`. Decimal points are rejected on purpose.
pub fn parse_rational(s: &str) -> Result<Q, RatlinError> {
    let t = s.trim();
    let err = || RatlinError::Parse(s.to_string());
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| err())?;
            let d: BigInt = d.trim().parse().map_err(|_| err())?;
            if d == BigInt::from(0) {
                return Err(err());
            }
            Ok(Q::new(n, d))
        }
        None => {
            let n: BigInt = t.parse().map_err(|_| err())?;
            Ok(Q::from_integer(n))
        }
    }
}

/// `(positive, negative, zero)` counts of a symmetric form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn new(positive: usize, negative: usize, zero: usize) -> Self {
        Self { positive, negative, zero }
    }
}

impl std::fmt::Display for Inertia {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.positive, self.negative, self.zero)
    }
}

pub fn rank(m: &RatMatrix) -> usize {
    m.rank()
}

pub fn kernel(m: &RatMatrix) -> SubspaceBasis {
    m.kernel()
}

pub fn solve(m: &RatMatrix, v: &[Q]) -> Result<Option<Vec<Q>>, RatlinError> {
    m.solve(v)
}

pub fn signature(s: &RatMatrix) -> Result<Inertia, RatlinError> {
    s.signature()
}

pub fn subspace_sum(a: &SubspaceBasis, b: &SubspaceBasis) -> Result<SubspaceBasis, RatlinError> {
    a.sum(b)
}

pub fn subspace_intersection(
    a: &SubspaceBasis,
    b: &SubspaceBasis,
) -> Result<SubspaceBasis, RatlinError> {
    a.intersection(b)
}

/// Serde adapters writing rationals as `"p/q"` strings.
pub mod serde_q {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    use super::{parse_rational, Q};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(x)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(D::Error::custom)
    }

    pub mod opt {
        use super::*;

        pub fn serialize<S: Serializer>(x: &Option<Q>, s: S) -> Result<S::Ok, S::Error> {
            match x {
                Some(x) => s.collect_str(x),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Q>, D::Error> {
            Option::<String>::deserialize(d)?
                .map(|s| parse_rational(&s).map_err(D::Error::custom))
                .transpose()
        }
    }

    pub mod vec {
        use serde::ser::SerializeSeq;

        use super::*;

        pub fn serialize<S: Serializer>(x: &[Q], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(x.len()))?;
            for v in x {
                seq.serialize_element(&v.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Q>, D::Error> {
            Vec::<String>::deserialize(d)?
                .iter()
                .map(|s| parse_rational(s).map_err(D::Error::custom))
                .collect()
        }
    }
}

pub(crate) fn dot(a: &[Q], b: &[Q]) -> Q {
    let mut acc = Q::from_integer(BigInt::from(0));
    for (x, y) in a.iter().zip(b) {
        if !num_traits::Zero::is_zero(x) && !num_traits::Zero::is_zero(y) {
            acc += x * y;
        }
    }
    acc
}

pub(crate) fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(num_traits::Zero::is_zero)
}
