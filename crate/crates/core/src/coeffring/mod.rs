//! Exact scalar arithmetic and sparse multivariate Laurent polynomials.
//!
//! Two scalar domains are kept deliberately separate at the type level:
//!
//! * [`CycloScalar`] - an element of the cyclotomic field `Q(zeta_d)`, used
//!   by every root-of-unity computation.  Arithmetic is exact; `q^d = 1` and
//!   `q^m != 1` for `0 < m < d` hold as scalar identities.
//! * [`GenericQScalar`] - a Laurent polynomial in an indeterminate `Q` over
//!   the rationals, used only for identities valid in `Z[Q^{±1}]`.
//!
//! [`MultiPoly`] is a sparse multivariate Laurent polynomial over either
//! scalar (or over plain rationals).  It is canonical: equal polynomials have
//! identical term maps, ordered lexicographically by exponent vector.

mod cyclo;
mod genericq;
pub mod linalg;
mod multipoly;
mod unipoly;

pub use cyclo::{dbar, euler_phi, CycloScalar};
pub use genericq::GenericQScalar;
pub use multipoly::{MultiPoly, VarRegistry};
pub use unipoly::UniPoly;

use thiserror::Error;

/// Exact rational number with arbitrary-precision numerator and denominator.
pub type Rational = num_rational::BigRational;

/// Errors reported by scalar and polynomial arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("root-of-unity order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("incompatible variable registries: {0}")]
    RegistryMismatch(String),
    #[error("negative exponent on non-Laurent variable {0}")]
    NegativeExponent(String),
    #[error("substituting Laurent variable {0} by a non-invertible polynomial")]
    NonInvertibleSubstitution(String),
    #[error("exact division left a nonzero remainder")]
    InexactDivision,
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("invalid serialized value: {0}")]
    BadSerialization(String),
}

/// A commutative-ring scalar usable as a polynomial coefficient.
///
/// Constructors are "like"-based (`zero_like`, `one_like`) because some
/// scalars carry construction context (a `CycloScalar` knows its order `d`),
/// so a context-free `zero()` would be ill-defined.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug + Send + Sync + 'static {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_i64_like(&self, n: i64) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

/// A scalar living in a field, so that exact division is available.
pub trait FieldCoeff: Coeff {
    fn inv_ref(&self) -> Result<Self, ArithError>;

    fn div_ref(&self, other: &Self) -> Result<Self, ArithError> {
        Ok(self.mul_ref(&other.inv_ref()?))
    }
}

/// Conversion to and from the canonical JSON form of a scalar.
pub trait JsonScalar: Sized {
    fn to_json(&self) -> serde_json::Value;
    fn from_json(value: &serde_json::Value) -> Result<Self, ArithError>;
}

impl Coeff for Rational {
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        num_traits::Zero::zero()
    }
    fn one_like(&self) -> Self {
        num_traits::One::one()
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Rational::from_integer(n.into())
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl FieldCoeff for Rational {
    fn inv_ref(&self) -> Result<Self, ArithError> {
        if Coeff::is_zero(self) {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self.recip())
    }
}

impl JsonScalar for Rational {
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(vec![bigint_json(self.numer()), bigint_json(self.denom())])
    }

    fn from_json(value: &serde_json::Value) -> Result<Self, ArithError> {
        json_rational(value)
    }
}

/// Renders a big integer as an arbitrary-precision JSON number.
pub(crate) fn bigint_json(n: &num_bigint::BigInt) -> serde_json::Value {
    let number: serde_json::Number = serde_json::from_str(&n.to_string())
        .expect("decimal integer is always a valid JSON number");
    serde_json::Value::Number(number)
}

pub(crate) fn json_bigint(value: &serde_json::Value) -> Result<num_bigint::BigInt, ArithError> {
    match value {
        serde_json::Value::Number(n) => n
            .to_string()
            .parse()
            .map_err(|_| ArithError::BadSerialization(format!("not an integer: {n}"))),
        other => Err(ArithError::BadSerialization(format!(
            "expected integer, found {other}"
        ))),
    }
}

pub(crate) fn json_rational(value: &serde_json::Value) -> Result<Rational, ArithError> {
    let pair = value
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| ArithError::BadSerialization("rational must be a [num, den] pair".into()))?;
    let numer = json_bigint(&pair[0])?;
    let denom = json_bigint(&pair[1])?;
    if num_traits::Zero::is_zero(&denom) {
        return Err(ArithError::BadSerialization("zero denominator".into()));
    }
    Ok(Rational::new(numer, denom))
}

/// Convenience constructor for small rationals.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
