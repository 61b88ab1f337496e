//! The cyclotomic field `Q(zeta_d)`.
//!
//! A [`CycloScalar`] is a vector of `phi(d)` exact rationals representing an
//! element of `Q[q]` modulo the d-th cyclotomic polynomial.  The cyclotomic
//! polynomial is computed by the standard recursion (`x^d - 1` divided by all
//! lower cyclotomic polynomials) and cached per `d`; the cache tolerates
//! concurrent reads and idempotent concurrent writes.

use super::{bigint_json, json_rational, ArithError, Rational};
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

/// `d` if `d` is odd, `d/2` if `d` is even: the multiplicative order of `q^2`
/// when `q` is a primitive d-th root of unity.
pub fn dbar(d: u32) -> u32 {
    if d % 2 == 1 {
        d
    } else {
        d / 2
    }
}

/// Euler's totient.
pub fn euler_phi(d: u32) -> u32 {
    let mut n = d;
    let mut result = d;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Monic modulus of degree `phi`; `lower` holds the coefficients of
/// `x^0 ..= x^{phi-1}`.
#[derive(Debug)]
struct CycloModulus {
    phi: usize,
    lower: Vec<Rational>,
}

fn modulus_cache() -> &'static RwLock<HashMap<u32, Arc<CycloModulus>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<CycloModulus>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Dense polynomial division in `Q[x]`; panics if the divisor is not monic
/// after normalization (internal use only, divisors are cyclotomic).
fn poly_div_exact(num: &[Rational], den: &[Rational]) -> Vec<Rational> {
    let mut rem: Vec<Rational> = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "cyclotomic divisor must be monic");
    let mut quot = vec![Rational::zero(); rem.len().saturating_sub(dd)];
    while rem.len() > dd {
        let lead = rem.last().unwrap().clone();
        let shift = rem.len() - 1 - dd;
        if !lead.is_zero() {
            quot[shift] = lead.clone();
            for (k, c) in den.iter().enumerate() {
                let idx = shift + k;
                rem[idx] = &rem[idx] - &(&lead * c);
            }
        }
        rem.pop();
        while rem.len() > dd && rem.last().map_or(false, |c| c.is_zero()) {
            if rem.len() - 1 > dd {
                rem.pop();
            } else {
                break;
            }
        }
    }
    assert!(
        rem.iter().all(|c| c.is_zero()),
        "cyclotomic recursion produced a nonzero remainder"
    );
    quot
}

fn compute_modulus(d: u32) -> Arc<CycloModulus> {
    // x^d - 1 divided by the product of Phi_e over proper divisors e of d.
    let mut num = vec![Rational::zero(); d as usize + 1];
    num[0] = -Rational::one();
    num[d as usize] = Rational::one();
    let mut current = num;
    for e in 1..d {
        if d % e == 0 {
            let lower = modulus(e);
            let mut den = lower.lower.clone();
            den.push(Rational::one());
            current = poly_div_exact(&current, &den);
        }
    }
    let phi = current.len() - 1;
    debug_assert_eq!(phi as u32, euler_phi(d));
    current.pop();
    Arc::new(CycloModulus {
        phi,
        lower: current,
    })
}

fn modulus(d: u32) -> Arc<CycloModulus> {
    if let Some(m) = modulus_cache().read().unwrap().get(&d) {
        return m.clone();
    }
    let computed = compute_modulus(d);
    let mut guard = modulus_cache().write().unwrap();
    guard.entry(d).or_insert(computed).clone()
}

/// An element of the cyclotomic field `Q(zeta_d)`, fully reduced modulo the
/// d-th cyclotomic polynomial.
#[derive(Clone, PartialEq, Eq)]
pub struct CycloScalar {
    d: u32,
    coeffs: Vec<Rational>,
}

impl std::fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cyclo(d={}, {})", self.d, self.pretty())
    }
}

impl CycloScalar {
    pub fn zero(d: u32) -> Self {
        assert!(d >= 1, "order must be positive");
        CycloScalar {
            d,
            coeffs: vec![Rational::zero(); euler_phi(d) as usize],
        }
    }

    pub fn one(d: u32) -> Self {
        Self::from_rational(d, Rational::one())
    }

    pub fn from_rational(d: u32, r: Rational) -> Self {
        let mut s = Self::zero(d);
        s.coeffs[0] = r;
        s
    }

    pub fn from_int(d: u32, n: i64) -> Self {
        Self::from_rational(d, Rational::from_integer(n.into()))
    }

    /// The class of the indeterminate: a primitive d-th root of unity.
    pub fn q(d: u32) -> Self {
        Self::q_pow(d, 1)
    }

    /// `q^e` for any integer exponent, using `q^d = 1`.
    pub fn q_pow(d: u32, e: i64) -> Self {
        let e = e.rem_euclid(d as i64) as u32;
        Self::from_terms(d, [(e as i64, Rational::one())])
    }

    /// Builds the reduction of an integer-coefficient polynomial in `q`.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(d: u32, terms: I) -> Self {
        let m = modulus(d);
        let mut dense = vec![Rational::zero(); d as usize + m.phi];
        for (e, c) in terms {
            let e = e.rem_euclid(d as i64) as usize;
            dense[e] = &dense[e] + &c;
        }
        Self::reduce(d, dense)
    }

    fn reduce(d: u32, mut dense: Vec<Rational>) -> Self {
        let m = modulus(d);
        let phi = m.phi;
        for deg in (phi..dense.len()).rev() {
            if dense[deg].is_zero() {
                continue;
            }
            let lead = std::mem::replace(&mut dense[deg], Rational::zero());
            let shift = deg - phi;
            for (k, c) in m.lower.iter().enumerate() {
                if !c.is_zero() {
                    dense[shift + k] = &dense[shift + k] - &(&lead * c);
                }
            }
        }
        dense.truncate(phi);
        dense.resize(phi, Rational::zero());
        CycloScalar { d, coeffs: dense }
    }

    pub fn order(&self) -> u32 {
        self.d
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The rational value of a scalar that lies in the prime field, if any.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_order(&self, other: &Self) -> Result<(), ArithError> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(ArithError::OrderMismatch(self.d, other.d))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_order(other)?;
        Ok(CycloScalar {
            d: self.d,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_order(other)?;
        Ok(CycloScalar {
            d: self.d,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_order(other)?;
        let phi = self.coeffs.len();
        let mut dense = vec![Rational::zero(); 2 * phi];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    dense[i + j] = &dense[i + j] + &(a * b);
                }
            }
        }
        Ok(Self::reduce(self.d, dense))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in `Q[x]`.
    pub fn checked_inv(&self) -> Result<Self, ArithError> {
        if self.coeffs.iter().all(|c| c.is_zero()) {
            return Err(ArithError::DivisionByZero);
        }
        let m = modulus(self.d);
        // r0 = modulus, r1 = self; maintain t0, t1 with t * self = r (mod Phi_d).
        let mut r0: Vec<Rational> = m.lower.clone();
        r0.push(Rational::one());
        let mut r1 = self.coeffs.clone();
        trim(&mut r1);
        let mut t0: Vec<Rational> = vec![];
        let mut t1: Vec<Rational> = vec![Rational::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let t = poly_sub(&t0, &poly_mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t);
        }
        // r0 is now a degree-0 gcd (the cyclotomic polynomial is irreducible).
        assert_eq!(r0.len(), 1, "cyclotomic modulus must be coprime to units");
        let scale = r0[0].recip();
        let inv: Vec<(i64, Rational)> = t0
            .iter()
            .enumerate()
            .map(|(i, c)| (i as i64, c * &scale))
            .collect();
        Ok(Self::from_terms(self.d, inv))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_order(other)?;
        self.checked_mul(&other.checked_inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.d);
        for _ in 0..e {
            acc = acc.checked_mul(self).unwrap();
        }
        acc
    }

    pub fn pretty(&self) -> String {
        let mut parts = vec![];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = match i {
                0 => c.to_string(),
                1 => format!("{c}*q"),
                _ => format!("{c}*q^{i}"),
            };
            parts.push(body);
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] = out[i].clone() + c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] = &out[i] - c;
    }
    trim(&mut out);
    out
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    trim(&mut out);
    out
}

fn poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = num.to_vec();
    trim(&mut rem);
    let dd = den.len() - 1;
    let lead_inv = den[dd].recip();
    let mut quot = vec![Rational::zero(); rem.len().saturating_sub(dd)];
    while rem.len() > dd {
        let lead = rem.last().unwrap() * &lead_inv;
        let shift = rem.len() - 1 - dd;
        quot[shift] = lead.clone();
        for (k, c) in den.iter().enumerate() {
            rem[shift + k] = &rem[shift + k] - &(&lead * c);
        }
        rem.pop();
        trim(&mut rem);
    }
    (quot, rem)
}

impl super::Coeff for CycloScalar {
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| num_traits::Zero::is_zero(c))
    }
    fn zero_like(&self) -> Self {
        Self::zero(self.d)
    }
    fn one_like(&self) -> Self {
        Self::one(self.d)
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Self::from_int(self.d, n)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.checked_add(other).expect("order mismatch")
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("order mismatch")
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("order mismatch")
    }
    fn neg_ref(&self) -> Self {
        CycloScalar {
            d: self.d,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl super::FieldCoeff for CycloScalar {
    fn inv_ref(&self) -> Result<Self, ArithError> {
        self.checked_inv()
    }
}

impl super::JsonScalar for CycloScalar {
    fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "d": self.d,
            "coeffs": self
                .coeffs
                .iter()
                .map(|c| serde_json::Value::Array(vec![bigint_json(c.numer()), bigint_json(c.denom())]))
                .collect::<Vec<_>>(),
        })
    }

    fn from_json(value: &serde_json::Value) -> Result<Self, ArithError> {
        let d = value
            .get("d")
            .and_then(|v| v.as_u64())
            .filter(|&d| d >= 1)
            .ok_or_else(|| ArithError::BadSerialization("scalar needs a positive d".into()))?
            as u32;
        let coeffs = value
            .get("coeffs")
            .and_then(|v| v.as_array())
            .ok_or_else(|| ArithError::BadSerialization("scalar needs coeffs".into()))?;
        if coeffs.len() != euler_phi(d) as usize {
            return Err(ArithError::BadSerialization(format!(
                "scalar for d={d} needs phi(d)={} coefficients, found {}",
                euler_phi(d),
                coeffs.len()
            )));
        }
        let coeffs = coeffs
            .iter()
            .map(json_rational)
            .collect::<Result<Vec<_>, _>>()?;
        if coeffs.iter().any(|c| c.denom().is_negative()) {
            return Err(ArithError::BadSerialization("denominator must be positive".into()));
        }
        Ok(CycloScalar { d, coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::super::{Coeff, FieldCoeff};
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cyclotomic_polynomials_match_known_tables() {
        // Phi_1 = x - 1, Phi_4 = x^2 + 1, Phi_6 = x^2 - x + 1, Phi_12 = x^4 - x^2 + 1.
        let m = modulus(4);
        assert_eq!(m.phi, 2);
        assert_eq!(m.lower, vec![Rational::from_integer(1.into()), Rational::from_integer(0.into())]);
        let m = modulus(6);
        assert_eq!(m.phi, 2);
        assert_eq!(m.lower, vec![Rational::from_integer(1.into()), Rational::from_integer((-1).into())]);
        let m = modulus(12);
        assert_eq!(m.phi, 4);
        assert_eq!(
            m.lower,
            vec![
                Rational::from_integer(1.into()),
                Rational::from_integer(0.into()),
                Rational::from_integer((-1).into()),
                Rational::from_integer(0.into())
            ]
        );
    }

    #[test]
    fn primitive_root_relations() {
        // q^2 = -1 at d = 4.
        let q = CycloScalar::q(4);
        assert_eq!(q.pow(2), CycloScalar::from_int(4, -1));
        // zeta_1 = 1.
        assert_eq!(CycloScalar::q(1), CycloScalar::one(1));
        // q^d = 1 at d = 5.
        assert_eq!(CycloScalar::q_pow(5, 5), CycloScalar::one(5));
    }

    #[test]
    fn arithmetic_examples() {
        // d=3: q + q^2 = -1.
        let s = CycloScalar::q(3).checked_add(&CycloScalar::q_pow(3, 2)).unwrap();
        assert_eq!(s, CycloScalar::from_int(3, -1));
        // d=5: (q - q^{-1}) * (q - q^{-1})^{-1} = 1.
        let x = CycloScalar::q(5).checked_sub(&CycloScalar::q_pow(5, -1)).unwrap();
        assert_eq!(x.checked_mul(&x.checked_inv().unwrap()).unwrap(), CycloScalar::one(5));
        // d=6: q^3 reduces to -1 (frozen from long division by q^2 - q + 1).
        assert_eq!(CycloScalar::q_pow(6, 3), CycloScalar::from_int(6, -1));
    }

    #[test]
    fn q_power_identities() {
        for d in 1..=12u32 {
            let db = dbar(d);
            // q^{dbar(dbar-1)} = (-1)^{dbar-1}.
            let lhs = CycloScalar::q_pow(d, (db as i64) * (db as i64 - 1));
            let rhs = CycloScalar::from_int(d, if (db - 1) % 2 == 0 { 1 } else { -1 });
            assert_eq!(lhs, rhs, "d={d}");
            // q^i - q^{-i} = 0 iff dbar divides i (dbar is the order of q^2).
            for i in 0..(3 * db as i64) {
                let diff = CycloScalar::q_pow(d, i)
                    .checked_sub(&CycloScalar::q_pow(d, -i))
                    .unwrap();
                assert_eq!(Coeff::is_zero(&diff), i % db as i64 == 0, "d={d} i={i}");
            }
            // q^m != 1 for 0 < m < d.
            for m in 1..d as i64 {
                assert_ne!(CycloScalar::q_pow(d, m), CycloScalar::one(d), "d={d} m={m}");
            }
        }
    }

    #[test]
    fn order_mismatch_and_zero_division_error() {
        let a = CycloScalar::q(3);
        let b = CycloScalar::q(4);
        assert_eq!(a.checked_add(&b), Err(ArithError::OrderMismatch(3, 4)));
        assert_eq!(
            a.checked_div(&CycloScalar::zero(3)),
            Err(ArithError::DivisionByZero)
        );
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let x = CycloScalar::from_terms(
            12,
            [(1, Rational::new(22.into(), 7.into())), (7, Rational::new((-5).into(), 3.into()))],
        );
        let json = super::super::JsonScalar::to_json(&x);
        let text = serde_json::to_string(&json).unwrap();
        let back: serde_json::Value = serde_json::from_str(&text).unwrap();
        let y = <CycloScalar as super::super::JsonScalar>::from_json(&back).unwrap();
        assert_eq!(x, y);
        assert_eq!(text, serde_json::to_string(&super::super::JsonScalar::to_json(&y)).unwrap());
    }

    fn arb_scalar(d: u32) -> impl Strategy<Value = CycloScalar> {
        proptest::collection::vec((-6i64..=6, 1i64..=4), 0..4).prop_map(move |parts| {
            CycloScalar::from_terms(
                d,
                parts
                    .into_iter()
                    .enumerate()
                    .map(|(i, (n, den))| (i as i64, Rational::new(n.into(), den.into()))),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms_hold_exactly(
            x in arb_scalar(12), y in arb_scalar(12), z in arb_scalar(12)
        ) {
            let assoc_add = x.add_ref(&y).add_ref(&z);
            prop_assert_eq!(assoc_add, x.add_ref(&y.add_ref(&z)));
            let assoc_mul = x.mul_ref(&y).mul_ref(&z);
            prop_assert_eq!(assoc_mul, x.mul_ref(&y.mul_ref(&z)));
            prop_assert_eq!(x.mul_ref(&y), y.mul_ref(&x));
            let distrib = x.mul_ref(&y.add_ref(&z));
            prop_assert_eq!(distrib, x.mul_ref(&y).add_ref(&x.mul_ref(&z)));
        }

        #[test]
        fn field_inverse(x in arb_scalar(7)) {
            prop_assume!(!Coeff::is_zero(&x));
            let inv = x.inv_ref().unwrap();
            prop_assert_eq!(x.mul_ref(&inv), CycloScalar::one(7));
        }
    }
}
