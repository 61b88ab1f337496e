//! Laurent polynomials in an indeterminate `Q` over the rationals, kept as a
//! separate type so that generic-parameter code paths cannot silently mix
//! with root-of-unity code paths.

use super::{ArithError, CycloScalar, Rational};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// An element of `Q[Q^{±1}]` (no stored zero coefficients).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GenericQScalar {
    terms: BTreeMap<i64, Rational>,
}

impl std::fmt::Debug for GenericQScalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GenericQ({})", self.pretty())
    }
}

impl GenericQScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::q_pow(0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_terms([(0, Rational::from_integer(n.into()))])
    }

    /// `Q^e` for any integer exponent.
    pub fn q_pow(e: i64) -> Self {
        Self::from_terms([(e, Rational::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            let entry = map.entry(e).or_insert_with(Rational::zero);
            *entry = &*entry + &c;
        }
        map.retain(|_, c| !c.is_zero());
        GenericQScalar { terms: map }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Rational)> {
        self.terms.iter()
    }

    /// The balanced quantum integer `[n] = (Q^n - Q^{-n}) / (Q - Q^{-1})`.
    pub fn quantum_int(n: i64) -> Self {
        match n.cmp(&0) {
            std::cmp::Ordering::Equal => Self::zero(),
            std::cmp::Ordering::Greater => {
                Self::from_terms((0..n).map(|j| (n - 1 - 2 * j, Rational::one())))
            }
            std::cmp::Ordering::Less => {
                let pos = Self::quantum_int(-n);
                GenericQScalar {
                    terms: pos.terms.iter().map(|(e, c)| (*e, -c)).collect(),
                }
            }
        }
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn exact_div(&self, den: &Self) -> Result<Self, ArithError> {
        if den.terms.is_empty() {
            return Err(ArithError::DivisionByZero);
        }
        if self.terms.is_empty() {
            return Ok(Self::zero());
        }
        // Shift both to ordinary polynomials and divide there.
        let nmin = *self.terms.keys().next().unwrap();
        let dmin = *den.terms.keys().next().unwrap();
        let nmax = *self.terms.keys().next_back().unwrap();
        let dmax = *den.terms.keys().next_back().unwrap();
        let mut num = vec![Rational::zero(); (nmax - nmin + 1) as usize];
        for (e, c) in &self.terms {
            num[(e - nmin) as usize] = c.clone();
        }
        let mut divisor = vec![Rational::zero(); (dmax - dmin + 1) as usize];
        for (e, c) in &den.terms {
            divisor[(e - dmin) as usize] = c.clone();
        }
        let dd = divisor.len() - 1;
        if num.len() - 1 < dd {
            return Err(ArithError::InexactDivision);
        }
        let lead_inv = divisor[dd].recip();
        let mut quot = vec![Rational::zero(); num.len() - dd];
        let mut rem = num;
        while rem.len() > dd {
            let lead = rem.last().unwrap() * &lead_inv;
            let shift = rem.len() - 1 - dd;
            quot[shift] = lead.clone();
            for (k, c) in divisor.iter().enumerate() {
                rem[shift + k] = &rem[shift + k] - &(&lead * c);
            }
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
        }
        if !rem.is_empty() {
            return Err(ArithError::InexactDivision);
        }
        Ok(Self::from_terms(quot.into_iter().enumerate().map(|(i, c)| {
            (i as i64 + nmin - dmin, c)
        })))
    }

    /// Whether every coefficient is an integer (membership in `Z[Q^{±1}]`).
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    /// The ring morphism `Z[Q^{±1}] -> Q(zeta_d)` with `Q -> q`.
    pub fn specialize(&self, d: u32) -> CycloScalar {
        CycloScalar::from_terms(d, self.terms.iter().map(|(e, c)| (*e, c.clone())))
    }

    pub fn pretty(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(e, c)| match e {
                0 => c.to_string(),
                1 => format!("{c}*Q"),
                _ => format!("{c}*Q^{e}"),
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl super::Coeff for GenericQScalar {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Self::from_int(n)
    }
    fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = out.entry(*e).or_insert_with(Rational::zero);
            *entry = &*entry + c;
        }
        out.retain(|_, c| !num_traits::Zero::is_zero(c));
        GenericQScalar { terms: out }
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }
    fn mul_ref(&self, other: &Self) -> Self {
        let mut out: BTreeMap<i64, Rational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.checked_add(*e2).expect("exponent overflow");
                let entry = out.entry(e).or_insert_with(Rational::zero);
                *entry = &*entry + &(c1 * c2);
            }
        }
        out.retain(|_, c| !num_traits::Zero::is_zero(c));
        GenericQScalar { terms: out }
    }
    fn neg_ref(&self) -> Self {
        GenericQScalar {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::Coeff;
    use super::*;

    #[test]
    fn quantum_integers() {
        // [2] = Q + Q^{-1}; [0] = 0; [-3] = -[3].
        assert_eq!(
            GenericQScalar::quantum_int(2),
            GenericQScalar::from_terms([(1, Rational::from_integer(1.into())), (-1, Rational::from_integer(1.into()))])
        );
        assert!(GenericQScalar::quantum_int(0).terms.is_empty());
        assert_eq!(
            GenericQScalar::quantum_int(-3),
            GenericQScalar::quantum_int(3).neg_ref()
        );
    }

    #[test]
    fn exact_division_detects_remainders() {
        let num = GenericQScalar::quantum_int(4); // Q^3 + Q + Q^{-1} + Q^{-3}
        let den = GenericQScalar::quantum_int(2);
        let quotient = num.exact_div(&den).unwrap();
        // [4]/[2] = Q^2 + Q^{-2}.
        assert_eq!(
            quotient,
            GenericQScalar::from_terms([(2, Rational::from_integer(1.into())), (-2, Rational::from_integer(1.into()))])
        );
        let bad = GenericQScalar::one().exact_div(&den);
        assert_eq!(bad, Err(ArithError::InexactDivision));
    }

    #[test]
    fn specialization_is_a_ring_morphism() {
        let a = GenericQScalar::from_terms([(3, Rational::from_integer(2.into())), (-1, Rational::from_integer(5.into()))]);
        let b = GenericQScalar::quantum_int(3);
        let d = 5;
        assert_eq!(
            a.mul_ref(&b).specialize(d),
            a.specialize(d).mul_ref(&b.specialize(d))
        );
        assert_eq!(
            a.add_ref(&b).specialize(d),
            a.specialize(d).add_ref(&b.specialize(d))
        );
    }
}
