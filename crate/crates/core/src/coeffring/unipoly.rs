//! Dense univariate polynomials over an exact scalar ring.

use super::Coeff;

/// A univariate polynomial; `coeffs[i]` is the coefficient of `X^i` and the
/// vector carries no trailing zeros (the zero polynomial is empty).
#[derive(Clone, PartialEq)]
pub struct UniPoly<S> {
    coeffs: Vec<S>,
}

impl<S: Coeff> std::fmt::Debug for UniPoly<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "UniPoly(0)");
        }
        let body = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c:?})*X^{i}"))
            .collect::<Vec<_>>()
            .join(" + ");
        write!(f, "UniPoly({body})")
    }
}

impl<S: Coeff> UniPoly<S> {
    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn from_coeffs(coeffs: Vec<S>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn constant(c: S) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * X^n`.
    pub fn monomial(c: S, n: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(n + 1);
        for _ in 0..n {
            coeffs.push(c.zero_like());
        }
        coeffs.push(c);
        UniPoly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&S> {
        self.coeffs.get(i).filter(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let zero = self.coeffs[0].zero_like();
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).unwrap_or(&zero);
            let b = other.coeffs.get(i).unwrap_or(&zero);
            out.push(a.add_ref(b));
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scalar_mul(&self, s: &S) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.mul_ref(s)).collect())
    }

    /// Multiplies by `X`.
    pub fn shift_up(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(self.coeffs[0].zero_like());
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    /// Horner evaluation inside any structure with compatible operations.
    pub fn eval_with<T: Clone>(
        &self,
        x: &T,
        embed: &mut dyn FnMut(&S) -> T,
        add: &mut dyn FnMut(&T, &T) -> T,
        mul: &mut dyn FnMut(&T, &T) -> T,
    ) -> Option<T> {
        let mut acc: Option<T> = None;
        for c in self.coeffs.iter().rev() {
            acc = Some(match acc {
                None => embed(c),
                Some(a) => add(&mul(&a, x), &embed(c)),
            });
        }
        acc
    }

    /// Map coefficients into another scalar ring.
    pub fn map_coeffs<T: Coeff>(&self, f: impl Fn(&S) -> T) -> UniPoly<T> {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| f(c)).collect())
    }
}
