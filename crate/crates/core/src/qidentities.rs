//! Identities in a two-generator quantum torus, and the `P/Q/R/S` recurrence
//! system with its evaluations at the Laurent points `Theta_i(Y)`.
//!
//! The model is an algebra with elements in normal form `R^i S^j` (with `R`
//! invertible and `S` not) subject to the single reordering rule
//! `S R = Q^2 R S`.  Two scalar instantiations are used: `Z[Q^{±1}]` for
//! generic-parameter statements and `Q(zeta_d)` for the root-of-unity
//! collapses `(R+S)^dbar = R^dbar + S^dbar` and
//! `T_dbar(R + S + R^{-1}) = R^dbar + S^dbar + R^{-dbar}`.

use crate::chebyshev::cheb_t;
use crate::coeffring::{
    dbar, ArithError, Coeff, CycloScalar, GenericQScalar, MultiPoly, Rational, UniPoly,
    VarRegistry,
};
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QIdentityError {
    #[error("a Gaussian binomial product left Z[Q^(+-1)]: {0}")]
    NotLaurent(String),
    #[error("Theta evaluation formulas require dbar > 2, got dbar = {0}")]
    DbarTooSmall(u32),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Scalars that carry a distinguished parameter `q` with integer powers.
pub trait QLike: Coeff {
    fn q_pow_like(&self, e: i64) -> Self;
}

impl QLike for GenericQScalar {
    fn q_pow_like(&self, e: i64) -> Self {
        GenericQScalar::q_pow(e)
    }
}

impl QLike for CycloScalar {
    fn q_pow_like(&self, e: i64) -> Self {
        CycloScalar::q_pow(self.order(), e)
    }
}

/// Ring context for the quantum torus over the scalar `S` (holds the scalar
/// unit, which fixes the root-of-unity order in the cyclotomic instantiation).
#[derive(Clone)]
pub struct QTorus<S> {
    pub unit: S,
}

/// Normal form `sum c_{i,j} R^i S^j` with `i` any integer, `j >= 0`.
#[derive(Clone, PartialEq, Debug)]
pub struct QTorusElement<S> {
    terms: BTreeMap<(i64, u32), S>,
}

impl<S> QTorusElement<S> {
    pub fn terms(&self) -> impl Iterator<Item = (&(i64, u32), &S)> {
        self.terms.iter()
    }
}

impl<S: QLike> QTorus<S> {
    pub fn new(unit: S) -> Self {
        QTorus { unit }
    }

    pub fn zero(&self) -> QTorusElement<S> {
        QTorusElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(&self, r: i64, s: u32, c: S) -> QTorusElement<S> {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((r, s), c);
        }
        QTorusElement { terms }
    }

    pub fn one(&self) -> QTorusElement<S> {
        self.monomial(0, 0, self.unit.clone())
    }

    pub fn r_pow(&self, i: i64) -> QTorusElement<S> {
        self.monomial(i, 0, self.unit.clone())
    }

    pub fn s_gen(&self) -> QTorusElement<S> {
        self.monomial(0, 1, self.unit.clone())
    }

    pub fn add(&self, a: &QTorusElement<S>, b: &QTorusElement<S>) -> QTorusElement<S> {
        let mut terms = a.terms.clone();
        for (k, c) in &b.terms {
            match terms.get_mut(k) {
                Some(v) => {
                    let sum = v.add_ref(c);
                    if sum.is_zero() {
                        terms.remove(k);
                    } else {
                        *v = sum;
                    }
                }
                None => {
                    terms.insert(*k, c.clone());
                }
            }
        }
        QTorusElement { terms }
    }

    pub fn sub(&self, a: &QTorusElement<S>, b: &QTorusElement<S>) -> QTorusElement<S> {
        let neg = QTorusElement {
            terms: b.terms.iter().map(|(k, c)| (*k, c.neg_ref())).collect(),
        };
        self.add(a, &neg)
    }

    /// `(R^i S^j)(R^k S^l) = q^{2jk} R^{i+k} S^{j+l}`.
    pub fn mul(&self, a: &QTorusElement<S>, b: &QTorusElement<S>) -> QTorusElement<S> {
        let mut out = self.zero();
        for (&(i, j), c1) in &a.terms {
            for (&(k, l), c2) in &b.terms {
                let phase = self.unit.q_pow_like(2 * (j as i64) * k);
                let c = c1.mul_ref(c2).mul_ref(&phase);
                let mono = self.monomial(i + k, j + l, c);
                out = self.add(&out, &mono);
            }
        }
        out
    }

    pub fn pow(&self, a: &QTorusElement<S>, e: u32) -> QTorusElement<S> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Evaluates a univariate polynomial over `S` at a torus element.
    pub fn eval_poly(&self, p: &UniPoly<S>, x: &QTorusElement<S>) -> QTorusElement<S> {
        let mut acc = self.zero();
        for c in p.coeffs().iter().rev() {
            acc = self.mul(&acc, x);
            let c_term = self.monomial(0, 0, c.clone());
            acc = self.add(&acc, &c_term);
        }
        acc
    }
}

/// The Gaussian binomial coefficient as an element of `Z[Q^{±1}]`:
/// the product over `j = 1..=i` of `[n-j+1]/[j]`, computed by exact Laurent
/// division and asserted to be denominator free.
pub fn gauss_binomial(n: i64, i: u32) -> Result<GenericQScalar, QIdentityError> {
    let mut num = GenericQScalar::one();
    let mut den = GenericQScalar::one();
    for j in 1..=i as i64 {
        num = num.mul_ref(&GenericQScalar::quantum_int(n - j + 1));
        den = den.mul_ref(&GenericQScalar::quantum_int(j));
    }
    let out = num
        .exact_div(&den)
        .map_err(|_| QIdentityError::NotLaurent(format!("[{n} choose {i}]")))?;
    if !out.is_integral() {
        return Err(QIdentityError::NotLaurent(format!("[{n} choose {i}]")));
    }
    Ok(out)
}

/// Scalar instantiation selector for the torus checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QMode {
    Generic,
    Root(u32),
}

fn expand_qbinomial<S: QLike>(
    ctx: &QTorus<S>,
    n: u32,
    coeff: &mut dyn FnMut(u32) -> Result<S, QIdentityError>,
) -> Result<(QTorusElement<S>, QTorusElement<S>), QIdentityError> {
    let r_plus_s = ctx.add(&ctx.r_pow(1), &ctx.s_gen());
    let lhs = ctx.pow(&r_plus_s, n);
    let mut rhs = ctx.zero();
    for i in 0..=n {
        let c = coeff(i)?.mul_ref(&ctx.unit.q_pow_like(i as i64 * (n - i) as i64));
        let term = ctx.monomial((n - i) as i64, i, c);
        rhs = ctx.add(&rhs, &term);
    }
    Ok((lhs, rhs))
}

/// Expands `(R+S)^n` in normal form and compares it with
/// `sum_i [n i] Q^{i(n-i)} R^{n-i} S^i`; in root mode additionally checks the
/// collapse `(R+S)^dbar = R^dbar + S^dbar`.
pub fn qbinomial_theorem_check(n: u32, mode: QMode) -> Result<bool, QIdentityError> {
    match mode {
        QMode::Generic => {
            let ctx = QTorus::new(GenericQScalar::one());
            let (lhs, rhs) = expand_qbinomial(&ctx, n, &mut |i| gauss_binomial(n as i64, i))?;
            Ok(lhs == rhs)
        }
        QMode::Root(d) => {
            let ctx = QTorus::new(CycloScalar::one(d));
            let (lhs, rhs) = expand_qbinomial(&ctx, n, &mut |i| {
                Ok(gauss_binomial(n as i64, i)?.specialize(d))
            })?;
            let db = dbar(d);
            let r_plus_s = ctx.add(&ctx.r_pow(1), &ctx.s_gen());
            let collapse_lhs = ctx.pow(&r_plus_s, db);
            let collapse_rhs = ctx.add(
                &ctx.r_pow(db as i64),
                &ctx.monomial(0, db, ctx.unit.clone()),
            );
            Ok(lhs == rhs && collapse_lhs == collapse_rhs)
        }
    }
}

/// The inner coefficient of the `T_n(R + S + R^{-1})` expansion:
/// `([n]/[i]) [i+j-1, i-1] [n-j-1, i-1]`, computed with a single exact
/// division so that only the full product needs to lie in `Z[Q^{±1}]`.
fn iorgov_coefficient(n: u32, i: u32, j: u32) -> Result<GenericQScalar, QIdentityError> {
    let num = GenericQScalar::quantum_int(n as i64)
        .mul_ref(&gauss_binomial((i + j) as i64 - 1, i - 1)?)
        .mul_ref(&gauss_binomial((n - j) as i64 - 1, i - 1)?);
    let out = num
        .exact_div(&GenericQScalar::quantum_int(i as i64))
        .map_err(|_| QIdentityError::NotLaurent(format!("inner coefficient ({n},{i},{j})")))?;
    if !out.is_integral() {
        return Err(QIdentityError::NotLaurent(format!(
            "inner coefficient ({n},{i},{j})"
        )));
    }
    Ok(out)
}

fn cheb_into<S: QLike>(n: u32, unit: &S) -> UniPoly<S> {
    cheb_t(n).map_coeffs(|c: &Rational| {
        let num: i64 = i64::try_from(c.numer().clone()).expect("Chebyshev coefficients fit i64");
        unit.from_i64_like(num)
    })
}

fn expand_iorgov<S: QLike>(
    ctx: &QTorus<S>,
    n: u32,
    coeff: &mut dyn FnMut(u32, u32) -> Result<S, QIdentityError>,
) -> Result<(QTorusElement<S>, QTorusElement<S>), QIdentityError> {
    let arg = ctx.add(&ctx.add(&ctx.r_pow(1), &ctx.s_gen()), &ctx.r_pow(-1));
    let lhs = ctx.eval_poly(&cheb_into(n, &ctx.unit), &arg);
    let mut rhs = ctx.add(&ctx.r_pow(n as i64), &ctx.r_pow(-(n as i64)));
    for i in 1..=n {
        for j in 0..=n - i {
            let c = coeff(i, j)?;
            let c = c.mul_ref(
                &ctx.unit
                    .q_pow_like(i as i64 * (n as i64 - i as i64 - 2 * j as i64)),
            );
            let term = ctx.monomial(n as i64 - i as i64 - 2 * j as i64, i, c);
            rhs = ctx.add(&rhs, &term);
        }
    }
    Ok((lhs, rhs))
}

/// Expands `T_n(R + S + R^{-1})` in normal form and compares it with the
/// closed double sum; in root mode additionally checks the collapse
/// `T_dbar(R + S + R^{-1}) = R^dbar + S^dbar + R^{-dbar}`.
pub fn iorgov_identity_check(n: u32, mode: QMode) -> Result<bool, QIdentityError> {
    match mode {
        QMode::Generic => {
            let ctx = QTorus::new(GenericQScalar::one());
            let (lhs, rhs) = expand_iorgov(&ctx, n, &mut |i, j| iorgov_coefficient(n, i, j))?;
            Ok(lhs == rhs)
        }
        QMode::Root(d) => {
            let ctx = QTorus::new(CycloScalar::one(d));
            let (lhs, rhs) = expand_iorgov(&ctx, n, &mut |i, j| {
                Ok(iorgov_coefficient(n, i, j)?.specialize(d))
            })?;
            let db = dbar(d);
            let arg = ctx.add(&ctx.add(&ctx.r_pow(1), &ctx.s_gen()), &ctx.r_pow(-1));
            let collapse_lhs = ctx.eval_poly(&cheb_into(db, &ctx.unit), &arg);
            let collapse_rhs = ctx.add(
                &ctx.add(
                    &ctx.r_pow(db as i64),
                    &ctx.monomial(0, db, ctx.unit.clone()),
                ),
                &ctx.r_pow(-(db as i64)),
            );
            Ok(lhs == rhs && collapse_lhs == collapse_rhs)
        }
    }
}

/// Registry holding the single Laurent variable `Y`.
pub fn registry_y() -> Arc<VarRegistry> {
    VarRegistry::new(&[("Y", true)])
}

/// `Theta_i(Y) = q^{2i} Y^{-1} + q^{-2i} Y` as a Laurent polynomial over
/// `Q(zeta_d)`.
pub fn theta(i: i64, d: u32) -> MultiPoly<CycloScalar> {
    let reg = registry_y();
    MultiPoly::monomial(reg.clone(), "Y", -1, CycloScalar::q_pow(d, 2 * i))
        .unwrap()
        .add(&MultiPoly::monomial(reg, "Y", 1, CycloScalar::q_pow(d, -2 * i)).unwrap())
}

fn eval_unipoly_at_laurent(
    p: &UniPoly<CycloScalar>,
    x: &MultiPoly<CycloScalar>,
) -> MultiPoly<CycloScalar> {
    let reg = x.registry().clone();
    let mut acc = MultiPoly::zero(reg.clone());
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x);
        acc = acc.add(&MultiPoly::constant(reg.clone(), c.clone()));
    }
    acc
}

/// `T_n` with coefficients moved into `Q(zeta_d)`.
pub fn cheb_t_cyclo(n: u32, d: u32) -> UniPoly<CycloScalar> {
    cheb_t(n).map_coeffs(|c: &Rational| CycloScalar::from_rational(d, c.clone()))
}

/// Verifies the `Theta` identities:
///
/// * `Theta_i(Y) = Theta_j(Y)` iff `dbar` divides `i - j`, over `0 <= i, j < 2 dbar`;
/// * `T_dbar(Theta_i(Y)) = Y^dbar + Y^{-dbar}`;
/// * `T_dbar(X) = prod_{i=0}^{dbar-1} (X - Theta_i(Y)) + Y^dbar + Y^{-dbar}`
///   as an identity in `X` and `Y`.
pub fn theta_identities_check(d: u32) -> bool {
    let db = dbar(d);
    for i in 0..2 * db as i64 {
        for j in 0..2 * db as i64 {
            let equal = theta(i, d) == theta(j, d);
            if equal != ((i - j) % db as i64 == 0) {
                return false;
            }
        }
    }
    let reg = registry_y();
    let y_sym = MultiPoly::monomial(reg.clone(), "Y", db as i64, CycloScalar::one(d))
        .unwrap()
        .add(&MultiPoly::monomial(reg.clone(), "Y", -(db as i64), CycloScalar::one(d)).unwrap());
    for i in 0..db as i64 {
        let t = eval_unipoly_at_laurent(&cheb_t_cyclo(db, d), &theta(i, d));
        if t != y_sym {
            return false;
        }
    }
    // The product formula, in the two-variable ring.
    let reg2 = VarRegistry::new(&[("X", false), ("Y", true)]);
    let x = MultiPoly::monomial(reg2.clone(), "X", 1, CycloScalar::one(d)).unwrap();
    let mut product = MultiPoly::constant(reg2.clone(), CycloScalar::one(d));
    for i in 0..db as i64 {
        product = product.mul(&x.sub(&theta(i, d).embed(&reg2).unwrap()));
    }
    let mut t_of_x = MultiPoly::zero(reg2.clone());
    for (k, c) in cheb_t_cyclo(db, d).coeffs().iter().enumerate() {
        if !c.is_zero() {
            t_of_x =
                t_of_x.add(&MultiPoly::monomial(reg2.clone(), "X", k as i64, c.clone()).unwrap());
        }
    }
    let rhs = product.add(&y_sym.embed(&reg2).unwrap());
    t_of_x == rhs
}

/// The polynomials `P_n, Q_n, R_n, S_n` over `Q(zeta_d)` defined by
/// `P_0 = 1`, `Q_0 = R_0 = S_0 = 0` and
///
/// ```text
/// P_n = q^2 X P_{n-1} - q^{-1}(q^2 - q^{-2}) Q_{n-1}
/// Q_n = q^{-2} X Q_{n-1} + q(q^2 - q^{-2}) P_{n-1}
/// R_n = X R_{n-1} + q^{-1}(q - q^{-1}) Q_{n-1}
/// S_n = X S_{n-1} - q(q - q^{-1}) P_{n-1}
/// ```
pub fn pqrs(n: u32, d: u32) -> [UniPoly<CycloScalar>; 4] {
    let q = |e: i64| CycloScalar::q_pow(d, e);
    let q2_minus = q(2).sub_ref(&q(-2));
    let q1_minus = q(1).sub_ref(&q(-1));
    let mut p = UniPoly::constant(CycloScalar::one(d));
    let mut qq = UniPoly::zero();
    let mut r = UniPoly::zero();
    let mut s = UniPoly::zero();
    for _ in 0..n {
        let p_next = p
            .shift_up()
            .scalar_mul(&q(2))
            .sub(&qq.scalar_mul(&q(-1).mul_ref(&q2_minus)));
        let q_next = qq
            .shift_up()
            .scalar_mul(&q(-2))
            .add(&p.scalar_mul(&q(1).mul_ref(&q2_minus)));
        let r_next = r.shift_up().add(&qq.scalar_mul(&q(-1).mul_ref(&q1_minus)));
        let s_next = s.shift_up().sub(&p.scalar_mul(&q(1).mul_ref(&q1_minus)));
        p = p_next;
        qq = q_next;
        r = r_next;
        s = s_next;
    }
    [p, qq, r, s]
}

/// Verifies the closed-form evaluations of `P_n, Q_n, R_n, S_n` at
/// `Theta_i(Y)` for `0 <= i < dbar`, as Laurent-polynomial identities in `Y`
/// with all denominators cleared.  Requires `dbar > 2` so that the three
/// points `Theta_{i-1}, Theta_i, Theta_{i+1}` are pairwise distinct.
pub fn pqrs_theta_check(n: u32, d: u32) -> Result<bool, QIdentityError> {
    let db = dbar(d);
    if db <= 2 {
        return Err(QIdentityError::DbarTooSmall(db));
    }
    let [p, q_poly, r, s] = pqrs(n, d);
    let q = |e: i64| CycloScalar::q_pow(d, e);
    let reg = registry_y();
    let one = MultiPoly::constant(reg.clone(), CycloScalar::one(d));
    let pow = |base: &MultiPoly<CycloScalar>, e: u32| {
        let mut acc = one.clone();
        for _ in 0..e {
            acc = acc.mul(base);
        }
        acc
    };
    for i in 0..db as i64 {
        let th_prev = theta(i - 1, d);
        let th = theta(i, d);
        let th_next = theta(i + 1, d);
        let d_outer = th_next.sub(&th_prev);
        let d_hi = th_next.sub(&th);
        let d_lo = th.sub(&th_prev);
        let q2th = th.scalar_mul(&q(2));
        let p_at = eval_unipoly_at_laurent(&p, &th);
        let q_at = eval_unipoly_at_laurent(&q_poly, &th);
        let r_at = eval_unipoly_at_laurent(&r, &th);
        let s_at = eval_unipoly_at_laurent(&s, &th);
        // P_n(Th_i) (Th_{i+1} - Th_{i-1})
        //   = (Th_{i+1} - q^2 Th_i) Th_{i-1}^n + (q^2 Th_i - Th_{i-1}) Th_{i+1}^n.
        let lhs = p_at.mul(&d_outer);
        let rhs = th_next
            .sub(&q2th)
            .mul(&pow(&th_prev, n))
            .add(&q2th.sub(&th_prev).mul(&pow(&th_next, n)));
        if lhs != rhs {
            return Ok(false);
        }
        // Q_n(Th_i) (Th_{i+1} - Th_{i-1}) = q (q^2 - q^{-2}) (Th_{i+1}^n - Th_{i-1}^n).
        let lhs = q_at.mul(&d_outer);
        let rhs = pow(&th_next, n)
            .sub(&pow(&th_prev, n))
            .scalar_mul(&q(1).mul_ref(&q(2).sub_ref(&q(-2))));
        if lhs != rhs {
            return Ok(false);
        }
        // R_n(Th_i) D D_hi D_lo = (q - q^{-1})(q^2 - q^{-2})
        //   [(Th_{i+1}^n - Th_i^n) D_lo - (Th_i^n - Th_{i-1}^n) D_hi].
        let hi_diff = pow(&th_next, n).sub(&pow(&th, n));
        let lo_diff = pow(&th, n).sub(&pow(&th_prev, n));
        let lhs = r_at.mul(&d_outer).mul(&d_hi).mul(&d_lo);
        let rhs = hi_diff
            .mul(&d_lo)
            .sub(&lo_diff.mul(&d_hi))
            .scalar_mul(&q(1).sub_ref(&q(-1)).mul_ref(&q(2).sub_ref(&q(-2))));
        if lhs != rhs {
            return Ok(false);
        }
        // S_n(Th_i) D D_hi D_lo = q (q - q^{-1})
        //   [(Th_{i+1}^n - Th_i^n) D_lo (Th_{i-1} - q^2 Th_i)
        //    - (Th_i^n - Th_{i-1}^n) D_hi (Th_{i+1} - q^2 Th_i)].
        let lhs = s_at.mul(&d_outer).mul(&d_hi).mul(&d_lo);
        let rhs = hi_diff
            .mul(&d_lo)
            .mul(&th_prev.sub(&q2th))
            .sub(&lo_diff.mul(&d_hi).mul(&th_next.sub(&q2th)))
            .scalar_mul(&q(1).mul_ref(&q(1).sub_ref(&q(-1))));
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builds the `T`-combined polynomials (substituting `P_{n-2i}` and friends
/// for the powers `X^{n-2i}` in the Chebyshev closed form) and verifies that
/// at `n = dbar` the `P`-combination is `T_dbar` while the other three
/// vanish identically.
pub fn script_pqrs_check(d: u32) -> bool {
    let db = dbar(d);
    let t = cheb_t(db);
    let mut script: [UniPoly<CycloScalar>; 4] = [
        UniPoly::zero(),
        UniPoly::zero(),
        UniPoly::zero(),
        UniPoly::zero(),
    ];
    for (k, c) in t.coeffs().iter().enumerate() {
        if Coeff::is_zero(c) {
            continue;
        }
        let c = CycloScalar::from_rational(d, c.clone());
        let parts = pqrs(k as u32, d);
        for (slot, part) in parts.iter().enumerate() {
            script[slot] = script[slot].add(&part.scalar_mul(&c));
        }
    }
    script[0] == cheb_t_cyclo(db, d)
        && script[1].is_zero()
        && script[2].is_zero()
        && script[3].is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::rat;
    use rand::{Rng, SeedableRng};

    #[test]
    fn gauss_binomial_values() {
        // [2 choose 1] = Q + Q^{-1}.
        assert_eq!(gauss_binomial(2, 1).unwrap(), GenericQScalar::quantum_int(2));
        // Empty product.
        assert_eq!(gauss_binomial(7, 0).unwrap(), GenericQScalar::one());
        // [4 choose 2] = Q^4 + Q^2 + 2 + Q^{-2} + Q^{-4}, frozen from
        // expanding [4][3]/([2][1]) by exact division.
        let expected = GenericQScalar::from_terms([
            (4, rat(1, 1)),
            (2, rat(1, 1)),
            (0, rat(2, 1)),
            (-2, rat(1, 1)),
            (-4, rat(1, 1)),
        ]);
        assert_eq!(gauss_binomial(4, 2).unwrap(), expected);
        // Membership in Z[Q^{±1}] for a spread of arguments.
        for n in -6..=8i64 {
            for i in 0..=6u32 {
                assert!(gauss_binomial(n, i).unwrap().is_integral(), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn qbinomial_theorem() {
        // (R+S)^2 = R^2 + (Q^2 + 1) R S + S^2: frozen expansion.
        let ctx = QTorus::new(GenericQScalar::one());
        let r_plus_s = ctx.add(&ctx.r_pow(1), &ctx.s_gen());
        let sq = ctx.pow(&r_plus_s, 2);
        let middle = GenericQScalar::from_terms([(2, rat(1, 1)), (0, rat(1, 1))]);
        let expected = ctx.add(
            &ctx.add(&ctx.r_pow(2), &ctx.monomial(1, 1, middle)),
            &ctx.monomial(0, 2, GenericQScalar::one()),
        );
        assert_eq!(sq, expected);
        for n in 0..=10 {
            assert!(qbinomial_theorem_check(n, QMode::Generic).unwrap(), "n={n}");
        }
        // d=3: (R+S)^3 = R^3 + S^3.
        assert!(qbinomial_theorem_check(3, QMode::Root(3)).unwrap());
    }

    #[test]
    fn iorgov_identity() {
        // n=1 is trivially R + S + R^{-1} on both sides.
        assert!(iorgov_identity_check(1, QMode::Generic).unwrap());
        for n in 0..=8 {
            assert!(iorgov_identity_check(n, QMode::Generic).unwrap(), "n={n}");
        }
        // d=5: T_5(R + S + R^{-1}) = R^5 + S^5 + R^{-5}.
        assert!(iorgov_identity_check(5, QMode::Root(5)).unwrap());
    }

    #[test]
    fn torus_mul_is_associative_on_random_triples() {
        let ctx = QTorus::new(GenericQScalar::one());
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut random_elem = |rng: &mut rand_chacha::ChaCha8Rng| {
            let mut e = ctx.zero();
            for _ in 0..rng.gen_range(1..4) {
                let r = rng.gen_range(-3..=3);
                let s = rng.gen_range(0..=3);
                let c = GenericQScalar::from_terms([(
                    rng.gen_range(-2..=2),
                    rat(rng.gen_range(-3..=3), 1),
                )]);
                e = ctx.add(&e, &ctx.monomial(r, s, c));
            }
            e
        };
        for _ in 0..200 {
            let a = random_elem(&mut rng);
            let b = random_elem(&mut rng);
            let c = random_elem(&mut rng);
            assert_eq!(ctx.mul(&ctx.mul(&a, &b), &c), ctx.mul(&a, &ctx.mul(&b, &c)));
        }
    }

    #[test]
    fn specialization_commutes_with_expansion() {
        let generic = QTorus::new(GenericQScalar::one());
        let d = 5;
        let root = QTorus::new(CycloScalar::one(d));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let specialize = |e: &QTorusElement<GenericQScalar>| {
            let mut out = root.zero();
            for (&(i, j), c) in e.terms() {
                out = root.add(&out, &root.monomial(i, j, c.specialize(d)));
            }
            out
        };
        let mut random_elem = |rng: &mut rand_chacha::ChaCha8Rng| {
            let mut e = generic.zero();
            for _ in 0..3 {
                e = generic.add(
                    &e,
                    &generic.monomial(
                        rng.gen_range(-2..=2),
                        rng.gen_range(0..=2),
                        GenericQScalar::from_terms([(
                            rng.gen_range(-2..=2),
                            rat(rng.gen_range(-3..=3), 1),
                        )]),
                    ),
                );
            }
            e
        };
        for _ in 0..100 {
            let a = random_elem(&mut rng);
            let b = random_elem(&mut rng);
            assert_eq!(
                specialize(&generic.mul(&a, &b)),
                root.mul(&specialize(&a), &specialize(&b))
            );
        }
    }

    #[test]
    fn theta_identities() {
        // d=4: Theta_0 = Theta_2 since dbar = 2 divides 2.
        assert_eq!(theta(0, 4), theta(2, 4));
        // d=3: T_3(Theta_1(Y)) = Y^3 + Y^{-3}.
        let t = eval_unipoly_at_laurent(&cheb_t_cyclo(3, 3), &theta(1, 3));
        let reg = registry_y();
        let expected = MultiPoly::monomial(reg.clone(), "Y", 3, CycloScalar::one(3))
            .unwrap()
            .add(&MultiPoly::monomial(reg, "Y", -3, CycloScalar::one(3)).unwrap());
        assert_eq!(t, expected);
        for d in [1, 2, 3, 4, 5, 6, 7, 8, 12] {
            assert!(theta_identities_check(d), "d={d}");
        }
    }

    #[test]
    fn pqrs_base_values() {
        // n=0: (1, 0, 0, 0); n=1: (q^2 X, q(q^2-q^{-2}), 0, -q(q-q^{-1})).
        let d = 5;
        let q = |e: i64| CycloScalar::q_pow(d, e);
        let [p0, q0, r0, s0] = pqrs(0, d);
        assert_eq!(p0, UniPoly::constant(CycloScalar::one(d)));
        assert!(q0.is_zero() && r0.is_zero() && s0.is_zero());
        let [p1, q1, r1, s1] = pqrs(1, d);
        assert_eq!(p1, UniPoly::monomial(q(2), 1));
        assert_eq!(q1, UniPoly::constant(q(1).mul_ref(&q(2).sub_ref(&q(-2)))));
        assert!(r1.is_zero());
        assert_eq!(
            s1,
            UniPoly::constant(q(1).mul_ref(&q(1).sub_ref(&q(-1))).neg_ref())
        );
        // n=2: P_2 = q^4 X^2 - (q^2 - q^{-2})^2.
        let [p2, _, _, _] = pqrs(2, d);
        let sq = q(2).sub_ref(&q(-2));
        assert_eq!(
            p2,
            UniPoly::from_coeffs(vec![sq.mul_ref(&sq).neg_ref(), CycloScalar::zero(d), q(4)])
        );
    }

    #[test]
    fn pqrs_theta_and_script() {
        for d in [3, 5, 7, 8] {
            for n in 0..=4 {
                assert!(pqrs_theta_check(n, d).unwrap(), "d={d} n={n}");
            }
            assert!(script_pqrs_check(d), "d={d}");
        }
        // Precondition violation is reported, not silently skipped.
        assert_eq!(pqrs_theta_check(3, 4), Err(QIdentityError::DbarTooSmall(2)));
    }

    #[test]
    fn degenerate_small_orders() {
        // q^2 = 1 (d = 1, 2): P_1 = X and Q_1 = R_1 = S_1 = 0.
        for d in [1u32, 2] {
            let [p1, q1, r1, s1] = pqrs(1, d);
            assert_eq!(p1, UniPoly::monomial(CycloScalar::one(d), 1));
            assert!(q1.is_zero() && r1.is_zero() && s1.is_zero());
        }
        // q^4 = 1 (d = 4): P_2 = X^2 and Q_2 = R_2 = S_2 = 0.
        let [p2, q2, r2, s2] = pqrs(2, 4);
        assert_eq!(p2, UniPoly::monomial(CycloScalar::one(4), 2));
        assert!(q2.is_zero() && r2.is_zero() && s2.is_zero());
    }
}
