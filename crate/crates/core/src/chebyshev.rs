//! Normalized Chebyshev polynomials of the first kind and the four-variable
//! polynomial families built from them.
//!
//! `T_n` is normalized so that `T_n(x + x^{-1}) = x^n + x^{-n}`, i.e.
//! `T_0 = 2`, `T_1 = X` and `X T_n = T_{n+1} + T_{n-1}`.  From these we form
//!
//! ```text
//! phi_n = T_n(X) T_n(X0) + T_n(X1) T_n(X2)
//! psi_n = T_{2n}(X) + T_n(X0)^2 + T_n(X1)^2 + T_n(X2)^2
//!         + T_n(X) T_n(X0) T_n(X1) T_n(X2)
//! ```
//!
//! in `Q[X0, X1, X2, X]`, together with the cyclic `X`-fixing automorphisms
//! permuting `X0, X1, X2`.  The pair `Phi_n`, `Psi_n` is the unique integer
//! solution of the functional equation
//!
//! ```text
//! Phi_n(phi_m^{u0}, phi_m^{u1}, phi_m^{u2}; psi_m) = phi_{mn}   (all m)
//! ```
//!
//! (and the `Psi`/`psi` analogue); [`solve_capital`] computes it by an exact
//! rational linear solve over a finite monomial ansatz bounded by the
//! weighted degree `i0 + i1 + i2 + 2j`.

use crate::coeffring::linalg::{solve_sparse_unique, SparseRow};
use crate::coeffring::{rat, ArithError, Coeff, MultiPoly, Rational, UniPoly, VarRegistry};
use num_traits::One;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

/// A polynomial in the four commuting variables `X0, X1, X2, X`.
pub type CommPoly4 = MultiPoly<Rational>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ChebError {
    #[error("linear system for Phi_n/Psi_n was {0}: the argument tuple failed to determine a unique solution, which indicates a bug")]
    Solve(String),
    #[error("solved coefficients are not integers: {0}")]
    NonIntegral(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Registry of the four commuting variables, none of them Laurent.
pub fn registry4() -> Arc<VarRegistry> {
    static REG: OnceLock<Arc<VarRegistry>> = OnceLock::new();
    REG.get_or_init(|| {
        VarRegistry::new(&[("X0", false), ("X1", false), ("X2", false), ("X", false)])
    })
    .clone()
}

/// `T_n` with `T_0 = 2`, `T_1 = X`, `X T_n = T_{n+1} + T_{n-1}`.
pub fn cheb_t(n: u32) -> UniPoly<Rational> {
    static CACHE: OnceLock<Mutex<Vec<UniPoly<Rational>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        Mutex::new(vec![
            UniPoly::constant(rat(2, 1)),
            UniPoly::monomial(rat(1, 1), 1),
        ])
    });
    let mut guard = cache.lock().unwrap();
    while guard.len() <= n as usize {
        let len = guard.len();
        let next = guard[len - 1].shift_up().sub(&guard[len - 2]);
        guard.push(next);
    }
    guard[n as usize].clone()
}

fn var4(name: &str, exp: i64) -> CommPoly4 {
    MultiPoly::monomial(registry4(), name, exp, rat(1, 1)).unwrap()
}

/// `T_n` of one of the four variables, as a four-variable polynomial.
pub fn cheb_at(n: u32, name: &str) -> CommPoly4 {
    let t = cheb_t(n);
    let mut out = MultiPoly::zero(registry4());
    for (i, c) in t.coeffs().iter().enumerate() {
        if !Coeff::is_zero(c) {
            out = out.add(&MultiPoly::monomial(registry4(), name, i as i64, c.clone()).unwrap());
        }
    }
    out
}

/// `phi_n = T_n(X) T_n(X0) + T_n(X1) T_n(X2)`.
pub fn phi(n: u32) -> CommPoly4 {
    cheb_at(n, "X")
        .mul(&cheb_at(n, "X0"))
        .add(&cheb_at(n, "X1").mul(&cheb_at(n, "X2")))
}

/// `psi_n = T_{2n}(X) + sum T_n(Xi)^2 + T_n(X) T_n(X0) T_n(X1) T_n(X2)`.
pub fn psi(n: u32) -> CommPoly4 {
    let t0 = cheb_at(n, "X0");
    let t1 = cheb_at(n, "X1");
    let t2 = cheb_at(n, "X2");
    let tx = cheb_at(n, "X");
    cheb_at(2 * n, "X")
        .add(&t0.mul(&t0))
        .add(&t1.mul(&t1))
        .add(&t2.mul(&t2))
        .add(&tx.mul(&t0).mul(&t1).mul(&t2))
}

/// The `X`-fixing algebra automorphism sending `X_j` to `X_{i+j}` (mod 3).
pub fn cyclic_shift(i: u8, p: &CommPoly4) -> CommPoly4 {
    let i = (i % 3) as usize;
    if i == 0 {
        return p.clone();
    }
    let p = p.embed(&registry4()).expect("four-variable registry");
    let terms: Vec<(Vec<i64>, Rational)> = p
        .terms()
        .map(|(exps, c)| {
            let mut new_exps = vec![0i64; 4];
            for j in 0..3 {
                new_exps[(i + j) % 3] = exps[j];
            }
            new_exps[3] = exps[3];
            (new_exps, c.clone())
        })
        .collect();
    MultiPoly::from_terms(registry4(), terms).unwrap()
}

/// Evaluates a four-variable polynomial at four polynomial arguments
/// (the arguments commute, so the order of multiplication is irrelevant).
pub fn eval_at(p: &CommPoly4, args: [&CommPoly4; 3], x: &CommPoly4) -> CommPoly4 {
    let p = p.embed(&registry4()).expect("four-variable registry");
    let mut pows: [HashMap<i64, CommPoly4>; 4] = Default::default();
    let one = MultiPoly::constant(registry4(), rat(1, 1));
    let all = [args[0], args[1], args[2], x];
    let mut out = MultiPoly::zero(registry4());
    for (exps, c) in p.terms() {
        let mut term = MultiPoly::constant(registry4(), c.clone());
        for (slot, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let base = all[slot];
            let entry = pows[slot].entry(e).or_insert_with(|| {
                let mut acc = one.clone();
                for _ in 0..e {
                    acc = acc.mul(base);
                }
                acc
            });
            term = term.mul(entry);
        }
        out = out.add(&term);
    }
    out
}

/// The three shifted copies of `phi_n` together with `psi_n`, the argument
/// tuple of the functional equation.
pub fn phi_psi_arguments(n: u32) -> ([CommPoly4; 3], CommPoly4) {
    let p = phi(n);
    (
        [p.clone(), cyclic_shift(1, &p), cyclic_shift(2, &p)],
        psi(n),
    )
}

/// Expands every ansatz monomial `(i0, i1, i2, j)` with weighted degree
/// `i0 + i1 + i2 + 2j <= bound` at the `phi_1`/`psi_1` arguments, reusing
/// partial products along the enumeration tree.
fn ansatz_expansions(bound: u32) -> Vec<((u32, u32, u32, u32), CommPoly4)> {
    let (args, x) = phi_psi_arguments(1);
    let one = MultiPoly::constant(registry4(), rat(1, 1));
    let mut out = vec![];
    let mut p0 = one.clone();
    for i0 in 0..=bound {
        if i0 > 0 {
            p0 = p0.mul(&args[0]);
        }
        let mut p1 = p0.clone();
        for i1 in 0..=bound - i0 {
            if i1 > 0 {
                p1 = p1.mul(&args[1]);
            }
            let mut p2 = p1.clone();
            for i2 in 0..=bound - i0 - i1 {
                if i2 > 0 {
                    p2 = p2.mul(&args[2]);
                }
                let mut p3 = p2.clone();
                for j in 0..=(bound - i0 - i1 - i2) / 2 {
                    if j > 0 {
                        p3 = p3.mul(&x);
                    }
                    out.push(((i0, i1, i2, j), p3.clone()));
                }
            }
        }
    }
    out
}

/// Solves for the unique polynomial `P` of weighted degree at most `bound`
/// such that `P(phi_1^{u0}, phi_1^{u1}, phi_1^{u2}; psi_1) = target`.
fn solve_against(target: &CommPoly4, bound: u32) -> Result<CommPoly4, ChebError> {
    let expansions = ansatz_expansions(bound);
    let ncols = expansions.len();
    // Rows are indexed by the monomials appearing in any expansion or in the
    // target; entries are the expansion coefficients.
    let mut row_index: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    let mut rows: Vec<SparseRow<Rational>> = vec![];
    for (col, (_, expansion)) in expansions.iter().enumerate() {
        for (mono, c) in expansion.terms() {
            let r = *row_index.entry(mono.clone()).or_insert_with(|| {
                rows.push((BTreeMap::new(), rat(0, 1)));
                rows.len() - 1
            });
            rows[r].0.insert(col, c.clone());
        }
    }
    for (mono, c) in target.terms() {
        let r = *row_index.entry(mono.clone()).or_insert_with(|| {
            rows.push((BTreeMap::new(), rat(0, 1)));
            rows.len() - 1
        });
        rows[r].1 = c.clone();
    }
    let solution =
        solve_sparse_unique(ncols, rows).map_err(|e| ChebError::Solve(e.to_string()))?;
    let mut terms = vec![];
    for (((i0, i1, i2, j), _), c) in expansions.iter().zip(&solution) {
        if Coeff::is_zero(c) {
            continue;
        }
        if !c.denom().is_one() {
            return Err(ChebError::NonIntegral(format!(
                "coefficient {c} at X0^{i0} X1^{i1} X2^{i2} X^{j}"
            )));
        }
        terms.push((
            vec![*i0 as i64, *i1 as i64, *i2 as i64, *j as i64],
            c.clone(),
        ));
    }
    Ok(MultiPoly::from_terms(registry4(), terms).unwrap())
}

/// Computes the pair `(Phi_n, Psi_n)`.
///
/// The finite ansatz is justified by the weighted-degree bounds of the
/// solution: every monomial `X0^{i0} X1^{i1} X2^{i2} X^j` of `Phi_n`
/// satisfies `i0 + i1 + i2 + 2j <= n`, and `2n` bounds `Psi_n` likewise.
/// The solved coefficients are asserted to be integers, `Phi_n` to have
/// `X`-degree at most `floor(n/2)`, and `Psi_n` to be monic of `X`-degree
/// `n` for `n >= 1`.
pub fn solve_capital(n: u32) -> Result<(CommPoly4, CommPoly4), ChebError> {
    static CACHE: OnceLock<Mutex<HashMap<u32, (CommPoly4, CommPoly4)>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return Ok(hit.clone());
    }
    let capital_phi = solve_against(&phi(n), n)?;
    let capital_psi = solve_against(&psi(n), 2 * n)?;
    // Degree sanity from the construction.
    let xdeg = |p: &CommPoly4| p.terms().map(|(e, _)| e[3]).max().unwrap_or(0);
    assert!(
        xdeg(&capital_phi) <= (n / 2) as i64,
        "Phi_{n} must have X-degree at most floor(n/2)"
    );
    if n >= 1 {
        assert_eq!(xdeg(&capital_psi), n as i64, "Psi_{n} must have X-degree n");
        let lead = capital_psi
            .coeff(&[0, 0, 0, n as i64])
            .cloned()
            .unwrap_or_else(|| rat(0, 1));
        assert_eq!(lead, rat(1, 1), "Psi_{n} must be monic in X");
    }
    cache
        .lock()
        .unwrap()
        .insert(n, (capital_phi.clone(), capital_psi.clone()));
    Ok((capital_phi, capital_psi))
}

/// Outcome of the functional-equation checks for one `(m, n)` pair.
#[derive(Debug, Clone, PartialEq)]
pub struct CompositionOutcome {
    pub m: u32,
    pub n: u32,
    pub phi_ok: bool,
    pub psi_ok: bool,
    /// `Phi_n(Phi_m^{u0}, ..; Psi_m) = Phi_{mn}` and the `Psi` analogue;
    /// `None` when that part was not requested.
    pub capital_ok: Option<bool>,
    pub mismatch: Option<String>,
}

impl CompositionOutcome {
    pub fn all_ok(&self) -> bool {
        self.phi_ok && self.psi_ok && self.capital_ok.unwrap_or(true)
    }
}

/// Verifies `Phi_n(phi_m^{u0}, phi_m^{u1}, phi_m^{u2}; psi_m) = phi_{mn}`
/// and the `Psi` analogue; with `check_capital` also the closure of the
/// family under composition with itself.
pub fn composition_check(
    m: u32,
    n: u32,
    check_capital: bool,
) -> Result<CompositionOutcome, ChebError> {
    let (capital_phi, capital_psi) = solve_capital(n)?;
    let (args, x) = phi_psi_arguments(m);
    let phi_lhs = eval_at(&capital_phi, [&args[0], &args[1], &args[2]], &x);
    let psi_lhs = eval_at(&capital_psi, [&args[0], &args[1], &args[2]], &x);
    let phi_ok = phi_lhs == phi(m * n);
    let psi_ok = psi_lhs == psi(m * n);
    let capital_ok = if check_capital {
        let (phi_m, psi_m) = solve_capital(m)?;
        let (phi_mn, psi_mn) = solve_capital(m * n)?;
        let cap_args = [
            phi_m.clone(),
            cyclic_shift(1, &phi_m),
            cyclic_shift(2, &phi_m),
        ];
        let cap_phi = eval_at(
            &capital_phi,
            [&cap_args[0], &cap_args[1], &cap_args[2]],
            &psi_m,
        );
        let cap_psi = eval_at(
            &capital_psi,
            [&cap_args[0], &cap_args[1], &cap_args[2]],
            &psi_m,
        );
        Some(cap_phi == phi_mn && cap_psi == psi_mn)
    } else {
        None
    };
    let mut mismatch = None;
    if !(phi_ok && psi_ok && capital_ok.unwrap_or(true)) {
        mismatch = Some(format!(
            "m={m} n={n}: phi_ok={phi_ok} psi_ok={psi_ok} capital_ok={capital_ok:?}"
        ));
    }
    Ok(CompositionOutcome {
        m,
        n,
        phi_ok,
        psi_ok,
        capital_ok,
        mismatch,
    })
}

/// Substitutes `(X0, X1, X2) = (0, 0, 0)`, keeping a univariate polynomial
/// in `X`.
fn specialize_zero(p: &CommPoly4) -> UniPoly<Rational> {
    let mut coeffs: BTreeMap<usize, Rational> = BTreeMap::new();
    for (exps, c) in p.terms() {
        if exps[0] == 0 && exps[1] == 0 && exps[2] == 0 {
            coeffs.insert(exps[3] as usize, c.clone());
        }
    }
    let n = coeffs.keys().next_back().map_or(0, |k| k + 1);
    let mut dense = vec![rat(0, 1); n];
    for (k, c) in coeffs {
        dense[k] = c;
    }
    UniPoly::from_coeffs(dense)
}

/// Verifies the closed forms of the specializations at `(0, 0, 0)`:
///
/// ```text
/// Phi_n(0,0,0;X) = 2 e_n ((-1)^{floor(n/2)} T_{floor(n/2)}(X) + 2)
/// Psi_n(0,0,0;X) = T_n(X) + 4 e_n ((-1)^{floor(n/2)} 2 T_{floor(n/2)}(X) + 3)
/// ```
///
/// where `e_n = floor(n/2) - ceil(n/2) + 1` is 1 for even `n` and 0 for odd.
pub fn so3_specialization_check(n: u32) -> Result<bool, ChebError> {
    let (capital_phi, capital_psi) = solve_capital(n)?;
    let even = n % 2 == 0;
    let half = n / 2;
    let sign = if half % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
    let phi_expected = if even {
        cheb_t(half)
            .scalar_mul(&sign)
            .add(&UniPoly::constant(rat(2, 1)))
            .scalar_mul(&rat(2, 1))
    } else {
        UniPoly::zero()
    };
    let psi_expected = if even {
        cheb_t(n).add(
            &cheb_t(half)
                .scalar_mul(&(sign * rat(2, 1)))
                .add(&UniPoly::constant(rat(3, 1)))
                .scalar_mul(&rat(4, 1)),
        )
    } else {
        cheb_t(n)
    };
    Ok(specialize_zero(&capital_phi) == phi_expected
        && specialize_zero(&capital_psi) == psi_expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_integer::binomial;

    /// Closed form for `T_n`, used as an independent oracle for the
    /// recurrence implementation: the alternating sum of binomial terms
    /// with `C(m, -1) = 0` for `m >= 0` and `C(-1, -1) = 1`.
    fn cheb_t_closed(n: u32) -> UniPoly<Rational> {
        let n = n as i64;
        let mut dense = vec![rat(0, 1); n as usize + 1];
        for i in 0..=(n / 2) {
            let a = binomial(BigInt::from(n - i), BigInt::from(i));
            let b = if i == 0 {
                if n - 1 == -1 {
                    BigInt::from(1)
                } else {
                    BigInt::from(0)
                }
            } else {
                binomial(BigInt::from(n - i - 1), BigInt::from(i - 1))
            };
            let c = Rational::from_integer(a + b);
            let signed = if i % 2 == 0 { c } else { -c };
            dense[(n - 2 * i) as usize] = signed;
        }
        UniPoly::from_coeffs(dense)
    }

    #[test]
    fn recurrence_matches_closed_form() {
        for n in 0..=16 {
            assert_eq!(cheb_t(n), cheb_t_closed(n), "T_{n}");
        }
    }

    #[test]
    fn first_chebyshev_polynomials() {
        assert_eq!(cheb_t(0), UniPoly::constant(rat(2, 1)));
        assert_eq!(cheb_t(1), UniPoly::monomial(rat(1, 1), 1));
        // T_2 = X^2 - 2, frozen from the three-term recurrence.
        assert_eq!(
            cheb_t(2),
            UniPoly::from_coeffs(vec![rat(-2, 1), rat(0, 1), rat(1, 1)])
        );
    }

    #[test]
    fn symmetric_laurent_values() {
        // T_n(X + X^{-1}) = X^n + X^{-n} for n <= 24.
        let reg = VarRegistry::new(&[("X", true)]);
        let x = MultiPoly::monomial(reg.clone(), "X", 1, rat(1, 1)).unwrap();
        let xinv = MultiPoly::monomial(reg.clone(), "X", -1, rat(1, 1)).unwrap();
        let arg = x.add(&xinv);
        for n in 0..=24u32 {
            let t = cheb_t(n);
            let mut acc = MultiPoly::zero(reg.clone());
            let mut p = MultiPoly::constant(reg.clone(), rat(1, 1));
            for (i, c) in t.coeffs().iter().enumerate() {
                if i > 0 {
                    p = p.mul(&arg);
                }
                acc = acc.add(&p.scalar_mul(c));
            }
            let expected = if n == 0 {
                MultiPoly::constant(reg.clone(), rat(2, 1))
            } else {
                MultiPoly::monomial(reg.clone(), "X", n as i64, rat(1, 1))
                    .unwrap()
                    .add(&MultiPoly::monomial(reg.clone(), "X", -(n as i64), rat(1, 1)).unwrap())
            };
            assert_eq!(acc, expected, "n={n}");
        }
    }

    #[test]
    fn composition_of_chebyshev() {
        // T_m(T_n(X)) = T_{mn}(X) for m, n <= 12.
        for m in 0..=12u32 {
            for n in 0..=12u32 {
                let tn = cheb_t(n);
                let tm = cheb_t(m);
                let mut acc = UniPoly::zero();
                let mut p = UniPoly::constant(rat(1, 1));
                for (i, c) in tm.coeffs().iter().enumerate() {
                    if i > 0 {
                        p = p.mul(&tn);
                    }
                    acc = acc.add(&p.scalar_mul(c));
                }
                assert_eq!(acc, cheb_t(m * n), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn phi_psi_small_values() {
        // phi_1 = X X0 + X1 X2.
        assert_eq!(
            phi(1),
            var4("X", 1)
                .mul(&var4("X0", 1))
                .add(&var4("X1", 1).mul(&var4("X2", 1)))
        );
        // psi_0 = 2 + 4 + 4 + 4 + 16 = 30 (T_0 = 2 substituted everywhere).
        assert_eq!(psi(0), MultiPoly::constant(registry4(), rat(30, 1)));
        // psi_1 = T_2(X) + X0^2 + X1^2 + X2^2 + X X0 X1 X2.
        let expected = cheb_at(2, "X")
            .add(&var4("X0", 2))
            .add(&var4("X1", 2))
            .add(&var4("X2", 2))
            .add(
                &var4("X", 1)
                    .mul(&var4("X0", 1))
                    .mul(&var4("X1", 1))
                    .mul(&var4("X2", 1)),
            );
        assert_eq!(psi(1), expected);
    }

    #[test]
    fn cyclic_shift_behaviour() {
        let p = var4("X0", 1);
        assert_eq!(cyclic_shift(0, &p), p);
        assert_eq!(cyclic_shift(1, &p), var4("X1", 1));
        let q = phi(2).add(&var4("X", 3).mul(&var4("X2", 1)));
        assert_eq!(cyclic_shift(1, &cyclic_shift(1, &cyclic_shift(1, &q))), q);
        // psi_n is invariant under all shifts.
        for n in 0..=3 {
            assert_eq!(cyclic_shift(1, &psi(n)), psi(n));
            assert_eq!(cyclic_shift(2, &psi(n)), psi(n));
        }
    }

    /// The displayed closed forms of the first four pairs.
    fn displayed_capitals() -> Vec<(u32, CommPoly4, CommPoly4)> {
        let c = |v: i64| MultiPoly::constant(registry4(), rat(v, 1));
        let x0 = || var4("X0", 1);
        let x1 = || var4("X1", 1);
        let x2 = || var4("X2", 1);
        let x = || var4("X", 1);
        let phi0 = c(8);
        let psi0 = c(30);
        let phi1 = x0();
        let psi1 = x();
        let phi2 = var4("X0", 2).sub(&x().scalar_mul(&rat(2, 1))).add(&c(4));
        let psi2 = var4("X", 2)
            .sub(&x().scalar_mul(&rat(8, 1)))
            .add(
                &var4("X0", 2)
                    .add(&var4("X1", 2))
                    .add(&var4("X2", 2))
                    .sub(&x0().mul(&x1()).mul(&x2()))
                    .scalar_mul(&rat(2, 1)),
            )
            .add(&c(10));
        let phi3 = var4("X0", 3)
            .sub(&x().sub(&c(1)).mul(&x0()).scalar_mul(&rat(3, 1)))
            .add(&x1().mul(&x2()).scalar_mul(&rat(3, 1)));
        let sum_sq = || var4("X0", 2).add(&var4("X1", 2)).add(&var4("X2", 2));
        let psi3 = var4("X", 3)
            .sub(
                &x0()
                    .mul(&x1())
                    .mul(&x2())
                    .add(&sum_sq())
                    .add(&c(1))
                    .mul(&x())
                    .scalar_mul(&rat(3, 1)),
            )
            .add(
                &var4("X0", 2)
                    .mul(&var4("X1", 2))
                    .add(&var4("X1", 2).mul(&var4("X2", 2)))
                    .add(&var4("X2", 2).mul(&var4("X0", 2)))
                    .sub(&x0().mul(&x1()).mul(&x2()))
                    .scalar_mul(&rat(3, 1)),
            )
            .add(&sum_sq().scalar_mul(&rat(6, 1)));
        vec![
            (0, phi0, psi0),
            (1, phi1, psi1),
            (2, phi2, psi2),
            (3, phi3, psi3),
        ]
    }

    #[test]
    fn solver_reproduces_displayed_polynomials() {
        for (n, phi_n, psi_n) in displayed_capitals() {
            let (cp, cs) = solve_capital(n).unwrap();
            assert_eq!(cp, phi_n, "Phi_{n}");
            assert_eq!(cs, psi_n, "Psi_{n}");
        }
    }

    #[test]
    fn composition_small() {
        for (m, n) in [(0, 2), (1, 2), (2, 2), (1, 3)] {
            let out = composition_check(m, n, true).unwrap();
            assert!(out.all_ok(), "{:?}", out);
        }
    }

    #[test]
    fn specialization_closed_forms() {
        for n in 0..=6 {
            assert!(so3_specialization_check(n).unwrap(), "n={n}");
        }
    }
}
