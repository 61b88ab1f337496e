//! The universal Askey-Wilson algebra: three generators `A`, `B`, `C` over
//! the central polynomial coefficients `alpha`, `beta`, `gamma`, subject to
//!
//! ```text
//! CB = q^2 BC + q(q^2 - q^{-2}) A - q(q - q^{-1}) alpha
//! CA = q^{-2} AC - q^{-1}(q^2 - q^{-2}) B + q^{-1}(q - q^{-1}) beta
//! BA = q^2 AB + q(q^2 - q^{-2}) C - q(q - q^{-1}) gamma
//! ```
//!
//! Elements are kept in the Poincare-Birkhoff-Witt normal form: a map from
//! the ordered monomials `A^{i0} B^{i1} C^{i2}` to polynomial coefficients in
//! the central generators.  Multiplication pushes `B` past `C`-powers and `A`
//! past `B`- and `C`-powers with the three relations; every rewrite strictly
//! decreases (total degree, out-of-order pairs), which bounds the recursion.

use crate::chebyshev::{cheb_t, cyclic_shift, solve_capital, CommPoly4};
use crate::coeffring::{
    dbar, euler_phi, linalg, ArithError, Coeff, CycloScalar, JsonScalar, MultiPoly, Rational,
    VarRegistry,
};
use crate::report::{SuiteItem, SuiteReport};
use rand::{Rng, SeedableRng};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum UawError {
    #[error("root-of-unity order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("capital polynomial solver failed: {0}")]
    Capital(String),
}

/// PBW monomial exponents `(i0, i1, i2)` of `A^{i0} B^{i1} C^{i2}`.
pub type Mono = (u32, u32, u32);

pub type CoeffPoly = MultiPoly<CycloScalar>;

/// Registry of the central coefficient variables.
pub fn uaw_registry() -> Arc<VarRegistry> {
    static REG: OnceLock<Arc<VarRegistry>> = OnceLock::new();
    REG.get_or_init(|| {
        VarRegistry::new(&[("alpha", false), ("beta", false), ("gamma", false)])
    })
    .clone()
}

/// Registry extended by an invertible commuting parameter, used for checks
/// quantified over "all nonzero lambda".
pub fn uaw_registry_lambda() -> Arc<VarRegistry> {
    static REG: OnceLock<Arc<VarRegistry>> = OnceLock::new();
    REG.get_or_init(|| {
        VarRegistry::new(&[
            ("alpha", false),
            ("beta", false),
            ("gamma", false),
            ("lambda", true),
        ])
    })
    .clone()
}

/// An element of the algebra in PBW normal form.
#[derive(Clone)]
pub struct UAWElement {
    d: u32,
    registry: Arc<VarRegistry>,
    terms: BTreeMap<Mono, CoeffPoly>,
}

impl std::fmt::Debug for UAWElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "UAW(0)");
        }
        let body = self
            .terms
            .iter()
            .map(|((i0, i1, i2), c)| {
                format!(
                    "A^{i0}B^{i1}C^{i2}*[{}]",
                    c.pretty_with(|s| s.pretty())
                )
            })
            .collect::<Vec<_>>()
            .join(" + ");
        write!(f, "UAW({body})")
    }
}

impl PartialEq for UAWElement {
    fn eq(&self, other: &Self) -> bool {
        if self.d != other.d {
            return false;
        }
        match self.align(other) {
            Ok((a, b)) => a.terms == b.terms,
            Err(_) => false,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Generator {
    A,
    B,
    C,
}

impl UAWElement {
    pub fn zero(d: u32) -> Self {
        UAWElement {
            d,
            registry: uaw_registry(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(d: u32) -> Self {
        Self::scalar(d, CycloScalar::one(d))
    }

    pub fn scalar(d: u32, s: CycloScalar) -> Self {
        let mut e = Self::zero(d);
        if !Coeff::is_zero(&s) {
            e.terms
                .insert((0, 0, 0), MultiPoly::constant(e.registry.clone(), s));
        }
        e
    }

    pub fn generator(d: u32, g: Generator) -> Self {
        let mono = match g {
            Generator::A => (1, 0, 0),
            Generator::B => (0, 1, 0),
            Generator::C => (0, 0, 1),
        };
        let mut e = Self::zero(d);
        e.terms.insert(
            mono,
            MultiPoly::constant(e.registry.clone(), CycloScalar::one(d)),
        );
        e
    }

    /// A central coefficient variable (`alpha`, `beta`, `gamma`, or any
    /// variable of the supplied registry) as an element.
    pub fn central(d: u32, registry: Arc<VarRegistry>, name: &str, exp: i64) -> Result<Self, UawError> {
        let coeff = MultiPoly::monomial(registry.clone(), name, exp, CycloScalar::one(d))?;
        Ok(UAWElement {
            d,
            registry,
            terms: BTreeMap::from([((0, 0, 0), coeff)]),
        })
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, CoeffPoly)>>(d: u32, terms: I) -> Self {
        let mut e = Self::zero(d);
        for (m, c) in terms {
            e.registry = VarRegistry::merge(&e.registry, c.registry()).expect("registries");
            e.add_term(m, c);
        }
        e
    }

    pub fn order(&self) -> u32 {
        self.d
    }

    pub fn registry(&self) -> &Arc<VarRegistry> {
        &self.registry
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &CoeffPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: Mono) -> Option<&CoeffPoly> {
        self.terms.get(&m)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Mono, c: CoeffPoly) {
        if c.is_zero() {
            return;
        }
        let c = c.embed(&self.registry).expect("registry embed");
        match self.terms.get_mut(&m) {
            Some(v) => {
                let sum = v.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn align(&self, other: &Self) -> Result<(Self, Self), UawError> {
        if self.d != other.d {
            return Err(UawError::OrderMismatch(self.d, other.d));
        }
        let registry = VarRegistry::merge(&self.registry, &other.registry)?;
        let mut a = self.clone();
        let mut b = other.clone();
        if !Arc::ptr_eq(&a.registry, &registry) {
            a.registry = registry.clone();
            a.terms = a
                .terms
                .into_iter()
                .map(|(m, c)| (m, c.embed(&registry).unwrap()))
                .collect();
        }
        if !Arc::ptr_eq(&b.registry, &registry) {
            b.registry = registry.clone();
            b.terms = b
                .terms
                .into_iter()
                .map(|(m, c)| (m, c.embed(&registry).unwrap()))
                .collect();
        }
        Ok((a, b))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.align(other).expect("compatible elements");
        for (m, c) in b.terms {
            a.add_term(m, c);
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UAWElement {
            d: self.d,
            registry: self.registry.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn scalar_mul(&self, s: &CycloScalar) -> Self {
        if Coeff::is_zero(s) {
            return Self::zero(self.d);
        }
        UAWElement {
            d: self.d,
            registry: self.registry.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.scalar_mul(s)))
                .collect(),
        }
    }

    /// Multiplies every coefficient by a central coefficient polynomial.
    pub fn coeff_mul(&self, p: &CoeffPoly) -> Self {
        if p.is_zero() {
            return Self::zero(self.d);
        }
        let registry = VarRegistry::merge(&self.registry, p.registry()).expect("registries");
        let p = p.embed(&registry).unwrap();
        let mut out = UAWElement {
            d: self.d,
            registry,
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            out.add_term(*m, c.embed(&out.registry).unwrap().mul(&p));
        }
        out
    }

    /// PBW normal form of the product.
    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.align(other).expect("compatible elements");
        let mut ctx = MulCtx {
            d: a.d,
            registry: a.registry.clone(),
            memo: HashMap::new(),
        };
        let mut out = UAWElement {
            d: a.d,
            registry: a.registry.clone(),
            terms: BTreeMap::new(),
        };
        for ((j0, j1, j2), c_y) in &b.terms {
            let mut z: BTreeMap<Mono, CoeffPoly> = a
                .terms
                .iter()
                .map(|(m, c)| (*m, c.mul(c_y)))
                .collect();
            for _ in 0..*j0 {
                z = ctx.elem_rmul(&z, Generator::A);
            }
            for _ in 0..*j1 {
                z = ctx.elem_rmul(&z, Generator::B);
            }
            for _ in 0..*j2 {
                z = ctx.elem_rmul(&z, Generator::C);
            }
            for (m, c) in z {
                out.add_term(m, c);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.d);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// The image under the cyclic automorphism
    /// `(A, B, C, alpha, beta, gamma) -> (B, C, A, beta, gamma, alpha)`.
    pub fn rho(&self) -> Self {
        let d = self.d;
        // Coefficients permute variable slots; the registry is expected to
        // contain alpha, beta, gamma (extra variables are left in place).
        let reg = &self.registry;
        let ia = reg.position("alpha").expect("alpha");
        let ib = reg.position("beta").expect("beta");
        let ig = reg.position("gamma").expect("gamma");
        let mut out = UAWElement {
            d,
            registry: self.registry.clone(),
            terms: BTreeMap::new(),
        };
        let mut ctx = MulCtx {
            d,
            registry: self.registry.clone(),
            memo: HashMap::new(),
        };
        for ((i0, i1, i2), c) in &self.terms {
            let mapped_coeff = MultiPoly::from_terms(
                self.registry.clone(),
                c.terms().map(|(exps, s)| {
                    let mut new_exps = exps.clone();
                    new_exps[ib] = exps[ia];
                    new_exps[ig] = exps[ib];
                    new_exps[ia] = exps[ig];
                    (new_exps, s.clone())
                }),
            )
            .expect("permuted coefficient");
            // A^{i0} B^{i1} C^{i2} maps to B^{i0} C^{i1} A^{i2}; the first two
            // factors are already ordered, the trailing A-powers get pushed.
            let mut z: BTreeMap<Mono, CoeffPoly> =
                BTreeMap::from([((0, *i0, *i1), mapped_coeff)]);
            for _ in 0..*i2 {
                z = ctx.elem_rmul(&z, Generator::A);
            }
            for (m, c) in z {
                out.add_term(m, c);
            }
        }
        out
    }

    /// Filtration degree: the maximum over stored terms of
    /// `i0 + i1 + i2 + (total alpha/beta/gamma degree)`, or `None` for the
    /// zero element ("minus infinity").
    pub fn filtration_degree(&self) -> Option<u64> {
        let reg = &self.registry;
        let central: Vec<usize> = ["alpha", "beta", "gamma"]
            .iter()
            .filter_map(|n| reg.position(n))
            .collect();
        self.terms
            .iter()
            .flat_map(|((i0, i1, i2), c)| {
                let base = (*i0 + *i1 + *i2) as u64;
                let central = &central;
                c.terms().map(move |(exps, _)| {
                    base + central
                        .iter()
                        .map(|&i| exps[i].unsigned_abs())
                        .sum::<u64>()
                })
            })
            .max()
    }

    /// Canonical JSON form.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "d": self.d,
            "terms": self
                .terms
                .iter()
                .map(|((i0, i1, i2), c)| {
                    serde_json::json!({"abc": [i0, i1, i2], "coeff": c.to_json()})
                })
                .collect::<Vec<_>>(),
        })
    }

    /// Parses and re-canonicalizes the JSON form (duplicate monomials are
    /// summed, zero coefficients dropped).
    pub fn from_json(value: &serde_json::Value) -> Result<Self, UawError> {
        let d = value
            .get("d")
            .and_then(|v| v.as_u64())
            .filter(|&d| d >= 1)
            .ok_or_else(|| ArithError::BadSerialization("element needs a positive d".into()))?
            as u32;
        let terms = value
            .get("terms")
            .and_then(|v| v.as_array())
            .ok_or_else(|| ArithError::BadSerialization("element needs terms".into()))?;
        let mut out = Self::zero(d);
        let mentions_lambda = terms.iter().any(|t| {
            t.get("coeff")
                .and_then(|c| c.get("vars"))
                .and_then(|v| v.as_array())
                .map_or(false, |vars| vars.iter().any(|n| n.as_str() == Some("lambda")))
        });
        if mentions_lambda {
            out.registry = uaw_registry_lambda();
        }
        for t in terms {
            let abc = t
                .get("abc")
                .and_then(|v| v.as_array())
                .filter(|a| a.len() == 3)
                .ok_or_else(|| ArithError::BadSerialization("term needs abc: [i0,i1,i2]".into()))?;
            let idx: Vec<u32> = abc
                .iter()
                .map(|v| {
                    v.as_u64()
                        .and_then(|x| u32::try_from(x).ok())
                        .ok_or_else(|| {
                            ArithError::BadSerialization("abc exponents are nonnegative".into())
                        })
                })
                .collect::<Result<_, _>>()?;
            let coeff = MultiPoly::<CycloScalar>::from_json(
                t.get("coeff")
                    .ok_or_else(|| ArithError::BadSerialization("term needs coeff".into()))?,
                Some(&out.registry),
            )?;
            if let Some(s) = coeff.terms().next().map(|(_, s)| s) {
                if s.order() != d {
                    return Err(UawError::OrderMismatch(d, s.order()));
                }
            }
            out.add_term((idx[0], idx[1], idx[2]), coeff);
        }
        Ok(out)
    }
}

/// Per-multiplication rewriting context with a monomial-level memo.
struct MulCtx {
    d: u32,
    registry: Arc<VarRegistry>,
    memo: HashMap<(Mono, Generator), Arc<BTreeMap<Mono, CoeffPoly>>>,
}

impl MulCtx {
    fn q(&self, e: i64) -> CycloScalar {
        CycloScalar::q_pow(self.d, e)
    }

    fn constant(&self, s: CycloScalar) -> CoeffPoly {
        MultiPoly::constant(self.registry.clone(), s)
    }

    fn central(&self, name: &str) -> CoeffPoly {
        MultiPoly::monomial(self.registry.clone(), name, 1, CycloScalar::one(self.d))
            .expect("central variable")
    }

    fn elem_rmul(
        &mut self,
        terms: &BTreeMap<Mono, CoeffPoly>,
        g: Generator,
    ) -> BTreeMap<Mono, CoeffPoly> {
        let mut out: BTreeMap<Mono, CoeffPoly> = BTreeMap::new();
        for (m, c) in terms {
            let image = self.mono_rmul(*m, g);
            for (m2, c2) in image.iter() {
                let prod = c.mul(c2);
                if prod.is_zero() {
                    continue;
                }
                match out.get_mut(m2) {
                    Some(v) => {
                        let sum = v.add(&prod);
                        if sum.is_zero() {
                            out.remove(m2);
                        } else {
                            *v = sum;
                        }
                    }
                    None => {
                        out.insert(*m2, prod);
                    }
                }
            }
        }
        out
    }

    /// Normal form of `A^{i0} B^{i1} C^{i2} * g`.
    fn mono_rmul(&mut self, m: Mono, g: Generator) -> Arc<BTreeMap<Mono, CoeffPoly>> {
        if let Some(hit) = self.memo.get(&(m, g)) {
            return hit.clone();
        }
        let (i0, i1, i2) = m;
        let one = self.constant(CycloScalar::one(self.d));
        let result: BTreeMap<Mono, CoeffPoly> = match g {
            Generator::C => BTreeMap::from([((i0, i1, i2 + 1), one)]),
            Generator::B => {
                if i2 == 0 {
                    BTreeMap::from([((i0, i1 + 1, 0), one)])
                } else {
                    // ...C^{i2} B = ...C^{i2-1} (q^2 BC + q(q^2-q^{-2}) A - q(q-q^{-1}) alpha).
                    let prefix = (i0, i1, i2 - 1);
                    let with_b = self.mono_rmul(prefix, Generator::B);
                    let shifted_c = self.elem_rmul(&with_b, Generator::C);
                    let mut out = scale(&shifted_c, &self.constant(self.q(2)));
                    let with_a = self.mono_rmul(prefix, Generator::A);
                    let c_a = self.q(1).mul_ref(&self.q(2).sub_ref(&self.q(-2)));
                    accumulate(&mut out, &scale(&with_a, &self.constant(c_a)));
                    let c_alpha = self.q(1).mul_ref(&self.q(1).sub_ref(&self.q(-1)));
                    let alpha_term = self.central("alpha").scalar_mul(&c_alpha).neg();
                    accumulate(
                        &mut out,
                        &BTreeMap::from([(prefix, alpha_term)]),
                    );
                    out
                }
            }
            Generator::A => {
                if i1 == 0 && i2 == 0 {
                    BTreeMap::from([((i0 + 1, 0, 0), one)])
                } else if i2 > 0 {
                    // ...C^{i2} A = ...C^{i2-1} (q^{-2} AC - q^{-1}(q^2-q^{-2}) B + q^{-1}(q-q^{-1}) beta).
                    let prefix = (i0, i1, i2 - 1);
                    let with_a = self.mono_rmul(prefix, Generator::A);
                    let shifted_c = self.elem_rmul(&with_a, Generator::C);
                    let mut out = scale(&shifted_c, &self.constant(self.q(-2)));
                    let with_b = self.mono_rmul(prefix, Generator::B);
                    let c_b = self.q(-1).mul_ref(&self.q(2).sub_ref(&self.q(-2)));
                    accumulate(&mut out, &scale(&with_b, &self.constant(c_b).neg()));
                    let c_beta = self.q(-1).mul_ref(&self.q(1).sub_ref(&self.q(-1)));
                    let beta_term = self.central("beta").scalar_mul(&c_beta);
                    accumulate(&mut out, &BTreeMap::from([(prefix, beta_term)]));
                    out
                } else {
                    // ...B^{i1} A = ...B^{i1-1} (q^2 AB + q(q^2-q^{-2}) C - q(q-q^{-1}) gamma).
                    let prefix = (i0, i1 - 1, 0);
                    let with_a = self.mono_rmul(prefix, Generator::A);
                    let shifted_b = self.elem_rmul(&with_a, Generator::B);
                    let mut out = scale(&shifted_b, &self.constant(self.q(2)));
                    let with_c = self.mono_rmul(prefix, Generator::C);
                    let c_c = self.q(1).mul_ref(&self.q(2).sub_ref(&self.q(-2)));
                    accumulate(&mut out, &scale(&with_c, &self.constant(c_c)));
                    let c_gamma = self.q(1).mul_ref(&self.q(1).sub_ref(&self.q(-1)));
                    let gamma_term = self.central("gamma").scalar_mul(&c_gamma).neg();
                    accumulate(&mut out, &BTreeMap::from([(prefix, gamma_term)]));
                    out
                }
            }
        };
        let result = Arc::new(result);
        self.memo.insert((m, g), result.clone());
        result
    }
}

fn scale(terms: &BTreeMap<Mono, CoeffPoly>, by: &CoeffPoly) -> BTreeMap<Mono, CoeffPoly> {
    terms
        .iter()
        .filter_map(|(m, c)| {
            let p = c.mul(by);
            (!p.is_zero()).then_some((*m, p))
        })
        .collect()
}

fn accumulate(into: &mut BTreeMap<Mono, CoeffPoly>, from: &BTreeMap<Mono, CoeffPoly>) {
    for (m, c) in from {
        match into.get_mut(m) {
            Some(v) => {
                let sum = v.add(c);
                if sum.is_zero() {
                    into.remove(m);
                } else {
                    *v = sum;
                }
            }
            None => {
                if !c.is_zero() {
                    into.insert(*m, c.clone());
                }
            }
        }
    }
}

/// The normalized Casimir element
/// `q^2 + q^{-2} - qABC - q^2 A^2 - q^{-2} B^2 - q^2 C^2
///  + q A alpha + q^{-1} B beta + q C gamma`.
pub fn casimir_omega(d: u32) -> UAWElement {
    let q = |e: i64| CycloScalar::q_pow(d, e);
    let reg = uaw_registry();
    let central = |name: &str, s: CycloScalar| {
        MultiPoly::monomial(reg.clone(), name, 1, s).unwrap()
    };
    UAWElement::from_terms(
        d,
        [
            ((0, 0, 0), MultiPoly::constant(reg.clone(), q(2).add_ref(&q(-2)))),
            ((1, 1, 1), MultiPoly::constant(reg.clone(), q(1).neg_ref())),
            ((2, 0, 0), MultiPoly::constant(reg.clone(), q(2).neg_ref())),
            ((0, 2, 0), MultiPoly::constant(reg.clone(), q(-2).neg_ref())),
            ((0, 0, 2), MultiPoly::constant(reg.clone(), q(2).neg_ref())),
            ((1, 0, 0), central("alpha", q(1))),
            ((0, 1, 0), central("beta", q(-1))),
            ((0, 0, 1), central("gamma", q(1))),
        ],
    )
}

/// `T_n(g)` in PBW form (a univariate polynomial in a single generator).
pub fn cheb_of_generator(n: u32, g: Generator, d: u32) -> UAWElement {
    let t = cheb_t(n);
    let mut out = UAWElement::zero(d);
    for (i, c) in t.coeffs().iter().enumerate() {
        if Coeff::is_zero(c) {
            continue;
        }
        let mono = match g {
            Generator::A => (i as u32, 0, 0),
            Generator::B => (0, i as u32, 0),
            Generator::C => (0, 0, i as u32),
        };
        out.add_term(
            mono,
            MultiPoly::constant(out.registry.clone(), CycloScalar::from_rational(d, c.clone())),
        );
    }
    out
}

/// Evaluates a four-variable polynomial at `(alpha, beta, gamma; Omega)`,
/// with `Omega` replaced by its PBW expansion.
pub fn eval_capital_at_omega(p: &CommPoly4, d: u32) -> UAWElement {
    let omega = casimir_omega(d);
    let max_x = p.terms().map(|(e, _)| e[3]).max().unwrap_or(0);
    let mut omega_pows = Vec::with_capacity(max_x as usize + 1);
    omega_pows.push(UAWElement::one(d));
    for i in 1..=max_x {
        let prev = omega_pows[(i - 1) as usize].clone();
        omega_pows.push(prev.mul(&omega));
    }
    let reg = uaw_registry();
    let mut out = UAWElement::zero(d);
    for (exps, c) in p.terms() {
        let coeff = MultiPoly::from_terms(
            reg.clone(),
            [(
                vec![exps[0], exps[1], exps[2]],
                CycloScalar::from_rational(d, c.clone()),
            )],
        )
        .unwrap();
        out = out.add(&omega_pows[exps[3] as usize].coeff_mul(&coeff));
    }
    out
}

/// Seeded random element: PBW exponents at most 2, coefficient polynomials
/// with at most 2 terms, integer scalar coefficients in `[-3, 3]`.
pub fn random_element(d: u32, rng: &mut impl Rng) -> UAWElement {
    random_element_bounded(d, rng, 2, 2)
}

/// Random element with caller-chosen exponent bounds (same term counts and
/// scalar range as [`random_element`]).
pub fn random_element_bounded(
    d: u32,
    rng: &mut impl Rng,
    pbw_max: u32,
    coeff_max: i64,
) -> UAWElement {
    let reg = uaw_registry();
    let mut out = UAWElement::zero(d);
    let n_terms = rng.gen_range(1..=3);
    for _ in 0..n_terms {
        let mono = (
            rng.gen_range(0..=pbw_max),
            rng.gen_range(0..=pbw_max),
            rng.gen_range(0..=pbw_max),
        );
        let mut coeff = MultiPoly::zero(reg.clone());
        for _ in 0..rng.gen_range(1..=2) {
            let exps = vec![
                rng.gen_range(0..=coeff_max),
                rng.gen_range(0..=coeff_max),
                rng.gen_range(0..=coeff_max),
            ];
            let scalar = CycloScalar::from_int(d, rng.gen_range(-3..=3i64));
            coeff = coeff
                .add(&MultiPoly::from_terms(reg.clone(), [(exps, scalar)]).unwrap());
        }
        out.add_term(mono, coeff);
    }
    out
}

fn gens(d: u32) -> [UAWElement; 3] {
    [
        UAWElement::generator(d, Generator::A),
        UAWElement::generator(d, Generator::B),
        UAWElement::generator(d, Generator::C),
    ]
}

/// Centrality and congruence checks around `T_dbar` of the generators.
pub fn centrality_suite(d: u32) -> SuiteReport {
    let db = dbar(d);
    let mut report = SuiteReport::default();
    let names = ["A", "B", "C"];
    let all = gens(d);

    for (gi, g) in [Generator::A, Generator::B, Generator::C].iter().enumerate() {
        let t = cheb_of_generator(db, *g, d);
        let mut bad = None;
        for (hi, h) in all.iter().enumerate() {
            let comm = t.commutator(h);
            if !comm.is_zero() {
                bad = Some(format!(
                    "[T_{db}({}), {}] has {} nonzero PBW terms",
                    names[gi],
                    names[hi],
                    comm.num_terms()
                ));
                break;
            }
        }
        report.push(SuiteItem::from_eq(
            format!("tdbar_{}_central", names[gi].to_lowercase()),
            "Theorem 3.2",
            bad.is_none(),
            bad.unwrap_or_default(),
        ));
    }

    // Multiples of dbar stay central: n = 2 dbar.
    {
        let mut ok = true;
        let mut detail = String::new();
        for (gi, g) in [Generator::A, Generator::B, Generator::C].iter().enumerate() {
            let t = cheb_of_generator(2 * db, *g, d);
            for h in &all {
                if !t.commutator(h).is_zero() {
                    ok = false;
                    detail = format!("[T_{}({}), .] != 0", 2 * db, names[gi]);
                }
            }
        }
        report.push(SuiteItem::from_eq(
            "tdbar_multiples_central",
            "Proposition 3.6(i)",
            ok,
            detail,
        ));
    }

    // prod_{i=0}^{dbar-1} (G - Theta_i(lambda)) is central, with lambda kept
    // as an invertible commuting coefficient variable.
    {
        let reg = uaw_registry_lambda();
        let theta_coeff = |i: i64| -> CoeffPoly {
            MultiPoly::monomial(reg.clone(), "lambda", -1, CycloScalar::q_pow(d, 2 * i))
                .unwrap()
                .add(
                    &MultiPoly::monomial(reg.clone(), "lambda", 1, CycloScalar::q_pow(d, -2 * i))
                        .unwrap(),
                )
        };
        let mut ok = true;
        let mut detail = String::new();
        for (gi, g) in [Generator::A, Generator::B, Generator::C].iter().enumerate() {
            let mut prod = UAWElement::one(d);
            for i in 0..db as i64 {
                let factor = UAWElement::generator(d, *g)
                    .sub(&UAWElement::one(d).coeff_mul(&theta_coeff(i)));
                prod = prod.mul(&factor);
            }
            for (hi, h) in all.iter().enumerate() {
                if !prod.commutator(h).is_zero() {
                    ok = false;
                    detail = format!(
                        "[prod (({}) - Theta_i(lambda)), {}] != 0",
                        names[gi], names[hi]
                    );
                }
            }
        }
        report.push(SuiteItem::from_eq(
            "theta_product_central",
            "Proposition 3.6(ii)",
            ok,
            detail,
        ));
    }

    // Leading-order congruences: CB = q^2 BC, CA = q^{-2} AC, BA = q^2 AB
    // modulo filtration degree 1.
    {
        let q = |e: i64| CycloScalar::q_pow(d, e);
        let [a, b, c] = gens(d).map(|g| g);
        let pairs = [
            (c.mul(&b), b.mul(&c).scalar_mul(&q(2)), "CB vs q^2 BC"),
            (c.mul(&a), a.mul(&c).scalar_mul(&q(-2)), "CA vs q^-2 AC"),
            (b.mul(&a), a.mul(&b).scalar_mul(&q(2)), "BA vs q^2 AB"),
        ];
        let mut ok = true;
        let mut detail = String::new();
        for (lhs, rhs, label) in pairs {
            let diff = lhs.sub(&rhs);
            if diff.filtration_degree().map_or(false, |deg| deg > 1) {
                ok = false;
                detail = format!("{label}: difference left filtration degree 1");
            }
        }
        report.push(SuiteItem::from_eq(
            "leading_congruences",
            "Lemma 4.2",
            ok,
            detail,
        ));
    }

    // A^{i0} B^{i1} C^{i2} = (-1)^l q^{l(l - 2 i1)} A^{i0-l} B^{i1-l} C^{i2-l} Omega^l
    // modulo filtration degree i0+i1+i2-1, for small exponents.
    {
        let omega = casimir_omega(d);
        let mut ok = true;
        let mut detail = String::new();
        'outer: for i0 in 1..=3u32 {
            for i1 in 1..=3u32 {
                for i2 in 1..=3u32 {
                    let lmax = i0.min(i1).min(i2);
                    for l in 0..=lmax {
                        let lhs = UAWElement::from_terms(
                            d,
                            [(
                                (i0, i1, i2),
                                MultiPoly::constant(uaw_registry(), CycloScalar::one(d)),
                            )],
                        );
                        let sign = if l % 2 == 0 { 1 } else { -1 };
                        let phase = CycloScalar::q_pow(
                            d,
                            l as i64 * (l as i64 - 2 * i1 as i64),
                        )
                        .mul_ref(&CycloScalar::from_int(d, sign));
                        let rhs = UAWElement::from_terms(
                            d,
                            [(
                                (i0 - l, i1 - l, i2 - l),
                                MultiPoly::constant(uaw_registry(), phase),
                            )],
                        )
                        .mul(&omega.pow(l));
                        let diff = lhs.sub(&rhs);
                        let bound = (i0 + i1 + i2 - 1) as u64;
                        if diff.filtration_degree().map_or(false, |deg| deg > bound) {
                            ok = false;
                            detail = format!(
                                "A^{i0}B^{i1}C^{i2} vs Omega^{l}: degree exceeds {bound}"
                            );
                            break 'outer;
                        }
                    }
                }
            }
        }
        report.push(SuiteItem::from_eq(
            "omega_extraction_congruence",
            "Lemma 4.3(ii)",
            ok,
            detail,
        ));
    }

    // Cross-module consistency: B A^n = P_n(A) B + Q_n(A) C + R_n(A) beta
    // + S_n(A) gamma for n <= 2 dbar.
    {
        let [a, b, _] = gens(d).map(|g| g);
        let reg = uaw_registry();
        let mut ok = true;
        let mut detail = String::new();
        for n in 0..=2 * db {
            let [p, qq, r, s] = crate::qidentities::pqrs(n, d);
            let poly_of_a = |poly: &crate::coeffring::UniPoly<CycloScalar>| {
                let mut out = UAWElement::zero(d);
                for (i, c) in poly.coeffs().iter().enumerate() {
                    if !Coeff::is_zero(c) {
                        out.add_term(
                            (i as u32, 0, 0),
                            MultiPoly::constant(reg.clone(), c.clone()),
                        );
                    }
                }
                out
            };
            let lhs = b.mul(&a.pow(n));
            let beta = MultiPoly::monomial(reg.clone(), "beta", 1, CycloScalar::one(d)).unwrap();
            let gamma = MultiPoly::monomial(reg.clone(), "gamma", 1, CycloScalar::one(d)).unwrap();
            let rhs = poly_of_a(&p)
                .mul(&b)
                .add(&poly_of_a(&qq).mul(&UAWElement::generator(d, Generator::C)))
                .add(&poly_of_a(&r).coeff_mul(&beta))
                .add(&poly_of_a(&s).coeff_mul(&gamma));
            if lhs != rhs {
                ok = false;
                detail = format!("B A^{n} mismatch");
                break;
            }
        }
        report.push(SuiteItem::from_eq(
            "ba_power_expansion",
            "Lemma 3.4",
            ok,
            detail,
        ));
    }

    // Degenerate branches: at q^2 = 1 the algebra is commutative on the
    // generator level (P_1 = X, Q_1 = R_1 = S_1 = 0); at q^4 = 1 the n = 2
    // expansion collapses to P_2 = X^2.
    if db == 1 {
        let [a, b, _] = gens(d).map(|g| g);
        report.push(SuiteItem::from_eq(
            "degenerate_q2_commutes",
            "Theorem 3.2 (dbar = 1 branch)",
            b.mul(&a) == a.mul(&b),
            "BA != AB at q^2 = 1",
        ));
    }
    if db == 2 {
        let [a, b, _] = gens(d).map(|g| g);
        let lhs = b.mul(&a.pow(2));
        let rhs = UAWElement::from_terms(
            d,
            [((2, 1, 0), MultiPoly::constant(uaw_registry(), CycloScalar::one(d)))],
        );
        report.push(SuiteItem::from_eq(
            "degenerate_q4_p2",
            "Theorem 3.2 (dbar = 2 branch)",
            lhs == rhs,
            "B A^2 != A^2 B at q^4 = 1",
        ));
    }

    report
}

/// Builds both sides of the center relation
///
/// ```text
/// q^dbar sum_i Phi_dbar^{ubar i}(alpha,beta,gamma;Omega) T_dbar(G_i)
///   = q^dbar T_dbar(A) T_dbar(B) T_dbar(C) + sum T_dbar(G)^2
///     + Psi_dbar(alpha,beta,gamma;Omega) - 2
/// ```
///
/// and checks that the difference is zero in PBW form.
pub fn central_relation_check(d: u32) -> Result<SuiteReport, UawError> {
    let db = dbar(d);
    let (capital_phi, capital_psi) =
        solve_capital(db).map_err(|e| UawError::Capital(e.to_string()))?;
    let qd = CycloScalar::q_pow(d, db as i64);
    let ta = cheb_of_generator(db, Generator::A, d);
    let tb = cheb_of_generator(db, Generator::B, d);
    let tc = cheb_of_generator(db, Generator::C, d);
    let mut lhs = UAWElement::zero(d);
    for (i, t) in [&ta, &tb, &tc].iter().enumerate() {
        let shifted = cyclic_shift(i as u8, &capital_phi);
        let coeff = eval_capital_at_omega(&shifted, d);
        lhs = lhs.add(&coeff.mul(t).scalar_mul(&qd));
    }
    let rhs = ta
        .mul(&tb)
        .mul(&tc)
        .scalar_mul(&qd)
        .add(&ta.mul(&ta))
        .add(&tb.mul(&tb))
        .add(&tc.mul(&tc))
        .add(&eval_capital_at_omega(&capital_psi, d))
        .sub(&UAWElement::scalar(d, CycloScalar::from_int(d, 2)));
    let diff = lhs.sub(&rhs);
    let mut report = SuiteReport::default();
    report.push(SuiteItem::from_eq(
        format!("center_relation_d{d}"),
        "Theorem 4.6",
        diff.is_zero(),
        format!("residual has {} PBW terms", diff.num_terms()),
    ));
    Ok(report)
}

/// Enumerates the center-basis monomials
/// `T_dbar(A)^{i0} T_dbar(B)^{i1} T_dbar(C)^{i2} alpha^{j0} beta^{j1}
///  gamma^{j2} Omega^l` with `i0 i1 i2 = 0` and filtration weight
/// `dbar(i0+i1+i2) + j0+j1+j2 + 3l <= degree_bound`; verifies that each is
/// central and that the set is linearly independent.
pub fn center_basis_bounded_check(d: u32, degree_bound: u32, seed: u64) -> SuiteReport {
    let db = dbar(d);
    let mut tuples = vec![];
    let bound = degree_bound;
    for i0 in 0..=bound / db {
        for i1 in 0..=bound / db {
            for i2 in 0..=bound / db {
                if i0 * i1 * i2 != 0 || db * (i0 + i1 + i2) > bound {
                    continue;
                }
                let rest = bound - db * (i0 + i1 + i2);
                for j0 in 0..=rest {
                    for j1 in 0..=rest - j0 {
                        for j2 in 0..=rest - j0 - j1 {
                            for l in 0..=(rest - j0 - j1 - j2) / 3 {
                                tuples.push((i0, i1, i2, j0, j1, j2, l));
                            }
                        }
                    }
                }
            }
        }
    }
    let omega = casimir_omega(d);
    let reg = uaw_registry();
    let elements: Vec<UAWElement> = tuples
        .iter()
        .map(|&(i0, i1, i2, j0, j1, j2, l)| {
            let coeff = MultiPoly::from_terms(
                reg.clone(),
                [(
                    vec![j0 as i64, j1 as i64, j2 as i64],
                    CycloScalar::one(d),
                )],
            )
            .unwrap();
            cheb_of_generator(db, Generator::A, d)
                .pow(i0)
                .mul(&cheb_of_generator(db, Generator::B, d).pow(i1))
                .mul(&cheb_of_generator(db, Generator::C, d).pow(i2))
                .mul(&omega.pow(l))
                .coeff_mul(&coeff)
        })
        .collect();

    let mut report = SuiteReport::default();
    // Centrality of every basis monomial.
    let all = gens(d);
    let mut central_ok = true;
    let mut central_detail = String::new();
    for (e, t) in elements.iter().zip(&tuples) {
        for h in &all {
            if !e.commutator(h).is_zero() {
                central_ok = false;
                central_detail = format!("monomial {t:?} is not central");
            }
        }
    }
    report.push(SuiteItem::from_eq(
        "center_basis_central",
        "Theorem 4.1",
        central_ok,
        central_detail,
    ));

    // Symbolic independence via pairwise-distinct leading keys.
    let leading_key = |e: &UAWElement| -> Option<(u32, Mono, u64, Vec<i64>)> {
        e.terms()
            .flat_map(|(m, c)| {
                c.terms().map(move |(exps, _)| {
                    (
                        m.0 + m.1 + m.2,
                        *m,
                        MultiPoly::<CycloScalar>::term_abs_degree(exps),
                        exps.clone(),
                    )
                })
            })
            .max()
    };
    let mut keys: Vec<_> = elements.iter().map(leading_key).collect();
    let distinct = {
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        sorted.len() == keys.len()
    };
    keys.dedup();
    report.push(SuiteItem::from_eq(
        "center_basis_leading_terms_distinct",
        "Theorem 4.1 / Theorem 4.15",
        distinct,
        "two basis monomials share a leading PBW term",
    ));

    // No nontrivial rational kernel after specializing alpha, beta, gamma at
    // random rational tuples.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut vectors: Vec<Vec<Rational>> = vec![vec![]; elements.len()];
    // Enough random points to separate polynomials in alpha, beta, gamma of
    // total degree <= degree_bound (their space has dimension C(bound+3, 3)).
    let n_specs = ((bound as usize + 1) * (bound as usize + 2) * (bound as usize + 3)) / 6;
    for _ in 0..n_specs {
        let spec: Vec<Rational> = (0..3)
            .map(|_| Rational::new(rng.gen_range(1..=9).into(), rng.gen_range(1..=4).into()))
            .collect();
        // Coordinates: PBW monomial x cyclotomic coefficient slot.
        let mut monos: Vec<Mono> = vec![];
        for e in &elements {
            for (m, _) in e.terms() {
                monos.push(*m);
            }
        }
        monos.sort();
        monos.dedup();
        for (row, e) in vectors.iter_mut().zip(&elements) {
            for m in &monos {
                let mut value = CycloScalar::zero(d);
                if let Some(c) = e.coeff(*m) {
                    for (exps, s) in c.terms() {
                        let mut factor = Rational::from_integer(1.into());
                        for (slot, &exp) in exps.iter().enumerate().take(3) {
                            for _ in 0..exp {
                                factor *= &spec[slot];
                            }
                        }
                        value = value
                            .add_ref(&s.mul_ref(&CycloScalar::from_rational(d, factor)));
                    }
                }
                row.extend(value.coeffs().iter().cloned());
            }
        }
    }
    let rank = linalg::rank_dense(vectors);
    report.push(SuiteItem::from_eq(
        "center_basis_rational_kernel_trivial",
        "Theorem 4.1",
        rank == elements.len(),
        format!("rank {rank} of {} candidate basis vectors", elements.len()),
    ));
    report
}

/// Fixed-seed fuzz checks: associativity, filtration submultiplicativity,
/// and the automorphism properties of `rho`.
pub fn property_fuzz(d: u32, seed: u64, rounds: u32) -> SuiteReport {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::default();

    let mut assoc_ok = true;
    let mut filt_ok = true;
    let mut rho_mul_ok = true;
    let mut rho_cube_ok = true;
    for _ in 0..rounds {
        let x = random_element(d, &mut rng);
        let y = random_element(d, &mut rng);
        let z = random_element(d, &mut rng);
        if x.mul(&y).mul(&z) != x.mul(&y.mul(&z)) {
            assoc_ok = false;
        }
        let xy = x.mul(&y);
        if let (Some(dx), Some(dy), Some(dxy)) = (
            x.filtration_degree(),
            y.filtration_degree(),
            xy.filtration_degree(),
        ) {
            if dxy > dx + dy {
                filt_ok = false;
            }
        }
        if x.rho().mul(&y.rho()) != xy.rho() {
            rho_mul_ok = false;
        }
        if x.rho().rho().rho() != x {
            rho_cube_ok = false;
        }
    }
    report.push(SuiteItem::from_eq(
        "mul_associative_fuzz",
        "Lemma 2.1",
        assoc_ok,
        "associativity failed on a random triple",
    ));
    report.push(SuiteItem::from_eq(
        "filtration_submultiplicative_fuzz",
        "Filtration property (F2)",
        filt_ok,
        "deg(xy) > deg(x) + deg(y) on a random pair",
    ));
    report.push(SuiteItem::from_eq(
        "rho_algebra_map_fuzz",
        "Lemma 2.3",
        rho_mul_ok,
        "rho(xy) != rho(x) rho(y) on a random pair",
    ));
    report.push(SuiteItem::from_eq(
        "rho_order_three_fuzz",
        "Lemma 2.3",
        rho_cube_ok,
        "rho^3 != id on a random element",
    ));

    let omega = casimir_omega(d);
    let mut omega_ok = true;
    for g in gens(d) {
        if !omega.commutator(&g).is_zero() {
            omega_ok = false;
        }
    }
    report.push(SuiteItem::from_eq(
        "omega_central",
        "Lemma 2.3",
        omega_ok,
        "[Omega, generator] != 0",
    ));
    report.push(SuiteItem::from_eq(
        "omega_rho_invariant",
        "Lemma 2.3",
        omega.rho() == omega,
        "rho(Omega) != Omega",
    ));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::rat;

    fn a(d: u32) -> UAWElement {
        UAWElement::generator(d, Generator::A)
    }
    fn b(d: u32) -> UAWElement {
        UAWElement::generator(d, Generator::B)
    }
    fn c(d: u32) -> UAWElement {
        UAWElement::generator(d, Generator::C)
    }

    #[test]
    fn defining_relation_cb() {
        // C B = q^2 BC + q(q^2 - q^{-2}) A - q(q - q^{-1}) alpha.
        let d = 5;
        let q = |e: i64| CycloScalar::q_pow(d, e);
        let lhs = c(d).mul(&b(d));
        let alpha =
            MultiPoly::monomial(uaw_registry(), "alpha", 1, CycloScalar::one(d)).unwrap();
        let rhs = b(d)
            .mul(&c(d))
            .scalar_mul(&q(2))
            .add(&a(d).scalar_mul(&q(1).mul_ref(&q(2).sub_ref(&q(-2)))))
            .sub(
                &UAWElement::one(d)
                    .coeff_mul(&alpha)
                    .scalar_mul(&q(1).mul_ref(&q(1).sub_ref(&q(-1)))),
            );
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn unit_and_associativity() {
        let d = 3;
        let x = casimir_omega(d);
        assert_eq!(UAWElement::one(d).mul(&x), x);
        assert_eq!(x.mul(&UAWElement::one(d)), x);
        // (B A) A = B (A A), reduced along both orders.
        let lhs = b(d).mul(&a(d)).mul(&a(d));
        let rhs = b(d).mul(&a(d).mul(&a(d)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn omega_properties() {
        let d = 5;
        let omega = casimir_omega(d);
        // Coefficient of ABC is -q.
        assert_eq!(
            omega.coeff((1, 1, 1)).and_then(|c| c.as_constant()).cloned(),
            Some(CycloScalar::q_pow(d, 1).neg_ref())
        );
        for g in [Generator::A, Generator::B, Generator::C] {
            assert!(omega
                .commutator(&UAWElement::generator(d, g))
                .is_zero());
        }
        assert_eq!(omega.rho(), omega);
    }

    #[test]
    fn rho_cycles_generators() {
        let d = 7;
        assert_eq!(a(d).rho(), b(d));
        assert_eq!(b(d).rho(), c(d));
        assert_eq!(c(d).rho(), a(d));
        let alpha = UAWElement::central(d, uaw_registry(), "alpha", 1).unwrap();
        let beta = UAWElement::central(d, uaw_registry(), "beta", 1).unwrap();
        assert_eq!(alpha.rho(), beta);
    }

    #[test]
    fn filtration_degrees() {
        let d = 5;
        assert_eq!(casimir_omega(d).filtration_degree(), Some(3));
        let alpha = UAWElement::central(d, uaw_registry(), "alpha", 1).unwrap();
        assert_eq!(alpha.filtration_degree(), Some(1));
        let a2b = a(d).pow(2).mul(&b(d));
        assert_eq!(a2b.filtration_degree(), Some(3));
        assert_eq!(UAWElement::zero(d).filtration_degree(), None);
    }

    #[test]
    fn chebyshev_of_generators() {
        let d = 6;
        assert_eq!(cheb_of_generator(1, Generator::A, d), a(d));
        // T_2(B) = B^2 - 2.
        let expected = b(d)
            .mul(&b(d))
            .sub(&UAWElement::scalar(d, CycloScalar::from_int(d, 2)));
        assert_eq!(cheb_of_generator(2, Generator::B, d), expected);
        // d = 6 has dbar = 3: T_3(A) commutes with B.
        let t3a = cheb_of_generator(3, Generator::A, d);
        assert!(t3a.commutator(&b(d)).is_zero());
    }

    #[test]
    fn serde_round_trip() {
        let d = 4;
        let e = casimir_omega(d).mul(&a(d)).add(&b(d).pow(2));
        let json = e.to_json();
        let text = serde_json::to_string(&json).unwrap();
        let back = UAWElement::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back.to_json(), json);
        assert_eq!(back.mul(&a(d)), e.mul(&a(d)));
    }

    #[test]
    fn centrality_suite_small_orders() {
        for d in [1, 2, 3, 4] {
            let report = centrality_suite(d);
            assert!(report.all_pass(), "d={d}: {:?}", report.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn central_relation_small_orders() {
        for d in [1, 2, 3] {
            let report = central_relation_check(d).unwrap();
            assert!(report.all_pass(), "d={d}");
        }
    }

    #[test]
    fn center_basis_small() {
        let report = center_basis_bounded_check(3, 3, 11);
        assert!(report.all_pass(), "{:?}", report.failures().collect::<Vec<_>>());
        let report = center_basis_bounded_check(4, 2, 11);
        assert!(report.all_pass());
    }

    #[test]
    fn fuzz_properties() {
        let report = property_fuzz(3, 1, 40);
        assert!(report.all_pass());
    }

    #[test]
    fn lambda_registry_products() {
        // Multiplication with the lambda-extended registry keeps exactness.
        let d = 3;
        let lam = UAWElement::central(d, uaw_registry_lambda(), "lambda", -1).unwrap();
        let x = a(d).mul(&lam).mul(&b(d));
        assert_eq!(x.filtration_degree(), Some(2));
        let y = x.mul(&UAWElement::central(d, uaw_registry_lambda(), "lambda", 1).unwrap());
        assert_eq!(y, a(d).mul(&b(d)));
        let _ = rat(1, 1);
    }
}
