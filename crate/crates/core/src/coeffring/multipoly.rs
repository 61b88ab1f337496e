//! Sparse multivariate Laurent polynomials over an exact scalar ring.

use super::{ArithError, Coeff, FieldCoeff, JsonScalar};
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

/// An ordered list of variable names with a per-variable flag allowing
/// negative exponents.
#[derive(Debug, PartialEq, Eq)]
pub struct VarRegistry {
    names: Vec<String>,
    laurent: Vec<bool>,
    index: HashMap<String, usize>,
}

impl VarRegistry {
    pub fn new(vars: &[(&str, bool)]) -> Arc<Self> {
        let names: Vec<String> = vars.iter().map(|(n, _)| n.to_string()).collect();
        let laurent = vars.iter().map(|(_, l)| *l).collect();
        let index = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        Arc::new(VarRegistry {
            names,
            laurent,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_laurent(&self, i: usize) -> bool {
        self.laurent[i]
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Union of two registries; shared names must agree on the Laurent flag.
    pub fn merge(a: &Arc<Self>, b: &Arc<Self>) -> Result<Arc<Self>, ArithError> {
        if Arc::ptr_eq(a, b) || a == b {
            return Ok(a.clone());
        }
        let mut vars: Vec<(&str, bool)> = a
            .names
            .iter()
            .map(|n| n.as_str())
            .zip(a.laurent.iter().copied())
            .collect();
        for (name, &flag) in b.names.iter().zip(&b.laurent) {
            match a.position(name) {
                Some(i) => {
                    if a.laurent[i] != flag {
                        return Err(ArithError::RegistryMismatch(format!(
                            "variable {name} has conflicting Laurent flags"
                        )));
                    }
                }
                None => vars.push((name.as_str(), flag)),
            }
        }
        Ok(VarRegistry::new(&vars))
    }
}

/// A sparse multivariate Laurent polynomial.  Canonical: no stored zero
/// coefficients; term order is lexicographic on exponent vectors.
#[derive(Clone, PartialEq)]
pub struct MultiPoly<S> {
    registry: Arc<VarRegistry>,
    terms: BTreeMap<Vec<i64>, S>,
}

impl<S: Coeff> std::fmt::Debug for MultiPoly<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MultiPoly[{}]", self.pretty_with(|s| format!("{s:?}")))
    }
}

impl<S: Coeff> MultiPoly<S> {
    pub fn zero(registry: Arc<VarRegistry>) -> Self {
        MultiPoly {
            registry,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(registry: Arc<VarRegistry>, scalar: S) -> Self {
        let mut p = Self::zero(registry);
        if !scalar.is_zero() {
            let exps = vec![0; p.registry.len()];
            p.terms.insert(exps, scalar);
        }
        p
    }

    /// `name^exp` scaled by `coeff`.
    pub fn monomial(
        registry: Arc<VarRegistry>,
        name: &str,
        exp: i64,
        coeff: S,
    ) -> Result<Self, ArithError> {
        let idx = registry
            .position(name)
            .ok_or_else(|| ArithError::UnknownVariable(name.to_string()))?;
        if exp < 0 && !registry.is_laurent(idx) {
            return Err(ArithError::NegativeExponent(name.to_string()));
        }
        let mut exps = vec![0; registry.len()];
        exps[idx] = exp;
        let mut p = Self::zero(registry);
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        Ok(p)
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<i64>, S)>>(
        registry: Arc<VarRegistry>,
        terms: I,
    ) -> Result<Self, ArithError> {
        let mut p = Self::zero(registry);
        for (exps, coeff) in terms {
            p.add_term_in_place(&exps, coeff)?;
        }
        Ok(p)
    }

    fn add_term_in_place(&mut self, exps: &[i64], coeff: S) -> Result<(), ArithError> {
        assert_eq!(exps.len(), self.registry.len(), "exponent vector length");
        for (i, &e) in exps.iter().enumerate() {
            if e < 0 && !self.registry.is_laurent(i) {
                return Err(ArithError::NegativeExponent(
                    self.registry.names()[i].clone(),
                ));
            }
        }
        if coeff.is_zero() {
            return Ok(());
        }
        match self.terms.get_mut(exps) {
            Some(c) => {
                let sum = c.add_ref(&coeff);
                if sum.is_zero() {
                    self.terms.remove(exps);
                } else {
                    *c = sum;
                }
            }
            None => {
                self.terms.insert(exps.to_vec(), coeff);
            }
        }
        Ok(())
    }

    pub fn registry(&self) -> &Arc<VarRegistry> {
        &self.registry
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i64]) -> Option<&S> {
        self.terms.get(exps)
    }

    /// Total degree of a term counting absolute exponent values.
    pub fn term_abs_degree(exps: &[i64]) -> u64 {
        exps.iter().map(|e| e.unsigned_abs()).sum()
    }

    /// Re-expresses the polynomial in a super-registry (matched by name).
    pub fn embed(&self, target: &Arc<VarRegistry>) -> Result<Self, ArithError> {
        if Arc::ptr_eq(&self.registry, target) || *self.registry == **target {
            let mut out = self.clone();
            out.registry = target.clone();
            return Ok(out);
        }
        let map: Vec<usize> = self
            .registry
            .names()
            .iter()
            .map(|n| {
                target
                    .position(n)
                    .ok_or_else(|| ArithError::UnknownVariable(n.clone()))
            })
            .collect::<Result<_, _>>()?;
        let mut out = Self::zero(target.clone());
        for (exps, coeff) in &self.terms {
            let mut new_exps = vec![0; target.len()];
            for (i, &e) in exps.iter().enumerate() {
                new_exps[map[i]] = e;
            }
            out.add_term_in_place(&new_exps, coeff.clone())?;
        }
        Ok(out)
    }

    fn aligned(&self, other: &Self) -> Result<(Self, Self), ArithError> {
        let merged = VarRegistry::merge(&self.registry, &other.registry)?;
        Ok((self.embed(&merged)?, other.embed(&merged)?))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.aligned(other).expect("incompatible registries");
        for (exps, coeff) in b.terms {
            a.add_term_in_place(&exps, coeff).expect("aligned terms");
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            registry: self.registry.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg_ref()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other).expect("incompatible registries");
        let mut out = Self::zero(a.registry.clone());
        for (e1, c1) in &a.terms {
            for (e2, c2) in &b.terms {
                let exps: Vec<i64> = e1
                    .iter()
                    .zip(e2)
                    .map(|(x, y)| x.checked_add(*y).expect("exponent overflow"))
                    .collect();
                let prod = c1.mul_ref(c2);
                out.add_term_in_place(&exps, prod).expect("aligned terms");
            }
        }
        out
    }

    pub fn scalar_mul(&self, scalar: &S) -> Self {
        if scalar.is_zero() {
            return Self::zero(self.registry.clone());
        }
        let mut out = Self::zero(self.registry.clone());
        for (exps, coeff) in &self.terms {
            out.add_term_in_place(exps, coeff.mul_ref(scalar))
                .expect("same registry");
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc: Option<Self> = None;
        for _ in 0..e {
            acc = Some(match acc {
                None => self.clone(),
                Some(a) => a.mul(self),
            });
        }
        match acc {
            Some(a) => a,
            None => {
                // Empty product: the constant 1.  A scalar template is taken
                // from any coefficient; the zero polynomial cannot supply one,
                // so 0^0 is resolved by the caller providing nonzero input.
                let template = self
                    .terms
                    .values()
                    .next()
                    .expect("0^0 is not defined for registry-only polynomials");
                Self::constant(self.registry.clone(), template.one_like())
            }
        }
    }

    /// Constant term as a scalar, when the polynomial is constant.
    pub fn as_constant(&self) -> Option<&S> {
        match self.terms.len() {
            0 => None,
            1 => {
                let (exps, c) = self.terms.iter().next().unwrap();
                exps.iter().all(|&e| e == 0).then_some(c)
            }
            _ => None,
        }
    }

    pub fn pretty_with(&self, scalar: impl Fn(&S) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(exps, c)| {
                let mut body = format!("({})", scalar(c));
                for (i, &e) in exps.iter().enumerate() {
                    if e == 1 {
                        body.push_str(&format!("*{}", self.registry.names()[i]));
                    } else if e != 0 {
                        body.push_str(&format!("*{}^{}", self.registry.names()[i], e));
                    }
                }
                body
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl<S: FieldCoeff> MultiPoly<S> {
    /// Substitutes variables by polynomials; the result registry is the merge
    /// of all participating registries.  A Laurent variable occurring with a
    /// negative exponent may only be bound to an invertible polynomial (a
    /// single term with unit coefficient structure); anything else errors.
    pub fn substitute(
        &self,
        bindings: &HashMap<String, MultiPoly<S>>,
    ) -> Result<Self, ArithError> {
        let mut registry = self.registry.clone();
        for b in bindings.values() {
            registry = VarRegistry::merge(&registry, &b.registry)?;
        }
        let mut out = Self::zero(registry.clone());
        for (exps, coeff) in &self.terms {
            let mut term = Self::constant(registry.clone(), coeff.clone());
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = &self.registry.names()[i];
                match bindings.get(name) {
                    None => {
                        let mono =
                            Self::monomial(registry.clone(), name, e, coeff.one_like())?;
                        term = term.mul(&mono);
                    }
                    Some(value) => {
                        let value = value.embed(&registry)?;
                        let powed = if e >= 0 {
                            value.pow(e as u32)
                        } else {
                            value.invert_monomial(name)?.pow((-e) as u32)
                        };
                        term = term.mul(&powed);
                    }
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Inverse of a one-term polynomial whose exponents are all on Laurent
    /// variables; `context_name` only labels the error.
    fn invert_monomial(&self, context_name: &str) -> Result<Self, ArithError> {
        let (exps, coeff) = match self.terms.iter().next() {
            Some(t) if self.terms.len() == 1 => t,
            _ => {
                return Err(ArithError::NonInvertibleSubstitution(
                    context_name.to_string(),
                ))
            }
        };
        for (i, &e) in exps.iter().enumerate() {
            if e != 0 && !self.registry.is_laurent(i) {
                return Err(ArithError::NonInvertibleSubstitution(
                    context_name.to_string(),
                ));
            }
        }
        let inv_exps: Vec<i64> = exps.iter().map(|e| -e).collect();
        let mut out = Self::zero(self.registry.clone());
        out.add_term_in_place(&inv_exps, coeff.inv_ref()?)?;
        Ok(out)
    }
}

impl<S: Coeff + JsonScalar> MultiPoly<S> {
    /// Canonical JSON form, terms sorted by the canonical term order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vars": self.registry.names(),
            "terms": self
                .terms
                .iter()
                .map(|(exps, coeff)| serde_json::json!({"exps": exps, "coeff": coeff.to_json()}))
                .collect::<Vec<_>>(),
        })
    }

    /// Parses the canonical JSON form.  When `registry` is given the document
    /// variables must be a subset of it (matched by name); otherwise a
    /// registry is inferred, flagging as Laurent the variables that occur with
    /// a negative exponent.
    pub fn from_json(
        value: &serde_json::Value,
        registry: Option<&Arc<VarRegistry>>,
    ) -> Result<Self, ArithError> {
        let vars: Vec<String> = value
            .get("vars")
            .and_then(|v| v.as_array())
            .ok_or_else(|| ArithError::BadSerialization("polynomial needs vars".into()))?
            .iter()
            .map(|v| {
                v.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| ArithError::BadSerialization("variable names are strings".into()))
            })
            .collect::<Result<_, _>>()?;
        let raw_terms = value
            .get("terms")
            .and_then(|v| v.as_array())
            .ok_or_else(|| ArithError::BadSerialization("polynomial needs terms".into()))?;
        let mut parsed: Vec<(Vec<i64>, S)> = vec![];
        for t in raw_terms {
            let exps: Vec<i64> = t
                .get("exps")
                .and_then(|v| v.as_array())
                .ok_or_else(|| ArithError::BadSerialization("term needs exps".into()))?
                .iter()
                .map(|e| {
                    e.as_i64()
                        .ok_or_else(|| ArithError::BadSerialization("exponent out of range".into()))
                })
                .collect::<Result<_, _>>()?;
            if exps.len() != vars.len() {
                return Err(ArithError::BadSerialization(
                    "exponent vector length must match vars".into(),
                ));
            }
            let coeff = S::from_json(t.get("coeff").ok_or_else(|| {
                ArithError::BadSerialization("term needs a coeff".into())
            })?)?;
            parsed.push((exps, coeff));
        }
        let registry = match registry {
            Some(r) => {
                for v in &vars {
                    if r.position(v).is_none() {
                        return Err(ArithError::UnknownVariable(v.clone()));
                    }
                }
                r.clone()
            }
            None => {
                let mut flags = vec![false; vars.len()];
                for (exps, _) in &parsed {
                    for (i, &e) in exps.iter().enumerate() {
                        if e < 0 {
                            flags[i] = true;
                        }
                    }
                }
                let spec: Vec<(&str, bool)> = vars
                    .iter()
                    .map(|n| n.as_str())
                    .zip(flags.iter().copied())
                    .collect();
                VarRegistry::new(&spec)
            }
        };
        let mut out = Self::zero(registry.clone());
        for (exps, coeff) in parsed {
            let mut full = vec![0; registry.len()];
            for (i, &e) in exps.iter().enumerate() {
                let idx = registry.position(&vars[i]).expect("checked above");
                full[idx] = e;
            }
            out.add_term_in_place(&full, coeff)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, ArithError, Rational};
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashMap;

    fn reg_abc() -> Arc<VarRegistry> {
        VarRegistry::new(&[("a", true), ("b", true), ("c", true)])
    }

    fn var(reg: &Arc<VarRegistry>, name: &str, exp: i64) -> MultiPoly<Rational> {
        MultiPoly::monomial(reg.clone(), name, exp, rat(1, 1)).unwrap()
    }

    #[test]
    fn laurent_product() {
        // (a + a^{-1})(a - a^{-1}) = a^2 - a^{-2}.
        let reg = reg_abc();
        let sum = var(&reg, "a", 1).add(&var(&reg, "a", -1));
        let diff = var(&reg, "a", 1).sub(&var(&reg, "a", -1));
        let expected = var(&reg, "a", 2).sub(&var(&reg, "a", -2));
        assert_eq!(sum.mul(&diff), expected);
    }

    #[test]
    fn substitution_renames_and_extends() {
        // X |-> X0 applied to X*X1 gives X0*X1.
        let reg = VarRegistry::new(&[("X", false), ("X1", false)]);
        let p = var(&reg, "X", 1).mul(&var(&reg, "X1", 1));
        let target = VarRegistry::new(&[("X0", false)]);
        let mut bindings = HashMap::new();
        bindings.insert("X".to_string(), var(&target, "X0", 1));
        let out = p.substitute(&bindings).unwrap();
        let merged = out.registry().clone();
        let expected = var(&merged, "X0", 1).mul(&var(&merged, "X1", 1));
        assert_eq!(out, expected);
    }

    #[test]
    fn binomial_square() {
        let reg = VarRegistry::new(&[("alpha", false), ("beta", false)]);
        let p = var(&reg, "alpha", 1).add(&var(&reg, "beta", 1));
        let sq = p.pow(2);
        let expected = var(&reg, "alpha", 2)
            .add(&var(&reg, "alpha", 1).mul(&var(&reg, "beta", 1)).scalar_mul(&rat(2, 1)))
            .add(&var(&reg, "beta", 2));
        assert_eq!(sq, expected);
    }

    #[test]
    fn negative_exponent_guard() {
        let reg = VarRegistry::new(&[("x", false)]);
        assert!(matches!(
            MultiPoly::monomial(reg, "x", -1, rat(1, 1)),
            Err(ArithError::NegativeExponent(_))
        ));
    }

    #[test]
    fn laurent_substitution_requires_invertible_binding() {
        let reg = reg_abc();
        let p = var(&reg, "a", -1);
        let mut bindings = HashMap::new();
        bindings.insert("a".to_string(), var(&reg, "b", 1).add(&var(&reg, "c", 1)));
        assert!(matches!(
            p.substitute(&bindings),
            Err(ArithError::NonInvertibleSubstitution(_))
        ));
        // A monomial binding is invertible.
        let mut ok = HashMap::new();
        ok.insert("a".to_string(), var(&reg, "b", 2).scalar_mul(&rat(3, 1)));
        let out = p.substitute(&ok).unwrap();
        let expected = var(&reg, "b", -2).scalar_mul(&rat(1, 3));
        assert_eq!(out, expected);
    }

    #[test]
    fn json_round_trip_polynomial() {
        let reg = reg_abc();
        let p = var(&reg, "a", -2)
            .scalar_mul(&rat(7, 3))
            .add(&var(&reg, "b", 1).mul(&var(&reg, "c", 4)));
        let json = p.to_json();
        let text = serde_json::to_string(&json).unwrap();
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        let q = MultiPoly::<Rational>::from_json(&parsed, Some(&reg)).unwrap();
        assert_eq!(p, q);
        assert_eq!(text, serde_json::to_string(&q.to_json()).unwrap());
        // Registry inference marks "a" Laurent because of the -2 exponent.
        let inferred = MultiPoly::<Rational>::from_json(&parsed, None).unwrap();
        assert!(inferred.registry().is_laurent(0));
        assert_eq!(text, serde_json::to_string(&inferred.to_json()).unwrap());
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly<Rational>> {
        proptest::collection::vec(((-3i64..=3, -3i64..=3, 0i64..=3), -4i64..=4), 0..6).prop_map(
            |terms| {
                let reg = VarRegistry::new(&[("a", true), ("b", true), ("g", false)]);
                MultiPoly::from_terms(
                    reg,
                    terms
                        .into_iter()
                        .map(|((ea, eb, eg), c)| (vec![ea, eb, eg], rat(c, 1))),
                )
                .unwrap()
            },
        )
    }

    proptest! {
        #[test]
        fn canonical_no_zero_terms(p in arb_poly(), q in arb_poly()) {
            for (_, c) in p.add(&q).terms() {
                prop_assert!(!super::super::Coeff::is_zero(c));
            }
            for (_, c) in p.mul(&q).terms() {
                prop_assert!(!super::super::Coeff::is_zero(c));
            }
            // p - p is canonical zero.
            prop_assert!(p.sub(&p).is_zero());
        }

        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(p.mul(&q), q.mul(&p));
            prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
            prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        }
    }
}
