//! Sparse distributed multivariate polynomials.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::field::{Field, FieldSpec};
use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};

/// Variables, coefficient field and term order of a polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring<K: Field> {
    names: Vec<String>,
    ctx: K::Ctx,
    order: MonomialOrder,
}

impl<K: Field> Ring<K> {
    pub fn new(names: Vec<String>, ctx: K::Ctx, order: MonomialOrder) -> Result<Arc<Self>> {
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::InvalidSpec(format!("`{n}` is not a variable name")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidSpec(format!("duplicate variable `{n}`")));
            }
        }
        if let Some(p) = &order.permutation {
            if p.len() != names.len() {
                return Err(Error::InvalidSpec(
                    "order permutation length differs from variable count".into(),
                ));
            }
        }
        Ok(Arc::new(Ring { names, ctx, order }))
    }

    /// Ring over the field described by `spec`.
    pub fn with_spec(names: Vec<String>, spec: &FieldSpec, order: MonomialOrder) -> Result<Arc<Self>> {
        Self::new(names, K::context(spec)?, order)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn ctx(&self) -> &K::Ctx {
        &self.ctx
    }

    pub fn field(&self) -> FieldSpec {
        K::spec(&self.ctx)
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same variables and field under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Self>> {
        Self::new(self.names.clone(), self.ctx.clone(), order)
    }

    /// Ring with one more variable appended after all existing ones.
    pub fn with_extra_var(&self, name: &str) -> Result<Arc<Self>> {
        let mut names = self.names.clone();
        names.push(name.to_string());
        let order = self.order.extended(self.names.len(), 1);
        Self::new(names, self.ctx.clone(), order)
    }

    /// A variable name not yet used in this ring, based on `stem`.
    pub fn fresh_name(&self, stem: &str) -> String {
        let mut name = stem.to_string();
        let mut k = 0;
        while self.var_index(&name).is_some() {
            name = format!("{stem}_{k}");
            k += 1;
        }
        name
    }

    pub fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A polynomial in canonical form: no zero coefficients, distinct monomials,
/// terms strictly descending in the ring's order.
#[derive(Clone)]
pub struct Polynomial<K: Field> {
    ring: Arc<Ring<K>>,
    terms: Vec<(K, Monomial)>,
}

impl<K: Field> PartialEq for Polynomial<K> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.terms == other.terms
    }
}

impl<K: Field> Eq for Polynomial<K> {}

impl<K: Field> fmt::Debug for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

impl<K: Field> Polynomial<K> {
    pub fn zero(ring: &Arc<Ring<K>>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![],
        }
    }

    pub fn one(ring: &Arc<Ring<K>>) -> Self {
        Self::constant(ring, K::one(ring.ctx()))
    }

    pub fn constant(ring: &Arc<Ring<K>>, c: K) -> Self {
        Self::monomial(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn from_i64(ring: &Arc<Ring<K>>, n: i64) -> Self {
        Self::constant(ring, K::from_i64(ring.ctx(), n))
    }

    pub fn var(ring: &Arc<Ring<K>>, index: usize) -> Self {
        assert!(index < ring.nvars(), "variable index {index} out of range");
        Self::monomial(ring, K::one(ring.ctx()), Monomial::var(ring.nvars(), index, 1))
    }

    /// The variable called `name`.
    pub fn var_named(ring: &Arc<Ring<K>>, name: &str) -> Result<Self> {
        ring.var_index(name)
            .map(|i| Self::var(ring, i))
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn monomial(ring: &Arc<Ring<K>>, c: K, m: Monomial) -> Self {
        assert_eq!(m.nvars(), ring.nvars());
        let terms = if c.is_zero() { vec![] } else { vec![(c, m)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds the canonical form of an arbitrary term list: equal monomials
    /// are combined, zero coefficients dropped, terms sorted.
    pub fn from_terms(ring: &Arc<Ring<K>>, terms: Vec<(K, Monomial)>) -> Self {
        let ctx = ring.ctx();
        let mut acc: HashMap<Monomial, K> = HashMap::with_capacity(terms.len());
        for (c, m) in terms {
            assert_eq!(m.nvars(), ring.nvars());
            acc.entry(m)
                .and_modify(|v| *v = K::add(ctx, v, &c))
                .or_insert(c);
        }
        let mut terms: Vec<(K, Monomial)> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (c, m))
            .collect();
        let ord = ring.order();
        terms.sort_by(|a, b| ord.compare(&b.1, &a.1));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Trusts the caller that `terms` is already canonical.
    pub(crate) fn from_sorted_terms(ring: &Arc<Ring<K>>, terms: Vec<(K, Monomial)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order().compare(&w[0].1, &w[1].1) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(c, _)| !c.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring<K>> {
        &self.ring
    }

    pub fn terms(&self) -> &[(K, Monomial)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(K, Monomial)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn leading_coeff(&self) -> Option<&K> {
        self.terms.first().map(|t| &t.0)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.1.degree()).max()
    }

    /// Re-sorts the terms; the identity on anything built through this API.
    pub fn normalized(&self) -> Self {
        Self::from_terms(&self.ring, self.terms.clone())
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Merge of two sorted term lists, `self + factor * other`.
    fn merge(&self, other: &[(K, Monomial)], negate: bool) -> Vec<(K, Monomial)> {
        let ctx = self.ring.ctx();
        let ord = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        while i < a.len() && j < other.len() {
            match ord.compare(&a[i].1, &other[j].1) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate {
                        K::neg(ctx, &other[j].0)
                    } else {
                        other[j].0.clone()
                    };
                    out.push((c, other[j].1.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        K::sub(ctx, &a[i].0, &other[j].0)
                    } else {
                        K::add(ctx, &a[i].0, &other[j].0)
                    };
                    if !c.is_zero() {
                        out.push((c, a[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &other[j..] {
            let c = if negate { K::neg(ctx, &t.0) } else { t.0.clone() };
            out.push((c, t.1.clone()));
        }
        out
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: self.merge(&other.terms, false),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: self.merge(&other.terms, true),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Self::zero(&self.ring);
        for (c, m) in &small.terms {
            let part = big.mul_term(c, m);
            acc.terms = acc.merge(&part.terms, false);
        }
        Ok(acc)
    }

    pub fn neg(&self) -> Self {
        let ctx = self.ring.ctx();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(c, m)| (K::neg(ctx, c), m.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &K) -> Self {
        if k.is_zero() {
            return Self::zero(&self.ring);
        }
        let ctx = self.ring.ctx();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(c, m)| (K::mul(ctx, c, k), m.clone()))
                .collect(),
        }
    }

    /// `self * c * m`; term order is preserved by monomial multiplication.
    pub fn mul_term(&self, c: &K, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let ctx = self.ring.ctx();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter_map(|(a, n)| {
                    let p = K::mul(ctx, a, c);
                    (!p.is_zero()).then(|| (p, n.mul(m)))
                })
                .collect(),
        }
    }

    /// `self - c * m * other`, the elementary reduction step.
    pub(crate) fn sub_mul_term(&self, c: &K, m: &Monomial, other: &Self) -> Self {
        let part = other.mul_term(c, m);
        Polynomial {
            ring: self.ring.clone(),
            terms: self.merge(&part.terms, true),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = K::inv(self.ring.ctx(), lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn eval(&self, point: &[K]) -> K {
        assert_eq!(point.len(), self.ring.nvars());
        let ctx = self.ring.ctx();
        let mut acc = K::zero(ctx);
        for (c, m) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t = K::mul(ctx, &t, x);
                }
            }
            acc = K::add(ctx, &acc, &t);
        }
        acc
    }

    /// The same polynomial in `target`, matching variables by name. Every
    /// variable occurring in `self` must exist in `target`, and both rings
    /// must have the same coefficient field.
    pub fn embed(&self, target: &Arc<Ring<K>>) -> Result<Self> {
        if self.ring.same_as(target) {
            return Ok(self.clone());
        }
        if self.ring.ctx() != target.ctx() {
            return Err(Error::RingMismatch);
        }
        let map: Vec<Option<usize>> = self
            .ring
            .names()
            .iter()
            .map(|n| target.var_index(n))
            .collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (c, m) in &self.terms {
            let mut exps = vec![0u16; target.nvars()];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => exps[j] = e,
                    None => return Err(Error::UnknownVariable(self.ring.names()[i].clone())),
                }
            }
            terms.push((c.clone(), Monomial::from_exponents(exps)));
        }
        Ok(Self::from_terms(target, terms))
    }

    /// Parses `text` in this ring; see [`super::text`] for the grammar.
    pub fn parse(ring: &Arc<Ring<K>>, text: &str) -> Result<Self> {
        super::text::parse_poly(text, ring, super::text::ParseOptions::default())
    }
}

impl<K: Field> fmt::Display for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::render(self))
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a, K: Field> std::ops::$tr<&'a Polynomial<K>> for &'a Polynomial<K> {
            type Output = Polynomial<K>;
            /// Panics when the operands live in different rings; use the
            /// `checked_*` methods for a fallible version.
            fn $method(self, rhs: &'a Polynomial<K>) -> Polynomial<K> {
                self.$checked(rhs).expect("ring mismatch")
            }
        }
        impl<K: Field> std::ops::$tr for Polynomial<K> {
            type Output = Polynomial<K>;
            fn $method(self, rhs: Polynomial<K>) -> Polynomial<K> {
                self.$checked(&rhs).expect("ring mismatch")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl<K: Field> std::ops::Neg for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn neg(self) -> Polynomial<K> {
        Polynomial::neg(self)
    }
}

impl<K: Field> std::ops::Neg for Polynomial<K> {
    type Output = Polynomial<K>;
    fn neg(self) -> Polynomial<K> {
        Polynomial::neg(&self)
    }
}

/// `f + g` with a ring check.
pub fn poly_add<K: Field>(f: &Polynomial<K>, g: &Polynomial<K>) -> Result<Polynomial<K>> {
    f.checked_add(g)
}

/// `f * g` with a ring check.
pub fn poly_mul<K: Field>(f: &Polynomial<K>, g: &Polynomial<K>) -> Result<Polynomial<K>> {
    f.checked_mul(g)
}
