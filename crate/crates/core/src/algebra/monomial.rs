//! Exponent vectors and term orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A power product `x_0^{e_0} ... x_{n-1}^{e_{n-1}}`.
///
/// The total degree and a support bitmask (bit `i` set iff `e_i > 0`, first
/// 64 variables only) are cached; both are derived from the exponents, so
/// equality and hashing stay consistent.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u16>,
    degree: u32,
    mask: u64,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
            degree: 0,
            mask: 0,
        }
    }

    pub fn var(nvars: usize, index: usize, exp: u16) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = exp;
        Self::from_exponents(exps)
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        let mut degree = 0u32;
        let mut mask = 0u64;
        for (i, &e) in exps.iter().enumerate() {
            degree += e as u32;
            if e > 0 && i < 64 {
                mask |= 1 << i;
            }
        }
        Monomial { exps, degree, mask }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    /// Support bitmask over the first 64 variables.
    pub fn support_mask(&self) -> u64 {
        self.mask
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
            mask: self.mask | other.mask,
        }
    }

    /// `self | other`
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.mask & !other.mask != 0 || self.degree > other.degree {
            return false;
        }
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial::from_exponents(
            other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        if self.exps.len() <= 64 {
            return self.mask & other.mask == 0;
        }
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Copy with `extra` trailing variables of exponent zero.
    pub fn extended(&self, extra: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat(0).take(extra));
        Monomial {
            exps,
            degree: self.degree,
            mask: self.mask,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    DegRevLex,
    Lex,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderKind::DegRevLex => write!(f, "degrevlex"),
            OrderKind::Lex => write!(f, "lex"),
        }
    }
}

impl std::str::FromStr for OrderKind {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "degrevlex" | "grevlex" | "drl" => Ok(OrderKind::DegRevLex),
            "lex" | "plex" => Ok(OrderKind::Lex),
            other => Err(crate::Error::InvalidSpec(format!("unknown order `{other}`"))),
        }
    }
}

/// A monomial order, optionally applied after permuting the variables.
///
/// With `permutation = Some(perm)`, position `k` of the comparison looks at
/// variable `perm[k]`; without one the variable order is the ring order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub permutation: Option<Vec<usize>>,
}

impl Default for MonomialOrder {
    fn default() -> Self {
        Self::degrevlex()
    }
}

impl MonomialOrder {
    pub fn degrevlex() -> Self {
        MonomialOrder {
            kind: OrderKind::DegRevLex,
            permutation: None,
        }
    }

    pub fn lex() -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            permutation: None,
        }
    }

    pub fn with_permutation(kind: OrderKind, perm: Vec<usize>) -> crate::Result<Self> {
        let mut seen = vec![false; perm.len()];
        for &i in &perm {
            if i >= perm.len() || seen[i] {
                return Err(crate::Error::InvalidSpec(format!(
                    "{perm:?} is not a permutation"
                )));
            }
            seen[i] = true;
        }
        Ok(MonomialOrder {
            kind,
            permutation: Some(perm),
        })
    }

    #[inline]
    fn at(&self, m: &Monomial, k: usize) -> u16 {
        match &self.permutation {
            None => m.exps[k],
            Some(p) => m.exps[p[k]],
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = a.exps.len();
        match self.kind {
            OrderKind::DegRevLex => {
                match a.degree.cmp(&b.degree) {
                    Ordering::Equal => {}
                    o => return o,
                }
                for k in (0..n).rev() {
                    let (x, y) = (self.at(a, k), self.at(b, k));
                    if x != y {
                        return y.cmp(&x);
                    }
                }
                Ordering::Equal
            }
            OrderKind::Lex => {
                for k in 0..n {
                    let (x, y) = (self.at(a, k), self.at(b, k));
                    if x != y {
                        return x.cmp(&y);
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// Same order on a ring with `extra` new variables appended last.
    pub fn extended(&self, nvars: usize, extra: usize) -> MonomialOrder {
        MonomialOrder {
            kind: self.kind,
            permutation: self
                .permutation
                .as_ref()
                .map(|p| p.iter().copied().chain(nvars..nvars + extra).collect()),
        }
    }
}
