//! Coefficient fields: exact rationals and prime fields `F_p`.
//!
//! Elements of `F_p` are bare residues; the modulus lives in the field
//! context carried by the polynomial ring. All arithmetic therefore goes
//! through [`Field`] associated functions that take the context explicitly.

use std::fmt::{self, Debug};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible prime modulus (exclusive). Products of two residues
/// fit in a `u64`.
pub const MAX_MODULUS: u64 = 1 << 31;

/// Runtime description of a coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
}

impl FieldSpec {
    /// Checked constructor for `F_p`.
    pub fn prime(p: u64) -> Result<Self> {
        if p <= 1 || p >= MAX_MODULUS {
            return Err(Error::InvalidField(format!(
                "modulus {p} outside 1 < p < 2^31"
            )));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(FieldSpec::PrimeField(p as u32))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p as u64,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" || s == "QQ" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(rest) = s.strip_prefix("Fp:").or_else(|| s.strip_prefix("F:")) {
            let p: u64 = rest
                .parse()
                .map_err(|_| Error::InvalidField(format!("bad modulus `{rest}`")))?;
            return FieldSpec::prime(p);
        }
        Err(Error::InvalidField(format!(
            "expected `Q` or `Fp:<prime>`, got `{s}`"
        )))
    }
}

impl From<FieldSpec> for String {
    fn from(f: FieldSpec) -> String {
        f.to_string()
    }
}

impl TryFrom<String> for FieldSpec {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Deterministic primality test, exact for all `n < 2^64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        r
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A coefficient field. Implemented by [`Rational`] and [`Zp`].
pub trait Field: Clone + PartialEq + Eq + Hash + Debug + Send + Sync + 'static {
    /// Data needed to do arithmetic (the modulus for `F_p`).
    type Ctx: Clone + PartialEq + Eq + Debug + Send + Sync + 'static;

    fn context(spec: &FieldSpec) -> Result<Self::Ctx>;
    fn spec(ctx: &Self::Ctx) -> FieldSpec;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_bigint(ctx: &Self::Ctx, n: &BigInt) -> Self;
    fn from_i64(ctx: &Self::Ctx, n: i64) -> Self {
        Self::from_bigint(ctx, &BigInt::from(n))
    }
    /// The image of `num/den`; fails when `den` vanishes in the field.
    fn from_ratio(ctx: &Self::Ctx, num: &BigInt, den: &BigInt) -> Result<Self> {
        let d = Self::from_bigint(ctx, den);
        Self::div(ctx, &Self::from_bigint(ctx, num), &d)
    }

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;

    fn add(ctx: &Self::Ctx, a: &Self, b: &Self) -> Self;
    fn sub(ctx: &Self::Ctx, a: &Self, b: &Self) -> Self;
    fn mul(ctx: &Self::Ctx, a: &Self, b: &Self) -> Self;
    fn neg(ctx: &Self::Ctx, a: &Self) -> Self;
    fn inv(ctx: &Self::Ctx, a: &Self) -> Result<Self>;
    fn div(ctx: &Self::Ctx, a: &Self, b: &Self) -> Result<Self> {
        Ok(Self::mul(ctx, a, &Self::inv(ctx, b)?))
    }

    /// Sign and magnitude for the polynomial printer. Prime-field residues
    /// use the symmetric range so that `p - 1` prints as `-1`.
    fn signed_parts(ctx: &Self::Ctx, a: &Self) -> (bool, String);
    /// Canonical value text: `a/b` for rationals, the residue in `[0, p)`.
    fn canonical_string(ctx: &Self::Ctx, a: &Self) -> String;
}

/// Arbitrary-precision rational numbers, always in lowest terms.
pub type Rational = BigRational;

impl Field for Rational {
    type Ctx = ();

    fn context(spec: &FieldSpec) -> Result<()> {
        match spec {
            FieldSpec::Rationals => Ok(()),
            other => Err(Error::InvalidField(format!(
                "rational coefficients requested for {other}"
            ))),
        }
    }
    fn spec(_: &()) -> FieldSpec {
        FieldSpec::Rationals
    }
    fn zero(_: &()) -> Self {
        <BigRational as Zero>::zero()
    }
    fn one(_: &()) -> Self {
        <BigRational as One>::one()
    }
    fn from_bigint(_: &(), n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
    fn from_ratio(_: &(), num: &BigInt, den: &BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(_: &(), a: &Self, b: &Self) -> Self {
        a + b
    }
    fn sub(_: &(), a: &Self, b: &Self) -> Self {
        a - b
    }
    fn mul(_: &(), a: &Self, b: &Self) -> Self {
        a * b
    }
    fn neg(_: &(), a: &Self) -> Self {
        -a
    }
    fn inv(_: &(), a: &Self) -> Result<Self> {
        if Zero::is_zero(a) {
            Err(Error::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }
    fn signed_parts(_: &(), a: &Self) -> (bool, String) {
        (a.is_negative(), a.abs().to_string())
    }
    fn canonical_string(_: &(), a: &Self) -> String {
        a.to_string()
    }
}

/// Modulus of a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Modulus(u32);

impl Modulus {
    pub fn new(p: u64) -> Result<Self> {
        match FieldSpec::prime(p)? {
            FieldSpec::PrimeField(p) => Ok(Modulus(p)),
            FieldSpec::Rationals => unreachable!(),
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// A residue class modulo the prime held in the ring's [`Modulus`].
/// The stored value is always the canonical representative in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Zp(pub(crate) u32);

impl Zp {
    pub fn value(self) -> u32 {
        self.0
    }

    pub fn new(m: &Modulus, v: u64) -> Self {
        Zp((v % m.0 as u64) as u32)
    }
}

impl Field for Zp {
    type Ctx = Modulus;

    fn context(spec: &FieldSpec) -> Result<Modulus> {
        match spec {
            FieldSpec::PrimeField(p) => Modulus::new(*p as u64),
            FieldSpec::Rationals => Err(Error::InvalidField(
                "prime-field coefficients requested for Q".into(),
            )),
        }
    }
    fn spec(m: &Modulus) -> FieldSpec {
        FieldSpec::PrimeField(m.0)
    }
    fn zero(_: &Modulus) -> Self {
        Zp(0)
    }
    fn one(_: &Modulus) -> Self {
        Zp(1)
    }
    fn from_bigint(m: &Modulus, n: &BigInt) -> Self {
        let r = n.mod_floor(&BigInt::from(m.0));
        Zp(r.to_u32().expect("residue below modulus"))
    }
    fn from_i64(m: &Modulus, n: i64) -> Self {
        Zp(n.rem_euclid(m.0 as i64) as u32)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn is_one(&self) -> bool {
        self.0 == 1
    }
    fn add(m: &Modulus, a: &Self, b: &Self) -> Self {
        let s = a.0 as u64 + b.0 as u64;
        Zp((s % m.0 as u64) as u32)
    }
    fn sub(m: &Modulus, a: &Self, b: &Self) -> Self {
        let s = a.0 as u64 + m.0 as u64 - b.0 as u64;
        Zp((s % m.0 as u64) as u32)
    }
    fn mul(m: &Modulus, a: &Self, b: &Self) -> Self {
        Zp(((a.0 as u64 * b.0 as u64) % m.0 as u64) as u32)
    }
    fn neg(m: &Modulus, a: &Self) -> Self {
        if a.0 == 0 {
            *a
        } else {
            Zp(m.0 - a.0)
        }
    }
    fn inv(m: &Modulus, a: &Self) -> Result<Self> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (m.0 as i64, a.0 as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(Zp(t0.rem_euclid(m.0 as i64) as u32))
    }
    fn signed_parts(m: &Modulus, a: &Self) -> (bool, String) {
        if m.0 > 2 && a.0 > m.0 / 2 {
            (true, (m.0 - a.0).to_string())
        } else {
            (false, a.0.to_string())
        }
    }
    fn canonical_string(_: &Modulus, a: &Self) -> String {
        a.0.to_string()
    }
}

/// Inverse of a coefficient given a runtime field description.
pub fn coeff_inverse<K: Field>(a: &K, ctx: &K::Ctx) -> Result<K> {
    K::inv(ctx, a)
}
