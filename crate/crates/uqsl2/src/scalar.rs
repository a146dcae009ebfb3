//! Exact rational scalars and the shared q-context.
//!
//! Everything in this crate is computed over the rationals with zero
//! tolerance: two scalars are equal iff their reduced fractions are equal.
//! [`Rat`] wraps an arbitrary-precision rational and fixes the external
//! conventions (always reduced, denominator positive, printed as
//! `"num/den"`).
//!
//! [`QContext`] bundles the parameters every construction depends on:
//!
//! * `q` — a rational with `q ∉ {0, 1, -1}` (so `q - q⁻¹ ≠ 0`);
//! * `theta` — a square root datum with `theta² = q` (mode [`ThetaMode::SqQ`])
//!   or `theta² = q⁻¹` (mode [`ThetaMode::SqQInv`]);
//! * `t` — the integer twisting exponent of the identification;
//! * `ident` — which of the two identifications between the presentations
//!   is active;
//! * a derived `q_half` with `q_half² = q`, fixed once at construction:
//!   `q^{1/2} = -theta` when `theta² = q`, and `q^{1/2} = theta⁻¹` when
//!   `theta² = q⁻¹`.
//!
//! The context also provides the q-combinatorial scalars used everywhere:
//! q-integers `[n]_q = (qⁿ - q⁻ⁿ)/(q - q⁻¹)`, q-factorials
//! `[n]_q! = [n]_q [n-1]_q ⋯ [1]_q`, and half-integer powers
//! `q^{m/2} = q_half^m`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always reduced, denominator > 0.
///
/// Serialized (and displayed) as the string `"num/den"`, e.g. `"-3/4"`,
/// `"7/1"`. On input the denominator may be omitted: `"7"` parses as `7/1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    /// The rational `n/1`.
    pub fn int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// The rational `num/den`. Panics if `den == 0`; use [`Rat::from_str`]
    /// for fallible construction from untrusted input.
    pub fn frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Additive identity `0/1`.
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    /// Multiplicative identity `1/1`.
    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Reduced numerator (sign lives here).
    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Reduced denominator, always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Multiplicative inverse. Panics on zero; callers guard (the only
    /// inverses taken in this crate are of provably nonzero scalars).
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Rat(self.0.recip())
    }

    /// Integer power with negative exponents allowed (`r.pow(-2) = r⁻²`).
    /// Panics when raising zero to a negative power.
    pub fn pow(&self, exp: i64) -> Self {
        if exp == 0 {
            return Rat::one();
        }
        let base = if exp < 0 { self.inv() } else { self.clone() };
        let mut acc = Rat::one();
        let mut sq = base;
        let mut e = exp.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    /// Exact square root, if one exists in ℚ: the positive root of a
    /// nonnegative square. Returns `None` for negatives and non-squares.
    pub fn sqrt_exact(&self) -> Option<Rat> {
        if self.is_negative() {
            return None;
        }
        let sn = self.numer().sqrt();
        let sd = self.denom().sqrt();
        if &(&sn * &sn) == self.numer() && &(&sd * &sd) == self.denom() {
            Some(Rat(BigRational::new(sn, sd)))
        } else {
            None
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(Rat(BigRational::new(num, den)))
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::int(n)
    }
}

impl Serialize for Rat {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl $trait for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        &self / &rhs
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

/// Which square the `theta` datum takes: `theta² = q` or `theta² = q⁻¹`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum ThetaMode {
    #[serde(rename = "sq-q")]
    SqQ,
    #[serde(rename = "sq-qinv")]
    SqQInv,
}

impl ThetaMode {
    pub fn name(self) -> &'static str {
        match self {
            ThetaMode::SqQ => "sq-q",
            ThetaMode::SqQInv => "sq-qinv",
        }
    }
}

impl FromStr for ThetaMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sq-q" => Ok(ThetaMode::SqQ),
            "sq-qinv" => Ok(ThetaMode::SqQInv),
            other => Err(Error::Config(format!(
                "unknown theta mode `{other}` (expected `sq-q` or `sq-qinv`)"
            ))),
        }
    }
}

/// Which identification carries the Chevalley generators to the equitable
/// ones. The two identifications swap the roles of e and f (and of k and
/// k⁻¹) on the equitable side.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum IdentKind {
    #[serde(rename = "primary")]
    Primary,
    #[serde(rename = "secondary")]
    Secondary,
}

impl IdentKind {
    pub fn name(self) -> &'static str {
        match self {
            IdentKind::Primary => "primary",
            IdentKind::Secondary => "secondary",
        }
    }
}

impl FromStr for IdentKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "primary" => Ok(IdentKind::Primary),
            "secondary" => Ok(IdentKind::Secondary),
            other => Err(Error::Config(format!(
                "unknown identification `{other}` (expected `primary` or `secondary`)"
            ))),
        }
    }
}

/// Shared parameter bundle: `(q, theta, theta_mode, t, ident)` plus the
/// derived half-power base `q_half`.
///
/// Serialized as
/// `{"q": "4/1", "theta": "-2/1", "theta_mode": "sq-q", "t": 0, "ident": "primary"}`;
/// `q_half` is never serialized, it is recomputed (and re-validated) on
/// deserialization.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "QContextRepr", into = "QContextRepr")]
pub struct QContext {
    q: Rat,
    theta: Rat,
    theta_mode: ThetaMode,
    t: i64,
    ident: IdentKind,
    q_half: Rat,
}

#[derive(Serialize, Deserialize)]
struct QContextRepr {
    q: Rat,
    theta: Rat,
    theta_mode: ThetaMode,
    t: i64,
    ident: IdentKind,
}

impl TryFrom<QContextRepr> for QContext {
    type Error = Error;
    fn try_from(r: QContextRepr) -> Result<Self> {
        QContext::new(r.q, r.theta, r.theta_mode, r.t, r.ident)
    }
}

impl From<QContext> for QContextRepr {
    fn from(c: QContext) -> Self {
        QContextRepr {
            q: c.q,
            theta: c.theta,
            theta_mode: c.theta_mode,
            t: c.t,
            ident: c.ident,
        }
    }
}

impl QContext {
    /// Builds a context, validating every convention:
    /// `q ∉ {0, 1, -1}`, `theta ≠ 0`, and `theta²` equal to `q` or `q⁻¹`
    /// according to `theta_mode`. The half-power base is derived here:
    /// `-theta` in mode `sq-q`, `theta⁻¹` in mode `sq-qinv`.
    pub fn new(q: Rat, theta: Rat, theta_mode: ThetaMode, t: i64, ident: IdentKind) -> Result<Self> {
        if q.is_zero() || q == Rat::int(1) || q == Rat::int(-1) {
            return Err(Error::Config(format!("q = {q} is not allowed (q - q⁻¹ must be nonzero)")));
        }
        if theta.is_zero() {
            return Err(Error::Config("theta must be nonzero".into()));
        }
        let theta_sq = &theta * &theta;
        let expected = match theta_mode {
            ThetaMode::SqQ => q.clone(),
            ThetaMode::SqQInv => q.inv(),
        };
        if theta_sq != expected {
            return Err(Error::Config(format!(
                "theta = {theta} does not satisfy theta² = {} required by mode {}",
                expected,
                theta_mode.name()
            )));
        }
        let q_half = match theta_mode {
            ThetaMode::SqQ => -&theta,
            ThetaMode::SqQInv => theta.inv(),
        };
        Ok(QContext { q, theta, theta_mode, t, ident, q_half })
    }

    /// Builds a context deriving `theta` from `q` alone: `theta = -√q` in
    /// mode `sq-q` and `theta = 1/√q` in mode `sq-qinv` (either way
    /// `q_half = +√q`). Fails when `q` has no rational square root.
    pub fn with_derived_theta(q: Rat, theta_mode: ThetaMode, t: i64, ident: IdentKind) -> Result<Self> {
        let root = q.sqrt_exact().ok_or_else(|| {
            Error::Config(format!(
                "q = {q} is not a square in ℚ; pass an explicit theta or pick a square q"
            ))
        })?;
        let theta = match theta_mode {
            ThetaMode::SqQ => -&root,
            ThetaMode::SqQInv => root.inv(),
        };
        QContext::new(q, theta, theta_mode, t, ident)
    }

    pub fn q(&self) -> &Rat {
        &self.q
    }

    pub fn theta(&self) -> &Rat {
        &self.theta
    }

    pub fn theta_mode(&self) -> ThetaMode {
        self.theta_mode
    }

    pub fn t(&self) -> i64 {
        self.t
    }

    pub fn ident(&self) -> IdentKind {
        self.ident
    }

    /// The stored base for half-integer powers; `q_half² = q`.
    pub fn q_half(&self) -> &Rat {
        &self.q_half
    }

    /// Same context with a different identification kind.
    pub fn with_ident(&self, ident: IdentKind) -> Self {
        let mut c = self.clone();
        c.ident = ident;
        c
    }

    /// `qⁿ` for any integer n.
    pub fn q_pow(&self, n: i64) -> Rat {
        self.q.pow(n)
    }

    /// `thetaⁿ` for any integer n.
    pub fn theta_pow(&self, n: i64) -> Rat {
        self.theta.pow(n)
    }

    /// The ubiquitous nonzero scalar `q - q⁻¹`.
    pub fn q_minus_q_inv(&self) -> Rat {
        &self.q - &self.q.pow(-1)
    }

    /// q-integer `[n]_q = (qⁿ - q⁻ⁿ)/(q - q⁻¹)`, defined for all n ∈ ℤ
    /// (odd in n: `[-n]_q = -[n]_q`, `[0]_q = 0`).
    pub fn q_int(&self, n: i64) -> Rat {
        (self.q_pow(n) - self.q_pow(-n)) / self.q_minus_q_inv()
    }

    /// q-factorial `[n]_q! = [n]_q [n-1]_q ⋯ [1]_q`, with `[0]_q! = 1`.
    pub fn q_fact(&self, n: usize) -> Rat {
        let mut acc = Rat::one();
        for j in 1..=n {
            acc = acc * self.q_int(j as i64);
        }
        acc
    }

    /// Half-integer power `q^{m/2} = q_half^m`. For even m this agrees with
    /// `q^{m/2}` computed directly.
    pub fn q_half_power(&self, m: i64) -> Rat {
        self.q_half.pow(m)
    }
}

/// Binomial coefficient C(n, 2) = n(n-1)/2 as an i64 exponent.
pub(crate) fn choose2(n: usize) -> i64 {
    let n = n as i64;
    n * (n - 1) / 2
}

/// Converts a BigInt-backed rational to f64 only for coarse diagnostics in
/// human-readable failure messages; never used in any comparison.
#[allow(dead_code)]
pub(crate) fn approx(r: &Rat) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}
