//! Exact coefficient fields: the rationals and prime fields `GF(p)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

/// An exact scalar. Rationals are kept reduced with positive denominator;
/// residues lie in `[0, modulus)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldValue {
    Rational(BigRational),
    Residue { value: u32, modulus: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Neg,
    Mul,
    Inv,
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldOutcome {
    Value(FieldValue),
    Flag(bool),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn zero(self) -> FieldValue {
        self.from_i64(0)
    }

    pub fn one(self) -> FieldValue {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> FieldValue {
        match self {
            FieldSpec::Rationals => FieldValue::Rational(BigRational::from_integer(n.into())),
            FieldSpec::Prime(p) => FieldValue::Residue {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(self, n: &BigInt) -> FieldValue {
        match self {
            FieldSpec::Rationals => FieldValue::Rational(BigRational::from_integer(n.clone())),
            FieldSpec::Prime(p) => {
                let r = ((n % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                FieldValue::Residue {
                    value: r.to_u32().expect("reduced residue"),
                    modulus: p,
                }
            }
        }
    }

    /// `num / den` in this field.
    pub fn ratio(self, num: &BigInt, den: &BigInt) -> Result<FieldValue> {
        let d = self.from_bigint(den);
        let inv = d.inv()?;
        Ok(&self.from_bigint(num) * &inv)
    }

    pub fn contains(self, v: &FieldValue) -> bool {
        v.field() == self
    }

    /// Parses `int` or `int/int`; integers are reduced modulo `p` in prime
    /// fields.
    pub fn parse_value(self, text: &str) -> Result<FieldValue> {
        let bad = || Error::MalformedCoefficient(text.to_string());
        let t = text.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (t, None),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = match den {
            Some(d) if !d.starts_with(['-', '+']) => d.parse().map_err(|_| bad())?,
            Some(_) => return Err(bad()),
            None => BigInt::one(),
        };
        self.ratio(&num, &den).map_err(|_| bad())
    }

    fn check(self, v: &FieldValue) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(self, a: &FieldValue, b: &FieldValue) -> Result<FieldValue> {
        self.check(a)?;
        self.check(b)?;
        Ok(a + b)
    }

    pub fn mul(self, a: &FieldValue, b: &FieldValue) -> Result<FieldValue> {
        self.check(a)?;
        self.check(b)?;
        Ok(a * b)
    }

    pub fn neg(self, a: &FieldValue) -> Result<FieldValue> {
        self.check(a)?;
        Ok(-a)
    }

    pub fn inv(self, a: &FieldValue) -> Result<FieldValue> {
        self.check(a)?;
        a.inv()
    }

    /// Checked dispatch over the field operations. Binary operations require
    /// `b`.
    pub fn arith(self, op: FieldOp, a: &FieldValue, b: Option<&FieldValue>) -> Result<FieldOutcome> {
        let second = || b.ok_or_else(|| Error::Config(format!("{op:?} needs two operands")));
        Ok(match op {
            FieldOp::Add => FieldOutcome::Value(self.add(a, second()?)?),
            FieldOp::Mul => FieldOutcome::Value(self.mul(a, second()?)?),
            FieldOp::Neg => FieldOutcome::Value(self.neg(a)?),
            FieldOp::Inv => FieldOutcome::Value(self.inv(a)?),
            FieldOp::Eq => {
                let b = second()?;
                self.check(a)?;
                self.check(b)?;
                FieldOutcome::Flag(a == b)
            }
        })
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("q"),
            FieldSpec::Prime(p) => write!(f, "gf:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// `q` for the rationals, `gf:P` for the prime field of order `P`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "q" | "Q" => Ok(FieldSpec::Rationals),
            other => match other.strip_prefix("gf:") {
                Some(p) => {
                    let p: u64 = p
                        .parse()
                        .map_err(|_| Error::Config(format!("bad field `{s}`")))?;
                    FieldSpec::prime(p)
                }
                None => Err(Error::Config(format!("bad field `{s}`"))),
            },
        }
    }
}

impl FieldValue {
    pub fn field(&self) -> FieldSpec {
        match self {
            FieldValue::Rational(_) => FieldSpec::Rationals,
            FieldValue::Residue { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldValue::Rational(r) => r.is_zero(),
            FieldValue::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldValue::Rational(r) => r.is_one(),
            FieldValue::Residue { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Result<FieldValue> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldValue::Rational(r) => FieldValue::Rational(r.recip()),
            FieldValue::Residue { value, modulus } => FieldValue::Residue {
                value: mod_pow(*value as u64, *modulus as u64 - 2, *modulus as u64) as u32,
                modulus: *modulus,
            },
        })
    }

    /// Printed with a leading minus sign, for signed term output.
    pub fn is_negative(&self) -> bool {
        match self {
            FieldValue::Rational(r) => r.is_negative(),
            FieldValue::Residue { .. } => false,
        }
    }
}

fn residues(a: &FieldValue, b: &FieldValue) -> Option<(u64, u64, u32)> {
    match (a, b) {
        (
            FieldValue::Residue { value: x, modulus: p },
            FieldValue::Residue { value: y, modulus: q },
        ) if p == q => Some((*x as u64, *y as u64, *p)),
        _ => None,
    }
}

impl Add for &FieldValue {
    type Output = FieldValue;

    /// Panics on operands from different fields.
    fn add(self, rhs: &FieldValue) -> FieldValue {
        if let (FieldValue::Rational(a), FieldValue::Rational(b)) = (self, rhs) {
            return FieldValue::Rational(a + b);
        }
        let (x, y, p) = residues(self, rhs).expect("operands from different fields");
        FieldValue::Residue {
            value: ((x + y) % p as u64) as u32,
            modulus: p,
        }
    }
}

impl Sub for &FieldValue {
    type Output = FieldValue;

    fn sub(self, rhs: &FieldValue) -> FieldValue {
        self + &(-rhs)
    }
}

impl Mul for &FieldValue {
    type Output = FieldValue;

    /// Panics on operands from different fields.
    fn mul(self, rhs: &FieldValue) -> FieldValue {
        if let (FieldValue::Rational(a), FieldValue::Rational(b)) = (self, rhs) {
            return FieldValue::Rational(a * b);
        }
        let (x, y, p) = residues(self, rhs).expect("operands from different fields");
        FieldValue::Residue {
            value: (x * y % p as u64) as u32,
            modulus: p,
        }
    }
}

impl Neg for &FieldValue {
    type Output = FieldValue;

    fn neg(self) -> FieldValue {
        match self {
            FieldValue::Rational(r) => FieldValue::Rational(-r),
            FieldValue::Residue { value, modulus } => FieldValue::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldValue::Rational(r) if r.is_integer() => write!(f, "{}", r.numer()),
            FieldValue::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            FieldValue::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}
