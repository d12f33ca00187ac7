//! Exact arithmetic in prime fields F_p and the overflow-checked integer
//! ring — the coefficient domain shared by every other module.
//!
//! Prime-field values are kept as canonical representatives in `0..p`;
//! integer-ring values are `i64` and every operation signals overflow instead
//! of wrapping. Both domains are identified by a [`FieldSpec`], which is the
//! single source of truth for how raw coefficient values combine.

use crate::{Error, Result};
use std::fmt;

/// A coefficient domain: a prime field F_p (2 <= p < 2^16 handled; p checked
/// prime by trial division) or the signed integer ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Prime(u32),
    Integer,
}

impl FieldSpec {
    /// Constructs F_p, rejecting non-prime or out-of-range moduli.
    pub fn prime(p: u64) -> Result<FieldSpec> {
        if !(2..=1 << 16).contains(&p) {
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn integer() -> FieldSpec {
        FieldSpec::Integer
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    /// Field size for prime fields, `None` for the integer ring.
    pub fn modulus(&self) -> Option<u32> {
        match self {
            FieldSpec::Prime(p) => Some(*p),
            FieldSpec::Integer => None,
        }
    }

    /// Canonical representative: `0..p` for prime fields, identity on Z.
    pub fn canon(&self, v: i64) -> i64 {
        match self {
            FieldSpec::Prime(p) => v.rem_euclid(*p as i64),
            FieldSpec::Integer => v,
        }
    }

    pub fn add(&self, a: i64, b: i64) -> Result<i64> {
        match self {
            FieldSpec::Prime(p) => Ok((a + b) % *p as i64),
            FieldSpec::Integer => a.checked_add(b).ok_or(Error::IntegerOverflow("add")),
        }
    }

    pub fn sub(&self, a: i64, b: i64) -> Result<i64> {
        match self {
            FieldSpec::Prime(p) => Ok((a - b).rem_euclid(*p as i64)),
            FieldSpec::Integer => a.checked_sub(b).ok_or(Error::IntegerOverflow("sub")),
        }
    }

    pub fn mul(&self, a: i64, b: i64) -> Result<i64> {
        match self {
            // p < 2^16 and canonical operands, so the product fits in i64.
            FieldSpec::Prime(p) => Ok((a * b) % *p as i64),
            FieldSpec::Integer => a.checked_mul(b).ok_or(Error::IntegerOverflow("mul")),
        }
    }

    pub fn neg(&self, a: i64) -> Result<i64> {
        match self {
            FieldSpec::Prime(p) => Ok((-a).rem_euclid(*p as i64)),
            FieldSpec::Integer => a.checked_neg().ok_or(Error::IntegerOverflow("neg")),
        }
    }

    /// Multiplicative inverse; prime fields only, nonzero only.
    pub fn inv(&self, a: i64) -> Result<i64> {
        match self {
            FieldSpec::Prime(p) => {
                let a = a.rem_euclid(*p as i64);
                if a == 0 {
                    return Err(Error::DivisionByZero);
                }
                // Extended Euclid on (a, p).
                let (mut r0, mut r1) = (a, *p as i64);
                let (mut s0, mut s1) = (1i64, 0i64);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (s0, s1) = (s1, s0 - q * s1);
                }
                debug_assert_eq!(r0, 1);
                Ok(s0.rem_euclid(*p as i64))
            }
            FieldSpec::Integer => Err(Error::NotInvertibleDomain(self.to_string())),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
            FieldSpec::Integer => write!(f, "Z"),
        }
    }
}

/// A domain-tagged exact value. Prime-field scalars are always reduced;
/// integer-ring scalars are plain `i64`s whose operations are
/// overflow-checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Scalar {
    spec: FieldSpec,
    value: i64,
}

impl Scalar {
    pub fn new(spec: FieldSpec, value: i64) -> Scalar {
        Scalar {
            spec,
            value: spec.canon(value),
        }
    }

    pub fn zero(spec: FieldSpec) -> Scalar {
        Scalar { spec, value: 0 }
    }

    pub fn one(spec: FieldSpec) -> Scalar {
        Scalar::new(spec, 1)
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn value(&self) -> i64 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same_spec(&self, other: &Scalar) -> Result<FieldSpec> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch(
                self.spec.to_string(),
                other.spec.to_string(),
            ));
        }
        Ok(self.spec)
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        let spec = self.same_spec(other)?;
        Ok(Scalar {
            spec,
            value: spec.add(self.value, other.value)?,
        })
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        let spec = self.same_spec(other)?;
        Ok(Scalar {
            spec,
            value: spec.sub(self.value, other.value)?,
        })
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        let spec = self.same_spec(other)?;
        Ok(Scalar {
            spec,
            value: spec.mul(self.value, other.value)?,
        })
    }

    pub fn neg(&self) -> Result<Scalar> {
        Ok(Scalar {
            spec: self.spec,
            value: self.spec.neg(self.value)?,
        })
    }

    pub fn inv(&self) -> Result<Scalar> {
        Ok(Scalar {
            spec: self.spec,
            value: self.spec.inv(self.value)?,
        })
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
