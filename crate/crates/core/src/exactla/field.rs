use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::LinAlgError;

/// Ground field of every object in the lab: a prime field or the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Prime(u64),
    Rationals,
}

/// A field element in canonical form: residues in `0..p`, rationals in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod(u64),
    Rat(BigRational),
}

const MAX_PRIME: u64 = 1 << 31;

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

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self, LinAlgError> {
        if p >= MAX_PRIME || !is_prime(p) {
            return Err(LinAlgError::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Prime(p) => *p,
            FieldSpec::Rationals => 0,
        }
    }

    /// Number of elements, when the field is finite.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Prime(p) => Some(*p),
            FieldSpec::Rationals => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Prime(_) => Scalar::Mod(0),
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Prime(p) => Scalar::Mod(v.rem_euclid(*p as i64) as u64),
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
        }
    }

    /// `num / den` reduced into the field; `None` when `den` vanishes.
    pub fn from_fraction(&self, num: i64, den: i64) -> Option<Scalar> {
        let d = self.from_i64(den);
        let inv = self.inv(&d)?;
        Some(self.mul(&self.from_i64(num), &inv))
    }

    fn check(&self, s: &Scalar) {
        debug_assert!(
            matches!(
                (self, s),
                (FieldSpec::Prime(_), Scalar::Mod(_)) | (FieldSpec::Rationals, Scalar::Rat(_))
            ),
            "scalar {s:?} does not belong to {self:?}"
        );
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.check(a);
        self.check(b);
        match (self, a, b) {
            (FieldSpec::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod((x + y) % p),
            (_, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            _ => unreachable!("mixed scalar kinds"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod((x + p - y) % p),
            (_, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x - y),
            _ => unreachable!("mixed scalar kinds"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod((x * y) % p),
            (_, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            _ => unreachable!("mixed scalar kinds"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Prime(p), Scalar::Mod(x)) => Scalar::Mod((p - x) % p),
            (_, Scalar::Rat(x)) => Scalar::Rat(-x),
            _ => unreachable!("mixed scalar kinds"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match (self, a) {
            (FieldSpec::Prime(p), Scalar::Mod(x)) => Some(Scalar::Mod(mod_pow(*x, p - 2, *p))),
            (_, Scalar::Rat(x)) => Some(Scalar::Rat(x.recip())),
            _ => unreachable!("mixed scalar kinds"),
        }
    }

    /// Parses `"3"`, `"-2"`, or `"3/4"`.
    pub fn parse(&self, text: &str) -> Option<Scalar> {
        let text = text.trim();
        match text.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().ok()?;
                let d: BigInt = d.trim().parse().ok()?;
                match self {
                    FieldSpec::Prime(p) => {
                        let pm = BigInt::from(*p);
                        let n = ((n % &pm) + &pm) % &pm;
                        let d = ((d % &pm) + &pm) % &pm;
                        let n = self.from_i64(n.to_i64()?);
                        let d = self.from_i64(d.to_i64()?);
                        Some(self.mul(&n, &self.inv(&d)?))
                    }
                    FieldSpec::Rationals => {
                        if d.is_zero() {
                            None
                        } else {
                            Some(Scalar::Rat(BigRational::new(n, d)))
                        }
                    }
                }
            }
            None => {
                let n: BigInt = text.parse().ok()?;
                match self {
                    FieldSpec::Prime(p) => {
                        let pm = BigInt::from(*p);
                        let r = ((n % &pm) + &pm) % &pm;
                        Some(Scalar::Mod(r.to_u64()?))
                    }
                    FieldSpec::Rationals => Some(Scalar::Rat(BigRational::from_integer(n))),
                }
            }
        }
    }

    /// Every element of a finite field, in increasing residue order.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            FieldSpec::Prime(p) => Some((0..*p).map(Scalar::Mod).collect()),
            FieldSpec::Rationals => None,
        }
    }
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

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod(x) => *x == 0,
            Scalar::Rat(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod(x) => *x == 1,
            Scalar::Rat(x) => x.is_one(),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "F{p}"),
            FieldSpec::Rationals => write!(f, "Q"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod(x) => write!(f, "{x}"),
            Scalar::Rat(x) => {
                if x.denom().is_one() {
                    write!(f, "{}", x.numer())
                } else if x.is_negative() {
                    write!(f, "-{}/{}", x.numer().abs(), x.denom())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
        }
    }
}
