use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// The ground field every structure is defined over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    /// Arbitrary-precision rationals.
    Rational,
    /// The prime field GF(p).
    Prime(u64),
}

impl Field {
    /// Builds GF(p), rejecting composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Self, Error> {
        if p < 2 || p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::InvalidField(format!("GF({p}) requires a prime below 2^32")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar(Repr::Small(0, 1)),
            Field::Prime(p) => Scalar::gf(0, p),
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar(Repr::Small(n, 1)),
            Field::Prime(p) => Scalar::gf(n.rem_euclid(p as i64) as u64, p),
        }
    }

    /// Parses integer text, `a/b` fraction text, or (for GF(p)) any integer representative.
    pub fn parse(self, text: &str) -> Result<Scalar, Error> {
        let text = text.trim();
        let bad = || Error::Parse(format!("invalid scalar {text:?}"));
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (
                BigInt::from_str(n.trim()).map_err(|_| bad())?,
                BigInt::from_str(d.trim()).map_err(|_| bad())?,
            ),
            None => (BigInt::from_str(text).map_err(|_| bad())?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            Field::Rational => Ok(Scalar::from_big(BigRational::new(num, den))),
            Field::Prime(p) => {
                let reduce = |n: &BigInt| -> u64 {
                    let m = BigInt::from(p);
                    let r = ((n % &m) + &m) % &m;
                    r.to_string().parse().expect("reduced residue fits in u64")
                };
                let n = Scalar::gf(reduce(&num), p);
                let d = Scalar::gf(reduce(&den), p);
                Ok(&n * &d.inverse()?)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `Q` or `GF:<p>`.
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "Q" | "q" => Ok(Field::Rational),
            other => {
                let p = other
                    .strip_prefix("GF:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::InvalidField(format!("unknown field {other:?}")))?;
                Field::prime(p)
            }
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact element of a [`Field`].
///
/// Rationals whose numerator and denominator fit in `i64` stay unboxed; the
/// representation is canonical, so derived equality and hashing are value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    /// Reduced, denominator positive.
    Small(i64, i64),
    /// Only for values that do not fit `Small`.
    Big(BigRational),
    Gf { value: u64, modulus: u64 },
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Reduces `n/d` (`d ≠ 0`) into canonical form.
fn rational(n: i128, d: i128) -> Scalar {
    let g = gcd(n.unsigned_abs(), d.unsigned_abs()) as i128;
    let (mut n, mut d) = (n / g, d / g);
    if d < 0 {
        (n, d) = (-n, -d);
    }
    match (i64::try_from(n), i64::try_from(d)) {
        (Ok(n), Ok(d)) => Scalar(Repr::Small(n, d)),
        _ => Scalar(Repr::Big(BigRational::new(BigInt::from(n), BigInt::from(d)))),
    }
}

fn big(q: BigRational) -> Scalar {
    use num_traits::ToPrimitive;
    match (q.numer().to_i64(), q.denom().to_i64()) {
        (Some(n), Some(d)) => Scalar(Repr::Small(n, d)),
        _ => Scalar(Repr::Big(q)),
    }
}

impl Scalar {
    fn from_big(q: BigRational) -> Self {
        big(q)
    }

    fn gf(value: u64, modulus: u64) -> Self {
        Scalar(Repr::Gf { value, modulus })
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(q) => q.clone(),
            Repr::Gf { .. } => unreachable!("not a rational"),
        }
    }

    pub fn field(&self) -> Field {
        match self.0 {
            Repr::Gf { modulus, .. } => Field::Prime(modulus),
            _ => Field::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n == 0,
            Repr::Big(q) => q.is_zero(),
            Repr::Gf { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Small(n, d) => *n == 1 && *d == 1,
            Repr::Big(q) => q.is_one(),
            Repr::Gf { value, .. } => *value == 1,
        }
    }

    pub fn inverse(&self) -> Result<Scalar, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Small(n, d) => rational(*d as i128, *n as i128),
            Repr::Big(q) => big(q.recip()),
            Repr::Gf { value, modulus } => Scalar::gf(pow_mod(*value, modulus - 2, *modulus), *modulus),
        })
    }

    fn same_field(&self, other: &Scalar) {
        assert_eq!(self.field(), other.field(), "scalars from different fields");
    }
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u128;
    let mut b = (base % m) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m as u128;
        }
        b = b * b % m as u128;
        exp >>= 1;
    }
    acc as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Repr::Big(q) => {
                // BigRational keeps the denominator positive.
                debug_assert!(q.denom().is_positive());
                write!(f, "{}/{}", q.numer(), q.denom())
            }
            Repr::Gf { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.same_field(rhs);
        match (&self.0, &rhs.0) {
            (Repr::Gf { value: a, modulus }, Repr::Gf { value: b, .. }) => {
                Scalar::gf(((*a as u128 + *b as u128) % *modulus as u128) as u64, *modulus)
            }
            (Repr::Small(0, _), _) => rhs.clone(),
            (_, Repr::Small(0, _)) => self.clone(),
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    rational(a + c, b)
                } else {
                    rational(a * d + c * b, b * d)
                }
            }
            _ => big(self.to_big() + rhs.to_big()),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.same_field(rhs);
        match (&self.0, &rhs.0) {
            (Repr::Gf { value: a, modulus }, Repr::Gf { value: b, .. }) => {
                Scalar::gf(((*a as u128 * *b as u128) % *modulus as u128) as u64, *modulus)
            }
            (Repr::Small(1, 1), _) => rhs.clone(),
            (_, Repr::Small(1, 1)) => self.clone(),
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                rational(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => big(self.to_big() * rhs.to_big()),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Small(n, d) => rational(-(*n as i128), *d as i128),
            Repr::Big(q) => big(-q),
            Repr::Gf { value, modulus } => Scalar::gf((modulus - value) % modulus, *modulus),
        }
    }
}
