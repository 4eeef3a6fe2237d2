//! Exact rational scalars.
//!
//! Values that fit a reduced `i64` fraction stay on a fast machine-word path
//! (intermediates in `i128`); anything larger is promoted to an arbitrary
//! precision [`BigRational`] and demoted again as soon as it fits.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact rational number, always kept in lowest terms with a positive
/// denominator.
#[derive(Clone)]
pub struct Scalar(Repr);

#[derive(Clone)]
enum Repr {
    /// numerator, denominator; reduced, denominator > 0
    Small(i64, i64),
    /// only used when the reduced value does not fit `Small`
    Big(Box<BigRational>),
}

impl Scalar {
    pub const fn zero() -> Self {
        Scalar(Repr::Small(0, 1))
    }

    pub const fn one() -> Self {
        Scalar(Repr::Small(1, 1))
    }

    pub const fn from_int(n: i64) -> Self {
        Scalar(Repr::Small(n, 1))
    }

    /// `num / den`, reduced. Panics when `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::from_big_rational(BigRational::new(num, den))
    }

    fn from_big_rational(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Scalar(Repr::Small(n, d)),
            _ => Scalar(Repr::Big(Box::new(r))),
        }
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        if num == 0 {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Scalar(Repr::Small(n, d)),
            _ => Scalar(Repr::Big(Box::new(BigRational::new(n.into(), d.into())))),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => (**r).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        matches!(self.0, Repr::Small(_, 1))
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small(n, d) => Self::from_i128(*d as i128, *n as i128),
            Repr::Big(r) => Self::from_big_rational(r.recip()),
        })
    }

    /// `(-1)^k` as a scalar.
    pub fn sign(k: usize) -> Scalar {
        if k.is_multiple_of(2) {
            Scalar::one()
        } else {
            Scalar::from_int(-1)
        }
    }

    /// `self += a * b` without materialising the product separately when
    /// everything stays small.
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let prod = a * b;
        *self += &prod;
    }
}

fn add_small(a: (i64, i64), b: (i64, i64)) -> Option<Scalar> {
    let (an, ad) = (a.0 as i128, a.1 as i128);
    let (bn, bd) = (b.0 as i128, b.1 as i128);
    if ad == bd {
        return Some(Scalar::from_i128(an + bn, ad));
    }
    let num = an.checked_mul(bd)?.checked_add(bn.checked_mul(ad)?)?;
    let den = ad.checked_mul(bd)?;
    Some(Scalar::from_i128(num, den))
}

fn mul_small(a: (i64, i64), b: (i64, i64)) -> Scalar {
    // cross-reduce first; products of two i64 always fit i128
    let g1 = a.0.gcd(&b.1).max(1);
    let g2 = b.0.gcd(&a.1).max(1);
    let num = (a.0 / g1) as i128 * (b.0 / g2) as i128;
    let den = (a.1 / g2) as i128 * (b.1 / g1) as i128;
    Scalar::from_i128(num, den)
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Big(x), Repr::Big(y)) => x == y,
            // canonical form: a value that fits Small is never Big
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(n, d) => {
                0u8.hash(state);
                n.hash(state);
                d.hash(state);
            }
            Repr::Big(r) => {
                1u8.hash(state);
                r.hash(state);
            }
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128)),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Small(0, _), _) => rhs.clone(),
            (_, Repr::Small(0, _)) => self.clone(),
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                add_small((*a, *b), (*c, *d)).unwrap_or_else(|| Scalar::from_big_rational(self.to_big() + rhs.to_big()))
            }
            _ => Scalar::from_big_rational(self.to_big() + rhs.to_big()),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Small(0, _), _) | (_, Repr::Small(0, _)) => Scalar::zero(),
            (Repr::Small(1, 1), _) => rhs.clone(),
            (_, Repr::Small(1, 1)) => self.clone(),
            (Repr::Small(a, b), Repr::Small(c, d)) => mul_small((*a, *b), (*c, *d)),
            _ => Scalar::from_big_rational(self.to_big() * rhs.to_big()),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        let inv = rhs.recip().expect("division by zero scalar");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Small(n, d) => match n.checked_neg() {
                Some(m) => Scalar(Repr::Small(m, *d)),
                None => Scalar::from_big_rational(-self.to_big()),
            },
            Repr::Big(r) => Scalar::from_big_rational(-(**r).clone()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        *self = &*self + rhs;
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self += &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        *self = &*self - rhs;
    }
}

impl SubAssign<Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self -= &rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<i32> for Scalar {
    fn from(n: i32) -> Self {
        Scalar::from_int(n as i64)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::from_big_rational(r)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseScalarError(pub String);

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// Accepts `"p"` or `"p/q"` with optional leading sign on `p`; `q` must
    /// be a nonzero integer. Any fraction is accepted and reduced.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseScalarError(s.to_string());
        let int = |t: &str| -> Result<BigInt, ParseScalarError> {
            let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            t.parse::<BigInt>().map_err(|_| err())
        };
        match s.split_once('/') {
            None => Ok(Scalar::from_big_rational(BigRational::from_integer(int(s)?))),
            Some((n, d)) => {
                let (n, d) = (int(n)?, int(d)?);
                if d.is_zero() {
                    return Err(err());
                }
                Ok(Scalar::from_big(n, d))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(n: i64, d: i64) -> Scalar {
        Scalar::ratio(n, d)
    }

    #[test]
    fn lowest_terms() {
        assert_eq!(s(4, -6).to_string(), "-2/3");
        assert_eq!(s(0, -5).to_string(), "0");
        assert_eq!(s(10, 5).to_string(), "2");
        assert_eq!(s(0, 3), Scalar::zero());
    }

    #[test]
    fn parse_and_print() {
        assert_eq!("3/6".parse::<Scalar>().unwrap(), s(1, 2));
        assert_eq!("-7".parse::<Scalar>().unwrap(), s(-7, 1));
        assert_eq!("6/-4".parse::<Scalar>().unwrap(), s(-3, 2));
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("".parse::<Scalar>().is_err());
        assert!("1.5".parse::<Scalar>().is_err());
        assert!("a/2".parse::<Scalar>().is_err());
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Scalar::from_int(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq.0, Repr::Big(_)));
        let back = &sq / &big;
        assert!(matches!(back.0, Repr::Small(..)));
        assert_eq!(back, big);
        let min = Scalar::from_int(i64::MIN);
        assert_eq!(-(-&min), min);
        let huge: Scalar = "123456789012345678901234567890/11".parse().unwrap();
        assert_eq!(huge.to_string(), "123456789012345678901234567890/11");
        assert_eq!(&(&huge - &huge) + &Scalar::one(), Scalar::one());
    }

    fn arb() -> impl Strategy<Value = Scalar> {
        (any::<i64>(), 1i64..1_000_000_000_000).prop_map(|(n, d)| s(n, d))
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb(), b in arb(), c in arb()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, Scalar::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a / &a, Scalar::one());
            }
        }

        #[test]
        fn display_round_trip(a in arb()) {
            prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
        }
    }
}
