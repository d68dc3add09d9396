use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::field::pow_mod;
use crate::{FieldSpec, LaError};

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { v: u64, p: u64 },
}

impl Scalar {
    pub fn zero(field: FieldSpec) -> Scalar {
        Scalar::from_i64(field, 0)
    }

    pub fn one(field: FieldSpec) -> Scalar {
        Scalar::from_i64(field, 1)
    }

    pub fn from_i64(field: FieldSpec, n: i64) -> Scalar {
        match field {
            FieldSpec::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => Scalar::Residue {
                v: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    /// num/den, failing if den vanishes in the field.
    pub fn from_ratio(field: FieldSpec, num: i64, den: i64) -> Result<Scalar, LaError> {
        let d = Scalar::from_i64(field, den);
        if d.is_zero() {
            return Err(LaError::ZeroDenominator);
        }
        Ok(Scalar::from_i64(field, num) / d)
    }

    pub(crate) fn from_big(field: FieldSpec, q: BigRational) -> Result<Scalar, LaError> {
        match field {
            FieldSpec::Rational => Ok(Scalar::Rational(q)),
            FieldSpec::Prime(p) => {
                let pb = BigInt::from(p);
                let n = q.numer().mod_floor_big(&pb);
                let d = q.denom().mod_floor_big(&pb);
                if d == 0 {
                    return Err(LaError::ZeroDenominator);
                }
                Ok(Scalar::Residue {
                    v: n * pow_mod(d, p - 2, p) % p,
                    p,
                })
            }
        }
    }

    /// Parses "3", "-3/2"; over 𝔽_p fractions are reduced mod p.
    pub fn parse(field: FieldSpec, s: &str) -> Result<Scalar, LaError> {
        let t = s.trim();
        let bad = || LaError::Parse(format!("bad scalar `{s}`"));
        let q = match t.split_once('/') {
            Some((a, b)) => {
                let n: BigInt = a.trim().parse().map_err(|_| bad())?;
                let d: BigInt = b.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(LaError::ZeroDenominator);
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(t.parse().map_err(|_| bad())?),
        };
        Scalar::from_big(field, q)
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Residue { p, .. } => FieldSpec::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { v, p } => *v == 1 % *p,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue { v, p } => Scalar::Residue {
                v: pow_mod(*v, p - 2, *p),
                p: *p,
            },
        })
    }

    pub fn pow(&self, e: i64) -> Scalar {
        let base = if e < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut r = Scalar::one(self.field());
        for _ in 0..e.unsigned_abs() {
            r = &r * &base;
        }
        r
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Residue { .. } => None,
        }
    }
}

trait ModFloor {
    fn mod_floor_big(&self, m: &BigInt) -> u64;
}

impl ModFloor for BigInt {
    fn mod_floor_big(&self, m: &BigInt) -> u64 {
        let mut r = self % m;
        if r.is_negative() {
            r += m;
        }
        u64::try_from(r).expect("residue fits")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Residue { v, .. } => write!(f, "{v}"),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order used only for deterministic sorting; it is not a field order.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (Scalar::Residue { v: a, p: pa }, Scalar::Residue { v: b, p: pb }) => {
                (pa, a).cmp(&(pb, b))
            }
            (Scalar::Rational(_), _) => Ordering::Less,
            _ => Ordering::Greater,
        }
    }
}

fn same_field(a: &Scalar, b: &Scalar) {
    assert_eq!(a.field(), b.field(), "scalar field mismatch");
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        same_field(self, o);
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { v: a, p }, Scalar::Residue { v: b, .. }) => Scalar::Residue {
                v: (a + b) % p,
                p: *p,
            },
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self + &(-o)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        same_field(self, o);
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { v: a, p }, Scalar::Residue { v: b, .. }) => Scalar::Residue {
                v: a * b % p,
                p: *p,
            },
            _ => unreachable!(),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &Scalar) -> Scalar {
        self * &o.inv().expect("division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { v, p } => Scalar::Residue {
                v: (p - v) % p,
                p: *p,
            },
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, o: Scalar) -> Scalar { (&self).$f(&o) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, o: &Scalar) -> Scalar { (&self).$f(o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let q = FieldSpec::Rational;
        assert_eq!(Scalar::parse(q, "3/2").unwrap().to_string(), "3/2");
        assert_eq!(Scalar::parse(q, "-4/2").unwrap().to_string(), "-2");
        let f7 = FieldSpec::Prime(7);
        assert_eq!(Scalar::parse(f7, "1/2").unwrap(), Scalar::from_i64(f7, 4));
        assert_eq!(Scalar::parse(f7, "-1").unwrap().to_string(), "6");
        assert!(Scalar::parse(f7, "1/7").is_err());
    }

    #[test]
    fn inverse_and_power() {
        let f7 = FieldSpec::Prime(7);
        let two = Scalar::from_i64(f7, 2);
        assert_eq!(two.inv().unwrap(), Scalar::from_i64(f7, 4));
        assert_eq!(two.pow(3), Scalar::from_i64(f7, 1));
        assert_eq!(two.pow(-1), Scalar::from_i64(f7, 4));
        let h = Scalar::from_ratio(FieldSpec::Rational, 1, 2).unwrap();
        assert_eq!((&h + &h), Scalar::one(FieldSpec::Rational));
    }
}
