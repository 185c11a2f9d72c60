//! Exact rational coefficients.
//!
//! [`Q`] stores values whose numerator and denominator fit in `i64` inline
//! and falls back to arbitrary precision on overflow, so the common case of
//! small integer coefficients avoids big-integer arithmetic entirely. The
//! representation is canonical: a value is stored inline whenever it fits.

use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(Ratio<i64>),
    Big(BigRational),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Q(Repr);

impl Q {
    /// `n / d`; panics if `d` is zero.
    pub fn new(n: BigInt, d: BigInt) -> Q {
        Q::from_big(BigRational::new(n, d))
    }

    pub fn from_integer(n: BigInt) -> Q {
        Q::from_big(BigRational::from_integer(n))
    }

    fn from_big(r: BigRational) -> Q {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            // i64::MIN cannot be negated safely by the inline arithmetic.
            (Some(n), Some(d)) if n != i64::MIN => Q(Repr::Small(Ratio::new_raw(n, d))),
            _ => Q(Repr::Big(r)),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(r) => BigRational::new_raw((*r.numer()).into(), (*r.denom()).into()),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => *r.numer() < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn abs(&self) -> Q {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_integer(),
            Repr::Big(r) => r.is_integer(),
        }
    }

    fn combine(
        &self,
        other: &Q,
        small: impl Fn(&Ratio<i64>, &Ratio<i64>) -> Option<Ratio<i64>>,
        big: impl Fn(BigRational, BigRational) -> BigRational,
    ) -> Q {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &other.0) {
            if let Some(r) = small(a, b) {
                if *r.numer() != i64::MIN {
                    return Q(Repr::Small(r));
                }
            }
        }
        Q::from_big(big(self.to_big(), other.to_big()))
    }
}

impl From<i64> for Q {
    fn from(n: i64) -> Q {
        Q::from_integer(n.into())
    }
}

impl Zero for Q {
    fn zero() -> Q {
        Q(Repr::Small(Ratio::zero()))
    }

    fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_zero(),
            Repr::Big(_) => false,
        }
    }
}

impl One for Q {
    fn one() -> Q {
        Q(Repr::Small(Ratio::one()))
    }

    fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_one(),
            Repr::Big(_) => false,
        }
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(r) => write!(f, "{r}"),
            Repr::Big(r) => write!(f, "{r}"),
        }
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Neg for &Q {
    type Output = Q;
    fn neg(self) -> Q {
        match &self.0 {
            // Inline numerators are never i64::MIN, so this cannot overflow.
            Repr::Small(r) => Q(Repr::Small(-r)),
            Repr::Big(r) => Q::from_big(-r),
        }
    }
}

impl Neg for Q {
    type Output = Q;
    fn neg(self) -> Q {
        -&self
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident, $assign_tr:ident, $assign:ident) => {
        impl $tr<&Q> for &Q {
            type Output = Q;
            fn $method(self, rhs: &Q) -> Q {
                self.combine(rhs, |a, b| a.$checked(b), |a, b| a.$method(b))
            }
        }

        impl $tr<Q> for Q {
            type Output = Q;
            fn $method(self, rhs: Q) -> Q {
                (&self).$method(&rhs)
            }
        }

        impl $tr<&Q> for Q {
            type Output = Q;
            fn $method(self, rhs: &Q) -> Q {
                (&self).$method(rhs)
            }
        }

        impl $tr<Q> for &Q {
            type Output = Q;
            fn $method(self, rhs: Q) -> Q {
                self.$method(&rhs)
            }
        }

        impl $assign_tr<&Q> for Q {
            fn $assign(&mut self, rhs: &Q) {
                *self = (&*self).$method(rhs);
            }
        }

        impl $assign_tr<Q> for Q {
            fn $assign(&mut self, rhs: Q) {
                *self = (&*self).$method(&rhs);
            }
        }
    };
}

binop!(Add, add, checked_add, AddAssign, add_assign);
binop!(Sub, sub, checked_sub, SubAssign, sub_assign);
binop!(Mul, mul, checked_mul, MulAssign, mul_assign);
binop!(Div, div, checked_div, DivAssign, div_assign);

pub fn q(n: i64) -> Q {
    Q::from(n)
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = q(i64::MAX) + q(1);
        assert!(matches!(big.0, Repr::Big(_)));
        assert_eq!(big.to_string(), "9223372036854775808");
        let back = &big - &q(1);
        assert!(matches!(back.0, Repr::Small(_)));
        assert_eq!(back, q(i64::MAX));
        let sq = &big * &big;
        assert_eq!(&sq / &big, big);
    }

    #[test]
    fn min_value_stays_big() {
        let m = q(i64::MIN);
        assert!(matches!(m.0, Repr::Big(_)));
        assert_eq!(-(-m.clone()), m);
        assert_eq!(q(-i64::MAX) - q(1), m);
    }

    #[test]
    fn fractions_reduce() {
        assert_eq!(q_frac(2, 4), q_frac(1, 2));
        assert_eq!(q_frac(1, 2) + q_frac(1, 2), q(1));
        assert_eq!(q_frac(-3, 2).to_string(), "-3/2");
        assert_eq!(q_frac(-3, 2).abs(), q_frac(3, 2));
        assert!(q_frac(-3, 2).is_negative());
        assert!((q(3) / q(3)).is_one());
        assert!((q(3) - q(3)).is_zero());
    }
}
