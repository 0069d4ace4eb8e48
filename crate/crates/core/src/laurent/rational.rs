use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::gcd::{div_exact, poly_gcd};
use super::poly::{forward_owned, LaurentPoly};
use crate::{Error, Result};

/// A reduced fraction of Laurent polynomials.
///
/// Canonical form: numerator and denominator share no non-unit factor, and
/// the denominator has lowest exponent 0 and a positive leading coefficient.
/// Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The Laurent polynomial this fraction equals, if any.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.den.is_one().then(|| self.num.clone())
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RationalFn) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn bar(&self) -> Self {
        Self::reduce(self.num.bar(), self.den.bar())
    }

    pub fn pow(&self, k: u32) -> Self {
        Self::reduce(self.num.pow(k), self.den.pow(k))
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let (num_shift, n) = num.to_dense();
        let (den_shift, d) = den.to_dense();
        let g = poly_gcd(&n, &d);
        let mut n = div_exact(&n, &g);
        let mut d = div_exact(&d, &g);
        if d.last().is_some_and(|c| c.is_negative()) {
            n.iter_mut().for_each(|c| *c = -&*c);
            d.iter_mut().for_each(|c| *c = -&*c);
        }
        Self {
            num: LaurentPoly::from_dense(num_shift - den_shift, &n),
            den: LaurentPoly::from_dense(0, &d),
        }
    }

    pub fn eval_f64(&self, v: f64) -> f64 {
        self.num.eval_f64(v) / self.den.eval_f64(v)
    }
}

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFn({self})")
    }
}

impl Add<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFn::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RationalFn::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Mul<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        if self.is_zero() || rhs.is_zero() {
            return RationalFn::zero();
        }
        RationalFn::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        -&self
    }
}

forward_owned!(RationalFn, Add add, Sub sub, Mul mul);

impl LaurentPoly {
    /// Division in the fraction field.
    pub fn div_rational(&self, divisor: &LaurentPoly) -> Result<RationalFn> {
        RationalFn::new(self.clone(), divisor.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::quantum_integer;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn reduces_to_laurent() {
        // (v^3 + v^-3) / [2] = v^2 - 1 + v^-2
        let r = p(&[(3, 1), (-3, 1)])
            .div_rational(&quantum_integer(2))
            .unwrap();
        assert_eq!(r.to_laurent().unwrap(), p(&[(2, 1), (0, -1), (-2, 1)]));
    }

    #[test]
    fn canonical_denominator() {
        let r = RationalFn::new(p(&[(5, 1)]), p(&[(3, -1), (1, -1)])).unwrap();
        // v^5 / -(v^3 + v) = -v^4 / (1 + v^2)
        assert_eq!(r.numerator(), &p(&[(4, -1)]));
        assert_eq!(r.denominator(), &p(&[(0, 1), (2, 1)]));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(
            RationalFn::new(LaurentPoly::one(), LaurentPoly::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(RationalFn::zero().recip(), Err(Error::DivisionByZero));
        assert!(RationalFn::one().checked_div(&RationalFn::zero()).is_err());
    }

    #[test]
    fn integer_content_kept_in_denominator() {
        let half = RationalFn::new(LaurentPoly::one(), LaurentPoly::constant(2)).unwrap();
        let sum = &half + &half;
        assert_eq!(sum, RationalFn::one());
        assert!(half.to_laurent().is_none());
    }

    #[test]
    fn bar_of_diagonal_coefficient() {
        // -v^-2/[2] -> -v^2/[2]
        let a = RationalFn::new(p(&[(-2, -1)]), quantum_integer(2)).unwrap();
        let expected = RationalFn::new(p(&[(2, -1)]), quantum_integer(2)).unwrap();
        assert_eq!(a.bar(), expected);
        assert_eq!(a.bar().bar(), a);
    }
}
