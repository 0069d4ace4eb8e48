use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// An element of `Z[v, v^-1]`.
///
/// Coefficients are arbitrary precision; zero coefficients are never stored,
/// so the zero polynomial has no terms and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exponent: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        Self { terms }
    }

    /// The variable itself.
    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    /// `v^k`.
    pub fn v_pow(k: i64) -> Self {
        Self::monomial(1, k)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + ExactSizeIterator {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exponent: i64) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_default()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Highest-degree term.
    pub fn leading_term(&self) -> Option<(i64, &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    pub fn add_term(&mut self, exponent: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponent) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// The bar involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Exact quotient in `Z[v, v^-1]`; fails if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let Some((d_lead_exp, d_lead)) = divisor.leading_term() else {
            return Err(Error::DivisionByZero);
        };
        let d_lead = d_lead.clone();
        let d_span = d_lead_exp - divisor.min_exponent().unwrap();
        let mut rem = self.clone();
        let mut quotient = LaurentPoly::zero();
        while let Some((e, c)) = rem.leading_term() {
            let span = e - rem.min_exponent().unwrap();
            if span < d_span {
                break;
            }
            let (q, r) = c.div_rem(&d_lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!("({self}) / ({divisor})")));
            }
            let term = LaurentPoly::monomial(q, e - d_lead_exp);
            rem -= &(&term * divisor);
            quotient += &term;
        }
        if rem.is_zero() {
            Ok(quotient)
        } else {
            Err(Error::InexactDivision(format!("({self}) / ({divisor})")))
        }
    }

    /// Splits off the lowest power of `v`: `self = v^shift * (c_0 + c_1 v + ...)`.
    pub(crate) fn to_dense(&self) -> (i64, Vec<BigInt>) {
        let Some(lo) = self.min_exponent() else {
            return (0, Vec::new());
        };
        let hi = self.max_exponent().unwrap();
        let mut dense = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            dense[(e - lo) as usize] = c.clone();
        }
        (lo, dense)
    }

    pub(crate) fn from_dense(shift: i64, dense: &[BigInt]) -> Self {
        Self::from_terms(
            dense
                .iter()
                .enumerate()
                .map(|(i, c)| (shift + i as i64, c.clone())),
        )
    }

    /// Renders the polynomial in increasing exponent order with the given
    /// variable name, e.g. `-v^-2 + 3 - v^2`.
    pub fn display_with(&self, var: &str) -> String {
        render_terms(self.terms().map(|(e, c)| (e.to_string(), e == 0, c)), var)
    }

    pub fn eval_f64(&self, v: f64) -> f64 {
        self.terms()
            .map(|(e, c)| c.to_string().parse::<f64>().unwrap() * v.powi(e as i32))
            .sum()
    }
}

/// Shared term renderer. Each item is (exponent text, is_constant, coefficient).
pub(crate) fn render_terms<'a, I>(terms: I, var: &str) -> String
where
    I: Iterator<Item = (String, bool, &'a BigInt)>,
{
    let mut out = String::new();
    for (exp, is_const, c) in terms {
        let negative = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if is_const {
            out.push_str(&mag.to_string());
            continue;
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        out.push_str(var);
        if exp != "1" {
            out.push('^');
            out.push_str(&exp);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("v"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { (&self).$m(&rhs) }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty { (&self).$m(rhs) }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { self.$m(&rhs) }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(LaurentPoly, Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// The quantum integer `[r] = (v^r - v^-r) / (v - v^-1)`.
///
/// For `r > 0` this is `v^(r-1) + v^(r-3) + ... + v^(1-r)`; `[0] = 0` and
/// `[-r] = -[r]`.
pub fn quantum_integer(r: i64) -> LaurentPoly {
    let sign: i64 = if r < 0 { -1 } else { 1 };
    let m = r.abs();
    LaurentPoly::from_terms((0..m).map(|k| (m - 1 - 2 * k, sign)))
}
