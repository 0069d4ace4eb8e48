use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::{render_terms, LaurentPoly};
use crate::{Error, Result};

/// A polynomial in `z = v - v^-1` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ConwayPoly {
    coeffs: BTreeMap<u32, BigInt>,
}

impl ConwayPoly {
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, C)>,
        C: Into<BigInt>,
    {
        let mut coeffs = BTreeMap::new();
        for (e, c) in terms {
            let slot: &mut BigInt = coeffs.entry(e).or_default();
            *slot += c.into();
            if slot.is_zero() {
                coeffs.remove(&e);
            }
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exponent: u32) -> BigInt {
        self.coeffs.get(&exponent).cloned().unwrap_or_default()
    }

    /// Expands `p(v - v^-1)`.
    pub fn to_laurent(&self) -> LaurentPoly {
        let z = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.coeffs {
            out += &z.pow(*e).scale(c);
        }
        out
    }
}

impl fmt::Display for ConwayPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(
            self.terms().map(|(e, c)| (e.to_string(), e == 0, c)),
            "z",
        ))
    }
}

impl fmt::Debug for ConwayPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ConwayPoly({self})")
    }
}

/// Rewrites `f` as a polynomial in `z = v - v^-1` by greedy elimination of
/// leading terms: `c v^d` is removed by subtracting `c z^d`.
pub fn to_conway(f: &LaurentPoly) -> Result<ConwayPoly> {
    let z = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
    let mut residual = f.clone();
    let mut out = BTreeMap::new();
    while let Some((d, c)) = residual.leading_term() {
        if d < 0 {
            return Err(Error::NotAConwayPolynomial(f.to_string()));
        }
        let c = c.clone();
        residual -= &z.pow(d as u32).scale(&c);
        out.insert(d as u32, c);
    }
    Ok(ConwayPoly { coeffs: out })
}

/// A Laurent polynomial in `t` whose exponents may be half-integers.
///
/// Stored in terms of `s = t^(1/2)`, so an exponent `k` of `s` is `t^(k/2)`.
/// With `t = v^2` this is literally the polynomial in `v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlexanderPoly {
    doubled: LaurentPoly,
    half_integer: bool,
}

impl AlexanderPoly {
    /// From a polynomial with integer exponents in `t`.
    pub fn from_integer_t(p: &LaurentPoly) -> Self {
        Self {
            doubled: LaurentPoly::from_terms(p.terms().map(|(e, c)| (2 * e, c.clone()))),
            half_integer: false,
        }
    }

    /// From a polynomial in `s = t^(1/2)`.
    pub fn from_doubled(doubled: LaurentPoly) -> Self {
        let half_integer = doubled.terms().any(|(e, _)| e % 2 != 0);
        Self {
            doubled,
            half_integer,
        }
    }

    pub fn doubled(&self) -> &LaurentPoly {
        &self.doubled
    }

    /// Whether the polynomial is meant to live on half-integer exponents
    /// (links with an even number of components).
    pub fn has_half_integer_exponents(&self) -> bool {
        self.half_integer
    }

    pub fn is_zero(&self) -> bool {
        self.doubled.is_zero()
    }

    /// Terms as (exponent text, coefficient), e.g. `("3/2", 1)`.
    pub fn terms(&self) -> impl Iterator<Item = (String, &BigInt)> {
        self.doubled.terms().map(|(e, c)| (half_exponent(e), c))
    }
}

pub(crate) fn half_exponent(doubled: i64) -> String {
    if doubled % 2 == 0 {
        (doubled / 2).to_string()
    } else {
        format!("{doubled}/2")
    }
}

impl fmt::Display for AlexanderPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(
            self.doubled
                .terms()
                .map(|(e, c)| (half_exponent(e), e == 0, c)),
            "t",
        ))
    }
}

impl fmt::Debug for AlexanderPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlexanderPoly({self})")
    }
}

/// Substitutes `z = t^(1/2) - t^(-1/2)`.
///
/// The half-integer flag follows the component count: a link with an even
/// number of components has only odd powers of `z`, hence half-integer
/// powers of `t`.
pub fn to_alexander_t(p: &ConwayPoly, components: usize) -> AlexanderPoly {
    AlexanderPoly {
        doubled: p.to_laurent(),
        half_integer: components.is_multiple_of(2),
    }
}

/// True iff `f = ±t^k g` for some integer or half-integer `k`.
pub fn equal_up_to_unit(f: &AlexanderPoly, g: &AlexanderPoly) -> bool {
    match (f.doubled.min_exponent(), g.doubled.min_exponent()) {
        (None, None) => true,
        (Some(a), Some(b)) => {
            let f0 = f.doubled.shift(-a);
            let g0 = g.doubled.shift(-b);
            f0 == g0 || f0 == -&g0
        }
        _ => false,
    }
}
