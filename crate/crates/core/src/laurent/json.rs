//! JSON form of polynomials: `{"variable": "v", "terms": [[exponent, coefficient], ...]}`.
//!
//! Terms are sorted by exponent. Exponents of `t` are strings (`"3"` or
//! `"-1/2"`); exponents of `v` and `z` are integers. Coefficients are JSON
//! integers when they fit in an `i64` and decimal strings otherwise.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::conway::half_exponent;
use super::{AlexanderPoly, ConwayPoly, LaurentPoly};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variable {
    V,
    Z,
    T,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Exponent {
    Int(i64),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for Coefficient {
    fn from(c: &BigInt) -> Self {
        match c.to_i64() {
            Some(x) => Coefficient::Small(x),
            None => Coefficient::Big(c.to_string()),
        }
    }
}

impl Coefficient {
    fn to_bigint(&self) -> Result<BigInt> {
        match self {
            Coefficient::Small(x) => Ok(BigInt::from(*x)),
            Coefficient::Big(s) => s
                .parse()
                .map_err(|_| Error::Json(format!("bad coefficient `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub variable: Variable,
    pub terms: Vec<(Exponent, Coefficient)>,
}

impl From<&LaurentPoly> for PolyJson {
    fn from(p: &LaurentPoly) -> Self {
        PolyJson {
            variable: Variable::V,
            terms: p
                .terms()
                .map(|(e, c)| (Exponent::Int(e), c.into()))
                .collect(),
        }
    }
}

impl From<&ConwayPoly> for PolyJson {
    fn from(p: &ConwayPoly) -> Self {
        PolyJson {
            variable: Variable::Z,
            terms: p
                .terms()
                .map(|(e, c)| (Exponent::Int(e as i64), c.into()))
                .collect(),
        }
    }
}

impl From<&AlexanderPoly> for PolyJson {
    fn from(p: &AlexanderPoly) -> Self {
        PolyJson {
            variable: Variable::T,
            terms: p
                .doubled()
                .terms()
                .map(|(e, c)| (Exponent::Text(half_exponent(e)), c.into()))
                .collect(),
        }
    }
}

fn parse_half(text: &str) -> Result<i64> {
    let bad = || Error::Json(format!("bad t exponent `{text}`"));
    match text.split_once('/') {
        None => text.parse::<i64>().map(|k| 2 * k).map_err(|_| bad()),
        Some((k, "2")) => {
            let k = k.parse::<i64>().map_err(|_| bad())?;
            if k % 2 == 0 {
                Err(bad())
            } else {
                Ok(k)
            }
        }
        Some(_) => Err(bad()),
    }
}

impl PolyJson {
    fn expect(&self, var: Variable) -> Result<()> {
        if self.variable != var {
            return Err(Error::Json(format!(
                "expected variable {var:?}, found {:?}",
                self.variable
            )));
        }
        Ok(())
    }

    fn int_terms(&self) -> Result<Vec<(i64, BigInt)>> {
        self.terms
            .iter()
            .map(|(e, c)| match e {
                Exponent::Int(e) => Ok((*e, c.to_bigint()?)),
                Exponent::Text(s) => {
                    Err(Error::Json(format!("expected integer exponent, got `{s}`")))
                }
            })
            .collect()
    }

    pub fn to_laurent(&self) -> Result<LaurentPoly> {
        self.expect(Variable::V)?;
        Ok(LaurentPoly::from_terms(self.int_terms()?))
    }

    pub fn to_conway(&self) -> Result<ConwayPoly> {
        self.expect(Variable::Z)?;
        let terms = self.int_terms()?;
        if let Some((e, _)) = terms.iter().find(|(e, _)| *e < 0) {
            return Err(Error::Json(format!("negative z exponent {e}")));
        }
        Ok(ConwayPoly::from_terms(
            terms.into_iter().map(|(e, c)| (e as u32, c)),
        ))
    }

    pub fn to_alexander(&self) -> Result<AlexanderPoly> {
        self.expect(Variable::T)?;
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let e = match e {
                    Exponent::Text(s) => parse_half(s)?,
                    Exponent::Int(k) => 2 * k,
                };
                Ok((e, c.to_bigint()?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(AlexanderPoly::from_doubled(LaurentPoly::from_terms(terms)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::to_alexander_t;

    #[test]
    fn figure_eight_json() {
        let p = LaurentPoly::from_terms([(2, -1), (0, 3), (-2, -1)]);
        let json = serde_json::to_string(&PolyJson::from(&p)).unwrap();
        assert_eq!(json, r#"{"variable":"v","terms":[[-2,-1],[0,3],[2,-1]]}"#);
        let back: PolyJson = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_laurent().unwrap(), p);
    }

    #[test]
    fn half_integer_t_exponents() {
        let hopf = to_alexander_t(&ConwayPoly::from_terms([(1, 1)]), 2);
        let json = serde_json::to_string(&PolyJson::from(&hopf)).unwrap();
        assert_eq!(json, r#"{"variable":"t","terms":[["-1/2",-1],["1/2",1]]}"#);
        let back: PolyJson = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_alexander().unwrap().doubled(), hopf.doubled());
        assert!(parse_half("2/2").is_err());
        assert!(parse_half("1/3").is_err());
    }

    #[test]
    fn big_coefficients_are_strings() {
        let big: BigInt = BigInt::from(i64::MAX) * 4;
        let p = LaurentPoly::monomial(big.clone(), 1);
        let json = PolyJson::from(&p);
        assert_eq!(json.terms[0].1, Coefficient::Big(big.to_string()));
        assert_eq!(json.to_laurent().unwrap(), p);
    }

    #[test]
    fn variable_mismatch() {
        let json = PolyJson::from(&ConwayPoly::from_terms([(0, 1)]));
        assert!(json.to_laurent().is_err());
        assert!(json.to_conway().is_ok());
    }
}
