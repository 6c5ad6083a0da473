use crate::{AlgebraError, LaurentPoly, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

/// A scalar as it appears in JSON: an exact `"num/den"` string or a complex pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarJson {
    Exact { value: String },
    Complex { re: f64, im: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub i: i64,
    pub j: i64,
    #[serde(flatten)]
    pub value: ScalarJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LaurentJson {
    pub terms: Vec<TermJson>,
}

impl<S: Scalar> From<&LaurentPoly<S>> for LaurentJson {
    fn from(p: &LaurentPoly<S>) -> Self {
        LaurentJson { terms: p.terms().map(|((i, j), c)| TermJson { i, j, value: c.to_json() }).collect() }
    }
}

impl LaurentJson {
    pub fn to_poly<S: Scalar>(&self) -> Result<LaurentPoly<S>, AlgebraError> {
        let mut p = LaurentPoly::zero();
        for t in &self.terms {
            p.add_term(t.i, t.j, S::from_json(&t.value)?);
        }
        Ok(p)
    }
}

/// Parses `"n"`, `"n/d"` or a finite decimal such as `"0.25"`.
pub fn parse_rational(s: &str) -> Result<BigRational, AlgebraError> {
    let err = || AlgebraError::ParseScalar(s.to_string());
    let t = s.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| err())?;
        let d: BigInt = d.trim().parse().map_err(|_| err())?;
        if d == BigInt::from(0) {
            return Err(err());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(err());
        }
        let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| err())?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(BigRational::new(digits, den));
    }
    t.parse::<BigInt>().map(BigRational::from_integer).map_err(|_| err())
}

pub fn rational_to_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
