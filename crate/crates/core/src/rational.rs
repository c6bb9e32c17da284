//! Exact values on the wire: big integers as decimal strings, rationals as
//! `"num/den"` (or a bare integer when the denominator is 1).

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serializer};

pub fn parse_ratio(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|e| format!("{s:?}: {e}"))?;
            let d: BigInt = d.trim().parse().map_err(|e| format!("{s:?}: {e}"))?;
            if d == BigInt::from(0) {
                return Err(format!("{s:?}: zero denominator"));
            }
            Ok(BigRational::new(n, d))
        }
        None => parse_decimal(s),
    }
}

/// Exact value of a decimal literal such as `0.25` or `-3`.
pub fn parse_decimal(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(format!("{s:?}: empty number"));
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(format!("{s:?}: not a decimal number"));
    }
    let digits: BigInt = format!("{int}{frac}")
        .parse()
        .map_err(|e| format!("{s:?}: {e}"))?;
    let den = BigInt::from(10).pow(frac.len() as u32);
    let r = BigRational::new(digits, den);
    Ok(if neg { -r } else { r })
}

pub mod ratio_str {
    use super::*;

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        parse_ratio(&s).map_err(serde::de::Error::custom)
    }
}

pub mod big_str {
    use super::*;

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub mod opt_big_str {
    use super::*;

    pub fn serialize<S: Serializer>(n: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match n {
            Some(n) => s.serialize_some(&n.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals_are_exact() {
        assert_eq!(
            parse_decimal("0.5").unwrap(),
            BigRational::new(1.into(), 2.into())
        );
        assert_eq!(
            parse_decimal("-1.25").unwrap(),
            BigRational::new((-5).into(), 4.into())
        );
        assert_eq!(
            parse_ratio("2/3").unwrap(),
            BigRational::new(2.into(), 3.into())
        );
        assert!(parse_ratio("1/0").is_err());
        assert!(parse_decimal("1e3").is_err());
    }

    #[test]
    fn display_drops_unit_denominator() {
        assert_eq!(BigRational::new(4.into(), 2.into()).to_string(), "2");
        assert_eq!(BigRational::new(3.into(), 2.into()).to_string(), "3/2");
    }
}
