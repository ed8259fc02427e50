//! Number formatting shared by every output format.
//!
//! Values are printed with 12 significant digits. Fixed notation is used for
//! decimal exponents in `-5..=11`, scientific notation otherwise. Values whose
//! rounded fractional digits are all zero print as integers; infinity prints
//! as `inf`.

use serde::{Deserialize, Deserializer, Serializer};
use serde_json::value::RawValue;

pub const SIGNIFICANT: usize = 12;

pub fn number(v: f64) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf" } else { "-inf" }.into();
    }
    if v == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", SIGNIFICANT - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    if !(-5..=11).contains(&exp) {
        return format!("{sign}{mantissa}e{exp}");
    }
    let (int_part, frac_part) = if exp >= 0 {
        let split = exp as usize + 1;
        (digits[..split].to_string(), digits[split..].to_string())
    } else {
        let zeros = "0".repeat((-exp - 1) as usize);
        ("0".to_string(), format!("{zeros}{digits}"))
    };
    if frac_part.bytes().all(|b| b == b'0') {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

/// JSON token for `v`: a bare number, or a string for non-finite values.
pub fn json_number(v: f64) -> String {
    if v.is_finite() {
        number(v)
    } else {
        format!("\"{}\"", number(v))
    }
}

pub fn ser_num<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
    let raw = RawValue::from_string(json_number(*v)).map_err(serde::ser::Error::custom)?;
    serde::Serialize::serialize(&raw, s)
}

pub fn ser_nums<S: Serializer>(vs: &[f64], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(vs.len()))?;
    for v in vs {
        let raw = RawValue::from_string(json_number(*v)).map_err(serde::ser::Error::custom)?;
        seq.serialize_element(&raw)?;
    }
    seq.end()
}

pub fn ser_opt_num<S: Serializer>(v: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => ser_num(v, s),
        None => s.serialize_none(),
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Token {
    Num(f64),
    Text(String),
}

impl Token {
    fn value<E: serde::de::Error>(self) -> Result<f64, E> {
        match self {
            Token::Num(v) => Ok(v),
            Token::Text(s) => s
                .parse()
                .map_err(|_| E::custom(format!("expected a number or \"inf\", got {s:?}"))),
        }
    }
}

pub fn de_num<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
    Token::deserialize(d)?.value()
}

pub fn de_nums<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<f64>, D::Error> {
    Vec::<Token>::deserialize(d)?
        .into_iter()
        .map(Token::value)
        .collect()
}

pub fn de_opt_num<'de, D: Deserializer<'de>>(d: D) -> Result<Option<f64>, D::Error> {
    Option::<Token>::deserialize(d)?
        .map(Token::value)
        .transpose()
}
