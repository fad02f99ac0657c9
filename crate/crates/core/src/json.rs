//! Serde glue for exact scalars. Integers serialize as JSON numbers when they fit
//! in `i64` and as decimal strings otherwise; rationals always serialize as strings.

use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{fmt_rat, parse_rat, Int, Rat};
use crate::matrix::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub Int);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(v) => s.serialize_i64(v),
            Err(_) => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = JsonInt;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal integer string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
                Ok(JsonInt(Int::from(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
                Ok(JsonInt(Int::from(v)))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonInt, E> {
                v.trim().parse().map(JsonInt).map_err(|_| E::custom(format!("bad integer {v:?}")))
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonRat(pub Rat);

impl Serialize for JsonRat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rat(&self.0))
    }
}

impl<'de> Deserialize<'de> for JsonRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = JsonRat;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational string such as \"3/2\" or an integer")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonRat, E> {
                Ok(JsonRat(Rat::from_integer(Int::from(v))))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonRat, E> {
                Ok(JsonRat(Rat::from_integer(Int::from(v))))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonRat, E> {
                parse_rat(v).map(JsonRat).ok_or_else(|| E::custom(format!("bad rational {v:?}")))
            }
        }
        d.deserialize_any(V)
    }
}

pub fn matrix_to_json(m: &IntMatrix) -> Vec<Vec<JsonInt>> {
    (0..m.rows()).map(|i| m.row(i).iter().cloned().map(JsonInt).collect()).collect()
}

pub fn matrix_from_json(rows: &[Vec<JsonInt>]) -> Option<IntMatrix> {
    let c = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != c) {
        return None;
    }
    let v: Vec<Vec<Int>> = rows.iter().map(|r| r.iter().map(|x| x.0.clone()).collect()).collect();
    Some(IntMatrix::from_rows(&v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_integers_become_strings() {
        let big = JsonInt("123456789012345678901234567890".parse().unwrap());
        let s = serde_json::to_string(&big).unwrap();
        assert_eq!(s, "\"123456789012345678901234567890\"");
        assert_eq!(serde_json::from_str::<JsonInt>(&s).unwrap(), big);
        assert_eq!(serde_json::to_string(&JsonInt(Int::from(-4))).unwrap(), "-4");
    }

    #[test]
    fn rationals_are_strings() {
        let q: JsonRat = serde_json::from_str("\"-3/2\"").unwrap();
        assert_eq!(serde_json::to_string(&q).unwrap(), "\"-3/2\"");
        let n: JsonRat = serde_json::from_str("5").unwrap();
        assert_eq!(serde_json::to_string(&n).unwrap(), "\"5\"");
    }
}
