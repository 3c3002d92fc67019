//! JSON helpers for exact integers: numbers when they fit in `i64`,
//! decimal strings otherwise.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::Value;

use crate::error::{Error, Result};

pub fn int(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(x) => Value::from(x),
        None => Value::from(c.to_string()),
    }
}

pub fn parse_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| Error::Json(format!("{n} is not an integer"))),
        Value::String(s) => s.parse().map_err(|_| Error::Json(format!("{s:?} is not an integer"))),
        other => Err(Error::Json(format!("{other} is not an integer"))),
    }
}
