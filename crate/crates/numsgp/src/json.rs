//! Canonical JSON: sorted keys, compact, integers above 2^53 as decimal strings.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{Map, Value};

/// Largest magnitude written as a JSON number.
pub const SAFE_INTEGER: i64 = 1 << 53;

pub fn int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) if (-SAFE_INTEGER..=SAFE_INTEGER).contains(&v) => Value::from(v),
        _ => Value::String(x.to_string()),
    }
}

pub fn ints(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(int).collect())
}

pub fn u64s(xs: &[u64]) -> Value {
    Value::Array(xs.iter().map(|&x| int(&BigInt::from(x))).collect())
}

/// Object from key/value pairs; keys come out sorted.
pub fn object<I, K>(pairs: I) -> Value
where
    I: IntoIterator<Item = (K, Value)>,
    K: Into<String>,
{
    Value::Object(
        pairs
            .into_iter()
            .map(|(k, v)| (k.into(), v))
            .collect::<Map<_, _>>(),
    )
}

pub fn to_string(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON values always serialize")
}
