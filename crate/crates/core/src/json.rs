//! Canonical JSON renderings of the value types.
//!
//! Rationals render as exact `"num/den"` strings (plain `"n"` when the
//! denominator is one); nothing is ever converted to floating point. The
//! shapes are part of the CLI/report interface:
//!
//! * rational / integer: `"5"`, `"-1/2"`
//! * quadratic element:  `{"a": "1", "b": "3/8", "d": 8}`
//! * complex:            `{"re": ..., "im": ...}`
//! * Cartan number:      `{"s": ..., "i": ..., "j": ..., "k": ...}`
//! * spinor:             `{"c1": {...}, "c2": {...}}`

use crate::cartan::CartanNumber;
use crate::exact::{Coeff, ComplexQuad, ComplexRational, QuadElem, Rational};
use crate::spinor::Spinor;
use num_bigint::BigInt;
use serde_json::{json, Value};

pub trait ToJson {
    fn to_json(&self) -> Value;
}

impl ToJson for Rational {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl ToJson for BigInt {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl ToJson for QuadElem {
    fn to_json(&self) -> Value {
        json!({
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "d": self.d,
        })
    }
}

impl ToJson for ComplexRational {
    fn to_json(&self) -> Value {
        json!({
            "re": self.re.to_json(),
            "im": self.im.to_json(),
        })
    }
}

impl ToJson for ComplexQuad {
    fn to_json(&self) -> Value {
        json!({
            "re": self.re.to_json(),
            "im": self.im.to_json(),
        })
    }
}

impl<R: Coeff + ToJson> ToJson for CartanNumber<R> {
    fn to_json(&self) -> Value {
        json!({
            "s": self.s.to_json(),
            "i": self.ci.to_json(),
            "j": self.cj.to_json(),
            "k": self.ck.to_json(),
        })
    }
}

impl<C: crate::exact::ComplexCoeff + ToJson> ToJson for Spinor<C> {
    fn to_json(&self) -> Value {
        json!({
            "c1": self.c1.to_json(),
            "c2": self.c2.to_json(),
        })
    }
}

/// Compact single-line rendering, used for markdown table cells.
pub fn compact<T: ToJson>(value: &T) -> String {
    match value.to_json() {
        Value::String(s) => s,
        other => other.to_string(),
    }
}
