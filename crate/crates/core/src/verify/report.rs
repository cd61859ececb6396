use std::fmt;

use num_complex::Complex;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::error::Error;
use crate::scalar::Real;

/// A sampled parameter of an identity check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Param {
    Int(i64),
    Real(f64),
    Complex(Complex<f64>),
}

impl From<i64> for Param {
    fn from(v: i64) -> Self {
        Param::Int(v)
    }
}

impl From<usize> for Param {
    fn from(v: usize) -> Self {
        Param::Int(v as i64)
    }
}

impl From<f64> for Param {
    fn from(v: f64) -> Self {
        Param::Real(v)
    }
}

impl From<Complex<f64>> for Param {
    fn from(v: Complex<f64>) -> Self {
        Param::Complex(v)
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Int(v) => write!(f, "{v}"),
            Param::Real(v) => write!(f, "{v}"),
            Param::Complex(v) => write!(f, "{v}"),
        }
    }
}

/// Outcome of checking one identity at one parameter point.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub identity_id: String,
    pub inputs: Vec<(String, Param)>,
    pub lhs: Complex<f64>,
    pub rhs: Complex<f64>,
    pub abs_residual: f64,
    pub rel_residual: f64,
    pub tol: f64,
    pub pass: bool,
    /// Set when one side could not be evaluated; `pass` is then false.
    pub error: Option<String>,
}

pub(crate) fn to_c64<T: Real>(z: Complex<T>) -> Complex<f64> {
    Complex::new(z.re.to_f64_lossy(), z.im.to_f64_lossy())
}

impl IdentityReport {
    pub fn new(id: &str, inputs: Vec<(String, Param)>, lhs: Complex<f64>, rhs: Complex<f64>, tol: f64) -> Self {
        let abs_residual = (lhs - rhs).norm();
        let scale = lhs.norm().max(rhs.norm());
        let rel_residual = if scale > 0.0 { abs_residual / scale } else { abs_residual };
        let pass = abs_residual <= tol || rel_residual <= tol;
        Self {
            identity_id: id.to_string(),
            inputs,
            lhs,
            rhs,
            abs_residual,
            rel_residual,
            tol,
            pass,
            error: None,
        }
    }

    /// Both sides in the generic scalar.
    pub fn from_sides<T: Real>(id: &str, inputs: Vec<(String, Param)>, lhs: Complex<T>, rhs: Complex<T>, tol: f64) -> Self {
        Self::new(id, inputs, to_c64(lhs), to_c64(rhs), tol)
    }

    /// A check that could not be carried out.
    pub fn failed(id: &str, inputs: Vec<(String, Param)>, tol: f64, err: &Error) -> Self {
        let nan = Complex::new(f64::NAN, f64::NAN);
        Self {
            identity_id: id.to_string(),
            inputs,
            lhs: nan,
            rhs: nan,
            abs_residual: f64::NAN,
            rel_residual: f64::NAN,
            tol,
            pass: false,
            error: Some(err.to_string()),
        }
    }

    /// Worst of the two residuals that decides `pass`.
    pub fn residual(&self) -> f64 {
        self.abs_residual.min(self.rel_residual)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Builds an input list from `name => value` pairs.
#[macro_export]
macro_rules! inputs {
    ($($name:literal => $v:expr),* $(,)?) => {
        vec![$(($name.to_string(), $crate::verify::Param::from($v))),*]
    };
}

/// 17 significant digits; non-finite values become `null`.
pub fn json_number(x: f64) -> Box<RawValue> {
    let text = if x.is_finite() { format!("{x:.16e}") } else { "null".to_string() };
    RawValue::from_string(text).expect("valid JSON number")
}

pub struct JsonComplex(pub Complex<f64>);

impl Serialize for JsonComplex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Complex", 2)?;
        st.serialize_field("re", &json_number(self.0.re))?;
        st.serialize_field("im", &json_number(self.0.im))?;
        st.end()
    }
}

struct Inputs<'a>(&'a [(String, Param)]);

impl Serialize for Inputs<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            match *v {
                Param::Int(i) => m.serialize_entry(k, &i)?,
                Param::Real(x) => m.serialize_entry(k, &json_number(x))?,
                Param::Complex(z) => m.serialize_entry(k, &JsonComplex(z))?,
            }
        }
        m.end()
    }
}

impl Serialize for IdentityReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let n = if self.error.is_some() { 9 } else { 8 };
        let mut st = s.serialize_struct("IdentityReport", n)?;
        st.serialize_field("identity_id", &self.identity_id)?;
        st.serialize_field("inputs", &Inputs(&self.inputs))?;
        st.serialize_field("lhs", &JsonComplex(self.lhs))?;
        st.serialize_field("rhs", &JsonComplex(self.rhs))?;
        st.serialize_field("abs_residual", &json_number(self.abs_residual))?;
        st.serialize_field("rel_residual", &json_number(self.rel_residual))?;
        st.serialize_field("tol", &json_number(self.tol))?;
        st.serialize_field("pass", &self.pass)?;
        if let Some(e) = &self.error {
            st.serialize_field("error", e)?;
        }
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_rule() {
        let r = IdentityReport::new("x", vec![], Complex::new(1e6, 0.0), Complex::new(1e6 + 1e-3, 0.0), 1e-8);
        assert!(r.abs_residual > 1e-8 && r.rel_residual <= 1e-8 && r.pass);
        let r = IdentityReport::new("x", vec![], Complex::new(0.0, 0.0), Complex::new(1e-9, 0.0), 1e-8);
        assert!(r.pass);
        let r = IdentityReport::new("x", vec![], Complex::new(1.0, 0.0), Complex::new(1.1, 0.0), 1e-8);
        assert!(!r.pass);
    }

    #[test]
    fn json_layout_is_fixed() {
        let r = IdentityReport::new(
            "psi-shift",
            crate::inputs!["z" => Complex::new(-0.5, 1.0), "k" => 3usize, "q" => 0.25],
            Complex::new(1.0, 0.0),
            Complex::new(1.0, 0.0),
            1e-10,
        );
        let s = r.to_json();
        assert_eq!(
            s,
            "{\"identity_id\":\"psi-shift\",\"inputs\":{\"z\":{\"re\":-5.0000000000000000e-1,\"im\":1.0000000000000000e0},\
             \"k\":3,\"q\":2.5000000000000000e-1},\"lhs\":{\"re\":1.0000000000000000e0,\"im\":0.0000000000000000e0},\
             \"rhs\":{\"re\":1.0000000000000000e0,\"im\":0.0000000000000000e0},\"abs_residual\":0.0000000000000000e0,\
             \"rel_residual\":0.0000000000000000e0,\"tol\":1.0000000000000000e-10,\"pass\":true}"
        );
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["inputs"]["q"].as_f64(), Some(0.25));
    }

    #[test]
    fn failed_report_serializes_nulls() {
        let e = Error::NoConvergence { what: "quadrature", budget: 12 };
        let r = IdentityReport::failed("psi-int-2", vec![], 1e-8, &e);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert!(v["lhs"]["re"].is_null());
        assert_eq!(v["pass"], false);
        assert!(v["error"].as_str().unwrap().contains("quadrature"));
    }
}
