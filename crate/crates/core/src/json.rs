//! Canonical JSON for the library's value types.
//!
//! Object keys come out sorted (serde_json's default map is ordered), terms are
//! listed by ascending mask and every rational is printed as `p/q` in lowest
//! terms, so equal values serialize to identical bytes.
//!
//! A term mask is the binary expansion of the monomial bitmask, padded to `q`
//! digits: the rightmost digit is `ξ1`. With [`Mode::Expr`] every supernumber
//! or scalar is a string in the expression syntax instead of an object.

use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::expr::parse_expr;
use crate::geometry::{scalars, Bivector, Plane, PluckerPoint};
use crate::grassmann::{GrassmannAlgebra, SuperNumber};
use crate::matrix::Mat;
use crate::scalar::{parse_rational, rational_to_string, GaussianRational};
use crate::superflag::{BigCellPoint, SuperPoincareElement};
use crate::supermatrix::{BlockShape, MatrixParity, SuperMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Json,
    Expr,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Json(msg.into())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(format!("missing key {key:?}")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(format!("{what} must be an array")))
}

fn as_str<'a>(v: &'a Value, what: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| bad(format!("{what} must be a string")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| bad(format!("{what} must be a non-negative integer")))
}

pub fn scalar_to_json(c: &GaussianRational) -> Value {
    json!({ "re": rational_to_string(&c.re()), "im": rational_to_string(&c.im()) })
}

pub fn scalar_from_json(v: &Value) -> Result<GaussianRational> {
    let re = parse_rational(as_str(field(v, "re")?, "re")?)?;
    let im = parse_rational(as_str(field(v, "im")?, "im")?)?;
    Ok(GaussianRational::new(re, im))
}

pub fn supernumber_to_json(x: &SuperNumber) -> Value {
    let q = x.algebra().num_generators();
    let terms: Vec<Value> = x
        .terms()
        .map(|(mask, c)| {
            let mut t = scalar_to_json(c);
            t["mask"] = Value::String(format!("{mask:0q$b}"));
            t
        })
        .collect();
    json!({ "q": q, "pairing": x.algebra().pairing(), "terms": terms })
}

pub fn supernumber_from_json(v: &Value) -> Result<SuperNumber> {
    let q = as_usize(field(v, "q")?, "q")?;
    let pairing = as_array(field(v, "pairing")?, "pairing")?
        .iter()
        .map(|p| as_usize(p, "pairing entry"))
        .collect::<Result<Vec<_>>>()?;
    let alg = GrassmannAlgebra::new(q, &pairing)?;
    let mut terms = Vec::new();
    let mut last = None;
    for t in as_array(field(v, "terms")?, "terms")? {
        let bits = as_str(field(t, "mask")?, "mask")?;
        if bits.len() != q.max(1) {
            return Err(bad(format!("mask {bits:?} must have {} digits", q.max(1))));
        }
        let mask = u64::from_str_radix(bits, 2).map_err(|_| bad(format!("malformed mask {bits:?}")))?;
        if last.is_some_and(|l| l >= mask) {
            return Err(bad("terms must be listed by strictly ascending mask"));
        }
        last = Some(mask);
        terms.push((mask, scalar_from_json(t)?));
    }
    SuperNumber::from_terms(&alg, terms)
}

/// Default algebra for `q` generators: `ξ_i ↔ ξ_{i+k}` on the first `2k`, the
/// last generator self-conjugate when `q` is odd.
pub fn algebra_for_q(q: usize) -> Result<Arc<GrassmannAlgebra>> {
    let base = GrassmannAlgebra::paired(q / 2);
    if q % 2 == 1 {
        base.extended(1)
    } else {
        Ok(base)
    }
}

/// Reads and writes values in one input mode. `alg` is the algebra used for
/// expression strings; JSON objects carry their own.
#[derive(Clone, Debug)]
pub struct Codec {
    pub mode: Mode,
    pub alg: Arc<GrassmannAlgebra>,
}

impl Codec {
    pub fn new(mode: Mode, alg: Arc<GrassmannAlgebra>) -> Self {
        Self { mode, alg }
    }

    pub fn encode_number(&self, x: &SuperNumber) -> Value {
        match self.mode {
            Mode::Json => supernumber_to_json(x),
            Mode::Expr => Value::String(x.to_string()),
        }
    }

    pub fn decode_number(&self, v: &Value) -> Result<SuperNumber> {
        match (self.mode, v) {
            (Mode::Expr, Value::String(s)) => parse_expr(s, &self.alg),
            (Mode::Expr, _) => Err(bad("expression mode expects strings")),
            (Mode::Json, _) => supernumber_from_json(v),
        }
    }

    pub fn encode_scalar(&self, c: &GaussianRational) -> Value {
        match self.mode {
            Mode::Json => scalar_to_json(c),
            Mode::Expr => Value::String(c.to_string()),
        }
    }

    pub fn decode_scalar(&self, v: &Value) -> Result<GaussianRational> {
        match (self.mode, v) {
            (Mode::Expr, Value::String(s)) => {
                let x = parse_expr(s, &scalars())?;
                Ok(x.body())
            }
            (Mode::Expr, _) => Err(bad("expression mode expects strings")),
            (Mode::Json, _) => scalar_from_json(v),
        }
    }

    pub fn encode_mat(&self, m: &Mat) -> Value {
        Value::Array(
            (0..m.rows())
                .map(|i| Value::Array((0..m.cols()).map(|j| self.encode_number(m.get(i, j))).collect()))
                .collect(),
        )
    }

    pub fn decode_mat(&self, v: &Value) -> Result<Mat> {
        let rows = as_array(v, "matrix")?
            .iter()
            .map(|r| as_array(r, "matrix row")?.iter().map(|x| self.decode_number(x)).collect())
            .collect::<Result<Vec<Vec<SuperNumber>>>>()?;
        let alg = rows
            .iter()
            .flatten()
            .next()
            .map_or_else(|| self.alg.clone(), |x| x.algebra().clone());
        Mat::from_rows(&alg, rows)
    }

    /// Matrix whose entries are plain scalars, in the scalar algebra `q = 0`.
    pub fn encode_scalar_mat(&self, m: &Mat) -> Value {
        Value::Array(
            (0..m.rows())
                .map(|i| Value::Array((0..m.cols()).map(|j| self.encode_scalar(&m.get(i, j).body())).collect()))
                .collect(),
        )
    }

    pub fn decode_scalar_mat(&self, v: &Value) -> Result<Mat> {
        let rows = as_array(v, "matrix")?
            .iter()
            .map(|r| as_array(r, "matrix row")?.iter().map(|x| self.decode_scalar(x)).collect())
            .collect::<Result<Vec<Vec<GaussianRational>>>>()?;
        Mat::from_scalars(&scalars(), &rows)
    }

    pub fn encode_supermatrix(&self, m: &SuperMatrix) -> Value {
        json!({
            "m": m.shape().m,
            "n": m.shape().n,
            "parity": m.parity().as_str(),
            "entries": self.encode_mat(m.as_mat()),
        })
    }

    pub fn decode_supermatrix(&self, v: &Value) -> Result<SuperMatrix> {
        let shape = BlockShape::new(as_usize(field(v, "m")?, "m")?, as_usize(field(v, "n")?, "n")?)?;
        let parity = MatrixParity::parse(as_str(field(v, "parity")?, "parity")?)?;
        let mat = self.decode_mat(field(v, "entries")?)?;
        SuperMatrix::new(shape, mat, parity)
    }

    pub fn encode_plane(&self, p: &Plane) -> Value {
        json!({ "basis": self.encode_scalar_mat(p.basis()) })
    }

    pub fn decode_plane(&self, v: &Value) -> Result<Plane> {
        Plane::new(self.decode_scalar_mat(field(v, "basis")?)?)
    }

    pub fn encode_bivector(&self, y: &Bivector) -> Value {
        json!({ "y": y.y.iter().map(|c| self.encode_scalar(c)).collect::<Vec<_>>() })
    }

    /// Six coordinates `(y12, y23, y31, y14, y24, y34)`, not checked against the quadric.
    pub fn decode_bivector(&self, v: &Value) -> Result<Bivector> {
        let ys = as_array(field(v, "y")?, "y")?;
        if ys.len() != 6 {
            return Err(bad("y must have six coordinates"));
        }
        let cs = ys.iter().map(|c| self.decode_scalar(c)).collect::<Result<Vec<_>>>()?;
        Ok(Bivector::new(cs.try_into().expect("length checked")))
    }

    pub fn encode_plucker(&self, y: &PluckerPoint) -> Value {
        self.encode_bivector(y.bivector())
    }

    pub fn decode_plucker(&self, v: &Value) -> Result<PluckerPoint> {
        PluckerPoint::new(self.decode_bivector(v)?.y)
    }

    pub fn encode_point(&self, pt: &BigCellPoint) -> Value {
        json!({
            "A": self.encode_mat(&pt.a),
            "alpha": self.encode_mat(&pt.alpha),
            "beta": self.encode_mat(&pt.beta),
        })
    }

    pub fn decode_point(&self, v: &Value) -> Result<BigCellPoint> {
        BigCellPoint::new(
            self.decode_mat(field(v, "A")?)?,
            self.decode_mat(field(v, "alpha")?)?,
            self.decode_mat(field(v, "beta")?)?,
        )
    }

    pub fn encode_superpoincare(&self, p: &SuperPoincareElement) -> Value {
        json!({
            "L": self.encode_mat(&p.l),
            "R": self.encode_mat(&p.r),
            "N": self.encode_mat(&p.n),
            "chi": self.encode_mat(&p.chi),
            "varphi": self.encode_mat(&p.varphi),
            "d": self.encode_number(&p.d),
        })
    }

    pub fn decode_superpoincare(&self, v: &Value) -> Result<SuperPoincareElement> {
        SuperPoincareElement::new(
            self.decode_mat(field(v, "L")?)?,
            self.decode_mat(field(v, "R")?)?,
            self.decode_mat(field(v, "N")?)?,
            self.decode_mat(field(v, "chi")?)?,
            self.decode_mat(field(v, "varphi")?)?,
            self.decode_number(field(v, "d")?)?,
        )
    }
}

/// Pretty-printed, key-sorted rendering.
pub fn to_canonical_string(v: &Value) -> String {
    fn sort(v: &Value) -> Value {
        match v {
            Value::Object(m) => {
                let mut keys: Vec<&String> = m.keys().collect();
                keys.sort();
                let mut out = Map::new();
                for k in keys {
                    out.insert(k.clone(), sort(&m[k]));
                }
                Value::Object(out)
            }
            Value::Array(a) => Value::Array(a.iter().map(sort).collect()),
            other => other.clone(),
        }
    }
    serde_json::to_string_pretty(&sort(v)).expect("values always serialize")
}

pub fn parse_value(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| bad(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn supernumber_layout() {
        let alg = GrassmannAlgebra::default_working();
        let x = parse_expr("1/2 - 3i*x1*x3", &alg).unwrap();
        let v = supernumber_to_json(&x);
        assert_eq!(v["q"], 8);
        assert_eq!(v["pairing"], json!([5, 6, 7, 8, 1, 2, 3, 4]));
        assert_eq!(v["terms"][0]["mask"], "00000000");
        assert_eq!(v["terms"][0]["re"], "1/2");
        assert_eq!(v["terms"][1]["mask"], "00000101");
        assert_eq!(v["terms"][1]["im"], "-3/1");
        assert_eq!(supernumber_from_json(&v).unwrap(), x);
    }

    #[test]
    fn rejects_noncanonical_terms() {
        let v = json!({"q": 1, "pairing": [1], "terms": [
            {"mask": "1", "re": "1/1", "im": "0/1"},
            {"mask": "0", "re": "1/1", "im": "0/1"}]});
        assert!(supernumber_from_json(&v).is_err());
        let v = json!({"q": 2, "pairing": [1, 2], "terms": [{"mask": "1", "re": "1", "im": "0"}]});
        assert!(supernumber_from_json(&v).is_err());
    }

    #[test]
    fn zero_generators() {
        let alg = GrassmannAlgebra::real(0);
        let x = SuperNumber::from_int(&alg, -4);
        let v = supernumber_to_json(&x);
        assert_eq!(supernumber_from_json(&v).unwrap(), x);
    }

    #[test]
    fn canonical_string_sorts_keys() {
        let v = json!({"b": 1, "a": {"z": 0, "c": [ {"y": 1, "x": 2} ]}});
        let s = to_canonical_string(&v);
        assert!(s.find("\"a\"").unwrap() < s.find("\"b\"").unwrap());
        assert!(s.find("\"x\"").unwrap() < s.find("\"y\"").unwrap());
    }
}
