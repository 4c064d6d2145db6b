//! JSON encodings of the crate's types.
//!
//! Scalars serialize per backend: exact rationals as strings ("3/2", "-5"),
//! floats as JSON numbers. Parsers accept numbers, integer strings,
//! fraction strings and plain decimals for both backends. Polynomials are
//! always emitted in canonical (trimmed) form.
//!
//! Schema errors are plain strings; callers (the CLI) distinguish them from
//! domain errors.

use serde_json::{json, Map, Value};

use crate::jets::{JetData, JetSpecEntry, SphericalJet, TaylorJet};
use crate::matrep::MatRep4;
use crate::quat::{Quaternion, Sphere};
use crate::scalar::Scalar;
use crate::starpoly::QPoly;
use crate::zeros::{DivisorEntry, Node, SemiRegularFn, ZeroRecord};

pub type JResult<T> = std::result::Result<T, String>;

pub fn scalar_to_value<S: Scalar>(s: &S) -> Value {
    if S::EXACT {
        Value::String(s.to_string())
    } else {
        json!(s.to_f64())
    }
}

pub fn scalar_from_value<S: Scalar>(v: &Value) -> JResult<S> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(S::from_int(i))
            } else {
                Ok(S::from_f64(n.as_f64().ok_or("non-finite number")?))
            }
        }
        Value::String(t) => S::parse(t).ok_or_else(|| format!("cannot parse scalar {t:?}")),
        _ => Err(format!("expected a scalar, got {v}")),
    }
}

pub fn quat_to_value<S: Scalar>(q: &Quaternion<S>) -> Value {
    Value::Array(vec![
        scalar_to_value(&q.w),
        scalar_to_value(&q.x),
        scalar_to_value(&q.y),
        scalar_to_value(&q.z),
    ])
}

pub fn quat_from_value<S: Scalar>(v: &Value) -> JResult<Quaternion<S>> {
    let arr = v.as_array().ok_or("quaternion must be [w, x, y, z]")?;
    if arr.len() != 4 {
        return Err("quaternion must have exactly 4 components".into());
    }
    Ok(Quaternion::new(
        scalar_from_value(&arr[0])?,
        scalar_from_value(&arr[1])?,
        scalar_from_value(&arr[2])?,
        scalar_from_value(&arr[3])?,
    ))
}

pub fn qpoly_to_value<S: Scalar>(f: &QPoly<S>) -> Value {
    json!({
        "min_degree": f.min_degree(),
        "coeffs": f.coeffs().iter().map(quat_to_value).collect::<Vec<_>>(),
    })
}

pub fn qpoly_from_value<S: Scalar>(v: &Value) -> JResult<QPoly<S>> {
    let obj = v.as_object().ok_or("polynomial must be an object")?;
    let min_degree = obj
        .get("min_degree")
        .map(|m| m.as_i64().ok_or("min_degree must be an integer"))
        .transpose()?
        .unwrap_or(0);
    let coeffs = obj
        .get("coeffs")
        .ok_or("polynomial needs a coeffs array")?
        .as_array()
        .ok_or("coeffs must be an array")?
        .iter()
        .map(quat_from_value)
        .collect::<JResult<Vec<_>>>()?;
    Ok(QPoly::from_terms(min_degree, coeffs))
}

pub fn sphere_to_value<S: Scalar>(s: &Sphere<S>) -> Value {
    let mut m = Map::new();
    m.insert("a".into(), scalar_to_value(&s.center()));
    match s.radius() {
        Some(r) => m.insert("r".into(), scalar_to_value(&r)),
        None => m.insert("r2".into(), scalar_to_value(&s.radius_sq())),
    };
    Value::Object(m)
}

pub fn sphere_from_value<S: Scalar>(v: &Value) -> JResult<Sphere<S>> {
    let obj = v.as_object().ok_or("sphere must be an object")?;
    let a: S = scalar_from_value(obj.get("a").ok_or("sphere needs a center a")?)?;
    if let Some(r) = obj.get("r") {
        Ok(Sphere::from_radius(a, scalar_from_value(r)?))
    } else if let Some(r2) = obj.get("r2") {
        Ok(Sphere::from_radius_sq(a, scalar_from_value(r2)?))
    } else {
        Err("sphere needs r or r2".into())
    }
}

pub fn node_to_value<S: Scalar>(n: &Node<S>) -> Value {
    match n {
        Node::Real(x) => json!({"type": "real", "x": scalar_to_value(x)}),
        Node::Point(q) => json!({"type": "point", "q": quat_to_value(q)}),
        Node::Sphere(s) => {
            let mut m = sphere_to_value(s)
                .as_object()
                .expect("sphere object")
                .clone();
            m.insert("type".into(), json!("sphere"));
            Value::Object(m)
        }
    }
}

pub fn node_from_value<S: Scalar>(v: &Value) -> JResult<Node<S>> {
    let obj = v.as_object().ok_or("node must be an object")?;
    match obj.get("type").and_then(|t| t.as_str()) {
        Some("real") => Ok(Node::Real(scalar_from_value(
            obj.get("x").ok_or("real node needs x")?,
        )?)),
        Some("point") => Ok(Node::Point(quat_from_value(
            obj.get("q").ok_or("point node needs q")?,
        )?)),
        Some("sphere") => Ok(Node::Sphere(sphere_from_value(v)?)),
        other => Err(format!("unknown node type {other:?}")),
    }
}

pub fn divisor_to_value<S: Scalar>(entries: &[DivisorEntry<S>]) -> Value {
    Value::Array(
        entries
            .iter()
            .map(|e| json!({"node": node_to_value(&e.node), "order": e.order}))
            .collect(),
    )
}

pub fn divisor_from_value<S: Scalar>(v: &Value) -> JResult<Vec<DivisorEntry<S>>> {
    v.as_array()
        .ok_or("divisor must be an array of entries")?
        .iter()
        .map(|e| {
            let obj = e.as_object().ok_or("divisor entry must be an object")?;
            Ok(DivisorEntry {
                node: node_from_value(obj.get("node").ok_or("entry needs a node")?)?,
                order: obj
                    .get("order")
                    .and_then(|o| o.as_i64())
                    .ok_or("entry needs an integer order")?,
            })
        })
        .collect()
}

pub fn zero_record_to_value<S: Scalar>(r: &ZeroRecord<S>) -> Value {
    match r {
        ZeroRecord::RealPoint {
            location,
            multiplicity,
        } => json!({
            "kind": "real",
            "location": scalar_to_value(location),
            "multiplicity": multiplicity,
        }),
        ZeroRecord::IsolatedPoint {
            location,
            multiplicity,
        } => json!({
            "kind": "point",
            "location": quat_to_value(location),
            "multiplicity": multiplicity,
        }),
        ZeroRecord::SphericalZero {
            sphere,
            multiplicity,
        } => json!({
            "kind": "sphere",
            "location": sphere_to_value(sphere),
            "multiplicity": multiplicity,
        }),
    }
}

pub fn jet_entry_to_value<S: Scalar>(e: &JetSpecEntry<S>) -> Value {
    let jet = match &e.jet {
        JetData::Taylor(coeffs) => json!({
            "coeffs": coeffs.iter().map(quat_to_value).collect::<Vec<_>>(),
        }),
        JetData::Spherical { anchor, coeffs } => json!({
            "anchor": anchor.as_ref().map(quat_to_value).unwrap_or(Value::Null),
            "coeffs": coeffs.iter().map(quat_to_value).collect::<Vec<_>>(),
        }),
    };
    json!({"node": node_to_value(&e.node), "jet": jet})
}

pub fn jet_spec_from_value<S: Scalar>(v: &Value) -> JResult<Vec<JetSpecEntry<S>>> {
    v.as_array()
        .ok_or("jet spec must be an array of entries")?
        .iter()
        .map(|e| {
            let obj = e.as_object().ok_or("jet entry must be an object")?;
            let node = node_from_value(obj.get("node").ok_or("entry needs a node")?)?;
            let jet_obj = obj
                .get("jet")
                .and_then(|j| j.as_object())
                .ok_or("entry needs a jet object")?;
            let coeffs = jet_obj
                .get("coeffs")
                .and_then(|c| c.as_array())
                .ok_or("jet needs a coeffs array")?
                .iter()
                .map(quat_from_value)
                .collect::<JResult<Vec<_>>>()?;
            let jet = match &node {
                Node::Sphere(_) => JetData::Spherical {
                    anchor: match jet_obj.get("anchor") {
                        None | Some(Value::Null) => None,
                        Some(a) => Some(quat_from_value(a)?),
                    },
                    coeffs,
                },
                _ => JetData::Taylor(coeffs),
            };
            Ok(JetSpecEntry { node, jet })
        })
        .collect()
}

pub fn taylor_jet_to_value<S: Scalar>(j: &TaylorJet<S>) -> Value {
    json!({
        "center": quat_to_value(&j.center),
        "coeffs": j.coeffs.iter().map(quat_to_value).collect::<Vec<_>>(),
    })
}

pub fn spherical_jet_to_value<S: Scalar>(j: &SphericalJet<S>) -> Value {
    json!({
        "sphere": sphere_to_value(&j.sphere),
        "anchor": j.anchor.as_ref().map(quat_to_value).unwrap_or(Value::Null),
        "coeffs": j.coeffs.iter().map(quat_to_value).collect::<Vec<_>>(),
    })
}

pub fn semiregular_to_value<S: Scalar>(f: &SemiRegularFn<S>) -> Value {
    json!({
        "numerator": qpoly_to_value(f.numerator()),
        "denominator": qpoly_to_value(f.denominator()),
    })
}

pub fn semiregular_from_value<S: Scalar>(v: &Value) -> JResult<(QPoly<S>, QPoly<S>)> {
    let obj = v.as_object().ok_or("semiregular must be an object")?;
    Ok((
        qpoly_from_value(obj.get("numerator").ok_or("needs numerator")?)?,
        qpoly_from_value(obj.get("denominator").ok_or("needs denominator")?)?,
    ))
}

pub fn matrep_to_value<S: Scalar>(m: &MatRep4<S>) -> Value {
    Value::Array(
        m.entries()
            .iter()
            .map(|row| Value::Array(row.iter().map(qpoly_to_value).collect()))
            .collect(),
    )
}
