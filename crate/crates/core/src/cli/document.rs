//! JSON tree documents.
//!
//! ```json
//! {"base": "S2", "slopes": ["1/3"],
//!  "daughters": [{"interval": {"kind": "bracket", "left": "-1/3", "right": "0"}},
//!                {"gluing": [[1, 1], [0, 1]], "manifold": {"base": "S2", ...}}]}
//! ```
//!
//! Gluing matrices act on column vectors `(r, s)`, from daughter slopes to
//! parent slopes.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::graph::{Daughter, TreeManifold};
use crate::intervals::{GluingMatrix, LInterval};
use crate::rationals::ExtRat;
use crate::seifert::{Base, SeifertData};

fn err(path: &str, message: impl Into<String>) -> Error {
    Error::Document {
        path: if path.is_empty() {
            "document".to_string()
        } else {
            path.to_string()
        },
        message: message.into(),
    }
}

fn join(path: &str, field: &str) -> String {
    if path.is_empty() {
        field.to_string()
    } else {
        format!("{path}.{field}")
    }
}

fn object<'a>(v: &'a Value, path: &str, allowed: &[&str]) -> Result<&'a Map<String, Value>> {
    let obj = v
        .as_object()
        .ok_or_else(|| err(path, "expected an object"))?;
    if let Some(k) = obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(err(&join(path, k), "unknown field"));
    }
    Ok(obj)
}

fn field<'a>(obj: &'a Map<String, Value>, path: &str, name: &str) -> Result<&'a Value> {
    obj.get(name)
        .ok_or_else(|| err(&join(path, name), "missing field"))
}

fn slope(v: &Value, path: &str) -> Result<ExtRat> {
    let s = v
        .as_str()
        .ok_or_else(|| err(path, "expected a slope string such as \"-2/5\" or \"inf\""))?;
    s.parse().map_err(|e: Error| err(path, e.to_string()))
}

fn interval(v: &Value, path: &str) -> Result<LInterval> {
    let obj = object(v, path, &["kind", "value", "left", "right"])?;
    let kind = field(obj, path, "kind")?
        .as_str()
        .ok_or_else(|| err(&join(path, "kind"), "expected a string"))?;
    let only = |names: &[&str]| -> Result<()> {
        match obj
            .keys()
            .find(|k| *k != "kind" && !names.contains(&k.as_str()))
        {
            Some(k) => Err(err(
                &join(path, k),
                format!("not allowed for kind {kind:?}"),
            )),
            None => Ok(()),
        }
    };
    match kind {
        "empty" => {
            only(&[])?;
            Ok(LInterval::Empty)
        }
        "point" => {
            only(&["value"])?;
            let p = join(path, "value");
            Ok(LInterval::Point(slope(field(obj, path, "value")?, &p)?))
        }
        "bracket" => {
            only(&["left", "right"])?;
            let left = slope(field(obj, path, "left")?, &join(path, "left"))?;
            let right = slope(field(obj, path, "right")?, &join(path, "right"))?;
            Ok(LInterval::Bracket(left, right))
        }
        other => Err(err(
            &join(path, "kind"),
            format!("expected \"empty\", \"point\" or \"bracket\", got {other:?}"),
        )),
    }
}

fn matrix(v: &Value, path: &str) -> Result<GluingMatrix> {
    let shape = || err(path, "expected [[a, b], [c, d]] with integer entries");
    let rows = v.as_array().filter(|r| r.len() == 2).ok_or_else(shape)?;
    let mut e = [0i64; 4];
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_array().filter(|r| r.len() == 2).ok_or_else(shape)?;
        for (j, x) in row.iter().enumerate() {
            e[2 * i + j] = x.as_i64().ok_or_else(shape)?;
        }
    }
    GluingMatrix::from_i64(e[0], e[1], e[2], e[3]).map_err(|_| err(path, "determinant ±1 required"))
}

fn node(v: &Value, path: &str) -> Result<TreeManifold> {
    let obj = object(v, path, &["base", "slopes", "daughters"])?;
    let base = match field(obj, path, "base")?.as_str() {
        Some("S2") => Base::Orientable,
        Some("RP2") => Base::NonOrientable,
        _ => return Err(err(&join(path, "base"), "expected \"S2\" or \"RP2\"")),
    };
    let slopes_path = join(path, "slopes");
    let slopes = field(obj, path, "slopes")?
        .as_array()
        .ok_or_else(|| err(&slopes_path, "expected an array of slope strings"))?
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let p = format!("{slopes_path}[{i}]");
            let y = slope(s, &p)?;
            if y.is_infinite() {
                return Err(err(
                    &p,
                    "Seifert slope inf is not allowed: the filled manifold would not be prime",
                ));
            }
            Ok(y)
        })
        .collect::<Result<Vec<_>>>()?;
    let seifert = SeifertData::new(base, &slopes)?;

    let daughters_path = join(path, "daughters");
    let daughters = match obj.get("daughters") {
        None => vec![],
        Some(d) => d
            .as_array()
            .ok_or_else(|| err(&daughters_path, "expected an array"))?
            .iter()
            .enumerate()
            .map(|(i, d)| daughter(d, &format!("{daughters_path}[{i}]")))
            .collect::<Result<Vec<_>>>()?,
    };
    TreeManifold::new(seifert, daughters).map_err(|e| match e {
        Error::SolidTorusDaughter { index } => err(
            &format!("{daughters_path}[{index}].manifold"),
            "this subtree is a solid torus; absorb it into the parent's slopes as the image of its longitude",
        ),
        other => other,
    })
}

fn daughter(v: &Value, path: &str) -> Result<Daughter> {
    let obj = object(v, path, &["interval", "gluing", "manifold"])?;
    match (obj.get("interval"), obj.get("gluing"), obj.get("manifold")) {
        (Some(i), None, None) => Ok(Daughter::LeafInterval(interval(
            i,
            &join(path, "interval"),
        )?)),
        (None, Some(g), Some(m)) => Ok(Daughter::Subtree {
            gluing: matrix(g, &join(path, "gluing"))?,
            manifold: Box::new(node(m, &join(path, "manifold"))?),
        }),
        _ => Err(err(
            path,
            "expected either {\"interval\": ...} or {\"gluing\": ..., \"manifold\": ...}",
        )),
    }
}

pub fn parse_tree(text: &str) -> Result<TreeManifold> {
    let v: Value = serde_json::from_str(text).map_err(|e| err("", format!("invalid JSON: {e}")))?;
    node(&v, "")
}

pub fn render_interval(i: &LInterval) -> Value {
    match i {
        LInterval::Empty => json!({"kind": "empty"}),
        LInterval::Point(v) => json!({"kind": "point", "value": v.to_string()}),
        LInterval::Bracket(a, b) => {
            json!({"kind": "bracket", "left": a.to_string(), "right": b.to_string()})
        }
    }
}

pub fn render_matrix(m: &GluingMatrix) -> Value {
    let e = m.entries();
    let n = |x: &num_bigint::BigInt| -> Value {
        use num_traits::ToPrimitive;
        match x.to_i64() {
            Some(v) => json!(v),
            None => json!(x.to_string()),
        }
    };
    json!([[n(&e[0][0]), n(&e[0][1])], [n(&e[1][0]), n(&e[1][1])]])
}

pub fn render_tree(y: &TreeManifold) -> Value {
    let daughters: Vec<Value> = y
        .daughters()
        .iter()
        .map(|d| match d {
            Daughter::LeafInterval(i) => json!({"interval": render_interval(i)}),
            Daughter::Subtree { gluing, manifold } => {
                json!({"gluing": render_matrix(gluing), "manifold": render_tree(manifold)})
            }
        })
        .collect();
    json!({
        "base": y.seifert.base.to_string(),
        "slopes": y.seifert.slopes_ext().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "daughters": daughters,
    })
}
