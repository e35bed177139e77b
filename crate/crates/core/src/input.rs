//! JSON literals for the objects the command line reads and prints.
//!
//! partition `[3,1]`; skew shape `{"outer":[3,1],"inner":[1]}` or a bare
//! partition; colored tuple `{"shapes":[...],"colors":[...]}` or a bare array
//! of shapes (all colored 1); multigraph `{"n":3,"edges":[[1,2],[2,2]]}`;
//! LLT graph `{"vertices":[...],"e1":[[u,v]],"e2":[...],"ed":[...],
//! "colors":{"label":color}}` with edges given by labels; parking function
//! `[1,1,2]`; lollipop `{"m":5,"n":2,"k":2}`.

use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graphpoly::Multigraph;
use crate::lltgraphs::LLTGraph;
use crate::shapes::{ColoredTuple, Partition, SkewShape};
use crate::special::ParkingFunction;

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    let mut off = 0;
    for (i, l) in text.split('\n').enumerate() {
        if i + 1 == line {
            return off + column.saturating_sub(1);
        }
        off += l.len() + 1;
    }
    text.len()
}

/// Parses JSON text, reporting the byte offset of a syntax error.
pub fn parse_value(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        pos: byte_offset(text, e.line(), e.column()),
        msg: e.to_string(),
    })
}

fn bad(what: &str, v: &Value) -> Error {
    Error::InvalidInput(format!("expected {what}, found {v}"))
}

fn from_value<T: for<'de> Deserialize<'de>>(what: &str, v: &Value) -> Result<T> {
    T::deserialize(v).map_err(|_| bad(what, v))
}

pub fn partition_from(v: &Value) -> Result<Partition> {
    Partition::new(from_value("a partition", v)?)
}

pub fn partitions_from(v: &Value) -> Result<Vec<Partition>> {
    let items = v.as_array().ok_or_else(|| bad("an array of partitions", v))?;
    items.iter().map(partition_from).collect()
}

pub fn shape_from(v: &Value) -> Result<SkewShape> {
    match v {
        Value::Array(_) => Ok(SkewShape::straight(partition_from(v)?)),
        Value::Object(m) => {
            let outer = partition_from(m.get("outer").ok_or_else(|| bad("\"outer\"", v))?)?;
            let inner = match m.get("inner") {
                Some(i) => partition_from(i)?,
                None => Partition::empty(),
            };
            SkewShape::new(outer, inner)
        }
        _ => Err(bad("a skew shape", v)),
    }
}

pub fn tuple_from(v: &Value) -> Result<ColoredTuple> {
    match v {
        Value::Array(items) => Ok(ColoredTuple::uncolored(items.iter().map(shape_from).collect::<Result<_>>()?)),
        Value::Object(m) => {
            let shapes_v = m.get("shapes").ok_or_else(|| bad("\"shapes\"", v))?;
            let shapes: Vec<SkewShape> = shapes_v
                .as_array()
                .ok_or_else(|| bad("an array of shapes", shapes_v))?
                .iter()
                .map(shape_from)
                .collect::<Result<_>>()?;
            match m.get("colors") {
                Some(c) => ColoredTuple::new(shapes, from_value("an array of colors", c)?),
                None => Ok(ColoredTuple::uncolored(shapes)),
            }
        }
        _ => Err(bad("a colored tuple", v)),
    }
}

pub fn multigraph_from(v: &Value) -> Result<Multigraph> {
    #[derive(Deserialize)]
    struct Raw {
        n: usize,
        #[serde(default)]
        edges: Vec<(usize, usize)>,
    }
    let raw: Raw = from_value("a multigraph {\"n\", \"edges\"}", v)?;
    Multigraph::new(raw.n, &raw.edges)
}

pub fn graph_from(v: &Value) -> Result<LLTGraph> {
    #[derive(Deserialize)]
    struct Raw {
        vertices: Vec<i64>,
        #[serde(default)]
        e1: Vec<(i64, i64)>,
        #[serde(default)]
        e2: Vec<(i64, i64)>,
        #[serde(default)]
        ed: Vec<(i64, i64)>,
        colors: Option<BTreeMap<String, usize>>,
    }
    let raw: Raw = from_value("an LLT graph", v)?;
    let mut sorted = raw.vertices.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidInput("repeated vertex label".into()));
    }
    let index = |l: i64| {
        raw.vertices
            .iter()
            .position(|&x| x == l)
            .ok_or_else(|| Error::InvalidInput(format!("edge endpoint {l} is not a vertex")))
    };
    let edges = |es: &[(i64, i64)]| -> Result<Vec<(usize, usize)>> {
        es.iter().map(|&(a, b)| Ok((index(a)?, index(b)?))).collect()
    };
    let colors = match raw.colors {
        None => None,
        Some(map) => {
            let mut c = vec![0; raw.vertices.len()];
            for (k, col) in map {
                let label: i64 = k.parse().map_err(|_| Error::InvalidInput(format!("color key {k:?}")))?;
                c[index(label)?] = col;
            }
            if c.contains(&0) {
                return Err(Error::InvalidInput("every vertex needs a positive color".into()));
            }
            Some(c)
        }
    };
    LLTGraph::new(raw.vertices.clone(), edges(&raw.e1)?, edges(&raw.e2)?, edges(&raw.ed)?, colors)
}

pub fn parking_from(v: &Value) -> Result<ParkingFunction> {
    ParkingFunction::new(from_value("an array of values", v)?)
}

/// `(m, n, k)` of a melting lollipop.
pub fn lollipop_from(v: &Value) -> Result<(usize, usize, usize)> {
    #[derive(Deserialize)]
    struct Raw {
        m: usize,
        n: usize,
        k: usize,
    }
    let raw: Raw = from_value("a lollipop {\"m\", \"n\", \"k\"}", v)?;
    Ok((raw.m, raw.n, raw.k))
}

fn shape_json(s: &SkewShape) -> Value {
    if s.inner.is_empty() {
        json!(s.outer)
    } else {
        json!({"outer": s.outer, "inner": s.inner})
    }
}

pub fn tuple_json(t: &ColoredTuple) -> Value {
    let shapes: Vec<Value> = t.shapes().iter().map(shape_json).collect();
    json!({"shapes": shapes, "colors": t.colors()})
}

pub fn multigraph_json(g: &Multigraph) -> Value {
    json!({"n": g.num_vertices(), "edges": g.edges()})
}

pub fn graph_json(g: &LLTGraph) -> Value {
    let by_label = |es: &[(usize, usize)]| -> Vec<(i64, i64)> {
        es.iter().map(|&(a, b)| (g.labels[a], g.labels[b])).collect()
    };
    let colors: serde_json::Map<String, Value> =
        g.labels.iter().zip(&g.colors).map(|(l, c)| (l.to_string(), json!(c))).collect();
    json!({
        "vertices": g.labels,
        "e1": by_label(&g.e1),
        "e2": by_label(&g.e2),
        "ed": by_label(&g.ed),
        "colors": colors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_round_trip() {
        let text = r#"{"shapes":[{"outer":[2,2],"inner":[1]},[2],[1,1]],"colors":[1,2,1]}"#;
        let t = tuple_from(&parse_value(text).unwrap()).unwrap();
        assert_eq!(t.size(), 7);
        assert_eq!(tuple_json(&t), parse_value(text).unwrap());
    }

    #[test]
    fn graph_round_trip() {
        let text = r#"{"vertices":[0,1,2],"e1":[[1,0]],"ed":[[0,2]],"colors":{"0":1,"1":1,"2":2}}"#;
        let g = graph_from(&parse_value(text).unwrap()).unwrap();
        assert_eq!(g.num_colors(), 2);
        assert_eq!(graph_from(&graph_json(&g)).unwrap(), g);
    }

    #[test]
    fn parse_position() {
        let err = parse_value("[1, 2,, 3]").unwrap_err();
        assert!(matches!(err, Error::Parse { pos: 6, .. }), "{err:?}");
    }

    #[test]
    fn multigraph_literal() {
        let g = multigraph_from(&parse_value(r#"{"n":3,"edges":[[1,2],[2,3],[1,3],[2,2]]}"#).unwrap()).unwrap();
        assert_eq!(g.num_edges(), 4);
        assert_eq!(g.loops(), 1);
        assert!(multigraph_from(&json!({"n": 2, "edges": [[1, 3]]})).is_err());
    }
}
