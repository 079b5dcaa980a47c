//! Reading and writing posets, graphs, trees and functions.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::instances::Graph;
use crate::poset::Poset;
use crate::tree::RootedTree;

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    }
}

#[derive(Serialize, Deserialize)]
struct PosetFile {
    elements: Vec<String>,
    covers: Vec<(String, String)>,
}

/// Parses `{"elements": [...], "covers": [["a","b"], ...]}`.
///
/// Pairs that are not covers are accepted; the order is their closure.
pub fn read_poset(text: &str) -> Result<Poset> {
    let f: PosetFile = serde_json::from_str(text).map_err(json_error)?;
    Poset::from_covers(&f.elements, &f.covers)
}

/// Writes the poset with its transitive reduction as `covers`.
pub fn poset_to_json(p: &Poset) -> Value {
    let f = PosetFile {
        elements: p.labels().to_vec(),
        covers: p
            .covers()
            .iter()
            .map(|&(a, b)| (p.label(a).to_string(), p.label(b).to_string()))
            .collect(),
    };
    serde_json::to_value(f).expect("plain data")
}

/// Parses an edge list: one `u v` pair per line, 0-indexed. Blank lines
/// and `#` comments are skipped, except that a first comment of the form
/// `# n` fixes the vertex count; otherwise it is one more than the largest
/// vertex seen.
pub fn read_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen_data = false;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            if !seen_data && n.is_none() {
                n = rest.trim().parse().ok();
            }
            continue;
        }
        seen_data = true;
        let mut fields = Vec::new();
        let mut col = 0;
        for tok in raw.split_whitespace() {
            let at = raw[col..].find(tok).unwrap() + col;
            col = at + tok.len();
            let v: usize = tok.parse().map_err(|_| Error::Parse {
                line: i + 1,
                column: at + 1,
                msg: format!("expected a vertex number, found `{tok}`"),
            })?;
            fields.push(v);
        }
        if fields.len() != 2 {
            return Err(Error::Parse {
                line: i + 1,
                column: 1,
                msg: format!("expected two vertices, found {}", fields.len()),
            });
        }
        edges.push((fields[0], fields[1]));
    }
    let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::new(n, &edges)
}

#[derive(Deserialize)]
struct TreeFile {
    n: usize,
    root: usize,
    parent: Vec<Value>,
}

/// Parses `{"n": n, "root": r, "parent": [...]}`; the root's parent is
/// `null` or `-1`.
pub fn read_tree(text: &str) -> Result<RootedTree> {
    let f: TreeFile = serde_json::from_str(text).map_err(json_error)?;
    if f.parent.len() != f.n {
        return Err(Error::Precondition(format!(
            "parent array has {} entries, expected {}",
            f.parent.len(),
            f.n
        )));
    }
    let mut parent = Vec::with_capacity(f.n);
    for (v, p) in f.parent.iter().enumerate() {
        let p =
            match p {
                Value::Null => None,
                Value::Number(k) if k.as_i64() == Some(-1) => None,
                Value::Number(k) => Some(k.as_u64().ok_or_else(|| {
                    Error::Precondition(format!("bad parent entry for vertex {v}"))
                })? as usize),
                _ => {
                    return Err(Error::Precondition(format!(
                        "bad parent entry for vertex {v}"
                    )))
                }
            };
        parent.push(p);
    }
    let t = RootedTree::new(parent)?;
    if t.root() != f.root {
        return Err(Error::Precondition(format!(
            "declared root {} but vertex {} has no parent",
            f.root,
            t.root()
        )));
    }
    Ok(t)
}

pub fn tree_to_json(t: &RootedTree) -> Value {
    serde_json::json!({
        "n": t.len(),
        "root": t.root(),
        "parent": t.parents(),
    })
}

/// Parses a `{"label": value, ...}` map into one value per element;
/// absent labels get 0. Values are JSON integers or decimal strings.
pub fn read_function(p: &Poset, text: &str) -> Result<Vec<BigInt>> {
    let map: serde_json::Map<String, Value> = serde_json::from_str(text).map_err(json_error)?;
    let mut f = vec![BigInt::from(0); p.len()];
    for (k, v) in map {
        let i = p.index_of(&k)?;
        f[i] = match &v {
            Value::Number(x) => x
                .as_i64()
                .map(BigInt::from)
                .ok_or_else(|| Error::Precondition(format!("value for `{k}` is not an integer")))?,
            Value::String(s) => s
                .parse()
                .map_err(|_| Error::Precondition(format!("value for `{k}` is not an integer")))?,
            _ => {
                return Err(Error::Precondition(format!(
                    "value for `{k}` is not an integer"
                )))
            }
        };
    }
    Ok(f)
}
