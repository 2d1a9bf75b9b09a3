//! Named constructions: single edges, paths, stars, the separating tree
//! family and the three-pairs hypergraph.
//!
//! Builtin names use the shorthand `edge:k`, `path:n`, `star:k`,
//! `tree-family:d` and `three-pairs`.

use crate::hypergraph::Hypergraph;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown builtin `{0}`")]
    Unknown(String),
    #[error("builtin `{name}` needs {what}")]
    BadParameter { name: String, what: &'static str },
}

type Edges = Vec<(String, Vec<String>)>;

fn build(boundary: Vec<String>, interior: Vec<String>, edges: Edges) -> Hypergraph {
    Hypergraph::new(boundary, interior, edges).expect("catalog constructions are valid")
}

/// One edge over `k` boundary vertices `b1..bk`.
pub fn single_edge(k: usize) -> Hypergraph {
    assert!(k >= 1);
    let b: Vec<String> = (1..=k).map(|i| format!("b{i}")).collect();
    build(b.clone(), vec![], vec![("e".into(), b)])
}

/// Path with `n` edges `e1..en` from boundary `a` through interior
/// `u1..u(n-1)` to boundary `b`.
pub fn path(n: usize) -> Hypergraph {
    assert!(n >= 1);
    let mut chain = vec!["a".to_string()];
    chain.extend((1..n).map(|i| format!("u{i}")));
    chain.push("b".into());
    let edges = (0..n)
        .map(|i| (format!("e{}", i + 1), vec![chain[i].clone(), chain[i + 1].clone()]))
        .collect();
    build(
        vec!["a".into(), "b".into()],
        chain[1..n].to_vec(),
        edges,
    )
}

/// Star with interior centre `c` and boundary leaves `x1..xk`.
pub fn star(k: usize) -> Hypergraph {
    assert!(k >= 1);
    let leaves: Vec<String> = (1..=k).map(|i| format!("x{i}")).collect();
    let edges = leaves
        .iter()
        .enumerate()
        .map(|(i, x)| (format!("e{}", i + 1), vec![x.clone(), "c".to_string()]))
        .collect();
    build(leaves, vec!["c".into()], edges)
}

/// The tree `T_d` for `d ≥ 9`: write `d = 4 + 5k + l` with `0 ≤ l < 5`; a
/// centre of degree five carries `l` paths of length `k + 1` and `5 - l`
/// paths of length `k`. The five leaves are the boundary.
pub fn tree_family(d: usize) -> Hypergraph {
    assert!(d >= 9, "the tree family starts at d = 9");
    let k = (d - 4) / 5;
    let l = (d - 4) % 5;
    let mut boundary = Vec::new();
    let mut interior = vec!["c".to_string()];
    let mut edges: Edges = Vec::new();
    for arm in 1..=5 {
        let len = if arm <= l { k + 1 } else { k };
        let mut prev = "c".to_string();
        for step in 1..=len {
            let next = if step == len {
                let leaf = format!("x{arm}");
                boundary.push(leaf.clone());
                leaf
            } else {
                let v = format!("p{arm}_{step}");
                interior.push(v.clone());
                v
            };
            edges.push((format!("e{arm}_{step}"), vec![prev, next.clone()]));
            prev = next;
        }
    }
    build(boundary, interior, edges)
}

/// Boundary pairs `a_i, b_i` joined through interior `u_i` by the edge
/// `{a_i, b_i, u_i}`, plus one edge `{u1, u2, u3}`.
pub fn three_pairs() -> Hypergraph {
    let mut boundary = Vec::new();
    let mut edges: Edges = Vec::new();
    for i in 1..=3 {
        boundary.push(format!("a{i}"));
        boundary.push(format!("b{i}"));
        edges.push((
            format!("p{i}"),
            vec![format!("a{i}"), format!("b{i}"), format!("u{i}")],
        ));
    }
    edges.push(("t".into(), vec!["u1".into(), "u2".into(), "u3".into()]));
    build(
        boundary,
        vec!["u1".into(), "u2".into(), "u3".into()],
        edges,
    )
}

fn param(name: &str, arg: Option<&str>, what: &'static str, min: usize) -> Result<usize, CatalogError> {
    arg.and_then(|a| a.parse::<usize>().ok())
        .filter(|&n| n >= min)
        .ok_or_else(|| CatalogError::BadParameter {
            name: name.to_string(),
            what,
        })
}

/// Resolves a builtin shorthand such as `path:3`.
pub fn builtin(name: &str) -> Result<Hypergraph, CatalogError> {
    let (head, arg) = match name.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (name, None),
    };
    match head {
        "edge" => Ok(single_edge(param(name, arg, "an integer k >= 1", 1)?)),
        "path" => Ok(path(param(name, arg, "an integer n >= 1", 1)?)),
        "star" => Ok(star(param(name, arg, "an integer k >= 1", 1)?)),
        "tree-family" => Ok(tree_family(param(name, arg, "an integer d >= 9", 9)?)),
        "three-pairs" if arg.is_none() => Ok(three_pairs()),
        _ => Err(CatalogError::Unknown(name.to_string())),
    }
}

/// True when `name` looks like builtin shorthand rather than a file path.
pub fn is_builtin_name(name: &str) -> bool {
    let head = name.split(':').next().unwrap_or("");
    matches!(head, "edge" | "path" | "star" | "tree-family" | "three-pairs")
        && !name.contains('/')
}

/// A representative set of builtins, by name.
pub fn builtin_examples() -> Vec<(String, Hypergraph)> {
    let names = [
        "edge:2",
        "edge:3",
        "edge:4",
        "edge:5",
        "path:1",
        "path:2",
        "path:3",
        "star:3",
        "three-pairs",
        "tree-family:9",
        "tree-family:13",
    ];
    names
        .iter()
        .map(|n| (n.to_string(), builtin(n).expect("catalog name")))
        .collect()
}
