//! Graphviz export. Vertex ids follow member paths (`v2`, `v0_1`), branch
//! vertices append their ordinal (`v2_b0`), and every nested loop becomes a
//! `cluster_<path>` subgraph. Ring edges always run clockwise.

use std::fmt::Write;

use crate::model::{Constituent, Content, Loop, Synapper};

pub fn to_dot(s: &Synapper) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(s.label())).unwrap();
    out.push_str("  compound=true;\n  node [shape=box];\n");
    write_loop(&mut out, s.main(), &[], 1);
    out.push_str("}\n");
    out
}

fn write_loop(out: &mut String, l: &Loop, path: &[usize], indent: usize) {
    let pad = "  ".repeat(indent);
    let paths: Vec<Vec<usize>> = (0..l.members.len()).map(|i| [path, &[i]].concat()).collect();

    for (m, p) in l.members.iter().zip(&paths) {
        match &m.content {
            Content::Node(tokens) => {
                let words: Vec<&str> = tokens.iter().map(|t| t.surface.as_str()).collect();
                let label = format!("{}\n{}", words.join(" "), m.role);
                writeln!(out, "{pad}{} [label={}];", vertex(p), quote(&label)).unwrap();
            }
            Content::Loop(inner) => {
                writeln!(out, "{pad}subgraph {} {{", cluster(p)).unwrap();
                writeln!(
                    out,
                    "{pad}  label={};",
                    quote(&format!("{} {}", inner.kind.name(), m.role))
                )
                .unwrap();
                write_loop(out, inner, p, indent + 1);
                writeln!(out, "{pad}}}").unwrap();
            }
        }
    }

    if l.members.len() > 1 {
        for i in 0..l.members.len() {
            let j = (i + 1) % l.members.len();
            let (from, from_attr) = endpoint(&l.members[i], &paths[i], "ltail");
            let (to, to_attr) = endpoint(&l.members[j], &paths[j], "lhead");
            writeln!(out, "{pad}{from} -> {to}{};", attrs(&[from_attr, to_attr])).unwrap();
        }
    }

    for (m, p) in l.members.iter().zip(&paths) {
        for (ordinal, b) in m.branches.iter().enumerate() {
            let words: Vec<&str> = b.tokens.iter().map(|t| t.surface.as_str()).collect();
            let id = format!("{}_b{ordinal}", vertex(p));
            let label = format!("{}\n{}", words.join(" "), b.category);
            writeln!(out, "{pad}{id} [label={}, shape=ellipse];", quote(&label)).unwrap();
            let (to, to_attr) = endpoint(m, p, "lhead");
            writeln!(out, "{pad}{id} -> {to}{};", attrs(&[to_attr])).unwrap();
        }
    }
}

/// Vertex an edge touching `c` attaches to, plus the cluster clip attribute
/// when `c` is a loop.
fn endpoint(c: &Constituent, path: &[usize], clip: &str) -> (String, Option<String>) {
    match &c.content {
        Content::Node(_) => (vertex(path), None),
        Content::Loop(_) => (entry_vertex(c, path), Some(format!("{clip}={}", cluster(path)))),
    }
}

/// First node vertex reached by descending through loop anchors.
fn entry_vertex(c: &Constituent, path: &[usize]) -> String {
    match &c.content {
        Content::Node(_) => vertex(path),
        Content::Loop(inner) => {
            let a = inner.anchor();
            entry_vertex(&inner.members[a], &[path, &[a]].concat())
        }
    }
}

fn attrs(list: &[Option<String>]) -> String {
    let set: Vec<&str> = list.iter().flatten().map(String::as_str).collect();
    if set.is_empty() {
        String::new()
    } else {
        format!(" [{}]", set.join(", "))
    }
}

fn vertex(path: &[usize]) -> String {
    format!("v{}", join(path))
}

fn cluster(path: &[usize]) -> String {
    format!("cluster_{}", join(path))
}

fn join(path: &[usize]) -> String {
    path.iter().map(usize::to_string).collect::<Vec<_>>().join("_")
}

fn quote(text: &str) -> String {
    serde_json::to_string(text).expect("strings always serialize")
}
