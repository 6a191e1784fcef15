//! Structural identity. Labels, the subject-final surface flag and the source
//! word order are not part of a structure. Rings are compared from their
//! anchor member, so two listings of the same ring that start at different
//! members are the same structure.

use std::fmt::Write;

use super::{Branch, Constituent, Content, Loop, Synapper, Token};

/// True iff the two structures are isomorphic: same rings read from their
/// anchors, same roles, nesting, branch attachment and ordinals, and the same
/// token surfaces and categories.
pub fn structural_equal(a: &Synapper, b: &Synapper) -> bool {
    loops_equal(a.main(), b.main())
}

fn loops_equal(a: &Loop, b: &Loop) -> bool {
    if a.kind != b.kind || a.members.len() != b.members.len() {
        return false;
    }
    let n = a.members.len();
    let (sa, sb) = (a.anchor(), b.anchor());
    (0..n).all(|k| constituents_equal(&a.members[(sa + k) % n], &b.members[(sb + k) % n]))
}

fn constituents_equal(a: &Constituent, b: &Constituent) -> bool {
    if a.role != b.role || a.branches != b.branches {
        return false;
    }
    match (&a.content, &b.content) {
        (Content::Node(x), Content::Node(y)) => x == y,
        (Content::Loop(x), Content::Loop(y)) => loops_equal(x, y),
        _ => false,
    }
}

/// Deterministic one-line rendering; two structures render identically iff
/// [`structural_equal`] holds.
pub fn canonical_form(s: &Synapper) -> String {
    let mut out = String::new();
    render_loop(s.main(), &mut out);
    out
}

fn render_loop(l: &Loop, out: &mut String) {
    out.push_str(l.kind.name());
    out.push('[');
    let n = l.members.len();
    let start = l.anchor();
    for k in 0..n {
        if k > 0 {
            out.push(' ');
        }
        render_constituent(&l.members[(start + k) % n], out);
    }
    out.push(']');
}

fn render_constituent(c: &Constituent, out: &mut String) {
    out.push_str(c.role.name());
    out.push('{');
    match &c.content {
        Content::Node(tokens) => {
            out.push_str("node");
            render_tokens(tokens, out);
        }
        Content::Loop(inner) => render_loop(inner, out),
    }
    for b in &c.branches {
        render_branch(b, out);
    }
    out.push('}');
}

fn render_branch(b: &Branch, out: &mut String) {
    let _ = write!(out, " branch<{}>", b.category);
    render_tokens(&b.tokens, out);
}

fn render_tokens(tokens: &[Token], out: &mut String) {
    out.push('(');
    for (i, t) in tokens.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        // JSON string quoting keeps arbitrary surfaces unambiguous.
        let quoted = serde_json::to_string(&t.surface).expect("string serialization");
        let _ = write!(out, "{quoted}/{}", t.category);
    }
    out.push(')');
}
