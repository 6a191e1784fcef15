use std::fmt;

use super::{Content, Loop, LoopKind, Role};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    MissingSubject,
    MissingVerb,
    MultipleSubjects,
    MultipleVerbs,
    EmptyLoop,
    EmptyNode,
    EmptyBranch,
    InvalidSurface,
    UnknownRole,
    UnknownCategory,
    UnknownWordOrder,
    MainNotClausal,
    HeadIndexOutOfRange,
    HeadIndexOnClausal,
    MissingContent,
    ConflictingContent,
}

impl ViolationKind {
    pub fn name(self) -> &'static str {
        match self {
            ViolationKind::MissingSubject => "MissingSubject",
            ViolationKind::MissingVerb => "MissingVerb",
            ViolationKind::MultipleSubjects => "MultipleSubjects",
            ViolationKind::MultipleVerbs => "MultipleVerbs",
            ViolationKind::EmptyLoop => "EmptyLoop",
            ViolationKind::EmptyNode => "EmptyNode",
            ViolationKind::EmptyBranch => "EmptyBranch",
            ViolationKind::InvalidSurface => "InvalidSurface",
            ViolationKind::UnknownRole => "UnknownRole",
            ViolationKind::UnknownCategory => "UnknownCategory",
            ViolationKind::UnknownWordOrder => "UnknownWordOrder",
            ViolationKind::MainNotClausal => "MainNotClausal",
            ViolationKind::HeadIndexOutOfRange => "HeadIndexOutOfRange",
            ViolationKind::HeadIndexOnClausal => "HeadIndexOnClausal",
            ViolationKind::MissingContent => "MissingContent",
            ViolationKind::ConflictingContent => "ConflictingContent",
        }
    }
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A single broken invariant, located by its key path in the structure
/// document (`loop[2].branches[0].tokens[1]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub path: String,
    pub detail: String,
}

impl Violation {
    pub fn new(kind: ViolationKind, path: impl Into<String>, detail: impl Into<String>) -> Self {
        Violation {
            kind,
            path: path.into(),
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}", self.kind, self.path)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

/// Every invariant violation found in a structure.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ValidationErrors {
    pub violations: Vec<Violation>,
}

impl ValidationErrors {
    pub fn kinds(&self) -> Vec<ViolationKind> {
        self.violations.iter().map(|v| v.kind).collect()
    }

    pub fn contains(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }
}

impl fmt::Display for ValidationErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violation(s)", self.violations.len())?;
        for v in &self.violations {
            write!(f, "; {v}")?;
        }
        Ok(())
    }
}

pub(crate) fn check_main(main: &Loop) -> Result<(), ValidationErrors> {
    let mut out = Vec::new();
    if main.kind != LoopKind::Clausal {
        out.push(Violation::new(
            ViolationKind::MainNotClausal,
            "loop",
            "the main loop must be clausal",
        ));
    }
    check_loop(main, "loop", "loop", &mut out);
    if out.is_empty() {
        Ok(())
    } else {
        Err(ValidationErrors { violations: out })
    }
}

pub(crate) fn check_surface(surface: &str, path: &str, out: &mut Vec<Violation>) {
    if surface.is_empty() {
        out.push(Violation::new(ViolationKind::InvalidSurface, path, "empty surface"));
    } else if surface.chars().any(char::is_whitespace) {
        out.push(Violation::new(
            ViolationKind::InvalidSurface,
            path,
            format!("surface `{surface}` contains whitespace"),
        ));
    }
}

/// `loop_path` names the loop object, `members_path` the array holding its
/// members; they differ only for nested loops (`x.loop` vs `x.loop.members`).
fn check_loop(l: &Loop, loop_path: &str, members_path: &str, out: &mut Vec<Violation>) {
    if l.members.is_empty() {
        out.push(Violation::new(
            ViolationKind::EmptyLoop,
            loop_path,
            "loop has no members",
        ));
    }
    match l.kind {
        LoopKind::Clausal => {
            let count = |role| l.members.iter().filter(|m| m.role == role).count();
            match count(Role::Subject) {
                0 if !l.members.is_empty() => out.push(Violation::new(ViolationKind::MissingSubject, loop_path, "")),
                0 | 1 => {}
                n => out.push(Violation::new(
                    ViolationKind::MultipleSubjects,
                    loop_path,
                    format!("{n} subject members"),
                )),
            }
            match count(Role::Verb) {
                0 if !l.members.is_empty() => out.push(Violation::new(ViolationKind::MissingVerb, loop_path, "")),
                0 | 1 => {}
                n => out.push(Violation::new(
                    ViolationKind::MultipleVerbs,
                    loop_path,
                    format!("{n} verb members"),
                )),
            }
            if l.head_index != 0 {
                out.push(Violation::new(
                    ViolationKind::HeadIndexOnClausal,
                    loop_path,
                    "clausal loops are entered by role",
                ));
            }
        }
        LoopKind::Phrasal => {
            if !l.members.is_empty() && l.head_index >= l.members.len() {
                out.push(Violation::new(
                    ViolationKind::HeadIndexOutOfRange,
                    loop_path,
                    format!("head_index {} with {} members", l.head_index, l.members.len()),
                ));
            }
        }
    }
    for (i, m) in l.members.iter().enumerate() {
        let here = format!("{members_path}[{i}]");
        match &m.content {
            Content::Node(tokens) => {
                if tokens.is_empty() {
                    out.push(Violation::new(ViolationKind::EmptyNode, format!("{here}.node"), ""));
                }
                for (k, t) in tokens.iter().enumerate() {
                    check_surface(&t.surface, &format!("{here}.node[{k}]"), out);
                }
            }
            Content::Loop(inner) => {
                let lp = format!("{here}.loop");
                check_loop(inner, &lp, &format!("{lp}.members"), out);
            }
        }
        for (b, branch) in m.branches.iter().enumerate() {
            let bp = format!("{here}.branches[{b}]");
            if branch.tokens.is_empty() {
                out.push(Violation::new(ViolationKind::EmptyBranch, format!("{bp}.tokens"), ""));
            }
            for (k, t) in branch.tokens.iter().enumerate() {
                check_surface(&t.surface, &format!("{bp}.tokens[{k}]"), out);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Category, Constituent, Synapper, Token, WordOrder};

    fn w(role: Role, s: &str) -> Constituent {
        Constituent::word(role, s, Category::N)
    }

    #[test]
    fn two_subjects_rejected() {
        let main = Loop::clausal(vec![
            w(Role::Subject, "Jane"),
            w(Role::Subject, "Tim"),
            w(Role::Verb, "runs"),
        ]);
        let err = Synapper::new("x", WordOrder::Svo, main).unwrap_err();
        assert_eq!(err.kinds(), vec![ViolationKind::MultipleSubjects]);
        assert_eq!(err.violations[0].path, "loop");
    }

    #[test]
    fn empty_phrasal_loop_rejected() {
        let main = Loop::clausal(vec![
            Constituent::nested(Role::Subject, Loop::phrasal(0, vec![])),
            w(Role::Verb, "runs"),
        ]);
        let err = Synapper::new("x", WordOrder::Svo, main).unwrap_err();
        assert_eq!(err.kinds(), vec![ViolationKind::EmptyLoop]);
        assert_eq!(err.violations[0].path, "loop[0].loop");
    }

    #[test]
    fn all_violations_reported() {
        let bad_inner = Loop::clausal(vec![w(Role::Object, "x")]);
        let main = Loop::clausal(vec![
            Constituent::node(Role::Object, vec![]),
            Constituent::nested(Role::Object, bad_inner),
            Constituent::node(Role::Object, vec![Token::new("two words", Category::N)]),
        ]);
        let err = Synapper::new("x", WordOrder::Svo, main).unwrap_err();
        let kinds = err.kinds();
        assert_eq!(
            kinds,
            vec![
                ViolationKind::MissingSubject,
                ViolationKind::MissingVerb,
                ViolationKind::EmptyNode,
                ViolationKind::MissingSubject,
                ViolationKind::MissingVerb,
                ViolationKind::InvalidSurface,
            ]
        );
        assert_eq!(err.violations[3].path, "loop[1].loop");
        assert_eq!(err.violations[5].path, "loop[2].node[0]");
    }

    #[test]
    fn phrasal_head_must_exist() {
        let np = Loop::phrasal(3, vec![w(Role::Object, "a"), w(Role::Object, "b")]);
        let main = Loop::clausal(vec![Constituent::nested(Role::Subject, np), w(Role::Verb, "v")]);
        let err = Synapper::new("x", WordOrder::Svo, main).unwrap_err();
        assert_eq!(err.kinds(), vec![ViolationKind::HeadIndexOutOfRange]);
    }

    #[test]
    fn main_loop_must_be_clausal() {
        let main = Loop::phrasal(0, vec![w(Role::Subject, "a"), w(Role::Verb, "b")]);
        let err = Synapper::new("x", WordOrder::Svo, main).unwrap_err();
        assert!(err.contains(ViolationKind::MainNotClausal));
    }
}
