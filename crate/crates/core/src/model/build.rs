use super::validate::{self, ValidationErrors, Violation, ViolationKind};
use super::{Branch, Category, Constituent, Content, Loop, LoopKind, Role, Synapper, Token, WordOrder};
use crate::format::structure::{ConstituentDoc, LoopDoc, LoopKindDoc, StructureDocument, TokenDoc};

/// Turns a parsed document into a validated structure, reporting every
/// violation found rather than stopping at the first.
pub fn build_synapper(doc: &StructureDocument) -> Result<Synapper, ValidationErrors> {
    let mut out = Vec::new();
    let order = match doc.word_order.parse::<WordOrder>() {
        Ok(w) => w,
        Err(_) => {
            out.push(Violation::new(
                ViolationKind::UnknownWordOrder,
                "word_order",
                format!("`{}`", doc.word_order),
            ));
            WordOrder::Svo
        }
    };
    let members = doc
        .members
        .iter()
        .enumerate()
        .map(|(i, c)| constituent(c, &format!("loop[{i}]"), &mut out))
        .collect();
    let main = Loop::clausal(members);
    if let Err(structural) = validate::check_main(&main) {
        out.extend(structural.violations);
    }
    if !out.is_empty() {
        return Err(ValidationErrors { violations: out });
    }
    let s = Synapper::new(doc.label.clone(), order, main)?;
    Ok(s.with_surface_subject_final(doc.surface_subject_final))
}

fn constituent(c: &ConstituentDoc, path: &str, out: &mut Vec<Violation>) -> Constituent {
    let role = c.role.parse::<Role>().unwrap_or_else(|bad| {
        out.push(Violation::new(
            ViolationKind::UnknownRole,
            format!("{path}.role"),
            format!("`{bad}`"),
        ));
        // Counted as an object so the loop's own role checks still run.
        Role::Object
    });
    let content = match (&c.node, &c.nested) {
        (Some(tokens), None) => Content::Node(token_list(tokens, &format!("{path}.node"), out)),
        (None, Some(l)) => Content::Loop(nested(l, &format!("{path}.loop"), out)),
        (Some(_), Some(_)) => {
            out.push(Violation::new(
                ViolationKind::ConflictingContent,
                path,
                "both `node` and `loop` given",
            ));
            placeholder()
        }
        (None, None) => {
            out.push(Violation::new(
                ViolationKind::MissingContent,
                path,
                "one of `node` or `loop` is required",
            ));
            placeholder()
        }
    };
    let branches = c
        .branches
        .iter()
        .enumerate()
        .map(|(b, doc)| {
            let bp = format!("{path}.branches[{b}]");
            Branch {
                category: category(&doc.category, &format!("{bp}.category"), out),
                tokens: token_list(&doc.tokens, &format!("{bp}.tokens"), out),
            }
        })
        .collect();
    Constituent {
        role,
        content,
        branches,
    }
}

fn nested(l: &LoopDoc, path: &str, out: &mut Vec<Violation>) -> Loop {
    let members = l
        .members
        .iter()
        .enumerate()
        .map(|(i, c)| constituent(c, &format!("{path}.members[{i}]"), out))
        .collect();
    match l.kind {
        LoopKindDoc::Clausal => {
            if l.head_index.is_some() {
                out.push(Violation::new(
                    ViolationKind::HeadIndexOnClausal,
                    format!("{path}.head_index"),
                    "clausal loops are entered by role",
                ));
            }
            Loop::clausal(members)
        }
        LoopKindDoc::Phrasal => Loop {
            kind: LoopKind::Phrasal,
            members,
            head_index: l.head_index.unwrap_or(0),
        },
    }
}

fn token_list(tokens: &[TokenDoc], path: &str, out: &mut Vec<Violation>) -> Vec<Token> {
    tokens
        .iter()
        .enumerate()
        .map(|(k, t)| Token {
            surface: t.surface.clone(),
            category: category(&t.category, &format!("{path}[{k}].category"), out),
        })
        .collect()
}

fn category(tag: &str, path: &str, out: &mut Vec<Violation>) -> Category {
    tag.parse::<Category>().unwrap_or_else(|bad| {
        out.push(Violation::new(ViolationKind::UnknownCategory, path, format!("`{bad}`")));
        Category::Other
    })
}

fn placeholder() -> Content {
    Content::Node(vec![Token::new("?", Category::Other)])
}
