//! JSON structure documents.
//!
//! ```json
//! {
//!   "label": "horse",
//!   "word_order": "SVO",
//!   "surface_subject_final": false,
//!   "loop": [
//!     { "role": "subject", "node": [{ "surface": "Jane", "category": "N" }] },
//!     ...
//!   ]
//! }
//! ```
//!
//! A constituent carries exactly one of `node` (token list) or `loop`
//! (`{"kind", "head_index", "members"}`, `head_index` for phrasal loops
//! only). Unknown keys are rejected.

use serde::{Deserialize, Serialize};

use super::FormatError;
use crate::model::{build_synapper, Constituent, Content, Loop, LoopKind, Synapper, Token};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDocument {
    #[serde(default)]
    pub label: String,
    pub word_order: String,
    #[serde(default)]
    pub surface_subject_final: bool,
    #[serde(rename = "loop")]
    pub members: Vec<ConstituentDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstituentDoc {
    pub role: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub node: Option<Vec<TokenDoc>>,
    #[serde(default, rename = "loop", skip_serializing_if = "Option::is_none")]
    pub nested: Option<LoopDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub branches: Vec<BranchDoc>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LoopKindDoc {
    Clausal,
    Phrasal,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoopDoc {
    pub kind: LoopKindDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub head_index: Option<usize>,
    pub members: Vec<ConstituentDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BranchDoc {
    pub tokens: Vec<TokenDoc>,
    pub category: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TokenDoc {
    pub surface: String,
    pub category: String,
}

/// Reads the JSON container only. Word order and key checks happen here;
/// structural invariants are left to [`build_synapper`].
pub fn parse_document(text: &str) -> Result<StructureDocument, FormatError> {
    let doc: StructureDocument = super::from_json(text)?;
    if doc.word_order.parse::<crate::model::WordOrder>().is_err() {
        return Err(FormatError::UnknownWordOrder {
            path: "word_order".into(),
            value: doc.word_order,
        });
    }
    Ok(doc)
}

pub fn parse_structure(text: &str) -> Result<Synapper, FormatError> {
    let doc = parse_document(text)?;
    Ok(build_synapper(&doc)?)
}

pub fn to_document(s: &Synapper) -> StructureDocument {
    StructureDocument {
        label: s.label().to_string(),
        word_order: s.source_word_order().code().to_string(),
        surface_subject_final: s.surface_subject_final(),
        members: s.main().members.iter().map(constituent_doc).collect(),
    }
}

/// Keys in fixed order, members in stored ring order, two-space indentation
/// and a trailing newline.
pub fn serialize_structure(s: &Synapper) -> String {
    let mut text = serde_json::to_string_pretty(&to_document(s)).expect("structure documents serialize");
    text.push('\n');
    text
}

fn constituent_doc(c: &Constituent) -> ConstituentDoc {
    let (node, nested) = match &c.content {
        Content::Node(tokens) => (Some(tokens.iter().map(token_doc).collect()), None),
        Content::Loop(l) => (None, Some(loop_doc(l))),
    };
    ConstituentDoc {
        role: c.role.name().to_string(),
        node,
        nested,
        branches: c
            .branches
            .iter()
            .map(|b| BranchDoc {
                tokens: b.tokens.iter().map(token_doc).collect(),
                category: b.category.tag().to_string(),
            })
            .collect(),
    }
}

fn loop_doc(l: &Loop) -> LoopDoc {
    let (kind, head_index) = match l.kind {
        LoopKind::Clausal => (LoopKindDoc::Clausal, None),
        LoopKind::Phrasal => (LoopKindDoc::Phrasal, Some(l.head_index)),
    };
    LoopDoc {
        kind,
        head_index,
        members: l.members.iter().map(constituent_doc).collect(),
    }
}

fn token_doc(t: &Token) -> TokenDoc {
    TokenDoc {
        surface: t.surface.clone(),
        category: t.category.tag().to_string(),
    }
}
