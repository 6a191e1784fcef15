//! JSON language profiles.
//!
//! ```json
//! {
//!   "name": "fr",
//!   "word_order": "SVO",
//!   "verb_placement": "default",
//!   "branch_rules": [{ "category": "ADJ", "side": "post", "post_order": "reversed" }],
//!   "wh_rule": "initial_inversion",
//!   "morpheme_rules": [{ "kind": "drop_category", "selector": "branch:DET", "payload": "", "ordinal": 0 }]
//! }
//! ```

use std::collections::HashMap;

use serde::Deserialize;

use super::FormatError;
use crate::model::{Category, WordOrder};
use crate::profile::{
    BranchPlacementRule, LanguageProfile, MorphemeRule, PostOrder, RuleKind, Selector, Side, VerbPlacement, WhRule,
};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProfileDocument {
    name: String,
    word_order: String,
    #[serde(default)]
    verb_placement: PlacementDoc,
    #[serde(default)]
    branch_rules: Vec<BranchRuleDoc>,
    wh_rule: WhRuleDoc,
    #[serde(default)]
    morpheme_rules: Vec<MorphemeRuleDoc>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
enum PlacementDoc {
    #[default]
    Default,
    V1,
    V2,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BranchRuleDoc {
    category: String,
    side: SideDoc,
    #[serde(default)]
    post_order: PostOrderDoc,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "lowercase")]
enum SideDoc {
    Pre,
    Post,
}

#[derive(Debug, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
enum PostOrderDoc {
    #[default]
    Source,
    Reversed,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
enum WhRuleDoc {
    InitialInversion,
    InitialPlain,
    PreSubject,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MorphemeRuleDoc {
    kind: RuleKindDoc,
    selector: String,
    #[serde(default)]
    payload: String,
    ordinal: u32,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(rename_all = "snake_case")]
enum RuleKindDoc {
    DropCategory,
    InsertBefore,
    InsertAfter,
    SuffixOnRole,
}

pub fn parse_profile(text: &str) -> Result<LanguageProfile, FormatError> {
    let doc: ProfileDocument = super::from_json(text)?;
    let word_order = doc
        .word_order
        .parse::<WordOrder>()
        .map_err(|_| FormatError::UnknownWordOrder {
            path: "word_order".into(),
            value: doc.word_order.clone(),
        })?;

    let mut branch_rules = Vec::with_capacity(doc.branch_rules.len());
    for (i, r) in doc.branch_rules.iter().enumerate() {
        let path = format!("branch_rules[{i}]");
        let category = r
            .category
            .parse::<Category>()
            .map_err(|bad| FormatError::InvalidValue {
                path: format!("{path}.category"),
                message: format!("unknown category `{bad}`"),
            })?;
        if branch_rules
            .iter()
            .any(|b: &BranchPlacementRule| b.category == category)
        {
            return Err(FormatError::DuplicateBranchRule {
                path,
                category: category.tag().to_string(),
            });
        }
        branch_rules.push(BranchPlacementRule {
            category,
            side: match r.side {
                SideDoc::Pre => Side::Pre,
                SideDoc::Post => Side::Post,
            },
            post_order: match r.post_order {
                PostOrderDoc::Source => PostOrder::SourceOrder,
                PostOrderDoc::Reversed => PostOrder::Reversed,
            },
        });
    }

    let mut seen: HashMap<u32, usize> = HashMap::new();
    let mut morpheme_rules = Vec::with_capacity(doc.morpheme_rules.len());
    for (i, r) in doc.morpheme_rules.iter().enumerate() {
        let path = format!("morpheme_rules[{i}]");
        if seen.insert(r.ordinal, i).is_some() {
            return Err(FormatError::DuplicateOrdinal {
                path: format!("{path}.ordinal"),
                ordinal: r.ordinal,
            });
        }
        let selector = r
            .selector
            .parse::<Selector>()
            .map_err(|message| FormatError::InvalidValue {
                path: format!("{path}.selector"),
                message,
            })?;
        let kind = match r.kind {
            RuleKindDoc::DropCategory => RuleKind::DropCategory,
            RuleKindDoc::InsertBefore => RuleKind::InsertBefore,
            RuleKindDoc::InsertAfter => RuleKind::InsertAfter,
            RuleKindDoc::SuffixOnRole => RuleKind::SuffixOnRole,
        };
        let rule = MorphemeRule::new(kind, selector, r.payload.clone(), r.ordinal)
            .map_err(|message| FormatError::InvalidValue { path, message })?;
        morpheme_rules.push(rule);
    }

    Ok(LanguageProfile {
        name: doc.name,
        word_order,
        verb_placement: match doc.verb_placement {
            PlacementDoc::Default => VerbPlacement::Default,
            PlacementDoc::V1 => VerbPlacement::V1,
            PlacementDoc::V2 => VerbPlacement::V2,
        },
        branch_rules,
        wh_rule: match doc.wh_rule {
            WhRuleDoc::InitialInversion => WhRule::InitialWithInversion,
            WhRuleDoc::InitialPlain => WhRule::InitialNoInversion,
            WhRuleDoc::PreSubject => WhRule::PreSubject,
        },
        morpheme_rules,
    })
}
