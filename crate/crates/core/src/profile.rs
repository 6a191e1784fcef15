//! Language profiles: everything language-dependent about producing a
//! sentence from a structure.

use std::fmt;
use std::str::FromStr;

use crate::model::{Category, Role, WordOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VerbPlacement {
    #[default]
    Default,
    /// Verb block moved to the front of the sentence.
    V1,
    /// Verb block moved after the first constituent.
    V2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Pre,
    Post,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PostOrder {
    SourceOrder,
    /// Mirror image: the branch nearest the node in source order is read first.
    Reversed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BranchPlacementRule {
    pub category: Category,
    pub side: Side,
    pub post_order: PostOrder,
}

impl BranchPlacementRule {
    pub fn pre(category: Category) -> Self {
        BranchPlacementRule {
            category,
            side: Side::Pre,
            post_order: PostOrder::SourceOrder,
        }
    }

    pub fn post(category: Category, post_order: PostOrder) -> Self {
        BranchPlacementRule {
            category,
            side: Side::Post,
            post_order,
        }
    }
}

/// Where a question word goes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WhRule {
    /// Sentence-initial, subject and verb blocks swapped.
    InitialWithInversion,
    /// Sentence-initial, nothing else moves.
    InitialNoInversion,
    /// Immediately before the subject block.
    PreSubject,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleKind {
    DropCategory,
    InsertBefore,
    InsertAfter,
    SuffixOnRole,
}

impl RuleKind {
    pub fn name(self) -> &'static str {
        match self {
            RuleKind::DropCategory => "drop_category",
            RuleKind::InsertBefore => "insert_before",
            RuleKind::InsertAfter => "insert_after",
            RuleKind::SuffixOnRole => "suffix_on_role",
        }
    }

    fn accepts(self, selector: &Selector) -> bool {
        match self {
            RuleKind::DropCategory => matches!(selector, Selector::Category { .. }),
            RuleKind::SuffixOnRole => matches!(selector, Selector::Role(_)),
            RuleKind::InsertBefore | RuleKind::InsertAfter => true,
        }
    }
}

/// What a morpheme rule applies to in a linearized sentence.
///
/// Text forms: `category:DET`, `branch:DET` (branch tokens only), either
/// optionally narrowed to one surface with `=a` (`branch:DET=a`);
/// `role:subject` (a whole top-level block); `token:12th` (every token with
/// that surface).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selector {
    Category {
        category: Category,
        branch_only: bool,
        surface: Option<String>,
    },
    Role(Role),
    Token(String),
}

impl FromStr for Selector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (prefix, rest) = s
            .split_once(':')
            .ok_or_else(|| format!("selector `{s}` has no `kind:` prefix"))?;
        match prefix {
            "category" | "branch" => {
                let (tag, surface) = match rest.split_once('=') {
                    Some((tag, surface)) if !surface.is_empty() => (tag, Some(surface.to_string())),
                    Some(_) => return Err(format!("selector `{s}` has an empty surface")),
                    None => (rest, None),
                };
                let category = tag
                    .parse::<Category>()
                    .map_err(|bad| format!("unknown category `{bad}`"))?;
                Ok(Selector::Category {
                    category,
                    branch_only: prefix == "branch",
                    surface,
                })
            }
            "role" => rest
                .parse::<Role>()
                .map(Selector::Role)
                .map_err(|bad| format!("unknown role `{bad}`")),
            "token" if !rest.is_empty() => Ok(Selector::Token(rest.to_string())),
            "token" => Err("empty token selector".into()),
            other => Err(format!("unknown selector kind `{other}`")),
        }
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::Category {
                category,
                branch_only,
                surface,
            } => {
                let prefix = if *branch_only { "branch" } else { "category" };
                write!(f, "{prefix}:{category}")?;
                if let Some(surface) = surface {
                    write!(f, "={surface}")?;
                }
                Ok(())
            }
            Selector::Role(r) => write!(f, "role:{r}"),
            Selector::Token(t) => write!(f, "token:{t}"),
        }
    }
}

/// A token-sequence rewrite applied after linearization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphemeRule {
    pub kind: RuleKind,
    pub selector: Selector,
    /// Inserted words (space-separated) or the suffix text.
    pub payload: String,
    pub ordinal: u32,
}

impl MorphemeRule {
    pub fn new(kind: RuleKind, selector: Selector, payload: impl Into<String>, ordinal: u32) -> Result<Self, String> {
        if !kind.accepts(&selector) {
            return Err(format!("{} cannot use selector `{selector}`", kind.name()));
        }
        let payload = payload.into();
        match kind {
            RuleKind::InsertBefore | RuleKind::InsertAfter if payload.trim().is_empty() => {
                return Err(format!("{} needs a payload", kind.name()))
            }
            RuleKind::SuffixOnRole if payload.is_empty() || payload.contains(char::is_whitespace) => {
                return Err("suffix must be a non-empty word".into())
            }
            _ => {}
        }
        Ok(MorphemeRule {
            kind,
            selector,
            payload,
            ordinal,
        })
    }

    pub fn drop_category(selector: Selector, ordinal: u32) -> Result<Self, String> {
        MorphemeRule::new(RuleKind::DropCategory, selector, "", ordinal)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LanguageProfile {
    pub name: String,
    pub word_order: WordOrder,
    pub verb_placement: VerbPlacement,
    pub branch_rules: Vec<BranchPlacementRule>,
    pub wh_rule: WhRule,
    pub morpheme_rules: Vec<MorphemeRule>,
}

impl LanguageProfile {
    /// Plain profile for `word_order`: default verb placement, every branch
    /// before its node, sentence-initial question word, no morpheme rules.
    pub fn gloss(word_order: WordOrder) -> Self {
        LanguageProfile {
            name: format!("{}-gloss", word_order.code().to_lowercase()),
            word_order,
            verb_placement: VerbPlacement::Default,
            branch_rules: Vec::new(),
            wh_rule: WhRule::InitialNoInversion,
            morpheme_rules: Vec::new(),
        }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_verb_placement(mut self, placement: VerbPlacement) -> Self {
        self.verb_placement = placement;
        self
    }

    pub fn with_branch_rule(mut self, rule: BranchPlacementRule) -> Self {
        self.branch_rules.retain(|r| r.category != rule.category);
        self.branch_rules.push(rule);
        self
    }

    pub fn with_wh_rule(mut self, rule: WhRule) -> Self {
        self.wh_rule = rule;
        self
    }

    pub fn with_morpheme_rule(mut self, rule: MorphemeRule) -> Self {
        self.morpheme_rules.push(rule);
        self
    }

    /// Placement for branches of `category`; unlisted categories go before
    /// the node in source order.
    pub fn placement(&self, category: Category) -> BranchPlacementRule {
        self.branch_rules
            .iter()
            .find(|r| r.category == category)
            .copied()
            .unwrap_or_else(|| BranchPlacementRule::pre(category))
    }

    /// Morpheme rules in application order.
    pub fn ordered_rules(&self) -> Vec<&MorphemeRule> {
        let mut rules: Vec<_> = self.morpheme_rules.iter().collect();
        rules.sort_by_key(|r| r.ordinal);
        rules
    }

    pub fn has_drop_or_insert_rules(&self) -> bool {
        self.morpheme_rules.iter().any(|r| r.kind != RuleKind::SuffixOnRole)
    }
}
