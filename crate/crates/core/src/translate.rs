//! Structure-preserving translation: swap the words on the structure, read
//! it out in the target order, then rewrite morphemes on the token sequence.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;

use crate::linearize::{linearize, LinearSentence, LinearToken, LinearizeError};
use crate::model::{Category, Synapper, Token, ValidationErrors};
use crate::profile::{LanguageProfile, MorphemeRule, RuleKind, Selector};
use crate::transform::normalize_subject_position;

/// `(surface, category) -> target surface`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lexicon {
    pub name: String,
    entries: BTreeMap<(String, Category), String>,
    identity: bool,
}

impl Lexicon {
    pub fn new(name: impl Into<String>) -> Self {
        Lexicon {
            name: name.into(),
            entries: BTreeMap::new(),
            identity: false,
        }
    }

    /// Maps every word to itself.
    pub fn identity() -> Self {
        Lexicon {
            name: "identity".into(),
            entries: BTreeMap::new(),
            identity: true,
        }
    }

    pub fn insert(&mut self, source: &str, category: Category, target: &str) -> Option<String> {
        self.entries.insert((source.to_string(), category), target.to_string())
    }

    pub fn lookup<'a>(&'a self, source: &'a str, category: Category) -> Option<&'a str> {
        match self.entries.get(&(source.to_string(), category)) {
            Some(target) => Some(target),
            None if self.identity => Some(source),
            None => None,
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, Category, &str)> {
        self.entries.iter().map(|((s, c), t)| (s.as_str(), *c, t.as_str()))
    }

    /// `(surface, category)` pairs of `s` this lexicon cannot translate, each
    /// listed once in storage order.
    pub fn missing_for(&self, s: &Synapper) -> Vec<(String, Category)> {
        let mut missing: Vec<(String, Category)> = Vec::new();
        for (_, t) in s.tokens() {
            if self.lookup(&t.surface, t.category).is_none()
                && !missing.iter().any(|(m, c)| *m == t.surface && *c == t.category)
            {
                missing.push((t.surface.clone(), t.category));
            }
        }
        missing
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MissingLexemes(pub Vec<(String, Category)>);

impl fmt::Display for MissingLexemes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self.0.iter().map(|(s, c)| format!("({s}, {c})")).collect();
        write!(f, "{} missing lexeme(s): {}", self.0.len(), pairs.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TranslateError {
    #[error("{0}")]
    MissingLexeme(MissingLexemes),
    #[error(transparent)]
    Linearize(#[from] LinearizeError),
    #[error("substitution produced an invalid structure: {0}")]
    Invalid(#[from] ValidationErrors),
}

/// Replaces every token surface through `lexicon`; nothing else changes.
pub fn substitute_lexemes(s: &Synapper, lexicon: &Lexicon) -> Result<Synapper, TranslateError> {
    let missing = lexicon.missing_for(s);
    if !missing.is_empty() {
        return Err(TranslateError::MissingLexeme(MissingLexemes(missing)));
    }
    Ok(s.map_tokens(|_, t| {
        let target = lexicon.lookup(&t.surface, t.category).expect("coverage checked above");
        Token::new(target, t.category)
    })?)
}

/// Token-count change made by one rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RuleEffect {
    pub ordinal: u32,
    pub dropped: usize,
    pub inserted: usize,
}

pub fn apply_morpheme_rules(sentence: &LinearSentence, profile: &LanguageProfile) -> LinearSentence {
    apply_morpheme_rules_traced(sentence, profile).0
}

/// Like [`apply_morpheme_rules`], also reporting what each rule did.
pub fn apply_morpheme_rules_traced(
    sentence: &LinearSentence,
    profile: &LanguageProfile,
) -> (LinearSentence, Vec<RuleEffect>) {
    let mut tokens = sentence.tokens.clone();
    let mut effects = Vec::with_capacity(profile.morpheme_rules.len());
    for rule in profile.ordered_rules() {
        effects.push(apply_rule(&mut tokens, rule));
    }
    let out = LinearSentence {
        tokens,
        word_order: sentence.word_order,
        profile_name: sentence.profile_name.clone(),
    };
    (out, effects)
}

fn apply_rule(tokens: &mut Vec<LinearToken>, rule: &MorphemeRule) -> RuleEffect {
    let spans = spans(tokens, &rule.selector);
    let mut effect = RuleEffect {
        ordinal: rule.ordinal,
        dropped: 0,
        inserted: 0,
    };
    let words = || {
        rule.payload
            .split_whitespace()
            .map(|w| LinearToken::inserted(Token::new(w, Category::Other)))
    };
    // Back to front so earlier spans keep their indices.
    for span in spans.into_iter().rev() {
        match rule.kind {
            RuleKind::DropCategory => {
                effect.dropped += span.len();
                tokens.drain(span);
            }
            RuleKind::InsertBefore => {
                let new: Vec<_> = words().collect();
                effect.inserted += new.len();
                tokens.splice(span.start..span.start, new);
            }
            RuleKind::InsertAfter => {
                let new: Vec<_> = words().collect();
                effect.inserted += new.len();
                tokens.splice(span.end..span.end, new);
            }
            RuleKind::SuffixOnRole => {
                if let Some(last) = tokens[span].last_mut() {
                    last.token.surface.push_str(&rule.payload);
                }
            }
        }
    }
    effect
}

/// Maximal ranges the selector picks out, in order.
fn spans(tokens: &[LinearToken], selector: &Selector) -> Vec<Range<usize>> {
    match selector {
        Selector::Category {
            category,
            branch_only,
            surface,
        } => singles(tokens, |t| {
            t.token.category == *category
                && (!branch_only || t.is_branch())
                && surface.as_deref().is_none_or(|s| s == t.surface())
        }),
        Selector::Token(surface) => singles(tokens, |t| t.surface() == surface),
        Selector::Role(role) => {
            let mut out: Vec<(usize, Range<usize>)> = Vec::new();
            for (i, t) in tokens.iter().enumerate() {
                let Some(o) = t.origin.as_ref().filter(|o| o.role == *role) else {
                    continue;
                };
                match out.last_mut() {
                    Some((top, r)) if *top == o.top && r.end == i => r.end = i + 1,
                    _ => out.push((o.top, i..i + 1)),
                }
            }
            out.into_iter().map(|(_, r)| r).collect()
        }
    }
}

fn singles(tokens: &[LinearToken], pick: impl Fn(&LinearToken) -> bool) -> Vec<Range<usize>> {
    tokens
        .iter()
        .enumerate()
        .filter(|(_, t)| pick(t))
        .map(|(i, _)| i..i + 1)
        .collect()
}

/// Normalize subject position, substitute lexemes, linearize, then apply the
/// profile's morpheme rules.
pub fn translate(s: &Synapper, lexicon: &Lexicon, target: &LanguageProfile) -> Result<LinearSentence, TranslateError> {
    let normalized = normalize_subject_position(s);
    let substituted = substitute_lexemes(&normalized, lexicon)?;
    let linear = linearize(&substituted, target)?;
    Ok(apply_morpheme_rules(&linear, target))
}
