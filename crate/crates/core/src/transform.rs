//! Declarative/interrogative conversion and subject-position normalization.

use std::collections::HashMap;
use std::ops::Range;

use crate::linearize::{linearize, LinearSentence, LinearToken, LinearizeError};
use crate::model::{Category, Role, Slot, Synapper, Token, ValidationErrors};
use crate::profile::{LanguageProfile, WhRule};

/// A question word. Always carries the `WH` category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhToken(Token);

impl WhToken {
    pub fn new(token: Token) -> Result<Self, TransformError> {
        if token.category != Category::Wh {
            return Err(TransformError::NotWh {
                surface: token.surface,
                category: token.category,
            });
        }
        Ok(WhToken(token))
    }

    pub fn word(surface: &str) -> Self {
        WhToken(Token::new(surface, Category::Wh))
    }

    pub fn token(&self) -> &Token {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TransformError {
    #[error("structure already contains the question word `{0}`")]
    WhAlreadyPresent(String),
    #[error("`{surface}` is tagged {category}, not WH")]
    NotWh { surface: String, category: Category },
    #[error("no question word found")]
    NoWhFound,
    #[error("question words at positions {0:?}; only one is supported")]
    MultipleWh(Vec<usize>),
    #[error("sentence does not match the skeleton under this profile: {0}")]
    InversionMismatch(String),
    #[error(transparent)]
    Linearize(#[from] LinearizeError),
    #[error("recovered structure is invalid: {0}")]
    Invalid(#[from] ValidationErrors),
}

/// Linearizes `s` and marks it as a question according to the profile's WH
/// rule. Morpheme rules are not applied.
pub fn interrogativize(
    s: &Synapper,
    wh: &WhToken,
    profile: &LanguageProfile,
) -> Result<LinearSentence, TransformError> {
    if let Some((_, t)) = s.tokens().into_iter().find(|(_, t)| t.category == Category::Wh) {
        return Err(TransformError::WhAlreadyPresent(t.surface.clone()));
    }
    let mut out = linearize(s, profile)?;
    let wh = LinearToken::inserted(wh.token().clone());
    match profile.wh_rule {
        WhRule::InitialWithInversion => {
            if let (Some(subject), Some(verb)) = (out.role_block(Role::Subject), out.role_block(Role::Verb)) {
                swap_blocks(&mut out.tokens, subject, verb);
            }
            out.tokens.insert(0, wh);
        }
        WhRule::InitialNoInversion => out.tokens.insert(0, wh),
        WhRule::PreSubject => {
            let at = out.role_block(Role::Subject).map_or(0, |r| r.start);
            out.tokens.insert(at, wh);
        }
    }
    Ok(out)
}

/// Recovers the declarative structure behind question `q`. `skeleton`
/// supplies the shape; surfaces come from `q`. A question read from plain
/// text has no categories, so when no `WH` token is present the question word
/// is assumed to sit where the profile's rule puts it, provided `q` is
/// exactly one token longer than the declarative reading.
pub fn declarativize(
    q: &LinearSentence,
    skeleton: &Synapper,
    profile: &LanguageProfile,
) -> Result<Synapper, TransformError> {
    let base = linearize(skeleton, profile)?;
    let expected_at = match profile.wh_rule {
        WhRule::InitialWithInversion | WhRule::InitialNoInversion => 0,
        WhRule::PreSubject => base.role_block(Role::Subject).map_or(0, |r| r.start),
    };

    let marked: Vec<usize> = q
        .tokens
        .iter()
        .enumerate()
        .filter(|(_, t)| t.token.category == Category::Wh)
        .map(|(i, _)| i)
        .collect();
    let at = match marked[..] {
        [] if q.len() == base.len() => return Err(TransformError::NoWhFound),
        [] => expected_at,
        [i] => i,
        _ => return Err(TransformError::MultipleWh(marked)),
    };
    if q.len() != base.len() + 1 {
        return Err(TransformError::InversionMismatch(format!(
            "expected {} tokens, found {}",
            base.len() + 1,
            q.len()
        )));
    }
    if at != expected_at {
        return Err(TransformError::InversionMismatch(format!(
            "question word at position {at}, expected {expected_at}"
        )));
    }

    let mut rest: Vec<&LinearToken> = q.tokens.iter().collect();
    rest.remove(at);
    if profile.wh_rule == WhRule::InitialWithInversion {
        if let (Some(subject), Some(verb)) = (base.role_block(Role::Subject), base.role_block(Role::Verb)) {
            let (first, second) = if subject.start < verb.start {
                (subject, verb)
            } else {
                (verb, subject)
            };
            // After the swap the later block sits where the earlier one began.
            let moved_second = first.start..first.start + second.len();
            let moved_first = second.end - first.len()..second.end;
            swap_blocks(&mut rest, moved_second, moved_first);
        }
    }

    let surfaces: HashMap<&Slot, &str> = base
        .tokens
        .iter()
        .zip(&rest)
        .filter_map(|(b, r)| Some((&b.origin.as_ref()?.slot, r.surface())))
        .collect();
    Ok(skeleton.map_tokens(|slot, t| Token::new(surfaces.get(slot).copied().unwrap_or(&t.surface), t.category))?)
}

/// Clears the subject-final flag. The ring is already order-neutral, so
/// nothing else changes.
pub fn normalize_subject_position(s: &Synapper) -> Synapper {
    s.clone().with_surface_subject_final(false)
}

fn swap_blocks<T>(tokens: &mut Vec<T>, a: Range<usize>, b: Range<usize>) {
    let (first, second) = if a.start <= b.start { (a, b) } else { (b, a) };
    debug_assert!(first.end <= second.start);
    let tail = tokens.split_off(second.end);
    let second_part = tokens.split_off(second.start);
    let middle = tokens.split_off(first.end);
    let first_part = tokens.split_off(first.start);
    tokens.extend(second_part);
    tokens.extend(middle);
    tokens.extend(first_part);
    tokens.extend(tail);
}
