//! Reading a structure out as a token sequence.
//!
//! The word order fixes both the direction of flow and the constituent the
//! reading starts on. Every loop, nested or not, is read in that same
//! direction. Branches are placed around their node according to the
//! profile, and V1/V2 verb movement is applied to the finished top-level
//! sequence.

use std::ops::Range;

use crate::model::{Constituent, Content, Direction, Loop, LoopKind, Part, Role, Slot, Synapper, Token, WordOrder};
use crate::profile::{LanguageProfile, PostOrder, Side, VerbPlacement};

pub fn direction_of(order: WordOrder) -> Direction {
    order.direction()
}

/// Member indices of a ring of `len` visited once from `start`.
pub fn visit_order(len: usize, start: usize, direction: Direction) -> Vec<usize> {
    (0..len)
        .map(|k| match direction {
            Direction::Clockwise => (start + k) % len,
            Direction::Counterclockwise => (start + len - k) % len,
        })
        .collect()
}

/// Where an emitted token came from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Origin {
    /// Index of the enclosing top-level constituent in the main loop.
    pub top: usize,
    /// Role of that top-level constituent.
    pub role: Role,
    pub slot: Slot,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearToken {
    pub token: Token,
    /// `None` for tokens inserted after linearization.
    pub origin: Option<Origin>,
}

impl LinearToken {
    pub fn inserted(token: Token) -> Self {
        LinearToken { token, origin: None }
    }

    pub fn surface(&self) -> &str {
        &self.token.surface
    }

    pub fn is_branch(&self) -> bool {
        self.origin.as_ref().is_some_and(|o| o.slot.is_branch())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSentence {
    pub tokens: Vec<LinearToken>,
    pub word_order: WordOrder,
    pub profile_name: String,
}

impl LinearSentence {
    /// A sentence read from plain text: whitespace-separated words with no
    /// provenance, all tagged `OTHER`.
    pub fn from_text(text: &str, word_order: WordOrder, profile_name: impl Into<String>) -> Self {
        LinearSentence {
            tokens: text
                .split_whitespace()
                .map(|w| LinearToken::inserted(Token::new(w, crate::model::Category::Other)))
                .collect(),
            word_order,
            profile_name: profile_name.into(),
        }
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn surfaces(&self) -> Vec<&str> {
        self.tokens.iter().map(|t| t.surface()).collect()
    }

    /// Tokens joined by single spaces, exactly as stored.
    pub fn text(&self) -> String {
        self.surfaces().join(" ")
    }

    /// [`text`](Self::text) with the first letter upper-cased.
    pub fn capitalized(&self) -> String {
        capitalize_first(&self.text())
    }

    /// Token range of the top-level constituent at main-loop index `top`.
    pub fn block_of(&self, top: usize) -> Option<Range<usize>> {
        let start = self
            .tokens
            .iter()
            .position(|t| t.origin.as_ref().is_some_and(|o| o.top == top))?;
        let len = self.tokens[start..]
            .iter()
            .take_while(|t| t.origin.as_ref().is_some_and(|o| o.top == top))
            .count();
        Some(start..start + len)
    }

    /// Token range of the first top-level block with `role`.
    pub fn role_block(&self, role: Role) -> Option<Range<usize>> {
        let top = self
            .tokens
            .iter()
            .find_map(|t| t.origin.as_ref().filter(|o| o.role == role).map(|o| o.top))?;
        self.block_of(top)
    }

    /// Top-level constituents in the order their blocks appear.
    pub fn top_level_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = Vec::new();
        for o in self.tokens.iter().filter_map(|t| t.origin.as_ref()) {
            if seq.last() != Some(&o.top) {
                seq.push(o.top);
            }
        }
        seq
    }
}

pub fn capitalize_first(text: &str) -> String {
    let mut chars = text.chars();
    match chars.next() {
        Some(first) => first.to_uppercase().chain(chars).collect(),
        None => String::new(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinearizeError {
    #[error("structure `{0}` produced no tokens")]
    DegenerateStructure(String),
}

/// Index where a clausal loop is entered for `order`: the member whose role
/// comes first in the order. Object-initial orders start at the first object
/// clockwise from the subject; a loop without the initial role is entered at
/// the next role of the order.
pub fn clausal_start(l: &Loop, order: WordOrder) -> usize {
    let n = l.members.len();
    let subject = l.position_of(Role::Subject).unwrap_or(0);
    for role in order.roles() {
        let found = match role {
            Role::Object => (1..n)
                .map(|k| (subject + k) % n)
                .find(|&i| l.members[i].role == Role::Object),
            other => l.position_of(other),
        };
        if let Some(i) = found {
            return i;
        }
    }
    0
}

/// Member order for one loop under `order`.
pub fn loop_reading(l: &Loop, order: WordOrder) -> Vec<usize> {
    let n = l.members.len();
    let direction = order.direction();
    match l.kind {
        LoopKind::Clausal => visit_order(n, clausal_start(l, order), direction),
        LoopKind::Phrasal => match direction {
            // From the head onwards.
            Direction::Clockwise => visit_order(n, l.head_index, direction),
            // Backwards from the member before the head, ending on the head.
            Direction::Counterclockwise => visit_order(n, (l.head_index + n - 1) % n, direction),
        },
    }
}

/// Produces the token sequence for `s` under `profile`. Morpheme rules are
/// not applied here.
pub fn linearize(s: &Synapper, profile: &LanguageProfile) -> Result<LinearSentence, LinearizeError> {
    let mut out = Vec::with_capacity(s.token_count());
    let main = s.main();
    let order = profile.word_order;
    for i in loop_reading(main, order) {
        let member = &main.members[i];
        let mut emitter = Emitter {
            profile,
            top: i,
            role: member.role,
            out: &mut out,
        };
        emitter.constituent(member, &mut vec![i]);
    }
    if out.is_empty() {
        return Err(LinearizeError::DegenerateStructure(s.label().to_string()));
    }
    if let Some(verb) = main.position_of(Role::Verb) {
        move_verb(&mut out, verb, profile.verb_placement);
    }
    Ok(LinearSentence {
        tokens: out,
        word_order: order,
        profile_name: profile.name.clone(),
    })
}

struct Emitter<'a> {
    profile: &'a LanguageProfile,
    top: usize,
    role: Role,
    out: &'a mut Vec<LinearToken>,
}

impl Emitter<'_> {
    fn constituent(&mut self, c: &Constituent, path: &mut Vec<usize>) {
        let placement: Vec<_> = c.branches.iter().map(|b| self.profile.placement(b.category)).collect();

        for (ordinal, _) in placement.iter().enumerate().filter(|(_, r)| r.side == Side::Pre) {
            self.branch(c, ordinal, path);
        }

        match &c.content {
            Content::Node(tokens) => {
                for (k, t) in tokens.iter().enumerate() {
                    self.push(t, path, Part::Node(k));
                }
            }
            Content::Loop(inner) => {
                for i in loop_reading(inner, self.profile.word_order) {
                    path.push(i);
                    self.constituent(&inner.members[i], path);
                    path.pop();
                }
            }
        }

        let post = |order| {
            placement
                .iter()
                .enumerate()
                .filter(move |(_, r)| r.side == Side::Post && r.post_order == order)
                .map(|(ordinal, _)| ordinal)
        };
        let mirrored: Vec<_> = post(PostOrder::Reversed).collect();
        for &ordinal in mirrored.iter().rev() {
            self.branch(c, ordinal, path);
        }
        let kept: Vec<_> = post(PostOrder::SourceOrder).collect();
        for ordinal in kept {
            self.branch(c, ordinal, path);
        }
    }

    fn branch(&mut self, c: &Constituent, ordinal: usize, path: &[usize]) {
        for (index, t) in c.branches[ordinal].tokens.iter().enumerate() {
            self.push(t, path, Part::Branch { ordinal, index });
        }
    }

    fn push(&mut self, token: &Token, path: &[usize], part: Part) {
        self.out.push(LinearToken {
            token: token.clone(),
            origin: Some(Origin {
                top: self.top,
                role: self.role,
                slot: Slot {
                    members: path.to_vec(),
                    part,
                },
            }),
        });
    }
}

fn move_verb(tokens: &mut Vec<LinearToken>, verb_top: usize, placement: VerbPlacement) {
    let is_verb = |t: &LinearToken| t.origin.as_ref().is_some_and(|o| o.top == verb_top);
    let target = match placement {
        VerbPlacement::Default => return,
        VerbPlacement::V1 => 0,
        VerbPlacement::V2 => {
            // After the first block that is not the verb.
            let rest: Vec<_> = tokens.iter().filter(|t| !is_verb(t)).collect();
            let first = rest.first().and_then(|t| t.origin.as_ref()).map(|o| o.top);
            rest.iter()
                .take_while(|t| t.origin.as_ref().map(|o| o.top) == first)
                .count()
        }
    };
    let (verb, mut rest): (Vec<_>, Vec<_>) = tokens.drain(..).partition(|t| is_verb(t));
    let tail = rest.split_off(target.min(rest.len()));
    tokens.extend(rest);
    tokens.extend(verb);
    tokens.extend(tail);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::model::{Category, Constituent, Loop};

    fn text(s: &Synapper, p: &LanguageProfile) -> String {
        linearize(s, p).unwrap().text()
    }

    #[test]
    fn directions_follow_the_order() {
        assert_eq!(direction_of(WordOrder::Svo), Direction::Clockwise);
        assert_eq!(direction_of(WordOrder::Sov), Direction::Counterclockwise);
        assert_eq!(direction_of(WordOrder::Vso), Direction::Counterclockwise);
        assert_eq!(direction_of(WordOrder::Vos), Direction::Clockwise);
        assert_eq!(direction_of(WordOrder::Osv), Direction::Clockwise);
        assert_eq!(direction_of(WordOrder::Ovs), Direction::Counterclockwise);
    }

    #[test]
    fn visit_order_wraps() {
        assert_eq!(visit_order(4, 1, Direction::Clockwise), vec![1, 2, 3, 0]);
        assert_eq!(visit_order(4, 1, Direction::Counterclockwise), vec![1, 0, 3, 2]);
        assert_eq!(visit_order(1, 0, Direction::Counterclockwise), vec![0]);
    }

    #[test]
    fn horse_in_each_gloss_profile() {
        let h = fixtures::horse();
        assert_eq!(text(&h, &fixtures::profile("en")), "Jane has a very fast brown horse");
        assert_eq!(text(&h, &fixtures::profile("fr")), "Jane has a horse brown very fast");
        assert_eq!(
            text(&h, &fixtures::profile("ja-gloss")),
            "Jane a very fast brown horse has"
        );
        assert_eq!(
            text(&h, &fixtures::profile("cy-gloss")),
            "has Jane a horse brown very fast"
        );
    }

    #[test]
    fn tim_orders() {
        let t = fixtures::tim();
        assert_eq!(text(&t, &fixtures::profile("en")), "Tim is going to the hospital");
        assert_eq!(text(&t, &fixtures::profile("ja-gloss")), "Tim the hospital to going is");
        assert_eq!(text(&t, &fixtures::profile("vso")), "is Tim the hospital to going");
        assert_eq!(text(&t, &fixtures::profile("cy-gloss")), "is Tim going to the hospital");
    }

    #[test]
    fn colette_nested_loops_follow_the_main_direction() {
        let c = fixtures::colette();
        assert_eq!(
            text(&c, &fixtures::profile("en")),
            "the fact that Colette was Willy was a big secret"
        );
        assert_eq!(
            text(&c, &fixtures::profile("ja-gloss")),
            "Colette Willy was that the fact a big secret was"
        );
        assert_eq!(
            text(&c, &fixtures::profile("cy-gloss")),
            "was the fact that Colette was Willy a big secret"
        );
    }

    #[test]
    fn one_member_ring_reads_its_only_member() {
        // A phrasal ring of one member nested as the object.
        let main = Loop::clausal(vec![
            Constituent::word(Role::Subject, "you", Category::Pron),
            Constituent::word(Role::Verb, "see", Category::V),
            Constituent::nested(
                Role::Object,
                Loop::phrasal(0, vec![Constituent::word(Role::Object, "Go", Category::V)]),
            ),
        ]);
        let s = Synapper::new("go", WordOrder::Svo, main).unwrap();
        let inner = match &s.main().members[2].content {
            Content::Loop(l) => l,
            _ => unreachable!(),
        };
        for w in WordOrder::ALL {
            assert_eq!(loop_reading(inner, w), vec![0]);
        }
        let sov = text(&s, &LanguageProfile::gloss(WordOrder::Sov));
        assert_eq!(sov, "you Go see");
    }

    #[test]
    fn object_initial_orders_start_at_first_object_after_subject() {
        let h = fixtures::horse();
        assert_eq!(
            text(&h, &LanguageProfile::gloss(WordOrder::Osv)),
            "a very fast brown horse Jane has"
        );
        assert_eq!(
            text(&h, &LanguageProfile::gloss(WordOrder::Ovs)),
            "a very fast brown horse has Jane"
        );
        let t = fixtures::tim();
        // First object clockwise from the subject is "going".
        assert_eq!(
            text(&t, &LanguageProfile::gloss(WordOrder::Osv)),
            "going to the hospital Tim is"
        );
    }

    #[test]
    fn object_initial_without_objects_falls_back() {
        let main = Loop::clausal(vec![
            Constituent::word(Role::Subject, "Mary", Category::N),
            Constituent::word(Role::Verb, "sleeps", Category::V),
        ]);
        let s = Synapper::new("m", WordOrder::Svo, main).unwrap();
        assert_eq!(text(&s, &LanguageProfile::gloss(WordOrder::Osv)), "Mary sleeps");
        assert_eq!(text(&s, &LanguageProfile::gloss(WordOrder::Ovs)), "sleeps Mary");
    }

    #[test]
    fn v2_puts_the_verb_after_one_constituent() {
        let t = fixtures::tim();
        let p = LanguageProfile::gloss(WordOrder::Sov).with_verb_placement(VerbPlacement::V2);
        assert_eq!(text(&t, &p), "Tim is the hospital to going");
        let k = fixtures::korean_case();
        let lin = linearize(
            &k,
            &LanguageProfile::gloss(WordOrder::Sov).with_verb_placement(VerbPlacement::V2),
        )
        .unwrap();
        let seq = lin.top_level_sequence();
        assert_eq!(k.main().members[seq[1]].role, Role::Verb);
    }

    #[test]
    fn post_source_order_keeps_branch_order() {
        let h = fixtures::horse();
        let p = LanguageProfile::gloss(WordOrder::Svo)
            .with_branch_rule(crate::profile::BranchPlacementRule::post(
                Category::Adjp,
                PostOrder::SourceOrder,
            ))
            .with_branch_rule(crate::profile::BranchPlacementRule::post(
                Category::Adj,
                PostOrder::SourceOrder,
            ));
        assert_eq!(text(&h, &p), "Jane has a horse very fast brown");
    }

    #[test]
    fn blocks_are_contiguous() {
        let lin = linearize(&fixtures::colette(), &fixtures::profile("cy-gloss")).unwrap();
        assert_eq!(lin.role_block(Role::Verb), Some(0..1));
        assert_eq!(lin.role_block(Role::Subject), Some(1..7));
        assert_eq!(lin.top_level_sequence().len(), 3);
    }

    #[test]
    fn capitalization_touches_only_the_first_letter() {
        assert_eq!(capitalize_first("has Jane"), "Has Jane");
        assert_eq!(capitalize_first("élan"), "Élan");
        assert_eq!(capitalize_first(""), "");
    }
}
