//! Random valid structures and the property checks run over them.

#![allow(dead_code)]

use std::collections::BTreeMap;

use proptest::prelude::*;
use proptest::sample::select;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

use synapper::fixtures;
use synapper::model::Slot;
use synapper::{
    apply_morpheme_rules, canonical_form, declarativize, interrogativize, linearize, parse_structure,
    serialize_structure, structural_equal, Branch, Category, Constituent, Content, LanguageProfile, Loop, LoopKind,
    Role, Synapper, Token, VerbPlacement, WhToken, WordOrder,
};

const WORDS: [&str; 10] = ["ant", "bee", "cat", "dog", "eel", "fox", "gnu", "hen", "owl", "yak"];
const CATEGORIES: [Category; 10] = [
    Category::N,
    Category::V,
    Category::Aux,
    Category::Adj,
    Category::Adv,
    Category::Det,
    Category::Pron,
    Category::Prep,
    Category::Adjp,
    Category::Other,
];

pub const MAX_RING: usize = 6;
pub const MAX_DEPTH: usize = 3;

fn token() -> impl Strategy<Value = Token> {
    (select(&WORDS[..]), select(&CATEGORIES[..])).prop_map(|(w, c)| Token::new(w, c))
}

fn branches() -> impl Strategy<Value = Vec<Branch>> {
    prop::collection::vec(
        (select(&CATEGORIES[..]), prop::collection::vec(token(), 1..=2)).prop_map(|(c, t)| Branch::new(c, t)),
        0..=2,
    )
}

fn member(role: Role, depth: usize) -> BoxedStrategy<Constituent> {
    let leaf = (prop::collection::vec(token(), 1..=3), branches())
        .prop_map(move |(tokens, branches)| Constituent {
            role,
            content: Content::Node(tokens),
            branches,
        })
        .boxed();
    if depth <= 1 {
        return leaf;
    }
    let nested = (any::<bool>(), branches())
        .prop_flat_map(move |(clausal, b)| (ring(depth - 1, clausal), Just(b)))
        .prop_map(move |(inner, branches)| Constituent {
            role,
            content: Content::Loop(inner),
            branches,
        })
        .boxed();
    prop_oneof![3 => leaf, 1 => nested].boxed()
}

/// A loop of at most `depth` levels, counting itself.
fn ring(depth: usize, clausal: bool) -> BoxedStrategy<Loop> {
    if clausal {
        (2..=MAX_RING)
            .prop_flat_map(|n| {
                let mut roles = vec![Role::Subject, Role::Verb];
                roles.resize(n, Role::Object);
                Just(roles).prop_shuffle()
            })
            .prop_flat_map(move |roles| roles.into_iter().map(|r| member(r, depth)).collect::<Vec<_>>())
            .prop_map(Loop::clausal)
            .boxed()
    } else {
        (1..=MAX_RING)
            .prop_flat_map(move |n| (prop::collection::vec(member(Role::Object, depth), n), 0..n))
            .prop_map(|(members, head)| Loop::phrasal(head, members))
            .boxed()
    }
}

/// Valid structures with rings of up to six members and up to three levels
/// of loops.
pub fn synapper() -> impl Strategy<Value = Synapper> {
    (ring(MAX_DEPTH, true), select(&WordOrder::ALL[..]), any::<bool>()).prop_map(|(main, order, flag)| {
        Synapper::new("random", order, main)
            .expect("generator only builds valid structures")
            .with_surface_subject_final(flag)
    })
}

/// `count` structures from a fixed seed.
pub fn sample(count: usize) -> Vec<Synapper> {
    let mut runner = TestRunner::deterministic();
    let strategy = synapper();
    (0..count)
        .map(|_| {
            strategy
                .new_tree(&mut runner)
                .expect("strategy never rejects")
                .current()
        })
        .collect()
}

/// Copy of `s` with every loop stored from a different starting member.
pub fn rotated(s: &Synapper, k: usize) -> Synapper {
    Synapper::new(s.label(), s.source_word_order(), rotate_loop(s.main(), k))
        .unwrap()
        .with_surface_subject_final(s.surface_subject_final())
}

fn rotate_loop(l: &Loop, k: usize) -> Loop {
    let n = l.members.len();
    let shift = k % n;
    let mut members: Vec<Constituent> = l
        .members
        .iter()
        .map(|m| Constituent {
            role: m.role,
            content: match &m.content {
                Content::Loop(inner) => Content::Loop(rotate_loop(inner, k + 1)),
                node => node.clone(),
            },
            branches: m.branches.clone(),
        })
        .collect();
    members.rotate_left(shift);
    match l.kind {
        LoopKind::Clausal => Loop::clausal(members),
        LoopKind::Phrasal => Loop::phrasal((l.head_index + n - shift) % n, members),
    }
}

/// Copy of `s` with its first token's surface changed.
pub fn perturbed(s: &Synapper) -> Synapper {
    let mut first = true;
    s.map_tokens(|_, t| {
        let surface = if std::mem::take(&mut first) {
            format!("{}x", t.surface)
        } else {
            t.surface.clone()
        };
        Token::new(surface, t.category)
    })
    .unwrap()
}

/// Profiles exercised by the properties: a plain one per order plus every
/// bundled profile.
pub fn profiles() -> Vec<LanguageProfile> {
    let mut out: Vec<_> = WordOrder::ALL.into_iter().map(LanguageProfile::gloss).collect();
    out.extend(fixtures::PROFILE_NAMES.iter().map(|n| fixtures::profile(n)));
    out
}

fn slot_multiset<'a>(slots: impl Iterator<Item = &'a Slot>) -> BTreeMap<&'a Slot, usize> {
    let mut m = BTreeMap::new();
    for s in slots {
        *m.entry(s).or_insert(0) += 1;
    }
    m
}

/// Every stored token appears exactly once in the reading, whatever the
/// profile, as long as nothing is dropped or inserted.
pub fn check_permutation(s: &Synapper) -> Result<(), String> {
    let stored = s.tokens();
    let expected = slot_multiset(stored.iter().map(|(slot, _)| slot));
    for p in profiles() {
        let lin = linearize(s, &p).map_err(|e| e.to_string())?;
        let ruled;
        let out = if p.has_drop_or_insert_rules() {
            &lin
        } else {
            ruled = apply_morpheme_rules(&lin, &p);
            &ruled
        };
        let slots: Vec<&Slot> = out
            .tokens
            .iter()
            .filter_map(|t| t.origin.as_ref().map(|o| &o.slot))
            .collect();
        if slots.len() != out.len() || slot_multiset(slots.into_iter()) != expected {
            return Err(format!("{}: reading is not a permutation of the stored tokens", p.name));
        }
        let mut a: Vec<&Token> = lin.tokens.iter().map(|t| &t.token).collect();
        let mut b: Vec<&Token> = stored.iter().map(|(_, t)| *t).collect();
        a.sort_by(|x, y| (&x.surface, x.category).cmp(&(&y.surface, y.category)));
        b.sort_by(|x, y| (&x.surface, x.category).cmp(&(&y.surface, y.category)));
        if a != b {
            return Err(format!("{}: token multiset changed", p.name));
        }
    }
    Ok(())
}

/// Orders that share a starting constituent but flow in opposite directions
/// read the main ring as mirror images after the first block. Without an
/// object the two object-initial orders start on different roles, so that
/// pair only applies when one exists.
pub fn check_direction_reversal(s: &Synapper) -> Result<(), String> {
    let mut pairs = vec![(WordOrder::Svo, WordOrder::Sov), (WordOrder::Vos, WordOrder::Vso)];
    if s.main().position_of(Role::Object).is_some() {
        pairs.push((WordOrder::Osv, WordOrder::Ovs));
    }
    for (a, b) in pairs {
        let seq = |w| linearize(s, &LanguageProfile::gloss(w)).map(|l| l.top_level_sequence());
        let x = seq(a).map_err(|e| e.to_string())?;
        let y = seq(b).map_err(|e| e.to_string())?;
        let mut mirrored = vec![x[0]];
        mirrored.extend(x[1..].iter().rev());
        if y != mirrored {
            return Err(format!("{a} {x:?} vs {b} {y:?}"));
        }
    }
    Ok(())
}

/// V1 output is the verb block followed by the default reading with that
/// block removed; V2 puts it after the first block instead.
pub fn check_verb_movement(s: &Synapper) -> Result<(), String> {
    let verb = s.main().position_of(Role::Verb).unwrap();
    for w in WordOrder::ALL {
        let base = LanguageProfile::gloss(w);
        let plain = linearize(s, &base).map_err(|e| e.to_string())?;
        let block = plain.block_of(verb).unwrap();
        let verb_tokens = &plain.tokens[block.clone()];
        let mut rest = plain.tokens.clone();
        rest.drain(block);

        let mut v1 = verb_tokens.to_vec();
        v1.extend(rest.iter().cloned());
        let got = linearize(s, &base.clone().with_verb_placement(VerbPlacement::V1)).map_err(|e| e.to_string())?;
        if got.tokens != v1 {
            return Err(format!("{w}+V1: {} vs {}", got.text(), plain.text()));
        }

        let first_len = {
            let first = rest[0].origin.as_ref().unwrap().top;
            rest.iter()
                .take_while(|t| t.origin.as_ref().unwrap().top == first)
                .count()
        };
        let mut v2 = rest[..first_len].to_vec();
        v2.extend(verb_tokens.iter().cloned());
        v2.extend(rest[first_len..].iter().cloned());
        let got = linearize(s, &base.with_verb_placement(VerbPlacement::V2)).map_err(|e| e.to_string())?;
        if got.tokens != v2 {
            return Err(format!("{w}+V2: {} vs {}", got.text(), plain.text()));
        }
    }
    Ok(())
}

pub fn check_question_round_trip(s: &Synapper) -> Result<(), String> {
    let wh = WhToken::word("why");
    for p in profiles() {
        let q = interrogativize(s, &wh, &p).map_err(|e| format!("{}: {e}", p.name))?;
        let plain = linearize(s, &p).map_err(|e| e.to_string())?;
        let mut with_wh: Vec<&str> = plain.surfaces();
        with_wh.push("why");
        let mut got = q.surfaces();
        with_wh.sort_unstable();
        got.sort_unstable();
        if got != with_wh {
            return Err(format!("{}: question is not the reading plus one word", p.name));
        }
        let back = declarativize(&q, s, &p).map_err(|e| format!("{}: {e}", p.name))?;
        if !structural_equal(&back, s) {
            return Err(format!("{}: round trip changed the structure", p.name));
        }
    }
    Ok(())
}

pub fn check_serialize_round_trip(s: &Synapper) -> Result<(), String> {
    let text = serialize_structure(s);
    if text != serialize_structure(s) {
        return Err("serialization is not deterministic".into());
    }
    let back = parse_structure(&text).map_err(|e| e.to_string())?;
    if !structural_equal(&back, s) || back != *s {
        return Err("parse(serialize(s)) differs".into());
    }
    Ok(())
}

pub fn check_equality_laws(s: &Synapper, other: &Synapper) -> Result<(), String> {
    let r1 = rotated(s, 1);
    let r2 = rotated(s, 2);
    let all = [s, &r1, &r2, other];
    for a in all {
        if !structural_equal(a, a) {
            return Err("not reflexive".into());
        }
        for b in all {
            if structural_equal(a, b) != structural_equal(b, a) {
                return Err("not symmetric".into());
            }
            for c in all {
                if structural_equal(a, b) && structural_equal(b, c) && !structural_equal(a, c) {
                    return Err("not transitive".into());
                }
            }
        }
    }
    if !structural_equal(s, &r1) || !structural_equal(s, &r2) {
        return Err("rotation changed equality".into());
    }
    if structural_equal(s, &perturbed(s)) {
        return Err("a changed surface went unnoticed".into());
    }
    Ok(())
}

pub fn check_canonical_agreement(s: &Synapper, other: &Synapper) -> Result<(), String> {
    let candidates = [rotated(s, 1), rotated(s, 3), perturbed(s), other.clone()];
    for t in &candidates {
        if structural_equal(s, t) != (canonical_form(s) == canonical_form(t)) {
            return Err(format!("disagreement:\n{}\n{}", canonical_form(s), canonical_form(t)));
        }
    }
    Ok(())
}

/// Every property over one structure and a second, unrelated one.
pub fn check_all(s: &Synapper, other: &Synapper) -> Result<(), String> {
    check_permutation(s).map_err(|e| format!("permutation: {e}"))?;
    check_direction_reversal(s).map_err(|e| format!("direction: {e}"))?;
    check_verb_movement(s).map_err(|e| format!("verb movement: {e}"))?;
    check_question_round_trip(s).map_err(|e| format!("question round trip: {e}"))?;
    check_serialize_round_trip(s).map_err(|e| format!("serialize round trip: {e}"))?;
    check_equality_laws(s, other).map_err(|e| format!("equality laws: {e}"))?;
    check_canonical_agreement(s, other).map_err(|e| format!("canonical form: {e}"))?;
    Ok(())
}
