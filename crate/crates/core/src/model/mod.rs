//! The synapper graph: constituents arranged on a closed main loop, with
//! branches hanging off nodes and nested loops standing in for embedded
//! phrases and clauses.
//!
//! Loops store their members in clockwise order. A ring has no inherent
//! first element; clausal loops are entered by role and phrasal loops at
//! their head member.

mod build;
mod equality;
mod validate;

use std::fmt;
use std::str::FromStr;

pub use build::build_synapper;
pub use equality::{canonical_form, structural_equal};
pub use validate::{ValidationErrors, Violation, ViolationKind};

/// One of the six orderings of subject, verb and object.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WordOrder {
    Svo,
    Sov,
    Vso,
    Vos,
    Osv,
    Ovs,
}

impl WordOrder {
    pub const ALL: [WordOrder; 6] = [
        WordOrder::Svo,
        WordOrder::Sov,
        WordOrder::Vso,
        WordOrder::Vos,
        WordOrder::Osv,
        WordOrder::Ovs,
    ];

    /// The three roles in surface order.
    pub fn roles(self) -> [Role; 3] {
        use Role::*;
        match self {
            WordOrder::Svo => [Subject, Verb, Object],
            WordOrder::Sov => [Subject, Object, Verb],
            WordOrder::Vso => [Verb, Subject, Object],
            WordOrder::Vos => [Verb, Object, Subject],
            WordOrder::Osv => [Object, Subject, Verb],
            WordOrder::Ovs => [Object, Verb, Subject],
        }
    }

    pub fn initial_role(self) -> Role {
        self.roles()[0]
    }

    pub fn direction(self) -> Direction {
        match self {
            WordOrder::Svo | WordOrder::Vos | WordOrder::Osv => Direction::Clockwise,
            WordOrder::Sov | WordOrder::Ovs | WordOrder::Vso => Direction::Counterclockwise,
        }
    }

    pub fn code(self) -> &'static str {
        match self {
            WordOrder::Svo => "SVO",
            WordOrder::Sov => "SOV",
            WordOrder::Vso => "VSO",
            WordOrder::Vos => "VOS",
            WordOrder::Osv => "OSV",
            WordOrder::Ovs => "OVS",
        }
    }
}

impl fmt::Display for WordOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown word order `{0}`")]
pub struct UnknownWordOrder(pub String);

impl FromStr for WordOrder {
    type Err = UnknownWordOrder;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        WordOrder::ALL
            .into_iter()
            .find(|w| w.code() == s)
            .ok_or_else(|| UnknownWordOrder(s.to_string()))
    }
}

/// Direction of flow around a loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Clockwise,
    Counterclockwise,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    Subject,
    Verb,
    Object,
}

impl Role {
    pub fn name(self) -> &'static str {
        match self {
            Role::Subject => "subject",
            Role::Verb => "verb",
            Role::Object => "object",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Role {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "subject" => Ok(Role::Subject),
            "verb" => Ok(Role::Verb),
            "object" => Ok(Role::Object),
            other => Err(other.to_string()),
        }
    }
}

/// Lexical category tag carried by every token and branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Category {
    N,
    V,
    Aux,
    Adj,
    Adv,
    Det,
    Pron,
    Prep,
    Wh,
    Adjp,
    Other,
}

impl Category {
    pub const ALL: [Category; 11] = [
        Category::N,
        Category::V,
        Category::Aux,
        Category::Adj,
        Category::Adv,
        Category::Det,
        Category::Pron,
        Category::Prep,
        Category::Wh,
        Category::Adjp,
        Category::Other,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Category::N => "N",
            Category::V => "V",
            Category::Aux => "AUX",
            Category::Adj => "ADJ",
            Category::Adv => "ADV",
            Category::Det => "DET",
            Category::Pron => "PRON",
            Category::Prep => "PREP",
            Category::Wh => "WH",
            Category::Adjp => "ADJP",
            Category::Other => "OTHER",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Category {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Category::ALL
            .into_iter()
            .find(|c| c.tag() == s)
            .ok_or_else(|| s.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Token {
    pub surface: String,
    pub category: Category,
}

impl Token {
    pub fn new(surface: impl Into<String>, category: Category) -> Self {
        Token {
            surface: surface.into(),
            category,
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.surface)
    }
}

/// A token group attached to one node from another dimension. Its ordinal is
/// its index in the owning constituent's branch list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch {
    pub tokens: Vec<Token>,
    pub category: Category,
}

impl Branch {
    pub fn new(category: Category, tokens: Vec<Token>) -> Self {
        Branch { tokens, category }
    }

    pub fn word(surface: &str, category: Category) -> Self {
        Branch::new(category, vec![Token::new(surface, category)])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Content {
    Node(Vec<Token>),
    Loop(Loop),
}

/// A node (or an embedded loop) together with its branches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constituent {
    pub role: Role,
    pub content: Content,
    pub branches: Vec<Branch>,
}

impl Constituent {
    pub fn node(role: Role, tokens: Vec<Token>) -> Self {
        Constituent {
            role,
            content: Content::Node(tokens),
            branches: Vec::new(),
        }
    }

    /// A single-word node.
    pub fn word(role: Role, surface: &str, category: Category) -> Self {
        Constituent::node(role, vec![Token::new(surface, category)])
    }

    pub fn nested(role: Role, inner: Loop) -> Self {
        Constituent {
            role,
            content: Content::Loop(inner),
            branches: Vec::new(),
        }
    }

    pub fn with_branch(mut self, branch: Branch) -> Self {
        self.branches.push(branch);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LoopKind {
    /// Members carry subject/verb/object roles.
    Clausal,
    /// A roleless ring entered at its head member.
    Phrasal,
}

impl LoopKind {
    pub fn name(self) -> &'static str {
        match self {
            LoopKind::Clausal => "clausal",
            LoopKind::Phrasal => "phrasal",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Loop {
    pub kind: LoopKind,
    /// Members in clockwise order.
    pub members: Vec<Constituent>,
    /// Entry member of a phrasal loop. Always 0 for clausal loops.
    pub head_index: usize,
}

impl Loop {
    pub fn clausal(members: Vec<Constituent>) -> Self {
        Loop {
            kind: LoopKind::Clausal,
            members,
            head_index: 0,
        }
    }

    pub fn phrasal(head_index: usize, members: Vec<Constituent>) -> Self {
        Loop {
            kind: LoopKind::Phrasal,
            members,
            head_index,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn position_of(&self, role: Role) -> Option<usize> {
        self.members.iter().position(|m| m.role == role)
    }

    /// Index of the member a reading of this loop is anchored on: the subject
    /// for clausal loops, the head for phrasal ones.
    pub fn anchor(&self) -> usize {
        match self.kind {
            LoopKind::Clausal => self.position_of(Role::Subject).unwrap_or(0),
            LoopKind::Phrasal => self.head_index,
        }
    }
}

/// Location of a single token inside a synapper.
///
/// `members` descends through loops: `[2]` is member 2 of the main loop,
/// `[2, 0]` is member 0 of the loop nested in it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub members: Vec<usize>,
    pub part: Part,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    Node(usize),
    Branch { ordinal: usize, index: usize },
}

impl Slot {
    pub fn is_branch(&self) -> bool {
        matches!(self.part, Part::Branch { .. })
    }
}

/// A validated sentence structure. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Synapper {
    main: Loop,
    source_word_order: WordOrder,
    surface_subject_final: bool,
    label: String,
}

impl Synapper {
    /// Validates `main` and wraps it. Every violation is reported, not just
    /// the first.
    pub fn new(label: impl Into<String>, source_word_order: WordOrder, main: Loop) -> Result<Self, ValidationErrors> {
        validate::check_main(&main)?;
        Ok(Synapper {
            main,
            source_word_order,
            surface_subject_final: false,
            label: label.into(),
        })
    }

    pub fn main(&self) -> &Loop {
        &self.main
    }

    pub fn source_word_order(&self) -> WordOrder {
        self.source_word_order
    }

    pub fn surface_subject_final(&self) -> bool {
        self.surface_subject_final
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn with_surface_subject_final(mut self, flag: bool) -> Self {
        self.surface_subject_final = flag;
        self
    }

    /// All tokens with their slots, in storage order (each token once).
    pub fn tokens(&self) -> Vec<(Slot, &Token)> {
        let mut out = Vec::new();
        collect_tokens(&self.main, &mut Vec::new(), &mut out);
        out
    }

    pub fn token_count(&self) -> usize {
        self.tokens().len()
    }

    /// Deepest loop nesting; the main loop alone is depth 1.
    pub fn depth(&self) -> usize {
        loop_depth(&self.main)
    }

    /// Rebuilds the structure with every token passed through `f`, keeping
    /// the shape intact. The result is validated again.
    pub fn map_tokens<F>(&self, mut f: F) -> Result<Synapper, ValidationErrors>
    where
        F: FnMut(&Slot, &Token) -> Token,
    {
        let main = map_loop(&self.main, &mut Vec::new(), &mut f);
        let mut s = Synapper::new(self.label.clone(), self.source_word_order, main)?;
        s.surface_subject_final = self.surface_subject_final;
        Ok(s)
    }
}

fn collect_tokens<'a>(l: &'a Loop, path: &mut Vec<usize>, out: &mut Vec<(Slot, &'a Token)>) {
    for (i, m) in l.members.iter().enumerate() {
        path.push(i);
        match &m.content {
            Content::Node(tokens) => {
                for (k, t) in tokens.iter().enumerate() {
                    let slot = Slot {
                        members: path.clone(),
                        part: Part::Node(k),
                    };
                    out.push((slot, t));
                }
            }
            Content::Loop(inner) => collect_tokens(inner, path, out),
        }
        for (ordinal, b) in m.branches.iter().enumerate() {
            for (index, t) in b.tokens.iter().enumerate() {
                let slot = Slot {
                    members: path.clone(),
                    part: Part::Branch { ordinal, index },
                };
                out.push((slot, t));
            }
        }
        path.pop();
    }
}

fn loop_depth(l: &Loop) -> usize {
    1 + l
        .members
        .iter()
        .map(|m| match &m.content {
            Content::Loop(inner) => loop_depth(inner),
            Content::Node(_) => 0,
        })
        .max()
        .unwrap_or(0)
}

fn map_loop<F>(l: &Loop, path: &mut Vec<usize>, f: &mut F) -> Loop
where
    F: FnMut(&Slot, &Token) -> Token,
{
    let members = l
        .members
        .iter()
        .enumerate()
        .map(|(i, m)| {
            path.push(i);
            let content = match &m.content {
                Content::Node(tokens) => Content::Node(
                    tokens
                        .iter()
                        .enumerate()
                        .map(|(k, t)| {
                            let slot = Slot {
                                members: path.clone(),
                                part: Part::Node(k),
                            };
                            f(&slot, t)
                        })
                        .collect(),
                ),
                Content::Loop(inner) => Content::Loop(map_loop(inner, path, f)),
            };
            let branches = m
                .branches
                .iter()
                .enumerate()
                .map(|(ordinal, b)| Branch {
                    category: b.category,
                    tokens: b
                        .tokens
                        .iter()
                        .enumerate()
                        .map(|(index, t)| {
                            let slot = Slot {
                                members: path.clone(),
                                part: Part::Branch { ordinal, index },
                            };
                            f(&slot, t)
                        })
                        .collect(),
                })
                .collect();
            path.pop();
            Constituent {
                role: m.role,
                content,
                branches,
            }
        })
        .collect();
    Loop {
        kind: l.kind,
        members,
        head_index: l.head_index,
    }
}
