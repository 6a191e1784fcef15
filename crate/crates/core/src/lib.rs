//! Closed-loop sentence structures ("synappers").
//!
//! A sentence is stored as a ring of constituents with no built-in first
//! element. Reading the ring clockwise or counterclockwise from the right
//! starting point gives any of the six basic word orders, so one structure
//! serves every language that shares it. On top of that this crate provides
//! question formation, lexeme substitution with morpheme rewriting,
//! canonical comparison, JSON/TSV/DOT formats and a small CLI.
//!
//! ```
//! use synapper::{fixtures, linearize, LanguageProfile, WordOrder};
//!
//! let horse = fixtures::horse();
//! let sov = linearize(&horse, &LanguageProfile::gloss(WordOrder::Sov)).unwrap();
//! assert_eq!(sov.text(), "Jane a very fast brown horse has");
//! ```

pub mod chance;
pub mod cli;
pub mod fixtures;
pub mod format;
pub mod linearize;
pub mod model;
pub mod profile;
pub mod transform;
pub mod translate;

pub use chance::{chance_probability, log10_chance, ChanceError, ChanceProbability};
pub use format::{parse_lexicon, parse_profile, parse_structure, serialize_structure, to_dot, FormatError};
pub use linearize::{linearize, LinearSentence, LinearToken, LinearizeError, Origin};
pub use model::{
    build_synapper, canonical_form, structural_equal, Branch, Category, Constituent, Content, Direction, Loop,
    LoopKind, Role, Synapper, Token, ValidationErrors, Violation, ViolationKind, WordOrder,
};
pub use profile::{
    BranchPlacementRule, LanguageProfile, MorphemeRule, PostOrder, RuleKind, Selector, Side, VerbPlacement, WhRule,
};
pub use transform::{declarativize, interrogativize, normalize_subject_position, TransformError, WhToken};
pub use translate::{apply_morpheme_rules, substitute_lexemes, translate, Lexicon, TranslateError};
