//! Bundled example structures, language profiles and the en-uz lexicon.
//! The same files live under `fixtures/`, `profiles/` and `lexicons/` for
//! use from the command line.

use crate::format::{parse_profile, parse_structure};
use crate::model::Synapper;
use crate::profile::LanguageProfile;

pub const HORSE_JSON: &str = include_str!("../fixtures/horse.json");
pub const TIM_JSON: &str = include_str!("../fixtures/tim.json");
pub const COLETTE_JSON: &str = include_str!("../fixtures/colette.json");
pub const CENA_A_JSON: &str = include_str!("../fixtures/cena_a.json");
pub const CENA_B_JSON: &str = include_str!("../fixtures/cena_b.json");
pub const MARY_JSON: &str = include_str!("../fixtures/mary.json");
pub const KOREAN_CASE_JSON: &str = include_str!("../fixtures/korean_case.json");
pub const BAD_TWO_SUBJECTS_JSON: &str = include_str!("../fixtures/bad_two_subjects.json");
pub const BAD_EMPTY_PHRASAL_JSON: &str = include_str!("../fixtures/bad_empty_phrasal.json");

pub const EN_UZ_TSV: &str = include_str!("../lexicons/en-uz.tsv");

pub const PROFILE_NAMES: [&str; 10] = [
    "en",
    "fr",
    "ja-gloss",
    "uz-gloss",
    "uz",
    "cy-gloss",
    "vso",
    "ko-gloss",
    "de-gloss",
    "en-korean-case",
];

/// Profile document text by name; panics on an unknown name.
pub fn profile_text(name: &str) -> &'static str {
    match name {
        "en" => include_str!("../profiles/en.json"),
        "fr" => include_str!("../profiles/fr.json"),
        "ja-gloss" => include_str!("../profiles/ja-gloss.json"),
        "uz-gloss" => include_str!("../profiles/uz-gloss.json"),
        "uz" => include_str!("../profiles/uz.json"),
        "cy-gloss" => include_str!("../profiles/cy-gloss.json"),
        "vso" => include_str!("../profiles/vso.json"),
        "ko-gloss" => include_str!("../profiles/ko-gloss.json"),
        "de-gloss" => include_str!("../profiles/de-gloss.json"),
        "en-korean-case" => include_str!("../profiles/en-korean-case.json"),
        other => panic!("no bundled profile `{other}`"),
    }
}

pub fn profile(name: &str) -> LanguageProfile {
    parse_profile(profile_text(name)).expect("bundled profiles parse")
}

fn load(text: &str) -> Synapper {
    parse_structure(text).expect("bundled fixtures are valid")
}

/// "Jane has a very fast brown horse".
pub fn horse() -> Synapper {
    load(HORSE_JSON)
}

/// "Tim is going to the hospital".
pub fn tim() -> Synapper {
    load(TIM_JSON)
}

/// "The fact that Colette was Willy was a big secret": a clause inside a
/// phrase inside the main clause.
pub fn colette() -> Synapper {
    load(COLETTE_JSON)
}

/// "John Cena surprises 7-year-old boy with cancer on his birthday", one
/// reading.
pub fn cena_a() -> Synapper {
    load(CENA_A_JSON)
}

/// The other reading of the same words: a structure that differs from
/// [`cena_a`] but reads out identically in English.
pub fn cena_b() -> Synapper {
    load(CENA_B_JSON)
}

/// "Mary loves chocolate" as written in a subject-final surface form.
pub fn mary() -> Synapper {
    load(MARY_JSON)
}

/// The 43-token news sentence about a launch licence, subject surface-final.
pub fn korean_case() -> Synapper {
    load(KOREAN_CASE_JSON)
}

/// Every valid bundled structure.
pub fn all() -> Vec<Synapper> {
    vec![horse(), tim(), colette(), cena_a(), cena_b(), mary(), korean_case()]
}
