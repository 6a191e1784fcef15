//! Every example runs and prints what its doc comment promises.

macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/examples/",
                stringify!($name),
                ".rs"
            ));
        }
    };
}

example!(word_orders);
example!(gloss_languages);
example!(interrogatives);
example!(recursion);
example!(ambiguity);
example!(uzbek_translation);
example!(korean_case);
example!(chance);
example!(dot_export);
example!(build_from_code);

#[test]
fn word_orders_lists_six() {
    let lines = word_orders::run_example().unwrap();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[1], "SOV (Counterclockwise): Tim the hospital to going is");
}

#[test]
fn gloss_languages_match_the_reference_glosses() {
    let out = gloss_languages::run_example().unwrap();
    assert_eq!(
        out[4],
        ("cy-gloss".to_string(), "Has Jane horse brown very fast".to_string())
    );
}

#[test]
fn interrogatives_round_trip() {
    let lines = interrogatives::run_example().unwrap();
    assert_eq!(
        lines[2],
        "ja-gloss: Why Tim the hospital to going is -> Tim the hospital to going is"
    );
}

#[test]
fn recursion_reads_three_ways() {
    assert_eq!(
        recursion::run_example().unwrap(),
        [
            "The fact that Colette was Willy was a big secret",
            "Colette Willy was that fact a big secret was",
            "Was the fact that Colette was Willy a big secret",
        ]
    );
}

#[test]
fn ambiguity_is_structural() {
    assert!(!ambiguity::run_example().unwrap());
}

#[test]
fn uzbek() {
    assert_eq!(
        uzbek_translation::run_example().unwrap(),
        "Janeda bir juda tez jigarrang ot bor"
    );
}

#[test]
fn korean_case_counts() {
    assert_eq!(korean_case::run_example().unwrap(), (43, 62));
}

#[test]
fn chance_table() {
    let lines = chance::run_example().unwrap();
    assert_eq!(lines[2], "n = 10: 2.755732e-7 (1/3628800)");
    assert!(lines[5].starts_with("n = 500: 10^-1134."));
}

#[test]
fn dot_has_clusters() {
    assert_eq!(dot_export::run_example().matches("subgraph").count(), 2);
}

#[test]
fn built_structure_serializes() {
    let json = build_from_code::run_example().unwrap();
    assert!(json.contains("\"dark\""));
}
