mod common;

use proptest::prelude::*;

use common::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reading_is_a_permutation(s in synapper()) {
        prop_assert_eq!(check_permutation(&s), Ok(()));
    }

    #[test]
    fn opposite_directions_mirror_the_main_ring(s in synapper()) {
        prop_assert_eq!(check_direction_reversal(&s), Ok(()));
    }

    #[test]
    fn verb_movement_moves_one_block(s in synapper()) {
        prop_assert_eq!(check_verb_movement(&s), Ok(()));
    }

    #[test]
    fn questions_round_trip(s in synapper()) {
        prop_assert_eq!(check_question_round_trip(&s), Ok(()));
    }

    #[test]
    fn documents_round_trip(s in synapper()) {
        prop_assert_eq!(check_serialize_round_trip(&s), Ok(()));
    }

    #[test]
    fn equality_is_an_equivalence(s in synapper(), t in synapper()) {
        prop_assert_eq!(check_equality_laws(&s, &t), Ok(()));
    }

    #[test]
    fn canonical_form_agrees_with_equality(s in synapper(), t in synapper()) {
        prop_assert_eq!(check_canonical_agreement(&s, &t), Ok(()));
    }

    #[test]
    fn generated_structures_respect_the_bounds(s in synapper()) {
        prop_assert!(s.depth() <= MAX_DEPTH);
        fn widest(l: &synapper::Loop) -> usize {
            l.members.iter().filter_map(|m| match &m.content {
                synapper::Content::Loop(inner) => Some(widest(inner)),
                _ => None,
            }).chain([l.len()]).max().unwrap()
        }
        prop_assert!(widest(s.main()) <= MAX_RING);
    }
}

#[test]
fn sampling_is_reproducible() {
    assert_eq!(sample(5), sample(5));
}
