// A long news sentence whose subject sits at the end of the source text.
// The structure is order-neutral, so translation reads it out SVO and then
// inserts the English function words.

use std::error::Error;

use synapper::translate::apply_morpheme_rules_traced;
use synapper::{fixtures, linearize, normalize_subject_position, translate, Lexicon};

pub fn run_example() -> Result<(usize, usize), Box<dyn Error>> {
    let k = fixtures::korean_case();
    println!("subject written last: {}", k.surface_subject_final());
    let normalized = normalize_subject_position(&k);

    let plain = translate(&k, &Lexicon::identity(), &fixtures::profile("en"))?;
    println!("{} words: {}", plain.len(), plain.text());

    let profile = fixtures::profile("en-korean-case");
    let (full, effects) = apply_morpheme_rules_traced(&linearize(&normalized, &profile)?, &profile);
    let inserted: usize = effects.iter().map(|e| e.inserted).sum();
    println!("{} words ({inserted} inserted): {}", full.len(), full.text());
    Ok((plain.len(), full.len()))
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()?;
    Ok(())
}
