// English to Uzbek: swap words on the structure, read it out SOV, then add
// the subject suffix.

use std::error::Error;

use synapper::translate::{apply_morpheme_rules_traced, substitute_lexemes};
use synapper::{fixtures, linearize, parse_lexicon, translate};

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let horse = fixtures::horse();
    let lexicon = parse_lexicon(fixtures::EN_UZ_TSV, "en-uz")?;
    let uz = fixtures::profile("uz");

    // Step by step.
    let swapped = substitute_lexemes(&horse, &lexicon)?;
    let read = linearize(&swapped, &uz)?;
    println!("substituted, read SOV: {}", read.text());
    let (done, effects) = apply_morpheme_rules_traced(&read, &uz);
    println!("after {} rule(s):      {}", effects.len(), done.text());

    // Or in one call.
    let sentence = translate(&horse, &lexicon, &uz)?;
    assert_eq!(sentence, done);
    Ok(sentence.capitalized())
}

fn main() -> Result<(), Box<dyn Error>> {
    println!("{}", run_example()?);
    Ok(())
}
