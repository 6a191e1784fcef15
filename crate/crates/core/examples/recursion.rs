// A clause inside a phrase inside a clause. Every loop is read in the
// direction of the main one, so a single word order covers the whole
// sentence.

use std::error::Error;

use synapper::{apply_morpheme_rules, fixtures, linearize};

pub fn run_example() -> Result<Vec<String>, Box<dyn Error>> {
    let colette = fixtures::colette();
    println!("depth {}", colette.depth());
    ["en", "ja-gloss", "cy-gloss"]
        .into_iter()
        .map(|name| {
            let p = fixtures::profile(name);
            Ok(apply_morpheme_rules(&linearize(&colette, &p)?, &p).capitalized())
        })
        .collect()
}

fn main() -> Result<(), Box<dyn Error>> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
