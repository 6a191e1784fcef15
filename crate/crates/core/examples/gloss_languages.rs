// The horse sentence under the bundled language profiles: branch placement,
// verb-first movement and article dropping all come from the profile.

use std::error::Error;

use synapper::{apply_morpheme_rules, fixtures, linearize};

pub fn run_example() -> Result<Vec<(String, String)>, Box<dyn Error>> {
    let horse = fixtures::horse();
    let mut out = Vec::new();
    for name in ["en", "fr", "ja-gloss", "uz-gloss", "cy-gloss"] {
        let profile = fixtures::profile(name);
        let read = linearize(&horse, &profile)?;
        out.push((name.to_string(), apply_morpheme_rules(&read, &profile).capitalized()));
    }
    Ok(out)
}

fn main() -> Result<(), Box<dyn Error>> {
    for (name, sentence) in run_example()? {
        println!("{name:>9}  {sentence}");
    }
    Ok(())
}
