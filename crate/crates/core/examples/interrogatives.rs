// Asking "why" in three languages and recovering the statement again.

use std::error::Error;

use synapper::{declarativize, fixtures, interrogativize, linearize, structural_equal, WhToken};

pub fn run_example() -> Result<Vec<String>, Box<dyn Error>> {
    let tim = fixtures::tim();
    let why = WhToken::word("why");
    let mut lines = Vec::new();
    for name in ["en", "cy-gloss", "ja-gloss"] {
        let profile = fixtures::profile(name);
        let question = interrogativize(&tim, &why, &profile)?;
        let statement = declarativize(&question, &tim, &profile)?;
        assert!(structural_equal(&statement, &tim));
        lines.push(format!(
            "{name}: {} -> {}",
            question.capitalized(),
            linearize(&statement, &profile)?.capitalized()
        ));
    }
    Ok(lines)
}

fn main() -> Result<(), Box<dyn Error>> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
