// One structure, six word orders.
//
// ```text
// cargo run --example word_orders
// ```

use std::error::Error;

use synapper::{fixtures, linearize, LanguageProfile, WordOrder};

pub fn run_example() -> Result<Vec<String>, Box<dyn Error>> {
    let tim = fixtures::tim();
    let mut lines = Vec::new();
    for order in WordOrder::ALL {
        let sentence = linearize(&tim, &LanguageProfile::gloss(order))?;
        lines.push(format!("{order} ({:?}): {}", order.direction(), sentence.text()));
    }
    Ok(lines)
}

fn main() -> Result<(), Box<dyn Error>> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
