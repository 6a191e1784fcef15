// How likely is a different word order to put every word in the right
// place by accident?

use synapper::{chance_probability, log10_chance, ChanceError};

pub fn run_example() -> Result<Vec<String>, ChanceError> {
    let mut lines = Vec::new();
    for n in [2, 4, 10, 15, 20] {
        lines.push(format!("n = {n:>2}: {}", chance_probability(n)?));
    }
    // Well past f64 range the logarithm still works.
    lines.push(format!("n = 500: 10^{:.1}", log10_chance(500)?));
    Ok(lines)
}

fn main() -> Result<(), ChanceError> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
