// Two structures, one English sentence.

use std::error::Error;

use synapper::{canonical_form, fixtures, linearize, structural_equal};

pub fn run_example() -> Result<bool, Box<dyn Error>> {
    let (a, b) = (fixtures::cena_a(), fixtures::cena_b());
    let en = fixtures::profile("en");
    println!("a: {}", linearize(&a, &en)?.text());
    println!("b: {}", linearize(&b, &en)?.text());
    println!("a: {}", canonical_form(&a));
    println!("b: {}", canonical_form(&b));
    Ok(structural_equal(&a, &b))
}

fn main() -> Result<(), Box<dyn Error>> {
    let same = run_example()?;
    println!("{}", if same { "SAME" } else { "DIFFERENT" });
    Ok(())
}
