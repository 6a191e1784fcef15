// Building a structure by hand instead of loading a document, then writing
// it out as JSON.

use std::error::Error;

use synapper::{
    linearize, parse_structure, serialize_structure, structural_equal, Branch, BranchPlacementRule, Category,
    Constituent, LanguageProfile, Loop, PostOrder, Role, Synapper, WordOrder,
};

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let main = Loop::clausal(vec![
        Constituent::word(Role::Subject, "Mary", Category::N),
        Constituent::word(Role::Verb, "loves", Category::V),
        Constituent::word(Role::Object, "chocolate", Category::N).with_branch(Branch::word("dark", Category::Adj)),
    ]);
    let mary = Synapper::new("mary", WordOrder::Svo, main)?;

    let sov = LanguageProfile::gloss(WordOrder::Sov);
    let romance = LanguageProfile::gloss(WordOrder::Svo)
        .named("adjective-after")
        .with_branch_rule(BranchPlacementRule::post(Category::Adj, PostOrder::SourceOrder));
    println!("{}", linearize(&mary, &sov)?.text());
    println!("{}", linearize(&mary, &romance)?.text());

    // Invalid structures are rejected with every problem listed.
    let broken = Loop::clausal(vec![Constituent::word(Role::Object, "chocolate", Category::N)]);
    if let Err(errors) = Synapper::new("broken", WordOrder::Svo, broken) {
        println!("{errors}");
    }

    let json = serialize_structure(&mary);
    assert!(structural_equal(&parse_structure(&json)?, &mary));
    Ok(json)
}

fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
