// Graphviz output. Pipe it to `dot -Tsvg` to draw the rings.

use synapper::{fixtures, to_dot};

pub fn run_example() -> String {
    to_dot(&fixtures::colette())
}

fn main() {
    print!("{}", run_example());
}
