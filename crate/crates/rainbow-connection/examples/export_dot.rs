//! Export a colored graph as Graphviz DOT, ready for `dot -Tsvg`.

use rainbow_connection::dot::to_dot;
use rainbow_connection::{src_exact, Graph};

fn main() {
    let g = Graph::cycle(6).unwrap();
    let result = src_exact(&g, None).unwrap();
    println!(
        "// optimal strong rainbow coloring of C6 with {} colors",
        result.value
    );
    print!("{}", to_dot(&g, Some(&result.certificate)).unwrap());
}
