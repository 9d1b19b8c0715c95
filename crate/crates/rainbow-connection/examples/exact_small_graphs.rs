//! Exact connection numbers for small graphs by exhaustive search over
//! canonical colorings.

use rainbow_connection::{bounds, rc_exact, src_exact, Graph};

fn main() {
    let fixtures: Vec<(String, Graph)> = vec![
        ("K4".into(), Graph::complete(4).unwrap()),
        ("C4".into(), Graph::cycle(4).unwrap()),
        ("C6".into(), Graph::cycle(6).unwrap()),
        ("C8".into(), Graph::cycle(8).unwrap()),
        ("P5".into(), Graph::path(5).unwrap()),
        ("star with 4 leaves".into(), Graph::star(4).unwrap()),
    ];

    println!(
        "{:<20} {:>6} {:>6} {:>6} {:>6} {:>10}",
        "graph", "diam", "m", "rc", "src", "tested"
    );
    for (name, g) in fixtures {
        let (lower, upper) = bounds(&g);
        let rc = rc_exact(&g, None).unwrap();
        let src = src_exact(&g, None).unwrap();
        println!(
            "{:<20} {:>6} {:>6} {:>6} {:>6} {:>10}",
            name,
            lower,
            upper,
            rc.value,
            src.value,
            rc.colorings_tested + src.colorings_tested
        );
        assert!(lower <= rc.value && rc.value <= src.value && src.value <= upper);
    }

    // The certificate is an actual optimal coloring, indexed by the
    // graph's canonical edge order.
    let g = Graph::cycle(6).unwrap();
    let result = rc_exact(&g, None).unwrap();
    println!(
        "\noptimal coloring of C6 with {} colors: {:?}",
        result.value,
        result.certificate.colors()
    );
    println!("edge order: {:?}", g.edges());
}
