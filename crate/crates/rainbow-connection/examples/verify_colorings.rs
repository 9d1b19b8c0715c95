//! Verify the explicit schemes: the rainbow scheme passes the rainbow
//! check but not the strong one, the strong scheme passes both.

use rainbow_connection::verify::is_rainbow_connected_with_paths;
use rainbow_connection::{
    build_witness, is_rainbow_connected, is_strong_rainbow_connected, rc_coloring, src_coloring,
    WitnessParams,
};

fn main() {
    let wg = build_witness(WitnessParams::new(3, 3).unwrap());
    let g = wg.graph();
    let rc = rc_coloring(&wg);
    let src = src_coloring(&wg);

    let report = is_rainbow_connected(g, &rc).unwrap();
    println!(
        "rainbow scheme / rainbow check: passed = {} ({} pairs)",
        report.passed, report.checked_pairs
    );

    let report = is_strong_rainbow_connected(g, &rc).unwrap();
    println!(
        "rainbow scheme / strong check:  passed = {}, violating pair = {:?}",
        report.passed, report.violating_pair
    );
    println!("  (both hub routes between nearby same-parity cycle vertices repeat a color)");

    let report = is_strong_rainbow_connected(g, &src).unwrap();
    println!(
        "strong scheme / strong check:   passed = {} ({} pairs)",
        report.passed, report.checked_pairs
    );

    // Witness paths can be collected for certificate emission.
    let report = is_rainbow_connected_with_paths(g, &rc).unwrap();
    let paths = report.witness_paths.unwrap();
    let sample: Vec<_> = paths.iter().take(4).collect();
    println!("sample rainbow paths under the rainbow scheme:");
    for ((u, v), path) in sample {
        println!("  ({u}, {v}): {path:?}");
    }
}
