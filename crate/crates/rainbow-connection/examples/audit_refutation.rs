//! Refute an undersized coloring of a witness graph by replaying the
//! lower-bound argument step by step.
//!
//! The strong scheme for G(3, 3) uses 3 colors; merging color 3 into 2
//! leaves a 2-coloring, and no 2-coloring can strongly rainbow connect
//! this graph. The audit finds a concrete vertex pair proving it.

use rainbow_connection::{
    audit_lower_bound, build_witness, exists_rainbow_geodesic, pigeonhole_margins, src_coloring,
    AuditOutcome, WitnessParams,
};

fn main() {
    let params = WitnessParams::new(3, 3).unwrap();
    let wg = build_witness(params);

    let (margin_a, margin_b) = pigeonhole_margins(params).unwrap();
    println!("pigeonhole margins for (3, 3): {margin_a} same-colored spokes, then {margin_b}");

    let undersized = src_coloring(&wg).map_colors(|c| c.min(2)).unwrap();
    println!(
        "merged coloring uses {} colors (target strong number is 3)",
        undersized.used_color_count()
    );

    match audit_lower_bound(&wg, &undersized).unwrap() {
        AuditOutcome::Pigeonhole(trace) => {
            println!("pigeonhole refutation:");
            println!("  pendant path colors: {:?}", trace.forced_path_colors);
            println!(
                "  {} spokes to the path hub share color {}",
                trace.set_a_class.edges.len(),
                trace.set_a_class.color
            );
            println!(
                "  {} of their plain-hub spokes share color {}",
                trace.set_b_class.edges.len(),
                trace.set_b_class.color
            );
            println!(
                "  chosen pair {:?} sits more than 3 apart on the cycle",
                trace.chosen_pair
            );
            for failure in &trace.geodesic_failures {
                println!(
                    "  geodesic {:?} repeats color {}",
                    failure.path, failure.repeated_color
                );
            }
            let (u, v) = trace.chosen_pair;
            let check = exists_rainbow_geodesic(wg.graph(), &undersized, u, v).unwrap();
            println!("independent geodesic search for {:?}: {check:?}", (u, v));
        }
        AuditOutcome::ForcedPath(early) => {
            println!(
                "forced-path refutation: pair {:?}, geodesic {:?} repeats color {}",
                early.pair, early.geodesic, early.repeated_color
            );
        }
    }
}
