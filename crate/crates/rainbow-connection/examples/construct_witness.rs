//! Build witness graphs for a few target pairs and print their shape.
//!
//! For any `3 <= a <= b` the construction yields a graph with rainbow
//! connection number `a` and strong rainbow connection number `b`: a cycle
//! of length `3b(b-a+2)`, two hubs joined to every cycle vertex, and a
//! pendant path of `a-2` vertices hanging off one hub.

use rainbow_connection::{build_witness, WitnessParams};

fn main() {
    for (a, b) in [(3, 3), (3, 4), (4, 5), (5, 7)] {
        let params = WitnessParams::new(a, b).expect("valid targets");
        let wg = build_witness(params);
        let g = wg.graph();
        println!("targets rc = {a}, src = {b}:");
        println!("  cycle length     {}", wg.cycle_len());
        println!("  vertices         {}", g.vertex_count());
        println!("  edges            {}", g.edge_count());
        println!("  diameter         {}", g.diameter());
        println!(
            "  hubs             {} (plain), {} (carries the pendant path)",
            wg.hub_w(),
            wg.hub_v()
        );
        println!("  pendant path     {:?}", wg.path_ids());
        println!(
            "  degree of hubs   {} and {}",
            g.degree(wg.hub_w()),
            g.degree(wg.hub_v())
        );
        println!();
    }

    // The witness JSON format round-trips bit-exactly.
    let wg = build_witness(WitnessParams::new(3, 3).unwrap());
    let json = wg.to_json_string();
    println!(
        "witness JSON for (3, 3) is {} bytes; first 120:",
        json.len()
    );
    println!("  {}...", &json[..120]);
}
