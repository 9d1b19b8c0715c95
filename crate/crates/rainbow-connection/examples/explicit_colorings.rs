//! Generate the two explicit coloring schemes for a witness graph and
//! show how their color classes are laid out.

use std::collections::BTreeMap;

use rainbow_connection::{build_witness, rc_coloring, src_coloring, WitnessParams};

fn main() {
    let wg = build_witness(WitnessParams::new(3, 4).unwrap());
    let g = wg.graph();

    let rc = rc_coloring(&wg);
    println!(
        "rainbow scheme: palette {}, uses {:?}",
        rc.palette_size(),
        rc.used_colors()
    );

    let src = src_coloring(&wg);
    println!(
        "strong scheme:  palette {}, uses {:?}",
        src.palette_size(),
        src.used_colors()
    );

    // Class sizes of the strong scheme's spokes: one color per block of 3b
    // cycle positions toward the path-bearing hub, blocks of three toward
    // the plain hub.
    let mut v_spokes: BTreeMap<usize, usize> = BTreeMap::new();
    let mut w_spokes: BTreeMap<usize, usize> = BTreeMap::new();
    for &pos in wg.cycle_ids() {
        let v_color = src.color(g.edge_index(pos, wg.hub_v()).unwrap());
        let w_color = src.color(g.edge_index(pos, wg.hub_w()).unwrap());
        *v_spokes.entry(v_color).or_default() += 1;
        *w_spokes.entry(w_color).or_default() += 1;
    }
    println!("strong scheme spoke classes toward the path hub: {v_spokes:?}");
    println!("strong scheme spoke classes toward the plain hub: {w_spokes:?}");

    // First few cycle edges of each scheme.
    let rc_cycle: Vec<usize> = (0..6)
        .map(|i| rc.color(g.edge_index(i, i + 1).unwrap()))
        .collect();
    let src_cycle: Vec<usize> = (0..6)
        .map(|i| src.color(g.edge_index(i, i + 1).unwrap()))
        .collect();
    println!("first cycle edges, rainbow scheme: {rc_cycle:?}");
    println!("first cycle edges, strong scheme:  {src_cycle:?} (pattern 1,2,3)");
}
