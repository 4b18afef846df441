//! Perfect-matching certificates between the edges of `G - ij` and the set
//! system `H'(n, m)`, and what a Hall violator looks like when one fails.
//!
//! Run with `cargo run --example hall_certificate`.

use bergesat::graph::has_vertex_cover_le2;
use bergesat::{
    certificate_condition_iii, certificate_to_witness, construct_hnm, construct_hprime,
    validate_witness, Edge, Graph,
};

fn main() -> bergesat::Result<()> {
    let g = Graph::new(5, [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (1, 5)])?;
    let (n, m) = (g.n(), g.edge_count() - 1);
    let hprime = construct_hprime(n, m)?;
    let host = construct_hnm(n, m)?;
    println!("G = {g}");
    println!("H'({n},{m}) = {hprime}");
    for &ij in g.edges() {
        let res = certificate_condition_iii(&g, ij, &hprime)?;
        if let Some(w) = certificate_to_witness(&g, ij, &res) {
            let rest = g.without_edge(ij)?;
            assert!(validate_witness(&rest, &host, &w));
            let pairs: Vec<String> = w
                .edge_assignment
                .iter()
                .map(|a| format!("{}~{}", a.edge, hprime.members()[a.hyperedge_index]))
                .collect();
            println!("  remove {ij}: perfect  {}", pairs.join(" "));
        } else {
            println!("  remove {ij}: deficient, violator {:?}", res.violator);
        }
    }

    // A star leaves no room: every singleton except the centre's is hit.
    let star = Graph::star(5)?;
    let hprime = construct_hprime(5, 3)?;
    let removed = Edge::new(1, 5);
    let res = certificate_condition_iii(&star, removed, &hprime)?;
    let left: Vec<Edge> = star.edges().iter().copied().filter(|&e| e != removed).collect();
    let s = res.violator.clone().unwrap_or_default();
    let s_edges: Vec<(usize, usize)> = s.iter().map(|&i| (left[i].u(), left[i].v())).collect();
    let gs = Graph::new(5, s_edges)?;
    println!("\nstar S_5 minus {removed} vs {hprime}: {:?}", res.kind);
    println!("  violator edges {gs}, vertex cover {:?}", has_vertex_cover_le2(&gs));
    Ok(())
}
