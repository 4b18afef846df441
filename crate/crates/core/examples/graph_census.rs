//! Isomorph-free enumeration of small graphs and their classification.
//!
//! Run with `cargo run --example graph_census [n_max]` (default 5, at most 7).

use bergesat::graph::{classify_for_theorem, enumerate_graphs, is_two_star_union, predicted_sat};
use bergesat::GraphClass;

fn main() -> bergesat::Result<()> {
    let n_max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let graphs = enumerate_graphs(n_max, n_max * (n_max - 1) / 2)?;
    for k in 2..=n_max {
        let on_k: Vec<_> = graphs.iter().filter(|g| g.n() == k).collect();
        let big_stars = on_k
            .iter()
            .filter(|g| matches!(classify_for_theorem(g), Ok(GraphClass::StarWithAtLeast4Edges { .. })))
            .count();
        let two_star = on_k.iter().filter(|g| is_two_star_union(g).is_some()).count();
        println!(
            "{k} vertices: {:>4} classes, {big_stars} big stars, {two_star} unions of two stars",
            on_k.len()
        );
    }
    if n_max <= 4 {
        for g in &graphs {
            println!("  {g}  sat = {}", predicted_sat(g)?);
        }
    }
    Ok(())
}
