//! Exact saturation numbers by exhaustive search.
//!
//! Run with `cargo run --release --example sat_number [n]`, where `n` is the
//! ground-set size (default 5, at most 6).

use bergesat::{graph::predicted_sat, sat_number, Graph};

fn main() -> bergesat::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let patterns = [
        ("K_2", Graph::complete(2)?),
        ("P_3", Graph::path(3)?),
        ("K_3", Graph::complete(3)?),
        ("S_4", Graph::star(4)?),
        ("P_4", Graph::path(4)?),
        ("C_4", Graph::cycle(4)?),
        ("S_5", Graph::star(5)?),
        ("C_5", Graph::cycle(5)?),
    ];
    for (name, g) in patterns {
        if g.n() > n {
            continue;
        }
        let r = sat_number(&g, n, g.edge_count() + 1)?;
        println!(
            "sat({n}, {name:<3}) = {}  (predicted {})  witness {}  [{} candidates, {} tested]",
            r.value,
            predicted_sat(&g)?,
            r.witness_hypergraph,
            r.search_stats.candidates_examined,
            r.search_stats.saturation_tests
        );
    }
    Ok(())
}
