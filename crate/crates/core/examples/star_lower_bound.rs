//! Exhaustive check that no three hyperedges are saturated for the star with
//! four edges, on five and six vertices.
//!
//! Run with `cargo run --release --example star_lower_bound`.

use std::num::NonZeroUsize;

use bergesat::saturation::lemma_lower_bound_report;

fn main() -> bergesat::Result<()> {
    for n in [5, 6] {
        let r = lemma_lower_bound_report(5, n, NonZeroUsize::MIN)?;
        println!(
            "n={n}: holds={}  ({} families, {} isomorph-rejected, {} tested)",
            r.holds,
            r.search_stats.candidates_examined,
            r.search_stats.isomorph_rejected,
            r.search_stats.saturation_tests
        );
    }
    Ok(())
}
