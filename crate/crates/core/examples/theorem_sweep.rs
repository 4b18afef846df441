//! Compares exhaustive saturation numbers with the predicted values for every
//! graph without isolated vertices up to a size bound.
//!
//! Run with `cargo run --release --example theorem_sweep [n_max] [e_max]`
//! (defaults 4 and 6).

use bergesat::theorem_check;

fn main() -> bergesat::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>().expect("integer argument"));
    let n_max = args.next().unwrap_or(4);
    let e_max = args.next().unwrap_or(6);
    let table = theorem_check(n_max, e_max)?;
    for row in &table.rows {
        println!(
            "{:<44} predicted {}  computed {}  {:<8} {} saturated={}",
            row.graph.to_string(),
            row.predicted,
            row.computed,
            if row.agree { "ok" } else { "MISMATCH" },
            row.construction,
            row.construction_saturated
        );
    }
    println!("{} classes, all agree: {}", table.rows.len(), table.all_agree);
    Ok(())
}
