//! Builds the saturated constructions and prints them in set notation.
//!
//! Run with `cargo run --example constructions`.

use bergesat::{
    construct_hnm, construct_hprime, construct_ht, special_saturated, Graph, SpecialKind,
};

fn main() -> bergesat::Result<()> {
    for (n, m) in [(4, 4), (5, 8)] {
        println!("H'({n},{m})  = {}", construct_hprime(n, m)?);
        println!("H({n},{m})   = {}", construct_hnm(n, m)?);
    }
    println!();

    for (n, t) in [(5, 5), (6, 5), (6, 6), (8, 7)] {
        let h = construct_ht(n, t)?;
        let degrees: Vec<usize> = (1..=n).map(|v| h.degree(v)).collect::<Result<_, _>>()?;
        println!("H_{t}({n}) = {h}");
        println!("  degrees {degrees:?}");
    }
    println!();

    for kind in SpecialKind::ALL {
        let n = kind.min_n();
        let pattern: Graph = kind.pattern();
        println!("{kind} ({pattern}) -> {}", special_saturated(kind, n)?);
    }
    Ok(())
}
