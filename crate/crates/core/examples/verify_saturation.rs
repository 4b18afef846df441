//! Saturation reports: freeness plus the effect of every possible new
//! hyperedge.
//!
//! Run with `cargo run --example verify_saturation`.

use bergesat::{construct_hnm, construct_ht, saturation_report, Graph, Hypergraph};

fn report(name: &str, g: &Graph, h: &Hypergraph) -> bergesat::Result<()> {
    let r = saturation_report(g, h)?;
    println!(
        "{name:<28} free={} saturated={} absent={} failing={}",
        r.is_free,
        r.is_saturated,
        r.absent_edge_count,
        r.failing_edges.len()
    );
    for e in r.failing_edges.iter().take(3) {
        println!("    adding {e} creates no copy");
    }
    Ok(())
}

fn main() -> bergesat::Result<()> {
    for t in 5..=7 {
        let star = Graph::star(t)?;
        for n in t..=t + 1 {
            report(&format!("S_{t} in H_{t}({n})"), &star, &construct_ht(n, t)?)?;
        }
    }

    let p4 = Graph::path(4)?;
    report("P_4 in H(4,2)", &p4, &construct_hnm(4, 2)?)?;
    report("P_4 in ([4], {[4]})", &p4, &Hypergraph::new(4, [vec![1, 2, 3, 4]])?)?;

    let c5 = Graph::cycle(5)?;
    report("C_5 in H(5,4)", &c5, &construct_hnm(5, 4)?)?;
    report("C_5 in H(7,4)", &c5, &construct_hnm(7, 4)?)?;
    Ok(())
}
