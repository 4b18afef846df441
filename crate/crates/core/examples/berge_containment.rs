//! Searches hosts for Berge copies of small patterns and prints witnesses.
//!
//! Run with `cargo run --example berge_containment`.

use bergesat::{construct_hnm, contains_berge, validate_witness, Graph, Hypergraph, VertexSet};

fn show(name: &str, g: &Graph, h: &Hypergraph) -> bergesat::Result<()> {
    println!("{name}: pattern {g}, host {h}");
    match contains_berge(g, h)? {
        Some(w) => {
            assert!(validate_witness(g, h, &w));
            for a in &w.edge_assignment {
                let (u, v) = (w.vertex_map.image(a.edge.u()), w.vertex_map.image(a.edge.v()));
                println!("  {} -> host pair {} inside {}", a.edge, VertexSet::pair(u, v), h.hyperedges()[a.hyperedge_index]);
            }
        }
        None => println!("  no Berge copy"),
    }
    Ok(())
}

fn main() -> bergesat::Result<()> {
    let k3 = Graph::complete(3)?;
    let host = Hypergraph::new(4, [vec![1, 2], vec![2, 3, 4], vec![1, 2, 3, 4]])?;
    show("triangle", &k3, &host)?;

    let p4 = Graph::path(4)?;
    let h = construct_hnm(4, 2)?;
    show("path, two hyperedges", &p4, &h)?;
    show("path, plus {1,2}", &p4, &h.add_edge(VertexSet::pair(1, 2))?)?;

    let c4 = Graph::cycle(4)?;
    let h = construct_hnm(5, 4)?;
    show("4-cycle in H(5,4)", &c4, &h)?;
    show("4-cycle in H(5,4) + {4,5}", &c4, &h.add_edge(VertexSet::pair(4, 5))?)?;
    Ok(())
}
