//! End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use bergesat::graph::{enumerate_graphs, is_star};
use bergesat::{
    certificate_condition_iii, certificate_to_witness, construct_hnm, construct_hprime,
    construct_ht, contains_berge, contains_berge_oracle, lemma_lower_bound_check, max_matching,
    perfect_or_violator, saturation_report, theorem_check, validate_witness, BipartiteGraph, Graph,
    Hypergraph, MatchingKind, VertexSet,
};
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

type Check = Result<String, String>;
type Criterion = fn() -> Check;

fn fixtures() -> Check {
    let text = include_str!("fixtures/worked_examples.txt");
    let mut count = 0;
    for line in text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let (lhs, expected) = line.split_once(" = ").ok_or("malformed fixture line")?;
        let parts: Vec<&str> = lhs.split_whitespace().collect();
        let (n, m): (usize, usize) = (parts[1].parse().unwrap(), parts[2].parse().unwrap());
        let got = match parts[0] {
            "hprime" => construct_hprime(n, m).map_err(|e| e.to_string())?.to_string(),
            "hnm" => construct_hnm(n, m).map_err(|e| e.to_string())?.to_string(),
            other => return Err(format!("unknown fixture kind {other}")),
        };
        if got != expected {
            return Err(format!("{lhs}: expected {expected}, got {got}"));
        }
        count += 1;
    }
    Ok(format!("{count} listings byte-exact"))
}

fn star_upper_bound() -> Check {
    let mut cases = 0;
    for t in 5..=7 {
        let star = Graph::star(t).unwrap();
        for n in t..=t + 3 {
            let h = construct_ht(n, t).map_err(|e| e.to_string())?;
            for v in 1..=n {
                if h.degree(v).unwrap() != t - 2 {
                    return Err(format!("H_{t}({n}): vertex {v} has degree != {}", t - 2));
                }
            }
            let r = saturation_report(&star, &h).map_err(|e| e.to_string())?;
            if !r.is_saturated {
                return Err(format!("H_{t}({n}) is not saturated for S_{t}"));
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} cases saturated"))
}

fn star_lower_bound() -> Check {
    for n in [5, 6] {
        if !lemma_lower_bound_check(5, n).map_err(|e| e.to_string())? {
            return Err(format!("a 3-edge saturated hypergraph exists for S_5 at n={n}"));
        }
    }
    Ok("no 3-edge saturated hypergraph for S_5 at n=5,6".into())
}

fn theorem_sweep() -> Check {
    let mut summary = Vec::new();
    for (n_max, e_max, expected_rows) in [(4, 6, 10), (5, 5, 19)] {
        let table = theorem_check(n_max, e_max).map_err(|e| e.to_string())?;
        if table.rows.len() != expected_rows {
            return Err(format!(
                "({n_max},{e_max}): {} classes, expected {expected_rows}",
                table.rows.len()
            ));
        }
        for row in &table.rows {
            if !row.agree || !row.construction_saturated {
                return Err(format!(
                    "{}: predicted {}, computed {}, construction saturated {}",
                    row.graph, row.predicted, row.computed, row.construction_saturated
                ));
            }
        }
        if !table.all_agree {
            return Err(format!("({n_max},{e_max}): all_agree is false"));
        }
        summary.push(format!("({n_max},{e_max}) {} classes", table.rows.len()));
    }
    let s5 = bergesat::sat_number(&Graph::star(5).unwrap(), 5, 5).map_err(|e| e.to_string())?;
    if s5.value != 4 {
        return Err(format!("sat(5, S_5) = {}, expected 4", s5.value));
    }
    Ok(format!("{} agree, S_5 -> 4", summary.join(", ")))
}

fn constructive_half() -> Check {
    let mut checked = 0;
    for g in enumerate_graphs(5, 10).map_err(|e| e.to_string())? {
        if is_star(&g).unwrap().is_some() {
            continue;
        }
        let h = construct_hnm(g.n(), g.edge_count() - 1).map_err(|e| e.to_string())?;
        if !saturation_report(&g, &h).map_err(|e| e.to_string())?.is_saturated {
            return Err(format!("H({},{}) not saturated for {g}", g.n(), g.edge_count() - 1));
        }
        checked += 1;
    }
    let spot = [
        Graph::path(4).unwrap(),
        Graph::cycle(4).unwrap(),
        Graph::complete(4).unwrap(),
        Graph::cycle(5).unwrap(),
        Graph::complete(5).unwrap(),
    ];
    for g in &spot {
        let n = g.n() + 2;
        let h = construct_hnm(n, g.edge_count() - 1).map_err(|e| e.to_string())?;
        if !saturation_report(g, &h).map_err(|e| e.to_string())?.is_saturated {
            return Err(format!("H({n},{}) not saturated for {g}", g.edge_count() - 1));
        }
    }
    Ok(format!("{checked} non-star classes, {} spot checks at n+2", spot.len()))
}

fn all_hosts(n: usize, max_edges: usize) -> Vec<Hypergraph> {
    let pool: Vec<VertexSet> = (0u64..1 << n)
        .map(VertexSet::from_bits)
        .filter(|s| s.len() >= 2)
        .collect();
    let mut hosts = Vec::new();
    for k in 0..=max_edges.min(pool.len()) {
        for family in itertools::Itertools::combinations(pool.iter().copied(), k) {
            hosts.push(Hypergraph::from_sets(n, family).unwrap());
        }
    }
    hosts
}

fn agree(g: &Graph, h: &Hypergraph) -> Result<bool, String> {
    let fast = contains_berge(g, h).map_err(|e| e.to_string())?;
    let slow = contains_berge_oracle(g, h).map_err(|e| e.to_string())?;
    if fast.is_some() != slow.is_some() {
        return Err(format!("disagreement on {g} in {h}: fast {}, oracle {}", fast.is_some(), slow.is_some()));
    }
    for w in fast.iter().chain(slow.iter()) {
        if !validate_witness(g, h, w) {
            return Err(format!("invalid witness for {g} in {h}"));
        }
    }
    Ok(fast.is_some())
}

fn random_graph(rng: &mut StdRng, max_n: usize, max_edges: usize) -> Graph {
    let n = rng.random_range(2..=max_n);
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
    let k = rng.random_range(1..=max_edges.min(pairs.len()));
    let mut chosen = BTreeSet::new();
    while chosen.len() < k {
        chosen.insert(pairs[rng.random_range(0..pairs.len())]);
    }
    Graph::new(n, chosen).unwrap().without_isolated().expect("at least one edge")
}

fn random_host(rng: &mut StdRng, n: usize, max_edges: usize) -> Hypergraph {
    let available = (1usize << n) - n - 1;
    let k = rng.random_range(0..=max_edges.min(available));
    let mut sets = BTreeSet::new();
    while sets.len() < k {
        let s = VertexSet::from_bits(rng.random_range(0u64..1 << n));
        if s.len() >= 2 {
            sets.insert(s.bits());
        }
    }
    Hypergraph::from_sets(n, sets.into_iter().map(VertexSet::from_bits)).unwrap()
}

fn oracle_equivalence() -> Check {
    let patterns = enumerate_graphs(4, 6).map_err(|e| e.to_string())?;
    let mut grid = 0;
    let mut positives = 0;
    for n in 2..=4 {
        for h in all_hosts(n, 4) {
            for g in &patterns {
                positives += agree(g, &h)? as usize;
                grid += 1;
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed_0006);
    let random = 600;
    for _ in 0..random {
        let g = random_graph(&mut rng, 5, 6);
        let n = rng.random_range(g.n()..=6);
        let h = random_host(&mut rng, n, 6);
        positives += agree(&g, &h)? as usize;
    }
    Ok(format!("{grid} grid + {random} random instances agree ({positives} positive)"))
}

fn exhaustive_matching(b: &BipartiteGraph, left: usize, used: u32) -> usize {
    if left == b.left_size() {
        return 0;
    }
    let mut best = exhaustive_matching(b, left + 1, used);
    for &r in b.neighbors(left) {
        if used & (1 << r) == 0 {
            best = best.max(1 + exhaustive_matching(b, left + 1, used | 1 << r));
        }
    }
    best
}

fn matching_certificates() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    let trials = 250;
    let mut deficient = 0;
    for _ in 0..trials {
        let (l, r) = (rng.random_range(0..=7), rng.random_range(0..=7));
        let density = rng.random_range(0.0..1.0);
        let b = BipartiteGraph::from_fn(l, r, |_, _| rng.random_bool(density));
        let pairs = max_matching(&b);
        let optimum = exhaustive_matching(&b, 0, 0);
        if pairs.len() != optimum {
            return Err(format!("{b:?}: matching {} vs optimum {optimum}", pairs.len()));
        }
        let res = perfect_or_violator(&b);
        match res.kind {
            MatchingKind::Perfect if optimum != l => return Err(format!("{b:?}: false Perfect")),
            MatchingKind::Perfect => {}
            MatchingKind::Deficient => {
                deficient += 1;
                let s = res.violator.as_ref().ok_or("Deficient without violator")?;
                if b.neighborhood(s).len() >= s.len() {
                    return Err(format!("{b:?}: violator {s:?} satisfies Hall"));
                }
            }
        }
    }
    Ok(format!("{trials} graphs, {deficient} violators rechecked"))
}

fn condition_iii() -> Check {
    let mut instances = 0;
    let mut perfect = 0;
    for g in enumerate_graphs(5, 10).map_err(|e| e.to_string())? {
        let m = g.edge_count() - 1;
        if m == 0 {
            continue;
        }
        let Ok(hprime) = construct_hprime(g.n(), m) else { continue };
        let h = construct_hnm(g.n(), m).map_err(|e| e.to_string())?;
        for &ij in g.edges() {
            instances += 1;
            let res = certificate_condition_iii(&g, ij, &hprime).map_err(|e| e.to_string())?;
            if !res.is_perfect() {
                continue;
            }
            perfect += 1;
            let rest = g.without_edge(ij).unwrap();
            let w = certificate_to_witness(&g, ij, &res).ok_or("no witness from Perfect")?;
            if !validate_witness(&rest, &h, &w) {
                return Err(format!("{g} - {ij}: certificate witness invalid"));
            }
            let core = rest.without_isolated().ok_or("edgeless remainder")?;
            if contains_berge(&core, &h).map_err(|e| e.to_string())?.is_none() {
                return Err(format!("{g} - {ij}: Perfect but no Berge copy in H({},{m})", g.n()));
            }
        }
    }
    if instances < 50 {
        return Err(format!("only {instances} instances"));
    }
    Ok(format!("{instances} instances, {perfect} Perfect, all realised"))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 8] = [
        ("construction listings", fixtures),
        ("star upper bound", star_upper_bound),
        ("star lower bound", star_lower_bound),
        ("exact sat sweep", theorem_sweep),
        ("constructive half", constructive_half),
        ("oracle equivalence", oracle_equivalence),
        ("matching certificates", matching_certificates),
        ("condition (iii) soundness", condition_iii),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} ({secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail} ({secs:.2}s)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
