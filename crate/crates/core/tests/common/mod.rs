use rand::Rng;
use rand_chacha::ChaCha8Rng;
use sgcodes::SignedGraph;

/// Deterministic random signed multigraph with at most 7 vertices and at
/// most 12 edges.
pub fn random_graph(rng: &mut ChaCha8Rng, allow_loops: bool) -> SignedGraph {
    let s = rng.gen_range(1..=7);
    let m = rng.gen_range(0..=12);
    let mut triples = Vec::new();
    for _ in 0..m {
        let u = rng.gen_range(1..=s);
        let v = if allow_loops {
            rng.gen_range(1..=s)
        } else {
            if s == 1 {
                continue;
            }
            let mut w = rng.gen_range(1..=s);
            while w == u {
                w = rng.gen_range(1..=s);
            }
            w
        };
        triples.push((u, v, rng.gen_bool(0.5)));
    }
    SignedGraph::from_triples(s, &triples).expect("generator stays in bounds")
}
