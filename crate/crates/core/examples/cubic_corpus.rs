//! Writes every connected cubic graph on 4..=12 vertices, one per
//! isomorphism class, to `data/cubic_le12.g6`, then runs the cubic checks on
//! the file.
//!
//!     cargo run --release --example cubic_corpus [-- OUT.g6]

use std::collections::HashMap;

use matchcover::graph::{parse_graph6_lines, serialize_graph6};
use matchcover::harness::{run_suite, Check, CheckSuite, Source};
use matchcover::structure::find_embedding;
use matchcover::Graph;

/// Fills degree slots in vertex order. Vertices with no edge yet are
/// interchangeable, so only the lowest of them is tried as a new neighbour.
fn extend(n: usize, deg: &mut [usize], adj: &mut [u16], out: &mut Vec<Vec<u16>>) {
    let Some(u) = (0..n).find(|&v| deg[v] < 3) else {
        out.push(adj.to_vec());
        return;
    };
    let mut fresh_tried = false;
    for v in u + 1..n {
        if deg[v] == 3 || adj[u] >> v & 1 == 1 {
            continue;
        }
        if deg[v] == 0 {
            if fresh_tried {
                continue;
            }
            fresh_tried = true;
        }
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        deg[u] += 1;
        deg[v] += 1;
        extend(n, deg, adj, out);
        deg[u] -= 1;
        deg[v] -= 1;
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
    }
}

fn to_graph(n: usize, adj: &[u16]) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |&v| adj[u] >> v & 1 == 1).map(move |v| (u, v)));
    Graph::new(n, edges).unwrap()
}

/// Per vertex: triangles through it and the sizes of its distance layers.
fn invariant(g: &Graph) -> Vec<Vec<usize>> {
    let mut per: Vec<Vec<usize>> = g
        .vertices()
        .map(|v| {
            let nb = g.neighbors(v);
            let tri = nb.iter().enumerate().map(|(i, &a)| nb[i + 1..].iter().filter(|&&b| g.has_edge(a, b)).count()).sum();
            let mut dist = vec![usize::MAX; g.n()];
            dist[v] = 0;
            let mut queue = std::collections::VecDeque::from([v]);
            while let Some(x) = queue.pop_front() {
                for &y in g.neighbors(x) {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            let mut layers = vec![tri];
            for d in 1..g.n() {
                layers.push(dist.iter().filter(|&&x| x == d).count());
            }
            layers
        })
        .collect();
    per.sort();
    per
}

fn cubic_classes(n: usize) -> Vec<Graph> {
    let mut labeled = Vec::new();
    extend(n, &mut vec![0; n], &mut vec![0u16; n], &mut labeled);
    let mut buckets: HashMap<Vec<Vec<usize>>, Vec<Graph>> = HashMap::new();
    let mut classes = Vec::new();
    for adj in labeled {
        let g = to_graph(n, &adj);
        if !g.is_connected() {
            continue;
        }
        let reps = buckets.entry(invariant(&g)).or_default();
        if reps.iter().all(|r| find_embedding(r, &g).is_none()) {
            reps.push(g.clone());
            classes.push(g);
        }
    }
    classes.sort_by_key(serialize_graph6);
    classes
}

fn main() {
    let out = std::env::args().nth(1).unwrap_or_else(|| {
        concat!(env!("CARGO_MANIFEST_DIR"), "/data/cubic_le12.g6").to_string()
    });
    let mut text = String::new();
    for n in (4..=12).step_by(2) {
        let classes = cubic_classes(n);
        eprintln!("n = {n:2}: {} connected cubic graphs", classes.len());
        for g in &classes {
            text.push_str(&serialize_graph6(g));
            text.push('\n');
        }
    }
    std::fs::write(&out, &text).expect("write corpus");
    eprintln!("wrote {out}");

    let graphs = parse_graph6_lines(&text).unwrap();
    let report = run_suite(Source::Graphs(graphs), &CheckSuite::new([Check::CubicBounds])).unwrap();
    println!("{}", serde_json::to_string_pretty(&report.to_json(false)).unwrap());
}
