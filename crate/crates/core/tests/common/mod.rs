//! Seeded random quivers and graphs for property tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qquiver::{AlgebraShape, DirectedGraph, GraphEdge, OrderTable, QuantumQuiver, RegularEmbedding};

/// `(size, source orders, range orders)` of one edge block.
type EdgeSpec = (usize, Vec<usize>, Vec<usize>);

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random graph with 1..=`max_v` vertices and 0..=`max_e` edges.
pub fn graph(rng: &mut ChaCha8Rng, max_v: usize, max_e: usize) -> DirectedGraph {
    let nv = rng.gen_range(1..=max_v);
    let ne = rng.gen_range(0..=max_e);
    let vertices: Vec<String> = (0..nv).map(|k| format!("v{k}")).collect();
    let edges = (0..ne)
        .map(|k| GraphEdge {
            id: format!("e{k}"),
            source: vertices[rng.gen_range(0..nv)].clone(),
            range: vertices[rng.gen_range(0..nv)].clone(),
        })
        .collect();
    DirectedGraph::new(vertices, edges).expect("generated graph is well formed")
}

/// Random multiset of vertices whose sizes sum to `target`, or `None`.
fn fill(rng: &mut ChaCha8Rng, sizes: &[usize], target: usize) -> Option<Vec<usize>> {
    let mut orders = vec![0; sizes.len()];
    let mut left = target;
    while left > 0 {
        let fits: Vec<usize> = (0..sizes.len()).filter(|&v| sizes[v] <= left).collect();
        let &v = fits.choose(rng)?;
        orders[v] += 1;
        left -= sizes[v];
    }
    Some(orders)
}

/// Copies laid end to end in random order.
fn shuffled(rng: &mut ChaCha8Rng, table: OrderTable) -> RegularEmbedding {
    let (b0, b1) = (table.domain().clone(), table.codomain().clone());
    let mut offsets = vec![Vec::new(); b0.len() * b1.len()];
    for a in 0..b1.len() {
        let mut copies: Vec<usize> = (0..b0.len())
            .flat_map(|v| std::iter::repeat_n(v, table.get(v, a)))
            .collect();
        copies.shuffle(rng);
        let mut at = 0;
        for v in copies {
            offsets[v * b1.len() + a].push(at);
            at += b0.size(v);
        }
    }
    for list in &mut offsets {
        list.sort_unstable();
    }
    RegularEmbedding::from_offsets(table, offsets).expect("shuffled placement tiles every block")
}

/// Random regular quiver with at most `max_v` vertex blocks of size at most
/// `max_n`, at most `max_e` edge blocks and total dimension at most
/// `max_dim`. Placements are random when `shuffle` is set.
pub fn quiver(
    rng: &mut ChaCha8Rng,
    max_v: usize,
    max_n: usize,
    max_e: usize,
    max_dim: usize,
    shuffle: bool,
) -> QuantumQuiver {
    loop {
        let nv = rng.gen_range(1..=max_v);
        let sizes: Vec<usize> = (0..nv).map(|_| rng.gen_range(1..=max_n)).collect();
        let ne = rng.gen_range(0..=max_e);
        let mut edges: Vec<EdgeSpec> = Vec::new();
        for _ in 0..ne {
            let s: Vec<usize> = (0..nv).map(|_| rng.gen_range(0..=2)).collect();
            let s = if s.iter().all(|&o| o == 0) {
                let mut s = s;
                s[rng.gen_range(0..nv)] = 1;
                s
            } else {
                s
            };
            let m: usize = s.iter().zip(&sizes).map(|(o, n)| o * n).sum();
            if let Some(r) = fill(rng, &sizes, m) {
                edges.push((m, s, r));
            }
        }
        let dim: usize = sizes.iter().map(|n| n * n).sum::<usize>() + edges.iter().map(|e| e.0 * e.0).sum::<usize>();
        if dim > max_dim {
            continue;
        }
        let b0 = AlgebraShape::new(sizes.iter().enumerate().map(|(k, &n)| (format!("v{k}"), n))).unwrap();
        let b1 = AlgebraShape::new(edges.iter().enumerate().map(|(k, e)| (format!("a{k}"), e.0))).unwrap();
        let table = |pick: fn(&EdgeSpec) -> &Vec<usize>| {
            let rows: Vec<Vec<usize>> = (0..nv).map(|v| edges.iter().map(|e| pick(e)[v]).collect()).collect();
            OrderTable::from_matrix(b0.clone(), b1.clone(), &rows)
        };
        let s = table(|e| &e.1);
        let r = table(|e| &e.2);
        let (s, r) = if shuffle {
            (shuffled(rng, s), shuffled(rng, r))
        } else {
            (
                RegularEmbedding::canonical(s).unwrap(),
                RegularEmbedding::canonical(r).unwrap(),
            )
        };
        return QuantumQuiver::new(s, r).expect("shapes agree");
    }
}

/// Same quiver with every vertex and edge id replaced.
pub fn relabel(q: &QuantumQuiver, prefix: &str) -> QuantumQuiver {
    let rename = |s: &AlgebraShape| {
        AlgebraShape::new(s.blocks().iter().map(|b| (format!("{prefix}{}", b.id), b.size))).unwrap()
    };
    let (b0, b1) = (rename(q.vertex_shape()), rename(q.edge_shape()));
    let remap = |t: &RegularEmbedding| {
        let rows: Vec<Vec<usize>> = (0..b0.len())
            .map(|v| (0..b1.len()).map(|a| t.order(v, a)).collect())
            .collect();
        let table = OrderTable::from_matrix(b0.clone(), b1.clone(), &rows);
        let offsets = (0..b0.len())
            .flat_map(|v| (0..b1.len()).map(move |a| t.offsets(v, a).to_vec()))
            .collect();
        RegularEmbedding::from_offsets(table, offsets).unwrap()
    };
    QuantumQuiver::new(remap(q.source()), remap(q.range())).unwrap()
}
