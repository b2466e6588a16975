//! Shared fixtures and randomness helpers for the unit tests.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{EdgeSet, Graph};
use crate::ideal::Monomial;

/// Hexagon 1-2-3-4-5-6 plus the chord {2,5}.
pub fn fig1() -> Graph {
    Graph::new(
        6,
        vec![(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (2, 5)],
    )
    .unwrap()
}

/// Two components, both non-bipartite: vertex 1 joined to two triangles
/// 1-2-3 and 1-4-5 plus the extra edge {2,5}, and a pentagon 6-7-8-9-10
/// with the chord {6,9}.
pub fn fig2() -> Graph {
    Graph::new(
        10,
        vec![
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 3),
            (4, 5),
            (2, 5),
            (6, 7),
            (7, 8),
            (8, 9),
            (9, 10),
            (6, 10),
            (6, 9),
        ],
    )
    .unwrap()
}

/// Hexagon plus both inscribed triangles {1,3,5} and {2,4,6}.
pub fn fig3() -> Graph {
    Graph::new(
        6,
        vec![
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (1, 6),
            (1, 3),
            (1, 5),
            (3, 5),
            (2, 4),
            (2, 6),
            (4, 6),
        ],
    )
    .unwrap()
}

/// Hexagon plus the triangle {1,3,5} and the chord {2,6}.
pub fn fig4() -> Graph {
    Graph::new(
        6,
        vec![
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (1, 6),
            (1, 3),
            (1, 5),
            (3, 5),
            (2, 6),
        ],
    )
    .unwrap()
}

/// The cycle 1-2-...-n-1.
pub fn cycle(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..=n).map(|v| (v, v % n + 1)).collect();
    Graph::new(n, edges).unwrap()
}

/// The complete graph on vertices 1..=n.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).unwrap()
}

/// The complete bipartite graph with parts {1..=a} and {a+1..=a+b}.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=a {
        for v in a + 1..=a + b {
            edges.push((u, v));
        }
    }
    Graph::new(a + b, edges).unwrap()
}

/// Edge set from vertex pairs; panics on a non-edge so fixtures stay honest.
pub fn edge_set(g: &Graph, pairs: &[(usize, usize)]) -> EdgeSet {
    EdgeSet::from_indices(pairs.iter().map(|&(u, v)| {
        g.edge_index(u, v)
            .unwrap_or_else(|| panic!("{{{u},{v}}} is not an edge"))
    }))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_subset(g: &Graph, rng: &mut ChaCha8Rng) -> EdgeSet {
    let mask = if g.edge_count() == 64 {
        u64::MAX
    } else {
        (1u64 << g.edge_count()) - 1
    };
    EdgeSet::from_bits(rng.gen::<u64>() & mask)
}

/// A random monomial with exponents drawn uniformly from 0..=max_exp.
pub fn random_monomial(g: &Graph, rng: &mut ChaCha8Rng, max_exp: u32) -> Monomial {
    Monomial::new(
        (0..g.edge_count())
            .map(|_| rng.gen_range(0..=max_exp))
            .collect(),
    )
}
