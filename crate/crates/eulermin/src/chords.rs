//! Even chords of Eulerian edge sets and the structural degree bound they
//! induce, plus the chordal-bipartite special case.

use crate::graph::{EdgeSet, Graph};
use crate::{Error, Result};

/// A certificate that `chord` is an even chord of some even-cardinality
/// Eulerian set C: two even Eulerian sets with c1 ∩ c2 = {chord} and
/// c1 Δ c2 = C. Parts are ordered by bit mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenChordWitness {
    pub chord: usize,
    pub c1: EdgeSet,
    pub c2: EdgeSet,
}

fn check_preconditions(g: &Graph, c: EdgeSet) -> Result<()> {
    if c.is_empty() {
        return Err(Error::Precondition("set must be nonempty"));
    }
    if c.card() % 2 != 0 {
        return Err(Error::Precondition("set must have even cardinality"));
    }
    if !g.is_eulerian(c) {
        return Err(Error::Precondition("set must be Eulerian"));
    }
    Ok(())
}

/// Decide whether the edge `ell` ∉ c is an even chord of `c` and return a
/// canonical witness. Any even-cardinality Eulerian C1 with ell ∈ C1 ⊆
/// c ∪ {ell} works: C2 = c Δ C1 is then automatically even Eulerian with
/// C1 ∩ C2 = {ell}. The witness with the smallest part mask is returned.
pub fn is_even_chord(
    g: &Graph,
    c: EdgeSet,
    ell: usize,
    max_dim: usize,
) -> Result<Option<EvenChordWitness>> {
    check_preconditions(g, c)?;
    if ell >= g.edge_count() || c.contains(ell) {
        return Err(Error::Precondition("chord must be an edge outside the set"));
    }
    let mut allowed = c;
    allowed.insert(ell);
    let mut best: Option<(EdgeSet, EdgeSet)> = None;
    for c1 in g.eulerian_even_in(allowed, max_dim)? {
        if !c1.contains(ell) {
            continue;
        }
        let c2 = c.sym_diff(c1);
        if c2.is_empty() {
            continue;
        }
        debug_assert_eq!(c1.intersect(c2), EdgeSet::singleton(ell));
        debug_assert!(g.is_eulerian(c2) && c2.card() % 2 == 0);
        let pair = (c1.min(c2), c1.max(c2));
        if best.map_or(true, |b| pair < b) {
            best = Some(pair);
        }
    }
    Ok(best.map(|(c1, c2)| EvenChordWitness { chord: ell, c1, c2 }))
}

/// All even chords of `c`, one canonical witness each, in edge-index order.
pub fn even_chords(g: &Graph, c: EdgeSet, max_dim: usize) -> Result<Vec<EvenChordWitness>> {
    check_preconditions(g, c)?;
    let mut out = Vec::new();
    for ell in 0..g.edge_count() {
        if c.contains(ell) {
            continue;
        }
        if let Some(w) = is_even_chord(g, c, ell, max_dim)? {
            out.push(w);
        }
    }
    Ok(out)
}

/// The structural upper bound for the maximal generating degree: half the
/// greatest cardinality over even Eulerian sets that are an even cycle or
/// two odd cycles sharing at most one vertex and that have no even chord.
/// Returns 2 when no such set exists, since the degree-2 square-difference
/// generators are always present for s ≥ 2.
pub fn degree_bound(g: &Graph, max_dim: usize) -> Result<usize> {
    if g.edge_count() < 2 {
        return Err(Error::TooFewEdges);
    }
    let mut best = 2;
    for c in g.eulerian_even(max_dim)? {
        if c.is_empty() || c.card() / 2 <= best {
            continue;
        }
        if !g.classify_eulerian(c).is_cycle_or_two_odd() {
            continue;
        }
        if even_chords(g, c, max_dim)?.is_empty() {
            best = c.card() / 2;
        }
    }
    Ok(best)
}

/// Whether a bipartite graph has no chordless cycle of length ≥ 6: every
/// even cycle with at least six edges must have a chord (an edge of the
/// graph joining two of its vertices).
pub fn is_bipartite_chordal(g: &Graph, max_dim: usize) -> Result<bool> {
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    for c in g.eulerian_even(max_dim)? {
        if c.card() < 6 {
            continue;
        }
        if !matches!(
            g.classify_eulerian(c),
            crate::graph::EulerianClass::EvenCycle(_)
        ) {
            continue;
        }
        let verts = g.vertices_of(c);
        let has_chord = (0..g.edge_count()).any(|i| {
            if c.contains(i) {
                return false;
            }
            let (u, v) = g.edge(i);
            verts.contains(&u) && verts.contains(&v)
        });
        if !has_chord {
            return Ok(false);
        }
    }
    Ok(true)
}
