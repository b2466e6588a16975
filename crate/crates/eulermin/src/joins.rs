//! (T,p)-join semantics: classification of edge sets, existence, minimum
//! cardinality, enumeration of all minimum joins, and the equivalence
//! relation whose classes drive the minimal generating set.

use std::collections::HashMap;

use crate::graph::{EdgeSet, Graph};
use crate::{Error, Result};

/// A vertex set T together with a cardinality parity p in {0,1}. Every edge
/// set J is a (T,p)-join for exactly one pair: T is its odd-degree vertex
/// set and p = |J| mod 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TPPair {
    t: Vec<usize>,
    p: u8,
}

impl TPPair {
    pub fn new<I: IntoIterator<Item = usize>>(t: I, p: u8) -> TPPair {
        assert!(p <= 1, "parity must be 0 or 1");
        let mut t: Vec<usize> = t.into_iter().collect();
        t.sort_unstable();
        t.dedup();
        TPPair { t, p }
    }

    pub fn t(&self) -> &[usize] {
        &self.t
    }

    pub fn p(&self) -> u8 {
        self.p
    }
}

impl std::fmt::Display for TPPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({{")?;
        for (k, v) in self.t.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}},{})", self.p)
    }
}

/// The unique (T,p) pair for which `j` is a (T,p)-join.
pub fn classify_join(g: &Graph, j: EdgeSet) -> TPPair {
    TPPair {
        t: g.odd_vertices(j),
        p: (j.card() % 2) as u8,
    }
}

/// Whether any (T,p)-join exists. T must meet every component in an even
/// number of vertices; bipartite components then force the parity of any
/// T-join inside them, while a non-bipartite component can realize both.
pub fn join_exists(g: &Graph, pair: &TPPair) -> bool {
    if pair.t.iter().any(|&v| v < 1 || v > g.vertex_count()) {
        return false;
    }
    let mut per_comp: HashMap<usize, Vec<usize>> = HashMap::new();
    for &v in &pair.t {
        per_comp.entry(g.component_of(v)).or_default().push(v);
    }
    if per_comp.values().any(|vs| vs.len() % 2 == 1) {
        return false;
    }
    let any_non_bipartite =
        (0..g.component_count()).any(|id| !g.component_is_bipartite(id));
    if any_non_bipartite {
        return true;
    }
    // all components bipartite: |J| is congruent to |T ∩ X| over one color
    // class of each component, summed
    let color = g.bipartition().expect("all components bipartite");
    let forced: usize = pair.t.iter().filter(|&&v| color[v] == 0).count();
    (forced % 2) as u8 == pair.p
}

/// All minimum-cardinality (T,p)-joins together with that cardinality.
/// Exact meet-in-the-middle search over edge subsets, split into two halves
/// of the edge list and matched on vertex-parity masks.
fn min_joins(g: &Graph, pair: &TPPair) -> Result<(usize, Vec<EdgeSet>)> {
    if !join_exists(g, pair) {
        return Err(Error::NoJoinExists {
            t: pair.t.clone(),
            p: pair.p,
        });
    }
    let n = g.vertex_count();
    if n > 64 {
        return Err(Error::CapExceeded {
            what: "vertex count for join search",
            value: n,
            cap: 64,
        });
    }
    let s = g.edge_count();
    if s > 32 {
        return Err(Error::CapExceeded {
            what: "edge count for join search",
            value: s,
            cap: 32,
        });
    }
    let vbit = |v: usize| 1u64 << (v - 1);
    let edge_mask: Vec<u64> = g.edges().iter().map(|&(u, v)| vbit(u) | vbit(v)).collect();
    let target: u64 = pair.t.iter().map(|&v| vbit(v)).fold(0, |a, b| a | b);

    let half = s / 2;
    let hi_count = s - half;
    // subsets of the upper half, grouped by parity mask
    let mut by_parity: HashMap<u64, Vec<(usize, u64)>> = HashMap::new();
    for bits in 0..1u64 << hi_count {
        let mut parity = 0u64;
        let mut b = bits;
        while b != 0 {
            let i = b.trailing_zeros() as usize;
            parity ^= edge_mask[half + i];
            b &= b - 1;
        }
        by_parity
            .entry(parity)
            .or_default()
            .push((bits.count_ones() as usize, bits << half));
    }

    let mut best = usize::MAX;
    let mut found: Vec<EdgeSet> = Vec::new();
    for lo_bits in 0..1u64 << half {
        let mut parity = 0u64;
        let mut b = lo_bits;
        while b != 0 {
            let i = b.trailing_zeros() as usize;
            parity ^= edge_mask[i];
            b &= b - 1;
        }
        let lo_card = lo_bits.count_ones() as usize;
        if let Some(matches) = by_parity.get(&(parity ^ target)) {
            for &(hi_card, hi_bits) in matches {
                let card = lo_card + hi_card;
                if (card % 2) as u8 != pair.p || card > best {
                    continue;
                }
                if card < best {
                    best = card;
                    found.clear();
                }
                found.push(EdgeSet::from_bits(lo_bits | hi_bits));
            }
        }
    }
    debug_assert!(best != usize::MAX, "join_exists guaranteed a witness");
    found.sort();
    Ok((best, found))
}

/// Smallest |J| over all (T,p)-joins J; the result has parity p.
pub fn min_join_cardinality(g: &Graph, pair: &TPPair) -> Result<usize> {
    min_joins(g, pair).map(|(card, _)| card)
}

/// Exactly the (T,p)-joins of minimum cardinality, in ascending bit-mask
/// order.
pub fn enumerate_min_joins(g: &Graph, pair: &TPPair) -> Result<Vec<EdgeSet>> {
    min_joins(g, pair).map(|(_, joins)| joins)
}

/// Minimality via the Eulerian-intersection characterization: J is minimum
/// iff |J ∩ C| <= |C|/2 for every even-cardinality Eulerian C.
pub fn is_min_join(g: &Graph, j: EdgeSet, max_dim: usize) -> Result<bool> {
    for c in g.eulerian_even(max_dim)? {
        if 2 * j.intersect(c).card() > c.card() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Partition of a family of minimum (T,p)-joins into equivalence classes:
/// connected components of the intersection graph (an edge whenever two
/// joins share an edge of G). Classes are sorted by their smallest member,
/// members within a class by bit mask.
pub fn equivalence_classes(g: &Graph, joins: &[EdgeSet]) -> Result<Vec<Vec<EdgeSet>>> {
    if let Some((&first, rest)) = joins.split_first() {
        let pair = classify_join(g, first);
        if rest.iter().any(|&j| classify_join(g, j) != pair) {
            return Err(Error::MixedPairs);
        }
    }
    let mut parent: Vec<usize> = (0..joins.len()).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    for i in 0..joins.len() {
        for k in i + 1..joins.len() {
            if !joins[i].is_disjoint(joins[k]) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, k));
                parent[a] = b;
            }
        }
    }
    let mut classes: HashMap<usize, Vec<EdgeSet>> = HashMap::new();
    for i in 0..joins.len() {
        let root = find(&mut parent, i);
        classes.entry(root).or_default().push(joins[i]);
    }
    let mut classes: Vec<Vec<EdgeSet>> = classes.into_values().collect();
    for class in &mut classes {
        class.sort();
    }
    classes.sort();
    Ok(classes)
}

/// The complete minimum-join picture for one (T,p): the minimum cardinality,
/// all of 𝒥(T,p), its partition into equivalence classes, one representative
/// per class, and a single anchor representative. All choices are
/// smallest-bit-mask for reproducibility.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinClasses {
    pub pair: TPPair,
    pub min_card: usize,
    pub all_min_joins: Vec<EdgeSet>,
    pub classes: Vec<Vec<EdgeSet>>,
    pub representatives: Vec<EdgeSet>,
    pub anchor: EdgeSet,
}

pub fn build_join_classes(g: &Graph, pair: &TPPair) -> Result<JoinClasses> {
    let (min_card, all) = min_joins(g, pair)?;
    let classes = equivalence_classes(g, &all)?;
    let representatives: Vec<EdgeSet> = classes.iter().map(|c| c[0]).collect();
    let anchor = *representatives.iter().min().expect("at least one class");
    Ok(JoinClasses {
        pair: pair.clone(),
        min_card,
        all_min_joins: all,
        classes,
        representatives,
        anchor,
    })
}
