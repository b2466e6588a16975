//! Simple undirected graphs with a fixed edge ordering, edge subsets as bit
//! masks, and the GF(2) cycle space (the Eulerian subsets of the graph).

use std::collections::HashMap;
use std::fmt;

use serde::Deserialize;

use crate::{Error, Result};

/// Default cap on the cycle-space dimension used by Eulerian enumeration.
pub const DEFAULT_MAX_CYCLE_DIM: usize = 24;

/// A subset of the edges of a graph, stored as a bit mask over edge indices
/// in file order. Operations are O(1); the mask order is the canonical
/// tie-breaking order everywhere in this crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EdgeSet {
    bits: u64,
}

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet { bits: 0 };

    pub fn from_bits(bits: u64) -> Self {
        EdgeSet { bits }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut bits = 0u64;
        for i in indices {
            debug_assert!(i < 64);
            bits |= 1 << i;
        }
        EdgeSet { bits }
    }

    pub fn singleton(i: usize) -> Self {
        EdgeSet { bits: 1 << i }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn insert(&mut self, i: usize) {
        self.bits |= 1 << i;
    }

    pub fn contains(self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    /// Cardinality |J|: the population count of the mask.
    pub fn card(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    /// Symmetric difference J Δ K.
    pub fn sym_diff(self, other: EdgeSet) -> EdgeSet {
        EdgeSet { bits: self.bits ^ other.bits }
    }

    pub fn intersect(self, other: EdgeSet) -> EdgeSet {
        EdgeSet { bits: self.bits & other.bits }
    }

    pub fn union(self, other: EdgeSet) -> EdgeSet {
        EdgeSet { bits: self.bits | other.bits }
    }

    pub fn minus(self, other: EdgeSet) -> EdgeSet {
        EdgeSet { bits: self.bits & !other.bits }
    }

    pub fn is_subset_of(self, other: EdgeSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint(self, other: EdgeSet) -> bool {
        self.bits & other.bits == 0
    }

    /// Edge indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn lowest(self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize)
        }
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeSet{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Classification of an edge subset by its Eulerian cycle structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EulerianClass {
    /// A single cycle of even length.
    EvenCycle(EdgeSet),
    /// Edge-disjoint union of two odd cycles with no common vertex.
    TwoOddCyclesShared0(EdgeSet, EdgeSet),
    /// Edge-disjoint union of two odd cycles with exactly one common vertex.
    TwoOddCyclesShared1(EdgeSet, EdgeSet),
    /// Eulerian but none of the shapes above (includes the empty set and
    /// single odd cycles).
    OtherEulerian,
    /// Some vertex has odd degree in the set.
    NotEulerian,
}

impl EulerianClass {
    /// The shapes that can arise as a disjoint union of two nonequivalent
    /// minimum (T,p)-joins, and hence the only candidates for the structural
    /// degree bound.
    pub fn is_cycle_or_two_odd(&self) -> bool {
        matches!(
            self,
            EulerianClass::EvenCycle(_)
                | EulerianClass::TwoOddCyclesShared0(..)
                | EulerianClass::TwoOddCyclesShared1(..)
        )
    }
}

#[derive(Deserialize)]
struct GraphJson {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

/// A simple undirected graph with vertices 1..=n and a fixed edge ordering.
/// The edge ordering defines the coordinates of every `EdgeSet` bit mask and
/// every exponent vector, and never changes after construction.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
    component: Vec<usize>,
    component_count: usize,
    /// Two-coloring per vertex; present iff the graph has no odd cycle.
    color: Option<Vec<u8>>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
        if edges.is_empty() {
            return Err(Error::NoEdges);
        }
        if edges.len() > 64 {
            return Err(Error::TooManyEdges { s: edges.len() });
        }
        let mut index = HashMap::new();
        let mut norm = Vec::with_capacity(edges.len());
        for &(a, b) in &edges {
            if a == b {
                return Err(Error::LoopEdge { u: a });
            }
            for v in [a, b] {
                if v < 1 || v > n {
                    return Err(Error::VertexOutOfRange { v, n });
                }
            }
            let (u, v) = (a.min(b), a.max(b));
            if index.insert((u, v), norm.len()).is_some() {
                return Err(Error::DuplicateEdge { u, v });
            }
            norm.push((u, v));
        }

        // Components and two-coloring by BFS; singletons count as components.
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n + 1];
        for (i, &(u, v)) in norm.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        let mut component = vec![usize::MAX; n + 1];
        let mut color = vec![0u8; n + 1];
        let mut bipartite = true;
        let mut component_count = 0;
        for start in 1..=n {
            if component[start] != usize::MAX {
                continue;
            }
            let id = component_count;
            component_count += 1;
            component[start] = id;
            color[start] = 0;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for &(w, _) in &adj[v] {
                    if component[w] == usize::MAX {
                        component[w] = id;
                        color[w] = color[v] ^ 1;
                        queue.push(w);
                    } else if color[w] == color[v] {
                        bipartite = false;
                    }
                }
            }
        }

        Ok(Graph {
            n,
            edges: norm,
            index,
            component,
            component_count,
            color: if bipartite { Some(color) } else { None },
        })
    }

    /// Parse a graph from its text form (edge-list grammar) or, when the
    /// input starts with '{', from the JSON alternative
    /// `{"vertices": n, "edges": [[u,v],...]}`.
    pub fn parse(text: &str) -> Result<Graph> {
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            let g: GraphJson = serde_json::from_str(trimmed)?;
            return Graph::new(g.vertices, g.edges);
        }
        let mut declared_n = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let malformed = || Error::MalformedLine {
                line: lineno + 1,
                content: raw.to_string(),
            };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                ["v", n] => {
                    declared_n = Some(n.parse::<usize>().map_err(|_| malformed())?);
                }
                ["e", u, v] | [u, v] => {
                    let u = u.parse::<usize>().map_err(|_| malformed())?;
                    let v = v.parse::<usize>().map_err(|_| malformed())?;
                    if u < 1 || v < 1 {
                        return Err(Error::VertexOutOfRange {
                            v: u.min(v),
                            n: declared_n.unwrap_or(0),
                        });
                    }
                    edges.push((u, v));
                }
                _ => return Err(malformed()),
            }
        }
        let max_v = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0);
        let n = match declared_n {
            Some(n) => n,
            None => max_v,
        };
        Graph::new(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.index.get(&(u.min(v), u.max(v))).copied()
    }

    /// All edges of the graph as one set.
    pub fn full_edge_set(&self) -> EdgeSet {
        EdgeSet::from_bits(if self.edges.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.edges.len()) - 1
        })
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.component[v]
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn is_bipartite(&self) -> bool {
        self.color.is_some()
    }

    /// Two-coloring per vertex (index 0 unused), present iff bipartite.
    pub fn bipartition(&self) -> Option<&[u8]> {
        self.color.as_deref()
    }

    /// Whether a whole connected component is bipartite (contains no odd
    /// cycle). When the graph itself is bipartite this is true everywhere;
    /// otherwise it is decided per component.
    pub fn component_is_bipartite(&self, id: usize) -> bool {
        if self.color.is_some() {
            return true;
        }
        // recolor just this component
        let mut color: HashMap<usize, u8> = HashMap::new();
        let start = (1..=self.n).find(|&v| self.component[v] == id);
        let Some(start) = start else { return true };
        color.insert(start, 0);
        let mut queue = vec![start];
        let mut ok = true;
        while let Some(v) = queue.pop() {
            for i in 0..self.edges.len() {
                let (a, b) = self.edges[i];
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                match color.get(&w) {
                    None => {
                        color.insert(w, color[&v] ^ 1);
                        queue.push(w);
                    }
                    Some(&c) => {
                        if c == color[&v] {
                            ok = false;
                        }
                    }
                }
            }
        }
        ok
    }

    /// deg_J(v): number of edges of `j` incident to `v`.
    pub fn degree_in(&self, j: EdgeSet, v: usize) -> Result<usize> {
        if v < 1 || v > self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        Ok(self.deg(j, v))
    }

    fn deg(&self, j: EdgeSet, v: usize) -> usize {
        j.iter()
            .filter(|&i| {
                let (a, b) = self.edges[i];
                a == v || b == v
            })
            .count()
    }

    /// Vertices of odd degree in `j`, sorted ascending.
    pub fn odd_vertices(&self, j: EdgeSet) -> Vec<usize> {
        let mut parity = vec![false; self.n + 1];
        for i in j.iter() {
            let (u, v) = self.edges[i];
            parity[u] = !parity[u];
            parity[v] = !parity[v];
        }
        (1..=self.n).filter(|&v| parity[v]).collect()
    }

    /// Whether every vertex has even degree in `c`.
    pub fn is_eulerian(&self, c: EdgeSet) -> bool {
        self.odd_vertices(c).is_empty()
    }

    /// Vertices touched by at least one edge of `c`, sorted ascending.
    pub fn vertices_of(&self, c: EdgeSet) -> Vec<usize> {
        let mut seen = vec![false; self.n + 1];
        for i in c.iter() {
            let (u, v) = self.edges[i];
            seen[u] = true;
            seen[v] = true;
        }
        (1..=self.n).filter(|&v| seen[v]).collect()
    }

    /// Fundamental cycles of a spanning forest: s - n + (#components)
    /// Eulerian sets spanning the whole GF(2) cycle space.
    pub fn cycle_space_basis(&self) -> Vec<EdgeSet> {
        self.cycle_space_basis_in(self.full_edge_set())
    }

    /// Fundamental-cycle basis of the subgraph spanned by `allowed` edges.
    pub fn cycle_space_basis_in(&self, allowed: EdgeSet) -> Vec<EdgeSet> {
        // path_mask[v] = tree path from v back to its root
        let mut path_mask: Vec<Option<EdgeSet>> = vec![None; self.n + 1];
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.n + 1];
        for i in allowed.iter() {
            let (u, v) = self.edges[i];
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        let mut basis = Vec::new();
        let mut in_tree = EdgeSet::EMPTY;
        for start in 1..=self.n {
            if path_mask[start].is_some() || adj[start].is_empty() {
                continue;
            }
            path_mask[start] = Some(EdgeSet::EMPTY);
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &(w, i) in &adj[v] {
                    if path_mask[w].is_none() {
                        let mut m = path_mask[v].unwrap();
                        m.insert(i);
                        path_mask[w] = Some(m);
                        in_tree.insert(i);
                        queue.push_back(w);
                    }
                }
            }
        }
        for i in allowed.iter() {
            if in_tree.contains(i) {
                continue;
            }
            let (u, v) = self.edges[i];
            let mut cycle = path_mask[u].unwrap().sym_diff(path_mask[v].unwrap());
            cycle.insert(i);
            basis.push(cycle);
        }
        basis
    }

    /// Iterator over all Eulerian edge sets of even cardinality, including
    /// the empty set, produced as GF(2) combinations of the fundamental
    /// cycles. Errors when the cycle-space dimension exceeds `max_dim`.
    pub fn eulerian_even(&self, max_dim: usize) -> Result<EulerianEvenIter> {
        self.eulerian_even_in(self.full_edge_set(), max_dim)
    }

    /// Same as [`Graph::eulerian_even`], restricted to a subgraph.
    pub fn eulerian_even_in(&self, allowed: EdgeSet, max_dim: usize) -> Result<EulerianEvenIter> {
        let basis = self.cycle_space_basis_in(allowed);
        if basis.len() > max_dim {
            return Err(Error::CapExceeded {
                what: "cycle-space dimension",
                value: basis.len(),
                cap: max_dim,
            });
        }
        let total = 1u64 << basis.len();
        Ok(EulerianEvenIter {
            basis,
            counter: 0,
            total,
            current: EdgeSet::EMPTY,
        })
    }

    /// Edge-connected components of the subgraph spanned by `c`.
    fn edge_components(&self, c: EdgeSet) -> Vec<EdgeSet> {
        let mut comp_of: HashMap<usize, usize> = HashMap::new(); // vertex -> comp
        let mut comps: Vec<EdgeSet> = Vec::new();
        let mut adj: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
        for i in c.iter() {
            let (u, v) = self.edges[i];
            adj.entry(u).or_default().push((v, i));
            adj.entry(v).or_default().push((u, i));
        }
        let mut vertices: Vec<usize> = adj.keys().copied().collect();
        vertices.sort_unstable();
        for &start in &vertices {
            if comp_of.contains_key(&start) {
                continue;
            }
            let id = comps.len();
            comps.push(EdgeSet::EMPTY);
            comp_of.insert(start, id);
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for &(w, i) in &adj[&v] {
                    comps[id].insert(i);
                    if !comp_of.contains_key(&w) {
                        comp_of.insert(w, id);
                        queue.push(w);
                    }
                }
            }
        }
        comps
    }

    /// Classify an edge set by its Eulerian cycle structure.
    pub fn classify_eulerian(&self, c: EdgeSet) -> EulerianClass {
        let mut deg: HashMap<usize, usize> = HashMap::new();
        for i in c.iter() {
            let (u, v) = self.edges[i];
            *deg.entry(u).or_insert(0) += 1;
            *deg.entry(v).or_insert(0) += 1;
        }
        if deg.values().any(|&d| d % 2 == 1) {
            return EulerianClass::NotEulerian;
        }
        if c.is_empty() {
            return EulerianClass::OtherEulerian;
        }
        let comps = self.edge_components(c);
        match comps.len() {
            1 => {
                let deg4: Vec<usize> = deg
                    .iter()
                    .filter(|&(_, &d)| d == 4)
                    .map(|(&v, _)| v)
                    .collect();
                if deg.values().all(|&d| d == 2) {
                    if c.card() % 2 == 0 {
                        EulerianClass::EvenCycle(c)
                    } else {
                        EulerianClass::OtherEulerian
                    }
                } else if deg4.len() == 1 && deg.values().all(|&d| d == 2 || d == 4) {
                    // One 4-valent cut vertex: the set decomposes uniquely
                    // into two cycles through it.
                    let hub = deg4[0];
                    let (c1, c2) = self.split_two_cycles(c, hub);
                    if c1.card() % 2 == 1 && c2.card() % 2 == 1 {
                        let (a, b) = if c1 < c2 { (c1, c2) } else { (c2, c1) };
                        EulerianClass::TwoOddCyclesShared1(a, b)
                    } else {
                        EulerianClass::OtherEulerian
                    }
                } else {
                    EulerianClass::OtherEulerian
                }
            }
            2 => {
                let each_cycle = comps.iter().all(|&part| {
                    self.vertices_of(part)
                        .iter()
                        .all(|&v| self.deg(part, v) == 2)
                });
                if each_cycle && comps.iter().all(|p| p.card() % 2 == 1) {
                    let (a, b) = (comps[0].min(comps[1]), comps[0].max(comps[1]));
                    EulerianClass::TwoOddCyclesShared0(a, b)
                } else {
                    EulerianClass::OtherEulerian
                }
            }
            _ => EulerianClass::OtherEulerian,
        }
    }

    /// Split a connected Eulerian set whose only 4-valent vertex is `hub`
    /// (all other degrees 2) into the two closed walks through `hub`.
    fn split_two_cycles(&self, c: EdgeSet, hub: usize) -> (EdgeSet, EdgeSet) {
        let first = c
            .iter()
            .find(|&i| {
                let (u, v) = self.edges[i];
                u == hub || v == hub
            })
            .expect("hub must be incident to c");
        let mut cycle = EdgeSet::singleton(first);
        let (a, b) = self.edges[first];
        let mut at = if a == hub { b } else { a };
        while at != hub {
            let next = c
                .iter()
                .find(|&i| {
                    if cycle.contains(i) {
                        return false;
                    }
                    let (u, v) = self.edges[i];
                    u == at || v == at
                })
                .expect("interior vertices have degree 2");
            cycle.insert(next);
            let (u, v) = self.edges[next];
            at = if u == at { v } else { u };
        }
        (cycle, c.minus(cycle))
    }
}

/// Streams the even-cardinality members of the GF(2) cycle space in
/// Gray-code order over basis combinations, starting with the empty set.
pub struct EulerianEvenIter {
    basis: Vec<EdgeSet>,
    counter: u64,
    total: u64,
    current: EdgeSet,
}

impl Iterator for EulerianEvenIter {
    type Item = EdgeSet;

    fn next(&mut self) -> Option<EdgeSet> {
        while self.counter < self.total {
            if self.counter > 0 {
                let flip = self.counter.trailing_zeros() as usize;
                self.current = self.current.sym_diff(self.basis[flip]);
            }
            self.counter += 1;
            if self.current.card() % 2 == 0 {
                return Some(self.current);
            }
        }
        None
    }
}
