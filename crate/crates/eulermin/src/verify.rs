//! Independent verification machinery: fibers of the ideal, the move-graph
//! connectivity criterion for generation (Markov bases), ψ-certificates of
//! non-membership, and brute-force oracles that back every derived value.

use std::collections::HashMap;

use crate::graph::{EdgeSet, Graph, DEFAULT_MAX_CYCLE_DIM};
use crate::ideal::{self, Binomial, GeneratingSet, Monomial};
use crate::joins::{self, JoinClasses, TPPair};
use crate::{Error, Result};

/// Default cap on the edge count of the exhaustive-subset oracles.
pub const DEFAULT_MAX_ORACLE_EDGES: usize = 24;

/// All monomials t^β with t^α − t^β in the ideal, for one anchor t^α: the
/// monomials of equal degree whose squarefree part is a (T,p)-join for the
/// anchor's pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber {
    pub anchor_degree: usize,
    pub pair: TPPair,
    pub monomials: Vec<Monomial>,
}

/// All exponent vectors over `s` variables with total degree `d`.
pub fn monomials_of_degree(s: usize, d: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; s];
    fn rec(out: &mut Vec<Monomial>, exps: &mut Vec<u32>, pos: usize, left: u32) {
        if pos + 1 == exps.len() {
            exps[pos] = left;
            out.push(Monomial::new(exps.clone()));
            return;
        }
        for e in 0..=left {
            exps[pos] = e;
            rec(out, exps, pos + 1, left - e);
        }
        exps[pos] = 0;
    }
    if s == 0 {
        return out;
    }
    rec(&mut out, &mut exps, 0, d as u32);
    out
}

/// Build the full fiber of `m` by exhaustive enumeration at its degree.
pub fn build_fiber(g: &Graph, m: &Monomial, max_degree: usize) -> Result<Fiber> {
    let d = m.degree();
    if d > max_degree {
        return Err(Error::CapExceeded {
            what: "fiber degree",
            value: d,
            cap: max_degree,
        });
    }
    let pair = joins::classify_join(g, m.squarefree_part());
    let mut monomials: Vec<Monomial> = monomials_of_degree(g.edge_count(), d)
        .into_iter()
        .filter(|cand| joins::classify_join(g, cand.squarefree_part()) == pair)
        .collect();
    monomials.sort();
    Ok(Fiber {
        anchor_degree: d,
        pair,
        monomials,
    })
}

/// The edges of the move graph on `monomials`: k-indexed pairs joined when
/// one generator move transforms one monomial into the other.
pub fn move_graph_edges(monomials: &[Monomial], gens: &[Binomial]) -> Vec<(usize, usize)> {
    let index: HashMap<&Monomial, usize> =
        monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut edges = Vec::new();
    for (i, m) in monomials.iter().enumerate() {
        for b in gens {
            for (from, to) in [(b.lhs(), b.rhs()), (b.rhs(), b.lhs())] {
                if let Some(q) = m.checked_div(from) {
                    let other = q.mul(to);
                    if let Some(&k) = index.get(&other) {
                        if i < k {
                            edges.push((i, k));
                        }
                    }
                }
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    edges
}

fn connected(count: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..count).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    let mut components = count;
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            components -= 1;
        }
    }
    components <= 1
}

/// Whether the move graph of the fiber under `gens` is connected. Every
/// generator move stays inside the fiber (its difference lies in the
/// lattice), so connectivity is exactly reachability by generator moves.
pub fn fiber_connected(f: &Fiber, gens: &[Binomial]) -> bool {
    connected(f.monomials.len(), &move_graph_edges(&f.monomials, gens))
}

fn group_into_fibers(g: &Graph, degree: usize, monomials: Vec<Monomial>) -> Vec<Fiber> {
    let mut by_pair: HashMap<TPPair, Vec<Monomial>> = HashMap::new();
    for m in monomials {
        by_pair
            .entry(joins::classify_join(g, m.squarefree_part()))
            .or_default()
            .push(m);
    }
    let mut out: Vec<(TPPair, Vec<Monomial>)> = by_pair.into_iter().collect();
    out.sort();
    out.into_iter()
        .map(|(pair, mut monomials)| {
            monomials.sort();
            Fiber {
                anchor_degree: degree,
                pair,
                monomials,
            }
        })
        .collect()
}

/// Search for a fiber that `gens` fails to connect. Checks every fiber of
/// every degree 2..=max_degree exhaustively, plus the minimum-join fibers of
/// every candidate (T,p) whose minimum cardinality exceeds max_degree.
/// Returns None when generation is verified.
pub fn find_disconnected_fiber(
    g: &Graph,
    gens: &[Binomial],
    max_degree: usize,
) -> Result<Option<Fiber>> {
    let max_gen_degree = gens.iter().map(|b| b.degree()).max().unwrap_or(0);
    if max_degree < max_gen_degree {
        return Err(Error::Precondition(
            "max fiber degree must be at least the maximal generator degree",
        ));
    }
    for d in 2..=max_degree {
        for fiber in group_into_fibers(g, d, monomials_of_degree(g.edge_count(), d)) {
            if !fiber_connected(&fiber, gens) {
                return Ok(Some(fiber));
            }
        }
    }
    // (T,p) whose minimum joins live above max_degree: their join fibers
    // must still be connected (they are the decisive fibers of the
    // generation criterion)
    for pair in ideal::candidate_pairs(g, DEFAULT_MAX_CYCLE_DIM)? {
        let min_joins = joins::enumerate_min_joins(g, &pair)?;
        let card = min_joins.first().map_or(0, |j| j.card());
        if card <= max_degree || min_joins.len() < 2 {
            continue;
        }
        let fiber = Fiber {
            anchor_degree: card,
            pair: pair.clone(),
            monomials: min_joins
                .iter()
                .map(|&j| Monomial::squarefree(g.edge_count(), j))
                .collect(),
        };
        if !fiber_connected(&fiber, gens) {
            return Ok(Some(fiber));
        }
    }
    Ok(None)
}

/// True iff every fiber up to max_degree (and every higher minimum-join
/// fiber) is connected under `gens`, i.e. the set generates the ideal.
pub fn verify_generates(g: &Graph, gens: &[Binomial], max_degree: usize) -> Result<bool> {
    Ok(find_disconnected_fiber(g, gens, max_degree)?.is_none())
}

/// Search for a single removable generator: one whose removal still leaves
/// a generating set. Returns None when the set is minimal.
pub fn find_removable(g: &Graph, gens: &GeneratingSet) -> Result<Option<Binomial>> {
    let all = gens.all();
    let max_degree = gens.max_degree();
    for i in 0..all.len() {
        let mut rest = all.clone();
        rest.remove(i);
        // dropping the i-th generator can lower the max generator degree,
        // so keep the fiber search at the original depth
        if find_disconnected_fiber(g, &rest, max_degree)?.is_none() {
            return Ok(Some(all[i].clone()));
        }
    }
    Ok(None)
}

/// The ring map of the non-membership certificate: edges in `support` go to
/// 1, all other edges to 0. Separates the ~-class of a reference minimum
/// join from every other class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiCertificate {
    pub support: EdgeSet,
    pub pair: TPPair,
}

impl PsiCertificate {
    /// ψ(t^α): 1 when every edge used by the monomial lies in the support.
    pub fn eval_monomial(&self, m: &Monomial) -> i64 {
        let used = EdgeSet::from_indices(
            m.exps()
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(i, _)| i),
        );
        if used.is_subset_of(self.support) {
            1
        } else {
            0
        }
    }

    /// ψ applied to a difference of monomials.
    pub fn eval_binomial(&self, b: &Binomial) -> i64 {
        self.eval_monomial(b.lhs()) - self.eval_monomial(b.rhs())
    }
}

/// Certificate for the ~-class of `reference` within one (T,p): support is
/// the union of every minimum join equivalent to it.
pub fn psi_certificate(classes: &JoinClasses, reference: EdgeSet) -> Result<PsiCertificate> {
    let class = classes
        .classes
        .iter()
        .find(|class| class.contains(&reference))
        .ok_or(Error::Precondition(
            "reference must be one of the minimum joins",
        ))?;
    let support = class
        .iter()
        .fold(EdgeSet::EMPTY, |acc, &j| acc.union(j));
    Ok(PsiCertificate {
        support,
        pair: classes.pair.clone(),
    })
}

/// Ground-truth minimum (T,p)-joins by scanning all 2^s edge subsets,
/// independent of the search in the joins module.
pub fn oracle_min_joins(g: &Graph, pair: &TPPair, max_edges: usize) -> Result<Vec<EdgeSet>> {
    let s = g.edge_count();
    if s > max_edges {
        return Err(Error::CapExceeded {
            what: "edge count for exhaustive oracle",
            value: s,
            cap: max_edges,
        });
    }
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut found = Vec::new();
    for bits in 0..1u64 << s {
        let j = EdgeSet::from_bits(bits);
        let card = j.card();
        if (card % 2) as u8 != pair.p() || card > best {
            continue;
        }
        let mut parity = vec![false; n + 1];
        for i in j.iter() {
            let (u, v) = g.edge(i);
            parity[u] = !parity[u];
            parity[v] = !parity[v];
        }
        let odd: Vec<usize> = (1..=n).filter(|&v| parity[v]).collect();
        if odd != pair.t() {
            continue;
        }
        if card < best {
            best = card;
            found.clear();
        }
        found.push(j);
    }
    if found.is_empty() {
        return Err(Error::NoJoinExists {
            t: pair.t().to_vec(),
            p: pair.p(),
        });
    }
    found.sort();
    Ok(found)
}

/// Ground-truth even-cardinality Eulerian sets by scanning all 2^s subsets.
pub fn oracle_eulerian_even(g: &Graph, max_edges: usize) -> Result<Vec<EdgeSet>> {
    let s = g.edge_count();
    if s > max_edges {
        return Err(Error::CapExceeded {
            what: "edge count for exhaustive oracle",
            value: s,
            cap: max_edges,
        });
    }
    let mut out = Vec::new();
    for bits in 0..1u64 << s {
        let c = EdgeSet::from_bits(bits);
        if c.card() % 2 == 0 && g.is_eulerian(c) {
            out.push(c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_graphs::*;

    #[test]
    fn monomial_count_is_stars_and_bars() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
        assert_eq!(monomials_of_degree(5, 0).len(), 1);
    }

    #[test]
    fn squares_fiber_and_singletons() {
        let g = fig1();
        let s = g.edge_count();
        let f = build_fiber(&g, &Monomial::power(s, 0, 2), 6).unwrap();
        // exactly the s squares: no other degree-2 monomial has empty T
        let mut squares: Vec<Monomial> = (0..s).map(|e| Monomial::power(s, e, 2)).collect();
        squares.sort();
        assert_eq!(f.monomials, squares);

        let f = build_fiber(&g, &Monomial::power(s, 3, 1), 6).unwrap();
        assert_eq!(f.monomials.len(), 1);
    }

    #[test]
    fn min_join_fiber_matches_enumeration() {
        let c6 = cycle(6);
        let pair = joins::TPPair::new(1..=6, 1);
        let anchor = Monomial::squarefree(6, edge_set(&c6, &[(1, 2), (3, 4), (5, 6)]));
        let f = build_fiber(&c6, &anchor, 6).unwrap();
        let mut want: Vec<Monomial> = joins::enumerate_min_joins(&c6, &pair)
            .unwrap()
            .into_iter()
            .map(|j| Monomial::squarefree(6, j))
            .collect();
        want.sort();
        assert_eq!(f.monomials, want);
    }

    #[test]
    fn fiber_cap_and_partition() {
        let g = fig1();
        let s = g.edge_count();
        assert!(build_fiber(&g, &Monomial::power(s, 0, 9), 6).is_err());
        // fibers of one degree are equal or disjoint
        let anchors = monomials_of_degree(s, 2);
        for a in anchors.iter().take(10) {
            for b in anchors.iter().take(10) {
                let fa = build_fiber(&g, a, 6).unwrap().monomials;
                let fb = build_fiber(&g, b, 6).unwrap().monomials;
                assert!(fa == fb || fa.iter().all(|m| !fb.contains(m)));
            }
        }
    }

    #[test]
    fn squares_fiber_is_a_star_under_square_differences() {
        let g = fig1();
        let s = g.edge_count();
        let gens: Vec<Binomial> = (1..s).map(|e| Binomial::square_difference(s, e, 0)).collect();
        let f = build_fiber(&g, &Monomial::power(s, 0, 2), 6).unwrap();
        let edges = move_graph_edges(&f.monomials, &gens);
        assert!(connected(f.monomials.len(), &edges));
        // spanning tree: s - 1 edges, all touching the base square
        assert_eq!(edges.len(), s - 1);
        let base = f
            .monomials
            .iter()
            .position(|m| *m == Monomial::power(s, 0, 2))
            .unwrap();
        assert!(edges.iter().all(|&(a, b)| a == base || b == base));
    }

    #[test]
    fn disjoint_squares_fiber_needs_the_join_binomial() {
        let c4 = cycle(4);
        let pair = joins::TPPair::new([1, 3], 0);
        let joins_ = joins::enumerate_min_joins(&c4, &pair).unwrap();
        let fiber = Fiber {
            anchor_degree: 2,
            pair,
            monomials: joins_
                .iter()
                .map(|&j| Monomial::squarefree(4, j))
                .collect(),
        };
        let squares_only: Vec<Binomial> =
            (1..4).map(|e| Binomial::square_difference(4, e, 0)).collect();
        assert!(!fiber_connected(&fiber, &squares_only));
        let full = ideal::minimal_generating_set(&c4, None, None).unwrap().all();
        assert!(fiber_connected(&fiber, &full));
    }

    #[test]
    fn groebner_and_minimal_sets_generate() {
        for g in [cycle(4), cycle(6), fig1(), complete(4)] {
            let max_degree = ideal::max_generating_degree(&g).unwrap();
            let groebner = ideal::groebner_set(&g, 24).unwrap();
            assert!(verify_generates(&g, &groebner, max_degree.max(3)).unwrap());
            let minimal = ideal::minimal_generating_set(&g, None, None).unwrap();
            assert!(verify_generates(&g, &minimal.all(), max_degree).unwrap());
        }
    }

    #[test]
    fn minimality_leave_one_out() {
        for g in [cycle(4), cycle(6), fig1()] {
            let gens = ideal::minimal_generating_set(&g, None, None).unwrap();
            assert_eq!(find_removable(&g, &gens).unwrap(), None);
            // adding a redundant generator makes the search find it
            let mut padded = gens.clone();
            padded
                .square_binomials
                .push(Binomial::square_difference(g.edge_count(), 1, 2));
            assert!(find_removable(&g, &padded).unwrap().is_some());
        }
    }

    #[test]
    fn precondition_on_fiber_depth() {
        let c6 = cycle(6);
        let gens = ideal::minimal_generating_set(&c6, None, None).unwrap();
        assert!(matches!(
            verify_generates(&c6, &gens.all(), 2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn psi_certificate_examples() {
        let c4 = cycle(4);
        let pair = joins::TPPair::new([1, 3], 0);
        let jc = joins::build_join_classes(&c4, &pair).unwrap();
        let reference = edge_set(&c4, &[(1, 2), (2, 3)]);
        let cert = psi_certificate(&jc, reference).unwrap();
        assert_eq!(cert.support, reference);
        let other = Monomial::squarefree(4, edge_set(&c4, &[(3, 4), (1, 4)]));
        assert_eq!(cert.eval_monomial(&Monomial::squarefree(4, reference)), 1);
        assert_eq!(cert.eval_monomial(&other), 0);

        // both hexagon alternating triples sit in one class: support is the
        // whole hexagon and the certificate cannot separate them
        let c6 = cycle(6);
        let pair = joins::TPPair::new(1..=6, 1);
        let jc = joins::build_join_classes(&c6, &pair).unwrap();
        assert_eq!(jc.classes.len(), 2);

        let g = fig1();
        let pair = joins::TPPair::new(1..=6, 1);
        let jc = joins::build_join_classes(&g, &pair).unwrap();
        assert_eq!(jc.classes.len(), 1);
        let j = edge_set(&g, &[(1, 2), (3, 4), (5, 6)]);
        let k = edge_set(&g, &[(2, 3), (4, 5), (1, 6)]);
        let cert = psi_certificate(&jc, j).unwrap();
        let b = Binomial::squarefree_pair(g.edge_count(), j, k).unwrap();
        assert_eq!(cert.eval_binomial(&b), 0);

        assert!(psi_certificate(&jc, edge_set(&g, &[(2, 5)])).is_err());
    }

    #[test]
    fn oracle_matches_min_join_search() {
        let mut rng = rng(17);
        for g in [fig1(), fig2(), cycle(6), complete(4), complete_bipartite(2, 3)] {
            for _ in 0..50 {
                let pair = joins::classify_join(&g, random_subset(&g, &mut rng));
                let fast = joins::enumerate_min_joins(&g, &pair).unwrap();
                let slow = oracle_min_joins(&g, &pair, DEFAULT_MAX_ORACLE_EDGES).unwrap();
                assert_eq!(fast, slow);
            }
        }
    }

    #[test]
    fn oracle_min_joins_examples() {
        let g = fig1();
        let got = oracle_min_joins(&g, &joins::TPPair::new([2, 5], 1), 24).unwrap();
        assert_eq!(got, vec![edge_set(&g, &[(2, 5)])]);
        let got = oracle_min_joins(&g, &joins::TPPair::new([], 0), 24).unwrap();
        assert!(got.contains(&EdgeSet::EMPTY));
        assert!(matches!(
            oracle_min_joins(&g, &joins::TPPair::new([2, 5], 0), 24),
            Err(Error::NoJoinExists { .. })
        ));
    }

    #[test]
    fn oracle_eulerian_matches_cycle_space() {
        for g in [fig1(), fig3(), complete(4)] {
            let mut fast: Vec<EdgeSet> = g.eulerian_even(24).unwrap().collect();
            fast.sort();
            assert_eq!(fast, oracle_eulerian_even(&g, 24).unwrap());
        }
    }

    #[test]
    fn required_generator_matches_fiber_disconnection() {
        let c6 = cycle(6);
        let gens = ideal::minimal_generating_set(&c6, None, None).unwrap();
        for (pair, b) in &gens.join_binomials {
            assert!(ideal::is_required_generator(&c6, b).unwrap());
            let without: Vec<Binomial> = gens
                .all()
                .into_iter()
                .filter(|x| x != b)
                .collect();
            let anchor = Monomial::squarefree(6, b.lhs().squarefree_part());
            let fiber = build_fiber(&c6, &anchor, 6).unwrap();
            assert_eq!(fiber.pair, *pair);
            assert!(!fiber_connected(&fiber, &without));
        }
    }
}
