//! The three symmetric collections of forbidden edge pairs.
//!
//! Pairs are stored unordered (each pair low–high by edge index, list
//! sorted), which is sound because every crossing vector and finger-move
//! vector takes equal values on `(α,β)` and `(β,α)`. The position of a
//! pair in the sorted list is its column index in all matrices.

use super::{Graph, SubdivisionMap, barycentric_subdivision};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairKind {
    /// All pairs of disjoint edges (planarity / Van Kampen).
    Delta,
    /// Disjoint pairs with no base edge between any two endpoints.
    S,
    /// Pairs `(vα, wβ)` of subdivision edges with `v ≠ w` and `vw` not an
    /// edge of the original graph.
    Sd,
}

impl PairKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            PairKind::Delta => "delta",
            PairKind::S => "s",
            PairKind::Sd => "sd",
        }
    }
}

/// A canonically indexed set of unordered disjoint edge pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePairSet {
    base: Graph,
    kind: PairKind,
    pairs: Vec<(usize, usize)>,
    subdivision: Option<SubdivisionMap>,
}

impl EdgePairSet {
    /// The graph whose edges are being paired (`G`, or `G*` for `Sd`).
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn kind(&self) -> PairKind {
        self.kind
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pair(&self, index: usize) -> (usize, usize) {
        self.pairs[index]
    }

    /// Position of the unordered pair `{e, f}` in the canonical list.
    pub fn index_of(&self, e: usize, f: usize) -> Option<usize> {
        let key = (e.min(f), e.max(f));
        self.pairs.binary_search(&key).ok()
    }

    /// Present exactly for `Sd` pair sets: the subdivision whose star graph
    /// is `base`.
    pub fn subdivision(&self) -> Option<&SubdivisionMap> {
        self.subdivision.as_ref()
    }
}

/// Builds the pair set of the requested kind. For `Sd` the graph is
/// subdivided internally and the returned pairs index edges of `G*`.
pub fn pair_set(g: &Graph, kind: PairKind) -> EdgePairSet {
    match kind {
        PairKind::Delta => EdgePairSet {
            base: g.clone(),
            kind,
            pairs: collect_pairs(g, |g, e, f| g.edges_disjoint(e, f)),
            subdivision: None,
        },
        PairKind::S => EdgePairSet {
            base: g.clone(),
            kind,
            pairs: collect_pairs(g, s_condition),
            subdivision: None,
        },
        PairKind::Sd => pair_set_of_subdivision(&barycentric_subdivision(g)),
    }
}

/// The `Sd` pair set over an existing subdivision, so that callers holding
/// a `SubdivisionMap` get indices consistent with their star graph.
pub fn pair_set_of_subdivision(sub: &SubdivisionMap) -> EdgePairSet {
    let g = sub.original();
    let star = sub.star();
    let mut pairs = Vec::new();
    for e in 0..star.edge_count() {
        let (v, _alpha) = sub.edge_origin(e);
        for f in (e + 1)..star.edge_count() {
            let (w, _beta) = sub.edge_origin(f);
            if v != w && !g.has_edge(v, w) {
                debug_assert!(star.edges_disjoint(e, f));
                pairs.push((e, f));
            }
        }
    }
    EdgePairSet {
        base: star.clone(),
        kind: PairKind::Sd,
        pairs,
        subdivision: Some(sub.clone()),
    }
}

fn collect_pairs(g: &Graph, keep: impl Fn(&Graph, usize, usize) -> bool) -> Vec<(usize, usize)> {
    let m = g.edge_count();
    let mut pairs = Vec::new();
    for e in 0..m {
        for f in (e + 1)..m {
            if g.edges_disjoint(e, f) && keep(g, e, f) {
                pairs.push((e, f));
            }
        }
    }
    pairs
}

fn s_condition(g: &Graph, e: usize, f: usize) -> bool {
    let (a, b) = g.edge(e);
    let (c, d) = g.edge(f);
    for v in [a, b] {
        for w in [c, d] {
            if g.has_edge(v, w) {
                return false;
            }
        }
    }
    true
}
