//! Digraphs on `0..V` with optional tuple labels.
//!
//! Undirected graphs are digraphs with a symmetric arc set. Adjacency lists
//! are kept sorted so membership tests are binary searches.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::permaction::{GeneratedAction, Labels};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} is outside 0..{size}")]
    OutOfRange { vertex: usize, size: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("digraph has no vertex labels")]
    Unlabeled,
    #[error("labels are not pairwise distinct (vertex {0} repeats an earlier label)")]
    DuplicateLabel(usize),
    #[error("label count {labels} does not match vertex count {vertices}")]
    LabelCount { labels: usize, vertices: usize },
    #[error("group acts on {action} points but the digraph has {graph} vertices")]
    DomainMismatch { action: usize, graph: usize },
    #[error("map is not a bijection between the vertex sets")]
    NotBijection,
    #[error("isomorphism search limited to {cap} vertices, got {size}")]
    CapExceeded { cap: usize, size: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Out,
    In,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Connectivity {
    #[default]
    Weak,
    Strong,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    out_adj: Vec<Vec<u32>>,
    in_adj: Vec<Vec<u32>>,
    labels: Option<Labels>,
}

impl Digraph {
    pub fn empty(n: usize) -> Self {
        Digraph {
            out_adj: vec![Vec::new(); n],
            in_adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a digraph from arcs; duplicates are merged, loops rejected.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in arcs {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::OutOfRange { vertex: x, size: n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.out_adj[u].push(v as u32);
            g.in_adj[v].push(u as u32);
        }
        for list in g.out_adj.iter_mut().chain(g.in_adj.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        Ok(g)
    }

    pub fn with_labels(mut self, labels: Labels) -> Result<Self, GraphError> {
        if labels.len() != self.vertex_count() {
            return Err(GraphError::LabelCount {
                labels: labels.len(),
                vertices: self.vertex_count(),
            });
        }
        let mut seen = std::collections::HashSet::new();
        for (i, t) in labels.tuples().iter().enumerate() {
            if !seen.insert(t.clone()) {
                return Err(GraphError::DuplicateLabel(i));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&Labels> {
        self.labels.as_ref()
    }

    pub fn vertex_count(&self) -> usize {
        self.out_adj.len()
    }

    pub fn arc_count(&self) -> usize {
        self.out_adj.iter().map(Vec::len).sum()
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().map(move |&v| (u, v as usize)))
    }

    fn check(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.vertex_count() {
            Err(GraphError::OutOfRange {
                vertex: v,
                size: self.vertex_count(),
            })
        } else {
            Ok(())
        }
    }

    pub fn neighbors(&self, v: usize, dir: Direction) -> Result<&[u32], GraphError> {
        self.check(v)?;
        Ok(match dir {
            Direction::Out => &self.out_adj[v],
            Direction::In => &self.in_adj[v],
        })
    }

    pub fn out_neighbors(&self, v: usize) -> &[u32] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[u32] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_adj[u].binary_search(&(v as u32)).is_ok()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    /// True iff the arc set is symmetric.
    pub fn is_undirected(&self) -> bool {
        self.arcs().all(|(u, v)| self.has_arc(v, u))
    }

    /// True iff no pair of vertices has arcs in both directions.
    pub fn is_oriented(&self) -> bool {
        self.arcs().all(|(u, v)| !self.has_arc(v, u))
    }

    /// Every pair of distinct vertices joined by exactly one arc.
    pub fn is_tournament(&self) -> bool {
        let n = self.vertex_count();
        self.is_oriented() && self.arc_count() == n * n.saturating_sub(1) / 2
    }

    /// Every ordered pair of distinct vertices is an arc.
    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.arc_count() == n * n.saturating_sub(1)
    }

    pub fn opp(&self) -> Digraph {
        Digraph {
            out_adj: self.in_adj.clone(),
            in_adj: self.out_adj.clone(),
            labels: self.labels.clone(),
        }
    }

    pub fn hamming_dist(&self, u: usize, v: usize) -> Result<usize, GraphError> {
        self.check(u)?;
        self.check(v)?;
        let labels = self.labels.as_ref().ok_or(GraphError::Unlabeled)?;
        Ok(labels.hamming(u, v))
    }

    /// Subgraph induced on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Digraph, GraphError> {
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            self.check(v)?;
            pos[v] = i;
        }
        let arcs: Vec<_> = vertices
            .iter()
            .enumerate()
            .flat_map(|(i, &u)| {
                self.out_adj[u]
                    .iter()
                    .filter(|&&w| pos[w as usize] != usize::MAX)
                    .map(|&w| (i, pos[w as usize]))
                    .collect::<Vec<_>>()
            })
            .collect();
        Digraph::from_arcs(vertices.len(), arcs)
    }

    pub fn is_connected(&self, mode: Connectivity) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        match mode {
            Connectivity::Weak => self.reach(0, true, true).len() == n,
            Connectivity::Strong => {
                self.reach(0, true, false).len() == n && self.reach(0, false, true).len() == n
            }
        }
    }

    fn reach(&self, start: usize, forward: bool, backward: bool) -> Vec<usize> {
        let mut seen = vec![false; self.vertex_count()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut out = vec![start];
        while let Some(x) = queue.pop_front() {
            let fw = if forward { &self.out_adj[x][..] } else { &[] };
            let bw = if backward { &self.in_adj[x][..] } else { &[] };
            for &y in fw.iter().chain(bw) {
                let y = y as usize;
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out
    }

    /// Out-distances from `v` as counts per distance (index 0 is `v`
    /// itself); unreachable vertices are not counted.
    pub fn distance_profile(&self, v: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[v] = 0;
        let mut queue = VecDeque::from([v]);
        let mut profile = vec![1];
        while let Some(x) = queue.pop_front() {
            for &y in &self.out_adj[x] {
                let y = y as usize;
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    if profile.len() <= dist[y] {
                        profile.push(0);
                    }
                    profile[dist[y]] += 1;
                    queue.push_back(y);
                }
            }
        }
        profile
    }

    /// Checks that every generator maps arcs to arcs.
    pub fn is_invariant_under(&self, action: &GeneratedAction) -> Result<bool, GraphError> {
        self.check_domain(action)?;
        Ok(action.generators().iter().all(|g| {
            self.arcs()
                .all(|(u, v)| self.has_arc(g.apply(u), g.apply(v)))
        }))
    }

    fn check_domain(&self, action: &GeneratedAction) -> Result<(), GraphError> {
        if action.degree() != self.vertex_count() {
            return Err(GraphError::DomainMismatch {
                action: action.degree(),
                graph: self.vertex_count(),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PairTag {
    Arcs,
    A2Plus,
    A2Minus,
    A2Mixed,
}

/// A sorted set of ordered vertex pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSet {
    pub tag: PairTag,
    pairs: Vec<(usize, usize)>,
}

impl PairSet {
    fn from_set(tag: PairTag, set: BTreeSet<(usize, usize)>) -> Self {
        PairSet {
            tag,
            pairs: set.into_iter().collect(),
        }
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

    pub fn contains(&self, pair: (usize, usize)) -> bool {
        self.pairs.binary_search(&pair).is_ok()
    }
}

/// The three sets of non-adjacent ordered pairs joined by a 2-path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct A2Sets {
    /// Common out-neighbour.
    pub plus: PairSet,
    /// `Γ⁺(u) ∩ Γ⁻(v) ≠ ∅`.
    pub mixed: PairSet,
    /// Common in-neighbour.
    pub minus: PairSet,
}

pub fn arc_set(g: &Digraph) -> PairSet {
    PairSet {
        tag: PairTag::Arcs,
        pairs: g.arcs().collect(),
    }
}

pub fn a2_sets(g: &Digraph) -> A2Sets {
    let mut plus = BTreeSet::new();
    let mut minus = BTreeSet::new();
    let mut mixed = BTreeSet::new();
    for w in 0..g.vertex_count() {
        let ins = g.in_neighbors(w);
        let outs = g.out_neighbors(w);
        for &u in ins {
            for &v in ins {
                let (u, v) = (u as usize, v as usize);
                if u != v && !g.adjacent(u, v) {
                    plus.insert((u, v));
                }
            }
            for &v in outs {
                let (u, v) = (u as usize, v as usize);
                if u != v && !g.adjacent(u, v) {
                    mixed.insert((u, v));
                }
            }
        }
        for &u in outs {
            for &v in outs {
                let (u, v) = (u as usize, v as usize);
                if u != v && !g.adjacent(u, v) {
                    minus.insert((u, v));
                }
            }
        }
    }
    A2Sets {
        plus: PairSet::from_set(PairTag::A2Plus, plus),
        mixed: PairSet::from_set(PairTag::A2Mixed, mixed),
        minus: PairSet::from_set(PairTag::A2Minus, minus),
    }
}

/// Quotient of a digraph by the orbits of a group acting on its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub graph: Digraph,
    /// Orbits ordered by least member; block `i` is vertex `i` of `graph`.
    pub blocks: Vec<Vec<usize>>,
}

pub fn normal_quotient(g: &Digraph, sub: &GeneratedAction) -> Result<Quotient, GraphError> {
    g.check_domain(sub)?;
    let blocks = sub.orbits();
    let mut block_of = vec![0usize; g.vertex_count()];
    for (i, b) in blocks.iter().enumerate() {
        for &v in b {
            block_of[v] = i;
        }
    }
    let arcs: Vec<_> = g
        .arcs()
        .map(|(u, v)| (block_of[u], block_of[v]))
        .filter(|(a, b)| a != b)
        .collect();
    Ok(Quotient {
        graph: Digraph::from_arcs(blocks.len(), arcs)?,
        blocks,
    })
}

/// Whether `f` maps `g1` isomorphically onto `g2`.
pub fn check_map_is_isomorphism(
    g1: &Digraph,
    g2: &Digraph,
    f: &[usize],
) -> Result<bool, GraphError> {
    let n = g1.vertex_count();
    if f.len() != n || g2.vertex_count() != n {
        return Err(GraphError::NotBijection);
    }
    let mut hit = vec![false; n];
    for &x in f {
        if x >= n || hit[x] {
            return Err(GraphError::NotBijection);
        }
        hit[x] = true;
    }
    Ok(g1.arc_count() == g2.arc_count() && g1.arcs().all(|(u, v)| g2.has_arc(f[u], f[v])))
}

/// Default vertex limit for [`is_isomorphic`].
pub const DEFAULT_ISO_CAP: usize = 512;

/// Backtracking isomorphism search. Vertices are only matched when their
/// in/out degrees and out-distance profiles agree; the search extends the
/// partial map along the underlying undirected BFS order of `g1` so each new
/// vertex is constrained by an already mapped neighbour.
pub fn is_isomorphic(
    g1: &Digraph,
    g2: &Digraph,
    cap: usize,
) -> Result<Option<Vec<usize>>, GraphError> {
    for g in [g1, g2] {
        if g.vertex_count() > cap {
            return Err(GraphError::CapExceeded {
                cap,
                size: g.vertex_count(),
            });
        }
    }
    let n = g1.vertex_count();
    if n != g2.vertex_count() || g1.arc_count() != g2.arc_count() {
        return Ok(None);
    }
    let colour = |g: &Digraph, v: usize| (g.out_degree(v), g.in_degree(v), g.distance_profile(v));
    let c1: Vec<_> = (0..n).map(|v| colour(g1, v)).collect();
    let c2: Vec<_> = (0..n).map(|v| colour(g2, v)).collect();
    let mut s1 = c1.clone();
    let mut s2 = c2.clone();
    s1.sort();
    s2.sort();
    if s1 != s2 {
        return Ok(None);
    }

    // Matching order: BFS over the underlying graph, component by component.
    let mut order = Vec::with_capacity(n);
    let mut anchor = vec![None; n];
    let mut placed = vec![false; n];
    for start in 0..n {
        if placed[start] {
            continue;
        }
        placed[start] = true;
        order.push(start);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &y in g1.out_neighbors(x).iter().chain(g1.in_neighbors(x)) {
                let y = y as usize;
                if !placed[y] {
                    placed[y] = true;
                    anchor[y] = Some(x);
                    order.push(y);
                    queue.push_back(y);
                }
            }
        }
    }

    let mut search = IsoSearch {
        g1,
        g2,
        c1: &c1,
        c2: &c2,
        order: &order,
        anchor: &anchor,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if search.extend(0) {
        Ok(Some(search.map))
    } else {
        Ok(None)
    }
}

type Colour = (usize, usize, Vec<usize>);

struct IsoSearch<'a> {
    g1: &'a Digraph,
    g2: &'a Digraph,
    c1: &'a [Colour],
    c2: &'a [Colour],
    order: &'a [usize],
    anchor: &'a [Option<usize>],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl IsoSearch<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        let Some(&v) = self.order.get(depth) else {
            return true;
        };
        let candidates: Vec<usize> = match self.anchor[v] {
            Some(a) => {
                let fa = self.map[a];
                let mut c: Vec<usize> = self
                    .g2
                    .out_neighbors(fa)
                    .iter()
                    .chain(self.g2.in_neighbors(fa))
                    .map(|&x| x as usize)
                    .collect();
                c.sort_unstable();
                c.dedup();
                c
            }
            None => (0..self.g2.vertex_count()).collect(),
        };
        for w in candidates {
            if self.used[w] || self.c1[v] != self.c2[w] || !self.consistent(v, w, depth) {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[w] = false;
            self.map[v] = usize::MAX;
        }
        false
    }

    fn consistent(&self, v: usize, w: usize, depth: usize) -> bool {
        self.order[..depth].iter().all(|&u| {
            let fu = self.map[u];
            self.g1.has_arc(u, v) == self.g2.has_arc(fu, w)
                && self.g1.has_arc(v, u) == self.g2.has_arc(w, fu)
        })
    }
}
