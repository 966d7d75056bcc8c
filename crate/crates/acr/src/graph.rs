//! Simple undirected graphs on at most 64 vertices, adjacency as one `u64`
//! bitset per vertex so a neighborhood is a single machine word.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard vertex capacity: a neighborhood must fit in one word.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices of an associated graph, as a bitmask over `[0, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_indices(vs: &[usize]) -> Self {
        VertexSet(vs.iter().fold(0u64, |m, &v| m | (1u64 << v)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A simple undirected graph on `n <= 64` vertices.
///
/// Values are immutable after construction; every operation returns a new
/// graph, so everything here is safe to share across threads.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "vertex count",
                got: n,
                limit: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Parameter(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::Parameter(format!("loop at vertex {u}")));
            }
            g.adj[u] |= 1u64 << v;
            g.adj[v] |= 1u64 << u;
        }
        Ok(g)
    }

    /// Builds directly from adjacency rows, validating symmetry, loops and range.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "vertex count",
                got: n,
                limit: MAX_VERTICES,
            });
        }
        let mask = VertexSet::full(n).bits();
        for (i, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::Parameter(format!("row {i} has bits outside [0,{n})")));
            }
            if (row >> i) & 1 == 1 {
                return Err(Error::Parameter(format!("loop at vertex {i}")));
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if (adj[i] >> j) & 1 != (adj[j] >> i) & 1 {
                    return Err(Error::Parameter(format!("adjacency not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn adjacency_row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.adj[u] >> v) & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] >> u << u).iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.adj[v] == 0
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|&r| r == 0) && self.n > 0
    }

    pub(crate) fn toggle_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u] ^= 1u64 << v;
        self.adj[v] ^= 1u64 << u;
    }

    pub(crate) fn xor_row(&mut self, v: usize, mask: u64) {
        debug_assert_eq!(mask >> v & 1, 0);
        self.adj[v] ^= mask;
    }

    /// Disjoint union; vertices of `other` are renumbered after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "disjoint union size",
                got: n,
                limit: MAX_VERTICES,
            });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// Edge-set symmetric difference of two graphs embedded in a common
    /// vertex set `[0, n)`; `emb1`/`emb2` map each graph's vertices into it.
    pub fn symmetric_difference(
        n: usize,
        g1: &Graph,
        emb1: &[usize],
        g2: &Graph,
        emb2: &[usize],
    ) -> Result<Graph> {
        let check = |g: &Graph, emb: &[usize]| -> Result<()> {
            if emb.len() != g.n {
                return Err(Error::Parameter(format!(
                    "embedding has {} entries for a graph on {} vertices",
                    emb.len(),
                    g.n
                )));
            }
            let mut seen = 0u64;
            for &x in emb {
                if x >= n {
                    return Err(Error::Parameter(format!("embedded vertex {x} out of range")));
                }
                if seen >> x & 1 == 1 {
                    return Err(Error::Parameter(format!("embedding not injective at {x}")));
                }
                seen |= 1 << x;
            }
            Ok(())
        };
        check(g1, emb1)?;
        check(g2, emb2)?;
        let mut out = Graph::empty(n)?;
        for (g, emb) in [(g1, emb1), (g2, emb2)] {
            for (u, v) in g.edges() {
                out.toggle_edge(emb[u], emb[v]);
            }
        }
        Ok(out)
    }

    /// Symmetric difference of two graphs on the same vertex set.
    pub fn xor_edges(&self, other: &Graph) -> Result<Graph> {
        if self.n != other.n {
            return Err(Error::Parameter(format!(
                "vertex counts differ: {} vs {}",
                self.n, other.n
            )));
        }
        let adj = self
            .adj
            .iter()
            .zip(&other.adj)
            .map(|(&a, &b)| a ^ b)
            .collect();
        Ok(Graph { n: self.n, adj })
    }

    /// Subgraph induced on `s`, vertices renumbered by increasing original index.
    pub fn induced_subgraph(&self, s: VertexSet) -> Graph {
        debug_assert_eq!(s.bits() & !VertexSet::full(self.n).bits(), 0);
        let verts: Vec<usize> = s.iter().collect();
        let mut adj = Vec::with_capacity(verts.len());
        for &u in &verts {
            let mut row = 0u64;
            for (j, &v) in verts.iter().enumerate() {
                if self.has_edge(u, v) {
                    row |= 1u64 << j;
                }
            }
            adj.push(row);
        }
        Graph {
            n: verts.len(),
            adj,
        }
    }

    pub fn delete_vertex(&self, v: usize) -> Graph {
        let s = VertexSet(VertexSet::full(self.n).bits() & !(1u64 << v));
        self.induced_subgraph(s)
    }

    /// Drops all isolated vertices, renumbering the rest in order.
    pub fn strip_isolated(&self) -> Graph {
        let mut keep = VertexSet::EMPTY;
        for v in 0..self.n {
            if self.adj[v] != 0 {
                keep.insert(v);
            }
        }
        self.induced_subgraph(keep)
    }

    /// Adds a star `K_{1,k}` whose center is joined to `v`. The center is the
    /// first new vertex (index `n`), the `k` star leaves follow.
    pub fn attach_star(&self, v: usize, k: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::Parameter(format!("vertex {v} out of range")));
        }
        let n = self.n + k + 1;
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "attach_star size",
                got: n,
                limit: MAX_VERTICES,
            });
        }
        let mut adj = self.adj.clone();
        adj.resize(n, 0);
        let center = self.n;
        adj[v] |= 1u64 << center;
        adj[center] |= 1u64 << v;
        for leaf in (self.n + 1)..n {
            adj[center] |= 1u64 << leaf;
            adj[leaf] |= 1u64 << center;
        }
        Ok(Graph { n, adj })
    }

    /// Applies the relabeling `perm` (vertex `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in self.neighbors(u).iter() {
                adj[perm[u]] |= 1u64 << perm[v];
            }
        }
        Graph { n: self.n, adj }
    }

    /// Connected components as vertex sets, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << start;
            loop {
                let mut next = comp;
                for v in VertexSet(comp).iter() {
                    next |= self.adj[v];
                }
                if next == comp {
                    break;
                }
                comp = next;
            }
            seen |= comp;
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        // acyclic iff every component has |V| - 1 edges
        self.components().iter().all(|&c| {
            let sub = self.induced_subgraph(c);
            sub.edge_count() == sub.n().saturating_sub(1)
        })
    }

    /// Parses the human-readable edge list format `"n; u-v, u-v, ..."`.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let (head, rest) = text.split_once(';').ok_or(Error::Parse {
            offset: 0,
            msg: "expected \"n; u-v, ...\" (missing ';')".into(),
        })?;
        let n: usize = head.trim().parse().map_err(|_| Error::Parse {
            offset: 0,
            msg: format!("invalid vertex count {:?}", head.trim()),
        })?;
        let mut edges = Vec::new();
        let base = head.len() + 1;
        let mut offset = base;
        for part in rest.split(',') {
            let trimmed = part.trim();
            if !trimmed.is_empty() {
                let pos = offset + (part.len() - part.trim_start().len());
                let (u, v) = trimmed.split_once('-').ok_or(Error::Parse {
                    offset: pos,
                    msg: format!("expected \"u-v\", got {trimmed:?}"),
                })?;
                let pu: usize = u.trim().parse().map_err(|_| Error::Parse {
                    offset: pos,
                    msg: format!("invalid vertex {:?}", u.trim()),
                })?;
                let pv: usize = v.trim().parse().map_err(|_| Error::Parse {
                    offset: pos,
                    msg: format!("invalid vertex {:?}", v.trim()),
                })?;
                edges.push((pu, pv));
            }
            offset += part.len() + 1;
        }
        Graph::from_edges(n, &edges)
    }

    /// Renders in the edge list format accepted by [`Graph::parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect();
        format!("{}; {}", self.n, edges.join(", "))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Named graph families with deterministic vertex numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    /// Path on `k >= 1` vertices, numbered along the path.
    Path(u32),
    /// Cycle on `k >= 3` vertices, `i ~ i+1 (mod k)`.
    Cycle(u32),
    /// Complete graph on `k >= 1` vertices.
    Complete(u32),
    /// Complete bipartite `K_{m,k}`, `m,k >= 1`: left side `0..m`, right side `m..m+k`.
    Biclique(u32, u32),
    /// Star `K_{1,k}`, `k >= 0`: center 0, leaves `1..=k`.
    Star(u32),
    /// `E_k`: `K_{1,k+1}` with one edge subdivided. Numbering: center 0,
    /// undisturbed leaves `1..=k`, subdivision vertex `k+1`, far leaf `k+2`.
    SubdividedStar(u32),
    /// Edgeless graph on `n >= 0` vertices.
    Edgeless(u32),
    /// Central edge 0-1 with two pendant leaves on each end: 2,3 on 0 and 4,5 on 1.
    P41,
    /// Path 0-1-2-3-4 with a pendant (vertex 5) on vertex 1.
    P51,
    /// Path 0-1-2-3-4 with a pendant (vertex 5) on vertex 2.
    P52,
    /// Triangle 0,1,2 with a pendant on each vertex: 3 on 0, 4 on 1, 5 on 2.
    C31,
    /// Cycle 0-1-2-3 with pendants on opposite vertices: 4 on 0, 5 on 2.
    C41,
}

/// Builds a named graph with the numbering documented on [`Family`].
pub fn make_named(family: Family) -> Result<Graph> {
    use Family::*;
    match family {
        Path(k) => {
            if k < 1 {
                return Err(Error::Parameter("path needs k >= 1".into()));
            }
            let k = k as usize;
            let edges: Vec<_> = (0..k - 1).map(|i| (i, i + 1)).collect();
            Graph::from_edges(k, &edges)
        }
        Cycle(k) => {
            if k < 3 {
                return Err(Error::Parameter("cycle needs k >= 3".into()));
            }
            let k = k as usize;
            let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            Graph::from_edges(k, &edges)
        }
        Complete(k) => {
            if k < 1 {
                return Err(Error::Parameter("complete graph needs k >= 1".into()));
            }
            let k = k as usize;
            let mut edges = Vec::new();
            for i in 0..k {
                for j in (i + 1)..k {
                    edges.push((i, j));
                }
            }
            Graph::from_edges(k, &edges)
        }
        Biclique(m, k) => {
            if m < 1 || k < 1 {
                return Err(Error::Parameter("biclique needs m,k >= 1".into()));
            }
            let (m, k) = (m as usize, k as usize);
            let mut edges = Vec::new();
            for i in 0..m {
                for j in 0..k {
                    edges.push((i, m + j));
                }
            }
            Graph::from_edges(m + k, &edges)
        }
        Star(k) => {
            let k = k as usize;
            let edges: Vec<_> = (1..=k).map(|leaf| (0, leaf)).collect();
            Graph::from_edges(k + 1, &edges)
        }
        SubdividedStar(k) => {
            let k = k as usize;
            let mut edges: Vec<_> = (1..=k).map(|leaf| (0, leaf)).collect();
            edges.push((0, k + 1));
            edges.push((k + 1, k + 2));
            Graph::from_edges(k + 3, &edges)
        }
        Edgeless(n) => Graph::empty(n as usize),
        P41 => Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]),
        P51 => Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)]),
        P52 => Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]),
        C31 => Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]),
        C41 => Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)]),
    }
}

/// Disjoint union of `m` copies of `g`.
pub fn multiple(m: usize, g: &Graph) -> Result<Graph> {
    let mut out = Graph::empty(0)?;
    for _ in 0..m {
        out = out.disjoint_union(g)?;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Twins and the cut-rank equivalence
// ---------------------------------------------------------------------------

/// True iff `x` and `y` are twins: equal neighborhoods away from `{x,y}`.
pub fn are_twins(g: &Graph, x: usize, y: usize) -> bool {
    if x == y {
        return false;
    }
    let mask = !((1u64 << x) | (1u64 << y));
    g.adjacency_row(x) & mask == g.adjacency_row(y) & mask
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            // keep the smaller index as root so class order is by least vertex
            let (lo, hi) = (rx.min(ry), rx.max(ry));
            self.parent[hi] = lo;
        }
    }

    fn classes(&mut self, n: usize) -> Vec<VertexSet> {
        let mut by_root: Vec<VertexSet> = vec![VertexSet::EMPTY; n];
        for v in 0..n {
            let r = self.find(v);
            by_root[r].insert(v);
        }
        by_root.into_iter().filter(|c| !c.is_empty()).collect()
    }
}

/// Partition of the vertices into maximal sets of pairwise twins, ordered by
/// least member. The number of classes is the neighborhood diversity.
pub fn twin_classes(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut uf = UnionFind::new(n);
    for x in 0..n {
        for y in (x + 1)..n {
            if are_twins(g, x, y) {
                uf.union(x, y);
            }
        }
    }
    uf.classes(n)
}

/// The kind of an equivalence class per the attached-star / true-twin /
/// false-twin trichotomy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassKind {
    AttachedStar { center: usize },
    TrueTwinClique,
    FalseTwinIndependent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivClass {
    pub members: VertexSet,
    pub kind: ClassKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivPartition {
    pub classes: Vec<EquivClass>,
}

impl EquivPartition {
    /// The class index containing `v`.
    pub fn class_of(&self, v: usize) -> usize {
        self.classes
            .iter()
            .position(|c| c.members.contains(v))
            .expect("classes partition the vertex set")
    }
}

/// The pairwise relation underlying the partition: twins, or a leaf together
/// with its unique neighbor.
pub fn equiv_related(g: &Graph, x: usize, y: usize) -> bool {
    if x == y {
        return true;
    }
    if are_twins(g, x, y) {
        return true;
    }
    (g.degree(x) == 1 && g.neighbors(x).contains(y))
        || (g.degree(y) == 1 && g.neighbors(y).contains(x))
}

/// Computes the equivalence classes of the cut-rank relation, each labeled
/// with its kind. Classes are ordered by least member.
pub fn equiv_classes(g: &Graph) -> EquivPartition {
    let n = g.n();
    let mut uf = UnionFind::new(n);
    for x in 0..n {
        for y in (x + 1)..n {
            if equiv_related(g, x, y) {
                uf.union(x, y);
            }
        }
    }
    let classes = uf
        .classes(n)
        .into_iter()
        .map(|members| {
            let kind = classify(g, members);
            EquivClass { members, kind }
        })
        .collect();
    EquivPartition { classes }
}

fn classify(g: &Graph, members: VertexSet) -> ClassKind {
    if members.len() == 1 {
        // singleton convention
        return ClassKind::TrueTwinClique;
    }
    let has_leaf = members.iter().any(|v| g.degree(v) == 1);
    if has_leaf {
        // the class of a leaf always contains its unique neighbor, so the
        // class induces a star; the center is the unique non-leaf when one
        // exists (for a K2 component both are leaves and we fix the lower).
        let non_leaves: Vec<usize> = members.iter().filter(|&v| g.degree(v) != 1).collect();
        let center = match non_leaves.as_slice() {
            [c] => *c,
            [] => members.min().unwrap(),
            _ => unreachable!("an attached-star class has at most one non-leaf"),
        };
        return ClassKind::AttachedStar { center };
    }
    // no leaves: pairwise twins, uniformly adjacent or non-adjacent
    let mut it = members.iter();
    let a = it.next().unwrap();
    let b = it.next().unwrap();
    if g.has_edge(a, b) {
        ClassKind::TrueTwinClique
    } else {
        ClassKind::FalseTwinIndependent
    }
}

// ---------------------------------------------------------------------------
// Weighted quotient of a forest
// ---------------------------------------------------------------------------

/// The quotient of a forest by the cut-rank equivalence, as a weighted graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedQuotient {
    /// Quotient graph on the classes (ordered by least original vertex).
    pub graph: Graph,
    /// Class sizes.
    pub weights: Vec<usize>,
    /// Per-class representative: the attached-star center.
    pub centers: Vec<usize>,
}

/// Computes the weighted quotient of a forest without isolated vertices.
pub fn quotient_pi(f: &Graph) -> Result<WeightedQuotient> {
    if !f.is_forest() {
        return Err(Error::Domain("quotient requires a forest".into()));
    }
    if f.has_isolated_vertex() {
        return Err(Error::Domain("quotient requires no isolated vertices".into()));
    }
    let partition = equiv_classes(f);
    let m = partition.classes.len();
    let mut weights = Vec::with_capacity(m);
    let mut centers = Vec::with_capacity(m);
    for class in &partition.classes {
        weights.push(class.members.len());
        match class.kind {
            ClassKind::AttachedStar { center } => centers.push(center),
            // In a forest without isolated vertices every class is an
            // attached star (twins cannot share two common neighbors, so
            // twin classes are K2 components or leaf bundles).
            _ => {
                return Err(Error::Integrity(format!(
                    "non-star class {} in a forest",
                    class.members
                )))
            }
        }
    }
    let mut q = Graph::empty(m)?;
    for (u, v) in f.edges() {
        let (cu, cv) = (partition.class_of(u), partition.class_of(v));
        if cu != cv && !q.has_edge(cu, cv) {
            q.toggle_edge(cu, cv);
        }
    }
    Ok(WeightedQuotient {
        graph: q,
        weights,
        centers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_families() {
        let p4 = make_named(Family::Path(4)).unwrap();
        assert_eq!((p4.n(), p4.edge_count()), (4, 3));

        // E_0 is a 3-vertex path
        let e0 = make_named(Family::SubdividedStar(0)).unwrap();
        assert_eq!((e0.n(), e0.edge_count()), (3, 2));
        assert_eq!(e0.degree(0), 1);
        assert_eq!(e0.degree(1), 2);

        let k33 = make_named(Family::Biclique(3, 3)).unwrap();
        assert_eq!((k33.n(), k33.edge_count()), (6, 9));

        assert!(make_named(Family::Cycle(2)).is_err());
        assert!(make_named(Family::Path(0)).is_err());
    }

    #[test]
    fn union_and_symmetric_difference() {
        let k2 = make_named(Family::Complete(2)).unwrap();
        let two_k2 = k2.disjoint_union(&k2).unwrap();
        assert_eq!((two_k2.n(), two_k2.edge_count()), (4, 2));

        let g = make_named(Family::Path(3)).unwrap();
        let same = g.disjoint_union(&Graph::empty(0).unwrap()).unwrap();
        assert_eq!(g, same);

        let p3 = make_named(Family::Path(3)).unwrap();
        let five = k2.disjoint_union(&p3).unwrap();
        assert_eq!((five.n(), five.edge_count(), five.components().len()), (5, 3, 2));

        // self-cancellation
        let c4 = make_named(Family::Cycle(4)).unwrap();
        let z = c4.xor_edges(&c4).unwrap();
        assert_eq!(z.edge_count(), 0);

        // K3 on {0,1,2} xor K3 on {0,1,3}: edge 01 cancels
        let k3 = make_named(Family::Complete(3)).unwrap();
        let x = Graph::symmetric_difference(4, &k3, &[0, 1, 2], &k3, &[0, 1, 3]).unwrap();
        let mut edges = x.edges();
        edges.sort();
        assert_eq!(edges, vec![(0, 2), (0, 3), (1, 2), (1, 3)]);

        assert!(Graph::symmetric_difference(4, &k3, &[0, 1, 1], &k3, &[0, 1, 2]).is_err());
    }

    #[test]
    fn induced_subgraphs() {
        let p4 = make_named(Family::Path(4)).unwrap();
        let k2 = p4.induced_subgraph(VertexSet::from_indices(&[0, 1]));
        assert_eq!((k2.n(), k2.edge_count()), (2, 1));
        let iso2 = p4.induced_subgraph(VertexSet::from_indices(&[0, 2]));
        assert_eq!((iso2.n(), iso2.edge_count()), (2, 0));
        assert_eq!(p4.induced_subgraph(VertexSet::full(4)), p4);
    }

    #[test]
    fn twin_class_examples() {
        let k5 = make_named(Family::Complete(5)).unwrap();
        assert_eq!(twin_classes(&k5).len(), 1);

        let p4 = make_named(Family::Path(4)).unwrap();
        assert_eq!(twin_classes(&p4).len(), 4);

        let k34 = make_named(Family::Biclique(3, 4)).unwrap();
        assert_eq!(twin_classes(&k34).len(), 2);
    }

    #[test]
    fn equiv_class_examples() {
        // E_2: center 0, leaves 1,2, subdivision path 0-3-4
        let e2 = make_named(Family::SubdividedStar(2)).unwrap();
        let part = equiv_classes(&e2);
        assert_eq!(part.classes.len(), 2);
        assert_eq!(part.classes[0].members, VertexSet::from_indices(&[0, 1, 2]));
        assert_eq!(part.classes[0].kind, ClassKind::AttachedStar { center: 0 });
        assert_eq!(part.classes[1].members, VertexSet::from_indices(&[3, 4]));
        assert_eq!(part.classes[1].kind, ClassKind::AttachedStar { center: 3 });

        let k4 = make_named(Family::Complete(4)).unwrap();
        let part = equiv_classes(&k4);
        assert_eq!(part.classes.len(), 1);
        assert_eq!(part.classes[0].kind, ClassKind::TrueTwinClique);

        let e3 = Graph::empty(3).unwrap();
        let part = equiv_classes(&e3);
        assert_eq!(part.classes.len(), 1);
        assert_eq!(part.classes[0].kind, ClassKind::FalseTwinIndependent);
    }

    #[test]
    fn equiv_pairwise_consistency() {
        // within a class every pair is related, across classes no pair is
        for fam in [
            Family::Path(5),
            Family::SubdividedStar(2),
            Family::Star(4),
            Family::Cycle(5),
            Family::C41,
        ] {
            let g = make_named(fam).unwrap();
            let part = equiv_classes(&g);
            for x in 0..g.n() {
                for y in 0..g.n() {
                    let same = part.class_of(x) == part.class_of(y);
                    assert_eq!(
                        equiv_related(&g, x, y),
                        same,
                        "pairwise relation vs classes at ({x},{y}) in {fam:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let e2 = make_named(Family::SubdividedStar(2)).unwrap();
        let q = quotient_pi(&e2).unwrap();
        assert_eq!(q.graph.n(), 2);
        assert_eq!(q.graph.edge_count(), 1);
        assert_eq!(q.weights, vec![3, 2]);

        let star = make_named(Family::Star(4)).unwrap();
        let q = quotient_pi(&star).unwrap();
        assert_eq!(q.graph.n(), 1);
        assert_eq!(q.weights, vec![5]);

        let k2 = make_named(Family::Complete(2)).unwrap();
        let two_k2 = k2.disjoint_union(&k2).unwrap();
        let q = quotient_pi(&two_k2).unwrap();
        assert_eq!(q.graph.n(), 2);
        assert_eq!(q.graph.edge_count(), 0);
        assert_eq!(q.weights, vec![2, 2]);

        // sum of weights is the order of the forest
        assert_eq!(q.weights.iter().sum::<usize>(), two_k2.n());

        let c3 = make_named(Family::Cycle(3)).unwrap();
        assert!(quotient_pi(&c3).is_err());
        let with_iso = k2.disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        assert!(quotient_pi(&with_iso).is_err());
    }

    #[test]
    fn attach_star_examples() {
        let k2 = make_named(Family::Complete(2)).unwrap();
        let g = k2.attach_star(0, 2).unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 4));
        // component is E_2-shaped: degrees 2,1 on the K2 side; center deg 3
        assert_eq!(g.degree(2), 3);
        assert!(g.has_edge(0, 2) && g.has_edge(2, 3) && g.has_edge(2, 4));

        let pendant = k2.attach_star(1, 0).unwrap();
        assert_eq!((pendant.n(), pendant.edge_count()), (3, 2));

        let p3 = Graph::empty(1).unwrap().attach_star(0, 1).unwrap();
        assert_eq!((p3.n(), p3.edge_count()), (3, 2));
        assert_eq!(p3.degree(1), 2); // center in the middle
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::parse_edge_list("2;0-1").unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 1));
        let h = Graph::parse_edge_list(&g.to_edge_list()).unwrap();
        assert_eq!(g, h);

        let empty = Graph::parse_edge_list("3;").unwrap();
        assert_eq!((empty.n(), empty.edge_count()), (3, 0));

        assert!(Graph::parse_edge_list("4").is_err());
        assert!(Graph::parse_edge_list("4; 0").is_err());
        assert!(Graph::parse_edge_list("4; 0-9").is_err());
        assert!(Graph::parse_edge_list("2; 0-0").is_err());
    }

    #[test]
    fn strip_isolated_keeps_edges() {
        let g = Graph::from_edges(5, &[(1, 3)]).unwrap();
        let s = g.strip_isolated();
        assert_eq!((s.n(), s.edge_count()), (2, 1));
    }

    #[test]
    fn components_and_forest_checks() {
        let p3 = make_named(Family::Path(3)).unwrap();
        let c4 = make_named(Family::Cycle(4)).unwrap();
        let g = p3.disjoint_union(&c4).unwrap();
        assert_eq!(g.components().len(), 2);
        assert!(!g.is_forest());
        assert!(p3.is_forest());
        assert!(Graph::empty(3).unwrap().is_forest());
    }
}
