//! Canonical labeling by branch-and-bound over vertex placements.
//!
//! The canonical form of a graph is the lexicographically minimal graph6
//! encoding over all relabelings, i.e. the minimal upper-triangle
//! column-major bit stream. The search places vertices one at a time,
//! comparing the growing column codes against the best complete code found,
//! and collapses interchangeable candidates (twins) to keep highly symmetric
//! graphs cheap. A second pass counts the labelings that achieve the minimal
//! code, which is the order of the automorphism group.

use crate::error::{Error, Result};
use crate::graph::{are_twins, Graph};
use crate::graph6::to_graph6;

/// Search-based canonization cap.
pub const CANON_MAX_VERTICES: usize = 16;

/// Isomorphism certificate: the canonical graph6 encoding, with the order of
/// the automorphism group as a byproduct.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    pub canon: String,
    pub aut_count: u64,
}

/// Canonical relabeling data: the canonical graph, the placement (original
/// vertex at each canonical position), and the automorphism count.
#[derive(Debug, Clone)]
pub struct CanonicalLabeling {
    pub graph: Graph,
    pub placement: Vec<usize>,
    pub aut_count: u64,
}

type Key = (u32, u64);

struct Search<'a> {
    g: &'a Graph,
    colors: &'a [u32],
    twin_class: Vec<usize>,
    n: usize,
    best: Vec<Key>,
    best_placement: Vec<usize>,
    current: Vec<Key>,
    placed: Vec<usize>,
    used: u64,
    aut_count: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, colors: &'a [u32]) -> Self {
        let n = g.n();
        // vertices interchangeable by a color-preserving twin transposition
        let mut twin_class: Vec<usize> = (0..n).collect();
        for u in 0..n {
            for w in (u + 1)..n {
                if twin_class[w] == w && colors[u] == colors[w] && are_twins(g, u, w) {
                    twin_class[w] = twin_class[u];
                }
            }
        }
        // seed with the identity placement so `best` is always complete
        let identity: Vec<usize> = (0..n).collect();
        let best = code_of_placement(g, colors, &identity);
        Search {
            g,
            colors,
            twin_class,
            n,
            best,
            best_placement: identity,
            current: Vec::with_capacity(n),
            placed: Vec::with_capacity(n),
            used: 0,
            aut_count: 0,
        }
    }

    fn key_of(&self, v: usize) -> Key {
        let k = self.placed.len();
        let mut col = 0u64;
        for (j, &p) in self.placed.iter().enumerate() {
            if self.g.has_edge(v, p) {
                col |= 1u64 << (k - 1 - j);
            }
        }
        (self.colors[v], col)
    }

    /// Pass 1: minimize the code. Only twin-class representatives are
    /// explored; a twin transposition is an automorphism, so the subtrees of
    /// twin candidates produce identical code sets.
    fn minimize(&mut self, k: usize) {
        if k == self.n {
            if self.current < self.best {
                self.best = self.current.clone();
                self.best_placement = self.placed.clone();
            }
            return;
        }
        let mut candidates: Vec<(Key, usize)> = Vec::new();
        let mut seen_class = 0u64;
        for v in 0..self.n {
            if self.used >> v & 1 == 1 {
                continue;
            }
            let c = self.twin_class[v];
            if seen_class >> c & 1 == 1 {
                continue;
            }
            seen_class |= 1 << c;
            candidates.push((self.key_of(v), v));
        }
        candidates.sort_unstable();
        for (key, v) in candidates {
            // fresh comparison: `best` may have improved mid-loop
            let prefix_cmp = self.current.as_slice().cmp(&self.best[..k]);
            let full_cmp = prefix_cmp.then(key.cmp(&self.best[k]));
            if full_cmp == std::cmp::Ordering::Greater {
                break; // candidates are sorted and best only shrinks
            }
            self.current.push(key);
            self.placed.push(v);
            self.used |= 1 << v;
            self.minimize(k + 1);
            self.used &= !(1 << v);
            self.placed.pop();
            self.current.pop();
        }
    }

    /// Pass 2: count placements achieving the minimal code exactly. Each
    /// twin class contributes a multiplier equal to its unused size.
    fn count_auts(&mut self, k: usize, mult: u64) {
        if k == self.n {
            self.aut_count += mult;
            return;
        }
        let mut reps: Vec<(usize, u64)> = Vec::new();
        for v in 0..self.n {
            if self.used >> v & 1 == 1 {
                continue;
            }
            let c = self.twin_class[v];
            match reps.iter_mut().find(|(r, _)| self.twin_class[*r] == c) {
                Some((_, count)) => *count += 1,
                None => reps.push((v, 1)),
            }
        }
        for (v, class_size) in reps {
            if self.key_of(v) != self.best[k] {
                continue;
            }
            self.placed.push(v);
            self.used |= 1 << v;
            self.count_auts(k + 1, mult * class_size);
            self.used &= !(1 << v);
            self.placed.pop();
        }
    }
}

fn code_of_placement(g: &Graph, colors: &[u32], placement: &[usize]) -> Vec<Key> {
    let mut code = Vec::with_capacity(placement.len());
    for (k, &v) in placement.iter().enumerate() {
        let mut col = 0u64;
        for (j, &p) in placement[..k].iter().enumerate() {
            if g.has_edge(v, p) {
                col |= 1u64 << (k - 1 - j);
            }
        }
        code.push((colors[v], col));
    }
    code
}

fn check_cap(g: &Graph) -> Result<()> {
    if g.n() > CANON_MAX_VERTICES {
        return Err(Error::Capacity {
            what: "canonization vertex count",
            got: g.n(),
            limit: CANON_MAX_VERTICES,
        });
    }
    Ok(())
}

fn run(g: &Graph, colors: &[u32]) -> (Vec<Key>, Vec<usize>, u64) {
    let mut search = Search::new(g, colors);
    search.minimize(0);
    search.count_auts(0, 1);
    let best = std::mem::take(&mut search.best);
    let placement = std::mem::take(&mut search.best_placement);
    (best, placement, search.aut_count)
}

/// Canonical labeling of an uncolored graph.
pub fn canonical_labeling(g: &Graph) -> Result<CanonicalLabeling> {
    check_cap(g)?;
    let colors = vec![0u32; g.n()];
    let (_, placement, aut_count) = run(g, &colors);
    let mut position = vec![0usize; g.n()];
    for (k, &v) in placement.iter().enumerate() {
        position[v] = k;
    }
    Ok(CanonicalLabeling {
        graph: g.relabel(&position),
        placement,
        aut_count,
    })
}

/// Canonical form (minimal graph6 string over relabelings) plus aut count.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let labeling = canonical_labeling(g)?;
    Ok(CanonicalForm {
        canon: to_graph6(&labeling.graph),
        aut_count: labeling.aut_count,
    })
}

/// The canonically relabeled graph (a fixed point of canonization).
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    Ok(canonical_labeling(g)?.graph)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_graph(g)? == canonical_graph(h)?)
}

/// Canonical code of a vertex-colored graph; two colored graphs have equal
/// codes iff there is a color-preserving isomorphism. Used for weighted
/// quotient comparisons with weights as colors.
pub fn canonical_code_colored(g: &Graph, colors: &[u32]) -> Result<Vec<(u32, u64)>> {
    check_cap(g)?;
    assert_eq!(colors.len(), g.n());
    let (code, _, _) = run(g, colors);
    Ok(code)
}
