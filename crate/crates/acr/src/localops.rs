//! Local complementation, pivots, local-equivalence orbits, elementary
//! vertex-minors, and vertex-minor testing with replayable witnesses.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, canonical_graph};
use crate::error::{Error, Result, Tri};
use crate::graph::{Graph, VertexSet};

/// Complements the adjacency among the neighbors of `v`. An involution:
/// `local_complement(local_complement(g, v), v) == g`.
pub fn local_complement(g: &Graph, v: usize) -> Graph {
    debug_assert!(v < g.n());
    let nv = g.neighbors(v).bits();
    let mut out = g.clone();
    for x in VertexSet(nv).iter() {
        out.xor_row(x, nv & !(1u64 << x));
    }
    out
}

/// The pivot `g*u*v*u` on an edge `uv` (equal to `g*v*u*v`).
pub fn pivot(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    if !g.has_edge(u, v) {
        return Err(Error::Domain(format!("pivot requires the edge {u}-{v}")));
    }
    Ok(local_complement(
        &local_complement(&local_complement(g, u), v),
        u,
    ))
}

/// Labeled local-equivalence orbit: the closure of `{g}` under single local
/// complementations, deduplicated on exact adjacency.
#[derive(Debug, Clone)]
pub struct Orbit {
    pub graphs: Vec<Graph>,
    /// Set when the cap cut the expansion short: the list is a partial result.
    pub truncated: bool,
}

pub fn orbit(g: &Graph, cap: usize) -> Orbit {
    let mut seen: HashSet<Graph> = HashSet::new();
    let mut queue: VecDeque<Graph> = VecDeque::new();
    seen.insert(g.clone());
    queue.push_back(g.clone());
    let mut truncated = false;
    while let Some(cur) = queue.pop_front() {
        for v in 0..cur.n() {
            if cur.degree(v) < 2 {
                continue; // complementing at most one neighbor changes nothing
            }
            let next = local_complement(&cur, v);
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    truncated = true;
                    continue;
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut graphs: Vec<Graph> = seen.into_iter().collect();
    graphs.sort();
    Orbit { graphs, truncated }
}

/// BFS over the orbit of `g` looking for a member isomorphic to `target`;
/// returns the local-complementation sequence reaching it.
fn orbit_search_iso(g: &Graph, target: &Graph, cap: usize) -> Result<Option<Option<Vec<usize>>>> {
    // Ok(Some(Some(path))): found; Ok(Some(None)): exhausted, absent;
    // Ok(None): truncated.
    let target_canon = canonical_graph(target)?;
    if canonical_graph(g)? == target_canon {
        return Ok(Some(Some(Vec::new())));
    }
    let mut seen: HashMap<Graph, (Graph, usize)> = HashMap::new(); // child -> (parent, lc vertex)
    let mut queue: VecDeque<Graph> = VecDeque::new();
    seen.insert(g.clone(), (g.clone(), usize::MAX));
    queue.push_back(g.clone());
    while let Some(cur) = queue.pop_front() {
        for v in 0..cur.n() {
            if cur.degree(v) < 2 {
                continue;
            }
            let next = local_complement(&cur, v);
            if seen.contains_key(&next) {
                continue;
            }
            if seen.len() >= cap {
                return Ok(None);
            }
            seen.insert(next.clone(), (cur.clone(), v));
            if canonical_graph(&next)? == target_canon {
                // walk parents back to g
                let mut path = vec![v];
                let mut node = cur;
                while let Some((parent, lc)) = seen.get(&node) {
                    if *lc == usize::MAX {
                        break;
                    }
                    path.push(*lc);
                    node = parent.clone();
                }
                path.reverse();
                return Ok(Some(Some(path)));
            }
            queue.push_back(next);
        }
    }
    Ok(Some(None))
}

/// Default cap on orbit expansion (labeled graphs).
pub const ORBIT_CAP: usize = 2_000_000;

/// Whether `g` and `h` are related by a sequence of local complementations,
/// up to isomorphism. `Indeterminate` only when a cap truncated the search.
pub fn are_locally_equivalent(g: &Graph, h: &Graph) -> Result<Tri> {
    are_locally_equivalent_capped(g, h, ORBIT_CAP)
}

pub fn are_locally_equivalent_capped(g: &Graph, h: &Graph, cap: usize) -> Result<Tri> {
    if g.n() != h.n() {
        return Ok(Tri::False);
    }
    match orbit_search_iso(g, h, cap)? {
        None => Ok(Tri::Indeterminate),
        Some(Some(_)) => Ok(Tri::True),
        Some(None) => Ok(Tri::False),
    }
}

/// The elementary vertex-minor representatives at `v`: `G-v`, `(G*v)-v`, and
/// (when `v` has a neighbor) `(G∧uv)-v` for the least-index neighbor `u`,
/// deduplicated up to isomorphism.
pub fn elementary_vertex_minors(g: &Graph, v: usize) -> Result<Vec<Graph>> {
    let mut out: Vec<Graph> = Vec::new();
    let mut canons: Vec<Graph> = Vec::new();
    let mut push = |h: Graph| -> Result<()> {
        let c = canonical_graph(&h)?;
        if !canons.contains(&c) {
            canons.push(c);
            out.push(h);
        }
        Ok(())
    };
    push(g.delete_vertex(v))?;
    push(local_complement(g, v).delete_vertex(v))?;
    if let Some(u) = g.neighbors(v).min() {
        push(pivot(g, u, v)?.delete_vertex(v))?;
    }
    Ok(out)
}

/// All elementary one-vertex reductions at `v`, with every pivot-neighbor
/// choice, no deduplication. This is the exhaustive form used by minimality
/// checks, which must not assume the neighbor choice is immaterial.
pub fn all_elementary_reductions(g: &Graph, v: usize) -> Result<Vec<Graph>> {
    let mut out = vec![
        g.delete_vertex(v),
        local_complement(g, v).delete_vertex(v),
    ];
    for u in g.neighbors(v).iter() {
        out.push(pivot(g, u, v)?.delete_vertex(v));
    }
    Ok(out)
}

/// One step of a vertex-minor witness, in the labeling current at that step
/// (deletions renumber the remaining vertices in increasing order).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VmStep {
    Lc(usize),
    Pivot(usize, usize),
    Delete(usize),
}

/// A replayable certificate that one graph is a vertex-minor of another.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct VmWitness {
    pub steps: Vec<VmStep>,
}

impl VmWitness {
    /// Replays the steps from `host`; the result is isomorphic to the
    /// claimed minor when the witness is valid.
    pub fn replay(&self, host: &Graph) -> Result<Graph> {
        let mut g = host.clone();
        for &step in &self.steps {
            g = match step {
                VmStep::Lc(v) => {
                    if v >= g.n() {
                        return Err(Error::Domain(format!("witness LC({v}) out of range")));
                    }
                    local_complement(&g, v)
                }
                VmStep::Pivot(u, v) => {
                    if u >= g.n() || v >= g.n() {
                        return Err(Error::Domain(format!("witness PIVOT({u},{v}) out of range")));
                    }
                    pivot(&g, u, v)?
                }
                VmStep::Delete(v) => {
                    if v >= g.n() {
                        return Err(Error::Domain(format!("witness DELETE({v}) out of range")));
                    }
                    g.delete_vertex(v)
                }
            };
        }
        Ok(g)
    }
}

/// Outcome of a vertex-minor test.
#[derive(Debug, Clone)]
pub struct VmOutcome {
    pub result: Tri,
    pub witness: Option<VmWitness>,
}

/// Expansion budget for the vertex-minor search.
pub const VM_NODE_CAP: usize = 500_000;

/// Tests whether `h` is a vertex-minor of `g` (an induced subgraph of a graph
/// locally equivalent to `g`), searching over chains of elementary
/// reductions with all three kinds and every pivot-neighbor choice.
pub fn is_vertex_minor(h: &Graph, g: &Graph) -> Result<VmOutcome> {
    is_vertex_minor_capped(h, g, VM_NODE_CAP)
}

pub fn is_vertex_minor_capped(h: &Graph, g: &Graph, cap: usize) -> Result<VmOutcome> {
    if h.n() > g.n() {
        return Ok(VmOutcome {
            result: Tri::False,
            witness: None,
        });
    }
    let mut ctx = VmSearch {
        target: h.clone(),
        dead: HashSet::new(),
        nodes: 0,
        cap,
        truncated: false,
    };
    let witness = ctx.dfs(g)?;
    let result = match (&witness, ctx.truncated) {
        (Some(_), _) => Tri::True,
        (None, true) => Tri::Indeterminate,
        (None, false) => Tri::False,
    };
    Ok(VmOutcome { result, witness })
}

struct VmSearch {
    target: Graph,
    dead: HashSet<Graph>, // canonical graphs with no path to the target
    nodes: usize,
    cap: usize,
    truncated: bool,
}

impl VmSearch {
    fn dfs(&mut self, cur: &Graph) -> Result<Option<VmWitness>> {
        if cur.n() == self.target.n() {
            return match orbit_search_iso(cur, &self.target, self.cap)? {
                Some(Some(path)) => Ok(Some(VmWitness {
                    steps: path.into_iter().map(VmStep::Lc).collect(),
                })),
                Some(None) => Ok(None),
                None => {
                    self.truncated = true;
                    Ok(None)
                }
            };
        }
        let canon = canonical_graph(cur)?;
        if self.dead.contains(&canon) {
            return Ok(None);
        }
        self.nodes += 1;
        if self.nodes > self.cap {
            self.truncated = true;
            return Ok(None);
        }
        for v in 0..cur.n() {
            let mut reductions: Vec<(Vec<VmStep>, Graph)> = vec![
                (vec![VmStep::Delete(v)], cur.delete_vertex(v)),
                (
                    vec![VmStep::Lc(v), VmStep::Delete(v)],
                    local_complement(cur, v).delete_vertex(v),
                ),
            ];
            for u in cur.neighbors(v).iter() {
                reductions.push((
                    vec![VmStep::Pivot(u, v), VmStep::Delete(v)],
                    pivot(cur, u, v)?.delete_vertex(v),
                ));
            }
            for (prefix, reduced) in reductions {
                if let Some(tail) = self.dfs(&reduced)? {
                    let mut steps = prefix;
                    steps.extend(tail.steps);
                    return Ok(Some(VmWitness { steps }));
                }
            }
        }
        // only a definite failure may be cached
        if !self.truncated {
            self.dead.insert(canon);
        }
        Ok(None)
    }
}

/// The largest `L` such that the path on `L+1` vertices is a vertex-minor of
/// `g`; lengths count edges. `None` for the graph on zero vertices.
pub fn longest_path_vm(g: &Graph) -> Result<(Option<usize>, Tri)> {
    if g.n() == 0 {
        return Ok((None, Tri::True));
    }
    let mut best = 0usize;
    for len in 1..g.n() {
        let path = crate::graph::make_named(crate::graph::Family::Path(len as u32 + 1))?;
        let outcome = is_vertex_minor(&path, g)?;
        match outcome.result {
            Tri::True => best = len,
            Tri::False => break, // path minors are downward closed in length
            Tri::Indeterminate => return Ok((Some(best), Tri::Indeterminate)),
        }
    }
    Ok((Some(best), Tri::True))
}

/// Canonical forms of every labeled graph in the orbit of `g`.
pub fn orbit_canon_set(g: &Graph, cap: usize) -> Result<(HashSet<String>, bool)> {
    let orb = orbit(g, cap);
    let mut set = HashSet::new();
    for member in &orb.graphs {
        set.insert(canonical_form(member)?.canon);
    }
    Ok((set, orb.truncated))
}
