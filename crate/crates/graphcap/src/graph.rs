//! Finite directed graphs and the exact structural queries the threshold
//! reductions rely on: cliques, homomorphisms, chromatic number, and
//! longest-path ranks.
//!
//! Graphs are immutable after construction. Exact search is the contract
//! here; the intended scale is desk-sized (roughly ≤ 20 vertices for clique
//! number, ≤ 12 for chromatic number).

use std::collections::BTreeSet;

use crate::{Error, Result};

/// A finite directed graph on vertices `0..vertex_count`.
///
/// Loops `(a, a)` are permitted. Edges have set semantics: duplicates are
/// rejected at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

impl DirectedGraph {
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= vertex_count {
                return Err(Error::VertexOutOfRange {
                    vertex: a,
                    vertex_count,
                });
            }
            if b >= vertex_count {
                return Err(Error::VertexOutOfRange {
                    vertex: b,
                    vertex_count,
                });
            }
            if !set.insert((a, b)) {
                return Err(Error::DuplicateEdge { from: a, to: b });
            }
        }
        let mut out_adj = vec![Vec::new(); vertex_count];
        let mut in_adj = vec![Vec::new(); vertex_count];
        for &(a, b) in &set {
            out_adj[a].push(b);
            in_adj[b].push(a);
        }
        Ok(Self {
            vertex_count,
            edges: set,
            out_adj,
            in_adj,
        })
    }

    /// Graph with `vertex_count` vertices and no edges.
    pub fn edgeless(vertex_count: usize) -> Self {
        Self::new(vertex_count, []).expect("edgeless graph is always valid")
    }

    /// Complete symmetric irreflexive graph `K_p`: all ordered pairs `(a, b)`
    /// with `a != b`.
    pub fn complete(p: usize) -> Self {
        let edges = (0..p).flat_map(|a| (0..p).filter(move |&b| b != a).map(move |b| (a, b)));
        Self::new(p, edges).expect("complete graph is always valid")
    }

    /// Transitive tournament `T_p`: edges `(i, j)` for `i < j`.
    pub fn transitive_tournament(p: usize) -> Self {
        let edges = (0..p).flat_map(|i| (i + 1..p).map(move |j| (i, j)));
        Self::new(p, edges).expect("tournament is always valid")
    }

    /// Symmetric cycle on `n` vertices (both directions of each cycle edge).
    pub fn symmetric_cycle(n: usize) -> Self {
        let edges = (0..n).flat_map(|i| {
            let j = (i + 1) % n;
            [(i, j), (j, i)]
        });
        Self::new(n, edges).expect("cycle is always valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a, b))
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    /// Total degree (in + out), used for search ordering.
    pub fn degree(&self, v: usize) -> usize {
        self.out_adj[v].len() + self.in_adj[v].len()
    }

    pub fn is_irreflexive(&self) -> bool {
        (0..self.vertex_count).all(|v| !self.has_edge(v, v))
    }

    pub fn is_symmetric(&self) -> bool {
        self.edges.iter().all(|&(a, b)| self.has_edge(b, a))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.edges.iter().all(|&(a, b)| !self.has_edge(b, a))
    }

    /// Vertex with a loop, if any.
    pub fn loop_vertex(&self) -> Option<usize> {
        (0..self.vertex_count).find(|&v| self.has_edge(v, v))
    }

    /// Graph with every edge mirrored.
    pub fn symmetric_closure(&self) -> DirectedGraph {
        let mut set = self.edges.clone();
        for &(a, b) in &self.edges {
            set.insert((b, a));
        }
        DirectedGraph::new(self.vertex_count, set).expect("closure preserves validity")
    }

    /// Adjacency of the underlying undirected graph: `a ~ b` iff at least one
    /// of `(a, b)`, `(b, a)` is an edge (`a != b`; loops are ignored).
    fn undirected_matrix(&self) -> Vec<Vec<bool>> {
        let n = self.vertex_count;
        let mut m = vec![vec![false; n]; n];
        for &(a, b) in &self.edges {
            if a != b {
                m[a][b] = true;
                m[b][a] = true;
            }
        }
        m
    }

    /// Exact clique number: the largest `S` such that every unordered pair of
    /// distinct vertices of `S` is connected in at least one direction.
    ///
    /// Errors on the empty graph.
    pub fn clique_number(&self) -> Result<usize> {
        Ok(self.max_clique()?.len())
    }

    /// One maximum clique, found by branch and bound. Ties are broken towards
    /// lexicographically least vertex sets so results are reproducible.
    pub fn max_clique(&self) -> Result<Vec<usize>> {
        if self.vertex_count == 0 {
            return Err(Error::EmptyGraph);
        }
        let adj = self.undirected_matrix();
        let n = self.vertex_count;

        // Vertices by descending undirected degree, ties by index.
        let mut order: Vec<usize> = (0..n).collect();
        let deg = |v: usize| adj[v].iter().filter(|&&x| x).count();
        order.sort_by_key(|&v| (std::cmp::Reverse(deg(v)), v));

        let mut best: Vec<usize> = vec![order[0]];
        let mut current: Vec<usize> = Vec::new();
        branch(&adj, &order, &mut current, &mut best);
        let mut clique = best;
        clique.sort_unstable();
        Ok(clique)
    }

    /// Every clique of the graph (vertex sets, each sorted), including
    /// singletons. Exponential in the worst case; callers guard the size.
    pub fn all_cliques(&self) -> Vec<Vec<usize>> {
        let adj = self.undirected_matrix();
        let n = self.vertex_count;
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
        while let Some((clique, from)) = stack.pop() {
            if !clique.is_empty() {
                out.push(clique.clone());
            }
            for v in from..n {
                if clique.iter().all(|&u| adj[u][v]) {
                    let mut next = clique.clone();
                    next.push(v);
                    stack.push((next, v + 1));
                }
            }
        }
        out.sort();
        out
    }

    /// Maximal cliques via Bron–Kerbosch with pivoting.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let adj = self.undirected_matrix();
        let n = self.vertex_count;
        let mut out = Vec::new();
        let mut r = Vec::new();
        let p: Vec<usize> = (0..n).collect();
        bron_kerbosch(&adj, &mut r, p, Vec::new(), &mut out);
        for c in &mut out {
            c.sort_unstable();
        }
        out.sort();
        out
    }

    /// Longest-path rank of every vertex, with vertices that can reach a
    /// cycle marked [`Rank::Cycle`].
    pub fn rank_vector(&self) -> RankVector {
        let n = self.vertex_count;
        let mut remaining: Vec<usize> = (0..n).map(|v| self.out_adj[v].len()).collect();
        let mut ranks: Vec<Option<usize>> = vec![None; n];
        let mut queue: Vec<usize> = (0..n).filter(|&v| remaining[v] == 0).collect();
        while let Some(v) = queue.pop() {
            let rank = self.out_adj[v]
                .iter()
                .map(|&w| ranks[w].expect("out-neighbors finalized before v") + 1)
                .max()
                .unwrap_or(0);
            ranks[v] = Some(rank);
            for &u in &self.in_adj[v] {
                if u == v {
                    continue;
                }
                remaining[u] -= 1;
                if remaining[u] == 0 {
                    queue.push(u);
                }
            }
        }
        RankVector {
            ranks: ranks
                .into_iter()
                .map(|r| r.map_or(Rank::Cycle, Rank::Finite))
                .collect(),
        }
    }

    /// Maximum rank over vertices, measured in edges; [`Rank::Cycle`] if any
    /// vertex reaches a cycle. `Finite(0)` for edgeless graphs.
    pub fn longest_path_length(&self) -> Rank {
        let rv = self.rank_vector();
        let mut max = 0;
        for r in &rv.ranks {
            match r {
                Rank::Cycle => return Rank::Cycle,
                Rank::Finite(k) => max = max.max(*k),
            }
        }
        Rank::Finite(max)
    }
}

fn branch(adj: &[Vec<bool>], candidates: &[usize], current: &mut Vec<usize>, best: &mut Vec<usize>) {
    if current.len() + candidates.len() <= best.len() {
        return;
    }
    if candidates.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    for (i, &v) in candidates.iter().enumerate() {
        if current.len() + (candidates.len() - i) <= best.len() {
            return;
        }
        let rest: Vec<usize> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|&u| adj[v][u])
            .collect();
        current.push(v);
        branch(adj, &rest, current, best);
        current.pop();
    }
}

fn bron_kerbosch(
    adj: &[Vec<bool>],
    r: &mut Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        if !r.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&v| adj[u][v]).count())
        .expect("p or x nonempty");
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
    let mut p = p;
    let mut x = x;
    for v in candidates {
        let p2: Vec<usize> = p.iter().copied().filter(|&u| adj[v][u]).collect();
        let x2: Vec<usize> = x.iter().copied().filter(|&u| adj[v][u]).collect();
        r.push(v);
        bron_kerbosch(adj, r, p2, x2, out);
        r.pop();
        p.retain(|&u| u != v);
        x.push(v);
    }
}

/// Longest-path rank of a single vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rank {
    /// Length in edges of the longest path starting at the vertex.
    Finite(usize),
    /// The vertex can reach a directed cycle, so paths from it are unbounded.
    Cycle,
}

impl Rank {
    pub fn finite(self) -> Option<usize> {
        match self {
            Rank::Finite(k) => Some(k),
            Rank::Cycle => None,
        }
    }

    pub fn is_cycle(self) -> bool {
        matches!(self, Rank::Cycle)
    }

    /// `true` when the rank is `Cycle` or a finite value `>= p`.
    pub fn at_least(self, p: usize) -> bool {
        match self {
            Rank::Cycle => true,
            Rank::Finite(k) => k >= p,
        }
    }
}

impl std::fmt::Display for Rank {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Rank::Finite(k) => write!(f, "{k}"),
            Rank::Cycle => write!(f, "CYCLE"),
        }
    }
}

/// Per-vertex longest-path ranks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankVector {
    pub ranks: Vec<Rank>,
}

impl RankVector {
    pub fn get(&self, v: usize) -> Rank {
        self.ranks[v]
    }
}

/// A graph morphism witness: a vertex map `V_G -> V_F` carrying every edge of
/// `G` onto an edge of `F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomWitness {
    pub assignment: Vec<usize>,
}

impl HomWitness {
    /// Checks the morphism property against the two graphs.
    pub fn validate(&self, g: &DirectedGraph, f: &DirectedGraph) -> bool {
        self.assignment.len() == g.vertex_count()
            && self.assignment.iter().all(|&a| a < f.vertex_count())
            && g.edges()
                .all(|(i, j)| f.has_edge(self.assignment[i], self.assignment[j]))
    }
}

/// Searches for a graph morphism `G -> F` by backtracking with
/// forward-checking. Vertices of `G` are assigned in order of descending
/// degree (ties towards lower index); candidate values are tried in
/// ascending order, so the returned witness is deterministic.
pub fn hom_exists(g: &DirectedGraph, f: &DirectedGraph) -> Option<HomWitness> {
    let ng = g.vertex_count();
    let nf = f.vertex_count();
    if ng == 0 {
        return Some(HomWitness { assignment: vec![] });
    }
    if nf == 0 {
        return None;
    }

    let mut order: Vec<usize> = (0..ng).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut position = vec![0usize; ng];
    for (idx, &v) in order.iter().enumerate() {
        position[v] = idx;
    }

    // Initial domains; a loop in G forces a loop on the image.
    let full: Vec<usize> = (0..nf).collect();
    let mut domains: Vec<Vec<usize>> = (0..ng)
        .map(|v| {
            if g.has_edge(v, v) {
                full.iter().copied().filter(|&a| f.has_edge(a, a)).collect()
            } else {
                full.clone()
            }
        })
        .collect();
    if domains.iter().any(|d| d.is_empty()) {
        return None;
    }

    let mut assignment = vec![usize::MAX; ng];
    if search(g, f, &order, &position, 0, &mut assignment, &mut domains) {
        Some(HomWitness { assignment })
    } else {
        None
    }
}

fn search(
    g: &DirectedGraph,
    f: &DirectedGraph,
    order: &[usize],
    position: &[usize],
    depth: usize,
    assignment: &mut Vec<usize>,
    domains: &mut Vec<Vec<usize>>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let candidates = domains[v].clone();
    for a in candidates {
        assignment[v] = a;
        // Forward-check every unassigned vertex constrained by v.
        let mut pruned: Vec<(usize, Vec<usize>)> = Vec::new();
        let mut dead = false;
        let mut targets: Vec<usize> = g
            .out_neighbors(v)
            .iter()
            .chain(g.in_neighbors(v).iter())
            .copied()
            .filter(|&u| u != v && position[u] > depth)
            .collect();
        targets.sort_unstable();
        targets.dedup();
        for u in targets {
            let forward = g.has_edge(v, u);
            let backward = g.has_edge(u, v);
            let filtered: Vec<usize> = domains[u]
                .iter()
                .copied()
                .filter(|&b| (!forward || f.has_edge(a, b)) && (!backward || f.has_edge(b, a)))
                .collect();
            if filtered.is_empty() {
                dead = true;
            }
            pruned.push((u, std::mem::replace(&mut domains[u], filtered)));
            if dead {
                break;
            }
        }
        if !dead && search(g, f, order, position, depth + 1, assignment, domains) {
            return true;
        }
        for (u, saved) in pruned.into_iter().rev() {
            domains[u] = saved;
        }
    }
    assignment[v] = usize::MAX;
    false
}

/// Smallest `p` with a morphism into `K_p`. Requires an irreflexive graph;
/// a loop makes every colouring fail, so it is rejected as a domain error.
pub fn chromatic_number(g: &DirectedGraph) -> Result<usize> {
    if let Some(v) = g.loop_vertex() {
        return Err(Error::LoopPresent { vertex: v });
    }
    let mut p = 1;
    loop {
        if hom_exists(g, &DirectedGraph::complete(p)).is_some() {
            return Ok(p);
        }
        p += 1;
        debug_assert!(p <= g.vertex_count().max(1));
    }
}

/// All labeled directed graphs on `n` vertices, optionally with loops.
/// Intended for exhaustive desk-scale verification; the count is
/// `2^(n^2)` (or `2^(n(n-1))` without loops).
pub fn enumerate_graphs(n: usize, allow_loops: bool) -> impl Iterator<Item = DirectedGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| allow_loops || a != b)
        .collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        DirectedGraph::new(n, edges).expect("enumerated edges are valid")
    })
}
