//! Extremal random-subgraph constructions and seeded Monte Carlo
//! path-threshold experiments on the finite window `[0, n)`.
//!
//! Random subgraphs live on the increasing pairs `(i, j)`, `i < j`, of the
//! window. The order model over `p` symbols realizes per-edge probability
//! `(1 - 1/p)/2` with no path of `p` edges, which is the extremal case; the
//! not-equal model realizes `1 - 1/p` with no `(p+1)`-clique. Experiments
//! use one 64-bit seed split into per-trial substreams, so trial
//! parallelism never changes the result.
//!
//! The infinite-path threshold 1/2 itself is not observable at finite
//! scale; it appears as the limit of the finite-path constants
//! `(1 - 1/p)/2` as `p` grows.

use std::collections::BTreeSet;

use rand::Rng;
use rayon::prelude::*;

use crate::graph::DirectedGraph;
use crate::measures::MeasureModel;
use crate::{rng, Error, Result};

/// One realization of a random subgraph of the window: an edge subset of
/// the increasing pairs `(i, j)`, `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphSample {
    window: usize,
    bits: Vec<bool>,
}

impl SubgraphSample {
    pub fn new(window: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut s = Self {
            window,
            bits: vec![false; window * window.saturating_sub(1) / 2],
        };
        for (i, j) in edges {
            if i >= j {
                return Err(Error::InvalidParameter(format!(
                    "sample edges must satisfy i < j, got ({i}, {j})"
                )));
            }
            if j >= window {
                return Err(Error::IndexOutOfRange {
                    index: j,
                    window,
                });
            }
            s.bits[s.pair_index(i, j)] = true;
        }
        Ok(s)
    }

    fn pair_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.window);
        i * self.window - i * (i + 1) / 2 + (j - i - 1)
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.bits[self.pair_index(i, j)]
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Pairs `(i, j)` with `i < j`, in the order used by `pair_index`.
    pub fn pairs(window: usize) -> impl Iterator<Item = (usize, usize)> {
        (0..window).flat_map(move |i| (i + 1..window).map(move |j| (i, j)))
    }

    pub fn to_graph(&self) -> DirectedGraph {
        let edges = Self::pairs(self.window).filter(|&(i, j)| self.has_edge(i, j));
        DirectedGraph::new(self.window, edges).expect("sample edges are valid")
    }

    /// Longest path in edges. Samples are acyclic by construction (edges go
    /// strictly upward), so the rank is always finite.
    pub fn longest_path_len(&self) -> usize {
        self.to_graph()
            .longest_path_length()
            .finite()
            .expect("upward edges cannot form a cycle")
    }

    pub fn clique_number(&self) -> Result<usize> {
        self.to_graph().clique_number()
    }
}

/// Order subgraph of a word: edge `(i, j)` present iff `x_i > x_j`.
///
/// Over `p` symbols the longest path never reaches `p` edges, because
/// symbol values strictly decrease along a path.
pub fn order_subgraph(word: &[usize]) -> SubgraphSample {
    let window = word.len();
    let edges = SubgraphSample::pairs(window).filter(|&(i, j)| word[i] > word[j]);
    SubgraphSample::new(window, edges).expect("pairs are in range")
}

/// Not-equal subgraph of a word: edge `(i, j)` present iff `x_i != x_j`.
/// Over `p` symbols no sample contains a clique of `p + 1` vertices.
pub fn neq_subgraph(word: &[usize]) -> SubgraphSample {
    let window = word.len();
    let edges = SubgraphSample::pairs(window).filter(|&(i, j)| word[i] != word[j]);
    SubgraphSample::new(window, edges).expect("pairs are in range")
}

/// Finitely-branching counterexample: a host graph with coloured edges and
/// disjoint colour zones. Atom `n` of the base space keeps exactly the
/// edges whose colour is outside zone `n`, so every edge survives except
/// under at most one atom, giving per-edge probability at least `1 - eps`
/// while every sample avoids the designated long paths.
#[derive(Debug, Clone)]
pub struct FinBranchingModel {
    host: DirectedGraph,
    edge_list: Vec<(usize, usize)>,
    colors: Vec<usize>,
    zones: Vec<BTreeSet<usize>>,
    atom_probs: Vec<f64>,
    eps: f64,
}

impl FinBranchingModel {
    pub fn new(
        host: DirectedGraph,
        colors: Vec<usize>,
        zones: Vec<BTreeSet<usize>>,
        atom_probs: Vec<f64>,
        eps: f64,
    ) -> Result<Self> {
        if eps <= 0.0 {
            return Err(Error::InvalidParameter(format!("eps must be positive, got {eps}")));
        }
        let edge_list: Vec<(usize, usize)> = host.edges().collect();
        if edge_list.iter().any(|&(i, j)| i >= j) {
            return Err(Error::InvalidParameter(
                "host edges must satisfy i < j to form window samples".into(),
            ));
        }
        if colors.len() != edge_list.len() {
            return Err(Error::DimensionMismatch {
                expected: edge_list.len(),
                got: colors.len(),
            });
        }
        if atom_probs.len() != zones.len() {
            return Err(Error::DimensionMismatch {
                expected: zones.len(),
                got: atom_probs.len(),
            });
        }
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        for zone in &zones {
            for &c in zone {
                if !seen.insert(c) {
                    return Err(Error::ZoneOverlap { color: c });
                }
            }
        }
        let mut sum = 0.0;
        for &p in &atom_probs {
            if !(0.0..1.0).contains(&p) || p >= eps {
                return Err(Error::InvalidParameter(format!(
                    "atom probability {p} must lie in [0, eps) with eps = {eps}"
                )));
            }
            sum += p;
        }
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidDistribution(format!(
                "atom probabilities sum to {sum}"
            )));
        }
        Ok(Self {
            host,
            edge_list,
            colors,
            zones,
            atom_probs,
            eps,
        })
    }

    /// Uniform atoms, one zone `{level}` per colour level. Valid whenever
    /// `1/levels < eps`.
    pub fn with_uniform_atoms(
        host: DirectedGraph,
        colors: Vec<usize>,
        levels: usize,
        eps: f64,
    ) -> Result<Self> {
        let zones = (0..levels).map(|l| BTreeSet::from([l])).collect();
        let atom_probs = vec![1.0 / levels as f64; levels];
        Self::new(host, colors, zones, atom_probs, eps)
    }

    pub fn atom_count(&self) -> usize {
        self.atom_probs.len()
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn host(&self) -> &DirectedGraph {
        &self.host
    }

    /// The sample of atom `n`: edges whose colour is not in zone `n`.
    pub fn sample(&self, atom: usize) -> SubgraphSample {
        let zone = &self.zones[atom];
        let edges = self
            .edge_list
            .iter()
            .zip(&self.colors)
            .filter(|(_, c)| !zone.contains(c))
            .map(|(&e, _)| e);
        SubgraphSample::new(self.host.vertex_count(), edges).expect("host edges are valid")
    }

    /// Exact inclusion probability of edge `index`: one minus the mass of
    /// the single atom (if any) whose zone holds the edge's colour.
    pub fn edge_probability(&self, index: usize) -> f64 {
        let c = self.colors[index];
        let removed: f64 = self
            .zones
            .iter()
            .zip(&self.atom_probs)
            .filter(|(z, _)| z.contains(&c))
            .map(|(_, p)| p)
            .sum();
        1.0 - removed
    }

    pub fn edge_list(&self) -> &[(usize, usize)] {
        &self.edge_list
    }

    /// The base space as an explicit atom model over the atom index
    /// (window 1, one symbol per atom).
    pub fn measure_model(&self) -> MeasureModel {
        let atoms = self
            .atom_probs
            .iter()
            .enumerate()
            .map(|(n, &p)| (p, vec![n]))
            .collect();
        MeasureModel::atoms(1, self.atom_count(), atoms).expect("atom probabilities are valid")
    }

    pub fn draw_atom(&self, rng: &mut impl Rng) -> usize {
        let u: f64 = rng.gen();
        let mut acc = 0.0;
        for (n, &p) in self.atom_probs.iter().enumerate() {
            acc += p;
            if u < acc {
                return n;
            }
        }
        self.atom_probs.len() - 1
    }
}

/// Complete binary tree of the given depth (in edges), vertices numbered in
/// BFS order so every edge goes upward, with each edge coloured by the
/// level of its parent. Returns the tree and per-edge colours aligned with
/// the graph's canonical edge order.
pub fn depth_colored_binary_tree(depth: usize) -> (DirectedGraph, Vec<usize>) {
    let vertices = (1usize << (depth + 1)) - 1;
    let mut edges = Vec::new();
    for v in 0..vertices {
        for child in [2 * v + 1, 2 * v + 2] {
            if child < vertices {
                edges.push((v, child));
            }
        }
    }
    let tree = DirectedGraph::new(vertices, edges).expect("tree edges are valid");
    let level = |v: usize| (v + 1).ilog2() as usize;
    let colors = tree.edges().map(|(parent, _)| level(parent)).collect();
    (tree, colors)
}

/// Random subgraph model over real-indexed events: independent uniform
/// coordinates on a finite increasing grid, with edge `(i, j)` present iff
/// `x_i > x_j + eps`. The per-edge probability is exactly `(1-eps)^2 / 2`,
/// and no sample contains a chain longer than `1/eps` edges.
#[derive(Debug, Clone)]
pub struct RealsModel {
    eps: f64,
    grid: Vec<f64>,
}

impl RealsModel {
    pub fn new(eps: f64, grid: Vec<f64>) -> Result<Self> {
        if !(0.0..1.0).contains(&eps) || eps == 0.0 {
            return Err(Error::InvalidParameter(format!(
                "eps must lie strictly between 0 and 1, got {eps}"
            )));
        }
        if grid.len() < 2 {
            return Err(Error::InvalidParameter("grid needs at least two points".into()));
        }
        if grid.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NonIncreasingIndices);
        }
        Ok(Self { eps, grid })
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn window(&self) -> usize {
        self.grid.len()
    }

    pub fn edge_probability(&self) -> f64 {
        (1.0 - self.eps) * (1.0 - self.eps) / 2.0
    }

    /// Longest chain any sample can carry: `floor(1/eps)` edges, since each
    /// chain edge forces a drop of `eps` inside `[0, 1]`.
    pub fn max_chain_len(&self) -> usize {
        (1.0 / self.eps).floor() as usize
    }

    pub fn sample(&self, rng: &mut impl Rng) -> SubgraphSample {
        let n = self.window();
        let xs: Vec<f64> = (0..n).map(|_| rng.gen::<f64>()).collect();
        let eps = self.eps;
        let edges = SubgraphSample::pairs(n).filter(|&(i, j)| xs[i] > xs[j] + eps);
        SubgraphSample::new(n, edges).expect("pairs are in range")
    }
}

/// Input to a path-threshold experiment.
#[derive(Debug, Clone)]
pub enum PathModel {
    /// Sample a word from the measure model, take its order subgraph.
    Order(MeasureModel),
    /// Independent edges, each present with the given probability.
    IndependentEdges(f64),
}

/// Outcome of a Monte Carlo path-threshold experiment.
#[derive(Debug, Clone)]
pub struct ThresholdReport {
    /// Target path length `p`, in edges.
    pub target_path_len: usize,
    /// The finite-path threshold constant `(1 - 1/p) / 2`.
    pub lambda_p: f64,
    /// Smallest empirical edge frequency over the window.
    pub min_edge_prob: f64,
    /// Empirical per-pair edge frequencies, in `SubgraphSample::pairs` order.
    pub edge_freq: Vec<f64>,
    /// Fraction of samples containing a path of at least `p` edges.
    pub mu_p: f64,
    /// Lower bound `(lambda - lambda_p) / (1 - lambda_p)` with `lambda` the
    /// empirical minimum edge probability.
    pub paper_bound: f64,
    pub trials: u64,
    pub seed: u64,
    pub window: usize,
    /// Binomial standard error of `mu_p`.
    pub stderr: f64,
    /// Largest path length observed in any sample.
    pub max_longest_path: usize,
}

/// Runs `trials` seeded samples of the model on the window, computes the
/// longest path of each via the rank DP, and fills the report. Trials are
/// independent substreams of the seed and may run in parallel; aggregation
/// is sums only, so the result does not depend on scheduling.
pub fn estimate_path_probability(
    model: &PathModel,
    p: usize,
    window: usize,
    trials: u64,
    seed: u64,
) -> Result<ThresholdReport> {
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    if p == 0 {
        return Err(Error::InvalidParameter("target path length must be at least 1".into()));
    }
    if window < p + 1 {
        return Err(Error::InvalidParameter(format!(
            "window {window} too small for paths of {p} edges"
        )));
    }
    match model {
        PathModel::Order(m) if m.window() < window => {
            return Err(Error::InvalidParameter(format!(
                "model window {} smaller than experiment window {window}",
                m.window()
            )));
        }
        PathModel::IndependentEdges(q) if !(0.0..=1.0).contains(q) => {
            return Err(Error::InvalidParameter(format!("edge probability {q} out of range")));
        }
        _ => {}
    }

    let n_pairs = window * (window - 1) / 2;

    struct Tally {
        edge_counts: Vec<u64>,
        path_hits: u64,
        max_path: usize,
    }

    let tally = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut r = rng::stream(seed, t);
            let sample = match model {
                PathModel::Order(m) => {
                    let word = m.sample(&mut r);
                    order_subgraph(&word[..window])
                }
                PathModel::IndependentEdges(q) => {
                    let edges = SubgraphSample::pairs(window).filter(|_| r.gen_bool(*q));
                    SubgraphSample::new(window, edges).expect("pairs are in range")
                }
            };
            let len = sample.longest_path_len();
            let mut edge_counts = vec![0u64; n_pairs];
            for (k, (i, j)) in SubgraphSample::pairs(window).enumerate() {
                if sample.has_edge(i, j) {
                    edge_counts[k] = 1;
                }
            }
            Tally {
                edge_counts,
                path_hits: (len >= p) as u64,
                max_path: len,
            }
        })
        .reduce(
            || Tally {
                edge_counts: vec![0; n_pairs],
                path_hits: 0,
                max_path: 0,
            },
            |mut a, b| {
                for (x, y) in a.edge_counts.iter_mut().zip(&b.edge_counts) {
                    *x += y;
                }
                a.path_hits += b.path_hits;
                a.max_path = a.max_path.max(b.max_path);
                a
            },
        );

    let t = trials as f64;
    let edge_freq: Vec<f64> = tally.edge_counts.iter().map(|&c| c as f64 / t).collect();
    let min_edge_prob = edge_freq.iter().copied().fold(f64::INFINITY, f64::min);
    let mu_p = tally.path_hits as f64 / t;
    let lambda_p = 0.5 * (1.0 - 1.0 / p as f64);
    let paper_bound = (min_edge_prob - lambda_p) / (1.0 - lambda_p);
    let stderr = (mu_p * (1.0 - mu_p) / t).sqrt();
    Ok(ThresholdReport {
        target_path_len: p,
        lambda_p,
        min_edge_prob,
        edge_freq,
        mu_p,
        paper_bound,
        trials,
        seed,
        window,
        stderr,
        max_longest_path: tally.max_path,
    })
}

/// Checks the conditional lower bound of the report: the empirical path
/// probability, padded by `sigmas` standard errors, must reach the bound.
pub fn verify_finpath_bound(report: &ThresholdReport, sigmas: f64) -> bool {
    report.mu_p + sigmas * report.stderr >= report.paper_bound
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::EventSpec;

    #[test]
    fn order_subgraph_examples() {
        let s = order_subgraph(&[0, 1, 2, 3]);
        assert_eq!(s.edge_count(), 0);

        let s = order_subgraph(&[2, 1, 0]);
        assert!(s.has_edge(0, 1) && s.has_edge(0, 2) && s.has_edge(1, 2));
        assert_eq!(s.longest_path_len(), 2);
    }

    #[test]
    fn order_subgraph_paths_stay_short() {
        use rand::Rng;
        let mut rng = crate::rng::stream(41, 0);
        for _ in 0..300 {
            let p = rng.gen_range(2..=5);
            let n = rng.gen_range(2..=10);
            let word: Vec<usize> = (0..n).map(|_| rng.gen_range(0..p)).collect();
            assert!(order_subgraph(&word).longest_path_len() < p, "{word:?}");
        }
    }

    #[test]
    fn neq_subgraph_examples() {
        let s = neq_subgraph(&[1, 1, 1, 1]);
        assert_eq!(s.edge_count(), 0);

        let s = neq_subgraph(&[0, 1, 0, 1]);
        assert_eq!(s.clique_number().unwrap(), 2);
    }

    #[test]
    fn neq_subgraph_cliques_stay_small() {
        use rand::Rng;
        let mut rng = crate::rng::stream(42, 0);
        for _ in 0..200 {
            let p = rng.gen_range(2..=4);
            let n = rng.gen_range(2..=9);
            let word: Vec<usize> = (0..n).map(|_| rng.gen_range(0..p)).collect();
            assert!(neq_subgraph(&word).clique_number().unwrap() <= p, "{word:?}");
        }
    }

    #[test]
    fn finb_construction() {
        let depth = 12;
        let eps = 0.1; // needs 1/depth < eps
        let (tree, colors) = depth_colored_binary_tree(depth);
        let model = FinBranchingModel::with_uniform_atoms(tree, colors, depth, eps).unwrap();

        for e in 0..model.edge_list().len() {
            assert!(model.edge_probability(e) >= 1.0 - eps);
        }

        // Removing level n cuts every root-to-leaf path; paths are
        // enumerated explicitly as the independent check.
        for atom in 0..model.atom_count() {
            let sample = model.sample(atom);
            let mut stack = vec![(0usize, 0usize)];
            let mut survived = false;
            while let Some((v, len)) = stack.pop() {
                if len == depth {
                    survived = true;
                    break;
                }
                for child in [2 * v + 1, 2 * v + 2] {
                    if child < sample.window() && sample.has_edge(v, child) {
                        stack.push((child, len + 1));
                    }
                }
            }
            assert!(!survived, "atom {atom} kept a root-to-leaf path");
            assert!(sample.longest_path_len() < depth);
        }

        // An edge whose colour sits in no zone is kept by every atom.
        let host = DirectedGraph::new(3, [(0, 1), (1, 2)]).unwrap();
        let model = FinBranchingModel::new(
            host,
            vec![7, 0],
            vec![BTreeSet::from([0]), BTreeSet::from([1]), BTreeSet::from([2])],
            vec![1.0 / 3.0; 3],
            0.5,
        )
        .unwrap();
        for atom in 0..3 {
            assert!(model.sample(atom).has_edge(0, 1));
        }
        assert_eq!(model.edge_probability(0), 1.0);
    }

    #[test]
    fn finb_rejects_bad_input() {
        let (tree, colors) = depth_colored_binary_tree(3);
        assert!(matches!(
            FinBranchingModel::with_uniform_atoms(tree.clone(), colors.clone(), 3, 0.0),
            Err(Error::InvalidParameter(_))
        ));
        // Overlapping zones.
        let zones = vec![BTreeSet::from([0, 1]), BTreeSet::from([1])];
        assert!(matches!(
            FinBranchingModel::new(tree.clone(), colors.clone(), zones, vec![0.5, 0.5], 0.9),
            Err(Error::ZoneOverlap { color: 1 })
        ));
        // Atom probability at or above eps.
        assert!(FinBranchingModel::with_uniform_atoms(tree, colors, 3, 0.2).is_err());
    }

    #[test]
    fn finb_atom_model_is_consistent() {
        let (tree, colors) = depth_colored_binary_tree(4);
        let model = FinBranchingModel::with_uniform_atoms(tree, colors, 4, 0.3).unwrap();
        let atoms = model.measure_model();
        for n in 0..model.atom_count() {
            let p = crate::measures::event_prob(&atoms, &EventSpec::Cylinder(vec![(0, n)])).unwrap();
            assert!((p - 0.25).abs() < 1e-15);
        }
    }

    #[test]
    fn reals_model_examples() {
        let grid: Vec<f64> = (0..10).map(|i| i as f64).collect();
        let model = RealsModel::new(0.3, grid).unwrap();
        assert!((model.edge_probability() - 0.49 / 2.0).abs() < 1e-15);
        assert_eq!(model.max_chain_len(), 3);

        // eps -> 0 limit of the edge probability is 1/2.
        let tiny = RealsModel::new(1e-9, vec![0.0, 1.0]).unwrap();
        assert!((tiny.edge_probability() - 0.5).abs() < 1e-8);

        assert!(RealsModel::new(0.0, vec![0.0, 1.0]).is_err());
        assert!(RealsModel::new(1.5, vec![0.0, 1.0]).is_err());
    }

    #[test]
    fn reals_model_chains_and_frequency() {
        let window = 12;
        let grid: Vec<f64> = (0..window).map(|i| i as f64 * 0.5).collect();
        let model = RealsModel::new(0.25, grid).unwrap();
        let trials = 20_000u64;
        let mut edge_hits = 0u64;
        let mut rng = crate::rng::stream(43, 0);
        for _ in 0..trials {
            let s = model.sample(&mut rng);
            assert!(s.longest_path_len() <= model.max_chain_len());
            if s.has_edge(0, 1) {
                edge_hits += 1;
            }
        }
        let freq = edge_hits as f64 / trials as f64;
        let q = model.edge_probability();
        let sigma = (q * (1.0 - q) / trials as f64).sqrt();
        assert!((freq - q).abs() <= 4.0 * sigma, "freq {freq} expected {q}");
    }

    #[test]
    fn order_model_experiment_is_tight() {
        let p = 3;
        let model = PathModel::Order(MeasureModel::uniform_bernoulli(8, p));
        let report = estimate_path_probability(&model, p, 8, 2000, 7).unwrap();
        assert_eq!(report.mu_p, 0.0);
        assert!(report.max_longest_path < p);
        assert!(verify_finpath_bound(&report, 4.0));
    }

    #[test]
    fn sure_edges_have_sure_paths() {
        let report =
            estimate_path_probability(&PathModel::IndependentEdges(1.0), 3, 8, 10, 1).unwrap();
        assert_eq!(report.mu_p, 1.0);
        assert_eq!(report.min_edge_prob, 1.0);
        assert!(verify_finpath_bound(&report, 0.0));
    }

    #[test]
    fn conditional_bound_holds_for_independent_edges() {
        let report =
            estimate_path_probability(&PathModel::IndependentEdges(0.6), 2, 8, 20_000, 11).unwrap();
        let expect_bound = (0.6 - 0.25) / 0.75;
        assert!((report.paper_bound - expect_bound).abs() < 0.05);
        assert!(report.mu_p > report.paper_bound);
        assert!(verify_finpath_bound(&report, 4.0));
    }

    #[test]
    fn experiment_is_reproducible_and_parallel_safe() {
        let model = PathModel::IndependentEdges(0.4);
        let a = estimate_path_probability(&model, 2, 6, 5000, 99).unwrap();
        let b = estimate_path_probability(&model, 2, 6, 5000, 99).unwrap();
        assert_eq!(a.mu_p, b.mu_p);
        assert_eq!(a.edge_freq, b.edge_freq);
    }

    #[test]
    fn mu_p_is_monotone_in_target_length() {
        // Same seed means the same sample set for each p.
        let model = PathModel::IndependentEdges(0.5);
        let mut last = f64::INFINITY;
        for p in 1..=4 {
            let r = estimate_path_probability(&model, p, 8, 4000, 5).unwrap();
            assert!(r.mu_p <= last + 1e-15);
            last = r.mu_p;
        }
    }

    #[test]
    fn chromatic_threshold_positivity() {
        // Above 1 - 1/p the chromatic number reaches p with positive
        // frequency at desk scale.
        let window = 12;
        for p in 2..=4 {
            let q = 1.0 - 1.0 / p as f64 + 0.15;
            let q = q.min(0.95);
            let mut hits = 0;
            for t in 0..60u64 {
                let mut r = crate::rng::stream(44, t);
                let edges = SubgraphSample::pairs(window).filter(|_| r.gen_bool(q));
                let s = SubgraphSample::new(window, edges).unwrap();
                if crate::graph::chromatic_number(&s.to_graph()).unwrap() >= p {
                    hits += 1;
                }
            }
            assert!(hits > 0, "p={p}");
        }
    }

    #[test]
    fn rejects_bad_experiment_parameters() {
        let m = PathModel::IndependentEdges(0.5);
        assert!(estimate_path_probability(&m, 0, 8, 10, 0).is_err());
        assert!(estimate_path_probability(&m, 3, 3, 10, 0).is_err());
        assert!(estimate_path_probability(&m, 2, 8, 0, 0).is_err());
        let small = PathModel::Order(MeasureModel::uniform_bernoulli(4, 2));
        assert!(estimate_path_probability(&small, 2, 8, 10, 0).is_err());
    }
}
