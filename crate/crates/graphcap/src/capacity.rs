//! The capacity of a finite directed graph: the supremum over the vertex
//! simplex of the edge quadratic form `sum over (a,b) in E of l_a * l_b`.
//!
//! Three routes are provided. `capacity_closed_form` covers graphs with a
//! loop and symmetric or antisymmetric graphs, where the value is determined
//! by the clique number. `capacity_support_enum` is a brute-force grid
//! oracle for at most six vertices. `capacity_numeric` is a multi-start
//! replicator ascent whose result is a certified lower bound; on graphs with
//! a closed form it recovers the exact value because every uniform-on-clique
//! point is used as a starting seed.

use rand::Rng;

use crate::graph::DirectedGraph;
use crate::{rng, Error, Result};

/// A point of the vertex simplex: nonnegative weights summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplexDist {
    weights: Vec<f64>,
}

const SIMPLEX_TOL: f64 = 1e-12;

impl SimplexDist {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidDistribution("empty weight vector".into()));
        }
        if let Some(w) = weights.iter().find(|w| !w.is_finite() || **w < 0.0) {
            return Err(Error::InvalidDistribution(format!("negative or non-finite weight {w}")));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > SIMPLEX_TOL {
            return Err(Error::InvalidDistribution(format!(
                "weights sum to {sum}, expected 1 within {SIMPLEX_TOL:e}"
            )));
        }
        Ok(Self { weights })
    }

    pub fn uniform(n: usize) -> Self {
        assert!(n > 0, "uniform distribution needs at least one symbol");
        Self {
            weights: vec![1.0 / n as f64; n],
        }
    }

    pub fn point_mass(n: usize, at: usize) -> Self {
        assert!(at < n);
        let mut weights = vec![0.0; n];
        weights[at] = 1.0;
        Self { weights }
    }

    /// Uniform distribution on `support`, zero elsewhere.
    pub fn uniform_on(n: usize, support: &[usize]) -> Self {
        assert!(!support.is_empty() && support.iter().all(|&v| v < n));
        let mut weights = vec![0.0; n];
        for &v in support {
            weights[v] = 1.0 / support.len() as f64;
        }
        Self { weights }
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Indices with weight above `tol`.
    pub fn support(&self, tol: f64) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.weights[i] > tol).collect()
    }
}

/// How a capacity value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapacityMethod {
    ClosedForm,
    SupportEnum,
    Numeric,
}

impl std::fmt::Display for CapacityMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CapacityMethod::ClosedForm => "CLOSED_FORM",
            CapacityMethod::SupportEnum => "SUPPORT_ENUM",
            CapacityMethod::Numeric => "NUMERIC",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CapacityResult {
    pub value: f64,
    pub maximizer: SimplexDist,
    pub method: CapacityMethod,
    /// Clique support of a uniform maximizer, when the maximizer has that shape.
    pub certificate: Option<Vec<usize>>,
}

/// Configuration for the replicator ascent.
#[derive(Debug, Clone)]
pub struct OptimizerConfig {
    /// Number of random restarts, in addition to the uniform-on-clique seeds.
    pub restarts: usize,
    /// Iteration cap per start.
    pub max_iters: usize,
    /// A start counts as converged once an iteration improves the value by
    /// less than this.
    pub improvement_tol: f64,
    pub seed: u64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self {
            restarts: 64,
            max_iters: 100_000,
            improvement_tol: 1e-14,
            seed: rng::DEFAULT_SEED,
        }
    }
}

/// Evaluates the edge quadratic form of `f` at `lambda`. Loops contribute
/// the squared weight of their vertex.
pub fn edge_quadratic_form(f: &DirectedGraph, lambda: &SimplexDist) -> Result<f64> {
    if lambda.dim() != f.vertex_count() {
        return Err(Error::DimensionMismatch {
            expected: f.vertex_count(),
            got: lambda.dim(),
        });
    }
    let w = lambda.weights();
    Ok(f.edges().map(|(a, b)| w[a] * w[b]).sum())
}

/// Closed-form capacity, when one applies:
///
/// * a loop anywhere gives 1 (point mass on the loop vertex);
/// * symmetric graphs give `1 - 1/cl(F)`;
/// * antisymmetric graphs give `(1 - 1/cl(F)) / 2`;
/// * mixed graphs have no closed form and yield `None`.
pub fn capacity_closed_form(f: &DirectedGraph) -> Option<f64> {
    if f.vertex_count() == 0 {
        return None;
    }
    if f.loop_vertex().is_some() {
        return Some(1.0);
    }
    let cl = f
        .clique_number()
        .expect("nonempty graph has a clique number") as f64;
    if f.is_symmetric() {
        Some(1.0 - 1.0 / cl)
    } else if f.is_antisymmetric() {
        Some(0.5 * (1.0 - 1.0 / cl))
    } else {
        None
    }
}

/// Symmetrized edge matrix: `m[a][b]` counts directed edges between `a` and
/// `b` in either direction, with loops weighted 2, so that the quadratic
/// form equals `lambda' M lambda / 2`.
fn symmetrized_matrix(f: &DirectedGraph) -> Vec<Vec<f64>> {
    let n = f.vertex_count();
    let mut m = vec![vec![0.0; n]; n];
    for (a, b) in f.edges() {
        if a == b {
            m[a][a] += 2.0;
        } else {
            m[a][b] += 1.0;
            m[b][a] += 1.0;
        }
    }
    m
}

/// Starting points for the ascent: every uniform-on-clique distribution.
/// All cliques are enumerated up to 16 vertices; beyond that only the
/// maximal ones, which still cover every closed-form optimum.
fn clique_seeds(f: &DirectedGraph) -> Vec<(SimplexDist, Vec<usize>)> {
    let n = f.vertex_count();
    let cliques = if n <= 16 {
        f.all_cliques()
    } else {
        f.maximal_cliques()
    };
    cliques
        .into_iter()
        .map(|c| (SimplexDist::uniform_on(n, &c), c))
        .collect()
}

struct Ascent {
    lambda: Vec<f64>,
    value: f64,
    converged: bool,
}

/// Replicator iteration `l_a <- l_a (M l)_a / (l' M l)`, which preserves the
/// simplex and never decreases the quadratic form.
fn ascend(m: &[Vec<f64>], start: &[f64], cfg: &OptimizerConfig) -> Ascent {
    let n = start.len();
    let mut lambda = start.to_vec();
    let qform = |l: &[f64]| -> f64 {
        let mut v = 0.0;
        for a in 0..n {
            let mut row = 0.0;
            for b in 0..n {
                row += m[a][b] * l[b];
            }
            v += l[a] * row;
        }
        v / 2.0
    };
    let mut value = qform(&lambda);
    let mut converged = false;
    for _ in 0..cfg.max_iters {
        let mut ml = vec![0.0; n];
        for a in 0..n {
            let mut s = 0.0;
            for b in 0..n {
                s += m[a][b] * lambda[b];
            }
            ml[a] = s;
        }
        let denom: f64 = (0..n).map(|a| lambda[a] * ml[a]).sum();
        if denom <= 0.0 {
            // Entire mass on an independent set; the form is exactly zero
            // and cannot ascend multiplicatively from here.
            converged = true;
            break;
        }
        for a in 0..n {
            lambda[a] *= ml[a] / denom;
        }
        let next = qform(&lambda);
        let improvement = next - value;
        value = next;
        if improvement < cfg.improvement_tol {
            converged = true;
            break;
        }
    }
    Ascent {
        lambda,
        value,
        converged,
    }
}

/// Dirichlet(1,...,1) point: exponential coordinates, normalized.
fn random_simplex_point(n: usize, rng: &mut impl Rng) -> Vec<f64> {
    let mut v: Vec<f64> = (0..n)
        .map(|_| {
            let u: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
            -u.ln()
        })
        .collect();
    let sum: f64 = v.iter().sum();
    for x in &mut v {
        *x /= sum;
    }
    v
}

/// Maximizes the quadratic form over the simplex by multi-start replicator
/// ascent. The reported value is a certified lower bound on the capacity;
/// on graphs with a closed form it attains it because uniform-on-clique
/// seeds are included.
pub fn capacity_numeric(f: &DirectedGraph, cfg: &OptimizerConfig) -> Result<CapacityResult> {
    let n = f.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if f.edge_count() == 0 {
        return Ok(CapacityResult {
            value: 0.0,
            maximizer: SimplexDist::uniform(n),
            method: CapacityMethod::Numeric,
            certificate: None,
        });
    }
    let m = symmetrized_matrix(f);
    let zero_row: Vec<bool> = (0..n).map(|a| m[a].iter().all(|&x| x == 0.0)).collect();

    // Mass on isolated loop-free vertices is redistributed before iterating.
    let prepare = |start: Vec<f64>| -> Option<Vec<f64>> {
        let dead: f64 = (0..n).filter(|&a| zero_row[a]).map(|a| start[a]).sum();
        if dead == 0.0 {
            return Some(start);
        }
        let live = 1.0 - dead;
        if live <= 0.0 {
            return None;
        }
        let mut out = start;
        for a in 0..n {
            out[a] = if zero_row[a] { 0.0 } else { out[a] / live };
        }
        Some(out)
    };

    let mut starts: Vec<Vec<f64>> = Vec::new();
    for (seed, _) in clique_seeds(f) {
        starts.push(seed.weights().to_vec());
    }
    for restart in 0..cfg.restarts {
        let mut r = rng::stream(cfg.seed, restart as u64);
        starts.push(random_simplex_point(n, &mut r));
    }

    use rayon::prelude::*;
    let runs: Vec<Option<Ascent>> = starts
        .into_par_iter()
        .map(|start| prepare(start).map(|s| ascend(&m, &s, cfg)))
        .collect();

    let mut best: Option<Ascent> = None;
    let mut any_converged = false;
    for run in runs.into_iter().flatten() {
        any_converged |= run.converged;
        let better = match &best {
            None => true,
            Some(b) => run.value > b.value,
        };
        if better {
            best = Some(run);
        }
    }
    let best = best.expect("at least one start is always valid");
    let maximizer = SimplexDist::new(normalize(best.lambda))?;
    let value = edge_quadratic_form(f, &maximizer)?;
    let certificate = uniform_clique_support(f, &maximizer);
    let result = CapacityResult {
        value,
        maximizer,
        method: CapacityMethod::Numeric,
        certificate,
    };
    if !any_converged {
        return Err(Error::NonConvergence {
            best: Box::new(result),
        });
    }
    Ok(result)
}

fn normalize(mut v: Vec<f64>) -> Vec<f64> {
    let sum: f64 = v.iter().sum();
    for x in &mut v {
        *x /= sum;
    }
    v
}

/// Certificate extraction: if the maximizer is uniform on a clique (within
/// slack), return that clique.
fn uniform_clique_support(f: &DirectedGraph, lambda: &SimplexDist) -> Option<Vec<usize>> {
    let support = lambda.support(1e-9);
    if support.is_empty() {
        return None;
    }
    let uniform = 1.0 / support.len() as f64;
    if !support
        .iter()
        .all(|&a| (lambda.weights()[a] - uniform).abs() <= 1e-7)
    {
        return None;
    }
    let is_clique = support.iter().enumerate().all(|(i, &a)| {
        support[i + 1..]
            .iter()
            .all(|&b| f.has_edge(a, b) || f.has_edge(b, a))
    });
    is_clique.then_some(support)
}

/// Brute-force oracle: evaluates the quadratic form on every lattice point
/// `k/grid_steps` of the simplex and, independently, on the uniform
/// distribution of every clique, returning the max found. Limited to six
/// vertices.
pub fn capacity_support_enum(f: &DirectedGraph, grid_steps: usize) -> Result<CapacityResult> {
    let n = f.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > 6 {
        return Err(Error::SizeLimit { limit: 6, got: n });
    }
    if grid_steps == 0 {
        return Err(Error::InvalidParameter("grid_steps must be positive".into()));
    }

    let edges: Vec<(usize, usize)> = f.edges().collect();
    let g = grid_steps as u64;
    let denom = (g * g) as f64;

    // Lattice scan with integer numerators; ties keep the first composition
    // in lexicographic order.
    let mut best_num: u64 = 0;
    let mut best_comp: Vec<u64> = {
        let mut c = vec![0u64; n];
        c[0] = g;
        c
    };
    let mut comp = vec![0u64; n];
    scan_compositions(&mut comp, 0, g, &mut |c: &[u64]| {
        let num: u64 = edges.iter().map(|&(a, b)| c[a] * c[b]).sum();
        if num > best_num {
            best_num = num;
            best_comp = c.to_vec();
        }
    });
    let lattice_value = best_num as f64 / denom;

    // Uniform distributions on every clique.
    let mut best_clique: Option<(f64, Vec<usize>)> = None;
    for clique in f.all_cliques() {
        let s = clique.len() as f64;
        let inside = clique
            .iter()
            .flat_map(|&a| clique.iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| f.has_edge(a, b))
            .count() as f64;
        let value = inside / (s * s);
        if best_clique.as_ref().is_none_or(|(v, _)| value > *v) {
            best_clique = Some((value, clique));
        }
    }

    let (value, maximizer, certificate) = match best_clique {
        Some((cv, clique)) if cv >= lattice_value => (
            cv,
            SimplexDist::uniform_on(n, &clique),
            Some(clique),
        ),
        _ => {
            let weights: Vec<f64> = best_comp.iter().map(|&k| k as f64 / g as f64).collect();
            (lattice_value, SimplexDist::new(weights)?, None)
        }
    };
    Ok(CapacityResult {
        value,
        maximizer,
        method: CapacityMethod::SupportEnum,
        certificate,
    })
}

fn scan_compositions(comp: &mut Vec<u64>, pos: usize, remaining: u64, visit: &mut impl FnMut(&[u64])) {
    if pos + 1 == comp.len() {
        comp[pos] = remaining;
        visit(comp);
        return;
    }
    for k in 0..=remaining {
        comp[pos] = k;
        scan_compositions(comp, pos + 1, remaining - k, visit);
    }
}

/// The threshold constant for random subgraphs of the increasing-pair graph
/// on the naturals: equal to the capacity of `f`. Uses the closed form when
/// one exists, otherwise the numeric ascent with default configuration.
pub fn relative_capacity_nn(f: &DirectedGraph) -> Result<f64> {
    if let Some(v) = capacity_closed_form(f) {
        return Ok(v);
    }
    Ok(capacity_numeric(f, &OptimizerConfig::default())?.value)
}

/// First-order stationarity residual at `lambda` for a symmetric irreflexive
/// graph: the max over the support of the gap between each vertex's
/// neighbour weight sum and the value of the form. Near zero at a maximizer.
pub fn kkt_residual(f: &DirectedGraph, lambda: &SimplexDist) -> Result<f64> {
    if !f.is_symmetric() || !f.is_irreflexive() {
        return Err(Error::InvalidParameter(
            "kkt_residual requires a symmetric irreflexive graph".into(),
        ));
    }
    let value = edge_quadratic_form(f, lambda)?;
    let w = lambda.weights();
    let mut residual: f64 = 0.0;
    for a in lambda.support(0.0) {
        let neighbor_sum: f64 = f.out_neighbors(a).iter().map(|&b| w[b]).sum();
        residual = residual.max((neighbor_sum - value).abs());
    }
    Ok(residual)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn quadratic_form_examples() {
        let k2 = DirectedGraph::complete(2);
        let half = SimplexDist::uniform(2);
        assert_close(edge_quadratic_form(&k2, &half).unwrap(), 0.5, 1e-15);

        let k3 = DirectedGraph::complete(3);
        assert_close(edge_quadratic_form(&k3, &SimplexDist::uniform(3)).unwrap(), 2.0 / 3.0, 1e-15);

        // Point mass on a loop-free vertex.
        let g = DirectedGraph::new(3, [(0, 1), (1, 2)]).unwrap();
        let pm = SimplexDist::point_mass(3, 0);
        assert_eq!(edge_quadratic_form(&g, &pm).unwrap(), 0.0);

        assert!(matches!(
            edge_quadratic_form(&k2, &SimplexDist::uniform(3)),
            Err(Error::DimensionMismatch { expected: 2, got: 3 })
        ));
    }

    #[test]
    fn closed_form_examples() {
        for p in 2..=8 {
            let expect = 1.0 - 1.0 / p as f64;
            assert_close(capacity_closed_form(&DirectedGraph::complete(p)).unwrap(), expect, 1e-15);
            let expect_t = 0.5 * (1.0 - 1.0 / p as f64);
            assert_close(
                capacity_closed_form(&DirectedGraph::transitive_tournament(p)).unwrap(),
                expect_t,
                1e-15,
            );
        }
        let looped = DirectedGraph::new(1, [(0, 0)]).unwrap();
        assert_eq!(capacity_closed_form(&looped), Some(1.0));
        // Mixed graph: one symmetric pair plus an unmatched edge.
        let mixed = DirectedGraph::new(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(capacity_closed_form(&mixed), None);
        assert_eq!(capacity_closed_form(&DirectedGraph::edgeless(0)), None);
        // Edgeless graphs are symmetric with clique number one.
        assert_eq!(capacity_closed_form(&DirectedGraph::edgeless(4)), Some(0.0));
    }

    #[test]
    fn numeric_matches_closed_forms() {
        let cfg = OptimizerConfig::default();
        let r = capacity_numeric(&DirectedGraph::complete(3), &cfg).unwrap();
        assert_close(r.value, 2.0 / 3.0, 1e-9);
        for w in r.maximizer.weights() {
            assert_close(*w, 1.0 / 3.0, 1e-6);
        }
        assert_eq!(r.certificate, Some(vec![0, 1, 2]));

        let cycle3 = DirectedGraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let r = capacity_numeric(&cycle3, &cfg).unwrap();
        assert_close(r.value, 1.0 / 3.0, 1e-9);

        let r = capacity_numeric(&DirectedGraph::edgeless(4), &cfg).unwrap();
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn numeric_reports_nonconvergence_with_best_so_far() {
        let cfg = OptimizerConfig {
            max_iters: 0,
            ..OptimizerConfig::default()
        };
        match capacity_numeric(&DirectedGraph::complete(3), &cfg) {
            Err(Error::NonConvergence { best }) => {
                // Clique seeds are evaluated even without iterating.
                assert!(best.value >= 0.5);
            }
            other => panic!("expected NonConvergence, got {other:?}"),
        }
    }

    #[test]
    fn support_enum_examples() {
        let single_edge = DirectedGraph::new(2, [(0, 1)]).unwrap();
        let r = capacity_support_enum(&single_edge, 60).unwrap();
        assert_close(r.value, 0.25, 1e-12);
        assert_close(r.maximizer.weights()[0], 0.5, 1e-12);

        // K4 with one symmetric pair removed: clique number 3.
        let mut edges: Vec<(usize, usize)> = DirectedGraph::complete(4).edges().collect();
        edges.retain(|&(a, b)| !(a.min(b) == 0 && a.max(b) == 1));
        let g = DirectedGraph::new(4, edges).unwrap();
        let r = capacity_support_enum(&g, 60).unwrap();
        assert_close(r.value, 2.0 / 3.0, 1e-12);
        assert_close(capacity_closed_form(&g).unwrap(), 2.0 / 3.0, 1e-12);

        let r = capacity_support_enum(&DirectedGraph::edgeless(3), 30).unwrap();
        assert_eq!(r.value, 0.0);

        assert!(matches!(
            capacity_support_enum(&DirectedGraph::edgeless(7), 10),
            Err(Error::SizeLimit { limit: 6, got: 7 })
        ));
    }

    #[test]
    fn relative_capacity_examples() {
        for p in 2..=6 {
            assert_close(
                relative_capacity_nn(&DirectedGraph::complete(p)).unwrap(),
                1.0 - 1.0 / p as f64,
                1e-12,
            );
            assert_close(
                relative_capacity_nn(&DirectedGraph::transitive_tournament(p)).unwrap(),
                0.5 * (1.0 - 1.0 / p as f64),
                1e-12,
            );
        }
        let looped = DirectedGraph::new(1, [(0, 0)]).unwrap();
        assert_eq!(relative_capacity_nn(&looped).unwrap(), 1.0);
    }

    #[test]
    fn kkt_residual_examples() {
        let k3 = DirectedGraph::complete(3);
        assert_close(kkt_residual(&k3, &SimplexDist::uniform(3)).unwrap(), 0.0, 1e-15);

        let half = SimplexDist::new(vec![0.5, 0.5, 0.0]).unwrap();
        assert_close(kkt_residual(&k3, &half).unwrap(), 0.0, 1e-15);

        let k2 = DirectedGraph::complete(2);
        let skew = SimplexDist::new(vec![0.9, 0.1]).unwrap();
        assert_close(kkt_residual(&k2, &skew).unwrap(), 0.72, 1e-12);

        assert!(kkt_residual(&DirectedGraph::transitive_tournament(3), &SimplexDist::uniform(3)).is_err());
    }

    #[test]
    fn kkt_residual_small_at_numeric_maximizer() {
        use rand::Rng;
        let mut rng = crate::rng::stream(21, 0);
        let cfg = OptimizerConfig::default();
        for _ in 0..20 {
            let n = rng.gen_range(2..=7);
            let mut edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((a, b));
                        edges.push((b, a));
                    }
                }
            }
            let g = DirectedGraph::new(n, edges).unwrap();
            let r = capacity_numeric(&g, &cfg).unwrap();
            assert!(kkt_residual(&g, &r.maximizer).unwrap() <= 1e-6, "{g:?}");
        }
    }

    #[test]
    fn monotone_under_edge_addition() {
        use rand::Rng;
        let mut rng = crate::rng::stream(22, 0);
        let cfg = OptimizerConfig::default();
        for _ in 0..25 {
            let n = rng.gen_range(1..=5);
            let all: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
            let sub: Vec<(usize, usize)> = all.iter().copied().filter(|_| rng.gen_bool(0.3)).collect();
            let mut sup = sub.clone();
            for &e in &all {
                if !sup.contains(&e) && rng.gen_bool(0.3) {
                    sup.push(e);
                }
            }
            let g_sub = DirectedGraph::new(n, sub).unwrap();
            let g_sup = DirectedGraph::new(n, sup).unwrap();
            let v_sub = capacity_numeric(&g_sub, &cfg).unwrap().value;
            let v_sup = capacity_numeric(&g_sup, &cfg).unwrap().value;
            assert!(v_sub <= v_sup + 1e-9, "{g_sub:?} vs {g_sup:?}");
        }
    }

    #[test]
    fn hom_monotonicity_exhaustive_small() {
        // All pairs of graphs on up to 2 vertices, plus a sampled batch on 3.
        let cfg = OptimizerConfig {
            restarts: 8,
            ..OptimizerConfig::default()
        };
        let mut graphs: Vec<DirectedGraph> = Vec::new();
        for n in 1..=2 {
            graphs.extend(crate::graph::enumerate_graphs(n, true));
        }
        let caps: Vec<f64> = graphs
            .iter()
            .map(|g| capacity_numeric(g, &cfg).unwrap().value)
            .collect();
        for (i, g) in graphs.iter().enumerate() {
            for (j, f) in graphs.iter().enumerate() {
                if crate::graph::hom_exists(g, f).is_some() {
                    assert!(caps[i] <= caps[j] + 1e-9, "hom {g:?} -> {f:?}");
                }
            }
        }
    }

    #[test]
    fn symmetric_closure_doubles_antisymmetric_capacity() {
        use rand::Rng;
        let mut rng = crate::rng::stream(23, 0);
        for _ in 0..30 {
            let n = rng.gen_range(2..=9);
            let mut edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(0.6) {
                        if rng.gen_bool(0.5) {
                            edges.push((a, b));
                        } else {
                            edges.push((b, a));
                        }
                    }
                }
            }
            let g = DirectedGraph::new(n, edges).unwrap();
            assert!(g.is_antisymmetric());
            let v = capacity_closed_form(&g).unwrap();
            let vc = capacity_closed_form(&g.symmetric_closure()).unwrap();
            assert_close(vc, 2.0 * v, 1e-9);
        }
    }

    #[test]
    fn numeric_dominates_grid_oracle() {
        use rand::Rng;
        let mut rng = crate::rng::stream(24, 0);
        let cfg = OptimizerConfig {
            restarts: 16,
            ..OptimizerConfig::default()
        };
        for _ in 0..12 {
            let n = rng.gen_range(1..=5);
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .filter(|_| rng.gen_bool(0.4))
                .collect();
            let g = DirectedGraph::new(n, edges).unwrap();
            let numeric = capacity_numeric(&g, &cfg).unwrap().value;
            let grid = capacity_support_enum(&g, 60).unwrap().value;
            assert!(numeric >= grid - 1e-6, "{g:?}: numeric {numeric} grid {grid}");
        }
    }
}
