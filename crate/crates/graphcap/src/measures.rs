//! Finitely-describable probability models on words of a fixed window
//! length, standing in for measures on infinite symbol sequences.
//!
//! Three variants are supported: Bernoulli products, finite mixtures of
//! Bernoulli products (discrete De Finetti mixtures), and explicit atoms.
//! The first two are exchangeable by construction; atoms house arbitrary
//! finite-marginal measures.
//!
//! Probabilities are computed in double precision; pair events additionally
//! take an exact integer route when the alphabet is small and all weights
//! are dyadic rationals.

use std::collections::BTreeMap;

use rand::Rng;

use crate::capacity::SimplexDist;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum ModelVariant {
    /// Product measure with per-symbol weights.
    Bernoulli(SimplexDist),
    /// Convex combination of Bernoulli products; the component weights are a
    /// distribution themselves.
    Mixture(Vec<(f64, SimplexDist)>),
    /// Explicit atoms: pairs of (probability, word).
    Atoms {
        alphabet: usize,
        atoms: Vec<(f64, Vec<usize>)>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct MeasureModel {
    window: usize,
    variant: ModelVariant,
}

const PROB_TOL: f64 = 1e-12;

impl MeasureModel {
    pub fn new(window: usize, variant: ModelVariant) -> Result<Self> {
        if window == 0 {
            return Err(Error::InvalidParameter("window must be positive".into()));
        }
        match &variant {
            ModelVariant::Bernoulli(_) => {}
            ModelVariant::Mixture(components) => {
                if components.is_empty() {
                    return Err(Error::InvalidDistribution("mixture needs components".into()));
                }
                let p = components[0].1.dim();
                if components.iter().any(|(_, l)| l.dim() != p) {
                    return Err(Error::InvalidDistribution(
                        "mixture components must share an alphabet".into(),
                    ));
                }
                check_prob_vector(components.iter().map(|(w, _)| *w))?;
            }
            ModelVariant::Atoms { alphabet, atoms } => {
                if *alphabet == 0 {
                    return Err(Error::InvalidParameter("alphabet must be positive".into()));
                }
                if atoms.is_empty() {
                    return Err(Error::InvalidDistribution("atom list is empty".into()));
                }
                for (_, word) in atoms {
                    if word.len() != window {
                        return Err(Error::DimensionMismatch {
                            expected: window,
                            got: word.len(),
                        });
                    }
                    if let Some(&s) = word.iter().find(|&&s| s >= *alphabet) {
                        return Err(Error::IndexOutOfRange {
                            index: s,
                            window: *alphabet,
                        });
                    }
                }
                check_prob_vector(atoms.iter().map(|(w, _)| *w))?;
            }
        }
        Ok(Self { window, variant })
    }

    pub fn bernoulli(window: usize, weights: SimplexDist) -> Result<Self> {
        Self::new(window, ModelVariant::Bernoulli(weights))
    }

    /// Uniform Bernoulli model over `p` symbols.
    pub fn uniform_bernoulli(window: usize, p: usize) -> Self {
        Self::bernoulli(window, SimplexDist::uniform(p)).expect("uniform model is valid")
    }

    pub fn mixture(window: usize, components: Vec<(f64, SimplexDist)>) -> Result<Self> {
        Self::new(window, ModelVariant::Mixture(components))
    }

    pub fn atoms(window: usize, alphabet: usize, atoms: Vec<(f64, Vec<usize>)>) -> Result<Self> {
        Self::new(window, ModelVariant::Atoms { alphabet, atoms })
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn variant(&self) -> &ModelVariant {
        &self.variant
    }

    pub fn alphabet(&self) -> usize {
        match &self.variant {
            ModelVariant::Bernoulli(l) => l.dim(),
            ModelVariant::Mixture(c) => c[0].1.dim(),
            ModelVariant::Atoms { alphabet, .. } => *alphabet,
        }
    }

    pub fn is_exchangeable_variant(&self) -> bool {
        !matches!(self.variant, ModelVariant::Atoms { .. })
    }

    /// Draws one word of length `window`.
    pub fn sample(&self, rng: &mut impl Rng) -> Vec<usize> {
        match &self.variant {
            ModelVariant::Bernoulli(l) => (0..self.window).map(|_| draw_symbol(l, rng)).collect(),
            ModelVariant::Mixture(components) => {
                let k = draw_index(components.iter().map(|(w, _)| *w), rng);
                let l = &components[k].1;
                (0..self.window).map(|_| draw_symbol(l, rng)).collect()
            }
            ModelVariant::Atoms { atoms, .. } => {
                let k = draw_index(atoms.iter().map(|(w, _)| *w), rng);
                atoms[k].1.clone()
            }
        }
    }
}

fn check_prob_vector(weights: impl Iterator<Item = f64>) -> Result<()> {
    let mut sum = 0.0;
    for w in weights {
        if !w.is_finite() || w < 0.0 {
            return Err(Error::InvalidDistribution(format!("negative or non-finite weight {w}")));
        }
        sum += w;
    }
    if (sum - 1.0).abs() > PROB_TOL {
        return Err(Error::InvalidDistribution(format!(
            "weights sum to {sum}, expected 1 within {PROB_TOL:e}"
        )));
    }
    Ok(())
}

fn draw_symbol(l: &SimplexDist, rng: &mut impl Rng) -> usize {
    draw_index(l.weights().iter().copied(), rng)
}

fn draw_index(weights: impl Iterator<Item = f64>, rng: &mut impl Rng) -> usize {
    let u: f64 = rng.gen();
    let mut acc = 0.0;
    let mut last = 0;
    for (i, w) in weights.enumerate() {
        acc += w;
        last = i;
        if u < acc {
            return i;
        }
    }
    last
}

/// An event over coordinates of the window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EventSpec {
    /// `{x_i > x_j}` for `i < j`.
    Order { i: usize, j: usize },
    /// `{x_i = x_j}`.
    Equal { i: usize, j: usize },
    /// `{x_i != x_j}`.
    Neq { i: usize, j: usize },
    /// Conjunction of coordinate constraints `(index, symbol)`.
    Cylinder(Vec<(usize, usize)>),
}

impl EventSpec {
    fn indices(&self) -> Vec<usize> {
        match self {
            EventSpec::Order { i, j } | EventSpec::Equal { i, j } | EventSpec::Neq { i, j } => {
                vec![*i, *j]
            }
            EventSpec::Cylinder(cs) => cs.iter().map(|&(i, _)| i).collect(),
        }
    }

    fn holds(&self, word: &[usize]) -> bool {
        match self {
            EventSpec::Order { i, j } => word[*i] > word[*j],
            EventSpec::Equal { i, j } => word[*i] == word[*j],
            EventSpec::Neq { i, j } => word[*i] != word[*j],
            EventSpec::Cylinder(cs) => cs.iter().all(|&(i, a)| word[i] == a),
        }
    }
}

/// Pair-event sums for a single Bernoulli component.
fn pair_sums(l: &SimplexDist) -> (f64, f64) {
    // (order, equal): order computed directly as the sum over a > b.
    if let Some(exact) = dyadic_pair_sums(l) {
        return exact;
    }
    let w = l.weights();
    let mut order = 0.0;
    let mut equal = 0.0;
    for (a, &wa) in w.iter().enumerate() {
        equal += wa * wa;
        for &wb in &w[..a] {
            order += wa * wb;
        }
    }
    (order, equal)
}

const DYADIC_BITS: u32 = 32;

/// Exact numerator of a dyadic weight over denominator `2^DYADIC_BITS`.
fn dyadic_num(x: f64) -> Option<u64> {
    let scaled = x * (1u64 << DYADIC_BITS) as f64;
    (scaled.fract() == 0.0 && (0.0..=(1u64 << DYADIC_BITS) as f64).contains(&scaled))
        .then_some(scaled as u64)
}

/// Exact integer route for pair events when the alphabet is at most four
/// and every weight is dyadic.
fn dyadic_pair_sums(l: &SimplexDist) -> Option<(f64, f64)> {
    if l.dim() > 4 {
        return None;
    }
    let nums: Option<Vec<u64>> = l.weights().iter().map(|&w| dyadic_num(w)).collect();
    let nums = nums?;
    let mut order: u128 = 0;
    let mut equal: u128 = 0;
    for (a, &na) in nums.iter().enumerate() {
        equal += na as u128 * na as u128;
        for &nb in &nums[..a] {
            order += na as u128 * nb as u128;
        }
    }
    let denom = (1u128 << (2 * DYADIC_BITS)) as f64;
    Some((order as f64 / denom, equal as f64 / denom))
}

/// Exact probability of `event` under `model`.
pub fn event_prob(model: &MeasureModel, event: &EventSpec) -> Result<f64> {
    for idx in event.indices() {
        if idx >= model.window() {
            return Err(Error::IndexOutOfRange {
                index: idx,
                window: model.window(),
            });
        }
    }
    if let EventSpec::Order { i, j } = event {
        if i >= j {
            return Err(Error::NonIncreasingIndices);
        }
    }
    Ok(match model.variant() {
        ModelVariant::Bernoulli(l) => bernoulli_event(l, event),
        ModelVariant::Mixture(components) => components
            .iter()
            .map(|(w, l)| w * bernoulli_event(l, event))
            .sum(),
        ModelVariant::Atoms { atoms, .. } => atoms
            .iter()
            .filter(|(_, word)| event.holds(word))
            .map(|(w, _)| *w)
            .sum(),
    })
}

fn bernoulli_event(l: &SimplexDist, event: &EventSpec) -> f64 {
    match event {
        EventSpec::Order { .. } => pair_sums(l).0,
        EventSpec::Equal { i, j } => {
            if i == j {
                1.0
            } else {
                pair_sums(l).1
            }
        }
        EventSpec::Neq { i, j } => {
            if i == j {
                0.0
            } else {
                1.0 - pair_sums(l).1
            }
        }
        EventSpec::Cylinder(cs) => {
            // Conflicting constraints kill the cylinder; repeats collapse.
            let mut constraints: BTreeMap<usize, usize> = BTreeMap::new();
            for &(i, a) in cs {
                if let Some(&prev) = constraints.get(&i) {
                    if prev != a {
                        return 0.0;
                    }
                } else {
                    constraints.insert(i, a);
                }
            }
            constraints
                .values()
                .map(|&a| l.weights().get(a).copied().unwrap_or(0.0))
                .product()
        }
    }
}

/// `m({x_0 = x_1})` for exchangeable variants, exactly
/// `sum_k w_k sum_a (l_a^(k))^2`. Atom models are rejected; use
/// [`event_prob`] with an [`EventSpec::Equal`] instead.
pub fn equal_prob(model: &MeasureModel) -> Result<f64> {
    match model.variant() {
        ModelVariant::Bernoulli(l) => Ok(pair_sums(l).1),
        ModelVariant::Mixture(components) => Ok(components
            .iter()
            .map(|(w, l)| w * pair_sums(l).1)
            .sum()),
        ModelVariant::Atoms { .. } => Err(Error::NotExchangeable),
    }
}

/// Exact table of cylinder probabilities over `alphabet^r` for the given
/// strictly increasing coordinate tuple, in row-major order (first
/// coordinate most significant).
pub fn marginal(model: &MeasureModel, indices: &[usize]) -> Result<Vec<f64>> {
    if indices.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NonIncreasingIndices);
    }
    if let Some(&i) = indices.iter().find(|&&i| i >= model.window()) {
        return Err(Error::IndexOutOfRange {
            index: i,
            window: model.window(),
        });
    }
    let p = model.alphabet();
    let r = indices.len();
    let cells = p.pow(r as u32);
    let mut table = vec![0.0; cells];
    match model.variant() {
        // Product cells do not depend on the coordinate values, only on the
        // symbols, so exchangeable tables are bitwise identical across
        // index tuples.
        ModelVariant::Bernoulli(l) => {
            for (cell, slot) in table.iter_mut().enumerate() {
                *slot = cell_symbols(cell, p, r)
                    .into_iter()
                    .map(|a| l.weights()[a])
                    .product();
            }
        }
        ModelVariant::Mixture(components) => {
            for (cell, slot) in table.iter_mut().enumerate() {
                let symbols = cell_symbols(cell, p, r);
                *slot = components
                    .iter()
                    .map(|(w, l)| {
                        w * symbols
                            .iter()
                            .map(|&a| l.weights()[a])
                            .product::<f64>()
                    })
                    .sum();
            }
        }
        ModelVariant::Atoms { atoms, .. } => {
            for (w, word) in atoms {
                let mut cell = 0;
                for &i in indices {
                    cell = cell * p + word[i];
                }
                table[cell] += w;
            }
        }
    }
    Ok(table)
}

/// Symbols of a row-major cell, most significant first.
fn cell_symbols(cell: usize, p: usize, r: usize) -> Vec<usize> {
    let mut out = vec![0; r];
    let mut c = cell;
    for slot in out.iter_mut().rev() {
        *slot = c % p;
        c /= p;
    }
    out
}

/// Max L-infinity distance between marginal tables over all injections of
/// `[r]` into the window (all coordinate subsets, all orders). Exactly zero
/// for exchangeable variants.
pub fn check_exchangeable(model: &MeasureModel, r: usize) -> Result<f64> {
    if r > model.window() {
        return Err(Error::IndexOutOfRange {
            index: r,
            window: model.window(),
        });
    }
    if r == 0 {
        return Ok(0.0);
    }
    let p = model.alphabet();
    let cells = p.pow(r as u32);

    let mut lo = vec![f64::INFINITY; cells];
    let mut hi = vec![f64::NEG_INFINITY; cells];

    let subsets = increasing_tuples(model.window(), r);
    let perms = permutations(r);
    for subset in &subsets {
        let base = marginal(model, subset)?;
        for perm in &perms {
            // The injection t -> subset[perm[t]]; its table is the base
            // table with cell coordinates rearranged.
            for cell in 0..cells {
                let symbols = cell_symbols(cell, p, r);
                let mut mapped = 0;
                for u in 0..r {
                    // Coordinate u of the sorted tuple carries the symbol
                    // assigned to the injection position that lands on it.
                    let t = perm.iter().position(|&x| x == u).expect("permutation");
                    mapped = mapped * p + symbols[t];
                }
                let v = base[mapped];
                lo[cell] = lo[cell].min(v);
                hi[cell] = hi[cell].max(v);
            }
        }
    }
    Ok((0..cells)
        .map(|c| hi[c] - lo[c])
        .fold(0.0, f64::max))
}

fn increasing_tuples(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(n: usize, r: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < r - cur.len() {
                break;
            }
            cur.push(v);
            rec(n, r, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, r, 0, &mut cur, &mut out);
    out
}

fn permutations(r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..r).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(r, &mut cur, &mut out);
    out
}

/// Finite averaging argument: given sets over a finite base space, each of
/// measure at least `lambda = min_i mu(X_i)`, returns a positive-mass point
/// lying in at least `ceil(lambda * N)` of them, together with its exact hit
/// count. The guarantee is asserted, never an error: the weighted average of
/// hit counts is at least `lambda * N`.
pub fn deep_point(sets: &[Vec<bool>], mu: &[f64]) -> Result<(usize, usize)> {
    if sets.is_empty() {
        return Err(Error::InvalidParameter("deep_point needs at least one set".into()));
    }
    check_prob_vector(mu.iter().copied())?;
    for s in sets {
        if s.len() != mu.len() {
            return Err(Error::DimensionMismatch {
                expected: mu.len(),
                got: s.len(),
            });
        }
    }
    let lambda = sets
        .iter()
        .map(|s| {
            s.iter()
                .zip(mu)
                .filter(|(inside, _)| **inside)
                .map(|(_, m)| m)
                .sum::<f64>()
        })
        .fold(f64::INFINITY, f64::min);

    let counts: Vec<usize> = (0..mu.len())
        .map(|w| sets.iter().filter(|s| s[w]).count())
        .collect();
    let (point, count) = (0..mu.len())
        .filter(|&w| mu[w] > 0.0)
        .map(|w| (w, counts[w]))
        .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
        .expect("a probability vector has positive mass somewhere");

    let required = (lambda * sets.len() as f64 - 1e-9).ceil().max(0.0) as usize;
    assert!(
        count >= required,
        "averaging guarantees {required} hits, found {count}"
    );
    Ok((point, count))
}
