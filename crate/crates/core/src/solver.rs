//! Exact radio number and λ-number of small graphs.
//!
//! The radio search extends vertex orderings left to right. Each vertex
//! receives the smallest label compatible with every vertex placed before
//! it, so an ordering determines its cheapest labeling and the minimum over
//! orderings is rn(G). Branches are cut when an admissible completion bound
//! reaches the incumbent span.
//!
//! λ is found by trying spans upward from `Δ + 1` with a backtracking
//! feasibility search.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering as AtomicOrdering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{DistanceMatrix, Graph, VertexId};
use crate::labeling::{is_l21_labeling, is_radio_labeling, span, Labeling, LabelingError};

/// Automorphism orbits are only computed up to this many vertices.
const SYMMETRY_LIMIT: usize = 16;

/// Largest graph [`brute_force_radio_number`] accepts.
pub const BRUTE_FORCE_LIMIT: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("distance matrix has {got} vertices, graph has {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("supplied incumbent is not a radio labeling ({violations} violated pairs)")]
    InvalidIncumbent { violations: usize },
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error("brute force is limited to {limit} vertices, graph has {p}")]
    TooLarge { p: usize, limit: usize },
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

/// Node and wall-clock limits; `None` means unlimited.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct SolverBudget {
    pub max_nodes: Option<u64>,
    pub max_seconds: Option<f64>,
}

impl SolverBudget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        SolverBudget {
            max_nodes: Some(max_nodes),
            max_seconds: None,
        }
    }

    pub fn is_unlimited(&self) -> bool {
        self.max_nodes.is_none() && self.max_seconds.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverResult {
    /// Minimum span when `proven_optimal`, otherwise the best upper bound found.
    pub optimum: u64,
    pub witness: Labeling,
    pub nodes_explored: u64,
    pub proven_optimal: bool,
}

/// Shared node counter and deadline.
struct Limits {
    nodes: AtomicU64,
    max_nodes: u64,
    deadline: Option<Instant>,
    exhausted: AtomicBool,
}

impl Limits {
    fn new(budget: &SolverBudget) -> Self {
        Limits {
            nodes: AtomicU64::new(0),
            max_nodes: budget.max_nodes.unwrap_or(u64::MAX),
            deadline: budget
                .max_seconds
                .map(|s| Instant::now() + Duration::from_secs_f64(s.max(0.0))),
            exhausted: AtomicBool::new(false),
        }
    }

    /// Counts one expansion; false once any limit is hit.
    fn tick(&self) -> bool {
        if self.exhausted.load(AtomicOrdering::Relaxed) {
            return false;
        }
        let used = self.nodes.fetch_add(1, AtomicOrdering::Relaxed) + 1;
        let over_time = self.deadline.is_some_and(|t| Instant::now() >= t);
        if used > self.max_nodes || over_time {
            self.exhausted.store(true, AtomicOrdering::Relaxed);
            return false;
        }
        true
    }

    fn explored(&self) -> u64 {
        self.nodes.load(AtomicOrdering::Relaxed).min(self.max_nodes)
    }

    fn exhausted(&self) -> bool {
        self.exhausted.load(AtomicOrdering::Relaxed)
    }
}

fn check_sizes(g: &Graph, dist: &DistanceMatrix) -> Result<(), SolverError> {
    if dist.len() != g.vertex_count() {
        return Err(SolverError::SizeMismatch {
            expected: g.vertex_count(),
            got: dist.len(),
        });
    }
    Ok(())
}

fn with_pool<T: Send>(
    threads: usize,
    f: impl FnOnce() -> T + Send,
) -> Result<T, SolverError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| SolverError::ThreadPool(e.to_string()))?;
    Ok(pool.install(f))
}

/// True if some automorphism of the graph maps `from` to `to`. Distances are
/// preserved pairwise, which for a bijection is the same as preserving edges.
fn automorphism_maps(dist: &DistanceMatrix, from: usize, to: usize) -> bool {
    let p = dist.len();
    let profile = |v: usize| {
        let mut row = dist.row(VertexId(v)).to_vec();
        row.sort_unstable();
        row
    };
    let profiles: Vec<Vec<u64>> = (0..p).map(profile).collect();
    if profiles[from] != profiles[to] {
        return false;
    }
    let mut image = vec![usize::MAX; p];
    let mut used = vec![false; p];
    image[from] = to;
    used[to] = true;
    let order: Vec<usize> = std::iter::once(from)
        .chain((0..p).filter(|&v| v != from))
        .collect();

    fn extend(
        depth: usize,
        order: &[usize],
        dist: &DistanceMatrix,
        profiles: &[Vec<u64>],
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&v) = order.get(depth) else {
            return true;
        };
        for cand in 0..image.len() {
            if used[cand] || profiles[cand] != profiles[v] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&a| {
                dist.get(VertexId(a), VertexId(v)) == dist.get(VertexId(image[a]), VertexId(cand))
            });
            if !consistent {
                continue;
            }
            image[v] = cand;
            used[cand] = true;
            if extend(depth + 1, order, dist, profiles, image, used) {
                return true;
            }
            used[cand] = false;
            image[v] = usize::MAX;
        }
        false
    }

    extend(1, &order, dist, &profiles, &mut image, &mut used)
}

/// Smallest index of each automorphism orbit; every vertex when the graph is
/// too large for the orbit computation.
fn orbit_representatives(dist: &DistanceMatrix) -> Vec<usize> {
    let p = dist.len();
    if p > SYMMETRY_LIMIT {
        return (0..p).collect();
    }
    (0..p)
        .filter(|&v| (0..v).all(|w| !automorphism_maps(dist, v, w)))
        .collect()
}

/// Separation `diam + 1 - d(u, v)` for every pair, row-major.
fn separations(dist: &DistanceMatrix) -> Vec<u64> {
    let step = dist.diameter() + 1;
    let p = dist.len();
    let mut sep = vec![0; p * p];
    for u in 0..p {
        for (v, &d) in dist.row(VertexId(u)).iter().enumerate() {
            sep[u * p + v] = step - d;
        }
    }
    sep
}

/// Nearest-neighbor style ordering: start from `start`, then always place the
/// vertex that can take the smallest label.
fn greedy_radio(sep: &[u64], p: usize, start: usize) -> Vec<u64> {
    let mut labels = vec![0u64; p];
    let mut placed = vec![false; p];
    let mut lower = vec![0u64; p];
    placed[start] = true;
    for v in 0..p {
        lower[v] = sep[start * p + v];
    }
    for _ in 1..p {
        let next = (0..p)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (lower[v], v))
            .expect("an unplaced vertex remains");
        let label = lower[next];
        labels[next] = label;
        placed[next] = true;
        for v in 0..p {
            if !placed[v] {
                lower[v] = lower[v].max(label + sep[next * p + v]);
            }
        }
    }
    labels
}

struct Incumbent {
    span: AtomicU64,
    witness: Mutex<Vec<u64>>,
}

impl Incumbent {
    fn new(labels: Vec<u64>) -> Self {
        let s = span(&Labeling::new(labels.clone()));
        Incumbent {
            span: AtomicU64::new(s),
            witness: Mutex::new(labels),
        }
    }

    fn bound(&self) -> u64 {
        self.span.load(AtomicOrdering::Acquire)
    }

    fn offer(&self, s: u64, labels: &[u64]) {
        let mut w = self.witness.lock().expect("incumbent lock poisoned");
        if s < self.span.load(AtomicOrdering::Acquire) {
            w.clear();
            w.extend_from_slice(labels);
            self.span.store(s, AtomicOrdering::Release);
        }
    }
}

struct RadioSearch<'a> {
    p: usize,
    sep: &'a [u64],
    min_sep: u64,
    incumbent: &'a Incumbent,
    limits: &'a Limits,
}

impl RadioSearch<'_> {
    /// Depth-first completion of a prefix. `lower[v]` is the smallest label
    /// unplaced `v` could take given the placed vertices.
    fn descend(&self, labels: &mut Vec<u64>, placed: &mut Vec<bool>, lower: &[u64], depth: usize) {
        let p = self.p;
        if depth == p {
            let s = labels.iter().copied().max().unwrap_or(0);
            self.incumbent.offer(s, labels);
            return;
        }
        if !self.limits.tick() {
            return;
        }
        let remaining = (p - depth) as u64;
        let mut lo_min = u64::MAX;
        let mut lo_max = 0;
        for v in (0..p).filter(|&v| !placed[v]) {
            lo_min = lo_min.min(lower[v]);
            lo_max = lo_max.max(lower[v]);
        }
        let bound = lo_max.max(lo_min + (remaining - 1) * self.min_sep);
        if bound >= self.incumbent.bound() {
            return;
        }

        let mut children: Vec<usize> = (0..p).filter(|&v| !placed[v]).collect();
        children.sort_by_key(|&v| (lower[v], v));
        let mut next_lower = vec![0u64; p];
        for v in children {
            let label = lower[v];
            if label + (remaining - 1) * self.min_sep >= self.incumbent.bound() {
                // children are sorted by label, so the rest are no better
                break;
            }
            labels[v] = label;
            placed[v] = true;
            for w in 0..p {
                next_lower[w] = if placed[w] {
                    0
                } else {
                    lower[w].max(label + self.sep[v * p + w])
                };
            }
            self.descend(labels, placed, &next_lower, depth + 1);
            placed[v] = false;
            if self.limits.exhausted() {
                return;
            }
        }
    }
}

/// Exact radio number by branch and bound, single-threaded.
///
/// `incumbent`, when given, must be a radio labeling of `g`; it seeds the
/// upper bound. Otherwise a greedy ordering is used.
pub fn exact_radio_number(
    g: &Graph,
    dist: &DistanceMatrix,
    budget: SolverBudget,
    incumbent: Option<&Labeling>,
) -> Result<SolverResult, SolverError> {
    exact_radio_number_parallel(g, dist, budget, incumbent, 1)
}

/// [`exact_radio_number`] spread over `threads` workers. The optimum and
/// `proven_optimal` do not depend on the thread count; the witness and node
/// count may.
pub fn exact_radio_number_parallel(
    g: &Graph,
    dist: &DistanceMatrix,
    budget: SolverBudget,
    incumbent: Option<&Labeling>,
    threads: usize,
) -> Result<SolverResult, SolverError> {
    check_sizes(g, dist)?;
    let p = g.vertex_count();
    let sep = separations(dist);
    let roots = orbit_representatives(dist);

    let seed = match incumbent {
        Some(lab) => {
            let violations = is_radio_labeling(g, dist, lab)?;
            if !violations.is_empty() {
                return Err(SolverError::InvalidIncumbent {
                    violations: violations.len(),
                });
            }
            lab.normalized().labels().to_vec()
        }
        None => {
            let starts: Vec<usize> = if p <= 64 { (0..p).collect() } else { vec![0] };
            starts
                .into_iter()
                .map(|s| greedy_radio(&sep, p, s))
                .min_by_key(|l| l.iter().copied().max())
                .expect("graph has a vertex")
        }
    };
    let best = Incumbent::new(seed);
    let limits = Limits::new(&budget);
    let search = RadioSearch {
        p,
        sep: &sep,
        min_sep: 1,
        incumbent: &best,
        limits: &limits,
    };

    let run_root = |root: usize| {
        let mut labels = vec![0u64; p];
        let mut placed = vec![false; p];
        placed[root] = true;
        let lower: Vec<u64> = (0..p)
            .map(|w| if w == root { 0 } else { sep[root * p + w] })
            .collect();
        search.descend(&mut labels, &mut placed, &lower, 1);
    };

    if p == 1 {
        // nothing to search; the single label is optimal
    } else if threads <= 1 {
        for &root in &roots {
            run_root(root);
            if limits.exhausted() {
                break;
            }
        }
    } else {
        with_pool(threads, || roots.par_iter().for_each(|&r| run_root(r)))?;
    }

    let optimum = best.bound();
    let witness = Labeling::new(best.witness.into_inner().expect("incumbent lock poisoned"));
    Ok(SolverResult {
        optimum,
        witness,
        nodes_explored: limits.explored(),
        proven_optimal: !limits.exhausted(),
    })
}

/// Radio number by trying every vertex ordering. Each ordering gets its
/// cheapest labeling (every vertex as low as all earlier vertices allow),
/// which is validated against all pairs before it counts.
pub fn brute_force_radio_number(g: &Graph, dist: &DistanceMatrix) -> Result<u64, SolverError> {
    check_sizes(g, dist)?;
    let p = g.vertex_count();
    if p > BRUTE_FORCE_LIMIT {
        return Err(SolverError::TooLarge {
            p,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let step = dist.diameter() + 1;
    let mut perm: Vec<usize> = (0..p).collect();
    let mut best = u64::MAX;
    let mut labels = vec![0u64; p];
    let mut visit = |perm: &[usize]| {
        for (i, &v) in perm.iter().enumerate() {
            labels[v] = perm[..i]
                .iter()
                .map(|&u| labels[u] + step - dist.get(VertexId(u), VertexId(v)))
                .max()
                .unwrap_or(0);
        }
        let candidate = Labeling::new(labels.clone());
        let s = span(&candidate);
        if s < best
            && is_radio_labeling(g, dist, &candidate)
                .map(|v| v.is_empty())
                .unwrap_or(false)
        {
            best = s;
        }
    };
    // Heap's algorithm
    let mut c = vec![0usize; p];
    visit(&perm);
    let mut i = 0;
    while i < p {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            visit(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(best)
}

/// First-fit L(2,1) labeling in the given vertex order.
fn greedy_l21(dist: &DistanceMatrix, order: &[usize]) -> Vec<u64> {
    let p = dist.len();
    let mut labels = vec![0u64; p];
    for (i, &v) in order.iter().enumerate() {
        let row = dist.row(VertexId(v));
        labels[v] = (0u64..)
            .find(|&x| {
                order[..i].iter().all(|&u| {
                    let gap = x.abs_diff(labels[u]);
                    match row[u] {
                        1 => gap >= 2,
                        2 => gap >= 1,
                        _ => true,
                    }
                })
            })
            .expect("some label fits");
    }
    labels
}

/// Breadth-first order from vertex 0, so each vertex meets constraints early.
fn bfs_order(g: &Graph) -> Vec<usize> {
    let p = g.vertex_count();
    let mut seen = vec![false; p];
    let mut order = Vec::with_capacity(p);
    for s in 0..p {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        order.push(s);
        let mut head = order.len() - 1;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in g.neighbors(VertexId(u)) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

struct L21Search<'a> {
    order: &'a [usize],
    /// For position i: earlier positions with the gap they impose.
    constraints: Vec<Vec<(usize, u64)>>,
    limits: &'a Limits,
    found: &'a AtomicBool,
}

impl L21Search<'_> {
    fn feasible(&self, labels: &mut [u64], depth: usize, max_label: u64) -> bool {
        if depth == self.order.len() {
            return true;
        }
        if self.found.load(AtomicOrdering::Relaxed) || !self.limits.tick() {
            return false;
        }
        for x in 0..=max_label {
            let ok = self.constraints[depth]
                .iter()
                .all(|&(j, gap)| x.abs_diff(labels[j]) >= gap);
            if ok {
                labels[depth] = x;
                if self.feasible(labels, depth + 1, max_label) {
                    return true;
                }
                if self.limits.exhausted() {
                    return false;
                }
            }
        }
        false
    }
}

/// Exact λ-number, single-threaded.
pub fn exact_lambda(
    g: &Graph,
    dist: &DistanceMatrix,
    budget: SolverBudget,
) -> Result<SolverResult, SolverError> {
    exact_lambda_parallel(g, dist, budget, 1)
}

/// [`exact_lambda`] with the first vertex's label choices split across
/// `threads` workers.
pub fn exact_lambda_parallel(
    g: &Graph,
    dist: &DistanceMatrix,
    budget: SolverBudget,
    threads: usize,
) -> Result<SolverResult, SolverError> {
    check_sizes(g, dist)?;
    let p = g.vertex_count();
    let order = bfs_order(g);
    let mut best = greedy_l21(dist, &order);
    let greedy_span = span(&Labeling::new(best.clone()));
    let limits = Limits::new(&budget);

    let constraints: Vec<Vec<(usize, u64)>> = (0..p)
        .map(|i| {
            (0..i)
                .filter_map(|j| match dist.get(VertexId(order[i]), VertexId(order[j])) {
                    1 => Some((j, 2)),
                    2 => Some((j, 1)),
                    _ => None,
                })
                .collect()
        })
        .collect();

    let lower = if p == 1 { 0 } else { g.max_degree() as u64 + 1 };
    let mut proven = true;
    for target in lower..greedy_span {
        let found = AtomicBool::new(false);
        let search = L21Search {
            order: &order,
            constraints: constraints.clone(),
            limits: &limits,
            found: &found,
        };
        // Reflection x -> target - x maps solutions to solutions, so the first
        // vertex can stay in the lower half.
        let firsts: Vec<u64> = (0..=target / 2).collect();
        let attempt = |first: u64| -> Option<Vec<u64>> {
            let mut labels = vec![0u64; p];
            labels[0] = first;
            if search.feasible(&mut labels, 1, target) {
                found.store(true, AtomicOrdering::Relaxed);
                Some(labels)
            } else {
                None
            }
        };
        let hit = if threads <= 1 {
            firsts.iter().find_map(|&f| attempt(f))
        } else {
            with_pool(threads, || {
                firsts
                    .par_iter()
                    .filter_map(|&f| attempt(f))
                    .find_first(|_| true)
            })?
        };
        if let Some(by_position) = hit {
            let mut labels = vec![0u64; p];
            for (i, &v) in order.iter().enumerate() {
                labels[v] = by_position[i];
            }
            best = labels;
            break;
        }
        if limits.exhausted() {
            proven = false;
            break;
        }
    }

    let witness = Labeling::new(best).normalized();
    let best_span = span(&witness);
    debug_assert!(is_l21_labeling(g, dist, &witness)
        .map(|v| v.is_empty())
        .unwrap_or(false));
    Ok(SolverResult {
        optimum: best_span,
        witness,
        nodes_explored: limits.explored(),
        proven_optimal: proven,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::{mpn_labeling, rn_mpn_formula};
    use crate::graph::{all_pairs_distances, middle_path_graph, path_graph};

    fn setup(g: Graph) -> (Graph, DistanceMatrix) {
        let d = all_pairs_distances(&g).unwrap();
        (g, d)
    }

    fn assert_radio_witness(g: &Graph, d: &DistanceMatrix, r: &SolverResult) {
        assert!(is_radio_labeling(g, d, &r.witness).unwrap().is_empty());
        assert_eq!(span(&r.witness), r.optimum);
    }

    #[test]
    fn radio_small_middle_graphs() {
        for (n, want) in [(2, 3), (3, 8)] {
            let (g, d) = setup(middle_path_graph(n).unwrap());
            let r = exact_radio_number(&g, &d, SolverBudget::unlimited(), None).unwrap();
            assert!(r.proven_optimal);
            assert_eq!(r.optimum, want);
            assert_radio_witness(&g, &d, &r);
            assert_eq!(brute_force_radio_number(&g, &d).unwrap(), want);
        }
    }

    #[test]
    fn radio_p4() {
        let (g, d) = setup(path_graph(4).unwrap());
        let r = exact_radio_number(&g, &d, SolverBudget::unlimited(), None).unwrap();
        assert_eq!(r.optimum, 5);
        assert_eq!(brute_force_radio_number(&g, &d).unwrap(), 5);
        assert_radio_witness(&g, &d, &r);
    }

    #[test]
    fn single_vertex() {
        let (g, d) = setup(path_graph(1).unwrap());
        let r = exact_radio_number(&g, &d, SolverBudget::unlimited(), None).unwrap();
        assert_eq!((r.optimum, r.proven_optimal), (0, true));
        let l = exact_lambda(&g, &d, SolverBudget::unlimited()).unwrap();
        assert_eq!((l.optimum, l.proven_optimal), (0, true));
        assert_eq!(brute_force_radio_number(&g, &d).unwrap(), 0);
    }

    #[test]
    fn incumbent_does_not_change_optimum() {
        let (g, d) = setup(middle_path_graph(4).unwrap());
        let plain = exact_radio_number(&g, &d, SolverBudget::unlimited(), None).unwrap();
        let seed = mpn_labeling(4).unwrap();
        let seeded = exact_radio_number(&g, &d, SolverBudget::unlimited(), Some(&seed)).unwrap();
        assert_eq!(plain.optimum, rn_mpn_formula(4).unwrap());
        assert_eq!(seeded.optimum, plain.optimum);
        assert!(seeded.proven_optimal);
        assert_radio_witness(&g, &d, &seeded);
    }

    #[test]
    fn invalid_incumbent_rejected() {
        let (g, d) = setup(middle_path_graph(2).unwrap());
        let bad = Labeling::new(vec![0, 1, 2]);
        assert!(matches!(
            exact_radio_number(&g, &d, SolverBudget::unlimited(), Some(&bad)),
            Err(SolverError::InvalidIncumbent { .. })
        ));
    }

    #[test]
    fn budget_exhaustion_reports_upper_bound() {
        let (g, d) = setup(middle_path_graph(7).unwrap());
        let r = exact_radio_number(&g, &d, SolverBudget::nodes(10), None).unwrap();
        assert!(!r.proven_optimal);
        assert!(r.optimum >= rn_mpn_formula(7).unwrap());
        assert!(r.nodes_explored <= 10);
        assert_radio_witness(&g, &d, &r);
    }

    #[test]
    fn brute_force_limit() {
        let (g, d) = setup(path_graph(10).unwrap());
        assert_eq!(
            brute_force_radio_number(&g, &d),
            Err(SolverError::TooLarge { p: 10, limit: 9 })
        );
    }

    #[test]
    fn lambda_small() {
        for (n, want) in [(2, 3), (3, 4), (4, 5)] {
            let (g, d) = setup(middle_path_graph(n).unwrap());
            let r = exact_lambda(&g, &d, SolverBudget::unlimited()).unwrap();
            assert!(r.proven_optimal);
            assert_eq!(r.optimum, want, "n = {n}");
            assert!(is_l21_labeling(&g, &d, &r.witness).unwrap().is_empty());
            assert_eq!(span(&r.witness), r.optimum);
        }
    }

    #[test]
    fn lambda_budget() {
        let (g, d) = setup(middle_path_graph(8).unwrap());
        let r = exact_lambda(&g, &d, SolverBudget::nodes(3)).unwrap();
        assert!(!r.proven_optimal);
        assert!(r.optimum >= 6);
        assert!(is_l21_labeling(&g, &d, &r.witness).unwrap().is_empty());
    }

    #[test]
    fn orbits_of_middle_path() {
        // reflection pairs v_i with v_{n+1-i} and v'_i with v'_{n-i}
        let (_, d) = setup(middle_path_graph(4).unwrap());
        // v1 v2 | v'1 v'2
        assert_eq!(orbit_representatives(&d), vec![0, 1, 4, 5]);
        let (_, d) = setup(path_graph(5).unwrap());
        assert_eq!(orbit_representatives(&d), vec![0, 1, 2]);
    }

    #[test]
    fn deterministic_single_thread() {
        let (g, d) = setup(middle_path_graph(4).unwrap());
        let a = exact_radio_number(&g, &d, SolverBudget::unlimited(), None).unwrap();
        let b = exact_radio_number(&g, &d, SolverBudget::unlimited(), None).unwrap();
        assert_eq!(a, b);
    }
}
