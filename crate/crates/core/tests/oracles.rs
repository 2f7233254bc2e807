use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mpn_radio::construction::{mpn_labeling, rn_mpn_formula};
use mpn_radio::graph::{all_pairs_distances, middle_path_graph, path_graph, DistanceMatrix, Graph, VertexId};
use mpn_radio::labeling::{is_l21_labeling, is_radio_labeling, span, Labeling};
use mpn_radio::solver::{
    brute_force_radio_number, exact_lambda, exact_lambda_parallel, exact_radio_number,
    exact_radio_number_parallel, SolverBudget,
};

fn setup(g: Graph) -> (Graph, DistanceMatrix) {
    let d = all_pairs_distances(&g).unwrap();
    (g, d)
}

/// Smallest `s` such that some assignment of labels in `0..=s` meets every
/// pairwise requirement. Enumerates labels directly; no orderings involved.
fn min_span_by_assignment(d: &DistanceMatrix, required: impl Fn(u64) -> u64) -> u64 {
    fn fits(
        d: &DistanceMatrix,
        required: &dyn Fn(u64) -> u64,
        labels: &mut Vec<u64>,
        s: u64,
    ) -> bool {
        let i = labels.len();
        if i == d.len() {
            return true;
        }
        for x in 0..=s {
            if (0..i).all(|j| x.abs_diff(labels[j]) >= required(d.get(VertexId(i), VertexId(j)))) {
                labels.push(x);
                if fits(d, required, labels, s) {
                    return true;
                }
                labels.pop();
            }
        }
        false
    }
    (0..)
        .find(|&s| fits(d, &required, &mut Vec::new(), s))
        .unwrap()
}

fn random_connected(rng: &mut ChaCha8Rng, p: usize) -> Graph {
    let mut edges = Vec::new();
    for v in 1..p {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..p {
        for v in u + 1..p {
            if !edges.contains(&(u, v)) && rng.gen_bool(0.3) {
                edges.push((u, v));
            }
        }
    }
    Graph::new((0..p).map(|i| format!("r{i}")).collect(), Vec::new(), &edges).unwrap()
}

#[test]
fn assignment_oracle_confirms_small_radio_numbers() {
    let cases: Vec<(Graph, u64)> = vec![
        (middle_path_graph(2).unwrap(), 3),
        (middle_path_graph(3).unwrap(), 8),
        (path_graph(2).unwrap(), 1),
        (path_graph(4).unwrap(), 5),
        (path_graph(5).unwrap(), 10),
    ];
    for (g, want) in cases {
        let (g, d) = setup(g);
        let diam = d.diameter();
        let oracle = min_span_by_assignment(&d, |dist| diam + 1 - dist);
        assert_eq!(oracle, want, "{} vertices", g.vertex_count());
        assert_eq!(brute_force_radio_number(&g, &d).unwrap(), want);
        let r = exact_radio_number(&g, &d, SolverBudget::unlimited(), None).unwrap();
        assert_eq!(r.optimum, want);
    }
}

#[test]
fn p3_radio_number_is_three() {
    // a-b-c: b=0, a=2, c=3 has span 3
    let (g, d) = setup(path_graph(3).unwrap());
    let witness = Labeling::new(vec![2, 0, 3]);
    assert!(is_radio_labeling(&g, &d, &witness).unwrap().is_empty());
    assert_eq!(min_span_by_assignment(&d, |x| 3 - x), 3);
    assert_eq!(brute_force_radio_number(&g, &d).unwrap(), 3);
}

#[test]
fn assignment_oracle_confirms_lambda() {
    for (n, want) in [(2, 3), (3, 4), (4, 5), (5, 6), (6, 6)] {
        let (g, d) = setup(middle_path_graph(n).unwrap());
        let oracle = min_span_by_assignment(&d, |x| match x {
            1 => 2,
            2 => 1,
            _ => 0,
        });
        assert_eq!(oracle, want, "n = {n}");
        let r = exact_lambda(&g, &d, SolverBudget::unlimited()).unwrap();
        assert_eq!(r.optimum, want, "n = {n}");
    }
}

#[test]
fn bnb_matches_brute_force_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..80 {
        let p = rng.gen_range(1..=7);
        let (g, d) = setup(random_connected(&mut rng, p));
        let bnb = exact_radio_number(&g, &d, SolverBudget::unlimited(), None).unwrap();
        assert!(bnb.proven_optimal);
        assert_eq!(bnb.optimum, brute_force_radio_number(&g, &d).unwrap());
        assert!(is_radio_labeling(&g, &d, &bnb.witness).unwrap().is_empty());
        assert_eq!(span(&bnb.witness), bnb.optimum);
    }
}

#[test]
fn lambda_matches_assignment_oracle_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let p = rng.gen_range(1..=8);
        let (g, d) = setup(random_connected(&mut rng, p));
        let oracle = min_span_by_assignment(&d, |x| match x {
            1 => 2,
            2 => 1,
            _ => 0,
        });
        let r = exact_lambda(&g, &d, SolverBudget::unlimited()).unwrap();
        assert_eq!(r.optimum, oracle);
        assert!(is_l21_labeling(&g, &d, &r.witness).unwrap().is_empty());
        assert_eq!(span(&r.witness), r.optimum);
        let par = exact_lambda_parallel(&g, &d, SolverBudget::unlimited(), 3).unwrap();
        assert_eq!(par.optimum, oracle);
    }
}

#[test]
fn construction_incumbent_keeps_optimum() {
    for n in 2..=5 {
        let (g, d) = setup(middle_path_graph(n).unwrap());
        let plain = exact_radio_number(&g, &d, SolverBudget::unlimited(), None).unwrap();
        let seed = mpn_labeling(n).unwrap();
        let seeded = exact_radio_number(&g, &d, SolverBudget::unlimited(), Some(&seed)).unwrap();
        assert_eq!(plain.optimum, seeded.optimum);
        assert_eq!(seeded.optimum, rn_mpn_formula(n).unwrap());
        assert!(seeded.proven_optimal && plain.proven_optimal);
        assert!(is_radio_labeling(&g, &d, &seeded.witness).unwrap().is_empty());
    }
}

#[test]
fn shifted_incumbent_is_accepted() {
    let (g, d) = setup(middle_path_graph(3).unwrap());
    let seed = mpn_labeling(3).unwrap().shifted(5);
    let r = exact_radio_number(&g, &d, SolverBudget::unlimited(), Some(&seed)).unwrap();
    assert_eq!(r.optimum, 8);
    assert_eq!(r.witness.min(), 0);
}

#[test]
fn single_thread_is_deterministic() {
    let (g, d) = setup(middle_path_graph(5).unwrap());
    let runs: Vec<_> = (0..3)
        .map(|_| exact_radio_number(&g, &d, SolverBudget::unlimited(), None).unwrap())
        .collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn parallel_agrees_with_single_thread() {
    for n in 2..=5 {
        let (g, d) = setup(middle_path_graph(n).unwrap());
        let one = exact_radio_number(&g, &d, SolverBudget::unlimited(), None).unwrap();
        let four = exact_radio_number_parallel(&g, &d, SolverBudget::unlimited(), None, 4).unwrap();
        assert_eq!(one.optimum, four.optimum);
        assert_eq!(one.proven_optimal, four.proven_optimal);
        assert!(is_radio_labeling(&g, &d, &four.witness).unwrap().is_empty());
    }
}

#[test]
fn time_budget_stops_large_search() {
    let (g, d) = setup(middle_path_graph(40).unwrap());
    let budget = SolverBudget {
        max_nodes: None,
        max_seconds: Some(0.05),
    };
    let r = exact_radio_number(&g, &d, budget, None).unwrap();
    assert!(!r.proven_optimal);
    assert!(r.optimum >= rn_mpn_formula(40).unwrap());
    assert!(is_radio_labeling(&g, &d, &r.witness).unwrap().is_empty());
}
