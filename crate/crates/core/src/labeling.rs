//! Labelings, orderings, and the radio / L(2,1) condition checks.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{DistanceMatrix, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("labeling covers {got} vertices, graph has {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("no label for vertex `{0}`")]
    Missing(String),
    #[error("label given for unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("ordering is not a permutation of {len} vertices")]
    NotPermutation { len: usize },
}

/// Channel assignment covering every vertex of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling {
    labels: Vec<u64>,
}

impl Labeling {
    pub fn new(labels: Vec<u64>) -> Self {
        Labeling { labels }
    }

    /// Builds a labeling from a name map; every vertex of `g` must be named
    /// exactly once.
    pub fn from_names(g: &Graph, map: &HashMap<String, u64>) -> Result<Self, LabelingError> {
        if let Some(name) = map.keys().find(|k| g.id_of(k).is_none()) {
            return Err(LabelingError::UnknownVertex(name.clone()));
        }
        let labels = g
            .vertices()
            .map(|v| {
                map.get(g.name(v))
                    .copied()
                    .ok_or_else(|| LabelingError::Missing(g.name(v).to_string()))
            })
            .collect::<Result<_, _>>()?;
        Ok(Labeling { labels })
    }

    pub fn get(&self, v: VertexId) -> u64 {
        self.labels[v.0]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn min(&self) -> u64 {
        self.labels.iter().copied().min().unwrap_or(0)
    }

    pub fn max(&self) -> u64 {
        self.labels.iter().copied().max().unwrap_or(0)
    }

    /// Same labeling moved so its smallest label is zero.
    pub fn normalized(&self) -> Labeling {
        let lo = self.min();
        Labeling::new(self.labels.iter().map(|&x| x - lo).collect())
    }

    pub fn shifted(&self, by: u64) -> Labeling {
        Labeling::new(self.labels.iter().map(|&x| x + by).collect())
    }

    /// Vertices sorted by label, ties by index.
    pub fn induced_ordering(&self) -> Ordering {
        let mut seq: Vec<VertexId> = (0..self.labels.len()).map(VertexId).collect();
        seq.sort_by_key(|v| (self.labels[v.0], v.0));
        Ordering { seq }
    }
}

/// Largest minus smallest label; zero for an empty labeling.
pub fn span(labeling: &Labeling) -> u64 {
    labeling.max() - labeling.min()
}

/// A permutation u_1..u_p of the vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ordering {
    seq: Vec<VertexId>,
}

impl Ordering {
    pub fn new(seq: Vec<VertexId>, vertex_count: usize) -> Result<Self, LabelingError> {
        let mut seen = vec![false; vertex_count];
        let ok = seq.len() == vertex_count
            && seq.iter().all(|v| {
                v.0 < vertex_count && !std::mem::replace(&mut seen[v.0], true)
            });
        if ok {
            Ok(Ordering { seq })
        } else {
            Err(LabelingError::NotPermutation { len: vertex_count })
        }
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// Distances between consecutive vertices, `d(u_i, u_{i+1})` for i = 1..p-1.
    pub fn consecutive_distances<'a>(
        &'a self,
        dist: &'a DistanceMatrix,
    ) -> impl Iterator<Item = u64> + 'a {
        self.seq.windows(2).map(|w| dist.get(w[0], w[1]))
    }
}

/// A pair whose label gap is smaller than the condition demands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub u: VertexId,
    pub v: VertexId,
    pub distance: u64,
    pub required: u64,
    pub actual: u64,
}

fn check_len(g: &Graph, labeling: &Labeling) -> Result<(), LabelingError> {
    if labeling.len() != g.vertex_count() {
        return Err(LabelingError::SizeMismatch {
            expected: g.vertex_count(),
            got: labeling.len(),
        });
    }
    Ok(())
}

/// Every pair violating `|f(u) - f(v)| >= diam + 1 - d(u, v)`. Empty means `labeling`
/// is a radio labeling.
pub fn is_radio_labeling(
    g: &Graph,
    dist: &DistanceMatrix,
    labeling: &Labeling,
) -> Result<Vec<Violation>, LabelingError> {
    check_len(g, labeling)?;
    let bound = dist.diameter() + 1;
    Ok(violations_by(g, dist, labeling, |d| bound.saturating_sub(d)))
}

/// Every pair violating the distance-two conditions: gap >= 2 at distance 1 and
/// gap >= 1 at distance 2.
pub fn is_l21_labeling(
    g: &Graph,
    dist: &DistanceMatrix,
    labeling: &Labeling,
) -> Result<Vec<Violation>, LabelingError> {
    check_len(g, labeling)?;
    Ok(violations_by(g, dist, labeling, |d| match d {
        1 => 2,
        2 => 1,
        _ => 0,
    }))
}

fn violations_by(
    g: &Graph,
    dist: &DistanceMatrix,
    labeling: &Labeling,
    required: impl Fn(u64) -> u64,
) -> Vec<Violation> {
    let p = g.vertex_count();
    let mut out = Vec::new();
    for a in 0..p {
        let row = dist.row(VertexId(a));
        for (b, &distance) in row.iter().enumerate().skip(a + 1) {
            let need = required(distance);
            let actual = labeling.labels[a].abs_diff(labeling.labels[b]);
            if actual < need {
                out.push(Violation {
                    u: VertexId(a),
                    v: VertexId(b),
                    distance,
                    required: need,
                    actual,
                });
            }
        }
    }
    out
}

/// Labels along `ord` by the consecutive-pair recurrence
/// `f(u_1) = 0`, `f(u_{i+1}) = f(u_i) + diam + 1 - d(u_i, u_{i+1})`.
/// Only consecutive pairs are considered; whether the result is a radio
/// labeling depends on the ordering.
pub fn greedy_label_from_ordering(dist: &DistanceMatrix, ord: &Ordering) -> Labeling {
    let step = dist.diameter() + 1;
    let mut labels = vec![0; dist.len()];
    let mut current = 0;
    for w in ord.as_slice().windows(2) {
        current += step - dist.get(w[0], w[1]);
        labels[w[1].0] = current;
    }
    Labeling::new(labels)
}

/// 1-based positions `i` where `d(u_i, u_{i+1}) > k + 1`. An empty result
/// means the consecutive recurrence along `ord` yields a radio labeling of
/// M(P_n) with `k = n / 2`.
pub fn lemma1_premise_check(dist: &DistanceMatrix, ord: &Ordering, k: u64) -> Vec<usize> {
    ord.consecutive_distances(dist)
        .enumerate()
        .filter(|&(_, d)| d > k + 1)
        .map(|(i, _)| i + 1)
        .collect()
}
