//! Closed-form radio labeling of the middle graph M(P_n) and the matching
//! level-sum lower bound.
//!
//! Vertices are addressed through [`MiddleVertexName`]; the ordering places
//! `v'_k` first and threads the remaining vertices so that consecutive
//! vertices sit on opposite sides of the center, which makes every
//! consecutive distance equal to the sum of their levels (plus one for odd
//! `n`). The labeling then meets the lower bound exactly.

use thiserror::Error;

use crate::graph::{
    all_pairs_distances, level_map, middle_path_graph, DistanceMatrix, Graph, GraphError,
    LevelMap, MiddleVertexName, VertexId,
};
use crate::labeling::{Labeling, LabelingError, Ordering};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("n = {n} is outside the supported domain (n >= {min})")]
    TooSmall { n: usize, min: usize },
    #[error("position {position} assigned twice while building the ordering for n = {n}")]
    PositionCollision { n: usize, position: usize },
    #[error("position {position} is outside 1..={p} for n = {n}")]
    PositionOutOfRange { n: usize, position: usize, p: usize },
    #[error("graph is not a middle graph of a path: {0}")]
    NotMiddlePath(String),
    #[error("label recurrence went negative at step {step}")]
    NegativeIncrement { step: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

/// `n = 2k` or `n = 2k + 1`, with `p = 2n - 1` vertices and diameter `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityParams {
    pub n: usize,
    pub k: usize,
    pub parity: Parity,
    pub p: usize,
    pub diameter: usize,
}

impl ParityParams {
    pub fn new(n: usize) -> Result<Self, ConstructionError> {
        if n < 2 {
            return Err(ConstructionError::TooSmall { n, min: 2 });
        }
        Ok(ParityParams {
            n,
            k: n / 2,
            parity: if n.is_multiple_of(2) { Parity::Even } else { Parity::Odd },
            p: 2 * n - 1,
            diameter: n,
        })
    }
}

struct Slots {
    n: usize,
    seq: Vec<Option<VertexId>>,
}

impl Slots {
    fn new(n: usize) -> Self {
        Slots {
            n,
            seq: vec![None; 2 * n - 1],
        }
    }

    /// `position` is 1-based, as in u_1..u_p.
    fn put(&mut self, position: usize, v: MiddleVertexName) -> Result<(), ConstructionError> {
        let p = self.seq.len();
        if position == 0 || position > p {
            return Err(ConstructionError::PositionOutOfRange {
                n: self.n,
                position,
                p,
            });
        }
        let slot = &mut self.seq[position - 1];
        if slot.is_some() {
            return Err(ConstructionError::PositionCollision {
                n: self.n,
                position,
            });
        }
        *slot = Some(v.id(self.n));
        Ok(())
    }

    fn finish(self) -> Result<Ordering, ConstructionError> {
        let p = self.seq.len();
        let seq: Option<Vec<VertexId>> = self.seq.into_iter().collect();
        let seq = seq.ok_or(LabelingError::NotPermutation { len: p })?;
        Ok(Ordering::new(seq, p)?)
    }
}

/// The optimal vertex ordering u_1..u_p of M(P_n).
pub fn mpn_ordering(n: usize) -> Result<Ordering, ConstructionError> {
    use MiddleVertexName::{EdgeVertex as E, Original as V};

    let params = ParityParams::new(n)?;
    let k = params.k;
    let p = params.p;
    let mut slots = Slots::new(n);
    slots.put(1, E(k))?;

    match params.parity {
        Parity::Even => {
            slots.put(p, V(k))?;
            for i in (1..=n).filter(|&i| i != k) {
                let j = if i < k {
                    4 * (k - i) + 1
                } else {
                    4 * (2 * k - i) + 2
                };
                slots.put(j, V(i))?;
            }
            for i in (1..n).filter(|&i| i != k) {
                let j = if i < k {
                    4 * (k - i - 1) + 3
                } else {
                    4 * (2 * k - i)
                };
                slots.put(j, E(i))?;
            }
        }
        Parity::Odd => {
            slots.put(p, V(k + 1))?;
            slots.put(p - 1, V(n))?;
            slots.put(p - 2, V(1))?;
            slots.put(p - 3, E(k + 1))?;
            for i in 2..=k {
                slots.put(4 * (k + 1 - i) + 1, V(i))?;
            }
            for i in k + 2..n {
                slots.put(4 * (2 * k - i) + 2, V(i))?;
            }
            for i in 1..k {
                slots.put(4 * (k - i - 1) + 3, E(i))?;
            }
            for i in k + 2..n {
                slots.put(4 * (2 * k + 1 - i), E(i))?;
            }
        }
    }
    slots.finish()
}

/// Everything the construction produces for one `n`.
#[derive(Debug, Clone)]
pub struct MpnConstruction {
    pub params: ParityParams,
    pub graph: Graph,
    pub distances: DistanceMatrix,
    pub levels: LevelMap,
    pub ordering: Ordering,
    pub labeling: Labeling,
}

impl MpnConstruction {
    pub fn build(n: usize) -> Result<Self, ConstructionError> {
        let params = ParityParams::new(n)?;
        let graph = middle_path_graph(n)?;
        let distances = all_pairs_distances(&graph)?;
        let levels = level_map(&graph, &distances);
        let ordering = mpn_ordering(n)?;
        let labeling = level_labeling(&params, &levels, &ordering)?;
        Ok(MpnConstruction {
            params,
            graph,
            distances,
            levels,
            ordering,
            labeling,
        })
    }
}

/// Labels along `ordering` with increments `d + 1 - L(u_i) - L(u_{i+1})` for
/// even `n` and `d - L(u_i) - L(u_{i+1})` for odd `n`, starting at zero.
fn level_labeling(
    params: &ParityParams,
    levels: &LevelMap,
    ordering: &Ordering,
) -> Result<Labeling, ConstructionError> {
    let base = match params.parity {
        Parity::Even => params.diameter as u64 + 1,
        Parity::Odd => params.diameter as u64,
    };
    let mut labels = vec![0u64; params.p];
    let mut current = 0u64;
    for (step, w) in ordering.as_slice().windows(2).enumerate() {
        let drop = levels.level(w[0]) + levels.level(w[1]);
        let inc = base
            .checked_sub(drop)
            .filter(|&x| x > 0)
            .ok_or(ConstructionError::NegativeIncrement { step: step + 1 })?;
        current += inc;
        labels[w[1].0] = current;
    }
    Ok(Labeling::new(labels))
}

/// The optimal radio labeling of M(P_n), indexed like [`middle_path_graph`].
pub fn mpn_labeling(n: usize) -> Result<Labeling, ConstructionError> {
    Ok(MpnConstruction::build(n)?.labeling)
}

/// rn(M(P_n)): `4k^2 - 1` for `n = 2k`, `4k(k + 1)` for `n = 2k + 1`.
pub fn rn_mpn_formula(n: usize) -> Result<u64, ConstructionError> {
    let params = ParityParams::new(n)?;
    let k = params.k as u64;
    Ok(match params.parity {
        Parity::Even => 4 * k * k - 1,
        Parity::Odd => 4 * k * (k + 1),
    })
}

/// Radio number of the path P_n for `n >= 3`: `2k(k - 1) + 1` for `n = 2k`,
/// `2k^2 + 2` for `n = 2k + 1`.
pub fn rn_path_formula(n: usize) -> Result<u64, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::TooSmall { n, min: 3 });
    }
    let k = (n / 2) as u64;
    Ok(if n.is_multiple_of(2) {
        2 * k * (k - 1) + 1
    } else {
        2 * k * k + 2
    })
}

/// λ(M(P_n)), the minimum L(2,1) span.
pub fn lambda_mpn_formula(n: usize) -> Result<u64, ConstructionError> {
    Ok(match n {
        0 | 1 => return Err(ConstructionError::TooSmall { n, min: 2 }),
        2 => 3,
        3 => 4,
        4 | 5 => 5,
        _ => 6,
    })
}

/// Level-sum lower bound on the radio number, computed from the graph:
/// `(p-1)(d+1) - 2ΣL + 1` when `n` is even and `(p-1)(d+1) - 2ΣL - (p-1)`
/// when `n` is odd. The graph must carry the M(P_n) signature
/// (`p = 2n - 1`, diameter `n`, center of size 1 or 3 by parity).
pub fn lower_bound_mpn(
    g: &Graph,
    dist: &DistanceMatrix,
    levels: &LevelMap,
) -> Result<u64, ConstructionError> {
    let p = g.vertex_count();
    if p.is_multiple_of(2) || p < 3 {
        return Err(ConstructionError::NotMiddlePath(format!(
            "{p} vertices is not 2n - 1 for any n >= 2"
        )));
    }
    let n = p.div_ceil(2);
    if dist.diameter() != n as u64 {
        return Err(ConstructionError::NotMiddlePath(format!(
            "diameter {} differs from n = {n}",
            dist.diameter()
        )));
    }
    let want_center = if n.is_multiple_of(2) { 1 } else { 3 };
    if levels.center().len() != want_center {
        return Err(ConstructionError::NotMiddlePath(format!(
            "center has {} vertices, expected {want_center}",
            levels.center().len()
        )));
    }

    let p = p as i64;
    let d = dist.diameter() as i64;
    let level_sum = levels.total() as i64;
    let bound = if n.is_multiple_of(2) {
        (p - 1) * (d + 1) - 2 * level_sum + 1
    } else {
        (p - 1) * (d + 1) - 2 * level_sum - (p - 1)
    };
    u64::try_from(bound).map_err(|_| {
        ConstructionError::NotMiddlePath(format!("level sum {level_sum} gives a negative bound"))
    })
}
