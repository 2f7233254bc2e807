//! Simple undirected graphs, the path and middle-graph constructors, and the
//! distance-derived invariants (diameter, center, level function).

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a path needs at least one vertex")]
    EmptyPath,
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("duplicate vertex name `{0}`")]
    DuplicateName(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex index {index} out of range for {len} vertices")]
    OutOfRange { index: usize, len: usize },
    #[error("self-loop on `{0}`")]
    SelfLoop(String),
    #[error("parallel edge `{0}`-`{1}`")]
    ParallelEdge(String, String),
    #[error("graph is disconnected (`{0}` cannot reach `{1}`)")]
    Disconnected(String, String),
}

/// Index of a vertex within its graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// What a vertex stands for, when the graph came out of the middle-graph operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum VertexRole {
    #[default]
    Plain,
    Original,
    EdgeVertex,
}

impl VertexRole {
    pub fn as_str(self) -> &'static str {
        match self {
            VertexRole::Plain => "plain",
            VertexRole::Original => "original",
            VertexRole::EdgeVertex => "edge",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "plain" => Some(VertexRole::Plain),
            "original" => Some(VertexRole::Original),
            "edge" => Some(VertexRole::EdgeVertex),
            _ => None,
        }
    }
}

/// A vertex of M(P_n): either the path vertex v_i or the edge vertex v'_i
/// standing for the edge v_i v_{i+1}. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MiddleVertexName {
    Original(usize),
    EdgeVertex(usize),
}

impl MiddleVertexName {
    /// Position of this vertex in the graph built by [`middle_path_graph`]:
    /// originals occupy `0..n`, edge vertices `n..2n-1`.
    pub fn id(self, n: usize) -> VertexId {
        match self {
            MiddleVertexName::Original(i) => {
                assert!((1..=n).contains(&i), "v{i} is not a vertex of M(P_{n})");
                VertexId(i - 1)
            }
            MiddleVertexName::EdgeVertex(i) => {
                assert!(i >= 1 && i < n, "v'{i} is not a vertex of M(P_{n})");
                VertexId(n + i - 1)
            }
        }
    }

    pub fn from_id(n: usize, id: VertexId) -> Option<Self> {
        let x = id.0;
        if x < n {
            Some(MiddleVertexName::Original(x + 1))
        } else if x < 2 * n - 1 {
            Some(MiddleVertexName::EdgeVertex(x - n + 1))
        } else {
            None
        }
    }
}

impl fmt::Display for MiddleVertexName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MiddleVertexName::Original(i) => write!(f, "v{i}"),
            MiddleVertexName::EdgeVertex(i) => write!(f, "v'{i}"),
        }
    }
}

/// Simple undirected graph with uniquely named vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    roles: Vec<VertexRole>,
    adj: Vec<Vec<usize>>,
    by_name: HashMap<String, usize>,
}

impl Graph {
    /// Builds a graph from vertex names and index pairs. Self-loops and
    /// repeated edges are rejected; connectivity is not checked here.
    pub fn new(
        names: Vec<String>,
        roles: Vec<VertexRole>,
        edges: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        if names.is_empty() {
            return Err(GraphError::Empty);
        }
        let len = names.len();
        let roles = if roles.is_empty() {
            vec![VertexRole::Plain; len]
        } else {
            assert_eq!(roles.len(), len, "one role per vertex");
            roles
        };
        let mut by_name = HashMap::with_capacity(len);
        for (i, name) in names.iter().enumerate() {
            if by_name.insert(name.clone(), i).is_some() {
                return Err(GraphError::DuplicateName(name.clone()));
            }
        }
        let mut adj = vec![Vec::new(); len];
        for &(u, v) in edges {
            for index in [u, v] {
                if index >= len {
                    return Err(GraphError::OutOfRange { index, len });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(names[u].clone()));
            }
            if adj[u].contains(&v) {
                return Err(GraphError::ParallelEdge(names[u].clone(), names[v].clone()));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            names,
            roles,
            adj,
            by_name,
        })
    }

    /// Same as [`Graph::new`] but with edges given by vertex name.
    pub fn from_named_edges<S: AsRef<str>>(
        names: Vec<String>,
        roles: Vec<VertexRole>,
        edges: &[(S, S)],
    ) -> Result<Self, GraphError> {
        let lookup: HashMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let resolve = |s: &str| {
            lookup
                .get(s)
                .copied()
                .ok_or_else(|| GraphError::UnknownVertex(s.to_string()))
        };
        let indexed = edges
            .iter()
            .map(|(a, b)| Ok((resolve(a.as_ref())?, resolve(b.as_ref())?)))
            .collect::<Result<Vec<_>, GraphError>>()?;
        Graph::new(names, roles, &indexed)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.names.len()).map(VertexId)
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn role(&self, v: VertexId) -> VertexRole {
        self.roles[v.0]
    }

    pub fn roles(&self) -> &[VertexRole] {
        &self.roles
    }

    pub fn id_of(&self, name: &str) -> Option<VertexId> {
        self.by_name.get(name).copied().map(VertexId)
    }

    /// Sorted neighbor indices.
    pub fn neighbors(&self, v: VertexId) -> &[usize] {
        &self.adj[v.0]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.0].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u.0].binary_search(&v.0).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }
}

/// The path P_n on vertices `v1..vn`.
pub fn path_graph(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::EmptyPath);
    }
    let names = (1..=n).map(|i| format!("v{i}")).collect();
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(names, Vec::new(), &edges)
}

/// The middle graph M(G): the vertices of G followed by one vertex per edge of
/// G (in [`Graph::edges`] order). Edge vertex `i` is named `v'i`, 1-based.
pub fn middle_graph(g: &Graph) -> Graph {
    let p = g.vertex_count();
    let edges = g.edges();

    let mut names = g.names().to_vec();
    let mut roles = vec![VertexRole::Original; p];
    for i in 1..=edges.len() {
        let mut name = format!("v'{i}");
        while g.id_of(&name).is_some() {
            name.push('*');
        }
        names.push(name);
        roles.push(VertexRole::EdgeVertex);
    }

    let mut out_edges = Vec::new();
    for (e, &(a, b)) in edges.iter().enumerate() {
        out_edges.push((a, p + e));
        out_edges.push((b, p + e));
    }
    // Edge vertices are adjacent when their edges share an endpoint.
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); p];
    for (e, &(a, b)) in edges.iter().enumerate() {
        incident[a].push(e);
        incident[b].push(e);
    }
    for list in &incident {
        for (x, &e) in list.iter().enumerate() {
            for &f in &list[x + 1..] {
                out_edges.push((p + e, p + f));
            }
        }
    }

    Graph::new(names, roles, &out_edges).expect("middle graph of a simple graph is simple")
}

/// M(P_n), with the vertex layout described in [`MiddleVertexName::id`].
pub fn middle_path_graph(n: usize) -> Result<Graph, GraphError> {
    Ok(middle_graph(&path_graph(n)?))
}

/// All-pairs hop distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    len: usize,
    dist: Vec<u64>,
    diameter: u64,
}

impl DistanceMatrix {
    /// Builds the matrix from a row-major table. Panics if `dist` is not `len * len`.
    pub fn from_table(len: usize, dist: Vec<u64>) -> Self {
        assert_eq!(dist.len(), len * len);
        let diameter = dist.iter().copied().max().unwrap_or(0);
        DistanceMatrix {
            len,
            dist,
            diameter,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, u: VertexId, v: VertexId) -> u64 {
        self.dist[u.0 * self.len + v.0]
    }

    pub fn row(&self, u: VertexId) -> &[u64] {
        &self.dist[u.0 * self.len..(u.0 + 1) * self.len]
    }

    pub fn diameter(&self) -> u64 {
        self.diameter
    }

    pub fn eccentricity(&self, u: VertexId) -> u64 {
        self.row(u).iter().copied().max().unwrap_or(0)
    }
}

/// One BFS per vertex. Fails on disconnected input.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix, GraphError> {
    let len = g.vertex_count();
    let mut dist = vec![u64::MAX; len * len];
    let mut queue = VecDeque::with_capacity(len);
    for s in 0..len {
        let row = &mut dist[s * len..(s + 1) * len];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let next = row[u] + 1;
            for &w in g.neighbors(VertexId(u)) {
                if row[w] == u64::MAX {
                    row[w] = next;
                    queue.push_back(w);
                }
            }
        }
        if let Some(t) = row.iter().position(|&x| x == u64::MAX) {
            return Err(GraphError::Disconnected(
                g.name(VertexId(s)).to_string(),
                g.name(VertexId(t)).to_string(),
            ));
        }
    }
    Ok(DistanceMatrix::from_table(len, dist))
}

/// Vertices of minimum eccentricity, ascending by index.
pub fn center(g: &Graph, dist: &DistanceMatrix) -> Vec<VertexId> {
    let ecc: Vec<u64> = g.vertices().map(|v| dist.eccentricity(v)).collect();
    let radius = ecc.iter().copied().min().unwrap_or(0);
    g.vertices().filter(|v| ecc[v.0] == radius).collect()
}

/// Distance of every vertex to the nearest center vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelMap {
    levels: Vec<u64>,
    center: Vec<VertexId>,
}

impl LevelMap {
    pub fn level(&self, v: VertexId) -> u64 {
        self.levels[v.0]
    }

    pub fn levels(&self) -> &[u64] {
        &self.levels
    }

    pub fn center(&self) -> &[VertexId] {
        &self.center
    }

    pub fn max_level(&self) -> u64 {
        self.levels.iter().copied().max().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.levels.iter().sum()
    }
}

pub fn level_map(g: &Graph, dist: &DistanceMatrix) -> LevelMap {
    let center = center(g, dist);
    let levels = g
        .vertices()
        .map(|u| center.iter().map(|&w| dist.get(w, u)).min().unwrap_or(0))
        .collect();
    LevelMap { levels, center }
}
