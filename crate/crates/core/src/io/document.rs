//! Plain-text graph and labeling documents.
//!
//! Both formats are line based. `#` starts a comment, blank lines are
//! ignored, and tokens are separated by whitespace, so vertex names must not
//! contain whitespace or `#`.
//!
//! ```text
//! format radio-graph 1
//! vertex v1 original
//! vertex v'1 edge
//! vertex v2 original
//! edge v1 v'1
//! edge v'1 v2
//! ```
//!
//! ```text
//! format radio-labeling 1
//! kind radio
//! graph m_p2.graph
//! label v1 3
//! label v'1 0
//! label v2 2
//! ```
//!
//! A labeling may carry its graph inline (`vertex` and `edge` lines) instead
//! of a `graph` path.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexRole};
use crate::labeling::{Labeling, LabelingError};

pub const GRAPH_FORMAT: &str = "radio-graph";
pub const LABELING_FORMAT: &str = "radio-labeling";
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `format` header")]
    MissingHeader,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

fn syntax(line: usize, message: impl Into<String>) -> DocumentError {
    DocumentError::Syntax {
        line,
        message: message.into(),
    }
}

/// Non-empty, comment-stripped lines with their 1-based numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn check_header(line: usize, tokens: &[&str], format: &str) -> Result<(), DocumentError> {
    match tokens {
        ["format", name, version] if *name == format => {
            let v: u32 = version
                .parse()
                .map_err(|_| syntax(line, format!("bad version `{version}`")))?;
            if v != FORMAT_VERSION {
                return Err(syntax(line, format!("unsupported version {v}")));
            }
            Ok(())
        }
        ["format", name, _] => Err(syntax(line, format!("expected format `{format}`, got `{name}`"))),
        _ => Err(syntax(line, "malformed `format` line")),
    }
}

/// Vertex names (with roles) and edges by name.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GraphDocument {
    pub vertices: Vec<(String, VertexRole)>,
    pub edges: Vec<(String, String)>,
}

impl GraphDocument {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDocument {
            vertices: g
                .vertices()
                .map(|v| (g.name(v).to_string(), g.role(v)))
                .collect(),
            edges: g
                .edges()
                .into_iter()
                .map(|(a, b)| (g.names()[a].clone(), g.names()[b].clone()))
                .collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, DocumentError> {
        let names = self.vertices.iter().map(|(n, _)| n.clone()).collect();
        let roles = self.vertices.iter().map(|(_, r)| *r).collect();
        Ok(Graph::from_named_edges(names, roles, &self.edges)?)
    }

    /// Handles a `vertex` or `edge` line; false for any other keyword.
    fn take_line(&mut self, line: usize, tokens: &[&str]) -> Result<bool, DocumentError> {
        match tokens {
            ["vertex", name] => self.vertices.push((name.to_string(), VertexRole::Plain)),
            ["vertex", name, role] => {
                let role = VertexRole::parse(role)
                    .ok_or_else(|| syntax(line, format!("unknown vertex role `{role}`")))?;
                self.vertices.push((name.to_string(), role));
            }
            ["edge", a, b] => self.edges.push((a.to_string(), b.to_string())),
            ["vertex", ..] | ["edge", ..] => {
                return Err(syntax(line, format!("wrong arity for `{}`", tokens[0])))
            }
            _ => return Ok(false),
        }
        Ok(true)
    }

    fn write_body(&self, out: &mut String) {
        for (name, role) in &self.vertices {
            match role {
                VertexRole::Plain => writeln!(out, "vertex {name}"),
                r => writeln!(out, "vertex {name} {}", r.as_str()),
            }
            .unwrap();
        }
        for (a, b) in &self.edges {
            writeln!(out, "edge {a} {b}").unwrap();
        }
    }

    pub fn emit(&self) -> String {
        let mut out = format!("format {GRAPH_FORMAT} {FORMAT_VERSION}\n");
        self.write_body(&mut out);
        out
    }

    pub fn read(path: &Path) -> Result<Self, DocumentError> {
        read_text(path)?.parse()
    }
}

impl FromStr for GraphDocument {
    type Err = DocumentError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut it = lines(text);
        let (line, header) = it.next().ok_or(DocumentError::MissingHeader)?;
        check_header(line, &header, GRAPH_FORMAT)?;
        let mut doc = GraphDocument::default();
        for (line, tokens) in it {
            if !doc.take_line(line, &tokens)? {
                return Err(syntax(line, format!("unknown keyword `{}`", tokens[0])));
            }
        }
        Ok(doc)
    }
}

fn read_text(path: &Path) -> Result<String, DocumentError> {
    std::fs::read_to_string(path).map_err(|source| DocumentError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Which condition a labeling claims to satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelingKind {
    Radio,
    L21,
}

impl LabelingKind {
    pub fn as_str(self) -> &'static str {
        match self {
            LabelingKind::Radio => "radio",
            LabelingKind::L21 => "L21",
        }
    }
}

impl FromStr for LabelingKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "radio" => Ok(LabelingKind::Radio),
            "l21" | "lambda" => Ok(LabelingKind::L21),
            _ => Err(format!("unknown labeling kind `{s}` (expected radio or L21)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphRef {
    None,
    Path(PathBuf),
    Inline(GraphDocument),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelingDocument {
    pub kind: LabelingKind,
    pub graph: GraphRef,
    /// Sorted by name so emission is stable.
    pub labels: BTreeMap<String, u64>,
}

impl LabelingDocument {
    pub fn from_labeling(g: &Graph, labeling: &Labeling, kind: LabelingKind, graph: GraphRef) -> Self {
        LabelingDocument {
            kind,
            graph,
            labels: g
                .vertices()
                .map(|v| (g.name(v).to_string(), labeling.get(v)))
                .collect(),
        }
    }

    pub fn to_labeling(&self, g: &Graph) -> Result<Labeling, DocumentError> {
        let map: HashMap<String, u64> = self.labels.clone().into_iter().collect();
        Ok(Labeling::from_names(g, &map)?)
    }

    /// Resolves the referenced graph; relative paths are taken from `base`.
    pub fn load_graph(&self, base: &Path) -> Result<Option<Graph>, DocumentError> {
        match &self.graph {
            GraphRef::None => Ok(None),
            GraphRef::Inline(doc) => doc.to_graph().map(Some),
            GraphRef::Path(p) => {
                let full = if p.is_absolute() { p.clone() } else { base.join(p) };
                GraphDocument::read(&full)?.to_graph().map(Some)
            }
        }
    }

    pub fn emit(&self) -> String {
        let mut out = format!("format {LABELING_FORMAT} {FORMAT_VERSION}\n");
        writeln!(out, "kind {}", self.kind.as_str()).unwrap();
        match &self.graph {
            GraphRef::None => {}
            GraphRef::Path(p) => writeln!(out, "graph {}", p.display()).unwrap(),
            GraphRef::Inline(doc) => doc.write_body(&mut out),
        }
        for (name, label) in &self.labels {
            writeln!(out, "label {name} {label}").unwrap();
        }
        out
    }

    pub fn read(path: &Path) -> Result<Self, DocumentError> {
        read_text(path)?.parse()
    }
}

impl FromStr for LabelingDocument {
    type Err = DocumentError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut it = lines(text);
        let (line, header) = it.next().ok_or(DocumentError::MissingHeader)?;
        check_header(line, &header, LABELING_FORMAT)?;

        let mut kind = None;
        let mut path = None;
        let mut inline = GraphDocument::default();
        let mut labels = BTreeMap::new();
        for (line, tokens) in it {
            match tokens.as_slice() {
                ["kind", k] => kind = Some(k.parse().map_err(|e: String| syntax(line, e))?),
                ["graph", p] => path = Some(PathBuf::from(p)),
                ["label", name, value] => {
                    let value: u64 = value
                        .parse()
                        .map_err(|_| syntax(line, format!("label `{value}` is not a non-negative integer")))?;
                    if labels.insert(name.to_string(), value).is_some() {
                        return Err(syntax(line, format!("`{name}` labeled twice")));
                    }
                }
                _ => {
                    if !inline.take_line(line, &tokens)? {
                        return Err(syntax(line, format!("unknown keyword `{}`", tokens[0])));
                    }
                }
            }
        }
        let has_inline = !inline.vertices.is_empty() || !inline.edges.is_empty();
        let graph = match (path, has_inline) {
            (Some(_), true) => {
                return Err(syntax(0, "labeling has both a graph path and an inline graph"))
            }
            (Some(p), false) => GraphRef::Path(p),
            (None, true) => GraphRef::Inline(inline),
            (None, false) => GraphRef::None,
        };
        Ok(LabelingDocument {
            kind: kind.ok_or_else(|| syntax(0, "missing `kind` line"))?,
            graph,
            labels,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::mpn_labeling;
    use crate::graph::middle_path_graph;

    #[test]
    fn graph_round_trip() {
        let g = middle_path_graph(4).unwrap();
        let doc = GraphDocument::from_graph(&g);
        let text = doc.emit();
        let back: GraphDocument = text.parse().unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_graph().unwrap(), g);
        assert!(text.contains("vertex v'1 edge"));
    }

    #[test]
    fn labeling_round_trip() {
        let g = middle_path_graph(3).unwrap();
        let lab = mpn_labeling(3).unwrap();
        for graph in [
            GraphRef::None,
            GraphRef::Path("m.graph".into()),
            GraphRef::Inline(GraphDocument::from_graph(&g)),
        ] {
            let doc = LabelingDocument::from_labeling(&g, &lab, LabelingKind::Radio, graph);
            let back: LabelingDocument = doc.emit().parse().unwrap();
            assert_eq!(back, doc);
            assert_eq!(back.to_labeling(&g).unwrap(), lab);
        }
    }

    #[test]
    fn comments_and_plain_vertices() {
        let doc: GraphDocument = "# a triangle\nformat radio-graph 1\n\nvertex a\nvertex b # end\nvertex c\nedge a b\nedge b c\nedge a c\n"
            .parse()
            .unwrap();
        let g = doc.to_graph().unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 3));
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "",
            "format radio-graph 2\n",
            "format radio-labeling 1\n",
            "format radio-graph 1\nvertex\n",
            "format radio-graph 1\nnode a\n",
            "format radio-graph 1\nvertex a blue\n",
        ] {
            assert!(bad.parse::<GraphDocument>().is_err(), "{bad:?}");
        }
        for bad in [
            "format radio-labeling 1\nlabel a 1\n",
            "format radio-labeling 1\nkind radio\nlabel a -1\n",
            "format radio-labeling 1\nkind radio\nlabel a 1\nlabel a 2\n",
            "format radio-labeling 1\nkind purple\n",
            "format radio-labeling 1\nkind radio\ngraph g\nvertex a\n",
        ] {
            assert!(bad.parse::<LabelingDocument>().is_err(), "{bad:?}");
        }
        let doc: GraphDocument = "format radio-graph 1\nvertex a\nedge a b\n".parse().unwrap();
        assert!(matches!(
            doc.to_graph(),
            Err(DocumentError::Graph(GraphError::UnknownVertex(_)))
        ));
    }

    #[test]
    fn kind_aliases() {
        assert_eq!("lambda".parse::<LabelingKind>().unwrap(), LabelingKind::L21);
        assert_eq!("L21".parse::<LabelingKind>().unwrap(), LabelingKind::L21);
        assert_eq!("Radio".parse::<LabelingKind>().unwrap(), LabelingKind::Radio);
    }
}
