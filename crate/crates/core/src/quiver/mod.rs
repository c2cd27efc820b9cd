//! The quantum quiver aggregate and its classical-graph special case.

mod diagram;
mod weak_iso;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{AlgebraShape, MatrixUnit, ShapeError};
use crate::hom::{HomError, OrderTable, RegularEmbedding, UnitImage};

pub use diagram::DiagramFormat;
pub use weak_iso::WeakIsoWitness;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuiverError {
    /// The source and range embeddings disagree on the vertex or edge shape.
    ShapeMismatch,
    /// A block of size > 1 where a commutative quiver is required.
    NonCommutative(String),
    UnknownEndpoint { edge: String, vertex: String },
    Shape(ShapeError),
    Hom(HomError),
    UnsupportedFormat(String),
}

impl fmt::Display for QuiverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuiverError::ShapeMismatch => {
                f.write_str("source and range embeddings have different shapes")
            }
            QuiverError::NonCommutative(id) => {
                write!(f, "block `{id}` has size > 1; the quiver is not commutative")
            }
            QuiverError::UnknownEndpoint { edge, vertex } => {
                write!(f, "edge `{edge}` refers to unknown vertex `{vertex}`")
            }
            QuiverError::Shape(e) => write!(f, "{e}"),
            QuiverError::Hom(e) => write!(f, "{e}"),
            QuiverError::UnsupportedFormat(s) => {
                write!(f, "unsupported diagram format `{s}` (expected dot or tikz)")
            }
        }
    }
}

impl core::error::Error for QuiverError {}

impl From<HomError> for QuiverError {
    fn from(e: HomError) -> Self {
        QuiverError::Hom(e)
    }
}

impl From<ShapeError> for QuiverError {
    fn from(e: ShapeError) -> Self {
        QuiverError::Shape(e)
    }
}

/// `(B0, B1, r, s)` with both maps regular.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuantumQuiver {
    source: RegularEmbedding,
    range: RegularEmbedding,
}

/// Outcome of the completeness test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Completeness {
    Complete,
    /// `r* s (1_v) != 1` for this vertex block.
    NotComplete { vertex: usize },
}

impl QuantumQuiver {
    pub fn new(source: RegularEmbedding, range: RegularEmbedding) -> Result<Self, QuiverError> {
        if source.domain() != range.domain() || source.codomain() != range.codomain() {
            return Err(QuiverError::ShapeMismatch);
        }
        Ok(QuantumQuiver { source, range })
    }

    /// Builds the quiver with canonical placements for both tables.
    pub fn from_tables(source: OrderTable, range: OrderTable) -> Result<Self, QuiverError> {
        Self::new(
            RegularEmbedding::canonical(source)?,
            RegularEmbedding::canonical(range)?,
        )
    }

    pub fn vertex_shape(&self) -> &AlgebraShape {
        self.source.domain()
    }

    pub fn edge_shape(&self) -> &AlgebraShape {
        self.source.codomain()
    }

    pub fn source(&self) -> &RegularEmbedding {
        &self.source
    }

    pub fn range(&self) -> &RegularEmbedding {
        &self.range
    }

    /// `B1 = 0`.
    pub fn is_disconnected(&self) -> bool {
        self.edge_shape().is_empty()
    }

    pub fn is_commutative(&self) -> bool {
        self.vertex_shape().is_commutative() && self.edge_shape().is_commutative()
    }

    /// The commutative quiver `(C(E0), C(E1), r*, s*)` of a directed graph.
    pub fn from_graph(g: &DirectedGraph) -> Self {
        let b0 = AlgebraShape::new(g.vertices.iter().map(|v| (v.as_str(), 1)))
            .expect("graph vertices are validated");
        let b1 = AlgebraShape::new(g.edges.iter().map(|e| (e.id.as_str(), 1)))
            .expect("graph edges are validated");
        let mut s = OrderTable::zeros(b0.clone(), b1.clone());
        let mut r = OrderTable::zeros(b0.clone(), b1);
        for (k, e) in g.edges.iter().enumerate() {
            s.set(b0.index_of(&e.source).expect("validated"), k, 1);
            r.set(b0.index_of(&e.range).expect("validated"), k, 1);
        }
        Self::from_tables(s, r).expect("graph tables are unital")
    }

    /// Recovers the directed graph of a commutative quiver.
    pub fn to_graph(&self) -> Result<DirectedGraph, QuiverError> {
        for shape in [self.vertex_shape(), self.edge_shape()] {
            if let Some(b) = shape.blocks().iter().find(|b| b.size != 1) {
                return Err(QuiverError::NonCommutative(b.id.clone()));
            }
        }
        let b0 = self.vertex_shape();
        let endpoint = |t: &RegularEmbedding, a: usize| {
            // unitality with all sizes 1 leaves exactly one vertex per edge
            let v = (0..b0.len())
                .find(|&v| t.order(v, a) == 1)
                .expect("unital commutative map");
            String::from(b0.id(v))
        };
        let edges = (0..self.edge_shape().len())
            .map(|a| GraphEdge {
                id: self.edge_shape().id(a).into(),
                source: endpoint(&self.source, a),
                range: endpoint(&self.range, a),
            })
            .collect();
        Ok(DirectedGraph {
            vertices: b0.blocks().iter().map(|b| b.id.clone()).collect(),
            edges,
        })
    }

    /// Multiset of vertex units in `r* s (1_v)`.
    pub fn range_adjoint_of_source_unit(&self, vertex: usize) -> BTreeMap<MatrixUnit, usize> {
        let n = self.vertex_shape().size(vertex);
        let mut counts = BTreeMap::new();
        for a in 0..self.edge_shape().len() {
            for &o in self.source.offsets(vertex, a) {
                for i in 1..=n {
                    let u = MatrixUnit::new(a, o + i, o + i);
                    if let UnitImage::Unit(w) = self.range.adjoint_unit(&u).expect("in shape") {
                        *counts.entry(w).or_insert(0) += 1;
                    }
                }
            }
        }
        counts
    }

    /// Tests `r* s (1_v) = 1` for every vertex block, against the given
    /// embeddings.
    pub fn completeness(&self) -> Completeness {
        let b0 = self.vertex_shape();
        let total = b0.total_size();
        for v in 0..b0.len() {
            let counts = self.range_adjoint_of_source_unit(v);
            let ok = counts.len() == total
                && counts.iter().all(|(u, &c)| c == 1 && u.is_diagonal());
            if !ok {
                return Completeness::NotComplete { vertex: v };
            }
        }
        Completeness::Complete
    }

    pub fn is_complete(&self) -> bool {
        self.completeness() == Completeness::Complete
    }

    /// Necessary condition for completeness: every `n_v` divides
    /// `sum_w n_w`. Returns the first vertex block that fails.
    pub fn divisibility_check(&self) -> Result<(), usize> {
        divisibility_check(self.vertex_shape())
    }

    /// Searches for a weak isomorphism onto `other`; see [`WeakIsoWitness`].
    pub fn weak_iso(&self, other: &QuantumQuiver) -> Option<WeakIsoWitness> {
        weak_iso::search(self, other)
    }

    pub fn diagram(&self, format: DiagramFormat) -> String {
        diagram::emit(self, format)
    }
}

/// Divisibility test on a vertex shape alone.
pub fn divisibility_check(vertices: &AlgebraShape) -> Result<(), usize> {
    let total = vertices.total_size();
    match (0..vertices.len()).find(|&v| !total.is_multiple_of(vertices.size(v))) {
        Some(v) => Err(v),
        None => Ok(()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GraphEdge {
    pub id: String,
    pub source: String,
    pub range: String,
}

/// A finite directed multigraph with named vertices and edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectedGraph {
    vertices: Vec<String>,
    edges: Vec<GraphEdge>,
}

impl DirectedGraph {
    pub fn new(vertices: Vec<String>, edges: Vec<GraphEdge>) -> Result<Self, QuiverError> {
        // shape construction checks id uniqueness on both sides
        AlgebraShape::new(vertices.iter().map(|v| (v.as_str(), 1)))?;
        AlgebraShape::new(edges.iter().map(|e| (e.id.as_str(), 1)))?;
        for e in &edges {
            for end in [&e.source, &e.range] {
                if !vertices.contains(end) {
                    return Err(QuiverError::UnknownEndpoint {
                        edge: e.id.clone(),
                        vertex: end.clone(),
                    });
                }
            }
        }
        Ok(DirectedGraph { vertices, edges })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == id)
    }

    /// Edges leaving `vertex`, in edge order.
    pub fn out_edges<'a>(&'a self, vertex: &'a str) -> impl Iterator<Item = (usize, &'a GraphEdge)> + 'a {
        self.edges
            .iter()
            .enumerate()
            .filter(move |(_, e)| e.source == vertex)
    }

    pub fn is_sink(&self, vertex: &str) -> bool {
        self.out_edges(vertex).next().is_none()
    }
}
