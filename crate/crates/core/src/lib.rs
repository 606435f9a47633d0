//! Hyperplane arrangements built from vertex-weighted digraphs: characteristic
//! polynomials, king/coking elimination, and freeness decisions.

pub mod arrangement;
pub mod corpus;
pub mod digraph;
pub mod freeness;
pub mod linalg;
pub mod oracle;
pub mod poly;

pub use arrangement::{from_digraph, Arrangement, ArrangementError, Hyperplane};
pub use digraph::{VertexWeightedDigraph, WeightInterval};
pub use poly::IntegerPolynomial;
