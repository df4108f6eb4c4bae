//! Exact boundary data of circular planar electrical networks: response
//! matrices, effective resistances, the embedding into the totally
//! non-negative Grassmannian, Kalmanson metric checks, medial strands, and
//! topology reconstruction from effective resistances.

pub mod arrangement;
pub mod cli;
pub mod distance;
pub mod error;
pub mod generate;
pub mod grassmann;
pub mod io;
pub mod kalmanson;
pub mod linalg;
pub mod medial;
pub mod network;
pub mod reconstruction;
pub mod spanning;

pub use distance::DistanceMatrix;
pub use error::{Error, Result};
pub use linalg::{Matrix, Rational};
pub use network::{CircularNetwork, Edge, EdgeId, VertexId};
