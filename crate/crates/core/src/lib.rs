//! Zagreb-type topological indices (M1, M2, EM1, EM2), the four EM1-monotone
//! graph rewrites, named extremal graph families, and an exhaustive
//! small-graph harness that checks extremal EM1 bounds for trees, unicyclic,
//! bicyclic and tricyclic graphs.
//!
//! ```
//! use zagreb::{families, indices};
//!
//! let g = families::s_n_k4(6).unwrap();
//! assert_eq!(indices::em1(&g), 6 * 6 * 6 - 5 * 36 + 20 * 6 + 32);
//! ```

pub mod canon;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod indices;
pub mod operations;
pub mod verify;

pub use canon::{canonical_form, CanonicalForm};
pub use graph::{Edge, Graph, GraphError, Relabeling, Vertex};
pub use indices::{IndexId, IndexValue};
