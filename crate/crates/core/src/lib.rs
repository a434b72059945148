//! Finite posets and their chain/antichain combinatorics.
//!
//! Elements of a poset are dense indices `0..n` with `n <= 64`, so every
//! subset is a single `u64` word. The strict order is stored as a pair of
//! transitively closed bitset row tables (`up`, `down`), which keeps the
//! subset-intensive solvers (Greene-Kleitman quantities, decomposability
//! searches) branch-friendly.

pub mod bits;
pub mod canon;
pub mod error;
pub mod greene;
pub mod matching;
pub mod partition;
pub mod poset;
pub mod text;

pub use canon::CanonicalForm;
pub use error::PosetError;
pub use greene::{
    conjugate, greene_diagram, max_k_antichain, max_k_chain, merge_diagrams, GreeneDiagram,
    MergeDiagram, Partition,
};
pub use greene::decomp::{
    c_decomposition, compose_witness, d_decomposition, d_decomposition_width3, is_rectangular,
    nested_chain_partition, CompositionMode, DecompositionWitness, RectangularWitness, SearchBudget,
    WitnessKind,
};
pub use partition::{min_antichain_partition, min_chain_partition, AntichainPartition, ChainPartition};
pub use poset::Poset;
