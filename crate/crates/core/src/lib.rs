//! Multiplet classification for the non-compact algebras su(n,n), together
//! with the parabolically related sl(2n,R) and, for even n, su*(2n).
//!
//! Elementary representations induced from the maximal parabolic with
//! M = sl(n,C)_R are identified with splits of the Lambda+rho coordinate
//! vector into two descending blocks. Intertwining differential operators
//! are the Bruhat covers between those splits; Knapp-Stein partners swap the
//! blocks. Everything is exact integer arithmetic, with the A-character
//! parameter c carried doubled.

pub mod analysis;
pub mod cli;
pub mod emit;
mod error;
pub mod fixtures;
pub mod multiplet;
pub mod oracle;
pub mod roots;
pub mod signature;
pub mod verify;

pub use analysis::{
    ds_annotations, parabolic_relatives, weyl_dimension, Algebra, AlgebraTag, DsAnnotation, DsKind,
};
pub use emit::{to_dot, to_json, to_table, Format, RenderOptions};
pub use error::{Error, Result};
pub use multiplet::{
    classify_reductions, cover_edges, generic_labels, main_multiplet, reduced_multiplet,
    singlet_minimal_irreps, CosetSubset, Edge, Flag, MultipletGraph, Operator, ReductionClass,
    Singlet, Vertex,
};
pub use roots::{
    bgg_degree, hc_param, lambda_vector, positive_roots, DynkinLabels, LambdaVector, Rank, Root,
};
pub use signature::{
    all_arrangements, conformal_d, ks_partner, m_rho, signature_of, Arrangement, ErSignature,
};
