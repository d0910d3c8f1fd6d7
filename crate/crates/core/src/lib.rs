//! Exact constructions and certificates for the strongly regular graph
//! SRG(243,22,1,2) on V(5,3) and the strictly Deza graphs obtained from it by
//! dual Seidel switching and the strong product with an edge.
//!
//! Every claim is checked with exact arithmetic: common-neighbour counts on
//! bit-packed adjacency rows, annihilating polynomials and power traces for
//! spectra, Schreier–Sims for group orders, and individualization-refinement
//! for automorphism groups.

pub mod autiso;
pub mod certify;
pub mod gf3;
pub mod golay;
pub mod graph;
pub mod named;
pub mod perm;
pub mod pipeline;
pub mod spectra;

pub use autiso::{
    automorphism_group, find_linear_cayley_isomorphism, verify_subgroup, AutError, AutOptions,
    AutResult,
};
pub use certify::{
    certify_ddg, certify_deza, certify_srg, CertificateRecord, DdgCertificate, DezaCertificate,
    SrgCertificate,
};
pub use gf3::{ConnectionSet, Gf3Error, Gf3Matrix, GfVector};
pub use graph::io::{from_edge_list, from_graph6, to_edge_list, to_graph6, ParseError};
pub use graph::{Graph, GraphError};
pub use named::NamedGraph;
pub use perm::{GroupOrder, PermError, Permutation, StabilizerChain};
pub use pipeline::{run_paper_pipeline, PipelineConfig, Report};
pub use spectra::{certify_spectrum, SpectrumCertificate, SpectrumClaim, SpectrumError};

use thiserror::Error;

/// Any error raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Gf3(#[from] Gf3Error),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Aut(#[from] AutError),
    #[error(transparent)]
    Code(#[from] golay::CodeError),
    #[error(transparent)]
    UnknownGraph(#[from] named::UnknownGraph),
}
