//! The concrete objects: named graphs, the involution representatives, the
//! affine generators, and the expected spectra.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::gf3::{m11, ConnectionSet, Gf3Matrix, GfVector};
use crate::golay;
use crate::graph::{
    cayley, classify_involution_pairs, dual_seidel_switch, is_automorphism,
    lift_involution_to_product, strong_product_k2, Graph, GraphError, InvolutionKind,
};
use crate::perm::{perm_from_matrix, translation_perm, Permutation};

pub const GAMMA_SPECTRUM: &str = "22:1,4:132,-5:110";
pub const DELTA_SPECTRUM: &str = "22:1,5:48,4:72,-4:60,-5:62";
pub const GAMMA_K2_SPECTRUM: &str = "45:1,9:132,-1:243,-9:110";
pub const DELTA_K2_SPECTRUM: &str = "45:1,9:120,1:108,-1:135,-9:122";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NamedGraph {
    Gamma,
    GammaS2,
    Delta,
    GammaK2,
    DeltaK2,
    Petersen,
    C5,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown graph name {0:?}; expected one of gamma, gamma-s2, delta, gamma-k2, delta-k2, petersen, c5")]
pub struct UnknownGraph(pub String);

impl NamedGraph {
    pub const ALL: [NamedGraph; 7] = [
        NamedGraph::Gamma,
        NamedGraph::GammaS2,
        NamedGraph::Delta,
        NamedGraph::GammaK2,
        NamedGraph::DeltaK2,
        NamedGraph::Petersen,
        NamedGraph::C5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedGraph::Gamma => "gamma",
            NamedGraph::GammaS2 => "gamma-s2",
            NamedGraph::Delta => "delta",
            NamedGraph::GammaK2 => "gamma-k2",
            NamedGraph::DeltaK2 => "delta-k2",
            NamedGraph::Petersen => "petersen",
            NamedGraph::C5 => "c5",
        }
    }

    pub fn build(self) -> Graph {
        let g = match self {
            NamedGraph::Gamma => gamma(),
            NamedGraph::GammaS2 => gamma_s2(),
            NamedGraph::Delta => delta(),
            NamedGraph::GammaK2 => strong_product_k2(&gamma()),
            NamedGraph::DeltaK2 => delta_k2(),
            NamedGraph::Petersen => Graph::petersen(),
            NamedGraph::C5 => Graph::cycle(5),
        };
        g.with_label(self.name())
    }

    /// Known spectrum, where one is on record.
    pub fn expected_spectrum(self) -> Option<&'static str> {
        match self {
            NamedGraph::Gamma | NamedGraph::GammaS2 => Some(GAMMA_SPECTRUM),
            NamedGraph::Delta => Some(DELTA_SPECTRUM),
            NamedGraph::GammaK2 => Some(GAMMA_K2_SPECTRUM),
            NamedGraph::DeltaK2 => Some(DELTA_K2_SPECTRUM),
            NamedGraph::Petersen => Some("3:1,1:5,-2:4"),
            NamedGraph::C5 => None,
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedGraph {
    type Err = UnknownGraph;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NamedGraph::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| UnknownGraph(s.to_string()))
    }
}

pub fn minus_e() -> Gf3Matrix {
    Gf3Matrix::identity(5).neg()
}

/// `Cay(V(5,3), S1)`.
pub fn gamma() -> Graph {
    cayley(5, &m11::s1()).expect("S1 is a valid connection set")
}

/// `Cay(V(5,3), S2)`.
pub fn gamma_s2() -> Graph {
    cayley(5, &golay::connection_set_s2()).expect("S2 is a valid connection set")
}

/// The permutation induced by `x`.
pub fn phi() -> Permutation {
    perm_from_matrix(&m11::x()).expect("x is invertible")
}

pub fn delta() -> Graph {
    dual_seidel_switch(&gamma(), &phi()).expect("switching applies to gamma")
}

pub fn delta_k2() -> Graph {
    dual_seidel_switch(
        &strong_product_k2(&gamma()),
        &lift_involution_to_product(&phi()),
    )
    .expect("switching applies to gamma[K2]")
}

/// Translations by the unit vectors, `x`, `y` and `−e`.
pub fn affine_generators() -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = (0..5)
        .map(|i| translation_perm(&GfVector::unit(5, i)))
        .collect();
    for m in [m11::x(), m11::y(), minus_e()] {
        gens.push(perm_from_matrix(&m).expect("invertible"));
    }
    gens
}

/// The three involution classes `−e`, `x`, `−x` as matrices.
pub fn involution_representatives() -> Vec<(&'static str, Gf3Matrix)> {
    vec![("-e", minus_e()), ("x", m11::x()), ("-x", m11::x().neg())]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionRow {
    pub name: String,
    pub automorphism: bool,
    pub fixed_points: usize,
    pub adjacent_swaps: usize,
    pub nonadjacent_swaps: usize,
    pub kind: InvolutionKind,
}

pub fn involution_row(
    g: &Graph,
    name: &str,
    sigma: &Permutation,
) -> Result<InvolutionRow, GraphError> {
    let pairs = classify_involution_pairs(g, sigma)?;
    Ok(InvolutionRow {
        name: name.to_string(),
        automorphism: is_automorphism(g, sigma)?,
        fixed_points: pairs.fixed,
        adjacent_swaps: pairs.adjacent_swaps,
        nonadjacent_swaps: pairs.nonadjacent_swaps,
        kind: pairs.kind(),
    })
}

/// One row per involution representative acting on `g`.
pub fn involution_sweep(g: &Graph) -> Result<Vec<InvolutionRow>, GraphError> {
    involution_representatives()
        .iter()
        .map(|(name, m)| {
            let sigma = perm_from_matrix(m).map_err(|_| GraphError::NotAnInvolution)?;
            involution_row(g, name, &sigma)
        })
        .collect()
}

/// Parses a comma-separated list of 5-digit ternary strings, closing it under
/// negation.
pub fn parse_connection_set(text: &str) -> Result<ConnectionSet, crate::gf3::Gf3Error> {
    let vectors = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(GfVector::from_digits)
        .collect::<Result<Vec<_>, _>>()?;
    ConnectionSet::symmetric(5, vectors)
}
