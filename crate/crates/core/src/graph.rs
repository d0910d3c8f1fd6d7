//! Dense bit-packed simple graphs and the constructions used on them:
//! Cayley graphs over V(n,3), complements, the strong product with K2,
//! and dual Seidel switching.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::certify::{certify_deza, certify_srg, SrgCertificate};
use crate::gf3::{pow3, ConnectionSet, Gf3Error, GfVector};
use crate::perm::Permutation;

pub mod io;

/// Largest vertex count accepted by the dense representation.
pub const MAX_VERTICES: usize = 1 << 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("{0} vertices exceeds the dense limit")]
    TooLarge(usize),
    #[error("permutation of degree {perm} applied to a graph on {graph} vertices")]
    DegreeMismatch { graph: usize, perm: usize },
    #[error("invalid connection set: {0}")]
    InvalidConnectionSet(#[from] Gf3Error),
    #[error("permutation is not an involution")]
    NotAnInvolution,
    #[error("dual Seidel switching is not applicable: {0}")]
    SwitchingInapplicable(String),
    #[error("row-switched matrix is not a simple graph: {0}")]
    NotSymmetric(String),
}

/// Simple undirected graph stored as a symmetric bit matrix.
///
/// Equality compares vertex count and adjacency only; the label is ignored.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    label: Option<String>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        let words = n.div_ceil(64).max(1);
        Ok(Graph {
            n,
            words,
            bits: vec![0; n * words],
            label: None,
        })
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for (u, w) in edges {
            g.check_vertex(u)?;
            g.check_vertex(w)?;
            if u == w {
                return Err(GraphError::Loop(u));
            }
            g.set_edge(u, w);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |w| (u, w))))
            .expect("valid edges")
            .with_label(format!("K{n}"))
    }

    pub fn cycle(n: usize) -> Self {
        Self::from_edges(n, (0..n).map(|u| (u, (u + 1) % n)))
            .expect("valid edges")
            .with_label(format!("C{n}"))
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|u| (u - 1, u)))
            .expect("valid edges")
            .with_label(format!("P{n}"))
    }

    /// The Petersen graph as the Kneser graph K(5,2): vertices are the
    /// 2-subsets of {0..4} in lexicographic order, adjacent when disjoint.
    pub fn petersen() -> Self {
        let pairs = petersen_pairs();
        let mut edges = Vec::new();
        for (i, a) in pairs.iter().enumerate() {
            for (j, b) in pairs.iter().enumerate().skip(i + 1) {
                if a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1 {
                    edges.push((i, j));
                }
            }
        }
        Self::from_edges(10, edges)
            .expect("valid edges")
            .with_label("petersen")
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of u64 words per adjacency row.
    pub fn words_per_row(&self) -> usize {
        self.words
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(())
    }

    fn set_edge(&mut self, u: usize, w: usize) {
        self.bits[u * self.words + w / 64] |= 1 << (w % 64);
        self.bits[w * self.words + u / 64] |= 1 << (u % 64);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, w: usize) -> bool {
        self.bits[u * self.words + w / 64] >> (w % 64) & 1 == 1
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(u))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    /// The common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut degrees = (0..self.n).map(|u| self.degree(u));
        let k = degrees.next().unwrap_or(0);
        degrees.all(|d| d == k).then_some(k)
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    /// Edges `(u, w)` with `u < w`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&w| w > u)
                .map(move |w| (u, w))
        })
    }

    /// `|Γ(u) ∩ Γ(w)|` by popcount of the row intersection.
    #[inline]
    pub fn common_neighbor_count(&self, u: usize, w: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(w))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_symmetric_and_loop_free(&self) -> bool {
        (0..self.n).all(|u| !self.has_edge(u, u) && self.neighbors(u).all(|w| self.has_edge(w, u)))
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("same size");
        for u in 0..self.n {
            for w in u + 1..self.n {
                if !self.has_edge(u, w) {
                    g.set_edge(u, w);
                }
            }
        }
        g.label = self.label.as_ref().map(|l| format!("complement({l})"));
        g
    }

    /// The graph whose adjacency row `u` is row `images[u]` of `self`.
    /// Fails unless the result is symmetric and loop-free.
    pub fn switch_rows(&self, sigma: &Permutation) -> Result<Graph, GraphError> {
        self.check_perm(sigma)?;
        let mut g = Graph::empty(self.n)?;
        for u in 0..self.n {
            let src = sigma.apply(u);
            g.bits[u * self.words..(u + 1) * self.words].copy_from_slice(self.row(src));
        }
        if let Some(u) = (0..g.n).find(|&u| g.has_edge(u, u)) {
            return Err(GraphError::NotSymmetric(format!("loop at {u}")));
        }
        for u in 0..g.n {
            if let Some(w) = g.neighbors(u).find(|&w| !g.has_edge(w, u)) {
                return Err(GraphError::NotSymmetric(format!(
                    "{u}->{w} without {w}->{u}"
                )));
            }
        }
        Ok(g)
    }

    fn check_perm(&self, sigma: &Permutation) -> Result<(), GraphError> {
        if sigma.degree() != self.n {
            return Err(GraphError::DegreeMismatch {
                graph: self.n,
                perm: sigma.degree(),
            });
        }
        Ok(())
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bits == other.bits
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("label", &self.label)
            .field("vertices", &self.n)
            .field("edges", &self.edge_count())
            .finish()
    }
}

/// Iterates the set bits of a packed row.
pub fn iter_bits(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(wi, &word)| {
        let mut w = word;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(wi * 64 + b)
        })
    })
}

pub(crate) fn petersen_pairs() -> Vec<(usize, usize)> {
    (0..5)
        .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
        .collect()
}

/// The involution of the Petersen graph induced by swapping 0 and 1 in the
/// ground set; it exchanges only non-adjacent vertices.
pub fn petersen_involution() -> Permutation {
    let pairs = petersen_pairs();
    let swap = |x: usize| match x {
        0 => 1,
        1 => 0,
        other => other,
    };
    Permutation::from_fn(10, |i| {
        let (a, b) = pairs[i];
        let (a, b) = (swap(a).min(swap(b)), swap(a).max(swap(b)));
        pairs
            .iter()
            .position(|&p| p == (a, b))
            .expect("pair exists")
    })
    .expect("bijection")
}

/// `Cay(V(n,3), S)`: vertices are vector indices, `i ~ j` iff `v_i − v_j ∈ S`.
pub fn cayley(dim: usize, s: &ConnectionSet) -> Result<Graph, GraphError> {
    // Re-validate in case the set was built for a different dimension.
    let s = ConnectionSet::new(dim, s.iter().cloned())?;
    let n = pow3(dim);
    let mut g = Graph::empty(n)?;
    let vectors: Vec<GfVector> = (0..n)
        .map(|i| GfVector::from_index(i, dim).expect("in range"))
        .collect();
    for (i, v) in vectors.iter().enumerate() {
        for d in s.iter() {
            let j = v.add(d).index();
            g.set_edge(i, j);
        }
    }
    Ok(g)
}

/// `G[K2]`: vertex `2u + c` is copy `c` of `u`; distinct vertices are adjacent
/// iff their base vertices are equal or adjacent.
pub fn strong_product_k2(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut p = Graph::empty(2 * n).expect("product within dense limit");
    for u in 0..n {
        p.set_edge(2 * u, 2 * u + 1);
        for w in g.neighbors(u).filter(|&w| w > u) {
            for i in 0..2 {
                for j in 0..2 {
                    p.set_edge(2 * u + i, 2 * w + j);
                }
            }
        }
    }
    p.label = g.label.as_ref().map(|l| format!("{l}[K2]"));
    p
}

/// Lifts an involution of `G` to `G[K2]` preserving copies: `(u,i) ↦ (σ(u),i)`.
pub fn lift_involution_to_product(sigma: &Permutation) -> Permutation {
    Permutation::from_fn(2 * sigma.degree(), |x| 2 * sigma.apply(x / 2) + x % 2).expect("bijection")
}

pub fn is_automorphism(g: &Graph, sigma: &Permutation) -> Result<bool, GraphError> {
    Ok(automorphism_violation(g, sigma)?.is_none())
}

/// First edge `(u, w)` whose image is not an edge, if any. Since `σ` is a
/// bijection, mapping edges to edges is enough.
pub fn automorphism_violation(
    g: &Graph,
    sigma: &Permutation,
) -> Result<Option<(usize, usize)>, GraphError> {
    g.check_perm(sigma)?;
    Ok(g.edges()
        .find(|&(u, w)| !g.has_edge(sigma.apply(u), sigma.apply(w))))
}

/// Counts of fixed points and 2-cycles of an involution, split by whether
/// the swapped pair is an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionPairs {
    pub fixed: usize,
    pub adjacent_swaps: usize,
    pub nonadjacent_swaps: usize,
}

impl InvolutionPairs {
    pub fn kind(&self) -> InvolutionKind {
        match (self.adjacent_swaps > 0, self.nonadjacent_swaps > 0) {
            (false, false) => InvolutionKind::Trivial,
            (true, false) => InvolutionKind::OnlyAdjacent,
            (false, true) => InvolutionKind::OnlyNonAdjacent,
            (true, true) => InvolutionKind::Mixed,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InvolutionKind {
    Trivial,
    OnlyAdjacent,
    OnlyNonAdjacent,
    Mixed,
}

impl fmt::Display for InvolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvolutionKind::Trivial => "trivial",
            InvolutionKind::OnlyAdjacent => "only-adjacent",
            InvolutionKind::OnlyNonAdjacent => "only-non-adjacent",
            InvolutionKind::Mixed => "mixed",
        })
    }
}

pub fn classify_involution_pairs(
    g: &Graph,
    sigma: &Permutation,
) -> Result<InvolutionPairs, GraphError> {
    g.check_perm(sigma)?;
    if !sigma.is_involution() {
        return Err(GraphError::NotAnInvolution);
    }
    let mut counts = InvolutionPairs {
        fixed: 0,
        adjacent_swaps: 0,
        nonadjacent_swaps: 0,
    };
    for u in 0..g.vertex_count() {
        let w = sigma.apply(u);
        if w == u {
            counts.fixed += 1;
        } else if u < w {
            if g.has_edge(u, w) {
                counts.adjacent_swaps += 1;
            } else {
                counts.nonadjacent_swaps += 1;
            }
        }
    }
    Ok(counts)
}

/// Dual Seidel switching `M ↦ PM` for an involutive automorphism that swaps
/// only non-adjacent vertices.
///
/// `g` must be strongly regular with `k ≠ µ` and `λ ≠ µ`, or a non-strongly
/// regular Deza graph whose two counts differ from `k` (as for `Γ[K2]`).
/// Row `u` of the result is row `σ(u)` of `g`. The result is also checked
/// vertex by vertex against the neighbourhood rule `Δ(u) = Γ(σ(u))` for moved
/// `u` and `Δ(u) = Γ(u)` for fixed `u`.
pub fn dual_seidel_switch(g: &Graph, sigma: &Permutation) -> Result<Graph, GraphError> {
    match certify_srg(g) {
        Ok(cert) => check_switching_parameters(&cert)?,
        Err(srg_failure) => {
            let deza = certify_deza(g).map_err(|f| {
                GraphError::SwitchingInapplicable(format!(
                    "graph is neither strongly regular ({srg_failure}) nor Deza ({f})"
                ))
            })?;
            if deza.k == deza.b || deza.k == deza.a {
                return Err(GraphError::SwitchingInapplicable(format!(
                    "degree {} equals a common-neighbour count",
                    deza.k
                )));
            }
        }
    }
    let pairs = classify_involution_pairs(g, sigma).map_err(|e| match e {
        GraphError::NotAnInvolution => {
            GraphError::SwitchingInapplicable("permutation is not a non-identity involution".into())
        }
        other => other,
    })?;
    if let Some((u, w)) = automorphism_violation(g, sigma)? {
        return Err(GraphError::SwitchingInapplicable(format!(
            "permutation is not an automorphism: edge {{{u},{w}}} is not preserved"
        )));
    }
    if pairs.adjacent_swaps > 0 {
        return Err(GraphError::SwitchingInapplicable(format!(
            "involution swaps {} adjacent pairs",
            pairs.adjacent_swaps
        )));
    }
    let switched = g.switch_rows(sigma)?;
    for u in 0..g.vertex_count() {
        let expected = if sigma.apply(u) == u {
            u
        } else {
            sigma.apply(u)
        };
        assert_eq!(
            switched.row(u),
            g.row(expected),
            "neighbourhood rule violated at vertex {u}"
        );
    }
    Ok(switched.with_label(match g.label() {
        Some(l) => format!("switch({l})"),
        None => "switched".to_string(),
    }))
}

fn check_switching_parameters(cert: &SrgCertificate) -> Result<(), GraphError> {
    if cert.k == cert.mu {
        return Err(GraphError::SwitchingInapplicable(format!(
            "k = mu = {}",
            cert.k
        )));
    }
    if cert.lambda == cert.mu {
        return Err(GraphError::SwitchingInapplicable(format!(
            "lambda = mu = {}",
            cert.mu
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::certify_deza;
    use crate::gf3::{m11, Gf3Matrix};
    use crate::perm::perm_from_matrix;

    fn gamma() -> Graph {
        cayley(5, &m11::s1()).unwrap()
    }

    fn phi() -> Permutation {
        perm_from_matrix(&m11::x()).unwrap()
    }

    #[test]
    fn cayley_graphs() {
        let g = gamma();
        assert_eq!(g.vertex_count(), 243);
        assert_eq!(g.regular_degree(), Some(22));
        assert_eq!(g.edge_count(), 2673);
        assert!(g.is_symmetric_and_loop_free());
        let s = ConnectionSet::symmetric(1, [GfVector::from_digits("1").unwrap()]).unwrap();
        assert_eq!(cayley(1, &s).unwrap(), Graph::complete(3));
    }

    #[test]
    fn complement_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.complement().edge_count(), 0);
        let g = gamma();
        assert_eq!(g.complement().complement(), g);
        assert_eq!(g.complement().regular_degree(), Some(220));
    }

    #[test]
    fn strong_product_examples() {
        let k1 = Graph::empty(1).unwrap();
        let p = strong_product_k2(&k1);
        assert_eq!(p.vertex_count(), 2);
        assert!(p.has_edge(0, 1));
        let g = gamma();
        let p = strong_product_k2(&g);
        assert_eq!(p.regular_degree(), Some(45));
        // Four edges per base edge plus one per vertex.
        assert_eq!(p.edge_count(), 4 * g.edge_count() + g.vertex_count());
        let direct = (0..486)
            .flat_map(|a| (a + 1..486).map(move |b| (a, b)))
            .filter(|&(a, b)| a / 2 == b / 2 || g.has_edge(a / 2, b / 2))
            .count();
        assert_eq!(p.edge_count(), direct);
    }

    #[test]
    fn automorphism_checks() {
        let g = gamma();
        assert!(is_automorphism(&g, &phi()).unwrap());
        // A transposition of an adjacent pair moves the other neighbours around.
        let (u, w) = g.edges().next().unwrap();
        assert!(!is_automorphism(&g, &Permutation::transposition(243, u, w)).unwrap());
        let (a, b) = (1, 100);
        assert!(!g.has_edge(a, b));
        assert!(!is_automorphism(&g, &Permutation::transposition(243, a, b)).unwrap());
        assert!(matches!(
            is_automorphism(&g, &Permutation::identity(10)),
            Err(GraphError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn involution_classification() {
        let g = gamma();
        let minus_e = perm_from_matrix(&Gf3Matrix::identity(5).neg()).unwrap();
        let c = classify_involution_pairs(&g, &minus_e).unwrap();
        assert_eq!(c.fixed, 1);
        assert!(c.adjacent_swaps > 0 && c.nonadjacent_swaps > 0);
        let c = classify_involution_pairs(&g, &phi()).unwrap();
        assert_eq!(
            c,
            InvolutionPairs {
                fixed: 27,
                adjacent_swaps: 0,
                nonadjacent_swaps: 108
            }
        );
        assert_eq!(
            classify_involution_pairs(&g, &Permutation::identity(243)),
            Err(GraphError::NotAnInvolution)
        );
    }

    #[test]
    fn switching_gamma() {
        let g = gamma();
        let d = dual_seidel_switch(&g, &phi()).unwrap();
        assert_eq!(d.regular_degree(), Some(22));
        assert!(d.is_symmetric_and_loop_free());
        // P(PM) = M.
        assert_eq!(d.switch_rows(&phi()).unwrap(), g);
        let cert = certify_deza(&d).unwrap();
        assert_eq!((cert.v, cert.k, cert.b, cert.a), (243, 22, 2, 1));
        assert!(cert.strict);
    }

    #[test]
    fn switching_preconditions() {
        let g = gamma();
        let minus_e = perm_from_matrix(&Gf3Matrix::identity(5).neg()).unwrap();
        let err = dual_seidel_switch(&g, &minus_e).unwrap_err();
        assert!(matches!(err, GraphError::SwitchingInapplicable(ref m) if m.contains("adjacent")));
        let err = dual_seidel_switch(&g, &Permutation::identity(243)).unwrap_err();
        assert!(matches!(err, GraphError::SwitchingInapplicable(_)));
        let err =
            dual_seidel_switch(&Graph::path(4), &Permutation::transposition(4, 0, 3)).unwrap_err();
        assert!(
            matches!(err, GraphError::SwitchingInapplicable(ref m) if m.contains("strongly regular"))
        );
        // K3,3 is SRG(6,3,0,3): k = mu.
        let k33 = Graph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
        let err = dual_seidel_switch(&k33, &Permutation::transposition(6, 0, 1)).unwrap_err();
        assert!(matches!(err, GraphError::SwitchingInapplicable(ref m) if m.contains("k = mu")));
        // A non-automorphism involution.
        let bad = Permutation::transposition(243, 1, 100);
        let err = dual_seidel_switch(&g, &bad).unwrap_err();
        assert!(
            matches!(err, GraphError::SwitchingInapplicable(ref m) if m.contains("automorphism"))
        );
    }

    #[test]
    fn petersen_switching() {
        let p = Graph::petersen();
        let sigma = petersen_involution();
        let c = classify_involution_pairs(&p, &sigma).unwrap();
        assert_eq!(c.adjacent_swaps, 0);
        assert_eq!(c.nonadjacent_swaps, 3);
        let d = dual_seidel_switch(&p, &sigma).unwrap();
        let cert = certify_deza(&d).unwrap();
        assert_eq!((cert.b, cert.a), (1, 0));
        assert!(!cert.strongly_regular);
        // Six non-adjacent pairs share no neighbour: diameter 3, so the
        // result is Deza but not strictly Deza.
        assert_eq!(cert.diameter, crate::certify::Diameter::Finite(3));
        assert!(!cert.strict);
    }

    #[test]
    fn lifting() {
        let id = Permutation::identity(5);
        assert!(lift_involution_to_product(&id).is_identity());
        let lifted = lift_involution_to_product(&phi());
        assert_eq!(lifted.fixed_points(), 54);
        let p = strong_product_k2(&gamma());
        assert!(is_automorphism(&p, &lifted).unwrap());
        assert_eq!(
            classify_involution_pairs(&p, &lifted)
                .unwrap()
                .adjacent_swaps,
            0
        );
        let switched = dual_seidel_switch(&p, &lifted).unwrap();
        let cert = certify_deza(&switched).unwrap();
        assert_eq!(cert.parameters(), (486, 45, 44, 4));
        assert!(cert.strict);
        assert_ne!(switched, p);
    }
}
