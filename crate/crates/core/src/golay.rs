//! The ternary Golay code, its coset graph, and the reversal involution.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::gf3::{pow3, ConnectionSet, Gf3Error, Gf3Matrix, GfVector};
use crate::graph::{Graph, GraphError};
use crate::perm::Permutation;

const H_ROWS: [[u8; 11]; 5] = [
    [1, 1, 1, 2, 2, 0, 1, 0, 0, 0, 0],
    [1, 1, 2, 1, 0, 2, 0, 1, 0, 0, 0],
    [1, 2, 1, 0, 1, 2, 0, 0, 1, 0, 0],
    [1, 2, 0, 1, 2, 1, 0, 0, 0, 1, 0],
    [1, 0, 2, 2, 1, 1, 0, 0, 0, 0, 1],
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error(
        "parity-check matrix has rank {rank} < {rows} rows; the code has dimension {dimension}"
    )]
    RankDeficient {
        rows: usize,
        rank: usize,
        dimension: usize,
    },
    #[error("signed columns collide: {0}")]
    DuplicateColumn(GfVector),
    #[error("code is too large to enumerate (dimension {0})")]
    TooLarge(usize),
    #[error(transparent)]
    Gf3(#[from] Gf3Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The 5×11 parity-check matrix of the ternary Golay code.
pub fn parity_check_h() -> Gf3Matrix {
    Gf3Matrix::from_rows(&H_ROWS).expect("entries are field elements")
}

/// A linear code given by a full-rank parity-check matrix, with every
/// codeword materialized.
#[derive(Clone, Debug)]
pub struct LinearCode {
    parity_check: Gf3Matrix,
    codewords: Vec<GfVector>,
}

impl LinearCode {
    pub fn length(&self) -> usize {
        self.parity_check.cols()
    }

    pub fn dimension(&self) -> usize {
        self.length() - self.parity_check.rank()
    }

    pub fn parity_check(&self) -> &Gf3Matrix {
        &self.parity_check
    }

    /// Sorted by vertex index.
    pub fn codewords(&self) -> &[GfVector] {
        &self.codewords
    }

    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }

    pub fn contains(&self, v: &GfVector) -> bool {
        self.parity_check.mul_column(v).is_ok_and(|s| s.is_zero())
    }

    pub fn syndrome(&self, v: &GfVector) -> Result<GfVector, Gf3Error> {
        self.parity_check.mul_column(v)
    }

    /// Smallest nonzero weight, by exhaustive scan.
    pub fn minimum_distance(&self) -> Option<usize> {
        self.codewords
            .iter()
            .filter(|c| !c.is_zero())
            .map(GfVector::weight)
            .min()
    }

    pub fn weight_distribution(&self) -> Vec<usize> {
        let mut dist = vec![0; self.length() + 1];
        for c in &self.codewords {
            dist[c.weight()] += 1;
        }
        dist
    }

    /// Codewords as ternary digit strings, one per line.
    pub fn export(&self) -> String {
        let mut out = String::with_capacity(self.codewords.len() * (self.length() + 1));
        for c in &self.codewords {
            out.extend(c.coords().iter().map(|&d| char::from(b'0' + d)));
            out.push('\n');
        }
        out
    }
}

/// Enumerates the kernel of `h` by spanning a basis of its null space.
pub fn code_from_parity_check(h: &Gf3Matrix) -> Result<LinearCode, CodeError> {
    let rank = h.rank();
    if rank < h.rows() {
        return Err(CodeError::RankDeficient {
            rows: h.rows(),
            rank,
            dimension: h.cols() - rank,
        });
    }
    let basis = h.kernel_basis();
    if basis.len() > 16 {
        return Err(CodeError::TooLarge(basis.len()));
    }
    let mut words = Vec::with_capacity(pow3(basis.len()));
    for k in 0..pow3(basis.len()) {
        let coeffs = GfVector::from_index(k, basis.len())?;
        let mut w = GfVector::zero(h.cols());
        for (b, &c) in basis.iter().zip(coeffs.coords()) {
            w = w.add(&b.scale(c));
        }
        words.push(w);
    }
    words.sort_by_key(GfVector::index);
    Ok(LinearCode {
        parity_check: h.clone(),
        codewords: words,
    })
}

/// The signed columns ±x_i of `h`; every one must be distinct.
pub fn signed_columns(h: &Gf3Matrix) -> Result<ConnectionSet, CodeError> {
    let mut seen = BTreeSet::new();
    for j in 0..h.cols() {
        let c = h.column(j);
        for v in [c.clone(), c.neg()] {
            if v.is_zero() || !seen.insert(v.clone()) {
                return Err(CodeError::DuplicateColumn(v));
            }
        }
    }
    Ok(ConnectionSet::new(h.rows(), seen)?)
}

/// S2 = {±x_1, …, ±x_11}.
pub fn connection_set_s2() -> ConnectionSet {
    signed_columns(&parity_check_h()).expect("the Golay columns are distinct")
}

/// Whether the 2-sums ±x_i ± x_j (i < j) of the columns behind `s` are
/// distinct and nonzero, and together with `s` cover every nonzero vector.
pub fn pair_sums_cover(s: &ConnectionSet) -> bool {
    // One representative per ± pair: the lexicographically smaller.
    let columns: Vec<&GfVector> = s.iter().filter(|v| *v < &v.neg()).collect();
    let mut sums = BTreeSet::new();
    let mut expected = 0;
    for i in 0..columns.len() {
        for j in i + 1..columns.len() {
            for a in [columns[i].clone(), columns[i].neg()] {
                for b in [columns[j].clone(), columns[j].neg()] {
                    expected += 1;
                    let v = a.add(&b);
                    if v.is_zero() || s.contains(&v) || !sums.insert(v) {
                        return false;
                    }
                }
            }
        }
    }
    sums.len() == expected && sums.len() + s.len() == pow3(s.dim()) - 1
}

/// Coset graph: vertices are syndromes, identified with V(5,3) by the shared
/// codec; two cosets are adjacent when they differ by the syndrome of a
/// weight-1 word.
pub fn coset_graph(code: &LinearCode) -> Result<Graph, CodeError> {
    let h = code.parity_check();
    let r = h.rows();
    let mut steps = BTreeSet::new();
    for i in 0..code.length() {
        for a in [1, 2] {
            steps.insert(code.syndrome(&GfVector::unit(code.length(), i).scale(a))?);
        }
    }
    let n = pow3(r);
    let mut edges = Vec::new();
    for u in 0..n {
        let su = GfVector::from_index(u, r)?;
        for step in &steps {
            let w = su.add(step).index();
            if u < w {
                edges.push((u, w));
            }
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}

/// (a,b,c,d,e) ↦ (e,d,c,b,a) on vertex indices of V(5,3).
pub fn reversal_perm() -> Permutation {
    Permutation::from_fn(pow3(5), |i| {
        GfVector::from_index(i, 5)
            .expect("in range")
            .reversed()
            .index()
    })
    .expect("reversal is a bijection")
}

/// Whether some vector of `s` has the shape (p, q, 0, −q, −p).
pub fn has_antipalindromic_vector(s: &ConnectionSet) -> bool {
    s.iter().any(|v| {
        let c = v.coords();
        c.len() == 5
            && c[2] == 0
            && crate::gf3::add(c[0], c[4]) == 0
            && crate::gf3::add(c[1], c[3]) == 0
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct GolaySummary {
    pub codewords: usize,
    pub dimension: usize,
    pub minimum_distance: Option<usize>,
    pub weight_distribution: Vec<usize>,
    pub s2_size: usize,
    pub pair_sums_cover: bool,
    pub s2_reversal_closed: bool,
}

pub fn summary() -> Result<GolaySummary, CodeError> {
    let code = code_from_parity_check(&parity_check_h())?;
    let s2 = connection_set_s2();
    let reversed: BTreeSet<GfVector> = s2.iter().map(GfVector::reversed).collect();
    Ok(GolaySummary {
        codewords: code.len(),
        dimension: code.dimension(),
        minimum_distance: code.minimum_distance(),
        weight_distribution: code.weight_distribution(),
        s2_size: s2.len(),
        pair_sums_cover: pair_sums_cover(&s2),
        s2_reversal_closed: &reversed == s2.vectors(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::certify_srg;
    use crate::graph::{cayley, classify_involution_pairs};

    #[test]
    fn matrix_entries() {
        let h = parity_check_h();
        assert_eq!(h.column(0), GfVector::from_digits("11111").unwrap());
        assert_eq!(h.column(6), GfVector::from_digits("10000").unwrap());
        assert_eq!(h.rank(), 5);
    }

    #[test]
    fn golay_code() {
        let code = code_from_parity_check(&parity_check_h()).unwrap();
        assert_eq!(code.len(), 729);
        assert_eq!(code.dimension(), 6);
        assert!(code.codewords().contains(&GfVector::zero(11)));
        assert_eq!(code.minimum_distance(), Some(5));
        // Closure, and every codeword has zero syndrome.
        for a in code.codewords().iter().step_by(37) {
            assert!(code.contains(&a.neg()));
            for b in code.codewords().iter().step_by(53) {
                assert!(code.contains(&a.add(b)));
            }
        }
        // Exactly 729 of the 3^11 words are codewords.
        let members = (0..pow3(11))
            .filter(|&i| code.contains(&GfVector::from_index(i, 11).unwrap()))
            .count();
        assert_eq!(members, 729);
        // Known weight enumerator of the ternary Golay code.
        let dist = code.weight_distribution();
        assert_eq!(
            (dist[0], dist[5], dist[6], dist[8], dist[9], dist[11]),
            (1, 132, 132, 330, 110, 24)
        );
        assert_eq!(code.export().lines().count(), 729);
    }

    #[test]
    fn rank_deficient_reports_dimension() {
        let m = Gf3Matrix::from_rows(&[[1, 1, 0], [2, 2, 0]]).unwrap();
        assert_eq!(
            code_from_parity_check(&m).unwrap_err(),
            CodeError::RankDeficient {
                rows: 2,
                rank: 1,
                dimension: 2
            }
        );
    }

    #[test]
    fn s2_properties() {
        let s2 = connection_set_s2();
        assert_eq!(s2.len(), 22);
        assert!(s2.contains(&GfVector::from_digits("10000").unwrap()));
        assert!(s2.contains(&GfVector::from_digits("20000").unwrap()));
        let reversed: BTreeSet<GfVector> = s2.iter().map(GfVector::reversed).collect();
        assert_eq!(&reversed, s2.vectors());
        assert!(pair_sums_cover(&s2));
        assert!(!has_antipalindromic_vector(&s2));
    }

    #[test]
    fn corrupted_column_breaks_cover() {
        let mut rows = H_ROWS;
        rows[0][0] = 0;
        let s = signed_columns(&Gf3Matrix::from_rows(&rows).unwrap()).unwrap();
        assert!(!pair_sums_cover(&s));
        rows[0][0] = 1;
        for row in rows.iter_mut() {
            row[1] = 2;
        }
        assert!(matches!(
            signed_columns(&Gf3Matrix::from_rows(&rows).unwrap()),
            Err(CodeError::DuplicateColumn(_))
        ));
    }

    #[test]
    fn coset_graph_is_the_cayley_graph() {
        let code = code_from_parity_check(&parity_check_h()).unwrap();
        let cg = coset_graph(&code).unwrap();
        let cay = cayley(5, &connection_set_s2()).unwrap();
        assert_eq!(cg, cay);
        assert_eq!(cg.edge_count(), 2673);
        let srg = certify_srg(&cg).unwrap();
        assert_eq!((srg.v, srg.k, srg.lambda, srg.mu), (243, 22, 1, 2));
    }

    #[test]
    fn reversal() {
        let r = reversal_perm();
        assert!(r.is_involution());
        assert_eq!(r.fixed_points(), 27);
        let v = GfVector::from_digits("12021").unwrap();
        let d = v.sub(&v.reversed());
        let c = d.coords();
        assert_eq!(c[2], 0);
        assert_eq!(crate::gf3::add(c[0], c[4]), 0);
        assert_eq!(crate::gf3::add(c[1], c[3]), 0);
        let g = cayley(5, &connection_set_s2()).unwrap();
        let pairs = classify_involution_pairs(&g, &r).unwrap();
        assert_eq!(pairs.adjacent_swaps, 0);
        assert_eq!(pairs.nonadjacent_swaps, 108);
    }
}
