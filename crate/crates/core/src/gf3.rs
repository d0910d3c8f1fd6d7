//! Arithmetic over GF(3): vectors of V(n,3), rectangular matrices, and
//! orbits of vectors under groups of matrices acting on the right.
//!
//! Field elements are stored as residues `0..3` in a `u8`; all operations go
//! through small lookup tables. A vector of V(n,3) has a canonical vertex
//! index given by reading its coordinates as a little-endian ternary number:
//!
//! ```text
//! index(v) = v[0] + 3·v[1] + 9·v[2] + ... + 3^(n-1)·v[n-1]
//! ```
//!
//! Every graph built from a vector space uses that index as its vertex label.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub mod m11;

const ADD: [[u8; 3]; 3] = [[0, 1, 2], [1, 2, 0], [2, 0, 1]];
const MUL: [[u8; 3]; 3] = [[0, 0, 0], [0, 1, 2], [0, 2, 1]];
const NEG: [u8; 3] = [0, 2, 1];
// Multiplicative inverse; entry 0 is unused.
const INV: [u8; 3] = [0, 1, 2];

#[inline]
pub fn add(a: u8, b: u8) -> u8 {
    ADD[a as usize][b as usize]
}

#[inline]
pub fn mul(a: u8, b: u8) -> u8 {
    MUL[a as usize][b as usize]
}

#[inline]
pub fn neg(a: u8) -> u8 {
    NEG[a as usize]
}

#[inline]
pub fn sub(a: u8, b: u8) -> u8 {
    add(a, neg(b))
}

/// 3^n, panicking on overflow (only small dimensions make sense here).
pub fn pow3(n: usize) -> usize {
    3usize.checked_pow(n as u32).expect("3^n overflows usize")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Gf3Error {
    #[error("invalid field element {value} at position {position}; expected 0, 1 or 2")]
    InvalidElement { position: usize, value: u8 },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("index {index} is out of range for V({dim},3)")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("connection set contains the zero vector")]
    ContainsZero,
    #[error("connection set is not inverse-closed: {0} is present but its negative is not")]
    NotInverseClosed(GfVector),
    #[error("connection set vector {vector} has dimension {found}, expected {expected}")]
    MixedDimension {
        vector: GfVector,
        expected: usize,
        found: usize,
    },
    #[error("matrix is singular over GF(3)")]
    Singular,
    #[error("orbit of {seed} under the M11 generators does not match the embedded 22-element set")]
    PresentationMismatch { seed: GfVector },
}

/// An element of V(n,3), stored as a row vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct GfVector(Vec<u8>);

impl GfVector {
    pub fn new(coords: Vec<u8>) -> Result<Self, Gf3Error> {
        if let Some((position, &value)) = coords.iter().enumerate().find(|(_, &c)| c > 2) {
            return Err(Gf3Error::InvalidElement { position, value });
        }
        Ok(GfVector(coords))
    }

    pub fn zero(dim: usize) -> Self {
        GfVector(vec![0; dim])
    }

    /// Unit vector with a 1 in coordinate `i`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut coords = vec![0; dim];
        coords[i] = 1;
        GfVector(coords)
    }

    /// Parses a digit string such as `"10000"` or `"0,1,2,0,0"`.
    pub fn from_digits(s: &str) -> Result<Self, Gf3Error> {
        let coords: Vec<u8> = s
            .chars()
            .filter(|c| !matches!(c, ',' | ' ' | '(' | ')'))
            .map(|c| c.to_digit(10).map_or(u8::MAX, |d| d as u8))
            .collect();
        Self::new(coords)
    }

    pub fn from_index(index: usize, dim: usize) -> Result<Self, Gf3Error> {
        if index >= pow3(dim) {
            return Err(Gf3Error::IndexOutOfRange { index, dim });
        }
        let mut coords = Vec::with_capacity(dim);
        let mut rest = index;
        for _ in 0..dim {
            coords.push((rest % 3) as u8);
            rest /= 3;
        }
        Ok(GfVector(coords))
    }

    /// Little-endian ternary index: coordinate 0 is the least significant digit.
    pub fn index(&self) -> usize {
        self.0.iter().rev().fold(0, |acc, &c| acc * 3 + c as usize)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u8] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&c| c != 0).count()
    }

    pub fn add(&self, other: &GfVector) -> GfVector {
        debug_assert_eq!(self.dim(), other.dim());
        GfVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| add(a, b))
                .collect(),
        )
    }

    pub fn sub(&self, other: &GfVector) -> GfVector {
        debug_assert_eq!(self.dim(), other.dim());
        GfVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| sub(a, b))
                .collect(),
        )
    }

    pub fn neg(&self) -> GfVector {
        GfVector(self.0.iter().map(|&a| neg(a)).collect())
    }

    pub fn scale(&self, s: u8) -> GfVector {
        GfVector(self.0.iter().map(|&a| mul(a, s % 3)).collect())
    }

    /// Coordinates in reverse order.
    pub fn reversed(&self) -> GfVector {
        GfVector(self.0.iter().rev().copied().collect())
    }

    /// Row-vector product `self · m`.
    pub fn mul_matrix(&self, m: &Gf3Matrix) -> Result<GfVector, Gf3Error> {
        if self.dim() != m.rows {
            return Err(Gf3Error::Shape(format!(
                "vector of length {} times {}x{} matrix",
                self.dim(),
                m.rows,
                m.cols
            )));
        }
        let mut out = vec![0u8; m.cols];
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = add(*o, mul(c, m.get(i, j)));
            }
        }
        Ok(GfVector(out))
    }
}

impl TryFrom<Vec<u8>> for GfVector {
    type Error = Gf3Error;

    fn try_from(coords: Vec<u8>) -> Result<Self, Self::Error> {
        GfVector::new(coords)
    }
}

impl From<GfVector> for Vec<u8> {
    fn from(v: GfVector) -> Self {
        v.0
    }
}

impl fmt::Display for GfVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for GfVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Encodes a vector as its vertex index.
pub fn vector_to_index(v: &GfVector) -> usize {
    v.index()
}

pub fn index_to_vector(index: usize, dim: usize) -> Result<GfVector, Gf3Error> {
    GfVector::from_index(index, dim)
}

/// Dense row-major matrix over GF(3).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Gf3Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<u8>,
}

impl Gf3Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<u8>) -> Result<Self, Gf3Error> {
        if entries.len() != rows * cols {
            return Err(Gf3Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some((position, &value)) = entries.iter().enumerate().find(|(_, &c)| c > 2) {
            return Err(Gf3Error::InvalidElement { position, value });
        }
        Ok(Gf3Matrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows<const C: usize>(rows: &[[u8; C]]) -> Result<Self, Gf3Error> {
        let entries = rows.iter().flatten().copied().collect();
        Self::new(rows.len(), C, entries)
    }

    /// Stacks vectors as the rows of a matrix.
    pub fn from_vectors(vectors: &[GfVector]) -> Result<Self, Gf3Error> {
        let cols = vectors.first().map_or(0, GfVector::dim);
        if let Some(v) = vectors.iter().find(|v| v.dim() != cols) {
            return Err(Gf3Error::Shape(format!("row {v} has length != {cols}")));
        }
        let entries = vectors.iter().flat_map(|v| v.0.iter().copied()).collect();
        Self::new(vectors.len(), cols, entries)
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Gf3Matrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf3Matrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.cols + j]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, value: u8) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> GfVector {
        GfVector(self.entries[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> GfVector {
        GfVector((0..self.rows).map(|i| self.get(i, j)).collect())
    }

    pub fn neg(&self) -> Gf3Matrix {
        Gf3Matrix {
            entries: self.entries.iter().map(|&a| neg(a)).collect(),
            ..*self
        }
    }

    pub fn sub(&self, other: &Gf3Matrix) -> Result<Gf3Matrix, Gf3Error> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Gf3Error::Shape(format!(
                "{}x{} minus {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Gf3Matrix {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| sub(a, b))
                .collect(),
            ..*self
        })
    }

    pub fn transpose(&self) -> Gf3Matrix {
        let mut t = Gf3Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Gf3Matrix) -> Result<Gf3Matrix, Gf3Error> {
        if self.cols != other.rows {
            return Err(Gf3Error::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Gf3Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, add(cur, mul(a, other.get(l, j))));
                }
            }
        }
        Ok(out)
    }

    /// Column-vector product `self · vᵀ`, returned as a vector.
    pub fn mul_column(&self, v: &GfVector) -> Result<GfVector, Gf3Error> {
        if v.dim() != self.cols {
            return Err(Gf3Error::Shape(format!(
                "{}x{} matrix times column of length {}",
                self.rows,
                self.cols,
                v.dim()
            )));
        }
        Ok(GfVector(
            (0..self.rows)
                .map(|i| {
                    v.0.iter()
                        .enumerate()
                        .fold(0, |acc, (j, &c)| add(acc, mul(self.get(i, j), c)))
                })
                .collect(),
        ))
    }

    /// Reduced row echelon form and the list of pivot columns.
    pub fn row_reduce(&self) -> (Gf3Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    let tmp = m.get(p, j);
                    m.set(p, j, m.get(r, j));
                    m.set(r, j, tmp);
                }
            }
            let inv = INV[m.get(r, c) as usize];
            for j in 0..m.cols {
                let val = mul(m.get(r, j), inv);
                m.set(r, j, val);
            }
            for i in 0..m.rows {
                let factor = m.get(i, c);
                if i == r || factor == 0 {
                    continue;
                }
                for j in 0..m.cols {
                    let val = sub(m.get(i, j), mul(factor, m.get(r, j)));
                    m.set(i, j, val);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().1.len()
    }

    /// Basis of the right null space `{ c : self · cᵀ = 0 }`.
    pub fn kernel_basis(&self) -> Vec<GfVector> {
        let (rref, pivots) = self.row_reduce();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut coords = vec![0u8; self.cols];
                coords[f] = 1;
                for (r, &p) in pivots.iter().enumerate() {
                    coords[p] = neg(rref.get(r, f));
                }
                GfVector(coords)
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Gf3Matrix, Gf3Error> {
        if !self.is_square() {
            return Err(Gf3Error::Shape(format!(
                "inverse of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut aug = Gf3Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let (rref, pivots) = aug.row_reduce();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Gf3Error::Singular);
        }
        let mut inv = Gf3Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, rref.get(i, n + j));
            }
        }
        Ok(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Dimension of `{ v : v·M = v }`, i.e. `n − rank(M − I)`.
    pub fn fixed_space_dimension(&self) -> Result<usize, Gf3Error> {
        if !self.is_square() {
            return Err(Gf3Error::Shape(format!(
                "fixed space of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let shifted = self.sub(&Gf3Matrix::identity(self.rows))?;
        Ok(self.rows - shifted.rank())
    }
}

impl fmt::Debug for Gf3Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf3Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {}", self.row(i))?;
        }
        write!(f, "]")
    }
}

pub fn mat_vec_mul(v: &GfVector, m: &Gf3Matrix) -> Result<GfVector, Gf3Error> {
    v.mul_matrix(m)
}

pub fn mat_mul(a: &Gf3Matrix, b: &Gf3Matrix) -> Result<Gf3Matrix, Gf3Error> {
    a.mul(b)
}

/// Orbit of `seed` under the group generated by `generators` acting by
/// `v ↦ v·g`. Breadth-first closure; the result is a sorted set.
pub fn orbit(generators: &[Gf3Matrix], seed: &GfVector) -> Result<BTreeSet<GfVector>, Gf3Error> {
    for g in generators {
        if !g.is_square() || g.rows() != seed.dim() {
            return Err(Gf3Error::Shape(format!(
                "generator {}x{} acting on V({},3)",
                g.rows(),
                g.cols(),
                seed.dim()
            )));
        }
    }
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(seed.clone());
    queue.push_back(seed.clone());
    while let Some(v) = queue.pop_front() {
        for g in generators {
            let w = v.mul_matrix(g)?;
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    Ok(seen)
}

/// All orbits on the nonzero vectors of V(n,3), ordered by smallest member.
pub fn nonzero_orbits(
    generators: &[Gf3Matrix],
    dim: usize,
) -> Result<Vec<BTreeSet<GfVector>>, Gf3Error> {
    let total = pow3(dim);
    let mut covered = vec![false; total];
    covered[0] = true;
    let mut orbits = Vec::new();
    for idx in 1..total {
        if covered[idx] {
            continue;
        }
        let o = orbit(generators, &GfVector::from_index(idx, dim)?)?;
        for v in &o {
            covered[v.index()] = true;
        }
        orbits.push(o);
    }
    Ok(orbits)
}

/// Inverse-closed, identity-free subset of V(n,3).
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ConnectionSet {
    dim: usize,
    vectors: BTreeSet<GfVector>,
}

impl ConnectionSet {
    pub fn new(dim: usize, vectors: impl IntoIterator<Item = GfVector>) -> Result<Self, Gf3Error> {
        let vectors: BTreeSet<GfVector> = vectors.into_iter().collect();
        for v in &vectors {
            if v.dim() != dim {
                return Err(Gf3Error::MixedDimension {
                    vector: v.clone(),
                    expected: dim,
                    found: v.dim(),
                });
            }
            if v.is_zero() {
                return Err(Gf3Error::ContainsZero);
            }
        }
        if let Some(v) = vectors.iter().find(|v| !vectors.contains(&v.neg())) {
            return Err(Gf3Error::NotInverseClosed(v.clone()));
        }
        Ok(ConnectionSet { dim, vectors })
    }

    /// Closes `vectors` under negation before validating.
    pub fn symmetric(
        dim: usize,
        vectors: impl IntoIterator<Item = GfVector>,
    ) -> Result<Self, Gf3Error> {
        let mut all = BTreeSet::new();
        for v in vectors {
            all.insert(v.neg());
            all.insert(v);
        }
        Self::new(dim, all)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn contains(&self, v: &GfVector) -> bool {
        self.vectors.contains(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = &GfVector> {
        self.vectors.iter()
    }

    pub fn vectors(&self) -> &BTreeSet<GfVector> {
        &self.vectors
    }

    /// Membership bitmap indexed by vertex index.
    pub fn indicator(&self) -> Vec<bool> {
        let mut mask = vec![false; pow3(self.dim)];
        for v in &self.vectors {
            mask[v.index()] = true;
        }
        mask
    }

    /// Image of the set under `v ↦ v·m`.
    pub fn image(&self, m: &Gf3Matrix) -> Result<BTreeSet<GfVector>, Gf3Error> {
        self.vectors.iter().map(|v| v.mul_matrix(m)).collect()
    }
}
