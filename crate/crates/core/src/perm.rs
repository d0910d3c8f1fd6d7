//! Vertex permutations and exact group orders via a stabilizer chain.
//!
//! Composition is left-to-right: `a.then(&b)` first applies `a`, then `b`.
//! This matches the right action of matrices on row vectors, so
//! `perm_from_matrix(A·B) == perm_from_matrix(A).then(&perm_from_matrix(B))`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::gf3::{pow3, Gf3Matrix, GfVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("image array is not a bijection on 0..{degree}: {reason}")]
    NotABijection { degree: usize, reason: String },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("matrix is not an invertible square matrix, so it does not permute V(n,3)")]
    SingularMatrix,
}

/// A bijection of `0..degree`; `images[i]` is the image of point `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for (i, &img) in images.iter().enumerate() {
            if img >= degree {
                return Err(PermError::NotABijection {
                    degree,
                    reason: format!("image of {i} is {img}"),
                });
            }
            if std::mem::replace(&mut seen[img], true) {
                return Err(PermError::NotABijection {
                    degree,
                    reason: format!("{img} is hit twice"),
                });
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from an image function.
    pub fn from_fn(degree: usize, f: impl Fn(usize) -> usize) -> Result<Self, PermError> {
        Self::from_images((0..degree).map(f).collect())
    }

    /// A single 2-cycle `(a b)`.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..degree).collect();
        images.swap(a, b);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self` followed by `other`. Degrees must agree.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        check_degree(self, other)?;
        Ok(self.then(other))
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// True iff the permutation has order exactly 2.
    pub fn is_involution(&self) -> bool {
        !self.is_identity()
            && self
                .images
                .iter()
                .enumerate()
                .all(|(i, &img)| self.images[img] == i)
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &img)| *i == img)
            .count()
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .position(|(i, &img)| i != img)
    }

    /// Element order, as the lcm of cycle lengths.
    pub fn order(&self) -> BigUint {
        let mut seen = vec![false; self.degree()];
        let mut order = BigUint::one();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p];
                len += 1;
            }
            order = num_integer_lcm(&order, &BigUint::from(len));
        }
        order
    }
}

fn num_integer_lcm(a: &BigUint, b: &BigUint) -> BigUint {
    use num_integer::Integer;
    a.lcm(b)
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Cycle notation without fixed points.
        let mut seen = vec![false; self.degree()];
        let mut wrote = false;
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
                first = false;
                p = self.images[p];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = PermError;

    fn try_from(images: Vec<usize>) -> Result<Self, Self::Error> {
        Permutation::from_images(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

fn check_degree(a: &Permutation, b: &Permutation) -> Result<(), PermError> {
    if a.degree() != b.degree() {
        return Err(PermError::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(())
}

pub fn compose(a: &Permutation, b: &Permutation) -> Result<Permutation, PermError> {
    a.compose(b)
}

pub fn inverse(a: &Permutation) -> Permutation {
    a.inverse()
}

pub fn is_involution(a: &Permutation) -> bool {
    a.is_involution()
}

/// The permutation of vertex indices realising `v ↦ v·m`.
pub fn perm_from_matrix(m: &Gf3Matrix) -> Result<Permutation, PermError> {
    if !m.is_invertible() {
        return Err(PermError::SingularMatrix);
    }
    let dim = m.rows();
    Permutation::from_fn(pow3(dim), |i| {
        GfVector::from_index(i, dim)
            .and_then(|v| v.mul_matrix(m))
            .expect("index in range and shapes agree")
            .index()
    })
}

/// The permutation `v ↦ v + t`.
pub fn translation_perm(t: &GfVector) -> Permutation {
    let dim = t.dim();
    Permutation::from_fn(pow3(dim), |i| {
        GfVector::from_index(i, dim)
            .expect("index in range")
            .add(t)
            .index()
    })
    .expect("translations are bijections")
}

/// Exact order of a permutation group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupOrder(pub BigUint);

impl GroupOrder {
    pub fn one() -> Self {
        GroupOrder(BigUint::one())
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn divides(&self, other: &GroupOrder) -> bool {
        use num_traits::Zero;
        (&other.0 % &self.0).is_zero()
    }
}

impl fmt::Display for GroupOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u64> for GroupOrder {
    fn from(n: u64) -> Self {
        GroupOrder(BigUint::from(n))
    }
}

impl Serialize for GroupOrder {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.to_u64() {
            Some(n) => serializer.serialize_u64(n),
            None => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    generators: Vec<Permutation>,
    orbit: Vec<usize>,
    // transversal[b] maps the base point to b; inverse_transversal is its inverse.
    transversal: Vec<Option<Permutation>>,
    inverse_transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(degree: usize, base_point: usize) -> Self {
        let mut transversal = vec![None; degree];
        let mut inverse_transversal = vec![None; degree];
        transversal[base_point] = Some(Permutation::identity(degree));
        inverse_transversal[base_point] = Some(Permutation::identity(degree));
        Level {
            base_point,
            generators: Vec::new(),
            orbit: vec![base_point],
            transversal,
            inverse_transversal,
        }
    }
}

/// Stabilizer chain built by incremental Schreier–Sims.
///
/// Level `k` holds generators of the pointwise stabilizer of the first `k`
/// base points, the orbit of base point `k` under them, and a transversal.
/// Base points are taken from the optional prescribed prefix and then, as
/// needed, as the first point moved by a generator that fixes all current
/// base points.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(degree: usize) -> Self {
        StabilizerChain {
            degree,
            levels: Vec::new(),
        }
    }

    /// A chain whose first base points are `base`, in order.
    pub fn with_base(degree: usize, base: &[usize]) -> Self {
        StabilizerChain {
            degree,
            levels: base.iter().map(|&b| Level::new(degree, b)).collect(),
        }
    }

    pub fn from_generators(degree: usize, generators: &[Permutation]) -> Result<Self, PermError> {
        let mut chain = Self::new(degree);
        for g in generators {
            chain.add_generator(g)?;
        }
        Ok(chain)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// Fundamental orbit at `level`; empty past the end of the chain.
    pub fn orbit(&self, level: usize) -> &[usize] {
        self.levels.get(level).map_or(&[], |l| &l.orbit)
    }

    pub fn in_orbit(&self, level: usize, point: usize) -> bool {
        match self.levels.get(level) {
            Some(l) => l.transversal[point].is_some(),
            None => false,
        }
    }

    /// All generators stored anywhere in the chain (a strong generating set).
    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.levels
            .iter()
            .flat_map(|l| l.generators.iter().cloned())
            .collect()
    }

    pub fn order(&self) -> GroupOrder {
        GroupOrder(
            self.levels
                .iter()
                .map(|l| BigUint::from(l.orbit.len()))
                .product(),
        )
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(0, g).is_identity()
    }

    /// Adds `g`; returns whether the group grew.
    pub fn add_generator(&mut self, g: &Permutation) -> Result<bool, PermError> {
        if g.degree() != self.degree {
            return Err(PermError::DegreeMismatch {
                left: self.degree,
                right: g.degree(),
            });
        }
        Ok(self.extend(0, g.clone()))
    }

    fn sift(&self, from: usize, g: &Permutation) -> Permutation {
        let mut h = g.clone();
        for level in &self.levels[from.min(self.levels.len())..] {
            let b = h.apply(level.base_point);
            match &level.inverse_transversal[b] {
                Some(u_inv) => h = h.then(u_inv),
                None => return h,
            }
        }
        h
    }

    // `g` fixes the first `k` base points.
    fn extend(&mut self, k: usize, g: Permutation) -> bool {
        if self.sift(k, &g).is_identity() {
            return false;
        }
        if k == self.levels.len() {
            let b = g.first_moved_point().expect("non-identity residue");
            self.levels.push(Level::new(self.degree, b));
        }
        self.levels[k].generators.push(g);
        let new_gen = self.levels[k].generators.len() - 1;
        let mut pending: Vec<(usize, usize)> =
            self.levels[k].orbit.iter().map(|&b| (b, new_gen)).collect();
        while let Some((b, gi)) = pending.pop() {
            let level = &mut self.levels[k];
            let s = &level.generators[gi];
            let c = s.apply(b);
            let u_b_s = level.transversal[b].as_ref().expect("orbit point").then(s);
            if level.transversal[c].is_none() {
                level.inverse_transversal[c] = Some(u_b_s.inverse());
                level.transversal[c] = Some(u_b_s);
                level.orbit.push(c);
                pending.extend((0..level.generators.len()).map(|j| (c, j)));
            } else {
                let schreier =
                    u_b_s.then(level.inverse_transversal[c].as_ref().expect("orbit point"));
                if !schreier.is_identity() {
                    self.extend(k + 1, schreier);
                }
            }
        }
        true
    }
}

/// Order of the group generated by `generators`. An empty list gives 1.
pub fn group_order(generators: &[Permutation]) -> Result<GroupOrder, PermError> {
    let Some(first) = generators.first() else {
        return Ok(GroupOrder::one());
    };
    for g in generators {
        check_degree(first, g)?;
    }
    Ok(StabilizerChain::from_generators(first.degree(), generators)?.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf3::m11;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cycle(n: usize) -> Permutation {
        Permutation::from_fn(n, |i| (i + 1) % n).unwrap()
    }

    #[test]
    fn bijection_validation() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![0, 2]).is_err());
        assert!(Permutation::from_images(vec![1, 0]).is_ok());
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert_eq!(
            a.compose(&b),
            Err(PermError::DegreeMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn matrix_permutations() {
        let e = Gf3Matrix::identity(5);
        assert!(perm_from_matrix(&e).unwrap().is_identity());
        let minus = perm_from_matrix(&e.neg()).unwrap();
        assert_eq!(minus.apply(0), 0);
        assert_eq!(minus.fixed_points(), 1);
        for i in 1..243 {
            let v = GfVector::from_index(i, 5).unwrap();
            assert_eq!(minus.apply(i), v.neg().index());
        }
        let x = perm_from_matrix(&m11::x()).unwrap();
        assert!(x.is_involution());
        assert_eq!(x.fixed_points(), 27);
        assert_eq!(
            perm_from_matrix(&Gf3Matrix::zeros(5, 5)),
            Err(PermError::SingularMatrix)
        );
    }

    #[test]
    fn translations() {
        assert!(translation_perm(&GfVector::zero(5)).is_identity());
        let t = GfVector::from_digits("01200").unwrap();
        let p = translation_perm(&t);
        assert_eq!(p.fixed_points(), 0);
        assert!(!p.is_involution());
        assert_eq!(p.order(), BigUint::from(3u32));
        assert!(p.then(&translation_perm(&t.neg())).is_identity());
    }

    #[test]
    fn inverse_composes_to_identity() {
        let y = perm_from_matrix(&m11::y()).unwrap();
        assert!(y.then(&y.inverse()).is_identity());
    }

    #[test]
    fn small_group_orders() {
        assert_eq!(group_order(&[]).unwrap(), GroupOrder::one());
        assert_eq!(
            group_order(&[Permutation::transposition(5, 1, 3)]).unwrap(),
            2.into()
        );
        let t = translation_perm(&GfVector::unit(5, 2));
        assert_eq!(group_order(&[t]).unwrap(), 3.into());
        // S_n from an n-cycle and a transposition.
        let s7 = group_order(&[cycle(7), Permutation::transposition(7, 0, 1)]).unwrap();
        assert_eq!(s7, 5040.into());
        // Dihedral group of the 9-gon.
        let refl = Permutation::from_fn(9, |i| (9 - i) % 9).unwrap();
        assert_eq!(group_order(&[cycle(9), refl]).unwrap(), 18.into());
    }

    #[test]
    fn m11_order() {
        let gens: Vec<_> = m11::generators()
            .iter()
            .map(|m| perm_from_matrix(m).unwrap())
            .collect();
        assert_eq!(group_order(&gens).unwrap(), 7920.into());
    }

    #[test]
    fn affine_group_order() {
        let mut gens: Vec<_> = (0..5)
            .map(|i| translation_perm(&GfVector::unit(5, i)))
            .collect();
        gens.extend(
            m11::generators()
                .iter()
                .map(|m| perm_from_matrix(m).unwrap()),
        );
        gens.push(perm_from_matrix(&Gf3Matrix::identity(5).neg()).unwrap());
        assert_eq!(group_order(&gens).unwrap(), 3_849_120.into());
    }

    #[test]
    fn prescribed_base_is_respected() {
        let gens: Vec<_> = m11::generators()
            .iter()
            .map(|m| perm_from_matrix(m).unwrap())
            .collect();
        let mut chain = StabilizerChain::with_base(243, &[5, 17]);
        for g in &gens {
            chain.add_generator(g).unwrap();
        }
        assert_eq!(&chain.base()[..2], &[5, 17]);
        assert_eq!(chain.order(), 7920.into());
        assert!(chain.contains(&gens[0].then(&gens[1])));
        assert!(!chain.contains(&translation_perm(&GfVector::unit(5, 0))));
    }

    #[test]
    fn membership_of_products() {
        let gens: Vec<_> = m11::generators()
            .iter()
            .map(|m| perm_from_matrix(m).unwrap())
            .collect();
        let chain = StabilizerChain::from_generators(243, &gens).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut word = Permutation::identity(243);
        for _ in 0..50 {
            word = word.then(&gens[rng.random_range(0..2)]);
            assert!(chain.contains(&word));
        }
        assert!(!chain.contains(&Permutation::transposition(243, 1, 2)));
    }

    #[test]
    fn order_ignores_generator_order_and_redundancy() {
        let mut gens: Vec<_> = m11::generators()
            .iter()
            .map(|m| perm_from_matrix(m).unwrap())
            .collect();
        gens.push(translation_perm(&GfVector::unit(5, 3)));
        let expected = group_order(&gens).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..4 {
            let mut shuffled = gens.clone();
            shuffled.push(gens[0].then(&gens[2]).then(&gens[1]));
            shuffled.shuffle(&mut rng);
            assert_eq!(group_order(&shuffled).unwrap(), expected);
        }
    }

    fn arb_invertible() -> impl Strategy<Value = Gf3Matrix> {
        proptest::collection::vec(0u8..3, 25)
            .prop_map(|e| Gf3Matrix::new(5, 5, e).unwrap())
            .prop_filter("invertible", Gf3Matrix::is_invertible)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn matrix_action_is_a_homomorphism(a in arb_invertible(), b in arb_invertible()) {
            let ab = perm_from_matrix(&a.mul(&b).unwrap()).unwrap();
            let composed = perm_from_matrix(&a).unwrap().then(&perm_from_matrix(&b).unwrap());
            prop_assert_eq!(ab, composed);
        }
    }
}
