//! The Mathieu group M11 as 5×5 matrices over GF(3) (ATLAS of Group
//! Representations generators) and its 22-point orbit on V(5,3).

use super::{orbit, ConnectionSet, Gf3Error, Gf3Matrix, GfVector};

const X: [[u8; 5]; 5] = [
    [0, 2, 1, 0, 0],
    [2, 1, 1, 2, 2],
    [0, 1, 1, 2, 2],
    [1, 0, 2, 2, 1],
    [1, 2, 2, 2, 0],
];

const Y: [[u8; 5]; 5] = [
    [0, 0, 2, 0, 2],
    [1, 1, 2, 2, 0],
    [2, 2, 2, 2, 2],
    [1, 2, 1, 1, 0],
    [2, 2, 0, 2, 1],
];

/// One representative of each ± pair of the 22-element orbit.
const S1_HALF: [[u8; 5]; 11] = [
    [1, 0, 0, 0, 0],
    [0, 0, 1, 0, 1],
    [0, 1, 0, 1, 0],
    [0, 1, 2, 0, 0],
    [0, 0, 1, 2, 1],
    [0, 1, 0, 1, 2],
    [1, 1, 2, 0, 2],
    [1, 0, 0, 1, 2],
    [1, 0, 2, 1, 0],
    [1, 1, 0, 0, 2],
    [1, 1, 2, 1, 0],
];

/// The involution generator.
pub fn x() -> Gf3Matrix {
    Gf3Matrix::from_rows(&X).expect("embedded matrix is valid")
}

pub fn y() -> Gf3Matrix {
    Gf3Matrix::from_rows(&Y).expect("embedded matrix is valid")
}

pub fn generators() -> [Gf3Matrix; 2] {
    [x(), y()]
}

pub fn s1() -> ConnectionSet {
    s1_from_half(&S1_HALF)
}

#[cfg(test)]
pub(crate) fn s1_half() -> Vec<GfVector> {
    S1_HALF.iter().map(|r| GfVector(r.to_vec())).collect()
}

fn s1_from_half(half: &[[u8; 5]]) -> ConnectionSet {
    ConnectionSet::symmetric(5, half.iter().map(|r| GfVector(r.to_vec())))
        .expect("embedded connection set is valid")
}

/// Confirms that the orbit of (1,0,0,0,0) under `v ↦ v·g` is exactly the
/// embedded 22-element set, which pins down the row-vector convention.
pub fn self_check() -> Result<(), Gf3Error> {
    let seed = GfVector::unit(5, 0);
    let o = orbit(&generators(), &seed)?;
    if &o != s1().vectors() {
        return Err(Gf3Error::PresentationMismatch { seed });
    }
    Ok(())
}
