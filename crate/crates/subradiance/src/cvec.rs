//! Small complex-vector helpers shared across modules.

use crate::C64;
use faer::MatRef;

/// Conjugated inner product `<a|b>`.
pub(crate) fn dot(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

pub(crate) fn norm(a: &[C64]) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

pub(crate) fn normalize(a: &mut [C64]) {
    let n = norm(a);
    if n > 0.0 {
        for x in a.iter_mut() {
            *x /= n;
        }
    }
}

/// `y = m * x` for a square or rectangular matrix.
pub(crate) fn mat_vec(m: MatRef<'_, C64>, x: &[C64]) -> Vec<C64> {
    assert_eq!(m.ncols(), x.len());
    let mut y = vec![C64::new(0.0, 0.0); m.nrows()];
    for j in 0..m.ncols() {
        let xj = x[j];
        if xj == C64::new(0.0, 0.0) {
            continue;
        }
        for i in 0..m.nrows() {
            y[i] += m[(i, j)] * xj;
        }
    }
    y
}

/// Column `j` of a matrix as an owned vector.
pub(crate) fn column(m: MatRef<'_, C64>, j: usize) -> Vec<C64> {
    (0..m.nrows()).map(|i| m[(i, j)]).collect()
}

/// Fidelity `|<a|b>|^2` between unit vectors.
pub(crate) fn fidelity(a: &[C64], b: &[C64]) -> f64 {
    dot(a, b).norm_sqr()
}
