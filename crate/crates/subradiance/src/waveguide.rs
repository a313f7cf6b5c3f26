//! Effective Hamiltonians of the waveguide-coupled chain.
//!
//! The one-excitation matrix is
//! `H[m][n] = -(i/2) * Gamma * exp(i * k1d * |z_m - z_n|)`,
//! complex symmetric in the site basis. Its Hermitian components are
//! `H_R[m][n] = (Gamma/2) sin(k1d |z_m - z_n|)` and
//! `H_I[m][n] = (Gamma/2) cos(k1d (z_m - z_n))`; `H_I` is positive
//! semidefinite of rank two, spanned by the two Bloch modes at `+-k1d`.

use crate::sector::{MatrixPart, Sector, SectorBasis, SectorMatrix};
use crate::{ChainConfig, Result, C64, I};
use faer::Mat;

/// One-excitation effective Hamiltonian. Accepts mirror-resonant configs
/// (the matrix itself is regular everywhere); construct the config through
/// [`ChainConfig::waveguide_allow_mirror`] for those.
pub fn build_one_excitation(cfg: &ChainConfig) -> Result<SectorMatrix> {
    let (k1d, gamma) = cfg.require_waveguide()?;
    let z = cfg.positions();
    let n = cfg.n_atoms();
    let pref = -0.5 * gamma * I;
    let h = Mat::from_fn(n, n, |i, j| pref * (I * k1d * (z[i] - z[j]).abs()).exp());
    Ok(SectorMatrix::new(
        SectorBasis::new(Sector::One, n),
        MatrixPart::Full,
        h,
    ))
}

/// Two-excitation effective Hamiltonian, obtained by applying the spin
/// Hamiltonian to `|e_m, e_n>` with the hard-core constraint. Pairs couple
/// only when they share a site; the shared-site element is the one-excitation
/// kernel between the two distinct sites, and the diagonal is the sum of two
/// single-site terms (`-i * Gamma` total).
pub fn build_two_excitation(cfg: &ChainConfig) -> Result<SectorMatrix> {
    let (k1d, gamma) = cfg.require_waveguide()?;
    let n = cfg.n_atoms();
    if n < 2 {
        return Err(crate::Error::Config(
            "two-excitation sector requires n_atoms >= 2".into(),
        ));
    }
    let z = cfg.positions();
    let pref = -0.5 * gamma * I;
    let kernel = |i: usize, j: usize| pref * (I * k1d * (z[i] - z[j]).abs()).exp();

    let basis = SectorBasis::new(Sector::Two, n);
    let dim = basis.dimension();
    let mut h = Mat::<C64>::zeros(dim, dim);
    for (a, (m, nn)) in basis.pairs().enumerate() {
        h[(a, a)] = kernel(m, m) + kernel(nn, nn);
        // one excitation hops m -> i while n stays, or n -> i while m stays
        for i in 0..n {
            if i != m && i != nn {
                let (p, q) = if i < nn { (i, nn) } else { (nn, i) };
                let row = basis.pair_index(p, q);
                h[(row, a)] += kernel(i, m);
                let (p, q) = if i < m { (i, m) } else { (m, i) };
                let row = basis.pair_index(p, q);
                h[(row, a)] += kernel(i, nn);
            }
        }
    }
    Ok(SectorMatrix::new(basis, MatrixPart::Full, h))
}
