//! Effective Hamiltonians of the chain coupled to the 3D vacuum field.
//!
//! Two equivalent builds are provided. The closed form contracts the dyadic
//! Green's tensor with the chosen polarization and normalizes so that every
//! diagonal entry is `-i gamma0 / 2`. The integral form superposes
//! waveguide-like kernels `e^{i k |z|}` over real wavenumbers inside the
//! light cone plus evanescent `e^{-k |z|}` kernels, with polarization-
//! dependent weights; both must agree entrywise to quadrature accuracy.

use crate::green::polarized_coupling;
use crate::quadrature::{integrate, integrate_semi_infinite, QuadratureSpec};
use crate::sector::{MatrixPart, Sector, SectorBasis, SectorMatrix};
use crate::{ChainConfig, Polarization, Result, C64, I};
use faer::Mat;
use std::f64::consts::PI;

/// One-excitation Hamiltonian from the closed-form Green's tensor.
/// Off-diagonal entries are `-(3 pi gamma0 / k0) * G_pol(|z_m - z_n|)`;
/// diagonal entries are `-i gamma0 / 2` by the decay-rate normalization.
pub fn build_one_excitation(cfg: &ChainConfig) -> Result<SectorMatrix> {
    let (k0, gamma0, pol) = cfg.require_free_space()?;
    let z = cfg.positions();
    let n = cfg.n_atoms();
    let pref = -3.0 * PI * gamma0 / k0;
    let h = Mat::from_fn(n, n, |i, j| {
        if i == j {
            C64::new(0.0, -0.5 * gamma0)
        } else {
            pref * polarized_coupling((z[i] - z[j]).abs(), k0, pol)
        }
    });
    Ok(SectorMatrix::new(
        SectorBasis::new(Sector::One, n),
        MatrixPart::Full,
        h,
    ))
}

/// Polarization weights of the integral representation. `rho_plus` weights
/// the propagating (`e^{i k |z|}`) kernel on `[0, k0]`, `rho_minus` the
/// evanescent (`e^{-k |z|}`) kernel on `[0, inf)`.
fn weights(pol: Polarization, k0: f64) -> (impl Fn(f64) -> f64, impl Fn(f64) -> f64) {
    let k02 = k0 * k0;
    let plus = move |k: f64| match pol {
        Polarization::Parallel => 2.0 * PI * (1.0 - k * k / k02),
        Polarization::Transverse => PI * (1.0 + k * k / k02),
    };
    let minus = move |k: f64| match pol {
        Polarization::Parallel => 2.0 * PI * (1.0 + k * k / k02),
        Polarization::Transverse => PI * (1.0 - k * k / k02),
    };
    (plus, minus)
}

/// One-excitation Hamiltonian from the wavenumber-integral representation.
/// The evanescent integral is compactified by `k = k0 u/(1-u)` and both
/// integrals are evaluated adaptively to `spec` tolerances. Agrees with
/// [`build_one_excitation`] entrywise within the quadrature error.
pub fn build_via_integral(cfg: &ChainConfig, spec: &QuadratureSpec) -> Result<SectorMatrix> {
    let (k0, gamma0, pol) = cfg.require_free_space()?;
    let z = cfg.positions();
    let n = cfg.n_atoms();
    let (rho_plus, rho_minus) = weights(pol, k0);
    let pref = 3.0 * gamma0 / (4.0 * k0) / (2.0 * PI);

    // separations are a function of |i - j| only; integrate once per distance
    let mut by_distance = vec![C64::new(0.0, 0.0); n];
    by_distance[0] = C64::new(0.0, -0.5 * gamma0);
    for sep in 1..n {
        let r = (z[sep] - z[0]).abs();
        let propagating = integrate(|k| rho_plus(k) * (I * k * r).exp(), 0.0, k0, spec)?;
        let evanescent =
            integrate_semi_infinite(|k| C64::new(rho_minus(k) * (-k * r).exp(), 0.0), k0, spec)?;
        by_distance[sep] = -I * pref * propagating.value - pref * evanescent.value;
    }

    let h = Mat::from_fn(n, n, |i, j| by_distance[i.abs_diff(j)]);
    Ok(SectorMatrix::new(
        SectorBasis::new(Sector::One, n),
        MatrixPart::Full,
        h,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ChainConfig;

    #[test]
    fn single_atom_diagonal() {
        let cfg = ChainConfig::free_space(1, 1.0, 0.4 * PI, 1.0, Polarization::Transverse).unwrap();
        let h = build_one_excitation(&cfg).unwrap();
        assert!((h.entries()[(0, 0)] - C64::new(0.0, -0.5)).norm() < 1e-15);
    }

    #[test]
    fn dissipative_trace_is_half_n_gamma() {
        let cfg = ChainConfig::free_space(7, 1.0, 0.6 * PI, 2.0, Polarization::Parallel).unwrap();
        let hi = build_one_excitation(&cfg).unwrap().imag_part();
        let tr = hi.trace();
        assert!((tr.re - 7.0).abs() < 1e-12 && tr.im.abs() < 1e-14);
    }

    #[test]
    fn reciprocity_of_site_matrix() {
        let cfg = ChainConfig::free_space(6, 1.0, 0.6 * PI, 1.0, Polarization::Transverse).unwrap();
        let h = build_one_excitation(&cfg).unwrap();
        assert!(h.max_asymmetry() < 1e-12);
    }

    #[test]
    fn propagating_weight_vanishes_at_light_cone_parallel() {
        let k0 = 1.3;
        let (plus, _) = weights(Polarization::Parallel, k0);
        assert!(plus(k0).abs() < 1e-12);
    }

    #[test]
    fn integral_matches_closed_form_both_polarizations() {
        let spec = QuadratureSpec::default();
        for pol in [Polarization::Parallel, Polarization::Transverse] {
            let cfg = ChainConfig::free_space(4, 1.0, 0.4 * PI, 1.0, pol).unwrap();
            let direct = build_one_excitation(&cfg).unwrap();
            let via = build_via_integral(&cfg, &spec).unwrap();
            let mut worst = 0.0f64;
            for i in 0..4 {
                for j in 0..4 {
                    worst = worst.max((direct.entries()[(i, j)] - via.entries()[(i, j)]).norm());
                }
            }
            assert!(worst < 1e-8, "{pol:?}: {worst:.3e}");
        }
    }
}
