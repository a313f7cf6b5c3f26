//! Free-space dyadic Green's tensor at the emitter resonance.

use crate::{Error, Polarization, Result, C64, I};

/// `G(r, omega0)` for a displacement `r` (3-vector) and resonant wavenumber
/// `k0`, in the closed form
///
/// ```text
/// G = e^{i k0 r} / (4 pi k0^2 r^3) [ (k0^2 r^2 + i k0 r - 1) I
///                                   + (-k0^2 r^2 - 3 i k0 r + 3) rhat rhat ]
/// ```
///
/// Errors on `r = 0`; the self-interaction is handled by the single-emitter
/// decay normalization, not by regularizing the tensor.
pub fn green_tensor(r: [f64; 3], k0: f64) -> Result<[[C64; 3]; 3]> {
    let r2 = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
    if r2 == 0.0 {
        return Err(Error::Config(
            "green_tensor is undefined at r = 0; use the single-emitter normalization".into(),
        ));
    }
    let rl = r2.sqrt();
    let x = k0 * rl;
    let pref = (I * x).exp() / (4.0 * std::f64::consts::PI * k0 * k0 * rl * rl * rl);
    let iso = C64::new(x * x - 1.0, x) * pref;
    let dyad = C64::new(-x * x + 3.0, -3.0 * x) * pref;
    let rhat = [r[0] / rl, r[1] / rl, r[2] / rl];
    let mut g = [[C64::new(0.0, 0.0); 3]; 3];
    for (a, ga) in g.iter_mut().enumerate() {
        for (b, gab) in ga.iter_mut().enumerate() {
            let delta = if a == b { 1.0 } else { 0.0 };
            *gab = iso * delta + dyad * rhat[a] * rhat[b];
        }
    }
    Ok(g)
}

/// Polarization-contracted scalar coupling for emitters on a common axis:
/// the longitudinal (`dhat || rhat`) or transverse (`dhat ⊥ rhat`) tensor
/// component as a function of separation `r > 0`.
pub fn polarized_coupling(r: f64, k0: f64, pol: Polarization) -> C64 {
    debug_assert!(r > 0.0);
    let x = k0 * r;
    let denom = 4.0 * std::f64::consts::PI * k0 * k0 * r * r * r;
    match pol {
        // (iso + dyad) component: e^{ix} (2 - 2ix) / (4 pi k^2 r^3)
        Polarization::Parallel => (I * x).exp() * C64::new(2.0, -2.0 * x) / denom,
        // iso component only
        Polarization::Transverse => (I * x).exp() * C64::new(x * x - 1.0, x) / denom,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn rejects_zero_displacement() {
        assert!(green_tensor([0.0; 3], 1.0).is_err());
    }

    #[test]
    fn reciprocity() {
        let r = [0.31, -0.7, 1.23];
        let neg = [-r[0], -r[1], -r[2]];
        let g = green_tensor(r, 2.0).unwrap();
        let gm = green_tensor(neg, 2.0).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert!((g[a][b] - gm[b][a]).norm() < 1e-14, "({a},{b})");
            }
        }
    }

    #[test]
    fn transverse_long_range_envelope() {
        // |G_yy| -> 1/(4 pi r) along x at large k0 r
        let k0 = 1.0;
        for r in [200.0, 400.0, 800.0] {
            let g = green_tensor([r, 0.0, 0.0], k0).unwrap();
            let envelope = g[1][1].norm() * 4.0 * PI * r;
            assert!((envelope - 1.0).abs() < 5e-2 / r * 100.0, "r={r}: {envelope}");
        }
    }

    #[test]
    fn parallel_short_range() {
        // G_xx along x ~ 1/(2 pi k^2 r^3) at k0 r << 1
        let k0 = 1.0;
        for r in [1e-2, 1e-3] {
            let g = green_tensor([r, 0.0, 0.0], k0).unwrap();
            let expect = 1.0 / (2.0 * PI * k0 * k0 * r * r * r);
            assert!(
                (g[0][0].re / expect - 1.0).abs() < 1e-3,
                "r={r}: {} vs {expect}",
                g[0][0].re
            );
        }
    }

    #[test]
    fn imaginary_part_limit_is_k0_over_6pi() {
        // Im G_aa(r -> 0+) = k0/(6 pi) for every component
        let k0 = 1.7;
        let expect = k0 / (6.0 * PI);
        let g = green_tensor([1e-4, 0.0, 0.0], k0).unwrap();
        for a in 0..3 {
            assert!(
                (g[a][a].im - expect).abs() < 1e-6 * expect,
                "component {a}: {} vs {expect}",
                g[a][a].im
            );
        }
    }

    #[test]
    fn contraction_matches_tensor_components() {
        let k0 = 1.3;
        let r = 2.1;
        let g = green_tensor([r, 0.0, 0.0], k0).unwrap();
        assert!((polarized_coupling(r, k0, Polarization::Parallel) - g[0][0]).norm() < 1e-15);
        assert!((polarized_coupling(r, k0, Polarization::Transverse) - g[1][1]).norm() < 1e-15);
    }
}
