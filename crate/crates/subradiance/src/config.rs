//! Chain and field-model configuration.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Rejection threshold on `|sin(k1d * d)|`. The Bloch dispersion and the
/// superradiant tails carry `1/sin` factors that blow up at mirror-resonant
/// spacings, so those configurations are refused by [`ChainConfig::waveguide`].
pub const EPS_RESONANCE: f64 = 1e-9;

/// Dipole orientation relative to the chain axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarization {
    /// Dipoles along the chain axis; short-range (`1/r^3`) coupling.
    Parallel,
    /// Dipoles perpendicular to the chain; long-range (`1/r`) coupling.
    Transverse,
}

/// Field reservoir the chain couples to.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum FieldModel {
    /// Guided 1D mode with resonant wavenumber `k1d` and single-emitter
    /// decay rate `gamma_1d`.
    Waveguide1D { k1d: f64, gamma_1d: f64 },
    /// 3D vacuum field with resonant wavenumber `k0`, free-space decay rate
    /// `gamma_0`, and a fixed dipole orientation.
    FreeSpace3D {
        k0: f64,
        gamma_0: f64,
        polarization: Polarization,
    },
}

/// An equidistant chain of `n_atoms` two-level emitters spaced by `spacing`,
/// with positions `z_m = (m - 1) * spacing` (the first emitter sits at the
/// origin; the analytic tail phases assume this).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainConfig {
    n_atoms: usize,
    spacing: f64,
    field: FieldModel,
}

impl ChainConfig {
    /// Waveguide-coupled chain. Rejects mirror-resonant spacings
    /// (`|sin(k1d*d)| <= EPS_RESONANCE`).
    pub fn waveguide(n_atoms: usize, spacing: f64, k1d: f64, gamma_1d: f64) -> Result<Self> {
        let cfg = Self::waveguide_allow_mirror(n_atoms, spacing, k1d, gamma_1d)?;
        let s = (k1d * spacing).sin().abs();
        if s <= EPS_RESONANCE {
            return Err(Error::ResonantSpacing {
                value: s,
                eps: EPS_RESONANCE,
            });
        }
        Ok(cfg)
    }

    /// Waveguide chain without the mirror-spacing rejection. Matrix builds
    /// are well-defined at `k1d * d = pi` (the two-atom limit with one
    /// perfectly dark and one maximally decaying state lives there); only
    /// the closed-form Bloch theory is singular.
    pub fn waveguide_allow_mirror(
        n_atoms: usize,
        spacing: f64,
        k1d: f64,
        gamma_1d: f64,
    ) -> Result<Self> {
        validate_common(n_atoms, spacing)?;
        if k1d <= 0.0 {
            return Err(Error::Config(format!("k1d must be > 0, got {k1d}")));
        }
        if gamma_1d <= 0.0 {
            return Err(Error::Config(format!("gamma_1d must be > 0, got {gamma_1d}")));
        }
        Ok(Self {
            n_atoms,
            spacing,
            field: FieldModel::Waveguide1D { k1d, gamma_1d },
        })
    }

    /// Free-space chain. `k0 * d >= pi` is allowed (the build is fine) but
    /// such chains have no subradiant regime; see
    /// [`ChainConfig::subradiant_regime`].
    pub fn free_space(
        n_atoms: usize,
        spacing: f64,
        k0: f64,
        gamma_0: f64,
        polarization: Polarization,
    ) -> Result<Self> {
        validate_common(n_atoms, spacing)?;
        if k0 <= 0.0 {
            return Err(Error::Config(format!("k0 must be > 0, got {k0}")));
        }
        if gamma_0 <= 0.0 {
            return Err(Error::Config(format!("gamma_0 must be > 0, got {gamma_0}")));
        }
        Ok(Self {
            n_atoms,
            spacing,
            field: FieldModel::FreeSpace3D {
                k0,
                gamma_0,
                polarization,
            },
        })
    }

    pub fn n_atoms(&self) -> usize {
        self.n_atoms
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    pub fn field(&self) -> &FieldModel {
        &self.field
    }

    /// Emitter position `z_m = (m - 1) * d` for 1-based `m`, or 0-based
    /// index times spacing via [`ChainConfig::positions`].
    pub fn positions(&self) -> Vec<f64> {
        (0..self.n_atoms).map(|m| m as f64 * self.spacing).collect()
    }

    /// Single-emitter decay rate of the configured field model.
    pub fn decay_rate(&self) -> f64 {
        match self.field {
            FieldModel::Waveguide1D { gamma_1d, .. } => gamma_1d,
            FieldModel::FreeSpace3D { gamma_0, .. } => gamma_0,
        }
    }

    /// Resonant wavenumber of the configured field model.
    pub fn wavenumber(&self) -> f64 {
        match self.field {
            FieldModel::Waveguide1D { k1d, .. } => k1d,
            FieldModel::FreeSpace3D { k0, .. } => k0,
        }
    }

    /// Resonant phase per lattice site, `k * d`.
    pub fn kd(&self) -> f64 {
        self.wavenumber() * self.spacing
    }

    /// Whether the chain supports a subradiant mode family. Always true for
    /// the waveguide; in free space it requires the spacing to be below half
    /// the resonant wavelength (`k0 * d < pi`).
    pub fn subradiant_regime(&self) -> bool {
        match self.field {
            FieldModel::Waveguide1D { .. } => true,
            FieldModel::FreeSpace3D { k0, .. } => k0 * self.spacing < std::f64::consts::PI,
        }
    }

    pub(crate) fn require_waveguide(&self) -> Result<(f64, f64)> {
        match self.field {
            FieldModel::Waveguide1D { k1d, gamma_1d } => Ok((k1d, gamma_1d)),
            _ => Err(Error::WrongFieldModel {
                expected: "Waveguide1D",
            }),
        }
    }

    pub(crate) fn require_free_space(&self) -> Result<(f64, f64, Polarization)> {
        match self.field {
            FieldModel::FreeSpace3D {
                k0,
                gamma_0,
                polarization,
            } => Ok((k0, gamma_0, polarization)),
            _ => Err(Error::WrongFieldModel {
                expected: "FreeSpace3D",
            }),
        }
    }

    /// Copy of this config with a different atom number (sweep helper).
    pub fn with_n_atoms(&self, n_atoms: usize) -> Result<Self> {
        let mut cfg = self.clone();
        validate_common(n_atoms, cfg.spacing)?;
        cfg.n_atoms = n_atoms;
        Ok(cfg)
    }
}

fn validate_common(n_atoms: usize, spacing: f64) -> Result<()> {
    if n_atoms == 0 {
        return Err(Error::Config("n_atoms must be >= 1".into()));
    }
    if !(spacing > 0.0) {
        return Err(Error::Config(format!("spacing must be > 0, got {spacing}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_mirror_spacing() {
        let err = ChainConfig::waveguide(4, 1.0, std::f64::consts::PI, 1.0).unwrap_err();
        assert!(matches!(err, Error::ResonantSpacing { .. }), "{err}");
        // but the explicit mirror constructor accepts it
        ChainConfig::waveguide_allow_mirror(4, 1.0, std::f64::consts::PI, 1.0).unwrap();
    }

    #[test]
    fn rejects_nonpositive_parameters() {
        assert!(ChainConfig::waveguide(0, 1.0, 1.0, 1.0).is_err());
        assert!(ChainConfig::waveguide(3, 0.0, 1.0, 1.0).is_err());
        assert!(ChainConfig::waveguide(3, 1.0, -1.0, 1.0).is_err());
        assert!(ChainConfig::waveguide(3, 1.0, 1.0, 0.0).is_err());
        assert!(ChainConfig::free_space(3, 1.0, 1.0, -2.0, Polarization::Parallel).is_err());
    }

    #[test]
    fn positions_start_at_origin() {
        let cfg = ChainConfig::waveguide(4, 0.5, 1.0, 1.0).unwrap();
        assert_eq!(cfg.positions(), vec![0.0, 0.5, 1.0, 1.5]);
    }

    #[test]
    fn free_space_subradiant_flag() {
        let sub = ChainConfig::free_space(8, 1.0, 0.6 * std::f64::consts::PI, 1.0, Polarization::Transverse).unwrap();
        assert!(sub.subradiant_regime());
        let no = ChainConfig::free_space(8, 1.0, 1.2 * std::f64::consts::PI, 1.0, Polarization::Transverse).unwrap();
        assert!(!no.subradiant_regime());
    }
}
