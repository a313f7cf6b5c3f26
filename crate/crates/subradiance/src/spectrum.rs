//! Dense non-Hermitian eigendecomposition with deterministic ordering,
//! residual validation, dissipative-subspace splitting, and quasi-momentum
//! branch labels.

use crate::cvec::{column, dot, mat_vec, norm, normalize};
use crate::sector::{MatrixPart, SectorMatrix};
use crate::{ChainConfig, Error, Result, C64, I};
use faer::Mat;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Eigenpairs of a sector matrix, sorted by increasing decay rate
/// `gamma = -2 Im(lambda)`, ties broken by increasing `Re(lambda)` and then
/// by the solver's original index. Right eigenvectors are L2-normalized and
/// phase-fixed so the largest-magnitude component is real positive.
#[derive(Debug, Clone)]
pub struct SpectralResult {
    eigenvalues: Vec<C64>,
    vectors: Mat<C64>,
    residuals: Vec<f64>,
    spectral_norm: f64,
}

impl SpectralResult {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn eigenvalues(&self) -> &[C64] {
        &self.eigenvalues
    }

    /// Decay rate of mode `j`: `-2 Im(lambda_j)`.
    pub fn decay_rate(&self, j: usize) -> f64 {
        -2.0 * self.eigenvalues[j].im
    }

    pub fn decay_rates(&self) -> Vec<f64> {
        (0..self.len()).map(|j| self.decay_rate(j)).collect()
    }

    /// Frequency shift of mode `j`: `Re(lambda_j)`.
    pub fn shift(&self, j: usize) -> f64 {
        self.eigenvalues[j].re
    }

    pub fn vector(&self, j: usize) -> Vec<C64> {
        column(self.vectors.as_ref(), j)
    }

    pub fn vectors(&self) -> &Mat<C64> {
        &self.vectors
    }

    pub fn residuals(&self) -> &[f64] {
        &self.residuals
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    /// Spectral-norm estimate of the decomposed matrix (power iteration).
    pub fn spectral_norm(&self) -> f64 {
        self.spectral_norm
    }
}

/// Power-iteration estimate of the operator 2-norm.
fn spectral_norm_estimate(h: &Mat<C64>) -> f64 {
    let n = h.nrows();
    if n == 0 {
        return 0.0;
    }
    // fixed deterministic start
    let mut v = Mat::<C64>::from_fn(n, 1, |i, _| {
        C64::new(1.0 + (i as f64 * 0.7).sin(), (i as f64 * 1.3).cos())
    });
    let scale = v.norm_l2();
    v = Mat::from_fn(n, 1, |i, _| v[(i, 0)] / scale);
    let mut sigma = 0.0;
    for _ in 0..25 {
        let hv = h * &v;
        let w = h.adjoint() * &hv;
        let nw = w.norm_l2();
        sigma = nw.sqrt();
        if nw == 0.0 {
            return 0.0;
        }
        v = Mat::from_fn(n, 1, |i, _| w[(i, 0)] / nw);
    }
    sigma
}

/// Full right-eigenpair decomposition. The ordering and the eigenvector
/// phases are deterministic, so identical inputs give bitwise-identical
/// results.
pub fn eigendecompose(matrix: &SectorMatrix) -> Result<SpectralResult> {
    let h = matrix.entries();
    let n = h.nrows();
    let evd = h
        .eigen()
        .map_err(|e| Error::EigNonConvergence(format!("{e:?}")))?;
    let raw_vals: Vec<C64> = (0..n).map(|i| evd.S().column_vector()[i]).collect();
    let u = evd.U();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        let ga = -2.0 * raw_vals[a].im;
        let gb = -2.0 * raw_vals[b].im;
        ga.total_cmp(&gb)
            .then(raw_vals[a].re.total_cmp(&raw_vals[b].re))
            .then(a.cmp(&b))
    });

    let eigenvalues: Vec<C64> = order.iter().map(|&j| raw_vals[j]).collect();
    let mut vectors = Mat::<C64>::zeros(n, n);
    for (col, &j) in order.iter().enumerate() {
        let mut v: Vec<C64> = (0..n).map(|i| u[(i, j)]).collect();
        normalize(&mut v);
        // phase convention: largest-|.| component real positive
        let mut best = 0usize;
        let mut best_mag = -1.0;
        for (i, x) in v.iter().enumerate() {
            let m = x.norm();
            if m > best_mag {
                best_mag = m;
                best = i;
            }
        }
        if best_mag > 0.0 {
            let phase = v[best] / best_mag;
            for x in v.iter_mut() {
                *x /= phase;
            }
        }
        for i in 0..n {
            vectors[(i, col)] = v[i];
        }
    }

    let spectral_norm = spectral_norm_estimate(h);
    // residual ||H v - lambda v|| per mode, via one dense multiply
    let hu = h * &vectors;
    let mut residuals = Vec::with_capacity(n);
    for col in 0..n {
        let lam = eigenvalues[col];
        let r: f64 = (0..n)
            .map(|i| (hu[(i, col)] - lam * vectors[(i, col)]).norm_sqr())
            .sum::<f64>()
            .sqrt();
        residuals.push(r);
    }

    Ok(SpectralResult {
        eigenvalues,
        vectors,
        residuals,
        spectral_norm,
    })
}

/// Eigenvalues only (no vectors, no residuals), sorted as in
/// [`eigendecompose`]. Much cheaper for large two-excitation sweeps.
pub fn eigenvalues_only(matrix: &SectorMatrix) -> Result<Vec<C64>> {
    let vals = matrix
        .entries()
        .eigenvalues()
        .map_err(|e| Error::EigNonConvergence(format!("{e:?}")))?;
    let mut vals: Vec<C64> = vals;
    vals.sort_by(|a, b| {
        (-2.0 * a.im)
            .total_cmp(&(-2.0 * b.im))
            .then(a.re.total_cmp(&b.re))
    });
    Ok(vals)
}

/// The two-dimensional fast-decaying subspace of the dissipative part and
/// the projector on its orthogonal complement (the dark space).
pub struct DarkSplit {
    /// Orthonormal basis of the fast subspace (two columns): the
    /// Gram-Schmidt-orthogonalized Bloch vectors at `+k1d`, `-k1d`.
    pub superradiant_basis: Mat<C64>,
    /// Projector on the `(N-2)`-dimensional dark space.
    pub dark_projector: Mat<C64>,
    /// Operator norm of `H_I * P_dark` (should vanish).
    pub leakage: f64,
}

/// Split the one-excitation dissipative part into its rank-two fast subspace
/// (spanned by the Bloch vectors at `+-k1d`) and the dark complement, and
/// verify that `H_I` annihilates the dark projector.
pub fn dark_superradiant_split(hi: &SectorMatrix, cfg: &ChainConfig) -> Result<DarkSplit> {
    assert_eq!(hi.part(), MatrixPart::ImagPart);
    let (k1d, _) = cfg.require_waveguide()?;
    let n = cfg.n_atoms();
    if n < 3 {
        return Err(Error::Config(
            "dark space requires at least 3 emitters".into(),
        ));
    }
    let z = cfg.positions();
    let bloch = |sign: f64| -> Vec<C64> {
        let mut v: Vec<C64> = z.iter().map(|&zm| (I * sign * k1d * zm).exp()).collect();
        normalize(&mut v);
        v
    };
    let b_plus = bloch(1.0);
    let mut b_minus = bloch(-1.0);
    // Gram-Schmidt: the two Bloch vectors are orthogonal only for
    // grid-commensurate k1d; the span is what matters
    let overlap = dot(&b_plus, &b_minus);
    for (x, p) in b_minus.iter_mut().zip(&b_plus) {
        *x -= overlap * p;
    }
    let nm = norm(&b_minus);
    if nm < 1e-12 {
        return Err(Error::Config(
            "Bloch vectors at +-k1d are degenerate (mirror spacing)".into(),
        ));
    }
    normalize(&mut b_minus);

    let mut sr = Mat::<C64>::zeros(n, 2);
    for i in 0..n {
        sr[(i, 0)] = b_plus[i];
        sr[(i, 1)] = b_minus[i];
    }
    // P_dark = 1 - sum_s |s><s|
    let mut pd = Mat::<C64>::from_fn(n, n, |i, j| {
        if i == j {
            C64::new(1.0, 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    for s in 0..2 {
        for i in 0..n {
            for j in 0..n {
                let proj = sr[(i, s)] * sr[(j, s)].conj();
                pd[(i, j)] -= proj;
            }
        }
    }
    let hipd = hi.entries() * &pd;
    let leakage = spectral_norm_estimate(&hipd);
    Ok(DarkSplit {
        superradiant_basis: sr,
        dark_projector: pd,
        leakage,
    })
}

/// Quasi-momentum branch of a subradiant mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    /// Band center, `k ~ 0`.
    Center,
    /// Band edge, `k ~ +-pi/d`.
    Edge,
}

/// Label of one subradiant mode: branch, rank `xi` within the branch
/// (1-based, increasing with decay rate), and the interpolated dominant
/// wavenumber of the eigenvector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModeLabel {
    pub xi: usize,
    pub branch: Branch,
    pub dominant_k: f64,
}

/// Classification of one eigenmode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ModeClass {
    Subradiant(ModeLabel),
    Superradiant,
    /// Two spectral peaks of comparable weight that are not a mirror pair;
    /// flagged rather than guessed.
    Unclassified { dominant_k: f64 },
}

/// Decay-rate threshold below which a mode counts as subradiant, in units
/// of the single-emitter rate.
pub const SUBRADIANCE_THRESHOLD: f64 = 0.5;

/// Dominant wavenumber of a site-space vector by zero-padded discrete
/// Fourier transform with quadratic peak interpolation, in `(-pi/d, pi/d]`.
/// Returns `(k, ambiguous)`; `ambiguous` is set when a second non-mirror
/// peak comes within 10% of the main one.
pub fn dominant_wavenumber(v: &[C64], spacing: f64, pad: usize) -> (f64, bool) {
    let n = v.len();
    let m = (n * pad).max(8);
    let mut mags = vec![0.0f64; m];
    for (bin, mag) in mags.iter_mut().enumerate() {
        // k d in (-pi, pi]
        let kd = 2.0 * PI * bin as f64 / m as f64;
        let mut acc = C64::new(0.0, 0.0);
        for (s, &vs) in v.iter().enumerate() {
            acc += vs * (-I * kd * s as f64).exp();
        }
        *mag = acc.norm();
    }
    let peak = mags
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .unwrap_or(0);

    // quadratic interpolation around the peak bin
    let prev = mags[(peak + m - 1) % m];
    let next = mags[(peak + 1) % m];
    let here = mags[peak];
    let denom = prev - 2.0 * here + next;
    let frac = if denom.abs() > 1e-300 {
        0.5 * (prev - next) / denom
    } else {
        0.0
    };
    let kd_raw = 2.0 * PI * (peak as f64 + frac) / m as f64;
    let kd = if kd_raw > PI { kd_raw - 2.0 * PI } else { kd_raw };

    // second peak away from +-k_peak: local maxima scan
    let mirror = (m - peak) % m;
    let exclude = (m / n).max(2); // one site-resolution bin around each peak
    let mut second = 0.0f64;
    for i in 0..m {
        let d1 = bin_distance(i, peak, m);
        let d2 = bin_distance(i, mirror, m);
        if d1 <= exclude || d2 <= exclude {
            continue;
        }
        let l = mags[(i + m - 1) % m];
        let r = mags[(i + 1) % m];
        if mags[i] >= l && mags[i] >= r {
            second = second.max(mags[i]);
        }
    }
    let ambiguous = second >= 0.9 * here;
    (kd / spacing, ambiguous)
}

fn bin_distance(a: usize, b: usize, m: usize) -> usize {
    let d = a.abs_diff(b);
    d.min(m - d)
}

/// Label every mode of a one-excitation decomposition. Subradiant modes
/// (`gamma < threshold * Gamma`) are assigned `(xi, branch)`; superradiant
/// modes are reported separately; ambiguous Fourier spectra are flagged.
pub fn classify_modes(result: &SpectralResult, cfg: &ChainConfig) -> Vec<ModeClass> {
    let gamma1 = cfg.decay_rate();
    let d = cfg.spacing();
    let mut counts = [0usize; 2];
    let mut out = Vec::with_capacity(result.len());
    for j in 0..result.len() {
        if result.decay_rate(j) >= SUBRADIANCE_THRESHOLD * gamma1 {
            out.push(ModeClass::Superradiant);
            continue;
        }
        let v = result.vector(j);
        let (k, ambiguous) = dominant_wavenumber(&v, d, 16);
        if ambiguous {
            out.push(ModeClass::Unclassified { dominant_k: k });
            continue;
        }
        let branch = if k.abs() < 0.5 * PI / d {
            Branch::Center
        } else {
            Branch::Edge
        };
        let slot = match branch {
            Branch::Center => 0,
            Branch::Edge => 1,
        };
        counts[slot] += 1;
        out.push(ModeClass::Subradiant(ModeLabel {
            xi: counts[slot],
            branch,
            dominant_k: k,
        }));
    }
    out
}

/// Indices (into the sorted decomposition) of the subradiant modes of one
/// branch, in increasing decay order, i.e. position `xi - 1` holds branch
/// rank `xi`.
pub fn branch_modes(classes: &[ModeClass], branch: Branch) -> Vec<usize> {
    classes
        .iter()
        .enumerate()
        .filter_map(|(j, c)| match c {
            ModeClass::Subradiant(l) if l.branch == branch => Some(j),
            _ => None,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::waveguide;

    #[test]
    fn dicke_pair_eigenvalues() {
        let cfg = ChainConfig::waveguide_allow_mirror(2, 1.0, PI, 1.0).unwrap();
        let h = waveguide::build_one_excitation(&cfg).unwrap();
        let res = eigendecompose(&h).unwrap();
        // one dark state and one state decaying at twice the single rate
        assert!(res.decay_rate(0).abs() < 1e-12);
        assert!((res.decay_rate(1) - 2.0).abs() < 1e-12);
        assert!(res.max_residual() < 1e-12 * res.spectral_norm().max(1.0));
    }

    #[test]
    fn quarter_wave_pair_hand_diagonalization() {
        // N = 2, k1d d = pi/2: lambda = +-Gamma/2 - i Gamma/2
        let cfg = ChainConfig::waveguide(2, 1.0, 0.5 * PI, 1.0).unwrap();
        let h = waveguide::build_one_excitation(&cfg).unwrap();
        let res = eigendecompose(&h).unwrap();
        assert!((res.eigenvalues()[0] - C64::new(-0.5, -0.5)).norm() < 1e-12);
        assert!((res.eigenvalues()[1] - C64::new(0.5, -0.5)).norm() < 1e-12);
        assert!((res.decay_rate(0) - 1.0).abs() < 1e-12);
        assert!((res.decay_rate(1) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn dissipative_spectrum_rank_two() {
        // grid-commensurate k1d: H_I eigenvalues are {N Gamma/4 (x2), 0}
        for n in [3usize, 10, 21] {
            let kd = 2.0 * PI / n as f64;
            let cfg = ChainConfig::waveguide(n, 1.0, kd, 1.0).unwrap();
            let hi = waveguide::build_one_excitation(&cfg).unwrap().imag_part();
            let res = eigendecompose(&hi).unwrap();
            let mut eigs: Vec<f64> = res.eigenvalues().iter().map(|l| l.re).collect();
            eigs.sort_by(f64::total_cmp);
            let quarter = n as f64 / 4.0;
            for &e in &eigs[..n - 2] {
                assert!(e.abs() < 1e-12, "N={n}: dark eigenvalue {e:.2e}");
            }
            assert!((eigs[n - 2] - quarter).abs() < 1e-12, "N={n}");
            assert!((eigs[n - 1] - quarter).abs() < 1e-12, "N={n}");
        }
    }

    #[test]
    fn ordering_is_deterministic() {
        let cfg = ChainConfig::waveguide(12, 1.0, 0.2 * PI, 1.0).unwrap();
        let h = waveguide::build_one_excitation(&cfg).unwrap();
        let a = eigendecompose(&h).unwrap();
        let b = eigendecompose(&h).unwrap();
        assert_eq!(a.eigenvalues(), b.eigenvalues());
        for j in 0..a.len() {
            assert_eq!(a.vector(j), b.vector(j), "vector {j}");
        }
    }

    #[test]
    fn eigenvalue_only_path_matches() {
        let cfg = ChainConfig::waveguide(9, 1.0, 0.3 * PI, 1.0).unwrap();
        let h = waveguide::build_one_excitation(&cfg).unwrap();
        let full = eigendecompose(&h).unwrap();
        let vals = eigenvalues_only(&h).unwrap();
        for (a, b) in full.eigenvalues().iter().zip(&vals) {
            assert!((a - b).norm() < 1e-10);
        }
    }

    #[test]
    fn dark_split_annihilates() {
        let cfg = ChainConfig::waveguide(20, 1.0, 0.2 * PI, 1.0).unwrap();
        let hi = waveguide::build_one_excitation(&cfg).unwrap().imag_part();
        let split = dark_superradiant_split(&hi, &cfg).unwrap();
        assert!(split.leakage < 1e-10 * 20.0, "leakage {}", split.leakage);
        // dark projector has rank N - 2: trace check
        let tr: C64 = (0..20).map(|i| split.dark_projector[(i, i)]).sum();
        assert!((tr.re - 18.0).abs() < 1e-10 && tr.im.abs() < 1e-12);
    }

    #[test]
    fn bloch_overlap_geometric_sum() {
        // <+k|-k> = (1/N) sum e^{-2 i k z_m}, a closed geometric sum
        let n = 11;
        let kd: f64 = 0.37;
        let cfg = ChainConfig::waveguide(n, 1.0, kd, 1.0).unwrap();
        let z = cfg.positions();
        let mut plus: Vec<C64> = z.iter().map(|&zm| (I * kd * zm).exp()).collect();
        let mut minus: Vec<C64> = z.iter().map(|&zm| (-I * kd * zm).exp()).collect();
        normalize(&mut plus);
        normalize(&mut minus);
        let overlap = dot(&plus, &minus);
        let ratio = (-2.0 * I * kd).exp();
        let expect = (C64::new(1.0, 0.0) - ratio.powu(n as u32)) / (C64::new(1.0, 0.0) - ratio)
            / n as f64;
        assert!((overlap - expect).norm() < 1e-13);
    }

    #[test]
    fn classifies_branches_at_quarter_wave() {
        let cfg = ChainConfig::waveguide(50, 1.0, 0.5 * PI, 1.0).unwrap();
        let h = waveguide::build_one_excitation(&cfg).unwrap();
        let res = eigendecompose(&h).unwrap();
        let classes = classify_modes(&res, &cfg);
        // the two most subradiant modes are the xi = 1 labels of both branches
        let first_two: Vec<_> = classes[..2]
            .iter()
            .map(|c| match c {
                ModeClass::Subradiant(l) => (l.xi, l.branch),
                other => panic!("expected subradiant, got {other:?}"),
            })
            .collect();
        assert!(first_two.contains(&(1, Branch::Center)), "{first_two:?}");
        assert!(first_two.contains(&(1, Branch::Edge)), "{first_two:?}");
        // gamma ratio of the two branch heads is 1 at kd = pi/2 (equal prefactors)
        let ratio = res.decay_rate(0) / res.decay_rate(1);
        assert!((ratio - 1.0).abs() < 1e-6, "ratio {ratio}");
    }

    #[test]
    fn small_kd_most_subradiant_is_edge() {
        let cfg = ChainConfig::waveguide(20, 1.0, 0.2 * PI, 1.0).unwrap();
        let h = waveguide::build_one_excitation(&cfg).unwrap();
        let res = eigendecompose(&h).unwrap();
        let classes = classify_modes(&res, &cfg);
        match &classes[0] {
            ModeClass::Subradiant(l) => {
                assert_eq!(l.branch, Branch::Edge);
                assert_eq!(l.xi, 1);
            }
            other => panic!("expected subradiant edge, got {other:?}"),
        }
    }

    #[test]
    fn branch_mode_count_grows_linearly() {
        let mut counts = Vec::new();
        for n in [20usize, 40, 80] {
            let cfg = ChainConfig::waveguide(n, 1.0, 0.5 * PI, 1.0).unwrap();
            let h = waveguide::build_one_excitation(&cfg).unwrap();
            let res = eigendecompose(&h).unwrap();
            let classes = classify_modes(&res, &cfg);
            counts.push(branch_modes(&classes, Branch::Edge).len());
        }
        // doubling N roughly doubles the census at fixed threshold
        for w in counts.windows(2) {
            let ratio = w[1] as f64 / w[0] as f64;
            assert!((1.6..=2.6).contains(&ratio), "counts {counts:?}");
        }
    }

    #[test]
    fn decay_rate_sum_rule() {
        let cfg = ChainConfig::waveguide(20, 1.0, 0.2 * PI, 1.0).unwrap();
        let h = waveguide::build_one_excitation(&cfg).unwrap();
        let res = eigendecompose(&h).unwrap();
        let total: f64 = res.decay_rates().iter().sum();
        assert!((total - 20.0).abs() < 1e-10 * 20.0);
    }
}
