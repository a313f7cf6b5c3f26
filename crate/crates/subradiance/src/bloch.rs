//! Closed-form one-excitation theory of the waveguide chain: Bloch-state
//! dispersion and superradiant tails, the tail-cancellation root condition
//! and its Newton solution, decay-rate and Lamb-shift asymptotics, and the
//! two-wave eigenstate ansatz.
//!
//! Acting on a Bloch state `|k> = N^{-1/2} sum_m e^{i k z_m} |e_m>` the
//! effective Hamiltonian gives exactly
//!
//! ```text
//! H |k> = omega_k |k> - (i Gamma/2) (g_k |+k1d> - h_k |-k1d>),
//! omega_k = (Gamma/4) [cot((k1d + k) d / 2) + cot((k1d - k) d / 2)],
//! g_k = 1 / (1 - e^{i (k - k1d) d}),            (z_1 = 0)
//! h_k = e^{i (k + k1d) z_N} / (e^{-i (k + k1d) d} - 1).
//! ```
//!
//! A superposition of `|k>` and `|-k>` is tail-free iff
//! `g_k h_{-k} = g_{-k} h_k`, which only complex `k` satisfies; near the
//! band center and edge the roots are `k_xi = delta_xi` and
//! `k_xi = -pi/d + delta_xi` with
//!
//! ```text
//! delta_xi = (xi pi / N d) * (1 - (i/N) cot(k1d d / 2))   (center)
//! delta_xi = (xi pi / N d) * (1 + (i/N) tan(k1d d / 2))   (edge)
//! ```
//!
//! to second order in `1/N`, giving decay rates `gamma_xi ~ xi^2 / N^3`.

use crate::cvec::{mat_vec, norm, normalize};
use crate::spectrum::Branch;
use crate::waveguide;
use crate::{ChainConfig, Error, Result, C64, I};
use serde::Serialize;
use std::f64::consts::PI;

/// Phase distance below which `k` counts as sitting on a dispersion pole.
const EPS_POLE: f64 = 1e-6;

/// Analytic one-excitation theory for a fixed waveguide chain.
#[derive(Debug, Clone)]
pub struct BlochTheory {
    n: usize,
    d: f64,
    k1d: f64,
    gamma: f64,
}

/// Complex wavenumber of a tail-free two-wave eigenstate.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ComplexWavenumber {
    pub xi: usize,
    pub branch: Branch,
    /// Offset from the branch point (`0` or `-pi/d`).
    pub delta: C64,
    /// Full wavenumber `k = branch_point + delta`.
    pub k: C64,
    /// `|g_k h_{-k} - g_{-k} h_k|` at the converged root.
    pub residual: f64,
}

/// Residual report of the exact Bloch-action identity.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct BlochActionReport {
    pub k: f64,
    /// `||H|k> - omega_k|k> + (i Gamma/2)(g_k|+k1d> - h_k|-k1d>)|| / ||H|k>||`
    pub relative_residual: f64,
    pub omega: C64,
}

impl BlochTheory {
    /// Requires a waveguide config away from mirror resonance.
    pub fn new(cfg: &ChainConfig) -> Result<Self> {
        let (k1d, gamma) = cfg.require_waveguide()?;
        let s = (k1d * cfg.spacing()).sin().abs();
        if s <= crate::config::EPS_RESONANCE {
            return Err(Error::ResonantSpacing {
                value: s,
                eps: crate::config::EPS_RESONANCE,
            });
        }
        Ok(Self {
            n: cfg.n_atoms(),
            d: cfg.spacing(),
            k1d,
            gamma,
        })
    }

    pub fn n_atoms(&self) -> usize {
        self.n
    }

    /// Dispersion `omega_k`, analytic in complex `k` away from the poles at
    /// `k = +-k1d (mod 2 pi / d)`. Symmetric: `omega_k = omega_{-k}`.
    pub fn omega(&self, k: C64) -> C64 {
        let half_d = 0.5 * self.d;
        let a = (self.k1d + k) * half_d;
        let b = (self.k1d - k) * half_d;
        0.25 * self.gamma * (a.cos() / a.sin() + b.cos() / b.sin())
    }

    /// Tail amplitude onto `|+k1d>` (origin convention `z_1 = 0`).
    pub fn g(&self, k: C64) -> C64 {
        let q = (k - self.k1d) * self.d;
        1.0 / (C64::new(1.0, 0.0) - (I * q).exp())
    }

    /// `d g / d k`.
    pub fn g_prime(&self, k: C64) -> C64 {
        let q = (k - self.k1d) * self.d;
        let e = (I * q).exp();
        let denom = C64::new(1.0, 0.0) - e;
        I * self.d * e / (denom * denom)
    }

    /// Tail amplitude onto `|-k1d>`.
    pub fn h(&self, k: C64) -> C64 {
        let zn = (self.n - 1) as f64 * self.d;
        let q = k + self.k1d;
        (I * q * zn).exp() / ((-I * q * self.d).exp() - 1.0)
    }

    /// `d h / d k`.
    pub fn h_prime(&self, k: C64) -> C64 {
        let zn = (self.n - 1) as f64 * self.d;
        let q = k + self.k1d;
        let num = (I * q * zn).exp();
        let denom = (-I * q * self.d).exp() - 1.0;
        let dnum = I * zn * num;
        let ddenom = -I * self.d * (-I * q * self.d).exp();
        (dnum * denom - num * ddenom) / (denom * denom)
    }

    /// Tail-cancellation function `F(k) = g_k h_{-k} - g_{-k} h_k`; its
    /// zeros are the wavenumbers of tail-free two-wave eigenstates.
    pub fn root_condition(&self, k: C64) -> C64 {
        self.g(k) * self.h(-k) - self.g(-k) * self.h(k)
    }

    /// Analytic derivative `F'(k)`.
    pub fn root_condition_prime(&self, k: C64) -> C64 {
        self.g_prime(k) * self.h(-k) - self.g(k) * self.h_prime(-k)
            + self.g_prime(-k) * self.h(k)
            - self.g(-k) * self.h_prime(k)
    }

    fn branch_point(&self, branch: Branch) -> f64 {
        match branch {
            Branch::Center => 0.0,
            Branch::Edge => -PI / self.d,
        }
    }

    fn check_xi(&self, xi: usize) -> Result<()> {
        let max = self.n / 4;
        if xi == 0 || xi > max {
            return Err(Error::XiOutOfRange { xi, max });
        }
        Ok(())
    }

    /// Second-order closed-form root offset.
    pub fn delta_leading(&self, xi: usize, branch: Branch) -> C64 {
        let base = xi as f64 * PI / (self.n as f64 * self.d);
        let half = 0.5 * self.k1d * self.d;
        let corr = match branch {
            Branch::Center => -half.cos() / half.sin(),
            Branch::Edge => half.sin() / half.cos(),
        };
        base * C64::new(1.0, corr / self.n as f64)
    }

    /// Newton solution of `F(k) = 0` seeded at `xi pi / (N d)` off the
    /// branch point, with 0.5 damping on overshoot. Converges to
    /// `|F| < 1e-12`; errors out if the iteration diverges or hops to a
    /// different `xi` basin.
    pub fn solve_complex_k(&self, xi: usize, branch: Branch) -> Result<ComplexWavenumber> {
        self.check_xi(xi)?;
        let name = match branch {
            Branch::Center => "center",
            Branch::Edge => "edge",
        };
        let spacing_k = PI / (self.n as f64 * self.d);
        let seed = self.branch_point(branch) + xi as f64 * spacing_k;
        let mut k = C64::new(seed, 0.0);
        let mut f = self.root_condition(k);
        let mut converged = false;
        for _ in 0..50 {
            if f.norm() < 1e-12 {
                converged = true;
                break;
            }
            let fp = self.root_condition_prime(k);
            if fp.norm() < 1e-300 {
                return Err(Error::NewtonFailure {
                    xi,
                    branch: name,
                    reason: "vanishing derivative".into(),
                });
            }
            let mut step = f / fp;
            let mut next = k - step;
            let mut fnext = self.root_condition(next);
            // damp on overshoot
            let mut damping = 0;
            while fnext.norm() > f.norm() && damping < 30 {
                step *= 0.5;
                next = k - step;
                fnext = self.root_condition(next);
                damping += 1;
            }
            k = next;
            f = fnext;
        }
        if !converged && f.norm() >= 1e-12 {
            return Err(Error::NewtonFailure {
                xi,
                branch: name,
                reason: format!("|F| = {:.3e} after 50 iterations", f.norm()),
            });
        }
        let delta = k - self.branch_point(branch);
        if (delta.re - xi as f64 * spacing_k).abs() > 0.5 * spacing_k {
            return Err(Error::NewtonFailure {
                xi,
                branch: name,
                reason: format!(
                    "converged into a different basin: Re delta = {:.6e}, expected {:.6e}",
                    delta.re,
                    xi as f64 * spacing_k
                ),
            });
        }
        Ok(ComplexWavenumber {
            xi,
            branch,
            delta,
            k,
            residual: f.norm(),
        })
    }

    /// Asymptotic decay rate
    /// `gamma_xi = Gamma (pi^2/2) (xi^2/N^3) * cos^2/sin^4` (center) or
    /// `sin^2/cos^4` (edge) of the half resonant phase.
    pub fn analytic_decay(&self, xi: usize, branch: Branch) -> Result<f64> {
        self.check_xi(xi)?;
        let half = 0.5 * self.k1d * self.d;
        let (s, c) = (half.sin(), half.cos());
        let pref = match branch {
            Branch::Center => c * c / (s * s * s * s),
            Branch::Edge => s * s / (c * c * c * c),
        };
        let n = self.n as f64;
        Ok(self.gamma * 0.5 * PI * PI * (xi * xi) as f64 / (n * n * n) * pref)
    }

    /// Asymptotic Lamb shift, from the quadratic expansion of the
    /// dispersion around the branch point:
    ///
    /// ```text
    /// center: (Gamma/2) cot(a) + (Gamma/2) (cos a / sin^3 a) (xi pi / 2N)^2
    /// edge:  -(Gamma/2) tan(a) - (Gamma/2) (sin a / cos^3 a) (xi pi / 2N)^2
    /// ```
    ///
    /// with `a = k1d d / 2`.
    pub fn analytic_shift(&self, xi: usize, branch: Branch) -> Result<f64> {
        self.check_xi(xi)?;
        let a = 0.5 * self.k1d * self.d;
        let (s, c) = (a.sin(), a.cos());
        let x = xi as f64 * PI / (2.0 * self.n as f64);
        Ok(match branch {
            Branch::Center => 0.5 * self.gamma * c / s + 0.5 * self.gamma * c / (s * s * s) * x * x,
            Branch::Edge => -0.5 * self.gamma * s / c - 0.5 * self.gamma * s / (c * c * c) * x * x,
        })
    }

    /// Bloch state over the chain for possibly complex `k` (formal
    /// `N^{-1/2}` normalization; unit norm only for real `k`).
    pub fn bloch_state(&self, k: C64) -> Vec<C64> {
        let inv = 1.0 / (self.n as f64).sqrt();
        (0..self.n)
            .map(|m| inv * (I * k * (m as f64 * self.d)).exp())
            .collect()
    }

    /// Tail-free two-wave eigenstate ansatz at the converged complex root:
    /// normalized `g_{-k} |k> - g_{k} |-k>`.
    pub fn ansatz_state(&self, xi: usize, branch: Branch) -> Result<Vec<C64>> {
        let root = self.solve_complex_k(xi, branch)?;
        let plus = self.bloch_state(root.k);
        let minus = self.bloch_state(-root.k);
        let (gp, gm) = (self.g(root.k), self.g(-root.k));
        let mut v: Vec<C64> = plus
            .iter()
            .zip(&minus)
            .map(|(p, m)| gm * p - gp * m)
            .collect();
        normalize(&mut v);
        Ok(v)
    }

    /// Leading-order form of the ansatz: `(|k0> - |-k0>) / sqrt(2)` with the
    /// real seed wavenumber, i.e. a pure standing wave.
    pub fn leading_order_state(&self, xi: usize, branch: Branch) -> Result<Vec<C64>> {
        self.check_xi(xi)?;
        let k0 = self.branch_point(branch) + xi as f64 * PI / (self.n as f64 * self.d);
        let plus = self.bloch_state(C64::new(k0, 0.0));
        let minus = self.bloch_state(C64::new(-k0, 0.0));
        let mut v: Vec<C64> = plus.iter().zip(&minus).map(|(p, m)| p - m).collect();
        normalize(&mut v);
        Ok(v)
    }

    fn pole_distance(&self, k: f64) -> f64 {
        let wrap = |q: f64| {
            let t = q.rem_euclid(2.0 * PI);
            t.min(2.0 * PI - t)
        };
        wrap((k - self.k1d) * self.d).min(wrap((k + self.k1d) * self.d))
    }

    /// Verify the exact Bloch action identity at real `k` against the dense
    /// matrix; returns the relative residual. Rejects `k` on a pole.
    pub fn bloch_action_check(&self, cfg: &ChainConfig, k: f64) -> Result<BlochActionReport> {
        let dist = self.pole_distance(k);
        if dist < EPS_POLE {
            return Err(Error::PoleProximity(dist));
        }
        let h = waveguide::build_one_excitation(cfg)?;
        let kc = C64::new(k, 0.0);
        let state = self.bloch_state(kc);
        let lhs = mat_vec(h.entries().as_ref(), &state);
        let omega = self.omega(kc);
        let (g, hh) = (self.g(kc), self.h(kc));
        let plus = self.bloch_state(C64::new(self.k1d, 0.0));
        let minus = self.bloch_state(C64::new(-self.k1d, 0.0));
        let tail_pref = -I * 0.5 * self.gamma;
        let rhs: Vec<C64> = (0..self.n)
            .map(|m| omega * state[m] + tail_pref * (g * plus[m] - hh * minus[m]))
            .collect();
        let diff: Vec<C64> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
        let rel = norm(&diff) / norm(&lhs);
        Ok(BlochActionReport {
            k,
            relative_residual: rel,
            omega,
        })
    }
}
