//! Excitation-sector bases and labeled Hamiltonian matrices.

use crate::{C64, I};
use faer::Mat;
use serde::{Deserialize, Serialize};

/// Excitation sector of the chain Hilbert space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sector {
    /// Single-excitation states `|e_m>`, dimension `N`.
    One,
    /// Doubly-excited states `|e_m, e_n>` with `m < n`, dimension `N(N-1)/2`.
    Two,
}

/// Which Hermitian component of `H = H_R - i H_I` a matrix holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MatrixPart {
    Full,
    RealPart,
    ImagPart,
}

/// Index bookkeeping for a sector basis. Two-excitation pairs are ordered
/// `m < n` (0-based site indices) and enumerated lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorBasis {
    sector: Sector,
    n_atoms: usize,
}

impl SectorBasis {
    pub fn new(sector: Sector, n_atoms: usize) -> Self {
        Self { sector, n_atoms }
    }

    pub fn sector(&self) -> Sector {
        self.sector
    }

    pub fn n_atoms(&self) -> usize {
        self.n_atoms
    }

    pub fn dimension(&self) -> usize {
        match self.sector {
            Sector::One => self.n_atoms,
            Sector::Two => self.n_atoms * (self.n_atoms - 1) / 2,
        }
    }

    /// Basis index of the ordered pair `(m, n)`, `m < n`.
    pub fn pair_index(&self, m: usize, n: usize) -> usize {
        debug_assert!(matches!(self.sector, Sector::Two));
        debug_assert!(m < n && n < self.n_atoms);
        // pairs (0,1), (0,2), ..., (0,N-1), (1,2), ...
        let nn = self.n_atoms;
        m * nn - m * (m + 1) / 2 + (n - m - 1)
    }

    /// Ordered pair `(m, n)` for a basis index.
    pub fn index_pair(&self, a: usize) -> (usize, usize) {
        debug_assert!(matches!(self.sector, Sector::Two));
        let nn = self.n_atoms;
        let mut m = 0;
        let mut offset = 0;
        loop {
            let row = nn - 1 - m;
            if a < offset + row {
                return (m, m + 1 + a - offset);
            }
            offset += row;
            m += 1;
        }
    }

    /// Iterator over ordered pairs in basis order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let nn = self.n_atoms;
        (0..nn).flat_map(move |m| (m + 1..nn).map(move |n| (m, n)))
    }
}

/// Dense complex matrix of an effective Hamiltonian (or one of its Hermitian
/// components) in a labeled sector basis. Entries are in units of rate.
#[derive(Debug, Clone)]
pub struct SectorMatrix {
    basis: SectorBasis,
    part: MatrixPart,
    entries: Mat<C64>,
}

impl SectorMatrix {
    pub fn new(basis: SectorBasis, part: MatrixPart, entries: Mat<C64>) -> Self {
        assert_eq!(entries.nrows(), basis.dimension());
        assert_eq!(entries.ncols(), basis.dimension());
        Self {
            basis,
            part,
            entries,
        }
    }

    pub fn basis(&self) -> &SectorBasis {
        &self.basis
    }

    pub fn part(&self) -> MatrixPart {
        self.part
    }

    pub fn entries(&self) -> &Mat<C64> {
        &self.entries
    }

    pub fn dimension(&self) -> usize {
        self.basis.dimension()
    }

    /// Hermitian component `H_R = (H + H^dag)/2` of a `Full` matrix.
    pub fn real_part(&self) -> SectorMatrix {
        assert_eq!(self.part, MatrixPart::Full);
        let h = &self.entries;
        let m = Mat::from_fn(h.nrows(), h.ncols(), |i, j| {
            (h[(i, j)] + h[(j, i)].conj()) * 0.5
        });
        SectorMatrix::new(self.basis, MatrixPart::RealPart, m)
    }

    /// Hermitian component `H_I = i (H - H^dag)/2`, so that `H = H_R - i H_I`.
    pub fn imag_part(&self) -> SectorMatrix {
        assert_eq!(self.part, MatrixPart::Full);
        let h = &self.entries;
        let m = Mat::from_fn(h.nrows(), h.ncols(), |i, j| {
            I * (h[(i, j)] - h[(j, i)].conj()) * 0.5
        });
        SectorMatrix::new(self.basis, MatrixPart::ImagPart, m)
    }

    /// Largest `|H[i][j] - H[j][i]|`; the site-basis Hamiltonians here are
    /// complex symmetric (reciprocity), which this measures.
    pub fn max_asymmetry(&self) -> f64 {
        let h = &self.entries;
        let mut worst = 0.0f64;
        for i in 0..h.nrows() {
            for j in (i + 1)..h.ncols() {
                worst = worst.max((h[(i, j)] - h[(j, i)]).norm());
            }
        }
        worst
    }

    /// Largest `|H[i][j] - conj(H[j][i])|` (Hermiticity defect).
    pub fn max_nonhermiticity(&self) -> f64 {
        let h = &self.entries;
        let mut worst = 0.0f64;
        for i in 0..h.nrows() {
            for j in i..h.ncols() {
                worst = worst.max((h[(i, j)] - h[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// Complex trace.
    pub fn trace(&self) -> C64 {
        (0..self.entries.nrows()).map(|i| self.entries[(i, i)]).sum()
    }
}
