//! Eigenvalues of small symmetric matrices by cyclic Jacobi rotations.

use alloc::vec::Vec;

use crate::{Error, Result};

/// Sweep budget for [`symmetric_eigenvalues`]. Jacobi converges
/// quadratically, so well-conditioned inputs finish in well under 20.
pub const MAX_SWEEPS: usize = 100;

/// Default off-diagonal Frobenius-norm target for the eigensolver.
pub const DEFAULT_JACOBI_TOL: f64 = 1e-10;

/// Default absolute tolerance for comparing two sorted spectra.
pub const DEFAULT_COMPARE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Target off-diagonal Frobenius norm for the eigensolver.
    pub jacobi: f64,
    /// Elementwise absolute tolerance when comparing sorted spectra.
    pub compare: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { jacobi: DEFAULT_JACOBI_TOL, compare: DEFAULT_COMPARE_TOL }
    }
}

/// Eigenvalues with multiplicity, sorted nonincreasing.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    tolerance: f64,
}

impl Spectrum {
    /// Wraps a list of eigenvalues, sorting it nonincreasing.
    pub fn new(mut values: Vec<f64>, tolerance: f64) -> Self {
        values.sort_unstable_by(|a, b| b.total_cmp(a));
        Self { values, tolerance }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// The multiset `{ a + b }` over all pairs, carrying the larger tolerance.
    pub fn pairwise_sums(&self, other: &Spectrum) -> Spectrum {
        let values = self
            .values
            .iter()
            .flat_map(|a| other.values.iter().map(move |b| a + b))
            .collect();
        Spectrum::new(values, self.tolerance.max(other.tolerance))
    }

    /// Largest elementwise gap between the two sorted lists, or `None` when
    /// their lengths differ.
    pub fn max_deviation(&self, other: &Spectrum) -> Option<f64> {
        (self.len() == other.len()).then(|| {
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| libm::fabs(a - b))
                .fold(0.0, f64::max)
        })
    }

    pub fn approx_eq(&self, other: &Spectrum, tol: f64) -> bool {
        self.max_deviation(other).is_some_and(|d| d <= tol)
    }
}

fn off_diagonal_norm(n: usize, a: &[f64]) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            sum += 2.0 * a[p * n + q] * a[p * n + q];
        }
    }
    libm::sqrt(sum)
}

/// All eigenvalues of the symmetric `n x n` row-major matrix `a`, sorted
/// nonincreasing.
///
/// Runs cyclic Jacobi sweeps until the off-diagonal Frobenius norm drops
/// below `tol`. Only the upper triangle is read; `a` is overwritten.
pub fn symmetric_eigenvalues(n: usize, a: &mut [f64], tol: f64) -> Result<Vec<f64>> {
    assert_eq!(a.len(), n * n, "matrix must be {n}x{n}");
    for p in 0..n {
        for q in p + 1..n {
            a[q * n + p] = a[p * n + q];
        }
    }

    let mut residual = off_diagonal_norm(n, a);
    let mut sweeps = 0;
    while residual >= tol {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, residual });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(n, a, p, q);
            }
        }
        sweeps += 1;
        residual = off_diagonal_norm(n, a);
    }

    let mut values: Vec<f64> = (0..n).map(|k| a[k * n + k]).collect();
    values.sort_unstable_by(|x, y| y.total_cmp(x));
    Ok(values)
}

/// Applies the Jacobi rotation in the `(p, q)` plane that zeroes `a[p][q]`.
fn rotate(n: usize, a: &mut [f64], p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];

    let theta = (aqq - app) / (2.0 * apq);
    let t = if libm::fabs(theta) > 1e150 {
        0.5 / theta
    } else {
        let t = 1.0 / (libm::fabs(theta) + libm::sqrt(theta * theta + 1.0));
        if theta < 0.0 { -t } else { t }
    };
    let c = 1.0 / libm::sqrt(t * t + 1.0);
    let s = t * c;
    let tau = s / (1.0 + c);

    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;

    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a[r * n + p];
        let arq = a[r * n + q];
        let new_rp = arp - s * (arq + tau * arp);
        let new_rq = arq + s * (arp - tau * arq);
        a[r * n + p] = new_rp;
        a[p * n + r] = new_rp;
        a[r * n + q] = new_rq;
        a[q * n + r] = new_rq;
    }
}
