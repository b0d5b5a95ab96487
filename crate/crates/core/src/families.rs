//! Closed-form consistent rotation maps for a few graph families.
//!
//! Each generator fixes the orientation that reproduces the classic printed
//! tables, e.g. `cycle(5)` is `[[2,5],[3,1],[4,2],[5,3],[1,4]]`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::product::cartesian_rotation;
use crate::{Error, Result, RotationMatrix};

/// A family member together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Cycle { n: usize },
    Complete { n: usize },
    /// `K(n,n)`.
    CompleteBipartite { n: usize },
    GeneralizedPetersen { n: usize, s: usize },
    K2,
    Hypercube { dimension: usize },
}

impl FamilySpec {
    pub fn family_name(&self) -> &'static str {
        match self {
            Self::Cycle { .. } => "cycle",
            Self::Complete { .. } => "complete",
            Self::CompleteBipartite { .. } => "complete-bipartite",
            Self::GeneralizedPetersen { .. } => "generalized-petersen",
            Self::K2 => "k2",
            Self::Hypercube { .. } => "hypercube",
        }
    }

    pub fn check(&self) -> Result<()> {
        let fail = |constraint: alloc::string::String| {
            Err(Error::Parameter { family: self.family_name(), constraint })
        };
        match *self {
            Self::Cycle { n } | Self::Complete { n } if n < 3 => fail(format!("n >= 3 (got n = {n})")),
            Self::CompleteBipartite { n } if n < 2 => fail(format!("n >= 2 (got n = {n})")),
            Self::GeneralizedPetersen { n, .. } if n < 3 => fail(format!("n >= 3 (got n = {n})")),
            Self::GeneralizedPetersen { n, s } if s == 0 || 2 * s >= n => {
                if n % 2 == 0 && 2 * s == n {
                    fail(format!("2s != n (got n = {n}, s = {s}; the inner edges would double up)"))
                } else {
                    fail(format!("1 <= s <= (n-1)/2 = {} (got s = {s})", (n - 1) / 2))
                }
            }
            Self::Hypercube { dimension } if dimension < 1 => fail(format!("dimension >= 1 (got {dimension})")),
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<RotationMatrix> {
        match *self {
            Self::Cycle { n } => cycle(n),
            Self::Complete { n } => complete(n),
            Self::CompleteBipartite { n } => complete_bipartite(n),
            Self::GeneralizedPetersen { n, s } => generalized_petersen(n, s),
            Self::K2 => Ok(k2()),
            Self::Hypercube { dimension } => hypercube(dimension),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Cycle { n } => write!(f, "C({n})"),
            Self::Complete { n } => write!(f, "K({n})"),
            Self::CompleteBipartite { n } => write!(f, "K({n},{n})"),
            Self::GeneralizedPetersen { n, s } => write!(f, "GP({n},{s})"),
            Self::K2 => f.write_str("K(2)"),
            Self::Hypercube { dimension } => write!(f, "Q({dimension})"),
        }
    }
}

fn from_fn(n: usize, d: usize, f: impl Fn(usize, usize) -> usize) -> RotationMatrix {
    let entries: Vec<usize> = (1..=n).flat_map(|v| (1..=d).map(move |i| (v, i))).map(|(v, i)| f(v, i)).collect();
    RotationMatrix::new(n, d, entries).expect("generator produced an out-of-range entry")
}

/// The n-cycle: port 1 goes to the successor, port 2 to the predecessor.
pub fn cycle(n: usize) -> Result<RotationMatrix> {
    FamilySpec::Cycle { n }.check()?;
    Ok(from_fn(n, 2, |v, i| if i == 1 { v % n + 1 } else { (v + n - 2) % n + 1 }))
}

/// `K_n` with port `i` at `v` leading to `v + i` (mod n).
pub fn complete(n: usize) -> Result<RotationMatrix> {
    FamilySpec::Complete { n }.check()?;
    Ok(from_fn(n, n - 1, |v, i| (v - 1 + i) % n + 1))
}

/// `K(n,n)`: left side `1..=n`, right side `n+1..=2n`, port 1 is the
/// horizontal edge `v -- n+v`.
pub fn complete_bipartite(n: usize) -> Result<RotationMatrix> {
    FamilySpec::CompleteBipartite { n }.check()?;
    Ok(from_fn(2 * n, n, |v, k| {
        if v <= n {
            n + (v + k - 2) % n + 1
        } else {
            (v - n + k - 2) % n + 1
        }
    }))
}

/// `GP(n, s)`: outer cycle `1..=n`, inner star `n+1..=2n` stepping by `s`,
/// spokes `j -- n+j` on port 2 at both ends.
pub fn generalized_petersen(n: usize, s: usize) -> Result<RotationMatrix> {
    FamilySpec::GeneralizedPetersen { n, s }.check()?;
    Ok(from_fn(2 * n, 3, |v, i| {
        if v <= n {
            let j = v;
            match i {
                1 => j % n + 1,
                2 => n + j,
                _ => (j + n - 2) % n + 1,
            }
        } else {
            let j = v - n;
            match i {
                1 => n + (j - 1 + s) % n + 1,
                2 => j,
                _ => n + (j - 1 + n - s) % n + 1,
            }
        }
    }))
}

pub fn k2() -> RotationMatrix {
    from_fn(2, 1, |v, _| 3 - v)
}

/// `Q_m` as the left fold `((K2 □ K2) □ K2) ...`; port `k` flips coordinate `k`.
pub fn hypercube(dimension: usize) -> Result<RotationMatrix> {
    FamilySpec::Hypercube { dimension }.check()?;
    let k2 = k2();
    let mut acc = k2.clone();
    for _ in 1..dimension {
        acc = cartesian_rotation(&acc, &k2)?.map;
    }
    Ok(acc)
}
