//! The shift operator of a coined quantum walk, stored as a permutation of
//! darts rather than as an `Nd x Nd` matrix.
//!
//! Dart `(v, i)` has index `(v - 1) * d + i`. The shift sends `(v, i)` to
//! `Rot(v, i) = (w, j)`; its permutation matrix is unitary and self-inverse.

use alloc::vec::Vec;

use crate::{Dart, Error, Result, RotationMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShiftPermutation {
    degree: usize,
    // 0-based dart index -> 0-based dart index
    images: Vec<usize>,
}

impl ShiftPermutation {
    /// Wraps an arbitrary map on darts given as 1-indexed images, where
    /// `images[k - 1]` is the image of dart index `k`. The map need not be a
    /// permutation; see [`ShiftPermutation::is_permutation`].
    pub fn from_images(degree: usize, images: &[usize]) -> Result<Self> {
        let size = images.len();
        if degree == 0 || size == 0 || !size.is_multiple_of(degree) {
            return Err(Error::Shape(alloc::format!("{size} darts is not a positive multiple of degree {degree}")));
        }
        if let Some(&bad) = images.iter().find(|&&k| k == 0 || k > size) {
            return Err(Error::VertexOutOfRange { vertex: bad, num_vertices: size });
        }
        Ok(Self { degree, images: images.iter().map(|k| k - 1).collect() })
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn num_vertices(&self) -> usize {
        self.images.len() / self.degree
    }

    /// Image of the 1-indexed dart index `k`.
    pub fn image(&self, k: usize) -> usize {
        self.images[k - 1] + 1
    }

    pub fn apply(&self, dart: Dart) -> Dart {
        Dart::from_index(self.image(dart.index(self.degree)), self.degree)
    }

    /// `(dart, image)` pairs in dart order.
    pub fn pairs(&self) -> impl Iterator<Item = (Dart, Dart)> + '_ {
        (1..=self.size()).map(|k| {
            (Dart::from_index(k, self.degree), Dart::from_index(self.image(k), self.degree))
        })
    }

    pub fn is_permutation(&self) -> bool {
        let mut hit = alloc::vec![false; self.size()];
        self.images.iter().all(|&k| !core::mem::replace(&mut hit[k], true))
    }

    pub fn is_involution(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| self.images[x] == k)
    }

    /// Whether the map could come from a simple graph: it has no fixed
    /// darts and never sends a dart back to its own vertex.
    pub fn is_graphical(&self) -> bool {
        self.pairs().all(|(x, y)| x.vertex != y.vertex)
    }
}

/// The shift permutation of a valid rotation map.
///
/// Consistency is not required for the permutation to be defined; callers
/// that need the consistent-map guarantee should check
/// [`RotationMatrix::is_consistent`] themselves.
pub fn build_shift(r: &RotationMatrix) -> Result<ShiftPermutation> {
    r.ensure_valid()?;
    let table = r.to_full_form()?;
    let d = r.degree();
    let images = table.darts().map(|x| table.apply(x).index(d) - 1).collect();
    Ok(ShiftPermutation { degree: d, images })
}

/// True iff the shift is a bijection and an involution, i.e. its 0/1
/// matrix is unitary and equal to its own inverse.
pub fn verify_unitary(s: &ShiftPermutation) -> bool {
    s.is_permutation() && s.is_involution()
}
