//! Dense adjacency matrices of simple regular graphs.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::spectrum::{self, Spectrum, Tolerances};
use crate::{Error, Result, RotationMatrix};

/// Symmetric 0/1 matrix with zero diagonal on at least two vertices.
///
/// Regularity is not enforced at construction; see
/// [`AdjacencyMatrix::regular_degree`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdjacencyMatrix {
    order: usize,
    entries: Vec<u8>,
}

impl AdjacencyMatrix {
    pub fn new(order: usize, entries: Vec<u8>) -> Result<Self> {
        if order < 2 {
            return Err(Error::MalformedAdjacency(format!("order {order} is below 2")));
        }
        if entries.len() != order * order {
            return Err(Error::DimensionMismatch { expected: order * order, found: entries.len() });
        }
        for u in 0..order {
            if entries[u * order + u] != 0 {
                return Err(Error::MalformedAdjacency(format!("nonzero diagonal at vertex {}", u + 1)));
            }
            for v in 0..order {
                let x = entries[u * order + v];
                if x > 1 {
                    return Err(Error::MalformedAdjacency(format!(
                        "entry ({},{}) is {x}, expected 0 or 1",
                        u + 1,
                        v + 1
                    )));
                }
                if x != entries[v * order + u] {
                    return Err(Error::MalformedAdjacency(format!(
                        "not symmetric at ({},{})",
                        u + 1,
                        v + 1
                    )));
                }
            }
        }
        Ok(Self { order, entries })
    }

    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for (row, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != order {
                return Err(Error::RaggedRow { row: row + 1, expected: order, found: r.len() });
            }
            entries.extend_from_slice(r);
        }
        Self::new(order, entries)
    }

    /// Builds the matrix from an edge list of 1-indexed vertex pairs.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut entries = vec![0u8; order * order];
        for &(u, v) in edges {
            for x in [u, v] {
                if x == 0 || x > order {
                    return Err(Error::VertexOutOfRange { vertex: x, num_vertices: order });
                }
            }
            if entries[(u - 1) * order + (v - 1)] != 0 {
                return Err(Error::MalformedAdjacency(format!("repeated edge {{{u},{v}}}")));
            }
            entries[(u - 1) * order + (v - 1)] = 1;
            entries[(v - 1) * order + (u - 1)] = 1;
        }
        Self::new(order, entries)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, u: usize, v: usize) -> bool {
        self.row(u)[v - 1] == 1
    }

    /// Row `u` (1-indexed).
    pub fn row(&self, u: usize) -> &[u8] {
        assert!(u >= 1 && u <= self.order, "vertex {u} out of range");
        &self.entries[(u - 1) * self.order..u * self.order]
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = &[u8]> + '_ {
        self.entries.chunks_exact(self.order)
    }

    /// Neighbors of `u` in increasing order.
    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (1..).zip(self.row(u)).filter(|&(_, &x)| x == 1).map(|(v, _)| v)
    }

    pub fn degree_of(&self, u: usize) -> usize {
        self.row(u).iter().filter(|&&x| x == 1).count()
    }

    /// The common degree, or the first vertex that disagrees with vertex 1.
    pub fn regular_degree(&self) -> Result<usize> {
        let expected = self.degree_of(1);
        match (2..=self.order).find(|&u| self.degree_of(u) != expected) {
            Some(vertex) => Err(Error::NotRegular { vertex, expected, found: self.degree_of(vertex) }),
            None => Ok(expected),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.entries.iter().filter(|&&x| x == 1).count() / 2
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.order + 1];
        let mut stack = vec![1];
        seen[1] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == self.order
    }

    pub fn spectrum(&self, tol: f64) -> Result<Spectrum> {
        let mut dense: Vec<f64> = self.entries.iter().map(|&x| f64::from(x)).collect();
        let values = spectrum::symmetric_eigenvalues(self.order, &mut dense, tol)?;
        Ok(Spectrum::new(values, tol))
    }
}

impl fmt::Display for AdjacencyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            for (k, x) in row.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

fn require_positive_degree(a: &AdjacencyMatrix) -> Result<usize> {
    let d = a.regular_degree()?;
    if d == 0 {
        return Err(Error::Degenerate { num_vertices: a.order(), degree: 0 });
    }
    Ok(d)
}

/// Reads a rotation map off the adjacency matrix by scanning each row left
/// to right, so row `v` lists the neighbors of `v` in increasing order.
///
/// For a connected graph of degree at least 2 the result is never
/// consistent: every neighbor of vertex 1 lists it in column 1.
pub fn rotation_from_adjacency(a: &AdjacencyMatrix) -> Result<RotationMatrix> {
    let d = require_positive_degree(a)?;
    let entries = (1..=a.order()).flat_map(|u| a.neighbors(u)).collect();
    RotationMatrix::new(a.order(), d, entries)
}

/// True iff the row-scan reading of `a` is inconsistent.
///
/// Degree 1 is rejected: the only 1-regular simple graphs are perfect
/// matchings, whose row-scan reading is always consistent.
pub fn check_row_scan_inconsistency(a: &AdjacencyMatrix) -> Result<bool> {
    let d = require_positive_degree(a)?;
    if d < 2 {
        return Err(Error::UnsupportedDegree {
            degree: d,
            reason: "the row-scan reading is only inconsistent for degree 2 or more",
        });
    }
    Ok(!rotation_from_adjacency(a)?.is_consistent())
}

/// The adjacency matrix of the graph a valid rotation map describes.
pub fn adjacency_from_rotation(r: &RotationMatrix) -> Result<AdjacencyMatrix> {
    r.ensure_valid()?;
    let n = r.num_vertices();
    let mut entries = vec![0u8; n * n];
    for (v, row) in r.rows().enumerate() {
        for &w in row {
            entries[v * n + (w - 1)] = 1;
        }
    }
    AdjacencyMatrix::new(n, entries)
}

/// The Kronecker sum `A1 ⊗ I + I ⊗ A2`.
///
/// Vertex `(x, y)` of the product, with `x` from the first factor, has index
/// `(x - 1) * |V2| + y`.
pub fn cartesian_adjacency(a1: &AdjacencyMatrix, a2: &AdjacencyMatrix) -> AdjacencyMatrix {
    let (n1, n2) = (a1.order(), a2.order());
    let n = n1 * n2;
    let mut entries = vec![0u8; n * n];
    for x in 0..n1 {
        for y in 0..n2 {
            let row = (x * n2 + y) * n;
            for x2 in 0..n1 {
                entries[row + x2 * n2 + y] += a1.entries[x * n1 + x2];
            }
            for y2 in 0..n2 {
                entries[row + x * n2 + y2] += a2.entries[y * n2 + y2];
            }
        }
    }
    AdjacencyMatrix { order: n, entries }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductProperty {
    VertexCount,
    Regularity,
    EdgeCount,
    SpectrumAdditivity,
}

impl ProductProperty {
    pub const ALL: [ProductProperty; 4] =
        [Self::VertexCount, Self::Regularity, Self::EdgeCount, Self::SpectrumAdditivity];

    pub fn describe(self) -> &'static str {
        match self {
            Self::VertexCount => "vertex count |V1|*|V2|",
            Self::Regularity => "regular of degree d1+d2",
            Self::EdgeCount => "edge count |V1|*|V2|*(d1+d2)/2",
            Self::SpectrumAdditivity => "spectrum is {lambda + mu}",
        }
    }
}

/// The four Cartesian-product properties, each with expected and observed values.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductReport {
    pub vertex_count: (usize, usize),
    /// Expected degree and the observed one (`None` if the product is not regular).
    pub regularity: (usize, Option<usize>),
    pub edge_count: (usize, usize),
    /// Largest gap between the sorted product spectrum and the sorted pairwise
    /// sums, `None` if the lengths differ.
    pub spectrum_deviation: Option<f64>,
    pub spectrum_tolerance: f64,
}

impl ProductReport {
    pub fn holds(&self, property: ProductProperty) -> bool {
        match property {
            ProductProperty::VertexCount => self.vertex_count.0 == self.vertex_count.1,
            ProductProperty::Regularity => Some(self.regularity.0) == self.regularity.1,
            ProductProperty::EdgeCount => self.edge_count.0 == self.edge_count.1,
            ProductProperty::SpectrumAdditivity => {
                self.spectrum_deviation.is_some_and(|d| d <= self.spectrum_tolerance)
            }
        }
    }

    pub fn failures(&self) -> Vec<ProductProperty> {
        ProductProperty::ALL.into_iter().filter(|&p| !self.holds(p)).collect()
    }

    pub fn all_hold(&self) -> bool {
        self.failures().is_empty()
    }
}

/// Checks vertex count, regularity, edge count and spectrum additivity of
/// `cartesian_adjacency(a1, a2)` against the factors.
pub fn product_property_check(
    a1: &AdjacencyMatrix,
    a2: &AdjacencyMatrix,
    tol: Tolerances,
) -> Result<ProductReport> {
    let d1 = a1.regular_degree()?;
    let d2 = a2.regular_degree()?;
    let (n1, n2) = (a1.order(), a2.order());
    let product = cartesian_adjacency(a1, a2);

    let expected_spectrum = a1.spectrum(tol.jacobi)?.pairwise_sums(&a2.spectrum(tol.jacobi)?);
    let observed_spectrum = product.spectrum(tol.jacobi)?;

    Ok(ProductReport {
        vertex_count: (n1 * n2, product.order()),
        regularity: (d1 + d2, product.regular_degree().ok()),
        edge_count: (n1 * n2 * (d1 + d2) / 2, product.edge_count()),
        spectrum_deviation: observed_spectrum.max_deviation(&expected_spectrum),
        spectrum_tolerance: tol.compare,
    })
}
