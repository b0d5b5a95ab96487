//! Consistent rotation maps on Cartesian products `G □ H`.
//!
//! The product's vertices are split into `|V_H|` clouds of `|V_G|`
//! consecutive ids; cloud `i` is a copy of `G` standing in for vertex `i` of
//! `H`. Vertex `j` of cloud `i` has id `(i - 1) * |V_G| + j`. Its first `d_G`
//! ports follow `G` inside the cloud and its last `d_H` ports jump to vertex
//! `j` of the cloud `Rot_H(i, k)`.

use alloc::format;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use crate::{Error, Result, RotationMatrix};

/// The naive partition of `1..=cloud_size*cloud_count` into consecutive clouds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CloudPartition {
    cloud_size: usize,
    cloud_count: usize,
}

impl CloudPartition {
    pub fn cloud_size(&self) -> usize {
        self.cloud_size
    }

    pub fn cloud_count(&self) -> usize {
        self.cloud_count
    }

    pub fn num_vertices(&self) -> usize {
        self.cloud_size * self.cloud_count
    }

    /// Vertex ids of cloud `i` (1-indexed).
    pub fn cloud(&self, i: usize) -> RangeInclusive<usize> {
        assert!(i >= 1 && i <= self.cloud_count, "cloud {i} out of range");
        (i - 1) * self.cloud_size + 1..=i * self.cloud_size
    }

    pub fn clouds(&self) -> impl Iterator<Item = RangeInclusive<usize>> + '_ {
        (1..=self.cloud_count).map(|i| self.cloud(i))
    }

    /// `(cloud, position)` of a product vertex.
    pub fn locate(&self, vertex: usize) -> (usize, usize) {
        assert!(vertex >= 1 && vertex <= self.num_vertices(), "vertex {vertex} out of range");
        ((vertex - 1) / self.cloud_size + 1, (vertex - 1) % self.cloud_size + 1)
    }

    /// Id of vertex `j` of cloud `i`.
    pub fn vertex(&self, cloud: usize, position: usize) -> usize {
        (cloud - 1) * self.cloud_size + position
    }
}

/// Partition for `G □ H` with `|V_G| = vg` and `|V_H| = vh`.
pub fn cloud_partition(vg: usize, vh: usize) -> Result<CloudPartition> {
    if vg < 2 || vh < 2 {
        return Err(Error::Parameter {
            family: "cloud partition",
            constraint: format!("both sizes >= 2 (got {vg} and {vh})"),
        });
    }
    Ok(CloudPartition { cloud_size: vg, cloud_count: vh })
}

/// A dense row-major block of vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<usize>,
}

impl Block {
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        Self {
            rows: rows.len(),
            cols,
            entries: rows.iter().flat_map(|r| r.as_ref().iter().copied()).collect(),
        }
    }

    pub fn row(&self, j: usize) -> &[usize] {
        &self.entries[(j - 1) * self.cols..j * self.cols]
    }

    fn is_well_formed(&self) -> bool {
        self.entries.len() == self.rows * self.cols
    }
}

/// The `|V_H| x 2` block view of a product map: `blocks[i - 1] = [B_{i,1}, B_{i,2}]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockLayout {
    pub blocks: Vec<[Block; 2]>,
}

impl BlockLayout {
    pub fn block(&self, i: usize, j: usize) -> &Block {
        &self.blocks[i - 1][j - 1]
    }
}

/// Builds the block view of `G □ H` from the two factor maps.
///
/// `B_{i,1}` is `Rot_G` shifted by `(i - 1) |V_G|`, and row `j`, column `k`
/// of `B_{i,2}` is vertex `j` of cloud `Rot_H(i, k)`.
pub fn block_layout(g: &RotationMatrix, h: &RotationMatrix) -> BlockLayout {
    let vg = g.num_vertices();
    let blocks = (1..=h.num_vertices())
        .map(|i| {
            let offset = (i - 1) * vg;
            let inner = Block {
                rows: vg,
                cols: g.degree(),
                entries: g.as_slice().iter().map(|&w| w + offset).collect(),
            };
            let outer = Block {
                rows: vg,
                cols: h.degree(),
                entries: (1..=vg)
                    .flat_map(|j| h.row(i).iter().map(move |&cloud| j + (cloud - 1) * vg))
                    .collect(),
            };
            [inner, outer]
        })
        .collect();
    BlockLayout { blocks }
}

/// Flattens a block layout into a rotation matrix, cloud by cloud.
pub fn assemble(layout: &BlockLayout) -> Result<RotationMatrix> {
    let shape = |msg: alloc::string::String| Err(Error::Shape(msg));
    if layout.blocks.len() < 2 {
        return shape(format!("need at least 2 clouds, got {}", layout.blocks.len()));
    }
    let [first_inner, first_outer] = &layout.blocks[0];
    let (rows, d_g, d_h) = (first_inner.rows, first_inner.cols, first_outer.cols);
    for (i, [inner, outer]) in (1..).zip(&layout.blocks) {
        if !inner.is_well_formed() || !outer.is_well_formed() {
            return shape(format!("blocks of cloud {i} do not match their declared size"));
        }
        if inner.rows != rows || outer.rows != rows || inner.cols != d_g || outer.cols != d_h {
            return shape(format!(
                "cloud {i} has blocks {}x{} and {}x{}, expected {rows}x{d_g} and {rows}x{d_h}",
                inner.rows, inner.cols, outer.rows, outer.cols
            ));
        }
    }

    let degree = d_g + d_h;
    let mut entries = Vec::with_capacity(layout.blocks.len() * rows * degree);
    for [inner, outer] in &layout.blocks {
        for j in 1..=rows {
            entries.extend_from_slice(inner.row(j));
            entries.extend_from_slice(outer.row(j));
        }
    }
    RotationMatrix::new(layout.blocks.len() * rows, degree, entries)
}

/// Which factor of a product was not consistent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Factor {
    /// `G`, the graph copied into every cloud.
    Inner,
    /// `H`, the graph the clouds are arranged along.
    Outer,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartesianProduct {
    pub map: RotationMatrix,
    pub partition: CloudPartition,
    /// Factors whose input map was inconsistent. When empty, `map` is
    /// consistent.
    pub inconsistent_factors: Vec<Factor>,
}

impl CartesianProduct {
    pub fn is_consistency_guaranteed(&self) -> bool {
        self.inconsistent_factors.is_empty()
    }
}

/// Rotation map of `G □ H` from rotation maps of `G` and `H`.
///
/// Both inputs must be valid rotation maps. Inconsistent inputs still give a
/// valid map, reported through [`CartesianProduct::inconsistent_factors`].
pub fn cartesian_rotation(g: &RotationMatrix, h: &RotationMatrix) -> Result<CartesianProduct> {
    g.ensure_valid()?;
    h.ensure_valid()?;
    let partition = cloud_partition(g.num_vertices(), h.num_vertices())?;
    let map = assemble(&block_layout(g, h))?;
    let inconsistent_factors = [(Factor::Inner, g), (Factor::Outer, h)]
        .into_iter()
        .filter(|(_, r)| !r.is_consistent())
        .map(|(f, _)| f)
        .collect();
    Ok(CartesianProduct { map, partition, inconsistent_factors })
}
