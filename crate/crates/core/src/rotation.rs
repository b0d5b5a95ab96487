//! Rotation maps in matrix form and in full involution form.
//!
//! The matrix form stores, for every dart `(v, i)`, only the far vertex
//! `w`. For simple graphs the far port `j` is recoverable as the unique
//! column of row `w` holding `v`, which is what [`RotationMatrix::to_full_form`]
//! does.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A vertex/port pair `(v, i)`, both 1-indexed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub vertex: usize,
    pub port: usize,
}

impl Dart {
    pub const fn new(vertex: usize, port: usize) -> Self {
        Self { vertex, port }
    }

    /// 1-indexed position `(v - 1) * d + i` of this dart in a graph of degree `d`.
    pub const fn index(self, degree: usize) -> usize {
        (self.vertex - 1) * degree + self.port
    }

    /// Inverse of [`Dart::index`].
    pub const fn from_index(index: usize, degree: usize) -> Self {
        Self {
            vertex: (index - 1) / degree + 1,
            port: (index - 1) % degree + 1,
        }
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.vertex, self.port)
    }
}

/// The `|V| x d` matrix form of a rotation map.
///
/// Construction only checks the shape and that every entry is a vertex id;
/// the structural properties of a rotation map are reported by
/// [`RotationMatrix::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RotationMatrix {
    num_vertices: usize,
    degree: usize,
    // row-major, 1-indexed vertex ids
    entries: Vec<usize>,
}

impl RotationMatrix {
    pub fn new(num_vertices: usize, degree: usize, entries: Vec<usize>) -> Result<Self> {
        if num_vertices < 2 || degree == 0 {
            return Err(Error::Degenerate { num_vertices, degree });
        }
        let expected = num_vertices * degree;
        if entries.len() != expected {
            return Err(Error::DimensionMismatch { expected, found: entries.len() });
        }
        if let Some(&vertex) = entries.iter().find(|&&w| w == 0 || w > num_vertices) {
            return Err(Error::VertexOutOfRange { vertex, num_vertices });
        }
        Ok(Self { num_vertices, degree, entries })
    }

    /// Builds a matrix from its rows, e.g. `[[2, 3], [3, 1], [1, 2]]`.
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        let degree = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * degree);
        for (row, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != degree {
                return Err(Error::RaggedRow { row: row + 1, expected: degree, found: r.len() });
            }
            entries.extend_from_slice(r);
        }
        Self::new(rows.len(), degree, entries)
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn num_darts(&self) -> usize {
        self.entries.len()
    }

    /// Far vertex of dart `(v, i)`.
    ///
    /// Panics if the dart is out of range.
    pub fn get(&self, vertex: usize, port: usize) -> usize {
        assert!(port >= 1 && port <= self.degree, "port {port} out of range");
        self.row(vertex)[port - 1]
    }

    /// Row `v` (1-indexed).
    pub fn row(&self, vertex: usize) -> &[usize] {
        assert!(vertex >= 1 && vertex <= self.num_vertices, "vertex {vertex} out of range");
        let start = (vertex - 1) * self.degree;
        &self.entries[start..start + self.degree]
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = &[usize]> + '_ {
        self.entries.chunks_exact(self.degree)
    }

    /// Column `i` (1-indexed), top to bottom.
    pub fn column(&self, port: usize) -> impl ExactSizeIterator<Item = usize> + '_ {
        assert!(port >= 1 && port <= self.degree, "port {port} out of range");
        self.entries.iter().skip(port - 1).step_by(self.degree).copied()
    }

    /// The flat row-major entries.
    pub fn as_slice(&self) -> &[usize] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.rows().map(<[usize]>::to_vec).collect()
    }

    /// Lists every structural violation of the map.
    pub fn validate(&self) -> ValidationReport {
        let n = self.num_vertices;
        let mut violations = Vec::new();

        for (v, row) in (1..).zip(self.rows()) {
            for (i, &w) in (1..).zip(row) {
                if w == v {
                    violations.push(Violation::new(ViolationKind::SelfLoop, v, i, w));
                }
                if row[..i - 1].contains(&w) {
                    violations.push(Violation::new(ViolationKind::DuplicateInRow, v, i, w));
                }
            }
        }

        // Incidence symmetry: multiplicity of w in row v equals that of v in row w.
        for (v, row) in (1..).zip(self.rows()) {
            for (i, &w) in (1..).zip(row) {
                if w == v || row[..i - 1].contains(&w) {
                    continue;
                }
                let forward = row.iter().filter(|&&x| x == w).count();
                let backward = self.row(w).iter().filter(|&&x| x == v).count();
                if forward != backward {
                    violations.push(Violation::new(ViolationKind::AsymmetricIncidence, v, i, w));
                }
            }
        }

        let mut seen = vec![0usize; n + 1];
        for i in 1..=self.degree {
            seen.iter_mut().for_each(|s| *s = 0);
            for (v, w) in (1..).zip(self.column(i)) {
                if seen[w] != 0 {
                    violations.push(Violation::new(ViolationKind::DuplicateInColumn, v, i, w));
                } else {
                    seen[w] = v;
                }
            }
        }

        let is_valid_map = violations
            .iter()
            .all(|x| x.kind == ViolationKind::DuplicateInColumn);
        let is_consistent =
            is_valid_map && violations.iter().all(|x| x.kind != ViolationKind::DuplicateInColumn);
        ValidationReport { is_valid_map, is_consistent, violations }
    }

    /// True iff every column is a permutation of `1..=|V|`.
    ///
    /// For a valid map this is the same as every vertex receiving `d`
    /// distinct incoming labels.
    pub fn is_consistent(&self) -> bool {
        let mut seen = vec![false; self.num_vertices + 1];
        (1..=self.degree).all(|i| {
            seen.iter_mut().for_each(|s| *s = false);
            self.column(i).all(|w| !core::mem::replace(&mut seen[w], true))
        })
    }

    /// Ports on which edges arrive at `w`, sorted ascending, with multiplicity.
    pub fn incoming_labels(&self, w: usize) -> Result<Vec<usize>> {
        if w == 0 || w > self.num_vertices {
            return Err(Error::VertexOutOfRange { vertex: w, num_vertices: self.num_vertices });
        }
        let mut labels: Vec<usize> = self
            .rows()
            .flat_map(|row| (1..).zip(row).filter(|&(_, &x)| x == w).map(|(i, _)| i))
            .collect();
        labels.sort_unstable();
        Ok(labels)
    }

    /// The port `j` at the far end of dart `(v, i)`.
    pub fn return_port(&self, vertex: usize, port: usize) -> Result<usize> {
        let w = self.get(vertex, port);
        let row = self.row(w);
        match row.iter().filter(|&&x| x == vertex).count() {
            1 => Ok(row.iter().position(|&x| x == vertex).unwrap() + 1),
            count => Err(Error::MalformedMap { row: w, vertex, count }),
        }
    }

    /// Recovers the full involution `(v, i) -> (w, j)`.
    pub fn to_full_form(&self) -> Result<RotationTable> {
        let mut images = Vec::with_capacity(self.num_darts());
        for v in 1..=self.num_vertices {
            for i in 1..=self.degree {
                let w = self.get(v, i);
                let j = self.return_port(v, i)?;
                images.push(Dart::new(w, j));
            }
        }
        Ok(RotationTable { num_vertices: self.num_vertices, degree: self.degree, images })
    }

    /// Fails with the first violation unless the map is a valid rotation map.
    pub fn ensure_valid(&self) -> Result<()> {
        match self.validate().first_structural_violation() {
            Some(v) => Err(Error::InvalidMap(*v)),
            None => Ok(()),
        }
    }
}

impl fmt::Display for RotationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            for (k, w) in row.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{w}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

/// The full form `Rot(v, i) = (w, j)` of a rotation map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationTable {
    num_vertices: usize,
    degree: usize,
    images: Vec<Dart>,
}

impl RotationTable {
    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        let d = self.degree;
        (1..=self.images.len()).map(move |k| Dart::from_index(k, d))
    }

    /// Image of a dart. Panics if it is out of range.
    pub fn apply(&self, dart: Dart) -> Dart {
        assert!(
            dart.vertex >= 1
                && dart.vertex <= self.num_vertices
                && dart.port >= 1
                && dart.port <= self.degree,
            "dart {dart} out of range"
        );
        self.images[dart.index(self.degree) - 1]
    }

    pub fn is_involution(&self) -> bool {
        self.darts().all(|x| self.apply(self.apply(x)) == x)
    }

    /// Drops the far ports, giving back the matrix form.
    pub fn to_matrix(&self) -> RotationMatrix {
        RotationMatrix {
            num_vertices: self.num_vertices,
            degree: self.degree,
            entries: self.images.iter().map(|d| d.vertex).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    SelfLoop,
    DuplicateInRow,
    AsymmetricIncidence,
    DuplicateInColumn,
}

impl ViolationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::SelfLoop => "self-loop",
            Self::DuplicateInRow => "duplicate-in-row",
            Self::AsymmetricIncidence => "asymmetric-incidence",
            Self::DuplicateInColumn => "duplicate-in-column",
        }
    }
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One violation, located at the dart whose entry `target` is at fault.
///
/// For `DuplicateInRow` and `DuplicateInColumn` the dart is the second (or
/// later) occurrence of `target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Violation {
    pub kind: ViolationKind,
    pub at: Dart,
    pub target: usize,
}

impl Violation {
    fn new(kind: ViolationKind, vertex: usize, port: usize, target: usize) -> Self {
        Self { kind, at: Dart::new(vertex, port), target }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Dart { vertex: v, port: i } = self.at;
        let w = self.target;
        match self.kind {
            ViolationKind::SelfLoop => write!(f, "self-loop at {}: row {v} lists itself", self.at),
            ViolationKind::DuplicateInRow => {
                write!(f, "duplicate-in-row at {}: vertex {w} repeated in row {v}", self.at)
            }
            ViolationKind::AsymmetricIncidence => write!(
                f,
                "asymmetric-incidence at {}: {w} is in row {v} but {v} is not in row {w} as often",
                self.at
            ),
            ViolationKind::DuplicateInColumn => {
                write!(f, "duplicate-in-column at {}: vertex {w} repeated in column {i}", self.at)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub is_valid_map: bool,
    pub is_consistent: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn first_structural_violation(&self) -> Option<&Violation> {
        self.violations.iter().find(|v| v.kind != ViolationKind::DuplicateInColumn)
    }

    pub fn count(&self, kind: ViolationKind) -> usize {
        self.violations.iter().filter(|v| v.kind == kind).count()
    }
}
