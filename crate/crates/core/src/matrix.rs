//! Dense `n x n` outputs of an all-pairs run.
//!
//! Both matrices are indexed `(i, j)` = "vertex `i` as seen from source `j`"
//! and stored source-major, so the column of one source is contiguous.

use crate::graph::VertexId;
use crate::weight::Weight;

/// `D[i][j]`: length of a shortest path between `i` and source `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix<W> {
    n: usize,
    data: Vec<W>,
}

impl<W: Weight> DistanceMatrix<W> {
    pub fn new(n: usize, fill: W) -> Self {
        DistanceMatrix {
            n,
            data: vec![fill; n * n],
        }
    }

    pub fn zeros(n: usize) -> Self {
        Self::new(n, W::zero())
    }

    pub fn from_rows(rows: &[Vec<W>]) -> Self {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "row {i} has wrong length");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: VertexId, j: VertexId) -> W {
        self.data[j * self.n + i]
    }

    #[inline]
    pub fn set(&mut self, i: VertexId, j: VertexId, d: W) {
        self.data[j * self.n + i] = d;
    }

    /// Distances from source `j` to every vertex.
    pub fn column(&self, j: VertexId) -> &[W] {
        &self.data[j * self.n..(j + 1) * self.n]
    }

    pub fn column_mut(&mut self, j: VertexId) -> &mut [W] {
        &mut self.data[j * self.n..(j + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<W>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

/// One cell of a [`ParentMatrix`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parent {
    /// Diagonal: the vertex is the source itself.
    NoParent,
    /// The vertex has not been reached from this source.
    NotSearched,
    Vertex(VertexId),
}

impl Parent {
    /// 1-based encoding with `-1` for no parent and `0` for not searched,
    /// a common convention in exported tables.
    pub fn to_legacy(self) -> i64 {
        match self {
            Parent::NoParent => -1,
            Parent::NotSearched => 0,
            Parent::Vertex(v) => v as i64 + 1,
        }
    }

    pub fn vertex(self) -> Option<VertexId> {
        match self {
            Parent::Vertex(v) => Some(v),
            _ => None,
        }
    }
}

const NO_PARENT: u32 = u32::MAX;
const NOT_SEARCHED: u32 = u32::MAX - 1;

/// `S[i][j]`: predecessor of `i` on the shortest path from source `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParentMatrix {
    n: usize,
    data: Vec<u32>,
}

impl ParentMatrix {
    /// Diagonal `NoParent`, everything else `NotSearched`.
    pub fn new(n: usize) -> Self {
        assert!(
            n < NOT_SEARCHED as usize,
            "too many vertices for a parent matrix"
        );
        let mut data = vec![NOT_SEARCHED; n * n];
        for j in 0..n {
            data[j * n + j] = NO_PARENT;
        }
        ParentMatrix { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: VertexId, j: VertexId) -> Parent {
        match self.data[j * self.n + i] {
            NO_PARENT => Parent::NoParent,
            NOT_SEARCHED => Parent::NotSearched,
            v => Parent::Vertex(v as usize),
        }
    }

    #[inline]
    pub fn is_searched(&self, i: VertexId, j: VertexId) -> bool {
        self.data[j * self.n + i] != NOT_SEARCHED
    }

    #[inline]
    pub fn set(&mut self, i: VertexId, j: VertexId, p: Parent) {
        self.data[j * self.n + i] = match p {
            Parent::NoParent => NO_PARENT,
            Parent::NotSearched => NOT_SEARCHED,
            Parent::Vertex(v) => v as u32,
        };
    }

    #[inline]
    pub(crate) fn set_vertex(&mut self, i: VertexId, j: VertexId, p: VertexId) {
        self.data[j * self.n + i] = p as u32;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parent_sentinels() {
        let mut s = ParentMatrix::new(3);
        assert_eq!(s.get(1, 1), Parent::NoParent);
        assert_eq!(s.get(0, 1), Parent::NotSearched);
        assert!(!s.is_searched(0, 1));
        s.set(0, 1, Parent::Vertex(2));
        assert_eq!(s.get(0, 1), Parent::Vertex(2));
        assert_eq!(s.get(0, 1).to_legacy(), 3);
        assert_eq!(Parent::NoParent.to_legacy(), -1);
        assert_eq!(Parent::NotSearched.to_legacy(), 0);
        // vertex 0 is distinguishable from "not searched"
        s.set(2, 1, Parent::Vertex(0));
        assert_eq!(s.get(2, 1), Parent::Vertex(0));
    }

    #[test]
    fn distance_layout() {
        let d = DistanceMatrix::from_rows(&[vec![0.0, 1.0], vec![2.0, 0.0]]);
        assert_eq!(d.get(0, 1), 1.0);
        assert_eq!(d.get(1, 0), 2.0);
        assert_eq!(d.column(0), &[0.0, 2.0]);
        assert_eq!(d.rows(), vec![vec![0.0, 1.0], vec![2.0, 0.0]]);
    }
}
