//! Binary-field matrix kernels: rank by bitset elimination, and the
//! symmetric rank-1/rank-2 peeling that turns a symmetric realization into a
//! clique edge decomposition.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A rectangular matrix over GF(2), one `u64` bitset per row (`cols <= 64`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl Gf2Matrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        assert!(cols <= 64);
        Gf2Matrix {
            rows,
            cols,
            data: vec![0; rows],
        }
    }

    pub fn from_rows(cols: usize, data: Vec<u64>) -> Result<Self> {
        if cols > 64 {
            return Err(Error::Capacity {
                what: "matrix columns",
                got: cols,
                limit: 64,
            });
        }
        let mask = if cols == 64 { u64::MAX } else { (1u64 << cols) - 1 };
        for (i, &row) in data.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::Parameter(format!("row {i} has bits beyond column {cols}")));
            }
        }
        Ok(Gf2Matrix {
            rows: data.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> u64 {
        self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.data[i] >> j) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        if value {
            self.data[i] |= 1u64 << j;
        } else {
            self.data[i] &= !(1u64 << j);
        }
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Gf2Matrix::new(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    t.data[j] |= 1u64 << i;
                }
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Rank over GF(2). Elimination processes rows in index order and pivots
    /// on the lowest set column bit of each reduced row.
    pub fn rank(&self) -> usize {
        rank_of_rows(self.data.iter().copied())
    }

    /// Number of pairwise-distinct rows.
    pub fn distinct_row_count(&self) -> usize {
        let mut rows = self.data.clone();
        rows.sort_unstable();
        rows.dedup();
        rows.len()
    }
}

/// Rank of an iterator of row bitsets over GF(2).
pub fn rank_of_rows(rows: impl IntoIterator<Item = u64>) -> usize {
    let mut pivots: [u64; 64] = [0; 64];
    let mut rank = 0;
    for mut row in rows {
        while row != 0 {
            let bit = row.trailing_zeros() as usize;
            if pivots[bit] == 0 {
                pivots[bit] = row;
                rank += 1;
                break;
            }
            row ^= pivots[bit];
        }
    }
    rank
}

/// A decomposition of a graph's edge set as a XOR of complete graphs, each
/// given by its vertex support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueDecomposition {
    pub n: usize,
    pub cliques: Vec<VertexSet>,
}

impl CliqueDecomposition {
    /// XOR of the complete graphs over the supports, as a graph on `n` vertices.
    pub fn recompose(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("n within capacity");
        for clique in &self.cliques {
            let verts: Vec<usize> = clique.iter().collect();
            for (a, &u) in verts.iter().enumerate() {
                for &v in &verts[a + 1..] {
                    g.toggle_edge(u, v);
                }
            }
        }
        g
    }

    /// Supports of size at least two; smaller ones contribute no edges.
    pub fn edge_cliques(&self) -> Vec<VertexSet> {
        self.cliques.iter().copied().filter(|c| c.len() >= 2).collect()
    }
}

/// Writes a symmetric matrix as a XOR of rank-1 symmetric terms `v ⊗ v`,
/// returning each term's support. Rank-1 terms are peeled at nonzero diagonal
/// positions in index order; a remaining zero-diagonal rank-2 term
/// `x⊗y + y⊗x` (lexicographically least nonzero entry) is split into three
/// rank-1 terms via `(x+y)⊗(x+y) + x⊗x + y⊗y`.
///
/// At most `⌈3·rank(a)/2⌉` supports are returned, and the off-diagonal part
/// of the recomposition equals the off-diagonal part of `a`.
pub fn symmetric_decompose(a: &Gf2Matrix) -> Result<CliqueDecomposition> {
    if !a.is_symmetric() {
        return Err(Error::Domain("symmetric_decompose requires a symmetric matrix".into()));
    }
    let n = a.rows();
    let mut m = a.clone();
    let mut cliques = Vec::new();
    loop {
        // rank-1 peel at the least nonzero diagonal position
        if let Some(i) = (0..n).find(|&i| m.get(i, i)) {
            let v = m.row(i);
            for k in 0..n {
                if (v >> k) & 1 == 1 {
                    m.data[k] ^= v;
                }
            }
            cliques.push(VertexSet(v));
            continue;
        }
        // all diagonals zero: find the lexicographically least nonzero entry
        let mut pivot = None;
        'scan: for i in 0..n {
            for j in (i + 1)..n {
                if m.get(i, j) {
                    pivot = Some((i, j));
                    break 'scan;
                }
            }
        }
        let Some((i, j)) = pivot else { break };
        let x = m.row(i);
        let y = m.row(j);
        // peel x⊗y + y⊗x
        for k in 0..n {
            let mut delta = 0u64;
            if (x >> k) & 1 == 1 {
                delta ^= y;
            }
            if (y >> k) & 1 == 1 {
                delta ^= x;
            }
            m.data[k] ^= delta;
        }
        cliques.push(VertexSet(x ^ y));
        cliques.push(VertexSet(x));
        cliques.push(VertexSet(y));
    }

    let result = CliqueDecomposition { n, cliques };
    debug_assert!(offdiag_matches(a, &result));
    Ok(result)
}

fn offdiag_matches(a: &Gf2Matrix, d: &CliqueDecomposition) -> bool {
    let g = d.recompose();
    (0..a.rows()).all(|i| {
        (i + 1..a.cols()).all(|j| a.get(i, j) == g.has_edge(i, j))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_examples() {
        let ones = Gf2Matrix::from_rows(3, vec![0b111, 0b111, 0b111]).unwrap();
        assert_eq!(ones.rank(), 1);

        let id4 = Gf2Matrix::from_rows(4, vec![1, 2, 4, 8]).unwrap();
        assert_eq!(id4.rank(), 4);

        // third row is the XOR of the first two
        let dep = Gf2Matrix::from_rows(3, vec![0b011, 0b110, 0b101]).unwrap();
        assert_eq!(dep.rank(), 2);

        assert_eq!(Gf2Matrix::new(0, 5).rank(), 0);
        assert_eq!(Gf2Matrix::new(3, 0).rank(), 0);
    }

    #[test]
    fn distinct_rows_examples() {
        let ones = Gf2Matrix::from_rows(3, vec![0b111, 0b111, 0b111]).unwrap();
        assert_eq!(ones.distinct_row_count(), 1);
        let id3 = Gf2Matrix::from_rows(3, vec![1, 2, 4]).unwrap();
        assert_eq!(id3.distinct_row_count(), 3);
        assert_eq!(Gf2Matrix::new(4, 5).distinct_row_count(), 1);
    }

    #[test]
    fn decompose_complete_graph_is_one_clique() {
        // adjacency of K4 with an all-ones diagonal is rank 1
        let n = 4;
        let mut a = Gf2Matrix::new(n, n);
        for i in 0..n {
            for j in 0..n {
                a.set(i, j, true);
            }
        }
        let d = symmetric_decompose(&a).unwrap();
        assert_eq!(d.cliques, vec![VertexSet::full(n)]);
    }

    #[test]
    fn decompose_zero_diagonal_triangle() {
        // the displayed 3x3 zero-diagonal rank-2 form splits into three
        // pair cliques {1,2}, {2,3}, {1,3} (0-indexed {0,1},{1,2},{0,2})
        let a = Gf2Matrix::from_rows(3, vec![0b110, 0b101, 0b011]).unwrap();
        let d = symmetric_decompose(&a).unwrap();
        assert_eq!(d.cliques.len(), 3);
        let mut supports: Vec<u64> = d.cliques.iter().map(|c| c.bits()).collect();
        supports.sort();
        assert_eq!(supports, vec![0b011, 0b101, 0b110]);
        // XOR of the three pair-cliques is the triangle again
        let g = d.recompose();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn decompose_rejects_asymmetric() {
        let a = Gf2Matrix::from_rows(2, vec![0b10, 0b00]).unwrap();
        assert!(symmetric_decompose(&a).is_err());
    }

    fn random_matrix(rows: usize, cols: usize, seed: u64) -> Gf2Matrix {
        let mut state = seed | 1;
        let mask = if cols == 64 { u64::MAX } else { (1u64 << cols) - 1 };
        let data = (0..rows)
            .map(|_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                (state >> 3) & mask
            })
            .collect();
        Gf2Matrix::from_rows(cols, data).unwrap()
    }

    proptest! {
        #[test]
        fn rank_invariant_under_row_ops_and_transpose(rows in 1usize..10, cols in 1usize..12, seed in any::<u64>()) {
            let m = random_matrix(rows, cols, seed);
            let r = m.rank();

            // row swap
            let mut swapped = m.clone();
            swapped.data.swap(0, rows - 1);
            prop_assert_eq!(swapped.rank(), r);

            // row xor update
            if rows >= 2 {
                let mut xored = m.clone();
                let src = xored.data[0];
                xored.data[rows - 1] ^= src;
                prop_assert_eq!(xored.rank(), r);
            }

            prop_assert_eq!(m.transpose().rank(), r);
        }

        #[test]
        fn distinct_rows_bounded_by_rank(rows in 1usize..12, cols in 1usize..12, seed in any::<u64>()) {
            let m = random_matrix(rows, cols, seed);
            prop_assert!(m.distinct_row_count() <= 1usize << m.rank());
        }

        #[test]
        fn decompose_symmetric_random(n in 1usize..9, seed in any::<u64>()) {
            let mut a = Gf2Matrix::new(n, n);
            let mut state = seed | 1;
            for i in 0..n {
                for j in i..n {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                    let bit = (state >> 17) & 1 == 1;
                    a.set(i, j, bit);
                    a.set(j, i, bit);
                }
            }
            let d = symmetric_decompose(&a).unwrap();
            prop_assert!(d.cliques.len() <= (3 * a.rank()).div_ceil(2));
            let g = d.recompose();
            for i in 0..n {
                for j in (i + 1)..n {
                    prop_assert_eq!(a.get(i, j), g.has_edge(i, j));
                }
            }
        }
    }
}
