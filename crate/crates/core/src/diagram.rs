//! Shadings of the staircase {(i, j) : 1 <= i < j <= n} and the bijection
//! between permutations and their inversion diagrams.
//!
//! Cells are addressed (i, j) with i the row and j the column; cell (i, j)
//! records the position pair i < j.  A shading is an inversion set of some
//! permutation exactly when it is closed under the transitivity rule below.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A subset of the staircase boxes, kept sorted.
///
/// Serializes as `{"n": 6, "shaded": [[1,2],[1,3],...]}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct InversionsDiagram {
    n: usize,
    shaded: Vec<(usize, usize)>,
}

impl InversionsDiagram {
    /// Builds a diagram, checking every cell lies strictly above the diagonal.
    pub fn new(n: usize, cells: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (i, j) in cells {
            if !(1 <= i && i < j && j <= n) {
                return Err(Error::BoxOutOfRange { i, j, n });
            }
            set.insert((i, j));
        }
        Ok(InversionsDiagram {
            n,
            shaded: set.into_iter().collect(),
        })
    }

    /// The diagram of Inv(w).
    pub fn of_permutation(w: &Permutation) -> Self {
        InversionsDiagram {
            n: w.n(),
            shaded: w.inversions(),
        }
    }

    /// Every staircase cell shaded: the diagram of the longest element.
    pub fn full(n: usize) -> Self {
        let mut shaded = Vec::new();
        for i in 1..n {
            for j in (i + 1)..=n {
                shaded.push((i, j));
            }
        }
        InversionsDiagram { n, shaded }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.shaded
    }

    pub fn len(&self) -> usize {
        self.shaded.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shaded.is_empty()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.shaded.binary_search(&(i, j)).is_ok()
    }

    /// The transitivity closure test: for every triple i < j < k, cells (i, j)
    /// and (j, k) both shaded force (i, k) shaded, and both unshaded force it
    /// unshaded.  Exactly the shadings passing this test are inversion sets.
    pub fn is_valid(&self) -> bool {
        let n = self.n;
        for i in 1..=n {
            for j in (i + 1)..=n {
                for k in (j + 1)..=n {
                    let upper = self.contains(i, j);
                    let right = self.contains(j, k);
                    let base = self.contains(i, k);
                    if upper && right && !base {
                        return false;
                    }
                    if !upper && !right && base {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Recovers w from its diagram via w_i = i + #(row i) - #(column i).
    /// Fails when the shading is not transitively closed.
    pub fn to_permutation(&self) -> Result<Permutation> {
        if !self.is_valid() {
            return Err(Error::InvalidDiagram);
        }
        let n = self.n;
        let mut window = Vec::with_capacity(n);
        for i in 1..=n {
            let row = self.shaded.iter().filter(|&&(a, _)| a == i).count();
            let col = self.shaded.iter().filter(|&&(_, b)| b == i).count();
            window.push(i + row - col);
        }
        Permutation::new(window)
    }

    /// True when the shading is downward closed in each column: (i, j) shaded
    /// and i < i' < j imply (i', j) shaded.  For valid diagrams this matches
    /// dominance of the permutation.
    pub fn is_column_downward_closed(&self) -> bool {
        self.shaded
            .iter()
            .all(|&(i, j)| i == 1 || self.contains(i - 1, j))
    }

    /// Rectangle characterization of dominant shapes: for the topmost shaded
    /// box (i, j) of each column, the whole rectangle of rows 1..=i and
    /// columns i+1..=j must be shaded. Equivalent to dominance of the
    /// permutation.
    pub fn is_dominant_shape(&self) -> bool {
        for j in 2..=self.n {
            let top = (1..j).rev().find(|&i| self.contains(i, j));
            if let Some(i) = top {
                for r in 1..=i {
                    for c in (i + 1)..=j {
                        if !self.contains(r, c) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Text rendering: staircase rows printed top row (n-1) first, `#` shaded,
    /// `.` not. Row i shows columns i+1..n, left-padded so column j lines up
    /// vertically.
    pub fn render(&self) -> String {
        let n = self.n;
        let mut out = String::new();
        for i in (1..n).rev() {
            for j in 2..=n {
                if j <= i {
                    out.push(' ');
                } else {
                    out.push(if self.contains(i, j) { '#' } else { '.' });
                }
            }
            out.push('\n');
        }
        out
    }
}
