//! Specializations for permutations with at most one descent: the Young
//! diagram hiding inside the staircase shading, reverse SSYT and flagged
//! SSYT extractions, and skew fillings for nested pairs together with their
//! tableaux skew Schubert polynomial.
//!
//! Throughout, a k-Grassmannian permutation is one whose only descent (if
//! any) sits at position k, written a_1 < ... < a_k | b_1 < ... < b_{n-k}.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::{Partition, SparsePolynomial};
use crate::tableau::InversionsTableau;

/// Row monotonicity of a semistandard filling; columns are strict in the
/// same direction.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TableauMode {
    WeaklyIncreasing,
    WeaklyDecreasing,
}

/// A (possibly skew, possibly flagged) semistandard filling stored row by
/// row.  Serializes as `{"outer":[...], "inner":[...], "rows":[[...],...]}`
/// plus `"flags"` when present.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Tableau {
    outer: Partition,
    inner: Partition,
    rows: Vec<Vec<u32>>,
    #[serde(skip)]
    mode: TableauMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    flags: Option<Vec<u32>>,
}

impl Tableau {
    pub fn new(
        outer: Partition,
        inner: Partition,
        rows: Vec<Vec<u32>>,
        mode: TableauMode,
        flags: Option<Vec<u32>>,
    ) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotNested(format!(
                "inner shape {:?} does not fit in outer shape {:?}",
                inner.parts(),
                outer.parts()
            )));
        }
        if rows.len() != outer.rows() {
            return Err(Error::InvalidTableau(format!(
                "{} rows for a {}-row shape",
                rows.len(),
                outer.rows()
            )));
        }
        let t = Tableau {
            outer,
            inner,
            rows,
            mode,
            flags,
        };
        for i in 1..=t.outer.rows() {
            let row = &t.rows[i - 1];
            if row.len() != (t.outer.part(i) - t.inner.part(i)) as usize {
                return Err(Error::InvalidTableau(format!("row {i} has the wrong length")));
            }
            if row.contains(&0) {
                return Err(Error::InvalidTableau("entries must be positive".into()));
            }
            let row_ok = match t.mode {
                TableauMode::WeaklyIncreasing => row.windows(2).all(|p| p[0] <= p[1]),
                TableauMode::WeaklyDecreasing => row.windows(2).all(|p| p[0] >= p[1]),
            };
            if !row_ok {
                return Err(Error::InvalidTableau(format!(
                    "row {i} is not weakly monotone"
                )));
            }
            if let Some(flags) = &t.flags {
                if flags.windows(2).any(|p| p[0] > p[1]) {
                    return Err(Error::InvalidFlags(
                        "flags must be weakly increasing".into(),
                    ));
                }
                let flag = flags.get(i - 1).copied().ok_or_else(|| {
                    Error::InvalidFlags(format!("no flag for row {i}"))
                })?;
                if row.iter().any(|&v| v > flag) {
                    return Err(Error::InvalidTableau(format!(
                        "row {i} exceeds its flag {flag}"
                    )));
                }
            }
            if i > 1 {
                for j in (t.inner.part(i) + 1)..=t.outer.part(i) {
                    let (Some(above), Some(cur)) =
                        (t.entry(i - 1, j as usize), t.entry(i, j as usize))
                    else {
                        continue;
                    };
                    let col_ok = match t.mode {
                        TableauMode::WeaklyIncreasing => above < cur,
                        TableauMode::WeaklyDecreasing => above > cur,
                    };
                    if !col_ok {
                        return Err(Error::InvalidTableau(format!(
                            "column {j} is not strict between rows {} and {i}",
                            i - 1
                        )));
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn empty(mode: TableauMode) -> Self {
        Tableau {
            outer: Partition::empty(),
            inner: Partition::empty(),
            rows: Vec::new(),
            mode,
            flags: None,
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn mode(&self) -> TableauMode {
        self.mode
    }

    pub fn flags(&self) -> Option<&[u32]> {
        self.flags.as_deref()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    /// The entry in row i, column j of the ambient grid, when that cell
    /// belongs to the shape.
    pub fn entry(&self, i: usize, j: usize) -> Option<u32> {
        if i == 0 || i > self.outer.rows() {
            return None;
        }
        let (lo, hi) = (self.inner.part(i), self.outer.part(i));
        let j32 = j as u32;
        if j32 <= lo || j32 > hi {
            return None;
        }
        Some(self.rows[i - 1][(j32 - lo - 1) as usize])
    }

    pub fn weight(&self, arity: usize) -> Result<Vec<u32>> {
        let mut counts = vec![0u32; arity];
        for row in &self.rows {
            for &v in row {
                if v as usize > arity {
                    return Err(Error::VariableOutOfRange {
                        i: v as usize,
                        arity,
                    });
                }
                counts[v as usize - 1] += 1;
            }
        }
        Ok(counts)
    }
}

/// Checks that the only descent of w (if any) is at position k.
fn require_grassmannian(w: &Permutation, k: usize) -> Result<()> {
    if k == 0 || k >= w.n() || w.descents().iter().any(|&d| d != k) {
        return Err(Error::NotGrassmannian { k });
    }
    Ok(())
}

/// The partition (a_k - k, ..., a_2 - 2, a_1 - 1) carved out of the first
/// ascending run of a k-Grassmannian permutation.
pub fn lambda_of(w: &Permutation, k: usize) -> Result<Partition> {
    require_grassmannian(w, k)?;
    let parts = (1..=k)
        .rev()
        .map(|i| (w.at(i) - i) as u32)
        .collect::<Vec<_>>();
    Partition::new(parts)
}

/// Reads the shaded boxes of a Grassmannian inversions tableau as a reverse
/// SSYT: the box (i, j) of the staircase becomes the cell
/// (k + 1 - i, j - k) of a Young diagram of shape lambda_of(w, k).
pub fn it_to_reverse_ssyt(t: &InversionsTableau) -> Result<Tableau> {
    let w = t.permutation();
    if w.length() == 0 {
        return Ok(Tableau::empty(TableauMode::WeaklyDecreasing));
    }
    let k = w.is_grassmannian().ok_or(Error::NotGrassmannian {
        k: w.descents()[0],
    })?;
    let lambda = lambda_of(&w, k)?;
    let mut rows = Vec::with_capacity(lambda.rows());
    for r in 1..=lambda.rows() {
        let i = k + 1 - r;
        let mut row = Vec::with_capacity(lambda.part(r) as usize);
        for c in 1..=lambda.part(r) as usize {
            let v = t.get(i, k + c);
            if v == 0 {
                return Err(Error::Internal(
                    "Grassmannian shading does not match its partition".into(),
                ));
            }
            row.push(v);
        }
        rows.push(row);
    }
    Tableau::new(
        lambda,
        Partition::empty(),
        rows,
        TableauMode::WeaklyDecreasing,
        None,
    )
}

/// Inverse of `it_to_reverse_ssyt`: anchors the reverse SSYT at box
/// (k, k+1) of the staircase and rebuilds the inversions tableau of w.
pub fn reverse_ssyt_to_it(
    r: &Tableau,
    w: &Permutation,
    k: usize,
) -> Result<InversionsTableau> {
    require_grassmannian(w, k)?;
    if r.mode() != TableauMode::WeaklyDecreasing || !r.inner().is_empty() {
        return Err(Error::InvalidTableau(
            "expected a straight-shape reverse tableau".into(),
        ));
    }
    let lambda = lambda_of(w, k)?;
    if *r.outer() != lambda {
        return Err(Error::InvalidTableau(format!(
            "shape {:?} does not match the permutation's partition {:?}",
            r.outer().parts(),
            lambda.parts()
        )));
    }
    let mut entries = BTreeMap::new();
    for row in 1..=lambda.rows() {
        for c in 1..=lambda.part(row) as usize {
            let v = r.entry(row, c).expect("cell inside the shape");
            if v as usize > k {
                return Err(Error::InvalidTableau(format!(
                    "entry {v} exceeds the descent position {k}"
                )));
            }
            entries.insert((k + 1 - row, k + c), v);
        }
    }
    InversionsTableau::for_permutation(w, entries)
}

/// All reverse SSYT of straight shape `shape` with entries in 1..=max.
pub fn enumerate_reverse_ssyt(shape: &Partition, max: u32) -> Vec<Tableau> {
    enumerate_semistandard(shape, &vec![max; shape.rows()], TableauMode::WeaklyDecreasing)
        .into_iter()
        .map(|rows| {
            Tableau::new(
                shape.clone(),
                Partition::empty(),
                rows,
                TableauMode::WeaklyDecreasing,
                None,
            )
            .expect("enumerated filling is semistandard")
        })
        .collect()
}

/// All SSYT of straight shape `shape` with row i entries at most flags[i-1].
pub fn enumerate_flagged_ssyt(shape: &Partition, flags: &[u32]) -> Result<Vec<Tableau>> {
    if flags.windows(2).any(|p| p[0] > p[1]) {
        return Err(Error::InvalidFlags(format!(
            "{flags:?} is not weakly increasing"
        )));
    }
    if flags.len() < shape.rows() {
        return Err(Error::InvalidFlags(format!(
            "{} flags cannot cover {} rows",
            flags.len(),
            shape.rows()
        )));
    }
    let caps = flags[..shape.rows()].to_vec();
    Ok(
        enumerate_semistandard(shape, &caps, TableauMode::WeaklyIncreasing)
            .into_iter()
            .map(|rows| {
                Tableau::new(
                    shape.clone(),
                    Partition::empty(),
                    rows,
                    TableauMode::WeaklyIncreasing,
                    Some(caps.clone()),
                )
                .expect("enumerated filling is semistandard")
            })
            .collect(),
    )
}

/// Backtracking over the cells of a straight shape in row-major order; the
/// caps bound each row's entries from above.
fn enumerate_semistandard(
    shape: &Partition,
    caps: &[u32],
    mode: TableauMode,
) -> Vec<Vec<Vec<u32>>> {
    fn rec(
        shape: &Partition,
        caps: &[u32],
        mode: TableauMode,
        cells: &[(usize, usize)],
        k: usize,
        grid: &mut Vec<Vec<u32>>,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if k == cells.len() {
            out.push(
                (1..=shape.rows())
                    .map(|i| grid[i][1..=shape.part(i) as usize].to_vec())
                    .collect(),
            );
            return;
        }
        let (i, j) = cells[k];
        let (mut low, mut high) = (1u32, caps[i - 1]);
        match mode {
            TableauMode::WeaklyIncreasing => {
                if j > 1 {
                    low = low.max(grid[i][j - 1]);
                }
                if i > 1 && j as u32 <= shape.part(i - 1) {
                    low = low.max(grid[i - 1][j] + 1);
                }
            }
            TableauMode::WeaklyDecreasing => {
                if j > 1 {
                    high = high.min(grid[i][j - 1]);
                }
                if i > 1 && j as u32 <= shape.part(i - 1) {
                    let above = grid[i - 1][j];
                    if above <= 1 {
                        return;
                    }
                    high = high.min(above - 1);
                }
            }
        }
        for v in low..=high {
            grid[i][j] = v;
            rec(shape, caps, mode, cells, k + 1, grid, out);
        }
        grid[i][j] = 0;
    }

    let cells: Vec<(usize, usize)> = (1..=shape.rows())
        .flat_map(|i| (1..=shape.part(i) as usize).map(move |j| (i, j)))
        .collect();
    let mut grid = vec![vec![0u32; shape.part(1) as usize + 1]; shape.rows() + 1];
    let mut out = Vec::new();
    rec(shape, caps, mode, &cells, 0, &mut grid, &mut out);
    out
}

/// Rotates the inversions tableau of the inverse of a k-Grassmannian
/// permutation into a flagged SSYT: writing w = a_1..a_k b_1..b_{n-k}, the
/// cell (r, c) receives T(b_r, a_{k+1-c}); the shape is (k + r - b_r)_r and
/// row r is flagged by b_r.
pub fn inverse_grassmannian_to_flagged(
    t: &InversionsTableau,
    w: &Permutation,
    k: usize,
) -> Result<Tableau> {
    require_grassmannian(w, k)?;
    if t.permutation() != w.inverse() {
        return Err(Error::InvalidTableau(
            "tableau does not belong to the inverse permutation".into(),
        ));
    }
    let mut parts = Vec::new();
    let mut flags = Vec::new();
    let mut rows = Vec::new();
    for r in 1..=(w.n() - k) {
        let b = w.at(k + r);
        if k + r <= b {
            break; // later rows only shrink: b is increasing
        }
        let width = k + r - b;
        let mut row = Vec::with_capacity(width);
        for c in 1..=width {
            let a = w.at(k + 1 - c);
            let v = t.get(b, a);
            if v == 0 {
                return Err(Error::Internal(
                    "inverse Grassmannian shading does not match its shape".into(),
                ));
            }
            row.push(v);
        }
        parts.push(width as u32);
        flags.push(b as u32);
        rows.push(row);
    }
    Tableau::new(
        Partition::new(parts)?,
        Partition::empty(),
        rows,
        TableauMode::WeaklyIncreasing,
        Some(flags),
    )
}

/// Inverse of `inverse_grassmannian_to_flagged`.
pub fn flagged_to_inverse_grassmannian(
    f: &Tableau,
    w: &Permutation,
    k: usize,
) -> Result<InversionsTableau> {
    require_grassmannian(w, k)?;
    let mut entries = BTreeMap::new();
    for r in 1..=f.outer().rows() {
        let b = w.at(k + r);
        for c in 1..=f.outer().part(r) as usize {
            let a = w.at(k + 1 - c);
            let v = f.entry(r, c).expect("cell inside the shape");
            entries.insert((b, a), v);
        }
    }
    InversionsTableau::for_permutation(&w.inverse(), entries)
}

/// All fillings of the free boxes Inv(w) \ Inv(u) such that the composite
/// filling (k on Inv(u), zero off the shading) passes the rectangle rule,
/// free boxes in one column are distinct, and free diagonal boxes (i, i+1)
/// stay at most i.  Both permutations must be k-Grassmannian with
/// Inv(u) contained in Inv(w).
pub fn enumerate_skew_it(
    w: &Permutation,
    u: &Permutation,
    k: usize,
) -> Result<Vec<BTreeMap<(usize, usize), u32>>> {
    require_grassmannian(w, k)?;
    require_grassmannian(u, k)?;
    if w.n() != u.n() {
        return Err(Error::SizeMismatch {
            expected: w.n(),
            got: u.n(),
        });
    }
    let n = w.n();
    let shaded: BTreeSet<(usize, usize)> = w.inversions().into_iter().collect();
    let pinned: BTreeSet<(usize, usize)> = u.inversions().into_iter().collect();
    if !pinned.is_subset(&shaded) {
        return Err(Error::NotNested(format!(
            "{} is not below {} in weak order",
            u.display_string(),
            w.display_string()
        )));
    }
    // Columns left to right, bottom to top within a column, so each
    // rectangle-rule triple is ready the moment its last free box is set.
    let mut free: Vec<(usize, usize)> = shaded.difference(&pinned).copied().collect();
    free.sort_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)));

    struct Search<'a> {
        n: usize,
        k: u32,
        shaded: &'a BTreeSet<(usize, usize)>,
        pinned: &'a BTreeSet<(usize, usize)>,
        free: &'a [(usize, usize)],
        assigned: BTreeMap<(usize, usize), u32>,
        out: Vec<BTreeMap<(usize, usize), u32>>,
    }

    impl Search<'_> {
        fn value(&self, b: (usize, usize)) -> Option<u32> {
            if !self.shaded.contains(&b) {
                return Some(0);
            }
            if self.pinned.contains(&b) {
                return Some(self.k);
            }
            self.assigned.get(&b).copied()
        }

        fn between_ok(&self, i: usize, y: usize, j: usize) -> bool {
            let (Some(base), Some(row), Some(col)) = (
                self.value((i, j)),
                self.value((i, y)),
                self.value((y, j)),
            ) else {
                return true; // another box completes this triple later
            };
            base >= row.min(col) && base <= row.max(col)
        }

        fn triples_through(&self, a: usize, b: usize) -> bool {
            for y in (a + 1)..b {
                if !self.between_ok(a, y, b) {
                    return false;
                }
            }
            for j in (b + 1)..=self.n {
                if !self.between_ok(a, b, j) {
                    return false;
                }
            }
            for i in 1..a {
                if !self.between_ok(i, a, b) {
                    return false;
                }
            }
            true
        }

        fn rec(&mut self, m: usize) {
            if m == self.free.len() {
                self.out.push(self.assigned.clone());
                return;
            }
            let (i, j) = self.free[m];
            let cap = if j == i + 1 {
                self.k.min(i as u32)
            } else {
                self.k
            };
            'values: for v in 1..=cap {
                for x in 1..i {
                    // distinctness among free boxes of column j
                    if !self.pinned.contains(&(x, j)) && self.assigned.get(&(x, j)) == Some(&v) {
                        continue 'values;
                    }
                }
                for x in (i + 1)..j {
                    if !self.pinned.contains(&(x, j)) && self.assigned.get(&(x, j)) == Some(&v) {
                        continue 'values;
                    }
                }
                self.assigned.insert((i, j), v);
                if self.triples_through(i, j) {
                    self.rec(m + 1);
                }
                self.assigned.remove(&(i, j));
            }
        }
    }

    let mut search = Search {
        n,
        k: k as u32,
        shaded: &shaded,
        pinned: &pinned,
        free: &free,
        assigned: BTreeMap::new(),
        out: Vec::new(),
    };
    // Triples not touching any free box never get rechecked: test them once.
    for i in 1..=n {
        for y in (i + 1)..=n {
            for j in (y + 1)..=n {
                if !search.between_ok(i, y, j) {
                    return Ok(Vec::new());
                }
            }
        }
    }
    search.rec(0);
    Ok(search.out)
}

/// The tableaux skew Schubert polynomial: the weight generating sum over
/// `enumerate_skew_it(w, u, k)` in x_1..x_k, counting free boxes only.
pub fn skew_schubert(w: &Permutation, u: &Permutation, k: usize) -> Result<SparsePolynomial> {
    let mut out = SparsePolynomial::zero(k);
    for filling in enumerate_skew_it(w, u, k)? {
        let mut exp = vec![0u32; k];
        for &v in filling.values() {
            exp[v as usize - 1] += 1;
        }
        out = &out + &SparsePolynomial::monomial(k, &exp, 1).expect("arity matches");
    }
    Ok(out)
}
