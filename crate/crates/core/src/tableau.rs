//! Staircase fillings and inversions tableaux.
//!
//! A staircase filling assigns a non-negative integer to every box
//! {(i, j) : 1 <= i < j <= n}, with 0 meaning "unshaded".  An inversions
//! tableau is a positive filling of the shaded boxes of some inversions
//! diagram subject to three rules:
//!
//! * IT1 — the composite filling (zeros on unshaded boxes) is weakly
//!   balanced, equivalently satisfies the rectangle rule;
//! * IT2 — within each column the shaded entries are pairwise distinct;
//! * IT3 — each diagonal box (i, i+1) holds an entry at most i.
//!
//! Dropping IT3 and bounding entries by a cap m instead gives the unbounded
//! tableaux whose generating sums are truncated Stanley symmetric functions.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::diagram::InversionsDiagram;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// All staircase boxes for group size n, in row-major order.
pub fn staircase_boxes(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 1..n {
        for j in (i + 1)..=n {
            out.push((i, j));
        }
    }
    out
}

/// The hook of a staircase box: the box itself, the boxes above it in its
/// column, and the boxes to its left in its row.  Always of odd size
/// 2(j - i) - 1.
pub fn hook(n: usize, i: usize, j: usize) -> Result<Vec<(usize, usize)>> {
    if !(1 <= i && i < j && j <= n) {
        return Err(Error::BoxOutOfRange { i, j, n });
    }
    let mut cells = vec![(i, j)];
    cells.extend(((i + 1)..j).map(|r| (r, j)));
    cells.extend(((i + 1)..j).map(|c| (i, c)));
    Ok(cells)
}

/// A total filling of the staircase by non-negative integers; zero entries
/// are the unshaded boxes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StaircaseFilling {
    n: usize,
    values: BTreeMap<(usize, usize), u32>,
}

impl StaircaseFilling {
    /// Builds a filling from (box, value) pairs; omitted boxes are zero.
    pub fn new(n: usize, values: impl IntoIterator<Item = ((usize, usize), u32)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for ((i, j), v) in values {
            if !(1 <= i && i < j && j <= n) {
                return Err(Error::BoxOutOfRange { i, j, n });
            }
            if v > 0 {
                map.insert((i, j), v);
            }
        }
        Ok(StaircaseFilling { n, values: map })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        *self.values.get(&(i, j)).unwrap_or(&0)
    }

    /// The nonzero (shaded) boxes with their values.
    pub fn nonzero(&self) -> &BTreeMap<(usize, usize), u32> {
        &self.values
    }

    /// True when the values are a bijection onto {1, ..., n(n-1)/2}.
    pub fn is_bijective(&self) -> bool {
        let total = self.n * (self.n - 1) / 2;
        if self.values.len() != total {
            return false;
        }
        let mut seen: Vec<u32> = self.values.values().copied().collect();
        seen.sort_unstable();
        seen.iter().enumerate().all(|(t, &v)| v == t as u32 + 1)
    }

    fn median_condition(&self) -> bool {
        for &(i, j) in &staircase_boxes(self.n) {
            let cells = hook(self.n, i, j).expect("staircase box");
            let mut vals: Vec<u32> = cells.iter().map(|&(r, c)| self.get(r, c)).collect();
            vals.sort_unstable();
            if vals[(vals.len() - 1) / 2] != self.get(i, j) {
                return false;
            }
        }
        true
    }

    /// Balanced: a bijective filling in which every hook's corner value is
    /// the median of the hook's entries.
    pub fn is_balanced(&self) -> bool {
        self.is_bijective() && self.median_condition()
    }

    /// Weakly balanced: every hook's corner value is the median of the
    /// hook's multiset of entries, zeros included.
    pub fn is_weakly_balanced(&self) -> bool {
        self.median_condition()
    }

    /// The rectangle rule: for all i < j < k, the value at (i, k) lies weakly
    /// between the values at (i, j) and (j, k).  Equivalent to weak balance.
    pub fn satisfies_rectangle_rule(&self) -> bool {
        for i in 1..=self.n {
            for j in (i + 1)..=self.n {
                for k in (j + 1)..=self.n {
                    let a = self.get(i, j);
                    let b = self.get(j, k);
                    let v = self.get(i, k);
                    if v < a.min(b) || v > a.max(b) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// A positive filling of the shaded boxes of an inversions diagram.
///
/// Serializes as `{"n": 6, "entries": [[i, j, value], ...]}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "TableauJson", into = "TableauJson")]
pub struct InversionsTableau {
    n: usize,
    entries: BTreeMap<(usize, usize), u32>,
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    n: usize,
    entries: Vec<(usize, usize, u32)>,
}

impl TryFrom<TableauJson> for InversionsTableau {
    type Error = Error;
    fn try_from(t: TableauJson) -> Result<Self> {
        InversionsTableau::new(t.n, t.entries.into_iter().map(|(i, j, v)| ((i, j), v)))
    }
}

impl From<InversionsTableau> for TableauJson {
    fn from(t: InversionsTableau) -> TableauJson {
        TableauJson {
            n: t.n,
            entries: t.entries.into_iter().map(|((i, j), v)| (i, j, v)).collect(),
        }
    }
}

fn validate_filling(
    n: usize,
    entries: &BTreeMap<(usize, usize), u32>,
    diagonal_bound: bool,
) -> Result<()> {
    for (&(i, j), &v) in entries {
        if !(1 <= i && i < j && j <= n) {
            return Err(Error::BoxOutOfRange { i, j, n });
        }
        if v == 0 {
            return Err(Error::InvalidTableau(format!(
                "entry at ({i}, {j}) must be positive"
            )));
        }
    }
    // IT2: distinct entries within each column.
    let mut per_column: BTreeMap<usize, BTreeSet<u32>> = BTreeMap::new();
    for (&(i, j), &v) in entries {
        if !per_column.entry(j).or_default().insert(v) {
            return Err(Error::InvalidTableau(format!(
                "column {j} repeats entry {v} (row {i})"
            )));
        }
    }
    // IT1 via the rectangle rule on the composite filling.
    let get = |i: usize, j: usize| *entries.get(&(i, j)).unwrap_or(&0);
    for i in 1..=n {
        for j in (i + 1)..=n {
            for k in (j + 1)..=n {
                let a = get(i, j);
                let b = get(j, k);
                let v = get(i, k);
                if v < a.min(b) || v > a.max(b) {
                    return Err(Error::InvalidTableau(format!(
                        "rectangle rule fails on ({i},{j}), ({j},{k}), ({i},{k})"
                    )));
                }
            }
        }
    }
    // IT3: diagonal boxes are bounded by their row.
    if diagonal_bound {
        for (&(i, j), &v) in entries {
            if j == i + 1 && v as usize > i {
                return Err(Error::InvalidTableau(format!(
                    "diagonal box ({i}, {j}) holds {v} > {i}"
                )));
            }
        }
    }
    Ok(())
}

impl InversionsTableau {
    /// Builds an inversions tableau, enforcing IT1, IT2, and IT3.
    pub fn new(n: usize, entries: impl IntoIterator<Item = ((usize, usize), u32)>) -> Result<Self> {
        let entries: BTreeMap<_, _> = entries.into_iter().collect();
        validate_filling(n, &entries, true)?;
        Ok(InversionsTableau { n, entries })
    }

    /// Builds an unbounded tableau, enforcing IT1 and IT2 only.
    pub fn new_unbounded(
        n: usize,
        entries: impl IntoIterator<Item = ((usize, usize), u32)>,
    ) -> Result<Self> {
        let entries: BTreeMap<_, _> = entries.into_iter().collect();
        validate_filling(n, &entries, false)?;
        Ok(InversionsTableau { n, entries })
    }

    /// Builds a tableau whose shaded boxes must be exactly Inv(w).
    pub fn for_permutation(
        w: &Permutation,
        entries: impl IntoIterator<Item = ((usize, usize), u32)>,
    ) -> Result<Self> {
        let entries: BTreeMap<_, _> = entries.into_iter().collect();
        let shaded: BTreeSet<_> = w.inversions().into_iter().collect();
        for &(i, j) in entries.keys() {
            if !shaded.contains(&(i, j)) {
                return Err(Error::InvalidTableau(format!(
                    "entry on unshaded box ({i}, {j})"
                )));
            }
        }
        if entries.len() != shaded.len() {
            return Err(Error::InvalidTableau(
                "missing entry on a shaded box".into(),
            ));
        }
        InversionsTableau::new(w.n(), entries)
    }

    pub fn empty(n: usize) -> Self {
        InversionsTableau {
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        *self.entries.get(&(i, j)).unwrap_or(&0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), u32> {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn diagram(&self) -> InversionsDiagram {
        InversionsDiagram::new(self.n, self.entries.keys().copied())
            .expect("tableau boxes lie in the staircase")
    }

    /// The permutation whose inversion set is this tableau's shading.  IT1
    /// forces the shading to be transitively closed, so this cannot fail.
    pub fn permutation(&self) -> Permutation {
        self.diagram()
            .to_permutation()
            .expect("IT1 makes the shading a valid inversion set")
    }

    /// The composite staircase filling with zeros on unshaded boxes.
    pub fn to_filling(&self) -> StaircaseFilling {
        StaircaseFilling {
            n: self.n,
            values: self.entries.clone(),
        }
    }

    /// The weight (m_1, ..., m_arity) where m_v counts boxes with entry v.
    pub fn weight(&self, arity: usize) -> Result<Vec<u32>> {
        let mut counts = vec![0u32; arity];
        for &v in self.entries.values() {
            if v as usize > arity {
                return Err(Error::VariableOutOfRange {
                    i: v as usize,
                    arity,
                });
            }
            counts[v as usize - 1] += 1;
        }
        Ok(counts)
    }

    /// IT3 as stated: every diagonal entry T(i, i+1) is at most i.
    pub fn satisfies_diagonal_bound(&self) -> bool {
        self.entries
            .iter()
            .all(|(&(i, j), &v)| j != i + 1 || v as usize <= i)
    }

    /// IT3' as stated: every entry in row i is at most i.
    pub fn satisfies_row_bound(&self) -> bool {
        self.entries.iter().all(|(&(i, _), &v)| v as usize <= i)
    }
}

/// Backtracking enumeration over the shaded boxes of Inv(w), columns left to
/// right and rows top to bottom within a column, so that every rectangle-rule
/// triple is fully determined the moment its base box is filled.
fn enumerate_fillings(w: &Permutation, cap_for_row: impl Fn(usize) -> u32) -> Vec<BTreeMap<(usize, usize), u32>> {
    let mut boxes = w.inversions();
    boxes.sort_by(|&(i1, j1), &(i2, j2)| j1.cmp(&j2).then(i2.cmp(&i1)));
    let n = w.n();
    let mut out = Vec::new();
    let mut placed: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    let mut used: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); n + 1];

    fn rec(
        boxes: &[(usize, usize)],
        depth: usize,
        cap_for_row: &impl Fn(usize) -> u32,
        placed: &mut BTreeMap<(usize, usize), u32>,
        used: &mut Vec<BTreeSet<u32>>,
        out: &mut Vec<BTreeMap<(usize, usize), u32>>,
    ) {
        if depth == boxes.len() {
            out.push(placed.clone());
            return;
        }
        let (i, k) = boxes[depth];
        'cand: for v in 1..=cap_for_row(i) {
            if used[k].contains(&v) {
                continue;
            }
            for j in (i + 1)..k {
                let a = *placed.get(&(i, j)).unwrap_or(&0);
                let b = *placed.get(&(j, k)).unwrap_or(&0);
                if v < a.min(b) || v > a.max(b) {
                    continue 'cand;
                }
            }
            placed.insert((i, k), v);
            used[k].insert(v);
            rec(boxes, depth + 1, cap_for_row, placed, used, out);
            placed.remove(&(i, k));
            used[k].remove(&v);
        }
    }

    rec(&boxes, 0, &cap_for_row, &mut placed, &mut used, &mut out);
    out
}

/// All inversions tableaux of w.  The generating sum of their weights is the
/// Schubert polynomial of w.
pub fn enumerate_it(w: &Permutation) -> Vec<InversionsTableau> {
    enumerate_fillings(w, |row| row as u32)
        .into_iter()
        .map(|entries| {
            InversionsTableau::new(w.n(), entries).expect("enumerated filling satisfies the rules")
        })
        .collect()
}

/// All unbounded tableaux of w with entries at most m (IT1 and IT2 only).
pub fn enumerate_uit(w: &Permutation, m: u32) -> Vec<InversionsTableau> {
    enumerate_fillings(w, |_| m)
        .into_iter()
        .map(|entries| {
            InversionsTableau::new_unbounded(w.n(), entries)
                .expect("enumerated filling satisfies IT1 and IT2")
        })
        .collect()
}

/// The tableau filling every shaded box with its row number; its weight is
/// the Lehmer-code exponent vector, the lex-maximal Schubert monomial.
pub fn lex_max_tableau(w: &Permutation) -> Result<InversionsTableau> {
    InversionsTableau::new(w.n(), w.inversions().into_iter().map(|(i, j)| ((i, j), i as u32)))
}

/// The tableau filling each column bottom to top with 1, 2, 3, ...; its
/// weight is the lex-minimal Schubert monomial.
pub fn lex_min_tableau(w: &Permutation) -> Result<InversionsTableau> {
    let mut entries = BTreeMap::new();
    let mut next_in_column: BTreeMap<usize, u32> = BTreeMap::new();
    // Inversions come sorted row-major; per column, ascending row order is
    // what the bottom-to-top fill needs, and row-major delivers exactly that.
    for (i, j) in w.inversions() {
        let slot = next_in_column.entry(j).or_insert(0);
        *slot += 1;
        entries.insert((i, j), *slot);
    }
    InversionsTableau::new(w.n(), entries)
}

/// True when the set stays a valid inversion set after removing one box.
/// Only triples through the removed box can break, so the scan is linear.
fn still_valid_after_removal(s: &BTreeSet<(usize, usize)>, n: usize, b: (usize, usize)) -> bool {
    let (i, j) = b;
    for y in (i + 1)..j {
        if s.contains(&(i, y)) && s.contains(&(y, j)) {
            return false;
        }
    }
    for x in 1..i {
        if !s.contains(&(x, i)) && s.contains(&(x, j)) {
            return false;
        }
    }
    for z in (j + 1)..=n {
        if !s.contains(&(j, z)) && s.contains(&(i, z)) {
            return false;
        }
    }
    true
}

/// A total order on all staircase boxes that is weakly increasing in the
/// tableau's entries (unshaded boxes first) and whose prefixes are all valid
/// inversion sets; relabelling boxes by their position yields a balanced
/// filling.  Built backwards by repeatedly removing, among the boxes of
/// maximal entry whose removal keeps the set valid, the leftmost-column one.
pub fn balanced_extension(t: &InversionsTableau) -> Result<Vec<(usize, usize)>> {
    let n = t.n();
    let mut current: BTreeSet<(usize, usize)> = staircase_boxes(n).into_iter().collect();
    let mut removal: Vec<(usize, usize)> = Vec::with_capacity(current.len());

    fn rec(
        t: &InversionsTableau,
        n: usize,
        current: &mut BTreeSet<(usize, usize)>,
        removal: &mut Vec<(usize, usize)>,
    ) -> bool {
        if current.is_empty() {
            return true;
        }
        let max_entry = current.iter().map(|&(i, j)| t.get(i, j)).max().unwrap();
        let mut candidates: Vec<(usize, usize)> = current
            .iter()
            .copied()
            .filter(|&(i, j)| t.get(i, j) == max_entry)
            .collect();
        candidates.sort_by(|&(i1, j1), &(i2, j2)| j1.cmp(&j2).then(i1.cmp(&i2)));
        for b in candidates {
            if !still_valid_after_removal(current, n, b) {
                continue;
            }
            current.remove(&b);
            removal.push(b);
            if rec(t, n, current, removal) {
                return true;
            }
            removal.pop();
            current.insert(b);
        }
        false
    }

    if !rec(t, n, &mut current, &mut removal) {
        return Err(Error::Internal(
            "no balanced extension found for an IT1 tableau".into(),
        ));
    }
    removal.reverse();
    Ok(removal)
}

/// Relabels the boxes 1..N by their position in the given total order.
pub fn relabel_by_order(n: usize, order: &[(usize, usize)]) -> Result<StaircaseFilling> {
    let boxes = staircase_boxes(n);
    if order.len() != boxes.len()
        || order.iter().collect::<BTreeSet<_>>().len() != boxes.len()
    {
        return Err(Error::InvalidTableau(
            "order must list every staircase box exactly once".into(),
        ));
    }
    StaircaseFilling::new(
        n,
        order
            .iter()
            .enumerate()
            .map(|(idx, &b)| (b, idx as u32 + 1)),
    )
}

/// Converts a saturated weak-order chain from the identity to the longest
/// element into the balanced filling recording when each box entered the
/// inversion set.
pub fn chain_to_balanced(chain: &[Permutation]) -> Result<StaircaseFilling> {
    let first = chain
        .first()
        .ok_or_else(|| Error::InvalidChain("empty chain".into()))?;
    let n = first.n();
    if *first != Permutation::identity(n) {
        return Err(Error::InvalidChain("chain must start at the identity".into()));
    }
    if *chain.last().unwrap() != Permutation::longest(n) {
        return Err(Error::InvalidChain(
            "chain must end at the longest element".into(),
        ));
    }
    let mut values = BTreeMap::new();
    let mut previous: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (step, pair) in chain.windows(2).enumerate() {
        if pair[1].n() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                got: pair[1].n(),
            });
        }
        let next: BTreeSet<(usize, usize)> = pair[1].inversions().into_iter().collect();
        let added: Vec<_> = next.difference(&previous).copied().collect();
        if added.len() != 1 || next.len() != previous.len() + 1 {
            return Err(Error::InvalidChain(format!(
                "step {} -> {} is not a weak-order cover",
                pair[0], pair[1]
            )));
        }
        values.insert(added[0], step as u32 + 1);
        previous = next;
    }
    StaircaseFilling::new(n, values)
}

/// Inverse of [`chain_to_balanced`]: reads the chain off a balanced filling.
pub fn balanced_to_chain(b: &StaircaseFilling) -> Result<Vec<Permutation>> {
    if !b.is_bijective() {
        return Err(Error::InvalidTableau(
            "chain extraction needs a bijective filling".into(),
        ));
    }
    let n = b.n();
    let mut boxes: Vec<(usize, usize)> = staircase_boxes(n);
    boxes.sort_by_key(|&(i, j)| b.get(i, j));
    let mut chain = vec![Permutation::identity(n)];
    let mut shaded: Vec<(usize, usize)> = Vec::new();
    for &(i, j) in &boxes {
        shaded.push((i, j));
        let d = InversionsDiagram::new(n, shaded.iter().copied())?;
        chain.push(d.to_permutation().map_err(|_| {
            Error::InvalidTableau(format!(
                "prefix through box ({i}, {j}) is not an inversion set; filling is not balanced"
            ))
        })?);
    }
    Ok(chain)
}

/// All saturated chains of the weak order from the identity to the longest
/// element of S_n.  Covers are left multiplications by adjacent
/// transpositions that add one inversion.
pub fn maximal_weak_chains(n: usize) -> Vec<Vec<Permutation>> {
    fn rec(u: &Permutation, chain: &mut Vec<Permutation>, out: &mut Vec<Vec<Permutation>>) {
        let mut extended = false;
        for i in 1..u.n() {
            let v = u.left_mul_adjacent(i).unwrap();
            if v.length() == u.length() + 1 {
                extended = true;
                chain.push(v.clone());
                rec(&v, chain, out);
                chain.pop();
            }
        }
        if !extended {
            out.push(chain.clone());
        }
    }
    let id = Permutation::identity(n);
    let mut out = Vec::new();
    rec(&id.clone(), &mut vec![id], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Permutation {
        Permutation::parse(text).unwrap()
    }

    fn filling(n: usize, v: &[((usize, usize), u32)]) -> StaircaseFilling {
        StaircaseFilling::new(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn hook_shapes() {
        assert_eq!(hook(4, 1, 3).unwrap(), vec![(1, 3), (2, 3), (1, 2)]);
        assert_eq!(hook(5, 2, 3).unwrap(), vec![(2, 3)]);
        assert_eq!(hook(6, 1, 6).unwrap().len(), 9);
        for n in 2..=6 {
            for &(i, j) in &staircase_boxes(n) {
                assert_eq!(hook(n, i, j).unwrap().len(), 2 * (j - i) - 1);
            }
        }
        assert!(hook(4, 3, 3).is_err());
        assert!(hook(4, 1, 5).is_err());
    }

    #[test]
    fn balance_on_small_fillings() {
        let b = filling(3, &[((1, 2), 1), ((1, 3), 2), ((2, 3), 3)]);
        assert!(b.is_balanced());
        let not = filling(3, &[((1, 2), 1), ((1, 3), 3), ((2, 3), 2)]);
        assert!(!not.is_balanced());
        assert!(filling(3, &[]).is_weakly_balanced());
        assert!(!filling(3, &[]).is_balanced());
    }

    #[test]
    fn exactly_two_balanced_fillings_for_s3() {
        use itertools::Itertools;
        let boxes = staircase_boxes(3);
        let balanced = (1..=3u32)
            .permutations(3)
            .filter(|vals| {
                let f = filling(
                    3,
                    &boxes
                        .iter()
                        .copied()
                        .zip(vals.iter().copied())
                        .collect::<Vec<_>>(),
                );
                f.is_balanced()
            })
            .count();
        assert_eq!(balanced, 2);
        assert_eq!(maximal_weak_chains(3).len(), 2);
    }

    #[test]
    fn weak_balance_equals_rectangle_rule_exhaustively() {
        // Every filling of the n = 4 staircase over {0, 1, 2}.
        let boxes = staircase_boxes(4);
        let mut fillings = 0;
        for code in 0..3u32.pow(6) {
            let mut c = code;
            let mut values = Vec::new();
            for &b in &boxes {
                values.push((b, c % 3));
                c /= 3;
            }
            let f = filling(4, &values);
            assert_eq!(f.is_weakly_balanced(), f.satisfies_rectangle_rule());
            fillings += 1;
        }
        assert_eq!(fillings, 729);
    }

    #[test]
    fn paper_tableau_for_431562_is_valid() {
        let t = InversionsTableau::for_permutation(
            &p("431562"),
            [
                ((1, 2), 1),
                ((1, 3), 1),
                ((1, 6), 1),
                ((2, 3), 2),
                ((2, 6), 2),
                ((4, 6), 4),
                ((5, 6), 5),
            ],
        )
        .unwrap();
        assert_eq!(t.permutation(), p("431562"));
        assert_eq!(t.weight(5).unwrap(), vec![3, 2, 0, 1, 1]);
        assert!(t.satisfies_diagonal_bound() && t.satisfies_row_bound());
    }

    #[test]
    fn row_bound_violation_is_rejected() {
        let bad = InversionsTableau::for_permutation(
            &p("431562"),
            [
                ((1, 2), 1),
                ((1, 3), 1),
                ((1, 6), 1),
                ((2, 3), 2),
                ((2, 6), 2),
                ((4, 6), 4),
                ((5, 6), 6),
            ],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn unshaded_and_missing_boxes_are_rejected() {
        assert!(InversionsTableau::for_permutation(&p("21"), [((1, 2), 1), ((1, 3), 1)]).is_err());
        assert!(InversionsTableau::for_permutation(&p("321"), [((1, 2), 1)]).is_err());
        assert!(InversionsTableau::new(3, [((1, 2), 0)]).is_err());
        assert!(InversionsTableau::new(3, [((2, 2), 1)]).is_err());
    }

    #[test]
    fn enumerate_it_431562_matches_example() {
        let all = enumerate_it(&p("431562"));
        assert_eq!(all.len(), 3);
        let weights: Vec<Vec<u32>> = all.iter().map(|t| t.weight(5).unwrap()).collect();
        assert!(weights.contains(&vec![3, 2, 0, 1, 1]));
        assert!(weights.contains(&vec![3, 2, 1, 0, 1]));
        assert!(weights.contains(&vec![3, 2, 1, 1, 0]));
    }

    #[test]
    fn identity_has_one_empty_tableau() {
        let all = enumerate_it(&Permutation::identity(4));
        assert_eq!(all.len(), 1);
        assert!(all[0].is_empty());
    }

    #[test]
    fn dominant_tableaux_are_unique_row_fillings() {
        for w in Permutation::all(5) {
            if !w.is_dominant() {
                continue;
            }
            let all = enumerate_it(&w);
            assert_eq!(all.len(), 1, "w = {w}");
            for (&(i, _), &v) in all[0].entries() {
                assert_eq!(v as usize, i);
            }
        }
    }

    #[test]
    fn brute_force_agrees_on_s4() {
        // Independent check: filter every filling of Inv(w) with entries
        // up to n - 1 through the validating constructor.
        for w in Permutation::all(4) {
            let boxes = w.inversions();
            let mut brute = Vec::new();
            let mut stack = vec![Vec::<u32>::new()];
            while let Some(prefix) = stack.pop() {
                if prefix.len() == boxes.len() {
                    let entries: Vec<_> = boxes
                        .iter()
                        .copied()
                        .zip(prefix.iter().copied())
                        .collect();
                    if let Ok(t) = InversionsTableau::new(4, entries) {
                        brute.push(t);
                    }
                    continue;
                }
                for v in 1..=3u32 {
                    let mut next = prefix.clone();
                    next.push(v);
                    stack.push(next);
                }
            }
            brute.sort();
            let fast = enumerate_it(&w);
            let mut sorted = fast.clone();
            sorted.sort();
            assert_eq!(sorted, brute, "w = {w}");
        }
    }

    #[test]
    fn unbounded_tableaux_examples() {
        let two = enumerate_uit(&p("21"), 2);
        assert_eq!(two.len(), 2);
        let weights: Vec<Vec<u32>> = two.iter().map(|t| t.weight(2).unwrap()).collect();
        assert!(weights.contains(&vec![1, 0]) && weights.contains(&vec![0, 1]));

        let uit = enumerate_uit(&p("321"), 2);
        let weights: Vec<Vec<u32>> = uit.iter().map(|t| t.weight(2).unwrap()).collect();
        assert_eq!(weights.len(), 2);
        assert!(weights.contains(&vec![2, 1]) && weights.contains(&vec![1, 2]));
    }

    #[test]
    fn unbounded_contains_bounded_when_cap_allows() {
        for w in Permutation::all(4) {
            let it: BTreeSet<_> = enumerate_it(&w).into_iter().collect();
            let uit: BTreeSet<_> = enumerate_uit(&w, 3).into_iter().collect();
            assert!(it.is_subset(&uit), "w = {w}");
        }
    }

    #[test]
    fn extremal_tableaux_weights_match_codes() {
        let w = p("431562");
        let hi = lex_max_tableau(&w).unwrap();
        assert_eq!(hi.weight(5).unwrap(), vec![3, 2, 0, 1, 1]);
        let lo = lex_min_tableau(&w).unwrap();
        assert_eq!(lo.weight(5).unwrap(), vec![3, 2, 1, 1, 0]);
        for w in Permutation::all(5) {
            let code = w.lehmer_code();
            let hi = lex_max_tableau(&w).unwrap();
            let weight = hi.weight(4).unwrap();
            for (got, want) in weight.iter().zip(code.entries()) {
                assert_eq!(*got as usize, *want);
            }
            let ccode = w.column_lehmer_code();
            let lo = lex_min_tableau(&w).unwrap();
            let weight = lo.weight(4).unwrap();
            for i in 1..=4 {
                let expected = ccode.entries().iter().filter(|&&c| c >= i).count();
                assert_eq!(weight[i - 1] as usize, expected);
            }
        }
    }

    #[test]
    fn balanced_extension_canonical_orders() {
        let t = InversionsTableau::for_permutation(
            &p("321"),
            [((1, 2), 1), ((1, 3), 1), ((2, 3), 2)],
        )
        .unwrap();
        assert_eq!(
            balanced_extension(&t).unwrap(),
            vec![(1, 2), (1, 3), (2, 3)]
        );
        let empty = InversionsTableau::empty(3);
        assert_eq!(
            balanced_extension(&empty).unwrap(),
            vec![(2, 3), (1, 3), (1, 2)]
        );
    }

    #[test]
    fn balanced_extension_relabels_to_balanced() {
        for w in Permutation::all(4) {
            for t in enumerate_it(&w) {
                let order = balanced_extension(&t).unwrap();
                let relabeled = relabel_by_order(4, &order).unwrap();
                assert!(relabeled.is_balanced(), "w = {w}, T = {t:?}");
                // Entries must be weakly increasing along the order.
                let vals: Vec<u32> = order.iter().map(|&(i, j)| t.get(i, j)).collect();
                assert!(vals.windows(2).all(|p| p[0] <= p[1]));
            }
        }
    }

    #[test]
    fn chain_round_trips() {
        let chains = maximal_weak_chains(4);
        assert_eq!(chains.len(), 16);
        let mut tableaux = BTreeSet::new();
        for chain in &chains {
            let b = chain_to_balanced(chain).unwrap();
            assert!(b.is_balanced());
            assert_eq!(&balanced_to_chain(&b).unwrap(), chain);
            tableaux.insert(b.nonzero().clone());
        }
        assert_eq!(tableaux.len(), 16);
    }

    #[test]
    fn s3_chains_share_middle_label() {
        for chain in maximal_weak_chains(3) {
            let b = chain_to_balanced(&chain).unwrap();
            assert_eq!(b.get(1, 3), 2);
        }
        // A non-chain is rejected: 132 -> 312 skips an inversion swap.
        let bad = vec![p("123"), p("132"), p("312"), p("321")];
        assert!(chain_to_balanced(&bad).is_err());
    }

    #[test]
    fn tableau_json_round_trip() {
        let t = InversionsTableau::for_permutation(
            &p("321"),
            [((1, 2), 1), ((1, 3), 1), ((2, 3), 2)],
        )
        .unwrap();
        let text = serde_json::to_string(&t).unwrap();
        assert_eq!(text, r#"{"n":3,"entries":[[1,2,1],[1,3,1],[2,3,2]]}"#);
        let back: InversionsTableau = serde_json::from_str(&text).unwrap();
        assert_eq!(back, t);
        let bad = r#"{"n":3,"entries":[[1,2,2],[1,3,1],[2,3,2]]}"#;
        assert!(serde_json::from_str::<InversionsTableau>(bad).is_err());
    }
}
