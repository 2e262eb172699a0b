//! Pipe dreams: wiring diagrams on the staircase region whose crossing tiles
//! multiply out to a permutation, together with the row-recording bijection
//! onto inversions tableaux and the compatible word/weights encoding.
//!
//! A pipe dream on n pipes places crossing tiles on cells (r, c), matrix
//! coordinates, with r + c <= n.  Every other cell of the region
//! r + c <= n + 1 is an elbow; the cells on the anti-diagonal are elbow caps.
//! Pipe p enters at row p on the left edge and leaves through the top edge;
//! a crossing tile routes left -> right and bottom -> top, an elbow routes
//! left -> top and bottom -> right.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tableau::{balanced_extension, InversionsTableau};

/// A set of crossing tiles inside the triangular region, kept sorted.
///
/// Serializes as `{"n": 6, "crosses": [[1,1],[1,2],...]}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "PipeDreamJson", into = "PipeDreamJson")]
pub struct PipeDream {
    n: usize,
    crosses: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct PipeDreamJson {
    n: usize,
    crosses: Vec<(usize, usize)>,
}

impl TryFrom<PipeDreamJson> for PipeDream {
    type Error = Error;
    fn try_from(p: PipeDreamJson) -> Result<Self> {
        PipeDream::new(p.n, p.crosses)
    }
}

impl From<PipeDream> for PipeDreamJson {
    fn from(p: PipeDream) -> PipeDreamJson {
        PipeDreamJson {
            n: p.n,
            crosses: p.crosses,
        }
    }
}

/// The wiring of one cross set: the window read off the top edge, plus which
/// pipe enters each cell from the left and which from below (0 when none).
struct Trace {
    window: Vec<usize>,
    horiz: Vec<Vec<usize>>,
    vert: Vec<Vec<usize>>,
}

fn trace_region(n: usize, is_cross: &dyn Fn(usize, usize) -> bool) -> Trace {
    let mut window = vec![0usize; n];
    let mut horiz = vec![vec![0usize; n + 2]; n + 2];
    let mut vert = vec![vec![0usize; n + 2]; n + 2];
    for p in 1..=n {
        let (mut r, mut c) = (p, 1);
        let mut from_left = true;
        loop {
            if from_left {
                horiz[r][c] = p;
            } else {
                vert[r][c] = p;
            }
            // A crossing sends the pipe straight through; an elbow turns it.
            let up = is_cross(r, c) != from_left;
            if up {
                r -= 1;
                if r == 0 {
                    window[p - 1] = c;
                    break;
                }
            } else {
                c += 1;
            }
            from_left = !up;
        }
    }
    Trace {
        window,
        horiz,
        vert,
    }
}

impl PipeDream {
    /// Builds a pipe dream, checking every cross lies strictly inside the
    /// region (anti-diagonal cells can only be elbows).
    pub fn new(n: usize, crosses: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (r, c) in crosses {
            if !(1 <= r && 1 <= c && r + c <= n) {
                return Err(Error::CrossOutOfRange { r, c, n });
            }
            set.insert((r, c));
        }
        Ok(PipeDream {
            n,
            crosses: set.into_iter().collect(),
        })
    }

    pub fn empty(n: usize) -> Self {
        PipeDream {
            n,
            crosses: Vec::new(),
        }
    }

    /// Every region cell crossed: the unique pipe dream of the longest element.
    pub fn full(n: usize) -> Self {
        let mut crosses = Vec::new();
        for r in 1..n {
            for c in 1..=(n - r) {
                crosses.push((r, c));
            }
        }
        PipeDream { n, crosses }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn crosses(&self) -> &[(usize, usize)] {
        &self.crosses
    }

    pub fn len(&self) -> usize {
        self.crosses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crosses.is_empty()
    }

    pub fn has_cross(&self, r: usize, c: usize) -> bool {
        self.crosses.binary_search(&(r, c)).is_ok()
    }

    fn trace(&self) -> Trace {
        trace_region(self.n, &|r, c| self.has_cross(r, c))
    }

    /// The permutation sending each pipe's left-edge row to its top-edge
    /// column.  Every cross set in the region yields a bijection.
    pub fn permutation(&self) -> Permutation {
        Permutation::new(self.trace().window).expect("pipes leave through distinct columns")
    }

    /// (d_1, ..., d_n) where d_r counts the crossing tiles in row r.
    pub fn weight(&self) -> Vec<u32> {
        let mut counts = vec![0u32; self.n];
        for &(r, _) in &self.crosses {
            counts[r - 1] += 1;
        }
        counts
    }

    /// True when no pair of pipes crosses twice, i.e. the crossing count
    /// equals the length of the traced permutation.
    pub fn is_reduced(&self) -> bool {
        self.crosses.len() == self.permutation().length()
    }

    /// The pair of pipes (smaller, larger) meeting at each crossing tile.
    pub fn crossing_pipes(&self) -> BTreeMap<(usize, usize), (usize, usize)> {
        let tr = self.trace();
        self.crosses
            .iter()
            .map(|&(r, c)| {
                let h = tr.horiz[r][c];
                let v = tr.vert[r][c];
                assert!(h != 0 && v != 0, "crossing tile missing a pipe");
                ((r, c), (h.min(v), h.max(v)))
            })
            .collect()
    }

    /// Records, for every pair of pipes that crosses, the row of their
    /// crossing tile: the entry on box (i, j) is the row where pipes i and j
    /// meet.  The result is an inversions tableau for the traced permutation
    /// of the same weight.
    pub fn to_tableau(&self) -> Result<InversionsTableau> {
        let tr = self.trace();
        let w = Permutation::new(tr.window.clone()).expect("pipes leave through distinct columns");
        if self.crosses.len() != w.length() {
            return Err(Error::NotReduced(format!(
                "{} crossings but the traced permutation has length {}",
                self.crosses.len(),
                w.length()
            )));
        }
        let mut entries = BTreeMap::new();
        for &(r, c) in &self.crosses {
            let h = tr.horiz[r][c];
            let v = tr.vert[r][c];
            assert!(h != 0 && v != 0, "crossing tile missing a pipe");
            if entries.insert((h.min(v), h.max(v)), r as u32).is_some() {
                return Err(Error::NotReduced(format!(
                    "pipes {} and {} cross twice",
                    h.min(v),
                    h.max(v)
                )));
            }
        }
        InversionsTableau::for_permutation(&w, entries)
    }

    /// Inverts `to_tableau` constructively: walk the balanced extension of T
    /// backwards and, for each shaded box (i, j), add a crossing for pipes i
    /// and j in row T(i, j).  The growing configuration always offers such a
    /// tile; when several do, the leftmost is taken.
    pub fn from_tableau(t: &InversionsTableau) -> Result<PipeDream> {
        let n = t.n();
        let order = balanced_extension(t)?;
        let mut crosses: BTreeSet<(usize, usize)> = BTreeSet::new();
        for &(i, j) in order.iter().rev() {
            let row = t.get(i, j) as usize;
            if row == 0 {
                continue; // unshaded boxes carry no crossing
            }
            let tr = trace_region(n, &|r, c| crosses.contains(&(r, c)));
            let mut cell = None;
            for c in 1..n {
                if row + c > n {
                    break;
                }
                if crosses.contains(&(row, c)) {
                    continue;
                }
                let h = tr.horiz[row][c];
                let v = tr.vert[row][c];
                if (h == i && v == j) || (h == j && v == i) {
                    cell = Some((row, c));
                    break;
                }
            }
            let cell = cell.ok_or_else(|| {
                Error::Internal(format!(
                    "no tile available in row {row} to cross pipes {i} and {j}"
                ))
            })?;
            crosses.insert(cell);
        }
        let pd = PipeDream {
            n,
            crosses: crosses.into_iter().collect(),
        };
        if !pd.is_reduced() || pd.permutation() != t.permutation() {
            return Err(Error::Internal(
                "rebuilt pipe dream does not trace to the tableau's permutation".into(),
            ));
        }
        Ok(pd)
    }

    /// One line per row of the region, `+` for crossings and `·` for elbows.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in 1..self.n {
            for c in 1..=(self.n - r) {
                out.push(if self.has_cross(r, c) { '+' } else { '·' });
            }
            out.push('\n');
        }
        out
    }
}

/// All reduced pipe dreams of w, in sorted order.
///
/// Depth-first search over the cells in reading order (rows top to bottom,
/// right to left within a row).  The state is the permutation the remaining
/// cells must still realize: a crossing at (r, c) peels the generator
/// r + c - 1 off the left, which is allowed exactly when that shortens the
/// remainder.  Two prunes: entering row r the remainder must fix 1..r (all
/// later generators move larger positions only), and the remaining length can
/// never exceed the number of cells left.
pub fn enumerate_rp(w: &Permutation) -> Vec<PipeDream> {
    let n = w.n();
    let mut cells = Vec::new();
    for r in 1..n {
        for c in (1..=(n - r)).rev() {
            cells.push((r, c));
        }
    }
    let mut pos = vec![0usize; n + 1];
    for (idx, &v) in w.window().iter().enumerate() {
        pos[v] = idx;
    }
    let mut search = RpSearch {
        n,
        cells,
        u: w.window().to_vec(),
        pos,
        remaining: w.length(),
        chosen: Vec::new(),
        out: Vec::new(),
    };
    search.dfs(0);
    let mut dreams: Vec<PipeDream> = search
        .out
        .into_iter()
        .map(|mut crosses| {
            crosses.sort_unstable();
            PipeDream { n, crosses }
        })
        .collect();
    dreams.sort_unstable();
    dreams
}

struct RpSearch {
    n: usize,
    cells: Vec<(usize, usize)>,
    u: Vec<usize>,
    pos: Vec<usize>,
    remaining: usize,
    chosen: Vec<(usize, usize)>,
    out: Vec<Vec<(usize, usize)>>,
}

impl RpSearch {
    fn dfs(&mut self, k: usize) {
        if self.remaining > self.cells.len() - k {
            return;
        }
        if k == self.cells.len() {
            if self.remaining == 0 {
                self.out.push(self.chosen.clone());
            }
            return;
        }
        let (r, c) = self.cells[k];
        if c == self.n - r && (0..r.saturating_sub(1)).any(|q| self.u[q] != q + 1) {
            return;
        }
        let t = r + c - 1;
        if self.pos[t + 1] < self.pos[t] {
            let (p1, p2) = (self.pos[t], self.pos[t + 1]);
            self.u.swap(p1, p2);
            self.pos.swap(t, t + 1);
            self.remaining -= 1;
            self.chosen.push((r, c));
            self.dfs(k + 1);
            self.chosen.pop();
            self.remaining += 1;
            self.pos.swap(t, t + 1);
            self.u.swap(p1, p2);
        }
        self.dfs(k + 1);
    }
}

/// A word of generator indices with a weakly increasing sequence of positive
/// row weights: same length, weights[k] <= word[k], and strict growth of the
/// weights wherever the word ascends.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "PairJson", into = "PairJson")]
pub struct CompatiblePair {
    word: Vec<usize>,
    weights: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PairJson {
    word: Vec<usize>,
    weights: Vec<usize>,
}

impl TryFrom<PairJson> for CompatiblePair {
    type Error = Error;
    fn try_from(p: PairJson) -> Result<Self> {
        CompatiblePair::new(p.word, p.weights)
    }
}

impl From<CompatiblePair> for PairJson {
    fn from(p: CompatiblePair) -> PairJson {
        PairJson {
            word: p.word,
            weights: p.weights,
        }
    }
}

impl CompatiblePair {
    pub fn new(word: Vec<usize>, weights: Vec<usize>) -> Result<Self> {
        if word.len() != weights.len() {
            return Err(Error::SizeMismatch {
                expected: word.len(),
                got: weights.len(),
            });
        }
        for k in 0..word.len() {
            if word[k] == 0 {
                return Err(Error::IncompatiblePair("letters must be positive".into()));
            }
            if weights[k] == 0 || weights[k] > word[k] {
                return Err(Error::IncompatiblePair(format!(
                    "weight {} out of range for letter {}",
                    weights[k], word[k]
                )));
            }
            if k + 1 < word.len() {
                if weights[k] > weights[k + 1] {
                    return Err(Error::IncompatiblePair(
                        "weights must be weakly increasing".into(),
                    ));
                }
                if word[k] < word[k + 1] && weights[k] >= weights[k + 1] {
                    return Err(Error::IncompatiblePair(
                        "weights must grow strictly across word ascents".into(),
                    ));
                }
            }
        }
        Ok(CompatiblePair { word, weights })
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    /// The pipe dream with a crossing at (weights[k], word[k] - weights[k] + 1)
    /// for each position k.
    pub fn to_pipe_dream(&self, n: usize) -> Result<PipeDream> {
        PipeDream::new(
            n,
            self.word
                .iter()
                .zip(&self.weights)
                .map(|(&a, &alpha)| (alpha, a - alpha + 1)),
        )
    }
}

/// Encodes a tableau as the word and row weights of its pipe dream, read in
/// reading order (rows top to bottom, right to left within a row): the letter
/// of a crossing at (r, c) is r + c - 1 and its weight is r.  Injective,
/// since the crossings can be rebuilt from the pair.
pub fn compatible_pair(t: &InversionsTableau) -> Result<CompatiblePair> {
    let pd = PipeDream::from_tableau(t)?;
    let mut word = Vec::with_capacity(pd.len());
    let mut weights = Vec::with_capacity(pd.len());
    for r in 1..pd.n {
        for c in (1..=(pd.n - r)).rev() {
            if pd.has_cross(r, c) {
                word.push(r + c - 1);
                weights.push(r);
            }
        }
    }
    CompatiblePair::new(word, weights)
}

/// Moves each entry T(i, j) to the key (i, w_j), i.e. relabels the shaded
/// boxes onto the cells of the permutation's Rothe-style diagram.  The key
/// set has the same cardinality as the entry set because j -> w_j is
/// injective.
pub fn balanced_labelling_of(t: &InversionsTableau) -> BTreeMap<(usize, usize), u32> {
    let w = t.permutation();
    t.entries()
        .iter()
        .map(|(&(i, j), &v)| ((i, w.at(j)), v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use crate::tableau::enumerate_it;

    fn perm(window: &[usize]) -> Permutation {
        Permutation::new(window.to_vec()).unwrap()
    }

    fn paper_dream() -> PipeDream {
        PipeDream::new(
            6,
            [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (4, 1), (5, 1)],
        )
        .unwrap()
    }

    #[test]
    fn wiring_traces_to_431562() {
        let pd = paper_dream();
        assert_eq!(pd.permutation(), perm(&[4, 3, 1, 5, 6, 2]));
        assert_eq!(pd.weight(), vec![3, 2, 0, 1, 1, 0]);
        assert!(pd.is_reduced());
    }

    #[test]
    fn small_configurations_trace_correctly() {
        assert_eq!(PipeDream::empty(4).permutation(), Permutation::identity(4));
        assert_eq!(PipeDream::empty(4).weight(), vec![0, 0, 0, 0]);
        assert!(PipeDream::empty(4).is_reduced());

        let single = PipeDream::new(2, [(1, 1)]).unwrap();
        assert_eq!(single.permutation(), perm(&[2, 1]));

        let full = PipeDream::new(3, [(1, 1), (1, 2), (2, 1)]).unwrap();
        assert_eq!(full, PipeDream::full(3));
        assert_eq!(full.permutation(), Permutation::longest(3));
        assert!(full.is_reduced());
    }

    #[test]
    fn double_crossing_is_not_reduced() {
        // Pipes 2 and 3 cross at (2,1) and again at (1,2), so the traced
        // permutation is the identity and the configuration is not reduced.
        let pd = PipeDream::new(3, [(1, 2), (2, 1)]).unwrap();
        assert_eq!(pd.permutation(), Permutation::identity(3));
        assert!(!pd.is_reduced());
        assert!(matches!(pd.to_tableau(), Err(Error::NotReduced(_))));
        let pairs = pd.crossing_pipes();
        assert_eq!(pairs[&(1, 2)], (2, 3));
        assert_eq!(pairs[&(2, 1)], (2, 3));
    }

    #[test]
    fn crossing_rows_give_the_431562_tableau() {
        let t = paper_dream().to_tableau().unwrap();
        let expected = InversionsTableau::for_permutation(
            &perm(&[4, 3, 1, 5, 6, 2]),
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
        assert_eq!(t, expected);
    }

    #[test]
    fn nine_crossing_example_maps_to_its_tableau() {
        let pd = PipeDream::new(
            6,
            [
                (1, 1),
                (1, 2),
                (1, 4),
                (1, 5),
                (2, 1),
                (2, 2),
                (3, 2),
                (4, 1),
                (4, 2),
            ],
        )
        .unwrap();
        assert_eq!(pd.permutation(), perm(&[3, 6, 1, 5, 4, 2]));
        assert_eq!(pd.weight(), vec![4, 2, 1, 2, 0, 0]);
        let expected = InversionsTableau::for_permutation(
            &perm(&[3, 6, 1, 5, 4, 2]),
            [
                ((1, 3), 1),
                ((1, 6), 1),
                ((2, 3), 2),
                ((2, 4), 1),
                ((2, 5), 1),
                ((2, 6), 2),
                ((4, 5), 4),
                ((4, 6), 4),
                ((5, 6), 3),
            ],
        )
        .unwrap();
        let t = pd.to_tableau().unwrap();
        assert_eq!(t, expected);
        assert_eq!(t.weight(6).unwrap(), pd.weight());
        assert_eq!(PipeDream::from_tableau(&t).unwrap(), pd);
    }

    #[test]
    fn empty_dream_and_empty_tableau_correspond() {
        let pd = PipeDream::empty(5);
        let t = pd.to_tableau().unwrap();
        assert!(t.is_empty());
        assert_eq!(PipeDream::from_tableau(&t).unwrap(), pd);
    }

    #[test]
    fn enumerates_the_three_dreams_of_431562() {
        let dreams = enumerate_rp(&perm(&[4, 3, 1, 5, 6, 2]));
        assert_eq!(dreams.len(), 3);
        assert!(dreams.contains(&paper_dream()));
        let weights: BTreeSet<Vec<u32>> = dreams.iter().map(|d| d.weight()).collect();
        let expected: BTreeSet<Vec<u32>> = [
            vec![3, 2, 0, 1, 1, 0],
            vec![3, 2, 1, 0, 1, 0],
            vec![3, 2, 1, 1, 0, 0],
        ]
        .into_iter()
        .collect();
        assert_eq!(weights, expected);
    }

    #[test]
    fn extreme_permutations_have_one_dream() {
        let identity = enumerate_rp(&Permutation::identity(4));
        assert_eq!(identity, vec![PipeDream::empty(4)]);
        let longest = enumerate_rp(&Permutation::longest(4));
        assert_eq!(longest, vec![PipeDream::full(4)]);
    }

    #[test]
    fn search_agrees_with_brute_force_tracing() {
        // Independent oracle: classify all 2^6 cross sets on n = 4 by trace.
        let n = 4;
        let cells: Vec<(usize, usize)> = (1..n)
            .flat_map(|r| (1..=(n - r)).map(move |c| (r, c)))
            .collect();
        let mut by_perm: BTreeMap<Vec<usize>, BTreeSet<PipeDream>> = BTreeMap::new();
        for mask in 0u32..(1 << cells.len()) {
            let chosen = cells
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, &cell)| cell);
            let pd = PipeDream::new(n, chosen).unwrap();
            if pd.is_reduced() {
                by_perm
                    .entry(pd.permutation().window().to_vec())
                    .or_default()
                    .insert(pd);
            }
        }
        for w in Permutation::all(n) {
            let found: BTreeSet<PipeDream> = enumerate_rp(&w).into_iter().collect();
            let expected = by_perm.remove(w.window()).unwrap_or_default();
            assert_eq!(found, expected, "mismatch for {}", w.display_string());
        }
        assert!(by_perm.is_empty());
    }

    #[test]
    fn words_with_row_sequences_rebuild_the_same_dreams() {
        // Second independent oracle: for every reduced word, enumerate all
        // weakly increasing row sequences satisfying the compatibility rules
        // and rebuild cross sets from the pairs.
        fn extend(
            word: &[usize],
            weights: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            let k = weights.len();
            if k == word.len() {
                out.push(weights.clone());
                return;
            }
            let mut low = 1;
            if k > 0 {
                low = weights[k - 1];
                if word[k - 1] < word[k] {
                    low += 1;
                }
            }
            for alpha in low..=word[k] {
                weights.push(alpha);
                extend(word, weights, out);
                weights.pop();
            }
        }

        for w in Permutation::all(4) {
            let mut rebuilt = BTreeSet::new();
            let mut pair_count = 0usize;
            for word in w.reduced_words() {
                let mut sequences = Vec::new();
                extend(&word, &mut Vec::new(), &mut sequences);
                for weights in sequences {
                    let pair = CompatiblePair::new(word.clone(), weights).unwrap();
                    let pd = pair.to_pipe_dream(4).unwrap();
                    assert_eq!(pd.len(), w.length());
                    rebuilt.insert(pd);
                    pair_count += 1;
                }
            }
            let found: BTreeSet<PipeDream> = enumerate_rp(&w).into_iter().collect();
            assert_eq!(rebuilt, found, "mismatch for {}", w.display_string());
            assert_eq!(pair_count, found.len(), "pairs must be distinct dreams");
        }
    }

    #[test]
    fn bijection_round_trips_on_s4() {
        for w in Permutation::all(4) {
            let dreams = enumerate_rp(&w);
            let tableaux = enumerate_it(&w);
            assert_eq!(dreams.len(), tableaux.len());
            let mut mapped = BTreeSet::new();
            for pd in &dreams {
                let t = pd.to_tableau().unwrap();
                assert_eq!(t.weight(4).unwrap(), pd.weight());
                assert_eq!(PipeDream::from_tableau(&t).unwrap(), *pd);
                mapped.insert(t);
            }
            let expected: BTreeSet<InversionsTableau> = tableaux.into_iter().collect();
            assert_eq!(mapped, expected);
            for t in &expected {
                assert_eq!(
                    PipeDream::from_tableau(t).unwrap().to_tableau().unwrap(),
                    *t
                );
            }
        }
    }

    #[test]
    fn crossings_stay_weakly_above_their_pipes() {
        for w in Permutation::all(4) {
            for pd in enumerate_rp(&w) {
                for (&(r, _), &(i, j)) in &pd.crossing_pipes() {
                    assert!(r <= i && r <= j, "pipe crossing below its own row");
                }
            }
        }
    }

    #[test]
    fn single_inversion_pair_is_the_single_generator() {
        let t = InversionsTableau::for_permutation(&perm(&[2, 1]), [((1, 2), 1)]).unwrap();
        let pair = compatible_pair(&t).unwrap();
        assert_eq!(pair.word(), &[1]);
        assert_eq!(pair.weights(), &[1]);
    }

    #[test]
    fn pairs_on_s4_are_valid_and_distinct() {
        for w in Permutation::all(4) {
            let mut pairs = BTreeSet::new();
            for t in enumerate_it(&w) {
                let pair = compatible_pair(&t).unwrap();
                assert_eq!(
                    Permutation::from_word(4, pair.word()).unwrap(),
                    w,
                    "word must multiply out to w"
                );
                assert_eq!(
                    pair.to_pipe_dream(4).unwrap(),
                    PipeDream::from_tableau(&t).unwrap()
                );
                pairs.insert(pair);
            }
            assert_eq!(pairs.len(), enumerate_rp(&w).len());
        }
    }

    #[test]
    fn invalid_pairs_are_rejected() {
        assert!(matches!(
            CompatiblePair::new(vec![1, 2], vec![1]),
            Err(Error::SizeMismatch { .. })
        ));
        // weight above its letter
        assert!(CompatiblePair::new(vec![1], vec![2]).is_err());
        // decreasing weights
        assert!(CompatiblePair::new(vec![2, 2], vec![2, 1]).is_err());
        // ascent without strict weight growth
        assert!(CompatiblePair::new(vec![1, 2], vec![1, 1]).is_err());
        assert!(CompatiblePair::new(vec![1, 2], vec![1, 2]).is_ok());
    }

    #[test]
    fn relabelling_moves_entries_to_value_columns() {
        let t = InversionsTableau::for_permutation(&perm(&[2, 1]), [((1, 2), 1)]).unwrap();
        let map = balanced_labelling_of(&t);
        assert_eq!(map, BTreeMap::from([((1, 1), 1)]));
        assert!(balanced_labelling_of(&InversionsTableau::empty(3)).is_empty());
        for w in Permutation::all(4) {
            for t in enumerate_it(&w) {
                let map = balanced_labelling_of(&t);
                assert_eq!(map.len(), t.entries().len());
            }
        }
    }

    #[test]
    fn json_round_trip_and_validation() {
        let pd = PipeDream::new(2, [(1, 1)]).unwrap();
        let json = serde_json::to_string(&pd).unwrap();
        assert_eq!(json, r#"{"n":2,"crosses":[[1,1]]}"#);
        assert_eq!(serde_json::from_str::<PipeDream>(&json).unwrap(), pd);
        assert!(serde_json::from_str::<PipeDream>(r#"{"n":3,"crosses":[[2,2]]}"#).is_err());
    }

    #[test]
    fn render_marks_crossings() {
        assert_eq!(paper_dream().render(), "+++··\n++··\n···\n+·\n+\n");
    }
}
