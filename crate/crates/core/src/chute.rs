//! Chute moves in three guises — on pipe dreams, on inversions tableaux,
//! and on Lehmer tableaux — together with column words, the chute-move
//! poset with lattice testing, and the column row-bound lemma.
//!
//! A chute move C_{ij} slides the crossing of pipes i < j from the top-right
//! corner of a cross-filled rectangle to its bottom-left corner.  On the
//! tableau side the box (i, j) rises from entry a to the smallest admissible
//! b, trading a and b with box (j, k) in every column k > j that holds both.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::diagram::InversionsDiagram;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::pipedream::{enumerate_rp, PipeDream};
use crate::tableau::InversionsTableau;

/// Bottom-to-top reading of the shaded entries in column c.
pub fn column_word(t: &InversionsTableau, c: usize) -> Vec<u32> {
    (1..c).map(|r| t.get(r, c)).filter(|&v| v > 0).collect()
}

/// Completes a duplicate-free word over 1..=n to a permutation of S_n by
/// appending the unused values in increasing order.
pub fn extend_word(word: &[u32], n: usize) -> Result<Permutation> {
    let mut seen = vec![false; n + 1];
    let mut window = Vec::with_capacity(n);
    for &v in word {
        let v = v as usize;
        if v == 0 || v > n {
            return Err(Error::InvalidPermutation(format!(
                "letter {v} outside 1..={n}"
            )));
        }
        if seen[v] {
            return Err(Error::InvalidPermutation(format!("duplicate letter {v}")));
        }
        seen[v] = true;
        window.push(v);
    }
    window.extend((1..=n).filter(|&v| !seen[v]));
    Permutation::new(window)
}

/// The rectangle behind a chute move whose moving cross sits at (a, cr):
/// the nearest gap to its left, the nearest gap below it in its column, and
/// a fully crossed interior.  Returns the target cell (b, cl).  The gap
/// below may sit just past the staircase boundary — the rectangle is then
/// bounded by the edge the pipe hugs — but the target itself always lands
/// inside.
fn chute_target(p: &PipeDream, a: usize, cr: usize) -> Option<(usize, usize)> {
    let n = p.n();
    let cl = (1..cr).rev().find(|&c| !p.has_cross(a, c))?;
    let b = ((a + 1)..=(n - cr + 1)).find(|&r| !p.has_cross(r, cr))?;
    if p.has_cross(b, cl) {
        return None;
    }
    for r in (a + 1)..b {
        if !p.has_cross(r, cl) {
            return None;
        }
    }
    for r in (a + 1)..=b {
        for c in (cl + 1)..cr {
            if !p.has_cross(r, c) {
                return None;
            }
        }
    }
    Some((b, cl))
}

/// The pipe pairs (i, j) admitting a chute move on p.
pub fn chute_moves_pd(p: &PipeDream) -> Result<Vec<(usize, usize)>> {
    if !p.is_reduced() {
        return Err(Error::NotReduced(
            "chute moves act on reduced pipe dreams only".into(),
        ));
    }
    let mut moves: Vec<(usize, usize)> = p
        .crossing_pipes()
        .into_iter()
        .filter(|&((r, c), _)| chute_target(p, r, c).is_some())
        .map(|(_, pipes)| pipes)
        .collect();
    moves.sort_unstable();
    Ok(moves)
}

/// Performs the chute move on pipes i < j, relocating their crossing.
pub fn apply_chute_pd(p: &PipeDream, i: usize, j: usize) -> Result<PipeDream> {
    if !p.is_reduced() {
        return Err(Error::NotReduced(
            "chute moves act on reduced pipe dreams only".into(),
        ));
    }
    let cell = p
        .crossing_pipes()
        .into_iter()
        .find(|&(_, pipes)| pipes == (i, j))
        .map(|(cell, _)| cell)
        .ok_or_else(|| Error::NoChuteMove(format!("pipes {i} and {j} do not cross")))?;
    let (b, cl) = chute_target(p, cell.0, cell.1).ok_or_else(|| {
        Error::NoChuteMove(format!(
            "the crossing of pipes {i} and {j} has no chute rectangle"
        ))
    })?;
    let crosses = p
        .crosses()
        .iter()
        .copied()
        .filter(|&cr| cr != cell)
        .chain(std::iter::once((b, cl)));
    PipeDream::new(p.n(), crosses)
}

/// The boxes (i, j) of Inv(w) on which a chute move applies to t.
pub fn chute_moves_it(t: &InversionsTableau) -> Vec<(usize, usize)> {
    t.permutation()
        .inversions()
        .into_iter()
        .filter(|&(i, j)| apply_chute_it(t, i, j).is_ok())
        .collect()
}

/// Raises box (i, j) from a to the smallest b > a absent below it in column
/// j, trading a and b between rows i and j in every later column holding
/// both; fails unless the result is again an inversions tableau.
pub fn apply_chute_it(t: &InversionsTableau, i: usize, j: usize) -> Result<InversionsTableau> {
    let w = t.permutation();
    let a = t.get(i, j);
    if a == 0 {
        return Err(Error::NoChuteMove(format!(
            "box ({i},{j}) is not shaded for {}",
            w.display_string()
        )));
    }
    let below: BTreeSet<u32> = (1..i).map(|r| t.get(r, j)).filter(|&v| v > 0).collect();
    let mut b = a + 1;
    while below.contains(&b) {
        b += 1;
    }
    let mut entries = t.entries().clone();
    entries.insert((i, j), b);
    for k in (j + 1)..=w.n() {
        if t.get(i, k) == a && t.get(j, k) == b {
            entries.insert((i, k), b);
            entries.insert((j, k), a);
        }
    }
    InversionsTableau::for_permutation(&w, entries)
        .map_err(|e| Error::NoChuteMove(format!("no chute move at box ({i},{j}): {e}")))
}

/// Columnwise Lehmer codes of an inversions tableau's column words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LehmerTableau {
    diagram: InversionsDiagram,
    entries: BTreeMap<(usize, usize), u32>,
}

impl LehmerTableau {
    pub fn new(
        diagram: InversionsDiagram,
        entries: impl IntoIterator<Item = ((usize, usize), u32)>,
    ) -> Result<Self> {
        let entries: BTreeMap<_, _> = entries.into_iter().collect();
        let shaded: BTreeSet<_> = diagram.cells().iter().copied().collect();
        let keyed: BTreeSet<_> = entries.keys().copied().collect();
        if shaded != keyed {
            return Err(Error::InvalidTableau(
                "entries do not cover the shaded boxes exactly".into(),
            ));
        }
        Ok(LehmerTableau { diagram, entries })
    }

    pub fn diagram(&self) -> &InversionsDiagram {
        &self.diagram
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), u32> {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        self.entries.get(&(i, j)).copied()
    }
}

/// The Lehmer code of a duplicate-free word: position t counts the values
/// below u_t that do not occur earlier in the word.  Equivalently, the
/// first |u| entries of the Lehmer code of any extension of u that appends
/// the unused values in increasing order.
fn word_code(u: &[u32]) -> Vec<u32> {
    (0..u.len())
        .map(|t| {
            (1..u[t])
                .filter(|v| !u[..t].contains(v))
                .count() as u32
        })
        .collect()
}

/// Partial permutation with the given Lehmer code: letter t is the
/// (code_t + 1)-st smallest value unused so far.
fn word_from_code(code: &[u32]) -> Vec<u32> {
    let mut used = BTreeSet::new();
    code.iter()
        .map(|&c| {
            let v = (1u32..)
                .filter(|v| !used.contains(v))
                .nth(c as usize)
                .expect("positive integers never run out");
            used.insert(v);
            v
        })
        .collect()
}

/// The Lehmer tableau of t: column by column, the Lehmer code of the
/// column word.
pub fn lehmer_tableau(t: &InversionsTableau) -> LehmerTableau {
    let w = t.permutation();
    let mut entries = BTreeMap::new();
    for c in 2..=w.n() {
        let rows: Vec<usize> = (1..c).filter(|&r| t.get(r, c) > 0).collect();
        let code = word_code(&rows.iter().map(|&r| t.get(r, c)).collect::<Vec<_>>());
        for (&r, l) in rows.iter().zip(code) {
            entries.insert((r, c), l);
        }
    }
    LehmerTableau {
        diagram: InversionsDiagram::of_permutation(&w),
        entries,
    }
}

/// Inverts `lehmer_tableau` by decoding each column word.
pub fn tableau_of_lehmer(l: &LehmerTableau) -> Result<InversionsTableau> {
    let w = l.diagram().to_permutation()?;
    let mut entries = BTreeMap::new();
    for c in 2..=w.n() {
        let rows: Vec<usize> = (1..c).filter(|&r| l.get(r, c).is_some()).collect();
        let code: Vec<u32> = rows.iter().map(|&r| l.get(r, c).unwrap()).collect();
        for (&r, v) in rows.iter().zip(word_from_code(&code)) {
            entries.insert((r, c), v);
        }
    }
    InversionsTableau::for_permutation(&w, entries)
}

/// The chute move on a Lehmer tableau: decode, move, re-encode.
pub fn apply_chute_lehmer(l: &LehmerTableau, i: usize, j: usize) -> Result<LehmerTableau> {
    let t = tableau_of_lehmer(l)?;
    Ok(lehmer_tableau(&apply_chute_it(&t, i, j)?))
}

/// Whether column c of l satisfies L(i_t, c) <= i_t - t for its shaded rows
/// i_1 < ... < i_m; asserted equivalent to every decoded column entry
/// staying weakly below its row index.
pub fn row_bound_equivalence(l: &LehmerTableau, c: usize) -> Result<bool> {
    let n = l.diagram().n();
    if c == 0 || c > n {
        return Err(Error::InvalidTableau(format!(
            "column {c} outside 1..={n}"
        )));
    }
    let rows: Vec<usize> = (1..c).filter(|&r| l.get(r, c).is_some()).collect();
    let code: Vec<u32> = rows.iter().map(|&r| l.get(r, c).unwrap()).collect();
    let coded = rows
        .iter()
        .zip(&code)
        .enumerate()
        .all(|(t, (&r, &v))| v as usize + t < r);
    let decoded = rows
        .iter()
        .zip(word_from_code(&code))
        .all(|(&r, v)| v as usize <= r);
    assert_eq!(coded, decoded, "row-bound forms disagree on column {c}");
    Ok(coded)
}

/// The chute-move poset on the reduced pipe dreams of one permutation:
/// directed edges P -> C_{ij}P, ordered by reachability.
#[derive(Clone, Debug, Serialize)]
pub struct ChutePoset {
    vertices: Vec<PipeDream>,
    edges: Vec<(usize, usize, usize, usize)>,
    #[serde(skip)]
    leq: Vec<Vec<bool>>,
}

/// Builds the poset of w; vertices come in the enumeration order of
/// `enumerate_rp`, edges carry the pipe pair of their move.
pub fn build_chute_poset(w: &Permutation) -> ChutePoset {
    let vertices = enumerate_rp(w);
    let mut edges = Vec::new();
    for (from, p) in vertices.iter().enumerate() {
        for (i, j) in chute_moves_pd(p).expect("enumerated pipe dreams are reduced") {
            let q = apply_chute_pd(p, i, j).expect("listed moves apply");
            let to = vertices
                .binary_search(&q)
                .expect("chute moves stay within the reduced pipe dreams");
            edges.push((from, to, i, j));
        }
    }
    let v = vertices.len();
    let mut leq = vec![vec![false; v]; v];
    for (a, row) in leq.iter_mut().enumerate() {
        row[a] = true;
    }
    for &(a, b, _, _) in &edges {
        leq[a][b] = true;
    }
    for k in 0..v {
        let via = leq[k].clone();
        for row in &mut leq {
            if row[k] {
                for (b, &reaches) in via.iter().enumerate() {
                    if reaches {
                        row[b] = true;
                    }
                }
            }
        }
    }
    ChutePoset {
        vertices,
        edges,
        leq,
    }
}

impl ChutePoset {
    pub fn vertices(&self) -> &[PipeDream] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize, usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Reachability order: a below b along directed chute-move paths.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// True when every vertex pair has a greatest lower bound and a least
    /// upper bound under the reachability order.
    pub fn is_lattice(&self) -> bool {
        let v = self.len();
        for a in 0..v {
            for b in (a + 1)..v {
                if !self.has_extreme_bound(a, b, true) || !self.has_extreme_bound(a, b, false) {
                    return false;
                }
            }
        }
        true
    }

    fn has_extreme_bound(&self, a: usize, b: usize, lower: bool) -> bool {
        let candidates: Vec<usize> = (0..self.len())
            .filter(|&x| {
                if lower {
                    self.leq[x][a] && self.leq[x][b]
                } else {
                    self.leq[a][x] && self.leq[b][x]
                }
            })
            .collect();
        candidates.iter().any(|&m| {
            candidates
                .iter()
                .all(|&x| if lower { self.leq[x][m] } else { self.leq[m][x] })
        })
    }

    /// Graphviz rendering; vertices show their weight monomial and a stable
    /// hash of the cross set, edges their move label.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph chute_poset {\n");
        for (idx, p) in self.vertices.iter().enumerate() {
            out.push_str(&format!(
                "  v{idx} [label=\"{} | {:016x}\"];\n",
                monomial_string(&p.weight()),
                cross_hash(p)
            ));
        }
        for &(a, b, i, j) in &self.edges {
            out.push_str(&format!("  v{a} -> v{b} [label=\"C_{{{i},{j}}}\"];\n"));
        }
        out.push_str("}\n");
        out
    }
}

fn monomial_string(exponents: &[u32]) -> String {
    let factors: Vec<String> = exponents
        .iter()
        .enumerate()
        .filter(|&(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{e}", i + 1)
            }
        })
        .collect();
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("*")
    }
}

/// FNV-1a over the cross list, stable across runs and platforms.
fn cross_hash(p: &PipeDream) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |byte: u8| {
        h ^= byte as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    };
    eat(p.n() as u8);
    for &(r, c) in p.crosses() {
        eat(r as u8);
        eat(c as u8);
    }
    h
}

/// Exhaustive consistency sweep over every tableau of w and every available
/// chute move: the pipe-dream and tableau moves list and act identically,
/// results stay reduced pipe dreams of w, each affected column follows the
/// one-box or trade pattern with its value gap filled below, extended
/// column words grow by a mediocre cover, and Lehmer entries never drop.
/// Returns the number of moves audited.
pub fn audit_chute_moves(w: &Permutation) -> Result<usize> {
    let dreams = enumerate_rp(w);
    let mut audited = 0;
    for p in &dreams {
        let t = p.to_tableau()?;
        let moves = chute_moves_pd(p)?;
        if moves != chute_moves_it(&t) {
            return Err(Error::Internal(format!(
                "move lists disagree on {}",
                w.display_string()
            )));
        }
        let l = lehmer_tableau(&t);
        for &(i, j) in &moves {
            let q = apply_chute_pd(p, i, j)?;
            if dreams.binary_search(&q).is_err() {
                return Err(Error::Internal(format!(
                    "C_{{{i},{j}}} left the reduced pipe dreams of {}",
                    w.display_string()
                )));
            }
            let t2 = apply_chute_it(&t, i, j)?;
            if PipeDream::from_tableau(&t2)? != q {
                return Err(Error::Internal(format!(
                    "the bijection square fails for C_{{{i},{j}}} on {}",
                    w.display_string()
                )));
            }
            audit_columns(w, &t, &t2, i, j)?;
            let l2 = lehmer_tableau(&t2);
            if l.entries()
                .iter()
                .any(|(cell, &v)| l2.entries()[cell] < v)
            {
                return Err(Error::Internal(format!(
                    "a Lehmer entry dropped under C_{{{i},{j}}} on {}",
                    w.display_string()
                )));
            }
            audited += 1;
        }
    }
    Ok(audited)
}

/// Per-column audit of one applied move; see `audit_chute_moves`.
fn audit_columns(
    w: &Permutation,
    t: &InversionsTableau,
    t2: &InversionsTableau,
    i: usize,
    j: usize,
) -> Result<()> {
    let n = w.n();
    let fail = |msg: String| Err(Error::Internal(msg));
    let mut leftmost_changed = None;
    for c in 2..=n {
        let rows: Vec<usize> = (1..c).filter(|&r| t.get(r, c) > 0).collect();
        let u: Vec<u32> = rows.iter().map(|&r| t.get(r, c)).collect();
        let u2: Vec<u32> = rows.iter().map(|&r| t2.get(r, c)).collect();
        if u == u2 {
            continue;
        }
        if leftmost_changed.is_none() {
            leftmost_changed = Some(c);
        }
        let diffs: Vec<usize> = (0..u.len()).filter(|&p| u[p] != u2[p]).collect();
        let gap_below = |p: usize, lo: u32, hi: u32| ((lo + 1)..hi).all(|x| u[..p].contains(&x));
        if c == j {
            // one box rises from a to a fresh b; the gap sits below it
            if leftmost_changed != Some(j) || diffs.len() != 1 {
                return fail(format!("column {j} is not the single-box case"));
            }
            let p = diffs[0];
            if rows[p] != i || u2[p] <= u[p] || u.contains(&u2[p]) || !gap_below(p, u[p], u2[p]) {
                return fail(format!("column {j} violates the single-box pattern"));
            }
        } else {
            // two boxes trade a < b; the gap sits below the lower one
            if c < j || diffs.len() != 2 {
                return fail(format!("column {c} is not a two-box trade"));
            }
            let (p, s) = (diffs[0], diffs[1]);
            if rows[p] != i
                || rows[s] != j
                || u[p] >= u[s]
                || u2[p] != u[s]
                || u2[s] != u[p]
                || !gap_below(p, u[p], u[s])
            {
                return fail(format!("column {c} violates the trade pattern"));
            }
        }
        // the extended words move up by exactly one mediocre cover
        let e1 = extend_word(&u, n)?;
        let e2 = extend_word(&u2, n)?;
        if !e1.mediocre_covers(&e2)? {
            return fail(format!(
                "column {c} extension is not a mediocre cover: {} vs {}",
                e1.display_string(),
                e2.display_string()
            ));
        }
        // the column's Lehmer code gains exactly one at the moved row
        let mut expected = word_code(&u);
        let p = rows.iter().position(|&r| r == i).expect("row i changed");
        expected[p] += 1;
        if expected != word_code(&u2) {
            return fail(format!("column {c} Lehmer code did not gain e_{}", p + 1));
        }
    }
    if leftmost_changed != Some(j) {
        return fail(format!(
            "leftmost changed column {leftmost_changed:?} is not {j}"
        ));
    }
    Ok(())
}
