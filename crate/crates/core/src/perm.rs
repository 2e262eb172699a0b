//! Permutations in one-line notation, their inversions, Lehmer codes, and the
//! weak, strong, and "mediocre" Bruhat orders.
//!
//! Everything is 1-indexed: a permutation of S_n is a window `w_1 ... w_n`
//! with values in `1..=n`, and inversions are position pairs `(i, j)` with
//! `i < j` and `w_i > w_j`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of {1, ..., n} in one-line notation.
///
/// Serializes as a plain JSON array of the window, e.g. `[4,3,1,5,6,2]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    window: Vec<usize>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self.display_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_string())
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(window: Vec<usize>) -> Result<Self> {
        Permutation::new(window)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(w: Permutation) -> Vec<usize> {
        w.window
    }
}

impl Permutation {
    /// Builds a permutation from a one-line window, checking it is a
    /// bijection of {1, ..., n}.
    pub fn new(window: Vec<usize>) -> Result<Self> {
        let n = window.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty window".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &window {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} out of range 1..={n}"
                )));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
            seen[v] = true;
        }
        Ok(Permutation { window })
    }

    /// The identity of S_n.
    pub fn identity(n: usize) -> Self {
        Permutation {
            window: (1..=n).collect(),
        }
    }

    /// The longest element `n, n-1, ..., 1` of S_n.
    pub fn longest(n: usize) -> Self {
        Permutation {
            window: (1..=n).rev().collect(),
        }
    }

    /// The adjacent transposition s_i in S_n (swaps values i and i+1).
    pub fn adjacent_transposition(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i + 1 > n {
            return Err(Error::InvalidPermutation(format!(
                "s_{i} does not exist in S_{n}"
            )));
        }
        let mut window: Vec<usize> = (1..=n).collect();
        window.swap(i - 1, i);
        Ok(Permutation { window })
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[usize] {
        &self.window
    }

    /// The image w(i), 1-indexed.
    pub fn at(&self, i: usize) -> usize {
        self.window[i - 1]
    }

    /// One-line notation: digits run together for n <= 9, comma separated above.
    pub fn display_string(&self) -> String {
        if self.n() <= 9 {
            self.window.iter().map(|v| v.to_string()).collect()
        } else {
            self.window
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    /// Parses either a digit string ("431562", n <= 9) or a comma-separated
    /// window ("10,3,2,...").
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let window: Vec<usize> = if text.contains(',') {
            text.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidPermutation(format!("bad entry {t:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidPermutation(format!("bad digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(window)
    }

    pub fn inverse(&self) -> Self {
        let mut window = vec![0usize; self.n()];
        for (i, &v) in self.window.iter().enumerate() {
            window[v - 1] = i + 1;
        }
        Permutation { window }
    }

    /// Function composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let window = other.window.iter().map(|&v| self.window[v - 1]).collect();
        Ok(Permutation { window })
    }

    /// Left multiplication by s_i: swaps the *values* i and i+1.
    pub fn left_mul_adjacent(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.n() {
            return Err(Error::InvalidPermutation(format!(
                "s_{i} does not exist in S_{}",
                self.n()
            )));
        }
        let mut window = self.window.clone();
        for v in window.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
        Ok(Permutation { window })
    }

    /// Right multiplication by s_i: swaps the *positions* i and i+1.
    pub fn right_mul_adjacent(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.n() {
            return Err(Error::InvalidPermutation(format!(
                "s_{i} does not exist in S_{}",
                self.n()
            )));
        }
        let mut window = self.window.clone();
        window.swap(i - 1, i);
        Ok(Permutation { window })
    }

    /// Right multiplication by the transposition t_{ij}: swaps positions i and j.
    pub fn swap_positions(&self, i: usize, j: usize) -> Result<Self> {
        let n = self.n();
        if i == 0 || j == 0 || i > n || j > n || i == j {
            return Err(Error::InvalidPermutation(format!(
                "t_({i},{j}) does not exist in S_{n}"
            )));
        }
        let mut window = self.window.clone();
        window.swap(i - 1, j - 1);
        Ok(Permutation { window })
    }

    /// The inversion set Inv(w) = {(i, j) : i < j, w_i > w_j}, sorted.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                if self.window[i - 1] > self.window[j - 1] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Coxeter length l(w) = |Inv(w)|.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut l = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if self.window[i] > self.window[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// Positions i with w_i > w_{i+1}.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.window[i - 1] > self.window[i])
            .collect()
    }

    /// The Lehmer code: c_i = #{j > i : w_j < w_i}.  Entry n is always 0.
    pub fn lehmer_code(&self) -> LehmerCode {
        let n = self.n();
        let entries = (1..=n)
            .map(|i| {
                ((i + 1)..=n)
                    .filter(|&j| self.window[j - 1] < self.window[i - 1])
                    .count()
            })
            .collect();
        LehmerCode {
            entries,
            role: CodeRole::Row,
        }
    }

    /// The column code: c_j = #{i < j : (i, j) in Inv(w)}.  Entry 1 is always 0.
    pub fn column_lehmer_code(&self) -> LehmerCode {
        let n = self.n();
        let entries = (1..=n)
            .map(|j| {
                (1..j)
                    .filter(|&i| self.window[i - 1] > self.window[j - 1])
                    .count()
            })
            .collect();
        LehmerCode {
            entries,
            role: CodeRole::Column,
        }
    }

    /// Rebuilds the permutation from a row-role Lehmer code: w_i is the
    /// (c_i + 1)-st smallest value not used so far.
    pub fn from_lehmer_code(code: &LehmerCode) -> Result<Self> {
        if code.role != CodeRole::Row {
            return Err(Error::InvalidLehmerCode(
                "permutation reconstruction needs a row code".into(),
            ));
        }
        let n = code.entries.len();
        let mut unused: Vec<usize> = (1..=n).collect();
        let mut window = Vec::with_capacity(n);
        for (i, &c) in code.entries.iter().enumerate() {
            if c >= unused.len() {
                return Err(Error::InvalidLehmerCode(format!(
                    "entry c_{} = {c} exceeds bound {}",
                    i + 1,
                    n - i - 1
                )));
            }
            window.push(unused.remove(c));
        }
        Ok(Permutation { window })
    }

    /// True when the Lehmer code is weakly decreasing.
    pub fn is_dominant(&self) -> bool {
        let code = self.lehmer_code();
        code.entries.windows(2).all(|p| p[0] >= p[1])
    }

    /// The unique descent position when exactly one exists.  The identity and
    /// permutations with several descents return `None`.
    pub fn is_grassmannian(&self) -> Option<usize> {
        let d = self.descents();
        if d.len() == 1 {
            Some(d[0])
        } else {
            None
        }
    }

    /// True when no subsequence is order-isomorphic to 2143.
    pub fn is_vexillary(&self) -> bool {
        self.avoids_pattern(&[2, 1, 4, 3])
    }

    /// Naive pattern scan: true when no |p|-subsequence of the window has the
    /// same relative order as `pattern`.
    pub fn avoids_pattern(&self, pattern: &[usize]) -> bool {
        let n = self.n();
        let k = pattern.len();
        if k == 0 || k > n {
            return true;
        }
        let mut idx = vec![0usize; k];
        // Iterates over all increasing index tuples of length k.
        fn rec(
            window: &[usize],
            pattern: &[usize],
            idx: &mut Vec<usize>,
            depth: usize,
            start: usize,
        ) -> bool {
            if depth == pattern.len() {
                // Does the selected subsequence realize the pattern?
                let vals: Vec<usize> = idx.iter().map(|&i| window[i]).collect();
                for a in 0..vals.len() {
                    for b in (a + 1)..vals.len() {
                        if (vals[a] < vals[b]) != (pattern[a] < pattern[b]) {
                            return false;
                        }
                    }
                }
                return true;
            }
            for i in start..window.len() {
                idx[depth] = i;
                if rec(window, pattern, idx, depth + 1, i + 1) {
                    return true;
                }
            }
            false
        }
        !rec(&self.window, pattern, &mut idx, 0, 0)
    }

    /// The padded permutation 1^m x w = (1, ..., m, w_1 + m, ..., w_n + m).
    pub fn one_m_times(&self, m: usize) -> Permutation {
        let mut window: Vec<usize> = (1..=m).collect();
        window.extend(self.window.iter().map(|&v| v + m));
        Permutation { window }
    }

    /// Left weak order: u <= w iff Inv(u) is contained in Inv(w).
    pub fn weak_leq(&self, w: &Permutation) -> Result<bool> {
        self.check_same_n(w)?;
        let mine = self.inversions();
        let theirs: std::collections::BTreeSet<_> = w.inversions().into_iter().collect();
        Ok(mine.iter().all(|p| theirs.contains(p)))
    }

    /// Strong Bruhat order via sorted prefix domination: u <= w iff for every
    /// i, the ascending sort of u_1..u_i is entrywise <= that of w_1..w_i.
    pub fn strong_leq(&self, w: &Permutation) -> Result<bool> {
        self.check_same_n(w)?;
        let n = self.n();
        let mut mine: Vec<usize> = Vec::with_capacity(n);
        let mut theirs: Vec<usize> = Vec::with_capacity(n);
        for i in 0..n {
            let insert = |v: usize, sorted: &mut Vec<usize>| {
                let pos = sorted.partition_point(|&x| x < v);
                sorted.insert(pos, v);
            };
            insert(self.window[i], &mut mine);
            insert(w.window[i], &mut theirs);
            if mine.iter().zip(theirs.iter()).any(|(a, b)| a > b) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Cover relation of the mediocre Bruhat order: w = u t_{ij} for positions
    /// i < j with u_i < u_j such that every value strictly between u_i and u_j
    /// sits at a position left of i.
    pub fn mediocre_covers(&self, w: &Permutation) -> Result<bool> {
        self.check_same_n(w)?;
        let diff: Vec<usize> = (1..=self.n())
            .filter(|&p| self.window[p - 1] != w.window[p - 1])
            .collect();
        if diff.len() != 2 {
            return Ok(false);
        }
        let (i, j) = (diff[0], diff[1]);
        let (ui, uj) = (self.at(i), self.at(j));
        if !(ui < uj && w.at(i) == uj && w.at(j) == ui) {
            return Ok(false);
        }
        for x in (ui + 1)..uj {
            let pos = self.window.iter().position(|&v| v == x).unwrap() + 1;
            if pos >= i {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Mediocre Bruhat order, computed by entrywise comparison of Lehmer codes.
    pub fn mediocre_leq(&self, w: &Permutation) -> Result<bool> {
        self.check_same_n(w)?;
        let a = self.lehmer_code();
        let b = w.lehmer_code();
        Ok(a.entries.iter().zip(b.entries.iter()).all(|(x, y)| x <= y))
    }

    /// Mediocre Bruhat order by breadth-first closure of covers; an independent
    /// cross-check of [`Permutation::mediocre_leq`].
    pub fn mediocre_leq_by_covers(&self, w: &Permutation) -> Result<bool> {
        self.check_same_n(w)?;
        if self == w {
            return Ok(true);
        }
        let target_len = w.length();
        let mut queue = VecDeque::from([self.clone()]);
        let mut seen = std::collections::BTreeSet::from([self.clone()]);
        while let Some(u) = queue.pop_front() {
            if u.length() >= target_len {
                continue;
            }
            for i in 1..=u.n() {
                if let Ok(v) = u.mediocre_cover_target(i) {
                    if v == *w {
                        return Ok(true);
                    }
                    if seen.insert(v.clone()) {
                        queue.push_back(v);
                    }
                }
            }
        }
        Ok(false)
    }

    /// The unique mediocre cover that raises Lehmer entry i: swap position i
    /// with the position j > i holding the smallest value exceeding u_i.
    pub fn mediocre_cover_target(&self, i: usize) -> Result<Permutation> {
        let n = self.n();
        if i == 0 || i > n {
            return Err(Error::NoCover(format!("position {i} out of range")));
        }
        let ui = self.at(i);
        let mut best: Option<(usize, usize)> = None; // (value, position)
        for j in (i + 1)..=n {
            let v = self.at(j);
            if v > ui && best.is_none_or(|(bv, _)| v < bv) {
                best = Some((v, j));
            }
        }
        match best {
            Some((_, j)) => self.swap_positions(i, j),
            None => Err(Error::NoCover(format!(
                "no value after position {i} exceeds {ui}"
            ))),
        }
    }

    /// All reduced words of w, as letter sequences `b_1 ... b_l` read so that
    /// w = s_{b_1} ∘ s_{b_2} ∘ ... ∘ s_{b_l} (composition applies the rightmost
    /// factor first).
    pub fn reduced_words(&self) -> Vec<Vec<usize>> {
        fn rec(w: &Permutation, out: &mut Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
            let mut any = false;
            for i in 1..w.n() {
                // s_i ∘ w shortens w exactly when value i+1 sits left of value i.
                let pos_i = w.window.iter().position(|&v| v == i).unwrap();
                let pos_i1 = w.window.iter().position(|&v| v == i + 1).unwrap();
                if pos_i1 < pos_i {
                    any = true;
                    prefix.push(i);
                    let shorter = w.left_mul_adjacent(i).unwrap();
                    rec(&shorter, out, prefix);
                    prefix.pop();
                }
            }
            if !any {
                out.push(prefix.clone());
            }
        }
        let mut out = Vec::new();
        rec(self, &mut out, &mut Vec::new());
        out
    }

    /// Product of adjacent transpositions in reading order:
    /// `s_{word[0]} ∘ s_{word[1]} ∘ ...`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Permutation> {
        let mut acc = Permutation::identity(n);
        for &b in word {
            acc = acc.right_mul_adjacent(b)?;
        }
        Ok(acc)
    }

    /// All n! permutations of S_n in lexicographic window order.
    pub fn all(n: usize) -> Vec<Permutation> {
        use itertools::Itertools;
        (1..=n)
            .permutations(n)
            .map(|window| Permutation { window })
            .collect()
    }

    fn check_same_n(&self, other: &Permutation) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                got: other.n(),
            });
        }
        Ok(())
    }
}

/// Whether a code counts inversions by row (c_i = #{j > i : (i,j) in Inv})
/// or by column (c_j = #{i < j : (i,j) in Inv}).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum CodeRole {
    Row,
    Column,
}

/// A Lehmer code of either role with its range invariants enforced:
/// row codes satisfy c_i <= n - i, column codes c_j <= j - 1.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LehmerCode {
    entries: Vec<usize>,
    role: CodeRole,
}

impl LehmerCode {
    pub fn row(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        for (i, &c) in entries.iter().enumerate() {
            if c > n - (i + 1) {
                return Err(Error::InvalidLehmerCode(format!(
                    "row entry c_{} = {c} exceeds {}",
                    i + 1,
                    n - (i + 1)
                )));
            }
        }
        Ok(LehmerCode {
            entries,
            role: CodeRole::Row,
        })
    }

    pub fn column(entries: Vec<usize>) -> Result<Self> {
        for (j, &c) in entries.iter().enumerate() {
            if c > j {
                return Err(Error::InvalidLehmerCode(format!(
                    "column entry c_{} = {c} exceeds {j}",
                    j + 1
                )));
            }
        }
        Ok(LehmerCode {
            entries,
            role: CodeRole::Column,
        })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn role(&self) -> CodeRole {
        self.role
    }

    pub fn sum(&self) -> usize {
        self.entries.iter().sum()
    }
}
