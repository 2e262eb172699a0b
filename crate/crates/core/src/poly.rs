//! Exact sparse multivariate polynomials with arbitrary-precision integer
//! coefficients, and the symmetric-function toolbox built on them: Schubert
//! polynomials by three independent routes, (flagged/skew) Schur polynomials,
//! truncated Stanley symmetric functions, and the triangular expansion of a
//! symmetric polynomial into Schur polynomials.
//!
//! Monomials are compared in the order under which the extreme terms of a
//! Schubert polynomial are stated: a term is larger when it has the *smaller*
//! exponent at the first variable where two terms differ.  Under the standard
//! ordering of exponent vectors this maximum is the smallest vector, i.e. the
//! first key of the term map.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::pipedream::enumerate_rp;
use crate::tableau::{enumerate_it, enumerate_uit};

/// A polynomial in x_1..x_arity stored as exponent vector -> coefficient.
/// Zero coefficients are never stored; all exponent vectors share one arity.
#[derive(Clone, PartialEq, Eq, Debug, Deserialize)]
#[serde(try_from = "PolyJson")]
pub struct SparsePolynomial {
    arity: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    coef: i64,
}

#[derive(Deserialize)]
struct PolyJson {
    arity: usize,
    terms: Vec<TermJson>,
}

impl TryFrom<PolyJson> for SparsePolynomial {
    type Error = Error;
    fn try_from(p: PolyJson) -> Result<Self> {
        SparsePolynomial::from_terms(
            p.arity,
            p.terms.into_iter().map(|t| (t.exp, BigInt::from(t.coef))),
        )
    }
}

impl Serialize for SparsePolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (exp, coef) in &self.terms {
            let coef = coef.to_i64().ok_or_else(|| {
                serde::ser::Error::custom("coefficient does not fit a 64-bit integer")
            })?;
            terms.push(TermJson {
                exp: exp.clone(),
                coef,
            });
        }
        let mut st = s.serialize_struct("SparsePolynomial", 2)?;
        st.serialize_field("arity", &self.arity)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl SparsePolynomial {
    pub fn zero(arity: usize) -> Self {
        SparsePolynomial {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; arity], BigInt::one());
        SparsePolynomial { arity, terms }
    }

    pub fn monomial(arity: usize, exp: &[u32], coef: impl Into<BigInt>) -> Result<Self> {
        if exp.len() != arity {
            return Err(Error::ArityMismatch(arity, exp.len()));
        }
        let mut out = SparsePolynomial::zero(arity);
        out.add_term(exp.to_vec(), coef.into());
        Ok(out)
    }

    pub fn from_terms(
        arity: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>,
    ) -> Result<Self> {
        let mut out = SparsePolynomial::zero(arity);
        for (exp, coef) in terms {
            if exp.len() != arity {
                return Err(Error::ArityMismatch(arity, exp.len()));
            }
            out.add_term(exp, coef);
        }
        Ok(out)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: &[u32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, exp: Vec<u32>, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        debug_assert_eq!(exp.len(), self.arity);
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coef;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return SparsePolynomial::zero(self.arity);
        }
        SparsePolynomial {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v * c))
                .collect(),
        }
    }

    /// The largest term: smallest exponent vector under the standard order.
    pub fn lex_max_term(&self) -> Option<(&[u32], &BigInt)> {
        self.terms.iter().next().map(|(e, c)| (e.as_slice(), c))
    }

    /// The smallest term: largest exponent vector under the standard order.
    pub fn lex_min_term(&self) -> Option<(&[u32], &BigInt)> {
        self.terms
            .iter()
            .next_back()
            .map(|(e, c)| (e.as_slice(), c))
    }

    /// Exchanges x_i and x_{i+1} in every term.
    pub fn swap_variables(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.arity {
            return Err(Error::VariableOutOfRange {
                i,
                arity: self.arity,
            });
        }
        let mut out = SparsePolynomial::zero(self.arity);
        for (exp, coef) in &self.terms {
            let mut e = exp.clone();
            e.swap(i - 1, i);
            out.add_term(e, coef.clone());
        }
        Ok(out)
    }

    /// (f - swap_i(f)) / (x_i - x_{i+1}), computed monomial by monomial so
    /// the division is exact by construction:
    /// (x_i^a x_{i+1}^b - x_i^b x_{i+1}^a) / (x_i - x_{i+1}) =
    /// sum over t < a-b of x_i^(a-1-t) x_{i+1}^(b+t), for a > b, and the
    /// negated mirror image of that sum for a < b.
    pub fn divided_difference(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.arity {
            return Err(Error::VariableOutOfRange {
                i,
                arity: self.arity,
            });
        }
        let mut out = SparsePolynomial::zero(self.arity);
        for (exp, coef) in &self.terms {
            let (a, b) = (exp[i - 1], exp[i]);
            if a == b {
                continue;
            }
            let (hi, lo) = (a.max(b), a.min(b));
            let signed = if a > b { coef.clone() } else { -coef.clone() };
            for t in 0..(hi - lo) {
                let mut e = exp.clone();
                e[i - 1] = hi - 1 - t;
                e[i] = lo + t;
                out.add_term(e, signed.clone());
            }
        }
        Ok(out)
    }

    pub fn is_symmetric(&self) -> bool {
        (1..self.arity).all(|i| {
            self.swap_variables(i)
                .expect("index below arity")
                .eq(self)
        })
    }

    /// Sets x_{m+1}, ..., x_arity to zero and shortens the exponent vectors.
    pub fn truncate(&self, m: usize) -> Result<Self> {
        if m > self.arity {
            return Err(Error::ArityMismatch(self.arity, m));
        }
        let mut out = SparsePolynomial::zero(m);
        for (exp, coef) in &self.terms {
            if exp[m..].iter().all(|&e| e == 0) {
                out.add_term(exp[..m].to_vec(), coef.clone());
            }
        }
        Ok(out)
    }

    /// Reinterprets the polynomial in a larger variable set.
    pub fn extend(&self, m: usize) -> Result<Self> {
        if m < self.arity {
            return Err(Error::ArityMismatch(self.arity, m));
        }
        let mut out = SparsePolynomial::zero(m);
        for (exp, coef) in &self.terms {
            let mut e = exp.clone();
            e.resize(m, 0);
            out.add_term(e, coef.clone());
        }
        Ok(out)
    }

    /// Human-readable form such as `3*x1^2*x2 + x3`, terms largest first.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (exp, coef)) in self.terms.iter().enumerate() {
            let vars: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(idx, &e)| {
                    if e == 1 {
                        format!("x{}", idx + 1)
                    } else {
                        format!("x{}^{}", idx + 1, e)
                    }
                })
                .collect();
            let body = vars.join("*");
            let piece = if body.is_empty() {
                coef.to_string()
            } else if coef == &BigInt::one() {
                body
            } else if coef == &(-BigInt::one()) {
                format!("-{body}")
            } else {
                format!("{coef}*{body}")
            };
            if k == 0 {
                out.push_str(&piece);
            } else if let Some(rest) = piece.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&piece);
            }
        }
        out
    }
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.arity, rhs.arity, "polynomial arity mismatch");
        let mut out = self.clone();
        for (exp, coef) in &rhs.terms {
            out.add_term(exp.clone(), coef.clone());
        }
        out
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.arity, rhs.arity, "polynomial arity mismatch");
        let mut out = self.clone();
        for (exp, coef) in &rhs.terms {
            out.add_term(exp.clone(), -coef.clone());
        }
        out
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.arity, rhs.arity, "polynomial arity mismatch");
        let mut out = SparsePolynomial::zero(self.arity);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let exp: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exp, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        SparsePolynomial {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }
}

/// A weakly decreasing sequence of positive parts (trailing zeros trimmed).
/// Serializes as a plain array.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part, 1-indexed, zero beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// True when other fits inside self row by row.
    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.rows()).all(|i| other.part(i) <= self.part(i))
    }
}

/// All partitions of d with at most max_rows rows and parts at most max_part.
pub fn partitions_of(d: u32, max_rows: usize, max_part: u32) -> Vec<Partition> {
    fn rec(
        remaining: u32,
        rows_left: usize,
        cap: u32,
        acc: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition::new(acc.clone()).expect("built weakly decreasing"));
            return;
        }
        if rows_left == 0 || cap == 0 {
            return;
        }
        for part in (1..=cap.min(remaining)).rev() {
            acc.push(part);
            rec(remaining - part, rows_left - 1, part, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, max_rows, max_part, &mut Vec::new(), &mut out);
    out
}

/// Which ascent to climb when walking up to the longest element.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PathStrategy {
    FirstAscent,
    LastAscent,
}

/// The Schubert polynomial of w by divided differences, in x_1..x_{n-1}:
/// start from x_1^{n-1} x_2^{n-2} ... x_{n-1} at the longest element and
/// apply one divided difference per step of a length-increasing walk from w.
pub fn schubert_dd(w: &Permutation) -> SparsePolynomial {
    schubert_dd_with(w, PathStrategy::FirstAscent)
}

pub fn schubert_dd_with(w: &Permutation, strategy: PathStrategy) -> SparsePolynomial {
    let n = w.n();
    let max_len = n * (n - 1) / 2;
    let mut u = w.clone();
    let mut path = Vec::with_capacity(max_len - u.length());
    while u.length() < max_len {
        let i = match strategy {
            PathStrategy::FirstAscent => (1..n)
                .find(|&i| u.at(i) < u.at(i + 1))
                .expect("shorter than the longest element"),
            PathStrategy::LastAscent => (1..n)
                .rev()
                .find(|&i| u.at(i) < u.at(i + 1))
                .expect("shorter than the longest element"),
        };
        u = u.right_mul_adjacent(i).expect("index below n");
        path.push(i);
    }
    let staircase: Vec<u32> = (0..n).map(|k| (n - 1 - k) as u32).collect();
    let mut f = SparsePolynomial::monomial(n, &staircase, 1).expect("arity matches");
    for &i in path.iter().rev() {
        f = f.divided_difference(i).expect("index below arity");
    }
    f.truncate(n.saturating_sub(1))
        .expect("narrowing the arity")
}

/// The Schubert polynomial as the weight generating sum of the inversions
/// tableaux of w.
pub fn schubert_from_tableaux(w: &Permutation) -> SparsePolynomial {
    let arity = w.n() - 1;
    let mut out = SparsePolynomial::zero(arity);
    for t in enumerate_it(w) {
        let exp = t.weight(arity).expect("entries stay below n");
        out.add_term(exp, BigInt::one());
    }
    out
}

/// The Schubert polynomial as the weight generating sum of the reduced pipe
/// dreams of w.
pub fn schubert_from_pipedreams(w: &Permutation) -> SparsePolynomial {
    let arity = w.n() - 1;
    let mut out = SparsePolynomial::zero(arity);
    for p in enumerate_rp(w) {
        let mut exp = p.weight();
        let last = exp.pop();
        assert_eq!(last, Some(0), "the bottom row has no crossing tiles");
        out.add_term(exp, BigInt::one());
    }
    out
}

/// The exponent of the largest monomial of the Schubert polynomial of w:
/// the Lehmer code of w.
pub fn lex_max_monomial(w: &Permutation) -> Vec<u32> {
    let code = w.lehmer_code();
    code.entries()[..w.n() - 1]
        .iter()
        .map(|&e| e as u32)
        .collect()
}

/// The exponent of the smallest monomial: x_i appears once per column-code
/// entry that is at least i.
pub fn lex_min_monomial(w: &Permutation) -> Vec<u32> {
    let ccode = w.column_lehmer_code();
    (1..w.n())
        .map(|i| ccode.entries().iter().filter(|&&c| c >= i).count() as u32)
        .collect()
}

/// Cells and entry bounds shared by the semistandard enumerations: rows
/// weakly increase, columns strictly increase, and row i is capped at
/// caps[i-1].
fn ssyt_polynomial(outer: &Partition, inner: &Partition, caps: &[u32], arity: usize) -> SparsePolynomial {
    let rows = outer.rows();
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for i in 1..=rows {
        for j in (inner.part(i) + 1)..=outer.part(i) {
            cells.push((i, j as usize));
        }
    }

    struct Search<'a> {
        outer: &'a Partition,
        inner: &'a Partition,
        caps: &'a [u32],
        cells: &'a [(usize, usize)],
        grid: Vec<Vec<u32>>,
        weight: Vec<u32>,
        out: SparsePolynomial,
    }

    impl Search<'_> {
        fn rec(&mut self, k: usize) {
            if k == self.cells.len() {
                let exp = self.weight.clone();
                self.out.add_term(exp, BigInt::one());
                return;
            }
            let (i, j) = self.cells[k];
            let mut low = 1;
            if j as u32 > self.inner.part(i) + 1 {
                low = low.max(self.grid[i][j - 1]);
            }
            if i > 1 && j as u32 > self.inner.part(i - 1) && j as u32 <= self.outer.part(i - 1) {
                low = low.max(self.grid[i - 1][j] + 1);
            }
            let high = self.caps[i - 1];
            for v in low..=high {
                self.grid[i][j] = v;
                self.weight[v as usize - 1] += 1;
                self.rec(k + 1);
                self.weight[v as usize - 1] -= 1;
            }
            self.grid[i][j] = 0;
        }
    }

    let width = outer.part(1) as usize;
    let mut search = Search {
        outer,
        inner,
        caps,
        cells: &cells,
        grid: vec![vec![0; width + 1]; rows + 1],
        weight: vec![0; arity],
        out: SparsePolynomial::zero(arity),
    };
    if caps.iter().take(rows).all(|&c| c as usize <= arity) {
        search.rec(0);
    }
    search.out
}

/// The Schur polynomial s_lambda(x_1..x_k).
pub fn schur(lambda: &Partition, k: usize) -> SparsePolynomial {
    ssyt_polynomial(lambda, &Partition::empty(), &vec![k as u32; lambda.rows()], k)
}

/// The flagged Schur polynomial: row i entries at most flags[i-1].
pub fn flagged_schur(lambda: &Partition, flags: &[u32]) -> Result<SparsePolynomial> {
    if flags.windows(2).any(|p| p[0] > p[1]) {
        return Err(Error::InvalidFlags(format!(
            "{flags:?} is not weakly increasing"
        )));
    }
    if flags.len() < lambda.rows() {
        return Err(Error::InvalidFlags(format!(
            "{} flags cannot cover {} rows",
            flags.len(),
            lambda.rows()
        )));
    }
    let arity = flags.last().copied().unwrap_or(0) as usize;
    Ok(ssyt_polynomial(
        lambda,
        &Partition::empty(),
        &flags[..lambda.rows()],
        arity,
    ))
}

/// The skew Schur polynomial s_{lambda/mu}(x_1..x_k).
pub fn skew_schur(lambda: &Partition, mu: &Partition, k: usize) -> Result<SparsePolynomial> {
    if !lambda.contains(mu) {
        return Err(Error::NotNested(format!(
            "inner shape {:?} does not fit in outer shape {:?}",
            mu.parts(),
            lambda.parts()
        )));
    }
    Ok(ssyt_polynomial(
        lambda,
        mu,
        &vec![k as u32; lambda.rows()],
        k,
    ))
}

/// The Stanley symmetric function of w cut to m variables: the weight
/// generating sum of the m-bounded unbounded-rule tableaux of w.
pub fn stanley_truncated(w: &Permutation, m: usize) -> SparsePolynomial {
    let mut out = SparsePolynomial::zero(m);
    for t in enumerate_uit(w, m as u32) {
        let exp = t.weight(m).expect("entries bounded by m");
        out.add_term(exp, BigInt::one());
    }
    out
}

/// Expands a symmetric polynomial as an integer combination of Schur
/// polynomials by repeatedly clearing the extreme term, whose exponent must
/// be a partition; a non-partition leader means the input was not symmetric.
pub fn schur_expand(f: &SparsePolynomial) -> Result<BTreeMap<Partition, BigInt>> {
    let k = f.arity();
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while let Some((exp, coef)) = rest
        .terms()
        .iter()
        .next_back()
        .map(|(e, c)| (e.clone(), c.clone()))
    {
        if exp.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::Expansion(format!(
                "extreme exponent {exp:?} is not a partition; the input is not symmetric"
            )));
        }
        let lambda = Partition::new(exp)?;
        rest = &rest - &schur(&lambda, k).scale(&coef);
        out.insert(lambda, coef);
    }
    Ok(out)
}

/// The coefficients of s_mu * s_nu on the Schur basis, computed in
/// max(1, |mu| + |nu|) variables so that no partition of the product degree
/// is out of reach.
pub fn schur_product_expand(
    mu: &Partition,
    nu: &Partition,
) -> Result<BTreeMap<Partition, BigInt>> {
    let k = ((mu.size() + nu.size()) as usize).max(1);
    schur_expand(&(&schur(mu, k) * &schur(nu, k)))
}

/// The Littlewood-Richardson coefficient of s_lambda in s_mu * s_nu.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigInt> {
    if lambda.size() != mu.size() + nu.size() {
        return Ok(BigInt::zero());
    }
    Ok(schur_product_expand(mu, nu)?
        .remove(lambda)
        .unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(window: &[usize]) -> Permutation {
        Permutation::new(window.to_vec()).unwrap()
    }

    fn poly(arity: usize, terms: &[(&[u32], i64)]) -> SparsePolynomial {
        SparsePolynomial::from_terms(
            arity,
            terms
                .iter()
                .map(|&(e, c)| (e.to_vec(), BigInt::from(c))),
        )
        .unwrap()
    }

    #[test]
    fn arithmetic_collects_and_cancels_terms() {
        let f = poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let square = &f * &f;
        assert_eq!(
            square,
            poly(2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)])
        );
        assert!((&f - &f).is_zero());
        assert_eq!(&(&square + &f) - &f, square);
        assert_eq!((-&f).coefficient(&[1, 0]), BigInt::from(-1));
    }

    #[test]
    fn divided_difference_examples() {
        let f = poly(2, &[(&[2, 1], 1)]);
        assert_eq!(f.divided_difference(1).unwrap(), poly(2, &[(&[1, 1], 1)]));

        // symmetric input vanishes
        let sym = poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        assert!(sym.divided_difference(1).unwrap().is_zero());

        // second difference of the staircase of S3 ends at x1
        let g = poly(3, &[(&[2, 1, 0], 1)]);
        let step = g.divided_difference(1).unwrap();
        assert_eq!(step, poly(3, &[(&[1, 1, 0], 1)]));
        assert_eq!(
            step.divided_difference(2).unwrap(),
            poly(3, &[(&[1, 0, 0], 1)])
        );
    }

    #[test]
    fn difference_operator_relations_hold() {
        let f = poly(
            4,
            &[(&[3, 1, 0, 2], 5), (&[0, 2, 2, 1], -3), (&[1, 1, 4, 0], 7)],
        );
        for i in 1..4 {
            let once = f.divided_difference(i).unwrap();
            assert!(once.divided_difference(i).unwrap().is_zero());
        }
        let d1 = |p: &SparsePolynomial| p.divided_difference(1).unwrap();
        let d2 = |p: &SparsePolynomial| p.divided_difference(2).unwrap();
        let d3 = |p: &SparsePolynomial| p.divided_difference(3).unwrap();
        assert_eq!(d3(&d1(&f)), d1(&d3(&f)));
        assert_eq!(d1(&d2(&d1(&f))), d2(&d1(&d2(&f))));
        assert_eq!(d2(&d3(&d2(&f))), d3(&d2(&d3(&f))));
    }

    type TermTable<'a> = &'a [(&'a [usize], &'a [(&'a [u32], i64)])];

    #[test]
    fn schubert_table_for_s3() {
        let table: TermTable = &[
            (&[1, 2, 3], &[(&[0, 0], 1)]),
            (&[2, 1, 3], &[(&[1, 0], 1)]),
            (&[1, 3, 2], &[(&[1, 0], 1), (&[0, 1], 1)]),
            (&[2, 3, 1], &[(&[1, 1], 1)]),
            (&[3, 1, 2], &[(&[2, 0], 1)]),
            (&[3, 2, 1], &[(&[2, 1], 1)]),
        ];
        for &(window, terms) in table {
            let w = perm(window);
            let expected = poly(2, terms);
            assert_eq!(schubert_dd(&w), expected, "dd for {window:?}");
            assert_eq!(schubert_from_tableaux(&w), expected);
            assert_eq!(schubert_from_pipedreams(&w), expected);
        }
    }

    #[test]
    fn schubert_431562_has_three_terms() {
        let w = perm(&[4, 3, 1, 5, 6, 2]);
        let expected = poly(
            5,
            &[
                (&[3, 2, 0, 1, 1], 1),
                (&[3, 2, 1, 0, 1], 1),
                (&[3, 2, 1, 1, 0], 1),
            ],
        );
        assert_eq!(schubert_dd(&w), expected);
        assert_eq!(schubert_from_tableaux(&w), expected);
        assert_eq!(schubert_from_pipedreams(&w), expected);
    }

    #[test]
    fn routes_and_paths_agree_on_s4() {
        for w in Permutation::all(4) {
            let dd = schubert_dd(&w);
            assert_eq!(dd, schubert_dd_with(&w, PathStrategy::LastAscent));
            assert_eq!(dd, schubert_from_tableaux(&w));
            assert_eq!(dd, schubert_from_pipedreams(&w));
        }
    }

    #[test]
    fn difference_steps_down_to_shorter_permutations() {
        for w in Permutation::all(4) {
            let f = schubert_dd(&w).extend(4).unwrap();
            for i in w.descents() {
                let shorter = w.right_mul_adjacent(i).unwrap();
                assert_eq!(
                    f.divided_difference(i).unwrap(),
                    schubert_dd(&shorter).extend(4).unwrap()
                );
            }
        }
    }

    #[test]
    fn extreme_monomials_bound_the_schubert_terms() {
        let w = perm(&[4, 3, 1, 5, 6, 2]);
        assert_eq!(lex_max_monomial(&w), vec![3, 2, 0, 1, 1]);
        assert_eq!(lex_min_monomial(&w), vec![3, 2, 1, 1, 0]);

        let id = Permutation::identity(4);
        assert_eq!(lex_max_monomial(&id), vec![0, 0, 0]);
        assert_eq!(lex_min_monomial(&id), vec![0, 0, 0]);

        for w in Permutation::all(4) {
            let f = schubert_dd(&w);
            let max = lex_max_monomial(&w);
            let min = lex_min_monomial(&w);
            assert_eq!(f.coefficient(&max), BigInt::one());
            assert_eq!(f.coefficient(&min), BigInt::one());
            assert_eq!(f.lex_max_term().unwrap().0, max.as_slice());
            assert_eq!(f.lex_min_term().unwrap().0, min.as_slice());
            if w.is_dominant() {
                assert_eq!(f.len(), 1);
                assert_eq!(max, min);
            }
        }
    }

    #[test]
    fn schur_polynomials_from_column_strict_fillings() {
        let lambda = Partition::new(vec![1]).unwrap();
        assert_eq!(
            schur(&lambda, 3),
            poly(3, &[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[0, 0, 1], 1)])
        );
        assert_eq!(schur(&Partition::empty(), 2), SparsePolynomial::one(2));

        let big = Partition::new(vec![5, 3, 2]).unwrap();
        let s = schur(&big, 4);
        assert!(s.coefficient(&[1, 4, 3, 2]) > BigInt::zero());
        assert!(s.is_symmetric());

        let l21 = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(
            schur(&l21, 3),
            flagged_schur(&l21, &[3, 3]).unwrap()
        );
        assert_eq!(
            schur(&l21, 3),
            skew_schur(&l21, &Partition::empty(), 3).unwrap()
        );
    }

    #[test]
    fn flagged_fillings_respect_row_caps() {
        let l21 = Partition::new(vec![2, 1]).unwrap();
        // row 1 capped at 1, row 2 at 2: fillings 11/2 only
        let f = flagged_schur(&l21, &[1, 2]).unwrap();
        assert_eq!(f, poly(2, &[(&[2, 1], 1)]));
        assert!(flagged_schur(&l21, &[2, 1]).is_err());
        assert!(flagged_schur(&l21, &[2]).is_err());
    }

    #[test]
    fn skew_shapes_sum_over_free_corners() {
        let l21 = Partition::new(vec![2, 1]).unwrap();
        let m1 = Partition::new(vec![1]).unwrap();
        // two independent boxes
        assert_eq!(
            skew_schur(&l21, &m1, 2).unwrap(),
            poly(2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)])
        );
        assert_eq!(skew_schur(&l21, &l21, 3).unwrap(), SparsePolynomial::one(3));
        assert!(skew_schur(&m1, &l21, 2).is_err());
    }

    #[test]
    fn stanley_truncations_match_stable_limits() {
        assert_eq!(
            stanley_truncated(&perm(&[2, 1]), 2),
            poly(2, &[(&[1, 0], 1), (&[0, 1], 1)])
        );
        let f321 = stanley_truncated(&perm(&[3, 2, 1]), 2);
        assert_eq!(f321, poly(2, &[(&[2, 1], 1), (&[1, 2], 1)]));

        // agreement with the shifted Schubert polynomial, cut to 2 variables
        let shifted = perm(&[3, 2, 1]).one_m_times(3);
        assert_eq!(schubert_dd(&shifted).truncate(2).unwrap(), f321);
        for w in Permutation::all(3) {
            for m in 1..=3 {
                let f = stanley_truncated(&w, m);
                assert!(f.is_symmetric(), "{} not symmetric", w.display_string());
            }
        }
    }

    #[test]
    fn schur_expansion_is_triangular_and_exact() {
        let l21 = Partition::new(vec![2, 1]).unwrap();
        let expansion = schur_expand(&schur(&l21, 3)).unwrap();
        assert_eq!(expansion, BTreeMap::from([(l21.clone(), BigInt::one())]));

        let m1 = Partition::new(vec![1]).unwrap();
        let product = schur_product_expand(&m1, &m1).unwrap();
        assert_eq!(
            product,
            BTreeMap::from([
                (Partition::new(vec![2]).unwrap(), BigInt::one()),
                (Partition::new(vec![1, 1]).unwrap(), BigInt::one()),
            ])
        );

        assert!(schur_expand(&poly(2, &[(&[1, 0], 1)])).is_err());
    }

    #[test]
    fn littlewood_richardson_small_values() {
        let m1 = Partition::new(vec![1]).unwrap();
        let l2 = Partition::new(vec![2]).unwrap();
        let l11 = Partition::new(vec![1, 1]).unwrap();
        let l21 = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(lr_coefficient(&l2, &m1, &m1).unwrap(), BigInt::one());
        assert_eq!(lr_coefficient(&l11, &m1, &m1).unwrap(), BigInt::one());
        assert_eq!(lr_coefficient(&l21, &m1, &m1).unwrap(), BigInt::zero());

        // skew expansions are nonnegative and match lr coefficients
        let skew = skew_schur(&l21, &m1, 2).unwrap();
        let coeffs = schur_expand(&skew).unwrap();
        assert_eq!(
            coeffs,
            BTreeMap::from([
                (l2.clone(), BigInt::one()),
                (l11.clone(), BigInt::one())
            ])
        );
        for (nu, c) in &coeffs {
            assert_eq!(*c, lr_coefficient(&l21, &m1, nu).unwrap());
        }
    }

    #[test]
    fn partitions_are_enumerated_with_bounds() {
        assert_eq!(partitions_of(5, 5, 5).len(), 7);
        assert_eq!(partitions_of(5, 2, 5).len(), 3); // 5, 41, 32
        assert_eq!(partitions_of(5, 5, 2).len(), 3); // 221, 2111, 11111
        assert_eq!(partitions_of(0, 3, 3), vec![Partition::empty()]);
        let l22 = Partition::new(vec![2, 2]).unwrap();
        assert!(l22.contains(&Partition::new(vec![2, 1]).unwrap()));
        assert!(!l22.contains(&Partition::new(vec![3]).unwrap()));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(
            Partition::new(vec![2, 1, 0]).unwrap(),
            Partition::new(vec![2, 1]).unwrap()
        );
    }

    #[test]
    fn json_terms_are_sorted_largest_first() {
        let f = schubert_dd(&perm(&[4, 3, 1, 5, 6, 2]));
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(
            json,
            r#"{"arity":5,"terms":[{"exp":[3,2,0,1,1],"coef":1},{"exp":[3,2,1,0,1],"coef":1},{"exp":[3,2,1,1,0],"coef":1}]}"#
        );
        assert_eq!(serde_json::from_str::<SparsePolynomial>(&json).unwrap(), f);

        let huge = SparsePolynomial::monomial(1, &[1], BigInt::from(i64::MAX) + 1).unwrap();
        assert!(serde_json::to_string(&huge).is_err());
        assert!(serde_json::from_str::<SparsePolynomial>(r#"{"arity":2,"terms":[{"exp":[1],"coef":1}]}"#).is_err());
    }

    #[test]
    fn rendering_matches_the_documented_shape() {
        assert_eq!(poly(2, &[(&[2, 1], 3)]).render(), "3*x1^2*x2");
        assert_eq!(SparsePolynomial::one(3).render(), "1");
        assert_eq!(SparsePolynomial::zero(2).render(), "0");
        assert_eq!(poly(2, &[(&[1, 0], -2)]).render(), "-2*x1");
        assert_eq!(
            poly(2, &[(&[0, 1], 1), (&[1, 0], -1)]).render(),
            "x2 - x1"
        );
        assert_eq!(
            schubert_dd(&perm(&[4, 3, 1, 5, 6, 2])).render(),
            "x1^3*x2^2*x4*x5 + x1^3*x2^2*x3*x5 + x1^3*x2^2*x3*x4"
        );
    }

    #[test]
    fn truncate_and_extend_are_inverse_on_safe_inputs() {
        let f = poly(3, &[(&[1, 2, 0], 4), (&[0, 0, 3], 1)]);
        let cut = f.truncate(2).unwrap();
        assert_eq!(cut, poly(2, &[(&[1, 2], 4)]));
        assert_eq!(cut.extend(3).unwrap(), poly(3, &[(&[1, 2, 0], 4)]));
        assert!(f.truncate(4).is_err());
        assert!(f.extend(2).is_err());
    }
}
