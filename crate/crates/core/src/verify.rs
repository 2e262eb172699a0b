//! Named property checks over whole symmetric groups, powering the CLI
//! `verify` subcommand.  Each check sweeps S_n for the requested n (a few
//! hold their own scale where exhaustive enumeration explodes, e.g. the
//! all-subsets diagram check) and reports the first violation it finds.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chute::{audit_chute_moves, build_chute_poset, lehmer_tableau, row_bound_equivalence};
use crate::diagram::InversionsDiagram;
use crate::grassmann::{
    enumerate_flagged_ssyt, enumerate_reverse_ssyt, it_to_reverse_ssyt, lambda_of,
    reverse_ssyt_to_it, skew_schubert,
};
use crate::perm::{LehmerCode, Permutation};
use crate::pipedream::{enumerate_rp, PipeDream};
use crate::poly::{
    flagged_schur, lr_coefficient, partitions_of, schubert_dd, schubert_dd_with,
    schubert_from_pipedreams, schubert_from_tableaux, schur, schur_expand, skew_schur,
    stanley_truncated, Partition, PathStrategy, SparsePolynomial,
};
use crate::tableau::{
    enumerate_it, enumerate_uit, staircase_boxes, StaircaseFilling,
};

/// The three check families selectable from the command line.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Core,
    Grassmann,
    Chute,
}

/// One named property; `run` sweeps the symmetric group of the given size.
pub struct Check {
    pub name: &'static str,
    pub suite: Suite,
    pub run: fn(usize) -> Result<(), String>,
}

/// The full registry, in reporting order.
pub fn all_checks() -> Vec<Check> {
    use Suite::*;
    vec![
        Check { name: "perm-inversion-count-matches-code-sums", suite: Core, run: code_sums },
        Check { name: "perm-code-roundtrip", suite: Core, run: code_roundtrip },
        Check { name: "perm-code-formulas-agree", suite: Core, run: code_formulas },
        Check { name: "perm-order-chain-weak-mediocre-strong", suite: Core, run: order_chain },
        Check { name: "perm-mediocre-closure-matches-codes", suite: Core, run: mediocre_closure },
        Check { name: "perm-cover-raises-one-code-entry", suite: Core, run: cover_codes },
        Check { name: "diagram-containment-is-weak-order", suite: Core, run: diagram_weak_order },
        Check { name: "diagram-dominance-four-ways", suite: Core, run: dominance_four_ways },
        Check { name: "diagram-validity-by-subsets", suite: Core, run: diagram_validity },
        Check { name: "tableau-balance-matches-rectangle-rule", suite: Core, run: balance_rule },
        Check { name: "tableau-diagonal-bound-matches-row-bound", suite: Core, run: it3_forms },
        Check { name: "tableau-counts-match-pipe-dreams", suite: Core, run: count_match },
        Check { name: "tableau-dominant-is-rigid", suite: Core, run: dominant_rigid },
        Check { name: "tableau-hooks-are-odd", suite: Core, run: hooks_odd },
        Check { name: "pipedream-bijection-preserves-weight", suite: Core, run: weight_preserved },
        Check { name: "pipedream-bijection-roundtrip", suite: Core, run: bijection_roundtrip },
        Check { name: "pipedream-entries-locate-crossings", suite: Core, run: entry_semantics },
        Check { name: "pipedream-no-crossing-below-its-pipe", suite: Core, run: crossing_row_bound },
        Check { name: "poly-three-routes-agree", suite: Core, run: three_routes },
        Check { name: "poly-divided-difference-relations", suite: Core, run: dd_relations },
        Check { name: "poly-path-independence", suite: Core, run: path_independence },
        Check { name: "poly-stanley-stabilization", suite: Core, run: stanley_stabilization },
        Check { name: "poly-schur-expansion-consistency", suite: Core, run: schur_expansion },
        Check { name: "grassmann-schubert-is-schur", suite: Grassmann, run: grassmann_schur },
        Check { name: "grassmann-inverse-is-flagged-schur", suite: Grassmann, run: grassmann_flagged },
        Check { name: "grassmann-skew-matches-littlewood-richardson", suite: Grassmann, run: grassmann_skew },
        Check { name: "grassmann-shadings-form-young-lattice", suite: Grassmann, run: young_lattice },
        Check { name: "chute-moves-audit", suite: Chute, run: chute_audit },
        Check { name: "chute-posets-are-lattices", suite: Chute, run: chute_lattices },
        Check { name: "chute-lehmer-monotone-along-order", suite: Chute, run: lehmer_monotone },
        Check { name: "chute-row-bound-equivalence", suite: Chute, run: row_bound },
    ]
}

/// Runs every check of the selected suite (or all of them) at size n,
/// in registry order.
pub fn run(n: usize, suite: Option<Suite>) -> Vec<(&'static str, Result<(), String>)> {
    all_checks()
        .into_iter()
        .filter(|c| suite.is_none_or(|s| c.suite == s))
        .map(|c| (c.name, (c.run)(n)))
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<T>(e: T) -> String
where
    T: std::fmt::Display,
{
    e.to_string()
}

fn code_sums(n: usize) -> Result<(), String> {
    for w in Permutation::all(n) {
        let inv = w.inversions().len();
        ensure(inv == w.lehmer_code().sum(), || {
            format!("row code sum mismatch for {}", w.display_string())
        })?;
        ensure(inv == w.column_lehmer_code().sum(), || {
            format!("column code sum mismatch for {}", w.display_string())
        })?;
    }
    Ok(())
}

fn code_roundtrip(n: usize) -> Result<(), String> {
    for w in Permutation::all(n) {
        let back = Permutation::from_lehmer_code(&w.lehmer_code()).map_err(err)?;
        ensure(back == w, || {
            format!("code roundtrip failed for {}", w.display_string())
        })?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x0c0de);
    for _ in 0..10_000 {
        let entries: Vec<usize> = (0..n).map(|i| rng.gen_range(0..n - i)).collect();
        let code = LehmerCode::row(entries.clone()).map_err(err)?;
        let w = Permutation::from_lehmer_code(&code).map_err(err)?;
        ensure(w.lehmer_code().entries() == &entries[..], || {
            format!("random code {entries:?} did not survive the roundtrip")
        })?;
    }
    Ok(())
}

fn code_formulas(n: usize) -> Result<(), String> {
    for w in Permutation::all(n) {
        // alternative formula: values smaller than w_i unused so far
        let alt: Vec<usize> = (1..=n)
            .map(|i| {
                (1..w.at(i))
                    .filter(|&v| !(1..i).any(|p| w.at(p) == v))
                    .count()
            })
            .collect();
        ensure(w.lehmer_code().entries() == &alt[..], || {
            format!("code formulas disagree for {}", w.display_string())
        })?;
    }
    Ok(())
}

fn order_chain(n: usize) -> Result<(), String> {
    let perms = Permutation::all(n);
    for u in &perms {
        for w in &perms {
            let weak = u.weak_leq(w).map_err(err)?;
            let mediocre = u.mediocre_leq(w).map_err(err)?;
            let strong = u.strong_leq(w).map_err(err)?;
            ensure(!weak || mediocre, || {
                format!(
                    "weak but not mediocre: {} vs {}",
                    u.display_string(),
                    w.display_string()
                )
            })?;
            ensure(!mediocre || strong, || {
                format!(
                    "mediocre but not strong: {} vs {}",
                    u.display_string(),
                    w.display_string()
                )
            })?;
        }
    }
    Ok(())
}

fn mediocre_closure(n: usize) -> Result<(), String> {
    let perms = Permutation::all(n);
    for u in &perms {
        for w in &perms {
            let by_code = u.mediocre_leq(w).map_err(err)?;
            let by_covers = u.mediocre_leq_by_covers(w).map_err(err)?;
            ensure(by_code == by_covers, || {
                format!(
                    "mediocre order definitions disagree: {} vs {}",
                    u.display_string(),
                    w.display_string()
                )
            })?;
        }
    }
    Ok(())
}

fn cover_codes(n: usize) -> Result<(), String> {
    for u in Permutation::all(n) {
        for i in 1..=n {
            let Ok(v) = u.mediocre_cover_target(i) else {
                continue;
            };
            let mut expected = u.lehmer_code().entries().to_vec();
            expected[i - 1] += 1;
            ensure(v.lehmer_code().entries() == &expected[..], || {
                format!(
                    "cover from {} at position {i} moved more than one code entry",
                    u.display_string()
                )
            })?;
            ensure(u.mediocre_covers(&v).unwrap_or(false), || {
                format!(
                    "cover target of {} at position {i} is not a cover",
                    u.display_string()
                )
            })?;
        }
    }
    Ok(())
}

fn diagram_weak_order(n: usize) -> Result<(), String> {
    let perms = Permutation::all(n);
    for u in &perms {
        for w in &perms {
            let du: BTreeSet<_> = u.inversions().into_iter().collect();
            let dw: BTreeSet<_> = w.inversions().into_iter().collect();
            ensure(du.is_subset(&dw) == u.weak_leq(w).map_err(err)?, || {
                format!(
                    "diagram containment disagrees with weak order: {} vs {}",
                    u.display_string(),
                    w.display_string()
                )
            })?;
        }
    }
    Ok(())
}

fn dominance_four_ways(n: usize) -> Result<(), String> {
    for w in Permutation::all(n) {
        let code_decreasing = w.is_dominant();
        let avoids = w.avoids_pattern(&[1, 3, 2]);
        let diagram = InversionsDiagram::of_permutation(&w);
        let downward = diagram.is_column_downward_closed();
        let shape = diagram.is_dominant_shape();
        ensure(
            code_decreasing == avoids && avoids == downward && downward == shape,
            || {
                format!(
                    "dominance conditions split for {}: code {code_decreasing}, pattern {avoids}, closure {downward}, shape {shape}",
                    w.display_string()
                )
            },
        )?;
    }
    Ok(())
}

fn diagram_validity(n: usize) -> Result<(), String> {
    // all subsets of the staircase; exhaustive only at desk scale
    let n = n.min(5);
    let boxes = staircase_boxes(n);
    let valid: BTreeSet<Vec<(usize, usize)>> = Permutation::all(n)
        .iter()
        .map(|w| InversionsDiagram::of_permutation(w).cells().to_vec())
        .collect();
    for mask in 0u32..(1 << boxes.len()) {
        let cells: Vec<(usize, usize)> = boxes
            .iter()
            .enumerate()
            .filter(|&(b, _)| mask >> b & 1 == 1)
            .map(|(_, &cell)| cell)
            .collect();
        let diagram = InversionsDiagram::new(n, cells.clone()).map_err(err)?;
        ensure(diagram.is_valid() == valid.contains(&cells), || {
            format!("validity misjudged the subset {cells:?}")
        })?;
    }
    Ok(())
}

fn balance_rule(n: usize) -> Result<(), String> {
    // exhaustive on the three-box staircase, then seeded random fillings
    let boxes3 = staircase_boxes(3);
    for mask in 0..3u32.pow(boxes3.len() as u32) {
        let mut m = mask;
        let values: Vec<u32> = (0..boxes3.len())
            .map(|_| {
                let v = m % 3;
                m /= 3;
                v
            })
            .collect();
        let filling = StaircaseFilling::new(
            3,
            boxes3.iter().copied().zip(values.iter().copied()),
        )
        .map_err(err)?;
        ensure(
            filling.is_weakly_balanced() == filling.satisfies_rectangle_rule(),
            || format!("balance and rectangle rule split on {values:?}"),
        )?;
    }
    let n = n.max(4);
    let boxes = staircase_boxes(n);
    let mut rng = ChaCha8Rng::seed_from_u64(0xba1a);
    for _ in 0..10_000 {
        let filling = StaircaseFilling::new(
            n,
            boxes.iter().map(|&b| (b, rng.gen_range(0..=4u32))),
        )
        .map_err(err)?;
        ensure(
            filling.is_weakly_balanced() == filling.satisfies_rectangle_rule(),
            || "balance and rectangle rule split on a random filling".into(),
        )?;
    }
    Ok(())
}

fn it3_forms(n: usize) -> Result<(), String> {
    for w in Permutation::all(n) {
        for u in enumerate_uit(&w, n as u32) {
            ensure(
                u.satisfies_diagonal_bound() == u.satisfies_row_bound(),
                || {
                    format!(
                        "diagonal and row bounds split on a filling of {}",
                        w.display_string()
                    )
                },
            )?;
        }
    }
    Ok(())
}

fn count_match(n: usize) -> Result<(), String> {
    for w in Permutation::all(n) {
        let tableaux = enumerate_it(&w).len();
        let dreams = enumerate_rp(&w).len();
        ensure(tableaux == dreams, || {
            format!(
                "{} has {tableaux} tableaux but {dreams} pipe dreams",
                w.display_string()
            )
        })?;
    }
    Ok(())
}

fn dominant_rigid(n: usize) -> Result<(), String> {
    for w in Permutation::all(n) {
        if !w.is_dominant() {
            continue;
        }
        let tableaux = enumerate_it(&w);
        ensure(tableaux.len() == 1, || {
            format!("dominant {} is not rigid", w.display_string())
        })?;
        ensure(
            tableaux[0]
                .entries()
                .iter()
                .all(|(&(i, _), &v)| v as usize == i),
            || {
                format!(
                    "dominant {} has an entry off its row index",
                    w.display_string()
                )
            },
        )?;
    }
    Ok(())
}

fn hooks_odd(n: usize) -> Result<(), String> {
    for (i, j) in staircase_boxes(n) {
        let hook = crate::tableau::hook(n, i, j).map_err(err)?;
        ensure(hook.len() % 2 == 1, || {
            format!("hook of ({i},{j}) has even size {}", hook.len())
        })?;
    }
    Ok(())
}

fn weight_preserved(n: usize) -> Result<(), String> {
    for w in Permutation::all(n) {
        for p in enumerate_rp(&w) {
            let t = p.to_tableau().map_err(err)?;
            ensure(t.weight(n).map_err(err)? == p.weight(), || {
                format!("the bijection moved weight on {}", w.display_string())
            })?;
        }
    }
    Ok(())
}

fn bijection_roundtrip(n: usize) -> Result<(), String> {
    for w in Permutation::all(n) {
        let dreams = enumerate_rp(&w);
        let mut images = BTreeSet::new();
        for p in &dreams {
            let t = p.to_tableau().map_err(err)?;
            ensure(&PipeDream::from_tableau(&t).map_err(err)? == p, || {
                format!("roundtrip failed on a pipe dream of {}", w.display_string())
            })?;
            images.insert(t);
        }
        ensure(images.len() == dreams.len(), || {
            format!("the bijection is not injective on {}", w.display_string())
        })?;
        let tableaux: BTreeSet<_> = enumerate_it(&w).into_iter().collect();
        ensure(images == tableaux, || {
            format!("the bijection is not onto for {}", w.display_string())
        })?;
    }
    Ok(())
}

fn entry_semantics(n: usize) -> Result<(), String> {
    for w in Permutation::all(n) {
        for p in enumerate_rp(&w) {
            let t = p.to_tableau().map_err(err)?;
            for (cell, (i, j)) in p.crossing_pipes() {
                ensure(t.get(i, j) as usize == cell.0, || {
                    format!(
                        "entry at ({i},{j}) does not name the crossing row for {}",
                        w.display_string()
                    )
                })?;
            }
        }
    }
    Ok(())
}

fn crossing_row_bound(n: usize) -> Result<(), String> {
    for w in Permutation::all(n) {
        for p in enumerate_rp(&w) {
            for (cell, (i, j)) in p.crossing_pipes() {
                ensure(cell.0 <= i.min(j), || {
                    format!(
                        "pipes {i},{j} cross below row {} on {}",
                        i.min(j),
                        w.display_string()
                    )
                })?;
            }
        }
    }
    Ok(())
}

fn three_routes(n: usize) -> Result<(), String> {
    for w in Permutation::all(n) {
        let dd = schubert_dd(&w);
        ensure(schubert_from_tableaux(&w) == dd, || {
            format!("tableau route differs for {}", w.display_string())
        })?;
        ensure(schubert_from_pipedreams(&w) == dd, || {
            format!("pipe-dream route differs for {}", w.display_string())
        })?;
    }
    Ok(())
}

fn random_polynomial(rng: &mut ChaCha8Rng, arity: usize) -> SparsePolynomial {
    let terms: Vec<(Vec<u32>, BigInt)> = (0..rng.gen_range(1..=6))
        .map(|_| {
            let exp: Vec<u32> = (0..arity).map(|_| rng.gen_range(0..4u32)).collect();
            (exp, BigInt::from(rng.gen_range(-5..=5i32)))
        })
        .collect();
    SparsePolynomial::from_terms(arity, terms).expect("matching arities")
}

fn dd_relations(_n: usize) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xdd);
    // A fixed sparse polynomial whose terms pair with absent mirror images;
    // it once exposed a braid violation, so it stays as a regression probe
    // alongside the random sweep.
    let probe = SparsePolynomial::from_terms(
        4,
        [
            (vec![2, 1, 2, 3], BigInt::from(-1)),
            (vec![3, 0, 3, 2], BigInt::from(-1)),
        ],
    )
    .expect("matching arities");
    for round in 0..=100usize {
        let f = if round == 0 {
            probe.clone()
        } else {
            random_polynomial(&mut rng, 4)
        };
        let d1 = f.divided_difference(1).map_err(err)?;
        ensure(d1.divided_difference(1).map_err(err)?.is_zero(), || {
            "a divided difference failed to square to zero".into()
        })?;
        let d3 = f.divided_difference(3).map_err(err)?;
        ensure(
            d3.divided_difference(1).map_err(err)? == d1.divided_difference(3).map_err(err)?,
            || "distant divided differences failed to commute".into(),
        )?;
        let d121 = d1
            .divided_difference(2)
            .and_then(|g| g.divided_difference(1))
            .map_err(err)?;
        let d212 = f
            .divided_difference(2)
            .and_then(|g| g.divided_difference(1))
            .and_then(|g| g.divided_difference(2))
            .map_err(err)?;
        ensure(d121 == d212, || {
            "the braid relation failed on a random polynomial".into()
        })?;
    }
    Ok(())
}

fn path_independence(n: usize) -> Result<(), String> {
    for w in Permutation::all(n) {
        let first = schubert_dd_with(&w, PathStrategy::FirstAscent);
        let last = schubert_dd_with(&w, PathStrategy::LastAscent);
        ensure(first == last, || {
            format!("two reduced paths disagree for {}", w.display_string())
        })?;
    }
    Ok(())
}

fn stanley_stabilization(n: usize) -> Result<(), String> {
    let n = n.min(4);
    for w in Permutation::all(n) {
        for m in 1..=3usize {
            let stanley = stanley_truncated(&w, m);
            ensure(stanley.is_symmetric(), || {
                format!(
                    "truncated Stanley polynomial of {} is asymmetric in {m} variables",
                    w.display_string()
                )
            })?;
            // Prepending `shift` fixed points pushes every box of the
            // diagram below row `shift`, so entries up to m = shift + 1 are
            // no longer constrained by the row bound; that is the point at
            // which the truncation stabilizes.  Below it the two sides can
            // genuinely differ (x_3 is absent from the shift-1 polynomial
            // of 2134) so only the stabilized range is comparable.
            for shift in [w.length(), w.length() + 1, m.saturating_sub(1), m] {
                if m > shift + 1 {
                    continue;
                }
                let shifted = w.one_m_times(shift);
                let poly = schubert_dd(&shifted);
                let truncated = if poly.arity() >= m {
                    poly.truncate(m)
                } else {
                    poly.extend(m)
                }
                .map_err(err)?;
                ensure(stanley == truncated, || {
                    format!(
                        "Stanley stabilization fails for {} with {shift} leading fixed points",
                        w.display_string()
                    )
                })?;
            }
        }
    }
    Ok(())
}

fn schur_expansion(n: usize) -> Result<(), String> {
    let k = n.clamp(2, 4);
    let shapes: Vec<Partition> = (0..=5u32)
        .flat_map(|d| partitions_of(d, k, 5))
        .collect();
    for lambda in &shapes {
        let expansion = schur_expand(&schur(lambda, k)).map_err(err)?;
        let expected: BTreeMap<Partition, BigInt> =
            [(lambda.clone(), BigInt::from(1))].into_iter().collect();
        ensure(expansion == expected, || {
            format!("self-expansion failed for {:?}", lambda.parts())
        })?;
        for mu in &shapes {
            if !lambda.contains(mu) || lambda == mu {
                continue;
            }
            let skew = skew_schur(lambda, mu, k).map_err(err)?;
            let expansion = schur_expand(&skew).map_err(err)?;
            for (nu, coef) in &expansion {
                ensure(coef > &BigInt::from(0), || {
                    format!(
                        "negative skew expansion coefficient at {:?} for {:?}/{:?}",
                        nu.parts(),
                        lambda.parts(),
                        mu.parts()
                    )
                })?;
                ensure(
                    &lr_coefficient(lambda, mu, nu).map_err(err)? == coef,
                    || {
                        format!(
                            "skew expansion disagrees with the coefficient routine on {:?}/{:?}",
                            lambda.parts(),
                            mu.parts()
                        )
                    },
                )?;
            }
        }
    }
    Ok(())
}

fn grassmann_schur(n: usize) -> Result<(), String> {
    for w in Permutation::all(n) {
        let Some(k) = w.is_grassmannian() else {
            continue;
        };
        let lambda = lambda_of(&w, k).map_err(err)?;
        ensure(
            schubert_dd(&w) == schur(&lambda, k).extend(n - 1).map_err(err)?,
            || format!("Schur identity fails for {}", w.display_string()),
        )?;
        let tableaux = enumerate_it(&w);
        let reverses = enumerate_reverse_ssyt(&lambda, k as u32);
        ensure(tableaux.len() == reverses.len(), || {
            format!("tableau counts differ for {}", w.display_string())
        })?;
        for t in &tableaux {
            let r = it_to_reverse_ssyt(t).map_err(err)?;
            ensure(reverse_ssyt_to_it(&r, &w, k).map_err(err)? == *t, || {
                format!("reverse-tableau roundtrip fails for {}", w.display_string())
            })?;
            ensure(
                r.weight(k).map_err(err)? == t.weight(k).map_err(err)?,
                || format!("reverse tableau moved weight for {}", w.display_string()),
            )?;
        }
    }
    Ok(())
}

fn grassmann_flagged(n: usize) -> Result<(), String> {
    for w in Permutation::all(n) {
        let Some(k) = w.is_grassmannian() else {
            continue;
        };
        let mut shape = Vec::new();
        let mut flags = Vec::new();
        for r in 1..=(n - k) {
            let b = w.at(k + r);
            if k + r <= b {
                break;
            }
            shape.push((k + r - b) as u32);
            flags.push(b as u32);
        }
        let shape = Partition::new(shape).map_err(err)?;
        ensure(
            schubert_dd(&w.inverse())
                == flagged_schur(&shape, &flags)
                    .map_err(err)?
                    .extend(n - 1)
                    .map_err(err)?,
            || format!("flagged Schur identity fails for {}", w.display_string()),
        )?;
        ensure(
            enumerate_it(&w.inverse()).len()
                == enumerate_flagged_ssyt(&shape, &flags).map_err(err)?.len(),
            || format!("flagged tableau count differs for {}", w.display_string()),
        )?;
    }
    Ok(())
}

fn grassmann_skew(n: usize) -> Result<(), String> {
    let perms = Permutation::all(n);
    for w in &perms {
        let Some(k) = w.is_grassmannian() else {
            continue;
        };
        let wset: BTreeSet<_> = w.inversions().into_iter().collect();
        for u in &perms {
            if u.length() > 0 && u.is_grassmannian() != Some(k) {
                continue;
            }
            let uset: BTreeSet<_> = u.inversions().into_iter().collect();
            if !uset.is_subset(&wset) {
                continue;
            }
            let g = skew_schubert(w, u, k).map_err(err)?;
            let lambda = lambda_of(w, k).map_err(err)?;
            let mu = lambda_of(u, k).map_err(err)?;
            ensure(g == skew_schur(&lambda, &mu, k).map_err(err)?, || {
                format!(
                    "skew polynomial differs for {} / {}",
                    w.display_string(),
                    u.display_string()
                )
            })?;
            let mut by_coefficients = SparsePolynomial::zero(k);
            let d = lambda.size() - mu.size();
            for nu in partitions_of(d, k, d.max(1)) {
                let c = lr_coefficient(&lambda, &mu, &nu).map_err(err)?;
                by_coefficients = &by_coefficients + &schur(&nu, k).scale(&c);
            }
            ensure(g == by_coefficients, || {
                format!(
                    "coefficient expansion differs for {} / {}",
                    w.display_string(),
                    u.display_string()
                )
            })?;
        }
    }
    Ok(())
}

fn young_lattice(n: usize) -> Result<(), String> {
    for w in Permutation::all(n) {
        let Some(k) = w.is_grassmannian() else {
            continue;
        };
        let lambda = lambda_of(&w, k).map_err(err)?;
        let mut expected = BTreeSet::new();
        for r in 1..=lambda.rows() {
            for c in 1..=lambda.part(r) as usize {
                expected.insert((k + 1 - r, k + c));
            }
        }
        let shading: BTreeSet<_> = w.inversions().into_iter().collect();
        ensure(shading == expected, || {
            format!(
                "the shading of {} is not the Young diagram of {:?}",
                w.display_string(),
                lambda.parts()
            )
        })?;
    }
    Ok(())
}

fn chute_audit(n: usize) -> Result<(), String> {
    for w in Permutation::all(n) {
        audit_chute_moves(&w).map_err(err)?;
    }
    Ok(())
}

fn chute_lattices(n: usize) -> Result<(), String> {
    for w in Permutation::all(n) {
        ensure(build_chute_poset(&w).is_lattice(), || {
            format!("the chute poset of {} is not a lattice", w.display_string())
        })?;
    }
    Ok(())
}

fn lehmer_monotone(n: usize) -> Result<(), String> {
    for w in Permutation::all(n) {
        let poset = build_chute_poset(&w);
        let lehmers: Vec<_> = poset
            .vertices()
            .iter()
            .map(|p| lehmer_tableau(&p.to_tableau().expect("reduced")))
            .collect();
        for a in 0..poset.len() {
            for b in 0..poset.len() {
                if !poset.leq(a, b) {
                    continue;
                }
                ensure(
                    lehmers[a]
                        .entries()
                        .iter()
                        .all(|(cell, &v)| lehmers[b].entries()[cell] >= v),
                    || {
                        format!(
                            "Lehmer entries drop along the order for {}",
                            w.display_string()
                        )
                    },
                )?;
            }
        }
    }
    Ok(())
}

fn row_bound(n: usize) -> Result<(), String> {
    for w in Permutation::all(n) {
        for t in enumerate_it(&w) {
            let l = lehmer_tableau(&t);
            for c in 1..=n {
                ensure(row_bound_equivalence(&l, c).map_err(err)?, || {
                    format!(
                        "Lehmer row bound fails in column {c} for {}",
                        w.display_string()
                    )
                })?;
            }
        }
    }
    Ok(())
}
