//! Executable invariant suites behind `symmpol verify`.

use clap::ValueEnum;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::characters::{dimension, z_order, CharacterCache, CharacterQuery};
use crate::partitions::{enumerate_partitions, partitions_up_to, YoungDiagram};
use crate::symfun::{
    at_q, elementary, hall_littlewood, homogeneous, miwa_push, monomial, schur,
    schur_via_characters, AlphabetContext,
};

/// Upper bound on `--max-boxes`.
pub const MAX_VERIFY_BOXES: usize = 8;

/// Alphabet sizes swept by the degeneration checks.
pub const DEGENERATION_ALPHABETS: [usize; 2] = [3, 4];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyScope {
    Degenerations,
    Characters,
    Oracles,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub scope: &'static str,
    pub name: &'static str,
    pub checked: usize,
    pub failed: usize,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

fn tally(scope: &'static str, name: &'static str, results: &[bool]) -> CheckOutcome {
    CheckOutcome {
        scope,
        name,
        checked: results.len(),
        failed: results.iter().filter(|ok| !**ok).count(),
    }
}

pub fn run_scope(scope: VerifyScope, max_boxes: usize) -> Vec<CheckOutcome> {
    match scope {
        VerifyScope::Degenerations => degenerations(max_boxes),
        VerifyScope::Characters => characters(max_boxes),
        VerifyScope::Oracles => oracles(max_boxes),
        VerifyScope::All => {
            let mut all = degenerations(max_boxes);
            all.extend(characters(max_boxes));
            all.extend(oracles(max_boxes));
            all
        }
    }
}

pub fn render(scope: VerifyScope, max_boxes: usize, outcomes: &[CheckOutcome]) -> String {
    let mut text = String::new();
    for o in outcomes {
        let status = if o.passed() { "PASS" } else { "FAIL" };
        text.push_str(&format!(
            "{status} {}/{} checked={} failed={}\n",
            o.scope, o.name, o.checked, o.failed
        ));
    }
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    if failed == 0 {
        text.push_str(&format!(
            "verify {scope} max-boxes={max_boxes}: all {} checks passed\n",
            outcomes.len()
        ));
    } else {
        text.push_str(&format!(
            "verify {scope} max-boxes={max_boxes}: {failed} of {} checks FAILED\n",
            outcomes.len()
        ));
    }
    text
}

/// Q → 0 gives Schur and Q → 1 gives monomial, for every λ and alphabet.
pub fn degenerations(max_boxes: usize) -> Vec<CheckOutcome> {
    let cases: Vec<(YoungDiagram, usize)> = partitions_up_to(max_boxes)
        .into_iter()
        .flat_map(|lam| DEGENERATION_ALPHABETS.map(|n| (lam.clone(), n)))
        .collect();
    let results: Vec<(bool, Option<(bool, bool)>)> = cases
        .par_iter()
        .map(|(lam, n)| {
            let ctx = AlphabetContext::new(*n).expect("alphabets are nonempty");
            let pushed = miwa_push(&schur(lam, None), &ctx).expect("schur is a t-polynomial");
            let mono = monomial(lam, &ctx);
            if lam.rows() > *n {
                return (pushed.is_zero() && mono.is_zero(), None);
            }
            let p = hall_littlewood(lam, &ctx).expect("rows fit the alphabet");
            (true, Some((at_q(&p, 0) == pushed, at_q(&p, 1) == mono)))
        })
        .collect();
    let q0: Vec<bool> = results.iter().filter_map(|r| r.1.map(|x| x.0)).collect();
    let q1: Vec<bool> = results.iter().filter_map(|r| r.1.map(|x| x.1)).collect();
    let vanish: Vec<bool> = results
        .iter()
        .filter(|r| r.1.is_none())
        .map(|r| r.0)
        .collect();
    vec![
        tally("degenerations", "hall_littlewood_q0_is_schur", &q0),
        tally("degenerations", "hall_littlewood_q1_is_monomial", &q1),
        tally("degenerations", "vanishing_beyond_alphabet", &vanish),
    ]
}

/// Full character table of S_n: `table[λ][μ]` over `enumerate_partitions(n)`.
pub fn character_table(n: usize) -> (Vec<YoungDiagram>, Vec<Vec<i64>>) {
    let parts = enumerate_partitions(n);
    let mut cache = CharacterCache::new();
    let table = parts
        .iter()
        .map(|lam| {
            parts
                .iter()
                .map(|mu| {
                    let q =
                        CharacterQuery::new(lam.clone(), mu.to_conjugacy()).expect("same weight");
                    cache.character(&q)
                })
                .collect()
        })
        .collect();
    (parts, table)
}

pub fn characters(max_boxes: usize) -> Vec<CheckOutcome> {
    let (mut first, mut second, mut twist, mut dims) = (vec![], vec![], vec![], vec![]);
    for n in 0..=max_boxes {
        let (parts, table) = character_table(n);
        let z: Vec<BigRational> = parts
            .iter()
            .map(|mu| BigRational::from_integer(BigInt::from(z_order(&mu.to_conjugacy()))))
            .collect();
        let k = parts.len();
        for a in 0..k {
            for b in 0..k {
                let sum: BigRational = (0..k)
                    .map(|m| BigRational::from_integer((table[a][m] * table[b][m]).into()) / &z[m])
                    .sum();
                let expected = if a == b {
                    BigRational::one()
                } else {
                    BigRational::zero()
                };
                first.push(sum == expected);

                let col: i64 = (0..k).map(|l| table[l][a] * table[l][b]).sum();
                let expected = if a == b {
                    z[a].clone()
                } else {
                    BigRational::zero()
                };
                second.push(BigRational::from_integer(col.into()) == expected);
            }
        }
        for (l, lam) in parts.iter().enumerate() {
            let lt = parts
                .iter()
                .position(|p| *p == lam.transpose())
                .expect("closed under transpose");
            for (m, mu) in parts.iter().enumerate() {
                let sign = if (n - mu.rows()) % 2 == 0 { 1 } else { -1 };
                twist.push(table[lt][m] == sign * table[l][m]);
            }
            // identity class {1: n}
            let id = parts
                .iter()
                .position(|p| p.parts().iter().all(|&x| x == 1))
                .expect("1^n exists");
            dims.push(BigInt::from(table[l][id]) == BigInt::from(dimension(lam)));
        }
    }
    vec![
        tally("characters", "first_orthogonality", &first),
        tally("characters", "second_orthogonality", &second),
        tally("characters", "transpose_twist", &twist),
        tally("characters", "identity_is_hook_dimension", &dims),
    ]
}

pub fn oracles(max_boxes: usize) -> Vec<CheckOutcome> {
    let all = partitions_up_to(max_boxes);
    let dual: Vec<bool> = all
        .par_iter()
        .map(|lam| schur(lam, None) == schur_via_characters(lam))
        .collect();
    let rows: Vec<bool> = (0..=max_boxes)
        .map(|n| schur(&YoungDiagram::from_unsorted(vec![n]), None) == homogeneous(n))
        .collect();
    let columns: Vec<bool> = (0..=max_boxes)
        .map(|n| schur(&YoungDiagram::from_unsorted(vec![1; n]), None) == elementary(n))
        .collect();
    let pairs: Vec<(&YoungDiagram, &YoungDiagram)> = all
        .iter()
        .flat_map(|l| all.iter().map(move |m| (l, m)))
        .collect();
    let skew: Vec<bool> = pairs
        .par_iter()
        .map(|(lam, mu)| {
            let s = schur(lam, Some(mu));
            if mu.is_empty() {
                s == schur(lam, None)
            } else if lam.contains(mu) {
                true
            } else {
                s.is_zero()
            }
        })
        .collect();
    vec![
        tally("oracles", "jacobi_trudi_vs_characters", &dual),
        tally("oracles", "single_row_is_homogeneous", &rows),
        tally("oracles", "single_column_is_elementary", &columns),
        tally("oracles", "skew_consistency", &skew),
    ]
}
