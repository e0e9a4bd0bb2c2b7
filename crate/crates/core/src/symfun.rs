//! The symmetric-polynomial families.
//!
//! `h_n`, `e_n` and the (skew-)Schur polynomials live in the Miwa
//! coordinates `t_j = (1/j) Σ_i x_i^j`; monomial and Hall–Littlewood
//! polynomials live in an explicit alphabet `x_1 … x_N` (plus `Q`).
//! [`miwa_push`] moves a `t`-polynomial into a given alphabet.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use thiserror::Error;

use crate::characters::{CharacterCache, CharacterQuery};
use crate::partitions::{enumerate_partitions, ConjugacyClass, YoungDiagram};
use crate::polyalgebra::{Monomial, PolyError, Polynomial, Variable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymFunError {
    #[error("a coordinate context needs at least one variable")]
    EmptyContext,
    #[error("partition has {rows} rows but only {vars} variables are available")]
    TooManyRows { rows: usize, vars: usize },
    #[error("expected a polynomial in Miwa variables only, found {0}")]
    NotMiwa(Variable),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Miwa coordinates `t_1 … t_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MiwaContext {
    count: usize,
}

impl MiwaContext {
    pub fn new(count: usize) -> Result<Self, SymFunError> {
        if count == 0 {
            return Err(SymFunError::EmptyContext);
        }
        Ok(Self { count })
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn variables(&self) -> Vec<Variable> {
        (1..=self.count as u32).map(Variable::T).collect()
    }
}

/// Alphabet `x_1 … x_N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlphabetContext {
    count: usize,
}

impl AlphabetContext {
    pub fn new(count: usize) -> Result<Self, SymFunError> {
        if count == 0 {
            return Err(SymFunError::EmptyContext);
        }
        Ok(Self { count })
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn variables(&self) -> Vec<Variable> {
        (1..=self.count as u32).map(Variable::X).collect()
    }

    /// Power sum `p_j = Σ_i x_i^j`.
    pub fn power_sum(&self, j: u32) -> Polynomial {
        self.variables()
            .into_iter()
            .map(|v| Polynomial::term(BigRational::one(), Monomial::from_powers([(v, j)])))
            .sum()
    }
}

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `Π_j t_j^{k_j} / k_j!` for a cycle type `{j → k_j}`.
fn miwa_class_term(mu: &ConjugacyClass) -> Polynomial {
    let mut denom = BigInt::one();
    let mut powers = Vec::new();
    for (&j, &k) in mu.multiplicities() {
        denom *= factorial(k);
        powers.push((Variable::T(j as u32), k as u32));
    }
    Polynomial::term(
        BigRational::new(BigInt::one(), denom),
        Monomial::from_powers(powers),
    )
}

/// Complete homogeneous `h_n(t) = Σ_{Σ j k_j = n} Π_j t_j^{k_j}/k_j!`.
pub fn homogeneous(n: usize) -> Polynomial {
    enumerate_partitions(n)
        .iter()
        .map(|d| miwa_class_term(&d.to_conjugacy()))
        .sum()
}

/// Elementary `e_n(t) = (−1)^n h_n(−t)`.
pub fn elementary(n: usize) -> Polynomial {
    let flip: BTreeMap<Variable, Polynomial> = (1..=n as u32)
        .map(|j| (Variable::T(j), -Polynomial::var(Variable::T(j))))
        .collect();
    let flipped = homogeneous(n).substitute(&flip);
    if n.is_multiple_of(2) {
        flipped
    } else {
        -flipped
    }
}

/// `h_k` with `h_k = 0` for negative `k`.
fn homogeneous_table(max: usize) -> Vec<Polynomial> {
    (0..=max).map(homogeneous).collect()
}

/// Determinant of a square polynomial matrix by Laplace expansion over
/// column subsets: `minors[S]` is the determinant of the first `|S|` rows
/// restricted to the columns in `S`.
fn determinant(matrix: &[Vec<Polynomial>]) -> Polynomial {
    let m = matrix.len();
    if m == 0 {
        return Polynomial::one();
    }
    let mut minors: Vec<Option<Polynomial>> = vec![None; 1 << m];
    minors[0] = Some(Polynomial::one());
    for mask in 0usize..(1 << m) {
        let Some(minor) = minors[mask].take() else {
            continue;
        };
        if minor.is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == m {
            minors[mask] = Some(minor);
            continue;
        }
        for col in 0..m {
            if mask & (1 << col) != 0 || matrix[row][col].is_zero() {
                continue;
            }
            // Sign of placing `col` after the columns already used, in row order.
            let later = (mask >> col).count_ones();
            let mut contribution = &minor * &matrix[row][col];
            if later % 2 == 1 {
                contribution = -contribution;
            }
            let slot = &mut minors[mask | (1 << col)];
            match slot {
                Some(acc) => *acc += &contribution,
                None => *slot = Some(contribution),
            }
        }
        minors[mask] = Some(minor);
    }
    minors[(1 << m) - 1].take().unwrap_or_default()
}

/// Skew Schur `s_{λ/μ}(t) = det(h_{λ_q − μ_p − q + p})` via Jacobi–Trudi.
///
/// The matrix has size `rows(λ)`; `μ` is zero-padded. When `μ ⊄ λ` the
/// determinant vanishes.
pub fn schur(lam: &YoungDiagram, mu: Option<&YoungDiagram>) -> Polynomial {
    let empty = YoungDiagram::empty();
    let mu = mu.unwrap_or(&empty);
    let m = lam.rows();
    if mu.rows() > m {
        return Polynomial::zero();
    }
    let h = homogeneous_table(lam.columns() + m);
    let matrix: Vec<Vec<Polynomial>> = (0..m)
        .map(|p| {
            (0..m)
                .map(|q| {
                    let k = lam.part(q) as i64 - mu.part(p) as i64 - q as i64 + p as i64;
                    if k < 0 {
                        Polynomial::zero()
                    } else {
                        h[k as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    determinant(&matrix)
}

/// `s_λ(t) = Σ_{μ ⊢ |λ|} χ^λ(μ) Π_j t_j^{k_j}/k_j!` (Frobenius formula).
pub fn schur_via_characters(lam: &YoungDiagram) -> Polynomial {
    let mut cache = CharacterCache::new();
    let mut out = Polynomial::zero();
    for mu in enumerate_partitions(lam.boxes()) {
        let class = mu.to_conjugacy();
        let query = CharacterQuery::new(lam.clone(), class.clone())
            .expect("classes are drawn from partitions of |λ|");
        let chi = cache.character(&query);
        if chi != 0 {
            out += &miwa_class_term(&class).scale(&rational(chi, 1));
        }
    }
    out
}

/// Sends every `t_j` to `(1/j) Σ_{i ≤ N} x_i^j`.
pub fn miwa_push(p: &Polynomial, ctx: &AlphabetContext) -> Result<Polynomial, SymFunError> {
    let mut bindings = BTreeMap::new();
    for v in p.variables() {
        match v {
            Variable::T(j) => {
                bindings.insert(v, ctx.power_sum(j).scale(&rational(1, j as i64)));
            }
            other => return Err(SymFunError::NotMiwa(other)),
        }
    }
    Ok(p.substitute(&bindings))
}

/// Monomial symmetric polynomial: the sum of `x^α` over distinct
/// rearrangements `α` of `λ` padded with zeros to length `N`.
pub fn monomial(lam: &YoungDiagram, ctx: &AlphabetContext) -> Polynomial {
    let n = ctx.count();
    if lam.rows() > n {
        return Polynomial::zero();
    }
    let mut exps: Vec<usize> = (0..n).map(|i| lam.part(i)).collect();
    exps.sort_unstable();
    let mut out = Polynomial::zero();
    loop {
        out.add_term(x_monomial(&exps), BigRational::one());
        if !next_permutation(&mut exps) {
            break;
        }
    }
    out
}

/// Lexicographic successor of a sequence; false once it was the last one.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn x_monomial(exps: &[usize]) -> Monomial {
    Monomial::from_powers(
        exps.iter()
            .enumerate()
            .map(|(i, &e)| (Variable::X(i as u32 + 1), e as u32)),
    )
}

fn x_exponents(m: &Monomial, n: usize) -> (Vec<usize>, u32) {
    let mut exps = vec![0; n];
    let mut q_deg = 0;
    for &(v, e) in m.powers() {
        match v {
            Variable::X(i) => exps[i as usize - 1] = e as usize,
            Variable::Q => q_deg = e,
            Variable::T(_) => unreachable!("Hall–Littlewood numerators have no Miwa variables"),
        }
    }
    (exps, q_deg)
}

/// Counters from one Hall–Littlewood evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HallLittlewoodStats {
    /// `N!`: permutations summed for each alternant.
    pub permutations: usize,
    /// Distinct strictly decreasing exponent vectors in the antisymmetrized numerator.
    pub alternants: usize,
}

/// Hall–Littlewood `P_λ(x_1 … x_N; Q)`.
pub fn hall_littlewood(
    lam: &YoungDiagram,
    ctx: &AlphabetContext,
) -> Result<Polynomial, SymFunError> {
    hall_littlewood_with_stats(lam, ctx).map(|(p, _)| p)
}

/// Evaluates `P_λ` as
///
/// 1. `A = Σ_{ω ∈ S_N} sgn(ω) ω(x^λ Π_{i<j} (x_i − Q x_j))`,
/// 2. `A / Π_{i<j} (x_i − x_j)`, exactly,
/// 3. divided by `Π_{i ≥ 0} [p(i)]_Q!` with `p(0) = N − rows(λ)`.
///
/// The numerator is expanded once. A term whose `x`-exponents repeat
/// antisymmetrizes to zero, and terms whose exponents are rearrangements of
/// one another antisymmetrize to `±` the same alternant, so `A` is assembled
/// as `Σ_β c_β(Q) a_β` with `a_β = Σ_ω sgn(ω) ω(x^β)` over strictly
/// decreasing `β`. Each `a_β` is divided by the Vandermonde product, which is
/// the same as dividing `A` by linearity.
pub fn hall_littlewood_with_stats(
    lam: &YoungDiagram,
    ctx: &AlphabetContext,
) -> Result<(Polynomial, HallLittlewoodStats), SymFunError> {
    let n = ctx.count();
    if lam.rows() > n {
        return Err(SymFunError::TooManyRows {
            rows: lam.rows(),
            vars: n,
        });
    }
    let q = Polynomial::var(Variable::Q);
    let x = |i: usize| Polynomial::var(Variable::X(i as u32 + 1));

    // Numerator x^λ Π_{i<j}(x_i − Q x_j), pruned: once every factor touching
    // x_i has been applied its exponent is final, and two equal final
    // exponents make the whole term vanish under antisymmetrization.
    let lam_exps: Vec<usize> = (0..n).map(|i| lam.part(i)).collect();
    let mut numerator = Polynomial::term(BigRational::one(), x_monomial(&lam_exps));
    for i in 0..n {
        for j in i + 1..n {
            numerator = &numerator * &(x(i) - &q * &x(j));
        }
        let mut pruned = Polynomial::zero();
        for (m, c) in numerator.terms() {
            let (exps, _) = x_exponents(m, n);
            if exps[..=i].iter().all_unique() {
                pruned.add_term(m.clone(), c.clone());
            }
        }
        numerator = pruned;
    }

    // c_β(Q) for strictly decreasing β.
    let mut alternant_coeffs: BTreeMap<Vec<usize>, Polynomial> = BTreeMap::new();
    for (m, c) in numerator.terms() {
        let (exps, q_deg) = x_exponents(m, n);
        if !exps.iter().all_unique() {
            continue;
        }
        let inversions = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| exps[a] < exps[b])
            .count();
        let mut beta = exps;
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let mut coeff = c.clone();
        if inversions % 2 == 1 {
            coeff = -coeff;
        }
        let q_term = Polynomial::term(coeff, Monomial::from_powers([(Variable::Q, q_deg)]));
        *alternant_coeffs.entry(beta).or_default() += &q_term;
    }
    alternant_coeffs.retain(|_, c| !c.is_zero());

    let quotients: Vec<Polynomial> = alternant_coeffs
        .par_iter()
        .map(|(beta, c)| -> Result<Polynomial, SymFunError> {
            let a = alternant(beta);
            Ok(c * &divide_by_vandermonde(a, n)?)
        })
        .collect::<Result<_, _>>()?;
    let symmetric: Polynomial = quotients.into_iter().sum();

    let result = symmetric.exact_divide(&q_factorial_normalizer(lam, n))?;
    let stats = HallLittlewoodStats {
        permutations: (1..=n).product(),
        alternants: alternant_coeffs.len(),
    };
    Ok((result, stats))
}

/// `a_β = Σ_{ω ∈ S_N} sgn(ω) x_{ω(1)}^{β_1} ⋯ x_{ω(N)}^{β_N}`, summed in
/// parallel over the choice of `ω(1)`.
fn alternant(beta: &[usize]) -> Polynomial {
    let n = beta.len();
    let parts: Vec<Polynomial> = (0..n)
        .into_par_iter()
        .map(|first| {
            let rest: Vec<usize> = (0..n).filter(|&v| v != first).collect();
            let mut part = Polynomial::zero();
            let mut image = vec![0usize; n];
            for perm in rest.iter().copied().permutations(n - 1) {
                image[0] = first;
                image[1..].copy_from_slice(&perm);
                let mut exps = vec![0usize; n];
                for (slot, &target) in image.iter().enumerate() {
                    exps[target] = beta[slot];
                }
                let inversions = (0..n)
                    .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                    .filter(|&(a, b)| image[a] > image[b])
                    .count();
                let sign = if inversions % 2 == 0 { 1 } else { -1 };
                part.add_term(x_monomial(&exps), rational(sign, 1));
            }
            part
        })
        .collect();
    parts.into_iter().sum()
}

/// Divides by `Π_{i<j} (x_i − x_j)` one linear factor at a time.
fn divide_by_vandermonde(mut p: Polynomial, n: usize) -> Result<Polynomial, PolyError> {
    for i in 1..=n as u32 {
        for j in i + 1..=n as u32 {
            let factor = Polynomial::var(Variable::X(i)) - Polynomial::var(Variable::X(j));
            p = p.exact_divide(&factor)?;
        }
    }
    Ok(p)
}

/// `[m]_Q! = Π_{j=1}^m (1 + Q + ⋯ + Q^{j−1})`.
pub fn q_factorial(m: usize) -> Polynomial {
    let mut out = Polynomial::one();
    for j in 1..=m {
        let q_int: Polynomial = (0..j as u32)
            .map(|e| {
                Polynomial::term(
                    BigRational::one(),
                    Monomial::from_powers([(Variable::Q, e)]),
                )
            })
            .sum();
        out = &out * &q_int;
    }
    out
}

/// `Π_{i ≥ 0} [p(i)]_Q!` where `p(i)` counts rows of length `i`, and
/// `p(0) = N − rows(λ)`.
fn q_factorial_normalizer(lam: &YoungDiagram, n: usize) -> Polynomial {
    let class = lam.to_conjugacy();
    let mut out = q_factorial(n - lam.rows());
    for &k in class.multiplicities().values() {
        out = &out * &q_factorial(k);
    }
    out
}

/// Substitutes a rational value for `Q`.
pub fn at_q(p: &Polynomial, value: i64) -> Polynomial {
    p.substitute(&BTreeMap::from([(
        Variable::Q,
        Polynomial::from_int(value),
    )]))
}

pub fn has_integer_coefficients(p: &Polynomial) -> bool {
    p.terms().all(|(_, c)| c.is_integer())
}
