#![allow(dead_code)]

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use symmpol::{Monomial, Polynomial, Variable, YoungDiagram};

pub fn yd(parts: &[usize]) -> YoungDiagram {
    YoungDiagram::new(parts.to_vec()).unwrap()
}

pub fn x(i: u32) -> Polynomial {
    Polynomial::var(Variable::X(i))
}

pub fn t(i: u32) -> Polynomial {
    Polynomial::var(Variable::T(i))
}

pub fn q() -> Polynomial {
    Polynomial::var(Variable::Q)
}

pub fn c(n: i64) -> Polynomial {
    Polynomial::from_int(n)
}

pub fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn product(factors: &[Polynomial]) -> Polynomial {
    factors.iter().fold(Polynomial::one(), |acc, f| &acc * f)
}

/// p(n) by the coin-change recurrence over part sizes.
pub fn partition_count_dp(max: usize) -> Vec<u64> {
    let mut ways = vec![0u64; max + 1];
    ways[0] = 1;
    for part in 1..=max {
        for total in part..=max {
            ways[total] += ways[total - part];
        }
    }
    ways
}

/// The printed monomial fixture
/// `x1*x2*x3*(x1**2*x2 + x1**2*x3 + x1*x2**2 + x1*x3**2 + x2**2*x3 + x2*x3**2)`.
pub fn printed_monomial_321() -> Polynomial {
    let inner = product(&[x(1), x(1), x(2)])
        + product(&[x(1), x(1), x(3)])
        + product(&[x(1), x(2), x(2)])
        + product(&[x(1), x(3), x(3)])
        + product(&[x(2), x(2), x(3)])
        + product(&[x(2), x(3), x(3)]);
    product(&[x(1), x(2), x(3), inner])
}

/// The printed Hall–Littlewood fixture
/// `x1*x2*x3*(-Q**2*x1*x2*x3 - Q*x1*x2*x3 + x1**2*x2 + x1**2*x3 + x1*x2**2
///  + 2*x1*x2*x3 + x1*x3**2 + x2**2*x3 + x2*x3**2)`.
pub fn printed_hall_littlewood_321() -> Polynomial {
    let xyz = product(&[x(1), x(2), x(3)]);
    let inner = -product(&[q(), q(), xyz.clone()]) - product(&[q(), xyz.clone()])
        + product(&[x(1), x(1), x(2)])
        + product(&[x(1), x(1), x(3)])
        + product(&[x(1), x(2), x(2)])
        + product(&[c(2), xyz.clone()])
        + product(&[x(1), x(3), x(3)])
        + product(&[x(2), x(2), x(3)])
        + product(&[x(2), x(3), x(3)]);
    &xyz * &inner
}

/// Literal evaluation: full numerator, sum over all of S_N, division by the
/// whole Vandermonde product, then by the Q-factorial normalizer.
pub fn hall_littlewood_literal(lam: &YoungDiagram, n: usize) -> Polynomial {
    let n32 = n as u32;
    let mut numerator = Polynomial::term(
        BigRational::from_integer(1.into()),
        Monomial::from_powers((0..n).map(|i| (Variable::X(i as u32 + 1), lam.part(i) as u32))),
    );
    let mut vandermonde = Polynomial::one();
    for i in 1..=n32 {
        for j in i + 1..=n32 {
            numerator = &numerator * &(x(i) - &q() * &x(j));
            vandermonde = &vandermonde * &(x(i) - x(j));
        }
    }
    let mut antisym = Polynomial::zero();
    for perm in (0..n).permutations(n) {
        let inversions = (0..n)
            .tuple_combinations()
            .filter(|&(a, b)| perm[a] > perm[b])
            .count();
        let image = numerator.rename(|v| match v {
            Variable::X(i) => Variable::X(perm[i as usize - 1] as u32 + 1),
            other => other,
        });
        if inversions % 2 == 0 {
            antisym += &image;
        } else {
            antisym -= &image;
        }
    }
    let quotient = antisym.exact_divide(&vandermonde).unwrap();

    let q_int = |j: usize| {
        (0..j)
            .map(|e| q().pow(e as i64).unwrap())
            .sum::<Polynomial>()
    };
    let q_fact = |m: usize| product(&(1..=m).map(q_int).collect::<Vec<_>>());
    let mut norm = q_fact(n - lam.rows());
    for &k in lam.to_conjugacy().multiplicities().values() {
        norm = &norm * &q_fact(k);
    }
    quotient.exact_divide(&norm).unwrap()
}

/// Swaps `x_a` and `x_b`.
pub fn swap_x(p: &Polynomial, a: u32, b: u32) -> Polynomial {
    p.rename(|v| match v {
        Variable::X(i) if i == a => Variable::X(b),
        Variable::X(i) if i == b => Variable::X(a),
        other => other,
    })
}
