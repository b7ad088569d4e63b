//! Exact combinatorics of Kuratowski words.
//!
//! `K(n, p) = Σ_{i ≤ n, j ≤ p} C(i+j, i)²` counts the Kuratowski words over a
//! chain with `n` negative and `p` positive letters; `K(n) = K(n, n)`.
//! Its normalized form `k(n) = K(n) / C(2n, n)²` increases to `16/9`, and
//! `K(n) ~ 16^(n+1) / (9πn)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};

/// `C(n, r)`, zero when `r < 0` or `r > n`.
pub fn binomial(n: u64, r: i64) -> BigUint {
    if r < 0 || r as u64 > n {
        return BigUint::zero();
    }
    let r = (r as u64).min(n - r as u64);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Rows `0..=max` of Pascal's triangle.
fn pascal(max: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max + 1);
    for n in 0..=max {
        let mut row = vec![BigUint::one(); n + 1];
        for k in 1..n {
            row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
        }
        rows.push(row);
    }
    rows
}

/// `K(n, p)`.
pub fn kuratowski_number(n: usize, p: usize) -> BigUint {
    let rows = pascal(n + p);
    let mut total = BigUint::zero();
    for i in 0..=n {
        for j in 0..=p {
            let c = &rows[i + j][i];
            total += c * c;
        }
    }
    total
}

/// The table `K(n, p)` for `0 ≤ n, p ≤ max`, indexed `[n][p]`.
pub fn kuratowski_grid(max: usize) -> Vec<Vec<BigUint>> {
    let rows = pascal(2 * max);
    let mut grid = vec![vec![BigUint::zero(); max + 1]; max + 1];
    for n in 0..=max {
        for p in 0..=max {
            let c = &rows[n + p][n];
            let mut v = c * c;
            if n > 0 {
                v += &grid[n - 1][p];
            }
            if p > 0 {
                v += &grid[n][p - 1];
            }
            if n > 0 && p > 0 {
                v -= &grid[n - 1][p - 1];
            }
            grid[n][p] = v;
        }
    }
    grid
}

/// `K(n)` for `0 ≤ n ≤ max`, updated by
/// `K(n) - K(n-1) = C(2n,n)² + 2 Σ_{i<n} C(n+i, i)²`.
pub fn kuratowski_diagonal(max: usize) -> Vec<BigUint> {
    let rows = pascal(2 * max);
    let mut k = BigUint::zero();
    let mut out = Vec::with_capacity(max + 1);
    for n in 0..=max {
        let central = &rows[2 * n][n];
        k += central * central;
        for i in 0..n {
            let c = &rows[n + i][i];
            k += 2u8 * c * c;
        }
        out.push(k.clone());
    }
    out
}

/// Sizes of the four families of Kuratowski words of length at least two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCounts {
    pub vmp: BigUint,
    pub vpm: BigUint,
    pub wplus: BigUint,
    pub wminus: BigUint,
}

impl FamilyCounts {
    pub fn sum(&self) -> BigUint {
        &self.vmp + &self.vpm + &self.wplus + &self.wminus
    }
}

/// Closed-form family sizes. `a` counts the negative letters above the
/// negative pivot, `b + 1` the positive letters up to the positive pivot,
/// `l` and `r` the negative arm lengths on each side.
pub fn family_counts(n: usize, p: usize) -> FamilyCounts {
    let rows = pascal(n.max(p) + 1);
    let c = |top: usize, k: usize| -> &BigUint {
        static ZERO: BigUint = BigUint::ZERO;
        rows[top].get(k).unwrap_or(&ZERO)
    };
    let mut out = FamilyCounts {
        vmp: BigUint::zero(),
        vpm: BigUint::zero(),
        wplus: BigUint::zero(),
        wminus: BigUint::zero(),
    };
    for a in 0..n {
        for b in 0..p {
            for l in 0..=a {
                for r in 0..=a {
                    let base = c(a, l) * c(a, r);
                    out.vmp += &base * c(b + 1, l + 1) * c(b + 1, r);
                    out.vpm += &base * c(b + 1, l) * c(b + 1, r + 1);
                    out.wplus += &base * c(b + 1, l) * c(b + 1, r);
                    out.wminus += &base * c(b + 1, l + 1) * c(b + 1, r + 1);
                }
            }
        }
    }
    out
}

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `c_{a,b}(n) = C(2n-a-b, n-a) / C(2n, n)`.
pub fn c_ab(a: usize, b: usize, n: usize) -> Result<BigRational> {
    if n == 0 || a > n || b > n {
        return Err(Error::OutOfRange {
            what: "c_ab index",
            detail: format!("a={a}, b={b}, n={n}; need n ≥ 1 and a, b ≤ n"),
        });
    }
    Ok(ratio(
        binomial((2 * n - a - b) as u64, (n - a) as i64),
        binomial(2 * n as u64, n as i64),
    ))
}

/// `k(n) = K(n) / C(2n, n)²`.
pub fn k_ratio(n: usize) -> BigRational {
    let central = binomial(2 * n as u64, n as i64);
    ratio(kuratowski_number(n, n), &central * &central)
}

/// Outcome of checking `9 K(n) ≤ 16 C(2n, n)²` for `n ≤ checked_up_to`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupBoundReport {
    pub checked_up_to: usize,
    pub first_violation: Option<usize>,
}

impl SupBoundReport {
    pub fn holds(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Exact check of `k(n) ≤ 16/9` for every `n ≤ max`.
///
/// `K(n)` is updated incrementally: `K(n) - K(n-1) = C(2n,n)² + 2 Σ_{i<n} C(n+i, i)²`.
pub fn verify_sup_bound(max: usize) -> SupBoundReport {
    let rows = pascal(2 * max);
    let mut k = BigUint::zero();
    let nine = BigUint::from(9u8);
    let sixteen = BigUint::from(16u8);
    for n in 0..=max {
        let central = &rows[2 * n][n];
        k += central * central;
        for i in 0..n {
            let c = &rows[n + i][i];
            k += 2u8 * c * c;
        }
        if &nine * &k > &sixteen * central * central {
            return SupBoundReport {
                checked_up_to: n,
                first_violation: Some(n),
            };
        }
    }
    SupBoundReport {
        checked_up_to: max,
        first_violation: None,
    }
}

/// `9 n K(n) / 16^(n+1)`, which tends to `1/π`.
pub fn stirling_ratio(n: usize) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "stirling index",
            detail: format!("n={n}; need n ≥ 1"),
        });
    }
    let num = kuratowski_number(n, n) * BigUint::from(9 * n);
    let den = Pow::pow(BigUint::from(16u8), (n + 1) as u32);
    Ok(ratio(num, den))
}

/// `k(n)` for `1 ≤ n ≤ max`, sharing one pass over Pascal's triangle.
pub fn k_ratios(max: usize) -> Vec<BigRational> {
    kuratowski_diagonal(max)
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(n, k)| {
            let central = binomial(2 * n as u64, n as i64);
            ratio(k, &central * &central)
        })
        .collect()
}

/// [`stirling_ratio`] for `1 ≤ n ≤ max`.
pub fn stirling_ratios(max: usize) -> Vec<BigRational> {
    let mut power = BigUint::from(16u8);
    kuratowski_diagonal(max)
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(n, k)| {
            power *= 16u8;
            ratio(k * BigUint::from(9 * n), power.clone())
        })
        .collect()
}

/// Rational bounds `lower < π < upper` with 20 significant digits.
pub fn pi_bounds() -> (BigRational, BigRational) {
    let den = || BigInt::from(10u64).pow(19u32);
    let lower = BigInt::parse_bytes(b"31415926535897932384", 10).expect("literal");
    let upper = BigInt::parse_bytes(b"31415926535897932385", 10).expect("literal");
    (
        BigRational::new(lower, den()),
        BigRational::new(upper, den()),
    )
}

/// The estimate `16/9 c11² + 2 (c10² + c20²) < 1/9 + 2 (1/4 + 1/16)` behind
/// the inductive proof of `k(n) ≤ 16/9`.
pub fn tail_inequality(n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "tail inequality index",
            detail: format!("n={n}; need n ≥ 2"),
        });
    }
    let sq = |x: BigRational| &x * &x;
    let q = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
    let lhs = q(16, 9) * sq(c_ab(1, 1, n)?) + q(2, 1) * (sq(c_ab(1, 0, n)?) + sq(c_ab(2, 0, n)?));
    let rhs = q(1, 9) + q(2, 1) * (q(1, 4) + q(1, 16));
    Ok(lhs < rhs)
}
