//! Exact arithmetic kernel: arbitrary-precision rationals, generalized
//! binomial coefficients, factorials, and partial Bell polynomials
//! `B_{n,k}(x_1, ..., x_{n-k+1})`.
//!
//! Everything here is exact; no floating point is used anywhere in the
//! library. The sequence formulas produce integers out of fractional
//! intermediates, and that integrality is itself checked by callers.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BellError {
    #[error("need at least {needed} sequence entries, got {got}")]
    InsufficientSequence { needed: usize, got: usize },
}

/// Exact rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// n! as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Ordinary binomial coefficient for nonnegative integer arguments.
pub fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Generalized binomial `binom(x, m) = x(x-1)...(x-m+1) / m!` for any
/// rational `x`; zero for negative `m`.
pub fn binom_general_rat(x: &Rational, m: i64) -> Rational {
    if m < 0 {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for i in 0..m {
        acc *= x - rat(i);
    }
    acc / Rational::from_integer(factorial(m as usize))
}

/// Generalized binomial with an integer upper argument. Always
/// integer-valued.
pub fn binom_general(x: i64, m: i64) -> Rational {
    let value = binom_general_rat(&rat(x), m);
    debug_assert!(value.denom().is_one() || value.is_zero());
    value
}

fn require_len(x: &[Rational], needed: usize) -> Result<(), BellError> {
    if x.len() < needed {
        Err(BellError::InsufficientSequence {
            needed,
            got: x.len(),
        })
    } else {
        Ok(())
    }
}

/// Partial Bell polynomial `B_{n,k}` evaluated at `x = (x_1, x_2, ...)`
/// via the recurrence
/// `B_{n,k} = sum_{i=1}^{n-k+1} binom(n-1, i-1) x_i B_{n-i, k-1}`.
pub fn partial_bell(n: usize, k: usize, x: &[Rational]) -> Result<Rational, BellError> {
    if n >= k && k >= 1 {
        require_len(x, n - k + 1)?;
    }
    Ok(BellTable::new(n, x).get(n, k))
}

/// The same value by explicit summation over partitions of `n` into `k`
/// parts: for multiplicities `j_i` with `sum j_i = k`, `sum i j_i = n`,
/// the coefficient is `n! / (prod j_i! (i!)^{j_i})`. Independent of the
/// recurrence path; used to cross-check it.
pub fn partial_bell_oracle(n: usize, k: usize, x: &[Rational]) -> Result<Rational, BellError> {
    if n == 0 && k == 0 {
        return Ok(Rational::one());
    }
    if k == 0 || k > n {
        return Ok(Rational::zero());
    }
    require_len(x, n - k + 1)?;

    let mut total = Rational::zero();
    // multiplicities[i] = j_{i+1}, the number of parts equal to i+1
    let mut multiplicities = vec![0usize; n];
    fn recurse(
        part: usize,
        parts_left: usize,
        sum_left: usize,
        multiplicities: &mut Vec<usize>,
        n: usize,
        x: &[Rational],
        total: &mut Rational,
    ) {
        if parts_left == 0 {
            if sum_left != 0 {
                return;
            }
            let mut denom = BigInt::one();
            let mut product = Rational::one();
            for (i, &j) in multiplicities.iter().enumerate() {
                if j == 0 {
                    continue;
                }
                denom *= factorial(j) * factorial(i + 1).pow(j as u32);
                for _ in 0..j {
                    product *= &x[i];
                }
            }
            *total += product * Rational::new(factorial(n), denom);
            return;
        }
        // parts are chosen in nonincreasing order to visit each partition once
        let max = part.min(sum_left.saturating_sub(parts_left - 1));
        for p in (1..=max).rev() {
            multiplicities[p - 1] += 1;
            recurse(p, parts_left - 1, sum_left - p, multiplicities, n, x, total);
            multiplicities[p - 1] -= 1;
        }
    }
    recurse(n, k, n, &mut multiplicities, n, x, &mut total);
    Ok(total)
}

/// Row `B_{n,1}, ..., B_{n,n}`.
pub fn bell_row(n: usize, x: &[Rational]) -> Result<Vec<Rational>, BellError> {
    require_len(x, n)?;
    let table = BellTable::new(n, x);
    Ok((1..=n).map(|k| table.get(n, k)).collect())
}

/// Triangular table of `B_{n,k}` values for one input sequence, filled by
/// the standard recurrence. `B_{0,0} = 1`, `B_{n,0} = 0` for `n >= 1`,
/// `B_{n,k} = 0` for `k > n`.
pub struct BellTable {
    n_max: usize,
    // entries[n] holds B_{n,0..=n}
    entries: Vec<Vec<Rational>>,
}

impl BellTable {
    pub fn new(n_max: usize, x: &[Rational]) -> Self {
        let mut entries: Vec<Vec<Rational>> = Vec::with_capacity(n_max + 1);
        entries.push(vec![Rational::one()]);
        for n in 1..=n_max {
            let mut row = vec![Rational::zero(); n + 1];
            for k in 1..=n {
                let mut acc = Rational::zero();
                for i in 1..=(n - k + 1) {
                    if i > x.len() {
                        break;
                    }
                    let c = Rational::from_integer(binom(n as u64 - 1, i as u64 - 1));
                    acc += c * &x[i - 1] * &entries[n - i][k - 1];
                }
                row[k] = acc;
            }
            entries.push(row);
        }
        BellTable { n_max, entries }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn get(&self, n: usize, k: usize) -> Rational {
        if n <= self.n_max && k <= n {
            self.entries[n][k].clone()
        } else {
            Rational::zero()
        }
    }
}

/// Scales a sequence `(x_1, x_2, ...)` into `(1! x_1, 2! x_2, ...)`, the
/// form every Bell-polynomial formula in this crate consumes.
pub fn factorial_scaled(x: &[Rational]) -> Vec<Rational> {
    x.iter()
        .enumerate()
        .map(|(i, v)| v * Rational::from_integer(factorial(i + 1)))
        .collect()
}

/// Asserts a rational is an integer and unwraps it.
pub fn expect_integer(value: &Rational) -> Option<BigInt> {
    if value.denom().is_one() {
        Some(value.numer().clone())
    } else {
        None
    }
}

/// Stirling numbers of the second kind by their own recurrence,
/// `S(n,k) = k S(n-1,k) + S(n-1,k-1)`; test reference for the all-ones
/// Bell evaluation.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    if n == 0 && k == 0 {
        return BigInt::one();
    }
    if k == 0 || k > n {
        return BigInt::zero();
    }
    stirling2(n - 1, k) * BigInt::from(k) + stirling2(n - 1, k - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rats(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| rat(v)).collect()
    }

    #[test]
    fn binom_general_values() {
        assert_eq!(binom_general(-1, 2), rat(1));
        assert_eq!(binom_general(-1, 3), rat(-1));
        assert_eq!(binom_general(10, 1), rat(10));
        assert_eq!(binom_general(-10, 1), rat(-10));
        assert_eq!(binom_general(5, 0), rat(1));
        assert_eq!(binom_general(5, -2), rat(0));
    }

    #[test]
    fn binom_general_is_integer_valued() {
        for x in -12i64..=12 {
            for m in 0i64..=10 {
                let v = binom_general(x, m);
                assert!(v.denom().is_one(), "binom({x},{m}) = {v}");
            }
        }
    }

    #[test]
    fn partial_bell_small_cases() {
        // B_{2,2}(x1) = x1^2 with x1 = 3
        let x = rats(&[3, 0]);
        assert_eq!(partial_bell(2, 2, &x).unwrap(), rat(9));
        // B_{3,2}(x1, x2) = 3 x1 x2
        let x = rats(&[2, 5, 0]);
        assert_eq!(partial_bell(3, 2, &x).unwrap(), rat(30));
        // B_{4,2}(x1,x2,x3) = 4 x1 x3 + 3 x2^2
        let x = rats(&[2, 5, 7]);
        assert_eq!(partial_bell(4, 2, &x).unwrap(), rat(4 * 2 * 7 + 3 * 25));
    }

    #[test]
    fn partial_bell_n1_reduces_to_scaled_entry() {
        // B_{n,1}(1!x1, 2!x2, ...) = n! x_n
        let x = rats(&[3, -1, 4, 7, 2]);
        let scaled = factorial_scaled(&x);
        for n in 1..=5usize {
            let expected = &x[n - 1] * Rational::from_integer(factorial(n));
            assert_eq!(partial_bell(n, 1, &scaled).unwrap(), expected);
        }
    }

    #[test]
    fn partial_bell_diagonal() {
        // B_{n,n}(x1) = x1^n
        let x = rats(&[3]);
        for n in 1..=6usize {
            assert_eq!(partial_bell(n, n, &x).unwrap(), rat(3i64.pow(n as u32)));
        }
    }

    #[test]
    fn oracle_matches_hand_values() {
        let x = rats(&[2, 5, 7]);
        assert_eq!(partial_bell_oracle(3, 2, &x).unwrap(), rat(3 * 2 * 5));
        assert_eq!(
            partial_bell_oracle(4, 2, &x).unwrap(),
            rat(4 * 2 * 7 + 3 * 25)
        );
        assert_eq!(partial_bell_oracle(4, 4, &x).unwrap(), rat(16));
    }

    #[test]
    fn recurrence_matches_oracle() {
        let x = rats(&[1, -2, 3, 5, -1, 2, 4, -3]);
        for n in 1..=8usize {
            for k in 1..=n {
                assert_eq!(
                    partial_bell(n, k, &x).unwrap(),
                    partial_bell_oracle(n, k, &x).unwrap(),
                    "B_{{{n},{k}}}"
                );
            }
        }
    }

    #[test]
    fn bell_row_consistent() {
        let x = rats(&[2, 5, 7]);
        let row = bell_row(3, &x).unwrap();
        assert_eq!(row.len(), 3);
        assert_eq!(row[0], rat(7));
        assert_eq!(row[1], rat(30));
        assert_eq!(row[2], rat(8));
    }

    #[test]
    fn all_ones_gives_stirling_numbers() {
        let ones = vec![Rational::one(); 7];
        for n in 1..=7usize {
            for k in 1..=n {
                assert_eq!(
                    partial_bell(n, k, &ones).unwrap(),
                    Rational::from_integer(stirling2(n, k)),
                    "S({n},{k})"
                );
            }
        }
    }

    #[test]
    fn insufficient_sequence_error() {
        let x = rats(&[1]);
        assert_eq!(
            partial_bell(4, 2, &x).unwrap_err(),
            BellError::InsufficientSequence { needed: 3, got: 1 }
        );
        assert!(partial_bell_oracle(4, 2, &x).is_err());
        assert!(bell_row(3, &x).is_err());
    }

    #[test]
    fn homogeneity() {
        // B_{n,k}(a b x1, a b^2 x2, ...) = a^k b^n B_{n,k}(x)
        let x = rats(&[2, -3, 5, 1, 4, -2]);
        let a = Rational::new(BigInt::from(3), BigInt::from(4));
        let b = Rational::new(BigInt::from(-5), BigInt::from(2));
        let scaled: Vec<Rational> = x
            .iter()
            .enumerate()
            .map(|(i, v)| v * &a * num::pow::pow(b.clone(), i + 1))
            .collect();
        for n in 1..=6usize {
            for k in 1..=n {
                let lhs = partial_bell(n, k, &scaled).unwrap();
                let rhs = num::pow::pow(a.clone(), k)
                    * num::pow::pow(b.clone(), n)
                    * partial_bell(n, k, &x).unwrap();
                assert_eq!(lhs, rhs, "n={n} k={k}");
            }
        }
    }
}
