//! The named enumeration sequences for a slope `beta/alpha`:
//!
//! * `f_n = binom((alpha+beta)n, alpha n) / ((alpha+beta)n)`, a possibly
//!   fractional auxiliary sequence,
//! * `phi_n`, the number of Dyck words of length `(alpha+beta)n`,
//! * `theta_n`, the number of factor-free words,
//! * `psi_n`, the number of words staying strictly above height zero in the
//!   interior,
//! * `r_{n,k}`, the number of words with reducibility level `k`,
//!
//! plus the inverse relations that tie them together. All values are exact;
//! formulas that must produce integers are checked for integrality.

use num::bigint::BigInt;
use num::{One, Zero};
use thiserror::Error;

use crate::bell::{
    bell_row, binom, binom_general, binom_general_rat, factorial, factorial_scaled, rat, BellError,
    BellTable, Rational,
};
use crate::words::Slope;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SequenceError {
    #[error("result {0} is not an integer; arithmetic bug")]
    NonIntegralResult(String),
    #[error("k = {k} out of range 1..={n}")]
    KOutOfRange { k: usize, n: usize },
    #[error(transparent)]
    Bell(#[from] BellError),
}

/// `f_n = binom((alpha+beta)n, alpha n) / ((alpha+beta)n)`.
pub fn f_n(slope: Slope, n: usize) -> Rational {
    let period = slope.period() * n as u64;
    let b = binom(period, slope.alpha() * n as u64);
    Rational::new(b, BigInt::from(period))
}

/// The sequence `f_1..f_n`.
pub fn f_seq(slope: Slope, n: usize) -> Vec<Rational> {
    (1..=n).map(|j| f_n(slope, j)).collect()
}

fn integral(value: Rational) -> Result<BigInt, SequenceError> {
    if value.denom().is_one() {
        Ok(value.numer().clone())
    } else {
        Err(SequenceError::NonIntegralResult(value.to_string()))
    }
}

/// Bizley's count of all Dyck words of length `(alpha+beta)n`:
/// `phi_n = sum_k B_{n,k}(1!f_1, 2!f_2, ...) / n!`.
pub fn phi_bizley(slope: Slope, n: usize) -> Result<BigInt, SequenceError> {
    let scaled = factorial_scaled(&f_seq(slope, n));
    let row = bell_row(n, &scaled)?;
    let sum: Rational = row.into_iter().sum();
    integral(sum / Rational::from_integer(factorial(n)))
}

/// The same count from the factor-free sequence:
/// `phi_n = sum_k binom((alpha+beta)n, k-1) (k-1)!/n! B_{n,k}(1!theta_1, ...)`.
pub fn phi_from_theta(slope: Slope, n: usize, theta: &[Rational]) -> Result<BigInt, SequenceError> {
    let scaled = factorial_scaled(theta);
    let row = bell_row(n, &scaled)?;
    let an = (slope.period() * n as u64) as i64;
    let mut sum = Rational::zero();
    for (k, b) in row.iter().enumerate().map(|(i, b)| (i + 1, b)) {
        sum += binom_general(an, k as i64 - 1) * Rational::from_integer(factorial(k - 1)) * b;
    }
    integral(sum / Rational::from_integer(factorial(n)))
}

/// Number of factor-free words of length `(alpha+beta)n`:
/// `theta_n = sum_k (1-(alpha+beta)n)^(k-1)/n! B_{n,k}(1!f_1, ...)`.
/// The power is a plain integer power, not a falling factorial.
pub fn theta_n(slope: Slope, n: usize) -> Result<BigInt, SequenceError> {
    let scaled = factorial_scaled(&f_seq(slope, n));
    let row = bell_row(n, &scaled)?;
    let lambda = rat(1 - (slope.period() * n as u64) as i64);
    let mut sum = Rational::zero();
    let mut power = Rational::one();
    for b in &row {
        sum += &power * b;
        power *= &lambda;
    }
    integral(sum / Rational::from_integer(factorial(n)))
}

/// The sequence `theta_1..theta_n` as rationals, for feeding other formulas.
pub fn theta_seq(slope: Slope, n: usize) -> Result<Vec<Rational>, SequenceError> {
    (1..=n)
        .map(|j| theta_n(slope, j).map(Rational::from_integer))
        .collect()
}

/// Number of words staying strictly above height zero in the interior:
/// `psi_n = sum_k (-1)^(k-1)/n! B_{n,k}(1!f_1, ...)`.
pub fn psi_n(slope: Slope, n: usize) -> Result<BigInt, SequenceError> {
    let scaled = factorial_scaled(&f_seq(slope, n));
    let row = bell_row(n, &scaled)?;
    let mut sum = Rational::zero();
    for (k, b) in row.iter().enumerate().map(|(i, b)| (i + 1, b)) {
        if k % 2 == 1 {
            sum += b;
        } else {
            sum -= b;
        }
    }
    integral(sum / Rational::from_integer(factorial(n)))
}

pub fn psi_seq(slope: Slope, n: usize) -> Result<Vec<Rational>, SequenceError> {
    (1..=n)
        .map(|j| psi_n(slope, j).map(Rational::from_integer))
        .collect()
}

/// Number of words of length `(alpha+beta)n` with reducibility level `k`:
/// `r_{n,k} = binom((alpha+beta)n, k-1) (k-1)!/n! B_{n,k}(1!theta_1, ...)`.
/// The theta sequence is injectable so oracle-derived values can be used.
pub fn r_nk(slope: Slope, n: usize, k: usize, theta: &[Rational]) -> Result<BigInt, SequenceError> {
    if k < 1 || k > n {
        return Err(SequenceError::KOutOfRange { k, n });
    }
    let scaled = factorial_scaled(theta);
    let b = crate::bell::partial_bell(n, k, &scaled)?;
    let an = (slope.period() * n as u64) as i64;
    let value = binom_general(an, k as i64 - 1) * Rational::from_integer(factorial(k - 1)) * b
        / Rational::from_integer(factorial(n));
    integral(value)
}

/// Full row `r_{n,1..n}` from formula-derived theta values.
pub fn r_row(slope: Slope, n: usize) -> Result<Vec<BigInt>, SequenceError> {
    let theta = theta_seq(slope, n)?;
    (1..=n).map(|k| r_nk(slope, n, k, &theta)).collect()
}

/// Closed form for slope 3/2 only:
/// `r_{n,k} = binom(5n, k-1) sum_j (-1)^(k-j) (2j-k)/(nk) binom(k,j)
///  binom(2(n+j)-k-1, n-1)`.
pub fn r_nk_closed_32(n: usize, k: usize) -> Result<BigInt, SequenceError> {
    if k < 1 || k > n {
        return Err(SequenceError::KOutOfRange { k, n });
    }
    let mut sum = Rational::zero();
    for j in 0..=k {
        let sign = if (k - j).is_multiple_of(2) { 1 } else { -1 };
        let coeff = Rational::new(
            BigInt::from(sign * (2 * j as i64 - k as i64)),
            BigInt::from((n * k) as i64),
        );
        let inner = 2 * (n + j) as i64 - k as i64 - 1;
        sum += coeff
            * Rational::from_integer(binom(k as u64, j as u64))
            * binom_general(inner, n as i64 - 1);
    }
    integral(Rational::from_integer(binom(5 * n as u64, k as u64 - 1)) * sum)
}

/// Recovers `f_n` from `phi_1..phi_n`:
/// `f_n = sum_k binom(-1, k-1) (k-1)!/n! B_{n,k}(1!phi_1, ...)`.
pub fn f_from_phi(n: usize, phi: &[Rational]) -> Result<Rational, SequenceError> {
    let scaled = factorial_scaled(phi);
    let row = bell_row(n, &scaled)?;
    let mut sum = Rational::zero();
    for (k, b) in row.iter().enumerate().map(|(i, b)| (i + 1, b)) {
        sum += binom_general(-1, k as i64 - 1) * Rational::from_integer(factorial(k - 1)) * b;
    }
    Ok(sum / Rational::from_integer(factorial(n)))
}

/// Recovers `f_n` from `theta_1..theta_n`:
/// `f_n = sum_k binom((alpha+beta)n - 1, k-1) (k-1)!/n! B_{n,k}(1!theta_1, ...)`.
pub fn f_from_theta(slope: Slope, n: usize, theta: &[Rational]) -> Result<Rational, SequenceError> {
    let scaled = factorial_scaled(theta);
    let row = bell_row(n, &scaled)?;
    let an = (slope.period() * n as u64) as i64;
    let mut sum = Rational::zero();
    for (k, b) in row.iter().enumerate().map(|(i, b)| (i + 1, b)) {
        sum += binom_general(an - 1, k as i64 - 1) * Rational::from_integer(factorial(k - 1)) * b;
    }
    Ok(sum / Rational::from_integer(factorial(n)))
}

/// Pass/fail report for the three identities expressing `f_n`, `phi_n`, and
/// `theta_n` in terms of `psi_1..psi_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiIdentityReport {
    pub f_ok: bool,
    pub phi_ok: bool,
    pub theta_ok: bool,
}

impl PsiIdentityReport {
    pub fn all_ok(&self) -> bool {
        self.f_ok && self.phi_ok && self.theta_ok
    }
}

/// Checks, for one `n`:
/// * `f_n   = sum_k (k-1)!/n! B_{n,k}(1!psi_1, ...)`
/// * `phi_n = sum_k k!/n!     B_{n,k}(1!psi_1, ...)` (the invert transform)
/// * `theta_n = sum_k binom(-(alpha+beta)n + k, k-1) (k-1)!/n! B_{n,k}(1!psi_1, ...)`
pub fn psi_identities(slope: Slope, n: usize) -> Result<PsiIdentityReport, SequenceError> {
    let psi = psi_seq(slope, n)?;
    let scaled = factorial_scaled(&psi);
    let row = bell_row(n, &scaled)?;
    let nfact = Rational::from_integer(factorial(n));
    let an = (slope.period() * n as u64) as i64;

    let mut f_sum = Rational::zero();
    let mut phi_sum = Rational::zero();
    let mut theta_sum = Rational::zero();
    for (k, b) in row.iter().enumerate().map(|(i, b)| (i + 1, b)) {
        let km1fact = Rational::from_integer(factorial(k - 1));
        f_sum += &km1fact * b;
        phi_sum += Rational::from_integer(factorial(k)) * b;
        theta_sum += binom_general(-an + k as i64, k as i64 - 1) * &km1fact * b;
    }
    f_sum /= &nfact;
    phi_sum /= &nfact;
    theta_sum /= &nfact;

    Ok(PsiIdentityReport {
        f_ok: f_sum == f_n(slope, n),
        phi_ok: phi_sum == Rational::from_integer(phi_bizley(slope, n)?),
        theta_ok: theta_sum == Rational::from_integer(theta_n(slope, n)?),
    })
}

/// The lambda-substitution identity: with
/// `y_n = sum_k binom(an+bk, k-1) (k-1)!/n! B_{n,k}(1!x_1, ...)`,
/// both returned values are equal for every rational `lambda`:
/// lhs = `sum_k binom(lambda, k-1) (k-1)! B_{n,k}(1!y_1, ...)`,
/// rhs = `sum_k binom(lambda+an+bk, k-1) (k-1)! B_{n,k}(1!x_1, ...)`.
pub fn lambda_identity_check(
    a: i64,
    b: i64,
    lambda: &Rational,
    x: &[Rational],
    n: usize,
) -> Result<(Rational, Rational), SequenceError> {
    let y = forward_transform_general(a, b, x, n)?;
    let y_scaled = factorial_scaled(&y);
    let x_scaled = factorial_scaled(x);
    let y_table = BellTable::new(n, &y_scaled);
    let x_table = BellTable::new(n, &x_scaled);
    let mut lhs = Rational::zero();
    let mut rhs = Rational::zero();
    for k in 1..=n {
        let km1fact = Rational::from_integer(factorial(k - 1));
        lhs += binom_general_rat(lambda, k as i64 - 1) * &km1fact * y_table.get(n, k);
        let shift = lambda + rat(a * n as i64 + b * k as i64);
        rhs += binom_general_rat(&shift, k as i64 - 1) * &km1fact * x_table.get(n, k);
    }
    Ok((lhs, rhs))
}

/// `y_m = sum_k binom(am+bk, k-1) (k-1)!/m! B_{m,k}(1!x_1, ...)` for
/// `m = 1..=n`.
fn forward_transform_general(
    a: i64,
    b: i64,
    x: &[Rational],
    n: usize,
) -> Result<Vec<Rational>, SequenceError> {
    let scaled = factorial_scaled(x);
    let table = BellTable::new(n, &scaled);
    let mut y = Vec::with_capacity(n);
    for m in 1..=n {
        if x.len() < m {
            return Err(BellError::InsufficientSequence {
                needed: m,
                got: x.len(),
            }
            .into());
        }
        let mut sum = Rational::zero();
        for k in 1..=m {
            sum += binom_general(a * m as i64 + b * k as i64, k as i64 - 1)
                * Rational::from_integer(factorial(k - 1))
                * table.get(m, k);
        }
        y.push(sum / Rational::from_integer(factorial(m)));
    }
    Ok(y)
}

/// Which forward/inverse pair to exercise in `inverse_roundtrip_check`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InverseVariant {
    /// Forward `binom(an, k-1)`, inverse `binom(-an, k-1)`.
    BinomialInverse,
    /// Forward `binom(an-1, k-1)`, inverse plain power `(1-an)^(k-1)`.
    PowerInverse,
}

/// Builds `y` from `x` by the forward formula of the chosen variant, then
/// recovers each `x_m` by the stated inverse and compares exactly.
pub fn inverse_roundtrip_check(
    a: i64,
    x: &[Rational],
    n: usize,
    variant: InverseVariant,
) -> Result<bool, SequenceError> {
    let shift = match variant {
        InverseVariant::BinomialInverse => 0,
        InverseVariant::PowerInverse => -1,
    };
    // forward: y_m = sum_k binom(am + shift, k-1) (k-1)!/m! B_{m,k}(1!x...)
    let scaled_x = factorial_scaled(x);
    let x_table = BellTable::new(n, &scaled_x);
    let mut y = Vec::with_capacity(n);
    for m in 1..=n {
        if x.len() < m {
            return Err(BellError::InsufficientSequence {
                needed: m,
                got: x.len(),
            }
            .into());
        }
        let mut sum = Rational::zero();
        for k in 1..=m {
            sum += binom_general(a * m as i64 + shift, k as i64 - 1)
                * Rational::from_integer(factorial(k - 1))
                * x_table.get(m, k);
        }
        y.push(sum / Rational::from_integer(factorial(m)));
    }

    let scaled_y = factorial_scaled(&y);
    let y_table = BellTable::new(n, &scaled_y);
    for m in 1..=n {
        let mut recovered = Rational::zero();
        match variant {
            InverseVariant::BinomialInverse => {
                for k in 1..=m {
                    recovered += binom_general(-a * m as i64, k as i64 - 1)
                        * Rational::from_integer(factorial(k - 1))
                        * y_table.get(m, k);
                }
            }
            InverseVariant::PowerInverse => {
                let lambda = rat(1 - a * m as i64);
                let mut power = Rational::one();
                for k in 1..=m {
                    recovered += &power * y_table.get(m, k);
                    power *= &lambda;
                }
            }
        }
        recovered /= Rational::from_integer(factorial(m));
        if recovered != x[m - 1] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Catalan number `C_n = binom(2n, n) / (n+1)`, used for the slope-3/2
/// cross-checks.
pub fn catalan(n: usize) -> BigInt {
    binom(2 * n as u64, n as u64) / BigInt::from(n as u64 + 1)
}
