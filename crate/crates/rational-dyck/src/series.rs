//! Truncated formal power series over exact rationals.
//!
//! The variable `t` marks the index `n`, i.e. one unit of `t` per block of
//! `alpha + beta` letters. These series verify Duchon's coefficient
//! identity and the generating-function relations between `f`, `phi`,
//! `psi`, and `theta`.

use num::{One, Zero};
use thiserror::Error;

use crate::bell::{rat, Rational};
use crate::sequences::{self, SequenceError};
use crate::words::Slope;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("exp requires constant term 0, log requires constant term 1")]
    BadConstantTerm,
    #[error("need theta_1..theta_{needed}, got {got}")]
    InsufficientSequence { needed: usize, got: usize },
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

/// A power series truncated at order `N`: coefficients `c_0..c_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Series with constant term `c0` and coefficients `c[j]` at `t^(j+1)`.
    pub fn from_tail(c0: Rational, tail: &[Rational], order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = c0;
        for (j, v) in tail.iter().take(order).enumerate() {
            coeffs[j + 1] = v.clone();
        }
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Truncated product; the result keeps the shorter order of the two.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for i in 0..=order {
            for j in 0..=(order - i) {
                if !self.coeffs[i].is_zero() && !other.coeffs[j].is_zero() {
                    coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Power by repeated squaring; exponents reach `1 + (alpha+beta)n`.
    pub fn pow(&self, mut exponent: u64) -> TruncatedSeries {
        let mut base = self.clone();
        let mut acc = TruncatedSeries::one(self.order());
        while exponent > 0 {
            if exponent & 1 == 1 {
                acc = acc.mul(&base);
            }
            exponent >>= 1;
            if exponent > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `exp(s)` for `s` with zero constant term, by the recurrence
    /// `n y_n = sum_{j=1}^{n} j s_j y_{n-j}`.
    pub fn exp(&self) -> Result<TruncatedSeries, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::BadConstantTerm);
        }
        let order = self.order();
        let mut y = vec![Rational::zero(); order + 1];
        y[0] = Rational::one();
        for n in 1..=order {
            let mut acc = Rational::zero();
            for j in 1..=n {
                if !self.coeffs[j].is_zero() {
                    acc += rat(j as i64) * &self.coeffs[j] * &y[n - j];
                }
            }
            y[n] = acc / rat(n as i64);
        }
        Ok(TruncatedSeries { coeffs: y })
    }

    /// `log(s)` for `s` with constant term 1, by the recurrence
    /// `n l_n = n s_n - sum_{j=1}^{n-1} j l_j s_{n-j}`.
    pub fn log(&self) -> Result<TruncatedSeries, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::BadConstantTerm);
        }
        let order = self.order();
        let mut l = vec![Rational::zero(); order + 1];
        for n in 1..=order {
            let mut acc = rat(n as i64) * &self.coeffs[n];
            for (j, l_j) in l.iter().enumerate().take(n).skip(1) {
                acc -= rat(j as i64) * l_j * &self.coeffs[n - j];
            }
            l[n] = acc / rat(n as i64);
        }
        Ok(TruncatedSeries { coeffs: l })
    }

    /// Reciprocal for a series with constant term 1.
    pub fn reciprocal(&self) -> Result<TruncatedSeries, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::BadConstantTerm);
        }
        let order = self.order();
        let mut r = vec![Rational::zero(); order + 1];
        r[0] = Rational::one();
        for n in 1..=order {
            let mut acc = Rational::zero();
            for j in 1..=n {
                acc -= &self.coeffs[j] * &r[n - j];
            }
            r[n] = acc;
        }
        Ok(TruncatedSeries { coeffs: r })
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] + &other.coeffs[i])
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn neg(&self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Duchon's identity at one index: returns
/// (`phi_n`, `[t^n] (1 + sum theta_j t^j)^(1+(alpha+beta)n) / (1+(alpha+beta)n)`).
/// Both sides are equal for valid theta input.
pub fn duchon_check(
    slope: Slope,
    n: usize,
    theta: &[Rational],
) -> Result<(Rational, Rational), SeriesError> {
    if theta.len() < n {
        return Err(SeriesError::InsufficientSequence {
            needed: n,
            got: theta.len(),
        });
    }
    let lhs = Rational::from_integer(sequences::phi_bizley(slope, n)?);
    let exponent = 1 + slope.period() * n as u64;
    let base = TruncatedSeries::from_tail(Rational::one(), theta, n);
    let coeff = base.pow(exponent).coeff(n);
    let rhs = coeff / rat(exponent as i64);
    Ok((lhs, rhs))
}

/// Verifies, to order `N`, the four generating-function relations
/// `psi = 1 - exp(-f)`, `1 + phi = exp(f)`, `f = -log(1 - psi)`, and
/// `1 + phi = 1/(1 - psi)`, all series built from the sequence formulas.
pub fn gf_relations_check(slope: Slope, order: usize) -> Result<bool, SeriesError> {
    let f = TruncatedSeries::from_tail(Rational::zero(), &sequences::f_seq(slope, order), order);
    let phi_tail: Vec<Rational> = (1..=order)
        .map(|n| sequences::phi_bizley(slope, n).map(Rational::from_integer))
        .collect::<Result<_, _>>()?;
    let psi_tail = sequences::psi_seq(slope, order)?;
    let one_plus_phi = TruncatedSeries::from_tail(Rational::one(), &phi_tail, order);
    let psi = TruncatedSeries::from_tail(Rational::zero(), &psi_tail, order);
    let one_minus_psi = TruncatedSeries::one(order).add(&psi.neg());

    let exp_f = f.exp()?;
    let exp_neg_f = f.neg().exp()?;
    let psi_from_f = TruncatedSeries::one(order).add(&exp_neg_f.neg());
    let f_from_psi = one_minus_psi.log()?.neg();
    let phi_from_psi = one_minus_psi.reciprocal()?;

    Ok(psi_from_f == psi
        && exp_f == one_plus_phi
        && f_from_psi == f
        && phi_from_psi == one_plus_phi)
}
