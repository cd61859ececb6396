//! Bernoulli numbers and polynomials.
//!
//! The numbers come from the recurrence Σ_{j=0}^{m} C(m+1, j) B_j = 0 run in
//! exact rational arithmetic and rounded to `f64` once at the end. Polynomial
//! coefficients C(m, k)·B_{m−k} and the Euler–Maclaurin weights B_{2k}/(2k)!
//! are rounded from exact rationals the same way.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Highest Bernoulli index tabulated.
pub const BERNOULLI_MAX_INDEX: usize = 60;

/// Precomputed Bernoulli data, built once and shared read-only.
#[derive(Debug)]
pub struct BernoulliTable {
    /// B_0 ..= B_max, with the convention B_1 = −1/2.
    pub numbers: Vec<f64>,
    pub max_index: usize,
    /// `poly[m][k]` = C(m, k)·B_{m−k}, the coefficient of q^k in B_m(q).
    poly: Vec<Vec<f64>>,
    /// `em[k]` = B_{2k}/(2k)! for k = 0 ..= max/2.
    em: Vec<f64>,
}

impl BernoulliTable {
    fn build(max_index: usize) -> Self {
        let binom = binomial_rows(max_index + 1);
        let mut b: Vec<BigRational> = Vec::with_capacity(max_index + 1);
        b.push(BigRational::one());
        for m in 1..=max_index {
            let mut acc = BigRational::zero();
            for (j, bj) in b.iter().enumerate() {
                acc += bj * BigRational::from_integer(binom[m + 1][j].clone());
            }
            let bm = -acc / BigRational::from_integer(BigInt::from(m + 1));
            b.push(bm);
        }
        let numbers = b.iter().map(to_f64).collect();
        let poly = (0..=max_index)
            .map(|m| {
                (0..=m)
                    .map(|k| to_f64(&(&b[m - k] * BigRational::from_integer(binom[m][k].clone()))))
                    .collect()
            })
            .collect();
        let mut fact = BigInt::one();
        let mut em = Vec::with_capacity(max_index / 2 + 1);
        for n in 0..=max_index {
            if n > 0 {
                fact *= BigInt::from(n);
            }
            if n % 2 == 0 {
                em.push(to_f64(&(&b[n] / BigRational::from_integer(fact.clone()))));
            }
        }
        Self {
            numbers,
            max_index,
            poly,
            em,
        }
    }

    /// B_k, or `None` past the table.
    pub fn number(&self, k: usize) -> Option<f64> {
        self.numbers.get(k).copied()
    }

    /// Coefficients of B_m(q) in increasing powers of q.
    pub fn poly_coefficients(&self, m: usize) -> Option<&[f64]> {
        self.poly.get(m).map(Vec::as_slice)
    }

    /// B_{2k}/(2k)!.
    pub fn em_weight(&self, k: usize) -> Option<f64> {
        self.em.get(k).copied()
    }
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().expect("bernoulli rational fits in f64")
}

fn binomial_rows(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let mut row = vec![BigInt::one(); i + 1];
        for j in 1..i {
            row[j] = &prev[j - 1] + &prev[j];
        }
        rows.push(row);
    }
    rows
}

pub fn bernoulli_table() -> &'static BernoulliTable {
    static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
    TABLE.get_or_init(|| BernoulliTable::build(BERNOULLI_MAX_INDEX))
}

/// B_k in the caller's scalar; zero beyond the table is never returned
/// silently, `None` is.
pub fn bernoulli_number<T: Real>(k: usize) -> Option<T> {
    bernoulli_table().number(k).map(T::lit)
}

/// Bernoulli polynomial B_m(q), evaluated by Horner's rule on the exact
/// binomial expansion.
pub fn bernoulli_poly<T: Real>(m: usize, q: Complex<T>) -> Result<Complex<T>> {
    let coeffs = bernoulli_table()
        .poly_coefficients(m)
        .ok_or_else(|| Error::Domain {
            function: "bernoulli_poly",
            reason: format!("degree {m} exceeds table size {BERNOULLI_MAX_INDEX}"),
        })?;
    let mut acc = Complex::new(T::zero(), T::zero());
    for &c in coeffs.iter().rev() {
        acc = acc * q + T::lit(c);
    }
    Ok(acc)
}
