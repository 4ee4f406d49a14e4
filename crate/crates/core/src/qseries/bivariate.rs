use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::TruncatedSeries;

/// A series in `q` whose coefficients are polynomials in a tracking
/// variable `w`, exact through `q^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    // rows[d][j] is the coefficient of w^j q^d; rows carry no trailing zeros.
    rows: Vec<Vec<BigInt>>,
}

impl BivariateSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            rows: vec![Vec::new(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.rows[0].push(BigInt::one());
        s
    }

    /// Embeds a univariate series as the `w^0` layer.
    pub fn from_univariate(series: &TruncatedSeries) -> Self {
        let mut s = Self::zero(series.order());
        for (d, c) in series.coeffs().iter().enumerate() {
            if !c.is_zero() {
                s.rows[d].push(c.clone());
            }
        }
        s
    }

    /// `w^j · series`.
    pub fn from_layer(j: usize, series: &TruncatedSeries) -> Self {
        let mut s = Self::zero(series.order());
        for (d, c) in series.coeffs().iter().enumerate() {
            if !c.is_zero() {
                s.rows[d].resize(j + 1, BigInt::zero());
                s.rows[d][j] = c.clone();
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    /// Coefficient of `w^j q^n`.
    pub fn coeff(&self, n: usize, j: usize) -> BigInt {
        self.rows[n].get(j).cloned().unwrap_or_default()
    }

    /// The polynomial in `w` multiplying `q^n`.
    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }

    /// Highest power of `w` present in the `q^n` coefficient.
    pub fn w_degree(&self, n: usize) -> Option<usize> {
        self.rows[n].len().checked_sub(1)
    }

    /// The univariate series of `w^j` coefficients.
    pub fn w_coefficient(&self, j: usize) -> TruncatedSeries {
        let coeffs = self.rows.iter().map(|r| r.get(j).cloned().unwrap_or_default()).collect();
        TruncatedSeries::from_coeffs(coeffs, self.order())
    }

    /// Value of the series at `w = 1`.
    pub fn at_w_one(&self) -> TruncatedSeries {
        let coeffs = self.rows.iter().map(|r| r.iter().sum()).collect();
        TruncatedSeries::from_coeffs(coeffs, self.order())
    }

    /// Exact `∂/∂w` evaluated at `w = 1`, per power of `q`.
    pub fn w_derivative_at_1(&self) -> TruncatedSeries {
        let coeffs = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .skip(1)
                    .map(|(j, c)| c * BigInt::from(j))
                    .sum()
            })
            .collect();
        TruncatedSeries::from_coeffs(coeffs, self.order())
    }

    /// Multiplies by `q^k`.
    pub fn shift_q(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order());
        for d in k..=self.order() {
            out.rows[d] = self.rows[d - k].clone();
        }
        out
    }

    /// Multiplies by a univariate series.
    pub fn mul_univariate(&self, s: &TruncatedSeries) -> Self {
        let order = self.order().min(s.order());
        let mut out = Self::zero(order);
        for d in 0..=order {
            let row = &mut out.rows[d];
            for e in 0..=d {
                let c = s.coeff(d - e);
                if c.is_zero() {
                    continue;
                }
                let src = &self.rows[e];
                if row.len() < src.len() {
                    row.resize(src.len(), BigInt::zero());
                }
                for (acc, x) in row.iter_mut().zip(src) {
                    *acc += x * c;
                }
            }
            trim(row);
        }
        out
    }

    /// In place: `self ← self · (1 − w^a q^b)`.
    pub fn mul_one_minus(&mut self, a: usize, b: usize) {
        assert!(b >= 1);
        for d in (b..self.rows.len()).rev() {
            let (lo, hi) = self.rows.split_at_mut(d);
            sub_shifted(&mut hi[0], &lo[d - b], a);
        }
    }

    /// In place: `self ← self / (1 − w^a q^b)`.
    pub fn div_one_minus(&mut self, a: usize, b: usize) {
        assert!(b >= 1);
        for d in b..self.rows.len() {
            let (lo, hi) = self.rows.split_at_mut(d);
            add_shifted(&mut hi[0], &lo[d - b], a);
        }
    }
}

impl std::ops::AddAssign<&BivariateSeries> for BivariateSeries {
    /// Truncates to the smaller order.
    fn add_assign(&mut self, other: &BivariateSeries) {
        self.rows.truncate(other.rows.len());
        for (dst, src) in self.rows.iter_mut().zip(&other.rows) {
            add_shifted(dst, src, 0);
        }
    }
}

fn trim(row: &mut Vec<BigInt>) {
    while row.last().is_some_and(Zero::is_zero) {
        row.pop();
    }
}

fn add_shifted(dst: &mut Vec<BigInt>, src: &[BigInt], shift: usize) {
    if src.is_empty() {
        return;
    }
    if dst.len() < src.len() + shift {
        dst.resize(src.len() + shift, BigInt::zero());
    }
    for (i, c) in src.iter().enumerate() {
        dst[i + shift] += c;
    }
    trim(dst);
}

fn sub_shifted(dst: &mut Vec<BigInt>, src: &[BigInt], shift: usize) {
    if src.is_empty() {
        return;
    }
    if dst.len() < src.len() + shift {
        dst.resize(src.len() + shift, BigInt::zero());
    }
    for (i, c) in src.iter().enumerate() {
        dst[i + shift] -= c;
    }
    trim(dst);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_of_w_constant_is_zero() {
        let p = super::super::partition_gf(20);
        let s = BivariateSeries::from_univariate(&p);
        assert!(s.w_derivative_at_1().is_zero());
        assert_eq!(s.at_w_one(), p);
    }

    #[test]
    fn single_factor() {
        // 1/(1 - w q) = Σ w^k q^k
        let mut s = BivariateSeries::one(5);
        s.div_one_minus(1, 1);
        for n in 0..=5 {
            for j in 0..=5 {
                assert_eq!(s.coeff(n, j), BigInt::from((n == j) as i32));
            }
        }
        assert_eq!(s.w_derivative_at_1(), TruncatedSeries::from_i64s(&[0, 1, 2, 3, 4, 5], 5));
        s.mul_one_minus(1, 1);
        assert_eq!(s, BivariateSeries::one(5));
    }

    #[test]
    fn univariate_product_and_shift() {
        let mut s = BivariateSeries::one(4);
        s.div_one_minus(1, 2);
        let g = TruncatedSeries::from_i64s(&[1, 1], 4);
        let t = s.mul_univariate(&g).shift_q(1);
        assert_eq!(t.coeff(1, 0), BigInt::one());
        assert_eq!(t.coeff(2, 0), BigInt::one());
        assert_eq!(t.coeff(3, 1), BigInt::one());
        assert_eq!(t.coeff(4, 1), BigInt::one());
        assert_eq!(t.w_degree(0), None);
        assert_eq!(t.w_coefficient(1), TruncatedSeries::from_i64s(&[0, 0, 0, 1, 1], 4));
    }
}
