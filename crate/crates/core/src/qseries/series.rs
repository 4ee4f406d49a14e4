use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Below this length multiplication falls back to the schoolbook loop.
const KARATSUBA_THRESHOLD: usize = 48;

/// A power series in `q` known exactly through `q^order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    // Always `order + 1` entries.
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, BigInt::one(), order)
    }

    /// `c · q^exp`, which is zero when `exp > order`.
    pub fn monomial(exp: usize, c: BigInt, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c;
        }
        s
    }

    /// Takes `coeffs[0..=order]`, padding with zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>, order: usize) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^n`; panics beyond the order.
    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff_mut(&mut self, n: usize) -> &mut BigInt {
        &mut self.coeffs[n]
    }

    /// Coefficients as `i64`, or `None` if any overflows.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| i64::try_from(c).ok()).collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for i in k..=order {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    /// In place: `self ← self + c · q^k · other`, truncated to `self`'s order.
    pub fn add_shifted(&mut self, other: &Self, k: usize, c: i64) {
        let end = self.coeffs.len().min(other.coeffs.len() + k);
        match c {
            0 => {}
            1 => (k..end).for_each(|i| self.coeffs[i] += &other.coeffs[i - k]),
            -1 => (k..end).for_each(|i| self.coeffs[i] -= &other.coeffs[i - k]),
            _ => {
                let c = BigInt::from(c);
                (k..end).for_each(|i| self.coeffs[i] += &other.coeffs[i - k] * &c);
            }
        }
    }

    /// In place: `self ← self · (1 − q^exp)`.
    pub fn mul_one_minus_q_pow(&mut self, exp: usize) {
        assert!(exp >= 1);
        for i in (exp..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] -= &lo[i - exp];
        }
    }

    /// In place: `self ← self · (1 + q^exp)`.
    pub fn mul_one_plus_q_pow(&mut self, exp: usize) {
        assert!(exp >= 1);
        for i in (exp..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - exp];
        }
    }

    /// In place: `self ← self / (1 − q^exp)`.
    pub fn div_one_minus_q_pow(&mut self, exp: usize) {
        assert!(exp >= 1);
        for i in exp..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - exp];
        }
    }

    /// Multiplicative inverse; the constant term must be `±1`.
    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.abs() != BigInt::one() {
            return Err(Error::NonUnitConstant);
        }
        let order = self.order();
        let mut out = Self::zero(order);
        out.coeffs[0] = a0.clone();
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &out.coeffs[n - k];
                }
            }
            // a0 is its own inverse.
            out.coeffs[n] = -(acc * a0);
        }
        Ok(out)
    }

    /// Product by the quadratic loop, truncated to the smaller order.
    pub fn mul_schoolbook(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    /// Product by Karatsuba splitting, truncated to the smaller order.
    pub fn mul_karatsuba(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let full = karatsuba(&self.coeffs[..=order], &other.coeffs[..=order]);
        Self::from_coeffs(full, order)
    }

    pub fn square(&self) -> Self {
        self * self
    }
}

fn schoolbook_full(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn add_slices(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    out
}

/// Full (untruncated) product of two coefficient slices.
fn karatsuba(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.len() < KARATSUBA_THRESHOLD || b.len() < KARATSUBA_THRESHOLD {
        return schoolbook_full(a, b);
    }
    let half = a.len().max(b.len()) / 2;
    let (a0, a1) = a.split_at(half.min(a.len()));
    let (b0, b1) = b.split_at(half.min(b.len()));
    let low = karatsuba(a0, b0);
    let high = karatsuba(a1, b1);
    let mid_full = karatsuba(&add_slices(a0, a1), &add_slices(b0, b1));
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, c) in low.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in high.iter().enumerate() {
        out[i + 2 * half] += c;
    }
    for (i, c) in mid_full.into_iter().enumerate() {
        let mut c = c;
        if let Some(l) = low.get(i) {
            c -= l;
        }
        if let Some(h) = high.get(i) {
            c -= h;
        }
        if !c.is_zero() {
            out[i + half] += c;
        }
    }
    out
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: Self) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: Self) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: Self) -> TruncatedSeries {
        if self.order().min(rhs.order()) + 1 < KARATSUBA_THRESHOLD {
            self.mul_schoolbook(rhs)
        } else {
            self.mul_karatsuba(rhs)
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $m(self, rhs: Self) -> TruncatedSeries {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for TruncatedSeries {
    /// Comma-separated coefficients from `q^0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(c: &[i64], order: usize) -> TruncatedSeries {
        TruncatedSeries::from_i64s(c, order)
    }

    #[test]
    fn geometric_series() {
        let one_minus_q = s(&[1, -1], 30);
        let inv = one_minus_q.reciprocal().unwrap();
        assert!(inv.coeffs().iter().all(|c| c == &BigInt::one()));
        assert_eq!(&one_minus_q * &inv, TruncatedSeries::one(30));
    }

    #[test]
    fn reciprocal_needs_unit() {
        assert_eq!(s(&[2, 1], 5).reciprocal(), Err(Error::NonUnitConstant));
        assert_eq!(s(&[0, 1], 5).reciprocal(), Err(Error::NonUnitConstant));
        let neg = s(&[-1, 1], 6).reciprocal().unwrap();
        assert_eq!(neg, s(&[-1, -1, -1, -1, -1, -1, -1], 6));
    }

    #[test]
    fn mismatched_orders_truncate() {
        let a = s(&[1, 2, 3, 4], 3);
        let b = s(&[1, 1], 1);
        assert_eq!((&a + &b).order(), 1);
        assert_eq!(&a * &b, s(&[1, 3], 1));
        assert_eq!(&a - &a, TruncatedSeries::zero(3));
    }

    #[test]
    fn in_place_factors() {
        let mut a = TruncatedSeries::one(6);
        a.mul_one_minus_q_pow(2);
        assert_eq!(a, s(&[1, 0, -1], 6));
        a.div_one_minus_q_pow(2);
        assert_eq!(a, TruncatedSeries::one(6));
        a.mul_one_plus_q_pow(1);
        a.mul_one_plus_q_pow(2);
        assert_eq!(a, s(&[1, 1, 1, 1], 6));
        assert_eq!(a.shift(4), s(&[0, 0, 0, 0, 1, 1, 1], 6));
    }

    fn arb_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        proptest::collection::vec(-1_000_000i64..1_000_000, order + 1)
            .prop_map(move |c| TruncatedSeries::from_i64s(&c, order))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn karatsuba_matches_schoolbook(a in arb_series(200), b in arb_series(200)) {
            prop_assert_eq!(a.mul_karatsuba(&b), a.mul_schoolbook(&b));
        }

        #[test]
        fn multiplication_commutes(a in arb_series(200), b in arb_series(200)) {
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn ring_laws(a in arb_series(60), b in arb_series(60), c in arb_series(60)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn reciprocal_is_inverse(mut a in arb_series(80), sign in proptest::bool::ANY) {
            *a.coeff_mut(0) = BigInt::from(if sign { 1 } else { -1 });
            let inv = a.reciprocal().unwrap();
            prop_assert_eq!(&a * &inv, TruncatedSeries::one(80));
        }
    }
}
