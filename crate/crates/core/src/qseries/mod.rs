//! Exact truncated q-series and the generating functions built from them.
//!
//! Every infinite product `Π (1 − w^a q^b)` is expanded with exactly the
//! factors whose `q`-exponent `b` is at most the requested order, so each
//! builder is exact through that order. Coefficients are arbitrary
//! precision; intermediate series may be negative.

mod bivariate;
mod series;

pub use bivariate::BivariateSeries;
pub use series::TruncatedSeries;

use num_bigint::BigInt;

use crate::error::{invalid, Result};

/// `(q^c; q^d)_∞ = Π_{t≥0} (1 − q^{c+td})` through `q^order`.
pub fn pochhammer_inf(c: usize, d: usize, order: usize) -> TruncatedSeries {
    assert!(c >= 1 && d >= 1, "pochhammer exponents must be positive");
    let mut s = TruncatedSeries::one(order);
    let mut e = c;
    while e <= order {
        s.mul_one_minus_q_pow(e);
        e += d;
    }
    s
}

/// `1 / (q^c; q^d)_∞`, expanded by repeated geometric division.
pub fn pochhammer_inv_inf(c: usize, d: usize, order: usize) -> TruncatedSeries {
    assert!(c >= 1 && d >= 1, "pochhammer exponents must be positive");
    let mut s = TruncatedSeries::one(order);
    let mut e = c;
    while e <= order {
        s.div_one_minus_q_pow(e);
        e += d;
    }
    s
}

/// `(q^c; q^d)_n = Π_{t<n} (1 − q^{c+td})`; `(·)_0 = 1`.
pub fn pochhammer_fin(c: usize, d: usize, n_terms: usize, order: usize) -> TruncatedSeries {
    assert!(c >= 1 && d >= 1, "pochhammer exponents must be positive");
    let mut s = TruncatedSeries::one(order);
    for t in 0..n_terms {
        let e = c + t * d;
        if e > order {
            break;
        }
        s.mul_one_minus_q_pow(e);
    }
    s
}

/// `1 / (q^c; q^d)_n`.
pub fn pochhammer_fin_inv(c: usize, d: usize, n_terms: usize, order: usize) -> TruncatedSeries {
    assert!(c >= 1 && d >= 1, "pochhammer exponents must be positive");
    let mut s = TruncatedSeries::one(order);
    for t in 0..n_terms {
        let e = c + t * d;
        if e > order {
            break;
        }
        s.div_one_minus_q_pow(e);
    }
    s
}

/// `(q; q)_∞`.
pub fn euler_product(order: usize) -> TruncatedSeries {
    pochhammer_inf(1, 1, order)
}

/// `Σ p(n) q^n` from the pentagonal-number recurrence
/// `p(n) = Σ_{k≥1} (−1)^{k+1} [p(n − k(3k−1)/2) + p(n − k(3k+1)/2)]`.
pub fn partition_gf(order: usize) -> TruncatedSeries {
    let mut p: Vec<BigInt> = Vec::with_capacity(order + 1);
    p.push(BigInt::from(1));
    for n in 1..=order {
        let mut acc = BigInt::from(0);
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            if k % 2 == 1 {
                acc += &p[n - g1];
                if g2 <= n {
                    acc += &p[n - g2];
                }
            } else {
                acc -= &p[n - g1];
                if g2 <= n {
                    acc -= &p[n - g2];
                }
            }
        }
        p.push(acc);
    }
    TruncatedSeries::from_coeffs(p, order)
}

/// `(−q; q)_∞ = Π (1 + q^k)`, partitions into distinct parts.
pub fn distinct_parts_gf(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for k in 1..=order {
        s.mul_one_plus_q_pow(k);
    }
    s
}

/// `Σ σmex(n) q^n = (−q; q)_∞²`.
pub fn gf_sigma_mex(order: usize) -> TruncatedSeries {
    distinct_parts_gf(order).square()
}

/// `1 / (q; q²)_∞²`, the odd-part form of [`gf_sigma_mex`].
pub fn gf_sigma_mex_odd_form(order: usize) -> TruncatedSeries {
    pochhammer_inv_inf(1, 2, order).square()
}

fn check_chain_length(r: usize) -> Result<()> {
    if r == 0 {
        return Err(invalid("r", 0, "must be at least 1"));
    }
    Ok(())
}

/// `(q^M; q^M)_∞ / (q; q)_∞` for `M = r + 1`: the `M`-regular partitions.
fn regular_gf(modulus: usize, order: usize) -> TruncatedSeries {
    let mut s = pochhammer_inv_inf(1, 1, order);
    let mut e = modulus;
    while e <= order {
        s.mul_one_minus_q_pow(e);
        e += modulus;
    }
    s
}

/// `−(r−1)/(q;q)_∞ + (q^{r+1};q^{r+1})_∞/(q;q)_∞ · Σ_{m=1}^{r} 1/(q^m;q^{r+1})_∞`.
pub fn gf_sigma_rc_mex_rhs(r: usize, order: usize) -> Result<TruncatedSeries> {
    check_chain_length(r)?;
    let modulus = r + 1;
    let mut sum = TruncatedSeries::zero(order);
    for m in 1..=r {
        sum = &sum + &pochhammer_inv_inf(m, modulus, order);
    }
    let main = &regular_gf(modulus, order) * &sum;
    let correction = partition_gf(order).scale(&BigInt::from(r as i64 - 1));
    Ok(&main - &correction)
}

/// `(q^{r+1};q^{r+1})_∞/(q;q)_∞ · 1/(q^m;q^{r+1})_∞`: `(r+1)`-regular
/// partitions whose parts `≡ m (mod r+1)` come in two colors.
pub fn gf_corollary_term(r: usize, m: usize, order: usize) -> Result<TruncatedSeries> {
    check_chain_length(r)?;
    if m == 0 || m > r + 1 {
        return Err(invalid("m", m as i64, "must lie in [1, r + 1]"));
    }
    Ok(&regular_gf(r + 1, order) * &pochhammer_inv_inf(m, r + 1, order))
}

/// `1 / ((q; q²)_∞ (wq²; q²)_∞)`: `w` tracks the even parts.
pub fn gf_alpha_bivariate(order: usize) -> BivariateSeries {
    let mut s = BivariateSeries::one(order);
    for b in 1..=order {
        s.div_one_minus(usize::from(b % 2 == 0), b);
    }
    s
}

/// `(q^r;q^r)_∞/(q;q)_∞ · 1/(wq^r;q^r)_∞`: `w` tracks the parts divisible by `r`.
pub fn gf_multiples_bivariate(r: usize, order: usize) -> Result<BivariateSeries> {
    check_chain_length(r)?;
    let mut s = BivariateSeries::one(order);
    for b in 1..=order {
        let tracked = usize::from(b % r == 0);
        s.div_one_minus(tracked, b);
    }
    Ok(s)
}

/// `Π_{t>j} (1 + q^t + … + q^{t(r−1)})`: parts above `j`, each occurring
/// fewer than `r` times.
pub fn bounded_frequency_product(j: usize, r: usize, order: usize) -> Result<TruncatedSeries> {
    check_chain_length(r)?;
    let mut s = TruncatedSeries::one(order);
    for t in (j + 1)..=order {
        if r * t <= order {
            s.mul_one_minus_q_pow(r * t);
        }
        s.div_one_minus_q_pow(t);
    }
    Ok(s)
}

/// `q^{rj}/(q;q)_j · Π_{m>j} (1 + q^m + … + q^{m(r−1)})`: partitions whose
/// largest `r`-repeating part is `j` (`j = 0`: no part repeats `r` times).
pub fn gf_largest_repeating(r: usize, j: usize, order: usize) -> Result<TruncatedSeries> {
    if r * j > order {
        check_chain_length(r)?;
        return Ok(TruncatedSeries::zero(order));
    }
    let tail = bounded_frequency_product(j, r, order)?;
    let mut s = tail;
    for i in 1..=j.min(order) {
        s.div_one_minus_q_pow(i);
    }
    Ok(s.shift(r * j))
}

/// `q^{j(r+1)} ((wq^{j+1})^{r+1}; q^{r+1})_∞ / ((q;q)_j (wq^{j+1};q)_∞)`:
/// partitions with largest `(r+1)`-repeating part `j`, `w` tracking the
/// parts greater than `j`.
pub fn gf_interm1(j: usize, r: usize, order: usize) -> Result<BivariateSeries> {
    check_chain_length(r)?;
    let s = r + 1;
    if j * s > order {
        return Ok(BivariateSeries::zero(order));
    }
    let mut g = BivariateSeries::one(order);
    for u in (j + 1)..=order {
        g.div_one_minus(1, u);
        if s * u <= order {
            g.mul_one_minus(s, s * u);
        }
    }
    for i in 1..=j.min(order) {
        g.div_one_minus(0, i);
    }
    Ok(g.shift_q(j * s))
}

/// Value and exact `w`-derivative at `w = 1` of [`gf_interm1`], expanded
/// with `w = 1 + ε`, `ε² = 0` instead of the full polynomial in `w`.
pub fn gf_interm1_derivative(j: usize, r: usize, order: usize) -> Result<(TruncatedSeries, TruncatedSeries)> {
    check_chain_length(r)?;
    let s = r + 1;
    let lift = j * s;
    if lift > order {
        return Ok((TruncatedSeries::zero(order), TruncatedSeries::zero(order)));
    }
    let inner = order - lift;
    let mut u = TruncatedSeries::one(inner);
    let mut v = TruncatedSeries::zero(inner);
    let s_signed = -(s as i64);
    for t in (j + 1)..=inner {
        // (u + εv) / (1 − (1 + ε) q^t)
        u.div_one_minus_q_pow(t);
        v.add_shifted(&u, t, 1);
        v.div_one_minus_q_pow(t);
        if s * t <= inner {
            // (u + εv) · (1 − (1 + sε) q^{st})
            v.mul_one_minus_q_pow(s * t);
            v.add_shifted(&u, s * t, s_signed);
            u.mul_one_minus_q_pow(s * t);
        }
    }
    for i in 1..=j.min(inner) {
        u.div_one_minus_q_pow(i);
        v.div_one_minus_q_pow(i);
    }
    Ok((raise(&u, lift, order), raise(&v, lift, order)))
}

fn raise(s: &TruncatedSeries, k: usize, order: usize) -> TruncatedSeries {
    let mut coeffs = vec![BigInt::from(0); k];
    coeffs.extend_from_slice(s.coeffs());
    TruncatedSeries::from_coeffs(coeffs, order)
}

/// `Σ_{n≥0} q^{zexp·n} / (q;q)_n`, summed while `zexp·n ≤ order`.
pub fn q_binomial_a0_sum(zexp: usize, order: usize) -> TruncatedSeries {
    assert!(zexp >= 1);
    let mut term = TruncatedSeries::one(order);
    let mut total = term.clone();
    let mut n = 1;
    while zexp * n <= order {
        term = term.shift(zexp);
        term.div_one_minus_q_pow(n);
        total = &total + &term;
        n += 1;
    }
    total
}

/// Whether `Σ_n z^n/(q;q)_n = 1/(z;q)_∞` holds through `q^order` for `z = q^zexp`.
pub fn q_binomial_specialized(zexp: usize, order: usize) -> bool {
    q_binomial_a0_sum(zexp, order) == pochhammer_inv_inf(zexp, 1, order)
}
