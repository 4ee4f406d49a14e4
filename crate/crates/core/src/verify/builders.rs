use crate::error::Result;
use crate::qseries::{self, BivariateSeries, TruncatedSeries};

/// The series routes consulted by the registry.
///
/// Every method defaults to the corresponding [`qseries`] builder; an
/// implementation may override any of them, which is how the harness is
/// checked against a deliberately broken route.
pub trait Builders: Sync {
    fn partition_gf(&self, order: usize) -> TruncatedSeries {
        qseries::partition_gf(order)
    }

    fn euler_product(&self, order: usize) -> TruncatedSeries {
        qseries::euler_product(order)
    }

    fn distinct_parts_gf(&self, order: usize) -> TruncatedSeries {
        qseries::distinct_parts_gf(order)
    }

    fn pochhammer_inv_inf(&self, c: usize, d: usize, order: usize) -> TruncatedSeries {
        qseries::pochhammer_inv_inf(c, d, order)
    }

    fn pochhammer_fin_inv(&self, c: usize, d: usize, n_terms: usize, order: usize) -> TruncatedSeries {
        qseries::pochhammer_fin_inv(c, d, n_terms, order)
    }

    fn sigma_mex(&self, order: usize) -> TruncatedSeries {
        qseries::gf_sigma_mex(order)
    }

    fn sigma_mex_odd_form(&self, order: usize) -> TruncatedSeries {
        qseries::gf_sigma_mex_odd_form(order)
    }

    fn sigma_rc_mex_rhs(&self, r: usize, order: usize) -> Result<TruncatedSeries> {
        qseries::gf_sigma_rc_mex_rhs(r, order)
    }

    fn corollary_term(&self, r: usize, m: usize, order: usize) -> Result<TruncatedSeries> {
        qseries::gf_corollary_term(r, m, order)
    }

    fn alpha_bivariate(&self, order: usize) -> BivariateSeries {
        qseries::gf_alpha_bivariate(order)
    }

    fn multiples_bivariate(&self, r: usize, order: usize) -> Result<BivariateSeries> {
        qseries::gf_multiples_bivariate(r, order)
    }

    fn bounded_frequency_product(&self, j: usize, r: usize, order: usize) -> Result<TruncatedSeries> {
        qseries::bounded_frequency_product(j, r, order)
    }

    fn largest_repeating(&self, r: usize, j: usize, order: usize) -> Result<TruncatedSeries> {
        qseries::gf_largest_repeating(r, j, order)
    }

    fn interm1(&self, j: usize, r: usize, order: usize) -> Result<BivariateSeries> {
        qseries::gf_interm1(j, r, order)
    }

    fn interm1_derivative(&self, j: usize, r: usize, order: usize) -> Result<(TruncatedSeries, TruncatedSeries)> {
        qseries::gf_interm1_derivative(j, r, order)
    }

    fn q_binomial_a0_sum(&self, zexp: usize, order: usize) -> TruncatedSeries {
        qseries::q_binomial_a0_sum(zexp, order)
    }
}

/// The library's own builders.
#[derive(Clone, Copy, Debug, Default)]
pub struct Standard;

impl Builders for Standard {}
