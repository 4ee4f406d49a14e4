//! Truncated power series and q-Pochhammer products.

use mexlab::qseries::{self, TruncatedSeries};

fn main() -> mexlab::Result<()> {
    let order = 20;
    let euler = qseries::euler_product(order);
    println!("(q;q)_inf      = {euler}");

    let p = qseries::partition_gf(order);
    println!("1/(q;q)_inf    = {p}");
    assert_eq!(&euler * &p, TruncatedSeries::one(order));
    assert_eq!(euler.reciprocal()?, p);

    let odd = qseries::pochhammer_inv_inf(1, 2, order);
    let distinct = qseries::distinct_parts_gf(order);
    println!("odd parts      = {odd}");
    assert_eq!(odd, distinct);

    let big = qseries::partition_gf(500);
    println!("p(500) = {}", big.coeff(500));
    Ok(())
}
