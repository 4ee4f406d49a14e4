//! Bivariate series: extracting w-layers and the w-derivative at w = 1.

use mexlab::census::alpha_census;
use mexlab::qseries::{gf_alpha_bivariate, gf_interm1, gf_interm1_derivative};

fn main() -> mexlab::Result<()> {
    let order = 12;
    let alpha = gf_alpha_bivariate(order);
    let (above_mex, even) = alpha_census(order as u32);
    for j in 0..4 {
        println!(
            "w^{j}: {}  (census {} / {})",
            alpha.w_coefficient(j),
            above_mex.get(&[j as u32]),
            even.get(&[j as u32])
        );
    }

    let b = gf_interm1(1, 2, order)?;
    let (value, derivative) = gf_interm1_derivative(1, 2, order)?;
    assert_eq!(b.at_w_one(), value);
    assert_eq!(b.w_derivative_at_1(), derivative);
    println!("at w = 1: {value}");
    println!("d/dw at w = 1: {derivative}");
    Ok(())
}
