//! Sums of the r-chain mex: series against enumeration.

use mexlab::census::sigma_chain_mex_many;
use mexlab::qseries::gf_sigma_rc_mex_rhs;

fn main() -> mexlab::Result<()> {
    let max_n = 25;
    let rs = [1, 2, 3, 4];
    let series: Vec<_> = rs.iter().map(|&r| gf_sigma_rc_mex_rhs(r as usize, max_n)).collect::<Result<_, _>>()?;
    println!("{:>3} {:>10} {:>10} {:>10} {:>10}", "n", "r=1", "r=2", "r=3", "r=4");
    for n in 0..=max_n as u32 {
        let direct = sigma_chain_mex_many(n, &rs)?;
        for (s, d) in series.iter().zip(&direct) {
            assert_eq!(s.coeff(n as usize), &(*d).into());
        }
        println!("{n:>3} {:>10} {:>10} {:>10} {:>10}", direct[0], direct[1], direct[2], direct[3]);
    }
    Ok(())
}
