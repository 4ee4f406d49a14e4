//! The sum of r-chain mex as a signed count of two-colored regular partitions.

use mexlab::census::sigma_chain_mex;
use mexlab::enumerate::{count_colored, count_two_colored_distinct, partitions, ColoredSpec};

fn main() -> mexlab::Result<()> {
    for r in 1..=3u32 {
        let m = r + 1;
        for n in [5, 10, 15] {
            let colored: u64 = (1..=r)
                .map(|j| count_colored(n, &ColoredSpec::regular_two_colored(m, j)))
                .sum::<mexlab::Result<u64>>()?;
            let p = partitions(n).count() as i64;
            let rhs = colored as i64 - (i64::from(r) - 1) * p;
            println!("r = {r}, n = {n:>2}: sigma = {}, colored sum - (r-1)p(n) = {rhs}", sigma_chain_mex(n, r)?);
        }
    }
    println!("D2(3) = {}", count_two_colored_distinct(3));
    Ok(())
}
