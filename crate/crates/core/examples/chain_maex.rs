//! The chain maex census under each reading of its domain.

use mexlab::census::chain_maex_census;
use mexlab::verify::{chain_maex_reading_name, CHAIN_MAEX_READINGS};

fn main() -> mexlab::Result<()> {
    let n = 12;
    for r in [2, 3] {
        println!("n = {n}, r = {r}");
        for (domain, below) in CHAIN_MAEX_READINGS {
            let c = chain_maex_census(n, r, domain, below)?;
            let agree = (1..=n).all(|j| c.parts_above_chain_maex.get(&[j]) == c.smallest_repeating.get(&[j]));
            let row: Vec<String> = (1..=4)
                .map(|j| format!("{}/{}", c.parts_above_chain_maex.get(&[j]), c.smallest_repeating.get(&[j])))
                .collect();
            println!("  {:<34} j=1..4: {}  agree: {agree}", chain_maex_reading_name(domain, below), row.join(" "));
        }
    }
    Ok(())
}
