//! Every statistic of a single partition.
//!
//! `cargo run --example chain_mex_stats -- 7 4 4 4 3 1 1`

use mexlab::partition::BelowOne;
use mexlab::Partition;

fn main() -> mexlab::Result<()> {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer part")).collect();
    let parts = if args.is_empty() { vec![7, 4, 4, 4, 3, 1, 1] } else { args };
    let p = Partition::from_parts(&parts)?;

    println!("{p}  (n = {}, {} parts)", p.weight(), p.num_parts());
    println!("conjugate {}", p.conjugate());
    println!("mex {}, maex {:?}, gap-free {}", p.mex(), p.maex(), p.is_gap_free());
    for r in 1..=4 {
        println!(
            "r = {r}: chain mex {}, chain maex {:?} / {:?}, largest {r}-repeating {}, multiples of {r} {}",
            p.chain_mex(r),
            p.chain_maex(r),
            p.chain_maex_with(r, BelowOne::Occupied),
            p.largest_repeating(r),
            p.multiples_of(r),
        );
    }
    Ok(())
}
