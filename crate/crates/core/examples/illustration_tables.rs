//! The two illustration tables at n = 7, with the partitions in each column.

use mexlab::census::{members, three_way_census};

fn main() -> mexlab::Result<()> {
    for (r, j) in [(2, 2), (3, 1)] {
        let c = three_way_census(7, r)?;
        println!("n = 7, r = {r}, j = {j}: counts {:?}", c.row(j));
        for stat in c.statistics() {
            let ps: Vec<String> = members(7, &stat, &[j], usize::MAX).iter().map(|p| p.to_string()).collect();
            println!("  {stat}: {}", ps.join(", "));
        }
    }
    Ok(())
}
