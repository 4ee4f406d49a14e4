//! Plain and constrained enumeration, in descending lexicographic order.

use mexlab::enumerate::{partitions, partitions_constrained, partitions_with_largest_part, ConstraintSpec};

fn main() -> mexlab::Result<()> {
    let n = 8;
    println!("p({n}) = {}", partitions(n).count());
    for p in partitions_with_largest_part(n, 3) {
        println!("  largest part 3: {p}");
    }

    let odd = ConstraintSpec::new().forbid_residues(2, &[0]);
    let distinct = ConstraintSpec::new().distinct();
    println!(
        "odd parts: {}, distinct parts: {}",
        partitions_constrained(n, &odd)?.count(),
        partitions_constrained(n, &distinct)?.count()
    );

    let gap = ConstraintSpec::new().max_successive_gap(2).max_frequency(2);
    for p in partitions_constrained(n, &gap)? {
        println!("  gaps <= 2, frequencies <= 2: {p}");
    }

    let mut total_parts = 0;
    partitions(20).visit(|p| total_parts += p.num_parts());
    println!("parts over all partitions of 20: {total_parts}");
    Ok(())
}
