//! Write a sequence in b-file form ("n value" lines from n = 0).
//!
//! `cargo run --example bfile_export -- 3 200 > b.txt`

use std::io::Write;

use mexlab::qseries::gf_sigma_rc_mex_rhs;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let r: usize = args.next().map_or(Ok(2), |a| a.parse())?;
    let max_n: usize = args.next().map_or(Ok(100), |a| a.parse())?;
    let series = gf_sigma_rc_mex_rhs(r, max_n)?;
    let mut out = std::io::BufWriter::new(std::io::stdout().lock());
    for (n, c) in series.coeffs().iter().enumerate() {
        writeln!(out, "{n} {c}")?;
    }
    Ok(())
}
