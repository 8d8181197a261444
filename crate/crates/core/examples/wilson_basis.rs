//! The Wilson basis of H^d(BO_n), with and without the admissibility filter.

use bso_motivic::weightfilt::{verify_wilson_decomposition, wilson_basis};

fn main() -> bso_motivic::Result<()> {
    let (n, d) = (3, 8);
    for e in wilson_basis(n, d) {
        let qs: Vec<String> = e.applied.iter().map(|i| format!("Q{i}")).collect();
        println!(
            "{:<12} m{:<12} weight {}",
            qs.join(" "),
            e.partition().to_string(),
            e.weight()
        );
    }

    println!("\n n  d  count  rank  dim  | unfiltered count  rank");
    for n in 2..=4 {
        for d in [4, 6, 8] {
            let a = verify_wilson_decomposition(n, d, true)?;
            let b = verify_wilson_decomposition(n, d, false)?;
            println!(
                "{n:>2} {d:>2} {:>6} {:>5} {:>4}  | {:>16} {:>5}",
                a.count, a.rank, a.dim, b.count, b.rank
            );
        }
    }
    Ok(())
}
