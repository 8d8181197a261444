//! kappa* strictness, the filtered short exact sequence and the
//! localization sequence.

use bso_motivic::motivic::{ses_odd, verify_topological_exactness};
use bso_motivic::weightfilt::{verify_iota_strictness, verify_strictness};

fn main() -> bso_motivic::Result<()> {
    for n in 3..=6 {
        let r = verify_strictness(n, 10)?;
        println!("{}: injective {}, strict {}", r.map, r.injective, r.pass);
    }
    for m in 1..=3 {
        let r = verify_iota_strictness(m, 8)?;
        println!("{}: non-strict in degrees {:?}", r.map, r.failing_degrees());
    }

    let r = ses_odd(2, 10)?;
    println!("\nfiltered sequence for m=2 (degree, weight: left + right = middle)");
    for e in r.entries.iter().filter(|e| e.middle > 0) {
        println!(
            "  d={:>2} w={:>2}: {} + {} = {}",
            e.degree, e.weight, e.left, e.right, e.middle
        );
    }

    for n in 3..=7 {
        println!(
            "localization sequence n={n}: {}",
            verify_topological_exactness(n, 12)?
        );
    }
    Ok(())
}
