//! Weights of classes in H*(BO_n), H*(BSO_n) and the filtration dimensions.

use bso_motivic::grammar::ClassExpr;
use bso_motivic::rings::RingPresentation;
use bso_motivic::weightfilt::{stiefel_whitney_weight_table, WeightEngine};

fn main() -> bso_motivic::Result<()> {
    let mut engine = WeightEngine::new();
    for (group, class) in [
        ("bo:4", "w1*w3"),
        ("bo:4", "w2^2"),
        ("bso:5", "w3"),
        ("bso:6", "w6"),
        ("bso:6", "w2*w4"),
    ] {
        let ring = RingPresentation::parse(group)?;
        let p = ClassExpr::parse(class)?.to_w(ring.n())?;
        println!(
            "{:<6} {:<8} weight {}",
            ring.group_name(),
            class,
            engine.weight(&ring, &p)?
        );
    }

    println!();
    for e in stiefel_whitney_weight_table(6)?
        .iter()
        .filter(|e| e.group.starts_with("BSO"))
    {
        println!("{:<6} w{}  weight {}", e.group, e.l, e.weight);
    }

    let ring = RingPresentation::bso(4);
    println!("\nweight counts of H^d(BSO_4):");
    for d in 0..=12 {
        println!(
            "  d={d:>2}  {:?}",
            engine.weighted_basis(&ring, d)?.weight_counts()
        );
    }
    Ok(())
}
