//! Milnor primitives Q_k on symmetric polynomials and on H*(BSO_n).

use bso_motivic::grammar::{format_symmetric_or_x, format_w, ClassExpr};
use bso_motivic::milnor::{apply_q, apply_q_so, check_milnor_laws};

fn main() -> bso_motivic::Result<()> {
    let n = 4;
    for class in ["m[1,1,1]", "w2", "w1*w3", "m[3,1]"] {
        let p = ClassExpr::parse(class)?.to_x(n)?;
        for k in 0..3 {
            println!(
                "Q{k}({class}) in BO_{n} = {}",
                format_symmetric_or_x(&apply_q(k, &p))
            );
        }
    }

    let n = 6;
    for l in 1..=n / 2 {
        let w = ClassExpr::parse(&format!("w{}", 2 * l))?.to_w(n)?;
        println!(
            "Q0(w{}) in BSO_{n} = {}",
            2 * l,
            format_w(&apply_q_so(0, &w, n)?)
        );
    }

    let report = check_milnor_laws(7, 200, 5, 20, 3);
    println!(
        "laws on {} random polynomials: {} derivation, {} square, {} commutation failures",
        report.samples,
        report.derivation_failures,
        report.square_failures,
        report.commutation_failures
    );
    Ok(())
}
