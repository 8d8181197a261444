//! Bigraded dimension tables of H^{d,j}(BO_n) and H^{d,j}(BSO_n).

use bso_motivic::motivic::dimension_table;
use bso_motivic::rings::RingPresentation;

fn main() -> bso_motivic::Result<()> {
    for group in ["bo:3", "bso:4", "bso:5"] {
        let ring = RingPresentation::parse(group)?;
        let table = dimension_table(&ring, 8, None)?;
        println!("{}", table.group);
        for e in &table.entries {
            let torsion = if e.torsion_dim > 0 {
                format!("  ({} torsion)", e.torsion_dim)
            } else {
                String::new()
            };
            println!("  H^{{{},{}}} = {}{torsion}", e.degree, e.twist, e.dim);
        }
    }
    Ok(())
}
