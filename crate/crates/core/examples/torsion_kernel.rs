//! The kernel Y_m of realization on H^{*,*}(BSO_{2m}), computed inductively
//! and compared with the free Z/2[c_2, ..., c_{2m}]-module on y_{i,m}.

use bso_motivic::motivic::{compute_y, verify_main_theorem, TorsionModule};
use bso_motivic::weightfilt::WeightEngine;

fn main() -> bso_motivic::Result<()> {
    let mut engine = WeightEngine::new();
    for (m, maxdeg) in [(2, 20), (3, 16)] {
        let table = compute_y(&mut engine, m, maxdeg)?;
        let module = TorsionModule::new(m);
        println!("Y_{m} (generators at {:?})", module.generators());
        for (&(d, j), &dim) in table.y.iter().filter(|(_, &v)| v > 0) {
            println!(
                "  ({d:>2},{j:>2})  computed {dim}  closed form {}",
                module.hilbert(d, j)
            );
        }
        let r = verify_main_theorem(m, maxdeg)?;
        println!("  routes agree {}, pass {}\n", r.routes_agree, r.pass);
    }
    Ok(())
}
