//! Refined DT invariants of m-loop quivers, with positivity checked.
//!
//! ```text
//! cargo run --example dt_invariants
//! ```

use coha_lab::dt::{dt_invariants, positivity_check};
use coha_lab::qseries::WeightWindow;
use coha_lab::quiver::Quiver;

fn main() -> coha_lab::Result<()> {
    for m in 0..=3 {
        let q = Quiver::loops(m);
        let tbl = dt_invariants(&q, 5, WeightWindow::new(80))?;
        println!("{m}-loop quiver");
        for (d, omega) in &tbl.invariants {
            if d.is_zero() {
                continue;
            }
            let mark = if tbl.is_certified(d) { "" } else { "  (uncertified)" };
            println!(
                "  Ω_{d} = {:<28} Ω(1) = {}{mark}",
                omega.render_q(),
                omega.eval_at_one()
            );
        }
        println!("  positivity: {:?}\n", positivity_check(&q, &tbl));
    }
    Ok(())
}
