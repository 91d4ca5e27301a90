//! Characters of CoHA modules, from the product formula and from DT
//! invariants, and the quotient dimensions they predict.
//!
//! ```text
//! cargo run --example module_character
//! ```

use coha_lab::dt::{module_character, module_character_dt_form, module_dims};
use coha_lab::qseries::{DimVector, WeightWindow};
use coha_lab::quiver::Quiver;

fn main() -> coha_lab::Result<()> {
    let q = Quiver::complete(2, 2, 1);
    let w = DimVector::new(vec![1, 1]);
    let win = WeightWindow::new(40);
    let z = module_character(&q, &w, 2, win)?;
    let via_dt = module_character_dt_form(&q, &w, 2, win)?;
    println!("Z(M_w) for w = {w}:\n{z}");
    println!("agrees with the DT form: {}", z.first_disagreement(&via_dt).is_none());

    let d = DimVector::new(vec![1, 1]);
    let dims = module_dims(&q, &w, &d, 0..=6)?;
    println!("\nM_(w,{d}) by cohomological degree:");
    for cell in &dims.cells {
        println!("  k = {:>3}: {}", cell.degree, cell.dim);
    }
    println!("total {} (parking functions on two cars: 3)", dims.total(&d));
    Ok(())
}
