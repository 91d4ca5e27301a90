//! Locality orders of the generating fields `i(z)`: `i(n) j(-1)|0> = 0`
//! exactly from `n = max(-χ(e_i, e_j), 0)` on.
//!
//! ```text
//! cargo run --example locality
//! ```

use coha_lab::fock::{locality_order_check, vertex_op_coeff, FockVector};
use coha_lab::qseries::{DimVector, WeightWindow};
use coha_lab::quiver::Quiver;

fn main() -> coha_lab::Result<()> {
    let win = WeightWindow::new(40);
    let q = Quiver::loops(2);
    let vac = FockVector::highest(DimVector::zero(1));
    let v = vertex_op_coeff(&q, 0, -1, &vac, win);
    for n in -2..=2 {
        println!("two-loop: 1({n:>2}) 1(-1)|0> = {}", vertex_op_coeff(&q, 0, n, &v, win));
    }
    println!();
    let q = Quiver::complete(3, 1, 2);
    for i in 0..3 {
        for j in 0..3 {
            println!(
                "three-vertex ({},{}): N = {:>2}, {:?}",
                i + 1,
                j + 1,
                q.locality(i, j)?,
                locality_order_check(&q, i, j, win)?
            );
        }
    }
    Ok(())
}
