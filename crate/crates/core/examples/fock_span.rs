//! The principal free vertex algebra inside the lattice Fock space, compared
//! with its closed-form character.
//!
//! ```text
//! cargo run --example fock_span
//! ```

use coha_lab::coha::free_vertex_character;
use coha_lab::fock::{span_principal, vertex_op_coeff, FockVector};
use coha_lab::qseries::{DimVector, WeightWindow};
use coha_lab::quiver::Quiver;

fn main() -> coha_lab::Result<()> {
    let q = Quiver::complete(2, 2, 1);
    let vac = FockVector::highest(DimVector::zero(2));
    let win = WeightWindow::new(100);
    let a = vertex_op_coeff(&q, 0, -1, &vac, win);
    println!("1(-1)|0>        = {a}");
    println!("2(-2) 1(-1)|0>  = {}", vertex_op_coeff(&q, 1, -2, &a, win));

    let d = DimVector::new(vec![2, 1]);
    let bottom = q.chi_self(&d);
    let win = WeightWindow::new(bottom + 10);
    let span = span_principal(&q, &d, win)?;
    let ch = free_vertex_character(&q, 3, win).coeff(&d);
    let sign = if q.parity(&d) { -1 } else { 1 };
    println!("\nd = {d}: twice-weight, span dimension, character coefficient");
    for tw in bottom..=bottom + 10 {
        let c = ch.coeff(tw).unwrap() * coha_lab::Rational::from_integer(sign.into());
        println!("  {tw:>4}  {:>3}  {c:>3}", span.get(tw));
    }
    Ok(())
}
