//! Catalan numbers three ways for the two-loop quiver with framing 1:
//! the framed Fock span, the shuffle-algebra quotient and the module
//! character. The grading refines them to q-Catalan numbers.
//!
//! ```text
//! cargo run --release --example catalan
//! ```

use coha_lab::dt::cross_check;
use coha_lab::fock::framed_weight_bound;
use coha_lab::qseries::{DimVector, WeightWindow};
use coha_lab::quiver::Quiver;

fn main() -> coha_lab::Result<()> {
    let q = Quiver::loops(2);
    let w = DimVector::new(vec![1]);
    for n in 0..=5u32 {
        let d = DimVector::new(vec![n]);
        let bound = framed_weight_bound(&q, &w, &d).max(q.chi_self(&d));
        let rep = cross_check(&q, &w, &d, WeightWindow::new(bound), 0..=bound - q.chi_self(&d))?;
        let graded: Vec<String> = rep
            .graded_dimension()
            .iter()
            .map(|(k, dim)| format!("{dim}·t^{k}"))
            .collect();
        println!(
            "n = {n}: total {:?}, agree = {}, graded: {}",
            rep.totals().1.unwrap_or(0),
            rep.all_agree(),
            graded.join(" + ")
        );
    }
    Ok(())
}
