//! Products in the cohomological Hall algebra realised as a shuffle algebra
//! of symmetric polynomials.
//!
//! ```text
//! cargo run --example shuffle_product
//! ```

use coha_lab::coha::{monomial_basis, CohaDegree, ShuffleAlgebra, SymPoly};
use coha_lab::qseries::DimVector;
use coha_lab::quiver::Quiver;

fn main() -> coha_lab::Result<()> {
    let one = DimVector::new(vec![1]);
    for (name, q) in [
        ("Jordan", Quiver::jordan()),
        ("no-loop", Quiver::loops(0)),
        ("two-loop", Quiver::loops(2)),
    ] {
        let alg = ShuffleAlgebra::new(q.clone());
        let unit = SymPoly::one(one.clone());
        let x = SymPoly::orbit(one.clone(), vec![vec![1]]);
        let xx = alg.product(&x, &unit)?;
        println!(
            "{name:>8}:  1*1 = {}   x*1 = {}   1*x = {}",
            alg.product(&unit, &unit)?,
            xx,
            alg.product(&unit, &x)?
        );
        if let Some(p) = xx.homogeneous_degree() {
            let k = CohaDegree::from_poly_degree(&q, DimVector::new(vec![2]), p);
            println!("          x*1 lives in cohomological degree {}", k.degree);
        }
    }

    // (f*g)*h = f*(g*h) on a two-vertex quiver, with a pole-free kernel
    let q = Quiver::complete(2, 2, 1);
    let alg = ShuffleAlgebra::new(q.clone());
    let a = &monomial_basis(&q, &DimVector::new(vec![1, 0]), 2)[0];
    let b = &monomial_basis(&q, &DimVector::new(vec![0, 1]), 0)[0];
    let c = &monomial_basis(&q, &DimVector::new(vec![1, 0]), 0)[0];
    let left = alg.product(&alg.product(a, b)?, c)?;
    let right = alg.product(a, &alg.product(b, c)?)?;
    println!("two-vertex (a*b)*c = {left}");
    println!("associative: {}", left == right);
    Ok(())
}
