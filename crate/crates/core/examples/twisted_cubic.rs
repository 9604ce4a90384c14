// Twist the Fermat cubic into the sector 1/3(0,1,2) and look at its jets.
//
// `cargo run --example twisted_cubic`

use qmld::group_core::WeightVector;
use qmld::jet_schemes::{jacobian_ideal, jet_dimension, jet_ideal};
use qmld::poly_engine::DEFAULT_GROEBNER_BUDGET;
use qmld::twist::{build_twisted_scheme, twist_poly, Polynomial};

pub fn run_example() -> qmld::Result<()> {
    let cubic = Polynomial::parse("x1^3 + x2^3 + x3^3", 3)?;
    let gamma = WeightVector::new(3, vec![0, 1, 2])?;
    let twisted = twist_poly(&cubic, &gamma)?;
    println!("twist of {cubic} by {gamma}: {twisted}");
    assert_eq!(twisted.to_string(), "x1^3 + t*x2^3 + t^2*x3^3");
    println!("at t = 1: {}", twisted.at_t_one());

    let s = build_twisted_scheme(&[cubic], &gamma)?;
    println!("relative dimension {}", s.rel_dim);
    for p in jacobian_ideal(&s) {
        println!("  jacobian generator {p}");
    }
    let j1 = jet_ideal(&s, 1);
    for k in 0..j1.generators.len() {
        println!("  1-jet equation {}", j1.render(k));
    }
    for m in 0..=2 {
        println!("dim of {m}-jets: {}", jet_dimension(&s, m, DEFAULT_GROEBNER_BUDGET)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> qmld::Result<()> {
    run_example()
}
