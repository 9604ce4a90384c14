// Jet schemes and cylinder codimensions with Jacobian-order strata.
//
// `cargo run --example jet_schemes`

use qmld::group_core::WeightVector;
use qmld::jet_schemes::{cylinder_codim_estimate, jet_dimension, JacobianBound, JetContactSpec};
use qmld::poly_engine::DEFAULT_GROEBNER_BUDGET;
use qmld::twist::{build_twisted_scheme, Polynomial};

fn coords(n: usize) -> Vec<Polynomial> {
    (1..=n).map(|i| Polynomial::parse(&format!("x{i}"), n).unwrap()).collect()
}

pub fn run_example() -> qmld::Result<()> {
    let plane = build_twisted_scheme(&[], &WeightVector::identity(2))?;
    for m in 0..=3 {
        println!("A^2: dim of {m}-jets = {}", jet_dimension(&plane, m, DEFAULT_GROEBNER_BUDGET)?);
    }

    // Arcs through the origin with order ≥ 2 along x1 on A^2.
    let spec = JetContactSpec { at_least: vec![(vec![Polynomial::parse("x1", 2)?], 2)], jacobian: None };
    let est = cylinder_codim_estimate(&plane, &spec, &coords(2), 6, DEFAULT_GROEBNER_BUDGET)?;
    println!("A^2, Cont(x1) >= 2 at 0: codim {:?}, stabilized {}, levels {:?}", est.lo, est.stabilized, est.levels_probed());

    // Node x1 x2 = 0: arcs at the origin split by Jacobian order.
    let node = build_twisted_scheme(&[Polynomial::parse("x1*x2", 2)?], &WeightVector::identity(2))?;
    let spec = JetContactSpec { at_least: vec![], jacobian: Some(JacobianBound::AtMost(2)) };
    let est = cylinder_codim_estimate(&node, &spec, &coords(2), 6, DEFAULT_GROEBNER_BUDGET)?;
    for o in &est.per_order {
        println!("node, Jacobian order {}: codim {:?}, empty {}", o.jacobian_order, o.codim(), o.empty);
    }

    // Twisted cubic x1^3 + t x2^3 + t^2 x3^3: every finite Jacobian stratum is empty.
    let cubic = Polynomial::parse("x1^3 + x2^3 + x3^3", 3)?;
    let s = build_twisted_scheme(&[cubic], &WeightVector::new(3, vec![0, 1, 2])?)?;
    let m_x = ["x1^3", "t*x2^3", "t^2*x3^3"].iter().map(|p| Polynomial::parse(p, 3)).collect::<qmld::Result<Vec<_>>>()?;
    let spec = JetContactSpec { at_least: vec![], jacobian: Some(JacobianBound::AtMost(2)) };
    let est = cylinder_codim_estimate(&s, &spec, &m_x, 6, DEFAULT_GROEBNER_BUDGET)?;
    println!("twisted cubic, Jacobian order <= 2: empty {}", est.empty);
    assert!(est.empty);
    Ok(())
}

#[allow(dead_code)]
fn main() -> qmld::Result<()> {
    run_example()
}
