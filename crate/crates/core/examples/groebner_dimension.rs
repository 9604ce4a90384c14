// Gröbner bases and Krull dimension over the rationals.
//
// `cargo run --example groebner_dimension`

use num_bigint::BigInt;
use qmld::poly_engine::{IdealBasis, Mono, MonomialOrder, Poly};

fn poly(terms: &[(&[u32], i64)]) -> Poly {
    Poly::from_terms(
        terms.iter().map(|(e, c)| (Mono::from_exponents(e), BigInt::from(*c))).collect(),
        &MonomialOrder::GrevLex,
    )
}

pub fn run_example() -> qmld::Result<()> {
    // Twisted cubic: y0 y2 − y1², y1 y3 − y2², y0 y3 − y1 y2.
    let gens = vec![
        poly(&[(&[1, 0, 1, 0], 1), (&[0, 2, 0, 0], -1)]),
        poly(&[(&[0, 1, 0, 1], 1), (&[0, 0, 2, 0], -1)]),
        poly(&[(&[1, 0, 0, 1], 1), (&[0, 1, 1, 0], -1)]),
    ];
    let mut ideal = IdealBasis::new(4, MonomialOrder::GrevLex, gens)?;
    let basis = ideal.groebner(10_000)?.to_vec();
    println!("reduced basis has {} elements:", basis.len());
    for g in &basis {
        println!("  {:?}", g);
    }
    let dim = ideal.dimension(10_000)?;
    println!("affine cone dimension {dim}");
    assert_eq!(dim, 2);

    let member = poly(&[(&[0, 1, 0, 2], 1), (&[0, 0, 2, 1], -1)]);
    println!("y1 y3² − y2² y3 in ideal: {}", ideal.contains(&member, 10_000)?);

    // (y0 y1) : y0^∞ = (y1)
    let xy = IdealBasis::new(2, MonomialOrder::GrevLex, vec![poly(&[(&[1, 1], 1)])])?;
    let sat = xy.saturate_by_var(0, 1_000)?;
    println!("(y0*y1) : y0^inf = {:?}", sat.generators());
    Ok(())
}

#[allow(dead_code)]
fn main() -> qmld::Result<()> {
    run_example()
}
