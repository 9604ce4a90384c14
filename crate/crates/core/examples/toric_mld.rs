// Minimal log discrepancies of toric quotient singularities by lattice minimization.
//
// `cargo run --example toric_mld`

use qmld::group_core::WeightVector;
use qmld::lattice_mld::{brute_force_mld, cyclic, mld_origin_toric, MonomialRIdeal};
use qmld::rational::{format_rational, q, qi};

pub fn run_example() -> qmld::Result<()> {
    let none = MonomialRIdeal::empty();
    for (d, e) in [(2, vec![1, 1]), (3, vec![1, 1]), (5, vec![1, 2]), (7, vec![1, 3, 5])] {
        let w = cyclic(d, &e);
        let m = mld_origin_toric(std::slice::from_ref(&w), &none)?;
        let oracle = brute_force_mld(std::slice::from_ref(&w), &none, 3)?.map(|(v, _)| v);
        let point: Vec<String> = m.witness.point.iter().flatten().map(format_rational).collect();
        let oracle = oracle.map_or("none".to_string(), |v| format_rational(&v));
        println!("{w}: {m} at ({}), enumeration {oracle}", point.join(", "));
    }

    // A pair: 1/2(1,1) with (x1 x2)^{1/4}.
    let pair = MonomialRIdeal::single(vec![vec![1, 1]], q(1, 4));
    let m = mld_origin_toric(&[cyclic(2, &[1, 1])], &pair)?;
    println!("1/2(1,1), (x1*x2)^(1/4): {m}");
    assert_eq!(m.kind.finite(), Some(&q(3, 4)));

    // x1^3 on A^2 is not log canonical: the objective is unbounded below.
    let bad = MonomialRIdeal::single(vec![vec![1, 0]], qi(3));
    let m = mld_origin_toric(&[WeightVector::identity(2)], &bad)?;
    println!("A^2, x1^3: {m}, ray {:?}", m.witness.ray);
    assert!(m.is_minus_infinity());
    Ok(())
}

#[allow(dead_code)]
fn main() -> qmld::Result<()> {
    run_example()
}
