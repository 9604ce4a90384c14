// The sector formula for quotient singularities: contact loci and their codimensions.
//
// `cargo run --example quotient_formula`

use qmld::contact_loci::{contact_codim, formula_mld_quot, ContactSpec};
use qmld::group_core::{FiniteGroup, WeightVector, DEFAULT_GROUP_CAP};
use qmld::lattice_mld::MonomialRIdeal;
use qmld::rational::q;

pub fn run_example() -> qmld::Result<()> {
    // Contact loci in the sector 1/3(1,2): order ≥ 2 along x1*x2, with the
    // origin cut out by the invariants x1^3, x2^3.
    let w = WeightVector::new(3, vec![1, 2])?;
    let spec = ContactSpec::with_maximal_ideal(2, vec![vec![3, 0], vec![0, 3]]).at_least(vec![vec![1, 1]], 2);
    println!("codim Cont^(>=2)(x1*x2) in sector {w}: {:?}", contact_codim(&spec, &w)?);

    let g = FiniteGroup::from_weight_vectors(&[WeightVector::new(3, vec![1, 1])?], DEFAULT_GROUP_CAP)?;
    let m = formula_mld_quot(&g, &MonomialRIdeal::empty())?;
    println!("1/3(1,1): {m}, sector {:?}", m.witness.gamma);
    assert_eq!(m.kind.finite(), Some(&q(2, 3)));

    for delta in [q(0, 1), q(1, 2), q(1, 1), q(3, 2)] {
        let a = MonomialRIdeal::single(vec![vec![2, 0], vec![0, 2]], delta.clone());
        let g = FiniteGroup::from_weight_vectors(&[WeightVector::new(2, vec![1, 1])?], DEFAULT_GROUP_CAP)?;
        let m = formula_mld_quot(&g, &a)?;
        println!("1/2(1,1), (x1^2, x2^2)^{delta}: {m}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> qmld::Result<()> {
    run_example()
}
