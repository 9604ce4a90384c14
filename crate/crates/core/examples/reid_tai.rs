// Reid–Tai: the mld of a quotient singularity as a minimum over cyclic subgroups.
//
// `cargo run --example reid_tai`

use qmld::group_core::{closure, FiniteGroup, MonomialMatrix, WeightVector, DEFAULT_GROUP_CAP};
use qmld::lattice_mld::MonomialRIdeal;
use qmld::mld_engine::{mld_reid_tai, verify_consistency};
use qmld::rational::q;

fn binary_dihedral(m: u64) -> qmld::Result<FiniteGroup> {
    let a = MonomialMatrix::diagonal(vec![1, 2 * m - 1], 2 * m)?;
    let b = MonomialMatrix::from_one_based(&[2, 1], vec![0, m], 2 * m)?;
    closure(&[a, b], DEFAULT_GROUP_CAP)
}

pub fn run_example() -> qmld::Result<()> {
    for m in 2..=4 {
        let g = binary_dihedral(m)?;
        let v = mld_reid_tai(&g, &MonomialRIdeal::empty())?;
        println!("binary dihedral of order {}: {v} at {:?}", g.order(), v.witness.gamma);
    }

    let g = FiniteGroup::from_weight_vectors(&[WeightVector::new(5, vec![1, 2, 3])?], DEFAULT_GROUP_CAP)?;
    let a = MonomialRIdeal::single(vec![vec![5, 0, 0], vec![0, 5, 0], vec![0, 0, 5]], q(1, 5));
    let r = verify_consistency(&g, &a)?;
    for line in &r.provenance {
        println!("  {line}");
    }
    println!("1/5(1,2,3) with (x^5, y^5, z^5)^(1/5): {}", r.verdict);
    Ok(())
}

#[allow(dead_code)]
fn main() -> qmld::Result<()> {
    run_example()
}
