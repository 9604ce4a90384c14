// Hyperquotient mld via twisted jets, and inversion of adjunction checks.
//
// `cargo run --release --example hyperquotient_pia`

use qmld::group_core::{FiniteGroup, WeightVector, DEFAULT_GROUP_CAP};
use qmld::lattice_mld::{cyclic, mld_origin_toric, MonomialRIdeal};
use qmld::mld_engine::{mld_hyperquot, verify_pia, HyperquotOptions, HyperquotientInstance};
use qmld::rational::q;
use qmld::twist::Polynomial;

pub fn run_example() -> qmld::Result<()> {
    let opts = HyperquotOptions::default();

    // Smooth divisor x1 = 0 in A^2 with (x1, x2)^δ.
    for delta in [q(0, 1), q(1, 4), q(1, 2), q(3, 4)] {
        let inst = HyperquotientInstance {
            group: FiniteGroup::trivial(2, 1),
            equations: vec![Polynomial::parse("x1", 2)?],
            ideal: MonomialRIdeal::single(vec![vec![1, 0], vec![0, 1]], delta.clone()),
        };
        let r = verify_pia(&inst, &opts)?;
        println!("delta {delta}: {} vs {}: {}", r.lhs, r.rhs, r.verdict);
    }

    // The quadric cone x1² + x2² + x3² in 1/2(1,1,1) is the A_1 singularity mod ±1, i.e. 1/4(1,1).
    let g = FiniteGroup::from_weight_vectors(&[WeightVector::new(2, vec![1, 1, 1])?], DEFAULT_GROUP_CAP)?;
    let inst = HyperquotientInstance {
        group: g,
        equations: vec![Polynomial::parse("x1^2 + x2^2 + x3^2", 3)?],
        ideal: MonomialRIdeal::empty(),
    };
    let m = mld_hyperquot(&inst, &opts)?;
    let toric = mld_origin_toric(&[cyclic(4, &[1, 1])], &MonomialRIdeal::empty())?;
    println!("quadric cone / (1/2(1,1,1)): {m}, toric 1/4(1,1): {toric}");
    println!("witness: {}", m.witness.to_json());
    assert_eq!(m.kind, toric.kind);

    // The twisted cubic sectors carry no arcs of finite Jacobian order.
    let g = FiniteGroup::from_weight_vectors(&[WeightVector::new(3, vec![0, 1, 2])?], DEFAULT_GROUP_CAP)?;
    let inst = HyperquotientInstance {
        group: g,
        equations: vec![Polynomial::parse("x1^3 + x2^3 + x3^3", 3)?],
        ideal: MonomialRIdeal::empty(),
    };
    let m = mld_hyperquot(&inst, &opts)?;
    println!("cubic in 1/3(0,1,2): {m}");
    for note in &m.witness.notes {
        println!("  {note}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> qmld::Result<()> {
    run_example()
}
