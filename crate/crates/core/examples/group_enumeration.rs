// Enumerate a monomial matrix group and print its basic invariants.
//
// `cargo run --example group_enumeration`

use qmld::group_core::{closure, FiniteGroup, MonomialMatrix, WeightVector, DEFAULT_GROUP_CAP};
use qmld::rational::format_rational;

pub fn run_example() -> qmld::Result<()> {
    // Klein four-group acting diagonally on A^3.
    let klein = FiniteGroup::from_weight_vectors(
        &[WeightVector::new(2, vec![1, 1, 0])?, WeightVector::new(2, vec![0, 1, 1])?],
        DEFAULT_GROUP_CAP,
    )?;
    report("Klein four-group", &klein);
    assert_eq!(klein.order(), 4);
    assert!(klein.is_free_in_codim1());

    // Binary dihedral group of order 12: ζ_6-diagonal rotation and a twisted swap.
    let a = MonomialMatrix::diagonal(vec![1, 5], 6)?;
    let b = MonomialMatrix::from_one_based(&[2, 1], vec![0, 3], 6)?;
    let bd = closure(&[a, b], DEFAULT_GROUP_CAP)?;
    report("binary dihedral, order 12", &bd);
    assert_eq!(bd.order(), 12);

    // diag(-1, 1) fixes a hyperplane.
    let refl = closure(&[MonomialMatrix::diagonal(vec![1, 0], 2)?], DEFAULT_GROUP_CAP)?;
    report("reflection", &refl);
    assert!(!refl.is_free_in_codim1());
    Ok(())
}

fn report(name: &str, g: &FiniteGroup) {
    let mut ages: Vec<_> = g.elements().iter().map(|x| x.weights().age()).collect();
    ages.sort();
    let ages: Vec<String> = ages.iter().map(format_rational).collect();
    println!("{name}");
    println!("  order {}, {} conjugacy classes, abelian {}", g.order(), g.conjugacy_classes().len(), g.is_abelian());
    println!("  ages {}", ages.join(" "));
    match g.pseudo_reflection() {
        Some(p) => println!("  not free in codimension one: {p}"),
        None => println!("  free in codimension one"),
    }
}

#[allow(dead_code)]
fn main() -> qmld::Result<()> {
    run_example()
}
