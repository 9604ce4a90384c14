// Sample the set of mlds of cyclic quotient singularities and cross-check by enumeration.
//
// `cargo run --example acc_sampling`

use qmld::mld_engine::{acc_sample, consistency_sweep};
use qmld::rational::format_rational;

pub fn run_example() -> qmld::Result<()> {
    let r = acc_sample(2, 12)?;
    println!("{} cyclic groups in dimension 2 with order <= 12", r.groups.len());
    let values: Vec<String> = r.values.iter().map(format_rational).collect();
    println!("values: {}", values.join(" "));
    println!("oracle match {}, all in (0, 2]: {}", r.oracle_match, r.in_range);
    assert!(r.oracle_match && r.in_range);

    let r = acc_sample(3, 8)?;
    println!("dimension 3, order <= 8: {} groups, {} distinct values, smallest {}", r.groups.len(), r.values.len(), format_rational(&r.values[0]));

    let sweep = consistency_sweep(7, 20)?;
    println!("random consistency sweep: {}", sweep.to_json());
    assert!(sweep.mismatches.is_empty());
    Ok(())
}

#[allow(dead_code)]
fn main() -> qmld::Result<()> {
    run_example()
}
