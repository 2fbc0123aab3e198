//! The one-parameter sextic family: which members satisfy the
//! D4-plus-three-A3 conditions.
//!
//! ```bash
//! cargo run --example family_conditions
//! ```

use k3lattice::curvesing::{check_conditions, curve_catalog, CatalogCurve, ProjPoint};
use num_bigint::BigInt;
use num_rational::BigRational;

fn main() {
    let p = [
        ProjPoint::from_ints([1, 0, 0]).unwrap(),
        ProjPoint::from_ints([0, 1, 0]).unwrap(),
        ProjPoint::from_ints([0, 0, 1]).unwrap(),
    ];
    let q = ProjPoint::from_ints([1, 1, 1]).unwrap();
    for mu in [1i64, 2, 3, -1, -2, -4] {
        let f = curve_catalog(&CatalogCurve::Dmu(BigRational::from(BigInt::from(mu)))).unwrap();
        let rep = check_conditions(&f, &p, &q).unwrap();
        println!(
            "mu = {mu:>2}: (i) {} (ii) {} (iii) {} -> {}",
            rep.condition_i,
            rep.condition_ii,
            rep.condition_iii,
            if rep.passes() { "member of the family" } else { "excluded" }
        );
        if !rep.passes() {
            println!(
                "         types at the vertices: {:?} (the mu = -4 member is the discriminant-7 sextic)",
                rep.labels_at_p.iter().map(|l| l.to_string()).collect::<Vec<_>>()
            );
        }
    }
}
