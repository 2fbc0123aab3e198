//! Catalog lattices, direct sums and exact matrix invariants.
//!
//! ```bash
//! cargo run --example lattice_basics
//! ```

use k3lattice::exactmat::{snf, IntMatrix};
use k3lattice::lattice::{catalog, catalog_sum, rescale, CatalogName};
use num_bigint::BigInt;

fn main() {
    for name in [
        CatalogName::U,
        CatalogName::A(5),
        CatalogName::A(6),
        CatalogName::D(6),
        CatalogName::E(6),
        CatalogName::E(7),
        CatalogName::E(8),
    ] {
        let l = catalog(name).unwrap();
        println!(
            "{:<4} rank {:>2}  det {:>4}  signature {:?}  even: {}",
            name.to_string(),
            l.rank(),
            l.det(),
            l.signature(),
            l.is_even()
        );
    }

    let k3 = catalog_sum(&[
        CatalogName::U,
        CatalogName::U,
        CatalogName::U,
        CatalogName::E(8),
        CatalogName::E(8),
    ])
    .unwrap();
    println!(
        "\nU^3+E8^2: rank {}, |det| {}, signature {:?}",
        k3.rank(),
        k3.abs_det(),
        k3.signature()
    );

    let ns = catalog_sum(&[
        CatalogName::U,
        CatalogName::A(5),
        CatalogName::A(5),
        CatalogName::A(5),
    ])
    .unwrap();
    println!("U+A5^3:   rank {}, |det| {} = 6^3", ns.rank(), ns.abs_det());

    let u2 = rescale(&catalog(CatalogName::U).unwrap(), &BigInt::from(2)).unwrap();
    println!("U(2):     |det| {}", u2.abs_det());

    // Smith normal form with its transform identity
    let a = IntMatrix::from_i64_rows(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
    let s = snf(&a);
    println!("\nSNF of a 3x3 example: invariant factors {:?}", s.invariant_factors());
    let lhs = s.left.mul(&a).unwrap().mul(&s.right).unwrap();
    println!("left·A·right is diagonal: {}", (0..3).all(|i| (0..3).all(|j| i == j || lhs.at(i, j) == &BigInt::from(0))));
}
