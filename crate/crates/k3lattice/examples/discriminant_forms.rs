//! Discriminant quadratic forms, the gluing map over a unimodular ambient,
//! and even overlattices from isotropic classes.
//!
//! ```bash
//! cargo run --example discriminant_forms
//! ```

use k3lattice::discform::{
    are_isomorphic, disc_form_of, glue_map, overlattice_from_isotropic, FiniteQuadraticForm,
};
use k3lattice::lattice::{catalog, catalog_sum, CatalogName, Embedding};
use num_bigint::BigInt;
use num_traits::Zero;

fn main() {
    // q_{A5} on Z/6 and its anti-isometric partner q_{A2+A1}
    let a5 = disc_form_of(&catalog(CatalogName::A(5)).unwrap()).unwrap();
    println!("A_( A5 ) = Z/{}, q(g) = {} (mod 2Z)", a5.orders()[0], a5.q_values()[0]);
    let comp = disc_form_of(&catalog_sum(&[CatalogName::A(2), CatalogName::A(1)]).unwrap()).unwrap();
    let witness = are_isomorphic(&a5, &comp.negate()).unwrap();
    println!("q_(A5) = -q_(A2+A1): witness {witness:?}");

    let triple = FiniteQuadraticForm::direct_sum(&[&a5, &a5, &a5]).unwrap();
    println!("q_(A5)^3 has orders {:?}", triple.orders().iter().map(|d| d.to_string()).collect::<Vec<_>>());

    // glue an A5 sub-diagram inside E8: the subgroup H has order 6 and the
    // induced map is an anti-isometry row by row
    let e8 = catalog(CatalogName::E(8)).unwrap();
    let sub = Embedding::coordinate_sub(e8, &[0, 2, 3, 4, 5]).unwrap();
    let g = glue_map(&sub).unwrap();
    println!("\nA5 inside E8: |H| = {}, map table:", g.h_reps.len());
    for (s, t) in &g.map_table {
        println!("  A_S{s:?} -> A_T{t:?}");
    }

    // the index-7 even overlattice of U+A6^3 has determinant 7
    let l = catalog_sum(&[
        CatalogName::U,
        CatalogName::A(6),
        CatalogName::A(6),
        CatalogName::A(6),
    ])
    .unwrap();
    let f = disc_form_of(&l).unwrap();
    let gen = f
        .elements()
        .into_iter()
        .find(|e| f.element_order(e) == BigInt::from(7) && f.q_of(e).is_zero())
        .unwrap();
    println!("\nisotropic order-7 class of U+A6^3: {gen:?}");
    let over = overlattice_from_isotropic(&l, &[gen]).unwrap();
    let (index, law) = over.inclusion.index_and_check().unwrap();
    println!(
        "overlattice: |det| {} (from {}), index {index}, determinant law holds: {law}",
        over.lattice.abs_det(),
        l.abs_det()
    );
}
