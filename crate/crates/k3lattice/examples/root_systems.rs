//! (-2)-root enumeration, reflections and ADE classification.
//!
//! ```bash
//! cargo run --example root_systems
//! ```

use k3lattice::fibrations::{classify_root_lattice, enumerate_roots, reflection, DynkinType};
use k3lattice::lattice::{catalog, CatalogName, Embedding, Lattice};
use k3lattice::exactmat::IntMatrix;
use num_bigint::BigInt;

fn main() {
    for t in [DynkinType::A(2), DynkinType::A(5), DynkinType::D(4), DynkinType::E6, DynkinType::E8] {
        let roots = enumerate_roots(&t.lattice()).unwrap();
        println!("{t}: {} roots (formula says {})", roots.len(), t.root_count());
    }

    // reflections generate a group preserving the form
    let a2 = catalog(CatalogName::A(2)).unwrap();
    let e1 = vec![BigInt::from(1), BigInt::from(0)];
    let e2 = vec![BigInt::from(0), BigInt::from(1)];
    println!("\ns_e1(e1) = {:?}", reflection(&a2, &e1, &e1).unwrap());
    println!("s_e1(e2) = {:?}", reflection(&a2, &e1, &e2).unwrap());

    // the complement of an A5 chain inside E8 is A2 + A1
    let e8 = catalog(CatalogName::E(8)).unwrap();
    let sub = Embedding::coordinate_sub(e8, &[0, 2, 3, 4, 5]).unwrap();
    let comp = sub.orthogonal_complement().unwrap().induced_lattice();
    let dec = classify_root_lattice(&comp).unwrap();
    println!(
        "\ncomplement of A5 in E8: rank {}, |det| {}, decomposition {:?} (generated by roots: {})",
        comp.rank(),
        comp.abs_det(),
        dec.components.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        dec.generated_by_roots
    );

    // a negative definite lattice with no roots at all
    let diag6 = Lattice::new(IntMatrix::from_i64_rows(&[&[-6, 0, 0], &[0, -6, 0], &[0, 0, -6]]))
        .unwrap();
    let dec = classify_root_lattice(&diag6).unwrap();
    println!(
        "diag(-6,-6,-6): {} roots, root span rank {}",
        enumerate_roots(&diag6).unwrap().len(),
        dec.root_span_rank
    );
}
