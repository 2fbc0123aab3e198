//! Exact singularity analysis of the three branch sextics.
//!
//! ```bash
//! cargo run --example sextic_singularities
//! ```

use k3lattice::curvesing::{
    classify_at, curve_catalog, singular_support_check, CatalogCurve, ProjPoint,
};

fn pt(x: i64, y: i64, z: i64) -> ProjPoint {
    ProjPoint::from_ints([x, y, z]).unwrap()
}

fn main() {
    let cases: Vec<(&str, CatalogCurve, Vec<ProjPoint>)> = vec![
        (
            "discriminant 7 (irreducible sextic)",
            CatalogCurve::C7,
            vec![pt(1, 1, 1), pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)],
        ),
        (
            "discriminant 3 (three lines + cubic)",
            CatalogCurve::C3,
            vec![pt(1, 1, 1), pt(1, 1, -2), pt(-2, 1, 1), pt(1, -2, 1)],
        ),
        (
            "discriminant 4 (six lines)",
            CatalogCurve::C4,
            vec![
                pt(1, 1, 1),
                pt(1, 0, 0),
                pt(0, 1, 0),
                pt(0, 0, 1),
                pt(0, 1, 1),
                pt(1, 0, 1),
                pt(1, 1, 0),
            ],
        ),
    ];
    for (name, curve, declared) in cases {
        let f = curve_catalog(&curve).unwrap();
        println!("{name}:");
        for p in &declared {
            let rep = classify_at(&f, p).unwrap();
            println!(
                "  {p}: multiplicity {}, Milnor {}, cone pattern {:?} -> {}",
                rep.multiplicity, rep.milnor, rep.pattern, rep.label
            );
        }
        let verdict = singular_support_check(&f, &declared);
        println!("  singular support: {verdict}\n");
    }
}
