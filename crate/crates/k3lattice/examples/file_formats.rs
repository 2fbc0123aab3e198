//! Emit the canonical JSON documents for lattices, embeddings, curves and
//! fiber configurations. With an output directory argument the documents are
//! written as files (this is how the shipped fixtures were produced):
//!
//! ```bash
//! cargo run --example file_formats -- crates/k3lattice/fixtures
//! ```

use k3lattice::cli::formats::{
    config_to_doc, curve_to_doc, embedding_to_doc, emit, lattice_to_doc,
};
use k3lattice::curvesing::{curve_catalog, CatalogCurve};
use k3lattice::fibrations::FiberConfiguration;
use k3lattice::lattice::{catalog, catalog_sum, CatalogName, Embedding};

fn main() {
    let ns = catalog_sum(&[
        CatalogName::U,
        CatalogName::A(5),
        CatalogName::A(5),
        CatalogName::A(5),
    ])
    .unwrap();
    let e8 = catalog(CatalogName::E(8)).unwrap();
    let a5_chain = Embedding::coordinate_sub(e8, &[0, 2, 3, 4, 5]).unwrap();
    let c7 = curve_catalog(&CatalogCurve::C7).unwrap();
    let cfg = FiberConfiguration::parse("I7,I7,I7,I1,I1,I1").unwrap();

    let docs: Vec<(&str, String)> = vec![
        ("lattice_u_a5_cubed.json", emit(&lattice_to_doc(&ns))),
        ("embedding_a5_in_e8.json", emit(&embedding_to_doc(&a5_chain))),
        ("curve_c7.json", emit(&curve_to_doc(&c7))),
        ("config_x7.json", emit(&config_to_doc(&cfg))),
    ];

    match std::env::args().nth(1) {
        Some(dir) => {
            for (name, text) in &docs {
                let path = std::path::Path::new(&dir).join(name);
                std::fs::write(&path, text).expect("writable output directory");
                println!("wrote {}", path.display());
            }
        }
        None => {
            for (name, text) in &docs {
                println!("--- {name} ---");
                print!("{text}");
            }
        }
    }
}
