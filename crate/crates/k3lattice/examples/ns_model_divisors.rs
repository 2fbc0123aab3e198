//! The U+A5^3 model: named divisor classes, the IV*-shaped isotropic
//! divisor, and the rank-3 orthogonal complement with Gram diag(-6,-6,-6).
//!
//! ```bash
//! cargo run --example ns_model_divisors
//! ```

use k3lattice::fibrations::{build_ns_model, section8_analysis, verify_model};

fn main() {
    let m = build_ns_model();
    let report = verify_model(&m);
    println!(
        "model identities: {}/{} hold",
        report.checks.iter().filter(|c| c.ok).count(),
        report.checks.len()
    );
    println!("E_IV*^2 = {}", m.norm(&m.iv_star_divisor()));
    println!("A^2 = {}", m.norm(&m.a_divisor()));
    println!("<A, Theta^2> = {}", m.pairing(&m.a_divisor(), &m.theta_mix(2)));

    for include_section in [false, true] {
        let r = section8_analysis(&m, include_section);
        println!(
            "\ngenerator list {} the section:",
            if include_section { "with" } else { "without" }
        );
        println!("  rank(S) = {}, rank(S-perp) = {}, signature {:?}", r.rank_s, r.comp_rank, r.comp_signature);
        match r.comp_root_count {
            Some(n) => println!("  (-2)-roots in S-perp: {n}"),
            None => println!("  S-perp is indefinite; root enumeration does not apply"),
        }
        if let Some(spans) = r.named_span_is_comp {
            println!("  A, Theta^2, Theta^3 span S-perp: {spans}");
        }
        for (label, ratio, sq) in &r.ratio_checks {
            println!("  d(NS)/d({label}) = {ratio} -> rational square: {sq}");
        }
    }
}
