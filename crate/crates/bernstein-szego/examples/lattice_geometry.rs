//! Weight-lattice geometry: dominance order, saturated sets, convex-hull
//! cross-checks, and the depth condition that controls where the closed
//! polynomial formula applies.
//!
//!     cargo run --example lattice_geometry

use bernstein_szego::rootsys::build_root_system;
use bernstein_szego::weightlat::{
    dominance_leq, dominant_box, hull_matches_saturated, is_sufficiently_deep, lambda_tilde,
    min_pairing_long, min_pairing_short, saturated_set, verify_orbit_prop, verify_saturated_prop,
    verify_vertex_prop, Weight,
};
use bernstein_szego::weylgrp::WeylGroup;

fn main() {
    let rs = build_root_system("B2").expect("B2 exists");
    let wg = WeylGroup::enumerate(&rs);

    // Dominance: mu <= lam iff lam - mu is a nonnegative sum of positive
    // roots. Not a total order in general — but close to the origin it often
    // is; G2's lattice is so narrow that the first incomparable dominant
    // pair does not appear until coordinate 5.
    let box2 = dominant_box(rs.rank, 2);
    let mut comparable = 0;
    let mut incomparable = 0;
    for (i, a) in box2.iter().enumerate() {
        for b in &box2[i + 1..] {
            if dominance_leq(&rs, a, b).unwrap() || dominance_leq(&rs, b, a).unwrap() {
                comparable += 1;
            } else {
                incomparable += 1;
            }
        }
    }
    println!(
        "B2 dominant box (coords <= 2): {} weights, {} comparable pairs, {} incomparable",
        box2.len(),
        comparable,
        incomparable
    );

    // The saturated set of lam: all dominant weights below lam together with
    // their Weyl orbits. By the hull identity this equals the lattice points
    // of conv(W lam) in lam's root-lattice coset.
    let lam = Weight(vec![2, 2]);
    let sat = saturated_set(&rs, &wg, &lam).expect("dominant weight");
    println!(
        "\nsaturated set of {lam}: {} dominant members, {} lattice points total",
        sat.dominant_members.len(),
        sat.full_members.len()
    );
    for mu in &sat.dominant_members {
        println!("  dominant member {mu}");
    }
    let hull = hull_matches_saturated(&rs, &wg, &lam).expect("dominant weight");
    println!(
        "hull cross-check: {}",
        if hull.passed { "agrees" } else { "DISAGREES" }
    );

    // Depth: lam is sufficiently deep for (Ms, Ml) parameters when every
    // short-coroot pairing is >= Ms - 1 and every long one >= Ml - 1;
    // equivalently lam-tilde below stays dominant. Depth is where the closed
    // formula and the orthogonality statements are proven.
    println!("\ndepth on B2 at Ms = Ml = 2 (coords <= 2):");
    for lam in &box2 {
        let deep = is_sufficiently_deep(&rs, lam, 2, 2).unwrap();
        let lt = lambda_tilde(&rs, lam, 2, 2).unwrap();
        println!(
            "  {lam}: min short pairing {}, min long pairing {:?}, lambda~ = {lt} -> {}",
            min_pairing_short(&rs, lam).unwrap(),
            min_pairing_long(&rs, lam).unwrap(),
            if deep { "deep" } else { "shallow" }
        );
    }

    // The lattice property suites behind the verification CLI, one weight
    // each: saturation closure under root strings, orbit membership, and
    // vertex identification for strongly dominant weights.
    let cap = 1 << 20;
    for report in [
        verify_saturated_prop(&rs, &Weight(vec![2, 1]), cap).unwrap(),
        verify_orbit_prop(&rs, &Weight(vec![2, 1]), cap).unwrap(),
        verify_vertex_prop(&rs, &wg, &Weight(vec![1, 1]), 1, 1, cap).unwrap(),
    ] {
        println!(
            "\n{} on {} {}: scanned {}, {}",
            report.name,
            report.system,
            report.weight,
            report.scanned,
            if report.passed { "passed" } else { "FAILED" }
        );
    }
}
