//! Weyl groups as explicit matrix groups: orbits, stabilizers, and the
//! two-variable length generating function (Poincare series), enumerated
//! element-by-element and compared against its closed product form.
//!
//!     cargo run --example weyl_group_poincare

use bernstein_szego::rational::{rat_str, ratio};
use bernstein_szego::rootsys::build_root_system;
use bernstein_szego::weightlat::Weight;
use bernstein_szego::weylgrp::{poincare_enumerated, poincare_product, WeylGroup};

fn main() {
    let rs = build_root_system("G2").expect("G2 exists");
    let wg = WeylGroup::enumerate(&rs);
    println!("G2: |W| = {}", wg.order());
    println!(
        "longest element: {} short + {} long inversions",
        wg.longest_element().len_short,
        wg.longest_element().len_long
    );

    // Orbit sizes times stabilizer orders always recover |W|.
    println!("\norbit / stabilizer on G2:");
    for lam in [Weight(vec![1, 1]), Weight(vec![1, 0]), Weight(vec![0, 0])] {
        let orbit = wg.orbit(&lam);
        let stab = wg.stabilizer(&lam);
        println!(
            "  {}: orbit {}, stabilizer {} ({} * {} = {})",
            lam,
            orbit.len(),
            stab.len(),
            orbit.len(),
            stab.len(),
            orbit.len() * stab.len()
        );
    }

    // The Poincare series of the stabilizer of a dominant weight, with one
    // variable per root length class, has a closed product form over the
    // positive roots orthogonal to the weight. The leading coefficients of
    // the polynomials downstream are exactly these series evaluated at the
    // parameter products.
    let ts = ratio(1, 2);
    let tl = ratio(1, 3);
    println!("\nstabilizer Poincare series at ts = 1/2, tl = 1/3:");
    for label in ["A2", "B2", "G2", "B3"] {
        let rs = build_root_system(label).expect("fixed system list");
        let wg = WeylGroup::enumerate(&rs);
        for lam in [
            Weight(vec![0; rs.rank]),
            Weight({
                let mut v = vec![0; rs.rank];
                v[0] = 1;
                v
            }),
        ] {
            let stab = wg.stabilizer(&lam);
            let by_sum = poincare_enumerated(stab.iter().map(|&i| wg.element(i)), &ts, &tl);
            let by_product = poincare_product(&rs, &lam, &ts, &tl).expect("dominant weight");
            assert_eq!(by_sum, by_product);
            println!(
                "  {label} W_{}: {} elements, series = {}",
                lam,
                stab.len(),
                rat_str(&by_sum)
            );
        }
    }

    // At ts = tl = 1 the series counts elements. The product form has a
    // removable singularity there (its factors vanish pairwise), so the
    // enumerated sum is the honest evaluation.
    let one = ratio(1, 1);
    let rs = build_root_system("F4").expect("F4 exists");
    let wg = WeylGroup::enumerate(&rs);
    let full = poincare_enumerated(wg.elements(), &one, &one);
    println!(
        "\nF4 full group: series at t = 1 counts elements: {}",
        rat_str(&full)
    );
    assert_eq!(full, ratio(wg.order() as i64, 1));
}
