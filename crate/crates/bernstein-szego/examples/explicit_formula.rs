//! The polynomials themselves: the closed character-basis formula on deep
//! weights, the monomial expansion, leading coefficients as stabilizer
//! Poincare series, and exact norms.
//!
//!     cargo run --example explicit_formula

use bernstein_szego::bszcore::{
    build_p, monic_p, normalization_constant, BszParams, DEFAULT_EXPANSION_CAP,
};
use bernstein_szego::rational::{rat_str, ratio};
use bernstein_szego::rootsys::build_root_system;
use bernstein_szego::symalg::CharTable;
use bernstein_szego::weightlat::{is_sufficiently_deep, Weight};
use bernstein_szego::weylgrp::WeylGroup;

fn main() {
    let rs = build_root_system("B2").expect("B2 exists");
    let wg = WeylGroup::enumerate(&rs);
    let mut table = CharTable::new();
    // Two parameters on the short class, one on the long.
    let params = BszParams::new(&rs, vec![ratio(1, 2), ratio(-1, 3)], vec![ratio(2, 5)])
        .expect("parameters in domain");

    // [2, 2] is sufficiently deep for (Ms, Ml) = (2, 1): every coroot
    // pairing clears the depth threshold, so the closed formula applies
    // and P is triangular with an explicit leading coefficient N.
    let lam = Weight(vec![2, 2]);
    assert!(is_sufficiently_deep(&rs, &lam, params.ms(), params.ml()).unwrap());
    let p =
        build_p(&rs, &wg, &mut table, &lam, &params, DEFAULT_EXPANSION_CAP).expect("within cap");
    println!("P_{lam} on B2, ts = [1/2, -1/3], tl = [2/5]");
    println!("deep: {}, triangular: {}", p.deep, p.triangular);
    println!("character expansion:");
    for (mu, c) in &p.char_exp {
        println!("  chi_{mu} x {}", rat_str(c));
    }
    println!("monomial expansion:");
    for (mu, c) in &p.mono_exp {
        println!("  m_{mu} x {}", rat_str(c));
    }

    // The leading coefficient doubles as the squared norm of the monic
    // polynomial; both come from the one normalization constant.
    let n = normalization_constant(&rs, &lam, &params).expect("deep weight");
    println!("N_{lam} = {}", rat_str(&n));
    assert_eq!(p.mono_exp[&lam], n);

    let monic = monic_p(&rs, &wg, &mut table, &lam, &params, DEFAULT_EXPANSION_CAP)
        .expect("nonzero leading coefficient");
    println!(
        "monic leading coefficient: {}",
        rat_str(&monic.mono_exp[&lam])
    );

    // Away from the deep range the same formula still produces a symmetric
    // polynomial, but triangularity can genuinely fail; the builder records
    // this instead of pretending otherwise. With two short parameters the
    // origin weight on A1 collapses onto a higher monomial.
    let a1 = build_root_system("A1").expect("A1 exists");
    let wg1 = WeylGroup::enumerate(&a1);
    let mut table1 = CharTable::new();
    let shallow_params =
        BszParams::new(&a1, vec![ratio(1, 2), ratio(1, 3)], vec![]).expect("parameters in domain");
    let zero = Weight(vec![0]);
    let q = build_p(
        &a1,
        &wg1,
        &mut table1,
        &zero,
        &shallow_params,
        DEFAULT_EXPANSION_CAP,
    )
    .expect("within cap");
    println!("\nP_{zero} on A1 with ts = [1/2, 1/3] (shallow):");
    println!("deep: {}, triangular: {}", q.deep, q.triangular);
    for (mu, c) in &q.mono_exp {
        println!("  m_{mu} x {}", rat_str(c));
    }
    // No norm is claimed outside the proven range.
    assert!(q.norm_const.is_none());
    assert!(normalization_constant(&a1, &zero, &shallow_params).is_err());
}
