//! The floating-point side: uniform torus grids, the weight function with
//! its near-singular spikes, spectral convergence of the quadrature against
//! exact pairings, and numeric Gram-Schmidt recovering closed-form
//! coefficients to near machine accuracy.
//!
//!     cargo run --example quadrature_oracle

use bernstein_szego::bszcore::{
    build_p, exact_pairing_p_m, monic_p, BszParams, DEFAULT_EXPANSION_CAP,
};
use bernstein_szego::oracle::{
    evaluate_on_grid, gram_schmidt_p, inner_product_num, inner_product_values, to_num,
    weight_values, OrderMode, TorusGrid,
};
use bernstein_szego::rational::{rat_to_f64, ratio};
use bernstein_szego::rootsys::build_root_system;
use bernstein_szego::symalg::CharTable;
use bernstein_szego::weightlat::Weight;
use bernstein_szego::weylgrp::WeylGroup;
use std::collections::BTreeMap;

fn main() {
    let rs = build_root_system("B2").expect("B2 exists");
    let wg = WeylGroup::enumerate(&rs);
    let mut table = CharTable::new();
    let params =
        BszParams::new(&rs, vec![ratio(1, 2)], vec![ratio(-1, 3)]).expect("parameters in domain");

    // The weight function is a ratio of trigonometric polynomials; its
    // denominator zeros sit just off the torus, so node values spread over
    // several orders of magnitude. This dynamic range is what the
    // double-double accumulation in the oracle is protecting against.
    let grid = TorusGrid::new(rs.rank, 64);
    let wv = weight_values(&rs, &params, &grid);
    let (mut lo, mut hi) = (f64::INFINITY, 0.0_f64);
    for v in &wv {
        if *v > 0.0 {
            lo = lo.min(*v);
        }
        hi = hi.max(*v);
    }
    println!(
        "weight on the {0} x {0} grid: min positive {lo:.3e}, max {hi:.3e}",
        grid.n
    );

    // Spectral convergence: quadrature error against an exact rational
    // pairing collapses geometrically in the node count.
    let lam = Weight(vec![2, 1]);
    let mu = Weight(vec![1, 1]);
    let p =
        build_p(&rs, &wg, &mut table, &lam, &params, DEFAULT_EXPANSION_CAP).expect("within cap");
    let m_mu: BTreeMap<_, _> = [(mu.clone(), ratio(1, 1))].into_iter().collect();
    let exact = rat_to_f64(
        &exact_pairing_p_m(&rs, &wg, &lam, &mu, &params, DEFAULT_EXPANSION_CAP)
            .expect("within cap"),
    );
    println!("\n<P_{lam}, m_{mu}>: exact value {exact:.15}");
    for n in [8, 16, 32, 64] {
        let g = TorusGrid::new(rs.rank, n);
        let num = inner_product_num(&rs, &wg, &params, &g, &p.mono_exp, &m_mu);
        println!("  N = {n:>3}: error {:.3e}", (num - exact).abs());
    }

    // Numeric Gram-Schmidt: orthogonalize m_lam against every monomial
    // strictly below it using only quadrature, then compare with the monic
    // closed form. Agreement is far inside 1e-8.
    let monic =
        monic_p(&rs, &wg, &mut table, &lam, &params, DEFAULT_EXPANSION_CAP).expect("deep weight");
    let gs = gram_schmidt_p(&rs, &wg, &lam, &params, &grid, OrderMode::Dominance)
        .expect("grid resolves the Gram system");
    println!("\nGram-Schmidt vs closed form for p_{lam}:");
    let mut worst = 0.0_f64;
    for (w, c) in &gs {
        let e = rat_to_f64(monic.mono_exp.get(w).unwrap_or(&ratio(0, 1)));
        worst = worst.max((c - e).abs());
        println!("  m_{w}: quadrature {c:+.12}, exact {e:+.12}");
    }
    println!("  max deviation {worst:.3e}");
    assert!(worst < 1e-8);

    // The same node values drive any pairing; reusing them makes Gram
    // matrices cheap.
    let fv = evaluate_on_grid(&wg, &grid, &to_num(&p.mono_exp));
    let gv = evaluate_on_grid(&wg, &grid, &to_num(&monic.mono_exp));
    let v = inner_product_values(&fv, &gv, &wv, rs.weyl_order);
    println!("\n<P_{lam}, p_{lam}> by cached node values: {v:.12}");
}
