//! The classical rank-one family on its own terms: closed-form norms and
//! monic polynomials for the trigonometric weight with M Szego factors,
//! cross-checked against the general machinery specialized to A1.
//!
//!     cargo run --example classic_univariate

use bernstein_szego::bszcore::{build_p, BszParams, DEFAULT_EXPANSION_CAP};
use bernstein_szego::rational::{rat_str, ratio, Rat};
use bernstein_szego::rootsys::build_root_system;
use bernstein_szego::symalg::CharTable;
use bernstein_szego::univariate::{classic_norm, classic_p, ClassicParams};
use bernstein_szego::weightlat::Weight;
use bernstein_szego::weylgrp::WeylGroup;
use num_traits::Zero;

fn main() {
    // Three parameters: the norm is 1 - t1 t2 t3 = 29/30 exactly at the
    // edge degree ell = M - 1 and exactly 1 from ell = M on.
    let params = ClassicParams::new(vec![ratio(1, 2), ratio(1, 3), ratio(1, 5)])
        .expect("parameters in domain");
    println!("M = 3, t = (1/2, 1/3, 1/5):");
    for ell in 2..=6 {
        println!(
            "  N_{ell} = {}",
            rat_str(&classic_norm(ell, &params).unwrap())
        );
    }
    assert_eq!(classic_norm(2, &params).unwrap(), ratio(29, 30));
    // Below ell = M - 1 the polynomial is not defined by these formulas.
    assert!(classic_norm(1, &params).is_err());

    println!("\nmonic p_ell in the cosine-monomial basis m_j:");
    for ell in 2..=4 {
        let coeffs = classic_p(ell, &params).unwrap();
        let line: Vec<String> = coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| format!("{} m_{j}", rat_str(c)))
            .collect();
        println!("  p_{ell} = {}", line.join(" + "));
    }

    // A1 is the rank-one instance of the general construction: same
    // polynomials, indexed by the weight [ell] (the pairing against the
    // single coroot is twice the cosine frequency).
    let rs = build_root_system("A1").expect("A1 exists");
    let wg = WeylGroup::enumerate(&rs);
    let mut table = CharTable::new();
    let general = BszParams::new(&rs, vec![ratio(1, 2), ratio(1, 3), ratio(1, 5)], vec![])
        .expect("parameters in domain");
    println!("\ncross-check against the general engine on A1:");
    for ell in 2..=5 {
        let classic = classic_p(ell, &params).unwrap();
        let p = build_p(
            &rs,
            &wg,
            &mut table,
            &Weight(vec![ell]),
            &general,
            DEFAULT_EXPANSION_CAP,
        )
        .expect("within cap");
        let n = p.norm_const.clone().expect("deep for ell >= M - 1");
        for (j, c) in classic.iter().enumerate() {
            let monic_coeff = p
                .mono_exp
                .get(&Weight(vec![j as i64]))
                .map(|v| v / &n)
                .unwrap_or_else(Rat::zero);
            assert_eq!(&monic_coeff, c, "coefficient of m_{j} in p_{ell}");
        }
        println!(
            "  p_{ell}: {} coefficients agree (norm {})",
            classic.len(),
            rat_str(&n)
        );
    }
}
