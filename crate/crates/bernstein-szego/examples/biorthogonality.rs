//! Exact pairings under the torus inner product: the triangular pattern of
//! <P_lambda, m_mu>, orthogonality between deep polynomials, and a shallow
//! pair where orthogonality genuinely fails — all in rational arithmetic,
//! no floating point anywhere.
//!
//!     cargo run --example biorthogonality

use bernstein_szego::bszcore::{
    exact_pairing_p_m, exact_pairing_p_p, BszParams, DEFAULT_EXPANSION_CAP,
};
use bernstein_szego::rational::{rat_str, ratio};
use bernstein_szego::rootsys::build_root_system;
use bernstein_szego::symalg::CharTable;
use bernstein_szego::weightlat::{dominance_leq, dominant_box, is_sufficiently_deep, Weight};
use bernstein_szego::weylgrp::WeylGroup;
use num_traits::{One, Zero};

fn main() {
    let rs = build_root_system("B2").expect("B2 exists");
    let wg = WeylGroup::enumerate(&rs);
    let params =
        BszParams::new(&rs, vec![ratio(1, 2)], vec![ratio(-1, 3)]).expect("parameters in domain");
    let cap = DEFAULT_EXPANSION_CAP;

    // <P_lam, m_mu> = 1 at mu = lam and 0 unless mu strictly dominates lam:
    // the defining biorthogonality, printed as a table over a small box.
    // Entries above the diagonal (mu strictly above lam) may be anything.
    let weights = dominant_box(rs.rank, 1);
    println!("<P_lam, m_mu> on B2, ts = [1/2], tl = [-1/3]:");
    print!("{:>10}", "lam \\ mu");
    for mu in &weights {
        print!("{:>10}", mu.to_string());
    }
    println!();
    for lam in &weights {
        print!("{:>10}", lam.to_string());
        for mu in &weights {
            let v = exact_pairing_p_m(&rs, &wg, lam, mu, &params, cap).expect("within cap");
            print!("{:>10}", rat_str(&v));
            if mu == lam {
                assert!(v.is_one());
            } else if !dominance_leq(&rs, lam, mu).unwrap() {
                assert!(v.is_zero());
            }
        }
        println!();
    }

    // Between two polynomials: deep pairs are orthogonal.
    let mut table = CharTable::new();
    let deep_a = Weight(vec![2, 1]);
    let deep_b = Weight(vec![1, 2]);
    for w in [&deep_a, &deep_b] {
        assert!(is_sufficiently_deep(&rs, w, params.ms(), params.ml()).unwrap());
    }
    let v = exact_pairing_p_p(&rs, &wg, &mut table, &deep_a, &deep_b, &params, cap)
        .expect("within cap");
    println!("\n<P_{deep_a}, P_{deep_b}> = {} (both deep)", rat_str(&v));
    assert!(v.is_zero());

    // The diagonal recovers the normalization constant.
    let n = exact_pairing_p_p(&rs, &wg, &mut table, &deep_a, &deep_a, &params, cap)
        .expect("within cap");
    println!("<P_{deep_a}, P_{deep_a}> = {}", rat_str(&n));

    // Orthogonality is a theorem about the deep range only. With two
    // parameters per class on A1, the origin is shallow, sits strictly
    // below [2] in dominance, and its explicit-formula polynomial is not
    // orthogonal to P_[2]: the pairing comes out to the parameter product
    // -(t1 t2), not zero.
    let a1 = build_root_system("A1").expect("A1 exists");
    let wg1 = WeylGroup::enumerate(&a1);
    let mut table1 = CharTable::new();
    let two_ts =
        BszParams::new(&a1, vec![ratio(1, 2), ratio(1, 3)], vec![]).expect("parameters in domain");
    let lam = Weight(vec![2]);
    let zero = Weight(vec![0]);
    assert!(is_sufficiently_deep(&a1, &lam, 2, 0).unwrap());
    assert!(!is_sufficiently_deep(&a1, &zero, 2, 0).unwrap());
    let v =
        exact_pairing_p_p(&a1, &wg1, &mut table1, &lam, &zero, &two_ts, cap).expect("within cap");
    println!(
        "\nA1, ts = [1/2, 1/3]: <P_[2], P_[0]> = {}  (shallow member below a deep one)",
        rat_str(&v)
    );
    assert_eq!(v, ratio(-1, 6));
}
