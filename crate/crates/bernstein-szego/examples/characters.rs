//! Weyl characters three ways: Freudenthal's recursion for the dominant
//! weight multiplicities, exact division of alternants as an independent
//! oracle, and the product dimension formula as a scalar cross-check.
//!
//!     cargo run --example characters

use bernstein_szego::rootsys::build_root_system;
use bernstein_szego::symalg::{divide_alternants, weyl_dimension, CharTable};
use bernstein_szego::weightlat::Weight;
use bernstein_szego::weylgrp::WeylGroup;
use num_bigint::BigInt;

fn main() {
    // The adjoint representation of A2: chi = m_[1,1] + 2 m_[0,0], the
    // textbook eight-dimensional example.
    let rs = build_root_system("A2").expect("A2 exists");
    let wg = WeylGroup::enumerate(&rs);
    let mut table = CharTable::new();
    let adjoint = Weight(vec![1, 1]);
    println!("A2 adjoint, dominant multiplicities (Freudenthal):");
    for (mu, mult) in table.get(&rs, &wg, &adjoint).expect("dominant weight") {
        println!("  m_{mu} x {mult}  (orbit size {})", wg.orbit(mu).len());
    }
    println!("dimension = {}", weyl_dimension(&rs, &adjoint).unwrap());

    // The division oracle expands the full character as A_{rho+lam} / A_rho
    // over the whole orbit support; Freudenthal's table must be exactly its
    // dominant slice.
    let g2 = build_root_system("G2").expect("G2 exists");
    let wg2 = WeylGroup::enumerate(&g2);
    let mut table2 = CharTable::new();
    println!("\nG2 characters, Freudenthal vs alternant division vs dimension:");
    for lam in [Weight(vec![1, 0]), Weight(vec![0, 1]), Weight(vec![1, 1])] {
        let mults = table2
            .get(&g2, &wg2, &lam)
            .expect("dominant weight")
            .clone();
        let full = divide_alternants(&g2, &wg2, &lam).expect("dominant weight");
        let mut dim = BigInt::from(0);
        for (mu, m) in &mults {
            for nu in wg2.orbit(mu) {
                assert_eq!(full.get(&nu), Some(m), "division disagrees at {nu}");
            }
            dim += BigInt::from(*m) * BigInt::from(wg2.orbit(mu).len());
        }
        assert_eq!(dim, weyl_dimension(&g2, &lam).unwrap());
        println!(
            "  chi_{lam}: {} dominant weights, {} in full support, dim {dim}",
            mults.len(),
            full.len()
        );
    }

    // Multiplicities grow quickly with the weight; all of it stays exact
    // integer arithmetic.
    let b3 = build_root_system("B3").expect("B3 exists");
    let wg3 = WeylGroup::enumerate(&b3);
    let mut table3 = CharTable::new();
    let lam = Weight(vec![1, 1, 1]);
    let mults = table3.get(&b3, &wg3, &lam).expect("dominant weight");
    println!("\nB3 chi_{lam}: dim {}", weyl_dimension(&b3, &lam).unwrap());
    for (mu, mult) in mults {
        println!("  m_{mu} x {mult}");
    }
}
