//! Exploratory scan over shallow weights. The closed norm formula needs the
//! weight to clear a depth threshold set by the parameter counts; below it
//! the Gram-Schmidt family is still defined, but nothing promises that two
//! dominance-incomparable members stay orthogonal. This experiment measures
//! those pairings numerically and reports what it sees — values and error
//! bounds, no verdicts.
//!
//!     cargo run --example shallow_scan

use bernstein_szego::bszcore::BszParams;
use bernstein_szego::oracle::{shallow_orthogonality_scan, TorusGrid};
use bernstein_szego::rational::ratio;
use bernstein_szego::rootsys::build_root_system;
use bernstein_szego::weylgrp::WeylGroup;

fn main() {
    // Two parameters per root class keeps the depth threshold at 2, so the
    // coordinate-2 box around the origin is mostly shallow.
    for label in ["B2", "G2"] {
        let rs = build_root_system(label).expect("fixed system list");
        let wg = WeylGroup::enumerate(&rs);
        let params = BszParams::new(
            &rs,
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(1, 2), ratio(1, 3)],
        )
        .expect("parameters in domain");
        let grid = TorusGrid::default_for(&rs);
        let report = shallow_orthogonality_scan(&rs, &wg, &params, &grid, 2, 1e-6)
            .expect("rank-2 scan fits comfortably");

        println!(
            "{}: grid {}x{}, ts = [{}], tl = [{}], bound {}",
            report.system,
            report.grid_n,
            report.grid_n,
            report.ts.join(", "),
            report.tl.join(", "),
            report.bound
        );
        if report.entries.is_empty() {
            // G2 lands here: its weight lattice equals its root lattice, and
            // every dominant pair in this small box is dominance-comparable.
            println!("  ({})\n", report.note);
            continue;
        }
        for e in &report.entries {
            println!(
                "  <p_{}, p_{}> = {:+.6e}   (error bound {:.1e}){}",
                e.lam,
                e.mu,
                e.value,
                e.error_bound,
                if e.exceeds_threshold {
                    "  exceeds threshold"
                } else {
                    ""
                }
            );
        }
        let hits = report
            .entries
            .iter()
            .filter(|e| e.exceeds_threshold)
            .count();
        println!(
            "  {} of {} incomparable shallow pairs exceed |value| > {:.0e}\n",
            hits,
            report.entries.len(),
            report.threshold
        );
    }
}
