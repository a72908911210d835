//! Tour of the built-in root systems: Cartan data, positive roots split by
//! length class, Weyl vectors, and the integer pairings everything else is
//! built from.
//!
//!     cargo run --example root_system_tour

use bernstein_szego::rootsys::{build_root_system, SystemName};

fn main() {
    println!(
        "{:<6} {:>4} {:>7} {:>6} {:>5} {:>9}  laced",
        "system", "rank", "roots+", "short", "long", "|W|"
    );
    for name in SystemName::all() {
        let rs = build_root_system(&name.to_string()).expect("fixed system list");
        println!(
            "{:<6} {:>4} {:>7} {:>6} {:>5} {:>9}  {}",
            rs.name.to_string(),
            rs.rank,
            rs.positive_roots.len(),
            rs.short_indices().len(),
            rs.long_indices().len(),
            rs.weyl_order,
            if rs.simply_laced { "yes" } else { "no" }
        );
    }

    // Everything indexes weights by their pairings against the simple
    // coroots, so a root is itself a weight vector; the simple-root columns
    // of the Cartan matrix come back as the first `rank` positive roots.
    let rs = build_root_system("B2").expect("B2 exists");
    println!("\nB2 positive roots (fundamental-weight coordinates):");
    println!(
        "{:<12} {:>14} {:>8} {:>7}",
        "root", "simple coords", "height", "class"
    );
    for root in &rs.positive_roots {
        println!(
            "{:<12} {:>14} {:>8} {:>7}",
            root.fw.to_string(),
            format!("{:?}", root.sr),
            root.height,
            if root.long { "long" } else { "short" }
        );
    }
    println!("rho       = {}", rs.rho);
    println!("rho_short = {}", rs.rho_short);
    println!("rho_long  = {}", rs.rho_long);
    println!("highest root = {}", rs.highest_root().fw);

    // <rho, alpha^vee> = height of alpha^vee as a coroot; the depth
    // condition on weights is phrased through exactly these pairings.
    let g2 = build_root_system("G2").expect("G2 exists");
    println!("\nG2 pairings <rho, alpha^vee> per positive root:");
    for root in &g2.positive_roots {
        println!(
            "  {:<8} -> {}",
            root.fw.to_string(),
            g2.coroot_pairing(&g2.rho, root)
        );
    }
}
