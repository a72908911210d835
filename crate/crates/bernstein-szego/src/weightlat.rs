//! Weight lattice geometry.
//!
//! Weights are integer vectors in the fundamental-weight basis, so the i-th
//! coordinate of `lambda` is the pairing with the i-th simple coroot. In this
//! basis dominance of a single weight is just coordinatewise nonnegativity,
//! while the dominance *order* `mu <= lambda` asks for `lambda - mu` to be a
//! nonnegative integer combination of simple roots and is decided by an exact
//! Cramer solve against the Cartan matrix.
//!
//! The scan routines at the bottom exhaustively check three structure
//! statements about saturated sets and Weyl orbits over all admissible
//! partition vectors `n: R_+ -> {0..m}`; they report rather than assume, and
//! refuse (with a distinct error) to scan past a configured cap.

use crate::error::{Error, Result};
use crate::linalg::cramer_solve;
use crate::rootsys::RootSystem;
use crate::weylgrp::{dominant_representative, WeylGroup};
use num_traits::Signed;
use serde::ser::{Serialize, Serializer};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// Scans refuse to enumerate more than this many partition vectors unless a
/// larger cap is passed explicitly.
pub const DEFAULT_SCAN_CAP: u128 = 10_000_000;

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_strongly_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 1)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Weight {
        self.scale(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Accepts "2,1" and "[2,1]".
    fn from_str(s: &str) -> Result<Weight> {
        let trimmed = s.trim().trim_start_matches('[').trim_end_matches(']');
        if trimmed.is_empty() {
            return Err(Error::Parse {
                detail: format!("empty weight {s:?}"),
            });
        }
        let coords = trimmed
            .split(',')
            .map(|p| {
                p.trim().parse::<i64>().map_err(|_| Error::Parse {
                    detail: format!("bad weight coordinate {p:?} in {s:?}"),
                })
            })
            .collect::<Result<Vec<i64>>>()?;
        Ok(Weight(coords))
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

fn check_rank(rs: &RootSystem, w: &Weight) -> Result<()> {
    if w.rank() != rs.rank {
        return Err(Error::DimensionMismatch {
            expected: rs.rank,
            got: w.rank(),
        });
    }
    Ok(())
}

/// Simple-root coordinates of `nu` if `nu` lies in the root lattice.
pub fn root_coords(rs: &RootSystem, nu: &Weight) -> Option<Vec<i64>> {
    let sol = cramer_solve(&rs.cartan, &nu.0)?;
    let mut out = Vec::with_capacity(sol.len());
    for c in &sol {
        if !c.is_integer() {
            return None;
        }
        out.push(i64::try_from(c.to_integer()).ok()?);
    }
    Some(out)
}

/// Dominance order: `mu <= lambda` iff `lambda - mu` is a nonnegative integer
/// combination of simple roots.
pub fn dominance_leq(rs: &RootSystem, mu: &Weight, lam: &Weight) -> Result<bool> {
    check_rank(rs, mu)?;
    check_rank(rs, lam)?;
    Ok(match root_coords(rs, &lam.sub(mu)) {
        Some(s) => s.iter().all(|&c| c >= 0),
        None => false,
    })
}

/// Minimum coroot pairing of `lam` against the short positive roots.
pub fn min_pairing_short(rs: &RootSystem, lam: &Weight) -> Result<i64> {
    check_rank(rs, lam)?;
    Ok(rs
        .positive_roots
        .iter()
        .filter(|r| !r.long)
        .map(|r| rs.coroot_pairing(lam, r))
        .min()
        .expect("every system has short roots"))
}

/// Minimum coroot pairing against the long positive roots; `None` when the
/// system is simply-laced and the long class is empty by convention.
pub fn min_pairing_long(rs: &RootSystem, lam: &Weight) -> Result<Option<i64>> {
    check_rank(rs, lam)?;
    Ok(rs
        .positive_roots
        .iter()
        .filter(|r| r.long)
        .map(|r| rs.coroot_pairing(lam, r))
        .min())
}

/// Depth test: `m_s(lam) >= ms - 1` and, when long roots exist,
/// `m_l(lam) >= ml - 1`. Depth is exactly what makes the closed norm formula
/// applicable.
pub fn is_sufficiently_deep(rs: &RootSystem, lam: &Weight, ms: usize, ml: usize) -> Result<bool> {
    let short_ok = min_pairing_short(rs, lam)? >= ms as i64 - 1;
    let long_ok = match min_pairing_long(rs, lam)? {
        Some(m) => m >= ml as i64 - 1,
        None => true,
    };
    Ok(short_ok && long_ok)
}

/// The dominant shift entering the norm formula:
/// `lambda + rho - ms*rho_s - ml*rho_l`. Dominant exactly when `lam` is deep.
pub fn lambda_tilde(rs: &RootSystem, lam: &Weight, ms: usize, ml: usize) -> Result<Weight> {
    check_rank(rs, lam)?;
    Ok(lam
        .add(&rs.rho)
        .sub(&rs.rho_short.scale(ms as i64))
        .sub(&rs.rho_long.scale(ml as i64)))
}

/// Depth has an equivalent reparametrization: `lam` is deep iff
/// `lam - (ms-1)*rho_s - (ml-1)*rho_l` is dominant. Checked by exhaustive
/// scan over the dominant box `{0..bound}^rank`.
pub fn deep_parametrization_check(
    rs: &RootSystem,
    ms: usize,
    ml: usize,
    bound: i64,
) -> Result<bool> {
    if ms == 0 || ml == 0 {
        return Err(Error::ParameterDomain {
            detail: "reparametrization check needs ms, ml >= 1".into(),
        });
    }
    let shift = rs
        .rho_short
        .scale(ms as i64 - 1)
        .add(&rs.rho_long.scale(ml as i64 - 1));
    for lam in dominant_box(rs.rank, bound) {
        let deep = is_sufficiently_deep(rs, &lam, ms, ml)?;
        let reparam = lam.sub(&shift).is_dominant();
        if deep != reparam {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All dominant weights with coordinates in `0..=bound`.
pub fn dominant_box(rank: usize, bound: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut cur = vec![0_i64; rank];
    loop {
        out.push(Weight(cur.clone()));
        let mut i = 0;
        loop {
            if i == rank {
                return out;
            }
            cur[i] += 1;
            if cur[i] <= bound {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// The saturated set generated by a dominant weight: all dominant `mu <= lam`
/// plus the full Weyl-orbit closure.
#[derive(Debug, Clone)]
pub struct SaturatedSet {
    pub dominant_members: Vec<Weight>,
    pub full_members: Vec<Weight>,
}

pub fn saturated_set(rs: &RootSystem, wg: &WeylGroup, lam: &Weight) -> Result<SaturatedSet> {
    check_rank(rs, lam)?;
    if !lam.is_dominant() {
        return Err(Error::NotDominant {
            weight: lam.to_string(),
        });
    }
    // lambda - mu has simple-root coordinates s >= 0 with sum bounded by the
    // coroot height of lambda, since dominant mu have nonnegative height.
    let height_bound = {
        let twice: i64 = rs
            .positive_roots
            .iter()
            .map(|r| rs.coroot_pairing(lam, r))
            .sum();
        twice / 2
    };
    let mut dominant_members = Vec::new();
    let mut s = vec![0_i64; rs.rank];
    scan_simplex(rs, lam, &mut s, 0, height_bound, &mut dominant_members);
    dominant_members.sort();
    let mut full: BTreeSet<Weight> = BTreeSet::new();
    for mu in &dominant_members {
        for w in wg.orbit(mu) {
            full.insert(w);
        }
    }
    Ok(SaturatedSet {
        dominant_members,
        full_members: full.into_iter().collect(),
    })
}

fn scan_simplex(
    rs: &RootSystem,
    lam: &Weight,
    s: &mut Vec<i64>,
    idx: usize,
    budget: i64,
    out: &mut Vec<Weight>,
) {
    if idx == rs.rank {
        let mut mu = lam.0.clone();
        for (j, &sj) in s.iter().enumerate() {
            for i in 0..rs.rank {
                mu[i] -= sj * rs.cartan.get(i, j);
            }
        }
        if mu.iter().all(|&c| c >= 0) {
            out.push(Weight(mu));
        }
        return;
    }
    for v in 0..=budget {
        s[idx] = v;
        scan_simplex(rs, lam, s, idx + 1, budget - v, out);
    }
    s[idx] = 0;
}

/// Convex-hull membership: `mu` lies in the hull of the orbit of `lam` iff
/// `lam - dominant_representative(mu)` is a nonnegative *rational* combination
/// of simple roots. No integrality here; the lattice condition is separate.
pub fn hull_membership(rs: &RootSystem, mu: &Weight, lam: &Weight) -> Result<bool> {
    check_rank(rs, mu)?;
    check_rank(rs, lam)?;
    if !lam.is_dominant() {
        return Err(Error::NotDominant {
            weight: lam.to_string(),
        });
    }
    let (dom, _, _) = dominant_representative(rs, mu);
    let diff = lam.sub(&dom);
    let sol = cramer_solve(&rs.cartan, &diff.0).expect("Cartan matrix is invertible");
    Ok(sol.iter().all(|c| !c.is_negative()))
}

/// Outcome of one exhaustive scan. `passed == false` comes with a witness.
#[derive(Debug, Clone, serde::Serialize)]
pub struct PropReport {
    pub name: String,
    pub system: String,
    pub weight: Weight,
    pub scanned: u128,
    pub passed: bool,
    pub counterexample: Option<String>,
}

/// Per-root scan bounds: `m_class(lam)` for each positive root.
fn class_bounds(rs: &RootSystem, lam: &Weight) -> Result<Vec<i64>> {
    let ms = min_pairing_short(rs, lam)?;
    let ml = min_pairing_long(rs, lam)?.unwrap_or(0);
    Ok(rs
        .positive_roots
        .iter()
        .map(|r| if r.long { ml } else { ms })
        .collect())
}

fn scan_size(bounds: &[i64]) -> u128 {
    bounds
        .iter()
        .fold(1_u128, |acc, &b| acc.saturating_mul(b as u128 + 1))
}

/// Runs `f` over every vector `0 <= n <= bounds`, passing the shifted weight
/// `lam - sum n_alpha alpha`. Stops early when `f` returns false.
fn for_each_partition_vector(
    rs: &RootSystem,
    lam: &Weight,
    bounds: &[i64],
    f: &mut impl FnMut(&[i64], &Weight) -> bool,
) {
    let mut n = vec![0_i64; bounds.len()];
    let mut mu = lam.clone();
    fn rec(
        rs: &RootSystem,
        bounds: &[i64],
        n: &mut Vec<i64>,
        mu: &mut Weight,
        idx: usize,
        f: &mut impl FnMut(&[i64], &Weight) -> bool,
    ) -> bool {
        if idx == bounds.len() {
            return f(n, mu);
        }
        for v in 0..=bounds[idx] {
            n[idx] = v;
            if !rec(rs, bounds, n, mu, idx + 1, f) {
                return false;
            }
            for i in 0..rs.rank {
                mu.0[i] -= rs.positive_roots[idx].fw.0[i];
            }
        }
        for i in 0..rs.rank {
            mu.0[i] += (bounds[idx] + 1) * rs.positive_roots[idx].fw.0[i];
        }
        n[idx] = 0;
        true
    }
    rec(rs, bounds, &mut n, &mut mu, 0, f);
}

/// Scan check: every admissible subtraction `lam - sum n_alpha alpha` with
/// `0 <= n_alpha <= m_class(lam)` stays inside the saturated set of `lam`.
pub fn verify_saturated_prop(rs: &RootSystem, lam: &Weight, cap: u128) -> Result<PropReport> {
    check_rank(rs, lam)?;
    if !lam.is_dominant() {
        return Err(Error::NotDominant {
            weight: lam.to_string(),
        });
    }
    let bounds = class_bounds(rs, lam)?;
    let total = scan_size(&bounds);
    if total > cap {
        return Err(Error::CapExceeded { needed: total, cap });
    }
    let mut counterexample = None;
    for_each_partition_vector(rs, lam, &bounds, &mut |n, mu| {
        let (dom, _, _) = dominant_representative(rs, mu);
        let inside = dominance_leq(rs, &dom, lam).expect("rank checked");
        if !inside {
            counterexample = Some(format!("n = {n:?} gives {mu} with dominant rep {dom}"));
            return false;
        }
        true
    });
    Ok(PropReport {
        name: "saturated-membership".into(),
        system: rs.name.to_string(),
        weight: lam.clone(),
        scanned: total,
        passed: counterexample.is_none(),
        counterexample,
    })
}

/// Scan check: an admissible subtraction lands back on the orbit of `lam`
/// only when every `n_alpha` is 0 or the full class minimum `m_class(lam)`.
pub fn verify_orbit_prop(rs: &RootSystem, lam: &Weight, cap: u128) -> Result<PropReport> {
    check_rank(rs, lam)?;
    if !lam.is_dominant() {
        return Err(Error::NotDominant {
            weight: lam.to_string(),
        });
    }
    let bounds = class_bounds(rs, lam)?;
    let total = scan_size(&bounds);
    if total > cap {
        return Err(Error::CapExceeded { needed: total, cap });
    }
    let mut counterexample = None;
    for_each_partition_vector(rs, lam, &bounds, &mut |n, mu| {
        let (dom, _, _) = dominant_representative(rs, mu);
        if &dom == lam {
            let extremal = n.iter().zip(&bounds).all(|(&nv, &b)| nv == 0 || nv == b);
            if !extremal {
                counterexample = Some(format!("n = {n:?} lands on orbit at {mu}"));
                return false;
            }
        }
        true
    });
    Ok(PropReport {
        name: "orbit-extremality".into(),
        system: rs.name.to_string(),
        weight: lam.clone(),
        scanned: total,
        passed: counterexample.is_none(),
        counterexample,
    })
}

/// Scan check for the vertex description: with `lam` strongly dominant and
/// `0 < ms <= m_s(lam)`, `0 < ml <= m_l(lam)`, the admissible subtractions
/// `lam - sum n_alpha alpha` (bounds ms / ml per class) landing on the orbit
/// of `lam` are exactly the weights
/// `lam - ms*sum(S_w cap short) - ml*sum(S_w cap long)` for `w` in the
/// stabilizer of `lam - ms*rho_s - ml*rho_l`, with `S_w` the inversion set.
pub fn verify_vertex_prop(
    rs: &RootSystem,
    wg: &WeylGroup,
    lam: &Weight,
    ms: i64,
    ml: i64,
    cap: u128,
) -> Result<PropReport> {
    check_rank(rs, lam)?;
    if !lam.is_strongly_dominant() {
        return Err(Error::NotDominant {
            weight: format!("{lam} (must be strongly dominant)"),
        });
    }
    let m_s = min_pairing_short(rs, lam)?;
    let m_l = min_pairing_long(rs, lam)?;
    if ms < 1 || ms > m_s {
        return Err(Error::ParameterDomain {
            detail: format!("ms = {ms} outside 1..={m_s}"),
        });
    }
    if let Some(m_l) = m_l {
        if ml < 1 || ml > m_l {
            return Err(Error::ParameterDomain {
                detail: format!("ml = {ml} outside 1..={m_l}"),
            });
        }
    }
    let bounds: Vec<i64> = rs
        .positive_roots
        .iter()
        .map(|r| if r.long { ml } else { ms })
        .collect();
    let total = scan_size(&bounds);
    if total > cap {
        return Err(Error::CapExceeded { needed: total, cap });
    }

    // Predicted vertex set from inversion sets of the stabilizer.
    let shift = lam.sub(&rs.rho_short.scale(ms)).sub(&rs.rho_long.scale(ml));
    let mut predicted: BTreeSet<Weight> = BTreeSet::new();
    for wi in wg.stabilizer(&shift) {
        let mut mu = lam.clone();
        for ri in wg.element(wi).inversions(rs) {
            let root = &rs.positive_roots[ri];
            let k = if root.long { ml } else { ms };
            mu = mu.sub(&root.fw.scale(k));
        }
        predicted.insert(mu);
    }

    let mut scanned_hits: BTreeSet<Weight> = BTreeSet::new();
    for_each_partition_vector(rs, lam, &bounds, &mut |_n, mu| {
        let (dom, _, _) = dominant_representative(rs, mu);
        if &dom == lam {
            scanned_hits.insert(mu.clone());
        }
        true
    });

    let passed = scanned_hits == predicted;
    let counterexample = if passed {
        None
    } else {
        let only_scan: Vec<String> = scanned_hits
            .difference(&predicted)
            .map(|w| w.to_string())
            .collect();
        let only_pred: Vec<String> = predicted
            .difference(&scanned_hits)
            .map(|w| w.to_string())
            .collect();
        Some(format!(
            "scan-only: {only_scan:?}, predicted-only: {only_pred:?}"
        ))
    };
    Ok(PropReport {
        name: "orbit-vertex-sets".into(),
        system: rs.name.to_string(),
        weight: lam.clone(),
        scanned: total,
        passed,
        counterexample,
    })
}

/// Cross-check of the hull characterization: within the coordinate box of the
/// orbit of `lam`, the weights congruent to `lam` mod the root lattice that
/// pass [`hull_membership`] are exactly the saturated set.
pub fn hull_matches_saturated(rs: &RootSystem, wg: &WeylGroup, lam: &Weight) -> Result<PropReport> {
    let sat = saturated_set(rs, wg, lam)?;
    let full: BTreeSet<Weight> = sat.full_members.iter().cloned().collect();
    let orbit = wg.orbit(lam);
    let mut lo = vec![i64::MAX; rs.rank];
    let mut hi = vec![i64::MIN; rs.rank];
    for w in &orbit {
        for i in 0..rs.rank {
            lo[i] = lo[i].min(w.0[i]);
            hi[i] = hi[i].max(w.0[i]);
        }
    }
    let mut scanned = 0_u128;
    let mut counterexample = None;
    let mut cur = lo.clone();
    'outer: loop {
        let mu = Weight(cur.clone());
        if root_coords(rs, &mu.sub(lam)).is_some() {
            scanned += 1;
            let in_hull = hull_membership(rs, &mu, lam)?;
            let in_sat = full.contains(&mu);
            if in_hull != in_sat {
                counterexample = Some(format!(
                    "{mu}: hull says {in_hull}, saturated set says {in_sat}"
                ));
                break 'outer;
            }
        }
        let mut i = 0;
        loop {
            if i == rs.rank {
                break 'outer;
            }
            cur[i] += 1;
            if cur[i] <= hi[i] {
                break;
            }
            cur[i] = lo[i];
            i += 1;
        }
    }
    Ok(PropReport {
        name: "hull-vs-saturated".into(),
        system: rs.name.to_string(),
        weight: lam.clone(),
        scanned,
        passed: counterexample.is_none(),
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    #[test]
    fn weight_parse_display() {
        let w: Weight = "2,1".parse().unwrap();
        assert_eq!(w, Weight(vec![2, 1]));
        assert_eq!(w.to_string(), "[2,1]");
        let w2: Weight = "[-1,0]".parse().unwrap();
        assert_eq!(w2, Weight(vec![-1, 0]));
        assert!("".parse::<Weight>().is_err());
        assert!("1,x".parse::<Weight>().is_err());
    }

    #[test]
    fn dominance_examples() {
        let a2 = build_root_system("A2").unwrap();
        // Difference [3,0]-[1,1] = [2,-1] = alpha_1 in this basis.
        assert!(dominance_leq(&a2, &Weight(vec![1, 1]), &Weight(vec![3, 0])).unwrap());
        assert!(!dominance_leq(&a2, &Weight(vec![0, 0]), &Weight(vec![1, 0])).unwrap());
        // Reflexive and antisymmetric on a small box.
        for lam in dominant_box(2, 2) {
            assert!(dominance_leq(&a2, &lam, &lam).unwrap());
            for mu in dominant_box(2, 2) {
                if mu != lam
                    && dominance_leq(&a2, &mu, &lam).unwrap()
                    && dominance_leq(&a2, &lam, &mu).unwrap()
                {
                    panic!("antisymmetry violated at {mu}, {lam}");
                }
            }
        }
        let rank_err = dominance_leq(&a2, &Weight(vec![1]), &Weight(vec![1, 0]));
        assert!(rank_err.is_err());
    }

    #[test]
    fn dominance_transitive_on_box() {
        let b2 = build_root_system("B2").unwrap();
        let box3 = dominant_box(2, 3);
        for a in &box3 {
            for b in &box3 {
                if !dominance_leq(&b2, a, b).unwrap() {
                    continue;
                }
                for c in &box3 {
                    if dominance_leq(&b2, b, c).unwrap() {
                        assert!(dominance_leq(&b2, a, c).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn min_pairings_b2() {
        let b2 = build_root_system("B2").unwrap();
        let lam = Weight(vec![1, 2]);
        assert_eq!(min_pairing_short(&b2, &lam).unwrap(), 2);
        assert_eq!(min_pairing_long(&b2, &lam).unwrap(), Some(1));
    }

    #[test]
    fn min_pairing_long_simply_laced_is_none() {
        let a2 = build_root_system("A2").unwrap();
        assert_eq!(min_pairing_long(&a2, &Weight(vec![3, 3])).unwrap(), None);
    }

    #[test]
    fn depth_examples() {
        let b2 = build_root_system("B2").unwrap();
        assert!(is_sufficiently_deep(&b2, &Weight(vec![2, 2]), 2, 2).unwrap());
        assert!(!is_sufficiently_deep(&b2, &Weight(vec![0, 1]), 2, 2).unwrap());
        // M = 0 never constrains.
        assert!(is_sufficiently_deep(&b2, &Weight(vec![0, 0]), 0, 0).unwrap());
    }

    #[test]
    fn lambda_tilde_examples() {
        let b2 = build_root_system("B2").unwrap();
        // rho_s = [0,1], rho_l = [1,0] for B2.
        let lt = lambda_tilde(&b2, &Weight(vec![2, 2]), 2, 2).unwrap();
        assert_eq!(lt, Weight(vec![1, 1]));
        // Deep weights give dominant shifts; shallow ones need not.
        let shallow = lambda_tilde(&b2, &Weight(vec![0, 0]), 2, 2).unwrap();
        assert!(!shallow.is_dominant());
    }

    #[test]
    fn deep_reparametrization_small_grid() {
        for (label, ms, ml) in [("B2", 2, 2), ("G2", 2, 3), ("A2", 2, 1), ("C3", 1, 2)] {
            let rs = build_root_system(label).unwrap();
            assert!(
                deep_parametrization_check(&rs, ms, ml, 4).unwrap(),
                "reparametrization failed on {label}"
            );
        }
    }

    #[test]
    fn saturated_set_a1() {
        let a1 = build_root_system("A1").unwrap();
        let wg = WeylGroup::enumerate(&a1);
        let sat = saturated_set(&a1, &wg, &Weight(vec![2])).unwrap();
        assert_eq!(sat.dominant_members, vec![Weight(vec![0]), Weight(vec![2])]);
        assert_eq!(
            sat.full_members,
            vec![Weight(vec![-2]), Weight(vec![0]), Weight(vec![2])]
        );
    }

    #[test]
    fn saturated_set_a2_adjoint() {
        let a2 = build_root_system("A2").unwrap();
        let wg = WeylGroup::enumerate(&a2);
        let sat = saturated_set(&a2, &wg, &Weight(vec![1, 1])).unwrap();
        assert_eq!(
            sat.dominant_members,
            vec![Weight(vec![0, 0]), Weight(vec![1, 1])]
        );
        // Six roots plus zero.
        assert_eq!(sat.full_members.len(), 7);
    }

    #[test]
    fn saturated_set_closed_under_root_strings() {
        // Saturation: for mu in the set and any root alpha, the whole string
        // mu - k*alpha for 0 <= k <= <mu, alpha^vee> stays in the set.
        for label in ["A2", "B2", "G2"] {
            let rs = build_root_system(label).unwrap();
            let wg = WeylGroup::enumerate(&rs);
            for lam in dominant_box(rs.rank, 2) {
                let sat = saturated_set(&rs, &wg, &lam).unwrap();
                let full: BTreeSet<Weight> = sat.full_members.iter().cloned().collect();
                for mu in &sat.full_members {
                    for root in &rs.positive_roots {
                        for dir in [1_i64, -1] {
                            let pairing = dir * rs.coroot_pairing(mu, root);
                            for k in 0..=pairing.max(0) {
                                let stepped = mu.sub(&root.fw.scale(dir * k));
                                assert!(
                                    full.contains(&stepped),
                                    "{label}: string from {mu} leaves set at {stepped}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn hull_examples() {
        let a1 = build_root_system("A1").unwrap();
        assert!(hull_membership(&a1, &Weight(vec![1]), &Weight(vec![2])).unwrap());
        assert!(!hull_membership(&a1, &Weight(vec![3]), &Weight(vec![2])).unwrap());
        // [1] is in the hull of [2] but not in the saturated set (wrong coset).
        let wg = WeylGroup::enumerate(&a1);
        let sat = saturated_set(&a1, &wg, &Weight(vec![2])).unwrap();
        assert!(!sat.full_members.contains(&Weight(vec![1])));
    }

    #[test]
    fn hull_cross_check_small() {
        for label in ["A1", "A2", "B2", "G2"] {
            let rs = build_root_system(label).unwrap();
            let wg = WeylGroup::enumerate(&rs);
            for lam in dominant_box(rs.rank, 2) {
                let rep = hull_matches_saturated(&rs, &wg, &lam).unwrap();
                assert!(rep.passed, "{label} {lam}: {:?}", rep.counterexample);
            }
        }
    }

    #[test]
    fn saturated_prop_a2_example() {
        let a2 = build_root_system("A2").unwrap();
        let rep = verify_saturated_prop(&a2, &Weight(vec![2, 2]), DEFAULT_SCAN_CAP).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.scanned, 27);
    }

    #[test]
    fn orbit_prop_b2_example() {
        let b2 = build_root_system("B2").unwrap();
        let rep = verify_orbit_prop(&b2, &Weight(vec![1, 1]), DEFAULT_SCAN_CAP).unwrap();
        assert!(rep.passed);
    }

    #[test]
    fn vertex_prop_examples() {
        let a1 = build_root_system("A1").unwrap();
        let wg1 = WeylGroup::enumerate(&a1);
        let rep = verify_vertex_prop(&a1, &wg1, &Weight(vec![2]), 2, 1, DEFAULT_SCAN_CAP).unwrap();
        assert!(rep.passed);

        let b2 = build_root_system("B2").unwrap();
        let wg2 = WeylGroup::enumerate(&b2);
        let rep =
            verify_vertex_prop(&b2, &wg2, &Weight(vec![2, 2]), 2, 2, DEFAULT_SCAN_CAP).unwrap();
        assert!(rep.passed);

        // Precondition violations are errors, not reports.
        assert!(
            verify_vertex_prop(&b2, &wg2, &Weight(vec![0, 2]), 1, 1, DEFAULT_SCAN_CAP).is_err()
        );
        assert!(
            verify_vertex_prop(&b2, &wg2, &Weight(vec![2, 2]), 5, 1, DEFAULT_SCAN_CAP).is_err()
        );
    }

    #[test]
    fn cap_is_enforced() {
        let b2 = build_root_system("B2").unwrap();
        let err = verify_saturated_prop(&b2, &Weight(vec![2, 2]), 10).unwrap_err();
        match err {
            Error::CapExceeded { needed, cap } => {
                assert!(needed > cap);
            }
            other => panic!("expected CapExceeded, got {other:?}"),
        }
    }
}
