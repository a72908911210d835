//! Weyl characters and exact expansions in the monomial basis.
//!
//! Everything here is a finite formal sum of exponentials `e^mu` keyed by
//! fundamental-weight coordinates. Two bases of the W-invariants matter:
//! orbit sums `m_mu` (one per dominant weight) and Weyl characters `chi_lam`,
//! whose monomial coefficients are the dominant weight multiplicities of the
//! irreducible highest-weight module.
//!
//! Multiplicities come from Freudenthal's recursion, run in scaled integer
//! arithmetic: multiplying the invariant form by det(Cartan) clears every
//! denominator, so the recursion divides integers and asserts exactness. The
//! tests re-derive the same tables by literally dividing the alternant
//! `A_{lam+rho}` by `A_rho` under a graded-lex leading-term order, then
//! cross-check total dimensions against the Weyl dimension formula.

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::rational::{rat, ratio, Rat};
use crate::rootsys::RootSystem;
use crate::weightlat::{root_coords, saturated_set, Weight};
use crate::weylgrp::{dominant_descent, WeylGroup};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// det(Cartan) times the Weyl-invariant inner product, evaluated on
/// fundamental-weight coordinates. Integer-valued and symmetric; short roots
/// have scaled squared length `2 det(Cartan)`.
pub struct ScaledPairing {
    adj: IntMatrix,
    d: Vec<i64>,
}

impl ScaledPairing {
    pub fn new(rs: &RootSystem) -> ScaledPairing {
        ScaledPairing {
            adj: rs.cartan.adjugate(),
            d: rs.d.clone(),
        }
    }

    pub fn pair(&self, x: &[i64], y: &[i64]) -> i64 {
        // adj * x is det(C) times the simple-root coordinates of x, and
        // (alpha_j, y) = d_j * y_j in fundamental-weight coordinates.
        let cx = self.adj.act(x);
        cx.iter()
            .zip(&self.d)
            .zip(y)
            .map(|((c, d), yy)| c * d * yy)
            .sum()
    }
}

/// Pairing against the sum of all positive coroots. Strictly increasing along
/// the dominance order, so `(coroot_height, lex)` is a linear extension of it.
pub fn coroot_height(rs: &RootSystem, mu: &Weight) -> i64 {
    rs.positive_roots
        .iter()
        .map(|r| rs.coroot_pairing(mu, r))
        .sum()
}

/// Normal form of the alternating sum `A_v = sum_w sign(w) e^{w(v)}`:
/// `None` when `v` lies on a reflection wall (so `A_v = 0`), otherwise the
/// dominant `mu` and sign with `A_v = sign * A_{mu + rho}`.
///
/// The descent only ever looks at one negative coordinate at a time, and a
/// zero coordinate anywhere along the way certifies the wall case, because a
/// weight fixed by any reflection descends to a dominant weight with a zero
/// coordinate.
pub fn reduce_alternating(rs: &RootSystem, v: &Weight) -> Option<(Weight, i32)> {
    let mut cur = v.0.clone();
    let mut sign = 1;
    'descend: loop {
        for i in 0..rs.rank {
            if cur[i] == 0 {
                return None;
            }
            if cur[i] < 0 {
                let ci = cur[i];
                for k in 0..rs.rank {
                    cur[k] -= ci * rs.cartan.get(k, i);
                }
                sign = -sign;
                continue 'descend;
            }
        }
        return Some((Weight(cur.iter().map(|c| c - 1).collect()), sign));
    }
}

/// `A_v = sum_w sign(w) e^{w(v)}` computed literally, with cancellation.
pub fn alternating_orbit_sum(wg: &WeylGroup, v: &Weight) -> BTreeMap<Weight, i64> {
    let mut out: BTreeMap<Weight, i64> = BTreeMap::new();
    for w in wg.elements() {
        *out.entry(w.act(v)).or_insert(0) += i64::from(w.sign);
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Dominant weight multiplicities of the irreducible module with highest
/// weight `lam`, by Freudenthal's recursion:
/// `((lam+rho,lam+rho) - (mu+rho,mu+rho)) m_mu
///    = 2 sum_{alpha>0} sum_{k>=1} (mu + k alpha, alpha) m_{mu + k alpha}`.
/// Weights are processed by increasing height of `lam - mu`, so every
/// multiplicity on the right is already known.
pub fn dominant_weight_multiplicities(
    rs: &RootSystem,
    wg: &WeylGroup,
    lam: &Weight,
) -> Result<BTreeMap<Weight, i64>> {
    let sat = saturated_set(rs, wg, lam)?;
    let full: BTreeSet<Weight> = sat.full_members.iter().cloned().collect();
    let sp = ScaledPairing::new(rs);
    let mut order: Vec<(i64, Weight)> = sat
        .dominant_members
        .iter()
        .map(|mu| {
            let rc = root_coords(rs, &lam.sub(mu)).expect("members differ by root sums");
            (rc.iter().sum::<i64>(), mu.clone())
        })
        .collect();
    order.sort();

    let mut table: BTreeMap<Weight, i64> = BTreeMap::new();
    let lam_rho = lam.add(&rs.rho);
    let top = sp.pair(&lam_rho.0, &lam_rho.0);
    for (ht, mu) in order {
        if ht == 0 {
            table.insert(mu, 1);
            continue;
        }
        let mu_rho = mu.add(&rs.rho);
        let lhs = top - sp.pair(&mu_rho.0, &mu_rho.0);
        assert!(
            lhs > 0,
            "lower weights sit strictly inside the rho-shifted shell"
        );
        let mut rhs = 0_i64;
        for alpha in &rs.positive_roots {
            let mut nu = mu.add(&alpha.fw);
            // Root strings through weights of a module are unbroken, so the
            // first miss ends the string.
            while full.contains(&nu) {
                let (dom, _) = dominant_descent(rs, &nu);
                let m = *table.get(&dom).expect("higher weights processed first");
                rhs += m * sp.pair(&nu.0, &alpha.fw.0);
                nu = nu.add(&alpha.fw);
            }
        }
        assert_eq!((2 * rhs) % lhs, 0, "Freudenthal division must be exact");
        let m = 2 * rhs / lhs;
        assert!(m >= 1, "dominant members of the saturated set carry weight");
        table.insert(mu, m);
    }
    Ok(table)
}

/// Memo of multiplicity tables, one per highest weight. Parameter-independent,
/// so one table can serve a whole verification suite; use one per root system.
#[derive(Default)]
pub struct CharTable {
    memo: BTreeMap<Weight, BTreeMap<Weight, i64>>,
}

impl CharTable {
    pub fn new() -> CharTable {
        CharTable::default()
    }

    /// Monomial coefficients of `chi_lam`.
    pub fn get(
        &mut self,
        rs: &RootSystem,
        wg: &WeylGroup,
        lam: &Weight,
    ) -> Result<&BTreeMap<Weight, i64>> {
        if !self.memo.contains_key(lam) {
            let t = dominant_weight_multiplicities(rs, wg, lam)?;
            self.memo.insert(lam.clone(), t);
        }
        Ok(self.memo.get(lam).unwrap())
    }
}

/// Expands a finite linear combination of Weyl characters (keys dominant)
/// into monomial coefficients, dropping exact zeros.
pub fn characters_to_monomials(
    rs: &RootSystem,
    wg: &WeylGroup,
    table: &mut CharTable,
    chars: &BTreeMap<Weight, Rat>,
) -> Result<BTreeMap<Weight, Rat>> {
    let mut out: BTreeMap<Weight, Rat> = BTreeMap::new();
    for (lam, coeff) in chars {
        if coeff.is_zero() {
            continue;
        }
        for (mu, &m) in table.get(rs, wg, lam)? {
            *out.entry(mu.clone()).or_insert_with(Rat::zero) += coeff.clone() * rat(m);
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// Weyl dimension formula: `prod_{alpha>0} (lam+rho, alpha) / (rho, alpha)`.
pub fn weyl_dimension(rs: &RootSystem, lam: &Weight) -> Result<BigInt> {
    if lam.rank() != rs.rank {
        return Err(Error::DimensionMismatch {
            expected: rs.rank,
            got: lam.rank(),
        });
    }
    if !lam.is_dominant() {
        return Err(Error::NotDominant {
            weight: lam.to_string(),
        });
    }
    let sp = ScaledPairing::new(rs);
    let lam_rho = lam.add(&rs.rho);
    let mut dim = Rat::one();
    for alpha in &rs.positive_roots {
        dim *= ratio(
            sp.pair(&lam_rho.0, &alpha.fw.0),
            sp.pair(&rs.rho.0, &alpha.fw.0),
        );
    }
    assert!(
        dim.is_integer(),
        "dimension formula must produce an integer"
    );
    Ok(dim.to_integer())
}

/// Full weight multiplicity map of `chi_lam`, by explicit polynomial division
/// of `A_{lam+rho}` by `A_rho` with leading terms taken in graded-lex order.
/// Independent of the Freudenthal route and much slower; this is the oracle
/// the tests compare against.
pub fn divide_alternants(
    rs: &RootSystem,
    wg: &WeylGroup,
    lam: &Weight,
) -> Result<BTreeMap<Weight, i64>> {
    if lam.rank() != rs.rank {
        return Err(Error::DimensionMismatch {
            expected: rs.rank,
            got: lam.rank(),
        });
    }
    if !lam.is_dominant() {
        return Err(Error::NotDominant {
            weight: lam.to_string(),
        });
    }
    let mut num = alternating_orbit_sum(wg, &lam.add(&rs.rho));
    let den = alternating_orbit_sum(wg, &rs.rho);
    let mut quo: BTreeMap<Weight, i64> = BTreeMap::new();
    let mut guard = 0;
    while !num.is_empty() {
        guard += 1;
        assert!(guard <= 1_000_000, "alternant division failed to terminate");
        let lead = num
            .keys()
            .max_by_key(|w| (coroot_height(rs, w), (*w).clone()))
            .unwrap()
            .clone();
        let c = num[&lead];
        // The leading term of A_rho is e^rho with coefficient 1, so each step
        // settles the quotient coefficient of lead - rho completely.
        let term = lead.sub(&rs.rho);
        for (w, dc) in &den {
            let key = term.add(w);
            let e = num.entry(key.clone()).or_insert(0);
            *e -= c * dc;
            if *e == 0 {
                num.remove(&key);
            }
        }
        assert!(quo.insert(term, c).is_none());
    }
    Ok(quo)
}
