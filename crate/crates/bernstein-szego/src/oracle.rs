//! Floating-point quadrature oracle on the torus.
//!
//! The torus is parametrized by one angle per simple coroot, so a weight with
//! fundamental-weight coordinates `lam` evaluates to the pure integer-
//! frequency wave `e^{i sum lam_j theta_j}`. On the uniform product grid
//! `theta_j = 2 pi k_j / N` the quadrature of a single exponential is exactly
//! the aliasing indicator, which makes the error analysis of everything else
//! transparent: integrands here are trigonometric polynomials divided by
//! `|c|^2` factors bounded away from zero, so errors decay geometrically in
//! `N`.
//!
//! Everything in this module is double precision by design; it is the
//! independent check against the exact rational machinery, not a second
//! source of truth.

use crate::bszcore::BszParams;
use crate::error::{Error, Result};
use crate::rational::{rat_to_f64, Rat};
use crate::rootsys::RootSystem;
use crate::symalg::coroot_height;
use crate::weightlat::{
    dominance_leq, dominant_box, is_sufficiently_deep, root_coords, saturated_set, Weight,
};
use crate::weylgrp::WeylGroup;
use num_complex::Complex64;
use std::collections::BTreeMap;
use std::f64::consts::TAU;

/// Uniform product grid with `n` nodes per torus dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorusGrid {
    pub rank: usize,
    pub n: usize,
}

impl TorusGrid {
    pub fn new(rank: usize, n: usize) -> TorusGrid {
        assert!(n >= 2, "grid needs at least two nodes per dimension");
        TorusGrid { rank, n }
    }

    /// Defaults tuned so |t| <= 1/2 gives far more than ten digits:
    /// 64 nodes per dimension through rank 2, 32 at rank 3, 16 at rank 4.
    pub fn default_for(rs: &RootSystem) -> TorusGrid {
        let n = match rs.rank {
            0..=2 => 64,
            3 => 32,
            _ => 16,
        };
        TorusGrid::new(rs.rank, n)
    }

    pub fn point_count(&self) -> usize {
        self.n.pow(self.rank as u32)
    }

    pub fn refine(&self) -> TorusGrid {
        TorusGrid::new(self.rank, self.n * 2)
    }

    fn for_each_node(&self, mut f: impl FnMut(&[usize])) {
        let mut ks = vec![0_usize; self.rank];
        loop {
            f(&ks);
            let mut i = 0;
            loop {
                if i == self.rank {
                    return;
                }
                ks[i] += 1;
                if ks[i] < self.n {
                    break;
                }
                ks[i] = 0;
                i += 1;
            }
        }
    }
}

/// Monomial-basis polynomial with float coefficients.
pub type NumPoly = BTreeMap<Weight, f64>;

pub fn to_num(poly: &BTreeMap<Weight, Rat>) -> NumPoly {
    poly.iter()
        .map(|(k, v)| (k.clone(), rat_to_f64(v)))
        .collect()
}

fn unit_table(n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|m| Complex64::from_polar(1.0, TAU * m as f64 / n as f64))
        .collect()
}

// Double-double scalars. The weight function spikes by several orders of
// magnitude near the zeros of `c` while the quadrature sum cancels back to
// order one, so node values carrying ~50 eps of product round-off leave
// ~1e-8 of debris in the rank-2 Gram matrices — the same order as the
// agreement tolerance. Keeping the per-node products in unevaluated
// double-double form makes every node value correctly rounded.

#[derive(Debug, Clone, Copy)]
struct Dd {
    hi: f64,
    lo: f64,
}

fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let bb = s - a;
    Dd {
        hi: s,
        lo: (a - (s - bb)) + (b - bb),
    }
}

fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    Dd {
        hi: p,
        lo: a.mul_add(b, -p),
    }
}

impl Dd {
    const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    fn renorm(hi: f64, lo: f64) -> Dd {
        let s = hi + lo;
        Dd {
            hi: s,
            lo: lo - (s - hi),
        }
    }

    fn add(self, o: Dd) -> Dd {
        let s = two_sum(self.hi, o.hi);
        Dd::renorm(s.hi, s.lo + self.lo + o.lo)
    }

    fn sub(self, o: Dd) -> Dd {
        self.add(Dd {
            hi: -o.hi,
            lo: -o.lo,
        })
    }

    fn mul(self, o: Dd) -> Dd {
        let p = two_prod(self.hi, o.hi);
        Dd::renorm(p.hi, p.lo + self.hi * o.lo + self.lo * o.hi)
    }

    fn mul_f64(self, b: f64) -> Dd {
        let p = two_prod(self.hi, b);
        Dd::renorm(p.hi, p.lo + self.lo * b)
    }

    fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.mul_f64(q1));
        Dd::renorm(q1, (r.hi + r.lo) / o.hi)
    }

    fn value(self) -> f64 {
        self.hi + self.lo
    }
}

#[derive(Debug, Clone, Copy)]
struct CDd {
    re: Dd,
    im: Dd,
}

impl CDd {
    const ONE: CDd = CDd {
        re: Dd::ONE,
        im: Dd::ZERO,
    };

    fn mul(self, o: CDd) -> CDd {
        CDd {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    fn norm_sqr(self) -> Dd {
        self.re.mul(self.re).add(self.im.mul(self.im))
    }
}

/// Parameter widened to double-double: `hi` is the rounded value and `lo`
/// the exactly computed rounding residue.
fn dd_from_rat(r: &Rat) -> Dd {
    let hi = rat_to_f64(r);
    let lo = Rat::from_float(hi)
        .map(|h| rat_to_f64(&(r - &h)))
        .unwrap_or(0.0);
    Dd { hi, lo }
}

/// `|1 - e^{i theta}|^2 = 4 sin^2(theta/2)` per phase class. The half-angle
/// form is accurate to rounding at every node, where `2 - 2 cos` near the
/// identity cancels down to ~1e-14 relative accuracy and the weight's other
/// factors amplify exactly that loss.
fn numerator_table(n: usize) -> Vec<Dd> {
    (0..n)
        .map(|k| {
            let s = 2.0 * (std::f64::consts::PI * k as f64 / n as f64).sin();
            two_prod(s, s)
        })
        .collect()
}

/// Values of the symmetric polynomial at every grid node, in node order.
pub fn evaluate_on_grid(wg: &WeylGroup, grid: &TorusGrid, poly: &NumPoly) -> Vec<Complex64> {
    let table = unit_table(grid.n);
    let mut exps: Vec<(Vec<i64>, f64)> = Vec::new();
    for (mu, c) in poly {
        for nu in wg.orbit(mu) {
            exps.push((nu.0, *c));
        }
    }
    let mut out = Vec::with_capacity(grid.point_count());
    grid.for_each_node(|ks| {
        let mut acc = Complex64::new(0.0, 0.0);
        for (fw, c) in &exps {
            let mut phase = 0_i64;
            for (f, k) in fw.iter().zip(ks) {
                phase += f * *k as i64;
            }
            acc += table[phase.rem_euclid(grid.n as i64) as usize] * *c;
        }
        out.push(acc);
    });
    out
}

fn class_floats(params: &BszParams, long: bool) -> Vec<f64> {
    params.class(long).iter().map(rat_to_f64).collect()
}

/// The orthogonality weight at one torus point (angles against the simple
/// coroots): product over positive roots of
/// `|1 - e^{i theta_alpha}|^2 / |c_class(e^{-i theta_alpha})|^2`.
pub fn weight_function(rs: &RootSystem, params: &BszParams, angles: &[f64]) -> f64 {
    assert_eq!(angles.len(), rs.rank);
    let ts = class_floats(params, false);
    let tl = class_floats(params, true);
    let mut acc = 1.0;
    for root in &rs.positive_roots {
        let theta: f64 = root
            .fw
            .0
            .iter()
            .zip(angles)
            .map(|(f, a)| *f as f64 * a)
            .sum();
        let u = Complex64::from_polar(1.0, theta);
        let mut c = Complex64::new(1.0, 0.0);
        for t in if root.long { &tl } else { &ts } {
            c *= Complex64::new(1.0, 0.0) + u.conj() * *t;
        }
        let s = 2.0 * (0.5 * theta).sin();
        acc *= s * s / c.norm_sqr();
    }
    acc
}

/// The weight at every grid node, in node order. Node values are carried in
/// double-double form down to a single final rounding.
pub fn weight_values(rs: &RootSystem, params: &BszParams, grid: &TorusGrid) -> Vec<f64> {
    let table = unit_table(grid.n);
    let numer = numerator_table(grid.n);
    let ts: Vec<Dd> = params.class(false).iter().map(dd_from_rat).collect();
    let tl: Vec<Dd> = params.class(true).iter().map(dd_from_rat).collect();
    let mut out = Vec::with_capacity(grid.point_count());
    grid.for_each_node(|ks| {
        let mut acc = Dd::ONE;
        for root in &rs.positive_roots {
            let mut phase = 0_i64;
            for (f, k) in root.fw.0.iter().zip(ks) {
                phase += f * *k as i64;
            }
            let idx = phase.rem_euclid(grid.n as i64) as usize;
            let u = table[idx];
            let mut c = CDd::ONE;
            for t in if root.long { &tl } else { &ts } {
                let factor = CDd {
                    re: t.mul_f64(u.re).add(Dd::ONE),
                    im: t.mul_f64(-u.im),
                };
                c = c.mul(factor);
            }
            acc = acc.mul(numer[idx].div(c.norm_sqr()));
        }
        out.push(acc.value());
    });
    out
}

/// Spike-node terms run to ~1e6 and cancel back down to order one, so the
/// product of each term is formed exactly and both halves feed a
/// Neumaier-compensated accumulator; given the node values the result is
/// good to double-double width.
fn inner_product_dd(
    f_vals: &[Complex64],
    g_vals: &[Complex64],
    w_vals: &[f64],
    weyl_order: u128,
) -> Dd {
    assert_eq!(f_vals.len(), g_vals.len());
    assert_eq!(f_vals.len(), w_vals.len());
    let mut s = 0.0_f64;
    let mut comp = 0.0_f64;
    for ((f, g), w) in f_vals.iter().zip(g_vals).zip(w_vals) {
        let re = two_prod(f.re, g.re).add(two_prod(f.im, g.im));
        let term = re.mul_f64(*w);
        for x in [term.hi, term.lo] {
            let t = s + x;
            comp += if s.abs() >= x.abs() {
                (s - t) + x
            } else {
                (x - t) + s
            };
            s = t;
        }
    }
    // Node count times Weyl order is a moderate integer, exact in f64.
    two_sum(s, comp).div(Dd {
        hi: f_vals.len() as f64 * weyl_order as f64,
        lo: 0.0,
    })
}

/// Quadrature inner product from cached node values:
/// `(1/|W|) * mean(f * conj(g) * weight)`, real part.
pub fn inner_product_values(
    f_vals: &[Complex64],
    g_vals: &[Complex64],
    w_vals: &[f64],
    weyl_order: u128,
) -> f64 {
    inner_product_dd(f_vals, g_vals, w_vals, weyl_order).value()
}

/// `<f, g>` by quadrature, for polynomials in the monomial basis with exact
/// rational coefficients.
pub fn inner_product_num(
    rs: &RootSystem,
    wg: &WeylGroup,
    params: &BszParams,
    grid: &TorusGrid,
    f: &BTreeMap<Weight, Rat>,
    g: &BTreeMap<Weight, Rat>,
) -> f64 {
    let fv = evaluate_on_grid(wg, grid, &to_num(f));
    let gv = evaluate_on_grid(wg, grid, &to_num(g));
    let wv = weight_values(rs, params, grid);
    inner_product_values(&fv, &gv, &wv, rs.weyl_order)
}

/// Which lower set the defining orthogonality conditions run over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderMode {
    /// Strictly-below in the dominance order: the defining conditions.
    Dominance,
    /// Strictly-below in the (coroot height, lex) linear extension, within
    /// the root-lattice coset of the target weight; a comparison mode.
    GradedLex,
}

fn support_for(
    rs: &RootSystem,
    wg: &WeylGroup,
    lam: &Weight,
    mode: OrderMode,
) -> Result<Vec<Weight>> {
    match mode {
        OrderMode::Dominance => Ok(saturated_set(rs, wg, lam)?.dominant_members),
        OrderMode::GradedLex => {
            let key = |w: &Weight| (coroot_height(rs, w), w.clone());
            let lam_key = key(lam);
            let bound = coroot_height(rs, lam).max(0);
            let mut out: Vec<Weight> = dominant_box(rs.rank, bound)
                .into_iter()
                .filter(|mu| key(mu) <= lam_key)
                .filter(|mu| root_coords(rs, &lam.sub(mu)).is_some())
                .collect();
            out.sort();
            Ok(out)
        }
    }
}

/// Monic polynomial orthogonal to every monomial strictly below `lam`,
/// solved numerically from the quadrature Gram matrix. This is the defining
/// construction, independent of any closed formula.
pub fn gram_schmidt_p(
    rs: &RootSystem,
    wg: &WeylGroup,
    lam: &Weight,
    params: &BszParams,
    grid: &TorusGrid,
    mode: OrderMode,
) -> Result<NumPoly> {
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
    let support = support_for(rs, wg, lam, mode)?;
    let others: Vec<&Weight> = support.iter().filter(|mu| *mu != lam).collect();
    let wv = weight_values(rs, params, grid);
    let vals: BTreeMap<&Weight, Vec<Complex64>> = support
        .iter()
        .map(|mu| {
            let single: NumPoly = [(mu.clone(), 1.0)].into_iter().collect();
            (mu, evaluate_on_grid(wg, grid, &single))
        })
        .collect();
    let gram = |a: &Weight, b: &Weight| inner_product_dd(&vals[a], &vals[b], &wv, rs.weyl_order);

    // Row per condition <p, m_mu> = 0, columns the unknown coefficients.
    // The Gram data stays at double-double width: its condition number runs
    // to ~1e6 on the rank-2 systems, which amplifies even the final rounding
    // of an entry past the agreement tolerances downstream.
    let m = others.len();
    let mut add = vec![Dd::ZERO; m * m];
    let mut rdd = vec![Dd::ZERO; m];
    for (r, mu) in others.iter().enumerate() {
        for (c, nu) in others.iter().enumerate() {
            add[r * m + c] = gram(nu, mu);
        }
        let g = gram(lam, mu);
        rdd[r] = Dd {
            hi: -g.hi,
            lo: -g.lo,
        };
    }

    let mut a: Vec<f64> = add.iter().map(|d| d.value()).collect();
    let rhs: Vec<f64> = rdd.iter().map(|d| d.value()).collect();
    let perm = lu_factor(&mut a, m, lam)?;
    let mut x = lu_solve(&a, &perm, m, &rhs);
    // Iterative refinement with residuals against the double-double data;
    // the rounded factorization is only the preconditioner.
    for _ in 0..3 {
        let r: Vec<f64> = (0..m)
            .map(|i| dd_residual(&add[i * m..(i + 1) * m], &x, rdd[i]))
            .collect();
        let delta = lu_solve(&a, &perm, m, &r);
        for (xi, di) in x.iter_mut().zip(&delta) {
            *xi += di;
        }
    }

    let mut out: NumPoly = BTreeMap::new();
    out.insert(lam.clone(), 1.0);
    for (c, mu) in others.iter().enumerate() {
        out.insert((*mu).clone(), x[c]);
    }
    Ok(out)
}

/// In-place LU with partial pivoting; refuses pivots tiny relative to the
/// matrix scale. Returns the row permutation.
fn lu_factor(a: &mut [f64], m: usize, lam: &Weight) -> Result<Vec<usize>> {
    let scale = a.iter().fold(1.0_f64, |acc, v| acc.max(v.abs()));
    let mut perm: Vec<usize> = (0..m).collect();
    for col in 0..m {
        let (best, best_abs) = (col..m)
            .map(|r| (r, a[r * m + col].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if best_abs < 1e-12 * scale {
            return Err(Error::Numeric {
                detail: format!(
                    "Gram system nearly singular at {lam}: pivot ratio {:.3e}",
                    best_abs / scale
                ),
            });
        }
        if best != col {
            for k in 0..m {
                a.swap(col * m + k, best * m + k);
            }
            perm.swap(col, best);
        }
        for r in col + 1..m {
            let factor = a[r * m + col] / a[col * m + col];
            a[r * m + col] = factor;
            for k in col + 1..m {
                a[r * m + k] -= factor * a[col * m + k];
            }
        }
    }
    Ok(perm)
}

fn lu_solve(a: &[f64], perm: &[usize], m: usize, b: &[f64]) -> Vec<f64> {
    let mut x: Vec<f64> = perm.iter().map(|&p| b[p]).collect();
    for col in 0..m {
        for r in col + 1..m {
            x[r] -= a[r * m + col] * x[col];
        }
    }
    for col in (0..m).rev() {
        for k in col + 1..m {
            let sub = a[col * m + k] * x[k];
            x[col] -= sub;
        }
        x[col] /= a[col * m + col];
    }
    x
}

/// `b - row . x` carried in double-double, so the residual is trustworthy
/// even when it is eps-sized relative to the operands.
fn dd_residual(row: &[Dd], x: &[f64], b: Dd) -> f64 {
    let mut acc = b;
    for (a, &xk) in row.iter().zip(x) {
        let p = a.mul_f64(xk);
        acc = acc.sub(p);
    }
    acc.value()
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct ScanEntry {
    pub lam: Weight,
    pub mu: Weight,
    /// Inner product at the refined grid.
    pub value: f64,
    /// |value at N - value at 2N|: the observable quadrature error.
    pub error_bound: f64,
    pub exceeds_threshold: bool,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct ScanReport {
    pub system: String,
    pub grid_n: usize,
    pub threshold: f64,
    pub ts: Vec<String>,
    pub tl: Vec<String>,
    pub bound: i64,
    pub note: String,
    pub entries: Vec<ScanEntry>,
}

/// The shallow-weight experiment: for every pair of dominant weights within
/// the coordinate bound where neither is sufficiently deep and the two are
/// dominance-incomparable, report the numeric `<p_lam, p_mu>` together with
/// a grid-refinement error bound. Exploratory output: entries say what was
/// measured, never pass/fail.
pub fn shallow_orthogonality_scan(
    rs: &RootSystem,
    wg: &WeylGroup,
    params: &BszParams,
    grid: &TorusGrid,
    bound: i64,
    threshold: f64,
) -> Result<ScanReport> {
    let shallow: Vec<Weight> = dominant_box(rs.rank, bound)
        .into_iter()
        .filter(|lam| !is_sufficiently_deep(rs, lam, params.ms(), params.ml()).unwrap())
        .collect();
    let fine = grid.refine();
    let mut coeff_cache: BTreeMap<(Weight, usize), NumPoly> = BTreeMap::new();
    let mut entries = Vec::new();
    for (i, lam) in shallow.iter().enumerate() {
        for mu in shallow.iter().skip(i + 1) {
            if dominance_leq(rs, lam, mu)? || dominance_leq(rs, mu, lam)? {
                continue;
            }
            let mut value_at = |g: &TorusGrid| -> Result<f64> {
                let mut poly = |w: &Weight| -> Result<NumPoly> {
                    if let Some(p) = coeff_cache.get(&(w.clone(), g.n)) {
                        return Ok(p.clone());
                    }
                    let p = gram_schmidt_p(rs, wg, w, params, g, OrderMode::Dominance)?;
                    coeff_cache.insert((w.clone(), g.n), p.clone());
                    Ok(p)
                };
                let pl = poly(lam)?;
                let pm = poly(mu)?;
                let wv = weight_values(rs, params, g);
                let fv = evaluate_on_grid(wg, g, &pl);
                let gv = evaluate_on_grid(wg, g, &pm);
                Ok(inner_product_values(&fv, &gv, &wv, rs.weyl_order))
            };
            let coarse = value_at(grid)?;
            let refined = value_at(&fine)?;
            entries.push(ScanEntry {
                lam: lam.clone(),
                mu: mu.clone(),
                value: refined,
                error_bound: (coarse - refined).abs(),
                exceeds_threshold: refined.abs() > threshold,
            });
        }
    }
    let note = if entries.is_empty() {
        if shallow.is_empty() {
            "every dominant weight in the box is sufficiently deep; nothing to scan".into()
        } else {
            "no dominance-incomparable pairs among the shallow weights in the box".into()
        }
    } else {
        String::new()
    };
    Ok(ScanReport {
        system: rs.name.to_string(),
        grid_n: grid.n,
        threshold,
        ts: params
            .class(false)
            .iter()
            .map(crate::rational::rat_str)
            .collect(),
        tl: params
            .class(true)
            .iter()
            .map(crate::rational::rat_str)
            .collect(),
        bound,
        note,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bszcore::{build_p, exact_pairing_p_m, monic_p, DEFAULT_EXPANSION_CAP};
    use crate::rational::{rat, rat_to_f64, ratio};
    use crate::rootsys::build_root_system;
    use crate::symalg::CharTable;
    use crate::univariate::{classic_norm, classic_p, ClassicParams};

    fn no_params(rs: &RootSystem) -> BszParams {
        BszParams::new(rs, vec![], vec![]).unwrap()
    }

    #[test]
    fn characters_orthonormal_at_zero_parameters() {
        // Alias-exactness: with small supports and N = 16 nothing aliases,
        // so character orthonormality holds to rounding error.
        for label in ["A1", "A2", "B2"] {
            let rs = build_root_system(label).unwrap();
            let wg = WeylGroup::enumerate(&rs);
            let mut table = CharTable::new();
            let grid = TorusGrid::new(rs.rank, 16);
            let p0 = no_params(&rs);
            for lam in dominant_box(rs.rank, 1) {
                for mu in dominant_box(rs.rank, 1) {
                    let chi_l: BTreeMap<Weight, Rat> = table
                        .get(&rs, &wg, &lam)
                        .unwrap()
                        .iter()
                        .map(|(k, v)| (k.clone(), rat(*v)))
                        .collect();
                    let chi_m: BTreeMap<Weight, Rat> = table
                        .get(&rs, &wg, &mu)
                        .unwrap()
                        .iter()
                        .map(|(k, v)| (k.clone(), rat(*v)))
                        .collect();
                    let v = inner_product_num(&rs, &wg, &p0, &grid, &chi_l, &chi_m);
                    let expected = f64::from(lam == mu);
                    assert!(
                        (v - expected).abs() < 1e-12,
                        "{label} {lam} {mu}: {v} vs {expected}"
                    );
                }
            }
        }
    }

    #[test]
    fn weight_function_matches_classic_a1() {
        let a1 = build_root_system("A1").unwrap();
        let t = 1.0 / 3.0;
        let params = BszParams::new(&a1, vec![ratio(1, 3)], vec![]).unwrap();
        for k in 1..7 {
            let theta = 0.4 * k as f64;
            // Classic form at x = theta: |e^{ix} - e^{-ix}|^2 / |1 + t e^{-2ix}|^2.
            let num = (2.0 * theta.sin()).powi(2);
            let den = Complex64::new(1.0 + t * (2.0 * theta).cos(), -t * (2.0 * theta).sin());
            let expected = num / den.norm_sqr();
            let got = weight_function(&a1, &params, &[theta]);
            assert!((got - expected).abs() < 1e-12, "theta = {theta}");
        }
        // The weight vanishes at the identity point.
        assert!(weight_function(&a1, &params, &[0.0]).abs() < 1e-30);
    }

    #[test]
    fn quadrature_matches_exact_pairing() {
        let a1 = build_root_system("A1").unwrap();
        let wg = WeylGroup::enumerate(&a1);
        let mut table = CharTable::new();
        let t = ratio(1, 3);
        let params = BszParams::new(&a1, vec![t.clone()], vec![]).unwrap();
        let grid = TorusGrid::new(1, 64);
        let p0 = build_p(&a1, &wg, &mut table, &Weight(vec![0]), &params, 1 << 20).unwrap();
        let m2: BTreeMap<Weight, Rat> = [(Weight(vec![2]), rat(1))].into_iter().collect();
        let num = inner_product_num(&a1, &wg, &params, &grid, &p0.mono_exp, &m2);
        let exact = exact_pairing_p_m(
            &a1,
            &wg,
            &Weight(vec![0]),
            &Weight(vec![2]),
            &params,
            1 << 20,
        )
        .unwrap();
        assert_eq!(exact, -(rat(1) + t));
        assert!((num - rat_to_f64(&exact)).abs() < 1e-10, "num = {num}");

        // Grid refinement moves the value by far less than the agreement
        // tolerance (analytic integrand).
        let num2 = inner_product_num(&a1, &wg, &params, &grid.refine(), &p0.mono_exp, &m2);
        assert!((num - num2).abs() < 1e-12);
    }

    #[test]
    fn gram_schmidt_recovers_exact_coefficients() {
        // A1 with one parameter: p_2 = m_2 + (1+t) m_0.
        let a1 = build_root_system("A1").unwrap();
        let wg1 = WeylGroup::enumerate(&a1);
        let t = ratio(1, 3);
        let params = BszParams::new(&a1, vec![t.clone()], vec![]).unwrap();
        let grid = TorusGrid::new(1, 64);
        let p = gram_schmidt_p(
            &a1,
            &wg1,
            &Weight(vec![2]),
            &params,
            &grid,
            OrderMode::Dominance,
        )
        .unwrap();
        assert!((p[&Weight(vec![2])] - 1.0).abs() < 1e-12);
        assert!((p[&Weight(vec![0])] - (1.0 + 1.0 / 3.0)).abs() < 1e-8);

        // Zero parameters reproduce character coefficients.
        let b2 = build_root_system("B2").unwrap();
        let wg2 = WeylGroup::enumerate(&b2);
        let mut table = CharTable::new();
        let p0 = no_params(&b2);
        let grid2 = TorusGrid::new(2, 32);
        let lam = Weight(vec![1, 1]);
        let gs = gram_schmidt_p(&b2, &wg2, &lam, &p0, &grid2, OrderMode::Dominance).unwrap();
        for (mu, mult) in table.get(&b2, &wg2, &lam).unwrap() {
            assert!((gs[mu] - *mult as f64).abs() < 1e-8, "{mu}");
        }

        // Deep weight on B2 with both classes parametrized vs the closed form.
        // |t| = 1/2 needs the finer grid: the aliasing error of the weight
        // function decays like |t|^(N/period) and N = 32 leaves ~1e-5 of it.
        let params2 = BszParams::new(&b2, vec![ratio(1, 2)], vec![ratio(-1, 3)]).unwrap();
        let lam2 = Weight(vec![1, 1]);
        let exact = monic_p(
            &b2,
            &wg2,
            &mut table,
            &lam2,
            &params2,
            DEFAULT_EXPANSION_CAP,
        )
        .unwrap();
        let fine = TorusGrid::new(2, 64);
        let gs2 = gram_schmidt_p(&b2, &wg2, &lam2, &params2, &fine, OrderMode::Dominance).unwrap();
        for (mu, c) in &exact.mono_exp {
            assert!((gs2[mu] - rat_to_f64(c)).abs() < 1e-8, "{mu}");
        }
        for (mu, c) in &gs2 {
            let e = exact.mono_exp.get(mu).map(rat_to_f64).unwrap_or(0.0);
            assert!((c - e).abs() < 1e-8, "{mu}");
        }
    }

    #[test]
    fn graded_lex_mode_matches_dominance_when_orders_agree() {
        // On A1 the dominance order within a parity class is total, so both
        // modes must coincide.
        let a1 = build_root_system("A1").unwrap();
        let wg = WeylGroup::enumerate(&a1);
        let params = BszParams::new(&a1, vec![ratio(2, 5)], vec![]).unwrap();
        let grid = TorusGrid::new(1, 64);
        for ell in 0..=4 {
            let lam = Weight(vec![ell]);
            let a = gram_schmidt_p(&a1, &wg, &lam, &params, &grid, OrderMode::Dominance).unwrap();
            let b = gram_schmidt_p(&a1, &wg, &lam, &params, &grid, OrderMode::GradedLex).unwrap();
            for (mu, c) in &a {
                assert!((c - b[mu]).abs() < 1e-9, "ell = {ell}, {mu}");
            }
            assert_eq!(a.len(), b.len());
        }
    }

    #[test]
    fn classic_polynomials_pass_quadrature() {
        // <p_ell, p_k> = delta / N_ell within 1e-10. The root doubles every
        // frequency, so the weight function aliases like |t|^(N/2 - deg);
        // N = 128 pushes that to ~1e-17 even at |t| = 1/2.
        let a1 = build_root_system("A1").unwrap();
        let wg = WeylGroup::enumerate(&a1);
        let grid = TorusGrid::new(1, 128);
        let draws: Vec<Vec<Rat>> = vec![vec![], vec![ratio(1, 2)], vec![ratio(-1, 3), ratio(2, 5)]];
        for ts in draws {
            let classic = ClassicParams::new(ts.clone()).unwrap();
            let params = BszParams::new(&a1, ts, vec![]).unwrap();
            let m = classic.m() as i64;
            let as_poly = |ell: i64| -> BTreeMap<Weight, Rat> {
                classic_p(ell, &classic)
                    .unwrap()
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !num_traits::Zero::is_zero(c))
                    .map(|(j, c)| (Weight(vec![j as i64]), c))
                    .collect()
            };
            for ell in (m - 1).max(0)..=5 {
                for k in (m - 1).max(0)..=ell {
                    let v = inner_product_num(&a1, &wg, &params, &grid, &as_poly(ell), &as_poly(k));
                    let expected = if k == ell {
                        1.0 / rat_to_f64(&classic_norm(ell, &classic).unwrap())
                    } else {
                        0.0
                    };
                    assert!(
                        (v - expected).abs() < 1e-10,
                        "ell = {ell}, k = {k}: {v} vs {expected}"
                    );
                }
            }
        }
    }

    #[test]
    fn shallow_scan_reports() {
        let b2 = build_root_system("B2").unwrap();
        let wg = WeylGroup::enumerate(&b2);
        let grid = TorusGrid::new(2, 32);

        // One parameter per class: every dominant weight is deep, so the
        // scan is legitimately empty.
        let p1 = BszParams::new(&b2, vec![ratio(1, 2)], vec![ratio(1, 3)]).unwrap();
        let empty = shallow_orthogonality_scan(&b2, &wg, &p1, &grid, 2, 1e-6).unwrap();
        assert!(empty.entries.is_empty());
        assert!(!empty.note.is_empty());

        // Two parameters per class: shallow pairs exist and the report is
        // deterministic.
        let p2 = BszParams::new(
            &b2,
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(1, 2), ratio(1, 3)],
        )
        .unwrap();
        let report = shallow_orthogonality_scan(&b2, &wg, &p2, &grid, 2, 1e-6).unwrap();
        assert!(!report.entries.is_empty());
        for e in &report.entries {
            assert!(e.error_bound.is_finite());
            assert!(e.value.is_finite());
        }
        let again = shallow_orthogonality_scan(&b2, &wg, &p2, &grid, 2, 1e-6).unwrap();
        assert_eq!(report.entries.len(), again.entries.len());
        for (a, b) in report.entries.iter().zip(&again.entries) {
            assert_eq!(a.value.to_bits(), b.value.to_bits());
            assert_eq!(a.error_bound.to_bits(), b.error_bound.to_bits());
        }
    }
}
