//! The Bernstein-Szego polynomial family attached to a root system.
//!
//! Each length class (short, long) carries a finite list of rational
//! parameters in (-1,1) minus zero. With no parameters the family reduces to
//! the Weyl characters; one parameter per class gives Hall-Littlewood-type
//! specializations. Everything is exact rational arithmetic.
//!
//! The three computational pillars:
//! - `build_p`: expand the defining alternating-sum formula. The product of
//!   per-root factors `sum_k e_k e^{k alpha}` is expanded once over a finite
//!   box of root-lattice shifts, and each populated shift `rho + lam - v`
//!   goes through the alternating reduction, which absorbs the whole
//!   Weyl-group sum and the Weyl-denominator division in one stroke.
//! - `normalization_constant`: closed product over the roots orthogonal to
//!   the shifted weight, evaluated at the bold parameter products. Only valid
//!   for sufficiently deep weights; shallow input is an error, never a guess.
//! - `exact_pairing_p_m`: the inner product against an orbit sum collapses to
//!   finitely many coefficients of one fixed kernel, the product over
//!   positive roots of `(1 - e^alpha) / c_class(e^alpha)` expanded as a power
//!   series on the positive root cone. The kernel depends only on the system
//!   and parameters, so one expansion serves a whole batch of pairings.

use crate::error::{Error, Result};
use crate::rational::{check_parameter, pow, Rat};
use crate::rootsys::RootSystem;
use crate::symalg::{characters_to_monomials, reduce_alternating, CharTable};
use crate::weightlat::{
    dominance_leq, is_sufficiently_deep, lambda_tilde, min_pairing_long, min_pairing_short,
    root_coords, Weight,
};
use crate::weylgrp::{orthogonal_root_stats, WeylGroup};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Cell budget for product expansions (`build_p` boxes and pairing kernels).
/// Measured in lattice cells actually allocated, the quantity that costs
/// memory and time.
pub const DEFAULT_EXPANSION_CAP: u128 = 1_000_000;

/// Per-length-class parameter lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BszParams {
    ts: Vec<Rat>,
    tl: Vec<Rat>,
}

impl BszParams {
    /// Validates every parameter into (-1,1) excluding 0, and refuses long
    /// parameters on simply-laced systems (their long class is empty).
    pub fn new(rs: &RootSystem, ts: Vec<Rat>, tl: Vec<Rat>) -> Result<BszParams> {
        for t in ts.iter().chain(tl.iter()) {
            check_parameter(t)?;
        }
        if rs.simply_laced && !tl.is_empty() {
            return Err(Error::ParameterDomain {
                detail: format!(
                    "{} is simply-laced: long-root parameters are not accepted",
                    rs.name
                ),
            });
        }
        Ok(BszParams { ts, tl })
    }

    pub fn ms(&self) -> usize {
        self.ts.len()
    }

    pub fn ml(&self) -> usize {
        self.tl.len()
    }

    pub fn class(&self, long: bool) -> &[Rat] {
        if long {
            &self.tl
        } else {
            &self.ts
        }
    }

    /// Minus the product of the class parameters; -1 for an empty class, a
    /// convention only ever touched by factors with exponent zero (asserted
    /// where the factors are formed).
    pub fn bold(&self, long: bool) -> Rat {
        -self
            .class(long)
            .iter()
            .fold(Rat::one(), |acc, t| acc * t.clone())
    }
}

/// Coefficients of `c(z) = prod_m (1 + t_m z)`: elementary symmetric
/// functions, length M+1, leading 1.
pub fn c_coefficients(params: &BszParams, long: bool) -> Vec<Rat> {
    let ts = params.class(long);
    let mut e = vec![Rat::one()];
    for t in ts {
        e.push(Rat::zero());
        for k in (1..e.len()).rev() {
            let bump = e[k - 1].clone() * t.clone();
            e[k] += bump;
        }
    }
    e
}

/// Taylor coefficients `f_0..f_{n_max}` of `1/c(z)` around 0, from the
/// convolution identity `sum_j e_j f_{n-j} = [n = 0]`.
pub fn inv_c_coefficients(params: &BszParams, long: bool, n_max: usize) -> Vec<Rat> {
    let e = c_coefficients(params, long);
    let mut f = vec![Rat::one()];
    for n in 1..=n_max {
        let mut acc = Rat::zero();
        for j in 1..e.len().min(n + 1) {
            acc += e[j].clone() * f[n - j].clone();
        }
        f.push(-acc);
    }
    f
}

// Box polynomials: coefficients over `0 <= v_i <= bounds[i]` in simple-root
// coordinates, flattened with coordinate 0 fastest. `linear_index` matches
// the `for_each_cell` enumeration order exactly.

fn cell_count(bounds: &[i64]) -> u128 {
    bounds
        .iter()
        .fold(1_u128, |acc, &b| acc.saturating_mul(b as u128 + 1))
}

fn linear_index(bounds: &[i64], coords: &[i64]) -> usize {
    let mut idx = 0_usize;
    let mut stride = 1_usize;
    for (c, b) in coords.iter().zip(bounds) {
        idx += *c as usize * stride;
        stride *= *b as usize + 1;
    }
    idx
}

fn for_each_cell(bounds: &[i64], mut f: impl FnMut(&[i64], usize)) {
    let mut coords = vec![0_i64; bounds.len()];
    let mut idx = 0_usize;
    loop {
        f(&coords, idx);
        idx += 1;
        let mut i = 0;
        loop {
            if i == coords.len() {
                return;
            }
            coords[i] += 1;
            if coords[i] <= bounds[i] {
                break;
            }
            coords[i] = 0;
            i += 1;
        }
    }
}

/// Multiply the box polynomial by `sum_k series[k] e^{k * step}`, `step` in
/// simple-root coordinates, truncating to the box.
fn multiply_series(bounds: &[i64], data: &mut Vec<Rat>, step: &[i64], series: &[Rat]) {
    let mut out = vec![Rat::zero(); data.len()];
    let rank = bounds.len();
    let mut target = vec![0_i64; rank];
    for_each_cell(bounds, |coords, idx| {
        if data[idx].is_zero() {
            return;
        }
        'terms: for (k, g) in series.iter().enumerate() {
            for i in 0..rank {
                target[i] = coords[i] + k as i64 * step[i];
                if target[i] > bounds[i] {
                    break 'terms;
                }
            }
            if g.is_zero() {
                continue;
            }
            out[linear_index(bounds, &target)] += data[idx].clone() * g.clone();
        }
    });
    *data = out;
}

fn check_dominant(rs: &RootSystem, lam: &Weight) -> Result<()> {
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
    Ok(())
}

fn deep_or_error(rs: &RootSystem, lam: &Weight, params: &BszParams) -> Result<()> {
    if is_sufficiently_deep(rs, lam, params.ms(), params.ml())? {
        return Ok(());
    }
    let ms = min_pairing_short(rs, lam)?;
    let long_part = match min_pairing_long(rs, lam)? {
        Some(m) => format!(", min long coroot pairing {m} vs M_l = {}", params.ml()),
        None => String::new(),
    };
    Err(Error::NotDeep {
        weight: lam.to_string(),
        detail: format!(
            "min short coroot pairing {ms} vs M_s = {}{long_part}; both must reach M - 1",
            params.ms()
        ),
    })
}

/// One polynomial of the family, in both the character and monomial bases.
#[derive(Debug, Clone)]
pub struct BszPolynomial {
    pub lam: Weight,
    pub params: BszParams,
    /// Coefficients on Weyl characters.
    pub char_exp: BTreeMap<Weight, Rat>,
    /// Coefficients on monomial orbit sums.
    pub mono_exp: BTreeMap<Weight, Rat>,
    /// Present exactly when `lam` is sufficiently deep.
    pub norm_const: Option<Rat>,
    pub deep: bool,
    /// Whether every monomial key is dominance-below `lam`. Guaranteed (and
    /// asserted) in the deep case; recorded as data otherwise.
    pub triangular: bool,
}

/// Expands the defining formula for `P_lam`.
///
/// The per-root factors multiply out over the box `sum_alpha M(alpha) alpha`
/// of possible shifts; each populated cell `v` sends `rho + lam - v` through
/// the alternating reduction and lands on a signed character. `cap` bounds
/// the number of box cells.
pub fn build_p(
    rs: &RootSystem,
    wg: &WeylGroup,
    table: &mut CharTable,
    lam: &Weight,
    params: &BszParams,
    cap: u128,
) -> Result<BszPolynomial> {
    check_dominant(rs, lam)?;
    let rank = rs.rank;
    let mut bounds = vec![0_i64; rank];
    for root in &rs.positive_roots {
        let m = params.class(root.long).len() as i64;
        for i in 0..rank {
            bounds[i] += m * root.sr[i];
        }
    }
    let cells = cell_count(&bounds);
    if cells > cap {
        return Err(Error::CapExceeded { needed: cells, cap });
    }

    let mut data = vec![Rat::zero(); cells as usize];
    data[0] = Rat::one();
    let e_short = c_coefficients(params, false);
    let e_long = c_coefficients(params, true);
    for root in &rs.positive_roots {
        let series = if root.long { &e_long } else { &e_short };
        multiply_series(&bounds, &mut data, &root.sr, series);
    }

    let shifted_base = lam.add(&rs.rho);
    let mut char_exp: BTreeMap<Weight, Rat> = BTreeMap::new();
    for_each_cell(&bounds, |coords, idx| {
        if data[idx].is_zero() {
            return;
        }
        let mut fw = shifted_base.0.clone();
        for (j, &c) in coords.iter().enumerate() {
            if c != 0 {
                for i in 0..rank {
                    fw[i] -= c * rs.cartan.get(i, j);
                }
            }
        }
        if let Some((mu, sign)) = reduce_alternating(rs, &Weight(fw)) {
            let term = if sign >= 0 {
                data[idx].clone()
            } else {
                -data[idx].clone()
            };
            *char_exp.entry(mu).or_insert_with(Rat::zero) += term;
        }
    });
    char_exp.retain(|_, v| !v.is_zero());

    let mono_exp = characters_to_monomials(rs, wg, table, &char_exp)?;
    let deep = is_sufficiently_deep(rs, lam, params.ms(), params.ml())?;
    let triangular = mono_exp
        .keys()
        .all(|mu| dominance_leq(rs, mu, lam).expect("ranks agree"));

    let norm_const = if deep {
        assert!(triangular, "deep weights expand triangularly");
        let n = normalization_constant(rs, lam, params)?;
        assert_eq!(
            mono_exp.get(lam),
            Some(&n),
            "leading coefficient must equal the normalization constant"
        );
        Some(n)
    } else {
        None
    };

    Ok(BszPolynomial {
        lam: lam.clone(),
        params: params.clone(),
        char_exp,
        mono_exp,
        norm_const,
        deep,
        triangular,
    })
}

/// Closed form for the leading coefficient / quadratic norm `N_lam`: product
/// over positive roots orthogonal to the shifted weight of
/// `(1 - bs^{1+hs} bl^{hl}) / (1 - bs^{hs} bl^{hl})` for short roots, with
/// the extra power on `bl` instead for long ones, all at the bold parameter
/// products. Defined only for sufficiently deep `lam`.
pub fn normalization_constant(rs: &RootSystem, lam: &Weight, params: &BszParams) -> Result<Rat> {
    check_dominant(rs, lam)?;
    deep_or_error(rs, lam, params)?;
    let lt = lambda_tilde(rs, lam, params.ms(), params.ml())?;
    assert!(lt.is_dominant(), "deep weights shift to dominant weights");
    let bs = params.bold(false);
    let bl = params.bold(true);
    let mut acc = Rat::one();
    for (long, hs, hl) in orthogonal_root_stats(rs, &lt)? {
        let (ns, nl) = if long { (hs, hl + 1) } else { (hs + 1, hl) };
        // An empty parameter class has bold value -1; factors touching it
        // cannot arise for deep weights (the shift geometry excludes them).
        assert!(
            params.ms() > 0 || ns == 0,
            "short factor arose with M_s = 0"
        );
        assert!(params.ml() > 0 || nl == 0, "long factor arose with M_l = 0");
        let denom = Rat::one() - pow(&bs, hs as u32) * pow(&bl, hl as u32);
        if denom.is_zero() {
            return Err(Error::SingularDenominator {
                detail: format!("norm factor with exponents ({hs},{hl}) vanishes"),
            });
        }
        acc *= (Rat::one() - pow(&bs, ns as u32) * pow(&bl, nl as u32)) / denom;
    }
    Ok(acc)
}

/// `build_p` rescaled by `1/N_lam` so the top monomial coefficient is 1.
/// Requires a sufficiently deep weight.
pub fn monic_p(
    rs: &RootSystem,
    wg: &WeylGroup,
    table: &mut CharTable,
    lam: &Weight,
    params: &BszParams,
    cap: u128,
) -> Result<BszPolynomial> {
    deep_or_error(rs, lam, params)?;
    let mut p = build_p(rs, wg, table, lam, params, cap)?;
    let n = p
        .norm_const
        .clone()
        .expect("deep polynomials carry their norm");
    for v in p.char_exp.values_mut() {
        *v /= n.clone();
    }
    for v in p.mono_exp.values_mut() {
        *v /= n.clone();
    }
    assert_eq!(p.mono_exp.get(lam), Some(&Rat::one()));
    Ok(p)
}

/// The expanded pairing kernel: coefficients of
/// `prod_{alpha > 0} (1 - e^alpha) / c_class(e^alpha)` over the box
/// `0..=bounds[i]` of simple-root coordinates.
pub struct CtKernel {
    bounds: Vec<i64>,
    coeffs: Vec<Rat>,
}

impl CtKernel {
    pub fn new(rs: &RootSystem, params: &BszParams, bounds: &[i64], cap: u128) -> Result<CtKernel> {
        assert_eq!(bounds.len(), rs.rank);
        assert!(bounds.iter().all(|&b| b >= 0));
        let cells = cell_count(bounds);
        if cells > cap {
            return Err(Error::CapExceeded { needed: cells, cap });
        }
        let mut coeffs = vec![Rat::zero(); cells as usize];
        coeffs[0] = Rat::one();
        for root in &rs.positive_roots {
            // Largest multiple of this root fitting inside the box; the
            // series (1 - e^alpha)/c(e^alpha) is cut there.
            let k_max = root
                .sr
                .iter()
                .zip(bounds)
                .filter(|(&s, _)| s > 0)
                .map(|(&s, &b)| b / s)
                .min()
                .expect("positive roots have a positive coordinate");
            let f = inv_c_coefficients(params, root.long, k_max as usize);
            let mut g = Vec::with_capacity(f.len() + 1);
            for n in 0..f.len() {
                g.push(if n == 0 {
                    f[0].clone()
                } else {
                    f[n].clone() - f[n - 1].clone()
                });
            }
            multiply_series(bounds, &mut coeffs, &root.sr, &g);
        }
        Ok(CtKernel {
            bounds: bounds.to_vec(),
            coeffs,
        })
    }

    /// Coefficient at the cell with the given simple-root coordinates.
    pub fn coeff(&self, v: &[i64]) -> &Rat {
        assert!(
            v.iter().zip(&self.bounds).all(|(&c, &b)| c >= 0 && c <= b),
            "kernel box too small for requested exponent"
        );
        &self.coeffs[linear_index(&self.bounds, v)]
    }

    pub fn bounds(&self) -> &[i64] {
        &self.bounds
    }
}

/// Simple-root coordinates of `mu - lam` clamped to the positive cone, the
/// exact kernel box needed to pair `P_lam` against `m_mu`; `None` when the
/// pairing is structurally zero (difference outside the root lattice, or no
/// orbit point of `mu` reaches `lam` through the positive cone).
pub fn pairing_box(rs: &RootSystem, lam: &Weight, mu: &Weight) -> Option<Vec<i64>> {
    let diff = root_coords(rs, &mu.sub(lam))?;
    if diff.iter().any(|&c| c < 0) {
        // Every orbit point nu of mu has nu - lam <= mu - lam coordinatewise,
        // so a negative coordinate rules out the whole orbit.
        return None;
    }
    Some(diff)
}

/// `<P_lam, m_mu>` using a prebuilt kernel (which must cover the pairing
/// box). The orbit sum form already accounts for the stabilizer of `mu`.
pub fn exact_pairing_p_m_with(
    rs: &RootSystem,
    wg: &WeylGroup,
    kernel: &CtKernel,
    lam: &Weight,
    mu: &Weight,
) -> Result<Rat> {
    check_dominant(rs, lam)?;
    check_dominant(rs, mu)?;
    let mut acc = Rat::zero();
    for nu in wg.orbit(mu) {
        if let Some(v) = root_coords(rs, &nu.sub(lam)) {
            if v.iter().all(|&c| c >= 0) {
                acc += kernel.coeff(&v).clone();
            }
        }
    }
    Ok(acc)
}

/// `<P_lam, m_mu>`, exact. Builds a kernel sized for this single call; batch
/// users should share one via [`CtKernel`] and [`exact_pairing_p_m_with`].
pub fn exact_pairing_p_m(
    rs: &RootSystem,
    wg: &WeylGroup,
    lam: &Weight,
    mu: &Weight,
    params: &BszParams,
    cap: u128,
) -> Result<Rat> {
    check_dominant(rs, lam)?;
    check_dominant(rs, mu)?;
    let bounds = match pairing_box(rs, lam, mu) {
        None => return Ok(Rat::zero()),
        Some(b) => b,
    };
    let kernel = CtKernel::new(rs, params, &bounds, cap)?;
    exact_pairing_p_m_with(rs, wg, &kernel, lam, mu)
}

/// `<P_lam, P_mu>` by bilinearity over the monomial expansion of `P_mu`
/// (coefficients are real rationals, so conjugation is trivial).
pub fn exact_pairing_p_p(
    rs: &RootSystem,
    wg: &WeylGroup,
    table: &mut CharTable,
    lam: &Weight,
    mu: &Weight,
    params: &BszParams,
    cap: u128,
) -> Result<Rat> {
    let p_mu = build_p(rs, wg, table, mu, params, cap)?;
    // One kernel sized for all monomial keys of P_mu at once.
    let mut bounds = vec![0_i64; rs.rank];
    let mut any = false;
    for nu in p_mu.mono_exp.keys() {
        if let Some(b) = pairing_box(rs, lam, nu) {
            for i in 0..rs.rank {
                bounds[i] = bounds[i].max(b[i]);
            }
            any = true;
        }
    }
    if !any {
        return Ok(Rat::zero());
    }
    let kernel = CtKernel::new(rs, params, &bounds, cap)?;
    let mut acc = Rat::zero();
    for (nu, c) in &p_mu.mono_exp {
        if pairing_box(rs, lam, nu).is_some() {
            acc += c.clone() * exact_pairing_p_m_with(rs, wg, &kernel, lam, nu)?;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};
    use crate::rootsys::build_root_system;
    use crate::weightlat::dominant_box;
    use crate::weylgrp::poincare_enumerated;

    fn params(rs: &RootSystem, ts: &[(i64, i64)], tl: &[(i64, i64)]) -> BszParams {
        BszParams::new(
            rs,
            ts.iter().map(|&(p, q)| ratio(p, q)).collect(),
            tl.iter().map(|&(p, q)| ratio(p, q)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn params_domain_enforced() {
        let a2 = build_root_system("A2").unwrap();
        let b2 = build_root_system("B2").unwrap();
        assert!(BszParams::new(&a2, vec![rat(0)], vec![]).is_err());
        assert!(BszParams::new(&a2, vec![rat(1)], vec![]).is_err());
        assert!(BszParams::new(&a2, vec![ratio(-3, 2)], vec![]).is_err());
        // Long parameters are rejected exactly on simply-laced systems.
        assert!(BszParams::new(&a2, vec![], vec![ratio(1, 2)]).is_err());
        assert!(BszParams::new(&b2, vec![], vec![ratio(1, 2)]).is_ok());
    }

    #[test]
    fn bold_values() {
        let b2 = build_root_system("B2").unwrap();
        let p = params(&b2, &[], &[]);
        assert_eq!(p.bold(false), rat(-1));
        assert_eq!(p.bold(true), rat(-1));
        let p = params(&b2, &[(1, 2), (1, 3)], &[(1, 5)]);
        assert_eq!(p.bold(false), ratio(-1, 6));
        assert_eq!(p.bold(true), ratio(-1, 5));
    }

    #[test]
    fn c_coefficients_frozen() {
        let a1 = build_root_system("A1").unwrap();
        assert_eq!(c_coefficients(&params(&a1, &[], &[]), false), vec![rat(1)]);
        assert_eq!(
            c_coefficients(&params(&a1, &[(1, 3)], &[]), false),
            vec![rat(1), ratio(1, 3)]
        );
        assert_eq!(
            c_coefficients(&params(&a1, &[(1, 2), (-1, 3)], &[]), false),
            vec![rat(1), ratio(1, 6), ratio(-1, 6)]
        );
    }

    #[test]
    fn inv_c_convolves_to_one() {
        let a1 = build_root_system("A1").unwrap();
        let cases = [
            params(&a1, &[], &[]),
            params(&a1, &[(1, 3)], &[]),
            params(&a1, &[(1, 2), (-1, 3)], &[]),
            params(&a1, &[(1, 2), (1, 3), (1, 5)], &[]),
        ];
        for p in &cases {
            let e = c_coefficients(p, false);
            let f = inv_c_coefficients(p, false, 6);
            for n in 0..=6 {
                let mut conv = Rat::zero();
                for j in 0..e.len().min(n + 1) {
                    conv += e[j].clone() * f[n - j].clone();
                }
                assert_eq!(conv, if n == 0 { rat(1) } else { rat(0) });
            }
        }
        // Geometric series for one parameter.
        let f = inv_c_coefficients(&params(&a1, &[(1, 3)], &[]), false, 4);
        for (n, fv) in f.iter().enumerate() {
            assert_eq!(*fv, pow(&ratio(-1, 3), n as u32));
        }
        // M = 2 frozen values.
        let f = inv_c_coefficients(&params(&a1, &[(1, 2), (-1, 3)], &[]), false, 2);
        assert_eq!(f, vec![rat(1), ratio(-1, 6), ratio(7, 36)]);
    }

    fn setup(label: &str) -> (RootSystem, WeylGroup, CharTable) {
        let rs = build_root_system(label).unwrap();
        let wg = WeylGroup::enumerate(&rs);
        (rs, wg, CharTable::new())
    }

    #[test]
    fn build_p_reduces_to_characters_without_parameters() {
        let (b2, wg, mut table) = setup("B2");
        let p0 = params(&b2, &[], &[]);
        for lam in dominant_box(2, 2) {
            let p = build_p(&b2, &wg, &mut table, &lam, &p0, DEFAULT_EXPANSION_CAP).unwrap();
            assert_eq!(p.char_exp.len(), 1);
            assert_eq!(p.char_exp[&lam], rat(1));
            assert_eq!(p.norm_const, Some(rat(1)));
            assert!(p.deep && p.triangular);
        }
    }

    #[test]
    fn build_p_a1_frozen_examples() {
        let (a1, wg, mut table) = setup("A1");

        // One parameter, lam = [2]: chi_2 + t chi_0, monomials m_2 + (1+t) m_0.
        let t = ratio(1, 3);
        let p1 = BszParams::new(&a1, vec![t.clone()], vec![]).unwrap();
        let p = build_p(
            &a1,
            &wg,
            &mut table,
            &Weight(vec![2]),
            &p1,
            DEFAULT_EXPANSION_CAP,
        )
        .unwrap();
        assert_eq!(p.char_exp[&Weight(vec![2])], rat(1));
        assert_eq!(p.char_exp[&Weight(vec![0])], t.clone());
        assert_eq!(p.char_exp.len(), 2);
        assert_eq!(p.mono_exp[&Weight(vec![2])], rat(1));
        assert_eq!(p.mono_exp[&Weight(vec![0])], rat(1) + t.clone());
        assert_eq!(p.norm_const, Some(rat(1)));

        // Boundary depth: two parameters, lam = [1] has leading 1 - t1 t2.
        let p2 = params(&a1, &[(1, 2), (1, 3)], &[]);
        let p = build_p(
            &a1,
            &wg,
            &mut table,
            &Weight(vec![1]),
            &p2,
            DEFAULT_EXPANSION_CAP,
        )
        .unwrap();
        assert_eq!(p.mono_exp[&Weight(vec![1])], rat(1) - ratio(1, 6));
        assert_eq!(p.mono_exp.len(), 1);
        assert_eq!(p.norm_const, Some(ratio(5, 6)));
    }

    #[test]
    fn normalization_examples() {
        let (a1, _, _) = setup("A1");
        let p3 = params(&a1, &[(1, 2), (1, 3), (1, 5)], &[]);
        // ell = M - 1: N = 1 - t1 t2 t3 = 29/30.
        assert_eq!(
            normalization_constant(&a1, &Weight(vec![2]), &p3).unwrap(),
            ratio(29, 30)
        );
        // ell >= M: strongly dominant shift, empty product.
        for ell in 3..=6 {
            assert_eq!(
                normalization_constant(&a1, &Weight(vec![ell]), &p3).unwrap(),
                rat(1)
            );
        }
        // Below depth: refused with the diagnostic error, not extrapolated.
        match normalization_constant(&a1, &Weight(vec![1]), &p3) {
            Err(Error::NotDeep { .. }) => {}
            other => panic!("expected NotDeep, got {other:?}"),
        }
    }

    #[test]
    fn norm_matches_stabilizer_poincare_at_bold_values() {
        // Independent route: enumerate the stabilizer of the shifted weight
        // and evaluate its length generating function at the bold products.
        for (label, ts, tl) in [
            ("B2", vec![(1, 2), (-1, 3)], vec![(2, 5)]),
            ("G2", vec![(1, 3)], vec![(1, 2), (1, 7)]),
            ("A2", vec![(3, 4), (-1, 5)], vec![]),
        ] {
            let (rs, wg, _) = setup(label);
            let p = params(&rs, &ts, &tl);
            for lam in dominant_box(rs.rank, 3) {
                if !is_sufficiently_deep(&rs, &lam, p.ms(), p.ml()).unwrap() {
                    continue;
                }
                let n = normalization_constant(&rs, &lam, &p).unwrap();
                let lt = lambda_tilde(&rs, &lam, p.ms(), p.ml()).unwrap();
                let stab = wg.stabilizer(&lt);
                let reference = poincare_enumerated(
                    stab.iter().map(|&i| wg.element(i)),
                    &p.bold(false),
                    &p.bold(true),
                );
                assert_eq!(n, reference, "{label} {lam}");
            }
        }
    }

    #[test]
    fn monic_p_is_monic() {
        let (a1, wg, mut table) = setup("A1");
        let p2 = params(&a1, &[(1, 2), (1, 3)], &[]);
        let p = monic_p(
            &a1,
            &wg,
            &mut table,
            &Weight(vec![1]),
            &p2,
            DEFAULT_EXPANSION_CAP,
        )
        .unwrap();
        assert_eq!(p.mono_exp[&Weight(vec![1])], rat(1));
        assert!(monic_p(
            &a1,
            &wg,
            &mut table,
            &Weight(vec![0]),
            &p2,
            DEFAULT_EXPANSION_CAP
        )
        .is_err());
    }

    #[test]
    fn expansion_cap_enforced() {
        let (g2, wg, mut table) = setup("G2");
        let p = params(&g2, &[(1, 2), (1, 3)], &[(1, 5), (1, 7)]);
        match build_p(&g2, &wg, &mut table, &Weight(vec![2, 2]), &p, 10) {
            Err(Error::CapExceeded { needed, cap: 10 }) => assert!(needed > 10),
            other => panic!("expected CapExceeded, got {other:?}"),
        }
    }

    #[test]
    fn pairing_frozen_a1() {
        let (a1, wg, _) = setup("A1");
        let t = ratio(1, 3);
        let p1 = BszParams::new(&a1, vec![t.clone()], vec![]).unwrap();
        // mu = lam gives 1 for every lam, deep or not.
        for ell in 0..=4 {
            assert_eq!(
                exact_pairing_p_m(
                    &a1,
                    &wg,
                    &Weight(vec![ell]),
                    &Weight(vec![ell]),
                    &p1,
                    1 << 20
                )
                .unwrap(),
                rat(1)
            );
        }
        // mu strictly below lam: structurally zero.
        assert_eq!(
            exact_pairing_p_m(&a1, &wg, &Weight(vec![2]), &Weight(vec![0]), &p1, 1 << 20).unwrap(),
            rat(0)
        );
        // mu = [2] above lam = [0]: the one interesting hand value, -(1+t).
        assert_eq!(
            exact_pairing_p_m(&a1, &wg, &Weight(vec![0]), &Weight(vec![2]), &p1, 1 << 20).unwrap(),
            -(rat(1) + t)
        );
    }

    #[test]
    fn pairing_p_p_frozen_a1() {
        let (a1, wg, mut table) = setup("A1");
        let t = ratio(1, 3);
        let p1 = BszParams::new(&a1, vec![t.clone()], vec![]).unwrap();
        let cap = DEFAULT_EXPANSION_CAP;
        let pp = |l: i64, m: i64, table: &mut CharTable| {
            exact_pairing_p_p(
                &a1,
                &wg,
                table,
                &Weight(vec![l]),
                &Weight(vec![m]),
                &p1,
                cap,
            )
            .unwrap()
        };
        // Diagonal values are the norm constants.
        assert_eq!(pp(0, 0, &mut table), rat(1) - t.clone());
        assert_eq!(pp(2, 2, &mut table), rat(1));
        // Off-diagonal vanishes from both sides.
        assert_eq!(pp(0, 2, &mut table), rat(0));
        assert_eq!(pp(2, 0, &mut table), rat(0));

        // Two parameters at the depth boundary.
        let p2 = params(&a1, &[(1, 2), (1, 3)], &[]);
        let v = exact_pairing_p_p(
            &a1,
            &wg,
            &mut table,
            &Weight(vec![1]),
            &Weight(vec![1]),
            &p2,
            cap,
        )
        .unwrap();
        assert_eq!(v, ratio(5, 6));
    }

    #[test]
    fn characters_are_orthonormal_without_parameters() {
        let (b2, wg, mut table) = setup("B2");
        let p0 = params(&b2, &[], &[]);
        for lam in dominant_box(2, 1) {
            for mu in dominant_box(2, 1) {
                let v = exact_pairing_p_p(&b2, &wg, &mut table, &lam, &mu, &p0, 1 << 20).unwrap();
                assert_eq!(v, rat(i64::from(lam == mu)), "{lam} {mu}");
            }
        }
    }

    #[test]
    fn pairing_batch_kernel_matches_per_call() {
        let (b2, wg, _) = setup("B2");
        let p = params(&b2, &[(1, 2)], &[(-1, 3)]);
        let lam = Weight(vec![1, 0]);
        let mus: Vec<Weight> = dominant_box(2, 2);
        let mut bounds = vec![0_i64; 2];
        for mu in &mus {
            if let Some(b) = pairing_box(&b2, &lam, mu) {
                for i in 0..2 {
                    bounds[i] = bounds[i].max(b[i]);
                }
            }
        }
        let kernel = CtKernel::new(&b2, &p, &bounds, 1 << 20).unwrap();
        for mu in &mus {
            let shared = exact_pairing_p_m_with(&b2, &wg, &kernel, &lam, mu).unwrap();
            let solo = exact_pairing_p_m(&b2, &wg, &lam, mu, &p, 1 << 20).unwrap();
            assert_eq!(shared, solo, "{mu}");
        }
    }
}
