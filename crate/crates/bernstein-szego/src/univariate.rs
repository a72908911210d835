//! Classic one-variable Bernstein-Szego polynomials, as an independent
//! reference for the rank-one case.
//!
//! The basis is the Fourier-cosine monomials `m_0 = 1`, `m_k = e^{ikx} +
//! e^{-ikx}`. The closed form divides `c(x) e^{i(ell+1)x} - c(-x)
//! e^{-i(ell+1)x}` by `delta = e^{ix} - e^{-ix}` via the telescoping identity
//! `(e^{inx} - e^{-inx})/delta = m_{n-1} + m_{n-3} + ...`, entirely in terms
//! of coefficient bookkeeping. Nothing here touches the general machinery,
//! which is exactly what makes the agreement tests meaningful.

use crate::error::{Error, Result};
use crate::rational::{check_parameter, Rat};
use num_traits::{One, Zero};

#[derive(Debug, Clone)]
pub struct ClassicParams {
    ts: Vec<Rat>,
}

impl ClassicParams {
    pub fn new(ts: Vec<Rat>) -> Result<ClassicParams> {
        for t in &ts {
            check_parameter(t)?;
        }
        Ok(ClassicParams { ts })
    }

    pub fn m(&self) -> usize {
        self.ts.len()
    }

    pub fn ts(&self) -> &[Rat] {
        &self.ts
    }
}

fn check_degree(ell: i64, m: usize) -> Result<()> {
    if ell < 0 || ell < m as i64 - 1 {
        return Err(Error::DegreeTooSmall { ell, m });
    }
    Ok(())
}

/// Elementary symmetric functions of the parameters: `c(x) = sum_k e_k
/// e^{-2ikx}`.
fn elementary(ts: &[Rat]) -> Vec<Rat> {
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

/// `N_ell`: 1 for `ell >= M`, `1 - t_1 ... t_M` on the boundary
/// `ell = M - 1`. Below that the closed form makes no claim and the call is
/// an error.
pub fn classic_norm(ell: i64, params: &ClassicParams) -> Result<Rat> {
    let m = params.m();
    check_degree(ell, m)?;
    if ell >= m as i64 {
        return Ok(Rat::one());
    }
    let prod = params.ts.iter().fold(Rat::one(), |acc, t| acc * t.clone());
    Ok(Rat::one() - prod)
}

/// Monic expansion of `p_ell` as coefficients on `m_0 .. m_ell`
/// (index = cosine degree).
pub fn classic_p(ell: i64, params: &ClassicParams) -> Result<Vec<Rat>> {
    let m = params.m();
    check_degree(ell, m)?;
    let e = elementary(&params.ts);
    let mut coeffs = vec![Rat::zero(); ell as usize + 1];
    for (k, ek) in e.iter().enumerate() {
        // (e^{inx} - e^{-inx})/delta contributes m_{|n|-1}, m_{|n|-3}, ...
        // with the sign of n.
        let n = ell + 1 - 2 * k as i64;
        if n == 0 {
            continue;
        }
        let term = if n > 0 { ek.clone() } else { -ek.clone() };
        let mut j = n.abs() - 1;
        while j >= 0 {
            coeffs[j as usize] += term.clone();
            j -= 2;
        }
    }
    let norm = classic_norm(ell, params)?;
    assert_eq!(
        coeffs[ell as usize], norm,
        "leading coefficient is the norm constant"
    );
    for c in coeffs.iter_mut() {
        *c /= norm.clone();
    }
    Ok(coeffs)
}
