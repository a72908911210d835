//! Weyl group enumeration and Poincare series.
//!
//! Elements are integer matrices acting on fundamental-weight coordinates.
//! The simple reflection `r_i` sends `lambda` to `lambda - lambda_i alpha_i`,
//! which in this basis subtracts `lambda_i` times column i of the Cartan
//! matrix. Enumeration is breadth-first from the identity, so elements are
//! graded by Coxeter length; within a level the order is lexicographic on
//! matrix entries, making listings reproducible.
//!
//! Length splits by root length: `len_short(w)` counts short positive roots
//! mapped negative by `w`, `len_long(w)` long ones, and the determinant is
//! `(-1)^(len_short + len_long)` (asserted during enumeration).

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::rational::{pow, Rat};
use crate::rootsys::RootSystem;
use crate::weightlat::Weight;
use num_traits::{One, Zero};
use std::collections::BTreeSet;

#[derive(Debug, Clone)]
pub struct WeylElement {
    pub matrix: IntMatrix,
    pub sign: i32,
    pub len_short: usize,
    pub len_long: usize,
}

impl WeylElement {
    /// Builds an element from its matrix, computing lengths from scratch.
    pub fn from_matrix(rs: &RootSystem, matrix: IntMatrix) -> WeylElement {
        let mut len_short = 0;
        let mut len_long = 0;
        for root in &rs.positive_roots {
            let image = matrix.act(&root.fw.0);
            if rs.positive_root_index(&image).is_none() {
                let neg: Vec<i64> = image.iter().map(|c| -c).collect();
                assert!(
                    rs.positive_root_index(&neg).is_some(),
                    "matrix does not permute the roots"
                );
                if root.long {
                    len_long += 1;
                } else {
                    len_short += 1;
                }
            }
        }
        let sign = if (len_short + len_long) % 2 == 0 {
            1
        } else {
            -1
        };
        assert_eq!(matrix.det() as i32, sign, "sign must match the determinant");
        WeylElement {
            matrix,
            sign,
            len_short,
            len_long,
        }
    }

    pub fn act(&self, lam: &Weight) -> Weight {
        Weight(self.matrix.act(&lam.0))
    }

    pub fn length(&self) -> usize {
        self.len_short + self.len_long
    }

    /// Indices (into `rs.positive_roots`) of positive roots mapped negative.
    pub fn inversions(&self, rs: &RootSystem) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, root) in rs.positive_roots.iter().enumerate() {
            let image = self.matrix.act(&root.fw.0);
            if rs.positive_root_index(&image).is_none() {
                out.push(i);
            }
        }
        out
    }
}

/// The matrix of the simple reflection `r_i`.
pub fn simple_reflection(rs: &RootSystem, i: usize) -> IntMatrix {
    let n = rs.rank;
    let mut m = IntMatrix::identity(n);
    for k in 0..n {
        m.set(k, i, m.get(k, i) - rs.cartan.get(k, i));
    }
    m
}

#[derive(Debug, Clone)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
}

impl WeylGroup {
    /// Breadth-first closure from the identity under right multiplication by
    /// simple reflections.
    pub fn enumerate(rs: &RootSystem) -> WeylGroup {
        let gens: Vec<IntMatrix> = (0..rs.rank).map(|i| simple_reflection(rs, i)).collect();
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let identity = IntMatrix::identity(rs.rank);
        seen.insert(identity.a.clone());
        let mut elements: Vec<IntMatrix> = Vec::new();
        let mut level = vec![identity];
        while !level.is_empty() {
            elements.extend(level.iter().cloned());
            let mut next: Vec<IntMatrix> = Vec::new();
            for w in &level {
                for g in &gens {
                    let candidate = w.mul(g);
                    if seen.insert(candidate.a.clone()) {
                        next.push(candidate);
                    }
                }
            }
            next.sort_by(|x, y| x.a.cmp(&y.a));
            level = next;
        }
        let elements: Vec<WeylElement> = elements
            .into_iter()
            .map(|m| WeylElement::from_matrix(rs, m))
            .collect();
        assert_eq!(
            elements.len() as u128,
            rs.weyl_order,
            "group order mismatch"
        );
        WeylGroup { elements }
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &WeylElement {
        &self.elements[i]
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// The distinct images of `lam`, sorted.
    pub fn orbit(&self, lam: &Weight) -> Vec<Weight> {
        let mut set: BTreeSet<Weight> = BTreeSet::new();
        for w in &self.elements {
            set.insert(w.act(lam));
        }
        set.into_iter().collect()
    }

    /// Indices of the elements fixing `lam`.
    pub fn stabilizer(&self, lam: &Weight) -> Vec<usize> {
        (0..self.elements.len())
            .filter(|&i| self.elements[i].act(lam) == *lam)
            .collect()
    }

    /// The unique element of maximal length.
    pub fn longest_element(&self) -> &WeylElement {
        self.elements.last().unwrap()
    }
}

/// Descent to the dominant chamber: repeatedly reflect at the smallest
/// negative coordinate. Returns the dominant representative, the acting
/// element's matrix, and its sign.
pub fn dominant_representative(rs: &RootSystem, lam: &Weight) -> (Weight, IntMatrix, i32) {
    let mut cur = lam.0.clone();
    let mut w = IntMatrix::identity(rs.rank);
    let mut sign = 1;
    loop {
        match (0..rs.rank).find(|&i| cur[i] < 0) {
            None => return (Weight(cur), w, sign),
            Some(i) => {
                let ci = cur[i];
                for k in 0..rs.rank {
                    cur[k] -= ci * rs.cartan.get(k, i);
                }
                w = simple_reflection(rs, i).mul(&w);
                sign = -sign;
            }
        }
    }
}

/// Descent without matrix bookkeeping, for hot paths that only need the
/// dominant weight and the sign.
pub fn dominant_descent(rs: &RootSystem, lam: &Weight) -> (Weight, i32) {
    let mut cur = lam.0.clone();
    let mut sign = 1;
    loop {
        match (0..rs.rank).find(|&i| cur[i] < 0) {
            None => return (Weight(cur), sign),
            Some(i) => {
                let ci = cur[i];
                for k in 0..rs.rank {
                    cur[k] -= ci * rs.cartan.get(k, i);
                }
                sign = -sign;
            }
        }
    }
}

/// Length-generating sum over a set of elements, with one variable per root
/// length class: `sum ts^len_short(w) * tl^len_long(w)`.
pub fn poincare_enumerated<'a>(
    elements: impl IntoIterator<Item = &'a WeylElement>,
    ts: &Rat,
    tl: &Rat,
) -> Rat {
    let mut acc = Rat::zero();
    for w in elements {
        acc += pow(ts, w.len_short as u32) * pow(tl, w.len_long as u32);
    }
    acc
}

/// Height statistics `(long, ht_short, ht_long)` of the positive roots
/// orthogonal to a dominant weight; these index the factors of the closed
/// Poincare product.
pub fn orthogonal_root_stats(rs: &RootSystem, lam_tilde: &Weight) -> Result<Vec<(bool, i64, i64)>> {
    if lam_tilde.rank() != rs.rank {
        return Err(Error::DimensionMismatch {
            expected: rs.rank,
            got: lam_tilde.rank(),
        });
    }
    if !lam_tilde.is_dominant() {
        return Err(Error::NotDominant {
            weight: lam_tilde.to_string(),
        });
    }
    Ok(rs
        .positive_roots
        .iter()
        .filter(|r| rs.coroot_pairing(lam_tilde, r) == 0)
        .map(|r| (r.long, r.ht_short, r.ht_long))
        .collect())
}

/// Closed product formula for the Poincare series of the stabilizer of a
/// dominant weight: over orthogonal short roots,
/// `(1 - ts^(1+ht_s) tl^ht_l) / (1 - ts^ht_s tl^ht_l)`, and with the extra
/// power on `tl` instead for long roots. Empty products are 1.
pub fn poincare_product(rs: &RootSystem, lam_tilde: &Weight, ts: &Rat, tl: &Rat) -> Result<Rat> {
    let mut acc = Rat::one();
    for (long, hs, hl) in orthogonal_root_stats(rs, lam_tilde)? {
        let denom = Rat::one() - pow(ts, hs as u32) * pow(tl, hl as u32);
        if denom.is_zero() {
            return Err(Error::SingularDenominator {
                detail: format!(
                    "Poincare factor with exponents ({hs},{hl}) vanishes at ts={ts}, tl={tl}"
                ),
            });
        }
        let (ns, nl) = if long { (hs, hl + 1) } else { (hs + 1, hl) };
        let numer = Rat::one() - pow(ts, ns as u32) * pow(tl, nl as u32);
        acc *= numer / denom;
    }
    Ok(acc)
}
