//! Root system data for the supported irreducible types of rank <= 4.
//!
//! Conventions, fixed once and used everywhere:
//! - The Cartan matrix entry `a[i][j]` is the pairing of the j-th simple root
//!   against the i-th simple coroot, so column j *is* the j-th simple root in
//!   fundamental-weight coordinates.
//! - Lengths are normalized so short roots have squared length 2; `d[i]` is
//!   half the squared length of the i-th simple root (1 for short, 2 or 3 for
//!   long). In simply-laced systems every root counts as short and the long
//!   class is empty.
//! - Positive roots are graded by height and ties are broken lexicographically
//!   on simple-root coordinates, so listings and JSON output are bit-stable.

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::weightlat::Weight;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SystemName {
    A1,
    A2,
    A3,
    A4,
    B2,
    B3,
    B4,
    C3,
    C4,
    D4,
    G2,
    F4,
}

impl SystemName {
    pub fn all() -> [SystemName; 12] {
        use SystemName::*;
        [A1, A2, A3, A4, B2, B3, B4, C3, C4, D4, G2, F4]
    }
}

impl fmt::Display for SystemName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for SystemName {
    type Err = Error;

    fn from_str(s: &str) -> Result<SystemName> {
        use SystemName::*;
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A1" => A1,
            "A2" => A2,
            "A3" => A3,
            "A4" => A4,
            "B2" => B2,
            "B3" => B3,
            "B4" => B4,
            "C3" => C3,
            "C4" => C4,
            "D4" => D4,
            "G2" => G2,
            "F4" => F4,
            _ => {
                return Err(Error::UnsupportedSystem {
                    given: s.to_string(),
                })
            }
        })
    }
}

/// A positive root with every coordinate system we need precomputed.
#[derive(Debug, Clone)]
pub struct Root {
    /// Fundamental-weight coordinates (pairings with simple coroots).
    pub fw: Weight,
    /// Simple-root coordinates.
    pub sr: Vec<i64>,
    /// The coroot in simple-coroot coordinates; pairing a weight against this
    /// root's coroot is the dot product with this vector.
    pub coroot_sr: Vec<i64>,
    pub long: bool,
    /// Sum of simple-root coordinates.
    pub height: i64,
    /// Half-sum of pairings against short positive coroots (an integer in
    /// every supported system; asserted at construction).
    pub ht_short: i64,
    /// Same against long positive coroots.
    pub ht_long: i64,
}

impl Root {
    pub fn height_stats(&self) -> (i64, i64) {
        (self.ht_short, self.ht_long)
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub name: SystemName,
    pub rank: usize,
    /// Column j holds the j-th simple root in fundamental-weight coordinates.
    pub cartan: IntMatrix,
    /// Half squared lengths of the simple roots (short = 1).
    pub d: Vec<i64>,
    pub simply_laced: bool,
    /// Graded by height, ties lexicographic on simple-root coordinates.
    pub positive_roots: Vec<Root>,
    /// positive_roots index of each simple root.
    pub simple_indices: Vec<usize>,
    pub rho: Weight,
    pub rho_short: Weight,
    pub rho_long: Weight,
    pub weyl_order: u128,
    fw_index: BTreeMap<Vec<i64>, usize>,
}

struct TypeData {
    rank: usize,
    cartan: &'static [&'static [i64]],
    d: &'static [i64],
    weyl_order: u128,
}

fn type_data(name: SystemName) -> TypeData {
    use SystemName::*;
    match name {
        A1 => TypeData {
            rank: 1,
            cartan: &[&[2]],
            d: &[1],
            weyl_order: 2,
        },
        A2 => TypeData {
            rank: 2,
            cartan: &[&[2, -1], &[-1, 2]],
            d: &[1, 1],
            weyl_order: 6,
        },
        A3 => TypeData {
            rank: 3,
            cartan: &[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]],
            d: &[1, 1, 1],
            weyl_order: 24,
        },
        A4 => TypeData {
            rank: 4,
            cartan: &[
                &[2, -1, 0, 0],
                &[-1, 2, -1, 0],
                &[0, -1, 2, -1],
                &[0, 0, -1, 2],
            ],
            d: &[1, 1, 1, 1],
            weyl_order: 120,
        },
        B2 => TypeData {
            rank: 2,
            cartan: &[&[2, -1], &[-2, 2]],
            d: &[2, 1],
            weyl_order: 8,
        },
        B3 => TypeData {
            rank: 3,
            cartan: &[&[2, -1, 0], &[-1, 2, -1], &[0, -2, 2]],
            d: &[2, 2, 1],
            weyl_order: 48,
        },
        B4 => TypeData {
            rank: 4,
            cartan: &[
                &[2, -1, 0, 0],
                &[-1, 2, -1, 0],
                &[0, -1, 2, -1],
                &[0, 0, -2, 2],
            ],
            d: &[2, 2, 2, 1],
            weyl_order: 384,
        },
        C3 => TypeData {
            rank: 3,
            cartan: &[&[2, -1, 0], &[-1, 2, -2], &[0, -1, 2]],
            d: &[1, 1, 2],
            weyl_order: 48,
        },
        C4 => TypeData {
            rank: 4,
            cartan: &[
                &[2, -1, 0, 0],
                &[-1, 2, -1, 0],
                &[0, -1, 2, -2],
                &[0, 0, -1, 2],
            ],
            d: &[1, 1, 1, 2],
            weyl_order: 384,
        },
        D4 => TypeData {
            rank: 4,
            cartan: &[
                &[2, -1, 0, 0],
                &[-1, 2, -1, -1],
                &[0, -1, 2, 0],
                &[0, -1, 0, 2],
            ],
            d: &[1, 1, 1, 1],
            weyl_order: 192,
        },
        G2 => TypeData {
            rank: 2,
            cartan: &[&[2, -3], &[-1, 2]],
            d: &[1, 3],
            weyl_order: 12,
        },
        F4 => TypeData {
            rank: 4,
            cartan: &[
                &[2, -1, 0, 0],
                &[-1, 2, -1, 0],
                &[0, -2, 2, -1],
                &[0, 0, -1, 2],
            ],
            d: &[2, 2, 1, 1],
            weyl_order: 1152,
        },
    }
}

/// Builds a root system from its label ("A1" .. "F4").
pub fn build_root_system(label: &str) -> Result<RootSystem> {
    Ok(RootSystem::new(label.parse()?))
}

impl RootSystem {
    pub fn new(name: SystemName) -> RootSystem {
        let td = type_data(name);
        let rank = td.rank;
        let cartan =
            IntMatrix::from_rows(&td.cartan.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
        let d = td.d.to_vec();
        let max_d = *d.iter().max().unwrap();
        let simply_laced = max_d == 1;

        // Closure over root strings: alpha + alpha_i is a root iff the string
        // through alpha in direction alpha_i satisfies q = p - <alpha,
        // alpha_i^vee> >= 1, where p is the depth of the string below alpha.
        let mut by_height: Vec<Vec<Vec<i64>>> = Vec::new();
        let mut known: BTreeMap<Vec<i64>, ()> = BTreeMap::new();
        let mut level: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                let mut e = vec![0; rank];
                e[i] = 1;
                e
            })
            .collect();
        level.sort();
        for sr in &level {
            known.insert(sr.clone(), ());
        }
        while !level.is_empty() {
            by_height.push(level.clone());
            let mut next: Vec<Vec<i64>> = Vec::new();
            for sr in &level {
                let fw = cartan.act(sr);
                for i in 0..rank {
                    let mut p = 0;
                    let mut probe = sr.clone();
                    loop {
                        probe[i] -= 1;
                        if probe.iter().any(|&c| c < 0) || !known.contains_key(&probe) {
                            break;
                        }
                        p += 1;
                    }
                    if p - fw[i] >= 1 {
                        let mut up = sr.clone();
                        up[i] += 1;
                        if !known.contains_key(&up) {
                            known.insert(up.clone(), ());
                            next.push(up);
                        }
                    }
                }
            }
            next.sort();
            next.dedup();
            level = next;
        }

        let norm2 = |sr: &[i64]| -> i64 {
            let mut s = 0;
            for i in 0..rank {
                for j in 0..rank {
                    // (alpha_i, alpha_j) = d_j * a[j][i]
                    s += sr[i] * sr[j] * d[j] * cartan.get(j, i);
                }
            }
            s
        };

        let mut roots: Vec<Root> = Vec::new();
        for level in &by_height {
            for sr in level {
                let fw = Weight(cartan.act(sr));
                let n2 = norm2(sr);
                assert!(n2 == 2 || n2 == 2 * max_d, "unexpected root length {n2}");
                let d_alpha = n2 / 2;
                let coroot_sr: Vec<i64> = (0..rank)
                    .map(|i| {
                        let num = sr[i] * d[i];
                        assert_eq!(num % d_alpha, 0, "coroot coordinates must be integral");
                        num / d_alpha
                    })
                    .collect();
                roots.push(Root {
                    fw,
                    sr: sr.clone(),
                    coroot_sr,
                    long: !simply_laced && n2 == 2 * max_d,
                    height: sr.iter().sum(),
                    ht_short: 0,
                    ht_long: 0,
                });
            }
        }

        // Height statistics need the full root list first.
        let pairing = |fw: &Weight, r: &Root| -> i64 {
            fw.0.iter().zip(&r.coroot_sr).map(|(a, b)| a * b).sum()
        };
        let stats: Vec<(i64, i64)> = roots
            .iter()
            .map(|alpha| {
                let mut twice_s = 0;
                let mut twice_l = 0;
                for beta in &roots {
                    let p = pairing(&alpha.fw, beta);
                    if beta.long {
                        twice_l += p;
                    } else {
                        twice_s += p;
                    }
                }
                assert!(
                    twice_s % 2 == 0 && twice_l % 2 == 0,
                    "height stats must be integral"
                );
                (twice_s / 2, twice_l / 2)
            })
            .collect();
        for (root, (hs, hl)) in roots.iter_mut().zip(stats) {
            root.ht_short = hs;
            root.ht_long = hl;
            assert!(hs + hl >= 1, "positive roots have positive total height");
        }

        let half_sum = |long: bool| -> Weight {
            let mut acc = vec![0_i64; rank];
            for r in roots.iter().filter(|r| r.long == long) {
                for i in 0..rank {
                    acc[i] += r.fw.0[i];
                }
            }
            assert!(acc.iter().all(|c| c % 2 == 0), "half-sum must be a weight");
            Weight(acc.iter().map(|c| c / 2).collect())
        };
        let rho_short = half_sum(false);
        let rho_long = if simply_laced {
            Weight::zero(rank)
        } else {
            half_sum(true)
        };
        let rho = Weight(vec![1; rank]);
        assert_eq!(rho, rho_short.add(&rho_long));

        let mut fw_index = BTreeMap::new();
        for (i, r) in roots.iter().enumerate() {
            fw_index.insert(r.fw.0.clone(), i);
        }
        let simple_indices = (0..rank)
            .map(|i| {
                let mut e = vec![0; rank];
                e[i] = 1;
                roots.iter().position(|r| r.sr == e).unwrap()
            })
            .collect();

        RootSystem {
            name,
            rank,
            cartan,
            d,
            simply_laced,
            positive_roots: roots,
            simple_indices,
            rho,
            rho_short,
            rho_long,
            weyl_order: td.weyl_order,
            fw_index,
        }
    }

    /// Pairing of a weight against the coroot of `root`.
    pub fn coroot_pairing(&self, lam: &Weight, root: &Root) -> i64 {
        lam.0.iter().zip(&root.coroot_sr).map(|(a, b)| a * b).sum()
    }

    /// Index of a positive root with the given fundamental-weight coordinates.
    pub fn positive_root_index(&self, fw: &[i64]) -> Option<usize> {
        self.fw_index.get(fw).copied()
    }

    pub fn short_indices(&self) -> Vec<usize> {
        (0..self.positive_roots.len())
            .filter(|&i| !self.positive_roots[i].long)
            .collect()
    }

    pub fn long_indices(&self) -> Vec<usize> {
        (0..self.positive_roots.len())
            .filter(|&i| self.positive_roots[i].long)
            .collect()
    }

    /// The unique root of maximal height.
    pub fn highest_root(&self) -> &Root {
        self.positive_roots.last().unwrap()
    }
}
