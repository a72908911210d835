//! Small exact integer matrices.
//!
//! Everything here acts on fundamental-weight coordinate vectors of rank <= 4,
//! so naive cofactor determinants and Cramer solves are both exact and fast.

use crate::rational::{rat, Rat};

/// Row-major square integer matrix of side `n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntMatrix {
    pub n: usize,
    pub a: Vec<i64>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut a = vec![0; n * n];
        for i in 0..n {
            a[i * n + i] = 1;
        }
        IntMatrix { n, a }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut a = Vec::with_capacity(n * n);
        for r in rows {
            assert_eq!(r.len(), n, "square matrix required");
            a.extend_from_slice(r);
        }
        IntMatrix { n, a }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.a[i * self.n + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    /// self * other.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = IntMatrix {
            n,
            a: vec![0; n * n],
        };
        for i in 0..n {
            for k in 0..n {
                let v = self.get(i, k);
                if v == 0 {
                    continue;
                }
                for j in 0..n {
                    out.a[i * n + j] += v * other.get(k, j);
                }
            }
        }
        out
    }

    /// self * v for a column vector v.
    pub fn act(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.n);
        let n = self.n;
        let mut out = vec![0; n];
        for i in 0..n {
            let mut s = 0;
            for j in 0..n {
                s += self.get(i, j) * v[j];
            }
            out[i] = s;
        }
        out
    }

    pub fn det(&self) -> i64 {
        det_rec(&self.a, self.n)
    }

    /// Adjugate: `self * adjugate = det * identity`, all entries integral.
    pub fn adjugate(&self) -> IntMatrix {
        let n = self.n;
        let mut out = IntMatrix {
            n,
            a: vec![0; n * n],
        };
        for i in 0..n {
            for j in 0..n {
                let mut minor = Vec::with_capacity((n - 1) * (n - 1));
                for r in 0..n {
                    if r == j {
                        continue;
                    }
                    for c in 0..n {
                        if c != i {
                            minor.push(self.get(r, c));
                        }
                    }
                }
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                out.set(i, j, sign * det_rec(&minor, n - 1));
            }
        }
        out
    }
}

fn det_rec(a: &[i64], n: usize) -> i64 {
    match n {
        0 => 1,
        1 => a[0],
        2 => a[0] * a[3] - a[1] * a[2],
        _ => {
            let mut acc = 0;
            for j in 0..n {
                if a[j] == 0 {
                    continue;
                }
                let mut minor = Vec::with_capacity((n - 1) * (n - 1));
                for i in 1..n {
                    for k in 0..n {
                        if k != j {
                            minor.push(a[i * n + k]);
                        }
                    }
                }
                let sign = if j % 2 == 0 { 1 } else { -1 };
                acc += sign * a[j] * det_rec(&minor, n - 1);
            }
            acc
        }
    }
}

/// Exact solution of `m x = b` by Cramer's rule. Requires `det(m) != 0`.
pub fn cramer_solve(m: &IntMatrix, b: &[i64]) -> Option<Vec<Rat>> {
    let n = m.n;
    assert_eq!(b.len(), n);
    let d = m.det();
    if d == 0 {
        return None;
    }
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let mut mj = m.clone();
        for i in 0..n {
            mj.set(i, j, b[i]);
        }
        out.push(rat(mj.det()) / rat(d));
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn det_small_sizes() {
        assert_eq!(IntMatrix::identity(4).det(), 1);
        let m = IntMatrix::from_rows(&[vec![2, -1], vec![-2, 2]]);
        assert_eq!(m.det(), 2);
        let m3 = IntMatrix::from_rows(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]);
        assert_eq!(m3.det(), 2);
        let f4 = IntMatrix::from_rows(&[
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, 0],
            vec![0, -2, 2, -1],
            vec![0, 0, -1, 2],
        ]);
        assert_eq!(f4.det(), 1);
    }

    #[test]
    fn mul_matches_action() {
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        let k = IntMatrix::from_rows(&[vec![0, 1], vec![1, 1]]);
        let v = vec![5, -7];
        assert_eq!(m.mul(&k).act(&v), m.act(&k.act(&v)));
    }

    #[test]
    fn adjugate_inverts() {
        let samples = [
            IntMatrix::identity(3),
            IntMatrix::from_rows(&[vec![2, -1], vec![-2, 2]]),
            IntMatrix::from_rows(&[vec![2, -3], vec![-1, 2]]),
            IntMatrix::from_rows(&[
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -2, 2, -1],
                vec![0, 0, -1, 2],
            ]),
        ];
        for m in samples {
            let adj = m.adjugate();
            let mut expected = IntMatrix::identity(m.n);
            for v in expected.a.iter_mut() {
                *v *= m.det();
            }
            assert_eq!(m.mul(&adj), expected);
            assert_eq!(adj.mul(&m), expected);
        }
    }

    #[test]
    fn cramer_exact() {
        let m = IntMatrix::from_rows(&[vec![2, -1], vec![-2, 2]]);
        let x = cramer_solve(&m, &[1, 0]).unwrap();
        // 2a - b = 1, -2a + 2b = 0 => a = 1, b = 1.
        assert_eq!(x, vec![rat(1), rat(1)]);
        let singular = IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]]);
        assert!(cramer_solve(&singular, &[1, 0]).is_none());
        let z = cramer_solve(&m, &[0, 0]).unwrap();
        assert!(z.iter().all(|c| c.is_zero()));
    }
}
