//! Small dense symmetric routines, generic over the working scalar.

use alloc::vec::Vec;

use crate::scalar::Field;

/// Row-major square matrix.
#[derive(Debug, Clone)]
pub(crate) struct Dense<T> {
    pub n: usize,
    pub a: Vec<T>,
}

impl<T: Field> Dense<T> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut a = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                a.push(f(i, j));
            }
        }
        Self { n, a }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.a[i * self.n + j]
    }

    pub fn mul_vec(&self, x: &[T]) -> Vec<T> {
        (0..self.n)
            .map(|i| {
                let mut acc = x[0].like(0.0);
                for (j, xj) in x.iter().enumerate() {
                    acc = acc.add(&self.at(i, j).mul(xj));
                }
                acc
            })
            .collect()
    }

    /// Lower Cholesky factor, or `None` when a pivot is not positive.
    pub fn cholesky(&self) -> Option<Dense<T>> {
        let n = self.n;
        let zero = self.a[0].like(0.0);
        let mut l = Dense { n, a: alloc::vec![zero.clone(); n * n] };
        for j in 0..n {
            let mut d = self.at(j, j).clone();
            for k in 0..j {
                let ljk = l.at(j, k).clone();
                d = d.sub(&ljk.mul(&ljk));
            }
            if !zero.lt(&d) || !d.is_finite() {
                return None;
            }
            let djj = d.sqrt();
            l.a[j * n + j] = djj.clone();
            for i in (j + 1)..n {
                let mut s = self.at(i, j).clone();
                for k in 0..j {
                    s = s.sub(&l.at(i, k).mul(l.at(j, k)));
                }
                l.a[i * n + j] = s.div(&djj);
            }
        }
        Some(l)
    }

    /// Solves `L Lᵀ x = b` given the lower factor.
    pub fn cholesky_solve(&self, b: &[T]) -> Vec<T> {
        let n = self.n;
        let mut y: Vec<T> = Vec::with_capacity(n);
        for i in 0..n {
            let mut s = b[i].clone();
            for (k, yk) in y.iter().enumerate() {
                s = s.sub(&self.at(i, k).mul(yk));
            }
            y.push(s.div(self.at(i, i)));
        }
        let mut x = y;
        for i in (0..n).rev() {
            let mut s = x[i].clone();
            for k in (i + 1)..n {
                s = s.sub(&self.at(k, i).mul(&x[k]));
            }
            x[i] = s.div(self.at(i, i));
        }
        x
    }

    /// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
    /// ascending. `rel_tol` bounds the final off-diagonal Frobenius norm
    /// relative to the whole matrix.
    pub fn symmetric_eigenvalues(&self, rel_tol: f64) -> Vec<T> {
        let n = self.n;
        let mut a = self.a.clone();
        let zero = a[0].like(0.0);
        let one = a[0].like(1.0);
        let two = a[0].like(2.0);
        let frob = a.iter().fold(zero.clone(), |acc, x| acc.add(&x.mul(x)));
        let tol2 = frob.mul(&zero.like(rel_tol * rel_tol));
        for _sweep in 0..100 {
            let mut off = zero.clone();
            for p in 0..n {
                for q in (p + 1)..n {
                    let x = &a[p * n + q];
                    off = off.add(&x.mul(x));
                }
            }
            if !tol2.lt(&off.mul(&two)) {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    let apq = a[p * n + q].clone();
                    if !zero.lt(&apq.abs()) {
                        continue;
                    }
                    let app = a[p * n + p].clone();
                    let aqq = a[q * n + q].clone();
                    let theta = aqq.sub(&app).div(&two.mul(&apq));
                    let root = theta.mul(&theta).add(&one).sqrt();
                    let mut t = one.div(&theta.abs().add(&root));
                    if theta.lt(&zero) {
                        t = t.neg();
                    }
                    let c = one.div(&t.mul(&t).add(&one).sqrt());
                    let s = t.mul(&c);
                    for k in 0..n {
                        let akp = a[k * n + p].clone();
                        let akq = a[k * n + q].clone();
                        a[k * n + p] = c.mul(&akp).sub(&s.mul(&akq));
                        a[k * n + q] = s.mul(&akp).add(&c.mul(&akq));
                    }
                    for k in 0..n {
                        let apk = a[p * n + k].clone();
                        let aqk = a[q * n + k].clone();
                        a[p * n + k] = c.mul(&apk).sub(&s.mul(&aqk));
                        a[q * n + k] = s.mul(&apk).add(&c.mul(&aqk));
                    }
                }
            }
        }
        let mut ev: Vec<T> = (0..n).map(|i| a[i * n + i].clone()).collect();
        ev.sort_by(|x, y| {
            if x.lt(y) {
                core::cmp::Ordering::Less
            } else if y.lt(x) {
                core::cmp::Ordering::Greater
            } else {
                core::cmp::Ordering::Equal
            }
        });
        ev
    }
}
