//! The geometric representation over f64.
//!
//! Simple roots are the standard basis, the bilinear form is
//! B(a_i, a_j) = -cos(pi / m(i,j)) with -1 for m = infinity, and a generator
//! acts by v -> v - 2 B(a_s, v) a_s. Length descent reads off root signs:
//! s_i is a left descent of w iff w^{-1}(a_i) is a negative root.
//!
//! All sign and identity tests carry tolerances scaled by the magnitudes
//! involved; a failed test is a hard error, never a silent guess.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Sign {
    Positive,
    Negative,
}

pub(crate) struct Geometry {
    rank: usize,
    b: Vec<f64>,
}

impl Geometry {
    pub fn new(rank: usize, matrix: &[u32]) -> Self {
        let n = rank;
        let mut b = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                let m = matrix[i * n + j];
                b[i * n + j] = if m == 0 {
                    -1.0
                } else {
                    -(std::f64::consts::PI / f64::from(m)).cos()
                };
            }
        }
        Geometry { rank, b }
    }

    pub fn identity_mat(&self) -> Vec<f64> {
        let n = self.rank;
        let mut m = vec![0.0; n * n];
        for i in 0..n {
            m[i * n + i] = 1.0;
        }
        m
    }

    /// A <- M_s A (reflect every column).
    pub fn refl_mul_left(&self, s: usize, a: &mut [f64]) {
        let n = self.rank;
        for col in 0..n {
            let mut c = 0.0;
            for j in 0..n {
                c += self.b[s * n + j] * a[j * n + col];
            }
            a[s * n + col] -= 2.0 * c;
        }
    }

    /// A <- A M_s. New col_j = col_j - 2 B(s,j) col_s.
    pub fn refl_mul_right(&self, s: usize, a: &mut [f64]) {
        let n = self.rank;
        let col_s: Vec<f64> = (0..n).map(|r| a[r * n + s]).collect();
        for j in 0..n {
            let f = 2.0 * self.b[s * n + j];
            if f != 0.0 {
                for r in 0..n {
                    a[r * n + j] -= f * col_s[r];
                }
            }
        }
    }

    pub fn matmul(&self, a: &[f64], b: &[f64]) -> Vec<f64> {
        let n = self.rank;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = a[i * n + k];
                if aik == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += aik * b[k * n + j];
                }
            }
        }
        out
    }

    pub fn bilinear(&self, u: &[f64], v: &[f64]) -> f64 {
        let n = self.rank;
        let mut acc = 0.0;
        for (r, &ur) in u.iter().enumerate() {
            if ur == 0.0 {
                continue;
            }
            let row: f64 = self.b[r * n..(r + 1) * n]
                .iter()
                .zip(v)
                .map(|(b, x)| b * x)
                .sum();
            acc += ur * row;
        }
        acc
    }

    /// Sign of a root vector against an absolute noise floor. The floor must
    /// be scaled by the magnitude of the computation that produced the
    /// vector, not by the vector itself: a short root extracted from a large
    /// matrix carries the matrix's noise.
    pub fn vec_sign(&self, v: &[f64], eps: f64) -> Result<Sign> {
        let mut mx = 0.0_f64;
        for &x in v {
            mx = mx.max(x.abs());
        }
        if mx <= eps {
            return Err(Error::SolverPrecision(
                "root vector is numerically zero".into(),
            ));
        }
        let mut can_pos = true;
        let mut can_neg = true;
        for &x in v {
            if x > eps {
                can_neg = false;
            }
            if x < -eps {
                can_pos = false;
            }
        }
        match (can_pos, can_neg) {
            (true, false) => Ok(Sign::Positive),
            (false, true) => Ok(Sign::Negative),
            _ => Err(Error::SolverPrecision(format!(
                "root vector has mixed coordinate signs: {v:?}"
            ))),
        }
    }

    fn mat_norm(&self, a: &[f64]) -> f64 {
        a.iter().fold(0.0_f64, |m, x| m.max(x.abs()))
    }

    fn column_sign(&self, a: &[f64], col: usize, eps: f64) -> Result<Sign> {
        let n = self.rank;
        let v: Vec<f64> = (0..n).map(|r| a[r * n + col]).collect();
        self.vec_sign(&v, eps)
    }

    /// ShortLex normal form of the element whose inverse has matrix `vmat`.
    ///
    /// Consumes the matrix; each step takes the smallest left descent and
    /// strips it. Terminating at a matrix far from the identity is a
    /// precision failure.
    pub fn descent_nf(&self, mut vmat: Vec<f64>, max_len: usize, tol: f64) -> Result<Vec<u8>> {
        let n = self.rank;
        let mut letters = Vec::new();
        let mut noise_scale = 1.0_f64;
        loop {
            noise_scale = noise_scale.max(self.mat_norm(&vmat));
            let eps = tol * noise_scale;
            let mut descent = None;
            for i in 0..n {
                if self.column_sign(&vmat, i, eps)? == Sign::Negative {
                    descent = Some(i);
                    break;
                }
            }
            match descent {
                Some(i) => {
                    letters.push(i as u8);
                    if letters.len() > max_len {
                        return Err(Error::SolverPrecision(format!(
                            "descent did not terminate within {max_len} letters"
                        )));
                    }
                    self.refl_mul_right(i, &mut vmat);
                }
                None => break,
            }
        }
        let mut mag = 1.0_f64;
        let mut dev = 0.0_f64;
        for r in 0..n {
            for c in 0..n {
                let v = vmat[r * n + c];
                mag = mag.max(v.abs());
                let d = if r == c { v - 1.0 } else { v };
                dev = dev.max(d.abs());
            }
        }
        if dev > 1e-6 * mag {
            return Err(Error::SolverPrecision(format!(
                "descent terminated {dev:.3e} away from the identity"
            )));
        }
        Ok(letters)
    }

    /// Unit positive root of a reflection, from its matrix. M - I has rank
    /// one and its columns are parallel to the root.
    pub fn extract_root(&self, m: &[f64], tol: f64) -> Result<Vec<f64>> {
        let n = self.rank;
        let mat_scale = self.mat_norm(m).max(1.0);
        let mut best_col = 0;
        let mut best_norm = -1.0_f64;
        for c in 0..n {
            let mut norm = 0.0_f64;
            for r in 0..n {
                let d = m[r * n + c] - if r == c { 1.0 } else { 0.0 };
                norm = norm.max(d.abs());
            }
            if norm > best_norm {
                best_norm = norm;
                best_col = c;
            }
        }
        if best_norm < tol * mat_scale {
            return Err(Error::SolverPrecision(
                "reflection matrix is numerically the identity".into(),
            ));
        }
        let mut rho: Vec<f64> = (0..n)
            .map(|r| m[r * n + best_col] - if r == best_col { 1.0 } else { 0.0 })
            .collect();
        let q = self.bilinear(&rho, &rho);
        if q <= tol * mat_scale {
            return Err(Error::SolverPrecision(
                "reflection root has non-positive norm".into(),
            ));
        }
        let scale = q.sqrt().recip();
        for x in rho.iter_mut() {
            *x *= scale;
        }
        if self.vec_sign(&rho, tol * mat_scale * scale.max(1.0))? == Sign::Negative {
            for x in rho.iter_mut() {
                *x = -*x;
            }
        }
        Ok(rho)
    }

    /// Smallest k <= cap with W^k numerically the identity.
    pub fn matrix_order(&self, w: &[f64], cap: usize) -> Option<usize> {
        let n = self.rank;
        let mut p = w.to_vec();
        let mut magmax = 1.0_f64;
        for k in 1..=cap {
            let mut dev = 0.0_f64;
            for r in 0..n {
                for c in 0..n {
                    let v = p[r * n + c];
                    magmax = magmax.max(v.abs());
                    let d = if r == c { v - 1.0 } else { v };
                    dev = dev.max(d.abs());
                }
            }
            if dev <= 1e-7 * magmax {
                return Some(k);
            }
            if k < cap {
                p = self.matmul(&p, w);
            }
        }
        None
    }
}
