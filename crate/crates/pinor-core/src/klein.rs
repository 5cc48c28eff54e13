//! Renormalized Feynman-Green functions on R^2 x K^2 for both pin
//! structures, and the table of fermion bilinear vacuum currents.
//!
//! All floating-point work lives here; the rest of the crate is exact.

use crate::clifford::GammaRep;
use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum KleinError {
    #[error("lightlike image point at (m, n) = ({m}, {n})")]
    LightlikeImage { m: i64, n: i64 },
    #[error("invalid configuration: {0}")]
    BadConfig(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PinKind {
    Pin13,
    Pin31,
}

/// Identification (x0,x1,x2,x3) ~ (x0, x1, x2 + m a, x3 + (-1)^m x3 + n b).
#[derive(Debug, Clone)]
pub struct KleinConfig {
    pub pin_kind: PinKind,
    /// half the x2 period
    pub a: f64,
    /// x3 period
    pub b: f64,
    /// shell truncation: |m|, |n| <= N
    pub n_max: u32,
    pub tolerance: f64,
    pub x: [f64; 4],
    pub x_prime: [f64; 4],
}

impl KleinConfig {
    pub fn validate(&self) -> Result<(), KleinError> {
        if !(self.a > 0.0) || !(self.b > 0.0) {
            return Err(KleinError::BadConfig("a, b must be positive".into()));
        }
        if self.n_max < 1 {
            return Err(KleinError::BadConfig("N must be at least 1".into()));
        }
        if !(self.tolerance > 0.0) {
            return Err(KleinError::BadConfig("tolerance must be positive".into()));
        }
        Ok(())
    }
}

/// scalar_part * I + matrix_part_coefficient * (Gamma_0 Gamma_1 Gamma_2),
/// prefactors included.
#[derive(Debug, Clone, Copy)]
pub struct GreenValue {
    pub scalar_part: Complex64,
    pub matrix_part_coefficient: Complex64,
    pub tail_estimate: f64,
}

struct Kahan {
    sum: f64,
    comp: f64,
}

impl Kahan {
    fn new() -> Self {
        Kahan { sum: 0.0, comp: 0.0 }
    }
    fn add(&mut self, v: f64) {
        let y = v - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }
}

// The first (even-copy) quadratic form and the second (odd-copy, x3-
// reversing) one; `deriv` replaces 1/Q by -dQ/dx^axis / Q^2.
struct Terms<'a> {
    cfg: &'a KleinConfig,
    deriv: Option<usize>,
    coincidence: bool,
}

impl Terms<'_> {
    fn delta(&self, i: usize) -> f64 {
        if self.coincidence {
            0.0
        } else {
            self.cfg.x[i] - self.cfg.x_prime[i]
        }
    }

    fn first(&self, m: i64, n: i64) -> Result<f64, KleinError> {
        let d2 = self.delta(2) + 2.0 * m as f64 * self.cfg.a;
        let d3 = self.delta(3) + n as f64 * self.cfg.b;
        let q = -self.delta(0).powi(2) + self.delta(1).powi(2) + d2 * d2 + d3 * d3;
        if q.abs() < 1e-12 {
            return Err(KleinError::LightlikeImage { m, n });
        }
        Ok(match self.deriv {
            None => 1.0 / q,
            Some(axis) => {
                let dq = match axis {
                    0 => -2.0 * self.delta(0),
                    1 => 2.0 * self.delta(1),
                    2 => 2.0 * d2,
                    _ => 2.0 * d3,
                };
                -dq / (q * q)
            }
        })
    }

    fn second(&self, m: i64, n: i64) -> Result<f64, KleinError> {
        let d2 = self.delta(2) + (2 * m + 1) as f64 * self.cfg.a;
        // the x3 coordinate enters as a sum on the reversed copies
        let s3 = if self.coincidence {
            2.0 * self.cfg.x[3]
        } else {
            self.cfg.x[3] + self.cfg.x_prime[3]
        } + n as f64 * self.cfg.b;
        let q = -self.delta(0).powi(2) + self.delta(1).powi(2) + d2 * d2 + s3 * s3;
        if q.abs() < 1e-12 {
            return Err(KleinError::LightlikeImage { m, n });
        }
        Ok(match self.deriv {
            None => 1.0 / q,
            Some(axis) => {
                let dq = match axis {
                    0 => -2.0 * self.delta(0),
                    1 => 2.0 * self.delta(1),
                    2 => 2.0 * d2,
                    _ => 2.0 * s3,
                };
                -dq / (q * q)
            }
        })
    }
}

fn weight(kind: PinKind, m: i64) -> f64 {
    match kind {
        PinKind::Pin13 => {
            if m.rem_euclid(2) == 0 {
                1.0
            } else {
                -1.0
            }
        }
        PinKind::Pin31 => 1.0,
    }
}

fn sum_config(cfg: &KleinConfig, deriv: Option<usize>, coincidence: bool) -> Result<GreenValue, KleinError> {
    cfg.validate()?;
    let terms = Terms {
        cfg,
        deriv,
        coincidence,
    };
    let n_max = cfg.n_max as i64;
    let mut s1 = Kahan::new();
    let mut s2 = Kahan::new();
    let mut shell_abs = vec![0.0f64; (n_max + 1) as usize];
    // Expanding square shells, to respect the conditional convergence of
    // the alternating sums.  The first sum uses max(|m|, |n|) = r; the
    // second is truncated symmetrically in its odd shift (2m+1)a, so the
    // image pair m and -m-1 always enters together (otherwise an unpaired
    // boundary row leaves an O(1/N^2) residue in the cancelling sums).
    for r in 0..=n_max {
        let mut abs_acc = 0.0;
        {
            let mut visit1 = |m: i64, n: i64| -> Result<(), KleinError> {
                if m == 0 && n == 0 {
                    return Ok(());
                }
                let t = weight(cfg.pin_kind, m) * terms.first(m, n)?;
                s1.add(t);
                abs_acc += t.abs();
                Ok(())
            };
            if r == 0 {
                visit1(0, 0)?;
            } else {
                for m in -r..=r {
                    visit1(m, -r)?;
                    visit1(m, r)?;
                }
                for n in (-r + 1)..r {
                    visit1(-r, n)?;
                    visit1(r, n)?;
                }
            }
        }
        {
            // pair index p covers m = p and m = -p-1
            let mut visit2 = |p: i64, n: i64| -> Result<(), KleinError> {
                for m in [p, -p - 1] {
                    let t = weight(cfg.pin_kind, m) * terms.second(m, n)?;
                    s2.add(t);
                    abs_acc += t.abs();
                }
                Ok(())
            };
            if r == 0 {
                visit2(0, 0)?;
            } else {
                for p in 0..=r {
                    visit2(p, -r)?;
                    visit2(p, r)?;
                }
                for n in (-r + 1)..r {
                    visit2(r, n)?;
                }
            }
        }
        shell_abs[r as usize] = abs_acc;
    }
    let (pref, matrix_factor) = match cfg.pin_kind {
        PinKind::Pin13 => (
            Complex64::new(0.0, 1.0) / (2.0 * PI).powi(2),
            Complex64::new(0.0, -1.0),
        ),
        PinKind::Pin31 => (
            Complex64::new(1.0 / (2.0 * PI).powi(2), 0.0),
            Complex64::new(1.0, 0.0),
        ),
    };
    let last = shell_abs.len().saturating_sub(4);
    let tail: f64 = shell_abs[last..].iter().sum::<f64>() * pref.norm();
    Ok(GreenValue {
        scalar_part: pref * s1.sum,
        matrix_part_coefficient: pref * matrix_factor * s2.sum,
        tail_estimate: tail,
    })
}

/// Renormalized Green function at (x, x'); the (m, n) = (0, 0) term of the
/// first sum is the removed Minkowski singularity.
pub fn g_ren(cfg: &KleinConfig) -> Result<GreenValue, KleinError> {
    sum_config(cfg, None, false)
}

/// Coincidence limit of g_ren (x' = x taken before summation).
pub fn g_ren_coincidence(cfg: &KleinConfig) -> Result<GreenValue, KleinError> {
    sum_config(cfg, None, true)
}

/// Term-wise derivative with respect to x^axis, then the coincidence limit
/// x' = x.  This ordering (differentiate, then coincide) defines the
/// point-split currents; the opposite order discards the surviving terms.
pub fn d_g_ren(cfg: &KleinConfig, axis: usize) -> Result<GreenValue, KleinError> {
    if axis > 3 {
        return Err(KleinError::BadConfig(format!("axis {axis} out of range")));
    }
    sum_config(cfg, Some(axis), true)
}

type CMat = [[Complex64; 4]; 4];

fn cmat_from_exact(m: &crate::matrix::ExactMatrix) -> CMat {
    let mut out = [[Complex64::new(0.0, 0.0); 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate() {
            let g = m.get(i, j);
            *e = Complex64::new(g.re_f64(), g.im_f64());
        }
    }
    out
}

fn cmul(a: &CMat, b: &CMat) -> CMat {
    let mut out = [[Complex64::new(0.0, 0.0); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = Complex64::new(0.0, 0.0);
            for (k, bk) in b.iter().enumerate() {
                acc += a[i][k] * bk[j];
            }
            out[i][j] = acc;
        }
    }
    out
}

fn ctrace(a: &CMat) -> Complex64 {
    a[0][0] + a[1][1] + a[2][2] + a[3][3]
}

fn cscale(a: &CMat, c: Complex64) -> CMat {
    let mut out = *a;
    for row in out.iter_mut() {
        for e in row.iter_mut() {
            *e *= c;
        }
    }
    out
}

fn cadd(a: &CMat, b: &CMat) -> CMat {
    let mut out = *a;
    for (i, row) in out.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate() {
            *e += b[i][j];
        }
    }
    out
}

/// The 16 bilinear labels and matrices in the Dirac (1,3) representation
/// (both pin kinds are evaluated with unhatted gammas here):
/// I, Gamma_mu, Gamma_mu Gamma_nu (mu < nu), Gamma_5 Gamma_mu, Gamma_5.
pub fn bilinear_basis() -> Vec<(String, CMat)> {
    let rep = GammaRep::dirac13();
    let g: Vec<CMat> = rep.matrices.iter().map(cmat_from_exact).collect();
    let g5 = cmat_from_exact(&rep.chirality().expect("even d").operator);
    let mut out = vec![];
    let mut ident = [[Complex64::new(0.0, 0.0); 4]; 4];
    for (i, row) in ident.iter_mut().enumerate() {
        row[i] = Complex64::new(1.0, 0.0);
    }
    out.push(("I".to_string(), ident));
    for (mu, gm) in g.iter().enumerate() {
        out.push((format!("G{mu}"), *gm));
    }
    for mu in 0..4 {
        for nu in mu + 1..4 {
            out.push((format!("G{mu}G{nu}"), cmul(&g[mu], &g[nu])));
        }
    }
    for (mu, gm) in g.iter().enumerate() {
        out.push((format!("G5G{mu}"), cmul(&g5, gm)));
    }
    out.push(("G5".to_string(), g5));
    out
}

/// tr(A Gamma^alpha d_alpha G_ren) at coincidence, over the 16-element
/// bilinear basis.
pub fn current_table(cfg: &KleinConfig) -> Result<Vec<(String, Complex64)>, KleinError> {
    let rep = GammaRep::dirac13();
    let g: Vec<CMat> = rep.matrices.iter().map(cmat_from_exact).collect();
    let m3 = cmul(&cmul(&g[0], &g[1]), &g[2]);
    let mut kernel = [[Complex64::new(0.0, 0.0); 4]; 4];
    for axis in 0..4 {
        let gv = d_g_ren(cfg, axis)?;
        let eta = Complex64::new(rep.metric[axis] as f64, 0.0);
        let gamma_up = cscale(&g[axis], eta);
        // Gamma^alpha (s I + c M3)
        kernel = cadd(&kernel, &cscale(&gamma_up, gv.scalar_part));
        kernel = cadd(
            &kernel,
            &cscale(&cmul(&gamma_up, &m3), gv.matrix_part_coefficient),
        );
    }
    Ok(bilinear_basis()
        .into_iter()
        .map(|(label, a)| (label, ctrace(&cmul(&a, &kernel))))
        .collect())
}

/// Vanishing verdicts relative to the largest table entry.
pub fn current_verdicts(table: &[(String, Complex64)], tolerance: f64) -> Vec<(String, bool)> {
    let max = table
        .iter()
        .map(|(_, v)| v.norm())
        .fold(0.0f64, f64::max)
        .max(1e-300);
    table
        .iter()
        .map(|(label, v)| (label.clone(), v.norm() > tolerance * max))
        .collect()
}
