//! Plane-wave spinors, gamma-matrix traces, spin sums, and discrete-phase
//! bookkeeping for decay selection rules, in both index conventions.

use crate::clifford::{GammaRep, IndexConvention};
use crate::matrix::ExactMatrix;
use crate::scalar::{ratio_sign, GaussScalar};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum QftError {
    #[error("momentum is not on the mass shell: {0}")]
    OffShell(String),
    #[error("expected {expected} components, got {got}")]
    BadLength { expected: usize, got: usize },
    #[error("unsupported signature {0}")]
    UnsupportedSignature(String),
    #[error("trace sign law is defined for even lengths, got {0}")]
    OddLength(usize),
    #[error("kernel Gram matrix is degenerate")]
    DegenerateKernel,
    #[error("phase {0} is not a fourth root of unity")]
    PhaseNotFourthRoot(String),
    #[error("{0}")]
    Inconsistent(String),
}

/// Covariant components p_mu, indexed by generator position in the rep.
#[derive(Debug, Clone, PartialEq)]
pub struct FourMomentum {
    pub components: Vec<GaussScalar>,
    pub mass: GaussScalar,
}

impl FourMomentum {
    pub fn unchecked(components: Vec<GaussScalar>, mass: GaussScalar) -> Self {
        FourMomentum { components, mass }
    }

    /// Checks eta^{-1}(p,p) against the convention's mass-shell value:
    /// +m^2 when the time axis carries +1, -m^2 when it carries -1.
    pub fn on_shell(
        metric: &[i8],
        components: Vec<GaussScalar>,
        mass: GaussScalar,
    ) -> Result<Self, QftError> {
        if components.len() != metric.len() {
            return Err(QftError::BadLength {
                expected: metric.len(),
                got: components.len(),
            });
        }
        let plus = metric.iter().filter(|&&e| e == 1).count();
        let minus = metric.len() - plus;
        let shell_sign = if plus == 1 {
            1
        } else if minus == 1 {
            -1
        } else {
            return Err(QftError::UnsupportedSignature(format!("({plus},{minus})")));
        };
        let mut q = GaussScalar::zero();
        for (e, c) in metric.iter().zip(&components) {
            q += int_scalar(*e as i64) * c.clone() * c.clone();
        }
        let m2 = mass.clone() * mass.clone();
        let want = if shell_sign == 1 { m2 } else { -m2 };
        if q != want {
            return Err(QftError::OffShell(format!(
                "eta^-1(p,p) = {q}, expected {want}"
            )));
        }
        Ok(FourMomentum { components, mass })
    }

    /// Physical relabeling of a (1,3)-convention momentum into the (3,1)
    /// convention: (p_0, p_1, p_2, p_3) -> (-p_1, -p_2, -p_3, +p_0).
    pub fn to_hat(&self) -> Result<FourMomentum, QftError> {
        Ok(FourMomentum {
            components: hat_components(&self.components)?,
            mass: self.mass.clone(),
        })
    }
}

pub fn hat_components(p: &[GaussScalar]) -> Result<Vec<GaussScalar>, QftError> {
    if p.len() != 4 {
        return Err(QftError::BadLength {
            expected: 4,
            got: p.len(),
        });
    }
    Ok(vec![-p[1].clone(), -p[2].clone(), -p[3].clone(), p[0].clone()])
}

fn int_scalar(n: i64) -> GaussScalar {
    GaussScalar::from_int(n)
}

fn metric_scalar(e: i8) -> GaussScalar {
    int_scalar(e as i64)
}

/// Feynman slash with the index raised by the rep's own metric.
pub fn slash(rep: &GammaRep, p: &[GaussScalar]) -> Result<ExactMatrix, QftError> {
    if p.len() != rep.d() {
        return Err(QftError::BadLength {
            expected: rep.d(),
            got: p.len(),
        });
    }
    let mut out = ExactMatrix::zero(rep.dim());
    for (mu, c) in p.iter().enumerate() {
        let coeff = metric_scalar(rep.metric[mu]) * c.clone();
        out = &out + &rep.matrices[mu].scale(&coeff);
    }
    Ok(out)
}

/// Trace of a product of generators picked by position (repeats allowed).
pub fn trace_product(rep: &GammaRep, positions: &[usize]) -> GaussScalar {
    let mut acc = ExactMatrix::identity(rep.dim());
    for &p in positions {
        acc = &acc * &rep.matrices[p];
    }
    acc.trace()
}

/// Ratio of a hat-convention trace to the standard trace over corresponding
/// axes.  The hat generators are i times the standard ones, so a trace of n
/// gammas picks up i^n: +1 for n = 0 mod 4 and -1 for n = 2 mod 4.
pub fn trace_sign_law(n: usize) -> Result<i8, QftError> {
    if n % 2 != 0 {
        return Err(QftError::OddLength(n));
    }
    Ok(if n % 4 == 0 { 1 } else { -1 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SpinorKind {
    U,
    V,
}

/// The operator whose kernel holds the plane-wave solutions: pslash -+ m in
/// the standard convention, -i pslash -+ m in the hat convention.
pub fn dirac_operator(
    rep: &GammaRep,
    p: &FourMomentum,
    kind: SpinorKind,
) -> Result<ExactMatrix, QftError> {
    let sl = slash(rep, &p.components)?;
    let sl = match rep.signature.convention {
        IndexConvention::TimeFirst => sl,
        IndexConvention::SpaceFirst => sl.scale(&-GaussScalar::i()),
    };
    let m_term = ExactMatrix::identity(rep.dim()).scale(&p.mass);
    Ok(match kind {
        SpinorKind::U => &sl - &m_term,
        SpinorKind::V => &sl + &m_term,
    })
}

/// Closed-form spin sum: pslash + m for U and pslash - m for V in the
/// standard convention, -i pslash +- m in the hat convention.
pub fn spin_sum_closed(
    rep: &GammaRep,
    p: &FourMomentum,
    kind: SpinorKind,
) -> Result<ExactMatrix, QftError> {
    let sl = slash(rep, &p.components)?;
    let sl = match rep.signature.convention {
        IndexConvention::TimeFirst => sl,
        IndexConvention::SpaceFirst => sl.scale(&-GaussScalar::i()),
    };
    let m_term = ExactMatrix::identity(rep.dim()).scale(&p.mass);
    Ok(match kind {
        SpinorKind::U => &sl + &m_term,
        SpinorKind::V => &sl - &m_term,
    })
}

fn anchor_matrix(rep: &GammaRep) -> Result<ExactMatrix, QftError> {
    match rep.signature.convention {
        IndexConvention::TimeFirst => {
            let pos = rep
                .signature
                .position_of_label(0)
                .ok_or_else(|| QftError::UnsupportedSignature(rep.signature.to_string()))?;
            Ok(rep.matrices[pos].clone())
        }
        IndexConvention::SpaceFirst => {
            let pos = rep
                .signature
                .position_of_label(rep.d())
                .ok_or_else(|| QftError::UnsupportedSignature(rep.signature.to_string()))?;
            Ok(rep.matrices[pos].scale(&GaussScalar::i()))
        }
    }
}

fn bar_row(w: &[GaussScalar], anchor: &ExactMatrix) -> Vec<GaussScalar> {
    let n = anchor.dim();
    (0..n)
        .map(|j| {
            let mut acc = GaussScalar::zero();
            for (k, wk) in w.iter().enumerate() {
                acc += wk.conj() * anchor.get(k, j).clone();
            }
            acc
        })
        .collect()
}

fn bar_pairing(w: &[GaussScalar], x: &[GaussScalar], anchor: &ExactMatrix) -> GaussScalar {
    bar_row(w, anchor)
        .iter()
        .zip(x)
        .map(|(b, xi)| b.clone() * xi.clone())
        .fold(GaussScalar::zero(), |a, v| a + v)
}

#[derive(Debug, Clone)]
pub struct PlaneWaves {
    pub u: Vec<Vec<GaussScalar>>,
    pub v: Vec<Vec<GaussScalar>>,
    /// Dirac norms ubar_r u_r of the (unnormalized) orthogonal U basis.
    pub u_norms: Vec<GaussScalar>,
    pub v_norms: Vec<GaussScalar>,
}

/// Kernel bases of the U and V Dirac operators, orthogonalized with respect
/// to the Dirac pairing.  No scaling is applied (exact norms are kept as
/// data): ubar u is positive and vbar v negative on each basis vector.
pub fn plane_wave_solutions(rep: &GammaRep, p: &FourMomentum) -> Result<PlaneWaves, QftError> {
    let anchor = anchor_matrix(rep)?;
    let mut out = PlaneWaves {
        u: vec![],
        v: vec![],
        u_norms: vec![],
        v_norms: vec![],
    };
    for kind in [SpinorKind::U, SpinorKind::V] {
        let op = dirac_operator(rep, p, kind)?;
        let raw = op.kernel();
        let mut basis: Vec<Vec<GaussScalar>> = vec![];
        for w in raw {
            let mut w = w;
            for b in &basis {
                let nb = bar_pairing(b, b, &anchor);
                let c = bar_pairing(b, &w, &anchor) * nb.inv().ok_or(QftError::DegenerateKernel)?;
                for (wi, bi) in w.iter_mut().zip(b) {
                    *wi = wi.clone() - c.clone() * bi.clone();
                }
            }
            basis.push(w);
        }
        let norms: Vec<GaussScalar> = basis
            .iter()
            .map(|w| bar_pairing(w, w, &anchor))
            .collect();
        match kind {
            SpinorKind::U => {
                out.u = basis;
                out.u_norms = norms;
            }
            SpinorKind::V => {
                out.v = basis;
                out.v_norms = norms;
            }
        }
    }
    Ok(out)
}

/// Spin sum built directly from a kernel basis W via the Gram weighting
/// +-2m W (Wbar W)^{-1} Wbar, which reproduces the normalization
/// ubar_r u_s = 2m delta_rs (resp. -2m for V) without taking square roots.
pub fn spin_sum(rep: &GammaRep, p: &FourMomentum, kind: SpinorKind) -> Result<ExactMatrix, QftError> {
    let anchor = anchor_matrix(rep)?;
    let op = dirac_operator(rep, p, kind)?;
    let basis = op.kernel();
    let k = basis.len();
    if k == 0 {
        return Err(QftError::DegenerateKernel);
    }
    let mut gram = ExactMatrix::zero(k);
    for r in 0..k {
        for s in 0..k {
            gram.set(r, s, bar_pairing(&basis[r], &basis[s], &anchor));
        }
    }
    let gram_inv = gram.inverse().map_err(|_| QftError::DegenerateKernel)?;
    let bars: Vec<Vec<GaussScalar>> = basis.iter().map(|w| bar_row(w, &anchor)).collect();
    let scale = match kind {
        SpinorKind::U => int_scalar(2) * p.mass.clone(),
        SpinorKind::V => int_scalar(-2) * p.mass.clone(),
    };
    let n = rep.dim();
    let mut out = ExactMatrix::zero(n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = GaussScalar::zero();
            for r in 0..k {
                for s in 0..k {
                    acc += basis[r][i].clone() * gram_inv.get(r, s).clone() * bars[s][j].clone();
                }
            }
            out.set(i, j, scale.clone() * acc);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ParityHypothesis {
    Plus,
    Minus,
}

/// Momenta are covariant components in the standard (1,3) labeling; a hat-
/// convention rep relabels them internally.  Nothing is assumed on-shell.
#[derive(Debug, Clone)]
pub struct SigmaDecayInput {
    pub q_lambda: Vec<GaussScalar>,
    pub p_sigma: Vec<GaussScalar>,
    pub k_photon: Vec<GaussScalar>,
    pub k1_positron: Vec<GaussScalar>,
    pub k2_electron: Vec<GaussScalar>,
    pub m_sigma: GaussScalar,
    pub m_lambda: GaussScalar,
    pub m_electron: GaussScalar,
}

fn bivectors(rep: &GammaRep) -> Vec<Vec<ExactMatrix>> {
    let half_i = GaussScalar::from_ratio(1, 2) * GaussScalar::i();
    (0..rep.d())
        .map(|mu| {
            (0..rep.d())
                .map(|nu| {
                    let comm =
                        &(&rep.matrices[mu] * &rep.matrices[nu]) - &(&rep.matrices[nu] * &rep.matrices[mu]);
                    comm.scale(&half_i)
                })
                .collect()
        })
        .collect()
}

/// Squared matrix element for Sigma0 -> Lambda0 e+ e- as a pure trace
/// contraction, under the parity hypothesis Lambda = +-P Lambda P^{-1}.
/// The standard and hat conventions use their own metric for raising and
/// their own relative signs between the trace terms.
pub fn sigma_decay_trace(
    rep: &GammaRep,
    input: &SigmaDecayInput,
    hyp: ParityHypothesis,
) -> Result<GaussScalar, QftError> {
    if rep.d() != 4 {
        return Err(QftError::UnsupportedSignature(rep.signature.to_string()));
    }
    let hat = matches!(rep.signature.convention, IndexConvention::SpaceFirst);
    let remap = |p: &Vec<GaussScalar>| -> Result<Vec<GaussScalar>, QftError> {
        if hat {
            hat_components(p)
        } else {
            Ok(p.clone())
        }
    };
    let q = remap(&input.q_lambda)?;
    let p = remap(&input.p_sigma)?;
    let k = remap(&input.k_photon)?;
    let k1 = remap(&input.k1_positron)?;
    let k2 = remap(&input.k2_electron)?;

    let sig = bivectors(rep);
    let qs = slash(rep, &q)?;
    let ps = slash(rep, &p)?;
    let k1s = slash(rep, &k1)?;
    let k2s = slash(rep, &k2)?;
    let mm = input.m_sigma.clone() * input.m_lambda.clone();
    let me2 = input.m_electron.clone() * input.m_electron.clone();

    // Relative signs of the mass terms and of the lepton trace differ
    // between the conventions; the hypothesis flips with them.
    let (mm_sign, lep_sign) = match (hat, hyp) {
        (false, ParityHypothesis::Plus) => (1i64, 1i64),
        (false, ParityHypothesis::Minus) => (-1, 1),
        (true, ParityHypothesis::Plus) => (-1, -1),
        (true, ParityHypothesis::Minus) => (1, -1),
    };

    let d = rep.d();
    // Lepton tensor with both indices raised by the rep's own metric.
    let mut lepton = vec![vec![GaussScalar::zero(); d]; d];
    for nu in 0..d {
        for rho in 0..d {
            let g_nu = rep.matrices[nu].scale(&metric_scalar(rep.metric[nu]));
            let g_rho = rep.matrices[rho].scale(&metric_scalar(rep.metric[rho]));
            let t4 = (&(&(&k1s * &g_nu) * &k2s) * &g_rho).trace();
            let t2 = (&g_nu * &g_rho).trace();
            lepton[nu][rho] = int_scalar(lep_sign) * t4 - me2.clone() * t2;
        }
    }
    // Baryon factors q_slash sigma_{mu nu} and p_slash sigma_{rho sigma}.
    let mut qsig = vec![vec![ExactMatrix::zero(rep.dim()); d]; d];
    let mut psig = vec![vec![ExactMatrix::zero(rep.dim()); d]; d];
    for a in 0..d {
        for b in 0..d {
            qsig[a][b] = &qs * &sig[a][b];
            psig[a][b] = &ps * &sig[a][b];
        }
    }
    let k_up: Vec<GaussScalar> = (0..d)
        .map(|mu| metric_scalar(rep.metric[mu]) * k[mu].clone())
        .collect();

    let mut total = GaussScalar::zero();
    for mu in 0..d {
        for sigma in 0..d {
            let kk = k_up[mu].clone() * k_up[sigma].clone();
            if kk.is_zero() {
                continue;
            }
            for nu in 0..d {
                for rho in 0..d {
                    if lepton[nu][rho].is_zero() {
                        continue;
                    }
                    let t1 = (&qsig[mu][nu] * &psig[rho][sigma]).trace();
                    let t2 = (&sig[mu][nu] * &sig[rho][sigma]).trace();
                    let baryon = t1 + int_scalar(mm_sign) * mm.clone() * t2;
                    total += kk.clone() * baryon * lepton[nu][rho].clone();
                }
            }
        }
    }
    Ok(total)
}

/// One two-body reaction for intrinsic-parity bookkeeping.  `None` marks the
/// single unknown phase to solve for.
#[derive(Debug, Clone)]
pub struct ParityReaction {
    pub l_initial: u32,
    pub l_final: u32,
    pub initial: Vec<Option<GaussScalar>>,
    pub final_state: Vec<Option<GaussScalar>>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ParityOutcome {
    Holds,
    Violated,
    Solved(GaussScalar),
}

fn neg_one_pow(n: u32) -> GaussScalar {
    if n % 2 == 0 {
        GaussScalar::one()
    } else {
        -GaussScalar::one()
    }
}

/// Enforces (-1)^{l_i} prod(eta_initial) = (-1)^{l_f} prod(eta_final).
/// With no unknowns reports Holds/Violated; with exactly one unknown solves
/// for it; more than one unknown is an error.  All phases must be fourth
/// roots of unity.
pub fn parity_conservation_check(r: &ParityReaction) -> Result<ParityOutcome, QftError> {
    let mut unknowns = 0usize;
    let mut unknown_initial = false;
    let mut lhs = neg_one_pow(r.l_initial);
    let mut rhs = neg_one_pow(r.l_final);
    for (side_initial, phases) in [(true, &r.initial), (false, &r.final_state)] {
        for ph in phases.iter() {
            match ph {
                Some(eta) => {
                    if !eta.is_fourth_root_of_unity() {
                        return Err(QftError::PhaseNotFourthRoot(eta.to_string()));
                    }
                    if side_initial {
                        lhs = lhs * eta.clone();
                    } else {
                        rhs = rhs * eta.clone();
                    }
                }
                None => {
                    unknowns += 1;
                    unknown_initial = side_initial;
                }
            }
        }
    }
    match unknowns {
        0 => Ok(if lhs == rhs {
            ParityOutcome::Holds
        } else {
            ParityOutcome::Violated
        }),
        1 => {
            let sol = if unknown_initial {
                rhs / lhs
            } else {
                lhs / rhs
            };
            if !sol.is_fourth_root_of_unity() {
                return Err(QftError::Inconsistent(format!(
                    "solved phase {sol} is not a fourth root of unity"
                )));
            }
            Ok(ParityOutcome::Solved(sol))
        }
        n => Err(QftError::Inconsistent(format!("{n} unknown phases"))),
    }
}

/// Intrinsic pion parity from pi- d -> n n capture at rest (l_i = 0, the
/// deuteron carries eta_p eta_n, and the nn pair is forced into l_f = 1).
pub fn pion_intrinsic_parity(
    eta_p: &GaussScalar,
    eta_n: &GaussScalar,
) -> Result<GaussScalar, QftError> {
    let reaction = ParityReaction {
        l_initial: 0,
        l_final: 1,
        initial: vec![None, Some(eta_p.clone() * eta_n.clone())],
        final_state: vec![Some(eta_n.clone()), Some(eta_n.clone())],
    };
    match parity_conservation_check(&reaction)? {
        ParityOutcome::Solved(eta) => Ok(eta),
        other => Err(QftError::Inconsistent(format!(
            "expected a solved phase, got {other:?}"
        ))),
    }
}

/// (l, s) channels open to an identical-nucleon pair of total angular
/// momentum j: antisymmetry demands (-1)^{l+s+1} = -1, i.e. l + s even.
pub fn pion_final_state(j: u32) -> Vec<(u32, u32)> {
    let mut out = vec![];
    for l in 0..=j + 1 {
        for s in 0..=1u32 {
            let lo = l.abs_diff(s);
            let hi = l + s;
            if lo <= j && j <= hi && (l + s) % 2 == 0 {
                out.push((l, s));
            }
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct PositroniumReport {
    pub p_factor: GaussScalar,
    pub c_factor: GaussScalar,
    /// Smallest photon number compatible with the C eigenvalue (each photon
    /// contributes -1), when the C factor is +-1.
    pub min_photons: Option<u32>,
}

/// P and C eigenvalues of an e+ e- state with orbital l and total spin s,
/// given the phase products eta_a eta_b and xi_a xi_b.
pub fn positronium_phases(
    l: u32,
    s: u32,
    eta_product: &GaussScalar,
    xi_product: &GaussScalar,
) -> PositroniumReport {
    let p_factor = eta_product.clone() * neg_one_pow(l);
    let c_factor = xi_product.clone() * neg_one_pow(l + s);
    let min_photons = if c_factor == GaussScalar::one() {
        Some(2)
    } else if c_factor == -GaussScalar::one() {
        Some(3)
    } else {
        None
    };
    PositroniumReport {
        p_factor,
        c_factor,
        min_photons,
    }
}

/// The discrete phases attached to one fermion species pair.
#[derive(Debug, Clone)]
pub struct PhaseLedger {
    pub eta_a: GaussScalar,
    pub eta_b: GaussScalar,
    pub xi_a: GaussScalar,
    pub xi_b: GaussScalar,
    /// Intrinsic parity of the spatial-inversion matrix itself (lambda in
    /// the standard convention, lambda-hat in the other).
    pub lambda: GaussScalar,
    pub majorana: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct LedgerReport {
    /// (eta_a / lambda)^4 = 1.
    pub quartic_ok: bool,
    /// eta_a eta_b = -1 for a fermion-antifermion pair.
    pub fermion_pair_ok: bool,
    /// xi_a xi_b = 1.
    pub charge_pair_ok: bool,
    /// Majorana condition forces an imaginary intrinsic parity.
    pub majorana_ok: Option<bool>,
    pub eta_over_lambda: GaussScalar,
    pub eta_over_lambda_real: bool,
}

pub fn ledger_constraints(ledger: &PhaseLedger) -> Result<LedgerReport, QftError> {
    for ph in [
        &ledger.eta_a,
        &ledger.eta_b,
        &ledger.xi_a,
        &ledger.xi_b,
        &ledger.lambda,
    ] {
        if !ph.is_fourth_root_of_unity() {
            return Err(QftError::PhaseNotFourthRoot(ph.to_string()));
        }
    }
    let eta_over_lambda = ledger.eta_a.clone() / ledger.lambda.clone();
    Ok(LedgerReport {
        quartic_ok: true,
        fermion_pair_ok: ledger.eta_a.clone() * ledger.eta_b.clone() == -GaussScalar::one(),
        charge_pair_ok: ledger.xi_a.clone() * ledger.xi_b.clone() == GaussScalar::one(),
        majorana_ok: if ledger.majorana {
            Some(ledger.eta_a.is_imaginary() && !ledger.eta_a.is_zero())
        } else {
            None
        },
        eta_over_lambda_real: eta_over_lambda.is_real(),
        eta_over_lambda,
    })
}

/// Sign test: positive real rational.
pub fn is_positive_real(x: &GaussScalar) -> bool {
    x.is_real() && ratio_sign(&x.re) > 0
}
