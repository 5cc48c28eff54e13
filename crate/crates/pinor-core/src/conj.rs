//! Charge conjugation, Hermitian similarity, Dirac adjoint signs,
//! antiunitary time reversal, Majorana compatibility, Kramers degeneracy,
//! and the CPT composite, in both Pin(1,3) and Pin(3,1).
//!
//! Every conjugation matrix is found by exhaustive signed-monomial search,
//! which is complete for the monomial-generated representations used here
//! and yields the monomial identities (e.g. C = ±Γ₂) directly.

use crate::clifford::{GammaRep, IndexConvention};
use crate::cover::{named_elements, CoverElement, LorentzMatrix};
use crate::matrix::ExactMatrix;
use crate::scalar::GaussScalar;
use num_traits::One;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConjError {
    #[error("no named elements for signature {0}")]
    UnsupportedSignature(String),
    #[error("required conjugation matrix does not exist for this representation")]
    Missing,
    #[error("conjugation did not produce a scalar multiple of the identity")]
    NotScalar,
    #[error("composite is not proportional to the expected monomial")]
    WrongMonomial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SimilaritySign {
    Plus,
    Minus,
}

impl SimilaritySign {
    pub fn factor(self) -> GaussScalar {
        match self {
            SimilaritySign::Plus => GaussScalar::one(),
            SimilaritySign::Minus => -GaussScalar::one(),
        }
    }
}

/// Result of a similarity search: the solving monomial if any, the value
/// of M·M* when meaningful, and whether a solution exists at all.
/// Nonexistence is a normal outcome in odd dimensions.
#[derive(Debug, Clone)]
pub struct ConjugationResult {
    pub exists: bool,
    pub sign: SimilaritySign,
    pub mask: Option<u32>,
    pub matrix: Option<ExactMatrix>,
    /// sign of M·M* (±1) when a solution exists.
    pub mm_star: Option<i8>,
    pub expr: Option<String>,
}

enum SimilarityKind {
    /// M⁻¹ Γ†_α M = ±Γ_α
    Dagger,
    /// M Γ*_α M⁻¹ = ±Γ_α
    Star,
}

fn monomial_similarity(
    rep: &GammaRep,
    kind: SimilarityKind,
    sign: SimilaritySign,
) -> ConjugationResult {
    let factor = sign.factor();
    let mut found: Vec<u32> = Vec::new();
    for mask in 0..(1u32 << rep.d()) {
        let m = rep.monomial(mask);
        let m_inv = m.inverse().expect("monomials are invertible");
        let ok = rep.matrices.iter().all(|g| {
            let lhs = match kind {
                SimilarityKind::Dagger => &(&m_inv * &g.dagger()) * &m,
                SimilarityKind::Star => &(&m * &g.conjugate()) * &m_inv,
            };
            lhs == g.scale(&factor)
        });
        if ok {
            found.push(mask);
        }
    }
    // In odd d the central monomial Γ₁…Γ_d acts as a scalar in an irrep,
    // so solutions come in proportional pairs; count equivalence classes
    // up to scalar and demand uniqueness.
    let mut classes: Vec<u32> = Vec::new();
    for &mask in &found {
        let m = rep.monomial(mask);
        if !classes
            .iter()
            .any(|&c| m.as_scalar_multiple_of(&rep.monomial(c)).is_some())
        {
            classes.push(mask);
        }
    }
    assert!(
        classes.len() <= 1,
        "similarity solution not unique up to scalar: {classes:?}"
    );
    match classes.first() {
        None => ConjugationResult {
            exists: false,
            sign,
            mask: None,
            matrix: None,
            mm_star: None,
            expr: None,
        },
        Some(&mask) => {
            let m = rep.monomial(mask);
            let mm_star = (&m * &m.conjugate())
                .as_scalar_multiple_of_identity()
                .map(|s| if s == GaussScalar::one() { 1i8 } else { -1i8 });
            let expr = CoverElement::from_mask(rep, mask, GaussScalar::one()).to_string();
            ConjugationResult {
                exists: true,
                sign,
                mask: Some(mask),
                matrix: Some(m),
                mm_star,
                expr: Some(expr),
            }
        }
    }
}

/// Charge conjugation: solves C Γ*_α C⁻¹ = −Γ_α (Minus, the Pin(1,3) form)
/// or Ĉ Γ̂*_α Ĉ⁻¹ = +Γ̂_α (Plus, the Pin(3,1) form) and reports CC*.
pub fn charge_conj(rep: &GammaRep, sign: SimilaritySign) -> ConjugationResult {
    monomial_similarity(rep, SimilarityKind::Star, sign)
}

/// Hermitian similarity: solves H±⁻¹ Γ†_α H± = ±Γ_α. Both signs exist for
/// even d; for odd d exactly one does (see odd_conj_choice).
pub fn hermitian_similarity(rep: &GammaRep, sign: SimilaritySign) -> ConjugationResult {
    monomial_similarity(rep, SimilarityKind::Dagger, sign)
}

/// Closed-form prediction of which H± and C± exist for t + s odd, with t
/// counting the generators squaring to +1. With unitary generators the
/// +1-square ones are forced hermitian and the −1-square ones
/// antihermitian, which pins the answer:
///   H₊ exists iff t is odd (H₋ iff t is even);
///   C₊ exists iff (t − s + 1) mod 4 = 2 (C₋ iff it is 0).
/// Stating the same rules with t and s exchanged (counting −1 squares as
/// "time") swaps ± in both lines, matching the hatted relation Ĥ± = H∓.
pub fn odd_conj_choice(t: usize, s: usize) -> (SimilaritySign, SimilaritySign) {
    assert!((t + s) % 2 == 1, "odd_conj_choice needs t + s odd");
    let h = if t % 2 == 1 {
        SimilaritySign::Plus
    } else {
        SimilaritySign::Minus
    };
    let c = if (t as i64 - s as i64 + 1).rem_euclid(4) == 2 {
        SimilaritySign::Plus
    } else {
        SimilaritySign::Minus
    };
    (h, c)
}

/// The charge conjugation sign a signature prescribes: Minus for (1,3)-type
/// reps, Plus for (3,1)-type.
pub fn canonical_c_sign(rep: &GammaRep) -> SimilaritySign {
    if rep.signature.plus == 1 && rep.signature.minus == 3 {
        SimilaritySign::Minus
    } else {
        SimilaritySign::Plus
    }
}

/// The Dirac-adjoint anchor: Γ₀ in (1,3), Γ̂₄ in (3,1), selected by the
/// index convention of the signature.
pub fn adjoint_anchor(rep: &GammaRep) -> Result<ExactMatrix, ConjError> {
    let label = match rep.signature.convention {
        IndexConvention::TimeFirst => 0,
        IndexConvention::SpaceFirst => rep.d(),
    };
    let pos = rep
        .signature
        .position_of_label(label)
        .ok_or_else(|| ConjError::UnsupportedSignature(rep.signature.to_string()))?;
    Ok(rep.matrices[pos].clone())
}

/// a(Λ) from anchor⁻¹ Λ† anchor Λ = a·I; fails if the product is not scalar.
pub fn dirac_adjoint_sign(rep: &GammaRep, lambda: &ExactMatrix) -> Result<i8, ConjError> {
    let anchor = adjoint_anchor(rep)?;
    let anchor_inv = anchor.inverse().map_err(|_| ConjError::NotScalar)?;
    let prod = &(&(&anchor_inv * &lambda.dagger()) * &anchor) * lambda;
    let s = prod
        .as_scalar_multiple_of_identity()
        .ok_or(ConjError::NotScalar)?;
    if s == GaussScalar::one() {
        Ok(1)
    } else if s == -GaussScalar::one() {
        Ok(-1)
    } else {
        Err(ConjError::NotScalar)
    }
}

/// a(Λ) over the four component representatives {I, Λ_P, Λ_T, Λ_PΛ_T}
/// (parity element P(3)): +1 on the identity and parity components, −1 on
/// the time-reversing ones.
pub fn adjoint_sign_table(rep: &GammaRep) -> Result<Vec<(String, i8)>, ConjError> {
    let named =
        named_elements(rep).map_err(|_| ConjError::UnsupportedSignature(rep.signature.to_string()))?;
    let p = named
        .iter()
        .find(|n| n.label == "P(3)")
        .ok_or(ConjError::Missing)?
        .pair
        .plus
        .matrix
        .clone();
    let t = named
        .iter()
        .find(|n| n.label == "T")
        .ok_or(ConjError::Missing)?
        .pair
        .plus
        .matrix
        .clone();
    let pt = &p * &t;
    let reps = [
        ("1I".to_string(), ExactMatrix::identity(rep.dim())),
        ("P".to_string(), p),
        ("T".to_string(), t),
        ("PT".to_string(), pt),
    ];
    reps.into_iter()
        .map(|(label, m)| dirac_adjoint_sign(rep, &m).map(|a| (label, a)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MajoranaVerdict {
    Compatible,
    Incompatible,
}

/// Whether the Majorana condition ψᶜ = ψ survives parity: tests the matrix
/// identity Λ_P C = ε C Λ_P* for both named parities and both ± choices of
/// Λ_P; ε = +1 is Compatible ((3,1)), ε = −1 Incompatible ((1,3)).
pub fn majorana_parity_test(rep: &GammaRep) -> Result<(MajoranaVerdict, i8), ConjError> {
    let c = charge_conj(rep, canonical_c_sign(rep));
    let c_mat = c.matrix.ok_or(ConjError::Missing)?;
    let named =
        named_elements(rep).map_err(|_| ConjError::UnsupportedSignature(rep.signature.to_string()))?;
    let mut eps: Option<i8> = None;
    for label in ["P(1)", "P(3)"] {
        let pair = &named.iter().find(|n| n.label == label).ok_or(ConjError::Missing)?.pair;
        for lam_p in [&pair.plus.matrix, &pair.minus.matrix] {
            let lhs = lam_p * &c_mat;
            let rhs = &c_mat * &lam_p.conjugate();
            let e = if lhs == rhs {
                1i8
            } else if lhs == rhs.scale(&-GaussScalar::one()) {
                -1
            } else {
                return Err(ConjError::NotScalar);
            };
            match eps {
                None => eps = Some(e),
                Some(prev) if prev == e => {}
                _ => return Err(ConjError::NotScalar),
            }
        }
    }
    let e = eps.unwrap();
    Ok((
        if e == 1 {
            MajoranaVerdict::Compatible
        } else {
            MajoranaVerdict::Incompatible
        },
        e,
    ))
}

#[derive(Debug, Clone)]
pub struct AntiunitaryT {
    pub matrix: ExactMatrix,
    /// ζ with ζ·𝒜_T = −Γ₁Γ₃, the Peskin-Schroeder normalization, reported
    /// when 𝒜_T is proportional to Γ₁Γ₃ (the (1,3) case); all sign choices
    /// of Λ_T and C are equally valid, this one is only tagged.
    pub peskin_schroeder_zeta: Option<GaussScalar>,
}

/// 𝒜_T = Λ_T·C, verified against the antiunitary similarity
/// 𝒜_T Γ*_α 𝒜_T⁻¹ = s·Γ_β T^β_α, where s is the sign carried by the
/// charge conjugation (so with s = −1 this is the index-raising relation
/// 𝒜_T Γ*_α 𝒜_T⁻¹ = Γ^α familiar from the −Γ₁Γ₃ normalization).
pub fn antiunitary_t(rep: &GammaRep) -> Result<AntiunitaryT, ConjError> {
    let named =
        named_elements(rep).map_err(|_| ConjError::UnsupportedSignature(rep.signature.to_string()))?;
    let lam_t = &named.iter().find(|n| n.label == "T").ok_or(ConjError::Missing)?.pair.plus.matrix;
    let t_lorentz = &named.iter().find(|n| n.label == "T").ok_or(ConjError::Missing)?.lorentz;
    let c = charge_conj(rep, canonical_c_sign(rep));
    let c_mat = c.matrix.ok_or(ConjError::Missing)?;
    let a_t = lam_t * &c_mat;
    let s = canonical_c_sign(rep).factor();
    let a_inv = a_t.inverse().map_err(|_| ConjError::NotScalar)?;
    for alpha in 0..rep.d() {
        let lhs = &(&a_t * &rep.matrices[alpha].conjugate()) * &a_inv;
        let mut rhs = ExactMatrix::zero(rep.dim());
        for beta in 0..rep.d() {
            if !t_lorentz.entries[beta][alpha].is_zero() {
                let coeff = s.clone() * t_lorentz.entries[beta][alpha].clone();
                rhs = &rhs + &rep.matrices[beta].scale(&coeff);
            }
        }
        if lhs != rhs {
            return Err(ConjError::WrongMonomial);
        }
    }
    // Peskin-Schroeder tag: ζ 𝒜_T = −Γ₁Γ₃ in (1,3)
    let zeta = if rep.signature.convention == IndexConvention::TimeFirst && rep.d() == 4 {
        let g13 = (&rep.matrices[1] * &rep.matrices[3]).scale(&-GaussScalar::one());
        g13.as_scalar_multiple_of(&a_t)
    } else {
        None
    };
    Ok(AntiunitaryT {
        matrix: a_t,
        peskin_schroeder_zeta: zeta,
    })
}

/// 𝒜_T 𝒜_T* as a scalar (Kramers: −1 in both signatures).
pub fn kramers_check(rep: &GammaRep) -> Result<GaussScalar, ConjError> {
    let a_t = antiunitary_t(rep)?.matrix;
    (&a_t * &a_t.conjugate())
        .as_scalar_multiple_of_identity()
        .ok_or(ConjError::NotScalar)
}

#[derive(Debug, Clone)]
pub struct CptReport {
    pub matrix: ExactMatrix,
    /// composite = scalar · Γ₁Γ₂…Γ_d (the full generator product, ∝ Γ₅ and
    /// ∝ Λ_PΛ_T); |scalar| = 1.
    pub scalar: GaussScalar,
    pub lorentz_det: GaussScalar,
}

/// The pinor-space matrix of the composed C, P(3), antiunitary-T action:
/// ψ ↦ C (Λ_P (𝒜_T ψ*))* = C Λ_P* 𝒜_T* ψ (the two complex conjugations
/// cancel, leaving a linear map). Verified proportional to the full
/// generator product with a unit-modulus scalar; the underlying Lorentz
/// image is PT = −I with det +1.
pub fn cpt_composite(rep: &GammaRep) -> Result<CptReport, ConjError> {
    let named =
        named_elements(rep).map_err(|_| ConjError::UnsupportedSignature(rep.signature.to_string()))?;
    let lam_p = &named.iter().find(|n| n.label == "P(3)").ok_or(ConjError::Missing)?.pair.plus.matrix;
    let c = charge_conj(rep, canonical_c_sign(rep));
    let c_mat = c.matrix.ok_or(ConjError::Missing)?;
    let a_t = antiunitary_t(rep)?.matrix;
    let composite = &(&c_mat * &lam_p.conjugate()) * &a_t.conjugate();
    let full = rep.gamma_dp1();
    let scalar = composite
        .as_scalar_multiple_of(&full)
        .ok_or(ConjError::WrongMonomial)?;
    if !scalar.norm_sqr().is_one() {
        return Err(ConjError::WrongMonomial);
    }
    let pt = LorentzMatrix::minus_identity(&rep.metric);
    Ok(CptReport {
        matrix: composite,
        scalar,
        lorentz_det: pt.det(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{GammaRep, KBranch, OddTarget};

    fn dirac() -> GammaRep {
        GammaRep::dirac13()
    }

    fn hat() -> GammaRep {
        GammaRep::hat_from13(GammaRep::dirac13())
    }

    #[test]
    fn charge_conj_is_gamma2() {
        let c = charge_conj(&dirac(), SimilaritySign::Minus);
        assert!(c.exists);
        assert_eq!(c.mask, Some(0b0100)); // Γ₂
        assert_eq!(c.mm_star, Some(1)); // CC* = +I
        let ch = charge_conj(&hat(), SimilaritySign::Plus);
        assert!(ch.exists);
        assert_eq!(ch.mask, Some(0b0010)); // Γ̂₂ at position 1
        assert_eq!(ch.mm_star, Some(1));
    }

    #[test]
    fn double_charge_conjugation_is_identity() {
        for (rep, sign) in [(dirac(), SimilaritySign::Minus), (hat(), SimilaritySign::Plus)] {
            let c = charge_conj(&rep, sign).matrix.unwrap();
            // ψᶜ = Cψ*; (ψᶜ)ᶜ = C(Cψ*)* = CC*ψ
            let psi: Vec<GaussScalar> = vec![
                GaussScalar::from_parts(1, 1, 2, 1),
                GaussScalar::from_parts(-3, 2, 0, 1),
                GaussScalar::from_parts(0, 1, 5, 3),
                GaussScalar::from_parts(7, 4, -1, 6),
            ];
            let once: Vec<GaussScalar> = c.apply(&psi.iter().map(|x| x.conj()).collect::<Vec<_>>());
            let twice: Vec<GaussScalar> =
                c.apply(&once.iter().map(|x| x.conj()).collect::<Vec<_>>());
            assert_eq!(twice, psi);
        }
    }

    #[test]
    fn hermitian_similarity_even_d() {
        let hp = hermitian_similarity(&dirac(), SimilaritySign::Plus);
        assert!(hp.exists);
        assert_eq!(hp.mask, Some(0b0001)); // Γ₀
        let hm = hermitian_similarity(&dirac(), SimilaritySign::Minus);
        assert!(hm.exists);
        assert_eq!(hm.mask, Some(0b1110)); // Γ₁Γ₂Γ₃
    }

    #[test]
    fn odd_d_exactly_one_h_and_c() {
        // d = 3 small reps and d = 5 extensions of the chiral rep
        let cases: Vec<GammaRep> = vec![
            GammaRep::small(1, 2).unwrap(),
            GammaRep::small(2, 1).unwrap(),
            GammaRep::small(3, 0).unwrap(),
            GammaRep::small(0, 3).unwrap(),
            GammaRep::chiral13()
                .extend_to_odd(OddTarget::AddSpace, KBranch::PlusK)
                .unwrap(), // (1,4)
            GammaRep::chiral13()
                .extend_to_odd(OddTarget::AddTime, KBranch::PlusK)
                .unwrap(), // (2,3)
        ];
        for rep in cases {
            let (t, s) = (rep.signature.plus, rep.signature.minus);
            let (h_pred, c_pred) = odd_conj_choice(t, s);
            let hp = hermitian_similarity(&rep, SimilaritySign::Plus);
            let hm = hermitian_similarity(&rep, SimilaritySign::Minus);
            assert_ne!(hp.exists, hm.exists, "exactly one H± for ({t},{s})");
            let h_found = if hp.exists { SimilaritySign::Plus } else { SimilaritySign::Minus };
            assert_eq!(h_found, h_pred, "H sign for ({t},{s})");
            let cp = charge_conj(&rep, SimilaritySign::Plus);
            let cm = charge_conj(&rep, SimilaritySign::Minus);
            assert_ne!(cp.exists, cm.exists, "exactly one C± for ({t},{s})");
            let c_found = if cp.exists { SimilaritySign::Plus } else { SimilaritySign::Minus };
            assert_eq!(c_found, c_pred, "C sign for ({t},{s})");
        }
    }

    #[test]
    fn adjoint_signs_both_signatures() {
        for rep in [dirac(), GammaRep::chiral13(), hat(), GammaRep::majorana31()] {
            let table = adjoint_sign_table(&rep).unwrap();
            let get = |l: &str| table.iter().find(|(label, _)| label == l).unwrap().1;
            assert_eq!(get("1I"), 1);
            assert_eq!(get("P"), 1);
            assert_eq!(get("T"), -1);
            assert_eq!(get("PT"), -1);
            // multiplicativity over the representatives
            assert_eq!(get("PT"), get("P") * get("T"));
        }
    }

    #[test]
    fn majorana_parity() {
        let (verdict13, eps13) = majorana_parity_test(&dirac()).unwrap();
        assert_eq!(verdict13, MajoranaVerdict::Incompatible);
        assert_eq!(eps13, -1);
        for rep31 in [hat(), GammaRep::majorana31()] {
            let (verdict, eps) = majorana_parity_test(&rep31).unwrap();
            assert_eq!(verdict, MajoranaVerdict::Compatible);
            assert_eq!(eps, 1);
        }
        // (3,1): Λ̂*_P = −Λ̂_P for the HatFrom13 parity γ̂₄ = iΓ₀
        let named = named_elements(&hat()).unwrap();
        let lp = &named.iter().find(|n| n.label == "P(3)").unwrap().pair.plus.matrix;
        assert_eq!(lp.conjugate(), lp.scale(&-GaussScalar::one()));
    }

    #[test]
    fn parity_eigenvalues() {
        // (1,3): Λ_P(3)² = +I → eigenvalues ±1, both occupied
        let named = named_elements(&dirac()).unwrap();
        let lp = &named.iter().find(|n| n.label == "P(3)").unwrap().pair.plus.matrix;
        for lam in [GaussScalar::one(), -GaussScalar::one()] {
            let shifted = lp - &ExactMatrix::identity(4).scale(&lam);
            assert!(!shifted.kernel().is_empty(), "eigenvalue {lam} missing");
        }
        // (3,1): Λ̂_P(3)² = −I → eigenvalues ±i
        let named = named_elements(&hat()).unwrap();
        let lph = &named.iter().find(|n| n.label == "P(3)").unwrap().pair.plus.matrix;
        for lam in [GaussScalar::i(), -GaussScalar::i()] {
            let shifted = lph - &ExactMatrix::identity(4).scale(&lam);
            assert!(!shifted.kernel().is_empty(), "eigenvalue {lam} missing");
        }
    }

    #[test]
    fn antiunitary_t_structure() {
        let at = antiunitary_t(&dirac()).unwrap();
        // ∝ Γ₁Γ₃, an even monomial
        let g13 = &dirac().matrices[1] * &dirac().matrices[3];
        let s = at.matrix.as_scalar_multiple_of(&g13).unwrap();
        assert!(s.norm_sqr().is_one());
        let zeta = at.peskin_schroeder_zeta.unwrap();
        // ζ𝒜_T = −Γ₁Γ₃ with a fourth-root-of-unity ζ
        assert!(zeta.is_fourth_root_of_unity());
        assert_eq!(at.matrix.scale(&zeta), g13.scale(&-GaussScalar::one()));
    }

    #[test]
    fn kramers_minus_one_both_signatures() {
        for rep in [dirac(), GammaRep::chiral13(), hat(), GammaRep::majorana31()] {
            assert_eq!(kramers_check(&rep).unwrap(), -GaussScalar::one());
        }
        // contrast: Λ_T² differs between the signatures
        let sq = |rep: &GammaRep| {
            let named = named_elements(rep).unwrap();
            named.iter().find(|n| n.label == "T").unwrap().square
        };
        assert_eq!(sq(&dirac()), 1);
        assert_eq!(sq(&hat()), -1);
    }

    #[test]
    fn cpt_is_full_product() {
        for rep in [dirac(), GammaRep::chiral13(), hat(), GammaRep::majorana31()] {
            let report = cpt_composite(&rep).unwrap();
            assert!(report.scalar.norm_sqr().is_one());
            assert_eq!(report.lorentz_det, GaussScalar::one());
            // ∝ Λ_PΛ_T as well
            let named = named_elements(&rep).unwrap();
            let lp = &named.iter().find(|n| n.label == "P(3)").unwrap().pair.plus.matrix;
            let lt = &named.iter().find(|n| n.label == "T").unwrap().pair.plus.matrix;
            assert!(report.matrix.as_scalar_multiple_of(&(lp * lt)).is_some());
        }
    }

    #[test]
    fn odd_conj_choice_table() {
        assert_eq!(
            odd_conj_choice(1, 2),
            (SimilaritySign::Plus, SimilaritySign::Minus)
        );
        assert_eq!(
            odd_conj_choice(2, 1),
            (SimilaritySign::Minus, SimilaritySign::Plus)
        );
        assert_eq!(
            odd_conj_choice(1, 4),
            (SimilaritySign::Plus, SimilaritySign::Plus)
        );
        assert_eq!(
            odd_conj_choice(0, 3),
            (SimilaritySign::Minus, SimilaritySign::Plus)
        );
    }
}
