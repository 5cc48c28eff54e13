//! Gamma-matrix representations of the real Clifford algebras C(t,s):
//! base four-dimensional representations, odd-dimension extension,
//! tensor construction, chirality/Weyl projections, the mod-8
//! classification, reality census, and the quaternion isomorphism
//! ℍ⊗ℍ ≅ M₄(ℝ).

use crate::matrix::{pauli, rect_rank, ExactMatrix};
use crate::scalar::GaussScalar;
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum IndexConvention {
    /// η = diag(+,−,−,−, …): indices 0..d−1, time first.
    TimeFirst,
    /// η̂ = diag(+,+,+,−, …): indices 1..d, space first.
    SpaceFirst,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Signature {
    /// Count of +1 metric entries.
    pub plus: usize,
    /// Count of −1 metric entries.
    pub minus: usize,
    pub convention: IndexConvention,
}

impl Signature {
    pub fn new(plus: usize, minus: usize, convention: IndexConvention) -> Self {
        assert!(plus + minus >= 1, "need d = t + s >= 1");
        Signature { plus, minus, convention }
    }

    pub fn dim(&self) -> usize {
        self.plus + self.minus
    }

    /// The printed index of the generator in position `i` (0-based internal).
    pub fn label(&self, i: usize) -> usize {
        match self.convention {
            IndexConvention::TimeFirst => i,
            IndexConvention::SpaceFirst => i + 1,
        }
    }

    /// Internal position holding the printed label, if valid.
    pub fn position_of_label(&self, label: usize) -> Option<usize> {
        let off = match self.convention {
            IndexConvention::TimeFirst => 0,
            IndexConvention::SpaceFirst => 1,
        };
        label.checked_sub(off).filter(|&p| p < self.dim())
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.plus, self.minus)
    }
}

/// Construction provenance of a representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum RepKind {
    Chiral13,
    Dirac13,
    Majorana31,
    /// Γ̂_α = iΓ_α built on top of a (1,3) base representation.
    HatFrom13(Box<RepKind>),
    TensorBuilt {
        left: Box<RepKind>,
        right: Box<RepKind>,
        k_sign: KSign,
    },
    OddExtended {
        base: Box<RepKind>,
        target: OddTarget,
        branch: KBranch,
    },
    /// Table-described small-dimension representation.
    Small(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OddTarget {
    AddTime,
    AddSpace,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KBranch {
    PlusK,
    MinusK,
}

/// Sign of (kΓ_{d+1})² in the tensor construction. The signature arithmetic
/// C(t,s)⊗C(t′,s′) = C(t+t′,s+s′) holds for +1 and = C(t+s′,s+t′) for −1;
/// k itself comes out real or imaginary as the base representation demands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KSign {
    KSquaredPlus,
    KSquaredMinus,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliffordError {
    #[error("operation requires even dimension, got d = {0}")]
    OddDimension(usize),
    #[error("operation requires odd dimension, got d = {0}")]
    EvenDimension(usize),
    #[error("pinor length {0} does not match representation dimension {1}")]
    PinorDim(usize, usize),
    #[error("unsupported signature {0}")]
    UnsupportedSignature(String),
}

/// A concrete gamma-matrix representation: generators, their squares
/// (the metric, generator by generator), and provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaRep {
    pub signature: Signature,
    /// metric[i] = ±1 is the square of matrices[i]; plus/minus counts in
    /// `signature` always agree with this vector.
    pub metric: Vec<i8>,
    pub matrices: Vec<ExactMatrix>,
    pub kind: RepKind,
}

impl GammaRep {
    pub fn d(&self) -> usize {
        self.matrices.len()
    }

    pub fn dim(&self) -> usize {
        self.matrices[0].dim()
    }

    fn from_parts(
        plus: usize,
        minus: usize,
        convention: IndexConvention,
        metric: Vec<i8>,
        matrices: Vec<ExactMatrix>,
        kind: RepKind,
    ) -> Self {
        debug_assert_eq!(metric.iter().filter(|&&m| m == 1).count(), plus);
        debug_assert_eq!(metric.iter().filter(|&&m| m == -1).count(), minus);
        GammaRep {
            signature: Signature::new(plus, minus, convention),
            metric,
            matrices,
            kind,
        }
    }

    /// The chiral representation of C(1,3): Γ₀ off-diagonal identity blocks,
    /// Γ_j = [[0, σ_j], [−σ_j, 0]], Γ₅ = iΓ₀Γ₁Γ₂Γ₃ = diag(−1,−1,1,1).
    pub fn chiral13() -> Self {
        let [s1, s2, s3] = pauli();
        let i2 = ExactMatrix::identity(2);
        let block = |tl: &ExactMatrix, tr: &ExactMatrix, bl: &ExactMatrix, br: &ExactMatrix| {
            let mut m = ExactMatrix::zero(4);
            for i in 0..2 {
                for j in 0..2 {
                    m.set(i, j, tl.get(i, j).clone());
                    m.set(i, j + 2, tr.get(i, j).clone());
                    m.set(i + 2, j, bl.get(i, j).clone());
                    m.set(i + 2, j + 2, br.get(i, j).clone());
                }
            }
            m
        };
        let z = ExactMatrix::zero(2);
        let g0 = block(&z, &i2, &i2, &z);
        let gs = [&s1, &s2, &s3].map(|s| block(&z, s, &(-s), &z));
        GammaRep::from_parts(
            1,
            3,
            IndexConvention::TimeFirst,
            vec![1, -1, -1, -1],
            vec![g0, gs[0].clone(), gs[1].clone(), gs[2].clone()],
            RepKind::Chiral13,
        )
    }

    /// The Dirac representation of C(1,3): Γ₀ = diag(1,1,−1,−1), spatial
    /// generators shared with the chiral representation.
    pub fn dirac13() -> Self {
        let mut rep = GammaRep::chiral13();
        rep.matrices[0] = ExactMatrix::from_rows_int(&[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, -1, 0],
            &[0, 0, 0, -1],
        ]);
        rep.kind = RepKind::Dirac13;
        rep
    }

    /// The all-real Majorana representation of C(3,1), indices 1..4 with
    /// η̂ = diag(1,1,1,−1).
    pub fn majorana31() -> Self {
        let g1 = ExactMatrix::from_rows_int(&[
            &[0, 0, 0, -1],
            &[0, 0, 1, 0],
            &[0, 1, 0, 0],
            &[-1, 0, 0, 0],
        ]);
        let g2 = ExactMatrix::from_rows_int(&[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, -1, 0],
            &[0, 0, 0, -1],
        ]);
        let g3 = ExactMatrix::from_rows_int(&[
            &[0, 0, -1, 0],
            &[0, 0, 0, -1],
            &[-1, 0, 0, 0],
            &[0, -1, 0, 0],
        ]);
        let g4 = ExactMatrix::from_rows_int(&[
            &[0, 0, 0, 1],
            &[0, 0, 1, 0],
            &[0, -1, 0, 0],
            &[-1, 0, 0, 0],
        ]);
        GammaRep::from_parts(
            3,
            1,
            IndexConvention::SpaceFirst,
            vec![1, 1, 1, -1],
            vec![g1, g2, g3, g4],
            RepKind::Majorana31,
        )
    }

    /// Γ̂_α = iΓ_α on top of a (1,3) base: the hatted generators are ordered
    /// Γ̂₁..Γ̂₄ = (iΓ₁, iΓ₂, iΓ₃, iΓ₀) so that η̂ = diag(1,1,1,−1).
    pub fn hat_from13(base: GammaRep) -> Self {
        assert_eq!(
            (base.signature.plus, base.signature.minus),
            (1, 3),
            "hat construction needs a (1,3) base"
        );
        let i = GaussScalar::i();
        let mats = vec![
            base.matrices[1].scale(&i),
            base.matrices[2].scale(&i),
            base.matrices[3].scale(&i),
            base.matrices[0].scale(&i),
        ];
        GammaRep::from_parts(
            3,
            1,
            IndexConvention::SpaceFirst,
            vec![1, 1, 1, -1],
            mats,
            RepKind::HatFrom13(Box::new(base.kind)),
        )
    }

    /// Small-dimension representations for d ≤ 3 (the 1-, 2- and
    /// 3-dimensional rows of the gamma-matrix table). d = 1 cases use the
    /// smallest faithful matrix realizations: γ = σ₃ for C(1,0) (the
    /// algebra is ℝ⊕ℝ, whose faithful representation is reducible) and
    /// γ̂ = iσ₃ for C(0,1).
    pub fn small(t: usize, s: usize) -> Result<Self, CliffordError> {
        let [s1, s2, s3] = pauli();
        let i = GaussScalar::i();
        let conv = if t >= s {
            IndexConvention::SpaceFirst
        } else {
            IndexConvention::TimeFirst
        };
        let (metric, mats): (Vec<i8>, Vec<ExactMatrix>) = match (t, s) {
            (1, 0) => (vec![1], vec![s3.clone()]),
            (0, 1) => (vec![-1], vec![s3.scale(&i)]),
            (1, 1) => (vec![1, -1], vec![s1.clone(), s2.scale(&i)]),
            (2, 0) => (vec![1, 1], vec![s1.clone(), s3.clone()]),
            (0, 2) => (vec![-1, -1], vec![s1.scale(&i), s3.scale(&i)]),
            (3, 0) => (vec![1, 1, 1], vec![s1.clone(), s2.clone(), s3.clone()]),
            (0, 3) => (
                vec![-1, -1, -1],
                vec![s1.scale(&i), s2.scale(&i), s3.scale(&i)],
            ),
            (1, 2) => (
                vec![1, -1, -1],
                vec![s2.clone(), s1.scale(&i), s3.scale(&i)],
            ),
            (2, 1) => (vec![1, 1, -1], vec![s1.clone(), s3.clone(), s2.scale(&i)]),
            _ => {
                return Err(CliffordError::UnsupportedSignature(format!("({t},{s})")));
            }
        };
        Ok(GammaRep::from_parts(t, s, conv, metric, mats, RepKind::Small(t, s)))
    }

    /// Checks {Γ_α, Γ_β} = 2η_αβ·I exactly for all pairs.
    pub fn verify_clifford(&self) -> bool {
        let n = self.dim();
        for (a, ga) in self.matrices.iter().enumerate() {
            for (b, gb) in self.matrices.iter().enumerate() {
                let anti = &(ga * gb) + &(gb * ga);
                let expected = if a == b {
                    ExactMatrix::identity(n).scale(&GaussScalar::from_int(2 * self.metric[a] as i64))
                } else {
                    ExactMatrix::zero(n)
                };
                if anti != expected {
                    return false;
                }
            }
        }
        true
    }

    /// Product of the generators selected by `mask` (bit i = generator i),
    /// in ascending index order.
    pub fn monomial(&self, mask: u32) -> ExactMatrix {
        let mut m = ExactMatrix::identity(self.dim());
        for i in 0..self.d() {
            if mask & (1 << i) != 0 {
                m = &m * &self.matrices[i];
            }
        }
        m
    }

    /// Γ_{d+1} = Γ₁Γ₂…Γ_d, the ordered product of all generators.
    pub fn gamma_dp1(&self) -> ExactMatrix {
        self.monomial((1u32 << self.d()) - 1)
    }

    /// Irreducibility via monomial span: the representation is irreducible
    /// exactly when the 2^d monomials span the full matrix algebra, which
    /// for even d forces a scalar-only commutant.
    pub fn is_irreducible(&self) -> bool {
        let n = self.dim();
        let rows: Vec<Vec<GaussScalar>> = (0..(1u32 << self.d()))
            .map(|mask| self.monomial(mask).entries().to_vec())
            .collect();
        rect_rank(&rows) == n * n
    }

    /// The chirality operator for even d: Γ_{d+1} when it squares to +I,
    /// iΓ_{d+1} otherwise. Also reports the raw Γ_{d+1} and its square sign.
    pub fn chirality(&self) -> Result<Chirality, CliffordError> {
        if self.d() % 2 != 0 {
            return Err(CliffordError::OddDimension(self.d()));
        }
        let raw = self.gamma_dp1();
        let sq = (&raw * &raw)
            .as_scalar_multiple_of_identity()
            .expect("Γ_{d+1}² must be ±I");
        let raw_square = if sq.is_one() { 1 } else { -1 };
        let operator = if raw_square == 1 {
            raw.clone()
        } else {
            raw.scale(&GaussScalar::i())
        };
        Ok(Chirality {
            operator,
            raw,
            raw_square,
        })
    }

    /// Weyl projection: 𝒫± = ½(I ± chirality); returns (left, right) with
    /// left = 𝒫₋ψ and right = 𝒫₊ψ.
    pub fn weyl_project(
        &self,
        pinor: &[GaussScalar],
    ) -> Result<(Vec<GaussScalar>, Vec<GaussScalar>), CliffordError> {
        if pinor.len() != self.dim() {
            return Err(CliffordError::PinorDim(pinor.len(), self.dim()));
        }
        let chi = self.chirality()?;
        let half = GaussScalar::from_ratio(1, 2);
        let n = self.dim();
        let p_plus = (&ExactMatrix::identity(n) + &chi.operator).scale(&half);
        let p_minus = (&ExactMatrix::identity(n) - &chi.operator).scale(&half);
        Ok((p_minus.apply(pinor), p_plus.apply(pinor)))
    }

    /// Appends kΓ_{d+1} so that the new generator squares to +I (AddTime)
    /// or −I (AddSpace); `branch` picks the sign of k. The two branches are
    /// the two inequivalent odd-dimensional representations.
    pub fn extend_to_odd(
        &self,
        target: OddTarget,
        branch: KBranch,
    ) -> Result<GammaRep, CliffordError> {
        if self.d() % 2 != 0 {
            return Err(CliffordError::OddDimension(self.d()));
        }
        let raw = self.gamma_dp1();
        let sq = (&raw * &raw)
            .as_scalar_multiple_of_identity()
            .expect("Γ_{d+1}² must be ±I");
        let want = match target {
            OddTarget::AddTime => 1i64,
            OddTarget::AddSpace => -1i64,
        };
        // (kΓ_{d+1})² = k²·sq must be want·I.
        let k = if sq == GaussScalar::from_int(want) {
            GaussScalar::one()
        } else {
            GaussScalar::i()
        };
        let k = match branch {
            KBranch::PlusK => k,
            KBranch::MinusK => -k,
        };
        let new_gen = raw.scale(&k);
        let mut metric = self.metric.clone();
        metric.push(want as i8);
        let mut matrices = self.matrices.clone();
        matrices.push(new_gen);
        let (plus, minus) = match target {
            OddTarget::AddTime => (self.signature.plus + 1, self.signature.minus),
            OddTarget::AddSpace => (self.signature.plus, self.signature.minus + 1),
        };
        Ok(GammaRep::from_parts(
            plus,
            minus,
            self.signature.convention,
            metric,
            matrices,
            RepKind::OddExtended {
                base: Box::new(self.kind.clone()),
                target,
                branch,
            },
        ))
    }

    /// Tensor construction with generator set {Γ_α⊗I′, kΓ_{d+1}⊗Γ′_α′}.
    /// For (kΓ_{d+1})² = +1 the result is C(t+t′, s+s′); for −1 the primed
    /// signature flips to give C(t+s′, s+t′).
    pub fn tensor_build(&self, other: &GammaRep, k_sign: KSign) -> Result<GammaRep, CliffordError> {
        if self.d() % 2 != 0 {
            return Err(CliffordError::OddDimension(self.d()));
        }
        let raw = self.gamma_dp1();
        let sq = (&raw * &raw)
            .as_scalar_multiple_of_identity()
            .expect("Γ_{d+1}² must be ±I");
        let want = match k_sign {
            KSign::KSquaredPlus => 1i64,
            KSign::KSquaredMinus => -1i64,
        };
        let k = if sq == GaussScalar::from_int(want) {
            GaussScalar::one()
        } else {
            GaussScalar::i()
        };
        let k_gamma = raw.scale(&k);
        let id_other = ExactMatrix::identity(other.dim());
        let mut matrices: Vec<ExactMatrix> = self
            .matrices
            .iter()
            .map(|g| g.kron(&id_other))
            .collect();
        let mut metric = self.metric.clone();
        for (j, gp) in other.matrices.iter().enumerate() {
            matrices.push(k_gamma.kron(gp));
            metric.push(want as i8 * other.metric[j]);
        }
        let plus = metric.iter().filter(|&&m| m == 1).count();
        let minus = metric.len() - plus;
        Ok(GammaRep::from_parts(
            plus,
            minus,
            self.signature.convention,
            metric,
            matrices,
            RepKind::TensorBuilt {
                left: Box::new(self.kind.clone()),
                right: Box::new(other.kind.clone()),
                k_sign,
            },
        ))
    }

    /// Counts generators that are entrywise real, purely imaginary, or mixed.
    pub fn reality_census(&self) -> (usize, usize, usize) {
        let mut real = 0;
        let mut imag = 0;
        let mut mixed = 0;
        for g in &self.matrices {
            if g.is_entrywise_real() {
                real += 1;
            } else if g.is_entrywise_imaginary() {
                imag += 1;
            } else {
                mixed += 1;
            }
        }
        (real, imag, mixed)
    }

    /// Exhaustive search for a signed/scaled-monomial intertwiner S with
    /// S Γ_α S⁻¹ = Γ′_α for every generator; complete for the
    /// monomial-generated representations handled here.
    pub fn monomial_intertwiner(&self, other: &GammaRep) -> Option<ExactMatrix> {
        if self.d() != other.d() || self.dim() != other.dim() {
            return None;
        }
        for mask in 0..(1u32 << self.d()) {
            for scalar in [GaussScalar::one(), GaussScalar::i()] {
                let s = self.monomial(mask).scale(&scalar);
                let Ok(s_inv) = s.inverse() else { continue };
                if self
                    .matrices
                    .iter()
                    .zip(&other.matrices)
                    .all(|(g, gp)| &(&s * gp) * &s_inv == *g)
                {
                    return Some(s);
                }
            }
        }
        None
    }

    /// JSON-ready description.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "signature": {
                "plus": self.signature.plus,
                "minus": self.signature.minus,
                "convention": format!("{:?}", self.signature.convention),
            },
            "kind": format!("{:?}", self.kind),
            "metric": self.metric,
            "dim": self.dim(),
            "matrices": self.matrices.iter().map(|m| m.to_string_rows()).collect::<Vec<_>>(),
        })
    }
}

/// Chirality data: the normalized operator (squares to +I), the raw
/// all-generator product Γ_{d+1}, and the sign of its square.
#[derive(Debug, Clone)]
pub struct Chirality {
    pub operator: ExactMatrix,
    pub raw: ExactMatrix,
    pub raw_square: i8,
}

/// The canonical algebra label of the mod-8 classification table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AlgebraLabel {
    R,
    RPlusR,
    C,
    H,
    HPlusH,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AlgebraClass {
    pub label: AlgebraLabel,
    pub k: u64,
}

impl fmt::Display for AlgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.label {
            AlgebraLabel::R => write!(f, "R({})", self.k),
            AlgebraLabel::RPlusR => write!(f, "R({})+R({})", self.k, self.k),
            AlgebraLabel::C => write!(f, "C({})", self.k),
            AlgebraLabel::H => write!(f, "H({})", self.k),
            AlgebraLabel::HPlusH => write!(f, "H({})+H({})", self.k, self.k),
        }
    }
}

/// Mod-8 classification of C(m,n), the closed-form table lookup.
///
/// The d ≤ 3 table of explicit gamma matrices lists C(1,2) ≅ ℍ⊗ℂ; as a real
/// algebra that is isomorphic to the C(2¹) reported here (the two labels
/// name the same algebra, the classifier sticks to the mod-8 table's form).
pub fn classify(m: u64, n: u64) -> AlgebraClass {
    assert!(m + n >= 1, "need m + n >= 1");
    let d = m + n;
    let diff = ((m as i64 - n as i64).rem_euclid(8)) as u64;
    let pow = |e: u64| 1u64 << e;
    match diff {
        0 | 2 => AlgebraClass { label: AlgebraLabel::R, k: pow(d / 2) },
        1 => AlgebraClass { label: AlgebraLabel::RPlusR, k: pow((d - 1) / 2) },
        3 | 7 => AlgebraClass { label: AlgebraLabel::C, k: pow((d - 1) / 2) },
        4 | 6 => AlgebraClass { label: AlgebraLabel::H, k: pow(d / 2 - 1) },
        5 => AlgebraClass { label: AlgebraLabel::HPlusH, k: pow((d - 1) / 2 - 1) },
        _ => unreachable!(),
    }
}

/// A quaternion with rational coefficients over the basis (1, i, j, k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quaternion {
    pub coeffs: [num_rational::BigRational; 4],
}

impl Quaternion {
    pub fn new(coeffs: [num_rational::BigRational; 4]) -> Self {
        Quaternion { coeffs }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        use num_bigint::BigInt;
        use num_rational::BigRational;
        Quaternion::new([
            BigRational::from_integer(BigInt::from(a)),
            BigRational::from_integer(BigInt::from(b)),
            BigRational::from_integer(BigInt::from(c)),
            BigRational::from_integer(BigInt::from(d)),
        ])
    }

    pub fn one() -> Self {
        Quaternion::from_ints(1, 0, 0, 0)
    }

    /// The basis (1, i, j, k).
    pub fn basis() -> [Quaternion; 4] {
        [
            Quaternion::from_ints(1, 0, 0, 0),
            Quaternion::from_ints(0, 1, 0, 0),
            Quaternion::from_ints(0, 0, 1, 0),
            Quaternion::from_ints(0, 0, 0, 1),
        ]
    }

    /// Hamilton product: i² = j² = k² = −1, ij = k, jk = i, ki = j.
    pub fn mul(&self, rhs: &Quaternion) -> Quaternion {
        let [a1, b1, c1, d1] = &self.coeffs;
        let [a2, b2, c2, d2] = &rhs.coeffs;
        Quaternion::new([
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ])
    }

    /// Quaternionic conjugate β† (negates i, j, k parts).
    pub fn conj(&self) -> Quaternion {
        let [a, b, c, d] = self.coeffs.clone();
        Quaternion::new([a, -b, -c, -d])
    }
}

/// The 4×4 real matrix M(α,β) with M(α,β)·I(γ) = I(αγβ†), where I(γ) is
/// the coefficient column of γ over (1, i, j, k). The map (α,β) ↦ M(α,β)
/// realifies ℍ⊗ℍ ≅ M₄(ℝ).
pub fn quaternion_matrix(alpha: &Quaternion, beta: &Quaternion) -> ExactMatrix {
    let basis = Quaternion::basis();
    let mut m = ExactMatrix::zero(4);
    for (col, e) in basis.iter().enumerate() {
        let image = alpha.mul(e).mul(&beta.conj());
        for row in 0..4 {
            m.set(
                row,
                col,
                GaussScalar::new(image.coeffs[row].clone(), num_rational::BigRational::new(
                    num_bigint::BigInt::from(0),
                    num_bigint::BigInt::from(1),
                )),
            );
        }
    }
    m
}
