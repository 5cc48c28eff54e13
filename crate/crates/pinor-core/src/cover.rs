//! The Pin(t,s) → O(t,s) covering map: exact solutions of the covering
//! equation for signed axis permutations, the named parity/time-reversal
//! elements and their squares, planar rotation/boost covers, finite
//! double-cover group classification, and the odd-dimension structure
//! (center, non-surjectivity, twisted map, grading, semidirect split).

use crate::clifford::{GammaRep, Signature};
use crate::matrix::ExactMatrix;
use crate::scalar::GaussScalar;
use num_complex::Complex64;
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoverError {
    #[error("matrix is not orthogonal with respect to the metric")]
    NotOrthogonal,
    #[error("signature {0} is not supported here")]
    UnsupportedSignature(String),
    #[error("angle {0}π/{1} is not exactly representable; use the float mode")]
    InexactAngle(i64, i64),
    #[error("axes must be distinct")]
    RepeatedAxis,
    #[error("conjugation image is not a combination of generators")]
    OutsidePin,
}

/// A d×d matrix L with LηLᵀ = η.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LorentzMatrix {
    pub entries: Vec<Vec<GaussScalar>>,
    pub metric: Vec<i8>,
}

impl LorentzMatrix {
    pub fn new(entries: Vec<Vec<GaussScalar>>, metric: Vec<i8>) -> Result<Self, CoverError> {
        let l = LorentzMatrix { entries, metric };
        if l.is_orthogonal() {
            Ok(l)
        } else {
            Err(CoverError::NotOrthogonal)
        }
    }

    pub fn d(&self) -> usize {
        self.metric.len()
    }

    pub fn identity(metric: &[i8]) -> Self {
        Self::diag(&vec![1i64; metric.len()], metric)
    }

    /// Diagonal matrix from integer entries; panics if not metric-orthogonal.
    pub fn diag(diagonal: &[i64], metric: &[i8]) -> Self {
        let d = metric.len();
        assert_eq!(diagonal.len(), d);
        let entries = (0..d)
            .map(|r| {
                (0..d)
                    .map(|c| {
                        if r == c {
                            GaussScalar::from_int(diagonal[r])
                        } else {
                            GaussScalar::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        LorentzMatrix::new(entries, metric.to_vec()).expect("diagonal ±1 is orthogonal")
    }

    pub fn minus_identity(metric: &[i8]) -> Self {
        Self::diag(&vec![-1i64; metric.len()], metric)
    }

    fn is_orthogonal(&self) -> bool {
        let d = self.d();
        if self.entries.len() != d || self.entries.iter().any(|r| r.len() != d) {
            return false;
        }
        // (L η Lᵀ)_{rc} = Σ_k L_{rk} η_k L_{ck}
        for r in 0..d {
            for c in 0..d {
                let mut sum = GaussScalar::zero();
                for k in 0..d {
                    sum += self.entries[r][k].clone()
                        * GaussScalar::from_int(self.metric[k] as i64)
                        * self.entries[c][k].clone();
                }
                let want = if r == c {
                    GaussScalar::from_int(self.metric[r] as i64)
                } else {
                    GaussScalar::zero()
                };
                if sum != want {
                    return false;
                }
            }
        }
        true
    }

    pub fn det(&self) -> GaussScalar {
        det_laplace(&self.entries)
    }
}

fn det_laplace(rows: &[Vec<GaussScalar>]) -> GaussScalar {
    let n = rows.len();
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut acc = GaussScalar::zero();
    for c in 0..n {
        if rows[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<GaussScalar>> = rows[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != c)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = rows[0][c].clone() * det_laplace(&minor);
        if c % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

/// An element of the monomial Pin group: a scalar times an ordered product
/// of generators, with the concrete matrix alongside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverElement {
    pub matrix: ExactMatrix,
    /// bit i set = generator in position i participates (ascending order).
    pub mask: u32,
    pub scalar: GaussScalar,
    pub parity: Parity,
    pub signature: Signature,
}

impl CoverElement {
    pub fn from_mask(rep: &GammaRep, mask: u32, scalar: GaussScalar) -> Self {
        let matrix = rep.monomial(mask).scale(&scalar);
        CoverElement {
            matrix,
            mask,
            scalar,
            parity: if mask.count_ones() % 2 == 0 {
                Parity::Even
            } else {
                Parity::Odd
            },
            signature: rep.signature,
        }
    }

    pub fn grade(&self) -> u32 {
        self.mask.count_ones()
    }

    /// ΛΛ^τ = ±I; returns the sign.
    pub fn tau_sign(&self) -> i8 {
        let prod = &self.matrix * &reversion(self).matrix;
        let s = prod
            .as_scalar_multiple_of_identity()
            .expect("ΛΛ^τ must be scalar for monomials");
        if s == GaussScalar::one() {
            1
        } else if s == -GaussScalar::one() {
            -1
        } else {
            panic!("ΛΛ^τ = {s}, expected ±1")
        }
    }
}

impl fmt::Display for CoverElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.signature.convention {
            crate::clifford::IndexConvention::TimeFirst => "Γ",
            crate::clifford::IndexConvention::SpaceFirst => "Γ̂",
        };
        let sign = if self.scalar == GaussScalar::one() {
            "+".to_string()
        } else if self.scalar == -GaussScalar::one() {
            "-".to_string()
        } else {
            format!("({})·", self.scalar)
        };
        if self.mask == 0 {
            return write!(f, "{sign}I");
        }
        write!(f, "{sign}")?;
        for i in 0..32 {
            if self.mask & (1 << i) != 0 {
                write!(f, "{prefix}{}", self.signature.label(i))?;
            }
        }
        Ok(())
    }
}

/// Reversion τ reverses the generator order inside the monomial, e.g.
/// (γ₀γ₁γ₂)^τ = γ₂γ₁γ₀; for a grade-p monomial that is the sign
/// (−1)^{p(p−1)/2} on the ascending-order product.
pub fn reversion(e: &CoverElement) -> CoverElement {
    let p = e.grade();
    let sign = if (p * p.saturating_sub(1) / 2) % 2 == 0 {
        GaussScalar::one()
    } else {
        -GaussScalar::one()
    };
    CoverElement {
        matrix: e.matrix.scale(&sign),
        mask: e.mask,
        scalar: e.scalar.clone() * sign,
        parity: e.parity,
        signature: e.signature,
    }
}

/// A ± pair of covering elements over one Lorentz matrix.
#[derive(Debug, Clone)]
pub struct CoverPair {
    pub plus: CoverElement,
    pub minus: CoverElement,
    /// Whether the covering equation is solved with a real scalar on the
    /// monomial (always the case when a solution exists at all, since the
    /// equation is insensitive to the overall scalar).
    pub real_scalar: bool,
}

/// All signed-monomial solutions Λ of Λ Γ_α Λ⁻¹ = Γ_β L^β_α. Solutions are
/// scalar-invariant, so each solving monomial is reported once as a ± pair.
/// An empty result means no cover exists (meaningful for odd d).
pub fn solve_cover(rep: &GammaRep, l: &LorentzMatrix) -> Vec<CoverPair> {
    assert_eq!(l.d(), rep.d());
    let mut out = Vec::new();
    for mask in 0..(1u32 << rep.d()) {
        let m = rep.monomial(mask);
        let m_inv = m.inverse().expect("monomials are invertible");
        let solves = (0..rep.d()).all(|alpha| {
            let lhs = &(&m * &rep.matrices[alpha]) * &m_inv;
            let mut rhs = ExactMatrix::zero(rep.dim());
            for beta in 0..rep.d() {
                if !l.entries[beta][alpha].is_zero() {
                    rhs = &rhs + &rep.matrices[beta].scale(&l.entries[beta][alpha]);
                }
            }
            lhs == rhs
        });
        if solves {
            out.push(CoverPair {
                plus: CoverElement::from_mask(rep, mask, GaussScalar::one()),
                minus: CoverElement::from_mask(rep, mask, -GaussScalar::one()),
                real_scalar: true,
            });
        }
    }
    out
}

/// The L covered by `e` under the ordinary (untwisted) action
/// e Γ_α e⁻¹ = Γ_β L^β_α, when the image lies in the generator span.
pub fn cover_image(rep: &GammaRep, e: &CoverElement) -> Result<LorentzMatrix, CoverError> {
    action_image(rep, e, false)
}

/// The L produced under the twisted (graded) action
/// α(e) Γ_α e⁻¹ = Γ_β L^β_α, where α negates odd elements.
pub fn twisted_cover(rep: &GammaRep, e: &CoverElement) -> Result<LorentzMatrix, CoverError> {
    action_image(rep, e, true)
}

fn action_image(rep: &GammaRep, e: &CoverElement, twisted: bool) -> Result<LorentzMatrix, CoverError> {
    let d = rep.d();
    let e_inv = e.matrix.inverse().map_err(|_| CoverError::OutsidePin)?;
    let front = if twisted && e.parity == Parity::Odd {
        e.matrix.scale(&-GaussScalar::one())
    } else {
        e.matrix.clone()
    };
    let mut entries = vec![vec![GaussScalar::zero(); d]; d];
    for alpha in 0..d {
        let image = &(&front * &rep.matrices[alpha]) * &e_inv;
        // expand in the generator basis: coefficient of Γ_β is
        // η_ββ · tr(Γ_β · image) / n, then demand the expansion is exact.
        let n = GaussScalar::from_int(rep.dim() as i64);
        let mut reconstructed = ExactMatrix::zero(rep.dim());
        for beta in 0..d {
            let coeff = (&rep.matrices[beta] * &image).trace()
                * GaussScalar::from_int(rep.metric[beta] as i64)
                / n.clone();
            if !coeff.is_zero() {
                reconstructed = &reconstructed + &rep.matrices[beta].scale(&coeff);
            }
            entries[beta][alpha] = (&rep.matrices[beta] * &image).trace()
                * GaussScalar::from_int(rep.metric[beta] as i64)
                / n.clone();
        }
        if reconstructed != image {
            return Err(CoverError::OutsidePin);
        }
    }
    LorentzMatrix::new(entries, rep.metric.clone())
}

/// Grading: Even elements lie in Spin, Odd in Pin \ Spin.
pub fn grading(e: &CoverElement) -> Parity {
    e.parity
}

#[derive(Debug, Clone)]
pub struct NamedElement {
    pub label: &'static str,
    pub lorentz: LorentzMatrix,
    pub pair: CoverPair,
    /// Sign of Λ² (sign-choice independent).
    pub square: i8,
}

/// The named covers {P(1), P(3), T, PT} and their squares for (1,3) and
/// (3,1). Reproduces
///   Λ_{P(1)} = ±γ₀γ₁γ₂, Λ_{P(3)} = ±γ₀, Λ_T = ±γ₁γ₂γ₃ with squares −,+,+
///   Λ̂_{P(1)} = ±γ̂₂γ̂₃γ̂₄, Λ̂_{P(3)} = ±γ̂₄, Λ̂_T = ±γ̂₁γ̂₂γ̂₃ with squares +,−,−.
pub fn named_elements(rep: &GammaRep) -> Result<Vec<NamedElement>, CoverError> {
    let sig = (rep.signature.plus, rep.signature.minus);
    let metric = &rep.metric;
    let table: [(&'static str, Vec<i64>); 4] = match sig {
        // η = diag(+,−,−,−), indices 0..3
        (1, 3) => [
            ("P(1)", vec![1, 1, 1, -1]),
            ("P(3)", vec![1, -1, -1, -1]),
            ("T", vec![-1, 1, 1, 1]),
            ("PT", vec![-1, -1, -1, -1]),
        ],
        // η̂ = diag(+,+,+,−), indices 1..4
        (3, 1) => [
            ("P(1)", vec![-1, 1, 1, 1]),
            ("P(3)", vec![-1, -1, -1, 1]),
            ("T", vec![1, 1, 1, -1]),
            ("PT", vec![-1, -1, -1, -1]),
        ],
        _ => {
            return Err(CoverError::UnsupportedSignature(rep.signature.to_string()));
        }
    };
    let mut out = Vec::new();
    for (label, diag) in table {
        let l = LorentzMatrix::diag(&diag, metric);
        let mut pairs = solve_cover(rep, &l);
        if pairs.is_empty() {
            return Err(CoverError::OutsidePin);
        }
        let pair = pairs.remove(0);
        let sq = (&pair.plus.matrix * &pair.plus.matrix)
            .as_scalar_multiple_of_identity()
            .expect("Λ² scalar");
        let square = if sq == GaussScalar::one() { 1 } else { -1 };
        out.push(NamedElement { label, lorentz: l, pair, square });
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlanarKind {
    Rotation,
    Boost,
}

/// Exact planar cover for θ = n·π in the (α,β) plane (positions, not
/// labels): Λ = cos(θ/2)·I + sin(θ/2)·Γ_αΓ_β. Exactness requires integer n,
/// where the half-angle trig values land in {0, ±1}; other angles (π/2
/// included, whose half-angle brings in √2/2) go through the float mode.
pub fn planar_cover_exact(
    rep: &GammaRep,
    alpha: usize,
    beta: usize,
    pi_multiple_num: i64,
    pi_multiple_den: i64,
) -> Result<CoverElement, CoverError> {
    if alpha == beta {
        return Err(CoverError::RepeatedAxis);
    }
    if pi_multiple_den == 0 || pi_multiple_num % pi_multiple_den != 0 {
        return Err(CoverError::InexactAngle(pi_multiple_num, pi_multiple_den));
    }
    let n = pi_multiple_num / pi_multiple_den;
    if rep.metric[alpha] != rep.metric[beta] && n != 0 {
        // mixed plane = boost: hyperbolic functions, exact only at 0
        return Err(CoverError::InexactAngle(pi_multiple_num, pi_multiple_den));
    }
    // θ/2 = nπ/2: (cos, sin) cycles through (1,0), (0,1), (−1,0), (0,−1)
    let (c, s) = match n.rem_euclid(4) {
        0 => (1i64, 0i64),
        1 => (0, 1),
        2 => (-1, 0),
        _ => (0, -1),
    };
    let bivector = &rep.matrices[alpha] * &rep.matrices[beta];
    let matrix = &ExactMatrix::identity(rep.dim()).scale(&GaussScalar::from_int(c))
        + &bivector.scale(&GaussScalar::from_int(s));
    let (mask, scalar) = if s == 0 {
        (0u32, GaussScalar::from_int(c))
    } else {
        ((1 << alpha) | (1 << beta), GaussScalar::from_int(s))
    };
    Ok(CoverElement {
        matrix,
        mask,
        scalar,
        parity: Parity::Even,
        signature: rep.signature,
    })
}

/// Float-mode planar cover for arbitrary angle/rapidity θ:
/// rotations cos(θ/2)I + sin(θ/2)Γ_αΓ_β, boosts cosh(θ/2)I + sinh(θ/2)Γ_αΓ_β.
/// Numeric results never feed the exact pipeline.
pub fn planar_cover_float(
    rep: &GammaRep,
    alpha: usize,
    beta: usize,
    theta: f64,
    kind: PlanarKind,
) -> Result<Vec<Vec<Complex64>>, CoverError> {
    if alpha == beta {
        return Err(CoverError::RepeatedAxis);
    }
    let (c, s) = match kind {
        PlanarKind::Rotation => ((theta / 2.0).cos(), (theta / 2.0).sin()),
        PlanarKind::Boost => ((theta / 2.0).cosh(), (theta / 2.0).sinh()),
    };
    let bivector = &rep.matrices[alpha] * &rep.matrices[beta];
    let n = rep.dim();
    let mut out = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for r in 0..n {
        for col in 0..n {
            let b = bivector.get(r, col);
            let mut v = Complex64::new(b.re_f64() * s, b.im_f64() * s);
            if r == col {
                v += Complex64::new(c, 0.0);
            }
            out[r][col] = v;
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GroupName {
    #[serde(rename = "Z2xZ2xZ2")]
    Z2Z2Z2,
    #[serde(rename = "Z2xZ4")]
    Z2Z4,
    Quaternion,
    Dihedral,
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::Z2Z2Z2 => write!(f, "Z2xZ2xZ2"),
            GroupName::Z2Z4 => write!(f, "Z2xZ4"),
            GroupName::Quaternion => write!(f, "Quaternion"),
            GroupName::Dihedral => write!(f, "Dihedral"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CoverClass {
    pub a: i8,
    pub b: i8,
    pub c: i8,
    pub commute: i8,
    pub group_name: GroupName,
    pub cliffordian: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityChoice {
    P1,
    P3,
}

/// Closure of a set of generating matrices under multiplication.
pub fn group_closure(gens: &[ExactMatrix]) -> Vec<ExactMatrix> {
    let mut elems: Vec<ExactMatrix> = Vec::new();
    let mut frontier: Vec<ExactMatrix> = gens.to_vec();
    while let Some(g) = frontier.pop() {
        if elems.contains(&g) {
            continue;
        }
        for h in elems.clone() {
            frontier.push(&g * &h);
            frontier.push(&h * &g);
        }
        frontier.push(&g * &g);
        elems.push(g);
    }
    elems
}

fn element_order(g: &ExactMatrix) -> usize {
    let mut p = g.clone();
    for k in 1..=16 {
        if p.is_identity() {
            return k;
        }
        p = &p * g;
    }
    panic!("element order exceeds 16 in a finite cover group")
}

/// (order, abelian?, sorted element-order list) of a finite matrix group.
pub fn group_structure(elements: &[ExactMatrix]) -> (usize, bool, Vec<usize>) {
    let abelian = elements
        .iter()
        .enumerate()
        .all(|(i, g)| elements[i + 1..].iter().all(|h| &(g * h) == &(h * g)));
    let mut orders: Vec<usize> = elements.iter().map(element_order).collect();
    orders.sort_unstable();
    (elements.len(), abelian, orders)
}

/// Recognize a group of order 4 or 8 by (abelian?, element-order multiset):
///   order 8: Z₂³ all involutions; Z₂⊕Z₄ abelian with order-4 elements;
///            Q₈ nonabelian with a single involution; D₄ nonabelian with five.
///   order 4: Z₂×Z₂ all involutions; Z₄ cyclic.
pub fn recognize_small_group(elements: &[ExactMatrix]) -> Option<GroupName> {
    let (order, abelian, orders) = group_structure(elements);
    let twos = orders.iter().filter(|&&o| o == 2).count();
    match (order, abelian) {
        (8, true) if twos == 7 => Some(GroupName::Z2Z2Z2),
        (8, true) if twos == 3 => Some(GroupName::Z2Z4),
        (8, false) if twos == 1 => Some(GroupName::Quaternion),
        (8, false) if twos == 5 => Some(GroupName::Dihedral),
        _ => None,
    }
}

/// Classifies the finite group generated by {±I, Λ_P, Λ_T} by the signs
/// (a, b, c) of Λ_P², Λ_T², (Λ_PΛ_T)², the commutation sign, and the
/// order-8 group recognizer; `cliffordian` flags the Pin-generating rows.
pub fn cover_group_classify(
    rep: &GammaRep,
    parity_choice: ParityChoice,
) -> Result<CoverClass, CoverError> {
    let named = named_elements(rep)?;
    let p_label = match parity_choice {
        ParityChoice::P1 => "P(1)",
        ParityChoice::P3 => "P(3)",
    };
    let lam_p = &named.iter().find(|n| n.label == p_label).unwrap().pair.plus.matrix;
    let lam_t = &named.iter().find(|n| n.label == "T").unwrap().pair.plus.matrix;
    let sign_of = |m: &ExactMatrix| -> i8 {
        let s = m.as_scalar_multiple_of_identity().expect("square must be scalar");
        if s == GaussScalar::one() { 1 } else { -1 }
    };
    let a = sign_of(&(lam_p * lam_p));
    let b = sign_of(&(lam_t * lam_t));
    let pt = lam_p * lam_t;
    let c = sign_of(&(&pt * &pt));
    let tp = lam_t * lam_p;
    let commute = if tp == pt {
        1
    } else if tp == pt.scale(&-GaussScalar::one()) {
        -1
    } else {
        return Err(CoverError::OutsidePin);
    };
    let minus_i = ExactMatrix::identity(rep.dim()).scale(&-GaussScalar::one());
    let elements = group_closure(&[
        ExactMatrix::identity(rep.dim()),
        minus_i,
        lam_p.clone(),
        lam_t.clone(),
    ]);
    let group_name = recognize_small_group(&elements).ok_or(CoverError::OutsidePin)?;
    Ok(CoverClass {
        a,
        b,
        c,
        commute,
        group_name,
        cliffordian: commute == -1 && a != b,
    })
}

/// All basis monomials commuting with every generator: {I} for even d,
/// {I, Γ₁…Γ_d} for odd d. Returned as masks.
pub fn center(rep: &GammaRep) -> Vec<u32> {
    (0..(1u32 << rep.d()))
        .filter(|&mask| {
            let m = rep.monomial(mask);
            rep.matrices.iter().all(|g| &m * g == g * &m)
        })
        .collect()
}

/// Does −I_d admit an (untwisted) cover? Decided by solve_cover, not by
/// the parity of d.
pub fn surjectivity_check(rep: &GammaRep) -> bool {
    !solve_cover(rep, &LorentzMatrix::minus_identity(&rep.metric)).is_empty()
}

#[derive(Debug, Clone, Serialize)]
pub struct SemidirectReport {
    pub group_order: usize,
    pub even_subgroup_order: usize,
    pub even_subgroup_closed: bool,
    pub odd_conjugation_preserves_even: bool,
    pub minus_identity_in_so: bool,
    /// O(t,s) = SO(t,s) × Z₂ splits off −I only when −I has det −1 side,
    /// i.e. for odd d.
    pub so_z2_split_exists: bool,
}

/// Structure of the finite monomial group {± monomials}: the even elements
/// form an index-2 subgroup, conjugation by any odd monomial preserves it
/// (the semidirect automorphism), and −I_d sits in SO(t,s) exactly when d
/// is even — so the direct-product split O = SO × Z₂ needs odd d.
pub fn semidirect_check(rep: &GammaRep) -> SemidirectReport {
    let d = rep.d();
    let masks: Vec<u32> = (0..(1u32 << d)).collect();
    let group_order = 2 * masks.len();
    let even: Vec<&u32> = masks.iter().filter(|m| m.count_ones() % 2 == 0).collect();
    // product of monomials adds masks mod 2 (XOR), so parity is additive:
    // even·even stays even, and odd⁻¹·even·odd keeps the even mask parity.
    let even_closed = even
        .iter()
        .all(|&&m1| even.iter().all(|&&m2| (m1 ^ m2).count_ones() % 2 == 0));
    let odd_conj = masks
        .iter()
        .filter(|m| m.count_ones() % 2 == 1)
        .all(|&z| even.iter().all(|&&h| (z ^ h ^ z).count_ones() % 2 == 0));
    let minus_in_so = d % 2 == 0; // det(−I_d) = (−1)^d
    SemidirectReport {
        group_order,
        even_subgroup_order: 2 * even.len(),
        even_subgroup_closed: even_closed,
        odd_conjugation_preserves_even: odd_conj,
        minus_identity_in_so: minus_in_so,
        so_z2_split_exists: !minus_in_so,
    }
}
