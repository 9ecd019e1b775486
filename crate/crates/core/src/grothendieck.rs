//! Skew Schur, dual stable Grothendieck and stable Grothendieck functions,
//! their K-theoretic Littlewood-Richardson coefficients, basis changes into
//! the `g` and `G` bases, the conjugation involutions and skewing.
//!
//! Each function is assembled coefficient by coefficient: the coefficient of
//! `m_α` is the number of fillings with content `α`, so no filling is ever
//! materialized.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{star_join, Partition, SkewShape};
use crate::symfunc::{
    basis_element, hall_inner, m_to_schur, split_alphabets, Basis, BasisExpansion, Coeffs, SymFunc,
    TruncationProfile,
};
use crate::tableaux::{count_by_content, count_lattice_fillings, FillingKind};

/// An unsigned count together with the exponent of the `-1` it carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedCount {
    pub value: u128,
    pub sign_exponent: i64,
}

impl SignedCount {
    /// `(-1)^sign_exponent · value`.
    pub fn signed(&self) -> BigInt {
        let v = BigInt::from(self.value);
        if self.sign_exponent.rem_euclid(2) == 1 {
            -v
        } else {
            v
        }
    }
}

type PolyKey = (SkewShape, FillingKind, TruncationProfile);

fn poly_cache() -> &'static RwLock<HashMap<PolyKey, SymFunc>> {
    static CACHE: OnceLock<RwLock<HashMap<PolyKey, SymFunc>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Drops every memoized polynomial and Kostka row. Results are unaffected;
/// only memory use and the timing of the next call change.
pub fn clear_caches() {
    poly_cache().write().unwrap().clear();
    crate::symfunc::clear_kostka_cache();
}

/// `Σ_α sign(α) · #{fillings of content α} · m_α` over `|α|` in `degrees`.
fn generating_function(
    shape: &SkewShape,
    kind: FillingKind,
    trunc: TruncationProfile,
    degrees: std::ops::RangeInclusive<usize>,
) -> SymFunc {
    let key = (shape.clone(), kind, trunc);
    if let Some(hit) = poly_cache().read().unwrap().get(&key) {
        return hit.clone();
    }
    let base = shape.size();
    let candidates: Vec<Partition> = degrees
        .flat_map(Partition::all_of_size)
        .filter(|a| trunc.admits(a))
        .collect();
    let coeffs: Coeffs = candidates
        .into_par_iter()
        .filter_map(|alpha| {
            let n = count_by_content(shape, kind, alpha.parts());
            if n == 0 {
                return None;
            }
            let mut c = BigInt::from(n);
            if kind == FillingKind::Svt && (alpha.size() - base) % 2 == 1 {
                c = -c;
            }
            Some((alpha, c))
        })
        .collect();
    let f = SymFunc::from_coeffs(coeffs, trunc);
    poly_cache().write().unwrap().insert(key, f.clone());
    f
}

fn fits(shape: &SkewShape, trunc: TruncationProfile) -> Result<()> {
    if shape.size() > trunc.max_degree() {
        return Err(Error::DegreeOverflow {
            degree: shape.size(),
            max_degree: trunc.max_degree(),
        });
    }
    Ok(())
}

/// `s_{λ/μ}`, homogeneous of degree `|λ/μ|`.
pub fn schur(shape: &SkewShape, trunc: TruncationProfile) -> Result<SymFunc> {
    fits(shape, trunc)?;
    let d = shape.size();
    Ok(generating_function(shape, FillingKind::Ssyt, trunc, d..=d))
}

/// `g_{λ/μ}`, of degree at most `|λ/μ|`; its top component is `s_{λ/μ}`.
pub fn dual_grothendieck(shape: &SkewShape, trunc: TruncationProfile) -> Result<SymFunc> {
    fits(shape, trunc)?;
    Ok(generating_function(
        shape,
        FillingKind::Rpp,
        trunc,
        0..=shape.size(),
    ))
}

/// `G_{λ/μ}` truncated to degree `<= D`; its bottom component is `s_{λ/μ}`.
/// Zero when `|λ/μ| > D`.
pub fn grothendieck(shape: &SkewShape, trunc: TruncationProfile) -> SymFunc {
    let lo = shape.size();
    let hi = trunc.max_degree();
    if lo > hi {
        return SymFunc::zero(trunc);
    }
    generating_function(shape, FillingKind::Svt, trunc, lo..=hi)
}

/// `σ ⊆ μ` with `μ/σ` a rook strip.
pub fn rook_strip_subpartitions(mu: &Partition) -> Vec<Partition> {
    mu.subpartitions()
        .into_iter()
        .filter(|s| {
            SkewShape::new(mu.clone(), s.clone())
                .unwrap()
                .classify_strip()
                .rook
        })
        .collect()
}

/// `G_{λ//μ} = Σ_σ (-1)^{|μ/σ|} G_{λ/σ}` over `σ` with `μ/σ` a rook strip.
pub fn grothendieck_rook(
    outer: &Partition,
    mu: &Partition,
    trunc: TruncationProfile,
) -> Result<SymFunc> {
    if !outer.contains(mu) {
        return Err(Error::NotContained {
            outer: outer.clone(),
            inner: mu.clone(),
        });
    }
    let mut acc = SymFunc::zero(trunc);
    for sigma in rook_strip_subpartitions(mu) {
        let sign = if (mu.size() - sigma.size()).is_multiple_of(2) {
            1
        } else {
            -1
        };
        let shape = SkewShape::new(outer.clone(), sigma)?;
        acc.add_scaled(&grothendieck(&shape, trunc), &BigInt::from(sign))?;
    }
    Ok(acc)
}

/// `c^λ_{νμ}`: lattice fillings of `μ∗ν` with content `λ`, carrying the
/// sign exponent `|λ| - |ν| - |μ|`.
pub fn lr_coeff(nu: &Partition, mu: &Partition, target: &Partition) -> SignedCount {
    SignedCount {
        value: count_lattice_fillings(&star_join(mu, nu), target),
        sign_exponent: target.size() as i64 - nu.size() as i64 - mu.size() as i64,
    }
}

/// `α_{λ/μ,ν}`: lattice fillings of `λ/μ` with content `ν`, carrying the
/// sign exponent `|ν| - |λ/μ|`.
pub fn alpha(shape: &SkewShape, content: &Partition) -> SignedCount {
    SignedCount {
        value: count_lattice_fillings(shape, content),
        sign_exponent: content.size() as i64 - shape.size() as i64,
    }
}

/// Monomial coordinates of any basis expansion.
pub fn realize(f: &BasisExpansion) -> Result<SymFunc> {
    let trunc = f.trunc();
    match f.basis() {
        Basis::DualGrothendieck | Basis::Grothendieck => {
            let mut out = SymFunc::zero(trunc);
            for (lam, c) in f.coeffs() {
                let shape = SkewShape::straight(lam.clone());
                let term = if f.basis() == Basis::Grothendieck {
                    grothendieck(&shape, trunc)
                } else {
                    dual_grothendieck(&shape, trunc)?
                };
                out.add_scaled(&term, c)?;
            }
            Ok(out)
        }
        _ => f.to_monomial(),
    }
}

/// Coefficients in the `g` basis, peeled from the top degree down since
/// `g_λ = s_λ + lower terms`.
pub fn expand_in_dual_grothendieck(f: &SymFunc) -> Result<BasisExpansion> {
    let trunc = f.trunc();
    let mut residual = f.clone();
    let mut out = Coeffs::new();
    while let Some(d) = residual.highest_degree() {
        let top = m_to_schur(&residual.homogeneous(d));
        for (lam, c) in top.coeffs() {
            let g = dual_grothendieck(&SkewShape::straight(lam.clone()), trunc)?;
            residual.add_scaled(&g, &-c)?;
            *out.entry(lam.clone()).or_insert_with(BigInt::zero) += c;
        }
        debug_assert!(residual.highest_degree().is_none_or(|e| e < d));
    }
    Ok(BasisExpansion::new(Basis::DualGrothendieck, out, trunc))
}

/// Coefficients `a_λ`, `|λ| <= D`, with `f ≡ Σ a_λ G_λ` modulo degrees
/// above `D`; peeled from the bottom degree up since `G_λ = s_λ + higher`.
pub fn expand_in_grothendieck(f: &SymFunc) -> Result<BasisExpansion> {
    let trunc = f.trunc();
    let mut residual = f.clone();
    let mut out = Coeffs::new();
    while let Some(d) = residual.lowest_degree() {
        let bottom = m_to_schur(&residual.homogeneous(d));
        for (lam, c) in bottom.coeffs() {
            let g = grothendieck(&SkewShape::straight(lam.clone()), trunc);
            residual.add_scaled(&g, &-c)?;
            *out.entry(lam.clone()).or_insert_with(BigInt::zero) += c;
        }
        debug_assert!(residual.lowest_degree().is_none_or(|e| e > d));
    }
    Ok(BasisExpansion::new(Basis::Grothendieck, out, trunc))
}

fn conjugate_in(f: &BasisExpansion, basis: Basis) -> Result<BasisExpansion> {
    if f.basis() != basis {
        return Err(Error::UnsupportedBasis(f.basis().tag()));
    }
    Ok(f.conjugate_indices())
}

/// `τ`: `G_λ ↦ G_{λᵀ}`.
pub fn tau(f: &BasisExpansion) -> Result<BasisExpansion> {
    conjugate_in(f, Basis::Grothendieck)
}

/// `τ̄`: `g_λ ↦ g_{λᵀ}`.
pub fn tau_bar(f: &BasisExpansion) -> Result<BasisExpansion> {
    conjugate_in(f, Basis::DualGrothendieck)
}

/// `f⊥(a) = Σ_{α,β} [m_α(x) m_β(y)] a(x, y) · ⟨f, m_α⟩ · m_β`.
///
/// The pairing `⟨f, m_α⟩` only sees the degree-`|α|` part of `f`, so `f`
/// must be known up to the largest `|α|` that matters; the result is then
/// exact in degree `d` whenever `a` is exact in every degree `d + |α|`.
pub fn skew_by(f: &BasisExpansion, a: &SymFunc) -> Result<SymFunc> {
    let trunc = a.trunc();
    let fs = m_to_schur(&realize(f)?);
    let split = split_alphabets(a, trunc.num_vars(), trunc.num_vars());
    let mut pairing: HashMap<Partition, BigInt> = HashMap::new();
    let mut out = Coeffs::new();
    for ((alpha, beta), c) in split {
        if alpha.size() > fs.trunc().max_degree() {
            continue;
        }
        let p = pairing
            .entry(alpha.clone())
            .or_insert_with(|| {
                let m = basis_element(Basis::Monomial, &alpha, fs.trunc()).expect("degree checked");
                hall_inner(&fs, &m_to_schur(&m)).expect("Schur expansions")
            })
            .clone();
        if p.is_zero() {
            continue;
        }
        *out.entry(beta).or_insert_with(BigInt::zero) += c * p;
    }
    Ok(SymFunc::from_coeffs(out, trunc))
}

/// Single-element expansion `b_λ` (convenience for operator arguments).
pub fn element(basis: Basis, lam: &Partition, trunc: TruncationProfile) -> BasisExpansion {
    BasisExpansion::single(basis, lam.clone(), trunc)
}

/// `Σ_{n=k}^{D} (-1)^{n-k} C(n-1,k-1) e_n`.
pub fn alternating_e_sum(k: usize, trunc: TruncationProfile) -> Result<SymFunc> {
    let mut acc = SymFunc::zero(trunc);
    for n in k..=trunc.max_degree() {
        let c = binomial(n.saturating_sub(1), k.saturating_sub(1))
            * if (n - k).is_multiple_of(2) { 1 } else { -1 };
        acc.add_scaled(
            &basis_element(Basis::Elementary, &Partition::row(n), trunc)?,
            &c,
        )?;
    }
    Ok(acc)
}

/// `C(n, k)` as a big integer, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
