//! Truncated symmetric functions with exact integer coefficients.
//!
//! A [`SymFunc`] stores coefficients in the monomial basis `m_λ` together
//! with a [`TruncationProfile`]: every degree above `max_degree` is
//! discarded by every operation, so two power series compare equal exactly
//! when they agree up to that degree. Because `num_vars >= max_degree`, the
//! monomial coordinates are faithful on everything that is kept.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Partition, SkewShape};
use crate::tableaux::{count_by_content, FillingKind};

/// Degree bound `max_degree` and variable count `num_vars >= max_degree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TruncationProfile {
    max_degree: usize,
    num_vars: usize,
}

impl TruncationProfile {
    pub fn new(max_degree: usize, num_vars: usize) -> Result<Self> {
        if num_vars < max_degree {
            return Err(Error::Unfaithful {
                max_degree,
                vars: num_vars,
            });
        }
        Ok(TruncationProfile {
            max_degree,
            num_vars,
        })
    }

    /// The default profile `(D, D)` for a comparison up to degree `D`.
    pub fn degree(max_degree: usize) -> Self {
        TruncationProfile {
            max_degree,
            num_vars: max_degree,
        }
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Whether `m_λ` survives this truncation.
    pub fn admits(&self, lam: &Partition) -> bool {
        lam.size() <= self.max_degree && lam.len() <= self.num_vars
    }
}

impl fmt::Display for TruncationProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "deg<={} in {} vars", self.max_degree, self.num_vars)
    }
}

pub type Coeffs = BTreeMap<Partition, BigInt>;

/// A symmetric function truncated to degree `<= D`, in monomial coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    coeffs: Coeffs,
    trunc: TruncationProfile,
}

fn add_into(target: &mut Coeffs, key: &Partition, value: &BigInt) {
    if value.is_zero() {
        return;
    }
    match target.get_mut(key) {
        Some(c) => {
            *c += value;
            if c.is_zero() {
                target.remove(key);
            }
        }
        None => {
            target.insert(key.clone(), value.clone());
        }
    }
}

impl SymFunc {
    pub fn zero(trunc: TruncationProfile) -> Self {
        SymFunc {
            coeffs: Coeffs::new(),
            trunc,
        }
    }

    pub fn one(trunc: TruncationProfile) -> Self {
        Self::from_coeffs(
            [(Partition::empty(), BigInt::one())].into_iter().collect(),
            trunc,
        )
    }

    /// Drops zero coefficients and keys beyond the truncation.
    pub fn from_coeffs(coeffs: Coeffs, trunc: TruncationProfile) -> Self {
        let coeffs = coeffs
            .into_iter()
            .filter(|(k, v)| !v.is_zero() && trunc.admits(k))
            .collect();
        SymFunc { coeffs, trunc }
    }

    pub fn coeffs(&self) -> &Coeffs {
        &self.coeffs
    }

    pub fn coeff(&self, lam: &Partition) -> BigInt {
        self.coeffs.get(lam).cloned().unwrap_or_default()
    }

    pub fn trunc(&self) -> TruncationProfile {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.keys().map(Partition::size).min()
    }

    pub fn highest_degree(&self) -> Option<usize> {
        self.coeffs.keys().map(Partition::size).max()
    }

    /// Degree-`d` component.
    pub fn homogeneous(&self, d: usize) -> SymFunc {
        SymFunc {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| k.size() == d)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
            trunc: self.trunc,
        }
    }

    /// Re-truncates to a smaller profile.
    pub fn truncate(&self, trunc: TruncationProfile) -> SymFunc {
        SymFunc::from_coeffs(self.coeffs.clone(), trunc)
    }

    fn check(&self, other: &SymFunc) -> Result<()> {
        if self.trunc != other.trunc {
            return Err(Error::ProfileMismatch(self.trunc, other.trunc));
        }
        Ok(())
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check(other)?;
        let mut coeffs = self.coeffs.clone();
        for (k, v) in &other.coeffs {
            add_into(&mut coeffs, k, v);
        }
        Ok(SymFunc {
            coeffs,
            trunc: self.trunc,
        })
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, factor: &BigInt) -> SymFunc {
        if factor.is_zero() {
            return SymFunc::zero(self.trunc);
        }
        SymFunc {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (k.clone(), v * factor))
                .collect(),
            trunc: self.trunc,
        }
    }

    /// Adds `factor * other` in place.
    pub fn add_scaled(&mut self, other: &SymFunc, factor: &BigInt) -> Result<()> {
        self.check(other)?;
        for (k, v) in &other.coeffs {
            add_into(&mut self.coeffs, k, &(v * factor));
        }
        Ok(())
    }

    /// Product, truncated. The coefficient of `m_ν` is the coefficient of
    /// the monomial `x^ν`, which is a sum over all ways to split the
    /// exponent vector `ν` into two weak compositions.
    pub fn multiply(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check(other)?;
        let mut coeffs = Coeffs::new();
        let (Some(lo_a), Some(lo_b)) = (self.lowest_degree(), other.lowest_degree()) else {
            return Ok(SymFunc::zero(self.trunc));
        };
        let hi = (self.highest_degree().unwrap() + other.highest_degree().unwrap())
            .min(self.trunc.max_degree);
        for d in lo_a + lo_b..=hi {
            for nu in Partition::all_of_size(d) {
                if !self.trunc.admits(&nu) {
                    continue;
                }
                let c = split_sum(&nu, &self.coeffs, &other.coeffs);
                if !c.is_zero() {
                    coeffs.insert(nu, c);
                }
            }
        }
        Ok(SymFunc {
            coeffs,
            trunc: self.trunc,
        })
    }

    /// Writes the coefficient list as `m[2]=1 m[1,1]=1 ...`, `0` when empty.
    pub fn to_text(&self) -> String {
        coeff_text("m", &self.coeffs)
    }
}

/// `Σ_{α + β = ν} f[sort α] · g[sort β]` over weak compositions.
fn split_sum(nu: &Partition, f: &Coeffs, g: &Coeffs) -> BigInt {
    let parts = nu.parts();
    let mut total = BigInt::zero();
    let mut alpha = vec![0usize; parts.len()];
    loop {
        let a = Partition::from_unsorted(alpha.clone());
        if let Some(fa) = f.get(&a) {
            let beta: Vec<usize> = parts.iter().zip(&alpha).map(|(n, a)| n - a).collect();
            if let Some(gb) = g.get(&Partition::from_unsorted(beta)) {
                total += fa * gb;
            }
        }
        // odometer over 0..=ν_i
        let mut i = 0;
        loop {
            if i == parts.len() {
                return total;
            }
            alpha[i] += 1;
            if alpha[i] <= parts[i] {
                break;
            }
            alpha[i] = 0;
            i += 1;
        }
    }
}

pub(crate) fn coeff_text(tag: &str, coeffs: &Coeffs) -> String {
    if coeffs.is_empty() {
        return "0".to_string();
    }
    coeffs
        .iter()
        .map(|(k, v)| format!("{tag}[{k}]={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.to_text(), self.trunc)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Basis tags for [`BasisExpansion`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "m")]
    Monomial,
    #[serde(rename = "s")]
    Schur,
    #[serde(rename = "e")]
    Elementary,
    #[serde(rename = "h")]
    Complete,
    /// Dual stable Grothendieck `g_λ`.
    #[serde(rename = "g")]
    DualGrothendieck,
    /// Stable Grothendieck `G_λ`.
    #[serde(rename = "G")]
    Grothendieck,
}

impl Basis {
    pub fn tag(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Schur => "s",
            Basis::Elementary => "e",
            Basis::Complete => "h",
            Basis::DualGrothendieck => "g",
            Basis::Grothendieck => "G",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Basis> {
        Some(match tag {
            "m" => Basis::Monomial,
            "s" => Basis::Schur,
            "e" => Basis::Elementary,
            "h" => Basis::Complete,
            "g" => Basis::DualGrothendieck,
            "G" => Basis::Grothendieck,
            _ => return None,
        })
    }
}

/// A finite combination `Σ c_λ b_λ` in a named basis.
#[derive(Clone, PartialEq, Eq)]
pub struct BasisExpansion {
    basis: Basis,
    coeffs: Coeffs,
    trunc: TruncationProfile,
}

impl BasisExpansion {
    pub fn new(basis: Basis, coeffs: Coeffs, trunc: TruncationProfile) -> Self {
        let coeffs = coeffs
            .into_iter()
            .filter(|(k, v)| !v.is_zero() && trunc.admits(k))
            .collect();
        BasisExpansion {
            basis,
            coeffs,
            trunc,
        }
    }

    /// A single basis element `b_λ`.
    pub fn single(basis: Basis, lam: Partition, trunc: TruncationProfile) -> Self {
        Self::new(basis, [(lam, BigInt::one())].into_iter().collect(), trunc)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &Coeffs {
        &self.coeffs
    }

    pub fn coeff(&self, lam: &Partition) -> BigInt {
        self.coeffs.get(lam).cloned().unwrap_or_default()
    }

    pub fn trunc(&self) -> TruncationProfile {
        self.trunc
    }

    /// Same coefficients with every index conjugated.
    pub fn conjugate_indices(&self) -> BasisExpansion {
        BasisExpansion {
            basis: self.basis,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (k.conjugate(), v.clone()))
                .collect(),
            trunc: self.trunc,
        }
    }

    pub fn to_text(&self) -> String {
        coeff_text(self.basis.tag(), &self.coeffs)
    }

    /// Monomial coordinates for the classical bases `m`, `s`, `e`, `h`.
    pub fn to_monomial(&self) -> Result<SymFunc> {
        let mut out = SymFunc::zero(self.trunc);
        for (lam, c) in &self.coeffs {
            let term = match self.basis {
                Basis::Monomial | Basis::Elementary | Basis::Complete => {
                    basis_element(self.basis, lam, self.trunc)?
                }
                Basis::Schur => schur_to_m(lam, self.trunc)?,
                other => return Err(Error::UnsupportedBasis(other.tag())),
            };
            out.add_scaled(&term, c)?;
        }
        Ok(out)
    }
}

impl fmt::Debug for BasisExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.to_text(), self.trunc)
    }
}

/// `m_λ`, `e_λ = Π e_{λ_i}` or `h_λ = Π h_{λ_i}` in monomial coordinates.
pub fn basis_element(basis: Basis, lam: &Partition, trunc: TruncationProfile) -> Result<SymFunc> {
    if lam.size() > trunc.max_degree() {
        return Err(Error::DegreeOverflow {
            degree: lam.size(),
            max_degree: trunc.max_degree(),
        });
    }
    match basis {
        Basis::Monomial => Ok(SymFunc::from_coeffs(
            [(lam.clone(), BigInt::one())].into_iter().collect(),
            trunc,
        )),
        Basis::Elementary | Basis::Complete => {
            let mut acc = SymFunc::one(trunc);
            for &part in lam.parts() {
                let factor: Coeffs = if basis == Basis::Elementary {
                    [(Partition::column(part), BigInt::one())]
                        .into_iter()
                        .collect()
                } else {
                    Partition::all_of_size(part)
                        .into_iter()
                        .map(|p| (p, BigInt::one()))
                        .collect()
                };
                acc = acc.multiply(&SymFunc::from_coeffs(factor, trunc))?;
            }
            Ok(acc)
        }
        other => Err(Error::UnsupportedBasis(other.tag())),
    }
}

type KostkaRow = Arc<Coeffs>;

fn schur_cache() -> &'static RwLock<HashMap<Partition, KostkaRow>> {
    static CACHE: OnceLock<RwLock<HashMap<Partition, KostkaRow>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub(crate) fn clear_kostka_cache() {
    schur_cache().write().unwrap().clear();
}

/// `K_{λμ}` for every `μ ⊢ |λ|`, counted from SSYT of shape `λ`.
fn kostka_row(lam: &Partition) -> KostkaRow {
    if let Some(hit) = schur_cache().read().unwrap().get(lam) {
        return hit.clone();
    }
    let shape = SkewShape::straight(lam.clone());
    let row: Coeffs = Partition::all_of_size(lam.size())
        .into_iter()
        .filter_map(|mu| {
            let k = count_by_content(&shape, FillingKind::Ssyt, mu.parts());
            (k > 0).then(|| (mu, BigInt::from(k)))
        })
        .collect();
    let row = Arc::new(row);
    schur_cache()
        .write()
        .unwrap()
        .insert(lam.clone(), row.clone());
    row
}

/// Kostka number `K_{λμ}`.
pub fn kostka(lam: &Partition, mu: &Partition) -> BigInt {
    kostka_row(lam).get(mu).cloned().unwrap_or_default()
}

/// `s_λ = Σ_μ K_{λμ} m_μ`.
pub fn schur_to_m(lam: &Partition, trunc: TruncationProfile) -> Result<SymFunc> {
    if lam.size() > trunc.max_degree() {
        return Err(Error::DegreeOverflow {
            degree: lam.size(),
            max_degree: trunc.max_degree(),
        });
    }
    Ok(SymFunc::from_coeffs((*kostka_row(lam)).clone(), trunc))
}

/// Peels leading terms degree by degree. Within a degree the partitions are
/// visited from lexicographically largest down, a linear extension of
/// dominance, and `lead(λ)` is expanded as the unitriangular element whose
/// leading monomial is `m_λ`.
fn peel(f: &SymFunc, lead: impl Fn(&Partition) -> (Partition, Coeffs)) -> Coeffs {
    let mut out = Coeffs::new();
    let top = f.highest_degree().unwrap_or(0);
    for d in 0..=top {
        let mut residual: Coeffs = f.homogeneous(d).coeffs;
        for lam in Partition::all_of_size(d) {
            let Some(c) = residual.get(&lam).cloned() else {
                continue;
            };
            let (key, expansion) = lead(&lam);
            for (mu, k) in &expansion {
                add_into(&mut residual, mu, &-(k * &c));
            }
            out.insert(key, c);
        }
        debug_assert!(residual.is_empty(), "unitriangular peel left {residual:?}");
    }
    out
}

/// Schur coefficients of `f`, exact on every kept degree.
pub fn m_to_schur(f: &SymFunc) -> BasisExpansion {
    let coeffs = peel(f, |lam| (lam.clone(), (*kostka_row(lam)).clone()));
    BasisExpansion::new(Basis::Schur, coeffs, f.trunc)
}

/// Elementary coefficients: `e_{λᵀ}` has leading monomial `m_λ`.
pub fn m_to_elementary(f: &SymFunc) -> BasisExpansion {
    let trunc = TruncationProfile::degree(f.highest_degree().unwrap_or(0));
    let coeffs = peel(f, |lam| {
        let e = basis_element(Basis::Elementary, &lam.conjugate(), trunc).expect("degree fits");
        (lam.conjugate(), e.coeffs)
    });
    BasisExpansion::new(Basis::Elementary, coeffs, f.trunc)
}

/// Complete homogeneous coefficients, through the involution `ω` that
/// swaps `e` and `h` and sends `s_λ` to `s_{λᵀ}`.
pub fn m_to_complete(f: &SymFunc) -> Result<BasisExpansion> {
    let omega = m_to_schur(f).conjugate_indices().to_monomial()?;
    let e = m_to_elementary(&omega);
    Ok(BasisExpansion::new(Basis::Complete, e.coeffs, f.trunc))
}

/// `Σ_λ f_λ g_λ` for two Schur expansions.
pub fn hall_inner(f: &BasisExpansion, g: &BasisExpansion) -> Result<BigInt> {
    for x in [f, g] {
        if x.basis != Basis::Schur {
            return Err(Error::UnsupportedBasis(x.basis.tag()));
        }
    }
    Ok(f.coeffs
        .iter()
        .filter_map(|(k, v)| g.coeffs.get(k).map(|w| v * w))
        .sum())
}

/// Hall pairing of two monomial-coordinate functions.
pub fn pair(f: &SymFunc, g: &SymFunc) -> BigInt {
    hall_inner(&m_to_schur(f), &m_to_schur(g)).expect("both in the Schur basis")
}

/// Coefficients indexed by `(α, β)` of `m_α(x) ⊗ m_β(y)`.
pub type Tensor = BTreeMap<(Partition, Partition), BigInt>;

/// Coefficients of `m_α(x_1..x_a) m_β(y_1..y_b)` in `f(x, y)`.
///
/// Since `f` is symmetric in all variables together, the monomial
/// `x^α y^β` carries the coefficient of `m_{α ∪ β}`; so each key of `f` is
/// split into every pair of complementary sub-multisets of its parts.
pub fn split_alphabets(f: &SymFunc, a: usize, b: usize) -> Tensor {
    let mut out = Tensor::new();
    for (nu, c) in &f.coeffs {
        let mut values: Vec<(usize, usize)> = Vec::new();
        for &p in nu.parts() {
            match values.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => values.push((p, 1)),
            }
        }
        let mut take = vec![0usize; values.len()];
        loop {
            let mut alpha = Vec::new();
            let mut beta = Vec::new();
            for (&(v, m), &t) in values.iter().zip(&take) {
                alpha.extend(std::iter::repeat_n(v, t));
                beta.extend(std::iter::repeat_n(v, m - t));
            }
            if alpha.len() <= a && beta.len() <= b {
                out.insert(
                    (
                        Partition::from_unsorted(alpha),
                        Partition::from_unsorted(beta),
                    ),
                    c.clone(),
                );
            }
            let mut i = 0;
            loop {
                if i == values.len() {
                    break;
                }
                take[i] += 1;
                if take[i] <= values[i].1 {
                    break;
                }
                take[i] = 0;
                i += 1;
            }
            if i == values.len() {
                break;
            }
        }
    }
    out
}

/// `f(x) g(y)` as a tensor, dropping total degrees above `max_degree`.
pub fn tensor(f: &SymFunc, g: &SymFunc, max_degree: usize) -> Tensor {
    let mut out = Tensor::new();
    for (a, u) in &f.coeffs {
        for (b, v) in &g.coeffs {
            if a.size() + b.size() > max_degree {
                continue;
            }
            let key = (a.clone(), b.clone());
            let entry = out.entry(key.clone()).or_insert_with(BigInt::zero);
            *entry += u * v;
            if entry.is_zero() {
                out.remove(&key);
            }
        }
    }
    out
}

/// Adds `other` into `acc`, dropping cancelled entries.
pub fn tensor_add(acc: &mut Tensor, other: &Tensor) {
    for (k, v) in other {
        let entry = acc.entry(k.clone()).or_insert_with(BigInt::zero);
        *entry += v;
        if entry.is_zero() {
            acc.remove(k);
        }
    }
}
