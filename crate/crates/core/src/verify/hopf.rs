use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{equal, lift, same, Outcome, Plan, Report, Role};
use crate::grothendieck::{
    dual_grothendieck, element, expand_in_grothendieck, grothendieck, grothendieck_rook, skew_by,
    tau,
};
use crate::shapes::{Partition, SkewShape};
use crate::symfunc::{
    basis_element, m_to_schur, pair, schur_to_m, split_alphabets, tensor, tensor_add, Basis,
    SymFunc, Tensor, TruncationProfile,
};

/// Bounds for [`plan_hopf`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfBounds {
    /// `ρ_n` for the `g`-side identities, which are exact.
    pub n: usize,
    /// Largest `m` for the `G`-side identities on `ρ_m`.
    pub big_n: usize,
    /// `G`-side identities on `ρ_m` are compared up to degree `|ρ_m| + extra`.
    pub extra: usize,
    /// Degree bound for `Δ(g_λ)`, the adjunction and the duality pairing.
    pub small: usize,
}

impl Default for HopfBounds {
    fn default() -> Self {
        HopfBounds {
            n: 4,
            big_n: 3,
            extra: 2,
            small: 5,
        }
    }
}

fn straight(lam: &Partition) -> SkewShape {
    SkewShape::straight(lam.clone())
}

fn skew(lam: &Partition, mu: &Partition) -> SkewShape {
    SkewShape::new(lam.clone(), mu.clone()).expect("contained")
}

fn same_tensor(lhs: &Tensor, rhs: &Tensor) -> Outcome {
    if lhs == rhs {
        return Ok(());
    }
    let key = lhs
        .keys()
        .chain(rhs.keys())
        .find(|k| lhs.get(k) != rhs.get(k))
        .expect("unequal tensors differ somewhere");
    let get = |t: &Tensor| t.get(key).cloned().unwrap_or_default();
    Err(format!(
        "coefficient of m[{}] (x) m[{}]: left {} vs right {}",
        key.0,
        key.1,
        get(lhs),
        get(rhs)
    ))
}

/// Keeps total degrees `<= d`.
fn cap(t: Tensor, d: usize) -> Tensor {
    t.into_iter()
        .filter(|((a, b), _)| a.size() + b.size() <= d)
        .collect()
}

/// Hopf-algebraic identities:
///
/// * `Δ(g_λ) = Σ_{μ⊆λ} g_μ ⊗ g_{λ/μ}` for `|λ| <= small`;
/// * `G_μ⊥ g_λ = g_{λ/μ}` for `μ ⊆ λ ⊆ ρ_n`;
/// * `e_k⊥ g_ρ = τ(e_k)⊥ g_ρ` for `ρ = ρ_n`, `k <= n`;
/// * on `ρ = ρ_m`, `m <= big_n`, up to degree `D = |ρ| + extra`:
///   `g_μ⊥ G_ρ = G_{ρ//μ}` (up to degree `D - |μ|`, where the input
///   truncation still determines the left side), `Σ_{σ⊆μ} G_{ρ//σ} = G_{ρ/μ}`,
///   `G_{ρ//μ} = G_{ρ//μᵀ}` and `Δ(G_ρ) = Σ_{ν⊆ρ} G_ν ⊗ G_{ρ//ν}`;
/// * `⟨g, f⊥ a⟩ = ⟨f g, a⟩` for `f, g` Schur functions of degree `<= 3`
///   and `a` one of degree `<= small`;
/// * `⟨G_λ, g_μ⟩ = δ_{λμ}` for `|λ|, |μ| <= small`.
pub fn plan_hopf(bounds: HopfBounds) -> Plan {
    let HopfBounds {
        n,
        big_n,
        extra,
        small,
    } = bounds;
    let mut plan = Plan::new(
        "hopf",
        &format!("--n {n} --big-n {big_n} --extra {extra} --small {small}"),
    );

    for lam in Partition::all_up_to(small) {
        let d = lam.size();
        let trunc = TruncationProfile::degree(d);
        plan.push(
            Role::Gate,
            format!("coproduct g lam={lam}"),
            "Delta g[lam] = sum g[mu] (x) g[lam/mu]",
            Some(trunc),
            move || {
                let g = lift(dual_grothendieck(&straight(&lam), trunc))?;
                let lhs = split_alphabets(&g, d, d);
                let mut rhs = Tensor::new();
                for mu in lam.subpartitions() {
                    let left = lift(dual_grothendieck(&straight(&mu), trunc))?;
                    let right = lift(dual_grothendieck(&skew(&lam, &mu), trunc))?;
                    tensor_add(&mut rhs, &tensor(&left, &right, d));
                }
                same_tensor(&lhs, &rhs)
            },
        );
    }

    let rho = Partition::staircase(n);
    for lam in rho.subpartitions() {
        for mu in lam.subpartitions() {
            let trunc = TruncationProfile::degree(lam.size());
            let lam = lam.clone();
            plan.push(
                Role::Gate,
                format!("skew g lam={lam} mu={mu}"),
                "G[mu]^perp g[lam] = g[lam/mu]",
                Some(trunc),
                move || {
                    let g = lift(dual_grothendieck(&straight(&lam), trunc))?;
                    let lhs = lift(skew_by(&element(Basis::Grothendieck, &mu, trunc), &g))?;
                    same(&lhs, &lift(dual_grothendieck(&skew(&lam, &mu), trunc))?)
                },
            );
        }
    }
    for k in 1..=n {
        let trunc = TruncationProfile::degree(rho.size());
        let rho = rho.clone();
        plan.push(
            Role::Gate,
            format!("tau k={k} n={n}"),
            "e_k^perp g[rho] = tau(e_k)^perp g[rho]",
            Some(trunc),
            move || {
                let g = lift(dual_grothendieck(&straight(&rho), trunc))?;
                let e = lift(basis_element(Basis::Elementary, &Partition::row(k), trunc))?;
                let lhs = lift(skew_by(&m_to_schur(&e), &g))?;
                let swapped = lift(tau(&lift(expand_in_grothendieck(&e))?))?;
                let rhs = lift(skew_by(&swapped, &g))?;
                same(&lhs, &rhs)
            },
        );
    }

    for m in 1..=big_n {
        let rho = Partition::staircase(m);
        let d = rho.size() + extra;
        let trunc = TruncationProfile::degree(d);
        for mu in rho.subpartitions() {
            let modulus = TruncationProfile::degree(d - mu.size());
            let (rho1, mu1) = (rho.clone(), mu.clone());
            plan.push(
                Role::Gate,
                format!("skew G m={m} mu={mu}"),
                "g[mu]^perp G[rho] = G[rho//mu]",
                Some(modulus),
                move || {
                    let big = grothendieck(&straight(&rho1), trunc);
                    let lhs = lift(skew_by(
                        &element(Basis::DualGrothendieck, &mu1, trunc),
                        &big,
                    ))?;
                    let rhs = lift(grothendieck_rook(&rho1, &mu1, trunc))?;
                    same(&lhs.truncate(modulus), &rhs.truncate(modulus))
                },
            );
            let (rho1, mu1) = (rho.clone(), mu.clone());
            plan.push(
                Role::Gate,
                format!("rook sum m={m} mu={mu}"),
                "sum_{sigma in mu} G[rho//sigma] = G[rho/mu]",
                Some(trunc),
                move || {
                    let mut acc = SymFunc::zero(trunc);
                    for sigma in mu1.subpartitions() {
                        acc = lift(acc.add(&lift(grothendieck_rook(&rho1, &sigma, trunc))?))?;
                    }
                    same(&acc, &grothendieck(&skew(&rho1, &mu1), trunc))
                },
            );
            let (rho1, mu1) = (rho.clone(), mu.clone());
            plan.push(
                Role::Gate,
                format!("rook conjugate m={m} mu={mu}"),
                "G[rho//mu] = G[rho//mu^T]",
                Some(trunc),
                move || {
                    let lhs = lift(grothendieck_rook(&rho1, &mu1, trunc))?;
                    same(
                        &lhs,
                        &lift(grothendieck_rook(&rho1, &mu1.conjugate(), trunc))?,
                    )
                },
            );
        }
        let rho1 = rho.clone();
        plan.push(
            Role::Gate,
            format!("coproduct G m={m}"),
            "Delta G[rho] = sum G[nu] (x) G[rho//nu]",
            Some(trunc),
            move || {
                let lhs = cap(
                    split_alphabets(&grothendieck(&straight(&rho1), trunc), d, d),
                    d,
                );
                let mut rhs = Tensor::new();
                for nu in rho1.subpartitions() {
                    let right = lift(grothendieck_rook(&rho1, &nu, trunc))?;
                    tensor_add(
                        &mut rhs,
                        &tensor(&grothendieck(&straight(&nu), trunc), &right, d),
                    );
                }
                same_tensor(&lhs, &rhs)
            },
        );
    }

    let adj = TruncationProfile::degree(small + 3);
    for f in Partition::all_up_to(3) {
        for a in Partition::all_up_to(small) {
            let f = f.clone();
            plan.push(
                Role::Gate,
                format!("adjoint f={f} a={a}"),
                "<g, f^perp a> = <f g, a> for all s-indices g",
                Some(adj),
                move || {
                    let fs = lift(schur_to_m(&f, adj))?;
                    let a_fn = lift(schur_to_m(&a, adj))?;
                    let skewed = lift(skew_by(&element(Basis::Schur, &f, adj), &a_fn))?;
                    for g in Partition::all_up_to(3) {
                        let gs = lift(schur_to_m(&g, adj))?;
                        let lhs = pair(&gs, &skewed);
                        let rhs = pair(&lift(fs.multiply(&gs))?, &a_fn);
                        equal(&format!("g={g}"), lhs, rhs)?;
                    }
                    Ok(())
                },
            );
        }
    }

    let dual = TruncationProfile::degree(small);
    for lam in Partition::all_up_to(small) {
        plan.push(
            Role::Gate,
            format!("duality lam={lam}"),
            "<G[lam], g[mu]> = delta",
            Some(dual),
            move || {
                let big = grothendieck(&straight(&lam), dual);
                for mu in Partition::all_up_to(small) {
                    let g = lift(dual_grothendieck(&straight(&mu), dual))?;
                    equal(
                        &format!("mu={mu}"),
                        pair(&big, &g),
                        BigInt::from(u8::from(lam == mu)),
                    )?;
                }
                Ok(())
            },
        );
    }
    plan
}

pub fn verify_hopf(bounds: HopfBounds) -> Report {
    plan_hopf(bounds).run()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bounds_pass() {
        let r = verify_hopf(HopfBounds {
            n: 3,
            big_n: 2,
            extra: 2,
            small: 3,
        });
        assert!(r.passed, "{r}");
    }

    #[test]
    fn trivial_skews() {
        let r = plan_hopf(HopfBounds {
            n: 2,
            big_n: 0,
            extra: 0,
            small: 0,
        })
        .only("skew g lam=2,1 mu=")
        .run();
        assert_eq!(r.cases.len(), 1);
        assert!(r.passed);
    }
}
