use num_bigint::BigInt;

use super::{equal, lift, same, Plan, Report, Role};
use crate::grothendieck::{
    alternating_e_sum, binomial, dual_grothendieck, expand_in_grothendieck, grothendieck, schur,
};
use crate::shapes::{Partition, SkewShape};
use crate::symfunc::{basis_element, schur_to_m, Basis, SymFunc, TruncationProfile};

/// Largest shape for the Pieri checks.
const PIERI_BOX: [usize; 4] = [4, 4, 4, 4];

/// `s_{λ/μ}`, or zero when `μ ⊄ λ`.
fn skew_schur_or_zero(
    lam: &Partition,
    mu: &Partition,
    trunc: TruncationProfile,
) -> crate::Result<SymFunc> {
    match SkewShape::new(lam.clone(), mu.clone()) {
        Ok(shape) => schur(&shape, trunc),
        Err(_) => Ok(SymFunc::zero(trunc)),
    }
}

/// `Σ s_σ` over `σ ⊆ λ` with `λ/σ` a horizontal (or vertical) `k`-strip.
fn pieri_sum(
    lam: &Partition,
    k: usize,
    vertical: bool,
    trunc: TruncationProfile,
) -> crate::Result<SymFunc> {
    let mut acc = SymFunc::zero(trunc);
    for sigma in lam.subpartitions() {
        if sigma.size() + k != lam.size() {
            continue;
        }
        let kind = SkewShape::new(lam.clone(), sigma.clone())?.classify_strip();
        if (vertical && kind.vertical) || (!vertical && kind.horizontal) {
            acc = acc.add(&schur_to_m(&sigma, trunc)?)?;
        }
    }
    Ok(acc)
}

/// Basis identities at truncation `D`: the alternating `e`-sum for
/// `G_{(1^k)}` and the binomial `G`-expansion of `e_k` for `k <= k_max`,
/// `g_{(k)} = h_k` for `k <= D`, and Pieri's rule for `s_{λ/(k)}` and
/// `s_{λ/(1^k)}` for `λ ⊆ (4,4,4,4)`, `k <= k_max`.
pub fn plan_basis_identities(k_max: usize, d: usize) -> Plan {
    let trunc = TruncationProfile::degree(d);
    let mut plan = Plan::new("basis", &format!("--k-max {k_max} --deg {d}"));
    for k in 1..=k_max.min(d) {
        plan.push(
            Role::Gate,
            format!("column k={k}"),
            "G[1^k] = sum_n (-1)^(n-k) C(n-1,k-1) e_n",
            Some(trunc),
            move || {
                let lhs = grothendieck(&SkewShape::straight(Partition::column(k)), trunc);
                same(&lhs, &lift(alternating_e_sum(k, trunc))?)
            },
        );
        plan.push(
            Role::Gate,
            format!("e k={k}"),
            "e_k = sum_n C(n-1,k-1) G[1^n]",
            Some(trunc),
            move || {
                let e = lift(basis_element(Basis::Elementary, &Partition::row(k), trunc))?;
                let got = lift(expand_in_grothendieck(&e))?;
                let expect: Vec<(Partition, BigInt)> = (k..=d)
                    .map(|n| (Partition::column(n), binomial(n - 1, k - 1)))
                    .collect();
                let got: Vec<(Partition, BigInt)> = got
                    .coeffs()
                    .iter()
                    .map(|(p, c)| (p.clone(), c.clone()))
                    .collect();
                equal("G-coefficients", got, expect)
            },
        );
    }
    for k in 0..=d {
        plan.push(
            Role::Gate,
            format!("row k={k}"),
            "g[k] = h_k",
            Some(trunc),
            move || {
                let g = lift(dual_grothendieck(
                    &SkewShape::straight(Partition::row(k)),
                    trunc,
                ))?;
                same(
                    &g,
                    &lift(basis_element(Basis::Complete, &Partition::row(k), trunc))?,
                )
            },
        );
    }
    let bound = Partition::new(PIERI_BOX.to_vec()).expect("a partition");
    for lam in bound.subpartitions() {
        for k in 1..=k_max {
            for vertical in [false, true] {
                let mu = if vertical {
                    Partition::column(k)
                } else {
                    Partition::row(k)
                };
                let strip = if vertical { "vertical" } else { "horizontal" };
                let relation = if vertical {
                    "s[lam/(1^k)] = sum of s[sigma], lam/sigma a vertical k-strip"
                } else {
                    "s[lam/(k)] = sum of s[sigma], lam/sigma a horizontal k-strip"
                };
                let lam = lam.clone();
                let inputs = format!("pieri {strip} k={k} lam={lam}");
                plan.push(Role::Gate, inputs, relation, None, move || {
                    let trunc = TruncationProfile::degree(lam.size().saturating_sub(k));
                    let lhs = lift(skew_schur_or_zero(&lam, &mu, trunc))?;
                    same(&lhs, &lift(pieri_sum(&lam, k, vertical, trunc))?)
                });
            }
        }
    }
    plan
}

pub fn verify_basis_identities(k_max: usize, d: usize) -> Report {
    plan_basis_identities(k_max, d).run()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_battery_passes() {
        let r = verify_basis_identities(2, 4);
        assert!(r.passed, "{r}");
        assert!(r.case("pieri horizontal k=2 lam=2,2").unwrap().holds);
    }

    #[test]
    fn pieri_sum_examples() {
        let t = TruncationProfile::degree(2);
        let lam: Partition = "2,1".parse().unwrap();
        // (2,1)/(1): horizontal 1-strips remove a corner
        let sum = pieri_sum(&lam, 1, false, t).unwrap();
        let expect = schur_to_m(&Partition::row(2), t)
            .unwrap()
            .add(&schur_to_m(&Partition::column(2), t).unwrap())
            .unwrap();
        assert_eq!(sum, expect);
        assert!(
            skew_schur_or_zero(&Partition::row(1), &Partition::row(2), t)
                .unwrap()
                .is_zero()
        );
    }
}
