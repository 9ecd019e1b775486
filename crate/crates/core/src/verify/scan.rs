use super::{lift, same, Plan, Report, Role};
use crate::grothendieck::schur;
use crate::shapes::{Partition, SkewShape};
use crate::symfunc::{SymFunc, TruncationProfile};

/// `s_{λ/μ}`, or zero when `μ ⊄ λ`.
fn skew_schur(lam: &Partition, mu: Partition, trunc: TruncationProfile) -> crate::Result<SymFunc> {
    match SkewShape::new(lam.clone(), mu) {
        Ok(shape) => schur(&shape, trunc),
        Err(_) => Ok(SymFunc::zero(trunc)),
    }
}

/// `Ok` when `s_{λ/(k)} = s_{λ/(1^k)}` for every `1 <= k <= max(ℓ(λ), λ_1)`,
/// otherwise the smallest failing `k` with the first differing coefficient.
pub fn passes_converse(lam: &Partition) -> Result<(), (usize, String)> {
    for k in 1..=lam.len().max(lam.first()) {
        let trunc = TruncationProfile::degree(lam.size() - k);
        let row = lift(skew_schur(lam, Partition::row(k), trunc)).map_err(|e| (k, e))?;
        let col = lift(skew_schur(lam, Partition::column(k), trunc)).map_err(|e| (k, e))?;
        same(&row, &col).map_err(|e| (k, e))?;
    }
    Ok(())
}

/// Scans every `λ` with `|λ| <= max_size`: `λ` passes the
/// `s_{λ/(k)} = s_{λ/(1^k)}` test exactly when it is a staircase, and the
/// passing set is `{∅, ρ_1, ρ_2, ...}`.
pub fn plan_converse_scan(max_size: usize) -> Plan {
    let mut plan = Plan::new("converse", &format!("--max-size {max_size}"));
    for lam in Partition::all_up_to(max_size) {
        plan.push(
            Role::Gate,
            format!("lam={lam}"),
            "s[lam/(k)] = s[lam/(1^k)] for all k iff lam is a staircase",
            None,
            move || match (passes_converse(&lam), lam.is_staircase()) {
                (Ok(()), true) | (Err(_), false) => Ok(()),
                (Ok(()), false) => Err(format!("{lam} passes every k but is not a staircase")),
                (Err((k, why)), true) => Err(format!("staircase {lam} fails at k={k}: {why}")),
            },
        );
    }
    plan.push(
        Role::Gate,
        "passing set".into(),
        "passing set = staircases",
        None,
        move || {
            let passing: Vec<Partition> = Partition::all_up_to(max_size)
                .into_iter()
                .filter(|l| passes_converse(l).is_ok())
                .collect();
            let staircases: Vec<Partition> = (0..)
                .map(Partition::staircase)
                .take_while(|r| r.size() <= max_size)
                .collect();
            if passing == staircases {
                Ok(())
            } else {
                let show = |v: &[Partition]| {
                    v.iter()
                        .map(|p| format!("({p})"))
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                Err(format!(
                    "passing {} vs staircases {}",
                    show(&passing),
                    show(&staircases)
                ))
            }
        },
    );
    plan
}

pub fn converse_scan(max_size: usize) -> Report {
    plan_converse_scan(max_size).run()
}
