use super::{lift, same, Plan, Report, Role};
use crate::grothendieck::{dual_grothendieck, grothendieck};
use crate::shapes::{Partition, SkewShape};
use crate::symfunc::TruncationProfile;

/// `g_{ρ_n/μ} = g_{ρ_n/μᵀ}` for every `μ ⊆ ρ_n`, exactly.
pub fn plan_stembridge_g(n: usize) -> Plan {
    let rho = Partition::staircase(n);
    let d = rho.size();
    let trunc = TruncationProfile::degree(d);
    let mut plan = Plan::new("stembridge-g", &format!("--n {n}"));
    for mu in rho.subpartitions() {
        let rho = rho.clone();
        plan.push(
            Role::Gate,
            format!("mu={mu}"),
            "g[rho/mu] = g[rho/mu^T]",
            Some(trunc),
            move || {
                let lhs = lift(dual_grothendieck(
                    &SkewShape::new(rho.clone(), mu.clone()).unwrap(),
                    trunc,
                ))?;
                let rhs = lift(dual_grothendieck(
                    &SkewShape::new(rho.clone(), mu.conjugate()).unwrap(),
                    trunc,
                ))?;
                same(&lhs, &rhs)
            },
        );
    }
    plan
}

pub fn verify_stembridge_g(n: usize) -> Report {
    plan_stembridge_g(n).run()
}

/// `G_{ρ_n/μ} = G_{ρ_n/μᵀ}` for every `μ ⊆ ρ_n`, modulo degrees above
/// `|ρ_n/μ| + extra_degrees`.
pub fn plan_stembridge_big_g(n: usize, extra_degrees: usize) -> Plan {
    let rho = Partition::staircase(n);
    let mut plan = Plan::new("stembridge-G", &format!("--n {n} --extra {extra_degrees}"));
    for mu in rho.subpartitions() {
        let trunc = TruncationProfile::degree(rho.size() - mu.size() + extra_degrees);
        let rho = rho.clone();
        plan.push(
            Role::Gate,
            format!("mu={mu}"),
            "G[rho/mu] = G[rho/mu^T]",
            Some(trunc),
            move || {
                let lhs = grothendieck(&SkewShape::new(rho.clone(), mu.clone()).unwrap(), trunc);
                let rhs =
                    grothendieck(&SkewShape::new(rho.clone(), mu.conjugate()).unwrap(), trunc);
                same(&lhs, &rhs)
            },
        );
    }
    plan
}

pub fn verify_stembridge_big_g(n: usize, extra_degrees: usize) -> Report {
    plan_stembridge_big_g(n, extra_degrees).run()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_staircases_pass() {
        for n in 1..=3 {
            let r = verify_stembridge_g(n);
            assert!(r.passed, "{r}");
            assert_eq!(r.cases.len(), Partition::staircase(n).subpartitions().len());
        }
        let r = verify_stembridge_big_g(2, 3);
        assert!(r.passed, "{r}");
        assert!(r.modulus.is_none());
    }

    #[test]
    fn single_case_rerun() {
        let plan = plan_stembridge_g(3).only("mu=2");
        assert_eq!(plan.len(), 1);
        assert!(plan.run().passed);
    }
}
