use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{lift, same, Plan, Report, Role};
use crate::shapes::Partition;
use crate::symfunc::{basis_element, Basis, Coeffs, SymFunc, TruncationProfile};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 1729;

/// Polynomial in a fixed number of variables, keyed by exponent vectors.
type Poly = HashMap<Vec<usize>, BigInt>;

fn product(a: &Poly, b: &Poly, max_degree: usize) -> Poly {
    let mut out = Poly::new();
    for (x, u) in a {
        let dx: usize = x.iter().sum();
        for (y, v) in b {
            if dx + y.iter().sum::<usize>() > max_degree {
                continue;
            }
            let z: Vec<usize> = x.iter().zip(y).map(|(p, q)| p + q).collect();
            *out.entry(z).or_insert_with(BigInt::zero) += u * v;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Every exponent vector of length `vars` with entries summing to `n`, each
/// entry at most `cap`.
fn vectors(vars: usize, n: usize, cap: usize) -> Vec<Vec<usize>> {
    if vars == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=n.min(cap) {
        for mut rest in vectors(vars - 1, n - first, cap) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn from_terms(terms: impl IntoIterator<Item = Vec<usize>>) -> Poly {
    terms.into_iter().map(|x| (x, BigInt::one())).collect()
}

/// Explicit polynomial of a single factor `m_λ`, `e_n` or `h_n`.
fn explicit(basis: Basis, lam: &Partition, vars: usize) -> Poly {
    match basis {
        Basis::Monomial => {
            let mut sorted = lam.parts().to_vec();
            sorted.sort_unstable();
            from_terms(
                vectors(vars, lam.size(), lam.first())
                    .into_iter()
                    .filter(|x| {
                        let mut s: Vec<usize> = x.iter().copied().filter(|&e| e > 0).collect();
                        s.sort_unstable();
                        s == sorted
                    }),
            )
        }
        Basis::Elementary => from_terms(vectors(vars, lam.first(), 1)),
        Basis::Complete => from_terms(vectors(vars, lam.first(), lam.first())),
        _ => unreachable!("only m, e and h are expanded"),
    }
}

fn expand(basis: Basis, lam: &Partition, vars: usize, max_degree: usize) -> Poly {
    if basis == Basis::Monomial {
        return explicit(basis, lam, vars);
    }
    let mut acc = from_terms([vec![0; vars]]);
    for &part in lam.parts() {
        acc = product(
            &acc,
            &explicit(basis, &Partition::row(part), vars),
            max_degree,
        );
    }
    acc
}

/// `b_λ · b'_μ` by multiplying explicit polynomials in `D` variables and
/// reading off the coefficient of `x^ν` for each partition `ν`.
pub fn brute_force_product(
    left: (Basis, &Partition),
    right: (Basis, &Partition),
    trunc: TruncationProfile,
) -> SymFunc {
    let vars = trunc.num_vars();
    let d = trunc.max_degree();
    let p = product(
        &expand(left.0, left.1, vars, d),
        &expand(right.0, right.1, vars, d),
        d,
    );
    let coeffs: Coeffs = p
        .into_iter()
        .filter(|(x, _)| x.windows(2).all(|w| w[0] >= w[1]))
        .map(|(x, c)| (Partition::from_unsorted(x), c))
        .collect();
    SymFunc::from_coeffs(coeffs, trunc)
}

fn random_factor(rng: &mut ChaCha8Rng, size: usize) -> (Basis, Partition) {
    let basis = *[Basis::Monomial, Basis::Elementary, Basis::Complete]
        .choose(rng)
        .unwrap();
    let lam = Partition::all_of_size(size).choose(rng).unwrap().clone();
    (basis, lam)
}

/// `multiply` against [`brute_force_product`] on `pairs` seeded random
/// pairs of `m`/`e`/`h` elements with `D <= 6` variables and degrees.
pub fn plan_arithmetic(seed: u64, pairs: usize) -> Plan {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut plan = Plan::new("arith", &format!("--seed {seed} --pairs {pairs}"));
    for i in 0..pairs {
        let d = rng.gen_range(1..=6);
        let a = rng.gen_range(0..=d);
        let b = rng.gen_range(0..=d - a);
        let (lb, lam) = random_factor(&mut rng, a);
        let (rb, mu) = random_factor(&mut rng, b);
        let trunc = TruncationProfile::degree(d);
        let inputs = format!("#{i} {}[{lam}]*{}[{mu}] D={d}", lb.tag(), rb.tag());
        plan.push(
            Role::Gate,
            inputs,
            "multiply = explicit expansion",
            Some(trunc),
            move || {
                let x = lift(basis_element(lb, &lam, trunc))?;
                let y = lift(basis_element(rb, &mu, trunc))?;
                let fast = lift(x.multiply(&y))?;
                same(&fast, &brute_force_product((lb, &lam), (rb, &mu), trunc))
            },
        );
    }
    plan
}

pub fn verify_arithmetic(seed: u64, pairs: usize) -> Report {
    plan_arithmetic(seed, pairs).run()
}
