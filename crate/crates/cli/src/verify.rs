//! Seeded property suites. Every random choice comes from one `ChaCha8Rng`, so a seed fixes
//! the output byte for byte.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use picard3::clifford::{
    gram_b, phi_rep, CliffordAlgebra, CliffordElement, EvenCliffordElement, GramParams, OddCliffordElement,
};
use picard3::exterior::{eta_matrix, mu_matrix, mu_tilde_in, p_bases, restrict};
use picard3::isometry::{clifford_lift, even_units, h_alpha, odd_units, phi_alpha, CliffordUnit};
use picard3::{Rat, RatMatrix};

use crate::Suite;

/// Families for the unit round trip; `(2,3)` has signature `(2,1)`, the rest `(1,2)`.
pub const THEOREM_FAMILIES: [(i64, i64); 5] = [(1, -1), (2, -2), (3, -3), (2, 3), (5, -7)];

#[derive(Debug, Serialize)]
pub struct SuiteResult {
    pub suite: &'static str,
    pub passed: u32,
    pub failed: u32,
    pub failures: Vec<String>,
}

pub fn run(suite: Suite, trials: u32, seed: u64, gram_bound: i64) -> Vec<SuiteResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    if matches!(suite, Suite::Clifford | Suite::All) {
        out.push(run_suite("clifford", trials, |i| {
            clifford_trial(&mut rng, gram_bound).map_err(|e| format!("trial {i}: {e}"))
        }));
    }
    if matches!(suite, Suite::Exterior | Suite::All) {
        out.push(run_suite("exterior", trials, |i| {
            exterior_trial(&mut rng, gram_bound).map_err(|e| format!("trial {i}: {e}"))
        }));
    }
    if matches!(suite, Suite::Theorem | Suite::All) {
        let pools = unit_pools();
        out.push(run_suite("theorem", trials, |i| {
            theorem_trial(&mut rng, &pools).map_err(|e| format!("trial {i}: {e}"))
        }));
    }
    out
}

fn run_suite(name: &'static str, trials: u32, mut trial: impl FnMut(u32) -> Result<(), String>) -> SuiteResult {
    let mut r = SuiteResult { suite: name, passed: 0, failed: 0, failures: Vec::new() };
    for i in 0..trials {
        match trial(i) {
            Ok(()) => r.passed += 1,
            Err(e) => {
                r.failed += 1;
                r.failures.push(e);
            }
        }
    }
    r
}

fn check(ok: bool, what: &str, p: &GramParams) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(format!("{what} fails for {p}"))
    }
}

/// Uniform parameters in `[−bound, bound]⁶`, redrawn until the lattice is non-degenerate.
pub fn random_params(rng: &mut impl Rng, bound: i64) -> GramParams {
    loop {
        let mut d = || rng.gen_range(-bound..=bound);
        if let Ok(p) = GramParams::new(d(), d(), d(), d(), d(), d()) {
            return p;
        }
    }
}

fn random_even(rng: &mut impl Rng) -> EvenCliffordElement {
    EvenCliffordElement::from_i64(std::array::from_fn(|_| rng.gen_range(-5..=5)))
}

fn random_odd(rng: &mut impl Rng) -> OddCliffordElement {
    OddCliffordElement::new(std::array::from_fn(|_| Rat::from_integer(rng.gen_range(-5i64..=5).into())))
}

fn clifford_trial(rng: &mut impl Rng, bound: i64) -> Result<(), String> {
    let p = random_params(rng, bound);
    let alg = CliffordAlgebra::new(p);
    let e = alg.element_e();
    let commutes = (0..8).all(|m| {
        let b = CliffordElement::basis(m);
        alg.mul(&e, &b) == alg.mul(&b, &e)
    });
    check(commutes, "E central", &p)?;
    check(alg.reversal(&e) == -&e, "E* = −E", &p)?;
    check(alg.mul(&e, &e) == CliffordElement::scalar(-p.d0()), "E² = −D₀", &p)?;
    check(gram_b(&p).det() == p.d0() * p.d0(), "det Q_B = D₀²", &p)?;
    for _ in 0..10 {
        let (x, y) = (random_even(rng), random_even(rng));
        let xy = alg.to_even(&alg.mul(&alg.even(&x), &alg.even(&y))).map_err(|e| e.to_string())?;
        check(phi_rep(&xy, &p) == &phi_rep(&x, &p) * &phi_rep(&y, &p), "Φ(xy) = Φ(x)Φ(y)", &p)?;
        let nr = alg.norm(&alg.even(&x)).map_err(|e| e.to_string())?;
        check(&nr * &nr == phi_rep(&x, &p).det(), "Nr(x)² = det Φ(x)", &p)?;
    }
    Ok(())
}

fn exterior_trial(rng: &mut impl Rng, bound: i64) -> Result<(), String> {
    let p = random_params(rng, bound);
    let alg = CliffordAlgebra::new(p);
    let pb = p_bases(&p).map_err(|e| format!("{e} for {p}"))?;
    let (plus, minus) = (pb.plus_matrix(), pb.minus_matrix());
    let one = EvenCliffordElement::one();
    let scalar = |q: &Rat| RatMatrix::identity(3).scale(q);
    let x = random_even(rng);
    let nr = alg.norm(&alg.even(&x)).map_err(|e| e.to_string())?;
    check(restrict(&mu_matrix(&x, &one, &p), &plus) == Some(scalar(&nr)), "μ(x,1)|P⁺ = Nr(x)·id", &p)?;
    check(restrict(&mu_matrix(&one, &x, &p), &minus) == Some(scalar(&nr)), "μ(1,x)|P⁻ = Nr(x)·id", &p)?;
    let y = loop {
        let y = alg.odd(&random_odd(rng));
        if alg.norm(&y).is_ok_and(|n| n != Rat::from_integer(0.into())) {
            break y;
        }
    };
    let ny = alg.norm(&y).map_err(|e| e.to_string())?;
    let mt = mu_tilde_in(&alg, &y).map_err(|e| e.to_string())?;
    check(restrict(&mt, &minus) == Some(scalar(&-ny.clone())), "μ̃(x)|P⁻ = −Nx·id", &p)?;
    let eta = eta_matrix(&alg, &y).map_err(|e| e.to_string())?;
    check(restrict(&mt, &plus) == Some(eta.scale(&-ny)), "μ̃(x)|P⁺ = −Nx·η_x", &p)?;
    Ok(())
}

type Pools = BTreeMap<(i64, i64), (CliffordAlgebra, Vec<CliffordUnit>)>;

fn unit_pools() -> Pools {
    THEOREM_FAMILIES
        .iter()
        .map(|&(k, l)| {
            let alg = CliffordAlgebra::new(GramParams::family(k, l).expect("nonzero parameters"));
            let mut units = even_units(&alg, k, l, 4).expect("searchable family");
            units.extend(odd_units(&alg, k, l, 2).expect("searchable family"));
            ((k, l), (alg, units))
        })
        .collect()
}

/// A product of one to three pool units.
pub fn random_unit(rng: &mut impl Rng, alg: &CliffordAlgebra, pool: &[CliffordUnit]) -> CliffordUnit {
    let len = rng.gen_range(1..=3);
    let mut u = pool[rng.gen_range(0..pool.len())].clone();
    for _ in 1..len {
        u = u.mul(alg, &pool[rng.gen_range(0..pool.len())]);
    }
    u
}

fn theorem_trial(rng: &mut impl Rng, pools: &Pools) -> Result<(), String> {
    let (k, l) = THEOREM_FAMILIES[rng.gen_range(0..THEOREM_FAMILIES.len())];
    let (alg, pool) = &pools[&(k, l)];
    let u = random_unit(rng, alg, pool);
    let p = alg.params();
    let h = h_alpha(alg, &u).map_err(|e| format!("h_α: {e} for {p}"))?;
    check(h.in_kernel(), "h_α ∈ O_Γ(L)", p)?;
    check(h.det() == u.epsilon(), "det h_α = ε_α", p)?;
    let lift = clifford_lift(&h).map_err(|e| e.to_string())?;
    let back = lift.into_unit(alg).map_err(|e| e.to_string())?;
    check(back.same_class(&u), "clifford_lift(h_α) = ±α", p)?;
    let phi = phi_alpha(alg, &u).map_err(|e| e.to_string())?;
    check(phi.det() == u.norm(), "det φ_α = Nα", p)?;
    if l < 0 {
        check(phi.cone() == Some(true), "φ_α preserves the positive cone", p)?;
    }
    Ok(())
}
