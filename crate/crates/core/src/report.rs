//! Automorphism-group reports for `U(k) ⊕ ⟨2l⟩` and Salem data of its elements.
//!
//! For `l < 0` with no roots, `Aut(X) ≅ O_Γ(L)` is read off `B_{k,l}^×/{±1}`, plus the odd
//! coset `V` when `kxz + ly² = ±1` is solvable. An element `α` with `det α = 1` is symplectic.
//! For `M_n = U(n) ⊕ ⟨−2n⟩` the group is `G_n` and the report adds congruence data.
//!
//! Torsion-freeness is never asserted as a theorem: an empty bounded search is reported as
//! evidence with its bound.

use std::fmt::{self, Write as _};

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;
use thiserror::Error;

use crate::arith::Int;
use crate::clifford::{CliffordAlgebra, GramParams};
use crate::isometry::{
    clifford_lift, even_from_b_kl, h_alpha, p_alpha_matrix, unit_search_even, v_set_search, CliffordUnit, Grade,
    IsometryError,
};
use crate::json::{matrix_to_json, JsonInt};
use crate::lattice::{represents, Lattice, LatticeError};
use crate::modular::{
    delta_n, free_rank, index_pi_g_n, member_search, prime_power_presentation, qr_minus_one, scalar_witness_det,
    torsion_search, ModularElement, ModularError, Presentation, SubgroupSpec,
};

pub const SCHEMA: &str = "picard3-aut/1";
pub const DEFAULT_SEARCH_BOUND: i64 = 20;
/// Number of sample automorphisms attached to a report.
pub const SAMPLE_COUNT: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReportError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Isometry(#[from] IsometryError),
    #[error(transparent)]
    Modular(#[from] ModularError),
    #[error("search bound must be positive, got {0}")]
    BadBound(i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyParams {
    pub k: i64,
    pub l: i64,
    pub n: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupModel {
    pub description: String,
    pub v_coset: bool,
    /// A solution `(x₁,x₂,x₃,x₄)` of the odd norm equation within the search bound.
    pub v_witness: Option<[i64; 4]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionEvidence {
    pub bound: i64,
    pub found: Vec<ModularElement>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceReport {
    pub subgroup: SubgroupSpec,
    #[serde(rename = "index_in_Pi")]
    pub index_in_pi: u64,
    pub delta_n: u64,
    pub torsion_bounded_search: TorsionEvidence,
    /// `"torsion exhibited"` or `"bounded evidence (bound B)"`.
    pub torsion_free: String,
    pub free_rank: Option<u64>,
    pub presentation: Option<Presentation>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Sample {
    pub alpha: ModularElement,
    pub symplectic: bool,
    pub p_alpha: Vec<Vec<JsonInt>>,
    pub isometry: bool,
    /// `P_α` acts on `A(L)` as this sign times the identity.
    pub discriminant_sign: i64,
    pub h_in_kernel: bool,
    pub cone_preserving: bool,
    pub lift_roundtrip: bool,
    pub salem: SalemDatum,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub search: i64,
    pub samples: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AutReport {
    pub schema: &'static str,
    pub lattice: FamilyParams,
    pub gram: Vec<Vec<JsonInt>>,
    pub signature: [usize; 2],
    pub root_free: bool,
    pub discriminant_two_elementary: bool,
    pub hypotheses_met: bool,
    /// Failed hypotheses, empty when `hypotheses_met`.
    pub hypotheses: Vec<String>,
    pub group_model: GroupModel,
    pub congruence: Option<CongruenceReport>,
    pub antisymplectic_exists: bool,
    /// Order of the image of `Aut(X)` in `GL(H^{2,0})`.
    pub m: u8,
    pub samples: Vec<Sample>,
    pub bounds: Bounds,
}

/// Symplectic exactly when `det α = 1`.
pub fn symplectic_split(alpha: &ModularElement) -> bool {
    alpha.det() == 1
}

/// Anti-symplectic elements exist iff `B_{k,l}^×` has a determinant `−1` element (`−1` a
/// square mod `k`) or the odd coset contains a norm `+1` element.
pub fn antisymplectic_exists(k: i64, l: i64) -> bool {
    qr_minus_one(k.unsigned_abs()) || represents(k, l, 1)
}

pub fn analyze_picard(k: i64, l: i64, bound: i64) -> Result<AutReport, ReportError> {
    if bound < 1 {
        return Err(ReportError::BadBound(bound));
    }
    let lattice = Lattice::family(k, l)?;
    let (sp, sm) = lattice.signature();
    let root_free = !represents(k, l, -1);
    let two_elementary = lattice.discriminant_group().is_two_elementary();
    let mut hypotheses = Vec::new();
    if (sp, sm) != (1, 2) {
        hypotheses.push(format!("signature is ({sp},{sm}), not (1,2)"));
    }
    if !root_free {
        hypotheses.push("lattice represents −2".to_string());
    }
    if two_elementary {
        hypotheses.push("discriminant group is 2-elementary".to_string());
    }
    let n = (k >= 1 && l == -k).then_some(k);
    let v_coset = represents(k, l, 1) || represents(k, l, -1);
    let group_model = GroupModel {
        description: group_description(k, l, n, v_coset),
        v_coset,
        v_witness: v_set_search(k, l, bound.min(DEFAULT_SEARCH_BOUND)).into_iter().next(),
    };
    let congruence = n.map(|n| congruence_report(n, bound)).transpose()?;
    let anti = antisymplectic_exists(k, l);
    let samples = samples(k, l, bound, &lattice)?;
    Ok(AutReport {
        schema: SCHEMA,
        lattice: FamilyParams { k, l, n },
        gram: matrix_to_json(lattice.gram()),
        signature: [sp, sm],
        root_free,
        discriminant_two_elementary: two_elementary,
        hypotheses_met: hypotheses.is_empty(),
        hypotheses,
        group_model,
        congruence,
        antisymplectic_exists: anti,
        m: 1 + u8::from(anti),
        samples,
        bounds: Bounds { search: bound, samples: SAMPLE_COUNT },
    })
}

fn group_description(k: i64, l: i64, n: Option<i64>, v_coset: bool) -> String {
    let base = if v_coset {
        format!("O_Γ(L) ≅ (B_{{{k},{l}}}^× ⊔ V)/{{±1}}")
    } else {
        format!("O_Γ(L) = SO_Γ(L) ≅ B_{{{k},{l}}}^×/{{±1}}")
    };
    match n {
        Some(n) => format!("{base} = G_{n}"),
        None => base,
    }
}

/// Congruence data of `G_n`.
pub fn congruence_report(n: i64, bound: i64) -> Result<CongruenceReport, ReportError> {
    if n < 1 {
        return Err(ModularError::BadParameter(format!("n = {n}; must be positive")).into());
    }
    if bound < 1 {
        return Err(ReportError::BadBound(bound));
    }
    let subgroup = SubgroupSpec::GN { n };
    let nu = n.unsigned_abs();
    let index = index_pi_g_n(nu);
    let found = torsion_search(&subgroup, bound)?;
    let (torsion_free, rank) = if found.is_empty() {
        (format!("bounded evidence (bound {bound})"), free_rank(index).ok())
    } else {
        ("torsion exhibited".to_string(), None)
    };
    Ok(CongruenceReport {
        subgroup,
        index_in_pi: index,
        delta_n: delta_n(nu),
        torsion_bounded_search: TorsionEvidence { bound, found },
        torsion_free,
        free_rank: rank,
        presentation: prime_power_presentation(nu),
    })
}

fn samples(k: i64, l: i64, bound: i64, lattice: &Lattice) -> Result<Vec<Sample>, ReportError> {
    let alg = CliffordAlgebra::new(GramParams::family(k, l).map_err(IsometryError::from)?);
    let mut units: Vec<ModularElement> =
        unit_search_even(k, l, bound)?.into_iter().filter(|a| !a.is_identity()).collect();
    // Hyperbolic elements (A > 2) first, then by entry size.
    units.sort_by_key(|a| (!salem_poly(a).is_salem, a.entries().iter().map(Signed::abs).max(), a.clone()));
    // One anti-symplectic element first when available, so the sample shows both kinds.
    if let Some(pos) = units.iter().position(|a| a.det() == -1) {
        let a = units.remove(pos);
        units.insert(0, a);
    }
    units.truncate(SAMPLE_COUNT);
    units.iter().map(|a| sample(&alg, lattice, a, k, l)).collect()
}

fn sample(
    alg: &CliffordAlgebra,
    lattice: &Lattice,
    alpha: &ModularElement,
    k: i64,
    l: i64,
) -> Result<Sample, ReportError> {
    let p = p_alpha_matrix(alpha, k, l)?;
    let unit = CliffordUnit::new(alg, Grade::Even, even_from_b_kl(alpha, k, l)?)?;
    let h = h_alpha(alg, &unit)?;
    let lift = clifford_lift(&h)?;
    let sign = alpha.det();
    let shifted = p.matrix() - &crate::matrix::IntMatrix::identity(3).scale(&Int::from(sign));
    let acts_as_sign = (&shifted.to_rat() * &lattice.gram_inverse()).is_integral();
    Ok(Sample {
        alpha: alpha.clone(),
        symplectic: symplectic_split(alpha),
        p_alpha: matrix_to_json(p.matrix()),
        isometry: lattice.is_isometry(p.matrix()),
        discriminant_sign: if acts_as_sign { sign } else { 0 },
        h_in_kernel: h.in_kernel(),
        cone_preserving: p.cone().unwrap_or(false),
        lift_roundtrip: lift.grade == Grade::Even
            && (&lift.coords == unit.coords() || lift.coords.iter().zip(unit.coords()).all(|(a, b)| a == &-b)),
        salem: salem_poly(alpha),
    })
}

/// `(t − Nr α)(t² − A·t + 1)` with `A = Tr(α)² − 2·Nr(α)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SalemDatum {
    pub alpha: ModularElement,
    pub nr: i64,
    pub trace: JsonInt,
    #[serde(rename = "A")]
    pub a: JsonInt,
    /// Coefficients of the cubic from the constant term up.
    pub char_poly: Vec<JsonInt>,
    pub factorization: String,
    pub is_salem: bool,
    pub symplectic: bool,
    /// Largest `|λ|` over the roots of the quadratic factor.
    pub spectral_radius: f64,
}

pub fn salem_poly(alpha: &ModularElement) -> SalemDatum {
    // The trace is defined up to the sign of the class; A only sees its square.
    let nr = alpha.det();
    let tr = alpha.trace();
    let a = &tr * &tr - Int::from(2 * nr);
    let n = Int::from(nr);
    let char_poly = vec![-&n, Int::from(1) + &a * &n, -(&a + &n), Int::from(1)];
    let af = a.to_f64().unwrap_or(f64::INFINITY);
    let spectral_radius = if af.abs() > 2.0 { (af.abs() + (af * af - 4.0).sqrt()) / 2.0 } else { 1.0 };
    SalemDatum {
        alpha: alpha.clone(),
        nr,
        trace: JsonInt(tr),
        factorization: format!("(t {} {})(t² − {}t + 1)", if nr < 0 { "+" } else { "−" }, nr.abs(), a),
        is_salem: a > Int::from(2),
        a: JsonInt(a),
        char_poly: char_poly.into_iter().map(JsonInt).collect(),
        symplectic: symplectic_split(alpha),
        spectral_radius,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WehlerRow {
    pub n: i64,
    pub symplectic: ModularElement,
    pub symplectic_a: JsonInt,
    pub antisymplectic: ModularElement,
    pub antisymplectic_a: JsonInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WehlerTable {
    pub units_checked: usize,
    pub bound: i64,
    /// Units of `Π(2)` breaking `Tr ≡ 2 mod 4` (det 1) or `Tr ≡ 0 mod 4` (det −1).
    pub violations: Vec<ModularElement>,
    pub rows: Vec<WehlerRow>,
}

/// The trace law on `Π(2)` by bounded search, and `A` for `[[1,2],[2n,4n±1]]`, `n ≤ n_max`.
pub fn wehler_trace_classes(n_max: i64, bound: i64) -> Result<WehlerTable, ReportError> {
    let units = member_search(&SubgroupSpec::PiN { n: 2 }, bound)?;
    let violations = units
        .iter()
        .filter(|a| {
            let r = a.trace().mod_floor(&Int::from(4));
            r != Int::from(if a.det() == 1 { 2 } else { 0 })
        })
        .cloned()
        .collect();
    let rows = (1..=n_max)
        .map(|n| {
            let s = ModularElement::from_i64(1, 2, 2 * n, 4 * n + 1)?;
            let t = ModularElement::from_i64(1, 2, 2 * n, 4 * n - 1)?;
            Ok(WehlerRow {
                n,
                symplectic_a: salem_poly(&s).a,
                symplectic: s,
                antisymplectic_a: salem_poly(&t).a,
                antisymplectic: t,
            })
        })
        .collect::<Result<_, ModularError>>()?;
    Ok(WehlerTable { units_checked: units.len(), bound, violations, rows })
}

/// A `det = −1` element of `G_n` when one exists, built from `λ² ≡ −1 mod n`.
pub fn antisymplectic_witness(n: i64) -> Option<ModularElement> {
    (0..n.max(1)).find(|&x| (x * x + 1) % n == 0).and_then(|lam| scalar_witness_det(n, lam, -1))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl AutReport {
    /// Human-readable rendering; every number matches the JSON fields.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let FamilyParams { k, l, n } = &self.lattice;
        let _ = writeln!(s, "lattice U({k}) ⊕ ⟨{}⟩{}", 2 * l, n.map(|n| format!(" = M_{n}")).unwrap_or_default());
        let _ = writeln!(s, "signature ({},{})", self.signature[0], self.signature[1]);
        let _ = writeln!(s, "root-free: {}", yes_no(self.root_free));
        let _ = writeln!(s, "2-elementary discriminant: {}", yes_no(self.discriminant_two_elementary));
        if self.hypotheses_met {
            let _ = writeln!(s, "hypotheses: met");
        } else {
            let _ = writeln!(s, "hypotheses not met: {}", self.hypotheses.join("; "));
        }
        let _ = writeln!(s, "group: {}", self.group_model.description);
        let _ = writeln!(s, "V-coset: {}", if self.group_model.v_coset { "present" } else { "absent" });
        if let Some(c) = &self.congruence {
            let _ = writeln!(s, "subgroup: {}", c.subgroup.name());
            let _ = writeln!(s, "index in Π: {}", c.index_in_pi);
            let _ = writeln!(s, "δ_n: {}", c.delta_n);
            let _ = writeln!(s, "torsion: {} ({} found)", c.torsion_free, c.torsion_bounded_search.found.len());
            if let Some(r) = c.free_rank {
                let _ = writeln!(s, "free rank: {r}");
            }
            if let Some(p) = &c.presentation {
                let _ = writeln!(s, "generators: {}", p.text);
            }
        }
        let _ = writeln!(s, "anti-symplectic automorphisms: {}", yes_no(self.antisymplectic_exists));
        let _ = writeln!(s, "m: {}", self.m);
        let _ = writeln!(s, "samples:");
        for x in &self.samples {
            let _ = writeln!(
                s,
                "  {} det {} {} A = {} {}",
                x.alpha,
                x.salem.nr,
                if x.symplectic { "symplectic" } else { "anti-symplectic" },
                x.salem.a.0,
                if x.salem.is_salem { "Salem" } else { "not Salem" },
            );
        }
        let _ = writeln!(s, "bounds: search {}, samples {}", self.bounds.search, self.bounds.samples);
        s
    }
}

impl fmt::Display for SalemDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alpha {}", self.alpha)?;
        writeln!(f, "Nr {}", self.nr)?;
        writeln!(f, "A {}", self.a.0)?;
        writeln!(f, "char poly {}", self.factorization)?;
        writeln!(f, "{}", if self.symplectic { "symplectic" } else { "anti-symplectic" })?;
        writeln!(f, "{}", if self.is_salem { "Salem" } else { "not Salem" })?;
        write!(f, "spectral radius {:.6}", self.spectral_radius)
    }
}

impl CongruenceReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "subgroup: {}", self.subgroup.name());
        let _ = writeln!(s, "index in Π: {}", self.index_in_pi);
        let _ = writeln!(s, "δ_n: {}", self.delta_n);
        let _ = writeln!(s, "torsion: {} ({} found)", self.torsion_free, self.torsion_bounded_search.found.len());
        if let Some(r) = self.free_rank {
            let _ = writeln!(s, "free rank: {r}");
        }
        if let Some(p) = &self.presentation {
            let _ = writeln!(s, "generators: {}", p.text);
        }
        s
    }
}
