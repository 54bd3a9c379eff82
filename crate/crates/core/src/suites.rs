//! Named verification suites and the JSON report they produce.
//!
//! Each suite is a deterministic function of its [`SuiteSpec`]: the seed
//! fixes every random sample and checks are reported sorted by name.

use std::sync::OnceLock;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::composition::{automorphism_table, canonical_variant, Field, Octonion};
use crate::connections::{copy_connection, curvature, reference_connection, verify_connection_laws};
use crate::derivations::{derivation_algebra, lie_diagnostics, stabilizer, verify_derivations, DerBasis};
use crate::error::{AlbertError, Result};
use crate::exact::{MatrixQ, Rational};
use crate::exceptional::action::{generator_rank, group_automorphism_check, hm_stabilizer, layout_table, resolve_layout};
use crate::exceptional::albert::hm_split;
use crate::exceptional::charge::charge_checks;
use crate::exceptional::j42::j42_checks;
use crate::exceptional::{fermion_assign, AlbertElem, Family, QuarkLayout};
use crate::forms::{verify_dga, CalcContext};
use crate::homotopy::{build_k, homotopy_checks, univ_calculus, StarAlgebra};
use crate::jordan::verify::verify_jordan_with;
use crate::jordan::{
    albert_algebra, capacity_estimate, division_algebra, euclidean_check, jspin_recognize, make_hermitian, make_jspin, spectral_resolution,
    verify_power_assoc, AlgebraSC, AlgebraSpec,
};
use crate::modules::{check_module_axioms, extension_check, free_module, module_commutant, pierce_decompose};
use crate::random::{octonion, rational_vector, seeded};
use crate::report::Check;

pub const REPORT_SCHEMA: &str = "albert-report/1";

pub const SUITES: [&str; 10] = [
    "octonion-laws",
    "jordan-laws",
    "spectral",
    "derivation-dims",
    "module-axioms",
    "pierce",
    "dga",
    "connection-laws",
    "exceptional-maps",
    "homotopy",
];

/// Residual bound for floating checks unless overridden.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
/// Group-level automorphism checks go through `exp` and SU(3) sampling.
pub const GROUP_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteSpec {
    pub suite: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraSpec>,
}

impl SuiteSpec {
    pub fn new(suite: impl Into<String>) -> Self {
        Self { suite: suite.into(), trials: None, seed: 0, tolerance: None, algebra: None }
    }

    fn trials_or(&self, default: usize) -> usize {
        self.trials.unwrap_or(default)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub engine_version: String,
    pub suite: String,
    pub seed: u64,
    pub trials: Option<usize>,
    pub passed: bool,
    /// Sorted by name.
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub data: Value,
    /// Wall time; the only field that differs between identical runs.
    pub elapsed_ms: u128,
}

impl Report {
    pub fn new(spec: &SuiteSpec, mut checks: Vec<Check>, data: Value, elapsed_ms: u128) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        Self {
            schema: REPORT_SCHEMA.into(),
            engine_version: env!("CARGO_PKG_VERSION").into(),
            suite: spec.suite.clone(),
            seed: spec.seed,
            trials: spec.trials,
            passed: checks.iter().all(|c| c.passed),
            checks,
            data,
            elapsed_ms,
        }
    }

    /// The report with timing zeroed, for determinism comparisons.
    pub fn without_timing(&self) -> Self {
        Self { elapsed_ms: 0, ..self.clone() }
    }
}

/// Checks plus structured data (tables, dimensions) for one suite.
pub struct Outcome {
    pub checks: Vec<Check>,
    pub data: Value,
}

impl From<Vec<Check>> for Outcome {
    fn from(checks: Vec<Check>) -> Self {
        Self { checks, data: Value::Null }
    }
}

pub fn run_suite(spec: &SuiteSpec) -> Result<Report> {
    let start = Instant::now();
    let custom = spec.algebra.as_ref().map(AlgebraSpec::build).transpose()?;
    let seed = spec.seed;
    let tol = spec.tolerance.unwrap_or(DEFAULT_TOLERANCE);
    let out: Outcome = match spec.suite.as_str() {
        "octonion-laws" => octonion_laws(spec.trials_or(500), seed).into(),
        "jordan-laws" => match &custom {
            Some(a) => jordan_laws_for(a, spec.trials_or(5), seed)?.into(),
            None => jordan_program(spec.trials_or(5), seed)?,
        },
        "spectral" => spectral_suite(custom.as_ref(), spec.trials_or(100), seed, tol)?.into(),
        "derivation-dims" => {
            let mut o = derivation_dims()?;
            o.checks.extend(stabilizer_checks()?);
            o
        }
        "module-axioms" => module_suite(spec.trials_or(20), seed)?.into(),
        "pierce" => pierce_suite()?.into(),
        "dga" => dga_suite(spec.trials_or(200), seed)?.into(),
        "connection-laws" => connection_suite(spec.trials_or(100), seed)?.into(),
        "exceptional-maps" => exceptional_suite(spec.trials_or(100), seed, spec.tolerance.unwrap_or(GROUP_TOLERANCE))?,
        "homotopy" => homotopy_suite(spec.trials_or(50), seed)?.into(),
        other => return Err(AlbertError::InvalidInput(format!("unknown suite '{other}'; expected one of {}", SUITES.join(", ")))),
    };
    Ok(Report::new(spec, out.checks, out.data, start.elapsed().as_millis()))
}

/// `Der(J⁸₃)`, computed once per process.
pub fn f4() -> &'static DerBasis {
    static F4: OnceLock<DerBasis> = OnceLock::new();
    F4.get_or_init(|| derivation_algebra(&albert_algebra()).expect("nullspace of the Leibniz system"))
}

/// The pointwise stabilizer of the `H₃(ℂ)` part of `J⁸₃`, an `su(3)`.
pub fn albert_su3() -> Result<DerBasis> {
    stabilizer(f4(), &hm_split().0, &[])
}

fn named(name: &str, cases: usize, w: Option<String>) -> Check {
    Check::from_witness(name, cases, w)
}

/// Norm multiplicativity, alternativity, unit and conjugation laws on
/// `trials` random exact octonions, plus a nonassociativity witness.
pub fn octonion_laws(trials: usize, seed: u64) -> Vec<Check> {
    let mut rng = seeded(seed);
    let samples: Vec<(Octonion, Octonion)> = (0..trials).map(|_| (octonion(&mut rng), octonion(&mut rng))).collect();
    let find = |f: &dyn Fn(&Octonion, &Octonion) -> bool| samples.iter().position(|(a, b)| !f(a, b)).map(|t| format!("sample {t}"));
    let one = Octonion::one();
    let mut out = vec![
        named("norm-multiplicative", trials, find(&|a, b| a.mul(b).norm_sqr() == &a.norm_sqr() * &b.norm_sqr())),
        named("left-alternative", trials, find(&|a, b| Octonion::associator(a, a, b).is_zero())),
        named("right-alternative", trials, find(&|a, b| Octonion::associator(a, b, b).is_zero())),
        named("flexible", trials, find(&|a, b| Octonion::associator(a, b, a).is_zero())),
        named("unit", trials, find(&|a, _| one.mul(a) == *a && a.mul(&one) == *a)),
        named("conjugation-reverses-products", trials, find(&|a, b| a.mul(b).conj() == b.conj().mul(&a.conj()))),
    ];
    let witness = (0..8)
        .flat_map(|i| (0..8).flat_map(move |j| (0..8).map(move |k| (i, j, k))))
        .find(|&(i, j, k)| !Octonion::associator(&Octonion::basis(i), &Octonion::basis(j), &Octonion::basis(k)).is_zero());
    out.push(match witness {
        Some((i, j, k)) => Check::pass("nonassociative", 512).with_note(format!("(e{i} e{j}) e{k} ≠ e{i} (e{j} e{k})")),
        None => Check::fail("nonassociative", 512, "every basis triple associates"),
    });
    out
}

/// Every constructor from the classification theorem.
pub fn classification_algebras() -> Result<Vec<AlgebraSC>> {
    let mut out = vec![make_hermitian(Field::Real, 1)?];
    for field in [Field::Real, Field::Complex, Field::Quaternion] {
        for n in 2..=4 {
            out.push(make_hermitian(field, n)?);
        }
    }
    out.push(albert_algebra());
    for n in [2, 3, 5, 9] {
        out.push(make_jspin(n)?);
    }
    Ok(out)
}

/// Linearized Jordan identity, power associativity to degree 6 and exact
/// trace-form positivity for one algebra.
pub fn jordan_laws_for(a: &AlgebraSC, trials: usize, seed: u64) -> Result<Vec<Check>> {
    let mut out = verify_jordan_with(a, trials, seed, 64);
    out.push(verify_power_assoc(a, 6, trials.min(5), seed ^ 0x5a));
    let pos = euclidean_check(a)?;
    out.push(named("trace-form-positive", 1, (!pos).then(|| "trace form is not positive definite".to_string())));
    Ok(out.into_iter().map(|c| c.prefixed(a.name())).collect())
}

/// The full Jordan program: laws for every constructor, the coincidences
/// `H₂(K) ≅ JSpin` with explicit isomorphisms, and the capacity table over
/// 20 seeds.
pub fn jordan_program(trials: usize, seed: u64) -> Result<Outcome> {
    let mut checks = Vec::new();
    for a in classification_algebras()? {
        checks.extend(jordan_laws_for(&a, trials, seed)?);
    }
    let mut coincidences = Vec::new();
    for (field, n) in [(Field::Real, 2), (Field::Complex, 3), (Field::Quaternion, 5), (Field::Octonion, 9)] {
        let h2 = make_hermitian(field, 2)?;
        let got = jspin_recognize(&h2);
        let w = match &got {
            Some(r) if r.n == n => None,
            Some(r) => Some(format!("recognized JSpin_{}", r.n)),
            None => Some("not a spin factor".into()),
        };
        checks.push(named(&format!("coincidence/H2({})=JSpin{n}", field.symbol()), 1, w));
        coincidences.push(json!({"algebra": h2.name(), "jspin": got.map(|r| r.n)}));
    }
    let table: Vec<(AlgebraSC, usize)> = vec![
        (make_hermitian(Field::Real, 1)?, 1),
        (make_jspin(4)?, 2),
        (make_jspin(7)?, 2),
        (make_hermitian(Field::Real, 3)?, 3),
        (make_hermitian(Field::Complex, 3)?, 3),
        (albert_algebra(), 3),
        (make_hermitian(Field::Real, 4)?, 4),
        (make_hermitian(Field::Complex, 5)?, 5),
    ];
    let mut capacities = Vec::new();
    for (a, expected) in &table {
        let seen = (0..20).map(|s| capacity_estimate(a, 1, seed + s)).collect::<Result<Vec<_>>>()?;
        let best = seen.iter().copied().max().unwrap_or(0);
        checks.push(named(&format!("capacity/{}", a.name()), 20, (best != *expected).then(|| format!("observed {best}, expected {expected}"))));
        capacities.push(json!({"algebra": a.name(), "capacity": best}));
    }
    Ok(Outcome { checks, data: json!({"coincidences": coincidences, "capacities": capacities}) })
}

/// Spectral resolutions of random elements: residuals, exact unit sum and,
/// for `J⁸₃`, the generic cardinality 3.
pub fn spectral_suite(algebra: Option<&AlgebraSC>, trials: usize, seed: u64, tol: f64) -> Result<Vec<Check>> {
    let albert = albert_algebra();
    let a = algebra.unwrap_or(&albert);
    let generic = algebra.is_none().then_some(3);
    let mut rng = seeded(seed);
    let (mut worst, mut unit_fail, mut card_fail) = (0.0f64, None, None);
    for t in 0..trials {
        let x = rational_vector(&mut rng, a.dim());
        let s = spectral_resolution(a, &x)?;
        worst = worst.max(s.max_residual());
        if unit_fail.is_none() && !s.residuals.unit_sum_exact {
            unit_fail = Some(format!("sample {t}"));
        }
        if let Some(c) = generic {
            if card_fail.is_none() && s.card() != c {
                card_fail = Some(format!("sample {t}: card {}", s.card()));
            }
        }
    }
    let mut out = vec![Check::residual("residuals", trials, worst, tol), named("unit-sum-exact", trials, unit_fail)];
    if generic.is_some() {
        out.push(named("generic-card", trials, card_fail));
    }
    let unit = spectral_resolution(a, a.require_unit()?)?;
    out.push(named("unit-single-term", 1, (unit.card() != 1).then(|| format!("{} terms", unit.card()))));
    Ok(out.into_iter().map(|c| c.prefixed(a.name())).collect())
}

/// `dim Der` for the exceptional and classical families, from the exact
/// nullspace of the Leibniz system.
pub fn derivation_dims() -> Result<Outcome> {
    let mut rows: Vec<(AlgebraSC, usize)> = vec![
        (division_algebra(Field::Octonion), 14),
        (make_hermitian(Field::Real, 3)?, 3),
        (make_hermitian(Field::Complex, 3)?, 8),
        (make_hermitian(Field::Quaternion, 3)?, 21),
    ];
    for n in 2..=9 {
        rows.push((make_jspin(n)?, n * (n - 1) / 2));
    }
    let mut checks = Vec::new();
    let mut table = serde_json::Map::new();
    let mut record = |name: &str, d: usize, expected: usize, ok: bool| {
        checks.push(named(&format!("der-dim/{name}"), 1, (d != expected || !ok).then(|| format!("dimension {d}, expected {expected}"))));
        table.insert(name.to_string(), json!(d));
    };
    let f = f4();
    record("J8_3", f.dim(), 52, verify_derivations(&albert_algebra(), f).passed);
    for (a, expected) in &rows {
        let d = derivation_algebra(a)?;
        record(a.name(), d.dim(), *expected, verify_derivations(a, &d).passed);
    }
    Ok(Outcome { checks, data: Value::Object(table) })
}

/// The `su(3)` stabilizer of an imaginary unit in `Der(𝕆)` and the
/// 16-dimensional stabilizer of the `ℂ ⊕ ℂ³` split in `Der(J⁸₃)`, with the
/// infinitesimal action spanning it.
pub fn stabilizer_checks() -> Result<Vec<Check>> {
    let o = division_algebra(Field::Octonion);
    let g2 = derivation_algebra(&o)?;
    let su3 = stabilizer(&g2, &[o.basis(1)], &[])?;
    let diag = lie_diagnostics(&su3)?;
    let mut out = vec![named(
        "stabilizer/octonion-imaginary-unit",
        1,
        (su3.dim() != 8 || !diag.semisimple || !diag.compact).then(|| format!("dim {}, semisimple {}, compact {}", su3.dim(), diag.semisimple, diag.compact)),
    )];
    let albert = albert_algebra();
    let (h, m) = hm_split();
    let stab = stabilizer(f4(), &[], &[h, m])?;
    out.push(named("stabilizer/albert-hm-split", 1, (stab.dim() != 16).then(|| format!("dim {}", stab.dim()))));
    let layout = resolve_layout(&albert);
    let gens = crate::exceptional::action::acg_generators(layout.unwrap_or(QuarkLayout::Columns));
    let rank = generator_rank(&gens);
    let inside = gens.iter().all(|g| stab.coordinates(g).is_some());
    out.push(named(
        "stabilizer/acg-spans",
        gens.len(),
        (layout.is_none() || rank != 16 || !inside).then(|| format!("layout {layout:?}, rank {rank}, contained {inside}")),
    ));
    Ok(out)
}

/// Module axioms and split-null extensions of free modules, plus the
/// commutant dimension `k²` of `J⁸₃ ⊗ ℝᵏ`.
pub fn module_suite(trials: usize, seed: u64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let albert = albert_algebra();
    let cases = [(make_jspin(2)?, 3), (make_hermitian(Field::Real, 3)?, 2), (make_hermitian(Field::Complex, 2)?, 1), (albert.clone(), 2)];
    for (a, k) in &cases {
        let r = free_module(a, *k);
        let tag = format!("{}x{k}", a.name());
        out.extend(check_module_axioms(&r, trials, seed).into_iter().map(|c| c.prefixed(&tag)));
        out.extend(extension_check(&r, trials, seed)?.into_iter().map(|c| c.prefixed(&tag)));
    }
    for k in 1..=3 {
        let c = module_commutant(&free_module(&albert, k));
        out.push(named(&format!("commutant/J8_3x{k}"), 1, (c != k * k).then(|| format!("dimension {c}, expected {}", k * k))));
    }
    Ok(out)
}

/// Pierce decomposition of `J⁸₃` for `E₁₁` and `𝟙 − E₁₁`.
pub fn pierce_suite() -> Result<Vec<Check>> {
    let albert = albert_algebra();
    let r = free_module(&albert, 1);
    let e11 = AlbertElem::e(0).to_coords();
    let unit = albert.require_unit()?.clone();
    let co: Vec<Rational> = unit.iter().zip(&e11).map(|(u, e)| u - e).collect();
    let mut out = Vec::new();
    for (name, p, expected) in [("E11", e11, (10, 16, 1)), ("1-E11", co, (1, 16, 10))] {
        let s = pierce_decompose(&r, &p)?;
        let dims = s.dims();
        let ok = dims == expected && dims.0 + dims.1 + dims.2 == 27;
        out.push(named(&format!("pierce/{name}"), 1, (!ok).then(|| format!("dimensions {dims:?}, expected {expected:?}"))));
    }
    Ok(out)
}

/// The three calculus contexts of degree cap 3.
pub fn dga_contexts() -> Result<Vec<CalcContext>> {
    let h3r = make_hermitian(Field::Real, 3)?;
    let so3 = derivation_algebra(&h3r)?;
    let js4 = make_jspin(4)?;
    let so4 = derivation_algebra(&js4)?;
    Ok(vec![
        CalcContext::new("J8_3/su3", albert_algebra(), albert_su3()?, 3)?,
        CalcContext::new("H3(R)/so3", h3r, so3, 3)?,
        CalcContext::new("JSpin4/so4", js4, so4, 3)?,
    ])
}

pub fn dga_suite(trials: usize, seed: u64) -> Result<Vec<Check>> {
    Ok(dga_contexts()?.iter().flat_map(|ctx| verify_dga(ctx, trials, seed)).collect())
}

/// Connection laws on `J⁸₃ ⊗ ℝ²` over `su(3)` with a curved connection
/// `γ(X_a) = 𝟙 ⊗ E_a`, and flatness of the reference connection.
pub fn connection_suite(trials: usize, seed: u64) -> Result<Vec<Check>> {
    let ctx = CalcContext::new("J8_3/su3", albert_algebra(), albert_su3()?, 3)?;
    let q = |n: i64, d: i64| Rational::new(n, d);
    let e: Vec<MatrixQ> = (0..ctx.p() as i64)
        .map(|k| MatrixQ::from_rows(vec![vec![q(k, 3), q(1, k + 1)], vec![q(-k, 2), q(2 - k, 5)]]).expect("2x2"))
        .collect();
    let c = copy_connection(&ctx, &e)?;
    let mut out = verify_connection_laws(&c, trials, seed);
    let flat = reference_connection(&ctx, 2)?;
    let p = ctx.p();
    let curved = (0..p).flat_map(|a| (0..p).map(move |b| (a, b))).find(|&(a, b)| !curvature(&flat, a, b).is_zero());
    out.push(named("J8_3/su3/reference-flat", p * p, curved.map(|(a, b)| format!("R(X_{a}, X_{b}) ≠ 0"))));
    Ok(out)
}

/// Round trips, the product against `H₃(𝕆)`, the group action, charge
/// conjugation and the quaternionic sector.
pub fn exceptional_suite(trials: usize, seed: u64, tol: f64) -> Result<Outcome> {
    let albert = albert_algebra();
    let mut rng = seeded(seed);
    let mut out = Vec::new();
    let layout = resolve_layout(&albert);
    out.push(named("layout-resolved", 2, layout.is_none().then(|| "no unique quark layout".to_string())));
    let layout = layout.unwrap_or(QuarkLayout::Columns);
    let round = (0..trials).find_map(|t| {
        let v = rational_vector(&mut rng, 27);
        let x = AlbertElem::from_coords(&v);
        let back = AlbertElem::from_pair(&x.to_pair(layout), layout).to_coords();
        (back != v).then(|| format!("sample {t}"))
    });
    out.push(named("pair-round-trip", trials, round));
    let product = (0..27).flat_map(|i| (0..27).map(move |j| (i, j))).find(|&(i, j)| {
        let (a, b) = (albert.basis(i), albert.basis(j));
        AlbertElem::from_coords(&a).product(&AlbertElem::from_coords(&b)).to_coords() != albert.mul(&a, &b)
    });
    out.push(named("albert-product-constants", 729, product.map(|(i, j)| format!("basis pair ({i}, {j})"))));
    out.push(group_automorphism_check(&albert, layout, trials, seed, tol));
    let table = automorphism_table();
    let passing = table.iter().filter(|r| r.passes).count();
    out.push(named("charge-variant-unique", table.len(), (passing != 1 || canonical_variant().is_none()).then(|| format!("{passing} variants pass"))));
    out.extend(charge_checks(&albert));
    out.extend(j42_checks()?);
    let slots: usize = [Family::Up, Family::Down].iter().map(|&f| fermion_assign(f).iter().map(|s| s.coordinates.len()).sum::<usize>()).sum();
    out.push(named("fermion-slots-tile", 54, (slots != 54).then(|| format!("{slots} coordinates"))));
    let data = json!({
        "charge_variants": table,
        "layouts": layout_table(&albert),
        "hm_stabilizer_dim": hm_stabilizer(&albert)?.dim(),
    });
    Ok(Outcome { checks: out, data })
}

/// Universal calculi of `ℂ ⊕ ℂ` and `M₂(ℂ)` truncated at degree 3.
pub fn homotopy_suite(trials: usize, seed: u64) -> Result<Vec<Check>> {
    let one = Rational::one;
    let cases = [(StarAlgebra::complex_pair(), vec![one(), one()]), (StarAlgebra::matrices2(), vec![one(), Rational::zero(), Rational::zero(), Rational::zero()])];
    let mut out = Vec::new();
    for (a, omega) in cases {
        let ctx = univ_calculus(a, 3, omega)?;
        out.extend(homotopy_checks(&ctx, &build_k(&ctx), trials, seed));
    }
    Ok(out)
}
