//! Verification suites and report types behind the `desmic` binary.

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use clap::ValueEnum;
use desmic_core::algebra::{
    proportional, rat, Cyc8, ExactMatrix, MultiPoly, Rational, Substitution, Var,
};
use desmic_core::desmic::{
    base_locus_lines, catalog_factorization, conjugate_member, conjugate_member_expanded,
    desmic_points, edge_meetings, is_singular_at, macdonald_span, pencil_member, pencil_params_of,
    pullback, reye_incidence, tetrahedra, tetrahedron_stabilizer, weyl_to_s3s3, ConjugateParams,
    PencilParams,
};
use desmic_core::elliptic::{
    half_periods_from_duality, verify_kummer_correspondence, verify_kummer_rational,
    HalfPeriodDifferences,
};
use desmic_core::extalg::{gl6_act, omega_pairing, pencil_trivector, wedge3_apply, Trivector};
use desmic_core::rootsys::{
    build_f4, reflection, reference_generators, short_long_duality, PositivityForm, RootLength,
    RootSystemF4,
};
use desmic_core::sampling::{sample_pencil_points, RationalSampler};
use desmic_core::vinberg::{
    induced_cartan_matrix, klein_character, lifts, moment_map, quartic_q, restricted_quartic,
    sl2_image_group,
};
use desmic_core::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub const FIELD: &str = "Q(zeta_8), exact arbitrary-precision rational coefficients";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub claim: String,
    pub status: Status,
    pub detail: String,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub version: String,
    pub field: String,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl RunReport {
    /// Sorts by id and recounts the summary.
    pub fn new(mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        RunReport {
            version: env!("CARGO_PKG_VERSION").to_string(),
            field: FIELD.to_string(),
            checks,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{} {:<28} {} ({} ms)\n    {}\n",
                c.status, c.id, c.detail, c.elapsed_ms, c.claim
            ));
        }
        out.push_str(&format!(
            "{} passed, {} failed, {} skipped\n",
            self.summary.pass, self.summary.fail, self.summary.skipped
        ));
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Roots,
    Weyl,
    Lifts,
    Quartic,
    Pencil,
    Config,
    Kummer,
}

impl Suite {
    const EACH: [Suite; 7] = [
        Suite::Roots,
        Suite::Weyl,
        Suite::Lifts,
        Suite::Quartic,
        Suite::Pencil,
        Suite::Config,
        Suite::Kummer,
    ];
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub samples: usize,
    pub seed: u64,
    /// Positivity form override; `None` means (1000, 100, 10, 1).
    pub ell: Option<[Rational; 4]>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            samples: 50,
            seed: 0,
            ell: None,
        }
    }
}

/// A check passes with a detail line, fails with a counterexample, or is skipped.
enum Outcome {
    Pass(String),
    Fail(String),
    Skip(String),
}

impl From<Result<String, String>> for Outcome {
    fn from(r: Result<String, String>) -> Self {
        match r {
            Ok(d) => Outcome::Pass(d),
            Err(e) => Outcome::Fail(e),
        }
    }
}

struct Context {
    rs: RootSystemF4,
    custom_ell: bool,
    samples: usize,
    seed: u64,
}

type CheckFn = fn(&Context) -> Outcome;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

/// Builds the root system, rejecting a positivity form that vanishes on a root.
pub fn root_system(opts: &VerifyOptions) -> Result<RootSystemF4, Error> {
    match &opts.ell {
        Some(w) => Ok(RootSystemF4::new(PositivityForm::new(w.clone())?)),
        None => Ok(build_f4()),
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<RunReport, Error> {
    let ctx = Context {
        rs: root_system(opts)?,
        custom_ell: opts.ell.is_some(),
        samples: opts.samples,
        seed: opts.seed,
    };
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        s => vec![s],
    };
    let mut results = Vec::new();
    for s in suites {
        for &(id, claim, run) in checks_of(s) {
            let start = Instant::now();
            let outcome = run(&ctx);
            let elapsed_ms = start.elapsed().as_millis() as u64;
            let (status, detail) = match outcome {
                Outcome::Pass(d) => (Status::Pass, d),
                Outcome::Fail(d) => (Status::Fail, d),
                Outcome::Skip(d) => (Status::Skipped, d),
            };
            results.push(CheckResult {
                id: id.to_string(),
                claim: claim.to_string(),
                status,
                detail,
                elapsed_ms,
            });
        }
    }
    Ok(RunReport::new(results))
}

fn checks_of(suite: Suite) -> &'static [(&'static str, &'static str, CheckFn)] {
    match suite {
        Suite::Roots => &[
            ("roots.counts", "F4 has 24 long and 24 short roots, half of each positive", roots_counts),
            ("roots.simple", "the positive system of ℓ = (1000, 100, 10, 1) has simple roots ε₂−ε₃, ε₃−ε₄, ε₄, ½(ε₁−ε₂−ε₃−ε₄)", roots_simple),
            ("roots.orthogonality", "each root is orthogonal to 3 positive roots of its own length and 6 of the other", roots_orthogonality),
            ("roots.unique_splitting", "the long and the short roots each split in exactly one way into three groups of four mutually orthogonal positive roots", roots_unique_splitting),
            ("roots.duality", "the short/long duality carries the short groups onto the long groups", roots_duality),
        ],
        Suite::Weyl => &[
            ("weyl.order", "the simple reflections generate a group of order 1152 permuting the roots", weyl_order),
            ("weyl.extension", "W(F4) acts on the long and the short groups, giving an extension of S₃×S₃ by a group of order 32", weyl_extension),
            ("weyl.short_reflections", "reflections in short simple roots fix each long group", weyl_short_reflections),
            ("weyl.t1_stabilizer", "the stabilizer of the coordinate tetrahedron has order 384, or 192 modulo ±1, and consists of signed permutations", weyl_t1_stabilizer),
        ],
        Suite::Lifts => &[
            ("lifts.determinants", "σ₁..σ₄ lie in SL₂×SL₆", lifts_determinants),
            ("lifts.induced", "σᵢ preserves the Cartan subspace and induces the simple reflection sᵢ", lifts_induced),
            ("lifts.binary_octahedral", "the SL₂ parts generate a group of order 48 containing −1", lifts_binary_octahedral),
            ("lifts.klein_form", "st(s⁴−t⁴) is relatively invariant with character ±1", lifts_klein),
        ],
        Suite::Quartic => &[
            ("quartic.two_expressions", "K(P(w),P(w)) = Ω(P(w)·w, w) identically on the pencil trivector", quartic_two_expressions),
            ("quartic.restriction", "on the Cartan pencil the quartic equals 24(s⁴+t⁴)x₁x₂x₃x₄ − 6s²t²(2Σxᵢ²xⱼ² − Σxₖ⁴) up to one constant", quartic_restriction),
            ("quartic.sl6_invariance", "the quartic is invariant under SL₆", quartic_sl6_invariance),
            ("quartic.lift_invariance", "the quartic on the Cartan pencil is invariant: moving w by σᵢ equals moving x by sᵢ", quartic_lift_invariance),
        ],
        Suite::Pencil => &[
            ("pencil.tetrahedra", "the members [1:0], [1:1], [−1:1] are the tetrahedra T₁, T₂, T₃", pencil_tetrahedra),
            ("pencil.parameters", "A = 3(s⁴+t⁴), B = 6s²t² meets the tetrahedra at st = 0, s² = t², s² = −t²", pencil_parameters),
            ("pencil.weyl_action", "W(F4) preserves the pencil, acting on it through the short S₃", pencil_weyl_action),
            ("pencil.conjugate", "the two forms of the conjugate pencil define the same surfaces", pencil_conjugate),
        ],
        Suite::Config => &[
            ("config.desmic_points", "every member is singular at the 12 desmic points", config_points),
            ("config.base_lines", "the base locus consists of 16 lines", config_lines),
            ("config.reye", "the 16 lines and 12 points form a (16₃, 12₄) configuration", config_reye),
            ("config.edges", "each edge of one tetrahedron meets two opposite edges of each other tetrahedron", config_edges),
            ("config.macdonald", "the three products of each kind span a plane: q₁ − q₂ + q₃ = 0 and p₂ − p₃ = 16p₁", config_macdonald),
        ],
        Suite::Kummer => &[
            ("kummer.golden", "at (s,t) = (2,1) both sides give j = 111284641/50625", kummer_golden),
            ("kummer.samples", "the curve through the member's four parameter roots and the curve of its half-periods have equal j", kummer_samples),
            ("kummer.duality", "the dual member has half-period differences ∝ (4s²t², (s²−t²)², −(s²+t²)²)", kummer_duality),
        ],
        Suite::All => &[],
    }
}

fn halves_to_root(rs: &RootSystemF4, halves: [i64; 4]) -> Result<usize, String> {
    let coords: Vec<Cyc8> = halves.iter().map(|&h| Cyc8::from_rational(rat(h, 2))).collect();
    rs.index_of(&coords).ok_or_else(|| format!("{halves:?}/2 is not a root"))
}

fn roots_counts(ctx: &Context) -> Outcome {
    let rs = &ctx.rs;
    let counts = [
        rs.count(RootLength::Long),
        rs.count(RootLength::Short),
        rs.positives_of(RootLength::Long).len(),
        rs.positives_of(RootLength::Short).len(),
    ];
    ensure(counts == [24, 24, 12, 12], format!("counts {counts:?}"))
        .map(|_| "24 long, 24 short; 12 + 12 positive".to_string())
        .into()
}

fn roots_simple(ctx: &Context) -> Outcome {
    let rs = &ctx.rs;
    let listed: Vec<String> = rs.simple_roots().iter().map(|r| r.to_string()).collect();
    if ctx.custom_ell {
        return Outcome::Skip(format!("custom ℓ; simple roots {}", listed.join(", ")));
    }
    let run = || -> Result<String, String> {
        let expected = [[0, 2, -2, 0], [0, 0, 2, -2], [0, 0, 0, 2], [1, -1, -1, -1]]
            .iter()
            .map(|&h| halves_to_root(rs, h))
            .collect::<Result<Vec<_>, _>>()?;
        ensure(rs.simples() == &expected[..], format!("got {}", listed.join(", ")))?;
        Ok(format!("simple roots {}", listed.join(", ")))
    };
    run().into()
}

fn roots_orthogonality(ctx: &Context) -> Outcome {
    let rs = &ctx.rs;
    for (i, r) in rs.roots().iter().enumerate() {
        let p = rs.orthogonality_profile(i).own_other(r.length());
        if p != (3, 6) {
            return Outcome::Fail(format!("root {r} has profile {p:?}"));
        }
    }
    Outcome::Pass("profile (3, 6) for all 48 roots".into())
}

fn roots_unique_splitting(ctx: &Context) -> Outcome {
    let long = ctx.rs.enumerate_splittings(RootLength::Long).len();
    let short = ctx.rs.enumerate_splittings(RootLength::Short).len();
    let detail = format!("unique splitting: {long} partition found (long), {short} (short)");
    ensure(long == 1 && short == 1, detail.clone()).map(|_| detail).into()
}

fn roots_duality(ctx: &Context) -> Outcome {
    let rs = &ctx.rs;
    let d = short_long_duality();
    let long = rs.orthogonal_splitting(RootLength::Long);
    let short = rs.orthogonal_splitting(RootLength::Short);
    let sqrt2 = Cyc8::sqrt2();
    let mut images = BTreeSet::new();
    for group in &short.groups {
        let mut targets = BTreeSet::new();
        for &r in group {
            let v: Vec<Cyc8> = d.apply(rs.root(r).coords()).iter().map(|c| c * &sqrt2).collect();
            let Some(i) = rs.index_up_to_sign(&v) else {
                return Outcome::Fail(format!("{} maps off the root set", rs.root(r)));
            };
            let Some(g) = (0..3).find(|&k| long.groups[k].iter().any(|&j| {
                j == i || rs.root(j).negated() == *rs.root(i)
            })) else {
                return Outcome::Fail(format!("{} maps to a short root", rs.root(r)));
            };
            targets.insert(g);
        }
        if targets.len() != 1 {
            return Outcome::Fail(format!("short group {group:?} is split across long groups"));
        }
        images.extend(targets);
    }
    ensure(images.len() == 3, "two short groups land in one long group")
        .map(|_| "each short group maps onto a long group".to_string())
        .into()
}

fn weyl_order(ctx: &Context) -> Outcome {
    let run = || -> Result<String, String> {
        let w = ctx.rs.weyl_group().map_err(err)?;
        ensure(w.order() == 1152, format!("order {}", w.order()))?;
        if let Some(g) = w.elements().iter().find(|g| !ctx.rs.preserves_roots(g)) {
            return Err(format!("{g} does not permute the roots"));
        }
        Ok("group order 1152; every element permutes the 48 roots".into())
    };
    run().into()
}

fn weyl_extension(ctx: &Context) -> Outcome {
    let run = || -> Result<String, String> {
        let r = weyl_to_s3s3(&ctx.rs).map_err(err)?;
        let detail = format!(
            "group order {}; S₃×S₃ image {}; kernel {}",
            r.group_order, r.image_order, r.kernel_order
        );
        ensure((r.group_order, r.image_order, r.kernel_order) == (1152, 36, 32), detail.clone())?;
        Ok(detail)
    };
    run().into()
}

fn weyl_short_reflections(ctx: &Context) -> Outcome {
    let rs = &ctx.rs;
    let long = rs.orthogonal_splitting(RootLength::Long);
    let mut fixed = Vec::new();
    for &i in rs.simples() {
        let r = rs.root(i);
        if r.length() != RootLength::Short {
            continue;
        }
        let s = match reflection(r.coords()) {
            Ok(s) => s,
            Err(e) => return Outcome::Fail(err(e)),
        };
        match rs.group_permutation(&s, &long) {
            Some([0, 1, 2]) => fixed.push(r.to_string()),
            Some(p) => return Outcome::Fail(format!("reflection in {r} permutes long groups as {p:?}")),
            None => return Outcome::Fail(format!("reflection in {r} breaks the long groups")),
        }
    }
    Outcome::Pass(format!("reflections in {} fix every long group", fixed.join(" and ")))
}

fn weyl_t1_stabilizer(ctx: &Context) -> Outcome {
    let run = || -> Result<String, String> {
        let r = tetrahedron_stabilizer(&ctx.rs, &tetrahedra()[0]).map_err(err)?;
        let detail = format!(
            "stabilizer {} (projectively {}), long-group image {}",
            r.matrix_order, r.projective_order, r.long_image_order
        );
        ensure(r.matrix_order == 384 && r.projective_order == 192, detail.clone())?;
        ensure(r.all_signed_permutations, "a stabilizing element is not a signed permutation")?;
        Ok(detail)
    };
    run().into()
}

fn lifts_determinants(_: &Context) -> Outcome {
    let run = || -> Result<String, String> {
        for l in lifts() {
            let d2 = l.sl2_part.determinant().map_err(err)?;
            let d6 = l.sl6_part.determinant().map_err(err)?;
            ensure(d2.is_one() && d6.is_one(), format!("σ{}: det {d2}, {d6}", l.label))?;
        }
        Ok("all determinants 1".into())
    };
    run().into()
}

fn lifts_induced(_: &Context) -> Outcome {
    let run = || -> Result<String, String> {
        for (l, s) in lifts().iter().zip(reference_generators()) {
            let m = induced_cartan_matrix(l).map_err(err)?;
            ensure(m == s, format!("σ{} induces {m}, expected {s}", l.label))?;
        }
        Ok("σᵢ induces sᵢ for i = 1..4".into())
    };
    run().into()
}

fn lifts_binary_octahedral(_: &Context) -> Outcome {
    let run = || -> Result<String, String> {
        let g = sl2_image_group().map_err(err)?;
        ensure(g.order() == 48, format!("order {}", g.order()))?;
        ensure(g.contains(&ExactMatrix::identity(2).neg()), "−1 missing")?;
        Ok("order 48, contains −1".into())
    };
    run().into()
}

fn lifts_klein(_: &Context) -> Outcome {
    let run = || -> Result<String, String> {
        let g = sl2_image_group().map_err(err)?;
        let mut minus = 0;
        for e in g.elements() {
            if !klein_character(e).map_err(err)?.is_one() {
                minus += 1;
            }
        }
        Ok(format!("χ = +1 on {}, −1 on {minus}", g.order() - minus))
    };
    run().into()
}

fn quartic_two_expressions(_: &Context) -> Outcome {
    let w = pencil_trivector();
    let p = moment_map(&w);
    let via_trace = p.pair_with(p.matrix());
    let via_omega = omega_pairing(&gl6_act(p.matrix(), &w), &w);
    ensure(via_trace == via_omega, format!("K(P,P) − Ω(Pw,w) = {}", &via_trace - &via_omega))
        .map(|_| format!("both give the same {}-term polynomial", via_trace.len()))
        .into()
}

fn quartic_restriction(_: &Context) -> Outcome {
    restricted_quartic()
        .map(|r| format!("proportional with κ = {}", r.kappa))
        .map_err(err)
        .into()
}

fn random_trivector(rng: &mut ChaCha8Rng) -> Trivector {
    Trivector::from_coeffs(std::array::from_fn(|_| {
        MultiPoly::constant(Cyc8::from_int(rng.gen_range(-3..=3)))
    }))
}

fn random_sl6(rng: &mut ChaCha8Rng) -> ExactMatrix {
    let mut h = ExactMatrix::identity(6);
    for _ in 0..6 {
        let i = rng.gen_range(0..6);
        let j = (i + rng.gen_range(1..6)) % 6;
        let mut e = ExactMatrix::identity(6);
        e.set(i, j, Cyc8::from_int(rng.gen_range(-2..=2)));
        h = &h * &e;
    }
    h
}

fn quartic_sl6_invariance(ctx: &Context) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let mut run = || -> Result<String, String> {
        let trials = 3;
        for _ in 0..trials {
            let w = random_trivector(&mut rng);
            let h = random_sl6(&mut rng);
            let q = quartic_q(&w).map_err(err)?;
            let moved = quartic_q(&wedge3_apply(&h, &w)).map_err(err)?;
            ensure(q == moved, format!("Q(w) = {q} but Q(h·w) = {moved} for h = {h}"))?;
        }
        Ok(format!("{trials} seeded (w, h) pairs"))
    };
    run().into()
}

fn quartic_lift_invariance(_: &Context) -> Outcome {
    let run = || -> Result<String, String> {
        let r = restricted_quartic().map_err(err)?.poly;
        let (s, t) = (desmic_core::algebra::poly::s(), desmic_core::algebra::poly::t());
        for (l, s_ref) in lifts().iter().zip(reference_generators()) {
            let moved = l
                .act(&desmic_core::extalg::generic_cartan_element())
                .map_err(err)?;
            let q = quartic_q(&moved.contract(&s, &t)).map_err(err)?;
            let expected = r
                .substitute(&Substitution::linear(&Var::XS, &s_ref.to_rows()))
                .map_err(err)?;
            ensure(q == expected, format!("Q(σ{}·w) differs from the quartic at s{}·x", l.label, l.label))?;
        }
        Ok("Q(σᵢ·w(x)) = Q(w(sᵢ·x)) for i = 1..4".into())
    };
    run().into()
}

fn pencil_tetrahedra(_: &Context) -> Outcome {
    let run = || -> Result<String, String> {
        for ((a, b), label) in [((1, 0), 1), ((1, 1), 2), ((-1, 1), 3)] {
            let params = PencilParams::from_ints(a, b).map_err(err)?;
            let got = catalog_factorization(pencil_member(&params).form());
            ensure(got == Some(label), format!("[{a}:{b}] factors as {got:?}"))?;
        }
        Ok("[1:0] = T₁, [1:1] = T₂, [−1:1] = T₃".into())
    };
    run().into()
}

fn pencil_parameters(_: &Context) -> Outcome {
    let run = || -> Result<String, String> {
        let cases = [
            (Cyc8::one(), Cyc8::zero(), 1),
            (Cyc8::one(), Cyc8::one(), 2),
            (Cyc8::one(), Cyc8::i(), 3),
        ];
        for (s0, t0, label) in cases {
            let p = PencilParams::from_st(&s0, &t0).map_err(err)?;
            ensure(p.tetrahedron() == Some(label), format!("(s,t) = ({s0},{t0}) gives {p}"))?;
            ensure(tetrahedra()[label - 1].member_params.same_point(&p), format!("T{label} mismatch"))?;
        }
        Ok("(1,0), (1,1), (1,i) give T₁, T₂, T₃".into())
    };
    run().into()
}

fn pencil_weyl_action(ctx: &Context) -> Outcome {
    let run = || -> Result<String, String> {
        let rs = &ctx.rs;
        let w = rs.weyl_group().map_err(err)?;
        let short = rs.orthogonal_splitting(RootLength::Short);
        let member = pencil_member(&PencilParams::from_ints(2, 1).map_err(err)?);
        let mut seen: Vec<([usize; 3], PencilParams)> = Vec::new();
        for g in w.elements() {
            let pulled = pullback(member.form(), g).map_err(err)?;
            let params = pencil_params_of(&pulled).ok_or(format!("pullback by {g} leaves the pencil"))?;
            let perm = rs.group_permutation(g, &short).ok_or(format!("{g} breaks the short groups"))?;
            match seen.iter().find(|(p, _)| *p == perm) {
                Some((_, q)) => ensure(q.same_point(&params), format!("{g}: same short permutation, parameters {q} vs {params}"))?,
                None => seen.push((perm, params)),
            }
        }
        Ok(format!("1152 pullbacks stay in the pencil; {} parameter images", seen.len()))
    };
    run().into()
}

fn pencil_conjugate(ctx: &Context) -> Outcome {
    let mut sampler = RationalSampler::new(ctx.seed);
    let mut run = || -> Result<String, String> {
        for _ in 0..5 {
            let a = Cyc8::from_rational(sampler.next_nonzero());
            let b = Cyc8::from_rational(sampler.next_nonzero());
            let c = -(&a + &b);
            let cp = ConjugateParams::new(a, b, c).map_err(err)?;
            let k = proportional(&conjugate_member(&cp), &conjugate_member_expanded(&cp));
            ensure(k.is_some(), format!("forms differ at {:?}", cp.abc()))?;
        }
        Ok("product and expanded forms agree up to sign on 5 samples".into())
    };
    run().into()
}

fn config_points(ctx: &Context) -> Outcome {
    let mut sampler = RationalSampler::new(ctx.seed);
    let mut run = || -> Result<String, String> {
        let points = desmic_points();
        for _ in 0..10 {
            let params = PencilParams::new(
                Cyc8::from_rational(sampler.next_nonzero()),
                Cyc8::from_rational(sampler.next_nonzero()),
            )
            .map_err(err)?;
            let member = pencil_member(&params);
            if let Some(p) = points.iter().find(|p| !is_singular_at(&member, p)) {
                return Err(format!("member {params} is smooth at {p}"));
            }
        }
        Ok(format!("{} points singular on 10 sampled members", points.len()))
    };
    run().into()
}

fn config_lines(_: &Context) -> Outcome {
    let lines = base_locus_lines();
    ensure(lines.len() == 16, format!("{} lines", lines.len()))
        .map(|_| "16 lines on both m and g".to_string())
        .into()
}

fn config_reye(_: &Context) -> Outcome {
    let r = reye_incidence();
    ensure(r.is_configuration(3, 4), format!("{} incidences", r.incidences()))
        .map(|_| format!("(16₃, 12₄), {} incidences", r.incidences()))
        .into()
}

fn config_edges(_: &Context) -> Outcome {
    let m = edge_meetings();
    match m.iter().find(|e| !e.meets_opposite_pair()) {
        Some(e) => Outcome::Fail(format!(
            "edge {:?} of T{} meets {:?} of T{}",
            e.edge, e.from, e.met_edges, e.to
        )),
        None => Outcome::Pass(format!("{} edge/tetrahedron pairs", m.len())),
    }
}

fn config_macdonald(ctx: &Context) -> Outcome {
    let run = || -> Result<String, String> {
        let long = macdonald_span(&ctx.rs, RootLength::Long).map_err(err)?;
        let short = macdonald_span(&ctx.rs, RootLength::Short).map_err(err)?;
        ensure(long.dimension == 2 && short.dimension == 2, "span dimension is not 2")?;
        let (q, p) = (&long.products, &short.products);
        let sixteen = MultiPoly::constant(Cyc8::from_int(16));
        ensure((&(&q[0] - &q[1]) + &q[2]).is_zero(), "q₁ − q₂ + q₃ ≠ 0")?;
        ensure((&(&p[1] - &p[2]) - &(&sixteen * &p[0])).is_zero(), "p₂ − p₃ ≠ 16p₁")?;
        ensure(long.translates_in_span && short.translates_in_span, "a translate leaves the span")?;
        Ok("dimension 2 for both kinds; relations hold; spans are W-stable".into())
    };
    run().into()
}

fn kummer_golden(_: &Context) -> Outcome {
    let run = || -> Result<String, String> {
        let r = verify_kummer_rational(&rat(2, 1), &rat(1, 1)).map_err(err)?;
        let golden = Cyc8::from_rational(rat(111_284_641, 50_625));
        ensure(r.j_curve == golden, format!("j = {}", r.j_curve))?;
        Ok(format!(
            "λ_curve = {}, λ_periods = {}, j = {}",
            r.lambda_curve, r.lambda_periods, r.j_curve
        ))
    };
    run().into()
}

fn kummer_samples(ctx: &Context) -> Outcome {
    for (s0, t0) in sample_pencil_points(ctx.seed, ctx.samples) {
        if let Err(e) = verify_kummer_rational(&s0, &t0) {
            return Outcome::Fail(format!("(s,t) = ({s0}, {t0}): {e}"));
        }
    }
    Outcome::Pass(format!("{} exact j-equalities (seed {})", ctx.samples, ctx.seed))
}

fn kummer_duality(ctx: &Context) -> Outcome {
    let count = ctx.samples.min(10);
    for (s0, t0) in sample_pencil_points(ctx.seed, count) {
        let (s0, t0) = (Cyc8::from_rational(s0), Cyc8::from_rational(t0));
        let check = || -> Result<bool, Error> {
            Ok(half_periods_from_duality(&s0, &t0)?
                .is_proportional_to(&HalfPeriodDifferences::from_st(&s0, &t0)?))
        };
        match check() {
            Ok(true) => {}
            Ok(false) => return Outcome::Fail(format!("(s,t) = ({s0}, {t0}): not proportional")),
            Err(e) => return Outcome::Fail(format!("(s,t) = ({s0}, {t0}): {e}")),
        }
    }
    Outcome::Pass(format!("{count} samples"))
}

/// Result of `member --factor`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberReport {
    pub a: String,
    pub b: String,
    pub form: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factorization: Option<String>,
}

pub fn member_report(a: &Rational, b: &Rational, factor: bool) -> Result<MemberReport, Error> {
    let params = PencilParams::new(Cyc8::from_rational(a.clone()), Cyc8::from_rational(b.clone()))?;
    let member = pencil_member(&params);
    let factorization = factor.then(|| {
        match catalog_factorization(member.form()) {
            Some(1) => "completely reducible: T₁ faces x₁x₂x₃x₄",
            Some(2) => "completely reducible: T₂ faces",
            Some(3) => "completely reducible: T₃ faces",
            _ => "not reducible over catalog",
        }
        .to_string()
    });
    Ok(MemberReport {
        a: a.to_string(),
        b: b.to_string(),
        form: member.form().to_string(),
        factorization,
    })
}

/// Result of `jinv`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JReport {
    pub s: String,
    pub t: String,
    pub lambda_curve: String,
    pub lambda_periods: String,
    pub j: String,
}

pub fn j_report(s0: &Rational, t0: &Rational) -> Result<JReport, Error> {
    let r = verify_kummer_correspondence(&Cyc8::from_rational(s0.clone()), &Cyc8::from_rational(t0.clone()))?;
    Ok(JReport {
        s: s0.to_string(),
        t: t0.to_string(),
        lambda_curve: r.lambda_curve.to_string(),
        lambda_periods: r.lambda_periods.to_string(),
        j: r.j_curve.to_string(),
    })
}

/// Errors from bad input, as opposed to failed verification.
pub fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_) | Error::ZeroParameters | Error::DegenerateMember(_) | Error::NonGenericForm(_)
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_across_all_suites() {
        let mut ids = BTreeSet::new();
        for s in Suite::EACH {
            for (id, _, _) in checks_of(s) {
                assert!(ids.insert(*id), "duplicate id {id}");
            }
        }
    }

    #[test]
    fn summary_counts_follow_statuses() {
        let mk = |id: &str, status| CheckResult {
            id: id.into(),
            claim: String::new(),
            status,
            detail: String::new(),
            elapsed_ms: 0,
        };
        let r = RunReport::new(vec![mk("b", Status::Fail), mk("a", Status::Pass), mk("c", Status::Skipped)]);
        assert_eq!(r.summary, Summary { pass: 1, fail: 1, skipped: 1 });
        assert_eq!(r.checks[0].id, "a");
        assert!(!r.all_passed());
    }

    #[test]
    fn member_factorizations() {
        let f = |a, b| member_report(&rat(a, 1), &rat(b, 1), true).unwrap().factorization.unwrap();
        assert_eq!(f(1, 1), "completely reducible: T₂ faces");
        assert_eq!(f(1, 0), "completely reducible: T₁ faces x₁x₂x₃x₄");
        assert_eq!(f(-1, 1), "completely reducible: T₃ faces");
        assert_eq!(f(2, 1), "not reducible over catalog");
        assert_eq!(member_report(&rat(0, 1), &rat(0, 1), true), Err(Error::ZeroParameters));
    }

    #[test]
    fn jinv_golden_and_degenerate() {
        assert_eq!(j_report(&rat(2, 1), &rat(1, 1)).unwrap().j, "111284641/50625");
        let e = j_report(&rat(1, 1), &rat(1, 1)).unwrap_err();
        assert_eq!(e.to_string(), "degenerate: member is tetrahedron T₂");
        assert!(is_usage_error(&e));
        let e = j_report(&rat(1, 1), &rat(0, 1)).unwrap_err();
        assert_eq!(e.to_string(), "degenerate: member is tetrahedron T₁");
    }

    #[test]
    fn custom_ell_skips_only_the_simple_root_table() {
        let opts = VerifyOptions {
            ell: Some([rat(7, 1), rat(-3, 1), rat(2, 1), rat(1, 5)]),
            ..VerifyOptions::default()
        };
        let r = run_suite(Suite::Roots, &opts).unwrap();
        assert_eq!(r.summary, Summary { pass: 4, fail: 0, skipped: 1 });
    }
}
