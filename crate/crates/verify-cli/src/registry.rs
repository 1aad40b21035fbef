//! The check registry: every named check, what it needs, and how to run it.
//!
//! Checks fall into two groups.  Family checks parse the target as a triple
//! system (`full:2`, `sym:3`, `rect:2x3`, ...) and sample algebra laws.
//! Geometry checks parse it as a subspace geometry (`gras:2x2`,
//! `lagr-herm:2`, ...) and sample or enumerate incidence laws.  Each check
//! runs on its own seed stream derived from the run seed and the check name,
//! so adding or removing checks never shifts another check's samples.

use geometry_core::{
    check_covering, check_faithful_small, check_intrinsic_linearity, check_midpoint_injectivity,
    check_null_system, check_pg1, check_pg2, check_symmetric_space, check_tangent,
    enumerate_copoints, enumerate_points, intrinsic_from_flag, Geometry, GeometryKind, PiMutation,
};
use jordan_core::{
    check_commutator_model, check_fundamental, check_herm_spin, check_jordan_identity,
    check_lie_triple, check_triple_exchange, check_triple_symmetry, Family, TripleMutation,
    TripleSystem,
};
use linalg_exact::Matrix;
use ring_core::{seeded_rng, CheckOutcome, RingDescriptor, Scalar};
use tkk_lie::{
    check_antisymmetry, check_grade_reversal, check_grading, check_jacobi, check_triple_recovery,
    BracketMutation, GradedLie, TkkError,
};

/// A deliberate defect injected into the structures under test, used to
/// demonstrate that the checkers are not vacuous.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    /// Flip the sign of the second term of the triple product.
    JordanFlip,
    /// Drop the correction term of the spin triple product.
    SpinDrop,
    /// Flip the sign of one derivation term in the graded bracket.
    TkkFlip,
    /// Skip the pairing normalization of the first combination weight.
    PiDrop,
}

impl Mutation {
    pub fn parse(name: &str) -> Option<Mutation> {
        match name {
            "jordan-flip" => Some(Mutation::JordanFlip),
            "spin-drop" => Some(Mutation::SpinDrop),
            "tkk-flip" => Some(Mutation::TkkFlip),
            "pi-drop" => Some(Mutation::PiDrop),
            _ => None,
        }
    }

    pub const NAMES: &'static [&'static str] =
        &["jordan-flip", "spin-drop", "tkk-flip", "pi-drop"];
}

/// Everything a check needs: the parsed ring, the raw target string, the
/// sample budget, the derived seed, and an optional injected defect.
pub struct RunCtx {
    pub ring: RingDescriptor,
    pub target: Option<String>,
    pub samples: usize,
    pub seed: u64,
    pub mutation: Option<Mutation>,
}

/// What a check reports back: the outcome, the target it actually ran on,
/// and an optional human-readable note (counts, dimensions).
pub struct RunResult {
    pub outcome: CheckOutcome,
    pub target: String,
    pub note: Option<String>,
}

impl RunResult {
    fn plain(outcome: CheckOutcome, target: &str) -> Self {
        RunResult { outcome, target: target.to_string(), note: None }
    }
}

pub struct CheckDef {
    pub name: &'static str,
    pub describes: &'static str,
    pub run: fn(&RunCtx) -> Result<RunResult, String>,
}

/// All checks, in the order reports list them.
pub const REGISTRY: &[CheckDef] = &[
    CheckDef {
        name: "ljp1",
        describes: "outer symmetry of the triple product: T(x,y,z) = T(z,y,x)",
        run: run_ljp1,
    },
    CheckDef {
        name: "ljp2",
        describes: "five-variable exchange law relating left multiplication operators",
        run: run_ljp2,
    },
    CheckDef {
        name: "fundamental",
        describes: "fundamental formula: Q(Q(x)y) = Q(x)Q(y)Q(x)",
        run: run_fundamental,
    },
    CheckDef {
        name: "jordan-id",
        describes: "Jordan identity x2.(y.x) = (x2.y).x and the unit law, unital families only",
        run: run_jordan_id,
    },
    CheckDef {
        name: "lts",
        describes: "derived triple bracket: antisymmetry, Jacobi, derivation; double-commutator model on full:n",
        run: run_lts,
    },
    CheckDef {
        name: "tkk",
        describes: "graded Lie algebra from the triple system: antisymmetry, Jacobi, grading, bracket recovery",
        run: run_tkk,
    },
    CheckDef {
        name: "pg1",
        describes: "first combination law: the ratio-r map at a transversal pair preserves ratio-s combinations",
        run: run_pg1,
    },
    CheckDef {
        name: "pg2",
        describes: "second combination law: dual-slot combinations braid, with the ratio-half symmetry",
        run: run_pg2,
    },
    CheckDef {
        name: "symm-space",
        describes: "dot-polarity reflections: fixed centre, involution, distributivity, chart negation",
        run: run_symm_space,
    },
    CheckDef {
        name: "null-system",
        describes: "annihilator pairing: never transversal to its argument, equivariant under dilations",
        run: run_null_system,
    },
    CheckDef {
        name: "midpoint",
        describes: "distinct co-points give distinct midpoints of a fixed point pair (exhaustive)",
        run: run_midpoint,
    },
    CheckDef {
        name: "intrinsic",
        describes: "flag-squeezed point sets are chart-linear; one-step flags have chart rank at most one",
        run: run_intrinsic,
    },
    CheckDef {
        name: "tangent",
        describes: "dual-number extension: lift/project round trips and the combination laws upstairs",
        run: run_tangent,
    },
    CheckDef {
        name: "enumerate",
        describes: "point and co-point counts with exhaustive covering over a prime field",
        run: run_enumerate,
    },
    CheckDef {
        name: "faithful-small",
        describes: "co-points separated by visibility or by chart addition (exhaustive)",
        run: run_faithful_small,
    },
    CheckDef {
        name: "herm-spin",
        describes: "hermitian 2x2 triple products match the spin factor of signature (1,-1,-1,-1)",
        run: run_herm_spin,
    },
];

pub fn find(name: &str) -> Option<&'static CheckDef> {
    REGISTRY.iter().find(|def| def.name == name)
}

fn family_target(ctx: &RunCtx) -> Result<TripleSystem, String> {
    let target = ctx
        .target
        .as_deref()
        .ok_or("this check needs --target with a family such as full:2")?;
    let sys = TripleSystem::parse(target, &ctx.ring).map_err(|e| e.to_string())?;
    Ok(match ctx.mutation {
        Some(Mutation::JordanFlip) => sys.with_mutation(TripleMutation::FlipSecondTerm),
        Some(Mutation::SpinDrop) => sys.with_mutation(TripleMutation::DropSpinCorrection),
        _ => sys,
    })
}

fn geometry_target(ctx: &RunCtx) -> Result<Geometry, String> {
    let target = ctx
        .target
        .as_deref()
        .ok_or("this check needs --target with a geometry such as gras:2x2")?;
    let geo = Geometry::parse(target, &ctx.ring).map_err(|e| e.to_string())?;
    Ok(match ctx.mutation {
        Some(Mutation::PiDrop) => geo.mutated(PiMutation::DropFirstWeightNormalization),
        _ => geo,
    })
}

fn run_ljp1(ctx: &RunCtx) -> Result<RunResult, String> {
    let sys = family_target(ctx)?;
    let mut rng = seeded_rng(ctx.seed);
    let out = check_triple_symmetry(&sys, ctx.samples, &mut rng);
    Ok(RunResult::plain(out, ctx.target.as_deref().unwrap_or_default()))
}

fn run_ljp2(ctx: &RunCtx) -> Result<RunResult, String> {
    let sys = family_target(ctx)?;
    let mut rng = seeded_rng(ctx.seed);
    let out = check_triple_exchange(&sys, ctx.samples, &mut rng);
    Ok(RunResult::plain(out, ctx.target.as_deref().unwrap_or_default()))
}

fn run_fundamental(ctx: &RunCtx) -> Result<RunResult, String> {
    let sys = family_target(ctx)?;
    let mut rng = seeded_rng(ctx.seed);
    let out = check_fundamental(&sys, ctx.samples, &mut rng);
    Ok(RunResult::plain(out, ctx.target.as_deref().unwrap_or_default()))
}

fn run_jordan_id(ctx: &RunCtx) -> Result<RunResult, String> {
    let sys = family_target(ctx)?;
    let mut rng = seeded_rng(ctx.seed);
    let out = check_jordan_identity(&sys, ctx.samples, &mut rng).map_err(|e| e.to_string())?;
    Ok(RunResult::plain(out, ctx.target.as_deref().unwrap_or_default()))
}

fn run_lts(ctx: &RunCtx) -> Result<RunResult, String> {
    let sys = family_target(ctx)?;
    let mut rng = seeded_rng(ctx.seed);
    let mut out = check_lie_triple(&sys, ctx.samples, &mut rng);
    if matches!(sys.family(), Family::Full(_)) {
        out.merge(check_commutator_model(&sys, ctx.samples, &mut rng).map_err(|e| e.to_string())?);
    }
    Ok(RunResult::plain(out, ctx.target.as_deref().unwrap_or_default()))
}

fn run_tkk(ctx: &RunCtx) -> Result<RunResult, String> {
    let sys = family_target(ctx)?;
    let lie = match ctx.mutation {
        Some(Mutation::TkkFlip) => GradedLie::with_mutation(sys, BracketMutation::FlipDeltaTerm),
        _ => GradedLie::new(sys),
    }
    .map_err(|e| e.to_string())?;
    let mut out = check_antisymmetry(&lie);
    out.merge(check_jacobi(&lie));
    out.merge(check_grading(&lie));
    out.merge(check_triple_recovery(&lie));
    match check_grade_reversal(&lie) {
        Ok(rev) => out.merge(rev),
        Err(TkkError::Unsupported(_)) => {}
        Err(e) => return Err(e.to_string()),
    }
    let (p, zero, m) = lie.dims();
    Ok(RunResult {
        outcome: out,
        target: ctx.target.clone().unwrap_or_default(),
        note: Some(format!("graded dimensions {p} + {zero} + {m} = {}", p + zero + m)),
    })
}

fn run_pg1(ctx: &RunCtx) -> Result<RunResult, String> {
    let geo = geometry_target(ctx)?;
    let mut rng = seeded_rng(ctx.seed);
    let out = check_pg1(&geo, ctx.samples, &mut rng).map_err(|e| e.to_string())?;
    Ok(RunResult::plain(out, ctx.target.as_deref().unwrap_or_default()))
}

fn run_pg2(ctx: &RunCtx) -> Result<RunResult, String> {
    let geo = geometry_target(ctx)?;
    let mut rng = seeded_rng(ctx.seed);
    let out = check_pg2(&geo, ctx.samples, &mut rng).map_err(|e| e.to_string())?;
    Ok(RunResult::plain(out, ctx.target.as_deref().unwrap_or_default()))
}

fn run_symm_space(ctx: &RunCtx) -> Result<RunResult, String> {
    let geo = geometry_target(ctx)?;
    let mut rng = seeded_rng(ctx.seed);
    let out = check_symmetric_space(&geo, ctx.samples, &mut rng).map_err(|e| e.to_string())?;
    Ok(RunResult::plain(out, ctx.target.as_deref().unwrap_or_default()))
}

fn run_null_system(ctx: &RunCtx) -> Result<RunResult, String> {
    let geo = geometry_target(ctx)?;
    let mut rng = seeded_rng(ctx.seed);
    let dilations = (ctx.samples / 2).max(1);
    let out = check_null_system(&geo, ctx.samples, dilations, &mut rng).map_err(|e| e.to_string())?;
    Ok(RunResult::plain(out, ctx.target.as_deref().unwrap_or_default()))
}

fn run_midpoint(ctx: &RunCtx) -> Result<RunResult, String> {
    let geo = geometry_target(ctx)?;
    let out = check_midpoint_injectivity(&geo).map_err(|e| e.to_string())?;
    Ok(RunResult::plain(out, ctx.target.as_deref().unwrap_or_default()))
}

fn run_intrinsic(ctx: &RunCtx) -> Result<RunResult, String> {
    let geo = geometry_target(ctx)?;
    if !matches!(geo.kind(), GeometryKind::Grassmann { .. }) {
        return Err("the standard flag used by this check needs a plain subspace geometry".into());
    }
    let w = geo.ambient();
    let k = geo.point_rank();
    let std_cols = |n: usize| {
        Matrix::from_fn(geo.ring(), w, n, |i, j| {
            if i == j {
                Scalar::one(geo.ring())
            } else {
                Scalar::zero(geo.ring())
            }
        })
    };
    let set = intrinsic_from_flag(&geo, &std_cols(k - 1), &std_cols(k + 1))
        .map_err(|e| e.to_string())?;
    let mut rng = seeded_rng(ctx.seed);
    let out =
        check_intrinsic_linearity(&geo, &set, ctx.samples, &mut rng).map_err(|e| e.to_string())?;
    Ok(RunResult::plain(out, ctx.target.as_deref().unwrap_or_default()))
}

fn run_tangent(ctx: &RunCtx) -> Result<RunResult, String> {
    let geo = geometry_target(ctx)?;
    let mut rng = seeded_rng(ctx.seed);
    let out = check_tangent(&geo, ctx.samples, &mut rng).map_err(|e| e.to_string())?;
    Ok(RunResult::plain(out, ctx.target.as_deref().unwrap_or_default()))
}

fn run_enumerate(ctx: &RunCtx) -> Result<RunResult, String> {
    let geo = geometry_target(ctx)?;
    let points = enumerate_points(&geo).map_err(|e| e.to_string())?;
    let copoints = enumerate_copoints(&geo).map_err(|e| e.to_string())?;
    let out = check_covering(&geo).map_err(|e| e.to_string())?;
    Ok(RunResult {
        outcome: out,
        target: ctx.target.clone().unwrap_or_default(),
        note: Some(format!("{} points, {} co-points", points.len(), copoints.len())),
    })
}

fn run_faithful_small(ctx: &RunCtx) -> Result<RunResult, String> {
    let geo = geometry_target(ctx)?;
    let out = check_faithful_small(&geo).map_err(|e| e.to_string())?;
    Ok(RunResult::plain(out, ctx.target.as_deref().unwrap_or_default()))
}

fn run_herm_spin(ctx: &RunCtx) -> Result<RunResult, String> {
    let mut rng = seeded_rng(ctx.seed);
    let out = check_herm_spin(ctx.samples, &mut rng);
    Ok(RunResult::plain(out, "herm:2/spin:4"))
}
