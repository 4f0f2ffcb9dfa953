//! Grid verification of registered identities.
//!
//! Every grid point `(n, k, sample)` draws its own parameter point from a
//! ChaCha stream seeded by `(seed, identity, n, k, sample)`, so results do
//! not depend on evaluation order and parallel runs merge bit-identically.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::{int, Rational, Symbol};
use crate::error::{Error, Result};
use crate::families::{
    check_relation_valid, check_valid, random_point, random_rational, FamilyId, ParamPoint,
    Relation,
};
use crate::poly::Poly;

/// Both sides of one or more equalities produced at a grid point.
pub type Eqs = Vec<(Poly, Poly)>;
pub type CheckFn = fn(&Ctx) -> Result<Eqs>;

/// Everything a check sees at one grid point.
#[derive(Debug, Clone)]
pub struct Ctx {
    pub n: usize,
    pub k: usize,
    pub th: ParamPoint,
    /// Family and normalization for identities stated for a generic family.
    pub variant: Option<(FamilyId, usize)>,
}

impl Ctx {
    pub fn ni(&self) -> i64 {
        self.n as i64
    }

    pub fn ki(&self) -> i64 {
        self.k as i64
    }

    pub fn p(&self, s: Symbol) -> Result<Rational> {
        self.th.get(s).cloned()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Group {
    Lemma,
    Rodrigues,
    Proposition,
    Helper,
    Recurrence,
    Sode,
    Step,
    Relation,
    Generic,
}

impl Group {
    /// Groups counted when the registry is filtered by family.
    pub fn in_family_suite(self) -> bool {
        matches!(
            self,
            Group::Lemma | Group::Rodrigues | Group::Proposition | Group::Helper | Group::Recurrence
        )
    }
}

/// How parameter points are drawn for an identity.
#[derive(Debug, Clone, Copy)]
pub enum Sampler {
    /// Valid points of one family.
    Family(FamilyId),
    /// Laguerre with `alpha` a small nonnegative integer.
    IntegerAlpha,
    /// Valid points of both sides of a relation.
    Relation(Relation),
    /// One valid point for each family variant.
    Variants,
}

/// One way of reading an identity: a check and the smallest `n` it claims.
#[derive(Clone)]
pub struct Reading {
    pub statement: &'static str,
    pub n_min: usize,
    pub check: CheckFn,
}

#[derive(Clone)]
pub struct Erratum {
    pub note: &'static str,
    pub corrected: Option<Reading>,
}

#[derive(Clone)]
pub struct Identity {
    pub id: &'static str,
    pub family: Option<FamilyId>,
    pub group: Group,
    pub paper_ref: &'static str,
    pub printed: Reading,
    pub sampler: Sampler,
    /// Family variants for generic identities.
    pub variants: &'static [(FamilyId, usize)],
    /// Extra hypothesis on the parameter point (failing points are redrawn).
    pub hypothesis: Option<fn(&ParamPoint) -> bool>,
    /// Uses the `k` axis of the grid.
    pub ladder: bool,
    /// Grid points with `n < k` are outside the statement.
    pub n_ge_k: bool,
    pub erratum: Option<Erratum>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Grid {
    pub n_max: usize,
    pub k_max: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            n_max: 12,
            k_max: 4,
            samples: 5,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct GridReport {
    pub n_range: [usize; 2],
    pub k_range: [usize; 2],
    pub samples: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Fails as printed; an erratum entry documents it.
    Quarantined,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Failure {
    pub n: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub theta: std::collections::BTreeMap<String, String>,
    /// `lhs - rhs` of the first unequal side pair.
    pub residual_poly: Poly,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Skip {
    pub n: usize,
    pub k: usize,
    pub reason: String,
}

/// Failures kept in a report; the total is in `failure_count`.
pub const MAX_FAILURES: usize = 5;

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct ReadingReport {
    pub statement: String,
    pub status: Status,
    pub checked: usize,
    pub failure_count: usize,
    pub failures: Vec<Failure>,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct ErratumReport {
    pub note: String,
    pub first_failure: Option<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corrected: Option<ReadingReport>,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct VerificationReport {
    pub identity: String,
    pub paper_ref: String,
    pub statement: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyId>,
    pub group: Group,
    pub grid: GridReport,
    pub status: Status,
    pub checked: usize,
    pub skipped: Vec<Skip>,
    pub failure_count: usize,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub erratum: Option<ErratumReport>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

impl Default for ExecMode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            ExecMode::Parallel
        } else {
            ExecMode::Sequential
        }
    }
}

/// Map `f` over `items` in order, in parallel when enabled.
pub fn ordered_map<T, U, F>(items: &[T], mode: ExecMode, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode == ExecMode::Parallel {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = mode;
    items.iter().map(f).collect()
}

const PARAM_BOUND: i64 = 40;
const MAX_DRAWS: usize = 400;

fn fnv(s: &str) -> u64 {
    s.bytes()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

fn point_rng(seed: u64, id: &str, n: usize, k: usize, sample: usize, variant: usize) -> ChaCha8Rng {
    let mut bytes = [0u8; 32];
    bytes[..8].copy_from_slice(&seed.to_le_bytes());
    bytes[8..16].copy_from_slice(&fnv(id).to_le_bytes());
    bytes[16..20].copy_from_slice(&(n as u32).to_le_bytes());
    bytes[20..24].copy_from_slice(&(k as u32).to_le_bytes());
    bytes[24..28].copy_from_slice(&(sample as u32).to_le_bytes());
    bytes[28..32].copy_from_slice(&(variant as u32).to_le_bytes());
    ChaCha8Rng::from_seed(bytes)
}

fn draw(ident: &Identity, rng: &mut ChaCha8Rng, variant: Option<(FamilyId, usize)>, n_max: usize) -> Result<ParamPoint> {
    let th = match (ident.sampler, variant) {
        (Sampler::Variants, Some((fam, _))) | (Sampler::Family(fam), _) => {
            let th = random_point(rng, fam.params(), PARAM_BOUND);
            check_valid(fam, &th, n_max)?;
            th
        }
        (Sampler::IntegerAlpha, _) => {
            use rand::Rng;
            ParamPoint::from_pairs([(Symbol::Alpha, int(rng.gen_range(0..=6)))])
        }
        (Sampler::Relation(rel), _) => {
            let mut th = random_point(rng, rel.params(), PARAM_BOUND);
            // keep q away from ±1 and 0 so both bases stay admissible
            if th.get(Symbol::Q)?.clone() == int(0) {
                th.set(Symbol::Q, random_rational(rng, PARAM_BOUND) + int(2));
            }
            check_relation_valid(rel, &th, n_max)?;
            th
        }
        (Sampler::Variants, None) => {
            return Err(Error::InvalidParam("generic identity without variant".into()))
        }
    };
    if let Some(h) = ident.hypothesis {
        if !h(&th) {
            return Err(Error::Pole("outside the identity's hypothesis".into()));
        }
    }
    Ok(th)
}

enum Outcome {
    Checked,
    Skipped(Skip),
    Failed(Failure),
}

/// First side pair that differs, as `lhs - rhs`.
pub fn residual(eqs: &Eqs) -> Option<Poly> {
    eqs.iter().map(|(l, r)| l - r).find(|d| !d.is_zero())
}

/// Evaluate one reading at one grid point, redrawing the parameter point on poles.
fn run_point(
    ident: &Identity,
    reading: &Reading,
    grid: &Grid,
    n: usize,
    k: usize,
    sample: usize,
    variant: Option<(usize, (FamilyId, usize))>,
) -> Outcome {
    if ident.n_ge_k && n < k {
        return Outcome::Skipped(Skip { n, k, reason: "n < k".into() });
    }
    if n < reading.n_min {
        return Outcome::Skipped(Skip {
            n,
            k,
            reason: format!("statement requires n >= {}", reading.n_min),
        });
    }
    let vi = variant.map(|v| v.0).unwrap_or(0);
    let var = variant.map(|v| v.1);
    let mut rng = point_rng(grid.seed, ident.id, n, k, sample, vi);
    let family = var.map(|(f, r)| if f.root_count() > 1 { format!("{f}#{r}") } else { f.to_string() });
    let margin = grid.n_max + grid.k_max + 3;
    let mut last = String::new();
    for _ in 0..MAX_DRAWS {
        let th = match draw(ident, &mut rng, var, margin) {
            Ok(th) => th,
            Err(Error::Pole(e)) => {
                last = e;
                continue;
            }
            Err(e) => return error_failure(n, k, family, ParamPoint::new(), e),
        };
        let ctx = Ctx { n, k, th, variant: var };
        match (reading.check)(&ctx) {
            Ok(eqs) => {
                return match residual(&eqs) {
                    None => Outcome::Checked,
                    Some(d) => Outcome::Failed(Failure {
                        n,
                        k,
                        family,
                        theta: ctx.th.to_strings(),
                        residual_poly: d,
                        error: None,
                    }),
                }
            }
            Err(Error::Pole(e)) => last = e,
            Err(e) => return error_failure(n, k, family, ctx.th, e),
        }
    }
    error_failure(
        n,
        k,
        family,
        ParamPoint::new(),
        Error::SamplingExhausted(format!("no admissible parameter point ({last})")),
    )
}

fn error_failure(n: usize, k: usize, family: Option<String>, th: ParamPoint, e: Error) -> Outcome {
    Outcome::Failed(Failure {
        n,
        k,
        family,
        theta: th.to_strings(),
        residual_poly: Poly::zero(),
        error: Some(e.to_string()),
    })
}

struct Tally {
    checked: usize,
    skipped: Vec<Skip>,
    failure_count: usize,
    failures: Vec<Failure>,
}

type Point = (usize, usize, usize, Option<(usize, (FamilyId, usize))>);

fn grid_points(ident: &Identity, grid: &Grid) -> Vec<Point> {
    let k_max = if ident.ladder { grid.k_max } else { 0 };
    let variants: Vec<Option<(usize, (FamilyId, usize))>> = if ident.variants.is_empty() {
        vec![None]
    } else {
        ident.variants.iter().copied().enumerate().map(Some).collect()
    };
    let mut pts = Vec::new();
    for n in 0..=grid.n_max {
        for k in 0..=k_max {
            for s in 0..grid.samples.max(1) {
                for v in &variants {
                    pts.push((n, k, s, *v));
                }
            }
        }
    }
    pts
}

fn tally(ident: &Identity, reading: &Reading, grid: &Grid, mode: ExecMode) -> Tally {
    let pts = grid_points(ident, grid);
    let outcomes = ordered_map(&pts, mode, |&(n, k, s, v)| run_point(ident, reading, grid, n, k, s, v));
    let mut t = Tally {
        checked: 0,
        skipped: Vec::new(),
        failure_count: 0,
        failures: Vec::new(),
    };
    for o in outcomes {
        match o {
            Outcome::Checked => t.checked += 1,
            Outcome::Skipped(s) => {
                // one entry per (n, k), not per sample
                if !t.skipped.iter().any(|x| x.n == s.n && x.k == s.k) {
                    t.skipped.push(s);
                }
            }
            Outcome::Failed(f) => {
                t.failure_count += 1;
                if t.failures.len() < MAX_FAILURES {
                    t.failures.push(f);
                }
            }
        }
    }
    t
}

/// Verify one identity over the grid.
pub fn verify_identity_with(ident: &Identity, grid: &Grid, mode: ExecMode) -> VerificationReport {
    let printed = tally(ident, &ident.printed, grid, mode);
    let k_hi = if ident.ladder { grid.k_max } else { 0 };
    let failed = printed.failure_count > 0;
    let (status, erratum) = match (&ident.erratum, failed) {
        (Some(e), true) => {
            let corrected = e.corrected.as_ref().map(|r| {
                let t = tally(ident, r, grid, mode);
                ReadingReport {
                    statement: r.statement.to_string(),
                    status: if t.failure_count == 0 { Status::Pass } else { Status::Fail },
                    checked: t.checked,
                    failure_count: t.failure_count,
                    failures: t.failures,
                }
            });
            (
                Status::Quarantined,
                Some(ErratumReport {
                    note: e.note.to_string(),
                    first_failure: printed.failures.first().cloned(),
                    corrected,
                }),
            )
        }
        (_, true) => (Status::Fail, None),
        (_, false) => (Status::Pass, None),
    };
    VerificationReport {
        identity: ident.id.to_string(),
        paper_ref: ident.paper_ref.to_string(),
        statement: ident.printed.statement.to_string(),
        family: ident.family,
        group: ident.group,
        grid: GridReport {
            n_range: [0, grid.n_max],
            k_range: [0, k_hi],
            samples: grid.samples,
            seed: grid.seed,
        },
        status,
        checked: printed.checked,
        skipped: printed.skipped,
        failure_count: printed.failure_count,
        failures: printed.failures,
        erratum,
    }
}

pub fn verify_identity(ident: &Identity, grid: &Grid) -> VerificationReport {
    verify_identity_with(ident, grid, ExecMode::default())
}

/// Which identities a suite run covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Family(FamilyId),
}

pub fn select(registry: &[Identity], suite: Suite) -> Vec<&Identity> {
    registry
        .iter()
        .filter(|i| match suite {
            Suite::All => true,
            Suite::Family(f) => i.family == Some(f) && i.group.in_family_suite(),
        })
        .collect()
}

/// Verify a suite. Identities run one after another; the grid inside each
/// runs in parallel when `mode` is [`ExecMode::Parallel`].
pub fn verify_all_with(registry: &[Identity], suite: Suite, grid: &Grid, mode: ExecMode) -> Vec<VerificationReport> {
    select(registry, suite)
        .into_iter()
        .map(|i| verify_identity_with(i, grid, mode))
        .collect()
}

pub fn verify_all(registry: &[Identity], suite: Suite, grid: &Grid) -> Vec<VerificationReport> {
    verify_all_with(registry, suite, grid, ExecMode::default())
}

/// Aggregate of a suite run.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub quarantined: Vec<String>,
    pub failed: Vec<String>,
}

impl Summary {
    pub fn of(reports: &[VerificationReport]) -> Self {
        let pick = |s: Status| {
            reports
                .iter()
                .filter(|r| r.status == s)
                .map(|r| r.identity.clone())
                .collect::<Vec<_>>()
        };
        Summary {
            total: reports.len(),
            passed: pick(Status::Pass).len(),
            quarantined: pick(Status::Quarantined),
            failed: pick(Status::Fail),
        }
    }

    /// A run is green when nothing fails outside the documented quarantine.
    pub fn ok(&self) -> bool {
        self.failed.is_empty()
    }
}
