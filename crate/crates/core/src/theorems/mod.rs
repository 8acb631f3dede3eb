//! Isomorphism-theorem verifiers, the claim registry and the sweep runner.
//!
//! A sweep enumerates partial groups over a catalog, then runs every selected
//! claim on every instance. Each claim quantifies over its own subjects
//! (the instance itself, its partial subgroups, pairs of them, or homs into
//! other small instances) and stops at the first counterexample, which is
//! recorded with enough information to rebuild and re-run that one subject.

pub mod claims;
pub mod instances;
pub mod iso;

use std::cell::OnceCell;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cli_io::{catalog::DEFAULT_CATALOG, resolve_group};
use crate::elemset::{Elem, ElemSet};
use crate::morphisms::{check_inverse_hom, enumerate_partial_homs, is_partial_hom, HomBudget, PartialHom};
use crate::partial_core::{Freeness, PartialGroup};
use crate::substructures::{candidate_subsets, is_normal_partial, partial_subgroups, PartialSubgroup};
use crate::witness::Check;

pub use claims::{claim_by_id, resolve_claims, Checker, ClaimId, Domain, Level, UnknownClaim, REGISTRY};
pub use instances::{enumerate_instances, Instance, InstanceSpec};
pub use iso::{first_iso_check, second_iso_check, third_iso_check, InducedMap, KernelChoice, TheoremError};

/// Sweep parameters; serialized verbatim into report documents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub max_order: usize,
    pub max_defect: usize,
    pub catalog: Vec<String>,
    pub freeness: Freeness,
    /// Carriers up to this size have all their subsets swept.
    pub subset_cap: usize,
    /// Hom claims run between instances whose ambient group has at most this order
    pub hom_max_order: usize,
    /// and whose carrier has at most this many elements.
    pub hom_max_carrier: usize,
    pub timings: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_order: 8,
            max_defect: 4,
            catalog: DEFAULT_CATALOG.iter().map(|s| s.to_string()).collect(),
            freeness: Freeness::Strict,
            subset_cap: 8,
            hom_max_order: 6,
            hom_max_carrier: 8,
            timings: false,
        }
    }
}

impl SweepConfig {
    fn hom_eligible(&self, g: &PartialGroup) -> bool {
        g.parent().order() <= self.hom_max_order && g.carrier().len() <= self.hom_max_carrier
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Verified,
    Falsified,
    Skipped,
}

/// What a witness is about, in enough detail to re-run the check on it alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Subject {
    Instance,
    Subset { h: Vec<Elem> },
    Pair { h: Vec<Elem>, k: Vec<Elem> },
    Hom { target: InstanceSpec, images: Vec<Elem> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub subject: Subject,
    pub detail: String,
    pub elements: Vec<Elem>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim: String,
    pub level: Level,
    pub instance: InstanceSpec,
    pub status: Status,
    /// Number of subjects checked (up to and including a failing one).
    pub subjects: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub verified: usize,
    pub falsified: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(reports: &[ClaimReport]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            match r.status {
                Status::Verified => s.verified += 1,
                Status::Falsified => s.falsified += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s
    }
}

/// Resolves the configured catalog names to tables.
pub fn load_catalog(config: &SweepConfig) -> Result<Vec<(String, Arc<GroupTable>)>, crate::cli_io::CliError> {
    config
        .catalog
        .iter()
        .map(|name| Ok((name.clone(), Arc::new(resolve_group(name)?))))
        .collect()
}

use crate::group_kernel::GroupTable;

/// Runs `claims` over `instances`. Output is claim-major, then instance order,
/// independent of scheduling.
pub fn run_claims(claims: &[&'static ClaimId], instances: &[Instance], config: &SweepConfig) -> Vec<ClaimReport> {
    let pool: Vec<usize> = (0..instances.len())
        .filter(|&i| config.hom_eligible(&instances[i].group))
        .collect();
    let per_instance: Vec<Vec<ClaimReport>> = instances
        .par_iter()
        .map(|inst| {
            let ctx = Context::new(inst, instances, &pool, config);
            claims.iter().map(|c| ctx.run(c)).collect()
        })
        .collect();
    let mut columns: Vec<_> = per_instance.into_iter().map(Vec::into_iter).collect();
    let mut out = Vec::with_capacity(claims.len() * instances.len());
    for _ in claims {
        for col in &mut columns {
            out.push(col.next().expect("one report per claim"));
        }
    }
    out
}

type HomGroups<'a> = Vec<(usize, Vec<PartialHom<'a>>)>;

struct Context<'a> {
    inst: &'a Instance,
    all: &'a [Instance],
    pool: &'a [usize],
    config: &'a SweepConfig,
    candidates: OnceCell<Vec<ElemSet>>,
    subgroups: OnceCell<Vec<ElemSet>>,
    normal: OnceCell<Vec<ElemSet>>,
    homs: OnceCell<Option<HomGroups<'a>>>,
}

enum Outcome {
    Done { subjects: usize, failure: Option<(Subject, crate::witness::Counterexample)> },
    Skipped(&'static str),
}

impl<'a> Context<'a> {
    fn new(inst: &'a Instance, all: &'a [Instance], pool: &'a [usize], config: &'a SweepConfig) -> Self {
        Context {
            inst,
            all,
            pool,
            config,
            candidates: OnceCell::new(),
            subgroups: OnceCell::new(),
            normal: OnceCell::new(),
            homs: OnceCell::new(),
        }
    }

    fn g(&self) -> &'a PartialGroup {
        &self.inst.group
    }

    fn candidates(&self) -> &[ElemSet] {
        self.candidates
            .get_or_init(|| candidate_subsets(self.g(), self.config.subset_cap))
    }

    fn subgroups(&self) -> &[ElemSet] {
        self.subgroups
            .get_or_init(|| partial_subgroups(self.g(), self.config.subset_cap))
    }

    fn normal(&self) -> &[ElemSet] {
        self.normal.get_or_init(|| {
            self.subgroups()
                .iter()
                .copied()
                .filter(|&h| is_normal_partial(&sub(self.g(), h)).is_normal())
                .collect()
        })
    }

    fn homs(&self) -> Option<&HomGroups<'a>> {
        self.homs
            .get_or_init(|| {
                let g = self.g();
                if !self.config.hom_eligible(g) {
                    return None;
                }
                let budget = HomBudget {
                    max_carrier: self.config.hom_max_carrier,
                };
                Some(
                    self.pool
                        .iter()
                        .map(|&t| {
                            let homs = enumerate_partial_homs(g, &self.all[t].group, budget)
                                .expect("pool respects the budget");
                            (t, homs)
                        })
                        .collect(),
                )
            })
            .as_ref()
    }

    fn run(&self, claim: &'static ClaimId) -> ClaimReport {
        let start = Instant::now();
        let outcome = self.evaluate(claim);
        let elapsed_ms = self.config.timings.then(|| start.elapsed().as_secs_f64() * 1e3);
        let mut report = ClaimReport {
            claim: claim.id.to_string(),
            level: claim.level,
            instance: self.inst.spec.clone(),
            status: Status::Verified,
            subjects: 0,
            reason: None,
            witness: None,
            elapsed_ms,
        };
        match outcome {
            Outcome::Skipped(reason) => {
                report.status = Status::Skipped;
                report.reason = Some(reason.to_string());
            }
            Outcome::Done { subjects, failure } => {
                report.subjects = subjects;
                if subjects == 0 {
                    report.status = Status::Skipped;
                    report.reason = Some("no applicable subjects".to_string());
                }
                if let Some((subject, ce)) = failure {
                    report.status = Status::Falsified;
                    report.witness = Some(Witness {
                        subject,
                        detail: ce.detail,
                        elements: ce.elements,
                    });
                }
            }
        }
        report
    }

    fn evaluate(&self, claim: &'static ClaimId) -> Outcome {
        let g = self.g();
        let sets: Vec<ElemSet>;
        let pairs: Vec<(ElemSet, ElemSet)>;
        match claim.domain {
            Domain::Instance => sweep([Subject::Instance], |s| run_subject(claim, g, s)),
            Domain::Subsets => sweep(self.candidates().iter().map(subset), |s| run_subject(claim, g, s)),
            Domain::PartialSubgroups | Domain::NormalSubgroups | Domain::AbelianSubgroups => {
                sets = match claim.domain {
                    Domain::NormalSubgroups => self.normal().to_vec(),
                    Domain::AbelianSubgroups if !g.is_abelian() => return Outcome::Skipped("instance is not abelian"),
                    _ => self.subgroups().to_vec(),
                };
                sweep(sets.iter().map(subset), |s| run_subject(claim, g, s))
            }
            Domain::SubgroupPairs | Domain::NormalPairs | Domain::NormalChains => {
                let (left, right) = match claim.domain {
                    Domain::SubgroupPairs => (self.subgroups(), self.subgroups()),
                    Domain::NormalPairs => (self.subgroups(), self.normal()),
                    _ => (self.normal(), self.normal()),
                };
                let chain = claim.domain == Domain::NormalChains;
                pairs = left
                    .iter()
                    .flat_map(|&h| right.iter().map(move |&k| (h, k)))
                    .filter(|&(h, k)| !chain || k.is_subset(h))
                    .collect();
                sweep(
                    pairs.iter().map(|&(h, k)| Subject::Pair {
                        h: h.to_vec(),
                        k: k.to_vec(),
                    }),
                    |s| run_subject(claim, g, s),
                )
            }
            Domain::Homs | Domain::InvertibleHoms => {
                let Some(groups) = self.homs() else {
                    return Outcome::Skipped("instance is outside the hom sweep");
                };
                let Checker::Hom(check) = claim.checker else {
                    unreachable!("hom domains use hom checkers")
                };
                let invertible_only = claim.domain == Domain::InvertibleHoms;
                let mut subjects = 0;
                for (t, homs) in groups {
                    for f in homs {
                        if invertible_only && check_inverse_hom(f).is_err() {
                            continue;
                        }
                        subjects += 1;
                        if let Err(ce) = check(f) {
                            let subject = Subject::Hom {
                                target: self.all[*t].spec.clone(),
                                images: f.image_tuple(),
                            };
                            return Outcome::Done {
                                subjects,
                                failure: Some((subject, ce)),
                            };
                        }
                    }
                }
                Outcome::Done { subjects, failure: None }
            }
        }
    }
}

fn subset(h: &ElemSet) -> Subject {
    Subject::Subset { h: h.to_vec() }
}

fn sweep(subjects: impl IntoIterator<Item = Subject>, check: impl Fn(&Subject) -> Check) -> Outcome {
    let mut n = 0;
    for s in subjects {
        n += 1;
        if let Err(ce) = check(&s) {
            return Outcome::Done {
                subjects: n,
                failure: Some((s, ce)),
            };
        }
    }
    Outcome::Done { subjects: n, failure: None }
}

fn sub(g: &PartialGroup, h: ElemSet) -> PartialSubgroup<'_> {
    PartialSubgroup::new(g, h).expect("swept sets are partial subgroups")
}

fn as_set(v: &[Elem]) -> ElemSet {
    v.iter().copied().collect()
}

/// Runs one claim on one non-hom subject. Subsets that are not partial
/// subgroups are reported as counterexamples, not panics.
fn run_subject(claim: &ClaimId, g: &PartialGroup, subject: &Subject) -> Check {
    use crate::witness::Counterexample;
    let partial = |v: &[Elem]| {
        let set = as_set(v);
        PartialSubgroup::new(g, set)
            .map_err(|e| Counterexample::new(format!("subject is not a partial subgroup: {e}"), set.iter()))
    };
    match (claim.checker, subject) {
        (Checker::Instance(f), Subject::Instance) => f(g),
        (Checker::Subset(f), Subject::Subset { h }) => {
            let set = as_set(h);
            if !set.is_subset(g.carrier()) {
                return Err(Counterexample::new("subject is not inside the carrier", set.iter()));
            }
            f(g, set)
        }
        (Checker::Subgroup(f), Subject::Subset { h }) => f(&partial(h)?),
        (Checker::Pair(f), Subject::Pair { h, k }) => f(&partial(h)?, &partial(k)?),
        _ => Err(Counterexample::new("subject does not fit the claim", [])),
    }
}

#[derive(Debug, Error)]
pub enum RecheckError {
    #[error(transparent)]
    UnknownClaim(#[from] UnknownClaim),
    #[error("report has no witness")]
    NoWitness,
    #[error("cannot rebuild {0}: {1}")]
    Rebuild(String, String),
    #[error("witness map is not a homomorphism: {0}")]
    NotHom(String),
}

fn rebuild(spec: &InstanceSpec, mode: Freeness) -> Result<PartialGroup, RecheckError> {
    let fail = |e: &dyn std::fmt::Display| RecheckError::Rebuild(spec.to_string(), e.to_string());
    let table = resolve_group(&spec.group).map_err(|e| fail(&e))?;
    spec.build_in(Arc::new(table), mode).map_err(|e| fail(&e))
}

/// Rebuilds the instance and witness subject of a report and runs the claim
/// on that subject alone.
pub fn recheck(report: &ClaimReport, config: &SweepConfig) -> Result<Check, RecheckError> {
    let claim = claim_by_id(&report.claim)?;
    let witness = report.witness.as_ref().ok_or(RecheckError::NoWitness)?;
    let g = rebuild(&report.instance, config.freeness)?;
    match (&witness.subject, claim.checker) {
        (Subject::Hom { target, images }, Checker::Hom(check)) => {
            let t = rebuild(target, config.freeness)?;
            let f = is_partial_hom(&g, &t, images).map_err(|v| RecheckError::NotHom(format!("{v:?}")))?;
            Ok(check(&f))
        }
        (subject, _) => Ok(run_subject(claim, &g, subject)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_config(max_order: usize) -> SweepConfig {
        SweepConfig {
            max_order,
            catalog: ["Z2", "Z3", "Z4", "Z2xZ2", "Z6", "S3"].iter().map(|s| s.to_string()).collect(),
            ..SweepConfig::default()
        }
    }

    fn instances(config: &SweepConfig) -> Vec<Instance> {
        let cat = load_catalog(config).unwrap();
        enumerate_instances(&cat, config.max_order, config.max_defect, config.freeness).unwrap()
    }

    #[test]
    fn assoc_on_order_two() {
        let config = small_config(2);
        let inst = instances(&config);
        let reports = run_claims(&resolve_claims(&["P3.2-assoc"]).unwrap(), &inst, &config);
        assert_eq!(reports.len(), 3);
        assert!(reports.iter().all(|r| r.status == Status::Verified && r.subjects == 1));
    }

    #[test]
    fn deterministic_and_rechecked() {
        let config = small_config(6);
        let inst = instances(&config);
        let claims = resolve_claims(&["all"]).unwrap();
        let a = run_claims(&claims, &inst, &config);
        let b = run_claims(&claims, &inst, &config);
        assert_eq!(a, b);
        assert_eq!(a.len(), claims.len() * inst.len());
        for r in a.iter().filter(|r| r.status == Status::Falsified) {
            assert_eq!(r.level, Level::Literal, "{} on {}", r.claim, r.instance);
            let again = recheck(r, &config).unwrap();
            assert!(again.is_err(), "{} on {} did not reproduce", r.claim, r.instance);
        }
        for c in &claims {
            assert!(
                a.iter().any(|r| r.claim == c.id && r.status != Status::Skipped),
                "{} never ran",
                c.id
            );
        }
    }

    #[test]
    fn literal_claims_fail_on_the_running_instance() {
        let config = small_config(6);
        let inst: Vec<Instance> = instances(&config)
            .into_iter()
            .filter(|i| i.spec.to_string() == "Z6:0,3:0,2")
            .collect();
        assert_eq!(inst.len(), 1);
        let reports = run_claims(&resolve_claims(&["all"]).unwrap(), &inst, &config);
        let status = |id: &str| reports.iter().find(|r| r.claim == id).unwrap().status;
        assert_eq!(status("P4.3-decomposition"), Status::Falsified);
        assert_eq!(status("P3.2-assoc"), Status::Verified);
        assert_eq!(status("T1-first-iso"), Status::Verified);
        assert_eq!(status("T1-first-iso-raw"), Status::Falsified);
    }
}
