use std::path::PathBuf;
use std::sync::Arc;

use rayon::prelude::*;

use kercoker::exactla::Field;
use kercoker::homdim::{gldim_compare, minimal_resolution, ProjDim, DEFAULT_CUTOFF};
use kercoker::projcat::sample::{random_arrow, random_idempotent, random_morphism, random_object, trial_rng};
use kercoker::projcat::{split_idempotent, star_dual};
use kercoker::quiverrep::{simple_of, PathAlgebra};
use kercoker::theorem::{construct_0_cokernel, construct_n_cokernel, verify_0_cokernel, verify_n_cokernel, TheoremError};
use kercoker::zoo;

use crate::algebra_file::{parse_algebra_file, SpecError};
use crate::report::{
    AlgebraSummary, CommandInfo, DemoEntry, Precondition, ResolutionSummary, Results, RunReport, TheoremResults, TrialFailure,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Gldim { file: PathBuf },
    CheckTheorem { file: PathBuf },
    Resolve { file: PathBuf },
    Demo,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Gldim { .. } => "gldim",
            Command::CheckTheorem { .. } => "check-theorem",
            Command::Resolve { .. } => "resolve",
            Command::Demo => "demo",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    /// Falls back to the file's `cap cutoff`, then to the default.
    pub cutoff: Option<usize>,
    pub n: Option<usize>,
    pub trials: usize,
    pub seed: u64,
    pub trace: bool,
}

impl Default for Options {
    fn default() -> Options {
        Options {
            cutoff: None,
            n: None,
            trials: 100,
            seed: 0,
            trace: false,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Spec(#[from] SpecError),
    #[error("{0}")]
    Usage(String),
}

enum Outcome {
    Verified { fast_path: bool },
    Failed { reason: String, trace: Option<String> },
}

fn n_trial(algebra: &Arc<PathAlgebra>, n: usize, seed: u64, t: u64) -> Outcome {
    let a0 = random_arrow(algebra, &mut trial_rng(seed, t));
    match construct_n_cokernel(&a0, n) {
        Ok((chain, trace)) => {
            let broken: Vec<String> = trace.check_identities().into_iter().filter(|c| !c.holds).map(|c| c.name).collect();
            if !broken.is_empty() {
                Outcome::Failed {
                    reason: format!("identities fail: {}", broken.join("; ")),
                    trace: Some(trace.to_string()),
                }
            } else if !verify_n_cokernel(&a0, chain.morphisms()) {
                Outcome::Failed {
                    reason: "output is not an n-cokernel".into(),
                    trace: Some(trace.to_string()),
                }
            } else {
                Outcome::Verified { fast_path: trace.fast_path }
            }
        }
        Err(TheoremError::LiftFailure { step, trace }) => Outcome::Failed {
            reason: format!("no lift exists at step {step}"),
            trace: Some(trace.to_string()),
        },
        Err(e) => Outcome::Failed {
            reason: e.to_string(),
            trace: Some(format!("construction trace (n = {n})\n  a_0: {a0}\n")),
        },
    }
}

fn zero_trial(algebra: &Arc<PathAlgebra>, seed: u64, t: u64) -> Outcome {
    let a0 = random_arrow(algebra, &mut trial_rng(seed, t));
    match construct_0_cokernel(&a0) {
        Ok((q, m, _)) if verify_0_cokernel(&a0, &q, &m) => Outcome::Verified { fast_path: false },
        Ok((_, _, trace)) => Outcome::Failed {
            reason: "output is not a 0-cokernel".into(),
            trace: Some(trace.to_string()),
        },
        Err(e) => Outcome::Failed {
            reason: e.to_string(),
            trace: Some(format!("construction trace (n = 0)\n  a_0: {a0}\n")),
        },
    }
}

/// Runs `trials` seeded constructions. Trials run in parallel; results are
/// collected in trial order.
pub fn check_theorem(algebra: &Arc<PathAlgebra>, n: usize, trials: usize, seed: u64, cutoff: usize, trace: bool) -> TheoremResults {
    let gldim = gldim_compare(algebra, cutoff).algebra.gldim;
    let holds = matches!(gldim, ProjDim::Finite(g) if g <= n + 1);
    let outcomes: Vec<Outcome> = (0..trials as u64)
        .into_par_iter()
        .map(|t| if n == 0 { zero_trial(algebra, seed, t) } else { n_trial(algebra, n, seed, t) })
        .collect();
    let mut failures = Vec::new();
    let mut first_failure_trace = None;
    let mut fast = 0;
    for (t, o) in outcomes.into_iter().enumerate() {
        match o {
            Outcome::Verified { fast_path } => fast += usize::from(fast_path),
            Outcome::Failed { reason, trace: tr } => {
                if trace && first_failure_trace.is_none() {
                    first_failure_trace = tr.map(|s| format!("first failure (trial {t}):\n{s}"));
                }
                failures.push(TrialFailure { trial: t as u64, reason });
            }
        }
    }
    TheoremResults {
        mode: if n == 0 { "0-cokernel" } else { "n-cokernel" }.to_string(),
        n,
        precondition: Precondition {
            gldim,
            required_at_most: n + 1,
            holds,
        },
        trials,
        verified: trials - failures.len(),
        fast_path: (n == 1).then_some(fast),
        failures,
        first_failure_trace,
    }
}

impl TheoremResults {
    pub fn passed(&self) -> bool {
        self.precondition.holds && self.failures.is_empty()
    }
}

fn resolve(algebra: &Arc<PathAlgebra>, cutoff: usize) -> Vec<ResolutionSummary> {
    (0..algebra.vertex_count())
        .map(|v| {
            let r = minimal_resolution(&Arc::new(simple_of(algebra, v)), cutoff);
            ResolutionSummary {
                simple: algebra.quiver().vertices()[v].clone(),
                projectives: r.projectives.iter().map(|p| p.multiplicities().to_vec()).collect(),
                differentials: r.differentials.iter().map(|d| d.to_string()).collect(),
                pdim: r.pdim(),
                minimal: r.minimal,
                exact: r.is_exact(),
            }
        })
        .collect()
}

/// The `n` the construction is run with on an algebra of global dimension `g`.
fn n_for(gldim: ProjDim) -> Option<usize> {
    match gldim {
        ProjDim::Finite(g) if g <= 1 => Some(0),
        ProjDim::Finite(g) => Some(g - 1),
        ProjDim::AboveCutoff => None,
    }
}

fn demo(options: &Options, cutoff: usize) -> Vec<DemoEntry> {
    zoo::all(Field::Rational)
        .into_iter()
        .map(|(name, alg)| {
            let gldim = gldim_compare(&alg, cutoff);
            let theorem = n_for(gldim.algebra.gldim).map(|n| check_theorem(&alg, n, options.trials, options.seed, cutoff, options.trace));
            let checks: Vec<(bool, bool)> = (0..options.trials as u64)
                .into_par_iter()
                .map(|t| {
                    let mut rng = trial_rng(options.seed, t);
                    let e = random_idempotent(&alg, &mut rng);
                    let split = split_idempotent(&e)
                        .map(|s| s.f.compose(&s.g).ok() == Some(e.clone()) && s.g.compose(&s.f).map(|m| m.is_identity()).unwrap_or(false))
                        .unwrap_or(false);
                    let x = random_object(&alg, &mut rng);
                    let y = random_object(&alg, &mut rng);
                    let z = random_object(&alg, &mut rng);
                    let phi = random_morphism(&x, &y, &mut rng);
                    let psi = random_morphism(&y, &z, &mut rng);
                    let involution = star_dual(&star_dual(&phi)) == phi;
                    let contravariant = psi
                        .compose(&phi)
                        .ok()
                        .map(|c| star_dual(&c))
                        .zip(star_dual(&phi).compose(&star_dual(&psi)).ok())
                        .is_some_and(|(l, r)| l == r);
                    (split, involution && contravariant)
                })
                .collect();
            DemoEntry {
                algebra: AlgebraSummary::of(name, &alg),
                gldim,
                theorem,
                idempotents_split: checks.iter().filter(|c| c.0).count(),
                duality_checks: checks.iter().filter(|c| c.1).count(),
                trials: options.trials,
            }
        })
        .collect()
}

fn load(file: &PathBuf) -> Result<(String, Arc<PathAlgebra>, Option<usize>), CliError> {
    let spec = parse_algebra_file(file)?;
    let name = file.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    Ok((name, spec.build()?, spec.cutoff))
}

/// Executes one command. The report is a pure function of the file contents,
/// the command and the options.
pub fn run(command: &Command, options: &Options) -> Result<RunReport, CliError> {
    if options.trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let mut info = CommandInfo {
        name: command.name().to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        n: None,
        trials: None,
        cutoff: options.cutoff.unwrap_or(DEFAULT_CUTOFF),
        trace: options.trace,
    };
    let (algebra, results, passed) = match command {
        Command::Gldim { file } => {
            let (name, alg, file_cutoff) = load(file)?;
            info.cutoff = options.cutoff.or(file_cutoff).unwrap_or(DEFAULT_CUTOFF);
            let cmp = gldim_compare(&alg, info.cutoff);
            let passed = cmp.equal;
            (Some(AlgebraSummary::of(&name, &alg)), Results::Gldim(cmp), passed)
        }
        Command::CheckTheorem { file } => {
            let n = options.n.ok_or_else(|| CliError::Usage("check-theorem needs --n".into()))?;
            let (name, alg, file_cutoff) = load(file)?;
            info.cutoff = options.cutoff.or(file_cutoff).unwrap_or(DEFAULT_CUTOFF);
            info.n = Some(n);
            info.trials = Some(options.trials);
            let t = check_theorem(&alg, n, options.trials, options.seed, info.cutoff, options.trace);
            let passed = t.passed();
            (Some(AlgebraSummary::of(&name, &alg)), Results::Theorem(t), passed)
        }
        Command::Resolve { file } => {
            let (name, alg, file_cutoff) = load(file)?;
            info.cutoff = options.cutoff.or(file_cutoff).unwrap_or(DEFAULT_CUTOFF);
            let list = resolve(&alg, info.cutoff);
            let passed = list.iter().all(|r| r.exact && r.minimal);
            (Some(AlgebraSummary::of(&name, &alg)), Results::Resolve(list), passed)
        }
        Command::Demo => {
            info.trials = Some(options.trials);
            let entries = demo(options, info.cutoff);
            let passed = entries.iter().all(|e| {
                e.gldim.equal
                    && e.theorem.as_ref().is_none_or(TheoremResults::passed)
                    && e.idempotents_split == e.trials
                    && e.duality_checks == e.trials
            });
            (None, Results::Demo(entries), passed)
        }
    };
    Ok(RunReport {
        algebra,
        command: info,
        seed: options.seed,
        results,
        passed,
    })
}
