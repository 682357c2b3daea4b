//! Executable statements over `(S, α)` pairs, corpus runs, and replayable
//! counterexample records.

mod checks;
mod gallery;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::{with_workers, CanonicalTable, Corpus, Filter};
use crate::error::{Error, Result};
use crate::morphisms::{automorphism_group, Automorphism};
use crate::table::{FiniteSemigroup, UnaryMap};

pub use checks::{
    check_lemma21, check_proof_identities, check_thm_main1, check_thm_main2, check_thm_neumann,
    Instance, Lemma21Result, Outcome, Violation,
};
pub use gallery::{gallery_band_b4, gallery_checks, GALLERY_STATEMENT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statement {
    Lemma21a,
    Lemma21b,
    Thm12,
    Thm13,
    Thm14,
    EqPsiAlpha,
    EqAlmost,
    Proof12Identities,
    Conj32,
    Conj33,
    ProblemCancellative,
}

impl Statement {
    pub const ALL: [Statement; 11] = [
        Statement::Lemma21a,
        Statement::Lemma21b,
        Statement::Thm12,
        Statement::Thm13,
        Statement::Thm14,
        Statement::EqPsiAlpha,
        Statement::EqAlmost,
        Statement::Proof12Identities,
        Statement::Conj32,
        Statement::Conj33,
        Statement::ProblemCancellative,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Statement::Lemma21a => "lemma21a",
            Statement::Lemma21b => "lemma21b",
            Statement::Thm12 => "thm12",
            Statement::Thm13 => "thm13",
            Statement::Thm14 => "thm14",
            Statement::EqPsiAlpha => "eq-psialpha",
            Statement::EqAlmost => "eq-almost",
            Statement::Proof12Identities => "proof12-identities",
            Statement::Conj32 => "conj32",
            Statement::Conj33 => "conj33",
            Statement::ProblemCancellative => "problem-cancellative",
        }
    }

    /// Open statements: a violation is a finding, not a bug.
    pub fn is_conjecture(self) -> bool {
        matches!(
            self,
            Statement::Conj32 | Statement::Conj33 | Statement::ProblemCancellative
        )
    }

    /// The corpus a statement is run over unless told otherwise.
    pub fn default_filter(self) -> Filter {
        match self {
            Statement::Thm13 => Filter::Group,
            Statement::Conj33 => Filter::CompletelyRegular,
            Statement::ProblemCancellative => Filter::Cancellative,
            _ => Filter::Inverse,
        }
    }

    pub fn check(self, inst: &Instance, alpha: &Automorphism) -> Outcome {
        match self {
            Statement::Lemma21a => checks::lemma21_forward(inst, alpha),
            Statement::Lemma21b => checks::lemma21_backward(inst, alpha),
            Statement::Thm12 => checks::thm_main1(inst, alpha),
            Statement::Thm13 => checks::thm_neumann(inst, alpha),
            Statement::Thm14 => checks::thm_main2(inst, alpha),
            Statement::EqPsiAlpha => checks::eq_psialpha(inst, alpha),
            Statement::EqAlmost => checks::eq_almost(inst, alpha),
            Statement::Proof12Identities => checks::proof_identities(inst, alpha),
            Statement::Conj32 => checks::conjecture32(inst, alpha),
            Statement::Conj33 => checks::conjecture33(inst, alpha),
            Statement::ProblemCancellative => checks::problem_cancellative(inst, alpha),
        }
    }

    /// Resolves ids, expanding `lemma21` to both directions and `all` to
    /// every statement. Duplicates are dropped; order is kept.
    pub fn parse_list<S: AsRef<str>>(ids: &[S]) -> Result<Vec<Statement>> {
        let mut out: Vec<Statement> = Vec::new();
        for id in ids {
            let expanded: Vec<Statement> = match id.as_ref() {
                "lemma21" => vec![Statement::Lemma21a, Statement::Lemma21b],
                "all" => Statement::ALL.to_vec(),
                other => vec![other.parse()?],
            };
            for s in expanded {
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Statement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Statement::ALL
            .into_iter()
            .find(|st| st.id() == s)
            .ok_or_else(|| Error::UnknownStatement(s.to_string()))
    }
}

/// A failing `(S, α)` with the clause and witnesses. Everything is 1-based,
/// matching the text formats.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CounterexampleRecord {
    pub table: Vec<Vec<usize>>,
    pub alpha: Vec<usize>,
    pub clause: String,
    pub witnesses: Vec<usize>,
}

impl CounterexampleRecord {
    pub fn new(s: &FiniteSemigroup, alpha: &UnaryMap, violation: &Violation) -> Self {
        let plus = |xs: &[usize]| xs.iter().map(|x| x + 1).collect::<Vec<_>>();
        CounterexampleRecord {
            table: s.rows().iter().map(|r| plus(r)).collect(),
            alpha: plus(alpha.images()),
            clause: violation.clause.clone(),
            witnesses: plus(&violation.witnesses),
        }
    }

    fn zero_based(xs: &[usize]) -> Result<Vec<usize>> {
        xs.iter()
            .map(|&x| {
                x.checked_sub(1).ok_or(Error::Parse {
                    line: 1,
                    message: "element numbers start at 1".to_string(),
                })
            })
            .collect()
    }

    pub fn semigroup(&self) -> Result<FiniteSemigroup> {
        let rows = self
            .table
            .iter()
            .map(|r| Self::zero_based(r))
            .collect::<Result<Vec<_>>>()?;
        FiniteSemigroup::from_rows(&rows)
    }

    pub fn alpha(&self) -> Result<UnaryMap> {
        Ok(UnaryMap::new(Self::zero_based(&self.alpha)?))
    }

    fn violation(&self) -> Result<Violation> {
        Ok(Violation {
            clause: self.clause.clone(),
            witnesses: Self::zero_based(&self.witnesses)?,
        })
    }

    /// Re-runs `statement` on the recorded pair; true when the same clause
    /// fails with the same witnesses.
    pub fn replay(&self, statement: Statement) -> Result<bool> {
        self.replay_with(|inst, alpha| statement.check(inst, alpha))
    }

    /// As [`replay`](Self::replay) with an arbitrary check.
    pub fn replay_with(&self, check: impl Fn(&Instance, &Automorphism) -> Outcome) -> Result<bool> {
        let s = self.semigroup()?;
        let alpha = Automorphism::new(&s, self.alpha()?).ok_or(Error::NotAnAutomorphism)?;
        let inst = Instance::new(s);
        let expected = self.violation()?;
        Ok(check(&inst, &alpha).violations().contains(&expected))
    }
}

/// What a replay file holds: enough to re-run one failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplayFile {
    pub statement: String,
    pub record: CounterexampleRecord,
}

impl ReplayFile {
    pub fn replay(&self) -> Result<bool> {
        self.record.replay(self.statement.parse()?)
    }
}

/// Aggregate over all pairs of a corpus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub statement: String,
    /// Pairs examined.
    pub checked: usize,
    pub satisfied_hypotheses: usize,
    pub skipped: usize,
    /// Sorted.
    pub violations: Vec<CounterexampleRecord>,
    pub pass: bool,
}

impl TheoremReport {
    fn empty(statement: &str) -> Self {
        TheoremReport {
            statement: statement.to_string(),
            checked: 0,
            satisfied_hypotheses: 0,
            skipped: 0,
            violations: Vec::new(),
            pass: true,
        }
    }

    fn record(&mut self, s: &FiniteSemigroup, alpha: &UnaryMap, outcome: &Outcome) {
        self.checked += 1;
        if outcome.is_skip() {
            self.skipped += 1;
            return;
        }
        self.satisfied_hypotheses += 1;
        for v in outcome.violations() {
            self.violations.push(CounterexampleRecord::new(s, alpha, v));
        }
    }

    fn merge(&mut self, other: TheoremReport) {
        self.checked += other.checked;
        self.satisfied_hypotheses += other.satisfied_hypotheses;
        self.skipped += other.skipped;
        self.violations.extend(other.violations);
    }

    fn finish(mut self) -> Self {
        self.violations.sort();
        self.pass = self.violations.is_empty();
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }
}

fn check_semigroup(statements: &[Statement], entry: &CanonicalTable) -> Vec<TheoremReport> {
    let s = entry.to_semigroup();
    let automorphisms = automorphism_group(&s);
    let inst = Instance::new(s);
    statements
        .iter()
        .map(|&st| {
            let mut report = TheoremReport::empty(st.id());
            for alpha in &automorphisms {
                report.record(&inst.semigroup, &alpha.perm, &st.check(&inst, alpha));
            }
            report
        })
        .collect()
}

/// Runs each statement over every `(S, α)` with `S` in the corpus. Semigroups
/// are processed in parallel on `workers` threads (`0` = global pool); the
/// reports do not depend on the worker count.
pub fn run_statements(
    statements: &[Statement],
    corpus: &Corpus,
    workers: usize,
) -> Vec<TheoremReport> {
    let per_semigroup: Vec<Vec<TheoremReport>> = with_workers(workers, || {
        corpus
            .entries
            .par_iter()
            .map(|e| check_semigroup(statements, e))
            .collect()
    });
    let mut totals: Vec<TheoremReport> = statements
        .iter()
        .map(|s| TheoremReport::empty(s.id()))
        .collect();
    for reports in per_semigroup {
        for (total, r) in totals.iter_mut().zip(reports) {
            total.merge(r);
        }
    }
    totals.into_iter().map(TheoremReport::finish).collect()
}

pub fn run_statement(statement: Statement, corpus: &Corpus, workers: usize) -> TheoremReport {
    run_statements(&[statement], corpus, workers).remove(0)
}

pub fn run_conjecture32(corpus: &Corpus) -> TheoremReport {
    run_statement(Statement::Conj32, corpus, 0)
}

pub fn run_conjecture33(corpus: &Corpus) -> TheoremReport {
    run_statement(Statement::Conj33, corpus, 0)
}

pub fn run_problem_cancellative(corpus: &Corpus) -> TheoremReport {
    run_statement(Statement::ProblemCancellative, corpus, 0)
}
