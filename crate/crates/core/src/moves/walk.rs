//! Seeded random walks and replayable transcripts.
//!
//! Transcript text, one tab-separated line per step:
//!
//! ```text
//! 0	start	-	O1+ U1+
//! 1	R2Insert	gaps=0/2,overs_first=1,parallel=0,sign=-	O1- O2+ O3+ U3+ U2+ U1-
//! 2	Delta	skip	O1- O2+ O3+ U3+ U2+ U1-
//! # coverage R2Insert=1 skipped=1
//! ```

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::gauss::{DetRng, GaussDiagram, ParseError};

use super::{apply, DeltaDirection, sample_site, MoveError, MoveKind, MoveSite, SiteParseError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranscriptStep {
    pub index: usize,
    pub kind: MoveKind,
    /// `None` when no site of `kind` existed and the step was skipped.
    pub site: Option<MoveSite>,
    pub result: GaussDiagram,
}

/// Applied moves per label (`R3(iv)`, `Delta(forward)`, plain kind names
/// otherwise) plus a `skipped` count.
pub type Coverage = BTreeMap<String, usize>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transcript {
    pub start: GaussDiagram,
    pub steps: Vec<TranscriptStep>,
}

fn label(site: &MoveSite) -> String {
    match site {
        MoveSite::R3 { variant, .. } => format!("R3({variant})"),
        MoveSite::Delta { direction, .. } => match direction {
            DeltaDirection::Forward => "Delta(forward)".to_string(),
            DeltaDirection::Backward => "Delta(backward)".to_string(),
        },
        other => other.kind().to_string(),
    }
}

impl Transcript {
    pub fn end(&self) -> &GaussDiagram {
        self.steps.last().map_or(&self.start, |s| &s.result)
    }

    pub fn coverage(&self) -> Coverage {
        let mut cov = Coverage::new();
        for step in &self.steps {
            let key = step.site.as_ref().map_or_else(|| "skipped".to_string(), label);
            *cov.entry(key).or_default() += 1;
        }
        cov
    }
}

impl fmt::Display for Transcript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "0\tstart\t-\t{}", self.start)?;
        for s in &self.steps {
            match &s.site {
                Some(site) => writeln!(f, "{}\t{}\t{}", s.index, site, s.result)?,
                None => writeln!(f, "{}\t{}\tskip\t{}", s.index, s.kind, s.result)?,
            }
        }
        write!(f, "# coverage")?;
        for (k, v) in self.coverage() {
            write!(f, " {k}={v}")?;
        }
        writeln!(f)
    }
}

/// Take `length` steps from `d`. Each step picks a kind uniformly from
/// `kinds` and then a uniform site of that kind; kinds with no site are
/// logged as skipped.
pub fn random_walk(
    d: &GaussDiagram,
    kinds: &[MoveKind],
    length: usize,
    seed: u64,
) -> (GaussDiagram, Transcript) {
    let mut rng = DetRng::new(seed);
    let mut current = d.clone();
    let mut steps = Vec::with_capacity(length);
    if !kinds.is_empty() {
        for index in 1..=length {
            let kind = kinds[rng.below(kinds.len())];
            let site = sample_site(&current, kind, &mut rng);
            if let Some(site) = &site {
                current = apply(&current, site).expect("sampled sites apply");
            }
            steps.push(TranscriptStep {
                index,
                kind,
                site,
                result: current.clone(),
            });
        }
    }
    let transcript = Transcript {
        start: d.clone(),
        steps,
    };
    (current, transcript)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("line {line}: {source}")]
    Code { line: usize, source: ParseError },
    #[error("line {line}: {source}")]
    Site { line: usize, source: SiteParseError },
    #[error("line {line}: {source}")]
    Move { line: usize, source: MoveError },
    #[error("line {line}: recorded `{recorded}` but replay gives `{actual}`")]
    Mismatch {
        line: usize,
        recorded: String,
        actual: String,
    },
}

/// Re-run a transcript, checking every recorded diagram. Returns the parsed
/// transcript.
pub fn replay(text: &str) -> Result<Transcript, ReplayError> {
    let mut start: Option<GaussDiagram> = None;
    let mut steps = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.trim().is_empty() || raw.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = raw.split('\t').collect();
        let format = |message: &str| ReplayError::Format {
            line,
            message: message.to_string(),
        };
        let [index, kind, params, code] = fields[..] else {
            return Err(format("expected four tab-separated fields"));
        };
        let recorded: GaussDiagram = code.parse().map_err(|source| ReplayError::Code { line, source })?;
        let Some(current) = &start else {
            if kind != "start" || index != "0" {
                return Err(format("transcript must begin with a `0 start` line"));
            }
            start = Some(recorded);
            continue;
        };
        let index: usize = index.parse().map_err(|_| format("bad step index"))?;
        let current = steps.last().map_or(current, |s: &TranscriptStep| &s.result);
        let (kind, site, result) = if params == "skip" {
            let kind: MoveKind = kind.parse().map_err(|e: super::UnknownMoveKind| format(&e.to_string()))?;
            (kind, None, current.clone())
        } else {
            let site: MoveSite = format!("{kind}\t{params}")
                .parse()
                .map_err(|source| ReplayError::Site { line, source })?;
            let next = apply(current, &site).map_err(|source| ReplayError::Move { line, source })?;
            (site.kind(), Some(site), next)
        };
        if result != recorded {
            return Err(ReplayError::Mismatch {
                line,
                recorded: recorded.to_string(),
                actual: result.to_string(),
            });
        }
        steps.push(TranscriptStep {
            index,
            kind,
            site,
            result,
        });
    }
    let start = start.ok_or(ReplayError::Format {
        line: text.lines().count().max(1),
        message: "empty transcript".to_string(),
    })?;
    Ok(Transcript { start, steps })
}
