//! Seeded property suites behind `vknot verify`.
//!
//! Every case draws from its own [`DetRng`] seeded by [`case_seed`], so a
//! case can be rerun alone and cases can run in any order or in parallel.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::construct::{family, family_tail_chords, figures, FamilySpec};
use crate::gauss::{random_diagram_with, DetRng, GaussDiagram};
use crate::invariants::{
    alternating_sum, crossing_change_alt_sum, pairing, standard_pattern, v1_prime,
    virtualization_alt_sum, v_polys,
};
use crate::laurent::Laurent;
use crate::moves::{
    apply, inverse_site, plant_triangle, random_walk, sample_site, Coverage, MoveKind, MoveSite,
    TriangleKind, Transcript, TranscriptStep,
};

type Poly = Laurent<BigInt>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Invariance,
    Symmetry,
    Additivity,
    FiniteType,
    Delta,
    Welded,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Invariance,
        Suite::Symmetry,
        Suite::Additivity,
        Suite::FiniteType,
        Suite::Delta,
        Suite::Welded,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Invariance => "invariance",
            Suite::Symmetry => "symmetry",
            Suite::Additivity => "additivity",
            Suite::FiniteType => "finite-type",
            Suite::Delta => "delta",
            Suite::Welded => "welded",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub cases: usize,
    pub seed: u64,
    /// Largest chord count of generated diagrams, planted triangles included.
    pub max_chords: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            cases: 1000,
            seed: 0,
            max_chords: 8,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseFailure {
    pub case: usize,
    pub message: String,
    /// A replayable walk transcript when the case involved moves.
    pub transcript: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub cases: usize,
    pub failures: Vec<CaseFailure>,
    pub coverage: Coverage,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Combine per-case results, in case order.
    pub fn collect<I>(suite: Suite, cfg: &SuiteConfig, results: I) -> Self
    where
        I: IntoIterator<Item = Result<Coverage, CaseFailure>>,
    {
        let mut report = SuiteReport {
            suite: suite.to_string(),
            seed: cfg.seed,
            cases: 0,
            failures: Vec::new(),
            coverage: Coverage::new(),
        };
        for r in results {
            report.cases += 1;
            match r {
                Ok(cov) => {
                    for (k, v) in cov {
                        *report.coverage.entry(k).or_default() += v;
                    }
                }
                Err(f) => report.failures.push(f),
            }
        }
        report
    }
}

/// Seed of case `case` in a run seeded with `seed`.
pub fn case_seed(seed: u64, case: usize) -> u64 {
    seed ^ (case as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> SuiteReport {
    SuiteReport::collect(suite, cfg, (0..cfg.cases).map(|c| run_case(suite, cfg, c)))
}

pub fn run_case(suite: Suite, cfg: &SuiteConfig, case: usize) -> Result<Coverage, CaseFailure> {
    let mut rng = DetRng::new(case_seed(cfg.seed, case));
    let fail = |message: String, transcript: Option<String>| CaseFailure {
        case,
        message,
        transcript,
    };
    let check = |ok: bool, what: &dyn Fn() -> String| if ok { Ok(()) } else { Err(fail(what(), None)) };
    let mut cov = Coverage::new();
    let max = cfg.max_chords;
    match suite {
        Suite::Invariance => {
            let d = if max >= 3 && rng.coin() {
                let base = random_diagram_with(rng.below(max - 2), &mut rng);
                plant_triangle(&base, TriangleKind::R3, &mut rng)
            } else {
                random_diagram_with(rng.below(max + 1), &mut rng)
            };
            let length = rng.below(13);
            let (end, t) = random_walk(&d, &MoveKind::REIDEMEISTER, length, rng.next_u64());
            if v_polys::<BigInt>(&end) != v_polys::<BigInt>(&d) {
                return Err(fail("(V1, V2) changed along a Reidemeister walk".into(), Some(t.to_string())));
            }
            cov = t.coverage();
        }
        Suite::Symmetry => {
            let d = random_diagram_with(rng.below(max + 1), &mut rng);
            let (v1, v2) = v_polys::<BigInt>(&d);
            let inv = (v1.substitute_inverse(), v2.substitute_inverse());
            check(v_polys::<BigInt>(&d.reverse()) == inv, &|| format!("reverse of {}", d.to_line()))?;
            check(v_polys::<BigInt>(&d.mirror()) == inv, &|| format!("mirror of {}", d.to_line()))?;
            check(v_polys::<BigInt>(&d.switch()) == (v2.clone(), v1.clone()), &|| {
                format!("switch of {}", d.to_line())
            })?;
        }
        Suite::Additivity => {
            let a = random_diagram_with(rng.below(max / 2 + 1), &mut rng);
            let b = random_diagram_with(rng.below(max - max / 2 + 1), &mut rng);
            let (a1, a2) = v_polys::<BigInt>(&a);
            let (b1, b2) = v_polys::<BigInt>(&b);
            check(v_polys::<BigInt>(&a.concat(&b)) == (a1 + b1, a2 + b2), &|| {
                format!("concat of {} and {}", a.to_line(), b.to_line())
            })?;
        }
        Suite::FiniteType => {
            if case == 0 {
                fixed_finite_type_checks().map_err(|m| fail(m, None))?;
            }
            let n = 3 + rng.below(max.max(3) - 2);
            let d = random_diagram_with(n, &mut rng);
            let three = choose(&mut rng, n, 3);
            check(crossing_change_alt_sum::<BigInt>(&d, &three).is_zero(), &|| {
                format!("crossing-change sum over {three:?} of {}", d.to_line())
            })?;
            if n >= 4 {
                let four = choose(&mut rng, n, 4);
                check(crossing_change_alt_sum::<BigInt>(&d, &four).is_zero(), &|| {
                    format!("crossing-change sum over {four:?} of {}", d.to_line())
                })?;
                let s: BigInt = alternating_sum(&d, &four, GaussDiagram::delete_chords, v1_prime::<BigInt>);
                check(s == BigInt::from(0), &|| {
                    format!("virtualization sum of V1'(1) over {four:?} of {}", d.to_line())
                })?;
            }
        }
        Suite::Delta => {
            let base = random_diagram_with(rng.below(max.saturating_sub(2).max(1)), &mut rng);
            let d = plant_triangle(&base, TriangleKind::Delta, &mut rng);
            let site = sample_site(&d, MoveKind::Delta, &mut rng).expect("planted triangle");
            let after = apply(&d, &site).expect("sampled site");
            let step = one_step(&d, site, &after);
            let transcript = || step.to_string();
            let (x1, x2) = v_polys::<BigInt>(&d);
            let (y1, y2) = v_polys::<BigInt>(&after);
            let diff1: Poly = x1 - y1;
            let diff2: Poly = x2 - y2;
            if diff1.one_norm() != BigInt::from(1) || diff1 != diff2 {
                return Err(fail(
                    format!("Δ-move changed V1 by {diff1} and V2 by {diff2}"),
                    Some(transcript()),
                ));
            }
            let back = inverse_site(&d, &site, &after).expect("Δ has an inverse");
            if apply(&after, &back).as_ref() != Ok(&d) {
                return Err(fail("Δ-move is not undone by its inverse".into(), Some(transcript())));
            }
            cov = step.coverage();
        }
        Suite::Welded => {
            let d = random_diagram_with(2 + rng.below(max.max(2) - 1), &mut rng);
            match sample_site(&d, MoveKind::Welded, &mut rng) {
                None => *cov.entry("skipped".into()).or_default() += 1,
                Some(site) => {
                    let after = apply(&d, &site).expect("sampled site");
                    let step = one_step(&d, site, &after);
                    if v1_prime::<BigInt>(&d) != v1_prime::<BigInt>(&after) {
                        return Err(fail("V1'(1) changed under a welded move".into(), Some(step.to_string())));
                    }
                    cov = step.coverage();
                }
            }
        }
    }
    Ok(cov)
}

fn one_step(d: &GaussDiagram, site: MoveSite, after: &GaussDiagram) -> Transcript {
    Transcript {
        start: d.clone(),
        steps: vec![TranscriptStep {
            index: 1,
            kind: site.kind(),
            site: Some(site),
            result: after.clone(),
        }],
    }
}

fn choose(rng: &mut DetRng, n: usize, k: usize) -> Vec<usize> {
    let mut all: Vec<usize> = (0..n).collect();
    for i in 0..k {
        let j = i + rng.below(n - i);
        all.swap(i, j);
    }
    all.truncate(k);
    all.sort_unstable();
    all
}

fn fixed_finite_type_checks() -> Result<(), String> {
    let two = figures::two_chord();
    if crossing_change_alt_sum::<BigInt>(&two, &[0, 1]) != Poly::one() {
        return Err(format!("size-2 crossing-change sum of {two} is not 1"));
    }
    let d1 = standard_pattern(1).to_diagram();
    let s: BigInt = alternating_sum(&d1, &[0, 1, 2], GaussDiagram::delete_chords, v1_prime::<BigInt>);
    if s != BigInt::from(1) || pairing::<BigInt>(standard_pattern(1), &d1) != BigInt::from(1) {
        return Err(format!("size-3 virtualization sum of V1'(1) on {d1} is {s}, not 1"));
    }
    for n in 0..=8u32 {
        let spec = FamilySpec::k(n as usize);
        let sum = virtualization_alt_sum::<BigInt>(&family(spec), &family_tail_chords(spec));
        if sum != Poly::t_minus_one_pow(n) {
            return Err(format!("tail sum of {spec} is {sum}"));
        }
    }
    Ok(())
}
