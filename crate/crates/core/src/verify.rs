// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Randomized verification run: enumerated pipelines against closed forms,
//! extraction optimality, probability orderings, the plateau and the slope
//! breakpoints of strategy 4.
//!
//! The closed forms are injected through [`ClosedForms`] so that a
//! corrupted comparator can be shown to fail the run.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::entanglement::{concurrence_pure, epr_fidelity, BellState, PairState};
use crate::error::Result;
use crate::measurement_bases::basis_concurrence;
use crate::strategies::{
    basic_deterministic_swap, closed_form, special_x_values, strategy1, strategy2, strategy3,
    strategy4, SwapInputs,
};
use crate::tolerance;
use crate::use_extraction::{extract_epr, Side};

/// Analytic comparators used by the run.
#[derive(Clone, Copy)]
pub struct ClosedForms {
    pub extraction: fn(f64) -> f64,
    pub p_s1: fn(&SwapInputs) -> f64,
    pub p_s2: fn(&SwapInputs) -> f64,
    pub p_s3: fn(&SwapInputs) -> f64,
    pub p_s4: fn(&SwapInputs, f64) -> f64,
}

impl Default for ClosedForms {
    fn default() -> Self {
        ClosedForms {
            extraction: closed_form::extraction_probability,
            p_s1: closed_form::p_s1,
            p_s2: closed_form::p_s2,
            p_s3: closed_form::p_s3,
            p_s4: closed_form::p_s4,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub trials: usize,
    pub seed: u64,
    /// Basis parameters sampled per input for strategy 4.
    pub x_samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            trials: 1000,
            seed: 0,
            x_samples: 5,
        }
    }
}

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub samples: usize,
    pub max_deviation: f64,
    pub tolerance: f64,
    /// First failing tuple, if any.
    pub counterexample: Option<String>,
}

impl Check {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Check {
            name,
            samples: 0,
            max_deviation: 0.0,
            tolerance,
            counterexample: None,
        }
    }

    /// Records a deviation that must not exceed the tolerance.
    fn record(&mut self, deviation: f64, context: impl FnOnce() -> String) {
        self.samples += 1;
        let deviation = if deviation.is_nan() {
            f64::INFINITY
        } else {
            deviation
        };
        self.max_deviation = self.max_deviation.max(deviation);
        if deviation > self.tolerance && self.counterexample.is_none() {
            self.counterexample = Some(format!("{} (deviation {deviation:e})", context()));
        }
    }

    /// Records a condition that must hold.
    fn require(&mut self, ok: bool, context: impl FnOnce() -> String) {
        self.samples += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(context());
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub checks: Vec<Check>,
    /// Observations that do not gate the run.
    pub notes: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn first_counterexample(&self) -> Option<(&'static str, &str)> {
        self.checks
            .iter()
            .find_map(|c| c.counterexample.as_deref().map(|s| (c.name, s)))
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "verification: {} trials, seed {}",
            self.config.trials, self.config.seed
        )?;
        for c in &self.checks {
            writeln!(
                f,
                "  [{}] {:<24} samples {:>7}  max deviation {:.3e}  (tolerance {:.0e})",
                if c.passed() { "ok" } else { "FAIL" },
                c.name,
                c.samples,
                c.max_deviation,
                c.tolerance
            )?;
            if let Some(ce) = &c.counterexample {
                writeln!(f, "        counterexample: {ce}")?;
            }
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

/// Slope change of `f` across `x`, by one-sided finite differences.
pub fn slope_jump(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    let left = (f(x) - f(x - h)) / h;
    let right = (f(x + h) - f(x)) / h;
    (right - left).abs()
}

fn random_inputs(rng: &mut ChaCha8Rng) -> SwapInputs {
    let alpha = rng.random_range(0.0..=FRAC_1_SQRT_2);
    let gamma = rng.random_range(0.0..=FRAC_1_SQRT_2);
    SwapInputs::new(alpha, gamma).expect("sampled in range")
}

/// Inputs away from the degenerate corners, where both breakpoints are sharp.
fn generic_inputs(rng: &mut ChaCha8Rng) -> SwapInputs {
    loop {
        let alpha: f64 = rng.random_range(0.25..=0.65);
        let gamma = rng.random_range(0.25..=0.65);
        if (alpha - gamma).abs() >= 0.05 {
            return SwapInputs::new(alpha, gamma).expect("sampled in range");
        }
    }
}

pub fn run(config: &VerifyConfig, forms: &ClosedForms) -> Result<VerifyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut extraction = Check::new("extraction optimality", tolerance::ORACLE);
    let mut s1 = Check::new("strategy 1 closed form", tolerance::ORACLE);
    let mut s2 = Check::new("strategy 2 closed form", tolerance::ORACLE);
    let mut s3 = Check::new("strategy 3 closed form", tolerance::ORACLE);
    let mut s4 = Check::new("strategy 4 closed form", tolerance::ORACLE);
    let mut order = Check::new("probability ordering", tolerance::STRUCTURAL);
    let mut plateau = Check::new("plateau and matching", tolerance::ORACLE);
    let mut breakpoints = Check::new("slope breakpoints", 0.1);
    let mut limit = Check::new("deterministic limit", tolerance::STRUCTURAL);
    let mut s3_above_s1 = 0usize;

    // deterministic limit α = γ = x = 1/√2
    let h = FRAC_1_SQRT_2;
    let maximal = SwapInputs::new(h, h)?;
    let basic = basic_deterministic_swap(&maximal)?;
    for b in &basic.branches {
        limit.record((b.probability - 0.25).abs(), || {
            format!("basic branch {}", b.outcome)
        });
    }
    for (name, value, expected) in [
        ("strategy 1", strategy1(&maximal)?.simulated_success, 1.0),
        ("strategy 2", strategy2(&maximal)?.simulated_success, 1.0),
        ("strategy 3", strategy3(&maximal)?.simulated_success, 0.25),
        ("strategy 4", strategy4(&maximal, h)?.simulated_success, 1.0),
    ] {
        limit.record((value - expected).abs(), || {
            format!("{name} at α = γ = x = 1/√2")
        });
    }

    for _ in 0..config.trials {
        // extraction on a random pair, both sides
        let u: f64 = rng.random_range(0.0..=1.0);
        let v = (1.0 - u * u).sqrt();
        let pair = PairState::psi(u, v)?;
        let c = pair.concurrence().value();
        for side in [Side::First, Side::Second] {
            let r = extract_epr(&pair, side)?;
            extraction.record(
                (r.success_probability - (forms.extraction)(c)).abs(),
                || format!("u = {u}, v = {v}, side {side:?}"),
            );
            if let Some(s) = &r.success_state {
                let f = epr_fidelity(s, BellState::PsiPlus)?;
                extraction.record(1.0 - f, || format!("success fidelity at u = {u}"));
            }
            if let Some(s) = &r.failure_state {
                let cf = concurrence_pure(s)?.value();
                extraction.record(cf, || format!("failure concurrence at u = {u}"));
            }
        }

        let inp = random_inputs(&mut rng);
        let tuple = |extra: &str| format!("α = {}, γ = {}{extra}", inp.alpha(), inp.gamma());
        s1.record(
            (strategy1(&inp)?.simulated_success - (forms.p_s1)(&inp)).abs(),
            || tuple(""),
        );
        s2.record(
            (strategy2(&inp)?.simulated_success - (forms.p_s2)(&inp)).abs(),
            || tuple(""),
        );
        s3.record(
            (strategy3(&inp)?.simulated_success - (forms.p_s3)(&inp)).abs(),
            || tuple(""),
        );
        for _ in 0..config.x_samples {
            let x = rng.random_range(0.0..=FRAC_1_SQRT_2);
            let d = (strategy4(&inp, x)?.simulated_success - (forms.p_s4)(&inp, x)).abs();
            s4.record(d, || tuple(&format!(", x = {x}")));
        }

        let (p1, p2, p3) = ((forms.p_s1)(&inp), (forms.p_s2)(&inp), (forms.p_s3)(&inp));
        let slack = tolerance::STRUCTURAL;
        order.require(p1 <= p2 + slack, || {
            tuple(&format!(": P_s1 = {p1} > P_s2 = {p2}"))
        });
        order.require(p3 <= p2 + slack, || {
            tuple(&format!(": P_s3 = {p3} > P_s2 = {p2}"))
        });
        order.require(p3 <= 0.25 + slack, || {
            tuple(&format!(": P_s3 = {p3} > 1/4"))
        });
        if p3 > p1 + slack {
            s3_above_s1 += 1;
        }

        let sx = special_x_values(&inp);
        let onset = sx.plateau_onset();
        let sc = inp.special_concurrences();
        plateau.record(
            (basis_concurrence(onset).value() - sc.minus.value()).abs(),
            || tuple(": C(min(x2, x3)) vs matching concurrence"),
        );
        if onset < h {
            let x = rng.random_range(onset..=h);
            let d = (strategy4(&inp, x)?.simulated_success - (forms.p_s2)(&inp)).abs();
            plateau.record(d, || tuple(&format!(": plateau at x = {x}")));
        }

        let g = generic_inputs(&mut rng);
        let gsx = special_x_values(&g);
        let curve = |x: f64| (forms.p_s4)(&g, x);
        for (label, at) in [("x1", gsx.x1), ("min(x2, x3)", gsx.plateau_onset())] {
            let jump = slope_jump(curve, at, 1e-6);
            breakpoints.require(jump > 0.1, || {
                format!(
                    "α = {}, γ = {}: slope jump {jump} at {label} = {at}",
                    g.alpha(),
                    g.gamma()
                )
            });
        }
    }

    let mut notes = Vec::new();
    if s3_above_s1 > 0 {
        notes.push(format!(
            "P_s3 exceeded P_s1 in {s3_above_s1} of {} samples (weakly entangled sources)",
            config.trials
        ));
    }
    Ok(VerifyReport {
        config: *config,
        checks: vec![
            limit,
            extraction,
            s1,
            s2,
            s3,
            s4,
            order,
            plateau,
            breakpoints,
        ],
        notes,
    })
}
