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

//! Human-readable report of all four strategies for one input.

use std::fmt::Write;

use crate::error::Result;
use crate::measurement_bases::basis_concurrence;
use crate::strategies::{
    basic_deterministic_swap, special_x_values, strategy1, strategy2, strategy3, strategy4,
    BasisChoice, StrategyReport, SwapInputs,
};
use crate::tolerance;

/// Reports for strategies 1–4; `x` defaults to the plateau onset `min{x₂, x₃}`.
pub fn all_strategies(inputs: &SwapInputs, x: Option<f64>) -> Result<[StrategyReport; 4]> {
    let x = x.unwrap_or_else(|| special_x_values(inputs).plateau_onset());
    Ok([
        strategy1(inputs)?,
        strategy2(inputs)?,
        strategy3(inputs)?,
        strategy4(inputs, x)?,
    ])
}

pub fn render(inputs: &SwapInputs, x: Option<f64>) -> Result<String> {
    let reports = all_strategies(inputs, x)?;
    let (a, b, g, d) = inputs.amplitudes();
    let sx = special_x_values(inputs);
    let sc = inputs.special_concurrences();
    let mut out = String::new();
    let w = &mut out;

    let _ = writeln!(
        w,
        "inputs: α = {a:.12}, β = {b:.12}, γ = {g:.12}, δ = {d:.12}"
    );
    let _ = writeln!(
        w,
        "concurrences: C_AC1 = {:.12}, C_BC2 = {:.12}",
        inputs.c_ac1(),
        inputs.c_bc2()
    );
    let _ = writeln!(
        w,
        "special x: x1 = {:.12}, x2 = {:.12}, x3 = {:.12}, x4 = {:.12}",
        sx.x1, sx.x2, sx.x3, sx.x4
    );
    let _ = writeln!(
        w,
        "special concurrences: c- = {:.12}, c+ = {:.12}",
        sc.minus.value(),
        sc.plus.value()
    );
    if (inputs.c_ac1() - 1.0).abs() < tolerance::ORACLE
        && (inputs.c_bc2() - 1.0).abs() < tolerance::ORACLE
    {
        let basic = basic_deterministic_swap(inputs)?;
        let _ = writeln!(w, "\nbasic swap: success {:.12}", basic.simulated_success);
    }

    for r in &reports {
        let _ = writeln!(w);
        render_one(w, r);
    }
    let _ = writeln!(w, "\nsummary:");
    for r in &reports {
        let _ = writeln!(
            w,
            "  {:<11} P = {:.12}  ({})",
            r.strategy.to_string(),
            r.simulated_success,
            if r.agrees() {
                "matches closed form"
            } else {
                "MISMATCH"
            }
        );
    }
    Ok(out)
}

fn render_one(w: &mut String, r: &StrategyReport) {
    let basis = match r.basis {
        BasisChoice::Bell => "Bell basis".to_string(),
        BasisChoice::Parametrized(x) => {
            format!(
                "x = {x:.12} (C_C1C2 = {:.12})",
                basis_concurrence(x).value()
            )
        }
    };
    let _ = writeln!(w, "{} [{basis}]", r.strategy);
    let _ = writeln!(
        w,
        "  simulated {:.12}  closed form {:.12}  |Δ| = {:.2e}",
        r.simulated_success,
        r.closed_form,
        r.deviation()
    );
    if let Some(alt) = r.closed_form_alt {
        let _ = writeln!(w, "  alternate closed form {alt:.12}");
    }
    if let Some(p) = r.bell_phi_weight {
        let _ = writeln!(w, "  φ-type outcome weight p = {p:.12}");
    }
    if let Some([ac1, bc2]) = &r.source_extractions {
        let _ = writeln!(
            w,
            "  source extraction: AC1 {:.12}, BC2 {:.12}",
            ac1.success_probability, bc2.success_probability
        );
    }
    let _ = writeln!(
        w,
        "  {:<24} {:>15} {:>15} {:>15}  corrections",
        "outcome", "probability", "conditional", "success"
    );
    for b in &r.branches {
        let corrections: Vec<String> = b.corrections.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            w,
            "  {:<24} {:>15.12} {:>15.12} {:>15.12}  {}",
            b.outcome.to_string(),
            b.probability,
            b.conditional_success,
            b.success_probability,
            if corrections.is_empty() {
                "-".to_string()
            } else {
                corrections.join(", ")
            }
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn deterministic_limit_summary() {
        let inp = SwapInputs::new(FRAC_1_SQRT_2, FRAC_1_SQRT_2).unwrap();
        let r = all_strategies(&inp, None).unwrap();
        let p: Vec<f64> = r.iter().map(|r| r.simulated_success).collect();
        for (got, want) in p.iter().zip([1.0, 1.0, 0.25, 1.0]) {
            assert!((got - want).abs() < 1e-12);
        }
        let text = render(&inp, None).unwrap();
        assert!(text.contains("basic swap"));
    }

    #[test]
    fn default_x_is_plateau_onset() {
        let inp = SwapInputs::new(0.5, 0.6).unwrap();
        let r = all_strategies(&inp, None).unwrap();
        let onset = special_x_values(&inp).plateau_onset();
        assert_eq!(r[3].basis, BasisChoice::Parametrized(onset));
        let text = render(&inp, None).unwrap();
        assert!(text.contains("x2 = "));
        assert!(text.contains("c- = "));
        assert!(text.contains("alternate closed form"));
    }
}
