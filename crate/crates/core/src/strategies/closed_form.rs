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

//! Analytic success probabilities and branch weights, used as comparators
//! for the enumerated pipelines. Nothing here touches the simulator.

use std::f64::consts::FRAC_1_SQRT_2;

use super::{SpecialX, SwapInputs};
use crate::entanglement::{special_concurrences, Concurrence};
use crate::measurement_bases::BasisElement;

/// `1 − √(1 − C²)`: optimal single-copy extraction probability.
pub fn extraction_probability(c: f64) -> f64 {
    crate::use_extraction::optimal_probability(c)
}

/// `4α²γ²`.
pub fn p_s1(inp: &SwapInputs) -> f64 {
    4.0 * inp.alpha().powi(2) * inp.gamma().powi(2)
}

/// Product of the two extraction probabilities, in concurrence form.
pub fn p_s1_from_concurrences(inp: &SwapInputs) -> f64 {
    extraction_probability(inp.c_ac1()) * extraction_probability(inp.c_bc2())
}

/// `2 min{α², γ²}`.
pub fn p_s2(inp: &SwapInputs) -> f64 {
    2.0 * inp.alpha().min(inp.gamma()).powi(2)
}

pub fn p_s2_from_concurrences(inp: &SwapInputs) -> f64 {
    extraction_probability(inp.c_ac1()).min(extraction_probability(inp.c_bc2()))
}

/// Weight `p = α²γ² + β²δ²` of the φ-type outcomes under a Bell measurement.
pub fn bell_phi_weight(inp: &SwapInputs) -> f64 {
    (inp.alpha() * inp.gamma()).powi(2) + (inp.beta() * inp.delta()).powi(2)
}

/// Conditional extraction probability after a Bell-basis outcome, with the
/// α-versus-γ case split for the ψ-type outcomes.
pub fn bell_conditional_extraction(inp: &SwapInputs, element: BasisElement) -> f64 {
    let (a, b, g, d) = inp.amplitudes();
    let p = bell_phi_weight(inp);
    match element {
        BasisElement::MuPlus | BasisElement::MuMinus => ratio(2.0 * (a * g).powi(2), p),
        BasisElement::NuPlus | BasisElement::NuMinus => {
            if a <= g {
                ratio(2.0 * (a * d).powi(2), 1.0 - p)
            } else {
                ratio(2.0 * (b * g).powi(2), 1.0 - p)
            }
        }
    }
}

/// `2α²β²γ²δ² / (α²δ² + β²γ²)`, zero when the denominator vanishes.
pub fn p_s3(inp: &SwapInputs) -> f64 {
    let (a, b, g, d) = inp.amplitudes();
    let den = (a * d).powi(2) + (b * g).powi(2);
    ratio(2.0 * (a * b * g * d).powi(2), den)
}

/// `C_AC1 · C_BC2 · 𝔠⁻ / 4`.
pub fn p_s3_from_matching(inp: &SwapInputs) -> f64 {
    let sc = special_concurrences(
        Concurrence::new(inp.c_ac1()).expect("valid"),
        Concurrence::new(inp.c_bc2()).expect("valid"),
    );
    inp.c_ac1() * inp.c_bc2() * sc.minus.value() / 4.0
}

/// Outcome probabilities `(p_μ+, p_ν+, p_ν-, p_μ-)` for measuring parameter `x`.
pub fn branch_probabilities(inp: &SwapInputs, x: f64) -> [f64; 4] {
    let (a, b, g, d) = inp.amplitudes();
    let (x2, y2) = (x * x, 1.0 - x * x);
    let (ag, bd, ad, bg) = (
        (a * g).powi(2),
        (b * d).powi(2),
        (a * d).powi(2),
        (b * g).powi(2),
    );
    [
        ag * y2 + bd * x2,
        ad * y2 + bg * x2,
        ad * x2 + bg * y2,
        ag * x2 + bd * y2,
    ]
}

/// Conditional probability of extracting an EPR pair from the outcome
/// state attached to `element`, piecewise in `x` around the special values.
pub fn conditional_extraction(inp: &SwapInputs, element: BasisElement, x: f64) -> f64 {
    let (a, b, g, d) = inp.amplitudes();
    let sx = special_x(inp);
    let (x2, y2) = (x * x, 1.0 - x * x);
    let p = branch_probabilities(inp, x)[element.index()];
    let num = match element {
        BasisElement::MuPlus => {
            if x <= sx.x1 {
                2.0 * (b * d).powi(2) * x2
            } else {
                2.0 * (a * g).powi(2) * y2
            }
        }
        BasisElement::NuPlus => {
            if x <= sx.x2 {
                2.0 * (b * g).powi(2) * x2
            } else {
                2.0 * (a * d).powi(2) * y2
            }
        }
        BasisElement::NuMinus => {
            if x <= sx.x3 {
                2.0 * (a * d).powi(2) * x2
            } else {
                2.0 * (b * g).powi(2) * y2
            }
        }
        BasisElement::MuMinus => 2.0 * (a * g).powi(2) * x2,
    };
    ratio(num, p)
}

/// Which piece of the strategy-4 success curve applies at `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ps4Regime {
    /// `x ≤ x₁`: `2x²`.
    Rising,
    /// `x₁ ≤ x ≤ min{x₂, x₃}`.
    Intermediate,
    /// `x ≥ min{x₂, x₃}`: constant `2 min{α², γ²}`.
    Plateau,
}

pub fn p_s4_regime(inp: &SwapInputs, x: f64) -> Ps4Regime {
    let sx = special_x(inp);
    if x <= sx.x1 {
        Ps4Regime::Rising
    } else if x <= sx.plateau_onset() {
        Ps4Regime::Intermediate
    } else {
        Ps4Regime::Plateau
    }
}

/// Piecewise strategy-4 success probability.
pub fn p_s4(inp: &SwapInputs, x: f64) -> f64 {
    let (a, b, g, d) = inp.amplitudes();
    match p_s4_regime(inp, x) {
        Ps4Regime::Rising => 2.0 * x * x,
        Ps4Regime::Intermediate => {
            2.0 * (a * g).powi(2) + 2.0 * ((a * d).powi(2) + (b * g).powi(2)) * x * x
        }
        Ps4Regime::Plateau => p_s2(inp),
    }
}

/// Basis parameters at which each outcome state is maximally entangled.
///
/// When `α = γ = 0` the ψ-type expressions are `0/0`; both are set to zero
/// so the plateau onset coincides with the (zero) matching concurrence.
pub fn special_x(inp: &SwapInputs) -> SpecialX {
    let (a, b, g, d) = inp.amplitudes();
    let phi_norm = ((a * g).powi(2) + (b * d).powi(2)).sqrt();
    let psi_norm = ((a * d).powi(2) + (b * g).powi(2)).sqrt();
    SpecialX {
        x1: ratio(a * g, phi_norm),
        x2: ratio(a * d, psi_norm),
        x3: ratio(b * g, psi_norm),
        x4: ratio(b * d, phi_norm),
    }
}

fn ratio(num: f64, den: f64) -> f64 {
    if den <= 0.0 {
        0.0
    } else {
        num / den
    }
}

/// Measuring parameter used by strategy 3: `x₂` when `α ≤ γ`, else `x₃`.
pub fn strategy3_x(inp: &SwapInputs) -> f64 {
    let sx = special_x(inp);
    if inp.alpha() <= inp.gamma() {
        sx.x2
    } else {
        sx.x3
    }
    .min(FRAC_1_SQRT_2)
}
