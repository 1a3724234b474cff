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

//! Probabilistic entanglement-swapping strategies as exact branch
//! enumerations on the register `[A, C1, B, C2]`.
//!
//! Every pipeline returns a [`StrategyReport`] that carries both the
//! enumerated success probability and its analytic counterpart from
//! [`closed_form`].

pub mod closed_form;

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use crate::entanglement::{
    is_bell_state, special_concurrences, Concurrence, Orientation, PairState, Sign,
    SpecialConcurrences,
};
use crate::error::{Error, Result};
use crate::measurement_bases::{bell_basis, parametrized_basis, BasisElement, MeasuringBasis};
use crate::qstate::{gates, QubitIndex, StateVector};
use crate::tolerance;
use crate::use_extraction::{
    canonicalize_phi, extract_epr, phi_to_psi_rotation, ExtractionResult, Side,
};

pub const A: QubitIndex = QubitIndex(0);
pub const C1: QubitIndex = QubitIndex(1);
pub const B: QubitIndex = QubitIndex(2);
pub const C2: QubitIndex = QubitIndex(3);

/// Amplitudes of the two source pairs `α|01⟩ + β|10⟩` on `AC1` and
/// `γ|01⟩ + δ|10⟩` on `BC2`, with `α ≤ β` and `γ ≤ δ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SwapInputs {
    alpha: f64,
    gamma: f64,
}

fn check_amplitude(name: &'static str, value: f64, constraint: &'static str) -> Result<f64> {
    if !value.is_finite()
        || !(-tolerance::INPUT..=FRAC_1_SQRT_2 + tolerance::INPUT).contains(&value)
    {
        return Err(Error::BadParameter {
            name,
            value,
            constraint,
        });
    }
    Ok(value.clamp(0.0, FRAC_1_SQRT_2))
}

impl SwapInputs {
    pub fn new(alpha: f64, gamma: f64) -> Result<Self> {
        Ok(SwapInputs {
            alpha: check_amplitude("alpha", alpha, "0 ≤ α ≤ β required")?,
            gamma: check_amplitude("gamma", gamma, "0 ≤ γ ≤ δ required")?,
        })
    }

    /// Relabels amplitudes above `1/√2` onto the `α ≤ β` root.
    pub fn canonicalized(alpha: f64, gamma: f64) -> Result<Self> {
        let fold = |name, a: f64| -> Result<f64> {
            if !(0.0..=1.0).contains(&a) {
                return Err(Error::BadParameter {
                    name,
                    value: a,
                    constraint: "amplitude in [0, 1]",
                });
            }
            Ok(a.min((1.0 - a * a).sqrt()))
        };
        Self::new(fold("alpha", alpha)?, fold("gamma", gamma)?)
    }

    /// Inputs with the given initial concurrences.
    pub fn from_concurrences(c_ac1: Concurrence, c_bc2: Concurrence) -> Self {
        let amp = |c: Concurrence| crate::measurement_bases::x_from_concurrence(c);
        SwapInputs {
            alpha: amp(c_ac1),
            gamma: amp(c_bc2),
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        (1.0 - self.alpha * self.alpha).sqrt()
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn delta(&self) -> f64 {
        (1.0 - self.gamma * self.gamma).sqrt()
    }

    /// `(α, β, γ, δ)`.
    pub fn amplitudes(&self) -> (f64, f64, f64, f64) {
        (self.alpha, self.beta(), self.gamma, self.delta())
    }

    /// `2αβ`.
    pub fn c_ac1(&self) -> f64 {
        (2.0 * self.alpha * self.beta()).min(1.0)
    }

    /// `2γδ`.
    pub fn c_bc2(&self) -> f64 {
        (2.0 * self.gamma * self.delta()).min(1.0)
    }

    pub fn pair_ac1(&self) -> PairState {
        PairState::psi(self.alpha, self.beta()).expect("normalized by construction")
    }

    pub fn pair_bc2(&self) -> PairState {
        PairState::psi(self.gamma, self.delta()).expect("normalized by construction")
    }

    /// Product state on `[A, C1, B, C2]`.
    pub fn initial_state(&self) -> StateVector {
        self.pair_ac1()
            .to_statevector()
            .tensor(&self.pair_bc2().to_statevector())
            .expect("four qubits")
    }

    pub fn special_concurrences(&self) -> SpecialConcurrences {
        special_concurrences(
            Concurrence::new(self.c_ac1()).expect("in range"),
            Concurrence::new(self.c_bc2()).expect("in range"),
        )
    }
}

/// `x₁..x₄`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecialX {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
    pub x4: f64,
}

impl SpecialX {
    /// `min{x₂, x₃}`.
    pub fn plateau_onset(&self) -> f64 {
        self.x2.min(self.x3)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecialValues {
    pub x: SpecialX,
    pub concurrences: SpecialConcurrences,
}

pub fn special_x_values(inputs: &SwapInputs) -> SpecialX {
    closed_form::special_x(inputs)
}

fn special_values(inputs: &SwapInputs) -> SpecialValues {
    SpecialValues {
        x: special_x_values(inputs),
        concurrences: inputs.special_concurrences(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Deterministic swapping with maximally entangled inputs.
    Basic,
    /// Extract on both sources, then swap.
    First,
    /// Bell measurement, then extract on the outcome.
    Second,
    /// Special-value measuring basis, keep only the EPR outcome.
    Third,
    /// Parametrized basis, then extract on every outcome.
    Fourth,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Basic => "basic",
            Strategy::First => "strategy 1",
            Strategy::Second => "strategy 2",
            Strategy::Third => "strategy 3",
            Strategy::Fourth => "strategy 4",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BasisChoice {
    Bell,
    Parametrized(f64),
}

impl BasisChoice {
    pub fn x(&self) -> f64 {
        match self {
            BasisChoice::Bell => FRAC_1_SQRT_2,
            BasisChoice::Parametrized(x) => *x,
        }
    }
}

/// Label of a branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Outcome {
    /// Lab-C outcome in the measuring basis; at `x = 1/√2` these are the Bell states.
    Basis(BasisElement),
    /// A source extraction in strategy 1 failed; the flags record which succeeded.
    SourceExtraction { ac1: bool, bc2: bool },
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Basis(e) => write!(f, "{e}"),
            Outcome::SourceExtraction { ac1, bc2 } => {
                let s = |ok: bool| if ok { "ok" } else { "fail" };
                write!(f, "USE AC1 {} / BC2 {}", s(*ac1), s(*bc2))
            }
        }
    }
}

/// A local operation applied to the `AB` pair after the Lab-C outcome is announced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Correction {
    /// `σ_z` on A removes the minus sign of `ν-`/`μ-` outcomes.
    PauliZOnA,
    /// `exp(−i(I − σ_x)π/2)` on B turns a φ-type outcome into ψ-type.
    PhiToPsiOnB,
}

impl fmt::Display for Correction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Correction::PauliZOnA => "σz(A)",
            Correction::PhiToPsiOnB => "Rφψ(B)",
        })
    }
}

#[derive(Debug, Clone)]
pub struct BranchRecord {
    pub outcome: Outcome,
    pub probability: f64,
    /// `AB` state after corrections; `None` for degenerate or failed branches.
    pub post_state: Option<StateVector>,
    pub corrections: Vec<Correction>,
    pub extraction: Option<ExtractionResult>,
    /// Probability of ending in an EPR state given this branch.
    pub conditional_success: f64,
    /// `probability × conditional_success`.
    pub success_probability: f64,
}

impl BranchRecord {
    fn new(
        outcome: Outcome,
        probability: f64,
        post_state: Option<StateVector>,
        corrections: Vec<Correction>,
        extraction: Option<ExtractionResult>,
        conditional_success: f64,
    ) -> Self {
        BranchRecord {
            outcome,
            probability,
            post_state,
            corrections,
            extraction,
            conditional_success,
            success_probability: probability * conditional_success,
        }
    }

    fn failed(outcome: Outcome, probability: f64) -> Self {
        Self::new(outcome, probability, None, Vec::new(), None, 0.0)
    }
}

#[derive(Debug, Clone)]
pub struct StrategyReport {
    pub strategy: Strategy,
    pub inputs: SwapInputs,
    pub basis: BasisChoice,
    pub simulated_success: f64,
    pub closed_form: f64,
    /// Second algebraic form of the closed form, where one exists.
    pub closed_form_alt: Option<f64>,
    pub branches: Vec<BranchRecord>,
    pub special_values: Option<SpecialValues>,
    /// Strategy 1: extraction results on `AC1` and `BC2`.
    pub source_extractions: Option<[ExtractionResult; 2]>,
    /// Strategy 2: total weight `p` of the φ-type Bell outcomes.
    pub bell_phi_weight: Option<f64>,
}

impl StrategyReport {
    pub fn deviation(&self) -> f64 {
        (self.simulated_success - self.closed_form).abs()
    }

    pub fn agrees(&self) -> bool {
        self.deviation() <= tolerance::ORACLE
    }

    pub fn branch(&self, element: BasisElement) -> Option<&BranchRecord> {
        self.branches
            .iter()
            .find(|b| b.outcome == Outcome::Basis(element))
    }
}

/// Lab-C measurement of `C1C2`; returns `(element, probability, AB residual)`.
fn measure_lab_c(
    state: &StateVector,
    basis: &MeasuringBasis,
) -> Result<Vec<(BasisElement, f64, Option<StateVector>)>> {
    let branches = state.measure_subsystem(basis.elements(), &[C1, C2])?;
    Ok(BasisElement::ALL
        .iter()
        .zip(branches)
        .map(|(&e, b)| (e, b.probability, b.residual))
        .collect())
}

/// Applies the announced sign correction: `σ_z` on A for minus outcomes.
fn sign_correct(element: BasisElement, ab: StateVector) -> Result<(StateVector, Vec<Correction>)> {
    if element.is_minus() {
        Ok((
            ab.apply_unitary(&gates::pauli_z(), &[QubitIndex(0)])?,
            vec![Correction::PauliZOnA],
        ))
    } else {
        Ok((ab, Vec::new()))
    }
}

/// Sign correction, φ→ψ canonicalization and extraction on A.
fn correct_and_extract(
    element: BasisElement,
    probability: f64,
    ab: StateVector,
) -> Result<BranchRecord> {
    let (mut state, mut corrections) = sign_correct(element, ab)?;
    let mut pair = PairState::from_statevector(&state)?;
    debug_assert_eq!(pair.sign(), Sign::Plus, "uncorrected sign on {element}");
    if pair.orientation() == Orientation::Phi {
        pair = canonicalize_phi(&pair)?;
        state = state.apply_unitary(&phi_to_psi_rotation(), &[QubitIndex(1)])?;
        corrections.push(Correction::PhiToPsiOnB);
    }
    let extraction = extract_epr(&pair, Side::First)?;
    let p_ext = extraction.success_probability;
    Ok(BranchRecord::new(
        Outcome::Basis(element),
        probability,
        Some(state),
        corrections,
        Some(extraction),
        p_ext,
    ))
}

/// Bell measurement on `C1C2` of a four-qubit register, sign-corrected;
/// success wherever the corrected `AB` state is a Bell state.
fn bell_swap(state: &StateVector, weight: f64) -> Result<Vec<BranchRecord>> {
    measure_lab_c(state, &bell_basis())?
        .into_iter()
        .map(|(e, p, residual)| {
            let Some(ab) = residual else {
                return Ok(BranchRecord::failed(Outcome::Basis(e), weight * p));
            };
            let (ab, corrections) = sign_correct(e, ab)?;
            let success = if is_bell_state(&ab) { 1.0 } else { 0.0 };
            Ok(BranchRecord::new(
                Outcome::Basis(e),
                weight * p,
                Some(ab),
                corrections,
                None,
                success,
            ))
        })
        .collect()
}

fn total(branches: &[BranchRecord]) -> f64 {
    branches.iter().map(|b| b.success_probability).sum()
}

/// Deterministic swapping of two `|ψ+⟩` pairs by a Bell measurement.
pub fn basic_deterministic_swap(inputs: &SwapInputs) -> Result<StrategyReport> {
    let (c_ac1, c_bc2) = (inputs.c_ac1(), inputs.c_bc2());
    if c_ac1 < 1.0 - tolerance::ORACLE || c_bc2 < 1.0 - tolerance::ORACLE {
        return Err(Error::NotMaximal { c_ac1, c_bc2 });
    }
    let branches = bell_swap(&inputs.initial_state(), 1.0)?;
    Ok(StrategyReport {
        strategy: Strategy::Basic,
        inputs: *inputs,
        basis: BasisChoice::Bell,
        simulated_success: total(&branches),
        closed_form: 1.0,
        closed_form_alt: None,
        branches,
        special_values: None,
        source_extractions: None,
        bell_phi_weight: None,
    })
}

/// Extraction on each source pair; on double success, deterministic swapping.
pub fn strategy1(inputs: &SwapInputs) -> Result<StrategyReport> {
    let ac1 = extract_epr(&inputs.pair_ac1(), Side::First)?;
    let bc2 = extract_epr(&inputs.pair_bc2(), Side::First)?;
    let (s1, s2) = (ac1.success_probability, bc2.success_probability);
    let (f1, f2) = (ac1.failure_probability, bc2.failure_probability);

    let mut branches = match (&ac1.success_state, &bc2.success_state) {
        (Some(a), Some(b)) => bell_swap(&a.tensor(b)?, s1 * s2)?,
        _ => BasisElement::ALL
            .iter()
            .map(|&e| BranchRecord::failed(Outcome::Basis(e), s1 * s2 / 4.0))
            .collect(),
    };
    for (ok1, ok2, p) in [
        (true, false, s1 * f2),
        (false, true, f1 * s2),
        (false, false, f1 * f2),
    ] {
        branches.push(BranchRecord::failed(
            Outcome::SourceExtraction { ac1: ok1, bc2: ok2 },
            p,
        ));
    }
    Ok(StrategyReport {
        strategy: Strategy::First,
        inputs: *inputs,
        basis: BasisChoice::Bell,
        simulated_success: total(&branches),
        closed_form: closed_form::p_s1(inputs),
        closed_form_alt: Some(closed_form::p_s1_from_concurrences(inputs)),
        branches,
        special_values: None,
        source_extractions: Some([ac1, bc2]),
        bell_phi_weight: None,
    })
}

/// Extraction on every branch after measuring `C1C2` in `basis`.
fn measure_then_extract(inputs: &SwapInputs, basis: &MeasuringBasis) -> Result<Vec<BranchRecord>> {
    measure_lab_c(&inputs.initial_state(), basis)?
        .into_iter()
        .map(|(e, p, residual)| match residual {
            Some(ab) => correct_and_extract(e, p, ab),
            None => Ok(BranchRecord::failed(Outcome::Basis(e), p)),
        })
        .collect()
}

/// Bell measurement, sign correction, then extraction on A.
pub fn strategy2(inputs: &SwapInputs) -> Result<StrategyReport> {
    let branches = measure_then_extract(inputs, &bell_basis())?;
    Ok(StrategyReport {
        strategy: Strategy::Second,
        inputs: *inputs,
        basis: BasisChoice::Bell,
        simulated_success: total(&branches),
        closed_form: closed_form::p_s2(inputs),
        closed_form_alt: Some(closed_form::p_s2_from_concurrences(inputs)),
        branches,
        special_values: None,
        source_extractions: None,
        bell_phi_weight: Some(closed_form::bell_phi_weight(inputs)),
    })
}

/// Measurement at `x₂` (α ≤ γ) or `x₃` (α > γ); success only on the
/// matching ψ-type outcome when it is exactly a Bell state.
pub fn strategy3(inputs: &SwapInputs) -> Result<StrategyReport> {
    let x = closed_form::strategy3_x(inputs);
    let selected = if inputs.alpha() <= inputs.gamma() {
        BasisElement::NuPlus
    } else {
        BasisElement::NuMinus
    };
    let branches = measure_lab_c(&inputs.initial_state(), &parametrized_basis(x)?)?
        .into_iter()
        .map(|(e, p, residual)| {
            let Some(ab) = residual else {
                return Ok(BranchRecord::failed(Outcome::Basis(e), p));
            };
            let (ab, corrections) = sign_correct(e, ab)?;
            let success = if e == selected && is_bell_state(&ab) {
                1.0
            } else {
                0.0
            };
            Ok(BranchRecord::new(
                Outcome::Basis(e),
                p,
                Some(ab),
                corrections,
                None,
                success,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StrategyReport {
        strategy: Strategy::Third,
        inputs: *inputs,
        basis: BasisChoice::Parametrized(x),
        simulated_success: total(&branches),
        closed_form: closed_form::p_s3(inputs),
        closed_form_alt: Some(closed_form::p_s3_from_matching(inputs)),
        branches,
        special_values: Some(special_values(inputs)),
        source_extractions: None,
        bell_phi_weight: None,
    })
}

/// Measurement in the parametrized basis at `basis_x`, then extraction on
/// every outcome.
pub fn strategy4(inputs: &SwapInputs, basis_x: f64) -> Result<StrategyReport> {
    let basis = parametrized_basis(basis_x)?;
    let branches = measure_then_extract(inputs, &basis)?;
    Ok(StrategyReport {
        strategy: Strategy::Fourth,
        inputs: *inputs,
        basis: BasisChoice::Parametrized(basis.x()),
        simulated_success: total(&branches),
        closed_form: closed_form::p_s4(inputs, basis.x()),
        closed_form_alt: None,
        branches,
        special_values: Some(special_values(inputs)),
        source_extractions: None,
        bell_phi_weight: None,
    })
}

/// Closed-form success probabilities of strategies 1–3.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InequalityReport {
    pub p_s1: f64,
    pub p_s2: f64,
    pub p_s3: f64,
}

/// Checks `P_s3 ≤ P_s1 ≤ P_s2` and `P_s3 ≤ 1/4` with slack `1e-12`.
pub fn verify_inequalities(inputs: &SwapInputs) -> Result<InequalityReport> {
    let r = InequalityReport {
        p_s1: closed_form::p_s1(inputs),
        p_s2: closed_form::p_s2(inputs),
        p_s3: closed_form::p_s3(inputs),
    };
    let slack = tolerance::STRUCTURAL;
    let violation = if r.p_s3 > r.p_s1 + slack {
        Some(format!("P_s3 = {} > P_s1 = {}", r.p_s3, r.p_s1))
    } else if r.p_s1 > r.p_s2 + slack {
        Some(format!("P_s1 = {} > P_s2 = {}", r.p_s1, r.p_s2))
    } else if r.p_s3 > 0.25 + slack {
        Some(format!("P_s3 = {} > 1/4", r.p_s3))
    } else {
        None
    };
    match violation {
        Some(detail) => Err(Error::InequalityViolated {
            alpha: inputs.alpha(),
            gamma: inputs.gamma(),
            detail,
        }),
        None => Ok(r),
    }
}
