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

//! Unambiguous state extraction: a local two-qubit unitary on one member of
//! a partially entangled pair plus an ancilla, followed by a `σ_z`
//! measurement of the ancilla. Outcome `|0_a⟩` heralds `|ψ+⟩` with
//! probability `2 min{u², v²}`; outcome `|1_a⟩` leaves a product state.

use nalgebra::{DMatrix, Matrix2};

use crate::entanglement::{Orientation, PairState};
use crate::error::{Error, Result};
use crate::qstate::{c, gates, QubitIndex, StateVector, C64};
use crate::tolerance;

/// Which member of the pair carries the joint unitary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}

impl Side {
    fn qubit(self) -> QubitIndex {
        match self {
            Side::First => QubitIndex(0),
            Side::Second => QubitIndex(1),
        }
    }
}

const ANCILLA: QubitIndex = QubitIndex(2);

#[derive(Debug, Clone)]
pub struct ExtractionResult {
    pub success_probability: f64,
    /// Pair state after the `|0_a⟩` outcome; present iff that branch is not degenerate.
    pub success_state: Option<StateVector>,
    pub failure_probability: f64,
    pub failure_state: Option<StateVector>,
    pub acted_on: Side,
    /// [`optimal_probability`] of the input concurrence.
    pub closed_form: f64,
}

impl ExtractionResult {
    pub fn closed_form_deviation(&self) -> f64 {
        (self.success_probability - self.closed_form).abs()
    }
}

/// `1 − √(1 − C²)`, evaluated as `C² / (1 + √(1 − C²))` to avoid cancellation.
///
/// The derivative diverges at `C = 1`, so near-balanced pairs inherit an
/// absolute error of order `ε / |u² − v²|` from rounding in `C` itself.
pub fn optimal_probability(c: f64) -> f64 {
    let c2 = (c * c).min(1.0);
    c2 / (1.0 + (1.0 - c2).sqrt())
}

/// Joint unitary on (acting qubit, ancilla) for a pair whose acting-qubit
/// `|0⟩` and `|1⟩` components carry amplitudes `u` and `v`.
///
/// For `u ≤ v` the rotation is controlled on `|1⟩`, otherwise on `|0⟩`;
/// the rotation sends `|0_a⟩` to `r|0_a⟩ + √(1 − r²)|1_a⟩` with `r` the
/// smaller-to-larger amplitude ratio.
pub fn build_use_unitary(u: f64, v: f64) -> Result<DMatrix<C64>> {
    if !(u.is_finite() && v.is_finite())
        || u < 0.0
        || v < 0.0
        || (u * u + v * v - 1.0).abs() > tolerance::INPUT
    {
        return Err(Error::BadAmplitudes { u, v });
    }
    let (ratio, controlled_on) = if u <= v { (u / v, 1) } else { (v / u, 0) };
    let ratio = ratio.min(1.0);
    let s = (1.0 - ratio * ratio).sqrt();
    let rotation = [[ratio, -s], [s, ratio]];
    let mut m = DMatrix::<C64>::zeros(4, 4);
    for block in 0..2 {
        let off = 2 * block;
        for r in 0..2 {
            for col in 0..2 {
                m[(off + r, off + col)] = if block == controlled_on {
                    c(rotation[r][col])
                } else if r == col {
                    c(1.0)
                } else {
                    c(0.0)
                };
            }
        }
    }
    Ok(m)
}

/// Runs the extraction on a ψ-type pair by full simulation of
/// pair ⊗ `|0_a⟩`.
pub fn extract_epr(pair: &PairState, act_on: Side) -> Result<ExtractionResult> {
    pair.require(Orientation::Psi)?;
    // amplitudes on the acting qubit's |0⟩ and |1⟩ components
    let (u0, u1) = match act_on {
        Side::First => (pair.u(), pair.v()),
        Side::Second => (pair.v(), pair.u()),
    };
    let unitary = build_use_unitary(u0, u1)?;
    let register = pair
        .to_statevector()
        .tensor(&StateVector::basis_state(1, 0)?)?;
    let evolved = register.apply_unitary(&unitary, &[act_on.qubit(), ANCILLA])?;
    let ancilla_basis = [
        StateVector::basis_state(1, 0)?,
        StateVector::basis_state(1, 1)?,
    ];
    let mut branches = evolved
        .measure_subsystem(&ancilla_basis, &[ANCILLA])?
        .into_iter();
    let success = branches.next().expect("two outcomes");
    let failure = branches.next().expect("two outcomes");

    let result = ExtractionResult {
        success_probability: success.probability,
        success_state: success.residual,
        failure_probability: failure.probability,
        failure_state: failure.residual,
        acted_on: act_on,
        closed_form: optimal_probability(pair.concurrence().value()),
    };
    Ok(result)
}

/// `exp(−i(I − σ_x)π/2)`, evaluated as a matrix exponential.
pub fn phi_to_psi_rotation() -> DMatrix<C64> {
    let i_minus_x =
        Matrix2::<C64>::identity() - Matrix2::from_row_slice(gates::pauli_x().as_slice());
    let generator = i_minus_x * C64::new(0.0, -std::f64::consts::FRAC_PI_2);
    let u = generator.exp();
    DMatrix::from_row_slice(2, 2, &[u[(0, 0)], u[(0, 1)], u[(1, 0)], u[(1, 1)]])
}

/// Maps `u|00⟩ ± v|11⟩` to `u|01⟩ ± v|10⟩` by rotating the second qubit.
///
/// The rotation is applied to the embedded statevector and the result is
/// checked against the ψ-type embedding up to global phase.
pub fn canonicalize_phi(pair: &PairState) -> Result<PairState> {
    pair.require(Orientation::Phi)?;
    let rotated = pair
        .to_statevector()
        .apply_unitary(&phi_to_psi_rotation(), &[QubitIndex(1)])?;
    let target = PairState::new(pair.u(), pair.v(), Orientation::Psi, pair.sign())?;
    let dev = rotated.max_deviation_up_to_phase(&target.to_statevector());
    if dev > tolerance::ORACLE {
        return Err(Error::RotationMismatch(dev));
    }
    PairState::from_statevector(&rotated)
}
