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

use thiserror::Error;

/// Errors raised by the simulator, the extraction scheme and the strategy pipelines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("amplitude vector of length {0} is not a power of two")]
    BadLength(usize),
    #[error("register of {0} qubits exceeds the supported maximum of {max}", max = crate::qstate::MAX_QUBITS)]
    TooManyQubits(usize),
    #[error("state is not normalized (norm² = {0})")]
    NotNormalized(f64),
    #[error("matrix is not unitary (max deviation {0:e})")]
    NonUnitary(f64),
    #[error("matrix of dimension {got} does not act on {targets} qubits")]
    DimensionMismatch { got: usize, targets: usize },
    #[error("bad target qubit list {targets:?} for a {n_qubits}-qubit register")]
    BadTarget {
        targets: Vec<usize>,
        n_qubits: usize,
    },
    #[error("measurement basis is not orthonormal (max Gram deviation {0:e})")]
    NonOrthonormalBasis(f64),
    #[error("expected a {expected}-qubit state, got {got} qubits")]
    WrongQubitCount { expected: usize, got: usize },
    #[error("invalid pair amplitudes u = {u}, v = {v}")]
    BadAmplitudes { u: f64, v: f64 },
    #[error("pair state has the wrong orientation: expected {expected}")]
    WrongOrientation { expected: &'static str },
    #[error("state does not have a pair-state support pattern")]
    NotPairState,
    #[error("concurrence {0} outside [0, 1]")]
    BadConcurrence(f64),
    #[error("parameter {name} = {value} out of range: {constraint}")]
    BadParameter {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },
    #[error("inputs are not maximally entangled (concurrences {c_ac1}, {c_bc2})")]
    NotMaximal { c_ac1: f64, c_bc2: f64 },
    #[error("phi-to-psi rotation failed to map the embedded state (deviation {0:e})")]
    RotationMismatch(f64),
    #[error("inequality violated at alpha = {alpha}, gamma = {gamma}: {detail}")]
    InequalityViolated {
        alpha: f64,
        gamma: f64,
        detail: String,
    },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("simulation disagrees with closed form at {context}: simulated {simulated}, closed form {closed_form}")]
    OracleMismatch {
        context: String,
        simulated: f64,
        closed_form: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
