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

//! Two-qubit pure-state entanglement: concurrence, Schmidt form, Bell-state
//! fidelity and the canonical pair-state representation.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use nalgebra::Matrix2;

use crate::error::{Error, Result};
use crate::qstate::{c, StateVector, C64};
use crate::tolerance;

/// Concurrence of a two-qubit state, in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Concurrence(f64);

impl Concurrence {
    pub const ZERO: Concurrence = Concurrence(0.0);
    pub const ONE: Concurrence = Concurrence(1.0);

    /// Accepts values in `[0, 1]`, clamping round-off just outside the interval.
    pub fn new(value: f64) -> Result<Self> {
        if !(-tolerance::INPUT..=1.0 + tolerance::INPUT).contains(&value) {
            return Err(Error::BadConcurrence(value));
        }
        Ok(Concurrence(value.clamp(0.0, 1.0)))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl fmt::Display for Concurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Which pair of computational states a [`PairState`] spans.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// `u|01⟩ ± v|10⟩`
    Psi,
    /// `u|00⟩ ± v|11⟩`
    Phi,
}

impl Orientation {
    fn name(self) -> &'static str {
        match self {
            Orientation::Psi => "psi-type",
            Orientation::Phi => "phi-type",
        }
    }

    /// Basis indices of the (first, second) branch.
    fn support(self) -> (usize, usize) {
        match self {
            Orientation::Psi => (0b01, 0b10),
            Orientation::Phi => (0b00, 0b11),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn factor(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// A two-qubit pure state with real non-negative amplitudes `u`, `v` on
/// two computational branches and an explicit relative sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairState {
    u: f64,
    v: f64,
    orientation: Orientation,
    sign: Sign,
}

impl PairState {
    pub fn new(u: f64, v: f64, orientation: Orientation, sign: Sign) -> Result<Self> {
        if !(u.is_finite() && v.is_finite())
            || u < -tolerance::INPUT
            || v < -tolerance::INPUT
            || (u * u + v * v - 1.0).abs() > tolerance::INPUT
        {
            return Err(Error::BadAmplitudes { u, v });
        }
        Ok(PairState {
            u: u.max(0.0),
            v: v.max(0.0),
            orientation,
            sign,
        })
    }

    /// `u|01⟩ + v|10⟩`.
    pub fn psi(u: f64, v: f64) -> Result<Self> {
        Self::new(u, v, Orientation::Psi, Sign::Plus)
    }

    /// `u|00⟩ + v|11⟩`.
    pub fn phi(u: f64, v: f64) -> Result<Self> {
        Self::new(u, v, Orientation::Phi, Sign::Plus)
    }

    pub fn u(&self) -> f64 {
        self.u
    }

    pub fn v(&self) -> f64 {
        self.v
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn require(&self, orientation: Orientation) -> Result<()> {
        if self.orientation != orientation {
            return Err(Error::WrongOrientation {
                expected: orientation.name(),
            });
        }
        Ok(())
    }

    /// `2uv`.
    pub fn concurrence(&self) -> Concurrence {
        Concurrence((2.0 * self.u * self.v).min(1.0))
    }

    pub fn to_statevector(&self) -> StateVector {
        let (i, j) = self.orientation.support();
        let mut amps = [0.0; 4];
        amps[i] = self.u;
        amps[j] = self.sign.factor() * self.v;
        StateVector::normalized(amps.iter().map(|&a| c(a)).collect())
            .expect("pair amplitudes are normalized")
    }

    /// Reads a pair state off a two-qubit statevector, discarding the global
    /// phase. The relative phase between the two branches must be real.
    pub fn from_statevector(state: &StateVector) -> Result<Self> {
        require_two_qubits(state)?;
        let a = state.amplitudes();
        let tol = tolerance::STRUCTURAL;
        let orientation = if a[0].norm() < tol && a[3].norm() < tol {
            Orientation::Psi
        } else if a[1].norm() < tol && a[2].norm() < tol {
            Orientation::Phi
        } else {
            return Err(Error::NotPairState);
        };
        let (i, j) = orientation.support();
        let (first, second) = (a[i], a[j]);
        let sign = if first.norm() < tol || second.norm() < tol {
            Sign::Plus
        } else {
            let ratio = second / first;
            let rel = ratio / ratio.norm();
            if (rel - c(1.0)).norm() < tolerance::ORACLE {
                Sign::Plus
            } else if (rel + c(1.0)).norm() < tolerance::ORACLE {
                Sign::Minus
            } else {
                return Err(Error::NotPairState);
            }
        };
        let n = (first.norm_sqr() + second.norm_sqr()).sqrt();
        Self::new(first.norm() / n, second.norm() / n, orientation, sign)
    }
}

/// The four Bell states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BellState {
    PhiPlus,
    PsiPlus,
    PsiMinus,
    PhiMinus,
}

impl BellState {
    pub const ALL: [BellState; 4] = [
        BellState::PhiPlus,
        BellState::PsiPlus,
        BellState::PsiMinus,
        BellState::PhiMinus,
    ];

    pub fn state(self) -> StateVector {
        let h = FRAC_1_SQRT_2;
        let amps = match self {
            BellState::PhiPlus => [h, 0.0, 0.0, h],
            BellState::PhiMinus => [h, 0.0, 0.0, -h],
            BellState::PsiPlus => [0.0, h, h, 0.0],
            BellState::PsiMinus => [0.0, h, -h, 0.0],
        };
        StateVector::from_real(&amps).expect("Bell states are normalized")
    }
}

impl fmt::Display for BellState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BellState::PhiPlus => "φ+",
            BellState::PsiPlus => "ψ+",
            BellState::PsiMinus => "ψ-",
            BellState::PhiMinus => "φ-",
        })
    }
}

fn require_two_qubits(state: &StateVector) -> Result<()> {
    if state.n_qubits() != 2 {
        return Err(Error::WrongQubitCount {
            expected: 2,
            got: state.n_qubits(),
        });
    }
    Ok(())
}

/// `2|ad − bc|` for amplitudes `(a, b, c, d)` on `|00⟩, |01⟩, |10⟩, |11⟩`.
pub fn concurrence_pure(state: &StateVector) -> Result<Concurrence> {
    require_two_qubits(state)?;
    let a = state.amplitudes();
    let value = 2.0 * (a[0] * a[3] - a[1] * a[2]).norm();
    Ok(Concurrence(value.min(1.0)))
}

/// Schmidt decomposition `Σ_k s_k |left_k⟩|right_k⟩` with `s_0 ≥ s_1 ≥ 0`.
#[derive(Debug, Clone)]
pub struct Schmidt {
    pub coefficients: [f64; 2],
    pub left: [StateVector; 2],
    pub right: [StateVector; 2],
}

impl Schmidt {
    pub fn major(&self) -> f64 {
        self.coefficients[0]
    }

    pub fn minor(&self) -> f64 {
        self.coefficients[1]
    }

    /// Rebuilds the two-qubit state from the decomposition.
    pub fn reconstruct(&self) -> StateVector {
        let mut amps = vec![C64::default(); 4];
        for k in 0..2 {
            let term = self.left[k]
                .tensor(&self.right[k])
                .expect("two single-qubit states");
            for (slot, t) in amps.iter_mut().zip(term.amplitudes()) {
                *slot += t * self.coefficients[k];
            }
        }
        StateVector::normalized(amps).expect("non-zero reconstruction")
    }
}

/// Singular value decomposition of the 2×2 amplitude matrix.
pub fn schmidt(state: &StateVector) -> Result<Schmidt> {
    require_two_qubits(state)?;
    let a = state.amplitudes();
    let m = Matrix2::new(a[0], a[1], a[2], a[3]);
    let svd = m.svd(true, true);
    let u = svd.u.expect("requested U");
    let v_t = svd.v_t.expect("requested V^T");
    let s = svd.singular_values;
    let order = if s[0] >= s[1] { [0, 1] } else { [1, 0] };
    let single =
        |x: C64, y: C64| StateVector::normalized(vec![x, y]).expect("singular vectors are unit");
    let left = order.map(|k| single(u[(0, k)], u[(1, k)]));
    let right = order.map(|k| single(v_t[(k, 0)], v_t[(k, 1)]));
    let coefficients = order.map(|k| s[k]);
    Ok(Schmidt {
        coefficients,
        left,
        right,
    })
}

/// `|⟨target|state⟩|²`.
pub fn epr_fidelity(state: &StateVector, target: BellState) -> Result<f64> {
    require_two_qubits(state)?;
    Ok(target.state().inner(state)?.norm_sqr().min(1.0))
}

/// Bell state with the largest overlap, and that overlap.
pub fn closest_bell_state(state: &StateVector) -> Result<(BellState, f64)> {
    require_two_qubits(state)?;
    let mut best = (BellState::PhiPlus, -1.0);
    for b in BellState::ALL {
        let f = epr_fidelity(state, b)?;
        if f > best.1 {
            best = (b, f);
        }
    }
    Ok(best)
}

/// True if the state equals one of the four Bell states up to global phase.
pub fn is_bell_state(state: &StateVector) -> bool {
    closest_bell_state(state).is_ok_and(|(_, f)| f >= 1.0 - tolerance::ORACLE)
}

/// Measuring-basis concurrences at which the strategy-4 success
/// probability changes slope.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecialConcurrences {
    /// Matching level: the plateau starts here.
    pub minus: Concurrence,
    pub plus: Concurrence,
}

/// `c1·c2 / (1 ∓ √((1 − c1²)(1 − c2²)))`, both zero when either input is zero.
///
/// The `−` branch is evaluated as `c1·c2·(1 + √P) / (c1² + c2² − c1²c2²)`,
/// which avoids cancellation for weakly entangled inputs.
pub fn special_concurrences(c1: Concurrence, c2: Concurrence) -> SpecialConcurrences {
    let (a, b) = (c1.value(), c2.value());
    if a == 0.0 || b == 0.0 {
        return SpecialConcurrences {
            minus: Concurrence::ZERO,
            plus: Concurrence::ZERO,
        };
    }
    let (a2, b2) = (a * a, b * b);
    let root = ((1.0 - a2) * (1.0 - b2)).sqrt();
    SpecialConcurrences {
        minus: Concurrence((a * b * (1.0 + root) / (a2 + b2 - a2 * b2)).min(1.0)),
        plus: Concurrence((a * b / (1.0 + root)).min(1.0)),
    }
}
