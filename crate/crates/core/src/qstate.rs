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

//! Dense statevector over a small ordered qubit register.
//!
//! Qubit 0 is the most significant bit of the basis index. Registers are
//! capped at [`MAX_QUBITS`]; every operation returns a new value.

use std::fmt;

use nalgebra::{Complex, DMatrix};

use crate::error::{Error, Result};
use crate::tolerance;

pub type C64 = Complex<f64>;

/// Largest register the simulator accepts.
pub const MAX_QUBITS: usize = 5;

#[inline]
pub(crate) fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// Position of a qubit in a register.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QubitIndex(pub usize);

impl From<usize> for QubitIndex {
    fn from(i: usize) -> Self {
        QubitIndex(i)
    }
}

#[derive(Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amplitudes: Vec<C64>,
}

impl fmt::Debug for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StateVector[{}](", self.n_qubits)?;
        let mut first = true;
        for (i, a) in self.amplitudes.iter().enumerate() {
            if a.norm() < 1e-15 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(
                f,
                "({:.6}{:+.6}i)|{:0width$b}⟩",
                a.re,
                a.im,
                i,
                width = self.n_qubits
            )?;
        }
        write!(f, ")")
    }
}

impl StateVector {
    /// Builds a normalized state from raw amplitudes.
    pub fn from_amplitudes(amplitudes: Vec<C64>) -> Result<Self> {
        let state = Self::from_unnormalized(amplitudes)?;
        let n2 = state.norm_sqr();
        if (n2 - 1.0).abs() > tolerance::STRUCTURAL {
            return Err(Error::NotNormalized(n2));
        }
        Ok(state)
    }

    /// Builds a state from real amplitudes.
    pub fn from_real(amplitudes: &[f64]) -> Result<Self> {
        Self::from_amplitudes(amplitudes.iter().map(|&a| c(a)).collect())
    }

    /// Rescales arbitrary amplitudes to unit norm.
    pub fn normalized(amplitudes: Vec<C64>) -> Result<Self> {
        let mut state = Self::from_unnormalized(amplitudes)?;
        let n = state.norm_sqr().sqrt();
        if n < tolerance::DEGENERATE {
            return Err(Error::NotNormalized(n * n));
        }
        state.amplitudes.iter_mut().for_each(|a| *a /= n);
        Ok(state)
    }

    fn from_unnormalized(amplitudes: Vec<C64>) -> Result<Self> {
        let len = amplitudes.len();
        if !len.is_power_of_two() {
            return Err(Error::BadLength(len));
        }
        let n_qubits = len.trailing_zeros() as usize;
        if n_qubits > MAX_QUBITS {
            return Err(Error::TooManyQubits(n_qubits));
        }
        Ok(StateVector {
            n_qubits,
            amplitudes,
        })
    }

    /// Computational basis state `|index⟩` on `n_qubits` qubits.
    pub fn basis_state(n_qubits: usize, index: usize) -> Result<Self> {
        if n_qubits > MAX_QUBITS {
            return Err(Error::TooManyQubits(n_qubits));
        }
        let dim = 1usize << n_qubits;
        if index >= dim {
            return Err(Error::BadTarget {
                targets: vec![index],
                n_qubits,
            });
        }
        let mut amplitudes = vec![C64::default(); dim];
        amplitudes[index] = c(1.0);
        Ok(StateVector {
            n_qubits,
            amplitudes,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> C64 {
        self.amplitudes[index]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Result<C64> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::WrongQubitCount {
                expected: self.n_qubits,
                got: other.n_qubits,
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Largest amplitude-wise deviation from `other`.
    pub fn max_deviation(&self, other: &StateVector) -> f64 {
        if self.n_qubits != other.n_qubits {
            return f64::INFINITY;
        }
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Amplitude-wise deviation after removing the relative global phase.
    pub fn max_deviation_up_to_phase(&self, other: &StateVector) -> f64 {
        let Ok(overlap) = other.inner(self) else {
            return f64::INFINITY;
        };
        let phase = if overlap.norm() > tolerance::DEGENERATE {
            overlap / overlap.norm()
        } else {
            c(1.0)
        };
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - phase * b).norm())
            .fold(0.0, f64::max)
    }

    /// Multiplies every amplitude by `factor`; the result need not be normalized.
    pub fn scale(&self, factor: C64) -> StateVector {
        StateVector {
            n_qubits: self.n_qubits,
            amplitudes: self.amplitudes.iter().map(|a| a * factor).collect(),
        }
    }

    /// Kronecker product; `self` occupies the leading qubits.
    pub fn tensor(&self, other: &StateVector) -> Result<StateVector> {
        let n_qubits = self.n_qubits + other.n_qubits;
        if n_qubits > MAX_QUBITS {
            return Err(Error::TooManyQubits(n_qubits));
        }
        let amplitudes = self
            .amplitudes
            .iter()
            .flat_map(|a| other.amplitudes.iter().map(move |b| a * b))
            .collect();
        Ok(StateVector {
            n_qubits,
            amplitudes,
        })
    }

    #[inline]
    fn mask(&self, q: usize) -> usize {
        1 << (self.n_qubits - 1 - q)
    }

    fn check_targets(&self, targets: &[QubitIndex]) -> Result<()> {
        let bad = || Error::BadTarget {
            targets: targets.iter().map(|t| t.0).collect(),
            n_qubits: self.n_qubits,
        };
        for (i, t) in targets.iter().enumerate() {
            if t.0 >= self.n_qubits || targets[..i].contains(t) {
                return Err(bad());
            }
        }
        Ok(())
    }

    /// Basis index obtained by writing the bits of `sub` (targets[0] most
    /// significant) onto the target positions of `rest`.
    fn scatter(&self, rest: usize, sub: usize, targets: &[QubitIndex]) -> usize {
        let k = targets.len();
        targets.iter().enumerate().fold(rest, |idx, (j, t)| {
            if (sub >> (k - 1 - j)) & 1 == 1 {
                idx | self.mask(t.0)
            } else {
                idx
            }
        })
    }

    /// Basis indices with every target bit cleared, in ascending order.
    fn rest_indices(&self, targets: &[QubitIndex]) -> Vec<usize> {
        let target_mask = targets.iter().fold(0, |m, t| m | self.mask(t.0));
        (0..self.dim()).filter(|i| i & target_mask == 0).collect()
    }

    /// Applies `u` to the ordered `targets`, identity elsewhere.
    pub fn apply_unitary(&self, u: &DMatrix<C64>, targets: &[QubitIndex]) -> Result<StateVector> {
        self.check_targets(targets)?;
        let sub_dim = 1usize << targets.len();
        if u.nrows() != sub_dim || u.ncols() != sub_dim {
            return Err(Error::DimensionMismatch {
                got: u.nrows().max(u.ncols()),
                targets: targets.len(),
            });
        }
        let dev = unitarity_deviation(u);
        if dev > tolerance::STRUCTURAL {
            return Err(Error::NonUnitary(dev));
        }
        let mut out = vec![C64::default(); self.dim()];
        let mut local = vec![C64::default(); sub_dim];
        for rest in self.rest_indices(targets) {
            for (s, slot) in local.iter_mut().enumerate() {
                *slot = self.amplitudes[self.scatter(rest, s, targets)];
            }
            for r in 0..sub_dim {
                let idx = self.scatter(rest, r, targets);
                out[idx] = (0..sub_dim).map(|s| u[(r, s)] * local[s]).sum();
            }
        }
        Ok(StateVector {
            n_qubits: self.n_qubits,
            amplitudes: out,
        })
    }

    /// Projective measurement of `targets` in an orthonormal basis of
    /// `2^k` states on `k` qubits.
    pub fn measure_subsystem(
        &self,
        basis: &[StateVector],
        targets: &[QubitIndex],
    ) -> Result<Vec<MeasurementBranch>> {
        self.check_targets(targets)?;
        let k = targets.len();
        let sub_dim = 1usize << k;
        if basis.len() != sub_dim {
            return Err(Error::DimensionMismatch {
                got: basis.len(),
                targets: k,
            });
        }
        for b in basis {
            if b.n_qubits != k {
                return Err(Error::WrongQubitCount {
                    expected: k,
                    got: b.n_qubits,
                });
            }
        }
        let dev = gram_deviation(basis);
        if dev > tolerance::STRUCTURAL {
            return Err(Error::NonOrthonormalBasis(dev));
        }

        let rest = self.rest_indices(targets);
        let residual_qubits = self.n_qubits - k;
        let branches = basis
            .iter()
            .enumerate()
            .map(|(outcome, b)| {
                // residual amplitude for every configuration of the unmeasured qubits
                let projected: Vec<C64> = rest
                    .iter()
                    .map(|&r| {
                        (0..sub_dim)
                            .map(|s| {
                                b.amplitudes[s].conj()
                                    * self.amplitudes[self.scatter(r, s, targets)]
                            })
                            .sum()
                    })
                    .collect();
                let probability: f64 = projected.iter().map(|a| a.norm_sqr()).sum();
                if probability < tolerance::DEGENERATE {
                    return MeasurementBranch {
                        outcome,
                        probability,
                        post_state: None,
                        residual: None,
                    };
                }
                let norm = probability.sqrt();
                let residual: Vec<C64> = projected.iter().map(|a| a / norm).collect();
                let mut post = vec![C64::default(); self.dim()];
                for (&r, ra) in rest.iter().zip(&residual) {
                    for s in 0..sub_dim {
                        post[self.scatter(r, s, targets)] = b.amplitudes[s] * ra;
                    }
                }
                MeasurementBranch {
                    outcome,
                    probability,
                    post_state: Some(StateVector {
                        n_qubits: self.n_qubits,
                        amplitudes: post,
                    }),
                    residual: Some(StateVector {
                        n_qubits: residual_qubits,
                        amplitudes: residual,
                    }),
                }
            })
            .collect();
        Ok(branches)
    }

    /// Reorders qubits: qubit `order[j]` of `self` becomes qubit `j` of the result.
    pub fn permute(&self, order: &[QubitIndex]) -> Result<StateVector> {
        if order.len() != self.n_qubits {
            return Err(Error::BadTarget {
                targets: order.iter().map(|t| t.0).collect(),
                n_qubits: self.n_qubits,
            });
        }
        self.check_targets(order)?;
        let n = self.n_qubits;
        let mut out = vec![C64::default(); self.dim()];
        for (new_idx, slot) in out.iter_mut().enumerate() {
            let old_idx = order.iter().enumerate().fold(0, |acc, (j, q)| {
                if (new_idx >> (n - 1 - j)) & 1 == 1 {
                    acc | self.mask(q.0)
                } else {
                    acc
                }
            });
            *slot = self.amplitudes[old_idx];
        }
        Ok(StateVector {
            n_qubits: n,
            amplitudes: out,
        })
    }
}

/// One outcome of [`StateVector::measure_subsystem`].
#[derive(Debug, Clone)]
pub struct MeasurementBranch {
    /// Index into the measurement basis.
    pub outcome: usize,
    pub probability: f64,
    /// Full register with the measured qubits collapsed onto the basis element.
    /// `None` for degenerate branches.
    pub post_state: Option<StateVector>,
    /// Normalized state of the unmeasured qubits, in their original order.
    pub residual: Option<StateVector>,
}

impl MeasurementBranch {
    pub fn is_degenerate(&self) -> bool {
        self.post_state.is_none()
    }
}

/// `max |(U†U − I)_ij|`.
pub fn unitarity_deviation(u: &DMatrix<C64>) -> f64 {
    if u.nrows() != u.ncols() {
        return f64::INFINITY;
    }
    let prod = u.adjoint() * u;
    let id = DMatrix::<C64>::identity(u.nrows(), u.ncols());
    (prod - id).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `max |⟨b_i|b_j⟩ − δ_ij|` over a family of states.
pub fn gram_deviation(basis: &[StateVector]) -> f64 {
    let mut dev: f64 = 0.0;
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            let Ok(g) = a.inner(b) else {
                return f64::INFINITY;
            };
            let expected = if i == j { 1.0 } else { 0.0 };
            dev = dev.max((g - c(expected)).norm());
        }
    }
    dev
}

/// Common single-qubit gates.
pub mod gates {
    use super::{c, C64};
    use nalgebra::DMatrix;

    pub fn identity(n_qubits: usize) -> DMatrix<C64> {
        let d = 1 << n_qubits;
        DMatrix::identity(d, d)
    }

    pub fn pauli_x() -> DMatrix<C64> {
        DMatrix::from_row_slice(2, 2, &[c(0.0), c(1.0), c(1.0), c(0.0)])
    }

    pub fn pauli_z() -> DMatrix<C64> {
        DMatrix::from_row_slice(2, 2, &[c(1.0), c(0.0), c(0.0), c(-1.0)])
    }

    pub fn hadamard() -> DMatrix<C64> {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        DMatrix::from_row_slice(2, 2, &[c(h), c(h), c(h), c(-h)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn q(i: usize) -> QubitIndex {
        QubitIndex(i)
    }

    fn assert_amps(s: &StateVector, expected: &[f64]) {
        assert_eq!(s.dim(), expected.len());
        for (a, e) in s.amplitudes().iter().zip(expected) {
            assert!((a - c(*e)).norm() < 1e-12, "{s:?} vs {expected:?}");
        }
    }

    #[test]
    fn tensor_of_basis_states() {
        let zero = StateVector::basis_state(1, 0).unwrap();
        let one = StateVector::basis_state(1, 1).unwrap();
        assert_amps(&zero.tensor(&one).unwrap(), &[0.0, 1.0, 0.0, 0.0]);
    }

    #[test]
    fn tensor_bell_with_zero() {
        let psi_plus = StateVector::from_real(&[0.0, FRAC_1_SQRT_2, FRAC_1_SQRT_2, 0.0]).unwrap();
        let zero = StateVector::basis_state(1, 0).unwrap();
        let s = psi_plus.tensor(&zero).unwrap();
        assert_amps(
            &s,
            &[0.0, 0.0, FRAC_1_SQRT_2, 0.0, FRAC_1_SQRT_2, 0.0, 0.0, 0.0],
        );
    }

    #[test]
    fn tensor_of_partially_entangled_pairs() {
        // 0.6|01⟩ + 0.8|10⟩ on both pairs
        let pair = StateVector::from_real(&[0.0, 0.6, 0.8, 0.0]).unwrap();
        let s = pair.tensor(&pair).unwrap();
        let mut expected = [0.0; 16];
        expected[0b0101] = 0.36;
        expected[0b0110] = 0.48;
        expected[0b1001] = 0.48;
        expected[0b1010] = 0.64;
        assert_amps(&s, &expected);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(
            StateVector::from_real(&[1.0, 0.0, 0.0]).unwrap_err(),
            Error::BadLength(3)
        );
        assert!(matches!(
            StateVector::from_real(&[1.0, 1.0]),
            Err(Error::NotNormalized(_))
        ));
        assert!(matches!(
            StateVector::basis_state(6, 0),
            Err(Error::TooManyQubits(6))
        ));
        let big = StateVector::basis_state(3, 0).unwrap();
        assert!(matches!(big.tensor(&big), Err(Error::TooManyQubits(6))));
    }

    #[test]
    fn pauli_z_on_second_qubit() {
        let s = StateVector::basis_state(2, 0b01).unwrap();
        let out = s.apply_unitary(&gates::pauli_z(), &[q(1)]).unwrap();
        assert_amps(&out, &[0.0, -1.0, 0.0, 0.0]);
    }

    #[test]
    fn identity_is_noop() {
        let s = StateVector::normalized(vec![
            C64::new(0.1, 0.2),
            C64::new(-0.3, 0.0),
            C64::new(0.0, 0.7),
            C64::new(0.4, -0.1),
        ])
        .unwrap();
        let out = s.apply_unitary(&gates::identity(2), &[q(1), q(0)]).unwrap();
        assert!(out.max_deviation(&s) < 1e-15);
    }

    #[test]
    fn target_ordering_matters() {
        // CNOT with control = first target
        let mut cnot = DMatrix::<C64>::zeros(4, 4);
        cnot[(0, 0)] = c(1.0);
        cnot[(1, 1)] = c(1.0);
        cnot[(2, 3)] = c(1.0);
        cnot[(3, 2)] = c(1.0);
        let s = StateVector::basis_state(3, 0b001).unwrap();
        // control qubit 2 (set), target qubit 0
        let out = s.apply_unitary(&cnot, &[q(2), q(0)]).unwrap();
        assert_amps(&out, &[0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0]);
        let out = s.apply_unitary(&cnot, &[q(0), q(2)]).unwrap();
        assert!(out.max_deviation(&s) < 1e-15);
    }

    #[test]
    fn apply_unitary_errors() {
        let s = StateVector::basis_state(2, 0).unwrap();
        let mut not_unitary = gates::pauli_x();
        not_unitary[(0, 0)] = c(0.5);
        assert!(matches!(
            s.apply_unitary(&not_unitary, &[q(0)]),
            Err(Error::NonUnitary(_))
        ));
        assert!(matches!(
            s.apply_unitary(&gates::identity(2), &[q(0), q(0)]),
            Err(Error::BadTarget { .. })
        ));
        assert!(matches!(
            s.apply_unitary(&gates::pauli_x(), &[q(2)]),
            Err(Error::BadTarget { .. })
        ));
        assert!(matches!(
            s.apply_unitary(&gates::pauli_x(), &[q(0), q(1)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn measure_eigenstate() {
        let s = StateVector::basis_state(2, 0).unwrap();
        let basis: Vec<_> = (0..4)
            .map(|i| StateVector::basis_state(2, i).unwrap())
            .collect();
        let branches = s.measure_subsystem(&basis, &[q(0), q(1)]).unwrap();
        assert!((branches[0].probability - 1.0).abs() < 1e-15);
        for b in &branches[1..] {
            assert_eq!(b.probability, 0.0);
            assert!(b.is_degenerate());
            assert!(b.residual.is_none());
        }
        assert_eq!(branches[0].residual.as_ref().unwrap().n_qubits(), 0);
    }

    #[test]
    fn measure_one_qubit_of_bell_pair() {
        let s = StateVector::from_real(&[FRAC_1_SQRT_2, 0.0, 0.0, FRAC_1_SQRT_2]).unwrap();
        let basis = [
            StateVector::basis_state(1, 0).unwrap(),
            StateVector::basis_state(1, 1).unwrap(),
        ];
        let branches = s.measure_subsystem(&basis, &[q(1)]).unwrap();
        for (k, b) in branches.iter().enumerate() {
            assert!((b.probability - 0.5).abs() < 1e-15);
            let r = b.residual.as_ref().unwrap();
            assert!((r.amplitude(k) - c(1.0)).norm() < 1e-15);
            let post = b.post_state.as_ref().unwrap();
            assert!((post.amplitude(if k == 0 { 0 } else { 3 }) - c(1.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn measure_rejects_non_orthonormal() {
        let s = StateVector::basis_state(2, 0).unwrap();
        let zero = StateVector::basis_state(1, 0).unwrap();
        assert!(matches!(
            s.measure_subsystem(&[zero.clone(), zero], &[q(0)]),
            Err(Error::NonOrthonormalBasis(_))
        ));
    }

    #[test]
    fn permute_swaps_qubits() {
        let s = StateVector::basis_state(3, 0b100).unwrap();
        let p = s.permute(&[q(1), q(2), q(0)]).unwrap();
        assert_amps(&p, &[0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    }
}
