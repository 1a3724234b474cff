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

use entswap::qstate::{gates, QubitIndex, StateVector, C64};
use entswap::tolerance;
use entswap::use_extraction::build_use_unitary;
use proptest::prelude::*;

fn state_on(n: usize) -> impl Strategy<Value = StateVector> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1 << n)
        .prop_filter("nonzero", |v| {
            v.iter().map(|(a, b)| a * a + b * b).sum::<f64>() > 1e-3
        })
        .prop_map(|v| {
            StateVector::normalized(v.into_iter().map(|(re, im)| C64::new(re, im)).collect())
                .unwrap()
        })
}

fn arb_state(min_qubits: usize, max_qubits: usize) -> impl Strategy<Value = StateVector> {
    (min_qubits..=max_qubits).prop_flat_map(state_on)
}

fn bell_basis_2q() -> Vec<StateVector> {
    entswap::measurement_bases::bell_basis().elements().to_vec()
}

proptest! {
    #[test]
    fn unitaries_preserve_norm(state in arb_state(1, 5), t in 0usize..5, u in 0.0f64..1.0) {
        let n = state.n_qubits();
        let t = t % n;
        let h = state.apply_unitary(&gates::hadamard(), &[QubitIndex(t)]).unwrap();
        prop_assert!((h.norm_sqr() - 1.0).abs() < tolerance::STRUCTURAL);
        if n >= 2 {
            let v = (1.0 - u * u).sqrt();
            let use_u = build_use_unitary(u, v).unwrap();
            let other = (t + 1) % n;
            let out = h.apply_unitary(&use_u, &[QubitIndex(t), QubitIndex(other)]).unwrap();
            prop_assert!((out.norm_sqr() - 1.0).abs() < tolerance::STRUCTURAL);
        }
    }

    #[test]
    fn measurement_probabilities_sum_to_one(state in arb_state(2, 5), first in 0usize..5) {
        let n = state.n_qubits();
        let targets = [QubitIndex(first % n), QubitIndex((first + 1) % n)];
        let branches = state.measure_subsystem(&bell_basis_2q(), &targets).unwrap();
        let total: f64 = branches.iter().map(|b| b.probability).sum();
        prop_assert!((total - 1.0).abs() < tolerance::STRUCTURAL);
        for b in &branches {
            if let Some(post) = &b.post_state {
                prop_assert!((post.norm_sqr() - 1.0).abs() < tolerance::STRUCTURAL);
            }
        }
    }

    #[test]
    fn branches_reconstruct_state(state in state_on(4)) {
        let basis = bell_basis_2q();
        let targets = [QubitIndex(1), QubitIndex(3)];
        let branches = state.measure_subsystem(&basis, &targets).unwrap();
        let reordered = state
            .permute(&[QubitIndex(1), QubitIndex(3), QubitIndex(0), QubitIndex(2)])
            .unwrap();
        let mut sum = vec![C64::default(); 16];
        for b in &branches {
            let Some(res) = &b.residual else { continue };
            let term = basis[b.outcome].tensor(res).unwrap().scale(C64::new(b.probability.sqrt(), 0.0));
            for (s, t) in sum.iter_mut().zip(term.amplitudes()) {
                *s += t;
            }
        }
        let dev = sum
            .iter()
            .zip(reordered.amplitudes())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        prop_assert!(dev < 1e-6, "deviation {dev}");
    }

    #[test]
    fn permute_round_trip(state in arb_state(1, 5)) {
        let n = state.n_qubits();
        let forward: Vec<QubitIndex> = (0..n).map(|j| QubitIndex((j + 1) % n)).collect();
        let back: Vec<QubitIndex> = (0..n).map(|j| QubitIndex((j + n - 1) % n)).collect();
        let round = state.permute(&forward).unwrap().permute(&back).unwrap();
        prop_assert!(round.max_deviation(&state) < 1e-15);
    }
}

#[test]
fn non_unitary_is_rejected() {
    let state = StateVector::basis_state(2, 0).unwrap();
    let mut m = gates::identity(1);
    m[(0, 0)] = C64::new(2.0, 0.0);
    assert!(matches!(
        state.apply_unitary(&m, &[QubitIndex(0)]),
        Err(entswap::Error::NonUnitary(_))
    ));
}

#[test]
fn six_qubits_are_rejected() {
    assert!(StateVector::basis_state(6, 0).is_err());
}
