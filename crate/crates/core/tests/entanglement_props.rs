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

use entswap::entanglement::{
    concurrence_pure, epr_fidelity, is_bell_state, schmidt, special_concurrences, BellState,
    Concurrence, Orientation, PairState, Sign,
};
use entswap::qstate::{StateVector, C64};
use entswap::tolerance;
use entswap::use_extraction::{canonicalize_phi, extract_epr, optimal_probability, Side};
use proptest::prelude::*;

fn two_qubit_state() -> impl Strategy<Value = StateVector> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 4)
        .prop_filter("nonzero", |v| {
            v.iter().map(|(a, b)| a * a + b * b).sum::<f64>() > 1e-3
        })
        .prop_map(|v| {
            StateVector::normalized(v.into_iter().map(|(re, im)| C64::new(re, im)).collect())
                .unwrap()
        })
}

fn amplitude() -> impl Strategy<Value = (f64, f64)> {
    (0.0f64..=1.0).prop_map(|u| (u, (1.0 - u * u).sqrt()))
}

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

proptest! {
    #[test]
    fn concurrence_is_twice_schmidt_product(state in two_qubit_state()) {
        let c = concurrence_pure(&state).unwrap().value();
        let s = schmidt(&state).unwrap();
        prop_assert!((c - 2.0 * s.major() * s.minor()).abs() < 1e-12);
        prop_assert!(s.reconstruct().max_deviation(&state) < 1e-12);
    }

    #[test]
    fn bell_fidelity_iff_maximal_concurrence((u, v) in amplitude(), s in sign()) {
        let pair = PairState::new(u, v, Orientation::Psi, s).unwrap();
        let state = pair.to_statevector();
        let maximal = (pair.concurrence().value() - 1.0).abs() < 1e-10;
        if is_bell_state(&state) {
            prop_assert!(maximal);
        }
        let target = match s {
            Sign::Plus => BellState::PsiPlus,
            Sign::Minus => BellState::PsiMinus,
        };
        let f = epr_fidelity(&state, target).unwrap();
        prop_assert!((f - (u + v).powi(2) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn extraction_matches_closed_form((u, v) in amplitude(), s in sign()) {
        let pair = PairState::new(u, v, Orientation::Psi, s).unwrap();
        let r = extract_epr(&pair, Side::First).unwrap();
        let c = 2.0 * u * v;
        prop_assert!((r.success_probability - optimal_probability(c)).abs() < 1e-10);
        prop_assert!((r.success_probability + r.failure_probability - 1.0).abs() < tolerance::STRUCTURAL);
        if let Some(ok) = &r.success_state {
            prop_assert!(concurrence_pure(ok).unwrap().value() > 1.0 - 1e-10);
        }
        if let Some(bad) = &r.failure_state {
            prop_assert!(concurrence_pure(bad).unwrap().value() < 1e-10);
        }
    }

    #[test]
    fn extraction_is_side_independent((u, v) in amplitude()) {
        let pair = PairState::psi(u, v).unwrap();
        let a = extract_epr(&pair, Side::First).unwrap();
        let b = extract_epr(&pair, Side::Second).unwrap();
        prop_assert!((a.success_probability - b.success_probability).abs() < 1e-14);
    }

    #[test]
    fn extraction_probability_is_monotone(c1 in 0.0f64..=1.0, c2 in 0.0f64..=1.0) {
        let (lo, hi) = if c1 <= c2 { (c1, c2) } else { (c2, c1) };
        prop_assert!(optimal_probability(lo) <= optimal_probability(hi));
    }

    #[test]
    fn phi_rotation_preserves_concurrence((u, v) in amplitude(), s in sign()) {
        let pair = PairState::new(u, v, Orientation::Phi, s).unwrap();
        let psi = canonicalize_phi(&pair).unwrap();
        prop_assert_eq!(psi.orientation(), Orientation::Psi);
        prop_assert!((psi.concurrence().value() - pair.concurrence().value()).abs() < 1e-12);
    }

    #[test]
    fn special_concurrence_product(c1 in 0.01f64..0.999, c2 in 0.01f64..0.999) {
        let sc = special_concurrences(Concurrence::new(c1).unwrap(), Concurrence::new(c2).unwrap());
        let (m, p) = (sc.minus.value(), sc.plus.value());
        let expected = (c1 * c2).powi(2) / (c1 * c1 + c2 * c2 - c1 * c1 * c2 * c2);
        prop_assert!((m * p - expected).abs() < 1e-10);
        prop_assert!(m >= p);
    }
}

#[test]
fn extraction_rejects_phi_pairs() {
    let pair = PairState::phi(0.6, 0.8).unwrap();
    assert!(matches!(
        extract_epr(&pair, Side::First),
        Err(entswap::Error::WrongOrientation { .. })
    ));
}

#[test]
fn bell_states_have_unit_concurrence() {
    for b in BellState::ALL {
        assert_eq!(concurrence_pure(&b.state()).unwrap(), Concurrence::ONE);
        assert!(is_bell_state(&b.state()));
    }
}
