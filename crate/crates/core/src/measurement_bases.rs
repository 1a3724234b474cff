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

//! Two-qubit measuring bases: the Bell basis and the one-parameter family
//!
//! ```text
//! μ+ = x|00⟩ + y|11⟩    ν+ = x|01⟩ + y|10⟩
//! μ- = y|00⟩ − x|11⟩    ν- = y|01⟩ − x|10⟩
//! ```
//!
//! with `0 ≤ x ≤ 1/√2` and `y = √(1 − x²)`. Every element has concurrence `2xy`.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use crate::entanglement::{BellState, Concurrence};
use crate::error::{Error, Result};
use crate::qstate::StateVector;
use crate::tolerance;

/// Basis element label, in measurement order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisElement {
    MuPlus,
    NuPlus,
    NuMinus,
    MuMinus,
}

impl BasisElement {
    pub const ALL: [BasisElement; 4] = [
        BasisElement::MuPlus,
        BasisElement::NuPlus,
        BasisElement::NuMinus,
        BasisElement::MuMinus,
    ];

    pub fn index(self) -> usize {
        match self {
            BasisElement::MuPlus => 0,
            BasisElement::NuPlus => 1,
            BasisElement::NuMinus => 2,
            BasisElement::MuMinus => 3,
        }
    }

    /// The Bell state this element reduces to at `x = 1/√2`.
    pub fn bell_label(self) -> BellState {
        match self {
            BasisElement::MuPlus => BellState::PhiPlus,
            BasisElement::NuPlus => BellState::PsiPlus,
            BasisElement::NuMinus => BellState::PsiMinus,
            BasisElement::MuMinus => BellState::PhiMinus,
        }
    }

    /// Elements that enter the product-state decomposition with a minus sign.
    pub fn is_minus(self) -> bool {
        matches!(self, BasisElement::NuMinus | BasisElement::MuMinus)
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasisElement::MuPlus => "μ+",
            BasisElement::NuPlus => "ν+",
            BasisElement::NuMinus => "ν-",
            BasisElement::MuMinus => "μ-",
        })
    }
}

#[derive(Debug, Clone)]
pub struct MeasuringBasis {
    x: f64,
    y: f64,
    elements: [StateVector; 4],
}

impl MeasuringBasis {
    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn elements(&self) -> &[StateVector; 4] {
        &self.elements
    }

    pub fn element(&self, which: BasisElement) -> &StateVector {
        &self.elements[which.index()]
    }

    pub fn concurrence(&self) -> Concurrence {
        basis_concurrence(self.x)
    }

    pub fn is_bell(&self) -> bool {
        (self.x - FRAC_1_SQRT_2).abs() < tolerance::STRUCTURAL
    }
}

/// The parametrized basis at `x = 1/√2`: `(φ+, ψ+, ψ-, φ-)`.
pub fn bell_basis() -> MeasuringBasis {
    parametrized_basis(FRAC_1_SQRT_2).expect("1/√2 is in range")
}

pub fn parametrized_basis(x: f64) -> Result<MeasuringBasis> {
    if !x.is_finite()
        || !(-tolerance::STRUCTURAL..=FRAC_1_SQRT_2 + tolerance::STRUCTURAL).contains(&x)
    {
        return Err(Error::BadParameter {
            name: "x",
            value: x,
            constraint: "0 ≤ x ≤ 1/√2",
        });
    }
    let x = x.clamp(0.0, FRAC_1_SQRT_2);
    let y = (1.0 - x * x).sqrt();
    let mk = |a: [f64; 4]| StateVector::from_real(&a).expect("basis elements are normalized");
    Ok(MeasuringBasis {
        x,
        y,
        elements: [
            mk([x, 0.0, 0.0, y]),
            mk([0.0, x, y, 0.0]),
            mk([0.0, y, -x, 0.0]),
            mk([y, 0.0, 0.0, -x]),
        ],
    })
}

/// `2x√(1 − x²)`.
pub fn basis_concurrence(x: f64) -> Concurrence {
    let v = 2.0 * x * (1.0 - x * x).max(0.0).sqrt();
    Concurrence::new(v.clamp(0.0, 1.0)).expect("clamped")
}

/// The root `x ≤ 1/√2` of `2x√(1 − x²) = c`.
pub fn x_from_concurrence(c: Concurrence) -> f64 {
    let root = (1.0 - c.value() * c.value()).max(0.0).sqrt();
    ((1.0 - root) / 2.0).max(0.0).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entanglement::concurrence_pure;
    use crate::qstate::gram_deviation;

    #[test]
    fn bell_basis_elements() {
        let b = bell_basis();
        for e in BasisElement::ALL {
            let d = b.element(e).max_deviation(&e.bell_label().state());
            assert!(d < 1e-15, "{e}: {d}");
            assert!((concurrence_pure(b.element(e)).unwrap().value() - 1.0).abs() < 1e-12);
        }
        assert!(gram_deviation(b.elements()) < 1e-12);
        assert!(b.is_bell());
    }

    #[test]
    fn x_zero_is_computational() {
        let b = parametrized_basis(0.0).unwrap();
        let expected = [0b11, 0b10, 0b01, 0b00];
        for (el, idx) in b.elements().iter().zip(expected) {
            assert!((el.amplitude(idx).norm() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn element_concurrence_at_x_0_3() {
        let b = parametrized_basis(0.3).unwrap();
        let expected = 2.0 * 0.3 * 0.91f64.sqrt();
        assert!((expected - 0.57236).abs() < 1e-5);
        for el in b.elements() {
            assert!((concurrence_pure(el).unwrap().value() - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn sign_structure() {
        let x = 0.27;
        let b = parametrized_basis(x).unwrap();
        assert_eq!(b.element(BasisElement::MuMinus).amplitude(0b11).re, -x);
        assert_eq!(b.element(BasisElement::NuMinus).amplitude(0b10).re, -x);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(
            parametrized_basis(0.8),
            Err(Error::BadParameter { name: "x", .. })
        ));
        assert!(parametrized_basis(-0.01).is_err());
        assert!(parametrized_basis(f64::NAN).is_err());
    }

    #[test]
    fn x_from_concurrence_values() {
        assert!((x_from_concurrence(Concurrence::ONE) - FRAC_1_SQRT_2).abs() < 1e-15);
        assert_eq!(x_from_concurrence(Concurrence::ZERO), 0.0);
        let x = x_from_concurrence(Concurrence::new(0.6).unwrap());
        assert!((x - 0.1f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn concurrence_round_trip_grid() {
        for i in 0..=10 {
            let c = i as f64 / 10.0;
            let x = x_from_concurrence(Concurrence::new(c).unwrap());
            let basis = parametrized_basis(x).unwrap();
            for el in basis.elements() {
                assert!((concurrence_pure(el).unwrap().value() - c).abs() < 1e-12);
            }
        }
    }
}
