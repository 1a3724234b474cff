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

//! The parametrized measuring basis and its concurrence.

use entswap::entanglement::concurrence_pure;
use entswap::measurement_bases::{parametrized_basis, x_from_concurrence, BasisElement};
use entswap::qstate::gram_deviation;

fn main() -> entswap::Result<()> {
    for x in [0.0, 0.3, 0.5, std::f64::consts::FRAC_1_SQRT_2] {
        let basis = parametrized_basis(x)?;
        let c = basis.concurrence();
        println!(
            "x = {x:.4}  concurrence {:.6}  Gram deviation {:.1e}  x recovered {:.6}",
            c.value(),
            gram_deviation(basis.elements()),
            x_from_concurrence(c)
        );
        for e in BasisElement::ALL {
            let amps: Vec<String> = basis
                .element(e)
                .amplitudes()
                .iter()
                .map(|a| format!("{:+.4}", a.re))
                .collect();
            let ce = concurrence_pure(basis.element(e))?;
            println!("    {e:<3} [{}]  C = {:.6}", amps.join(", "), ce.value());
        }
    }
    Ok(())
}
