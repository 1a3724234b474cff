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

//! Unambiguous extraction of an EPR pair from a single partially entangled pair.

use entswap::entanglement::{closest_bell_state, PairState};
use entswap::use_extraction::{extract_epr, Side};

fn main() -> entswap::Result<()> {
    println!(
        "{:>6} {:>8} {:>12} {:>12}  success state",
        "u", "C", "simulated", "closed form"
    );
    for u in [0.1, 0.3, 0.5, 0.6, 0.7] {
        let v = (1.0f64 - u * u).sqrt();
        let pair = PairState::psi(u, v)?;
        let r = extract_epr(&pair, Side::First)?;
        let bell = match &r.success_state {
            Some(s) => {
                let (b, f) = closest_bell_state(s)?;
                format!("{b} (fidelity {f:.12})")
            }
            None => "-".into(),
        };
        println!(
            "{u:>6.2} {:>8.4} {:>12.9} {:>12.9}  {bell}",
            pair.concurrence().value(),
            r.success_probability,
            r.closed_form
        );
    }
    Ok(())
}
