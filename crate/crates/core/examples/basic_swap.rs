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

//! Deterministic swap of two maximally entangled pairs.
//!
//! Every Bell outcome on C1C2 leaves AB in a Bell state after a local Pauli
//! correction, so the swap succeeds with certainty.

use std::f64::consts::FRAC_1_SQRT_2;

use entswap::entanglement::closest_bell_state;
use entswap::strategies::{basic_deterministic_swap, SwapInputs};

fn main() -> entswap::Result<()> {
    let inputs = SwapInputs::new(FRAC_1_SQRT_2, FRAC_1_SQRT_2)?;
    let report = basic_deterministic_swap(&inputs)?;
    for branch in &report.branches {
        let label = match &branch.post_state {
            Some(ab) => closest_bell_state(ab)?.0.to_string(),
            None => "-".into(),
        };
        println!(
            "{:<4} p = {:.4}  AB -> {label}  corrections {:?}",
            branch.outcome.to_string(),
            branch.probability,
            branch.corrections
        );
    }
    println!("total success {:.12}", report.simulated_success);
    Ok(())
}
