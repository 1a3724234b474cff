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

//! Strategy 4 as a function of the measuring-basis concurrence.
//!
//! Below the matching concurrence the success probability rises; beyond it
//! the curve is flat at the strategy-2 value.

use std::f64::consts::FRAC_1_SQRT_2;

use entswap::measurement_bases::basis_concurrence;
use entswap::strategies::{closed_form, special_x_values, strategy4, SwapInputs};

fn main() -> entswap::Result<()> {
    let inputs = SwapInputs::new(0.35, 0.55)?;
    let sx = special_x_values(&inputs);
    let sc = inputs.special_concurrences();
    println!(
        "x1 = {:.6} (C = {:.6}, c+ = {:.6})",
        sx.x1,
        basis_concurrence(sx.x1).value(),
        sc.plus.value()
    );
    println!(
        "onset = {:.6} (C = {:.6}, c- = {:.6})",
        sx.plateau_onset(),
        basis_concurrence(sx.plateau_onset()).value(),
        sc.minus.value()
    );
    println!("P_s2 = {:.12}\n", closed_form::p_s2(&inputs));
    for k in 0..=20 {
        let x = FRAC_1_SQRT_2 * k as f64 / 20.0;
        let r = strategy4(&inputs, x)?;
        println!(
            "x = {x:.4}  C = {:.4}  P_s4 = {:.12}  {:?}",
            basis_concurrence(x).value(),
            r.simulated_success,
            closed_form::p_s4_regime(&inputs, x)
        );
    }
    Ok(())
}
