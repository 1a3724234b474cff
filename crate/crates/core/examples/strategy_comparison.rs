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

//! All four strategies side by side, for inputs given on the command line.
//!
//! `cargo run --example strategy_comparison -- 0.3 0.5`

use entswap::report;
use entswap::strategies::SwapInputs;

fn main() -> entswap::Result<()> {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("amplitude"))
        .collect();
    let (alpha, gamma) = match args[..] {
        [a, g] => (a, g),
        _ => (0.3, 0.5),
    };
    let inputs = SwapInputs::new(alpha, gamma)?;
    for r in report::all_strategies(&inputs, None)? {
        println!(
            "{:?}: simulated {:.12}  closed form {:.12}",
            r.strategy, r.simulated_success, r.closed_form
        );
    }
    println!();
    print!("{}", report::render(&inputs, None)?);
    Ok(())
}
