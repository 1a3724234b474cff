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

//! Randomized simulation-versus-closed-form checks, with one deliberately
//! corrupted formula to show how a counterexample is reported.

use entswap::strategies::SwapInputs;
use entswap::verify::{self, ClosedForms, VerifyConfig};

fn broken_p_s2(inputs: &SwapInputs) -> f64 {
    2.0 * inputs.alpha().max(inputs.gamma()).powi(2)
}

fn main() -> entswap::Result<()> {
    let config = VerifyConfig {
        trials: 200,
        seed: 11,
        ..VerifyConfig::default()
    };
    let report = verify::run(&config, &ClosedForms::default())?;
    print!("{report}");

    let corrupted = ClosedForms {
        p_s2: broken_p_s2,
        ..ClosedForms::default()
    };
    let report = verify::run(&config, &corrupted)?;
    if let Some((check, tuple)) = report.first_counterexample() {
        println!("\ncorrupted run fails at {check}: {tuple}");
    }
    Ok(())
}
