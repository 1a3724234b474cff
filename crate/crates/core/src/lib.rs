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

//! Exact pure-state simulation of probabilistic entanglement swapping.
//!
//! Two partially entangled pairs `AC1` and `BC2` are swapped onto `AB` by a
//! joint measurement of `C1C2`, optionally combined with unambiguous state
//! extraction (USE) on single pairs. Four strategies are enumerated branch
//! by branch on a dense statevector and compared with their closed forms.
//!
//! ```
//! use entswap::strategies::{strategy4, special_x_values, SwapInputs};
//!
//! let inputs = SwapInputs::new(0.5, 0.6).unwrap();
//! let onset = special_x_values(&inputs).plateau_onset();
//! let report = strategy4(&inputs, onset).unwrap();
//! assert!((report.simulated_success - 0.5).abs() < 1e-10);
//! ```

pub mod entanglement;
pub mod error;
pub mod measurement_bases;
pub mod qstate;
pub mod report;
pub mod strategies;
pub mod sweep;
pub mod tolerance;
pub mod use_extraction;
pub mod verify;

pub use error::{Error, Result};
