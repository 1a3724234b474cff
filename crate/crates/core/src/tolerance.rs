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

//! Numerical tolerances shared across the crate.
//!
//! Two tiers: structural checks (normalization, unitarity, orthonormality)
//! use [`STRUCTURAL`]; simulation-versus-closed-form comparisons use
//! [`ORACLE`].

/// Normalization, unitarity and orthonormality checks.
pub const STRUCTURAL: f64 = 1e-12;

/// Agreement between exact enumeration and analytic expressions.
pub const ORACLE: f64 = 1e-10;

/// Branches below this probability are degenerate and never renormalized.
pub const DEGENERATE: f64 = 1e-14;

/// Input validation slack for amplitudes and parameters.
pub const INPUT: f64 = 1e-10;
