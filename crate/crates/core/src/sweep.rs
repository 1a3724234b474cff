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

//! Parameter sweeps over initial and measuring-basis concurrences, with CSV
//! output. Closed forms supply the emitted values; every grid point is also
//! enumerated and must agree within the oracle tolerance.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use rayon::prelude::*;

use crate::entanglement::Concurrence;
use crate::error::{Error, Result};
use crate::measurement_bases::x_from_concurrence;
use crate::strategies::{closed_form, strategy1, strategy2, strategy4, StrategyReport, SwapInputs};
use crate::tolerance;

/// Concurrences of the first source used when none are given.
pub const DEFAULT_FIGURE2_C_AC1: [f64; 3] = [0.4, 0.7, 0.97];
pub const DEFAULT_FIGURE3_C_AC1: f64 = 0.7;
pub const DEFAULT_STEPS: usize = 101;

pub const FIGURE2_HEADER: &str = "c_ac1,c_bc2,p_s1,p_s2";
pub const FIGURE3_HEADER: &str = "c_bc2,c_c1c2,p_s4";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Figure2Row {
    pub c_ac1: f64,
    pub c_bc2: f64,
    pub p_s1: f64,
    pub p_s2: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Figure3Row {
    pub c_bc2: f64,
    pub c_c1c2: f64,
    pub p_s4: f64,
}

/// `steps` evenly spaced points on `[0, 1]`, endpoints included.
pub fn unit_grid(steps: usize) -> Result<Vec<f64>> {
    if steps < 2 {
        return Err(Error::BadParameter {
            name: "steps",
            value: steps as f64,
            constraint: "steps ≥ 2",
        });
    }
    let last = (steps - 1) as f64;
    Ok((0..steps).map(|i| i as f64 / last).collect())
}

fn source_concurrence(c: f64) -> Result<Concurrence> {
    if !(c > 0.0 && c <= 1.0) {
        return Err(Error::BadParameter {
            name: "c_ac1",
            value: c,
            constraint: "0 < C_AC1 ≤ 1",
        });
    }
    Concurrence::new(c)
}

fn cross_check(report: &StrategyReport, context: impl FnOnce() -> String) -> Result<f64> {
    if !report.agrees() {
        return Err(Error::OracleMismatch {
            context: context(),
            simulated: report.simulated_success,
            closed_form: report.closed_form,
        });
    }
    Ok(report.closed_form)
}

/// Strategy 1 and 2 success probabilities against `C_BC2`, one curve per `C_AC1`.
pub fn figure2(c_ac1_list: &[f64], steps: usize) -> Result<Vec<Figure2Row>> {
    let grid = unit_grid(steps)?;
    let sources = c_ac1_list
        .iter()
        .map(|&c| source_concurrence(c))
        .collect::<Result<Vec<_>>>()?;
    let points: Vec<(Concurrence, f64)> = sources
        .iter()
        .flat_map(|&c1| grid.iter().map(move |&c2| (c1, c2)))
        .collect();
    points
        .par_iter()
        .map(|&(c1, c2)| {
            let inputs = SwapInputs::from_concurrences(c1, Concurrence::new(c2)?);
            let ctx = |s: &str| format!("{s} at C_AC1 = {c1}, C_BC2 = {c2}");
            Ok(Figure2Row {
                c_ac1: c1.value(),
                c_bc2: c2,
                p_s1: cross_check(&strategy1(&inputs)?, || ctx("strategy 1"))?,
                p_s2: cross_check(&strategy2(&inputs)?, || ctx("strategy 2"))?,
            })
        })
        .collect()
}

/// Strategy 4 success probability over `(C_BC2, C_C1C2)` for fixed `C_AC1`.
pub fn figure3(c_ac1: f64, steps: usize) -> Result<Vec<Figure3Row>> {
    let c1 = source_concurrence(c_ac1)?;
    let grid = unit_grid(steps)?;
    let points: Vec<(f64, f64)> = grid
        .iter()
        .flat_map(|&c2| grid.iter().map(move |&cm| (c2, cm)))
        .collect();
    points
        .par_iter()
        .map(|&(c2, cm)| {
            let inputs = SwapInputs::from_concurrences(c1, Concurrence::new(c2)?);
            let x = x_from_concurrence(Concurrence::new(cm)?);
            let report = strategy4(&inputs, x)?;
            let p_s4 = cross_check(&report, || {
                format!("strategy 4 at C_AC1 = {c1}, C_BC2 = {c2}, C_C1C2 = {cm}")
            })?;
            Ok(Figure3Row {
                c_bc2: c2,
                c_c1c2: cm,
                p_s4,
            })
        })
        .collect()
}

/// Twelve significant digits, fixed-point, decimal dot.
pub fn format_value(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{v:.decimals$}")
}

pub fn write_figure2_csv<W: Write>(rows: &[Figure2Row], mut out: W) -> io::Result<()> {
    writeln!(out, "{FIGURE2_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{}",
            format_value(r.c_ac1),
            format_value(r.c_bc2),
            format_value(r.p_s1),
            format_value(r.p_s2)
        )?;
    }
    out.flush()
}

pub fn write_figure3_csv<W: Write>(rows: &[Figure3Row], mut out: W) -> io::Result<()> {
    writeln!(out, "{FIGURE3_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{}",
            format_value(r.c_bc2),
            format_value(r.c_c1c2),
            format_value(r.p_s4)
        )?;
    }
    out.flush()
}

/// Creates `path` and hands a buffered writer to `write`, attaching the path to IO errors.
pub fn write_file<F>(path: &Path, write: F) -> Result<()>
where
    F: FnOnce(&mut BufWriter<File>) -> io::Result<()>,
{
    let io_err = |e: io::Error| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    };
    let file = File::create(path).map_err(io_err)?;
    let mut w = BufWriter::new(file);
    write(&mut w).map_err(io_err)
}

/// Index of the first grid point at which `values` reaches its maximum
/// within `tolerance::STRUCTURAL`.
pub fn first_maximum(values: &[f64]) -> Option<usize> {
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    values
        .iter()
        .position(|&v| v >= max - tolerance::STRUCTURAL)
}

/// For each `C_BC2` row of a figure-3 sweep, the smallest `C_C1C2` on the
/// plateau together with the matching concurrence predicted for that row.
pub fn plateau_onsets(c_ac1: f64, rows: &[Figure3Row]) -> Result<Vec<(f64, f64, f64)>> {
    let c1 = source_concurrence(c_ac1)?;
    let mut out = Vec::new();
    let mut i = 0;
    while i < rows.len() {
        let c2 = rows[i].c_bc2;
        let row: Vec<&Figure3Row> = rows[i..].iter().take_while(|r| r.c_bc2 == c2).collect();
        i += row.len();
        let inputs = SwapInputs::from_concurrences(c1, Concurrence::new(c2)?);
        let plateau = closed_form::p_s2(&inputs);
        let onset = row
            .iter()
            .find(|r| (r.p_s4 - plateau).abs() <= tolerance::ORACLE)
            .map_or(f64::NAN, |r| r.c_c1c2);
        out.push((c2, onset, inputs.special_concurrences().minus.value()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_endpoints() {
        let g = unit_grid(101).unwrap();
        assert_eq!(g.len(), 101);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[100], 1.0);
        assert!(unit_grid(1).is_err());
    }

    #[test]
    fn value_formatting() {
        assert_eq!(format_value(0.0), "0");
        assert_eq!(format_value(1.0), "1.00000000000");
        assert_eq!(format_value(0.5184), "0.518400000000");
        assert_eq!(format_value(0.25).len(), "0.250000000000".len());
    }

    #[test]
    fn figure2_reference_points() {
        let rows = figure2(&[0.4, 0.7], 11).unwrap();
        let at = |c1: f64, c2: f64| {
            *rows
                .iter()
                .find(|r| (r.c_ac1 - c1).abs() < 1e-12 && (r.c_bc2 - c2).abs() < 1e-12)
                .unwrap()
        };
        let r = at(0.4, 0.4);
        assert!((r.p_s2 - (1.0 - 0.84f64.sqrt())).abs() < 1e-12);
        let r = at(0.4, 0.0);
        assert_eq!((r.p_s1, r.p_s2), (0.0, 0.0));
        let r = at(0.7, 1.0);
        let expected = 1.0 - 0.51f64.sqrt();
        assert!((r.p_s1 - expected).abs() < 1e-12);
        assert!((r.p_s2 - expected).abs() < 1e-12);
    }

    #[test]
    fn figure2_rejects_bad_concurrence() {
        assert!(figure2(&[0.0], 11).is_err());
        assert!(figure2(&[1.2], 11).is_err());
    }

    #[test]
    fn figure3_rows() {
        let rows = figure3(0.7, 11).unwrap();
        assert_eq!(rows.len(), 121);
        for r in rows.iter().filter(|r| r.c_bc2 == 0.0) {
            assert_eq!(r.p_s4, 0.0);
        }
        for r in rows.iter().filter(|r| r.c_c1c2 == 1.0) {
            let inp = SwapInputs::from_concurrences(
                Concurrence::new(0.7).unwrap(),
                Concurrence::new(r.c_bc2).unwrap(),
            );
            assert!((r.p_s4 - closed_form::p_s2(&inp)).abs() < 1e-12);
        }
    }

    #[test]
    fn csv_header_and_rows() {
        let rows = figure2(&[0.4], 3).unwrap();
        let mut buf = Vec::new();
        write_figure2_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], FIGURE2_HEADER);
        assert_eq!(lines.len(), 4);
        assert!(lines[1].starts_with("0.400000000000,0,"));
    }

    #[test]
    fn io_error_names_path() {
        let err = write_file(Path::new("/nonexistent-dir/x.csv"), |_| Ok(())).unwrap_err();
        assert!(err.to_string().contains("/nonexistent-dir/x.csv"));
    }
}
