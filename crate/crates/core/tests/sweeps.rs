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

use entswap::sweep::{
    figure2, figure3, first_maximum, plateau_onsets, write_figure2_csv, write_figure3_csv,
    FIGURE2_HEADER, FIGURE3_HEADER,
};

#[test]
fn figure2_values_are_ordered_probabilities() {
    let rows = figure2(&[0.4, 0.7, 0.97], 41).unwrap();
    assert_eq!(rows.len(), 3 * 41);
    for r in &rows {
        assert!(
            (0.0..=1.0).contains(&r.p_s1) && (0.0..=1.0).contains(&r.p_s2),
            "{r:?}"
        );
        assert!(r.p_s1 <= r.p_s2 + 1e-12, "{r:?}");
    }
}

#[test]
fn figure2_maxima_sit_at_source_concurrence() {
    let steps = 101;
    let step = 1.0 / (steps - 1) as f64;
    let rows = figure2(&[0.4, 0.7, 0.97], steps).unwrap();
    for curve in rows.chunks(steps) {
        let c1 = curve[0].c_ac1;
        let p2: Vec<f64> = curve.iter().map(|r| r.p_s2).collect();
        let p1: Vec<f64> = curve.iter().map(|r| r.p_s1).collect();
        let at = curve[first_maximum(&p2).unwrap()].c_bc2;
        assert!((at - c1).abs() <= step, "C_AC1 = {c1}: P_s2 peaks at {at}");
        assert_eq!(curve[first_maximum(&p1).unwrap()].c_bc2, 1.0);
        assert!((p1[steps - 1] - p2[steps - 1]).abs() < 1e-12);
    }
}

#[test]
fn figure3_plateau_tracks_matching_concurrence() {
    let steps = 51;
    let step = 1.0 / (steps - 1) as f64;
    let rows = figure3(0.7, steps).unwrap();
    assert_eq!(rows.len(), steps * steps);
    for (c2, onset, c_minus) in plateau_onsets(0.7, &rows).unwrap() {
        assert!(
            onset >= c_minus - 1e-12,
            "C_BC2 = {c2}: onset {onset} below {c_minus}"
        );
        assert!(
            onset - c_minus <= step + 1e-12,
            "C_BC2 = {c2}: onset {onset} vs {c_minus}"
        );
    }
}

#[test]
fn csv_output_is_deterministic() {
    let render2 = || {
        let mut buf = Vec::new();
        write_figure2_csv(&figure2(&[0.4, 0.97], 33).unwrap(), &mut buf).unwrap();
        buf
    };
    let render3 = || {
        let mut buf = Vec::new();
        write_figure3_csv(&figure3(0.7, 17).unwrap(), &mut buf).unwrap();
        buf
    };
    let a = render2();
    assert_eq!(a, render2());
    assert!(String::from_utf8(a).unwrap().starts_with(FIGURE2_HEADER));
    let b = render3();
    assert_eq!(b, render3());
    assert!(String::from_utf8(b).unwrap().starts_with(FIGURE3_HEADER));
}

#[test]
fn invalid_sweep_parameters() {
    assert!(figure2(&[0.0], 11).is_err());
    assert!(figure2(&[1.2], 11).is_err());
    assert!(figure3(0.7, 1).is_err());
}
