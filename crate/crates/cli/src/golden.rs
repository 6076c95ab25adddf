//! Golden-file corpus: canonical JSON snapshots of every published table,
//! q-expansion and solution list, regenerated and compared byte-exactly
//! (floating endpoint coordinates compare under a small tolerance instead,
//! so legitimate last-ulp drift across platforms is not a diff).

use crate::report;
use griess_core::algebra::polynomial_system;
use griess_core::cases::{CaseLabel, ALL_LABELS};
use griess_core::chars::{parafermion_char, verify_decomposition, virasoro_char, ModuleLabel};
use griess_core::derive::derive_griess_table;
use griess_core::refdata::builtin_griess_table;
use griess_core::rat::{rat, rat_int};
use griess_core::solver::{enumerate, TrackOptions};
use serde_json::Value;
use std::path::Path;

/// All corpus entries as `(file name, canonical JSON text)`.
pub fn generate_entries() -> Vec<(String, String)> {
    let mut out = Vec::new();
    for label in ALL_LABELS {
        let derived = derive_griess_table(&griess_core::cases::case(label))
            .expect("table derivation");
        out.push((
            format!("table_{}.json", label.to_string().to_lowercase()),
            report::to_canonical_string(&report::table_json(&derived, "derived")),
        ));
        let (sols, _) = report::check_solutions_json(label);
        out.push((
            format!("solutions_{}.json", label.to_string().to_lowercase()),
            report::to_canonical_string(&sols),
        ));
    }
    out.push(("mckay.json".to_string(), report::to_canonical_string(&report::mckay_json())));
    // the printed parafermion expansions
    for (ell, k, order) in [
        (9u64, 0u64, 24i64),
        (9, 3, 12),
        (9, 6, 12),
        (5, 0, 16),
        (5, 1, 17),
        (5, 2, 18),
        (6, 0, 7),
        (6, 1, 7),
        (6, 2, 7),
        (6, 3, 7),
    ] {
        let ch = parafermion_char(ell, 2 * k, &rat_int(order)).expect("parafermion character");
        let name = format!("char_para_{ell}_{k}.json");
        out.push((
            name.clone(),
            report::to_canonical_string(&report::series_json(&ch, &format!("W{ell}(0,{})", 2 * k))),
        ));
    }
    // the two Ising characters through the parafermion-checked order
    for (m, r, s) in [(1u64, 1u64, 1u64), (2, 1, 1)] {
        let l = ModuleLabel::new(m, r, s).unwrap();
        let ch = virasoro_char(&l, &rat_int(16));
        out.push((
            format!("char_vir_{m}_{r}_{s}.json"),
            report::to_canonical_string(&report::series_json(&ch, &format!("L(c_{m},h_{r}{s})"))),
        ));
    }
    // decomposition verdicts
    for (label, order) in [
        (CaseLabel::TwoA, 20i64),
        (CaseLabel::ThreeA, 12),
        (CaseLabel::FourB, 20),
        (CaseLabel::FiveA, 15),
        (CaseLabel::SixA, 10),
        (CaseLabel::TwoB, 20),
        (CaseLabel::ThreeC, 20),
    ] {
        let rep = verify_decomposition(label, &rat_int(order)).expect("identity");
        out.push((
            format!("verify_{}.json", label.to_string().to_lowercase()),
            report::to_canonical_string(&report::verify_json(&rep)),
        ));
    }
    // one deterministic solver run exercising the float path
    {
        let label = CaseLabel::TwoB;
        let sys = polynomial_system(&builtin_griess_table(label));
        let set = enumerate(&sys, 0, &report::candidates_for(label), &TrackOptions::default())
            .expect("2B solve");
        out.push((
            "solve_2b_seed0.json".to_string(),
            report::to_canonical_string(&report::solve_json(label, &set)),
        ));
    }
    // the 4A parametric family samples
    {
        let sys = polynomial_system(&builtin_griess_table(CaseLabel::FourA));
        let samples = [rat(1, 100), rat(1, 30), rat(1, 16)];
        let checks: Vec<Value> = griess_core::solver::verify_parametric_family_4a(&sys, &samples)
            .into_iter()
            .map(|s| {
                serde_json::json!({
                    "central_charge_is_one": s.central_charge_is_one,
                    "d": griess_core::rat::format_rat(&s.d),
                    "rational_square": s.rational_square,
                    "solves_system": s.solves_system,
                })
            })
            .collect();
        out.push((
            "family_4a.json".to_string(),
            report::to_canonical_string(&serde_json::json!({"case": "4A", "samples": checks})),
        ));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// One golden comparison outcome.
#[derive(Debug, PartialEq, Eq)]
pub enum GoldenStatus {
    Match,
    Missing,
    Mismatch(Vec<String>),
}

pub struct GoldenOutcome {
    pub name: String,
    pub status: GoldenStatus,
}

/// Compare all regenerated entries against the corpus directory.
pub fn compare(corpus: &Path) -> Vec<GoldenOutcome> {
    generate_entries()
        .into_iter()
        .map(|(name, fresh)| {
            let path = corpus.join(&name);
            let status = match std::fs::read_to_string(&path) {
                Err(_) => GoldenStatus::Missing,
                Ok(stored) => {
                    if stored == fresh {
                        GoldenStatus::Match
                    } else {
                        match diff_json_text(&stored, &fresh) {
                            Ok(diffs) if diffs.is_empty() => GoldenStatus::Match,
                            Ok(diffs) => GoldenStatus::Mismatch(diffs),
                            Err(e) => GoldenStatus::Mismatch(vec![e]),
                        }
                    }
                }
            };
            GoldenOutcome { name, status }
        })
        .collect()
}

/// Write (or rewrite) the whole corpus.
pub fn update(corpus: &Path) -> std::io::Result<usize> {
    std::fs::create_dir_all(corpus)?;
    let entries = generate_entries();
    let n = entries.len();
    for (name, text) in entries {
        std::fs::write(corpus.join(name), text)?;
    }
    Ok(n)
}

fn diff_json_text(stored: &str, fresh: &str) -> Result<Vec<String>, String> {
    let a: Value = serde_json::from_str(stored).map_err(|e| format!("stored not JSON: {e}"))?;
    let b: Value = serde_json::from_str(fresh).map_err(|e| format!("fresh not JSON: {e}"))?;
    let mut diffs = Vec::new();
    diff_value(&a, &b, "$", &mut diffs);
    Ok(diffs)
}

/// Structural diff; string leaves that both parse as floats compare with a
/// 1e-9 absolute-plus-relative tolerance (solver endpoints), everything else
/// must agree exactly.
fn diff_value(a: &Value, b: &Value, path: &str, out: &mut Vec<String>) {
    match (a, b) {
        (Value::Object(ma), Value::Object(mb)) => {
            let mut keys: Vec<&String> = ma.keys().chain(mb.keys()).collect();
            keys.sort();
            keys.dedup();
            for k in keys {
                match (ma.get(k), mb.get(k)) {
                    (Some(va), Some(vb)) => diff_value(va, vb, &format!("{path}.{k}"), out),
                    (Some(_), None) => out.push(format!("{path}.{k}: missing in regenerated")),
                    (None, Some(_)) => out.push(format!("{path}.{k}: missing in corpus")),
                    (None, None) => unreachable!(),
                }
            }
        }
        (Value::Array(va), Value::Array(vb)) => {
            if va.len() != vb.len() {
                out.push(format!("{path}: array length {} vs {}", va.len(), vb.len()));
                return;
            }
            for (i, (x, y)) in va.iter().zip(vb).enumerate() {
                diff_value(x, y, &format!("{path}[{i}]"), out);
            }
        }
        (Value::String(sa), Value::String(sb)) if sa != sb => {
            if let (Ok(fa), Ok(fb)) = (sa.parse::<f64>(), sb.parse::<f64>()) {
                let tol = 1e-9 * (1.0 + fa.abs().max(fb.abs()));
                if (fa - fb).abs() > tol {
                    out.push(format!("{path}: {sa} vs {sb}"));
                }
            } else {
                out.push(format!("{path}: {sa} vs {sb}"));
            }
        }
        _ if a != b => out.push(format!("{path}: {a} vs {b}")),
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_tolerant_diff() {
        let a = r#"{"values": [{"re": "1.234567890123e0"}], "n": 3}"#;
        let b = r#"{"values": [{"re": "1.234567890124e0"}], "n": 3}"#;
        assert!(diff_json_text(a, b).unwrap().is_empty());
        let c = r#"{"values": [{"re": "1.334567890123e0"}], "n": 3}"#;
        assert_eq!(diff_json_text(a, c).unwrap().len(), 1);
        // rationals stay byte-exact
        let d = r#"{"x": "1/2"}"#;
        let e = r#"{"x": "2/4"}"#;
        assert_eq!(diff_json_text(d, e).unwrap().len(), 1);
    }
}
