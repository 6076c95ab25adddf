//! Canonical report assembly.
//!
//! JSON output uses sorted keys (serde_json's default map), rationals as
//! `"p/q"` strings, cyclotomic numbers as `{conductor, coeffs}` objects, and
//! floating endpoint coordinates as strings with 12 significant digits. The
//! same `RunConfig` always produces byte-identical reports.

use griess_core::algebra::{
    gram_stabilizer, polynomial_system, GriessElement, GriessTable, StabilizerReport,
};
use griess_core::cases::CaseLabel;
use griess_core::chars::{DecompReport, QSeries};
use griess_core::cyc::Cyc;
use griess_core::refdata::{builtin_griess_table, builtin_solutions};
use griess_core::rat::{format_rat, Rat};
use griess_core::solver::{
    detect_families, histogram, ExactCandidate, PathStatus, SolutionSet, SolutionStatus,
};
use num_traits::Zero;
use serde_json::{json, Map, Value};

pub fn rat_value(r: &Rat) -> Value {
    Value::String(format_rat(r))
}

pub fn cyc_value(c: &Cyc) -> Value {
    json!({
        "conductor": c.conductor(),
        "coeffs": c.coeffs().iter().map(|r| Value::String(format_rat(r))).collect::<Vec<_>>(),
    })
}

fn f64_value(x: f64) -> Value {
    Value::String(format!("{x:.12e}"))
}

// --- tables -----------------------------------------------------------------

pub fn table_json(t: &GriessTable, mode: &str) -> Value {
    let labels: Vec<String> = t.labels.iter().map(|l| l.to_string()).collect();
    let mut products = Map::new();
    let mut gram = Map::new();
    for (i, li) in labels.iter().enumerate() {
        for (j, lj) in labels.iter().enumerate() {
            let mut entry = Map::new();
            for (k, c) in t.products[i][j].iter().enumerate() {
                if !c.is_zero() {
                    entry.insert(labels[k].clone(), rat_value(c));
                }
            }
            if !entry.is_empty() {
                products.insert(format!("{li},{lj}"), Value::Object(entry));
            }
            if !t.gram[i][j].is_zero() {
                gram.insert(format!("{li},{lj}"), rat_value(&t.gram[i][j]));
            }
        }
    }
    json!({
        "case": t.case.label.to_string(),
        "mode": mode,
        "basis": labels,
        "products": products,
        "gram": gram,
    })
}

pub fn table_csv(t: &GriessTable) -> String {
    let labels: Vec<String> = t.labels.iter().map(|l| l.to_string()).collect();
    let mut out = String::from("kind,left,right,label,value\n");
    for (i, li) in labels.iter().enumerate() {
        for (j, lj) in labels.iter().enumerate() {
            for (k, c) in t.products[i][j].iter().enumerate() {
                if !c.is_zero() {
                    out.push_str(&format!("product,{li},{lj},{},{}\n", labels[k], format_rat(c)));
                }
            }
            if !t.gram[i][j].is_zero() {
                out.push_str(&format!("gram,{li},{lj},,{}\n", format_rat(&t.gram[i][j])));
            }
        }
    }
    out
}

pub fn table_text(t: &GriessTable) -> String {
    let labels: Vec<String> = t.labels.iter().map(|l| l.to_string()).collect();
    let mut out = format!("case {} (dim {})\n", t.case.label, t.dim());
    for (i, li) in labels.iter().enumerate() {
        for (j, lj) in labels.iter().enumerate().skip(i) {
            let terms: Vec<String> = t.products[i][j]
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| format!("{} {}", format_rat(c), labels[k]))
                .collect();
            let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
            out.push_str(&format!("({li})_1 {lj} = {rhs}\n"));
        }
    }
    for (i, li) in labels.iter().enumerate() {
        for (j, lj) in labels.iter().enumerate().skip(i) {
            if !t.gram[i][j].is_zero() {
                out.push_str(&format!("<{li}, {lj}> = {}\n", format_rat(&t.gram[i][j])));
            }
        }
    }
    out.push_str("system:\n");
    out.push_str(&polynomial_system(t).to_string());
    out
}

// --- series -----------------------------------------------------------------

pub fn series_json(s: &QSeries<Rat>, name: &str) -> Value {
    let mut coeffs = Map::new();
    for (e, c) in s.iter() {
        coeffs.insert(e.to_string(), rat_value(c));
    }
    json!({
        "name": name,
        "denominator": s.denom(),
        "trunc": s.trunc(),
        "coeffs": coeffs,
    })
}

// --- solve ------------------------------------------------------------------

pub fn candidates_for(label: CaseLabel) -> Vec<ExactCandidate> {
    builtin_solutions(label)
        .into_iter()
        .map(|s| ExactCandidate {
            name: s.name,
            coords: s.coords,
            central_charge: s.central_charge,
        })
        .collect()
}

fn status_str(s: &SolutionStatus) -> &'static str {
    match s {
        SolutionStatus::ExactVerified => "exact-verified",
        SolutionStatus::NumericalIsolated => "numerical-isolated",
        SolutionStatus::OnPositiveDimensionalComponent => {
            "numerical-on-positive-dimensional-component"
        }
    }
}

pub fn solve_json(label: CaseLabel, set: &SolutionSet) -> Value {
    let endpoints: Vec<Value> = set
        .records
        .iter()
        .map(|r| {
            let values: Vec<Value> = r
                .values
                .iter()
                .map(|z| json!({"im": f64_value(z.im), "re": f64_value(z.re)}))
                .collect();
            let mut obj = Map::new();
            obj.insert("values".into(), Value::Array(values));
            obj.insert("status".into(), Value::String(status_str(&r.status).into()));
            obj.insert("residual".into(), f64_value(r.residual));
            obj.insert("multiplicity".into(), json!(r.multiplicity));
            if let Some(name) = &r.matched_name {
                obj.insert("matched".into(), Value::String(name.clone()));
            }
            if let Some(exact) = &r.exact {
                obj.insert(
                    "exact".into(),
                    Value::Array(exact.iter().map(cyc_value).collect()),
                );
            }
            match &r.central_charge_exact {
                Some(cc) => {
                    obj.insert("central_charge".into(), rat_value(cc));
                }
                None => {
                    obj.insert(
                        "central_charge_numeric".into(),
                        json!({"im": f64_value(r.central_charge.im), "re": f64_value(r.central_charge.re)}),
                    );
                }
            }
            Value::Object(obj)
        })
        .collect();
    let h = histogram(set);
    let mut classes = Map::new();
    for (cc, n) in &h.classes {
        classes.insert(format_rat(cc), json!(n));
    }
    let families: Vec<Value> =
        detect_families(set).into_iter().map(|f| json!({"members": f.members})).collect();
    json!({
        "case": label.to_string(),
        "seed": set.seed,
        "variables": set.n,
        "bezout": set.bezout,
        "paths": {
            "diverged": set.diverged_paths,
            "failed": set.failed_paths,
            "retries": set.retries_used,
            "status": set
                .path_status
                .iter()
                .map(|s| match s {
                    PathStatus::Converged => "converged",
                    PathStatus::Diverged => "diverged",
                    PathStatus::Failed => "failed",
                })
                .collect::<Vec<_>>(),
            "total": set.bezout,
        },
        "endpoints": endpoints,
        "nontrivial_isolated": set.nontrivial_isolated_count(),
        "histogram": {"classes": classes, "irrational": h.irrational},
        "families": families,
    })
}

pub fn solve_text(label: CaseLabel, set: &SolutionSet) -> String {
    let mut out = format!(
        "case {label}: {} paths, {} endpoints ({} nontrivial isolated), {} diverged, {} failed\n",
        set.bezout,
        set.records.len(),
        set.nontrivial_isolated_count(),
        set.diverged_paths,
        set.failed_paths
    );
    let h = histogram(set);
    out.push_str("central-charge histogram:");
    for (cc, n) in &h.classes {
        out.push_str(&format!(" {}:{n}", format_rat(cc)));
    }
    if h.irrational > 0 {
        out.push_str(&format!(" irrational:{}", h.irrational));
    }
    out.push('\n');
    let fams = detect_families(set);
    if !fams.is_empty() {
        out.push_str(&format!(
            "positive-dimensional component detected ({} endpoints)\n",
            fams[0].members.len()
        ));
    }
    out
}

// --- mckay ------------------------------------------------------------------

pub fn mckay_lines() -> Vec<(CaseLabel, Rat)> {
    griess_core::cases::ALL_LABELS
        .iter()
        .map(|&l| {
            let t = builtin_griess_table(l);
            (l, t.mckay_value().expect("mckay value is rational"))
        })
        .collect()
}

pub fn mckay_json() -> Value {
    let mut m = Map::new();
    for (l, v) in mckay_lines() {
        m.insert(l.to_string(), rat_value(&v));
    }
    Value::Object(m)
}

// --- check-solutions ----------------------------------------------------------

pub fn check_solutions_json(label: CaseLabel) -> (Value, bool) {
    let table = builtin_griess_table(label);
    let sys = polynomial_system(&table);
    let mut all_ok = true;
    let sols: Vec<Value> = builtin_solutions(label)
        .iter()
        .map(|s| {
            let residual_zero = table
                .conformal_residual(&GriessElement::from_coords(s.coords.clone()))
                .is_zero();
            let system_zero = griess_core::solver::verify_exact(&sys, &s.coords);
            let cc = table
                .central_charge(&GriessElement::from_coords(s.coords.clone()))
                .try_rat()
                .map(|c| c == s.central_charge)
                .unwrap_or(false);
            let ok = residual_zero && system_zero && cc;
            all_ok &= ok;
            json!({
                "central_charge": format_rat(&s.central_charge),
                "coords": s.coords.iter().map(cyc_value).collect::<Vec<_>>(),
                "isolated": s.isolated,
                "name": s.name,
                "verified": ok,
            })
        })
        .collect();
    (
        json!({"all_verified": all_ok, "case": label.to_string(), "solutions": sols}),
        all_ok,
    )
}

// --- stabilizer ----------------------------------------------------------------

/// The set of published charge-1/2 conformal vectors of the case, with its
/// Gram matrix and exhaustive stabilizer.
pub fn stabilizer_report(label: CaseLabel) -> (StabilizerReport, Vec<String>, Vec<Vec<Cyc>>) {
    let t = builtin_griess_table(label);
    let half = griess_core::rat::rat(1, 2);
    let named: Vec<(String, GriessElement)> = builtin_solutions(label)
        .into_iter()
        .filter(|s| s.central_charge == half)
        .map(|s| (s.name, GriessElement::from_coords(s.coords)))
        .collect();
    let names: Vec<String> = named.iter().map(|(n, _)| n.clone()).collect();
    let vs: Vec<GriessElement> = named.into_iter().map(|(_, e)| e).collect();
    let gram = t.gram_matrix(&vs);
    (gram_stabilizer(&gram), names, gram)
}

pub fn stabilizer_json(label: CaseLabel) -> Value {
    let (rep, names, gram) = stabilizer_report(label);
    let gram_json: Vec<Value> =
        gram.iter().map(|row| Value::Array(row.iter().map(cyc_value).collect())).collect();
    json!({
        "case": label.to_string(),
        "generators": rep.generators,
        "gram": gram_json,
        "order": rep.order,
        "set": names,
    })
}

// --- generation -------------------------------------------------------------

pub fn generation_json(label: CaseLabel) -> (Value, bool) {
    let t = builtin_griess_table(label);
    let span = t.generation_span(&[t.ehat(), t.fhat()]);
    let ok = span == t.case.dim_b();
    (
        json!({
            "case": label.to_string(),
            "dim_b": t.case.dim_b(),
            "generates": ok,
            "span_dim": span,
        }),
        ok,
    )
}

// --- verify -----------------------------------------------------------------

pub fn verify_json(rep: &DecompReport) -> Value {
    let mismatch = rep.mismatch.as_ref().map(|(e, a, b)| {
        json!({"exponent": format_rat(e), "lhs": format_rat(a), "rhs": format_rat(b)})
    });
    json!({
        "case": rep.case.to_string(),
        "consistency_only": rep.consistency_only,
        "equal": rep.equal,
        "lhs": rep.lhs,
        "mismatch": mismatch,
        "order": format_rat(&rep.order),
        "rhs": rep.rhs,
    })
}

pub fn verify_text(rep: &DecompReport) -> String {
    if rep.equal {
        let kind = if rep.consistency_only { " (consistency)" } else { "" };
        format!("{}: EQUAL through q^{}{kind}\n", rep.case, format_rat(&rep.order))
    } else {
        let (e, a, b) = rep.mismatch.as_ref().unwrap();
        format!(
            "{}: MISMATCH at q^{}: lhs {} vs rhs {}\n",
            rep.case,
            format_rat(e),
            format_rat(a),
            format_rat(b)
        )
    }
}

pub fn to_canonical_string(v: &Value) -> String {
    // serde_json maps are BTreeMaps: keys already sorted
    let mut s = serde_json::to_string_pretty(v).expect("serialize");
    s.push('\n');
    s
}
