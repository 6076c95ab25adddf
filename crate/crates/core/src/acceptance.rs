//! The acceptance suite: thirteen checks covering every verified claim, from
//! lattice ground truth to the character identities. Each criterion returns
//! a pass/fail result with a one-line detail; the `acceptance` test target
//! and the CLI `all` subcommand both run them.

use crate::algebra::{
    gram_stabilizer, orthogonal_decomposition_check, polynomial_system, GriessElement,
};
use crate::cases::{case, CaseLabel, ALL_LABELS};
use crate::chars::{
    integral_weight_modules, parafermion_char, verify_decomposition, virasoro_char, ModuleLabel,
    WeightGrid,
};
use crate::cyc::Cyc;
use crate::derive::derive_griess_table;
use crate::refdata::{
    builtin_griess_table, builtin_list_is_complete, builtin_solutions, eigenvalue_lemmas,
    expected_polynomial_system, five_a_highest_weights, mckay_values,
    orthogonal_decompositions, reference_branching_pairs_6a, reference_dims_3c,
    reference_integral_pairs_3c, reference_integral_triples_5a, reference_w_chars, table1_5a,
    table2_6a_below_one,
};
use crate::rat::{rat, rat_int, Rat};
use crate::solver::{
    detect_families, enumerate, histogram, verify_parametric_family_4a, ExactCandidate,
    SolutionSet, TrackOptions,
};
use num_traits::One;

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "criterion {:2} [{}] {} - {}",
            self.id,
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.detail
        )
    }
}

struct Check {
    pass: bool,
    notes: Vec<String>,
}

impl Check {
    fn new() -> Self {
        Check { pass: true, notes: Vec::new() }
    }

    fn require(&mut self, cond: bool, what: impl Into<String>) {
        if !cond {
            self.pass = false;
            self.notes.push(what.into());
        }
    }

    fn finish(self, id: usize, name: &'static str, ok_detail: impl Into<String>) -> CriterionResult {
        CriterionResult {
            id,
            name,
            pass: self.pass,
            detail: if self.pass { ok_detail.into() } else { self.notes.join("; ") },
        }
    }
}

fn candidates(label: CaseLabel) -> Vec<ExactCandidate> {
    builtin_solutions(label)
        .into_iter()
        .map(|s| ExactCandidate { name: s.name, coords: s.coords, central_charge: s.central_charge })
        .collect()
}

fn solve_case(label: CaseLabel, seed: u64) -> Result<SolutionSet, crate::solver::SolveError> {
    let sys = polynomial_system(&builtin_griess_table(label));
    enumerate(&sys, seed, &candidates(label), &TrackOptions::default())
}

/// Criterion 1: 240 roots, the affine relation, and the coset root counts
/// behind every published `<X^j, X^k>` entry.
pub fn criterion_01_lattice_ground_truth() -> CriterionResult {
    let mut c = Check::new();
    c.require(crate::lattice::e8_roots().len() == 240, "root count != 240");
    // affine relation
    let nodes = crate::lattice::extended_nodes();
    let mut s = [0i64; 8];
    for (j, m) in crate::lattice::MARKS.iter().enumerate() {
        for u in 0..8 {
            s[u] += (*m as i64) * nodes[j][u];
        }
    }
    c.require(s == [0i64; 8], "affine relation violated");
    let expected: [(CaseLabel, &[usize]); 8] = [
        (CaseLabel::TwoA, &[112]),
        (CaseLabel::ThreeA, &[81, 81]),
        (CaseLabel::FourA, &[64, 60, 64]),
        (CaseLabel::FiveA, &[50, 50, 50, 50]),
        (CaseLabel::SixA, &[36, 45, 40, 45, 36]),
        (CaseLabel::FourB, &[56, 70, 56]),
        (CaseLabel::TwoB, &[128]),
        (CaseLabel::ThreeC, &[84, 84]),
    ];
    for (label, want) in expected {
        let got = crate::lattice::coset_root_counts(&case(label));
        c.require(got == want, format!("coset counts {label}: {got:?}"));
    }
    c.finish(1, "lattice ground truth", "240 roots, affine relation, all coset counts exact")
}

/// Criterion 2: the lattice-derived Griess table equals the published table
/// for all nine cases, entry by entry.
pub fn criterion_02_table_derivation() -> CriterionResult {
    let mut c = Check::new();
    for label in ALL_LABELS {
        let derived = match derive_griess_table(&case(label)) {
            Ok(t) => t,
            Err(e) => {
                c.require(false, format!("{label}: derivation failed: {e}"));
                continue;
            }
        };
        let builtin = builtin_griess_table(label);
        c.require(derived.products == builtin.products, format!("{label}: products differ"));
        c.require(derived.gram == builtin.gram, format!("{label}: gram differs"));
    }
    c.finish(2, "table derivation", "all nine derived tables match the published constants")
}

/// Criterion 3: generated polynomial systems match the published systems
/// (with the two documented misprint corrections) verbatim.
pub fn criterion_03_polynomial_systems() -> CriterionResult {
    let mut c = Check::new();
    for label in ALL_LABELS {
        let got = polynomial_system(&builtin_griess_table(label));
        let want = expected_polynomial_system(label);
        c.require(got.equations == want.equations, format!("{label}: equations differ"));
        c.require(
            got.central_charge == want.central_charge,
            format!("{label}: central-charge form differs"),
        );
        c.require(got.bezout() == 1 << got.n(), format!("{label}: Bezout"));
    }
    c.finish(3, "polynomial systems", "systems and charge forms match the published normalization")
}

/// Criterion 4: the nine McKay inner-product values, with `e^` and `f^`
/// verified as charge-1/2 conformal vectors along the way.
pub fn criterion_04_mckay_values() -> CriterionResult {
    let mut c = Check::new();
    for (label, want) in mckay_values() {
        let t = builtin_griess_table(label);
        for (name, v) in [("e^", t.ehat()), ("f^", t.fhat())] {
            c.require(t.is_conformal_vector(&v), format!("{label}: {name} not conformal"));
            c.require(
                t.central_charge(&v).try_rat() == Some(rat(1, 2)),
                format!("{label}: {name} central charge"),
            );
        }
        match t.mckay_value() {
            Ok(got) => c.require(got == want, format!("{label}: <e^,f^> = {got}, want {want}")),
            Err(e) => c.require(false, format!("{label}: {e}")),
        }
    }
    c.finish(4, "McKay values", "all nine <e^,f^> values exact; e^ and f^ conformal of charge 1/2")
}

/// Criterion 5: every published solution exact-verifies; for the five fully
/// printed cases the endpoint set is the printed list plus zero, no extras.
pub fn criterion_05_solution_lists() -> CriterionResult {
    let mut c = Check::new();
    for label in ALL_LABELS {
        let sys = polynomial_system(&builtin_griess_table(label));
        for s in builtin_solutions(label) {
            c.require(
                crate::solver::verify_exact(&sys, &s.coords),
                format!("{label}: {} does not solve the system", s.name),
            );
        }
    }
    for label in [CaseLabel::TwoA, CaseLabel::ThreeA, CaseLabel::FourB, CaseLabel::TwoB, CaseLabel::ThreeC]
    {
        assert!(builtin_list_is_complete(label));
        match solve_case(label, 0) {
            Ok(set) => {
                let want = builtin_solutions(label).len() + 1;
                c.require(
                    set.records.len() == want,
                    format!("{label}: {} endpoints, want {want}", set.records.len()),
                );
                for r in &set.records {
                    c.require(
                        r.is_zero_solution(1e-8) || r.matched_name.is_some(),
                        format!("{label}: unmatched endpoint"),
                    );
                }
                let mut matched: Vec<String> =
                    set.records.iter().filter_map(|r| r.matched_name.clone()).collect();
                matched.sort();
                let mut names: Vec<String> =
                    builtin_solutions(label).iter().map(|s| s.name.clone()).collect();
                names.sort();
                c.require(matched == names, format!("{label}: matched set differs"));
                c.require(
                    set.records.iter().all(|r| r.residual <= 1e-12),
                    format!("{label}: endpoint residual above 1e-12"),
                );
            }
            Err(e) => c.require(false, format!("{label}: solver failed: {e}")),
        }
    }
    c.finish(
        5,
        "solution lists",
        "printed lists exact-verify; endpoint sets are the printed lists plus zero",
    )
}

/// Criterion 6: 5A and 6A counts and histograms; the 4A family.
pub fn criterion_06_counts_and_histograms() -> CriterionResult {
    let mut c = Check::new();
    // 5A
    match solve_case(CaseLabel::FiveA, 0) {
        Ok(set) => {
            c.require(
                set.nontrivial_isolated_count() == 63,
                format!("5A: {} nontrivial isolated, want 63", set.nontrivial_isolated_count()),
            );
            c.require(set.records.len() == 64, format!("5A: {} endpoints, want 64", set.records.len()));
            let h = histogram(&set);
            let mut want = table1_5a();
            want.sort();
            c.require(h.classes == want, format!("5A histogram {:?}", h.classes));
            c.require(h.irrational == 20, format!("5A irrational bucket {}", h.irrational));
            let rational: usize = h.classes.iter().map(|(_, n)| n).sum();
            c.require(rational == 43, format!("5A rational count {rational}"));
            c.require(detect_families(&set).is_empty(), "5A: spurious family detected");
        }
        Err(e) => c.require(false, format!("5A solver failed: {e}")),
    }
    // 6A
    match solve_case(CaseLabel::SixA, 0) {
        Ok(set) => {
            let n = set.nontrivial_isolated_count();
            // The published total of 256 conformal vectors collides with the
            // Bezout bound 2^8 = 256, which must also cover the origin; the
            // raw count is reported and 255 is the consistent reading.
            c.require(n == 255 || n == 256, format!("6A: {n} nontrivial endpoints"));
            let h = histogram(&set);
            let below_one: Vec<(Rat, usize)> = h
                .classes
                .iter()
                .filter(|(cc, _)| cc < &Rat::one())
                .cloned()
                .collect();
            c.require(
                below_one == table2_6a_below_one(),
                format!("6A c.c.<1 histogram {below_one:?}"),
            );
        }
        Err(e) => c.require(false, format!("6A solver failed: {e}")),
    }
    // 4A
    match solve_case(CaseLabel::FourA, 0) {
        Ok(set) => {
            let iso = set.nontrivial_isolated_count();
            c.require(iso == 17, format!("4A: {iso} isolated nontrivial, want 17"));
            c.require(
                set.records.iter().filter(|r| r.is_isolated()).all(|r| r.residual <= 1e-12),
                "4A: isolated endpoint residual above 1e-12",
            );
            c.require(
                set.records
                    .iter()
                    .filter(|r| r.is_isolated() && !r.is_zero_solution(1e-8))
                    .all(|r| r.matched_name.is_some()),
                "4A: unmatched isolated endpoint",
            );
            let fams = detect_families(&set);
            c.require(!fams.is_empty(), "4A: no positive-dimensional family detected");
            let sys = polynomial_system(&builtin_griess_table(CaseLabel::FourA));
            let samples = [rat(1, 100), rat(1, 30), rat(1, 16)];
            for s in verify_parametric_family_4a(&sys, &samples) {
                c.require(
                    s.solves_system && s.central_charge_is_one,
                    format!("4A family check failed at d = {}", s.d),
                );
            }
        }
        Err(e) => c.require(false, format!("4A solver failed: {e}")),
    }
    c.finish(6, "counts and histograms", "5A 63+Table1, 6A Table2, 4A family verified")
}

fn sigma_orbit_ehat(label: CaseLabel) -> (crate::algebra::GriessTable, Vec<GriessElement>) {
    let t = builtin_griess_table(label);
    let mut v = Vec::new();
    let mut e = t.ehat();
    for _ in 0..t.case.n {
        v.push(e.clone());
        e = t.sigma_action(&e);
    }
    (t, v)
}

/// Criterion 7: Gram matrices of the charge-1/2 orbits and the exhaustive
/// stabilizer bounds.
pub fn criterion_07_gram_stabilizers() -> CriterionResult {
    let mut c = Check::new();
    // 6A: {w~2, e_0..e_5}, order 12, circulant entries
    {
        let (t, orbit) = sigma_orbit_ehat(CaseLabel::SixA);
        let mut vs = vec![t.basis_element(crate::algebra::BasisLabel::OmegaTilde(2))];
        vs.extend(orbit);
        let g = t.gram_matrix(&vs);
        for (i, gi) in g.iter().enumerate().skip(1) {
            c.require(g[0][i] == Cyc::from_rat(rat(1, 32)), "6A: <w~2, e_j> != 1/32");
            for (j, v) in gi.iter().enumerate().skip(1) {
                let want = match ((i as i64) - (j as i64)).rem_euclid(6) {
                    0 => rat(1, 4),
                    3 => rat(1, 32),
                    2 | 4 => rat(13, 1024),
                    _ => rat(5, 1024),
                };
                c.require(v == &Cyc::from_rat(want), format!("6A gram ({i},{j})"));
            }
        }
        let s = gram_stabilizer(&g);
        c.require(s.order == 12, format!("6A stabilizer order {}", s.order));
    }
    // 4B: {w~1, e_0..e_3}, order 8
    {
        let (t, orbit) = sigma_orbit_ehat(CaseLabel::FourB);
        let mut vs = vec![t.basis_element(crate::algebra::BasisLabel::OmegaTilde(1))];
        vs.extend(orbit);
        let s = gram_stabilizer(&t.gram_matrix(&vs));
        c.require(s.order == 8, format!("4B stabilizer order {}", s.order));
    }
    // 4A: {e_0..e_3}, order 8, parity-patterned gram
    {
        let (t, orbit) = sigma_orbit_ehat(CaseLabel::FourA);
        let g = t.gram_matrix(&orbit);
        for (i, gi) in g.iter().enumerate() {
            for (j, v) in gi.iter().enumerate() {
                if i != j {
                    let want = if (i + j) % 2 == 1 { rat(1, 128) } else { rat(0, 1) };
                    c.require(v == &Cyc::from_rat(want), format!("4A gram ({i},{j})"));
                }
            }
        }
        let s = gram_stabilizer(&g);
        c.require(s.order == 8, format!("4A stabilizer order {}", s.order));
    }
    // 3C: {e_0, e_1, e_2}, order 6
    {
        let (t, orbit) = sigma_orbit_ehat(CaseLabel::ThreeC);
        let s = gram_stabilizer(&t.gram_matrix(&orbit));
        c.require(s.order == 6, format!("3C stabilizer order {}", s.order));
    }
    // 5A: {e_0..e_4}, all off-diagonals 3/512, order 120 (a bound above the
    // published |Aut U| = 10, which uses generation arguments)
    {
        let (t, orbit) = sigma_orbit_ehat(CaseLabel::FiveA);
        let g = t.gram_matrix(&orbit);
        for (i, gi) in g.iter().enumerate() {
            for (j, v) in gi.iter().enumerate() {
                if i != j {
                    c.require(v == &Cyc::from_rat(rat(3, 512)), format!("5A gram ({i},{j})"));
                }
            }
        }
        let s = gram_stabilizer(&g);
        c.require(s.order == 120, format!("5A stabilizer order {}", s.order));
    }
    c.finish(7, "Gram stabilizers", "orders 12/8/8/6/120 with the published Gram entries")
}

/// Criterion 8: the Griess algebra is generated by `e^` and `f^`.
pub fn criterion_08_generation() -> CriterionResult {
    let mut c = Check::new();
    let want: [(CaseLabel, usize); 8] = [
        (CaseLabel::TwoA, 3),
        (CaseLabel::ThreeA, 4),
        (CaseLabel::FourA, 5),
        (CaseLabel::FiveA, 6),
        (CaseLabel::SixA, 8),
        (CaseLabel::FourB, 5),
        (CaseLabel::TwoB, 2),
        (CaseLabel::ThreeC, 3),
    ];
    for (label, dim) in want {
        let t = builtin_griess_table(label);
        let got = t.generation_span(&[t.ehat(), t.fhat()]);
        c.require(got == dim, format!("{label}: span dim {got}, want {dim}"));
        c.require(dim == t.case.dim_b(), format!("{label}: dim B mismatch"));
    }
    c.finish(8, "generation by ehat and fhat", "span(e^, f^) = dim B in all eight cases")
}

/// Criterion 9: the highest-weight eigenvalue lemmas and orthogonal triples.
pub fn criterion_09_eigenvalue_lemmas() -> CriterionResult {
    let mut c = Check::new();
    for (label, w, v, lam) in eigenvalue_lemmas() {
        let t = builtin_griess_table(label);
        let w = t.element_from_rats(&w);
        let v = t.element_from_rats(&v);
        match t.eigen_check(&w, &v) {
            Some(got) => c.require(
                got == Cyc::from_rat(lam.clone()),
                format!("{label}: eigenvalue {got}, want {lam}"),
            ),
            None => c.require(false, format!("{label}: not an eigenvector")),
        }
    }
    // the 5A highest-weight triple under the orthogonal (u, v, w)
    {
        let t = builtin_griess_table(CaseLabel::FiveA);
        let (_, triple, _) = orthogonal_decompositions()
            .into_iter()
            .find(|(l, _, _)| *l == CaseLabel::FiveA)
            .unwrap();
        let uvw: Vec<GriessElement> = triple.iter().map(|cs| t.element_from_rats(cs)).collect();
        for (hv, lams) in five_a_highest_weights() {
            let v = t.element_from_rats(&hv);
            for (w, lam) in uvw.iter().zip(lams.iter()) {
                match t.eigen_check(w, &v) {
                    Some(got) => c.require(
                        got == Cyc::from_rat(lam.clone()),
                        format!("5A triple: {got} want {lam}"),
                    ),
                    None => c.require(false, "5A triple: not an eigenvector".to_string()),
                }
            }
        }
    }
    // orthogonal decompositions
    for (label, vectors, charges) in orthogonal_decompositions() {
        let t = builtin_griess_table(label);
        let vs: Vec<GriessElement> = vectors.iter().map(|cs| t.element_from_rats(cs)).collect();
        let rep = orthogonal_decomposition_check(&t, &vs);
        c.require(rep.ok(), format!("{label}: orthogonal decomposition failed"));
        let got: Vec<Option<Rat>> = rep.central_charges.iter().map(Cyc::try_rat).collect();
        let want: Vec<Option<Rat>> = charges.into_iter().map(Some).collect();
        c.require(got == want, format!("{label}: central charges {got:?}"));
    }
    c.finish(9, "eigenvalue lemmas", "all highest-weight eigenvalues and triples exact")
}

/// Criterion 10: printed q-expansions and graded dimensions.
pub fn criterion_10_characters() -> CriterionResult {
    let mut c = Check::new();
    for w in reference_w_chars() {
        let order = rat_int(w.coeffs.len() as i64) + rat(w.offset.0, w.offset.1 as i64);
        match parafermion_char(w.ell, w.k, &order) {
            Ok(ch) => {
                for (i, coeff) in w.coeffs.iter().enumerate() {
                    let num = w.offset.0 * (w.ell as i64 * 4) / (w.offset.1 as i64)
                        + (i as i64) * 4 * w.ell as i64;
                    let got = ch.coeff(num, 4 * w.ell);
                    c.require(
                        got == Some(rat_int(*coeff)),
                        format!("W{}(0,{}) at offset+{i}: {got:?} want {coeff}", w.ell, w.k),
                    );
                }
            }
            Err(e) => c.require(false, format!("W{}(0,{}): {e}", w.ell, w.k)),
        }
    }
    // graded dimensions of L(1/2,h1) (x) L(21/22,h2)
    let order = rat_int(24);
    for ((h1, h2), n, want) in reference_dims_3c() {
        let l1 = ModuleLabel::from_weight(1, &h1).unwrap();
        let l2 = ModuleLabel::from_weight(9, &h2).unwrap();
        let prod = virasoro_char(&l1, &order).mul(&virasoro_char(&l2, &order));
        let denom = prod.denom();
        let got = prod.coeff(n * denom as i64, denom);
        c.require(
            got == Some(rat_int(want)),
            format!("dim [{h1},{h2}]_{n} = {got:?}, want {want}"),
        );
    }
    c.finish(10, "printed characters", "all printed coefficients and 15 graded dimensions exact")
}

/// Criterion 11: the decomposition identities.
pub fn criterion_11_decompositions() -> CriterionResult {
    let mut c = Check::new();
    let orders = [
        (CaseLabel::ThreeC, 20i64),
        (CaseLabel::FiveA, 15),
        (CaseLabel::SixA, 10),
        (CaseLabel::TwoB, 20),
        (CaseLabel::TwoA, 20),
        (CaseLabel::FourB, 20),
    ];
    for (label, order) in orders {
        match verify_decomposition(label, &rat_int(order)) {
            Ok(rep) => c.require(
                rep.equal,
                format!("{label}: mismatch at {:?}", rep.mismatch.map(|(e, a, b)| (e.to_string(), a.to_string(), b.to_string()))),
            ),
            Err(e) => c.require(false, format!("{label}: {e}")),
        }
    }
    c.finish(11, "decomposition identities", "all six identities equal through their orders")
}

/// Criterion 12: integral-weight module enumerations.
pub fn criterion_12_integral_weights() -> CriterionResult {
    let mut c = Check::new();
    let got = integral_weight_modules(&[
        WeightGrid::Unitary(1),
        WeightGrid::Unitary(5),
        WeightGrid::Unitary(5),
    ]);
    c.require(got == reference_integral_triples_5a(), format!("5A triples: {} found", got.len()));
    let got = integral_weight_modules(&[WeightGrid::Unitary(1), WeightGrid::Unitary(9)]);
    c.require(got == reference_integral_pairs_3c(), format!("3C pairs: {} found", got.len()));
    let got = integral_weight_modules(&[
        WeightGrid::Explicit(vec![rat(0, 1), rat(1, 7), rat(5, 7)]),
        WeightGrid::Unitary(5),
    ]);
    c.require(got == reference_branching_pairs_6a(), format!("6A branching: {} found", got.len()));
    c.finish(12, "integral-weight enumerations", "12 triples, 6 pairs, 3 branching modules exact")
}

/// Criterion 13: property suites with no printed number attached.
pub fn criterion_13_properties() -> CriterionResult {
    let mut c = Check::new();
    for label in ALL_LABELS {
        let t = builtin_griess_table(label);
        let d = t.dim();
        let basis: Vec<GriessElement> = t.labels.iter().map(|l| t.basis_element(*l)).collect();
        for i in 0..d {
            for j in 0..d {
                // commutativity
                c.require(
                    t.mul(&basis[i], &basis[j]) == t.mul(&basis[j], &basis[i]),
                    format!("{label}: product not commutative at ({i},{j})"),
                );
                // sigma and theta preserve product and form
                for (name, act) in [
                    ("sigma", Box::new(|x: &GriessElement| t.sigma_action(x))
                        as Box<dyn Fn(&GriessElement) -> GriessElement>),
                    ("theta", Box::new(|x: &GriessElement| t.theta_action(x))),
                ] {
                    let lhs = t.mul(&act(&basis[i]), &act(&basis[j]));
                    let rhs = act(&t.mul(&basis[i], &basis[j]));
                    c.require(lhs == rhs, format!("{label}: {name} not multiplicative"));
                    c.require(
                        t.form(&act(&basis[i]), &act(&basis[j])) == t.form(&basis[i], &basis[j]),
                        format!("{label}: {name} not isometric"),
                    );
                }
                // invariance <a1 b, c> = <b, a1 c> for a = omega~^k
                if i < t.num_omega() {
                    for k in 0..d {
                        let lhs = t.form(&t.mul(&basis[i], &basis[j]), &basis[k]);
                        let rhs = t.form(&basis[j], &t.mul(&basis[i], &basis[k]));
                        c.require(lhs == rhs, format!("{label}: invariance at ({i},{j},{k})"));
                    }
                }
            }
        }
        // theta sigma theta = sigma^{-1} on a generic element
        let g = t.ehat();
        let lhs = t.theta_action(&t.sigma_action(&t.theta_action(&g)));
        let mut rhs = g.clone();
        for _ in 0..t.case.n - 1 {
            rhs = t.sigma_action(&rhs);
        }
        c.require(lhs == rhs, format!("{label}: theta sigma theta != sigma^-1"));
        // the Virasoro element is always a solution
        let vir = t.virasoro_element();
        c.require(t.is_conformal_vector(&vir), format!("{label}: Virasoro element not conformal"));
        let want: Rat = t.case.components.iter().map(|k| k.central_charge.clone()).sum();
        c.require(
            t.central_charge(&vir).try_rat() == Some(want),
            format!("{label}: Virasoro central charge"),
        );
    }
    // commutativity also holds at the lattice level, where it is a theorem
    // about the product rules rather than a symmetry of stored tables
    for label in ALL_LABELS {
        let gens = crate::derive::build_basis_elements(&case(label)).expect("basis");
        let mut basis = gens.omega_tilde.clone();
        basis.extend(gens.x.iter().cloned());
        for (i, x) in basis.iter().enumerate() {
            for y in basis.iter().skip(i + 1) {
                let xy = x.griess_product(y).expect("product");
                let yx = y.griess_product(x).expect("product");
                c.require(xy == yx, format!("{label}: lattice product not commutative"));
            }
        }
    }
    // nonnegative integer character coefficients
    for (ell, k) in [(2u64, 0u64), (2, 2), (3, 0), (3, 2), (5, 2), (6, 6), (9, 6)] {
        match parafermion_char(ell, k, &rat_int(8)) {
            Ok(ch) => c.require(
                ch.assert_nonneg_integers().is_ok(),
                format!("W{ell}(0,{k}): negative or fractional coefficient"),
            ),
            Err(e) => c.require(false, format!("W{ell}(0,{k}): {e}")),
        }
    }
    // Virasoro Kac-mirror symmetry
    for (m, r, s) in [(1u64, 1u64, 2u64), (5, 3, 4), (9, 2, 7), (2, 1, 1)] {
        let l = ModuleLabel::new(m, r, s).unwrap();
        let a = virasoro_char(&l, &rat_int(8));
        let b = virasoro_char(&l.mirror(), &rat_int(8));
        c.require(a.eq_to_common_order(&b), format!("Virasoro mirror ({m},{r},{s})"));
    }
    // solver determinism under a fixed seed
    {
        let sys = polynomial_system(&builtin_griess_table(CaseLabel::ThreeC));
        let a = enumerate(&sys, 7, &candidates(CaseLabel::ThreeC), &TrackOptions::default());
        let b = enumerate(&sys, 7, &candidates(CaseLabel::ThreeC), &TrackOptions::default());
        match (a, b) {
            (Ok(a), Ok(b)) => {
                c.require(a.records.len() == b.records.len(), "determinism: counts differ");
                for (x, y) in a.records.iter().zip(&b.records) {
                    c.require(x.values == y.values, "determinism: endpoint values differ");
                }
            }
            _ => c.require(false, "determinism run failed"),
        }
    }
    c.finish(13, "property suites", "commutativity, symmetries, invariance, determinism")
}

/// Run all thirteen criteria in order.
pub fn run_all() -> Vec<CriterionResult> {
    vec![
        criterion_01_lattice_ground_truth(),
        criterion_02_table_derivation(),
        criterion_03_polynomial_systems(),
        criterion_04_mckay_values(),
        criterion_05_solution_lists(),
        criterion_06_counts_and_histograms(),
        criterion_07_gram_stabilizers(),
        criterion_08_generation(),
        criterion_09_eigenvalue_lemmas(),
        criterion_10_characters(),
        criterion_11_decompositions(),
        criterion_12_integral_weights(),
        criterion_13_properties(),
    ]
}
