//! Module-decomposition identities: for each case, the character of the
//! coset algebra `U` computed from its Virasoro decomposition is compared
//! coefficientwise against a second route.
//!
//! For 3C, 5A and 6A the second route is the independent parafermion
//! construction. For 2A the Ising factors are re-derived through the level-2
//! parafermion route; for 3A and 4B no independent W-route is printed, so the
//! identity compares the two published Virasoro decompositions of the same
//! algebra and is labeled a consistency check. 2B compares against the
//! rank-1 lattice plus-fixed-point character.

use super::parafermion::parafermion_char;
use super::theta::lattice_coset_char;
use super::virasoro::{virasoro_char, ModuleLabel};
use super::{euler_product, QSeries};
use crate::cases::CaseLabel;
use crate::rat::{rat, rat_int, Rat};
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecompError {
    #[error("no decomposition identity is defined for case {0}")]
    UnsupportedCase(CaseLabel),
    #[error("weight {0} is not on the unitary grid m={1}")]
    WeightNotOnGrid(Rat, u64),
}

/// Result of a decomposition check.
#[derive(Debug, Clone)]
pub struct DecompReport {
    pub case: CaseLabel,
    pub order: Rat,
    pub lhs: String,
    pub rhs: String,
    /// True when both routes use only Virasoro characters (no independent
    /// derivation exists in print), so the check certifies consistency only.
    pub consistency_only: bool,
    pub equal: bool,
    /// `(exponent, lhs coefficient, rhs coefficient)` at the first mismatch.
    pub mismatch: Option<(Rat, Rat, Rat)>,
}

fn vir(m: u64, h: &Rat, order: &Rat) -> Result<QSeries<Rat>, DecompError> {
    let label = ModuleLabel::from_weight(m, h)
        .ok_or_else(|| DecompError::WeightNotOnGrid(h.clone(), m))?;
    Ok(virasoro_char(&label, order))
}

/// Sum of products of Virasoro characters over a module list; each summand
/// is a tuple of `(m, h)` factors.
fn vir_sum(terms: &[Vec<(u64, Rat)>], order: &Rat) -> Result<QSeries<Rat>, DecompError> {
    let mut acc = QSeries::<Rat>::zero(1, order);
    for t in terms {
        let mut prod = QSeries::<Rat>::one(1, order);
        for (m, h) in t {
            prod = prod.mul(&vir(*m, h, order)?);
        }
        acc = acc.add(&prod);
    }
    Ok(acc)
}

fn pairs(m1: u64, m2: u64, hs: &[(i64, i64, i64, i64)]) -> Vec<Vec<(u64, Rat)>> {
    hs.iter().map(|(a, b, c, d)| vec![(m1, rat(*a, *b)), (m2, rat(*c, *d))]).collect()
}

/// Character of the 3A-algebra module with the given top weight on the
/// `L(6/7,*)` side (`h = 0, 5/7, 1/7`), per the printed decompositions.
fn ch_u3a(h_num: i64, h_den: i64, order: &Rat) -> Result<QSeries<Rat>, DecompError> {
    let (pair, twisted): ([(i64, i64); 2], (i64, i64)) = match (h_num, h_den) {
        (0, 1) => ([(0, 1), (5, 1)], (4, 3)),
        (5, 7) => ([(5, 7), (12, 7)], (1, 21)),
        (1, 7) => ([(1, 7), (22, 7)], (10, 21)),
        _ => unreachable!("unknown 3A module"),
    };
    let w3_side = vir(3, &rat(0, 1), order)?.add(&vir(3, &rat(3, 1), order)?);
    let e6_side = vir(4, &rat(pair[0].0, pair[0].1), order)?
        .add(&vir(4, &rat(pair[1].0, pair[1].1), order)?);
    let tw = vir(3, &rat(2, 3), order)?.mul(&vir(4, &rat(twisted.0, twisted.1), order)?);
    Ok(w3_side.mul(&e6_side).add(&tw.scale(&rat_int(2))))
}

/// `prod (1 + q^n)^{-1}`: the theta-twisted rank-1 Heisenberg trace.
fn inverse_theta_twisted(order: &Rat) -> QSeries<Rat> {
    // prod(1+q^n) = prod(1-q^{2n}) / prod(1-q^n)
    let mut euler_q2 = QSeries::<Rat>::one(2, order);
    {
        let bound = euler_q2.trunc();
        let mut n = 1i64;
        while 4 * n <= bound {
            let mut f = QSeries::<Rat>::one(1, order);
            f.add_term(2 * n, rat_int(-1));
            euler_q2 = euler_q2.mul(&f);
            n += 1;
        }
    }
    euler_product(1, order).div(&euler_q2).expect("unit constant term")
}

/// Check the decomposition identity of a case at the given order.
pub fn verify_decomposition(case: CaseLabel, order: &Rat) -> Result<DecompReport, DecompError> {
    let t = order;
    let (lhs, rhs, lhs_desc, rhs_desc, consistency_only) = match case {
        CaseLabel::TwoA => {
            let lhs = vir_sum(&pairs(1, 2, &[(0, 1, 0, 1), (1, 2, 3, 2)]), t)?;
            let w0 = parafermion_char(2, 0, t).expect("W2(0,0)");
            let w2 = parafermion_char(2, 2, t).expect("W2(0,2)");
            let rhs = w0
                .mul(&vir(2, &rat(0, 1), t)?)
                .add(&w2.mul(&vir(2, &rat(3, 2), t)?));
            // the level-2 route recomputes the Ising factors through the
            // affine/lattice machinery but reuses the same module list, so
            // this certifies consistency rather than an independent
            // derivation
            (
                lhs,
                rhs,
                "[0,0] + [1/2,3/2] over L(1/2) x L(7/10)".to_string(),
                "W2(0,0) ch L(7/10,0) + W2(0,2) ch L(7/10,3/2)".to_string(),
                true,
            )
        }
        CaseLabel::ThreeA => {
            let lhs = ch_u3a(0, 1, t)?;
            let rhs = vir_sum(
                &pairs(
                    3,
                    4,
                    &[(0, 1, 0, 1), (3, 1, 5, 1), (2, 3, 4, 3), (13, 8, 3, 8), (1, 8, 23, 8)],
                ),
                t,
            )?;
            (
                lhs,
                rhs,
                "(L(4/5,0)+L(4/5,3)) x (L(6/7,0)+L(6/7,5)) + 2 [2/3,4/3]".to_string(),
                "[0,0]+[3,5]+[2/3,4/3]+[13/8,3/8]+[1/8,23/8] w.r.t. Vir(x0) x Vir(y0)".to_string(),
                true,
            )
        }
        CaseLabel::FourB => {
            let triples = |hs: &[(i64, i64, i64, i64, i64, i64)]| -> Vec<Vec<(u64, Rat)>> {
                hs.iter()
                    .map(|(a, b, c, d, e, f)| {
                        vec![(1u64, rat(*a, *b)), (2u64, rat(*c, *d)), (2u64, rat(*e, *f))]
                    })
                    .collect()
            };
            let lhs = vir_sum(
                &triples(&[
                    (0, 1, 0, 1, 0, 1),
                    (1, 2, 3, 2, 0, 1),
                    (1, 2, 0, 1, 3, 2),
                    (0, 1, 3, 2, 3, 2),
                ]),
                t,
            )?;
            let rhs = vir_sum(
                &triples(&[(0, 1, 0, 1, 0, 1), (1, 2, 0, 1, 3, 2), (1, 16, 3, 2, 7, 16)]),
                t,
            )?;
            (
                lhs,
                rhs,
                "[0,0,0]+[1/2,3/2,0]+[1/2,0,3/2]+[0,3/2,3/2] w.r.t. (w1,w2,w3)".to_string(),
                "[0,0,0]+[1/2,0,3/2]+[1/16,3/2,7/16] w.r.t. (x0,y0,z0)".to_string(),
                true,
            )
        }
        CaseLabel::FiveA => {
            let triples: Vec<Vec<(u64, Rat)>> = FIVE_A_MODULES
                .iter()
                .map(|(h1, h2, h3)| {
                    vec![
                        (1u64, rat(h1.0, h1.1)),
                        (5u64, rat(h2.0, h2.1)),
                        (5u64, rat(h3.0, h3.1)),
                    ]
                })
                .collect();
            let lhs = vir_sum(&triples, t)?;
            let w = |k: u64| parafermion_char(5, k, t).expect("W5 character");
            let (w0, w2, w4, w6, w8) = (w(0), w(2), w(4), w(6), w(8));
            let rhs = w0
                .mul(&w0)
                .add(&w2.mul(&w4))
                .add(&w4.mul(&w8))
                .add(&w6.mul(&w2))
                .add(&w8.mul(&w6));
            (
                lhs,
                rhs,
                "sum of the twelve [h1,h2,h3] over L(1/2) x L(25/28)^2".to_string(),
                "W5(0,0)^2 + W5(0,2)W5(0,4) + W5(0,4)W5(0,8) + W5(0,6)W5(0,2) + W5(0,8)W5(0,6)"
                    .to_string(),
                false,
            )
        }
        CaseLabel::SixA => {
            let w6 = |k: u64| parafermion_char(6, k, t).expect("W6 character");
            let w3 = |k: u64| parafermion_char(3, k, t).expect("W3 character");
            let ising0 = vir(1, &rat(0, 1), t)?;
            let ihalf = vir(1, &rat(1, 2), t)?;
            let lhs = w6(0)
                .mul(&w3(0))
                .mul(&ising0)
                .add(&w6(2).mul(&w3(4)).mul(&ihalf))
                .add(&w6(4).mul(&w3(2)).mul(&ising0))
                .add(&w6(6).mul(&w3(0)).mul(&ihalf))
                .add(&w6(8).mul(&w3(4)).mul(&ising0))
                .add(&w6(10).mul(&w3(2)).mul(&ihalf));
            let rhs = ch_u3a(0, 1, t)?
                .mul(&vir(5, &rat(0, 1), t)?)
                .add(&ch_u3a(5, 7, t)?.mul(&vir(5, &rat(9, 7), t)?))
                .add(&ch_u3a(1, 7, t)?.mul(&vir(5, &rat(34, 7), t)?));
            (
                lhs,
                rhs,
                "sum over W6(0,2s) x W3 x Ising branching".to_string(),
                "U3A(0) L(25/28,0) + U3A(5/7) L(25/28,9/7) + U3A(1/7) L(25/28,34/7)".to_string(),
                false,
            )
        }
        CaseLabel::TwoB => {
            let ising0 = vir(1, &rat(0, 1), t)?;
            let lhs = ising0.mul(&ising0);
            // ch V^+_{Z gamma}, <gamma,gamma> = 4:
            // (1/2)(Theta/eta-part + prod(1+q^n)^{-1})
            let plus = lattice_coset_char(2, 0, t)
                .add(&inverse_theta_twisted(t))
                .scale(&rat(1, 2));
            (
                lhs,
                plus,
                "ch L(1/2,0)^2".to_string(),
                "(1/2)(theta_{Z gamma}/phi + prod(1+q^n)^{-1}), <gamma,gamma>=4".to_string(),
                false,
            )
        }
        CaseLabel::ThreeC => {
            let lhs = vir_sum(
                &pairs(
                    1,
                    9,
                    &[
                        (0, 1, 0, 1),
                        (0, 1, 8, 1),
                        (1, 2, 7, 2),
                        (1, 2, 45, 2),
                        (1, 16, 31, 16),
                        (1, 16, 175, 16),
                    ],
                ),
                t,
            )?;
            let rhs = parafermion_char(9, 0, t)
                .expect("W9(0,0)")
                .add(&parafermion_char(9, 6, t).expect("W9(0,6)"))
                .add(&parafermion_char(9, 12, t).expect("W9(0,12)"));
            (
                lhs,
                rhs,
                "[0,0]+[0,8]+[1/2,7/2]+[1/2,45/2]+[1/16,31/16]+[1/16,175/16]".to_string(),
                "W9(0,0) + W9(0,6) + W9(0,12)".to_string(),
                false,
            )
        }
        CaseLabel::OneA | CaseLabel::FourA => return Err(DecompError::UnsupportedCase(case)),
    };
    let mismatch = lhs.first_mismatch(&rhs);
    Ok(DecompReport {
        case,
        order: order.clone(),
        lhs: lhs_desc,
        rhs: rhs_desc,
        consistency_only,
        equal: mismatch.is_none(),
        mismatch,
    })
}

/// The twelve modules of the 5A decomposition, as `(h1, h2, h3)` fractions.
pub const FIVE_A_MODULES: [((i64, i64), (i64, i64), (i64, i64)); 12] = [
    ((0, 1), (0, 1), (0, 1)),
    ((1, 16), (5, 32), (57, 32)),
    ((1, 16), (57, 32), (5, 32)),
    ((1, 2), (3, 4), (3, 4)),
    ((0, 1), (3, 4), (13, 4)),
    ((0, 1), (13, 4), (3, 4)),
    ((1, 16), (57, 32), (165, 32)),
    ((1, 16), (165, 32), (57, 32)),
    ((1, 2), (13, 4), (13, 4)),
    ((1, 2), (0, 1), (15, 2)),
    ((1, 2), (15, 2), (0, 1)),
    ((0, 1), (15, 2), (15, 2)),
];

/// A weight set for integral-weight enumeration: either a full unitary grid
/// or an explicit list of top weights.
#[derive(Debug, Clone)]
pub enum WeightGrid {
    Unitary(u64),
    Explicit(Vec<Rat>),
}

impl WeightGrid {
    fn weights(&self) -> Vec<Rat> {
        match self {
            WeightGrid::Unitary(m) => ModuleLabel::grid_weights(*m),
            WeightGrid::Explicit(ws) => ws.clone(),
        }
    }
}

/// All tuples of weights, one from each grid, whose sum is an integer.
/// Grids are deduplicated via the Kac-table mirror before combining.
pub fn integral_weight_modules(grids: &[WeightGrid]) -> Vec<Vec<Rat>> {
    let sets: Vec<Vec<Rat>> = grids.iter().map(WeightGrid::weights).collect();
    let mut out: Vec<Vec<Rat>> = vec![Vec::new()];
    for set in &sets {
        let mut next = Vec::new();
        for prefix in &out {
            for w in set {
                let mut t = prefix.clone();
                t.push(w.clone());
                next.push(t);
            }
        }
        out = next;
    }
    let mut res: Vec<Vec<Rat>> = out
        .into_iter()
        .filter(|t| t.iter().fold(Rat::one() - Rat::one(), |s, h| s + h).is_integer())
        .collect();
    res.sort();
    res
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn two_b_identity() {
        let r = verify_decomposition(CaseLabel::TwoB, &rat_int(16)).unwrap();
        assert!(r.equal, "mismatch: {:?}", r.mismatch);
        assert!(!r.consistency_only);
    }

    #[test]
    fn two_a_identity() {
        let r = verify_decomposition(CaseLabel::TwoA, &rat_int(12)).unwrap();
        assert!(r.equal, "mismatch: {:?}", r.mismatch);
    }

    #[test]
    fn unsupported_cases_report_errors() {
        assert!(matches!(
            verify_decomposition(CaseLabel::FourA, &rat_int(4)),
            Err(DecompError::UnsupportedCase(_))
        ));
    }

    #[test]
    fn integral_weight_pairs_ising_times_c21_22() {
        let got = integral_weight_modules(&[WeightGrid::Unitary(1), WeightGrid::Unitary(9)]);
        let want: Vec<Vec<Rat>> = [
            (0, 1, 0, 1),
            (0, 1, 8, 1),
            (1, 2, 7, 2),
            (1, 2, 45, 2),
            (1, 16, 31, 16),
            (1, 16, 175, 16),
        ]
        .iter()
        .map(|(a, b, c, d)| vec![rat(*a, *b), rat(*c, *d)])
        .collect();
        let mut want = want;
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn single_ising_grid() {
        // a single module is integrally graded iff its top weight is an
        // integer, so only the vacuum survives
        let got = integral_weight_modules(&[WeightGrid::Unitary(1)]);
        assert_eq!(got, vec![vec![rat(0, 1)]]);
    }
}
