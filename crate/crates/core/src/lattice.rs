//! The E8 root system in the extended-diagram frame.
//!
//! Vectors are stored by their coordinates over the simple roots
//! `alpha_1..alpha_8`, numbered as in the extended diagram
//!
//! ```text
//!                               alpha_8
//!                                  |
//!   alpha_0 - alpha_1 - alpha_2 - alpha_3 - alpha_4 - alpha_5 - alpha_6 - alpha_7
//! ```
//!
//! (the branch node carrying `alpha_8` is `alpha_5`), with the bilinear form
//! given by the E8 Gram matrix: 2 on the diagonal, -1 on diagram edges.
//! `alpha_0` is minus the highest root, so
//! `alpha_0 + 2 alpha_1 + 3 alpha_2 + 4 alpha_3 + 5 alpha_4 + 6 alpha_5
//!  + 4 alpha_6 + 2 alpha_7 + 3 alpha_8 = 0` holds exactly.
//!
//! Roots have integer coordinates in this frame; the fractional coset
//! representatives live in [`LatticeVec`].

use crate::cases::CaseDescriptor;
use crate::rat::{rat_int, Rat};
use num_traits::Zero;
use std::collections::BTreeSet;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("vector is not an E8 root")]
    NotARoot,
}

/// An element of the E8 lattice, integer coordinates over alpha_1..alpha_8.
pub type Root = [i64; 8];

/// A rational vector in the ambient space, coordinates over alpha_1..alpha_8.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeVec(pub Vec<Rat>);

/// Marks of the extended diagram: the coefficient of `alpha_i` in the affine
/// relation; equals the index |E8 / L(i)|.
pub const MARKS: [usize; 9] = [1, 2, 3, 4, 5, 6, 4, 2, 3];

/// E8 Gram matrix over the simple roots alpha_1..alpha_8 (0-indexed).
pub fn gram() -> &'static [[i64; 8]; 8] {
    static GRAM: OnceLock<[[i64; 8]; 8]> = OnceLock::new();
    GRAM.get_or_init(|| {
        let mut g = [[0i64; 8]; 8];
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = 2;
        }
        // chain alpha_1..alpha_7, branch alpha_8 on alpha_5
        let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)];
        for (i, j) in edges {
            g[i][j] = -1;
            g[j][i] = -1;
        }
        g
    })
}

/// `<a, b>` for lattice elements.
pub fn dot(a: &Root, b: &Root) -> i64 {
    let g = gram();
    let mut gb = [0i64; 8];
    for (u, gu) in g.iter().enumerate() {
        gb[u] = gu.iter().zip(b).map(|(c, x)| c * x).sum();
    }
    a.iter().zip(&gb).map(|(x, y)| x * y).sum()
}

/// `G b` as an integer vector, handy in inner loops.
pub fn gram_times(b: &Root) -> [i64; 8] {
    let g = gram();
    let mut gb = [0i64; 8];
    for (u, gu) in g.iter().enumerate() {
        gb[u] = gu.iter().zip(b).map(|(c, x)| c * x).sum();
    }
    gb
}

/// `<a, b>` with rational `a`.
pub fn dot_rat(a: &LatticeVec, b: &Root) -> Rat {
    let gb = gram_times(b);
    a.0.iter().zip(&gb).map(|(x, y)| x * rat_int(*y)).fold(Rat::zero(), |s, t| s + t)
}

/// The nine nodes alpha_0..alpha_8 of the extended diagram.
pub fn extended_nodes() -> &'static [Root; 9] {
    static NODES: OnceLock<[Root; 9]> = OnceLock::new();
    NODES.get_or_init(|| {
        let mut nodes = [[0i64; 8]; 9];
        for i in 1..=8 {
            nodes[i][i - 1] = 1;
        }
        // alpha_0 = -(2 a1 + 3 a2 + 4 a3 + 5 a4 + 6 a5 + 4 a6 + 2 a7 + 3 a8)
        for (j, m) in MARKS.iter().enumerate().skip(1) {
            for u in 0..8 {
                nodes[0][u] -= (*m as i64) * nodes[j][u];
            }
        }
        nodes
    })
}

/// Gram matrix of the nine extended nodes.
pub fn extended_gram() -> [[i64; 9]; 9] {
    let nodes = extended_nodes();
    let mut g = [[0i64; 9]; 9];
    for i in 0..9 {
        for j in 0..9 {
            g[i][j] = dot(&nodes[i], &nodes[j]);
        }
    }
    g
}

/// All 240 roots of E8, enumerated as the closure of the simple roots under
/// the simple reflections. Sorted, so iteration order is canonical.
pub fn e8_roots() -> &'static Vec<Root> {
    static ROOTS: OnceLock<Vec<Root>> = OnceLock::new();
    ROOTS.get_or_init(|| {
        let mut set: BTreeSet<Root> = BTreeSet::new();
        for i in 0..8 {
            let mut r = [0i64; 8];
            r[i] = 1;
            set.insert(r);
            r[i] = -1;
            set.insert(r);
        }
        loop {
            let mut new_roots = Vec::new();
            for r in &set {
                let gr = gram_times(r);
                for i in 0..8 {
                    // s_i(r) = r - <r, alpha_i> alpha_i
                    let mut s = *r;
                    s[i] -= gr[i];
                    if !set.contains(&s) {
                        new_roots.push(s);
                    }
                }
            }
            if new_roots.is_empty() {
                break;
            }
            set.extend(new_roots);
        }
        set.into_iter().collect()
    })
}

/// Coset index of a root in `E8 = L(i) u (a_i + L(i)) u ...`, computed from
/// the pairing with the case's representative vector `a`:
/// `<a, v> = -j / n  (mod Z)` for `v` in coset `j`.
pub fn coset_of(v: &LatticeVec, case: &CaseDescriptor) -> Result<usize, LatticeError> {
    let root = as_root(v).ok_or(LatticeError::NotARoot)?;
    if dot(&root, &root) != 2 {
        return Err(LatticeError::NotARoot);
    }
    Ok(coset_of_root(&root, case))
}

/// Coset index for a known root; see [`coset_of`].
pub fn coset_of_root(v: &Root, case: &CaseDescriptor) -> usize {
    let n = case.n as i64;
    let a = &case.coset_rep;
    let p = dot_rat(a, v) * rat_int(-n);
    debug_assert!(p.is_integer(), "coset pairing must land in (1/n)Z");
    let j = p.to_integer();
    let j: i64 = i64::try_from(&j).expect("coset index overflow");
    j.rem_euclid(n) as usize
}

fn as_root(v: &LatticeVec) -> Option<Root> {
    let mut r = [0i64; 8];
    for (x, c) in r.iter_mut().zip(&v.0) {
        if !c.is_integer() {
            return None;
        }
        *x = i64::try_from(&c.to_integer()).ok()?;
    }
    Some(r)
}

/// Numbers of roots in each nonzero coset `j alpha_i + L(i)`, `j = 1..n-1`.
pub fn coset_root_counts(case: &CaseDescriptor) -> Vec<usize> {
    let mut counts = vec![0usize; case.n];
    for r in e8_roots() {
        counts[coset_of_root(r, case)] += 1;
    }
    counts.remove(0);
    counts
}

/// The roots lying in coset `j` of the case, `j = 0..n-1`.
pub fn coset_roots(case: &CaseDescriptor, j: usize) -> Vec<Root> {
    e8_roots().iter().copied().filter(|r| coset_of_root(r, case) == j).collect()
}

/// Roots of one indecomposable component of `L(i)`: the norm-2 vectors in the
/// integer span of the component's nodes.
pub fn component_roots(case: &CaseDescriptor, component: usize) -> Vec<Root> {
    let nodes = extended_nodes();
    let comp = &case.components[component];
    let basis: Vec<Root> = comp.nodes.iter().map(|&n| nodes[n]).collect();
    // Membership: solve the (invertible) component Gram system exactly and
    // check integrality of the coefficients.
    let gram_c: Vec<Vec<Rat>> =
        basis.iter().map(|a| basis.iter().map(|b| rat_int(dot(a, b))).collect()).collect();
    e8_roots()
        .iter()
        .copied()
        .filter(|r| {
            let rhs: Vec<Rat> = basis.iter().map(|b| rat_int(dot(b, r))).collect();
            match crate::linalg::solve_exact(&gram_c, &rhs) {
                Some(coeffs) => {
                    if !coeffs.iter().all(Rat::is_integer) {
                        return false;
                    }
                    // reconstruct and compare, guarding against rank issues
                    let mut acc = [0i64; 8];
                    for (c, b) in coeffs.iter().zip(&basis) {
                        let ci = i64::try_from(&c.to_integer()).unwrap();
                        for (x, y) in acc.iter_mut().zip(b) {
                            *x += ci * y;
                        }
                    }
                    acc == *r
                }
                None => false,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cases::{all_cases, case, CaseLabel};

    #[test]
    fn exactly_240_roots_norm_2_negation_closed() {
        let roots = e8_roots();
        assert_eq!(roots.len(), 240);
        let mut total = [0i64; 8];
        for r in roots {
            assert_eq!(dot(r, r), 2);
            for (t, x) in total.iter_mut().zip(r) {
                *t += x;
            }
            let neg = r.map(|x| -x);
            assert!(roots.binary_search(&neg).is_ok());
        }
        assert_eq!(total, [0i64; 8]);
    }

    #[test]
    fn extended_diagram_gram_and_affine_relation() {
        let g = extended_gram();
        // alpha_8 hangs off alpha_5; alpha_0 off alpha_1; ends are far apart
        assert_eq!(g[5][8], -1);
        assert_eq!(g[0][1], -1);
        assert_eq!(g[0][7], 0);
        for i in 0..9 {
            assert_eq!(g[i][i], 2);
        }
        // adjacency counts: chain with one branch
        let edges: usize = (0..9).map(|i| (0..9).filter(|&j| g[i][j] == -1).count()).sum();
        assert_eq!(edges, 16); // 8 edges, each counted twice
        // sum n_j alpha_j = 0
        let nodes = extended_nodes();
        let mut s = [0i64; 8];
        for (j, m) in MARKS.iter().enumerate() {
            for u in 0..8 {
                s[u] += (*m as i64) * nodes[j][u];
            }
        }
        assert_eq!(s, [0i64; 8]);
    }

    #[test]
    fn coset_representative_pairings() {
        // <a, alpha_j> integral for j != i, and n <a, alpha_i> = -1 mod n
        let nodes = extended_nodes();
        for c in all_cases() {
            for (j, node) in nodes.iter().enumerate() {
                let p = dot_rat(&c.coset_rep, node);
                if j == c.index {
                    let np = p * rat_int(c.n as i64);
                    assert!(np.is_integer());
                    let v = i64::try_from(&np.to_integer()).unwrap();
                    assert_eq!(v.rem_euclid(c.n as i64), (-1i64).rem_euclid(c.n as i64), "case {}", c.label);
                } else {
                    assert!(p.is_integer(), "case {} node {}", c.label, j);
                }
            }
        }
    }

    #[test]
    fn coset_of_matches_membership() {
        // alpha_i is in coset 1; other nodes are in coset 0
        let nodes = extended_nodes();
        for c in all_cases() {
            if c.n == 1 {
                continue;
            }
            for (j, node) in nodes.iter().enumerate() {
                let lv = LatticeVec(node.iter().map(|&x| rat_int(x)).collect());
                let got = coset_of(&lv, &c).unwrap();
                if j == c.index {
                    assert_eq!(got, 1);
                } else {
                    assert_eq!(got, 0);
                }
            }
        }
        // norm 8: not a root
        let mut coords = vec![rat_int(0); 8];
        coords[0] = rat_int(2);
        let not_root = LatticeVec(coords);
        assert_eq!(coset_of(&not_root, &case(CaseLabel::TwoA)), Err(LatticeError::NotARoot));
        // non-integral coordinates are not in the lattice at all
        let half = LatticeVec(vec![crate::rat::rat(1, 2); 8]);
        assert_eq!(coset_of(&half, &case(CaseLabel::TwoA)), Err(LatticeError::NotARoot));
    }

    #[test]
    fn coset_counts_match_gram_entries() {
        let expect: [(CaseLabel, &[usize]); 8] = [
            (CaseLabel::TwoA, &[112]),
            (CaseLabel::ThreeA, &[81, 81]),
            (CaseLabel::FourA, &[64, 60, 64]),
            (CaseLabel::FiveA, &[50, 50, 50, 50]),
            (CaseLabel::SixA, &[36, 45, 40, 45, 36]),
            (CaseLabel::FourB, &[56, 70, 56]),
            (CaseLabel::TwoB, &[128]),
            (CaseLabel::ThreeC, &[84, 84]),
        ];
        for (label, want) in expect {
            let c = case(label);
            let counts = coset_root_counts(&c);
            assert_eq!(counts, want, "case {label}");
            // palindromic and accounted against 240
            let in_l = 240 - counts.iter().sum::<usize>();
            let comp_total: usize = (0..c.components.len()).map(|k| component_roots(&c, k).len()).sum();
            assert_eq!(in_l, comp_total, "case {label}");
            for j in 0..counts.len() {
                assert_eq!(counts[j], counts[counts.len() - 1 - j]);
            }
        }
    }

    #[test]
    fn component_root_counts() {
        // |Phi(A_n)| = n(n+1), |Phi(D_n)| = 2n(n-1), |Phi(E6/7/8)| = 72/126/240
        let expect: [(CaseLabel, &[usize]); 9] = [
            (CaseLabel::OneA, &[240]),
            (CaseLabel::TwoA, &[2, 126]),
            (CaseLabel::ThreeA, &[6, 72]),
            (CaseLabel::FourA, &[12, 40]),
            (CaseLabel::FiveA, &[20, 20]),
            (CaseLabel::SixA, &[6, 2, 30]),
            (CaseLabel::FourB, &[2, 56]),
            (CaseLabel::TwoB, &[112]),
            (CaseLabel::ThreeC, &[72]),
        ];
        for (label, want) in expect {
            let c = case(label);
            let got: Vec<usize> = (0..c.components.len()).map(|k| component_roots(&c, k).len()).collect();
            assert_eq!(got, want, "case {label}");
        }
    }
}
