//! The nine nodes of the extended E8 diagram and their coset data.
//!
//! Removing node `alpha_i` leaves a rank-8 sublattice `L(i)` of index
//! `n_i` (the mark of the node), decomposing as
//!
//! | i | label | n_i | L(i)            |
//! |---|-------|-----|-----------------|
//! | 0 | 1A    | 1   | E8              |
//! | 1 | 2A    | 2   | A1 + E7         |
//! | 2 | 3A    | 3   | A2 + E6         |
//! | 3 | 4A    | 4   | A3 + D5         |
//! | 4 | 5A    | 5   | A4 + A4         |
//! | 5 | 6A    | 6   | A2 + A1 + A5    |
//! | 6 | 4B    | 4   | A1 + A7         |
//! | 7 | 2B    | 2   | D8              |
//! | 8 | 3C    | 3   | A8              |
//!
//! Component order follows the per-case conventions of the source tables
//! (which `omega~^k` is which), not the diagram order.

use crate::lattice::{extended_nodes, LatticeVec, MARKS};
use crate::rat::{rat, rat_int, Rat};
use num_traits::Zero;
use std::fmt;
use std::str::FromStr;

/// The McKay label of a node of the extended E8 diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseLabel {
    OneA,
    TwoA,
    ThreeA,
    FourA,
    FiveA,
    SixA,
    FourB,
    TwoB,
    ThreeC,
}

pub const ALL_LABELS: [CaseLabel; 9] = [
    CaseLabel::OneA,
    CaseLabel::TwoA,
    CaseLabel::ThreeA,
    CaseLabel::FourA,
    CaseLabel::FiveA,
    CaseLabel::SixA,
    CaseLabel::FourB,
    CaseLabel::TwoB,
    CaseLabel::ThreeC,
];

impl CaseLabel {
    pub fn node_index(self) -> usize {
        ALL_LABELS.iter().position(|&l| l == self).unwrap()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::OneA => "1A",
            CaseLabel::TwoA => "2A",
            CaseLabel::ThreeA => "3A",
            CaseLabel::FourA => "4A",
            CaseLabel::FiveA => "5A",
            CaseLabel::SixA => "6A",
            CaseLabel::FourB => "4B",
            CaseLabel::TwoB => "2B",
            CaseLabel::ThreeC => "3C",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseLabel {
    type Err = String;

    /// Accepts both McKay labels ("5A", case-insensitive) and node indices
    /// ("0".."8").
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let up = s.trim().to_ascii_uppercase();
        if let Some(l) = ALL_LABELS.iter().find(|l| l.as_str() == up) {
            return Ok(*l);
        }
        if let Ok(i) = up.parse::<usize>() {
            if i < 9 {
                return Ok(ALL_LABELS[i]);
            }
        }
        Err(format!("unknown case label `{s}` (expected 1A..3C or a node index 0..8)"))
    }
}

/// One indecomposable component of `L(i)` with its Coxeter data.
#[derive(Debug, Clone)]
pub struct Component {
    /// Root-system name, e.g. "A4".
    pub name: &'static str,
    /// Indices into the extended node list alpha_0..alpha_8.
    pub nodes: Vec<usize>,
    pub rank: usize,
    /// Coxeter number h.
    pub coxeter: i64,
    /// Central charge of `omega~(Phi)`.
    pub central_charge: Rat,
}

/// One of the nine extended-E8 nodes with its sublattice decomposition.
#[derive(Debug, Clone)]
pub struct CaseDescriptor {
    /// Node index 0..8.
    pub index: usize,
    pub label: CaseLabel,
    /// Index n_i = |E8 / L(i)|.
    pub n: usize,
    pub components: Vec<Component>,
    /// The vector `a` whose pairing classifies cosets; rational coordinates
    /// over alpha_1..alpha_8.
    pub coset_rep: LatticeVec,
    /// Conductor of the cyclotomic field housing the case's sigma-eigenvalues.
    pub conductor: u64,
}

impl CaseDescriptor {
    /// Number of components l; dim B = l + n - 1.
    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn dim_b(&self) -> usize {
        self.components.len() + self.n - 1
    }
}

fn component(name: &'static str, nodes: &[usize]) -> Component {
    let rank = nodes.len();
    let (coxeter, central_charge) = match name.split_at(1) {
        ("A", n) => {
            let n: i64 = n.parse().unwrap();
            (n + 1, rat(2 * n, n + 3))
        }
        ("D", n) => {
            let n: i64 = n.parse().unwrap();
            (2 * n - 2, rat_int(1))
        }
        ("E", "6") => (12, rat(6, 7)),
        ("E", "7") => (18, rat(7, 10)),
        ("E", "8") => (30, rat(1, 2)),
        _ => panic!("unknown root system {name}"),
    };
    assert_eq!(rank, name[1..].parse::<usize>().unwrap());
    Component { name, nodes: nodes.to_vec(), rank, coxeter, central_charge }
}

/// `a` as a rational combination of extended nodes.
fn rep_from_nodes(terms: &[(i64, usize)], denom: i64) -> LatticeVec {
    let nodes = extended_nodes();
    let mut coords = vec![Rat::zero(); 8];
    for &(c, node) in terms {
        for (x, y) in coords.iter_mut().zip(&nodes[node]) {
            *x += rat(c, denom) * rat_int(*y);
        }
    }
    LatticeVec(coords)
}

/// Descriptor for a single case.
pub fn case(label: CaseLabel) -> CaseDescriptor {
    let i = label.node_index();
    let n = MARKS[i];
    let components = match label {
        CaseLabel::OneA => vec![component("E8", &[1, 2, 3, 4, 5, 6, 7, 8])],
        CaseLabel::TwoA => vec![component("A1", &[0]), component("E7", &[2, 3, 4, 5, 6, 7, 8])],
        CaseLabel::ThreeA => vec![component("A2", &[0, 1]), component("E6", &[3, 4, 5, 6, 7, 8])],
        CaseLabel::FourA => vec![component("A3", &[0, 1, 2]), component("D5", &[4, 5, 6, 7, 8])],
        CaseLabel::FiveA => vec![component("A4", &[0, 1, 2, 3]), component("A4", &[5, 6, 7, 8])],
        CaseLabel::SixA => {
            vec![component("A2", &[6, 7]), component("A1", &[8]), component("A5", &[0, 1, 2, 3, 4])]
        }
        CaseLabel::FourB => vec![component("A1", &[7]), component("A7", &[0, 1, 2, 3, 4, 5, 8])],
        CaseLabel::TwoB => vec![component("D8", &[0, 1, 2, 3, 4, 5, 6, 8])],
        CaseLabel::ThreeC => vec![component("A8", &[0, 1, 2, 3, 4, 5, 6, 7])],
    };
    // a = alpha_1                                      if i = 0
    //   = -(alpha_0 + 2 alpha_1 + ... + i alpha_{i-1}) / (i+1)   if 1 <= i <= 5
    //   = -(alpha_0 + ... + 6 alpha_5 + 7 alpha_8) / 8           if i = 6
    //   = (alpha_6 + alpha_8) / 2                                if i = 7
    //   = -(alpha_0 + 2 alpha_1 + ... + 8 alpha_7) / 9           if i = 8
    let coset_rep = match i {
        0 => rep_from_nodes(&[(1, 1)], 1),
        1..=5 => {
            let terms: Vec<(i64, usize)> = (0..i).map(|m| (-((m + 1) as i64), m)).collect();
            rep_from_nodes(&terms, (i + 1) as i64)
        }
        6 => rep_from_nodes(&[(-1, 0), (-2, 1), (-3, 2), (-4, 3), (-5, 4), (-6, 5), (-7, 8)], 8),
        7 => rep_from_nodes(&[(1, 6), (1, 8)], 2),
        8 => rep_from_nodes(
            &[(-1, 0), (-2, 1), (-3, 2), (-4, 3), (-5, 4), (-6, 5), (-7, 6), (-8, 7)],
            9,
        ),
        _ => unreachable!(),
    };
    // sigma eigenvalues live in Q(zeta_n); the 4A/4B solution families also
    // use zeta_8, but that is a property of the solution lists, not of sigma.
    let conductor = n as u64;
    CaseDescriptor { index: i, label, n, components, coset_rep, conductor }
}

pub fn all_cases() -> Vec<CaseDescriptor> {
    ALL_LABELS.iter().map(|&l| case(l)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn marks_and_dims() {
        let dims: Vec<usize> = all_cases().iter().map(CaseDescriptor::dim_b).collect();
        assert_eq!(dims, vec![1, 3, 4, 5, 6, 8, 5, 2, 3]);
        for c in all_cases() {
            assert_eq!(c.n, MARKS[c.index]);
            let rank: usize = c.components.iter().map(|k| k.rank).sum();
            assert_eq!(rank, 8);
        }
    }

    #[test]
    fn parse_labels() {
        assert_eq!("5a".parse::<CaseLabel>().unwrap(), CaseLabel::FiveA);
        assert_eq!("7".parse::<CaseLabel>().unwrap(), CaseLabel::TwoB);
        assert!("9".parse::<CaseLabel>().is_err());
        assert!("XX".parse::<CaseLabel>().is_err());
    }

    #[test]
    fn central_charges_match_source() {
        let c = case(CaseLabel::SixA);
        let ccs: Vec<Rat> = c.components.iter().map(|k| k.central_charge.clone()).collect();
        assert_eq!(ccs, vec![rat(4, 5), rat(1, 2), rat(5, 4)]);
        let c = case(CaseLabel::ThreeC);
        assert_eq!(c.components[0].central_charge, rat(16, 11));
        assert_eq!(c.components[0].coxeter, 9);
    }
}
