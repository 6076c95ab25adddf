//! The abstract commutative algebra `B = span{omega~^1..omega~^l,
//! X^1..X^{n-1}}` of a case: structure constants, invariant form, conformal
//! vectors, the sigma and theta symmetries, and the derived group-theoretic
//! bounds.

use crate::cases::{CaseDescriptor, CaseLabel};
use crate::cyc::Cyc;
use crate::linalg::RowSpace;
use crate::rat::{rat, rat_int, Rat};
use num_traits::Zero;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("value expected to be rational was not")]
    NotRational,
}

/// Basis label of `B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BasisLabel {
    /// `omega~^k`, 1-based.
    OmegaTilde(usize),
    /// `X^j`, 1-based.
    X(usize),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::OmegaTilde(k) => write!(f, "w{k}"),
            BasisLabel::X(j) => write!(f, "x{j}"),
        }
    }
}

/// Structure constants and Gram matrix of `B`.
#[derive(Debug, Clone)]
pub struct GriessTable {
    pub case: CaseDescriptor,
    pub labels: Vec<BasisLabel>,
    /// `products[i][j]` is the coefficient vector of `(b_i)_1 b_j` over the
    /// basis.
    pub products: Vec<Vec<Vec<Rat>>>,
    pub gram: Vec<Vec<Rat>>,
}

impl PartialEq for GriessTable {
    fn eq(&self, other: &Self) -> bool {
        self.case.index == other.case.index
            && self.labels == other.labels
            && self.products == other.products
            && self.gram == other.gram
    }
}

impl GriessTable {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn num_omega(&self) -> usize {
        self.case.num_components()
    }

    /// Index of a label in the basis.
    pub fn index_of(&self, label: BasisLabel) -> usize {
        self.labels.iter().position(|&l| l == label).expect("label not in basis")
    }

    /// Basis element as a [`GriessElement`].
    pub fn basis_element(&self, label: BasisLabel) -> GriessElement {
        let mut coords = vec![Cyc::zero(); self.dim()];
        coords[self.index_of(label)] = Cyc::one();
        GriessElement { coords }
    }

    pub fn element_from_rats(&self, coords: &[Rat]) -> GriessElement {
        assert_eq!(coords.len(), self.dim());
        GriessElement { coords: coords.iter().map(|r| Cyc::from_rat(r.clone())).collect() }
    }

    pub fn zero_element(&self) -> GriessElement {
        GriessElement { coords: vec![Cyc::zero(); self.dim()] }
    }

    /// Bilinear extension of the table product.
    pub fn mul(&self, x: &GriessElement, y: &GriessElement) -> GriessElement {
        let d = self.dim();
        assert_eq!(x.coords.len(), d);
        assert_eq!(y.coords.len(), d);
        let mut out = vec![Cyc::zero(); d];
        for i in 0..d {
            if x.coords[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if y.coords[j].is_zero() {
                    continue;
                }
                let c = x.coords[i].mul(&y.coords[j]);
                for (k, s) in self.products[i][j].iter().enumerate() {
                    if !s.is_zero() {
                        out[k] = out[k].add(&c.scale(s));
                    }
                }
            }
        }
        GriessElement { coords: out }
    }

    /// Bilinear (not hermitian) extension of the form.
    pub fn form(&self, x: &GriessElement, y: &GriessElement) -> Cyc {
        let d = self.dim();
        let mut acc = Cyc::zero();
        for i in 0..d {
            if x.coords[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if !y.coords[j].is_zero() && !self.gram[i][j].is_zero() {
                    acc = acc.add(&x.coords[i].mul(&y.coords[j]).scale(&self.gram[i][j]));
                }
            }
        }
        acc
    }

    /// `w o w - 2w`; `w` is a conformal vector of `B` iff this vanishes.
    pub fn conformal_residual(&self, w: &GriessElement) -> GriessElement {
        let sq = self.mul(w, w);
        let two_w = w.scale_rat(&rat_int(2));
        sq.sub(&two_w)
    }

    pub fn is_conformal_vector(&self, w: &GriessElement) -> bool {
        self.conformal_residual(w).is_zero()
    }

    /// `2 <w, w>`.
    pub fn central_charge(&self, w: &GriessElement) -> Cyc {
        self.form(w, w).scale(&rat_int(2))
    }

    /// The Virasoro element `sum_k omega~^k` of `U`.
    pub fn virasoro_element(&self) -> GriessElement {
        let mut w = self.zero_element();
        for k in 1..=self.num_omega() {
            w.coords[self.index_of(BasisLabel::OmegaTilde(k))] = Cyc::one();
        }
        w
    }

    /// `e^ = sum_k ((h_k + 2)/32) omega~^k + (1/32) sum_j X^j`.
    pub fn ehat(&self) -> GriessElement {
        let mut w = self.zero_element();
        for (k, comp) in self.case.components.iter().enumerate() {
            let idx = self.index_of(BasisLabel::OmegaTilde(k + 1));
            w.coords[idx] = Cyc::from_rat(rat(comp.coxeter + 2, 32));
        }
        for j in 1..self.case.n {
            let idx = self.index_of(BasisLabel::X(j));
            w.coords[idx] = Cyc::from_rat(rat(1, 32));
        }
        w
    }

    /// `f^ = sigma e^`.
    pub fn fhat(&self) -> GriessElement {
        self.sigma_action(&self.ehat())
    }

    /// `sigma` fixes each `omega~^k` and scales `X^j` by `zeta_n^j`.
    pub fn sigma_action(&self, x: &GriessElement) -> GriessElement {
        let n = self.case.n as u64;
        let mut out = x.clone();
        for (idx, label) in self.labels.iter().enumerate() {
            if let BasisLabel::X(j) = label {
                out.coords[idx] = out.coords[idx].mul(&Cyc::root_of_unity(n, *j as i64));
            }
        }
        out
    }

    /// `theta` fixes `omega~^k` and swaps `X^j <-> X^{n-j}`.
    pub fn theta_action(&self, x: &GriessElement) -> GriessElement {
        let n = self.case.n;
        let mut out = x.clone();
        for (idx, label) in self.labels.iter().enumerate() {
            if let BasisLabel::X(j) = label {
                let tgt = self.index_of(BasisLabel::X(n - j));
                out.coords[tgt] = x.coords[idx].clone();
            }
        }
        out
    }

    /// `<e^, f^>`, the McKay value of the node; always rational.
    pub fn mckay_value(&self) -> Result<Rat, AlgebraError> {
        self.form(&self.ehat(), &self.fhat()).try_rat().ok_or(AlgebraError::NotRational)
    }

    /// Pairwise form values of a list of elements.
    pub fn gram_matrix(&self, vs: &[GriessElement]) -> Vec<Vec<Cyc>> {
        vs.iter().map(|x| vs.iter().map(|y| self.form(x, y)).collect()).collect()
    }

    /// Dimension of the smallest mul-closed subspace containing the seeds.
    pub fn generation_span(&self, seeds: &[GriessElement]) -> usize {
        let d = self.dim();
        let mut space: RowSpace<Cyc> = RowSpace::new(d);
        let mut basis: Vec<GriessElement> = Vec::new();
        for s in seeds {
            if space.insert(s.coords.clone()) {
                basis.push(s.clone());
            }
        }
        loop {
            let mut grew = false;
            let cur = basis.clone();
            for (i, x) in cur.iter().enumerate() {
                for y in cur.iter().skip(i) {
                    let p = self.mul(x, y);
                    if space.insert(p.coords.clone()) {
                        basis.push(p);
                        grew = true;
                    }
                }
            }
            if !grew {
                return space.dim();
            }
        }
    }

    /// Exact eigenvalue of `w o v = lambda v`, or `None` when `v` is not an
    /// eigenvector.
    pub fn eigen_check(&self, w: &GriessElement, v: &GriessElement) -> Option<Cyc> {
        assert!(!v.is_zero(), "eigenvector candidate must be nonzero");
        let p = self.mul(w, v);
        let pivot = v.coords.iter().position(|c| !c.is_zero())?;
        let lambda = p.coords[pivot].div(&v.coords[pivot]).ok()?;
        if p == v.scale(&lambda) {
            Some(lambda)
        } else {
            None
        }
    }

    /// The multiplicative order of `sigma^2` restricted to `B`; this is the
    /// order of `tau_e^ tau_f^` acting through the coset symmetry.
    pub fn tau_product_order(&self) -> usize {
        let n = self.case.n;
        (1..=n).find(|m| (2 * m) % n == 0).unwrap_or(1)
    }
}

/// An element of `B` with cyclotomic coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GriessElement {
    pub coords: Vec<Cyc>,
}

impl GriessElement {
    pub fn from_coords(coords: Vec<Cyc>) -> Self {
        GriessElement { coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Cyc::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        GriessElement {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        GriessElement {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &Cyc) -> Self {
        GriessElement { coords: self.coords.iter().map(|x| x.mul(c)).collect() }
    }

    pub fn scale_rat(&self, r: &Rat) -> Self {
        GriessElement { coords: self.coords.iter().map(|x| x.scale(r)).collect() }
    }
}

/// Report of an orthogonal-decomposition check.
#[derive(Debug, Clone)]
pub struct OrthoReport {
    /// Residual-vanishing flag per vector.
    pub conformal: Vec<bool>,
    /// Pairs `(i, j)` with a nonzero product or form value.
    pub failed_pairs: Vec<(usize, usize)>,
    /// Whether the sum equals the Virasoro element of `U`.
    pub sum_is_virasoro: bool,
    pub central_charges: Vec<Cyc>,
}

impl OrthoReport {
    pub fn ok(&self) -> bool {
        self.conformal.iter().all(|&b| b) && self.failed_pairs.is_empty() && self.sum_is_virasoro
    }
}

/// Verify that `vs` are mutually orthogonal conformal vectors summing to the
/// Virasoro element, and return their central charges.
pub fn orthogonal_decomposition_check(table: &GriessTable, vs: &[GriessElement]) -> OrthoReport {
    let conformal: Vec<bool> = vs.iter().map(|v| table.is_conformal_vector(v)).collect();
    let mut failed_pairs = Vec::new();
    for i in 0..vs.len() {
        for j in (i + 1)..vs.len() {
            let prod_zero = table.mul(&vs[i], &vs[j]).is_zero();
            let form_zero = table.form(&vs[i], &vs[j]).is_zero();
            if !(prod_zero && form_zero) {
                failed_pairs.push((i, j));
            }
        }
    }
    let sum = vs.iter().fold(table.zero_element(), |acc, v| acc.add(v));
    let sum_is_virasoro = sum == table.virasoro_element();
    let central_charges = vs.iter().map(|v| table.central_charge(v)).collect();
    OrthoReport { conformal, failed_pairs, sum_is_virasoro, central_charges }
}

/// Full stabilizer of a Gram matrix inside the symmetric group on its
/// indices, found by exhaustive search (matrix size <= 8).
#[derive(Debug, Clone)]
pub struct StabilizerReport {
    pub order: usize,
    /// All stabilizing permutations, as images `perm[i]`.
    pub elements: Vec<Vec<usize>>,
    /// A small generating set extracted greedily.
    pub generators: Vec<Vec<usize>>,
}

pub fn gram_stabilizer(gram: &[Vec<Cyc>]) -> StabilizerReport {
    let d = gram.len();
    assert!(d <= 8, "exhaustive stabilizer limited to size 8");
    let mut elements = Vec::new();
    let mut perm: Vec<usize> = (0..d).collect();
    permute(&mut perm, 0, &mut |p: &[usize]| {
        let ok = (0..d).all(|i| (0..d).all(|j| gram[p[i]][p[j]] == gram[i][j]));
        if ok {
            elements.push(p.to_vec());
        }
    });
    elements.sort();
    let generators = extract_generators(&elements, d);
    StabilizerReport { order: elements.len(), elements, generators }
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

fn extract_generators(elements: &[Vec<usize>], d: usize) -> Vec<Vec<usize>> {
    use std::collections::BTreeSet;
    let identity: Vec<usize> = (0..d).collect();
    let mut gens: Vec<Vec<usize>> = Vec::new();
    let mut closure: BTreeSet<Vec<usize>> = BTreeSet::new();
    closure.insert(identity);
    for e in elements {
        if closure.contains(e) {
            continue;
        }
        gens.push(e.clone());
        loop {
            let mut new: Vec<Vec<usize>> = Vec::new();
            for a in &closure {
                for g in &gens {
                    let prod: Vec<usize> = (0..d).map(|i| a[g[i]]).collect();
                    if !closure.contains(&prod) {
                        new.push(prod);
                    }
                }
            }
            if new.is_empty() {
                break;
            }
            closure.extend(new);
        }
        if closure.len() == elements.len() {
            break;
        }
    }
    gens
}

/// Conductor housing the sigma eigenvalues of a case.
pub fn case_conductor(label: CaseLabel) -> u64 {
    crate::cases::case(label).conductor
}

/// The coefficient equations of `conformal_residual(w) = 0` in symbolic
/// coordinates over the basis, each normalized to its primitive integer
/// form (which is exactly the published normalization), together with the
/// central-charge quadratic `2 <w, w>`.
pub fn polynomial_system(table: &GriessTable) -> crate::poly::PolySystem {
    use crate::poly::{default_var_names, Poly, PolySystem};
    let d = table.dim();
    let mut equations = Vec::with_capacity(d);
    for m in 0..d {
        let mut p = Poly::new();
        for j in 0..d {
            for k in j..d {
                let c = &table.products[j][k][m];
                if !c.is_zero() {
                    let factor = if j == k { rat_int(1) } else { rat_int(2) };
                    p.add_term(vec![j, k], c * factor);
                }
            }
        }
        p.add_term(vec![m], rat_int(-2));
        equations.push(p.primitive());
    }
    let mut cc = Poly::new();
    for j in 0..d {
        for k in 0..d {
            if !table.gram[j][k].is_zero() {
                cc.add_term(vec![j, k], &table.gram[j][k] * rat_int(2));
            }
        }
    }
    PolySystem { vars: default_var_names(d), equations, central_charge: cc }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::refdata::builtin_griess_table;

    fn table(label: CaseLabel) -> GriessTable {
        builtin_griess_table(label)
    }

    #[test]
    fn omega_products_and_zero() {
        let t = table(CaseLabel::TwoA);
        let w1 = t.basis_element(BasisLabel::OmegaTilde(1));
        let w2 = t.basis_element(BasisLabel::OmegaTilde(2));
        assert!(t.mul(&w1, &w2).is_zero());
        assert_eq!(t.mul(&w1, &w1), w1.scale_rat(&rat_int(2)));
        assert!(t.mul(&t.zero_element(), &w2).is_zero());
    }

    #[test]
    fn two_b_x_square() {
        let t = table(CaseLabel::TwoB);
        let x = t.basis_element(BasisLabel::X(1));
        let p = t.mul(&x, &x);
        let want = t.basis_element(BasisLabel::OmegaTilde(1)).scale_rat(&rat_int(512));
        assert_eq!(p, want);
    }

    #[test]
    fn conformal_residual_examples() {
        // 2A: (1/8, 5/8, 1/32)
        let t = table(CaseLabel::TwoA);
        let w = t.element_from_rats(&[rat(1, 8), rat(5, 8), rat(1, 32)]);
        assert!(t.conformal_residual(&w).is_zero());
        assert_eq!(t.central_charge(&w).try_rat(), Some(rat(1, 2)));
        // 3C: (11/32, 1/32, 1/32)
        let t = table(CaseLabel::ThreeC);
        let w = t.element_from_rats(&[rat(11, 32), rat(1, 32), rat(1, 32)]);
        assert!(t.conformal_residual(&w).is_zero());
        assert_eq!(t.central_charge(&w).try_rat(), Some(rat(1, 2)));
        // zero is conformal with zero charge
        assert!(t.conformal_residual(&t.zero_element()).is_zero());
        assert!(t.central_charge(&t.zero_element()).is_zero());
        // 5A Virasoro element has central charge 16/7
        let t = table(CaseLabel::FiveA);
        let w = t.virasoro_element();
        assert!(t.conformal_residual(&w).is_zero());
        assert_eq!(t.central_charge(&w).try_rat(), Some(rat(16, 7)));
    }

    #[test]
    fn sigma_theta_dihedral_relation() {
        for label in crate::cases::ALL_LABELS {
            let t = table(label);
            let n = t.case.n;
            for l in &t.labels {
                let b = t.basis_element(*l);
                let mut s = b.clone();
                for _ in 0..n {
                    s = t.sigma_action(&s);
                }
                assert_eq!(s, b);
                // theta sigma theta = sigma^{-1}
                let lhs = t.theta_action(&t.sigma_action(&t.theta_action(&b)));
                let mut rhs = b.clone();
                for _ in 0..n.saturating_sub(1) {
                    rhs = t.sigma_action(&rhs);
                }
                assert_eq!(lhs, rhs, "case {label}");
            }
        }
    }

    #[test]
    fn tau_orders() {
        let want = [1usize, 1, 3, 2, 5, 3, 2, 1, 3];
        for (label, w) in crate::cases::ALL_LABELS.iter().zip(want) {
            assert_eq!(table(*label).tau_product_order(), w, "case {label}");
        }
    }

    #[test]
    fn five_a_fhat_coefficients() {
        let t = table(CaseLabel::FiveA);
        let f = t.fhat();
        for j in 1..=4usize {
            let idx = t.index_of(BasisLabel::X(j));
            let want = Cyc::root_of_unity(5, j as i64).scale(&rat(1, 32));
            assert_eq!(f.coords[idx], want);
        }
    }

    #[test]
    fn stabilizer_of_constant_gram_is_full_symmetric_group() {
        let g: Vec<Vec<Cyc>> = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| {
                        if i == j {
                            Cyc::from_rat(rat(1, 4))
                        } else {
                            Cyc::from_rat(rat(3, 512))
                        }
                    })
                    .collect()
            })
            .collect();
        let s = gram_stabilizer(&g);
        assert_eq!(s.order, 24);
        assert!(!s.generators.is_empty());
    }
}
