//! Central arrangements as finite covector sets, and Coxeter root systems
//! realized exactly: crystallographic families in rational coordinates,
//! dihedral and icosahedral families over the real field Q(2cos(pi/m)).

use std::collections::HashSet;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::{LinSolve, Matrix};
use crate::scalar::{ExtField, Scalar, TwoCos};

/// A central arrangement: covectors in coordinates with respect to a fixed
/// basis of V*, pairwise non-proportional and spanning.
#[derive(Clone, Debug)]
pub struct Arrangement {
    rank: usize,
    covectors: Vec<Vec<Scalar>>,
    labels: Vec<String>,
}

impl Arrangement {
    pub fn new(rank: usize, covectors: Vec<Vec<Scalar>>, labels: Vec<String>) -> Result<Arrangement> {
        assert_eq!(covectors.len(), labels.len(), "one label per covector");
        for (i, v) in covectors.iter().enumerate() {
            assert_eq!(v.len(), rank, "covector has wrong dimension");
            if v.iter().all(|c| c.is_zero()) {
                return Err(Error::ZeroCovector(i));
            }
        }
        for i in 0..covectors.len() {
            for j in (i + 1)..covectors.len() {
                if proportional(&covectors[i], &covectors[j]) {
                    return Err(Error::ProportionalCovectors(i, j));
                }
            }
        }
        let m = Matrix::from_rows(covectors.clone());
        let found = m.rank();
        if found != rank {
            return Err(Error::CovectorsDoNotSpan { found, expected: rank });
        }
        Ok(Arrangement { rank, covectors, labels })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn size(&self) -> usize {
        self.covectors.len()
    }

    pub fn covector(&self, i: usize) -> &[Scalar] {
        &self.covectors[i]
    }

    pub fn covectors(&self) -> &[Vec<Scalar>] {
        &self.covectors
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Dual pairing alpha(z) for z in V-coordinates.
    pub fn eval(&self, alpha: usize, z: &[Scalar]) -> Scalar {
        dot(&self.covectors[alpha], z)
    }

    /// Index of a covector equal to `v` up to a scalar, if present.
    pub fn find_proportional(&self, v: &[Scalar]) -> Option<usize> {
        self.covectors.iter().position(|w| proportional(w, v))
    }

    /// Index of a covector exactly equal to `v`.
    pub fn find_exact(&self, v: &[Scalar]) -> Option<usize> {
        self.covectors.iter().position(|w| w.as_slice() == v)
    }

    /// Coefficients of covector `alpha` over the covectors indexed by
    /// `basis`; errors if those do not form a basis of V*.
    pub fn coefficients_over(&self, alpha: usize, basis: &[usize]) -> Result<Vec<Scalar>> {
        self.coefficients_of(&self.covectors[alpha], basis)
    }

    pub fn coefficients_of(&self, v: &[Scalar], basis: &[usize]) -> Result<Vec<Scalar>> {
        if basis.len() != self.rank {
            return Err(Error::NotABasis);
        }
        let cols: Vec<Vec<Scalar>> = basis.iter().map(|&b| self.covectors[b].clone()).collect();
        let m = Matrix::from_rows(cols).transpose();
        match m.solve(v) {
            LinSolve::Unique(x) => Ok(x),
            _ => Err(Error::NotABasis),
        }
    }

    /// supp_B(alpha): indices into `basis` with nonzero coefficient.
    pub fn support(&self, alpha: usize, basis: &[usize]) -> Result<Vec<usize>> {
        let coeffs = self.coefficients_over(alpha, basis)?;
        Ok((0..basis.len()).filter(|&k| !coeffs[k].is_zero()).collect())
    }
}

fn proportional(u: &[Scalar], v: &[Scalar]) -> bool {
    for i in 0..u.len() {
        for j in (i + 1)..u.len() {
            let m = u[i].mul(&v[j]).sub(&u[j].mul(&v[i]));
            if !m.is_zero() {
                return false;
            }
        }
    }
    true
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = acc.add(&x.mul(y));
        }
    }
    acc
}

/// The five-line counterexample arrangement: a basis plus two of its
/// pairwise sums, giving exactly two triple points in the projective plane.
pub fn counterexample_arrangement() -> Arrangement {
    let z = Scalar::zero;
    let o = Scalar::one;
    Arrangement::new(
        3,
        vec![
            vec![o(), z(), z()],
            vec![z(), o(), z()],
            vec![z(), z(), o()],
            vec![o(), o(), z()],
            vec![o(), z(), o()],
        ],
        ["a1", "a2", "a3", "a1+a2", "a1+a3"].iter().map(|s| s.to_string()).collect(),
    )
    .expect("counterexample arrangement is valid")
}

// ---------------------------------------------------------------------------
// Coxeter root systems.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    A(usize),
    B(usize),
    D(usize),
    I2(u32),
    H3,
}

impl Family {
    pub fn name(&self) -> String {
        match self {
            Family::A(n) => format!("A{n}"),
            Family::B(n) => format!("B{n}"),
            Family::D(n) => format!("D{n}"),
            Family::I2(m) => format!("I2({m})"),
            Family::H3 => "H3".to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterGraph {
    pub vertices: usize,
    /// (i, j, m) with i < j over simple-root positions; edge present iff the
    /// simple roots are non-orthogonal, labeled by the angle pi(1 - 1/m).
    pub edges: Vec<(usize, usize, u32)>,
}

impl CoxeterGraph {
    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        let (a, b) = (i.min(j), i.max(j));
        self.edges.iter().any(|&(x, y, _)| (x, y) == (a, b))
    }
}

/// A Coxeter root system: the arrangement of positive roots together with the
/// simple roots, the Gram matrix of the inner product in covector
/// coordinates, and the Coxeter graph.
#[derive(Clone, Debug)]
pub struct RootSystem {
    family: Family,
    arr: Arrangement,
    simple: Vec<usize>,
    gram: Matrix<Scalar>,
    graph: CoxeterGraph,
    ext: Option<Arc<ExtField>>,
    /// coefficients of each positive root over the simple roots
    simple_coeffs: Vec<Vec<Scalar>>,
}

impl RootSystem {
    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arr
    }

    pub fn rank(&self) -> usize {
        self.arr.rank()
    }

    pub fn simple(&self) -> &[usize] {
        &self.simple
    }

    pub fn gram(&self) -> &Matrix<Scalar> {
        &self.gram
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn ext(&self) -> Option<&Arc<ExtField>> {
        self.ext.as_ref()
    }

    /// Coefficients of positive root `i` over the simple roots.
    pub fn simple_coeffs(&self, i: usize) -> &[Scalar] {
        &self.simple_coeffs[i]
    }

    /// Position of covector index `i` among the simple roots, if simple.
    pub fn simple_position(&self, i: usize) -> Option<usize> {
        self.simple.iter().position(|&s| s == i)
    }

    pub fn inner(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        dot(&self.gram.apply(b), a)
    }

    /// Orthogonal reflection s_alpha(v) = v - 2 (alpha, v)/(alpha, alpha) alpha.
    pub fn reflect(&self, alpha: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let num = self.inner(alpha, v);
        let den = self.inner(alpha, alpha);
        let c = Scalar::from_int(2).mul(&num.div(&den));
        v.iter().zip(alpha).map(|(x, a)| x.sub(&c.mul(a))).collect()
    }

    pub fn reflect_root(&self, alpha_idx: usize, v: &[Scalar]) -> Vec<Scalar> {
        self.reflect(self.arr.covector(alpha_idx), v)
    }

    pub fn reflection_matrix(&self, alpha_idx: usize) -> Matrix<Scalar> {
        let n = self.rank();
        let mut m = Matrix::zero(n, n);
        for c in 0..n {
            let mut e = vec![Scalar::zero(); n];
            e[c] = Scalar::one();
            let img = self.reflect_root(alpha_idx, &e);
            for r in 0..n {
                *m.get_mut(r, c) = img[r].clone();
            }
        }
        m
    }

    /// All 2|Phi+| roots (positives and their negatives).
    pub fn all_roots(&self) -> Vec<Vec<Scalar>> {
        let mut out = Vec::with_capacity(2 * self.arr.size());
        for v in self.arr.covectors() {
            out.push(v.clone());
            out.push(v.iter().map(|c| c.neg()).collect());
        }
        out
    }

    /// All group elements, by breadth-first closure of the simple reflection
    /// matrices under multiplication. Guarded to rank <= 4.
    pub fn group_elements(&self) -> Result<Vec<Matrix<Scalar>>> {
        if self.rank() > 4 {
            return Err(Error::RankTooLarge(self.rank()));
        }
        let gens: Vec<Matrix<Scalar>> = self
            .simple
            .iter()
            .map(|&s| self.reflection_matrix(s))
            .collect();
        let key = |m: &Matrix<Scalar>| -> Vec<Scalar> { m.row_vecs().into_iter().flatten().collect() };
        let mut seen: HashSet<Vec<Scalar>> = HashSet::new();
        let mut out = Vec::new();
        let mut queue = vec![Matrix::identity(self.rank())];
        seen.insert(key(&queue[0]));
        while let Some(g) = queue.pop() {
            out.push(g.clone());
            for gen in &gens {
                let h = g.matmul(gen);
                if seen.insert(key(&h)) {
                    queue.push(h);
                }
            }
            if out.len() > 20_000 {
                return Err(Error::SizeGuard("group closure exceeded 20000 elements".into()));
            }
        }
        Ok(out)
    }

    pub fn group_order(&self) -> Result<u64> {
        Ok(self.group_elements()?.len() as u64)
    }

    /// theta for a connected set of simple roots: order the subset so every
    /// prefix is connected in the Coxeter graph, then apply the reflections
    /// s_r ... s_2 to the first root. The result lies in the span of the
    /// subset with strictly positive coefficients on all of it.
    pub fn theta_for(&self, subset: &[usize]) -> Result<usize> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut positions = Vec::with_capacity(subset.len());
        for &i in subset {
            let Some(p) = self.simple_position(i) else {
                return Err(Error::InvalidRootSystem(format!(
                    "covector {} is not a simple root",
                    self.arr.label(i)
                )));
            };
            positions.push(p);
        }
        positions.sort_unstable();
        // greedy ordering: lowest simple position first, then repeatedly the
        // lowest remaining position adjacent to the prefix
        let mut order = vec![positions[0]];
        let mut remaining: Vec<usize> = positions[1..].to_vec();
        while !remaining.is_empty() {
            let next = remaining
                .iter()
                .position(|&p| order.iter().any(|&q| self.graph.are_adjacent(p, q)))
                .ok_or(Error::DisconnectedSubset)?;
            order.push(remaining.remove(next));
        }
        let mut v = self.arr.covector(self.simple[order[0]]).to_vec();
        for &p in &order[1..] {
            v = self.reflect_root(self.simple[p], &v);
        }
        self.arr
            .find_exact(&v)
            .ok_or_else(|| Error::InvalidRootSystem("theta is not a positive root".into()))
    }
}

/// Builds the standard exact realization of a finite Coxeter root system.
///
/// A_n, B_n, D_n are rational: B_n and D_n in e-coordinates with the standard
/// inner product, A_n in simple-root coordinates with the path Gram matrix.
/// I2(m) for m in {3,4,6} uses the rational crystallographic Gram matrices;
/// all other dihedral orders and H3 take coefficients in Q(2cos(pi/m)).
pub fn build_root_system(family: Family) -> Result<RootSystem> {
    match family {
        Family::A(n) => {
            if n < 1 {
                return Err(Error::InvalidRootSystem("A requires rank >= 1".into()));
            }
            let mut gram = Matrix::zero(n, n);
            for i in 0..n {
                *gram.get_mut(i, i) = Scalar::from_int(2);
                if i + 1 < n {
                    *gram.get_mut(i, i + 1) = Scalar::from_int(-1);
                    *gram.get_mut(i + 1, i) = Scalar::from_int(-1);
                }
            }
            let edges = (0..n.saturating_sub(1)).map(|i| (i, i + 1, 3)).collect();
            finish_simple_coordinate_system(Family::A(n), n, gram, edges, None, "a")
        }
        Family::B(n) => {
            if n < 2 {
                return Err(Error::InvalidRootSystem("B requires rank >= 2".into()));
            }
            let mut simples = Vec::new();
            for i in 0..n - 1 {
                let mut v = vec![Scalar::zero(); n];
                v[i] = Scalar::one();
                v[i + 1] = Scalar::from_int(-1);
                simples.push(v);
            }
            let mut v = vec![Scalar::zero(); n];
            v[n - 1] = Scalar::one();
            simples.push(v);
            let mut edges: Vec<(usize, usize, u32)> = (0..n - 2).map(|i| (i, i + 1, 3)).collect();
            edges.push((n - 2, n - 1, 4));
            finish_euclidean_system(Family::B(n), n, simples, edges)
        }
        Family::D(n) => {
            if n < 3 {
                return Err(Error::InvalidRootSystem("D requires rank >= 3".into()));
            }
            let mut simples = Vec::new();
            for i in 0..n - 1 {
                let mut v = vec![Scalar::zero(); n];
                v[i] = Scalar::one();
                v[i + 1] = Scalar::from_int(-1);
                simples.push(v);
            }
            let mut v = vec![Scalar::zero(); n];
            v[n - 2] = Scalar::one();
            v[n - 1] = Scalar::one();
            simples.push(v);
            let mut edges: Vec<(usize, usize, u32)> = (0..n - 2).map(|i| (i, i + 1, 3)).collect();
            edges.push((n - 3, n - 1, 3));
            finish_euclidean_system(Family::D(n), n, simples, edges)
        }
        Family::I2(m) => {
            if m < 3 {
                return Err(Error::InvalidRootSystem("I2 requires m >= 3".into()));
            }
            let (gram, ext) = match m {
                3 => (gram2(2, -1, 2), None),
                4 => (gram2(2, -1, 1), None),
                6 => (gram2(2, -3, 6), None),
                _ => match ExtField::two_cos_pi_over(m) {
                    TwoCos::Rational(_) => unreachable!("nonrational for m not in {{3,4,6}}"),
                    TwoCos::Algebraic(fld) => {
                        let g = Scalar::generator(&fld);
                        let two = Scalar::from_int(2);
                        let mut gm = Matrix::zero(2, 2);
                        *gm.get_mut(0, 0) = two.clone();
                        *gm.get_mut(1, 1) = two;
                        *gm.get_mut(0, 1) = g.neg();
                        *gm.get_mut(1, 0) = g.neg();
                        (gm, Some(fld))
                    }
                },
            };
            finish_simple_coordinate_system(Family::I2(m), 2, gram, vec![(0, 1, m)], ext, "a")
        }
        Family::H3 => {
            let TwoCos::Algebraic(fld) = ExtField::two_cos_pi_over(5) else {
                unreachable!()
            };
            let phi = Scalar::generator(&fld);
            let mut gram = Matrix::zero(3, 3);
            for i in 0..3 {
                *gram.get_mut(i, i) = Scalar::from_int(2);
            }
            *gram.get_mut(0, 1) = phi.neg();
            *gram.get_mut(1, 0) = phi.neg();
            *gram.get_mut(1, 2) = Scalar::from_int(-1);
            *gram.get_mut(2, 1) = Scalar::from_int(-1);
            finish_simple_coordinate_system(Family::H3, 3, gram, vec![(0, 1, 5), (1, 2, 3)], Some(fld), "a")
        }
    }
}

fn gram2(d0: i64, off: i64, d1: i64) -> Matrix<Scalar> {
    let mut m = Matrix::zero(2, 2);
    *m.get_mut(0, 0) = Scalar::from_int(d0);
    *m.get_mut(0, 1) = Scalar::from_int(off);
    *m.get_mut(1, 0) = Scalar::from_int(off);
    *m.get_mut(1, 1) = Scalar::from_int(d1);
    m
}

fn finish_simple_coordinate_system(
    family: Family,
    rank: usize,
    gram: Matrix<Scalar>,
    edges: Vec<(usize, usize, u32)>,
    ext: Option<Arc<ExtField>>,
    symbol: &str,
) -> Result<RootSystem> {
    let simples: Vec<Vec<Scalar>> = (0..rank)
        .map(|i| {
            let mut v = vec![Scalar::zero(); rank];
            v[i] = Scalar::one();
            v
        })
        .collect();
    build_from_simples(family, rank, simples, gram, edges, ext, symbol)
}

fn finish_euclidean_system(
    family: Family,
    rank: usize,
    simples: Vec<Vec<Scalar>>,
    edges: Vec<(usize, usize, u32)>,
) -> Result<RootSystem> {
    build_from_simples(family, rank, simples, Matrix::identity(rank), edges, None, "e")
}

fn build_from_simples(
    family: Family,
    rank: usize,
    simples: Vec<Vec<Scalar>>,
    gram: Matrix<Scalar>,
    edges: Vec<(usize, usize, u32)>,
    ext: Option<Arc<ExtField>>,
    symbol: &str,
) -> Result<RootSystem> {
    // close the simples under simple reflections
    let reflect = |alpha: &[Scalar], v: &[Scalar]| -> Vec<Scalar> {
        let num = dot(&gram.apply(v), alpha);
        let den = dot(&gram.apply(alpha), alpha);
        let c = Scalar::from_int(2).mul(&num.div(&den));
        v.iter().zip(alpha).map(|(x, a)| x.sub(&c.mul(a))).collect()
    };
    let mut seen: HashSet<Vec<Scalar>> = simples.iter().cloned().collect();
    let mut queue: Vec<Vec<Scalar>> = simples.clone();
    while let Some(v) = queue.pop() {
        for s in &simples {
            let w = reflect(s, &v);
            if seen.insert(w.clone()) {
                queue.push(w);
            }
        }
        if seen.len() > 2_000 {
            return Err(Error::SizeGuard("root closure exceeded 2000 roots".into()));
        }
    }
    // keep the positive roots: nonnegative coefficients over the simples
    let simple_matrix = Matrix::from_rows(simples.clone()).transpose();
    let mut positives: Vec<(Vec<Scalar>, Vec<Scalar>)> = Vec::new();
    for root in seen {
        let LinSolve::Unique(coeffs) = simple_matrix.solve(&root) else {
            return Err(Error::InvalidRootSystem("simple roots do not form a basis".into()));
        };
        if coeffs.iter().all(|c| c.sign() >= 0) {
            positives.push((root, coeffs));
        }
    }
    positives.sort_by(|a, b| a.0.cmp(&b.0));
    let labels: Vec<String> = positives.iter().map(|(v, _)| label_for(v, symbol)).collect();
    let covectors: Vec<Vec<Scalar>> = positives.iter().map(|(v, _)| v.clone()).collect();
    let simple_coeffs: Vec<Vec<Scalar>> = positives.iter().map(|(_, c)| c.clone()).collect();
    let arr = Arrangement::new(rank, covectors, labels)?;
    let simple: Vec<usize> = simples
        .iter()
        .map(|s| arr.find_exact(s).expect("simple roots are positive"))
        .collect();
    Ok(RootSystem {
        family,
        arr,
        simple,
        gram,
        graph: CoxeterGraph { vertices: rank, edges },
        ext,
        simple_coeffs,
    })
}

fn label_for(v: &[Scalar], symbol: &str) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.sign() < 0;
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        if !mag.is_one() {
            let _ = write!(out, "{mag}*");
        }
        let _ = write!(out, "{}{}", symbol, i + 1);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    /// Independent oracle: close the positive roots under reflection in all
    /// roots (not only simples) and check nothing new appears.
    fn assert_reflection_closed(rs: &RootSystem) {
        let all: HashSet<Vec<Scalar>> = rs.all_roots().into_iter().collect();
        for alpha in rs.arrangement().covectors() {
            for v in &all {
                let w = rs.reflect(alpha, v);
                assert!(all.contains(&w), "reflection must permute the roots");
            }
        }
    }

    #[test]
    fn a2_three_positive_roots() {
        let rs = build_root_system(Family::A(2)).unwrap();
        assert_eq!(rs.arrangement().size(), 3);
        assert_reflection_closed(&rs);
        let labels: Vec<_> = rs.arrangement().labels().to_vec();
        assert!(labels.contains(&"a1".to_string()));
        assert!(labels.contains(&"a1+a2".to_string()));
    }

    #[test]
    fn b2_four_positive_roots() {
        let rs = build_root_system(Family::B(2)).unwrap();
        assert_eq!(rs.arrangement().size(), 4);
        assert_reflection_closed(&rs);
        let labels: HashSet<_> = rs.arrangement().labels().iter().cloned().collect();
        let expect: HashSet<String> = ["e1", "e2", "e1-e2", "e1+e2"].iter().map(|s| s.to_string()).collect();
        assert_eq!(labels, expect);
    }

    #[test]
    fn h3_fifteen_positive_roots_and_group_order() {
        let rs = build_root_system(Family::H3).unwrap();
        assert_eq!(rs.arrangement().size(), 15);
        assert_reflection_closed(&rs);
        assert_eq!(rs.group_order().unwrap(), 120);
    }

    #[test]
    fn group_orders_by_bfs() {
        assert_eq!(build_root_system(Family::A(3)).unwrap().group_order().unwrap(), 24);
        assert_eq!(build_root_system(Family::B(3)).unwrap().group_order().unwrap(), 48);
        assert_eq!(build_root_system(Family::D(4)).unwrap().group_order().unwrap(), 192);
        assert_eq!(build_root_system(Family::I2(7)).unwrap().group_order().unwrap(), 14);
        assert_eq!(build_root_system(Family::I2(5)).unwrap().group_order().unwrap(), 10);
    }

    #[test]
    fn rank_guard() {
        let rs = build_root_system(Family::B(5)).unwrap();
        assert!(matches!(rs.group_order(), Err(Error::RankTooLarge(5))));
    }

    #[test]
    fn dihedral_sizes() {
        for m in [3u32, 4, 5, 6, 7, 8, 12] {
            let rs = build_root_system(Family::I2(m)).unwrap();
            assert_eq!(rs.arrangement().size(), m as usize, "I2({m})");
            assert_reflection_closed(&rs);
            assert_eq!(rs.group_order().unwrap(), 2 * m as u64);
        }
    }

    #[test]
    fn d4_twelve_positive_roots() {
        let rs = build_root_system(Family::D(4)).unwrap();
        assert_eq!(rs.arrangement().size(), 12);
        assert_reflection_closed(&rs);
    }

    #[test]
    fn positive_roots_have_nonnegative_simple_coefficients() {
        for fam in [Family::A(3), Family::B(3), Family::D(4), Family::I2(5), Family::H3] {
            let rs = build_root_system(fam).unwrap();
            for i in 0..rs.arrangement().size() {
                assert!(rs.simple_coeffs(i).iter().all(|c| c.sign() >= 0));
            }
        }
    }

    #[test]
    fn group_contains_exactly_one_reflection_per_hyperplane() {
        for fam in [Family::A(3), Family::B(3)] {
            let rs = build_root_system(fam).unwrap();
            let elements = rs.group_elements().unwrap();
            let n = rs.rank();
            let id: Matrix<Scalar> = Matrix::identity(n);
            let reflections = elements
                .iter()
                .filter(|g| {
                    if **g == id || g.matmul(g) != id {
                        return false;
                    }
                    let mut diff = Matrix::zero(n, n);
                    for r in 0..n {
                        for c in 0..n {
                            *diff.get_mut(r, c) = g.get(r, c).sub(id.get(r, c));
                        }
                    }
                    diff.rank() == 1
                })
                .count();
            assert_eq!(reflections, rs.arrangement().size());
        }
    }

    #[test]
    fn reflect_own_root_negates() {
        let rs = build_root_system(Family::A(2)).unwrap();
        let a1 = rs.simple()[0];
        let v = rs.arrangement().covector(a1).to_vec();
        let w = rs.reflect_root(a1, &v);
        assert_eq!(w, v.iter().map(|c| c.neg()).collect::<Vec<_>>());
    }

    #[test]
    fn reflect_a2_gram_formula() {
        let rs = build_root_system(Family::A(2)).unwrap();
        let a1 = rs.arrangement().covector(rs.simple()[0]).to_vec();
        let w = rs.reflect_root(rs.simple()[1], &a1);
        // s_{a2}(a1) = a1 + a2
        assert_eq!(rs.arrangement().find_exact(&w), rs.arrangement().find_exact(&[s(1), s(1)]));
    }

    #[test]
    fn reflect_fixes_orthogonal_vectors() {
        let rs = build_root_system(Family::B(2)).unwrap();
        // e1 is fixed by the reflection in e2
        let e2 = rs.arrangement().find_exact(&[s(0), s(1)]).unwrap();
        let v = vec![s(1), s(0)];
        assert_eq!(rs.reflect_root(e2, &v), v);
    }

    #[test]
    fn theta_a2_is_highest_root() {
        let rs = build_root_system(Family::A(2)).unwrap();
        let idx = rs.theta_for(&[rs.simple()[0], rs.simple()[1]]).unwrap();
        assert_eq!(rs.arrangement().covector(idx), &[s(1), s(1)]);
    }

    #[test]
    fn theta_b2() {
        let rs = build_root_system(Family::B(2)).unwrap();
        let idx = rs.theta_for(&[rs.simple()[0], rs.simple()[1]]).unwrap();
        // s_{a2}(a1) = e1 + e2 = a1 + 2 a2
        assert_eq!(rs.arrangement().covector(idx), &[s(1), s(1)]);
        let coeffs = rs.simple_coeffs(idx).to_vec();
        assert_eq!(coeffs, vec![s(1), s(2)]);
    }

    #[test]
    fn theta_singleton() {
        let rs = build_root_system(Family::B(3)).unwrap();
        for &sr in rs.simple() {
            assert_eq!(rs.theta_for(&[sr]).unwrap(), sr);
        }
    }

    #[test]
    fn theta_positive_coefficients() {
        let rs = build_root_system(Family::H3).unwrap();
        let subsets: Vec<Vec<usize>> = vec![
            vec![rs.simple()[0], rs.simple()[1]],
            vec![rs.simple()[1], rs.simple()[2]],
            rs.simple().to_vec(),
        ];
        for sub in subsets {
            let idx = rs.theta_for(&sub).unwrap();
            let coeffs = rs.simple_coeffs(idx);
            for &m in &sub {
                let p = rs.simple_position(m).unwrap();
                assert!(coeffs[p].sign() > 0, "theta must have positive support");
            }
        }
    }

    #[test]
    fn theta_disconnected_subset_rejected() {
        let rs = build_root_system(Family::A(3)).unwrap();
        let err = rs.theta_for(&[rs.simple()[0], rs.simple()[2]]);
        assert!(matches!(err, Err(Error::DisconnectedSubset)));
    }

    #[test]
    fn support_examples() {
        let b2 = build_root_system(Family::B(2)).unwrap();
        let basis = b2.simple().to_vec();
        let long = b2.arrangement().find_exact(&[s(1), s(1)]).unwrap();
        let supp = b2.arrangement().support(long, &basis).unwrap();
        assert_eq!(supp, vec![0, 1]);
        let coeffs = b2.arrangement().coefficients_over(long, &basis).unwrap();
        assert_eq!(coeffs, vec![s(1), s(2)]);

        let a2 = build_root_system(Family::A(2)).unwrap();
        let supp = a2.arrangement().support(a2.simple()[0], &a2.simple().to_vec()).unwrap();
        assert_eq!(supp, vec![0]);

        let cx = counterexample_arrangement();
        let supp = cx.support(4, &[0, 1, 2]).unwrap();
        assert_eq!(supp, vec![0, 2]);
    }

    #[test]
    fn from_covectors_validation() {
        let err = Arrangement::new(
            2,
            vec![vec![s(1), s(0)], vec![s(2), s(0)]],
            vec!["a".into(), "b".into()],
        );
        assert!(matches!(err, Err(Error::ProportionalCovectors(0, 1))));

        let err = Arrangement::new(
            3,
            vec![vec![s(1), s(0), s(0)], vec![s(0), s(1), s(0)]],
            vec!["a".into(), "b".into()],
        );
        assert!(matches!(err, Err(Error::CovectorsDoNotSpan { found: 2, expected: 3 })));

        let err = Arrangement::new(
            2,
            vec![vec![s(0), s(0)], vec![s(0), s(1)]],
            vec!["a".into(), "b".into()],
        );
        assert!(matches!(err, Err(Error::ZeroCovector(0))));

        assert_eq!(counterexample_arrangement().size(), 5);
    }

    #[test]
    fn invalid_families() {
        assert!(build_root_system(Family::A(0)).is_err());
        assert!(build_root_system(Family::B(1)).is_err());
        assert!(build_root_system(Family::D(2)).is_err());
        assert!(build_root_system(Family::I2(2)).is_err());
    }
}
