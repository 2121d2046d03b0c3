//! The degree <= 2 truncation of the holonomy Lie algebra of an arrangement.
//!
//! Degree-1 elements live in the span of the generators t_alpha; brackets of
//! degree-1 elements land in the wedge square modulo one relation row
//! [t_alpha, sum_{beta in W} t_beta] per pair of a covector and a rank-2 flat
//! W containing it. Commutativity questions about subspaces of the generator
//! span are therefore finite exact linear algebra against the reduced
//! relation matrix.

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::flats::{rank_two_flats, Flat};
use crate::limits::subspace_limit;
use crate::matrix::{reduce_against, Matrix};
use crate::ratfunc::RatFunc;
use crate::sample::PointSampler;
use crate::scalar::Scalar;

/// A subspace of the degree-1 part, canonically represented by the reduced
/// row echelon form of any spanning set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace1 {
    basis: Matrix<Scalar>,
}

impl Subspace1 {
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Subspace1 {
        Subspace1 {
            basis: Matrix::from_rows(rows).row_space(),
        }
    }

    pub fn basis(&self) -> &Matrix<Scalar> {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let (rref, pivots) = self.basis.rref();
        reduce_against(&rref, &pivots, v).iter().all(|c| c.is_zero())
    }

    pub fn is_subspace_of(&self, other: &Subspace1) -> bool {
        (0..self.basis.rows()).all(|r| other.contains(self.basis.row(r)))
    }

    /// Intersection of two subspaces of the same ambient space.
    pub fn intersect(&self, other: &Subspace1) -> Subspace1 {
        let n = self.ambient();
        assert_eq!(n, other.ambient());
        // rows of [self; -other] with kernel coordinates (a | b):
        // a*self = b*other spans the intersection
        let mut stacked = Vec::new();
        for r in 0..self.basis.rows() {
            stacked.push(self.basis.row(r).to_vec());
        }
        for r in 0..other.basis.rows() {
            stacked.push(other.basis.row(r).iter().map(|c| c.neg()).collect());
        }
        let m = Matrix::from_rows(stacked).transpose();
        let mut rows = Vec::new();
        for combo in m.kernel() {
            let mut v = vec![Scalar::zero(); n];
            for (r, c) in combo.iter().take(self.basis.rows()).enumerate() {
                if c.is_zero() {
                    continue;
                }
                for j in 0..n {
                    v[j] = v[j].add(&c.mul(self.basis.get(r, j)));
                }
            }
            rows.push(v);
        }
        Subspace1::from_rows(rows)
    }

    /// Span of this subspace together with extra vectors.
    pub fn extend(&self, extra: &[Vec<Scalar>]) -> Subspace1 {
        let mut rows = self.basis.row_vecs();
        rows.extend(extra.iter().cloned());
        Subspace1::from_rows(rows)
    }
}

/// The relation space of the holonomy algebra in degree 2.
#[derive(Clone, Debug)]
pub struct Degree2Algebra {
    arr: Arrangement,
    pairs: Vec<(usize, usize)>,
    rel_rref: Matrix<Scalar>,
    rel_pivots: Vec<usize>,
    rank2: Vec<Flat>,
}

impl Degree2Algebra {
    pub fn new(arr: &Arrangement) -> Degree2Algebra {
        let n = arr.size();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .collect();
        let rank2 = rank_two_flats(arr);
        let wedge_dim = pairs.len();
        let mut rows = Vec::new();
        for flat in &rank2 {
            let ms = flat.members();
            for &alpha in ms {
                let mut row = vec![Scalar::zero(); wedge_dim];
                for &beta in ms {
                    if beta == alpha {
                        continue;
                    }
                    let (idx, sign) = pair_slot(n, alpha, beta);
                    row[idx] = row[idx].add(&Scalar::from_int(sign));
                }
                rows.push(row);
            }
        }
        let rel = if rows.is_empty() {
            Matrix::zero(0, wedge_dim)
        } else {
            Matrix::from_rows(rows)
        };
        let (rel_rref, rel_pivots) = rel.rref();
        Degree2Algebra {
            arr: arr.clone(),
            pairs,
            rel_rref,
            rel_pivots,
            rank2,
        }
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arr
    }

    pub fn wedge_dim(&self) -> usize {
        self.pairs.len()
    }

    pub fn relation_rank(&self) -> usize {
        self.rel_pivots.len()
    }

    pub fn quotient_dim(&self) -> usize {
        self.wedge_dim() - self.relation_rank()
    }

    pub fn rank2_flats(&self) -> &[Flat] {
        &self.rank2
    }

    /// The wedge x /\ y in the unreduced wedge basis.
    pub fn wedge(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.pairs
            .iter()
            .map(|&(i, j)| x[i].mul(&y[j]).sub(&x[j].mul(&y[i])))
            .collect()
    }

    /// The class of [x, y] in degree 2: the canonical residue of the wedge
    /// against the reduced relation matrix. Zero exactly when x and y
    /// commute in the holonomy algebra.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        reduce_against(&self.rel_rref, &self.rel_pivots, &self.wedge(x, y))
    }

    pub fn brackets_to_zero(&self, x: &[Scalar], y: &[Scalar]) -> bool {
        self.bracket(x, y).iter().all(|c| c.is_zero())
    }

    /// All pairwise brackets of basis rows vanish; bilinearity makes this
    /// sufficient for the whole subspace.
    pub fn is_abelian(&self, s: &Subspace1) -> bool {
        let b = s.basis();
        for i in 0..b.rows() {
            for j in (i + 1)..b.rows() {
                if !self.brackets_to_zero(b.row(i), b.row(j)) {
                    return false;
                }
            }
        }
        true
    }

    /// {x : [x, u] = 0 for all u in s}, an exact kernel computation.
    pub fn centralizer(&self, s: &Subspace1) -> Subspace1 {
        let n = self.arr.size();
        let mut constraint_rows: Vec<Vec<Scalar>> = Vec::new();
        for r in 0..s.basis().rows() {
            let u = s.basis().row(r);
            // residues of e_i /\ u span the constraints for this u
            let rows: Vec<Vec<Scalar>> = (0..n)
                .map(|i| {
                    let mut e = vec![Scalar::zero(); n];
                    e[i] = Scalar::one();
                    self.bracket(&e, u)
                })
                .collect();
            let m_u = Matrix::from_rows(rows).transpose();
            constraint_rows.extend(m_u.row_vecs());
        }
        if constraint_rows.is_empty() {
            return Subspace1::from_rows(vec![identity_rows(n), vec![]].concat());
        }
        let constraints = Matrix::from_rows(constraint_rows);
        Subspace1::from_rows(constraints.kernel())
    }

    /// Greedy randomized search for an abelian subspace of the target
    /// dimension extending the seed. One-sided: returns a verified subspace
    /// or None, never a nonexistence claim.
    pub fn greedy_abelian_search(
        &self,
        seed_space: &Subspace1,
        target_dim: usize,
        seed: u64,
        restarts: usize,
    ) -> Option<Subspace1> {
        if !self.is_abelian(seed_space) {
            return None;
        }
        if seed_space.dim() >= target_dim {
            return Some(seed_space.clone());
        }
        let mut sampler = PointSampler::new(seed);
        for _ in 0..restarts {
            let mut current = seed_space.clone();
            while current.dim() < target_dim {
                let cent = self.centralizer(&current);
                if cent.dim() <= current.dim() {
                    break;
                }
                // random vector from the centralizer, kept only if it
                // genuinely extends the span
                let mut tries = 0;
                let extended = loop {
                    tries += 1;
                    if tries > 50 {
                        break None;
                    }
                    let combo: Vec<Scalar> =
                        (0..cent.dim()).map(|_| sampler.rational()).collect();
                    let mut v = vec![Scalar::zero(); self.arr.size()];
                    for (r, c) in combo.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        for j in 0..self.arr.size() {
                            v[j] = v[j].add(&c.mul(cent.basis().get(r, j)));
                        }
                    }
                    if !current.contains(&v) {
                        break Some(current.extend(&[v]));
                    }
                };
                match extended {
                    Some(next) => current = next,
                    None => break,
                }
            }
            if current.dim() == target_dim && self.is_abelian(&current) {
                return Some(current);
            }
        }
        None
    }
}

fn identity_rows(n: usize) -> Vec<Vec<Scalar>> {
    (0..n)
        .map(|i| {
            let mut e = vec![Scalar::zero(); n];
            e[i] = Scalar::one();
            e
        })
        .collect()
}

/// Position and sign of t_a /\ t_b in the lexicographic wedge basis.
fn pair_slot(n: usize, a: usize, b: usize) -> (usize, i64) {
    let (i, j, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
    (i * n - i * (i + 1) / 2 + (j - i - 1), sign)
}

/// The central element C = sum of all generators.
pub fn central_element(arr: &Arrangement) -> Vec<Scalar> {
    vec![Scalar::one(); arr.size()]
}

/// H(w) = sum alpha(w)/alpha(z) t_alpha; errors name the offending
/// hyperplane if z lies on one.
pub fn gaudin_hamiltonian(arr: &Arrangement, z: &[Scalar], w: &[Scalar]) -> Result<Vec<Scalar>> {
    let mut coeffs = Vec::with_capacity(arr.size());
    for i in 0..arr.size() {
        let az = arr.eval(i, z);
        if az.is_zero() {
            return Err(Error::PointOnHyperplane(arr.label(i).to_string()));
        }
        coeffs.push(arr.eval(i, w).div(&az));
    }
    Ok(coeffs)
}

/// G(z) = span{H(w) : w in V}, spanned by the hamiltonians of the dual
/// basis vectors.
pub fn gaudin_subalgebra(arr: &Arrangement, z: &[Scalar]) -> Result<Subspace1> {
    let r = arr.rank();
    let mut rows = Vec::with_capacity(r);
    for k in 0..r {
        let mut w = vec![Scalar::zero(); r];
        w[k] = Scalar::one();
        rows.push(gaudin_hamiltonian(arr, z, &w)?);
    }
    Ok(Subspace1::from_rows(rows))
}

/// Gaudin hamiltonian basis along a rational curve z(eps); errors if the
/// path lies identically on a hyperplane.
pub fn gaudin_rows_along(arr: &Arrangement, path: &[RatFunc]) -> Result<Vec<Vec<RatFunc>>> {
    assert_eq!(path.len(), arr.rank());
    let mut alpha_of_z = Vec::with_capacity(arr.size());
    for i in 0..arr.size() {
        let mut acc = RatFunc::zero();
        for (k, p) in path.iter().enumerate() {
            let c = &arr.covector(i)[k];
            if !c.is_zero() {
                acc = acc.add(&p.mul(&RatFunc::constant(c.clone())));
            }
        }
        if acc.is_zero() {
            return Err(Error::PathOnHyperplane(arr.label(i).to_string()));
        }
        alpha_of_z.push(acc);
    }
    let r = arr.rank();
    let mut rows = Vec::with_capacity(r);
    for k in 0..r {
        let row: Vec<RatFunc> = (0..arr.size())
            .map(|i| {
                let c = &arr.covector(i)[k];
                if c.is_zero() {
                    RatFunc::zero()
                } else {
                    RatFunc::constant(c.clone()).div(&alpha_of_z[i])
                }
            })
            .collect();
        rows.push(row);
    }
    Ok(rows)
}

/// The limit of the Gaudin subalgebras G(z(eps)) as eps -> 0, computed in
/// the Grassmannian. The result is r-dimensional and contains the central
/// element whenever the inputs do.
pub fn limit_gaudin(arr: &Arrangement, path: &[RatFunc]) -> Result<Subspace1> {
    let rows = gaudin_rows_along(arr, path)?;
    let m = subspace_limit(&rows)?;
    Ok(Subspace1::from_rows(m.row_vecs()))
}
