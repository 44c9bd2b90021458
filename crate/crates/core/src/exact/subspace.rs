//! Subspaces of Q(i)^n in canonical reduced row-echelon form.

use serde::{Deserialize, Serialize};

use super::matrix::{MatrixGR, VectorGR};
use super::scalar::GaussianRational as GR;
use crate::error::{Error, Result};

/// A subspace stored by its canonical basis: the nonzero rows of the RREF of
/// any spanning set. Equal subspaces therefore have identical data.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SubspaceGR {
    ambient_dim: usize,
    basis: Vec<VectorGR>,
}

impl SubspaceGR {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::from_rref_rows(MatrixGR::identity(ambient_dim))
    }

    pub fn span(ambient_dim: usize, vectors: &[VectorGR]) -> Result<Self> {
        let m = MatrixGR::from_rows(vectors.to_vec(), ambient_dim)?;
        Ok(Self::from_rref_rows(m.rref().0))
    }

    /// Span of the standard basis vectors at `positions`.
    pub fn coordinate(ambient_dim: usize, positions: &[usize]) -> Self {
        let vs: Vec<VectorGR> = positions
            .iter()
            .map(|&p| {
                let mut v = vec![GR::zero(); ambient_dim];
                v[p] = GR::one();
                v
            })
            .collect();
        Self::span(ambient_dim, &vs).expect("coordinate vectors have ambient length")
    }

    fn from_rref_rows(r: MatrixGR) -> Self {
        let ambient_dim = r.cols();
        let basis = r
            .to_rows()
            .into_iter()
            .filter(|row| row.iter().any(|x| !x.is_zero()))
            .collect();
        Self { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[VectorGR] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> MatrixGR {
        MatrixGR::from_rows(self.basis.clone(), self.ambient_dim).expect("basis rows")
    }

    /// Leading (pivot) position of each basis vector, strictly increasing.
    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|v| {
                v.iter()
                    .position(|x| !x.is_zero())
                    .expect("nonzero basis row")
            })
            .collect()
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in
    /// the subspace. RREF makes the coordinates the pivot entries of `v`.
    pub fn coordinates(&self, v: &[GR]) -> Option<VectorGR> {
        let coords: VectorGR = self.pivots().iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vec![GR::zero(); self.ambient_dim];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in rebuilt.iter_mut().zip(b) {
                *r += &(c * x);
            }
        }
        (rebuilt.as_slice() == v).then_some(coords)
    }

    pub fn contains(&self, v: &[GR]) -> bool {
        v.len() == self.ambient_dim && self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &SubspaceGR) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|b| other.contains(b))
    }

    /// Vectors `w` with `sum_k w_k v_k = 0` for every `v` in the subspace
    /// (bilinear, not Hermitian, annihilator).
    pub fn annihilator(&self) -> SubspaceGR {
        if self.basis.is_empty() {
            return SubspaceGR::full(self.ambient_dim);
        }
        kernel(&self.basis_matrix())
    }

    pub fn sum(&self, other: &SubspaceGR) -> Result<SubspaceGR> {
        check_ambient(self, other)?;
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        SubspaceGR::span(self.ambient_dim, &vs)
    }

    /// Image of the subspace under `m`.
    pub fn image(&self, m: &MatrixGR) -> Result<SubspaceGR> {
        if m.cols() != self.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix on a subspace of dimension-{} space",
                m.rows(),
                m.cols(),
                self.ambient_dim
            )));
        }
        let vs: Vec<VectorGR> = self.basis.iter().map(|b| m.mul_vec(b)).collect();
        SubspaceGR::span(m.rows(), &vs)
    }

    pub fn is_invariant_under(&self, m: &MatrixGR) -> bool {
        self.basis.iter().all(|b| self.contains(&m.mul_vec(b)))
    }

    /// Matrix of `m` restricted to this (invariant) subspace, in the
    /// canonical basis. Column `j` holds the coordinates of `m b_j`.
    pub fn restrict(&self, m: &MatrixGR) -> Result<MatrixGR> {
        let d = self.dim();
        let mut out = MatrixGR::zeros(d, d);
        for (j, b) in self.basis.iter().enumerate() {
            let image = m.mul_vec(b);
            let coords = self.coordinates(&image).ok_or_else(|| {
                Error::Invariant("subspace is not invariant under the restricted map".into())
            })?;
            for (i, x) in coords.into_iter().enumerate() {
                out[(i, j)] = x;
            }
        }
        Ok(out)
    }

    /// Embeds a vector given in basis coordinates back into the ambient space.
    pub fn lift(&self, coords: &[GR]) -> VectorGR {
        let mut v = vec![GR::zero(); self.ambient_dim];
        for (c, b) in coords.iter().zip(&self.basis) {
            for (x, y) in v.iter_mut().zip(b) {
                *x += &(c * y);
            }
        }
        v
    }

    /// Subspace spanned by lifting a subspace of coordinate space.
    pub fn lift_subspace(&self, inner: &SubspaceGR) -> SubspaceGR {
        let vs: Vec<VectorGR> = inner.basis().iter().map(|c| self.lift(c)).collect();
        SubspaceGR::span(self.ambient_dim, &vs).expect("lifted vectors")
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.basis
            .iter()
            .map(|v| v.iter().map(|x| x.to_string()).collect())
            .collect()
    }
}

fn check_ambient(a: &SubspaceGR, b: &SubspaceGR) -> Result<()> {
    if a.ambient_dim != b.ambient_dim {
        return Err(Error::DimensionMismatch(format!(
            "subspaces of dimension-{} and dimension-{} spaces",
            a.ambient_dim, b.ambient_dim
        )));
    }
    Ok(())
}

/// Canonical basis of `{v : M v = 0}`.
pub fn kernel(m: &MatrixGR) -> SubspaceGR {
    let vs = m.null_space_vectors();
    SubspaceGR::span(m.cols(), &vs).expect("null vectors have column length")
}

/// Canonical basis of `A ∩ B`, computed as the joint kernel of both annihilators.
pub fn intersect(a: &SubspaceGR, b: &SubspaceGR) -> Result<SubspaceGR> {
    check_ambient(a, b)?;
    if a.is_zero() || b.is_zero() {
        return Ok(SubspaceGR::zero(a.ambient_dim));
    }
    let ann_a = a.annihilator();
    let ann_b = b.annihilator();
    let mut rows = ann_a.basis().to_vec();
    rows.extend(ann_b.basis().iter().cloned());
    if rows.is_empty() {
        return Ok(SubspaceGR::full(a.ambient_dim));
    }
    Ok(kernel(&MatrixGR::from_rows(rows, a.ambient_dim)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: i64, im: i64) -> GR {
        GR::from_ints(re, im)
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel(&MatrixGR::identity(3)).is_zero());
        assert_eq!(kernel(&MatrixGR::zeros(2, 2)), SubspaceGR::full(2));
        let m =
            MatrixGR::from_rows(vec![vec![c(1, 0), c(0, 1)], vec![c(0, 0), c(0, 0)]], 2).unwrap();
        let k = kernel(&m);
        let want = SubspaceGR::span(2, &[vec![c(0, -1), c(1, 0)]]).unwrap();
        assert_eq!(k, want);
        assert!(k.contains(&[c(0, -1), c(1, 0)]));
    }

    #[test]
    fn intersect_examples() {
        let a = SubspaceGR::span(
            3,
            &[
                vec![c(1, 0), c(2, 1), c(0, 0)],
                vec![c(0, 0), c(1, 0), c(1, 0)],
            ],
        )
        .unwrap();
        assert_eq!(intersect(&a, &a).unwrap(), a);
        assert!(intersect(&a, &SubspaceGR::zero(3)).unwrap().is_zero());

        let plane = SubspaceGR::full(2);
        let diag = SubspaceGR::span(2, &[vec![c(1, 0), c(1, 0)]]).unwrap();
        assert_eq!(intersect(&plane, &diag).unwrap(), diag);

        assert!(intersect(&plane, &SubspaceGR::zero(3)).is_err());
    }

    #[test]
    fn restriction_and_lift() {
        // swap on C^2 restricted to the +1 eigenline
        let swap = MatrixGR::from_int_rows(&[&[0, 1], &[1, 0]]);
        let line = SubspaceGR::span(2, &[vec![c(1, 0), c(1, 0)]]).unwrap();
        assert_eq!(line.restrict(&swap).unwrap(), MatrixGR::identity(1));
        let anti = SubspaceGR::span(2, &[vec![c(1, 0), c(0, 0)]]).unwrap();
        assert!(anti.restrict(&swap).is_err());
        assert_eq!(line.lift(&[c(3, 0)]), vec![c(3, 0), c(3, 0)]);
    }

    fn arb_matrix(rows: usize, cols: usize) -> impl Strategy<Value = MatrixGR> {
        proptest::collection::vec((-2i64..3, -1i64..2), rows * cols).prop_map(move |v| {
            MatrixGR::from_vec(rows, cols, v.into_iter().map(|(a, b)| c(a, b)).collect()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_matrix(4, 4)) {
            prop_assert_eq!(kernel(&m).dim() + m.rank(), 4);
            for v in kernel(&m).basis() {
                prop_assert!(m.mul_vec(v).iter().all(GR::is_zero));
            }
        }

        #[test]
        fn rref_idempotent(m in arb_matrix(3, 5)) {
            let (r, _) = m.rref();
            prop_assert_eq!(r.rref().0, r);
        }

        #[test]
        fn intersect_laws(a in arb_matrix(2, 4), b in arb_matrix(2, 4), d in arb_matrix(3, 4)) {
            let sa = SubspaceGR::span(4, &a.to_rows()).unwrap();
            let sb = SubspaceGR::span(4, &b.to_rows()).unwrap();
            let sd = SubspaceGR::span(4, &d.to_rows()).unwrap();
            let ab = intersect(&sa, &sb).unwrap();
            prop_assert_eq!(&ab, &intersect(&sb, &sa).unwrap());
            prop_assert!(ab.is_subspace_of(&sa) && ab.is_subspace_of(&sb));
            prop_assert_eq!(
                intersect(&ab, &sd).unwrap(),
                intersect(&sa, &intersect(&sb, &sd).unwrap()).unwrap()
            );
            // dim(A+B) + dim(A∩B) = dim A + dim B
            prop_assert_eq!(sa.sum(&sb).unwrap().dim() + ab.dim(), sa.dim() + sb.dim());
        }
    }
}
