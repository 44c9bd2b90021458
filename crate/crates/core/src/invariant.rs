//! One-dimensional invariant subspaces of a Lie algebra of endomorphisms.
//!
//! Every invariant line carries a character, which vanishes on commutators.
//! Lines therefore sit inside the joint kernel `K` of the commutator span,
//! where the generators commute. Splitting `K` into joint eigenspaces with
//! exact eigenvalues finds every line whose character takes values in `Q(i)`.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{
    char_poly, gaussian_roots, kernel, GaussianRational as GR, MatrixGR, PolyGR, SubspaceGR,
    VectorGR,
};
use crate::par::Exec;

/// A joint eigenspace with its character (one eigenvalue per generator).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantComponent {
    pub subspace: SubspaceGR,
    pub character: Vec<GR>,
    pub annihilated: bool,
    pub isolated: bool,
}

impl InvariantComponent {
    fn new(subspace: SubspaceGR, character: Vec<GR>) -> Self {
        let annihilated = character.iter().all(GR::is_zero);
        let isolated = subspace.dim() == 1;
        Self {
            subspace,
            character,
            annihilated,
            isolated,
        }
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }
}

impl Serialize for InvariantComponent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("InvariantComponent", 4)?;
        st.serialize_field("basis", &self.subspace.to_strings())?;
        st.serialize_field("character", &self.character)?;
        st.serialize_field("annihilated", &self.annihilated)?;
        st.serialize_field("isolated", &self.isolated)?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineReport {
    pub components: Vec<InvariantComponent>,
    #[serde(skip)]
    pub isolated_count: usize,
    #[serde(skip)]
    pub family_count: usize,
    /// Monic factors of restricted characteristic polynomials without roots in `Q(i)`.
    pub residual_factors: Vec<PolyGR>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LineCount {
    pub isolated: usize,
    pub families: usize,
    pub annihilated_isolated: usize,
}

pub fn line_count(report: &LineReport) -> LineCount {
    LineCount {
        isolated: report.isolated_count,
        families: report.family_count,
        annihilated_isolated: report
            .components
            .iter()
            .filter(|c| c.isolated && c.annihilated)
            .count(),
    }
}

fn check_dims(mats: &[MatrixGR], dim: usize) -> Result<()> {
    for m in mats {
        if m.rows() != dim || m.cols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix acting on C^{dim}",
                m.rows(),
                m.cols()
            )));
        }
    }
    Ok(())
}

/// `∩ ker(m)`; the full space for an empty list.
pub fn joint_kernel(mats: &[MatrixGR], dim: usize) -> Result<SubspaceGR> {
    check_dims(mats, dim)?;
    if mats.is_empty() {
        return Ok(SubspaceGR::full(dim));
    }
    let mut rows: Vec<VectorGR> = Vec::with_capacity(mats.len() * dim);
    for m in mats {
        rows.extend(m.to_rows());
    }
    Ok(kernel(&MatrixGR::from_rows(rows, dim)?))
}

fn flatten(m: &MatrixGR) -> VectorGR {
    m.entries().to_vec()
}

/// Rejects generator sets whose span is not closed under commutators and
/// returns a basis of the commutator span.
fn commutator_span(gens: &[MatrixGR], dim: usize, exec: Exec) -> Result<Vec<MatrixGR>> {
    let k = gens.len();
    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .collect();
    let comms = exec.map(&pairs, |&(i, j)| gens[i].commutator(&gens[j]));
    let span = SubspaceGR::span(dim * dim, &gens.iter().map(flatten).collect::<Vec<_>>())?;
    for (&(i, j), c) in pairs.iter().zip(&comms) {
        let v = flatten(c);
        if !span.contains(&v) {
            let residual = span
                .pivots()
                .iter()
                .zip(span.basis())
                .fold(v, |mut r, (&p, b)| {
                    let f = r[p].clone();
                    for (x, y) in r.iter_mut().zip(b) {
                        *x -= &(&f * y);
                    }
                    r
                });
            return Err(Error::NotClosed {
                i,
                j,
                residual: residual.iter().map(|x| x.to_string()).collect(),
            });
        }
    }
    let d = SubspaceGR::span(dim * dim, &comms.iter().map(flatten).collect::<Vec<_>>())?;
    Ok(d.basis()
        .iter()
        .map(|v| MatrixGR::from_vec(dim, dim, v.clone()).expect("square"))
        .collect())
}

struct Leaf {
    subspace: SubspaceGR,
    character: Vec<GR>,
}

struct Split {
    leaves: Vec<Leaf>,
    residual: Vec<PolyGR>,
}

/// Splits the invariant subspace `w` by the eigenvalues of `gens[t..]`.
fn split(gens: &[MatrixGR], w: SubspaceGR, t: usize, prefix: Vec<GR>, exec: Exec) -> Result<Split> {
    if t == gens.len() {
        return Ok(Split {
            leaves: vec![Leaf {
                subspace: w,
                character: prefix,
            }],
            residual: Vec::new(),
        });
    }
    let r = w.restrict(&gens[t])?;
    let roots = gaussian_roots(&char_poly(&r)?)?;
    let mut residual = Vec::new();
    if roots.residual.degree().unwrap_or(0) > 0 {
        residual.push(roots.residual.clone());
    }
    let distinct = roots.distinct();
    let branches = exec.map(&distinct, |(lambda, _)| {
        let shifted = &r - &MatrixGR::scalar(r.rows(), lambda.clone());
        let inner = kernel(&shifted);
        let sub = w.lift_subspace(&inner);
        let mut ch = prefix.clone();
        ch.push(lambda.clone());
        split(gens, sub, t + 1, ch, exec)
    });
    let mut leaves = Vec::new();
    for b in branches {
        let b = b?;
        leaves.extend(b.leaves);
        residual.extend(b.residual);
    }
    Ok(Split { leaves, residual })
}

pub fn invariant_lines(gens: &[MatrixGR], dim: usize, exec: Exec) -> Result<LineReport> {
    check_dims(gens, dim)?;
    let d = commutator_span(gens, dim, exec)?;
    let k = joint_kernel(&d, dim)?;
    let Split { leaves, residual } = if k.is_zero() {
        Split {
            leaves: Vec::new(),
            residual: Vec::new(),
        }
    } else {
        split(gens, k, 0, Vec::new(), exec)?
    };
    let mut components: Vec<InvariantComponent> = leaves
        .into_iter()
        .filter(|l| !l.subspace.is_zero())
        .map(|l| InvariantComponent::new(l.subspace, l.character))
        .collect();
    components.sort_by_key(|c| c.subspace.to_strings());
    let mut residual_factors = residual;
    residual_factors.sort_by_key(|p| p.to_strings());
    residual_factors.dedup();
    let isolated_count = components.iter().filter(|c| c.isolated).count();
    Ok(LineReport {
        isolated_count,
        family_count: components.len() - isolated_count,
        components,
        residual_factors,
    })
}

/// Joint kernel of `{A - i t Id}`; nonzero means a common `v` with `A v = i t v`.
pub fn spinc_exists(pairs: &[(MatrixGR, GR)], dim: usize) -> Result<(bool, SubspaceGR)> {
    let shifted: Vec<MatrixGR> = pairs
        .iter()
        .map(|(a, t)| a - &MatrixGR::scalar(a.rows(), t.mul_i()))
        .collect();
    let k = joint_kernel(&shifted, dim)?;
    Ok((!k.is_zero(), k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{build_rep, Signature};
    use crate::holonomy::{parse_algebra, Normalization};

    fn c(re: i64, im: i64) -> GR {
        GR::from_ints(re, im)
    }

    fn images(spec: &str, norm: Normalization) -> (Vec<MatrixGR>, usize) {
        let g = parse_algebra(spec).unwrap();
        let rep = build_rep(g.signature).unwrap();
        (
            g.spin_images(&rep, norm, Exec::Sequential).unwrap(),
            rep.dim(),
        )
    }

    #[test]
    fn joint_kernel_examples() {
        assert_eq!(joint_kernel(&[], 4).unwrap(), SubspaceGR::full(4));
        assert!(joint_kernel(&[MatrixGR::identity(4)], 4).unwrap().is_zero());
        let (su2, d) = images("su:0,2", Normalization::Half);
        assert_eq!(joint_kernel(&su2, d).unwrap().dim(), 2);
        assert!(joint_kernel(&[MatrixGR::identity(3)], 4).is_err());
    }

    #[test]
    fn empty_family_is_one_family() {
        let r = invariant_lines(&[], 3, Exec::Sequential).unwrap();
        assert_eq!(r.components.len(), 1);
        assert!(r.components[0].annihilated && !r.components[0].isolated);
        let lc = line_count(&r);
        assert_eq!(
            (lc.isolated, lc.families, lc.annihilated_isolated),
            (0, 1, 0)
        );
    }

    #[test]
    fn u1_lines() {
        let (g, d) = images("u:0,1", Normalization::Paper);
        let r = invariant_lines(&g, d, Exec::Sequential).unwrap();
        assert_eq!(r.components.len(), 2);
        let mut seen: Vec<(SubspaceGR, GR)> = r
            .components
            .iter()
            .map(|c| (c.subspace.clone(), c.character[0].clone()))
            .collect();
        seen.sort_by_key(|(_, ch)| ch.to_string());
        let line = |v: Vec<GR>| SubspaceGR::span(2, &[v]).unwrap();
        assert!(seen.contains(&(line(vec![c(1, 0), c(0, -1)]), c(0, 1))));
        assert!(seen.contains(&(line(vec![c(1, 0), c(0, 1)]), c(0, -1))));
    }

    #[test]
    fn u2_su2_g2_counts() {
        let (g, d) = images("u:0,2", Normalization::Half);
        let r = invariant_lines(&g, d, Exec::Parallel).unwrap();
        let lc = line_count(&r);
        assert_eq!(
            (lc.isolated, lc.families, lc.annihilated_isolated),
            (2, 0, 0)
        );
        assert!(r.components.iter().all(|c| !c.annihilated));

        let (g, d) = images("su:0,2", Normalization::Half);
        let r = invariant_lines(&g, d, Exec::Parallel).unwrap();
        let lc = line_count(&r);
        assert_eq!((lc.isolated, lc.families), (0, 1));
        assert!(r.components[0].annihilated && r.components[0].dim() == 2);

        let (g, d) = images("g2", Normalization::Half);
        let r = invariant_lines(&g, d, Exec::Parallel).unwrap();
        assert_eq!(r.components.len(), 1);
        assert!(r.components[0].annihilated && r.components[0].isolated);
    }

    #[test]
    fn soundness_of_characters() {
        for spec in ["u:0,2", "u:1,1", "sp:0,1", "sim:type=1,h=u:0,1,n=2"] {
            let (g, d) = images(spec, Normalization::Half);
            let r = invariant_lines(&g, d, Exec::Sequential).unwrap();
            for comp in &r.components {
                for (a, ch) in g.iter().zip(&comp.character) {
                    for v in comp.subspace.basis() {
                        let av = a.mul_vec(v);
                        let cv: Vec<GR> = v.iter().map(|x| x * ch).collect();
                        assert_eq!(av, cv, "{spec}");
                    }
                }
            }
        }
    }

    #[test]
    fn non_closed_rejected() {
        let rep = build_rep(Signature::new(0, 3).unwrap()).unwrap();
        let gens = vec![rep.product(0, 1), rep.product(1, 2)];
        match invariant_lines(&gens, 2, Exec::Sequential) {
            Err(Error::NotClosed { i, j, .. }) => assert_eq!((i, j), (0, 1)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn residual_factors_recorded() {
        // rotation by 90 degrees scaled by √2 has eigenvalues ±i√2
        let a = MatrixGR::from_int_rows(&[&[0, -2], &[1, 0]]);
        let r = invariant_lines(&[a], 2, Exec::Sequential).unwrap();
        assert!(r.components.is_empty());
        assert_eq!(r.residual_factors, vec![PolyGR::from_ints(&[2, 0, 1])]);
    }

    #[test]
    fn spinc_examples() {
        let j = MatrixGR::from_int_rows(&[&[0, -1], &[1, 0]]);
        let (ok, sub) = spinc_exists(&[(j.clone(), GR::one())], 2).unwrap();
        assert!(ok);
        assert_eq!(
            sub,
            SubspaceGR::span(2, &[vec![c(1, 0), c(0, -1)]]).unwrap()
        );
        let (ok, _) = spinc_exists(&[(MatrixGR::identity(2), GR::zero())], 2).unwrap();
        assert!(!ok);
        let (_, k) = spinc_exists(&[(j.clone(), GR::zero())], 2).unwrap();
        assert_eq!(k, joint_kernel(&[j], 2).unwrap());
    }

    #[test]
    fn exec_modes_agree() {
        let (g, d) = images("u:0,3", Normalization::Half);
        let a = invariant_lines(&g, d, Exec::Sequential).unwrap();
        let b = invariant_lines(&g, d, Exec::Parallel).unwrap();
        assert_eq!(a, b);
    }
}
