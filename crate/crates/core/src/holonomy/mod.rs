//! `so(r,s)` as bivectors, the spin lift `λ*`, and generator bases for the
//! holonomy algebras of the classification lists.
//!
//! A bivector `x∧y` acts on vectors by `(x∧y)z = g(x,z)y - g(y,z)x`, so the
//! matrix of `e_i∧e_j` has `M[j][i] = k_i` and `M[i][j] = -k_j`.

mod families;
mod spec;

pub use families::{
    form_stabilizer, neutral_algebra, neutral_element, sim_algebra, sim_element,
    standard_complex_structure, unitary_family, Calibration, KForm, NeutralKind, SimParams,
    SimType, UnitaryKind,
};
pub use spec::{parse_algebra, ALGEBRA_GRAMMAR};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::clifford::{two_form_action, Bivector, CliffordRep, Signature};
use crate::error::{Error, Result};
use crate::exact::{GaussianRational as GR, MatrixGR, SubspaceGR, VectorGR};
use crate::par::Exec;

/// An element of `so(r,s)`, held both as a bivector and as its matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SoElement {
    signature: Signature,
    bivector: Bivector,
    matrix: MatrixGR,
}

impl SoElement {
    pub fn from_bivector(signature: Signature, bivector: Bivector) -> Result<Self> {
        let n = signature.n();
        if bivector.n() != n {
            return Err(Error::DimensionMismatch(format!(
                "bivector over n = {} in signature {signature}",
                bivector.n()
            )));
        }
        let mut matrix = MatrixGR::zeros(n, n);
        for (i, j, w) in bivector.terms() {
            matrix[(j, i)] += &w.scale(&rat(signature.k(i)));
            matrix[(i, j)] -= &w.scale(&rat(signature.k(j)));
        }
        Ok(Self {
            signature,
            bivector,
            matrix,
        })
    }

    /// Inverse of the bivector identification; rejects matrices that are not g-skew.
    pub fn from_matrix(signature: Signature, matrix: MatrixGR) -> Result<Self> {
        let n = signature.n();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix in signature {signature}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let mut b = Bivector::zero(n);
        for (i, j) in Bivector::pairs(n) {
            let w = matrix[(j, i)].scale(&rat(signature.k(i)));
            if !w.is_zero() {
                b.set(i, j, w);
            }
        }
        let el = Self::from_bivector(signature, b)?;
        if el.matrix != matrix {
            return Err(Error::InvalidParams(format!(
                "matrix is not g-skew in signature {signature}"
            )));
        }
        Ok(el)
    }

    pub fn basis(signature: Signature, i: usize, j: usize) -> Self {
        Self::from_bivector(signature, Bivector::basis(signature.n(), i, j))
            .expect("basis bivector")
    }

    pub fn zero(signature: Signature) -> Self {
        Self::from_bivector(signature, Bivector::zero(signature.n())).expect("zero bivector")
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn bivector(&self) -> &Bivector {
        &self.bivector
    }

    pub fn matrix(&self) -> &MatrixGR {
        &self.matrix
    }

    pub fn coords(&self) -> &[GR] {
        self.bivector.to_coords()
    }

    pub fn is_zero(&self) -> bool {
        self.bivector.is_zero()
    }

    pub fn bracket(&self, o: &SoElement) -> SoElement {
        Self::from_matrix(self.signature, self.matrix.commutator(&o.matrix))
            .expect("so is closed under the commutator")
    }

    pub fn add(&self, o: &SoElement) -> SoElement {
        Self::from_bivector(self.signature, self.bivector.add(&o.bivector)).expect("same signature")
    }

    pub fn scale(&self, k: &GR) -> SoElement {
        Self::from_bivector(self.signature, self.bivector.scale(k)).expect("same signature")
    }

    /// Whether `g(Az, w) + g(z, Aw) = 0` on all frame pairs.
    pub fn is_g_skew(&self) -> bool {
        let n = self.signature.n();
        (0..n).all(|a| {
            (0..n).all(|b| {
                let x = self.matrix[(b, a)].scale(&rat(self.signature.k(b)));
                let y = self.matrix[(a, b)].scale(&rat(self.signature.k(a)));
                (&x + &y).is_zero()
            })
        })
    }

    /// Linear combination `Σ c_k g_k`.
    pub fn combination(signature: Signature, coeffs: &[GR], elems: &[SoElement]) -> SoElement {
        let mut acc = Bivector::zero(signature.n());
        for (c, e) in coeffs.iter().zip(elems) {
            if !c.is_zero() {
                acc = acc.add(&e.bivector.scale(c));
            }
        }
        Self::from_bivector(signature, acc).expect("same signature")
    }
}

impl Serialize for SoElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.bivector.serialize(s)
    }
}

fn rat(k: i64) -> num_rational::BigRational {
    num_rational::BigRational::from_integer(k.into())
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    /// `λ*(e_i∧e_j) = ½ e_i e_j`, a Lie algebra homomorphism.
    #[default]
    Half,
    /// `λ*(e_i∧e_j) = e_i e_j`.
    Paper,
}

impl fmt::Display for Normalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Normalization::Half => "half",
            Normalization::Paper => "paper",
        })
    }
}

impl FromStr for Normalization {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "half" => Ok(Normalization::Half),
            "paper" => Ok(Normalization::Paper),
            _ => Err(Error::InvalidParams(format!(
                "normalization `{s}`: expected half or paper"
            ))),
        }
    }
}

pub fn lambda_star(rep: &CliffordRep, a: &SoElement, norm: Normalization) -> Result<MatrixGR> {
    if rep.signature() != a.signature() {
        return Err(Error::Signature(format!(
            "element of so{} lifted into Δ{}",
            a.signature(),
            rep.signature()
        )));
    }
    let m = two_form_action(rep, a.bivector())?;
    Ok(match norm {
        Normalization::Half => m.scale(&GR::ratio(1, 2)),
        Normalization::Paper => m,
    })
}

/// A subalgebra of `so(r,s)` given by linearly independent generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LieAlgebraRep {
    pub name: String,
    pub signature: Signature,
    pub generators: Vec<SoElement>,
    pub metadata: BTreeMap<String, serde_json::Value>,
}

impl LieAlgebraRep {
    /// Keeps the generators that are independent of the earlier ones.
    pub fn new(
        name: impl Into<String>,
        signature: Signature,
        generators: Vec<SoElement>,
    ) -> Result<Self> {
        let mut kept: Vec<SoElement> = Vec::new();
        let mut span = SubspaceGR::zero(bivector_dim(signature));
        for g in generators {
            if g.signature() != signature {
                return Err(Error::Signature(format!(
                    "generator in so{} for an algebra in so{signature}",
                    g.signature()
                )));
            }
            if !span.contains(g.coords()) {
                span = span.sum(&SubspaceGR::span(
                    span.ambient_dim(),
                    &[g.coords().to_vec()],
                )?)?;
                kept.push(g);
            }
        }
        Ok(Self {
            name: name.into(),
            signature,
            generators: kept,
            metadata: BTreeMap::new(),
        })
    }

    pub fn with_meta(mut self, key: &str, value: impl Serialize) -> Self {
        self.metadata.insert(
            key.to_string(),
            serde_json::to_value(value).expect("metadata serialises"),
        );
        self
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn span(&self) -> SubspaceGR {
        let vs: Vec<VectorGR> = self
            .generators
            .iter()
            .map(|g| g.coords().to_vec())
            .collect();
        SubspaceGR::span(bivector_dim(self.signature), &vs).expect("bivector coordinates")
    }

    pub fn contains(&self, a: &SoElement) -> bool {
        self.span().contains(a.coords())
    }

    /// Coordinates of `a` over the generators, if `a` lies in the span.
    pub fn coordinates(&self, a: &SoElement) -> Option<VectorGR> {
        if self.generators.is_empty() {
            return a.is_zero().then(Vec::new);
        }
        let cols: Vec<VectorGR> = self
            .generators
            .iter()
            .map(|g| g.coords().to_vec())
            .collect();
        MatrixGR::from_columns(&cols, bivector_dim(self.signature))
            .expect("generator columns")
            .solve(a.coords())
    }

    /// `λ*` of every generator.
    pub fn spin_images(
        &self,
        rep: &CliffordRep,
        norm: Normalization,
        exec: Exec,
    ) -> Result<Vec<MatrixGR>> {
        exec.map(&self.generators, |g| lambda_star(rep, g, norm))
            .into_iter()
            .collect()
    }
}

/// Import format: `{"signature": [r, s], "generators": [bivector tables]}`.
#[derive(Deserialize)]
struct AlgebraFile {
    #[serde(default)]
    name: Option<String>,
    signature: (usize, usize),
    generators: Vec<Bivector>,
}

impl LieAlgebraRep {
    pub fn from_json(text: &str) -> Result<Self> {
        let f: AlgebraFile = serde_json::from_str(text)?;
        let sig = Signature::new(f.signature.0, f.signature.1)?;
        let gens = f
            .generators
            .into_iter()
            .map(|b| SoElement::from_bivector(sig, b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(f.name.unwrap_or_else(|| "imported".into()), sig, gens)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.name,
            "signature": [self.signature.r, self.signature.s],
            "generators": self.generators,
            "metadata": self.metadata,
        })
    }
}

pub fn bivector_dim(sig: Signature) -> usize {
    let n = sig.n();
    n * n.saturating_sub(1) / 2
}

pub fn so_basis(sig: Signature) -> LieAlgebraRep {
    let gens = Bivector::pairs(sig.n())
        .into_iter()
        .map(|(i, j)| SoElement::basis(sig, i, j))
        .collect();
    LieAlgebraRep::new(format!("so({},{})", sig.r, sig.s), sig, gens).expect("independent basis")
}

/// `g' = [g, g]` with its canonical basis.
pub fn derived_algebra(g: &LieAlgebraRep) -> LieAlgebraRep {
    let k = g.generators.len();
    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .collect();
    let brackets: Vec<VectorGR> = Exec::default().map(&pairs, |&(i, j)| {
        g.generators[i].bracket(&g.generators[j]).coords().to_vec()
    });
    let span = SubspaceGR::span(bivector_dim(g.signature), &brackets).expect("bracket coordinates");
    let gens = span
        .basis()
        .iter()
        .map(|v| {
            let b = Bivector::from_coords(g.signature.n(), v.clone()).expect("coords");
            SoElement::from_bivector(g.signature, b).expect("same signature")
        })
        .collect();
    LieAlgebraRep::new(format!("[{0},{0}]", g.name), g.signature, gens).expect("basis")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureWitness {
    pub i: usize,
    pub j: usize,
    /// Component of `[g_i, g_j]` outside the span (bivector coordinates).
    pub residual: VectorGR,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureCheck {
    pub closed: bool,
    pub witness: Option<ClosureWitness>,
}

/// `b` minus its reduction against a canonical (RREF) basis.
fn residual_against(span: &SubspaceGR, b: &[GR]) -> VectorGR {
    let mut r = b.to_vec();
    for (row, p) in span.basis().iter().zip(span.pivots()) {
        let c = r[p].clone();
        if c.is_zero() {
            continue;
        }
        for (x, y) in r.iter_mut().zip(row) {
            *x -= &(&c * y);
        }
    }
    r
}

pub fn lie_closure_check(g: &LieAlgebraRep) -> ClosureCheck {
    let span = g.span();
    let k = g.generators.len();
    for i in 0..k {
        for j in i + 1..k {
            let b = g.generators[i].bracket(&g.generators[j]);
            let residual = residual_against(&span, b.coords());
            if residual.iter().any(|x| !x.is_zero()) {
                return ClosureCheck {
                    closed: false,
                    witness: Some(ClosureWitness { i, j, residual }),
                };
            }
        }
    }
    ClosureCheck {
        closed: true,
        witness: None,
    }
}
