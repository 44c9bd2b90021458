//! Hermitian product and Dirac current, the spaces `T(s)`, `E(s)` with the
//! induced complex structure, the Kähler-form spectrum, and the neutral
//! signature action formula.
//!
//! The Hermitian product is `⟨u, v⟩ = (βu)* v` with `β = Id` for `r = 0` and
//! `β = Φ(e_1)` for `r = 1`. In the Lorentzian case Clifford multiplication by
//! a vector is self-adjoint (`κ = +1`), so `⟨X·s, s⟩` is real.

use serde::Serialize;

use crate::clifford::{vector_action, CliffordRep, Signature, WittFrame};
use crate::error::{Error, Result};
use crate::exact::{
    char_poly, gaussian_roots, kernel, GaussianRational as GR, MatrixGR, SubspaceGR, VectorGR,
};
use crate::holonomy::{lambda_star, neutral_element, so_basis, Normalization, SoElement};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HermitianForm {
    pub signature: Signature,
    pub beta: MatrixGR,
    /// `⟨X·u, v⟩ = κ⟨u, X·v⟩` for frame vectors `X`.
    pub kappa: i8,
}

fn dot(u: &[GR], v: &[GR]) -> GR {
    u.iter().zip(v).map(|(a, b)| &a.conj() * b).sum()
}

impl HermitianForm {
    pub fn pair(&self, u: &[GR], v: &[GR]) -> GR {
        dot(&self.beta.mul_vec(u), v)
    }
}

pub fn hermitian_form(rep: &CliffordRep) -> Result<HermitianForm> {
    let sig = rep.signature();
    let beta = match sig.r {
        0 => MatrixGR::identity(rep.dim()),
        1 => rep.generator(0).clone(),
        _ => {
            return Err(Error::Unsupported(format!(
                "Hermitian form for r ≥ 2, got {sig}"
            )))
        }
    };
    if beta.conj_transpose() != beta {
        return Err(Error::Invariant("β is not Hermitian".into()));
    }
    for a in &so_basis(sig).generators {
        let l = lambda_star(rep, a, Normalization::Half)?;
        if !(&(&l.conj_transpose() * &beta) + &(&beta * &l)).is_zero() {
            return Err(Error::Invariant(format!(
                "Hermitian form is not spin-invariant in {sig}"
            )));
        }
    }
    // X* β = κ β X
    let x0 = rep.generator(0);
    let lhs = &x0.conj_transpose() * &beta;
    let rhs = &beta * x0;
    let kappa: i8 = if lhs == rhs {
        1
    } else if lhs == -&rhs {
        -1
    } else {
        return Err(Error::Invariant(
            "vectors are neither self- nor skew-adjoint".into(),
        ));
    };
    let k = GR::from_int(kappa as i64);
    for x in rep.generators() {
        if &x.conj_transpose() * &beta != (&beta * x).scale(&k) {
            return Err(Error::Invariant(
                "vector adjointness sign is not uniform".into(),
            ));
        }
    }
    Ok(HermitianForm {
        signature: sig,
        beta,
        kappa,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiracCurrent {
    pub components: VectorGR,
}

impl DiracCurrent {
    pub fn norm(&self, sig: Signature) -> GR {
        sig.g(&self.components, &self.components)
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(GR::is_zero)
    }

    /// Whether the current is a (possibly zero) multiple of `v`.
    pub fn is_multiple_of(&self, v: &[GR]) -> bool {
        let Some(k) = v.iter().position(|x| !x.is_zero()) else {
            return self.is_zero();
        };
        let f = &self.components[k] / &v[k];
        self.components.iter().zip(v).all(|(a, b)| a == &(&f * b))
    }
}

/// `g(p, X) = -⟨X·s, s⟩`, i.e. `p_i = -k_i ⟨e_i·s, s⟩`.
pub fn dirac_current(rep: &CliffordRep, form: &HermitianForm, s: &[GR]) -> Result<DiracCurrent> {
    let sig = rep.signature();
    if sig.r != 1 || form.signature != sig {
        return Err(Error::Signature(format!(
            "Dirac current needs signature (1, n+1), got {sig}"
        )));
    }
    if s.len() != rep.dim() {
        return Err(Error::DimensionMismatch(format!(
            "spinor of length {} in Δ of dimension {}",
            s.len(),
            rep.dim()
        )));
    }
    let mut components = Vec::with_capacity(sig.n());
    for i in 0..sig.n() {
        let v = form.pair(&rep.generator(i).mul_vec(s), s);
        if !v.is_real() {
            return Err(Error::Invariant(format!(
                "⟨e_{}·s, s⟩ = {v} is not real",
                i + 1
            )));
        }
        components.push(if sig.k(i) < 0 { v } else { -v });
    }
    Ok(DiracCurrent { components })
}

/// Columns `e_i·s`.
fn action_columns(rep: &CliffordRep, s: &[GR]) -> MatrixGR {
    let cols: Vec<VectorGR> = rep.generators().iter().map(|g| g.mul_vec(s)).collect();
    MatrixGR::from_columns(&cols, rep.dim()).expect("columns of length dim Δ")
}

/// Real frame vectors `X` with `X·s = 0`.
pub fn t_space(rep: &CliffordRep, s: &[GR]) -> Result<SubspaceGR> {
    if s.len() != rep.dim() {
        return Err(Error::DimensionMismatch(format!(
            "spinor of length {} in Δ of dimension {}",
            s.len(),
            rep.dim()
        )));
    }
    Ok(kernel(&action_columns(rep, s).realify_rows()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum InducedComplex {
    /// `I` with `X·s = i I(X)·s`; columns are `I(e_j)`.
    Structure { i: MatrixGR },
    /// `T(s) ≠ 0`, so `I` is not unique.
    NotUnique { t_dim: usize },
    /// No `Y` with `Y·s = -i e_j·s` (`E(s)` is not everything).
    NotFull { column: usize },
}

pub fn induced_complex_structure(rep: &CliffordRep, s: &[GR]) -> Result<InducedComplex> {
    let t = t_space(rep, s)?;
    if !t.is_zero() {
        return Ok(InducedComplex::NotUnique { t_dim: t.dim() });
    }
    let n = rep.n();
    let real = action_columns(rep, s).realify_rows();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        // Y·s = -i e_j·s, split into real and imaginary parts
        let b: VectorGR = rep
            .generator(j)
            .mul_vec(s)
            .iter()
            .map(|x| -x.mul_i())
            .collect();
        let rhs: VectorGR = b
            .iter()
            .map(|x| GR::from_rational(x.re().clone()))
            .chain(b.iter().map(|x| GR::from_rational(x.im().clone())))
            .collect();
        match real.solve(&rhs) {
            Some(y) => cols.push(y),
            None => return Ok(InducedComplex::NotFull { column: j }),
        }
    }
    let i = MatrixGR::from_columns(&cols, n)?;
    if &i * &i != -&MatrixGR::identity(n) {
        return Err(Error::Invariant("induced I does not square to -Id".into()));
    }
    Ok(InducedComplex::Structure { i })
}

/// Whether `g(IX, IY) = g(X, Y)` on the frame.
pub fn is_g_orthogonal(sig: Signature, i: &MatrixGR) -> bool {
    let n = sig.n();
    (0..n).all(|a| {
        (0..n).all(|b| sig.g(&i.column(a), &i.column(b)) == sig.g(&sig.unit(a), &sig.unit(b)))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KahlerSpectrum {
    /// Clifford action of the 2-form of `J`.
    pub omega: MatrixGR,
    /// Eigenvalues with multiplicity, by decreasing imaginary part.
    pub spectrum: Vec<(GR, usize)>,
}

impl KahlerSpectrum {
    pub fn eigenspace(&self, lambda: &GR) -> SubspaceGR {
        kernel(&(&self.omega - &MatrixGR::scalar(self.omega.rows(), lambda.clone())))
    }
}

pub fn kahler_spectrum(rep: &CliffordRep, j: &SoElement) -> Result<KahlerSpectrum> {
    let sig = rep.signature();
    if sig.r % 2 == 1 || sig.s % 2 == 1 || j.signature() != sig {
        return Err(Error::Signature(format!(
            "Kähler form needs even r, s matching the complex structure, got {sig}"
        )));
    }
    let n = sig.n();
    if j.matrix() * j.matrix() != -&MatrixGR::identity(n) {
        return Err(Error::InvalidParams("J² ≠ -Id".into()));
    }
    if !j.is_g_skew() {
        return Err(Error::InvalidParams("J is not g-skew".into()));
    }
    let omega = lambda_star(rep, j, Normalization::Paper)?;
    let roots = gaussian_roots(&char_poly(&omega)?)?;
    if roots.residual.degree().unwrap_or(0) > 0 {
        return Err(Error::Invariant("Ω has eigenvalues outside Q(i)".into()));
    }
    let mut spectrum = roots.distinct();
    spectrum.sort_by(|a, b| b.0.im().cmp(a.0.im()).then(b.0.re().cmp(a.0.re())));
    Ok(KahlerSpectrum { omega, spectrum })
}

/// `formula = α·direct + β·Id`; `alpha` is `None` when `direct = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineMatch {
    pub alpha: Option<GR>,
    pub beta: GR,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NeutralAction {
    /// `½n + ¼ Σ (e*_i·A(e_i) - A(e*_i)·e_i)`.
    pub formula: MatrixGR,
    pub direct_half: MatrixGR,
    pub direct_paper: MatrixGR,
    pub affine_half: Option<AffineMatch>,
    pub affine_paper: Option<AffineMatch>,
}

fn affine_match(formula: &MatrixGR, direct: &MatrixGR) -> Option<AffineMatch> {
    if direct.is_zero() {
        return formula
            .scalar_value()
            .map(|beta| AffineMatch { alpha: None, beta });
    }
    let dim = formula.rows();
    let cols = vec![
        direct.entries().to_vec(),
        MatrixGR::identity(dim).entries().to_vec(),
    ];
    let m = MatrixGR::from_columns(&cols, dim * dim).ok()?;
    let x = m.solve(formula.entries())?;
    Some(AffineMatch {
        alpha: Some(x[0].clone()),
        beta: x[1].clone(),
    })
}

pub fn neutral_action(rep: &CliffordRep, witt: &WittFrame, b: &MatrixGR) -> Result<NeutralAction> {
    let sig = rep.signature();
    let (e, e_star) = witt
        .neutral_pairs()
        .ok_or_else(|| Error::InvalidParams("neutral action needs a neutral Witt frame".into()))?;
    let n = e.len();
    if sig.r != n || sig.s != n {
        return Err(Error::Signature(format!(
            "neutral frame of rank {n} in signature {sig}"
        )));
    }
    let a = neutral_element(n, b)?;
    let am = a.matrix();
    let clifford = |x: &[GR]| vector_action(rep, x);
    let mut sum = MatrixGR::zeros(rep.dim(), rep.dim());
    for i in 0..n {
        let t1 = &clifford(&e_star[i])? * &clifford(&am.mul_vec(&e[i]))?;
        let t2 = &clifford(&am.mul_vec(&e_star[i]))? * &clifford(&e[i])?;
        sum = &sum + &(&t1 - &t2);
    }
    let formula =
        &MatrixGR::scalar(rep.dim(), GR::ratio(n as i64, 2)) + &sum.scale(&GR::ratio(1, 4));
    let direct_half = lambda_star(rep, &a, Normalization::Half)?;
    let direct_paper = lambda_star(rep, &a, Normalization::Paper)?;
    Ok(NeutralAction {
        affine_half: affine_match(&formula, &direct_half),
        affine_paper: affine_match(&formula, &direct_paper),
        formula,
        direct_half,
        direct_paper,
    })
}
