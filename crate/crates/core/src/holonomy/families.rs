//! Constructors for the algebras in the classification lists: unitary and
//! quaternionic families, calibration stabilisers, `sim(n)` subalgebras of
//! `so(1,n+1)` and the neutral block algebras `diag(B, -Bᵀ)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{bivector_dim, derived_algebra, lie_closure_check, so_basis, LieAlgebraRep, SoElement};
use crate::clifford::{witt_frame, Bivector, Signature, WittFrame, WittKind};
use crate::error::{Error, Result};
use crate::exact::{kernel, GaussianRational as GR, MatrixGR, VectorGR};
use crate::par::Exec;

/// Elements of `so(sig)` killed by the linear map `f`.
fn solve_subalgebra<F>(sig: Signature, name: String, f: F) -> Result<LieAlgebraRep>
where
    F: Fn(&SoElement) -> VectorGR + Sync + Send,
{
    let basis = so_basis(sig).generators;
    let cols = Exec::default().map(&basis, &f);
    let rows = cols.first().map_or(0, Vec::len);
    let gens: Vec<SoElement> = if rows == 0 {
        basis.clone()
    } else {
        let m = MatrixGR::from_columns(&cols, rows)?;
        kernel(&m)
            .basis()
            .iter()
            .map(|c| SoElement::combination(sig, c, &basis))
            .collect()
    };
    LieAlgebraRep::new(name, sig, gens)
}

fn ensure_closed(g: LieAlgebraRep) -> Result<LieAlgebraRep> {
    let c = lie_closure_check(&g);
    match c.witness {
        None => Ok(g),
        Some(w) => Err(Error::NotClosed {
            i: w.i,
            j: w.j,
            residual: w.residual.iter().map(|x| x.to_string()).collect(),
        }),
    }
}

fn flat(m: &MatrixGR) -> VectorGR {
    m.entries().to_vec()
}

/// `J e_{2i-1} = e_{2i}` on consecutive pairs; requires `r`, `s` even.
pub fn standard_complex_structure(sig: Signature) -> Result<SoElement> {
    if sig.r % 2 == 1 || sig.s % 2 == 1 {
        return Err(Error::Signature(format!(
            "complex structure needs even r and s, got {sig}"
        )));
    }
    let n = sig.n();
    let mut j = MatrixGR::zeros(n, n);
    for a in (0..n).step_by(2) {
        j[(a + 1, a)] = GR::one();
        j[(a, a + 1)] = -GR::one();
    }
    SoElement::from_matrix(sig, j)
}

/// Second quaternionic structure on quadruples: `e1→e3, e3→-e1, e2→-e4, e4→e2`.
fn second_quaternionic(sig: Signature) -> Result<SoElement> {
    let n = sig.n();
    let mut j = MatrixGR::zeros(n, n);
    for a in (0..n).step_by(4) {
        j[(a + 2, a)] = GR::one();
        j[(a, a + 2)] = -GR::one();
        j[(a + 3, a + 1)] = -GR::one();
        j[(a + 1, a + 3)] = GR::one();
    }
    SoElement::from_matrix(sig, j)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UnitaryKind {
    U,
    Su,
    Sp,
}

/// `u(p,q)`, `su(p,q)` inside `so(2p,2q)` or `sp(p,q)` inside `so(4p,4q)`.
pub fn unitary_family(kind: UnitaryKind, p: usize, q: usize) -> Result<LieAlgebraRep> {
    if p + q == 0 {
        return Err(Error::InvalidParams("p + q must be positive".into()));
    }
    let (sig, name) = match kind {
        UnitaryKind::U => (Signature::new(2 * p, 2 * q)?, format!("u({p},{q})")),
        UnitaryKind::Su => (Signature::new(2 * p, 2 * q)?, format!("su({p},{q})")),
        UnitaryKind::Sp => (Signature::new(4 * p, 4 * q)?, format!("sp({p},{q})")),
    };
    let j1 = standard_complex_structure(sig)?;
    let j1m = j1.matrix().clone();
    let g = match kind {
        UnitaryKind::U => solve_subalgebra(sig, name, |a| flat(&a.matrix().commutator(&j1m)))?,
        UnitaryKind::Su => solve_subalgebra(sig, name, |a| {
            let mut v = flat(&a.matrix().commutator(&j1m));
            v.push((&j1m * a.matrix()).trace());
            v
        })?,
        UnitaryKind::Sp => {
            let j2m = second_quaternionic(sig)?.matrix().clone();
            solve_subalgebra(sig, name, |a| {
                let mut v = flat(&a.matrix().commutator(&j1m));
                v.extend(flat(&a.matrix().commutator(&j2m)));
                v
            })?
        }
    };
    let m = p + q;
    let expected = match kind {
        UnitaryKind::U => m * m,
        UnitaryKind::Su => m * m - 1,
        UnitaryKind::Sp => m * (2 * m + 1),
    };
    if g.dim() != expected {
        return Err(Error::Invariant(format!(
            "{} has dimension {}, expected {expected}",
            g.name,
            g.dim()
        )));
    }
    Ok(ensure_closed(g)?
        .with_meta("kind", kind)
        .with_meta("p", p)
        .with_meta("q", q))
}

/// An exterior form `Σ c_I e^I` over the orthonormal coframe.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct KForm {
    pub n: usize,
    pub degree: usize,
    /// Sorted 0-based index sets and their coefficients.
    pub terms: BTreeMap<Vec<usize>, GR>,
}

/// Sorts `idx` in place; `None` on a repeated index, else the permutation sign.
fn sort_with_sign(idx: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for a in 0..idx.len() {
        for b in 0..idx.len() - 1 - a {
            match idx[b].cmp(&idx[b + 1]) {
                std::cmp::Ordering::Greater => {
                    idx.swap(b, b + 1);
                    sign = -sign;
                }
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(sign)
}

impl KForm {
    pub fn zero(n: usize, degree: usize) -> Self {
        Self {
            n,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Adds `c e^{idx}` (0-based, any order).
    pub fn add_term(&mut self, idx: &[usize], c: GR) -> Result<()> {
        if idx.len() != self.degree || idx.iter().any(|&i| i >= self.n) {
            return Err(Error::InvalidParams(format!(
                "term {idx:?} does not fit a {}-form on {} dimensions",
                self.degree, self.n
            )));
        }
        let mut v = idx.to_vec();
        let Some(sign) = sort_with_sign(&mut v) else {
            return Ok(());
        };
        let e = self.terms.entry(v).or_insert_with(GR::zero);
        *e += &c.scale(&num_rational::BigRational::from_integer(sign.into()));
        self.terms.retain(|_, x| !x.is_zero());
        Ok(())
    }

    /// Parses `"+123 -145 ..."` with 1-based single-digit indices.
    pub fn from_digits(n: usize, text: &str) -> Result<Self> {
        let mut out: Option<KForm> = None;
        for tok in text.split_whitespace() {
            let (sign, digits) = match tok.split_at(1) {
                ("+", d) => (1, d),
                ("-", d) => (-1, d),
                _ => (1, tok),
            };
            let idx = digits
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize - 1))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::InvalidParams(format!("form term `{tok}`")))?;
            let f = out.get_or_insert_with(|| KForm::zero(n, idx.len()));
            f.add_term(&idx, GR::from_int(sign))?;
        }
        out.ok_or_else(|| Error::InvalidParams("empty form".into()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Natural action of `A ∈ so` on forms: `A·e^j = -Σ_l A[j][l] e^l`, extended
    /// as a derivation.
    pub fn act(&self, a: &MatrixGR) -> KForm {
        let mut out = KForm::zero(self.n, self.degree);
        for (idx, c) in &self.terms {
            for (slot, &j) in idx.iter().enumerate() {
                for l in 0..self.n {
                    let ajl = &a[(j, l)];
                    if ajl.is_zero() {
                        continue;
                    }
                    let mut new = idx.clone();
                    new[slot] = l;
                    out.add_term(&new, -&(c * ajl)).expect("same shape");
                }
            }
        }
        out
    }

    fn dense(&self) -> VectorGR {
        combinations(self.n, self.degree)
            .iter()
            .map(|c| self.terms.get(c).cloned().unwrap_or_else(GR::zero))
            .collect()
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Built-in calibration forms.
///
/// ```text
/// g2      (0,7)  +123 +145 +167 +246 -257 -347 -356
/// g2split (3,4)  the g2 form with the sign of e^123 reversed
/// spin7   (0,8)  +1234 +1256 +1278 +1357 -1368 -1458 -1467
///                -2358 -2367 -2457 +2468 +3456 +3478 +5678
/// spin34  (4,4)  the spin7 form with the sign reversed on every term having
///                exactly two indices in {1,2,3,4}
/// ```
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Calibration {
    G2,
    G2Split,
    Spin7,
    Spin34,
}

const G2_FORM: &str = "+123 +145 +167 +246 -257 -347 -356";
const CAYLEY_FORM: &str =
    "+1234 +1256 +1278 +1357 -1368 -1458 -1467 -2358 -2367 -2457 +2468 +3456 +3478 +5678";

impl Calibration {
    pub fn signature(self) -> Signature {
        let (r, s) = match self {
            Calibration::G2 => (0, 7),
            Calibration::G2Split => (3, 4),
            Calibration::Spin7 => (0, 8),
            Calibration::Spin34 => (4, 4),
        };
        Signature { r, s }
    }

    pub fn expected_dim(self) -> usize {
        match self {
            Calibration::G2 | Calibration::G2Split => 14,
            Calibration::Spin7 | Calibration::Spin34 => 21,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Calibration::G2 => "g2",
            Calibration::G2Split => "g2split",
            Calibration::Spin7 => "spin7",
            Calibration::Spin34 => "spin34",
        }
    }

    pub fn form(self) -> KForm {
        let n = self.signature().n();
        let base = match self {
            Calibration::G2 | Calibration::G2Split => G2_FORM,
            Calibration::Spin7 | Calibration::Spin34 => CAYLEY_FORM,
        };
        let mut f = KForm::from_digits(n, base).expect("built-in form");
        let flip = |idx: &Vec<usize>| match self {
            Calibration::G2Split => idx == &vec![0, 1, 2],
            Calibration::Spin34 => idx.iter().filter(|&&i| i < 4).count() == 2,
            _ => false,
        };
        for (idx, c) in f.terms.iter_mut() {
            if flip(idx) {
                *c = -&*c;
            }
        }
        f
    }

    pub fn stabilizer(self) -> Result<LieAlgebraRep> {
        let g = form_stabilizer(self.signature(), &self.form(), Some(self.expected_dim()))?;
        if g.dim() != self.expected_dim() {
            return Err(Error::Invariant(format!(
                "{} stabiliser has dimension {}, expected {}",
                self.name(),
                g.dim(),
                self.expected_dim()
            )));
        }
        Ok(LieAlgebraRep {
            name: self.name().into(),
            ..g
        })
    }
}

/// `{A ∈ so(sig) : A·form = 0}`. A result larger than `expected_dim` is kept
/// and flagged in the metadata.
pub fn form_stabilizer(
    sig: Signature,
    form: &KForm,
    expected_dim: Option<usize>,
) -> Result<LieAlgebraRep> {
    if form.n != sig.n() {
        return Err(Error::DimensionMismatch(format!(
            "{}-dimensional form in signature {sig}",
            form.n
        )));
    }
    let g = solve_subalgebra(sig, "stab".into(), |a| form.act(a.matrix()).dense())?;
    let g = ensure_closed(g)?.with_meta("form_degree", form.degree);
    Ok(match expected_dim {
        Some(e) if g.dim() > e => {
            let d = g.dim();
            g.with_meta("expected_dim", e).with_meta(
                "flag",
                format!("stabiliser dimension {d} exceeds expected {e}"),
            )
        }
        Some(e) => g.with_meta("expected_dim", e),
        None => g,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum SimType {
    One = 1,
    Two = 2,
    Three = 3,
    Four = 4,
}

impl SimType {
    pub fn from_number(t: u8) -> Result<Self> {
        Ok(match t {
            1 => SimType::One,
            2 => SimType::Two,
            3 => SimType::Three,
            4 => SimType::Four,
            _ => return Err(Error::InvalidParams(format!("sim type {t}: expected 1..4"))),
        })
    }

    pub fn number(self) -> u8 {
        self as u8
    }
}

/// Parameters of a `sim(n)` subalgebra `(a, A, X)` over `h ⊂ so(n)`.
#[derive(Clone, Debug)]
pub struct SimParams {
    pub kind: SimType,
    /// Riemannian algebra `h ⊂ so(0,k)` with `k ≤ n`, acting on `e_1..e_k`.
    pub h: LieAlgebraRep,
    /// Type 3: `φ` on each generator of `h`. Defaults to a functional killing `h'`.
    pub phi: Option<VectorGR>,
    /// Type 4: `0 < m < n`.
    pub m: Option<usize>,
    /// Type 4: `ψ(h_k) ∈ R^{n-m}` per generator. Defaults to a surjection killing `h'`.
    pub psi: Option<Vec<VectorGR>>,
}

impl SimParams {
    pub fn new(kind: SimType, h: LieAlgebraRep) -> Self {
        Self {
            kind,
            h,
            phi: None,
            m: None,
            psi: None,
        }
    }
}

/// Embeds `A ∈ so(0,k)` into `so(1,n+1)` on the indices `2..k+2`.
fn embed_spacelike(a: &SoElement, n: usize) -> Bivector {
    let mut b = Bivector::zero(n + 2);
    for (i, j, w) in a.bivector().terms() {
        b.set(i + 2, j + 2, w);
    }
    b
}

/// The bivector `-a p∧q + A - p∧X` in `so(1,n+1)`, with `p`, `q` the rational
/// Witt pair and `X` given on `e_1..e_n`.
pub fn sim_element(n: usize, a: &GR, inner: Option<&SoElement>, x: &[GR]) -> Result<SoElement> {
    let sig = Signature::new(1, n + 1)?;
    let WittFrame::Lorentz { p, q } = witt_frame(sig, WittKind::Lorentz)? else {
        unreachable!()
    };
    if x.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "X with {} coordinates, n = {n}",
            x.len()
        )));
    }
    let mut xv = vec![GR::zero(); n + 2];
    xv[2..].clone_from_slice(x);
    let mut b = Bivector::wedge(&p, &q).scale(&-a);
    if let Some(inner) = inner {
        b = b.add(&embed_spacelike(inner, n));
    }
    b = b.add(&Bivector::wedge(&p, &xv).scale(&GR::from_int(-1)));
    SoElement::from_bivector(sig, b)
}

/// Completion of a basis of `h'` inside `h`: coordinates of each generator of
/// `h` along the completing directions.
fn abelianisation_coords(h: &LieAlgebraRep) -> Result<(usize, Vec<VectorGR>)> {
    let d = derived_algebra(h);
    let mut combined = d.generators.clone();
    let mut span = d.span();
    let mut extra = 0;
    for g in &h.generators {
        if !span.contains(g.coords()) {
            span = span.sum(&crate::exact::SubspaceGR::span(
                span.ambient_dim(),
                &[g.coords().to_vec()],
            )?)?;
            combined.push(g.clone());
            extra += 1;
        }
    }
    let cols: Vec<VectorGR> = combined.iter().map(|g| g.coords().to_vec()).collect();
    let m = MatrixGR::from_columns(&cols, bivector_dim(h.signature))?;
    let base = d.dim();
    let coords = h
        .generators
        .iter()
        .map(|g| {
            let c = m.solve(g.coords()).expect("generator lies in h");
            c[base..].to_vec()
        })
        .collect();
    Ok((extra, coords))
}

fn vanishes_on_derived(h: &LieAlgebraRep, values: &[VectorGR]) -> bool {
    let width = values.first().map_or(0, Vec::len);
    derived_algebra(h).generators.iter().all(|d| {
        let c = h.coordinates(d).expect("h' ⊂ h");
        (0..width).all(|t| {
            c.iter()
                .zip(values)
                .map(|(ck, v)| ck * &v[t])
                .sum::<GR>()
                .is_zero()
        })
    })
}

pub fn sim_algebra(params: &SimParams, n: usize) -> Result<LieAlgebraRep> {
    let h = &params.h;
    if h.signature.r != 0 || h.signature.n() > n {
        return Err(Error::InvalidParams(format!(
            "h must lie in so(0,k) with k ≤ n = {n}, got so{}",
            h.signature
        )));
    }
    let sig = Signature::new(1, n + 1)?;
    let zero_x = vec![GR::zero(); n];
    let unit = |i: usize| {
        let mut v = zero_x.clone();
        v[i] = GR::one();
        v
    };
    let translations = |upto: usize| -> Result<Vec<SoElement>> {
        (0..upto)
            .map(|i| sim_element(n, &GR::zero(), None, &unit(i)))
            .collect()
    };
    let mut gens = Vec::new();
    let t = params.kind.number();
    let mut meta: Vec<(&str, serde_json::Value)> = vec![
        ("type", t.into()),
        ("h", h.name.clone().into()),
        ("n", n.into()),
    ];
    match params.kind {
        SimType::One | SimType::Two => {
            if params.kind == SimType::One {
                gens.push(sim_element(n, &GR::one(), None, &zero_x)?);
            }
            for a in &h.generators {
                gens.push(sim_element(n, &GR::zero(), Some(a), &zero_x)?);
            }
            gens.extend(translations(n)?);
        }
        SimType::Three => {
            let phi = match &params.phi {
                Some(phi) => phi.clone(),
                None => {
                    let (extra, coords) = abelianisation_coords(h)?;
                    if extra == 0 {
                        return Err(Error::InvalidParams(format!(
                            "type 3 needs h ≠ h', but {} is perfect",
                            h.name
                        )));
                    }
                    coords.into_iter().map(|c| c[0].clone()).collect()
                }
            };
            if phi.len() != h.dim() || phi.iter().any(|x| !x.is_real()) {
                return Err(Error::InvalidParams(
                    "φ needs one real value per generator of h".into(),
                ));
            }
            if phi.iter().all(GR::is_zero) {
                return Err(Error::InvalidParams("φ must be nonzero".into()));
            }
            let cols: Vec<VectorGR> = phi.iter().map(|x| vec![x.clone()]).collect();
            if !vanishes_on_derived(h, &cols) {
                return Err(Error::InvalidParams("φ must vanish on h'".into()));
            }
            for (a, f) in h.generators.iter().zip(&phi) {
                gens.push(sim_element(n, f, Some(a), &zero_x)?);
            }
            gens.extend(translations(n)?);
            meta.push(("phi", serde_json::to_value(&phi)?));
        }
        SimType::Four => {
            let m = params
                .m
                .ok_or_else(|| Error::InvalidParams("type 4 needs m".into()))?;
            if m == 0 || m >= n {
                return Err(Error::InvalidParams(format!(
                    "type 4 needs 0 < m < n, got m = {m}, n = {n}"
                )));
            }
            if h.generators
                .iter()
                .any(|a| a.bivector().terms().iter().any(|&(_, j, _)| j >= m))
            {
                return Err(Error::InvalidParams(format!("type 4 needs h ⊂ so({m})")));
            }
            let k = n - m;
            let psi = match &params.psi {
                Some(psi) => psi.clone(),
                None => {
                    let (extra, coords) = abelianisation_coords(h)?;
                    if extra < k {
                        return Err(Error::InvalidParams(format!(
                            "type 4 needs dim h/h' ≥ n - m = {k}, got {extra}"
                        )));
                    }
                    coords.into_iter().map(|c| c[..k].to_vec()).collect()
                }
            };
            if psi.len() != h.dim()
                || psi
                    .iter()
                    .any(|v| v.len() != k || v.iter().any(|x| !x.is_real()))
            {
                return Err(Error::InvalidParams(format!(
                    "ψ needs one real vector of length {k} per generator of h"
                )));
            }
            let rank = if psi.is_empty() {
                0
            } else {
                MatrixGR::from_columns(&psi, k)?.rank()
            };
            if rank != k {
                return Err(Error::InvalidParams("ψ must be surjective".into()));
            }
            if !vanishes_on_derived(h, &psi) {
                return Err(Error::InvalidParams("ψ must vanish on h'".into()));
            }
            for (a, v) in h.generators.iter().zip(&psi) {
                let mut x = zero_x.clone();
                x[m..].clone_from_slice(v);
                gens.push(sim_element(n, &GR::zero(), Some(a), &x)?);
            }
            gens.extend(translations(m)?);
            meta.push(("m", m.into()));
            // X is measured against the rational p, which is √2 times the unit one
            meta.push(("psi_effective", serde_json::to_value(&psi)?));
        }
    }
    let mut g = LieAlgebraRep::new(format!("sim{t}({})", h.name), sig, gens)?;
    for (k, v) in meta {
        g.metadata.insert(k.to_string(), v);
    }
    ensure_closed(g)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NeutralKind {
    Gl,
    Sl,
}

/// `diag(B, -Bᵀ)` on the neutral Witt frame, as `Σ -B_ik e_i∧e*_k`.
pub fn neutral_element(n: usize, b: &MatrixGR) -> Result<SoElement> {
    if b.rows() != n || b.cols() != n {
        return Err(Error::DimensionMismatch(format!("B must be {n}x{n}")));
    }
    let sig = Signature::new(n, n)?;
    let WittFrame::Neutral { e, e_star } = witt_frame(sig, WittKind::Neutral)? else {
        unreachable!()
    };
    let mut acc = Bivector::zero(2 * n);
    for i in 0..n {
        for k in 0..n {
            let c = &b[(i, k)];
            if !c.is_zero() {
                acc = acc.add(&Bivector::wedge(&e[i], &e_star[k]).scale(&-c));
            }
        }
    }
    SoElement::from_bivector(sig, acc)
}

pub fn neutral_algebra(kind: NeutralKind, n: usize) -> Result<LieAlgebraRep> {
    if n == 0 {
        return Err(Error::InvalidParams("neutral algebra needs n ≥ 1".into()));
    }
    let unit = |i: usize, k: usize| {
        let mut b = MatrixGR::zeros(n, n);
        b[(i, k)] = GR::one();
        b
    };
    let mut blocks = Vec::new();
    for i in 0..n {
        for k in 0..n {
            if i != k {
                blocks.push(unit(i, k));
            }
        }
    }
    match kind {
        NeutralKind::Gl => blocks.extend((0..n).map(|i| unit(i, i))),
        NeutralKind::Sl => blocks.extend((0..n - 1).map(|i| &unit(i, i) - &unit(i + 1, i + 1))),
    }
    let gens = blocks
        .iter()
        .map(|b| neutral_element(n, b))
        .collect::<Result<Vec<_>>>()?;
    let name = match kind {
        NeutralKind::Gl => format!("gl({n})"),
        NeutralKind::Sl => format!("sl({n})"),
    };
    let g = LieAlgebraRep::new(name, Signature::new(n, n)?, gens)?;
    Ok(ensure_closed(g)?
        .with_meta("kind", kind)
        .with_meta("blocks", &blocks))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(r: usize, s: usize) -> Signature {
        Signature::new(r, s).unwrap()
    }

    #[test]
    fn unitary_dimensions() {
        let u1 = unitary_family(UnitaryKind::U, 0, 1).unwrap();
        assert_eq!(u1.dim(), 1);
        assert_eq!(u1.generators[0], SoElement::basis(sig(0, 2), 0, 1));
        assert_eq!(unitary_family(UnitaryKind::Su, 0, 2).unwrap().dim(), 3);
        assert_eq!(unitary_family(UnitaryKind::U, 0, 3).unwrap().dim(), 9);
        assert_eq!(unitary_family(UnitaryKind::Sp, 0, 1).unwrap().dim(), 3);
        assert_eq!(unitary_family(UnitaryKind::Sp, 0, 2).unwrap().dim(), 10);
        assert_eq!(unitary_family(UnitaryKind::Sp, 1, 1).unwrap().dim(), 10);
    }

    #[test]
    fn u11_contains_central_j() {
        let g = unitary_family(UnitaryKind::U, 1, 1).unwrap();
        assert_eq!(g.dim(), 4);
        let j = standard_complex_structure(sig(2, 2)).unwrap();
        assert!(g.contains(&j));
        for a in &g.generators {
            assert!(a.bracket(&j).is_zero());
        }
    }

    #[test]
    fn derived_of_u2_is_su2() {
        let u2 = unitary_family(UnitaryKind::U, 0, 2).unwrap();
        let su2 = unitary_family(UnitaryKind::Su, 0, 2).unwrap();
        let d = derived_algebra(&u2);
        assert_eq!(d.span(), su2.span());
        assert_eq!(derived_algebra(&su2).span(), su2.span());
    }

    #[test]
    fn calibration_stabilisers() {
        for c in [
            Calibration::G2,
            Calibration::G2Split,
            Calibration::Spin7,
            Calibration::Spin34,
        ] {
            let g = c.stabilizer().unwrap();
            assert_eq!(g.dim(), c.expected_dim(), "{}", c.name());
            assert!(!g.metadata.contains_key("flag"));
        }
    }

    #[test]
    fn zero_and_degenerate_forms() {
        let s = sig(0, 4);
        let g = form_stabilizer(s, &KForm::zero(4, 2), None).unwrap();
        assert_eq!(g.dim(), 6);
        let f = KForm::from_digits(4, "+12").unwrap();
        let g = form_stabilizer(s, &f, Some(1)).unwrap();
        assert_eq!(g.dim(), 2);
        assert!(g.metadata.contains_key("flag"));
    }

    #[test]
    fn kform_signs() {
        let mut f = KForm::zero(3, 2);
        f.add_term(&[1, 0], GR::one()).unwrap();
        assert_eq!(f.terms.get(&vec![0, 1]), Some(&GR::from_int(-1)));
        f.add_term(&[0, 1], GR::one()).unwrap();
        assert!(f.is_zero());
        f.add_term(&[2, 2], GR::one()).unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn sim_examples() {
        let su2 = unitary_family(UnitaryKind::Su, 0, 2).unwrap();
        let g = sim_algebra(&SimParams::new(SimType::Two, su2), 4).unwrap();
        assert_eq!(g.dim(), 7);

        let zero = LieAlgebraRep::new("0", sig(0, 1), vec![]).unwrap();
        let g = sim_algebra(&SimParams::new(SimType::One, zero), 1).unwrap();
        assert_eq!(g.dim(), 2);
        let s = sig(1, 2);
        let p = vec![GR::one(), GR::one(), GR::zero()];
        let q = vec![GR::ratio(-1, 2), GR::ratio(1, 2), GR::zero()];
        let e1 = vec![GR::zero(), GR::zero(), GR::one()];
        // (1,0,0) = -p∧q, (0,0,e1) = -p∧e1
        let pq = SoElement::from_bivector(s, Bivector::wedge(&p, &q)).unwrap();
        let pe = SoElement::from_bivector(s, Bivector::wedge(&p, &e1)).unwrap();
        assert!(g.contains(&pq) && g.contains(&pe));

        let u1 = unitary_family(UnitaryKind::U, 0, 1).unwrap();
        let mut params = SimParams::new(SimType::Three, u1);
        params.phi = Some(vec![GR::one()]);
        let g = sim_algebra(&params, 2).unwrap();
        assert_eq!(g.dim(), 3);
        assert_eq!(
            g.generators[0],
            sim_element(
                2,
                &GR::one(),
                Some(&params.h.generators[0]),
                &[GR::zero(), GR::zero()]
            )
            .unwrap()
        );
    }

    #[test]
    fn sim_preserves_null_line() {
        let u2 = unitary_family(UnitaryKind::U, 0, 2).unwrap();
        let p = vec![
            GR::one(),
            GR::one(),
            GR::zero(),
            GR::zero(),
            GR::zero(),
            GR::zero(),
        ];
        for t in [SimType::One, SimType::Two, SimType::Three] {
            let g = sim_algebra(&SimParams::new(t, u2.clone()), 4).unwrap();
            for a in &g.generators {
                let ap = a.matrix().mul_vec(&p);
                let k = ap[0].clone();
                assert!(ap.iter().zip(&p).all(|(x, y)| x == &(&k * y)));
            }
        }
        // (a,0,0) acts on p with weight a
        let w = sim_element(4, &GR::from_int(3), None, &vec![GR::zero(); 4]).unwrap();
        assert_eq!(
            w.matrix().mul_vec(&p),
            p.iter().map(|x| x * &GR::from_int(3)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn sim_rejections() {
        let su2 = unitary_family(UnitaryKind::Su, 0, 2).unwrap();
        assert!(sim_algebra(&SimParams::new(SimType::Three, su2.clone()), 4).is_err());
        let mut p = SimParams::new(SimType::Four, su2.clone());
        p.m = Some(2);
        assert!(sim_algebra(&p, 4).is_err());
        let u2 = unitary_family(UnitaryKind::U, 0, 2).unwrap();
        let mut p = SimParams::new(SimType::Three, u2.clone());
        p.phi = Some(vec![GR::zero(); 4]);
        assert!(sim_algebra(&p, 4).is_err());
        assert!(sim_algebra(&SimParams::new(SimType::One, u2), 3).is_err());
    }

    #[test]
    fn sim_type_four() {
        let u1 = unitary_family(UnitaryKind::U, 0, 1).unwrap();
        let mut p = SimParams::new(SimType::Four, u1);
        p.m = Some(3);
        let g = sim_algebra(&p, 4).unwrap();
        // (0, J, e_4) plus translations e_1..e_3
        assert_eq!(g.dim(), 4);
        p.m = Some(2);
        assert!(
            sim_algebra(&p, 4).is_err(),
            "ψ cannot be onto R^2 from a 1-dim h"
        );
    }

    #[test]
    fn neutral_examples() {
        let g = neutral_algebra(NeutralKind::Gl, 1).unwrap();
        assert_eq!(g.dim(), 1);
        assert_eq!(neutral_algebra(NeutralKind::Sl, 2).unwrap().dim(), 3);
        assert_eq!(neutral_algebra(NeutralKind::Gl, 2).unwrap().dim(), 4);
        assert_eq!(neutral_algebra(NeutralKind::Sl, 3).unwrap().dim(), 8);
    }

    #[test]
    fn neutral_blocks_act_as_b() {
        let n = 2;
        let s = sig(n, n);
        let WittFrame::Neutral { e, e_star } = witt_frame(s, WittKind::Neutral).unwrap() else {
            panic!()
        };
        let b = MatrixGR::from_int_rows(&[&[1, 2], &[-3, 5]]);
        let a = neutral_element(n, &b).unwrap();
        for k in 0..n {
            let img = a.matrix().mul_vec(&e[k]);
            let want: Vec<GR> = (0..2 * n)
                .map(|c| (0..n).map(|i| &b[(i, k)] * &e[i][c]).sum())
                .collect();
            assert_eq!(img, want);
            let img = a.matrix().mul_vec(&e_star[k]);
            let want: Vec<GR> = (0..2 * n)
                .map(|c| (0..n).map(|i| -&(&b[(k, i)] * &e_star[i][c])).sum())
                .collect();
            assert_eq!(img, want);
        }
    }
}
