use rand::Rng;
use serde_json::{json, Value};

use super::{ClaimDef, Ctx, SuiteName};
use crate::clifford::{
    blocks, build_rep, half_spinor_split, lorentz_split, two_form_action, vector_action,
    witt_frame, Bivector, CliffordRep, Signature, WittFrame, WittKind,
};
use crate::error::Result;
use crate::exact::{
    char_poly, gaussian_roots, intersect, kernel, rref, GaussianRational as GR, MatrixGR, PolyGR,
    SubspaceGR, VectorGR,
};
use crate::holonomy::{
    derived_algebra, lambda_star, lie_closure_check, neutral_algebra, neutral_element,
    parse_algebra, sim_algebra, so_basis, standard_complex_structure, unitary_family, Calibration,
    LieAlgebraRep, NeutralKind, Normalization, SimParams, SimType, SoElement, UnitaryKind,
};
use crate::invariant::{invariant_lines, joint_kernel, line_count, spinc_exists, LineReport};
use crate::spin_geometry::{
    dirac_current, hermitian_form, induced_complex_structure, is_g_orthogonal, kahler_spectrum,
    neutral_action, t_space, InducedComplex,
};

pub(super) fn definitions(name: SuiteName) -> Vec<ClaimDef> {
    macro_rules! defs {
        ($(($id:literal, $anchor:literal, $f:ident)),* $(,)?) => {
            vec![$(ClaimDef { id: $id, anchor: $anchor, run: $f }),*]
        };
    }
    match name {
        SuiteName::Clifford => defs![
            (
                "clifford.block_identities",
                "2x2 building blocks T, U, V and their action on u(ε)",
                block_identities
            ),
            (
                "clifford.half_spinors",
                "half-spinor modules split by the sign product of basis labels",
                half_spinors
            ),
            (
                "clifford.lambda_homomorphism",
                "λ* as a Lie algebra map so(r,s) → spin(r,s)",
                lambda_homomorphism
            ),
            (
                "clifford.lorentz_split",
                "Lorentzian spinors as Δ_n ⊗ Δ_{1,1} with p killing Δ_n⊗u(1)",
                lorentz_split_claim
            ),
            (
                "clifford.relations",
                "Clifford relations of the tensor-product representation",
                clifford_relations
            ),
            (
                "clifford.witt_frames",
                "isotropic Witt frames with g(p,q) = 1 and g(e_i,e*_j) = δ_ij",
                witt_frames
            ),
            (
                "exact.core_examples",
                "exact Q(i) linear algebra and Gaussian root search",
                exact_examples
            ),
            (
                "holonomy.so_basis",
                "so(r,s) as bivectors acting by (x∧y)z = g(x,z)y - g(y,z)x",
                so_basis_claim
            ),
        ],
        SuiteName::Riemannian => defs![
            (
                "riemannian.derived",
                "derived algebras of u(2) and su(2)",
                derived_claim
            ),
            (
                "riemannian.g2",
                "G2 holonomy: a parallel spinor in Δ_7",
                g2_claim
            ),
            (
                "riemannian.sp1",
                "sp(1) ⊂ so(4) annihilates a family of spinors",
                sp1_claim
            ),
            (
                "riemannian.spin7",
                "Spin(7) holonomy: a parallel spinor in one half of Δ_8",
                spin7_claim
            ),
            (
                "riemannian.su_family",
                "su(m) annihilates a two-dimensional space of spinors",
                su_family
            ),
            (
                "riemannian.u_lines",
                "u(m) preserves exactly two spinor lines, neither annihilated",
                u_lines
            ),
            (
                "pseudo.split_forms",
                "split G2 and Spin(3,4): stabiliser dimensions and parallel spinors",
                split_forms
            ),
            (
                "pseudo.unitary_lines",
                "u(p,q) preserves two lines; su(p,q) annihilates a plane",
                pseudo_unitary
            ),
        ],
        SuiteName::Lorentzian => defs![
            (
                "lorentzian.dirac_isotropic",
                "Dirac current of a recurrent spinor is isotropic and proportional to p",
                dirac_isotropic
            ),
            (
                "lorentzian.dirac_random",
                "Dirac current is causal and vanishes only with the spinor",
                dirac_random
            ),
            (
                "lorentzian.hermitian_forms",
                "spin-invariant Hermitian product on Δ",
                hermitian_forms
            ),
            (
                "lorentzian.p_actions",
                "p∧e_i kills Δ_n⊗u(1); p∧q acts by opposite scalars on the halves",
                p_actions
            ),
            (
                "lorentzian.parallel_vs_recurrent",
                "parallel spinors only for sim type 2",
                parallel_vs_recurrent
            ),
            (
                "lorentzian.sim_lines",
                "invariant lines of sim(n) algebras are l⊗u(1) and match those of h",
                sim_lines
            ),
            (
                "lorentzian.sim_type4",
                "type 4 sim algebra over u(1) ⊂ so(3)",
                sim_type4
            ),
        ],
        SuiteName::Kahler => defs![
            (
                "kahler.extreme_lines",
                "u(m)-invariant lines are the extreme eigenlines of Ω",
                kahler_extreme_lines
            ),
            (
                "kahler.induced_structures",
                "the two u(m) lines induce complex structures I and -I",
                kahler_induced
            ),
            (
                "kahler.spectrum",
                "Ω acts with eigenvalues (m-2k)i of multiplicity binomial(m,k)",
                kahler_spectrum_claim
            ),
            (
                "kahler.t_space_definite",
                "T(s) = 0 for nonzero s in definite signature",
                t_space_definite
            ),
            (
                "kahler.t_space_null",
                "T(s) ≠ 0 prevents a unique induced structure",
                t_space_null
            ),
        ],
        SuiteName::Neutral => defs![
            (
                "neutral.affine_gl",
                "the neutral action formula against λ*, B ∈ gl(n)",
                affine_gl
            ),
            (
                "neutral.affine_sl",
                "the neutral action formula against λ*, B ∈ sl(n)",
                affine_sl
            ),
            (
                "neutral.e_acts_as_n",
                "diag(E, -E) acts on the preserved lines by the scalar n",
                e_acts_as_n
            ),
            (
                "neutral.sl_kernel_lines",
                "sl(n) annihilates spinors; gl(n) preserves the lines",
                sl_kernel_lines
            ),
        ],
        SuiteName::Spinc => defs![
            (
                "spinc.implies_line",
                "a spin^C parallel spinor spans a recurrent line",
                spinc_implies_line
            ),
            (
                "spinc.perturbation",
                "spin^C solutions detach when the charge is perturbed",
                spinc_perturbation
            ),
            (
                "spinc.u2_charge",
                "u(2) with central charge equal to its character",
                spinc_u2
            ),
        ],
        SuiteName::All => Vec::new(),
    }
}

fn s(x: &GR) -> Value {
    Value::String(x.to_string())
}

fn sig(r: usize, sp: usize) -> Signature {
    Signature { r, s: sp }
}

fn rep_of(ctx: &Ctx, sg: Signature) -> Result<CliffordRep> {
    ctx.touch("clifford.build_rep");
    build_rep(sg)
}

fn images(
    ctx: &Ctx,
    g: &LieAlgebraRep,
    rep: &CliffordRep,
    norm: Normalization,
) -> Result<Vec<MatrixGR>> {
    ctx.touch("holonomy.lambda_star");
    g.spin_images(rep, norm, ctx.exec())
}

fn lines_of(
    ctx: &Ctx,
    g: &LieAlgebraRep,
    norm: Normalization,
) -> Result<(CliffordRep, LineReport)> {
    let rep = rep_of(ctx, g.signature)?;
    let imgs = images(ctx, g, &rep, norm)?;
    ctx.touch("invariant.invariant_lines");
    let r = invariant_lines(&imgs, rep.dim(), ctx.exec())?;
    Ok((rep, r))
}

fn report_json(ctx: &Ctx, r: &LineReport) -> Value {
    ctx.touch("invariant.line_count");
    let lc = line_count(r);
    json!({
        "isolated": lc.isolated,
        "families": lc.families,
        "annihilated_isolated": lc.annihilated_isolated,
        "components": r.components.iter().map(|c| json!({
            "dim": c.dim(),
            "annihilated": c.annihilated,
        })).collect::<Vec<_>>(),
        "residual_factors": r.residual_factors.len(),
    })
}

fn random_gr(rng: &mut impl Rng) -> GR {
    let d = rng.random_range(1..=3);
    GR::from_fractions(rng.random_range(-3..=3), d, rng.random_range(-3..=3), d)
}

fn random_nonzero_spinor(rng: &mut impl Rng, dim: usize) -> VectorGR {
    loop {
        let v: VectorGR = (0..dim).map(|_| random_gr(rng)).collect();
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

fn is_nonpositive(x: &GR) -> bool {
    x.is_real() && x.re() <= &num_rational::BigRational::from_integer(0.into())
}

// ---------------------------------------------------------------- clifford

fn clifford_relations(ctx: &Ctx) -> Result<(bool, Value)> {
    let sigs = Signature::all_up_to(ctx.spec.max_n);
    ctx.touch("clifford.build_rep");
    let failures: Vec<String> = ctx
        .exec()
        .map(&sigs, |&sg| {
            let rep = match build_rep(sg) {
                Ok(r) => r,
                Err(e) => return vec![format!("{sg}: {e}")],
            };
            let mut out = Vec::new();
            for i in 0..sg.n() {
                if rep.generator(i).rank() != rep.dim() {
                    out.push(format!("{sg}: e_{} not invertible", i + 1));
                }
                for j in i..sg.n() {
                    let want = if i == j { -2 * sg.k(i) } else { 0 };
                    let ac = rep.generator(i).anticommutator(rep.generator(j));
                    if ac != MatrixGR::scalar(rep.dim(), GR::from_int(want)) {
                        out.push(format!("{sg}: (e_{}, e_{})", i + 1, j + 1));
                    }
                }
            }
            out
        })
        .into_iter()
        .flatten()
        .collect();
    Ok((
        failures.is_empty(),
        json!({ "max_n": ctx.spec.max_n, "signatures": sigs.len(), "failures": failures }),
    ))
}

fn block_identities(_ctx: &Ctx) -> Result<(bool, Value)> {
    let (t, u, v, e) = (blocks::t(), blocks::u(), blocks::v(), blocks::e());
    let i = GR::i();
    let squares = &t * &t == e && &v * &v == -&e && &u * &u == -&e;
    let uv = &u * &v == t.scale(&-&i);
    let mut t_fix = true;
    let mut u_flip = true;
    let mut v_flip = true;
    let mut t_flip = true;
    for eps in [1i8, -1] {
        let k = GR::from_int(eps as i64);
        let ue = blocks::u_vec(eps);
        let um = blocks::u_vec(-eps);
        let scaled = |w: &[GR], c: &GR| w.iter().map(|x| x * c).collect::<VectorGR>();
        t_fix &= t.mul_vec(&ue) == scaled(&ue, &-&k);
        u_flip &= u.mul_vec(&ue) == scaled(&um, &i);
        v_flip &= v.mul_vec(&ue) == scaled(&um, &k);
        t_flip &= t.mul_vec(&ue) == scaled(&um, &k);
    }
    let pass = squares && uv && t_fix && u_flip && v_flip && !t_flip;
    Ok((
        pass,
        json!({
            "squares": squares,
            "uv_equals_minus_i_t": uv,
            "t_fixes_u": t_fix,
            "u_swaps": u_flip,
            "v_swaps_with_sign": v_flip,
            "second_t_identity_holds": t_flip,
            "note": "the second T identity holds for V, not T",
        }),
    ))
}

fn half_spinors(ctx: &Ctx) -> Result<(bool, Value)> {
    ctx.touch("clifford.half_spinor_split");
    let top = ctx.spec.max_n.min(8);
    let sigs: Vec<Signature> = Signature::all_up_to(top)
        .into_iter()
        .filter(|s| s.n() % 2 == 0)
        .collect();
    let failures: Vec<String> = ctx
        .exec()
        .map(&sigs, |&sg| -> Result<Vec<String>> {
            let rep = build_rep(sg)?;
            let (plus, minus) = half_spinor_split(&rep)?;
            let mut out = Vec::new();
            if plus.dim() != rep.dim() / 2 || minus.dim() != rep.dim() / 2 {
                out.push(format!("{sg}: dimensions"));
            }
            for i in 0..sg.n() {
                if plus.image(rep.generator(i))? != minus {
                    out.push(format!("{sg}: e_{} does not swap halves", i + 1));
                }
                for j in i + 1..sg.n() {
                    let p = rep.product(i, j);
                    if !plus.is_invariant_under(&p) || !minus.is_invariant_under(&p) {
                        out.push(format!("{sg}: e_{}e_{} mixes halves", i + 1, j + 1));
                    }
                }
            }
            Ok(out)
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok((
        failures.is_empty(),
        json!({ "max_n": top, "signatures": sigs.len(), "failures": failures }),
    ))
}

fn lambda_homomorphism(ctx: &Ctx) -> Result<(bool, Value)> {
    ctx.touch("holonomy.lambda_star");
    ctx.touch("holonomy.so_basis");
    let top = ctx.spec.max_n.min(8);
    let sigs = Signature::all_up_to(top);
    let rows = ctx
        .exec()
        .map(&sigs, |&sg| -> Result<(usize, usize, usize)> {
            let rep = build_rep(sg)?;
            let basis = so_basis(sg).generators;
            let half: Vec<MatrixGR> = basis
                .iter()
                .map(|a| lambda_star(&rep, a, Normalization::Half))
                .collect::<Result<_>>()?;
            let paper: Vec<MatrixGR> = basis
                .iter()
                .map(|a| lambda_star(&rep, a, Normalization::Paper))
                .collect::<Result<_>>()?;
            let (mut pairs, mut half_bad, mut paper_not_double) = (0, 0, 0);
            for a in 0..basis.len() {
                for b in a + 1..basis.len() {
                    pairs += 1;
                    let br = basis[a].bracket(&basis[b]);
                    if lambda_star(&rep, &br, Normalization::Half)? != half[a].commutator(&half[b])
                    {
                        half_bad += 1;
                    }
                    let lp = lambda_star(&rep, &br, Normalization::Paper)?;
                    if paper[a].commutator(&paper[b]) != lp.scale(&GR::from_int(2)) {
                        paper_not_double += 1;
                    }
                }
            }
            Ok((pairs, half_bad, paper_not_double))
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let pairs: usize = rows.iter().map(|r| r.0).sum();
    let half_bad: usize = rows.iter().map(|r| r.1).sum();
    let paper_not_double: usize = rows.iter().map(|r| r.2).sum();

    // witnessed pair in so(0,3): [e1∧e2, e2∧e3] = -e1∧e3
    let sg = sig(0, 3);
    let rep = build_rep(sg)?;
    let (a, b) = (SoElement::basis(sg, 0, 1), SoElement::basis(sg, 1, 2));
    let br = a.bracket(&b);
    let lhs = lambda_star(&rep, &br, Normalization::Paper)?;
    let rhs = lambda_star(&rep, &a, Normalization::Paper)?.commutator(&lambda_star(
        &rep,
        &b,
        Normalization::Paper,
    )?);
    let paper_fails = lhs != rhs;
    let factor_two = rhs == lhs.scale(&GR::from_int(2));
    let pass = half_bad == 0 && paper_not_double == 0 && paper_fails && factor_two;
    Ok((
        pass,
        json!({
            "max_n": top,
            "basis_pairs": pairs,
            "half_failures": half_bad,
            "paper_pairs_not_off_by_two": paper_not_double,
            "witness_pair": {
                "signature": "(0,3)",
                "a": "e1∧e2",
                "b": "e2∧e3",
                "bracket": "-e1∧e3",
                "paper_commutator_over_lift": "2",
                "paper_is_homomorphism": !paper_fails,
            },
        }),
    ))
}

fn witt_frames(ctx: &Ctx) -> Result<(bool, Value)> {
    ctx.touch("clifford.witt_frame");
    let mut failures = Vec::new();
    let mut checked = 0;
    for sp in 1..ctx.spec.max_n {
        let sg = sig(1, sp);
        let WittFrame::Lorentz { p, q } = witt_frame(sg, WittKind::Lorentz)? else {
            unreachable!()
        };
        checked += 1;
        let ok = sg.g(&p, &p).is_zero() && sg.g(&q, &q).is_zero() && sg.g(&p, &q).is_one();
        let rational = p.iter().chain(&q).all(GR::is_real);
        if !ok || !rational {
            failures.push(format!("lorentz {sg}"));
        }
    }
    for r in 1..=ctx.spec.max_n / 2 {
        let sg = sig(r, r);
        let frame = witt_frame(sg, WittKind::Neutral)?;
        let (e, es) = frame.neutral_pairs().expect("neutral");
        checked += 1;
        for i in 0..r {
            for j in 0..r {
                let delta = if i == j { GR::one() } else { GR::zero() };
                if !sg.g(&e[i], &e[j]).is_zero()
                    || !sg.g(&es[i], &es[j]).is_zero()
                    || sg.g(&e[i], &es[j]) != delta
                {
                    failures.push(format!("neutral {sg} ({i},{j})"));
                }
            }
        }
    }
    let rejects = witt_frame(sig(2, 2), WittKind::Lorentz).is_err()
        && witt_frame(sig(1, 2), WittKind::Neutral).is_err();
    Ok((
        failures.is_empty() && rejects,
        json!({ "frames": checked, "failures": failures, "mismatched_signatures_rejected": rejects }),
    ))
}

fn lorentz_split_claim(ctx: &Ctx) -> Result<(bool, Value)> {
    ctx.touch("clifford.lorentz_split");
    ctx.touch("clifford.vector_action");
    let top = (ctx.spec.max_n.saturating_sub(1)).min(7);
    let mut rows = Vec::new();
    let mut pass = top >= 1;
    for sp in 1..=top {
        let sg = sig(1, sp);
        let rep = build_rep(sg)?;
        let frame = witt_frame(sg, WittKind::Lorentz)?;
        let (p, _) = frame.lorentz_pq().expect("lorentz");
        let a = vector_action(&rep, p)?;
        let nilpotent = (&a * &a).is_zero();
        let rank = a.rank();
        let split = lorentz_split(&rep)?;
        let ok = nilpotent
            && rank == rep.dim() / 2
            && split.sub_plus.dim() == rep.dim() / 2
            && split.slot == 1;
        pass &= ok;
        rows.push(json!({ "signature": sg.to_string(), "nilpotent": nilpotent, "rank": rank, "dim": rep.dim(), "slot": split.slot }));
    }
    Ok((pass, json!({ "signatures": rows })))
}

fn exact_examples(ctx: &Ctx) -> Result<(bool, Value)> {
    for op in [
        "exact.parse_scalar",
        "exact.rref",
        "exact.kernel",
        "exact.intersect",
        "exact.char_poly",
        "exact.gaussian_roots",
    ] {
        ctx.touch(op);
    }
    let x: GR = "3/4-5/6i".parse()?;
    let text_ok = x.to_string() == "3/4-5/6i" && "i".parse::<GR>()? == GR::i();
    let m = MatrixGR::from_int_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
    let (r, rank) = rref(&m);
    let rref_ok = rank == 2 && r == MatrixGR::from_int_rows(&[&[1, 0, 1], &[0, 1, 1], &[0, 0, 0]]);
    let k = kernel(&m);
    let kernel_ok =
        k.dim() == 1 && k.contains(&[GR::from_int(1), GR::from_int(1), GR::from_int(-1)]);
    let a = SubspaceGR::coordinate(3, &[0, 1]);
    let b = SubspaceGR::coordinate(3, &[1, 2]);
    let meet_ok = intersect(&a, &b)? == SubspaceGR::coordinate(3, &[1]);
    let j = MatrixGR::from_int_rows(&[&[0, -1], &[1, 0]]);
    let cp = char_poly(&j)?;
    let cp_ok = cp == PolyGR::from_ints(&[1, 0, 1]);
    let roots = gaussian_roots(&cp)?;
    let roots_ok = roots.roots == vec![GR::from_ints(0, -1), GR::from_ints(0, 1)];
    let pass = text_ok && rref_ok && kernel_ok && meet_ok && cp_ok && roots_ok;
    Ok((
        pass,
        json!({
            "scalar_text": text_ok, "rref": rref_ok, "kernel": kernel_ok,
            "intersect": meet_ok, "char_poly": cp.to_string(), "roots": roots.roots.iter().map(s).collect::<Vec<_>>(),
        }),
    ))
}

fn so_basis_claim(ctx: &Ctx) -> Result<(bool, Value)> {
    ctx.touch("holonomy.so_basis");
    ctx.touch("holonomy.lie_closure_check");
    let top = ctx.spec.max_n.min(8);
    let sigs = Signature::all_up_to(top);
    let bad: Vec<String> = ctx
        .exec()
        .map(&sigs, |&sg| {
            let g = so_basis(sg);
            let n = sg.n();
            let ok = g.dim() == n * (n - 1) / 2
                && g.generators.iter().all(SoElement::is_g_skew)
                && lie_closure_check(&g).closed;
            (!ok).then(|| sg.to_string())
        })
        .into_iter()
        .flatten()
        .collect();
    let sg = sig(0, 3);
    let pair = LieAlgebraRep::new(
        "pair",
        sg,
        vec![SoElement::basis(sg, 0, 1), SoElement::basis(sg, 1, 2)],
    )?;
    let c = lie_closure_check(&pair);
    let witness_ok = !c.closed
        && c.witness.as_ref().map(|w| w.residual.clone())
            == Some(
                SoElement::basis(sg, 0, 2)
                    .scale(&GR::from_int(-1))
                    .coords()
                    .to_vec(),
            );
    Ok((
        bad.is_empty() && witness_ok,
        json!({ "max_n": top, "failures": bad, "non_closed_pair_detected": witness_ok }),
    ))
}

// ---------------------------------------------------------------- riemannian

fn unitary_checks(ctx: &Ctx, kind: UnitaryKind) -> Result<(bool, Value)> {
    ctx.touch("holonomy.unitary_family");
    let ms: Vec<usize> = (2..=4).filter(|m| 2 * m <= ctx.spec.max_n).collect();
    let mut pass = !ms.is_empty();
    let mut rows = Vec::new();
    for m in ms {
        let g = unitary_family(kind, 0, m)?;
        let (_, r) = lines_of(ctx, &g, ctx.norm())?;
        let ok = match kind {
            UnitaryKind::U => {
                r.components.len() == 2
                    && r.isolated_count == 2
                    && r.components.iter().all(|c| !c.annihilated)
            }
            _ => {
                r.components.len() == 1
                    && r.isolated_count == 0
                    && r.components[0].annihilated
                    && r.components[0].dim() == 2
            }
        };
        pass &= ok;
        rows.push(
            json!({ "m": m, "algebra": g.name, "dim": g.dim(), "lines": report_json(ctx, &r) }),
        );
    }
    Ok((pass, json!({ "normalization": ctx.norm(), "cases": rows })))
}

fn u_lines(ctx: &Ctx) -> Result<(bool, Value)> {
    unitary_checks(ctx, UnitaryKind::U)
}

fn su_family(ctx: &Ctx) -> Result<(bool, Value)> {
    unitary_checks(ctx, UnitaryKind::Su)
}

fn g2_claim(ctx: &Ctx) -> Result<(bool, Value)> {
    ctx.touch("holonomy.form_stabilizer");
    let g = Calibration::G2.stabilizer()?;
    let (_, r) = lines_of(ctx, &g, ctx.norm())?;
    let pass = g.dim() == 14
        && r.components.len() == 1
        && r.components[0].annihilated
        && r.components[0].isolated;
    Ok((
        pass,
        json!({ "dim": g.dim(), "lines": report_json(ctx, &r) }),
    ))
}

fn spin7_claim(ctx: &Ctx) -> Result<(bool, Value)> {
    ctx.touch("holonomy.form_stabilizer");
    ctx.touch("clifford.half_spinor_split");
    let g = Calibration::Spin7.stabilizer()?;
    let (rep, r) = lines_of(ctx, &g, ctx.norm())?;
    let (plus, minus) = half_spinor_split(&rep)?;
    let one = r.components.len() == 1 && r.components[0].annihilated;
    let half = r.components.first().map(|c| {
        if c.subspace.is_subspace_of(&plus) {
            "plus"
        } else if c.subspace.is_subspace_of(&minus) {
            "minus"
        } else {
            "neither"
        }
    });
    let pass = g.dim() == 21 && one && matches!(half, Some("plus") | Some("minus"));
    Ok((
        pass,
        json!({ "dim": g.dim(), "lines": report_json(ctx, &r), "half": half }),
    ))
}

fn sp1_claim(ctx: &Ctx) -> Result<(bool, Value)> {
    ctx.touch("holonomy.unitary_family");
    let mut rows = Vec::new();
    let g = unitary_family(UnitaryKind::Sp, 0, 1)?;
    let (_, r) = lines_of(ctx, &g, ctx.norm())?;
    let pass = g.dim() == 3 && r.components.iter().any(|c| c.annihilated && c.dim() >= 2);
    rows.push(json!({ "algebra": g.name, "dim": g.dim(), "lines": report_json(ctx, &r) }));
    if ctx.spec.max_n >= 8 {
        let g = unitary_family(UnitaryKind::Sp, 0, 2)?;
        let (_, r) = lines_of(ctx, &g, ctx.norm())?;
        rows.push(json!({ "algebra": g.name, "dim": g.dim(), "lines": report_json(ctx, &r) }));
    }
    Ok((pass, json!({ "cases": rows })))
}

fn derived_claim(ctx: &Ctx) -> Result<(bool, Value)> {
    ctx.touch("holonomy.derived_algebra");
    ctx.touch("holonomy.parse_algebra");
    let u2 = parse_algebra("u:0,2")?;
    let su2 = parse_algebra("su:0,2")?;
    let du = derived_algebra(&u2);
    let dsu = derived_algebra(&su2);
    let sg = sig(0, 4);
    let abelian = LieAlgebraRep::new(
        "t2",
        sg,
        vec![SoElement::basis(sg, 0, 1), SoElement::basis(sg, 2, 3)],
    )?;
    let da = derived_algebra(&abelian);
    ctx.touch("invariant.joint_kernel");
    let rep = rep_of(ctx, sg)?;
    let k = joint_kernel(&images(ctx, &su2, &rep, ctx.norm())?, rep.dim())?;
    let pass = du.span() == su2.span() && dsu.span() == su2.span() && da.dim() == 0 && k.dim() == 2;
    Ok((
        pass,
        json!({ "derived_u2_dim": du.dim(), "derived_su2_dim": dsu.dim(), "derived_torus_dim": da.dim(), "su2_joint_kernel_dim": k.dim() }),
    ))
}

fn split_forms(ctx: &Ctx) -> Result<(bool, Value)> {
    ctx.touch("holonomy.form_stabilizer");
    let mut pass = true;
    let mut rows = Vec::new();
    for c in [Calibration::G2Split, Calibration::Spin34] {
        let g = c.stabilizer()?;
        let (_, r) = lines_of(ctx, &g, ctx.norm())?;
        let annihilated: Vec<usize> = r
            .components
            .iter()
            .filter(|x| x.annihilated)
            .map(|x| x.dim())
            .collect();
        let ok = g.dim() == c.expected_dim() && annihilated == vec![1];
        pass &= ok;
        rows.push(json!({ "algebra": c.name(), "signature": g.signature.to_string(), "dim": g.dim(), "lines": report_json(ctx, &r) }));
    }
    Ok((pass, json!({ "cases": rows })))
}

fn pseudo_unitary(ctx: &Ctx) -> Result<(bool, Value)> {
    ctx.touch("holonomy.unitary_family");
    let mut pass = true;
    let mut rows = Vec::new();
    let cases: Vec<(usize, usize)> = [(1, 1), (1, 2)]
        .into_iter()
        .filter(|(p, q)| 2 * (p + q) <= ctx.spec.max_n)
        .collect();
    for (p, q) in cases {
        for kind in [UnitaryKind::U, UnitaryKind::Su] {
            let g = unitary_family(kind, p, q)?;
            let (_, r) = lines_of(ctx, &g, ctx.norm())?;
            let ok = match kind {
                UnitaryKind::U => {
                    r.isolated_count == 2
                        && r.components.len() == 2
                        && r.components.iter().all(|c| !c.annihilated)
                }
                _ => {
                    r.components.len() == 1
                        && r.components[0].annihilated
                        && r.components[0].dim() == 2
                }
            };
            pass &= ok;
            rows.push(json!({ "algebra": g.name, "lines": report_json(ctx, &r) }));
        }
    }
    Ok((pass, json!({ "cases": rows })))
}

// ---------------------------------------------------------------- lorentzian

struct SimCase {
    label: String,
    report: Option<LineReport>,
    error: Option<String>,
}

fn h_algebras() -> Result<Vec<(&'static str, LieAlgebraRep)>> {
    Ok(vec![
        ("u(2)", unitary_family(UnitaryKind::U, 0, 2)?),
        ("su(2)", unitary_family(UnitaryKind::Su, 0, 2)?),
    ])
}

fn sim_case(ctx: &Ctx, params: &SimParams, n: usize, norm: Normalization) -> Result<SimCase> {
    ctx.touch("holonomy.sim_algebra");
    let label = format!("type {} over {}", params.kind.number(), params.h.name);
    match sim_algebra(params, n) {
        Ok(g) => {
            let (_, r) = lines_of(ctx, &g, norm)?;
            Ok(SimCase {
                label,
                report: Some(r),
                error: None,
            })
        }
        Err(e) => Ok(SimCase {
            label,
            report: None,
            error: Some(e.to_string()),
        }),
    }
}

fn all_sim_cases(ctx: &Ctx, norm: Normalization) -> Result<Vec<(String, LineReport, SimCase)>> {
    let mut out = Vec::new();
    for (name, h) in h_algebras()? {
        let (_, hr) = lines_of(ctx, &h, norm)?;
        for kind in [SimType::One, SimType::Two, SimType::Three, SimType::Four] {
            let mut params = SimParams::new(kind, h.clone());
            if kind == SimType::Four {
                params.m = Some(3);
            }
            out.push((
                name.to_string(),
                hr.clone(),
                sim_case(ctx, &params, 4, norm)?,
            ));
        }
    }
    Ok(out)
}

fn sim_lines(ctx: &Ctx) -> Result<(bool, Value)> {
    ctx.touch("clifford.lorentz_split");
    let rep = rep_of(ctx, sig(1, 5))?;
    let split = lorentz_split(&rep)?;
    let mut pass = true;
    let mut constructed = 0;
    let mut rows = Vec::new();
    for (h, hr, case) in all_sim_cases(ctx, ctx.norm())? {
        match (&case.report, &case.error) {
            (Some(r), _) => {
                constructed += 1;
                let inside = r
                    .components
                    .iter()
                    .all(|c| c.subspace.is_subspace_of(&split.sub_plus));
                let counts =
                    (r.isolated_count, r.family_count) == (hr.isolated_count, hr.family_count);
                pass &= inside && counts && r.residual_factors.is_empty();
                rows.push(json!({
                    "case": case.label, "h": h, "inside_delta_n_tensor_u1": inside, "counts_match": counts,
                    "sim": report_json(ctx, r), "h_on_delta_4": report_json(ctx, &hr),
                }));
            }
            (None, err) => rows
                .push(json!({ "case": case.label, "h": h, "constructible": false, "reason": err })),
        }
    }
    Ok((
        pass && constructed > 0,
        json!({ "normalization": ctx.norm(), "n": 4, "cases": rows }),
    ))
}

fn sim_type4(ctx: &Ctx) -> Result<(bool, Value)> {
    let rep = rep_of(ctx, sig(1, 5))?;
    let split = lorentz_split(&rep)?;
    let mut params = SimParams::new(SimType::Four, unitary_family(UnitaryKind::U, 0, 1)?);
    params.m = Some(3);
    let case = sim_case(ctx, &params, 4, ctx.norm())?;
    // h = u(1) acting on e1, e2 inside so(4)
    let sg = sig(0, 4);
    let h4 = LieAlgebraRep::new("u(1) ⊂ so(4)", sg, vec![SoElement::basis(sg, 0, 1)])?;
    let (_, hr) = lines_of(ctx, &h4, ctx.norm())?;
    let Some(r) = case.report else {
        return Ok((false, json!({ "error": case.error })));
    };
    let inside = r
        .components
        .iter()
        .all(|c| c.subspace.is_subspace_of(&split.sub_plus));
    let counts = (r.isolated_count, r.family_count) == (hr.isolated_count, hr.family_count);
    Ok((
        inside && counts,
        json!({ "m": 3, "psi": "ψ(J) = 1", "inside_delta_n_tensor_u1": inside, "sim": report_json(ctx, &r), "h_on_delta_4": report_json(ctx, &hr) }),
    ))
}

fn p_actions(ctx: &Ctx) -> Result<(bool, Value)> {
    ctx.touch("clifford.two_form_action");
    let sg = sig(1, 5);
    let rep = rep_of(ctx, sg)?;
    let split = lorentz_split(&rep)?;
    let frame = witt_frame(sg, WittKind::Lorentz)?;
    let (p, q) = frame.lorentz_pq().expect("lorentz");
    let mut kills = true;
    for i in 2..sg.n() {
        let w = two_form_action(&rep, &Bivector::wedge(&sg.unit(i), p))?;
        kills &= split
            .sub_plus
            .basis()
            .iter()
            .all(|b| w.mul_vec(b).iter().all(GR::is_zero));
    }
    let pq = two_form_action(&rep, &Bivector::wedge(p, q))?;
    let on = |sub: &SubspaceGR, m: &MatrixGR| sub.restrict(m).ok().and_then(|r| r.scalar_value());
    let mut scalars = serde_json::Map::new();
    let mut pass = kills;
    for (norm, m) in [
        (Normalization::Paper, pq.clone()),
        (Normalization::Half, pq.scale(&GR::ratio(1, 2))),
    ] {
        let plus = on(&split.sub_plus, &m);
        let minus = on(&split.sub_minus, &m);
        let ok = match (&plus, &minus) {
            (Some(a), Some(b)) => !a.is_zero() && a == &-b,
            _ => false,
        };
        pass &= ok;
        scalars.insert(
            norm.to_string(),
            json!({ "on_delta_n_tensor_u1": plus.as_ref().map(s), "on_delta_n_tensor_u_minus1": minus.as_ref().map(s) }),
        );
    }
    Ok((
        pass,
        json!({ "e_i_wedge_p_kills": kills, "p_wedge_q_scalars": scalars, "reference_constant": "2", "frame": "p = e_- + e_+, q = (e_+ - e_-)/2" }),
    ))
}

fn parallel_vs_recurrent(ctx: &Ctx) -> Result<(bool, Value)> {
    let cases = all_sim_cases(ctx, ctx.norm())?;
    let find = |h: &str, t: u8| {
        cases
            .iter()
            .find(|(name, _, c)| name == h && c.label.starts_with(&format!("type {t} ")))
            .and_then(|(_, _, c)| c.report.as_ref())
    };
    let any_ann = |r: Option<&LineReport>| r.map(|r| r.components.iter().any(|c| c.annihilated));
    let t2 = any_ann(find("su(2)", 2));
    let t1 = any_ann(find("su(2)", 1));
    let t3 = any_ann(find("u(2)", 3));
    let t1u = any_ann(find("u(2)", 1));
    let t2u = any_ann(find("u(2)", 2));
    let t3_su_constructible = find("su(2)", 3).is_some();
    let pass = t2 == Some(true) && t1 == Some(false) && t3 == Some(false) && t1u == Some(false);
    Ok((
        pass,
        json!({
            "type2_su2_annihilated": t2, "type1_su2_annihilated": t1,
            "type3_u2_annihilated": t3, "type1_u2_annihilated": t1u, "type2_u2_annihilated": t2u,
            "type3_su2_constructible": t3_su_constructible,
            "note": "su(2) is perfect, so type 3 is taken over u(2)",
        }),
    ))
}

fn dirac_isotropic(ctx: &Ctx) -> Result<(bool, Value)> {
    ctx.touch("spin_geometry.hermitian_form");
    ctx.touch("spin_geometry.dirac_current");
    let sg = sig(1, 5);
    let rep = rep_of(ctx, sg)?;
    let form = hermitian_form(&rep)?;
    let frame = witt_frame(sg, WittKind::Lorentz)?;
    let (p, _) = frame.lorentz_pq().expect("lorentz");
    let mut checked = 0;
    let mut bad = Vec::new();
    for (_, _, case) in all_sim_cases(ctx, ctx.norm())? {
        let Some(r) = case.report else { continue };
        for c in r.components.iter().filter(|c| c.isolated) {
            let v = &c.subspace.basis()[0];
            let pd = dirac_current(&rep, &form, v)?;
            checked += 1;
            if !(pd.norm(sg).is_zero() && pd.is_multiple_of(p) && !pd.is_zero()) {
                bad.push(case.label.clone());
            }
        }
    }
    Ok((
        checked > 0 && bad.is_empty(),
        json!({ "isolated_lines_checked": checked, "failures": bad }),
    ))
}

fn dirac_random(ctx: &Ctx) -> Result<(bool, Value)> {
    ctx.touch("spin_geometry.dirac_current");
    let mut pass = true;
    let mut rows = Vec::new();
    for sp in [3usize, 5] {
        let sg = sig(1, sp);
        let rep = rep_of(ctx, sg)?;
        let form = hermitian_form(&rep)?;
        let mut rng = ctx.rng(&format!("dirac{sp}"));
        let zero = dirac_current(&rep, &form, &vec![GR::zero(); rep.dim()])?.is_zero();
        let (mut causal_bad, mut vanishing_bad, mut isotropic) = (0, 0, 0);
        let samples = 100;
        for _ in 0..samples {
            let s = random_nonzero_spinor(&mut rng, rep.dim());
            let pd = dirac_current(&rep, &form, &s)?;
            let g = pd.norm(sg);
            if !is_nonpositive(&g) {
                causal_bad += 1;
            }
            if g.is_zero() {
                isotropic += 1;
            }
            if pd.is_zero() {
                vanishing_bad += 1;
            }
        }
        let ok = zero && causal_bad == 0 && vanishing_bad == 0;
        pass &= ok;
        rows.push(json!({
            "signature": sg.to_string(), "samples": samples, "zero_spinor_zero_current": zero,
            "non_causal": causal_bad, "zero_current_nonzero_spinor": vanishing_bad, "isotropic_samples": isotropic,
        }));
    }
    Ok((pass, json!({ "seed": ctx.spec.seed, "signatures": rows })))
}

fn hermitian_forms(ctx: &Ctx) -> Result<(bool, Value)> {
    ctx.touch("spin_geometry.hermitian_form");
    let top = ctx.spec.max_n.min(10);
    let sigs: Vec<Signature> = (1..=top)
        .flat_map(|n| [sig(0, n), sig(1, n - 1)])
        .filter(|s| s.n() >= 1)
        .collect();
    let rows: Vec<(String, std::result::Result<i8, String>)> = ctx.exec().map(&sigs, |&sg| {
        let r = build_rep(sg)
            .and_then(|rep| hermitian_form(&rep))
            .map(|f| f.kappa)
            .map_err(|e| e.to_string());
        (sg.to_string(), r)
    });
    let failures: Vec<&String> = rows
        .iter()
        .filter(|(_, r)| r.is_err())
        .map(|(s, _)| s)
        .collect();
    let kappas: std::collections::BTreeMap<String, i8> = rows
        .iter()
        .filter_map(|(s, r)| r.as_ref().ok().map(|k| (s.clone(), *k)))
        .collect();
    let lorentz_kappa_one = rows
        .iter()
        .all(|(s, r)| !s.starts_with("(1,") || r == &Ok(1));
    Ok((
        failures.is_empty() && lorentz_kappa_one,
        json!({ "max_n": top, "failures": failures, "kappa": kappas }),
    ))
}

// ---------------------------------------------------------------- kahler

fn binomial(m: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (m - i) / (i + 1))
}

fn kahler_spectrum_claim(ctx: &Ctx) -> Result<(bool, Value)> {
    ctx.touch("spin_geometry.kahler_spectrum");
    let mut pass = true;
    let mut rows = Vec::new();
    let mut sigs: Vec<Signature> = (1..=4)
        .filter(|m| 2 * m <= ctx.spec.max_n)
        .map(|m| sig(0, 2 * m))
        .collect();
    sigs.extend(
        [sig(2, 2), sig(2, 4)]
            .into_iter()
            .filter(|s| s.n() <= ctx.spec.max_n),
    );
    for sg in sigs {
        let m = sg.n() / 2;
        let rep = rep_of(ctx, sg)?;
        let k = kahler_spectrum(&rep, &standard_complex_structure(sg)?)?;
        let want: Vec<(GR, usize)> = (0..=m)
            .map(|j| (GR::from_ints(0, m as i64 - 2 * j as i64), binomial(m, j)))
            .collect();
        let ok = k.spectrum == want;
        pass &= ok;
        rows.push(json!({
            "signature": sg.to_string(), "m": m,
            "spectrum": k.spectrum.iter().map(|(l, mult)| json!([l.to_string(), mult])).collect::<Vec<_>>(),
        }));
    }
    Ok((pass, json!({ "cases": rows })))
}

fn u_lines_with_rep(ctx: &Ctx, m: usize) -> Result<(CliffordRep, LineReport)> {
    let g = unitary_family(UnitaryKind::U, 0, m)?;
    lines_of(ctx, &g, ctx.norm())
}

fn kahler_extreme_lines(ctx: &Ctx) -> Result<(bool, Value)> {
    let mut pass = true;
    let mut rows = Vec::new();
    for m in (1..=4).filter(|m| 2 * m <= ctx.spec.max_n) {
        let (rep, r) = u_lines_with_rep(ctx, m)?;
        let k = kahler_spectrum(&rep, &standard_complex_structure(rep.signature())?)?;
        let top = GR::from_ints(0, m as i64);
        let (sp_top, sp_bottom) = (k.eigenspace(&top), k.eigenspace(&-&top));
        let mut assignment = Vec::new();
        for c in &r.components {
            let which = if c.subspace == sp_top {
                "+mi"
            } else if c.subspace == sp_bottom {
                "-mi"
            } else {
                "other"
            };
            assignment.push(which);
        }
        assignment.sort();
        let ok = sp_top.dim() == 1 && sp_bottom.dim() == 1 && assignment == vec!["+mi", "-mi"];
        pass &= ok;
        rows.push(json!({ "m": m, "lines_in": assignment }));
    }
    Ok((pass, json!({ "cases": rows })))
}

fn kahler_induced(ctx: &Ctx) -> Result<(bool, Value)> {
    ctx.touch("spin_geometry.induced_complex_structure");
    let mut pass = true;
    let mut rows = Vec::new();
    for m in (1..=4).filter(|m| 2 * m <= ctx.spec.max_n) {
        let (rep, r) = u_lines_with_rep(ctx, m)?;
        let j = standard_complex_structure(rep.signature())?;
        let mut found = Vec::new();
        for c in &r.components {
            if let InducedComplex::Structure { i } =
                induced_complex_structure(&rep, &c.subspace.basis()[0])?
            {
                found.push(i);
            }
        }
        let ok = found.len() == 2
            && found[0] == -&found[1]
            && found.iter().all(|i| {
                i * i == -&MatrixGR::identity(2 * m)
                    && is_g_orthogonal(rep.signature(), i)
                    && (i == j.matrix() || i == &-j.matrix())
            });
        pass &= ok;
        let signs: Vec<&str> = found
            .iter()
            .map(|i| if i == j.matrix() { "+J" } else { "-J" })
            .collect();
        rows.push(json!({ "m": m, "structures": found.len(), "equal_to": signs }));
    }
    Ok((pass, json!({ "cases": rows })))
}

fn t_space_definite(ctx: &Ctx) -> Result<(bool, Value)> {
    ctx.touch("spin_geometry.t_space");
    let mut pass = true;
    let mut rows = Vec::new();
    for n in 2..=ctx.spec.max_n.min(8) {
        let sg = sig(0, n);
        let rep = rep_of(ctx, sg)?;
        let mut rng = ctx.rng(&format!("tspace{n}"));
        let full = t_space(&rep, &vec![GR::zero(); rep.dim()])?.dim() == n;
        let mut nonzero = 0;
        let samples = 20;
        for _ in 0..samples {
            let s = random_nonzero_spinor(&mut rng, rep.dim());
            if !t_space(&rep, &s)?.is_zero() {
                nonzero += 1;
            }
        }
        pass &= full && nonzero == 0;
        rows.push(json!({ "n": n, "samples": samples, "zero_spinor_full": full, "nonzero_t_space": nonzero }));
    }
    Ok((pass, json!({ "seed": ctx.spec.seed, "cases": rows })))
}

fn t_space_null(ctx: &Ctx) -> Result<(bool, Value)> {
    let sg = sig(1, 1);
    let rep = rep_of(ctx, sg)?;
    let s = blocks::u_vec(1);
    let t = t_space(&rep, &s)?;
    let frame = witt_frame(sg, WittKind::Lorentz)?;
    let (p, _) = frame.lorentz_pq().expect("lorentz");
    let contains_p = t.contains(p);
    let outcome = induced_complex_structure(&rep, &s)?;
    let not_unique = matches!(outcome, InducedComplex::NotUnique { .. });
    Ok((
        contains_p && not_unique,
        json!({ "t_dim": t.dim(), "contains_p": contains_p, "outcome": outcome }),
    ))
}

// ---------------------------------------------------------------- neutral

fn neutral_lines(ctx: &Ctx, n: usize) -> Result<(CliffordRep, SubspaceGR, LineReport)> {
    ctx.touch("holonomy.neutral_algebra");
    ctx.touch("invariant.joint_kernel");
    let sl = neutral_algebra(NeutralKind::Sl, n)?;
    let gl = neutral_algebra(NeutralKind::Gl, n)?;
    let rep = rep_of(ctx, sl.signature)?;
    let k = joint_kernel(&images(ctx, &sl, &rep, ctx.norm())?, rep.dim())?;
    let (_, r) = lines_of(ctx, &gl, ctx.norm())?;
    Ok((rep, k, r))
}

fn e_character(
    rep: &CliffordRep,
    n: usize,
    norm: Normalization,
    line: &SubspaceGR,
) -> Result<Option<GR>> {
    let e = neutral_element(n, &MatrixGR::identity(n))?;
    let m = lambda_star(rep, &e, norm)?;
    Ok(line.restrict(&m).ok().and_then(|r| r.scalar_value()))
}

fn sl_kernel_lines(ctx: &Ctx) -> Result<(bool, Value)> {
    let mut pass = true;
    let mut rows = Vec::new();
    for n in [2usize, 3].into_iter().filter(|n| 2 * n <= ctx.spec.max_n) {
        let (rep, k, r) = neutral_lines(ctx, n)?;
        let inside: Vec<&SubspaceGR> = r
            .components
            .iter()
            .filter(|c| c.isolated && c.subspace.is_subspace_of(&k))
            .map(|c| &c.subspace)
            .collect();
        let mut sum = SubspaceGR::zero(rep.dim());
        for l in &inside {
            sum = sum.sum(l)?;
        }
        let mut chars = Vec::new();
        for l in &inside {
            chars.push(e_character(&rep, n, ctx.norm(), l)?);
        }
        let ok = !k.is_zero()
            && sum == k
            && chars
                .iter()
                .all(|c| c.as_ref().is_some_and(|x| !x.is_zero()));
        pass &= ok;
        rows.push(json!({
            "n": n, "sl_joint_kernel_dim": k.dim(), "gl_lines_in_kernel": inside.len(),
            "e_character": chars.iter().map(|c| c.as_ref().map(s)).collect::<Vec<_>>(),
            "gl": report_json(ctx, &r),
        }));
    }
    Ok((pass, json!({ "normalization": ctx.norm(), "cases": rows })))
}

fn random_b(rng: &mut impl Rng, n: usize, traceless: bool) -> MatrixGR {
    let mut b = MatrixGR::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            b[(i, j)] = GR::from_int(rng.random_range(-3..=3));
        }
    }
    if traceless {
        let t = b.trace();
        b[(n - 1, n - 1)] -= &t;
    }
    b
}

fn affine_claim(ctx: &Ctx, traceless: bool) -> Result<(bool, Value)> {
    ctx.touch("spin_geometry.neutral_action");
    let mut pass = true;
    let mut rows = Vec::new();
    for n in [2usize, 3].into_iter().filter(|n| 2 * n <= ctx.spec.max_n) {
        let sg = sig(n, n);
        let rep = rep_of(ctx, sg)?;
        let frame = witt_frame(sg, WittKind::Neutral)?;
        let zero = neutral_action(&rep, &frame, &MatrixGR::zeros(n, n))?;
        let zero_ok = zero.formula == MatrixGR::scalar(rep.dim(), GR::ratio(n as i64, 2));
        let mut rng = ctx.rng(&format!("affine{n}{traceless}"));
        let mut bs: Vec<MatrixGR> = (0..12).map(|_| random_b(&mut rng, n, traceless)).collect();
        if !traceless {
            bs.push(MatrixGR::identity(n));
        }
        let mut per_norm = serde_json::Map::new();
        for norm in [Normalization::Half, Normalization::Paper] {
            let mut matches = Vec::new();
            let mut trace_rule = true;
            for b in &bs {
                let act = neutral_action(&rep, &frame, b)?;
                let am = match norm {
                    Normalization::Half => act.affine_half,
                    Normalization::Paper => act.affine_paper,
                };
                if let Some(a) = &am {
                    // β = n/2 - tr(B)/2
                    let want = &GR::ratio(n as i64, 2) - &(&b.trace() * &GR::ratio(1, 2));
                    trace_rule &= a.beta == want;
                }
                matches.push(am);
            }
            let all_exist = matches.iter().all(Option::is_some);
            let alphas: Vec<String> = matches
                .iter()
                .flatten()
                .filter_map(|m| m.alpha.as_ref().map(|a| a.to_string()))
                .collect();
            let betas: Vec<String> = matches
                .iter()
                .flatten()
                .map(|m| m.beta.to_string())
                .collect();
            let same = |v: &[String]| v.windows(2).all(|w| w[0] == w[1]);
            let independent = all_exist && same(&alphas) && same(&betas);
            pass &= independent;
            per_norm.insert(
                norm.to_string(),
                json!({
                    "all_match": all_exist, "b_independent": independent,
                    "alpha": alphas.first(), "betas": betas, "beta_is_half_n_minus_half_trace": trace_rule,
                }),
            );
        }
        pass &= zero_ok;
        rows.push(json!({ "n": n, "samples": bs.len(), "zero_b_gives_half_n": zero_ok, "matches": per_norm }));
    }
    Ok((
        pass,
        json!({ "seed": ctx.spec.seed, "traceless": traceless, "cases": rows }),
    ))
}

fn affine_sl(ctx: &Ctx) -> Result<(bool, Value)> {
    affine_claim(ctx, true)
}

fn affine_gl(ctx: &Ctx) -> Result<(bool, Value)> {
    affine_claim(ctx, false)
}

fn e_acts_as_n(ctx: &Ctx) -> Result<(bool, Value)> {
    let mut pass = true;
    let mut rows = Vec::new();
    for n in [2usize, 3].into_iter().filter(|n| 2 * n <= ctx.spec.max_n) {
        let (rep, k, r) = neutral_lines(ctx, n)?;
        let nn = GR::from_int(n as i64);
        let mut paper = Vec::new();
        let mut half = Vec::new();
        for c in r
            .components
            .iter()
            .filter(|c| c.isolated && c.subspace.is_subspace_of(&k))
        {
            paper.push(e_character(&rep, n, Normalization::Paper, &c.subspace)?);
            half.push(e_character(&rep, n, Normalization::Half, &c.subspace)?);
        }
        let e = neutral_element(n, &MatrixGR::identity(n))?;
        let scalar_on_delta = lambda_star(&rep, &e, Normalization::Paper)?
            .scalar_value()
            .map(|x| x.to_string());
        let magnitude_n = !paper.is_empty()
            && paper
                .iter()
                .all(|c| c.as_ref().is_some_and(|x| x == &nn || x == &-&nn));
        let some_exactly_n = paper.iter().any(|c| c.as_ref() == Some(&nn));
        pass &= magnitude_n && some_exactly_n;
        rows.push(json!({
            "n": n,
            "paper_characters": paper.iter().map(|c| c.as_ref().map(s)).collect::<Vec<_>>(),
            "half_characters": half.iter().map(|c| c.as_ref().map(s)).collect::<Vec<_>>(),
            "scalar_on_all_of_delta": scalar_on_delta,
        }));
    }
    Ok((
        pass,
        json!({ "cases": rows, "reading": "character of diag(E,-E) on the sl(n)-annihilated lines" }),
    ))
}

// ---------------------------------------------------------------- spinc

/// Charges `t` with `χ = i t` for each isolated line of `λ*(u(2))`.
fn u2_lines_with_charges(ctx: &Ctx) -> Result<(Vec<MatrixGR>, Vec<(SubspaceGR, Vec<GR>)>)> {
    let g = unitary_family(UnitaryKind::U, 0, 2)?;
    let rep = rep_of(ctx, g.signature)?;
    let imgs = images(ctx, &g, &rep, ctx.norm())?;
    ctx.touch("invariant.invariant_lines");
    let r = invariant_lines(&imgs, rep.dim(), ctx.exec())?;
    let lines = r
        .components
        .iter()
        .filter(|c| c.isolated)
        .map(|c| {
            (
                c.subspace.clone(),
                c.character.iter().map(|x| -x.mul_i()).collect(),
            )
        })
        .collect();
    Ok((imgs, lines))
}

fn pairs_of(imgs: &[MatrixGR], t: &[GR]) -> Vec<(MatrixGR, GR)> {
    imgs.iter().cloned().zip(t.iter().cloned()).collect()
}

fn spinc_u2(ctx: &Ctx) -> Result<(bool, Value)> {
    ctx.touch("invariant.spinc_exists");
    let (imgs, lines) = u2_lines_with_charges(ctx)?;
    let mut pass = lines.len() == 2;
    let mut rows = Vec::new();
    for (line, t) in &lines {
        let real = t.iter().all(GR::is_real);
        let (ok, sub) = spinc_exists(&pairs_of(&imgs, t), 4)?;
        let same = &sub == line;
        pass &= real && ok && same;
        rows.push(json!({ "charges": t.iter().map(s).collect::<Vec<_>>(), "exists": ok, "equals_line": same }));
    }
    Ok((pass, json!({ "normalization": ctx.norm(), "lines": rows })))
}

fn spinc_perturbation(ctx: &Ctx) -> Result<(bool, Value)> {
    let (imgs, lines) = u2_lines_with_charges(ctx)?;
    let deltas = [
        GR::one(),
        GR::from_int(-1),
        GR::ratio(1, 2),
        GR::ratio(-1, 2),
        GR::ratio(1, 3),
        GR::from_int(2),
        GR::from_int(-2),
        GR::ratio(3, 7),
        GR::ratio(-5, 3),
    ];
    let mut trials = 0;
    let mut original_survives = 0;
    let mut stray = 0;
    let mut coincidences = Vec::new();
    for (li, (line, t)) in lines.iter().enumerate() {
        for d in &deltas {
            // one generator at a time, then the whole charge scaled by 1 + δ
            let mut variants: Vec<(String, Vec<GR>)> = (0..t.len())
                .map(|k| {
                    let mut tt = t.clone();
                    tt[k] = &tt[k] + d;
                    (format!("generator {k}"), tt)
                })
                .collect();
            variants.push((
                "scaled".into(),
                t.iter().map(|x| x * &(&GR::one() + d)).collect(),
            ));
            for (mode, tt) in variants {
                if tt == *t {
                    continue;
                }
                trials += 1;
                let (ok, sub) = spinc_exists(&pairs_of(&imgs, &tt), 4)?;
                if !ok {
                    continue;
                }
                if sub.contains(&line.basis()[0]) {
                    original_survives += 1;
                }
                match lines.iter().position(|(l, lt)| l == &sub && lt == &tt) {
                    Some(other) if other != li => coincidences.push(json!({
                        "line": li, "mode": mode, "delta": d.to_string(), "matches_line": other,
                    })),
                    _ => stray += 1,
                }
            }
        }
    }
    let pass = trials > 0 && original_survives == 0 && stray == 0;
    Ok((
        pass,
        json!({
            "trials": trials, "original_line_survives": original_survives, "unexplained_solutions": stray,
            "coincidences_with_other_line": coincidences,
        }),
    ))
}

fn spinc_implies_line(ctx: &Ctx) -> Result<(bool, Value)> {
    ctx.touch("invariant.spinc_exists");
    let mut pass = true;
    let mut checked = 0;
    let mut specs = vec!["u:0,2", "u:1,1"];
    if ctx.spec.max_n >= 6 {
        specs.push("u:0,3");
    }
    for spec in specs {
        let g = parse_algebra(spec)?;
        let (rep, r) = lines_of(ctx, &g, ctx.norm())?;
        let imgs = images(ctx, &g, &rep, ctx.norm())?;
        for c in &r.components {
            let t: Vec<GR> = c.character.iter().map(|x| -x.mul_i()).collect();
            if !t.iter().all(GR::is_real) {
                continue;
            }
            let (ok, sub) = spinc_exists(&pairs_of(&imgs, &t), rep.dim())?;
            checked += 1;
            pass &= ok && r.components.iter().any(|d| sub.is_subspace_of(&d.subspace));
        }
    }
    Ok((pass && checked > 0, json!({ "solutions_checked": checked })))
}
