use crate::error::{Error, Result};
use crate::exactla::{inverse, solve, LinMap, Scalar};
use crate::hopf::{expect_shape, Coalgebra, FiniteHopfAlgebra};
use crate::report::Report;
use crate::yd::{braiding_unchecked, check_crossed, check_yd_morphism, tensor_unchecked, yd_braiding_inverse, YDModule};

use super::projection::{check_projection, radford_majid_decompose, BialgebraProjection, Decomposition};
use super::{smash_bialgebra, AdmissibleObject};

/// `(A, Ā, R)`: one algebra with two comultiplications and `R ∈ A ⊗ A`.
///
/// Conventions (flip braiding): `Δ̄^op(a) R = R Δ(a)`,
/// `(Δ̄ ⊗ id)R = R₁₃R₂₃`, `(id ⊗ Δ)R = R₁₃R₁₂`, `R⁻¹` taken in `A ⊗ A`.
#[derive(Clone, Debug)]
pub struct QTBialgebra {
    pub a: FiniteHopfAlgebra,
    pub delta_bar: LinMap,
    pub r: LinMap,
    /// `None` when `R` has no inverse in `A ⊗ A`.
    pub r_inv: Option<LinMap>,
}

impl QTBialgebra {
    pub fn new(a: FiniteHopfAlgebra, delta_bar: LinMap, r: LinMap) -> Result<Self> {
        let d = a.dim();
        expect_shape("second comultiplication", &delta_bar, d * d, d)?;
        expect_shape("R", &r, d * d, 1)?;
        let m2 = braided_mul(a.m(), &LinMap::flip(d, d));
        let r_inv = convolution_inverse(&m2, &a.eta().kron(a.eta()), &r)?;
        Ok(QTBialgebra { a, delta_bar, r, r_inv })
    }

    /// `Ā = (A, m, η, Δ̄, ε)`, with its antipode when `A` has one and `Ā`
    /// admits one.
    pub fn bar(&self) -> Result<FiniteHopfAlgebra> {
        let coalg = Coalgebra { dim: self.a.dim(), delta: self.delta_bar.clone(), eps: self.a.eps().clone() };
        let name = format!("{}-bar", self.a.name());
        let b = FiniteHopfAlgebra::from_parts(name, self.a.field().clone(), self.a.algebra(), coalg, None)?;
        if !self.a.has_antipode() {
            return Ok(b);
        }
        match b.clone().with_solved_antipode() {
            Ok(h) => Ok(h),
            Err(Error::NoAntipode) | Err(Error::NonUniqueSolution(_)) | Err(Error::NotInvertible(_)) => Ok(b),
            Err(e) => Err(e),
        }
    }

    /// `u = m(id ⊗ S)R`.
    pub fn u(&self) -> Result<LinMap> {
        Ok(LinMap::chain(&[self.a.m(), &self.a.id().kron(self.a.s()?), &self.r]))
    }
}

/// `(m ⊗ m)(id ⊗ Ψ ⊗ id)` for `Ψ: B ⊗ B -> B ⊗ B`.
fn braided_mul(m: &LinMap, psi: &LinMap) -> LinMap {
    let d = m.cod();
    m.kron(m).compose(&LinMap::kron_all(&[&LinMap::identity(d), psi, &LinMap::identity(d)]))
}

/// Product on `B ⊗ (B ⊗ B)` from `m` and the product `m2` on `B ⊗ B`,
/// crossing with `Ψ_{B⊗B,B}`.
fn braided_triple_mul(m: &LinMap, m2: &LinMap, psi3: &LinMap) -> LinMap {
    let d = m.cod();
    m.kron(m2).compose(&LinMap::kron_all(&[&LinMap::identity(d), psi3, &LinMap::identity(d * d)]))
}

/// Solve `R·X = 1` in the algebra `(m2, unit)` and confirm `X·R = 1`.
fn convolution_inverse(m2: &LinMap, unit: &LinMap, r: &LinMap) -> Result<Option<LinMap>> {
    let left = m2.compose(&r.kron(&LinMap::identity(r.cod())));
    let Some(sol) = solve(&left, unit)? else {
        return Ok(None);
    };
    let x = sol.particular;
    if m2.compose(&x.kron(r)) != *unit {
        return Ok(None);
    }
    Ok(Some(x))
}

/// The structure maps and braidings needed to state the quasitriangular
/// axioms in a braided category.
struct QtData<'a> {
    m: &'a LinMap,
    eta: &'a LinMap,
    delta: &'a LinMap,
    eps: &'a LinMap,
    delta_bar: &'a LinMap,
    r: &'a LinMap,
    /// `Ψ_{B,B}`
    psi: LinMap,
    /// `Ψ_{B⊗B,B}`
    psi3: LinMap,
}

fn qt_laws(rep: &mut Report, q: &QtData) -> Option<LinMap> {
    let d = q.m.cod();
    let id = LinMap::identity(d);
    let m2 = braided_mul(q.m, &q.psi);
    let m3 = braided_triple_mul(q.m, &m2, &q.psi3);
    let unit2 = q.eta.kron(q.eta);

    let r_inv = convolution_inverse(&m2, &unit2, q.r).ok().flatten();
    rep.flag("R is invertible", r_inv.is_some(), Some("solved R·X = 1 in the tensor square".into()));

    let lhs = m2.compose(&q.psi.compose(q.delta_bar).kron(q.r));
    let rhs = m2.compose(&q.r.kron(q.delta));
    rep.eq_maps("intertwining", &lhs, &rhs);

    let r13 = LinMap::kron_all(&[&id, q.eta, &id]).compose(q.r);
    let r12 = q.r.kron(q.eta);
    let r23 = q.eta.kron(q.r);
    rep.eq_maps("first leg comultiplicative", &q.delta_bar.kron(&id).compose(q.r), &m3.compose(&r13.kron(&r23)));
    rep.eq_maps("second leg comultiplicative", &id.kron(q.delta).compose(q.r), &m3.compose(&r13.kron(&r12)));
    rep.eq_maps("first leg counital", &q.eps.kron(&id).compose(q.r), q.eta);
    rep.eq_maps("second leg counital", &id.kron(q.eps).compose(q.r), q.eta);
    r_inv
}

/// Both bialgebra structures, invertibility of `R`, the intertwining
/// identity, the pairing axioms, and, when both antipodes exist,
/// `S̄⁻¹ = u·S(-)·u⁻¹` with `u = m(id ⊗ S)R`.
pub fn check_quasitriangular(q: &QTBialgebra) -> Result<Report> {
    let a = &q.a;
    let d = a.dim();
    expect_shape("second comultiplication", &q.delta_bar, d * d, d)?;
    expect_shape("R", &q.r, d * d, 1)?;
    let mut rep = Report::new("quasitriangular bialgebra");
    rep.merge("A: ", a.report().clone());
    let bar = q.bar()?;
    rep.merge("Ā: ", bar.report().clone());
    let data = QtData {
        m: a.m(),
        eta: a.eta(),
        delta: a.delta(),
        eps: a.eps(),
        delta_bar: &q.delta_bar,
        r: &q.r,
        psi: LinMap::flip(d, d),
        psi3: LinMap::flip(d * d, d),
    };
    let solved = qt_laws(&mut rep, &data);
    if let (Some(stored), Some(solved)) = (&q.r_inv, &solved) {
        rep.eq_maps("stored inverse of R", stored, solved);
    }

    if let (Ok(s), Ok(sbar_inv)) = (a.s(), bar.s_inv()) {
        let u = q.u()?;
        let lu = a.left_mul_by(&u);
        match inverse(&lu) {
            Ok(lu_inv) => {
                let u_inv = lu_inv.compose(a.eta());
                let conj = LinMap::chain(&[&lu, &a.right_mul_by(&u_inv), s]);
                rep.eq_maps("S̄⁻¹ = u S(-) u⁻¹", sbar_inv, &conj);
            }
            Err(_) => {
                rep.flag("u is invertible", false, None);
            }
        }
    }
    Ok(rep)
}

/// `kZ/2` with `R = ½(1⊗1 + 1⊗g + g⊗1 - g⊗g)` and `Δ̄ = Δ`.
pub fn z2_triangular() -> QTBialgebra {
    let h = crate::hopf::builtin("cyclic:2").expect("kZ/2");
    let delta = h.delta().clone();
    QTBialgebra::new(h, delta, z2_r_matrix()).expect("shapes agree")
}

/// `½(1⊗1 + 1⊗g + g⊗1 - g⊗g)` in the basis `(1, g)`.
pub fn z2_r_matrix() -> LinMap {
    let half = Scalar::from_frac(1, 2);
    LinMap::from_int_rows(&[[1], [1], [1], [-1]]).scale(&half)
}

/// `a₁ ⊗ x·a₂ = ā₁ ⊗ x·ā₂` as maps `X ⊗ A -> A ⊗ X`, together with the
/// module laws.
pub fn check_category_o(q: &QTBialgebra, dim: usize, mur: &LinMap) -> Result<Report> {
    let a = &q.a;
    let d = a.dim();
    expect_shape("right action", mur, dim, dim * d)?;
    let (xid, hid) = (LinMap::identity(dim), a.id());
    let mut rep = Report::new("category O");
    rep.eq_maps("action associative", &mur.compose(&mur.kron(&hid)), &mur.compose(&xid.kron(a.m())));
    rep.eq_maps("action unital", &mur.compose(&xid.kron(a.eta())), &xid);
    let side = |delta: &LinMap| {
        LinMap::chain(&[&hid.kron(mur), &LinMap::flip(dim, d).kron(&hid), &xid.kron(delta)])
    };
    rep.eq_maps("both comultiplications act alike", &side(a.delta()), &side(&q.delta_bar));
    Ok(rep)
}

/// `ν(x) = x·R¹ ⊗ R²` on a module in category O.
pub fn from_qt_module(q: &QTBialgebra, dim: usize, mur: &LinMap) -> Result<YDModule> {
    check_category_o(q, dim, mur)?.into_result(Error::NotInCategoryO)?;
    YDModule { dim, mur: mur.clone(), nur: qt_coaction(mur, &q.r, dim) }.verified(&q.a)
}

fn qt_coaction(mur: &LinMap, r: &LinMap, dim: usize) -> LinMap {
    let d = mur.dom() / dim.max(1);
    mur.kron(&LinMap::identity(d)).compose(&LinMap::identity(dim).kron(r))
}

/// A quasitriangular bialgebra inside the crossed modules of a
/// quasitriangular `(A, Ā, R_A)`: an admissible object with a second
/// comultiplication and `R_B ∈ B ⊗ B`.
#[derive(Clone, Debug)]
pub struct InnerQT {
    pub obj: AdmissibleObject,
    pub delta_bar: LinMap,
    pub r: LinMap,
}

fn braided_bialgebra_laws(rep: &mut Report, prefix: &str, x: &AdmissibleObject, delta: &LinMap, psi: &LinMap) {
    let id = LinMap::identity(x.dim);
    let p = |s: &str| format!("{prefix}{s}");
    rep.eq_maps(p("associativity"), &x.m.compose(&x.m.kron(&id)), &x.m.compose(&id.kron(&x.m)));
    rep.eq_maps(p("left unit"), &x.m.compose(&x.eta.kron(&id)), &id);
    rep.eq_maps(p("right unit"), &x.m.compose(&id.kron(&x.eta)), &id);
    rep.eq_maps(p("coassociativity"), &delta.kron(&id).compose(delta), &id.kron(delta).compose(delta));
    rep.eq_maps(p("left counit"), &x.eps.kron(&id).compose(delta), &id);
    rep.eq_maps(p("right counit"), &id.kron(&x.eps).compose(delta), &id);
    let m2 = braided_mul(&x.m, psi);
    rep.eq_maps(p("comultiplication is multiplicative"), &delta.compose(&x.m), &m2.compose(&delta.kron(delta)));
    rep.eq_maps(p("comultiplication is unital"), &delta.compose(&x.eta), &x.eta.kron(&x.eta));
    rep.eq_maps(p("counit is multiplicative"), &x.eps.compose(&x.m), &x.eps.kron(&x.eps));
    rep.eq_maps(p("counit is unital"), &x.eps.compose(&x.eta), &LinMap::identity(1));
}

/// The quasitriangular axioms for `B` evaluated with the crossed-module
/// braiding in place of the flip. `(B, Δ)` is a bialgebra for `Ψ`,
/// `(B, Δ̄)` one for `Ψ⁻¹`, the coaction of `B` is the one induced by
/// `R_A`, and every structure map is a crossed-module morphism (`Δ̄` for the
/// coaction induced by `τ(R_A⁻¹)`).
pub fn check_inner_quasitriangular(qa: &QTBialgebra, qb: &InnerQT) -> Result<Report> {
    let a = &qa.a;
    let x = &qb.obj;
    let n = x.dim;
    let d = a.dim();
    expect_shape("multiplication", &x.m, n, n * n)?;
    expect_shape("unit", &x.eta, n, 1)?;
    expect_shape("comultiplication", &x.delta, n * n, n)?;
    expect_shape("counit", &x.eps, 1, n)?;
    expect_shape("second comultiplication", &qb.delta_bar, n * n, n)?;
    expect_shape("R", &qb.r, n * n, 1)?;
    expect_shape("right action", &x.mur, n, n * d)?;
    expect_shape("right coaction", &x.nur, n * d, n)?;

    let mut rep = Report::new("quasitriangular bialgebra in crossed modules");
    rep.merge("", check_category_o(qa, n, &x.mur)?);
    rep.eq_maps("coaction induced by R", &x.nur, &qt_coaction(&x.mur, &qa.r, n));
    let y = x.yd();
    let crossed = check_crossed(a, &y)?;
    let ok = crossed.passed();
    rep.merge("", crossed);
    if !ok {
        return Ok(rep);
    }
    let psi = braiding_unchecked(a, &y, &y);
    let psi_inv = yd_braiding_inverse(a, &y, &y)?;
    braided_bialgebra_laws(&mut rep, "", x, &x.delta, &psi);
    braided_bialgebra_laws(&mut rep, "second: ", x, &qb.delta_bar, &psi_inv);

    let unit = YDModule::unit(a);
    let yy = tensor_unchecked(a, &y, &y);
    rep.merge("multiplication ", check_yd_morphism(a, &x.m, &yy, &y));
    rep.merge("unit ", check_yd_morphism(a, &x.eta, &unit, &y));
    rep.merge("comultiplication ", check_yd_morphism(a, &x.delta, &y, &yy));
    rep.merge("counit ", check_yd_morphism(a, &x.eps, &y, &unit));
    rep.merge("R ", check_yd_morphism(a, &qb.r, &unit, &yy));
    match &qa.r_inv {
        Some(r_inv) => {
            let rbar = LinMap::flip(d, d).compose(r_inv);
            let ybar = YDModule { dim: n, mur: x.mur.clone(), nur: qt_coaction(&x.mur, &rbar, n) };
            let yybar = tensor_unchecked(a, &ybar, &ybar);
            rep.merge("second comultiplication ", check_yd_morphism(a, &qb.delta_bar, &ybar, &yybar));
        }
        None => {
            rep.flag("R_A is invertible", false, None);
        }
    }

    let data = QtData {
        m: &x.m,
        eta: &x.eta,
        delta: &x.delta,
        eps: &x.eps,
        delta_bar: &qb.delta_bar,
        r: &qb.r,
        psi,
        psi3: braiding_unchecked(a, &yy, &y),
    };
    qt_laws(&mut rep, &data);
    Ok(rep)
}

/// `(A ⋉ B, Ā ⋉ B̄, R)` with
/// `R = (m ⊗ m)(ι_B ⊗ (ι_A ⊗ ι_A)R_A ⊗ ι_B)R_B`, `ι_A = id ⊗ η_B`,
/// `ι_B = η_A ⊗ id`. `B̄` carries the coaction induced by `τ(R_A⁻¹)`.
pub fn bosonize_qt(qa: &QTBialgebra, qb: &InnerQT) -> Result<QTBialgebra> {
    check_quasitriangular(qa)?.into_result(Error::NotQuasitriangular)?;
    let x = &qb.obj;
    check_category_o(qa, x.dim, &x.mur)?.into_result(Error::NotInCategoryO)?;
    check_inner_quasitriangular(qa, qb)?.into_result(Error::NotQuasitriangular)?;
    let a = &qa.a;
    let d = a.dim();
    let smash = smash_bialgebra(a, x)?;

    let r_inv = qa.r_inv.as_ref().ok_or(Error::NoSolution)?;
    let rbar = LinMap::flip(d, d).compose(r_inv);
    let xbar = AdmissibleObject { delta: qb.delta_bar.clone(), nur: qt_coaction(&x.mur, &rbar, x.dim), ..x.clone() };
    let smash_bar = smash_bialgebra(&qa.bar()?, &xbar)?;

    let iota_a = a.id().kron(&x.eta);
    let iota_b = a.eta().kron(&LinMap::identity(x.dim));
    let ra = iota_a.kron(&iota_a).compose(&qa.r);
    let r = LinMap::chain(&[&smash.m().kron(smash.m()), &LinMap::kron_all(&[&iota_b, &ra, &iota_b]), &qb.r]);
    let out = QTBialgebra::new(smash, smash_bar.delta().clone(), r)?;
    check_quasitriangular(&out)?.into_result(Error::NotQuasitriangular)?;
    Ok(out)
}

/// Conditions 1 to 3 of a quantum group projection: `(A, H, i, p)` and
/// `(Ā, H̄, i, p)` are bialgebra projections, the idempotents `Π` of `H`
/// and `H̄` agree, and `(id ⊗ p)R_H = (i ⊗ id)R_A`,
/// `(p ⊗ id)R_H = (id ⊗ i)R_A`. Both triples are checked to be
/// quasitriangular.
fn qt_projection_conditions(
    p: &BialgebraProjection,
    p_bar: &BialgebraProjection,
    r_a: &LinMap,
    r_h: &LinMap,
) -> Result<(Report, QTBialgebra)> {
    let (da, dh) = (p.b1.dim(), p.b2.dim());
    expect_shape("R_A", r_a, da * da, 1)?;
    expect_shape("R_H", r_h, dh * dh, 1)?;
    expect_shape("Ā comultiplication", p_bar.b1.delta(), da * da, da)?;
    expect_shape("H̄ comultiplication", p_bar.b2.delta(), dh * dh, dh)?;
    let qa = QTBialgebra::new(p.b1.clone(), p_bar.b1.delta().clone(), r_a.clone())?;
    let qh = QTBialgebra::new(p.b2.clone(), p_bar.b2.delta().clone(), r_h.clone())?;
    let mut rep = Report::new("quantum group projection");
    rep.merge("A: ", check_quasitriangular(&qa)?);
    rep.merge("H: ", check_quasitriangular(&qh)?);
    rep.merge("projection: ", check_projection(p));
    rep.merge("bar projection: ", check_projection(p_bar));
    rep.eq_maps("same section", &p.eta_bar, &p_bar.eta_bar);
    rep.eq_maps("same retraction", &p.eps_bar, &p_bar.eps_bar);
    rep.eq_maps("same algebra on A", p.b1.m(), p_bar.b1.m());
    rep.eq_maps("same algebra on H", p.b2.m(), p_bar.b2.m());

    let pi = |proj: &BialgebraProjection| -> Result<LinMap> {
        let x = proj.bimodule();
        Ok(LinMap::chain(&[&x.mul, &proj.b1.s()?.kron(&LinMap::identity(x.dim)), &x.nul]))
    };
    rep.eq_maps("idempotents agree", &pi(p)?, &pi(p_bar)?);

    let (ida, idh) = (p.b1.id(), p.b2.id());
    rep.eq_maps(
        "R compatible on the right",
        &idh.kron(&p.eps_bar).compose(r_h),
        &p.eta_bar.kron(&ida).compose(r_a),
    );
    rep.eq_maps(
        "R compatible on the left",
        &p.eps_bar.kron(&idh).compose(r_h),
        &ida.kron(&p.eta_bar).compose(r_a),
    );
    Ok((rep, qa))
}

fn decompose_inner(p: &BialgebraProjection, p_bar: &BialgebraProjection, r_h: &LinMap) -> Result<(Decomposition, InnerQT)> {
    let dec = radford_majid_decompose(p)?;
    let (i, pr) = (&dec.splitting.section, &dec.splitting.retraction);
    let delta_bar = LinMap::chain(&[&pr.kron(pr), p_bar.b2.delta(), i]);
    let r = pr.kron(pr).compose(r_h);
    let inner = InnerQT { obj: dec.x.clone(), delta_bar, r };
    Ok((dec, inner))
}

/// [`qt_projection_conditions`]; when they hold, also decomposes the
/// projection and checks the quasitriangular structure `R_B = (p ⊗ p)R_H`
/// on the invariants.
pub fn check_qt_projection(
    p: &BialgebraProjection,
    p_bar: &BialgebraProjection,
    r_a: &LinMap,
    r_h: &LinMap,
) -> Result<Report> {
    let (mut rep, qa) = qt_projection_conditions(p, p_bar, r_a, r_h)?;
    if rep.passed() {
        let (_, inner) = decompose_inner(p, p_bar, r_h)?;
        rep.merge("decomposition: ", check_inner_quasitriangular(&qa, &inner)?);
    }
    Ok(rep)
}

/// The quasitriangular bialgebra `(B, B̄, R_B)` on the invariants of a
/// quantum group projection, together with the underlying decomposition.
pub fn qt_decompose(
    p: &BialgebraProjection,
    p_bar: &BialgebraProjection,
    r_a: &LinMap,
    r_h: &LinMap,
) -> Result<(Decomposition, InnerQT)> {
    let (rep, qa) = qt_projection_conditions(p, p_bar, r_a, r_h)?;
    rep.into_result(Error::NotQuasitriangular)?;
    let (dec, inner) = decompose_inner(p, p_bar, r_h)?;
    check_inner_quasitriangular(&qa, &inner)?.into_result(Error::NotQuasitriangular)?;
    Ok((dec, inner))
}
