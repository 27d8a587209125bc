use crate::error::{Error, Result};
use crate::exactla::{inverse, LinMap, SplitPair};
use crate::hopf::{check_algebra_morphism, check_coalgebra_morphism, Algebra, Coalgebra, FiniteHopfAlgebra};
use crate::hopfbimod::{
    check_hopf_bimodule, check_hopf_bimodule_morphism, invariants_with, relative_antipode, require_valid,
    splitting_unchecked, tensor_with, HopfBimodule,
};
use crate::report::Report;
use crate::yd::braiding_unchecked;

use super::{check_admissible, smash_bialgebra, AdmissibleObject};

/// Bialgebra maps `B₁ -η̄-> B₂ -ε̄-> B₁` with `ε̄ ∘ η̄ = id`.
#[derive(Clone, Debug)]
pub struct BialgebraProjection {
    pub b1: FiniteHopfAlgebra,
    pub b2: FiniteHopfAlgebra,
    pub eta_bar: LinMap,
    pub eps_bar: LinMap,
}

impl BialgebraProjection {
    /// Validated with [`check_projection`], failing with `NotProjection`.
    pub fn new(b1: FiniteHopfAlgebra, b2: FiniteHopfAlgebra, eta_bar: LinMap, eps_bar: LinMap) -> Result<Self> {
        let p = BialgebraProjection { b1, b2, eta_bar, eps_bar };
        check_projection(&p).into_result(Error::NotProjection)?;
        Ok(p)
    }

    /// `(H, H, id, id)`.
    pub fn identity(h: &FiniteHopfAlgebra) -> Self {
        BialgebraProjection { b1: h.clone(), b2: h.clone(), eta_bar: h.id(), eps_bar: h.id() }
    }

    /// `B₂` as a `B₁`-Hopf bimodule: `μ_l = m(η̄ ⊗ id)`, `μ_r = m(id ⊗ η̄)`,
    /// `ν_l = (ε̄ ⊗ id)Δ`, `ν_r = (id ⊗ ε̄)Δ`.
    pub fn bimodule(&self) -> HopfBimodule {
        let (b, id) = (&self.b2, self.b2.id());
        HopfBimodule {
            dim: b.dim(),
            mul: b.m().compose(&self.eta_bar.kron(&id)),
            mur: b.m().compose(&id.kron(&self.eta_bar)),
            nul: self.eps_bar.kron(&id).compose(b.delta()),
            nur: id.kron(&self.eps_bar).compose(b.delta()),
        }
    }
}

pub fn check_projection(p: &BialgebraProjection) -> Report {
    let mut r = Report::new("bialgebra projection");
    let (d1, d2) = (p.b1.dim(), p.b2.dim());
    let shapes_ok = r.flag(
        "shapes",
        p.eta_bar.cod() == d2 && p.eta_bar.dom() == d1 && p.eps_bar.cod() == d1 && p.eps_bar.dom() == d2,
        Some(format!(
            "η̄ is {}x{}, ε̄ is {}x{}, expected {d2}x{d1} and {d1}x{d2}",
            p.eta_bar.cod(),
            p.eta_bar.dom(),
            p.eps_bar.cod(),
            p.eps_bar.dom()
        )),
    );
    if !shapes_ok {
        return r;
    }
    r.flag("B1 is a bialgebra", p.b1.report().passed(), None);
    r.flag("B2 is a bialgebra", p.b2.report().passed(), None);
    let (a1, a2, c1, c2) = (p.b1.algebra(), p.b2.algebra(), p.b1.coalgebra(), p.b2.coalgebra());
    r.merge("η̄ ", check_algebra_morphism(&p.eta_bar, &a1, &a2));
    r.merge("η̄ ", check_coalgebra_morphism(&p.eta_bar, &c1, &c2));
    r.merge("ε̄ ", check_algebra_morphism(&p.eps_bar, &a2, &a1));
    r.merge("ε̄ ", check_coalgebra_morphism(&p.eps_bar, &c2, &c1));
    r.eq_maps("ε̄ ∘ η̄ = id", &p.eps_bar.compose(&p.eta_bar), &p.b1.id());
    r
}

/// A bialgebra in `H`-Hopf bimodules, with `⊗_H` realized on `B ⊗ inv(B)`
/// for the stored splitting of `Π`.
#[derive(Clone, Debug)]
pub struct BimoduleBialgebra {
    pub h: FiniteHopfAlgebra,
    pub carrier: HopfBimodule,
    pub splitting: SplitPair,
    /// `B ⊗ inv(B) -> B`
    pub m: LinMap,
    /// `H -> B`
    pub eta_bar: LinMap,
    /// `B -> B ⊗ inv(B)`
    pub delta: LinMap,
    /// `B -> H`
    pub eps_bar: LinMap,
    /// antipode in the category, when there is one
    pub s: Option<LinMap>,
}

impl BimoduleBialgebra {
    fn inv_dim(&self) -> usize {
        self.splitting.rank
    }

    /// Multiplication restricted to invariants, `p m (i ⊗ id)`.
    fn m_inv(&self) -> LinMap {
        let sp = &self.splitting;
        LinMap::chain(&[&sp.retraction, &self.m, &sp.section.kron(&LinMap::identity(sp.rank))])
    }

    /// Comultiplication restricted to invariants, `(p ⊗ id) Δ i`.
    fn delta_inv(&self) -> LinMap {
        let sp = &self.splitting;
        LinMap::chain(&[&sp.retraction.kron(&LinMap::identity(sp.rank)), &self.delta, &sp.section])
    }

    /// `p η̄ η_H: k -> inv(B)`
    fn unit_inv(&self) -> LinMap {
        LinMap::chain(&[&self.splitting.retraction, &self.eta_bar, self.h.eta()])
    }

    /// `ε_H ε̄ i: inv(B) -> k`
    fn counit_inv(&self) -> LinMap {
        LinMap::chain(&[self.h.eps(), &self.eps_bar, &self.splitting.section])
    }
}

/// Underline structures: `m_B(id ⊗ i)` and `(id ⊗ p)Δ_B`, unit `η̄`,
/// counit `ε̄`; antipode `M(id ⊗ S ⊗ id)N` when `B₂` has one.
pub fn projection_to_bimodule_bialgebra(p: &BialgebraProjection) -> Result<BimoduleBialgebra> {
    check_projection(p).into_result(Error::NotProjection)?;
    let carrier = p.bimodule();
    let h = &p.b1;
    require_valid(h, &carrier)?;
    let sp = splitting_unchecked(h, &carrier)?;
    let id = p.b2.id();
    let s = match (h.has_antipode(), p.b2.has_antipode()) {
        (true, true) => Some(antipode_to_bimodule(p)?),
        _ => None,
    };
    let ub = BimoduleBialgebra {
        h: h.clone(),
        m: p.b2.m().compose(&id.kron(&sp.section)),
        delta: id.kron(&sp.retraction).compose(p.b2.delta()),
        carrier,
        splitting: sp,
        eta_bar: p.eta_bar.clone(),
        eps_bar: p.eps_bar.clone(),
        s,
    };
    check_bimodule_bialgebra(&ub)?.into_result(Error::NotBialgebraInCategory)?;
    Ok(ub)
}

/// The bialgebra (and Hopf algebra) axioms in `H`-Hopf bimodules.
///
/// With `I = inv(B)`, `m_I = p m (i ⊗ id)` and `Δ_I = (p ⊗ id) Δ i`:
/// `m(m ⊗ id_I) = m(id ⊗ m_I)`, `m(η̄ ⊗ id_I) = μ_l(id ⊗ i)`,
/// `m(id ⊗ p η̄ η_H) = id`, the dual statements for `Δ`, and
/// `Δm = (m ⊗ m_I)(id ⊗ Ψ_{I,I} ⊗ id)(Δ ⊗ Δ_I)`. The structure maps are
/// checked to be Hopf-bimodule morphisms.
pub fn check_bimodule_bialgebra(ub: &BimoduleBialgebra) -> Result<Report> {
    let h = &ub.h;
    let b = &ub.carrier;
    let (n, r, d) = (b.dim, ub.inv_dim(), h.dim());
    crate::hopf::expect_shape("multiplication", &ub.m, n, n * r)?;
    crate::hopf::expect_shape("comultiplication", &ub.delta, n * r, n)?;
    crate::hopf::expect_shape("unit", &ub.eta_bar, n, d)?;
    crate::hopf::expect_shape("counit", &ub.eps_bar, d, n)?;
    crate::hopf::expect_shape("splitting section", &ub.splitting.section, n, r)?;
    crate::hopf::expect_shape("splitting retraction", &ub.splitting.retraction, r, n)?;

    let mut rep = Report::new("bialgebra in Hopf bimodules");
    let carrier = check_hopf_bimodule(h, b)?;
    let valid = carrier.passed();
    rep.merge("carrier: ", carrier);
    if !valid {
        return Ok(rep);
    }
    let sp = &ub.splitting;
    let pi = LinMap::chain(&[&b.mul, &h.s()?.kron(&LinMap::identity(n)), &b.nul]);
    rep.eq_maps("splitting composes to Π", &sp.idempotent(), &pi);
    rep.eq_maps("splitting retracts", &sp.retraction.compose(&sp.section), &LinMap::identity(r));

    let (bid, iid, hid) = (LinMap::identity(n), LinMap::identity(r), h.id());
    let (m_inv, delta_inv) = (ub.m_inv(), ub.delta_inv());
    let (unit_inv, counit_inv) = (ub.unit_inv(), ub.counit_inv());
    rep.eq_maps("associativity", &ub.m.compose(&ub.m.kron(&iid)), &ub.m.compose(&bid.kron(&m_inv)));
    rep.eq_maps("left unit", &ub.m.compose(&ub.eta_bar.kron(&iid)), &b.mul.compose(&hid.kron(&sp.section)));
    rep.eq_maps("right unit", &ub.m.compose(&bid.kron(&unit_inv)), &bid);
    rep.eq_maps("coassociativity", &ub.delta.kron(&iid).compose(&ub.delta), &bid.kron(&delta_inv).compose(&ub.delta));
    rep.eq_maps("left counit", &ub.eps_bar.kron(&iid).compose(&ub.delta), &hid.kron(&sp.retraction).compose(&b.nul));
    rep.eq_maps("right counit", &bid.kron(&counit_inv).compose(&ub.delta), &bid);

    let inv = invariants_with(h, b, sp);
    let psi = braiding_unchecked(h, &inv, &inv);
    let rhs = LinMap::chain(&[
        &ub.m.kron(&m_inv),
        &LinMap::kron_all(&[&bid, &psi, &iid]),
        &ub.delta.kron(&delta_inv),
    ]);
    rep.eq_maps("comultiplication is multiplicative", &ub.delta.compose(&ub.m), &rhs);
    rep.eq_maps("counit is multiplicative", &ub.eps_bar.compose(&ub.m), &ub.eps_bar.kron(&counit_inv));
    rep.eq_maps("comultiplication is unital", &ub.delta.compose(&ub.eta_bar), &ub.eta_bar.kron(&unit_inv));
    rep.eq_maps("counit is unital", &ub.eps_bar.compose(&ub.eta_bar), &hid);

    let square = tensor_with(h, b, b, sp.clone()).product;
    let reg = HopfBimodule::regular(h);
    rep.merge("multiplication: ", check_hopf_bimodule_morphism(h, &ub.m, &square, b));
    rep.merge("comultiplication: ", check_hopf_bimodule_morphism(h, &ub.delta, b, &square));
    rep.merge("unit: ", check_hopf_bimodule_morphism(h, &ub.eta_bar, &reg, b));
    rep.merge("counit: ", check_hopf_bimodule_morphism(h, &ub.eps_bar, b, &reg));

    if let Some(s) = &ub.s {
        crate::hopf::expect_shape("antipode", s, n, n)?;
        let ee = ub.eta_bar.compose(&ub.eps_bar);
        let s_inv = LinMap::chain(&[&sp.retraction, s, &sp.section]);
        rep.eq_maps("antipode left", &LinMap::chain(&[&ub.m, &s.kron(&iid), &ub.delta]), &ee);
        rep.eq_maps("antipode right", &LinMap::chain(&[&ub.m, &bid.kron(&s_inv), &ub.delta]), &ee);
        rep.merge("antipode: ", check_hopf_bimodule_morphism(h, s, b, b));
    }
    Ok(rep)
}

/// `m_B = m∘λ`, `Δ_B = ρ∘Δ`, `η_B = η̄η_H`, `ε_B = ε_Hε̄`, with antipode
/// `S_B = S∘S_{B/H}` when the category antipode is present.
pub fn bimodule_bialgebra_to_projection(ub: &BimoduleBialgebra) -> Result<BialgebraProjection> {
    check_bimodule_bialgebra(ub)?.into_result(Error::NotBialgebraInCategory)?;
    let h = &ub.h;
    let t = tensor_with(h, &ub.carrier, &ub.carrier, ub.splitting.clone());
    let n = ub.carrier.dim;
    let alg = Algebra { dim: n, m: ub.m.compose(&t.lambda), eta: ub.eta_bar.compose(h.eta()) };
    let coalg = Coalgebra { dim: n, delta: t.rho.compose(&ub.delta), eps: h.eps().compose(&ub.eps_bar) };
    let s = match ub.s {
        Some(_) if h.has_antipode() => Some(antipode_from_bimodule(ub)?),
        _ => None,
    };
    let mut b2 = FiniteHopfAlgebra::from_parts(format!("{}-projection", h.name()), h.field().clone(), alg, coalg, s)?;
    if b2.has_antipode() {
        b2 = b2.with_inverted_antipode()?;
    }
    BialgebraProjection::new(h.clone(), b2, ub.eta_bar.clone(), ub.eps_bar.clone())
}

/// `S̲ = M(id ⊗ S_{B₂} ⊗ id)N` with `M = μ_l(id ⊗ μ_r)`, `N = (id ⊗ ν_r)ν_l`.
pub fn antipode_to_bimodule(p: &BialgebraProjection) -> Result<LinMap> {
    let s = p.b2.s()?;
    let x = p.bimodule();
    let hid = p.b1.id();
    Ok(LinMap::chain(&[&x.mul, &hid.kron(&x.mur), &LinMap::kron_all(&[&hid, s, &hid]), &hid.kron(&x.nur), &x.nul]))
}

/// `S = S̲ ∘ S_{B/H}`; the other order `S_{B/H} ∘ S̲` is computed too and
/// must agree.
pub fn antipode_from_bimodule(ub: &BimoduleBialgebra) -> Result<LinMap> {
    let under = ub.s.as_ref().ok_or(Error::NoAntipode)?;
    let rel = relative_antipode(&ub.h, &ub.carrier)?;
    let left = under.compose(&rel);
    let mut r = Report::new("antipode transfer");
    r.eq_maps("orderings agree", &left, &rel.compose(under));
    r.into_result(Error::AxiomFailure)?;
    Ok(left)
}

/// An admissible object `X = inv(B₂)` and the isomorphism
/// `φ = m_B(η̄ ⊗ i): H ⋉ X -> B₂`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub x: AdmissibleObject,
    pub iso: LinMap,
    pub splitting: SplitPair,
}

/// Invariants of `B₂` with `m_X = p m(i ⊗ i)`, `η_X = p η̄ η_H`,
/// `Δ_X = (p ⊗ p)Δ i`, `ε_X = ε_B i`, and the induced crossed-module
/// structure. The result is checked to be admissible and `φ` to be a
/// bialgebra isomorphism from the smash bialgebra.
pub fn radford_majid_decompose(p: &BialgebraProjection) -> Result<Decomposition> {
    p.b1.s_inv()?;
    let ub = projection_to_bimodule_bialgebra(p)?;
    let h = &p.b1;
    let b = &p.b2;
    let sp = ub.splitting.clone();
    let (i, pr) = (&sp.section, &sp.retraction);
    let y = invariants_with(h, &ub.carrier, &sp);
    let x = AdmissibleObject {
        dim: sp.rank,
        m: LinMap::chain(&[pr, b.m(), &i.kron(i)]),
        eta: pr.compose(b.eta()),
        delta: LinMap::chain(&[&pr.kron(pr), b.delta(), i]),
        eps: b.eps().compose(i),
        mur: y.mur,
        nur: y.nur,
    };
    let mut rep = check_admissible(h, &x)?;
    let iso = b.m().compose(&p.eta_bar.kron(i));
    if rep.passed() {
        let smash = smash_bialgebra(h, &x)?;
        rep.flag("φ invertible", inverse(&iso).is_ok(), None);
        rep.merge("φ ", check_algebra_morphism(&iso, &smash.algebra(), &b.algebra()));
        rep.merge("φ ", check_coalgebra_morphism(&iso, &smash.coalgebra(), &b.coalgebra()));
    }
    rep.into_result(Error::AxiomFailure)?;
    Ok(Decomposition { x, iso, splitting: sp })
}
