//! Bimodules over a Hopf algebra and the adjoint (co)actions built from them.

use crate::error::{Error, Result};
use crate::exactla::LinMap;
use crate::hopf::{check_algebra_morphism, expect_shape, Algebra, FiniteHopfAlgebra};
use crate::report::Report;

/// An `H`-bimodule: left action `H ⊗ X -> X`, right action `X ⊗ H -> X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    pub dim: usize,
    pub mul: LinMap,
    pub mur: LinMap,
}

impl Bimodule {
    pub fn new(h: &FiniteHopfAlgebra, dim: usize, mul: LinMap, mur: LinMap) -> Result<Self> {
        expect_shape("left action", &mul, dim, h.dim() * dim)?;
        expect_shape("right action", &mur, dim, dim * h.dim())?;
        Ok(Bimodule { dim, mul, mur })
    }
}

/// Left and right module laws plus commutation of the two actions.
pub fn check_bimodule(h: &FiniteHopfAlgebra, b: &Bimodule) -> Report {
    let mut r = Report::new("bimodule");
    let (hid, xid) = (h.id(), LinMap::identity(b.dim));
    r.eq_maps("left action associative", &b.mul.compose(&h.m().kron(&xid)), &b.mul.compose(&hid.kron(&b.mul)));
    r.eq_maps("left action unital", &b.mul.compose(&h.eta().kron(&xid)), &xid);
    r.eq_maps("right action associative", &b.mur.compose(&b.mur.kron(&hid)), &b.mur.compose(&xid.kron(h.m())));
    r.eq_maps("right action unital", &b.mur.compose(&xid.kron(h.eta())), &xid);
    r.eq_maps("actions commute", &b.mur.compose(&b.mul.kron(&hid)), &b.mul.compose(&hid.kron(&b.mur)));
    r
}

/// `H` acting on itself by multiplication on both sides.
pub fn regular_bimodule(h: &FiniteHopfAlgebra) -> Bimodule {
    Bimodule { dim: h.dim(), mul: h.m().clone(), mur: h.m().clone() }
}

/// The bimodule structure on `A` obtained by restricting along an algebra
/// morphism `f: H -> A`.
pub fn pullback_bimodule(f: &LinMap, a: &Algebra, h: &FiniteHopfAlgebra) -> Result<Bimodule> {
    let report = check_algebra_morphism(f, &h.algebra(), a);
    if !report.passed() {
        return Err(Error::NotAlgebraMorphism(Box::new(report)));
    }
    let id = LinMap::identity(a.dim);
    Ok(Bimodule { dim: a.dim, mul: a.m.compose(&f.kron(&id)), mur: a.m.compose(&id.kron(f)) })
}

/// Right adjoint action `x ◁ h = S(h₁) x h₂`:
/// `μ_l ∘ (id_H ⊗ μ_r) ∘ (Ψ_{X,H} ⊗ id_H) ∘ (id_X ⊗ (S ⊗ id_H) ∘ Δ)`.
pub fn adjoint_action(h: &FiniteHopfAlgebra, b: &Bimodule) -> Result<LinMap> {
    let (hid, xid) = (h.id(), LinMap::identity(b.dim));
    let split = h.s()?.kron(&hid).compose(h.delta());
    Ok(LinMap::chain(&[
        &b.mul,
        &hid.kron(&b.mur),
        &LinMap::flip(b.dim, h.dim()).kron(&hid),
        &xid.kron(&split),
    ]))
}

/// Left adjoint action `h ▷ x = h₁ x S(h₂)`.
pub fn left_adjoint_action(h: &FiniteHopfAlgebra, b: &Bimodule) -> Result<LinMap> {
    let (hid, xid) = (h.id(), LinMap::identity(b.dim));
    Ok(LinMap::chain(&[
        &b.mul,
        &hid.kron(&b.mur),
        &LinMap::kron_all(&[&hid, &xid, h.s()?]),
        &hid.kron(&LinMap::flip(h.dim(), b.dim)),
        &h.delta().kron(&xid),
    ]))
}

/// Right coadjoint coaction `x ↦ x₀ ⊗ S(x₍₋₁₎) x₁` of a bicomodule with left
/// coaction `nul: X -> H ⊗ X` and right coaction `nur: X -> X ⊗ H`:
/// `(id_X ⊗ m ∘ (S ⊗ id)) ∘ (Ψ_{H,X} ⊗ id_H) ∘ (id_H ⊗ ν_r) ∘ ν_l`.
pub fn coadjoint_coaction(h: &FiniteHopfAlgebra, dim: usize, nul: &LinMap, nur: &LinMap) -> Result<LinMap> {
    expect_shape("left coaction", nul, h.dim() * dim, dim)?;
    expect_shape("right coaction", nur, dim * h.dim(), dim)?;
    let (hid, xid) = (h.id(), LinMap::identity(dim));
    let twist = h.m().compose(&h.s()?.kron(&hid));
    Ok(LinMap::chain(&[&xid.kron(&twist), &LinMap::flip(h.dim(), dim).kron(&hid), &hid.kron(nur), nul]))
}
