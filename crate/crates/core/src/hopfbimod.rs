//! Hopf bimodules over a Hopf algebra: the projection `Π` onto invariants,
//! the functors to and from crossed modules, the tensor product over `H`
//! and its braiding, and the relative antipode.

use crate::error::{Error, Result};
use crate::exactla::{split_idempotent, LinMap, SplitPair};
use crate::hopf::{expect_shape, Bimodule, FiniteHopfAlgebra};
use crate::report::Report;
use crate::yd::{check_crossed, YDModule};

/// A based space with left/right actions and left/right coactions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfBimodule {
    pub dim: usize,
    /// `H ⊗ X -> X`
    pub mul: LinMap,
    /// `X ⊗ H -> X`
    pub mur: LinMap,
    /// `X -> H ⊗ X`
    pub nul: LinMap,
    /// `X -> X ⊗ H`
    pub nur: LinMap,
}

impl HopfBimodule {
    pub fn new(h: &FiniteHopfAlgebra, dim: usize, mul: LinMap, mur: LinMap, nul: LinMap, nur: LinMap) -> Result<Self> {
        let x = HopfBimodule { dim, mul, mur, nul, nur };
        ensure_shapes(h, &x)?;
        Ok(x)
    }

    /// `H` with multiplication and comultiplication on both sides.
    pub fn regular(h: &FiniteHopfAlgebra) -> Self {
        HopfBimodule {
            dim: h.dim(),
            mul: h.m().clone(),
            mur: h.m().clone(),
            nul: h.delta().clone(),
            nur: h.delta().clone(),
        }
    }

    pub fn bimodule(&self) -> Bimodule {
        Bimodule { dim: self.dim, mul: self.mul.clone(), mur: self.mur.clone() }
    }

    /// Validate with [`check_hopf_bimodule`], failing with `NotHopfBimodule`.
    pub fn verified(self, h: &FiniteHopfAlgebra) -> Result<Self> {
        check_hopf_bimodule(h, &self)?.into_result(Error::NotHopfBimodule)?;
        Ok(self)
    }
}

fn ensure_shapes(h: &FiniteHopfAlgebra, x: &HopfBimodule) -> Result<()> {
    let (n, d) = (x.dim, h.dim());
    expect_shape("left action", &x.mul, n, d * n)?;
    expect_shape("right action", &x.mur, n, n * d)?;
    expect_shape("left coaction", &x.nul, d * n, n)?;
    expect_shape("right coaction", &x.nur, n * d, n)
}

/// Bimodule and bicomodule laws, and the four statements that each coaction
/// commutes with each action (with diagonal actions on `H ⊗ X` and `X ⊗ H`).
pub fn check_hopf_bimodule(h: &FiniteHopfAlgebra, x: &HopfBimodule) -> Result<Report> {
    ensure_shapes(h, x)?;
    let mut r = Report::new("Hopf bimodule");
    let (n, d) = (x.dim, h.dim());
    let (hid, xid) = (h.id(), LinMap::identity(n));
    r.eq_maps("left action associative", &x.mul.compose(&h.m().kron(&xid)), &x.mul.compose(&hid.kron(&x.mul)));
    r.eq_maps("left action unital", &x.mul.compose(&h.eta().kron(&xid)), &xid);
    r.eq_maps("right action associative", &x.mur.compose(&x.mur.kron(&hid)), &x.mur.compose(&xid.kron(h.m())));
    r.eq_maps("right action unital", &x.mur.compose(&xid.kron(h.eta())), &xid);
    r.eq_maps("actions commute", &x.mur.compose(&x.mul.kron(&hid)), &x.mul.compose(&hid.kron(&x.mur)));
    r.eq_maps("left coaction coassociative", &h.delta().kron(&xid).compose(&x.nul), &hid.kron(&x.nul).compose(&x.nul));
    r.eq_maps("left coaction counital", &h.eps().kron(&xid).compose(&x.nul), &xid);
    r.eq_maps("right coaction coassociative", &x.nur.kron(&hid).compose(&x.nur), &xid.kron(h.delta()).compose(&x.nur));
    r.eq_maps("right coaction counital", &xid.kron(h.eps()).compose(&x.nur), &xid);
    r.eq_maps("coactions commute", &x.nul.kron(&hid).compose(&x.nur), &hid.kron(&x.nur).compose(&x.nul));

    // ν_l(h·x) = h₁x₋₁ ⊗ h₂·x₀
    let lhs = x.nul.compose(&x.mul);
    let rhs = LinMap::chain(&[&h.m().kron(&x.mul), &LinMap::kron_all(&[&hid, &LinMap::flip(d, d), &xid]), &h.delta().kron(&x.nul)]);
    r.eq_maps("left coaction is left linear", &lhs, &rhs);
    // ν_l(x·h) = x₋₁h₁ ⊗ x₀·h₂
    let lhs = x.nul.compose(&x.mur);
    let rhs = LinMap::chain(&[&h.m().kron(&x.mur), &LinMap::kron_all(&[&hid, &LinMap::flip(n, d), &hid]), &x.nul.kron(h.delta())]);
    r.eq_maps("left coaction is right linear", &lhs, &rhs);
    // ν_r(h·x) = h₁·x₀ ⊗ h₂x₁
    let lhs = x.nur.compose(&x.mul);
    let rhs = LinMap::chain(&[&x.mul.kron(h.m()), &LinMap::kron_all(&[&hid, &LinMap::flip(d, n), &hid]), &h.delta().kron(&x.nur)]);
    r.eq_maps("right coaction is left linear", &lhs, &rhs);
    // ν_r(x·h) = x₀·h₁ ⊗ x₁h₂
    let lhs = x.nur.compose(&x.mur);
    let rhs = LinMap::chain(&[&x.mur.kron(h.m()), &LinMap::kron_all(&[&xid, &LinMap::flip(d, d), &hid]), &x.nur.kron(h.delta())]);
    r.eq_maps("right coaction is right linear", &lhs, &rhs);
    Ok(r)
}

pub(crate) fn require_valid(h: &FiniteHopfAlgebra, x: &HopfBimodule) -> Result<()> {
    check_hopf_bimodule(h, x)?.into_result(Error::NotHopfBimodule).map(|_| ())
}

/// Checks that `f: X -> Y` commutes with all four structure maps.
pub fn check_hopf_bimodule_morphism(h: &FiniteHopfAlgebra, f: &LinMap, x: &HopfBimodule, y: &HopfBimodule) -> Report {
    let mut r = Report::new("Hopf bimodule morphism");
    if f.dom() != x.dim || f.cod() != y.dim {
        r.flag("shape", false, Some(format!("map is {}x{}, expected {}x{}", f.cod(), f.dom(), y.dim, x.dim)));
        return r;
    }
    let hid = h.id();
    r.eq_maps("commutes with left action", &f.compose(&x.mul), &y.mul.compose(&hid.kron(f)));
    r.eq_maps("commutes with right action", &f.compose(&x.mur), &y.mur.compose(&f.kron(&hid)));
    r.eq_maps("commutes with left coaction", &hid.kron(f).compose(&x.nul), &y.nul.compose(f));
    r.eq_maps("commutes with right coaction", &f.kron(&hid).compose(&x.nur), &y.nur.compose(f));
    r
}

/// `Π = μ_l ∘ (S ⊗ id) ∘ ν_l`, an idempotent onto the left coinvariant part.
pub fn pi_idempotent(h: &FiniteHopfAlgebra, x: &HopfBimodule) -> Result<LinMap> {
    require_valid(h, x)?;
    let pi = pi_unchecked(h, x)?;
    if pi.compose(&pi) != pi {
        return Err(Error::NotIdempotent);
    }
    Ok(pi)
}

fn pi_unchecked(h: &FiniteHopfAlgebra, x: &HopfBimodule) -> Result<LinMap> {
    Ok(LinMap::chain(&[&x.mul, &h.s()?.kron(&LinMap::identity(x.dim)), &x.nul]))
}

/// Splits `Π`.
///
/// When `Π = η∘ε ⊗ id`, as for every smash inclusion `H ⋉ Y`, the splitting
/// is `(η ⊗ id, ε ⊗ id)` so that the invariants are literally the `1 ⊗ Y`
/// slot. Otherwise the deterministic elimination splitting is used.
pub fn pi_splitting(h: &FiniteHopfAlgebra, x: &HopfBimodule) -> Result<SplitPair> {
    require_valid(h, x)?;
    splitting_unchecked(h, x)
}

pub(crate) fn splitting_unchecked(h: &FiniteHopfAlgebra, x: &HopfBimodule) -> Result<SplitPair> {
    let pi = pi_unchecked(h, x)?;
    let d = h.dim();
    if x.dim.is_multiple_of(d) {
        let rest = LinMap::identity(x.dim / d);
        if pi == h.unit_counit().kron(&rest) {
            return Ok(SplitPair { section: h.eta().kron(&rest), retraction: h.eps().kron(&rest), rank: x.dim / d });
        }
    }
    split_idempotent(&pi)
}

/// The crossed module of invariants `p ∘ μ_r ∘ (i ⊗ id)`, `(p ⊗ id) ∘ ν_r ∘ i`
/// together with the splitting `(i, p)` of `Π`.
pub fn invariants(h: &FiniteHopfAlgebra, x: &HopfBimodule) -> Result<(YDModule, SplitPair)> {
    let sp = pi_splitting(h, x)?;
    let y = invariants_with(h, x, &sp);
    debug_assert!(check_crossed(h, &y).map(|r| r.passed()).unwrap_or(false));
    Ok((y, sp))
}

pub(crate) fn invariants_with(h: &FiniteHopfAlgebra, x: &HopfBimodule, sp: &SplitPair) -> YDModule {
    let hid = h.id();
    YDModule {
        dim: sp.rank,
        mur: LinMap::chain(&[&sp.retraction, &x.mur, &sp.section.kron(&hid)]),
        nur: LinMap::chain(&[&sp.retraction.kron(&hid), &x.nur, &sp.section]),
    }
}

/// `H ⋉ Y` on `H ⊗ Y`: induced left structures `m ⊗ id`, `Δ ⊗ id`, and
/// diagonal right structures `h k₁ ⊗ y·k₂`, `h₁ ⊗ y₀ ⊗ h₂y₁`.
pub fn smash_inclusion(h: &FiniteHopfAlgebra, y: &YDModule) -> Result<HopfBimodule> {
    check_crossed(h, y)?.into_result(Error::NotCrossed)?;
    let (n, d) = (y.dim, h.dim());
    let (hid, yid) = (h.id(), LinMap::identity(n));
    let mur = LinMap::chain(&[
        &h.m().kron(&y.mur),
        &LinMap::kron_all(&[&hid, &LinMap::flip(n, d), &hid]),
        &LinMap::kron_all(&[&hid, &yid, h.delta()]),
    ]);
    let nur = LinMap::chain(&[
        &LinMap::kron_all(&[&hid, &yid, h.m()]),
        &LinMap::kron_all(&[&hid, &LinMap::flip(d, n), &hid]),
        &h.delta().kron(&y.nur),
    ]);
    Ok(HopfBimodule { dim: d * n, mul: h.m().kron(&yid), mur, nul: h.delta().kron(&yid), nur })
}

/// `N ⊗_H M` realized on `N ⊗ inv(M)`, with the coequalizer `λ` out of and
/// the equalizer `ρ` into `N ⊗ M`.
///
/// `λ ∘ (id ⊗ i) = id` and `(id ⊗ p) ∘ ρ = id`; the composite `λ ∘ ρ` is in
/// general not the identity (on regular `kZ/2` it is `m ∘ Δ`).
#[derive(Clone, Debug)]
pub struct TensorOverH {
    pub product: HopfBimodule,
    /// `N ⊗ M -> N ⊗ inv(M)`
    pub lambda: LinMap,
    /// `N ⊗ inv(M) -> N ⊗ M`
    pub rho: LinMap,
    /// the splitting of `Π` on `M` that fixes the basis of `inv(M)`
    pub splitting: SplitPair,
}

/// Left structures from `N`; right action `n·h₁ ⊗ y·h₂` and right coaction
/// `n₀ ⊗ y₀ ⊗ n₁y₁` with `y` in the crossed module `inv(M)`.
///
/// `λ = (μ_r^N ⊗ id)(id_N ⊗ (id_H ⊗ p)ν_l^M)`,
/// `ρ = (id_N ⊗ μ_l^M(id_H ⊗ i))(ν_r^N ⊗ id)`.
pub fn tensor_over_h(h: &FiniteHopfAlgebra, n: &HopfBimodule, m: &HopfBimodule) -> Result<TensorOverH> {
    require_valid(h, n)?;
    require_valid(h, m)?;
    let sp = splitting_unchecked(h, m)?;
    Ok(tensor_with(h, n, m, sp))
}

/// [`tensor_over_h`] for valid inputs and a given splitting of `Π` on `M`.
pub(crate) fn tensor_with(h: &FiniteHopfAlgebra, n: &HopfBimodule, m: &HopfBimodule, sp: SplitPair) -> TensorOverH {
    let y = invariants_with(h, m, &sp);
    let (dn, r, d) = (n.dim, sp.rank, h.dim());
    let (hid, nid, rid) = (h.id(), LinMap::identity(dn), LinMap::identity(r));
    let lambda = n.mur.kron(&rid).compose(&nid.kron(&hid.kron(&sp.retraction).compose(&m.nul)));
    let rho = nid.kron(&m.mul.compose(&hid.kron(&sp.section))).compose(&n.nur.kron(&rid));
    let mur = LinMap::chain(&[
        &n.mur.kron(&y.mur),
        &LinMap::kron_all(&[&nid, &LinMap::flip(r, d), &hid]),
        &LinMap::kron_all(&[&nid, &rid, h.delta()]),
    ]);
    let nur = LinMap::chain(&[
        &LinMap::kron_all(&[&nid, &rid, h.m()]),
        &LinMap::kron_all(&[&nid, &LinMap::flip(d, r), &hid]),
        &n.nur.kron(&y.nur),
    ]);
    let product = HopfBimodule { dim: dn * r, mul: n.mul.kron(&rid), mur, nul: n.nul.kron(&rid), nur };
    TensorOverH { product, lambda, rho, splitting: sp }
}

/// The braiding `X ⊗ inv(Y) -> Y ⊗ inv(X)` of Hopf bimodules,
/// `(μ_l^Y ⊗ p_X μ_r^X)(id_H ⊗ Ψ_{X,Y} ⊗ id_H)(ν_l^X ⊗ ν_r^Y i_Y)`.
pub fn hopf_bimodule_braiding(h: &FiniteHopfAlgebra, x: &HopfBimodule, y: &HopfBimodule) -> Result<LinMap> {
    require_valid(h, x)?;
    require_valid(h, y)?;
    let spx = splitting_unchecked(h, x)?;
    let spy = splitting_unchecked(h, y)?;
    let hid = h.id();
    Ok(LinMap::chain(&[
        &y.mul.kron(&spx.retraction.compose(&x.mur)),
        &LinMap::kron_all(&[&hid, &LinMap::flip(x.dim, y.dim), &hid]),
        &x.nul.kron(&y.nur.compose(&spy.section)),
    ]))
}

/// `S_{X/H} = M_X ∘ (S ⊗ id ⊗ S) ∘ N_X` with `M_X = μ_l(id ⊗ μ_r)` and
/// `N_X = (id ⊗ ν_r)ν_l`.
pub fn relative_antipode(h: &FiniteHopfAlgebra, x: &HopfBimodule) -> Result<LinMap> {
    require_valid(h, x)?;
    let s = h.s()?;
    let (hid, xid) = (h.id(), LinMap::identity(x.dim));
    Ok(LinMap::chain(&[
        &x.mul,
        &hid.kron(&x.mur),
        &LinMap::kron_all(&[s, &xid, s]),
        &hid.kron(&x.nur),
        &x.nul,
    ]))
}

/// The polarized anti-(co)multiplicativity of the relative antipode:
/// `S_X μ_r = μ_l Ψ (S_X ⊗ S)`, `S_X μ_l = μ_r Ψ (S ⊗ S_X)` and the two
/// coaction versions `ν_l S_X = (S ⊗ S_X) Ψ ν_r`, `ν_r S_X = (S_X ⊗ S) Ψ ν_l`.
pub fn check_polarized_antipode(h: &FiniteHopfAlgebra, x: &HopfBimodule) -> Result<Report> {
    let sx = relative_antipode(h, x)?;
    let s = h.s()?;
    let (n, d) = (x.dim, h.dim());
    let mut r = Report::new("relative antipode");
    r.eq_maps("right action", &sx.compose(&x.mur), &LinMap::chain(&[&x.mul, &LinMap::flip(n, d), &sx.kron(s)]));
    r.eq_maps("left action", &sx.compose(&x.mul), &LinMap::chain(&[&x.mur, &LinMap::flip(d, n), &s.kron(&sx)]));
    r.eq_maps("left coaction", &x.nul.compose(&sx), &LinMap::chain(&[&s.kron(&sx), &LinMap::flip(n, d), &x.nur]));
    r.eq_maps("right coaction", &x.nur.compose(&sx), &LinMap::chain(&[&sx.kron(s), &LinMap::flip(d, n), &x.nul]));
    Ok(r)
}
