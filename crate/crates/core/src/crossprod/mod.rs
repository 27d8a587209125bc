//! Smash (cross) products and coproducts, admissible objects, bialgebra
//! projections and their decomposition, and quasitriangular structures.

mod projection;
mod qt;

pub use projection::{
    antipode_from_bimodule, antipode_to_bimodule, bimodule_bialgebra_to_projection, check_bimodule_bialgebra,
    check_projection, projection_to_bimodule_bialgebra, radford_majid_decompose, BialgebraProjection,
    BimoduleBialgebra, Decomposition,
};
pub use qt::{
    bosonize_qt, check_category_o, check_inner_quasitriangular, check_qt_projection, check_quasitriangular,
    from_qt_module, qt_decompose, z2_r_matrix, z2_triangular, InnerQT, QTBialgebra,
};

use crate::error::{Error, Result};
use crate::exactla::{rank, LinMap};
use crate::hopf::{check_algebra_morphism, expect_shape, Algebra, Coalgebra, FiniteHopfAlgebra};
use crate::report::Report;
use crate::yd::YDModule;

/// An algebra with a right `H`-action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAlgebra {
    pub dim: usize,
    pub m: LinMap,
    pub eta: LinMap,
    pub mur: LinMap,
}

/// A coalgebra with a right `H`-coaction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleCoalgebra {
    pub dim: usize,
    pub delta: LinMap,
    pub eps: LinMap,
    pub nur: LinMap,
}

/// An object carrying algebra, coalgebra, right action and right coaction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleObject {
    pub dim: usize,
    pub m: LinMap,
    pub eta: LinMap,
    pub delta: LinMap,
    pub eps: LinMap,
    pub mur: LinMap,
    pub nur: LinMap,
}

impl AdmissibleObject {
    /// The base field with trivial structures.
    pub fn unit(h: &FiniteHopfAlgebra) -> Self {
        let one = LinMap::identity(1);
        AdmissibleObject {
            dim: 1,
            m: one.clone(),
            eta: one.clone(),
            delta: one.clone(),
            eps: one.clone(),
            mur: h.eps().clone(),
            nur: h.eta().clone(),
        }
    }

    pub fn module_algebra(&self) -> ModuleAlgebra {
        ModuleAlgebra { dim: self.dim, m: self.m.clone(), eta: self.eta.clone(), mur: self.mur.clone() }
    }

    pub fn comodule_coalgebra(&self) -> ComoduleCoalgebra {
        ComoduleCoalgebra { dim: self.dim, delta: self.delta.clone(), eps: self.eps.clone(), nur: self.nur.clone() }
    }

    pub fn yd(&self) -> YDModule {
        YDModule { dim: self.dim, mur: self.mur.clone(), nur: self.nur.clone() }
    }

    pub fn algebra(&self) -> Algebra {
        Algebra { dim: self.dim, m: self.m.clone(), eta: self.eta.clone() }
    }

    pub fn coalgebra(&self) -> Coalgebra {
        Coalgebra { dim: self.dim, delta: self.delta.clone(), eps: self.eps.clone() }
    }
}

/// `kZ/2` and the braided line `k[x]/(x²)` over it: `x·g = -x`,
/// `x ↦ x ⊗ g`, `x` primitive. Basis `1, x`.
pub fn braided_line() -> (FiniteHopfAlgebra, AdmissibleObject) {
    let h = crate::hopf::builtin("cyclic:2").expect("kZ/2");
    let x = AdmissibleObject {
        dim: 2,
        m: LinMap::from_int_rows(&[[1, 0, 0, 0], [0, 1, 1, 0]]),
        eta: LinMap::from_int_rows(&[[1], [0]]),
        delta: LinMap::from_int_rows(&[[1, 0], [0, 1], [0, 1], [0, 0]]),
        eps: LinMap::from_int_rows(&[[1, 0]]),
        // index b·2 + h over the basis (1, g) of H
        mur: LinMap::from_int_rows(&[[1, 1, 0, 0], [0, 0, 1, -1]]),
        nur: LinMap::from_int_rows(&[[1, 0], [0, 0], [0, 0], [0, 1]]),
    };
    (h, x)
}

/// The braided antipode `x ↦ -x` of the braided line.
pub fn braided_line_antipode() -> LinMap {
    LinMap::from_int_rows(&[[1, 0], [0, -1]])
}

fn ensure_action(h: &FiniteHopfAlgebra, dim: usize, mur: &LinMap) -> Result<()> {
    expect_shape("right action", mur, dim, dim * h.dim())
}

fn ensure_coaction(h: &FiniteHopfAlgebra, dim: usize, nur: &LinMap) -> Result<()> {
    expect_shape("right coaction", nur, dim * h.dim(), dim)
}

/// Module laws, `(ab)·h = (a·h₁)(b·h₂)` and `1·h = ε(h)1`.
pub fn check_module_algebra(h: &FiniteHopfAlgebra, a: &ModuleAlgebra) -> Result<Report> {
    Algebra::new(a.dim, a.m.clone(), a.eta.clone())?;
    ensure_action(h, a.dim, &a.mur)?;
    let (n, d) = (a.dim, h.dim());
    let (hid, xid) = (h.id(), LinMap::identity(n));
    let mut r = Report::new("module algebra");
    r.merge("", Algebra { dim: n, m: a.m.clone(), eta: a.eta.clone() }.check());
    r.eq_maps("action associative", &a.mur.compose(&a.mur.kron(&hid)), &a.mur.compose(&xid.kron(h.m())));
    r.eq_maps("action unital", &a.mur.compose(&xid.kron(h.eta())), &xid);
    let lhs = a.mur.compose(&a.m.kron(&hid));
    let rhs = LinMap::chain(&[
        &a.m,
        &a.mur.kron(&a.mur),
        &LinMap::kron_all(&[&xid, &LinMap::flip(n, d), &hid]),
        &LinMap::kron_all(&[&xid, &xid, h.delta()]),
    ]);
    r.eq_maps("multiplication is linear", &lhs, &rhs);
    r.eq_maps("unit is linear", &a.mur.compose(&a.eta.kron(&hid)), &a.eta.compose(h.eps()));
    Ok(r)
}

/// Comodule laws, `Δ` and `ε` colinear for the diagonal coaction on `C ⊗ C`.
pub fn check_comodule_coalgebra(h: &FiniteHopfAlgebra, c: &ComoduleCoalgebra) -> Result<Report> {
    Coalgebra::new(c.dim, c.delta.clone(), c.eps.clone())?;
    ensure_coaction(h, c.dim, &c.nur)?;
    let (n, d) = (c.dim, h.dim());
    let (hid, xid) = (h.id(), LinMap::identity(n));
    let mut r = Report::new("comodule coalgebra");
    r.merge("", Coalgebra { dim: n, delta: c.delta.clone(), eps: c.eps.clone() }.check());
    r.eq_maps("coaction coassociative", &c.nur.kron(&hid).compose(&c.nur), &xid.kron(h.delta()).compose(&c.nur));
    r.eq_maps("coaction counital", &xid.kron(h.eps()).compose(&c.nur), &xid);
    let lhs = c.delta.kron(&hid).compose(&c.nur);
    let rhs = LinMap::chain(&[
        &LinMap::kron_all(&[&xid, &xid, h.m()]),
        &LinMap::kron_all(&[&xid, &LinMap::flip(d, n), &hid]),
        &c.nur.kron(&c.nur),
        &c.delta,
    ]);
    r.eq_maps("comultiplication is colinear", &lhs, &rhs);
    r.eq_maps("counit is colinear", &c.eps.kron(&hid).compose(&c.nur), &h.eta().compose(&c.eps));
    Ok(r)
}

/// The smash product algebra on `H ⊗ A` with its canonical injections.
#[derive(Clone, Debug)]
pub struct SmashProduct {
    pub algebra: Algebra,
    /// `η_H ⊗ id_A: A -> H ⊗ A`
    pub i: LinMap,
    /// `id_H ⊗ η_A: H -> H ⊗ A`
    pub j: LinMap,
}

/// `(h ⊗ a)(k ⊗ b) = hk₁ ⊗ (a·k₂)b`, unit `η_H ⊗ η_A`.
pub fn smash_product(h: &FiniteHopfAlgebra, a: &ModuleAlgebra) -> Result<SmashProduct> {
    check_module_algebra(h, a)?.into_result(Error::NotModuleAlgebra)?;
    let (n, d) = (a.dim, h.dim());
    let (hid, xid) = (h.id(), LinMap::identity(n));
    let twist = LinMap::chain(&[&hid.kron(&a.mur), &LinMap::flip(n, d).kron(&hid), &xid.kron(h.delta())]);
    let m = h.m().kron(&a.m).compose(&LinMap::kron_all(&[&hid, &twist, &xid]));
    let algebra = Algebra { dim: d * n, m, eta: h.eta().kron(&a.eta) };
    Ok(SmashProduct { algebra, i: h.eta().kron(&xid), j: hid.kron(&a.eta) })
}

/// `m_U ∘ (g ⊗ f)`, the map out of the smash product induced by
/// `g: H -> U` and `f: A -> U`.
pub fn universal_map(u: &Algebra, g: &LinMap, f: &LinMap) -> Result<LinMap> {
    expect_shape("g", g, u.dim, g.dom())?;
    expect_shape("f", f, u.dim, f.dom())?;
    Ok(u.m.compose(&g.kron(f)))
}

/// Checks the hypotheses on `(g, f)` and the conclusions of the universal
/// property: `g` and `f` are algebra maps, `f(a·h) = g(S(h₁)) f(a) g(h₂)`,
/// the induced map is an algebra map restricting to `g` and `f`, and the
/// products `j(h) i(a)` span the smash product, which makes it unique.
pub fn check_universal_map(
    h: &FiniteHopfAlgebra,
    a: &ModuleAlgebra,
    u: &Algebra,
    g: &LinMap,
    f: &LinMap,
) -> Result<Report> {
    let sp = smash_product(h, a)?;
    expect_shape("g", g, u.dim, h.dim())?;
    expect_shape("f", f, u.dim, a.dim)?;
    let s = h.s()?;
    let mut r = Report::new("smash product universal map");
    r.merge("g: ", check_algebra_morphism(g, &h.algebra(), u));
    r.merge("f: ", check_algebra_morphism(f, &Algebra { dim: a.dim, m: a.m.clone(), eta: a.eta.clone() }, u));
    let adjoint = LinMap::chain(&[
        &u.m,
        &u.m.kron(g),
        &LinMap::kron_all(&[&g.compose(s), f, &h.id()]),
        &LinMap::flip(a.dim, h.dim()).kron(&h.id()),
        &LinMap::identity(a.dim).kron(h.delta()),
    ]);
    r.eq_maps("f is linear into the adjoint module", &f.compose(&a.mur), &adjoint);
    let phi = universal_map(u, g, f)?;
    r.merge("induced map: ", check_algebra_morphism(&phi, &sp.algebra, u));
    r.eq_maps("restricts to f", &phi.compose(&sp.i), f);
    r.eq_maps("restricts to g", &phi.compose(&sp.j), g);
    let spanned = rank(&sp.algebra.m.compose(&sp.j.kron(&sp.i)));
    r.flag(
        "injections generate",
        spanned == sp.algebra.dim,
        Some(format!("products j(h)i(a) span {spanned} of {}", sp.algebra.dim)),
    );
    Ok(r)
}

/// The dual of [`smash_product`]:
/// `Δ(h ⊗ c) = h₁ ⊗ c₁₍₀₎ ⊗ h₂c₁₍₁₎ ⊗ c₂`, `ε = ε_H ⊗ ε_C`.
pub fn smash_coproduct(h: &FiniteHopfAlgebra, c: &ComoduleCoalgebra) -> Result<Coalgebra> {
    check_comodule_coalgebra(h, c)?.into_result(Error::NotComoduleCoalgebra)?;
    Ok(smash_coproduct_unchecked(h, c))
}

fn smash_coproduct_unchecked(h: &FiniteHopfAlgebra, c: &ComoduleCoalgebra) -> Coalgebra {
    let (n, d) = (c.dim, h.dim());
    let (hid, xid) = (h.id(), LinMap::identity(n));
    let twist = LinMap::chain(&[&xid.kron(h.m()), &LinMap::flip(d, n).kron(&hid), &hid.kron(&c.nur)]);
    let delta = LinMap::kron_all(&[&hid, &twist, &xid]).compose(&h.delta().kron(&c.delta));
    Coalgebra { dim: d * n, delta, eps: h.eps().kron(&c.eps) }
}

/// The bialgebra `H ⋉ X`, with the antipode solved for when one exists.
pub fn smash_bialgebra(h: &FiniteHopfAlgebra, x: &AdmissibleObject) -> Result<FiniteHopfAlgebra> {
    let report = check_admissible(h, x)?;
    report.into_result(Error::AxiomFailure)?;
    let b = smash_bialgebra_unchecked(h, x)?;
    if !h.has_antipode() {
        return Ok(b);
    }
    match b.clone().with_solved_antipode() {
        Ok(hopf) => Ok(hopf),
        Err(Error::NoAntipode) => Ok(b),
        Err(e) => Err(e),
    }
}

fn smash_bialgebra_unchecked(h: &FiniteHopfAlgebra, x: &AdmissibleObject) -> Result<FiniteHopfAlgebra> {
    let sp = smash_product(h, &x.module_algebra())?;
    let co = smash_coproduct_unchecked(h, &x.comodule_coalgebra());
    FiniteHopfAlgebra::from_parts(format!("{}⋉X", h.name()), h.field().clone(), sp.algebra, co, None)
}

/// The admissibility conditions: `X` a module algebra and a comodule
/// coalgebra, `H ⋉ X` a bialgebra, the five relations
/// `ε_X m_X = ε_X ⊗ ε_X`, `ε_X μ_r = ε_X ⊗ ε_H`, `Δ_X η_X = η_X ⊗ η_X`,
/// `ν_r η_X = η_X ⊗ η_H`, `ε_X η_X = 1`, and that
/// `(H, H ⋉ X, id ⊗ η_X, id ⊗ ε_X)` is a bialgebra projection.
pub fn check_admissible(h: &FiniteHopfAlgebra, x: &AdmissibleObject) -> Result<Report> {
    let ma = x.module_algebra();
    let cc = x.comodule_coalgebra();
    let mut r = Report::new("admissible object");
    r.merge("module algebra: ", check_module_algebra(h, &ma)?);
    r.merge("comodule coalgebra: ", check_comodule_coalgebra(h, &cc)?);
    let b = smash_bialgebra_unchecked(h, x)?;
    r.merge("smash bialgebra: ", b.report().clone());

    let one = LinMap::identity(1);
    r.eq_maps("counit multiplicative", &x.eps.compose(&x.m), &x.eps.kron(&x.eps));
    r.eq_maps("counit linear", &x.eps.compose(&x.mur), &x.eps.kron(h.eps()));
    r.eq_maps("unit comultiplicative", &x.delta.compose(&x.eta), &x.eta.kron(&x.eta));
    r.eq_maps("unit colinear", &x.nur.compose(&x.eta), &x.eta.kron(h.eta()));
    r.eq_maps("counit after unit", &x.eps.compose(&x.eta), &one);

    let p = BialgebraProjection {
        b1: h.clone(),
        b2: b,
        eta_bar: h.id().kron(&x.eta),
        eps_bar: h.id().kron(&x.eps),
    };
    r.merge("projection: ", check_projection(&p));
    Ok(r)
}
