//! Right-right crossed (Yetter-Drinfeld) modules over a Hopf algebra, their
//! braiding, its inverse, and the monoidal structure.

use crate::error::{Error, Result};
use crate::exactla::{LinMap, Scalar};
use crate::hopf::{
    adjoint_action, check_algebra_morphism, coadjoint_coaction, expect_shape, regular_bimodule, Algebra, FiniteHopfAlgebra,
};
use crate::report::Report;

/// A right module `mur: X ⊗ H -> X` with right coaction `nur: X -> X ⊗ H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDModule {
    pub dim: usize,
    pub mur: LinMap,
    pub nur: LinMap,
}

impl YDModule {
    pub fn new(h: &FiniteHopfAlgebra, dim: usize, mur: LinMap, nur: LinMap) -> Result<Self> {
        expect_shape("right action", &mur, dim, dim * h.dim())?;
        expect_shape("right coaction", &nur, dim * h.dim(), dim)?;
        Ok(YDModule { dim, mur, nur })
    }

    /// The unit object `(k, ε, η)`.
    pub fn unit(h: &FiniteHopfAlgebra) -> Self {
        YDModule::trivial(h, 1)
    }

    /// `k^d` with `μ = id ⊗ ε` and `ν = id ⊗ η`.
    pub fn trivial(h: &FiniteHopfAlgebra, d: usize) -> Self {
        let id = LinMap::identity(d);
        YDModule { dim: d, mur: id.kron(h.eps()), nur: id.kron(h.eta()) }
    }

    /// `H` with the right adjoint action and the regular coaction `Δ`.
    pub fn adjoint_regular(h: &FiniteHopfAlgebra) -> Result<Self> {
        let ad = adjoint_action(h, &regular_bimodule(h))?;
        Ok(YDModule { dim: h.dim(), mur: ad, nur: h.delta().clone() })
    }

    /// `H` with the regular action `m` and the coadjoint coaction.
    pub fn regular_coadjoint(h: &FiniteHopfAlgebra) -> Result<Self> {
        let co = coadjoint_coaction(h, h.dim(), h.delta(), h.delta())?;
        Ok(YDModule { dim: h.dim(), mur: h.m().clone(), nur: co })
    }

    /// Validate with [`check_crossed`], failing with `NotCrossed`.
    pub fn verified(self, h: &FiniteHopfAlgebra) -> Result<Self> {
        let r = check_crossed(h, &self)?;
        r.into_result(Error::NotCrossed)?;
        Ok(self)
    }
}

fn ensure_shapes(h: &FiniteHopfAlgebra, x: &YDModule) -> Result<()> {
    expect_shape("right action", &x.mur, x.dim, x.dim * h.dim())?;
    expect_shape("right coaction", &x.nur, x.dim * h.dim(), x.dim)
}

/// Module laws, comodule laws, and the crossed-module compatibility
///
/// `(id ⊗ m)(Ψ_{H,X} ⊗ id)(id_H ⊗ ν∘μ)(Ψ_{X,H} ⊗ id)(id_X ⊗ Δ) = (μ ⊗ m)(id ⊗ Ψ_{H,H} ⊗ id)(ν ⊗ Δ)`
///
/// evaluated as maps `X ⊗ H -> X ⊗ H`.
pub fn check_crossed(h: &FiniteHopfAlgebra, x: &YDModule) -> Result<Report> {
    ensure_shapes(h, x)?;
    let mut r = Report::new("crossed module");
    let (n, d) = (x.dim, h.dim());
    let (hid, xid) = (h.id(), LinMap::identity(n));
    r.eq_maps("action associative", &x.mur.compose(&x.mur.kron(&hid)), &x.mur.compose(&xid.kron(h.m())));
    r.eq_maps("action unital", &x.mur.compose(&xid.kron(h.eta())), &xid);
    r.eq_maps(
        "coaction coassociative",
        &x.nur.kron(&hid).compose(&x.nur),
        &xid.kron(h.delta()).compose(&x.nur),
    );
    r.eq_maps("coaction counital", &xid.kron(h.eps()).compose(&x.nur), &xid);
    let lhs = LinMap::chain(&[
        &xid.kron(h.m()),
        &LinMap::flip(d, n).kron(&hid),
        &hid.kron(&x.nur.compose(&x.mur)),
        &LinMap::flip(n, d).kron(&hid),
        &xid.kron(h.delta()),
    ]);
    let rhs = LinMap::chain(&[
        &x.mur.kron(h.m()),
        &LinMap::kron_all(&[&xid, &LinMap::flip(d, d), &hid]),
        &x.nur.kron(h.delta()),
    ]);
    r.eq_maps("crossed compatibility", &lhs, &rhs);
    Ok(r)
}

fn require_crossed(h: &FiniteHopfAlgebra, x: &YDModule) -> Result<()> {
    check_crossed(h, x)?.into_result(Error::NotCrossed).map(|_| ())
}

/// `(id_Y ⊗ μ^X)(Ψ_{X,Y} ⊗ id_H)(id_X ⊗ ν^Y): X ⊗ Y -> Y ⊗ X`, i.e.
/// `x ⊗ y ↦ y₀ ⊗ x·y₁`.
pub fn yd_braiding(h: &FiniteHopfAlgebra, x: &YDModule, y: &YDModule) -> Result<LinMap> {
    require_crossed(h, x)?;
    require_crossed(h, y)?;
    Ok(braiding_unchecked(h, x, y))
}

pub(crate) fn braiding_unchecked(h: &FiniteHopfAlgebra, x: &YDModule, y: &YDModule) -> LinMap {
    let (xid, yid) = (LinMap::identity(x.dim), LinMap::identity(y.dim));
    LinMap::chain(&[&yid.kron(&x.mur), &LinMap::flip(x.dim, y.dim).kron(&h.id()), &xid.kron(&y.nur)])
}

/// Inverse braiding `Y ⊗ X -> X ⊗ Y`, `y ⊗ x ↦ x·S⁻¹(y₁) ⊗ y₀`:
///
/// `(μ^X ⊗ id_Y)(id_X ⊗ Ψ⁻¹_{H,Y})(Ψ⁻¹_{X,Y} ⊗ S⁻¹)(id_Y ⊗ Ψ⁻¹_{X,H})(ν^Y ⊗ id_X)`.
///
/// The composite is checked against the forward braiding on both sides.
pub fn yd_braiding_inverse(h: &FiniteHopfAlgebra, x: &YDModule, y: &YDModule) -> Result<LinMap> {
    let s_inv = h.s_inv()?;
    require_crossed(h, x)?;
    require_crossed(h, y)?;
    let (n, m, d) = (x.dim, y.dim, h.dim());
    let (xid, yid) = (LinMap::identity(n), LinMap::identity(m));
    // flips are involutive up to reordering: Ψ⁻¹_{U,V} = Ψ_{V,U}
    let inv = LinMap::chain(&[
        &x.mur.kron(&yid),
        &xid.kron(&LinMap::flip(m, d)),
        &LinMap::flip(m, n).kron(s_inv),
        &yid.kron(&LinMap::flip(d, n)),
        &y.nur.kron(&xid),
    ]);
    let fwd = braiding_unchecked(h, x, y);
    let mut r = Report::new("inverse braiding");
    r.eq_maps("inverse after braiding", &inv.compose(&fwd), &LinMap::identity(n * m));
    r.eq_maps("braiding after inverse", &fwd.compose(&inv), &LinMap::identity(n * m));
    r.into_result(Error::AxiomFailure)?;
    Ok(inv)
}

/// `X ⊗ Y` with diagonal action `x·h₁ ⊗ y·h₂` and diagonal coaction
/// `x₀ ⊗ y₀ ⊗ x₁y₁`.
pub fn yd_tensor(h: &FiniteHopfAlgebra, x: &YDModule, y: &YDModule) -> Result<YDModule> {
    require_crossed(h, x)?;
    require_crossed(h, y)?;
    Ok(tensor_unchecked(h, x, y))
}

pub(crate) fn tensor_unchecked(h: &FiniteHopfAlgebra, x: &YDModule, y: &YDModule) -> YDModule {
    let (n, m, d) = (x.dim, y.dim, h.dim());
    let (xid, yid, hid) = (LinMap::identity(n), LinMap::identity(m), h.id());
    let mur = LinMap::chain(&[
        &x.mur.kron(&y.mur),
        &LinMap::kron_all(&[&xid, &LinMap::flip(m, d), &hid]),
        &LinMap::kron_all(&[&xid, &yid, h.delta()]),
    ]);
    let nur = LinMap::chain(&[
        &LinMap::kron_all(&[&xid, &yid, h.m()]),
        &LinMap::kron_all(&[&xid, &LinMap::flip(d, m), &hid]),
        &x.nur.kron(&y.nur),
    ]);
    YDModule { dim: n * m, mur, nur }
}

/// Checks that `f: X -> Y` commutes with actions and coactions.
pub fn check_yd_morphism(h: &FiniteHopfAlgebra, f: &LinMap, x: &YDModule, y: &YDModule) -> Report {
    let mut r = Report::new("crossed-module morphism");
    if f.dom() != x.dim || f.cod() != y.dim {
        r.flag("shape", false, Some(format!("map is {}x{}, expected {}x{}", f.cod(), f.dom(), y.dim, x.dim)));
        return r;
    }
    let hid = h.id();
    r.eq_maps("commutes with action", &f.compose(&x.mur), &y.mur.compose(&f.kron(&hid)));
    r.eq_maps("commutes with coaction", &f.kron(&hid).compose(&x.nur), &y.nur.compose(f));
    r
}

/// The braid relation for `Ψ^{YD}` on `X ⊗ Y ⊗ Z`:
/// `(Ψ_{Y,Z} ⊗ id)(id ⊗ Ψ_{X,Z})(Ψ_{X,Y} ⊗ id) = (id ⊗ Ψ_{X,Y})(Ψ_{X,Z} ⊗ id)(id ⊗ Ψ_{Y,Z})`.
pub fn check_braid_relation(h: &FiniteHopfAlgebra, x: &YDModule, y: &YDModule, z: &YDModule) -> Result<Report> {
    let pxy = yd_braiding(h, x, y)?;
    let pxz = yd_braiding(h, x, z)?;
    let pyz = yd_braiding(h, y, z)?;
    let (ix, iy, iz) = (LinMap::identity(x.dim), LinMap::identity(y.dim), LinMap::identity(z.dim));
    let lhs = LinMap::chain(&[&pyz.kron(&ix), &iy.kron(&pxz), &pxy.kron(&iz)]);
    let rhs = LinMap::chain(&[&iz.kron(&pxy), &pxz.kron(&iy), &ix.kron(&pyz)]);
    let mut r = Report::new("braid relation");
    r.eq_maps("braid relation", &lhs, &rhs);
    Ok(r)
}

/// Named crossed modules of dimension at most 4 used for examples and tests.
///
/// Every entry passes [`check_crossed`]; candidates that do not are skipped.
pub fn example_modules(h: &FiniteHopfAlgebra) -> Vec<(String, YDModule)> {
    let mut out: Vec<(String, YDModule)> = vec![
        ("unit".into(), YDModule::unit(h)),
        ("trivial2".into(), YDModule::trivial(h, 2)),
    ];
    if h.dim() <= 4 {
        if let Ok(m) = YDModule::adjoint_regular(h) {
            out.push(("adjoint-regular".into(), m));
        }
        if let Ok(m) = YDModule::regular_coadjoint(h) {
            out.push(("regular-coadjoint".into(), m));
        }
    }
    for g in grouplikes(h) {
        let gv = basis_vector(h.dim(), g);
        if h.dim() <= 4 {
            let nur = LinMap::identity(h.dim()).kron(&gv);
            out.push((format!("regular-graded(g={g})"), YDModule { dim: h.dim(), mur: h.m().clone(), nur }));
        }
        for chi in sign_characters(h) {
            let label: Vec<String> = chi.iter().map(|c| c.to_string()).collect();
            let line = YDModule { dim: 1, mur: LinMap::row_vector(&chi), nur: gv.clone() };
            if line != YDModule::unit(h) {
                out.push((format!("line(g={g},chi=[{}])", label.join(",")), line));
            }
        }
    }
    out.retain(|(_, m)| check_crossed(h, m).map(|r| r.passed()).unwrap_or(false));
    out
}

fn basis_vector(d: usize, i: usize) -> LinMap {
    LinMap::from_triples(d, 1, [(i, 0, Scalar::one())]).expect("basis vector")
}

/// Basis vectors `g` with `Δg = g ⊗ g`.
fn grouplikes(h: &FiniteHopfAlgebra) -> Vec<usize> {
    (0..h.dim())
        .filter(|&i| {
            let e = basis_vector(h.dim(), i);
            h.delta().compose(&e) == e.kron(&e)
        })
        .collect()
}

/// Algebra maps `H -> k` with values in `{-1, 0, 1}` on the basis, found by
/// exhaustive search (only for `dim H <= 4`).
fn sign_characters(h: &FiniteHopfAlgebra) -> Vec<Vec<Scalar>> {
    let d = h.dim();
    if d > 4 {
        return Vec::new();
    }
    let alg = h.algebra();
    let mut out = Vec::new();
    for code in 0..3usize.pow(d as u32) {
        let mut c = code;
        let vals: Vec<Scalar> = (0..d)
            .map(|_| {
                let v = (c % 3) as i64 - 1;
                c /= 3;
                Scalar::from_int(v)
            })
            .collect();
        let chi = LinMap::row_vector(&vals);
        if check_algebra_morphism(&chi, &alg, &Algebra::unit()).passed() {
            out.push(vals);
        }
    }
    out
}
