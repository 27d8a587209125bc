//! Finite-dimensional bialgebras and Hopf algebras given by structure
//! constants, their axiom checks, and the convolution product.

mod bimodule;
mod builtin;

pub use bimodule::{
    adjoint_action, check_bimodule, coadjoint_coaction, left_adjoint_action, pullback_bimodule, regular_bimodule,
    Bimodule,
};
pub use builtin::{
    builtin, cyclic_group_table, function_algebra, group_algebra, permutation_group_table, sweedler, taft, taft_cyclotomic,
    trivial,
};

use crate::error::{Error, Result};
use crate::exactla::{inverse, solve_operator, Field, LinMap};
use crate::report::Report;

/// An algebra `(A, m, η)` on a based space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub dim: usize,
    pub m: LinMap,
    pub eta: LinMap,
}

/// A coalgebra `(C, Δ, ε)` on a based space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    pub dim: usize,
    pub delta: LinMap,
    pub eps: LinMap,
}

impl Algebra {
    pub fn new(dim: usize, m: LinMap, eta: LinMap) -> Result<Self> {
        expect_shape("m", &m, dim, dim * dim)?;
        expect_shape("eta", &eta, dim, 1)?;
        Ok(Algebra { dim, m, eta })
    }

    /// The base field as an algebra.
    pub fn unit() -> Self {
        Algebra { dim: 1, m: LinMap::identity(1), eta: LinMap::identity(1) }
    }

    /// Associativity and unit laws.
    pub fn check(&self) -> Report {
        let mut r = Report::new("algebra");
        check_algebra_laws(&mut r, self);
        r
    }

    /// Multiplication of `A ⊗ B` with the flip in the middle.
    pub fn tensor(&self, other: &Algebra) -> Algebra {
        Algebra {
            dim: self.dim * other.dim,
            m: tensor_mul(&self.m, self.dim, &other.m, other.dim),
            eta: self.eta.kron(&other.eta),
        }
    }
}

impl Coalgebra {
    pub fn new(dim: usize, delta: LinMap, eps: LinMap) -> Result<Self> {
        expect_shape("delta", &delta, dim * dim, dim)?;
        expect_shape("eps", &eps, 1, dim)?;
        Ok(Coalgebra { dim, delta, eps })
    }

    pub fn unit() -> Self {
        Coalgebra { dim: 1, delta: LinMap::identity(1), eps: LinMap::identity(1) }
    }

    /// Coassociativity and counit laws.
    pub fn check(&self) -> Report {
        let mut r = Report::new("coalgebra");
        check_coalgebra_laws(&mut r, self);
        r
    }

    pub fn tensor(&self, other: &Coalgebra) -> Coalgebra {
        Coalgebra {
            dim: self.dim * other.dim,
            delta: tensor_comul(&self.delta, self.dim, &other.delta, other.dim),
            eps: self.eps.kron(&other.eps),
        }
    }
}

pub(crate) fn expect_shape(name: &str, f: &LinMap, cod: usize, dom: usize) -> Result<()> {
    if f.cod() != cod || f.dom() != dom {
        return Err(Error::ShapeMismatch(format!(
            "{name} is {}x{}, expected {cod}x{dom}",
            f.cod(),
            f.dom()
        )));
    }
    Ok(())
}

/// `(m_A ⊗ m_B) ∘ (id_A ⊗ Ψ_{B,A} ⊗ id_B)` on `(A ⊗ B) ⊗ (A ⊗ B)`.
pub fn tensor_mul(ma: &LinMap, da: usize, mb: &LinMap, db: usize) -> LinMap {
    let mid = LinMap::kron_all(&[&LinMap::identity(da), &LinMap::flip(db, da), &LinMap::identity(db)]);
    ma.kron(mb).compose(&mid)
}

/// `(id_A ⊗ Ψ_{A,B} ⊗ id_B) ∘ (Δ_A ⊗ Δ_B)` into `(A ⊗ B) ⊗ (A ⊗ B)`.
pub fn tensor_comul(delta_a: &LinMap, da: usize, delta_b: &LinMap, db: usize) -> LinMap {
    let mid = LinMap::kron_all(&[&LinMap::identity(da), &LinMap::flip(da, db), &LinMap::identity(db)]);
    mid.compose(&delta_a.kron(delta_b))
}

pub(crate) fn check_algebra_laws(r: &mut Report, a: &Algebra) {
    let id = LinMap::identity(a.dim);
    r.eq_maps("associativity", &a.m.compose(&a.m.kron(&id)), &a.m.compose(&id.kron(&a.m)));
    r.eq_maps("left unit", &a.m.compose(&a.eta.kron(&id)), &id);
    r.eq_maps("right unit", &a.m.compose(&id.kron(&a.eta)), &id);
}

pub(crate) fn check_coalgebra_laws(r: &mut Report, c: &Coalgebra) {
    let id = LinMap::identity(c.dim);
    r.eq_maps("coassociativity", &c.delta.kron(&id).compose(&c.delta), &id.kron(&c.delta).compose(&c.delta));
    r.eq_maps("left counit", &c.eps.kron(&id).compose(&c.delta), &id);
    r.eq_maps("right counit", &id.kron(&c.eps).compose(&c.delta), &id);
}

/// Checks that `Δ` and `ε` are algebra morphisms for an algebra and a
/// coalgebra structure on the same space, using the flip braiding.
pub(crate) fn check_bialgebra_laws(r: &mut Report, a: &Algebra, c: &Coalgebra) {
    let m2 = tensor_mul(&a.m, a.dim, &a.m, a.dim);
    r.eq_maps("comultiplication is multiplicative", &c.delta.compose(&a.m), &m2.compose(&c.delta.kron(&c.delta)));
    r.eq_maps("comultiplication is unital", &c.delta.compose(&a.eta), &a.eta.kron(&a.eta));
    r.eq_maps("counit is multiplicative", &c.eps.compose(&a.m), &c.eps.kron(&c.eps));
    r.eq_maps("counit is unital", &c.eps.compose(&a.eta), &LinMap::identity(1));
}

/// Checks that `f: A -> B` is an algebra morphism.
pub fn check_algebra_morphism(f: &LinMap, a: &Algebra, b: &Algebra) -> Report {
    let mut r = Report::new("algebra morphism");
    if f.dom() != a.dim || f.cod() != b.dim {
        r.flag("shape", false, Some(format!("map is {}x{}, expected {}x{}", f.cod(), f.dom(), b.dim, a.dim)));
        return r;
    }
    r.eq_maps("preserves multiplication", &f.compose(&a.m), &b.m.compose(&f.kron(f)));
    r.eq_maps("preserves unit", &f.compose(&a.eta), &b.eta);
    r
}

/// Checks that `f: C -> D` is a coalgebra morphism.
pub fn check_coalgebra_morphism(f: &LinMap, c: &Coalgebra, d: &Coalgebra) -> Report {
    let mut r = Report::new("coalgebra morphism");
    if f.dom() != c.dim || f.cod() != d.dim {
        r.flag("shape", false, Some(format!("map is {}x{}, expected {}x{}", f.cod(), f.dom(), d.dim, c.dim)));
        return r;
    }
    r.eq_maps("preserves comultiplication", &d.delta.compose(f), &f.kron(f).compose(&c.delta));
    r.eq_maps("preserves counit", &d.eps.compose(f), &c.eps);
    r
}

/// `m_A ∘ (f ⊗ g) ∘ Δ_C` for `f, g: C -> A`.
pub fn convolve(f: &LinMap, g: &LinMap, src: &Coalgebra, dst: &Algebra) -> Result<LinMap> {
    expect_shape("f", f, dst.dim, src.dim)?;
    expect_shape("g", g, dst.dim, src.dim)?;
    Ok(dst.m.compose(&f.kron(g)).compose(&src.delta))
}

/// A bialgebra, optionally with antipode and inverse antipode.
///
/// The axiom report is computed at construction and kept with the value.
#[derive(Clone, Debug)]
pub struct FiniteHopfAlgebra {
    name: String,
    field: Field,
    dim: usize,
    m: LinMap,
    eta: LinMap,
    delta: LinMap,
    eps: LinMap,
    s: Option<LinMap>,
    s_inv: Option<LinMap>,
    report: Report,
}

impl PartialEq for FiniteHopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.field == other.field
            && self.m == other.m
            && self.eta == other.eta
            && self.delta == other.delta
            && self.eps == other.eps
            && self.s == other.s
    }
}

impl FiniteHopfAlgebra {
    /// Assemble and check a bialgebra (`s = None`) or Hopf algebra.
    ///
    /// Axiom failures do not prevent construction; they are recorded in
    /// [`FiniteHopfAlgebra::report`].
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        field: Field,
        dim: usize,
        m: LinMap,
        eta: LinMap,
        delta: LinMap,
        eps: LinMap,
        s: Option<LinMap>,
    ) -> Result<Self> {
        expect_shape("m", &m, dim, dim * dim)?;
        expect_shape("eta", &eta, dim, 1)?;
        expect_shape("delta", &delta, dim * dim, dim)?;
        expect_shape("eps", &eps, 1, dim)?;
        if let Some(s) = &s {
            expect_shape("s", s, dim, dim)?;
        }
        let name = name.into();
        let mut h = FiniteHopfAlgebra {
            report: Report::new(name.clone()),
            name,
            field,
            dim,
            m,
            eta,
            delta,
            eps,
            s,
            s_inv: None,
        };
        h.report = h.run_checks();
        Ok(h)
    }

    /// Like [`FiniteHopfAlgebra::new`] but fails with `AxiomFailure` unless
    /// every axiom holds.
    #[allow(clippy::too_many_arguments)]
    pub fn verified(
        name: impl Into<String>,
        field: Field,
        dim: usize,
        m: LinMap,
        eta: LinMap,
        delta: LinMap,
        eps: LinMap,
        s: Option<LinMap>,
    ) -> Result<Self> {
        let h = FiniteHopfAlgebra::new(name, field, dim, m, eta, delta, eps, s)?;
        if !h.report.passed() {
            return Err(Error::AxiomFailure(Box::new(h.report)));
        }
        Ok(h)
    }

    /// Build from an algebra and a coalgebra on the same space.
    pub fn from_parts(
        name: impl Into<String>,
        field: Field,
        alg: Algebra,
        coalg: Coalgebra,
        s: Option<LinMap>,
    ) -> Result<Self> {
        if alg.dim != coalg.dim {
            return Err(Error::ShapeMismatch(format!(
                "algebra has dimension {}, coalgebra {}",
                alg.dim, coalg.dim
            )));
        }
        FiniteHopfAlgebra::new(name, field, alg.dim, alg.m, alg.eta, coalg.delta, coalg.eps, s)
    }

    fn run_checks(&self) -> Report {
        let mut r = Report::new(self.name.clone());
        let alg = self.algebra();
        let coalg = self.coalgebra();
        check_algebra_laws(&mut r, &alg);
        check_coalgebra_laws(&mut r, &coalg);
        check_bialgebra_laws(&mut r, &alg, &coalg);
        if let Some(s) = &self.s {
            let id = LinMap::identity(self.dim);
            let ee = self.eta.compose(&self.eps);
            r.eq_maps("antipode left", &LinMap::chain(&[&self.m, &s.kron(&id), &self.delta]), &ee);
            r.eq_maps("antipode right", &LinMap::chain(&[&self.m, &id.kron(s), &self.delta]), &ee);
        }
        if let (Some(s), Some(si)) = (&self.s, &self.s_inv) {
            let id = LinMap::identity(self.dim);
            r.eq_maps("inverse antipode", &s.compose(si), &id);
            r.eq_maps("inverse antipode (other side)", &si.compose(s), &id);
        }
        r
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self.report.subject = self.name.clone();
        self
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn m(&self) -> &LinMap {
        &self.m
    }

    pub fn eta(&self) -> &LinMap {
        &self.eta
    }

    pub fn delta(&self) -> &LinMap {
        &self.delta
    }

    pub fn eps(&self) -> &LinMap {
        &self.eps
    }

    pub fn id(&self) -> LinMap {
        LinMap::identity(self.dim)
    }

    /// The antipode, or `NoAntipode` for a bare bialgebra.
    pub fn s(&self) -> Result<&LinMap> {
        self.s.as_ref().ok_or(Error::NoAntipode)
    }

    pub fn has_antipode(&self) -> bool {
        self.s.is_some()
    }

    /// The stored inverse antipode, or `AntipodeNotInverted`.
    pub fn s_inv(&self) -> Result<&LinMap> {
        self.s_inv.as_ref().ok_or(Error::AntipodeNotInverted)
    }

    pub fn algebra(&self) -> Algebra {
        Algebra { dim: self.dim, m: self.m.clone(), eta: self.eta.clone() }
    }

    pub fn coalgebra(&self) -> Coalgebra {
        Coalgebra { dim: self.dim, delta: self.delta.clone(), eps: self.eps.clone() }
    }

    /// The cached axiom report.
    pub fn report(&self) -> &Report {
        &self.report
    }

    /// Compute `S⁻¹`, store it, and return it.
    pub fn invert_antipode(&mut self) -> Result<LinMap> {
        let s = self.s()?;
        let si = inverse(s).map_err(|_| Error::NotInvertible("antipode is singular".into()))?;
        self.s_inv = Some(si.clone());
        self.report = self.run_checks();
        Ok(si)
    }

    /// Find the antipode of a bialgebra as the convolution inverse of `id`,
    /// by solving the linear system `m(S ⊗ id)Δ = ηε = m(id ⊗ S)Δ`.
    ///
    /// Fails with `NoAntipode` if the system is inconsistent.
    pub fn solve_antipode(&self) -> Result<LinMap> {
        let (d, id) = (self.dim, LinMap::identity(self.dim));
        let ee = self.unit_counit();
        let op = |x: &LinMap| {
            LinMap::vstack(&[
                &LinMap::chain(&[&self.m, &x.kron(&id), &self.delta]),
                &LinMap::chain(&[&self.m, &id.kron(x), &self.delta]),
            ])
        };
        match solve_operator(d, d, op, &LinMap::vstack(&[&ee, &ee]))? {
            Some((s, 0)) => Ok(s),
            Some((_, n)) => Err(Error::NonUniqueSolution(n)),
            None => Err(Error::NoAntipode),
        }
    }

    /// Attach the solved antipode and its inverse.
    pub fn with_solved_antipode(mut self) -> Result<Self> {
        let s = self.solve_antipode()?;
        self.s = Some(s);
        self.report = self.run_checks();
        self.with_inverted_antipode()
    }

    /// Builder form of [`FiniteHopfAlgebra::invert_antipode`].
    pub fn with_inverted_antipode(mut self) -> Result<Self> {
        self.invert_antipode()?;
        Ok(self)
    }

    /// `η ∘ ε`.
    pub fn unit_counit(&self) -> LinMap {
        self.eta.compose(&self.eps)
    }

    /// Multiplication of `H ⊗ H`.
    pub fn square_mul(&self) -> LinMap {
        tensor_mul(&self.m, self.dim, &self.m, self.dim)
    }

    /// `m ∘ Ψ`, the opposite multiplication.
    pub fn mul_op(&self) -> LinMap {
        self.m.compose(&LinMap::flip(self.dim, self.dim))
    }

    /// `Ψ ∘ Δ`, the opposite comultiplication.
    pub fn delta_op(&self) -> LinMap {
        LinMap::flip(self.dim, self.dim).compose(&self.delta)
    }

    /// Left multiplication by the element `a` (a column vector).
    pub fn left_mul_by(&self, a: &LinMap) -> LinMap {
        self.m.compose(&a.kron(&self.id()))
    }

    /// Right multiplication by the element `a`.
    pub fn right_mul_by(&self, a: &LinMap) -> LinMap {
        self.m.compose(&self.id().kron(a))
    }

    /// Product of two elements given as column vectors.
    pub fn product(&self, a: &LinMap, b: &LinMap) -> LinMap {
        self.m.compose(&a.kron(b))
    }
}

/// Run the axiom suite; fails with `ShapeMismatch` only via construction.
pub fn check_hopf(h: &FiniteHopfAlgebra) -> Report {
    h.report().clone()
}

/// `m_dst ∘ (f ⊗ g) ∘ Δ_src`.
pub fn convolution(f: &LinMap, g: &LinMap, src: &FiniteHopfAlgebra, dst: &FiniteHopfAlgebra) -> Result<LinMap> {
    convolve(f, g, &src.coalgebra(), &dst.algebra())
}
