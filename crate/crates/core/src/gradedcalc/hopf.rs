use std::collections::BTreeMap;

use super::{
    antisymmetrizer, block_swap, braid_rep, check_bound, inverse_shuffle_antisymmetrizer, longest_element,
    shuffle_antisymmetrizer, sign, BraidedObject, GradedObject, DEFAULT_DEGREE_BOUND,
};
use crate::error::{Error, Result};
use crate::exactla::{factorize, solve, sum_maps, LinMap};
use crate::hopf::expect_shape;
use crate::report::Report;

type Components = BTreeMap<(usize, usize), LinMap>;

/// A bialgebra in graded objects, truncated at `dims.len() - 1`.
///
/// Components are indexed by degree pairs with `a + b ≤ max`:
/// `m[(a, b)]: X_a ⊗ X_b -> X_{a+b}`, `delta[(a, b)]: X_{a+b} -> X_a ⊗ X_b`,
/// and `braid[(a, b)] = Ψ_{X_a,X_b}` without the sign `(-1)^{ab}`, which the
/// checks apply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBialgebra {
    pub dims: Vec<usize>,
    pub m: Components,
    pub delta: Components,
    /// `k -> X_0`
    pub eta: LinMap,
    /// `X_0 -> k`
    pub eps: LinMap,
    /// `S_j: X_j -> X_j`, when present.
    pub antipode: Option<Vec<LinMap>>,
    pub braid: Components,
}

impl GradedBialgebra {
    pub fn max_degree(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }

    pub fn dim(&self, k: usize) -> usize {
        self.dims.get(k).copied().unwrap_or(0)
    }

    pub fn graded(&self) -> GradedObject {
        GradedObject::new(self.dims.clone())
    }

    /// Panics on a missing component; run [`GradedBialgebra::validate`] first.
    pub fn mul(&self, a: usize, b: usize) -> &LinMap {
        &self.m[&(a, b)]
    }

    pub fn comul(&self, a: usize, b: usize) -> &LinMap {
        &self.delta[&(a, b)]
    }

    pub fn braiding(&self, a: usize, b: usize) -> &LinMap {
        &self.braid[&(a, b)]
    }

    fn id(&self, k: usize) -> LinMap {
        LinMap::identity(self.dim(k))
    }

    /// Every component present with the right shape.
    pub fn validate(&self) -> Result<()> {
        if self.dims.is_empty() {
            return Err(Error::ShapeMismatch("graded bialgebra without degree 0".into()));
        }
        let top = self.max_degree();
        expect_shape("unit", &self.eta, self.dim(0), 1)?;
        expect_shape("counit", &self.eps, 1, self.dim(0))?;
        for t in 0..=top {
            for a in 0..=t {
                let b = t - a;
                let (da, db, dt) = (self.dim(a), self.dim(b), self.dim(t));
                expect_shape(&format!("m_({a},{b})"), component(&self.m, "product", a, b)?, dt, da * db)?;
                expect_shape(&format!("Δ_({a},{b})"), component(&self.delta, "coproduct", a, b)?, da * db, dt)?;
                expect_shape(&format!("Ψ_({a},{b})"), component(&self.braid, "braiding", a, b)?, db * da, da * db)?;
            }
        }
        if let Some(s) = &self.antipode {
            if s.len() != self.dims.len() {
                return Err(Error::ShapeMismatch(format!("{} antipode components for {} degrees", s.len(), self.dims.len())));
            }
            for (j, sj) in s.iter().enumerate() {
                expect_shape(&format!("S_{j}"), sj, self.dim(j), self.dim(j))?;
            }
        }
        Ok(())
    }

    /// Componentwise flip braidings, as for graded vector spaces.
    pub fn flip_braidings(dims: &[usize]) -> Components {
        let top = dims.len().saturating_sub(1);
        let mut out = Components::new();
        for t in 0..=top {
            for a in 0..=t {
                out.insert((a, t - a), LinMap::flip(dims[a], dims[t - a]));
            }
        }
        out
    }
}

fn component<'a>(map: &'a Components, what: &str, a: usize, b: usize) -> Result<&'a LinMap> {
    map.get(&(a, b)).ok_or_else(|| Error::ShapeMismatch(format!("missing {what} component ({a}, {b})")))
}

fn zero_square(n: usize) -> LinMap {
    LinMap::zero(n, n)
}

/// Graded (co)associativity, (co)unit laws, the bialgebra compatibility with
/// the signed braiding, and the antipode identities in degrees below the top.
pub fn check_graded_bialgebra(b: &GradedBialgebra) -> Result<Report> {
    b.validate()?;
    let mut r = Report::new("graded bialgebra");
    let top = b.max_degree();
    for t in 0..=top {
        for a in 0..=t {
            for bb in 0..=t - a {
                let c = t - a - bb;
                let lhs = b.mul(a + bb, c).compose(&b.mul(a, bb).kron(&b.id(c)));
                let rhs = b.mul(a, bb + c).compose(&b.id(a).kron(b.mul(bb, c)));
                r.eq_maps(format!("associative ({a},{bb},{c})"), &lhs, &rhs);
                let lhs = b.comul(a, bb).kron(&b.id(c)).compose(b.comul(a + bb, c));
                let rhs = b.id(a).kron(b.comul(bb, c)).compose(b.comul(a, bb + c));
                r.eq_maps(format!("coassociative ({a},{bb},{c})"), &lhs, &rhs);
            }
        }
        let id = b.id(t);
        r.eq_maps(format!("left unit ({t})"), &b.mul(0, t).compose(&b.eta.kron(&id)), &id);
        r.eq_maps(format!("right unit ({t})"), &b.mul(t, 0).compose(&id.kron(&b.eta)), &id);
        r.eq_maps(format!("left counit ({t})"), &b.eps.kron(&id).compose(b.comul(0, t)), &id);
        r.eq_maps(format!("right counit ({t})"), &id.kron(&b.eps).compose(b.comul(t, 0)), &id);
    }
    r.eq_maps("counit multiplicative", &b.eps.compose(b.mul(0, 0)), &b.eps.kron(&b.eps));
    r.eq_maps("unit comultiplicative", &b.comul(0, 0).compose(&b.eta), &b.eta.kron(&b.eta));
    r.eq_maps("counit after unit", &b.eps.compose(&b.eta), &LinMap::identity(1));
    for t in 0..=top {
        for a in 0..=t {
            let bb = t - a;
            for c in 0..=t {
                let d = t - c;
                let lhs = b.comul(c, d).compose(b.mul(a, bb));
                let mut terms = Vec::new();
                for a1 in 0..=a.min(c) {
                    let b1 = c - a1;
                    if b1 > bb {
                        continue;
                    }
                    let (a2, b2) = (a - a1, bb - b1);
                    let mid = b.braiding(a2, b1).scale(&sign(a2 * b1));
                    terms.push(LinMap::chain(&[
                        &b.mul(a1, b1).kron(b.mul(a2, b2)),
                        &LinMap::kron_all(&[&b.id(a1), &mid, &b.id(b2)]),
                        &b.comul(a1, a2).kron(b.comul(b1, b2)),
                    ]));
                }
                let rhs = sum_maps(lhs.cod(), lhs.dom(), terms);
                r.eq_maps(format!("compatibility ({a},{bb}) -> ({c},{d})"), &lhs, &rhs);
            }
        }
    }
    if let Some(s) = &b.antipode {
        let unit = b.eta.compose(&b.eps);
        for j in 0..=top.saturating_sub(1) {
            let n = b.dim(j);
            let left = (0..=j).map(|k| LinMap::chain(&[b.mul(k, j - k), &s[k].kron(&b.id(j - k)), b.comul(k, j - k)]));
            let right = (0..=j).map(|k| LinMap::chain(&[b.mul(k, j - k), &b.id(k).kron(&s[j - k]), b.comul(k, j - k)]));
            let expected = if j == 0 { unit.clone() } else { zero_square(n) };
            r.eq_maps(format!("left antipode ({j})"), &sum_maps(n, n, left), &expected);
            r.eq_maps(format!("right antipode ({j})"), &sum_maps(n, n, right), &expected);
        }
    }
    Ok(r)
}

/// `f_j: X_j -> Y_j` preserving products, coproducts, unit and counit in
/// every degree both truncations reach.
pub fn check_graded_morphism(f: &[LinMap], src: &GradedBialgebra, dst: &GradedBialgebra) -> Result<Report> {
    src.validate()?;
    dst.validate()?;
    let top = src.max_degree().min(dst.max_degree());
    if f.len() <= top {
        return Err(Error::ShapeMismatch(format!("{} components for maximal degree {top}", f.len())));
    }
    for (j, fj) in f.iter().enumerate().take(top + 1) {
        expect_shape(&format!("f_{j}"), fj, dst.dim(j), src.dim(j))?;
    }
    let mut r = Report::new("graded bialgebra morphism");
    for t in 0..=top {
        for a in 0..=t {
            let b = t - a;
            r.eq_maps(
                format!("preserves products ({a},{b})"),
                &f[t].compose(src.mul(a, b)),
                &dst.mul(a, b).compose(&f[a].kron(&f[b])),
            );
            r.eq_maps(
                format!("preserves coproducts ({a},{b})"),
                &f[a].kron(&f[b]).compose(src.comul(a, b)),
                &dst.comul(a, b).compose(&f[t]),
            );
        }
    }
    r.eq_maps("preserves unit", &f[0].compose(&src.eta), &dst.eta);
    r.eq_maps("preserves counit", &dst.eps.compose(&f[0]), &src.eps);
    Ok(r)
}

fn tensor_braidings(x: &BraidedObject, top: usize) -> Result<Components> {
    let mut out = Components::new();
    for t in 0..=top {
        for a in 0..=t {
            out.insert((a, t - a), braid_rep(x, t, &block_swap(a, t - a))?);
        }
    }
    Ok(out)
}

/// `S_j = (-1)^j (-1)^{l(σ_j⁰)} σ_j⁰`; the Coxeter sign of the longest element
/// is needed for the antipode law from degree 2 on.
fn tensor_antipode(x: &BraidedObject, top: usize) -> Result<Vec<LinMap>> {
    (0..=top).map(|j| Ok(braid_rep(x, j, &longest_element(j))?.scale(&sign(j + j * j.saturating_sub(1) / 2)))).collect()
}

enum Flavor {
    Tensor,
    Cotensor,
}

fn build(x: &BraidedObject, top: usize, flavor: Flavor) -> Result<GradedBialgebra> {
    check_bound(top, DEFAULT_DEGREE_BOUND)?;
    let dims: Vec<usize> = (0..=top).map(|j| x.dim.pow(j as u32)).collect();
    let (mut m, mut delta) = (Components::new(), Components::new());
    for t in 0..=top {
        for a in 0..=t {
            let b = t - a;
            let id = LinMap::identity(dims[t]);
            let (mt, dt) = match flavor {
                Flavor::Tensor => (id, shuffle_antisymmetrizer(x, a, b)?),
                Flavor::Cotensor => (inverse_shuffle_antisymmetrizer(x, a, b)?, id),
            };
            m.insert((a, b), mt);
            delta.insert((a, b), dt);
        }
    }
    Ok(GradedBialgebra {
        dims,
        m,
        delta,
        eta: LinMap::identity(1),
        eps: LinMap::identity(1),
        antipode: Some(tensor_antipode(x, top)?),
        braid: tensor_braidings(x, top)?,
    })
}

/// `T(X)`: concatenation product, `Δ_{(n,m)} = A_{(n,m)}`,
/// `S_j = ±σ_j⁰`. Fails with `AxiomFailure` if the axioms do not hold.
pub fn tensor_hopf(x: &BraidedObject, max_degree: usize) -> Result<GradedBialgebra> {
    let t = build(x, max_degree, Flavor::Tensor)?;
    check_graded_bialgebra(&t)?.into_result(Error::AxiomFailure)?;
    Ok(t)
}

/// The cotensor Hopf algebra: `m_{(n,m)} = A^{(n,m)}`, deconcatenation coproduct.
pub fn cotensor_hopf(x: &BraidedObject, max_degree: usize) -> Result<GradedBialgebra> {
    let c = build(x, max_degree, Flavor::Cotensor)?;
    check_graded_bialgebra(&c)?.into_result(Error::AxiomFailure)?;
    Ok(c)
}

/// `T^∧(X) = coim(Â)` with the structure induced from `T(X)`.
#[derive(Clone, Debug)]
pub struct ExteriorHopf {
    pub algebra: GradedBialgebra,
    /// `rank A_j`
    pub dims: Vec<usize>,
    /// `Â_j = A_j`
    pub hat_a: Vec<LinMap>,
    /// Coimage projections `X^{⊗j} -> T^∧_j`.
    pub proj: Vec<LinMap>,
    /// Sections with `proj ∘ sect = id`.
    pub sect: Vec<LinMap>,
    pub tensor: GradedBialgebra,
    pub cotensor: GradedBialgebra,
}

/// Verifies that `Â: T(X) -> T°(X)` is a graded bialgebra morphism, takes
/// degreewise coimages, checks that every structure map of `T(X)` descends,
/// and returns the quotient Hopf algebra.
pub fn exterior_hopf(x: &BraidedObject, max_degree: usize) -> Result<ExteriorHopf> {
    let tensor = build(x, max_degree, Flavor::Tensor)?;
    let cotensor = build(x, max_degree, Flavor::Cotensor)?;
    let hat_a = (0..=max_degree).map(|j| antisymmetrizer(x, j)).collect::<Result<Vec<_>>>()?;
    check_graded_morphism(&hat_a, &tensor, &cotensor)?.into_result(Error::NotBialgebraMorphism)?;

    let mut proj = Vec::new();
    let mut sect = Vec::new();
    let mut kernels = Vec::new();
    for a in &hat_a {
        let f = factorize(a);
        let s = solve(&f.coim_proj, &LinMap::identity(f.rank))?
            .expect("coimage projection is surjective")
            .particular;
        proj.push(f.coim_proj);
        sect.push(s);
        kernels.push(f.kernel_basis);
    }
    let dims: Vec<usize> = proj.iter().map(|p| p.cod()).collect();

    let mut r = Report::new("exterior Hopf algebra");
    let zero = |m: &LinMap| LinMap::zero(m.cod(), m.dom());
    let (mut m, mut delta, mut braid) = (Components::new(), Components::new(), Components::new());
    let t_id = |k: usize| LinMap::identity(tensor.dim(k));
    for t in 0..=max_degree {
        for a in 0..=t {
            let b = t - a;
            let pm = proj[t].compose(tensor.mul(a, b));
            let left = pm.compose(&kernels[a].kron(&t_id(b)));
            let right = pm.compose(&t_id(a).kron(&kernels[b]));
            r.eq_maps(format!("product descends ({a},{b}) left"), &left, &zero(&left));
            r.eq_maps(format!("product descends ({a},{b}) right"), &right, &zero(&right));
            let pd = proj[a].kron(&proj[b]).compose(tensor.comul(a, b));
            let dk = pd.compose(&kernels[t]);
            r.eq_maps(format!("coproduct descends ({a},{b})"), &dk, &zero(&dk));
            let pb = proj[b].kron(&proj[a]).compose(tensor.braiding(a, b));
            let bl = pb.compose(&kernels[a].kron(&t_id(b)));
            let br = pb.compose(&t_id(a).kron(&kernels[b]));
            r.eq_maps(format!("braiding descends ({a},{b}) left"), &bl, &zero(&bl));
            r.eq_maps(format!("braiding descends ({a},{b}) right"), &br, &zero(&br));
            let ss = sect[a].kron(&sect[b]);
            m.insert((a, b), pm.compose(&ss));
            delta.insert((a, b), pd.compose(&sect[t]));
            braid.insert((a, b), pb.compose(&ss));
        }
    }
    let s_t = tensor.antipode.as_ref().expect("tensor algebra carries its antipode");
    let mut antipode = Vec::new();
    for j in 0..=max_degree {
        let sk = LinMap::chain(&[&proj[j], &s_t[j], &kernels[j]]);
        r.eq_maps(format!("antipode descends ({j})"), &sk, &zero(&sk));
        antipode.push(LinMap::chain(&[&proj[j], &s_t[j], &sect[j]]));
    }
    r.into_result(Error::NotBialgebraMorphism)?;
    let algebra = GradedBialgebra {
        dims: dims.clone(),
        m,
        delta,
        eta: proj[0].compose(&tensor.eta),
        eps: tensor.eps.compose(&sect[0]),
        antipode: Some(antipode),
        braid,
    };
    check_graded_bialgebra(&algebra)?.into_result(Error::AxiomFailure)?;
    Ok(ExteriorHopf { algebra, dims, hat_a, proj, sect, tensor, cotensor })
}
