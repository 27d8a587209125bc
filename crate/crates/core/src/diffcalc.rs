//! First-order bicovariant differential calculi and their exterior
//! extension: the graded Hopf algebra `X^∧ = H ⋉ T^∧(inv X)` with its unique
//! differential, and the universal property of `X^∧`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactla::{inverse, kernel, rank, solve_left, solve_operator, vectorize, LinMap, SplitPair};
use crate::gradedcalc::{check_graded_bialgebra, check_graded_morphism, exterior_hopf, sign, BraidedObject, ExteriorHopf, GradedBialgebra};
use crate::hopf::{expect_shape, FiniteHopfAlgebra};
use crate::hopfbimod::{check_hopf_bimodule, invariants, smash_inclusion, HopfBimodule};
use crate::report::Report;
use crate::yd::{braiding_unchecked, check_yd_morphism, tensor_unchecked, YDModule};

/// `d: H -> X` into a Hopf bimodule.
#[derive(Clone, Debug)]
pub struct FirstOrderCalculus {
    pub h: FiniteHopfAlgebra,
    pub x: HopfBimodule,
    pub d: LinMap,
}

/// `X = ker(m: H ⊗ H -> H)` with `d(a) = 1 ⊗ a - a ⊗ 1`.
///
/// `H ⊗ H` carries `h·(a ⊗ b) = ha ⊗ b`, `(a ⊗ b)·h = a ⊗ bh` and the
/// diagonal coactions `a₁b₁ ⊗ a₂ ⊗ b₂`, `a₁ ⊗ b₁ ⊗ a₂b₂`; the basis of `X`
/// is the kernel basis of `m`.
pub fn universal_first_order(h: &FiniteHopfAlgebra) -> Result<FirstOrderCalculus> {
    let n = h.dim();
    let id = h.id();
    let k = kernel(h.m());
    let dim = k.dom();
    let left = solve_left(&k, &LinMap::identity(dim))?.expect("kernel basis is injective").particular;
    let mix = LinMap::kron_all(&[&id, &LinMap::flip(n, n), &id]).compose(&h.delta().kron(h.delta()));
    let mul = LinMap::chain(&[&left, &h.m().kron(&id), &id.kron(&k)]);
    let mur = LinMap::chain(&[&left, &id.kron(h.m()), &k.kron(&id)]);
    let nul = LinMap::chain(&[&id.kron(&left), &LinMap::kron_all(&[h.m(), &id, &id]), &mix, &k]);
    let nur = LinMap::chain(&[&left.kron(&id), &LinMap::kron_all(&[&id, &id, h.m()]), &mix, &k]);
    let x = HopfBimodule { dim, mul, mur, nul, nur };
    let d = left.compose(&(h.eta().kron(&id) - id.kron(h.eta())));
    let c = FirstOrderCalculus { h: h.clone(), x, d };
    check_first_order(&c)?.into_result(Error::AxiomFailure)?;
    Ok(c)
}

/// Hopf-bimodule axioms of `x`, the Leibniz rule, left and right
/// covariance, and `im(μ_l ∘ (id ⊗ d)) = X`.
pub fn check_first_order(c: &FirstOrderCalculus) -> Result<Report> {
    let (h, x, d) = (&c.h, &c.x, &c.d);
    if d.cod() != x.dim || d.dom() != h.dim() {
        return Err(Error::ShapeMismatch(format!(
            "differential is {}x{}, expected {}x{}",
            d.cod(),
            d.dom(),
            x.dim,
            h.dim()
        )));
    }
    let mut r = Report::new("first-order calculus");
    r.merge("bimodule: ", check_hopf_bimodule(h, x)?);
    let id = h.id();
    let leibniz = x.mul.compose(&id.kron(d)) + x.mur.compose(&d.kron(&id));
    r.eq_maps("Leibniz", &d.compose(h.m()), &leibniz);
    r.eq_maps("left covariance", &x.nul.compose(d), &id.kron(d).compose(h.delta()));
    r.eq_maps("right covariance", &x.nur.compose(d), &d.kron(&id).compose(h.delta()));
    let rk = rank(&x.mul.compose(&id.kron(d)));
    r.flag("surjectivity", rk == x.dim, (rk != x.dim).then(|| format!("image has dimension {rk} of {}", x.dim)));
    Ok(r)
}

/// `X^∧` with `X^∧_n = H ⊗ T^∧_n(Y)` for the crossed module `Y = inv(X)`.
#[derive(Clone, Debug)]
pub struct ExteriorCalculus {
    pub h: FiniteHopfAlgebra,
    pub max_degree: usize,
    /// `inv(X)` and the splitting of `Π` fixing its basis.
    pub invariants: YDModule,
    pub splitting: SplitPair,
    pub exterior: ExteriorHopf,
    /// Crossed-module structure of `Y^{⊗n}`.
    pub tensor_powers: Vec<YDModule>,
    /// Crossed-module structure of `T^∧_n`.
    pub forms: Vec<YDModule>,
    /// `H ⋉ T^∧_n` as Hopf bimodules.
    pub layers: Vec<HopfBimodule>,
    pub algebra: GradedBialgebra,
    /// `d_j: X^∧_j -> X^∧_{j+1}` for `j < max_degree`.
    pub diffs: Vec<LinMap>,
    /// `H ⊗ T^∧_1 -> X`, `h ⊗ y ↦ h·y`.
    pub identification: LinMap,
}

impl ExteriorCalculus {
    pub fn dims(&self) -> &[usize] {
        &self.algebra.dims
    }

    /// `H ⋉ T(Y)`, the bosonized tensor Hopf algebra before the quotient.
    pub fn tensor_transfer(&self) -> GradedBialgebra {
        bosonize_graded(&self.h, &self.tensor_powers, &self.exterior.tensor)
    }
}

/// `H ⋉ B` degreewise for a graded bialgebra `B` whose components carry the
/// given crossed-module structures: `(h ⊗ u)(k ⊗ v) = hk₁ ⊗ (u·k₂)v` and
/// `Δ(h ⊗ w) = h₁ ⊗ w⁽¹⁾₀ ⊗ h₂w⁽¹⁾₁ ⊗ w⁽²⁾`. The braidings are the flips.
pub fn bosonize_graded(h: &FiniteHopfAlgebra, layers: &[YDModule], b: &GradedBialgebra) -> GradedBialgebra {
    let n = h.dim();
    let hid = h.id();
    let top = b.max_degree();
    let dims: Vec<usize> = (0..=top).map(|j| n * b.dim(j)).collect();
    let (mut m, mut delta) = (BTreeMap::new(), BTreeMap::new());
    for t in 0..=top {
        for a in 0..=t {
            let c = t - a;
            let (u, v) = (&layers[a], &layers[c]);
            let (uid, vid) = (LinMap::identity(u.dim), LinMap::identity(v.dim));
            let prod = LinMap::chain(&[
                &hid.kron(b.mul(a, c)),
                &LinMap::kron_all(&[h.m(), &u.mur, &vid]),
                &LinMap::kron_all(&[&hid, &LinMap::flip(u.dim, n), &hid, &vid]),
                &LinMap::kron_all(&[&hid, &uid, h.delta(), &vid]),
            ]);
            let coprod = LinMap::chain(&[
                &LinMap::kron_all(&[&hid, &uid, &h.m().compose(&LinMap::flip(n, n)), &vid]),
                &LinMap::kron_all(&[&hid, &u.nur, &hid, &vid]),
                &LinMap::kron_all(&[&hid, &LinMap::flip(n, u.dim), &vid]),
                &h.delta().kron(b.comul(a, c)),
            ]);
            m.insert((a, c), prod);
            delta.insert((a, c), coprod);
        }
    }
    GradedBialgebra {
        braid: GradedBialgebra::flip_braidings(&dims),
        dims,
        m,
        delta,
        eta: h.eta().kron(&b.eta),
        eps: h.eps().kron(&b.eps),
        antipode: None,
    }
}

fn zero_like(m: &LinMap) -> LinMap {
    LinMap::zero(m.cod(), m.dom())
}

/// Builds `X^∧` and solves for its differential degree by degree.
///
/// Given `d_0 … d_{j-1}`, the unknown `d_j` enters the graded Leibniz rule for
/// every `(k, l)` with `k + l = j`, the relation `d_j d_{j-1} = 0`, and both
/// covariance conditions, all linearly; the system must have exactly one
/// solution.
pub fn build_exterior_calculus(c: &FirstOrderCalculus, max_degree: usize) -> Result<ExteriorCalculus> {
    if max_degree < 2 {
        return Err(Error::BadParams(format!("maximal degree {max_degree} is below 2")));
    }
    check_first_order(c)?.into_result(Error::AxiomFailure)?;
    let h = &c.h;
    let hid = h.id();
    let (y, splitting) = invariants(h, &c.x)?;
    let braided = BraidedObject { dim: y.dim, psi: braiding_unchecked(h, &y, &y) };
    let exterior = exterior_hopf(&braided, max_degree)?;

    let mut tensor_powers = vec![YDModule::unit(h)];
    for j in 1..=max_degree {
        let next = tensor_unchecked(h, &tensor_powers[j - 1], &y);
        tensor_powers.push(next);
    }
    let mut yd_report = Report::new("exterior forms");
    let forms: Vec<YDModule> = (0..=max_degree)
        .map(|j| {
            let (p, s, t) = (&exterior.proj[j], &exterior.sect[j], &tensor_powers[j]);
            let f = YDModule {
                dim: p.cod(),
                mur: LinMap::chain(&[p, &t.mur, &s.kron(&hid)]),
                nur: LinMap::chain(&[&p.kron(&hid), &t.nur, s]),
            };
            yd_report.merge(&format!("projection {j}: "), check_yd_morphism(h, p, t, &f));
            f
        })
        .collect();
    yd_report.into_result(Error::AxiomFailure)?;
    let layers = forms.iter().map(|f| smash_inclusion(h, f)).collect::<Result<Vec<_>>>()?;
    let algebra = bosonize_graded(h, &forms, &exterior.algebra);
    check_graded_bialgebra(&algebra)?.into_result(Error::AxiomFailure)?;

    let identification = c.x.mul.compose(&hid.kron(&splitting.section.compose(&exterior.sect[1])));
    let d0 = inverse(&identification)?.compose(&c.d);
    let mut diffs = vec![d0];
    for j in 1..max_degree {
        let (cod, dom) = (algebra.dim(j + 1), algebra.dim(j));
        let prev = diffs[j - 1].clone();
        let known = &diffs;
        let id_of = |k: usize| LinMap::identity(algebra.dim(k));
        let op = |dj: &LinMap| {
            let mut eqs = Vec::new();
            for k in 0..=j {
                let l = j - k;
                let mut lhs = dj.compose(algebra.mul(k, l));
                if k == j {
                    lhs = lhs - algebra.mul(j + 1, 0).compose(&dj.kron(&id_of(0)));
                }
                if l == j {
                    lhs = lhs - algebra.mul(0, j + 1).compose(&id_of(0).kron(dj));
                }
                eqs.push(vectorize(&lhs));
            }
            eqs.push(vectorize(&dj.compose(&prev)));
            eqs.push(vectorize(&(layers[j + 1].nul.compose(dj) - hid.kron(dj).compose(&layers[j].nul))));
            eqs.push(vectorize(&(layers[j + 1].nur.compose(dj) - dj.kron(&hid).compose(&layers[j].nur))));
            LinMap::vstack(&eqs.iter().collect::<Vec<_>>())
        };
        let mut rhs = Vec::new();
        for k in 0..=j {
            let l = j - k;
            let mut acc = LinMap::zero(cod, algebra.dim(k) * algebra.dim(l));
            if k < j {
                acc = acc + algebra.mul(k + 1, l).compose(&known[k].kron(&id_of(l)));
            }
            if l < j {
                acc = acc + algebra.mul(k, l + 1).compose(&id_of(k).kron(&known[l])).scale(&sign(k));
            }
            rhs.push(vectorize(&acc));
        }
        rhs.push(LinMap::zero(cod * prev.dom(), 1));
        rhs.push(LinMap::zero(h.dim() * cod * dom, 1));
        rhs.push(LinMap::zero(cod * h.dim() * dom, 1));
        let rhs = LinMap::vstack(&rhs.iter().collect::<Vec<_>>());
        match solve_operator(cod, dom, op, &rhs)? {
            None => return Err(Error::NoSolution),
            Some((_, nullity)) if nullity > 0 => return Err(Error::NonUniqueSolution(nullity)),
            Some((dj, _)) => diffs.push(dj),
        }
    }
    Ok(ExteriorCalculus {
        h: h.clone(),
        max_degree,
        invariants: y,
        splitting,
        exterior,
        tensor_powers,
        forms,
        layers,
        algebra,
        diffs,
        identification,
    })
}

/// `d² = 0`, graded Leibniz, bicovariance in every degree, and agreement of
/// `d_0` with the first-order differential through the identification.
pub fn check_exterior_calculus(e: &ExteriorCalculus, c: &FirstOrderCalculus) -> Report {
    let mut r = Report::new("exterior calculus");
    let b = &e.algebra;
    let d = &e.diffs;
    let hid = e.h.id();
    let top = e.max_degree;
    for j in 0..top.saturating_sub(1) {
        let dd = d[j + 1].compose(&d[j]);
        r.eq_maps(format!("d squares to zero ({j})"), &dd, &zero_like(&dd));
    }
    for t in 0..top {
        for k in 0..=t {
            let l = t - k;
            let id = |n: usize| LinMap::identity(b.dim(n));
            let rhs = b.mul(k + 1, l).compose(&d[k].kron(&id(l)))
                + b.mul(k, l + 1).compose(&id(k).kron(&d[l])).scale(&sign(k));
            r.eq_maps(format!("Leibniz ({k},{l})"), &d[t].compose(b.mul(k, l)), &rhs);
        }
    }
    for (j, dj) in d.iter().enumerate() {
        let (src, dst) = (&e.layers[j], &e.layers[j + 1]);
        r.eq_maps(format!("left covariance ({j})"), &dst.nul.compose(dj), &hid.kron(dj).compose(&src.nul));
        r.eq_maps(format!("right covariance ({j})"), &dst.nur.compose(dj), &dj.kron(&hid).compose(&src.nur));
    }
    r.eq_maps("degree-0 differential", &e.identification.compose(&d[0]), &c.d);
    r
}

/// The unique graded bialgebra morphism `Ŷ -> X^∧` extending `(f0, f1)`,
/// built by factoring `m^{X^∧}_{(1,n)} ∘ (f_1 ⊗ f_n)` through `m^Ŷ_{(1,n)}`.
pub fn universal_map(yhat: &GradedBialgebra, f0: &LinMap, f1: &LinMap, target: &ExteriorCalculus) -> Result<Vec<LinMap>> {
    yhat.validate()?;
    let x = &target.algebra;
    let top = yhat.max_degree().min(x.max_degree());
    expect_shape("f0", f0, x.dim(0), yhat.dim(0))?;
    expect_shape("f1", f1, x.dim(1), yhat.dim(1))?;

    let mut t = Report::new("degree-(0,1) truncation");
    let f = [f0, f1];
    for (a, b) in [(0, 0), (0, 1), (1, 0)] {
        if a + b > top {
            continue;
        }
        t.eq_maps(
            format!("preserves products ({a},{b})"),
            &f[a + b].compose(yhat.mul(a, b)),
            &x.mul(a, b).compose(&f[a].kron(f[b])),
        );
        t.eq_maps(
            format!("preserves coproducts ({a},{b})"),
            &f[a].kron(f[b]).compose(yhat.comul(a, b)),
            &x.comul(a, b).compose(f[a + b]),
        );
    }
    t.eq_maps("preserves unit", &f0.compose(&yhat.eta), &x.eta);
    t.eq_maps("preserves counit", &x.eps.compose(f0), &yhat.eps);
    t.into_result(Error::NotTruncatedMorphism)?;

    let mut out = vec![f0.clone(), f1.clone()];
    for n in 1..top {
        let m = yhat.mul(1, n);
        if rank(m) < yhat.dim(n + 1) {
            return Err(Error::NotGenerated(n + 1));
        }
        let rhs = x.mul(1, n).compose(&out[1].kron(&out[n]));
        let ker = kernel(m);
        if !rhs.compose(&ker).is_zero() {
            return Err(Error::FactorizationObstruction(n + 1));
        }
        let sol = solve_left(m, &rhs)?.ok_or(Error::FactorizationObstruction(n + 1))?;
        debug_assert_eq!(sol.nullity, 0);
        out.push(sol.particular);
    }
    out.truncate(top + 1);
    check_graded_morphism(&out, yhat, x)?.into_result(Error::NotBialgebraMorphism)?;
    Ok(out)
}
