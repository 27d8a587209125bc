use braidcalc::crossprod::*;
use braidcalc::exactla::{inverse, LinMap, Scalar};
use braidcalc::hopf::{builtin, convolution, sweedler, Algebra, Coalgebra, FiniteHopfAlgebra};
use braidcalc::yd::{yd_braiding, YDModule};
use proptest::prelude::*;

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn col(dim: usize, entries: &[(usize, i64)]) -> LinMap {
    LinMap::from_triples(dim, 1, entries.iter().map(|&(i, c)| (i, 0, s(c)))).unwrap()
}

/// Sweedler's `R_α` in the builtin basis `1, g, x, gx`.
fn sweedler_r(alpha: i64) -> LinMap {
    let e = |i: usize, j: usize, c: i64| (i * 4 + j, c);
    let r0 = col(16, &[e(0, 0, 1), e(0, 1, 1), e(1, 0, 1), e(1, 1, -1)]);
    let r1 = col(16, &[e(2, 2, 1), e(2, 3, -1), e(3, 2, 1), e(3, 3, 1)]);
    (&r0 + &r1.scale(&s(alpha))).scale(&Scalar::from_frac(1, 2))
}

/// `kZ/2 -> Sweedler`, `g ↦ g`, and back, killing `x` and `gx`.
fn sweedler_projection() -> BialgebraProjection {
    let h = builtin("cyclic:2").unwrap();
    let sw = sweedler();
    let eta_bar = LinMap::from_int_rows(&[[1, 0], [0, 1], [0, 0], [0, 0]]);
    let eps_bar = LinMap::from_int_rows(&[[1, 0, 0, 0], [0, 1, 0, 0]]);
    BialgebraProjection::new(h, sw, eta_bar, eps_bar).unwrap()
}

fn line_projection() -> (FiniteHopfAlgebra, AdmissibleObject, BialgebraProjection) {
    let (h, x) = braided_line();
    let b = smash_bialgebra(&h, &x).unwrap();
    let p = BialgebraProjection::new(h.clone(), b, h.id().kron(&x.eta), h.id().kron(&x.eps)).unwrap();
    (h, x, p)
}

/// Product of `g^a x^b` and `g^c x^d` in `kZ/2 ⋉ k[x]/(x²)` at index `2a + b`:
/// `(-1)^{bc} g^{a+c} x^{b+d}`.
fn smash_line_oracle() -> LinMap {
    let mut t = Vec::new();
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    if b + d < 2 {
                        let sign = if b * c == 1 { -1 } else { 1 };
                        t.push((((a + c) % 2) * 2 + b + d, (a * 2 + b) * 4 + c * 2 + d, s(sign)));
                    }
                }
            }
        }
    }
    LinMap::from_triples(4, 16, t).unwrap()
}

#[test]
fn smash_product_examples() {
    let h = sweedler();
    let two = Algebra { dim: 2, m: LinMap::from_int_rows(&[[1, 0, 0, 0], [0, 1, 1, 0]]), eta: col(2, &[(0, 1)]) };
    let trivial = ModuleAlgebra { dim: 2, m: two.m.clone(), eta: two.eta.clone(), mur: LinMap::identity(2).kron(h.eps()) };
    let sp = smash_product(&h, &trivial).unwrap();
    assert_eq!(sp.algebra, h.algebra().tensor(&two));

    let unit = AdmissibleObject::unit(&h).module_algebra();
    let sp = smash_product(&h, &unit).unwrap();
    assert_eq!(sp.algebra.m, *h.m());
    assert!(sp.j.is_identity());

    let (k2, line) = braided_line();
    let sp = smash_product(&k2, &line.module_algebra()).unwrap();
    assert_eq!(sp.algebra.m, smash_line_oracle());
    assert!(sp.algebra.check().passed());
    // j(g) i(x) = -i(x) j(g)
    let g = sp.j.compose(&col(2, &[(1, 1)]));
    let x = sp.i.compose(&col(2, &[(1, 1)]));
    let gx = sp.algebra.m.compose(&g.kron(&x));
    let xg = sp.algebra.m.compose(&x.kron(&g));
    assert_eq!(gx, -xg);

    // 1·g = -1 is not unital-linear
    let bad = ModuleAlgebra { mur: LinMap::from_int_rows(&[[1, -1, 0, 0], [0, 0, 1, 1]]), ..line.module_algebra() };
    assert_eq!(smash_product(&k2, &bad).unwrap_err().name(), "NotModuleAlgebra");
}

#[test]
fn universal_property() {
    let (k2, line) = braided_line();
    let a = line.module_algebra();
    let sw = sweedler();
    let g = LinMap::from_int_rows(&[[1, 0], [0, 1], [0, 0], [0, 0]]);
    let f = LinMap::from_int_rows(&[[1, 0], [0, 0], [0, 1], [0, 0]]);
    let r = check_universal_map(&k2, &a, &sw.algebra(), &g, &f).unwrap();
    assert!(r.passed(), "{r}");
    // the induced map sends g^a x^b to g^a x^b
    let phi = universal_map(&sw.algebra(), &g, &f).unwrap();
    assert_eq!(phi, LinMap::permutation(&[0, 2, 1, 3]));

    // the smash product with its own injections induces the identity
    let sp = smash_product(&k2, &a).unwrap();
    assert!(universal_map(&sp.algebra, &sp.j, &sp.i).unwrap().is_identity());

    // g trivial is incompatible with x·g = -x
    let triv = LinMap::from_int_rows(&[[1, 1], [0, 0], [0, 0], [0, 0]]);
    let r = check_universal_map(&k2, &a, &sw.algebra(), &triv, &f).unwrap();
    assert!(!r.check("f is linear into the adjoint module").unwrap().passed);
}

proptest! {
    #[test]
    fn universal_map_scaled_targets(c in -5i64..=5) {
        let (k2, line) = braided_line();
        let sw = sweedler();
        let g = LinMap::from_int_rows(&[[1, 0], [0, 1], [0, 0], [0, 0]]);
        let f = LinMap::from_int_rows(&[[1, 0], [0, 0], [0, c], [0, 0]]);
        let r = check_universal_map(&k2, &line.module_algebra(), &sw.algebra(), &g, &f).unwrap();
        prop_assert!(r.passed());
    }
}

#[test]
fn smash_coproduct_examples() {
    let h = sweedler();
    let two = Coalgebra { dim: 2, delta: LinMap::from_int_rows(&[[1, 0], [0, 0], [0, 0], [0, 1]]), eps: LinMap::from_int_rows(&[[1, 1]]) };
    let trivial = ComoduleCoalgebra { dim: 2, delta: two.delta.clone(), eps: two.eps.clone(), nur: LinMap::identity(2).kron(h.eta()) };
    assert_eq!(smash_coproduct(&h, &trivial).unwrap(), h.coalgebra().tensor(&two));
    let unit = AdmissibleObject::unit(&h).comodule_coalgebra();
    assert_eq!(smash_coproduct(&h, &unit).unwrap().delta, *h.delta());

    // Δ(g^a) = g^a ⊗ g^a and Δ(g^a x) = g^a x ⊗ g^{a+1} + g^a ⊗ g^a x
    let (k2, line) = braided_line();
    let co = smash_coproduct(&k2, &line.comodule_coalgebra()).unwrap();
    let idx = |a: usize, b: usize| a * 2 + b;
    let pair = |i: usize, j: usize| i * 4 + j;
    let mut t = Vec::new();
    for a in 0..2 {
        t.push((pair(idx(a, 0), idx(a, 0)), idx(a, 0), s(1)));
        t.push((pair(idx(a, 1), idx((a + 1) % 2, 0)), idx(a, 1), s(1)));
        t.push((pair(idx(a, 0), idx(a, 1)), idx(a, 1), s(1)));
    }
    assert_eq!(co.delta, LinMap::from_triples(16, 4, t).unwrap());
    assert!(co.check().passed());

    let bad = ComoduleCoalgebra { nur: LinMap::identity(2).kron(&col(2, &[(1, 1)])), ..line.comodule_coalgebra() };
    assert_eq!(smash_coproduct(&k2, &bad).unwrap_err().name(), "NotComoduleCoalgebra");
}

#[test]
fn admissible_objects() {
    for h in [builtin("cyclic:3").unwrap(), sweedler()] {
        let u = AdmissibleObject::unit(&h);
        assert!(check_admissible(&h, &u).unwrap().passed());
        assert_eq!(smash_bialgebra(&h, &u).unwrap(), h);
    }

    let (k2, line) = braided_line();
    let r = check_admissible(&k2, &line).unwrap();
    assert!(r.passed(), "{r}");
    let b = smash_bialgebra(&k2, &line).unwrap();
    assert!(b.report().passed());
    // antipode by hand at index 2a + b: S(g) = g, S(x) = -xg = gx, S(gx) = -x
    let s_hand = LinMap::from_int_rows(&[[1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0]]);
    assert_eq!(b.s().unwrap(), &s_hand);
    let ee = b.unit_counit();
    assert_eq!(convolution(&b.id(), &s_hand, &b, &b).unwrap(), ee);

    let broken = AdmissibleObject { eps: LinMap::zero(1, 2), ..line.clone() };
    let r = check_admissible(&k2, &broken).unwrap();
    let c = r.check("counit after unit").unwrap();
    assert!(!c.passed);
    let w = c.witness.as_ref().unwrap();
    assert_eq!((w.row, w.col, w.lhs.as_str(), w.rhs.as_str()), (0, 0, "0", "1"));
    assert_eq!(smash_bialgebra(&k2, &broken).unwrap_err().name(), "AxiomFailure");
}

#[test]
fn projections_and_bimodule_bialgebras() {
    for h in [builtin("cyclic:2").unwrap(), sweedler()] {
        let p = BialgebraProjection::identity(&h);
        let ub = projection_to_bimodule_bialgebra(&p).unwrap();
        // inv(H) = k, so m(id ⊗ η) and (id ⊗ ε)Δ are both the identity
        assert_eq!(ub.splitting.rank, 1);
        assert!(ub.m.is_identity());
        assert!(ub.delta.is_identity());
        let back = bimodule_bialgebra_to_projection(&ub).unwrap();
        assert_eq!(back.b2, h);
    }

    let (_, _, p) = line_projection();
    let ub = projection_to_bimodule_bialgebra(&p).unwrap();
    let back = bimodule_bialgebra_to_projection(&ub).unwrap();
    assert_eq!(back.b2, p.b2);
    assert_eq!(back.eta_bar, p.eta_bar);
    assert_eq!(back.eps_bar, p.eps_bar);
    // and the other way round
    let again = projection_to_bimodule_bialgebra(&back).unwrap();
    assert_eq!((again.m, again.delta, again.s), (ub.m.clone(), ub.delta.clone(), ub.s.clone()));

    let p = sweedler_projection();
    let ub = projection_to_bimodule_bialgebra(&p).unwrap();
    assert_eq!(ub.splitting.rank, 2);
    assert_eq!(bimodule_bialgebra_to_projection(&ub).unwrap().b2, p.b2);

    let mut bad = p.clone();
    bad.eps_bar = LinMap::from_int_rows(&[[1, 0, 1, 0], [0, 1, 0, 0]]);
    assert_eq!(projection_to_bimodule_bialgebra(&bad).unwrap_err().name(), "NotProjection");
    let mut bad = ub.clone();
    bad.m = bad.m.scale(&s(2));
    assert_eq!(bimodule_bialgebra_to_projection(&bad).unwrap_err().name(), "NotBialgebraInCategory");
}

#[test]
fn antipode_transfer() {
    for h in [builtin("symmetric:3").unwrap(), sweedler()] {
        let p = BialgebraProjection::identity(&h);
        let under = antipode_to_bimodule(&p).unwrap();
        // h₁ S(h₂) h₃ = h
        assert!(under.is_identity());
        let ub = projection_to_bimodule_bialgebra(&p).unwrap();
        assert_eq!(&antipode_from_bimodule(&ub).unwrap(), h.s().unwrap());
    }
    for p in [line_projection().2, sweedler_projection()] {
        let ub = projection_to_bimodule_bialgebra(&p).unwrap();
        let s_b = antipode_from_bimodule(&ub).unwrap();
        assert_eq!(&s_b, p.b2.s().unwrap());
        assert_eq!(convolution(&p.b2.id(), &s_b, &p.b2, &p.b2).unwrap(), p.b2.unit_counit());
        assert_eq!(convolution(&s_b, &p.b2.id(), &p.b2, &p.b2).unwrap(), p.b2.unit_counit());
    }
    let mut ub = projection_to_bimodule_bialgebra(&sweedler_projection()).unwrap();
    ub.s = None;
    assert_eq!(antipode_from_bimodule(&ub).unwrap_err().name(), "NoAntipode");
}

#[test]
fn radford_majid() {
    let (k2, line, p) = line_projection();
    let dec = radford_majid_decompose(&p).unwrap();
    assert_eq!(dec.x, line);
    assert!(dec.iso.is_identity());

    let dec = radford_majid_decompose(&BialgebraProjection::identity(&k2)).unwrap();
    assert_eq!(dec.x, AdmissibleObject::unit(&k2));

    // Sweedler over kZ/2: the invariants are a braided line, x ⊗ x ↦ -x ⊗ x
    let p = sweedler_projection();
    let dec = radford_majid_decompose(&p).unwrap();
    let x = &dec.x;
    assert_eq!(x.dim, 2);
    let y = x.yd();
    let psi = yd_braiding(&k2, &y, &y).unwrap();
    // the unit of X spans the degree-0 part; its complement is primitive
    let one = &x.eta;
    let prim: Vec<usize> = (0..2).filter(|&i| x.eps.get(0, i).is_zero()).collect();
    assert_eq!(prim.len(), 1);
    let v = col(2, &[(prim[0], 1)]);
    assert_eq!(x.delta.compose(&v), &v.kron(one) + &one.kron(&v));
    assert_eq!(psi.compose(&v.kron(&v)), -v.kron(&v));
    assert_eq!(x.m.compose(&v.kron(&v)), LinMap::zero(2, 1));
    assert!(inverse(&dec.iso).is_ok());
}

#[test]
fn quasitriangular_kz2() {
    let q = z2_triangular();
    let r = check_quasitriangular(&q).unwrap();
    assert!(r.passed(), "{r}");
    // oracle: R² = 1 in k[Z/2 × Z/2]; expand ½(e₀₀ + e₀₁ + e₁₀ - e₁₁) squared by hand
    let coeffs = [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, -1)];
    let mut sq = [0i64; 4];
    for &(a, b, c) in &coeffs {
        for &(d, e, f) in &coeffs {
            sq[((a + d) % 2) * 2 + (b + e) % 2] += c * f;
        }
    }
    assert_eq!(sq, [4, 0, 0, 0]);
    assert_eq!(q.r_inv.as_ref().unwrap(), &q.r);
    // u = ½(1 + g + g - 1) = g
    assert_eq!(q.u().unwrap(), col(2, &[(1, 1)]));

    // trivial R on a cocommutative algebra
    let h = builtin("symmetric:3").unwrap();
    let q = QTBialgebra::new(h.clone(), h.delta().clone(), h.eta().kron(h.eta())).unwrap();
    assert!(check_quasitriangular(&q).unwrap().passed());
    assert_eq!(&q.u().unwrap(), h.eta());

    // perturbing R breaks the pairing axioms on kZ/2
    let k2 = builtin("cyclic:2").unwrap();
    let bumped = &z2_r_matrix() + &col(4, &[(3, 1)]);
    let q = QTBialgebra::new(k2.clone(), k2.delta().clone(), bumped).unwrap();
    let r = check_quasitriangular(&q).unwrap();
    assert!(!r.check("first leg comultiplicative").unwrap().passed);
}

#[test]
fn quasitriangular_sweedler() {
    let sw = sweedler();
    for alpha in [-3, 0, 1, 2] {
        let q = QTBialgebra::new(sw.clone(), sw.delta().clone(), sweedler_r(alpha)).unwrap();
        let r = check_quasitriangular(&q).unwrap();
        assert!(r.passed(), "α = {alpha}: {r}");
    }
    // the flip of R_1 is a universal R for the opposite coproduct, not this one
    let q = QTBialgebra::new(sw.clone(), sw.delta().clone(), LinMap::flip(4, 4).compose(&sweedler_r(1))).unwrap();
    assert!(!check_quasitriangular(&q).unwrap().passed());

    // R = 1 ⊗ 1 on a non-cocommutative algebra breaks the intertwining identity
    let q = QTBialgebra::new(sw.clone(), sw.delta().clone(), sw.eta().kron(sw.eta())).unwrap();
    let r = check_quasitriangular(&q).unwrap();
    let c = r.check("intertwining").unwrap();
    assert!(!c.passed);
    assert!(c.witness.is_some());
}

#[test]
fn category_o() {
    let q = z2_triangular();
    let (_, line) = braided_line();
    let y = from_qt_module(&q, 2, &line.mur).unwrap();
    // x·R¹ ⊗ R² = ½(x ⊗ 1 + x ⊗ g - x ⊗ 1 + x ⊗ g) = x ⊗ g
    assert_eq!(y.nur, line.nur);

    // with Δ̄ = Δ^op and R = 1 ⊗ 1, category O asks for a₁ ⊗ x·a₂ = a₂ ⊗ x·a₁
    let sw = sweedler();
    let q = QTBialgebra::new(sw.clone(), sw.delta_op(), sw.eta().kron(sw.eta())).unwrap();
    assert!(check_quasitriangular(&q).unwrap().passed());
    assert!(check_category_o(&q, 1, sw.eps()).unwrap().passed());
    assert_eq!(from_qt_module(&q, 4, sw.m()).unwrap_err().name(), "NotInCategoryO");
    let y = from_qt_module(&q, 1, sw.eps()).unwrap();
    assert_eq!(y, YDModule::unit(&sw));
}

fn line_inner(c: i64) -> InnerQT {
    let (_, line) = braided_line();
    let r = col(4, &[(0, 1), (3, c)]);
    InnerQT { delta_bar: line.delta.clone(), obj: line, r }
}

#[test]
fn bosonization() {
    let qa = z2_triangular();
    for c in [0, 1, -2] {
        let inner = line_inner(c);
        let r = check_inner_quasitriangular(&qa, &inner).unwrap();
        assert!(r.passed(), "{r}");
        let q = bosonize_qt(&qa, &inner).unwrap();
        assert_eq!(q.a.dim(), 4);
        assert!(check_quasitriangular(&q).unwrap().passed());
        assert_eq!(q.a, smash_bialgebra(&qa.a, &inner.obj).unwrap());
    }

    // B = k
    let unit = InnerQT { obj: AdmissibleObject::unit(&qa.a), delta_bar: LinMap::identity(1), r: LinMap::identity(1) };
    let q = bosonize_qt(&qa, &unit).unwrap();
    assert_eq!(q.a, qa.a);
    assert_eq!(q.delta_bar, qa.delta_bar);
    assert_eq!(q.r, qa.r);

    // R_A = 1 ⊗ 1 and B = kZ/2 acted on trivially: R is the image of R_B
    let k2 = builtin("cyclic:2").unwrap();
    let qa = QTBialgebra::new(k2.clone(), k2.delta().clone(), k2.eta().kron(k2.eta())).unwrap();
    let obj = AdmissibleObject {
        dim: 2,
        m: k2.m().clone(),
        eta: k2.eta().clone(),
        delta: k2.delta().clone(),
        eps: k2.eps().clone(),
        mur: LinMap::identity(2).kron(k2.eps()),
        nur: LinMap::identity(2).kron(k2.eta()),
    };
    let rb = z2_r_matrix();
    let inner = InnerQT { delta_bar: obj.delta.clone(), obj: obj.clone(), r: rb.clone() };
    let q = bosonize_qt(&qa, &inner).unwrap();
    let iota_b = k2.eta().kron(&LinMap::identity(2));
    assert_eq!(q.r, iota_b.kron(&iota_b).compose(&rb));

    // a module outside category O is rejected
    let sw = sweedler();
    let qop = QTBialgebra::new(sw.clone(), sw.delta_op(), sw.eta().kron(sw.eta())).unwrap();
    let inner = InnerQT {
        obj: AdmissibleObject {
            dim: 4,
            m: sw.m().clone(),
            eta: sw.eta().clone(),
            delta: sw.delta().clone(),
            eps: sw.eps().clone(),
            mur: sw.m().clone(),
            nur: sw.delta().clone(),
        },
        delta_bar: sw.delta().clone(),
        r: sw.eta().kron(sw.eta()),
    };
    assert_eq!(bosonize_qt(&qop, &inner).unwrap_err().name(), "NotInCategoryO");
}

#[test]
fn quantum_group_projections() {
    let sw = sweedler();
    let p = BialgebraProjection::identity(&sw);
    let r = check_qt_projection(&p, &p, &sweedler_r(1), &sweedler_r(1)).unwrap();
    assert!(r.passed(), "{r}");

    // bosonize, then project back onto kZ/2
    let qa = z2_triangular();
    let inner = line_inner(1);
    let q = bosonize_qt(&qa, &inner).unwrap();
    let (k2, line) = braided_line();
    let (i, pr) = (k2.id().kron(&line.eta), k2.id().kron(&line.eps));
    let p = BialgebraProjection::new(k2.clone(), q.a.clone(), i.clone(), pr.clone()).unwrap();
    let bar = q.bar().unwrap();
    let p_bar = BialgebraProjection::new(qa.bar().unwrap(), bar, i, pr).unwrap();
    let r = check_qt_projection(&p, &p_bar, &qa.r, &q.r).unwrap();
    assert!(r.passed(), "{r}");
    let (dec, back) = qt_decompose(&p, &p_bar, &qa.r, &q.r).unwrap();
    assert!(dec.iso.is_identity());
    assert_eq!(back.obj, inner.obj);
    assert_eq!(back.delta_bar, inner.delta_bar);
    assert_eq!(back.r, inner.r);

    // condition 3 fails against the trivial R on kZ/2
    let trivial_r = k2.eta().kron(k2.eta());
    let p_triv = p_bar.clone();
    let r = check_qt_projection(&p, &p_triv, &trivial_r, &q.r).unwrap();
    let c = r.check("R compatible on the right").unwrap();
    assert!(!c.passed);
    assert!(c.witness.is_some());
}

#[test]
fn sweedler_decomposes_and_rebuilds() {
    let p = sweedler_projection();
    let qa = z2_triangular();
    for alpha in [0, 1, 3] {
        let rh = sweedler_r(alpha);
        let (dec, inner) = qt_decompose(&p, &p, &qa.r, &rh).unwrap();
        let q = bosonize_qt(&qa, &inner).unwrap();
        // φ carries the bosonization onto Sweedler, R included
        let phi = &dec.iso;
        assert_eq!(phi.compose(q.a.m()), p.b2.m().compose(&phi.kron(phi)));
        assert_eq!(p.b2.delta().compose(phi), phi.kron(phi).compose(q.a.delta()));
        assert_eq!(phi.kron(phi).compose(&q.r), rh, "α = {alpha}");
    }
}
