use std::collections::BTreeMap;

use braidcalc::exactla::{rank, sum_maps, LinMap, Scalar};
use braidcalc::gradedcalc::{
    antisymmetrizer, antisymmetrizers, braid_rep, braid_word, check_graded_bialgebra, cotensor_hopf, exterior_hopf,
    graded_braiding, inverse_shuffle_antisymmetrizer, length, reduced_word, shuffle_antisymmetrizer, shuffles,
    tensor_complex, tensor_hopf, BraidedObject, ComplexObject, GradedObject,
};
use braidcalc::hopf::{builtin, sweedler};
use braidcalc::yd::example_modules;
use braidcalc::Error;
use proptest::prelude::*;

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Direct permutation matrix: factor `i` of a pure tensor lands in slot `perm[i]`.
fn permute_factors(dim: usize, perm: &[usize]) -> LinMap {
    let j = perm.len();
    let size = dim.pow(j as u32);
    let image: Vec<usize> = (0..size)
        .map(|idx| {
            let mut digits = vec![0; j];
            let mut rest = idx;
            for d in (0..j).rev() {
                digits[d] = rest % dim;
                rest /= dim;
            }
            let mut out = vec![0; j];
            for i in 0..j {
                out[perm[i]] = digits[i];
            }
            out.iter().fold(0, |acc, &d| acc * dim + d)
        })
        .collect();
    LinMap::permutation(&image)
}

/// A second reduced-word algorithm: move the factor bound for slot 0 into
/// place first, then slot 1, and so on.
fn selection_word(perm: &[usize]) -> Vec<usize> {
    let mut arr = perm.to_vec();
    let mut word = Vec::new();
    for target in 0..arr.len() {
        let mut p = arr.iter().position(|&v| v == target).unwrap();
        while p > target {
            arr.swap(p - 1, p);
            word.push(p - 1);
            p -= 1;
        }
    }
    word
}

fn enumerated_antisymmetrizer(x: &BraidedObject, j: usize) -> LinMap {
    let size = x.dim.pow(j as u32);
    let terms = all_perms(j).into_iter().map(|p| {
        let s = if length(&p) % 2 == 0 { Scalar::one() } else { -Scalar::one() };
        braid_rep(x, j, &p).unwrap().scale(&s)
    });
    sum_maps(size, size, terms)
}

fn qplane() -> BraidedObject {
    BraidedObject::quantum_plane(&Scalar::from_int(2)).unwrap()
}

fn yd_examples() -> Vec<(String, BraidedObject)> {
    let mut out = Vec::new();
    for h in [builtin("cyclic:2").unwrap(), builtin("cyclic:3").unwrap(), sweedler()] {
        for (name, y) in example_modules(&h) {
            if y.dim <= 3 {
                out.push((format!("{}/{name}", h.name()), BraidedObject::from_yd(&h, &y).unwrap()));
            }
        }
    }
    out
}

fn examples() -> Vec<(String, BraidedObject)> {
    let mut out = vec![
        ("flip1".to_string(), BraidedObject::flip(1)),
        ("flip2".to_string(), BraidedObject::flip(2)),
        ("negflip1".to_string(), BraidedObject::neg_flip(1)),
        ("qplane".to_string(), qplane()),
    ];
    out.extend(yd_examples());
    out
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn braided_objects_validate() {
    for (name, x) in examples() {
        assert!(x.check().passed(), "{name}");
    }
    let bad = LinMap::from_int_rows(&[[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 0]]);
    assert!(matches!(BraidedObject::new(2, bad), Err(Error::AxiomFailure(_))));
}

#[test]
fn braid_rep_basics() {
    let q = qplane();
    assert_eq!(braid_rep(&q, 3, &[0, 1, 2]).unwrap(), LinMap::identity(8));
    assert_eq!(braid_rep(&q, 2, &[1, 0]).unwrap(), q.psi);
    // longest element of S_3 under the flip against a directly built reversal
    let f = BraidedObject::flip(2);
    let rev = braid_rep(&f, 3, &[2, 1, 0]).unwrap();
    assert_eq!(rev, permute_factors(2, &[2, 1, 0]));
    assert_eq!(rev.get(0b001, 0b100), Scalar::one());
    assert!(matches!(braid_rep(&q, 3, &[0, 0, 1]), Err(Error::NotPermutation(_))));
    assert!(matches!(braid_rep(&q, 3, &[0, 1]), Err(Error::NotPermutation(_))));
}

#[test]
fn braid_relation_on_two_reduced_words() {
    for (name, x) in examples() {
        let a = braid_word(&x, 3, &[0, 1, 0]).unwrap();
        let b = braid_word(&x, 3, &[1, 0, 1]).unwrap();
        assert_eq!(a, b, "{name}");
        assert_eq!(braid_rep(&x, 3, &[2, 1, 0]).unwrap(), a, "{name}");
    }
}

#[test]
fn bubble_words_are_reduced() {
    for p in all_perms(4) {
        assert_eq!(reduced_word(&p).unwrap().len(), length(&p));
        assert_eq!(selection_word(&p).len(), length(&p));
    }
}

#[test]
fn antisymmetrizer_examples() {
    let f1 = BraidedObject::flip(1);
    assert_eq!(antisymmetrizer(&f1, 0).unwrap(), LinMap::identity(1));
    assert_eq!(antisymmetrizer(&f1, 1).unwrap(), LinMap::identity(1));
    assert!(antisymmetrizer(&f1, 2).unwrap().is_zero());
    let n1 = BraidedObject::neg_flip(1);
    let mut fact = 1i64;
    for j in 1..=6 {
        fact *= j as i64;
        assert_eq!(antisymmetrizer(&n1, j).unwrap(), LinMap::scalar(Scalar::from_int(fact)), "j = {j}");
    }
    let q = qplane();
    let id_minus = LinMap::identity(4) - q.psi.clone();
    assert_eq!(shuffle_antisymmetrizer(&q, 1, 1).unwrap(), id_minus);
    assert_eq!(inverse_shuffle_antisymmetrizer(&q, 1, 1).unwrap(), id_minus);
    assert!(matches!(antisymmetrizers(&q, 5, 4), Err(Error::DegreeTooLarge { degree: 9, bound: 8 })));
}

#[test]
fn antisymmetrizer_matches_enumeration() {
    for (name, x) in examples() {
        let top = if x.dim >= 3 { 3 } else { 4 };
        for j in 0..=top {
            assert_eq!(antisymmetrizer(&x, j).unwrap(), enumerated_antisymmetrizer(&x, j), "{name} j = {j}");
        }
    }
}

#[test]
fn shuffle_sets() {
    let sh = shuffles(1, 2);
    assert_eq!(sh, vec![vec![0, 1, 2], vec![1, 0, 2], vec![1, 2, 0]]);
    assert_eq!(sh.iter().map(|p| length(p)).collect::<Vec<_>>(), vec![0, 1, 2]);
    for k in 0..=4 {
        for l in 0..=4 - k {
            assert_eq!(shuffles(k, l).len(), binomial(k + l, k));
        }
    }
}

/// Σ over (k,l)-shuffles of (-1)^{length}: the Gaussian binomial at q = -1.
fn signed_binomial(k: usize, l: usize) -> i64 {
    if k == 0 || l == 0 {
        return 1;
    }
    signed_binomial(k - 1, l) + if k % 2 == 0 { 1 } else { -1 } * signed_binomial(k, l - 1)
}

#[test]
fn tensor_hopf_flip_dim_one() {
    let t = tensor_hopf(&BraidedObject::flip(1), 4).unwrap();
    assert_eq!(t.dims, vec![1; 5]);
    for n in 0..=4 {
        for k in 0..=n {
            let expect = signed_binomial(k, n - k);
            assert_eq!(t.comul(k, n - k), &LinMap::scalar(Scalar::from_int(expect)), "({k},{})", n - k);
        }
    }
    assert_eq!(t.comul(1, 1), &LinMap::zero(1, 1));
    assert_eq!(t.comul(1, 2), &LinMap::identity(1));
    assert_eq!(t.mul(0, 0), &LinMap::identity(1));
    // oracle: solve S_j = -Σ_{k<j} S_k·Δ_(k,j-k) recursively in the scalars
    let mut s = vec![1i64];
    for j in 1..=4 {
        let v = -(0..j).map(|k| s[k] * signed_binomial(k, j - k)).sum::<i64>();
        s.push(v);
    }
    assert_eq!(s, vec![1, -1, -1, 1, 1]);
    for (j, v) in s.iter().enumerate() {
        assert_eq!(t.antipode.as_ref().unwrap()[j], LinMap::scalar(Scalar::from_int(*v)));
    }
}

#[test]
fn tensor_and_cotensor_axioms() {
    for (name, x) in examples() {
        let top = if x.dim >= 3 { 3 } else { 4 };
        let t = tensor_hopf(&x, top).unwrap_or_else(|e| panic!("{name}: {e}"));
        let c = cotensor_hopf(&x, top).unwrap_or_else(|e| panic!("{name}: {e}"));
        let (_, a11, b11) = antisymmetrizers(&x, 1, 1).unwrap();
        assert_eq!(t.comul(1, 1), &a11, "{name}");
        assert_eq!(c.mul(1, 1), &b11, "{name}");
        assert_eq!(c.comul(1, 1), &LinMap::identity(x.dim * x.dim), "{name}");
    }
}

#[test]
fn broken_coproduct_is_reported() {
    let mut t = tensor_hopf(&BraidedObject::flip(2), 3).unwrap();
    t.delta.insert((1, 1), LinMap::identity(4));
    let r = check_graded_bialgebra(&t).unwrap();
    assert!(!r.passed());
    assert!(r.failures().any(|c| c.name.starts_with("compatibility")));
}

#[test]
fn exterior_flip_dims_are_binomial() {
    for n in 1..=4 {
        let e = exterior_hopf(&BraidedObject::flip(n), n + 1).unwrap();
        let expect: Vec<usize> = (0..=n + 1).map(|j| binomial(n, j)).collect();
        assert_eq!(e.dims, expect, "n = {n}");
        if n <= 3 {
            for j in 0..=n + 1 {
                let oracle = rank(&enumerated_antisymmetrizer(&BraidedObject::flip(n), j));
                assert_eq!(e.dims[j], oracle);
            }
        }
    }
}

#[test]
fn exterior_negative_flip_is_polynomial() {
    let e = exterior_hopf(&BraidedObject::neg_flip(1), 5).unwrap();
    assert_eq!(e.dims, vec![1; 6]);
}

#[test]
fn exterior_quantum_plane() {
    let q = qplane();
    let e = exterior_hopf(&q, 4).unwrap();
    assert_eq!(e.dims, vec![1, 2, 1, 0, 0]);
    for j in 0..=4 {
        assert_eq!(rank(&enumerated_antisymmetrizer(&q, j)), e.dims[j]);
    }
    // x∧y and y∧x are proportional in degree 2: y∧x = -q⁻¹·x∧y
    let m = e.algebra.mul(1, 1);
    let (xy, yx) = (m.get(0, 1), m.get(0, 2));
    assert_eq!(yx, -(Scalar::from_frac(1, 2) * xy));
    assert!(m.get(0, 0).is_zero() && m.get(0, 3).is_zero());
}

#[test]
fn hat_a_is_a_morphism_for_examples() {
    for (name, x) in examples() {
        let top = if x.dim >= 3 { 3 } else { 4 };
        let e = exterior_hopf(&x, top).unwrap_or_else(|err| panic!("{name}: {err}"));
        for j in 0..=top {
            assert_eq!(e.dims[j], rank(&e.hat_a[j]), "{name}");
            assert_eq!(e.proj[j].compose(&e.sect[j]), LinMap::identity(e.dims[j]), "{name}");
        }
    }
}

fn two_block_braidings(x: &GradedObject, y: &GradedObject) -> BTreeMap<(usize, usize), LinMap> {
    let mut out = BTreeMap::new();
    for k in 0..=x.max_degree() {
        for l in 0..=y.max_degree() {
            out.insert((k, l), LinMap::flip(x.dim(k), y.dim(l)));
        }
    }
    out
}

#[test]
fn graded_braiding_signs() {
    let q = qplane();
    let x0 = GradedObject::concentrated(2, 0);
    let blocks: BTreeMap<_, _> = [((0, 0), q.psi.clone())].into();
    assert_eq!(graded_braiding(&x0, &x0, &blocks, 0).unwrap(), q.psi);
    let x1 = GradedObject::concentrated(2, 1);
    let b = two_block_braidings(&x1, &x1);
    assert_eq!(graded_braiding(&x1, &x1, &b, 2).unwrap(), -LinMap::flip(2, 2));
    let mixed = graded_braiding(&x0, &x1, &two_block_braidings(&x0, &x1), 1).unwrap();
    assert_eq!(mixed, LinMap::flip(2, 2));
    assert!(matches!(graded_braiding(&x1, &x1, &BTreeMap::new(), 2), Err(Error::MissingBlock(1, 1))));
}

/// Index of the pure tensor `(u, v)` of total-space basis vectors inside the
/// degree-blocked ordering.
fn blocked_index(x: &GradedObject, u: usize, v: usize) -> (usize, usize) {
    let degree_of = |i: usize| {
        let mut acc = 0;
        for (k, &d) in x.dims.iter().enumerate() {
            if i < acc + d {
                return (k, i - acc);
            }
            acc += d;
        }
        unreachable!()
    };
    let ((k, iu), (l, iv)) = (degree_of(u), degree_of(v));
    let j = k + l;
    let mut off = 0;
    for kk in 0..k {
        off += x.dim(kk) * x.dim(j - kk);
    }
    (j, off + iu * x.dim(l) + iv)
}

#[test]
fn graded_braiding_satisfies_braid_relation() {
    let x = GradedObject::new(vec![1, 2]);
    let total: usize = x.dims.iter().sum();
    let blocks = two_block_braidings(&x, &x);
    let comps: Vec<LinMap> = (0..=2).map(|j| graded_braiding(&x, &x, &blocks, j).unwrap()).collect();
    // assemble the total braiding on (⊕X_k)⊗(⊕X_k)
    let mut triples = Vec::new();
    for u in 0..total {
        for v in 0..total {
            let (j, src) = blocked_index(&x, u, v);
            for (r, c, val) in comps[j].triples() {
                if c == src {
                    for a in 0..total {
                        for b in 0..total {
                            if blocked_index(&x, a, b) == (j, r) {
                                triples.push((a * total + b, u * total + v, val.clone()));
                            }
                        }
                    }
                }
            }
        }
    }
    let psi = LinMap::from_triples(total * total, total * total, triples).unwrap();
    let id = LinMap::identity(total);
    let (a, b) = (psi.kron(&id), id.kron(&psi));
    assert_eq!(LinMap::chain(&[&a, &b, &a]), LinMap::chain(&[&b, &a, &b]));
    assert_eq!(psi.compose(&psi), LinMap::identity(total * total));
    assert!(!psi.compose(&LinMap::flip(total, total)).is_identity());
}

fn two_term(d: LinMap) -> ComplexObject {
    ComplexObject::new(GradedObject::new(vec![d.dom(), d.cod()]), vec![d]).unwrap()
}

#[test]
fn tensor_complex_examples() {
    let id = two_term(LinMap::identity(1));
    let t = tensor_complex(&id, &id);
    assert_eq!(t.graded.dims, vec![1, 2, 1]);
    assert_eq!(t.diffs[0], LinMap::from_int_rows(&[[1], [1]]));
    assert_eq!(t.diffs[1], LinMap::from_int_rows(&[[1, -1]]));
    assert!(t.check().passed());

    let d = LinMap::from_int_rows(&[[1, 2], [0, 3], [4, 0]]);
    let a = two_term(d.clone());
    let b = ComplexObject::new(GradedObject::new(vec![2]), vec![]).unwrap();
    let t = tensor_complex(&a, &b);
    assert_eq!(t.diffs, vec![d.kron(&LinMap::identity(2))]);

    let z = two_term(LinMap::zero(2, 1));
    let t = tensor_complex(&z, &z);
    assert!(t.diffs.iter().all(|m| m.is_zero()));
}

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = LinMap> {
    proptest::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| {
        let rows: Vec<Vec<i64>> = v.chunks(cols).map(|c| c.to_vec()).collect();
        LinMap::from_int_rows(&rows)
    })
}

fn diagonal_braiding(q: &[i64]) -> BraidedObject {
    // e_i ⊗ e_j ↦ q_ij e_j ⊗ e_i
    let triples = (0..4).map(|idx| {
        let (i, j) = (idx / 2, idx % 2);
        (j * 2 + i, idx, Scalar::from_int(q[idx]))
    });
    BraidedObject::new(2, LinMap::from_triples(4, 4, triples).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reduced_words_agree(p in Just((0..4usize).collect::<Vec<_>>()).prop_shuffle()) {
        let x = qplane();
        let bubble = braid_rep(&x, 4, &p).unwrap();
        prop_assert_eq!(&bubble, &braid_word(&x, 4, &selection_word(&p)).unwrap());
        prop_assert_eq!(braid_rep(&BraidedObject::flip(2), 4, &p).unwrap(), permute_factors(2, &p));
    }

    #[test]
    fn tensor_complex_squares_to_zero(d1 in small_matrix(2, 3), d2 in small_matrix(3, 2)) {
        let t = tensor_complex(&two_term(d1), &two_term(d2));
        prop_assert!(t.check().passed());
    }

    #[test]
    fn diagonal_braidings_give_exterior_algebras(
        q in proptest::collection::vec(prop_oneof![Just(-2i64), Just(-1), Just(1), Just(3)], 4)
    ) {
        let x = diagonal_braiding(&q);
        let e = exterior_hopf(&x, 3).unwrap();
        for j in 0..=3 {
            prop_assert_eq!(e.dims[j], rank(&enumerated_antisymmetrizer(&x, j)));
        }
    }
}
