//! Shipped example algebras.

use crate::error::{Error, Result};
use crate::exactla::{Field, LinMap, Scalar};
use crate::hopf::{tensor_mul, FiniteHopfAlgebra};

/// The base field as a Hopf algebra.
pub fn trivial() -> FiniteHopfAlgebra {
    let one = LinMap::identity(1);
    FiniteHopfAlgebra::verified(
        "trivial",
        Field::rationals(),
        1,
        one.clone(),
        one.clone(),
        one.clone(),
        one.clone(),
        Some(one),
    )
    .and_then(FiniteHopfAlgebra::with_inverted_antipode)
    .expect("trivial Hopf algebra")
}

/// Multiplication table of `Z/n`.
pub fn cyclic_group_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// Multiplication table of the symmetric group on `n` letters.
///
/// Elements are permutations in lexicographic order (the identity first);
/// the product `a * b` is the composite `a ∘ b`.
pub fn permutation_group_table(n: usize) -> Vec<Vec<usize>> {
    let perms = permutations(n);
    let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed under composition");
    perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| {
                    let c: Vec<usize> = (0..n).map(|i| a[b[i]]).collect();
                    index(&c)
                })
                .collect()
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next permutation in lexicographic order
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

struct Group {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

fn validate_group(table: &[Vec<usize>]) -> Result<Group> {
    let n = table.len();
    if n == 0 {
        return Err(Error::BadParams("empty multiplication table".into()));
    }
    if table.iter().any(|row| row.len() != n || row.iter().any(|&v| v >= n)) {
        return Err(Error::BadParams("multiplication table is not closed".into()));
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::BadParams(format!("not associative at ({a}, {b}, {c})")));
                }
            }
        }
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
        .ok_or_else(|| Error::BadParams("no identity element".into()))?;
    let inverse = (0..n)
        .map(|a| {
            (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::BadParams(format!("element {a} has no inverse")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Group { table: table.to_vec(), identity, inverse })
}

fn one() -> Scalar {
    Scalar::one()
}

/// The group algebra `kG`: grouplike basis, `S(g) = g⁻¹`.
pub fn group_algebra(name: &str, table: &[Vec<usize>]) -> Result<FiniteHopfAlgebra> {
    let g = validate_group(table)?;
    let n = table.len();
    let m = LinMap::from_triples(
        n,
        n * n,
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| (g.table[a][b], a * n + b, one())),
    )?;
    let eta = LinMap::from_triples(n, 1, [(g.identity, 0, one())])?;
    let delta = LinMap::from_triples(n * n, n, (0..n).map(|a| (a * n + a, a, one())))?;
    let eps = LinMap::from_triples(1, n, (0..n).map(|a| (0, a, one())))?;
    let s = LinMap::permutation(&g.inverse);
    FiniteHopfAlgebra::verified(name, Field::rationals(), n, m, eta, delta, eps, Some(s))?.with_inverted_antipode()
}

/// The function algebra `k^G`: basis of point indicators `δ_a`.
pub fn function_algebra(name: &str, table: &[Vec<usize>]) -> Result<FiniteHopfAlgebra> {
    let g = validate_group(table)?;
    let n = table.len();
    let m = LinMap::from_triples(n, n * n, (0..n).map(|a| (a, a * n + a, one())))?;
    let eta = LinMap::from_triples(n, 1, (0..n).map(|a| (a, 0, one())))?;
    let delta = LinMap::from_triples(
        n * n,
        n,
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| (a * n + b, g.table[a][b], one())),
    )?;
    let eps = LinMap::from_triples(1, n, [(0, g.identity, one())])?;
    let s = LinMap::permutation(&g.inverse);
    FiniteHopfAlgebra::verified(name, Field::rationals(), n, m, eta, delta, eps, Some(s))?.with_inverted_antipode()
}

/// Sweedler's four-dimensional Hopf algebra over `Q`.
///
/// Basis `g^a x^b` at index `a + 2b`: `1, g, x, gx`, with `g² = 1`,
/// `x² = 0`, `xg = -gx`, `Δg = g ⊗ g`, `Δx = x ⊗ 1 + g ⊗ x`.
pub fn sweedler() -> FiniteHopfAlgebra {
    taft_over("sweedler", 2, Scalar::from_int(-1), Field::rationals()).expect("Sweedler algebra")
}

/// The Taft algebra of order `n` over `Q(ζ_n)` with `ζ` the generator of
/// the cyclotomic field.
pub fn taft_cyclotomic(n: usize) -> Result<FiniteHopfAlgebra> {
    if n < 2 {
        return Err(Error::BadParams(format!("Taft algebra needs n >= 2, got {n}")));
    }
    let field = Field::cyclotomic(n)?;
    let zeta = field.generator();
    taft_over(&format!("taft:{n}"), n, zeta, field)
}

/// The Taft algebra for a given primitive `n`-th root of unity `zeta`.
pub fn taft(n: usize, zeta: Scalar, field: Field) -> Result<FiniteHopfAlgebra> {
    taft_over(&format!("taft:{n}"), n, zeta, field)
}

/// Basis `g^a x^b` at index `a + n b`; `xg = ζ gx`, `g^n = 1`, `x^n = 0`,
/// `Δx = x ⊗ 1 + g ⊗ x`, `S(g) = g⁻¹`, `S(x) = -g⁻¹x`.
fn taft_over(name: &str, n: usize, zeta: Scalar, field: Field) -> Result<FiniteHopfAlgebra> {
    if n < 2 {
        return Err(Error::BadParams(format!("Taft algebra needs n >= 2, got {n}")));
    }
    if !zeta.pow(n as u32).is_one() || (1..n).any(|k| zeta.pow(k as u32).is_one()) {
        return Err(Error::BadParams(format!("{zeta} is not a primitive {n}-th root of unity")));
    }
    let dim = n * n;
    let idx = |a: usize, b: usize| (a % n) + n * b;
    let mut mt = Vec::new();
    for b in 0..n {
        for a in 0..n {
            for d in 0..n {
                for c in 0..n {
                    if b + d < n {
                        mt.push((idx(a + c, b + d), idx(a, b) * dim + idx(c, d), zeta.pow((b * c) as u32)));
                    }
                }
            }
        }
    }
    let m = LinMap::from_triples(dim, dim * dim, mt)?;
    let eta = LinMap::from_triples(dim, 1, [(0, 0, one())])?;
    let eps = LinMap::from_triples(1, dim, (0..n).map(|a| (0, idx(a, 0), one())))?;

    let unit = LinMap::from_triples(dim, 1, [(0, 0, one())])?;
    let g = LinMap::from_triples(dim, 1, [(idx(1, 0), 0, one())])?;
    let x = LinMap::from_triples(dim, 1, [(idx(0, 1), 0, one())])?;
    let g_inv = LinMap::from_triples(dim, 1, [(idx(n - 1, 0), 0, one())])?;
    let mul = |a: &LinMap, b: &LinMap| m.compose(&a.kron(b));

    // comultiplication and antipode on generators, extended (anti)multiplicatively
    let m2 = tensor_mul(&m, dim, &m, dim);
    let mul2 = |a: &LinMap, b: &LinMap| m2.compose(&a.kron(b));
    let dg = g.kron(&g);
    let dx = &x.kron(&unit) + &g.kron(&x);
    let sg = g_inv.clone();
    let sx = -mul(&g_inv, &x);

    let mut delta_cols = vec![LinMap::zero(dim * dim, 1); dim];
    let mut s_cols = vec![LinMap::zero(dim, 1); dim];
    let mut dga = unit.kron(&unit);
    let mut sga = unit.clone();
    for a in 0..n {
        let mut col = dga.clone();
        let mut scol = sga.clone();
        for b in 0..n {
            delta_cols[idx(a, b)] = col.clone();
            s_cols[idx(a, b)] = scol.clone();
            col = mul2(&col, &dx);
            scol = mul(&sx, &scol);
        }
        dga = mul2(&dga, &dg);
        sga = mul(&sga, &sg);
    }
    let delta = LinMap::hstack(&delta_cols.iter().collect::<Vec<_>>());
    let s = LinMap::hstack(&s_cols.iter().collect::<Vec<_>>());
    FiniteHopfAlgebra::verified(name, field, dim, m, eta, delta, eps, Some(s))?.with_inverted_antipode()
}

/// Look up a shipped algebra by name.
///
/// Names: `trivial`, `cyclic:N`, `symmetric:N`, `function-cyclic:N`,
/// `function-symmetric:N`, `sweedler`, `taft:N`.
pub fn builtin(name: &str) -> Result<FiniteHopfAlgebra> {
    let parse_n = |s: &str| -> Result<usize> {
        s.parse().map_err(|_| Error::BadParams(format!("bad order `{s}` in `{name}`")))
    };
    let small = |n: usize| -> Result<usize> {
        if n == 0 || n > 5 {
            Err(Error::BadParams(format!("symmetric group order {n} out of range 1..=5")))
        } else {
            Ok(n)
        }
    };
    let (kind, arg) = name.split_once(':').unwrap_or((name, ""));
    match kind {
        "trivial" => Ok(trivial()),
        "sweedler" => Ok(sweedler()),
        "cyclic" => group_algebra(name, &cyclic_group_table(positive(parse_n(arg)?)?)),
        "symmetric" => group_algebra(name, &permutation_group_table(small(parse_n(arg)?)?)),
        "function-cyclic" => function_algebra(name, &cyclic_group_table(positive(parse_n(arg)?)?)),
        "function-symmetric" => function_algebra(name, &permutation_group_table(small(parse_n(arg)?)?)),
        "taft" => taft_cyclotomic(parse_n(arg)?),
        _ => Err(Error::BadParams(format!("unknown builtin algebra `{name}`"))),
    }
}

fn positive(n: usize) -> Result<usize> {
    if n == 0 {
        Err(Error::BadParams("group order must be positive".into()))
    } else {
        Ok(n)
    }
}
