//! Graded objects and complexes, braid-group sections of the symmetric
//! group, shuffle antisymmetrizers, and the braided tensor, cotensor and
//! exterior Hopf algebras of a braided object.

mod complex;
mod hopf;

pub use complex::{graded_braiding, tensor_complex, ComplexObject, GradedObject};
pub use hopf::{
    check_graded_bialgebra, check_graded_morphism, cotensor_hopf, exterior_hopf, tensor_hopf, ExteriorHopf,
    GradedBialgebra,
};

use crate::error::{Error, Result};
use crate::exactla::{rank, sum_maps, LinMap, Scalar};
use crate::hopf::{expect_shape, FiniteHopfAlgebra};
use crate::report::Report;
use crate::yd::{yd_braiding, YDModule};

/// Largest degree for which symmetric-group sums are enumerated by default.
pub const DEFAULT_DEGREE_BOUND: usize = 8;

/// A space with a self-braiding `Ψ: X ⊗ X -> X ⊗ X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedObject {
    pub dim: usize,
    pub psi: LinMap,
}

impl BraidedObject {
    /// Validates invertibility and the braid relation, failing with `AxiomFailure`.
    pub fn new(dim: usize, psi: LinMap) -> Result<Self> {
        expect_shape("self-braiding", &psi, dim * dim, dim * dim)?;
        let x = BraidedObject { dim, psi };
        x.check().into_result(Error::AxiomFailure)?;
        Ok(x)
    }

    pub fn flip(dim: usize) -> Self {
        BraidedObject { dim, psi: LinMap::flip(dim, dim) }
    }

    pub fn neg_flip(dim: usize) -> Self {
        BraidedObject { dim, psi: -LinMap::flip(dim, dim) }
    }

    /// The crossed-module braiding of `y` with itself.
    pub fn from_yd(h: &FiniteHopfAlgebra, y: &YDModule) -> Result<Self> {
        Ok(BraidedObject { dim: y.dim, psi: yd_braiding(h, y, y)? })
    }

    /// The quantum-plane braiding on basis `(x, y)`, normalized so that
    /// `(Ψ - 1)(Ψ + q⁻²) = 0`:
    /// `x⊗x ↦ x⊗x`, `y⊗y ↦ y⊗y`, `x⊗y ↦ q⁻¹ y⊗x`,
    /// `y⊗x ↦ q⁻¹ x⊗y + (1 - q⁻²) y⊗x`.
    pub fn quantum_plane(q: &Scalar) -> Result<Self> {
        let qi = q.inv().ok_or_else(|| Error::BadParams("q must be nonzero".into()))?;
        let one = Scalar::one();
        let psi = LinMap::from_triples(
            4,
            4,
            [
                (0, 0, one.clone()),
                (3, 3, one.clone()),
                (2, 1, qi.clone()),
                (1, 2, qi.clone()),
                (2, 2, one - &qi * &qi),
            ],
        )?;
        BraidedObject::new(2, psi)
    }

    /// "braiding invertible" and "braid relation" on `X ⊗ X ⊗ X`.
    pub fn check(&self) -> Report {
        let mut r = Report::new("braided object");
        let n = self.dim;
        let sq = n * n;
        if self.psi.cod() != sq || self.psi.dom() != sq {
            r.flag("shape", false, Some(format!("braiding is {}x{}, expected {sq}x{sq}", self.psi.cod(), self.psi.dom())));
            return r;
        }
        let rk = rank(&self.psi);
        r.flag("braiding invertible", rk == sq, (rk != sq).then(|| format!("rank {rk} of {sq}")));
        let id = LinMap::identity(n);
        let a = self.psi.kron(&id);
        let b = id.kron(&self.psi);
        r.eq_maps("braid relation", &LinMap::chain(&[&a, &b, &a]), &LinMap::chain(&[&b, &a, &b]));
        r
    }
}

fn check_bound(degree: usize, bound: usize) -> Result<()> {
    if degree > bound {
        return Err(Error::DegreeTooLarge { degree, bound });
    }
    Ok(())
}

pub(crate) fn sign(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

fn validate_perm(perm: &[usize]) -> Result<()> {
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || seen[p] {
            return Err(Error::NotPermutation(perm.to_vec()));
        }
        seen[p] = true;
    }
    Ok(())
}

/// Coxeter length, i.e. the number of inversions.
pub fn length(perm: &[usize]) -> usize {
    let mut n = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                n += 1;
            }
        }
    }
    n
}

pub fn inverse_perm(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

/// Reduced word for `perm` by left-to-right bubble passes.
///
/// `perm[i]` is the position the `i`-th tensor factor is moved to. The word
/// lists generator indices in the order they are applied; generator `i`
/// exchanges positions `i` and `i + 1`.
pub fn reduced_word(perm: &[usize]) -> Result<Vec<usize>> {
    validate_perm(perm)?;
    let mut arr = perm.to_vec();
    let mut word = Vec::new();
    loop {
        let mut swapped = false;
        for p in 0..arr.len().saturating_sub(1) {
            if arr[p] > arr[p + 1] {
                arr.swap(p, p + 1);
                word.push(p);
                swapped = true;
            }
        }
        if !swapped {
            return Ok(word);
        }
    }
}

/// `id^{⊗i} ⊗ Ψ ⊗ id^{⊗(j-i-2)}` on `X^{⊗j}`.
pub fn braid_generator(x: &BraidedObject, j: usize, i: usize) -> Result<LinMap> {
    if i + 1 >= j {
        return Err(Error::BadParams(format!("generator {i} does not act on {j} factors")));
    }
    let left = LinMap::identity(x.dim.pow(i as u32));
    let right = LinMap::identity(x.dim.pow((j - i - 2) as u32));
    Ok(LinMap::kron_all(&[&left, &x.psi, &right]))
}

/// Composite of braid generators, applied in the order listed.
pub fn braid_word(x: &BraidedObject, j: usize, word: &[usize]) -> Result<LinMap> {
    let gens = (0..j.saturating_sub(1)).map(|i| braid_generator(x, j, i)).collect::<Result<Vec<_>>>()?;
    let mut out = LinMap::identity(x.dim.pow(j as u32));
    for &i in word {
        let g = gens.get(i).ok_or_else(|| Error::BadParams(format!("generator {i} does not act on {j} factors")))?;
        out = g.compose(&out);
    }
    Ok(out)
}

/// `σ_D(X)`, the lift of a permutation to `Aut(X^{⊗j})` through its reduced word.
pub fn braid_rep(x: &BraidedObject, j: usize, perm: &[usize]) -> Result<LinMap> {
    if perm.len() != j {
        return Err(Error::NotPermutation(perm.to_vec()));
    }
    braid_word(x, j, &reduced_word(perm)?)
}

/// The longest element `σ_j⁰`, reversing the order of the factors.
pub fn longest_element(j: usize) -> Vec<usize> {
    (0..j).rev().collect()
}

/// The `(k, l)`-shuffles: `k` chosen factors move to the front and the other
/// `l` to the back, both keeping their relative order. Subsets are listed in
/// lexicographic order.
pub fn shuffles(k: usize, l: usize) -> Vec<Vec<usize>> {
    let n = k + l;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if chosen.len() == k {
            let mut perm = vec![0; n];
            let (mut front, mut back) = (0, k);
            for (i, p) in perm.iter_mut().enumerate() {
                if chosen.contains(&i) {
                    *p = front;
                    front += 1;
                } else {
                    *p = back;
                    back += 1;
                }
            }
            out.push(perm);
            return;
        }
        for i in start..n {
            chosen.push(i);
            rec(i + 1, n, k, chosen, out);
            chosen.pop();
        }
    }
    rec(0, n, k, &mut chosen, &mut out);
    out
}

/// `A_j = Σ_{σ∈S_j} (-1)^{l(σ)} σ_D(X)`.
///
/// Every `σ` factors uniquely as `τ ∘ c` with `τ` fixing the last slot and
/// `c` moving one factor to the end, with lengths adding; the sum over `S_j`
/// is accumulated along that factorization, one coset at a time.
pub fn antisymmetrizer(x: &BraidedObject, j: usize) -> Result<LinMap> {
    antisymmetrizer_with_bound(x, j, DEFAULT_DEGREE_BOUND)
}

pub fn antisymmetrizer_with_bound(x: &BraidedObject, j: usize, bound: usize) -> Result<LinMap> {
    check_bound(j, bound)?;
    let mut a = LinMap::identity(1);
    for k in 1..=j {
        let size = x.dim.pow(k as u32);
        let gens = (0..k - 1).map(|i| braid_generator(x, k, i)).collect::<Result<Vec<_>>>()?;
        // coset sum Σ_r (-1)^{k-1-r} Ψ_{k-2} ∘ … ∘ Ψ_r
        let mut terms = Vec::with_capacity(k);
        let mut c = LinMap::identity(size);
        terms.push(c.clone());
        for r in (0..k - 1).rev() {
            c = c.compose(&gens[r]);
            terms.push(c.scale(&sign(k - 1 - r)));
        }
        let coset = sum_maps(size, size, terms);
        a = a.kron(&LinMap::identity(x.dim)).compose(&coset);
    }
    Ok(a)
}

fn signed_sum(x: &BraidedObject, perms: &[Vec<usize>]) -> Result<LinMap> {
    let j = perms.first().map_or(0, |p| p.len());
    let size = x.dim.pow(j as u32);
    let terms = perms
        .iter()
        .map(|p| Ok(braid_rep(x, j, p)?.scale(&sign(length(p)))))
        .collect::<Result<Vec<_>>>()?;
    Ok(sum_maps(size, size, terms))
}

/// `A_{(k,l)}`, the signed sum over `(k, l)`-shuffles.
pub fn shuffle_antisymmetrizer(x: &BraidedObject, k: usize, l: usize) -> Result<LinMap> {
    check_bound(k + l, DEFAULT_DEGREE_BOUND)?;
    signed_sum(x, &shuffles(k, l))
}

/// `A^{(k,l)}`, the signed sum over inverse `(k, l)`-shuffles.
pub fn inverse_shuffle_antisymmetrizer(x: &BraidedObject, k: usize, l: usize) -> Result<LinMap> {
    check_bound(k + l, DEFAULT_DEGREE_BOUND)?;
    let inv: Vec<Vec<usize>> = shuffles(k, l).iter().map(|p| inverse_perm(p)).collect();
    signed_sum(x, &inv)
}

/// `(A_{k+l}, A_{(k,l)}, A^{(k,l)})`.
pub fn antisymmetrizers(x: &BraidedObject, k: usize, l: usize) -> Result<(LinMap, LinMap, LinMap)> {
    antisymmetrizers_with_bound(x, k, l, DEFAULT_DEGREE_BOUND)
}

pub fn antisymmetrizers_with_bound(
    x: &BraidedObject,
    k: usize,
    l: usize,
    bound: usize,
) -> Result<(LinMap, LinMap, LinMap)> {
    check_bound(k + l, bound)?;
    let full = antisymmetrizer_with_bound(x, k + l, bound)?;
    let sh = shuffles(k, l);
    let inv: Vec<Vec<usize>> = sh.iter().map(|p| inverse_perm(p)).collect();
    Ok((full, signed_sum(x, &sh)?, signed_sum(x, &inv)?))
}

/// The block permutation carrying `X^{⊗a} ⊗ X^{⊗b}` to `X^{⊗b} ⊗ X^{⊗a}`.
pub fn block_swap(a: usize, b: usize) -> Vec<usize> {
    (0..a).map(|i| b + i).chain(0..b).collect()
}
