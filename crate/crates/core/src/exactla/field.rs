//! Exact scalars: the rationals, or a simple extension `Q[x]/(p)` for one
//! monic irreducible polynomial `p`.
//!
//! Scalars carry their own field, so arithmetic needs no context. An
//! extension element whose coordinates beyond the constant term are all zero
//! is always stored as a plain rational; equality is therefore structural.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest factor degree searched by the trial factorization before a
/// minimal polynomial must be flagged as certified.
pub const TRIAL_FACTOR_DEGREE_BOUND: usize = 3;

/// Serialized description of the base field.
///
/// JSON forms: `"Q"`, or `{ "minpoly": ["a0", "a1", ..., "1"], "certified": false }`
/// with coefficients listed from the constant term upwards.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Named(String),
    Extension {
        minpoly: Vec<String>,
        #[serde(default)]
        certified: bool,
    },
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Named("Q".into())
    }
}

impl FieldSpec {
    pub fn build(&self) -> Result<Field> {
        match self {
            FieldSpec::Named(name) if name == "Q" => Ok(Field::rationals()),
            FieldSpec::Named(name) => {
                if let Some(n) = name.strip_prefix("cyclotomic:") {
                    let n: usize = n
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad cyclotomic order `{n}`")))?;
                    Field::cyclotomic(n)
                } else {
                    Err(Error::Parse(format!("unknown field `{name}`")))
                }
            }
            FieldSpec::Extension { minpoly, certified } => {
                let coeffs = minpoly
                    .iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<Vec<_>>>()?;
                Field::extension(coeffs, *certified)
            }
        }
    }
}

#[derive(Debug)]
pub(crate) struct ExtField {
    /// Monic, constant term first; length = degree + 1.
    minpoly: Vec<BigRational>,
}

impl ExtField {
    fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    fn same(a: &Arc<ExtField>, b: &Arc<ExtField>) -> bool {
        Arc::ptr_eq(a, b) || a.minpoly == b.minpoly
    }

    /// Reduce a polynomial (constant term first) modulo the minimal polynomial.
    fn reduce(&self, mut p: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.degree();
        for k in (d..p.len()).rev() {
            let c = std::mem::replace(&mut p[k], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            for i in 0..d {
                let t = &c * &self.minpoly[i];
                p[k - d + i] -= t;
            }
        }
        p.resize(d, BigRational::zero());
        p
    }
}

/// A base field: `Q` or `Q[x]/(p)`.
#[derive(Clone, Debug)]
pub struct Field {
    ext: Option<Arc<ExtField>>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        match (&self.ext, &other.ext) {
            (None, None) => true,
            (Some(a), Some(b)) => ExtField::same(a, b),
            _ => false,
        }
    }
}

impl Field {
    pub fn rationals() -> Self {
        Field { ext: None }
    }

    /// `Q[x]/(p)` for the monic polynomial `p` with coefficients listed from
    /// the constant term upwards. Irreducibility is checked by trial
    /// factorization unless `certified` is set.
    pub fn extension(minpoly: Vec<BigRational>, certified: bool) -> Result<Self> {
        if minpoly.len() < 2 {
            return Err(Error::BadParams("minimal polynomial must have degree >= 1".into()));
        }
        if !minpoly.last().unwrap().is_one() {
            return Err(Error::BadParams("minimal polynomial must be monic".into()));
        }
        if !certified {
            check_irreducible(&minpoly)?;
        }
        Ok(Field { ext: Some(Arc::new(ExtField { minpoly })) })
    }

    /// The cyclotomic field `Q(zeta_n)`; its generator is a primitive n-th root of unity.
    pub fn cyclotomic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadParams("cyclotomic order must be positive".into()));
        }
        let phi = cyclotomic_polynomial(n);
        let coeffs = phi.into_iter().map(BigRational::from_integer).collect();
        // cyclotomic polynomials are irreducible over Q
        Field::extension(coeffs, true)
    }

    pub fn degree(&self) -> usize {
        self.ext.as_ref().map_or(1, |e| e.degree())
    }

    pub fn is_rationals(&self) -> bool {
        self.ext.is_none()
    }

    /// Minimal polynomial coefficients (constant term first), if any.
    pub fn minpoly(&self) -> Option<&[BigRational]> {
        self.ext.as_ref().map(|e| e.minpoly.as_slice())
    }

    /// The class of `x` in `Q[x]/(p)`; for `Q` this is 1.
    pub fn generator(&self) -> Scalar {
        match &self.ext {
            None => Scalar::one(),
            Some(e) if e.degree() == 1 => Scalar::Rat(-e.minpoly[0].clone()),
            Some(e) => {
                let mut coeffs = vec![BigRational::zero(); e.degree()];
                coeffs[1] = BigRational::one();
                Scalar::from_coeffs(e, coeffs)
            }
        }
    }

    /// Element with the given coordinates in the power basis `1, x, x^2, ...`.
    pub fn element(&self, coeffs: Vec<BigRational>) -> Result<Scalar> {
        match &self.ext {
            None => match coeffs.len() {
                0 => Ok(Scalar::zero()),
                1 => Ok(Scalar::Rat(coeffs.into_iter().next().unwrap())),
                n => Err(Error::Parse(format!("{n} coordinates given for a rational scalar"))),
            },
            Some(e) => {
                if coeffs.len() > e.degree() {
                    return Err(Error::Parse(format!(
                        "{} coordinates given for a degree-{} field",
                        coeffs.len(),
                        e.degree()
                    )));
                }
                let mut c = coeffs;
                c.resize(e.degree(), BigRational::zero());
                Ok(Scalar::from_coeffs(e, c))
            }
        }
    }

    /// Parse `"a"`, `"a/b"`, or a coordinate list `"[a0, a1, ...]"`.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let t = s.trim();
        if let Some(inner) = t.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| Error::Parse(format!("unterminated coordinate list `{s}`")))?;
            let coeffs = inner
                .split(',')
                .filter(|p| !p.trim().is_empty())
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()?;
            self.element(coeffs)
        } else {
            Ok(Scalar::Rat(parse_rational(t)?))
        }
    }

    /// Field description for serialization.
    pub fn spec(&self) -> FieldSpec {
        match &self.ext {
            None => FieldSpec::Named("Q".into()),
            Some(e) => FieldSpec::Extension {
                minpoly: e.minpoly.iter().map(fmt_rational).collect(),
                certified: true,
            },
        }
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match t.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(t).map_err(|_| bad())?)),
    }
}

pub(crate) fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// An exact field element.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rat(BigRational),
    Ext(ExtElem),
}

/// Element of a proper extension with at least one nonzero non-constant coordinate.
#[derive(Clone, Debug)]
pub struct ExtElem {
    field: Arc<ExtField>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a == b,
            (Scalar::Ext(a), Scalar::Ext(b)) => {
                ExtField::same(&a.field, &b.field) && a.coeffs == b.coeffs
            }
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Scalar::Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    fn from_coeffs(field: &Arc<ExtField>, coeffs: Vec<BigRational>) -> Self {
        if coeffs.iter().skip(1).all(Zero::is_zero) {
            Scalar::Rat(coeffs.into_iter().next().unwrap_or_else(BigRational::zero))
        } else {
            Scalar::Ext(ExtElem { field: field.clone(), coeffs })
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Ext(_) => None,
        }
    }

    /// Coordinates in the power basis (a single entry for rationals).
    pub fn coords(&self) -> Vec<BigRational> {
        match self {
            Scalar::Rat(r) => vec![r.clone()],
            Scalar::Ext(e) => e.coeffs.clone(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(r) if r.is_zero() => None,
            Scalar::Rat(r) => Some(Scalar::Rat(r.recip())),
            Scalar::Ext(e) => ext_inverse(e),
        }
    }

    /// Render for serialization: `a`, `a/b`, or `[a0, a1, ...]`.
    pub fn to_repr(&self, field: &Field) -> String {
        match (self, &field.ext) {
            (Scalar::Rat(r), None) => fmt_rational(r),
            (Scalar::Rat(r), Some(e)) if e.degree() == 1 => fmt_rational(r),
            (Scalar::Rat(r), Some(e)) => {
                let mut parts = vec![fmt_rational(r)];
                parts.extend(std::iter::repeat_n("0".to_string(), e.degree() - 1));
                format!("[{}]", parts.join(", "))
            }
            (Scalar::Ext(x), _) => format!(
                "[{}]",
                x.coeffs.iter().map(fmt_rational).collect::<Vec<_>>().join(", ")
            ),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}", fmt_rational(r)),
            Scalar::Ext(x) => write!(
                f,
                "[{}]",
                x.coeffs.iter().map(fmt_rational).collect::<Vec<_>>().join(", ")
            ),
        }
    }
}

fn mixed_fields() -> ! {
    panic!("arithmetic between scalars of different extension fields")
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Rat(a), Scalar::Ext(e)) | (Scalar::Ext(e), Scalar::Rat(a)) => {
                let mut c = e.coeffs.clone();
                c[0] += a;
                Scalar::Ext(ExtElem { field: e.field.clone(), coeffs: c })
            }
            (Scalar::Ext(a), Scalar::Ext(b)) => {
                if !ExtField::same(&a.field, &b.field) {
                    mixed_fields();
                }
                let c = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
                Scalar::from_coeffs(&a.field, c)
            }
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Ext(e) => Scalar::Ext(ExtElem {
                field: e.field.clone(),
                coeffs: e.coeffs.iter().map(|c| -c).collect(),
            }),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            _ => self + &(-rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Rat(a), Scalar::Ext(e)) | (Scalar::Ext(e), Scalar::Rat(a)) => {
                if a.is_zero() {
                    return Scalar::zero();
                }
                Scalar::Ext(ExtElem {
                    field: e.field.clone(),
                    coeffs: e.coeffs.iter().map(|c| c * a).collect(),
                })
            }
            (Scalar::Ext(a), Scalar::Ext(b)) => {
                if !ExtField::same(&a.field, &b.field) {
                    mixed_fields();
                }
                let d = a.coeffs.len();
                let mut prod = vec![BigRational::zero(); 2 * d - 1];
                for (i, x) in a.coeffs.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.coeffs.iter().enumerate() {
                        if !y.is_zero() {
                            prod[i + j] += x * y;
                        }
                    }
                }
                let c = a.field.reduce(prod);
                Scalar::from_coeffs(&a.field, c)
            }
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            other => -&other,
        }
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if let (Scalar::Rat(a), Scalar::Rat(b)) = (&mut *self, rhs) {
            *a += b;
            return;
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if let (Scalar::Rat(a), Scalar::Rat(b)) = (&mut *self, rhs) {
            *a -= b;
            return;
        }
        *self = &*self - rhs;
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rat(r)
    }
}

/// Inverse via the multiplication-by-`e` matrix in the power basis.
fn ext_inverse(e: &ExtElem) -> Option<Scalar> {
    let d = e.coeffs.len();
    // column j = e * x^j
    let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(d);
    let mut cur = e.coeffs.clone();
    for _ in 0..d {
        cols.push(cur.clone());
        let mut shifted = vec![BigRational::zero()];
        shifted.extend(cur.iter().cloned());
        cur = e.field.reduce(shifted);
    }
    // augmented system [M | e_0]
    let mut m: Vec<Vec<BigRational>> = (0..d)
        .map(|r| {
            let mut row: Vec<BigRational> = (0..d).map(|c| cols[c][r].clone()).collect();
            row.push(if r == 0 { BigRational::one() } else { BigRational::zero() });
            row
        })
        .collect();
    for c in 0..d {
        let p = (c..d).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        let piv = m[c][c].clone();
        for x in m[c].iter_mut() {
            *x /= &piv;
        }
        for r in 0..d {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                let pivot_row = m[c].clone();
                for (x, y) in m[r].iter_mut().zip(pivot_row.iter()) {
                    *x -= &f * y;
                }
            }
        }
    }
    let sol = m.into_iter().map(|row| row[d].clone()).collect();
    Some(Scalar::from_coeffs(&e.field, sol))
}

// ---------------------------------------------------------------------------
// integer polynomials (constant term first)

type IntPoly = Vec<BigInt>;

fn trim(p: &mut IntPoly) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Exact division of integer polynomials; `None` if the remainder is nonzero
/// or the quotient is not integral.
fn int_poly_div(num: &IntPoly, den: &IntPoly) -> Option<IntPoly> {
    let mut r = num.clone();
    trim(&mut r);
    let mut d = den.clone();
    trim(&mut d);
    if r.len() < d.len() {
        return if r.iter().all(Zero::is_zero) { Some(vec![BigInt::zero()]) } else { None };
    }
    let lead = d.last().unwrap().clone();
    let mut q = vec![BigInt::zero(); r.len() - d.len() + 1];
    for k in (0..q.len()).rev() {
        let c = r[k + d.len() - 1].clone();
        if c.is_zero() {
            continue;
        }
        let (qc, rem) = c.div_rem(&lead);
        if !rem.is_zero() {
            return None;
        }
        for (i, di) in d.iter().enumerate() {
            r[k + i] -= &qc * di;
        }
        q[k] = qc;
    }
    if r.iter().all(Zero::is_zero) {
        Some(q)
    } else {
        None
    }
}

pub(crate) fn cyclotomic_polynomial(n: usize) -> IntPoly {
    // x^n - 1 divided by Phi_d for every proper divisor d
    let mut p: IntPoly = vec![BigInt::zero(); n + 1];
    p[0] = BigInt::from(-1);
    p[n] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi = cyclotomic_polynomial(d);
            p = int_poly_div(&p, &phi).expect("cyclotomic division is exact");
        }
    }
    p
}

fn eval_int(p: &IntPoly, x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let small = n.to_u64().filter(|&v| v <= 1_000_000_000_000);
    let Some(v) = small else { return Vec::new() };
    let mut out = Vec::new();
    let mut i = 1u64;
    while i * i <= v {
        if v % i == 0 {
            out.push(BigInt::from(i));
            if i * i != v {
                out.push(BigInt::from(v / i));
            }
        }
        i += 1;
    }
    out.sort();
    out
}

/// Lagrange interpolation through integer points; `None` unless the
/// interpolant has integer coefficients.
fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> Option<IntPoly> {
    let n = xs.len();
    let mut acc = vec![BigRational::zero(); n];
    for i in 0..n {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for j in 0..n {
            if j == i {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * BigRational::from_integer(xs[j].clone());
            }
            basis = next;
            denom *= BigRational::from_integer(&xs[i] - &xs[j]);
        }
        let scale = BigRational::from_integer(ys[i].clone()) / denom;
        for (k, b) in basis.iter().enumerate() {
            acc[k] += b * &scale;
        }
    }
    if acc.iter().all(|c| c.is_integer()) {
        let mut p: IntPoly = acc.into_iter().map(|c| c.to_integer()).collect();
        trim(&mut p);
        Some(p)
    } else {
        None
    }
}

/// Rational root test plus Kronecker's trial factorization for factor
/// degrees up to [`TRIAL_FACTOR_DEGREE_BOUND`].
fn check_irreducible(minpoly: &[BigRational]) -> Result<()> {
    let degree = minpoly.len() - 1;
    if degree == 1 {
        return Ok(());
    }
    // clear denominators
    let lcm = minpoly.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let p: IntPoly = minpoly
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let max_factor = degree / 2;
    if max_factor > TRIAL_FACTOR_DEGREE_BOUND {
        return Err(Error::NotIrreducible(format!(
            "degree {degree} exceeds the trial factorization bound; mark the polynomial certified"
        )));
    }
    // evaluation points with few divisors first
    let mut points: Vec<(usize, BigInt, BigInt)> = Vec::new();
    for x in -12i64..=12 {
        let xb = BigInt::from(x);
        let v = eval_int(&p, &xb);
        if v.is_zero() {
            return Err(Error::NotIrreducible(format!("rational root {x}")));
        }
        let divs = divisors(&v);
        if !divs.is_empty() {
            points.push((divs.len(), xb, v));
        }
    }
    points.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    for k in 1..=max_factor {
        if points.len() < k + 1 {
            return Err(Error::NotIrreducible("not enough evaluation points".into()));
        }
        let chosen = &points[..k + 1];
        let xs: Vec<BigInt> = chosen.iter().map(|c| c.1.clone()).collect();
        let candidates: Vec<Vec<BigInt>> = chosen
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let divs = divisors(&c.2);
                if i == 0 {
                    // fix the overall sign of the candidate factor
                    divs
                } else {
                    divs.iter().flat_map(|d| [d.clone(), -d]).collect()
                }
            })
            .collect();
        let mut idx = vec![0usize; k + 1];
        loop {
            let ys: Vec<BigInt> = idx.iter().enumerate().map(|(i, &j)| candidates[i][j].clone()).collect();
            if let Some(g) = interpolate(&xs, &ys) {
                if g.len() == k + 1 && int_poly_div(&p, &g).is_some() {
                    return Err(Error::NotIrreducible(format!("has a factor of degree {k}")));
                }
            }
            // advance the mixed-radix counter
            let mut pos = 0;
            loop {
                if pos == idx.len() {
                    break;
                }
                idx[pos] += 1;
                if idx[pos] < candidates[pos].len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == idx.len() {
                break;
            }
        }
    }
    Ok(())
}
