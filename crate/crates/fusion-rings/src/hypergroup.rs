//! Structure-constant representation of hypergroups and fusion rings.
//!
//! A ring of rank `m` is stored as the tensor `N[i][j][k]`, the coefficient of
//! `x_k` in `x_i x_j`. Index 0 is the unit.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Law, Result};
use crate::scalar::{Scalar, ScalarKind};
use crate::spectra::{snap, CharacterTable, Tolerance};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize)]
pub struct FlagSet {
    pub symmetric: bool,
    pub normalized: bool,
    pub real: bool,
    pub rational: bool,
    pub real_non_negative: bool,
    pub abelian: bool,
    pub fusion_ring: bool,
    pub h_integral: bool,
}

/// The orders `h_i = 1/N_{i,i*}^0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Orders {
    pub h: Vec<Scalar>,
}

impl Orders {
    pub fn approx(&self) -> Vec<f64> {
        self.h.iter().map(Scalar::to_f64).collect()
    }
}

/// A vector of the algebra in the standard basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Element {
    pub coords: Vec<Scalar>,
}

impl Element {
    pub fn zero(m: usize) -> Self {
        Element { coords: vec![Scalar::zero(); m] }
    }

    pub fn basis(m: usize, i: usize) -> Self {
        let mut e = Element::zero(m);
        e.coords[i] = Scalar::one();
        e
    }

    pub fn from_f64(v: &[f64]) -> Self {
        Element { coords: v.iter().map(|&x| Scalar::Float(x)).collect() }
    }

    pub fn approx(&self) -> Vec<f64> {
        self.coords.iter().map(Scalar::to_f64).collect()
    }

    pub fn is_exact(&self) -> bool {
        self.coords.iter().all(Scalar::is_exact)
    }

    pub fn add(&self, other: &Element) -> Element {
        Element { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Element) -> Element {
        Element { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element { coords: self.coords.iter().map(|a| a * c).collect() }
    }

    /// Sup norm of the coordinates.
    pub fn max_norm(&self) -> f64 {
        self.coords.iter().map(|c| c.to_f64().abs()).fold(0.0, f64::max)
    }

    /// Indices with a nonzero coordinate; floats are cut at `threshold`.
    pub fn support(&self, threshold: f64) -> Vec<usize> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| if c.is_exact() { !c.is_zero() } else { c.to_f64().abs() > threshold })
            .map(|(i, _)| i)
            .collect()
    }
}

/// A validated hypergroup. Immutable after construction.
#[derive(Debug, Clone)]
pub struct FusionData {
    name: String,
    rank: usize,
    involution: Vec<usize>,
    entries: Vec<Scalar>,
    approx: Vec<f64>,
    kind: ScalarKind,
    flags: FlagSet,
    orders: Orders,
}

impl FusionData {
    /// Builds and validates with the default tolerance.
    pub fn new(name: impl Into<String>, involution: Vec<usize>, entries: Vec<Scalar>) -> Result<Self> {
        Self::with_tolerance(name, involution, entries, &Tolerance::default())
    }

    /// Builds and validates; `tol` only matters for float tensors.
    pub fn with_tolerance(
        name: impl Into<String>,
        involution: Vec<usize>,
        entries: Vec<Scalar>,
        tol: &Tolerance,
    ) -> Result<Self> {
        let m = involution.len();
        if m == 0 {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        if entries.len() != m * m * m {
            return Err(Error::DimensionMismatch { expected: m * m * m, found: entries.len() });
        }
        let kind = entries.iter().map(Scalar::kind).max().unwrap_or(ScalarKind::Integer);
        let entries: Vec<Scalar> = if kind == ScalarKind::Float {
            entries.into_iter().map(|e| Scalar::Float(e.to_f64())).collect()
        } else {
            entries
        };
        let approx = entries.iter().map(Scalar::to_f64).collect();
        let mut data = FusionData {
            name: name.into(),
            rank: m,
            involution,
            entries,
            approx,
            kind,
            flags: FlagSet::default(),
            orders: Orders { h: Vec::new() },
        };
        data.flags = validate_with(&data, tol)?;
        data.orders = Orders {
            h: (0..m).map(|i| data.entry(i, data.involution[i], 0).recip().expect("checked positive")).collect(),
        };
        Ok(data)
    }

    /// Builds from a nested integer table `t[i][j][k]` with the involution read off the unit coefficients.
    pub fn from_int_table(name: impl Into<String>, t: &[Vec<Vec<i64>>]) -> Result<Self> {
        let m = t.len();
        let mut entries = Vec::with_capacity(m * m * m);
        for mat in t {
            if mat.len() != m {
                return Err(Error::DimensionMismatch { expected: m, found: mat.len() });
            }
            for row in mat {
                if row.len() != m {
                    return Err(Error::DimensionMismatch { expected: m, found: row.len() });
                }
                entries.extend(row.iter().map(|&v| Scalar::int(v)));
            }
        }
        let involution = infer_involution(m, |i, j| !entries[(i * m + j) * m].is_zero())?;
        Self::new(name, involution, entries)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn involution(&self) -> &[usize] {
        &self.involution
    }

    pub fn dual_index(&self, i: usize) -> usize {
        self.involution[i]
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    pub fn is_exact(&self) -> bool {
        self.kind != ScalarKind::Float
    }

    pub fn flags(&self) -> &FlagSet {
        &self.flags
    }

    pub fn orders(&self) -> &Orders {
        &self.orders
    }

    pub fn h(&self) -> Vec<f64> {
        self.orders.approx()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.entries[(i * self.rank + j) * self.rank + k]
    }

    #[inline]
    pub fn nf(&self, i: usize, j: usize, k: usize) -> f64 {
        self.approx[(i * self.rank + j) * self.rank + k]
    }

    /// Whether `N_{ij}^k` counts as nonzero: exact test, or `> threshold` for floats.
    #[inline]
    pub fn is_constituent(&self, i: usize, j: usize, k: usize, threshold: f64) -> bool {
        if self.is_exact() {
            !self.entry(i, j, k).is_zero()
        } else {
            self.nf(i, j, k).abs() > threshold
        }
    }

    /// Largest absolute entry.
    pub fn max_norm(&self) -> f64 {
        self.approx.iter().fold(0.0, |a, b| a.max(b.abs()))
    }

    /// `(L_i)_{kj} = N_{ij}^k`, the matrix of left multiplication by `x_i`.
    pub fn left_matrix(&self, i: usize) -> nalgebra::DMatrix<f64> {
        let m = self.rank;
        nalgebra::DMatrix::from_fn(m, m, |k, j| self.nf(i, j, k))
    }

    /// Exact left multiplication matrix, when the tensor is exact.
    pub fn left_matrix_exact(&self, i: usize) -> Option<Vec<Vec<BigRational>>> {
        if !self.is_exact() {
            return None;
        }
        let m = self.rank;
        Some((0..m).map(|k| (0..m).map(|j| self.entry(i, j, k).to_rational().unwrap()).collect()).collect())
    }

    pub fn basis(&self, i: usize) -> Element {
        Element::basis(self.rank, i)
    }

    /// Applies the involution to an element (coefficients are real).
    pub fn star(&self, x: &Element) -> Element {
        let mut out = Element::zero(self.rank);
        for (i, c) in x.coords.iter().enumerate() {
            out.coords[self.involution[i]] = c.clone();
        }
        out
    }

    /// Restriction to a multiplicatively closed index set, relabelled in the given order.
    pub fn restrict(&self, indices: &[usize]) -> Result<FusionData> {
        let r = indices.len();
        let mut pos = vec![usize::MAX; self.rank];
        for (a, &i) in indices.iter().enumerate() {
            pos[i] = a;
        }
        let mut entries = Vec::with_capacity(r * r * r);
        for &i in indices {
            for &j in indices {
                for &k in indices {
                    entries.push(self.entry(i, j, k).clone());
                }
            }
        }
        let involution = indices.iter().map(|&i| pos[self.involution[i]]).collect::<Vec<_>>();
        if involution.iter().any(|&p| p == usize::MAX) {
            return Err(Error::ClosureViolation("restriction not closed under involution".into()));
        }
        FusionData::new(format!("{}|sub", self.name), involution, entries)
    }
}

/// Reads `i*` as the unique `j` with a nonzero unit coefficient in `x_i x_j`.
pub(crate) fn infer_involution(m: usize, unit_coeff: impl Fn(usize, usize) -> bool) -> Result<Vec<usize>> {
    let mut inv = vec![0; m];
    for (i, slot) in inv.iter_mut().enumerate() {
        let js: Vec<usize> = (0..m).filter(|&j| unit_coeff(i, j)).collect();
        if js.len() != 1 {
            return Err(Error::AxiomViolation { law: Law::UnitCoefficient, indices: vec![i] });
        }
        *slot = js[0];
    }
    Ok(inv)
}

/// Recomputes every flag and verifies the axioms of a hypergroup.
pub fn validate(data: &FusionData) -> Result<FlagSet> {
    validate_with(data, &Tolerance::default())
}

pub fn validate_with(data: &FusionData, tol: &Tolerance) -> Result<FlagSet> {
    let m = data.rank;
    let inv = &data.involution;
    let exact = data.is_exact();
    let eps = tol.threshold(data.max_norm());
    let is_zero = |i, j, k| if exact { data.entry(i, j, k).is_zero() } else { data.nf(i, j, k).abs() <= eps };
    let same = |a: (usize, usize, usize), b: (usize, usize, usize)| {
        if exact {
            data.entry(a.0, a.1, a.2) == data.entry(b.0, b.1, b.2)
        } else {
            (data.nf(a.0, a.1, a.2) - data.nf(b.0, b.1, b.2)).abs() <= eps
        }
    };
    let is_one = |i, j, k| if exact { data.entry(i, j, k).exact_eq(&Scalar::one()) } else { (data.nf(i, j, k) - 1.0).abs() <= eps };

    if inv[0] != 0 {
        return Err(Error::AxiomViolation { law: Law::Involution, indices: vec![0] });
    }
    for i in 0..m {
        if inv[i] >= m || inv[inv[i]] != i {
            return Err(Error::AxiomViolation { law: Law::Involution, indices: vec![i] });
        }
    }
    for j in 0..m {
        for k in 0..m {
            let want_one = j == k;
            for (a, b) in [(0, j), (j, 0)] {
                let ok = if want_one { is_one(a, b, k) } else { is_zero(a, b, k) };
                if !ok {
                    return Err(Error::AxiomViolation { law: Law::Unit, indices: vec![a, b, k] });
                }
            }
        }
    }
    for i in 0..m {
        for j in 0..m {
            if j == inv[i] {
                let positive = if exact { data.entry(i, j, 0).signum() > 0 } else { data.nf(i, j, 0) > eps };
                if !positive {
                    return Err(Error::AxiomViolation { law: Law::UnitCoefficient, indices: vec![i, j, 0] });
                }
            } else if !is_zero(i, j, 0) {
                return Err(Error::AxiomViolation { law: Law::UnitCoefficient, indices: vec![i, j, 0] });
            }
        }
    }
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                if !same((i, j, k), (inv[j], inv[i], inv[k])) {
                    return Err(Error::AxiomViolation { law: Law::AntiAutomorphism, indices: vec![i, j, k] });
                }
            }
        }
    }
    check_associativity(data, eps)?;

    let mut f = FlagSet { real: true, rational: exact, ..FlagSet::default() };
    f.symmetric = (0..m).all(|a| (0..m).all(|b| same((a, b, 0), (b, a, 0))));
    f.abelian = (0..m).all(|a| (0..m).all(|b| (0..m).all(|c| same((a, b, c), (b, a, c)))));
    f.real_non_negative = if exact {
        data.entries.iter().all(|e| e.signum() >= 0)
    } else {
        data.approx.iter().all(|&v| v >= -eps)
    };
    f.normalized = (0..m).all(|a| {
        (0..m).all(|b| {
            if exact {
                let s = (0..m).fold(Scalar::zero(), |s, c| &s + data.entry(a, b, c));
                s.exact_eq(&Scalar::one())
            } else {
                ((0..m).map(|c| data.nf(a, b, c)).sum::<f64>() - 1.0).abs() <= eps * m as f64
            }
        })
    });
    f.fusion_ring = data.kind == ScalarKind::Integer
        && f.real_non_negative
        && (0..m).all(|a| is_one(a, inv[a], 0) && is_one(inv[a], a, 0));
    f.h_integral = (0..m).all(|a| {
        let n = data.entry(a, inv[a], 0);
        if exact {
            n.recip().map(|h| h.kind() == ScalarKind::Integer).unwrap_or(false)
        } else {
            let h = 1.0 / n.to_f64();
            matches!(snap(h, tol), Scalar::Int(_))
        }
    });
    Ok(f)
}

fn check_associativity(data: &FusionData, eps: f64) -> Result<()> {
    let m = data.rank;
    if data.is_exact() {
        if let Some(t) = scaled_i128(data) {
            return assoc_generic(m, &t, |a, b| a == b, 0i128);
        }
        let t: Vec<BigRational> = data.entries.iter().map(|e| e.to_rational().unwrap()).collect();
        return assoc_generic(m, &t, |a, b| a == b, BigRational::zero());
    }
    let tol = eps * (1.0 + data.max_norm()) * m as f64;
    assoc_generic(m, &data.approx, |a: &f64, b: &f64| (a - b).abs() <= tol, 0.0)
}

/// Entries multiplied by the common denominator, if every product sum fits in `i128`.
fn scaled_i128(data: &FusionData) -> Option<Vec<i128>> {
    let mut den = BigInt::one();
    for e in &data.entries {
        if let Scalar::Rational(r) = e {
            den = num_integer::lcm(den, r.denom().clone());
        }
    }
    let mut out = Vec::with_capacity(data.entries.len());
    let mut max = 0i128;
    for e in &data.entries {
        let r = e.to_rational()? * BigRational::from_integer(den.clone());
        let v = r.to_integer().to_i128()?;
        max = max.max(v.abs());
        out.push(v);
    }
    let bound = (i128::MAX / (data.rank as i128 + 1)) as f64;
    ((max as f64) * (max as f64) < bound).then_some(out)
}

fn assoc_generic<T>(m: usize, t: &[T], eq: impl Fn(&T, &T) -> bool, zero: T) -> Result<()>
where
    T: Clone,
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
    T: std::ops::AddAssign<T>,
    T: IsZero,
{
    let idx = |i: usize, j: usize, k: usize| (i * m + j) * m + k;
    let nz: Vec<Vec<usize>> =
        (0..m * m).map(|ij| (0..m).filter(|&p| !t[ij * m + p].is_zero_val()).collect()).collect();
    let mut lhs = vec![zero.clone(); m];
    let mut rhs = vec![zero.clone(); m];
    for i in 1..m {
        for j in 1..m {
            for k in 1..m {
                lhs.iter_mut().for_each(|v| *v = zero.clone());
                rhs.iter_mut().for_each(|v| *v = zero.clone());
                for &p in &nz[i * m + j] {
                    for &q in &nz[p * m + k] {
                        lhs[q] += &t[idx(i, j, p)] * &t[idx(p, k, q)];
                    }
                }
                for &p in &nz[j * m + k] {
                    for &q in &nz[i * m + p] {
                        rhs[q] += &t[idx(j, k, p)] * &t[idx(i, p, q)];
                    }
                }
                if let Some(q) = (0..m).find(|&q| !eq(&lhs[q], &rhs[q])) {
                    return Err(Error::AxiomViolation { law: Law::Associativity, indices: vec![i, j, k, q] });
                }
            }
        }
    }
    Ok(())
}

trait IsZero {
    fn is_zero_val(&self) -> bool;
}
impl IsZero for i128 {
    fn is_zero_val(&self) -> bool {
        *self == 0
    }
}
impl IsZero for f64 {
    fn is_zero_val(&self) -> bool {
        *self == 0.0
    }
}
impl IsZero for BigRational {
    fn is_zero_val(&self) -> bool {
        self.is_zero()
    }
}

/// `xy` by bilinear extension; exact when both inputs and the tensor are exact.
pub fn multiply(data: &FusionData, x: &Element, y: &Element) -> Result<Element> {
    let m = data.rank;
    for e in [x, y] {
        if e.coords.len() != m {
            return Err(Error::DimensionMismatch { expected: m, found: e.coords.len() });
        }
    }
    if data.is_exact() && x.is_exact() && y.is_exact() {
        let mut out = vec![BigRational::zero(); m];
        let xs: Vec<BigRational> = x.coords.iter().map(|c| c.to_rational().unwrap()).collect();
        let ys: Vec<BigRational> = y.coords.iter().map(|c| c.to_rational().unwrap()).collect();
        for i in (0..m).filter(|&i| !xs[i].is_zero()) {
            for j in (0..m).filter(|&j| !ys[j].is_zero()) {
                let c = &xs[i] * &ys[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let n = data.entry(i, j, k);
                    if !n.is_zero() {
                        *o += &c * n.to_rational().unwrap();
                    }
                }
            }
        }
        return Ok(Element { coords: out.into_iter().map(Scalar::from_rational).collect() });
    }
    let xs = x.approx();
    let ys = y.approx();
    let mut out = vec![0.0; m];
    for i in 0..m {
        if xs[i] == 0.0 {
            continue;
        }
        for j in 0..m {
            if ys[j] == 0.0 {
                continue;
            }
            let c = xs[i] * ys[j];
            for (k, o) in out.iter_mut().enumerate() {
                *o += c * data.nf(i, j, k);
            }
        }
    }
    Ok(Element::from_f64(&out))
}

/// `m(x, y) = τ(x y*)`.
pub fn tau_pairing(data: &FusionData, x: &Element, y: &Element) -> Result<Scalar> {
    let prod = multiply(data, x, &data.star(y))?;
    Ok(prod.coords[0].clone())
}

/// Rebases to `y_i = x_i / α_i`.
pub fn rescale(data: &FusionData, alphas: &[Scalar]) -> Result<FusionData> {
    let m = data.rank;
    if alphas.len() != m {
        return Err(Error::DimensionMismatch { expected: m, found: alphas.len() });
    }
    if !alphas[0].exact_eq(&Scalar::one()) && (alphas[0].to_f64() - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidRescale("alpha_0 must be 1".into()));
    }
    if let Some(i) = alphas.iter().position(Scalar::is_zero) {
        return Err(Error::InvalidRescale(format!("alpha_{i} is zero")));
    }
    for i in 0..m {
        let a = &alphas[i];
        let b = &alphas[data.involution[i]];
        let ok = if a.is_exact() && b.is_exact() {
            a == b
        } else {
            (a.to_f64() - b.to_f64()).abs() <= 1e-9 * (1.0 + a.to_f64().abs())
        };
        if !ok {
            return Err(Error::InvalidRescale(format!("alpha_{i} differs from its involution partner")));
        }
    }
    let mut entries = Vec::with_capacity(m * m * m);
    for i in 0..m {
        for j in 0..m {
            let den = &alphas[i] * &alphas[j];
            for k in 0..m {
                let n = data.entry(i, j, k);
                entries.push(if n.is_zero() { Scalar::zero() } else { &(n * &alphas[k]) / &den });
            }
        }
    }
    FusionData::new(data.name.clone(), data.involution.clone(), entries)
}

/// Rescales by the values of a real, nowhere-vanishing character.
pub fn normalize(data: &FusionData, table: &CharacterTable, mu1: usize) -> Result<FusionData> {
    let tol = &table.tol;
    let mut alphas = Vec::with_capacity(data.rank);
    for i in 0..data.rank {
        let v = table.value(i, mu1);
        let scale = 1.0 + v.norm();
        if v.norm() <= tol.threshold(scale) {
            return Err(Error::NotNormalizable { index: i });
        }
        if v.im.abs() > tol.threshold(scale) {
            return Err(Error::InvalidRescale(format!("character {mu1} is not real on x_{i}")));
        }
        alphas.push(v.re);
    }
    let snapped: Vec<Scalar> = alphas.iter().map(|&a| snap(a, tol)).collect();
    let alphas = if data.is_exact() && snapped.iter().all(Scalar::is_exact) {
        snapped
    } else {
        alphas.iter().map(|&a| Scalar::Float(a)).collect()
    };
    rescale(data, &alphas)
}

/// Exact determinant over the rationals (fraction-free elimination after clearing denominators).
pub fn exact_determinant(a: &[Vec<BigRational>]) -> BigRational {
    let n = a.len();
    let mut scale = BigInt::one();
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in a {
        let den = row.iter().fold(BigInt::one(), |d, x| num_integer::lcm(d, x.denom().clone()));
        scale *= &den;
        rows.push(row.iter().map(|x| (x * BigRational::from_integer(den.clone())).to_integer()).collect());
    }
    let det = bareiss(rows);
    BigRational::new(det, scale)
}

fn bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Integer value of a rational, when it is one.
pub fn rational_to_i64(r: &BigRational) -> Option<i64> {
    r.is_integer().then(|| r.to_integer().to_i64()).flatten()
}

/// `|r|` as f64.
pub fn rational_abs_f64(r: &BigRational) -> f64 {
    r.abs().to_f64().unwrap_or(f64::INFINITY)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::families::{near_group, ising, fibonacci};
    use crate::builders::groups::cyclic;

    #[test]
    fn group_ring_flags() {
        let z2 = crate::builders::families::group_ring(&cyclic(2));
        let f = z2.flags();
        assert!(f.fusion_ring && f.normalized && f.abelian && f.symmetric && f.h_integral);
        let g = z2.basis(1);
        assert_eq!(multiply(&z2, &g, &g).unwrap(), z2.basis(0));
    }

    #[test]
    fn ising_flags_and_products() {
        let r = ising();
        assert!(r.flags().fusion_ring);
        assert!(!r.flags().normalized);
        let rho = r.basis(2);
        let sq = multiply(&r, &rho, &rho).unwrap();
        assert_eq!(sq.coords, vec![Scalar::one(), Scalar::one(), Scalar::zero()]);
        assert_eq!(tau_pairing(&r, &rho, &rho).unwrap(), Scalar::one());
        assert_eq!(tau_pairing(&r, &r.basis(0), &sq).unwrap(), Scalar::one());
    }

    #[test]
    fn missing_unit_coefficient_is_rejected() {
        let mut t = vec![vec![vec![0i64; 2]; 2]; 2];
        t[0][0][0] = 1;
        t[0][1][1] = 1;
        t[1][0][1] = 1;
        t[1][1][1] = 1;
        let entries = t.iter().flatten().flatten().map(|&v| Scalar::int(v)).collect();
        let err = FusionData::new("bad", vec![0, 1], entries).unwrap_err();
        assert!(matches!(err, Error::AxiomViolation { law: Law::UnitCoefficient, .. }));
    }

    #[test]
    fn wrong_length_is_dimension_mismatch() {
        let err = FusionData::new("bad", vec![0, 1], vec![Scalar::one(); 7]).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn rescale_cases() {
        let r = ising();
        let same = rescale(&r, &[Scalar::one(), Scalar::one(), Scalar::one()]).unwrap();
        assert_eq!(same.entries(), r.entries());
        let s2 = Scalar::Float(2f64.sqrt());
        let n = rescale(&r, &[Scalar::one(), Scalar::one(), s2]).unwrap();
        assert!(n.flags().normalized);
        assert!((n.nf(2, 2, 0) - 0.5).abs() < 1e-12 && (n.nf(2, 2, 1) - 0.5).abs() < 1e-12);
        let err = rescale(&r, &[Scalar::int(2), Scalar::one(), Scalar::one()]).unwrap_err();
        assert!(matches!(err, Error::InvalidRescale(_)));
    }

    #[test]
    fn determinant_matches_known_values() {
        let q = |v: i64| BigRational::from_integer(v.into());
        let a = vec![vec![q(2), q(1)], vec![q(1), q(2)]];
        assert_eq!(exact_determinant(&a), q(3));
        let fib = fibonacci();
        let l = fib.left_matrix_exact(1).unwrap();
        assert_eq!(exact_determinant(&l), q(-1));
        let k = near_group(&cyclic(3), 3).unwrap();
        let _ = k.left_matrix_exact(3).unwrap();
    }
}
