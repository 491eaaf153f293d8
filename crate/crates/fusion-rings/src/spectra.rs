//! Character tables, Frobenius-Perron data, formal codegrees and idempotents.

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergroup::{exact_determinant, multiply, Element, FusionData};
use crate::scalar::Scalar;

pub const DEFAULT_SEED: u64 = 0x5eed_f00d;
const RETRY_BUDGET: usize = 8;

/// Numerical tolerance record carried through every floating computation.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
    pub snap_denominator_bound: u64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { abs: 1e-9, rel: 1e-9, snap_denominator_bound: 10_000 }
    }
}

impl Tolerance {
    pub fn new(abs: f64, rel: f64) -> Self {
        Tolerance { abs, rel, ..Tolerance::default() }
    }

    /// `abs + rel * scale`.
    pub fn threshold(&self, scale: f64) -> f64 {
        self.abs + self.rel * scale.abs()
    }

    pub fn close(&self, a: f64, b: f64, scale: f64) -> bool {
        (a - b).abs() <= self.threshold(scale)
    }

    /// Cut used for structure-constant support of float tensors.
    pub fn support_threshold(&self) -> f64 {
        100.0 * self.abs
    }
}

/// Snaps to an integer, then to a rational with bounded denominator, else leaves the float.
pub fn snap(value: f64, tol: &Tolerance) -> Scalar {
    if !value.is_finite() {
        return Scalar::Float(value);
    }
    let eps = tol.threshold(value.abs());
    let r = value.round();
    if (value - r).abs() <= eps && r.abs() < 9.0e15 {
        return Scalar::int(r as i64);
    }
    // continued-fraction convergents
    let (mut h0, mut h1) = (1i128, value.floor() as i128);
    let (mut k0, mut k1) = (0i128, 1i128);
    let mut frac = value - value.floor();
    for _ in 0..64 {
        if frac.abs() < 1e-300 {
            break;
        }
        let inv = 1.0 / frac;
        let a = inv.floor();
        if a > 1e15 {
            break;
        }
        let a_i = a as i128;
        frac = inv - a;
        let h2 = a_i * h1 + h0;
        let k2 = a_i * k1 + k0;
        if k2 as u128 > tol.snap_denominator_bound as u128 {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        if (value - h1 as f64 / k1 as f64).abs() <= eps {
            return Scalar::ratio(h1 as i64, k1 as i64);
        }
    }
    Scalar::Float(value)
}

/// Residual norms recorded while building a table.
#[derive(Debug, Clone, Copy, Default, PartialEq, serde::Serialize)]
pub struct TableResiduals {
    pub eigen: f64,
    pub homomorphism: f64,
    pub first_orthogonality: f64,
    pub second_orthogonality: f64,
    pub inverse_codegree_sum: f64,
    pub idempotents: f64,
}

#[derive(Debug, Clone)]
pub struct CharacterTable {
    m: usize,
    values: Vec<Complex64>,
    pub fp_index: Option<usize>,
    pub codegrees: Vec<f64>,
    /// Row `j` holds the coordinates of `F_j`.
    pub idempotents: Vec<Vec<Complex64>>,
    pub h: Vec<f64>,
    pub tol: Tolerance,
    pub residuals: TableResiduals,
    pub attempts: usize,
}

impl CharacterTable {
    pub fn rank(&self) -> usize {
        self.m
    }

    /// `μ_j(x_i)`.
    #[inline]
    pub fn value(&self, i: usize, j: usize) -> Complex64 {
        self.values[i * self.m + j]
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.m).map(|i| self.value(i, j)).collect()
    }

    /// `μ_j(x)` for an arbitrary element.
    pub fn eval(&self, j: usize, x: &Element) -> Complex64 {
        x.coords.iter().enumerate().map(|(i, c)| self.value(i, j) * c.to_f64()).sum()
    }

    /// FP-dimensions, when the table has an FP column.
    pub fn fp_dims(&self) -> Option<Vec<f64>> {
        self.fp_index.map(|f| (0..self.m).map(|i| self.value(i, f).re).collect())
    }

    /// Zero test for an entry, scaled by the column norm.
    pub fn is_zero_entry(&self, i: usize, j: usize) -> bool {
        let norm = self.codegrees[j].sqrt();
        self.value(i, j).norm() <= self.tol.threshold(norm)
    }

    /// Rebuilds a table from explicit values (used by tests and by the dual module).
    pub fn from_columns(data: &FusionData, columns: Vec<Vec<Complex64>>, tol: &Tolerance) -> Result<Self> {
        let m = data.rank();
        let mut values = vec![Complex64::zero(); m * m];
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                values[i * m + j] = *v;
            }
        }
        finish_table(data, values, tol, 0)
    }
}

fn ensure_abelian(data: &FusionData) -> Result<()> {
    if data.flags().abelian {
        return Ok(());
    }
    let m = data.rank();
    for i in 0..m {
        for j in 0..m {
            if (0..m).any(|k| data.entry(i, j, k) != data.entry(j, i, k)) {
                return Err(Error::NotAbelian { i, j });
            }
        }
    }
    Err(Error::NotAbelian { i: 0, j: 0 })
}

pub fn character_table(data: &FusionData, tol: &Tolerance) -> Result<CharacterTable> {
    character_table_seeded(data, tol, DEFAULT_SEED)
}

/// Simultaneous diagonalization of all left multiplications.
///
/// In the coordinates `z_i = x_i / sqrt(h_i)` the operators are normal, so the
/// Hermitian part of a random complex combination shares their eigenvectors.
pub fn character_table_seeded(data: &FusionData, tol: &Tolerance, seed: u64) -> Result<CharacterTable> {
    ensure_abelian(data)?;
    let m = data.rank();
    let h = data.h();
    let sq: Vec<f64> = h.iter().map(|v| v.sqrt()).collect();
    let ops: Vec<DMatrix<Complex64>> = (0..m)
        .map(|i| {
            DMatrix::from_fn(m, m, |k, j| Complex64::new(data.nf(i, j, k) * sq[j] / sq[k], 0.0))
        })
        .collect();
    let scale = 1.0 + data.max_norm();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last_res = None;
    for attempt in 1..=RETRY_BUDGET {
        let mut a = DMatrix::<Complex64>::zeros(m, m);
        for op in ops.iter().skip(1) {
            let c = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            a += op * c;
        }
        let herm = (&a + a.adjoint()) * Complex64::new(0.5, 0.0);
        let eig = herm.symmetric_eigen();
        let mut evs: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        evs.sort_by(|x, y| x.partial_cmp(y).unwrap());
        let spread = evs.iter().fold(1.0f64, |s, v| s.max(v.abs()));
        if m > 1 && evs.windows(2).any(|w| w[1] - w[0] < 1e-4 * spread / m as f64) {
            continue;
        }
        let mut values = vec![Complex64::zero(); m * m];
        let mut eigen_res = 0.0f64;
        for j in 0..m {
            let v = eig.eigenvectors.column(j).into_owned();
            let nv = v.norm_squared();
            for i in 0..m {
                let av = &ops[i] * &v;
                let mu = v.dotc(&av) / nv;
                let r = (&av - &v * mu).norm() / nv.sqrt();
                eigen_res = eigen_res.max(r);
                values[i * m + j] = mu;
            }
        }
        if eigen_res > tol.threshold(scale) * m as f64 {
            last_res = Some(eigen_res);
            continue;
        }
        let mut table = finish_table(data, canonical_order(data, values, tol), tol, attempt)?;
        table.residuals.eigen = eigen_res;
        return Ok(table);
    }
    match last_res {
        Some(residual) => Err(Error::HomomorphismCheckFailed { character: 0, residual }),
        None => Err(Error::DegenerateSpectrum { attempts: RETRY_BUDGET }),
    }
}

fn round_key(v: Complex64) -> (i64, i64) {
    ((v.re * 1e6).round() as i64, (v.im * 1e6).round() as i64)
}

/// FP column first, then descending lexicographic order of rounded value vectors.
fn canonical_order(data: &FusionData, values: Vec<Complex64>, tol: &Tolerance) -> Vec<Complex64> {
    let m = data.rank();
    let col = |j: usize| (0..m).map(|i| values[i * m + j]).collect::<Vec<_>>();
    let mut cols: Vec<Vec<Complex64>> = (0..m).map(col).collect();
    cols.sort_by(|a, b| {
        let ka: Vec<_> = a.iter().map(|&v| round_key(v)).collect();
        let kb: Vec<_> = b.iter().map(|&v| round_key(v)).collect();
        kb.cmp(&ka)
    });
    let positive: Vec<usize> = (0..m).filter(|&j| is_positive_column(&cols[j], tol)).collect();
    if positive.len() == 1 && positive[0] != 0 {
        let c = cols.remove(positive[0]);
        cols.insert(0, c);
    }
    let mut out = vec![Complex64::zero(); m * m];
    for (j, c) in cols.iter().enumerate() {
        for (i, v) in c.iter().enumerate() {
            out[i * m + j] = *v;
        }
    }
    out
}

fn is_positive_column(col: &[Complex64], tol: &Tolerance) -> bool {
    col.iter().all(|v| v.re > tol.threshold(v.norm()) && v.im.abs() <= tol.threshold(v.norm()))
}

fn finish_table(data: &FusionData, values: Vec<Complex64>, tol: &Tolerance, attempts: usize) -> Result<CharacterTable> {
    let m = data.rank();
    let h = data.h();
    let inv = data.involution();
    let at = |i: usize, j: usize| values[i * m + j];
    let scale = 1.0 + data.max_norm();

    let mut hom = 0.0f64;
    for j in 0..m {
        let mut worst = 0.0f64;
        for a in 0..m {
            for b in 0..m {
                let lhs = at(a, j) * at(b, j);
                let rhs: Complex64 = (0..m).map(|k| at(k, j) * data.nf(a, b, k)).sum();
                worst = worst.max((lhs - rhs).norm() / (1.0 + lhs.norm()));
            }
        }
        if worst > tol.threshold(scale) * m as f64 {
            return Err(Error::HomomorphismCheckFailed { character: j, residual: worst });
        }
        hom = hom.max(worst);
    }

    let codegrees: Vec<f64> = (0..m).map(|j| (0..m).map(|i| h[i] * at(i, j).norm_sqr()).sum()).collect();
    let positive: Vec<usize> = (0..m).filter(|&j| is_positive_column(&(0..m).map(|i| at(i, j)).collect::<Vec<_>>(), tol)).collect();
    let fp_index = (positive.len() == 1).then(|| positive[0]);

    let mut res = TableResiduals { homomorphism: hom, ..TableResiduals::default() };
    for j in 0..m {
        for k in 0..m {
            let s: Complex64 = (0..m).map(|i| at(i, j) * at(i, k).conj() * h[i]).sum();
            let want = if j == k { codegrees[j] } else { 0.0 };
            res.first_orthogonality = res.first_orthogonality.max((s - want).norm() / (1.0 + codegrees[j]));
        }
    }
    for i in 0..m {
        for l in 0..m {
            let s: Complex64 = (0..m).map(|j| at(i, j) * at(l, j).conj() / codegrees[j]).sum();
            let want = if i == l { 1.0 / h[i] } else { 0.0 };
            res.second_orthogonality = res.second_orthogonality.max((s - want).norm());
        }
    }
    res.inverse_codegree_sum = ((0..m).map(|j| 1.0 / codegrees[j]).sum::<f64>() - 1.0).abs();
    let tau_res = (0..m)
        .map(|i| {
            let s: Complex64 = (0..m).map(|j| at(i, j) / codegrees[j]).sum();
            (s - if i == 0 { 1.0 } else { 0.0 }).norm()
        })
        .fold(0.0, f64::max);
    let orth_limit = tol.threshold(scale) * (m * m) as f64;
    let worst = res.first_orthogonality.max(res.second_orthogonality).max(res.inverse_codegree_sum).max(tau_res);
    if worst > orth_limit {
        return Err(Error::OrthogonalityResidualExceeded { residual: worst });
    }

    let idempotents: Vec<Vec<Complex64>> = (0..m)
        .map(|j| (0..m).map(|i| at(inv[i], j) * h[i] / codegrees[j]).collect())
        .collect();
    let mut idem = 0.0f64;
    for (j, f) in idempotents.iter().enumerate() {
        for k in 0..m {
            let v: Complex64 = (0..m).map(|i| f[i] * at(i, k)).sum();
            let want = if j == k { 1.0 } else { 0.0 };
            idem = idem.max((v - want).norm());
        }
    }
    for i in 0..m {
        let s: Complex64 = idempotents.iter().map(|f| f[i]).sum();
        idem = idem.max((s - if i == 0 { 1.0 } else { 0.0 }).norm());
    }
    if idem > orth_limit {
        return Err(Error::IdempotentResidual { residual: idem });
    }
    res.idempotents = idem;

    Ok(CharacterTable { m, values, fp_index, codegrees, idempotents, h, tol: *tol, residuals: res, attempts })
}

/// The unique strictly positive column.
pub fn fp_character(table: &CharacterTable) -> Result<usize> {
    let m = table.m;
    let positive: Vec<usize> =
        (0..m).filter(|&j| is_positive_column(&table.column(j), &table.tol)).collect();
    match positive.len() {
        0 => Err(Error::NoPositiveColumn),
        1 => Ok(positive[0]),
        _ => Err(Error::MultiplePositiveColumns),
    }
}

/// `n_j = Σ_i h_i |μ_j(x_i)|²`, cross-checked against the expansion of `τ`.
pub fn formal_codegrees(data: &FusionData, table: &CharacterTable) -> Result<Vec<f64>> {
    let m = data.rank();
    let h = data.h();
    let n: Vec<f64> = (0..m).map(|j| (0..m).map(|i| h[i] * table.value(i, j).norm_sqr()).sum()).collect();
    for i in 0..m {
        let s: Complex64 = (0..m).map(|j| table.value(i, j) / n[j]).sum();
        let want = if i == 0 { 1.0 } else { 0.0 };
        let r = (s - want).norm();
        if r > table.tol.threshold(1.0) * (m * m) as f64 {
            return Err(Error::OrthogonalityResidualExceeded { residual: r });
        }
    }
    Ok(n)
}

/// `n(H, 𝓑, μ1) = Σ h_i |μ1(x_i)|²`, snapped when possible.
pub fn order(data: &FusionData, mu1: usize, table: &CharacterTable) -> Result<Scalar> {
    let h = data.h();
    let mut s = 0.0;
    for i in 0..data.rank() {
        let v = table.value(i, mu1);
        if v.norm() <= table.tol.threshold(1.0) {
            return Err(Error::NotNormalizable { index: i });
        }
        s += h[i] * v.norm_sqr();
    }
    Ok(snap(s, &table.tol))
}

/// `λ_H = (1/n) Σ h_{i*} d_{i*} x_i`, verified idempotent and absorbing.
pub fn integral_element(data: &FusionData, table: &CharacterTable) -> Result<Element> {
    let fp = fp_character(table)?;
    let m = data.rank();
    let coords: Vec<f64> = table.idempotents[fp].iter().map(|c| c.re).collect();
    let snapped: Vec<Scalar> = coords.iter().map(|&c| snap(c, &table.tol)).collect();
    let lambda = if data.is_exact() && snapped.iter().all(Scalar::is_exact) {
        Element { coords: snapped }
    } else {
        Element::from_f64(&coords)
    };
    let sq = multiply(data, &lambda, &lambda)?;
    let mut r = sq.sub(&lambda).max_norm();
    for i in 0..m {
        let d = table.value(i, fp).re;
        let xl = multiply(data, &data.basis(i), &lambda)?;
        let diff = xl.approx().iter().zip(lambda.approx()).map(|(a, b)| (a - d * b).abs()).fold(0.0, f64::max);
        r = r.max(diff);
    }
    if r > table.tol.threshold(1.0 + data.max_norm()) * m as f64 {
        return Err(Error::IdempotentResidual { residual: r });
    }
    Ok(lambda)
}

/// FP-dimensions of an RN ring without a character table (works for non-commutative data).
///
/// `d` is the Perron vector of `S_{jk} = Σ_i N_{ij}^k`, scaled so `d_0 = 1`.
pub fn fp_dimensions(data: &FusionData, tol: &Tolerance) -> Result<Vec<f64>> {
    if !data.flags().real_non_negative {
        return Err(Error::NoPositiveColumn);
    }
    let m = data.rank();
    let mut s = DMatrix::<f64>::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                s[(j, k)] += data.nf(i, j, k);
            }
        }
    }
    let mut v = nalgebra::DVector::<f64>::from_element(m, 1.0);
    for _ in 0..100_000 {
        let w = &s * &v;
        let w = &w / w.norm();
        let delta = (&w - &v).amax();
        v = w;
        if delta < 1e-15 {
            break;
        }
    }
    let d: Vec<f64> = (0..m).map(|i| v[i] / v[0]).collect();
    let mut worst = 0.0f64;
    for i in 0..m {
        for j in 0..m {
            let lhs: f64 = (0..m).map(|k| data.nf(i, j, k) * d[k]).sum();
            worst = worst.max((lhs - d[i] * d[j]).abs() / (1.0 + d[i] * d[j]));
        }
    }
    if worst > tol.threshold(1.0 + data.max_norm()) * m as f64 || d.iter().any(|&x| x <= 0.0) {
        return Err(Error::NoPositiveColumn);
    }
    Ok(d)
}

/// `FPdim(H) = Σ h_i d_i²` for RN data.
pub fn fp_dimension_total(data: &FusionData, d: &[f64]) -> f64 {
    data.h().iter().zip(d).map(|(h, x)| h * x * x).sum()
}

/// `I(1) = Σ h_i x_i x_{i*}`.
pub fn i_one(data: &FusionData) -> Result<Element> {
    let mut acc = Element::zero(data.rank());
    for i in 0..data.rank() {
        let p = multiply(data, &data.basis(i), &data.basis(data.dual_index(i)))?;
        acc = acc.add(&p.scale(&data.orders().h[i]));
    }
    Ok(acc)
}

/// Exact confirmation that `candidate` is the Perron eigenvalue of `L_{I(1)}`.
pub fn verify_integer_fpdim(data: &FusionData, candidate: i64, tol: &Tolerance) -> Result<bool> {
    if !data.is_exact() {
        return Err(Error::InexactTensor);
    }
    let m = data.rank();
    let i1 = i_one(data)?;
    let c: Vec<BigRational> = i1.coords.iter().map(|s| s.to_rational().unwrap()).collect();
    let mut l = vec![vec![BigRational::zero(); m]; m];
    for p in 0..m {
        if c[p].is_zero() {
            continue;
        }
        for k in 0..m {
            for j in 0..m {
                let n = data.entry(p, j, k);
                if !n.is_zero() {
                    l[k][j] += &c[p] * n.to_rational().unwrap();
                }
            }
        }
    }
    let numeric = {
        let lf = DMatrix::from_fn(m, m, |k, j| l[k][j].to_f64().unwrap_or(f64::NAN));
        lf.complex_eigenvalues().iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max)
    };
    for (k, row) in l.iter_mut().enumerate() {
        row[k] -= BigRational::from_integer(candidate.into());
    }
    let singular = exact_determinant(&l).is_zero();
    Ok(singular && tol.close(numeric, candidate as f64, numeric.abs().max(1.0) * 1e3))
}
