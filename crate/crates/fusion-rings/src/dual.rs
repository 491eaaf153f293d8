//! The dual hypergroup of an abelian normalizable hypergroup.
//!
//! Basis element `a` of the dual is the character `μ_{col[a]}`; the unit is `μ1`
//! and the remaining characters follow the canonical table order.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hypergroup::{normalize, FlagSet, FusionData};
use crate::scalar::Scalar;
use crate::spectra::{character_table, snap, CharacterTable, Tolerance};

#[derive(Debug, Clone)]
pub struct DualData {
    pub base: FusionData,
    pub orders_hat: Vec<f64>,
    pub involution_hat: Vec<usize>,
    pub primal_name: String,
    pub mu1: usize,
    /// Primal table column behind each dual basis element.
    pub col: Vec<usize>,
    /// `col_values[a][i] = μ_{col[a]}(x_i)`.
    pub col_values: Vec<Vec<Complex64>>,
    /// Primal codegrees in dual order.
    pub codegrees: Vec<f64>,
    pub d: Vec<f64>,
    pub h: Vec<f64>,
    pub order: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct DualFlags {
    pub flags: FlagSet,
    pub real_non_negative: bool,
    pub rational: bool,
    pub h_integral: bool,
}

pub fn dual_hypergroup(data: &FusionData, mu1: usize, table: &CharacterTable, tol: &Tolerance) -> Result<DualData> {
    if !data.flags().abelian {
        return Err(Error::NotAbelian { i: 0, j: 0 });
    }
    let m = data.rank();
    let h = data.h();
    let inv = data.involution();
    let mut d = Vec::with_capacity(m);
    for i in 0..m {
        let v = table.value(i, mu1);
        if v.norm() <= tol.threshold(1.0) {
            return Err(Error::NotNormalizable { index: i });
        }
        if v.im.abs() > tol.threshold(v.norm()) {
            return Err(Error::NotNormalizable { index: i });
        }
        d.push(v.re);
    }
    let mut col = vec![mu1];
    col.extend((0..m).filter(|&j| j != mu1));
    let col_values: Vec<Vec<Complex64>> = col.iter().map(|&j| table.column(j)).collect();
    let codegrees: Vec<f64> = col.iter().map(|&j| table.codegrees[j]).collect();

    let scale: f64 = 1.0 + col_values.iter().flatten().fold(0.0f64, |a, v| a.max(v.norm())).powi(3);
    let mut raw = vec![0.0; m * m * m];
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                let s: Complex64 = (0..m)
                    .map(|i| col_values[a][i] * col_values[b][i] * col_values[c][inv[i]] * (h[i] / d[i]))
                    .sum::<Complex64>()
                    / codegrees[c];
                if s.im.abs() > tol.threshold(scale) * m as f64 {
                    return Err(Error::DualAxiomViolation(Box::new(Error::CrossCheckFailed(format!(
                        "dual constant ({a},{b},{c}) has imaginary part {:e}",
                        s.im
                    )))));
                }
                raw[(a * m + b) * m + c] = s.re;
            }
        }
    }
    let snapped: Vec<Scalar> = raw.iter().map(|&v| snap(v, tol)).collect();
    let entries: Vec<Scalar> = if snapped.iter().all(Scalar::is_exact) {
        snapped
    } else {
        snapped.iter().map(|s| Scalar::Float(s.to_f64())).collect()
    };

    let mut involution_hat = vec![usize::MAX; m];
    for a in 0..m {
        let conj: Vec<Complex64> = col_values[a].iter().map(|v| v.conj()).collect();
        let found = (0..m).find(|&b| {
            col_values[b].iter().zip(&conj).all(|(x, y)| (x - y).norm() <= tol.threshold(1.0 + y.norm()) * 10.0)
        });
        involution_hat[a] = found.ok_or_else(|| {
            Error::DualAxiomViolation(Box::new(Error::CrossCheckFailed(format!("no conjugate for character {a}"))))
        })?;
    }

    let base = FusionData::with_tolerance(format!("dual({})", data.name()), involution_hat.clone(), entries, tol)
        .map_err(|e| Error::DualAxiomViolation(Box::new(e)))?;
    let order: f64 = (0..m).map(|i| h[i] * d[i] * d[i]).sum();
    let orders_hat = base.h();
    for a in 0..m {
        let want = order / codegrees[a];
        if !tol.close(orders_hat[a], want, want * 1e3) {
            return Err(Error::CrossCheckFailed(format!("dual order {a}: {} vs {}", orders_hat[a], want)));
        }
    }
    let total: f64 = orders_hat.iter().sum();
    if !tol.close(total, order, order * 1e3) {
        return Err(Error::CrossCheckFailed(format!("sum of dual orders {total} vs order {order}")));
    }
    Ok(DualData {
        base,
        orders_hat,
        involution_hat,
        primal_name: data.name().to_string(),
        mu1,
        col,
        col_values,
        codegrees,
        d,
        h,
        order,
    })
}

pub fn dual_flags(dd: &DualData, tol: &Tolerance) -> DualFlags {
    let flags = *dd.base.flags();
    let h_integral = dd.orders_hat.iter().all(|&v| matches!(snap(v, tol), Scalar::Int(n) if n > 0.into()));
    DualFlags { flags, real_non_negative: flags.real_non_negative, rational: flags.rational, h_integral }
}

/// `n̂_i = n / (h_i d_i d_{i*})`, cross-checked against the dual's own table.
pub fn dual_codegrees(dd: &DualData, primal_involution: &[usize], tol: &Tolerance) -> Result<Vec<f64>> {
    let m = dd.d.len();
    let n_hat: Vec<f64> = (0..m).map(|i| dd.order / (dd.h[i] * dd.d[i] * dd.d[primal_involution[i]])).collect();
    let t = character_table(&dd.base, tol)?;
    let mut a = n_hat.clone();
    let mut b = t.codegrees.clone();
    a.sort_by(|x, y| x.partial_cmp(y).unwrap());
    b.sort_by(|x, y| x.partial_cmp(y).unwrap());
    for (x, y) in a.iter().zip(&b) {
        if !tol.close(*x, *y, x.abs() * 1e3) {
            return Err(Error::CrossCheckFailed(format!("dual codegree {x} vs {y}")));
        }
    }
    Ok(n_hat)
}

/// `Ê_i = d_i h_i Σ_a μ_a(x_{i*})/n_a · μ_a` in dual coordinates.
pub fn dual_idempotents(dd: &DualData, primal_involution: &[usize]) -> Vec<Vec<Complex64>> {
    let m = dd.d.len();
    (0..m)
        .map(|i| {
            (0..m)
                .map(|a| dd.col_values[a][primal_involution[i]] * (dd.d[i] * dd.h[i] / dd.codegrees[a]))
                .collect()
        })
        .collect()
}

/// Basis permutation `π` with `b.N[π i][π j][π k] ≈ a.N[i][j][k]`, fixing 0.
pub fn find_isomorphism(a: &FusionData, b: &FusionData, tol: &Tolerance) -> Option<Vec<usize>> {
    let m = a.rank();
    if b.rank() != m {
        return None;
    }
    let eps = tol.threshold(1.0 + a.max_norm().max(b.max_norm())) * 1e3;
    let close = |x: f64, y: f64| (x - y).abs() <= eps;
    let sig = |r: &FusionData, i: usize| {
        let inv = r.dual_index(i);
        (r.nf(i, inv, 0), r.nf(i, i, i), (0..m).map(|k| r.nf(i, inv, k)).sum::<f64>())
    };
    let cands: Vec<Vec<usize>> = (0..m)
        .map(|i| {
            let s = sig(a, i);
            (0..m)
                .filter(|&p| {
                    let t = sig(b, p);
                    (i == 0) == (p == 0) && close(s.0, t.0) && close(s.1, t.1) && close(s.2, t.2)
                })
                .collect()
        })
        .collect();
    let mut pi = vec![usize::MAX; m];
    let mut used = vec![false; m];
    fn go(
        i: usize,
        a: &FusionData,
        b: &FusionData,
        cands: &[Vec<usize>],
        pi: &mut Vec<usize>,
        used: &mut Vec<bool>,
        close: &dyn Fn(f64, f64) -> bool,
    ) -> bool {
        let m = a.rank();
        if i == m {
            return true;
        }
        for &p in &cands[i] {
            if used[p] {
                continue;
            }
            pi[i] = p;
            let ok = (0..=i).all(|j| {
                (0..=i).all(|k| {
                    let idx = [(i, j, k), (j, i, k), (j, k, i)];
                    idx.iter().all(|&(x, y, z)| close(a.nf(x, y, z), b.nf(pi[x], pi[y], pi[z])))
                })
            });
            if ok {
                used[p] = true;
                if go(i + 1, a, b, cands, pi, used, close) {
                    return true;
                }
                used[p] = false;
            }
        }
        pi[i] = usize::MAX;
        false
    }
    let full_ok = go(0, a, b, &cands, &mut pi, &mut used, &close);
    if !full_ok {
        return None;
    }
    let all = (0..m).all(|i| (0..m).all(|j| (0..m).all(|k| close(a.nf(i, j, k), b.nf(pi[i], pi[j], pi[k])))));
    all.then_some(pi)
}

/// Identifies the double dual with the normalized ring.
pub fn double_dual_check(
    data: &FusionData,
    mu1: usize,
    table: &CharacterTable,
    tol: &Tolerance,
) -> Result<Vec<usize>> {
    let dd = dual_hypergroup(data, mu1, table, tol)?;
    let t2 = character_table(&dd.base, tol)?;
    let m = data.rank();
    let aug = (0..m)
        .find(|&j| (0..m).all(|i| (t2.value(i, j) - 1.0).norm() <= tol.threshold(1.0) * 1e3))
        .ok_or(Error::NoIsomorphismFound)?;
    let dd2 = dual_hypergroup(&dd.base, aug, &t2, tol)?;
    let target = normalize(data, table, mu1)?;
    find_isomorphism(&target, &dd2.base, tol).ok_or(Error::NoIsomorphismFound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::families::{fibonacci, group_ring, ising, rep_s3};
    use crate::builders::groups::cyclic;

    fn sorted(mut v: Vec<f64>) -> Vec<f64> {
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        v
    }

    #[test]
    fn duals_of_small_rings() {
        let tol = Tolerance::default();
        let z2 = group_ring(&cyclic(2));
        let t = character_table(&z2, &tol).unwrap();
        let dd = dual_hypergroup(&z2, 0, &t, &tol).unwrap();
        assert!(find_isomorphism(&z2, &dd.base, &tol).is_some());
        assert_eq!(dual_codegrees(&dd, z2.involution(), &tol).unwrap(), vec![2.0, 2.0]);

        let s3 = rep_s3();
        let t = character_table(&s3, &tol).unwrap();
        let dd = dual_hypergroup(&s3, 0, &t, &tol).unwrap();
        let hs = sorted(dd.orders_hat.clone());
        assert!((hs[0] - 1.0).abs() < 1e-9 && (hs[1] - 2.0).abs() < 1e-9 && (hs[2] - 3.0).abs() < 1e-9);
        let f = dual_flags(&dd, &tol);
        assert!(f.real_non_negative && f.rational && f.h_integral);
        let nh = sorted(dual_codegrees(&dd, s3.involution(), &tol).unwrap());
        assert!((nh[0] - 1.5).abs() < 1e-9 && (nh[2] - 6.0).abs() < 1e-9);

        let r = ising();
        let t = character_table(&r, &tol).unwrap();
        let dd = dual_hypergroup(&r, 0, &t, &tol).unwrap();
        let hs = sorted(dd.orders_hat.clone());
        assert!((hs[2] - 2.0).abs() < 1e-9 && (hs[0] - 1.0).abs() < 1e-9);
        let nh = dual_codegrees(&dd, r.involution(), &tol).unwrap();
        assert!((nh[0] - 4.0).abs() < 1e-9 && (nh[1] - 4.0).abs() < 1e-9 && (nh[2] - 2.0).abs() < 1e-9);
    }

    #[test]
    fn fibonacci_dual_is_rn_not_h_integral() {
        let tol = Tolerance::default();
        let f = fibonacci();
        let t = character_table(&f, &tol).unwrap();
        let dd = dual_hypergroup(&f, 0, &t, &tol).unwrap();
        let fl = dual_flags(&dd, &tol);
        assert!(fl.real_non_negative && !fl.h_integral);
    }

    #[test]
    fn double_duals() {
        let tol = Tolerance::default();
        for r in [group_ring(&cyclic(2)), ising(), rep_s3()] {
            let t = character_table(&r, &tol).unwrap();
            double_dual_check(&r, 0, &t, &tol).unwrap();
        }
    }

    #[test]
    fn dual_idempotents_are_point_evaluations() {
        let tol = Tolerance::default();
        let r = ising();
        let t = character_table(&r, &tol).unwrap();
        let dd = dual_hypergroup(&r, 0, &t, &tol).unwrap();
        let e = dual_idempotents(&dd, r.involution());
        for i in 0..3 {
            for j in 0..3 {
                let v: Complex64 = (0..3).map(|a| e[i][a] * dd.col_values[a][j] / dd.d[j]).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((v - want).norm() < 1e-9);
            }
        }
    }
}
