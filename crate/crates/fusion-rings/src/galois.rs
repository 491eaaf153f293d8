//! Numeric Galois orbits of characters and weak integrality.

use num_complex::Complex64;

use crate::burnside::grouplike_elements;
use crate::error::{Error, Result};
use crate::hypergroup::FusionData;
use crate::scalar::Scalar;
use crate::spectra::{fp_character, snap, verify_integer_fpdim, CharacterTable, Tolerance};

/// Cap on candidate subsets examined by the orbit search.
pub const MAX_STATES: usize = 1 << 12;

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct OrbitPartition {
    pub orbits: Vec<Vec<usize>>,
    pub rational_mask: Vec<bool>,
    /// Largest distance of an orbit-polynomial coefficient from its snapped value, per orbit.
    pub certificates: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WeakIntegrality {
    Integral,
    WeaklyIntegral,
    WeaklyRational,
    Irrational,
}

impl WeakIntegrality {
    pub fn is_weakly_integral(self) -> bool {
        matches!(self, WeakIntegrality::Integral | WeakIntegrality::WeaklyIntegral)
    }

    pub fn is_rational(self) -> bool {
        self != WeakIntegrality::Irrational
    }
}

/// Coefficients of `∏ (t − r)`, highest degree first.
fn poly_from_roots(roots: &[Complex64]) -> Vec<Complex64> {
    let mut c = vec![Complex64::new(1.0, 0.0)];
    for r in roots {
        let mut next = vec![Complex64::new(0.0, 0.0); c.len() + 1];
        for (k, a) in c.iter().enumerate() {
            next[k] += a;
            next[k + 1] -= a * r;
        }
        c = next;
    }
    c
}

/// Distance of `z` from the nearest admissible value, or `None` when it is not near one.
fn rational_gap(z: Complex64, integers: bool, tol: &Tolerance) -> Option<f64> {
    let slack = tol.threshold(z.norm()) * 1e3;
    if z.im.abs() > slack {
        return None;
    }
    // every f64 beyond 2^53 is an integer; nothing finer can be certified
    if z.re.abs() >= 9.0e15 {
        return Some(z.im.abs());
    }
    let s = snap(z.re, tol);
    let ok = if integers { matches!(s, Scalar::Int(_)) } else { s.is_exact() };
    let gap = (z.re - s.to_f64()).abs();
    (ok && gap <= slack).then_some(gap.max(z.im.abs()))
}

/// Certificate for a candidate orbit: the worst coefficient gap over all basis elements.
fn certify(table: &CharacterTable, set: &[usize], integers: bool) -> Option<f64> {
    let mut worst = 0.0f64;
    for i in 0..table.rank() {
        let roots: Vec<Complex64> = set.iter().map(|&j| table.value(i, j)).collect();
        for c in poly_from_roots(&roots).into_iter().skip(1) {
            worst = worst.max(rational_gap(c, integers, &table.tol)?);
        }
    }
    Some(worst)
}

fn combinations(pool: &[usize], k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(pool: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for p in start..pool.len() {
            cur.push(pool[p]);
            if rec(pool, k, p + 1, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(pool, k, 0, &mut Vec::new(), f)
}

/// Multiplicative order of a root of unity, up to `bound`.
fn root_order(z: Complex64, bound: usize, slack: f64) -> Option<usize> {
    if (z.norm() - 1.0).abs() > slack {
        return None;
    }
    (1..=bound).find(|&n| (z.powu(n as u32) - 1.0).norm() <= slack * n as f64)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Columns that can share an orbit with `j0`: same zero pattern and equal rational values.
///
/// On grouplike rows every `σ` acts as `z ↦ z^ℓ`; when each such `ℓ` matches exactly one
/// column, those columns are returned as the predicted orbit.
fn candidates(
    table: &CharacterTable,
    j0: usize,
    pool: &[usize],
    rational: &[Vec<bool>],
    grouplike: &[usize],
) -> (Vec<usize>, Option<Vec<usize>>) {
    let m = table.rank();
    let slack = table.tol.threshold(1.0) * 1e3;
    let same_shape = |j: usize| {
        (0..m).all(|i| {
            table.is_zero_entry(i, j) == table.is_zero_entry(i, j0)
                && (!rational[i][j0] || (rational[i][j] && (table.value(i, j) - table.value(i, j0)).norm() <= slack))
        })
    };
    let pool: Vec<usize> = pool.iter().copied().filter(|&j| j == j0 || same_shape(j)).collect();
    let orders: Option<Vec<usize>> = grouplike.iter().map(|&g| root_order(table.value(g, j0), m, slack)).collect();
    let Some(orders) = orders.filter(|o| !o.is_empty()) else {
        return (pool, None);
    };
    let n = orders.iter().fold(1, |a, &b| a / gcd(a, b) * b);
    let mut orbit = Vec::new();
    for l in (1..=n).filter(|&l| gcd(l, n) == 1) {
        let hits: Vec<usize> = pool
            .iter()
            .copied()
            .filter(|&j| grouplike.iter().all(|&g| (table.value(g, j) - table.value(g, j0).powu(l as u32)).norm() <= slack * l as f64))
            .collect();
        if hits.len() != 1 {
            return (pool, None);
        }
        orbit.extend(hits);
    }
    orbit.sort_unstable();
    orbit.dedup();
    (pool, Some(orbit))
}

/// Finest partition whose orbit polynomials have rational coefficients.
pub fn galois_orbits(data: &FusionData, table: &CharacterTable) -> Result<OrbitPartition> {
    let m = table.rank();
    let integers = data.flags().fusion_ring;
    let rational_mask: Vec<bool> = (0..m).map(|j| certify(table, &[j], integers).is_some()).collect();
    let rational_entry: Vec<Vec<bool>> =
        (0..m).map(|i| (0..m).map(|j| rational_gap(table.value(i, j), integers, &table.tol).is_some()).collect()).collect();
    let grouplike: Vec<usize> = if integers { grouplike_elements(data, &table.tol).0 } else { Vec::new() };
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut certificates = Vec::new();
    for j in (0..m).filter(|&j| rational_mask[j]) {
        orbits.push(vec![j]);
        certificates.push(certify(table, &[j], integers).unwrap());
    }
    let mut rest: Vec<usize> = (0..m).filter(|&j| !rational_mask[j]).collect();
    let mut states = 0usize;
    while let Some(&j0) = rest.first() {
        let (shape, predicted) = candidates(table, j0, &rest, &rational_entry, &grouplike);
        let mut found: Option<(Vec<usize>, f64)> = None;
        if let Some(orbit) = predicted {
            states += 1;
            found = certify(table, &orbit, integers).map(|c| (orbit, c));
        }
        if found.is_none() {
            let pool: Vec<usize> = shape.iter().copied().filter(|&j| j != j0).collect();
            for k in 1..=pool.len() {
                let mut over = false;
                let hit = combinations(&pool, k, &mut |c| {
                    states += 1;
                    if states > MAX_STATES {
                        over = true;
                        return true;
                    }
                    let mut set = vec![j0];
                    set.extend_from_slice(c);
                    if let Some(cert) = certify(table, &set, integers) {
                        set.sort_unstable();
                        found = Some((set, cert));
                        return true;
                    }
                    false
                });
                if over {
                    return Err(Error::NoValidPartition);
                }
                if hit {
                    break;
                }
            }
        }
        let (set, cert) = found.ok_or(Error::NoValidPartition)?;
        rest.retain(|j| !set.contains(j));
        orbits.push(set);
        certificates.push(cert);
    }
    let mut order: Vec<usize> = (0..orbits.len()).collect();
    order.sort_by_key(|&o| orbits[o][0]);
    Ok(OrbitPartition {
        orbits: order.iter().map(|&o| orbits[o].clone()).collect(),
        certificates: order.iter().map(|&o| certificates[o]).collect(),
        rational_mask,
    })
}

/// Codegrees have rational symmetric functions on each orbit; dual orders are constant on orbits.
pub fn check_codegree_conjugation(
    partition: &OrbitPartition,
    codegrees: &[f64],
    dual_h: Option<&[f64]>,
    tol: &Tolerance,
) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    for (o, orbit) in partition.orbits.iter().enumerate() {
        let roots: Vec<Complex64> = orbit.iter().map(|&j| Complex64::new(codegrees[j], 0.0)).collect();
        let mut worst = 0.0f64;
        for c in poly_from_roots(&roots).into_iter().skip(1) {
            worst = worst.max(rational_gap(c, false, tol).ok_or(Error::ConjugationViolation { orbit: o })?);
        }
        if let Some(hh) = dual_h {
            let first = hh[orbit[0]];
            if orbit.iter().any(|&j| (hh[j] - first).abs() > tol.threshold(first) * 1e3) {
                return Err(Error::ConjugationViolation { orbit: o });
            }
        }
        out.push(worst);
    }
    Ok(out)
}

/// Classifies `n(H)`; `dual_burnside` enables the rationality theorem check.
pub fn weak_integrality(data: &FusionData, table: &CharacterTable, dual_burnside: Option<bool>) -> Result<WeakIntegrality> {
    let tol = &table.tol;
    let fp = fp_character(table)?;
    let h = data.h();
    let d: Vec<f64> = (0..data.rank()).map(|i| table.value(i, fp).re).collect();
    let n: f64 = h.iter().zip(&d).map(|(h, x)| h * x * x).sum();
    let verdict = match snap(n, tol) {
        Scalar::Int(v) => {
            if data.is_exact() {
                let v = i64::try_from(v).map_err(|_| Error::SnapFailure { value: n })?;
                if !verify_integer_fpdim(data, v, tol)? {
                    return Err(Error::CrossCheckFailed(format!("exact FP-dimension {v}")));
                }
            }
            if d.iter().all(|&x| matches!(snap(x, tol), Scalar::Int(_))) {
                WeakIntegrality::Integral
            } else {
                WeakIntegrality::WeaklyIntegral
            }
        }
        Scalar::Rational(_) => WeakIntegrality::WeaklyRational,
        Scalar::Float(_) => WeakIntegrality::Irrational,
    };
    let f = data.flags();
    if dual_burnside == Some(true) && f.rational && f.real_non_negative && verdict == WeakIntegrality::Irrational {
        return Err(Error::TheoremViolation(format!("rational RN dual-Burnside ring with FP-dimension {n}")));
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::families::{fibonacci, ising, rep_s3};
    use crate::spectra::character_table;

    #[test]
    fn orbit_examples() {
        let tol = Tolerance::default();
        let s3 = rep_s3();
        let t = character_table(&s3, &tol).unwrap();
        assert_eq!(galois_orbits(&s3, &t).unwrap().orbits.len(), 3);
        let f = fibonacci();
        let t = character_table(&f, &tol).unwrap();
        let p = galois_orbits(&f, &t).unwrap();
        assert_eq!(p.orbits, vec![vec![0, 1]]);
        let r = ising();
        let t = character_table(&r, &tol).unwrap();
        let p = galois_orbits(&r, &t).unwrap();
        assert_eq!(p.orbits.len(), 2);
        let pair = p.orbits.iter().find(|o| o.len() == 2).unwrap();
        assert!(pair.contains(&t.fp_index.unwrap()));
    }

    #[test]
    fn codegree_conjugation() {
        let tol = Tolerance::default();
        let f = fibonacci();
        let t = character_table(&f, &tol).unwrap();
        let p = galois_orbits(&f, &t).unwrap();
        let prod: f64 = t.codegrees.iter().product();
        assert!((prod - 5.0).abs() < 1e-9);
        check_codegree_conjugation(&p, &t.codegrees, None, &tol).unwrap();
    }

    #[test]
    fn integrality_examples() {
        let tol = Tolerance::default();
        for (r, v) in [
            (rep_s3(), WeakIntegrality::Integral),
            (ising(), WeakIntegrality::WeaklyIntegral),
            (fibonacci(), WeakIntegrality::Irrational),
        ] {
            let t = character_table(&r, &tol).unwrap();
            assert_eq!(weak_integrality(&r, &t, None).unwrap(), v);
        }
    }
}
