//! Vanishing and grouplike elements, Burnside and dual-Burnside verdicts.

use num_complex::Complex64;
use num_traits::Zero;

use crate::dual::{dual_idempotents, DualData, DualFlags};
use crate::error::{Error, Result};
use crate::hypergroup::{exact_determinant, multiply, Element, FusionData};
use crate::scalar::Scalar;
use crate::spectra::{snap, CharacterTable, Tolerance};

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Verdict {
    pub value: bool,
    pub witness: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub residual: f64,
    /// Whether the residual is expected to vanish given the verdicts.
    pub expected_zero: bool,
    /// Whether the hypotheses make the equivalence a theorem (mismatch is then fatal).
    pub asserted: bool,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct HypothesisReport {
    pub rational: bool,
    pub real_non_negative: bool,
    pub fusion_ring: bool,
    pub weakly_integral: bool,
    pub dual_h_integral: bool,
    /// "exact" for exact integer input, "assumed" otherwise.
    pub algebraic_integrality: String,
    pub obstruction: Option<String>,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct BurnsideReport {
    pub grouplike_elements: Vec<usize>,
    pub closure_violation: Option<String>,
    pub vanishing_elements: Vec<usize>,
    pub nonvanishing: Vec<usize>,
    pub is_burnside: Verdict,
    pub grouplike_characters: Vec<usize>,
    pub is_dual_burnside: Verdict,
    pub sgn_elements: Vec<(usize, i32)>,
    pub sgn_characters: Vec<(usize, i32)>,
    pub identity_checks: Vec<IdentityCheck>,
}

/// Basis elements with `x x* = N·1`; also returns a closure diagnostic.
pub fn grouplike_elements(data: &FusionData, tol: &Tolerance) -> (Vec<usize>, Option<String>) {
    let m = data.rank();
    let cut = tol.support_threshold();
    let gl: Vec<usize> = (0..m)
        .filter(|&i| {
            let s = data.dual_index(i);
            (1..m).all(|k| !data.is_constituent(i, s, k, cut))
        })
        .collect();
    let mut violation = None;
    let rn = data.flags().real_non_negative;
    if rn {
        let member = |k: usize| gl.binary_search(&k).is_ok();
        'outer: for &a in &gl {
            if !member(data.dual_index(a)) {
                violation = Some(format!("involution of {a} is not grouplike"));
                break;
            }
            for &b in &gl {
                let supp: Vec<usize> = (0..m).filter(|&k| data.is_constituent(a, b, k, cut)).collect();
                if supp.len() != 1 || !member(supp[0]) {
                    violation = Some(format!("product of {a} and {b} is not a grouplike"));
                    break 'outer;
                }
            }
        }
    }
    (gl, violation)
}

/// Basis elements killed by some character, confirmed by exact determinants when possible.
pub fn vanishing_elements(data: &FusionData, table: &CharacterTable) -> Result<Vec<usize>> {
    let m = data.rank();
    let mut out = Vec::new();
    for i in 0..m {
        let numeric = (0..m).any(|j| table.is_zero_entry(i, j));
        if let Some(l) = data.left_matrix_exact(i) {
            let exact = exact_determinant(&l).is_zero();
            if exact != numeric {
                return Err(Error::ExactNumericDisagreement { index: i });
            }
        }
        if numeric {
            out.push(i);
        }
    }
    Ok(out)
}

pub fn is_burnside(data: &FusionData, grouplikes: &[usize], vanishing: &[usize]) -> Verdict {
    let witness = (0..data.rank()).find(|i| !vanishing.contains(i) && !grouplikes.contains(i));
    Verdict { value: witness.is_none(), witness }
}

/// Characters of maximal codegree, cross-checked by `|μ_j(x_i)| = d_i`.
pub fn grouplike_characters(data: &FusionData, table: &CharacterTable, mu1: usize) -> Result<Vec<usize>> {
    let m = data.rank();
    let h = data.h();
    let d: Vec<f64> = (0..m).map(|i| table.value(i, mu1).norm()).collect();
    let n: f64 = (0..m).map(|i| h[i] * d[i] * d[i]).sum();
    let tol = &table.tol;
    let mut out = Vec::new();
    for j in 0..m {
        let by_codegree = (table.codegrees[j] - n).abs() <= tol.threshold(n) * 10.0 * m as f64;
        let by_modulus = (0..m).all(|i| (table.value(i, j).norm() - d[i]).abs() <= tol.threshold(d[i]) * 1e3);
        if by_codegree != by_modulus {
            return Err(Error::CrossCheckFailed(format!("grouplike test for character {j}")));
        }
        if by_codegree {
            out.push(j);
        }
    }
    Ok(out)
}

pub fn is_dual_burnside(data: &FusionData, table: &CharacterTable, grouplike_chars: &[usize]) -> Verdict {
    let m = data.rank();
    let witness = (0..m).find(|&j| (0..m).all(|i| !table.is_zero_entry(i, j)) && !grouplike_chars.contains(&j));
    Verdict { value: witness.is_none(), witness }
}

/// `P = ∏_i x_i/d_i`, exact when the tensor and the dimensions are rational.
pub fn product_p(data: &FusionData, d: &[f64], tol: &Tolerance) -> Result<Element> {
    let m = data.rank();
    let snapped: Vec<Scalar> = d.iter().map(|&v| snap(v, tol)).collect();
    let exact = data.is_exact() && snapped.iter().all(Scalar::is_exact);
    let mut p = data.basis(0);
    for i in 1..m {
        let xi = if exact {
            data.basis(i).scale(&snapped[i].recip().expect("nonzero dimension"))
        } else {
            let mut e = Element::from_f64(&vec![0.0; m]);
            e.coords[i] = Scalar::Float(1.0 / d[i]);
            e
        };
        p = multiply(data, &p, &xi)?;
    }
    Ok(p)
}

/// `P̂ = ∏_j μ_j` in the dual hypergroup.
pub fn product_phat(dd: &DualData) -> Result<Element> {
    let b = &dd.base;
    let mut p = b.basis(0);
    for a in 1..b.rank() {
        p = multiply(b, &p, &b.basis(a))?;
    }
    Ok(p)
}

/// Permutation induced by left multiplication with a grouplike, if its products are single basis elements.
fn induced_permutation(data: &FusionData, i: usize, cut: f64) -> Option<Vec<usize>> {
    let m = data.rank();
    let mut p = Vec::with_capacity(m);
    for k in 0..m {
        let supp: Vec<usize> = (0..m).filter(|&l| data.is_constituent(i, k, l, cut)).collect();
        if supp.len() != 1 {
            return None;
        }
        p.push(supp[0]);
    }
    let mut s = p.clone();
    s.sort_unstable();
    s.dedup();
    (s.len() == m).then_some(p)
}

pub fn signature(p: &[usize]) -> i32 {
    let mut seen = vec![false; p.len()];
    let mut sign = 1;
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// `sgn(x_i) = ∏_j μ_j(x_i/d_i)` on grouplikes, checked against the permutation signature.
pub fn sgn_elements(data: &FusionData, table: &CharacterTable, d: &[f64], grouplikes: &[usize]) -> Result<Vec<(usize, i32)>> {
    let m = data.rank();
    let cut = table.tol.support_threshold();
    let mut out = Vec::new();
    for &i in grouplikes {
        let v: Complex64 = (0..m).map(|j| table.value(i, j) / d[i]).product();
        if (v.norm() - 1.0).abs() > 1e-6 || v.im.abs() > 1e-6 {
            return Err(Error::SignMismatch { index: i });
        }
        let numeric = if v.re > 0.0 { 1 } else { -1 };
        if let Some(p) = induced_permutation(data, i, cut) {
            if signature(&p) != numeric {
                return Err(Error::SignMismatch { index: i });
            }
        }
        out.push((i, numeric));
    }
    Ok(out)
}

/// `sgn(μ_j) = μ_j(P)` on grouplike characters, checked against the permutation of the dual basis.
pub fn sgn_characters(dd: &DualData, table: &CharacterTable, grouplike_chars: &[usize]) -> Result<Vec<(usize, i32)>> {
    let m = dd.d.len();
    let cut = table.tol.support_threshold();
    let mut out = Vec::new();
    for &j in grouplike_chars {
        let v: Complex64 = (0..m).map(|i| table.value(i, j) / dd.d[i]).product();
        if (v.norm() - 1.0).abs() > 1e-6 || v.im.abs() > 1e-6 {
            return Err(Error::SignMismatch { index: j });
        }
        let numeric = if v.re > 0.0 { 1 } else { -1 };
        let a = dd.col.iter().position(|&c| c == j).expect("every column is a dual basis element");
        if let Some(p) = induced_permutation(&dd.base, a, cut) {
            if signature(&p) != numeric {
                return Err(Error::SignMismatch { index: j });
            }
        }
        out.push((j, numeric));
    }
    Ok(out)
}

fn dist(a: &Element, b: &[f64]) -> f64 {
    a.approx().iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Residuals of the Burnside identities; fatal when a theorem-backed equivalence is contradicted.
#[allow(clippy::too_many_arguments)]
pub fn identity_checks(
    data: &FusionData,
    table: &CharacterTable,
    dd: &DualData,
    dual_flags: &DualFlags,
    d: &[f64],
    grouplikes: &[usize],
    grouplike_chars: &[usize],
    adjoint: &[usize],
    burnside: bool,
    dual_burnside: bool,
) -> Result<Vec<IdentityCheck>> {
    let m = data.rank();
    let tol = &table.tol;
    let h = data.h();
    let limit = tol.threshold(1.0) * (m * m) as f64 * 10.0;
    let p = product_p(data, d, tol)?;
    let p2 = multiply(data, &p, &p)?;
    let p4 = multiply(data, &p2, &p2)?;
    let ph = product_phat(dd)?;
    let ph2 = multiply(&dd.base, &ph, &ph)?;
    let ph4 = multiply(&dd.base, &ph2, &ph2)?;

    let e_hat = dual_idempotents(dd, data.involution());
    let mut sum_e = vec![Complex64::zero(); m];
    for &i in grouplikes {
        for a in 0..m {
            sum_e[a] += e_hat[i][a];
        }
    }
    let sum_e_re: Vec<f64> = sum_e.iter().map(|c| c.re).collect();
    let mut sum_f = vec![0.0; m];
    for &j in grouplike_chars {
        for i in 0..m {
            sum_f[i] += table.idempotents[j][i].re;
        }
    }
    let n_ad: f64 = adjoint.iter().map(|&i| h[i] * d[i] * d[i]).sum();
    let mut lambda_ad = vec![0.0; m];
    for &i in adjoint {
        let s = data.dual_index(i);
        lambda_ad[i] = h[s] * d[s] / n_ad;
    }

    let rn = data.flags().real_non_negative;
    let lemma = rn || dual_flags.real_non_negative;
    let checks = vec![
        ("phat_sq_vs_grouplike_idempotents", dist(&ph2, &sum_e_re), burnside, true),
        ("p_sq_vs_grouplike_idempotents", dist(&p2, &sum_f), dual_burnside, true),
        ("p_sq_vs_adjoint_integral", dist(&p2, &lambda_ad), dual_burnside, rn),
        ("p_idempotency_gap", dist(&p4, &p2.approx()), dual_burnside, lemma),
        ("phat_idempotency_gap", dist(&ph4, &ph2.approx()), burnside, lemma),
    ];
    let mut out = Vec::new();
    for (name, residual, expected_zero, asserted) in checks {
        if asserted && (residual < limit) != expected_zero {
            return Err(Error::VerdictResidualMismatch { name: name.to_string(), residual });
        }
        out.push(IdentityCheck { name: name.to_string(), residual, expected_zero, asserted });
    }
    Ok(out)
}

pub fn burnside_hypothesis_report(
    data: &FusionData,
    dual_flags: Option<&DualFlags>,
    weakly_integral: bool,
    burnside: Option<bool>,
) -> HypothesisReport {
    let f = data.flags();
    let dual_h_integral = dual_flags.map(|x| x.h_integral).unwrap_or(false);
    let obstruction = match burnside {
        Some(false) if f.fusion_ring && f.abelian && weakly_integral && dual_h_integral => Some(
            "non-Burnside weakly-integral commutative fusion ring with h-integral dual: not the Grothendieck ring of a fusion category"
                .to_string(),
        ),
        _ => None,
    };
    HypothesisReport {
        rational: f.rational,
        real_non_negative: f.real_non_negative,
        fusion_ring: f.fusion_ring,
        weakly_integral,
        dual_h_integral,
        algebraic_integrality: if f.fusion_ring { "exact".into() } else { "assumed".into() },
        obstruction,
    }
}
