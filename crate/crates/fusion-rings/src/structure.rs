//! Sub-hypergroups, kernels, the adjoint, universal grading, quotients and central series.
//!
//! Membership in a support is exact for exact tensors and cut at
//! [`Tolerance::support_threshold`] for floats; one cut is used throughout a run.

use std::collections::{BTreeSet, HashMap};

use num_complex::Complex64;

use crate::dual::DualData;
use crate::error::{Error, Result};
use crate::hypergroup::{multiply, Element, FusionData};
use crate::scalar::Scalar;
use crate::spectra::{fp_character, i_one, snap, CharacterTable, Tolerance};

/// A sorted index set containing 0, closed under involution and product supports.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct SubHypergroup {
    pub indices: Vec<usize>,
}

impl SubHypergroup {
    pub fn trivial() -> Self {
        SubHypergroup { indices: vec![0] }
    }

    pub fn whole(m: usize) -> Self {
        SubHypergroup { indices: (0..m).collect() }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn is_subset(&self, other: &SubHypergroup) -> bool {
        self.indices.iter().all(|&i| other.contains(i))
    }
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct GradingResult {
    pub components: Vec<Vec<usize>>,
    /// `group_table[a][b]` is the component label of `a ⋆ b`.
    pub group_table: Vec<Vec<usize>>,
    pub identity_component: usize,
    /// Invariant factors `n_1 | n_2 | …`; empty for the trivial group.
    pub iso_class: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct CentralSeries {
    pub upper: Vec<SubHypergroup>,
    pub lower: Vec<SubHypergroup>,
    pub nilpotency_class: Option<usize>,
}

/// Comparison slack for character values against dimensions.
fn value_slack(tol: &Tolerance, scale: f64) -> f64 {
    tol.threshold(scale) * 1e3
}

/// Constituents of `x_i x_j`.
pub fn product_support(data: &FusionData, i: usize, j: usize, cut: f64) -> Vec<usize> {
    (0..data.rank()).filter(|&k| data.is_constituent(i, j, k, cut)).collect()
}

/// Smallest sub-hypergroup containing `seed`.
pub fn closure(data: &FusionData, seed: &[usize], cut: f64) -> SubHypergroup {
    let mut set: BTreeSet<usize> = seed.iter().copied().collect();
    set.insert(0);
    let mut queue: Vec<usize> = set.iter().copied().collect();
    while let Some(a) = queue.pop() {
        let s = data.dual_index(a);
        if set.insert(s) {
            queue.push(s);
        }
        let members: Vec<usize> = set.iter().copied().collect();
        for b in members {
            for (x, y) in [(a, b), (b, a)] {
                for k in product_support(data, x, y, cut) {
                    if set.insert(k) {
                        queue.push(k);
                    }
                }
            }
        }
    }
    SubHypergroup { indices: set.into_iter().collect() }
}

pub fn is_sub_hypergroup(data: &FusionData, set: &[usize], cut: f64) -> bool {
    let s: BTreeSet<usize> = set.iter().copied().collect();
    s.contains(&0)
        && s.iter().all(|&a| s.contains(&data.dual_index(a)))
        && s.iter().all(|&a| s.iter().all(|&b| product_support(data, a, b, cut).iter().all(|k| s.contains(k))))
}

/// `⟨x⟩` for `x` in the positive cone.
pub fn generated_sub(data: &FusionData, x: &Element, cut: f64) -> Result<SubHypergroup> {
    let negative = x.coords.iter().any(|c| if c.is_exact() { c.signum() < 0 } else { c.to_f64() < -cut });
    let supp = x.support(cut);
    if negative || supp.is_empty() {
        return Err(Error::NotPositive);
    }
    Ok(closure(data, &supp, cut))
}

fn dims_of(table: &CharacterTable) -> Result<Vec<f64>> {
    let fp = fp_character(table)?;
    Ok((0..table.rank()).map(|i| table.value(i, fp).re).collect())
}

/// `{i : μ_j(x_i) = d_i}`.
pub fn kernel_of_character(data: &FusionData, table: &CharacterTable, j: usize) -> Result<SubHypergroup> {
    let d = dims_of(table)?;
    let tol = &table.tol;
    let indices: Vec<usize> =
        (0..data.rank()).filter(|&i| (table.value(i, j) - d[i]).norm() <= value_slack(tol, d[i])).collect();
    if !is_sub_hypergroup(data, &indices, tol.support_threshold()) {
        return Err(Error::ClosureViolation(format!("kernel of character {j}")));
    }
    Ok(SubHypergroup { indices })
}

/// `{j : μ_j(x) = FPdim(x)}`; for positive `x` checked against the intersection of constituent kernels.
pub fn kernel_of_element(data: &FusionData, table: &CharacterTable, x: &Element) -> Result<Vec<usize>> {
    let fp = fp_character(table)?;
    let tol = &table.tol;
    let m = data.rank();
    let fx = table.eval(fp, x).re;
    let direct: Vec<usize> = (0..m).filter(|&j| (table.eval(j, x) - fx).norm() <= value_slack(tol, fx.abs())).collect();
    let cut = tol.support_threshold();
    let positive = x.coords.iter().all(|c| c.to_f64() >= -cut);
    if positive {
        let supp = x.support(cut);
        let d = dims_of(table)?;
        let meet: Vec<usize> = (0..m)
            .filter(|&j| supp.iter().all(|&i| (table.value(i, j) - d[i]).norm() <= value_slack(tol, d[i])))
            .collect();
        if meet != direct {
            return Err(Error::CrossCheckFailed("kernel of a positive element".into()));
        }
    }
    Ok(direct)
}

/// `{j : |μ_j(x_i)| = d_i}`.
pub fn center_of_element(table: &CharacterTable, i: usize) -> Result<Vec<usize>> {
    let d = dims_of(table)?;
    Ok((0..table.rank()).filter(|&j| (table.value(i, j).norm() - d[i]).abs() <= value_slack(&table.tol, d[i])).collect())
}

/// Combinatorial adjoint of a sub-hypergroup: generated by the constituents of `s s*`.
pub fn adjoint_of(data: &FusionData, s: &SubHypergroup, cut: f64) -> SubHypergroup {
    let mut seed = BTreeSet::new();
    for &a in &s.indices {
        seed.extend(product_support(data, a, data.dual_index(a), cut));
    }
    closure(data, &seed.into_iter().collect::<Vec<_>>(), cut)
}

/// `H_ad = ⟨I(1)⟩`, checked against the codegree description of its support.
pub fn adjoint(data: &FusionData, table: &CharacterTable) -> Result<SubHypergroup> {
    let tol = &table.tol;
    let cut = tol.support_threshold();
    let ad = generated_sub(data, &i_one(data)?, cut)?;
    let j_ad = support(data, table, &ad)?;
    let d = dims_of(table)?;
    let n: f64 = data.h().iter().zip(&d).map(|(h, x)| h * x * x).sum();
    let by_codegree: Vec<usize> =
        (0..data.rank()).filter(|&j| (table.codegrees[j] - n).abs() <= value_slack(tol, n)).collect();
    if j_ad != by_codegree {
        return Err(Error::SupportMismatch(format!("adjoint support {j_ad:?} vs maximal codegrees {by_codegree:?}")));
    }
    Ok(ad)
}

/// Normalized integral `λ_S = (1/n(S)) Σ_{s∈S} h_s d_s x_s`, exact when possible.
pub fn sub_integral(data: &FusionData, d: &[f64], s: &SubHypergroup, tol: &Tolerance) -> Element {
    let m = data.rank();
    let h = &data.orders().h;
    let ds: Vec<Scalar> = d.iter().map(|&v| snap(v, tol)).collect();
    if data.is_exact() && ds.iter().all(Scalar::is_exact) {
        let n = s.indices.iter().fold(Scalar::zero(), |acc, &i| &acc + &(&h[i] * &(&ds[i] * &ds[i])));
        let mut out = Element::zero(m);
        for &i in &s.indices {
            out.coords[i] = &(&h[i] * &ds[i]) / &n;
        }
        out
    } else {
        let hf = data.h();
        let n: f64 = s.indices.iter().map(|&i| hf[i] * d[i] * d[i]).sum();
        let mut v = vec![0.0; m];
        for &i in &s.indices {
            v[i] = hf[i] * d[i] / n;
        }
        Element::from_f64(&v)
    }
}

/// `J_S = {j : μ_j(λ_S) = 1}`, verified by `λ_S = Σ_{j∈J_S} F_j`.
pub fn support(data: &FusionData, table: &CharacterTable, s: &SubHypergroup) -> Result<Vec<usize>> {
    let d = dims_of(table)?;
    let tol = &table.tol;
    let lambda = sub_integral(data, &d, s, tol);
    let m = data.rank();
    let js: Vec<usize> = (0..m).filter(|&j| (table.eval(j, &lambda) - 1.0).norm() <= value_slack(tol, 1.0)).collect();
    let mut sum = vec![Complex64::new(0.0, 0.0); m];
    for &j in &js {
        for (i, v) in sum.iter_mut().enumerate() {
            *v += table.idempotents[j][i];
        }
    }
    let residual = lambda.approx().iter().zip(&sum).map(|(a, b)| (b - a).norm()).fold(0.0, f64::max);
    if residual > value_slack(tol, 1.0) {
        return Err(Error::IdempotentResidual { residual });
    }
    Ok(js)
}

/// `S^⊥`, verified `(S^⊥)^⊥ = S` and, when the dual is given, closed in the dual.
pub fn perp(data: &FusionData, table: &CharacterTable, s: &SubHypergroup, dual: Option<&DualData>) -> Result<Vec<usize>> {
    let d = dims_of(table)?;
    let tol = &table.tol;
    let m = data.rank();
    let fixes = |i: usize, j: usize| (table.value(i, j) - d[i]).norm() <= value_slack(tol, d[i]);
    let p: Vec<usize> = (0..m).filter(|&j| s.indices.iter().all(|&i| fixes(i, j))).collect();
    let back: Vec<usize> = (0..m).filter(|&i| p.iter().all(|&j| fixes(i, j))).collect();
    if back != s.indices {
        return Err(Error::BiperpMismatch);
    }
    if let Some(dd) = dual {
        let pos: Vec<usize> = p.iter().map(|&j| dd.col.iter().position(|&c| c == j).expect("column present")).collect();
        if !is_sub_hypergroup(&dd.base, &pos, tol.support_threshold()) {
            return Err(Error::ClosureViolation("perp is not closed in the dual".into()));
        }
    }
    Ok(p)
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

fn components_of(parent: &mut [usize]) -> Vec<Vec<usize>> {
    let mut by_root: HashMap<usize, Vec<usize>> = HashMap::new();
    for x in 0..parent.len() {
        let r = find(parent, x);
        by_root.entry(r).or_default().push(x);
    }
    let mut comps: Vec<Vec<usize>> = by_root.into_values().collect();
    comps.sort();
    comps
}

/// Cosets `a ∼ b` iff `x_b` is a constituent of `x_a x_s` for some `s ∈ S`.
pub fn cosets(data: &FusionData, s: &SubHypergroup, cut: f64) -> Vec<Vec<usize>> {
    let m = data.rank();
    let mut parent: Vec<usize> = (0..m).collect();
    for a in 0..m {
        for &t in &s.indices {
            for b in product_support(data, a, t, cut) {
                union(&mut parent, a, b);
            }
        }
    }
    components_of(&mut parent)
}

/// Universal grading from the `H_ad`-bimodule graph, cross-checked against grouplike characters.
pub fn universal_grading(data: &FusionData, table: &CharacterTable, ad: &SubHypergroup) -> Result<GradingResult> {
    let tol = &table.tol;
    let cut = tol.support_threshold();
    let m = data.rank();
    let comps = cosets(data, ad, cut);
    let mut label = vec![0; m];
    for (c, comp) in comps.iter().enumerate() {
        for &i in comp {
            label[i] = c;
        }
    }
    let fail = |s: String| Error::GradingCrossCheckFailed(s);
    let identity = label[0];
    if comps[identity] != ad.indices {
        return Err(fail("identity component differs from the adjoint".into()));
    }
    let u = comps.len();
    let mut table_g = vec![vec![usize::MAX; u]; u];
    for a in 0..m {
        for b in 0..m {
            for k in product_support(data, a, b, cut) {
                let slot = &mut table_g[label[a]][label[b]];
                if *slot == usize::MAX {
                    *slot = label[k];
                } else if *slot != label[k] {
                    return Err(fail(format!("product of components {} and {} is not homogeneous", label[a], label[b])));
                }
            }
        }
    }
    for a in 0..u {
        if table_g[identity][a] != a || table_g[a][identity] != a {
            return Err(fail("identity component is not a unit".into()));
        }
        if !(0..u).any(|b| table_g[a][b] == identity) {
            return Err(fail(format!("component {a} has no inverse")));
        }
        for b in 0..u {
            for c in 0..u {
                if table_g[table_g[a][b]][c] != table_g[a][table_g[b][c]] {
                    return Err(fail("component law is not associative".into()));
                }
            }
        }
    }

    let d = dims_of(table)?;
    let n: f64 = data.h().iter().zip(&d).map(|(h, x)| h * x * x).sum();
    let grouplike: Vec<usize> =
        (0..m).filter(|&j| (table.codegrees[j] - n).abs() <= value_slack(tol, n)).collect();
    if grouplike.len() != u {
        return Err(fail(format!("{u} components but {} grouplike characters", grouplike.len())));
    }
    // ω_i = (μ_ψ(x_i)/d_i)_ψ must separate exactly the components
    let key = |i: usize| -> Vec<(i64, i64)> {
        grouplike
            .iter()
            .map(|&j| {
                let z = table.value(i, j) / d[i];
                ((z.re * 1e6).round() as i64, (z.im * 1e6).round() as i64)
            })
            .collect()
    };
    let mut by_key: HashMap<Vec<(i64, i64)>, usize> = HashMap::new();
    for i in 0..m {
        let c = *by_key.entry(key(i)).or_insert(label[i]);
        if c != label[i] {
            return Err(fail("character grading disagrees with the bimodule components".into()));
        }
    }
    if by_key.len() != u {
        return Err(fail("character grading has a different number of classes".into()));
    }
    let hf = data.h();
    for comp in &comps {
        let r: f64 = comp.iter().map(|&i| hf[i] * d[i] * d[i]).sum();
        if (r - n / u as f64).abs() > value_slack(tol, n) {
            return Err(fail("component regular dimensions are unequal".into()));
        }
    }
    Ok(GradingResult { components: comps, iso_class: invariant_factors(&table_g, identity), group_table: table_g, identity_component: identity })
}

/// Invariant factors of a finite abelian group given by its table.
pub fn invariant_factors(table: &[Vec<usize>], e: usize) -> Vec<u64> {
    let n = table.len();
    let power = |g: usize, k: usize| (0..k).fold(e, |acc, _| table[acc][g]);
    let count = |k: usize| (0..n).filter(|&g| power(g, k) == e).count();
    let mut factors_by_prime: Vec<Vec<u64>> = Vec::new();
    let mut rest = n;
    let mut p = 2;
    while rest > 1 {
        if rest % p == 0 {
            let mut a = 0;
            while rest % p == 0 {
                rest /= p;
                a += 1;
            }
            // s_k = log_p #{g : g^{p^k} = 1}; conjugate partition entries are s_k − s_{k−1}
            let mut s_prev = 0u32;
            let mut conj = Vec::new();
            for k in 1..=a {
                let c = count(p.pow(k)) as f64;
                let s = (c.ln() / (p as f64).ln()).round() as u32;
                conj.push(s - s_prev);
                s_prev = s;
            }
            let parts = conj.first().copied().unwrap_or(0) as usize;
            let mut lambda = vec![0u32; parts];
            for c in conj {
                for part in lambda.iter_mut().take(c as usize) {
                    *part += 1;
                }
            }
            factors_by_prime.push(lambda.iter().map(|&l| (p as u64).pow(l)).collect());
        }
        p += 1;
    }
    let len = factors_by_prime.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = vec![1u64; len];
    for f in factors_by_prime {
        // f is non-increasing; align with the largest factors last
        for (t, q) in f.iter().enumerate() {
            out[len - 1 - t] *= q;
        }
    }
    out
}

/// `H//S` in the probability normalization, with classes in coset order (the class of 0 first).
///
/// Class representatives are `x_a/d_a`; the structure constant of `[c]` in `[a][b]`
/// is the sum over `w ∈ [c]` of the coefficients of `x_w/d_w` in `(x_a/d_a)(x_b/d_b)`.
pub fn quotient(data: &FusionData, table: &CharacterTable, s: &SubHypergroup) -> Result<(FusionData, Vec<Vec<usize>>)> {
    let f = data.flags();
    if !f.abelian {
        return Err(Error::NotAbelian { i: 0, j: 0 });
    }
    if !f.real_non_negative {
        return Err(Error::NotApplicable("quotients need real non-negative data".into()));
    }
    let tol = &table.tol;
    let cut = tol.support_threshold();
    let d = dims_of(table)?;
    let classes = cosets(data, s, cut);
    let m = data.rank();
    let mut label = vec![0; m];
    for (c, cls) in classes.iter().enumerate() {
        for &i in cls {
            label[i] = c;
        }
    }
    let ds: Vec<Scalar> = d.iter().map(|&v| snap(v, tol)).collect();
    let exact = data.is_exact() && ds.iter().all(Scalar::is_exact);
    let dim = |i: usize| if exact { ds[i].clone() } else { Scalar::Float(d[i]) };
    let coeff = |a: usize, b: usize, w: usize| -> Scalar {
        let n = if exact { data.entry(a, b, w).clone() } else { Scalar::Float(data.nf(a, b, w)) };
        &(&n * &dim(w)) / &(&dim(a) * &dim(b))
    };

    let lambda = sub_integral(data, &d, s, tol);
    for (c, cls) in classes.iter().enumerate() {
        let first = multiply(data, &data.basis(cls[0]), &lambda)?.scale(&dim(cls[0]).recip().unwrap());
        for &a in &cls[1..] {
            let other = multiply(data, &data.basis(a), &lambda)?.scale(&dim(a).recip().unwrap());
            if first.sub(&other).max_norm() > value_slack(tol, 1.0) {
                return Err(Error::ClassInconsistency { class: c });
            }
        }
    }

    let r = classes.len();
    let mut entries = Vec::with_capacity(r * r * r);
    for ca in &classes {
        for cb in &classes {
            let mut reference: Option<Vec<Scalar>> = None;
            for &a in ca {
                for &b in cb {
                    let mut row = vec![Scalar::zero(); r];
                    for w in 0..m {
                        row[label[w]] = &row[label[w]] + &coeff(a, b, w);
                    }
                    match &reference {
                        None => reference = Some(row),
                        Some(first) => {
                            let gap = first.iter().zip(&row).map(|(x, y)| (x - y).to_f64().abs()).fold(0.0, f64::max);
                            if gap > value_slack(tol, 1.0) {
                                return Err(Error::ClassInconsistency { class: label[a] });
                            }
                        }
                    }
                }
            }
            entries.extend(reference.expect("classes are non-empty"));
        }
    }
    let involution: Vec<usize> = classes.iter().map(|cls| label[data.dual_index(cls[0])]).collect();
    let q = FusionData::with_tolerance(format!("{}//S", data.name()), involution, entries, tol)?;
    Ok((q, classes))
}

/// Sub-hypergroup generated by `{x : supp(x x*) ⊆ S}`, with the sandwich law asserted.
pub fn commutator_sub(data: &FusionData, s: &SubHypergroup, cut: f64) -> Result<SubHypergroup> {
    let co = co_of(data, s, cut);
    let lower = adjoint_of(data, &co, cut);
    let upper = co_of(data, &adjoint_of(data, s, cut), cut);
    if !lower.is_subset(s) || !s.is_subset(&upper) {
        return Err(Error::SandwichViolation);
    }
    Ok(co)
}

fn co_of(data: &FusionData, s: &SubHypergroup, cut: f64) -> SubHypergroup {
    let seed: Vec<usize> = (0..data.rank())
        .filter(|&i| product_support(data, i, data.dual_index(i), cut).iter().all(|&k| s.contains(k)))
        .collect();
    closure(data, &seed, cut)
}

/// Upper series by iterated adjoints and lower series by iterated commutators.
pub fn central_series(data: &FusionData, cut: f64) -> Result<CentralSeries> {
    let m = data.rank();
    let mut upper = vec![SubHypergroup::whole(m)];
    loop {
        let next = adjoint_of(data, upper.last().unwrap(), cut);
        if &next == upper.last().unwrap() {
            break;
        }
        upper.push(next);
    }
    let mut lower = vec![SubHypergroup::trivial()];
    loop {
        let next = commutator_sub(data, lower.last().unwrap(), cut)?;
        if &next == lower.last().unwrap() {
            break;
        }
        lower.push(next);
    }
    let up = upper.iter().position(|s| s.indices == [0]);
    let low = lower.iter().position(|s| s.len() == m);
    let class = match (up, low) {
        (Some(a), Some(b)) if a == b => Some(a),
        (None, None) => None,
        (a, b) => return Err(Error::SeriesDisagreement { step: a.or(b).unwrap_or(0) }),
    };
    Ok(CentralSeries { upper, lower, nilpotency_class: class })
}

pub fn nilpotency_class(data: &FusionData, cut: f64) -> Result<Option<usize>> {
    Ok(central_series(data, cut)?.nilpotency_class)
}

/// Every sub-hypergroup, sorted by size then indices.
pub fn sub_hypergroups(data: &FusionData, cut: f64) -> Vec<SubHypergroup> {
    let m = data.rank();
    let mut seen: BTreeSet<SubHypergroup> = BTreeSet::new();
    let mut queue = vec![SubHypergroup::trivial()];
    seen.insert(SubHypergroup::trivial());
    while let Some(s) = queue.pop() {
        for i in (0..m).filter(|&i| !s.contains(i)) {
            let mut seed = s.indices.clone();
            seed.push(i);
            let t = closure(data, &seed, cut);
            if seen.insert(t.clone()) {
                queue.push(t);
            }
        }
    }
    let mut out: Vec<SubHypergroup> = seen.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.indices.cmp(&b.indices)));
    out
}

/// `S ∨ T`.
pub fn join(data: &FusionData, s: &SubHypergroup, t: &SubHypergroup, cut: f64) -> SubHypergroup {
    let seed: Vec<usize> = s.indices.iter().chain(&t.indices).copied().collect();
    closure(data, &seed, cut)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::families::{fibonacci, group_ring, ising, rep_s3};
    use crate::builders::groups::{abelian, cyclic};
    use crate::spectra::character_table;

    fn cut() -> f64 {
        Tolerance::default().support_threshold()
    }

    #[test]
    fn generated_examples() {
        let r = ising();
        assert_eq!(generated_sub(&r, &r.basis(0), cut()).unwrap(), SubHypergroup::trivial());
        assert_eq!(generated_sub(&r, &r.basis(2), cut()).unwrap(), SubHypergroup::whole(3));
        assert_eq!(generated_sub(&rep_s3(), &rep_s3().basis(1), cut()).unwrap().indices, vec![0, 1]);
        let neg = Element { coords: vec![Scalar::int(-1), Scalar::zero(), Scalar::zero()] };
        assert!(matches!(generated_sub(&r, &neg, cut()), Err(Error::NotPositive)));
    }

    #[test]
    fn kernels_and_centers() {
        let tol = Tolerance::default();
        let s3 = rep_s3();
        let t = character_table(&s3, &tol).unwrap();
        let sign = (0..3).find(|&j| (t.value(2, j).re + 1.0).abs() < 1e-9).unwrap();
        assert_eq!(kernel_of_character(&s3, &t, sign).unwrap().indices, vec![0, 1]);
        assert_eq!(kernel_of_element(&s3, &t, &s3.basis(2)).unwrap(), vec![t.fp_index.unwrap()]);
        let r = ising();
        let t = character_table(&r, &tol).unwrap();
        let c = center_of_element(&t, 2).unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.contains(&t.fp_index.unwrap()));
    }

    #[test]
    fn adjoint_and_support() {
        let tol = Tolerance::default();
        let z4 = group_ring(&cyclic(4));
        let t = character_table(&z4, &tol).unwrap();
        assert_eq!(adjoint(&z4, &t).unwrap(), SubHypergroup::trivial());
        assert_eq!(support(&z4, &t, &SubHypergroup::trivial()).unwrap().len(), 4);
        let r = ising();
        let t = character_table(&r, &tol).unwrap();
        assert_eq!(adjoint(&r, &t).unwrap().indices, vec![0, 1]);
        let s3 = rep_s3();
        let t = character_table(&s3, &tol).unwrap();
        assert_eq!(adjoint(&s3, &t).unwrap(), SubHypergroup::whole(3));
        assert_eq!(support(&s3, &t, &SubHypergroup::whole(3)).unwrap(), vec![t.fp_index.unwrap()]);
    }

    #[test]
    fn grading_examples() {
        let tol = Tolerance::default();
        let r = ising();
        let t = character_table(&r, &tol).unwrap();
        let g = universal_grading(&r, &t, &adjoint(&r, &t).unwrap()).unwrap();
        assert_eq!(g.components, vec![vec![0, 1], vec![2]]);
        assert_eq!(g.iso_class, vec![2]);
        let s3 = rep_s3();
        let t = character_table(&s3, &tol).unwrap();
        let g = universal_grading(&s3, &t, &adjoint(&s3, &t).unwrap()).unwrap();
        assert!(g.iso_class.is_empty());
        let z = group_ring(&abelian(&[2, 4]));
        let t = character_table(&z, &tol).unwrap();
        let g = universal_grading(&z, &t, &adjoint(&z, &t).unwrap()).unwrap();
        assert_eq!(g.iso_class, vec![2, 4]);
    }

    #[test]
    fn perp_examples() {
        let tol = Tolerance::default();
        let r = ising();
        let t = character_table(&r, &tol).unwrap();
        assert_eq!(perp(&r, &t, &SubHypergroup::trivial(), None).unwrap().len(), 3);
        assert_eq!(perp(&r, &t, &SubHypergroup::whole(3), None).unwrap(), vec![t.fp_index.unwrap()]);
        assert_eq!(perp(&r, &t, &SubHypergroup { indices: vec![0, 1] }, None).unwrap().len(), 2);
    }

    #[test]
    fn quotient_examples() {
        let tol = Tolerance::default();
        let z4 = group_ring(&cyclic(4));
        let t = character_table(&z4, &tol).unwrap();
        let (q, classes) = quotient(&z4, &t, &SubHypergroup { indices: vec![0, 2] }).unwrap();
        assert_eq!(classes, vec![vec![0, 2], vec![1, 3]]);
        assert!(crate::dual::find_isomorphism(&q, &group_ring(&cyclic(2)), &tol).is_some());
        let s3 = rep_s3();
        let t = character_table(&s3, &tol).unwrap();
        let (q, _) = quotient(&s3, &t, &SubHypergroup { indices: vec![0, 1] }).unwrap();
        assert_eq!(*q.entry(1, 1, 0), Scalar::ratio(1, 2));
        assert_eq!(*q.entry(1, 1, 1), Scalar::ratio(1, 2));
        let (same, _) = quotient(&s3, &t, &SubHypergroup::trivial()).unwrap();
        assert_eq!(same.rank(), 3);
        let f = fibonacci();
        let t = character_table(&f, &tol).unwrap();
        assert_eq!(quotient(&f, &t, &SubHypergroup::whole(2)).unwrap().0.rank(), 1);
    }

    #[test]
    fn series_examples() {
        assert_eq!(nilpotency_class(&group_ring(&cyclic(3)), cut()).unwrap(), Some(1));
        assert_eq!(nilpotency_class(&ising(), cut()).unwrap(), Some(2));
        assert_eq!(nilpotency_class(&rep_s3(), cut()).unwrap(), None);
        let r = ising();
        assert_eq!(commutator_sub(&r, &SubHypergroup { indices: vec![0, 1] }, cut()).unwrap(), SubHypergroup::whole(3));
        let s3 = rep_s3();
        assert_eq!(commutator_sub(&s3, &SubHypergroup { indices: vec![0, 1] }, cut()).unwrap().indices, vec![0, 1]);
    }

    #[test]
    fn lattice_of_ising() {
        let subs = sub_hypergroups(&ising(), cut());
        assert_eq!(subs.len(), 3);
    }
}
