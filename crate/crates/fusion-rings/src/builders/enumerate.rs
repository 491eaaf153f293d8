//! Exhaustive search for fusion rings of a given type.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hypergroup::FusionData;
use crate::scalar::Scalar;

/// Multiset of FP-dimensions, e.g. `[[1, 4], [2, 2]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeVector {
    pub classes: Vec<(u64, usize)>,
}

impl TypeVector {
    pub fn new(mut classes: Vec<(u64, usize)>) -> Result<Self> {
        classes.retain(|&(_, k)| k > 0);
        classes.sort_unstable();
        let mut merged: Vec<(u64, usize)> = Vec::new();
        for (d, k) in classes {
            match merged.last_mut() {
                Some(last) if last.0 == d => last.1 += k,
                _ => merged.push((d, k)),
            }
        }
        if merged.first().map(|c| c.0) != Some(1) || merged.iter().any(|c| c.0 == 0) {
            return Err(Error::InvalidOrders("type must contain dimension 1 and only positive dimensions".into()));
        }
        Ok(TypeVector { classes: merged })
    }

    /// From a flat list of dimensions such as `1,1,1,1,2,2`.
    pub fn from_dims(dims: &[u64]) -> Result<Self> {
        Self::new(dims.iter().map(|&d| (d, 1)).collect())
    }

    pub fn dims(&self) -> Vec<u64> {
        self.classes.iter().flat_map(|&(d, k)| std::iter::repeat(d).take(k)).collect()
    }

    pub fn fpdim(&self) -> u64 {
        self.classes.iter().map(|&(d, k)| d * d * k as u64).sum()
    }

    pub fn rank(&self) -> usize {
        self.classes.iter().map(|c| c.1).sum()
    }
}

impl std::str::FromStr for TypeVector {
    type Err = Error;
    /// Accepts `1,1,2` or `[[1,2],[2,1]]`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { line: 1, col: 1, reason: format!("bad type vector {s:?}") };
        let t = s.trim();
        if t.starts_with("[[") {
            let v: Vec<(u64, usize)> = serde_json::from_str::<Vec<[u64; 2]>>(t)
                .map_err(|_| bad())?
                .into_iter()
                .map(|[d, k]| (d, k as usize))
                .collect();
            return TypeVector::new(v);
        }
        let dims: Vec<u64> = t
            .trim_matches(|c| c == '[' || c == ']')
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|x| !x.is_empty())
            .map(|x| x.parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        TypeVector::from_dims(&dims)
    }
}

pub const DESK_BOUND: u64 = 64;
const MAX_RELABELINGS: usize = 500_000;

struct Search<'a> {
    m: usize,
    dims: &'a [i64],
    t: Vec<i64>,
    orbits: Vec<Vec<usize>>,
    bounds: Vec<i64>,
    row_sum: Vec<i64>,
    row_cap: Vec<i64>,
    checks: Vec<Vec<[usize; 3]>>,
    nodes: u64,
    budget: u64,
    found: Vec<Vec<i64>>,
}

impl<'a> Search<'a> {
    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.m + j) * self.m + k
    }

    fn assoc_ok(&self, i: usize, j: usize, k: usize) -> bool {
        let m = self.m;
        for q in 0..m {
            let mut l = 0i64;
            let mut r = 0i64;
            for p in 0..m {
                l += self.t[self.idx(i, j, p)] * self.t[self.idx(p, k, q)];
                r += self.t[self.idx(j, k, p)] * self.t[self.idx(i, p, q)];
            }
            if l != r {
                return false;
            }
        }
        true
    }

    fn set(&mut self, o: usize, v: i64) -> bool {
        let mut ok = true;
        for a in 0..self.orbits[o].len() {
            let e = self.orbits[o][a];
            let k = e % self.m;
            let row = e / self.m;
            self.t[e] = v;
            self.row_sum[row] += v * self.dims[k];
            self.row_cap[row] -= self.bounds[o] * self.dims[k];
            let i = row / self.m;
            let j = row % self.m;
            let target = self.dims[i] * self.dims[j];
            if self.row_sum[row] > target || self.row_sum[row] + self.row_cap[row] < target {
                ok = false;
            }
        }
        ok
    }

    fn unset(&mut self, o: usize, v: i64) {
        for a in 0..self.orbits[o].len() {
            let e = self.orbits[o][a];
            let k = e % self.m;
            let row = e / self.m;
            self.t[e] = -1;
            self.row_sum[row] -= v * self.dims[k];
            self.row_cap[row] += self.bounds[o] * self.dims[k];
        }
    }

    fn go(&mut self, o: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        if o == self.orbits.len() {
            self.found.push(self.t.clone());
            return Ok(());
        }
        for v in 0..=self.bounds[o] {
            let ok = self.set(o, v) && self.checks[o].iter().all(|&[i, j, k]| self.assoc_ok(i, j, k));
            if ok {
                self.go(o + 1)?;
            }
            self.unset(o, v);
        }
        Ok(())
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let n = parent[y];
        parent[y] = r;
        y = n;
    }
    r
}

/// Involutions: per dimension class, some self-dual elements followed by swapped pairs.
fn involutions(ty: &TypeVector) -> Vec<Vec<usize>> {
    let mut groups: Vec<(usize, usize)> = Vec::new();
    let mut start = 1;
    for (c, &(_, k)) in ty.classes.iter().enumerate() {
        let size = if c == 0 { k - 1 } else { k };
        groups.push((start, size));
        start += size;
    }
    let m = ty.rank();
    let mut out = vec![vec![0; m]];
    for &(s, size) in &groups {
        let mut next = Vec::new();
        for base in &out {
            let mut fixed = size;
            loop {
                let mut inv = base.clone();
                for a in 0..fixed {
                    inv[s + a] = s + a;
                }
                let mut a = fixed;
                while a + 1 < size {
                    inv[s + a] = s + a + 1;
                    inv[s + a + 1] = s + a;
                    a += 2;
                }
                next.push(inv);
                if fixed < 2 {
                    break;
                }
                fixed -= 2;
            }
        }
        out = next;
    }
    out.into_iter().filter(|inv| (0..m).all(|i| inv[inv[i]] == i)).collect()
}

fn permutations_within(groups: &[(usize, usize)], m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![(0..m).collect::<Vec<usize>>()];
    for &(s, size) in groups {
        let mut next = Vec::new();
        let mut idx: Vec<usize> = (0..size).collect();
        let mut perms = Vec::new();
        heap_permutations(&mut idx, size, &mut perms);
        for base in &out {
            for p in &perms {
                let mut q = base.clone();
                for a in 0..size {
                    q[s + a] = s + p[a];
                }
                next.push(q);
            }
        }
        out = next;
        if out.len() > MAX_RELABELINGS {
            break;
        }
    }
    out
}

fn heap_permutations(a: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(a.clone());
        return;
    }
    for i in 0..k {
        heap_permutations(a, k - 1, out);
        if k % 2 == 0 {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
}

fn relabel(t: &[i64], m: usize, pi: &[usize]) -> Vec<i64> {
    let mut out = vec![0; t.len()];
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                out[(pi[i] * m + pi[j]) * m + pi[k]] = t[(i * m + j) * m + k];
            }
        }
    }
    out
}

/// All fusion rings of the given type up to dimension- and involution-preserving relabeling.
///
/// `budget` caps the number of search nodes. Results are sorted by canonical form.
pub fn enumerate_by_type(ty: &TypeVector, budget: u64) -> Result<Vec<FusionData>> {
    if ty.fpdim() > DESK_BOUND {
        return Err(Error::InvalidOrders(format!("FPdim {} exceeds the desk bound {DESK_BOUND}", ty.fpdim())));
    }
    let m = ty.rank();
    let dims: Vec<i64> = ty.dims().iter().map(|&d| d as i64).collect();
    let mut groups: Vec<(usize, usize)> = Vec::new();
    let mut start = 1;
    for (c, &(_, k)) in ty.classes.iter().enumerate() {
        let size = if c == 0 { k - 1 } else { k };
        groups.push((start, size));
        start += size;
    }
    let class_perms = permutations_within(&groups, m);
    if class_perms.len() > MAX_RELABELINGS {
        return Err(Error::BudgetExceeded { budget: MAX_RELABELINGS as u64 });
    }

    let mut canon: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut spent = 0u64;
    for inv in involutions(ty) {
        let mut search = build_search(m, &dims, &inv, budget.saturating_sub(spent));
        search.go(0)?;
        spent += search.nodes;
        let perms: Vec<&Vec<usize>> =
            class_perms.iter().filter(|p| (0..m).all(|i| p[inv[i]] == inv[p[i]])).collect();
        for t in &search.found {
            let key = perms.iter().map(|p| relabel(t, m, p)).min().unwrap();
            canon.insert(key);
        }
    }
    let inv_of = |t: &[i64]| (0..m).map(|i| (0..m).find(|&j| t[(i * m + j) * m] == 1).unwrap()).collect::<Vec<_>>();
    let label: Vec<String> = ty.classes.iter().map(|(d, k)| format!("{d}^{k}")).collect();
    canon
        .into_iter()
        .enumerate()
        .map(|(n, t)| {
            let inv = inv_of(&t);
            let entries = t.iter().map(|&v| Scalar::int(v)).collect();
            FusionData::new(format!("type[{}]#{}", label.join(","), n + 1), inv, entries)
        })
        .collect()
}

fn build_search<'a>(m: usize, dims: &'a [i64], inv: &'a [usize], budget: u64) -> Search<'a> {
    let n = m * m * m;
    let idx = |i: usize, j: usize, k: usize| (i * m + j) * m + k;
    let mut t = vec![-1i64; n];
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                if i == 0 || j == 0 {
                    t[idx(i, j, k)] = ((if i == 0 { j } else { i }) == k) as i64;
                } else if k == 0 {
                    t[idx(i, j, k)] = (j == inv[i]) as i64;
                }
            }
        }
    }
    let mut parent: Vec<usize> = (0..n).collect();
    for i in 1..m {
        for j in 1..m {
            for k in 1..m {
                let e = idx(i, j, k);
                for f in [idx(inv[i], k, j), idx(k, inv[j], i), idx(inv[j], inv[i], inv[k])] {
                    let (a, b) = (find(&mut parent, e), find(&mut parent, f));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
    }
    let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for e in 0..n {
        if t[e] == -1 {
            let r = find(&mut parent, e);
            by_root.entry(r).or_default().push(e);
        }
    }
    let orbits: Vec<Vec<usize>> = by_root.into_values().collect();
    let bounds: Vec<i64> = orbits
        .iter()
        .map(|o| {
            o.iter()
                .map(|&e| {
                    let (i, j, k) = (e / (m * m), (e / m) % m, e % m);
                    dims[i] * dims[j] / dims[k]
                })
                .min()
                .unwrap()
        })
        .collect();
    let mut orbit_of = vec![usize::MAX; n];
    for (o, members) in orbits.iter().enumerate() {
        for &e in members {
            orbit_of[e] = o;
        }
    }
    let mut row_sum = vec![0i64; m * m];
    let mut row_cap = vec![0i64; m * m];
    for e in 0..n {
        let row = e / m;
        let k = e % m;
        if t[e] >= 0 {
            row_sum[row] += t[e] * dims[k];
        } else {
            row_cap[row] += bounds[orbit_of[e]] * dims[k];
        }
    }
    let mut checks = vec![Vec::new(); orbits.len()];
    for i in 1..m {
        for j in 1..m {
            for k in 1..m {
                let mut last = 0usize;
                let mut any = false;
                for p in 0..m {
                    for q in 0..m {
                        for e in [idx(i, j, p), idx(p, k, q), idx(j, k, p), idx(i, p, q)] {
                            if orbit_of[e] != usize::MAX {
                                last = last.max(orbit_of[e]);
                                any = true;
                            }
                        }
                    }
                }
                if any {
                    checks[last].push([i, j, k]);
                }
            }
        }
    }
    Search { m, dims, t, orbits, bounds, row_sum, row_cap, checks, nodes: 0, budget, found: Vec::new() }
}
