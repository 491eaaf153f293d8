//! Group-derived rings, near-group rings and the `[[1, n²], [n, m]]` family.

use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::builders::groups::{cyclic, FiniteGroup};
use crate::dual::dual_hypergroup;
use crate::error::{Error, Result};
use crate::hypergroup::FusionData;
use crate::scalar::Scalar;
use crate::spectra::{character_table, snap, Tolerance};

fn from_fn(name: &str, m: usize, involution: Vec<usize>, f: impl Fn(usize, usize, usize) -> i64) -> Result<FusionData> {
    let mut entries = Vec::with_capacity(m * m * m);
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                entries.push(Scalar::int(f(i, j, k)));
            }
        }
    }
    FusionData::new(name, involution, entries)
}

pub fn group_ring(g: &FiniteGroup) -> FusionData {
    let inv = (0..g.order).map(|a| g.inv(a)).collect();
    from_fn(&format!("Z[G{}]", g.order), g.order, inv, |i, j, k| (g.mul(i, j) == k) as i64)
        .expect("group rings are fusion rings")
}

/// `K(G, m)`: basis `G ∪ {ρ}` with `ρ² = Σ g + mρ` and `gρ = ρg = ρ`.
pub fn near_group(g: &FiniteGroup, m: i64) -> Result<FusionData> {
    if !g.is_abelian() {
        return Err(Error::InvalidOrders("near-group rings need an abelian group".into()));
    }
    if m < 0 {
        return Err(Error::InvalidOrders("multiplicity must be non-negative".into()));
    }
    let n = g.order;
    let rho = n;
    let mut inv: Vec<usize> = (0..n).map(|a| g.inv(a)).collect();
    inv.push(rho);
    from_fn(&format!("K(G{n},{m})"), n + 1, inv, |i, j, k| match (i == rho, j == rho) {
        (false, false) => (k != rho && g.mul(i, j) == k) as i64,
        (true, true) => {
            if k == rho {
                m
            } else {
                1
            }
        }
        _ => (k == rho) as i64,
    })
}

/// The `[[1, n²], [n, m]]` family: `x_g x_h = x_{gh}`, `x_g ρ_k = ρ_k`, `ρ_k ρ_l = n ρ_{kl}` with `ρ_e = (1/n) Σ x_g`.
pub fn family_ring(n: usize, g: &FiniteGroup, k: &FiniteGroup) -> Result<FusionData> {
    if n == 0 || g.order != n * n {
        return Err(Error::InvalidOrders(format!("G must have order n² = {}", n * n)));
    }
    if !g.is_abelian() {
        return Err(Error::InvalidOrders("G must be abelian".into()));
    }
    let gn = g.order;
    let rank = gn + k.order - 1;
    // ρ_k for k ≠ e sits at index gn + k - 1
    let rho = |kk: usize| gn + kk - 1;
    let mut inv: Vec<usize> = (0..gn).map(|a| g.inv(a)).collect();
    inv.extend((1..k.order).map(|kk| rho(k.inv(kk))));
    let ni = n as i64;
    from_fn(&format!("family(n={n},|K|={})", k.order), rank, inv, |a, b, c| {
        let ra = a >= gn;
        let rb = b >= gn;
        match (ra, rb) {
            (false, false) => (c < gn && g.mul(a, b) == c) as i64,
            (true, false) | (false, true) => {
                let r = if ra { a } else { b };
                (c == r) as i64
            }
            (true, true) => {
                let kl = k.mul(a - gn + 1, b - gn + 1);
                if kl == 0 {
                    (c < gn) as i64
                } else {
                    ni * (c == rho(kl)) as i64
                }
            }
        }
    })
}

/// Normalized class sums `C_i/|C_i|` with exact rational structure constants.
pub fn class_hypergroup(g: &FiniteGroup) -> FusionData {
    let classes = g.conjugacy_classes();
    let r = classes.len();
    let mut class_of = vec![0; g.order];
    for (c, cls) in classes.iter().enumerate() {
        for &x in cls {
            class_of[x] = c;
        }
    }
    let inv: Vec<usize> = (0..r).map(|c| class_of[g.inv(classes[c][0])]).collect();
    let mut entries = Vec::with_capacity(r * r * r);
    for ci in &classes {
        for cj in &classes {
            let mut count = vec![0i64; r];
            for &x in ci {
                for &y in cj {
                    count[class_of[g.mul(x, y)]] += 1;
                }
            }
            let den = (ci.len() * cj.len()) as i64;
            entries.extend(count.iter().map(|&c| Scalar::ratio(c, den)));
        }
    }
    FusionData::new(format!("class(G{})", g.order), inv, entries).expect("class algebras are hypergroups")
}

/// `K(Rep(G))`, obtained as the dual of the class hypergroup rescaled to integer fusion rules.
///
/// Basis order follows the canonical character order of the class hypergroup, trivial character first.
pub fn rep_ring(g: &FiniteGroup) -> Result<FusionData> {
    let tol = Tolerance::default();
    let cls = class_hypergroup(g);
    let t = character_table(&cls, &tol)?;
    let dd = dual_hypergroup(&cls, 0, &t, &tol)?;
    let m = dd.base.rank();
    let mut dims = Vec::with_capacity(m);
    for &hh in &dd.orders_hat {
        let d = hh.sqrt();
        match snap(d, &tol) {
            Scalar::Int(v) => dims.push(v.to_i64().unwrap()),
            _ => return Err(Error::SnapFailure { value: d }),
        }
    }
    let mut entries = Vec::with_capacity(m * m * m);
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                let v = dd.base.nf(a, b, c) * (dims[a] * dims[b]) as f64 / dims[c] as f64;
                match snap(v, &tol) {
                    Scalar::Int(n) if n >= 0.into() => entries.push(Scalar::Int(n)),
                    _ => return Err(Error::SnapFailure { value: v }),
                }
            }
        }
    }
    FusionData::new(format!("K(Rep(G{}))", g.order), dd.involution_hat.clone(), entries)
}

pub fn ising() -> FusionData {
    near_group(&cyclic(2), 0).expect("Ising").with_name("Ising")
}

pub fn fibonacci() -> FusionData {
    near_group(&cyclic(1), 1).expect("Fibonacci").with_name("Fibonacci")
}

/// `K(Rep(S3))` written out by hand: basis `1, s, t` with `s² = 1`, `st = t`, `t² = 1 + s + t`.
pub fn rep_s3() -> FusionData {
    let t = vec![
        vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
        vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]],
        vec![vec![0, 0, 1], vec![0, 0, 1], vec![1, 1, 1]],
    ];
    FusionData::from_int_table("K(Rep(S3))", &t).expect("Rep(S3)")
}

/// Rational value of an exact entry, for tests and reports.
pub fn exact_entry(data: &FusionData, i: usize, j: usize, k: usize) -> Option<BigRational> {
    data.entry(i, j, k).to_rational()
}
