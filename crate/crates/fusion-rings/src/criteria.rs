//! Categorification exclusion tests.

use num_traits::ToPrimitive;

use crate::burnside::{grouplike_characters, grouplike_elements, is_burnside, is_dual_burnside, vanishing_elements};
use crate::dual::{dual_flags, dual_hypergroup};
use crate::error::{Error, Result};
use crate::hypergroup::{exact_determinant, FusionData};
use crate::scalar::Scalar;
use crate::spectra::{character_table, fp_dimensions, snap, CharacterTable, Tolerance};
use crate::structure::{adjoint_of, nilpotency_class, SubHypergroup};

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ExclusionVerdict {
    pub test_name: String,
    pub applicable: bool,
    pub excluded: bool,
    pub certificate: String,
}

impl ExclusionVerdict {
    fn new(name: &str, applicable: bool, excluded: bool, certificate: impl Into<String>) -> Self {
        debug_assert!(applicable || !excluded);
        ExclusionVerdict { test_name: name.into(), applicable, excluded, certificate: certificate.into() }
    }
}

/// Everything the tests read, computed once per ring.
#[derive(Debug, Clone)]
pub struct Context {
    pub d: Vec<f64>,
    pub fpdim: f64,
    /// `FPdim(H)` when it snaps to an integer.
    pub fpdim_int: Option<i64>,
    /// `d_i²` when every one snaps to an integer.
    pub d_sq: Option<Vec<i64>>,
    pub grouplikes: Vec<usize>,
    pub adjoint: SubHypergroup,
    pub fpdim_adjoint: f64,
    pub nilpotency_class: Option<usize>,
    pub table: Option<CharacterTable>,
    /// `(is_burnside, witness)` for abelian data.
    pub burnside: Option<(bool, Option<usize>)>,
    pub dual_burnside: Option<(bool, Option<usize>)>,
    pub grouplike_characters: Option<usize>,
    pub dual_h_integral: bool,
}

impl Context {
    pub fn compute(data: &FusionData, tol: &Tolerance) -> Result<Context> {
        let cut = tol.support_threshold();
        let d = fp_dimensions(data, tol)?;
        let h = data.h();
        let fpdim: f64 = h.iter().zip(&d).map(|(h, x)| h * x * x).sum();
        let fpdim_int = match snap(fpdim, tol) {
            Scalar::Int(v) => v.to_i64(),
            _ => None,
        };
        let d_sq = d
            .iter()
            .map(|x| match snap(x * x, tol) {
                Scalar::Int(v) => v.to_i64(),
                _ => None,
            })
            .collect::<Option<Vec<i64>>>();
        let (grouplikes, _) = grouplike_elements(data, tol);
        let adjoint = adjoint_of(data, &SubHypergroup::whole(data.rank()), cut);
        let fpdim_adjoint = adjoint.indices.iter().map(|&i| h[i] * d[i] * d[i]).sum();
        let nil = nilpotency_class(data, cut)?;
        let mut ctx = Context {
            d,
            fpdim,
            fpdim_int,
            d_sq,
            grouplikes,
            adjoint,
            fpdim_adjoint,
            nilpotency_class: nil,
            table: None,
            burnside: None,
            dual_burnside: None,
            grouplike_characters: None,
            dual_h_integral: false,
        };
        if data.flags().abelian {
            let t = character_table(data, tol)?;
            let fp = t.fp_index.ok_or(Error::NoPositiveColumn)?;
            let van = vanishing_elements(data, &t)?;
            let b = is_burnside(data, &ctx.grouplikes, &van);
            let gc = grouplike_characters(data, &t, fp)?;
            let db = is_dual_burnside(data, &t, &gc);
            let dd = dual_hypergroup(data, fp, &t, tol)?;
            ctx.dual_h_integral = dual_flags(&dd, tol).h_integral;
            ctx.burnside = Some((b.value, b.witness));
            ctx.dual_burnside = Some((db.value, db.witness));
            ctx.grouplike_characters = Some(gc.len());
            ctx.table = Some(t);
        }
        Ok(ctx)
    }

    pub fn weakly_integral(&self) -> bool {
        self.fpdim_int.is_some()
    }
}

fn primes_of(n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut n = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Weakly-integral non-Burnside rings with h-integral dual cannot be categorified.
pub fn burnside_exclusion(data: &FusionData, ctx: &Context) -> ExclusionVerdict {
    const NAME: &str = "burnside";
    let Some((burnside, witness)) = ctx.burnside else {
        return ExclusionVerdict::new(NAME, false, false, "non-commutative ring");
    };
    let applicable = data.flags().fusion_ring && ctx.weakly_integral() && ctx.dual_h_integral;
    if !applicable {
        return ExclusionVerdict::new(NAME, false, false, "needs a weakly-integral fusion ring with h-integral dual");
    }
    match witness {
        Some(i) if !burnside => {
            let det = data.left_matrix_exact(i).map(|l| exact_determinant(&l).to_string()).unwrap_or_else(|| "?".into());
            let cert = format!("x{i} is non-vanishing but not grouplike: det L = {det}, FPdim = {}", fmt_dim(ctx.d[i]));
            ExclusionVerdict::new(NAME, true, true, cert)
        }
        _ => ExclusionVerdict::new(NAME, true, false, "Burnside"),
    }
}

fn fmt_dim(x: f64) -> String {
    if (x - x.round()).abs() < 1e-9 {
        format!("{}", x.round() as i64)
    } else {
        format!("{x:.6}")
    }
}

/// A prime of `FPdim` dividing neither the pointed part nor any `d_i²`.
pub fn modular_prime_support(data: &FusionData, ctx: &Context, modular_candidate: bool) -> Result<ExclusionVerdict> {
    const NAME: &str = "modular_prime_support";
    let (Some(n), Some(dsq)) = (ctx.fpdim_int, ctx.d_sq.as_ref()) else {
        return Err(Error::NotWeaklyIntegral);
    };
    let g = ctx.grouplikes.len() as i64;
    let bad: Vec<u64> = primes_of(n as u64)
        .into_iter()
        .map(|(p, _)| p)
        .filter(|&p| g % p as i64 != 0 && dsq.iter().all(|&x| x % p as i64 != 0))
        .collect();
    let applicable = modular_candidate && data.flags().fusion_ring;
    let cert = match bad.first() {
        Some(p) => format!("p = {p} divides FPdim = {n} but not |G(H)| = {g} nor any d_i²"),
        None => format!("every prime of FPdim = {n} divides |G(H)| = {g} or some d_i²"),
    };
    Ok(ExclusionVerdict::new(NAME, applicable, applicable && !bad.is_empty(), cert))
}

/// Square-free part test, plus the powerless-prime test for perfect rings.
pub fn squarefree_factor_test(data: &FusionData, ctx: &Context, modular_candidate: bool) -> Result<ExclusionVerdict> {
    const NAME: &str = "squarefree_factor";
    let (Some(n), Some(dsq)) = (ctx.fpdim_int, ctx.d_sq.as_ref()) else {
        return Err(Error::NotWeaklyIntegral);
    };
    let g = ctx.grouplikes.len() as u64;
    let primes = primes_of(n as u64);
    let powerless: Vec<u64> = primes.iter().filter(|&&(_, e)| e == 1).map(|&(p, _)| p).collect();
    let valid: Vec<u64> = powerless.iter().copied().filter(|&p| dsq.iter().all(|&x| x % p as i64 != 0)).collect();
    let d: u64 = valid.iter().product();
    let perfect = g == 1;
    let applicable = modular_candidate && data.flags().fusion_ring;
    let mut excluded = g % d != 0;
    let mut cert = format!("d = {d} (primes {valid:?}), |G(H)| = {g}");
    if perfect && !powerless.is_empty() {
        excluded = true;
        cert.push_str(&format!("; perfect with powerless primes {powerless:?}"));
    }
    Ok(ExclusionVerdict::new(NAME, applicable, applicable && excluded, cert))
}

/// `(∏ d_i)² / FPdim(H_ad) ∈ ℤ` for dual-Burnside rings; prime sets for nilpotent ones.
pub fn divisibility_test(_data: &FusionData, ctx: &Context, tol: &Tolerance) -> ExclusionVerdict {
    const NAME: &str = "divisibility";
    if ctx.dual_burnside.map(|x| x.0) != Some(true) {
        return ExclusionVerdict::new(NAME, false, false, "not dual-Burnside");
    }
    let prod: f64 = ctx.d.iter().product();
    let q = prod * prod / ctx.fpdim_adjoint;
    let integral = matches!(snap(q, tol), Scalar::Int(_));
    let mut cert = format!("(∏ d_i)² / FPdim(H_ad) = {}", fmt_dim(q));
    let mut excluded = !integral;
    if ctx.nilpotency_class.is_some() {
        if let (Scalar::Int(ad), Some(dsq)) = (snap(ctx.fpdim_adjoint, tol), ctx.d_sq.as_ref()) {
            let ad = ad.to_u64().unwrap_or(0);
            let lhs: Vec<u64> = primes_of(ad).into_iter().map(|(p, _)| p).collect();
            let mut rhs: Vec<u64> = dsq.iter().flat_map(|&x| primes_of(x as u64)).map(|(p, _)| p).collect();
            rhs.sort_unstable();
            rhs.dedup();
            if lhs != rhs {
                excluded = true;
            }
            cert.push_str(&format!("; primes of FPdim(H_ad) {lhs:?} vs of d_i² {rhs:?}"));
        }
    }
    ExclusionVerdict::new(NAME, true, excluded, cert)
}

/// Detects `K(G, m)`: returns `(|G|, m, ρ)`.
pub fn near_group_shape(data: &FusionData, tol: &Tolerance) -> Result<(usize, i64, usize)> {
    let m = data.rank();
    let (gl, _) = grouplike_elements(data, tol);
    if m == 2 && gl.len() == 2 && data.flags().fusion_ring {
        // K(C1, 0): ρ² = 1 makes ρ grouplike
        return Ok((1, 0, 1));
    }
    if gl.len() + 1 != m || !data.flags().fusion_ring {
        return Err(Error::NotNearGroup);
    }
    let rho = (0..m).find(|i| !gl.contains(i)).unwrap();
    let one = Scalar::one();
    for &g in &gl {
        for k in 0..m {
            let want = if k == rho { one.clone() } else { Scalar::zero() };
            if *data.entry(g, rho, k) != want || *data.entry(rho, g, k) != want {
                return Err(Error::NotNearGroup);
            }
        }
        if *data.entry(rho, rho, g) != one {
            return Err(Error::NotNearGroup);
        }
    }
    let mult = data.entry(rho, rho, rho).to_integer().and_then(|v| v.to_i64()).ok_or(Error::NotNearGroup)?;
    Ok((gl.len(), mult, rho))
}

pub fn near_group_modular_test(data: &FusionData, ctx: &Context, tol: &Tolerance, modular_candidate: bool) -> Result<ExclusionVerdict> {
    let (g, mult, _) = near_group_shape(data, tol)?;
    let excluded = (g > 1 && mult > 0) || (mult == 0 && g > 2);
    let gc = ctx.grouplike_characters.map_or("?".to_string(), |c| c.to_string());
    let cert = format!("K(G,{mult}) with |G(H)| = {g} vs |G(Ĥ)| = {gc}");
    Ok(ExclusionVerdict::new("near_group_modular", modular_candidate, modular_candidate && excluded, cert))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum FrobeniusAlpha {
    One,
    Half,
}

/// α = 1: `FPdim/d_i ∈ ℤ`; α = ½: `FPdim/d_i² ∈ ℤ`. `excluded` records a failure of the property.
pub fn frobenius_test(data: &FusionData, ctx: &Context, alpha: FrobeniusAlpha, tol: &Tolerance) -> Result<ExclusionVerdict> {
    let name = match alpha {
        FrobeniusAlpha::One => "frobenius_1",
        FrobeniusAlpha::Half => "frobenius_1/2",
    };
    let n = ctx.fpdim_int.ok_or_else(|| Error::NotApplicable(format!("FPdim {} is not an integer", ctx.fpdim)))?;
    if !data.flags().fusion_ring {
        return Err(Error::NotApplicable("needs a fusion ring".into()));
    }
    let dens: Vec<i64> = match alpha {
        FrobeniusAlpha::One => ctx
            .d
            .iter()
            .map(|&x| match snap(x, tol) {
                Scalar::Int(v) => v.to_i64(),
                _ => None,
            })
            .collect::<Option<_>>()
            .ok_or_else(|| Error::NotApplicable("dimensions are not integers".into()))?,
        FrobeniusAlpha::Half => ctx.d_sq.clone().ok_or_else(|| Error::NotApplicable("d_i² are not integers".into()))?,
    };
    let bad = dens.iter().position(|&x| n % x != 0);
    let cert = match bad {
        Some(i) => format!("{n}/{} is not an integer (index {i})", dens[i]),
        None => format!("{n} is divisible by every {}", if alpha == FrobeniusAlpha::One { "d_i" } else { "d_i²" }),
    };
    Ok(ExclusionVerdict::new(name, true, bad.is_some(), cert))
}
