//! The full analysis pipeline and its report.

use num_complex::Complex64;
use serde::Serialize;

use crate::burnside::{
    burnside_hypothesis_report, grouplike_characters, grouplike_elements, identity_checks, is_burnside,
    is_dual_burnside, sgn_characters, sgn_elements, vanishing_elements, BurnsideReport, HypothesisReport,
};
use crate::criteria::{
    burnside_exclusion, divisibility_test, frobenius_test, modular_prime_support, near_group_modular_test,
    squarefree_factor_test, Context, ExclusionVerdict, FrobeniusAlpha,
};
use crate::dual::{double_dual_check, dual_flags, dual_hypergroup, DualFlags};
use crate::error::{Error, Result};
use crate::galois::{check_codegree_conjugation, galois_orbits, weak_integrality, OrbitPartition, WeakIntegrality};
use crate::hypergroup::{FlagSet, FusionData};
use crate::scalar::ScalarKind;
use crate::spectra::{character_table_seeded, fp_dimensions, TableResiduals, Tolerance, DEFAULT_SEED};
use crate::structure::{
    adjoint, adjoint_of, central_series, kernel_of_character, universal_grading, CentralSeries, GradingResult,
    SubHypergroup,
};

/// Decimal places kept for floats in reports.
pub const REPORT_DIGITS: i32 = 9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AnalyzeOptions {
    pub tol: Tolerance,
    pub seed: u64,
    pub exact_only: bool,
    pub modular_candidate: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { tol: Tolerance::default(), seed: DEFAULT_SEED, exact_only: false, modular_candidate: false }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RingInfo {
    pub name: String,
    pub rank: usize,
    pub kind: String,
    pub involution: Vec<usize>,
    pub h: Vec<String>,
    pub flags: FlagSet,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralInfo {
    /// `[re, im]` per entry, row `i` column `j` holding `μ_j(x_i)`.
    pub character_table: Vec<Vec<[f64; 2]>>,
    pub fp_index: Option<usize>,
    pub codegrees: Vec<f64>,
    pub residuals: TableResiduals,
    pub attempts: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DualInfo {
    pub flags: DualFlags,
    pub orders_hat: Vec<f64>,
    pub double_dual: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GaloisInfo {
    pub orbits: OrbitPartition,
    pub codegree_certificates: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub tool: String,
    pub version: String,
    pub options: AnalyzeOptions,
    pub ring: RingInfo,
    pub fp_dimensions: Option<Vec<f64>>,
    pub fp_dimension: Option<f64>,
    pub spectra: Option<SpectralInfo>,
    pub dual: Option<DualInfo>,
    pub burnside: Option<BurnsideReport>,
    pub hypotheses: HypothesisReport,
    pub adjoint: Option<SubHypergroup>,
    pub grading: Option<GradingResult>,
    pub central_series: Option<CentralSeries>,
    pub kernels: Vec<SubHypergroup>,
    pub galois: Option<GaloisInfo>,
    pub weak_integrality: Option<WeakIntegrality>,
    pub criteria: Vec<ExclusionVerdict>,
    /// Stages skipped because their preconditions do not hold.
    pub notes: Vec<String>,
}

fn round(x: f64) -> f64 {
    let s = 10f64.powi(REPORT_DIGITS);
    let r = (x * s).round() / s;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn round_all(v: &[f64]) -> Vec<f64> {
    v.iter().map(|&x| round(x)).collect()
}

fn round_c(z: Complex64) -> [f64; 2] {
    [round(z.re), round(z.im)]
}

/// Runs every stage that applies; fatal module errors abort the run.
pub fn analyze(data: &FusionData, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    if opts.exact_only && !data.is_exact() {
        return Err(Error::InexactTensor);
    }
    let tol = &opts.tol;
    let cut = tol.support_threshold();
    let f = *data.flags();
    let m = data.rank();
    let mut notes = Vec::new();
    let ring = RingInfo {
        name: data.name().to_string(),
        rank: m,
        kind: match data.kind() {
            ScalarKind::Integer => "integer",
            ScalarKind::Rational => "rational",
            ScalarKind::Float => "float",
        }
        .to_string(),
        involution: data.involution().to_vec(),
        h: data.orders().h.iter().map(|s| s.to_string()).collect(),
        flags: f,
    };

    let d = if f.real_non_negative { Some(fp_dimensions(data, tol)?) } else { None };
    let fpdim = d.as_ref().map(|d| data.h().iter().zip(d).map(|(h, x)| h * x * x).sum::<f64>());
    let central = if f.real_non_negative { Some(central_series(data, cut)?) } else { None };

    let mut report = AnalysisReport {
        tool: "fusion-rings".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        options: *opts,
        ring,
        fp_dimensions: d.as_deref().map(round_all),
        fp_dimension: fpdim.map(round),
        spectra: None,
        dual: None,
        burnside: None,
        hypotheses: burnside_hypothesis_report(data, None, false, None),
        adjoint: if f.real_non_negative { Some(adjoint_of(data, &SubHypergroup::whole(m), cut)) } else { None },
        grading: None,
        central_series: central,
        kernels: Vec::new(),
        galois: None,
        weak_integrality: None,
        criteria: Vec::new(),
        notes: Vec::new(),
    };

    if !f.abelian {
        notes.push("non-commutative: character theory, dual, Burnside and Galois stages skipped".into());
    } else {
        let table = character_table_seeded(data, tol, opts.seed)?;
        report.spectra = Some(SpectralInfo {
            character_table: (0..m).map(|i| (0..m).map(|j| round_c(table.value(i, j))).collect()).collect(),
            fp_index: table.fp_index,
            codegrees: round_all(&table.codegrees),
            residuals: table.residuals,
            attempts: table.attempts,
        });
        match table.fp_index {
            None => notes.push("no positive character: dual and Burnside stages skipped".into()),
            Some(fp) => {
                let dims = table.fp_dims().expect("fp column present");
                let dd = dual_hypergroup(data, fp, &table, tol)?;
                let df = dual_flags(&dd, tol);
                let dbl = double_dual_check(data, fp, &table, tol)?;
                report.dual = Some(DualInfo { flags: df, orders_hat: round_all(&dd.orders_hat), double_dual: dbl });

                let (gl, closure_violation) = grouplike_elements(data, tol);
                let van = vanishing_elements(data, &table)?;
                let b = is_burnside(data, &gl, &van);
                let gc = grouplike_characters(data, &table, fp)?;
                let db = is_dual_burnside(data, &table, &gc);
                let sgn_e = sgn_elements(data, &table, &dims, &gl)?;
                let sgn_c = sgn_characters(&dd, &table, &gc)?;
                let ad = if f.real_non_negative { adjoint(data, &table)? } else { adjoint_of(data, &SubHypergroup::whole(m), cut) };
                let checks = identity_checks(data, &table, &dd, &df, &dims, &gl, &gc, &ad.indices, b.value, db.value)?;
                let nonvanishing = (0..m).filter(|i| !van.contains(i)).collect();
                report.burnside = Some(BurnsideReport {
                    grouplike_elements: gl,
                    closure_violation,
                    vanishing_elements: van,
                    nonvanishing,
                    is_burnside: b.clone(),
                    grouplike_characters: gc,
                    is_dual_burnside: db.clone(),
                    sgn_elements: sgn_e,
                    sgn_characters: sgn_c,
                    identity_checks: checks.into_iter().map(|mut c| {
                        c.residual = round(c.residual);
                        c
                    }).collect(),
                });

                if f.real_non_negative {
                    report.grading = Some(universal_grading(data, &table, &ad)?);
                    report.kernels = (0..m).map(|j| kernel_of_character(data, &table, j)).collect::<Result<_>>()?;
                    let wi = weak_integrality(data, &table, Some(db.value))?;
                    report.weak_integrality = Some(wi);
                    report.hypotheses = burnside_hypothesis_report(data, Some(&df), wi.is_weakly_integral(), Some(b.value));
                } else {
                    notes.push("not real non-negative: grading, kernels and integrality skipped".into());
                }
                report.adjoint = Some(ad);

                if f.rational {
                    let orbits = galois_orbits(data, &table)?;
                    let dual_h = df.h_integral.then_some(dd.orders_hat.as_slice());
                    // dual orders are indexed by dual basis; reorder to table columns
                    let by_col: Option<Vec<f64>> = dual_h.map(|hh| {
                        let mut v = vec![0.0; m];
                        for (a, &c) in dd.col.iter().enumerate() {
                            v[c] = hh[a];
                        }
                        v
                    });
                    let certs = check_codegree_conjugation(&orbits, &table.codegrees, by_col.as_deref(), tol)?;
                    report.galois = Some(GaloisInfo {
                        orbits: OrbitPartition { certificates: round_all(&orbits.certificates), ..orbits },
                        codegree_certificates: round_all(&certs),
                    });
                } else {
                    notes.push("not rational: Galois orbits skipped".into());
                }
            }
        }
    }

    if f.real_non_negative {
        let ctx = Context::compute(data, tol)?;
        let mut v = vec![burnside_exclusion(data, &ctx)];
        for r in [
            modular_prime_support(data, &ctx, opts.modular_candidate),
            squarefree_factor_test(data, &ctx, opts.modular_candidate),
        ] {
            match r {
                Ok(x) => v.push(x),
                Err(Error::NotWeaklyIntegral) => {}
                Err(e) => return Err(e),
            }
        }
        v.push(divisibility_test(data, &ctx, tol));
        match near_group_modular_test(data, &ctx, tol, opts.modular_candidate) {
            Ok(x) => v.push(x),
            Err(Error::NotNearGroup) => {}
            Err(e) => return Err(e),
        }
        for alpha in [FrobeniusAlpha::One, FrobeniusAlpha::Half] {
            match frobenius_test(data, &ctx, alpha, tol) {
                Ok(x) => v.push(x),
                Err(Error::NotApplicable(_)) => {}
                Err(e) => return Err(e),
            }
        }
        report.criteria = v;
    }
    report.notes = notes;
    Ok(report)
}

impl AnalysisReport {
    /// Structured form; byte-identical for identical inputs and options.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Names of the exclusion tests that fired; Frobenius property failures are not exclusions.
    pub fn exclusions(&self) -> Vec<&str> {
        self.criteria
            .iter()
            .filter(|c| c.excluded && !c.test_name.starts_with("frobenius"))
            .map(|c| c.test_name.as_str())
            .collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("ring            {} (rank {}, {})", self.ring.name, self.ring.rank, self.ring.kind));
        let fl = &self.ring.flags;
        line(format!(
            "flags           abelian={} rational={} rn={} fusion_ring={} normalized={}",
            fl.abelian, fl.rational, fl.real_non_negative, fl.fusion_ring, fl.normalized
        ));
        if let (Some(d), Some(n)) = (&self.fp_dimensions, self.fp_dimension) {
            line(format!("fp dimensions   {d:?}  FPdim = {n}"));
        }
        if let Some(s) = &self.spectra {
            line(format!("codegrees       {:?}", s.codegrees));
        }
        if let Some(b) = &self.burnside {
            line(format!("grouplikes      {:?}", b.grouplike_elements));
            line(format!("vanishing       {:?}", b.vanishing_elements));
            line(format!("burnside        {}{}", b.is_burnside.value, witness(b.is_burnside.witness)));
            line(format!("dual-burnside   {}{}", b.is_dual_burnside.value, witness(b.is_dual_burnside.witness)));
        }
        if let Some(a) = &self.adjoint {
            line(format!("adjoint         {:?}", a.indices));
        }
        if let Some(g) = &self.grading {
            line(format!("grading group   {}", group_name(&g.iso_class)));
        }
        if let Some(c) = &self.central_series {
            let cls = c.nilpotency_class.map_or("not nilpotent".to_string(), |n| format!("class {n}"));
            line(format!("nilpotency      {cls}"));
        }
        if let Some(w) = self.weak_integrality {
            line(format!("integrality     {}", serde_json::to_value(w).unwrap().as_str().unwrap()));
        }
        if let Some(g) = &self.galois {
            line(format!("galois orbits   {:?}", g.orbits.orbits));
        }
        if let Some(o) = &self.hypotheses.obstruction {
            line(format!("obstruction     {o}"));
        }
        for c in &self.criteria {
            let property = c.test_name.starts_with("frobenius");
            let v = match (c.applicable, c.excluded, property) {
                (false, _, _) => "n/a",
                (true, true, true) => "fails",
                (true, false, true) => "holds",
                (true, true, false) => "EXCLUDED",
                (true, false, false) => "pass",
            };
            line(format!("criterion       {:<22} {v:<9} {}", c.test_name, c.certificate));
        }
        for n in &self.notes {
            line(format!("note            {n}"));
        }
        out
    }
}

fn witness(w: Option<usize>) -> String {
    w.map_or(String::new(), |i| format!(" (witness {i})"))
}

pub fn group_name(factors: &[u64]) -> String {
    if factors.is_empty() {
        "trivial".into()
    } else {
        factors.iter().map(|n| format!("Z{n}")).collect::<Vec<_>>().join(" x ")
    }
}
