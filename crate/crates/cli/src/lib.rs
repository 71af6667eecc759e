//! Command implementations behind the `trapcover` binary. Each command takes
//! parsed inputs and returns its artifacts as strings; the binary handles
//! argument parsing, file I/O and exit codes (0 ok, 2 budget exceeded,
//! 3 input error).

use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;
use trapcover_core::alist::{parse_alist, write_alist};
use trapcover_core::graph::TannerGraph;
use trapcover_core::matrix::SparseBitMatrix;
use trapcover_core::profile::{code_profile, Girth};
use trapcover_core::CoreError;
use trapcover_cover::{
    build_cover, eliminate_trapping_sets, unwrap_convolutional, verify_elimination,
    verify_rate_theorem, CoverError, EliminateOptions, Schedule, SwapPlan,
};
use trapcover_decoders::GallagerBConfig;
use trapcover_search::{
    critical_number, instanton_search, topological_ts_scan, CriticalNumber, ScanConfig,
    SearchConfig, SearchError, TrappingSetRecord,
};
use trapcover_sim::{
    fer_points_to_csv, fit_slope, simulate_fer, ChannelSpec, DecoderSpec, SimError, SlopeDomain,
    StopRule,
};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Budget(_) => 2,
            CliError::Input(_) => 3,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::DimensionOverBudget { .. } => CliError::Budget(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<CoverError> for CliError {
    fn from(e: CoverError) -> Self {
        match e {
            CoverError::Search(SearchError::BudgetExceeded { .. }) => {
                CliError::Budget(e.to_string())
            }
            CoverError::Core(CoreError::DimensionOverBudget { .. }) => {
                CliError::Budget(e.to_string())
            }
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<SimError> for CliError {
    fn from(e: SimError) -> Self {
        match e {
            SimError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

pub fn load_code(path: &std::path::Path) -> Result<SparseBitMatrix> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(parse_alist(&text)?)
}

// ---------------------------------------------------------------- profile --

pub fn cmd_profile(code: &SparseBitMatrix) -> String {
    let p = code_profile(code);
    let girth = match p.girth {
        Girth::Cycle(g) => g.to_string(),
        Girth::Acyclic => "infinite (acyclic)".into(),
    };
    let hist = |h: &BTreeMap<usize, usize>| {
        h.iter().map(|(d, c)| format!("{d}:{c}")).collect::<Vec<_>>().join(" ")
    };
    format!(
        "n: {}\nm: {}\nrank: {}\nrate: {:.6}\ngirth: {}\ncolumn weights: {}\nrow weights: {}\n",
        p.n,
        p.m,
        p.rank,
        p.rate,
        girth,
        hist(&p.column_weights),
        hist(&p.row_weights),
    )
}

// ------------------------------------------------------------------- hunt --

#[derive(Debug, Clone)]
pub struct HuntOptions {
    /// Exhaustive instanton search up to this weight.
    pub k_max: Option<usize>,
    /// Topological scan caps (a_max, b_max).
    pub signature: Option<(usize, usize)>,
    pub decoder_iters: usize,
    /// For topological mode: certify critical numbers by restricted search
    /// within this halo radius.
    pub certify_halo: Option<usize>,
    pub pattern_budget: u64,
    pub subset_budget: u64,
}

impl Default for HuntOptions {
    fn default() -> Self {
        Self {
            k_max: None,
            signature: None,
            decoder_iters: GallagerBConfig::default().max_iters,
            certify_halo: None,
            pattern_budget: SearchConfig::default().pattern_budget,
            subset_budget: ScanConfig::default().subset_budget,
        }
    }
}

#[derive(Serialize)]
struct CensusClassJson {
    variables: Vec<u32>,
    a: usize,
    b: usize,
    critical_number: Option<usize>,
    halo: Option<usize>,
    witnesses: Vec<Vec<u32>>,
}

#[derive(Serialize)]
struct CensusJson {
    tool_version: &'static str,
    code: String,
    mode: &'static str,
    k_max: Option<usize>,
    signature: Option<(usize, usize)>,
    patterns_tested: u64,
    classes: Vec<CensusClassJson>,
}

/// Run the trapping-set hunt and return the census as JSON. With `k_max`,
/// decodes every pattern up to that weight and reports each failing class
/// with its first failing weight as the critical number. With `signature`,
/// runs the decoder-free topological scan instead.
pub fn cmd_hunt(code: &SparseBitMatrix, code_id: &str, opts: &HuntOptions) -> Result<String> {
    let graph = TannerGraph::from_matrix(code);
    let search = SearchConfig {
        decoder: GallagerBConfig { max_iters: opts.decoder_iters },
        pattern_budget: opts.pattern_budget,
    };
    let mut classes: Vec<CensusClassJson> = Vec::new();
    let mut patterns_tested = 0u64;
    let mode;
    match (opts.k_max, opts.signature) {
        (Some(k_max), _) => {
            mode = "instanton";
            let mut seen: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
            for k in 1..=k_max {
                let census = instanton_search(&graph, k, &search)?;
                patterns_tested += census.patterns_tested;
                for class in census.classes {
                    if seen.contains_key(&class.record.variables) {
                        continue;
                    }
                    seen.insert(class.record.variables.clone(), k);
                    classes.push(CensusClassJson {
                        variables: class.record.variables,
                        a: class.record.a,
                        b: class.record.b,
                        critical_number: Some(k),
                        halo: None,
                        witnesses: class.record.witness_patterns,
                    });
                }
            }
        }
        (None, Some((a_max, b_max))) => {
            mode = "topological";
            let scan = ScanConfig { subset_budget: opts.subset_budget };
            for rec in topological_ts_scan(&graph, a_max, b_max, &scan)? {
                let (critical, halo) = match opts.certify_halo {
                    Some(h) => match critical_number(&graph, &rec, h, &search)? {
                        CriticalNumber::Found { k, halo } => (Some(k), Some(halo)),
                        CriticalNumber::NotFound { halo, .. } => (None, Some(halo)),
                    },
                    None => (None, None),
                };
                classes.push(CensusClassJson {
                    variables: rec.variables,
                    a: rec.a,
                    b: rec.b,
                    critical_number: critical,
                    halo,
                    witnesses: rec.witness_patterns,
                });
            }
        }
        (None, None) => {
            return Err(CliError::Input(
                "hunt needs either --k-max or --ts-a/--ts-b".into(),
            ));
        }
    }
    let out = CensusJson {
        tool_version: TOOL_VERSION,
        code: code_id.to_string(),
        mode,
        k_max: opts.k_max,
        signature: opts.signature,
        patterns_tested,
        classes,
    };
    Ok(serde_json::to_string_pretty(&out).expect("census serializes"))
}

// -------------------------------------------------------------- eliminate --

pub struct EliminateArtifacts {
    pub cover_alist: String,
    pub plan_json: String,
    pub report_json: String,
}

/// Parse the classes of a census JSON back into records against a graph.
pub fn census_records(
    code: &SparseBitMatrix,
    census_json: &str,
) -> Result<Vec<TrappingSetRecord>> {
    let value: serde_json::Value = serde_json::from_str(census_json)
        .map_err(|e| CliError::Input(format!("census JSON: {e}")))?;
    let classes = value["classes"]
        .as_array()
        .ok_or_else(|| CliError::Input("census JSON has no classes array".into()))?;
    let graph = TannerGraph::from_matrix(code);
    let mut records = Vec::with_capacity(classes.len());
    for (i, class) in classes.iter().enumerate() {
        let vars: Vec<u32> = class["variables"]
            .as_array()
            .ok_or_else(|| CliError::Input(format!("class {i} has no variables")))?
            .iter()
            .map(|v| {
                v.as_u64()
                    .filter(|&v| (v as usize) < code.cols_count())
                    .map(|v| v as u32)
                    .ok_or_else(|| CliError::Input(format!("class {i}: bad variable {v}")))
            })
            .collect::<Result<_>>()?;
        let mut rec = TrappingSetRecord::from_variables(&graph, vars);
        rec.critical_number = class["critical_number"].as_u64().map(|k| k as usize);
        rec.halo = class["halo"].as_u64().map(|h| h as usize);
        records.push(rec);
    }
    Ok(records)
}

#[derive(Serialize)]
struct EliminateReportJson {
    tool_version: &'static str,
    seed: Option<u64>,
    copies: usize,
    targets: usize,
    swapped: usize,
    unresolved: usize,
    n_cover: usize,
    m_cover: usize,
    rank_base: usize,
    rank_cover: usize,
    rate_base: f64,
    rate_cover: f64,
    verified_signature: Option<(usize, usize)>,
    surviving: Option<usize>,
    instanton_failures_by_weight: Vec<u64>,
    warning: Option<String>,
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_eliminate(
    code: &SparseBitMatrix,
    census_json: &str,
    schedule: Schedule,
    options: &EliminateOptions,
    verify_signature: Option<(usize, usize)>,
    verify_k: usize,
    scan: &ScanConfig,
    search: &SearchConfig,
) -> Result<EliminateArtifacts> {
    let targets = census_records(code, census_json)?;
    let warning = targets
        .is_empty()
        .then(|| "census is empty; the cover is the trivial double copy".to_string());
    let (cover, plan) = eliminate_trapping_sets(code, &targets, schedule, options)?;
    let rate = verify_rate_theorem(&cover);
    let (surviving, failures) = match verify_signature {
        Some(signature) => {
            let report = verify_elimination(&cover, signature, verify_k, scan, search)?;
            let by_weight =
                report.censuses.iter().map(|c| c.failures.len() as u64).collect();
            (Some(report.surviving.len()), by_weight)
        }
        None => (None, Vec::new()),
    };
    let report = EliminateReportJson {
        tool_version: TOOL_VERSION,
        seed: match plan.schedule {
            Schedule::Random { seed } | Schedule::RelaxedFreeze { seed } => Some(seed),
            _ => None,
        },
        copies: cover.copies,
        targets: targets.len(),
        swapped: plan.swapped_edges.len(),
        unresolved: plan
            .log
            .iter()
            .filter(|e| e.action == trapcover_cover::LogAction::Unresolvable)
            .count(),
        n_cover: cover.matrix.cols_count(),
        m_cover: cover.matrix.rows_count(),
        rank_base: rate.rank_base,
        rank_cover: rate.rank_cover,
        rate_base: rate.rate_base,
        rate_cover: rate.rate_cover,
        verified_signature: verify_signature,
        surviving,
        instanton_failures_by_weight: failures,
        warning,
    };
    Ok(EliminateArtifacts {
        cover_alist: write_alist(&cover.matrix),
        plan_json: plan.to_json(),
        report_json: serde_json::to_string_pretty(&report).expect("report serializes"),
    })
}

// --------------------------------------------------------------- simulate --

pub fn cmd_simulate(
    code: &SparseBitMatrix,
    code_id: &str,
    decoder: &DecoderSpec,
    points: &[ChannelSpec],
    stop: &StopRule,
    seed: u64,
) -> Result<(String, String)> {
    if points.is_empty() {
        return Err(CliError::Input("no channel points given".into()));
    }
    let graph = TannerGraph::from_matrix(code);
    let results = simulate_fer(&graph, points, decoder, stop, seed)?;
    let csv = fer_points_to_csv(code_id, &results);
    let domain = match points[0] {
        ChannelSpec::Bsc { .. } => SlopeDomain::BscLogLog,
        ChannelSpec::Awgn { .. } => SlopeDomain::AwgnLinear,
    };
    #[derive(Serialize)]
    struct SlopeJson<'a> {
        tool_version: &'static str,
        code: &'a str,
        seed: u64,
        fit: Option<serde_json::Value>,
        fit_error: Option<String>,
    }
    let (fit, fit_error) = match fit_slope(&results, domain) {
        Ok(est) => (Some(serde_json::from_str(&est.to_json()).unwrap()), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let slope_json = serde_json::to_string_pretty(&SlopeJson {
        tool_version: TOOL_VERSION,
        code: code_id,
        seed,
        fit,
        fit_error,
    })
    .expect("slope report serializes");
    Ok((csv, slope_json))
}

// ----------------------------------------------------------------- unwrap --

/// Rebuild the swap plan from its JSON (swapped edge list) and emit the
/// `periods`-window convolutional truncation as alist.
pub fn cmd_unwrap(code: &SparseBitMatrix, plan_json: &str, periods: usize) -> Result<String> {
    if periods == 0 {
        return Err(CliError::Input("periods must be at least 1".into()));
    }
    let value: serde_json::Value = serde_json::from_str(plan_json)
        .map_err(|e| CliError::Input(format!("plan JSON: {e}")))?;
    let swapped = value["swapped"]
        .as_array()
        .ok_or_else(|| CliError::Input("plan JSON has no swapped array".into()))?;
    let graph = TannerGraph::from_matrix(code);
    let mut edges = Vec::with_capacity(swapped.len());
    for entry in swapped {
        let pair = entry
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| CliError::Input("swapped entries must be [check, var]".into()))?;
        let (c, v) = (
            pair[0].as_u64().unwrap_or(u64::MAX) as usize,
            pair[1].as_u64().unwrap_or(u64::MAX) as usize,
        );
        if c >= code.rows_count() || v >= code.cols_count() || graph.find_edge(c, v).is_none() {
            return Err(CliError::Input(format!("swapped edge ({c}, {v}) not in the code")));
        }
        edges.push((c, v));
    }
    let plan = SwapPlan::manual(code.clone(), &edges);
    // sanity: the plan must rebuild the same double cover shape
    let _ = build_cover(&plan, 2).map_err(CliError::from)?;
    Ok(write_alist(&unwrap_convolutional(&plan, periods)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta_matrix() -> SparseBitMatrix {
        let mut entries = Vec::new();
        for i in 0..3 {
            let mid = 2 + i;
            entries.push((2 * i, 0));
            entries.push((2 * i, mid));
            entries.push((2 * i + 1, mid));
            entries.push((2 * i + 1, 1));
            entries.push((6 + i, mid));
        }
        SparseBitMatrix::new(9, 5, entries).unwrap()
    }

    #[test]
    fn profile_output_fields() {
        let text = cmd_profile(&theta_matrix());
        assert!(text.contains("n: 5"));
        assert!(text.contains("girth: 8"));
    }

    #[test]
    fn hunt_and_eliminate_roundtrip() {
        let code = theta_matrix();
        let opts = HuntOptions { k_max: Some(3), ..Default::default() };
        let census = cmd_hunt(&code, "theta", &opts).unwrap();
        let parsed: serde_json::Value = serde_json::from_str(&census).unwrap();
        assert_eq!(parsed["mode"], "instanton");
        assert!(!parsed["classes"].as_array().unwrap().is_empty());

        let artifacts = cmd_eliminate(
            &code,
            &census,
            Schedule::Random { seed: 4 },
            &EliminateOptions::default(),
            Some((5, 3)),
            3,
            &ScanConfig::default(),
            &SearchConfig::default(),
        )
        .unwrap();
        let report: serde_json::Value = serde_json::from_str(&artifacts.report_json).unwrap();
        assert_eq!(report["surviving"], 0);
        assert_eq!(report["seed"], 4);
        let cover = parse_alist(&artifacts.cover_alist).unwrap();
        assert_eq!(cover.cols_count(), 10);
    }

    #[test]
    fn hunt_without_mode_is_input_error() {
        let err = cmd_hunt(&theta_matrix(), "theta", &HuntOptions::default()).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn topological_hunt_with_certification() {
        let code = theta_matrix();
        let opts = HuntOptions {
            signature: Some((5, 3)),
            certify_halo: Some(0),
            ..Default::default()
        };
        let census = cmd_hunt(&code, "theta", &opts).unwrap();
        let parsed: serde_json::Value = serde_json::from_str(&census).unwrap();
        let class = parsed["classes"]
            .as_array()
            .unwrap()
            .iter()
            .find(|c| c["a"] == 5 && c["b"] == 3)
            .expect("the theta set is found");
        assert_eq!(class["critical_number"], 3);
    }

    #[test]
    fn unwrap_from_plan_json() {
        let code = theta_matrix();
        let plan = SwapPlan::manual(code.clone(), &[(0, 0)]);
        let alist = cmd_unwrap(&code, &plan.to_json(), 2).unwrap();
        let conv = parse_alist(&alist).unwrap();
        assert_eq!((conv.rows_count(), conv.cols_count()), (18, 10));
        assert!(conv.contains(9, 0)); // B block below the diagonal
        assert!(!conv.contains(0, 0)); // swapped edge left H'
    }

    #[test]
    fn budget_maps_to_exit_code_2() {
        let code = theta_matrix();
        let opts = HuntOptions { k_max: Some(3), pattern_budget: 1, ..Default::default() };
        let err = cmd_hunt(&code, "theta", &opts).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }
}
