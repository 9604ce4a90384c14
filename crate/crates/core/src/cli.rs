//! Command-line front end: instance files, dispatch, result records.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::group_core::{closure, FiniteGroup, MonomialMatrix, DEFAULT_GROUP_CAP};
use crate::lattice_mld::{IdealFactor, MldValue, MonomialRIdeal};
use crate::mld_engine::{
    acc_sample, consistency_sweep, mld_hyperquot, mld_reid_tai, verify_consistency, verify_pia, HyperquotOptions,
    HyperquotientInstance, Verdict,
};
use crate::poly_engine::cache;
use crate::rational::{format_rational, lcm_u64, parse_rational};
use crate::twist::Polynomial;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub dimension: usize,
    #[serde(default)]
    pub ambient_order: Option<u64>,
    pub group: GroupSpec,
    #[serde(default)]
    pub equations: Vec<String>,
    #[serde(default)]
    pub ideal: Vec<FactorSpec>,
    #[serde(default)]
    pub options: Options,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(default)]
    pub generators: Vec<GeneratorSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum GeneratorSpec {
    /// `x_i ↦ ζ^{exponents[i]} x_{perm[i]}` with 1-based `perm`.
    Monomial { perm: Vec<usize>, exponents: Vec<u64> },
    Weights { weights: WeightsSpec },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightsSpec {
    pub d: u64,
    pub e: Vec<u64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorSpec {
    pub monomials: Vec<Vec<u32>>,
    pub exponent: String,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    pub m_max: Option<usize>,
    pub w_max: Option<u64>,
    pub b1_max: Option<u64>,
    pub groebner_budget: Option<usize>,
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn group(&self) -> Result<FiniteGroup> {
        let n = self.dimension;
        if n == 0 {
            return Err(Error::InvalidInput("dimension must be positive".into()));
        }
        let ambient = match self.ambient_order {
            Some(l) => l,
            None => self.group.generators.iter().fold(1, |l, g| match g {
                GeneratorSpec::Weights { weights } => lcm_u64(l, weights.d),
                GeneratorSpec::Monomial { .. } => l,
            }),
        };
        let mut gens = Vec::new();
        for (k, g) in self.group.generators.iter().enumerate() {
            let m = match g {
                GeneratorSpec::Monomial { perm, exponents } => {
                    if perm.len() != n || exponents.len() != n {
                        return Err(Error::DimensionMismatch(format!("group.generators[{k}] has the wrong length")));
                    }
                    MonomialMatrix::from_one_based(perm, exponents.clone(), ambient)?
                }
                GeneratorSpec::Weights { weights } => {
                    if weights.e.len() != n {
                        return Err(Error::DimensionMismatch(format!("group.generators[{k}].weights.e has the wrong length")));
                    }
                    if ambient % weights.d != 0 {
                        return Err(Error::InvalidInput(format!(
                            "group.generators[{k}]: d = {} does not divide ambient_order {ambient}",
                            weights.d
                        )));
                    }
                    MonomialMatrix::from_weights(weights.d, &weights.e, ambient)?
                }
            };
            gens.push(m);
        }
        if gens.is_empty() {
            return Ok(FiniteGroup::trivial(n, ambient));
        }
        closure(&gens, DEFAULT_GROUP_CAP)
    }

    pub fn equations(&self) -> Result<Vec<Polynomial>> {
        self.equations
            .iter()
            .enumerate()
            .map(|(k, s)| Polynomial::parse(s, self.dimension).map_err(|e| Error::Parse(format!("equations[{k}]: {e}"))))
            .collect()
    }

    pub fn ideal(&self) -> Result<MonomialRIdeal> {
        let mut factors = Vec::new();
        for (k, f) in self.ideal.iter().enumerate() {
            let exponent = parse_rational(&f.exponent).map_err(|e| Error::Parse(format!("ideal[{k}].exponent: {e}")))?;
            factors.push(IdealFactor::new(f.monomials.clone(), exponent));
        }
        let ideal = MonomialRIdeal { factors };
        ideal.validate(self.dimension)?;
        Ok(ideal)
    }

    pub fn hyperquot_options(&self, flags: &BudgetFlags) -> HyperquotOptions {
        let d = HyperquotOptions::default();
        HyperquotOptions {
            m_max: flags.max_level.or(self.options.m_max).unwrap_or(d.m_max),
            w_max: flags.max_w.or(self.options.w_max).unwrap_or(d.w_max),
            b1_max: flags.max_b1.or(self.options.b1_max).unwrap_or(d.b1_max),
            groebner_budget: flags.groebner_budget.or(self.options.groebner_budget).unwrap_or(d.groebner_budget),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Quot,
    Hyperquot,
    ReidTai,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Pia,
    Consistency,
    Acc,
}

#[derive(Debug, Clone, Default, clap::Args)]
pub struct BudgetFlags {
    /// Highest jet level probed.
    #[arg(long)]
    pub max_level: Option<usize>,
    /// Largest contact order per ideal factor.
    #[arg(long)]
    pub max_w: Option<u64>,
    /// Largest Jacobian order.
    #[arg(long)]
    pub max_b1: Option<u64>,
    /// Reduction steps allowed per Gröbner basis.
    #[arg(long)]
    pub groebner_budget: Option<usize>,
    /// Worker threads.
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Parser)]
#[command(name = "qmld", version, about = "Minimal log discrepancies of quotient and hyperquotient singularities")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Skip the persistent Gröbner cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, conjugacy classes, ages and the free-in-codimension-one check.
    Group { file: PathBuf },
    /// Minimal log discrepancy at the origin.
    Mld {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "quot")]
        mode: Mode,
        #[command(flatten)]
        budgets: BudgetFlags,
    },
    /// Cross-checks between formulas.
    Verify {
        which: Check,
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 5)]
        max_order: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[command(flatten)]
        budgets: BudgetFlags,
    },
}

/// One command's output.
#[derive(Debug, Clone)]
pub struct ResultRecord {
    pub command: String,
    pub arguments: BTreeMap<String, Value>,
    pub value: Option<String>,
    pub status: Option<String>,
    pub witness: Value,
    pub details: Value,
    pub budgets: BTreeMap<String, Value>,
    pub timing_ms: u64,
    pub input_hash: String,
}

impl ResultRecord {
    fn new(command: &str, input_hash: String) -> Self {
        ResultRecord {
            command: command.into(),
            arguments: BTreeMap::new(),
            value: None,
            status: None,
            witness: Value::Null,
            details: Value::Null,
            budgets: BTreeMap::new(),
            timing_ms: 0,
            input_hash,
        }
    }

    fn set_mld(&mut self, v: &MldValue) {
        self.value = Some(v.value_string());
        self.status = Some(v.status.as_str().into());
        self.witness = v.witness.to_json();
    }

    fn set_budgets(&mut self, o: &HyperquotOptions) {
        self.budgets.insert("m_max".into(), json!(o.m_max));
        self.budgets.insert("w_max".into(), json!(o.w_max));
        self.budgets.insert("b1_max".into(), json!(o.b1_max));
        self.budgets.insert("groebner_budget".into(), json!(o.groebner_budget));
    }

    pub fn to_json(&self) -> Value {
        // serde_json maps are sorted, so key order is deterministic.
        json!({
            "command": self.command,
            "arguments": self.arguments,
            "value": self.value,
            "status": self.status,
            "witness": self.witness,
            "details": self.details,
            "budgets": self.budgets,
            "timing_ms": self.timing_ms,
            "version": env!("CARGO_PKG_VERSION"),
            "input_hash": self.input_hash,
        })
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let v = self.to_json();
        for (k, x) in v.as_object().expect("record is an object") {
            let shown = match x {
                Value::String(s) => s.clone(),
                Value::Null => "-".into(),
                other => other.to_string(),
            };
            out.push_str(&format!("{k:<12} {shown}\n"));
        }
        out
    }
}

fn hash_bytes(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn read_instance(path: &Path) -> Result<(InstanceFile, String)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    let inst = InstanceFile::parse(&text)?;
    Ok((inst, hash_bytes(text.as_bytes())))
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded(_) | Error::CapExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_INVALID,
    }
}

/// Runs one parsed command; returns the record (when one could be produced) and the exit code.
pub fn execute(cli: &Cli) -> (Option<ResultRecord>, i32, Option<String>) {
    let start = Instant::now();
    let outcome = match &cli.command {
        Command::Group { file } => cmd_group(file),
        Command::Mld { file, mode, budgets } => cmd_mld(file, *mode, budgets),
        Command::Verify { which, file, dim, max_order, seed, samples, budgets } => {
            cmd_verify(*which, file.as_deref(), *dim, *max_order, *seed, *samples, budgets)
        }
    };
    match outcome {
        Ok((mut rec, code)) => {
            rec.timing_ms = start.elapsed().as_millis() as u64;
            (Some(rec), code, None)
        }
        Err((e, partial)) => {
            let code = exit_code_for(&e);
            let rec = partial.map(|mut r| {
                r.timing_ms = start.elapsed().as_millis() as u64;
                r.status = Some("lower_bound".into());
                r.details = json!({ "error": e.to_string() });
                r
            });
            (rec, code, Some(e.to_string()))
        }
    }
}

type Outcome = std::result::Result<(ResultRecord, i32), (Error, Option<ResultRecord>)>;

fn cmd_group(file: &Path) -> Outcome {
    let (inst, hash) = read_instance(file).map_err(|e| (e, None))?;
    let g = inst.group().map_err(|e| (e, None))?;
    let mut rec = ResultRecord::new("group", hash);
    rec.arguments.insert("file".into(), json!(file.display().to_string()));
    let mut ages: Vec<_> = g.elements().iter().map(|x| x.weights().age()).collect();
    ages.sort();
    let free = g.pseudo_reflection().map(|p| p.to_string());
    rec.details = json!({
        "order": g.order(),
        "conjugacy_classes": g.conjugacy_classes().len(),
        "ages": ages.iter().map(format_rational).collect::<Vec<_>>(),
        "free_in_codim1": free.is_none(),
        "abelian": g.is_abelian(),
        "diagonal": g.is_diagonal(),
    });
    if let Some(p) = free {
        rec.witness = json!({ "pseudo_reflection": p });
    }
    Ok((rec, EXIT_OK))
}

fn cmd_mld(file: &Path, mode: Mode, flags: &BudgetFlags) -> Outcome {
    let (inst, hash) = read_instance(file).map_err(|e| (e, None))?;
    let mut rec = ResultRecord::new("mld", hash);
    rec.arguments.insert("file".into(), json!(file.display().to_string()));
    rec.arguments.insert("mode".into(), json!(format!("{mode:?}").to_lowercase()));
    let opts = inst.hyperquot_options(flags);
    let setup = || -> Result<(FiniteGroup, MonomialRIdeal, Vec<Polynomial>)> {
        Ok((inst.group()?, inst.ideal()?, inst.equations()?))
    };
    let (g, ideal, eqs) = setup().map_err(|e| (e, None))?;
    let value = match mode {
        Mode::Quot => {
            if !eqs.is_empty() {
                return Err((Error::InvalidInput("quot mode takes no equations; use hyperquot".into()), None));
            }
            crate::contact_loci::formula_mld_quot(&g, &ideal)
        }
        Mode::ReidTai => mld_reid_tai(&g, &ideal),
        Mode::Hyperquot => {
            rec.set_budgets(&opts);
            mld_hyperquot(&HyperquotientInstance { group: g, equations: eqs, ideal }, &opts)
        }
    };
    match value {
        Ok(v) => {
            rec.set_mld(&v);
            Ok((rec, EXIT_OK))
        }
        Err(e) => {
            let partial = matches!(e, Error::BudgetExceeded(_)).then_some(rec);
            Err((e, partial))
        }
    }
}

fn cmd_verify(
    which: Check,
    file: Option<&Path>,
    dim: usize,
    max_order: u64,
    seed: u64,
    samples: usize,
    flags: &BudgetFlags,
) -> Outcome {
    let loaded = file.map(read_instance).transpose().map_err(|e| (e, None))?;
    let hash = match &loaded {
        Some((_, h)) => h.clone(),
        None => hash_bytes(format!("{which:?}:{dim}:{max_order}:{seed}:{samples}").as_bytes()),
    };
    let mut rec = ResultRecord::new("verify", hash);
    rec.arguments.insert("which".into(), json!(format!("{which:?}").to_lowercase()));
    if let Some(f) = file {
        rec.arguments.insert("file".into(), json!(f.display().to_string()));
    }
    let wrap = |e: Error| (e, None);
    match which {
        Check::Acc => {
            rec.arguments.insert("dim".into(), json!(dim));
            rec.arguments.insert("max_order".into(), json!(max_order));
            let r = acc_sample(dim, max_order).map_err(wrap)?;
            rec.details = r.to_json();
            rec.status = Some("exact".into());
            let ok = r.oracle_match && r.in_range;
            rec.value = Some(if ok { "match" } else { "mismatch" }.into());
            Ok((rec, if ok { EXIT_OK } else { EXIT_MISMATCH }))
        }
        Check::Consistency => match loaded {
            Some((inst, _)) => {
                let g = inst.group().map_err(wrap)?;
                let ideal = inst.ideal().map_err(wrap)?;
                let r = verify_consistency(&g, &ideal).map_err(wrap)?;
                rec.set_mld(&r.lhs);
                rec.details = r.to_json();
                let code = if r.verdict == Verdict::Mismatch { EXIT_MISMATCH } else { EXIT_OK };
                Ok((rec, code))
            }
            None => {
                rec.arguments.insert("seed".into(), json!(seed));
                rec.arguments.insert("samples".into(), json!(samples));
                let r = consistency_sweep(seed, samples).map_err(wrap)?;
                let ok = r.mismatches.is_empty();
                rec.details = r.to_json();
                rec.value = Some(if ok { "match" } else { "mismatch" }.into());
                Ok((rec, if ok { EXIT_OK } else { EXIT_MISMATCH }))
            }
        },
        Check::Pia => {
            let Some((inst, _)) = loaded else {
                return Err((Error::InvalidInput("verify pia needs an instance file".into()), None));
            };
            let opts = inst.hyperquot_options(flags);
            rec.set_budgets(&opts);
            let hq = HyperquotientInstance {
                group: inst.group().map_err(wrap)?,
                equations: inst.equations().map_err(wrap)?,
                ideal: inst.ideal().map_err(wrap)?,
            };
            let r = verify_pia(&hq, &opts).map_err(wrap)?;
            rec.set_mld(&r.rhs);
            rec.details = r.to_json();
            let code = if r.verdict == Verdict::Mismatch { EXIT_MISMATCH } else { EXIT_OK };
            Ok((rec, code))
        }
    }
}

/// Entry point shared by the binary: parses arguments, runs, prints, returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let jobs = match &cli.command {
        Command::Mld { budgets, .. } | Command::Verify { budgets, .. } => budgets.jobs,
        Command::Group { .. } => None,
    };
    if let Some(j) = jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
    cache::configure(!cli.no_cache, None);
    let (rec, code, err) = execute(&cli);
    if let Some(e) = &err {
        eprintln!("error: {e}");
    }
    if let Some(r) = rec {
        match cli.format {
            Format::Json => println!("{}", r.to_json()),
            Format::Table => print!("{}", r.to_table()),
        }
    }
    if let Err(e) = cache::flush() {
        log::warn!("could not write the cache: {e}");
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_instance_files() {
        let text = r#"{"dimension": 2, "group": {"generators": [{"weights": {"d": 3, "e": [1, 1]}}]},
                       "ideal": [{"monomials": [[1, 1]], "exponent": "1/2"}]}"#;
        let inst = InstanceFile::parse(text).unwrap();
        assert_eq!(inst.group().unwrap().order(), 3);
        assert_eq!(inst.ideal().unwrap().factors.len(), 1);

        let text = r#"{"dimension": 2, "ambient_order": 4,
                       "group": {"generators": [{"perm": [2, 1], "exponents": [0, 2]}]}}"#;
        assert_eq!(InstanceFile::parse(text).unwrap().group().unwrap().order(), 4);

        let err = InstanceFile::parse(r#"{"dimension": 2, "group": {}, "extra": 1}"#).unwrap_err();
        assert!(err.to_string().contains("extra"), "{err}");
    }
}
