//! Command-line interface. Every verb prints JSON (default) or TSV on
//! standard output. Exit codes: 0 success, 1 verification mismatch, 2
//! invalid input, 3 resource gate.

use crate::catalog::{self, cover_labels, LabelMap, Mode};
use crate::chartab::{cache_dir_from_env, db_labels, CoverTables, DEFAULT_GATE};
use crate::combinat::{central_character_tableau, one_wtype_candidates, Partition};
use crate::error::{Error, Result};
use crate::heckemod::{build_irrep, commutator_test, weyl_row};
use crate::orbits::{identcc, OrbitLabel};
use crate::rootsystem::{CartanType, ParameterFunction, RootSystem};
use crate::scalars::{fmt_rational, int, parse_rational, Rational};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::collections::HashMap;
use std::ffi::OsString;

/// Covers with more elements than this need `--long`.
pub const LONG_THRESHOLD: usize = 50_000;
/// Gate on group orders under `--long`.
pub const LONG_GATE: usize = 1_000_000;

#[derive(Parser, Debug)]
#[command(name = "spinweyl", version, about = "Pin covers of Weyl groups, spin modules and one-W-type Hecke algebra modules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Allow computations with large covers (E6).
    #[arg(long, global = true)]
    pub long: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Args, Debug, Clone)]
pub struct TypeArgs {
    /// Cartan type such as G2, F4, B3 (or a letter together with --rank).
    #[arg(value_name = "TYPE")]
    pub positional: Option<String>,
    #[arg(long = "type", short = 't')]
    pub cartan: Option<String>,
    #[arg(long)]
    pub rank: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct ParamArgs {
    /// Parameter on short roots (a rational such as 3/2).
    #[arg(long)]
    pub ks: Option<String>,
    /// Parameter on long roots; simply-laced types use this one.
    #[arg(long)]
    pub kl: Option<String>,
    /// Equal parameter on all roots.
    #[arg(long)]
    pub k: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Simple and positive roots with the Cartan matrix.
    Roots(TypeArgs),
    /// Conjugacy classes of the Weyl group.
    WeylClasses(TypeArgs),
    /// Character table of W, or of the pin cover with --cover.
    Chartab {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        cover: bool,
    },
    /// Order, classes and spin modules of the pin cover.
    PinCover(TypeArgs),
    /// Decomposition of sigma (x) S into irreducibles of the cover.
    DecomposeSpin {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        sigma: String,
        /// Spin module index (0 or 1 in odd rank).
        #[arg(long)]
        variant: Option<usize>,
    },
    /// Irreducible W-representations predicted to extend to one-W-type modules.
    OneWtype {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        k: ParamArgs,
    },
    /// Builds a one-W-type module and reports its invariants.
    OneWtypeBuild {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        sigma: String,
        #[command(flatten)]
        k: ParamArgs,
    },
    /// Central character of a partition (tableau rule in types B and C,
    /// half the middle element in type A).
    CentralCharacter {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        lambda: String,
        #[command(flatten)]
        k: ParamArgs,
    },
    /// Compares a golden table with computed data.
    VerifyTable {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, conflicts_with = "dims_only")]
        full: bool,
        #[arg(long)]
        dims_only: bool,
    },
}

/// Output of a verb: a JSON value, its TSV rendering and the exit code.
pub struct Outcome {
    pub json: Value,
    pub tsv: String,
    pub code: i32,
}

impl Outcome {
    fn ok(json: Value, tsv: String) -> Self {
        Self { json, tsv, code: 0 }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Mismatch(_) | Error::Internal(_) | Error::NonIntegral(_) => 1,
        Error::GroupTooLarge { .. } => 3,
        _ => 2,
    }
}

/// Parses the arguments and runs the command. Returns the exit code with
/// the text for standard output and standard error.
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return if code == 0 { (0, e.to_string(), String::new()) } else { (2, String::new(), e.to_string()) };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let text = match cli.format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&out.json).expect("serializable")),
                Format::Tsv => out.tsv,
            };
            (out.code, text, String::new())
        }
        Err(e) => (exit_code(&e), String::new(), format!("error: {e}\n")),
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Roots(t) => roots(t),
        Command::WeylClasses(t) => weyl_classes(t),
        Command::Chartab { ty, cover } => chartab(ty, *cover, cli.long),
        Command::PinCover(t) => pin_cover(t, cli.long),
        Command::DecomposeSpin { ty, sigma, variant } => decompose_spin(ty, sigma, *variant, cli.long),
        Command::OneWtype { ty, k } => one_wtype(ty, k),
        Command::OneWtypeBuild { ty, sigma, k } => one_wtype_build(ty, sigma, k, cli.long),
        Command::CentralCharacter { ty, lambda, k } => central_character(ty, lambda, k),
        Command::VerifyTable { ty, full, dims_only } => verify_table(ty, *full, *dims_only, cli.long),
    }
}

fn cartan_type(t: &TypeArgs) -> Result<CartanType> {
    let name = match (&t.positional, &t.cartan) {
        (Some(a), Some(b)) if a != b => return Err(Error::InvalidInput(format!("two types given: {a} and {b}"))),
        (Some(a), _) | (None, Some(a)) => a.trim().to_string(),
        (None, None) => return Err(Error::InvalidInput("missing Cartan type".into())),
    };
    match t.rank {
        Some(r) if name.chars().all(|c| c.is_ascii_alphabetic()) => CartanType::parse(&format!("{name}{r}")),
        Some(r) => {
            let ct = CartanType::parse(&name)?;
            if ct.rank() != r {
                return Err(Error::InvalidInput(format!("{name} does not have rank {r}")));
            }
            Ok(ct)
        }
        None => CartanType::parse(&name),
    }
}

fn rational_arg(s: &str) -> Result<Rational> {
    parse_rational(s.trim()).ok_or_else(|| Error::InvalidInput(format!("not a rational number: {s:?}")))
}

fn params(k: &ParamArgs) -> Result<ParameterFunction> {
    let eq = k.k.as_deref().map(rational_arg).transpose()?;
    let ks = k.ks.as_deref().map(rational_arg).transpose()?.or(eq.clone()).unwrap_or_else(|| int(1));
    let kl = k.kl.as_deref().map(rational_arg).transpose()?.or(eq).unwrap_or_else(|| int(1));
    Ok(ParameterFunction::new(ks, kl))
}

fn q(r: &Rational) -> String {
    fmt_rational(r)
}

fn qvec(v: &[Rational]) -> Vec<String> {
    v.iter().map(q).collect()
}

fn tsv(rows: &[Vec<String>]) -> String {
    rows.iter().map(|r| r.join("\t") + "\n").collect()
}

/// Cover tables, refusing large covers unless `long` is set.
fn cover_tables(rs: &RootSystem, long: bool) -> Result<CoverTables> {
    let order = rs.cartan_type().weyl_order().saturating_mul(2);
    if !long && order > LONG_THRESHOLD as u128 {
        return Err(Error::GroupTooLarge { order: order.min(usize::MAX as u128) as usize, limit: LONG_THRESHOLD });
    }
    let gate = if long { LONG_GATE } else { DEFAULT_GATE };
    CoverTables::build_cached(rs, gate, cache_dir_from_env().as_deref())
}

fn roots(t: &TypeArgs) -> Result<Outcome> {
    let rs = RootSystem::build(cartan_type(t)?)?;
    let pos: Vec<Value> = (0..rs.num_positive())
        .map(|i| json!({ "root": qvec(rs.root(i)), "height": rs.height(i), "long": rs.is_long(i) }))
        .collect();
    let json = json!({
        "type": rs.cartan_type().to_string(),
        "rank": rs.rank(),
        "ambient_dim": rs.ambient_dim(),
        "simple_roots": rs.simple_roots().iter().map(|a| qvec(a)).collect::<Vec<_>>(),
        "cartan_matrix": rs.cartan_matrix(),
        "positive_roots": pos,
    });
    let mut rows = vec![vec!["index".to_string(), "height".into(), "long".into(), "root".into()]];
    for i in 0..rs.num_positive() {
        rows.push(vec![i.to_string(), rs.height(i).to_string(), rs.is_long(i).to_string(), qvec(rs.root(i)).join(",")]);
    }
    Ok(Outcome::ok(json, tsv(&rows)))
}

fn weyl_classes(t: &TypeArgs) -> Result<Outcome> {
    let rs = RootSystem::build(cartan_type(t)?)?;
    let w = rs.weyl_group(DEFAULT_GATE)?;
    let classes = w.classes();
    let mut list = Vec::new();
    let mut rows = vec![vec!["class".to_string(), "size".into(), "order".into(), "sign".into(), "trace".into(), "word".into()]];
    for c in 0..classes.sizes.len() {
        let word = w.class_rep_word(c);
        let trace = w.reflection_character(c);
        list.push(json!({ "size": classes.sizes[c], "order": classes.orders[c], "sign": w.sign(c), "trace": q(&trace), "word": word }));
        let word: Vec<String> = word.iter().map(|s| (s + 1).to_string()).collect();
        rows.push(vec![c.to_string(), classes.sizes[c].to_string(), classes.orders[c].to_string(), w.sign(c).to_string(), q(&trace), word.join(" ")]);
    }
    let json = json!({ "type": rs.cartan_type().to_string(), "order": w.order(), "classes": list });
    Ok(Outcome::ok(json, tsv(&rows)))
}

/// Names of all rows of the cover table: printed or canonical labels for
/// genuine rows, `W:` followed by the (d,b) label for inflated ones.
fn cover_row_names(tables: &CoverTables) -> Vec<String> {
    let printed = printed_cover_labels(tables.root_system().cartan_type());
    let canonical = cover_labels(tables);
    let wl = db_labels(tables.cover.weyl(), &tables.weyl);
    let mut inflated = HashMap::new();
    for (i, l) in wl.iter().enumerate() {
        if let Some(r) = tables.table.find(&tables.inflate(tables.weyl.character(i))) {
            inflated.insert(r, l.clone());
        }
    }
    (0..tables.table.len())
        .map(|i| match inflated.get(&i) {
            Some(l) => format!("W:{l}"),
            None => printed.get(&canonical[i]).cloned().unwrap_or_else(|| canonical[i].clone()),
        })
        .collect()
}

/// Canonical W~ label -> printed label, when a label map exists.
fn printed_cover_labels(ct: CartanType) -> HashMap<String, String> {
    LabelMap::load(ct).map(|m| m.cover.into_iter().map(|(p, c)| (c, p)).collect()).unwrap_or_default()
}

fn chartab(t: &TypeArgs, cover: bool, long: bool) -> Result<Outcome> {
    let rs = RootSystem::build(cartan_type(t)?)?;
    let (table, labels) = if cover {
        let tables = cover_tables(&rs, long)?;
        let names = cover_row_names(&tables);
        (tables.table, names)
    } else {
        let w = rs.weyl_group(DEFAULT_GATE)?;
        let dir = cache_dir_from_env();
        let id = format!("W({})", rs.cartan_type());
        let table = crate::chartab::cached_table(dir.as_deref(), &id, w.order(), w.classes(), || crate::chartab::dixon_schneider(w.group(), w.classes(), &id))?;
        let labels = db_labels(&w, &table);
        (table, labels)
    };
    let irreps: Vec<Value> = table
        .irreps
        .iter()
        .enumerate()
        .map(|(i, row)| json!({ "label": labels[i], "degree": table.degree(i), "values": row.iter().map(|x| x.serialize()).collect::<Vec<_>>() }))
        .collect();
    let classes: Vec<Value> = (0..table.num_classes()).map(|c| json!({ "size": table.sizes[c], "order": table.orders[c] })).collect();
    let json = json!({ "group": table.group_id, "order": table.order, "classes": classes, "irreps": irreps });
    Ok(Outcome::ok(json, table.to_tsv(Some(&labels))))
}

fn pin_cover(t: &TypeArgs, long: bool) -> Result<Outcome> {
    let rs = RootSystem::build(cartan_type(t)?)?;
    let tables = cover_tables(&rs, long)?;
    let names = cover_row_names(&tables);
    let genuine = tables.genuine();
    let spin: Vec<Value> = (0..tables.spin.len())
        .map(|v| {
            let row = tables.spin_row(v).ok();
            json!({ "variant": v, "dimension": tables.cover.spin_modules()[v].dimension(), "row": row.map(|r| names[r].clone()) })
        })
        .collect();
    let json = json!({
        "type": rs.cartan_type().to_string(),
        "order": tables.cover.order(),
        "classes": tables.table.num_classes(),
        "z_class": tables.cover.z_class(),
        "genuine": genuine.iter().map(|&g| json!({ "label": names[g], "degree": tables.table.degree(g) })).collect::<Vec<_>>(),
        "spin_modules": spin,
    });
    let mut rows = vec![vec!["label".to_string(), "degree".into()]];
    rows.extend(genuine.iter().map(|&g| vec![names[g].clone(), tables.table.degree(g).to_string()]));
    Ok(Outcome::ok(json, tsv(&rows)))
}

/// Row of the W table for a label: a partition or bipartition in the
/// classical types, a printed (d,b) label otherwise.
fn sigma_row(tables: &CoverTables, label: &str) -> Result<usize> {
    let rs = tables.root_system();
    let ct = rs.cartan_type();
    match ct {
        CartanType::A(_) | CartanType::B(_) | CartanType::C(_) | CartanType::D(_) => weyl_row(&build_irrep(rs, label)?, tables),
        _ => {
            let wanted: String = label.chars().filter(|c| !c.is_whitespace()).collect();
            let wanted = LabelMap::load(ct).map(|m| m.weyl_label(&wanted)).unwrap_or(wanted);
            db_labels(tables.cover.weyl(), &tables.weyl)
                .iter()
                .position(|l| *l == wanted)
                .ok_or_else(|| Error::InvalidInput(format!("no irreducible of W({ct}) labelled {label}")))
        }
    }
}

fn constituents_json(tables: &CoverTables, names: &[String], constituents: &[(usize, i64)]) -> Vec<Value> {
    let canonical = cover_labels(tables);
    let mut list: Vec<(i64, String, String, i64)> = constituents.iter().map(|&(c, m)| (tables.table.degree(c), canonical[c].clone(), names[c].clone(), m)).collect();
    list.sort();
    list.into_iter().map(|(d, c, l, m)| json!({ "label": l, "mult": m, "degree": d, "canonical": c })).collect()
}

fn decompose_spin(t: &TypeArgs, sigma: &str, variant: Option<usize>, long: bool) -> Result<Outcome> {
    let rs = RootSystem::build(cartan_type(t)?)?;
    let tables = cover_tables(&rs, long)?;
    let row = sigma_row(&tables, sigma)?;
    let v = variant.unwrap_or(0);
    if v >= tables.spin.len() {
        return Err(Error::InvalidInput(format!("spin module {v} does not exist; there are {}", tables.spin.len())));
    }
    let names = cover_row_names(&tables);
    let dec = tables.decompose_spin_tensor(row, v)?;
    let list = constituents_json(&tables, &names, &dec.constituents);
    let mut rows = vec![vec!["label".to_string(), "mult".into(), "degree".into()]];
    rows.extend(list.iter().map(|c| vec![c["label"].as_str().unwrap_or("").to_string(), c["mult"].to_string(), c["degree"].to_string()]));
    let json = json!({ "type": rs.cartan_type().to_string(), "sigma": sigma, "variant": v, "constituents": list });
    Ok(Outcome::ok(json, tsv(&rows)))
}

fn params_json(k: &ParameterFunction) -> Value {
    json!({ "ks": q(&k.k_short), "kl": q(&k.k_long) })
}

fn one_wtype(t: &TypeArgs, k: &ParamArgs) -> Result<Outcome> {
    let rs = RootSystem::build(cartan_type(t)?)?;
    let k = params(k)?;
    let candidates = one_wtype_candidates(rs.cartan_type(), &k)?;
    let mut list = Vec::new();
    let mut rows = vec![vec!["sigma".to_string(), "certain".into(), "commutator_test".into()]];
    for c in candidates {
        let verified = build_irrep(&rs, &c.label).ok().map(|s| commutator_test(&s, &rs, &k));
        rows.push(vec![c.label.clone(), c.certain.to_string(), verified.map_or("-".into(), |b| b.to_string())]);
        list.push(json!({ "sigma": c.label, "certain": c.certain, "commutator_test": verified }));
    }
    let json = json!({ "type": rs.cartan_type().to_string(), "params": params_json(&k), "candidates": list });
    Ok(Outcome::ok(json, tsv(&rows)))
}

fn one_wtype_build(t: &TypeArgs, label: &str, k: &ParamArgs, long: bool) -> Result<Outcome> {
    use crate::heckemod::{cohomology_character, dirac_operator, extend_to_hecke, squared_dirac_check};
    let rs = RootSystem::build(cartan_type(t)?)?;
    let k = params(k)?;
    let sigma = build_irrep(&rs, label)?;
    let x = match extend_to_hecke(&sigma, &rs, &k) {
        Ok(x) => x,
        Err(Error::NoExtension(why)) => {
            let json = json!({ "type": rs.cartan_type().to_string(), "sigma": label, "params": params_json(&k), "exists": false, "reason": why });
            return Ok(Outcome::ok(json, "exists\tfalse\n".to_string()));
        }
        Err(e) => return Err(e),
    };
    let tables = cover_tables(&rs, long)?;
    let row = weyl_row(&x.sigma, &tables)?;
    let names = cover_row_names(&tables);
    let star = x.verify_star_hermitian();
    let mut ok = star;
    let mut spin = Vec::new();
    let mut rows = vec![
        vec!["exists".to_string(), "true".into()],
        vec!["central_character".to_string(), qvec(&x.central_char).join(",")],
        vec!["star_hermitian".to_string(), star.to_string()],
    ];
    for (v, module) in tables.cover.spin_modules().iter().enumerate() {
        let d = dirac_operator(&x, module);
        let cohomology = cohomology_character(&d, row, v, &tables).map(|dec| constituents_json(&tables, &names, &dec.constituents));
        let casimir = squared_dirac_check(&x, &tables, v).is_ok();
        ok &= d.is_zero() && cohomology.is_ok() && casimir;
        let labels: Vec<String> = cohomology.as_ref().map(|c| c.iter().map(|e| format!("{}*{}", e["mult"], e["label"].as_str().unwrap_or(""))).collect()).unwrap_or_default();
        rows.push(vec![format!("spin{v}"), format!("dirac_zero={} casimir={} cohomology={}", d.is_zero(), casimir, labels.join("+"))]);
        spin.push(json!({
            "variant": v,
            "dirac_zero": d.is_zero(),
            "kernel_dim": d.kernel_dim,
            "cohomology_dim": d.cohomology_dim,
            "cohomology": cohomology.unwrap_or_default(),
            "casimir_consistent": casimir,
        }));
    }
    let json = json!({
        "type": rs.cartan_type().to_string(),
        "sigma": label,
        "params": params_json(&k),
        "exists": true,
        "dimension": x.dimension(),
        "central_character": qvec(&x.central_char),
        "star_hermitian": star,
        "spin": spin,
    });
    Ok(Outcome { json, tsv: tsv(&rows), code: if ok { 0 } else { 1 } })
}

fn central_character(t: &TypeArgs, lambda: &str, k: &ParamArgs) -> Result<Outcome> {
    let lambda = Partition::parse(lambda)?;
    // a bare letter takes its rank from the size of lambda
    let ct = match (&t.positional, &t.cartan, t.rank) {
        (Some(l), None, None) | (None, Some(l), None) if l.trim().len() == 1 => {
            let rank = if l.trim().eq_ignore_ascii_case("A") { lambda.size().saturating_sub(1) } else { lambda.size() };
            CartanType::new(l.trim(), rank)?
        }
        _ => cartan_type(t)?,
    };
    let k = params(k)?;
    let (symbolic, value) = match ct {
        CartanType::B(n) | CartanType::C(n) if lambda.size() == n => {
            let cc = central_character_tableau(&lambda);
            (cc.to_string(), cc.eval(&k))
        }
        CartanType::A(n) if lambda.size() == n + 1 => {
            let half = identcc(&OrbitLabel::type_a(&lambda))?;
            let symbolic: Vec<String> = half.iter().map(|x| format!("{}*kl", q(x))).collect();
            (format!("({})", symbolic.join(", ")), half.iter().map(|x| x * &k.k_long).collect())
        }
        CartanType::A(_) | CartanType::B(_) | CartanType::C(_) => return Err(Error::InvalidInput(format!("{lambda} does not match {ct}"))),
        _ => return Err(Error::InvalidInput(format!("central characters from partitions are defined for types A, B, C, not {ct}"))),
    };
    let json = json!({ "type": ct.to_string(), "lambda": lambda.to_string(), "params": params_json(&k), "symbolic": symbolic, "value": qvec(&value) });
    Ok(Outcome::ok(json, format!("{}\n", qvec(&value).join("\t"))))
}

fn verify_table(t: &TypeArgs, full: bool, dims_only: bool, long: bool) -> Result<Outcome> {
    let ct = cartan_type(t)?;
    let report = match (full, dims_only) {
        (true, _) => {
            if matches!(ct, CartanType::E7 | CartanType::E8) {
                return Err(Error::InvalidInput(format!("{ct} is only checked with --dims-only")));
            }
            let rs = RootSystem::build(ct)?;
            catalog::verify_full(&cover_tables(&rs, long)?)?
        }
        (false, true) => catalog::verify_table(ct, Mode::DimsOnly, DEFAULT_GATE)?,
        (false, false) => return Err(Error::InvalidInput("choose --full or --dims-only".into())),
    };
    let mut rows = vec![vec!["sigma".to_string(), "passed".into(), "failures".into()]];
    rows.extend(report.rows.iter().map(|r| vec![r.sigma.join(","), r.passed.to_string(), r.failures.join("; ")]));
    let code = if report.all_passed() { 0 } else { 1 };
    let json = serde_json::to_value(&report).expect("serializable");
    Ok(Outcome { json, tsv: tsv(&rows), code })
}

