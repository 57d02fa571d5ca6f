//! `infgon`: batch front end for classifying and checking (co-)t-structures.

mod render;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use infgon::arcsets::{
    check_ovl_pc, check_ovl_pe, check_ovl_pt, is_cot_aisle, is_t_aisle, is_torsion_class, SymArcSet,
};
use infgon::gon::{Arc, GonConfig, Model};
use infgon::hom::{ext_related, hom_dim, middle_term};
use infgon::ncp::{complement_alt, complement_hd, enumerate_alt, enumerate_hd, AltNcp, HalfDecNcp};
use infgon::oracle::{verify_counts, verify_hom, verify_lattice, verify_roundtrip, verify_torsion_suite, Report};
use infgon::torsion::{
    alt_from_cot_aisle, cot_coheart, cot_join, cot_meet, hd_from_aisle, t_heart, tt_join, tt_meet, TorsionDescriptor,
};

#[derive(Parser)]
#[command(
    name = "infgon",
    version,
    about = "Torsion pairs, t-structures and co-t-structures on completed infinity-gons"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Number of accumulation points.
    #[arg(long, global = true)]
    m: Option<usize>,
    /// Window half-width (verification) or decoration bound (enumeration).
    #[arg(short = 'W', long = "window", global = true)]
    window: Option<i64>,
    #[arg(long, global = true, value_enum)]
    kind: Option<Kind>,
    /// Input JSON file; standard input when absent or `-`.
    #[arg(long = "in", global = true)]
    input: Option<PathBuf>,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Descriptor of a decorated partition, or the decoding of an arc set.
    Classify,
    Aisle,
    Coaisle,
    /// Heart of a t-structure.
    Heart,
    /// Co-heart of a co-t-structure.
    Coheart,
    /// Complement `(Q, Y)` of a decorated partition.
    Complement,
    /// Meet or join of the two decorated partitions in a JSON array.
    Lattice {
        #[arg(long, value_enum)]
        op: Op,
    },
    /// Closure conditions of an arc set.
    Check,
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Ground set size for the lattice suite.
        #[arg(long, default_value_t = 6)]
        k: usize,
    },
    /// List all decorated partitions with regular decorations in `[-W, W]`.
    Enumerate,
    /// Hom, Ext and middle terms for `{"model", "m", "a", "b"}`.
    Hom,
    /// SVG circle diagram of a descriptor or decorated partition.
    Render,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Hd,
    Alt,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Meet,
    Join,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Hom,
    Torsion,
    Roundtrip,
    Lattice,
    Counts,
}

enum Failure {
    /// Bad flags or input: exit 2.
    Usage(String),
    /// A verification suite found counterexamples: exit 1, output still written.
    Verification(String),
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

enum Datum {
    Hd(GonConfig, HalfDecNcp),
    Alt(GonConfig, AltNcp),
}

impl Datum {
    fn to_json(&self) -> Value {
        match self {
            Datum::Hd(c, d) => d.to_json(c),
            Datum::Alt(c, d) => d.to_json(c),
        }
    }

    fn descriptor(&self) -> Result<TorsionDescriptor, Failure> {
        match self {
            Datum::Hd(c, d) => TorsionDescriptor::t(c, d),
            Datum::Alt(c, d) => TorsionDescriptor::cot(c, d),
        }
        .map_err(usage)
    }
}

struct Ctx {
    cli: Cli,
}

impl Ctx {
    fn read_input(&self) -> Result<Value, Failure> {
        let (name, text) = match &self.cli.input {
            Some(p) if p.as_os_str() != "-" => {
                let text = fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
                (p.display().to_string(), text)
            }
            _ => {
                let mut text = String::new();
                io::stdin().read_to_string(&mut text).map_err(usage)?;
                ("<stdin>".to_string(), text)
            }
        };
        serde_json::from_str(&text)
            .map_err(|e| usage(format!("{name}:{}:{}: malformed JSON: {e}", e.line(), e.column())))
    }

    fn cfg(&self, v: Option<&Value>) -> Result<GonConfig, Failure> {
        let from_json = v.and_then(|v| v.get("m").or_else(|| v.get("datum").and_then(|d| d.get("m"))));
        let m = match (from_json.and_then(Value::as_u64), self.cli.m) {
            (Some(a), Some(b)) if a as usize != b => return Err(usage(format!("input has m = {a}, flag says {b}"))),
            (Some(a), _) => a as usize,
            (None, Some(b)) => b,
            (None, None) => return Err(usage("pass --m or include \"m\" in the input")),
        };
        GonConfig::new(m).map_err(usage)
    }

    fn kind_of(&self, v: &Value) -> Result<Kind, Failure> {
        let tag = v.get("kind").and_then(Value::as_str);
        let from_json = match tag {
            Some("hd") | Some("t") => Some(Kind::Hd),
            Some("alt") | Some("cot") => Some(Kind::Alt),
            _ => None,
        };
        match (from_json, self.cli.kind) {
            (Some(a), Some(b)) if a != b => Err(usage("--kind disagrees with the input's \"kind\"")),
            (Some(k), _) | (None, Some(k)) => Ok(k),
            (None, None) => Err(usage("pass --kind or include \"kind\" in the input")),
        }
    }

    /// A decorated partition, given bare or inside a descriptor.
    fn datum(&self, v: &Value) -> Result<Datum, Failure> {
        let kind = self.kind_of(v)?;
        let inner = v.get("datum").unwrap_or(v);
        let cfg = self.cfg(Some(inner))?;
        Ok(match kind {
            Kind::Hd => Datum::Hd(cfg, HalfDecNcp::from_json(&cfg, inner).map_err(usage)?),
            Kind::Alt => Datum::Alt(cfg, AltNcp::from_json(&cfg, inner).map_err(usage)?),
        })
    }

    fn format(&self, default: Format) -> Format {
        self.cli.format.unwrap_or(default)
    }
}

fn arcs_json(arcs: &[Arc]) -> Value {
    Value::Array(arcs.iter().map(Arc::to_json).collect())
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize") + "\n"
}

fn table_of(v: &Value) -> String {
    match v {
        Value::Array(items) => items.iter().map(|i| format!("{i}\n")).collect(),
        Value::Object(map) => map.iter().map(|(k, v)| format!("{k:<20} {v}\n")).collect(),
        other => format!("{other}\n"),
    }
}

fn emit(ctx: &Ctx, v: Value) -> String {
    match ctx.format(Format::Json) {
        Format::Table => table_of(&v),
        _ => pretty(&v),
    }
}

fn report_out(ctx: &Ctx, r: &Report) -> Result<String, Failure> {
    let text = match ctx.format(Format::Json) {
        Format::Table => r.to_table(),
        _ => pretty(&r.to_json()),
    };
    if r.passed() {
        Ok(text)
    } else {
        Err(Failure::Verification(text))
    }
}

fn run(ctx: &Ctx) -> Result<String, Failure> {
    match &ctx.cli.command {
        Command::Classify => {
            let v = ctx.read_input()?;
            if v.get("rects").is_some() {
                let x = SymArcSet::from_json(&v).map_err(usage)?;
                let cfg = *x.cfg();
                let hd = hd_from_aisle(&cfg, &x).ok().map(|d| d.to_json(&cfg));
                let alt = alt_from_cot_aisle(&cfg, &x).ok().map(|d| d.to_json(&cfg));
                let torsion_class = is_torsion_class(&cfg, &x).map_err(usage)?;
                Ok(emit(ctx, json!({ "torsion_class": torsion_class, "t_aisle_of": hd, "cot_aisle_of": alt })))
            } else {
                Ok(emit(ctx, ctx.datum(&v)?.descriptor()?.to_json()))
            }
        }
        Command::Aisle | Command::Coaisle => {
            let d = ctx.datum(&ctx.read_input()?)?.descriptor()?;
            let set = if matches!(ctx.cli.command, Command::Aisle) { d.aisle } else { d.coaisle };
            Ok(emit(ctx, set.to_json()))
        }
        Command::Heart | Command::Coheart => {
            let arcs = match ctx.datum(&ctx.read_input()?)? {
                Datum::Hd(c, d) if matches!(ctx.cli.command, Command::Heart) => t_heart(&c, &d),
                Datum::Alt(c, d) if matches!(ctx.cli.command, Command::Coheart) => cot_coheart(&c, &d),
                _ => return Err(usage("heart takes an hd datum, coheart an alt datum")),
            }
            .map_err(usage)?;
            Ok(emit(ctx, arcs_json(&arcs)))
        }
        Command::Complement => {
            let out = match ctx.datum(&ctx.read_input()?)? {
                Datum::Hd(c, d) => Datum::Hd(c, complement_hd(&d)),
                Datum::Alt(c, d) => Datum::Alt(c, complement_alt(&d)),
            };
            Ok(emit(ctx, out.to_json()))
        }
        Command::Lattice { op } => {
            let v = ctx.read_input()?;
            let [a, b] = v.as_array().map(Vec::as_slice).unwrap_or(&[]) else {
                return Err(usage("lattice expects a JSON array of two decorated partitions"));
            };
            let desc = match (ctx.datum(a)?, ctx.datum(b)?, op) {
                (Datum::Hd(c, x), Datum::Hd(c2, y), op) if c == c2 => match op {
                    Op::Meet => tt_meet(&c, &x, &y),
                    Op::Join => tt_join(&c, &x, &y),
                },
                (Datum::Alt(c, x), Datum::Alt(c2, y), op) if c == c2 => match op {
                    Op::Meet => cot_meet(&c, &x, &y),
                    Op::Join => cot_join(&c, &x, &y),
                },
                _ => return Err(usage("both operands need the same kind and the same m")),
            }
            .map_err(usage)?;
            Ok(emit(ctx, desc.to_json()))
        }
        Command::Check => {
            let x = SymArcSet::from_json(&ctx.read_input()?).map_err(usage)?;
            let cfg = *x.cfg();
            let out = if x.model() == Model::Bar {
                json!({
                    "PC": check_ovl_pc(&cfg, &x).map_err(usage)?,
                    "PE": check_ovl_pe(&cfg, &x).map_err(usage)?,
                    "PT": check_ovl_pt(&cfg, &x).map_err(usage)?,
                    "t_aisle": is_t_aisle(&cfg, &x).map_err(usage)?,
                    "cot_aisle": is_cot_aisle(&cfg, &x).map_err(usage)?,
                })
            } else {
                json!({ "PC": infgon::arcsets::check_pc_2m(&cfg, &x).map_err(usage)? })
            };
            Ok(emit(ctx, out))
        }
        Command::Verify { suite, k } => {
            let cfg = || ctx.cfg(None);
            let w = ctx.cli.window;
            let report = match suite {
                Suite::Hom => verify_hom(&cfg()?, w.unwrap_or(4)),
                Suite::Torsion => verify_torsion_suite(&cfg()?, -2, 2, w.unwrap_or(6)),
                Suite::Roundtrip => {
                    let b = w.unwrap_or(3);
                    verify_roundtrip(&cfg()?, -b, b)
                }
                Suite::Lattice => verify_lattice(*k),
                Suite::Counts => verify_counts(&cfg()?, w.unwrap_or(3)),
            };
            report_out(ctx, &report)
        }
        Command::Enumerate => {
            let cfg = ctx.cfg(None)?;
            let w = ctx.cli.window.unwrap_or(1);
            let data: Vec<Value> = match ctx.cli.kind {
                Some(Kind::Hd) => enumerate_hd(&cfg, -w, w).iter().map(|d| d.to_json(&cfg)).collect(),
                Some(Kind::Alt) => enumerate_alt(&cfg, -w, w).iter().map(|d| d.to_json(&cfg)).collect(),
                None => return Err(usage("enumerate needs --kind")),
            };
            Ok(match ctx.format(Format::Json) {
                Format::Table => format!("{} structures\n{}", data.len(), table_of(&Value::Array(data))),
                _ => pretty(&Value::Array(data)),
            })
        }
        Command::Hom => {
            let v = ctx.read_input()?;
            let cfg = ctx.cfg(Some(&v))?;
            let model: Model =
                serde_json::from_value(v.get("model").cloned().unwrap_or(json!("bar"))).map_err(usage)?;
            let arc = |key: &str| {
                let raw = v.get(key).ok_or_else(|| usage(format!("missing \"{key}\"")))?;
                Arc::from_json(&cfg, model, raw).map_err(usage)
            };
            let (a, b) = (arc("a")?, arc("b")?);
            let mid = middle_term(&cfg, &a, &b).ok().map(|e| arcs_json(&e));
            Ok(emit(
                ctx,
                json!({
                    "hom": hom_dim(&cfg, &a, &b),
                    "hom_reverse": hom_dim(&cfg, &b, &a),
                    "ext_related": ext_related(&cfg, &a, &b),
                    "middle_term": mid,
                }),
            ))
        }
        Command::Render => {
            let d = ctx.datum(&ctx.read_input()?)?.descriptor()?;
            match ctx.format(Format::Svg) {
                Format::Svg => Ok(render::svg(&d, ctx.cli.window.unwrap_or(4))),
                _ => Ok(emit(ctx, d.to_json())),
            }
        }
    }
}

fn write_out(ctx: &Ctx, text: &str) -> io::Result<()> {
    match &ctx.cli.out {
        Some(p) => fs::write(p, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let ctx = Ctx { cli: Cli::parse() };
    let (text, code) = match run(&ctx) {
        Ok(text) => (text, 0),
        Err(Failure::Verification(text)) => (text, 1),
        Err(Failure::Usage(msg)) => {
            eprintln!("infgon: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = write_out(&ctx, &text) {
        eprintln!("infgon: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
