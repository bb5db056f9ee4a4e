//! Command-line front end.
//!
//! Each command prints a human-readable summary; `--json` appends a
//! key-sorted machine record. Exit status is 0 on success and 2 on any
//! input error.

pub mod document;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::cabling::{cable_interval, cable_interval_lspace_ambient, cable_interval_s3_basis};
use crate::error::{Error, Result};
use crate::gluing::{closed_union_is_lspace, GluingCase, Side};
use crate::graph::{
    analyze, foliation_sets, is_generalized_solid_torus, oracle_check, Analysis, SlopeStatus,
    TreeManifold,
};
use crate::intervals::{render_circle, GluingMatrix, LInterval};
use crate::rationals::ExtRat;
use crate::seifert::Endpoints;

pub use document::{parse_tree, render_interval, render_tree};

#[derive(Parser, Debug)]
#[command(
    name = "lspace",
    version,
    about = "L-space filling intervals of graph manifolds with torus boundary"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Output {
    /// Append a machine-readable JSON record.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the interval of L-space filling slopes.
    Interval {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
        /// Repeat every endpoint search to ten times its bound and compare.
        #[arg(long)]
        oracle: bool,
        /// Sketch the interval on the slope circle.
        #[arg(long)]
        render_circle: bool,
    },
    /// Print the Floer-simplicity verdict and its witnesses.
    Classify {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
        #[arg(long)]
        oracle: bool,
    },
    /// Decide whether the filling along SLOPE is an L-space.
    Filling {
        file: PathBuf,
        #[arg(allow_hyphen_values = true)]
        slope: String,
        #[command(flatten)]
        out: Output,
    },
    /// Print the foliation slopes and the fiber-slope filling decomposition.
    Foliation {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Decide whether the union of two trees glued by a matrix is an L-space.
    Glue {
        first: PathBuf,
        second: PathBuf,
        /// Entries a b c d of [[a, b], [c, d]], from slopes of FIRST to slopes of SECOND.
        #[arg(long, num_args = 4, allow_negative_numbers = true, value_names = ["A", "B", "C", "D"], required = true)]
        matrix: Vec<i64>,
        #[command(flatten)]
        out: Output,
    },
    /// Interval of the (p, q)-cable of a knot complement with interval [LEFT, RIGHT].
    Cable {
        #[arg(long)]
        p: i64,
        #[arg(long, allow_negative_numbers = true)]
        q: i64,
        #[arg(long, num_args = 2, allow_hyphen_values = true, value_names = ["LEFT", "RIGHT"], required = true)]
        interval: Vec<String>,
        /// Report the result in the conventional basis for knots in S3.
        #[arg(long)]
        s3_basis: bool,
        /// The meridional filling is an L-space; cross-check the {inf} case.
        #[arg(long)]
        lspace_ambient: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Decide whether the tree is a generalized solid torus.
    Gst {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
}

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn load(path: &Path) -> Result<TreeManifold> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_tree(&text).map_err(|e| match e {
        Error::Document {
            path: field,
            message,
        } => Error::Document {
            path: format!("{}: {field}", path.display()),
            message,
        },
        other => other,
    })
}

fn slope_arg(s: &str) -> Result<ExtRat> {
    s.parse()
}

fn emit(human: String, record: Value, json: bool) -> String {
    if json {
        let pretty = serde_json::to_string_pretty(&record).expect("values serialize");
        format!("{human}{pretty}\n")
    } else {
        human
    }
}

fn endpoints_json(e: Option<&Endpoints>) -> Value {
    match e {
        None => Value::Null,
        Some(e) => json!({
            "lower": e.lower.value.to_string(),
            "lower_k": e.lower.witness,
            "upper": e.upper.value.to_string(),
            "upper_k": e.upper.witness,
        }),
    }
}

fn interval_json(i: &LInterval) -> Value {
    let mut v = render_interval(i);
    v["text"] = json!(i.to_string());
    v
}

fn analysis_json(a: &Analysis) -> Value {
    let w = &a.classification.witnesses;
    json!({
        "verdict": a.verdict().label(),
        "daughter": a.verdict().daughter(),
        "interval": interval_json(&a.interval),
        "daughter_intervals": w.daughter_intervals.iter().map(interval_json).collect::<Vec<_>>(),
        "minus_infinity": w.minus_infinity,
        "plus_infinity": w.plus_infinity,
        "empty_daughters": w.empty_daughters,
        "exceptional_fibers": w.exceptional_fibers,
        "integral_daughter_endpoints": w.integral_daughter_endpoints,
        "endpoints": endpoints_json(w.endpoints.as_ref()),
    })
}

fn index_list(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn dispatch(command: Command) -> Result<String> {
    match command {
        Command::Interval {
            file,
            out,
            oracle,
            render_circle: circle,
        } => {
            let y = load(&file)?;
            let a = analyze(&y)?;
            let mut human = format!("L(Y) = {}  ({})\n", a.interval, a.verdict());
            if oracle {
                oracle_check(&y)?;
                human.push_str("oracle: endpoint searches agree at 10x the bound\n");
            }
            if circle {
                human.push_str(&render_circle(&a.interval));
                human.push('\n');
            }
            let record = json!({
                "command": "interval",
                "interval": interval_json(&a.interval),
                "verdict": a.verdict().label(),
                "endpoints": endpoints_json(a.endpoints()),
                "oracle_checked": oracle,
            });
            Ok(emit(human, record, out.json))
        }
        Command::Classify { file, out, oracle } => {
            let y = load(&file)?;
            let a = analyze(&y)?;
            let w = &a.classification.witnesses;
            let mut human = match a.verdict().daughter() {
                Some(j) => format!("verdict: {} (daughter {j})\n", a.verdict()),
                None => format!("verdict: {}\n", a.verdict()),
            };
            for (i, d) in w.daughter_intervals.iter().enumerate() {
                human.push_str(&format!("daughters[{i}]: {d}\n"));
            }
            human.push_str(&format!(
                "I(-inf) = {}  I(+inf) = {}\n",
                index_list(&w.minus_infinity),
                index_list(&w.plus_infinity)
            ));
            if let Some(e) = &w.endpoints {
                human.push_str(&format!(
                    "y- = {} (k = {})  y+ = {} (k = {})\n",
                    e.lower.value, e.lower.witness, e.upper.value, e.upper.witness
                ));
            }
            if !w.empty_daughters.is_empty() {
                human.push_str(&format!(
                    "warning: empty daughter intervals at {}\n",
                    index_list(&w.empty_daughters)
                ));
            }
            if oracle {
                oracle_check(&y)?;
                human.push_str("oracle: endpoint searches agree at 10x the bound\n");
            }
            human.push_str(&format!("L(Y) = {}\n", a.interval));
            let mut record = analysis_json(&a);
            record["command"] = json!("classify");
            Ok(emit(human, record, out.json))
        }
        Command::Filling { file, slope, out } => {
            let y = load(&file)?;
            let s = slope_arg(&slope)?;
            let a = analyze(&y)?;
            let lspace = a.interval.contains(&s);
            let human = format!("L-space: {}\n", yes_no(lspace));
            let record = json!({
                "command": "filling",
                "slope": s.to_string(),
                "lspace": lspace,
                "interval": interval_json(&a.interval),
            });
            Ok(emit(human, record, out.json))
        }
        Command::Foliation { file, out } => {
            let y = load(&file)?;
            let f = foliation_sets(&y)?;
            let mut human = format!("L(Y) = {}\nF(Y) = {}\n", f.interval, f.foliation_slopes);
            let mut inf_record = Value::Null;
            if let Some(fd) = &f.infinity_filling {
                let parts: Vec<String> = fd.summands.iter().map(ToString::to_string).collect();
                let reducible = match fd.reducible {
                    Some(b) => yes_no(b),
                    None => "unknown",
                };
                human.push_str(&format!("Y(inf) = {}\n", parts.join(" # ")));
                human.push_str(&format!(
                    "Y(inf) L-space: {}  reducible: {reducible}\n",
                    yes_no(fd.lspace)
                ));
                inf_record = json!({
                    "summands": parts,
                    "lspace": fd.lspace,
                    "reducible": fd.reducible,
                });
            }
            let inf_status = match f.status(&ExtRat::Infinity) {
                SlopeStatus::LSpace => "lspace",
                SlopeStatus::NotLSpace {
                    reducible: Some(true),
                } => "reducible",
                SlopeStatus::NotLSpace {
                    reducible: Some(false),
                } => "foliated",
                SlopeStatus::NotLSpace { reducible: None } => "not-lspace",
            };
            let record = json!({
                "command": "foliation",
                "interval": interval_json(&f.interval),
                "foliation_slopes": f.foliation_slopes.to_string(),
                "infinity_filling": inf_record,
                "infinity_status": inf_status,
            });
            Ok(emit(human, record, out.json))
        }
        Command::Glue {
            first,
            second,
            matrix,
            out,
        } => {
            let y1 = load(&first)?;
            let y2 = load(&second)?;
            let m = GluingMatrix::from_i64(matrix[0], matrix[1], matrix[2], matrix[3])?;
            let v = closed_union_is_lspace(&y1, &y2, &m)?;
            let (tag, detail, extra) = match &v.case {
                GluingCase::Cover {
                    first_pushed,
                    second,
                } => (
                    "cover",
                    format!("pushed interior {first_pushed}, interior {second}"),
                    json!({"first_pushed": first_pushed.to_string(), "second": second.to_string()}),
                ),
                GluingCase::DehnFilling {
                    filled,
                    slope,
                    interval,
                } => {
                    let side = match filled {
                        Side::First => "first",
                        Side::Second => "second",
                    };
                    (
                        "dehn-filling",
                        format!("{side} manifold filled along {slope}, L = {interval}"),
                        json!({"filled": side, "slope": slope.to_string(), "interval": interval_json(interval)}),
                    )
                }
                GluingCase::LensSpace {
                    first_meridian,
                    second_meridian,
                } => (
                    "lens-space",
                    format!("meridians {first_meridian} and {second_meridian}"),
                    json!({"first_meridian": first_meridian.to_string(), "second_meridian": second_meridian.to_string()}),
                ),
            };
            let human = format!("L-space: {}  ({tag}: {detail})\n", yes_no(v.lspace));
            let record = json!({
                "command": "glue",
                "lspace": v.lspace,
                "case": tag,
                "witness": extra,
            });
            Ok(emit(human, record, out.json))
        }
        Command::Cable {
            p,
            q,
            interval,
            s3_basis,
            lspace_ambient,
            out,
        } => {
            let lower = slope_arg(&interval[0])?;
            let upper = slope_arg(&interval[1])?;
            let c = if lspace_ambient {
                cable_interval_lspace_ambient(&lower, &upper, p, q)?
            } else {
                cable_interval(&lower, &upper, p, q)?
            };
            let result = if s3_basis {
                cable_interval_s3_basis(&c.interval, p, q)?
            } else {
                c.interval.clone()
            };
            let mut human = format!("{result}\n");
            if c.one_sided_infinite {
                human.push_str(
                    "note: exactly one companion endpoint maps to inf; the catch-all bracket case was used\n",
                );
            }
            let record = json!({
                "command": "cable",
                "p": c.params.p,
                "q": c.params.q,
                "pstar": c.params.pstar,
                "qstar": c.params.qstar,
                "basis": if s3_basis { "s3" } else { "cabling" },
                "interval": interval_json(&result),
                "y1_lower": c.y1_lower.to_string(),
                "y1_upper": c.y1_upper.to_string(),
                "endpoints": endpoints_json(Some(&Endpoints { lower: c.lower.clone(), upper: c.upper.clone() })),
                "one_sided_infinite": c.one_sided_infinite,
            });
            Ok(emit(human, record, out.json))
        }
        Command::Gst { file, out } => {
            let y = load(&file)?;
            let g = is_generalized_solid_torus(&y)?;
            let structural = match (&g.structural, &g.longitude) {
                (Some(_), _) => "agrees",
                (None, Some(ExtRat::Infinity)) => "skipped (longitude is the fiber slope)",
                (None, _) => "skipped (a leaf daughter hides the longitude)",
            };
            let longitude = g
                .longitude
                .as_ref()
                .map_or_else(|| "unknown".to_string(), ToString::to_string);
            let human = format!(
                "generalized solid torus: {}  (longitude {}, L(Y) = {})\niterated-cable check: {structural}\n",
                yes_no(g.is_gst),
                longitude,
                g.interval
            );
            let record = json!({
                "command": "gst",
                "is_gst": g.is_gst,
                "longitude": g.longitude.as_ref().map(ToString::to_string),
                "interval": interval_json(&g.interval),
                "structural": g.structural,
            });
            Ok(emit(human, record, out.json))
        }
    }
}
