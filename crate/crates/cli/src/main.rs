mod expr;

use std::process::ExitCode;

use braidnil::invariants::{
    b3_basis, dimension_table, hirsch, holonomy_det_by_elimination, holonomy_matrix,
    holonomy_matrix_in, orbit_partition, rank_l, HolonomyMatrix,
};
use braidnil::torsion::{
    build_cycle_type, build_order_n, conjugacy_decide, conjugacy_witness, delta_n_pow_n,
    torsion_spectrum, Residues,
};
use braidnil::verify::{
    verify_b3_subgroup, verify_bn_gamma3, verify_fulltwist, verify_pn_gamma3, B3Subgroup,
    RelationReport,
};
use braidnil::{BraidWord, NilElement, NilError};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use expr::{normal_form_text, EvalError, ParseError};

#[derive(Parser)]
#[command(name = "braidnil", version, about = "Exact arithmetic in B_n/Γ₃(P_n)")]
struct Cli {
    /// Number of strands.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Normal form of an expression or element.
    Collect {
        x: String,
    },
    Mul {
        a: String,
        b: String,
    },
    Inv {
        x: String,
    },
    Pow {
        x: String,
        #[arg(allow_negative_numbers = true)]
        m: i64,
    },
    Order {
        x: String,
    },
    /// `g x g⁻¹`.
    Conj {
        g: String,
        x: String,
    },
    /// `δ_{r,k}`; `k` defaults to the number of strands.
    Delta {
        #[arg(long, default_value_t = 0)]
        r: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// `δ_n^n` and its constant exponent on each orbit, for odd n.
    DeltaPow,
    /// Orbits of conjugation by δ_n on the basis of Γ₂/Γ₃.
    Orbits,
    /// Ranks of the lower central quotients of P_n up to `qmax`.
    Ranks {
        #[arg(long)]
        qmax: u32,
    },
    /// Dimensions of B_n/Γ_k(P_n).
    Table {
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        kmax: u32,
    },
    #[command(group(ArgGroup::new("mode").required(true).args(["spectrum", "cycle_type", "residues"])))]
    Torsion {
        /// Orders of torsion elements.
        #[arg(long)]
        spectrum: bool,
        /// Torsion element with the given cycle lengths, e.g. 5,7.
        #[arg(long, value_delimiter = ',')]
        cycle_type: Option<Vec<usize>>,
        /// θ δ_n from a residue matrix in JSON.
        #[arg(long)]
        residues: Option<String>,
    },
    /// Decide conjugacy of two finite-order elements.
    Conjugacy {
        a: String,
        b: String,
        #[arg(long)]
        witness: bool,
    },
    Holonomy {
        x: String,
        /// The basis (A_{1,3}, A_{2,3}, A_{1,2}, α_{1,2,3}), n = 3 only.
        #[arg(long = "b3-basis")]
        in_b3_basis: bool,
    },
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// For the b3 suite: trivial, order2, order3 or S3. All four if absent.
        #[arg(long)]
        subgroup: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Pn3,
    Bn3,
    B3,
    Fulltwist,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(#[from] NilError),
    #[error("{0}")]
    Eval(#[from] EvalError),
    #[error("verification failed")]
    Verification(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Parse(_) | CliError::Usage(_) => 2,
            CliError::Domain(NilError::Json(_)) => 2,
            CliError::Domain(_) | CliError::Eval(_) => 3,
        }
    }
}

type Out = Result<String, CliError>;

struct Ctx {
    n: Option<usize>,
    pretty: bool,
}

impl Ctx {
    fn strands(&self) -> Result<usize, CliError> {
        self.n
            .ok_or_else(|| CliError::Usage("--n is required".into()))
    }

    /// Arguments starting with `{` are element JSON, anything else an expression.
    fn element(&self, arg: &str) -> Result<NilElement, CliError> {
        if arg.trim_start().starts_with('{') {
            let x = NilElement::from_json(arg)?;
            if let Some(n) = self.n {
                if n != x.n() {
                    return Err(NilError::StrandMismatch {
                        left: n,
                        right: x.n(),
                    }
                    .into());
                }
            }
            return Ok(x);
        }
        let e = expr::parse(arg)?;
        Ok(e.eval(self.strands()?)?)
    }

    fn show(&self, x: &NilElement) -> String {
        if self.pretty {
            normal_form_text(x)
        } else {
            x.to_json()
        }
    }
}

fn element_value(x: &NilElement) -> Value {
    serde_json::from_str(&x.to_json()).expect("element JSON is valid")
}

fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let width: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    rows.iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .map(|(c, s)| format!("{:>w$}", s, w = width[c]))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn holonomy_out(h: &HolonomyMatrix, ctx: &Ctx) -> Out {
    let det2 = holonomy_det_by_elimination(h)?;
    if ctx.pretty {
        let mut labels: Vec<String> = h
            .pair_basis
            .iter()
            .map(|p| format!("A[{},{}]", p.0, p.1))
            .collect();
        labels.extend(
            h.triple_basis
                .iter()
                .map(|t| format!("a[{},{},{}]", t.0, t.1, t.2)),
        );
        let mut rows = vec![std::iter::once(String::new())
            .chain(labels.iter().cloned())
            .collect()];
        for (label, row) in labels.iter().zip(h.combined()) {
            rows.push(
                std::iter::once(label.clone())
                    .chain(row.iter().map(i64::to_string))
                    .collect(),
            );
        }
        return Ok(format!("{}\ndet = {}", aligned(&rows), h.det));
    }
    let v = json!({
        "block1": h.block1,
        "block2": h.block2,
        "det": h.det,
        "det_elimination": det2,
        "n": h.n,
        "pair_basis": h.pair_basis.iter().map(|p| [p.0, p.1]).collect::<Vec<_>>(),
        "triple_basis": h.triple_basis.iter().map(|t| [t.0, t.1, t.2]).collect::<Vec<_>>(),
    });
    Ok(v.to_string())
}

fn verify_out(reports: Vec<RelationReport>, ctx: &Ctx) -> Out {
    let passed = reports.iter().all(RelationReport::passed);
    let text = if ctx.pretty {
        reports
            .iter()
            .map(|r| {
                let held = r.total - r.failures.len();
                let mut line = format!(
                    "{} {}: {held}/{} relations hold",
                    if r.passed() { "pass" } else { "FAIL" },
                    r.suite,
                    r.total
                );
                for f in &r.failures {
                    line.push_str(&format!(
                        "\n  {}: {} != {}",
                        f.id,
                        normal_form_text(&f.left),
                        normal_form_text(&f.right)
                    ));
                }
                line
            })
            .collect::<Vec<_>>()
            .join("\n")
    } else {
        json!({
            "passed": passed,
            "reports": reports.iter().map(RelationReport::to_json).collect::<Vec<_>>(),
        })
        .to_string()
    };
    if passed {
        Ok(text)
    } else {
        Err(CliError::Verification(text))
    }
}

fn run(cli: Cli) -> Out {
    let ctx = Ctx {
        n: cli.n,
        pretty: cli.pretty,
    };
    match cli.cmd {
        Cmd::Collect { x } => Ok(ctx.show(&ctx.element(&x)?)),
        Cmd::Mul { a, b } => Ok(ctx.show(&ctx.element(&a)?.mul(&ctx.element(&b)?)?)),
        Cmd::Inv { x } => Ok(ctx.show(&ctx.element(&x)?.inv()?)),
        Cmd::Pow { x, m } => Ok(ctx.show(&ctx.element(&x)?.pow(m)?)),
        Cmd::Order { x } => Ok(ctx.element(&x)?.order()?.to_string()),
        Cmd::Conj { g, x } => {
            Ok(ctx.show(&NilElement::conj(&ctx.element(&g)?, &ctx.element(&x)?)?))
        }
        Cmd::Delta { r, k } => {
            let n = ctx.strands()?;
            let w = BraidWord::delta_word(r, k.unwrap_or(n), n)?;
            Ok(ctx.show(&NilElement::collect(&w)?))
        }
        Cmd::DeltaPow => {
            let n = ctx.strands()?;
            let dp = delta_n_pow_n(n)?;
            if ctx.pretty {
                let mut rows = vec![vec![
                    "orbit".to_string(),
                    "length".into(),
                    "m".into(),
                    "first".into(),
                ]];
                for (i, (orb, m)) in dp.orbits.orbits.iter().zip(&dp.m).enumerate() {
                    let t = orb[0].triple;
                    rows.push(vec![
                        (i + 1).to_string(),
                        orb.len().to_string(),
                        m.to_string(),
                        format!("a[{},{},{}]", t.0, t.1, t.2),
                    ]);
                }
                return Ok(aligned(&rows));
            }
            let x = NilElement::from_parts(
                braidnil::Permutation::identity(n),
                braidnil::PurePart::zero(n),
                dp.comm,
            )?;
            Ok(json!({"m": dp.m, "n": n, "power": element_value(&x)}).to_string())
        }
        Cmd::Orbits => {
            let ob = orbit_partition(ctx.strands()?)?;
            if ctx.pretty {
                let mut lines = Vec::new();
                if !ob.in_stated_range {
                    lines.push(format!("note: n = {} is outside the range n >= 5", ob.n));
                }
                for (i, orb) in ob.orbits.iter().enumerate() {
                    let items: Vec<String> = orb
                        .iter()
                        .map(|s| {
                            let t = s.triple;
                            let sign = if s.sign < 0 { "-" } else { "" };
                            format!("{sign}a[{},{},{}]", t.0, t.1, t.2)
                        })
                        .collect();
                    lines.push(format!("{} ({}): {}", i + 1, orb.len(), items.join(" ")));
                }
                return Ok(lines.join("\n"));
            }
            let orbits: Vec<Vec<[i64; 4]>> = ob
                .orbits
                .iter()
                .map(|o| {
                    o.iter()
                        .map(|s| {
                            [
                                s.triple.0 as i64,
                                s.triple.1 as i64,
                                s.triple.2 as i64,
                                s.sign.into(),
                            ]
                        })
                        .collect()
                })
                .collect();
            Ok(
                json!({"in_stated_range": ob.in_stated_range, "n": ob.n, "orbits": orbits})
                    .to_string(),
            )
        }
        Cmd::Ranks { qmax } => {
            let n = ctx.strands()?;
            let mut ranks = Vec::new();
            for q in 1..=qmax {
                ranks.push(rank_l(n, q)?);
            }
            let h = hirsch(n, qmax + 1)?;
            if ctx.pretty {
                let mut rows = vec![vec!["q".to_string(), "rank".into()]];
                rows.extend(
                    ranks
                        .iter()
                        .enumerate()
                        .map(|(i, r)| vec![(i + 1).to_string(), r.to_string()]),
                );
                return Ok(format!("{}\ntotal = {h}", aligned(&rows)));
            }
            let items: Vec<String> = ranks
                .iter()
                .enumerate()
                .map(|(i, r)| format!(r#"{{"q":{},"rank":{r}}}"#, i + 1))
                .collect();
            Ok(format!(
                r#"{{"n":{n},"ranks":[{}],"total":{h}}}"#,
                items.join(",")
            ))
        }
        Cmd::Table { nmax, kmax } => {
            let t = dimension_table(nmax, kmax)?;
            Ok(if ctx.pretty {
                t.render().trim_end().to_string()
            } else {
                t.to_json()
            })
        }
        Cmd::Torsion {
            spectrum,
            cycle_type,
            residues,
        } => {
            if spectrum {
                let n = ctx.strands()?;
                let s: Vec<u64> = torsion_spectrum(n).into_iter().collect();
                if ctx.pretty {
                    return Ok(s.iter().map(u64::to_string).collect::<Vec<_>>().join(" "));
                }
                return Ok(json!({"n": n, "spectrum": s}).to_string());
            }
            let x = match (cycle_type, residues) {
                (Some(parts), _) => build_cycle_type(ctx.strands()?, &parts)?,
                (None, Some(text)) => {
                    let r = Residues::from_json(&text)?;
                    if ctx.n.is_some_and(|n| n != r.n) {
                        return Err(NilError::StrandMismatch {
                            left: ctx.n.unwrap_or(0),
                            right: r.n,
                        }
                        .into());
                    }
                    build_order_n(&r)?
                }
                (None, None) => unreachable!("clap requires one mode"),
            };
            Ok(ctx.show(&x))
        }
        Cmd::Conjugacy { a, b, witness } => {
            let (a, b) = (ctx.element(&a)?, ctx.element(&b)?);
            let d = conjugacy_decide(&a, &b)?;
            let mut v = json!({"conjugate": d.conjugate, "in_proven_range": d.in_proven_range});
            let mut g = None;
            if witness && d.conjugate {
                g = conjugacy_witness(&a, &b)?;
            }
            if ctx.pretty {
                let mut s = if d.conjugate {
                    "conjugate"
                } else {
                    "not conjugate"
                }
                .to_string();
                if !d.in_proven_range {
                    s.push_str(" (n < 5: outside the proven range)");
                }
                if let Some(g) = &g {
                    s.push_str(&format!("\nwitness: {}", normal_form_text(g)));
                }
                return Ok(s);
            }
            if witness {
                v["witness"] = g.as_ref().map_or(Value::Null, element_value);
            }
            Ok(v.to_string())
        }
        Cmd::Holonomy { x, in_b3_basis } => {
            let g = ctx.element(&x)?;
            let h = if in_b3_basis {
                if g.n() != 3 {
                    return Err(CliError::Usage("--b3-basis needs n = 3".into()));
                }
                let (pb, tb) = b3_basis();
                holonomy_matrix_in(&g, Some(&pb), Some(&tb))?
            } else {
                holonomy_matrix(&g)?
            };
            holonomy_out(&h, &ctx)
        }
        Cmd::Verify { suite, subgroup } => {
            let reports = match suite {
                Suite::Pn3 => vec![verify_pn_gamma3(ctx.strands()?)?],
                Suite::Bn3 => vec![verify_bn_gamma3(ctx.strands()?)?],
                Suite::Fulltwist => vec![verify_fulltwist(ctx.strands()?)?],
                Suite::B3 => {
                    let hs = match subgroup {
                        Some(s) => vec![B3Subgroup::parse(&s)
                            .ok_or_else(|| CliError::Usage(format!("unknown subgroup '{s}'")))?],
                        None => B3Subgroup::ALL.to_vec(),
                    };
                    hs.into_iter()
                        .map(verify_b3_subgroup)
                        .collect::<Result<_, _>>()?
                }
            };
            verify_out(reports, &ctx)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(CliError::Verification(text)) => {
            println!("{text}");
            eprintln!("error: verification failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
