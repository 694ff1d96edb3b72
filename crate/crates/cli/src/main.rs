use std::collections::BTreeMap;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use crystbraid::emit::{auto_json, auto_text, matrix_json, matrix_text};
use crystbraid::suite::{self, DEFAULT_SEED};
use crystbraid_core::autreps::{auto_equal, rep_auto, AutRep};
use crystbraid_core::presentations::{relation_instances, Polarity, PresentationId};
use crystbraid_core::reps::{element_order, quotient_equal, relation_report, rep_matrix, MatrixRep, OrderResult};
use crystbraid_core::schreier::{rs_rewrite, schreier_generators, Transversal};
use crystbraid_core::tn::{tn_is_trivial, tn_min_support, tn_normal_form};
use crystbraid_core::vp3::Vp3Model;
use crystbraid_core::words::{lex, parse_word, Family, GenSym, GroupTag, GroupWord, PermHom, Token};
use crystbraid_core::LaurentPoly;
use serde_json::json;

// Like println!, but a closed pipe ends output quietly.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

#[derive(Parser)]
#[command(name = "crystbraid", version, about = "Exact computations in braid-like groups")]
struct Cli {
    /// Number of strands.
    #[arg(long, global = true, default_value_t = 3)]
    strands: usize,
    /// Group of the input words (B, VB, WB, UB, T, S); inferred when omitted.
    #[arg(long, global = true)]
    group: Option<String>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the randomized suite checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Matrix of a word under a linear representation.
    Matrix {
        /// Representation id (lbk, lbk_printed, lbk_special, psi1t, PsiV, theta, artin, welded, eps, phi, psi, xi, phi_tilde, psi_tilde, Psi_big).
        #[arg(long)]
        rep: String,
        /// Representation parameters, `name=value,...`.
        #[arg(long)]
        params: Option<String>,
        /// Input word.
        #[arg(long)]
        word: String,
    },
    /// Order of a word's image under psi1t or PsiV.
    Order {
        /// Representation id (lbk, lbk_printed, lbk_special, psi1t, PsiV, theta, artin, welded, eps, phi, psi, xi, phi_tilde, psi_tilde, Psi_big).
        #[arg(long)]
        rep: String,
        /// Representation parameters, `name=value,...`.
        #[arg(long)]
        params: Option<String>,
        /// Input word.
        #[arg(long)]
        word: String,
    },
    /// Whether two words have the same image.
    Equal {
        /// Representation id (lbk, lbk_printed, lbk_special, psi1t, PsiV, theta, artin, welded, eps, phi, psi, xi, phi_tilde, psi_tilde, Psi_big).
        #[arg(long)]
        rep: String,
        /// Representation parameters, `name=value,...`.
        #[arg(long)]
        params: Option<String>,
        /// First word.
        #[arg(long)]
        w1: String,
        /// Second word.
        #[arg(long)]
        w2: String,
    },
    /// Check every instance of a relation family under a representation.
    Verify {
        /// Relation family (braid, vb-mixed, welded-forbidden, ...).
        #[arg(long)]
        pres: String,
        /// Representation id (lbk, lbk_printed, lbk_special, psi1t, PsiV, theta, artin, welded, eps, phi, psi, xi, phi_tilde, psi_tilde, Psi_big).
        #[arg(long)]
        rep: String,
        /// Representation parameters, `name=value,...`.
        #[arg(long)]
        params: Option<String>,
        /// Substitutions applied before comparing, `t2=t1,...`.
        #[arg(long)]
        specialize: Option<String>,
    },
    /// Free group automorphism of a word.
    Auto {
        /// Representation id (lbk, lbk_printed, lbk_special, psi1t, PsiV, theta, artin, welded, eps, phi, psi, xi, phi_tilde, psi_tilde, Psi_big).
        #[arg(long)]
        rep: String,
        /// Representation parameters, `name=value,...`.
        #[arg(long)]
        params: Option<String>,
        /// Input word.
        #[arg(long)]
        word: String,
        /// Apply the automorphism to this free word instead of listing images.
        #[arg(long)]
        apply: Option<String>,
    },
    /// Normal form and minimal support of a T_n word.
    Tnf {
        /// T_n word in t letters.
        #[arg(long)]
        word: String,
    },
    /// Free product model of VP_3.
    Vp3 {
        /// Verify the six relations, the recompositions and the control.
        #[arg(long)]
        check: bool,
        /// Lambda word to bring to model normal form.
        #[arg(long)]
        word: Option<String>,
    },
    /// Reidemeister-Schreier generators, or the rewriting of a kernel word.
    Rs {
        /// Permutation homomorphism (phiB, nu, mu, piU).
        #[arg(long)]
        hom: Option<String>,
        /// Letters to generate from: `t`, `s`, or a list such as `t1,t2`.
        #[arg(long)]
        letters: Option<String>,
        /// Kernel word to rewrite in Schreier generators.
        #[arg(long)]
        word: Option<String>,
    },
    /// Run the registered claims.
    Suite {
        /// Claim id prefix.
        claim: Option<String>,
        /// List claim ids without running them.
        #[arg(long)]
        list: bool,
        /// Append wall-clock times to each record.
        #[arg(long)]
        timings: bool,
    },
}

enum AnyRep {
    Matrix(MatrixRep),
    Auto(AutRep),
}

fn parse_params(text: Option<&str>) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for part in text.unwrap_or("").split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| anyhow!("parameter `{part}` is not name=value"))?;
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

fn parse_rep(name: &str, params: Option<&str>) -> Result<AnyRep> {
    let params = parse_params(params)?;
    match MatrixRep::parse(name, &params) {
        Ok(r) => return Ok(AnyRep::Matrix(r)),
        Err(crystbraid_core::Error::UnknownRepresentation(_)) => {}
        Err(e) => return Err(e.into()),
    }
    let ints = params
        .iter()
        .map(|(k, v)| Ok((k.clone(), v.parse::<i64>().with_context(|| format!("parameter {k} must be an integer"))?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(AnyRep::Auto(AutRep::parse(name, &ints)?))
}

fn default_group(rep: &AnyRep) -> GroupTag {
    match rep {
        AnyRep::Matrix(MatrixRep::PsiV) => GroupTag::VB,
        AnyRep::Matrix(MatrixRep::Theta) => GroupTag::T,
        AnyRep::Matrix(_) => GroupTag::B,
        AnyRep::Auto(AutRep::Artin) => GroupTag::B,
        AnyRep::Auto(AutRep::Welded) => GroupTag::WB,
        AnyRep::Auto(AutRep::PhiTilde(_) | AutRep::PsiTilde(..) | AutRep::PsiBig(..)) => GroupTag::UB,
        AnyRep::Auto(_) => GroupTag::T,
    }
}

struct Ctx {
    n: usize,
    group: Option<GroupTag>,
    json: bool,
}

impl Ctx {
    fn tag(&self, fallback: GroupTag) -> GroupTag {
        self.group.unwrap_or(fallback)
    }

    fn word(&self, text: &str, fallback: GroupTag) -> Result<GroupWord> {
        parse_word(text, self.tag(fallback), self.n).with_context(|| format!("parsing `{text}`"))
    }
}

fn print_json(v: &serde_json::Value) {
    out!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn order_json(o: OrderResult) -> serde_json::Value {
    match o {
        OrderResult::Finite(m) => json!({ "order": "finite", "m": m }),
        OrderResult::Infinite => json!({ "order": "infinite" }),
    }
}

fn specialization(text: Option<&str>, rep: &MatrixRep, n: usize) -> Result<Vec<(String, LaurentPoly)>> {
    let vars = rep.vars(n);
    parse_params(text)?
        .into_iter()
        .map(|(k, v)| Ok((k, LaurentPoly::parse(&vars, &v)?)))
        .collect()
}

fn verify(ctx: &Ctx, pres: &str, rep: &AnyRep, specialize: Option<&str>) -> Result<()> {
    let pres = PresentationId::parse(pres)?;
    let n = ctx.n;
    match rep {
        AnyRep::Matrix(rep) => {
            let subst = specialization(specialize, rep, n)?;
            let report = relation_report(pres, rep, n, &subst)?;
            if ctx.json {
                let rows: Vec<_> = report
                    .iter()
                    .map(|o| {
                        json!({
                            "label": o.label,
                            "family": o.family,
                            "lhs": o.lhs,
                            "rhs": o.rhs,
                            "asserted": if o.polarity == Polarity::Equal { "equal" } else { "unequal" },
                            "images_equal": o.images_equal,
                            "status": o.status.to_string(),
                            "paths_agree": o.paths_agree,
                            "witness": o.witness.as_ref().map(|w| json!({ "basis": w.basis, "lhs": w.lhs, "rhs": w.rhs })),
                        })
                    })
                    .collect();
                print_json(&json!(rows));
            } else {
                for o in &report {
                    let mut line = format!("{:<28} {:<6} {} = {}", o.label, o.status.to_string(), o.lhs, o.rhs);
                    if let Some(w) = &o.witness {
                        line.push_str(&format!("  [{}: {} | {}]", w.basis, w.lhs, w.rhs));
                    }
                    if !o.paths_agree {
                        line.push_str("  [evaluation paths disagree]");
                    }
                    out!("{line}");
                }
            }
        }
        AnyRep::Auto(rep) => {
            if specialize.is_some() {
                bail!("--specialize applies to matrix representations only");
            }
            let mut rows = Vec::new();
            for r in relation_instances(pres, n)? {
                let equal = rep_auto(*rep, n, &r.lhs)? == rep_auto(*rep, n, &r.rhs)?;
                let holds = equal == (r.polarity == Polarity::Equal);
                rows.push((r, equal, holds));
            }
            if ctx.json {
                let v: Vec<_> = rows
                    .iter()
                    .map(|(r, equal, holds)| {
                        json!({ "label": r.label, "family": r.family, "lhs": r.lhs.to_string(), "rhs": r.rhs.to_string(),
                                "images_equal": equal, "status": if *holds { "holds" } else { "fails" } })
                    })
                    .collect();
                print_json(&json!(v));
            } else {
                for (r, _, holds) in &rows {
                    out!("{:<28} {:<6} {} = {}", r.label, if *holds { "holds" } else { "fails" }, r.lhs, r.rhs);
                }
            }
        }
    }
    Ok(())
}

fn rs_letters(letters: Option<&str>, tag: GroupTag, n: usize) -> Result<Vec<GenSym>> {
    let family_letters = |f: Family| (1..n).map(|i| GenSym::new(f, i)).collect::<Vec<_>>();
    let choice = letters.unwrap_or(if tag == GroupTag::UB || tag == GroupTag::T { "t" } else { "s" });
    Ok(match choice {
        "t" => family_letters(Family::Tau),
        "s" => family_letters(Family::Sigma),
        "r" => family_letters(Family::Rho),
        other => {
            let mut out = Vec::new();
            for tok in lex(&other.replace(',', " "))? {
                match tok {
                    Token::Gen(g, 1) => out.push(g),
                    _ => bail!("letters must be plain generators, got `{other}`"),
                }
            }
            out
        }
    })
}

fn default_hom(tag: GroupTag) -> PermHom {
    match tag {
        GroupTag::B => PermHom::PhiB,
        GroupTag::VB | GroupTag::WB => PermHom::Nu,
        _ => PermHom::PiU,
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let group = cli.group.as_deref().map(GroupTag::parse).transpose()?;
    let ctx = Ctx { n: cli.strands, group, json: cli.json };
    match cli.cmd {
        Cmd::Matrix { rep, params, word } => {
            let AnyRep::Matrix(rep) = parse_rep(&rep, params.as_deref())? else {
                bail!("`{rep}` is not a matrix representation");
            };
            let w = ctx.word(&word, default_group(&AnyRep::Matrix(rep.clone())))?;
            let m = rep_matrix(&rep, ctx.n, &w)?;
            if ctx.json {
                print_json(&matrix_json(&m));
            } else {
                out!("{}", matrix_text(&m));
            }
        }
        Cmd::Order { rep, params, word } => {
            let AnyRep::Matrix(rep) = parse_rep(&rep, params.as_deref())? else {
                bail!("`{rep}` is not a matrix representation");
            };
            let w = ctx.word(&word, default_group(&AnyRep::Matrix(rep.clone())))?;
            let o = element_order(&rep, ctx.n, &w)?;
            if ctx.json {
                print_json(&order_json(o));
            } else {
                out!("{o}");
            }
        }
        Cmd::Equal { rep, params, w1, w2 } => {
            let rep = parse_rep(&rep, params.as_deref())?;
            let tag = default_group(&rep);
            let (u, v) = (ctx.word(&w1, tag)?, ctx.word(&w2, tag)?);
            let eq = match &rep {
                AnyRep::Matrix(r) => quotient_equal(r, ctx.n, &u, &v)?,
                AnyRep::Auto(r) => auto_equal(*r, ctx.n, &u, &v)?,
            };
            if ctx.json {
                print_json(&json!({ "equal": eq }));
            } else {
                out!("{eq}");
            }
        }
        Cmd::Verify { pres, rep, params, specialize } => {
            let rep = parse_rep(&rep, params.as_deref())?;
            verify(&ctx, &pres, &rep, specialize.as_deref())?;
        }
        Cmd::Auto { rep, params, word, apply } => {
            let AnyRep::Auto(rep) = parse_rep(&rep, params.as_deref())? else {
                bail!("`{rep}` is not an automorphism representation");
            };
            let w = ctx.word(&word, default_group(&AnyRep::Auto(rep)))?;
            let a = rep_auto(rep, ctx.n, &w)?;
            match apply {
                Some(x) => {
                    let x = a.basis().parse_word(&x)?;
                    let image = a.apply(&x);
                    if ctx.json {
                        print_json(&json!({ "input": x.to_string(), "image": image.to_string() }));
                    } else {
                        out!("{image}");
                    }
                }
                None if ctx.json => print_json(&auto_json(&a)),
                None => out!("{}", auto_text(&a)),
            }
        }
        Cmd::Tnf { word } => {
            let w = ctx.word(&word, GroupTag::T)?;
            let nf = tn_normal_form(&w)?;
            let support = tn_min_support(&w)?;
            let trivial = tn_is_trivial(&w)?;
            if ctx.json {
                print_json(&json!({ "normal_form": nf.to_string(), "min_support": support, "trivial": trivial }));
            } else {
                out!("normal form: {}", if nf.is_empty() { "1".to_string() } else { nf.to_string() });
                out!("min support: {}", support.map_or("none".to_string(), |s| format!("t{s}")));
            }
        }
        Cmd::Vp3 { check, word } => {
            let m = Vp3Model::new();
            if !check && word.is_none() {
                bail!("vp3 needs --check or --word");
            }
            if check {
                let mut checks = m.verify_vp3_relations();
                checks.extend(m.recomposition_checks());
                checks.push(m.negative_control());
                if ctx.json {
                    let v: Vec<_> = checks
                        .iter()
                        .map(|c| json!({ "label": c.label, "lhs": c.lhs, "rhs": c.rhs, "holds": c.holds, "residue": c.residue.to_string() }))
                        .collect();
                    print_json(&json!(v));
                } else {
                    for c in &checks {
                        out!("{:<18} {:<6} {} = {}", c.label, if c.holds { "holds" } else { "fails" }, c.lhs, c.rhs);
                    }
                }
            }
            if let Some(text) = word {
                let e = m.eval(&text)?;
                if ctx.json {
                    print_json(&json!({ "word": text, "normal_form": e.to_string() }));
                } else {
                    out!("{}", if e.is_identity() { "1".to_string() } else { e.to_string() });
                }
            }
        }
        Cmd::Rs { hom, letters, word } => {
            let tag = ctx.tag(GroupTag::UB);
            let hom = hom.as_deref().map(PermHom::parse).transpose()?.unwrap_or(default_hom(tag));
            let tr = Transversal::standard(hom, tag, ctx.n)?;
            match word {
                Some(text) => {
                    let w = ctx.word(&text, tag)?;
                    let symbols = rs_rewrite(&w, &tr)?;
                    let parts: Vec<String> = symbols
                        .iter()
                        .map(|s| format!("{}{}", tr.label(s.coset, s.generator), if s.sign < 0 { "^-1" } else { "" }))
                        .collect();
                    if ctx.json {
                        print_json(&json!({ "word": w.to_string(), "rewriting": parts }));
                    } else {
                        out!("{}", if parts.is_empty() { "1".to_string() } else { parts.join(" ") });
                    }
                }
                None => {
                    let gens = schreier_generators(&tr, &rs_letters(letters.as_deref(), tag, ctx.n)?)?;
                    if ctx.json {
                        let v: Vec<_> = gens.iter().map(|g| json!({ "label": g.label, "word": g.word.to_string() })).collect();
                        print_json(&json!(v));
                    } else {
                        for g in &gens {
                            out!("{g}");
                        }
                    }
                }
            }
        }
        Cmd::Suite { claim, list, timings } => {
            if list {
                for c in suite::matching(claim.as_deref())? {
                    out!("{:<26} {}", c.id, c.summary);
                }
                return Ok(ExitCode::SUCCESS);
            }
            let report = suite::run_suite(claim.as_deref(), cli.seed, timings)?;
            if ctx.json {
                out!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                {
                    use std::io::Write;
                    let _ = write!(std::io::stdout(), "{}", report.text());
                }
            }
            if report.required_failures() > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
