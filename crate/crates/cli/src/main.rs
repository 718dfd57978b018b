use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use cyclic_aut::classifier::{
    classify_belyi, classify_cover, classify_fermat, classify_lefschetz, lefschetz_isomorphic, ClassificationReport,
};
use cyclic_aut::curve::{monodromy_genus, parse_curve};
use cyclic_aut::fuchsian::{extension_chains, gs_extensions, is_finitely_maximal, GS_TABLE};
use cyclic_aut::grouptheory::{
    abelianization, coset_enumerate, fingerprint_permutations, perm_order, PermutationSet, Presentation,
    DEFAULT_MAX_COSETS, DEFAULT_MAX_SIZE,
};
use cyclic_aut::verify::{
    accola_maclachlan, cross_check, cross_check_tables, enumerate_classes_capped, period_three, standard_actions,
    twisted_z2, verify_action, CrossCheckReport, EnumerationTable, DEFAULT_N_MAX,
};
use cyclic_aut::{curve::Signature, Error};

#[derive(Parser, Debug)]
#[command(name = "cyclic-aut", version, about = "Automorphism groups of cyclic covers of the Riemann sphere")]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Seed for sampled checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Coset budget for coset enumeration
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_COSETS, value_parser = positive)]
    max_cosets: usize,
    /// Element budget for permutation group closure
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_SIZE, value_parser = positive)]
    max_size: usize,
    /// Upper bound on n for enumerate and cross-check
    #[arg(long, global = true)]
    n_max: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Args, Debug)]
struct TripleArgs {
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    a: Option<u64>,
    #[arg(long)]
    b: Option<u64>,
    #[arg(long)]
    c: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a curve given by an equation or a belyi triple
    Classify {
        #[arg(long, conflicts_with_all = ["n", "a", "b", "c"])]
        curve: Option<String>,
        #[command(flatten)]
        triple: TripleArgs,
    },
    /// Classify the Lefschetz curve y^p = x^a (x+1); with --b, compare two of them
    Lefschetz {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: Option<u64>,
    },
    /// Classify the Fermat-type curve y^n + x^d = 1
    Fermat {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
    },
    /// Genus and signature of a cover
    Genus {
        #[arg(long)]
        curve: String,
    },
    /// All equivalence classes of belyi triples for one n (or 4..=n-max)
    Enumerate {
        #[arg(long)]
        n: Option<u64>,
    },
    /// Run the consistency checks over a range of n
    CrossCheck {
        #[arg(long, default_value_t = 4)]
        n_min: u64,
        /// Read tables from `enumerate --json` output instead (`-` for stdin)
        #[arg(long)]
        from_enumeration: Option<String>,
    },
    /// The table of non-maximal triangle signatures; with --signature, its extensions
    GsTable {
        #[arg(long)]
        signature: Option<String>,
    },
    /// Order of a finitely presented group
    CosetEnum {
        #[arg(long)]
        pres: String,
    },
    /// Abelian invariants of a finitely presented group
    Abelianize {
        #[arg(long)]
        pres: String,
    },
    /// Order of a permutation group
    PermOrder {
        #[arg(long)]
        gens: String,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Check explicit automorphisms numerically on sampled points
    VerifyAction {
        /// accola, periodthree or twistedz2; all standard instances when omitted
        #[arg(long, requires = "n")]
        family: Option<String>,
        #[arg(long)]
        n: Option<u64>,
        /// Second parameter: k for periodthree, b for twistedz2
        #[arg(long)]
        k: Option<u64>,
        #[arg(long, default_value_t = 100, value_parser = positive)]
        samples: usize,
    },
}

type CmdResult = Result<(), Error>;

fn emit(json: bool, value: Value, text: impl FnOnce() -> String) {
    if json {
        println!("{}", serde_json::to_string_pretty(&value).expect("serialisable"));
    } else {
        print!("{}", text());
    }
}

fn emit_report(json: bool, r: &ClassificationReport) {
    emit(json, serde_json::to_value(r).expect("serialisable"), || r.to_string());
}

fn parse_signature(text: &str) -> Result<Signature, Error> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    let periods = inner
        .split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|_| Error::Domain(format!("bad period {p:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Signature::new(periods)
}

fn read_source(path: &str) -> Result<String, Error> {
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Error::Domain(format!("cannot read {path}: {e}")))?;
    Ok(text)
}

fn emit_cross_check(json: bool, r: &CrossCheckReport) -> CmdResult {
    emit(json, serde_json::to_value(r).expect("serialisable"), || {
        let mut s = String::new();
        for c in &r.checks {
            let verdict = if c.pass { "PASS" } else { "FAIL" };
            s += &format!("{verdict} {:<24} n in [{}, {}]", c.name, c.n_range[0], c.n_range[1]);
            if let Some(w) = &c.witness {
                s += &format!("  witness: {w}");
            }
            s.push('\n');
        }
        s
    });
    if r.pass() {
        Ok(())
    } else {
        Err(Error::Domain("cross-check failed".into()))
    }
}

fn run(cli: Cli) -> CmdResult {
    let json = cli.json;
    let n_cap = cli.n_max.unwrap_or(DEFAULT_N_MAX);
    match cli.command {
        Command::Classify { curve, triple } => {
            let report = match (curve, triple) {
                (Some(text), _) => classify_cover(&parse_curve(&text)?)?,
                (None, TripleArgs { n: Some(n), a: Some(a), b: Some(b), c: Some(c) }) => classify_belyi(n, a, b, c)?,
                _ => return Err(Error::Domain("give --curve or all of --n --a --b --c".into())),
            };
            emit_report(json, &report);
        }
        Command::Lefschetz { p, a, b: None } => emit_report(json, &classify_lefschetz(p, a)?),
        Command::Lefschetz { p, a, b: Some(b) } => {
            let iso = lefschetz_isomorphic(p, a, b)?;
            emit(json, json!({ "p": p, "a": a, "b": b, "isomorphic": iso }), || format!("{iso}\n"));
        }
        Command::Fermat { n, d } => emit_report(json, &classify_fermat(n, d)?),
        Command::Genus { curve } => {
            let cover = parse_curve(&curve)?;
            let genus = cover.genus()?;
            let monodromy = monodromy_genus(&cover)?;
            let sig = cover.signature()?;
            emit(
                json,
                json!({ "curve": cover.to_string(), "genus": genus, "monodromy_genus": monodromy, "signature": sig.to_string() }),
                || format!("genus {genus} (monodromy {monodromy}), signature {sig}\n"),
            );
        }
        Command::Enumerate { n } => {
            let range: Vec<u64> = match n {
                Some(n) => vec![n],
                None => (4..=n_cap).collect(),
            };
            let tables = range
                .into_iter()
                .map(|n| enumerate_classes_capped(n, n_cap))
                .collect::<Result<Vec<_>, _>>()?;
            let value = if tables.len() == 1 { json!(tables[0]) } else { json!(tables) };
            emit(json, value, || {
                let mut s = String::new();
                for t in &tables {
                    s += &format!("n = {}: {} ordered triples, {} classes\n", t.n, t.ordered_triples, t.classes.len());
                    for c in &t.classes {
                        let [a, b, cc] = c.canonical_triple;
                        s += &format!(
                            "  ({a},{b},{cc})  orbit {:>3}  genus {:>3}  {:<12} |G| = {:<6} {}\n",
                            c.orbit_size, c.report.genus, c.report.row, c.report.group.order, c.report.group.structure
                        );
                    }
                }
                s
            });
        }
        Command::CrossCheck { from_enumeration: Some(path), .. } => {
            let text = read_source(&path)?;
            let value: Value = serde_json::from_str(&text).map_err(|e| Error::Domain(format!("bad JSON: {e}")))?;
            let tables: Vec<EnumerationTable> = if value.is_array() {
                serde_json::from_value(value)
            } else {
                serde_json::from_value(value).map(|t| vec![t])
            }
            .map_err(|e| Error::Domain(format!("not an enumeration table: {e}")))?;
            emit_cross_check(json, &cross_check_tables(&tables)?)?;
        }
        Command::CrossCheck { n_min, from_enumeration: None } => {
            emit_cross_check(json, &cross_check(n_min, cli.n_max.unwrap_or(30))?)?;
        }
        Command::GsTable { signature: None } => {
            emit(json, json!(GS_TABLE), || GS_TABLE.iter().map(|r| format!("{r}\n")).collect());
        }
        Command::GsTable { signature: Some(text) } => {
            let sig = parse_signature(&text)?;
            let ext = gs_extensions(&sig);
            let chains = extension_chains(&sig);
            emit(
                json,
                json!({
                    "signature": sig.to_string(),
                    "finitely_maximal": is_finitely_maximal(&sig),
                    "extensions": ext,
                    "chains": chains,
                }),
                || {
                    let mut s = format!("{sig}: finitely maximal = {}\n", is_finitely_maximal(&sig));
                    for e in &ext {
                        s += &format!("  {e}\n");
                    }
                    for c in &chains {
                        s += &format!("  chain {c}\n");
                    }
                    s
                },
            );
        }
        Command::CosetEnum { pres } => {
            let p = Presentation::parse(&pres)?;
            let order = coset_enumerate(&p, cli.max_cosets)?;
            emit(json, json!({ "presentation": p.to_string(), "order": order }), || format!("{order}\n"));
        }
        Command::Abelianize { pres } => {
            let p = Presentation::parse(&pres)?;
            let ab = abelianization(&p);
            emit(
                json,
                json!({ "presentation": p.to_string(), "invariants": ab.invariants, "free_rank": ab.free_rank, "text": ab.to_string() }),
                || format!("{ab}\n"),
            );
        }
        Command::PermOrder { gens, degree } => {
            let perms = PermutationSet::parse(&gens, degree)?;
            let order = perm_order(&perms, cli.max_size)?;
            let fp = fingerprint_permutations(&perms, cli.max_size)?;
            emit(
                json,
                json!({ "degree": perms.degree(), "order": order, "abelian_invariants": fp.abelian_invariants, "is_abelian": fp.is_abelian }),
                || format!("{order}\n"),
            );
        }
        Command::VerifyAction { family, n, k, samples } => {
            let actions = match family.as_deref() {
                None => standard_actions()?,
                Some(f) => {
                    let n = n.expect("clap enforces --n");
                    let need_k = || k.ok_or_else(|| Error::Domain(format!("{f} needs --k")));
                    vec![match f {
                        "accola" => {
                            if n % 2 != 0 {
                                return Err(Error::Domain(format!("accola needs an even degree, got {n}")));
                            }
                            accola_maclachlan(n / 2)?
                        }
                        "periodthree" => period_three(n, need_k()?)?,
                        "twistedz2" => twisted_z2(n, need_k()?)?,
                        other => return Err(Error::Domain(format!("unknown family {other:?}"))),
                    }]
                }
            };
            let reports = actions
                .iter()
                .map(|a| verify_action(a, samples, cli.seed))
                .collect::<Result<Vec<_>, _>>()?;
            let all = reports.iter().all(|r| r.pass);
            emit(json, json!({ "pass": all, "actions": reports }), || {
                let mut s = String::new();
                for r in &reports {
                    s += &format!(
                        "{} {}  residual {:.1e}\n",
                        if r.pass { "PASS" } else { "FAIL" },
                        r.action,
                        r.max_residual
                    );
                    for c in r.orders.iter().chain(&r.relations) {
                        s += &format!("    {} {}\n", if c.pass { "ok  " } else { "FAIL" }, c.name);
                    }
                }
                s
            });
            if !all {
                return Err(Error::Domain("an action check failed".into()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
