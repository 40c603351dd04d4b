//! `engel` — load or name finite groups, evaluate word expressions, compute
//! Engel sets, run verification suites, and search for counterexamples.
//!
//! Exit codes: 0 = the claim held (or a pure computation succeeded),
//! 1 = the claim failed and a witness was emitted, 2 = usage or input error.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use engel_core::error::Error;
use engel_core::structure::{
    generated_subgroup, quotient, verify_chain, QuotientGroup, SubnormalChain,
};
use engel_core::subset::Subgroup;
use engel_core::verify::{
    analyze_group, check_conjecture6, check_prop1_catalog, check_prop3, check_theorem4,
    check_theorem5, search_counterexamples, CatalogEntry, ClaimId, SearchOptions,
};
use engel_core::word::{eval_word, parse_word, Binding};
use engel_core::{resolve_group_descriptor, FiniteGroup, VerificationReport};

const DEFAULT_SEARCH_CATALOG: &str =
    "catalog:C2,catalog:C3,catalog:C4,catalog:K4,catalog:S3,catalog:D8,catalog:Q8,catalog:A4";

#[derive(Parser)]
#[command(
    name = "engel",
    version,
    about = "Finite-group engine for n-Engel words and centralizer-like subgroups"
)]
struct Cli {
    /// Output format for reports and set listings.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a word expression and print the resulting element label.
    Eval {
        /// Group descriptor: `catalog:NAME` (product sugar `K4xS3`) or a
        /// group-file path.
        #[arg(long)]
        group: String,
        /// Word expression, e.g. `"[x,_3 y]"`.
        #[arg(long)]
        word: String,
        /// Variable binding `VAR=LABEL`; repeatable.
        #[arg(long = "bind")]
        bindings: Vec<String>,
    },
    /// Compute a centralizer-like set and print its sorted member labels.
    Sets {
        #[arg(long)]
        group: String,
        /// Element label; omit with `--set r_n` for the universal set.
        #[arg(long)]
        element: Option<String>,
        /// One of: r_n, e1star, left_e1, centralizer, closure-centralizer,
        /// conj-intersection.
        #[arg(long, default_value = "r_n")]
        set: String,
        /// Engel depth for `--set r_n`.
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
    /// Print a structural summary of a group.
    Analyze {
        #[arg(long)]
        group: String,
    },
    /// Run a claim over the given groups and emit a report.
    Verify {
        /// Claim id: prop1[.1-.4], prop3, thm4[.1-.2], thm5[.1-.2],
        /// conj6[.1-.2].
        #[arg(long)]
        claim: String,
        /// Comma-separated group descriptors. Pair claims take exactly two.
        #[arg(long)]
        groups: String,
        /// Engel depth bound for thm4.
        #[arg(long = "n-max", default_value_t = 4)]
        n_max: u32,
    },
    /// Run a pair claim over all ordered pairs from a catalog, smallest
    /// product first.
    Search {
        /// Pair claim id, typically conj6.1 or conj6.2.
        #[arg(long)]
        claim: String,
        /// Comma-separated group descriptors.
        #[arg(long, default_value = DEFAULT_SEARCH_CATALOG)]
        catalog: String,
        /// Keep going after the first failing instance.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Compute the quotient by the normal subgroup generated by the given
    /// elements and print its cosets and table.
    Quotient {
        #[arg(long)]
        group: String,
        /// Comma-separated element labels generating the kernel.
        #[arg(long)]
        kernel: String,
    },
    /// Verify a subnormal chain. Links are given as `;`-separated lists of
    /// generator labels; the trivial subgroup and the whole group are added
    /// as the first and last links automatically.
    Chain {
        #[arg(long)]
        group: String,
        #[arg(long)]
        links: String,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    });
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Eval {
            group,
            word,
            bindings,
        } => cmd_eval(cli.format, &group, &word, &bindings),
        Command::Sets {
            group,
            element,
            set,
            n,
        } => cmd_sets(cli.format, &group, element.as_deref(), &set, n),
        Command::Analyze { group } => cmd_analyze(cli.format, &group),
        Command::Verify {
            claim,
            groups,
            n_max,
        } => cmd_verify(cli.format, &claim, &groups, n_max),
        Command::Search {
            claim,
            catalog,
            exhaustive,
        } => cmd_search(cli.format, &claim, &catalog, exhaustive),
        Command::Quotient { group, kernel } => cmd_quotient(cli.format, &group, &kernel),
        Command::Chain { group, links } => cmd_chain(cli.format, &group, &links),
    }
}

/// Splits on `separator` at parenthesis depth 0, trimming each piece, so
/// labels like `(c,(1 3 2))` survive list syntax.
fn split_outside_parens(text: &str, separator: char) -> Vec<String> {
    let mut pieces = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for ch in text.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            c if c == separator && depth == 0 => {
                pieces.push(std::mem::take(&mut current));
                continue;
            }
            _ => {}
        }
        current.push(ch);
    }
    pieces.push(current);
    pieces
        .into_iter()
        .map(|p| p.trim().to_string())
        .filter(|p| !p.is_empty())
        .collect()
}

fn subgroup_from_labels(group: &FiniteGroup, labels: &str) -> Result<Subgroup, Error> {
    let seeds = split_outside_parens(labels, ',')
        .iter()
        .map(|label| group.by_label(label))
        .collect::<Result<Vec<_>, _>>()?;
    generated_subgroup(group, &seeds)
}

fn cmd_eval(format: Format, group: &str, word: &str, bindings: &[String]) -> Result<i32, Error> {
    let (name, g) = resolve_group_descriptor(group)?;
    let expr = parse_word(word)?;
    let mut env = Binding::new(&g);
    let mut bound = Vec::new();
    for binding in bindings {
        let (var, label) = binding.split_once('=').ok_or_else(|| {
            Error::GroupFile(format!("binding `{binding}` is not of the form VAR=LABEL"))
        })?;
        env.bind(var, &g.by_label(label)?)?;
        bound.push(format!("{var}={label}"));
    }
    let result = eval_word(&expr, &env)?;
    match format {
        Format::Text => println!("{}", result.label()),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "group": name,
                "word": expr.to_string(),
                "bindings": bound,
                "result": result.label(),
            }))
            .expect("json")
        ),
    }
    Ok(0)
}

fn cmd_sets(
    format: Format,
    group: &str,
    element: Option<&str>,
    set: &str,
    n: u32,
) -> Result<i32, Error> {
    if n < 1 {
        return Err(Error::GroupFile("--n must be at least 1".into()));
    }
    let (name, g) = resolve_group_descriptor(group)?;
    let lookup = |label: Option<&str>| -> Result<engel_core::GroupElement, Error> {
        let label =
            label.ok_or_else(|| Error::GroupFile(format!("--set {set} requires --element")))?;
        g.by_label(label)
    };
    let members = match set {
        "r_n" => match element {
            Some(label) => engel_core::sets::right_engel_set_at(&g.by_label(label)?, n),
            None => engel_core::sets::right_engel_set(&g, n),
        },
        "e1star" => engel_core::sets::right_e1star(&lookup(element)?),
        "left_e1" => engel_core::sets::left_e1(&lookup(element)?),
        "centralizer" => engel_core::sets::centralizer(&lookup(element)?).into_subset(),
        "closure-centralizer" => {
            engel_core::sets::centralizer_of_normal_closure(&lookup(element)?).into_subset()
        }
        "conj-intersection" => engel_core::sets::intersect_conjugate_r1(&lookup(element)?),
        other => {
            return Err(Error::GroupFile(format!(
                "unknown set kind `{other}`; expected r_n, e1star, left_e1, centralizer, \
                 closure-centralizer, or conj-intersection"
            )))
        }
    };
    match format {
        Format::Text => {
            for label in members.labels() {
                println!("{label}");
            }
        }
        Format::Json => {
            let mut doc = json!({
                "group": name,
                "element": element,
                "set": set,
                "members": members.labels(),
            });
            if set == "r_n" {
                doc["n"] = json!(n);
            }
            println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        }
    }
    Ok(0)
}

fn cmd_analyze(format: Format, group: &str) -> Result<i32, Error> {
    let (name, g) = resolve_group_descriptor(group)?;
    let summary = analyze_group(&CatalogEntry::new(name, g));
    match format {
        Format::Text => print!("{}", summary.render_text()),
        Format::Json => println!("{}", summary.to_json()),
    }
    Ok(0)
}

fn resolve_entries(list: &str) -> Result<Vec<CatalogEntry>, Error> {
    split_outside_parens(list, ',')
        .iter()
        .map(|descriptor| {
            let (name, group) = resolve_group_descriptor(descriptor)?;
            Ok(CatalogEntry::new(name, group))
        })
        .collect()
}

fn emit_report(format: Format, report: &VerificationReport) -> i32 {
    match format {
        Format::Text => print!("{}", report.render_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    if report.all_held() {
        0
    } else {
        1
    }
}

fn cmd_verify(format: Format, claim: &str, groups: &str, n_max: u32) -> Result<i32, Error> {
    if n_max < 1 {
        return Err(Error::GroupFile("--n-max must be at least 1".into()));
    }
    let claim = ClaimId::parse(claim)?;
    let entries = resolve_entries(groups)?;
    let report = if claim.takes_single_group() {
        if entries.is_empty() {
            return Err(Error::GroupFile("--groups needs at least one group".into()));
        }
        check_prop1_catalog(&entries, claim)
    } else {
        let [g_entry, h_entry] = entries.as_slice() else {
            return Err(Error::GroupFile(format!(
                "claim `{}` takes exactly two groups, got {}",
                claim.canonical(),
                entries.len()
            )));
        };
        match claim {
            ClaimId::Thm4(_) => check_theorem4(g_entry, h_entry, n_max, claim)?,
            ClaimId::Thm5(_) => check_theorem5(g_entry, h_entry, claim)?,
            ClaimId::Conj6(_) => check_conjecture6(g_entry, h_entry, claim)?,
            ClaimId::Prop3 => check_prop3(g_entry, h_entry)?,
            ClaimId::Prop1(_) => unreachable!("single-group claims handled above"),
        }
    };
    Ok(emit_report(format, &report))
}

fn cmd_search(format: Format, claim: &str, catalog: &str, exhaustive: bool) -> Result<i32, Error> {
    let claim = ClaimId::parse(claim)?;
    let entries = resolve_entries(catalog)?;
    if entries.is_empty() {
        return Err(Error::GroupFile(
            "--catalog needs at least one group".into(),
        ));
    }
    let report = search_counterexamples(
        &entries,
        claim,
        SearchOptions {
            exhaustive,
            ..SearchOptions::default()
        },
    )?;
    Ok(emit_report(format, &report))
}

fn render_quotient_text(q: &QuotientGroup) -> String {
    let mut out = String::new();
    out.push_str(&format!("cosets: {}\n", q.order()));
    let parent = q.parent();
    for (i, coset) in q.cosets().iter().enumerate() {
        out.push_str(&format!(
            "coset {i} (rep {}): {}\n",
            parent.label(q.representatives()[i]),
            coset.labels().join(", ")
        ));
    }
    out.push_str("table:\n");
    for i in 0..q.order() {
        let row: Vec<String> = (0..q.order()).map(|j| q.mul(i, j).to_string()).collect();
        out.push_str(&format!("  {}\n", row.join(" ")));
    }
    out
}

fn cmd_quotient(format: Format, group: &str, kernel: &str) -> Result<i32, Error> {
    let (name, g) = resolve_group_descriptor(group)?;
    let kernel = subgroup_from_labels(&g, kernel)?;
    let q = quotient(&g, &kernel)?;
    match format {
        Format::Text => print!("{}", render_quotient_text(&q)),
        Format::Json => {
            let cosets: Vec<Vec<&str>> = q.cosets().iter().map(|c| c.labels()).collect();
            let reps: Vec<&str> = q.representatives().iter().map(|&r| g.label(r)).collect();
            let table: Vec<Vec<usize>> = (0..q.order())
                .map(|i| (0..q.order()).map(|j| q.mul(i, j)).collect())
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "group": name,
                    "kernel": kernel.labels(),
                    "cosets": cosets,
                    "representatives": reps,
                    "table": table,
                }))
                .expect("json")
            );
        }
    }
    Ok(0)
}

fn cmd_chain(format: Format, group: &str, links: &str) -> Result<i32, Error> {
    let (name, g) = resolve_group_descriptor(group)?;
    let mut subgroups = vec![Subgroup::trivial(&g)];
    for link_spec in split_outside_parens(links, ';') {
        subgroups.push(subgroup_from_labels(&g, &link_spec)?);
    }
    subgroups.push(Subgroup::full(&g));
    let chain = SubnormalChain::new(&g, subgroups)?;
    let report = verify_chain(&g, &chain)?;
    match format {
        Format::Text => {
            println!("group: {name}");
            for link in &report.links {
                println!(
                    "  {} ◁ {}: normal={} quotient_order={} quotient_abelian={}",
                    link.lower_order,
                    link.upper_order,
                    link.normal,
                    link.quotient_order,
                    link.quotient_abelian
                );
            }
            println!("witnesses solvability: {}", report.witnesses_solvability);
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "group": name,
                    "links": report.links,
                    "witnesses_solvability": report.witnesses_solvability,
                }))
                .expect("json")
            );
        }
    }
    Ok(if report.witnesses_solvability { 0 } else { 1 })
}
