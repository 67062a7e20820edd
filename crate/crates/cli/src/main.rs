//! Command-line front end: graph6 in, JSON certificates out.
//!
//! Exit codes: 0 = computed, 1 = negative result with certificate (for
//! example no k-factor, with the barrier as evidence), 2 = usage or parse
//! error.

mod input;
mod output;
mod verifycert;

use bindfactor_core::binding::{beta_k, beta_k_bipartite, bind_classical, bind_bipartite};
use bindfactor_core::factors::{
    find_k_factor, find_maxmin_barrier_capped, PARTITION_CAP,
};
use bindfactor_core::family::{generate, FamilySpec};
use bindfactor_core::graph6::write_graph6;
use bindfactor_core::harness::{
    probe_indexed, verify_claim_indexed, BipartiteInstances, ClaimId, GraphSource, ProbeId,
    ProbeParams, VerificationReport,
};
use bindfactor_core::matching::{
    disjoint_near_perfect_matchings, disjoint_x_covering_matchings, hypomatchable,
    lebensold_value, max_matching, perfect_matching, Hypomatchable, PerfectMatching,
    XCoverOutcome,
};
use bindfactor_core::properties::{
    independence_number, toughness, vertex_connectivity, Toughness,
};
use bindfactor_core::{Graph, Rational, VertexSet};
use clap::{Parser, Subcommand};
use input::{parse_set, read_graph, CliError};
use output::*;
use serde_json::{json, Value};
use std::io::Read;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "bindfactor",
    about = "Exact binding numbers, k-factors, Tutte barriers, and disjoint matchings",
    version
)]
struct Cli {
    /// Print a terse plain value instead of a JSON certificate.
    #[arg(long, global = true)]
    plain: bool,

    /// Worker threads for verify/probe sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// k-th binding number with a minimizing witness.
    Beta {
        #[arg(long)]
        k: usize,
        /// Input file with one graph6 line, or '-' for stdin.
        input: Option<String>,
        #[arg(long, value_name = "FAMILY:params")]
        gen: Option<String>,
    },
    /// Weak bipartite k-th binding number over one side.
    BetaBip {
        #[arg(long)]
        k: usize,
        /// Comma-separated side (default: detected bipartition side).
        #[arg(long)]
        x: Option<String>,
        input: Option<String>,
        #[arg(long)]
        gen: Option<String>,
    },
    /// Classical binding number.
    Bind {
        input: Option<String>,
        #[arg(long)]
        gen: Option<String>,
    },
    /// Bipartite binding number over a bipartition.
    BindBip {
        #[arg(long)]
        x: Option<String>,
        input: Option<String>,
        #[arg(long)]
        gen: Option<String>,
    },
    /// Maximum matching, or a perfect matching / Tutte witness with --perfect.
    Matching {
        #[arg(long)]
        perfect: bool,
        input: Option<String>,
        #[arg(long)]
        gen: Option<String>,
    },
    /// Hypomatchability with per-vertex matchings as the certificate.
    Hypomatchable {
        input: Option<String>,
        #[arg(long)]
        gen: Option<String>,
    },
    /// t pairwise disjoint perfect or near-perfect matchings.
    DisjointMatchings {
        #[arg(long)]
        t: usize,
        input: Option<String>,
        #[arg(long)]
        gen: Option<String>,
    },
    /// k disjoint matchings covering side x, or the violating set; with
    /// --s, the value L^k(S).
    Lebensold {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        s: Option<String>,
        input: Option<String>,
        #[arg(long)]
        gen: Option<String>,
    },
    /// A k-factor, or a barrier certificate when none exists (exit 1).
    Factor {
        #[arg(long)]
        k: usize,
        input: Option<String>,
        #[arg(long)]
        gen: Option<String>,
    },
    /// The maxmin barrier, or the k-factor when no barrier exists (exit 1).
    Barrier {
        #[arg(long)]
        k: usize,
        /// Cap on the 3^n ordered-partition scan.
        #[arg(long)]
        cap: Option<usize>,
        input: Option<String>,
        #[arg(long)]
        gen: Option<String>,
    },
    /// Exact toughness.
    Tough {
        input: Option<String>,
        #[arg(long)]
        gen: Option<String>,
    },
    /// Independence number.
    Alpha {
        input: Option<String>,
        #[arg(long)]
        gen: Option<String>,
    },
    /// Vertex connectivity.
    Kappa {
        input: Option<String>,
        #[arg(long)]
        gen: Option<String>,
    },
    /// Generate a named family instance as graph6.
    Gen { spec: String },
    /// Verify a claim over a graph source.
    Verify {
        /// Claim name, e.g. THM_K_FACTOR (see --list).
        claim: Option<String>,
        /// All labeled graphs on n vertices (n <= 7).
        #[arg(long)]
        internal: Option<usize>,
        /// graph6 lines from a file.
        #[arg(long)]
        stream: Option<PathBuf>,
        /// A single generated family instance.
        #[arg(long)]
        gen: Option<String>,
        /// k values, comma separated.
        #[arg(long, value_delimiter = ',')]
        k: Vec<usize>,
        /// List the claim catalog and exit.
        #[arg(long)]
        list: bool,
    },
    /// Run a conjecture probe over a graph source.
    Probe {
        /// BIP_KFACTOR_COVER_X or FACTOR_SPECTRUM.
        which: String,
        #[arg(long)]
        internal: Option<usize>,
        #[arg(long)]
        stream: Option<PathBuf>,
        #[arg(long)]
        gen: Option<String>,
        /// Sweep all bipartite graphs with sides a,b.
        #[arg(long, value_name = "a,b")]
        bipartite: Option<String>,
        #[arg(long)]
        k: usize,
        /// Factor degree for FACTOR_SPECTRUM.
        #[arg(long)]
        t: Option<usize>,
    },
    /// Re-check a certificate produced by any other subcommand.
    VerifyCert { input: Option<String> },
}

fn main() {
    let code = run(std::env::args().collect());
    std::process::exit(code);
}

fn run(argv: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .ok();
    }
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

/// Default bipartition side when --x is omitted.
fn side_or_default(g: &Graph, x: Option<&str>) -> Result<VertexSet, CliError> {
    match x {
        Some(text) => parse_set(text, g.n()),
        None => g
            .bipartition_side()
            .ok_or_else(|| CliError::usage("graph is not bipartite; pass --x explicitly")),
    }
}

fn ratio_or_none(v: Option<Rational>) -> String {
    v.map(ratio_string).unwrap_or_else(|| "none".into())
}

fn dispatch(cli: &Cli) -> Result<i32, CliError> {
    let plain = cli.plain;
    match &cli.command {
        Command::Beta { k, input, gen } => {
            let (g, g6) = read_graph(input.as_deref(), gen.as_deref())?;
            let b = beta_k(&g, *k)?;
            if plain {
                println!("{}", ratio_or_none(b.as_ratio()));
            } else {
                let payload = binding_payload("beta", &b, &[("k", json!(k))]);
                print_json(&envelope("BINDING", &g6, json!({"op":"beta","k":k}), payload));
            }
            Ok(0)
        }
        Command::BetaBip { k, x, input, gen } => {
            let (g, g6) = read_graph(input.as_deref(), gen.as_deref())?;
            let x = side_or_default(&g, x.as_deref())?;
            let b = beta_k_bipartite(&g, &x, *k)?;
            if plain {
                println!("{}", ratio_or_none(b.as_ratio()));
            } else {
                let params = json!({"op":"beta_bipartite","k":k,"x":set_value(&x)});
                let payload = binding_payload(
                    "beta_bipartite",
                    &b,
                    &[("k", json!(k)), ("x", set_value(&x))],
                );
                print_json(&envelope("BINDING", &g6, params, payload));
            }
            Ok(0)
        }
        Command::Bind { input, gen } => {
            let (g, g6) = read_graph(input.as_deref(), gen.as_deref())?;
            let b = bind_classical(&g)?;
            if plain {
                println!("{}", ratio_or_none(b.as_ratio()));
            } else {
                let payload = binding_payload("bind", &b, &[]);
                print_json(&envelope("BINDING", &g6, json!({"op":"bind"}), payload));
            }
            Ok(0)
        }
        Command::BindBip { x, input, gen } => {
            let (g, g6) = read_graph(input.as_deref(), gen.as_deref())?;
            let x = side_or_default(&g, x.as_deref())?;
            let y = x.complement(g.n());
            let b = bind_bipartite(&g, &x, &y)?;
            if plain {
                println!("{}", ratio_or_none(b.as_ratio()));
            } else {
                let params = json!({"op":"bind_bipartite","x":set_value(&x),"y":set_value(&y)});
                let payload = binding_payload(
                    "bind_bipartite",
                    &b,
                    &[("x", set_value(&x)), ("y", set_value(&y))],
                );
                print_json(&envelope("BINDING", &g6, params, payload));
            }
            Ok(0)
        }
        Command::Matching {
            perfect,
            input,
            gen,
        } => {
            let (g, g6) = read_graph(input.as_deref(), gen.as_deref())?;
            let params = json!({"op":"matching","perfect":perfect});
            if !perfect {
                let m = max_matching(&g);
                if plain {
                    for (u, v) in m.edges() {
                        println!("{u} {v}");
                    }
                } else {
                    let payload = json!({"mode":"maximum","matching": matching_value(&m)});
                    print_json(&envelope("MATCHINGS", &g6, params, payload));
                }
                return Ok(0);
            }
            match perfect_matching(&g) {
                PerfectMatching::Found(m) => {
                    if plain {
                        for (u, v) in m.edges() {
                            println!("{u} {v}");
                        }
                    } else {
                        let payload = json!({"mode":"perfect","matching": matching_value(&m)});
                        print_json(&envelope("MATCHINGS", &g6, params, payload));
                    }
                    Ok(0)
                }
                PerfectMatching::None { witness } => {
                    if plain {
                        println!("no perfect matching");
                    } else {
                        let payload = match witness {
                            Some(w) => json!({"set": set_value(&w.set), "odd_count": w.odd_count}),
                            None => json!({"set": Value::Null, "odd_count": Value::Null,
                                           "reason": "order above witness search cap"}),
                        };
                        print_json(&envelope("TUTTE_WITNESS", &g6, params, payload));
                    }
                    Ok(1)
                }
            }
        }
        Command::Hypomatchable { input, gen } => {
            let (g, g6) = read_graph(input.as_deref(), gen.as_deref())?;
            let params = json!({"op":"hypomatchable"});
            match hypomatchable(&g) {
                Hypomatchable::Yes(ms) => {
                    if plain {
                        println!("true");
                    } else {
                        let per_vertex: Vec<Value> = ms
                            .iter()
                            .enumerate()
                            .map(|(v, m)| json!({"vertex": v, "matching": matching_value(m)}))
                            .collect();
                        let payload = json!({"mode":"hypomatchable","holds":true,
                                             "per_vertex": per_vertex});
                        print_json(&envelope("MATCHINGS", &g6, params, payload));
                    }
                    Ok(0)
                }
                Hypomatchable::No { vertex } => {
                    if plain {
                        println!("false");
                    } else {
                        let payload = json!({"mode":"hypomatchable","holds":false,
                                             "failing_vertex": vertex});
                        print_json(&envelope("MATCHINGS", &g6, params, payload));
                    }
                    Ok(1)
                }
            }
        }
        Command::DisjointMatchings { t, input, gen } => {
            let (g, g6) = read_graph(input.as_deref(), gen.as_deref())?;
            let params = json!({"op":"disjoint_matchings","t":t});
            match disjoint_near_perfect_matchings(&g, *t) {
                Ok(fam) => {
                    if plain {
                        for m in fam.matchings() {
                            let words: Vec<String> =
                                m.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
                            println!("{}", words.join(" "));
                        }
                    } else {
                        let payload = json!({"mode":"disjoint_near_perfect","t":t,
                                             "matchings": family_value(&fam)});
                        print_json(&envelope("MATCHINGS", &g6, params, payload));
                    }
                    Ok(0)
                }
                Err(f) => {
                    if plain {
                        println!("failed at step {}", f.step);
                    } else {
                        let payload = json!({"mode":"disjoint_near_perfect","t":t,
                                             "failed_step": f.step,
                                             "residual_graph6": write_graph6(&f.residual).ok()});
                        print_json(&envelope("MATCHINGS", &g6, params, payload));
                    }
                    Ok(1)
                }
            }
        }
        Command::Lebensold {
            k,
            x,
            s,
            input,
            gen,
        } => {
            let (g, g6) = read_graph(input.as_deref(), gen.as_deref())?;
            let x = side_or_default(&g, x.as_deref())?;
            if let Some(s_text) = s {
                let s = parse_set(s_text, g.n())?;
                let value = lebensold_value(&g, &x, &s, *k)?;
                if plain {
                    println!("{value}");
                } else {
                    let params = json!({"op":"lebensold_value","k":k,
                                        "x":set_value(&x),"s":set_value(&s)});
                    let payload = json!({"op":"lebensold_value","k":k,"s":set_value(&s),
                                         "value": value});
                    print_json(&envelope("BINDING", &g6, params, payload));
                }
                return Ok(0);
            }
            let params = json!({"op":"x_cover","k":k,"x":set_value(&x)});
            match disjoint_x_covering_matchings(&g, &x, *k)? {
                XCoverOutcome::Matchings(fam) => {
                    if plain {
                        for m in fam.matchings() {
                            let words: Vec<String> =
                                m.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
                            println!("{}", words.join(" "));
                        }
                    } else {
                        let payload = json!({"mode":"x_cover","k":k,"x":set_value(&x),
                                             "matchings": family_value(&fam)});
                        print_json(&envelope("MATCHINGS", &g6, params, payload));
                    }
                    Ok(0)
                }
                XCoverOutcome::Violator(s) => {
                    let l = lebensold_value(&g, &x, &s, *k)?;
                    if plain {
                        println!("violator {s}");
                    } else {
                        let payload = json!({"mode":"x_cover","k":k,"x":set_value(&x),
                                             "violating_set": set_value(&s),
                                             "lebensold_value": l,
                                             "required": k * s.len()});
                        print_json(&envelope("MATCHINGS", &g6, params, payload));
                    }
                    Ok(1)
                }
            }
        }
        Command::Factor { k, input, gen } => {
            let (g, g6) = read_graph(input.as_deref(), gen.as_deref())?;
            let params = json!({"op":"factor","k":k});
            match find_k_factor(&g, *k) {
                Some(f) => {
                    if plain {
                        for (u, v) in &f.edges {
                            println!("{u} {v}");
                        }
                    } else {
                        let payload = json!({"k":k,"edges": edges_value(&f.edges)});
                        print_json(&envelope("FACTOR", &g6, params, payload));
                    }
                    Ok(0)
                }
                None => {
                    if plain {
                        println!("no {k}-factor");
                    } else {
                        let payload = if g.n() <= PARTITION_CAP {
                            let b = find_maxmin_barrier_capped(&g, *k, PARTITION_CAP)?
                                .expect("no k-factor implies a barrier");
                            barrier_payload(&b)
                        } else {
                            json!({"unavailable": "order above partition cap"})
                        };
                        print_json(&envelope("BARRIER", &g6, params, payload));
                    }
                    Ok(1)
                }
            }
        }
        Command::Barrier { k, cap, input, gen } => {
            let (g, g6) = read_graph(input.as_deref(), gen.as_deref())?;
            let cap = cap.unwrap_or(PARTITION_CAP);
            let params = json!({"op":"barrier","k":k,"cap":cap});
            match find_maxmin_barrier_capped(&g, *k, cap)? {
                Some(b) => {
                    if plain {
                        println!(
                            "S={} T={} U={} deficiency={}",
                            b.partition.s, b.partition.t, b.partition.u, b.deficiency
                        );
                    } else {
                        print_json(&envelope("BARRIER", &g6, params, barrier_payload(&b)));
                    }
                    Ok(0)
                }
                None => {
                    let f = find_k_factor(&g, *k)
                        .expect("no barrier implies a k-factor");
                    if plain {
                        println!("no barrier; {k}-factor exists");
                    } else {
                        let payload = json!({"k":k,"edges": edges_value(&f.edges)});
                        print_json(&envelope("FACTOR", &g6, params, payload));
                    }
                    Ok(1)
                }
            }
        }
        Command::Tough { input, gen } => {
            let (g, g6) = read_graph(input.as_deref(), gen.as_deref())?;
            let t = toughness(&g)?;
            if plain {
                match t {
                    Toughness::Infinite => println!("inf"),
                    Toughness::Finite(r) => println!("{}", ratio_string(r)),
                }
            } else {
                let payload = json!({"op":"toughness","value": toughness_value(&t)});
                print_json(&envelope("BINDING", &g6, json!({"op":"toughness"}), payload));
            }
            Ok(0)
        }
        Command::Alpha { input, gen } => {
            let (g, g6) = read_graph(input.as_deref(), gen.as_deref())?;
            let a = independence_number(&g)?;
            if plain {
                println!("{a}");
            } else {
                let payload = json!({"op":"independence_number","value": a});
                print_json(&envelope(
                    "BINDING",
                    &g6,
                    json!({"op":"independence_number"}),
                    payload,
                ));
            }
            Ok(0)
        }
        Command::Kappa { input, gen } => {
            let (g, g6) = read_graph(input.as_deref(), gen.as_deref())?;
            let k = vertex_connectivity(&g);
            if plain {
                println!("{k}");
            } else {
                let payload = json!({"op":"vertex_connectivity","value": k});
                print_json(&envelope(
                    "BINDING",
                    &g6,
                    json!({"op":"vertex_connectivity"}),
                    payload,
                ));
            }
            Ok(0)
        }
        Command::Gen { spec } => {
            let parsed: FamilySpec = spec.parse()?;
            let g = generate(&parsed)?;
            let g6 = write_graph6(&g).map_err(bindfactor_core::Error::from)?;
            if plain {
                println!("{g6}");
            } else {
                print_json(&json!({
                    "graph6": g6,
                    "n": g.n(),
                    "edges": g.edge_count(),
                    "spec": parsed.to_string(),
                }));
            }
            Ok(0)
        }
        Command::Verify {
            claim,
            internal,
            stream,
            gen,
            k,
            list,
        } => {
            if *list {
                for c in ClaimId::ALL {
                    println!("{}", c.name());
                }
                return Ok(0);
            }
            let claim: ClaimId = claim
                .as_deref()
                .ok_or_else(|| CliError::usage("missing claim name (or use --list)"))?
                .parse()?;
            if claim.uses_k() && k.is_empty() {
                return Err(CliError::usage("this claim needs --k (e.g. --k 2,3)"));
            }
            let (report, source_desc, input_g6) =
                run_over_source(internal, stream, gen, |total, get| {
                    Ok(verify_claim_indexed(claim, total, get, k))
                })?;
            emit_report(plain, &report, &input_g6, json!({
                "op":"verify",
                "claim": claim.name(),
                "source": source_desc,
                "k": k,
            }));
            Ok(if report.verified() { 0 } else { 1 })
        }
        Command::Probe {
            which,
            internal,
            stream,
            gen,
            bipartite,
            k,
            t,
        } => {
            let which: ProbeId = which.parse()?;
            if which == ProbeId::FactorSpectrum && t.is_none() {
                return Err(CliError::usage("FACTOR_SPECTRUM needs --t"));
            }
            let params = ProbeParams { k: *k, t: *t };
            let (report, source_desc, input_g6) = if let Some(sides) = bipartite {
                let (a, b) = parse_sides(sides)?;
                let en = BipartiteInstances::new(a, b);
                let report = probe_indexed(which, en.len(), |i| en.get(i).0, &params);
                (report, json!({"bipartite": [a, b]}), String::new())
            } else {
                run_over_source(internal, stream, gen, |total, get| {
                    Ok(probe_indexed(which, total, get, &params))
                })?
            };
            emit_report(plain, &report, &input_g6, json!({
                "op":"probe",
                "which": which.name(),
                "source": source_desc,
                "k": k,
                "t": t,
            }));
            Ok(if report.verified() { 0 } else { 1 })
        }
        Command::VerifyCert { input } => {
            let text = match input.as_deref() {
                None | Some("-") => {
                    let mut buf = String::new();
                    std::io::stdin()
                        .read_to_string(&mut buf)
                        .map_err(|e| CliError::usage(format!("stdin: {e}")))?;
                    buf
                }
                Some(path) => std::fs::read_to_string(path)
                    .map_err(|e| CliError::usage(format!("{path}: {e}")))?,
            };
            let cert: Value = serde_json::from_str(&text)
                .map_err(|e| CliError::usage(format!("certificate is not valid JSON: {e}")))?;
            match verifycert::verify_certificate(&cert) {
                Ok(()) => {
                    if plain {
                        println!("verified");
                    } else {
                        print_json(&json!({"verified": true}));
                    }
                    Ok(0)
                }
                Err(verifycert::CertError::Mismatch(reason)) => {
                    if plain {
                        println!("mismatch: {reason}");
                    } else {
                        print_json(&json!({"verified": false, "reason": reason}));
                    }
                    Ok(1)
                }
                Err(verifycert::CertError::Malformed(reason)) => {
                    Err(CliError::usage(format!("malformed certificate: {reason}")))
                }
            }
        }
    }
}

fn parse_sides(text: &str) -> Result<(usize, usize), CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(CliError::usage("--bipartite takes two sizes, e.g. 5,5"));
    }
    let a = parts[0]
        .trim()
        .parse()
        .map_err(|_| CliError::usage("bad side size"))?;
    let b = parts[1]
        .trim()
        .parse()
        .map_err(|_| CliError::usage("bad side size"))?;
    Ok((a, b))
}

/// Resolves exactly one of --internal/--stream/--gen and runs a sweep over
/// it. Returns the report, a JSON source descriptor, and the input graph6
/// when the source is a single generated graph.
fn run_over_source<R>(
    internal: &Option<usize>,
    stream: &Option<PathBuf>,
    gen: &Option<String>,
    run: R,
) -> Result<(VerificationReport, Value, String), CliError>
where
    R: FnOnce(u64, &(dyn Fn(u64) -> Graph + Sync)) -> Result<VerificationReport, CliError>,
{
    match (internal, stream, gen) {
        (Some(n), None, None) => {
            // INTERNAL stays lazily indexed rather than materialized.
            let report = run_internal(&GraphSource::Internal(*n), run)?;
            Ok((report, json!({"internal": n}), String::new()))
        }
        (None, Some(path), None) => {
            let graphs: Vec<Graph> =
                bindfactor_core::harness::enumerate_graphs(&GraphSource::Stream(path.clone()))?
                    .collect();
            let report = run(graphs.len() as u64, &|i| graphs[i as usize].clone())?;
            Ok((
                report,
                json!({"stream": path.display().to_string()}),
                String::new(),
            ))
        }
        (None, None, Some(spec)) => {
            let parsed: FamilySpec = spec.parse()?;
            let g = generate(&parsed)?;
            let g6 = write_graph6(&g).unwrap_or_default();
            let graphs = [g];
            let report = run(1, &|i| graphs[i as usize].clone())?;
            Ok((report, json!({"gen": parsed.to_string()}), g6))
        }
        _ => Err(CliError::usage(
            "pick exactly one source: --internal N, --stream FILE, or --gen SPEC",
        )),
    }
}

fn run_internal<R>(source: &GraphSource, run: R) -> Result<VerificationReport, CliError>
where
    R: FnOnce(u64, &(dyn Fn(u64) -> Graph + Sync)) -> Result<VerificationReport, CliError>,
{
    let GraphSource::Internal(n) = source else {
        unreachable!()
    };
    if *n > bindfactor_core::harness::INTERNAL_CAP {
        return Err(CliError::from(bindfactor_core::Error::Capacity {
            what: "internal labeled-graph enumeration",
            cap: bindfactor_core::harness::INTERNAL_CAP,
            n: *n,
        }));
    }
    let n = *n;
    let total = 1u64 << (n * n.saturating_sub(1) / 2);
    run(total, &move |i| {
        bindfactor_core::harness::graph_from_edge_mask(n, i)
    })
}

fn emit_report(plain: bool, report: &VerificationReport, input_g6: &str, params: Value) {
    if plain {
        println!(
            "claim={} scanned={} hits={} counterexamples={}",
            report.claim,
            report.graphs_scanned,
            report.hypothesis_hits,
            report.counterexamples.len()
        );
        for c in &report.counterexamples {
            println!("counterexample graph6={} k={} {}", c.graph6, c.k, c.details);
        }
    } else {
        print_json(&envelope("REPORT", input_g6, params, report_payload(report)));
    }
}
