use std::fmt::Write as _;
use std::path::Path;

use anyhow::Context;
use ramseylab::constructions::{
    k43e_from_graph, kneser_matching_coloring, pasch_free_host, random_cover, stepping_up, sum_mod,
    CoverSpec, SteppingUpInput,
};
use ramseylab::format::{parse_coloring, parse_design, write_coloring, write_design};
use ramseylab::search::{exists_good_coloring_with, BoundsConfig, SearchConfig, SearchStatus};
use ramseylab::{
    certificate_info, coloring_from_resolution, contains_copy, find_design, find_mono_copy,
    is_t_design, pair_partition_coloring, ramsey_bounds, resolve, turan_number, Coloring, Design,
    DesignResult, Outcome, Pattern, UniformHypergraph,
};

use crate::args::{CatalogAction, Cli, Command, Construct, DesignAction, Method};
use crate::catalog;
use crate::fail::{bad_input, failed, BUDGET, FAILED, OK};

pub fn run(cli: Cli) -> anyhow::Result<u8> {
    let threads = cli.threads.max(1);
    match cli.command {
        Command::Verify { pattern, coloring } => verify(&pattern, &coloring),
        Command::Construct { what, out } => construct(what, out.as_deref()),
        Command::Search {
            pattern,
            k,
            n,
            budget,
            out,
        } => {
            let p = parse_pattern(&pattern)?;
            let cfg = SearchConfig { budget, threads };
            let res = exists_good_coloring_with(&p, k, n, &cfg)?;
            let name = p.name();
            match res.status {
                SearchStatus::Found => {
                    println!("FOUND ⇒ r_{k}({name}) > {n}");
                    let cert = res.certificate.expect("found outcome carries a coloring");
                    let path =
                        out.unwrap_or_else(|| format!("{}_k{k}_n{n}.hrc", file_stem(name)).into());
                    write_file(&path, &write_coloring(&cert))?;
                    println!("certificate written to {}", path.display());
                }
                SearchStatus::NotFound => println!("NOT FOUND ⇒ r_{k}({name}) ≤ {n}"),
                SearchStatus::BudgetExceeded => {
                    println!("BUDGET EXCEEDED (no conclusion about r_{k}({name}) and {n})")
                }
            }
            println!("nodes explored: {}", res.nodes_explored);
            Ok(if res.status == SearchStatus::BudgetExceeded {
                BUDGET
            } else {
                OK
            })
        }
        Command::Turan {
            pattern,
            n,
            budget,
            out,
        } => {
            let p = parse_pattern(&pattern)?;
            let t = turan_number(&p, n, budget)?;
            println!("{}", t.value);
            if t.exact {
                println!("exact: ex({n},{}) = {}", p.name(), t.value);
            } else {
                println!(
                    "lower bound only: budget exceeded, ex({n},{}) ≥ {}",
                    p.name(),
                    t.value
                );
            }
            println!("nodes explored: {}", t.nodes);
            if let Some(path) = out {
                write_file(&path, &write_coloring(&hypergraph_as_coloring(&t.witness)?))?;
            }
            Ok(if t.exact { OK } else { BUDGET })
        }
        Command::Bounds {
            pattern,
            k,
            search_budget,
            turan_budget,
            turan_n_cap,
            search_n_cap,
        } => {
            let p = parse_pattern(&pattern)?;
            let cfg = BoundsConfig {
                search_budget,
                turan_budget,
                turan_n_cap,
                search_n_cap,
                threads,
            };
            let b = ramsey_bounds(&p, k, &cfg)?;
            println!("{b}");
            println!("lower {}: {}", b.lower, b.lower_source);
            match (&b.upper, &b.upper_source) {
                (Some(u), Some(src)) => println!("upper {u}: {src}"),
                _ => println!("upper: none within the configured caps"),
            }
            Ok(OK)
        }
        Command::Catalog { action } => catalog_cmd(action),
        Command::Design { action } => design_cmd(action),
    }
}

fn parse_pattern(s: &str) -> anyhow::Result<Pattern> {
    Pattern::parse(s).map_err(|e| bad_input(format!("pattern {s:?}: {e}")))
}

fn file_stem(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect::<String>()
        .trim_matches('_')
        .to_string()
}

fn read_coloring(path: &Path) -> anyhow::Result<Coloring> {
    let text =
        std::fs::read_to_string(path).map_err(|e| bad_input(format!("{}: {e}", path.display())))?;
    parse_coloring(&text).map_err(|e| bad_input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> anyhow::Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => write_file(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn class_report(c: &Coloring) -> String {
    let sizes: Vec<String> = c.class_sizes().iter().map(u64::to_string).collect();
    format!(
        "r {} n {} k {}; class sizes {}",
        c.r(),
        c.n(),
        c.k(),
        sizes.join(",")
    )
}

fn verify(pattern: &str, source: &str) -> anyhow::Result<u8> {
    let p = parse_pattern(pattern)?;
    let c = if Path::new(source).is_file() {
        read_coloring(Path::new(source))?
    } else {
        catalog::load(source)?
    };
    if !c.is_total() {
        return Err(bad_input(format!(
            "coloring assigns {} of {} r-sets; verify needs a total coloring",
            c.assigned_count(),
            c.edge_count()
        )));
    }
    if c.r() != p.r() {
        return Err(bad_input(format!(
            "coloring is {}-uniform, pattern {} is {}-uniform",
            c.r(),
            p.name(),
            p.r()
        )));
    }
    println!("{}", class_report(&c));
    match find_mono_copy(&c, &p)? {
        None => {
            println!("NO MONO COPY of {}", p.name());
            Ok(OK)
        }
        Some(e) => {
            let color = e.color.expect("monochromatic copies carry their color");
            let map: Vec<String> = e
                .map
                .iter()
                .enumerate()
                .map(|(i, v)| format!("{i}->{v}"))
                .collect();
            let edges: Vec<String> = e
                .image_edges(&p)
                .iter()
                .map(|ed| ed.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
                .collect();
            println!("MONO COPY of {} in color {color}", p.name());
            println!("vertex map: {}", map.join(" "));
            println!("edges: {{{}}}", edges.join("} {"));
            Ok(FAILED)
        }
    }
}

/// Report a construction's claim and confirm it before writing.
fn finish_construct(
    out: Option<&Path>,
    c: &Coloring,
    claim: &str,
    check: Option<&Pattern>,
) -> anyhow::Result<u8> {
    eprintln!("{claim}");
    if let Some(p) = check {
        if let Some(e) = find_mono_copy(c, p)? {
            return Err(failed(format!(
                "self-check failed: monochromatic {} in color {:?}",
                p.name(),
                e.color
            )));
        }
        eprintln!("self-check passed: no monochromatic {}", p.name());
    }
    eprintln!("{}", class_report(c));
    emit(out, &write_coloring(c))?;
    Ok(OK)
}

fn hypergraph_as_coloring(h: &UniformHypergraph) -> anyhow::Result<Coloring> {
    let mut c = Coloring::unassigned(h.r(), h.n(), 1)?;
    for &rank in h.ranks() {
        c.set_rank(rank, 0)?;
    }
    Ok(c)
}

fn pattern(name: &str) -> Pattern {
    Pattern::parse(name).expect("catalog pattern")
}

fn construct(what: Construct, out: Option<&Path>) -> anyhow::Result<u8> {
    match what {
        Construct::SteppingUp { input } => {
            let phi = read_coloring(&input)?;
            let (r, n) = (phi.r(), phi.n());
            // K_{r+1}^r-freeness of the input carries over to K_{r+2}^{r+1} in the output
            let source = Pattern::parse(&format!("clique({},{r})", r + 1)).ok();
            let target = Pattern::parse(&format!("clique({},{})", r + 2, r + 1)).ok();
            let input_clean = match (&source, phi.is_total()) {
                (Some(q), true) => find_mono_copy(&phi, q)?.is_none(),
                _ => false,
            };
            let psi = stepping_up(&SteppingUpInput { phi }).map_err(|e| failed(e.to_string()))?;
            let claim = if input_clean {
                format!(
                    "stepping-up: {} colors on 2^{n} = {} vertices, no monochromatic K_{}^{}",
                    psi.k(),
                    psi.n(),
                    r + 2,
                    r + 1
                )
            } else {
                format!(
                    "stepping-up: {} colors on 2^{n} = {} vertices; input has a monochromatic K_{}^{r}, so no guarantee",
                    psi.k(),
                    psi.n(),
                    r + 1
                )
            };
            // exhaustive self-check only where it is cheap
            let check = target.as_ref().filter(|_| input_clean && psi.n() <= 64);
            finish_construct(out, &psi, &claim, check)
        }
        Construct::K43e { input } => {
            let phi = read_coloring(&input)?;
            let psi = k43e_from_graph(&phi).map_err(|e| failed(e.to_string()))?;
            let claim = format!(
                "k43e lift: {} colors on {} vertices, K43e-free",
                psi.k(),
                psi.n()
            );
            finish_construct(out, &psi, &claim, Some(&pattern("K43e")))
        }
        Construct::SumMod { n, m } => {
            let c = sum_mod(n, m).map_err(|e| failed(e.to_string()))?;
            let kite = pattern("kite");
            let check = (n <= m as usize).then_some(&kite);
            let claim = if check.is_some() {
                format!("sum-mod: triple ijl colored (i+j+l) mod {m} on {n} vertices, kite-free since n <= m")
            } else {
                format!("sum-mod: triple ijl colored (i+j+l) mod {m} on {n} vertices")
            };
            finish_construct(out, &c, &claim, check)
        }
        Construct::Kneser { r, k } => {
            let c = kneser_matching_coloring(r, k).map_err(|e| failed(e.to_string()))?;
            let p = Pattern::parse(&format!("matching2({r})"))?;
            let claim = format!(
                "kneser: {k} colors on {} vertices, no monochromatic pair of disjoint {r}-sets",
                c.n()
            );
            finish_construct(out, &c, &claim, Some(&p))
        }
        Construct::RandomCover {
            base,
            k,
            seed,
            retries,
            pattern,
        } => {
            let base = read_coloring(&base)?;
            let edges = UniformHypergraph::from_ranks(
                base.r(),
                base.n(),
                (0..base.edge_count()).filter(|&x| base.get_rank(x) != ramseylab::UNASSIGNED),
            )?;
            let check = pattern.as_deref().map(parse_pattern).transpose()?;
            if let Some(p) = &check {
                if contains_copy(&edges, p)?.is_some() {
                    return Err(failed(format!("base hypergraph contains {}", p.name())));
                }
            }
            let spec = CoverSpec {
                base: edges,
                k,
                seed,
                max_retries: retries,
            };
            let res = random_cover(&spec).map_err(|e| failed(e.to_string()))?;
            let Some(res) = res else {
                return Err(failed(format!(
                    "no cover with {k} copies after {} attempts",
                    retries as u64 + 1
                )));
            };
            let claim = format!(
                "random-cover: {k} permuted copies of the base (rng {}, seed {seed}, attempt {}); each class lies in a copy of the base",
                res.rng, res.attempt
            );
            finish_construct(out, &res.coloring, &claim, check.as_ref())
        }
        Construct::PaschHost { q } => {
            let h = pasch_free_host(q).map_err(|e| failed(e.to_string()))?;
            eprintln!(
                "pasch-host: {} vertices, {} triples, Pasch-free",
                h.n(),
                h.edge_count()
            );
            if contains_copy(&h, &pattern("pasch"))?.is_some() {
                return Err(failed(
                    "self-check failed: host contains a Pasch configuration",
                ));
            }
            eprintln!("self-check passed: no Pasch configuration");
            emit(out, &write_coloring(&hypergraph_as_coloring(&h)?))?;
            Ok(OK)
        }
        Construct::Certificate { name } => {
            let info = certificate_info(&name).map_err(|e| bad_input(e.to_string()))?;
            let c = ramseylab::certificate(&name)?;
            let p = pattern(info.pattern);
            let claim = format!(
                "certificate {name}: {}; r_{}({}) > {}",
                info.description,
                info.k,
                p.name(),
                info.n
            );
            finish_construct(out, &c, &claim, Some(&p))
        }
        Construct::DesignColoring {
            design,
            v,
            method,
            budget,
        } => {
            let d = match (design, v) {
                (Some(path), _) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| bad_input(format!("{}: {e}", path.display())))?;
                    parse_design(&text)
                        .map_err(|e| bad_input(format!("{}: {e}", path.display())))?
                }
                (None, Some(v)) => match find_design(3, v, 4, 1, budget)?.result {
                    DesignResult::Found(d) => d,
                    other => return Err(failed(format!("no 3-({v},4,1) design: {other:?}"))),
                },
                (None, None) => return Err(bad_input("give --design or --v")),
            };
            let c = match method {
                Method::Resolve => {
                    let (res, _) = resolve(&d, budget);
                    let res = match res {
                        Outcome::Found(r) => r,
                        Outcome::Exhausted => return Err(failed("design is not resolvable")),
                        Outcome::BudgetExceeded => {
                            return Err(failed("budget exceeded while resolving"))
                        }
                    };
                    coloring_from_resolution(&res).map_err(|e| failed(e.to_string()))?
                }
                Method::Pairs => match pair_partition_coloring(&d, budget)
                    .map_err(|e| failed(e.to_string()))?
                    .0
                {
                    Outcome::Found(c) => c,
                    Outcome::Exhausted => return Err(failed("blocks cannot be paired")),
                    Outcome::BudgetExceeded => {
                        return Err(failed("budget exceeded while pairing blocks"))
                    }
                },
            };
            let claim = format!(
                "design coloring: {} colors on {} vertices, bow-free",
                c.k(),
                c.n()
            );
            finish_construct(out, &c, &claim, Some(&pattern("bow")))
        }
    }
}

fn catalog_cmd(action: CatalogAction) -> anyhow::Result<u8> {
    match action {
        CatalogAction::List => {
            for info in ramseylab::catalog() {
                println!(
                    "{:<12} pattern {:<5} k {:<2} n {:<2} {}",
                    info.name, info.pattern, info.k, info.n, info.description
                );
            }
            Ok(OK)
        }
        CatalogAction::Export { dir } => {
            std::fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
            for info in ramseylab::catalog() {
                let c = ramseylab::certificate(info.name)?;
                write_file(&dir.join(format!("{}.hrc", info.name)), &write_coloring(&c))?;
            }
            println!(
                "wrote {} certificates to {}",
                ramseylab::catalog().len(),
                dir.display()
            );
            Ok(OK)
        }
        CatalogAction::Check => {
            let mut report = String::new();
            let mut bad = 0;
            for info in ramseylab::catalog() {
                let c = catalog::load(info.name)?;
                let p = pattern(info.pattern);
                let ok = c.is_total()
                    && c.k() == info.k
                    && c.n() == info.n
                    && find_mono_copy(&c, &p)?.is_none();
                bad += usize::from(!ok);
                writeln!(report, "{} {}", info.name, if ok { "ok" } else { "FAILED" }).unwrap();
            }
            print!("{report}");
            Ok(if bad == 0 { OK } else { FAILED })
        }
    }
}

fn design_cmd(action: DesignAction) -> anyhow::Result<u8> {
    match action {
        DesignAction::Find(d) => {
            let s = find_design(d.t, d.v, d.k, d.lambda, d.budget)?;
            let label = format!("{}-({},{},{})", d.t, d.v, d.k, d.lambda);
            match s.result {
                DesignResult::Found(design) => {
                    eprintln!(
                        "found {label} design with {} blocks ({} nodes)",
                        design.blocks().len(),
                        s.nodes
                    );
                    emit(d.out.as_deref(), &write_design(&design))?;
                    Ok(OK)
                }
                DesignResult::CountingObstruction(why) => {
                    println!("no {label} design: {why}");
                    Ok(FAILED)
                }
                DesignResult::Exhausted => {
                    println!("no {label} design: search exhausted ({} nodes)", s.nodes);
                    Ok(FAILED)
                }
                DesignResult::BudgetExceeded => {
                    println!("budget exceeded after {} nodes", s.nodes);
                    Ok(BUDGET)
                }
            }
        }
        DesignAction::Verify { t, lambda, path } => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| bad_input(format!("{}: {e}", path.display())))?;
            let d: Design =
                parse_design(&text).map_err(|e| bad_input(format!("{}: {e}", path.display())))?;
            let label = format!("{t}-({},{},{lambda})", d.v(), d.block_size());
            if is_t_design(&d, t, lambda) {
                println!("{label} design: ok");
                Ok(OK)
            } else {
                println!("not a {label} design");
                Ok(FAILED)
            }
        }
    }
}
