use std::path::Path;
use std::process::{Command, Output};

use ramseylab::format::{parse_coloring, parse_design, write_coloring};
use ramseylab::{catalog, certificate, find_mono_copy, is_t_design, Pattern};

fn ramseylab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ramseylab"))
        .args(args)
        .env_remove("RAMSEYLAB_CATALOG")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn edge_lines(text: &str) -> usize {
    text.lines().count() - 2
}

#[test]
fn verify_clean_certificate() {
    let o = ramseylab(&["verify", "--pattern", "kite", "kite_k6_n7"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("NO MONO COPY"));
    assert!(out.contains("class sizes 7,7,6,6,5,4"));
}

#[test]
fn verify_reports_witness() {
    let o = ramseylab(&["verify", "--pattern", "bow", "kite_k6_n7"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("MONO COPY of bow"));
    assert!(out.contains("vertex map:"));
}

#[test]
fn verify_malformed_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.hrc");
    std::fs::write(&f, "HRC1\nr 3 n 4 k 2 m 2\n0 1 2 0\n0 1 2 1\n").unwrap();
    let o = ramseylab(&["verify", "--pattern", "kite", path_str(&f)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));
}

#[test]
fn unknown_catalog_name_and_pattern() {
    assert_eq!(
        code(&ramseylab(&["verify", "--pattern", "kite", "no_such_cert"])),
        2
    );
    assert_eq!(
        code(&ramseylab(&[
            "verify",
            "--pattern",
            "nonsense",
            "kite_k6_n7"
        ])),
        2
    );
}

#[test]
fn shipped_catalog_matches_library() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("catalog");
    for info in catalog() {
        let text = std::fs::read_to_string(dir.join(format!("{}.hrc", info.name))).unwrap();
        let c = parse_coloring(&text).unwrap();
        assert_eq!(c, certificate(info.name).unwrap(), "{}", info.name);
        assert_eq!(write_coloring(&c), text);
        let p = Pattern::parse(info.pattern).unwrap();
        assert!(find_mono_copy(&c, &p).unwrap().is_none());
        let o = ramseylab(&["verify", "--pattern", info.pattern, info.name]);
        assert_eq!(code(&o), 0, "{}", info.name);
    }
    assert_eq!(code(&ramseylab(&["catalog", "check"])), 0);
}

#[test]
fn catalog_env_override() {
    let dir = tempfile::tempdir().unwrap();
    // a one-color K_5^3 stored under a catalog name; it contains bows
    let text = write_coloring(&ramseylab::Coloring::from_fn(3, 5, 1, |_| 0).unwrap());
    std::fs::write(dir.path().join("bow_k3_n5.hrc"), text).unwrap();
    let run = |name: &str| {
        Command::new(env!("CARGO_BIN_EXE_ramseylab"))
            .args(["verify", "--pattern", "bow", name])
            .env("RAMSEYLAB_CATALOG", dir.path())
            .output()
            .unwrap()
    };
    assert_eq!(code(&run("bow_k3_n5")), 1);
    assert_eq!(code(&run("bow_k6_n6")), 2);
}

#[test]
fn construct_sum_mod() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("s.hrc");
    let o = ramseylab(&[
        "construct",
        "sum-mod",
        "--n",
        "5",
        "--m",
        "5",
        "--out",
        path_str(&f),
    ]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("self-check passed"));
    let text = std::fs::read_to_string(&f).unwrap();
    assert_eq!(edge_lines(&text), 10);
    assert_eq!(
        code(&ramseylab(&["verify", "--pattern", "kite", path_str(&f)])),
        0
    );
}

#[test]
fn construct_certificate_to_stdout() {
    let o = ramseylab(&["construct", "certificate", "--name", "bow_k6_n6"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(edge_lines(&text), 20);
    assert_eq!(parse_coloring(&text).unwrap().k(), 6);
}

#[test]
fn construct_stepping_up_and_k43e() {
    let dir = tempfile::tempdir().unwrap();
    let phi = dir.path().join("phi.hrc");
    std::fs::write(
        &phi,
        write_coloring(&ramseylab::constructions::two_pentagon_coloring()),
    )
    .unwrap();
    let psi = dir.path().join("psi.hrc");
    let o = ramseylab(&[
        "construct",
        "stepping-up",
        "--input",
        path_str(&phi),
        "-o",
        path_str(&psi),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let c = parse_coloring(&std::fs::read_to_string(&psi).unwrap()).unwrap();
    assert_eq!((c.r(), c.n(), c.k()), (3, 32, 4));
    let o = ramseylab(&[
        "construct",
        "k43e",
        "--input",
        path_str(&phi),
        "-o",
        path_str(&psi),
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        code(&ramseylab(&["verify", "--pattern", "K43e", path_str(&psi)])),
        0
    );
    // a monochromatic triangle violates the k43e precondition
    std::fs::write(
        &phi,
        write_coloring(&ramseylab::Coloring::from_fn(2, 3, 1, |_| 0).unwrap()),
    )
    .unwrap();
    assert_eq!(
        code(&ramseylab(&[
            "construct",
            "k43e",
            "--input",
            path_str(&phi)
        ])),
        1
    );
}

#[test]
fn random_cover_needs_seed_and_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let base = dir.path().join("base.hrc");
    let mut b = ramseylab::Coloring::unassigned(3, 6, 1).unwrap();
    for t in [[0u32, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]] {
        b.set(&t, 0).unwrap();
    }
    std::fs::write(&base, write_coloring(&b)).unwrap();
    let no_seed = ramseylab(&[
        "construct",
        "random-cover",
        "--base",
        path_str(&base),
        "--k",
        "12",
    ]);
    assert_eq!(code(&no_seed), 2);
    let args = [
        "construct",
        "random-cover",
        "--base",
        path_str(&base),
        "--k",
        "12",
        "--seed",
        "7",
        "--pattern",
        "bow",
    ];
    let a = ramseylab(&args);
    let b = ramseylab(&args);
    assert_eq!(code(&a), 0, "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn construct_pasch_host_and_kneser() {
    let o = ramseylab(&["construct", "pasch-host", "--q", "2"]);
    assert_eq!(code(&o), 0);
    let h = parse_coloring(&stdout(&o)).unwrap();
    assert_eq!((h.n(), h.assigned_count()), (21, 147));
    let o = ramseylab(&["construct", "kneser", "--r", "3", "--k", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(parse_coloring(&stdout(&o)).unwrap().n(), 6);
    assert_eq!(
        code(&ramseylab(&["construct", "pasch-host", "--q", "4"])),
        1
    );
}

#[test]
fn design_commands() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("sqs8.des");
    let o = ramseylab(&[
        "design",
        "find",
        "--t",
        "3",
        "--v",
        "8",
        "--k",
        "4",
        "-o",
        path_str(&d),
    ]);
    assert_eq!(code(&o), 0);
    let design = parse_design(&std::fs::read_to_string(&d).unwrap()).unwrap();
    assert!(is_t_design(&design, 3, 1));
    assert_eq!(
        code(&ramseylab(&["design", "verify", "--t", "3", path_str(&d)])),
        0
    );
    assert_eq!(
        code(&ramseylab(&[
            "design",
            "verify",
            "--t",
            "3",
            "--lambda",
            "2",
            path_str(&d)
        ])),
        1
    );
    let o = ramseylab(&["construct", "design-coloring", "--design", path_str(&d)]);
    assert_eq!(code(&o), 0);
    assert_eq!(parse_coloring(&stdout(&o)).unwrap().k(), 7);
    let o = ramseylab(&[
        "construct",
        "design-coloring",
        "--v",
        "10",
        "--method",
        "pairs",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(parse_coloring(&stdout(&o)).unwrap().k(), 15);
    let o = ramseylab(&["design", "find", "--t", "3", "--v", "7", "--k", "4"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn search_outcomes() {
    let o = ramseylab(&["search", "--pattern", "kite", "--k", "4", "--n", "5"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("NOT FOUND ⇒ r_4(kite) ≤ 5\n"));

    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("cert.hrc");
    let o = ramseylab(&[
        "search",
        "--pattern",
        "kite",
        "--k",
        "4",
        "--n",
        "4",
        "--out",
        path_str(&f),
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("FOUND ⇒ r_4(kite) > 4\n"));
    assert_eq!(
        code(&ramseylab(&["verify", "--pattern", "kite", path_str(&f)])),
        0
    );

    let o = ramseylab(&[
        "search",
        "--pattern",
        "bow",
        "--k",
        "6",
        "--n",
        "7",
        "--budget",
        "5",
    ]);
    assert_eq!(code(&o), 3);

    let o = ramseylab(&[
        "--threads",
        "4",
        "search",
        "--pattern",
        "bow",
        "--k",
        "5",
        "--n",
        "6",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("NOT FOUND"));
}

#[test]
fn turan_and_bounds() {
    let o = ramseylab(&["turan", "--pattern", "bow", "--n", "8"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next(), Some("8"));
    let o = ramseylab(&["turan", "--pattern", "kite", "--n", "9", "--budget", "3"]);
    assert_eq!(code(&o), 3);
    let o = ramseylab(&["bounds", "--pattern", "bow", "--k", "6"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("[7,7]"));
    assert!(out.contains("certificate bow_k6_n6"));
    assert!(out.contains("pigeonhole"));
}
