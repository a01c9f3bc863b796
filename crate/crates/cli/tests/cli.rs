use std::fs;
use std::process::{Command, Output};

use ads_core::catalog::Catalog;
use ads_core::format;

fn adsmod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adsmod"))
        .args(args)
        .output()
        .expect("adsmod runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn bound_zero_gives_header_only() {
    let o = adsmod(&["census", "--bound", "0"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 1);
    assert!(out.starts_with("ring,module,size,ads-definition,"));
    assert!(out.trim_end().ends_with(",witness"));
}

#[test]
fn census_rows_are_sorted_and_complete() {
    let o = adsmod(&[
        "census",
        "--bound",
        "16",
        "--properties",
        "ads,c1",
        "--jobs",
        "2",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    let expected = Catalog::load("default").unwrap().entries(16).unwrap().len();
    assert_eq!(out.lines().count(), expected + 1);
    let z2z8 = adsmod(&["census", "--bound", "16", "--properties", "ads"]);
    let line = stdout(&z2z8)
        .lines()
        .find(|l| l.starts_with("zmod8,Z2+Z8,"))
        .map(str::to_owned)
        .unwrap();
    assert_eq!(
        line,
        "zmod8,Z2+Z8,16,false,false,false,false,false,false,s=9;t=3;c=1"
    );
}

#[test]
fn text_format_and_output_file() {
    let dir = std::env::temp_dir().join(format!("adsmod-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join("census.txt");
    let o = adsmod(&[
        "census",
        "--bound",
        "8",
        "--format",
        "text",
        "--properties",
        "ads-definition",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).is_empty());
    let text = fs::read_to_string(&path).unwrap();
    assert!(
        text.lines()
            .any(|l| l == "ring=zmod4 module=Z4 size=4 ads-definition=true"),
        "{text}"
    );
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn unknown_catalog_fails() {
    let o = adsmod(&["census", "--catalog", "nope"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("unknown catalog `nope`"));
}

#[test]
fn check_catalog_module_and_replay() {
    let o = adsmod(&["check", "zmod8:Z2+Z8", "--properties", "ads"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("ads-cyclic=false"));
    assert!(stdout(&o).contains("witness=s=9;t=3;c=1"));
    let o = adsmod(&["check", "zmod8:Z2+Z8", "--replay", "s=9;t=3;c=1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "replay confirmed s=9;t=3;c=1");
    // Z2 ⊕ Z8 = span(9) ⊕ span(1) splits, so this triple is no witness.
    let o = adsmod(&["check", "zmod8:Z2+Z8", "--replay", "s=9;t=3;c=3"]);
    assert!(!o.status.success());
}

#[test]
fn check_reads_module_files() {
    let dir = std::env::temp_dir().join(format!("adsmod-files-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let m = Catalog::load("default")
        .unwrap()
        .find("zmod12:regular")
        .unwrap()
        .module;
    let good = dir.join("z12.txt");
    fs::write(&good, format::write(&m)).unwrap();
    let o = adsmod(&[
        "check",
        good.to_str().unwrap(),
        "--properties",
        "ads-definition,injective",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(
        stdout(&o).trim(),
        "ring=file module=z12.txt size=12 ads-definition=true injective=true"
    );

    let bad = dir.join("bad.txt");
    fs::write(&bad, "ring.orders 4\nring.mul 0 0 1\n").unwrap();
    let o = adsmod(&["check", bad.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("line 2, column 14"), "{}", stderr(&o));
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_exit_status_follows_sections() {
    let o = adsmod(&["verify", "--catalog", "semisimple"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("overall pass\n"));
    let o = adsmod(&["verify", "--catalog", "semisimple", "--mutant", "cyclic"]);
    assert!(!o.status.success());
    assert!(stdout(&o).contains("section cross-method-agreement fail"));
}

#[test]
fn describe_reports_structure() {
    let o = adsmod(&["describe", "local-f2xy:regular"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("socle=4 radical=4 singular=4"));
    assert!(out.contains("indecomposable-parts=[8]"));
    assert!(out.contains("injective-hull size=64 valid=true"));
}

#[test]
fn size_guard_marks_cells_without_failing() {
    let o = adsmod(&[
        "--seed-guard",
        "8",
        "census",
        "--bound",
        "16",
        "--properties",
        "ads-definition",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "zmod8,Z2+Z4,8,false,s=5;t=3;c=1"));
    assert!(out.lines().any(|l| l == "zmod8,Z2+Z8,16,guard,"));
}
