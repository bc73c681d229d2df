use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matroids"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn freeprod_reproduces_worked_example() {
    let out = run(&["freeprod", "uniform:2,3", "4:0,2;0,3;1,2;1,3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("7:"));
    assert_eq!(text.trim().split_once(':').unwrap().1.split(';').count(), 25);
}

#[test]
fn iso_positive_prints_bijection() {
    let out = run(&["iso", "3:0,1;0,2;1,2", "3:0,1;0,2;1,2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0,1,2");
}

#[test]
fn iso_negative_exits_one() {
    let out = run(&["iso", "2:0;1", "2:0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn invalid_matroid_exits_three() {
    for bad in ["2:0;1;0,1", "3:1,0", "not-a-literal"] {
        let out = run(&["parse", bad]);
        assert_eq!(out.status.code(), Some(3), "for input {bad:?}");
    }
}

#[test]
fn usage_error_exits_two() {
    let out = run(&["rank", "3:0,1;0,2;1,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn rank_and_minors() {
    assert_eq!(stdout(&run(&["rank", "uniform:2,3", "0,1,2"])).trim(), "2");
    assert_eq!(stdout(&run(&["dual", "uniform:2,3"])).trim(), "3:0;1;2");
    assert_eq!(stdout(&run(&["restrict", "uniform:2,3", "0,1"])).trim(), "2:0,1");
    assert_eq!(stdout(&run(&["contract", "uniform:2,3", "0"])).trim(), "2:0;1");
    assert_eq!(stdout(&run(&["dsum", "free:1", "zero:1"])).trim(), "2:0");
}

#[test]
fn weakmap_directions() {
    let out = run(&["weakmap", "2:0;1", "2:0"]);
    assert!(out.status.success());
    let phi = stdout(&out);
    let check = run(&["weakmap", "2:0;1", "2:0", phi.trim()]);
    assert!(check.status.success());
    assert_eq!(stdout(&check).trim(), "weak");
    let none = run(&["weakmap", "2:0", "2:0;1"]);
    assert_eq!(none.status.code(), Some(1));
}

#[test]
fn recover_splits_a_product() {
    let prod = stdout(&run(&["freeprod", "zero:1", "free:1"]));
    let out = run(&["recover", prod.trim(), "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "left=1:e right=1:0 witness=0");
    let neg = run(&["recover", "4:0,2;0,3;1,2;1,3", "2"]);
    assert_eq!(neg.status.code(), Some(1));
}

#[test]
fn factcount_counts_witnesses() {
    assert_eq!(stdout(&run(&["factcount", "2:0;1", "free:1", "zero:1"])).trim(), "2");
}

#[test]
fn welsh_line_format() {
    let out = run(&["welsh", "2", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "products=32 distinct=32 injective=yes");
}

#[test]
fn enumerate_writes_loadable_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("catalog4.txt");
    let out = run(&["enumerate", "4", "--out", path.to_str().unwrap(), "--quiet"]);
    assert!(out.status.success());
    let catalog = matroids::Catalog::load_from_path(&path).unwrap();
    assert_eq!(catalog.len(), 17);
    // determinism across worker counts
    let single = run(&["enumerate", "4", "--workers", "1"]);
    let mut buf = Vec::new();
    catalog.save(&mut buf).unwrap();
    assert_eq!(buf, single.stdout);
}

#[test]
fn verify_small_scale_passes() {
    let out = run(&["verify", "--scale", "3", "--quiet"]);
    assert!(out.status.success(), "verify failed: {}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("PASS"));
    assert!(!text.contains("FAIL"));
}
