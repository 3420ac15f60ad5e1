use std::fs;
use std::process::Command;

use envelope_circle::cli::run;
use envelope_circle::render::read_pbm;

fn run_captured(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("envelope-circle").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn circle_writes_pbm() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c.pbm");
    let (code, _, err) = run_captured(&[
        "circle",
        "--cx",
        "100",
        "--cy",
        "100",
        "--radius",
        "40",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    let canvas = read_pbm(&fs::read(&out).unwrap()).unwrap();
    // 2 * (width 41 + margin 2)
    assert_eq!((canvas.width(), canvas.height()), (86, 86));
    assert_eq!(canvas.count_set(), 156);
}

#[test]
fn explicit_canvas_clips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c.pbm");
    let (code, stdout, _) = run_captured(&[
        "circle",
        "--cx",
        "0",
        "--cy",
        "0",
        "--radius",
        "20",
        "--canvas",
        "30x25",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("outside the canvas"));
    let canvas = read_pbm(&fs::read(&out).unwrap()).unwrap();
    assert_eq!((canvas.width(), canvas.height()), (30, 25));
    assert!(canvas.count_set() > 0 && canvas.count_set() < 92);
}

#[test]
fn circle_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c.json");
    let (code, _, _) = run_captured(&[
        "circle",
        "--cx",
        "-5",
        "--cy",
        "7",
        "--radius",
        "6",
        "--algo",
        "one",
        "--no-correct",
        "--format",
        "json",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_slice(&fs::read(&out).unwrap()).unwrap();
    assert_eq!(v["radius_px"], 6);
    assert_eq!(v["algo"], "one");
    assert_eq!(v["corrected"], false);
    assert_eq!(v["degenerate"], true);
}

#[test]
fn errors_writes_one_report_per_radius() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let (code, stdout, _) = run_captured(&[
        "errors",
        "--radii",
        "20,40,60,80,100",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let v: Vec<serde_json::Value> = serde_json::from_slice(&fs::read(&out).unwrap()).unwrap();
    assert_eq!(v.len(), 5);
    let keys: Vec<_> = v[0].as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys.len(), 7);
    assert!(stdout.contains("pub.avg"));
}

#[test]
fn stringart_and_compare() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.pbm");
    let (code, _, _) = run_captured(&[
        "stringart",
        "--n",
        "4",
        "--cell",
        "3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(fs::read(&out).unwrap().starts_with(b"P1\n13 13\n"));

    let out = dir.path().join("cmp.json");
    let (code, stdout, _) =
        run_captured(&["compare", "--radius", "40", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.contains("jaccard"));
    let v: serde_json::Value = serde_json::from_slice(&fs::read(&out).unwrap()).unwrap();
    assert_eq!(v["envelope_pixels"], 156);
}

#[test]
fn usage_errors_exit_one() {
    let (code, _, err) = run_captured(&[
        "circle", "--cx", "1", "--cy", "1", "--radius", "0", "--out", "x.pbm",
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("invalid radius"));
    let (code, _, err) = run_captured(&["circle", "--bogus"]);
    assert_eq!(code, 1);
    assert!(err.contains("Usage"));
    let (code, _, _) = run_captured(&["nonsense"]);
    assert_eq!(code, 1);
    let (code, _, _) = run_captured(&["stringart", "--n", "0", "--cell", "2", "--out", "x.pbm"]);
    assert_eq!(code, 1);
    let (code, _, _) = run_captured(&["errors", "--radii", "20,-1", "--out", "x.json"]);
    assert_eq!(code, 1);
    let (code, _, _) = run_captured(&[
        "circle",
        "--cx",
        "0",
        "--cy",
        "0",
        "--radius",
        "5",
        "--parallel",
        "0",
        "--out",
        "x.pbm",
    ]);
    assert_eq!(code, 1);
}

#[test]
fn runtime_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("no/such/dir/c.pbm");
    let (code, _, err) = run_captured(&[
        "circle",
        "--cx",
        "0",
        "--cy",
        "0",
        "--radius",
        "5",
        "--out",
        missing.to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("cannot write"));
}

#[test]
fn help_exits_zero() {
    let (code, stdout, _) = run_captured(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("stringart"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_envelope-circle");
    let status = Command::new(bin)
        .args(["circle", "--radius", "0"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(1));
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.pbm");
    let status = Command::new(bin)
        .args([
            "stringart",
            "--n",
            "2",
            "--cell",
            "1",
            "--out",
            out.to_str().unwrap(),
        ])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    assert_eq!(fs::read(out).unwrap(), b"P1\n3 3\n0 1 1\n1 1 0\n1 0 0\n");
}
