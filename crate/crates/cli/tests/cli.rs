use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn wedge(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wedge"))
        .args(args)
        .env_remove("WEDGE_WORKERS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn wedge");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn field(line: &str, i: usize) -> &str {
    line.split(',').nth(i).unwrap()
}

#[test]
fn wedge_rows() {
    let out = stdout(&wedge(&["wedge"], "a1,b1,a2,b2\r\n1,1,1,1\r\n1,-1,1,1\n1,2,3,4\n"));
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines[0], "a1,b1,a2,b2,prob,formula,terms,remainder_bound");
    assert_eq!(lines.len(), 4);
    // a+b+ = 1 is below the N = 3 threshold
    assert_eq!(field(lines[1], 5), "theta_dual");
    let p: f64 = field(lines[1], 4).parse().unwrap();
    assert!((p - 0.730_000_328_322_645_5).abs() < 1e-16);
    assert_eq!(&lines[2][..lines[2].find(",trivial_zero").unwrap()], "1.0,-1.0,1.0,1.0,0.0000000000000000e0");
    assert_eq!(field(lines[3], 5), "doob");
}

#[test]
fn prob_has_seventeen_significant_digits() {
    let out = stdout(&wedge(&["wedge"], "a1,b1,a2,b2\n0.3,0.7,1.1,0.2\n"));
    let prob = field(out.lines().nth(1).unwrap(), 4);
    let mantissa = prob.split('e').next().unwrap().replace(['.', '-'], "");
    assert_eq!(mantissa.len(), 17, "{prob}");
}

#[test]
fn header_only_input() {
    let out = stdout(&wedge(&["wedge"], "a1,b1,a2,b2\n"));
    assert_eq!(out, "a1,b1,a2,b2,prob,formula,terms,remainder_bound\n");
}

#[test]
fn output_round_trips() {
    let first = stdout(&wedge(&["wedge"], "a1,b1,a2,b2\n0.1,0.2,0.3,0.4\n2.5,0.01,7,3\n1e-3,9.99,0.5,0.5\n"));
    // feed the echoed parameter columns back in
    let mut again = String::from("a1,b1,a2,b2\n");
    for line in first.lines().skip(1) {
        let cols: Vec<_> = line.split(',').take(4).collect();
        again.push_str(&cols.join(","));
        again.push('\n');
    }
    let second = stdout(&wedge(&["wedge"], &again));
    assert_eq!(first, second);
}

#[test]
fn malformed_row_reports_line() {
    let out = wedge(&["wedge"], "a1,b1,a2,b2\n1,1,1,1\n1,1,oops,1\n");
    assert!(!out.status.success());
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));

    let out = wedge(&["wedge"], "a1,b1,a2\n1,1,1\n");
    assert!(!out.status.success());
    assert!(stderr(&out).contains("line 1"));

    let out = wedge(&["wedge"], "a1,b1,a2,b2\n1,1,1\n");
    assert!(!out.status.success());
    assert!(stderr(&out).contains("line 2"));
}

#[test]
fn failed_run_leaves_no_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("out.csv");
    let out = wedge(&["wedge", "-o", target.to_str().unwrap()], "a1,b1,a2,b2\n1,1,1,1\nbad\n");
    assert!(!out.status.success());
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn output_file_written() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("out.csv");
    let out = wedge(&["wedge", "--output", target.to_str().unwrap()], "a1,b1,a2,b2\n1,1,1,1\n");
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(fs::read_to_string(&target).unwrap().lines().count(), 2);
}

#[test]
fn terms_and_workers_flags() {
    let two = stdout(&wedge(&["wedge", "--terms", "2"], "a1,b1,a2,b2\n1,1,1,1\n"));
    assert_eq!(field(two.lines().nth(1).unwrap(), 6), "2");
    assert!(!wedge(&["--terms", "1", "table"], "").status.success());
    assert!(!wedge(&["--terms", "9", "table"], "").status.success());
    assert!(!wedge(&["--workers", "0", "wedge"], "a1,b1,a2,b2\n").status.success());
    let one = stdout(&wedge(&["wedge", "--workers", "1"], "a1,b1,a2,b2\n1,1,1,1\n"));
    let four = stdout(&wedge(&["wedge", "--workers", "4"], "a1,b1,a2,b2\n1,1,1,1\n"));
    assert_eq!(one, four);
}

#[test]
fn ks_values() {
    let out = stdout(&wedge(&["ks", "1.0", "0", "10"], ""));
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines[0], "a,cdf");
    let k1: f64 = field(lines[1], 1).parse().unwrap();
    assert!((k1 - 0.730_000_328_322_645_5).abs() < 1e-16);
    assert_eq!(field(lines[2], 1).parse::<f64>().unwrap(), 0.0);
    assert_eq!(field(lines[3], 1).parse::<f64>().unwrap(), 1.0);

    let from_csv = stdout(&wedge(&["ks"], "a\n1.0\n0\n10\n"));
    assert_eq!(from_csv, out);
    assert!(!wedge(&["ks"], "x\n1\n").status.success());
}

#[test]
fn table_rows() {
    let out = stdout(&wedge(&["table"], ""));
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines.len(), 8);
    let row = |n: usize| -> (f64, f64) {
        let l = lines[n - 1];
        (field(l, 1).parse().unwrap(), field(l, 2).parse().unwrap())
    };
    for (n, tau, eps) in [(2, 1.380, 2.9e-6), (3, 1.136, 1.8e-17), (6, 0.937, 2.3e-83)] {
        let (t, e) = row(n);
        assert!((t - tau).abs() <= 1e-3, "N={n}: {t}");
        assert!((e / eps - 1.0).abs() <= 0.05, "N={n}: {e}");
    }
}

fn write_config(dir: &Path, text: &str) -> String {
    let path = dir.join("band.toml");
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

fn bcp_value(out: &str, key: &str) -> f64 {
    out.lines()
        .find_map(|l| l.strip_prefix(&format!("{key} = ")))
        .unwrap_or_else(|| panic!("{key} missing in {out}"))
        .parse()
        .unwrap()
}

#[test]
fn bcp_wide_band_is_one() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "lower = [[0, -60], [1, -60]]\nupper = [[0, 60], [1, 60]]\nsamples = 1000\nseed = 3\n",
    );
    let out = stdout(&wedge(&["bcp", &cfg], ""));
    assert_eq!(bcp_value(&out, "estimate"), 1.0);
    assert_eq!(bcp_value(&out, "samples"), 1000.0);
}

#[test]
fn bcp_constant_band() {
    // (4/pi) sum (-1)^k/(2k+1) exp(-(2k+1)^2 pi^2 / 8)
    let exact = 0.370_777_429_799_523_9;
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "lower = [[0.0, -1.0], [1.0, -1.0]]\nupper = [[0.0, 1.0], [1.0, 1.0]]\n");
    let out = stdout(&wedge(&["bcp", &cfg, "--samples", "100000", "--seed", "11"], ""));
    let (est, se) = (bcp_value(&out, "estimate"), bcp_value(&out, "std_error"));
    assert_eq!(bcp_value(&out, "seed"), 11.0);
    assert!((est - exact).abs() < 3.0 * se, "{est} +- {se}");
    let again = stdout(&wedge(&["bcp", &cfg, "--samples", "100000", "--seed", "11", "--workers", "3"], ""));
    assert_eq!(out, again);
}

#[test]
fn bcp_malformed_config() {
    let dir = tempfile::tempdir().unwrap();
    for text in [
        "lower = 3",
        "lower = [[0, -1], [1, -1]]",
        "lower = [[0, -1], [1, -1]]\nupper = [[0, 1], [2, 1]]\n",
        "lower = [[0, 1], [1, 1]]\nupper = [[0, 2], [1, 2]]\n",
        "lower = [[0, -1], [1, -1]]\nupper = [[0, 1], [1, 1]]\ncolour = 1\n",
    ] {
        let cfg = write_config(dir.path(), text);
        let out = wedge(&["bcp", &cfg], "");
        assert!(!out.status.success(), "accepted: {text}");
    }
    assert!(!wedge(&["bcp", "/nonexistent/band.toml"], "").status.success());
}

#[test]
fn bench_writes_study() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("study.csv");
    let out = stdout(&wedge(&["bench", "--count", "500", "--seed", "4", "-o", csv.to_str().unwrap()], ""));
    assert!(out.contains("tuples = 500"));
    let text = fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().next().unwrap(), "a1,b1,a2,b2,log_ab_plus,n_doob,n_theta,trivial");
    assert_eq!(text.lines().count(), 501);
    assert!(!wedge(&["bench", "--count", "10"], "").status.success());
}

#[test]
fn time_rows() {
    let out = stdout(&wedge(&["time", "--sizes", "100,200", "--workers-list", "1,2"], ""));
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines[0], "n,workers,seconds");
    assert_eq!(lines.len(), 5);
    assert!(!wedge(&["time", "--sizes", "0"], "").status.success());
}
