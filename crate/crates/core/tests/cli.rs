use std::process::Command;

fn orthochroma(args: &[&str], threads: Option<&str>) -> (i32, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_orthochroma"));
    cmd.args(args);
    if let Some(t) = threads {
        cmd.env("ORTHOCHROMA_THREADS", t);
    }
    let out = cmd.output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("orthochroma-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn verify_default_height_exits_zero() {
    let (code, out) = orthochroma(&["verify", "--p", "2", "--H", "100", "--format", "text"], None);
    assert_eq!(code, 0, "{out}");
    assert!(!out.contains("FAIL"));
}

#[test]
fn z_axis_is_black_in_four_colouring() {
    let (code, out) = orthochroma(&["color", "--mode", "four", "0", "0", "1"], None);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["colour"], "Black");
    assert_eq!(v["config"]["seed"], 0);
}

#[test]
fn flags_may_follow_negative_coordinates() {
    let (code, out) = orthochroma(&["color", "--mode", "valuation", "-7", "0", "1", "--p", "2", "--format", "text"], None);
    assert_eq!(code, 0);
    assert_eq!(out, "Black\n");
    let (code, out) = orthochroma(&["color", "-3/5", "-4/5", "0", "--format", "text"], None);
    assert_eq!(code, 0);
    assert_eq!(out, "Red\n");
}

#[test]
fn axes_triangle_needs_three_colours() {
    let path = temp_file("axes.txt", "1 0 0\n0 1 0\n0 0 1\n");
    let (code, out) = orthochroma(&["chromatic", path.to_str().unwrap()], None);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["chi"], 3);
}

#[test]
fn graph_export_round_trips_through_chromatic() {
    let pts = temp_file("square.txt", "1 0 0\n0 1 0\n0 0 1\n3/5 4/5 0\n-4 3 0\n1 1 0\n1 -1 0\n");
    let (code, dimacs) = orthochroma(&["graph", "--format", "dimacs", pts.to_str().unwrap()], None);
    assert_eq!(code, 0);
    assert!(dimacs.contains("p edge 7 "));
    let dpath = temp_file("square.col", &dimacs);
    let (_, json_graph) = orthochroma(&["graph", pts.to_str().unwrap()], None);
    let jpath = temp_file("square.json", &json_graph);
    let chi = |p: &std::path::Path| {
        let (code, out) = orthochroma(&["chromatic", p.to_str().unwrap()], None);
        assert_eq!(code, 0);
        serde_json::from_str::<serde_json::Value>(&out).unwrap()["chi"].clone()
    };
    assert_eq!(chi(&pts), chi(&dpath));
    assert_eq!(chi(&pts), chi(&jpath));
}

#[test]
fn claims_flag_the_inner_product() {
    let (code, out) = orthochroma(&["claims", "--H", "40", "--N", "50"], None);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let c = v["claims"].as_array().unwrap().iter().find(|c| c["id"] == "c").unwrap();
    assert_eq!(c["status"], "DISCREPANCY");
    assert_eq!(c["values"]["inner_form"], 12);
}

#[test]
fn table_certificate_and_broken_table() {
    let (code, out) = orthochroma(&["table"], None);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["table"].as_object().unwrap().len(), 26);
    assert_eq!(v["certificate"]["checked"], 676);

    let mut table = v["table"].as_object().unwrap().clone();
    table.insert("+00".into(), "White".into());
    let path = temp_file("broken.json", &serde_json::to_string(&table).unwrap());
    let (code, _) = orthochroma(&["table", "--check", path.to_str().unwrap()], None);
    assert_eq!(code, 1);
}

#[test]
fn usage_errors() {
    assert_eq!(orthochroma(&["nope"], None).0, 2);
    assert_eq!(orthochroma(&["verify", "--H", "ten"], None).0, 2);
    assert_eq!(orthochroma(&["color", "--mode", "four", "0", "0", "0"], None).0, 2);
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let args = ["search", "--budget", "30", "--seed", "11", "--size", "10", "--pool-height", "5"];
    let (_, one) = orthochroma(&args, Some("1"));
    let (_, four) = orthochroma(&args, Some("4"));
    let (_, again) = orthochroma(&args, Some("1"));
    assert_eq!(one, four);
    assert_eq!(one, again);
    assert!(one.contains("\"seed\":11"));

    let (_, g1) = orthochroma(&["gen", "--H", "21", "--mode", "stereo"], Some("1"));
    let (_, g2) = orthochroma(&["gen", "--H", "21", "--mode", "stereo"], Some("3"));
    assert_eq!(g1, g2);
}

#[test]
fn out_file() {
    let dir = std::env::temp_dir().join(format!("orthochroma-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("orbit.jsonl");
    let (code, stdout) = orthochroma(&["orbit", "--N", "5", "--out", path.to_str().unwrap()], None);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 7);
    assert!(text.contains("\"monochromatic\":true"));
}
