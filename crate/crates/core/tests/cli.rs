use std::path::PathBuf;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_k3-conics"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("k3-conics-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn bad_flags_exit_2() {
    assert_eq!(bin(&["golay", "--no-such-flag"]).status.code(), Some(2));
    assert_eq!(bin(&["--octad-choice", "7", "golay"]).status.code(), Some(2));
    assert_eq!(bin(&["conics", "--clique", "some"]).status.code(), Some(2));
    assert_eq!(bin(&[]).status.code(), Some(2));
}

#[test]
fn golay_stats_and_export() {
    let path = tmp("golay.txt");
    let out = bin(&["golay", "--stats", "--steiner", "--export", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    for needle in ["759", "2576", "Steiner"] {
        assert!(stdout.contains(needle), "{needle} missing from\n{stdout}");
    }
    let words = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = words.lines().collect();
    assert_eq!(lines.len(), 4096);
    assert!(lines.windows(2).all(|w| w[0] < w[1]));
    assert!(lines.iter().all(|l| l.len() == 24 && l.chars().all(|c| c == '0' || c == '1')));
    let generator = std::fs::read_to_string(path.with_extension("gen")).unwrap();
    assert_eq!(generator.lines().count(), 12);
}

#[test]
fn leech_counts_are_byte_stable() {
    let a = bin(&["leech", "--counts"]);
    let b = bin(&["leech", "--counts", "--threads", "2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8(a.stdout).unwrap().contains("196560"));
}

#[test]
fn conics_with_another_octad() {
    let json = tmp("conics2.json");
    let out = bin(&["conics", "--octad-choice", "2", "--json", json.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report["overall"], true);
    assert_eq!(report["environment"]["octad_choice"], "2");
    let checks = report["stages"][0]["checks"].as_array().unwrap();
    let split = checks.iter().find(|c| c["name"] == "pattern split (#1, #2, #3, #4)").unwrap();
    assert_eq!(split["computed"], serde_json::json!([96, 96, 320, 288]));
    assert_eq!(report["stages"][0]["observations"]["clique_indices"].as_array().unwrap().len(), 16);
}

#[test]
fn conics_export_has_800_lines() {
    let path = tmp("conics.txt");
    let out = bin(&["conics", "--export", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 800);
    assert!(text.lines().all(|l| l.split_whitespace().count() == 27));
}

#[test]
fn ns_passes_and_exports() {
    let path = tmp("n.txt");
    let out = bin(&["ns", "--export", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let text = std::fs::read_to_string(&path).unwrap();
    let headers: Vec<&str> = text.lines().filter(|l| l.split_whitespace().count() == 2).take(3).collect();
    assert!(text.starts_with("20 20\n"));
    assert!(text.contains("\n1 20\n") && text.contains("\n800 20\n"), "{headers:?}");
}
