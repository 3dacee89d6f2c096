use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn chigap(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_chigap"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn chigap");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> &str {
    std::str::from_utf8(&o.stdout).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

const C5_EDGES: &str = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";

#[test]
fn gap_on_five_cycle() {
    let o = chigap(&["gap"], C5_EDGES);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n=5 m=5 chi=3 gap=0\n");
}

#[test]
fn gap_reads_files_and_multiple_graphs() {
    let path = temp_file("two.g6", "C~\nCr\n");
    let o = chigap(&["gap", path.to_str().unwrap()], "");
    assert_eq!(stdout(&o), "n=4 m=6 chi=4 gap=0\nn=4 m=4 chi=2 gap=1\n");
}

#[test]
fn gap_rejects_disconnected_without_output() {
    let o = chigap(&["gap"], "C~\n4 2\n0 1\n2 3\n");
    // first line is graph6, so the edge list is malformed graph6 input
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());

    let o = chigap(&["gap"], "@\nCA\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("not connected"));
}

#[test]
fn verify_small() {
    let o = chigap(&["verify", "--max-n", "4", "--mode", "labeled"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "n\tmode\tconnected\textremal\tcounterexamples\n1\tlabeled\t1\t1\t0\n2\tlabeled\t1\t1\t0\n\
         3\tlabeled\t4\t4\t0\n4\tlabeled\t38\t29\t0\n"
    );
    let o = chigap(&["verify", "--max-n", "5", "--mode", "unlabeled", "--jobs", "2"], "");
    assert!(stdout(&o).ends_with("5\tunlabeled\t21\t9\t0\n"));
}

#[test]
fn verify_range_is_a_usage_error() {
    let o = chigap(&["verify", "--max-n", "8"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    let o = chigap(&["verify", "--max-n", "3", "--jobs", "0"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn classify_outputs() {
    let o = chigap(&["classify"], "IheA@GUAo\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "Neither core=0,1,2,3,4,5,6,7,8,9\n");

    let o = chigap(&["classify", "--format", "edgelist"], "5 7\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n3 4\n");
    assert_eq!(stdout(&o), "TypeA m=4 core=0,1,2,3\n");

    let o = chigap(&["classify"], "# star\n4 3\n0 1\n0 2\n0 3\n");
    assert_eq!(stdout(&o), "TypeA m=1 core=3\n");
}

#[test]
fn chi_with_witness() {
    let o = chigap(&["chi", "--witness"], C5_EDGES);
    let line = stdout(&o).trim_end();
    let mut parts = line.split(' ');
    assert_eq!(parts.next(), Some("chi=3"));
    let colors: Vec<(usize, usize)> = parts
        .map(|p| {
            let (v, c) = p.split_once(':').unwrap();
            (v.parse().unwrap(), c.parse().unwrap())
        })
        .collect();
    assert_eq!(colors.len(), 5);
    for i in 0..5 {
        assert_ne!(colors[i].1, colors[(i + 1) % 5].1);
    }
    assert_eq!(stdout(&chigap(&["chi"], "@\nBw\n")), "chi=1\nchi=3\n");
}

#[test]
fn usage_errors_exit_2_with_empty_stdout() {
    for args in [&["chi", "--bogus"][..], &["nope"][..], &["gen", "--kind", "typeC", "--core", "3"][..]] {
        let o = chigap(args, "");
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
        assert!(!o.stderr.is_empty());
    }
    let o = chigap(&["chi"], "3 1\n0 3\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    let o = chigap(&["gen", "--kind", "typeB", "--core", "6"], "");
    assert_eq!(o.status.code(), Some(2));
    let o = chigap(&["gen", "--kind", "typeA", "--core", "3", "--trees", "5:2"], "");
    assert_eq!(o.status.code(), Some(2));
    let o = chigap(&["chi", "/nonexistent/graphs.g6"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gen_output_feeds_other_subcommands() {
    let o = chigap(&["gen", "--kind", "typeB", "--core", "7", "--trees", "0:3,0:2,4:5", "--seed", "3", "--count", "4"], "");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o).to_string();
    assert_eq!(text.lines().count(), 4);
    for line in text.lines() {
        let g = chigap::from_graph6(line).unwrap();
        assert_eq!(chigap::to_graph6(&g), line);
        assert_eq!(g.vertex_count(), 17);
    }
    assert_eq!(text, stdout(&chigap(&["gen", "--kind", "typeB", "--core", "7", "--trees", "0:3,0:2,4:5", "--seed", "3", "--count", "4"], "")));

    let classify = chigap(&["classify"], &text);
    assert!(stdout(&classify).lines().all(|l| l == "TypeB len=7 core=0,1,2,3,4,5,6"));
    let gap = chigap(&["gap"], &text);
    assert!(stdout(&gap).lines().all(|l| l == "n=17 m=17 chi=3 gap=0"));
    let chi = chigap(&["chi"], &text);
    assert_eq!(stdout(&chi), "chi=3\n".repeat(4));

    let a = chigap(&["gen", "--kind", "typeA", "--core", "5", "--trees", "1:4", "--seed", "9"], "");
    assert_eq!(stdout(&chigap(&["gap"], stdout(&a))), "n=9 m=14 chi=5 gap=0\n");
}

#[test]
fn check_lemmas_passes() {
    let o = chigap(&["check-lemmas", "--trials", "20", "--seed", "5", "--max-n", "5"], "");
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<&str> = stdout(&o).lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], "decorated-chi\tchecked=60\tfailures=0");
    assert_eq!(lines[1], "pendant-closure\tchecked=20\tfailures=0");
    assert!(lines[2].starts_with("lemma-big\tchecked="));
    assert!(lines[2].ends_with("failures=0"));
}
