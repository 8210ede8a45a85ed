use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

struct Env {
    dir: TempDir,
}

impl Env {
    fn new() -> Env {
        Env {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn manifest(&self, name: &str, text: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p
    }

    fn cache_dir(&self) -> PathBuf {
        self.dir.path().join("cache")
    }

    fn run(&self, command: &str, manifest: &Path, extra: &[&str]) -> Output {
        Command::new(env!("CARGO_BIN_EXE_symcirc"))
            .arg(command)
            .arg(manifest)
            .args(extra)
            .env("SYMCIRC_CACHE_DIR", self.cache_dir())
            .current_dir(self.dir.path())
            .output()
            .unwrap()
    }
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

#[test]
fn obstruct_trefoil_splice_passes() {
    let env = Env::new();
    let m = env.manifest("m.toml", "splice = \"trefoil\"\nphi = [0, 0, 1]\ngroups = [\"Z/2\", \"Z/3\"]\n");
    let out = env.run("obstruct", &m, &["--no-cache", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["status"], "PASSES");
    assert_eq!(r["result"]["verdict"]["interpretation"], "no obstruction found");
    let recs = r["result"]["records"].as_array().unwrap();
    assert_eq!(recs.len(), 34);
    assert!(recs.iter().all(|x| x["monic"] == true && x["implied_zeta_phi"] == "2"));
}

#[test]
fn obstruct_five_two_splice_fails() {
    let env = Env::new();
    let m = env.manifest("m.toml", "splice = \"5_2\"\nphi = [0, 0, 1]\n");
    let out = env.run("obstruct", &m, &["--no-cache"]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    assert_eq!(r["status"], "FAILS");
    assert_eq!(r["result"]["verdict"]["witness"]["reason"], "twisted polynomial is not monic");
}

#[test]
fn graph_manifold_flag_relabels_pass() {
    let env = Env::new();
    let m = env.manifest("m.toml", "splice = \"trefoil\"\nphi = [0, 0, 1]\ngraph_manifold = true\n");
    let r = json(&env.run("obstruct", &m, &["--no-cache"]));
    assert_eq!(r["result"]["verdict"]["interpretation"], "consistent with fibered");
}

#[test]
fn bundle_on_three_torus() {
    let env = Env::new();
    let m = env.manifest("m.toml", "builtin = \"T3\"\neuler = [0, 0, 1]\n");
    let out = env.run("bundle", &m, &["--no-cache"]);
    assert_eq!(out.status.code(), Some(0));
    let inv = &json(&out)["result"]["invariants"];
    let got: Vec<i64> = ["b1", "b2", "b2_plus", "b2_minus", "signature"]
        .iter()
        .map(|k| inv[k].as_i64().unwrap())
        .collect();
    assert_eq!(got, vec![3, 4, 2, 2, 0]);
}

#[test]
fn every_subcommand_runs() {
    let env = Env::new();
    let m = env.manifest(
        "m.toml",
        "splice = \"trefoil\"\nphi = [0, 0, 1]\neuler = [0, 0, 2]\ngroups = [\"Z/2\"]\n\
         [cone]\npairing = [0, 0, 1]\nclass = [\"1/2\", \"0\", [\"1.41\", \"1.42\"]]\n",
    );
    for cmd in ["h1", "bundle", "alex", "talex", "covers", "sw", "splice-sw", "cone"] {
        let out = env.run(cmd, &m, &["--no-cache"]);
        assert_eq!(out.status.code(), Some(0), "{cmd}: {}", String::from_utf8_lossy(&out.stderr));
        let r = json(&out);
        assert_eq!(r["command"], cmd);
        assert_eq!(r["status"], "computed");
    }
    let r = json(&env.run("alex", &m, &["--no-cache"]));
    assert_eq!(r["result"]["multivariable"]["text"], "z^2 - z + 1");
    assert_eq!(
        r["result"]["multivariable"]["terms"],
        serde_json::json!([[[0, 0, 0], 1], [[0, 0, 1], -1], [[0, 0, 2], 1]])
    );
    let r = json(&env.run("splice-sw", &m, &["--no-cache"]));
    assert_eq!(r["result"]["sw"]["support"].as_array().unwrap().len(), 1);
    let r = json(&env.run("h1", &m, &["--no-cache"]));
    assert_eq!(r["result"]["h1"]["free_rank"], 3);
}

#[test]
fn reports_are_deterministic_and_cached() {
    let env = Env::new();
    let m = env.manifest("m.toml", "splice = \"figure-eight\"\nphi = [0, 0, 1]\ngroups = [\"Z/3\"]\n");
    let cold = env.run("talex", &m, &[]);
    assert_eq!(cold.status.code(), Some(0));
    let entries = std::fs::read_dir(env.cache_dir()).unwrap().count();
    assert_eq!(entries, 1);
    let hit = env.run("talex", &m, &[]);
    let uncached = env.run("talex", &m, &["--no-cache"]);
    assert_eq!(cold.stdout, hit.stdout);
    assert_eq!(cold.stdout, uncached.stdout);
    let other = env.run("talex", &m, &["--no-cache"]);
    assert_eq!(uncached.stdout, other.stdout);
}

#[test]
fn output_path() {
    let env = Env::new();
    let m = env.manifest("m.toml", "builtin = \"T3\"\noutput = \"from-manifest.json\"\n");
    let out = env.run("h1", &m, &["--no-cache"]);
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(env.dir.path().join("from-manifest.json")).unwrap();
    assert!(text.contains("\"free_rank\": 3"));
    let target = env.dir.path().join("flag.json");
    env.run("h1", &m, &["--no-cache", "-o", target.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(target).unwrap(), text);
}

#[test]
fn input_errors_exit_two() {
    let env = Env::new();
    let cases = [
        "builtin = \"T3\"\nsplice = \"trefoil\"\n",
        "builtin = \"T3\"\nphi = [1, 0]\n",
        "this is not toml",
        "inline = \"< x | y >\"\nphi = [1]\n",
        "surgery = \"unknown-knot\"\n",
        "inline = \"< x, y, z | [x, y], [x, z], y^2 >\"\neuler = [0, 0]\neuler_torsion = [1]\n",
    ];
    for (i, text) in cases.iter().enumerate() {
        let m = env.manifest(&format!("bad{i}.toml"), text);
        let cmd = if text.contains("euler") { "bundle" } else { "obstruct" };
        let out = env.run(cmd, &m, &["--no-cache"]);
        assert_eq!(out.status.code(), Some(2), "case {i}: {text}");
        assert_eq!(json(&out)["status"], "error");
    }
    let out = env.run("h1", &env.dir.path().join("missing.toml"), &[]);
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_symcirc")).arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn timeout_exits_three() {
    let env = Env::new();
    let m = env.manifest("m.toml", "splice = \"5_2\"\nphi = [0, 0, 1]\ngroups = [\"S3\", \"Z/3\"]\n");
    let out = env.run("obstruct", &m, &["--no-cache", "--timeout", "0"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["status"], "timeout");
}
