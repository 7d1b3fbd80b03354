//! The `lyco` binary: exit codes, report shape, determinism and the
//! on-disk cache.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use sha2::{Digest, Sha256};

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../sessions").join(name)
}

fn lyco(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lyco"));
    cmd.args(args).env_remove("LYCO_CACHE");
    if let Some(dir) = cache {
        cmd.env("LYCO_CACHE", dir);
    }
    cmd.output().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn without_timing(stdout: &[u8]) -> Value {
    let mut v: Value = serde_json::from_slice(stdout).unwrap();
    v.as_object_mut().unwrap().remove("timing_ms");
    v
}

#[test]
fn report_shape() {
    let out = lyco(&["run", corpus("crossing_planes.lyco").to_str().unwrap(), "--no-cache"], None);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in ["version", "ring", "field", "tasks", "timing_ms"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    let graph = &v["tasks"][1];
    assert_eq!(graph["name"], "hhgraph");
    for key in ["d", "vertices", "edges", "t"] {
        assert!(graph["result"].get(key).is_some(), "graph result lacks {key}");
    }
    assert_eq!(graph["result"]["t"], 2);
    assert!(v["tasks"].as_array().unwrap().iter().all(|t| t["warnings"].is_array()));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad_syntax = write(dir.path(), "a.lyco", "ring R = Q[x,y]\nideal I = x +* y\n");
    assert_eq!(lyco(&["run", &bad_syntax, "--no-cache"], None).status.code(), Some(2));
    let undeclared = write(dir.path(), "b.lyco", "ring R = Q[x,y]\nideal I = x + z\n");
    let out = lyco(&["run", &undeclared, "--no-cache"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("2:15"));
    assert_eq!(lyco(&["run", "/nonexistent/session.lyco"], None).status.code(), Some(1));
    assert_eq!(lyco(&["run", &bad_syntax, "--frobnicate"], None).status.code(), Some(1));
    assert_eq!(lyco(&[], None).status.code(), Some(1));
    let hard = write(
        dir.path(),
        "c.lyco",
        "ring R = Q[a,b,c,d,e] order=grevlex\n\
         ideal I = a*d - b*c, a^2*c + a*b*e - b^2*e, c^3 + c*d*e - d^2*e, a*d*e - b*d*e + a*c^2\n\
         task minprimes\n",
    );
    assert_eq!(lyco(&["run", &hard, "--no-cache", "--budget-pairs", "2"], None).status.code(), Some(3));
    let bad_field = write(dir.path(), "d.lyco", "ring R = F12[x]\nideal I = x\n");
    assert_eq!(lyco(&["run", &bad_field, "--no-cache"], None).status.code(), Some(1));
    let empty_hh = write(dir.path(), "e.lyco", "ring R = Q[x]\nideal I = x - 1, x\ntask hhgraph\n");
    assert_ne!(lyco(&["run", &empty_hh, "--no-cache"], None).status.code(), Some(0));
}

#[test]
fn certificate_failures_map_to_four() {
    use lyco::error::Error;
    assert_eq!(Error::CertificateFailure("x".into()).exit_code(), 4);
    assert_eq!(Error::NegativeHilbertDifference(2).exit_code(), 4);
    assert_eq!(Error::ResourceLimit("x".into()).exit_code(), 3);
}

#[test]
fn deterministic_and_parallel_output() {
    let path = corpus("gaussian_quadric_pair.lyco");
    let p = path.to_str().unwrap();
    let a = lyco(&["run", p, "--no-cache"], None);
    let b = lyco(&["run", p, "--no-cache", "--jobs", "4"], None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(without_timing(&a.stdout), without_timing(&b.stdout));
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("out.json");
    let c = lyco(&["run", p, "--no-cache", "--json", target.to_str().unwrap()], None);
    assert_eq!(c.status.code(), Some(0));
    assert!(c.stdout.is_empty());
    assert_eq!(without_timing(&std::fs::read(&target).unwrap()), without_timing(&a.stdout));
}

#[test]
fn extension_flag() {
    let p = corpus("quadric_pair.lyco");
    let out = lyco(&["run", p.to_str().unwrap(), "--no-cache", "--extend", "i:i^2+1", "--certify-field"], None);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let endo = v["tasks"].as_array().unwrap().iter().find(|t| t["name"] == "endo").unwrap();
    assert_eq!(endo["result"]["t"], 2);
    assert_eq!(endo["result"]["geometric_flag"], "FieldCertifiedByUser");
    let bad = lyco(&["run", p.to_str().unwrap(), "--no-cache", "--extend", "i:i^2-1"], None);
    assert_eq!(bad.status.code(), Some(1));
}

fn entries(dir: &Path) -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    v.sort();
    v
}

#[test]
fn cache_reuse_and_corruption() {
    let work = tempfile::tempdir().unwrap();
    let cache = tempfile::tempdir().unwrap();
    let one = write(work.path(), "one.lyco", "ring R = Q[x,y,z]\nideal I = x^2 - y*z, x*y - z^2\ntask dim\n");
    let swapped = write(work.path(), "two.lyco", "ring R = Q[x,y,z]\nideal I = 3*x*y - 3*z^2, x^2 - y*z\ntask dim\n");
    let a = lyco(&["run", &one], Some(cache.path()));
    assert_eq!(a.status.code(), Some(0));
    let stored = entries(cache.path());
    assert!(!stored.is_empty());
    let b = lyco(&["run", &swapped], Some(cache.path()));
    assert_eq!(b.status.code(), Some(0));
    assert_eq!(entries(cache.path()), stored, "reordered generators should hit the same entries");
    assert_eq!(without_timing(&a.stdout)["tasks"], without_timing(&b.stdout)["tasks"]);

    // An entry with a valid checksum but a wrong basis is re-certified away.
    for p in &stored {
        let mut v: Value = serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap();
        let key = v["key"].as_str().unwrap().to_string();
        let forged = "x".to_string();
        v["basis"] = Value::from(vec![forged.clone()]);
        v["checksum"] = Value::from(hex::encode(Sha256::digest(format!("{key}\n--\n{forged}").as_bytes())));
        std::fs::write(p, v.to_string()).unwrap();
    }
    let c = lyco(&["run", &one], Some(cache.path()));
    assert_eq!(c.status.code(), Some(0));
    assert_eq!(without_timing(&a.stdout), without_timing(&c.stdout));

    for p in &stored {
        std::fs::write(p, "{ not json").unwrap();
    }
    let d = lyco(&["run", &one], Some(cache.path()));
    assert_eq!(d.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&d.stderr).contains("warning"));
    assert_eq!(without_timing(&a.stdout), without_timing(&d.stdout));
}

#[test]
fn cache_location_precedence() {
    let work = tempfile::tempdir().unwrap();
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let s = write(work.path(), "s.lyco", "ring R = Q[x,y]\nideal I = x^2 - y^3\ntask dim\n");
    let out = lyco(&["run", &s, "--cache-dir", flag_dir.path().to_str().unwrap()], Some(env_dir.path()));
    assert_eq!(out.status.code(), Some(0));
    assert!(!entries(env_dir.path()).is_empty());
    assert!(entries(flag_dir.path()).is_empty());
    let out = lyco(&["run", &s, "--cache-dir", flag_dir.path().to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(!entries(flag_dir.path()).is_empty());
    let none = tempfile::tempdir().unwrap();
    let out = lyco(&["run", &s, "--no-cache"], Some(none.path()));
    assert_eq!(out.status.code(), Some(0));
    assert!(entries(none.path()).is_empty());
}
