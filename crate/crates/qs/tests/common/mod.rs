#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde::Serialize;

use qs_core::hermite::{hermite_basis_of_idempotent, Domain};
use qs_core::horrocks::HorrocksInput;
use qs_core::rational::from_int;
use qs_core::{Fraction, FreeCertificate, Mat, MultiPoly, PointIdeal, VarContext};

pub fn ctx(names: &[&str]) -> VarContext {
    VarContext::new(names).unwrap()
}

pub fn p(c: &VarContext, s: &str) -> MultiPoly {
    MultiPoly::parse(c, s).unwrap()
}

pub fn pm(c: &VarContext, rows: &[&[&str]]) -> Mat<MultiPoly> {
    Mat::from_rows(c, rows.iter().map(|r| r.iter().map(|s| p(c, s)).collect()).collect()).unwrap()
}

/// `u = (1+xy, y², x)ᵀ`, `w = (1, 0, -y)` over `Q[x, y]`; `w·u = 1`.
pub fn uw() -> (Mat<MultiPoly>, Mat<MultiPoly>) {
    let c = ctx(&["x", "y"]);
    (pm(&c, &[&["1+x*y"], &["y^2"], &["x"]]), pm(&c, &[&["1", "0", "-y"]]))
}

/// `E = S·diag(1, 0)·S⁻¹` with `S = I + y·x·e12`, localized at `y = 0`.
pub fn constructed_horrocks_instance() -> HorrocksInput {
    let c = ctx(&["x", "y"]);
    let s = pm(&c, &[&["1", "x*y"], &["0", "1"]]);
    let s_inv = pm(&c, &[&["1", "-x*y"], &["0", "1"]]);
    let e = s.mul(&pm(&c, &[&["1", "0"], &["0", "0"]])).unwrap().mul(&s_inv).unwrap();
    let (a, b) = hermite_basis_of_idempotent(&e.to_fractions(), Domain::Field).unwrap();
    let ideal = PointIdeal::new(&c, &[("y", from_int(0))]).unwrap();
    HorrocksInput { e, a, b, ideal, var: 0 }
}

/// Rank-two idempotent over `Q[x, y2, t]` (`t` the translation parameter)
/// with a local certificate whose entries have denominator `r`:
/// `A = P·[e1 e2]·G`, `B = G⁻¹·[e1; e2]·P⁻¹`, `G = [[1, x/r], [0, 1]]`.
pub fn sheared_local(c: &VarContext, r: &str) -> FreeCertificate<Fraction> {
    let s = pm(c, &[&["1", "0", "x"], &["x*y2", "1", "x^2*y2"], &["x*y2", "1", "x^2*y2 + 1"]]);
    let s_inv = pm(c, &[&["1", "x", "-x"], &["-x*y2", "1", "0"], &["0", "-1", "1"]]);
    assert!(s.mul(&s_inv).unwrap().is_identity());
    let e = s.submatrix(0..3, 0..2).mul(&s_inv.submatrix(0..2, 0..3)).unwrap();
    let shear = Fraction::new(p(c, "x"), p(c, r)).unwrap();
    let mut g = Mat::identity(c, 2);
    g.set(0, 1, shear.clone());
    let mut g_inv = Mat::identity(c, 2);
    g_inv.set(0, 1, -&shear);
    let a = s.submatrix(0..3, 0..2).to_fractions().mul(&g).unwrap();
    let b = g_inv.mul(&s_inv.submatrix(0..2, 0..3).to_fractions()).unwrap();
    FreeCertificate { e: e.to_fractions(), a, b }
}

pub fn qs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qs")).args(args).output().expect("qs runs")
}

pub fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

pub fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

pub fn write_json<T: Serialize>(dir: &Path, name: &str, value: &T) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, qs::json::to_string(value)).unwrap();
    path
}

pub fn s(path: &Path) -> &str {
    path.to_str().unwrap()
}
