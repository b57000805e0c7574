//! Locates the `ghzsplit` binary for end-to-end checks.

use std::path::PathBuf;
use std::process::Command;

/// Path to the workspace's `ghzsplit` binary, building it first if the
/// current profile has not produced it yet.
pub fn ghzsplit_binary() -> PathBuf {
    let exe = std::env::current_exe().expect("test executable path");
    let profile_dir = exe
        .parent()
        .and_then(|deps| deps.parent())
        .expect("target/<profile>/deps layout");
    let binary = profile_dir.join(format!("ghzsplit{}", std::env::consts::EXE_SUFFIX));
    if !binary.exists() {
        let cargo = std::env::var_os("CARGO").unwrap_or_else(|| "cargo".into());
        let mut build = Command::new(cargo);
        build.args(["build", "-p", "ghzsplit-cli", "--bin", "ghzsplit"]);
        if profile_dir.file_name().is_some_and(|p| p == "release") {
            build.arg("--release");
        }
        let status = build.status().expect("cargo runs");
        assert!(status.success(), "building ghzsplit failed");
    }
    binary
}
