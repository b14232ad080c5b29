//! Shared helper for integration tests: run the built binary and capture
//! everything.

use std::process::{Command, Output, Stdio};

pub struct CliRun {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn eigenperm(args: &[&str]) -> CliRun {
    eigenperm_with(args, None, &[])
}

pub fn eigenperm_with(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> CliRun {
    let mut command = Command::new(env!("CARGO_BIN_EXE_eigenperm"));
    command.args(args);
    for (key, value) in env {
        command.env(key, value);
    }
    let output: Output = if let Some(input) = stdin {
        let mut child = command
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .spawn()
            .expect("binary runs");
        {
            use std::io::Write;
            child
                .stdin
                .as_mut()
                .expect("stdin piped")
                .write_all(input.as_bytes())
                .expect("stdin accepts input");
        }
        child.wait_with_output().expect("binary finishes")
    } else {
        command.output().expect("binary runs")
    };
    CliRun {
        status: output.status.code().expect("no signal"),
        stdout: String::from_utf8(output.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(output.stderr).expect("utf-8 stderr"),
    }
}
