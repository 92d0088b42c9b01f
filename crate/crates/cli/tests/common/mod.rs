#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

/// One invocation of the binary whose output is pinned down by the tests.
pub struct Case {
    /// Golden-file stem; the extension is the output format.
    pub name: &'static str,
    pub args: &'static [&'static str],
    /// Schema document for JSON output.
    pub schema: Option<&'static str>,
}

impl Case {
    pub fn extension(&self) -> &'static str {
        match self.args.windows(2).find(|w| w[0] == "--format") {
            Some(w) => w[1],
            None => "json",
        }
    }

    pub fn golden_path(&self) -> PathBuf {
        manifest_dir()
            .join("tests/golden")
            .join(format!("{}.{}", self.name, self.extension()))
    }
}

const fn json(name: &'static str, args: &'static [&'static str], schema: &'static str) -> Case {
    Case {
        name,
        args,
        schema: Some(schema),
    }
}

const fn other(name: &'static str, args: &'static [&'static str]) -> Case {
    Case {
        name,
        args,
        schema: None,
    }
}

/// Every command run on the built-in fixtures, in every format it supports.
pub const CASES: &[Case] = &[
    json(
        "roots-a2",
        &["roots", "--type", "A", "--rank", "2"],
        "roots",
    ),
    json(
        "roots-g2",
        &["roots", "--type", "G", "--rank", "2"],
        "roots",
    ),
    json(
        "weyl-b2",
        &["weyl", "--type", "B", "--rank", "2", "--elements"],
        "weyl",
    ),
    json(
        "chambers-a2",
        &["chambers", "--type", "A", "--rank", "2"],
        "chambers",
    ),
    json(
        "chambers-a4-levi",
        &["chambers", "--fixture", "a4-levi"],
        "chambers",
    ),
    other(
        "chambers-a4-levi",
        &["chambers", "--fixture", "a4-levi", "--format", "dot"],
    ),
    other(
        "chambers-a4-levi",
        &["chambers", "--fixture", "a4-levi", "--format", "svg"],
    ),
    json(
        "chambers-a3-locate",
        &["chambers", "--fixture", "a3", "--locate", "1,1,-2"],
        "chambers",
    ),
    other(
        "chambers-a3",
        &["chambers", "--fixture", "a3", "--format", "svg"],
    ),
    json("chambers-a4", &["chambers", "--fixture", "a4"], "chambers"),
    json("mov-a4-levi", &["mov", "--fixture", "a4-levi"], "mov"),
    other(
        "mov-a4-levi",
        &["mov", "--fixture", "a4-levi", "--format", "dot"],
    ),
    other(
        "mov-a4-levi",
        &["mov", "--fixture", "a4-levi", "--format", "svg"],
    ),
    json("mov-a3", &["mov", "--fixture", "a3"], "mov"),
    json("mov-b2", &["mov", "--type", "B", "--rank", "2"], "mov"),
    json(
        "mov-g2-descending",
        &["mov", "--type", "G", "--rank", "2", "--order", "descending"],
        "mov",
    ),
    json("flops-a4-levi", &["flops", "--fixture", "a4-levi"], "flops"),
    other(
        "flops-a4-levi",
        &["flops", "--fixture", "a4-levi", "--format", "dot"],
    ),
    json(
        "parabolic-a4-levi-1-4",
        &["parabolic", "--type", "A", "--rank", "4", "--levi", "1,4"],
        "parabolic",
    ),
    other(
        "parabolic-a4-levi-1-4",
        &[
            "parabolic",
            "--type",
            "A",
            "--rank",
            "4",
            "--levi",
            "1,4",
            "--format",
            "dot",
        ],
    ),
    other(
        "parabolic-a4-levi-1-4",
        &[
            "parabolic",
            "--type",
            "A",
            "--rank",
            "4",
            "--levi",
            "1,4",
            "--format",
            "svg",
        ],
    ),
    json(
        "parabolic-d4-levi-2",
        &["parabolic", "--type", "D", "--rank", "4", "--levi", "2"],
        "parabolic",
    ),
    json(
        "slice-disc-a2",
        &["slice", "disc", "--point", "1,1,-2"],
        "slice-disc",
    ),
    json(
        "slice-disc-generic",
        &["slice", "disc", "--point", "1/2,3,-7/2"],
        "slice-disc",
    ),
    json(
        "slice-types-a4",
        &["slice", "types", "--point", "1,1,1,-1,-2"],
        "slice-types",
    ),
    json("slice-rays-5", &["slice", "rays", "--n", "5"], "slice-rays"),
    json(
        "slice-alpha-4",
        &["slice", "alpha", "--n", "4"],
        "slice-alpha",
    ),
    json(
        "slice-h2-f4",
        &[
            "slice",
            "h2",
            "--type",
            "F",
            "--rank",
            "4",
            "--tag",
            "subregular",
        ],
        "slice-h2",
    ),
    json(
        "fan-check-half-lines",
        &["fan", "check", "--fixture", "half-lines"],
        "fan-check",
    ),
    other(
        "fan-check-half-lines",
        &["fan", "check", "--fixture", "half-lines", "--format", "svg"],
    ),
    json("fixtures-list", &["fixtures", "list"], "fixtures-list"),
    json(
        "fixtures-emit-a4-levi",
        &["fixtures", "emit", "a4-levi"],
        "document",
    ),
    json(
        "fixtures-emit-half-lines",
        &["fixtures", "emit", "half-lines"],
        "document",
    ),
    json("fixtures-emit-a6", &["fixtures", "emit", "a6"], "document"),
];

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chamberwalk"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn run_ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

pub fn run_json(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&run_ok(args)).expect("JSON output")
}

pub fn schema(name: &str) -> serde_json::Value {
    let path = manifest_dir()
        .join("schemas")
        .join(format!("{name}.schema.json"));
    serde_json::from_str(&std::fs::read_to_string(path).expect("schema exists"))
        .expect("schema is JSON")
}

/// Validation errors of `value` against the named schema.
pub fn violations(schema_name: &str, value: &serde_json::Value) -> Vec<String> {
    let schema = schema(schema_name);
    let compiled = jsonschema::JSONSchema::compile(&schema).expect("schema compiles");
    let errors: Vec<String> = match compiled.validate(value) {
        Ok(()) => Vec::new(),
        Err(errs) => errs
            .map(|e| format!("{}: {}", e.instance_path, e))
            .collect(),
    };
    errors
}
