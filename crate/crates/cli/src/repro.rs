use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::Result;
use clap::Args;
use serde_json::json;

use crate::commands::{self, CodeArgs, CwArgs, DminArgs, SubdimArgs, Which};
use crate::report::Report;
use crate::{Format, Global};

#[derive(Args, Debug, Clone)]
pub struct ReproArgs {
    /// Directory holding the golden files.
    #[arg(long, default_value = concat!(env!("CARGO_MANIFEST_DIR"), "/golden"))]
    pub dir: PathBuf,
    /// Overwrite the golden files with the current output.
    #[arg(long)]
    pub bless: bool,
    /// Run only cases whose name contains this string.
    #[arg(long)]
    pub only: Option<String>,
}

fn global(p: u32, n: u32, parent: &Global) -> Global {
    Global {
        p,
        n,
        q: None,
        poly: None,
        basis: "poly".into(),
        format: Format::Json,
        out: None,
        gammas: None,
        subbasis: None,
        cap: parent.cap,
        allow_large: parent.allow_large,
        seed: 1,
    }
}

type Case = (&'static str, Format, Box<dyn Fn(&Global) -> Result<Report>>);

const TRIO_BASIS: &str = "1,a^17,a^85,a^102,a^1,a^18,a^86,a^103";
const TRIO_SUBBASIS: &str = "1,a^17,a^85,a^102,a^1,a^86";

fn cases() -> Vec<Case> {
    let mut v: Vec<Case> = Vec::new();
    v.push(("field-gf16", Format::Json, Box::new(|g| commands::field(&global(2, 4, g)))));
    v.push((
        "field-gf16-over-gf4",
        Format::Json,
        Box::new(|g| {
            let mut g = global(2, 4, g);
            g.q = Some(4);
            commands::field(&g)
        }),
    ));
    v.push((
        "code-rs15-11",
        Format::Json,
        Box::new(|g| {
            let a = CodeArgs { roots: Some("1..4".into()), verify: true, only: None };
            commands::code(&global(2, 4, g), &a)
        }),
    ));
    v.push((
        "expand-rs15-11-ge",
        Format::Text,
        Box::new(|g| {
            let a = CodeArgs { roots: Some("1..4".into()), verify: true, only: Some(Which::G) };
            commands::expand(&global(2, 4, g), &a)
        }),
    ));
    for (name, p, n, gamma) in [
        ("cw-gf16-a-1", 2, 4, "a^-1"),
        ("cw-gf64-a-9", 2, 6, "a^-9"),
        ("cw-gf9-a", 3, 2, "a"),
    ] {
        v.push((
            name,
            Format::Json,
            Box::new(move |g| commands::cw(&global(p, n, g), &CwArgs { gamma: gamma.into(), list: true })),
        ));
    }
    for (name, sel) in [("subdim-gf256-1-4", "1,4"), ("subdim-gf256-17", "17"), ("subdim-gf256-85", "85")] {
        v.push((
            name,
            Format::Json,
            Box::new(move |g| {
                let mut g = global(2, 8, g);
                g.basis = TRIO_BASIS.into();
                g.subbasis = Some(TRIO_SUBBASIS.into());
                g.gammas = Some(sel.into());
                commands::subdim(&g, &SubdimArgs::default())
            }),
        ));
    }
    v.push((
        "dmin-gf32",
        Format::Json,
        Box::new(|g| {
            let mut g = global(2, 5, g);
            g.gammas = Some("21,22;21,22,23;18..22".into());
            commands::dmin(&g, &DminArgs::default())
        }),
    ));
    v.push((
        "dmin-gf32-exact",
        Format::Json,
        Box::new(|g| {
            let mut g = global(2, 5, g);
            g.gammas = Some("21,22;21,22,23".into());
            commands::dmin(&g, &DminArgs { exact: true, ..Default::default() })
        }),
    ));
    for (name, m) in [("witness-m5", "5"), ("witness-m8", "8")] {
        v.push((
            name,
            Format::Json,
            Box::new(move |g| {
                let a = DminArgs { witness: Some(vec![m.into(), "0.5".into(), "1".into()]), ..Default::default() };
                commands::dmin(&global(2, 5, g), &a)
            }),
        ));
    }
    v
}

pub fn repro(g: &Global, a: &ReproArgs) -> Result<Report> {
    let mut text = String::new();
    let mut results = Vec::new();
    let mut ok = true;
    if a.bless {
        std::fs::create_dir_all(&a.dir)?;
    }
    for (name, format, run) in cases() {
        if a.only.as_deref().is_some_and(|s| !name.contains(s)) {
            continue;
        }
        let ext = if format == Format::Json { "json" } else { "txt" };
        let path = a.dir.join(format!("{name}.{ext}"));
        let (status, checks) = match run(g) {
            Ok(r) => {
                let body = r.render(format)?;
                let status = if a.bless {
                    std::fs::write(&path, &body)?;
                    "BLESSED"
                } else {
                    match std::fs::read_to_string(&path) {
                        Ok(golden) if golden == body => "PASS",
                        Ok(_) => "DIFF",
                        Err(_) => "MISSING",
                    }
                };
                (status, r.ok)
            }
            Err(e) => {
                writeln!(text, "{name}: error: {e:#}")?;
                ("ERROR", false)
            }
        };
        let pass = checks && matches!(status, "PASS" | "BLESSED");
        ok &= pass;
        writeln!(text, "{} {name}{}", if pass { "PASS" } else { "FAIL" }, if status == "PASS" { String::new() } else { format!(" ({status}{})", if checks { "" } else { ", check failed" }) })?;
        results.push(json!({ "case": name, "golden": status, "checks": checks }));
    }
    let passed = results.iter().filter(|r| r["checks"] == true && (r["golden"] == "PASS" || r["golden"] == "BLESSED")).count();
    writeln!(text, "{passed}/{} cases", results.len())?;
    Ok(Report::new("repro", json!({ "cases": results }), text).checked(ok))
}
