//! Command-line driver.

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::freelie::LieElement;
use crate::gsb_assoc::envelope;
use crate::gsb_lie::{
    embed_two_generated, irr_basis, nf, word_problem_homogeneous, Caps, CompletionOptions, GsbError,
    LiePresentation,
};
use crate::speciality::{check_speciality_criterion, nonspeciality_witness, SpecialityReport};
use crate::text::{
    parse_lie, parse_presentation, render_assoc, render_lie, render_monomial, render_poly,
    render_presentation, render_tree, render_ymono, KeyValues, Names, TextError,
};

#[derive(Parser, Debug)]
#[command(name = "lie-gsb", version, about = "Gröbner–Shirshov bases for Lie algebras over k[Y|R]")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Capped Shirshov completion of S ∪ RX.
    Complete(CapsArgs),
    /// Normal form of an element.
    Nf(ElemArgs),
    /// Irreducible T_N monomials within the caps.
    Irr(CapsArgs),
    /// Checks whether S ∪ RX is a Gröbner–Shirshov basis within the caps.
    Check(CapsArgs),
    /// Universal enveloping presentation.
    Envelope(FileArgs),
    /// Speciality criterion, or a non-speciality witness check.
    Special(SpecialArgs),
    /// Embedding into a two-generated Lie algebra.
    Embed2(FileArgs),
    /// Word problem for X-homogeneous relations without Y.
    Wp(WpArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Machine,
}

#[derive(Args, Debug)]
struct FileArgs {
    /// Presentation file, or `-` for stdin.
    file: String,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct Common {
    /// Presentation file, or `-` for stdin.
    file: String,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Worker threads (default: available cores).
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args, Debug)]
struct CapsArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long = "max-x-deg")]
    max_x: usize,
    #[arg(long = "max-y-deg")]
    max_y: u32,
}

#[derive(Args, Debug)]
struct ElemArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    elem: String,
    /// Defaults to the degrees of the element and the relations.
    #[arg(long = "max-x-deg")]
    max_x: Option<usize>,
    #[arg(long = "max-y-deg")]
    max_y: Option<u32>,
}

#[derive(Args, Debug)]
struct SpecialArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    witness: Option<String>,
    #[arg(long = "max-x-deg")]
    max_x: usize,
    #[arg(long = "max-y-deg")]
    max_y: u32,
}

#[derive(Args, Debug)]
struct WpArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    elem: String,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Text(#[from] TextError),
    #[error("{0}")]
    Gsb(#[from] GsbError),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Gsb(GsbError::BudgetExceeded(_)) => 2,
            _ => 1,
        }
    }
}

/// Output sink collecting text lines or key-value pairs.
struct Out {
    format: Format,
    text: String,
    kv: KeyValues,
}

impl Out {
    fn new(format: Format, command: &str) -> Self {
        let mut kv = KeyValues::new();
        kv.push("command", command);
        Out {
            format,
            text: String::new(),
            kv,
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn kv(&mut self, k: impl Into<String>, v: impl ToString) {
        self.kv.push(k, v);
    }

    fn list(&mut self, key: &str, title: &str, items: &[String]) {
        self.kv(format!("{key}.count"), items.len());
        self.line(format!("{title} ({}):", items.len()));
        for (i, s) in items.iter().enumerate() {
            self.kv(format!("{key}.{i}"), s);
            self.line(format!("  {s}"));
        }
    }

    fn finish(self) -> String {
        match self.format {
            Format::Text => self.text,
            Format::Machine => self.kv.render(),
        }
    }
}

fn read_source(path: &str, stdin: &mut dyn Read) -> Result<String, CliError> {
    let mut s = String::new();
    if path == "-" {
        stdin
            .read_to_string(&mut s)
            .map_err(|e| CliError::Usage(format!("stdin: {e}")))?;
    } else {
        s = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
    }
    Ok(s)
}

fn options(common: &Common) -> CompletionOptions {
    let mut o = CompletionOptions::default();
    if let Some(t) = common.threads {
        o.threads = t.max(1);
    }
    o
}

fn header(out: &mut Out, p: &LiePresentation, caps: Option<Caps>) {
    out.kv("field", p.field);
    out.line(format!("field {}", p.field));
    if let Some(c) = caps {
        out.kv("caps.max_x_deg", c.max_x);
        out.kv("caps.max_y_deg", c.max_y);
        out.line(format!("caps max-x-deg={} max-y-deg={}", c.max_x, c.max_y));
    }
}

fn lies(es: &[LieElement], names: &Names) -> Vec<String> {
    es.iter().map(|e| render_lie(e, names)).collect()
}

/// Runs the CLI on `argv` (including the program name), returning the exit
/// code: 0 on success, 1 on usage or parse errors, 2 when a budget is
/// exceeded.
pub fn run_command(argv: &[String], stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let msg = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(msg.as_bytes())
            } else {
                stderr.write_all(msg.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, stdin) {
        Ok(s) => {
            let _ = stdout.write_all(s.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.code()
        }
    }
}

fn dispatch(cmd: Command, stdin: &mut dyn Read) -> Result<String, CliError> {
    match cmd {
        Command::Complete(a) => {
            let p = parse_presentation(&read_source(&a.common.file, stdin)?)?;
            let caps = Caps::new(a.max_x, a.max_y);
            let names = Names::of(&p);
            let c = p.complete(caps, &options(&a.common))?;
            let mut out = Out::new(a.common.format, "complete");
            header(&mut out, &p, Some(caps));
            out.kv("rounds", c.rounds);
            out.kv("discarded", c.discarded);
            out.kv("exact", c.exact);
            out.line(format!(
                "status {} rounds={} discarded={}",
                if c.exact { "exact" } else { "truncated" },
                c.rounds,
                c.discarded
            ));
            out.list("base", "input", &lies(&c.basis[..c.base_len], &names));
            out.list("added", "added", &lies(c.added(), &names));
            Ok(out.finish())
        }
        Command::Nf(a) => {
            let p = parse_presentation(&read_source(&a.common.file, stdin)?)?;
            let names = Names::of(&p);
            let e = parse_lie(&a.elem, &names)?;
            let caps = Caps::new(
                a.max_x.unwrap_or_else(|| {
                    p.s.iter().map(|s| s.x_degree()).chain([e.x_degree(), 1]).max().unwrap_or(1)
                }),
                a.max_y.unwrap_or_else(|| {
                    p.s.iter()
                        .map(|s| s.y_degree())
                        .chain(p.r.iter().map(|r| r.degree()))
                        .chain([e.y_degree()])
                        .max()
                        .unwrap_or(0)
                }),
            );
            let c = p.complete(caps, &options(&a.common))?;
            let r = nf(&e, &c.basis, caps)?;
            let mut out = Out::new(a.common.format, "nf");
            header(&mut out, &p, Some(caps));
            let s = render_lie(&r, &names);
            out.kv("nf", &s);
            out.line(s);
            Ok(out.finish())
        }
        Command::Irr(a) => {
            let p = parse_presentation(&read_source(&a.common.file, stdin)?)?;
            let caps = Caps::new(a.max_x, a.max_y);
            let names = Names::of(&p);
            let c = p.complete(caps, &options(&a.common))?;
            let irr = irr_basis(&c.basis, p.alphabet(), p.y_count(), caps)?;
            let items: Vec<String> = irr
                .iter()
                .map(|m| {
                    let t = render_tree(&m.tree, &names);
                    if m.y.is_one() {
                        t
                    } else {
                        format!("{}*{t}", render_ymono(&m.y, &names))
                    }
                })
                .collect();
            let mut out = Out::new(a.common.format, "irr");
            header(&mut out, &p, Some(caps));
            out.kv("exact", c.exact);
            out.list("irr", "irr", &items);
            Ok(out.finish())
        }
        Command::Check(a) => {
            let p = parse_presentation(&read_source(&a.common.file, stdin)?)?;
            let caps = Caps::new(a.max_x, a.max_y);
            let names = Names::of(&p);
            let g = p.check_gsb(caps, &options(&a.common))?;
            let mut out = Out::new(a.common.format, "check");
            header(&mut out, &p, Some(caps));
            out.kv("gsb", g.holds());
            out.kv("checked", g.checked);
            out.kv("beyond_caps", g.beyond_caps);
            out.line(format!("gsb {}", g.holds()));
            out.line(format!("checked {} beyond-caps {}", g.checked, g.beyond_caps));
            let fails: Vec<String> = g
                .failures
                .iter()
                .map(|f| {
                    format!(
                        "{} ({},{}) w={} remainder {}",
                        f.record.kind.name(),
                        f.record.parents.0 + 1,
                        f.record.parents.1 + 1,
                        render_monomial(&f.record.w, &names),
                        render_lie(&f.remainder, &names)
                    )
                })
                .collect();
            out.list("failures", "failures", &fails);
            Ok(out.finish())
        }
        Command::Envelope(a) => {
            let p = parse_presentation(&read_source(&a.file, stdin)?)?;
            let names = Names::of(&p);
            let env = envelope(&p);
            let mut out = Out::new(a.format, "envelope");
            header(&mut out, &p, None);
            let r: Vec<String> = env.r.iter().map(|r| render_poly(r, &names)).collect();
            let s: Vec<String> = env.s.iter().map(|e| render_assoc(e, &names)).collect();
            out.list("rrels", "rrels", &r);
            out.list("srels", "srels", &s);
            Ok(out.finish())
        }
        Command::Special(a) => {
            let p = parse_presentation(&read_source(&a.common.file, stdin)?)?;
            let caps = Caps::new(a.max_x, a.max_y);
            let names = Names::of(&p);
            let opts = options(&a.common);
            let rep = match &a.witness {
                Some(w) => nonspeciality_witness(&p, &parse_lie(w, &names)?, caps, &opts)?,
                None => check_speciality_criterion(&p, caps, &opts)?,
            };
            let mut out = Out::new(a.common.format, "special");
            header(&mut out, &p, Some(caps));
            report(&mut out, &rep, &names);
            Ok(out.finish())
        }
        Command::Embed2(a) => {
            let p = parse_presentation(&read_source(&a.file, stdin)?)?;
            let e = embed_two_generated(&p);
            match a.format {
                Format::Text => Ok(render_presentation(&e)),
                Format::Machine => {
                    let names = Names::of(&e);
                    let mut out = Out::new(Format::Machine, "embed2");
                    header(&mut out, &e, None);
                    out.list("xgens", "xgens", &e.xgens);
                    out.list("srels", "srels", &lies(&e.s, &names));
                    Ok(out.finish())
                }
            }
        }
        Command::Wp(a) => {
            let p = parse_presentation(&read_source(&a.common.file, stdin)?)?;
            let names = Names::of(&p);
            let homogeneous = p.s.iter().all(|s| {
                let d = s.x_degree();
                s.iter().all(|(m, _)| m.y.is_one() && m.x.len() == d)
            });
            if !homogeneous || !p.r.is_empty() {
                return Err(CliError::Usage("wp needs X-homogeneous relations without Y".into()));
            }
            let e = parse_lie(&a.elem, &names)?;
            let zero = word_problem_homogeneous(&e, &p.s, p.alphabet())?;
            let mut out = Out::new(a.common.format, "wp");
            header(&mut out, &p, None);
            out.kv("in_ideal", zero);
            out.line(format!("in-ideal {zero}"));
            Ok(out.finish())
        }
    }
}

fn report(out: &mut Out, rep: &SpecialityReport, names: &Names) {
    out.kv("verdict", rep.verdict);
    out.kv("exact", rep.exact);
    out.line(format!("verdict {}", rep.verdict));
    out.line(format!("exact {}", rep.exact));
    if let Some(w) = &rep.witness {
        let s = render_lie(w, names);
        out.kv("witness", &s);
        out.line(format!("witness {s}"));
    }
    if let Some(n) = &rep.nf_lie {
        let s = render_lie(n, names);
        out.kv("nf_lie", &s);
        out.line(format!("nf-lie {s}"));
    }
    if let Some(n) = &rep.nf_assoc {
        let s = render_assoc(n, names);
        out.kv("nf_assoc", &s);
        out.line(format!("nf-assoc {s}"));
    }
    if let Some(t) = &rep.lie_trace {
        out.kv("lie_trace.steps", t.steps.len());
    }
    if let Some(t) = &rep.assoc_trace {
        out.kv("assoc_trace.steps", t.steps.len());
    }
    out.list("notes", "notes", &rep.notes);
}
