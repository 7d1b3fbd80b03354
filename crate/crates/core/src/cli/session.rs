//! Line-oriented session files.
//!
//! ```text
//! # comment
//! ring R = Q(i)/i^2+1[w,x,y,z] order=grevlex
//! modulus x*v - y*u
//! ideal I = w^2 + x^2, y^2 + z^2
//! task minprimes I --certify-field
//! task stabilize I --alpha-max 3
//! ```

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{BaseField, FieldSpec};
use crate::monomial::MonomialOrder;
use crate::ring::{Ring, RingCtx};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TaskKind {
    Dim,
    Height,
    MinPrimes,
    HhGraph,
    Lyubeznik,
    S2,
    IdTop,
    Endo,
    Components,
    Stabilize,
}

impl TaskKind {
    pub const ALL: [TaskKind; 10] = [
        TaskKind::Dim,
        TaskKind::Height,
        TaskKind::MinPrimes,
        TaskKind::HhGraph,
        TaskKind::Lyubeznik,
        TaskKind::S2,
        TaskKind::IdTop,
        TaskKind::Endo,
        TaskKind::Components,
        TaskKind::Stabilize,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TaskKind::Dim => "dim",
            TaskKind::Height => "height",
            TaskKind::MinPrimes => "minprimes",
            TaskKind::HhGraph => "hhgraph",
            TaskKind::Lyubeznik => "lyubeznik",
            TaskKind::S2 => "s2",
            TaskKind::IdTop => "idtop",
            TaskKind::Endo => "endo",
            TaskKind::Components => "components",
            TaskKind::Stabilize => "stabilize",
        }
    }

    pub fn from_name(s: &str) -> Option<TaskKind> {
        TaskKind::ALL.into_iter().find(|k| k.name() == s)
    }
}

/// Declared coefficient field: a prime field or `Q`, optionally with one
/// algebraic generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldDecl {
    pub base: BaseField,
    pub extension: Option<Extension>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    pub generator: String,
    /// Minimal polynomial in the generator, as printed after parsing.
    pub minpoly: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealDecl {
    pub name: String,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaskDecl {
    pub kind: TaskKind,
    pub ideal: String,
    pub alpha_max: Option<u32>,
    pub certify_field: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Session {
    pub ring_name: String,
    pub field: FieldDecl,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
    pub modulus: Option<String>,
    pub ideals: Vec<IdealDecl>,
    pub tasks: Vec<TaskDecl>,
}

impl Session {
    pub fn field_spec(&self) -> Result<FieldSpec> {
        build_field(&self.field)
    }

    /// The declared ring, with the modulus applied.
    pub fn ring(&self) -> Result<Ring> {
        let r = RingCtx::new(&self.vars, self.field_spec()?, self.order.clone())?;
        match &self.modulus {
            Some(m) => r.quotient(&r.parse(m)?),
            None => Ok(r),
        }
    }

    pub fn ideal(&self, name: &str) -> Option<&IdealDecl> {
        self.ideals.iter().find(|i| i.name == name)
    }

    /// Adjoins an algebraic generator to a session declared over a base
    /// field, re-normalizing every polynomial in the extended ring.
    pub fn extend(&self, generator: &str, minpoly: &str) -> Result<Session> {
        if self.field.extension.is_some() {
            return Err(Error::InvalidArgument("the session field is already an extension".into()));
        }
        let ext = parse_extension(self.field.base, generator, minpoly, 0, 0)?;
        check_shadowing(&ext.generator, &self.vars, 0, 0)?;
        let mut text = self.to_string();
        let field = FieldDecl { base: self.field.base, extension: Some(ext) };
        let header = format!("ring {} = {}[{}] order={}", self.ring_name, field_text(&field), self.vars.join(","), self.order.name());
        let first = text.find('\n').unwrap_or(text.len());
        text.replace_range(..first, &header);
        parse_session(&text)
    }
}

fn build_field(decl: &FieldDecl) -> Result<FieldSpec> {
    let base = decl.base.to_spec();
    let Some(ext) = &decl.extension else {
        return Ok(base);
    };
    let r = RingCtx::new(&[ext.generator.as_str()], base.clone(), MonomialOrder::Lex)?;
    let m = r.parse(&ext.minpoly)?;
    let deg = m.total_degree().unwrap_or(0) as usize;
    let mut coeffs = vec![base.zero(); deg + 1];
    for (mono, c) in m.terms() {
        coeffs[mono.exp(0) as usize] = c.clone();
    }
    FieldSpec::extension(decl.base, &ext.generator, coeffs)
}

fn parse_extension(base: BaseField, generator: &str, minpoly: &str, line: usize, col: usize) -> Result<Extension> {
    if !is_identifier(generator) {
        return Err(Error::Syntax { line, column: col, message: format!("invalid generator name `{generator}`") });
    }
    let r = RingCtx::new(&[generator], base.to_spec(), MonomialOrder::Lex)?;
    let m = r.parse(minpoly).map_err(|e| relocate(e, line, col))?;
    let ext = Extension { generator: generator.to_string(), minpoly: m.to_string() };
    build_field(&FieldDecl { base, extension: Some(ext.clone()) })?;
    Ok(ext)
}

fn check_shadowing(generator: &str, vars: &[String], line: usize, col: usize) -> Result<()> {
    if vars.iter().any(|v| v == generator) {
        return Err(Error::DuplicateName { line, column: col, name: generator.to_string() });
    }
    Ok(())
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Moves a polynomial parser diagnostic, reported against a single line
/// starting at column 1, to its place in the session file.
fn relocate(e: Error, line: usize, col: usize) -> Error {
    match e {
        Error::Syntax { column, message, .. } => Error::Syntax { line, column: col + column - 1, message },
        Error::UndeclaredVariable { column, name, .. } => Error::UndeclaredVariable { line, column: col + column - 1, name },
        other => other,
    }
}

fn field_text(f: &FieldDecl) -> String {
    let base = f.base.to_spec().to_string();
    match &f.extension {
        None => base,
        Some(e) => format!("{base}({})/{}", e.generator, e.minpoly.replace(' ', "")),
    }
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, column, message: message.into() }
}

fn parse_base(text: &str, line: usize, col: usize) -> Result<BaseField> {
    if text == "Q" {
        return Ok(BaseField::Rationals);
    }
    if let Some(p) = text.strip_prefix('F') {
        let p: u64 = p.parse().map_err(|_| syntax(line, col, format!("invalid field `{text}`")))?;
        return BaseField::prime(p);
    }
    Err(syntax(line, col, format!("unknown field `{text}` (expected Q, F<p>, or Q(g)/minpoly)")))
}

struct Ctx {
    ring: Option<(Session, Ring)>,
    last_ideal: Option<String>,
}

/// Parses a session file. Every polynomial is validated in the declared
/// ring and stored in printed normal form.
pub fn parse_session(text: &str) -> Result<Session> {
    let mut ctx = Ctx { ring: None, last_ideal: None };
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap();
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.len() - trimmed.len();
        let col0 = indent + 1;
        let (keyword, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed.trim_end(), ""));
        let rest_col = col0 + keyword.len() + 1;
        match keyword {
            "ring" => parse_ring_line(&mut ctx, rest, line, col0 + keyword.len() + 1)?,
            "modulus" => {
                let (session, ring) = need_ring(&mut ctx, line, col0)?;
                if session.modulus.is_some() {
                    return Err(Error::DuplicateName { line, column: col0, name: "modulus".into() });
                }
                if !session.ideals.is_empty() {
                    return Err(syntax(line, col0, "modulus must precede ideal declarations"));
                }
                let start = rest_col + leading_ws(rest);
                let f = ring.parse(rest.trim()).map_err(|e| relocate(e, line, start))?;
                let printed = f.to_string();
                let q = ring.quotient(&f)?;
                session.modulus = Some(printed);
                *ring = q;
            }
            "ideal" => {
                let (session, ring) = need_ring(&mut ctx, line, col0)?;
                let (name, gens) = rest
                    .split_once('=')
                    .ok_or_else(|| syntax(line, rest_col, "expected `ideal <name> = <polynomials>`"))?;
                let name = name.trim();
                if !is_identifier(name) {
                    return Err(syntax(line, rest_col, format!("invalid ideal name `{name}`")));
                }
                if session.ideal(name).is_some() || session.vars.iter().any(|v| v == name) {
                    return Err(Error::DuplicateName { line, column: rest_col, name: name.to_string() });
                }
                let start = rest_col + name_end(rest) + leading_ws(gens);
                let polys = ring.parse_list(gens.trim()).map_err(|e| relocate(e, line, start))?;
                let generators = polys.iter().filter(|p| !p.is_zero()).map(|p| p.to_string()).collect();
                session.ideals.push(IdealDecl { name: name.to_string(), generators });
                ctx.last_ideal = Some(name.to_string());
            }
            "task" => {
                let last = ctx.last_ideal.clone();
                let (session, _) = need_ring(&mut ctx, line, col0)?;
                let task = parse_task(session, rest, last, line, rest_col)?;
                session.tasks.push(task);
            }
            other => return Err(syntax(line, col0, format!("unknown keyword `{other}`"))),
        }
    }
    match ctx.ring {
        Some((s, _)) => Ok(s),
        None => Err(syntax(1, 1, "missing ring declaration")),
    }
}

fn leading_ws(s: &str) -> usize {
    s.len() - s.trim_start().len()
}

fn name_end(rest: &str) -> usize {
    rest.find('=').map_or(0, |i| i + 1)
}

fn need_ring(ctx: &mut Ctx, line: usize, col: usize) -> Result<(&mut Session, &mut Ring)> {
    match &mut ctx.ring {
        Some((s, r)) => Ok((s, r)),
        None => Err(syntax(line, col, "a ring must be declared first")),
    }
}

fn parse_ring_line(ctx: &mut Ctx, rest: &str, line: usize, col: usize) -> Result<()> {
    if ctx.ring.is_some() {
        return Err(Error::DuplicateName { line, column: col, name: "ring".into() });
    }
    let bad = || syntax(line, col, "expected `ring <name> = <field>[<vars>] order=<lex|grevlex>`");
    let (name, spec) = rest.split_once('=').ok_or_else(bad)?;
    let name = name.trim();
    if !is_identifier(name) {
        return Err(syntax(line, col, format!("invalid ring name `{name}`")));
    }
    let open = spec.rfind('[').ok_or_else(bad)?;
    let close = spec.rfind(']').ok_or_else(bad)?;
    if close < open {
        return Err(bad());
    }
    let field_text = spec[..open].trim();
    let vars: Vec<String> = spec[open + 1..close].split(',').map(|v| v.trim().to_string()).filter(|v| !v.is_empty()).collect();
    for (k, v) in vars.iter().enumerate() {
        if !is_identifier(v) {
            return Err(syntax(line, col, format!("invalid variable name `{v}`")));
        }
        if vars[..k].contains(v) {
            return Err(Error::DuplicateName { line, column: col, name: v.clone() });
        }
    }
    if vars.is_empty() {
        return Err(syntax(line, col, "a ring needs at least one variable"));
    }
    let mut order = MonomialOrder::GrevLex;
    for opt in spec[close + 1..].split_whitespace() {
        match opt.strip_prefix("order=") {
            Some("lex") => order = MonomialOrder::Lex,
            Some("grevlex") => order = MonomialOrder::GrevLex,
            _ => return Err(syntax(line, col, format!("unknown ring option `{opt}`"))),
        }
    }
    let field_col = col + name.len() + 3;
    let field = match field_text.split_once('(') {
        None => FieldDecl { base: parse_base(field_text, line, field_col)?, extension: None },
        Some((base, tail)) => {
            let base = parse_base(base.trim(), line, field_col)?;
            let (generator, minpoly) = tail.split_once(")/").ok_or_else(|| syntax(line, field_col, "expected `Q(<g>)/<minpoly>`"))?;
            let generator = generator.trim();
            check_shadowing(generator, &vars, line, field_col)?;
            FieldDecl { base, extension: Some(parse_extension(base, generator, minpoly.trim(), line, field_col)?) }
        }
    };
    let session = Session {
        ring_name: name.to_string(),
        field,
        vars,
        order,
        modulus: None,
        ideals: Vec::new(),
        tasks: Vec::new(),
    };
    let ring = RingCtx::new(&session.vars, session.field_spec()?, session.order.clone())?;
    ctx.ring = Some((session, ring));
    Ok(())
}

fn parse_task(session: &Session, rest: &str, last: Option<String>, line: usize, col: usize) -> Result<TaskDecl> {
    let mut words = rest.split_whitespace();
    let kind_text = words.next().ok_or_else(|| syntax(line, col, "expected a task name"))?;
    let kind = TaskKind::from_name(kind_text).ok_or_else(|| syntax(line, col, format!("unknown task `{kind_text}`")))?;
    let mut ideal = None;
    let mut alpha_max = None;
    let mut certify_field = false;
    while let Some(w) = words.next() {
        match w {
            "--alpha-max" => {
                let v = words.next().ok_or_else(|| syntax(line, col, "`--alpha-max` needs a value"))?;
                alpha_max = Some(v.parse().map_err(|_| syntax(line, col, format!("invalid alpha `{v}`")))?);
            }
            "--certify-field" => certify_field = true,
            w if w.starts_with("--") => return Err(syntax(line, col, format!("unknown task option `{w}`"))),
            w => {
                if ideal.is_some() {
                    return Err(syntax(line, col, format!("unexpected argument `{w}`")));
                }
                if session.ideal(w).is_none() {
                    return Err(Error::UndeclaredVariable { line, column: col, name: w.to_string() });
                }
                ideal = Some(w.to_string());
            }
        }
    }
    let ideal = match ideal.or(last) {
        Some(i) => i,
        None => return Err(syntax(line, col, "task needs a declared ideal")),
    };
    if alpha_max.is_some() && kind != TaskKind::Stabilize {
        return Err(syntax(line, col, "`--alpha-max` only applies to `stabilize`"));
    }
    Ok(TaskDecl { kind, ideal, alpha_max, certify_field })
}

impl fmt::Display for Session {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring {} = {}[{}] order={}", self.ring_name, field_text(&self.field), self.vars.join(","), self.order.name())?;
        if let Some(m) = &self.modulus {
            writeln!(f, "modulus {m}")?;
        }
        for i in &self.ideals {
            writeln!(f, "ideal {} = {}", i.name, i.generators.join(", "))?;
        }
        for t in &self.tasks {
            write!(f, "task {} {}", t.kind.name(), t.ideal)?;
            if let Some(a) = t.alpha_max {
                write!(f, " --alpha-max {a}")?;
            }
            if t.certify_field {
                write!(f, " --certify-field")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
