//! The line-oriented document format.
//!
//! A document starts with a header `<kind> <name>` and continues with one
//! statement per line. `#` starts a comment. Names are bare tokens, or
//! double-quoted strings when they contain whitespace or would be read as
//! punctuation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Location {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

/// A name as written in a document. Equality ignores the location.
#[derive(Clone, Debug)]
pub struct Ident {
    pub text: String,
    pub loc: Location,
}

impl Ident {
    pub fn new(text: impl Into<String>) -> Self {
        Ident {
            text: text.into(),
            loc: Location::default(),
        }
    }
}

impl PartialEq for Ident {
    fn eq(&self, other: &Self) -> bool {
        self.text == other.text
    }
}

impl Eq for Ident {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Category,
    Quiver,
    SSet,
    Diagram,
    Marked,
}

impl Kind {
    pub fn keyword(self) -> &'static str {
        match self {
            Kind::Category => "category",
            Kind::Quiver => "quiver",
            Kind::SSet => "sset",
            Kind::Diagram => "diagram",
            Kind::Marked => "marked",
        }
    }

    fn from_keyword(s: &str) -> Option<Kind> {
        Some(match s {
            "category" => Kind::Category,
            "quiver" => Kind::Quiver,
            "sset" => Kind::SSet,
            "diagram" => Kind::Diagram,
            "marked" => Kind::Marked,
            _ => return None,
        })
    }

    fn statements(self) -> &'static [&'static str] {
        match self {
            Kind::Category => &["objects", "arrow", "identity", "relation", "compose"],
            Kind::Marked => &["objects", "arrow", "identity", "relation", "compose", "mark"],
            Kind::Quiver => &["vertices", "edge", "loop"],
            Kind::SSet => &["dim", "format", "simplex"],
            Kind::Diagram => &["index", "node", "functor", "obj", "mor"],
        }
    }
}

const KINDS: [&str; 5] = ["category", "quiver", "sset", "diagram", "marked"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SSetFormat {
    /// Every simplex with all of its faces and degeneracies.
    Raw,
    /// Nondegenerate simplices only, faces written as degeneracy words.
    Nondeg,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Objects(Vec<Ident>),
    Arrow { name: Ident, src: Ident, tgt: Ident },
    /// Names the identity of an object; the default name is `1_<obj>`.
    Identity { name: Ident, obj: Ident },
    /// `g.f = h`: words list their letters outermost first.
    Relation { lhs: Vec<Ident>, rhs: Vec<Ident> },
    /// `compose g f = h` records `g . f = h` in a composition table.
    Compose { g: Ident, f: Ident, result: Ident },
    Mark(Vec<Ident>),
    Vertices(Vec<Ident>),
    Edge { name: Ident, src: Ident, tgt: Ident },
    /// A distinguished loop; a quiver with loops must have one per vertex.
    Loop { name: Ident, vertex: Ident },
    Dim(usize),
    Format(SSetFormat),
    Simplex { level: usize, name: Ident, faces: Vec<Ident>, degens: Vec<Ident> },
    Index(Ident),
    Node { name: Ident, path: Ident },
    Functor { name: Ident },
    SendObj { from: Ident, to: Ident },
    SendMor { from: Ident, to: Ident },
}

#[derive(Clone, Debug)]
pub struct Line {
    pub loc: Location,
    pub stmt: Stmt,
}

impl PartialEq for Line {
    fn eq(&self, other: &Self) -> bool {
        self.stmt == other.stmt
    }
}

impl Eq for Line {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub kind: Kind,
    pub name: Ident,
    pub body: Vec<Line>,
}

impl Document {
    pub fn new(kind: Kind, name: impl Into<String>) -> Self {
        Document {
            kind,
            name: Ident::new(name),
            body: Vec::new(),
        }
    }

    pub fn push(&mut self, stmt: Stmt) {
        self.body.push(Line {
            loc: Location::default(),
            stmt,
        });
    }

    /// Location of the header line.
    pub fn header(&self) -> Location {
        Location {
            line: self.name.loc.line,
            col: 1,
        }
    }

    pub fn stmts(&self) -> impl Iterator<Item = &Stmt> {
        self.body.iter().map(|l| &l.stmt)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DocError {
    #[error("{loc}: expected {}, found {found}", one_of(expected))]
    Parse {
        loc: Location,
        expected: Vec<String>,
        found: String,
    },
    #[error("{loc}: duplicate identifier {name}")]
    DuplicateId { loc: Location, name: String },
    #[error("{loc}: unknown reference {name}")]
    UnknownReference { loc: Location, name: String },
    #[error("{loc}: {error}")]
    Semantic { loc: Location, error: hocat_core::Error },
    #[error("cannot read {path}: {message}")]
    Io {
        loc: Location,
        path: String,
        message: String,
    },
    #[error("{loc}: in {path}: {source}")]
    Nested {
        loc: Location,
        path: String,
        source: Box<DocError>,
    },
}

impl DocError {
    pub fn location(&self) -> Location {
        match self {
            DocError::Parse { loc, .. }
            | DocError::DuplicateId { loc, .. }
            | DocError::UnknownReference { loc, .. }
            | DocError::Semantic { loc, .. }
            | DocError::Io { loc, .. }
            | DocError::Nested { loc, .. } => *loc,
        }
    }

    /// Whether the error comes from validating well-formed input rather
    /// than from reading it.
    pub fn is_semantic(&self) -> bool {
        match self {
            DocError::Semantic { .. } => true,
            DocError::Nested { source, .. } => source.is_semantic(),
            _ => false,
        }
    }
}

fn one_of(expected: &[String]) -> String {
    match expected {
        [] => "nothing".into(),
        [one] => one.clone(),
        many => format!("one of {}", many.join(", ")),
    }
}

fn parse_error(loc: Location, expected: &[&str], found: impl Into<String>) -> DocError {
    DocError::Parse {
        loc,
        expected: expected.iter().map(|s| s.to_string()).collect(),
        found: found.into(),
    }
}

// ---------------------------------------------------------------- lexing

#[derive(Clone, Debug)]
struct Token {
    /// `(quoted, text)` runs making up the token.
    segs: Vec<(bool, String)>,
    loc: Location,
}

impl Token {
    fn text(&self) -> String {
        self.segs.iter().map(|(_, s)| s.as_str()).collect()
    }

    fn is_bare(&self, s: &str) -> bool {
        matches!(self.segs.as_slice(), [(false, t)] if t == s)
    }

    fn describe(&self) -> String {
        format!("'{}'", self.text())
    }

    fn ident(&self) -> Ident {
        Ident {
            text: self.text(),
            loc: self.loc,
        }
    }
}

const SYMBOLS: [&str; 4] = [":", "->", "=", "|"];

fn lex_line(line: &str, lineno: usize) -> Result<Vec<Token>, DocError> {
    let mut out = Vec::new();
    let chars: Vec<char> = line.chars().collect();
    let mut i = 0;
    let loc = |i: usize| Location { line: lineno, col: i + 1 };
    while i < chars.len() {
        let c = chars[i];
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let mut segs: Vec<(bool, String)> = Vec::new();
        while i < chars.len() && !chars[i].is_whitespace() && chars[i] != '#' {
            if chars[i] == '"' {
                let open = i;
                i += 1;
                let mut s = String::new();
                loop {
                    match chars.get(i) {
                        None => return Err(parse_error(loc(open), &["closing quote"], "end of line")),
                        Some('"') => {
                            i += 1;
                            break;
                        }
                        Some('\\') => {
                            let e = match chars.get(i + 1) {
                                Some('"') => '"',
                                Some('\\') => '\\',
                                Some('n') => '\n',
                                Some('r') => '\r',
                                Some('t') => '\t',
                                Some(other) => {
                                    return Err(parse_error(loc(i), &["escape sequence"], format!("'\\{other}'")))
                                }
                                None => return Err(parse_error(loc(i), &["escape sequence"], "end of line")),
                            };
                            s.push(e);
                            i += 2;
                        }
                        Some(&ch) => {
                            s.push(ch);
                            i += 1;
                        }
                    }
                }
                segs.push((true, s));
            } else {
                let mut s = String::new();
                while i < chars.len() && !chars[i].is_whitespace() && chars[i] != '#' && chars[i] != '"' {
                    s.push(chars[i]);
                    i += 1;
                }
                segs.push((false, s));
            }
        }
        out.push(Token { segs, loc: loc(start) });
    }
    Ok(out)
}

// ---------------------------------------------------------------- parsing

struct Cursor {
    toks: Vec<Token>,
    pos: usize,
    /// Location just past the last token, for "end of line" errors.
    eol: Location,
}

impl Cursor {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn found(&self) -> (Location, String) {
        match self.peek() {
            Some(t) => (t.loc, t.describe()),
            None => (self.eol, "end of line".into()),
        }
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, DocError> {
        let (loc, found) = self.found();
        Err(parse_error(loc, expected, found))
    }

    fn at_symbol(&self, s: &str) -> bool {
        self.peek().is_some_and(|t| t.is_bare(s))
    }

    fn symbol(&mut self, s: &str) -> Result<(), DocError> {
        if self.at_symbol(s) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(&[&format!("'{s}'")])
        }
    }

    fn ident(&mut self, what: &str) -> Result<Ident, DocError> {
        match self.peek() {
            Some(t) if !SYMBOLS.iter().any(|s| t.is_bare(s)) => {
                let id = t.ident();
                self.pos += 1;
                Ok(id)
            }
            _ => self.fail(&[what]),
        }
    }

    fn idents_until(&mut self, stop: &str) -> Result<Vec<Ident>, DocError> {
        let mut out = Vec::new();
        while self.peek().is_some() && !self.at_symbol(stop) {
            out.push(self.ident("name")?);
        }
        Ok(out)
    }

    fn number(&mut self, what: &str) -> Result<usize, DocError> {
        match self.peek() {
            Some(t) if t.segs.len() == 1 && !t.segs[0].0 => match t.segs[0].1.parse::<usize>() {
                Ok(n) => {
                    self.pos += 1;
                    Ok(n)
                }
                Err(_) => self.fail(&[what]),
            },
            _ => self.fail(&[what]),
        }
    }

    /// A composition word `g.f`, split at unquoted dots.
    fn word(&mut self) -> Result<Vec<Ident>, DocError> {
        let tok = match self.peek() {
            Some(t) if !SYMBOLS.iter().any(|s| t.is_bare(s)) => t.clone(),
            _ => return self.fail(&["word"]),
        };
        self.pos += 1;
        let mut parts = vec![Ident {
            text: String::new(),
            loc: tok.loc,
        }];
        let mut col = tok.loc.col;
        let mut touched = false;
        for (quoted, s) in &tok.segs {
            if *quoted {
                parts.last_mut().unwrap().text.push_str(s);
                touched = true;
                col += s.chars().count() + 2;
                continue;
            }
            for ch in s.chars() {
                if ch == '.' {
                    if !touched {
                        return Err(parse_error(Location { line: tok.loc.line, col }, &["name"], "'.'"));
                    }
                    parts.push(Ident {
                        text: String::new(),
                        loc: Location {
                            line: tok.loc.line,
                            col: col + 1,
                        },
                    });
                    touched = false;
                } else {
                    parts.last_mut().unwrap().text.push(ch);
                    touched = true;
                }
                col += 1;
            }
        }
        if !touched {
            return Err(parse_error(Location { line: tok.loc.line, col }, &["name"], "end of word"));
        }
        Ok(parts)
    }

    fn end(&self) -> Result<(), DocError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => self.fail(&["end of line"]),
        }
    }
}

/// Parses a document and checks that every name is declared once and every
/// reference resolves.
pub fn parse(text: &str) -> Result<Document, DocError> {
    let mut header: Option<(Kind, Ident)> = None;
    let mut body = Vec::new();
    let mut last_line = 0;
    for (k, raw) in text.lines().enumerate() {
        let lineno = k + 1;
        last_line = lineno;
        let toks = lex_line(raw, lineno)?;
        let Some(first) = toks.first() else { continue };
        let eol = Location {
            line: lineno,
            col: raw.chars().count() + 1,
        };
        let first_loc = first.loc;
        let mut cur = Cursor { toks, pos: 0, eol };
        match &header {
            None => {
                let kw = cur.peek().unwrap().clone();
                let kind = (kw.segs.len() == 1 && !kw.segs[0].0)
                    .then(|| Kind::from_keyword(&kw.segs[0].1))
                    .flatten();
                let Some(kind) = kind else {
                    return Err(parse_error(kw.loc, &KINDS, kw.describe()));
                };
                cur.pos += 1;
                let name = cur.ident("document name")?;
                cur.end()?;
                header = Some((kind, name));
            }
            Some((kind, _)) => {
                let stmt = parse_stmt(*kind, &mut cur)?;
                cur.end()?;
                body.push(Line { loc: first_loc, stmt });
            }
        }
    }
    let Some((kind, name)) = header else {
        return Err(parse_error(Location { line: last_line.max(1), col: 1 }, &KINDS, "end of input"));
    };
    let doc = Document { kind, name, body };
    check(&doc)?;
    Ok(doc)
}

fn parse_stmt(kind: Kind, cur: &mut Cursor) -> Result<Stmt, DocError> {
    let allowed = kind.statements();
    let kw = cur.peek().unwrap().clone();
    let keyword = match kw.segs.as_slice() {
        [(false, s)] if allowed.contains(&s.as_str()) => s.clone(),
        _ => return Err(parse_error(kw.loc, allowed, kw.describe())),
    };
    cur.pos += 1;
    let stmt = match keyword.as_str() {
        "objects" | "vertices" | "mark" => {
            let names = cur.idents_until("")?;
            if names.is_empty() {
                return cur.fail(&["name"]);
            }
            match keyword.as_str() {
                "objects" => Stmt::Objects(names),
                "vertices" => Stmt::Vertices(names),
                _ => Stmt::Mark(names),
            }
        }
        "arrow" | "edge" => {
            let name = cur.ident("name")?;
            cur.symbol(":")?;
            let src = cur.ident("source")?;
            cur.symbol("->")?;
            let tgt = cur.ident("target")?;
            if keyword == "arrow" {
                Stmt::Arrow { name, src, tgt }
            } else {
                Stmt::Edge { name, src, tgt }
            }
        }
        "identity" => {
            let name = cur.ident("name")?;
            cur.symbol(":")?;
            let obj = cur.ident("object")?;
            Stmt::Identity { name, obj }
        }
        "loop" => {
            let name = cur.ident("name")?;
            cur.symbol(":")?;
            let vertex = cur.ident("vertex")?;
            Stmt::Loop { name, vertex }
        }
        "relation" => {
            let lhs = cur.word()?;
            cur.symbol("=")?;
            let rhs = cur.word()?;
            Stmt::Relation { lhs, rhs }
        }
        "compose" => {
            let g = cur.ident("morphism")?;
            let f = cur.ident("morphism")?;
            cur.symbol("=")?;
            let result = cur.ident("morphism")?;
            Stmt::Compose { g, f, result }
        }
        "dim" => Stmt::Dim(cur.number("dimension")?),
        "format" => {
            let fmt = match cur.peek() {
                Some(t) if t.is_bare("raw") => SSetFormat::Raw,
                Some(t) if t.is_bare("nondeg") => SSetFormat::Nondeg,
                _ => return cur.fail(&["raw", "nondeg"]),
            };
            cur.pos += 1;
            Stmt::Format(fmt)
        }
        "simplex" => {
            let level = cur.number("level")?;
            let name = cur.ident("name")?;
            let mut faces = Vec::new();
            let mut degens = Vec::new();
            if cur.at_symbol(":") {
                cur.pos += 1;
                faces = cur.idents_until("|")?;
            }
            if cur.at_symbol("|") {
                cur.pos += 1;
                degens = cur.idents_until("")?;
            }
            Stmt::Simplex {
                level,
                name,
                faces,
                degens,
            }
        }
        "index" => Stmt::Index(cur.ident("path")?),
        "node" => {
            let name = cur.ident("name")?;
            cur.symbol("=")?;
            let path = cur.ident("path")?;
            Stmt::Node { name, path }
        }
        "functor" => Stmt::Functor {
            name: cur.ident("name")?,
        },
        "obj" | "mor" => {
            let from = cur.ident("name")?;
            cur.symbol("->")?;
            let to = cur.ident("name")?;
            if keyword == "obj" {
                Stmt::SendObj { from, to }
            } else {
                Stmt::SendMor { from, to }
            }
        }
        _ => unreachable!("keyword list and parser agree"),
    };
    Ok(stmt)
}

// ---------------------------------------------------------------- resolution

struct Names {
    seen: BTreeMap<String, Location>,
}

impl Names {
    fn new() -> Self {
        Names { seen: BTreeMap::new() }
    }

    fn declare(&mut self, id: &Ident) -> Result<(), DocError> {
        if self.seen.insert(id.text.clone(), id.loc).is_some() {
            return Err(DocError::DuplicateId {
                loc: id.loc,
                name: id.text.clone(),
            });
        }
        Ok(())
    }

    fn contains(&self, s: &str) -> bool {
        self.seen.contains_key(s)
    }

    fn require(&self, id: &Ident) -> Result<(), DocError> {
        if self.contains(&id.text) {
            Ok(())
        } else {
            Err(unknown(id))
        }
    }
}

fn unknown(id: &Ident) -> DocError {
    DocError::UnknownReference {
        loc: id.loc,
        name: id.text.clone(),
    }
}

/// Default identity names for objects without an `identity` statement.
pub(crate) fn identity_names(doc: &Document) -> BTreeMap<String, String> {
    let mut out: BTreeMap<String, String> = BTreeMap::new();
    for s in doc.stmts() {
        if let Stmt::Objects(objs) = s {
            for o in objs {
                out.insert(o.text.clone(), format!("1_{}", o.text));
            }
        }
    }
    for s in doc.stmts() {
        if let Stmt::Identity { name, obj } = s {
            out.insert(obj.text.clone(), name.text.clone());
        }
    }
    out
}

/// Splits a degeneracy word `sA.sB.base` into `([A, B], base)`, preferring
/// the longest base that names a simplex of the right level.
pub(crate) fn resolve_face_word(word: &str, face_level: usize, has: impl Fn(usize, &str) -> bool) -> Option<(Vec<usize>, String)> {
    let mut ops = Vec::new();
    let mut rest = word;
    loop {
        if let Some(level) = face_level.checked_sub(ops.len()) {
            if has(level, rest) {
                return Some((ops, rest.to_string()));
            }
        } else {
            return None;
        }
        let tail = rest.strip_prefix('s')?;
        let digits = tail.chars().take_while(char::is_ascii_digit).count();
        if digits == 0 || !tail[digits..].starts_with('.') {
            return None;
        }
        ops.push(tail[..digits].parse().ok()?);
        rest = &tail[digits + 1..];
    }
}

pub(crate) fn check(doc: &Document) -> Result<(), DocError> {
    match doc.kind {
        Kind::Category | Kind::Marked => check_category(doc),
        Kind::Quiver => check_quiver(doc),
        Kind::SSet => check_sset(doc),
        Kind::Diagram => check_diagram(doc),
    }
}

fn check_category(doc: &Document) -> Result<(), DocError> {
    let mut objects = Names::new();
    for s in doc.stmts() {
        if let Stmt::Objects(objs) = s {
            for o in objs {
                objects.declare(o)?;
            }
        }
    }
    let mut morphisms = Names::new();
    let mut has_identity = Names::new();
    for s in doc.stmts() {
        match s {
            Stmt::Arrow { name, src, tgt } => {
                objects.require(src)?;
                objects.require(tgt)?;
                morphisms.declare(name)?;
            }
            Stmt::Identity { name, obj } => {
                objects.require(obj)?;
                has_identity.declare(obj)?;
                morphisms.declare(name)?;
            }
            _ => {}
        }
    }
    for (obj, &loc) in &objects.seen {
        if !has_identity.contains(obj) {
            morphisms.declare(&Ident {
                text: format!("1_{obj}"),
                loc,
            })?;
        }
    }
    for s in doc.stmts() {
        match s {
            Stmt::Relation { lhs, rhs } => {
                for part in lhs.iter().chain(rhs) {
                    morphisms.require(part)?;
                }
            }
            Stmt::Compose { g, f, result } => {
                for id in [g, f, result] {
                    morphisms.require(id)?;
                }
            }
            Stmt::Mark(names) => {
                for id in names {
                    morphisms.require(id)?;
                }
            }
            _ => {}
        }
    }
    Ok(())
}

fn check_quiver(doc: &Document) -> Result<(), DocError> {
    let mut vertices = Names::new();
    for s in doc.stmts() {
        if let Stmt::Vertices(vs) = s {
            for v in vs {
                vertices.declare(v)?;
            }
        }
    }
    let mut edges = Names::new();
    let mut looped = Names::new();
    for s in doc.stmts() {
        match s {
            Stmt::Edge { name, src, tgt } => {
                vertices.require(src)?;
                vertices.require(tgt)?;
                edges.declare(name)?;
            }
            Stmt::Loop { name, vertex } => {
                vertices.require(vertex)?;
                looped.declare(vertex)?;
                edges.declare(name)?;
            }
            _ => {}
        }
    }
    Ok(())
}

fn check_sset(doc: &Document) -> Result<(), DocError> {
    let mut format = None;
    let mut dim_seen = false;
    let mut levels: Vec<Names> = Vec::new();
    for line in &doc.body {
        match &line.stmt {
            Stmt::Dim(_) => {
                if std::mem::replace(&mut dim_seen, true) {
                    return Err(DocError::DuplicateId {
                        loc: line.loc,
                        name: "dim".into(),
                    });
                }
            }
            Stmt::Format(f) => {
                if format.replace(*f).is_some() {
                    return Err(DocError::DuplicateId {
                        loc: line.loc,
                        name: "format".into(),
                    });
                }
            }
            Stmt::Simplex { level, name, .. } => {
                if *level > hocat_core::MAX_DIM {
                    return Err(parse_error(line.loc, &[&format!("level at most {}", hocat_core::MAX_DIM)], level.to_string()));
                }
                while levels.len() <= *level {
                    levels.push(Names::new());
                }
                levels[*level].declare(name)?;
            }
            _ => {}
        }
    }
    let has = |n: usize, s: &str| levels.get(n).is_some_and(|l| l.contains(s));
    for s in doc.stmts() {
        if let Stmt::Simplex { level, faces, degens, .. } = s {
            match format.unwrap_or(SSetFormat::Raw) {
                SSetFormat::Raw => {
                    for f in faces {
                        if *level == 0 || !has(level - 1, &f.text) {
                            return Err(unknown(f));
                        }
                    }
                    for d in degens {
                        if !has(level + 1, &d.text) {
                            return Err(unknown(d));
                        }
                    }
                }
                SSetFormat::Nondeg => {
                    for f in faces {
                        let ok = level.checked_sub(1).is_some_and(|fl| resolve_face_word(&f.text, fl, has).is_some());
                        if !ok {
                            return Err(unknown(f));
                        }
                    }
                    if let Some(d) = degens.first() {
                        return Err(parse_error(d.loc, &["end of line"], format!("'{}'", d.text)));
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_diagram(doc: &Document) -> Result<(), DocError> {
    let mut index_seen = false;
    let mut nodes = Names::new();
    let mut functors = Names::new();
    let mut in_functor: BTreeSet<(bool, String)> = BTreeSet::new();
    let mut open = false;
    for line in &doc.body {
        match &line.stmt {
            Stmt::Index(_) => {
                if std::mem::replace(&mut index_seen, true) {
                    return Err(DocError::DuplicateId {
                        loc: line.loc,
                        name: "index".into(),
                    });
                }
            }
            Stmt::Node { name, .. } => {
                nodes.declare(name)?;
                open = false;
            }
            Stmt::Functor { name } => {
                functors.declare(name)?;
                in_functor.clear();
                open = true;
            }
            Stmt::SendObj { from, .. } | Stmt::SendMor { from, .. } => {
                if !open {
                    return Err(parse_error(line.loc, &["functor"], if matches!(line.stmt, Stmt::SendObj { .. }) { "'obj'" } else { "'mor'" }));
                }
                let is_obj = matches!(line.stmt, Stmt::SendObj { .. });
                if !in_functor.insert((is_obj, from.text.clone())) {
                    return Err(DocError::DuplicateId {
                        loc: from.loc,
                        name: from.text.clone(),
                    });
                }
            }
            _ => {}
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- printing

fn needs_quotes(s: &str, in_word: bool) -> bool {
    s.is_empty()
        || SYMBOLS.contains(&s)
        || s.chars().any(|c| c.is_whitespace() || c == '"' || c == '\\' || c == '#' || (in_word && c == '.'))
}

fn quoted(s: &str) -> String {
    let mut out = String::from("\"");
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn name(id: &Ident) -> String {
    if needs_quotes(&id.text, false) {
        quoted(&id.text)
    } else {
        id.text.clone()
    }
}

fn word(parts: &[Ident]) -> String {
    let parts: Vec<String> = parts
        .iter()
        .map(|p| if needs_quotes(&p.text, true) { quoted(&p.text) } else { p.text.clone() })
        .collect();
    parts.join(".")
}

fn names(ids: &[Ident]) -> String {
    ids.iter().map(name).collect::<Vec<_>>().join(" ")
}

pub fn print_stmt(stmt: &Stmt) -> String {
    match stmt {
        Stmt::Objects(ids) => format!("objects {}", names(ids)),
        Stmt::Arrow { name: n, src, tgt } => format!("arrow {} : {} -> {}", name(n), name(src), name(tgt)),
        Stmt::Identity { name: n, obj } => format!("identity {} : {}", name(n), name(obj)),
        Stmt::Relation { lhs, rhs } => format!("relation {} = {}", word(lhs), word(rhs)),
        Stmt::Compose { g, f, result } => format!("compose {} {} = {}", name(g), name(f), name(result)),
        Stmt::Mark(ids) => format!("mark {}", names(ids)),
        Stmt::Vertices(ids) => format!("vertices {}", names(ids)),
        Stmt::Edge { name: n, src, tgt } => format!("edge {} : {} -> {}", name(n), name(src), name(tgt)),
        Stmt::Loop { name: n, vertex } => format!("loop {} : {}", name(n), name(vertex)),
        Stmt::Dim(d) => format!("dim {d}"),
        Stmt::Format(SSetFormat::Raw) => "format raw".into(),
        Stmt::Format(SSetFormat::Nondeg) => "format nondeg".into(),
        Stmt::Simplex {
            level,
            name: n,
            faces,
            degens,
        } => {
            let mut s = format!("simplex {level} {}", name(n));
            if !faces.is_empty() {
                s.push_str(" : ");
                s.push_str(&names(faces));
            }
            if !degens.is_empty() {
                s.push_str(" | ");
                s.push_str(&names(degens));
            }
            s
        }
        Stmt::Index(p) => format!("index {}", name(p)),
        Stmt::Node { name: n, path } => format!("node {} = {}", name(n), name(path)),
        Stmt::Functor { name: n } => format!("functor {}", name(n)),
        Stmt::SendObj { from, to } => format!("  obj {} -> {}", name(from), name(to)),
        Stmt::SendMor { from, to } => format!("  mor {} -> {}", name(from), name(to)),
    }
}

/// Canonical text of a document; [`parse`] reads it back to the same AST.
pub fn print(doc: &Document) -> String {
    let mut out = format!("{} {}\n", doc.kind.keyword(), name(&doc.name));
    for line in &doc.body {
        out.push_str(&print_stmt(&line.stmt));
        out.push('\n');
    }
    out
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arrow_document() {
        let doc = parse("category C\nobjects a b\narrow f : a -> b\n").unwrap();
        assert_eq!(doc.kind, Kind::Category);
        assert_eq!(doc.name.text, "C");
        assert_eq!(doc.body.len(), 2);
        assert_eq!(doc.body[1].loc, Location { line: 3, col: 1 });
    }

    #[test]
    fn relation_words_split_at_dots() {
        let doc = parse("category C\nobjects a b c\narrow f : a -> b\narrow g : b -> c\narrow h : a -> c\nrelation g.f = h").unwrap();
        let Stmt::Relation { lhs, rhs } = &doc.body[4].stmt else { panic!() };
        assert_eq!(lhs, &vec![Ident::new("g"), Ident::new("f")]);
        assert_eq!(lhs[1].loc, Location { line: 6, col: 12 });
        assert_eq!(rhs, &vec![Ident::new("h")]);
    }

    #[test]
    fn undeclared_target_is_located() {
        let err = parse("category C\nobjects a b\narrow f : a -> z").unwrap_err();
        assert_eq!(
            err,
            DocError::UnknownReference {
                loc: Location { line: 3, col: 16 },
                name: "z".into()
            }
        );
    }

    #[test]
    fn duplicate_names() {
        let err = parse("category C\nobjects a b a").unwrap_err();
        assert!(matches!(err, DocError::DuplicateId { loc: Location { line: 2, col: 13 }, .. }));
        let err = parse("category C\nobjects a\narrow 1_a : a -> a").unwrap_err();
        assert!(matches!(err, DocError::DuplicateId { .. }));
    }

    #[test]
    fn parse_errors_list_expectations() {
        let err = parse("category C\nobjects a b\narrow f a -> b").unwrap_err();
        let DocError::Parse { loc, expected, found } = err else { panic!() };
        assert_eq!(loc, Location { line: 3, col: 9 });
        assert_eq!(expected, vec!["':'"]);
        assert_eq!(found, "'a'");
        let err = parse("sset X\nvertices a").unwrap_err();
        let DocError::Parse { expected, .. } = err else { panic!() };
        assert_eq!(expected, vec!["dim", "format", "simplex"]);
        assert!(matches!(parse("# nothing\n\n"), Err(DocError::Parse { .. })));
    }

    #[test]
    fn quoting_round_trips() {
        let mut doc = Document::new(Kind::Category, "two words");
        doc.push(Stmt::Objects(vec![Ident::new("a b"), Ident::new(":"), Ident::new("x#y")]));
        doc.push(Stmt::Arrow {
            name: Ident::new("g.f"),
            src: Ident::new("a b"),
            tgt: Ident::new(":"),
        });
        doc.push(Stmt::Arrow {
            name: Ident::new("k\"\n"),
            src: Ident::new(":"),
            tgt: Ident::new("x#y"),
        });
        doc.push(Stmt::Relation {
            lhs: vec![Ident::new("k\"\n"), Ident::new("g.f")],
            rhs: vec![Ident::new("k\"\n"), Ident::new("g.f")],
        });
        let text = print(&doc);
        assert_eq!(parse(&text).unwrap(), doc);
    }

    #[test]
    fn simplex_lines() {
        let text = "sset X\ndim 1\nsimplex 0 a | s0.a\nsimplex 1 s0.a : a a\n";
        let doc = parse(text).unwrap();
        assert_eq!(print(&doc), text);
        let err = parse("sset X\ndim 1\nsimplex 1 e : a a").unwrap_err();
        assert!(matches!(err, DocError::UnknownReference { .. }));
    }

    #[test]
    fn face_words_prefer_whole_names() {
        let has = |n: usize, s: &str| (n == 1 && s == "s0.a") || (n == 0 && s == "a");
        assert_eq!(resolve_face_word("s0.a", 1, has), Some((vec![], "s0.a".into())));
        assert_eq!(resolve_face_word("s1.s0.a", 2, has), Some((vec![1], "s0.a".into())));
        assert_eq!(resolve_face_word("s1.s0.a", 1, has), None);
        assert_eq!(resolve_face_word("s0.b", 1, has), None);
    }

    #[test]
    fn functor_lines_need_a_functor() {
        let err = parse("diagram D\nindex i.cat\nobj a -> b").unwrap_err();
        assert!(matches!(err, DocError::Parse { .. }));
        let doc = parse("diagram D\nindex i.cat\nnode a = x.cat\nfunctor u\n  obj a -> b\n  mor f -> g\n").unwrap();
        assert_eq!(parse(&print(&doc)).unwrap(), doc);
    }
}
