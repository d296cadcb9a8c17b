//! Conversions between documents and the core structures.
//!
//! Loading runs the core validation and reports its failures at the
//! statement they come from. Storing produces canonical documents: loading
//! and storing again gives the same text.

use std::collections::BTreeMap;

use hocat_core::localize::MarkedCat;
use hocat_core::realize::CatDiagram;
use hocat_core::sset::{from_nondeg, to_nondeg, DegWord, NondegPresentation, NondegSimplex};
use hocat_core::words::materialize;
use hocat_core::{Edge, Error, FinCat, Functor, Morphism, Path, PresCat, Quiver, TruncSSet, WordBudget};

use crate::doc::{identity_names, resolve_face_word, DocError, Document, Ident, Kind, Location, SSetFormat, Stmt};

type Result<T> = std::result::Result<T, DocError>;

fn semantic(loc: Location, error: Error) -> DocError {
    DocError::Semantic { loc, error }
}

fn invalid(loc: Location, msg: impl Into<String>) -> DocError {
    semantic(loc, Error::InvalidArgument(msg.into()))
}

fn expect_kind(doc: &Document, kinds: &[Kind]) -> Result<()> {
    if kinds.contains(&doc.kind) {
        // documents built in code have not been through the parser's checks
        return crate::doc::check(doc);
    }
    let want: Vec<&str> = kinds.iter().map(|k| k.keyword()).collect();
    Err(invalid(
        doc.header(),
        format!("expected a {} document, found {}", want.join(" or "), doc.kind.keyword()),
    ))
}

fn ids<'a>(names: impl IntoIterator<Item = &'a str>) -> Vec<Ident> {
    names.into_iter().map(Ident::new).collect()
}

// ---------------------------------------------------------------- categories

/// The pieces of a category document, with names resolved to indices.
struct CatSource {
    objects: Vec<String>,
    obj_index: BTreeMap<String, usize>,
    /// Identity name per object.
    identity: Vec<String>,
    /// `(name, src, tgt, loc)` per arrow.
    arrows: Vec<(String, usize, usize, Location)>,
    relations: Vec<(Vec<Ident>, Vec<Ident>, Location)>,
    composes: Vec<(Ident, Ident, Ident, Location)>,
    marks: Vec<Ident>,
}

impl CatSource {
    fn read(doc: &Document) -> Result<CatSource> {
        expect_kind(doc, &[Kind::Category, Kind::Marked])?;
        let mut objects = Vec::new();
        for s in doc.stmts() {
            if let Stmt::Objects(os) = s {
                objects.extend(os.iter().map(|o| o.text.clone()));
            }
        }
        let obj_index: BTreeMap<String, usize> = objects.iter().enumerate().map(|(i, o)| (o.clone(), i)).collect();
        let idn = identity_names(doc);
        let identity = objects.iter().map(|o| idn[o].clone()).collect();
        let mut src = CatSource {
            objects,
            obj_index,
            identity,
            arrows: Vec::new(),
            relations: Vec::new(),
            composes: Vec::new(),
            marks: Vec::new(),
        };
        for line in &doc.body {
            match &line.stmt {
                Stmt::Arrow { name, src: a, tgt: b } => {
                    let (a, b) = (src.obj_index[&a.text], src.obj_index[&b.text]);
                    src.arrows.push((name.text.clone(), a, b, line.loc));
                }
                Stmt::Relation { lhs, rhs } => src.relations.push((lhs.clone(), rhs.clone(), line.loc)),
                Stmt::Compose { g, f, result } => src.composes.push((g.clone(), f.clone(), result.clone(), line.loc)),
                Stmt::Mark(ms) => src.marks.extend(ms.iter().cloned()),
                _ => {}
            }
        }
        if let (Some(r), Some(_)) = (src.relations.first(), src.composes.first()) {
            return Err(invalid(r.2, "relations and a composition table cannot be mixed"));
        }
        Ok(src)
    }

    fn quiver(&self) -> Quiver {
        let edges = self.arrows.iter().map(|(n, a, b, _)| Edge::new(n.clone(), *a, *b)).collect();
        Quiver::new(self.objects.clone(), edges).expect("endpoints were resolved")
    }

    /// A relation word as a path; identity letters contribute nothing.
    fn path(&self, q: &Quiver, word: &[Ident], loc: Location) -> Result<Path> {
        let mut edges = Vec::new();
        let mut start = None;
        for part in word.iter().rev() {
            match self.arrows.iter().position(|a| a.0 == part.text) {
                Some(e) => edges.push(e),
                None => {
                    let v = self.identity.iter().position(|i| *i == part.text).expect("checked at parse");
                    let at = edges.last().map_or(start.unwrap_or(v), |&e| self.arrows[e].2);
                    if at != v {
                        return Err(semantic(
                            part.loc,
                            Error::SrcTgtMismatch {
                                detail: format!("{} does not compose here", part.text),
                            },
                        ));
                    }
                    start.get_or_insert(v);
                }
            }
        }
        let start = match (start, edges.first()) {
            (Some(v), _) => v,
            (None, Some(&e)) => self.arrows[e].1,
            (None, None) => unreachable!("words are nonempty"),
        };
        Path::from_edges(q, start, edges).map_err(|e| semantic(loc, e))
    }

    fn presentation(&self) -> Result<PresCat> {
        let q = self.quiver();
        let mut rels = Vec::new();
        for (lhs, rhs, loc) in &self.relations {
            let (l, r) = (self.path(&q, lhs, *loc)?, self.path(&q, rhs, *loc)?);
            if (l.src, l.tgt) != (r.src, r.tgt) {
                return Err(semantic(
                    *loc,
                    Error::SrcTgtMismatch {
                        detail: "the two sides of a relation must be parallel".into(),
                    },
                ));
            }
            rels.push((l, r));
        }
        PresCat::new(q, rels).map_err(|e| semantic(Location::default(), e))
    }

    /// Builds the category, returning the morphism each declared name
    /// (arrow or identity) denotes.
    fn category(&self, doc: &Document, budget: WordBudget) -> Result<(FinCat, BTreeMap<String, usize>)> {
        if self.composes.is_empty() {
            self.from_presentation(doc, budget)
        } else {
            self.from_table(doc)
        }
    }

    fn from_presentation(&self, doc: &Document, budget: WordBudget) -> Result<(FinCat, BTreeMap<String, usize>)> {
        let p = self.presentation()?;
        let q = materialize(&p, budget)
            .and_then(|m| m.finite())
            .map_err(|e| semantic(doc.header(), e))?;
        let mut names: BTreeMap<String, usize> = BTreeMap::new();
        for (v, id) in self.identity.iter().enumerate() {
            names.insert(id.clone(), q.cat.identity(v));
        }
        for (e, (n, ..)) in self.arrows.iter().enumerate() {
            names.insert(n.clone(), q.edge_image(e));
        }
        let mut mor_names: Vec<String> = q.cat.morphisms().iter().map(|m| m.name.clone()).collect();
        for (v, id) in self.identity.iter().enumerate() {
            mor_names[q.cat.identity(v)] = id.clone();
        }
        Ok((q.cat.renamed(self.objects.clone(), mor_names), names))
    }

    fn from_table(&self, doc: &Document) -> Result<(FinCat, BTreeMap<String, usize>)> {
        let n = self.objects.len();
        let mut morphisms: Vec<Morphism> = (0..n).map(|v| Morphism::new(self.identity[v].clone(), v, v)).collect();
        morphisms.extend(self.arrows.iter().map(|(name, a, b, _)| Morphism::new(name.clone(), *a, *b)));
        let names: BTreeMap<String, usize> = morphisms.iter().enumerate().map(|(i, m)| (m.name.clone(), i)).collect();
        let mut table: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (g, f, h, loc) in &self.composes {
            let (gi, fi, hi) = (names[&g.text], names[&f.text], names[&h.text]);
            let (mg, mf, mh) = (&morphisms[gi], &morphisms[fi], &morphisms[hi]);
            if mf.tgt != mg.src {
                return Err(semantic(
                    g.loc,
                    Error::SrcTgtMismatch {
                        detail: format!("{} and {} are not composable", g.text, f.text),
                    },
                ));
            }
            if (mh.src, mh.tgt) != (mf.src, mg.tgt) {
                return Err(semantic(
                    h.loc,
                    Error::SrcTgtMismatch {
                        detail: format!("{} cannot be {}.{}", h.text, g.text, f.text),
                    },
                ));
            }
            if let Some(&old) = table.get(&(gi, fi)) {
                if old != hi {
                    return Err(invalid(*loc, format!("{}.{} is given two values", g.text, f.text)));
                }
            }
            table.insert((gi, fi), hi);
        }
        let cat = FinCat::new(self.objects.clone(), morphisms, (0..n).collect(), |g, f| {
            table.get(&(g, f)).copied().or(if g < n {
                Some(f)
            } else if f < n {
                Some(g)
            } else {
                None
            })
        })
        .map_err(|e| self.locate(doc, e))?;
        Ok((cat, names))
    }

    /// Points a table validation error at the statement behind it.
    fn locate(&self, doc: &Document, e: Error) -> DocError {
        let compose_at = |g: &str, f: &str| {
            self.composes
                .iter()
                .find(|(cg, cf, ..)| cg.text == g && cf.text == f)
                .map(|c| c.3)
        };
        let arrow_at = |m: &str| self.arrows.iter().find(|a| a.0 == m).map(|a| a.3);
        let loc = match &e {
            Error::AssociativityViolation { h, g, f } => compose_at(g, f).or_else(|| compose_at(h, g)),
            Error::MissingComposite { f, .. } => arrow_at(f),
            Error::UnitViolation { morphism } => self
                .composes
                .iter()
                .find(|c| c.2.text == *morphism || c.0.text == *morphism || c.1.text == *morphism)
                .map(|c| c.3)
                .or_else(|| arrow_at(morphism)),
            _ => None,
        };
        semantic(loc.unwrap_or_else(|| doc.header()), e)
    }
}

/// A category document as a presentation. Table-mode documents give the
/// presentation of their table.
pub fn load_pres(doc: &Document) -> Result<PresCat> {
    let src = CatSource::read(doc)?;
    if src.composes.is_empty() {
        src.presentation()
    } else {
        Ok(PresCat::of_fincat(&src.from_table(doc)?.0))
    }
}

/// A category document as a finite category. Presentations are
/// materialized within `budget` and must be certified finite.
pub fn load_fincat(doc: &Document, budget: WordBudget) -> Result<FinCat> {
    Ok(load_fincat_named(doc, budget)?.0)
}

pub(crate) fn load_fincat_named(doc: &Document, budget: WordBudget) -> Result<(FinCat, BTreeMap<String, usize>)> {
    CatSource::read(doc)?.category(doc, budget)
}

fn category_doc(c: &FinCat, kind: Kind, name: &str) -> Document {
    let mut doc = Document::new(kind, name);
    if c.num_objects() > 0 {
        doc.push(Stmt::Objects(ids(c.objects().iter().map(String::as_str))));
    }
    for a in 0..c.num_objects() {
        let id = c.morphism_name(c.identity(a));
        if id != format!("1_{}", c.object_name(a)) {
            doc.push(Stmt::Identity {
                name: Ident::new(id),
                obj: Ident::new(c.object_name(a)),
            });
        }
    }
    let arrows: Vec<usize> = c.non_identities().collect();
    for &f in &arrows {
        let m = c.morphism(f);
        doc.push(Stmt::Arrow {
            name: Ident::new(&m.name),
            src: Ident::new(c.object_name(m.src)),
            tgt: Ident::new(c.object_name(m.tgt)),
        });
    }
    for &f in &arrows {
        for &g in &arrows {
            if let Some(h) = c.compose(g, f) {
                doc.push(Stmt::Compose {
                    g: Ident::new(c.morphism_name(g)),
                    f: Ident::new(c.morphism_name(f)),
                    result: Ident::new(c.morphism_name(h)),
                });
            }
        }
    }
    doc
}

/// A finite category as a composition-table document.
pub fn store_fincat(c: &FinCat, name: &str) -> Document {
    category_doc(c, Kind::Category, name)
}

/// A presentation as a document with one relation per relation pair.
pub fn store_pres(p: &PresCat, name: &str) -> Document {
    let q = p.quiver();
    let mut doc = Document::new(Kind::Category, name);
    if q.num_vertices() > 0 {
        doc.push(Stmt::Objects(ids(q.vertices().iter().map(String::as_str))));
    }
    for e in q.generators() {
        let edge = &q.edges()[e];
        doc.push(Stmt::Arrow {
            name: Ident::new(&edge.name),
            src: Ident::new(&q.vertices()[edge.src]),
            tgt: Ident::new(&q.vertices()[edge.tgt]),
        });
    }
    let word = |p: &Path| -> Vec<Ident> {
        if p.edges.is_empty() {
            vec![Ident::new(format!("1_{}", q.vertices()[p.src]))]
        } else {
            p.edges.iter().rev().map(|&e| Ident::new(&q.edges()[e].name)).collect()
        }
    };
    for (l, r) in p.normalized_relations() {
        doc.push(Stmt::Relation { lhs: word(&l), rhs: word(&r) });
    }
    doc
}

pub fn load_marked(doc: &Document, budget: WordBudget) -> Result<MarkedCat> {
    let src = CatSource::read(doc)?;
    let (cat, names) = src.category(doc, budget)?;
    let marking: Vec<usize> = src.marks.iter().map(|m| names[&m.text]).collect();
    MarkedCat::new(cat, &marking).map_err(|e| semantic(src.marks.first().map_or(doc.header(), |m| m.loc), e))
}

pub fn store_marked(m: &MarkedCat, name: &str) -> Document {
    let mut doc = category_doc(&m.cat, Kind::Marked, name);
    let marks = m.marking();
    if !marks.is_empty() {
        doc.push(Stmt::Mark(ids(marks.iter().map(|&f| m.cat.morphism_name(f)))));
    }
    doc
}

// ---------------------------------------------------------------- quivers

pub fn load_quiver(doc: &Document) -> Result<Quiver> {
    expect_kind(doc, &[Kind::Quiver])?;
    let mut vertices = Vec::new();
    for s in doc.stmts() {
        if let Stmt::Vertices(vs) = s {
            vertices.extend(vs.iter().map(|v| v.text.clone()));
        }
    }
    let index: BTreeMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    let mut edges = Vec::new();
    let mut loops: BTreeMap<usize, usize> = BTreeMap::new();
    for s in doc.stmts() {
        match s {
            Stmt::Edge { name, src, tgt } => edges.push(Edge::new(&name.text, index[src.text.as_str()], index[tgt.text.as_str()])),
            Stmt::Loop { name, vertex } => {
                let v = index[vertex.text.as_str()];
                loops.insert(v, edges.len());
                edges.push(Edge::new(&name.text, v, v));
            }
            _ => {}
        }
    }
    if loops.is_empty() {
        return Quiver::new(vertices, edges).map_err(|e| semantic(doc.header(), e));
    }
    if let Some(v) = (0..vertices.len()).find(|v| !loops.contains_key(v)) {
        return Err(invalid(doc.header(), format!("vertex {} has no distinguished loop", vertices[v])));
    }
    Quiver::reflexive(vertices, edges, loops.into_values().collect()).map_err(|e| semantic(doc.header(), e))
}

/// Edges are written in order, distinguished loops as `loop` lines.
pub fn store_quiver(q: &Quiver, name: &str) -> Document {
    let mut doc = Document::new(Kind::Quiver, name);
    if q.num_vertices() > 0 {
        doc.push(Stmt::Vertices(ids(q.vertices().iter().map(String::as_str))));
    }
    for (e, edge) in q.edges().iter().enumerate() {
        let v = |i: usize| Ident::new(&q.vertices()[i]);
        doc.push(if q.is_degenerate(e) {
            Stmt::Loop {
                name: Ident::new(&edge.name),
                vertex: v(edge.src),
            }
        } else {
            Stmt::Edge {
                name: Ident::new(&edge.name),
                src: v(edge.src),
                tgt: v(edge.tgt),
            }
        });
    }
    doc
}

// ---------------------------------------------------------------- simplicial sets

pub fn load_sset(doc: &Document) -> Result<TruncSSet> {
    expect_kind(doc, &[Kind::SSet])?;
    let mut dim = None;
    let mut format = SSetFormat::Raw;
    let mut simplices = Vec::new();
    for line in &doc.body {
        match &line.stmt {
            Stmt::Dim(d) => dim = Some((*d, line.loc)),
            Stmt::Format(f) => format = *f,
            Stmt::Simplex {
                level,
                name,
                faces,
                degens,
            } => simplices.push((*level, name, faces, degens, line.loc)),
            _ => {}
        }
    }
    let Some((dim, dim_loc)) = dim else {
        return Err(invalid(doc.header(), "missing dim statement"));
    };
    if dim > hocat_core::MAX_DIM {
        return Err(invalid(dim_loc, format!("dimension {dim} is above the supported {}", hocat_core::MAX_DIM)));
    }
    for &(level, .., loc) in &simplices {
        if level > dim {
            return Err(semantic(loc, Error::DimensionMismatch { expected: dim, found: level }));
        }
    }
    let mut names: Vec<Vec<String>> = vec![Vec::new(); dim + 1];
    for (level, name, ..) in &simplices {
        names[*level].push(name.text.clone());
    }
    let index: Vec<BTreeMap<&str, usize>> =
        names.iter().map(|l| l.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect()).collect();
    match format {
        SSetFormat::Raw => {
            let mut faces: Vec<Vec<Vec<usize>>> = (0..=dim).map(|n| vec![Vec::new(); if n == 0 { 0 } else { n + 1 }]).collect();
            let mut degens: Vec<Vec<Vec<usize>>> = (0..=dim).map(|n| vec![Vec::new(); if n == dim { 0 } else { n + 1 }]).collect();
            for (level, name, fs, ds, loc) in &simplices {
                let n = *level;
                let (want_f, want_d) = (faces[n].len(), degens[n].len());
                if fs.len() != want_f || ds.len() != want_d {
                    return Err(invalid(
                        *loc,
                        format!("{} needs {want_f} faces and {want_d} degeneracies, has {} and {}", name.text, fs.len(), ds.len()),
                    ));
                }
                for (i, f) in fs.iter().enumerate() {
                    faces[n][i].push(index[n - 1][f.text.as_str()]);
                }
                for (i, d) in ds.iter().enumerate() {
                    degens[n][i].push(index[n + 1][d.text.as_str()]);
                }
            }
            TruncSSet::new(names, faces, degens).map_err(|e| semantic(dim_loc, e))
        }
        SSetFormat::Nondeg => {
            let mut levels: Vec<Vec<NondegSimplex>> = vec![Vec::new(); dim + 1];
            for (level, name, fs, _, loc) in &simplices {
                let n = *level;
                let want = if n == 0 { 0 } else { n + 1 };
                if fs.len() != want {
                    return Err(invalid(*loc, format!("{} needs {want} faces, has {}", name.text, fs.len())));
                }
                let has = |k: usize, s: &str| index.get(k).is_some_and(|l| l.contains_key(s));
                let faces = fs
                    .iter()
                    .map(|f| {
                        let (ops, base) = resolve_face_word(&f.text, n - 1, has).expect("checked at parse");
                        let base = index[n - 1 - ops.len()][base.as_str()];
                        DegWord { ops, base }
                    })
                    .collect();
                levels[n].push(NondegSimplex {
                    name: name.text.clone(),
                    faces,
                });
            }
            from_nondeg(&NondegPresentation { dim, levels }).map_err(|e| semantic(dim_loc, e))
        }
    }
}

pub fn store_sset(x: &TruncSSet, name: &str, format: SSetFormat) -> Document {
    let mut doc = Document::new(Kind::SSet, name);
    let dim = x.dim();
    doc.push(Stmt::Dim(dim));
    doc.push(Stmt::Format(format));
    match format {
        SSetFormat::Raw => {
            for n in 0..=dim {
                for s in 0..x.size(n) {
                    let faces = if n == 0 { Vec::new() } else { (0..=n).map(|i| Ident::new(x.name(n - 1, x.face(n, i, s)))).collect() };
                    let degens = if n == dim { Vec::new() } else { (0..=n).map(|i| Ident::new(x.name(n + 1, x.degen(n, i, s)))).collect() };
                    doc.push(Stmt::Simplex {
                        level: n,
                        name: Ident::new(x.name(n, s)),
                        faces,
                        degens,
                    });
                }
            }
        }
        SSetFormat::Nondeg => {
            let p = to_nondeg(x);
            for (n, level) in p.levels.iter().enumerate() {
                for z in level {
                    let faces = z
                        .faces
                        .iter()
                        .map(|w| {
                            let mut s: String = w.ops.iter().map(|op| format!("s{op}.")).collect();
                            s.push_str(&p.levels[n - 1 - w.ops.len()][w.base].name);
                            Ident::new(s)
                        })
                        .collect();
                    doc.push(Stmt::Simplex {
                        level: n,
                        name: Ident::new(&z.name),
                        faces,
                        degens: Vec::new(),
                    });
                }
            }
        }
    }
    doc
}

// ---------------------------------------------------------------- diagrams

/// Loads a diagram of categories. `resolve` maps each path written in the
/// document to the document stored there.
pub fn load_diagram(doc: &Document, resolve: &mut dyn FnMut(&str) -> Result<Document>, budget: WordBudget) -> Result<CatDiagram> {
    expect_kind(doc, &[Kind::Diagram])?;
    let mut load = |path: &Ident| -> Result<(FinCat, BTreeMap<String, usize>)> {
        let nested = |e: DocError| DocError::Nested {
            loc: path.loc,
            path: path.text.clone(),
            source: Box::new(e),
        };
        let d = resolve(&path.text).map_err(nested)?;
        load_fincat_named(&d, budget).map_err(nested)
    };
    let Some(index_path) = doc.stmts().find_map(|s| match s {
        Stmt::Index(p) => Some(p),
        _ => None,
    }) else {
        return Err(invalid(doc.header(), "missing index statement"));
    };
    let (index, index_names) = load(index_path)?;
    let mut values: Vec<Option<(FinCat, BTreeMap<String, usize>)>> = vec![None; index.num_objects()];
    let mut blocks: Vec<(&Ident, Vec<&Stmt>)> = Vec::new();
    for s in doc.stmts() {
        match s {
            Stmt::Node { name, path } => {
                let j = index.object_index(&name.text).ok_or_else(|| DocError::UnknownReference {
                    loc: name.loc,
                    name: name.text.clone(),
                })?;
                values[j] = Some(load(path)?);
            }
            Stmt::Functor { name } => blocks.push((name, Vec::new())),
            Stmt::SendObj { .. } | Stmt::SendMor { .. } => blocks.last_mut().expect("checked at parse").1.push(s),
            _ => {}
        }
    }
    let values: Vec<(FinCat, BTreeMap<String, usize>)> = values
        .into_iter()
        .enumerate()
        .map(|(j, v)| v.ok_or_else(|| invalid(doc.header(), format!("no node for index object {}", index.object_name(j)))))
        .collect::<Result<_>>()?;
    let mut maps: Vec<Option<Functor>> = (0..index.num_morphisms())
        .map(|u| index.is_identity(u).then(|| Functor::identity(&values[index.src(u)].0)))
        .collect();
    for (name, lines) in blocks {
        let u = index_names.get(&name.text).copied().ok_or_else(|| DocError::UnknownReference {
            loc: name.loc,
            name: name.text.clone(),
        })?;
        if index.is_identity(u) {
            return Err(invalid(name.loc, format!("{} is an identity and maps by the identity functor", name.text)));
        }
        let ((dom, dom_names), (cod, cod_names)) = (&values[index.src(u)], &values[index.tgt(u)]);
        let lookup = |id: &Ident, names: &dyn Fn(&str) -> Option<usize>| {
            names(&id.text).ok_or_else(|| DocError::UnknownReference {
                loc: id.loc,
                name: id.text.clone(),
            })
        };
        let mut obj = vec![None; dom.num_objects()];
        let mut mor = vec![None; dom.num_morphisms()];
        for s in lines {
            match s {
                Stmt::SendObj { from, to } => {
                    obj[lookup(from, &|t| dom.object_index(t))?] = Some(lookup(to, &|t| cod.object_index(t))?);
                }
                Stmt::SendMor { from, to } => {
                    mor[lookup(from, &|t| dom_names.get(t).copied())?] = Some(lookup(to, &|t| cod_names.get(t).copied())?);
                }
                _ => {}
            }
        }
        let obj: Vec<usize> = obj
            .into_iter()
            .enumerate()
            .map(|(a, o)| o.ok_or_else(|| invalid(name.loc, format!("{} does not send object {}", name.text, dom.object_name(a)))))
            .collect::<Result<_>>()?;
        let mor: Vec<usize> = mor
            .into_iter()
            .enumerate()
            .map(|(f, m)| match m {
                Some(m) => Ok(m),
                None if dom.is_identity(f) => Ok(cod.identity(obj[dom.src(f)])),
                None => Err(invalid(name.loc, format!("{} does not send morphism {}", name.text, dom.morphism_name(f)))),
            })
            .collect::<Result<_>>()?;
        maps[u] = Some(Functor::new(dom, cod, obj, mor).map_err(|e| semantic(name.loc, e))?);
    }
    let maps: Vec<Functor> = maps
        .into_iter()
        .enumerate()
        .map(|(u, m)| m.ok_or_else(|| invalid(doc.header(), format!("no functor for index morphism {}", index.morphism_name(u)))))
        .collect::<Result<_>>()?;
    CatDiagram::new(index, values.into_iter().map(|v| v.0).collect(), maps).map_err(|e| semantic(doc.header(), e))
}

/// A diagram document referring to the given paths for the index and the
/// node categories.
pub fn store_diagram(d: &CatDiagram, name: &str, index_path: &str, node_paths: &[String]) -> Document {
    let mut doc = Document::new(Kind::Diagram, name);
    doc.push(Stmt::Index(Ident::new(index_path)));
    for (j, p) in node_paths.iter().enumerate() {
        doc.push(Stmt::Node {
            name: Ident::new(d.index.object_name(j)),
            path: Ident::new(p),
        });
    }
    for u in d.index.non_identities() {
        let (dom, cod) = (&d.values[d.index.src(u)], &d.values[d.index.tgt(u)]);
        let f = &d.maps[u];
        doc.push(Stmt::Functor {
            name: Ident::new(d.index.morphism_name(u)),
        });
        for a in 0..dom.num_objects() {
            doc.push(Stmt::SendObj {
                from: Ident::new(dom.object_name(a)),
                to: Ident::new(cod.object_name(f.obj[a])),
            });
        }
        for m in dom.non_identities() {
            doc.push(Stmt::SendMor {
                from: Ident::new(dom.morphism_name(m)),
                to: Ident::new(cod.morphism_name(f.mor[m])),
            });
        }
    }
    doc
}
