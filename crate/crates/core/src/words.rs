//! The word problem for finitely presented categories.
//!
//! [`materialize`] runs a bounded coset enumeration: it builds the right
//! action of the presented category on itself, one node per morphism class,
//! defining new nodes only up to a length bound and merging nodes whenever a
//! relation traced from some node ends in two different places. When the
//! resulting table is complete (every node has every outgoing generator
//! defined) and every relation holds at every node, the table *is* the
//! presented category: each node is reached from an identity by a word, and
//! tracing words through the table is a functor that respects the relations.
//! That closure condition is the finiteness certificate. Otherwise the
//! partial table is returned as [`Materialization::PossiblyInfinite`].
//!
//! [`word_equal`] answers equality queries with a replayable rewrite witness
//! for `Equal`, and refuses to answer `NotEqual` unless the relations are
//! empty or a certified finite table separates the words.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::fincat::{FinCat, Functor, Morphism};
use crate::presentation::{Path, PathFunctor, PresCat, PresMap, Quiver};
use crate::{Error, Result};

const NONE: usize = usize::MAX;

/// Bounds for word-problem computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WordBudget {
    /// Length bound for words; `None` selects [`default_max_len`].
    pub max_len: Option<usize>,
    /// Maximum number of table nodes (or rewrite-search states).
    pub max_classes: usize,
}

impl Default for WordBudget {
    fn default() -> Self {
        WordBudget {
            max_len: None,
            max_classes: 200_000,
        }
    }
}

impl WordBudget {
    pub fn with_len(max_len: usize) -> Self {
        WordBudget {
            max_len: Some(max_len),
            ..WordBudget::default()
        }
    }

    pub fn len_for(&self, p: &PresCat) -> usize {
        self.max_len.unwrap_or_else(|| default_max_len(p))
    }
}

/// Generators plus longest relation side plus two.
pub fn default_max_len(p: &PresCat) -> usize {
    p.num_generators() + p.longest_relation() + 2
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub src: usize,
    pub tgt: usize,
    /// Shortlex-least word reaching the class in the table.
    pub rep: Path,
}

/// The class table produced by [`materialize`]. Classes `0..V` are the
/// identities of the `V` vertices, in vertex order.
#[derive(Clone, Debug)]
pub struct WordTable {
    pres: PresCat,
    bound: usize,
    complete: bool,
    classes: Vec<ClassInfo>,
    slot: Vec<usize>,
    trans: Vec<Vec<usize>>,
}

impl WordTable {
    pub fn presentation(&self) -> &PresCat {
        &self.pres
    }

    pub fn quiver(&self) -> &Quiver {
        self.pres.quiver()
    }

    /// The length bound the table was computed with.
    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Whether the finiteness certificate holds.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    pub fn identity(&self, v: usize) -> usize {
        v
    }

    /// Class reached from class `c` by post-composing with edge `e`.
    pub fn step(&self, c: usize, e: usize) -> Option<usize> {
        if self.quiver().is_degenerate(e) {
            return Some(c);
        }
        if self.quiver().edges()[e].src != self.classes[c].tgt {
            return None;
        }
        match self.trans[c][self.slot[e]] {
            NONE => None,
            t => Some(t),
        }
    }

    pub fn trace_from(&self, c: usize, edges: &[usize]) -> Option<usize> {
        edges.iter().try_fold(c, |c, &e| self.step(c, e))
    }

    /// The class of a path, when it can be traced within the table.
    pub fn class_of(&self, path: &Path) -> Option<usize> {
        self.trace_from(path.src, &path.edges)
    }

    /// Outgoing transitions of class `c` as `(edge, target)`.
    pub fn transitions(&self, c: usize) -> impl Iterator<Item = (usize, Option<usize>)> + '_ {
        let q = self.quiver();
        let v = self.classes[c].tgt;
        q.generators()
            .filter(move |&e| q.edges()[e].src == v)
            .map(move |e| (e, self.step(c, e)))
    }
}

/// A certified finite presented category.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub cat: FinCat,
    pub table: WordTable,
}

impl Quotient {
    /// The morphism a path denotes.
    pub fn morphism_of(&self, path: &Path) -> usize {
        self.table.class_of(path).expect("complete table traces every path")
    }

    /// The morphism denoted by a single edge (identity for distinguished loops).
    pub fn edge_image(&self, e: usize) -> usize {
        self.morphism_of(&Path::edge(self.table.quiver(), e))
    }
}

#[derive(Clone, Debug)]
pub enum Materialization {
    Finite(Quotient),
    PossiblyInfinite(WordTable),
}

impl Materialization {
    pub fn table(&self) -> &WordTable {
        match self {
            Materialization::Finite(q) => &q.table,
            Materialization::PossiblyInfinite(t) => t,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Materialization::Finite(_))
    }

    pub fn finite(self) -> Result<Quotient> {
        match self {
            Materialization::Finite(q) => Ok(q),
            Materialization::PossiblyInfinite(t) => Err(Error::PossiblyInfinite { bound: t.bound }),
        }
    }
}

/// Materializes a presented category by bounded coset enumeration.
pub fn materialize(p: &PresCat, budget: WordBudget) -> Result<Materialization> {
    let max_len = budget.len_for(p);
    let rels = p.normalized_relations();
    let longest = rels.iter().map(|(a, b)| a.len().max(b.len())).max().unwrap_or(0);
    if max_len < longest {
        return Err(Error::InvalidArgument(alloc::format!(
            "length bound {max_len} is shorter than the longest relation side {longest}"
        )));
    }
    let mut en = Enumeration::new(p.quiver(), &rels, max_len, budget.max_classes);
    en.run()?;
    let table = en.into_table(p.clone(), max_len);
    if !table.complete {
        return Ok(Materialization::PossiblyInfinite(table));
    }
    let cat = table_category(&table);
    Ok(Materialization::Finite(Quotient { cat, table }))
}

fn table_category(table: &WordTable) -> FinCat {
    let q = table.quiver();
    let objects = q.vertices().to_vec();
    let morphisms = table
        .classes
        .iter()
        .map(|c| Morphism::new(c.rep.display(q), c.src, c.tgt))
        .collect();
    let identities = (0..q.num_vertices()).collect();
    FinCat::new(objects, morphisms, identities, |g, f| {
        table.trace_from(f, &table.classes[g].rep.edges)
    })
    .expect("a certified word table is a category")
}

struct Enumeration<'a> {
    quiver: &'a Quiver,
    out: Vec<Vec<usize>>,
    slot: Vec<usize>,
    rels: Vec<Vec<(Vec<usize>, Vec<usize>)>>,
    vertex: Vec<usize>,
    depth: Vec<usize>,
    parent: Vec<usize>,
    trans: Vec<Vec<usize>>,
    max_len: usize,
    max_nodes: usize,
    changed: bool,
}

impl<'a> Enumeration<'a> {
    fn new(quiver: &'a Quiver, rels: &[(Path, Path)], max_len: usize, max_nodes: usize) -> Self {
        let mut out = vec![Vec::new(); quiver.num_vertices()];
        let mut slot = vec![NONE; quiver.num_edges()];
        for e in quiver.generators() {
            let s = quiver.edges()[e].src;
            slot[e] = out[s].len();
            out[s].push(e);
        }
        let mut by_vertex = vec![Vec::new(); quiver.num_vertices()];
        for (a, b) in rels {
            by_vertex[a.src].push((a.edges.clone(), b.edges.clone()));
        }
        Enumeration {
            quiver,
            out,
            slot,
            rels: by_vertex,
            vertex: Vec::new(),
            depth: Vec::new(),
            parent: Vec::new(),
            trans: Vec::new(),
            max_len,
            max_nodes,
            changed: false,
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    fn new_node(&mut self, v: usize, depth: usize) -> Result<usize> {
        let id = self.vertex.len();
        if id >= self.max_nodes {
            return Err(Error::BudgetExceeded {
                what: "word classes",
                limit: self.max_nodes as u64,
            });
        }
        self.vertex.push(v);
        self.depth.push(depth);
        self.parent.push(id);
        self.trans.push(vec![NONE; self.out[v].len()]);
        self.changed = true;
        Ok(id)
    }

    fn define(&mut self, c: usize, e: usize) -> Result<Option<usize>> {
        if self.depth[c] >= self.max_len {
            return Ok(None);
        }
        let t = self.new_node(self.quiver.edges()[e].tgt, self.depth[c] + 1)?;
        self.trans[c][self.slot[e]] = t;
        Ok(Some(t))
    }

    fn trace(&mut self, start: usize, word: &[usize], define: bool) -> Result<Option<usize>> {
        let mut c = self.find(start);
        for &e in word {
            let t = self.trans[c][self.slot[e]];
            c = if t != NONE {
                self.find(t)
            } else if define {
                match self.define(c, e)? {
                    Some(t) => t,
                    None => return Ok(None),
                }
            } else {
                return Ok(None);
            };
        }
        Ok(Some(c))
    }

    fn merge(&mut self, a: usize, b: usize) {
        let mut pending = vec![(a, b)];
        while let Some((a, b)) = pending.pop() {
            let (a, b) = (self.find(a), self.find(b));
            if a == b {
                continue;
            }
            let (keep, kill) = if a < b { (a, b) } else { (b, a) };
            debug_assert_eq!(self.vertex[keep], self.vertex[kill]);
            self.parent[kill] = keep;
            self.depth[keep] = self.depth[keep].min(self.depth[kill]);
            self.changed = true;
            for s in 0..self.trans[kill].len() {
                let t = self.trans[kill][s];
                if t == NONE {
                    continue;
                }
                let k = self.trans[keep][s];
                if k == NONE {
                    self.trans[keep][s] = t;
                } else {
                    pending.push((k, t));
                }
            }
        }
    }

    fn run(&mut self) -> Result<()> {
        for v in 0..self.quiver.num_vertices() {
            self.new_node(v, 0)?;
        }
        let rels = core::mem::take(&mut self.rels);
        loop {
            self.changed = false;
            let mut i = 0;
            while i < self.vertex.len() {
                if self.find(i) == i {
                    for (p, q) in &rels[self.vertex[i]] {
                        if self.find(i) != i {
                            break;
                        }
                        let a = self.trace(i, p, true)?;
                        let b = self.trace(i, q, true)?;
                        if let (Some(a), Some(b)) = (a, b) {
                            self.merge(a, b);
                        }
                    }
                    if self.find(i) == i {
                        for s in 0..self.out[self.vertex[i]].len() {
                            if self.trans[i][s] == NONE {
                                let e = self.out[self.vertex[i]][s];
                                self.define(i, e)?;
                            }
                        }
                    }
                }
                i += 1;
            }
            if !self.changed {
                break;
            }
        }
        self.rels = rels;
        Ok(())
    }

    fn is_complete(&mut self) -> Result<bool> {
        let rels = core::mem::take(&mut self.rels);
        let mut complete = true;
        'nodes: for i in 0..self.vertex.len() {
            if self.find(i) != i {
                continue;
            }
            if self.trans[i].contains(&NONE) {
                complete = false;
                break;
            }
            for (p, q) in &rels[self.vertex[i]] {
                let a = self.trace(i, p, false)?;
                let b = self.trace(i, q, false)?;
                if a.is_none() || a != b {
                    complete = false;
                    break 'nodes;
                }
            }
        }
        self.rels = rels;
        Ok(complete)
    }

    fn into_table(mut self, pres: PresCat, bound: usize) -> WordTable {
        let complete = self.is_complete().expect("no definitions while checking");
        let nv = self.quiver.num_vertices();
        let mut id_of = BTreeMap::new();
        let mut classes = Vec::new();
        let mut queue = VecDeque::new();
        for v in 0..nv {
            let root = self.find(v);
            id_of.insert(root, classes.len());
            classes.push(ClassInfo {
                src: v,
                tgt: v,
                rep: Path::empty(v),
            });
            queue.push_back(root);
        }
        while let Some(node) = queue.pop_front() {
            let cid = id_of[&node];
            for s in 0..self.trans[node].len() {
                let t = self.trans[node][s];
                if t == NONE {
                    continue;
                }
                let t = self.find(t);
                if id_of.contains_key(&t) {
                    continue;
                }
                let e = self.out[self.vertex[node]][s];
                let rep = classes[cid].rep.then(&Path::edge(self.quiver, e));
                id_of.insert(t, classes.len());
                classes.push(ClassInfo {
                    src: rep.src,
                    tgt: rep.tgt,
                    rep,
                });
                queue.push_back(t);
            }
        }
        let mut trans = vec![Vec::new(); classes.len()];
        let roots: Vec<usize> = id_of.keys().copied().collect();
        for node in roots {
            let cid = id_of[&node];
            let row: Vec<usize> = (0..self.trans[node].len())
                .map(|s| match self.trans[node][s] {
                    NONE => NONE,
                    t => id_of[&self.find(t)],
                })
                .collect();
            trans[cid] = row;
        }
        WordTable {
            pres,
            bound,
            complete,
            classes,
            slot: self.slot,
            trans,
        }
    }
}

/// The functor between certified quotients induced by a map of generators.
/// Fails with `NotAFunctor` if some relation of the source is not sent to an
/// equation of the target.
pub fn induced_functor(map: &PresMap, src: &Quotient, tgt: &Quotient) -> Result<Functor> {
    let tq = tgt.table.quiver();
    for (p, q) in src.table.presentation().relations() {
        let (a, b) = (map.apply(p), map.apply(q));
        if tgt.morphism_of(&a) != tgt.morphism_of(&b) {
            return Err(Error::NotAFunctor {
                detail: alloc::format!("relation is sent to {} != {}", a.display(tq), b.display(tq)),
            });
        }
    }
    let mor = src
        .table
        .classes()
        .iter()
        .map(|c| tgt.morphism_of(&map.apply(&c.rep)))
        .collect();
    Functor::new(&src.cat, &tgt.cat, map.obj.clone(), mor)
}

/// Evaluates a [`PathFunctor`] in a certified quotient.
pub fn path_functor(f: &PathFunctor, dom: &FinCat, tgt: &Quotient) -> Result<Functor> {
    let mor = f.mor.iter().map(|p| tgt.morphism_of(p)).collect();
    Functor::new(dom, &tgt.cat, f.obj.clone(), mor)
}

/// One elementary rewrite: replace the occurrence of one side of relation
/// `relation` (indexing [`PresCat::normalized_relations`]) starting at edge
/// position `position` by the other side. `forward` rewrites the first side
/// into the second.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RewriteStep {
    pub relation: usize,
    pub position: usize,
    pub forward: bool,
}

/// Why two words are known to be different.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refutation {
    DifferentEndpoints,
    /// No relations: the category is free and words are equal only when identical.
    FreeCategory,
    /// A certified finite table sends the words to different classes.
    FiniteTable { classes: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordVerdict {
    Equal(Vec<RewriteStep>),
    NotEqual(Refutation),
    Unknown,
}

fn apply_step(q: &Quiver, rels: &[(Path, Path)], w: &Path, step: RewriteStep) -> Option<Path> {
    let (l, r) = rels.get(step.relation)?;
    let (from, to) = if step.forward { (l, r) } else { (r, l) };
    let end = step.position + from.len();
    if end > w.len() || w.edges[step.position..end] != from.edges[..] {
        return None;
    }
    if w.vertex_at(q, step.position) != from.src {
        return None;
    }
    let mut edges = Vec::with_capacity(w.len() + to.len() - from.len());
    edges.extend_from_slice(&w.edges[..step.position]);
    edges.extend_from_slice(&to.edges);
    edges.extend_from_slice(&w.edges[end..]);
    Some(Path {
        src: w.src,
        tgt: w.tgt,
        edges,
    })
}

/// Applies a rewrite witness to `w`, returning the final word, or `None` if
/// some step does not apply.
pub fn replay(p: &PresCat, w: &Path, steps: &[RewriteStep]) -> Option<Path> {
    let rels = p.normalized_relations();
    let mut cur = w.normalized(p.quiver());
    for &s in steps {
        cur = apply_step(p.quiver(), &rels, &cur, s)?;
    }
    Some(cur)
}

fn neighbours(q: &Quiver, rels: &[(Path, Path)], w: &Path, max_len: usize) -> Vec<(RewriteStep, Path)> {
    let mut out = Vec::new();
    for (ri, (l, r)) in rels.iter().enumerate() {
        for forward in [true, false] {
            let (from, to) = if forward { (l, r) } else { (r, l) };
            if w.len() + to.len() < from.len() || w.len() + to.len() - from.len() > max_len {
                continue;
            }
            for position in 0..=(w.len().saturating_sub(from.len())) {
                if from.len() > w.len() {
                    break;
                }
                let step = RewriteStep {
                    relation: ri,
                    position,
                    forward,
                };
                if let Some(next) = apply_step(q, rels, w, step) {
                    out.push((step, next));
                }
            }
        }
    }
    out
}

/// Bidirectional breadth-first search through elementary rewrites.
fn rewrite_search(p: &PresCat, w1: &Path, w2: &Path, max_len: usize, max_states: usize) -> Option<Vec<RewriteStep>> {
    let q = p.quiver();
    let rels = p.normalized_relations();
    let max_len = max_len.max(w1.len()).max(w2.len());
    type Seen = BTreeMap<Vec<usize>, Option<(Vec<usize>, RewriteStep)>>;
    let mut seen: [Seen; 2] = [BTreeMap::new(), BTreeMap::new()];
    let mut frontier: [VecDeque<Path>; 2] = [VecDeque::new(), VecDeque::new()];
    seen[0].insert(w1.edges.clone(), None);
    seen[1].insert(w2.edges.clone(), None);
    frontier[0].push_back(w1.clone());
    frontier[1].push_back(w2.clone());
    let meet = loop {
        if frontier[0].is_empty() && frontier[1].is_empty() {
            return None;
        }
        let side = if frontier[1].is_empty() || (!frontier[0].is_empty() && frontier[0].len() <= frontier[1].len()) {
            0
        } else {
            1
        };
        let level = core::mem::take(&mut frontier[side]);
        let mut found = None;
        'level: for w in level {
            for (step, next) in neighbours(q, &rels, &w, max_len) {
                if seen[side].contains_key(&next.edges) {
                    continue;
                }
                seen[side].insert(next.edges.clone(), Some((w.edges.clone(), step)));
                if seen[1 - side].contains_key(&next.edges) {
                    found = Some(next.edges.clone());
                    break 'level;
                }
                if seen[0].len() + seen[1].len() > max_states {
                    return None;
                }
                frontier[side].push_back(next);
            }
        }
        if let Some(m) = found {
            break m;
        }
    };
    let mut forward_half = Vec::new();
    let mut cur = meet.clone();
    while let Some(Some((prev, step))) = seen[0].get(&cur) {
        forward_half.push(*step);
        cur = prev.clone();
    }
    forward_half.reverse();
    let mut cur = meet;
    while let Some(Some((prev, step))) = seen[1].get(&cur) {
        forward_half.push(RewriteStep {
            forward: !step.forward,
            ..*step
        });
        cur = prev.clone();
    }
    Some(forward_half)
}

/// Decides equality of two parallel paths within the given budget.
pub fn word_equal(p: &PresCat, w1: &Path, w2: &Path, budget: WordBudget) -> WordVerdict {
    let q = p.quiver();
    let (a, b) = (w1.normalized(q), w2.normalized(q));
    if a.src != b.src || a.tgt != b.tgt {
        return WordVerdict::NotEqual(Refutation::DifferentEndpoints);
    }
    if a == b {
        return WordVerdict::Equal(Vec::new());
    }
    let rels = p.normalized_relations();
    if rels.is_empty() {
        return WordVerdict::NotEqual(Refutation::FreeCategory);
    }
    let max_len = budget.len_for(p);
    if let Some(steps) = rewrite_search(p, &a, &b, max_len, budget.max_classes) {
        return WordVerdict::Equal(steps);
    }
    if let Ok(Materialization::Finite(quot)) = materialize(p, budget) {
        if quot.table.class_of(&a) != quot.table.class_of(&b) {
            return WordVerdict::NotEqual(Refutation::FiniteTable {
                classes: quot.table.num_classes(),
            });
        }
    }
    WordVerdict::Unknown
}

/// Renders a class table for diagnostics, one class per line.
pub fn describe_table(t: &WordTable) -> String {
    let mut s = String::new();
    for (i, c) in t.classes().iter().enumerate() {
        s.push_str(&alloc::format!("{i}: {}\n", c.rep.display(t.quiver())));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{is_isomorphic, Budget};
    use crate::presentation::Edge;
    use crate::samples;

    fn boundary_quiver() -> Quiver {
        Quiver::new(
            vec!["0".into(), "1".into(), "2".into()],
            vec![Edge::new("f", 0, 1), Edge::new("g", 1, 2), Edge::new("h", 0, 2)],
        )
        .unwrap()
    }

    fn loop_quiver() -> Quiver {
        Quiver::new(vec!["x".into()], vec![Edge::new("e", 0, 0)]).unwrap()
    }

    #[test]
    fn free_on_boundary_of_triangle() {
        let p = PresCat::free(boundary_quiver());
        let m = materialize(&p, WordBudget::default()).unwrap().finite().unwrap();
        assert_eq!(m.cat.num_objects(), 3);
        // three identities, f, g, h and g.f
        assert_eq!(m.cat.num_morphisms(), 7);
        assert_eq!(m.cat.hom(0, 2).len(), 2);
    }

    #[test]
    fn idempotent_monoid() {
        let q = loop_quiver();
        let ee = Path::from_edges(&q, 0, vec![0, 0]).unwrap();
        let e = Path::edge(&q, 0);
        let p = PresCat::new(q, vec![(ee, e)]).unwrap();
        let m = materialize(&p, WordBudget::default()).unwrap().finite().unwrap();
        assert_eq!(m.cat.num_morphisms(), 2);
        assert!(is_isomorphic(&m.cat, &samples::idempotent(), Budget::default()).unwrap().is_some());
    }

    #[test]
    fn free_monoid_is_possibly_infinite() {
        let p = PresCat::free(loop_quiver());
        match materialize(&p, WordBudget::with_len(8)).unwrap() {
            Materialization::PossiblyInfinite(t) => {
                assert_eq!(t.num_classes(), 9);
                assert!(!t.is_complete());
            }
            Materialization::Finite(_) => panic!("free monoid certified finite"),
        }
    }

    #[test]
    fn bound_shorter_than_relation_is_rejected() {
        let q = loop_quiver();
        let eee = Path::from_edges(&q, 0, vec![0, 0, 0]).unwrap();
        let p = PresCat::new(q, vec![(eee, Path::empty(0))]).unwrap();
        assert!(materialize(&p, WordBudget::with_len(2)).is_err());
        let m = materialize(&p, WordBudget::default()).unwrap().finite().unwrap();
        assert!(is_isomorphic(&m.cat, &samples::cyclic(3), Budget::default()).unwrap().is_some());
    }

    #[test]
    fn class_budget() {
        let q = Quiver::new(vec!["x".into()], vec![Edge::new("a", 0, 0), Edge::new("b", 0, 0)]).unwrap();
        let err = materialize(
            &PresCat::free(q),
            WordBudget {
                max_len: Some(20),
                max_classes: 1000,
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn verdicts() {
        let q = boundary_quiver();
        let gf = Path::from_edges(&q, 0, vec![0, 1]).unwrap();
        let h = Path::edge(&q, 2);
        let free = PresCat::free(q.clone());
        assert_eq!(
            word_equal(&free, &gf, &h, WordBudget::default()),
            WordVerdict::NotEqual(Refutation::FreeCategory)
        );
        let tri = PresCat::new(q, vec![(gf.clone(), h.clone())]).unwrap();
        let v = word_equal(&tri, &gf, &h, WordBudget::default());
        let WordVerdict::Equal(steps) = v else { panic!("{v:?}") };
        assert_eq!(replay(&tri, &gf, &steps).unwrap(), h);
        assert_eq!(word_equal(&tri, &h, &h, WordBudget::default()), WordVerdict::Equal(vec![]));
    }

    #[test]
    fn refutation_needs_certificate() {
        // e.e.e = e.e in a free-ish monoid with a second generator: finite? no.
        let q = Quiver::new(vec!["x".into()], vec![Edge::new("a", 0, 0), Edge::new("b", 0, 0)]).unwrap();
        let aa = Path::from_edges(&q, 0, vec![0, 0]).unwrap();
        let a = Path::edge(&q, 0);
        let b = Path::edge(&q, 1);
        let p = PresCat::new(q, vec![(aa, a.clone())]).unwrap();
        let budget = WordBudget {
            max_len: Some(6),
            max_classes: 10_000,
        };
        assert_eq!(word_equal(&p, &a, &b, budget), WordVerdict::Unknown);
    }

    #[test]
    fn presentation_of_fincat_round_trips() {
        for (_, c) in samples::corpus() {
            let m = materialize(&PresCat::of_fincat(&c), WordBudget::default()).unwrap().finite().unwrap();
            assert!(is_isomorphic(&m.cat, &c, Budget::default()).unwrap().is_some());
        }
    }
}
