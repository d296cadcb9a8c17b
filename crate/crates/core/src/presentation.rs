//! Quivers, edge paths and finitely presented categories.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::fincat::FinCat;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

impl Edge {
    pub fn new(name: impl Into<String>, src: usize, tgt: usize) -> Self {
        Edge {
            name: name.into(),
            src,
            tgt,
        }
    }
}

/// A finite directed multigraph, optionally reflexive: a reflexive quiver
/// distinguishes one loop per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    reflexive: Option<Vec<usize>>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, edges: Vec<Edge>) -> Result<Quiver> {
        for e in &edges {
            if e.src >= vertices.len() || e.tgt >= vertices.len() {
                return Err(Error::SrcTgtMismatch {
                    detail: format!("edge {} has an endpoint out of range", e.name),
                });
            }
        }
        Ok(Quiver {
            vertices,
            edges,
            reflexive: None,
        })
    }

    /// A reflexive quiver; `loops[v]` is the distinguished loop at `v`.
    pub fn reflexive(vertices: Vec<String>, edges: Vec<Edge>, loops: Vec<usize>) -> Result<Quiver> {
        let mut q = Quiver::new(vertices, edges)?;
        if loops.len() != q.vertices.len() {
            return Err(Error::InvalidArgument(format!(
                "{} vertices but {} distinguished loops",
                q.vertices.len(),
                loops.len()
            )));
        }
        for (v, &e) in loops.iter().enumerate() {
            if e >= q.edges.len() || q.edges[e].src != v || q.edges[e].tgt != v {
                return Err(Error::SrcTgtMismatch {
                    detail: format!("distinguished loop at {} is not a loop there", q.vertices[v]),
                });
            }
        }
        let mut seen = alloc::vec![false; q.edges.len()];
        for &e in &loops {
            if core::mem::replace(&mut seen[e], true) {
                return Err(Error::InvalidArgument("an edge is distinguished twice".into()));
            }
        }
        q.reflexive = Some(loops);
        Ok(q)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn loops(&self) -> Option<&[usize]> {
        self.reflexive.as_deref()
    }

    pub fn is_reflexive(&self) -> bool {
        self.reflexive.is_some()
    }

    /// Whether `e` is a distinguished loop.
    pub fn is_degenerate(&self, e: usize) -> bool {
        self.reflexive.as_ref().is_some_and(|l| l[self.edges[e].src] == e)
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn edge_index(&self, name: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.name == name)
    }

    /// Non-distinguished edges, the generators of the free category.
    pub fn generators(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.edges.len()).filter(move |&e| !self.is_degenerate(e))
    }

    /// Adds a fresh distinguished loop `1_v` at every vertex.
    pub fn adjoin_degeneracies(&self) -> Quiver {
        let mut edges = self.edges.clone();
        let mut loops = Vec::new();
        for (v, name) in self.vertices.iter().enumerate() {
            let mut label = format!("1_{name}");
            while edges.iter().any(|e| e.name == label) {
                label.push('\'');
            }
            loops.push(edges.len());
            edges.push(Edge::new(label, v, v));
        }
        Quiver {
            vertices: self.vertices.clone(),
            edges,
            reflexive: Some(loops),
        }
    }

    /// Drops the reflexive structure, keeping the loops as ordinary edges.
    pub fn forget_degeneracies(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            edges: self.edges.clone(),
            reflexive: None,
        }
    }

    /// The underlying reflexive quiver of a category: every morphism is an
    /// edge and the identities are distinguished.
    pub fn underlying(c: &FinCat) -> Quiver {
        let edges = c.morphisms().iter().map(|m| Edge::new(m.name.clone(), m.src, m.tgt)).collect();
        Quiver {
            vertices: c.objects().to_vec(),
            edges,
            reflexive: Some(c.identities().to_vec()),
        }
    }
}

/// A path of edges, listed in traversal order: `edges[0]` is applied first,
/// so the path `[f, g]` denotes the composite `g . f`. The empty path at a
/// vertex is its identity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub src: usize,
    pub tgt: usize,
    pub edges: Vec<usize>,
}

impl Path {
    pub fn empty(v: usize) -> Path {
        Path {
            src: v,
            tgt: v,
            edges: Vec::new(),
        }
    }

    pub fn edge(q: &Quiver, e: usize) -> Path {
        let Edge { src, tgt, .. } = q.edges[e];
        Path {
            src,
            tgt,
            edges: alloc::vec![e],
        }
    }

    /// Builds a path from edges in traversal order, checking composability.
    pub fn from_edges(q: &Quiver, start: usize, edges: Vec<usize>) -> Result<Path> {
        let mut at = start;
        for &e in &edges {
            let edge = q.edges.get(e).ok_or_else(|| Error::InvalidArgument(format!("edge {e} out of range")))?;
            if edge.src != at {
                return Err(Error::SrcTgtMismatch {
                    detail: format!("edge {} does not start at {}", edge.name, q.vertices[at]),
                });
            }
            at = edge.tgt;
        }
        Ok(Path {
            src: start,
            tgt: at,
            edges,
        })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `other . self`.
    pub fn then(&self, other: &Path) -> Path {
        debug_assert_eq!(self.tgt, other.src);
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Path {
            src: self.src,
            tgt: other.tgt,
            edges,
        }
    }

    /// Vertex reached after the first `i` edges.
    pub fn vertex_at(&self, q: &Quiver, i: usize) -> usize {
        if i == 0 {
            self.src
        } else {
            q.edges[self.edges[i - 1]].tgt
        }
    }

    /// Removes distinguished loops.
    pub fn normalized(&self, q: &Quiver) -> Path {
        Path {
            src: self.src,
            tgt: self.tgt,
            edges: self.edges.iter().copied().filter(|&e| !q.is_degenerate(e)).collect(),
        }
    }

    /// Composition notation, e.g. `g.f`, or `1_x` for an empty path.
    pub fn display(&self, q: &Quiver) -> String {
        if self.edges.is_empty() {
            return format!("1_{}", q.vertices[self.src]);
        }
        let names: Vec<&str> = self.edges.iter().rev().map(|&e| q.edges[e].name.as_str()).collect();
        names.join(".")
    }
}

/// A finitely presented category: generating quiver plus relations between
/// parallel paths. Distinguished loops of a reflexive generating quiver stand
/// for identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresCat {
    quiver: Quiver,
    relations: Vec<(Path, Path)>,
}

impl PresCat {
    pub fn new(quiver: Quiver, relations: Vec<(Path, Path)>) -> Result<PresCat> {
        for (p, q) in &relations {
            for path in [p, q] {
                let rebuilt = Path::from_edges(&quiver, path.src, path.edges.clone())?;
                if rebuilt.tgt != path.tgt {
                    return Err(Error::SrcTgtMismatch {
                        detail: format!("path {} has an inconsistent target", path.display(&quiver)),
                    });
                }
            }
            if p.src != q.src || p.tgt != q.tgt {
                return Err(Error::SrcTgtMismatch {
                    detail: format!(
                        "relation {} = {} relates non-parallel paths",
                        p.display(&quiver),
                        q.display(&quiver)
                    ),
                });
            }
        }
        Ok(PresCat { quiver, relations })
    }

    /// The free category on a quiver.
    pub fn free(quiver: Quiver) -> PresCat {
        PresCat {
            quiver,
            relations: Vec::new(),
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[(Path, Path)] {
        &self.relations
    }

    /// Relations with distinguished loops removed, trivial ones dropped,
    /// each oriented with the shortlex-larger side first, sorted and deduplicated.
    pub fn normalized_relations(&self) -> Vec<(Path, Path)> {
        let mut out: Vec<(Path, Path)> = self
            .relations
            .iter()
            .map(|(p, q)| (p.normalized(&self.quiver), q.normalized(&self.quiver)))
            .filter(|(p, q)| p != q)
            .map(|(p, q)| if shortlex(&p, &q) { (q, p) } else { (p, q) })
            .collect();
        out.sort_by(|a, b| {
            (a.0.src, a.0.edges.len(), &a.0.edges, a.1.edges.len(), &a.1.edges)
                .cmp(&(b.0.src, b.0.edges.len(), &b.0.edges, b.1.edges.len(), &b.1.edges))
        });
        out.dedup();
        out
    }

    /// Length of the longest relation side after normalization.
    pub fn longest_relation(&self) -> usize {
        self.normalized_relations()
            .iter()
            .map(|(p, q)| p.len().max(q.len()))
            .max()
            .unwrap_or(0)
    }

    /// Number of generating (non-distinguished) edges.
    pub fn num_generators(&self) -> usize {
        self.quiver.generators().count()
    }

    /// The presentation of a finite category by all its non-identity
    /// morphisms and its full composition table.
    pub fn of_fincat(c: &FinCat) -> PresCat {
        let quiver = Quiver::underlying(c);
        let mut relations = Vec::new();
        for f in c.non_identities() {
            for g in c.non_identities() {
                if c.src(g) != c.tgt(f) {
                    continue;
                }
                let h = c.compose(g, f).unwrap();
                let lhs = Path::from_edges(&quiver, c.src(f), alloc::vec![f, g]).unwrap();
                let rhs = if c.is_identity(h) {
                    Path::empty(c.src(f))
                } else {
                    Path::edge(&quiver, h)
                };
                relations.push((lhs, rhs));
            }
        }
        PresCat { quiver, relations }
    }
}

/// A morphism of presentations given on generators: every edge of the source
/// quiver goes to a path of the target. Distinguished loops must go to empty
/// paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresMap {
    pub obj: Vec<usize>,
    pub edges: Vec<Path>,
}

impl PresMap {
    pub fn apply(&self, p: &Path) -> Path {
        let start = Path::empty(self.obj[p.src]);
        p.edges.iter().fold(start, |acc, &e| acc.then(&self.edges[e]))
    }

    /// `next . self`.
    pub fn then(&self, next: &PresMap) -> PresMap {
        PresMap {
            obj: self.obj.iter().map(|&v| next.obj[v]).collect(),
            edges: self.edges.iter().map(|p| next.apply(p)).collect(),
        }
    }

    /// The identity on a presentation's generators.
    pub fn identity(q: &Quiver) -> PresMap {
        PresMap {
            obj: (0..q.num_vertices()).collect(),
            edges: (0..q.num_edges())
                .map(|e| if q.is_degenerate(e) { Path::empty(q.edges[e].src) } else { Path::edge(q, e) })
                .collect(),
        }
    }
}

/// A functor from a finite category into a presented one, given by a path
/// for every morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathFunctor {
    pub obj: Vec<usize>,
    pub mor: Vec<Path>,
}

/// Strict shortlex order on edge sequences.
pub(crate) fn shortlex(p: &Path, q: &Path) -> bool {
    (p.edges.len(), &p.edges) < (q.edges.len(), &q.edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn chain() -> Quiver {
        Quiver::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![Edge::new("f", 0, 1), Edge::new("g", 1, 2), Edge::new("h", 0, 2)],
        )
        .unwrap()
    }

    #[test]
    fn non_parallel_relation_rejected() {
        let q = chain();
        let rel = (Path::edge(&q, 0), Path::edge(&q, 2));
        assert!(PresCat::new(q, vec![rel]).is_err());
    }

    #[test]
    fn non_composable_path_rejected() {
        let q = chain();
        assert!(Path::from_edges(&q, 0, vec![1]).is_err());
    }

    #[test]
    fn display_uses_composition_order() {
        let q = chain();
        let p = Path::from_edges(&q, 0, vec![0, 1]).unwrap();
        assert_eq!(p.display(&q), "g.f");
        assert_eq!(Path::empty(1).display(&q), "1_b");
    }

    #[test]
    fn adjoin_and_forget_degeneracies() {
        let q = Quiver::new(vec!["a".into(), "b".into()], vec![Edge::new("f", 0, 1)]).unwrap();
        let r = q.adjoin_degeneracies();
        assert_eq!(r.num_vertices(), 2);
        assert_eq!(r.num_edges(), 3);
        assert_eq!(r.loops().unwrap().len(), 2);
        let back = r.forget_degeneracies();
        assert!(!back.is_reflexive());
        assert_eq!(back.num_edges(), 3);
        let empty = Quiver::new(vec![], vec![]).unwrap().adjoin_degeneracies();
        assert_eq!((empty.num_vertices(), empty.num_edges()), (0, 0));
    }
}
