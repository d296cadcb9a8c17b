//! Localization of finite categories at a marking, by freely adjoining
//! inverses, with zigzag representatives and a pushout cross-check.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::fincat::{coproduct_cat, enumerate_functors, Budget, FinCat, Functor};
use crate::presentation::{Edge, Path, PathFunctor, PresCat, Quiver};
use crate::realize::{colim_cat, CatColimit, CatDiagram, UniversalCheck};
use crate::samples;
use crate::words::{materialize, path_functor, Quotient, WordBudget};
use crate::{Error, Result};

/// A category with a chosen set of morphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedCat {
    pub cat: FinCat,
    marked: Vec<bool>,
}

impl MarkedCat {
    pub fn new(cat: FinCat, marking: &[usize]) -> Result<Self> {
        let mut marked = vec![false; cat.num_morphisms()];
        for &m in marking {
            if m >= marked.len() {
                return Err(Error::InvalidArgument(format!("marked morphism {m} does not exist")));
            }
            marked[m] = true;
        }
        Ok(MarkedCat { cat, marked })
    }

    pub fn by_names(cat: FinCat, names: &[&str]) -> Result<Self> {
        let ids = names
            .iter()
            .map(|n| cat.morphism_index(n).ok_or_else(|| Error::InvalidArgument(format!("unknown morphism {n}"))))
            .collect::<Result<Vec<_>>>()?;
        MarkedCat::new(cat, &ids)
    }

    pub fn is_marked(&self, m: usize) -> bool {
        self.marked[m]
    }

    pub fn marking(&self) -> Vec<usize> {
        (0..self.marked.len()).filter(|&m| self.marked[m]).collect()
    }

    /// Marked morphisms that are not identities; these get formal inverses.
    pub fn inverted(&self) -> Vec<usize> {
        self.marking().into_iter().filter(|&m| !self.cat.is_identity(m)).collect()
    }
}

pub fn mark_isos(c: &FinCat) -> MarkedCat {
    let marked = (0..c.num_morphisms()).map(|m| c.is_isomorphism(m)).collect();
    MarkedCat { cat: c.clone(), marked }
}

pub fn mark_all(c: &FinCat) -> MarkedCat {
    MarkedCat {
        cat: c.clone(),
        marked: vec![true; c.num_morphisms()],
    }
}

pub fn is_groupoid(c: &FinCat) -> bool {
    (0..c.num_morphisms()).all(|m| c.is_isomorphism(m))
}

/// Whether `f` sends marked morphisms to marked morphisms.
pub fn check_marking_functor(f: &Functor, m: &MarkedCat, n: &MarkedCat) -> bool {
    m.marking().into_iter().all(|w| n.is_marked(f.mor[w]))
}

/// The presentation of a localization and the functor `γ : C -> L`.
///
/// The quiver has every morphism of `C` as an edge, identities
/// distinguished, followed by one edge `w⁻¹` per marked non-identity `w`.
#[derive(Clone, Debug)]
pub struct Localization {
    pub marked: MarkedCat,
    pub pres: PresCat,
    pub gamma: PathFunctor,
    /// `inverse_edge[k]` is the formal inverse of `inverted[k]`.
    pub inverted: Vec<usize>,
    pub inverse_edge: Vec<usize>,
}

impl Localization {
    pub fn materialize(&self, budget: WordBudget) -> Result<Quotient> {
        materialize(&self.pres, budget)?.finite()
    }

    pub fn gamma_functor(&self, q: &Quotient) -> Result<Functor> {
        path_functor(&self.gamma, &self.marked.cat, q)
    }

    /// The morphism of `C` an edge inverts, if it is a formal inverse.
    pub fn inverts(&self, e: usize) -> Option<usize> {
        self.inverse_edge.iter().position(|&x| x == e).map(|k| self.inverted[k])
    }
}

pub fn localize_rel(m: &MarkedCat) -> Result<Localization> {
    let c = &m.cat;
    let base = PresCat::of_fincat(c);
    let under = base.quiver();
    let mut edges: Vec<Edge> = under.edges().to_vec();
    let inverted = m.inverted();
    let mut inverse_edge = Vec::with_capacity(inverted.len());
    for &w in &inverted {
        let mut name = format!("{}^-1", c.morphism_name(w));
        while edges.iter().any(|e| e.name == name) {
            name.push('\'');
        }
        inverse_edge.push(edges.len());
        edges.push(Edge::new(name, c.tgt(w), c.src(w)));
    }
    let quiver = Quiver::reflexive(c.objects().to_vec(), edges, c.identities().to_vec())?;
    let mut relations: Vec<(Path, Path)> = base.relations().to_vec();
    for (&w, &inv) in inverted.iter().zip(&inverse_edge) {
        let (a, b) = (c.src(w), c.tgt(w));
        relations.push((Path::from_edges(&quiver, a, vec![w, inv])?, Path::empty(a)));
        relations.push((Path::from_edges(&quiver, b, vec![inv, w])?, Path::empty(b)));
    }
    let pres = PresCat::new(quiver, relations)?;
    let gamma = PathFunctor {
        obj: (0..c.num_objects()).collect(),
        mor: (0..c.num_morphisms())
            .map(|f| Path::edge(pres.quiver(), f).normalized(pres.quiver()))
            .collect(),
    };
    Ok(Localization {
        marked: m.clone(),
        pres,
        gamma,
        inverted,
        inverse_edge,
    })
}

pub fn localize_total(c: &FinCat) -> Result<Localization> {
    localize_rel(&mark_all(c))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZigStep {
    /// A morphism of `C`, traversed forwards.
    Forward(usize),
    /// A marked morphism, traversed backwards.
    Backward(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Zigzag {
    pub src: usize,
    pub tgt: usize,
    pub steps: Vec<ZigStep>,
}

impl Zigzag {
    /// Back to a word in the localization's generators.
    pub fn to_path(&self, loc: &Localization) -> Path {
        let q = loc.pres.quiver();
        let edges = self
            .steps
            .iter()
            .map(|s| match *s {
                ZigStep::Forward(f) => f,
                ZigStep::Backward(w) => loc.inverse_edge[loc.inverted.iter().position(|&x| x == w).unwrap()],
            })
            .collect();
        Path::from_edges(q, self.src, edges).expect("zigzags chain")
    }

    pub fn display(&self, c: &FinCat) -> String {
        if self.steps.is_empty() {
            return format!("1_{}", c.object_name(self.src));
        }
        let parts: Vec<String> = self
            .steps
            .iter()
            .map(|s| match *s {
                ZigStep::Forward(f) => format!("-{}->", c.morphism_name(f)),
                ZigStep::Backward(w) => format!("<-{}-", c.morphism_name(w)),
            })
            .collect();
        parts.join(" ")
    }
}

/// Reads a word of the localization as a zigzag: runs of plain letters are
/// composed in `C`, inverse letters become backward arrows, and adjacent
/// `w, w⁻¹` pairs cancel.
pub fn zigzag_of(loc: &Localization, word: &Path) -> Result<Zigzag> {
    let c = &loc.marked.cat;
    let q = loc.pres.quiver();
    if word.src >= q.num_vertices() || word.edges.iter().any(|&e| e >= q.num_edges()) {
        return Err(Error::InvalidArgument("word is not over the localization's generators".into()));
    }
    let mut stack: Vec<ZigStep> = Vec::new();
    for &e in &word.edges {
        match loc.inverts(e) {
            Some(w) => match stack.last() {
                Some(&ZigStep::Forward(h)) if h == w => {
                    stack.pop();
                }
                _ => stack.push(ZigStep::Backward(w)),
            },
            None if c.is_identity(e) => {}
            None => match stack.last().copied() {
                Some(ZigStep::Forward(h)) => {
                    stack.pop();
                    let fh = c.compose(e, h).ok_or_else(|| Error::InvalidArgument("word is not composable".into()))?;
                    if !c.is_identity(fh) {
                        stack.push(ZigStep::Forward(fh));
                    }
                }
                Some(ZigStep::Backward(w)) if w == e => {
                    stack.pop();
                }
                _ => stack.push(ZigStep::Forward(e)),
            },
        }
    }
    Ok(Zigzag {
        src: word.src,
        tgt: word.tgt,
        steps: stack,
    })
}

/// Functors `L -> probe` against functors `C -> probe` that invert the
/// marking, compared through precomposition with `γ`.
pub fn check_localization(loc: &Localization, q: &Quotient, probe: &FinCat, budget: Budget) -> Result<UniversalCheck> {
    let c = &loc.marked.cat;
    let gamma = loc.gamma_functor(q)?;
    let out = enumerate_functors(&q.cat, probe, budget)?;
    let images: BTreeSet<Functor> = out.iter().map(|phi| gamma.then(phi)).collect();
    let expected: BTreeSet<Functor> = enumerate_functors(c, probe, budget)?
        .into_iter()
        .filter(|f| loc.marked.marking().into_iter().all(|w| probe.is_isomorphism(f.mor[w])))
        .collect();
    Ok(UniversalCheck {
        functors: out.len(),
        cones: expected.len(),
        bijective: images.len() == out.len() && images == expected,
    })
}

/// The localization as the pushout of `⊔ I <- ⊔ [1] -> C` over the marked
/// non-identities, computed through nerves.
pub fn pushout_localization(m: &MarkedCat) -> Result<CatColimit> {
    let c = &m.cat;
    let inverted = m.inverted();
    if inverted.is_empty() {
        return Err(Error::InvalidArgument("nothing to invert".into()));
    }
    let arrows = coproduct_cat(&vec![samples::arrow(); inverted.len()]);
    let isos = coproduct_cat(&vec![samples::walking_iso(); inverted.len()]);
    let arrow = samples::arrow();
    let iso = samples::walking_iso();
    let (mut to_c_obj, mut to_c_mor) = (vec![0; arrows.cat.num_objects()], vec![0; arrows.cat.num_morphisms()]);
    let (mut to_i_obj, mut to_i_mor) = (vec![0; arrows.cat.num_objects()], vec![0; arrows.cat.num_morphisms()]);
    for (k, &w) in inverted.iter().enumerate() {
        let (ja, ji) = (&arrows.injections[k], &isos.injections[k]);
        for x in 0..2 {
            to_c_obj[ja.obj[x]] = if x == 0 { c.src(w) } else { c.tgt(w) };
            to_i_obj[ja.obj[x]] = ji.obj[x];
        }
        for f in 0..arrow.num_morphisms() {
            let (s, t) = (arrow.src(f), arrow.tgt(f));
            to_c_mor[ja.mor[f]] = if s == t { c.identity(to_c_obj[ja.obj[s]]) } else { w };
            to_i_mor[ja.mor[f]] = ji.mor[iso.hom(s, t)[0]];
        }
    }
    let to_c = Functor::new(&arrows.cat, c, to_c_obj, to_c_mor)?;
    let to_i = Functor::new(&arrows.cat, &isos.cat, to_i_obj, to_i_mor)?;
    let d = CatDiagram::span(arrows.cat, c.clone(), isos.cat, to_c, to_i)?;
    colim_cat(&d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::is_isomorphic;

    fn iso(a: &FinCat, b: &FinCat) -> bool {
        is_isomorphic(a, b, Budget::default()).unwrap().is_some()
    }

    #[test]
    fn marking_isos() {
        assert_eq!(mark_isos(&samples::walking_iso()).marking().len(), 4);
        assert_eq!(mark_isos(&samples::arrow()).marking().len(), 2);
        assert_eq!(mark_isos(&samples::discrete(&["a", "b"])).marking().len(), 2);
    }

    #[test]
    fn arrow_localizes_to_iso() {
        let loc = localize_total(&samples::arrow()).unwrap();
        let q = loc.materialize(WordBudget::default()).unwrap();
        assert_eq!(q.cat.num_morphisms(), 4);
        assert!(iso(&q.cat, &samples::walking_iso()));
        assert!(is_groupoid(&q.cat));
        let g = loc.gamma_functor(&q).unwrap();
        assert_eq!(g.obj, vec![0, 1]);
    }

    #[test]
    fn ordinal_two_localizes_to_indiscrete() {
        let q = localize_total(&samples::ordinal(2)).unwrap().materialize(WordBudget::default()).unwrap();
        assert!(iso(&q.cat, &samples::indiscrete(&["a", "b", "c"])));
    }

    #[test]
    fn trivial_markings() {
        for c in [samples::parallel_pair(), samples::idempotent()] {
            let loc = localize_rel(&MarkedCat::new(c.clone(), &[]).unwrap()).unwrap();
            assert!(iso(&loc.materialize(WordBudget::default()).unwrap().cat, &c));
        }
        let i = samples::indiscrete(&["a", "b", "c"]);
        let q = localize_total(&i).unwrap().materialize(WordBudget::default()).unwrap();
        assert!(iso(&q.cat, &i));
    }

    #[test]
    fn zigzags() {
        let c = samples::ordinal(2);
        let first = c.non_identities().next().unwrap();
        let loc = localize_rel(&MarkedCat::new(c.clone(), &[first]).unwrap()).unwrap();
        let q = loc.pres.quiver();
        let w = loc.inverted[0];
        let inv = loc.inverse_edge[0];
        let z = zigzag_of(&loc, &Path::edge(q, w)).unwrap();
        assert_eq!(z.steps, vec![ZigStep::Forward(w)]);
        let z = zigzag_of(&loc, &Path::from_edges(q, c.tgt(w), vec![inv, w]).unwrap()).unwrap();
        assert!(z.steps.is_empty());
        assert_eq!(z.src, c.tgt(w));
        let quotient = loc.materialize(WordBudget::default()).unwrap();
        for k in 0..loc.inverted.len() {
            let e = loc.inverse_edge[k];
            let word = Path::edge(q, e);
            let z = zigzag_of(&loc, &word).unwrap();
            assert_eq!(z.steps, vec![ZigStep::Backward(loc.inverted[k])]);
            assert_eq!(quotient.morphism_of(&z.to_path(&loc)), quotient.morphism_of(&word));
        }
    }

    #[test]
    fn marking_functors() {
        let a = samples::arrow();
        let f = a.non_identities().next().unwrap();
        let all = MarkedCat::new(a.clone(), &[f]).unwrap();
        let none = MarkedCat::new(a.clone(), &[]).unwrap();
        let id = Functor::identity(&a);
        assert!(check_marking_functor(&id, &all, &all));
        assert!(!check_marking_functor(&id, &all, &none));
        assert!(check_marking_functor(&id, &none, &mark_all(&a)));
    }

    #[test]
    fn universal_property_of_arrow() {
        let loc = localize_total(&samples::arrow()).unwrap();
        let q = loc.materialize(WordBudget::default()).unwrap();
        for probe in [samples::walking_iso(), samples::arrow(), samples::cyclic(2)] {
            let r = check_localization(&loc, &q, &probe, Budget::default()).unwrap();
            assert!(r.bijective, "{r:?}");
        }
    }

    #[test]
    fn pushout_agrees() {
        let m = mark_all(&samples::ordinal(2));
        let p = pushout_localization(&m).unwrap();
        let a = p.materialize(WordBudget::default()).unwrap().finite().unwrap();
        let b = localize_rel(&m).unwrap().materialize(WordBudget::default()).unwrap();
        assert!(iso(&a.cat, &b.cat));
    }
}
