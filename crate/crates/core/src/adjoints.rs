//! Adjunctions between finite sets, reflexive quivers and finite categories,
//! with a generic checker for the hom-set bijection and triangle identities.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::fincat::{enumerate_functors, Budget, FinCat, Functor};
use crate::nerve::nerve;
use crate::presentation::{Path, PresCat, PresMap, Quiver};
use crate::samples;
use crate::sset::{pi0_sset, Pi0};
use crate::words::{induced_functor, materialize, Quotient, WordBudget};
use crate::{Error, Result};

/// A category whose hom-sets between the objects we care about are finite
/// and enumerable.
pub trait Universe {
    type Obj: Clone;
    type Mor: Clone + PartialEq;

    fn hom(&self, a: &Self::Obj, b: &Self::Obj, budget: Budget) -> Result<Vec<Self::Mor>>;
    /// `g . f`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor;
    fn identity(&self, a: &Self::Obj) -> Self::Mor;
}

/// Finite sets, given by their element names.
pub struct Sets;

/// Finite categories and functors.
pub struct Cats;

/// Reflexive quivers and maps preserving the distinguished loops.
pub struct ReflexiveQuivers;

/// A map of quivers: vertices and edges, compatible with endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverMap {
    pub obj: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Universe for Sets {
    type Obj = Vec<String>;
    type Mor = Vec<usize>;

    fn hom(&self, a: &Vec<String>, b: &Vec<String>, budget: Budget) -> Result<Vec<Vec<usize>>> {
        let total = (b.len() as u64).checked_pow(a.len() as u32).unwrap_or(u64::MAX);
        if total > budget.max_items as u64 {
            return Err(Error::BudgetExceeded {
                what: "functions",
                limit: budget.max_items as u64,
            });
        }
        let mut out = vec![Vec::new()];
        for _ in 0..a.len() {
            out = out
                .into_iter()
                .flat_map(|f: Vec<usize>| {
                    (0..b.len()).map(move |y| {
                        let mut g = f.clone();
                        g.push(y);
                        g
                    })
                })
                .collect();
        }
        Ok(out)
    }

    fn compose(&self, g: &Vec<usize>, f: &Vec<usize>) -> Vec<usize> {
        f.iter().map(|&x| g[x]).collect()
    }

    fn identity(&self, a: &Vec<String>) -> Vec<usize> {
        (0..a.len()).collect()
    }
}

impl Universe for Cats {
    type Obj = FinCat;
    type Mor = Functor;

    fn hom(&self, a: &FinCat, b: &FinCat, budget: Budget) -> Result<Vec<Functor>> {
        enumerate_functors(a, b, budget)
    }

    fn compose(&self, g: &Functor, f: &Functor) -> Functor {
        f.then(g)
    }

    fn identity(&self, a: &FinCat) -> Functor {
        Functor::identity(a)
    }
}

impl Universe for ReflexiveQuivers {
    type Obj = Quiver;
    type Mor = QuiverMap;

    fn hom(&self, a: &Quiver, b: &Quiver, budget: Budget) -> Result<Vec<QuiverMap>> {
        quiver_maps(a, b, budget)
    }

    fn compose(&self, g: &QuiverMap, f: &QuiverMap) -> QuiverMap {
        QuiverMap {
            obj: f.obj.iter().map(|&v| g.obj[v]).collect(),
            edges: f.edges.iter().map(|&e| g.edges[e]).collect(),
        }
    }

    fn identity(&self, a: &Quiver) -> QuiverMap {
        QuiverMap {
            obj: (0..a.num_vertices()).collect(),
            edges: (0..a.num_edges()).collect(),
        }
    }
}

/// All maps of reflexive quivers `a -> b`.
pub fn quiver_maps(a: &Quiver, b: &Quiver, budget: Budget) -> Result<Vec<QuiverMap>> {
    let (Some(la), Some(lb)) = (a.loops(), b.loops()) else {
        return Err(Error::InvalidArgument("reflexive quivers expected".into()));
    };
    let mut out = Vec::new();
    let mut obj = Vec::with_capacity(a.num_vertices());
    fn edges_for(
        a: &Quiver,
        b: &Quiver,
        la: &[usize],
        lb: &[usize],
        obj: &[usize],
        edges: &mut Vec<usize>,
        out: &mut Vec<QuiverMap>,
        budget: Budget,
    ) -> Result<()> {
        let e = edges.len();
        if e == a.num_edges() {
            if out.len() >= budget.max_items {
                return Err(Error::BudgetExceeded {
                    what: "quiver maps",
                    limit: budget.max_items as u64,
                });
            }
            out.push(QuiverMap {
                obj: obj.to_vec(),
                edges: edges.clone(),
            });
            return Ok(());
        }
        let edge = &a.edges()[e];
        let (s, t) = (obj[edge.src], obj[edge.tgt]);
        if a.is_degenerate(e) {
            debug_assert_eq!(la[edge.src], e);
            edges.push(lb[s]);
            edges_for(a, b, la, lb, obj, edges, out, budget)?;
            edges.pop();
            return Ok(());
        }
        for (k, candidate) in b.edges().iter().enumerate() {
            if candidate.src == s && candidate.tgt == t {
                edges.push(k);
                edges_for(a, b, la, lb, obj, edges, out, budget)?;
                edges.pop();
            }
        }
        Ok(())
    }
    fn vertices(
        a: &Quiver,
        b: &Quiver,
        la: &[usize],
        lb: &[usize],
        obj: &mut Vec<usize>,
        out: &mut Vec<QuiverMap>,
        budget: Budget,
    ) -> Result<()> {
        if obj.len() == a.num_vertices() {
            return edges_for(a, b, la, lb, obj, &mut Vec::new(), out, budget);
        }
        for v in 0..b.num_vertices() {
            obj.push(v);
            vertices(a, b, la, lb, obj, out, budget)?;
            obj.pop();
        }
        Ok(())
    }
    vertices(a, b, la, lb, &mut obj, &mut out, budget)?;
    Ok(out)
}

/// The discrete category on a set.
pub fn discrete_cat(set: &[String]) -> FinCat {
    samples::preorder(set, |a, b| a == b)
}

/// The indiscrete category on a set.
pub fn indiscrete_cat(set: &[String]) -> FinCat {
    samples::preorder(set, |_, _| true)
}

pub fn obj_set(c: &FinCat) -> Vec<String> {
    c.objects().to_vec()
}

/// Connected components, read off the 1-truncated nerve.
pub fn pi0_cat(c: &FinCat) -> Pi0 {
    pi0_sset(&nerve(c, 1).sset)
}

/// Components named by their least object.
pub fn pi0_set(c: &FinCat) -> Vec<String> {
    let p = pi0_cat(c);
    let mut names = vec![String::new(); p.count];
    for (a, &k) in p.class_of.iter().enumerate().rev() {
        names[k] = format!("[{}]", c.object_name(a));
    }
    names
}

/// The free category on a reflexive quiver, which must have no cycles
/// besides the distinguished loops.
pub fn free_on_reflexive_quiver(q: &Quiver, budget: WordBudget) -> Result<Quotient> {
    if !q.is_reflexive() {
        return Err(Error::InvalidArgument("reflexive quiver expected".into()));
    }
    materialize(&PresCat::free(q.clone()), budget)?.finite()
}

pub fn underlying_reflexive_quiver(c: &FinCat) -> Quiver {
    Quiver::underlying(c)
}

/// A left adjoint `L : A -> B` with right adjoint `R` and unit
/// `η_a : a -> R L a`. The counit is recovered from the hom-set bijection.
pub trait AdjunctionSpec {
    type A: Universe;
    type B: Universe;

    fn source(&self) -> &Self::A;
    fn target(&self) -> &Self::B;
    fn left_obj(&self, a: &<Self::A as Universe>::Obj) -> Result<<Self::B as Universe>::Obj>;
    fn left_mor(
        &self,
        a1: &<Self::A as Universe>::Obj,
        a2: &<Self::A as Universe>::Obj,
        f: &<Self::A as Universe>::Mor,
    ) -> Result<<Self::B as Universe>::Mor>;
    fn right_obj(&self, b: &<Self::B as Universe>::Obj) -> Result<<Self::A as Universe>::Obj>;
    fn right_mor(
        &self,
        b1: &<Self::B as Universe>::Obj,
        b2: &<Self::B as Universe>::Obj,
        g: &<Self::B as Universe>::Mor,
    ) -> Result<<Self::A as Universe>::Mor>;
    fn unit(&self, a: &<Self::A as Universe>::Obj) -> Result<<Self::A as Universe>::Mor>;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjunctionReport {
    /// `(|B(La, b)|, |A(a, Rb)|)` for every tested pair.
    pub hom_counts: Vec<(usize, usize)>,
    /// `g ↦ R g . η_a` is a bijection for every pair.
    pub bijective: bool,
    /// `ε_{La} . L η_a = 1`.
    pub left_triangle: bool,
    /// `R ε_b . η_{Rb} = 1`.
    pub right_triangle: bool,
    /// `R L f . η_a = η_{a'} . f` for maps between tested objects.
    pub unit_natural: bool,
}

impl AdjunctionReport {
    pub fn holds(&self) -> bool {
        self.bijective
            && self.left_triangle
            && self.right_triangle
            && self.unit_natural
            && self.hom_counts.iter().all(|(l, r)| l == r)
    }
}

fn transpose<S: AdjunctionSpec>(
    adj: &S,
    a: &<S::A as Universe>::Obj,
    la: &<S::B as Universe>::Obj,
    b: &<S::B as Universe>::Obj,
    g: &<S::B as Universe>::Mor,
) -> Result<<S::A as Universe>::Mor> {
    let eta = adj.unit(a)?;
    Ok(adj.source().compose(&adj.right_mor(la, b, g)?, &eta))
}

/// The counit at `b`: the unique `ε : L R b -> b` transposing to `1_{Rb}`.
pub fn counit<S: AdjunctionSpec>(adj: &S, b: &<S::B as Universe>::Obj, budget: Budget) -> Result<<S::B as Universe>::Mor> {
    let rb = adj.right_obj(b)?;
    let lrb = adj.left_obj(&rb)?;
    let id = adj.source().identity(&rb);
    let mut found = None;
    for g in adj.target().hom(&lrb, b, budget)? {
        if transpose(adj, &rb, &lrb, b, &g)? == id {
            if found.is_some() {
                return Err(Error::InvariantViolation {
                    detail: "identity has two transposes".into(),
                });
            }
            found = Some(g);
        }
    }
    found.ok_or_else(|| Error::InvariantViolation {
        detail: "identity has no transpose".into(),
    })
}

/// Checks the adjunction on all pairs drawn from the given objects.
pub fn verify_adjunction<S: AdjunctionSpec>(
    adj: &S,
    lefts: &[<S::A as Universe>::Obj],
    rights: &[<S::B as Universe>::Obj],
    budget: Budget,
) -> Result<AdjunctionReport> {
    let (ua, ub) = (adj.source(), adj.target());
    let mut report = AdjunctionReport {
        hom_counts: Vec::new(),
        bijective: true,
        left_triangle: true,
        right_triangle: true,
        unit_natural: true,
    };
    let ls = lefts.iter().map(|a| adj.left_obj(a)).collect::<Result<Vec<_>>>()?;
    for (a, la) in lefts.iter().zip(&ls) {
        for b in rights {
            let rb = adj.right_obj(b)?;
            let left = ub.hom(la, b, budget)?;
            let right = ua.hom(a, &rb, budget)?;
            report.hom_counts.push((left.len(), right.len()));
            let mut images: Vec<<S::A as Universe>::Mor> = Vec::new();
            for g in &left {
                let t = transpose(adj, a, la, b, g)?;
                if images.contains(&t) {
                    report.bijective = false;
                }
                images.push(t);
            }
            if right.iter().any(|f| !images.contains(f)) {
                report.bijective = false;
            }
        }
    }
    for (a, la) in lefts.iter().zip(&ls) {
        let eps = counit(adj, la, budget)?;
        let rla = adj.right_obj(la)?;
        let l_eta = adj.left_mor(a, &rla, &adj.unit(a)?)?;
        if ub.compose(&eps, &l_eta) != ub.identity(la) {
            report.left_triangle = false;
        }
    }
    for b in rights {
        let eps = counit(adj, b, budget)?;
        let rb = adj.right_obj(b)?;
        let lrb = adj.left_obj(&rb)?;
        let r_eps = adj.right_mor(&lrb, b, &eps)?;
        if ua.compose(&r_eps, &adj.unit(&rb)?) != ua.identity(&rb) {
            report.right_triangle = false;
        }
    }
    for (a1, la1) in lefts.iter().zip(&ls) {
        for (a2, la2) in lefts.iter().zip(&ls) {
            let (eta1, eta2) = (adj.unit(a1)?, adj.unit(a2)?);
            for f in ua.hom(a1, a2, budget)? {
                let rlf = adj.right_mor(la1, la2, &adj.left_mor(a1, a2, &f)?)?;
                if ua.compose(&rlf, &eta1) != ua.compose(&eta2, &f) {
                    report.unit_natural = false;
                }
            }
        }
    }
    Ok(report)
}

/// `π₀ ⊣ D : Set -> Cat`.
pub struct Pi0Discrete;

/// `D ⊣ obj`.
pub struct DiscreteObj;

/// `obj ⊣ I`, with `I` the indiscrete category.
pub struct ObjIndiscrete;

/// Free category on a reflexive quiver, left adjoint to the underlying
/// reflexive quiver.
pub struct FreeUnderlying {
    pub budget: WordBudget,
}

fn discrete_functor(a: &[String], b: &[String], f: &[usize]) -> Result<Functor> {
    let (ca, cb) = (discrete_cat(a), discrete_cat(b));
    let mor = (0..ca.num_morphisms()).map(|m| cb.identity(f[ca.src(m)])).collect();
    Functor::new(&ca, &cb, f.to_vec(), mor)
}

impl AdjunctionSpec for Pi0Discrete {
    type A = Cats;
    type B = Sets;

    fn source(&self) -> &Cats {
        &Cats
    }
    fn target(&self) -> &Sets {
        &Sets
    }
    fn left_obj(&self, c: &FinCat) -> Result<Vec<String>> {
        Ok(pi0_set(c))
    }
    fn left_mor(&self, c: &FinCat, d: &FinCat, f: &Functor) -> Result<Vec<usize>> {
        let (pc, pd) = (pi0_cat(c), pi0_cat(d));
        let mut out = vec![usize::MAX; pc.count];
        for a in 0..c.num_objects() {
            out[pc.class_of[a]] = pd.class_of[f.obj[a]];
        }
        Ok(out)
    }
    fn right_obj(&self, s: &Vec<String>) -> Result<FinCat> {
        Ok(discrete_cat(s))
    }
    fn right_mor(&self, s: &Vec<String>, t: &Vec<String>, f: &Vec<usize>) -> Result<Functor> {
        discrete_functor(s, t, f)
    }
    fn unit(&self, c: &FinCat) -> Result<Functor> {
        let p = pi0_cat(c);
        let d = discrete_cat(&pi0_set(c));
        let mor = (0..c.num_morphisms()).map(|m| d.identity(p.class_of[c.src(m)])).collect();
        Functor::new(c, &d, p.class_of.clone(), mor)
    }
}

impl AdjunctionSpec for DiscreteObj {
    type A = Sets;
    type B = Cats;

    fn source(&self) -> &Sets {
        &Sets
    }
    fn target(&self) -> &Cats {
        &Cats
    }
    fn left_obj(&self, s: &Vec<String>) -> Result<FinCat> {
        Ok(discrete_cat(s))
    }
    fn left_mor(&self, s: &Vec<String>, t: &Vec<String>, f: &Vec<usize>) -> Result<Functor> {
        discrete_functor(s, t, f)
    }
    fn right_obj(&self, c: &FinCat) -> Result<Vec<String>> {
        Ok(obj_set(c))
    }
    fn right_mor(&self, _: &FinCat, _: &FinCat, f: &Functor) -> Result<Vec<usize>> {
        Ok(f.obj.clone())
    }
    fn unit(&self, s: &Vec<String>) -> Result<Vec<usize>> {
        Ok((0..s.len()).collect())
    }
}

impl AdjunctionSpec for ObjIndiscrete {
    type A = Cats;
    type B = Sets;

    fn source(&self) -> &Cats {
        &Cats
    }
    fn target(&self) -> &Sets {
        &Sets
    }
    fn left_obj(&self, c: &FinCat) -> Result<Vec<String>> {
        Ok(obj_set(c))
    }
    fn left_mor(&self, _: &FinCat, _: &FinCat, f: &Functor) -> Result<Vec<usize>> {
        Ok(f.obj.clone())
    }
    fn right_obj(&self, s: &Vec<String>) -> Result<FinCat> {
        Ok(indiscrete_cat(s))
    }
    fn right_mor(&self, s: &Vec<String>, t: &Vec<String>, f: &Vec<usize>) -> Result<Functor> {
        let (cs, ct) = (indiscrete_cat(s), indiscrete_cat(t));
        let mor = (0..cs.num_morphisms()).map(|m| ct.hom(f[cs.src(m)], f[cs.tgt(m)])[0]).collect();
        Functor::new(&cs, &ct, f.clone(), mor)
    }
    fn unit(&self, c: &FinCat) -> Result<Functor> {
        let i = indiscrete_cat(&obj_set(c));
        let mor = (0..c.num_morphisms()).map(|m| i.hom(c.src(m), c.tgt(m))[0]).collect();
        Functor::new(c, &i, (0..c.num_objects()).collect(), mor)
    }
}

impl AdjunctionSpec for FreeUnderlying {
    type A = ReflexiveQuivers;
    type B = Cats;

    fn source(&self) -> &ReflexiveQuivers {
        &ReflexiveQuivers
    }
    fn target(&self) -> &Cats {
        &Cats
    }
    fn left_obj(&self, q: &Quiver) -> Result<FinCat> {
        Ok(free_on_reflexive_quiver(q, self.budget)?.cat)
    }
    fn left_mor(&self, q: &Quiver, r: &Quiver, f: &QuiverMap) -> Result<Functor> {
        let (fq, fr) = (free_on_reflexive_quiver(q, self.budget)?, free_on_reflexive_quiver(r, self.budget)?);
        let map = PresMap {
            obj: f.obj.clone(),
            edges: f.edges.iter().map(|&e| Path::edge(r, e).normalized(r)).collect(),
        };
        induced_functor(&map, &fq, &fr)
    }
    fn right_obj(&self, c: &FinCat) -> Result<Quiver> {
        Ok(underlying_reflexive_quiver(c))
    }
    fn right_mor(&self, _: &FinCat, _: &FinCat, f: &Functor) -> Result<QuiverMap> {
        Ok(QuiverMap {
            obj: f.obj.clone(),
            edges: f.mor.clone(),
        })
    }
    fn unit(&self, q: &Quiver) -> Result<QuiverMap> {
        let fq = free_on_reflexive_quiver(q, self.budget)?;
        Ok(QuiverMap {
            obj: (0..q.num_vertices()).collect(),
            edges: (0..q.num_edges()).map(|e| fq.edge_image(e)).collect(),
        })
    }
}

/// Small named sets `{}`, `{0}`, `{0,1}`, ...
pub fn finite_set(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}
