//! Categories of elements, and weighted (co)limits of set- and
//! category-valued functors computed as ordinary (co)limits over them.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::fincat::{Budget, FinCat, Functor, Morphism};
use crate::realize::{colim_cat, CatColimit, CatDiagram};
use crate::samples;
use crate::sset::{SimplexCategory, SMap, TruncSSet};
use crate::unionfind::UnionFind;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variance {
    Covariant,
    Contravariant,
}

/// A functor `C -> Set` or `C^op -> Set` with finite values.
///
/// For `f : a -> b`, `maps[f]` is `F(a) -> F(b)` when covariant and
/// `F(b) -> F(a)` when contravariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetValuedFunctor {
    pub variance: Variance,
    pub sets: Vec<Vec<String>>,
    pub maps: Vec<Vec<usize>>,
}

impl SetValuedFunctor {
    pub fn new(base: &FinCat, variance: Variance, sets: Vec<Vec<String>>, maps: Vec<Vec<usize>>) -> Result<Self> {
        let w = SetValuedFunctor { variance, sets, maps };
        w.validate(base)?;
        Ok(w)
    }

    fn ends(&self, base: &FinCat, f: usize) -> (usize, usize) {
        let m = base.morphism(f);
        match self.variance {
            Variance::Covariant => (m.src, m.tgt),
            Variance::Contravariant => (m.tgt, m.src),
        }
    }

    pub fn validate(&self, base: &FinCat) -> Result<()> {
        let bad = |detail: String| Error::NotAFunctor { detail };
        if self.sets.len() != base.num_objects() || self.maps.len() != base.num_morphisms() {
            return Err(bad("one set per object and one map per morphism are required".into()));
        }
        for f in 0..base.num_morphisms() {
            let (from, to) = self.ends(base, f);
            if self.maps[f].len() != self.sets[from].len() || self.maps[f].iter().any(|&y| y >= self.sets[to].len()) {
                return Err(bad(format!("value of {} has the wrong domain or codomain", base.morphism_name(f))));
            }
            if base.is_identity(f) && self.maps[f].iter().enumerate().any(|(x, &y)| x != y) {
                return Err(bad(format!("identity {} is not sent to an identity", base.morphism_name(f))));
            }
        }
        for f in 0..base.num_morphisms() {
            for g in (0..base.num_morphisms()).filter(|&g| base.src(g) == base.tgt(f)) {
                let gf = base.compose(g, f).unwrap();
                let ok = (0..self.maps[match self.variance {
                    Variance::Covariant => f,
                    Variance::Contravariant => g,
                }]
                .len())
                    .all(|x| match self.variance {
                        Variance::Covariant => self.maps[g][self.maps[f][x]] == self.maps[gf][x],
                        Variance::Contravariant => self.maps[f][self.maps[g][x]] == self.maps[gf][x],
                    });
                if !ok {
                    return Err(bad(format!(
                        "composite {} . {} is not preserved",
                        base.morphism_name(g),
                        base.morphism_name(f)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn size(&self, c: usize) -> usize {
        self.sets[c].len()
    }

    /// The terminal functor: a single element everywhere.
    pub fn singleton(base: &FinCat, variance: Variance) -> Self {
        SetValuedFunctor {
            variance,
            sets: vec![vec!["*".to_string()]; base.num_objects()],
            maps: vec![vec![0]; base.num_morphisms()],
        }
    }

    /// `C(-, c)`, contravariant, with `h ↦ h . f`.
    pub fn hom_into(base: &FinCat, c: usize) -> Self {
        let sets: Vec<Vec<String>> =
            (0..base.num_objects()).map(|a| base.hom(a, c).iter().map(|&h| base.morphism_name(h).to_string()).collect()).collect();
        let maps = (0..base.num_morphisms())
            .map(|f| {
                let (a, b) = (base.src(f), base.tgt(f));
                base.hom(b, c)
                    .iter()
                    .map(|&h| {
                        let hf = base.compose(h, f).unwrap();
                        base.hom(a, c).iter().position(|&k| k == hf).unwrap()
                    })
                    .collect()
            })
            .collect();
        SetValuedFunctor {
            variance: Variance::Contravariant,
            sets,
            maps,
        }
    }

    /// `C(c, -)`, covariant, with `h ↦ f . h`.
    pub fn hom_from(base: &FinCat, c: usize) -> Self {
        let sets: Vec<Vec<String>> =
            (0..base.num_objects()).map(|a| base.hom(c, a).iter().map(|&h| base.morphism_name(h).to_string()).collect()).collect();
        let maps = (0..base.num_morphisms())
            .map(|f| {
                let (a, b) = (base.src(f), base.tgt(f));
                base.hom(c, a)
                    .iter()
                    .map(|&h| {
                        let fh = base.compose(f, h).unwrap();
                        base.hom(c, b).iter().position(|&k| k == fh).unwrap()
                    })
                    .collect()
            })
            .collect();
        SetValuedFunctor {
            variance: Variance::Covariant,
            sets,
            maps,
        }
    }

    /// A truncated simplicial set as a presheaf on the truncated simplex
    /// category of the same dimension.
    pub fn of_sset(x: &TruncSSet, delta: &SimplexCategory) -> Result<Self> {
        let base = &delta.cat;
        if base.num_objects() != x.dim() + 1 {
            return Err(Error::DimensionMismatch {
                expected: base.num_objects() - 1,
                found: x.dim(),
            });
        }
        let sets = (0..=x.dim()).map(|n| x.names(n).to_vec()).collect();
        let maps = (0..base.num_morphisms())
            .map(|f| {
                let b = base.tgt(f);
                (0..x.size(b)).map(|s| x.act(b, s, &delta.maps[f])).collect()
            })
            .collect();
        SetValuedFunctor::new(base, Variance::Contravariant, sets, maps)
    }

    /// Random covariant functor built by precomposing a random functor
    /// `base -> D` with a representable of `D`.
    pub fn random<R: rand::Rng>(rng: &mut R, base: &FinCat, variance: Variance) -> Self {
        use rand::seq::SliceRandom;
        let pool = [samples::ordinal(2), samples::walking_iso(), samples::parallel_pair(), samples::idempotent()];
        loop {
            let target = pool.choose(rng).unwrap();
            let (probe, f) = match variance {
                Variance::Covariant => (target.clone(), samples::random_functor(rng, base, target)),
                Variance::Contravariant => (target.opposite(), samples::random_functor(rng, base, &target.opposite())),
            };
            let Some(f) = f else { continue };
            let c = rng.gen_range(0..probe.num_objects());
            let r = SetValuedFunctor::hom_from(&probe, c);
            let w = SetValuedFunctor {
                variance,
                sets: f.obj.iter().map(|&a| r.sets[a].clone()).collect(),
                maps: f.mor.iter().map(|&m| r.maps[m].clone()).collect(),
            };
            if w.sets.iter().all(|s| !s.is_empty()) {
                debug_assert!(w.validate(base).is_ok());
                return w;
            }
        }
    }
}

/// A natural transformation between set-valued functors of equal variance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatTrans {
    pub components: Vec<Vec<usize>>,
}

impl NatTrans {
    pub fn new(base: &FinCat, w1: &SetValuedFunctor, w2: &SetValuedFunctor, components: Vec<Vec<usize>>) -> Result<Self> {
        if w1.variance != w2.variance {
            return Err(Error::InvalidArgument("transformation between functors of different variance".into()));
        }
        for c in 0..base.num_objects() {
            if components[c].len() != w1.size(c) || components[c].iter().any(|&y| y >= w2.size(c)) {
                return Err(Error::NotAFunctor {
                    detail: format!("component at {} has the wrong type", base.object_name(c)),
                });
            }
        }
        for f in 0..base.num_morphisms() {
            let (from, to) = w1.ends(base, f);
            for x in 0..w1.size(from) {
                if components[to][w1.maps[f][x]] != w2.maps[f][components[from][x]] {
                    return Err(Error::NotNatural {
                        morphism: base.morphism_name(f).to_string(),
                        element: x,
                    });
                }
            }
        }
        Ok(NatTrans { components })
    }

    pub fn identity(w: &SetValuedFunctor) -> Self {
        NatTrans {
            components: w.sets.iter().map(|s| (0..s.len()).collect()).collect(),
        }
    }

    /// The transformation of presheaves given by a simplicial map.
    pub fn of_smap(f: &SMap) -> Self {
        NatTrans {
            components: f.levels().to_vec(),
        }
    }
}

/// `el W` with its projection to the base.
#[derive(Clone, Debug)]
pub struct ElementsCat {
    pub cat: FinCat,
    pub projection: Functor,
    /// `elements[e] = (c, x)` with `x ∈ W(c)`.
    pub elements: Vec<(usize, usize)>,
}

impl ElementsCat {
    pub fn index_of(&self, c: usize, x: usize) -> Option<usize> {
        self.elements.iter().position(|&e| e == (c, x))
    }
}

/// The category of elements. Covariant: `(c, x) -> (d, W(f) x)` for
/// `f : c -> d`. Contravariant: `(c, W(f) y) -> (d, y)` for `f : c -> d`.
pub fn elements(base: &FinCat, w: &SetValuedFunctor) -> Result<ElementsCat> {
    w.validate(base)?;
    let mut elements = Vec::new();
    let mut first = Vec::with_capacity(base.num_objects());
    for c in 0..base.num_objects() {
        first.push(elements.len());
        for x in 0..w.size(c) {
            elements.push((c, x));
        }
    }
    let objects = elements
        .iter()
        .map(|&(c, x)| format!("({},{})", base.object_name(c), w.sets[c][x]))
        .collect();
    let mut morphisms = Vec::new();
    let mut over = Vec::new();
    let mut lookup: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut identities = vec![0; elements.len()];
    for f in 0..base.num_morphisms() {
        let (c, d) = (base.src(f), base.tgt(f));
        let count = match w.variance {
            Variance::Covariant => w.size(c),
            Variance::Contravariant => w.size(d),
        };
        for x in 0..count {
            let (src, tgt) = match w.variance {
                Variance::Covariant => (first[c] + x, first[d] + w.maps[f][x]),
                Variance::Contravariant => (first[c] + w.maps[f][x], first[d] + x),
            };
            let id = morphisms.len();
            if base.is_identity(f) {
                identities[src] = id;
            }
            let anchor = match w.variance {
                Variance::Covariant => src,
                Variance::Contravariant => tgt,
            };
            lookup.insert((f, anchor), id);
            let (ac, ax) = elements[anchor];
            morphisms.push(Morphism::new(format!("{}@{}", base.morphism_name(f), w.sets[ac][ax]), src, tgt));
            over.push(f);
        }
    }
    let variance = w.variance;
    let cat = FinCat::new(objects, morphisms.clone(), identities, |g, f| {
        let gf = base.compose(over[g], over[f])?;
        let anchor = match variance {
            Variance::Covariant => morphisms[f].src,
            Variance::Contravariant => morphisms[g].tgt,
        };
        lookup.get(&(gf, anchor)).copied()
    })?;
    let projection = Functor::new(&cat, base, elements.iter().map(|&(c, _)| c).collect(), over)?;
    Ok(ElementsCat {
        cat,
        projection,
        elements,
    })
}

/// `el α : el W₁ -> el W₂`, `(c, x) ↦ (c, α_c x)`.
pub fn elements_map(base: &FinCat, alpha: &NatTrans, el1: &ElementsCat, el2: &ElementsCat) -> Result<Functor> {
    let obj: Vec<usize> = el1
        .elements
        .iter()
        .map(|&(c, x)| el2.index_of(c, alpha.components[c][x]).expect("components land in W2"))
        .collect();
    let mor = (0..el1.cat.num_morphisms())
        .map(|u| {
            let f = el1.projection.mor[u];
            let (s, t) = (obj[el1.cat.src(u)], obj[el1.cat.tgt(u)]);
            el2.cat
                .hom(s, t)
                .iter()
                .copied()
                .find(|&v| el2.projection.mor[v] == f)
                .ok_or_else(|| Error::NotAFunctor {
                    detail: format!("no morphism over {} in the target", base.morphism_name(f)),
                })
        })
        .collect::<Result<Vec<_>>>()?;
    Functor::new(&el1.cat, &el2.cat, obj, mor)
}

/// A finite set with a universal (co)cone. `legs[e]` is the leg at element
/// `e` of `el W`: `F(c) -> colim` for colimits, `lim -> F(c)` for limits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetCone {
    pub names: Vec<String>,
    pub legs: Vec<Vec<usize>>,
}

impl SetCone {
    pub fn size(&self) -> usize {
        self.names.len()
    }
}

fn require(f: &SetValuedFunctor, v: Variance, what: &str) -> Result<()> {
    if f.variance != v {
        return Err(Error::InvalidArgument(format!("{what} has the wrong variance")));
    }
    Ok(())
}

/// `W ⋆ F = colim_{el W} F π` for `W : C^op -> Set`, `F : C -> Set`.
pub fn weighted_colim_set(base: &FinCat, w: &SetValuedFunctor, f: &SetValuedFunctor) -> Result<SetCone> {
    require(w, Variance::Contravariant, "weight")?;
    require(f, Variance::Covariant, "functor")?;
    f.validate(base)?;
    let el = elements(base, w)?;
    let mut offset = Vec::with_capacity(el.elements.len());
    let mut total = 0;
    for &(c, _) in &el.elements {
        offset.push(total);
        total += f.size(c);
    }
    let mut uf = UnionFind::new(total);
    for u in 0..el.cat.num_morphisms() {
        let (a, b) = (el.cat.src(u), el.cat.tgt(u));
        let g = el.projection.mor[u];
        for y in 0..f.size(el.elements[a].0) {
            uf.union(offset[a] + y, offset[b] + f.maps[g][y]);
        }
    }
    let (class_of, count) = uf.classes();
    let mut names = vec![String::new(); count];
    let mut named = vec![false; count];
    for (e, &(c, x)) in el.elements.iter().enumerate() {
        for y in 0..f.size(c) {
            let k = class_of[offset[e] + y];
            if !named[k] {
                named[k] = true;
                names[k] = format!("{}@{}", f.sets[c][y], w.sets[c][x]);
            }
        }
    }
    let legs = el
        .elements
        .iter()
        .enumerate()
        .map(|(e, &(c, _))| (0..f.size(c)).map(|y| class_of[offset[e] + y]).collect())
        .collect();
    Ok(SetCone { names, legs })
}

/// `{W, F} = lim_{el W} F π` for covariant `W` and `F`.
pub fn weighted_lim_set(base: &FinCat, w: &SetValuedFunctor, f: &SetValuedFunctor, budget: Budget) -> Result<SetCone> {
    require(w, Variance::Covariant, "weight")?;
    require(f, Variance::Covariant, "functor")?;
    f.validate(base)?;
    let el = elements(base, w)?;
    let n = el.elements.len();
    let mut constraints = vec![Vec::new(); n];
    for u in 0..el.cat.num_morphisms() {
        let (a, b) = (el.cat.src(u), el.cat.tgt(u));
        if !el.cat.is_identity(u) {
            constraints[a.max(b)].push(u);
        }
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut cur = Vec::new();
    fn go(
        el: &ElementsCat,
        f: &SetValuedFunctor,
        constraints: &[Vec<usize>],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        budget: Budget,
    ) -> Result<()> {
        let e = cur.len();
        if e == el.elements.len() {
            if out.len() >= budget.max_items {
                return Err(Error::BudgetExceeded {
                    what: "weighted limit families",
                    limit: budget.max_items as u64,
                });
            }
            out.push(cur.clone());
            return Ok(());
        }
        'y: for y in 0..f.size(el.elements[e].0) {
            cur.push(y);
            for &u in &constraints[e] {
                let (a, b) = (el.cat.src(u), el.cat.tgt(u));
                if f.maps[el.projection.mor[u]][cur[a]] != cur[b] {
                    cur.pop();
                    continue 'y;
                }
            }
            go(el, f, constraints, cur, out, budget)?;
            cur.pop();
        }
        Ok(())
    }
    go(&el, f, &constraints, &mut cur, &mut out, budget)?;
    let names = out
        .iter()
        .map(|fam| {
            let parts: Vec<&str> = fam.iter().enumerate().map(|(e, &y)| f.sets[el.elements[e].0][y].as_str()).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let legs = (0..n).map(|e| out.iter().map(|fam| fam[e]).collect()).collect();
    Ok(SetCone { names, legs })
}

/// `W ⋆ F` for a diagram of categories `F` over `base`: the colimit of
/// `F π` over `el W`.
pub fn weighted_colim_cat(w: &SetValuedFunctor, diagram: &CatDiagram) -> Result<CatColimit> {
    require(w, Variance::Contravariant, "weight")?;
    let base = &diagram.index;
    let el = elements(base, w)?;
    let values = el.elements.iter().map(|&(c, _)| diagram.values[c].clone()).collect();
    let maps = el.projection.mor.iter().map(|&f| diagram.maps[f].clone()).collect();
    let d = CatDiagram::new(el.cat.clone(), values, maps)?;
    colim_cat(&d)
}

/// The inclusion `[n] ↦ [n]` of the truncated simplex category into `Cat`.
pub fn ordinal_diagram(delta: &SimplexCategory) -> Result<CatDiagram> {
    let base = &delta.cat;
    let values: Vec<FinCat> = (0..base.num_objects()).map(samples::ordinal).collect();
    let maps = (0..base.num_morphisms())
        .map(|f| {
            let (a, b) = (base.src(f), base.tgt(f));
            let seq = &delta.maps[f];
            let (ca, cb) = (&values[a], &values[b]);
            let mor = (0..ca.num_morphisms())
                .map(|m| {
                    let (i, j) = (seq[ca.src(m)], seq[ca.tgt(m)]);
                    cb.hom(i, j)[0]
                })
                .collect();
            Functor::new(ca, cb, seq.clone(), mor)
        })
        .collect::<Result<Vec<_>>>()?;
    CatDiagram::new(base.clone(), values, maps)
}
