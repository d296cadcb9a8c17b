//! The homotopy category `hX` of a simplicial set, and limits and colimits of
//! finite categories computed through nerves.
//!
//! `hX` only reads the 2-skeleton: vertices are objects, nondegenerate edges
//! are generators, and each nondegenerate 2-simplex `σ` imposes
//! `d_0σ . d_2σ = d_1σ`, with degenerate edges read as identities.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::fincat::{enumerate_functors, Budget, FinCat, Functor};
use crate::nerve::{categorify, nerve, nerve_map, NerveResult};
use crate::presentation::{Edge, Path, PathFunctor, PresCat, PresMap, Quiver};
use crate::sset::{colim_sset, lim_sset, nondegenerate, sk, Included, SMap, SSetDiagram, TruncSSet};
use crate::unionfind::UnionFind;
use crate::words::{induced_functor, materialize, word_equal, Materialization, WordBudget, WordVerdict};
use crate::{Error, Result, DEFAULT_DIM};

/// How a boundary edge of a nondegenerate 2-simplex enters `hX`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeTag {
    /// The `k`-th generator (nondegenerate edge).
    Generator(usize),
    /// A degenerate edge at the given vertex.
    Identity(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub simplex: usize,
    /// Tags of `d_0`, `d_1`, `d_2`.
    pub boundary: [EdgeTag; 3],
}

/// The skeletal filtration `sk_0 X ⊂ sk_1 X ⊂ sk_2 X ⊂ X` and the cells
/// attached at each stage.
#[derive(Clone, Debug)]
pub struct Filtration {
    pub sk0: Included,
    pub sk1: Included,
    pub sk2: Included,
    /// Nondegenerate edges as `(simplex, source, target)`.
    pub edges: Vec<(usize, usize, usize)>,
    pub triangles: Vec<Triangle>,
}

pub fn filtration(x: &TruncSSet) -> Result<Filtration> {
    if x.dim() < 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: x.dim(),
        });
    }
    let edges: Vec<(usize, usize, usize)> =
        nondegenerate(x, 1).into_iter().map(|e| (e, x.face(1, 1, e), x.face(1, 0, e))).collect();
    let tag = |e: usize| match edges.iter().position(|&(s, _, _)| s == e) {
        Some(k) => EdgeTag::Generator(k),
        None => EdgeTag::Identity(x.face(1, 0, e)),
    };
    let triangles = nondegenerate(x, 2)
        .into_iter()
        .map(|s| Triangle {
            simplex: s,
            boundary: [tag(x.face(2, 0, s)), tag(x.face(2, 1, s)), tag(x.face(2, 2, s))],
        })
        .collect();
    Ok(Filtration {
        sk0: sk(x, 0)?,
        sk1: sk(x, 1)?,
        sk2: sk(x, 2)?,
        edges,
        triangles,
    })
}

/// A presentation read off a simplicial set, remembering which generator (or
/// identity) every 1-simplex became.
#[derive(Clone, Debug)]
pub struct HCat {
    pub pres: PresCat,
    /// `generators[k]` is the 1-simplex behind generator `k`.
    pub generators: Vec<usize>,
    /// The path every 1-simplex denotes: one edge, or empty if degenerate.
    pub edge_path: Vec<Path>,
}

impl HCat {
    pub fn materialize(&self, budget: WordBudget) -> Result<Materialization> {
        materialize(&self.pres, budget)
    }
}

fn one_skeleton(x: &TruncSSet) -> Result<(Quiver, Vec<usize>, Vec<Path>)> {
    if x.dim() < 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: 0,
        });
    }
    let generators = nondegenerate(x, 1);
    let quiver = Quiver::new(
        x.names(0).to_vec(),
        generators
            .iter()
            .map(|&e| Edge::new(x.name(1, e), x.face(1, 1, e), x.face(1, 0, e)))
            .collect(),
    )?;
    let mut edge_path: Vec<Path> = (0..x.size(1)).map(|e| Path::empty(x.face(1, 0, e))).collect();
    for (k, &e) in generators.iter().enumerate() {
        edge_path[e] = Path::edge(&quiver, k);
    }
    Ok((quiver, generators, edge_path))
}

/// `FX`: the free category on the nondegenerate edges.
pub fn free_cat_fx(x: &TruncSSet) -> Result<PresCat> {
    Ok(PresCat::free(one_skeleton(x)?.0))
}

/// `hX`: `FX` modulo one relation per nondegenerate 2-simplex.
pub fn hcat(x: &TruncSSet) -> Result<HCat> {
    if x.dim() < 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: x.dim(),
        });
    }
    let (quiver, generators, edge_path) = one_skeleton(x)?;
    let relations = nondegenerate(x, 2)
        .into_iter()
        .map(|s| {
            let lhs = edge_path[x.face(2, 2, s)].then(&edge_path[x.face(2, 0, s)]);
            (lhs, edge_path[x.face(2, 1, s)].clone())
        })
        .collect();
    Ok(HCat {
        pres: PresCat::new(quiver, relations)?,
        generators,
        edge_path,
    })
}

/// The map `hX -> hY` induced by `f : X -> Y`, on generators.
pub fn hcat_map(f: &SMap, hx: &HCat, hy: &HCat) -> PresMap {
    PresMap {
        obj: f.level(0).to_vec(),
        edges: hx.generators.iter().map(|&e| hy.edge_path[f.apply(1, e)].clone()).collect(),
    }
}

/// Whether the counit `sk(X, 2) -> X` induces an isomorphism on homotopy
/// categories. When either side is not certified finite, falls back to
/// comparing the presentations through `word_equal`.
pub fn sk2_invariance(x: &TruncSSet, budget: WordBudget) -> Result<bool> {
    let s = sk(x, 2)?;
    let (hs, hx) = (hcat(&s.sset)?, hcat(x)?);
    let map = hcat_map(&s.inclusion, &hs, &hx);
    if let (Materialization::Finite(qs), Materialization::Finite(qx)) = (hs.materialize(budget)?, hx.materialize(budget)?) {
        let f = induced_functor(&map, &qs, &qx)?;
        return Ok(f.is_bijective(&qx.cat));
    }
    // the comparison must be a bijection on generators preserving relations both ways
    let single: Option<Vec<usize>> = map.edges.iter().map(|p| (p.len() == 1).then(|| p.edges[0])).collect();
    let Some(single) = single else { return Ok(false) };
    let distinct: BTreeSet<usize> = single.iter().copied().collect();
    if distinct.len() != hx.pres.num_generators() || single.len() != distinct.len() {
        return Ok(false);
    }
    let mut back = vec![Path::empty(0); hx.pres.quiver().num_edges()];
    for (k, &e) in single.iter().enumerate() {
        back[e] = Path::edge(hs.pres.quiver(), k);
    }
    let inverse = PresMap {
        obj: (0..x.size(0)).map(|v| map.obj.iter().position(|&w| w == v).unwrap_or(v)).collect(),
        edges: back,
    };
    let holds = |from: &PresCat, to: &PresCat, m: &PresMap| {
        from.relations()
            .iter()
            .all(|(p, q)| matches!(word_equal(to, &m.apply(p), &m.apply(q), budget), WordVerdict::Equal(_)))
    };
    Ok(holds(&hs.pres, &hx.pres, &map) && holds(&hx.pres, &hs.pres, &inverse))
}

/// A diagram of finite categories: one category per object of `index` and
/// one functor per morphism.
#[derive(Clone, Debug)]
pub struct CatDiagram {
    pub index: FinCat,
    pub values: Vec<FinCat>,
    pub maps: Vec<Functor>,
}

impl CatDiagram {
    pub fn new(index: FinCat, values: Vec<FinCat>, maps: Vec<Functor>) -> Result<CatDiagram> {
        if values.len() != index.num_objects() || maps.len() != index.num_morphisms() {
            return Err(Error::NotAFunctor {
                detail: "diagram must give one category per object and one functor per morphism".into(),
            });
        }
        for (u, f) in maps.iter().enumerate() {
            let m = index.morphism(u);
            f.validate(&values[m.src], &values[m.tgt])?;
        }
        for a in 0..index.num_objects() {
            if maps[index.identity(a)] != Functor::identity(&values[a]) {
                return Err(Error::NotAFunctor {
                    detail: format!("identity of {} is not sent to an identity functor", index.object_name(a)),
                });
            }
        }
        for f in 0..index.num_morphisms() {
            for g in (0..index.num_morphisms()).filter(|&g| index.src(g) == index.tgt(f)) {
                let gf = index.compose(g, f).unwrap();
                if maps[f].then(&maps[g]) != maps[gf] {
                    return Err(Error::NotAFunctor {
                        detail: format!(
                            "composite {} . {} is not preserved",
                            index.morphism_name(g),
                            index.morphism_name(f)
                        ),
                    });
                }
            }
        }
        Ok(CatDiagram { index, values, maps })
    }

    pub fn discrete(values: Vec<FinCat>) -> Result<CatDiagram> {
        let names: Vec<alloc::string::String> = (0..values.len()).map(|i| format!("{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let maps = values.iter().map(Functor::identity).collect();
        CatDiagram::new(crate::samples::discrete(&refs), values, maps)
    }

    /// `F, G : C ⇉ D` over the parallel-pair index.
    pub fn parallel(c: FinCat, d: FinCat, f: Functor, g: Functor) -> Result<CatDiagram> {
        let maps = vec![Functor::identity(&c), Functor::identity(&d), f, g];
        CatDiagram::new(crate::samples::parallel_pair(), vec![c, d], maps)
    }

    /// The span `B <-f- A -g-> C`.
    pub fn span(a: FinCat, b: FinCat, c: FinCat, f: Functor, g: Functor) -> Result<CatDiagram> {
        Self::wedge(a, b, c, f, g, true)
    }

    /// The cospan `A -f-> C <-g- B`.
    pub fn cospan(a: FinCat, b: FinCat, c: FinCat, f: Functor, g: Functor) -> Result<CatDiagram> {
        Self::wedge(a, b, c, f, g, false)
    }

    fn wedge(a: FinCat, b: FinCat, c: FinCat, f: Functor, g: Functor, span: bool) -> Result<CatDiagram> {
        let names = ["a".into(), "b".into(), "c".into()];
        let index = if span {
            crate::samples::preorder(&names, |x, y| x == y || x == 0)
        } else {
            crate::samples::preorder(&names, |x, y| x == y || y == 2)
        };
        let values = vec![a, b, c];
        let maps = (0..index.num_morphisms())
            .map(|u| {
                let m = index.morphism(u);
                match (m.src, m.tgt) {
                    (s, t) if s == t => Functor::identity(&values[s]),
                    (0, 1) if span => f.clone(),
                    (0, 2) if span => g.clone(),
                    (0, 2) => f.clone(),
                    _ => g.clone(),
                }
            })
            .collect();
        CatDiagram::new(index, values, maps)
    }

    /// Nerves of all values at dimension `dim`, as a diagram of simplicial
    /// sets.
    pub fn nerves(&self, dim: usize) -> Result<(Vec<NerveResult>, SSetDiagram)> {
        let nerves: Vec<NerveResult> = self.values.iter().map(|c| nerve(c, dim)).collect();
        let maps = self
            .maps
            .iter()
            .enumerate()
            .map(|(u, f)| {
                let m = self.index.morphism(u);
                nerve_map(f, &nerves[m.src], &nerves[m.tgt])
            })
            .collect();
        let values = nerves.iter().map(|n| n.sset.clone()).collect();
        let d = SSetDiagram::new(self.index.clone(), values, maps)?;
        Ok((nerves, d))
    }
}

/// `h(colim N∘F)` with its cocone.
#[derive(Clone, Debug)]
pub struct CatColimit {
    pub sset: TruncSSet,
    pub hcat: HCat,
    /// One functor `F(j) -> colim` per object `j`.
    pub cocone: Vec<PathFunctor>,
}

impl CatColimit {
    pub fn materialize(&self, budget: WordBudget) -> Result<Materialization> {
        self.hcat.materialize(budget)
    }

    pub fn cocone_functors(&self, d: &CatDiagram, q: &crate::words::Quotient) -> Result<Vec<Functor>> {
        self.cocone
            .iter()
            .zip(&d.values)
            .map(|(pf, c)| crate::words::path_functor(pf, c, q))
            .collect()
    }
}

/// Colimit of a diagram of categories: colimit of nerves, then `h`.
pub fn colim_cat(d: &CatDiagram) -> Result<CatColimit> {
    let (_, sd) = d.nerves(DEFAULT_DIM)?;
    let c = colim_sset(&sd, DEFAULT_DIM)?;
    let h = hcat(&c.sset)?;
    let cocone = c
        .legs
        .iter()
        .zip(&d.values)
        .map(|(leg, cat)| PathFunctor {
            obj: leg.level(0).to_vec(),
            // level 1 of a nerve lists the morphisms in order
            mor: (0..cat.num_morphisms()).map(|f| h.edge_path[leg.apply(1, f)].clone()).collect(),
        })
        .collect();
    Ok(CatColimit {
        sset: c.sset,
        hcat: h,
        cocone,
    })
}

#[derive(Clone, Debug)]
pub struct CatLimit {
    pub cat: FinCat,
    /// One functor `lim -> F(j)` per object `j`.
    pub cone: Vec<Functor>,
}

/// Limit of a diagram of categories: limit of nerves, then categorify.
pub fn lim_cat(d: &CatDiagram, budget: Budget) -> Result<CatLimit> {
    let (nerves, sd) = d.nerves(DEFAULT_DIM)?;
    let l = lim_sset(&sd, DEFAULT_DIM, budget)?;
    let c = categorify(&l.sset)?;
    let cone = l
        .legs
        .iter()
        .zip(&nerves)
        .zip(&d.values)
        .map(|((leg, nj), cj)| {
            let mor = (0..c.cat.num_morphisms()).map(|m| nj.chains[1][leg.apply(1, m)].arrows[0]).collect();
            Functor::new(&c.cat, cj, leg.level(0).to_vec(), mor)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CatLimit { cat: c.cat, cone })
}

/// The coequalizer of `F, G : C ⇉ D` computed directly: objects and
/// morphisms of `D` are merged by `F(u) ~ G(u)`; classes holding an identity
/// become identities, the rest are generators; every composable pair of `D`
/// gives `[g][f] = [g . f]`.
#[derive(Clone, Debug)]
pub struct DirectCoeq {
    pub pres: PresCat,
    /// The quotient functor `D -> coeq`.
    pub quotient: PathFunctor,
}

pub fn coeq_cat_direct(c: &FinCat, d: &FinCat, f: &Functor, g: &Functor) -> Result<DirectCoeq> {
    f.validate(c, d)?;
    g.validate(c, d)?;
    let mut objs = UnionFind::new(d.num_objects());
    let mut mors = UnionFind::new(d.num_morphisms());
    for a in 0..c.num_objects() {
        objs.union(f.obj[a], g.obj[a]);
    }
    for u in 0..c.num_morphisms() {
        mors.union(f.mor[u], g.mor[u]);
    }
    let (obj_class, _) = objs.classes();
    let (mor_class, mor_count) = mors.classes();
    let mut vertices = Vec::new();
    let mut seen = BTreeSet::new();
    for x in 0..d.num_objects() {
        if seen.insert(obj_class[x]) {
            vertices.push(d.object_name(x).into());
        }
    }
    let mut identity_class = vec![false; mor_count];
    for &i in d.identities() {
        identity_class[mor_class[i]] = true;
    }
    let mut generator_of = vec![usize::MAX; mor_count];
    let mut edges = Vec::new();
    for h in 0..d.num_morphisms() {
        let k = mor_class[h];
        if !identity_class[k] && generator_of[k] == usize::MAX {
            generator_of[k] = edges.len();
            edges.push(Edge::new(d.morphism_name(h), obj_class[d.src(h)], obj_class[d.tgt(h)]));
        }
    }
    let quiver = Quiver::new(vertices, edges)?;
    let path_of = |h: usize| {
        let k = mor_class[h];
        if identity_class[k] {
            Path::empty(obj_class[d.src(h)])
        } else {
            Path::edge(&quiver, generator_of[k])
        }
    };
    let mut relations = Vec::new();
    for h1 in 0..d.num_morphisms() {
        for h2 in (0..d.num_morphisms()).filter(|&h2| d.src(h2) == d.tgt(h1)) {
            if d.is_identity(h1) || d.is_identity(h2) {
                continue;
            }
            let lhs = path_of(h1).then(&path_of(h2));
            let rhs = path_of(d.compose(h2, h1).unwrap());
            if lhs != rhs {
                relations.push((lhs, rhs));
            }
        }
    }
    let quotient = PathFunctor {
        obj: (0..d.num_objects()).map(|x| obj_class[x]).collect(),
        mor: (0..d.num_morphisms()).map(path_of).collect(),
    };
    Ok(DirectCoeq {
        pres: PresCat::new(quiver, relations)?,
        quotient,
    })
}

/// Both sides of a universal-property comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UniversalCheck {
    /// Functors out of the colimit (into the limit).
    pub functors: usize,
    /// Cocones under (cones over) the diagram with the probe as vertex.
    pub cones: usize,
    pub bijective: bool,
}

fn assemble<T: Clone>(
    options: &[Vec<T>],
    ok: &dyn Fn(&[T]) -> bool,
    cur: &mut Vec<T>,
    out: &mut Vec<Vec<T>>,
    budget: Budget,
) -> Result<()> {
    if cur.len() == options.len() {
        if out.len() >= budget.max_items {
            return Err(Error::BudgetExceeded {
                what: "cones",
                limit: budget.max_items as u64,
            });
        }
        out.push(cur.clone());
        return Ok(());
    }
    for o in &options[cur.len()] {
        cur.push(o.clone());
        if ok(cur) {
            assemble(options, ok, cur, out, budget)?;
        }
        cur.pop();
    }
    Ok(())
}

/// All cocones `(F(j) -> probe)_j` under `d`.
pub fn cocones(d: &CatDiagram, probe: &FinCat, budget: Budget) -> Result<Vec<Vec<Functor>>> {
    let options = d
        .values
        .iter()
        .map(|c| enumerate_functors(c, probe, budget))
        .collect::<Result<Vec<_>>>()?;
    let ok = |cur: &[Functor]| {
        (0..d.index.num_morphisms()).all(|u| {
            let m = d.index.morphism(u);
            m.src.max(m.tgt) + 1 != cur.len() || d.maps[u].then(&cur[m.tgt]) == cur[m.src]
        })
    };
    let mut out = Vec::new();
    assemble(&options, &ok, &mut Vec::new(), &mut out, budget)?;
    Ok(out)
}

/// All cones `(probe -> F(j))_j` over `d`.
pub fn cones(d: &CatDiagram, probe: &FinCat, budget: Budget) -> Result<Vec<Vec<Functor>>> {
    let options = d
        .values
        .iter()
        .map(|c| enumerate_functors(probe, c, budget))
        .collect::<Result<Vec<_>>>()?;
    let ok = |cur: &[Functor]| {
        (0..d.index.num_morphisms()).all(|u| {
            let m = d.index.morphism(u);
            m.src.max(m.tgt) + 1 != cur.len() || cur[m.src].then(&d.maps[u]) == cur[m.tgt]
        })
    };
    let mut out = Vec::new();
    assemble(&options, &ok, &mut Vec::new(), &mut out, budget)?;
    Ok(out)
}

/// Compares `Cat(colim, probe)` with cocones under `d` through precomposition
/// with the colimit cocone.
pub fn check_colimit(d: &CatDiagram, colim: &FinCat, cocone: &[Functor], probe: &FinCat, budget: Budget) -> Result<UniversalCheck> {
    let all = cocones(d, probe, budget)?;
    let out = enumerate_functors(colim, probe, budget)?;
    let images: BTreeSet<Vec<Functor>> = out.iter().map(|phi| cocone.iter().map(|c| c.then(phi)).collect()).collect();
    let expected: BTreeSet<Vec<Functor>> = all.iter().cloned().collect();
    Ok(UniversalCheck {
        functors: out.len(),
        cones: all.len(),
        bijective: images.len() == out.len() && images == expected,
    })
}

/// Compares `Cat(probe, lim)` with cones over `d` through postcomposition
/// with the limit cone.
pub fn check_limit(d: &CatDiagram, lim: &FinCat, cone: &[Functor], probe: &FinCat, budget: Budget) -> Result<UniversalCheck> {
    let all = cones(d, probe, budget)?;
    let into = enumerate_functors(probe, lim, budget)?;
    let images: BTreeSet<Vec<Functor>> = into.iter().map(|phi| cone.iter().map(|c| phi.then(c)).collect()).collect();
    let expected: BTreeSet<Vec<Functor>> = all.iter().cloned().collect();
    Ok(UniversalCheck {
        functors: into.len(),
        cones: all.len(),
        bijective: images.len() == into.len() && images == expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{coproduct_cat, is_isomorphic, product_cat};
    use crate::samples;
    use crate::sset::{boundary, standard_simplex};

    fn iso(a: &FinCat, b: &FinCat) -> bool {
        is_isomorphic(a, b, Budget::default()).unwrap().is_some()
    }

    fn finite(h: &HCat) -> FinCat {
        h.materialize(WordBudget::default()).unwrap().finite().unwrap().cat
    }

    #[test]
    fn simplices_realize_to_ordinals() {
        for n in 0..=5 {
            let h = hcat(&standard_simplex(n, 3)).unwrap();
            assert!(iso(&finite(&h), &samples::ordinal(n)), "n = {n}");
        }
    }

    #[test]
    fn boundary_has_two_parallel_arrows() {
        let c = finite(&hcat(&boundary(2, 2).sset).unwrap());
        assert_eq!(c.num_objects(), 3);
        assert_eq!(c.hom(0, 2).len(), 2);
        let fx = free_cat_fx(&standard_simplex(1, 2)).unwrap();
        let q = materialize(&fx, WordBudget::default()).unwrap().finite().unwrap();
        assert!(iso(&q.cat, &samples::arrow()));
    }

    #[test]
    fn filtration_tags_degenerate_edges() {
        let x = standard_simplex(2, 3);
        let f = filtration(&x).unwrap();
        assert_eq!(f.edges.len(), 3);
        assert_eq!(f.triangles.len(), 1);
        assert!(f.triangles[0].boundary.iter().all(|t| matches!(t, EdgeTag::Generator(_))));
        assert_eq!(f.sk0.sset.size(1), 3);
    }

    #[test]
    fn coproduct_and_product() {
        let d = CatDiagram::discrete(vec![samples::arrow(), samples::arrow()]).unwrap();
        let c = colim_cat(&d).unwrap();
        assert!(iso(&finite(&c.hcat), &coproduct_cat(&[samples::arrow(), samples::arrow()]).cat));
        let l = lim_cat(&d, Budget::default()).unwrap();
        assert!(iso(&l.cat, &product_cat(&samples::arrow(), &samples::arrow()).cat));
    }

    #[test]
    fn gluing_two_arrows_gives_two() {
        let pt = samples::terminal();
        let a = samples::arrow();
        let end = Functor::new(&pt, &a, vec![1], vec![a.identity(1)]).unwrap();
        let start = Functor::new(&pt, &a, vec![0], vec![a.identity(0)]).unwrap();
        let d = CatDiagram::span(pt, a.clone(), a, end, start).unwrap();
        let c = colim_cat(&d).unwrap();
        let q = c.materialize(WordBudget::default()).unwrap().finite().unwrap();
        assert!(iso(&q.cat, &samples::ordinal(2)));
        let legs = c.cocone_functors(&d, &q).unwrap();
        for u in 0..d.index.num_morphisms() {
            let m = d.index.morphism(u);
            assert_eq!(d.maps[u].then(&legs[m.tgt]), legs[m.src]);
        }
    }

    #[test]
    fn coequalizing_endpoints_is_infinite() {
        let pt = samples::terminal();
        let a = samples::arrow();
        let s = Functor::new(&pt, &a, vec![0], vec![a.identity(0)]).unwrap();
        let t = Functor::new(&pt, &a, vec![1], vec![a.identity(1)]).unwrap();
        let direct = coeq_cat_direct(&pt, &a, &s, &t).unwrap();
        assert!(!materialize(&direct.pres, WordBudget::with_len(8)).unwrap().is_finite());
        let c = colim_cat(&CatDiagram::parallel(pt, a, s, t).unwrap()).unwrap();
        let m = c.materialize(WordBudget::with_len(8)).unwrap();
        assert!(!m.is_finite());
        assert_eq!(m.table().num_classes(), 9);
    }

    #[test]
    fn coequalizer_of_equal_functors() {
        let c = samples::arrow();
        let d = samples::ordinal(2);
        let f = samples::random_functor(&mut samples::rng(1), &c, &d).unwrap();
        let q = coeq_cat_direct(&c, &d, &f, &f).unwrap();
        let m = materialize(&q.pres, WordBudget::default()).unwrap().finite().unwrap();
        assert!(iso(&m.cat, &d));
    }

    #[test]
    fn pullback_of_discrete() {
        let ab = samples::discrete(&["a", "b"]);
        let x = samples::discrete(&["x"]);
        let pt = samples::terminal();
        let f = Functor::constant(&ab, &pt, 0);
        let g = Functor::constant(&x, &pt, 0);
        let d = CatDiagram::cospan(ab.clone(), x, pt, f, g).unwrap();
        let l = lim_cat(&d, Budget::default()).unwrap();
        assert!(iso(&l.cat, &ab));
    }

    #[test]
    fn universal_properties_of_small_colimits() {
        let d = CatDiagram::discrete(vec![samples::arrow(), samples::terminal()]).unwrap();
        let c = colim_cat(&d).unwrap();
        let q = c.materialize(WordBudget::default()).unwrap().finite().unwrap();
        let legs = c.cocone_functors(&d, &q).unwrap();
        let r = check_colimit(&d, &q.cat, &legs, &samples::walking_iso(), Budget::default()).unwrap();
        assert!(r.bijective);
        assert_eq!(r.functors, r.cones);
        let l = lim_cat(&d, Budget::default()).unwrap();
        let r = check_limit(&d, &l.cat, &l.cone, &samples::arrow(), Budget::default()).unwrap();
        assert!(r.bijective);
    }

    #[test]
    fn sk2_invariance_on_simplex() {
        assert!(sk2_invariance(&standard_simplex(3, 3), WordBudget::default()).unwrap());
        assert!(sk2_invariance(&nerve(&samples::walking_iso(), 3).sset, WordBudget::default()).unwrap());
    }
}
