//! Finite categories with explicit composition tables, and functors between
//! them.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

const NONE: usize = usize::MAX;

/// A morphism of a finite category: a name plus source and target object
/// indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

impl Morphism {
    pub fn new(name: impl Into<String>, src: usize, tgt: usize) -> Self {
        Morphism {
            name: name.into(),
            src,
            tgt,
        }
    }
}

/// Limits for exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of results an enumeration may produce.
    pub max_items: usize,
    /// Maximum number of search steps (candidate assignments tried).
    pub max_steps: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_items: 100_000,
            max_steps: 50_000_000,
        }
    }
}

impl Budget {
    pub fn items(max_items: usize) -> Self {
        Budget {
            max_items,
            ..Budget::default()
        }
    }
}

/// A finite category.
///
/// Objects and morphisms are addressed by dense indices; names are opaque
/// labels used only for display and lookup. Identities are ordinary entries
/// of the morphism list. The composition table is total on composable pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCat {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    comp: Vec<usize>,
    homs: Vec<Vec<usize>>,
}

impl FinCat {
    /// Builds and validates a finite category.
    ///
    /// `compose(g, f)` is queried for every pair with `tgt f == src g` and must
    /// return the index of `g . f`.
    pub fn new<F>(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        mut compose: F,
    ) -> Result<FinCat>
    where
        F: FnMut(usize, usize) -> Option<usize>,
    {
        let n = objects.len();
        let m = morphisms.len();
        if identities.len() != n {
            return Err(Error::InvalidArgument(format!(
                "{} objects but {} identities",
                n,
                identities.len()
            )));
        }
        for mor in &morphisms {
            if mor.src >= n || mor.tgt >= n {
                return Err(Error::SrcTgtMismatch {
                    detail: format!("morphism {} has an endpoint out of range", mor.name),
                });
            }
        }
        for (a, &i) in identities.iter().enumerate() {
            if i >= m || morphisms[i].src != a || morphisms[i].tgt != a {
                return Err(Error::SrcTgtMismatch {
                    detail: format!("identity of {} is not a loop at it", objects[a]),
                });
            }
        }
        let mut homs = vec![Vec::new(); n * n];
        for (i, mor) in morphisms.iter().enumerate() {
            homs[mor.src * n + mor.tgt].push(i);
        }
        let mut comp = vec![NONE; m * m];
        for f in 0..m {
            let b = morphisms[f].tgt;
            for c in 0..n {
                for &g in &homs[b * n + c] {
                    let h = compose(g, f).ok_or_else(|| Error::MissingComposite {
                        g: morphisms[g].name.clone(),
                        f: morphisms[f].name.clone(),
                    })?;
                    if h >= m || morphisms[h].src != morphisms[f].src || morphisms[h].tgt != c {
                        return Err(Error::SrcTgtMismatch {
                            detail: format!(
                                "{} . {} is not a morphism {} -> {}",
                                morphisms[g].name, morphisms[f].name, objects[morphisms[f].src], objects[c]
                            ),
                        });
                    }
                    comp[g * m + f] = h;
                }
            }
        }
        let cat = FinCat {
            objects,
            morphisms,
            identities,
            comp,
            homs,
        };
        cat.check_laws()?;
        Ok(cat)
    }

    fn check_laws(&self) -> Result<()> {
        let m = self.morphisms.len();
        for f in 0..m {
            let Morphism { src, tgt, .. } = self.morphisms[f];
            if self.comp[self.identities[tgt] * m + f] != f || self.comp[f * m + self.identities[src]] != f {
                return Err(Error::UnitViolation {
                    morphism: self.morphisms[f].name.clone(),
                });
            }
        }
        let n = self.objects.len();
        for f in 0..m {
            let b = self.morphisms[f].tgt;
            for c in 0..n {
                for &g in &self.homs[b * n + c] {
                    let gf = self.comp[g * m + f];
                    for d in 0..n {
                        for &h in &self.homs[c * n + d] {
                            let hg = self.comp[h * m + g];
                            if self.comp[h * m + gf] != self.comp[hg * m + f] {
                                return Err(Error::AssociativityViolation {
                                    h: self.morphisms[h].name.clone(),
                                    g: self.morphisms[g].name.clone(),
                                    f: self.morphisms[f].name.clone(),
                                });
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn morphism(&self, f: usize) -> &Morphism {
        &self.morphisms[f]
    }

    pub fn object_name(&self, a: usize) -> &str {
        &self.objects[a]
    }

    pub fn morphism_name(&self, f: usize) -> &str {
        &self.morphisms[f].name
    }

    pub fn src(&self, f: usize) -> usize {
        self.morphisms[f].src
    }

    pub fn tgt(&self, f: usize) -> usize {
        self.morphisms[f].tgt
    }

    pub fn identity(&self, a: usize) -> usize {
        self.identities[a]
    }

    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identities[self.morphisms[f].src] == f
    }

    /// `g . f`, when `tgt f == src g`.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        match self.comp[g * self.morphisms.len() + f] {
            NONE => None,
            h => Some(h),
        }
    }

    pub fn hom(&self, a: usize, b: usize) -> &[usize] {
        &self.homs[a * self.objects.len() + b]
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn morphism_index(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    pub fn non_identities(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.morphisms.len()).filter(move |&f| !self.is_identity(f))
    }

    /// A two-sided inverse of `f`, if one exists.
    pub fn inverse(&self, f: usize) -> Option<usize> {
        let Morphism { src, tgt, .. } = self.morphisms[f];
        self.hom(tgt, src).iter().copied().find(|&g| {
            self.compose(g, f) == Some(self.identities[src]) && self.compose(f, g) == Some(self.identities[tgt])
        })
    }

    pub fn is_isomorphism(&self, f: usize) -> bool {
        self.inverse(f).is_some()
    }

    /// The opposite category, with the same names and indices.
    pub fn opposite(&self) -> FinCat {
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| Morphism::new(m.name.clone(), m.tgt, m.src))
            .collect();
        FinCat::new(self.objects.clone(), morphisms, self.identities.clone(), |g, f| self.compose(f, g))
            .expect("opposite of a valid category is valid")
    }

    /// Returns the same category with new labels.
    pub fn renamed(&self, objects: Vec<String>, morphisms: Vec<String>) -> FinCat {
        assert_eq!(objects.len(), self.objects.len());
        assert_eq!(morphisms.len(), self.morphisms.len());
        let mut out = self.clone();
        out.objects = objects;
        for (m, name) in out.morphisms.iter_mut().zip(morphisms) {
            m.name = name;
        }
        out
    }
}

/// A functor between finite categories, as index maps on objects and
/// morphisms. Domain and codomain are supplied by the caller whenever the
/// functor is validated or composed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Functor {
    pub obj: Vec<usize>,
    pub mor: Vec<usize>,
}

impl Functor {
    pub fn new(dom: &FinCat, cod: &FinCat, obj: Vec<usize>, mor: Vec<usize>) -> Result<Functor> {
        let f = Functor { obj, mor };
        f.validate(dom, cod)?;
        Ok(f)
    }

    pub fn identity(c: &FinCat) -> Functor {
        Functor {
            obj: (0..c.num_objects()).collect(),
            mor: (0..c.num_morphisms()).collect(),
        }
    }

    /// The functor sending everything to the object `target` and its identity.
    pub fn constant(dom: &FinCat, cod: &FinCat, target: usize) -> Functor {
        Functor {
            obj: vec![target; dom.num_objects()],
            mor: vec![cod.identity(target); dom.num_morphisms()],
        }
    }

    pub fn validate(&self, dom: &FinCat, cod: &FinCat) -> Result<()> {
        let bad = |detail: String| Err(Error::NotAFunctor { detail });
        if self.obj.len() != dom.num_objects() || self.mor.len() != dom.num_morphisms() {
            return bad(format!(
                "map sizes {}/{} do not match domain {}/{}",
                self.obj.len(),
                self.mor.len(),
                dom.num_objects(),
                dom.num_morphisms()
            ));
        }
        if self.obj.iter().any(|&o| o >= cod.num_objects()) || self.mor.iter().any(|&m| m >= cod.num_morphisms()) {
            return bad("image index out of range".into());
        }
        for f in 0..dom.num_morphisms() {
            let img = self.mor[f];
            if cod.src(img) != self.obj[dom.src(f)] || cod.tgt(img) != self.obj[dom.tgt(f)] {
                return bad(format!("{} is sent to {} with wrong endpoints", dom.morphism_name(f), cod.morphism_name(img)));
            }
        }
        for a in 0..dom.num_objects() {
            if self.mor[dom.identity(a)] != cod.identity(self.obj[a]) {
                return bad(format!("identity of {} not preserved", dom.object_name(a)));
            }
        }
        for f in 0..dom.num_morphisms() {
            let b = dom.tgt(f);
            for c in 0..dom.num_objects() {
                for &g in dom.hom(b, c) {
                    let gf = dom.compose(g, f).unwrap();
                    if cod.compose(self.mor[g], self.mor[f]) != Some(self.mor[gf]) {
                        return bad(format!(
                            "composite {} . {} not preserved",
                            dom.morphism_name(g),
                            dom.morphism_name(f)
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// `next . self`.
    pub fn then(&self, next: &Functor) -> Functor {
        Functor {
            obj: self.obj.iter().map(|&o| next.obj[o]).collect(),
            mor: self.mor.iter().map(|&m| next.mor[m]).collect(),
        }
    }

    pub fn is_bijective(&self, cod: &FinCat) -> bool {
        is_permutation(&self.obj, cod.num_objects()) && is_permutation(&self.mor, cod.num_morphisms())
    }

    /// Inverse of a bijective functor.
    pub fn inverse(&self, cod: &FinCat) -> Option<Functor> {
        if !self.is_bijective(cod) {
            return None;
        }
        let mut obj = vec![0; self.obj.len()];
        for (i, &o) in self.obj.iter().enumerate() {
            obj[o] = i;
        }
        let mut mor = vec![0; self.mor.len()];
        for (i, &m) in self.mor.iter().enumerate() {
            mor[m] = i;
        }
        Some(Functor { obj, mor })
    }
}

fn is_permutation(map: &[usize], n: usize) -> bool {
    if map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &x in map {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// A binary product with its projections.
#[derive(Clone, Debug)]
pub struct Product {
    pub cat: FinCat,
    pub left: Functor,
    pub right: Functor,
}

/// Product of two categories with componentwise composition. Object
/// `(a, b)` has index `a * |obj D| + b`, and likewise for morphisms.
pub fn product_cat(c: &FinCat, d: &FinCat) -> Product {
    let (nd, md) = (d.num_objects(), d.num_morphisms());
    let mut objects = Vec::new();
    for a in c.objects() {
        for b in d.objects() {
            objects.push(format!("({a},{b})"));
        }
    }
    let mut morphisms = Vec::new();
    for f in c.morphisms() {
        for g in d.morphisms() {
            morphisms.push(Morphism::new(format!("({},{})", f.name, g.name), f.src * nd + g.src, f.tgt * nd + g.tgt));
        }
    }
    let identities = (0..c.num_objects())
        .flat_map(|a| (0..nd).map(move |b| (a, b)))
        .map(|(a, b)| c.identity(a) * md + d.identity(b))
        .collect();
    let cat = FinCat::new(objects, morphisms, identities, |x, y| {
        let h1 = c.compose(x / md, y / md)?;
        let h2 = d.compose(x % md, y % md)?;
        Some(h1 * md + h2)
    })
    .expect("product of valid categories is valid");
    let left = Functor {
        obj: (0..cat.num_objects()).map(|o| o / nd).collect(),
        mor: (0..cat.num_morphisms()).map(|m| m / md).collect(),
    };
    let right = Functor {
        obj: (0..cat.num_objects()).map(|o| o % nd).collect(),
        mor: (0..cat.num_morphisms()).map(|m| m % md).collect(),
    };
    Product { cat, left, right }
}

/// A coproduct with its injections.
#[derive(Clone, Debug)]
pub struct Coproduct {
    pub cat: FinCat,
    pub injections: Vec<Functor>,
}

/// Disjoint union of categories. Names that clash across summands get an
/// `@k` suffix naming the summand.
pub fn coproduct_cat(cats: &[FinCat]) -> Coproduct {
    let obj_names = disjoint_names(cats.iter().map(|c| c.objects().to_vec()).collect());
    let mor_names = disjoint_names(
        cats.iter()
            .map(|c| c.morphisms().iter().map(|m| m.name.clone()).collect())
            .collect(),
    );
    let mut objects = Vec::new();
    let mut morphisms = Vec::new();
    let mut identities = Vec::new();
    let mut injections = Vec::new();
    for (k, c) in cats.iter().enumerate() {
        let (o0, m0) = (objects.len(), morphisms.len());
        objects.extend(obj_names[k].iter().cloned());
        for (f, mor) in c.morphisms().iter().enumerate() {
            morphisms.push(Morphism::new(mor_names[k][f].clone(), mor.src + o0, mor.tgt + o0));
        }
        identities.extend(c.identities().iter().map(|&i| i + m0));
        injections.push(Functor {
            obj: (o0..o0 + c.num_objects()).collect(),
            mor: (m0..m0 + c.num_morphisms()).collect(),
        });
    }
    let owner: Vec<(usize, usize)> = cats
        .iter()
        .enumerate()
        .flat_map(|(k, c)| (0..c.num_morphisms()).map(move |f| (k, f)))
        .collect();
    let offsets: Vec<usize> = injections.iter().map(|i| i.mor.first().copied().unwrap_or(0)).collect();
    let cat = FinCat::new(objects, morphisms, identities, |g, f| {
        let (kg, lg) = owner[g];
        let (kf, lf) = owner[f];
        if kg != kf {
            return None;
        }
        cats[kg].compose(lg, lf).map(|h| h + offsets[kg])
    })
    .expect("coproduct of valid categories is valid");
    Coproduct { cat, injections }
}

fn disjoint_names(groups: Vec<Vec<String>>) -> Vec<Vec<String>> {
    let mut count = alloc::collections::BTreeMap::<&str, usize>::new();
    for g in &groups {
        for name in g {
            *count.entry(name.as_str()).or_default() += 1;
        }
    }
    groups
        .iter()
        .enumerate()
        .map(|(k, g)| {
            g.iter()
                .map(|name| {
                    if count[name.as_str()] > 1 {
                        format!("{name}@{k}")
                    } else {
                        name.clone()
                    }
                })
                .collect()
        })
        .collect()
}

/// All functors `dom -> cod`, in lexicographic order of (object map,
/// morphism map).
pub fn enumerate_functors(dom: &FinCat, cod: &FinCat, budget: Budget) -> Result<Vec<Functor>> {
    let mut out = Vec::new();
    let mut overflow = false;
    FunctorSearch::new(dom, cod, false, budget).run(&mut |f| {
        if out.len() == budget.max_items {
            overflow = true;
            return false;
        }
        out.push(f.clone());
        true
    })?;
    if overflow {
        return Err(Error::BudgetExceeded {
            what: "functor enumeration",
            limit: budget.max_items as u64,
        });
    }
    Ok(out)
}

/// Number of functors `dom -> cod`, without materializing them.
pub fn count_functors(dom: &FinCat, cod: &FinCat, budget: Budget) -> Result<usize> {
    let mut n = 0usize;
    FunctorSearch::new(dom, cod, false, budget).run(&mut |_| {
        n += 1;
        true
    })?;
    Ok(n)
}

/// Finds a pair of mutually inverse functors, if the categories are
/// isomorphic.
pub fn is_isomorphic(c: &FinCat, d: &FinCat, budget: Budget) -> Result<Option<(Functor, Functor)>> {
    if c.num_objects() != d.num_objects() || c.num_morphisms() != d.num_morphisms() {
        return Ok(None);
    }
    let mut found = None;
    FunctorSearch::new(c, d, true, budget).run(&mut |f| {
        found = Some(f.clone());
        false
    })?;
    Ok(found.map(|f| {
        let g = f.inverse(d).expect("bijective by construction");
        (f, g)
    }))
}

struct FunctorSearch<'a> {
    dom: &'a FinCat,
    cod: &'a FinCat,
    injective: bool,
    budget: Budget,
    steps: u64,
    order: Vec<usize>,
    checks: Vec<Vec<(usize, usize, usize)>>,
    current: Functor,
    used_obj: Vec<bool>,
    used_mor: Vec<bool>,
}

impl<'a> FunctorSearch<'a> {
    fn new(dom: &'a FinCat, cod: &'a FinCat, injective: bool, budget: Budget) -> Self {
        let order: Vec<usize> = dom.non_identities().collect();
        let mut position = vec![None; dom.num_morphisms()];
        for (p, &f) in order.iter().enumerate() {
            position[f] = Some(p);
        }
        let mut checks = vec![Vec::new(); order.len()];
        for &f in &order {
            for c in 0..dom.num_objects() {
                for &g in dom.hom(dom.tgt(f), c) {
                    if dom.is_identity(g) {
                        continue;
                    }
                    let h = dom.compose(g, f).unwrap();
                    let ready = [position[g], position[f], position[h]].into_iter().flatten().max().unwrap();
                    checks[ready].push((g, f, h));
                }
            }
        }
        FunctorSearch {
            dom,
            cod,
            injective,
            budget,
            steps: 0,
            order,
            checks,
            current: Functor {
                obj: vec![0; dom.num_objects()],
                mor: vec![0; dom.num_morphisms()],
            },
            used_obj: vec![false; cod.num_objects()],
            used_mor: vec![false; cod.num_morphisms()],
        }
    }

    fn run(mut self, visit: &mut dyn FnMut(&Functor) -> bool) -> Result<()> {
        self.assign_object(0, visit).map(|_| ())
    }

    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.budget.max_steps {
            return Err(Error::BudgetExceeded {
                what: "functor search steps",
                limit: self.budget.max_steps,
            });
        }
        Ok(())
    }

    // Returns Ok(false) once the visitor asks to stop.
    fn assign_object(&mut self, a: usize, visit: &mut dyn FnMut(&Functor) -> bool) -> Result<bool> {
        if a == self.dom.num_objects() {
            for b in 0..a {
                let id = self.dom.identity(b);
                self.current.mor[id] = self.cod.identity(self.current.obj[b]);
                if self.injective {
                    self.used_mor[self.current.mor[id]] = true;
                }
            }
            let go = self.assign_morphism(0, visit);
            if self.injective {
                for b in 0..a {
                    self.used_mor[self.current.mor[self.dom.identity(b)]] = false;
                }
            }
            return go;
        }
        for x in 0..self.cod.num_objects() {
            self.tick()?;
            if self.injective {
                if self.used_obj[x] {
                    continue;
                }
                self.current.obj[a] = x;
                let ok = (0..=a).all(|b| {
                    let y = self.current.obj[b];
                    self.dom.hom(a, b).len() == self.cod.hom(x, y).len()
                        && self.dom.hom(b, a).len() == self.cod.hom(y, x).len()
                });
                if !ok {
                    continue;
                }
                self.used_obj[x] = true;
            }
            self.current.obj[a] = x;
            let go = self.assign_object(a + 1, visit)?;
            if self.injective {
                self.used_obj[x] = false;
            }
            if !go {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn assign_morphism(&mut self, p: usize, visit: &mut dyn FnMut(&Functor) -> bool) -> Result<bool> {
        if p == self.order.len() {
            return Ok(visit(&self.current));
        }
        let f = self.order[p];
        let (s, t) = (self.current.obj[self.dom.src(f)], self.current.obj[self.dom.tgt(f)]);
        let cod = self.cod;
        for &img in cod.hom(s, t) {
            self.tick()?;
            if self.injective && self.used_mor[img] {
                continue;
            }
            self.current.mor[f] = img;
            let ok = self.checks[p].iter().all(|&(g, f, h)| {
                cod.compose(self.current.mor[g], self.current.mor[f]) == Some(self.current.mor[h])
            });
            if !ok {
                continue;
            }
            if self.injective {
                self.used_mor[img] = true;
            }
            let go = self.assign_morphism(p + 1, visit)?;
            if self.injective {
                self.used_mor[img] = false;
            }
            if !go {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::{arrow, discrete, ordinal, terminal};

    #[test]
    fn terminal_category_from_single_identity() {
        let c = FinCat::new(vec!["*".into()], vec![Morphism::new("1", 0, 0)], vec![0], |_, _| Some(0)).unwrap();
        assert_eq!(c.num_objects(), 1);
        assert_eq!(c.num_morphisms(), 1);
        assert!(is_isomorphic(&c, &terminal(), Budget::default()).unwrap().is_some());
    }

    #[test]
    fn arrow_category_from_table() {
        let objects = vec!["0".into(), "1".into()];
        let morphisms = vec![Morphism::new("id0", 0, 0), Morphism::new("id1", 1, 1), Morphism::new("f", 0, 1)];
        let c = FinCat::new(objects, morphisms, vec![0, 1], |g, f| {
            Some(match (g, f) {
                (0, 0) => 0,
                (1, 1) => 1,
                (2, 0) | (1, 2) => 2,
                _ => return None,
            })
        })
        .unwrap();
        assert!(is_isomorphic(&c, &arrow(), Budget::default()).unwrap().is_some());
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // one object, morphisms {1, a, b}; a.a = b, a.b = a, b.a = b, b.b = a
        let morphisms = vec![Morphism::new("1", 0, 0), Morphism::new("a", 0, 0), Morphism::new("b", 0, 0)];
        let err = FinCat::new(vec!["*".into()], morphisms, vec![0], |g, f| {
            Some(match (g, f) {
                (0, x) | (x, 0) => x,
                (1, 1) => 2,
                (1, 2) => 1,
                (2, 1) => 2,
                (2, 2) => 1,
                _ => unreachable!(),
            })
        })
        .unwrap_err();
        assert!(matches!(err, Error::AssociativityViolation { .. }), "{err:?}");
    }

    #[test]
    fn broken_unit_is_rejected() {
        let morphisms = vec![Morphism::new("1", 0, 0), Morphism::new("a", 0, 0)];
        let err = FinCat::new(vec!["*".into()], morphisms, vec![0], |g, f| Some(if g == 0 && f == 1 { 0 } else { g.max(f) }))
            .unwrap_err();
        assert!(matches!(err, Error::UnitViolation { .. }), "{err:?}");
    }

    #[test]
    fn missing_composite_is_reported() {
        let err = FinCat::new(vec!["*".into()], vec![Morphism::new("1", 0, 0)], vec![0], |_, _| None).unwrap_err();
        assert!(matches!(err, Error::MissingComposite { .. }));
    }

    #[test]
    fn product_of_arrows() {
        let p = product_cat(&arrow(), &arrow());
        assert_eq!(p.cat.num_objects(), 4);
        assert_eq!(p.cat.num_morphisms(), 9);
        p.left.validate(&p.cat, &arrow()).unwrap();
        p.right.validate(&p.cat, &arrow()).unwrap();
    }

    #[test]
    fn product_with_terminal_is_identity() {
        let c = ordinal(2);
        let p = product_cat(&terminal(), &c);
        assert!(is_isomorphic(&p.cat, &c, Budget::default()).unwrap().is_some());
    }

    #[test]
    fn product_of_discrete_is_discrete() {
        let p = product_cat(&discrete(&["a", "b"]), &discrete(&["x", "y"]));
        assert_eq!(p.cat.num_objects(), 4);
        assert_eq!(p.cat.num_morphisms(), 4);
    }

    #[test]
    fn coproducts() {
        let two = coproduct_cat(&[terminal(), terminal()]);
        assert_eq!((two.cat.num_objects(), two.cat.num_morphisms()), (2, 2));
        let arrows = coproduct_cat(&[arrow(), arrow()]);
        assert_eq!((arrows.cat.num_objects(), arrows.cat.num_morphisms()), (4, 6));
        for inj in &arrows.injections {
            inj.validate(&arrow(), &arrows.cat).unwrap();
        }
        let empty = coproduct_cat(&[]);
        assert_eq!((empty.cat.num_objects(), empty.cat.num_morphisms()), (0, 0));
    }

    #[test]
    fn functor_counts() {
        let b = Budget::default();
        assert_eq!(enumerate_functors(&arrow(), &arrow(), b).unwrap().len(), 3);
        assert_eq!(enumerate_functors(&terminal(), &ordinal(3), b).unwrap().len(), 4);
        assert_eq!(enumerate_functors(&ordinal(2), &arrow(), b).unwrap().len(), 4);
    }

    #[test]
    fn functor_budget() {
        let err = enumerate_functors(&discrete(&["a", "b", "c"]), &ordinal(3), Budget::items(10)).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn non_isomorphic_by_size() {
        assert!(is_isomorphic(&arrow(), &terminal(), Budget::default()).unwrap().is_none());
    }

    #[test]
    fn opposite_of_ordinal_is_isomorphic() {
        let c = ordinal(3);
        assert!(is_isomorphic(&c.opposite(), &c, Budget::default()).unwrap().is_some());
    }
}
