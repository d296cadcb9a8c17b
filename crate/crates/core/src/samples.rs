//! Small named categories used as probes, plus seeded random instances.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fincat::{enumerate_functors, Budget, FinCat, Functor, Morphism};
use crate::presentation::{Edge, Path, PresCat, Quiver};

/// Seed used by the randomized cross-checks unless one is given explicitly.
pub const DEFAULT_SEED: u64 = 0x5EED_CA7;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The category of a preorder: one morphism `a -> b` whenever `le(a, b)`.
/// `le` must be reflexive and transitive.
pub fn preorder(names: &[String], le: impl Fn(usize, usize) -> bool) -> FinCat {
    let n = names.len();
    let mut morphisms = Vec::new();
    let mut index = vec![usize::MAX; n * n];
    let mut identities = vec![0; n];
    for a in 0..n {
        for b in 0..n {
            if le(a, b) {
                index[a * n + b] = morphisms.len();
                let name = if a == b {
                    identities[a] = morphisms.len();
                    format!("1_{}", names[a])
                } else if names[a].chars().count() == 1 && names[b].chars().count() == 1 {
                    format!("{}{}", names[a], names[b])
                } else {
                    format!("{}_{}", names[a], names[b])
                };
                morphisms.push(Morphism::new(name, a, b));
            }
        }
    }
    let ends: Vec<(usize, usize)> = morphisms.iter().map(|m| (m.src, m.tgt)).collect();
    FinCat::new(names.to_vec(), morphisms, identities, |g, f| {
        let target = index[ends[f].0 * n + ends[g].1];
        (target != usize::MAX).then_some(target)
    })
    .expect("preorder must be reflexive and transitive")
}

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// The ordinal `[n]`: objects `0..=n`, one morphism `i -> j` for `i <= j`.
pub fn ordinal(n: usize) -> FinCat {
    preorder(&names(n + 1), |a, b| a <= b)
}

pub fn terminal() -> FinCat {
    ordinal(0)
}

/// `[1]`, the walking arrow.
pub fn arrow() -> FinCat {
    ordinal(1)
}

pub fn discrete(objects: &[&str]) -> FinCat {
    let names: Vec<String> = objects.iter().map(|s| s.to_string()).collect();
    preorder(&names, |a, b| a == b)
}

/// The indiscrete (chaotic) category: exactly one morphism between any two
/// objects.
pub fn indiscrete(objects: &[&str]) -> FinCat {
    let names: Vec<String> = objects.iter().map(|s| s.to_string()).collect();
    preorder(&names, |_, _| true)
}

/// The walking isomorphism `I`.
pub fn walking_iso() -> FinCat {
    indiscrete(&["a", "b"])
}

/// Two parallel arrows `u, v : s -> t`.
pub fn parallel_pair() -> FinCat {
    let morphisms = vec![
        Morphism::new("1_s", 0, 0),
        Morphism::new("1_t", 1, 1),
        Morphism::new("u", 0, 1),
        Morphism::new("v", 0, 1),
    ];
    FinCat::new(vec!["s".into(), "t".into()], morphisms, vec![0, 1], |g, f| {
        if g < 2 {
            Some(f)
        } else if f < 2 {
            Some(g)
        } else {
            None
        }
    })
    .unwrap()
}

/// A one-object category from a monoid table on `0..n` with unit 0.
pub fn monoid(names: &[&str], mul: impl Fn(usize, usize) -> usize) -> FinCat {
    let morphisms = names.iter().map(|s| Morphism::new(*s, 0, 0)).collect();
    FinCat::new(vec!["*".into()], morphisms, vec![0], |g, f| Some(mul(g, f))).expect("monoid table must be valid")
}

/// The monoid `{1, e}` with `e . e = e`.
pub fn idempotent() -> FinCat {
    monoid(&["1", "e"], |g, f| g.max(f))
}

/// The cyclic group of order `n` as a one-object groupoid.
pub fn cyclic(n: usize) -> FinCat {
    let names: Vec<String> = (0..n).map(|k| if k == 0 { "1".into() } else { format!("t{k}") }).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    monoid(&refs, |g, f| (g + f) % n)
}

/// The standard probe corpus, all with at most four objects:
/// `[0]`, `[1]`, `[2]`, `[3]`, `D{a,b}`, `ID{a,b,c}`, `I`, the parallel pair,
/// `[1] + [1]` and `[1] x [1]`.
pub fn corpus() -> Vec<(&'static str, FinCat)> {
    vec![
        ("[0]", ordinal(0)),
        ("[1]", ordinal(1)),
        ("[2]", ordinal(2)),
        ("[3]", ordinal(3)),
        ("D{a,b}", discrete(&["a", "b"])),
        ("ID{a,b,c}", indiscrete(&["a", "b", "c"])),
        ("I", walking_iso()),
        ("parallel", parallel_pair()),
        ("[1]+[1]", crate::fincat::coproduct_cat(&[arrow(), arrow()]).cat),
        ("[1]x[1]", crate::fincat::product_cat(&arrow(), &arrow()).cat),
    ]
}

/// A random small category: either a random preorder or one of a handful of
/// non-thin shapes. Never more than `max_objects` objects or
/// `max_morphisms` morphisms.
pub fn random_category<R: Rng>(rng: &mut R, max_objects: usize, max_morphisms: usize) -> FinCat {
    loop {
        let c = if rng.gen_bool(0.3) {
            let pool = [idempotent(), cyclic(2), walking_iso(), parallel_pair(), arrow(), terminal()];
            pool.choose(rng).unwrap().clone()
        } else {
            random_preorder(rng, max_objects)
        };
        if c.num_objects() >= 1 && c.num_objects() <= max_objects && c.num_morphisms() <= max_morphisms {
            return c;
        }
    }
}

pub fn random_preorder<R: Rng>(rng: &mut R, max_objects: usize) -> FinCat {
    let n = rng.gen_range(1..=max_objects.max(1));
    let mut rel = vec![false; n * n];
    for a in 0..n {
        for b in 0..n {
            rel[a * n + b] = a == b || rng.gen_bool(0.35);
        }
    }
    for k in 0..n {
        for a in 0..n {
            for b in 0..n {
                if rel[a * n + k] && rel[k * n + b] {
                    rel[a * n + b] = true;
                }
            }
        }
    }
    let labels: Vec<String> = (0..n).map(|i| String::from(char::from(b'a' + i as u8))).collect();
    preorder(&labels, |a, b| rel[a * n + b])
}

/// A uniformly chosen functor `dom -> cod`, if any exists.
pub fn random_functor<R: Rng>(rng: &mut R, dom: &FinCat, cod: &FinCat) -> Option<Functor> {
    let all = enumerate_functors(dom, cod, Budget::default()).ok()?;
    all.choose(rng).cloned()
}

/// A random walk of exactly `len` edges from `start`, if one exists.
pub fn random_path<R: Rng>(rng: &mut R, q: &Quiver, start: usize, len: usize) -> Option<Path> {
    let mut edges = Vec::with_capacity(len);
    let mut at = start;
    for _ in 0..len {
        let out: Vec<usize> = (0..q.num_edges()).filter(|&e| q.edges()[e].src == at).collect();
        let &e = out.choose(rng)?;
        edges.push(e);
        at = q.edges()[e].tgt;
    }
    Path::from_edges(q, start, edges).ok()
}

/// A random presentation on at most two vertices and three generators with
/// up to two relations of length at most three.
pub fn random_presentation<R: Rng>(rng: &mut R) -> PresCat {
    let n = rng.gen_range(1..=2);
    let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let m = rng.gen_range(1..=3);
    let edges = (0..m)
        .map(|k| Edge::new(String::from(char::from(b'a' + k as u8)), rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect();
    let quiver = Quiver::new(vertices, edges).expect("endpoints in range");
    let mut relations = Vec::new();
    for _ in 0..rng.gen_range(0..=2) {
        let start = rng.gen_range(0..n);
        let len = rng.gen_range(1..=3);
        let Some(lhs) = random_path(rng, &quiver, start, len) else { continue };
        for _ in 0..50 {
            let len = rng.gen_range(0..=3);
            if let Some(rhs) = random_path(rng, &quiver, start, len) {
                if rhs.tgt == lhs.tgt && rhs != lhs {
                    relations.push((lhs, rhs));
                    break;
                }
            }
        }
    }
    PresCat::new(quiver, relations).expect("relations are parallel")
}
