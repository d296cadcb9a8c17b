//! The nerve of a finite category and its partial inverse.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::fincat::{enumerate_functors, Budget, FinCat, Functor, Morphism};
use crate::sset::{check_iep, hom_sset, spine_of, IepCheck, SMap, TruncSSet};
use crate::{Error, Result};

/// A composable chain `start --arrows[0]--> . --arrows[1]--> ...`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chain {
    pub start: usize,
    pub arrows: Vec<usize>,
}

/// `N(C)` truncated at some dimension, with the chain behind every simplex.
#[derive(Clone, Debug)]
pub struct NerveResult {
    pub sset: TruncSSet,
    /// `chains[n][x]` is the chain of `n` arrows that simplex `x` stands for.
    pub chains: Vec<Vec<Chain>>,
    lookup: Vec<BTreeMap<Chain, usize>>,
}

impl NerveResult {
    pub fn index_of(&self, chain: &Chain) -> Option<usize> {
        self.lookup.get(chain.arrows.len())?.get(chain).copied()
    }
}

fn chain_end(c: &FinCat, ch: &Chain) -> usize {
    ch.arrows.last().map_or(ch.start, |&f| c.tgt(f))
}

/// The nerve of `c` up to dimension `dim`. Level 0 is the objects and level 1
/// the morphisms, both in their original order; higher levels list chains
/// lexicographically by arrow indices.
pub fn nerve(c: &FinCat, dim: usize) -> NerveResult {
    let mut chains: Vec<Vec<Chain>> = Vec::with_capacity(dim + 1);
    chains.push(
        (0..c.num_objects())
            .map(|a| Chain {
                start: a,
                arrows: Vec::new(),
            })
            .collect(),
    );
    for n in 1..=dim {
        let mut level = Vec::new();
        if n == 1 {
            for f in 0..c.num_morphisms() {
                level.push(Chain {
                    start: c.src(f),
                    arrows: vec![f],
                });
            }
        } else {
            for prev in &chains[n - 1] {
                let end = chain_end(c, prev);
                for f in (0..c.num_morphisms()).filter(|&f| c.src(f) == end) {
                    let mut arrows = prev.arrows.clone();
                    arrows.push(f);
                    level.push(Chain {
                        start: prev.start,
                        arrows,
                    });
                }
            }
            level.sort();
        }
        chains.push(level);
    }
    let lookup: Vec<BTreeMap<Chain, usize>> = chains
        .iter()
        .map(|l| l.iter().enumerate().map(|(i, ch)| (ch.clone(), i)).collect())
        .collect();
    let names = chains
        .iter()
        .map(|l| {
            l.iter()
                .map(|ch| match ch.arrows.len() {
                    0 => String::from(c.object_name(ch.start)),
                    _ => ch.arrows.iter().map(|&f| c.morphism_name(f)).collect::<Vec<_>>().join(";"),
                })
                .collect()
        })
        .collect();
    let face = |n: usize, i: usize, x: usize| -> usize {
        let ch = &chains[n][x];
        let mut arrows = ch.arrows.clone();
        let mut start = ch.start;
        if i == 0 {
            start = c.tgt(arrows.remove(0));
        } else if i == n {
            arrows.pop();
        } else {
            let g = arrows.remove(i);
            arrows[i - 1] = c.compose(g, arrows[i - 1]).expect("chains are composable");
        }
        lookup[n - 1][&Chain { start, arrows }]
    };
    let degen = |n: usize, i: usize, x: usize| -> usize {
        let ch = &chains[n][x];
        let vertex = if i == 0 { ch.start } else { c.tgt(ch.arrows[i - 1]) };
        let mut arrows = ch.arrows.clone();
        arrows.insert(i, c.identity(vertex));
        lookup[n + 1][&Chain { start: ch.start, arrows }]
    };
    let sset = TruncSSet::build(names, face, degen).expect("nerves satisfy the simplicial identities");
    NerveResult { sset, chains, lookup }
}

/// `N(F) : N(C) -> N(D)`, acting on chains by `F`.
pub fn nerve_map(f: &Functor, nc: &NerveResult, nd: &NerveResult) -> SMap {
    let levels = nc
        .chains
        .iter()
        .map(|l| {
            l.iter()
                .map(|ch| {
                    let image = Chain {
                        start: f.obj[ch.start],
                        arrows: ch.arrows.iter().map(|&a| f.mor[a]).collect(),
                    };
                    nd.index_of(&image).expect("functors send chains to chains")
                })
                .collect()
        })
        .collect();
    SMap::new(&nc.sset, &nd.sset, levels).expect("nerve of a functor is simplicial")
}

/// A category recovered from a simplicial set with the spine extension
/// property, with the comparison isomorphism `X -> N(cat)`.
#[derive(Clone, Debug)]
pub struct Categorified {
    pub cat: FinCat,
    pub nerve: NerveResult,
    pub witness: SMap,
}

/// Objects `X_0`, morphisms `X_1`, composition through the unique 2-simplex
/// filling each composable pair. Requires `dim >= 3` and the spine extension
/// property at every level `2..=dim`.
pub fn categorify(x: &TruncSSet) -> Result<Categorified> {
    if x.dim() < 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: x.dim(),
        });
    }
    for n in 2..=x.dim() {
        if let IepCheck::Fails(w) = check_iep(x, n)? {
            return Err(Error::NotIep {
                n,
                chain: w.chain_names(x),
            });
        }
    }
    let mut filler: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for s in 0..x.size(2) {
        let sp = spine_of(x, 2, s);
        filler.insert((sp[0], sp[1]), x.face(2, 1, s));
    }
    let objects = x.names(0).to_vec();
    let morphisms = (0..x.size(1))
        .map(|e| Morphism::new(x.name(1, e), x.face(1, 1, e), x.face(1, 0, e)))
        .collect();
    let identities = (0..x.size(0)).map(|v| x.degen(0, 0, v)).collect();
    let cat = FinCat::new(objects, morphisms, identities, |g, f| filler.get(&(f, g)).copied())?;
    let nerve = nerve(&cat, x.dim());
    let levels = (0..=x.dim())
        .map(|n| {
            (0..x.size(n))
                .map(|s| {
                    let chain = if n == 0 {
                        Chain {
                            start: s,
                            arrows: Vec::new(),
                        }
                    } else {
                        Chain {
                            start: x.act(n, s, &[0]),
                            arrows: spine_of(x, n, s),
                        }
                    };
                    nerve.index_of(&chain).ok_or_else(|| Error::InvariantViolation {
                        detail: format!("spine of {} is not a chain", x.name(n, s)),
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let witness = SMap::new(x, &nerve.sset, levels)?;
    if !witness.is_iso(&nerve.sset) {
        return Err(Error::InvariantViolation {
            detail: "comparison with the nerve is not bijective".into(),
        });
    }
    Ok(Categorified { cat, nerve, witness })
}

/// Both sides of `Cat(C, D) -> sSet(NC, ND)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FullFaithfulness {
    pub functors: usize,
    pub simplicial_maps: usize,
    pub bijective: bool,
}

pub fn fully_faithful_check(c: &FinCat, d: &FinCat, dim: usize, budget: Budget) -> Result<FullFaithfulness> {
    let (nc, nd) = (nerve(c, dim), nerve(d, dim));
    let functors = enumerate_functors(c, d, budget)?;
    let maps: BTreeSet<SMap> = hom_sset(&nc.sset, &nd.sset, budget)?.into_iter().collect();
    let images: BTreeSet<SMap> = functors.iter().map(|f| nerve_map(f, &nc, &nd)).collect();
    Ok(FullFaithfulness {
        functors: functors.len(),
        simplicial_maps: maps.len(),
        bijective: images.len() == functors.len() && images == maps,
    })
}
