//! Simplicial sets truncated at a finite dimension.
//!
//! A [`TruncSSet`] stores every simplex explicitly, degenerate ones included,
//! together with full face and degeneracy tables. Every constructor runs the
//! simplicial identities exhaustively before handing out a value.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::fincat::{Budget, FinCat, Morphism};
use crate::unionfind::UnionFind;
use crate::{Error, Result};

const NONE: usize = usize::MAX;

/// A simplicial set truncated at dimension `dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSSet {
    dim: usize,
    names: Vec<Vec<String>>,
    // faces[n][i][x] = d_i x for 1 <= n, 0 <= i <= n
    faces: Vec<Vec<Vec<usize>>>,
    // degens[n][i][x] = s_i x for n < dim, 0 <= i <= n
    degens: Vec<Vec<Vec<usize>>>,
}

fn violation(detail: String) -> Error {
    Error::InvariantViolation { detail }
}

impl TruncSSet {
    /// Builds a truncated simplicial set from explicit tables and checks the
    /// simplicial identities.
    pub fn new(
        names: Vec<Vec<String>>,
        faces: Vec<Vec<Vec<usize>>>,
        degens: Vec<Vec<Vec<usize>>>,
    ) -> Result<TruncSSet> {
        if names.is_empty() {
            return Err(Error::InvalidArgument("a simplicial set needs at least level 0".into()));
        }
        let dim = names.len() - 1;
        if faces.len() != dim + 1 || degens.len() != dim + 1 {
            return Err(violation(format!("tables do not cover levels 0..={dim}")));
        }
        for n in 0..=dim {
            let want_faces = if n == 0 { 0 } else { n + 1 };
            let want_degens = if n == dim { 0 } else { n + 1 };
            if faces[n].len() != want_faces || degens[n].len() != want_degens {
                return Err(violation(format!("wrong number of face or degeneracy maps at level {n}")));
            }
            for (i, t) in faces[n].iter().enumerate() {
                if t.len() != names[n].len() || t.iter().any(|&y| y >= names[n - 1].len()) {
                    return Err(violation(format!("d_{i} on level {n} is not a map X_{n} -> X_{}", n - 1)));
                }
            }
            for (i, t) in degens[n].iter().enumerate() {
                if t.len() != names[n].len() || t.iter().any(|&y| y >= names[n + 1].len()) {
                    return Err(violation(format!("s_{i} on level {n} is not a map X_{n} -> X_{}", n + 1)));
                }
            }
        }
        let x = TruncSSet {
            dim,
            names,
            faces,
            degens,
        };
        x.validate()?;
        Ok(x)
    }

    /// Builds the tables by calling `face(n, i, x)` and `degen(n, i, x)`.
    pub fn build(
        names: Vec<Vec<String>>,
        face: impl Fn(usize, usize, usize) -> usize,
        degen: impl Fn(usize, usize, usize) -> usize,
    ) -> Result<TruncSSet> {
        let dim = names.len().saturating_sub(1);
        let mut faces = Vec::with_capacity(dim + 1);
        let mut degens = Vec::with_capacity(dim + 1);
        for n in 0..names.len() {
            let size = names[n].len();
            let fs = if n == 0 {
                Vec::new()
            } else {
                (0..=n).map(|i| (0..size).map(|x| face(n, i, x)).collect()).collect()
            };
            let ds = if n == dim {
                Vec::new()
            } else {
                (0..=n).map(|i| (0..size).map(|x| degen(n, i, x)).collect()).collect()
            };
            faces.push(fs);
            degens.push(ds);
        }
        TruncSSet::new(names, faces, degens)
    }

    fn validate(&self) -> Result<()> {
        let dim = self.dim;
        for n in 2..=dim {
            for x in 0..self.size(n) {
                for j in 1..=n {
                    for i in 0..j {
                        let lhs = self.face(n - 1, i, self.face(n, j, x));
                        let rhs = self.face(n - 1, j - 1, self.face(n, i, x));
                        if lhs != rhs {
                            return Err(violation(format!(
                                "d_{i} d_{j} != d_{} d_{i} on {}",
                                j - 1,
                                self.names[n][x]
                            )));
                        }
                    }
                }
            }
        }
        for n in 0..dim.saturating_sub(1) {
            for x in 0..self.size(n) {
                for j in 0..=n {
                    for i in 0..=j {
                        let lhs = self.degen(n + 1, i, self.degen(n, j, x));
                        let rhs = self.degen(n + 1, j + 1, self.degen(n, i, x));
                        if lhs != rhs {
                            return Err(violation(format!(
                                "s_{i} s_{j} != s_{} s_{i} on {}",
                                j + 1,
                                self.names[n][x]
                            )));
                        }
                    }
                }
            }
        }
        for n in 0..dim {
            for x in 0..self.size(n) {
                for j in 0..=n {
                    let y = self.degen(n, j, x);
                    for i in 0..=n + 1 {
                        let lhs = self.face(n + 1, i, y);
                        let rhs = if i == j || i == j + 1 {
                            x
                        } else if i < j {
                            self.degen(n - 1, j - 1, self.face(n, i, x))
                        } else {
                            self.degen(n - 1, j, self.face(n, i - 1, x))
                        };
                        if lhs != rhs {
                            return Err(violation(format!(
                                "d_{i} s_{j} violates the simplicial identities on {}",
                                self.names[n][x]
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn size(&self, n: usize) -> usize {
        self.names[n].len()
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.names.iter().map(Vec::len).collect()
    }

    pub fn names(&self, n: usize) -> &[String] {
        &self.names[n]
    }

    pub fn name(&self, n: usize, x: usize) -> &str {
        &self.names[n][x]
    }

    pub fn simplex_index(&self, n: usize, name: &str) -> Option<usize> {
        self.names.get(n)?.iter().position(|s| s == name)
    }

    /// `d_i x` for `x` in level `n >= 1`.
    pub fn face(&self, n: usize, i: usize, x: usize) -> usize {
        self.faces[n][i][x]
    }

    /// `s_i x` for `x` in level `n < dim`.
    pub fn degen(&self, n: usize, i: usize, x: usize) -> usize {
        self.degens[n][i][x]
    }

    pub fn face_table(&self, n: usize, i: usize) -> &[usize] {
        &self.faces[n][i]
    }

    pub fn degen_table(&self, n: usize, i: usize) -> &[usize] {
        &self.degens[n][i]
    }

    /// The vertices `x|{0}, ..., x|{n}` of an `n`-simplex.
    pub fn vertices_of(&self, n: usize, x: usize) -> Vec<usize> {
        (0..=n).map(|k| self.act(n, x, &[k])).collect()
    }

    /// `X(theta)(x)` for a monotone `theta : [m] -> [n]` given as its value
    /// sequence, with `x` in level `n` and `m <= dim`.
    pub fn act(&self, n: usize, x: usize, theta: &[usize]) -> usize {
        debug_assert!(theta.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(theta.iter().all(|&v| v <= n));
        // injective part first: drop every missing vertex, highest first
        let mut level = n;
        let mut cur = x;
        let present: BTreeSet<usize> = theta.iter().copied().collect();
        for i in (0..=n).rev() {
            if !present.contains(&i) {
                cur = self.face(level, i, cur);
                level -= 1;
            }
        }
        let rank: BTreeMap<usize, usize> = present.iter().enumerate().map(|(r, &v)| (v, r)).collect();
        let sigma: Vec<usize> = theta.iter().map(|v| rank[v]).collect();
        self.apply_surjection(cur, &sigma)
    }

    fn apply_surjection(&self, x: usize, sigma: &[usize]) -> usize {
        let ops = surjection_to_ops(sigma);
        let mut level = sigma.last().copied().unwrap_or(0);
        let mut cur = x;
        for &i in ops.iter().rev() {
            cur = self.degen(level, i, cur);
            level += 1;
        }
        cur
    }

    /// For each degenerate simplex, some `(i, y)` with `x = s_i y`.
    pub fn degeneracy_reps(&self) -> Vec<Vec<Option<(usize, usize)>>> {
        let mut reps: Vec<Vec<Option<(usize, usize)>>> = self.names.iter().map(|l| vec![None; l.len()]).collect();
        for n in 0..self.dim {
            for i in 0..=n {
                for y in 0..self.size(n) {
                    let x = self.degen(n, i, y);
                    if reps[n + 1][x].is_none() {
                        reps[n + 1][x] = Some((i, y));
                    }
                }
            }
        }
        reps
    }

    pub fn is_degenerate(&self, n: usize, x: usize) -> bool {
        n > 0 && (0..n).any(|i| self.degen(n - 1, i, self.face(n, i, x)) == x)
    }

    /// The truncation to levels `0..=n`.
    pub fn truncate(&self, n: usize) -> Result<TruncSSet> {
        if n > self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: n,
            });
        }
        let mut faces = self.faces[..=n].to_vec();
        let mut degens = self.degens[..=n].to_vec();
        faces.truncate(n + 1);
        degens[n] = Vec::new();
        Ok(TruncSSet {
            dim: n,
            names: self.names[..=n].to_vec(),
            faces,
            degens,
        })
    }
}

/// Positions `t` with `sigma[t] == sigma[t + 1]`, descending: the normalized
/// degeneracy word (outermost operator first) of a monotone surjection.
pub fn surjection_to_ops(sigma: &[usize]) -> Vec<usize> {
    let mut ops: Vec<usize> = (0..sigma.len().saturating_sub(1)).filter(|&t| sigma[t] == sigma[t + 1]).collect();
    ops.reverse();
    ops
}

/// The surjection `[top] -> [top - ops.len()]` acting as `s_{ops[0]} s_{ops[1]} ...`.
pub fn ops_to_surjection(ops: &[usize], top: usize) -> Vec<usize> {
    (0..=top)
        .map(|t| ops.iter().fold(t, |v, &i| if v <= i { v } else { v - 1 }))
        .collect()
}

/// Normalizes a degeneracy word applied to a simplex of dimension `base_dim`
/// into strictly decreasing form. Returns `None` if an index is out of range.
pub fn normalize_degeneracies(ops: &[usize], base_dim: usize) -> Option<Vec<usize>> {
    let mut level = base_dim;
    for &i in ops.iter().rev() {
        if i > level {
            return None;
        }
        level += 1;
    }
    Some(surjection_to_ops(&ops_to_surjection(ops, level)))
}

/// All monotone maps `[k] -> [n]` as value sequences, in lexicographic order.
pub fn monotone_sequences(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(len: usize, lo: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in lo..=n {
            cur.push(v);
            go(len, v, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k + 1, 0, n, &mut Vec::new(), &mut out);
    out
}

fn seq_name(seq: &[usize], n: usize) -> String {
    if n < 10 {
        seq.iter().map(|v| char::from(b'0' + *v as u8)).collect()
    } else {
        seq.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    }
}

/// Composite `theta . tau` of monotone maps given as value sequences.
fn compose_seq(theta: &[usize], tau: &[usize]) -> Vec<usize> {
    tau.iter().map(|&t| theta[t]).collect()
}

fn coface(m: usize, i: usize) -> Vec<usize> {
    (0..=m).filter(|&t| t != i).collect()
}

fn codegeneracy(m: usize, i: usize) -> Vec<usize> {
    (0..=m + 1).map(|t| if t <= i { t } else { t - 1 }).collect()
}

fn drop_at(seq: &[usize], i: usize) -> Vec<usize> {
    let mut s = seq.to_vec();
    s.remove(i);
    s
}

fn dup_at(seq: &[usize], i: usize) -> Vec<usize> {
    let mut s = seq.to_vec();
    s.insert(i, seq[i]);
    s
}

/// The standard simplex `Δⁿ` truncated at `dim`: level `k` is the set of
/// monotone maps `[k] -> [n]`, named by their value sequences.
pub fn standard_simplex(n: usize, dim: usize) -> TruncSSet {
    simplex_sub(n, dim, |_| true).expect("the standard simplex is a simplicial set").sset
}

/// A simplicial set together with a levelwise-injective map into another.
#[derive(Clone, Debug)]
pub struct Included {
    pub sset: TruncSSet,
    pub inclusion: SMap,
}

fn simplex_sub(n: usize, dim: usize, keep: impl Fn(&[usize]) -> bool) -> Result<Included> {
    let levels: Vec<Vec<Vec<usize>>> = (0..=dim)
        .map(|k| monotone_sequences(k, n).into_iter().filter(|s| keep(s)).collect())
        .collect();
    let index = |k: usize, s: &[usize]| levels[k].binary_search_by(|t| t.as_slice().cmp(s)).expect("closed");
    let names = levels.iter().map(|l| l.iter().map(|s| seq_name(s, n)).collect()).collect();
    let sset = TruncSSet::build(
        names,
        |k, i, x| index(k - 1, &drop_at(&levels[k][x], i)),
        |k, i, x| index(k + 1, &dup_at(&levels[k][x], i)),
    )?;
    let full: Vec<Vec<Vec<usize>>> = (0..=dim).map(|k| monotone_sequences(k, n)).collect();
    let inclusion = SMap {
        levels: levels
            .iter()
            .enumerate()
            .map(|(k, l)| l.iter().map(|s| full[k].binary_search(s).unwrap()).collect())
            .collect(),
    };
    Ok(Included { sset, inclusion })
}

/// `∂Δⁿ`: every simplex of `Δⁿ` that misses some vertex.
pub fn boundary(n: usize, dim: usize) -> Included {
    simplex_sub(n, dim, |s| (0..=n).any(|v| !s.contains(&v))).expect("boundary is closed")
}

/// The spine `Iₙ`: simplices of `Δⁿ` supported on a single edge `{k, k+1}`.
pub fn spine(n: usize, dim: usize) -> Included {
    simplex_sub(n, dim, |s| s.last().unwrap() - s.first().unwrap() <= 1).expect("spine is closed")
}

/// The sub-simplicial set on the simplices marked in `keep`.
pub fn subobject(x: &TruncSSet, keep: &[Vec<bool>]) -> Result<Included> {
    let mut new_index: Vec<Vec<usize>> = Vec::new();
    let mut old_index: Vec<Vec<usize>> = Vec::new();
    for n in 0..=x.dim {
        let mut ni = vec![NONE; x.size(n)];
        let mut oi = Vec::new();
        for s in 0..x.size(n) {
            if keep[n][s] {
                ni[s] = oi.len();
                oi.push(s);
            }
        }
        new_index.push(ni);
        old_index.push(oi);
    }
    for n in 0..=x.dim {
        for &s in &old_index[n] {
            let closed = (n == 0 || (0..=n).all(|i| keep[n - 1][x.face(n, i, s)]))
                && (n == x.dim || (0..=n).all(|i| keep[n + 1][x.degen(n, i, s)]));
            if !closed {
                return Err(violation(format!("{} is kept but one of its faces or degeneracies is not", x.name(n, s))));
            }
        }
    }
    let names = old_index.iter().enumerate().map(|(n, l)| l.iter().map(|&s| x.names[n][s].clone()).collect()).collect();
    let sset = TruncSSet::build(
        names,
        |n, i, s| new_index[n - 1][x.face(n, i, old_index[n][s])],
        |n, i, s| new_index[n + 1][x.degen(n, i, old_index[n][s])],
    )?;
    Ok(Included {
        sset,
        inclusion: SMap { levels: old_index },
    })
}

/// A simplicial map, stored levelwise.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SMap {
    levels: Vec<Vec<usize>>,
}

impl SMap {
    pub fn new(x: &TruncSSet, y: &TruncSSet, levels: Vec<Vec<usize>>) -> Result<SMap> {
        let f = SMap { levels };
        f.validate(x, y)?;
        Ok(f)
    }

    pub fn identity(x: &TruncSSet) -> SMap {
        SMap {
            levels: (0..=x.dim).map(|n| (0..x.size(n)).collect()).collect(),
        }
    }

    pub fn levels(&self) -> &[Vec<usize>] {
        &self.levels
    }

    pub fn level(&self, n: usize) -> &[usize] {
        &self.levels[n]
    }

    pub fn apply(&self, n: usize, x: usize) -> usize {
        self.levels[n][x]
    }

    /// `next . self`.
    pub fn then(&self, next: &SMap) -> SMap {
        SMap {
            levels: self
                .levels
                .iter()
                .zip(&next.levels)
                .map(|(a, b)| a.iter().map(|&x| b[x]).collect())
                .collect(),
        }
    }

    pub fn validate(&self, x: &TruncSSet, y: &TruncSSet) -> Result<()> {
        let bad = |detail: String| Error::NotASimplicialMap { detail };
        if x.dim != y.dim {
            return Err(Error::DimensionMismatch {
                expected: x.dim,
                found: y.dim,
            });
        }
        if self.levels.len() != x.dim + 1 {
            return Err(bad("wrong number of levels".into()));
        }
        for n in 0..=x.dim {
            if self.levels[n].len() != x.size(n) || self.levels[n].iter().any(|&v| v >= y.size(n)) {
                return Err(bad(format!("level {n} is not a map X_{n} -> Y_{n}")));
            }
        }
        for n in 0..=x.dim {
            for s in 0..x.size(n) {
                let fs = self.levels[n][s];
                if n > 0 {
                    for i in 0..=n {
                        if self.levels[n - 1][x.face(n, i, s)] != y.face(n, i, fs) {
                            return Err(bad(format!("does not commute with d_{i} at {}", x.name(n, s))));
                        }
                    }
                }
                if n < x.dim {
                    for i in 0..=n {
                        if self.levels[n + 1][x.degen(n, i, s)] != y.degen(n, i, fs) {
                            return Err(bad(format!("does not commute with s_{i} at {}", x.name(n, s))));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Levelwise bijective, hence an isomorphism.
    pub fn is_iso(&self, y: &TruncSSet) -> bool {
        self.levels.iter().enumerate().all(|(n, l)| {
            let set: BTreeSet<usize> = l.iter().copied().collect();
            l.len() == y.size(n) && set.len() == l.len()
        })
    }

    pub fn is_injective(&self) -> bool {
        self.levels.iter().all(|l| l.iter().collect::<BTreeSet<_>>().len() == l.len())
    }
}

/// All simplicial maps `x -> y`.
pub fn hom_sset(x: &TruncSSet, y: &TruncSSet, budget: Budget) -> Result<Vec<SMap>> {
    if x.dim != y.dim {
        return Err(Error::DimensionMismatch {
            expected: x.dim,
            found: y.dim,
        });
    }
    let reps = x.degeneracy_reps();
    let nondeg: Vec<Vec<usize>> = reps
        .iter()
        .map(|l| l.iter().enumerate().filter(|(_, r)| r.is_none()).map(|(s, _)| s).collect())
        .collect();
    let mut index = vec![BTreeMap::new(); y.dim + 1];
    for n in 1..=y.dim {
        for s in 0..y.size(n) {
            let key: Vec<usize> = (0..=n).map(|i| y.face(n, i, s)).collect();
            index[n].entry(key).or_insert_with(Vec::new).push(s);
        }
    }
    let mut search = HomSearch {
        x,
        y,
        reps,
        nondeg,
        index,
        val: (0..=x.dim).map(|n| vec![NONE; x.size(n)]).collect(),
        out: Vec::new(),
        budget,
        steps: 0,
    };
    search.level(0, 0)?;
    Ok(search.out)
}

struct HomSearch<'a> {
    x: &'a TruncSSet,
    y: &'a TruncSSet,
    reps: Vec<Vec<Option<(usize, usize)>>>,
    nondeg: Vec<Vec<usize>>,
    index: Vec<BTreeMap<Vec<usize>, Vec<usize>>>,
    val: Vec<Vec<usize>>,
    out: Vec<SMap>,
    budget: Budget,
    steps: u64,
}

impl HomSearch<'_> {
    fn level(&mut self, n: usize, k: usize) -> Result<()> {
        if k == 0 && n > 0 {
            for s in 0..self.x.size(n) {
                if let Some((i, t)) = self.reps[n][s] {
                    self.val[n][s] = self.y.degen(n - 1, i, self.val[n - 1][t]);
                }
            }
        }
        if k == self.nondeg[n].len() {
            if n == self.x.dim {
                let f = SMap {
                    levels: self.val.clone(),
                };
                debug_assert!(f.validate(self.x, self.y).is_ok());
                if self.out.len() >= self.budget.max_items {
                    return Err(Error::BudgetExceeded {
                        what: "simplicial maps",
                        limit: self.budget.max_items as u64,
                    });
                }
                self.out.push(f);
                return Ok(());
            }
            return self.level(n + 1, 0);
        }
        let s = self.nondeg[n][k];
        let candidates: Vec<usize> = if n == 0 {
            (0..self.y.size(0)).collect()
        } else {
            let key: Vec<usize> = (0..=n).map(|i| self.val[n - 1][self.x.face(n, i, s)]).collect();
            self.index[n].get(&key).cloned().unwrap_or_default()
        };
        for c in candidates {
            self.steps += 1;
            if self.steps > self.budget.max_steps {
                return Err(Error::BudgetExceeded {
                    what: "simplicial map search steps",
                    limit: self.budget.max_steps,
                });
            }
            self.val[n][s] = c;
            self.level(n, k + 1)?;
        }
        Ok(())
    }
}

/// A composable chain of edges with the `n`-simplices whose spine it is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IepWitness {
    pub n: usize,
    /// Edges of the chain, in traversal order.
    pub chain: Vec<usize>,
    /// The `n`-simplices with that spine; empty when no filler exists.
    pub fillers: Vec<usize>,
}

impl IepWitness {
    pub fn chain_names(&self, x: &TruncSSet) -> Vec<String> {
        self.chain.iter().map(|&e| x.name(1, e).to_string()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IepCheck {
    Holds,
    Fails(IepWitness),
}

impl IepCheck {
    pub fn holds(&self) -> bool {
        matches!(self, IepCheck::Holds)
    }
}

/// The spine `(x|{0,1}, ..., x|{n-1,n})` of an `n`-simplex.
pub fn spine_of(x: &TruncSSet, n: usize, s: usize) -> Vec<usize> {
    (0..n).map(|k| x.act(n, s, &[k, k + 1])).collect()
}

/// All composable chains of `n` edges, in lexicographic order.
pub fn edge_chains(x: &TruncSSet, n: usize) -> Vec<Vec<usize>> {
    let mut out_edges = vec![Vec::new(); x.size(0)];
    for e in 0..x.size(1) {
        out_edges[x.face(1, 1, e)].push(e);
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(x: &TruncSSet, n: usize, out_edges: &[Vec<usize>], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let edges: &[usize] = match cur.last() {
            None => &[],
            Some(&e) => &out_edges[x.face(1, 0, e)],
        };
        if cur.is_empty() {
            for e in 0..x.size(1) {
                cur.push(e);
                go(x, n, out_edges, cur, out);
                cur.pop();
            }
        } else {
            for &e in edges {
                cur.push(e);
                go(x, n, out_edges, cur, out);
                cur.pop();
            }
        }
    }
    go(x, n, &out_edges, &mut cur, &mut out);
    out
}

/// The `n`-th spine extension property: restriction to the spine is a
/// bijection from `n`-simplices onto composable `n`-chains of edges.
pub fn check_iep(x: &TruncSSet, n: usize) -> Result<IepCheck> {
    if n < 2 || n > x.dim {
        return Err(Error::InvalidArgument(format!(
            "spine extension is checked for 2 <= n <= {}, got {n}",
            x.dim
        )));
    }
    let mut fillers: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for s in 0..x.size(n) {
        fillers.entry(spine_of(x, n, s)).or_default().push(s);
    }
    for chain in edge_chains(x, n) {
        let f = fillers.get(&chain).cloned().unwrap_or_default();
        if f.len() != 1 {
            return Ok(IepCheck::Fails(IepWitness { n, chain, fillers: f }));
        }
    }
    Ok(IepCheck::Holds)
}

/// `sk(X, n)`: simplices that are iterated degeneracies of simplices of
/// dimension at most `n`, with the counit inclusion into `X`.
pub fn sk(x: &TruncSSet, n: usize) -> Result<Included> {
    if n > x.dim {
        return Err(Error::DimensionMismatch {
            expected: x.dim,
            found: n,
        });
    }
    let mut keep: Vec<Vec<bool>> = (0..=x.dim).map(|m| vec![m <= n; x.size(m)]).collect();
    for m in n..x.dim {
        for i in 0..=m {
            for s in 0..x.size(m) {
                if keep[m][s] {
                    keep[m + 1][x.degen(m, i, s)] = true;
                }
            }
        }
    }
    subobject(x, &keep)
}

/// The coskeleton together with its unit `X -> cosk(X, n)`.
#[derive(Clone, Debug)]
pub struct Coskeleton {
    pub sset: TruncSSet,
    pub unit: SMap,
}

/// `cosk(X, n)`: above level `n`, an `m`-simplex is a map from the
/// `n`-truncation of `Δ^m` into the `n`-truncation of `X`.
pub fn cosk(x: &TruncSSet, n: usize, budget: Budget) -> Result<Coskeleton> {
    let xn = x.truncate(n)?;
    let dim = x.dim;
    let seqs: Vec<Vec<Vec<Vec<usize>>>> = (0..=dim)
        .map(|m| (0..=n.min(dim)).map(|k| monotone_sequences(k, m)).collect())
        .collect();
    let mut families: Vec<Vec<SMap>> = vec![Vec::new(); dim + 1];
    let mut lookup: Vec<BTreeMap<Vec<Vec<usize>>, usize>> = vec![BTreeMap::new(); dim + 1];
    for m in n + 1..=dim {
        families[m] = hom_sset(&standard_simplex(m, n), &xn, budget)?;
        for (i, f) in families[m].iter().enumerate() {
            lookup[m].insert(f.levels.clone(), i);
        }
    }
    let seq_index = |m: usize, t: &[usize]| seqs[m][t.len() - 1].binary_search_by(|s| s.as_slice().cmp(t)).unwrap();
    let value = |m: usize, e: usize, theta: &[usize]| -> usize {
        if m <= n {
            x.act(m, e, theta)
        } else {
            families[m][e].apply(theta.len() - 1, seq_index(m, theta))
        }
    };
    let restrict = |m: usize, e: usize, theta: &[usize]| -> usize {
        let target = theta.len() - 1;
        if target <= n {
            return value(m, e, theta);
        }
        let levels: Vec<Vec<usize>> = (0..=n)
            .map(|k| seqs[target][k].iter().map(|tau| value(m, e, &compose_seq(theta, tau))).collect())
            .collect();
        lookup[target][&levels]
    };
    let mut names: Vec<Vec<String>> = Vec::new();
    for m in 0..=dim {
        if m <= n {
            names.push(x.names[m].clone());
        } else {
            names.push(families[m].iter().map(|f| family_name(&xn, f, &seqs[m])).collect());
        }
    }
    let sset = TruncSSet::build(
        names,
        |m, i, e| restrict(m, e, &coface(m, i)),
        |m, i, e| restrict(m, e, &codegeneracy(m, i)),
    )?;
    let unit_levels: Vec<Vec<usize>> = (0..=dim)
        .map(|m| {
            (0..x.size(m))
                .map(|e| {
                    if m <= n {
                        e
                    } else {
                        let levels: Vec<Vec<usize>> =
                            (0..=n).map(|k| seqs[m][k].iter().map(|tau| x.act(m, e, tau)).collect()).collect();
                        lookup[m][&levels]
                    }
                })
                .collect()
        })
        .collect();
    let unit = SMap::new(x, &sset, unit_levels)?;
    Ok(Coskeleton { sset, unit })
}

fn family_name(xn: &TruncSSet, f: &SMap, seqs: &[Vec<Vec<usize>>]) -> String {
    let parts: Vec<String> = seqs
        .iter()
        .enumerate()
        .map(|(k, level)| {
            level
                .iter()
                .enumerate()
                .filter(|(_, s)| s.windows(2).all(|w| w[0] < w[1]))
                .map(|(i, _)| xn.name(k, f.apply(k, i)).to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    format!("<{}>", parts.join("|"))
}

/// A diagram of truncated simplicial sets indexed by a finite category.
#[derive(Clone, Debug)]
pub struct SSetDiagram {
    pub index: FinCat,
    pub values: Vec<TruncSSet>,
    /// One simplicial map per morphism of `index`.
    pub maps: Vec<SMap>,
}

impl SSetDiagram {
    pub fn new(index: FinCat, values: Vec<TruncSSet>, maps: Vec<SMap>) -> Result<SSetDiagram> {
        if values.len() != index.num_objects() || maps.len() != index.num_morphisms() {
            return Err(Error::NotAFunctor {
                detail: "diagram must give one value per object and one map per morphism".into(),
            });
        }
        if let Some(first) = values.first() {
            if let Some(v) = values.iter().find(|v| v.dim != first.dim) {
                return Err(Error::DimensionMismatch {
                    expected: first.dim,
                    found: v.dim,
                });
            }
        }
        for (u, f) in maps.iter().enumerate() {
            let m = index.morphism(u);
            f.validate(&values[m.src], &values[m.tgt])?;
        }
        for a in 0..index.num_objects() {
            if maps[index.identity(a)] != SMap::identity(&values[a]) {
                return Err(Error::NotAFunctor {
                    detail: format!("identity of {} is not sent to an identity", index.object_name(a)),
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
        Ok(SSetDiagram { index, values, maps })
    }

    /// Discrete diagram on the given simplicial sets.
    pub fn discrete(values: Vec<TruncSSet>) -> Result<SSetDiagram> {
        let names: Vec<String> = (0..values.len()).map(|i| i.to_string()).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let index = crate::samples::discrete(&refs);
        let maps = values.iter().map(SMap::identity).collect();
        SSetDiagram::new(index, values, maps)
    }

    fn dim(&self) -> Option<usize> {
        self.values.first().map(|v| v.dim)
    }
}

/// A levelwise colimit or limit with its universal (co)cone.
#[derive(Clone, Debug)]
pub struct SSetCone {
    pub sset: TruncSSet,
    /// Cocone maps `F(j) -> colim` or cone maps `lim -> F(j)`, per object.
    pub legs: Vec<SMap>,
}

/// Levelwise colimit: the disjoint union quotiented by `x ~ F(u)(x)`.
/// Classes are represented by their least element in input order.
pub fn colim_sset(diagram: &SSetDiagram, dim: usize) -> Result<SSetCone> {
    let dim = diagram.dim().unwrap_or(dim);
    let objs = diagram.values.len();
    let mut names = Vec::new();
    let mut class_of: Vec<Vec<usize>> = Vec::new();
    let mut offsets: Vec<Vec<usize>> = Vec::new();
    let mut reps: Vec<Vec<(usize, usize)>> = Vec::new();
    for n in 0..=dim {
        let mut off = Vec::with_capacity(objs);
        let mut total = 0;
        for v in &diagram.values {
            off.push(total);
            total += v.size(n);
        }
        let mut uf = UnionFind::new(total);
        for (u, f) in diagram.maps.iter().enumerate() {
            let m = diagram.index.morphism(u);
            for s in 0..diagram.values[m.src].size(n) {
                uf.union(off[m.src] + s, off[m.tgt] + f.apply(n, s));
            }
        }
        let (classes, count) = uf.classes();
        let mut rep = vec![(NONE, NONE); count];
        for j in (0..objs).rev() {
            for s in (0..diagram.values[j].size(n)).rev() {
                rep[classes[off[j] + s]] = (j, s);
            }
        }
        let raw: Vec<String> = rep.iter().map(|&(j, s)| diagram.values[j].name(n, s).to_string()).collect();
        names.push(disambiguate(raw, |c| diagram.index.object_name(rep[c].0).to_string()));
        class_of.push(classes);
        offsets.push(off);
        reps.push(rep);
    }
    let sset = TruncSSet::build(
        names,
        |n, i, c| {
            let (j, s) = reps[n][c];
            class_of[n - 1][offsets[n - 1][j] + diagram.values[j].face(n, i, s)]
        },
        |n, i, c| {
            let (j, s) = reps[n][c];
            class_of[n + 1][offsets[n + 1][j] + diagram.values[j].degen(n, i, s)]
        },
    )?;
    let legs = (0..objs)
        .map(|j| {
            let levels = (0..=dim)
                .map(|n| (0..diagram.values[j].size(n)).map(|s| class_of[n][offsets[n][j] + s]).collect())
                .collect();
            SMap::new(&diagram.values[j], &sset, levels)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SSetCone { sset, legs })
}

fn disambiguate(raw: Vec<String>, tag: impl Fn(usize) -> String) -> Vec<String> {
    let mut count: BTreeMap<&str, usize> = BTreeMap::new();
    for s in &raw {
        *count.entry(s.as_str()).or_default() += 1;
    }
    raw.iter()
        .enumerate()
        .map(|(c, s)| if count[s.as_str()] > 1 { format!("{s}@{}", tag(c)) } else { s.clone() })
        .collect()
}

/// Levelwise limit: compatible families `(x_j)` with `F(u)(x_a) = x_b`.
/// An empty diagram gives the terminal simplicial set of dimension `dim`.
pub fn lim_sset(diagram: &SSetDiagram, dim: usize, budget: Budget) -> Result<SSetCone> {
    let dim = diagram.dim().unwrap_or(dim);
    let objs = diagram.values.len();
    let mut constraints: Vec<Vec<usize>> = vec![Vec::new(); objs];
    for u in 0..diagram.index.num_morphisms() {
        let m = diagram.index.morphism(u);
        if !diagram.index.is_identity(u) {
            constraints[m.src.max(m.tgt)].push(u);
        }
    }
    let mut families: Vec<Vec<Vec<usize>>> = Vec::new();
    for n in 0..=dim {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        lim_level(diagram, &constraints, n, &mut cur, &mut out, budget)?;
        families.push(out);
    }
    let lookup: Vec<BTreeMap<Vec<usize>, usize>> = families
        .iter()
        .map(|l| l.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect())
        .collect();
    let names = families
        .iter()
        .enumerate()
        .map(|(n, l)| {
            l.iter()
                .map(|f| {
                    let parts: Vec<&str> = f.iter().enumerate().map(|(j, &s)| diagram.values[j].name(n, s)).collect();
                    format!("({})", parts.join(","))
                })
                .collect()
        })
        .collect();
    let sset = TruncSSet::build(
        names,
        |n, i, e| {
            let f: Vec<usize> =
                families[n][e].iter().enumerate().map(|(j, &s)| diagram.values[j].face(n, i, s)).collect();
            lookup[n - 1][&f]
        },
        |n, i, e| {
            let f: Vec<usize> =
                families[n][e].iter().enumerate().map(|(j, &s)| diagram.values[j].degen(n, i, s)).collect();
            lookup[n + 1][&f]
        },
    )?;
    let legs = (0..objs)
        .map(|j| {
            let levels = families.iter().map(|l| l.iter().map(|f| f[j]).collect()).collect();
            SMap::new(&sset, &diagram.values[j], levels)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SSetCone { sset, legs })
}

fn lim_level(
    diagram: &SSetDiagram,
    constraints: &[Vec<usize>],
    n: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    budget: Budget,
) -> Result<()> {
    let j = cur.len();
    if j == diagram.values.len() {
        if out.len() >= budget.max_items {
            return Err(Error::BudgetExceeded {
                what: "limit simplices",
                limit: budget.max_items as u64,
            });
        }
        out.push(cur.clone());
        return Ok(());
    }
    'cand: for s in 0..diagram.values[j].size(n) {
        cur.push(s);
        for &u in &constraints[j] {
            let m = diagram.index.morphism(u);
            if diagram.maps[u].apply(n, cur[m.src]) != cur[m.tgt] {
                cur.pop();
                continue 'cand;
            }
        }
        lim_level(diagram, constraints, n, cur, out, budget)?;
        cur.pop();
    }
    Ok(())
}

pub fn coproduct_sset(values: Vec<TruncSSet>, dim: usize) -> Result<SSetCone> {
    colim_sset(&SSetDiagram::discrete(values)?, dim)
}

pub fn product_sset(values: Vec<TruncSSet>, dim: usize, budget: Budget) -> Result<SSetCone> {
    lim_sset(&SSetDiagram::discrete(values)?, dim, budget)
}

/// Connected components: the coequalizer of `d_0, d_1 : X_1 -> X_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pi0 {
    pub count: usize,
    pub class_of: Vec<usize>,
}

pub fn pi0_sset(x: &TruncSSet) -> Pi0 {
    let mut uf = UnionFind::new(x.size(0));
    if x.dim >= 1 {
        for e in 0..x.size(1) {
            uf.union(x.face(1, 0, e), x.face(1, 1, e));
        }
    }
    let (class_of, count) = uf.classes();
    Pi0 { count, class_of }
}

/// Nondegenerate simplices of level `n`.
pub fn nondegenerate(x: &TruncSSet, n: usize) -> Vec<usize> {
    (0..x.size(n)).filter(|&s| !x.is_degenerate(n, s)).collect()
}

/// A degeneracy word `s_{ops[0]} s_{ops[1]} ... base`; `ops` is empty for
/// a nondegenerate simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegWord {
    pub ops: Vec<usize>,
    pub base: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NondegSimplex {
    pub name: String,
    /// `d_0 .. d_n` as degeneracy words over lower nondegenerate simplices;
    /// empty at level 0.
    pub faces: Vec<DegWord>,
}

/// A simplicial set given by its nondegenerate simplices only. Levels past
/// the last nonempty one may be omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NondegPresentation {
    pub dim: usize,
    /// `levels[n]` lists the nondegenerate `n`-simplices; `base` indices in
    /// face words refer to positions in these lists.
    pub levels: Vec<Vec<NondegSimplex>>,
}

/// Eilenberg–Zilber decomposition: `x = s_{ops} base` with `base`
/// nondegenerate, `ops` strictly decreasing. `base` indexes level
/// `n - ops.len()` of `x`.
pub fn ez_decompose(x: &TruncSSet, n: usize, s: usize) -> DegWord {
    let mut ops = Vec::new();
    let (mut level, mut cur) = (n, s);
    'down: while level > 0 {
        for i in 0..level {
            let y = x.face(level, i, cur);
            if x.degen(level - 1, i, y) == cur {
                ops.push(i);
                cur = y;
                level -= 1;
                continue 'down;
            }
        }
        break;
    }
    let ops = surjection_to_ops(&ops_to_surjection(&ops, n));
    DegWord { ops, base: cur }
}

/// Expands a nondegenerate presentation into explicit levels. A simplex of
/// level `m` is a pair of a monotone surjection `[m] -> [k]` and a
/// nondegenerate `k`-simplex.
pub fn from_nondeg(p: &NondegPresentation) -> Result<TruncSSet> {
    let bad = |detail: String| Error::MalformedPresentation { detail };
    let dim = p.dim;
    if p.levels.len() > dim + 1 {
        return Err(bad(format!("simplices above dimension {dim}")));
    }
    let nd = |k: usize| p.levels.get(k).map(Vec::as_slice).unwrap_or(&[]);
    let mut face_sur: Vec<Vec<Vec<(Vec<usize>, usize)>>> = Vec::new();
    for k in 0..=dim {
        let mut per = Vec::new();
        for z in nd(k) {
            let want = if k == 0 { 0 } else { k + 1 };
            if z.faces.len() != want {
                return Err(bad(format!("{} needs {want} faces, has {}", z.name, z.faces.len())));
            }
            let mut fs = Vec::new();
            for w in &z.faces {
                let base_dim = (k - 1).checked_sub(w.ops.len()).ok_or_else(|| bad(format!("face word of {} is too long", z.name)))?;
                if w.base >= nd(base_dim).len() {
                    return Err(bad(format!("face of {} refers to a missing {base_dim}-simplex", z.name)));
                }
                normalize_degeneracies(&w.ops, base_dim).ok_or_else(|| bad(format!("degeneracy index out of range in a face of {}", z.name)))?;
                fs.push((ops_to_surjection(&w.ops, k - 1), w.base));
            }
            per.push(fs);
        }
        face_sur.push(per);
    }
    let mut elems: Vec<Vec<(Vec<usize>, usize)>> = Vec::new();
    let mut index: Vec<BTreeMap<(Vec<usize>, usize), usize>> = Vec::new();
    for m in 0..=dim {
        let mut l = Vec::new();
        for k in (0..=m).rev() {
            let sur: Vec<Vec<usize>> = monotone_sequences(m, k)
                .into_iter()
                .filter(|s| (0..=k).all(|v| s.contains(&v)))
                .collect();
            for sigma in sur {
                for z in 0..nd(k).len() {
                    l.push((sigma.clone(), z));
                }
            }
        }
        index.push(l.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect());
        elems.push(l);
    }
    let names: Vec<Vec<String>> = elems
        .iter()
        .map(|l| {
            l.iter()
                .map(|(sigma, z)| {
                    let k = *sigma.last().unwrap();
                    let mut s = String::new();
                    for op in surjection_to_ops(sigma) {
                        s.push_str(&format!("s{op}."));
                    }
                    s.push_str(&nd(k)[*z].name);
                    s
                })
                .collect()
        })
        .collect();
    let face = |m: usize, i: usize, e: usize| -> usize {
        let (sigma, z) = &elems[m][e];
        let k = *sigma.last().unwrap();
        let tau = drop_at(sigma, i);
        if tau.contains(&sigma[i]) {
            return index[m - 1][&(tau, *z)];
        }
        let j = sigma[i];
        let tau2: Vec<usize> = tau.iter().map(|&v| if v > j { v - 1 } else { v }).collect();
        let (rho, base) = &face_sur[k][*z][j];
        index[m - 1][&(compose_seq(rho, &tau2), *base)]
    };
    let degen = |m: usize, i: usize, e: usize| -> usize {
        let (sigma, z) = &elems[m][e];
        index[m + 1][&(compose_seq(sigma, &codegeneracy(m, i)), *z)]
    };
    TruncSSet::build(names, face, degen).map_err(|e| match e {
        Error::InvariantViolation { detail } => bad(detail),
        other => other,
    })
}

/// The nondegenerate presentation of `x`, without trailing empty levels.
pub fn to_nondeg(x: &TruncSSet) -> NondegPresentation {
    let nds: Vec<Vec<usize>> = (0..=x.dim).map(|n| nondegenerate(x, n)).collect();
    let pos: Vec<BTreeMap<usize, usize>> =
        nds.iter().map(|l| l.iter().enumerate().map(|(i, &s)| (s, i)).collect()).collect();
    let top = nds.iter().rposition(|l| !l.is_empty()).unwrap_or(0);
    let levels = nds[..=top]
        .iter()
        .enumerate()
        .map(|(n, l)| {
            l.iter()
                .map(|&s| NondegSimplex {
                    name: x.name(n, s).to_string(),
                    faces: if n == 0 {
                        Vec::new()
                    } else {
                        (0..=n)
                            .map(|i| {
                                let w = ez_decompose(x, n - 1, x.face(n, i, s));
                                let base_level = n - 1 - w.ops.len();
                                DegWord {
                                    base: pos[base_level][&w.base],
                                    ops: w.ops,
                                }
                            })
                            .collect()
                    },
                })
                .collect()
        })
        .collect();
    NondegPresentation { dim: x.dim, levels }
}

/// The simplex category truncated at `dim`, with each morphism's value
/// sequence.
#[derive(Clone, Debug)]
pub struct SimplexCategory {
    pub cat: FinCat,
    /// `maps[f]` is the value sequence of `f : [a] -> [b]`.
    pub maps: Vec<Vec<usize>>,
}

pub fn simplex_category(dim: usize) -> SimplexCategory {
    let mut morphisms = Vec::new();
    let mut maps = Vec::new();
    let mut identities = vec![0; dim + 1];
    for a in 0..=dim {
        for b in 0..=dim {
            for seq in monotone_sequences(a, b) {
                if a == b && seq.iter().enumerate().all(|(i, &v)| i == v) {
                    identities[a] = morphisms.len();
                }
                morphisms.push(Morphism::new(format!("{}:{a}>{b}", seq_name(&seq, b)), a, b));
                maps.push(seq);
            }
        }
    }
    let lookup: BTreeMap<(usize, Vec<usize>), usize> =
        maps.iter().enumerate().map(|(f, s)| ((morphisms[f].tgt, s.clone()), f)).collect();
    let objects = (0..=dim).map(|k| format!("[{k}]")).collect();
    let ends: Vec<usize> = morphisms.iter().map(|m| m.tgt).collect();
    let cat = FinCat::new(objects, morphisms, identities, |g, f| lookup.get(&(ends[g], compose_seq(&maps[g], &maps[f]))).copied())
        .expect("the simplex category is a category");
    SimplexCategory { cat, maps }
}

/// The simplicial map `Δ^m -> Δ^n` induced by a monotone `theta : [m] -> [n]`.
pub fn simplex_map(theta: &[usize], n: usize, dim: usize) -> SMap {
    let m = theta.len() - 1;
    let levels = (0..=dim)
        .map(|k| {
            let target = monotone_sequences(k, n);
            monotone_sequences(k, m)
                .iter()
                .map(|tau| target.binary_search(&compose_seq(theta, tau)).unwrap())
                .collect()
        })
        .collect();
    SMap { levels }
}
