//! Acceptance run: one PASS/FAIL line per criterion. Exits non-zero when any
//! criterion fails.

use std::collections::BTreeSet;
use std::time::Instant;

use hocat_core::adjoints::{
    finite_set, verify_adjunction, DiscreteObj, FreeUnderlying, ObjIndiscrete, Pi0Discrete,
};
use hocat_core::elements::{weighted_colim_set, weighted_lim_set, SetValuedFunctor, Variance};
use hocat_core::fincat::is_isomorphic;
use hocat_core::localize::{check_localization, is_groupoid, localize_rel, localize_total, MarkedCat};
use hocat_core::nerve::{fully_faithful_check, nerve};
use hocat_core::presentation::{Edge, Path, PresCat};
use hocat_core::realize::{
    check_colimit, check_limit, coeq_cat_direct, colim_cat, hcat, lim_cat, sk2_invariance, CatDiagram,
};
use hocat_core::samples::{self, corpus, random_category, random_functor, random_path, random_presentation};
use hocat_core::sset::{boundary, check_iep, cosk, sk, spine, standard_simplex, IepCheck, TruncSSet};
use hocat_core::words::{materialize, path_functor, replay, word_equal, Materialization, WordTable, WordVerdict};
use hocat_core::{Budget, Error, FinCat, Quiver, Result, WordBudget};
use rand::seq::SliceRandom;
use rand::Rng;

fn iso(a: &FinCat, b: &FinCat) -> bool {
    matches!(is_isomorphic(a, b, Budget::default()), Ok(Some(_)))
}

fn hcat_of(x: &TruncSSet) -> Result<FinCat> {
    Ok(hcat(x)?.materialize(WordBudget::default())?.finite()?.cat)
}

fn c1() -> Result<String> {
    let t = Instant::now();
    for n in 0..=5 {
        let h = hcat_of(&standard_simplex(n, 3))?;
        if !iso(&h, &samples::ordinal(n)) {
            return Err(Error::InvariantViolation {
                detail: format!("h(Δ^{n}) is not [{n}]"),
            });
        }
    }
    let secs = t.elapsed().as_secs_f64();
    if secs >= 1.0 {
        return Err(Error::InvariantViolation {
            detail: format!("took {secs:.2}s"),
        });
    }
    Ok(format!("n = 0..5 in {secs:.3}s"))
}

fn c2() -> Result<String> {
    let mut slowest = 0.0f64;
    for (name, c) in corpus() {
        let t = Instant::now();
        let h = hcat_of(&nerve(&c, 3).sset)?;
        slowest = slowest.max(t.elapsed().as_secs_f64());
        if !iso(&h, &c) {
            return Err(Error::InvariantViolation {
                detail: format!("h(N {name}) is not {name}"),
            });
        }
    }
    if slowest >= 1.0 {
        return Err(Error::InvariantViolation {
            detail: format!("slowest took {slowest:.2}s"),
        });
    }
    Ok(format!("10 corpus categories, slowest {slowest:.3}s"))
}

fn fails_iep(x: &TruncSSet) -> Result<Option<Vec<String>>> {
    for n in 2..=x.dim() {
        if let IepCheck::Fails(w) = check_iep(x, n)? {
            return Ok(Some(w.chain_names(x)));
        }
    }
    Ok(None)
}

fn c3() -> Result<String> {
    let mut checks = 0;
    for (name, c) in corpus() {
        for d in 2..=5 {
            let x = nerve(&c, d).sset;
            for n in 2..=d {
                checks += 1;
                if !check_iep(&x, n)?.holds() {
                    return Err(Error::InvariantViolation {
                        detail: format!("N {name} fails at n={n}, D={d}"),
                    });
                }
            }
        }
    }
    // two edges glued end to end into a loop, and one edge glued into a circle
    let cycle = sk(&nerve(&samples::walking_iso(), 3).sset, 1)?.sset;
    let circle = sk(&nerve(&samples::cyclic(2), 3).sset, 1)?.sset;
    let bad = [
        ("∂Δ²", boundary(2, 3).sset),
        ("I_2", spine(2, 3).sset),
        ("Δ¹⊔Δ¹ glued to a 2-cycle", cycle),
        ("Δ¹ glued to a circle", circle),
    ];
    let mut witnesses = Vec::new();
    for (name, x) in bad {
        match fails_iep(&x)? {
            Some(w) if !w.is_empty() => witnesses.push(format!("{name}: {}", w.join(","))),
            _ => {
                return Err(Error::InvariantViolation {
                    detail: format!("{name} has the spine extension property"),
                })
            }
        }
    }
    Ok(format!("{checks} nerve checks hold; witnesses [{}]", witnesses.join("; ")))
}

fn c4() -> Result<String> {
    let (mut pairs, mut skipped) = (0, 0);
    for (a, c) in corpus() {
        for (b, d) in corpus() {
            match fully_faithful_check(&c, &d, 3, Budget::items(10_000)) {
                Ok(r) if r.bijective && r.functors == r.simplicial_maps => pairs += 1,
                Ok(r) => {
                    return Err(Error::InvariantViolation {
                        detail: format!("{a} -> {b}: {} functors, {} maps", r.functors, r.simplicial_maps),
                    })
                }
                Err(Error::BudgetExceeded { .. }) => skipped += 1,
                Err(e) => return Err(e),
            }
        }
    }
    Ok(format!("{pairs} pairs exact, {skipped} over the 10^4 enumeration cap"))
}

fn c5() -> Result<String> {
    for (name, c) in corpus() {
        let x = nerve(&c, 5).sset;
        let k = cosk(&x, 2, Budget::default())?;
        if !k.unit.is_iso(&k.sset) {
            return Err(Error::InvariantViolation {
                detail: format!("unit at N {name} is not bijective"),
            });
        }
    }
    Ok("10 corpus nerves at dim 5".into())
}

fn c6() -> Result<String> {
    let mut xs = vec![("Δ³".to_string(), standard_simplex(3, 3)), ("Δ⁴".to_string(), standard_simplex(4, 3))];
    xs.extend(corpus().into_iter().map(|(n, c)| (format!("N {n}"), nerve(&c, 3).sset)));
    for (name, x) in &xs {
        if !sk2_invariance(x, WordBudget::default())? {
            return Err(Error::InvariantViolation {
                detail: format!("h(sk2 {name}) differs from h({name})"),
            });
        }
    }
    Ok(format!("{} simplicial sets", xs.len()))
}

/// Words of length `0..=max` from every vertex.
fn words(q: &Quiver, max: usize) -> Vec<Path> {
    let mut out: Vec<Path> = (0..q.num_vertices()).map(Path::empty).collect();
    let mut frontier = out.clone();
    for _ in 0..max {
        let mut next = Vec::new();
        for w in &frontier {
            for e in 0..q.num_edges() {
                if q.edges()[e].src == w.tgt && !q.is_degenerate(e) {
                    next.push(w.then(&Path::edge(q, e)));
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn tables_agree(direct: &WordTable, pipe: &WordTable, translate: &dyn Fn(&Path) -> Path) -> (bool, usize) {
    let ws = words(direct.quiver(), 3);
    let classes: Vec<_> = ws
        .iter()
        .map(|w| (direct.class_of(w), pipe.class_of(&translate(w))))
        .collect();
    let mut compared = 0;
    for i in 0..ws.len() {
        for j in 0..i {
            if (ws[i].src, ws[i].tgt) != (ws[j].src, ws[j].tgt) {
                continue;
            }
            if let ((Some(a), Some(b)), (Some(c), Some(d))) = (classes[i], classes[j]) {
                compared += 1;
                if (a == c) != (b == d) {
                    return (false, compared);
                }
            }
        }
    }
    (true, compared)
}

fn c7() -> Result<String> {
    let mut rng = samples::rng(samples::DEFAULT_SEED);
    let (mut finite, mut partial, mut compared, mut morphisms) = (0, 0, 0, 0);
    let budget = WordBudget::with_len(8);
    let mut done = 0;
    while done < 20 {
        let d = random_category(&mut rng, 3, 8);
        let c = random_category(&mut rng, 3, 8);
        let (Some(f), Some(g)) = (random_functor(&mut rng, &c, &d), random_functor(&mut rng, &c, &d)) else { continue };
        done += 1;
        morphisms += d.num_morphisms();
        let direct = coeq_cat_direct(&c, &d, &f, &g)?;
        let pipe = colim_cat(&CatDiagram::parallel(c.clone(), d.clone(), f.clone(), g.clone())?)?;
        let leg = &pipe.cocone[1];
        let md = materialize(&direct.pres, budget)?;
        let mp = pipe.materialize(budget)?;
        let ok = match (&md, &mp) {
            (Materialization::Finite(qd), Materialization::Finite(qp)) => {
                finite += 1;
                let fd = path_functor(&direct.quotient, &d, qd)?;
                let fp = path_functor(leg, &d, qp)?;
                let kernel_agrees = (0..d.num_morphisms())
                    .all(|h1| (0..d.num_morphisms()).all(|h2| (fd.mor[h1] == fd.mor[h2]) == (fp.mor[h1] == fp.mor[h2])));
                iso(&qd.cat, &qp.cat) && kernel_agrees
            }
            _ => {
                partial += 1;
                let dq = direct.pres.quiver();
                let rep: Vec<usize> = (0..dq.num_edges())
                    .map(|e| (0..d.num_morphisms()).find(|&h| direct.quotient.mor[h] == Path::edge(dq, e)).unwrap())
                    .collect();
                let pq = pipe.hcat.pres.quiver();
                let translate = |w: &Path| {
                    w.edges
                        .iter()
                        .fold(Path::empty(leg.obj[d_object_of(&direct.quotient.obj, w.src)]), |acc, &e| {
                            acc.then(&leg.mor[rep[e]])
                        })
                        .normalized(pq)
                };
                let (ok, n) = tables_agree(md.table(), mp.table(), &translate);
                compared += n;
                ok && n > 0
            }
        };
        if !ok {
            return Err(Error::InvariantViolation {
                detail: format!("instance {done} disagrees"),
            });
        }
    }
    Ok(format!(
        "20 instances over {morphisms} target morphisms: {finite} certified finite and isomorphic, \
         {partial} agree up to bound 8 on {compared} word pairs"
    ))
}

fn d_object_of(obj: &[usize], class: usize) -> usize {
    obj.iter().position(|&k| k == class).unwrap()
}

fn random_diagram<R: Rng>(rng: &mut R) -> Option<CatDiagram> {
    let pool = [
        samples::terminal(),
        samples::arrow(),
        samples::walking_iso(),
        samples::discrete(&["a", "b"]),
        samples::idempotent(),
        samples::parallel_pair(),
    ];
    let mut pick = || pool.choose(rng).unwrap().clone();
    let (a, b, c) = (pick(), pick(), pick());
    match rng.gen_range(0..4) {
        0 => {
            let (f, g) = (random_functor(rng, &a, &b)?, random_functor(rng, &a, &b)?);
            CatDiagram::parallel(a, b, f, g).ok()
        }
        1 => {
            let (f, g) = (random_functor(rng, &a, &b)?, random_functor(rng, &a, &c)?);
            CatDiagram::span(a, b, c, f, g).ok()
        }
        2 => {
            let (f, g) = (random_functor(rng, &a, &c)?, random_functor(rng, &b, &c)?);
            CatDiagram::cospan(a, b, c, f, g).ok()
        }
        _ => CatDiagram::discrete(vec![a, b]).ok(),
    }
}

fn c8() -> Result<String> {
    let mut rng = samples::rng(samples::DEFAULT_SEED ^ 8);
    let probes = [samples::arrow(), samples::walking_iso(), samples::discrete(&["a", "b"])];
    let budget = Budget::default();
    let (mut done, mut comparisons) = (0, 0);
    while done < 10 {
        let Some(d) = random_diagram(&mut rng) else { continue };
        let colim = colim_cat(&d)?;
        let Materialization::Finite(q) = colim.materialize(WordBudget::default())? else { continue };
        let cocone = colim.cocone_functors(&d, &q)?;
        let lim = lim_cat(&d, budget)?;
        for p in &probes {
            let a = check_colimit(&d, &q.cat, &cocone, p, budget)?;
            let b = check_limit(&d, &lim.cat, &lim.cone, p, budget)?;
            comparisons += 2;
            if !a.bijective || !b.bijective {
                return Err(Error::InvariantViolation {
                    detail: format!("diagram {done}: colimit {a:?}, limit {b:?}"),
                });
            }
        }
        done += 1;
    }
    Ok(format!("10 diagrams, {comparisons} bijections"))
}

fn bijective(map: &[usize], size: usize) -> bool {
    map.len() == size && map.iter().copied().collect::<BTreeSet<_>>().len() == size
}

/// Ordinary colimit of a covariant set-valued functor, computed directly.
fn plain_colim_size(base: &FinCat, f: &SetValuedFunctor) -> usize {
    let mut offset = vec![0];
    for c in 0..base.num_objects() {
        offset.push(offset[c] + f.size(c));
    }
    let mut parent: Vec<usize> = (0..offset[base.num_objects()]).collect();
    fn root(p: &mut [usize], x: usize) -> usize {
        if p[x] == x {
            x
        } else {
            let r = root(p, p[x]);
            p[x] = r;
            r
        }
    }
    for m in 0..base.num_morphisms() {
        for y in 0..f.size(base.src(m)) {
            let (a, b) = (offset[base.src(m)] + y, offset[base.tgt(m)] + f.maps[m][y]);
            let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
            parent[ra] = rb;
        }
    }
    (0..parent.len()).filter(|&x| root(&mut parent, x) == x).count()
}

/// Ordinary limit of a covariant set-valued functor by brute force.
fn plain_lim_size(base: &FinCat, f: &SetValuedFunctor) -> usize {
    let n = base.num_objects();
    let mut count = 0;
    let mut choice = vec![0; n];
    loop {
        let ok = (0..base.num_morphisms()).all(|m| f.maps[m][choice[base.src(m)]] == choice[base.tgt(m)]);
        if ok && (0..n).all(|c| f.size(c) > 0) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == n {
                return count;
            }
            choice[k] += 1;
            if choice[k] < f.size(k).max(1) {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn c9() -> Result<String> {
    let mut rng = samples::rng(samples::DEFAULT_SEED ^ 9);
    let bases = corpus();
    let budget = Budget::default();
    for k in 0..5 {
        let (_, base) = &bases[(3 * k + 1) % bases.len()];
        let f = SetValuedFunctor::random(&mut rng, base, Variance::Covariant);
        let w = SetValuedFunctor::random(&mut rng, base, Variance::Contravariant);
        let fail = |law: &str| Error::InvariantViolation {
            detail: format!("functor {k}: {law}"),
        };
        for c in 0..base.num_objects() {
            let id = base.hom(c, c).iter().position(|&h| h == base.identity(c)).unwrap();
            // W ⋆ 𝒴 evaluated at c is W ⋆ C(c, -)
            let r = weighted_colim_set(base, &w, &SetValuedFunctor::hom_from(base, c))?;
            let el = hocat_core::elements::elements(base, &w)?;
            let leg: Vec<usize> = (0..w.size(c)).map(|x| r.legs[el.index_of(c, x).unwrap()][id]).collect();
            if !bijective(&leg, r.size()) {
                return Err(fail("W ⋆ Y ≅ W"));
            }
            let yc = SetValuedFunctor::hom_into(base, c);
            let r = weighted_colim_set(base, &yc, &f)?;
            let e = hocat_core::elements::elements(base, &yc)?.index_of(c, id).unwrap();
            if !bijective(&r.legs[e], r.size()) {
                return Err(fail("Y(c) ⋆ F ≅ F(c)"));
            }
            let hc = SetValuedFunctor::hom_from(base, c);
            let r = weighted_lim_set(base, &hc, &f, budget)?;
            let e = hocat_core::elements::elements(base, &hc)?.index_of(c, id).unwrap();
            if !bijective(&r.legs[e], f.size(c)) || r.size() != f.size(c) {
                return Err(fail("{C(c,-), F} ≅ F(c)"));
            }
        }
        let colim = weighted_colim_set(base, &SetValuedFunctor::singleton(base, Variance::Contravariant), &f)?;
        let lim = weighted_lim_set(base, &SetValuedFunctor::singleton(base, Variance::Covariant), &f, budget)?;
        if colim.size() != plain_colim_size(base, &f) || lim.size() != plain_lim_size(base, &f) {
            return Err(fail("Δ* weights give ordinary (co)limits"));
        }
    }
    Ok("4 unit laws on 5 seeded functors".into())
}

fn c10() -> Result<String> {
    let budget = Budget::default();
    let sets: Vec<Vec<String>> = (0..=3).map(finite_set).collect();
    let cats = vec![
        samples::terminal(),
        samples::arrow(),
        samples::ordinal(2),
        samples::discrete(&["a", "b"]),
        samples::walking_iso(),
        samples::parallel_pair(),
        samples::idempotent(),
        samples::indiscrete(&["a", "b", "c"]),
    ];
    let thin: Vec<FinCat> = vec![
        samples::terminal(),
        samples::arrow(),
        samples::ordinal(2),
        samples::discrete(&["a", "b"]),
        samples::parallel_pair(),
    ];
    let v = |n: usize| (0..n).map(|i| format!("{i}")).collect::<Vec<_>>();
    let reflexive = |n: usize, es: &[(usize, usize)]| {
        let edges = es
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| Edge::new(format!("e{k}"), s, t))
            .collect();
        Quiver::new(v(n), edges).unwrap().adjoin_degeneracies()
    };
    let quivers = vec![
        reflexive(1, &[]),
        reflexive(2, &[]),
        reflexive(2, &[(0, 1)]),
        reflexive(2, &[(0, 1), (0, 1)]),
        reflexive(3, &[(0, 1), (1, 2)]),
    ];
    let reports = [
        ("π0 ⊣ D", verify_adjunction(&Pi0Discrete, &cats, &sets, budget)?),
        ("D ⊣ obj", verify_adjunction(&DiscreteObj, &sets, &cats, budget)?),
        ("obj ⊣ ID", verify_adjunction(&ObjIndiscrete, &cats, &sets, budget)?),
        (
            "free ⊣ underlying",
            verify_adjunction(
                &FreeUnderlying {
                    budget: WordBudget::default(),
                },
                &quivers,
                &thin,
                budget,
            )?,
        ),
    ];
    let mut pairs = 0;
    for (name, r) in &reports {
        if !r.holds() {
            return Err(Error::InvariantViolation {
                detail: format!("{name}: {r:?}"),
            });
        }
        pairs += r.hom_counts.len();
    }
    Ok(format!("4 adjunctions, {pairs} hom-set bijections, triangles exact"))
}

fn c11() -> Result<String> {
    let b = WordBudget::default();
    let l1 = localize_total(&samples::arrow())?.materialize(b)?;
    let l2 = localize_total(&samples::ordinal(2))?.materialize(b)?;
    if !iso(&l1.cat, &samples::walking_iso()) || !is_groupoid(&l1.cat) {
        return Err(Error::InvariantViolation {
            detail: "L[1] is not I".into(),
        });
    }
    if !iso(&l2.cat, &samples::indiscrete(&["a", "b", "c"])) || !is_groupoid(&l2.cat) {
        return Err(Error::InvariantViolation {
            detail: "L[2] is not ID on 3 objects".into(),
        });
    }
    let probes = [
        samples::terminal(),
        samples::arrow(),
        samples::walking_iso(),
        samples::discrete(&["a", "b"]),
        samples::cyclic(2),
        samples::parallel_pair(),
        samples::idempotent(),
    ];
    let mut checked = 0;
    for c in [samples::arrow(), samples::ordinal(2)] {
        let n = c.num_morphisms();
        for mask in 0u32..(1 << n) {
            let marking: Vec<usize> = (0..n).filter(|&m| mask & (1 << m) != 0).collect();
            let loc = localize_rel(&MarkedCat::new(c.clone(), &marking)?)?;
            let q = loc.materialize(b)?;
            for p in &probes {
                let r = check_localization(&loc, &q, p, Budget::default())?;
                checked += 1;
                if !r.bijective {
                    return Err(Error::InvariantViolation {
                        detail: format!("marking {marking:?} against {:?}: {r:?}", p.objects()),
                    });
                }
            }
        }
    }
    Ok(format!("L[1] ≅ I, L[2] ≅ ID3, {checked} universal-property checks"))
}

fn c12() -> Result<String> {
    let mut rng = samples::rng(samples::DEFAULT_SEED ^ 12);
    let (mut equal, mut not_equal, mut unknown) = (0, 0, 0);
    for k in 0..100 {
        let p: PresCat = random_presentation(&mut rng);
        let q = p.quiver().clone();
        let base = WordBudget::default().len_for(&p);
        for _ in 0..5 {
            let start = rng.gen_range(0..q.num_vertices());
            let len = rng.gen_range(0..=4);
            let Some(w1) = random_path(&mut rng, &q, start, len) else { continue };
            let w2 = (0..50)
                .filter_map(|_| {
                    let len = rng.gen_range(0..=4);
                    random_path(&mut rng, &q, start, len)
                })
                .find(|w| w.tgt == w1.tgt)
                .unwrap_or_else(|| w1.clone());
            let small = word_equal(&p, &w1, &w2, WordBudget { max_len: Some(base), max_classes: 5_000 });
            let large = word_equal(&p, &w1, &w2, WordBudget { max_len: Some(2 * base), max_classes: 10_000 });
            for v in [&small, &large] {
                if let WordVerdict::Equal(steps) = v {
                    if replay(&p, &w1, steps) != Some(w2.normalized(&q)) {
                        return Err(Error::InvariantViolation {
                            detail: format!("presentation {k}: witness does not replay"),
                        });
                    }
                }
            }
            if matches!(small, WordVerdict::NotEqual(_)) && matches!(large, WordVerdict::Equal(_)) {
                return Err(Error::InvariantViolation {
                    detail: format!("presentation {k}: NotEqual flipped to Equal"),
                });
            }
            match large {
                WordVerdict::Equal(_) => equal += 1,
                WordVerdict::NotEqual(_) => not_equal += 1,
                WordVerdict::Unknown => unknown += 1,
            }
        }
    }
    Ok(format!("100 presentations: {equal} Equal, {not_equal} NotEqual, {unknown} Unknown, no flips"))
}

fn main() {
    let criteria: [(&str, fn() -> Result<String>); 12] = [
        ("realization of simplices", c1),
        ("reflection round trip", c2),
        ("spine extension characterization", c3),
        ("full faithfulness", c4),
        ("2-coskeletality", c5),
        ("sk2 invariance", c6),
        ("coequalizer agreement", c7),
        ("(co)limit universal properties", c8),
        ("weighted (co)limit unit laws", c9),
        ("adjunction suites", c10),
        ("localization", c11),
        ("word engine soundness", c12),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.2}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {e} ({secs:.2}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
