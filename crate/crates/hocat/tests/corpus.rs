use std::fs;
use std::path::{Path, PathBuf};

use hocat::doc::{parse, print, DocError, Document, Kind, Location, SSetFormat};
use hocat::load::{load_diagram, load_fincat, load_marked, load_quiver, load_sset, store_fincat, store_marked, store_quiver, store_sset};
use hocat_core::fincat::{is_isomorphic, product_cat};
use hocat_core::realize::{colim_cat, lim_cat};
use hocat_core::samples;
use hocat_core::sset::check_iep;
use hocat_core::{Budget, FinCat, WordBudget};

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn corpus() -> Vec<(String, Document)> {
    let mut files: Vec<PathBuf> = fs::read_dir(corpus_dir()).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let text = fs::read_to_string(&p).unwrap();
            let name = p.file_name().unwrap().to_string_lossy().into_owned();
            let doc = parse(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
            (name, doc)
        })
        .collect()
}

fn resolve(p: &str) -> Result<Document, DocError> {
    let text = fs::read_to_string(corpus_dir().join(p)).map_err(|e| DocError::Io {
        loc: Location::default(),
        path: p.into(),
        message: e.to_string(),
    })?;
    parse(&text)
}

fn iso(a: &FinCat, b: &FinCat) -> bool {
    is_isomorphic(a, b, Budget::default()).unwrap().is_some()
}

#[test]
fn every_file_survives_print_and_parse() {
    let docs = corpus();
    assert!(docs.len() >= 15);
    for (name, doc) in docs {
        let again = parse(&print(&doc)).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(again, doc, "{name}");
    }
}

#[test]
fn every_file_loads_and_stores_stably() {
    let wb = WordBudget::default();
    for (name, doc) in corpus() {
        match doc.kind {
            Kind::Category => {
                let c = load_fincat(&doc, wb).unwrap();
                let text = print(&store_fincat(&c, &name));
                let back = load_fincat(&parse(&text).unwrap(), wb).unwrap();
                assert!(iso(&back, &c), "{name}");
                assert_eq!(print(&store_fincat(&back, &name)), text, "{name}");
            }
            Kind::Marked => {
                let m = load_marked(&doc, wb).unwrap();
                let text = print(&store_marked(&m, &name));
                let back = load_marked(&parse(&text).unwrap(), wb).unwrap();
                assert_eq!(print(&store_marked(&back, &name)), text, "{name}");
            }
            Kind::Quiver => {
                let q = load_quiver(&doc).unwrap();
                assert_eq!(store_quiver(&q, &doc.name.text), doc, "{name}");
            }
            Kind::SSet => {
                let x = load_sset(&doc).unwrap();
                assert_eq!(store_sset(&x, &doc.name.text, SSetFormat::Nondeg), doc, "{name}");
                let raw = store_sset(&x, &doc.name.text, SSetFormat::Raw);
                assert_eq!(load_sset(&parse(&print(&raw)).unwrap()).unwrap(), x, "{name}");
            }
            Kind::Diagram => {
                load_diagram(&doc, &mut resolve, wb).unwrap_or_else(|e| panic!("{name}: {e}"));
            }
        }
    }
}

fn named(name: &str) -> Document {
    corpus().into_iter().find(|(n, _)| n == name).unwrap().1
}

#[test]
fn corpus_categories_are_what_they_say() {
    let wb = WordBudget::default();
    let cat = |n: &str| load_fincat(&named(n), wb).unwrap();
    assert!(iso(&cat("arrow.cat"), &samples::arrow()));
    assert!(iso(&cat("two.cat"), &samples::ordinal(2)));
    assert!(iso(&cat("iso.cat"), &samples::walking_iso()));
    assert!(iso(&cat("parallel.cat"), &samples::parallel_pair()));
    assert!(iso(&cat("idempotent.cat"), &samples::idempotent()));
    assert!(iso(&cat("square.cat"), &product_cat(&samples::arrow(), &samples::arrow()).cat));
}

#[test]
fn corpus_simplicial_sets() {
    let x = load_sset(&named("delta2.sset")).unwrap();
    assert_eq!(x.level_sizes(), vec![3, 6, 10]);
    assert!(check_iep(&x, 2).unwrap().holds());
    let b = load_sset(&named("boundary2.sset")).unwrap();
    assert_eq!(b.level_sizes(), vec![3, 6, 9]);
    assert!(!check_iep(&b, 2).unwrap().holds());
}

#[test]
fn corpus_diagrams() {
    let wb = WordBudget::default();
    let glue = load_diagram(&named("glue.diag"), &mut resolve, wb).unwrap();
    let q = colim_cat(&glue).unwrap().materialize(wb).unwrap().finite().unwrap();
    assert!(iso(&q.cat, &samples::ordinal(2)));
    let pair = load_diagram(&named("pair.diag"), &mut resolve, wb).unwrap();
    let l = lim_cat(&pair, Budget::default()).unwrap();
    assert!(iso(&l.cat, &product_cat(&samples::arrow(), &samples::arrow()).cat));
    let ends = load_diagram(&named("endpoints.diag"), &mut resolve, wb).unwrap();
    assert!(!colim_cat(&ends).unwrap().materialize(WordBudget::with_len(6)).unwrap().is_finite());
}
