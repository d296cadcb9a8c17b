//! Graphviz output. Nodes and edges are emitted in index order, so equal
//! inputs give byte-identical text.

use std::fmt::Write;

use hocat_core::localize::{ZigStep, Zigzag};
use hocat_core::sset::nondegenerate;
use hocat_core::{FinCat, Quiver, TruncSSet};

fn esc(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn header(name: &str) -> String {
    format!("digraph {} {{\n  rankdir=LR;\n", esc(name))
}

fn nodes<'a>(out: &mut String, names: impl IntoIterator<Item = &'a String>) {
    for (i, n) in names.into_iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label={}];", esc(n));
    }
}

/// Every non-identity morphism as an arrow. Isomorphisms are drawn bold,
/// marked morphisms red; marked identities are listed as red loops.
pub fn dot_fincat(c: &FinCat, name: &str, marked: &[usize]) -> String {
    let mut out = header(name);
    nodes(&mut out, c.objects());
    for f in 0..c.num_morphisms() {
        let is_marked = marked.contains(&f);
        if c.is_identity(f) && !is_marked {
            continue;
        }
        let m = c.morphism(f);
        let mut attrs = vec![format!("label={}", esc(&m.name))];
        if c.is_isomorphism(f) && !c.is_identity(f) {
            attrs.push("style=bold".into());
        }
        if is_marked {
            attrs.push("color=red".into());
        }
        let _ = writeln!(out, "  n{} -> n{} [{}];", m.src, m.tgt, attrs.join(", "));
    }
    out.push_str("}\n");
    out
}

/// Vertices and nondegenerate edges.
pub fn dot_sset(x: &TruncSSet, name: &str) -> String {
    let mut out = header(name);
    nodes(&mut out, x.names(0));
    if x.dim() >= 1 {
        for e in nondegenerate(x, 1) {
            let _ = writeln!(out, "  n{} -> n{} [label={}];", x.face(1, 1, e), x.face(1, 0, e), esc(x.name(1, e)));
        }
    }
    out.push_str("}\n");
    out
}

/// Vertices and edges; distinguished loops are dashed.
pub fn dot_quiver(q: &Quiver, name: &str) -> String {
    let mut out = header(name);
    nodes(&mut out, q.vertices());
    for (i, e) in q.edges().iter().enumerate() {
        let style = if q.is_degenerate(i) { ", style=dashed" } else { "" };
        let _ = writeln!(out, "  n{} -> n{} [label={}{style}];", e.src, e.tgt, esc(&e.name));
    }
    out.push_str("}\n");
    out
}

/// A zigzag as a path graph, one node per position. Backward steps point
/// against the direction of travel and are dashed.
pub fn dot_zigzag(z: &Zigzag, c: &FinCat, name: &str) -> String {
    let mut out = header(name);
    let mut at = vec![z.src];
    for s in &z.steps {
        at.push(match *s {
            ZigStep::Forward(f) => c.tgt(f),
            ZigStep::Backward(w) => c.src(w),
        });
    }
    let labels: Vec<String> = at.iter().map(|&o| c.object_name(o).to_string()).collect();
    nodes(&mut out, &labels);
    for (i, s) in z.steps.iter().enumerate() {
        let _ = match *s {
            ZigStep::Forward(f) => writeln!(out, "  n{} -> n{} [label={}];", i, i + 1, esc(c.morphism_name(f))),
            ZigStep::Backward(w) => writeln!(out, "  n{} -> n{} [label={}, style=dashed];", i + 1, i, esc(c.morphism_name(w))),
        };
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use hocat_core::samples;
    use hocat_core::sset::spine;

    fn count(s: &str, pat: &str) -> usize {
        s.lines().filter(|l| l.contains(pat)).count()
    }

    #[test]
    fn arrow_has_one_edge() {
        let d = dot_fincat(&samples::arrow(), "A", &[]);
        assert_eq!(count(&d, "[label="), 3);
        assert_eq!(count(&d, "->"), 1);
    }

    #[test]
    fn walking_iso_is_a_styled_pair() {
        let d = dot_fincat(&samples::walking_iso(), "I", &[]);
        assert_eq!(count(&d, "->"), 2);
        assert_eq!(count(&d, "style=bold"), 2);
    }

    #[test]
    fn spine_is_a_path() {
        let d = dot_sset(&spine(3, 3).sset, "S");
        assert_eq!(count(&d, " [label=") - count(&d, "->"), 4);
        assert_eq!(count(&d, "->"), 3);
    }

    #[test]
    fn marked_and_deterministic() {
        let c = samples::arrow();
        let f = c.morphism_index("01").unwrap();
        let d = dot_fincat(&c, "A", &[f]);
        assert_eq!(count(&d, "color=red"), 1);
        assert_eq!(d, dot_fincat(&c, "A", &[f]));
    }

    #[test]
    fn zigzag_path() {
        let c = samples::ordinal(2);
        let (f, g) = (c.morphism_index("02").unwrap(), c.morphism_index("12").unwrap());
        let z = Zigzag {
            src: 0,
            tgt: 1,
            steps: vec![ZigStep::Forward(f), ZigStep::Backward(g)],
        };
        let d = dot_zigzag(&z, &c, "Z");
        assert!(d.contains("n2 -> n1 [label=\"12\", style=dashed]"));
    }
}
