//! Labels, JSON fragments, DOT and aligned tables.

use std::fmt::Write as _;

use dcrystal::{CrystalSet, RootDatum, Weight, WeylElement, Q};
use serde_json::{json, Value};

/// `ω1 + ω2` when the datum has fundamental weights spanning the weight
/// space, coordinates otherwise.
pub fn weight_label(d: &RootDatum, mu: &Weight) -> String {
    if d.dim() == d.rank() && d.fundamental_weights().is_some() {
        d.format_weight(mu)
    } else {
        mu.to_string()
    }
}

/// `λ − β` with `β` in simple roots, e.g. `ω2 − α1 − 2α2 − α3`.
pub fn relative_label(d: &RootDatum, lambda: &Weight, nu: &Weight) -> String {
    let mut out = weight_label(d, lambda);
    let Some(beta) = d.root_coords(&(lambda - nu)) else {
        return weight_label(d, nu);
    };
    for (j, c) in beta.0.iter().enumerate() {
        if *c == Q::from(0) {
            continue;
        }
        let (sign, mag) = if *c > Q::from(0) { ('−', *c) } else { ('+', -*c) };
        let coeff = if mag == Q::from(1) { String::new() } else { mag.to_string() };
        let _ = write!(out, " {sign} {coeff}α{}", j + 1);
    }
    out
}

pub fn q_json(x: &Q) -> Value {
    if x.is_integer() {
        json!(x.to_integer())
    } else {
        json!(x.to_string())
    }
}

pub fn weight_json(d: &RootDatum, mu: &Weight) -> Value {
    json!({
        "coords": mu.coords().iter().map(q_json).collect::<Vec<_>>(),
        "label": weight_label(d, mu),
    })
}

/// Reduced word, 1-based.
pub fn word_json(w: &WeylElement) -> Value {
    json!(w.reduced_word().iter().map(|i| i + 1).collect::<Vec<_>>())
}

pub fn index_set_json<'a>(s: impl IntoIterator<Item = &'a usize>) -> Value {
    json!(s.into_iter().map(|i| i + 1).collect::<Vec<_>>())
}

/// `{1, 3}` or `∅`.
pub fn index_set_label<'a>(s: impl IntoIterator<Item = &'a usize>) -> String {
    let parts: Vec<String> = s.into_iter().map(|i| (i + 1).to_string()).collect();
    if parts.is_empty() {
        "∅".into()
    } else {
        format!("{{{}}}", parts.join(", "))
    }
}

pub fn graph_json(d: &RootDatum, set: &CrystalSet) -> Value {
    let nodes: Vec<Value> = set
        .elements()
        .iter()
        .enumerate()
        .map(|(k, b)| {
            json!({
                "id": k,
                "element": b.to_string(),
                "weight": weight_json(d, &b.wt(d)),
                "depth": set.depth_of(d, b),
            })
        })
        .collect();
    let edges: Vec<Value> = set.edges().map(|(from, i, to)| json!({"from": from, "to": to, "i": i + 1})).collect();
    json!({
        "datum": d.name(),
        "label": set.label(),
        "size": set.len(),
        "truncated": set.is_truncated(),
        "nodes": nodes,
        "edges": edges,
    })
}

const COLORS: [&str; 8] = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"];

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// One DOT graph; `clusters` optionally groups nodes (by index) into
/// labelled subgraphs.
pub fn graph_dot(d: &RootDatum, set: &CrystalSet, clusters: &[(String, Vec<usize>)]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph crystal {{");
    let _ = writeln!(out, "  label=\"{}\";", escape(set.label()));
    let _ = writeln!(out, "  node [shape=box, fontname=\"monospace\"];");
    let node = |k: usize| {
        let b = &set.elements()[k];
        format!(
            "n{k} [label=\"{}\", tooltip=\"{}\"];",
            escape(&weight_label(d, &b.wt(d))),
            escape(&b.to_string())
        )
    };
    let mut placed = vec![false; set.len()];
    for (c, (label, members)) in clusters.iter().enumerate() {
        let _ = writeln!(out, "  subgraph cluster_{c} {{");
        let _ = writeln!(out, "    label=\"{}\";", escape(label));
        for &k in members {
            placed[k] = true;
            let _ = writeln!(out, "    {}", node(k));
        }
        let _ = writeln!(out, "  }}");
    }
    for (k, p) in placed.iter().enumerate() {
        if !p {
            let _ = writeln!(out, "  {}", node(k));
        }
    }
    for (from, i, to) in set.edges() {
        let _ = writeln!(out, "  n{from} -> n{to} [label=\"{}\", color={}];", i + 1, COLORS[i % COLORS.len()]);
    }
    let _ = writeln!(out, "}}");
    out
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (k, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if k + 1 == cells.len() {
                s.push_str(cell);
            } else {
                let pad = w - cell.chars().count();
                let _ = write!(s, "{cell}{}  ", " ".repeat(pad));
            }
        }
        s.trim_end().to_string()
    };
    let mut out = line(header.to_vec());
    out.push('\n');
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

pub fn graph_table(d: &RootDatum, set: &CrystalSet) -> String {
    let rows: Vec<Vec<String>> = set
        .elements()
        .iter()
        .enumerate()
        .map(|(k, b)| {
            let out: Vec<String> = (0..d.rank())
                .filter_map(|i| set.f_edge(k, i).map(|j| format!("f{}→{j}", i + 1)))
                .collect();
            vec![k.to_string(), weight_label(d, &b.wt(d)), set.depth_of(d, b).to_string(), out.join(" "), b.to_string()]
        })
        .collect();
    let mut s = format!("{} ({} elements{})\n", set.label(), set.len(), if set.is_truncated() { ", truncated" } else { "" });
    s.push_str(&table(&["#", "weight", "depth", "edges", "element"], &rows));
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        let d = RootDatum::preset("A3").unwrap();
        let lam = Weight::from_ints(&[0, 1, 0]);
        let beta = &(&d.simple_root(0).clone() + &d.simple_root(1).scale(Q::from(2))) + d.simple_root(2);
        assert_eq!(relative_label(&d, &lam, &(&lam - &beta)), "ω2 − α1 − 2α2 − α3");
        assert_eq!(relative_label(&d, &lam, &lam), "ω2");
        assert_eq!(index_set_label(&[]), "∅");
        assert_eq!(index_set_label(&[0, 2]), "{1, 3}");
        let gl = RootDatum::preset("GL3").unwrap();
        assert_eq!(weight_label(&gl, &Weight::from_ints(&[1, 1, 0])), "(1, 1, 0)");
    }

    #[test]
    fn aligned_table() {
        let t = table(&["a", "bb"], &[vec!["xxx".into(), "y".into()]]);
        assert_eq!(t, "a    bb\nxxx  y\n");
    }
}
