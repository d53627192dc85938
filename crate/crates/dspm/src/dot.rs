//! Graphviz rendering of catalog graphs: row vertices `r1…rn` on the left,
//! column vertices `c1…cn` on the right.

use std::fmt::Write as _;

use dspm_core::{omega, CatalogEntry};

pub fn entry_to_dot(entry: &CatalogEntry, k: usize) -> String {
    let g = entry.graph();
    let n = g.n();
    let mut out = String::new();
    let _ = writeln!(out, "graph g_{}_{} {{", n, entry.code.to_hex());
    let _ = writeln!(out, "  rankdir=LR;");
    let psi: Vec<String> = entry.profile.psi.iter().map(usize::to_string).collect();
    let _ = writeln!(
        out,
        "  label=\"k={k} psi=<{}> omega={}\";",
        psi.join(","),
        omega(&entry.profile, n)
    );
    for (side, prefix, shape) in [("R", 'r', "circle"), ("C", 'c', "doublecircle")] {
        let _ = writeln!(
            out,
            "  subgraph cluster_{side} {{ label=\"{side}\"; node [shape={shape}];"
        );
        for v in 1..=n {
            let _ = writeln!(out, "    {prefix}{v};");
        }
        let _ = writeln!(out, "  }}");
    }
    for (r, c) in g.edges() {
        let _ = writeln!(out, "  r{r} -- c{c};");
    }
    out.push_str("}\n");
    out
}
