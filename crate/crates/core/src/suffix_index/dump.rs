//! Debug renderings of a tree: indented text and Graphviz DOT.

use std::fmt::Write;

use super::{NodeId, SuffixTree};

impl SuffixTree {
    fn symbol_text(&self, syms: &[u32]) -> String {
        let j = self.joined();
        let shift = j.encode(0);
        syms.iter()
            .map(|&c| {
                if c < shift + 1 {
                    format!("${}", j.k() as u32 - 1 - c)
                } else {
                    let c = c - shift;
                    match u8::try_from(c) {
                        Ok(b) if b.is_ascii_graphic() => (b as char).to_string(),
                        _ => format!("<{c}>"),
                    }
                }
            })
            .collect()
    }

    fn node_summary(&self, v: NodeId) -> String {
        let mut s = format!("#{} depth={}", v.index(), self.depth(v));
        if let Some(leaf) = self.leaf_payload(v) {
            let _ = write!(s, " leaf=({},{})", leaf.string, leaf.start);
        }
        if self.colors[v.index()] > 0 {
            let _ = write!(s, " colors={}", self.colors[v.index()]);
        }
        if self.good[v.index()] {
            s.push_str(" good");
        }
        if let Some(p) = self.candidate_period(v) {
            let _ = write!(s, " candidate(p={p})");
        }
        s
    }

    /// One line per node, indented by tree level, with the edge label.
    pub fn dump_text(&self) -> String {
        let mut out = String::new();
        let mut stack = vec![(self.root(), 0usize)];
        while let Some((v, level)) = stack.pop() {
            let label = self.symbol_text(self.edge_label(v));
            let _ = writeln!(
                out,
                "{:indent$}{} {}",
                "",
                label,
                self.node_summary(v),
                indent = 2 * level
            );
            let kids: Vec<NodeId> = self.children(v).collect();
            stack.extend(kids.into_iter().rev().map(|c| (c, level + 1)));
        }
        out
    }

    pub fn dump_dot(&self) -> String {
        let mut out = String::from("digraph suffix_tree {\n  node [shape=box];\n");
        for v in self.preorder() {
            let v = NodeId(v as u32);
            let _ = writeln!(
                out,
                "  n{} [label=\"{}\"];",
                v.index(),
                self.node_summary(v)
            );
            if let Some(p) = self.parent(v) {
                let label = self.symbol_text(self.edge_label(v)).replace('"', "\\\"");
                let _ = writeln!(
                    out,
                    "  n{} -> n{} [label=\"{}\"];",
                    p.index(),
                    v.index(),
                    label
                );
            }
        }
        out.push_str("}\n");
        out
    }
}
