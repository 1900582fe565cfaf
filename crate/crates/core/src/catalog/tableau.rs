//! Labeled plane trees indexing the cells of the arc complex of the
//! thrice-punctured monogon.
//!
//! Labels are proper non-empty subsets of `{1,2,3}`, stored as bit masks.
//! Children are ordered, so two tableaux are isomorphic exactly when they
//! are equal as ordered trees.

use std::fmt;

/// A proper non-empty subset of `{1,2,3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label(u8);

impl Label {
    pub const FULL: u8 = 0b111;

    pub fn new(mask: u8) -> Option<Self> {
        (mask != 0 && mask < Self::FULL).then_some(Label(mask))
    }

    pub fn singleton(k: u8) -> Self {
        Label(1 << (k - 1))
    }

    /// All six labels, singletons first.
    pub fn all() -> [Label; 6] {
        [1, 2, 4, 3, 5, 6].map(Label)
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn elements(self) -> Vec<u8> {
        (1..=3).filter(|k| self.0 & (1 << (k - 1)) != 0).collect()
    }

    fn proper_subset_of(self, parent: u8) -> bool {
        self.0 & parent == self.0 && self.0 != parent
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits: Vec<String> = self.elements().iter().map(u8::to_string).collect();
        write!(f, "{{{}}}", digits.join(""))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub label: Label,
    pub children: Vec<Node>,
}

impl Node {
    pub fn leaf(label: Label) -> Self {
        Node { label, children: Vec::new() }
    }

    fn edges(&self) -> usize {
        1 + self.children.iter().map(Node::edges).sum::<usize>()
    }
}

/// A tableau: the unlabeled root's ordered children.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    pub roots: Vec<Node>,
}

impl Tableau {
    pub fn new(roots: Vec<Node>) -> Self {
        Tableau { roots }
    }

    pub fn edge_count(&self) -> usize {
        self.roots.iter().map(Node::edges).sum()
    }

    /// Cell dimension: one less than the number of arcs.
    pub fn dimension(&self) -> usize {
        self.edge_count() - 1
    }

    pub fn is_valid(&self) -> bool {
        fn nested(nodes: &[Node], parent: u8) -> bool {
            nodes.iter().all(|n| n.label.proper_subset_of(parent) && nested(&n.children, n.label.mask()))
        }
        if self.roots.is_empty() || !nested(&self.roots, Label::FULL) {
            return false;
        }
        let mut level: Vec<&Node> = self.roots.iter().collect();
        while !level.is_empty() {
            let mut seen = 0u8;
            for n in &level {
                if seen & n.label.mask() != 0 {
                    return false;
                }
                seen |= n.label.mask();
            }
            level = level.iter().flat_map(|n| n.children.iter()).collect();
        }
        true
    }

    /// Codimension-one faces: delete one non-root node and splice its
    /// children into its place. Listed in preorder of the deleted node.
    pub fn faces(&self) -> Vec<Tableau> {
        let total = self.edge_count();
        (0..total)
            .filter_map(|target| {
                let mut counter = 0;
                let roots = splice(&self.roots, target, &mut counter);
                (!roots.is_empty()).then(|| Tableau::new(roots))
            })
            .collect()
    }
}

fn splice(nodes: &[Node], target: usize, counter: &mut usize) -> Vec<Node> {
    let mut out = Vec::new();
    for n in nodes {
        let here = *counter;
        *counter += 1;
        let children = splice(&n.children, target, counter);
        if here == target {
            out.extend(children);
        } else {
            out.push(Node { label: n.label, children });
        }
    }
    out
}

impl fmt::Display for Tableau {
    /// Bracket form, e.g. `({12}[{1},{2}],{3})`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn write_nodes(nodes: &[Node], f: &mut fmt::Formatter<'_>) -> fmt::Result {
            for (i, n) in nodes.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", n.label)?;
                if !n.children.is_empty() {
                    f.write_str("[")?;
                    write_nodes(&n.children, f)?;
                    f.write_str("]")?;
                }
            }
            Ok(())
        }
        f.write_str("(")?;
        write_nodes(&self.roots, f)?;
        f.write_str(")")
    }
}

/// Every tableau with at most `max_edges` edges, sorted by edge count and
/// then structurally.
pub fn enumerate_tableaux(max_edges: usize) -> Vec<Tableau> {
    let mut out: Vec<Tableau> = forests(Label::FULL, max_edges)
        .into_iter()
        .filter(|(nodes, _)| !nodes.is_empty())
        .map(|(nodes, _)| Tableau::new(nodes))
        .filter(Tableau::is_valid)
        .collect();
    out.sort_by(|a, b| (a.edge_count(), a).cmp(&(b.edge_count(), b)));
    out
}

/// Ordered forests under a parent labeled `parent`, with pairwise disjoint
/// sibling labels, using at most `budget` edges. Returns `(forest, edges)`.
fn forests(parent: u8, budget: usize) -> Vec<(Vec<Node>, usize)> {
    fn extend(parent: u8, budget: usize, used_mask: u8, prefix: &mut Vec<Node>, used: usize, out: &mut Vec<(Vec<Node>, usize)>) {
        out.push((prefix.clone(), used));
        if used == budget {
            return;
        }
        for label in Label::all() {
            if !label.proper_subset_of(parent) || label.mask() & used_mask != 0 {
                continue;
            }
            for (children, child_edges) in forests(label.mask(), budget - used - 1) {
                prefix.push(Node { label, children });
                extend(parent, budget, used_mask | label.mask(), prefix, used + 1 + child_edges, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(parent, budget, 0, &mut Vec::new(), 0, &mut out);
    out
}

/// Counts per dimension `p` (edge count `p + 1`).
pub fn counts_by_dimension(tableaux: &[Tableau]) -> Vec<usize> {
    let mut counts = Vec::new();
    for t in tableaux {
        let d = t.dimension();
        if counts.len() <= d {
            counts.resize(d + 1, 0);
        }
        counts[d] += 1;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leaf(k: u8) -> Node {
        Node::leaf(Label::singleton(k))
    }

    fn pair(a: u8, b: u8) -> Label {
        Label::new(Label::singleton(a).mask() | Label::singleton(b).mask()).unwrap()
    }

    #[test]
    fn counts_match_cell_inventory() {
        let all = enumerate_tableaux(8);
        assert_eq!(counts_by_dimension(&all), vec![6, 18, 24, 12]);
        let chi: i64 = counts_by_dimension(&all).iter().enumerate().map(|(p, &c)| if p % 2 == 0 { c as i64 } else { -(c as i64) }).sum();
        assert_eq!(chi, 0);
    }

    #[test]
    fn depth_is_bounded_by_the_labels() {
        assert_eq!(enumerate_tableaux(4), enumerate_tableaux(10));
    }

    #[test]
    fn validity_rules() {
        assert!(Tableau::new(vec![leaf(1), leaf(2)]).is_valid());
        assert!(!Tableau::new(vec![leaf(1), leaf(1)]).is_valid());
        assert!(!Tableau::new(vec![Node::leaf(pair(1, 2)), Node::leaf(pair(2, 3))]).is_valid());
        // labels two levels down in different branches must also be disjoint
        let cousins = Tableau::new(vec![
            Node { label: pair(1, 2), children: vec![leaf(1)] },
            Node { label: Label::singleton(3), children: vec![] },
        ]);
        assert!(cousins.is_valid());
        assert!(!Tableau::new(vec![Node { label: Label::singleton(1), children: vec![leaf(1)] }]).is_valid());
        assert!(!Tableau::new(vec![]).is_valid());
    }

    #[test]
    fn faces_splice_children() {
        let t = Tableau::new(vec![Node { label: pair(1, 2), children: vec![leaf(1), leaf(2)] }, leaf(3)]);
        let faces: Vec<String> = t.faces().iter().map(Tableau::to_string).collect();
        assert_eq!(faces, vec!["({1},{2},{3})", "({12}[{2}],{3})", "({12}[{1}],{3})", "({12}[{1},{2}])"]);
        assert!(t.faces().iter().all(Tableau::is_valid));
    }
}
