//! Planar rooted trees with labelled leaves and generator-decorated vertices.

use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// An interned generator identifier.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sym(Arc<str>);

impl Sym {
    pub fn new(s: &str) -> Self {
        Sym(Arc::from(s))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&str> for Sym {
    fn from(s: &str) -> Self {
        Sym::new(s)
    }
}

impl From<String> for Sym {
    fn from(s: String) -> Self {
        Sym(Arc::from(s))
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

/// A tree is either a leaf carrying a positive label or a vertex carrying a
/// generator with an ordered list of children.
///
/// The derived order coincides with the lexicographic order of preorder token
/// sequences (leaf tokens sort before generator tokens), since a preorder
/// sequence of a well-formed tree is never a proper prefix of another.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tree {
    Leaf(u32),
    Node(Sym, Vec<Tree>),
}

impl Tree {
    pub fn leaf(k: u32) -> Tree {
        Tree::Leaf(k)
    }

    pub fn node(g: impl Into<Sym>, children: Vec<Tree>) -> Tree {
        Tree::Node(g.into(), children)
    }

    /// `g(c_1, ..., c_m)`, rejecting repeated or zero labels and empty vertices.
    pub fn graft_children(g: impl Into<Sym>, children: Vec<Tree>) -> Result<Tree> {
        let t = Tree::Node(g.into(), children);
        t.check_labels()?;
        Ok(t)
    }

    /// Root generator and children; `None` for a leaf.
    pub fn decompose(&self) -> Option<(&Sym, &[Tree])> {
        match self {
            Tree::Leaf(_) => None,
            Tree::Node(g, cs) => Some((g, cs)),
        }
    }

    /// The corolla `g(1, ..., n)`.
    pub fn corolla(g: impl Into<Sym>, n: usize) -> Tree {
        Tree::Node(g.into(), (1..=n as u32).map(Tree::Leaf).collect())
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::Leaf(_))
    }

    /// Leaf labels in planar order.
    pub fn leaves(&self) -> Vec<u32> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<u32>) {
        match self {
            Tree::Leaf(k) => out.push(*k),
            Tree::Node(_, cs) => cs.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    /// The leaf set `lin(τ)`.
    pub fn leaf_set(&self) -> BTreeSet<u32> {
        self.leaves().into_iter().collect()
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Tree::Leaf(_) => 1,
            Tree::Node(_, cs) => cs.iter().map(Tree::leaf_count).sum(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            Tree::Leaf(_) => 0,
            Tree::Node(_, cs) => 1 + cs.iter().map(Tree::vertex_count).sum::<usize>(),
        }
    }

    pub fn min_leaf(&self) -> u32 {
        match self {
            Tree::Leaf(k) => *k,
            Tree::Node(_, cs) => cs.iter().map(Tree::min_leaf).min().unwrap_or(u32::MAX),
        }
    }

    /// Checks that labels are positive and pairwise distinct and that no vertex
    /// is empty.
    pub fn check_labels(&self) -> Result<()> {
        let leaves = self.leaves();
        if leaves.contains(&0) {
            return Err(Error::InvalidTree("leaf label 0".into()));
        }
        let set: BTreeSet<_> = leaves.iter().collect();
        if set.len() != leaves.len() {
            return Err(Error::InvalidTree("repeated leaf label".into()));
        }
        self.check_nonempty()
    }

    fn check_nonempty(&self) -> Result<()> {
        match self {
            Tree::Leaf(_) => Ok(()),
            Tree::Node(g, cs) if cs.is_empty() => {
                Err(Error::InvalidTree(format!("vertex `{g}` has no children")))
            }
            Tree::Node(_, cs) => cs.iter().try_for_each(Tree::check_nonempty),
        }
    }

    /// True when leaves read `1, 2, ..., n` from left to right.
    pub fn is_standard_planar(&self) -> bool {
        self.leaves().iter().enumerate().all(|(i, &k)| k == i as u32 + 1)
    }

    pub fn relabel(&self, f: &impl Fn(u32) -> u32) -> Tree {
        match self {
            Tree::Leaf(k) => Tree::Leaf(f(*k)),
            Tree::Node(g, cs) => Tree::Node(g.clone(), cs.iter().map(|c| c.relabel(f)).collect()),
        }
    }

    /// Replaces the leaf labelled `k` by `t`. Labels are not renumbered.
    pub fn graft(&self, k: u32, t: &Tree) -> Result<Tree> {
        let mut found = false;
        let out = self.graft_inner(k, t, &mut found);
        if !found {
            return Err(Error::InvalidTree(format!("no leaf labelled {k}")));
        }
        Ok(out)
    }

    fn graft_inner(&self, k: u32, t: &Tree, found: &mut bool) -> Tree {
        match self {
            Tree::Leaf(j) if *j == k => {
                *found = true;
                t.clone()
            }
            Tree::Leaf(j) => Tree::Leaf(*j),
            Tree::Node(g, cs) => {
                Tree::Node(g.clone(), cs.iter().map(|c| c.graft_inner(k, t, found)).collect())
            }
        }
    }

    /// Partial composition `self ∘_i t` for standard planar trees: `t` is
    /// grafted on leaf `i` and all labels are renumbered so the result is
    /// standard planar again.
    pub fn compose(&self, i: u32, t: &Tree) -> Result<Tree> {
        let k = t.leaf_count() as u32;
        let shifted = t.relabel(&|j| j + i - 1);
        let base = self.relabel(&|j| if j > i { j + k - 1 } else { j });
        base.graft(i, &shifted)
    }

    /// Paths (child indices from the root) of every vertex, in preorder.
    pub fn vertex_paths(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        self.paths_inner(&mut path, &mut out);
        out
    }

    fn paths_inner(&self, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if let Tree::Node(_, cs) = self {
            out.push(path.clone());
            for (i, c) in cs.iter().enumerate() {
                path.push(i);
                c.paths_inner(path, out);
                path.pop();
            }
        }
    }

    pub fn subtree(&self, path: &[usize]) -> Option<&Tree> {
        let mut cur = self;
        for &i in path {
            match cur {
                Tree::Node(_, cs) => cur = cs.get(i)?,
                Tree::Leaf(_) => return None,
            }
        }
        Some(cur)
    }

    /// All generators used, with their arities.
    pub fn generators(&self) -> Vec<(Sym, usize)> {
        let mut out = Vec::new();
        self.gens_inner(&mut out);
        out
    }

    fn gens_inner(&self, out: &mut Vec<(Sym, usize)>) {
        if let Tree::Node(g, cs) = self {
            out.push((g.clone(), cs.len()));
            cs.iter().for_each(|c| c.gens_inner(out));
        }
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf(k) => write!(f, "{k}"),
            Tree::Node(g, cs) => {
                write!(f, "{g}(")?;
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parser for the text form `g(1,h(2,3))`. Generator identifiers run up to
/// the next `(`, `,` or `)`; a bracketed suffix such as `mu[1,2]` is part of
/// the identifier.
struct TextParser<'a> {
    src: &'a [u8],
    pos: usize,
}

const MAX_DEPTH: usize = 256;

impl TextParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {}", self.pos))
    }

    fn tree(&mut self, depth: usize) -> Result<Tree> {
        if depth > MAX_DEPTH {
            return Err(self.err("tree nested too deeply"));
        }
        self.skip_ws();
        let start = self.pos;
        let mut bracket = 0usize;
        while self.pos < self.src.len() {
            match self.src[self.pos] {
                b'[' => bracket += 1,
                b']' if bracket > 0 => bracket -= 1,
                b'(' | b')' | b',' if bracket == 0 => break,
                _ => {}
            }
            self.pos += 1;
        }
        let word = std::str::from_utf8(&self.src[start..self.pos])
            .map_err(|_| self.err("invalid utf-8"))?
            .trim();
        if word.is_empty() {
            return Err(self.err("expected a leaf or generator"));
        }
        self.skip_ws();
        if self.src.get(self.pos) != Some(&b'(') {
            let k: u32 = word.parse().map_err(|_| self.err("expected a leaf label"))?;
            return Ok(Tree::Leaf(k));
        }
        self.pos += 1;
        let mut children = vec![self.tree(depth + 1)?];
        loop {
            self.skip_ws();
            match self.src.get(self.pos) {
                Some(b',') => {
                    self.pos += 1;
                    children.push(self.tree(depth + 1)?);
                }
                Some(b')') => {
                    self.pos += 1;
                    return Ok(Tree::Node(Sym::new(word), children));
                }
                _ => return Err(self.err("expected `,` or `)`")),
            }
        }
    }
}

impl Tree {
    /// Parses the text form produced by `Display`.
    pub fn parse(s: &str) -> Result<Tree> {
        let mut p = TextParser { src: s.as_bytes(), pos: 0 };
        let t = p.tree(0)?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("trailing input"));
        }
        Ok(t)
    }
}

/// Placeholder generator used to decorate bare shapes: `#k` for arity `k`.
pub fn shape_symbol(arity: usize) -> Sym {
    Sym::from(format!("#{arity}"))
}

/// All reduced planar trees with leaves `1..=n` (left to right) whose vertices
/// carry generators from `gens` (identifier, arity). Generators of arity below
/// two are ignored.
pub fn enumerate_decorated(n: usize, gens: &[(Sym, usize)]) -> Vec<Tree> {
    let gens: Vec<_> = gens.iter().filter(|(_, a)| *a >= 2).cloned().collect();
    // by_size[k] holds the trees with leaves 1..=k.
    let mut by_size: Vec<Vec<Tree>> = vec![Vec::new(), vec![Tree::Leaf(1)]];
    for size in 2..=n {
        let mut here = Vec::new();
        for (g, arity) in &gens {
            if *arity > size {
                continue;
            }
            for parts in compositions(size, *arity) {
                let mut acc: Vec<Vec<Tree>> = vec![Vec::new()];
                let mut offset = 0u32;
                for &p in &parts {
                    let mut next = Vec::new();
                    for prefix in &acc {
                        for t in &by_size[p] {
                            let mut v = prefix.clone();
                            v.push(t.relabel(&|j| j + offset));
                            next.push(v);
                        }
                    }
                    acc = next;
                    offset += p as u32;
                }
                here.extend(acc.into_iter().map(|cs| Tree::Node(g.clone(), cs)));
            }
        }
        by_size.push(here);
    }
    if n == 0 {
        return Vec::new();
    }
    by_size.swap_remove(n)
}

/// Bare reduced shapes with `n` leaves and vertex arities drawn from
/// `arities`.
pub fn enumerate_shapes(n: usize, arities: &[usize]) -> Vec<Tree> {
    let gens: Vec<_> = arities.iter().map(|&a| (shape_symbol(a), a)).collect();
    enumerate_decorated(n, &gens)
}

/// Ordered compositions of `n` into `k` positive parts.
pub fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 1 {
            cur.push(n);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in 1..=n.saturating_sub(k - 1) {
            cur.push(first);
            go(n - first, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 || k > n {
        return out;
    }
    go(n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(g: &str, cs: Vec<Tree>) -> Tree {
        Tree::node(g, cs)
    }
    fn l(k: u32) -> Tree {
        Tree::leaf(k)
    }

    #[test]
    fn order_is_preorder_lexicographic() {
        let a = t("m", vec![t("m", vec![l(1), l(2)]), l(3)]);
        let b = t("m", vec![l(1), t("m", vec![l(2), l(3)])]);
        // Preorder tokens: m m 1 2 3 versus m 1 m 2 3; leaf tokens sort first.
        assert!(b < a);
        assert!(l(7) < t("a", vec![l(1), l(2)]));
    }

    #[test]
    fn compose_renumbers() {
        let m = Tree::corolla("m", 2);
        let left = m.compose(1, &m).unwrap();
        assert_eq!(left, t("m", vec![t("m", vec![l(1), l(2)]), l(3)]));
        let right = m.compose(2, &m).unwrap();
        assert_eq!(right, t("m", vec![l(1), t("m", vec![l(2), l(3)])]));
        assert!(left.is_standard_planar() && right.is_standard_planar());
    }

    #[test]
    fn labels_checked() {
        assert!(t("m", vec![l(1), l(1)]).check_labels().is_err());
        assert!(t("m", vec![l(0), l(1)]).check_labels().is_err());
        assert!(t("m", vec![]).check_labels().is_err());
        assert!(t("m", vec![l(3), l(9)]).check_labels().is_ok());
    }

    #[test]
    fn paths_and_subtrees() {
        let tau = t("a", vec![l(1), t("b", vec![l(2), l(3)])]);
        assert_eq!(tau.vertex_paths(), vec![vec![], vec![1]]);
        assert_eq!(tau.subtree(&[1, 0]), Some(&l(2)));
        assert_eq!(tau.leaf_set().into_iter().collect::<Vec<_>>(), vec![1, 2, 3]);
    }

    #[test]
    fn text_round_trip() {
        for s in ["3", "m(1,2)", "mu[1,2](mu[1](1,2),3)", "w(1,v(2,3,4),5)"] {
            assert_eq!(Tree::parse(s).unwrap().to_string(), s);
        }
        assert_eq!(Tree::parse(" m ( 1 , 2 ) ").unwrap(), Tree::corolla("m", 2));
        for s in ["", "m(", "m()", "m(1,)", "m(1)x", "(1)", "m(a)", "m[(1)"] {
            assert!(Tree::parse(s).is_err(), "{s}");
        }
        let deep = "m(".repeat(1000) + "1" + &")".repeat(1000);
        assert!(Tree::parse(&deep).is_err());
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(5, 2).len(), 4);
        assert_eq!(compositions(6, 3).len(), 10);
        assert!(compositions(2, 3).is_empty());
    }
}
