//! Configurations: families `C_n` of nonempty subsets of `[n]` that are closed
//! under taking meets with the vertices of a tree.

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::tree::{enumerate_shapes, Tree};
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A finite set of positive integers, kept sorted. Ordered by size, then
/// lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset(Vec<u32>);

impl Subset {
    pub fn new(elems: impl IntoIterator<Item = u32>) -> Subset {
        let set: BTreeSet<u32> = elems.into_iter().collect();
        Subset(set.into_iter().collect())
    }

    pub fn empty() -> Subset {
        Subset(Vec::new())
    }

    /// `[n] = {1, ..., n}`
    pub fn full(n: usize) -> Subset {
        Subset((1..=n as u32).collect())
    }

    pub fn singleton(i: u32) -> Subset {
        Subset(vec![i])
    }

    pub fn elems(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: u32) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn max_elem(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn image(&self, p: &Perm) -> Subset {
        Subset::new(self.0.iter().map(|&i| p.apply(i)))
    }

    /// All nonempty subsets of `[n]` in subset order.
    pub fn all_nonempty(n: usize) -> Vec<Subset> {
        let mut out: Vec<Subset> = (1u64..(1u64 << n))
            .map(|mask| Subset((1..=n as u32).filter(|i| mask >> (i - 1) & 1 == 1).collect()))
            .collect();
        out.sort();
        out
    }

    /// Comma-separated elements, `"1,3"`.
    pub fn key(&self) -> String {
        self.0.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
    }

    pub fn parse_key(s: &str) -> Result<Subset> {
        let mut v = Vec::new();
        for part in s.split(',') {
            let i: u32 = part
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad subset element {part:?}")))?;
            if i == 0 {
                return Err(Error::Parse("subset element 0".into()));
            }
            v.push(i);
        }
        Ok(Subset::new(v))
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.0.len(), &self.0).cmp(&(other.0.len(), &other.0))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.key())
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConfigKind {
    /// Singletons `A_n`.
    Arity,
    /// All nonempty subsets `B_n`.
    Power,
    /// `B_n` for `n <= m`, subsets of size at most `m` above.
    Capped(usize),
    /// `{[n]}` only.
    Trivial,
    /// `{[n]} ∪ A_n` for `n < m`, `{[n]}` from `m` on.
    SingletonsBelow(usize),
    Explicit,
}

impl ConfigKind {
    pub fn name(&self) -> &'static str {
        match self {
            ConfigKind::Arity => "arity",
            ConfigKind::Power => "power",
            ConfigKind::Capped(_) => "capped",
            ConfigKind::Trivial => "trivial",
            ConfigKind::SingletonsBelow(_) => "singletons_below",
            ConfigKind::Explicit => "explicit",
        }
    }

    pub fn parameter(&self) -> Option<usize> {
        match self {
            ConfigKind::Capped(m) | ConfigKind::SingletonsBelow(m) => Some(*m),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Index {
    Finite(usize),
    /// `C_n = B_n` up to the stored bound; the true index may be larger.
    AtLeast(usize),
    Infinite,
    None,
}

impl Index {
    /// Whether trees with `n` leaves lie within the index.
    pub fn covers(&self, n: usize) -> bool {
        match self {
            Index::Finite(m) => n <= *m,
            Index::AtLeast(m) => n <= *m,
            Index::Infinite => true,
            Index::None => false,
        }
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Finite(m) => write!(f, "{m}"),
            Index::AtLeast(m) => write!(f, ">={m}"),
            Index::Infinite => f.write_str("infinite"),
            Index::None => f.write_str("none"),
        }
    }
}

pub const DEFAULT_N_MAX: usize = 7;
/// Closure validation enumerates every reduced tree up to `n_max` leaves;
/// beyond eight leaves that stops being practical.
pub const MAX_N: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    kind: ConfigKind,
    n_max: usize,
    explicit: BTreeMap<usize, Vec<Subset>>,
}

/// A tree, a subset of its leaves and a vertex whose meet falls outside the
/// configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureWitness {
    pub tree: Tree,
    pub leaves: Subset,
    pub vertex: Vec<usize>,
    pub meet: Subset,
}

impl fmt::Display for ClosureWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "tree {} with J = {}: meet at vertex {:?} is {}, not in C_{}",
            self.tree,
            self.leaves,
            self.vertex,
            self.meet,
            match self.tree.subtree(&self.vertex) {
                Some(Tree::Node(_, cs)) => cs.len(),
                _ => 0,
            }
        )
    }
}

impl Configuration {
    pub fn arity() -> Configuration {
        Configuration::named(ConfigKind::Arity)
    }

    pub fn power() -> Configuration {
        Configuration::named(ConfigKind::Power)
    }

    pub fn trivial() -> Configuration {
        Configuration::named(ConfigKind::Trivial)
    }

    pub fn capped(m: usize) -> Configuration {
        Configuration::named(ConfigKind::Capped(m.max(1)))
    }

    pub fn singletons_below(m: usize) -> Configuration {
        Configuration::named(ConfigKind::SingletonsBelow(m))
    }

    fn named(kind: ConfigKind) -> Configuration {
        Configuration { kind, n_max: DEFAULT_N_MAX, explicit: BTreeMap::new() }
    }

    /// Sets the enumeration bound, clamped to `1..=MAX_N`.
    pub fn with_n_max(mut self, n_max: usize) -> Configuration {
        self.n_max = n_max.clamp(1, MAX_N);
        self
    }

    /// An explicit configuration. Subsets must lie in `[n]`; levels absent
    /// from `sets` are empty. Closure is not checked here.
    pub fn explicit(n_max: usize, sets: BTreeMap<usize, Vec<Subset>>) -> Result<Configuration> {
        if n_max == 0 || n_max > MAX_N {
            return Err(Error::TooLarge(format!("n_max {n_max} outside 1..={MAX_N}")));
        }
        let mut clean = BTreeMap::new();
        for (n, subsets) in sets {
            if n == 0 || n > n_max {
                return Err(Error::InvalidConfig(format!("level {n} outside 1..={n_max}")));
            }
            let mut level: Vec<Subset> = Vec::new();
            for s in subsets {
                if s.is_empty() || s.max_elem().is_some_and(|m| m as usize > n) {
                    return Err(Error::InvalidConfig(format!("{s} is not a nonempty subset of [{n}]")));
                }
                if !level.contains(&s) {
                    level.push(s);
                }
            }
            level.sort();
            clean.insert(n, level);
        }
        Ok(Configuration { kind: ConfigKind::Explicit, n_max, explicit: clean })
    }

    pub fn kind(&self) -> &ConfigKind {
        &self.kind
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn name(&self) -> String {
        match self.kind.parameter() {
            Some(m) => format!("{}:{m}", self.kind.name()),
            None => self.kind.name().to_string(),
        }
    }

    /// `C_n`, sorted.
    pub fn members(&self, n: usize) -> Result<Vec<Subset>> {
        if n == 0 {
            return Ok(Vec::new());
        }
        if n > 20 {
            return Err(Error::TooLarge(format!("level {n}")));
        }
        let full = Subset::full(n);
        let singles = || (1..=n as u32).map(Subset::singleton).collect::<Vec<_>>();
        let mut v = match &self.kind {
            ConfigKind::Arity => singles(),
            ConfigKind::Power => Subset::all_nonempty(n),
            ConfigKind::Capped(m) => {
                Subset::all_nonempty(n).into_iter().filter(|s| n <= *m || s.len() <= *m).collect()
            }
            ConfigKind::Trivial => vec![full],
            ConfigKind::SingletonsBelow(m) => {
                let mut v = vec![full];
                if n < *m {
                    v.extend(singles());
                }
                v
            }
            ConfigKind::Explicit => {
                if n > self.n_max {
                    return Err(Error::InvalidConfig(format!(
                        "explicit configuration has no level {n} (n_max = {})",
                        self.n_max
                    )));
                }
                self.explicit.get(&n).cloned().unwrap_or_default()
            }
        };
        v.sort();
        v.dedup();
        Ok(v)
    }

    pub fn contains(&self, n: usize, s: &Subset) -> bool {
        if s.is_empty() || s.max_elem().is_some_and(|m| m as usize > n) {
            return false;
        }
        match &self.kind {
            ConfigKind::Arity => s.len() == 1,
            ConfigKind::Power => true,
            ConfigKind::Capped(m) => n <= *m || s.len() <= *m,
            ConfigKind::Trivial => s.len() == n,
            ConfigKind::SingletonsBelow(m) => s.len() == n || (n < *m && s.len() == 1),
            ConfigKind::Explicit => self.explicit.get(&n).is_some_and(|l| l.contains(s)),
        }
    }

    /// `sup { n : C_n = B_n }`. Named kinds use their known values: arity 1,
    /// power infinite, capped `m`, trivial none.
    pub fn index(&self) -> Index {
        match &self.kind {
            ConfigKind::Arity => Index::Finite(1),
            ConfigKind::Power => Index::Infinite,
            ConfigKind::Capped(m) => Index::Finite(*m),
            ConfigKind::Trivial => Index::None,
            ConfigKind::SingletonsBelow(m) => Index::Finite(if *m >= 3 { 2 } else { 1 }),
            ConfigKind::Explicit => {
                let full: Vec<usize> = (1..=self.n_max)
                    .filter(|&n| self.members(n).is_ok_and(|c| c == Subset::all_nonempty(n)))
                    .collect();
                match full.last() {
                    None => Index::None,
                    Some(&n) if n == self.n_max => Index::AtLeast(n),
                    Some(&n) => Index::Finite(n),
                }
            }
        }
    }

    /// Every `C_n` is closed under the action of `S_n`.
    pub fn is_s_invariant(&self) -> bool {
        if self.kind != ConfigKind::Explicit {
            return true;
        }
        for n in 1..=self.n_max {
            let level = self.members(n).unwrap_or_default();
            for p in (1..n).map(|i| Perm::transposition(n, i)) {
                if level.iter().any(|s| !self.contains(n, &s.image(&p))) {
                    return false;
                }
            }
        }
        true
    }

    /// Checks closure under meets on every reduced tree with at most `n_max`
    /// leaves and returns the first violation.
    pub fn validate_closure(&self) -> std::result::Result<(), ClosureWitness> {
        for n in 2..=self.n_max {
            let arities: Vec<usize> = (2..=n).collect();
            let level = self.members(n).unwrap_or_default();
            for tree in enumerate_shapes(n, &arities) {
                for j in &level {
                    for path in tree.vertex_paths() {
                        let m = meet(j, &tree, &path);
                        let Some(Tree::Node(_, cs)) = tree.subtree(&path) else { continue };
                        if !m.is_empty() && !self.contains(cs.len(), &m) {
                            return Err(ClosureWitness {
                                tree: tree.clone(),
                                leaves: j.clone(),
                                vertex: path,
                                meet: m,
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// `J ⊓ ω`: the positions of the children of the vertex at `path` whose leaf
/// sets meet `J`. Empty when `path` does not name a vertex.
pub fn meet(j: &Subset, tree: &Tree, path: &[usize]) -> Subset {
    match tree.subtree(path) {
        Some(Tree::Node(_, cs)) => meet_children(j, cs),
        _ => Subset::empty(),
    }
}

pub fn meet_children(j: &Subset, children: &[Tree]) -> Subset {
    Subset::new(
        children
            .iter()
            .enumerate()
            .filter(|(_, c)| c.leaves().iter().any(|&k| j.contains(k)))
            .map(|(i, _)| i as u32 + 1),
    )
}
