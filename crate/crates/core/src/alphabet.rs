//! Generator alphabets, symmetric-group actions on generators, and the
//! symmetric normal form of trees.
//!
//! Convention: for a generator `g` of arity `n` and `σ ∈ S_n`,
//! `g^σ(x_1, ..., x_n) = g(x_{σ(1)}, ..., x_{σ(n)})`. Every action is
//! monomial: `g^σ = ±g'` for some generator `g'` of the same arity, and an
//! action table records this for the adjacent transpositions.

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::tree::{Sym, Tree};
use std::collections::{BTreeMap, HashMap, VecDeque};

/// Image of a generator under an adjacent transposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionEntry {
    pub target: Sym,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub id: Sym,
    pub arity: usize,
    /// Unary operators (such as a Rota-Baxter operator) are the only
    /// generators allowed arity one.
    pub unary: bool,
    /// `action[i]` is the image under `(i+1, i+2)`. Empty for
    /// nonsymmetric alphabets.
    pub action: Vec<ActionEntry>,
}

impl Generator {
    pub fn new(id: impl Into<Sym>, arity: usize) -> Generator {
        Generator { id: id.into(), arity, unary: false, action: Vec::new() }
    }

    pub fn unary(id: impl Into<Sym>) -> Generator {
        Generator { id: id.into(), arity: 1, unary: true, action: Vec::new() }
    }

    /// Sets the image under `(i, i+1)`, `i` one-based.
    pub fn with_action(mut self, i: usize, target: impl Into<Sym>, sign: i8) -> Generator {
        if self.action.len() < self.arity.saturating_sub(1) {
            self.action = (1..self.arity)
                .map(|_| ActionEntry { target: Sym::new(""), sign: 0 })
                .collect();
        }
        self.action[i - 1] = ActionEntry { target: target.into(), sign };
        self
    }

    /// Fully skew-symmetric: every transposition acts by `-1`.
    pub fn skew(id: impl Into<Sym>, arity: usize) -> Generator {
        let id = id.into();
        let mut g = Generator::new(id.clone(), arity);
        for i in 1..arity {
            g = g.with_action(i, id.clone(), -1);
        }
        g
    }

    /// Fully symmetric.
    pub fn commutative(id: impl Into<Sym>, arity: usize) -> Generator {
        let id = id.into();
        let mut g = Generator::new(id.clone(), arity);
        for i in 1..arity {
            g = g.with_action(i, id.clone(), 1);
        }
        g
    }
}

/// A validated set of generators together with the full `S_n` action derived
/// from the transposition tables.
#[derive(Clone, Debug)]
pub struct Alphabet {
    gens: BTreeMap<Sym, Generator>,
    symmetric: bool,
    orbit: HashMap<Sym, HashMap<Perm, (Sym, i8)>>,
}

impl Alphabet {
    pub fn new(gens: Vec<Generator>, symmetric: bool) -> Result<Alphabet> {
        let mut map = BTreeMap::new();
        for g in gens {
            if g.id.as_str().is_empty() {
                return Err(Error::InvalidPresentation("empty generator id".into()));
            }
            if g.arity == 0 || (g.arity == 1 && !g.unary) || (g.unary && g.arity != 1) {
                return Err(Error::InvalidPresentation(format!(
                    "generator `{}` has arity {}; only unary operators may have arity one",
                    g.id, g.arity
                )));
            }
            if g.arity > 12 {
                return Err(Error::TooLarge(format!("generator `{}` has arity {}", g.id, g.arity)));
            }
            if map.insert(g.id.clone(), g.clone()).is_some() {
                return Err(Error::InvalidPresentation(format!("duplicate generator `{}`", g.id)));
            }
        }
        let mut a = Alphabet { gens: map, symmetric, orbit: HashMap::new() };
        if symmetric {
            a.build_orbits()?;
        }
        Ok(a)
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn get(&self, id: &Sym) -> Option<&Generator> {
        self.gens.get(id)
    }

    pub fn arity(&self, id: &Sym) -> Result<usize> {
        self.gens
            .get(id)
            .map(|g| g.arity)
            .ok_or_else(|| Error::UnknownGenerator(id.to_string()))
    }

    pub fn generators(&self) -> impl Iterator<Item = &Generator> {
        self.gens.values()
    }

    pub fn ids_with_arity(&self) -> Vec<(Sym, usize)> {
        self.gens.values().map(|g| (g.id.clone(), g.arity)).collect()
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Breadth-first walk of the Cayley graph of `S_n` for every generator.
    /// Revisiting a permutation by a different word must give the same
    /// value, otherwise the tables do not define an action.
    fn build_orbits(&mut self) -> Result<()> {
        for g in self.gens.values() {
            if g.arity < 2 {
                continue;
            }
            if g.action.len() != g.arity - 1 {
                return Err(Error::InvalidAction(format!(
                    "generator `{}` needs {} transposition entries, has {}",
                    g.id,
                    g.arity - 1,
                    g.action.len()
                )));
            }
            for e in &g.action {
                let Some(t) = self.gens.get(&e.target) else {
                    return Err(Error::InvalidAction(format!(
                        "`{}` acts to unknown generator `{}`",
                        g.id, e.target
                    )));
                };
                if t.arity != g.arity {
                    return Err(Error::InvalidAction(format!(
                        "`{}` acts to `{}` of different arity",
                        g.id, e.target
                    )));
                }
                if e.sign != 1 && e.sign != -1 {
                    return Err(Error::InvalidAction(format!("sign {} on `{}`", e.sign, g.id)));
                }
            }
        }
        let mut orbit = HashMap::new();
        for g in self.gens.values() {
            if g.arity < 2 {
                continue;
            }
            let n = g.arity;
            let mut seen: HashMap<Perm, (Sym, i8)> = HashMap::new();
            let mut queue = VecDeque::new();
            seen.insert(Perm::identity(n), (g.id.clone(), 1));
            queue.push_back(Perm::identity(n));
            while let Some(rho) = queue.pop_front() {
                let (cur, sign) = seen[&rho].clone();
                for i in 1..n {
                    let t = Perm::transposition(n, i);
                    let next = t.compose(&rho);
                    let e = &self.gens[&cur].action[i - 1];
                    let val = (e.target.clone(), sign * e.sign);
                    match seen.get(&next) {
                        Some(old) if *old != val => {
                            return Err(Error::InvalidAction(format!(
                                "inconsistent action on `{}`: permutation {:?} reached as {}·{} and {}·{}",
                                g.id, next, old.1, old.0, val.1, val.0
                            )));
                        }
                        Some(_) => {}
                        None => {
                            seen.insert(next.clone(), val);
                            queue.push_back(next);
                        }
                    }
                }
            }
            orbit.insert(g.id.clone(), seen);
        }
        self.orbit = orbit;
        Ok(())
    }

    /// `g^ρ = sign · g'`.
    pub fn act(&self, g: &Sym, rho: &Perm) -> Result<(Sym, i8)> {
        if rho.is_identity() {
            return Ok((g.clone(), 1));
        }
        self.orbit
            .get(g)
            .and_then(|m| m.get(rho))
            .cloned()
            .ok_or_else(|| Error::InvalidAction(format!("no action for `{g}` under {rho:?}")))
    }

    /// Checks every vertex is a known generator of the right arity and the
    /// leaf labels are distinct and positive.
    pub fn validate_tree(&self, t: &Tree) -> Result<()> {
        t.check_labels()?;
        self.validate_vertices(t)
    }

    fn validate_vertices(&self, t: &Tree) -> Result<()> {
        match t {
            Tree::Leaf(_) => Ok(()),
            Tree::Node(g, cs) => {
                let a = self.arity(g)?;
                if a != cs.len() {
                    return Err(Error::InvalidTree(format!(
                        "`{g}` has arity {a} but {} children",
                        cs.len()
                    )));
                }
                cs.iter().try_for_each(|c| self.validate_vertices(c))
            }
        }
    }

    /// Symmetric normal form: children of every vertex sorted by their
    /// minimum leaf, generators rewritten through the action. Identity on
    /// nonsymmetric alphabets.
    pub fn normal_form(&self, t: &Tree) -> Result<(i8, Tree)> {
        if !self.symmetric {
            return Ok((1, t.clone()));
        }
        self.nf(t)
    }

    fn nf(&self, t: &Tree) -> Result<(i8, Tree)> {
        match t {
            Tree::Leaf(k) => Ok((1, Tree::Leaf(*k))),
            Tree::Node(g, cs) => {
                let mut sign = 1i8;
                let mut kids = Vec::with_capacity(cs.len());
                for c in cs {
                    let (s, c) = self.nf(c)?;
                    sign *= s;
                    kids.push(c);
                }
                if kids.len() < 2 {
                    return Ok((sign, Tree::Node(g.clone(), kids)));
                }
                let mins: Vec<u32> = kids.iter().map(Tree::min_leaf).collect();
                let mut order: Vec<usize> = (0..kids.len()).collect();
                order.sort_by_key(|&j| mins[j]);
                // rank[j] = new position of child j
                let mut rank = vec![0u32; kids.len()];
                for (pos, &j) in order.iter().enumerate() {
                    rank[j] = pos as u32 + 1;
                }
                let rho = Perm::from_images(&rank).expect("ranks form a permutation");
                let (g2, s) = self.act(g, &rho)?;
                let mut slots: Vec<Option<Tree>> = vec![None; kids.len()];
                for (j, c) in kids.into_iter().enumerate() {
                    slots[rank[j] as usize - 1] = Some(c);
                }
                Ok((sign * s, Tree::Node(g2, slots.into_iter().map(Option::unwrap).collect())))
            }
        }
    }

    /// The symmetric alphabet freely generated by a nonsymmetric one: each
    /// generator `w` of arity `n` becomes the regular `S_n`-module with basis
    /// `w^π`, named `w@<one-line π>` (the identity keeps the name `w`).
    pub fn symmetrize(&self) -> Result<Alphabet> {
        if self.symmetric {
            return Ok(self.clone());
        }
        let mut gens = Vec::new();
        for g in self.gens.values() {
            if g.arity < 2 {
                gens.push(g.clone());
                continue;
            }
            for pi in Perm::all(g.arity) {
                let mut h = Generator::new(regular_name(&g.id, &pi), g.arity);
                for i in 1..g.arity {
                    let t = Perm::transposition(g.arity, i);
                    h = h.with_action(i, regular_name(&g.id, &t.compose(&pi)), 1);
                }
                gens.push(h);
            }
        }
        Alphabet::new(gens, true)
    }
}

pub fn regular_name(id: &Sym, pi: &Perm) -> Sym {
    if pi.is_identity() {
        id.clone()
    } else {
        Sym::from(format!("{id}@{}", pi.one_line()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(k: u32) -> Tree {
        Tree::leaf(k)
    }

    #[test]
    fn skew_bracket_normal_form() {
        let a = Alphabet::new(vec![Generator::skew("br", 2)], true).unwrap();
        let t = Tree::node("br", vec![Tree::node("br", vec![l(3), l(1)]), l(2)]);
        let (s, nf) = a.normal_form(&t).unwrap();
        assert_eq!(s, -1);
        assert_eq!(nf, Tree::node("br", vec![Tree::node("br", vec![l(1), l(3)]), l(2)]));
        let t2 = Tree::node("br", vec![Tree::node("br", vec![l(2), l(3)]), l(1)]);
        let (s2, nf2) = a.normal_form(&t2).unwrap();
        assert_eq!(s2, -1);
        assert_eq!(nf2, Tree::node("br", vec![l(1), Tree::node("br", vec![l(2), l(3)])]));
    }

    #[test]
    fn inconsistent_table_rejected() {
        // (12) acting by -1 and (23) by +1 on one generator contradicts the
        // braid relation (12)(23)(12) = (23)(12)(23).
        let g = Generator::new("g", 3).with_action(1, "g", -1).with_action(2, "g", 1);
        assert!(Alphabet::new(vec![g], true).is_err());
    }

    #[test]
    fn missing_table_rejected() {
        assert!(Alphabet::new(vec![Generator::new("g", 2)], true).is_err());
        let g = Generator::new("g", 2).with_action(1, "h", 1);
        assert!(Alphabet::new(vec![g], true).is_err());
    }

    #[test]
    fn regular_module_acts_freely() {
        let ns = Alphabet::new(vec![Generator::new("w", 3)], false).unwrap();
        let s = ns.symmetrize().unwrap();
        assert_eq!(s.len(), 6);
        let t = Tree::node("w", vec![l(3), l(1), l(2)]);
        let (sign, nf) = s.normal_form(&t).unwrap();
        assert_eq!(sign, 1);
        assert_eq!(nf, Tree::node("w@312", vec![l(1), l(2), l(3)]));
    }

    #[test]
    fn nonsymmetric_is_identity() {
        let a = Alphabet::new(vec![Generator::new("m", 2)], false).unwrap();
        let t = Tree::node("m", vec![l(2), l(1)]);
        assert_eq!(a.normal_form(&t).unwrap(), (1, t));
    }

    #[test]
    fn unary_must_be_flagged() {
        assert!(Alphabet::new(vec![Generator::new("p", 1)], false).is_err());
        assert!(Alphabet::new(vec![Generator::unary("P")], false).is_ok());
    }
}
