//! Finite linear combinations of trees with rational coefficients.

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::tree::{Sym, Tree};
use num::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Zero coefficients are never stored, so structural equality is equality of
/// polynomials.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly {
    terms: BTreeMap<Tree, Rational>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn from_tree(t: Tree) -> Poly {
        Poly::term(rational::one(), t)
    }

    pub fn term(c: Rational, t: Tree) -> Poly {
        let mut p = Poly::zero();
        p.add_term(c, t);
        p
    }

    /// Builds `Σ c_i t_i` from integer coefficients.
    pub fn from_ints(terms: impl IntoIterator<Item = (i64, Tree)>) -> Poly {
        let mut p = Poly::zero();
        for (c, t) in terms {
            p.add_term(rational::int(c), t);
        }
        p
    }

    pub fn add_term(&mut self, c: Rational, t: Tree) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(t) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &Poly) {
        if c.is_zero() {
            return;
        }
        for (t, d) in &other.terms {
            self.add_term(c * d, t.clone());
        }
    }

    pub fn plus(&self, other: &Poly) -> Poly {
        let mut p = self.clone();
        p.add_scaled(&rational::one(), other);
        p
    }

    pub fn minus(&self, other: &Poly) -> Poly {
        let mut p = self.clone();
        p.add_scaled(&rational::int(-1), other);
        p
    }

    pub fn scaled(&self, c: &Rational) -> Poly {
        let mut p = Poly::zero();
        p.add_scaled(c, self);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Tree, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: &Tree) -> Rational {
        self.terms.get(t).cloned().unwrap_or_else(rational::zero)
    }

    /// Largest tree in term order.
    pub fn leading(&self) -> Option<(&Tree, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Scaled so the leading coefficient is one.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some((_, c)) => self.scaled(&(Rational::one() / c)),
        }
    }

    pub fn relabel(&self, f: &impl Fn(u32) -> u32) -> Poly {
        let mut p = Poly::zero();
        for (t, c) in &self.terms {
            p.add_term(c.clone(), t.relabel(f));
        }
        p
    }

    /// Rewrites every term into symmetric normal form and recombines.
    pub fn normalize(&self, alphabet: &Alphabet) -> Result<Poly> {
        if !alphabet.is_symmetric() {
            return Ok(self.clone());
        }
        let mut p = Poly::zero();
        for (t, c) in &self.terms {
            let (s, nf) = alphabet.normal_form(t)?;
            p.add_term(if s < 0 { -c } else { c.clone() }, nf);
        }
        Ok(p)
    }

    /// Common leaf set of all terms; an error when terms disagree.
    pub fn leaf_set(&self) -> Result<Option<BTreeSet<u32>>> {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Ok(None);
        };
        let set = first.leaf_set();
        for t in it {
            if t.leaf_set() != set {
                return Err(Error::InvalidTree(format!(
                    "inhomogeneous polynomial: {first} and {t} have different leaves"
                )));
            }
        }
        Ok(Some(set))
    }

    pub fn validate(&self, alphabet: &Alphabet) -> Result<()> {
        for t in self.terms.keys() {
            alphabet.validate_tree(t)?;
        }
        self.leaf_set().map(|_| ())
    }

    /// Replaces every generator `g` by `map[g]`, a polynomial in trees whose
    /// leaves `1..=arity(g)` mark where the children go. Generators missing
    /// from the map are kept.
    pub fn substitute(&self, map: &BTreeMap<Sym, Poly>) -> Poly {
        let mut out = Poly::zero();
        for (t, c) in &self.terms {
            out.add_scaled(c, &substitute_tree(t, map));
        }
        out
    }

    pub fn generators(&self) -> BTreeSet<(Sym, usize)> {
        self.terms.keys().flat_map(|t| t.generators()).collect()
    }
}

pub fn substitute_tree(t: &Tree, map: &BTreeMap<Sym, Poly>) -> Poly {
    match t {
        Tree::Leaf(_) => Poly::from_tree(t.clone()),
        Tree::Node(g, cs) => {
            let kids: Vec<Poly> = cs.iter().map(|c| substitute_tree(c, map)).collect();
            match map.get(g) {
                None => node_product(g, &kids),
                Some(image) => {
                    let mut out = Poly::zero();
                    for (tmpl, c) in image.iter() {
                        out.add_scaled(c, &instantiate(tmpl, &kids));
                    }
                    out
                }
            }
        }
    }
}

fn instantiate(tmpl: &Tree, kids: &[Poly]) -> Poly {
    match tmpl {
        Tree::Leaf(k) => kids[*k as usize - 1].clone(),
        Tree::Node(h, cs) => {
            let parts: Vec<Poly> = cs.iter().map(|c| instantiate(c, kids)).collect();
            node_product(h, &parts)
        }
    }
}

/// `g(p_1, ..., p_n)` expanded multilinearly.
pub fn node_product(g: &Sym, kids: &[Poly]) -> Poly {
    let mut acc: Vec<(Rational, Vec<Tree>)> = vec![(rational::one(), Vec::new())];
    for k in kids {
        let mut next = Vec::with_capacity(acc.len() * k.len());
        for (c, prefix) in &acc {
            for (t, d) in k.iter() {
                let mut v = prefix.clone();
                v.push(t.clone());
                next.push((c * d, v));
            }
        }
        acc = next;
    }
    let mut out = Poly::zero();
    for (c, cs) in acc {
        out.add_term(c, Tree::Node(g.clone(), cs));
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !a.is_one() {
                write!(f, "{}*", rational::pretty(&a))?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
