//! Binary-quadratic (and higher) operad presentations: generators plus
//! relations in the free operad.

use crate::alphabet::{Alphabet, Generator};
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::poly::Poly;
use crate::span::RowSpace;
use crate::tree::{enumerate_decorated, Sym, Tree};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Debug)]
pub struct Presentation {
    pub name: String,
    alphabet: Alphabet,
    relations: Vec<Poly>,
}

impl Presentation {
    /// Validates and stores the relations in normal form. Relations of a
    /// nonsymmetric presentation must have leaves `1..n` in planar order.
    pub fn new(
        name: impl Into<String>,
        gens: Vec<Generator>,
        symmetric: bool,
        relations: Vec<Poly>,
    ) -> Result<Presentation> {
        let alphabet = Alphabet::new(gens, symmetric)?;
        Presentation::with_alphabet(name, alphabet, relations)
    }

    pub fn with_alphabet(
        name: impl Into<String>,
        alphabet: Alphabet,
        relations: Vec<Poly>,
    ) -> Result<Presentation> {
        let name = name.into();
        let mut rels = Vec::with_capacity(relations.len());
        for (i, r) in relations.into_iter().enumerate() {
            r.validate(&alphabet)?;
            if let Some(set) = r.leaf_set()? {
                let n = set.len() as u32;
                if set.iter().copied().ne(1..=n) {
                    return Err(Error::InvalidPresentation(format!(
                        "relation {} of {name} has leaves {set:?}, expected 1..={n}",
                        i + 1
                    )));
                }
            }
            if !alphabet.is_symmetric() {
                if let Some((t, _)) = r.iter().find(|(t, _)| !t.is_standard_planar()) {
                    return Err(Error::InvalidPresentation(format!(
                        "nonsymmetric relation {} of {name} has term {t} out of planar order",
                        i + 1
                    )));
                }
            }
            if alphabet.generators().any(|g| g.unary) && r.iter().any(|(t, _)| t.leaf_count() == 1) {
                return Err(Error::InvalidPresentation("relation with a single leaf".into()));
            }
            rels.push(r.normalize(&alphabet)?);
        }
        Ok(Presentation { name, alphabet, relations: rels })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    pub fn is_symmetric(&self) -> bool {
        self.alphabet.is_symmetric()
    }

    pub fn max_relation_leaves(&self) -> usize {
        self.relations.iter().filter_map(|r| r.iter().next().map(|(t, _)| t.leaf_count())).max().unwrap_or(0)
    }

    /// Relations with exactly `n` leaves.
    pub fn relations_with_leaves(&self, n: usize) -> Vec<Poly> {
        self.relations
            .iter()
            .filter(|r| r.iter().next().is_some_and(|(t, _)| t.leaf_count() == n))
            .cloned()
            .collect()
    }

    /// Distinct (up to scalar) leaf relabelings of `r`, normalized.
    pub fn relation_orbit(&self, r: &Poly) -> Result<Vec<Poly>> {
        if !self.is_symmetric() {
            return Err(Error::Precondition(format!(
                "{} is nonsymmetric; symmetrize it before taking orbits",
                self.name
            )));
        }
        orbit(&self.alphabet, r)
    }

    /// All relations together with their orbits (identity for nonsymmetric
    /// presentations).
    pub fn orbit_closure(&self) -> Result<Vec<Poly>> {
        if !self.is_symmetric() {
            return Ok(self.relations.clone());
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for r in &self.relations {
            for p in orbit(&self.alphabet, r)? {
                if seen.insert(p.monic()) {
                    out.push(p);
                }
            }
        }
        Ok(out)
    }

    /// A spanning set of the arity-`n` component of the operadic ideal
    /// generated by the relations: every relation placed at one vertex of a
    /// tree over the generators, and, for symmetric presentations, every
    /// relabeling of the result.
    pub fn ideal_component(&self, n: usize) -> Result<Vec<Poly>> {
        if n > 8 {
            return Err(Error::TooLarge(format!("ideal component at {n} leaves")));
        }
        let hole = Sym::new("\u{25a1}");
        let mut out = Vec::new();
        let mut seen = BTreeSet::new();
        let gens: Vec<(Sym, usize)> =
            self.alphabet.generators().filter(|g| !g.unary).map(|g| (g.id.clone(), g.arity)).collect();
        let mut by_m: BTreeMap<usize, Vec<&Poly>> = BTreeMap::new();
        for r in &self.relations {
            if let Some((t, _)) = r.iter().next() {
                by_m.entry(t.leaf_count()).or_default().push(r);
            }
        }
        let perms = if self.is_symmetric() { Perm::all(n) } else { vec![Perm::identity(n)] };
        for (&m, rels) in &by_m {
            if m > n {
                continue;
            }
            let mut alphabet = gens.clone();
            alphabet.push((hole.clone(), m));
            let contexts: Vec<Tree> = if m == n {
                vec![Tree::corolla(hole.clone(), n)]
            } else {
                enumerate_decorated(n, &alphabet)
                    .into_iter()
                    .filter(|t| t.generators().iter().filter(|(g, _)| *g == hole).count() == 1)
                    .collect()
            };
            for ctx in &contexts {
                for r in rels {
                    let mut map = BTreeMap::new();
                    map.insert(hole.clone(), (*r).clone());
                    let p = Poly::from_tree(ctx.clone()).substitute(&map);
                    for sigma in &perms {
                        let q = p.relabel(&|k| sigma.apply(k)).normalize(&self.alphabet)?;
                        if !q.is_zero() && seen.insert(q.monic()) {
                            out.push(q);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Rewrites the relations through `map` (generator to polynomial in the
    /// target alphabet) and normalizes in the target.
    pub fn rename(
        &self,
        name: impl Into<String>,
        target: &Alphabet,
        map: &BTreeMap<Sym, Poly>,
    ) -> Result<Presentation> {
        let rels: Vec<Poly> = self.relations.iter().map(|r| r.substitute(map)).collect();
        let rels = rels.into_iter().filter(|r| !r.is_zero()).collect();
        Presentation::with_alphabet(name, target.clone(), rels)
    }

    /// The symmetric presentation freely generated by a nonsymmetric one.
    pub fn symmetrize(&self) -> Result<Presentation> {
        if self.is_symmetric() {
            return Ok(self.clone());
        }
        let alphabet = self.alphabet.symmetrize()?;
        Presentation::with_alphabet(self.name.clone(), alphabet, self.relations.clone())
    }

    /// Checks that every relation is a valid polynomial over the alphabet;
    /// used on presentations loaded from files.
    pub fn validate(&self) -> Result<()> {
        for r in &self.relations {
            r.validate(&self.alphabet)?;
        }
        Ok(())
    }

    /// Rank of the orbit-closed relation span at each leaf count.
    pub fn span_rank(&self) -> Result<usize> {
        let rels = self.orbit_closure()?;
        Ok(RowSpace::from_polys(&rels).rank())
    }
}

fn orbit(alphabet: &Alphabet, r: &Poly) -> Result<Vec<Poly>> {
    let n = match r.leaf_set()? {
        Some(s) => s.len(),
        None => return Ok(Vec::new()),
    };
    if n > 8 {
        return Err(Error::TooLarge(format!("orbit under S_{n}")));
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for sigma in Perm::all(n) {
        let q = r.relabel(&|k| sigma.apply(k)).normalize(alphabet)?;
        if !q.is_zero() && seen.insert(q.monic()) {
            out.push(q);
        }
    }
    Ok(out)
}

/// `g ↦ ±h` as a substitution map.
pub fn signed_map(pairs: &[(&str, i64, &str, usize)]) -> BTreeMap<Sym, Poly> {
    pairs
        .iter()
        .map(|&(from, sign, to, arity)| (Sym::new(from), Poly::from_ints([(sign, Tree::corolla(to, arity))])))
        .collect()
}
