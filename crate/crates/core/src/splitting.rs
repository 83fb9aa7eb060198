//! Splitting of presentations along a configuration, and the checks built on
//! it: the splitting-sum identity, canonical morphisms, functoriality,
//! restriction, and the A-infinity bookkeeping.

use crate::alphabet::{Alphabet, Generator};
use crate::config::{meet_children, ConfigKind, Configuration, Subset};
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::poly::{node_product, Poly};
use crate::presentation::Presentation;
use crate::tree::{Sym, Tree};
use std::collections::BTreeMap;

/// Identifier of the split generator `(ω, e_I)`: `"ω[i,j,...]"`.
pub fn split_id(base: &Sym, part: &Subset) -> Sym {
    Sym::from(format!("{base}[{}]", part.key()))
}

/// The generators `(ω, e_I)` for `I ∈ C_n`, with the induced action
/// `(ω, e_I)^σ = (ω^σ, e_{σ(I)})` in the symmetric case.
#[derive(Clone, Debug)]
pub struct SplitAlphabet {
    pub alphabet: Alphabet,
    parts: BTreeMap<Sym, (Sym, Subset)>,
}

impl SplitAlphabet {
    /// The base generator and part of a split generator.
    pub fn origin(&self, id: &Sym) -> Option<&(Sym, Subset)> {
        self.parts.get(id)
    }

    pub fn parts(&self) -> impl Iterator<Item = (&Sym, &(Sym, Subset))> {
        self.parts.iter()
    }
}

pub fn split_alphabet(base: &Alphabet, c: &Configuration) -> Result<SplitAlphabet> {
    if base.is_symmetric() && !c.is_s_invariant() {
        return Err(Error::Precondition(format!(
            "configuration {} is not S-invariant; a symmetric presentation needs one",
            c.name()
        )));
    }
    let mut gens = Vec::new();
    let mut parts = BTreeMap::new();
    for g in base.generators() {
        if g.unary {
            return Err(Error::Precondition(format!("cannot split unary generator `{}`", g.id)));
        }
        for part in c.members(g.arity)? {
            let id = split_id(&g.id, &part);
            let mut h = Generator::new(id.clone(), g.arity);
            if base.is_symmetric() {
                for (i, e) in g.action.iter().enumerate() {
                    let t = Perm::transposition(g.arity, i + 1);
                    let img = part.image(&t);
                    if !c.contains(g.arity, &img) {
                        return Err(Error::TheoremViolation(format!(
                            "S-invariant configuration lost {img} at level {}",
                            g.arity
                        )));
                    }
                    h = h.with_action(i + 1, split_id(&e.target, &img), e.sign);
                }
            }
            parts.insert(id, (g.id.clone(), part));
            gens.push(h);
        }
    }
    Ok(SplitAlphabet { alphabet: Alphabet::new(gens, base.is_symmetric())?, parts })
}

/// `Sp_J(τ)` before normalization. Vertices whose meet with `J` is empty
/// receive the sum over `C_n`; the others receive `(ω, e_{J⊓ω})`.
pub fn split_tree(tree: &Tree, j: &Subset, c: &Configuration) -> Result<Poly> {
    let leaves = tree.leaf_set();
    if let Some(bad) = j.elems().iter().find(|k| !leaves.contains(k)) {
        return Err(Error::Precondition(format!("{bad} is not a leaf of {tree}")));
    }
    split_rec(tree, j, c)
}

fn split_rec(t: &Tree, j: &Subset, c: &Configuration) -> Result<Poly> {
    match t {
        Tree::Leaf(_) => Ok(Poly::from_tree(t.clone())),
        Tree::Node(g, cs) => {
            let n = cs.len();
            let kids: Vec<Poly> = cs.iter().map(|ch| split_rec(ch, j, c)).collect::<Result<_>>()?;
            let m = meet_children(j, cs);
            let labels = if m.is_empty() {
                c.members(n)?
            } else if c.contains(n, &m) {
                vec![m]
            } else {
                return Err(Error::NotClosed(format!(
                    "meet {m} at `{g}` in {t} lies outside C_{n} of {}",
                    c.name()
                )));
            };
            let mut out = Poly::zero();
            for part in labels {
                out.add_scaled(&crate::rational::one(), &node_product(&split_id(g, &part), &kids));
            }
            Ok(out)
        }
    }
}

pub fn split_poly(p: &Poly, j: &Subset, c: &Configuration) -> Result<Poly> {
    let mut out = Poly::zero();
    for (t, k) in p.iter() {
        out.add_scaled(k, &split_tree(t, j, c)?);
    }
    Ok(out)
}

/// `Σ_{J ∈ C_n} Sp_J(τ)` where `n` is the number of leaves, read on the
/// standardization of the leaf labels.
pub fn split_sum(tree: &Tree, c: &Configuration) -> Result<Poly> {
    let labels: Vec<u32> = tree.leaf_set().into_iter().collect();
    let mut out = Poly::zero();
    for part in c.members(labels.len())? {
        let j = Subset::new(part.elems().iter().map(|&i| labels[i as usize - 1]));
        out.add_scaled(&crate::rational::one(), &split_tree(tree, &j, c)?);
    }
    Ok(out)
}

/// The split presentation: relations `Sp_J(r)` for every relation `r` with
/// `n` leaves and every `J ∈ C_n`, in normal form, zero relations dropped.
pub fn split_presentation(p: &Presentation, c: &Configuration) -> Result<Presentation> {
    let sa = split_alphabet(p.alphabet(), c)?;
    if *c.kind() == ConfigKind::Explicit {
        if let Err(w) = c.validate_closure() {
            return Err(Error::NotClosed(w.to_string()));
        }
    }
    let mut rels = Vec::new();
    for r in p.relations() {
        let Some(set) = r.leaf_set()? else { continue };
        for j in c.members(set.len())? {
            let q = split_poly(r, &j, c)?.normalize(&sa.alphabet)?;
            if !q.is_zero() {
                rels.push(q);
            }
        }
    }
    Presentation::with_alphabet(format!("Sp({}, {})", p.name, c.name()), sa.alphabet, rels)
}
