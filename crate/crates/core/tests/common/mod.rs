#![allow(dead_code)]

use operad_forge::perm::Perm;
use operad_forge::rational;
use operad_forge::rota_baxter::{Algebra, Tensor};
use operad_forge::tree::compositions;
use operad_forge::{catalog, Alphabet, Generator, Presentation, Rational, Sym, Tree};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn t(s: &str) -> Tree {
    Tree::parse(s).unwrap()
}

/// A symmetric alphabet mixing skew, twisted and brace-type actions.
pub fn mixed_symmetric_generators() -> Vec<Generator> {
    let mut gens: Vec<Generator> = Vec::new();
    gens.extend(catalog::lie().unwrap().alphabet().generators().cloned());
    gens.extend(catalog::pre_lie().unwrap().alphabet().generators().cloned());
    gens.extend(catalog::three_pre_lie().unwrap().alphabet().generators().cloned());
    gens.push(Generator::commutative("c3", 3));
    gens
}

pub fn mixed_symmetric_alphabet() -> Alphabet {
    Alphabet::new(mixed_symmetric_generators(), true).unwrap()
}

/// Presentation without relations, so `check_algebra` only tests the action.
pub fn free_presentation(gens: Vec<Generator>) -> Presentation {
    Presentation::new("Free", gens, true, vec![]).unwrap()
}

/// Random tree with `n` leaves over `gens`, leaves labelled by a random
/// permutation of `1..=n`.
pub fn random_tree(rng: &mut StdRng, n: usize, gens: &[(Sym, usize)]) -> Tree {
    fn shape(rng: &mut StdRng, n: usize, gens: &[(Sym, usize)], next: &mut u32) -> Tree {
        if n == 1 {
            *next += 1;
            return Tree::leaf(*next);
        }
        loop {
            let (g, k) = gens.choose(rng).unwrap();
            if *k > n {
                continue;
            }
            let comps = compositions(n, *k);
            let parts = comps.choose(rng).unwrap();
            let kids = parts.iter().map(|&m| shape(rng, m, gens, next)).collect();
            return Tree::node(g.clone(), kids);
        }
    }
    let mut next = 0;
    let t = shape(rng, n, gens, &mut next);
    let mut labels: Vec<u32> = (1..=n as u32).collect();
    labels.shuffle(rng);
    t.relabel(&|k| labels[k as usize - 1])
}

/// An algebra on `k^dim` respecting the action of `alphabet`: for each orbit
/// a random tensor on the representative, spread over the orbit by summing
/// `s · T^σ` over all `σ` with `g0^σ = s · g`.
pub fn random_equivariant_algebra(rng: &mut StdRng, alphabet: &Alphabet, dim: usize) -> Algebra {
    let mut alg = Algebra::new(dim);
    let mut done: Vec<Sym> = Vec::new();
    for g0 in alphabet.generators() {
        if done.contains(&g0.id) {
            continue;
        }
        let n = g0.arity;
        let base = Tensor::from_fn(vec![dim; n], dim, |_| {
            Ok((0..dim).map(|_| rational::int(rng.gen_range(-3..=3))).collect())
        })
        .unwrap();
        let mut acc: std::collections::BTreeMap<Sym, Tensor> = Default::default();
        for sigma in Perm::all(n) {
            let (g, s) = alphabet.act(&g0.id, &sigma).unwrap();
            let im = sigma.images();
            let entry = acc.entry(g.clone()).or_insert_with(|| Tensor::zeros(vec![dim; n], dim).unwrap());
            let mut new = entry.clone();
            let twisted = Tensor::from_fn(vec![dim; n], dim, |idx| {
                let moved: Vec<usize> = (0..n).map(|k| idx[im[k] as usize - 1]).collect();
                Ok(base.output(&moved).iter().map(|x| x * rational::int(s as i64)).collect())
            })
            .unwrap();
            for (a, b) in new.entries_mut().iter_mut().zip(twisted.entries()) {
                *a += b;
            }
            *entry = new;
        }
        for (g, tensor) in acc {
            done.push(g.clone());
            alg.insert(g, tensor).unwrap();
        }
    }
    alg
}

pub fn random_vector(rng: &mut StdRng, dim: usize) -> Vec<Rational> {
    (0..dim).map(|_| rational::int(rng.gen_range(-4..=4))).collect()
}
