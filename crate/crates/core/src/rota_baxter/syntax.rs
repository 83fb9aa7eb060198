//! The Rota-Baxter alphabet and the map sending split generators to
//! operations decorated by the operator.

use crate::alphabet::{Alphabet, Generator};
use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::presentation::Presentation;
use crate::rational::{self, Rational};
use crate::splitting::SplitAlphabet;
use crate::tree::{Sym, Tree};

/// Name of the adjoined unary operator.
pub const RB_OPERATOR: &str = "P";

fn p_above(t: Tree) -> Tree {
    Tree::node(Sym::new(RB_OPERATOR), vec![t])
}

/// The alphabet of `p` extended by the unary operator `P`.
pub fn rb_alphabet(p: &Presentation) -> Result<Alphabet> {
    let a = p.alphabet();
    if a.get(&Sym::new(RB_OPERATOR)).is_some() {
        return Err(Error::Precondition(format!("generator name `{RB_OPERATOR}` is reserved for the operator")));
    }
    let mut gens: Vec<Generator> = a.generators().cloned().collect();
    gens.push(Generator::unary(RB_OPERATOR));
    Alphabet::new(gens, a.is_symmetric())
}

/// One relation per generator `ω` of arity `n`:
/// `ω(P x_1, ..., P x_n) − Σ_{I ∈ C_n} λ^{|I|−1} P(ω(y^I))` where `y^I_k`
/// is `x_k` for `k ∈ I` and `P x_k` otherwise.
pub fn rb_relations(p: &Presentation, c: &Configuration, lambda: &Rational) -> Result<Vec<Poly>> {
    c.validate_closure().map_err(|w| Error::NotClosed(w.to_string()))?;
    rb_alphabet(p)?;
    let mut out = Vec::new();
    for g in p.alphabet().generators() {
        let n = g.arity;
        let leaves = |under: &dyn Fn(u32) -> bool| -> Vec<Tree> {
            (1..=n as u32).map(|k| if under(k) { p_above(Tree::leaf(k)) } else { Tree::leaf(k) }).collect()
        };
        let mut r = Poly::from_tree(Tree::node(g.id.clone(), leaves(&|_| true)));
        for part in c.members(n)? {
            let coeff = rational::pow(lambda, part.len() - 1);
            let t = p_above(Tree::node(g.id.clone(), leaves(&|k| !part.contains(k))));
            r.add_term(-coeff, t);
        }
        out.push(r);
    }
    Ok(out)
}

fn xi_tree(t: &Tree, sa: &SplitAlphabet) -> Result<Tree> {
    match t {
        Tree::Leaf(_) => Ok(t.clone()),
        Tree::Node(g, cs) => {
            let (base, part) = sa.origin(g).ok_or_else(|| Error::UnknownGenerator(g.to_string()))?;
            let kids = cs
                .iter()
                .enumerate()
                .map(|(j, c)| {
                    let c = xi_tree(c, sa)?;
                    Ok(if part.contains(j as u32 + 1) { c } else { p_above(c) })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Tree::node(base.clone(), kids))
        }
    }
}

/// Replaces each split vertex `(ω, e_I)` by `ω` with `P` inserted above the
/// children off `I`.
pub fn xi(p: &Poly, sa: &SplitAlphabet) -> Result<Poly> {
    let mut out = Poly::zero();
    for (t, c) in p.iter() {
        out.add_term(c.clone(), xi_tree(t, sa)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::config::Subset;
    use crate::splitting::{split_alphabet, split_tree};

    fn t(s: &str) -> Tree {
        Tree::parse(s).unwrap()
    }

    #[test]
    fn associative_arity_relation() {
        let r = rb_relations(&catalog::assoc().unwrap(), &Configuration::arity(), &rational::one()).unwrap();
        let want = Poly::from_ints([(1, t("mu(P(1),P(2))")), (-1, t("P(mu(1,P(2)))")), (-1, t("P(mu(P(1),2))"))]);
        assert_eq!(r, vec![want]);
    }

    #[test]
    fn power_adds_weighted_term() {
        let lambda = rational::int(5);
        let r = rb_relations(&catalog::assoc().unwrap(), &Configuration::power(), &lambda).unwrap();
        assert_eq!(r[0].coeff(&t("P(mu(1,2))")), rational::int(-5));
        assert_eq!(r[0].len(), 4);
    }

    #[test]
    fn trivial_ternary_relation() {
        let p = catalog::partially_assoc(3).unwrap();
        let r = rb_relations(&p, &Configuration::trivial(), &rational::one()).unwrap();
        let want = Poly::from_ints([(1, t("w(P(1),P(2),P(3))")), (-1, t("P(w(1,2,3))"))]);
        assert_eq!(r, vec![want]);
        let r = rb_relations(&p, &Configuration::trivial(), &rational::int(7)).unwrap();
        assert_eq!(r[0].coeff(&t("P(w(1,2,3))")), rational::int(-49));
    }

    #[test]
    fn xi_inserts_operator_off_the_part() {
        let sa = split_alphabet(catalog::assoc().unwrap().alphabet(), &Configuration::arity()).unwrap();
        let x = xi(&Poly::from_tree(t("mu[1](1,2)")), &sa).unwrap();
        assert_eq!(x, Poly::from_tree(t("mu(1,P(2))")));
        let sa = split_alphabet(catalog::assoc().unwrap().alphabet(), &Configuration::power()).unwrap();
        assert_eq!(xi(&Poly::from_tree(t("mu[1,2](1,2)")), &sa).unwrap(), Poly::from_tree(t("mu(1,2)")));
    }

    #[test]
    fn xi_of_split_comb() {
        let c = Configuration::arity();
        let sa = split_alphabet(catalog::assoc().unwrap().alphabet(), &c).unwrap();
        let comb = t("mu(mu(1,2),3)");
        // J = {1}: both vertices take the left part, P lands off the path to 1.
        let s = split_tree(&comb, &Subset::singleton(1), &c).unwrap();
        assert_eq!(xi(&s, &sa).unwrap(), Poly::from_tree(t("mu(mu(1,P(2)),P(3))")));
        // J = {3}: the root is (mu,e2); the left child sees no J leaf and sums.
        let s = split_tree(&comb, &Subset::singleton(3), &c).unwrap();
        let want = Poly::from_ints([(1, t("mu(P(mu(1,P(2))),3)")), (1, t("mu(P(mu(P(1),2)),3)"))]);
        assert_eq!(xi(&s, &sa).unwrap(), want);
    }
}
