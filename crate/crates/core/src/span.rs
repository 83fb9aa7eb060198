//! Exact linear algebra on polynomials: spans, membership, and comparison.

use crate::poly::Poly;
use crate::rational::Rational;
use crate::tree::Tree;
use num::One;
use std::collections::BTreeMap;

/// An echelon basis keyed by leading tree. Every stored row is monic and no
/// two rows share a leading tree, so reducing by leading terms alone decides
/// membership.
#[derive(Clone, Debug, Default)]
pub struct RowSpace {
    rows: BTreeMap<Tree, Poly>,
}

impl RowSpace {
    pub fn new() -> RowSpace {
        RowSpace::default()
    }

    pub fn from_polys<'a>(polys: impl IntoIterator<Item = &'a Poly>) -> RowSpace {
        let mut s = RowSpace::new();
        for p in polys {
            s.insert(p);
        }
        s
    }

    /// Remainder of `p` after reducing leading terms; zero iff `p` is in the
    /// span.
    pub fn reduce(&self, p: &Poly) -> Poly {
        let mut v = p.clone();
        loop {
            let Some((lead, c)) = v.leading() else {
                return v;
            };
            let Some(row) = self.rows.get(lead) else {
                return v;
            };
            let c: Rational = -c.clone();
            v.add_scaled(&c, row);
        }
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.reduce(p).is_zero()
    }

    /// Adds `p`; returns whether the rank grew.
    pub fn insert(&mut self, p: &Poly) -> bool {
        let r = self.reduce(p);
        match r.leading() {
            None => false,
            Some((lead, c)) => {
                let lead = lead.clone();
                let row = r.scaled(&(Rational::one() / c));
                self.rows.insert(lead, row);
                true
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> impl Iterator<Item = &Poly> {
        self.rows.values()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpanRelation {
    Equal,
    /// `span(A) ⊊ span(B)`
    AInB,
    /// `span(B) ⊊ span(A)`
    BInA,
    Incomparable,
}

#[derive(Clone, Debug)]
pub struct SpanComparison {
    pub relation: SpanRelation,
    pub rank_a: usize,
    pub rank_b: usize,
    /// An element of A outside span(B), if any.
    pub a_witness: Option<Poly>,
    /// An element of B outside span(A), if any.
    pub b_witness: Option<Poly>,
}

impl SpanComparison {
    pub fn a_in_b(&self) -> bool {
        self.a_witness.is_none()
    }

    pub fn b_in_a(&self) -> bool {
        self.b_witness.is_none()
    }
}

pub fn span_relate(a: &[Poly], b: &[Poly]) -> SpanComparison {
    let sa = RowSpace::from_polys(a);
    let sb = RowSpace::from_polys(b);
    let a_witness = a.iter().find(|p| !sb.contains(p)).cloned();
    let b_witness = b.iter().find(|p| !sa.contains(p)).cloned();
    let relation = match (a_witness.is_none(), b_witness.is_none()) {
        (true, true) => SpanRelation::Equal,
        (true, false) => SpanRelation::AInB,
        (false, true) => SpanRelation::BInA,
        (false, false) => SpanRelation::Incomparable,
    };
    SpanComparison { relation, rank_a: sa.rank(), rank_b: sb.rank(), a_witness, b_witness }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational;

    fn t(k: u32) -> Tree {
        Tree::node("g", vec![Tree::leaf(k), Tree::leaf(k + 1)])
    }

    #[test]
    fn rank_and_membership() {
        let a = Poly::from_ints([(1, t(1)), (1, t(2))]);
        let b = Poly::from_ints([(1, t(2)), (-1, t(3))]);
        let c = Poly::from_ints([(1, t(1)), (1, t(3))]);
        let s = RowSpace::from_polys([&a, &b]);
        assert_eq!(s.rank(), 2);
        assert!(s.contains(&c));
        assert!(!s.contains(&Poly::from_tree(t(1))));
        let mut s2 = s.clone();
        assert!(!s2.insert(&c));
        assert!(s2.insert(&Poly::from_tree(t(4))));
    }

    #[test]
    fn relate_cases() {
        let a = Poly::from_ints([(1, t(1)), (1, t(2))]);
        let b = Poly::from_tree(t(3));
        let r = span_relate(std::slice::from_ref(&a), &[a.scaled(&rational::int(5))]);
        assert_eq!(r.relation, SpanRelation::Equal);
        let r = span_relate(std::slice::from_ref(&a), &[a.clone(), b.clone()]);
        assert_eq!(r.relation, SpanRelation::AInB);
        assert_eq!(r.b_witness, Some(b.clone()));
        let r = span_relate(&[a.clone(), b.clone()], std::slice::from_ref(&b));
        assert_eq!(r.relation, SpanRelation::BInA);
        let r = span_relate(&[a], &[b]);
        assert_eq!(r.relation, SpanRelation::Incomparable);
    }
}
