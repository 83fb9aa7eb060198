//! Verification routines for split presentations: the splitting-sum
//! identity, the canonical morphisms into a split operad, functoriality,
//! restriction along an inclusion of configurations, comparison with named
//! presentations, and the A-infinity bookkeeping.

use crate::catalog::{self, KnownSplitting};
use crate::config::{ConfigKind, Configuration, Subset};
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::poly::Poly;
use crate::presentation::Presentation;
use crate::report::{Report, Status};
use crate::span::{span_relate, RowSpace, SpanRelation};
use crate::splitting::{split_alphabet, split_id, split_poly, split_presentation, split_sum, split_tree};
use crate::tree::{enumerate_decorated, Sym, Tree};
use std::collections::BTreeMap;

/// Compares `Σ_{J ∈ C_n} Sp_J(τ)` with `Sp(τ)` on every generator-decorated
/// tree with `2..=leaf_max` leaves. Leaf counts beyond the index (other than
/// for the arity and trivial configurations, where the identity always holds)
/// are reported as not applicable together with what was observed.
pub fn check_splitting_sum(p: &Presentation, c: &Configuration, leaf_max: usize) -> Result<Report> {
    if leaf_max > 8 {
        return Err(Error::TooLarge(format!("leaf_max {leaf_max} exceeds 8")));
    }
    let gens: Vec<(Sym, usize)> =
        p.alphabet().generators().filter(|g| !g.unary).map(|g| (g.id.clone(), g.arity)).collect();
    let always = matches!(c.kind(), ConfigKind::Arity | ConfigKind::Trivial);
    let mut report = Report::new();
    for n in 2..=leaf_max {
        let trees = enumerate_decorated(n, &gens);
        if trees.is_empty() {
            continue;
        }
        let mut bad = 0usize;
        let mut witness = None;
        for t in &trees {
            let lhs = split_sum(t, c)?;
            let rhs = split_tree(t, &Subset::empty(), c)?;
            if lhs != rhs {
                bad += 1;
                witness.get_or_insert_with(|| format!("{t}: sum = {lhs}, star = {rhs}"));
            }
        }
        let name = format!("splitting-sum {} n={n}", c.name());
        let observed = if bad == 0 {
            format!("identity holds on all {} trees", trees.len())
        } else {
            format!("identity fails on {bad} of {} trees", trees.len())
        };
        let status = if always || c.index().covers(n) {
            if bad == 0 {
                Status::Pass
            } else {
                Status::Fail
            }
        } else {
            Status::NotApplicable
        };
        let detail = if status == Status::NotApplicable {
            format!("outside index {}: {observed}", c.index())
        } else {
            observed
        };
        match witness {
            Some(w) => report.push_witness(name, status, detail, w),
            None => report.push(name, status, detail),
        }
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CanonicalVariant {
    /// `ω ↦ Σ_i (ω, e_i)` into the arity splitting.
    SumArity,
    /// `ω ↦ Σ_{I ∈ C_n} (ω, e_I)`.
    SumFull,
    /// `ω ↦ (ω, e_{[n]})`.
    Top,
}

impl CanonicalVariant {
    pub fn name(&self) -> &'static str {
        match self {
            CanonicalVariant::SumArity => "sum-arity",
            CanonicalVariant::SumFull => "sum-full",
            CanonicalVariant::Top => "top",
        }
    }

    pub fn parse(s: &str) -> Result<CanonicalVariant> {
        match s {
            "sum-arity" => Ok(CanonicalVariant::SumArity),
            "sum-full" => Ok(CanonicalVariant::SumFull),
            "top" => Ok(CanonicalVariant::Top),
            _ => Err(Error::Parse(format!("unknown variant `{s}` (sum-arity, sum-full, top)"))),
        }
    }

    pub fn all() -> [CanonicalVariant; 3] {
        [CanonicalVariant::SumArity, CanonicalVariant::SumFull, CanonicalVariant::Top]
    }
}

/// The image of each generator under a canonical morphism.
pub fn canonical_map(p: &Presentation, c: &Configuration, v: CanonicalVariant) -> Result<BTreeMap<Sym, Poly>> {
    let mut map = BTreeMap::new();
    for g in p.alphabet().generators() {
        let parts = match v {
            CanonicalVariant::SumArity => (1..=g.arity as u32).map(Subset::singleton).collect(),
            CanonicalVariant::SumFull => c.members(g.arity)?,
            CanonicalVariant::Top => vec![Subset::full(g.arity)],
        };
        let image =
            Poly::from_ints(parts.iter().map(|part| (1, Tree::corolla(split_id(&g.id, part), g.arity))));
        map.insert(g.id.clone(), image);
    }
    Ok(map)
}

/// For each relation `r` with `N` leaves, checks that the substituted image
/// of `r` equals the matching sum of split relations (`Σ_{J ∈ C_N}` for the
/// sum variants, `J = [N]` for the top variant) and lies in the split span.
pub fn check_canonical_morphisms(p: &Presentation, c: &Configuration, v: CanonicalVariant) -> Result<Report> {
    let mut report = Report::new();
    let name = format!("canonical {} {} {}", v.name(), p.name, c.name());
    let max_leaves = p.max_relation_leaves();
    let hypothesis = match v {
        CanonicalVariant::SumArity => (*c.kind() == ConfigKind::Arity)
            .then_some(())
            .ok_or_else(|| format!("{} is not the arity configuration", c.name())),
        CanonicalVariant::SumFull | CanonicalVariant::Top => c
            .index()
            .covers(max_leaves)
            .then_some(())
            .ok_or_else(|| format!("index {} is below the relation size {max_leaves}", c.index())),
    };
    if let Err(why) = hypothesis {
        report.push(name, Status::NotApplicable, why);
        return Ok(report);
    }
    if p.is_symmetric() && !c.is_s_invariant() {
        report.push(name, Status::NotApplicable, "configuration is not S-invariant");
        return Ok(report);
    }
    let sa = split_alphabet(p.alphabet(), c)?;
    let split = split_presentation(p, c)?;
    let space = RowSpace::from_polys(split.relations());
    let map = canonical_map(p, c, v)?;
    let mut ok = true;
    let mut witness = None;
    for r in p.relations() {
        let n = r.leaf_set()?.map(|s| s.len()).unwrap_or(0);
        let image = r.substitute(&map).normalize(&sa.alphabet)?;
        let parts = match v {
            CanonicalVariant::Top => vec![Subset::full(n)],
            _ => c.members(n)?,
        };
        let mut expected = Poly::zero();
        for j in &parts {
            expected = expected.plus(&split_poly(r, j, c)?);
        }
        let expected = expected.normalize(&sa.alphabet)?;
        let member = space.contains(&image);
        if image != expected || !member {
            ok = false;
            witness.get_or_insert_with(|| format!("relation {r}: image {image}, expected {expected}"));
        }
    }
    let detail = if ok {
        format!("images of {} relations are sums of split relations", p.relations().len())
    } else {
        "image of a relation is not in the split ideal".to_string()
    };
    match witness {
        Some(w) => report.push_witness(name, Status::Fail, detail, w),
        None => report.pass_fail(name, ok, detail),
    }
    Ok(report)
}

/// Orbit-closed relations (plain relations for nonsymmetric presentations).
fn closed(p: &Presentation) -> Result<Vec<Poly>> {
    p.orbit_closure()
}

/// Splits `source` along the configuration of `k`, renames into the
/// target's generators, and compares orbit-closed spans with the target.
pub fn compare_known(k: &KnownSplitting) -> Result<(Report, crate::span::SpanComparison)> {
    let src = catalog::builtin(&k.source)?;
    let dst = catalog::builtin(&k.target)?;
    let split = split_presentation(&src, &k.config)?;
    let arity = |s: &Sym| split.alphabet().arity(s).unwrap_or(0);
    let renamed = split.rename(split.name.clone(), dst.alphabet(), &k.substitution(arity))?;
    let cmp = span_relate(&closed(&renamed)?, &closed(&dst)?);
    let mut report = Report::new();
    let name = format!("Sp({}, {}) = {}", k.source, k.config.name(), k.target);
    let detail = format!("ranks {} and {}, relation {:?}", cmp.rank_a, cmp.rank_b, cmp.relation);
    let w = cmp.a_witness.as_ref().or(cmp.b_witness.as_ref()).map(|w| w.to_string());
    match w {
        Some(w) => report.push_witness(name, Status::Fail, detail, w),
        None => report.pass_fail(name, cmp.relation == SpanRelation::Equal, detail),
    }
    Ok((report, cmp))
}

/// Whether each relation of `src`, pushed through `map` into the free operad
/// on `dst`'s generators, lies in the ideal of `dst` at its leaf count.
pub fn check_relations_map_into(
    src: &Presentation,
    dst: &Presentation,
    map: &BTreeMap<Sym, Poly>,
    label: &str,
) -> Result<Report> {
    let mut report = Report::new();
    let mut cache: BTreeMap<usize, RowSpace> = BTreeMap::new();
    for (i, r) in src.relations().iter().enumerate() {
        let n = r.leaf_set()?.map(|s| s.len()).unwrap_or(0);
        let image = r.substitute(map).normalize(dst.alphabet())?;
        image.validate(dst.alphabet())?;
        if let std::collections::btree_map::Entry::Vacant(e) = cache.entry(n) {
            e.insert(RowSpace::from_polys(&dst.ideal_component(n)?));
        }
        let ok = cache[&n].contains(&image);
        let name = format!("{label}: relation {} of {}", i + 1, src.name);
        if ok {
            report.push(name, Status::Pass, format!("image lies in the {n}-leaf ideal of {}", dst.name));
        } else {
            report.push_witness(name, Status::Fail, format!("image leaves the ideal of {}", dst.name), image.to_string());
        }
    }
    Ok(report)
}

/// Functoriality of splitting. `eta` sends each generator of `src` to a
/// signed generator of `dst`. Checks that `eta` is an equivariant operad
/// morphism, that the lift `(ω, e_I) ↦ ±(η(ω), e_I)` maps split relations
/// into the split ideal of `dst`, and that the lift commutes with the
/// canonical arity morphisms.
pub fn induced_split_morphism(
    src: &Presentation,
    dst: &Presentation,
    eta: &BTreeMap<Sym, (Sym, i64)>,
    c: &Configuration,
) -> Result<Report> {
    let mut report = Report::new();
    let mut base_map = BTreeMap::new();
    for g in src.alphabet().generators() {
        let Some((h, s)) = eta.get(&g.id) else {
            return Err(Error::Precondition(format!("no image for generator `{}`", g.id)));
        };
        if dst.alphabet().arity(h)? != g.arity {
            return Err(Error::Precondition(format!("`{}` and `{h}` differ in arity", g.id)));
        }
        base_map.insert(g.id.clone(), Poly::from_ints([(*s, Tree::corolla(h.clone(), g.arity))]));
    }
    // equivariance: η(g^t) = η(g)^t
    if src.is_symmetric() {
        let mut ok = true;
        for g in src.alphabet().generators() {
            for i in 1..g.arity {
                let t = Perm::transposition(g.arity, i);
                let (g2, s1) = src.alphabet().act(&g.id, &t)?;
                let (h, s) = &eta[&g.id];
                let (h2, s2) = dst.alphabet().act(h, &t)?;
                let (h3, s3) = &eta[&g2];
                if *h3 != h2 || (s1 as i64) * s3 != (s2 as i64) * s {
                    ok = false;
                }
            }
        }
        report.pass_fail("morphism equivariant", ok, "generator map commutes with the action");
    }
    report.extend(check_relations_map_into(src, dst, &base_map, "morphism")?);

    let ss = split_presentation(src, c)?;
    let sd = split_presentation(dst, c)?;
    let mut lift = BTreeMap::new();
    for g in src.alphabet().generators() {
        let (h, s) = &eta[&g.id];
        for part in c.members(g.arity)? {
            lift.insert(
                split_id(&g.id, &part),
                Poly::from_ints([(*s, Tree::corolla(split_id(h, &part), g.arity))]),
            );
        }
    }
    report.extend(check_relations_map_into(&ss, &sd, &lift, "lift")?);

    if *c.kind() == ConfigKind::Arity {
        let a_src = canonical_map(src, c, CanonicalVariant::SumArity)?;
        let a_dst = canonical_map(dst, c, CanonicalVariant::SumArity)?;
        let mut ok = true;
        for g in src.alphabet().generators() {
            let corolla = Poly::from_tree(Tree::corolla(g.id.clone(), g.arity));
            let one = corolla.substitute(&a_src).substitute(&lift).normalize(sd.alphabet())?;
            let two = corolla.substitute(&base_map).substitute(&a_dst).normalize(sd.alphabet())?;
            ok &= one == two;
        }
        report.pass_fail("lift commutes with canonical morphisms", ok, "on every generator");
    }
    Ok(report)
}

/// Images of the whole brace family when `brace(1,2,3)` maps to `template`:
/// `brace.k(x_1, x_2, x_3) = brace(x_k, ...)` with the other two in order.
fn brace_images(template: &Poly) -> BTreeMap<Sym, Poly> {
    (1..=3u32)
        .map(|k| {
            let order: Vec<u32> = std::iter::once(k).chain((1..=3).filter(|&j| j != k)).collect();
            (catalog::brace_name(k as usize), template.relabel(&|j| order[j as usize - 1]))
        })
        .collect()
}

fn ternary(g: &str, leaves: [u32; 3]) -> Tree {
    Tree::node(g, leaves.iter().map(|&k| Tree::leaf(k)).collect())
}

/// `Σ_σ sgn(σ) w(x_σ(1), x_σ(2), x_σ(3))` for each `w` in `gens`.
fn antisymmetrized(gens: &[&str]) -> Poly {
    let mut p = Poly::zero();
    for pi in Perm::all(3) {
        let im = pi.images();
        for g in gens {
            p.add_term(crate::rational::int(pi.sign() as i64), ternary(g, [im[0], im[1], im[2]]));
        }
    }
    p
}

/// The ternary square: partially dendriform, partially associative,
/// generalized pre-Lie and generalized Lie of order three, together with the
/// lift of `GenLie3 → 3Lie` to the arity splittings and the inclusion of
/// generalized pre-Lie relations in the 3-pre-Lie ideal.
pub fn ternary_diagram() -> Result<Report> {
    let gl = catalog::gen_lie3()?;
    let tl = catalog::three_lie()?;
    let gpl = catalog::gen_pre_lie3()?;
    let tpl = catalog::three_pre_lie()?;
    let pas = catalog::partially_assoc(3)?.symmetrize()?;
    let pd = catalog::part_dend3()?.symmetrize()?;
    let mut report = Report::new();

    let mut eta = BTreeMap::new();
    eta.insert(Sym::new("br"), (Sym::new("br"), 1));
    report.extend(induced_split_morphism(&gl, &tl, &eta, &Configuration::arity())?);
    report.extend(check_relations_map_into(&gpl, &tpl, &BTreeMap::new(), "inclusion")?);

    let star = ["nw", "up", "ne"];
    let local = Poly::from_ints([(1, ternary("w", [1, 2, 3])), (-1, ternary("w", [1, 3, 2]))]);
    let mut left = Poly::zero();
    for g in star {
        left.add_term(crate::rational::one(), ternary(g, [1, 2, 3]));
        left.add_term(-crate::rational::one(), ternary(g, [1, 3, 2]));
    }
    let cyclic = Poly::from_ints([(1, ternary("brace", [1, 2, 3])), (1, ternary("brace", [2, 3, 1])), (1, ternary("brace", [3, 1, 2]))]);
    let mut to_brace = BTreeMap::new();
    to_brace.insert(Sym::new("br"), cyclic.clone());
    let mut anti = BTreeMap::new();
    anti.insert(Sym::new("br"), antisymmetrized(&["w"]));
    let mut sum = BTreeMap::new();
    let star_sum: Poly = star.iter().fold(Poly::zero(), |acc, g| acc.plus(&Poly::from_tree(ternary(g, [1, 2, 3]))));
    sum.insert(Sym::new("w"), star_sum);

    report.extend(check_relations_map_into(&gpl, &pas, &brace_images(&local), "local commutator")?);
    report.extend(check_relations_map_into(&gpl, &pd, &brace_images(&left), "left vertical")?);
    report.extend(check_relations_map_into(&gl, &pas, &anti, "commutator")?);
    report.extend(check_relations_map_into(&gl, &gpl, &to_brace, "cyclic sum")?);
    report.extend(check_relations_map_into(&tl, &tpl, &to_brace, "cyclic sum")?);
    report.extend(check_relations_map_into(&pas, &pd, &symmetric_sum(&pas, &sum)?, "sum")?);

    // Both paths from the bracket to partially dendriform trees.
    let br = Poly::from_tree(ternary("br", [1, 2, 3]));
    let via_pas = br.substitute(&anti).substitute(&symmetric_sum(&pas, &sum)?).normalize(pd.alphabet())?;
    let via_gpl = br.substitute(&to_brace).substitute(&brace_images(&left)).normalize(pd.alphabet())?;
    report.pass_fail("square commutes", via_pas == via_gpl, format!("bracket maps to {via_pas}"));
    Ok(report)
}

/// Extends a map on `w` to the regular-representation copies `w@σ` of a
/// symmetrized alphabet by relabeling.
fn symmetric_sum(sym: &Presentation, base: &BTreeMap<Sym, Poly>) -> Result<BTreeMap<Sym, Poly>> {
    let mut out = BTreeMap::new();
    for g in sym.alphabet().generators() {
        let (root, perm) = match g.id.as_str().split_once('@') {
            Some((r, p)) => (Sym::new(r), Some(p.to_string())),
            None => (g.id.clone(), None),
        };
        let Some(img) = base.get(&root) else { continue };
        let img = match perm {
            None => img.clone(),
            Some(p) => {
                let digits: Vec<u32> = p.chars().map(|c| c.to_digit(10).unwrap_or(0)).collect();
                let pi = Perm::from_images(&digits).ok_or_else(|| Error::Parse(format!("bad permutation in `{}`", g.id)))?;
                let (back, _) = sym.alphabet().act(&root, &pi)?;
                if back != g.id {
                    return Err(Error::TheoremViolation(format!("regular copy `{}` is not `{root}` acted on by {p}", g.id)));
                }
                img.relabel(&|k| digits[k as usize - 1])
            }
        };
        out.insert(g.id.clone(), img);
    }
    Ok(out)
}

/// Restriction along `C ⊆ C'`: the map sending `(ω, e_I)` to itself when
/// `I ∈ C` and to zero otherwise carries `Sp_{C'}` relations into the
/// `Sp_C` span, and onto it.
pub fn restriction_morphism(p: &Presentation, small: &Configuration, big: &Configuration) -> Result<Report> {
    let mut report = Report::new();
    let n_top = p.max_relation_leaves().max(p.alphabet().generators().map(|g| g.arity).max().unwrap_or(0));
    for n in 1..=n_top {
        let inner = small.members(n)?;
        if inner.iter().any(|s| !big.contains(n, s)) {
            return Err(Error::Precondition(format!(
                "{} is not contained in {} at level {n}",
                small.name(),
                big.name()
            )));
        }
    }
    let sp_big = split_presentation(p, big)?;
    let sp_small = split_presentation(p, small)?;
    let mut zero = BTreeMap::new();
    for g in p.alphabet().generators() {
        for part in big.members(g.arity)? {
            let id = split_id(&g.id, &part);
            let image =
                if small.contains(g.arity, &part) { Poly::from_tree(Tree::corolla(id.clone(), g.arity)) } else { Poly::zero() };
            zero.insert(id, image);
        }
    }
    let images: Vec<Poly> = sp_big
        .relations()
        .iter()
        .map(|r| r.substitute(&zero).normalize(sp_small.alphabet()))
        .collect::<Result<_>>()?;
    let images: Vec<Poly> = images.into_iter().filter(|r| !r.is_zero()).collect();
    let cmp = span_relate(&closed_in(&sp_small, &images)?, &closed(&sp_small)?);
    let name = format!("restriction {} -> {} on {}", big.name(), small.name(), p.name);
    report.pass_fail(
        format!("{name}: into"),
        cmp.a_in_b(),
        format!("{} nonzero images of {} relations", images.len(), sp_big.relations().len()),
    );
    report.pass_fail(format!("{name}: onto"), cmp.b_in_a(), format!("ranks {} and {}", cmp.rank_a, cmp.rank_b));
    Ok(report)
}

fn closed_in(p: &Presentation, rels: &[Poly]) -> Result<Vec<Poly>> {
    if !p.is_symmetric() {
        return Ok(rels.to_vec());
    }
    let mut out = Vec::new();
    for r in rels {
        out.extend(p.relation_orbit(r)?);
    }
    Ok(out)
}

/// A quintuple `(p, q, r, ℓ, j)`: the term
/// `(ω_k, e_ℓ) ∘ (id^p ⊗ (ω_q, e_j) ⊗ id^r)` with `k = p + 1 + r`.
pub type Quintuple = (usize, usize, usize, usize, usize);

fn ainf_tree(p: usize, q: usize, r: usize) -> Tree {
    let k = p + 1 + r;
    let mut kids: Vec<Tree> = (1..=p as u32).map(Tree::leaf).collect();
    kids.push(Tree::node(format!("m{q}"), (p as u32 + 1..=(p + q) as u32).map(Tree::leaf).collect()));
    kids.extend((p as u32 + q as u32 + 1..=(p + q + r) as u32).map(Tree::leaf));
    Tree::node(format!("m{k}"), kids)
}

/// Reads back `(ℓ, j)` from a split two-vertex tree.
fn decode(t: &Tree) -> Option<(usize, usize)> {
    let Tree::Node(outer, kids) = t else { return None };
    let inner = kids.iter().find_map(|c| match c {
        Tree::Node(g, _) => Some(g),
        _ => None,
    })?;
    let part = |s: &Sym| -> Option<usize> {
        let inside = s.as_str().split_once('[')?.1.strip_suffix(']')?;
        inside.parse().ok()
    };
    Some((part(outer)?, part(inner)?))
}

/// The quadratic A-infinity relation at arity `n` split at leaf `i`,
/// computed by running the splitting on each term.
pub fn ainf_split_terms(n: usize, i: usize) -> Result<BTreeMap<Quintuple, i64>> {
    let c = Configuration::arity();
    let mut out = BTreeMap::new();
    for q in 2..=n {
        for p in 0..=n - q {
            let r = n - p - q;
            if p + 1 + r < 2 {
                continue;
            }
            let sign = if (p + q * r).is_multiple_of(2) { 1 } else { -1 };
            let split = split_tree(&ainf_tree(p, q, r), &Subset::singleton(i as u32), &c)?;
            for (t, coeff) in split.iter() {
                let (l, j) = decode(t).ok_or_else(|| Error::TheoremViolation(format!("undecodable {t}")))?;
                let c: i64 = if coeff == &crate::rational::one() { 1 } else { -1 };
                *out.entry((p, q, r, l, j)).or_insert(0) += sign * c;
            }
        }
    }
    out.retain(|_, v| *v != 0);
    Ok(out)
}

/// The quintuples prescribed by the index conditions, with their signs.
pub fn ainf_expected_terms(n: usize, i: usize) -> BTreeMap<Quintuple, i64> {
    let mut out = BTreeMap::new();
    for q in 2..=n {
        for p in 0..=n - q {
            let r = n - p - q;
            let k = p + 1 + r;
            if k < 2 {
                continue;
            }
            let sign = if (p + q * r).is_multiple_of(2) { 1 } else { -1 };
            for l in 1..=k {
                for j in 1..=q {
                    let hit = if p + 1 < l {
                        i == q + l - 1
                    } else if p + 1 == l {
                        i == l - 1 + j
                    } else {
                        i == l
                    };
                    if hit {
                        out.insert((p, q, r, l, j), sign);
                    }
                }
            }
        }
    }
    out
}

pub fn ainf_split_bookkeeping(n: usize) -> Result<Report> {
    if !(2..=8).contains(&n) {
        return Err(Error::Precondition(format!("arity {n} outside 2..=8")));
    }
    let mut report = Report::new();
    for i in 1..=n {
        let got = ainf_split_terms(n, i)?;
        let want = ainf_expected_terms(n, i);
        let name = format!("A-infinity n={n} i={i}");
        if got == want {
            report.push(name, Status::Pass, format!("{} quintuples agree", got.len()));
        } else {
            let diff: Vec<_> = got
                .iter()
                .filter(|(k, v)| want.get(*k) != Some(v))
                .chain(want.iter().filter(|(k, v)| got.get(*k) != Some(v)))
                .take(4)
                .collect();
            report.push_witness(name, Status::Fail, "quintuples differ", format!("{diff:?}"));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ainf_small_case() {
        let got = ainf_split_terms(3, 2).unwrap();
        assert!(got.contains_key(&(0, 2, 1, 1, 2)));
        assert!(ainf_split_terms(2, 1).unwrap().is_empty());
    }

    #[test]
    fn canonical_variant_names_round_trip() {
        for v in CanonicalVariant::all() {
            assert_eq!(CanonicalVariant::parse(v.name()).unwrap(), v);
        }
    }
}
