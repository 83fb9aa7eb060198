//! Builtin presentations and the identifications between split presentations
//! and their classical names.

use crate::alphabet::Generator;
use crate::config::{Configuration, Subset};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::presentation::Presentation;
use crate::splitting::split_id;
use crate::tree::{Sym, Tree};
use std::collections::BTreeMap;

fn t(s: &str) -> Tree {
    Tree::parse(s).expect("catalog tree literal")
}

/// A relation written as signed tree literals. `*` and `o` stand for
/// macro generators expanded through `macros`.
fn rel(terms: &[(i64, &str)], macros: &BTreeMap<Sym, Poly>) -> Poly {
    let p = Poly::from_ints(terms.iter().map(|&(c, s)| (c, t(s))));
    p.substitute(macros)
}

fn star(ops: &[&str], arity: usize) -> BTreeMap<Sym, Poly> {
    let mut m = BTreeMap::new();
    m.insert(Sym::new("*"), Poly::from_ints(ops.iter().map(|op| (1, Tree::corolla(*op, arity)))));
    m
}

fn no_macros() -> BTreeMap<Sym, Poly> {
    BTreeMap::new()
}

pub fn builtin_names() -> Vec<&'static str> {
    vec![
        "As", "Dend", "TriDend", "PAs2", "PAs3", "PAs4", "TAs2", "TAs3", "TAs4", "PartDend3",
        "TotDend3", "Lie", "PreLie", "PostLie", "2Lie", "3Lie", "4Lie", "GenLie3", "2PreLie",
        "3PreLie", "4PreLie", "GenPreLie3",
    ]
}

pub fn builtin(name: &str) -> Result<Presentation> {
    match name {
        "As" => assoc(),
        "Dend" => dend(),
        "TriDend" => tridend(),
        "PartDend3" => part_dend3(),
        "TotDend3" => tot_dend3(),
        "Lie" => lie(),
        "PreLie" => pre_lie(),
        "PostLie" => post_lie(),
        "3Lie" => three_lie(),
        "GenLie3" => gen_lie3(),
        "3PreLie" => three_pre_lie(),
        "GenPreLie3" => gen_pre_lie3(),
        _ => {
            let family = |prefix: &str| {
                name.strip_prefix(prefix).and_then(|n| n.parse::<usize>().ok()).filter(|n| (2..=4).contains(n))
            };
            let suffix = |suf: &str| {
                name.strip_suffix(suf).and_then(|n| n.parse::<usize>().ok()).filter(|n| (2..=4).contains(n))
            };
            if let Some(n) = family("PAs") {
                partially_assoc(n)
            } else if let Some(n) = family("TAs") {
                totally_assoc(n)
            } else if let Some(n) = suffix("PreLie") {
                n_pre_lie(n)
            } else if let Some(n) = suffix("Lie") {
                n_lie(n)
            } else {
                Err(Error::InvalidPresentation(format!(
                    "unknown builtin `{name}`; known: {}",
                    builtin_names().join(", ")
                )))
            }
        }
    }
}

pub fn assoc() -> Result<Presentation> {
    let r = rel(&[(1, "mu(mu(1,2),3)"), (-1, "mu(1,mu(2,3))")], &no_macros());
    Presentation::new("As", vec![Generator::new("mu", 2)], false, vec![r])
}

pub fn dend() -> Result<Presentation> {
    let m = star(&["prec", "succ"], 2);
    let rels = vec![
        rel(&[(1, "prec(prec(1,2),3)"), (-1, "prec(1,*(2,3))")], &m),
        rel(&[(1, "prec(succ(1,2),3)"), (-1, "succ(1,prec(2,3))")], &m),
        rel(&[(1, "succ(*(1,2),3)"), (-1, "succ(1,succ(2,3))")], &m),
    ];
    Presentation::new("Dend", vec![Generator::new("prec", 2), Generator::new("succ", 2)], false, rels)
}

/// The tridendriform axioms in three groups: the dendriform-shaped ones, the
/// mixed ones, and associativity of the middle product.
pub fn tridend_groups() -> [Vec<Poly>; 3] {
    let m = star(&["prec", "succ", "dot"], 2);
    [
        vec![
            rel(&[(1, "prec(prec(1,2),3)"), (-1, "prec(1,*(2,3))")], &m),
            rel(&[(1, "prec(succ(1,2),3)"), (-1, "succ(1,prec(2,3))")], &m),
            rel(&[(1, "succ(*(1,2),3)"), (-1, "succ(1,succ(2,3))")], &m),
        ],
        vec![
            rel(&[(1, "prec(dot(1,2),3)"), (-1, "dot(1,prec(2,3))")], &m),
            rel(&[(1, "dot(prec(1,2),3)"), (-1, "dot(1,succ(2,3))")], &m),
            rel(&[(1, "dot(succ(1,2),3)"), (-1, "succ(1,dot(2,3))")], &m),
        ],
        vec![rel(&[(1, "dot(dot(1,2),3)"), (-1, "dot(1,dot(2,3))")], &m)],
    ]
}

pub fn tridend_generators() -> Vec<Generator> {
    vec![Generator::new("prec", 2), Generator::new("succ", 2), Generator::new("dot", 2)]
}

pub fn tridend() -> Result<Presentation> {
    let rels = tridend_groups().into_iter().flatten().collect();
    Presentation::new("TriDend", tridend_generators(), false, rels)
}

/// `w(1..i, w(i+1..i+n), i+n+1..2n-1)`
fn nested(g: &str, n: usize, i: usize) -> Tree {
    let mut kids: Vec<Tree> = (1..=i as u32).map(Tree::leaf).collect();
    kids.push(Tree::node(g, (i as u32 + 1..=(i + n) as u32).map(Tree::leaf).collect()));
    kids.extend((i as u32 + n as u32 + 1..=2 * n as u32 - 1).map(Tree::leaf));
    Tree::node(g, kids)
}

pub fn partially_assoc(n: usize) -> Result<Presentation> {
    let r = Poly::from_ints((0..n).map(|i| {
        let sign = if (i * (n - 1)).is_multiple_of(2) { 1 } else { -1 };
        (sign, nested("w", n, i))
    }));
    Presentation::new(format!("PAs{n}"), vec![Generator::new("w", n)], false, vec![r])
}

pub fn totally_assoc(n: usize) -> Result<Presentation> {
    let rels = (1..n).map(|j| Poly::from_ints([(1, nested("w", n, 0)), (-1, nested("w", n, j))])).collect();
    Presentation::new(format!("TAs{n}"), vec![Generator::new("w", n)], false, rels)
}

fn ternary_dend_generators() -> Vec<Generator> {
    vec![Generator::new("nw", 3), Generator::new("up", 3), Generator::new("ne", 3)]
}

pub fn part_dend3() -> Result<Presentation> {
    let m = star(&["nw", "up", "ne"], 3);
    let rels = vec![
        rel(&[(1, "nw(nw(1,2,3),4,5)"), (1, "nw(1,*(2,3,4),5)"), (1, "nw(1,2,*(3,4,5))")], &m),
        rel(&[(1, "nw(up(1,2,3),4,5)"), (1, "up(1,nw(2,3,4),5)"), (1, "up(1,2,*(3,4,5))")], &m),
        rel(&[(1, "nw(ne(1,2,3),4,5)"), (1, "up(1,up(2,3,4),5)"), (1, "ne(1,2,nw(3,4,5))")], &m),
        rel(&[(1, "up(*(1,2,3),4,5)"), (1, "up(1,ne(2,3,4),5)"), (1, "ne(1,2,up(3,4,5))")], &m),
        rel(&[(1, "ne(*(1,2,3),4,5)"), (1, "ne(1,*(2,3,4),5)"), (1, "ne(1,2,ne(3,4,5))")], &m),
    ];
    Presentation::new("PartDend3", ternary_dend_generators(), false, rels)
}

pub fn tot_dend3() -> Result<Presentation> {
    let m = star(&["nw", "up", "ne"], 3);
    let pairs = [
        ("nw(nw(1,2,3),4,5)", "nw(1,*(2,3,4),5)", "nw(1,2,*(3,4,5))"),
        ("nw(up(1,2,3),4,5)", "up(1,nw(2,3,4),5)", "up(1,2,*(3,4,5))"),
        ("nw(ne(1,2,3),4,5)", "up(1,up(2,3,4),5)", "ne(1,2,nw(3,4,5))"),
        ("up(*(1,2,3),4,5)", "up(1,ne(2,3,4),5)", "ne(1,2,up(3,4,5))"),
        ("ne(*(1,2,3),4,5)", "ne(1,*(2,3,4),5)", "ne(1,2,ne(3,4,5))"),
    ];
    let mut rels = Vec::new();
    for (a, b, c) in pairs {
        rels.push(rel(&[(1, a), (-1, b)], &m));
        rels.push(rel(&[(1, a), (-1, c)], &m));
    }
    Presentation::new("TotDend3", ternary_dend_generators(), false, rels)
}

pub fn lie() -> Result<Presentation> {
    let r = rel(&[(1, "br(br(1,2),3)"), (1, "br(br(2,3),1)"), (1, "br(br(3,1),2)")], &no_macros());
    Presentation::new("Lie", vec![Generator::skew("br", 2)], true, vec![r])
}

/// `pre` and its opposite `pre_op(x, y) = pre(y, x)`.
fn pre_lie_generators() -> Vec<Generator> {
    vec![
        Generator::new("pre", 2).with_action(1, "pre_op", 1),
        Generator::new("pre_op", 2).with_action(1, "pre", 1),
    ]
}

/// Right-symmetric: `(x◁y)◁z - x◁(y◁z) = (x◁z)◁y - x◁(z◁y)`.
pub fn pre_lie() -> Result<Presentation> {
    let r = rel(
        &[(1, "pre(pre(1,2),3)"), (-1, "pre(1,pre(2,3))"), (-1, "pre(pre(1,3),2)"), (1, "pre(1,pre(3,2))")],
        &no_macros(),
    );
    Presentation::new("PreLie", pre_lie_generators(), true, vec![r])
}

/// A Lie bracket together with a product `◁` acting on it by derivations,
/// whose associator is symmetric up to the bracket:
/// `[x,y]◁z = [x◁z,y] + [x,y◁z]` and
/// `(x◁y)◁z - x◁(y◁z) - (x◁z)◁y + x◁(z◁y) = x◁[y,z]`.
pub fn post_lie() -> Result<Presentation> {
    let m = no_macros();
    let rels = vec![
        rel(&[(1, "br(br(1,2),3)"), (1, "br(br(2,3),1)"), (1, "br(br(3,1),2)")], &m),
        rel(&[(1, "pre(br(1,2),3)"), (-1, "br(pre(1,3),2)"), (-1, "br(1,pre(2,3))")], &m),
        rel(
            &[
                (1, "pre(pre(1,2),3)"),
                (-1, "pre(1,pre(2,3))"),
                (-1, "pre(pre(1,3),2)"),
                (1, "pre(1,pre(3,2))"),
                (-1, "pre(1,br(2,3))"),
            ],
            &m,
        ),
    ];
    let mut gens = pre_lie_generators();
    gens.push(Generator::skew("br", 2));
    Presentation::new("PostLie", gens, true, rels)
}

pub fn three_lie() -> Result<Presentation> {
    let r = rel(
        &[
            (1, "br(br(1,2,3),4,5)"),
            (-1, "br(br(1,4,5),2,3)"),
            (-1, "br(1,br(2,4,5),3)"),
            (-1, "br(1,2,br(3,4,5))"),
        ],
        &no_macros(),
    );
    Presentation::new("3Lie", vec![Generator::skew("br", 3)], true, vec![r])
}

/// The `n`-Jacobi identity: the bracket with `x_{n+1}, ..., x_{2n-1}`
/// fixed is a derivation.
pub fn n_lie(n: usize) -> Result<Presentation> {
    let tail: Vec<u32> = (n as u32 + 1..=2 * n as u32 - 1).collect();
    let inner = |first: u32| {
        let mut v = vec![Tree::leaf(first)];
        v.extend(tail.iter().map(|&k| Tree::leaf(k)));
        Tree::node("br", v)
    };
    let mut lhs_kids = vec![Tree::corolla("br", n)];
    lhs_kids.extend(tail.iter().map(|&k| Tree::leaf(k)));
    let mut terms = vec![(1, Tree::node("br", lhs_kids))];
    for i in 1..=n as u32 {
        let kids = (1..=n as u32).map(|k| if k == i { inner(i) } else { Tree::leaf(k) }).collect();
        terms.push((-1, Tree::node("br", kids)));
    }
    let r = Poly::from_ints(terms);
    Presentation::new(format!("{n}Lie"), vec![Generator::skew("br", n)], true, vec![r])
}

pub fn gen_lie3() -> Result<Presentation> {
    let r = rel(
        &[
            (1, "br(br(1,2,3),4,5)"),
            (-1, "br(br(1,2,4),3,5)"),
            (1, "br(br(1,3,4),2,5)"),
            (-1, "br(br(2,3,4),1,5)"),
            (1, "br(br(1,2,5),3,4)"),
            (1, "br(br(3,4,5),1,2)"),
            (-1, "br(br(1,3,5),2,4)"),
            (-1, "br(br(2,4,5),1,3)"),
            (1, "br(br(1,4,5),2,3)"),
            (1, "br(br(2,3,5),1,4)"),
        ],
        &no_macros(),
    );
    Presentation::new("GenLie3", vec![Generator::skew("br", 3)], true, vec![r])
}

/// Name of the brace with distinguished slot `k`.
pub fn brace_name(k: usize) -> Sym {
    if k == 1 {
        Sym::new("brace")
    } else {
        Sym::from(format!("brace.{k}"))
    }
}

/// The `S_n`-orbit of a bracket `{x_1, ..., x_n}` that is skew-symmetric in
/// its last `n - 1` arguments. `brace.k(x_1, ..., x_n)` is
/// `{x_k, x_1, ..., x̂_k, ..., x_n}`.
pub fn brace_family(n: usize) -> Vec<Generator> {
    (1..=n)
        .map(|k| {
            let mut g = Generator::new(brace_name(k), n);
            for i in 1..n {
                g = if k == i {
                    g.with_action(i, brace_name(i + 1), 1)
                } else if k == i + 1 {
                    g.with_action(i, brace_name(i), 1)
                } else {
                    g.with_action(i, brace_name(k), -1)
                };
            }
            g
        })
        .collect()
}

/// Sign `(-1)^{(1+i)(n+1-i)}` attached to the `i`-th cyclic term.
fn cyclic_sign(n: usize, i: usize) -> i64 {
    if ((1 + i) * (n + 1 - i)).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `o` expands to the signed cyclic sum `Σ_i ± {x_i, ..., x_n, x_1, ..., x_{i-1}}`.
fn cyclic_macro(n: usize) -> BTreeMap<Sym, Poly> {
    let terms = (1..=n).map(|i| {
        let order = (i..=n).chain(1..i).map(|k| Tree::leaf(k as u32)).collect();
        (cyclic_sign(n, i), Tree::node("brace", order))
    });
    let mut m = BTreeMap::new();
    m.insert(Sym::new("o"), Poly::from_ints(terms));
    m
}

pub fn three_pre_lie() -> Result<Presentation> {
    let m = cyclic_macro(3);
    let rels = vec![
        rel(
            &[
                (1, "brace(brace(1,2,3),4,5)"),
                (-1, "brace(brace(1,4,5),2,3)"),
                (-1, "brace(1,o(2,4,5),3)"),
                (-1, "brace(1,2,o(3,4,5))"),
            ],
            &m,
        ),
        rel(
            &[
                (1, "brace(4,o(1,2,3),5)"),
                (-1, "brace(brace(4,1,5),2,3)"),
                (-1, "brace(brace(4,2,5),3,1)"),
                (-1, "brace(brace(4,3,5),1,2)"),
            ],
            &m,
        ),
    ];
    Presentation::new("3PreLie", brace_family(3), true, rels)
}

/// The `n`-ary pre-Lie identities. The sign `(-1)^{(1+i)(n+1-i)}` belongs to
/// each cyclic summand; with this reading `n = 3` gives `3PreLie`.
pub fn n_pre_lie(n: usize) -> Result<Presentation> {
    let m = cyclic_macro(n);
    let nn = n as u32;
    let tail: Vec<u32> = (nn + 1..=2 * nn - 1).collect();
    let leaf = Tree::leaf;
    // first relation
    let mut r1 = Vec::new();
    let mut kids = vec![Tree::corolla("brace", n)];
    kids.extend(tail.iter().map(|&k| leaf(k)));
    r1.push((1, Tree::node("brace", kids)));
    let mut inner = vec![leaf(1)];
    inner.extend(tail.iter().map(|&k| leaf(k)));
    let mut kids = vec![Tree::node("brace", inner)];
    kids.extend((2..=nn).map(leaf));
    r1.push((-1, Tree::node("brace", kids)));
    for i in 2..=nn {
        let mut inner = vec![leaf(i)];
        inner.extend(tail.iter().map(|&k| leaf(k)));
        let kids = (1..=nn).map(|k| if k == i { Tree::node("o", inner.clone()) } else { leaf(k) }).collect();
        r1.push((-1, Tree::node("brace", kids)));
    }
    // second relation
    let mut r2 = Vec::new();
    let mut kids = vec![leaf(nn + 1), Tree::corolla("o", n)];
    kids.extend((nn + 2..=2 * nn - 1).map(leaf));
    r2.push((1, Tree::node("brace", kids)));
    for i in 1..=nn {
        let mut inner = vec![leaf(nn + 1), leaf(i)];
        inner.extend((nn + 2..=2 * nn - 1).map(leaf));
        let mut kids = vec![Tree::node("brace", inner)];
        kids.extend((i + 1..=nn).chain(1..i).map(leaf));
        r2.push((-cyclic_sign(n, i as usize), Tree::node("brace", kids)));
    }
    let rels = vec![Poly::from_ints(r1).substitute(&m), Poly::from_ints(r2).substitute(&m)];
    Presentation::new(format!("{n}PreLie"), brace_family(n), true, rels)
}

pub fn gen_pre_lie3() -> Result<Presentation> {
    let m = cyclic_macro(3);
    let r = rel(
        &[
            (1, "brace(brace(1,2,3),4,5)"),
            (-1, "brace(brace(1,2,4),3,5)"),
            (1, "brace(brace(1,2,5),3,4)"),
            (1, "brace(brace(1,3,4),2,5)"),
            (-1, "brace(brace(1,3,5),2,4)"),
            (1, "brace(brace(1,4,5),2,3)"),
            (1, "brace(1,o(2,3,4),5)"),
            (-1, "brace(1,o(2,3,5),4)"),
            (1, "brace(1,o(2,4,5),3)"),
            (-1, "brace(1,o(3,4,5),2)"),
        ],
        &m,
    );
    Presentation::new("GenPreLie3", brace_family(3), true, vec![r])
}

/// A split presentation identified with a named one through a signed
/// renaming of generators.
pub struct KnownSplitting {
    pub source: String,
    pub config: Configuration,
    pub target: String,
    /// split generator, sign, target generator
    pub map: Vec<(Sym, i64, Sym)>,
}

impl KnownSplitting {
    pub fn substitution(&self, arity: impl Fn(&Sym) -> usize) -> BTreeMap<Sym, Poly> {
        self.map
            .iter()
            .map(|(from, s, to)| (from.clone(), Poly::from_ints([(*s, Tree::corolla(to.clone(), arity(from)))])))
            .collect()
    }

    /// Each target generator as a signed split generator, for transporting
    /// algebra structures along the identification.
    pub fn target_in_terms_of_split(&self) -> Vec<(Sym, Vec<(crate::rational::Rational, Sym)>)> {
        self.map.iter().map(|(from, s, to)| (to.clone(), vec![(crate::rational::int(*s), from.clone())])).collect()
    }
}

fn ks(source: &str, config: Configuration, target: &str, map: Vec<(Sym, i64, Sym)>) -> KnownSplitting {
    KnownSplitting { source: source.into(), config, target: target.into(), map }
}

fn sid(base: &str, part: &[u32]) -> Sym {
    split_id(&Sym::new(base), &Subset::new(part.iter().copied()))
}

/// For a fully skew `n`-ary bracket, `(ω, e_k) = (-1)^{k-1} brace.k`.
fn skew_to_brace(n: usize) -> Vec<(Sym, i64, Sym)> {
    (1..=n).map(|k| (sid("br", &[k as u32]), if k % 2 == 1 { 1 } else { -1 }, brace_name(k))).collect()
}

pub fn known_splittings() -> Vec<KnownSplitting> {
    let s = Sym::new;
    let mut v = vec![
        ks("As", Configuration::arity(), "Dend", vec![(sid("mu", &[1]), 1, s("prec")), (sid("mu", &[2]), 1, s("succ"))]),
        ks(
            "As",
            Configuration::power(),
            "TriDend",
            vec![
                (sid("mu", &[1]), 1, s("prec")),
                (sid("mu", &[2]), 1, s("succ")),
                (sid("mu", &[1, 2]), 1, s("dot")),
            ],
        ),
        ks(
            "PAs3",
            Configuration::arity(),
            "PartDend3",
            vec![(sid("w", &[1]), 1, s("nw")), (sid("w", &[2]), 1, s("up")), (sid("w", &[3]), 1, s("ne"))],
        ),
        ks(
            "TAs3",
            Configuration::arity(),
            "TotDend3",
            vec![(sid("w", &[1]), 1, s("nw")), (sid("w", &[2]), 1, s("up")), (sid("w", &[3]), 1, s("ne"))],
        ),
        ks("Lie", Configuration::arity(), "PreLie", vec![(sid("br", &[1]), 1, s("pre")), (sid("br", &[2]), -1, s("pre_op"))]),
        ks(
            "Lie",
            Configuration::power(),
            "PostLie",
            vec![(sid("br", &[1]), 1, s("pre")), (sid("br", &[2]), -1, s("pre_op")), (sid("br", &[1, 2]), 1, s("br"))],
        ),
        ks("GenLie3", Configuration::arity(), "GenPreLie3", skew_to_brace(3)),
    ];
    for n in 2..=4 {
        v.push(ks(&format!("{n}Lie"), Configuration::arity(), &format!("{n}PreLie"), skew_to_brace(n)));
    }
    v
}

/// Looks up the identification for a source and configuration name.
pub fn known_splitting(source: &str, config: &str) -> Option<KnownSplitting> {
    known_splittings().into_iter().find(|k| k.source == source && k.config.name() == config)
}
