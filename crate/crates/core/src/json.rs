//! JSON encodings of trees, polynomials, configurations, presentations,
//! algebras, operators and modules. Rationals are `"p/q"` strings.

use crate::alphabet::Generator;
use crate::config::{ConfigKind, Configuration, Subset};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::presentation::Presentation;
use crate::rational::{self, Rational};
use crate::rota_baxter::{Algebra, Matrix, Module, Tensor};
use crate::tree::{Sym, Tree};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// Inputs longer than this are refused before parsing.
pub const MAX_INPUT_BYTES: usize = 16 << 20;
/// Deepest tensor nesting accepted (arity 12 plus the output level).
const MAX_TENSOR_DEPTH: usize = 13;

fn check_size(s: &str) -> Result<()> {
    if s.len() > MAX_INPUT_BYTES {
        return Err(Error::TooLarge(format!("input of {} bytes", s.len())));
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum TreeJson {
    Leaf { leaf: u32 },
    Node { gen: String, children: Vec<TreeJson> },
    Text(String),
}

impl TreeJson {
    fn from_tree(t: &Tree) -> TreeJson {
        match t {
            Tree::Leaf(k) => TreeJson::Leaf { leaf: *k },
            Tree::Node(g, cs) => {
                TreeJson::Node { gen: g.to_string(), children: cs.iter().map(TreeJson::from_tree).collect() }
            }
        }
    }

    fn into_tree(self) -> Result<Tree> {
        match self {
            TreeJson::Leaf { leaf } => Ok(Tree::leaf(leaf)),
            TreeJson::Node { gen, children } => {
                if gen.is_empty() {
                    return Err(Error::Parse("empty generator name".into()));
                }
                Ok(Tree::node(Sym::from(gen), children.into_iter().map(TreeJson::into_tree).collect::<Result<_>>()?))
            }
            TreeJson::Text(s) => Tree::parse(&s),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    tree: TreeJson,
}

fn poly_json(p: &Poly) -> Vec<TermJson> {
    p.iter().map(|(t, c)| TermJson { coeff: rational::format(c), tree: TreeJson::from_tree(t) }).collect()
}

fn poly_from(terms: Vec<TermJson>) -> Result<Poly> {
    let mut p = Poly::zero();
    for t in terms {
        let tree = t.tree.into_tree()?;
        tree.check_labels()?;
        p.add_term(rational::parse(&t.coeff)?, tree);
    }
    Ok(p)
}

pub fn tree_to_json(t: &Tree) -> Value {
    serde_json::to_value(TreeJson::from_tree(t)).expect("tree serializes")
}

/// A tree as `{"leaf": k}`, `{"gen": .., "children": [..]}`, or a string in
/// the text notation `g(1,h(2,3))`.
pub fn tree_from_str(s: &str) -> Result<Tree> {
    check_size(s)?;
    let t = serde_json::from_str::<TreeJson>(s)?.into_tree()?;
    t.check_labels()?;
    Ok(t)
}

pub fn poly_to_json(p: &Poly) -> Value {
    serde_json::to_value(poly_json(p)).expect("poly serializes")
}

pub fn poly_from_str(s: &str) -> Result<Poly> {
    check_size(s)?;
    poly_from(serde_json::from_str(s)?)
}

#[derive(Serialize, Deserialize)]
struct ConfigJson {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sets: Option<BTreeMap<String, Vec<Vec<u32>>>>,
}

fn named_config(kind: &str, m: Option<usize>) -> Result<Configuration> {
    let need_m = || m.ok_or_else(|| Error::InvalidConfig(format!("`{kind}` needs a parameter m")));
    match kind {
        "arity" => Ok(Configuration::arity()),
        "power" => Ok(Configuration::power()),
        "trivial" => Ok(Configuration::trivial()),
        "capped" => Ok(Configuration::capped(need_m()?)),
        "singletons_below" => Ok(Configuration::singletons_below(need_m()?)),
        _ => Err(Error::InvalidConfig(format!("unknown configuration kind `{kind}`"))),
    }
}

pub fn config_to_json(c: &Configuration) -> Value {
    let mut j = ConfigJson { kind: c.kind().name().into(), m: c.kind().parameter(), n_max: Some(c.n_max()), sets: None };
    if matches!(c.kind(), ConfigKind::Explicit) {
        let mut sets = BTreeMap::new();
        for n in 1..=c.n_max() {
            let level = c.members(n).unwrap_or_default();
            if !level.is_empty() {
                sets.insert(n.to_string(), level.iter().map(|s| s.elems().to_vec()).collect());
            }
        }
        j.sets = Some(sets);
    }
    serde_json::to_value(j).expect("config serializes")
}

pub fn config_from_str(s: &str) -> Result<Configuration> {
    check_size(s)?;
    let j: ConfigJson = serde_json::from_str(s)?;
    if j.kind == "explicit" {
        let n_max = j.n_max.ok_or_else(|| Error::InvalidConfig("explicit configuration needs n_max".into()))?;
        let mut sets = BTreeMap::new();
        for (k, v) in j.sets.unwrap_or_default() {
            let n: usize = k.parse().map_err(|_| Error::InvalidConfig(format!("level `{k}` is not a number")))?;
            sets.insert(n, v.into_iter().map(Subset::new).collect());
        }
        return Configuration::explicit(n_max, sets);
    }
    let c = named_config(&j.kind, j.m)?;
    Ok(match j.n_max {
        Some(n) => c.with_n_max(n),
        None => c,
    })
}

/// `arity`, `power`, `trivial`, `capped:m` or `singletons_below:m`,
/// optionally prefixed by `builtin:`.
pub fn parse_config_selector(s: &str) -> Result<Configuration> {
    let s = s.strip_prefix("builtin:").unwrap_or(s);
    let (kind, m) = match s.split_once(':') {
        Some((k, m)) => {
            let m: usize = m.parse().map_err(|_| Error::InvalidConfig(format!("bad parameter in `{s}`")))?;
            (k, Some(m))
        }
        None => (s, None),
    };
    if m.is_some() && !matches!(kind, "capped" | "singletons_below") {
        return Err(Error::InvalidConfig(format!("`{kind}` takes no parameter")));
    }
    named_config(kind, m)
}

#[derive(Serialize, Deserialize)]
struct ActionJson {
    transposition: [usize; 2],
    target: String,
    sign: i8,
}

#[derive(Serialize, Deserialize)]
struct GeneratorJson {
    id: String,
    arity: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    action: Vec<ActionJson>,
}

#[derive(Serialize, Deserialize)]
struct PresentationJson {
    name: String,
    symmetric: bool,
    generators: Vec<GeneratorJson>,
    relations: Vec<Vec<TermJson>>,
}

pub fn presentation_to_json(p: &Presentation) -> Value {
    let generators = p
        .alphabet()
        .generators()
        .map(|g| GeneratorJson {
            id: g.id.to_string(),
            arity: g.arity,
            action: g
                .action
                .iter()
                .enumerate()
                .map(|(i, e)| ActionJson { transposition: [i + 1, i + 2], target: e.target.to_string(), sign: e.sign })
                .collect(),
        })
        .collect();
    let j = PresentationJson {
        name: p.name.clone(),
        symmetric: p.is_symmetric(),
        generators,
        relations: p.relations().iter().map(poly_json).collect(),
    };
    serde_json::to_value(j).expect("presentation serializes")
}

pub fn presentation_from_str(s: &str) -> Result<Presentation> {
    check_size(s)?;
    let j: PresentationJson = serde_json::from_str(s)?;
    let mut gens = Vec::new();
    for g in j.generators {
        if g.arity < 2 || g.arity > 12 {
            return Err(Error::InvalidPresentation(format!("generator `{}` has arity {}", g.id, g.arity)));
        }
        let mut gen = Generator::new(g.id.as_str(), g.arity);
        for a in g.action {
            let [i, k] = a.transposition;
            if i == 0 || k != i + 1 || k > g.arity {
                return Err(Error::InvalidAction(format!("`{}`: ({i} {k}) is not an adjacent transposition", g.id)));
            }
            gen = gen.with_action(i, a.target.as_str(), a.sign);
        }
        gens.push(gen);
    }
    let rels = j.relations.into_iter().map(poly_from).collect::<Result<Vec<_>>>()?;
    Presentation::new(j.name, gens, j.symmetric, rels)
}

fn rational_value(r: &Rational) -> Value {
    Value::String(rational::format(r))
}

fn rational_from_value(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => rational::parse(s),
        Value::Number(n) if n.is_i64() => Ok(rational::int(n.as_i64().expect("checked"))),
        _ => Err(Error::Parse(format!("expected a rational string, found {v}"))),
    }
}

/// Nested arrays with the output coordinates innermost.
fn tensor_to_value(t: &Tensor) -> Value {
    fn build(t: &Tensor, prefix: &mut Vec<usize>) -> Value {
        if prefix.len() == t.arity() {
            return Value::Array(t.output(prefix).iter().map(rational_value).collect());
        }
        let d = t.in_dims()[prefix.len()];
        let mut items = Vec::with_capacity(d);
        for i in 0..d {
            prefix.push(i);
            items.push(build(t, prefix));
            prefix.pop();
        }
        Value::Array(items)
    }
    build(t, &mut Vec::new())
}

fn tensor_from_value(v: &Value) -> Result<Tensor> {
    let mut shape = Vec::new();
    let mut cur = v;
    while let Value::Array(items) = cur {
        if shape.len() >= MAX_TENSOR_DEPTH {
            return Err(Error::TooLarge("tensor nested too deeply".into()));
        }
        if items.is_empty() {
            return Err(Error::Parse("empty array in tensor".into()));
        }
        shape.push(items.len());
        cur = &items[0];
    }
    let out = shape.pop().ok_or_else(|| Error::Parse("tensor must be an array".into()))?;
    let mut t = Tensor::zeros(shape.clone(), out)?;
    let mut flat = Vec::new();
    fn walk<'a>(v: &'a Value, shape: &[usize], out: usize, flat: &mut Vec<&'a Value>) -> Result<()> {
        let items = v.as_array().ok_or_else(|| Error::Parse("ragged tensor".into()))?;
        match shape.split_first() {
            None => {
                if items.len() != out {
                    return Err(Error::Parse("ragged tensor".into()));
                }
                flat.extend(items);
            }
            Some((&d, rest)) => {
                if items.len() != d {
                    return Err(Error::Parse("ragged tensor".into()));
                }
                for it in items {
                    walk(it, rest, out, flat)?;
                }
            }
        }
        Ok(())
    }
    walk(v, &shape, out, &mut flat)?;
    for (slot, x) in t.entries_mut().iter_mut().zip(flat) {
        *slot = rational_from_value(x)?;
    }
    Ok(t)
}

pub fn algebra_to_json(a: &Algebra) -> Value {
    let ops: serde_json::Map<String, Value> = a.ops().map(|(g, t)| (g.to_string(), tensor_to_value(t))).collect();
    json!({ "dim": a.dim, "ops": ops })
}

#[derive(Deserialize)]
struct AlgebraJson {
    dim: usize,
    ops: BTreeMap<String, Value>,
}

pub fn algebra_from_str(s: &str) -> Result<Algebra> {
    check_size(s)?;
    let j: AlgebraJson = serde_json::from_str(s)?;
    if j.dim == 0 {
        return Err(Error::Parse("dimension must be positive".into()));
    }
    let mut a = Algebra::new(j.dim);
    for (g, v) in j.ops {
        a.insert(g.as_str(), tensor_from_value(&v)?)?;
    }
    Ok(a)
}

pub fn operator_to_json(m: &Matrix) -> Value {
    json!({ "matrix": m.data.iter().map(|r| r.iter().map(rational_value).collect::<Vec<_>>()).collect::<Vec<_>>() })
}

#[derive(Deserialize)]
struct OperatorJson {
    matrix: Vec<Vec<Value>>,
}

/// `{"matrix": [[..]]}` where `matrix[i][j]` is coordinate `i` of the image
/// of basis vector `j`.
pub fn operator_from_str(s: &str) -> Result<Matrix> {
    check_size(s)?;
    let j: OperatorJson = serde_json::from_str(s)?;
    if j.matrix.is_empty() {
        return Err(Error::Parse("empty matrix".into()));
    }
    let rows = j
        .matrix
        .iter()
        .map(|r| r.iter().map(rational_from_value).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

fn module_key(g: &Sym, part: &Subset) -> String {
    format!("{g}|I={}", part.key())
}

pub fn module_to_json(m: &Module) -> Value {
    let l: serde_json::Map<String, Value> =
        m.actions().map(|((g, part), t)| (module_key(g, part), tensor_to_value(t))).collect();
    json!({ "dimU": m.dim_u, "l": l })
}

#[derive(Deserialize)]
struct ModuleJson {
    #[serde(rename = "dimU")]
    dim_u: usize,
    l: BTreeMap<String, Value>,
}

/// Shapes are checked later against an algebra and presentation.
pub fn module_from_str(s: &str) -> Result<Module> {
    check_size(s)?;
    let j: ModuleJson = serde_json::from_str(s)?;
    if j.dim_u == 0 {
        return Err(Error::Parse("dimU must be positive".into()));
    }
    let mut m = Module::new(j.dim_u);
    for (k, v) in j.l {
        let (g, part) = k
            .split_once("|I=")
            .ok_or_else(|| Error::Parse(format!("module key `{k}` is not of the form gen|I=1,3")))?;
        m.insert(g, Subset::parse_key(part)?, tensor_from_value(&v)?);
    }
    Ok(m)
}

pub fn to_pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("value serializes")
}
