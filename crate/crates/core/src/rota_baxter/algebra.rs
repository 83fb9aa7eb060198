use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::presentation::Presentation;
use crate::rational::{self, Rational};
use crate::report::{Report, Status};
use crate::tree::{Sym, Tree};
use num::Zero;
use std::collections::BTreeMap;

pub type Vector = Vec<Rational>;

/// Largest number of scalar entries a single tensor may hold.
pub const MAX_TENSOR_ENTRIES: usize = 10_000_000;
/// Largest number of basis tuples an exhaustive check may visit.
pub const MAX_EVALUATIONS: usize = 1_000_000;

pub fn basis_vector(dim: usize, i: usize) -> Vector {
    let mut v = vec![rational::zero(); dim];
    v[i] = rational::one();
    v
}

pub fn add_scaled(acc: &mut Vector, c: &Rational, v: &[Rational]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += c * b;
        }
    }
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// All index tuples of the given shape, last position fastest.
pub fn tuples(dims: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let total: usize = dims.iter().product();
    let mut cur = vec![0usize; dims.len()];
    let mut first = true;
    (0..total).map(move |_| {
        if !first {
            for k in (0..dims.len()).rev() {
                cur[k] += 1;
                if cur[k] < dims[k] {
                    break;
                }
                cur[k] = 0;
            }
        }
        first = false;
        cur.clone()
    })
}

pub fn checked_count(dims: &[usize]) -> Option<usize> {
    dims.iter().try_fold(1usize, |acc, &d| acc.checked_mul(d))
}

/// A multilinear map `V_1 × ... × V_n → W`, stored densely with the output
/// coordinate innermost.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    in_dims: Vec<usize>,
    out_dim: usize,
    data: Vec<Rational>,
}

impl Tensor {
    pub fn zeros(in_dims: Vec<usize>, out_dim: usize) -> Result<Tensor> {
        let mut dims = in_dims.clone();
        dims.push(out_dim);
        let size = checked_count(&dims)
            .filter(|&s| s <= MAX_TENSOR_ENTRIES)
            .ok_or_else(|| Error::TooLarge(format!("tensor of shape {dims:?}")))?;
        Ok(Tensor { in_dims, out_dim, data: vec![rational::zero(); size] })
    }

    /// Fills the tensor from its values on basis tuples.
    pub fn from_fn(in_dims: Vec<usize>, out_dim: usize, mut f: impl FnMut(&[usize]) -> Result<Vector>) -> Result<Tensor> {
        let mut t = Tensor::zeros(in_dims, out_dim)?;
        let dims = t.in_dims.clone();
        for idx in tuples(&dims) {
            let v = f(&idx)?;
            let base = t.offset(&idx);
            t.data[base..base + out_dim].clone_from_slice(&v);
        }
        Ok(t)
    }

    pub fn arity(&self) -> usize {
        self.in_dims.len()
    }

    pub fn in_dims(&self) -> &[usize] {
        &self.in_dims
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    fn offset(&self, idx: &[usize]) -> usize {
        let mut o = 0;
        for (i, d) in idx.iter().zip(&self.in_dims) {
            o = o * d + i;
        }
        o * self.out_dim
    }

    /// Value on a tuple of basis vectors.
    pub fn output(&self, idx: &[usize]) -> &[Rational] {
        let o = self.offset(idx);
        &self.data[o..o + self.out_dim]
    }

    pub fn set(&mut self, idx: &[usize], out: usize, value: Rational) {
        let o = self.offset(idx);
        self.data[o + out] = value;
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn entries_mut(&mut self) -> &mut [Rational] {
        &mut self.data
    }

    /// Multilinear evaluation, iterating over the supports of the arguments.
    pub fn apply(&self, args: &[&[Rational]]) -> Vector {
        let supports: Vec<Vec<usize>> =
            args.iter().map(|a| (0..a.len()).filter(|&i| !a[i].is_zero()).collect()).collect();
        let mut out = vec![rational::zero(); self.out_dim];
        if supports.iter().any(Vec::is_empty) {
            return out;
        }
        let lens: Vec<usize> = supports.iter().map(Vec::len).collect();
        let mut idx = vec![0usize; args.len()];
        for pos in tuples(&lens) {
            let mut c = rational::one();
            for (k, &p) in pos.iter().enumerate() {
                idx[k] = supports[k][p];
                c *= &args[k][idx[k]];
            }
            add_scaled(&mut out, &c, self.output(&idx));
        }
        out
    }
}

/// A dense matrix acting on column vectors: `rows × cols`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<Rational>>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![vec![rational::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.data[i][i] = rational::one();
        }
        m
    }

    pub fn from_rows(data: Vec<Vec<Rational>>) -> Result<Matrix> {
        let rows = data.len();
        let cols = data.first().map(Vec::len).unwrap_or(0);
        if data.iter().any(|r| r.len() != cols) {
            return Err(Error::Parse("ragged matrix".into()));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rational::int(x)).collect()).collect())
            .expect("rectangular literal")
    }

    pub fn apply(&self, v: &[Rational]) -> Vector {
        let mut out = vec![rational::zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for i in 0..self.rows {
                if !self.data[i][j].is_zero() {
                    out[i] += &self.data[i][j] * x;
                }
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> Vector {
        self.data.iter().map(|r| r[j].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(Zero::is_zero))
    }

    pub fn as_tensor(&self) -> Tensor {
        let mut t = Tensor::zeros(vec![self.cols], self.rows).expect("matrix-sized tensor");
        for j in 0..self.cols {
            for i in 0..self.rows {
                t.set(&[j], i, self.data[i][j].clone());
            }
        }
        t
    }
}

/// A vector space `k^dim` with named multilinear operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub dim: usize,
    ops: BTreeMap<Sym, Tensor>,
}

impl Algebra {
    pub fn new(dim: usize) -> Algebra {
        Algebra { dim, ops: BTreeMap::new() }
    }

    pub fn insert(&mut self, id: impl Into<Sym>, t: Tensor) -> Result<()> {
        let id = id.into();
        if t.out_dim != self.dim || t.in_dims.iter().any(|&d| d != self.dim) {
            return Err(Error::Precondition(format!("operation `{id}` does not act on dimension {}", self.dim)));
        }
        self.ops.insert(id, t);
        Ok(())
    }

    pub fn op(&self, id: &Sym) -> Option<&Tensor> {
        self.ops.get(id)
    }

    pub fn ops(&self) -> impl Iterator<Item = (&Sym, &Tensor)> {
        self.ops.iter()
    }

    pub fn without(&self, id: &Sym) -> Algebra {
        let mut a = self.clone();
        a.ops.remove(id);
        a
    }

    /// The same space with operations `new = Σ c · old`.
    pub fn recombine(&self, map: &[(Sym, Vec<(Rational, Sym)>)]) -> Result<Algebra> {
        let mut out = Algebra::new(self.dim);
        for (new, parts) in map {
            let mut acc: Option<Tensor> = None;
            for (c, old) in parts {
                let t = self.op(old).ok_or_else(|| Error::UnknownGenerator(old.to_string()))?;
                let a = acc.get_or_insert_with(|| Tensor::zeros(t.in_dims.clone(), t.out_dim).expect("same shape"));
                if a.in_dims != t.in_dims {
                    return Err(Error::Precondition(format!("`{old}` has the wrong arity for `{new}`")));
                }
                for (x, y) in a.data.iter_mut().zip(&t.data) {
                    *x += c * y;
                }
            }
            let t = acc.ok_or_else(|| Error::Precondition(format!("empty combination for `{new}`")))?;
            out.insert(new.clone(), t)?;
        }
        Ok(out)
    }

    pub fn eval_tree(&self, t: &Tree, assign: &dyn Fn(u32) -> Vector) -> Result<Vector> {
        match t {
            Tree::Leaf(k) => Ok(assign(*k)),
            Tree::Node(g, cs) => {
                let op = self.op(g).ok_or_else(|| Error::UnknownGenerator(g.to_string()))?;
                if op.arity() != cs.len() {
                    return Err(Error::InvalidTree(format!("`{g}` applied to {} arguments", cs.len())));
                }
                let args: Vec<Vector> = cs.iter().map(|c| self.eval_tree(c, assign)).collect::<Result<_>>()?;
                let refs: Vec<&[Rational]> = args.iter().map(|a| a.as_slice()).collect();
                Ok(op.apply(&refs))
            }
        }
    }

    pub fn eval_poly(&self, p: &Poly, assign: &dyn Fn(u32) -> Vector) -> Result<Vector> {
        let mut out = vec![rational::zero(); self.dim];
        for (t, c) in p.iter() {
            let v = self.eval_tree(t, assign)?;
            add_scaled(&mut out, c, &v);
        }
        Ok(out)
    }
}

/// Checks that `alg` interprets every generator of `p`, respects the
/// symmetric action, and satisfies every relation on every tuple of basis
/// vectors.
pub fn check_algebra(alg: &Algebra, p: &Presentation) -> Result<Report> {
    let mut report = Report::new();
    for g in p.alphabet().generators() {
        match alg.op(&g.id) {
            None => return Err(Error::Precondition(format!("algebra lacks operation `{}`", g.id))),
            Some(t) if t.arity() != g.arity => {
                return Err(Error::Precondition(format!("operation `{}` has arity {}", g.id, t.arity())))
            }
            _ => {}
        }
    }
    if p.is_symmetric() {
        let mut witness = None;
        'outer: for g in p.alphabet().generators() {
            let t = &alg.ops[&g.id];
            for i in 1..g.arity {
                let tr = crate::perm::Perm::transposition(g.arity, i);
                let (h, s) = p.alphabet().act(&g.id, &tr)?;
                let u = &alg.ops[&h];
                for idx in tuples(&vec![alg.dim; g.arity]) {
                    let mut swapped = idx.clone();
                    swapped.swap(i - 1, i);
                    let lhs = t.output(&swapped);
                    let rhs = u.output(&idx);
                    let ok = lhs.iter().zip(rhs).all(|(a, b)| if s > 0 { a == b } else { *a == -b });
                    if !ok {
                        witness = Some(format!("`{}` under ({i} {}) at basis {idx:?}", g.id, i + 1));
                        break 'outer;
                    }
                }
            }
        }
        match witness {
            Some(w) => report.push_witness("action", Status::Fail, "operations break the symmetric action", w),
            None => report.push("action", Status::Pass, "operations respect the symmetric action"),
        }
    }
    for (ri, r) in p.relations().iter().enumerate() {
        let n = r.leaf_set()?.map(|s| s.len()).unwrap_or(0);
        let count = checked_count(&vec![alg.dim; n]).filter(|&c| c <= MAX_EVALUATIONS);
        if count.is_none() {
            return Err(Error::TooLarge(format!("{}^{n} evaluations for relation {}", alg.dim, ri + 1)));
        }
        let name = format!("relation {}", ri + 1);
        let mut failure = None;
        for idx in tuples(&vec![alg.dim; n]) {
            let dim = alg.dim;
            let v = alg.eval_poly(r, &|k| basis_vector(dim, idx[k as usize - 1]))?;
            if !is_zero_vector(&v) {
                failure = Some(format!("basis {:?} gives {}", idx.iter().map(|i| i + 1).collect::<Vec<_>>(), show_vector(&v)));
                break;
            }
        }
        match failure {
            Some(w) => report.push_witness(name, Status::Fail, format!("{r} fails"), w),
            None => report.push(name, Status::Pass, format!("holds on all {} basis tuples", alg.dim.pow(n as u32))),
        }
    }
    Ok(report)
}

pub fn show_vector(v: &[Rational]) -> String {
    format!("[{}]", v.iter().map(rational::pretty).collect::<Vec<_>>().join(", "))
}
