//! Rota-Baxter operators relative to a configuration: verification, the
//! induced split algebra, and exhaustive search for small witnesses.

use super::algebra::{add_scaled, basis_vector, check_algebra, checked_count, show_vector, tuples, Algebra, Matrix, Tensor, Vector, MAX_EVALUATIONS};
use crate::config::{ConfigKind, Configuration, Subset};
use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::rational::{self, Rational};
use crate::report::{Report, Status};
use crate::splitting::{split_alphabet, split_presentation};
use num::{One, ToPrimitive};
use rayon::prelude::*;

/// Largest number of candidate matrices a search may enumerate.
pub const MAX_CANDIDATES: u64 = 1_000_000;

fn guard(dim: usize, n: usize, what: &str) -> Result<()> {
    match checked_count(&vec![dim; n]) {
        Some(c) if c <= MAX_EVALUATIONS => Ok(()),
        _ => Err(Error::TooLarge(format!("{dim}^{n} basis tuples for {what}"))),
    }
}

fn check_shapes(alg: &Algebra, p: &Presentation, op: &Matrix) -> Result<()> {
    if op.rows != alg.dim || op.cols != alg.dim {
        return Err(Error::Precondition(format!("operator is {}x{}, algebra has dimension {}", op.rows, op.cols, alg.dim)));
    }
    for g in p.alphabet().generators() {
        match alg.op(&g.id) {
            Some(t) if t.arity() == g.arity => {}
            _ => return Err(Error::Precondition(format!("algebra lacks an operation `{}` of arity {}", g.id, g.arity))),
        }
    }
    Ok(())
}

/// `(part, λ^{|I|-1})` for every `I ∈ C_n`.
fn weighted_parts(c: &Configuration, n: usize, lambda: &Rational) -> Result<Vec<(Subset, Rational)>> {
    Ok(c.members(n)?.into_iter().map(|s| {
        let w = rational::pow(lambda, s.len() - 1);
        (s, w)
    }).collect())
}

/// The two sides of the identity for `ω` at one basis tuple.
fn sides(t: &Tensor, cols: &[Vector], op: &Matrix, idx: &[usize], parts: &[(Subset, Rational)]) -> (Vector, Vector) {
    let p_args: Vec<&[Rational]> = idx.iter().map(|&i| cols[i].as_slice()).collect();
    let lhs = t.apply(&p_args);
    let dim = op.rows;
    let basis: Vec<Vector> = idx.iter().map(|&i| basis_vector(dim, i)).collect();
    let mut inner = vec![rational::zero(); dim];
    for (part, w) in parts {
        let args: Vec<&[Rational]> = (0..idx.len())
            .map(|k| if part.contains(k as u32 + 1) { basis[k].as_slice() } else { p_args[k] })
            .collect();
        add_scaled(&mut inner, w, &t.apply(&args));
    }
    (lhs, op.apply(&inner))
}

/// Checks `ω(P x_1, ..., P x_n) = P(Σ_{I ∈ C_n} λ^{|I|−1} ω(y^I))` for every
/// generator on every basis tuple. Whether `alg` is a `p`-algebra is not
/// rechecked here.
pub fn check_crb_operator(alg: &Algebra, p: &Presentation, op: &Matrix, c: &Configuration, lambda: &Rational) -> Result<Report> {
    check_shapes(alg, p, op)?;
    let cols: Vec<Vector> = (0..alg.dim).map(|j| op.column(j)).collect();
    let mut report = Report::new();
    for g in p.alphabet().generators() {
        guard(alg.dim, g.arity, &format!("`{}`", g.id))?;
        let t = alg.op(&g.id).expect("shape checked");
        let parts = weighted_parts(c, g.arity, lambda)?;
        let mut failure = None;
        for idx in tuples(&vec![alg.dim; g.arity]) {
            let (l, r) = sides(t, &cols, op, &idx, &parts);
            if l != r {
                failure = Some(format!(
                    "basis {:?}: left {} right {}",
                    idx.iter().map(|i| i + 1).collect::<Vec<_>>(),
                    show_vector(&l),
                    show_vector(&r)
                ));
                break;
            }
        }
        let name = format!("operator identity for `{}`", g.id);
        match failure {
            Some(w) => report.push_witness(name, Status::Fail, "identity fails", w),
            None => report.push(name, Status::Pass, format!("holds on all {}^{} basis tuples", alg.dim, g.arity)),
        }
    }
    Ok(report)
}

/// The split algebra with `(ω, e_I)(x) := ω(y^I)`, where `y^I_k` is `x_k`
/// for `k ∈ I` and `P x_k` otherwise. The result is checked against the
/// split presentation; a failure there is reported as a theorem violation.
pub fn induce_split_algebra(alg: &Algebra, p: &Presentation, op: &Matrix, c: &Configuration, lambda: &Rational) -> Result<Algebra> {
    if !matches!(c.kind(), ConfigKind::Arity) && !lambda.is_one() {
        return Err(Error::Precondition(format!(
            "weight {} with configuration {}: only weight one (or the arity configuration) induces a split algebra",
            rational::pretty(lambda),
            c.name()
        )));
    }
    let rep = check_crb_operator(alg, p, op, c, lambda)?;
    if !rep.passed() {
        return Err(Error::Precondition(format!("not a Rota-Baxter operator:\n{rep}")));
    }
    let sa = split_alphabet(p.alphabet(), c)?;
    let cols: Vec<Vector> = (0..alg.dim).map(|j| op.column(j)).collect();
    let mut out = Algebra::new(alg.dim);
    for (id, (base, part)) in sa.parts() {
        let t = alg.op(base).expect("shape checked");
        let dim = alg.dim;
        let split = Tensor::from_fn(vec![dim; t.arity()], dim, |idx| {
            let basis: Vec<Vector> = idx.iter().map(|&i| basis_vector(dim, i)).collect();
            let args: Vec<&[Rational]> = (0..idx.len())
                .map(|k| if part.contains(k as u32 + 1) { basis[k].as_slice() } else { cols[idx[k]].as_slice() })
                .collect();
            Ok(t.apply(&args))
        })?;
        out.insert(id.clone(), split)?;
    }
    let sp = split_presentation(p, c)?;
    let verdict = check_algebra(&out, &sp)?;
    if !verdict.passed() {
        return Err(Error::TheoremViolation(format!("induced algebra is not a {}-algebra:\n{verdict}", sp.name)));
    }
    Ok(out)
}

/// Candidate matrices for [`search_rb_operators`]: every assignment of
/// `entries` to `positions` (row, column; zero-based), other entries zero.
#[derive(Clone, Debug)]
pub struct SearchSpace {
    pub entries: Vec<Rational>,
    pub positions: Option<Vec<(usize, usize)>>,
    pub max_results: usize,
}

impl SearchSpace {
    pub fn new(entries: Vec<Rational>, max_results: usize) -> SearchSpace {
        SearchSpace { entries, positions: None, max_results }
    }

    pub fn with_positions(mut self, positions: Vec<(usize, usize)>) -> SearchSpace {
        self.positions = Some(positions);
        self
    }

    pub fn off_diagonal(dim: usize) -> Vec<(usize, usize)> {
        (0..dim).flat_map(|i| (0..dim).filter(move |&j| j != i).map(move |j| (i, j))).collect()
    }
}

/// Integer copy of the problem, used to reject candidates quickly before the
/// exact check confirms survivors.
struct Fast {
    dim: usize,
    ops: Vec<(usize, Vec<i64>, Vec<(Vec<bool>, i64)>)>,
}

fn to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

impl Fast {
    fn new(alg: &Algebra, p: &Presentation, c: &Configuration, lambda: &Rational) -> Result<Option<Fast>> {
        let mut ops = Vec::new();
        for g in p.alphabet().generators() {
            let t = alg.op(&g.id).expect("shape checked");
            let data: Option<Vec<i64>> = t.entries().iter().map(to_i64).collect();
            let mut parts = Vec::new();
            for (s, w) in weighted_parts(c, g.arity, lambda)? {
                let Some(w) = to_i64(&w) else { return Ok(None) };
                parts.push(((1..=g.arity as u32).map(|k| s.contains(k)).collect(), w));
            }
            match data {
                Some(d) => ops.push((g.arity, d, parts)),
                None => return Ok(None),
            }
        }
        Ok(Some(Fast { dim: alg.dim, ops }))
    }

    fn apply(&self, data: &[i64], args: &[&[i128]]) -> Option<Vec<i128>> {
        let d = self.dim;
        let mut out = vec![0i128; d];
        let n = args.len();
        let supports: Vec<Vec<usize>> = args.iter().map(|a| (0..d).filter(|&i| a[i] != 0).collect()).collect();
        if supports.iter().any(Vec::is_empty) {
            return Some(out);
        }
        let lens: Vec<usize> = supports.iter().map(Vec::len).collect();
        for pos in tuples(&lens) {
            let mut c: i128 = 1;
            let mut off = 0usize;
            for k in 0..n {
                let i = supports[k][pos[k]];
                c = c.checked_mul(args[k][i])?;
                off = off * d + i;
            }
            for (o, slot) in out.iter_mut().enumerate() {
                let e = data[off * d + o] as i128;
                if e != 0 {
                    *slot = slot.checked_add(c.checked_mul(e)?)?;
                }
            }
        }
        Some(out)
    }

    /// `Some(true)` if the identity holds, `None` on overflow.
    fn passes(&self, m: &[Vec<i128>]) -> Option<bool> {
        let d = self.dim;
        let cols: Vec<Vec<i128>> = (0..d).map(|j| (0..d).map(|i| m[i][j]).collect()).collect();
        let apply_p = |v: &[i128]| -> Option<Vec<i128>> {
            let mut out = vec![0i128; d];
            for (j, &x) in v.iter().enumerate() {
                if x != 0 {
                    for i in 0..d {
                        out[i] = out[i].checked_add(m[i][j].checked_mul(x)?)?;
                    }
                }
            }
            Some(out)
        };
        let basis: Vec<Vec<i128>> = (0..d).map(|i| (0..d).map(|k| (k == i) as i128).collect()).collect();
        for (n, data, parts) in &self.ops {
            for idx in tuples(&vec![d; *n]) {
                let p_args: Vec<&[i128]> = idx.iter().map(|&i| cols[i].as_slice()).collect();
                let lhs = self.apply(data, &p_args)?;
                let mut inner = vec![0i128; d];
                for (mask, w) in parts {
                    let args: Vec<&[i128]> =
                        (0..*n).map(|k| if mask[k] { basis[idx[k]].as_slice() } else { p_args[k] }).collect();
                    let v = self.apply(data, &args)?;
                    for (a, b) in inner.iter_mut().zip(v) {
                        *a = a.checked_add(b.checked_mul(*w as i128)?)?;
                    }
                }
                if lhs != apply_p(&inner)? {
                    return Some(false);
                }
            }
        }
        Some(true)
    }
}

fn thread_pool() -> Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = std::env::var("OPERAD_FORGE_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        b = b.num_threads(n.max(1));
    }
    b.build().map_err(|e| Error::Precondition(format!("thread pool: {e}")))
}

/// Exhaustive search for nonzero operators satisfying the identity. Results
/// come back in enumeration order (last position varying fastest), each one
/// confirmed by [`check_crb_operator`].
pub fn search_rb_operators(
    alg: &Algebra,
    p: &Presentation,
    c: &Configuration,
    lambda: &Rational,
    space: &SearchSpace,
) -> Result<Vec<Matrix>> {
    let dim = alg.dim;
    check_shapes(alg, p, &Matrix::zero(dim, dim))?;
    for g in p.alphabet().generators() {
        guard(dim, g.arity, &format!("`{}`", g.id))?;
    }
    let positions = space.positions.clone().unwrap_or_else(|| (0..dim).flat_map(|i| (0..dim).map(move |j| (i, j))).collect());
    if positions.iter().any(|&(i, j)| i >= dim || j >= dim) {
        return Err(Error::Precondition("search position outside the matrix".into()));
    }
    let e = space.entries.len() as u64;
    let total = (0..positions.len()).try_fold(1u64, |acc, _| acc.checked_mul(e)).filter(|&t| t <= MAX_CANDIDATES);
    let Some(total) = total else {
        return Err(Error::TooLarge(format!(
            "{} entries over {} positions exceeds {MAX_CANDIDATES} candidates; restrict the positions",
            e,
            positions.len()
        )));
    };
    if space.max_results == 0 || e == 0 {
        return Ok(Vec::new());
    }
    let fast = Fast::new(alg, p, c, lambda)?;
    let int_entries: Option<Vec<i64>> = space.entries.iter().map(to_i64).collect();
    let decode = |mut code: u64| -> Vec<usize> {
        let mut digits = vec![0usize; positions.len()];
        for k in (0..positions.len()).rev() {
            digits[k] = (code % e) as usize;
            code /= e;
        }
        digits
    };
    let exact = |digits: &[usize]| -> Result<Option<Matrix>> {
        let mut m = Matrix::zero(dim, dim);
        for (k, &(i, j)) in positions.iter().enumerate() {
            m.data[i][j] = space.entries[digits[k]].clone();
        }
        if m.is_zero() {
            return Ok(None);
        }
        Ok(check_crb_operator(alg, p, &m, c, lambda)?.passed().then_some(m))
    };
    let test = |code: u64| -> Result<Option<Matrix>> {
        let digits = decode(code);
        if let (Some(f), Some(ints)) = (&fast, &int_entries) {
            let mut m = vec![vec![0i128; dim]; dim];
            for (k, &(i, j)) in positions.iter().enumerate() {
                m[i][j] = ints[digits[k]] as i128;
            }
            if m.iter().all(|r| r.iter().all(|x| *x == 0)) {
                return Ok(None);
            }
            match f.passes(&m) {
                Some(false) => return Ok(None),
                Some(true) => {
                    return match exact(&digits)? {
                        Some(m) => Ok(Some(m)),
                        None => Err(Error::TheoremViolation("integer and exact operator checks disagree".into())),
                    }
                }
                None => {}
            }
        }
        exact(&digits)
    };
    let pool = thread_pool()?;
    const BATCH: u64 = 1 << 14;
    let mut found = Vec::new();
    let mut start = 0u64;
    while start < total && found.len() < space.max_results {
        let end = (start + BATCH).min(total);
        let hits: Vec<Matrix> = pool.install(|| {
            (start..end).into_par_iter().map(test).filter_map(|r| r.transpose()).collect::<Result<Vec<_>>>()
        })?;
        found.extend(hits);
        start = end;
    }
    found.truncate(space.max_results);
    Ok(found)
}
