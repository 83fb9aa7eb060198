//! Small algebras used as worked instances.

use super::algebra::{Algebra, Matrix, Tensor};
use crate::rational;

/// Upper triangular 2x2 matrices with basis `e11, e12, e22` and operation
/// `mu`.
pub fn upper_triangular() -> Algebra {
    let prods = [((0, 0), 0), ((0, 1), 1), ((1, 2), 1), ((2, 2), 2)];
    let t = Tensor::from_fn(vec![3, 3], 3, |idx| {
        let mut v = vec![rational::zero(); 3];
        for ((i, j), k) in prods {
            if idx == [i, j] {
                v[k] = rational::one();
            }
        }
        Ok(v)
    })
    .expect("small tensor");
    let mut a = Algebra::new(3);
    a.insert("mu", t).expect("square shape");
    a
}

/// `P(e11) = e12`, zero elsewhere. Weight zero for the arity configuration.
pub fn upper_triangular_rb_operator() -> Matrix {
    Matrix::from_ints(&[&[0, 0, 0], &[1, 0, 0], &[0, 0, 0]])
}

/// The 4-dimensional ternary skew bracket with
/// `[e_a, e_b, e_c] = s_d e_d` for `{a, b, c, d} = {1, 2, 3, 4}`, `a < b < c`,
/// where `signs[d-1] = s_d`. Operation `br`.
pub fn ternary_complement_bracket(signs: [i64; 4]) -> Algebra {
    let t = Tensor::from_fn(vec![4, 4, 4], 4, |idx| {
        let mut v = vec![rational::zero(); 4];
        let mut sorted = idx.to_vec();
        sorted.sort_unstable();
        if sorted[0] != sorted[1] && sorted[1] != sorted[2] {
            let d = (0..4).find(|k| !sorted.contains(k)).expect("one index is missing");
            let mut inversions = 0;
            for i in 0..3 {
                for j in i + 1..3 {
                    if idx[i] > idx[j] {
                        inversions += 1;
                    }
                }
            }
            let s = if inversions % 2 == 0 { signs[d] } else { -signs[d] };
            v[d] = rational::int(s);
        }
        Ok(v)
    })
    .expect("small tensor");
    let mut a = Algebra::new(4);
    a.insert("br", t).expect("square shape");
    a
}
