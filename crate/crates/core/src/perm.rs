//! Permutations of `{1..n}` stored zero-based in one-line notation.

use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u8).collect())
    }

    /// From one-line images, one-based: `from_images(&[2,1,3])` is `(12)`.
    pub fn from_images(images: &[u32]) -> Option<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut v = Vec::with_capacity(n);
        for &x in images {
            let i = (x as usize).checked_sub(1)?;
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
            v.push(i as u8);
        }
        Some(Perm(v))
    }

    /// The adjacent transposition `(i, i+1)`, `i` one-based.
    pub fn transposition(n: usize, i: usize) -> Perm {
        let mut p = Perm::identity(n);
        p.0.swap(i - 1, i);
        p
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Image of `i` (one-based in, one-based out).
    pub fn apply(&self, i: u32) -> u32 {
        self.0[i as usize - 1] as u32 + 1
    }

    pub fn images(&self) -> Vec<u32> {
        self.0.iter().map(|&x| x as u32 + 1).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x as usize] = i as u8;
        }
        Perm(v)
    }

    pub fn sign(&self) -> i8 {
        let mut inv = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] > self.0[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// All permutations of `n` letters in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            out.push(Perm(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
    }

    /// One-line digits, e.g. `"213"`; multi-digit images are comma separated.
    pub fn one_line(&self) -> String {
        let imgs = self.images();
        if imgs.len() < 10 {
            imgs.iter().map(|x| x.to_string()).collect()
        } else {
            imgs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.one_line())
    }
}
