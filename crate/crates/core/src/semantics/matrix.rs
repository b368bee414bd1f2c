use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::term::ObjectExpr;

pub type Q = Rational64;

/// A dense rational matrix acting on column vectors, with the objects it
/// maps between.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Q>,
    pub dom: ObjectExpr,
    pub cod: ObjectExpr,
}

impl LinearMap {
    pub fn zeros(rows: usize, cols: usize, dom: ObjectExpr, cod: ObjectExpr) -> Self {
        LinearMap { rows, cols, data: vec![Q::zero(); rows * cols], dom, cod }
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        dom: ObjectExpr,
        cod: ObjectExpr,
        mut f: impl FnMut(usize, usize) -> Q,
    ) -> Self {
        let mut m = Self::zeros(rows, cols, dom, cod);
        for r in 0..rows {
            for c in 0..cols {
                m.data[r * cols + c] = f(r, c);
            }
        }
        m
    }

    pub fn identity(n: usize, obj: ObjectExpr) -> Self {
        Self::from_fn(n, n, obj.clone(), obj, |r, c| if r == c { Q::one() } else { Q::zero() })
    }

    /// The swap `x⊗y -> y⊗x` for spaces of dimension `dx` and `dy`.
    pub fn swap(dx: usize, dy: usize, dom: ObjectExpr, cod: ObjectExpr) -> Self {
        let mut m = Self::zeros(dx * dy, dx * dy, dom, cod);
        for i in 0..dx {
            for j in 0..dy {
                m.set(j * dx + i, i * dy + j, Q::one());
            }
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        self.data[r * self.cols + c] = v;
    }

    /// `self ∘ before`.
    pub fn compose(&self, before: &LinearMap) -> LinearMap {
        assert_eq!(self.cols, before.rows, "dimension mismatch in composition");
        let mut out = Self::zeros(self.rows, before.cols, before.dom.clone(), self.cod.clone());
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..before.cols {
                    let idx = r * out.cols + c;
                    out.data[idx] += a * before.get(k, c);
                }
            }
        }
        out
    }

    pub fn kron(&self, other: &LinearMap) -> LinearMap {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        LinearMap::from_fn(
            rows,
            cols,
            ObjectExpr::tensor(self.dom.clone(), other.dom.clone()),
            ObjectExpr::tensor(self.cod.clone(), other.cod.clone()),
            |r, c| self.get(r / other.rows, c / other.cols) * other.get(r % other.rows, c % other.cols),
        )
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|r| (0..self.cols).map(|c| self.get(r, c) * v[c]).sum()).collect()
    }

    /// Equal entries, ignoring the recorded objects.
    pub fn same_entries(&self, other: &LinearMap) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }

    pub fn entries(&self) -> &[Q] {
        &self.data
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c) == if r == c { Q::one() } else { Q::zero() }))
    }

    /// For a 1×1 map, its single entry.
    pub fn scalar(&self) -> Option<Q> {
        (self.rows == 1 && self.cols == 1).then(|| self.data[0])
    }
}

impl fmt::Display for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} -> {} ({}x{})", self.dom, self.cod, self.rows, self.cols)?;
        let cells: Vec<String> = self.data.iter().map(|q| q.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for r in 0..self.rows {
            let row: Vec<String> =
                (0..self.cols).map(|c| format!("{:>width$}", cells[r * self.cols + c])).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
pub fn invert(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= factor * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::build::*;

    fn q(n: i64) -> Q {
        Q::from_integer(n)
    }

    #[test]
    fn swap_permutes_basis() {
        let s = LinearMap::swap(2, 3, ot(a(), c()), ot(c(), a()));
        // e_1 ⊗ f_0 sits at 1*3+0 and lands on f_0 ⊗ e_1 at 0*2+1.
        let mut v = vec![q(0); 6];
        v[3] = q(1);
        let out = s.apply(&v);
        assert_eq!(out[1], q(1));
        assert_eq!(out.iter().filter(|x| !x.is_zero()).count(), 1);
    }

    #[test]
    fn kron_and_compose_interchange() {
        let f = LinearMap::from_fn(2, 2, a(), a(), |r, c| q((r * 2 + c) as i64));
        let g = LinearMap::from_fn(2, 2, a(), a(), |r, c| q(r as i64 - c as i64));
        let lhs = f.kron(&g).compose(&g.kron(&f));
        let rhs = f.compose(&g).kron(&g.compose(&f));
        assert!(lhs.same_entries(&rhs));
    }

    #[test]
    fn inverse_round_trip() {
        let m = vec![vec![q(0), q(1)], vec![q(1), q(0)]];
        assert_eq!(invert(&m).unwrap(), m);
        let m = vec![vec![q(2), q(1)], vec![q(1), q(1)]];
        let inv = invert(&m).unwrap();
        assert_eq!(inv, vec![vec![q(1), q(-1)], vec![q(-1), q(2)]]);
        assert!(invert(&[vec![q(1), q(2)], vec![q(2), q(4)]]).is_none());
    }
}
