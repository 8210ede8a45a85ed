//! Matrices over the Laurent ring, determinants, and gcds of minors.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use super::gcd::gcd2;
use super::intmat::{bareiss_det, IntMatrix};
use super::laurent::{Exponent, LaurentPoly, Vars};

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    vars: Vars,
    rows: usize,
    cols: usize,
    data: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zeros(vars: Vars, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            data: vec![LaurentPoly::zero(vars.clone()); rows * cols],
            vars,
            rows,
            cols,
        }
    }

    pub fn identity(vars: Vars, n: usize) -> Self {
        let mut m = Self::zeros(vars.clone(), n, n);
        for i in 0..n {
            m[(i, i)] = LaurentPoly::one(vars.clone());
        }
        m
    }

    pub fn from_fn(
        vars: Vars,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> LaurentPoly,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let p = f(i, j);
                assert_eq!(p.vars(), &vars, "entry over a different ring");
                data.push(p);
            }
        }
        PolyMatrix {
            vars,
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(vars: Vars, rows: Vec<Vec<LaurentPoly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let flat: Vec<LaurentPoly> = rows.into_iter().flatten().collect();
        assert_eq!(flat.len(), r * c, "ragged rows");
        Self::from_fn(vars, r, c, |i, j| flat[i * c + j].clone())
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        Self::from_fn(self.vars.clone(), rows.len(), cols.len(), |i, j| {
            self[(rows[i], cols[j])].clone()
        })
    }

    pub fn without_columns(&self, drop: &[usize]) -> PolyMatrix {
        let keep: Vec<usize> = (0..self.cols).filter(|j| !drop.contains(j)).collect();
        let rows: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&rows, &keep)
    }

    pub fn transpose(&self) -> PolyMatrix {
        Self::from_fn(self.vars.clone(), self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows);
        Self::from_fn(self.vars.clone(), self.rows, other.cols, |i, j| {
            let mut acc = LaurentPoly::zero(self.vars.clone());
            for k in 0..self.cols {
                if !self[(i, k)].is_zero() && !other[(k, j)].is_zero() {
                    acc = &acc + &(&self[(i, k)] * &other[(k, j)]);
                }
            }
            acc
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|p| p.is_zero())
    }

    /// Determinant with the default configuration.
    pub fn determinant(&self) -> LaurentPoly {
        determinant(self, &DetConfig::default())
    }
}

impl std::ops::Index<(usize, usize)> for PolyMatrix {
    type Output = LaurentPoly;
    fn index(&self, (i, j): (usize, usize)) -> &LaurentPoly {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut LaurentPoly {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let r: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", r.join(", "))?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DetMethod {
    /// Pick by size.
    Auto,
    Bareiss,
    Interpolation,
}

#[derive(Clone, Debug)]
pub struct DetConfig {
    pub method: DetMethod,
    /// Largest size handled by Bareiss elimination in `Auto` mode.
    pub bareiss_max: usize,
    /// Cap on the number of evaluation points; beyond it `Auto` falls back to Bareiss.
    pub max_points: usize,
    /// Eliminate unit entries before computing minors.
    pub pivot_units: bool,
}

impl Default for DetConfig {
    fn default() -> Self {
        DetConfig {
            method: DetMethod::Auto,
            bareiss_max: 10,
            max_points: 1 << 16,
            pivot_units: true,
        }
    }
}

/// Determinant of a square polynomial matrix.
pub fn determinant(m: &PolyMatrix, cfg: &DetConfig) -> LaurentPoly {
    assert_eq!(m.rows, m.cols, "determinant of non-square matrix");
    let n = m.rows;
    if n == 0 {
        return LaurentPoly::one(m.vars.clone());
    }
    if n == 1 {
        return m.data[0].clone();
    }
    match cfg.method {
        DetMethod::Bareiss => bareiss(m.clone()),
        DetMethod::Interpolation => interpolate_det(m),
        DetMethod::Auto => {
            if n <= cfg.bareiss_max || m.vars.is_empty() {
                bareiss(m.clone())
            } else {
                let (_, bounds, _) = row_col_shift(m);
                let pts: Option<usize> = bounds
                    .iter()
                    .try_fold(1usize, |acc, &d| acc.checked_mul(d as usize + 1));
                match pts {
                    Some(p) if p <= cfg.max_points => interpolate_det(m),
                    _ => bareiss(m.clone()),
                }
            }
        }
    }
}

fn bareiss(mut m: PolyMatrix) -> LaurentPoly {
    let n = m.rows;
    let zero = LaurentPoly::zero(m.vars.clone());
    let mut neg = false;
    let mut prev = LaurentPoly::one(m.vars.clone());
    for k in 0..n - 1 {
        // sparsest nonzero pivot in column k
        let p = (k..n)
            .filter(|&i| !m[(i, k)].is_zero())
            .min_by_key(|&i| m[(i, k)].len());
        let Some(p) = p else { return zero };
        if p != k {
            for j in 0..n {
                m.data.swap(p * n + j, k * n + j);
            }
            neg = !neg;
        }
        let pivot = m[(k, k)].clone();
        let rows: Vec<(usize, Vec<LaurentPoly>)> = (k + 1..n)
            .into_par_iter()
            .map(|i| {
                let mik = &m[(i, k)];
                let row = (k + 1..n)
                    .map(|j| {
                        let a = &m[(i, j)] * &pivot;
                        let num = if mik.is_zero() || m[(k, j)].is_zero() {
                            a
                        } else {
                            &a - &(mik * &m[(k, j)])
                        };
                        num.div_exact(&prev).expect("Bareiss division is exact")
                    })
                    .collect();
                (i, row)
            })
            .collect();
        for (i, row) in rows {
            for (off, v) in row.into_iter().enumerate() {
                m[(i, k + 1 + off)] = v;
            }
            m[(i, k)] = zero.clone();
        }
        prev = pivot;
    }
    let d = m[(n - 1, n - 1)].clone();
    if neg {
        -d
    } else {
        d
    }
}

/// Shift every row and column by monomials so all entries are polynomials with
/// minimal total shift. Returns the shifted matrix, per-variable degree bounds
/// for its determinant, and the accumulated monomial shift to undo.
fn row_col_shift(m: &PolyMatrix) -> (PolyMatrix, Vec<i32>, Exponent) {
    let nv = m.vars.len();
    let n = m.rows;
    let mut s = m.clone();
    let mut total: Exponent = std::iter::repeat_n(0, nv).collect();
    let min_of = |ps: &mut dyn Iterator<Item = &LaurentPoly>| -> Option<Exponent> {
        let mut acc: Option<Exponent> = None;
        for p in ps {
            if let Some(e) = p.min_exponents() {
                acc = Some(match acc {
                    None => e,
                    Some(a) => a.iter().zip(e.iter()).map(|(x, y)| *x.min(y)).collect(),
                });
            }
        }
        acc
    };
    for i in 0..n {
        if let Some(e) = min_of(&mut (0..n).map(|j| &s[(i, j)])) {
            let neg: Exponent = e.iter().map(|x| -x).collect();
            for j in 0..n {
                s[(i, j)] = s[(i, j)].shift(&neg);
            }
            for v in 0..nv {
                total[v] += e[v];
            }
        }
    }
    for j in 0..n {
        if let Some(e) = min_of(&mut (0..n).map(|i| &s[(i, j)])) {
            let neg: Exponent = e.iter().map(|x| -x).collect();
            for i in 0..n {
                s[(i, j)] = s[(i, j)].shift(&neg);
            }
            for v in 0..nv {
                total[v] += e[v];
            }
        }
    }
    let mut bounds = vec![0i32; nv];
    for (v, bound) in bounds.iter_mut().enumerate() {
        let row_sum: i32 = (0..n)
            .map(|i| (0..n).filter_map(|j| s[(i, j)].max_degree_in(v)).max().unwrap_or(0))
            .sum();
        let col_sum: i32 = (0..n)
            .map(|j| (0..n).filter_map(|i| s[(i, j)].max_degree_in(v)).max().unwrap_or(0))
            .sum();
        *bound = row_sum.min(col_sum);
    }
    (s, bounds, total)
}

fn interpolate_det(m: &PolyMatrix) -> LaurentPoly {
    let n = m.rows;
    let nv = m.vars.len();
    let (s, bounds, total) = row_col_shift(m);
    let dims: Vec<usize> = bounds.iter().map(|&d| d as usize + 1).collect();
    let npts: usize = dims.iter().product();
    // point index -> coordinates, last variable fastest
    let coords = |mut idx: usize| -> Vec<BigInt> {
        let mut c = vec![BigInt::zero(); nv];
        for v in (0..nv).rev() {
            c[v] = BigInt::from(idx % dims[v]);
            idx /= dims[v];
        }
        c
    };
    let mut values: Vec<BigInt> = (0..npts)
        .into_par_iter()
        .map(|idx| {
            let pt = coords(idx);
            let mut im = IntMatrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    im[(i, j)] = s[(i, j)].eval_nonneg(&pt);
                }
            }
            bareiss_det(im)
        })
        .collect();
    // tensor-product interpolation, one variable at a time
    let mut stride = 1usize;
    for v in (0..nv).rev() {
        let d = dims[v];
        let block = stride * d;
        for base in (0..npts).step_by(block) {
            for off in 0..stride {
                let line: Vec<BigInt> = (0..d).map(|k| values[base + off + k * stride].clone()).collect();
                let coeffs = interpolate_line(&line);
                for (k, c) in coeffs.into_iter().enumerate() {
                    values[base + off + k * stride] = c;
                }
            }
        }
        stride = block;
    }
    let mut out = LaurentPoly::zero(m.vars.clone());
    for (idx, c) in values.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let e: Exponent = coords(idx)
            .iter()
            .zip(total.iter())
            .map(|(x, t)| i32::try_from(x).unwrap() + t)
            .collect();
        out.add_term(e, c);
    }
    out
}

/// Monomial coefficients of the polynomial taking `values[k]` at `k = 0..d`.
fn interpolate_line(values: &[BigInt]) -> Vec<BigInt> {
    let d = values.len();
    // Newton divided differences on nodes 0, 1, ..., d-1
    let mut dd: Vec<BigRational> = values.iter().map(|v| BigRational::from_integer(v.clone())).collect();
    for level in 1..d {
        for i in (level..d).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / BigRational::from_integer(BigInt::from(level));
        }
    }
    // Horner from the top: p = dd[d-1]; p = p*(x - k) + dd[k]
    let mut coeffs: Vec<BigRational> = vec![BigRational::zero(); d];
    for k in (0..d).rev() {
        // coeffs *= (x - k)
        let kk = BigRational::from_integer(BigInt::from(k));
        let mut next = vec![BigRational::zero(); d];
        for i in 0..d {
            if coeffs[i].is_zero() {
                continue;
            }
            if i + 1 < d {
                next[i + 1] += &coeffs[i];
            }
            next[i] -= &coeffs[i] * &kk;
        }
        next[0] += &dd[k];
        coeffs = next;
    }
    coeffs
        .into_iter()
        .map(|c| {
            assert!(c.is_integer(), "interpolated coefficient is not integral");
            c.to_integer()
        })
        .collect()
}

/// Eliminate unit entries: returns the reduced matrix and the reduced minor
/// size, using `I_k(u ⊕ A) = I_{k-1}(A)` for a unit `u`.
pub fn reduce_units(m: &PolyMatrix, mut k: usize) -> (PolyMatrix, usize) {
    let mut a = drop_zero_lines(m.clone());
    while k > 0 {
        // Markowitz-style choice: unit with the fewest row/column companions
        let mut best: Option<(usize, usize, usize)> = None;
        for i in 0..a.rows {
            let rc = (0..a.cols).filter(|&j| !a[(i, j)].is_zero()).count();
            for j in 0..a.cols {
                if a[(i, j)].is_unit() {
                    let cc = (0..a.rows).filter(|&r| !a[(r, j)].is_zero()).count();
                    let cost = (rc - 1) * (cc - 1);
                    if best.is_none_or(|(_, _, c)| cost < c) {
                        best = Some((i, j, cost));
                    }
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        a = schur_complement(&a, pi, pj);
        a = drop_zero_lines(a);
        k -= 1;
    }
    (a, k)
}

fn drop_zero_lines(m: PolyMatrix) -> PolyMatrix {
    let rows: Vec<usize> = (0..m.rows).filter(|&i| (0..m.cols).any(|j| !m[(i, j)].is_zero())).collect();
    let cols: Vec<usize> = (0..m.cols).filter(|&j| (0..m.rows).any(|i| !m[(i, j)].is_zero())).collect();
    if rows.len() == m.rows && cols.len() == m.cols {
        m
    } else {
        m.submatrix(&rows, &cols)
    }
}

fn schur_complement(a: &PolyMatrix, pi: usize, pj: usize) -> PolyMatrix {
    let u = &a[(pi, pj)];
    let uinv = LaurentPoly::one(a.vars.clone()).div_exact(u).expect("unit");
    let rows: Vec<usize> = (0..a.rows).filter(|&i| i != pi).collect();
    let cols: Vec<usize> = (0..a.cols).filter(|&j| j != pj).collect();
    let pivot_row: Vec<LaurentPoly> = cols.iter().map(|&j| &uinv * &a[(pi, j)]).collect();
    let entries: Vec<Vec<LaurentPoly>> = rows
        .par_iter()
        .map(|&i| {
            let f = &a[(i, pj)];
            cols.iter()
                .enumerate()
                .map(|(jj, &j)| {
                    if f.is_zero() || pivot_row[jj].is_zero() {
                        a[(i, j)].clone()
                    } else {
                        &a[(i, j)] - &(f * &pivot_row[jj])
                    }
                })
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(a.vars.clone(), entries)
}

/// Unit-normalized gcd of all `k × k` minors (0 if they all vanish).
pub fn minor_gcd(m: &PolyMatrix, k: usize) -> LaurentPoly {
    minor_gcd_with(m, k, &DetConfig::default())
}

pub fn minor_gcd_with(m: &PolyMatrix, k: usize, cfg: &DetConfig) -> LaurentPoly {
    assert!(k <= m.rows.min(m.cols), "minor size exceeds matrix dimensions");
    let vars = m.vars.clone();
    let (a, k) = if cfg.pivot_units {
        reduce_units(m, k)
    } else {
        (m.clone(), k)
    };
    if k == 0 {
        return LaurentPoly::one(vars);
    }
    if k > a.rows.min(a.cols) {
        return LaurentPoly::zero(vars);
    }
    let row_sets = subsets(a.rows, k);
    let col_sets = subsets(a.cols, k);
    let pairs: Vec<(usize, usize)> = (0..row_sets.len())
        .flat_map(|r| (0..col_sets.len()).map(move |c| (r, c)))
        .collect();
    let chunk = rayon::current_num_threads().max(1) * 2;
    let mut g = LaurentPoly::zero(vars.clone());
    for batch in pairs.chunks(chunk) {
        let dets: Vec<LaurentPoly> = batch
            .par_iter()
            .map(|&(r, c)| determinant(&a.submatrix(&row_sets[r], &col_sets[c]), cfg))
            .collect();
        for d in dets {
            if d.is_zero() || (!g.is_zero() && g.divides(&d)) {
                continue;
            }
            g = gcd2(&g, &d);
            if g.is_one() {
                return g;
            }
        }
    }
    g.unit_normalize()
}

/// All increasing `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - k + i {
                break;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}
