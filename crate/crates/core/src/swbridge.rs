//! Seiberg–Witten polynomials of 3-manifolds and of circle bundles over them.
//!
//! Basic classes are recorded on the free part of H²(N) ≅ H₁(N). Meng–Taubes
//! identifies `Σ SW_N(ξ) · ½f(ξ)` with the Alexander polynomial, so the
//! exponent `w` of a term corresponds to the class `ξ` with `f(ξ) = 2w`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::alexander::is_symmetric;
use crate::error::{Error, Result};
use crate::exactalg::{column_hermite, standard_vars, IntMatrix, LaurentPoly};
use crate::homology::{EulerClass, H1Data};

/// How stored lattice points relate to classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SwScale {
    /// Stored point `w` is `½ f(ξ)`.
    Half,
    /// Stored point is `f(ξ)` itself.
    Full,
}

/// Finite sum of basic classes with their invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwPolynomial {
    /// One entry per coordinate: `0` for a copy of ℤ, `g > 1` for ℤ/g.
    moduli: Vec<u64>,
    scale: SwScale,
    support: BTreeMap<Vec<i64>, BigInt>,
}

impl SwPolynomial {
    /// Zero coefficients are dropped and cyclic coordinates reduced.
    pub fn new<I>(moduli: Vec<u64>, scale: SwScale, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i64>, BigInt)>,
    {
        let mut support: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (mut pt, c) in terms {
            assert_eq!(pt.len(), moduli.len(), "point of wrong rank");
            reduce_point(&mut pt, &moduli);
            *support.entry(pt).or_insert_with(BigInt::zero) += c;
        }
        support.retain(|_, c| !c.is_zero());
        SwPolynomial {
            moduli,
            scale,
            support,
        }
    }

    /// Polynomial on the free lattice ℤ^b.
    pub fn free<I>(b: usize, scale: SwScale, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i64>, BigInt)>,
    {
        Self::new(vec![0; b], scale, terms)
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn scale(&self) -> SwScale {
        self.scale
    }

    pub fn support(&self) -> &BTreeMap<Vec<i64>, BigInt> {
        &self.support
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.moduli.iter().all(|&g| g == 0)
    }

    pub fn coefficient(&self, pt: &[i64]) -> BigInt {
        let mut q = pt.to_vec();
        reduce_point(&mut q, &self.moduli);
        self.support.get(&q).cloned().unwrap_or_default()
    }

    /// Support in `f(ξ)` coordinates.
    pub fn class_points(&self) -> BTreeMap<Vec<i64>, BigInt> {
        match self.scale {
            SwScale::Full => self.support.clone(),
            SwScale::Half => self
                .support
                .iter()
                .map(|(pt, c)| {
                    let mut q: Vec<i64> = pt.iter().map(|x| 2 * x).collect();
                    reduce_point(&mut q, &self.moduli);
                    (q, c.clone())
                })
                .collect(),
        }
    }

    /// `ξ ∈ supp ⇒ −ξ ∈ supp`.
    pub fn is_symmetric(&self) -> bool {
        self.support.keys().all(|pt| {
            let mut q: Vec<i64> = pt.iter().map(|x| -x).collect();
            reduce_point(&mut q, &self.moduli);
            self.support.contains_key(&q)
        })
    }

    fn normalize_sign(mut self) -> Self {
        if let Some((_, c)) = self.support.iter().next() {
            if c.is_negative() {
                for v in self.support.values_mut() {
                    *v = -&*v;
                }
            }
        }
        self
    }
}

fn reduce_point(pt: &mut [i64], moduli: &[u64]) {
    for (x, &g) in pt.iter_mut().zip(moduli) {
        if g > 0 {
            *x = x.mod_floor(&(g as i64));
        }
    }
}

/// Meng–Taubes: support from the exponents of `d`, recentered to the middle
/// of its Newton box.
pub fn sw_from_alexander(d: &LaurentPoly, h: &H1Data) -> Result<SwPolynomial> {
    let b = h.free_rank();
    if b < 2 {
        return Err(Error::UnsupportedBetti {
            b1: b,
            reason: "Meng–Taubes is used with b₁ ≥ 2".into(),
        });
    }
    if d.nvars() != b {
        return Err(Error::Dimension {
            expected: b,
            found: d.nvars(),
        });
    }
    from_poly(d)
}

fn from_poly(d: &LaurentPoly) -> Result<SwPolynomial> {
    let b = d.nvars();
    let (lo, hi) = match (d.min_exponents(), d.max_exponents()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return Ok(SwPolynomial::free(b, SwScale::Half, [])),
    };
    let twice_center: Vec<i64> = lo.iter().zip(&hi).map(|(&a, &c)| a as i64 + c as i64).collect();
    let integral = twice_center.iter().all(|c| c % 2 == 0);
    let terms = d.terms().iter().map(|(ex, c)| {
        let pt: Vec<i64> = ex
            .iter()
            .zip(&twice_center)
            .map(|(&x, &c2)| if integral { x as i64 - c2 / 2 } else { 2 * x as i64 - c2 })
            .collect();
        (pt, c.clone())
    });
    let scale = if integral { SwScale::Half } else { SwScale::Full };
    let s = SwPolynomial::free(b, scale, terms).normalize_sign();
    if !s.is_symmetric() {
        return Err(Error::Asymmetric);
    }
    Ok(s)
}

/// Baldridge: `SW_M(κ) = Σ_{p*ξ = κ} SW_N(ξ)`, on `ℤ^b / ℤ·e`.
///
/// The quotient is written in coordinates `ξ W` with `W` unimodular and
/// `e W = (g, 0, …, 0)`; the first coordinate is kept mod `g` when `g > 1`.
pub fn baldridge_pushforward(s: &SwPolynomial, e: &EulerClass) -> Result<SwPolynomial> {
    if e.is_torsion() {
        return Err(Error::UnsupportedEulerClass(
            "the pushforward needs a nontorsion Euler class".into(),
        ));
    }
    if !s.is_free() {
        return Err(Error::QuotientLattice);
    }
    let b = s.rank();
    if e.free.len() != b {
        return Err(Error::Dimension {
            expected: b,
            found: e.free.len(),
        });
    }
    let (hm, w) = column_hermite(&IntMatrix::from_rows(std::slice::from_ref(&e.free)));
    let g = hm[(0, 0)].abs();
    debug_assert!((1..b).all(|k| hm[(0, k)].is_zero()));
    let keep_first = !g.is_one();
    let g = u64::try_from(&g).expect("divisibility fits in u64");
    let mut moduli = Vec::with_capacity(b);
    if keep_first {
        moduli.push(g);
    }
    moduli.extend(std::iter::repeat_n(0, b - 1));
    let terms: Vec<(Vec<i64>, BigInt)> = s
        .class_points()
        .into_iter()
        .map(|(xi, c)| {
            let xi: Vec<BigInt> = xi.into_iter().map(BigInt::from).collect();
            let y = w.left_apply(&xi);
            let start = if keep_first { 0 } else { 1 };
            let pt = y[start..]
                .iter()
                .map(|v| i64::try_from(v).expect("coordinate fits in i64"))
                .collect();
            (pt, c)
        })
        .collect();
    Ok(SwPolynomial::new(moduli, SwScale::Full, terms))
}

pub fn coefficient_sum(s: &SwPolynomial) -> BigInt {
    s.support.values().sum()
}

/// The coefficient sum of SW_N equals that of Δ_N, which vanishes for b₁ > 3.
pub fn coefficient_sum_vanishes(b1: usize) -> bool {
    b1 > 3
}

/// Necessary condition for `K = 0`: the coefficients of SW_N sum to ±1,
/// which is impossible when `b₁ > 3`.
pub fn kzero_admissible(s: &SwPolynomial, h: &H1Data) -> bool {
    !coefficient_sum_vanishes(h.free_rank()) && coefficient_sum(s).abs().is_one()
}

/// SW polynomial of the circle bundle over the splice `T³_K`, from
/// `Δ_{T³_K}(x, y, z) = Δ_K(z)`.
pub fn splice_sw(delta_k: &LaurentPoly, e: &EulerClass) -> Result<SwPolynomial> {
    if delta_k.nvars() != 1 {
        return Err(Error::NotUnivariate(delta_k.nvars()));
    }
    if e.free.len() != 3 {
        return Err(Error::Dimension {
            expected: 3,
            found: e.free.len(),
        });
    }
    if !is_symmetric(delta_k) {
        return Err(Error::Asymmetric);
    }
    let d = delta_k.embed(standard_vars(3), &[2]);
    let s = from_poly(&d)?;
    baldridge_pushforward(&s, e)
}
