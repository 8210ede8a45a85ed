//! Writing a real class with positive pairing as a non-negative combination of
//! integral classes with positive pairing.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A real coordinate: exact, or known to lie in a closed rational interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealCoord {
    Exact(BigRational),
    Interval { lo: BigRational, hi: BigRational },
}

impl RealCoord {
    pub fn exact(n: i64, d: i64) -> Self {
        RealCoord::Exact(BigRational::new(n.into(), d.into()))
    }

    pub fn lo(&self) -> &BigRational {
        match self {
            RealCoord::Exact(x) => x,
            RealCoord::Interval { lo, .. } => lo,
        }
    }

    pub fn hi(&self) -> &BigRational {
        match self {
            RealCoord::Exact(x) => x,
            RealCoord::Interval { hi, .. } => hi,
        }
    }

    pub fn mid(&self) -> BigRational {
        (self.lo() + self.hi()) / BigRational::from_integer(2.into())
    }

    pub fn width(&self) -> BigRational {
        self.hi() - self.lo()
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, RealCoord::Exact(_)) || self.lo() == self.hi()
    }

    fn scale_add(terms: &[(BigInt, &RealCoord)]) -> RealCoord {
        let mut lo = BigRational::zero();
        let mut hi = BigRational::zero();
        let mut exact = true;
        for (c, x) in terms {
            let c = BigRational::from_integer(c.clone());
            if c.is_negative() {
                lo += &c * x.hi();
                hi += &c * x.lo();
            } else {
                lo += &c * x.lo();
                hi += &c * x.hi();
            }
            exact &= x.is_exact() || c.is_zero();
        }
        if exact {
            RealCoord::Exact(lo)
        } else {
            RealCoord::Interval { lo, hi }
        }
    }
}

/// A class in H²(N; ℝ) in lattice coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealClass2 {
    pub coords: Vec<RealCoord>,
}

impl RealClass2 {
    pub fn rational(v: Vec<BigRational>) -> Self {
        RealClass2 {
            coords: v.into_iter().map(RealCoord::Exact).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

/// One summand `coefficient · class`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveTerm {
    pub coefficient: BigRational,
    pub class: Vec<BigInt>,
}

/// Integral basis (as rows) with every element pairing positively with `a`.
/// The basis is unimodular: `e_j = sign(a_j) u_j` for the first `j` with
/// `a_j ≠ 0`, and `e_k = u_k + c_k e_j` otherwise.
pub fn positive_basis(a: &[BigInt]) -> Result<(usize, Vec<Vec<BigInt>>)> {
    let n = a.len();
    let Some(j) = a.iter().position(|x| !x.is_zero()) else {
        return Err(Error::NotPositive("pairing vector is zero".into()));
    };
    let aj = a[j].abs();
    let s = a[j].signum();
    let mut basis = Vec::with_capacity(n);
    for k in 0..n {
        let mut v = vec![BigInt::zero(); n];
        if k == j {
            v[j] = s.clone();
        } else {
            // smallest c ≥ 0 with a_k + c |a_j| > 0
            let c = if a[k].is_positive() {
                BigInt::zero()
            } else {
                (-&a[k]).div_floor(&aj) + 1
            };
            v[k] = BigInt::one();
            v[j] = &c * &s;
        }
        basis.push(v);
    }
    Ok((j, basis))
}

fn dot(u: &[BigInt], v: &[BigInt]) -> BigInt {
    u.iter().zip(v).map(|(x, y)| x * y).sum()
}

/// Decompose `h` with `h · a > 0` as `Σ aᵢ hᵢ` with `aᵢ ≥ 0` and integral
/// `hᵢ · a > 0`. Exact for rational input; for interval coordinates the
/// coefficients are rational approximants and the sum reproduces the interval
/// midpoints to within the interval widths.
pub fn decompose_positive(h: &RealClass2, a: &[BigInt]) -> Result<Vec<PositiveTerm>> {
    let n = h.len();
    if a.len() != n {
        return Err(Error::Dimension {
            expected: n,
            found: a.len(),
        });
    }
    let (j, basis) = positive_basis(a)?;
    let pairings: Vec<BigInt> = basis.iter().map(|e| dot(e, a)).collect();
    // coordinates in the positive basis: g'_k = g_k (k ≠ j),
    // g'_j = s g_j − Σ_{k≠j} c_k g_k  with  e_k = u_k + c_k s u_j
    let s = a[j].signum();
    let mut g: Vec<RealCoord> = h.coords.clone();
    let mut terms: Vec<(BigInt, &RealCoord)> = vec![(s.clone(), &h.coords[j])];
    for k in 0..n {
        if k != j {
            let ck = &basis[k][j] * &s;
            terms.push((-ck, &h.coords[k]));
        }
    }
    g[j] = RealCoord::scale_add(&terms);
    let lower = |g: &[RealCoord]| -> BigRational {
        g.iter()
            .zip(&pairings)
            .map(|(x, p)| x.lo() * BigRational::from_integer(p.clone()))
            .sum()
    };
    if !lower(&g).is_positive() {
        return Err(Error::NotPositive(
            "class does not pair positively (or interval too wide to certify)".into(),
        ));
    }
    let mut out = Vec::new();
    for k in 0..n {
        if g[k].is_exact() {
            continue;
        }
        let lo = g[k].lo().clone();
        let mid = g[k].mid();
        let mut placed = false;
        for i in 0..256u32 {
            let delta = BigRational::new(BigInt::one(), BigInt::one() << i);
            let q = &lo - &delta;
            let mut trial = g.clone();
            trial[k] = RealCoord::Exact(q.clone());
            if lower(&trial).is_positive() {
                out.push(PositiveTerm {
                    coefficient: &mid - &q,
                    class: basis[k].clone(),
                });
                g = trial;
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(Error::NotPositive("could not certify a rational perturbation".into()));
        }
    }
    // g is now rational in the positive basis; back to lattice coordinates
    let mut v = vec![BigRational::zero(); n];
    for (k, e) in basis.iter().enumerate() {
        let gk = g[k].lo();
        for (vi, ei) in v.iter_mut().zip(e) {
            *vi += gk * BigRational::from_integer(ei.clone());
        }
    }
    let den = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let class: Vec<BigInt> = v
        .iter()
        .map(|x| (x * BigRational::from_integer(den.clone())).to_integer())
        .collect();
    out.insert(
        0,
        PositiveTerm {
            coefficient: BigRational::new(BigInt::one(), den),
            class,
        },
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn integral_input() {
        let h = RealClass2 {
            coords: vec![RealCoord::exact(1, 1), RealCoord::exact(1, 1)],
        };
        let d = decompose_positive(&h, &ints(&[1, 1])).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].coefficient, BigRational::one());
        assert_eq!(d[0].class, ints(&[1, 1]));
    }

    #[test]
    fn half_integral_input() {
        let h = RealClass2 {
            coords: vec![RealCoord::exact(1, 2), RealCoord::exact(3, 2)],
        };
        let d = decompose_positive(&h, &ints(&[1, 1])).unwrap();
        assert_eq!(d, vec![PositiveTerm { coefficient: BigRational::new(1.into(), 2.into()), class: ints(&[1, 3]) }]);
    }

    #[test]
    fn nonpositive_rejected() {
        let h = RealClass2 {
            coords: vec![RealCoord::exact(-1, 1), RealCoord::exact(0, 1)],
        };
        assert!(decompose_positive(&h, &ints(&[1, 1])).is_err());
    }
}
