//! Gcds in `ℤ[x₁^{±1}, …, x_k^{±1}]`.
//!
//! Recursive content/primitive-part splitting with a primitive pseudo-remainder
//! sequence in the main variable. Laurent shifts are units and are divided out
//! before any pseudo-division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::laurent::{Exponent, LaurentPoly};

/// Unit-normalized gcd of a list of polynomials; the gcd of only zeros is 0.
pub fn poly_gcd(ps: &[LaurentPoly]) -> LaurentPoly {
    assert!(!ps.is_empty(), "poly_gcd needs at least one input");
    let mut g = LaurentPoly::zero(ps[0].vars().clone());
    for p in ps {
        g = gcd2(&g, p);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Unit-normalized gcd of two polynomials.
pub fn gcd2(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return b.unit_normalize();
    }
    if b.is_zero() {
        return a.unit_normalize();
    }
    let a = a.shift_to_polynomial();
    let b = b.shift_to_polynomial();
    if a.is_constant() || b.is_constant() {
        return LaurentPoly::constant(a.vars().clone(), a.content().gcd(&b.content()));
    }
    // quick exits on divisibility
    if a.len() <= b.len() && b.div_exact(&a).is_some() {
        return a.unit_normalize();
    }
    if b.len() < a.len() && a.div_exact(&b).is_some() {
        return b.unit_normalize();
    }
    let n = a.nvars();
    let v = (0..n)
        .find(|&i| a.max_degree_in(i).unwrap_or(0) > 0 || b.max_degree_in(i).unwrap_or(0) > 0)
        .expect("non-constant polynomial has a variable");
    let da = a.max_degree_in(v).unwrap_or(0);
    let db = b.max_degree_in(v).unwrap_or(0);
    if da == 0 {
        return gcd2(&a, &content_in(&b, v));
    }
    if db == 0 {
        return gcd2(&content_in(&a, v), &b);
    }
    let ca = content_in(&a, v);
    let cb = content_in(&b, v);
    let c = gcd2(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let g = primitive_prs(pa, pb, v);
    (&c * &g).unit_normalize()
}

/// Gcd of the coefficients of `p` viewed as a polynomial in variable `v`.
pub(crate) fn content_in(p: &LaurentPoly, v: usize) -> LaurentPoly {
    let mut g = LaurentPoly::zero(p.vars().clone());
    for c in p.coefficients_in(v).values() {
        g = gcd2(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn degree_in(p: &LaurentPoly, v: usize) -> i32 {
    p.max_degree_in(v).unwrap_or(-1)
}

fn leading_coeff_in(p: &LaurentPoly, v: usize) -> LaurentPoly {
    p.coefficients_in(v)
        .into_iter()
        .next_back()
        .map(|(_, c)| c)
        .unwrap_or_else(|| LaurentPoly::zero(p.vars().clone()))
}

/// Pseudo-remainder of `a` by `b` in variable `v`; both must be polynomials
/// (non-negative exponents).
pub(crate) fn pseudo_remainder(a: &LaurentPoly, b: &LaurentPoly, v: usize) -> LaurentPoly {
    let db = degree_in(b, v);
    let lb = leading_coeff_in(b, v);
    let n = a.nvars();
    let mut r = a.clone();
    while !r.is_zero() && degree_in(&r, v) >= db {
        let dr = degree_in(&r, v);
        let lr = leading_coeff_in(&r, v);
        let mut sh: Exponent = std::iter::repeat_n(0, n).collect();
        sh[v] = dr - db;
        let t = &lr * &b.shift(&sh);
        r = &(&lb * &r) - &t;
        // strip integer content to keep coefficients small
        let c = r.content();
        if !c.is_zero() && !c.is_one() {
            r = r.div_scalar(&c);
        }
    }
    r
}

fn primitive_part_in(p: &LaurentPoly, v: usize) -> LaurentPoly {
    let c = content_in(p, v);
    p.div_exact(&c).expect("content divides")
}

fn primitive_prs(mut a: LaurentPoly, mut b: LaurentPoly, v: usize) -> LaurentPoly {
    if degree_in(&a, v) < degree_in(&b, v) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if a.div_exact(&b).is_some() {
            return b;
        }
        let r = pseudo_remainder(&a, &b, v);
        if r.is_zero() {
            return b;
        }
        if degree_in(&r, v) == 0 {
            return LaurentPoly::one(a.vars().clone());
        }
        a = b;
        b = primitive_part_in(&r.shift_to_polynomial(), v);
    }
}

/// Integer gcd helper on `BigInt` slices (non-negative result).
pub fn int_gcd(xs: &[BigInt]) -> BigInt {
    xs.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::laurent::vars;

    fn t(low: i32, c: &[i64]) -> LaurentPoly {
        LaurentPoly::univariate("t", low, c)
    }

    #[test]
    fn univariate_examples() {
        let g = poly_gcd(&[t(0, &[-1, 0, 1]), t(0, &[-1, 0, 0, 1])]);
        assert_eq!(g, t(0, &[-1, 1]).unit_normalize());
        let p = t(-2, &[3, 0, -6]);
        assert_eq!(poly_gcd(&[LaurentPoly::zero(p.vars().clone()), p.clone()]), p.unit_normalize());
        let z = LaurentPoly::zero(vars(&["t"]));
        assert!(poly_gcd(&[z.clone(), z]).is_zero());
    }

    #[test]
    fn content_primitive_split() {
        // {2x^2 y - 2, 4x - 4y} -> 2
        let v = vars(&["x", "y"]);
        let p = LaurentPoly::from_terms(
            v.clone(),
            [(smallvec::smallvec![2, 1], 2), (smallvec::smallvec![0, 0], -2)],
        );
        let q = LaurentPoly::from_terms(
            v.clone(),
            [(smallvec::smallvec![1, 0], 4), (smallvec::smallvec![0, 1], -4)],
        );
        assert_eq!(poly_gcd(&[p, q]), LaurentPoly::constant(v, 2));
    }

    #[test]
    fn multivariate_common_factor() {
        let v = vars(&["x", "y", "z"]);
        let x = LaurentPoly::var_pow(v.clone(), 0, 1);
        let y = LaurentPoly::var_pow(v.clone(), 1, 1);
        let z = LaurentPoly::var_pow(v.clone(), 2, 1);
        let one = LaurentPoly::one(v.clone());
        let f = &(&(&x * &y) - &z) + &one;
        let a = &f * &(&(&x - &one) * &(&x - &one));
        let b = &f * &(&(&y * &z) + &x);
        let g = gcd2(&a, &b);
        assert_eq!(g, f.unit_normalize());
        assert_eq!(gcd2(&a.shift(&[3, -2, 5]), &b.scale(&BigInt::from(-6))), f.unit_normalize());
    }
}
