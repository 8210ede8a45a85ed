//! Alexander polynomials from Fox calculus: multivariable, one-variable and
//! twisted by a finite quotient.

mod fox;
mod twisted;

use smallvec::smallvec;

use crate::error::{Error, Result};
use crate::exactalg::{minor_gcd, standard_vars, vars, Exponent, LaurentPoly, PolyMatrix};
use crate::homology::{divisibility, h1, CohClass1, H1Data};
use crate::presentations::Presentation;

pub use fox::{check_fundamental_formula, fox_derivative, fundamental_formula_holds, GroupRingElt};
pub use twisted::{
    admissible_blocks, expanded_fox_matrix, twisted_alexander, twisted_alexander_at,
    TwistedAlexander,
};

pub(crate) fn fox_ok(p: &Presentation) -> Result<()> {
    if check_fundamental_formula(p) {
        Ok(())
    } else {
        Err(Error::InvalidPresentation("Fox fundamental formula fails".into()))
    }
}

/// Fox Jacobian pushed to `ℤ[H]`, `H` the free part of H₁, in the variables
/// of [`standard_vars`].
pub fn abelian_fox_matrix(p: &Presentation, h: &H1Data) -> Result<PolyMatrix> {
    fox_ok(p)?;
    let v = standard_vars(h.free_rank());
    let (m, n) = (p.nrels(), p.ngens());
    let mut a = PolyMatrix::zeros(v.clone(), m, n);
    for (i, r) in p.relators().iter().enumerate() {
        for j in 0..n {
            let d = fox_derivative(r, j);
            let mut e = LaurentPoly::zero(v.clone());
            for (w, &c) in d.terms() {
                let ex: Exponent = h.word_free_coords(w).iter().map(|&x| x as i32).collect();
                e = &e + &LaurentPoly::monomial(v.clone(), ex, c);
            }
            a[(i, j)] = e;
        }
    }
    Ok(a)
}

/// Fox Jacobian pushed to `ℤ[t^{±1}]` along `φ`.
pub fn phi_fox_matrix(p: &Presentation, h: &H1Data, phi: &CohClass1) -> Result<PolyMatrix> {
    fox_ok(p)?;
    let v = vars(&["t"]);
    let (m, n) = (p.nrels(), p.ngens());
    let mut a = PolyMatrix::zeros(v.clone(), m, n);
    for (i, r) in p.relators().iter().enumerate() {
        for j in 0..n {
            let mut e = LaurentPoly::zero(v.clone());
            for (w, &c) in fox_derivative(r, j).terms() {
                let k = phi.eval_word(h, w) as i32;
                e = &e + &LaurentPoly::monomial(v.clone(), smallvec![k], c);
            }
            a[(i, j)] = e;
        }
    }
    Ok(a)
}

/// Gcd of the codimension-one minors of the abelianized Fox Jacobian.
pub fn alexander_multivariable(p: &Presentation) -> Result<LaurentPoly> {
    let h = h1(p);
    if h.free_rank() == 0 {
        return Err(Error::UnsupportedBetti {
            b1: 0,
            reason: "the multivariable polynomial needs b₁ ≥ 1".into(),
        });
    }
    let a = abelian_fox_matrix(p, &h)?;
    let n = p.ngens();
    if a.rows() < n - 1 {
        return Ok(LaurentPoly::zero(a.vars().clone()));
    }
    Ok(minor_gcd(&a, n - 1))
}

fn check_class(h: &H1Data, phi: &CohClass1) -> Result<()> {
    if phi.rank() != h.free_rank() {
        return Err(Error::Dimension {
            expected: h.free_rank(),
            found: phi.rank(),
        });
    }
    if phi.is_zero() {
        return Err(Error::ZeroClass);
    }
    Ok(())
}

/// `(t^{div φ} − 1)² · Δ_N(t^φ)`, for `b₁ ≥ 2`.
pub fn alexander_one_variable(p: &Presentation, phi: &CohClass1) -> Result<LaurentPoly> {
    let h = h1(p);
    check_class(&h, phi)?;
    if h.free_rank() < 2 {
        return Err(Error::UnsupportedBetti {
            b1: h.free_rank(),
            reason: "for b₁ = 1 torsion and order conventions differ; use the direct Fox computation"
                .into(),
        });
    }
    let delta = alexander_multivariable(p)?;
    Ok(specialize_with_divisibility(&delta, phi))
}

/// `(t^{div φ} − 1)² · Δ(t^φ)` for a multivariable `Δ`.
pub fn specialize_with_divisibility(delta: &LaurentPoly, phi: &CohClass1) -> LaurentPoly {
    let t = vars(&["t"]);
    let images: Vec<Exponent> = phi.values.iter().map(|&k| smallvec![k as i32]).collect();
    let sub = delta.substitute_monomials(t.clone(), &images);
    let d = divisibility(phi) as i32;
    let f = &LaurentPoly::monomial(t.clone(), smallvec![d], 1) - &LaurentPoly::one(t);
    (&(&f * &f) * &sub).unit_normalize()
}

/// Order of H₁(N; ℤ[t^{±1}]) straight from the φ-specialized Fox matrix
/// (gcd of its codimension-one minors). Valid for every `b₁ ≥ 1`.
pub fn alexander_one_variable_fox(p: &Presentation, phi: &CohClass1) -> Result<LaurentPoly> {
    let h = h1(p);
    check_class(&h, phi)?;
    let a = phi_fox_matrix(p, &h, phi)?;
    let n = p.ngens();
    if a.rows() < n - 1 {
        return Ok(LaurentPoly::zero(a.vars().clone()));
    }
    Ok(minor_gcd(&a, n - 1))
}

/// `Δ(t) ≐ Δ(t⁻¹)` up to units.
pub fn is_symmetric(p: &LaurentPoly) -> bool {
    p.associated(&p.invert_variables())
}
