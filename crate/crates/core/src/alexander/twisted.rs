//! Twisted Alexander polynomials for a finite quotient `α` and a class `φ`.
//!
//! With `Φ(w) = t^{φ(w)} P(α(w))`, `P` the right regular representation, the
//! expanded Fox matrix `A` presents H₁(N, pt; ℤ[G][t^{±1}]). For a column block
//! `j` with `det Φ(x_j − 1) ≠ 0` the exact sequences of the pair give
//!
//! ```text
//! ord H₁(N; ℤ[G][t^{±1}]) = δ_j · δ₀ / det Φ(x_j − 1)
//! ```
//!
//! where `δ_j` is the gcd of maximal minors of `A` with block `j` removed and
//! `δ₀` the gcd of the `|G|`-minors of the stacked blocks `Φ(x_i − 1)`, i.e. the
//! order of H₀.

use smallvec::smallvec;

use super::fox::fox_derivative;
use super::fox_ok;
use crate::covers::FiniteHom;
use crate::error::{Error, Result};
use crate::exactalg::{minor_gcd, vars, LaurentPoly, PolyMatrix, Vars};
use crate::homology::{h1, CohClass1};
use crate::presentations::{Presentation, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwistedAlexander {
    Polynomial(LaurentPoly),
    /// The quotient was not exact; the raw values are reported.
    Indeterminate {
        delta_j: LaurentPoly,
        delta_0: LaurentPoly,
        det_block: LaurentPoly,
    },
}

impl TwistedAlexander {
    pub fn polynomial(&self) -> Option<&LaurentPoly> {
        match self {
            TwistedAlexander::Polynomial(p) => Some(p),
            TwistedAlexander::Indeterminate { .. } => None,
        }
    }
}

struct Twist {
    t: Vars,
    phi_gen: Vec<i64>,
}

impl Twist {
    fn phi(&self, w: &Word) -> i64 {
        w.letters().iter().map(|&(g, e)| self.phi_gen[g] * e as i64).sum()
    }
}

fn setup(p: &Presentation, phi: &CohClass1) -> Result<Twist> {
    let h = h1(p);
    if phi.rank() != h.free_rank() {
        return Err(Error::Dimension {
            expected: h.free_rank(),
            found: phi.rank(),
        });
    }
    if phi.is_zero() {
        // φ restricted to a finite-index subgroup vanishes only when φ does
        return Err(Error::VanishesOnKernel);
    }
    let phi_gen = h.generator_images().iter().map(|g| phi.pair(g)).collect();
    Ok(Twist {
        t: vars(&["t"]),
        phi_gen,
    })
}

fn add_block_term(
    m: &mut PolyMatrix,
    a: &FiniteHom,
    (r0, c0): (usize, usize),
    g: usize,
    c: i64,
    k: i64,
    t: &Vars,
) {
    let grp = &a.target;
    let term = LaurentPoly::monomial(t.clone(), smallvec![k as i32], c);
    for h in 0..grp.order() {
        let col = grp.mul(h, g);
        let e = &mut m[(r0 + h, c0 + col)];
        *e = &*e + &term;
    }
}

/// `(m|G|) × (n|G|)` matrix with blocks `Φ(∂r_i/∂x_j)`.
pub fn expanded_fox_matrix(p: &Presentation, a: &FiniteHom, phi: &CohClass1) -> Result<PolyMatrix> {
    fox_ok(p)?;
    a.validate(p)?;
    let tw = setup(p, phi)?;
    Ok(build_expanded(p, a, &tw))
}

fn build_expanded(p: &Presentation, a: &FiniteHom, tw: &Twist) -> PolyMatrix {
    let s = a.order();
    let (m, n) = (p.nrels(), p.ngens());
    let mut mat = PolyMatrix::zeros(tw.t.clone(), m * s, n * s);
    for (i, r) in p.relators().iter().enumerate() {
        for j in 0..n {
            for (w, &c) in fox_derivative(r, j).terms() {
                add_block_term(&mut mat, a, (i * s, j * s), a.eval(w), c, tw.phi(w), &tw.t);
            }
        }
    }
    mat
}

/// `Φ(x_j − 1)` for each generator.
fn generator_blocks(p: &Presentation, a: &FiniteHom, tw: &Twist) -> Vec<PolyMatrix> {
    let s = a.order();
    (0..p.ngens())
        .map(|j| {
            let mut b = PolyMatrix::zeros(tw.t.clone(), s, s);
            add_block_term(&mut b, a, (0, 0), a.images[j], 1, tw.phi_gen[j], &tw.t);
            add_block_term(&mut b, a, (0, 0), a.target.identity(), -1, 0, &tw.t);
            b
        })
        .collect()
}

/// Generators whose block `Φ(x_j − 1)` is nonsingular.
pub fn admissible_blocks(p: &Presentation, a: &FiniteHom, phi: &CohClass1) -> Result<Vec<usize>> {
    let tw = setup(p, phi)?;
    Ok(generator_blocks(p, a, &tw)
        .iter()
        .enumerate()
        .filter(|(_, b)| !b.determinant().is_zero())
        .map(|(j, _)| j)
        .collect())
}

/// Twisted polynomial computed with the first admissible column block.
pub fn twisted_alexander(p: &Presentation, a: &FiniteHom, phi: &CohClass1) -> Result<TwistedAlexander> {
    fox_ok(p)?;
    a.validate(p)?;
    let tw = setup(p, phi)?;
    let blocks = generator_blocks(p, a, &tw);
    let j = blocks
        .iter()
        .position(|b| !b.determinant().is_zero())
        .ok_or(Error::NoAdmissibleColumn)?;
    Ok(compute(p, a, &tw, &blocks, j))
}

/// Twisted polynomial computed with column block `j`; `None` if the block is singular.
pub fn twisted_alexander_at(
    p: &Presentation,
    a: &FiniteHom,
    phi: &CohClass1,
    j: usize,
) -> Result<Option<TwistedAlexander>> {
    fox_ok(p)?;
    a.validate(p)?;
    let tw = setup(p, phi)?;
    let blocks = generator_blocks(p, a, &tw);
    if j >= blocks.len() || blocks[j].determinant().is_zero() {
        return Ok(None);
    }
    Ok(Some(compute(p, a, &tw, &blocks, j)))
}

fn compute(p: &Presentation, a: &FiniteHom, tw: &Twist, blocks: &[PolyMatrix], j: usize) -> TwistedAlexander {
    let s = a.order();
    let n = p.ngens();
    let det_block = blocks[j].determinant();
    // δ₀ from the stacked generator blocks
    let stacked = PolyMatrix::from_fn(tw.t.clone(), n * s, s, |r, c| blocks[r / s][(r % s, c)].clone());
    let delta_0 = minor_gcd(&stacked, s);
    let mat = build_expanded(p, a, tw);
    let drop: Vec<usize> = (j * s..(j + 1) * s).collect();
    let reduced = mat.without_columns(&drop);
    let k = (n - 1) * s;
    let delta_j = if reduced.rows() < k {
        LaurentPoly::zero(tw.t.clone())
    } else {
        minor_gcd(&reduced, k)
    };
    match (&delta_j * &delta_0).div_exact(&det_block) {
        Some(q) => TwistedAlexander::Polynomial(q.unit_normalize()),
        None => TwistedAlexander::Indeterminate {
            delta_j,
            delta_0,
            det_block,
        },
    }
}
