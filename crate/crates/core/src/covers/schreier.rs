//! Reidemeister–Schreier presentations of kernels of finite quotients.

use super::hom::FiniteHom;
use crate::error::{Error, Result};
use crate::homology::{divisibility, h1, CohClass1, H1Data};
use crate::presentations::{Presentation, Word};

/// Presentation of `ker α` with the data tying it back to the base group.
#[derive(Clone, Debug)]
pub struct CoverPresentation {
    pub presentation: Presentation,
    /// Coset representatives, indexed by group element.
    pub transversal: Vec<Word>,
    /// `(coset, generator)` of each cover generator.
    pub labels: Vec<(usize, usize)>,
    /// Each cover generator `rep(g) x_j rep(g α(x_j))⁻¹` as a base word.
    pub words: Vec<Word>,
}

/// Schreier transversal by breadth-first search from the identity, trying
/// `x_0, x_0⁻¹, x_1, …` in order.
pub fn schreier_transversal(p: &Presentation, a: &FiniteHom) -> Vec<Word> {
    let g = &a.target;
    let mut rep: Vec<Option<Word>> = vec![None; g.order()];
    rep[g.identity()] = Some(Word::identity());
    let mut queue = vec![g.identity()];
    let mut i = 0;
    while i < queue.len() {
        let c = queue[i];
        for j in 0..p.ngens() {
            for e in [1, -1] {
                let d = g.mul(c, g.pow(a.images[j], e));
                if rep[d].is_none() {
                    let w = rep[c].as_ref().expect("visited").mul(&Word::letter(j, e as i32));
                    rep[d] = Some(w);
                    queue.push(d);
                }
            }
        }
        i += 1;
    }
    rep.into_iter().map(|w| w.expect("surjective hom reaches every coset")).collect()
}

pub fn reidemeister_schreier(p: &Presentation, a: &FiniteHom) -> Result<CoverPresentation> {
    a.validate(p)?;
    let g = &a.target;
    let n = p.ngens();
    let reps = schreier_transversal(p, a);
    // index of s_{c,j}, or None when it collapses on the tree
    let mut index: Vec<Option<usize>> = vec![None; g.order() * n];
    let mut labels = Vec::new();
    let mut words = Vec::new();
    let mut names = Vec::new();
    for c in 0..g.order() {
        for j in 0..n {
            let d = g.mul(c, a.images[j]);
            let w = reps[c].mul(&Word::gen(j)).mul(&reps[d].inverse());
            if !w.is_identity() {
                index[c * n + j] = Some(labels.len());
                names.push(format!("s_{}", labels.len() + 1));
                labels.push((c, j));
                words.push(w);
            }
        }
    }
    let mut relators = Vec::with_capacity(g.order() * p.nrels());
    for c0 in 0..g.order() {
        for r in p.relators() {
            let mut c = c0;
            let mut letters = Vec::new();
            for &(j, e) in r.letters() {
                for _ in 0..e.unsigned_abs() {
                    if e > 0 {
                        if let Some(k) = index[c * n + j] {
                            letters.push((k, 1));
                        }
                        c = g.mul(c, a.images[j]);
                    } else {
                        c = g.mul(c, g.inv(a.images[j]));
                        if let Some(k) = index[c * n + j] {
                            letters.push((k, -1));
                        }
                    }
                }
            }
            debug_assert_eq!(c, c0, "relator lifts to a closed loop");
            relators.push(Word::from_letters(letters));
        }
    }
    let presentation = Presentation::new(names, relators)?;
    Ok(CoverPresentation {
        presentation,
        transversal: reps,
        labels,
        words,
    })
}

/// Restriction of `φ` to `ker α`.
#[derive(Clone, Debug)]
pub struct InducedClass {
    /// Class on the cover in its own H₁ coordinates.
    pub class: CohClass1,
    /// Values on the cover generators.
    pub generator_values: Vec<i64>,
    pub divisibility: u64,
    pub cover_h1: H1Data,
}

pub fn induced_class(
    p: &Presentation,
    cover: &CoverPresentation,
    phi: &CohClass1,
) -> Result<InducedClass> {
    let base = h1(p);
    if phi.rank() != base.free_rank() {
        return Err(Error::Dimension {
            expected: base.free_rank(),
            found: phi.rank(),
        });
    }
    let values: Vec<i64> = cover.words.iter().map(|w| phi.eval_word(&base, w)).collect();
    let cover_h1 = h1(&cover.presentation);
    let class = cover_h1.class_from_generator_values(&values)?;
    let d = divisibility(&class);
    if d == 0 {
        return Err(Error::VanishesOnKernel);
    }
    Ok(InducedClass {
        class,
        generator_values: values,
        divisibility: d,
        cover_h1,
    })
}
