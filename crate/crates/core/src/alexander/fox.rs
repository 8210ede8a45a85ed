//! Free differential calculus.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::presentations::{Presentation, Word};

/// Element of the integral group ring of the free group.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct GroupRingElt {
    terms: BTreeMap<Word, i64>,
}

impl GroupRingElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_word(w: Word) -> Self {
        let mut e = Self::zero();
        e.add_term(w, 1);
        e
    }

    pub fn one() -> Self {
        Self::from_word(Word::identity())
    }

    pub fn terms(&self) -> &BTreeMap<Word, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &GroupRingElt) -> GroupRingElt {
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &GroupRingElt) -> GroupRingElt {
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    /// Left multiplication by a group element.
    pub fn left_mul_word(&self, u: &Word) -> GroupRingElt {
        let mut out = GroupRingElt::zero();
        for (w, &c) in &self.terms {
            out.add_term(u.mul(w), c);
        }
        out
    }

    pub fn mul(&self, other: &GroupRingElt) -> GroupRingElt {
        let mut out = GroupRingElt::zero();
        for (u, &a) in &self.terms {
            for (v, &b) in &other.terms {
                out.add_term(u.mul(v), a * b);
            }
        }
        out
    }
}

impl fmt::Debug for GroupRingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("{c}*({w:?})")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `∂w/∂x_gen`, using `∂(uv) = ∂u + u ∂v`.
pub fn fox_derivative(w: &Word, gen: usize) -> GroupRingElt {
    let mut out = GroupRingElt::zero();
    let mut prefix = Word::identity();
    for &(g, e) in w.letters() {
        if g == gen {
            if e > 0 {
                for k in 0..e {
                    out.add_term(prefix.mul(&Word::letter(g, k)), 1);
                }
            } else {
                for k in 1..=(-e) {
                    out.add_term(prefix.mul(&Word::letter(g, -k)), -1);
                }
            }
        }
        prefix = prefix.mul(&Word::letter(g, e));
    }
    out
}

/// Check `Σ_j (∂r/∂x_j)(x_j − 1) = r − 1` for one word.
pub fn fundamental_formula_holds(w: &Word, ngens: usize) -> bool {
    let mut lhs = GroupRingElt::zero();
    for j in 0..ngens {
        let d = fox_derivative(w, j);
        let xj = GroupRingElt::from_word(Word::gen(j)).sub(&GroupRingElt::one());
        lhs = lhs.add(&d.mul(&xj));
    }
    let rhs = GroupRingElt::from_word(w.clone()).sub(&GroupRingElt::one());
    lhs == rhs
}

/// Fundamental formula for every relator of a presentation.
pub fn check_fundamental_formula(p: &Presentation) -> bool {
    p.relators().iter().all(|r| fundamental_formula_holds(r, p.ngens()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_examples() {
        let x = Word::gen(0);
        let y = Word::gen(1);
        assert_eq!(fox_derivative(&x.mul(&y), 0), GroupRingElt::one());
        let c = Word::commutator(&x, &y);
        let mut want = GroupRingElt::one();
        want.add_term(Word::from_letters([(0, 1), (1, 1), (0, -1)]), -1);
        assert_eq!(fox_derivative(&c, 0), want);
        let mut cube = GroupRingElt::one();
        cube.add_term(x.clone(), 1);
        cube.add_term(x.pow(2), 1);
        assert_eq!(fox_derivative(&x.pow(3), 0), cube);
        let mut inv = GroupRingElt::zero();
        inv.add_term(x.inverse(), -1);
        assert_eq!(fox_derivative(&x.inverse(), 0), inv);
    }

    #[test]
    fn fundamental_formula() {
        let w = Word::from_letters([(0, 2), (1, -3), (2, 1), (0, -1), (1, 2)]);
        assert!(fundamental_formula_holds(&w, 3));
        assert!(fundamental_formula_holds(&Word::identity(), 2));
    }
}
